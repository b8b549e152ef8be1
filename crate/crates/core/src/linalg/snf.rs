use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{CoeffRing, Matrix};

/// Smith normal form of an integer matrix with its transforms.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Diagonal entries `d_0 | d_1 | ...`, `min(rows, cols)` of them.
    pub diag: Vec<BigInt>,
    /// Row transform: `u · m · vt` is diagonal.
    pub u: Matrix,
    /// Column transform.
    pub vt: Matrix,
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row.swap(i, j);
        }
    }

    /// row_i -= q·row_j
    fn row_axpy(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let src = m[j].clone();
            for (x, y) in m[i].iter_mut().zip(&src) {
                if !y.is_zero() {
                    *x -= q * y;
                }
            }
        }
    }

    /// col_i -= q·col_j
    fn col_axpy(&mut self, i: usize, j: usize, q: &BigInt) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            let y = row[j].clone();
            if !y.is_zero() {
                row[i] -= q * y;
            }
        }
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Smith normal form over ℤ of the integer lift of `m`.
///
/// For a matrix over ℤ/n the computation runs on the representatives and the
/// transforms are reduced afterwards; unimodular integer transforms stay
/// invertible modulo `n`.
pub fn snf(m: &Matrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.row_vecs(),
        u: identity(rows),
        v: identity(cols),
    };
    let steps = rows.min(cols);

    for t in 0..steps {
        let Some((pi, pj)) = min_entry(&w.a, t..rows, t..cols) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let p = w.a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if !w.a[i][t].is_zero() {
                    let q = w.a[i][t].div_floor(&p);
                    w.row_axpy(i, t, &q);
                    dirty |= !w.a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !w.a[t][j].is_zero() {
                    let q = w.a[t][j].div_floor(&p);
                    w.col_axpy(j, t, &q);
                    dirty |= !w.a[t][j].is_zero();
                }
            }
            if dirty {
                // a smaller remainder sits in row t or column t; promote it
                let (bi, bj) = smallest_in_cross(&w.a, t, rows, cols);
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            let p = w.a[t][t].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a[i][j].is_multiple_of(&p)));
            match offender {
                Some(i) => w.row_axpy(t, i, &BigInt::from(-1)),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            for m in [&mut w.a, &mut w.u] {
                for x in m[t].iter_mut() {
                    *x = -x.clone();
                }
            }
        }
    }

    let coeff = m.coeff();
    let diag = (0..steps).map(|i| coeff.reduce(w.a[i][i].clone())).collect();
    SmithForm {
        diag,
        u: Matrix::from_rows(coeff, &w.u).unwrap_or_else(|_| Matrix::zero(coeff, 0, 0)),
        vt: Matrix::from_rows(coeff, &w.v).unwrap_or_else(|_| Matrix::zero(coeff, 0, 0)),
    }
}

fn min_entry(a: &[Vec<BigInt>], rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(a: &[Vec<BigInt>], t: usize, rows: usize, cols: usize) -> (usize, usize) {
    let mut best = (t, t);
    for i in t..rows {
        if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
            best = (i, t);
        }
    }
    for j in t..cols {
        if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
            best = (t, j);
        }
    }
    best
}

/// Inverse of a square matrix over its coefficient ring, if it exists.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    if !m.is_square() {
        return None;
    }
    let coeff: CoeffRing = m.coeff();
    let s = snf(m);
    let n = m.rows();
    // m = u^-1 · d · vt^-1  =>  m^-1 = vt · d^-1 · u
    let mut dinv = Matrix::zero(coeff, n, n);
    for (i, d) in s.diag.iter().enumerate() {
        dinv.set(i, i, coeff.inverse(d)?);
    }
    s.vt.mul(&dinv).ok()?.mul(&s.u).ok()
}
