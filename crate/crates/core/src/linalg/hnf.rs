//! Row-style Hermite normal form engines.
//!
//! Two kernels share one canonical output format: echelonized rows with
//! positive pivots and every entry above a pivot reduced into `[0, pivot)`.
//!
//! * [`hnf_integer`] works over ℤ with arbitrary precision.
//! * [`hnf_modular`] works on lattices that contain `nℤ^N`. Such a lattice
//!   always has full rank, every column carries a pivot dividing `n`, and all
//!   row operations may be carried out with entries reduced modulo `n`
//!   (reduction only subtracts multiples of the adjoined `n·e_i`). Entries are
//!   bounded by `n < 2^63`, so `i128` arithmetic is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// HNF over ℤ. Returns the nonzero basis rows and their pivot columns.
pub(crate) fn hnf_integer(gens: Vec<Vec<BigInt>>, dim: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut work: Vec<Vec<BigInt>> = gens.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    let mut pivots = Vec::new();

    for c in 0..dim {
        loop {
            // smallest |entry| in column c wins the pivot slot
            let Some(p) = work
                .iter()
                .enumerate()
                .filter(|(_, r)| !r[c].is_zero())
                .min_by(|(_, a), (_, b)| a[c].abs().cmp(&b[c].abs()))
                .map(|(i, _)| i)
            else {
                break;
            };
            let pivot = work.swap_remove(p);
            let mut clean = true;
            for row in work.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&pivot[c]);
                for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                    if !y.is_zero() {
                        *x -= &q * y;
                    }
                }
                if !row[c].is_zero() {
                    clean = false;
                }
            }
            work.retain(|r| r.iter().any(|x| !x.is_zero()));
            if clean {
                let pivot = if pivot[c].is_negative() {
                    pivot.into_iter().map(|x| -x).collect()
                } else {
                    pivot
                };
                basis.push(pivot);
                pivots.push(c);
                break;
            }
            work.push(pivot);
        }
    }

    reduce_above_integer(&mut basis, &pivots);
    (basis, pivots)
}

fn reduce_above_integer(basis: &mut [Vec<BigInt>], pivots: &[usize]) {
    for j in 0..basis.len() {
        let c = pivots[j];
        let (upper, lower) = basis.split_at_mut(j);
        let pivot_row = &lower[0];
        for row in upper.iter_mut() {
            let q = row[c].div_floor(&pivot_row[c]);
            if q.is_zero() {
                continue;
            }
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !y.is_zero() {
                    *x -= &q * y;
                }
            }
        }
    }
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// HNF of the lattice generated by `gens` together with `n·e_i` for every `i`.
///
/// The result always has exactly `dim` rows; row `i` has its pivot in column `i`.
pub(crate) fn hnf_modular(gens: Vec<Vec<i128>>, dim: usize, n: i128) -> Vec<Vec<i128>> {
    let mut work: Vec<Vec<i128>> = gens
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.rem_euclid(n)).collect::<Vec<_>>())
        .filter(|r: &Vec<i128>| r.iter().any(|&x| x != 0))
        .collect();
    let mut basis: Vec<Vec<i128>> = Vec::with_capacity(dim);

    for c in 0..dim {
        let mut pivot = vec![0i128; dim];
        pivot[c] = n;
        for row in work.iter_mut() {
            let a = row[c];
            if a == 0 {
                continue;
            }
            let p = pivot[c];
            let (g, s, t) = egcd(p, a);
            let (ag, pg) = (a / g, p / g);
            for k in c + 1..dim {
                let (u, v) = (pivot[k], row[k]);
                if u == 0 && v == 0 {
                    continue;
                }
                pivot[k] = (s * u + t * v).rem_euclid(n);
                row[k] = (ag * u - pg * v).rem_euclid(n);
            }
            pivot[c] = g;
            row[c] = 0;
        }
        work.retain(|r| r.iter().any(|&x| x != 0));
        // (n/g)·pivot - n·e_c lies in the lattice and vanishes at column c
        let mult = n / pivot[c];
        if mult != 1 {
            let mut extra = vec![0i128; dim];
            for k in c + 1..dim {
                extra[k] = (mult * pivot[k]).rem_euclid(n);
            }
            if extra.iter().any(|&x| x != 0) {
                work.push(extra);
            }
        }
        basis.push(pivot);
    }

    for j in 0..dim {
        let (upper, lower) = basis.split_at_mut(j);
        let pivot_row = &lower[0];
        for row in upper.iter_mut() {
            let q = row[j].div_euclid(pivot_row[j]);
            if q == 0 {
                continue;
            }
            row[j] -= q * pivot_row[j];
            // later columns are reduced again when their own pivot is processed
            for k in j + 1..dim {
                row[k] = (row[k] - q * pivot_row[k]).rem_euclid(n);
            }
        }
    }
    basis
}

pub(crate) fn to_i128_rows(rows: &[Vec<BigInt>], n: &BigInt) -> Vec<Vec<i128>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| x.mod_floor(n).to_i128().expect("reduced entry fits i128"))
                .collect()
        })
        .collect()
}

pub(crate) fn to_big_rows(rows: Vec<Vec<i128>>) -> Vec<Vec<BigInt>> {
    rows.into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect()
}
