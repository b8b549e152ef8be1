//! Exact linear algebra over ℤ and ℤ/n.
//!
//! Every problem over ℤ/n is lifted to ℤ with `n·e_i` adjoined, so a single
//! normal-form engine answers membership, intersection, kernel and image
//! questions for both coefficient rings. Results are canonical HNF bases,
//! which makes subgroup equality a direct comparison.

mod coeff;
mod hnf;
mod matrix;
mod snf;
mod submodule;

pub use coeff::CoeffRing;
pub use matrix::Matrix;
pub use snf::{inverse, snf, SmithForm};
pub use submodule::Submodule;

pub(crate) use submodule::unit_vector;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::Error;
use hnf::{hnf_integer, hnf_modular, to_big_rows, to_i128_rows};
use submodule::lower_block;

/// Canonical basis of the subgroup generated by `gens`.
pub fn hnf(gens: Vec<Vec<BigInt>>, dim: usize, coeff: CoeffRing) -> Result<Submodule, Error> {
    Submodule::from_generators(coeff, dim, gens)
}

/// Image of `x ↦ m·x` as a subgroup of the codomain.
pub fn image(m: &Matrix) -> Submodule {
    let cols = (0..m.cols()).map(|j| m.column(j)).collect();
    Submodule::from_generators_unchecked(m.coeff(), m.rows(), cols)
}

/// Kernel of `x ↦ m·x` as a subgroup of the domain.
///
/// The row space is normalized first (the kernel only depends on it), then
/// the kernel is read off the HNF of the columns augmented with the identity.
/// Over ℤ/n this yields `{x : m·x ≡ 0 (mod n)}`, congruence part included.
pub fn kernel(m: &Matrix) -> Submodule {
    let coeff = m.coeff();
    let c = m.cols();
    let rows = row_space_basis(m);
    let k = rows.len();
    let gens = (0..c)
        .map(|j| {
            let mut g: Vec<BigInt> = rows.iter().map(|r| r[j].clone()).collect();
            g.extend(unit_vector(c, j));
            g
        })
        .collect();
    let tail = lower_block(coeff, gens, k, c);
    Submodule::from_generators_unchecked(coeff, c, tail)
}

fn row_space_basis(m: &Matrix) -> Vec<Vec<BigInt>> {
    let coeff = m.coeff();
    let rows = m.row_vecs();
    if coeff.is_integers() {
        hnf_integer(rows, m.cols()).0
    } else {
        let n = coeff.modulus_big();
        let n128 = i128::from(coeff.modulus() as i64);
        let basis = hnf_modular(to_i128_rows(&rows, &n), m.cols(), n128);
        // rows equal to n·e_i impose nothing modulo n
        to_big_rows(basis)
            .into_iter()
            .filter(|r| r.iter().any(|x| !x.is_multiple_of(&n)))
            .collect()
    }
}

/// Solves `m·x = b` over the coefficient ring.
///
/// Returns one particular solution and the full solution kernel, or `None`
/// when the system has no solution. The particular solution comes from the
/// Smith form of `m` (over ℤ/n: of `[m | n·I]` over ℤ).
pub fn solve(m: &Matrix, b: &[BigInt]) -> Result<Option<(Vec<BigInt>, Submodule)>, Error> {
    if b.len() != m.rows() {
        return Err(Error::Dimension(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            m.rows()
        )));
    }
    let coeff = m.coeff();
    let lifted = if coeff.is_integers() {
        m.clone()
    } else {
        let mut l = Matrix::zero(CoeffRing::integers(), m.rows(), m.cols() + m.rows());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                l.set(i, j, m.get(i, j).clone());
            }
            l.set(i, m.cols() + i, coeff.modulus_big());
        }
        l
    };
    let Some(x) = solve_integer(&lifted, b) else {
        return Ok(None);
    };
    let particular = coeff.reduce_vec(x[..m.cols()].to_vec());
    Ok(Some((particular, kernel(m))))
}

fn solve_integer(m: &Matrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let s = snf(m);
    let c = s.u.mul_vec_unchecked(b);
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, ci) in c.iter().enumerate() {
        let d = s.diag.get(i).cloned().unwrap_or_default();
        if d.is_zero() {
            if !ci.is_zero() {
                return None;
            }
        } else {
            let (q, r) = ci.div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(s.vt.mul_vec_unchecked(&y))
}

/// `{v ∈ s : m·v = 0}`, computed by parametrizing `s` through its generators.
pub fn restricted_kernel(s: &Submodule, m: &Matrix) -> Result<Submodule, Error> {
    if m.cols() != s.ambient_dim() {
        return Err(Error::Dimension(format!(
            "map on {} coordinates restricted to {}",
            m.cols(),
            s.ambient_dim()
        )));
    }
    let gens = s.generators();
    if gens.is_empty() {
        return Ok(s.clone());
    }
    let images: Vec<Vec<BigInt>> = gens.iter().map(|g| m.mul_vec_unchecked(g)).collect();
    let param = Matrix::from_columns(m.coeff(), m.rows(), &images)?;
    let coeffs = kernel(&param);
    let vectors = coeffs.basis().iter().map(|c| combine(m.coeff(), &gens, c)).collect();
    Submodule::from_generators(m.coeff(), s.ambient_dim(), vectors)
}

/// `m(s)` for a map `m` and a subgroup `s` of its domain.
pub fn restricted_image(s: &Submodule, m: &Matrix) -> Result<Submodule, Error> {
    if m.cols() != s.ambient_dim() {
        return Err(Error::Dimension(format!(
            "map on {} coordinates applied to {}",
            m.cols(),
            s.ambient_dim()
        )));
    }
    let images = s.generators().iter().map(|g| m.mul_vec_unchecked(g)).collect();
    Submodule::from_generators(m.coeff(), m.rows(), images)
}

/// `Σ c_i · gens[i]`, reduced.
pub(crate) fn combine(coeff: CoeffRing, gens: &[Vec<BigInt>], c: &[BigInt]) -> Vec<BigInt> {
    let dim = gens.first().map_or(0, Vec::len);
    let mut out = vec![BigInt::zero(); dim];
    for (g, ci) in gens.iter().zip(c) {
        if ci.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(g) {
            *o += ci * x;
        }
    }
    coeff.reduce_vec(out)
}
