//! Small base rings, maps and polynomials used as worked instances.

use num_bigint::BigInt;

use crate::base_ring::{BaseRing, RingElement, RingMap};
use crate::linalg::CoeffRing;
use crate::skew_poly::{SkewPoly, SkewPolyRing};
use crate::Error;

fn structure(rank: usize, products: &[(usize, usize, usize, i64)]) -> Vec<Vec<Vec<BigInt>>> {
    let mut s = vec![vec![vec![BigInt::from(0); rank]; rank]; rank];
    for &(i, j, k, c) in products {
        s[i][j][k] += c;
    }
    s
}

fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// Upper-triangular 2×2 matrices with basis `e11, e12, e22`.
pub fn upper_triangular(coeff: CoeffRing) -> BaseRing {
    let s = structure(3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)]);
    BaseRing::new(coeff, s, ints(&[1, 0, 1]))
        .and_then(|b| b.with_names(vec!["e11".into(), "e12".into(), "e22".into()]))
        .expect("upper triangular ring")
}

/// `[b1 b2; 0 b3] ↦ [0 b2; 0 0]`, a derivation of the upper-triangular ring.
pub fn offdiagonal_derivation(b: &BaseRing) -> RingMap {
    let images = [b.zero(), b.basis_element(1), b.zero()];
    RingMap::from_images(b, &images).expect("rank 3")
}

/// Conjugation `α ↦ PαP⁻¹` by `P = [1 c; 0 1]` on the upper-triangular ring.
pub fn upper_triangular_conjugation(b: &BaseRing, c: i64) -> RingMap {
    let images = [
        b.element(ints(&[1, -c, 0])).expect("rank 3"),
        b.basis_element(1),
        b.element(ints(&[0, c, 1])).expect("rank 3"),
    ];
    RingMap::from_images(b, &images).expect("rank 3")
}

/// `k × k` with orthogonal idempotent basis `f1, f2`.
pub fn diagonal_pair(coeff: CoeffRing) -> BaseRing {
    let s = structure(2, &[(0, 0, 0, 1), (1, 1, 1, 1)]);
    BaseRing::new(coeff, s, ints(&[1, 1]))
        .and_then(|b| b.with_names(vec!["f1".into(), "f2".into()]))
        .expect("diagonal pair")
}

/// The automorphism exchanging the two basis vectors of a rank-2 ring.
pub fn swap(b: &BaseRing) -> RingMap {
    RingMap::from_images(b, &[b.basis_element(1), b.basis_element(0)]).expect("rank 2")
}

/// The group algebra `k[C₂]` with basis `1, g`, `g² = 1`.
pub fn group_algebra_c2(coeff: CoeffRing) -> BaseRing {
    let s = structure(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)]);
    BaseRing::new(coeff, s, ints(&[1, 0]))
        .and_then(|b| b.with_names(vec!["1".into(), "g".into()]))
        .expect("group algebra")
}

/// The inner `ρ`-derivation `α ↦ αc − cρ(α)`.
pub fn inner_twisted_derivation(b: &BaseRing, rho: &RingMap, c: &RingElement) -> RingMap {
    let images: Vec<RingElement> = b
        .basis()
        .iter()
        .map(|e| b.sub(&b.mul_raw(e, c), &b.mul_raw(c, &rho.apply(e))))
        .collect();
    RingMap::from_images(b, &images).expect("same rank")
}

/// Upper-triangular ℤ, `ρ = id`, `D` the off-diagonal derivation, and
/// `f = X² + X·a + a` with `a = diag(3, 1)`.
pub fn upper_triangular_example(coeff: CoeffRing) -> Result<(SkewPolyRing, SkewPoly), Error> {
    let b = upper_triangular(coeff);
    let rho = RingMap::identity(&b);
    let d = offdiagonal_derivation(&b);
    let ring = SkewPolyRing::new(b, rho, d)?;
    let a = ring.base().element(ints(&[3, 0, 1]))?;
    let f = ring.poly(vec![a.clone(), a, ring.base().one()])?;
    Ok((ring, f))
}

/// `k[t]/(t^n)` with basis `1, t, …, t^{n-1}`.
pub fn truncated_polynomials(coeff: CoeffRing, n: usize) -> BaseRing {
    let products: Vec<(usize, usize, usize, i64)> =
        (0..n).flat_map(|i| (0..n - i).map(move |j| (i, j, i + j, 1))).collect();
    let s = structure(n, &products);
    let mut unit = vec![0; n];
    unit[0] = 1;
    let names = (0..n).map(|i| format!("t^{i}")).collect();
    BaseRing::new(coeff, s, ints(&unit))
        .and_then(|b| b.with_names(names))
        .expect("truncated polynomial ring")
}

/// `d/dt` on `k[t]/(t^n)`; a derivation when `n·t^{n-1} = 0`, e.g. `n` = characteristic.
pub fn formal_derivative(b: &BaseRing) -> RingMap {
    let images: Vec<RingElement> = (0..b.rank())
        .map(|i| {
            if i == 0 {
                b.zero()
            } else {
                b.scale(&b.basis_element(i - 1), &BigInt::from(i))
            }
        })
        .collect();
    RingMap::from_images(b, &images).expect("same rank")
}
