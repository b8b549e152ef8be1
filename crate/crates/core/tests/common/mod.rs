#![allow(dead_code)]

use std::sync::Arc;

use skewsep::catalog;
use skewsep::{BaseRing, CoeffRing, RingMap, SkewPoly, SkewPolyRing};

pub struct CorpusRing {
    pub name: String,
    pub ring: Arc<SkewPolyRing>,
}

fn entry(name: &str, b: BaseRing, rho: RingMap, d: RingMap) -> CorpusRing {
    let ring = SkewPolyRing::new(b, rho, d).unwrap_or_else(|e| panic!("{name}: {e}"));
    CorpusRing {
        name: name.to_string(),
        ring: Arc::new(ring),
    }
}

fn plain(name: &str, b: BaseRing) -> CorpusRing {
    let rho = RingMap::identity(&b);
    let d = RingMap::zero(&b);
    entry(name, b, rho, d)
}

/// The fixed finite corpus: scalar rings, `k × k`, and upper-triangular
/// matrices with the off-diagonal derivation, all with `ρ = id`.
pub fn core_corpus() -> Vec<CorpusRing> {
    let mut out = Vec::new();
    for n in [2, 3, 4] {
        out.push(plain(&format!("Z/{n}"), BaseRing::scalars(CoeffRing::modulo(n))));
    }
    out.push(plain("Z/2 x Z/2", catalog::diagonal_pair(CoeffRing::modulo(2))));
    for n in [2, 3] {
        let b = catalog::upper_triangular(CoeffRing::modulo(n));
        let rho = RingMap::identity(&b);
        let d = catalog::offdiagonal_derivation(&b);
        out.push(entry(&format!("UT2(Z/{n}), D off-diagonal"), b, rho, d));
    }
    out
}

/// Instances with a nontrivial automorphism.
pub fn twisted_corpus() -> Vec<CorpusRing> {
    let mut out = Vec::new();
    for n in [2, 3] {
        let b = catalog::diagonal_pair(CoeffRing::modulo(n));
        let rho = catalog::swap(&b);
        let zero = RingMap::zero(&b);
        out.push(entry(&format!("Z/{n} x Z/{n}, rho swap"), b.clone(), rho.clone(), zero));
        let c = b.basis_element(0);
        let d = catalog::inner_twisted_derivation(&b, &rho, &c);
        out.push(entry(&format!("Z/{n} x Z/{n}, rho swap, D inner"), b, rho, d));
    }
    let b = catalog::group_algebra_c2(CoeffRing::modulo(3));
    let rho = RingMap::from_images(&b, &[b.one(), b.neg(&b.basis_element(1))]).unwrap();
    let zero = RingMap::zero(&b);
    out.push(entry("Z/3[C2], rho g -> -g", b, rho, zero));
    let b = catalog::upper_triangular(CoeffRing::modulo(2));
    let rho = catalog::upper_triangular_conjugation(&b, 1);
    let zero = RingMap::zero(&b);
    out.push(entry("UT2(Z/2), rho conjugation", b, rho, zero));
    out
}

pub fn full_corpus() -> Vec<CorpusRing> {
    let mut out = core_corpus();
    out.extend(twisted_corpus());
    out
}

/// All `(ring, f)` with `deg f ∈ degrees` passing the `R(0)` criterion with `ρ`-fixed coefficients.
pub fn instances(corpus: &[CorpusRing], degrees: &[usize]) -> Vec<(String, Arc<SkewPolyRing>, SkewPoly)> {
    let mut out = Vec::new();
    for c in corpus {
        for &m in degrees {
            for f in skewsep::sweep::candidates(&c.ring, m).unwrap() {
                out.push((c.name.clone(), c.ring.clone(), f));
            }
        }
    }
    out
}

/// Further derivation-type rings: `k[t]/(t^p)` with `d/dt`, and upper-triangular
/// matrices over ℤ/4 and ℤ/5 (degree 2 only for ℤ/5).
pub fn derivation_corpus() -> Vec<CorpusRing> {
    let mut out = Vec::new();
    for p in [2, 3] {
        let b = catalog::truncated_polynomials(CoeffRing::modulo(p), p as usize);
        let rho = RingMap::identity(&b);
        let d = catalog::formal_derivative(&b);
        out.push(entry(&format!("Z/{p}[t]/(t^{p}), d/dt"), b, rho, d));
    }
    for n in [4, 5] {
        let b = catalog::upper_triangular(CoeffRing::modulo(n));
        let rho = RingMap::identity(&b);
        let d = catalog::offdiagonal_derivation(&b);
        out.push(entry(&format!("UT2(Z/{n}), D off-diagonal"), b, rho, d));
    }
    out
}

/// Instances over ℤ: `f = X² + X a_1 + a_0` over the upper-triangular ring with
/// the off-diagonal derivation, entries of `a_0, a_1` in `[-bound, bound]`.
pub fn integer_instances(bound: i64) -> Vec<(String, Arc<SkewPolyRing>, SkewPoly)> {
    let (ring, _) = catalog::upper_triangular_example(CoeffRing::integers()).unwrap();
    let ring = Arc::new(ring);
    let b = ring.base().clone();
    let range: Vec<i64> = (-bound..=bound).collect();
    let mut elems = Vec::new();
    for &x in &range {
        for &y in &range {
            for &z in &range {
                elems.push(b.element_i64(&[x, y, z]).unwrap());
            }
        }
    }
    let mut out = Vec::new();
    for a0 in &elems {
        for a1 in &elems {
            let f = ring.poly(vec![a0.clone(), a1.clone(), b.one()]).unwrap();
            if ring.is_r0_by_coefficients(&f).unwrap().in_r0 {
                out.push(("UT2(Z), D off-diagonal".to_string(), ring.clone(), f));
            }
        }
    }
    out
}

/// The paper-style instance over ℤ.
pub fn example() -> (Arc<SkewPolyRing>, SkewPoly) {
    let (ring, f) = catalog::upper_triangular_example(CoeffRing::integers()).unwrap();
    (Arc::new(ring), f)
}

/// Commutative `ℤ/n`, `ρ = id`, `D = 0`.
pub fn scalar_ring(n: u64) -> Arc<SkewPolyRing> {
    let b = BaseRing::scalars(CoeffRing::modulo(n));
    let rho = RingMap::identity(&b);
    let d = RingMap::zero(&b);
    Arc::new(SkewPolyRing::new(b, rho, d).unwrap())
}

/// `Σ X^i c_i` over a scalar ring, coefficients low to high.
pub fn scalar_poly(ring: &SkewPolyRing, coeffs: &[i64]) -> SkewPoly {
    let b = ring.base();
    ring.poly(coeffs.iter().map(|&c| b.element_i64(&[c]).unwrap()).collect())
        .unwrap()
}

pub mod classical {
    //! Plain univariate polynomials over ℤ/p, coefficients low to high.

    fn trim(mut a: Vec<i64>) -> Vec<i64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv(x: i64, p: i64) -> i64 {
        (1..p).find(|y| (x * y).rem_euclid(p) == 1).expect("p prime, x nonzero")
    }

    pub fn derivative(f: &[i64], p: i64) -> Vec<i64> {
        trim(
            f.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| (i as i64 * c).rem_euclid(p))
                .collect(),
        )
    }

    fn rem(a: &[i64], b: &[i64], p: i64) -> Vec<i64> {
        let mut a = trim(a.to_vec());
        let lead_inv = inv(*b.last().unwrap(), p);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let q = (a.last().unwrap() * lead_inv).rem_euclid(p);
            for (i, c) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] - q * c).rem_euclid(p);
            }
            a = trim(a);
        }
        a
    }

    pub fn gcd(a: &[i64], b: &[i64], p: i64) -> Vec<i64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// `gcd(f, f′)` is a nonzero constant.
    pub fn separable(f: &[i64], p: i64) -> bool {
        gcd(f, &derivative(f, p), p).len() == 1
    }
}
