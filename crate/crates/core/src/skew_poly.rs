//! The skew polynomial ring `R = B[X; ρ, D]` with right coefficients.
//!
//! A polynomial `Σ X^i a_i` is stored as its coefficient list `a_0, …, a_d`.
//! Multiplication moves scalars to the right through
//! `αX^i = Σ_j X^j Φ_{[i,j]}(α)`, where the maps `Φ_{[i,j]}` satisfy
//! `Φ_{[0,0]} = 1`, `Φ_{[i,0]} = D^i`, `Φ_{[i,i]} = ρ^i` and
//! `Φ_{[i,j]} = ρΦ_{[i-1,j-1]} + DΦ_{[i-1,j]}` otherwise.

use std::fmt;
use std::sync::{Arc, RwLock};

use crate::base_ring::{BaseRing, FixMode, RingElement, RingMap, Violation};
use crate::Error;

/// `Σ X^i a_i`, trailing zero coefficients trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewPoly {
    coeffs: Vec<RingElement>,
}

impl SkewPoly {
    fn trimmed(mut coeffs: Vec<RingElement>) -> Self {
        while coeffs.last().is_some_and(RingElement::is_zero) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&RingElement> {
        self.coeffs.get(i)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&RingElement> {
        self.coeffs.last()
    }
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("X^{i}*{c:?}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Which identity of the `R(0)` criterion failed first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum R0Failure {
    /// `a_j ρ^m(α) = Σ_{i≥j} Φ_{[i,j]}(α) a_i` fails for `α = e_basis_index`.
    Condition1 { j: usize, basis_index: usize },
    /// The expression for `D(a_i)` fails.
    Condition2 { i: usize },
}

impl fmt::Display for R0Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            R0Failure::Condition1 { j, basis_index } => write!(
                f,
                "condition (1) fails at j = {j} for alpha = e{basis_index}: a_j rho^m(alpha) != sum_i Phi[i,j](alpha) a_i"
            ),
            R0Failure::Condition2 { i } => write!(f, "condition (2) fails for D(a_{i})"),
        }
    }
}

/// Outcome of the coefficient criterion for `f ∈ R(0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct R0Check {
    pub in_r0: bool,
    pub failure: Option<R0Failure>,
}

pub struct SkewPolyRing {
    base: BaseRing,
    rho: RingMap,
    deriv: RingMap,
    rho_inv: RingMap,
    /// row `i` holds `Φ_{[i,0]}, …, Φ_{[i,i]}`; rows are only ever appended
    phi_cache: RwLock<Vec<Vec<Arc<RingMap>>>>,
}

impl fmt::Debug for SkewPolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SkewPolyRing")
            .field("base", &self.base)
            .field("rho", &self.rho)
            .field("deriv", &self.deriv)
            .finish_non_exhaustive()
    }
}

impl SkewPolyRing {
    /// Validates `B`, `ρ` and `D` eagerly; every later operation relies on them.
    pub fn new(base: BaseRing, rho: RingMap, deriv: RingMap) -> Result<Self, Error> {
        if rho.dim() != base.rank() || deriv.dim() != base.rank() {
            return Err(Error::Dimension("maps must act on the base ring's coordinates".into()));
        }
        let mut violations: Vec<Violation> = base.validate();
        if violations.is_empty() {
            violations.extend(base.validate_automorphism(&rho));
        }
        if violations.is_empty() {
            violations.extend(base.validate_derivation(&deriv, &rho));
        }
        if !violations.is_empty() {
            return Err(Error::InvalidRing(violations));
        }
        let rho_inv = rho.inverse().expect("validated automorphism is invertible");
        let phi_cache = RwLock::new(vec![vec![Arc::new(RingMap::identity(&base))]]);
        Ok(SkewPolyRing {
            base,
            rho,
            deriv,
            rho_inv,
            phi_cache,
        })
    }

    pub fn base(&self) -> &BaseRing {
        &self.base
    }

    pub fn rho(&self) -> &RingMap {
        &self.rho
    }

    pub fn deriv(&self) -> &RingMap {
        &self.deriv
    }

    pub fn rho_inverse(&self) -> &RingMap {
        &self.rho_inv
    }

    /// Derivation type `B[X; D]`, i.e. `ρ = id`.
    pub fn is_derivation_type(&self) -> bool {
        self.rho.is_identity()
    }

    /// `ρ^k` for any integer `k`.
    pub fn rho_power(&self, k: i64) -> RingMap {
        if k >= 0 {
            self.rho.pow(k as u32)
        } else {
            self.rho_inv.pow(k.unsigned_abs() as u32)
        }
    }

    /// `Φ_{[i,j]}`, memoized.
    pub fn phi(&self, i: usize, j: usize) -> Result<Arc<RingMap>, Error> {
        if j > i {
            return Err(Error::Usage(format!("Phi[{i},{j}] needs j <= i")));
        }
        Ok(self.phi_row(i)[j].clone())
    }

    fn phi_row(&self, i: usize) -> Vec<Arc<RingMap>> {
        {
            let cache = self.phi_cache.read().expect("phi cache poisoned");
            if let Some(row) = cache.get(i) {
                return row.clone();
            }
        }
        let mut cache = self.phi_cache.write().expect("phi cache poisoned");
        while cache.len() <= i {
            let prev = cache.last().expect("row 0 present").clone();
            let k = cache.len();
            let row: Vec<Arc<RingMap>> = (0..=k)
                .map(|j| {
                    let from_rho = (j >= 1).then(|| self.rho.compose(&prev[j - 1]));
                    let from_d = (j < k).then(|| self.deriv.compose(&prev[j]));
                    let map = match (from_rho, from_d) {
                        (Some(a), Some(b)) => a.add(&b),
                        (Some(a), None) => a,
                        (None, Some(b)) => b,
                        (None, None) => unreachable!("k >= 1"),
                    };
                    Arc::new(map)
                })
                .collect();
            cache.push(row);
        }
        cache[i].clone()
    }

    fn check_element(&self, a: &RingElement) -> Result<(), Error> {
        if a.len() != self.base.rank() {
            return Err(Error::Usage(format!(
                "coefficient of length {} does not belong to a rank {} base ring",
                a.len(),
                self.base.rank()
            )));
        }
        Ok(())
    }

    fn check_poly(&self, f: &SkewPoly) -> Result<(), Error> {
        f.coeffs.iter().try_for_each(|c| self.check_element(c))
    }

    /// Builds `Σ X^i coeffs[i]`.
    pub fn poly(&self, coeffs: Vec<RingElement>) -> Result<SkewPoly, Error> {
        coeffs.iter().try_for_each(|c| self.check_element(c))?;
        Ok(SkewPoly::trimmed(
            coeffs
                .into_iter()
                .map(|c| self.base.element_unchecked(c.into_coords()))
                .collect(),
        ))
    }

    pub fn zero(&self) -> SkewPoly {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn constant(&self, a: RingElement) -> SkewPoly {
        SkewPoly::trimmed(vec![a])
    }

    pub fn one(&self) -> SkewPoly {
        self.constant(self.base.one())
    }

    /// `X^k`
    pub fn x_pow(&self, k: usize) -> SkewPoly {
        self.monomial(k, self.base.one())
    }

    /// `X^k c`
    pub fn monomial(&self, k: usize, c: RingElement) -> SkewPoly {
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.push(c);
        SkewPoly::trimmed(coeffs)
    }

    pub fn add(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        let n = f.coeffs.len().max(g.coeffs.len());
        let zero = self.base.zero();
        let coeffs = (0..n)
            .map(|i| {
                self.base
                    .add(f.coeffs.get(i).unwrap_or(&zero), g.coeffs.get(i).unwrap_or(&zero))
            })
            .collect();
        SkewPoly::trimmed(coeffs)
    }

    pub fn sub(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        self.add(f, &self.neg(g))
    }

    pub fn neg(&self, f: &SkewPoly) -> SkewPoly {
        SkewPoly {
            coeffs: f.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    /// `f·c` for `c ∈ B`; right coefficients make this coefficientwise.
    pub fn mul_scalar_right(&self, f: &SkewPoly, c: &RingElement) -> SkewPoly {
        SkewPoly::trimmed(f.coeffs.iter().map(|a| self.base.mul_raw(a, c)).collect())
    }

    /// `X^k f`, a shift.
    pub fn shift(&self, f: &SkewPoly, k: usize) -> SkewPoly {
        if f.is_zero() {
            return f.clone();
        }
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.extend(f.coeffs.iter().cloned());
        SkewPoly { coeffs }
    }

    /// `αX^i` in right-coefficient form: `Σ_j X^j Φ_{[i,j]}(α)`.
    pub fn scalar_power_expand(&self, alpha: &RingElement, i: usize) -> Result<SkewPoly, Error> {
        self.check_element(alpha)?;
        let row = self.phi_row(i);
        Ok(SkewPoly::trimmed(row.iter().map(|phi| phi.apply(alpha)).collect()))
    }

    /// `poly_mul`
    pub fn mul(&self, f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly, Error> {
        self.check_poly(f)?;
        self.check_poly(g)?;
        Ok(self.mul_raw(f, g))
    }

    pub(crate) fn mul_raw(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        if f.is_zero() || g.is_zero() {
            return self.zero();
        }
        let deg = f.coeffs.len() + g.coeffs.len() - 2;
        let mut out = vec![self.base.zero(); deg + 1];
        for (k, b) in g.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let row = self.phi_row(k);
            for (i, a) in f.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                // X^i a X^k b = Σ_j X^{i+j} Φ_{[k,j]}(a) b
                for (j, phi) in row.iter().enumerate() {
                    let moved = phi.apply(a);
                    if moved.is_zero() {
                        continue;
                    }
                    let term = self.base.mul_raw(&moved, b);
                    out[i + j] = self.base.add(&out[i + j], &term);
                }
            }
        }
        SkewPoly::trimmed(out)
    }

    fn check_monic(&self, f: &SkewPoly) -> Result<usize, Error> {
        self.check_poly(f)?;
        match (f.degree(), f.leading()) {
            (Some(m), Some(lead)) if m >= 1 && *lead == self.base.one() => Ok(m),
            _ => Err(Error::Usage("expected a monic polynomial of degree >= 1".into())),
        }
    }

    /// `divmod_monic`: `g = f·q + rem` with `deg rem < deg f`.
    pub fn divmod_monic(&self, g: &SkewPoly, f: &SkewPoly) -> Result<(SkewPoly, SkewPoly), Error> {
        let m = self.check_monic(f)?;
        self.check_poly(g)?;
        let mut rem = g.clone();
        let mut q = self.zero();
        while let Some(d) = rem.degree().filter(|&d| d >= m) {
            let term = self.monomial(d - m, rem.coeffs[d].clone());
            rem = self.sub(&rem, &self.mul_raw(f, &term));
            debug_assert!(rem.degree().is_none_or(|e| e < d));
            q = self.add(&q, &term);
        }
        Ok((q, rem))
    }

    /// Whether every coefficient of `f` is fixed by `ρ`.
    pub fn coefficients_fixed_by_rho(&self, f: &SkewPoly) -> bool {
        f.coeffs.iter().all(|a| self.rho.apply(a) == *a)
    }

    /// `is_r0_by_coefficients`: the coefficient criterion for `fR = Rf`, checked on a `k`-basis of `B`.
    pub fn is_r0_by_coefficients(&self, f: &SkewPoly) -> Result<R0Check, Error> {
        let m = self.check_monic(f)?;
        let b = &self.base;
        let a = &f.coeffs;
        let rho_m = self.rho.pow(m as u32);

        for j in 0..m {
            for (s, alpha) in b.basis().iter().enumerate() {
                let lhs = b.mul_raw(&a[j], &rho_m.apply(alpha));
                let mut rhs = b.zero();
                for i in j..=m {
                    let phi = self.phi_row(i)[j].clone();
                    rhs = b.add(&rhs, &b.mul_raw(&phi.apply(alpha), &a[i]));
                }
                if lhs != rhs {
                    let failure = R0Failure::Condition1 { j, basis_index: s };
                    return Ok(R0Check {
                        in_r0: false,
                        failure: Some(failure),
                    });
                }
            }
        }

        let top = &a[m - 1];
        let shift = b.sub(&self.rho.apply(top), top);
        for i in 0..m {
            let mut rhs = b.mul_raw(&a[i], &shift);
            if i >= 1 {
                rhs = b.add(&rhs, &b.sub(&a[i - 1], &self.rho.apply(&a[i - 1])));
            }
            if self.deriv.apply(&a[i]) != rhs {
                return Ok(R0Check {
                    in_r0: false,
                    failure: Some(R0Failure::Condition2 { i }),
                });
            }
        }
        Ok(R0Check {
            in_r0: true,
            failure: None,
        })
    }

    /// `is_r0_direct`: `αf = fρ^m(α)` on a basis and `Xf = f(X − (ρ(a_{m-1}) − a_{m-1}))`.
    pub fn is_r0_direct(&self, f: &SkewPoly) -> Result<bool, Error> {
        let m = self.check_monic(f)?;
        let b = &self.base;
        let rho_m = self.rho.pow(m as u32);
        for alpha in b.basis() {
            let lhs = self.mul_raw(&self.constant(alpha.clone()), f);
            let rhs = self.mul_raw(f, &self.constant(rho_m.apply(&alpha)));
            if lhs != rhs {
                return Ok(false);
            }
        }
        let top = &f.coeffs[m - 1];
        let shift = b.sub(&self.rho.apply(top), top);
        let right = self.sub(&self.x_pow(1), &self.constant(shift));
        Ok(self.mul_raw(&self.x_pow(1), f) == self.mul_raw(f, &right))
    }

    /// `B^{ρ,D}`: elements fixed by `ρ` and killed by `D`.
    pub fn invariant_subring(&self) -> crate::Submodule {
        self.base
            .fixed_subring(&[(&self.rho, FixMode::Fixed), (&self.deriv, FixMode::Kernel)])
    }

    /// For `f ∈ R(0)` with `ρ`-fixed coefficients, whether every coefficient lies in
    /// the center of `B^{ρ,D}`. This always holds; it serves as a self-test.
    pub fn coefficients_central_in_invariants(&self, f: &SkewPoly) -> Result<bool, Error> {
        let m = self.check_monic(f)?;
        if !self.is_r0_by_coefficients(f)?.in_r0 {
            return Err(Error::Usage("coefficient-location check needs f in R(0)".into()));
        }
        if !self.coefficients_fixed_by_rho(f) {
            return Err(Error::Usage(
                "coefficient-location check needs rho-fixed coefficients".into(),
            ));
        }
        let center = self.base.centralizer_in(&self.invariant_subring())?;
        for a in &f.coeffs[..m] {
            if !center.contains_vector(a.coords())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Y_j = Σ_{k=j}^{m-1} X^{k-j} a_{k+1}` for `0 ≤ j < m`.
    pub fn y_polys(&self, f: &SkewPoly) -> Result<Vec<SkewPoly>, Error> {
        let m = self.check_monic(f)?;
        Ok((0..m)
            .map(|j| SkewPoly::trimmed(f.coeffs[j + 1..=m].to_vec()))
            .collect())
    }

    /// `g ∈ R₁`, i.e. `αg = gρ(α)` for every basis element `α`.
    pub fn in_r1(&self, g: &SkewPoly) -> Result<bool, Error> {
        self.check_poly(g)?;
        Ok(self.base.basis().into_iter().all(|alpha| {
            let rho_alpha = self.rho.apply(&alpha);
            self.mul_raw(&self.constant(alpha), g) == self.mul_scalar_right(g, &rho_alpha)
        }))
    }

    /// `g_0 = 0`, `g_1 = g1`, `g_{j+1} = g_j X + X^j g_1`; returns `g_0, …, g_{count-1}`.
    ///
    /// For `g1 ∈ R₁` the right-`B`-linear map `X^j ↦ g_j` is a `B`-derivation of `R`.
    pub fn g_sequence(&self, g1: &SkewPoly, count: usize) -> Result<Vec<SkewPoly>, Error> {
        if !self.in_r1(g1)? {
            return Err(Error::Usage("g1 must satisfy alpha*g1 = g1*rho(alpha)".into()));
        }
        let x = self.x_pow(1);
        let mut gs = vec![self.zero()];
        if count > 1 {
            gs.push(g1.clone());
        }
        while gs.len() < count {
            let j = gs.len() - 1;
            let next = self.add(&self.mul_raw(&gs[j], &x), &self.shift(g1, j));
            gs.push(next);
        }
        gs.truncate(count);
        Ok(gs)
    }

    /// Applies the derivation `Σ X^j c_j ↦ Σ g_j c_j` given its values `gs[j] = Δ(X^j)`.
    pub fn apply_extension(&self, gs: &[SkewPoly], h: &SkewPoly) -> Result<SkewPoly, Error> {
        if gs.len() < h.coeffs.len() {
            return Err(Error::Usage(format!(
                "need Delta(X^j) up to j = {}, have {}",
                h.coeffs.len(),
                gs.len()
            )));
        }
        Ok(h.coeffs
            .iter()
            .zip(gs)
            .fold(self.zero(), |acc, (c, g)| self.add(&acc, &self.mul_scalar_right(g, c))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::CoeffRing;
    use num_bigint::BigInt;

    fn example() -> (SkewPolyRing, SkewPoly) {
        catalog::upper_triangular_example(CoeffRing::integers()).unwrap()
    }

    #[test]
    fn phi_edges() {
        let (r, _) = example();
        assert!(r.phi(0, 0).unwrap().is_identity());
        assert_eq!(*r.phi(3, 0).unwrap(), r.deriv().pow(3));
        assert_eq!(*r.phi(2, 2).unwrap(), r.rho().pow(2));
        let expected = r.rho().compose(r.deriv()).add(&r.deriv().compose(r.rho()));
        assert_eq!(*r.phi(2, 1).unwrap(), expected);
        assert!(r.phi(1, 2).is_err());
    }

    #[test]
    fn scalar_expansion() {
        let (r, _) = example();
        let b = r.base();
        let e12 = b.basis_element(1);
        assert_eq!(r.scalar_power_expand(&e12, 0).unwrap(), r.constant(e12.clone()));
        // α X = X ρ(α) + D(α)
        let lin = r.scalar_power_expand(&e12, 1).unwrap();
        assert_eq!(lin, r.poly(vec![e12.clone(), e12.clone()]).unwrap());
        let sq = r.scalar_power_expand(&e12, 2).unwrap();
        let two_e12 = b.scale(&e12, &BigInt::from(2));
        assert_eq!(sq, r.poly(vec![e12.clone(), two_e12, e12.clone()]).unwrap());
        let prod = r.mul(&r.constant(e12.clone()), &r.x_pow(1)).unwrap();
        assert_eq!(prod, lin);
    }

    #[test]
    fn basic_products() {
        let (r, f) = example();
        assert_eq!(r.mul(&f, &r.one()).unwrap(), f);
        assert_eq!(r.mul(&r.x_pow(1), &r.x_pow(1)).unwrap(), r.x_pow(2));
    }

    #[test]
    fn division() {
        let (r, f) = example();
        let (q, rem) = r.divmod_monic(&f, &f).unwrap();
        assert_eq!(q, r.one());
        assert!(rem.is_zero());
        let g = r.x_pow(1);
        let (q, rem) = r.divmod_monic(&g, &f).unwrap();
        assert!(q.is_zero());
        assert_eq!(rem, g);
        let xf = r.mul(&r.x_pow(1), &f).unwrap();
        let (q, rem) = r.divmod_monic(&xf, &f).unwrap();
        assert_eq!(q, r.x_pow(1));
        assert!(rem.is_zero());
        let not_monic = r.constant(r.base().basis_element(1));
        assert!(r.divmod_monic(&g, &not_monic).is_err());
    }

    #[test]
    fn r0_membership() {
        let (r, f) = example();
        assert!(r.is_r0_by_coefficients(&f).unwrap().in_r0);
        assert!(r.is_r0_direct(&f).unwrap());
        let e12 = r.base().basis_element(1);
        let g = r.poly(vec![r.base().zero(), e12, r.base().one()]).unwrap();
        let check = r.is_r0_by_coefficients(&g).unwrap();
        assert!(!check.in_r0);
        assert!(!r.is_r0_direct(&g).unwrap());
        assert!(r.coefficients_central_in_invariants(&f).unwrap());
    }

    #[test]
    fn commutative_r0_is_automatic() {
        let b = crate::BaseRing::scalars(CoeffRing::modulo(5));
        let r = SkewPolyRing::new(b.clone(), RingMap::identity(&b), RingMap::zero(&b)).unwrap();
        let f = r
            .poly(vec![
                b.element_i64(&[2]).unwrap(),
                b.element_i64(&[3]).unwrap(),
                b.one(),
            ])
            .unwrap();
        assert!(r.is_r0_by_coefficients(&f).unwrap().in_r0);
        assert!(r.is_r0_direct(&f).unwrap());
        assert!(r.coefficients_central_in_invariants(&f).unwrap());
        assert!(r.coefficients_central_in_invariants(&r.x_pow(1)).unwrap());
    }

    #[test]
    fn y_polynomials() {
        let (r, f) = example();
        let ys = r.y_polys(&f).unwrap();
        let a = f.coeff(1).unwrap().clone();
        assert_eq!(ys[0], r.poly(vec![a, r.base().one()]).unwrap());
        assert_eq!(ys[1], r.one());
        let x = r.x_pow(1);
        assert_eq!(
            r.mul(&x, &ys[1]).unwrap(),
            r.sub(&ys[0], &r.constant(f.coeff(1).unwrap().clone()))
        );
        assert_eq!(
            r.mul(&x, &ys[0]).unwrap(),
            r.sub(&f, &r.constant(f.coeff(0).unwrap().clone()))
        );
        let lin = r.poly(vec![r.base().zero(), r.base().one()]).unwrap();
        assert_eq!(r.y_polys(&lin).unwrap(), vec![r.one()]);
    }

    #[test]
    fn g_sequence_classical_derivative() {
        let b = crate::BaseRing::scalars(CoeffRing::integers());
        let r = SkewPolyRing::new(b.clone(), RingMap::identity(&b), RingMap::zero(&b)).unwrap();
        let gs = r.g_sequence(&r.one(), 6).unwrap();
        for (j, g) in gs.iter().enumerate() {
            if j == 0 {
                assert!(g.is_zero());
            } else {
                let c = b.element(vec![BigInt::from(j)]).unwrap();
                assert_eq!(*g, r.monomial(j - 1, c));
            }
        }
        assert!(r.g_sequence(&r.zero(), 4).unwrap().iter().all(SkewPoly::is_zero));
    }

    #[test]
    fn g_sequence_rejects_outside_r1() {
        let (r, _) = example();
        // e11 does not satisfy α e11 = e11 α for α = e12
        let g = r.constant(r.base().basis_element(0));
        assert!(r.g_sequence(&g, 3).is_err());
    }
}
