//! The quotient ring `A = R/fR` for `f ∈ R(0)` with `ρ`-fixed coefficients.
//!
//! `A` is free over `B` on `1, x, …, x^{m-1}` and free over `k` on the flat
//! basis `x^j e_s`, indexed `j·r + s`. Ring arithmetic goes through a
//! multiplication table on the flat basis; subgroup questions (`A_k`, `V`,
//! `C(A)`, `Ker τ`) are kernels and images of `k`-matrices on `k^{rm}`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::base_ring::{BaseRing, RingElement};
use crate::linalg::{self, CoeffRing, Matrix, Submodule};
use crate::skew_poly::{SkewPoly, SkewPolyRing};
use crate::Error;

/// An element `Σ x^j z_j` of `A`, stored by its flat coordinates over `k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AElement {
    flat: Vec<BigInt>,
    rank: usize,
}

impl AElement {
    /// The coordinate vector over `k`, index `j·r + s`.
    pub fn flat(&self) -> &[BigInt] {
        &self.flat
    }

    pub fn into_flat(self) -> Vec<BigInt> {
        self.flat
    }

    /// The right `B`-coefficient of `x^j`.
    pub fn coeff(&self, j: usize) -> RingElement {
        RingElement::from_coords(self.flat[j * self.rank..(j + 1) * self.rank].to_vec())
    }

    /// All `m` right `B`-coefficients.
    pub fn coeffs(&self) -> Vec<RingElement> {
        self.flat
            .chunks(self.rank)
            .map(|c| RingElement::from_coords(c.to_vec()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.flat.iter().all(Zero::is_zero)
    }
}

impl fmt::Debug for AElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| format!("x^{j}*{c:?}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

pub struct QuotientRing {
    ring: Arc<SkewPolyRing>,
    f: SkewPoly,
    m: usize,
    r: usize,
    /// normal forms of `x^k` for `m ≤ k ≤ 2m − 2`
    reduction_table: Vec<AElement>,
    /// `table[p][q]` = product of flat basis elements `p` and `q`
    table: Vec<Vec<Vec<BigInt>>>,
    y: Vec<AElement>,
    x: AElement,
    tau: Matrix,
}

impl fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuotientRing")
            .field("f", &self.f)
            .field("m", &self.m)
            .field("r", &self.r)
            .finish_non_exhaustive()
    }
}

impl QuotientRing {
    /// `build_quotient`. Refuses `f ∉ R(0)` and `f ∉ B^ρ[X]`.
    pub fn build(ring: impl Into<Arc<SkewPolyRing>>, f: SkewPoly) -> Result<Self, Error> {
        let ring = ring.into();
        let check = ring.is_r0_by_coefficients(&f)?;
        if let Some(failure) = check.failure {
            return Err(Error::NotInR0(failure));
        }
        if !ring.coefficients_fixed_by_rho(&f) {
            let bad: Vec<String> = f
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, a)| ring.rho().apply(a) != **a)
                .map(|(i, _)| format!("a_{i}"))
                .collect();
            return Err(Error::OutOfScope(format!(
                "coefficients {} are not fixed by rho",
                bad.join(", ")
            )));
        }
        let m = f.degree().expect("monic of degree >= 1");
        let r = ring.base().rank();
        let n = r * m;

        let mut q = QuotientRing {
            ring,
            f,
            m,
            r,
            reduction_table: Vec::new(),
            table: Vec::new(),
            y: Vec::new(),
            x: AElement {
                flat: vec![BigInt::zero(); n],
                rank: r,
            },
            tau: Matrix::zero(CoeffRing::integers(), 0, 0),
        };

        q.reduction_table = (q.m..=(2 * q.m).saturating_sub(2).max(q.m))
            .map(|k| q.reduce_by_division(&q.ring.x_pow(k)))
            .collect();

        let ring = q.ring.clone();
        let base = ring.base();
        q.table = (0..n)
            .map(|p| {
                let zp = ring.monomial(p / r, base.basis_element(p % r));
                (0..n)
                    .map(|s| {
                        let zs = ring.monomial(s / r, base.basis_element(s % r));
                        q.reduce_poly(&ring.mul_raw(&zp, &zs)).flat
                    })
                    .collect()
            })
            .collect();

        q.x = q.reduce_poly(&ring.x_pow(1));
        q.y = ring.y_polys(&q.f)?.iter().map(|yj| q.reduce_poly(yj)).collect();
        let columns: Vec<Vec<BigInt>> = (0..n).map(|p| q.tau_raw(&q.basis_element(p)).flat).collect();
        q.tau = Matrix::from_columns(q.coeff(), n, &columns)?;
        Ok(q)
    }

    pub fn ring(&self) -> &SkewPolyRing {
        &self.ring
    }

    pub fn base(&self) -> &BaseRing {
        self.ring.base()
    }

    pub fn coeff(&self) -> CoeffRing {
        self.ring.base().coeff()
    }

    pub fn f(&self) -> &SkewPoly {
        &self.f
    }

    /// `deg f`
    pub fn degree(&self) -> usize {
        self.m
    }

    /// `r·m`, the rank of `A` over `k`.
    pub fn dim(&self) -> usize {
        self.r * self.m
    }

    /// Normal forms of `x^m, …, x^{2m-2}` (just `x^m` when `m = 1`).
    pub fn reduction_table(&self) -> &[AElement] {
        &self.reduction_table
    }

    /// `y_j = Y_j + fR` for `0 ≤ j < m`.
    pub fn y(&self) -> &[AElement] {
        &self.y
    }

    pub fn x(&self) -> &AElement {
        &self.x
    }

    pub fn zero(&self) -> AElement {
        AElement {
            flat: vec![BigInt::zero(); self.dim()],
            rank: self.r,
        }
    }

    pub fn one(&self) -> AElement {
        self.embed(&self.base().one())
    }

    /// The flat basis element `x^{p / r} e_{p % r}`.
    pub fn basis_element(&self, p: usize) -> AElement {
        let mut z = self.zero();
        z.flat[p] = BigInt::from(1);
        z
    }

    /// `B → A`, `α ↦ α + fR`.
    pub fn embed(&self, a: &RingElement) -> AElement {
        let mut z = self.zero();
        for (s, c) in a.coords().iter().enumerate() {
            z.flat[s] = c.clone();
        }
        z
    }

    /// `Σ x^j coeffs[j]` for `m` coefficients.
    pub fn element(&self, coeffs: Vec<RingElement>) -> Result<AElement, Error> {
        if coeffs.len() != self.m || coeffs.iter().any(|c| c.len() != self.r) {
            return Err(Error::Usage(format!(
                "an element of A needs {} coefficients of length {}",
                self.m, self.r
            )));
        }
        let flat = coeffs.into_iter().flat_map(RingElement::into_coords).collect();
        self.from_flat(flat)
    }

    pub fn from_flat(&self, flat: Vec<BigInt>) -> Result<AElement, Error> {
        if flat.len() != self.dim() {
            return Err(Error::Usage(format!(
                "an element of A has {} coordinates, got {}",
                self.dim(),
                flat.len()
            )));
        }
        Ok(AElement {
            flat: self.coeff().reduce_vec(flat),
            rank: self.r,
        })
    }

    fn check(&self, z: &AElement) -> Result<(), Error> {
        if z.flat.len() != self.dim() || z.rank != self.r {
            return Err(Error::Usage("element belongs to a different quotient ring".into()));
        }
        Ok(())
    }

    /// `Σ X^j z_j`, the canonical lift of degree `< m`.
    pub fn lift(&self, z: &AElement) -> SkewPoly {
        self.ring.poly(z.coeffs()).expect("coefficients have base rank")
    }

    fn reduce_by_division(&self, g: &SkewPoly) -> AElement {
        let (_, rem) = self.ring.divmod_monic(g, &self.f).expect("f is monic");
        self.embed_low_degree(&rem)
    }

    fn embed_low_degree(&self, g: &SkewPoly) -> AElement {
        let mut z = self.zero();
        for (j, c) in g.coeffs().iter().enumerate() {
            for (s, v) in c.coords().iter().enumerate() {
                z.flat[j * self.r + s] = v.clone();
            }
        }
        z
    }

    /// `g + fR` in normal form.
    ///
    /// Degrees up to `2m − 2` use the table of `x^k`; right coefficients make
    /// `X^k c ↦ N(x^k)·c` coefficientwise. Higher degrees fall back to division.
    pub fn reduce(&self, g: &SkewPoly) -> Result<AElement, Error> {
        if g.coeffs().iter().any(|c| c.len() != self.r) {
            return Err(Error::Usage("polynomial over a different base ring".into()));
        }
        Ok(self.reduce_poly(g))
    }

    fn reduce_poly(&self, g: &SkewPoly) -> AElement {
        let top = self.m + self.reduction_table.len();
        if g.coeffs().len() > top {
            return self.reduce_by_division(g);
        }
        let base = self.base();
        let mut z = self.zero();
        for (k, c) in g.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < self.m {
                for (s, v) in c.coords().iter().enumerate() {
                    z.flat[k * self.r + s] += v;
                }
            } else {
                for (j, b) in self.reduction_table[k - self.m].coeffs().iter().enumerate() {
                    for (s, v) in base.mul_raw(b, c).coords().iter().enumerate() {
                        z.flat[j * self.r + s] += v;
                    }
                }
            }
        }
        z.flat = self.coeff().reduce_vec(z.flat);
        z
    }

    pub fn add(&self, z: &AElement, w: &AElement) -> Result<AElement, Error> {
        self.check(z)?;
        self.check(w)?;
        Ok(self.add_raw(z, w))
    }

    pub fn sub(&self, z: &AElement, w: &AElement) -> Result<AElement, Error> {
        self.check(z)?;
        self.check(w)?;
        Ok(self.sub_raw(z, w))
    }

    pub fn mul(&self, z: &AElement, w: &AElement) -> Result<AElement, Error> {
        self.check(z)?;
        self.check(w)?;
        Ok(self.mul_raw(z, w))
    }

    pub(crate) fn add_raw(&self, z: &AElement, w: &AElement) -> AElement {
        let flat = z.flat.iter().zip(&w.flat).map(|(a, b)| a + b).collect();
        AElement {
            flat: self.coeff().reduce_vec(flat),
            rank: self.r,
        }
    }

    pub(crate) fn sub_raw(&self, z: &AElement, w: &AElement) -> AElement {
        let flat = z.flat.iter().zip(&w.flat).map(|(a, b)| a - b).collect();
        AElement {
            flat: self.coeff().reduce_vec(flat),
            rank: self.r,
        }
    }

    pub(crate) fn mul_raw(&self, z: &AElement, w: &AElement) -> AElement {
        let n = self.dim();
        let mut out = vec![BigInt::zero(); n];
        for (p, zp) in z.flat.iter().enumerate() {
            if zp.is_zero() {
                continue;
            }
            for (q, wq) in w.flat.iter().enumerate() {
                if wq.is_zero() {
                    continue;
                }
                let c = zp * wq;
                for (o, t) in out.iter_mut().zip(&self.table[p][q]) {
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        AElement {
            flat: self.coeff().reduce_vec(out),
            rank: self.r,
        }
    }

    /// `x^k`
    pub fn x_pow(&self, k: usize) -> AElement {
        (0..k).fold(self.one(), |acc, _| self.mul_raw(&acc, &self.x))
    }

    /// `I_x(z) = zx − xz`
    pub fn inner_x(&self, z: &AElement) -> Result<AElement, Error> {
        self.check(z)?;
        Ok(self.sub_raw(&self.mul_raw(z, &self.x), &self.mul_raw(&self.x, z)))
    }

    /// `τ(z) = Σ_j y_j z x^j`
    pub fn tau(&self, z: &AElement) -> Result<AElement, Error> {
        self.check(z)?;
        Ok(self.tau_raw(z))
    }

    fn tau_raw(&self, z: &AElement) -> AElement {
        let mut acc = self.zero();
        let mut zx = z.clone();
        for yj in &self.y {
            acc = self.add_raw(&acc, &self.mul_raw(yj, &zx));
            zx = self.mul_raw(&zx, &self.x);
        }
        acc
    }

    /// `τ` as an `N × N` matrix acting on flat coordinates.
    pub fn tau_matrix(&self) -> &Matrix {
        &self.tau
    }

    /// Matrix of `w ↦ z·w`.
    pub fn left_mul_matrix(&self, z: &AElement) -> Matrix {
        let cols: Vec<Vec<BigInt>> = (0..self.dim())
            .map(|q| self.mul_raw(z, &self.basis_element(q)).flat)
            .collect();
        Matrix::from_columns(self.coeff(), self.dim(), &cols).expect("square")
    }

    /// Matrix of `w ↦ w·z`.
    pub fn right_mul_matrix(&self, z: &AElement) -> Matrix {
        let cols: Vec<Vec<BigInt>> = (0..self.dim())
            .map(|q| self.mul_raw(&self.basis_element(q), z).flat)
            .collect();
        Matrix::from_columns(self.coeff(), self.dim(), &cols).expect("square")
    }

    /// Matrix of `I_x`.
    pub fn inner_x_matrix(&self) -> Matrix {
        self.right_mul_matrix(&self.x)
            .sub(&self.left_mul_matrix(&self.x))
            .expect("square")
    }

    /// `A_k = {u ∈ A : αu = uρ^k(α)}`, imposed on a basis of `B`.
    pub fn twisted_centralizer(&self, k: i64) -> Submodule {
        let rho_k = self.ring.rho_power(k);
        let blocks: Vec<Matrix> = self
            .base()
            .basis()
            .iter()
            .map(|alpha| {
                let left = self.left_mul_matrix(&self.embed(alpha));
                let right = self.right_mul_matrix(&self.embed(&rho_k.apply(alpha)));
                left.sub(&right).expect("square")
            })
            .collect();
        let stacked = Matrix::vstack(self.coeff(), self.dim(), &blocks).expect("equal widths");
        linalg::kernel(&stacked)
    }

    /// `V = A_0`, the centralizer of `B` in `A`.
    pub fn centralizer_v(&self) -> Submodule {
        self.twisted_centralizer(0)
    }

    /// `C(A) = V ∩ {u : ux = xu}`.
    pub fn center(&self) -> Submodule {
        linalg::restricted_kernel(&self.centralizer_v(), &self.inner_x_matrix()).expect("same space")
    }

    /// `Ker τ`
    pub fn tau_kernel(&self) -> Submodule {
        linalg::kernel(&self.tau)
    }

    /// `I_x(S)`
    pub fn inner_x_image(&self, s: &Submodule) -> Result<Submodule, Error> {
        linalg::restricted_image(s, &self.inner_x_matrix())
    }

    /// Elements of a submodule of `k^N` as elements of `A`.
    pub fn elements_of(&self, s: &Submodule) -> Result<Vec<AElement>, Error> {
        if s.ambient_dim() != self.dim() || s.coeff() != self.coeff() {
            return Err(Error::Dimension("submodule does not live in A".into()));
        }
        Ok(s.generators()
            .into_iter()
            .map(|g| AElement { flat: g, rank: self.r })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::RingMap;

    fn scalar_quotient(n: u64, coeffs: &[i64]) -> QuotientRing {
        let b = BaseRing::scalars(CoeffRing::modulo(n));
        let ring = SkewPolyRing::new(b.clone(), RingMap::identity(&b), RingMap::zero(&b)).unwrap();
        let cs = coeffs.iter().map(|&c| b.element_i64(&[c]).unwrap()).collect();
        let f = ring.poly(cs).unwrap();
        QuotientRing::build(ring, f).unwrap()
    }

    fn flat(q: &QuotientRing, xs: &[i64]) -> AElement {
        q.from_flat(xs.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    #[test]
    fn example_reduction() {
        let (ring, f) = catalog::upper_triangular_example(CoeffRing::integers()).unwrap();
        let q = QuotientRing::build(ring, f).unwrap();
        assert_eq!(q.degree(), 2);
        // x² = −xa − a, a = diag(3, 1)
        let x2 = q.mul(q.x(), q.x()).unwrap();
        assert_eq!(x2, flat(&q, &[-3, 0, -1, -3, 0, -1]));
        assert_eq!(q.reduction_table()[0], x2);
    }

    #[test]
    fn linear_quotient_is_base() {
        let q = scalar_quotient(7, &[-3, 1]);
        assert_eq!(q.degree(), 1);
        assert_eq!(*q.x(), flat(&q, &[3]));
        assert_eq!(q.y(), &[q.one()]);
    }

    #[test]
    fn char_two_quotients() {
        let q = scalar_quotient(2, &[1, 1, 1]);
        assert_eq!(q.mul(q.x(), q.x()).unwrap(), flat(&q, &[1, 1]));
        for p in 0..2 {
            let u = q.basis_element(p);
            assert_eq!(q.tau(&u).unwrap(), u);
        }

        let q = scalar_quotient(2, &[1, 0, 1]);
        let x1 = q.add(q.x(), &q.one()).unwrap();
        assert!(q.mul(&x1, &x1).unwrap().is_zero());
        assert!(q.tau_matrix().is_zero());
        assert!(q.tau_kernel().is_full());
        assert!(q.inner_x_image(&q.centralizer_v()).unwrap().is_zero());
    }

    #[test]
    fn refuses_out_of_scope() {
        let b = catalog::diagonal_pair(CoeffRing::modulo(3));
        let rho = catalog::swap(&b);
        let f1 = b.basis_element(0);
        let d = catalog::inner_twisted_derivation(&b, &rho, &f1);
        let ring = SkewPolyRing::new(b.clone(), rho, d).unwrap();
        // X − c lies in R(0) whenever D(α) = αc − cρ(α); here c = f1 is not ρ-fixed
        let f = ring.poly(vec![b.neg(&f1), b.one()]).unwrap();
        assert!(ring.is_r0_by_coefficients(&f).unwrap().in_r0);
        assert!(matches!(QuotientRing::build(ring, f), Err(Error::OutOfScope(_))));
    }

    #[test]
    fn refuses_outside_r0() {
        let (ring, _) = catalog::upper_triangular_example(CoeffRing::integers()).unwrap();
        let b = ring.base().clone();
        let f = ring.poly(vec![b.basis_element(1), b.one()]).unwrap();
        assert!(matches!(QuotientRing::build(ring, f), Err(Error::NotInR0(_))));
    }

    #[test]
    fn reduce_matches_division() {
        let (ring, f) = catalog::upper_triangular_example(CoeffRing::integers()).unwrap();
        let ring = Arc::new(ring);
        let q = QuotientRing::build(ring.clone(), f.clone()).unwrap();
        let b = ring.base();
        let g = ring
            .poly(vec![
                b.basis_element(1),
                b.basis_element(0),
                b.basis_element(2),
                b.one(),
                b.basis_element(1),
            ])
            .unwrap();
        let (_, rem) = ring.divmod_monic(&g, &f).unwrap();
        assert_eq!(q.reduce(&g).unwrap(), q.reduce(&rem).unwrap());
        assert_eq!(q.x_pow(4), q.reduce(&ring.x_pow(4)).unwrap());
    }

    #[test]
    fn centralizers_in_example() {
        let (ring, f) = catalog::upper_triangular_example(CoeffRing::integers()).unwrap();
        let q = QuotientRing::build(ring, f).unwrap();
        let v = q.centralizer_v();
        let expected = Submodule::from_generators(
            q.coeff(),
            6,
            vec![
                flat(&q, &[1, 0, 0, 1, 0, 1]).into_flat(),
                flat(&q, &[1, 0, 1, 0, 0, 0]).into_flat(),
            ],
        )
        .unwrap();
        assert_eq!(v, expected);
        assert_eq!(q.center(), v);
        assert_eq!(q.twisted_centralizer(-1), v);
        assert_eq!(q.twisted_centralizer(1), v);
    }

    #[test]
    fn parent_mismatch() {
        let q2 = scalar_quotient(2, &[1, 1, 1]);
        let q3 = scalar_quotient(2, &[1, 1, 1, 1]);
        assert!(q2.mul(q2.x(), q3.x()).is_err());
        assert!(q2.from_flat(vec![BigInt::zero(); 3]).is_err());
    }
}
