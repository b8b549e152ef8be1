//! Separability and weak separability of `A = R/fR` over `B`.
//!
//! * separable: some `u ∈ A_{1-m}` has `τ(u) = 1`.
//! * weakly separable: `A₁ ∩ Ker τ = I_x(V)`.
//!
//! The oracle decides weak separability without `τ`: it solves the Leibniz
//! system for all `B`-derivations of `A` and compares them with the inner ones.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::linalg::{self, Matrix, Submodule};
use crate::quotient::{AElement, QuotientRing};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separability {
    pub separable: bool,
    /// `u ∈ A_{1-m}` with `τ(u) = 1`
    pub witness: Option<AElement>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    /// `Ker(τ|A₁) = Im(I_x|V)`
    pub exact_at_a1: bool,
    /// `Ker(I_x|V)` equals the center of `A`
    pub ker_ix_is_center: bool,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub separable: bool,
    pub witness: Option<AElement>,
    pub weakly_separable: bool,
    /// `A₁ ∩ Ker τ`
    pub s1: Submodule,
    /// `I_x(V)`
    pub s2: Submodule,
    pub exactness: ExactnessReport,
}

/// Both decisions recomputed in the `ρ = id` formulation through `V → V → C(A)`.
#[derive(Clone, Debug)]
pub struct DTypeReport {
    pub weakly_separable: bool,
    pub separable: bool,
    pub tau_v_in_center: bool,
    pub tau_v: Submodule,
    pub center: Submodule,
}

/// `Der_B(A)` and its inner part, as subgroups of `k^{N²}`; a derivation `δ`
/// is flattened row-major from its `N × N` matrix (column `q` = `δ(z_q)`).
#[derive(Clone, Debug)]
pub struct DerivationModule {
    pub dim: usize,
    pub der: Submodule,
    pub inner: Submodule,
}

impl DerivationModule {
    fn to_matrices(&self, s: &Submodule) -> Vec<Matrix> {
        s.generators().into_iter().map(|g| unflatten(s, self.dim, g)).collect()
    }

    /// Generators of `Der_B(A)` as matrices.
    pub fn basis(&self) -> Vec<Matrix> {
        self.to_matrices(&self.der)
    }

    /// Generators of the inner `B`-derivations as matrices.
    pub fn inner_basis(&self) -> Vec<Matrix> {
        self.to_matrices(&self.inner)
    }

    pub fn all_inner(&self) -> bool {
        self.der == self.inner
    }

    pub fn contains(&self, delta: &Matrix) -> Result<bool, Error> {
        self.der.contains_vector(&flatten(delta))
    }

    pub fn contains_inner(&self, delta: &Matrix) -> Result<bool, Error> {
        self.inner.contains_vector(&flatten(delta))
    }
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub weakly_separable: bool,
    pub module: DerivationModule,
    /// `{δ(x) : δ ∈ Der_B(A)}`
    pub delta_x: Submodule,
}

fn flatten(m: &Matrix) -> Vec<BigInt> {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

fn unflatten(s: &Submodule, n: usize, v: Vec<BigInt>) -> Matrix {
    Matrix::new(s.coeff(), n, n, v).expect("N² entries")
}

/// `is_separable`: solves `τ(u) = 1` over the parametrization of `A_{1-m}`.
pub fn is_separable(a: &QuotientRing) -> Result<Separability, Error> {
    let m = a.degree() as i64;
    let space = a.twisted_centralizer(1 - m);
    let gens = space.generators();
    let one = a.one();
    let none = Separability {
        separable: false,
        witness: None,
    };
    if gens.is_empty() {
        return Ok(none);
    }
    let images: Vec<Vec<BigInt>> = gens.iter().map(|g| a.tau_matrix().mul_vec_unchecked(g)).collect();
    let param = Matrix::from_columns(a.coeff(), a.dim(), &images)?;
    let Some((c, _)) = linalg::solve(&param, one.flat())? else {
        return Ok(none);
    };
    let u = a.from_flat(linalg::combine(a.coeff(), &gens, &c))?;
    if !space.contains_vector(u.flat())? || a.tau(&u)? != one {
        return Err(Error::Invariant("separability witness failed re-verification".into()));
    }
    Ok(Separability {
        separable: true,
        witness: Some(u),
    })
}

/// `A₁ ∩ Ker τ`
pub fn a1_tau_kernel(a: &QuotientRing) -> Submodule {
    linalg::restricted_kernel(&a.twisted_centralizer(1), a.tau_matrix()).expect("same space")
}

/// `is_weakly_separable`, with the separability decision and exactness report attached.
pub fn is_weakly_separable(a: &QuotientRing) -> Result<Verdict, Error> {
    let s1 = a1_tau_kernel(a);
    let s2 = a.inner_x_image(&a.centralizer_v())?;
    if !s1.contains(&s2)? {
        return Err(Error::Invariant("I_x(V) is not contained in A1 ∩ Ker tau".into()));
    }
    let weakly_separable = s1 == s2;
    let sep = is_separable(a)?;
    if sep.separable && !weakly_separable {
        return Err(Error::Invariant("separable but not weakly separable".into()));
    }
    let exactness = exactness_report(a)?;
    if exactness.exact_at_a1 != weakly_separable {
        return Err(Error::Invariant(
            "exactness at A1 disagrees with the weak separability verdict".into(),
        ));
    }
    Ok(Verdict {
        separable: sep.separable,
        witness: sep.witness,
        weakly_separable,
        s1,
        s2,
        exactness,
    })
}

/// The center of `A` computed as the commutant of the whole flat basis.
fn commutant(a: &QuotientRing) -> Submodule {
    let blocks: Vec<Matrix> = (0..a.dim())
        .map(|p| {
            let z = a.basis_element(p);
            a.left_mul_matrix(&z).sub(&a.right_mul_matrix(&z)).expect("square")
        })
        .collect();
    linalg::kernel(&Matrix::vstack(a.coeff(), a.dim(), &blocks).expect("equal widths"))
}

/// `exactness_report` for `0 → C(A) → V → A₁ → A`.
pub fn exactness_report(a: &QuotientRing) -> Result<ExactnessReport, Error> {
    let v = a.centralizer_v();
    let ix = a.inner_x_matrix();
    let exact_at_a1 = a1_tau_kernel(a) == linalg::restricted_image(&v, &ix)?;
    let ker_ix = linalg::restricted_kernel(&v, &ix)?;
    Ok(ExactnessReport {
        exact_at_a1,
        ker_ix_is_center: ker_ix == commutant(a),
    })
}

/// `d_type_checks` for `ρ = id`: weak separability as exactness of
/// `V → V → C(A)` and separability as additionally `τ(V) = C(A)`.
pub fn d_type_checks(a: &QuotientRing) -> Result<DTypeReport, Error> {
    if !a.ring().is_derivation_type() {
        return Err(Error::Usage("the derivation-type checks need rho = id".into()));
    }
    let v = a.centralizer_v();
    let tau_v = linalg::restricted_image(&v, a.tau_matrix())?;
    let ker_tau_v = linalg::restricted_kernel(&v, a.tau_matrix())?;
    let ix_v = a.inner_x_image(&v)?;
    let center = a.center();
    let tau_v_in_center = center.contains(&tau_v)?;
    let weakly_separable = ker_tau_v == ix_v;
    let separable = weakly_separable && tau_v == center;

    let general = is_weakly_separable(a)?;
    if general.weakly_separable != weakly_separable || general.separable != separable {
        return Err(Error::Invariant(format!(
            "derivation-type verdicts (weak {weakly_separable}, separable {separable}) disagree with the general ones (weak {}, separable {})",
            general.weakly_separable, general.separable
        )));
    }
    Ok(DTypeReport {
        weakly_separable,
        separable,
        tau_v_in_center,
        tau_v,
        center,
    })
}

/// `derivation_module`: all `B`-derivations of `A` by solving the Leibniz rule
/// on basis pairs, and the inner ones `z ↦ vz − zv` for `v ∈ V`.
pub fn derivation_module(a: &QuotientRing) -> Result<DerivationModule, Error> {
    let n = a.dim();
    let r = a.base().rank();
    let coeff = a.coeff();
    let unknowns = n * n;
    let var = |i: usize, t: usize| i * n + t;

    let products: Vec<Vec<Vec<BigInt>>> = (0..n)
        .map(|p| {
            (0..n)
                .map(|q| a.mul_raw(&a.basis_element(p), &a.basis_element(q)).into_flat())
                .collect()
        })
        .collect();

    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for p in 0..n {
        for q in 0..n {
            for i in 0..n {
                let mut row = vec![BigInt::zero(); unknowns];
                // δ(z_p z_q)_i
                for (t, c) in products[p][q].iter().enumerate() {
                    row[var(i, t)] += c;
                }
                // − (δ(z_p) z_q)_i − (z_p δ(z_q))_i
                for l in 0..n {
                    row[var(l, p)] -= &products[l][q][i];
                    row[var(l, q)] -= &products[p][l][i];
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(coeff.reduce_vec(row));
                }
            }
        }
    }
    // δ(e_s) = 0 for the basis of B
    for s in 0..r {
        for i in 0..n {
            let mut row = vec![BigInt::zero(); unknowns];
            row[var(i, s)] = BigInt::from(1);
            rows.push(row);
        }
    }
    let system = Matrix::from_rows(coeff, &rows)?;
    let der = linalg::kernel(&system);

    let inner_gens = a
        .elements_of(&a.centralizer_v())?
        .iter()
        .map(|v| flatten(&inner_derivation_matrix(a, v)))
        .collect();
    let inner = Submodule::from_generators(coeff, unknowns, inner_gens)?;
    if !der.contains(&inner)? {
        return Err(Error::Invariant("an inner derivation failed the Leibniz system".into()));
    }
    Ok(DerivationModule { dim: n, der, inner })
}

/// Matrix of `z ↦ vz − zv`.
pub fn inner_derivation_matrix(a: &QuotientRing, v: &AElement) -> Matrix {
    a.left_mul_matrix(v).sub(&a.right_mul_matrix(v)).expect("square")
}

/// Whether `delta` kills `B` and satisfies the Leibniz rule on all basis pairs.
pub fn is_b_derivation(a: &QuotientRing, delta: &Matrix) -> Result<bool, Error> {
    let n = a.dim();
    if delta.rows() != n || delta.cols() != n {
        return Err(Error::Dimension(format!("a map on A is {n} x {n}")));
    }
    let apply = |z: &AElement| a.from_flat(delta.mul_vec_unchecked(z.flat()));
    for s in 0..a.base().rank() {
        if !apply(&a.basis_element(s))?.is_zero() {
            return Ok(false);
        }
    }
    for p in 0..n {
        let zp = a.basis_element(p);
        let dp = apply(&zp)?;
        for q in 0..n {
            let zq = a.basis_element(q);
            let lhs = apply(&a.mul_raw(&zp, &zq))?;
            let rhs = a.add_raw(&a.mul_raw(&dp, &zq), &a.mul_raw(&zp, &apply(&zq)?));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `oracle_weakly_separable`: `Der_B(A) = Inner`, plus the check
/// `{δ(x) : δ ∈ Der_B(A)} = A₁ ∩ Ker τ`.
pub fn oracle_weakly_separable(a: &QuotientRing) -> Result<OracleReport, Error> {
    let module = derivation_module(a)?;
    let n = a.dim();
    let images = module
        .der
        .generators()
        .into_iter()
        .map(|g| unflatten(&module.der, n, g).mul_vec_unchecked(a.x().flat()))
        .collect();
    let delta_x = Submodule::from_generators(a.coeff(), n, images)?;
    if delta_x != a1_tau_kernel(a) {
        return Err(Error::Invariant("{delta(x)} differs from A1 ∩ Ker tau".into()));
    }
    Ok(OracleReport {
        weakly_separable: module.all_inner(),
        module,
        delta_x,
    })
}

/// `build_derivation_from_seed`: the `B`-derivation `δ` of `A` with `δ(x) = u`.
///
/// Lifts `u` to `u₀ ∈ R₁` of degree `< m`, extends `X ↦ u₀` to a derivation
/// `Δ` of `R` through `Δ(X^j) = g_j`, confirms `Δ(f) ∈ fR` and descends.
pub fn build_derivation_from_seed(a: &QuotientRing, u: &AElement) -> Result<Matrix, Error> {
    if !a1_tau_kernel(a).contains_vector(u.flat())? {
        return Err(Error::Usage("the seed must lie in A1 ∩ Ker tau".into()));
    }
    let ring = a.ring();
    let m = a.degree();
    let u0 = a.lift(u);
    let gs = ring.g_sequence(&u0, m + 1)?;
    let delta_f = ring.apply_extension(&gs, a.f())?;
    let (_, rem) = ring.divmod_monic(&delta_f, a.f())?;
    if !rem.is_zero() {
        return Err(Error::Invariant("Delta(f) is not in fR".into()));
    }
    let base = a.base();
    let columns: Vec<Vec<BigInt>> = (0..a.dim())
        .map(|p| {
            let image = ring.mul_scalar_right(&gs[p / base.rank()], &base.basis_element(p % base.rank()));
            a.reduce(&image).map(AElement::into_flat)
        })
        .collect::<Result<_, _>>()?;
    Matrix::from_columns(a.coeff(), a.dim(), &columns)
}
