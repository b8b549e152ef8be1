//! Report documents. Each serializes to one JSON object and renders as text.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Int;

/// Subgroup generators as integer rows in Hermite normal form order.
pub type Basis = Vec<Vec<Int>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub ring_valid: bool,
    pub coeff_modulus: u64,
    pub rank: usize,
    pub rho_is_identity: bool,
    pub derivation_is_zero: bool,
    pub degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckR0Report {
    pub ring_valid: bool,
    pub poly: String,
    pub in_r0: bool,
    /// the first failed identity when `in_r0` is false
    pub failure: Option<String>,
    pub coefficients_rho_fixed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bases {
    #[serde(rename = "V")]
    pub v: Basis,
    pub center: Basis,
    #[serde(rename = "A1")]
    pub a1: Basis,
    pub ker_tau: Basis,
    pub a1_ker_tau: Basis,
    pub ix_v: Basis,
}

/// Elements of `A` are flat vectors; entry `j·r + s` is the `e_s` coordinate
/// of the coefficient of `x^j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    /// `u ∈ A_{1−m}` with `τ(u) = 1`
    pub separability: Option<Vec<Int>>,
    /// `u ∈ A₁ ∩ Ker τ` outside `I_x(V)`: the derivation with `δ(x) = u` is not inner
    pub outer_seed: Option<Vec<Int>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationTypeReport {
    pub weakly_separable: bool,
    pub separable: bool,
    pub tau_v_in_center: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecideReport {
    pub ring_valid: bool,
    pub poly: String,
    pub in_r0: bool,
    pub degree: usize,
    pub dim: usize,
    pub separable: bool,
    pub weakly_separable: bool,
    pub exact_at_a1: bool,
    pub ker_ix_is_center: bool,
    /// present when `ρ = id`
    pub derivation_type: Option<DerivationTypeReport>,
    pub witnesses: Witnesses,
    pub bases: Bases,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub poly: String,
    pub dim: usize,
    /// `Der_B(A) = Inner`
    pub weakly_separable: bool,
    /// derivations flattened row-major as `dim × dim` matrices
    pub derivations: Basis,
    pub inner_derivations: Basis,
    pub delta_x: Basis,
    /// a derivation outside the inner ones, as matrix rows
    pub outer_derivation: Option<Vec<Vec<Int>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub degree: usize,
    pub poly: Vec<Vec<Int>>,
    pub text: String,
    pub separable: bool,
    pub weakly_separable: bool,
    pub oracle: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub coeff_modulus: u64,
    pub rank: usize,
    pub max_degree: usize,
    pub entries: Vec<CensusEntry>,
    pub instances: usize,
    pub separable: usize,
    pub weakly_separable: usize,
    pub disagreements: usize,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_basis(f: &mut fmt::Formatter<'_>, name: &str, basis: &Basis) -> fmt::Result {
    writeln!(f, "  {name}: {} generator(s)", basis.len())?;
    for row in basis {
        writeln!(f, "    {row:?}")?;
    }
    Ok(())
}

impl fmt::Display for ValidateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = if self.coeff_modulus == 0 {
            "Z".to_string()
        } else {
            format!("Z/{}", self.coeff_modulus)
        };
        writeln!(f, "ring valid: rank {} over {k}", self.rank)?;
        writeln!(f, "rho = id: {}", yes_no(self.rho_is_identity))?;
        writeln!(f, "D = 0: {}", yes_no(self.derivation_is_zero))?;
        match self.degree {
            Some(m) => writeln!(f, "poly: monic of degree {m}"),
            None => writeln!(f, "poly: none"),
        }
    }
}

impl fmt::Display for CheckR0Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "f = {}", self.poly)?;
        writeln!(f, "in R(0): {}", yes_no(self.in_r0))?;
        if let Some(why) = &self.failure {
            writeln!(f, "  {why}")?;
        }
        writeln!(f, "coefficients fixed by rho: {}", yes_no(self.coefficients_rho_fixed))
    }
}

impl fmt::Display for DecideReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "f = {}", self.poly)?;
        writeln!(
            f,
            "A = R/fR has rank {} over the coefficients (degree {})",
            self.dim, self.degree
        )?;
        writeln!(f, "separable: {}", yes_no(self.separable))?;
        writeln!(f, "weakly separable: {}", yes_no(self.weakly_separable))?;
        writeln!(f, "exact at A1: {}", yes_no(self.exact_at_a1))?;
        writeln!(f, "Ker(I_x|V) = C(A): {}", yes_no(self.ker_ix_is_center))?;
        if let Some(d) = &self.derivation_type {
            writeln!(f, "derivation type: tau(V) in C(A): {}", yes_no(d.tau_v_in_center))?;
        }
        if let Some(u) = &self.witnesses.separability {
            writeln!(f, "separability witness: {u:?}")?;
        }
        if let Some(u) = &self.witnesses.outer_seed {
            writeln!(f, "outer derivation seed: {u:?}")?;
        }
        writeln!(f, "subgroups:")?;
        write_basis(f, "V", &self.bases.v)?;
        write_basis(f, "C(A)", &self.bases.center)?;
        write_basis(f, "A1", &self.bases.a1)?;
        write_basis(f, "Ker tau", &self.bases.ker_tau)?;
        write_basis(f, "A1 ∩ Ker tau", &self.bases.a1_ker_tau)?;
        write_basis(f, "I_x(V)", &self.bases.ix_v)
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "f = {}", self.poly)?;
        writeln!(f, "every B-derivation of A is inner: {}", yes_no(self.weakly_separable))?;
        writeln!(f, "Der_B(A): {} generator(s)", self.derivations.len())?;
        writeln!(f, "inner derivations: {} generator(s)", self.inner_derivations.len())?;
        write_basis(f, "{delta(x)}", &self.delta_x)?;
        if let Some(m) = &self.outer_derivation {
            writeln!(f, "outer derivation:")?;
            for row in m {
                writeln!(f, "    {row:?}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let with_oracle = self.entries.iter().any(|e| e.oracle.is_some());
        writeln!(
            f,
            "{:>6}  {:>9}  {:>6}  {}",
            "degree",
            "separable",
            "weakly",
            if with_oracle { "oracle  f" } else { "f" }
        )?;
        for e in &self.entries {
            let oracle = match e.oracle {
                Some(o) => format!("{:>6}  ", yes_no(o)),
                None => String::new(),
            };
            writeln!(
                f,
                "{:>6}  {:>9}  {:>6}  {oracle}{}",
                e.degree,
                yes_no(e.separable),
                yes_no(e.weakly_separable),
                e.text
            )?;
        }
        writeln!(
            f,
            "{} instances: {} separable, {} weakly separable, {} oracle disagreements",
            self.instances, self.separable, self.weakly_separable, self.disagreements
        )
    }
}
