//! One function per subcommand; each returns its report or the error that
//! decides the exit code.

use num_bigint::BigInt;
use rayon::prelude::*;

use skewsep::sweep::{candidates, classify};
use skewsep::{
    a1_tau_kernel, d_type_checks, is_weakly_separable, oracle_weakly_separable, BaseRing, QuotientRing, RingElement,
    SkewPoly, Submodule,
};

use crate::problem::ints;
use crate::report::{
    Bases, Basis, Census, CensusEntry, CheckR0Report, DecideReport, DerivationTypeReport, OracleReport, ValidateReport,
    Witnesses,
};
use crate::{CliError, Problem};

fn basis(s: &Submodule) -> Basis {
    s.generators().iter().map(|g| ints(g)).collect()
}

fn element_text(b: &BaseRing, a: &RingElement) -> String {
    let terms: Vec<String> = a
        .coords()
        .iter()
        .zip(b.names())
        .filter(|(c, _)| **c != BigInt::from(0))
        .map(|(c, name)| {
            if *c == BigInt::from(1) {
                name.clone()
            } else {
                format!("{c}{name}")
            }
        })
        .collect();
    match terms.len() {
        0 => "0".into(),
        1 => terms[0].clone(),
        _ => format!("({})", terms.join(" + ")),
    }
}

/// `f` written highest degree first, e.g. `X^2 + X*(3e11 + e22) + (3e11 + e22)`.
pub fn poly_text(b: &BaseRing, f: &SkewPoly) -> String {
    let one = b.one();
    let terms: Vec<String> = f
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let x = match i {
                0 => String::new(),
                1 => "X".into(),
                _ => format!("X^{i}"),
            };
            match (x.is_empty(), *c == one) {
                (true, true) => "1".into(),
                (true, false) => element_text(b, c),
                (false, true) => x,
                (false, false) => format!("{x}*{}", element_text(b, c)),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn validate(p: &Problem) -> ValidateReport {
    let b = p.ring.base();
    ValidateReport {
        ring_valid: true,
        coeff_modulus: b.coeff().modulus(),
        rank: b.rank(),
        rho_is_identity: p.ring.rho().is_identity(),
        derivation_is_zero: p.ring.deriv().is_zero(),
        degree: p.f.as_ref().and_then(SkewPoly::degree),
    }
}

pub fn check_r0(p: &Problem) -> Result<CheckR0Report, CliError> {
    let f = p.poly()?;
    let check = p.ring.is_r0_by_coefficients(f)?;
    Ok(CheckR0Report {
        ring_valid: true,
        poly: poly_text(p.ring.base(), f),
        in_r0: check.in_r0,
        failure: check.failure.map(|e| e.to_string()),
        coefficients_rho_fixed: p.ring.coefficients_fixed_by_rho(f),
    })
}

fn quotient(p: &Problem) -> Result<QuotientRing, CliError> {
    Ok(QuotientRing::build(p.ring.clone(), p.poly()?.clone())?)
}

/// Runs both decisions; witnesses are attached only when asked for.
pub fn decide(p: &Problem, witness: bool) -> Result<DecideReport, CliError> {
    let a = quotient(p)?;
    let verdict = is_weakly_separable(&a)?;
    let derivation_type = if a.ring().is_derivation_type() {
        let d = d_type_checks(&a)?;
        Some(DerivationTypeReport {
            weakly_separable: d.weakly_separable,
            separable: d.separable,
            tau_v_in_center: d.tau_v_in_center,
        })
    } else {
        None
    };
    let witnesses = if witness {
        let outer = verdict
            .s1
            .generators()
            .into_iter()
            .find(|g| !verdict.s2.contains_vector(g).unwrap_or(true));
        Witnesses {
            separability: verdict.witness.as_ref().map(|u| ints(u.flat())),
            outer_seed: outer.map(|g| ints(&g)),
        }
    } else {
        Witnesses::default()
    };
    let v = a.centralizer_v();
    let ix_v = a.inner_x_image(&v)?;
    Ok(DecideReport {
        ring_valid: true,
        poly: poly_text(a.base(), a.f()),
        in_r0: true,
        degree: a.degree(),
        dim: a.dim(),
        separable: verdict.separable,
        weakly_separable: verdict.weakly_separable,
        exact_at_a1: verdict.exactness.exact_at_a1,
        ker_ix_is_center: verdict.exactness.ker_ix_is_center,
        derivation_type,
        witnesses,
        bases: Bases {
            v: basis(&v),
            center: basis(&a.center()),
            a1: basis(&a.twisted_centralizer(1)),
            ker_tau: basis(&a.tau_kernel()),
            a1_ker_tau: basis(&a1_tau_kernel(&a)),
            ix_v: basis(&ix_v),
        },
    })
}

pub fn oracle(p: &Problem) -> Result<OracleReport, CliError> {
    let a = quotient(p)?;
    let report = oracle_weakly_separable(&a)?;
    let n = a.dim();
    let outer = report
        .module
        .basis()
        .into_iter()
        .find(|d| !report.module.contains_inner(d).unwrap_or(true));
    Ok(OracleReport {
        poly: poly_text(a.base(), a.f()),
        dim: n,
        weakly_separable: report.weakly_separable,
        derivations: basis(&report.module.der),
        inner_derivations: basis(&report.module.inner),
        delta_x: basis(&report.delta_x),
        outer_derivation: outer.map(|d| d.row_vecs().iter().map(|r| ints(r)).collect()),
    })
}

/// Classifies every candidate of degree `1..=max_degree` over a finite base
/// ring. Instances are evaluated in parallel; entries keep enumeration order.
pub fn sweep(p: &Problem, max_degree: usize, with_oracle: bool) -> Result<Census, CliError> {
    let b = p.ring.base();
    if !b.coeff().is_finite() {
        return Err(CliError::Parse(
            "sweep needs a finite base ring (coeff_modulus >= 2)".into(),
        ));
    }
    let mut jobs = Vec::new();
    for m in 1..=max_degree {
        jobs.extend(candidates(&p.ring, m)?.into_iter().map(|f| (m, f)));
    }
    let entries = jobs
        .into_par_iter()
        .map(|(m, f)| {
            let c = classify(&p.ring, &f, with_oracle)?;
            Ok(CensusEntry {
                degree: m,
                poly: f.coeffs().iter().map(|c| ints(c.coords())).collect(),
                text: poly_text(b, &f),
                separable: c.separable,
                weakly_separable: c.weakly_separable,
                oracle: c.oracle,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(Census {
        coeff_modulus: b.coeff().modulus(),
        rank: b.rank(),
        max_degree,
        instances: entries.len(),
        separable: entries.iter().filter(|e| e.separable).count(),
        weakly_separable: entries.iter().filter(|e| e.weakly_separable).count(),
        disagreements: entries
            .iter()
            .filter(|e| e.oracle.is_some_and(|o| o != e.weakly_separable))
            .count(),
        entries,
    })
}
