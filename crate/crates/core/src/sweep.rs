//! Enumeration of monic `f ∈ R(0) ∩ B^ρ[X]` of bounded degree over a finite
//! base ring, and per-instance classification.

use std::sync::Arc;

use crate::base_ring::RingElement;
use crate::quotient::QuotientRing;
use crate::separability::{is_weakly_separable, oracle_weakly_separable};
use crate::skew_poly::{SkewPoly, SkewPolyRing};
use crate::Error;

/// Elements of `B` fixed by `ρ`, in lexicographic coordinate order.
pub fn rho_fixed_elements(ring: &SkewPolyRing) -> Result<Vec<RingElement>, Error> {
    Ok(ring
        .base()
        .elements()?
        .into_iter()
        .filter(|a| ring.rho().apply(a) == *a)
        .collect())
}

/// Every monic `f` of the given degree with `ρ`-fixed coefficients that passes
/// the `R(0)` criterion; `a_0` varies fastest.
pub fn candidates(ring: &SkewPolyRing, degree: usize) -> Result<Vec<SkewPoly>, Error> {
    if degree == 0 {
        return Err(Error::Usage("candidates need degree >= 1".into()));
    }
    let fixed = rho_fixed_elements(ring)?;
    let mut out = Vec::new();
    let mut idx = vec![0usize; degree];
    loop {
        let mut coeffs: Vec<RingElement> = idx.iter().map(|&i| fixed[i].clone()).collect();
        coeffs.push(ring.base().one());
        let f = ring.poly(coeffs)?;
        if ring.is_r0_by_coefficients(&f)?.in_r0 {
            out.push(f);
        }
        // odometer over coefficient indices
        let mut pos = 0;
        loop {
            if pos == degree {
                return Ok(out);
            }
            idx[pos] += 1;
            if idx[pos] < fixed.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub f: SkewPoly,
    pub separable: bool,
    pub weakly_separable: bool,
    /// `Der_B(A) = Inner`, when the oracle was requested
    pub oracle: Option<bool>,
}

impl Classification {
    pub fn agrees(&self) -> bool {
        self.oracle.is_none_or(|o| o == self.weakly_separable)
    }
}

/// Decides one instance; `with_oracle` additionally runs the derivation oracle.
pub fn classify(ring: &Arc<SkewPolyRing>, f: &SkewPoly, with_oracle: bool) -> Result<Classification, Error> {
    let a = QuotientRing::build(ring.clone(), f.clone())?;
    let verdict = is_weakly_separable(&a)?;
    let oracle = if with_oracle {
        Some(oracle_weakly_separable(&a)?.weakly_separable)
    } else {
        None
    };
    Ok(Classification {
        f: f.clone(),
        separable: verdict.separable,
        weakly_separable: verdict.weakly_separable,
        oracle,
    })
}
