use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::hnf::{hnf_integer, hnf_modular, to_big_rows, to_i128_rows};
use super::CoeffRing;
use crate::Error;

/// A subgroup of `k^N`, stored as the canonical row-style HNF basis of its
/// preimage lattice in `ℤ^N`.
///
/// Over ℤ/n the preimage contains `nℤ^N`, so the basis always has `N` rows and
/// every pivot divides `n`. Two submodules are equal exactly when their bases
/// are identical, which is what the derived `PartialEq` compares.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Submodule {
    coeff: CoeffRing,
    dim: usize,
    basis: Vec<Vec<BigInt>>,
}

impl Submodule {
    /// `hnf`: the canonical form of the subgroup generated by `gens`.
    pub fn from_generators(coeff: CoeffRing, dim: usize, gens: Vec<Vec<BigInt>>) -> Result<Self, Error> {
        if let Some(bad) = gens.iter().find(|g| g.len() != dim) {
            return Err(Error::Dimension(format!(
                "generator of length {} in ambient dimension {dim}",
                bad.len()
            )));
        }
        Ok(Self::from_generators_unchecked(coeff, dim, gens))
    }

    pub(crate) fn from_generators_unchecked(coeff: CoeffRing, dim: usize, gens: Vec<Vec<BigInt>>) -> Self {
        let basis = if coeff.is_integers() {
            hnf_integer(gens, dim).0
        } else {
            let n = coeff.modulus_big();
            let n128 = i128::from(coeff.modulus() as i64);
            to_big_rows(hnf_modular(to_i128_rows(&gens, &n), dim, n128))
        };
        Submodule { coeff, dim, basis }
    }

    pub fn zero(coeff: CoeffRing, dim: usize) -> Self {
        Self::from_generators_unchecked(coeff, dim, Vec::new())
    }

    pub fn full(coeff: CoeffRing, dim: usize) -> Self {
        let gens = (0..dim).map(|i| unit_vector(dim, i)).collect();
        Self::from_generators_unchecked(coeff, dim, gens)
    }

    pub fn coeff(&self) -> CoeffRing {
        self.coeff
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// The canonical basis of the preimage lattice (includes rows like `n·e_i` over ℤ/n).
    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    /// Basis rows that are nonzero in `k^N`, reduced into canonical representatives.
    pub fn generators(&self) -> Vec<Vec<BigInt>> {
        self.basis
            .iter()
            .map(|r| self.coeff.reduce_vec(r.clone()))
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect()
    }

    /// Number of nonzero canonical generators (the rank over ℤ, the dimension over a prime field).
    pub fn rank(&self) -> usize {
        self.generators().len()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.coeff, self.dim)
    }

    /// Number of elements over ℤ/n: `n^N / Π pivots`. `None` over ℤ unless zero.
    pub fn cardinality(&self) -> Option<BigInt> {
        if self.coeff.is_integers() {
            return self.basis.is_empty().then(BigInt::one);
        }
        let n = self.coeff.modulus_big();
        let mut size = BigInt::one();
        for (i, row) in self.basis.iter().enumerate() {
            size *= &n / &row[i];
        }
        Some(size)
    }

    fn check_same_space(&self, other: &Submodule) -> Result<(), Error> {
        if self.dim != other.dim || self.coeff != other.coeff {
            return Err(Error::Dimension(format!(
                "submodules of {}^{} and {}^{}",
                self.coeff, self.dim, other.coeff, other.dim
            )));
        }
        Ok(())
    }

    /// `sub_member`: whether `v` lies in the subgroup.
    pub fn contains_vector(&self, v: &[BigInt]) -> Result<bool, Error> {
        if v.len() != self.dim {
            return Err(Error::Dimension(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.dim
            )));
        }
        Ok(self.reduce_vector(v).iter().all(Zero::is_zero))
    }

    /// Remainder of `v` after echelon reduction against the basis.
    fn reduce_vector(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut r = self.coeff.reduce_vec(v.to_vec());
        let mut row_iter = self.basis.iter().peekable();
        for c in 0..self.dim {
            let Some(row) = row_iter.peek() else { break };
            let pivot = row.iter().position(|x| !x.is_zero()).expect("nonzero basis row");
            if pivot != c {
                if !r[c].is_zero() {
                    return r;
                }
                continue;
            }
            let (q, rem) = r[c].div_rem(&row[c]);
            if !rem.is_zero() {
                return r;
            }
            if !q.is_zero() {
                for (x, y) in r[c..].iter_mut().zip(&row[c..]) {
                    *x -= &q * y;
                }
            }
            row_iter.next();
        }
        if self.coeff.is_finite() {
            r = self.coeff.reduce_vec(r);
        }
        r
    }

    /// `sub_contains`: whether `other ⊆ self`.
    pub fn contains(&self, other: &Submodule) -> Result<bool, Error> {
        self.check_same_space(other)?;
        for row in &other.basis {
            if !self.contains_vector(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `sub_equal`: canonical-basis comparison.
    pub fn equals(&self, other: &Submodule) -> Result<bool, Error> {
        self.check_same_space(other)?;
        Ok(self == other)
    }

    /// `sub_intersect`, computed from the lattice spanned by `(a, a)` and `(b, 0)`:
    /// its vectors with vanishing first half carry `a ∩ b` in the second half.
    pub fn intersect(&self, other: &Submodule) -> Result<Submodule, Error> {
        self.check_same_space(other)?;
        let d = self.dim;
        let mut gens = Vec::with_capacity(self.basis.len() + other.basis.len());
        for a in &self.basis {
            let mut row = a.clone();
            row.extend(a.iter().cloned());
            gens.push(row);
        }
        for b in &other.basis {
            let mut row = b.clone();
            row.extend(std::iter::repeat_n(BigInt::zero(), d));
            gens.push(row);
        }
        let tail = lower_block(self.coeff, gens, d, d);
        Ok(Self::from_generators_unchecked(self.coeff, d, tail))
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule, Error> {
        self.check_same_space(other)?;
        let gens = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Self::from_generators_unchecked(self.coeff, self.dim, gens))
    }
}

/// For generators of a lattice in `ℤ^{head + tail}`, returns generators of the
/// projection onto the tail of the sublattice whose head coordinates vanish.
/// Over ℤ/n, `n·e_i` is adjoined in every coordinate.
pub(crate) fn lower_block(coeff: CoeffRing, gens: Vec<Vec<BigInt>>, head: usize, tail: usize) -> Vec<Vec<BigInt>> {
    let dim = head + tail;
    if coeff.is_integers() {
        let (basis, pivots) = hnf_integer(gens, dim);
        basis
            .into_iter()
            .zip(pivots)
            .filter(|(_, p)| *p >= head)
            .map(|(r, _)| r[head..].to_vec())
            .collect()
    } else {
        let n = coeff.modulus_big();
        let n128 = i128::from(coeff.modulus() as i64);
        let basis = hnf_modular(to_i128_rows(&gens, &n), dim, n128);
        to_big_rows(basis.into_iter().skip(head).map(|r| r[head..].to_vec()).collect())
    }
}

pub(crate) fn unit_vector(dim: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); dim];
    v[i] = BigInt::one();
    v
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule[{}^{}]{:?}", self.coeff, self.dim, self.generators())
    }
}
