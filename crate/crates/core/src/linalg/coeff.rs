use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// The coefficient domain: the integers (modulus 0) or the residue ring ℤ/n.
///
/// `n` need not be prime. Moduli are capped at `i64::MAX` so the modular
/// echelon kernels can work in `i128` without overflow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoeffRing {
    modulus: u64,
}

impl CoeffRing {
    pub const INTEGERS: CoeffRing = CoeffRing { modulus: 0 };

    pub fn new(modulus: u64) -> Result<Self, Error> {
        if modulus == 1 {
            return Err(Error::Usage("coefficient modulus 1 gives the zero ring".into()));
        }
        if modulus > i64::MAX as u64 {
            return Err(Error::Usage(format!("coefficient modulus {modulus} is too large")));
        }
        Ok(CoeffRing { modulus })
    }

    pub fn integers() -> Self {
        Self::INTEGERS
    }

    pub fn modulo(n: u64) -> Self {
        Self::new(n).expect("valid modulus")
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_integers(&self) -> bool {
        self.modulus == 0
    }

    pub fn is_finite(&self) -> bool {
        self.modulus != 0
    }

    pub fn modulus_big(&self) -> BigInt {
        BigInt::from(self.modulus)
    }

    /// Canonical representative: unchanged over ℤ, in `[0, n)` over ℤ/n.
    pub fn reduce(&self, x: BigInt) -> BigInt {
        if self.modulus == 0 {
            x
        } else {
            x.mod_floor(&self.modulus_big())
        }
    }

    pub fn reduce_vec(&self, v: Vec<BigInt>) -> Vec<BigInt> {
        if self.modulus == 0 {
            v
        } else {
            let n = self.modulus_big();
            v.into_iter().map(|x| x.mod_floor(&n)).collect()
        }
    }

    pub fn from_i64(&self, x: i64) -> BigInt {
        self.reduce(BigInt::from(x))
    }

    pub fn is_zero(&self, x: &BigInt) -> bool {
        if self.modulus == 0 {
            x.is_zero()
        } else {
            (x % self.modulus_big()).is_zero()
        }
    }

    pub fn is_unit(&self, x: &BigInt) -> bool {
        if self.modulus == 0 {
            x.abs().is_one()
        } else {
            x.gcd(&self.modulus_big()).is_one()
        }
    }

    /// Multiplicative inverse, if `x` is a unit.
    pub fn inverse(&self, x: &BigInt) -> Option<BigInt> {
        if self.modulus == 0 {
            return if x.abs().is_one() { Some(x.clone()) } else { None };
        }
        let n = self.modulus_big();
        let e = x.mod_floor(&n).extended_gcd(&n);
        if e.gcd.is_one() {
            Some(e.x.mod_floor(&n))
        } else {
            None
        }
    }

    /// Number of elements, `None` over ℤ.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then_some(self.modulus)
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            write!(f, "Z")
        } else {
            write!(f, "Z/{}", self.modulus)
        }
    }
}
