//! The JSON problem file: a base ring, `ρ`, `D` and optionally a polynomial.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use skewsep::{BaseRing, CoeffRing, Matrix, RingElement, RingMap, SkewPoly, SkewPolyRing};

use crate::CliError;

/// An arbitrary-precision integer written as a plain JSON number.
#[derive(Clone, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<&BigInt> for Int {
    fn from(x: &BigInt) -> Self {
        Int(x.clone())
    }
}

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n = serde_json::Number::from_str(&self.0.to_string()).map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        let s = n.to_string();
        s.parse::<BigInt>()
            .map(Int)
            .map_err(|_| D::Error::custom(format!("expected an integer, found {s}")))
    }
}

pub fn ints(xs: &[BigInt]) -> Vec<Int> {
    xs.iter().map(Int::from).collect()
}

fn bigs(xs: &[Int]) -> Vec<BigInt> {
    xs.iter().map(|x| x.0.clone()).collect()
}

/// On-disk layout. Matrices are row lists acting on coordinate columns, so
/// column `i` of `rho` holds `ρ(e_i)`. `structure_constants[i][j][k]` is the
/// coefficient of `e_k` in `e_i·e_j`. `poly` lists the right coefficients
/// `a_0, …, a_m` of `f = Σ X^i a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub coeff_modulus: u64,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    pub unit: Vec<Int>,
    pub structure_constants: Vec<Vec<Vec<Int>>>,
    pub rho: Vec<Vec<Int>>,
    pub derivation: Vec<Vec<Int>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<Vec<Vec<Int>>>,
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    /// The file describing `ring` and, if given, `f`.
    pub fn describe(ring: &SkewPolyRing, f: Option<&SkewPoly>) -> Self {
        let b = ring.base();
        let structure = b
            .structure()
            .iter()
            .map(|plane| plane.iter().map(|line| ints(line)).collect())
            .collect();
        let rows = |m: &Matrix| m.row_vecs().iter().map(|r| ints(r)).collect();
        ProblemFile {
            coeff_modulus: b.coeff().modulus(),
            rank: b.rank(),
            basis_names: Some(b.names().to_vec()),
            unit: ints(b.one().coords()),
            structure_constants: structure,
            rho: rows(ring.rho().matrix()),
            derivation: rows(ring.deriv().matrix()),
            poly: f.map(|f| f.coeffs().iter().map(|c| ints(c.coords())).collect()),
        }
    }

    fn check_shapes(&self) -> Result<(), CliError> {
        let r = self.rank;
        let shape = |field: &str, found: usize| {
            CliError::Parse(format!("{field}: expected {r} entries for rank {r}, found {found}"))
        };
        if r == 0 {
            return Err(CliError::Parse("rank: must be at least 1".into()));
        }
        if self.coeff_modulus == 1 {
            return Err(CliError::Parse(
                "coeff_modulus: must be 0 (integers) or at least 2".into(),
            ));
        }
        if let Some(names) = &self.basis_names {
            if names.len() != r {
                return Err(shape("basis_names", names.len()));
            }
        }
        if self.unit.len() != r {
            return Err(shape("unit", self.unit.len()));
        }
        if self.structure_constants.len() != r {
            return Err(shape("structure_constants", self.structure_constants.len()));
        }
        for (i, plane) in self.structure_constants.iter().enumerate() {
            if plane.len() != r {
                return Err(shape(&format!("structure_constants[{i}]"), plane.len()));
            }
            for (j, line) in plane.iter().enumerate() {
                if line.len() != r {
                    return Err(shape(&format!("structure_constants[{i}][{j}]"), line.len()));
                }
            }
        }
        for (field, m) in [("rho", &self.rho), ("derivation", &self.derivation)] {
            if m.len() != r {
                return Err(shape(field, m.len()));
            }
            for (i, row) in m.iter().enumerate() {
                if row.len() != r {
                    return Err(shape(&format!("{field}[{i}]"), row.len()));
                }
            }
        }
        if let Some(poly) = &self.poly {
            if poly.len() < 2 {
                return Err(CliError::Parse(
                    "poly: need a monic polynomial of degree at least 1".into(),
                ));
            }
            for (i, c) in poly.iter().enumerate() {
                if c.len() != r {
                    return Err(shape(&format!("poly[{i}]"), c.len()));
                }
            }
        }
        Ok(())
    }
}

/// A validated ring together with the optional polynomial.
pub struct Problem {
    pub ring: Arc<SkewPolyRing>,
    pub f: Option<SkewPoly>,
}

impl Problem {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Self::from_file(&ProblemFile::parse(text)?)
    }

    /// Checks shapes, then ring axioms and the laws of `ρ` and `D`.
    pub fn from_file(file: &ProblemFile) -> Result<Self, CliError> {
        file.check_shapes()?;
        let coeff = CoeffRing::new(file.coeff_modulus)?;
        let structure = file
            .structure_constants
            .iter()
            .map(|plane| plane.iter().map(|line| bigs(line)).collect())
            .collect();
        let mut base = BaseRing::new(coeff, structure, bigs(&file.unit))?;
        if let Some(names) = &file.basis_names {
            base = base.with_names(names.clone())?;
        }
        let map = |m: &[Vec<Int>]| -> Result<RingMap, CliError> {
            let rows: Vec<Vec<BigInt>> = m.iter().map(|r| bigs(r)).collect();
            Ok(RingMap::new(Matrix::from_rows(coeff, &rows)?)?)
        };
        let rho = map(&file.rho)?;
        let deriv = map(&file.derivation)?;
        let ring = Arc::new(SkewPolyRing::new(base, rho, deriv)?);
        let f = match &file.poly {
            None => None,
            Some(raw) => {
                let b = ring.base();
                let coeffs: Vec<RingElement> = raw.iter().map(|c| b.element(bigs(c))).collect::<Result<_, _>>()?;
                if coeffs.last() != Some(&b.one()) {
                    return Err(CliError::Parse("poly: leading coefficient must equal unit".into()));
                }
                Some(ring.poly(coeffs)?)
            }
        };
        Ok(Problem { ring, f })
    }

    pub fn poly(&self) -> Result<&SkewPoly, CliError> {
        self.f
            .as_ref()
            .ok_or_else(|| CliError::Parse("poly: this command needs a polynomial".into()))
    }
}
