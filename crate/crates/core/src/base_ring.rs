//! Base rings given by structure constants, together with their additive
//! endomorphisms (automorphisms `ρ`, `ρ`-derivations `D`, and every map built
//! from them).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::linalg::{self, inverse, CoeffRing, Matrix, Submodule};
use crate::Error;

/// Coordinates of an element of `B` in the fixed `k`-basis `e_0, …, e_{r-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElement(Vec<BigInt>);

impl RingElement {
    /// Coordinates are taken as given; they must already be reduced.
    pub(crate) fn from_coords(coords: Vec<BigInt>) -> Self {
        RingElement(coords)
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// A failed ring axiom or map law, located on basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotAssociative { i: usize, j: usize, k: usize },
    LeftUnit { i: usize },
    RightUnit { i: usize },
    NotMultiplicative { i: usize, j: usize },
    UnitNotPreserved,
    NotInvertible,
    Leibniz { i: usize, j: usize },
    DerivationOfOne,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotAssociative { i, j, k } => write!(f, "(e{i}*e{j})*e{k} != e{i}*(e{j}*e{k})"),
            Violation::LeftUnit { i } => write!(f, "1*e{i} != e{i}"),
            Violation::RightUnit { i } => write!(f, "e{i}*1 != e{i}"),
            Violation::NotMultiplicative { i, j } => write!(f, "rho(e{i}*e{j}) != rho(e{i})*rho(e{j})"),
            Violation::UnitNotPreserved => write!(f, "rho(1) != 1"),
            Violation::NotInvertible => write!(f, "rho is not invertible"),
            Violation::Leibniz { i, j } => {
                write!(f, "D(e{i}*e{j}) != D(e{i})*rho(e{j}) + e{i}*D(e{j})")
            }
            Violation::DerivationOfOne => write!(f, "D(1) != 0"),
        }
    }
}

/// `B` as a free `k`-module of rank `r` with `e_i·e_j = Σ_k c[i][j][k]·e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseRing {
    coeff: CoeffRing,
    rank: usize,
    /// nonzero structure constants, indexed by `i * rank + j`
    table: Vec<Vec<(usize, BigInt)>>,
    unit: RingElement,
    names: Vec<String>,
}

impl BaseRing {
    pub fn new(coeff: CoeffRing, structure: Vec<Vec<Vec<BigInt>>>, unit: Vec<BigInt>) -> Result<Self, Error> {
        let rank = structure.len();
        if rank == 0 {
            return Err(Error::Dimension("base ring needs rank >= 1".into()));
        }
        if unit.len() != rank {
            return Err(Error::Dimension(format!(
                "unit has length {}, rank is {rank}",
                unit.len()
            )));
        }
        let mut table = Vec::with_capacity(rank * rank);
        for (i, plane) in structure.into_iter().enumerate() {
            if plane.len() != rank {
                return Err(Error::Dimension(format!(
                    "structure[{i}] has {} rows, expected {rank}",
                    plane.len()
                )));
            }
            for (j, line) in plane.into_iter().enumerate() {
                if line.len() != rank {
                    return Err(Error::Dimension(format!(
                        "structure[{i}][{j}] has {} entries, expected {rank}",
                        line.len()
                    )));
                }
                let nz = line
                    .into_iter()
                    .map(|c| coeff.reduce(c))
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                table.push(nz);
            }
        }
        let names = (0..rank).map(|i| format!("e{i}")).collect();
        Ok(BaseRing {
            coeff,
            rank,
            table,
            unit: RingElement(coeff.reduce_vec(unit)),
            names,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, Error> {
        if names.len() != self.rank {
            return Err(Error::Dimension(format!(
                "{} basis names for rank {}",
                names.len(),
                self.rank
            )));
        }
        self.names = names;
        Ok(self)
    }

    /// `B = k` itself.
    pub fn scalars(coeff: CoeffRing) -> Self {
        Self::new(coeff, vec![vec![vec![BigInt::one()]]], vec![BigInt::one()]).expect("rank one ring")
    }

    pub fn coeff(&self) -> CoeffRing {
        self.coeff
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> BigInt {
        self.table[i * self.rank + j]
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// The full `r×r×r` array of structure constants.
    pub fn structure(&self) -> Vec<Vec<Vec<BigInt>>> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| (0..self.rank).map(|k| self.structure_constant(i, j, k)).collect())
                    .collect()
            })
            .collect()
    }

    pub fn one(&self) -> RingElement {
        self.unit.clone()
    }

    pub fn zero(&self) -> RingElement {
        RingElement(vec![BigInt::zero(); self.rank])
    }

    pub fn basis_element(&self, i: usize) -> RingElement {
        RingElement(linalg::unit_vector(self.rank, i))
    }

    pub fn basis(&self) -> Vec<RingElement> {
        (0..self.rank).map(|i| self.basis_element(i)).collect()
    }

    pub fn element(&self, coords: Vec<BigInt>) -> Result<RingElement, Error> {
        if coords.len() != self.rank {
            return Err(Error::Dimension(format!(
                "element with {} coordinates in rank {}",
                coords.len(),
                self.rank
            )));
        }
        Ok(RingElement(self.coeff.reduce_vec(coords)))
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<RingElement, Error> {
        self.element(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub(crate) fn element_unchecked(&self, coords: Vec<BigInt>) -> RingElement {
        RingElement(self.coeff.reduce_vec(coords))
    }

    fn check(&self, a: &RingElement) -> Result<(), Error> {
        if a.len() != self.rank {
            return Err(Error::Usage(format!(
                "element of length {} does not belong to a rank {} ring",
                a.len(),
                self.rank
            )));
        }
        Ok(())
    }

    /// `ring_mul`: the bilinear product through the structure constants.
    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement, Error> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_raw(a, b))
    }

    pub(crate) fn mul_raw(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let mut out = vec![BigInt::zero(); self.rank];
        for (i, ai) in a.0.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.0.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let entries = &self.table[i * self.rank + j];
                if entries.is_empty() {
                    continue;
                }
                let ab = ai * bj;
                for (k, c) in entries {
                    out[*k] += &ab * c;
                }
            }
        }
        self.element_unchecked(out)
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.element_unchecked(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.element_unchecked(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        self.element_unchecked(a.0.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, a: &RingElement, s: &BigInt) -> RingElement {
        self.element_unchecked(a.0.iter().map(|x| x * s).collect())
    }

    /// Every element of a finite base ring, in lexicographic coordinate order.
    pub fn elements(&self) -> Result<Vec<RingElement>, Error> {
        let n = self
            .coeff
            .order()
            .ok_or_else(|| Error::Usage("cannot enumerate a ring over Z".into()))?;
        let total = (n as u128).checked_pow(self.rank as u32).filter(|&t| t <= 1 << 24);
        let total = total.ok_or_else(|| Error::Usage("base ring too large to enumerate".into()))?;
        Ok((0..total)
            .map(|mut idx| {
                let mut c = vec![BigInt::zero(); self.rank];
                for slot in c.iter_mut().rev() {
                    *slot = BigInt::from(idx % n as u128);
                    idx /= n as u128;
                }
                RingElement(c)
            })
            .collect())
    }

    /// Matrix of `β ↦ a·β`.
    pub fn left_mul_matrix(&self, a: &RingElement) -> Matrix {
        let cols: Vec<Vec<BigInt>> = (0..self.rank)
            .map(|i| self.mul_raw(a, &self.basis_element(i)).0)
            .collect();
        Matrix::from_columns(self.coeff, self.rank, &cols).expect("square")
    }

    /// Matrix of `β ↦ β·a`.
    pub fn right_mul_matrix(&self, a: &RingElement) -> Matrix {
        let cols: Vec<Vec<BigInt>> = (0..self.rank)
            .map(|i| self.mul_raw(&self.basis_element(i), a).0)
            .collect();
        Matrix::from_columns(self.coeff, self.rank, &cols).expect("square")
    }

    /// `validate_ring`: associativity on all basis triples and the unit laws.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let basis = self.basis();
        for i in 0..self.rank {
            for j in 0..self.rank {
                let ij = self.mul_raw(&basis[i], &basis[j]);
                for k in 0..self.rank {
                    let jk = self.mul_raw(&basis[j], &basis[k]);
                    if self.mul_raw(&ij, &basis[k]) != self.mul_raw(&basis[i], &jk) {
                        out.push(Violation::NotAssociative { i, j, k });
                    }
                }
            }
        }
        for (i, e) in basis.iter().enumerate() {
            if self.mul_raw(&self.unit, e) != *e {
                out.push(Violation::LeftUnit { i });
            }
            if self.mul_raw(e, &self.unit) != *e {
                out.push(Violation::RightUnit { i });
            }
        }
        out
    }

    /// `validate_automorphism`: multiplicative on basis pairs, unital, invertible over `k`.
    pub fn validate_automorphism(&self, rho: &RingMap) -> Vec<Violation> {
        let mut out = Vec::new();
        let basis = self.basis();
        let images: Vec<RingElement> = basis.iter().map(|e| rho.apply(e)).collect();
        for i in 0..self.rank {
            for j in 0..self.rank {
                let lhs = rho.apply(&self.mul_raw(&basis[i], &basis[j]));
                if lhs != self.mul_raw(&images[i], &images[j]) {
                    out.push(Violation::NotMultiplicative { i, j });
                }
            }
        }
        if rho.apply(&self.unit) != self.unit {
            out.push(Violation::UnitNotPreserved);
        }
        if rho.inverse().is_none() {
            out.push(Violation::NotInvertible);
        }
        out
    }

    /// `validate_derivation`: `D(ab) = D(a)ρ(b) + aD(b)` on basis pairs and `D(1) = 0`.
    pub fn validate_derivation(&self, deriv: &RingMap, rho: &RingMap) -> Vec<Violation> {
        let mut out = Vec::new();
        let basis = self.basis();
        for i in 0..self.rank {
            for j in 0..self.rank {
                let lhs = deriv.apply(&self.mul_raw(&basis[i], &basis[j]));
                let rhs = self.add(
                    &self.mul_raw(&deriv.apply(&basis[i]), &rho.apply(&basis[j])),
                    &self.mul_raw(&basis[i], &deriv.apply(&basis[j])),
                );
                if lhs != rhs {
                    out.push(Violation::Leibniz { i, j });
                }
            }
        }
        if !deriv.apply(&self.unit).is_zero() {
            out.push(Violation::DerivationOfOne);
        }
        out
    }

    /// Elements fixed by (`FixMode::Fixed`) or killed by (`FixMode::Kernel`) every listed map.
    pub fn fixed_subring(&self, maps: &[(&RingMap, FixMode)]) -> Submodule {
        if maps.is_empty() {
            return Submodule::full(self.coeff, self.rank);
        }
        let id = Matrix::identity(self.coeff, self.rank);
        let blocks: Vec<Matrix> = maps
            .iter()
            .map(|(m, mode)| match mode {
                FixMode::Fixed => m.matrix().sub(&id).expect("square map"),
                FixMode::Kernel => m.matrix().clone(),
            })
            .collect();
        let stacked = Matrix::vstack(self.coeff, self.rank, &blocks).expect("square maps");
        linalg::kernel(&stacked)
    }

    /// `{α ∈ s : αβ = βα for all β ∈ s}`; commutation is imposed against generators of `s` only.
    pub fn centralizer_in(&self, s: &Submodule) -> Result<Submodule, Error> {
        if s.ambient_dim() != self.rank || s.coeff() != self.coeff {
            return Err(Error::Dimension("subgroup does not live in this ring".into()));
        }
        let blocks: Vec<Matrix> = s
            .generators()
            .into_iter()
            .map(|g| {
                let g = RingElement(g);
                self.right_mul_matrix(&g)
                    .sub(&self.left_mul_matrix(&g))
                    .expect("square")
            })
            .collect();
        if blocks.is_empty() {
            return Ok(s.clone());
        }
        let stacked = Matrix::vstack(self.coeff, self.rank, &blocks)?;
        linalg::restricted_kernel(s, &stacked)
    }

    pub fn contains(&self, s: &Submodule, a: &RingElement) -> Result<bool, Error> {
        s.contains_vector(a.coords())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixMode {
    /// `{α : φ(α) = α}`
    Fixed,
    /// `{α : φ(α) = 0}`
    Kernel,
}

/// A `k`-linear endomorphism of `B`; column `i` of the matrix is the image of `e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMap {
    matrix: Matrix,
}

impl RingMap {
    pub fn new(matrix: Matrix) -> Result<Self, Error> {
        if !matrix.is_square() {
            return Err(Error::Dimension(format!(
                "ring map must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(RingMap { matrix })
    }

    pub fn identity(ring: &BaseRing) -> Self {
        RingMap {
            matrix: Matrix::identity(ring.coeff, ring.rank),
        }
    }

    pub fn zero(ring: &BaseRing) -> Self {
        RingMap {
            matrix: Matrix::zero(ring.coeff, ring.rank, ring.rank),
        }
    }

    /// The map sending `e_i` to `images[i]`.
    pub fn from_images(ring: &BaseRing, images: &[RingElement]) -> Result<Self, Error> {
        if images.len() != ring.rank {
            return Err(Error::Dimension(format!(
                "{} images for rank {}",
                images.len(),
                ring.rank
            )));
        }
        let cols: Vec<Vec<BigInt>> = images.iter().map(|e| e.0.clone()).collect();
        Ok(RingMap {
            matrix: Matrix::from_columns(ring.coeff, ring.rank, &cols)?,
        })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, a: &RingElement) -> RingElement {
        RingElement(self.matrix.mul_vec_unchecked(&a.0))
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &RingMap) -> RingMap {
        RingMap {
            matrix: self.matrix.mul(&other.matrix).expect("equal rank"),
        }
    }

    pub fn add(&self, other: &RingMap) -> RingMap {
        RingMap {
            matrix: self.matrix.add(&other.matrix).expect("equal rank"),
        }
    }

    pub fn pow(&self, k: u32) -> RingMap {
        let mut out = RingMap {
            matrix: Matrix::identity(self.matrix.coeff(), self.dim()),
        };
        for _ in 0..k {
            out = out.compose(self);
        }
        out
    }

    /// `self^k` for any integer `k`; `None` when `k < 0` and the map is not invertible.
    pub fn pow_signed(&self, k: i64) -> Option<RingMap> {
        if k >= 0 {
            Some(self.pow(k as u32))
        } else {
            Some(self.inverse()?.pow(k.unsigned_abs() as u32))
        }
    }

    pub fn inverse(&self) -> Option<RingMap> {
        inverse(&self.matrix).map(|matrix| RingMap { matrix })
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.matrix.coeff(), self.dim())
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}
