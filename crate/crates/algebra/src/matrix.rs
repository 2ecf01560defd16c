//! Neutrosophic matrices.
//!
//! Arithmetic is plain matrix algebra over the ring. The two places the
//! ring structure bites are division-like operations: the determinant is
//! computed by cofactor expansion (no pivoting, since entries may be zero
//! divisors), and the inverse goes through the slot fields, where honest
//! Gaussian elimination is available, and recombines.
//!
//! The characteristic polynomial is computed twice on purpose: once
//! symbolically as det(x·Id − A) over polynomial entries, once classically
//! per slot. The paths share no code, and every call cross-checks them.

use std::fmt;

use crate::error::{NError, Result};
use crate::field::{FieldDescriptor, Flavor};
use crate::kmatrix::KMatrix;
use crate::poly::NPoly;
use crate::scalar::{NNum, Slot};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NMatrix {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    data: Vec<NNum>,
}

impl NMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<NNum>, field: FieldDescriptor) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(NError::ShapeMismatch);
        }
        let data = data
            .into_iter()
            .map(|x| x.widen(field))
            .collect::<Result<Vec<_>>>()?;
        Ok(NMatrix { field, rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<NNum>>, field: FieldDescriptor) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(NError::ShapeMismatch);
        }
        Self::new(r, c, rows.into_iter().flatten().collect(), field)
    }

    /// Test helper: entries as (real, I) integer pairs, row-major.
    pub fn from_pairs(rows: &[&[(i64, i64)]], field: FieldDescriptor) -> Result<Self> {
        let grid = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&(a, b)| NNum::from_i64(a, b, field))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(grid, field)
    }

    pub fn zero(rows: usize, cols: usize, field: FieldDescriptor) -> Self {
        NMatrix {
            field,
            rows,
            cols,
            data: vec![NNum::zero(field); rows * cols],
        }
    }

    /// Identity in the flavor's matrix ring (diagonal of ring identities).
    pub fn identity(n: usize, field: FieldDescriptor) -> Self {
        let mut m = Self::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, NNum::one(field));
        }
        m
    }

    pub fn diagonal(entries: &[NNum], field: FieldDescriptor) -> Result<Self> {
        let n = entries.len();
        let mut m = Self::zero(n, n, field);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.widen(field)?);
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &NNum {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: NNum) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<NNum> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<NNum> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[NNum] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(NError::ShapeMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let field = self.field.join(other.field)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.rows, self.cols, data, field)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        NMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &NNum) -> Result<Self> {
        let field = self.field.join(c.field)?;
        let data = self
            .data
            .iter()
            .map(|x| x.mul(c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.rows, self.cols, data, field)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(NError::ShapeMismatch);
        }
        let field = self.field.join(other.field)?;
        let mut out = Self::zero(self.rows, other.cols, field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).add(&a.mul(other.get(k, j))?)?;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[NNum]) -> Result<Vec<NNum>> {
        if v.len() != self.cols {
            return Err(NError::ShapeMismatch);
        }
        (0..self.rows)
            .map(|i| {
                let mut acc = NNum::zero(self.field);
                for j in 0..self.cols {
                    acc = acc.add(&self.get(i, j).mul(&v[j])?)?;
                }
                Ok(acc)
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Result<Self> {
        self.require_square()?;
        let mut acc = Self::identity(self.rows, self.field);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b)?;
            }
            b = b.mul(&b)?;
            e >>= 1;
        }
        Ok(acc)
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(NError::NonSquare(self.rows, self.cols));
        }
        Ok(())
    }

    /// Entrywise slot evaluation.
    pub fn eval_slot(&self, slot: Slot) -> KMatrix {
        KMatrix::new(
            self.rows,
            self.cols,
            self.data.iter().map(|x| x.eval(slot)).collect(),
            self.field.base,
        )
    }

    pub fn split(&self) -> (KMatrix, KMatrix) {
        (self.eval_slot(Slot::At0), self.eval_slot(Slot::At1))
    }

    /// Entrywise recombination: the unique A with ε₀(A) = m0, ε₁(A) = m1.
    pub fn recombine(m0: &KMatrix, m1: &KMatrix, field: FieldDescriptor) -> Result<Self> {
        if m0.rows() != m1.rows() || m0.cols() != m1.cols() {
            return Err(NError::ShapeMismatch);
        }
        if m0.base() != field.base || m1.base() != field.base {
            return Err(NError::FieldMismatch);
        }
        let mut data = Vec::with_capacity(m0.rows() * m0.cols());
        for i in 0..m0.rows() {
            for j in 0..m0.cols() {
                data.push(NNum::recombine(m0.get(i, j), m1.get(i, j), field)?);
            }
        }
        Self::new(m0.rows(), m0.cols(), data, field)
    }

    /// Rebuilds from a single chart image (real or pure fields only).
    pub fn from_chart(m: &KMatrix, field: FieldDescriptor) -> Result<Self> {
        use crate::field::BaseElem;
        let mut data = Vec::with_capacity(m.rows() * m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let c = m.get(i, j).clone();
                data.push(match field.flavor {
                    Flavor::PureNeutrosophic => {
                        NNum::from_parts(BaseElem::zero(field.base), c, field)?
                    }
                    _ => NNum::from_parts(c, BaseElem::zero(field.base), field)?,
                });
            }
        }
        Self::new(m.rows(), m.cols(), data, field)
    }

    /// Determinant by cofactor expansion along the first row. Division-free,
    /// hence valid over the ring; the slot images are checked in tests
    /// against classical elimination.
    pub fn det(&self) -> Result<NNum> {
        self.require_square()?;
        Ok(cofactor_det(&self.data, self.rows, self.field))
    }

    /// det(x·Id − A) expanded symbolically over polynomial entries, then
    /// cross-checked against the division-free classical computation on
    /// each slot image. The two paths are independent; disagreement is a
    /// bug, not a data condition.
    pub fn charpoly(&self) -> Result<NPoly> {
        self.require_square()?;
        let n = self.rows;
        let field = self.field;
        let mut grid: Vec<NPoly> = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let neg = NPoly::constant(self.get(i, j).neg());
                if i == j {
                    grid.push(NPoly::x(field).add(&neg)?);
                } else {
                    grid.push(neg);
                }
            }
        }
        let p = poly_cofactor_det(&grid, n, field)?;
        match field.flavor {
            Flavor::FullNeutrosophic => {
                for s in [Slot::At0, Slot::At1] {
                    assert_eq!(
                        p.eval_slot(s),
                        self.eval_slot(s).charpoly(),
                        "charpoly cross-check failed in slot {s:?}"
                    );
                }
            }
            _ => {
                // single faithful chart (ε₁ = ε₀ for real; ε₁ for pure)
                assert_eq!(
                    p.eval_slot(Slot::At1),
                    self.eval_slot(Slot::At1).charpoly(),
                    "charpoly cross-check failed in the chart"
                );
            }
        }
        Ok(p)
    }

    /// Inverse via slot elimination and recombination. A is invertible iff
    /// both slot images are; the error names the first failing slot.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        match self.field.flavor {
            Flavor::FullNeutrosophic => {
                let inv0 = self
                    .eval_slot(Slot::At0)
                    .inverse()
                    .ok_or(NError::Singular(Slot::At0))?;
                let inv1 = self
                    .eval_slot(Slot::At1)
                    .inverse()
                    .ok_or(NError::Singular(Slot::At1))?;
                let out = Self::recombine(&inv0, &inv1, self.field)?;
                debug_assert!(self.mul(&out)?.is_identity());
                Ok(out)
            }
            _ => {
                let inv = self
                    .eval_slot(Slot::At1)
                    .inverse()
                    .ok_or(NError::Singular(Slot::At1))?;
                let out = Self::from_chart(&inv, self.field)?;
                debug_assert!(self.mul(&out)?.is_identity());
                Ok(out)
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows, self.field)
    }

    /// Exact similarity test: B = P⁻¹AP. On success the characteristic
    /// polynomials necessarily agree, re-checked here.
    pub fn similarity_check(&self, b: &Self, p: &Self) -> Result<bool> {
        self.require_square()?;
        self.same_shape(b)?;
        self.same_shape(p)?;
        let p_inv = p.inverse()?;
        let same = p_inv.mul(self)?.mul(p)? == *b;
        if same {
            assert_eq!(
                self.charpoly()?,
                b.charpoly()?,
                "similar matrices must share a characteristic polynomial"
            );
        }
        Ok(same)
    }

    /// f(A) by Horner; the constant coefficient adds to the diagonal.
    pub fn eval_poly(&self, f: &NPoly) -> Result<Self> {
        self.require_square()?;
        let field = self.field.join(f.field())?;
        let n = self.rows;
        let mut acc = Self::zero(n, n, field);
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(self)?;
            for i in 0..n {
                let v = acc.get(i, i).add(c)?;
                acc.set(i, i, v);
            }
        }
        Ok(acc)
    }
}

fn cofactor_det(data: &[NNum], n: usize, field: FieldDescriptor) -> NNum {
    if n == 1 {
        return data[0].clone();
    }
    let mut acc = NNum::zero(field);
    for j in 0..n {
        if data[j].is_zero() {
            continue;
        }
        let minor = minor_grid(data, n, 0, j);
        let sub = cofactor_det(&minor, n - 1, field);
        let term = data[j].mul(&sub).expect("same field");
        acc = if j % 2 == 0 {
            acc.add(&term).expect("same field")
        } else {
            acc.sub(&term).expect("same field")
        };
    }
    acc
}

fn poly_cofactor_det(grid: &[NPoly], n: usize, field: FieldDescriptor) -> Result<NPoly> {
    if n == 1 {
        return Ok(grid[0].clone());
    }
    let mut acc = NPoly::zero(field);
    for j in 0..n {
        if grid[j].is_zero() {
            continue;
        }
        let minor = minor_grid(grid, n, 0, j);
        let sub = poly_cofactor_det(&minor, n - 1, field)?;
        let term = grid[j].mul(&sub)?;
        acc = if j % 2 == 0 {
            acc.add(&term)?
        } else {
            acc.sub(&term)?
        };
    }
    Ok(acc)
}

fn minor_grid<T: Clone>(data: &[T], n: usize, skip_row: usize, skip_col: usize) -> Vec<T> {
    let mut out = Vec::with_capacity((n - 1) * (n - 1));
    for i in 0..n {
        if i == skip_row {
            continue;
        }
        for j in 0..n {
            if j == skip_col {
                continue;
            }
            out.push(data[i * n + j].clone());
        }
    }
    out
}

impl fmt::Display for NMatrix {
    /// Terse row-list form in the scalar grammar: `[[I,0],[2,2]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kpoly::Degree;

    fn nq() -> FieldDescriptor {
        FieldDescriptor::rationals(Flavor::FullNeutrosophic)
    }

    fn nz(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p, Flavor::FullNeutrosophic).unwrap()
    }

    fn n(a: i64, b: i64, f: FieldDescriptor) -> NNum {
        NNum::from_i64(a, b, f).unwrap()
    }

    #[test]
    fn ring_op_basics() {
        let a = NMatrix::from_pairs(&[&[(1, 1), (0, 0)], &[(2, 0), (1, 0)]], nz(3)).unwrap();
        let id = NMatrix::identity(2, nz(3));
        assert_eq!(a.mul(&id).unwrap(), a);
        assert_eq!(a.transpose().transpose(), a);
        assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn nilpotent_witness() {
        // [[0,I],[0,0]]² = 0
        let m = NMatrix::from_pairs(&[&[(0, 0), (0, 1)], &[(0, 0), (0, 0)]], nq()).unwrap();
        assert!(m.mul(&m).unwrap().is_zero());
    }

    #[test]
    fn det_fixtures() {
        assert_eq!(
            NMatrix::identity(3, nq()).det().unwrap(),
            NNum::one(nq())
        );
        // det([[I,0],[2,2]]) over N(Z₃) = 2I
        let a = NMatrix::from_pairs(&[&[(0, 1), (0, 0)], &[(2, 0), (2, 0)]], nz(3)).unwrap();
        assert_eq!(a.det().unwrap(), n(0, 2, nz(3)));
        // det(I·Id₂) = I² = I
        let b = NMatrix::from_pairs(&[&[(0, 1), (0, 0)], &[(0, 0), (0, 1)]], nq()).unwrap();
        assert_eq!(b.det().unwrap(), n(0, 1, nq()));
    }

    #[test]
    fn det_matches_slot_elimination() {
        // cofactor over the ring vs elimination over the slot fields
        let a = NMatrix::from_pairs(
            &[&[(1, 2), (0, 1), (2, 0)], &[(0, 0), (1, 1), (1, 0)], &[(2, 2), (0, 0), (1, 2)]],
            nz(5),
        )
        .unwrap();
        let d = a.det().unwrap();
        assert_eq!(d.eval(Slot::At0), a.eval_slot(Slot::At0).det());
        assert_eq!(d.eval(Slot::At1), a.eval_slot(Slot::At1).det());
    }

    #[test]
    fn det_is_multiplicative() {
        let a = NMatrix::from_pairs(&[&[(1, 1), (2, 0)], &[(0, 1), (1, 2)]], nz(3)).unwrap();
        let b = NMatrix::from_pairs(&[&[(0, 2), (1, 0)], &[(1, 1), (0, 0)]], nz(3)).unwrap();
        let lhs = a.mul(&b).unwrap().det().unwrap();
        let rhs = a.det().unwrap().mul(&b.det().unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(a.transpose().det().unwrap(), a.det().unwrap());
    }

    #[test]
    fn charpoly_textbook_3x3_over_z2() {
        // [[I,0,1],[0,1,0],[I,0,0]] over N(Z₂) → x³ + (I+1)x² + I
        let a = NMatrix::from_pairs(
            &[&[(0, 1), (0, 0), (1, 0)], &[(0, 0), (1, 0), (0, 0)], &[(0, 1), (0, 0), (0, 0)]],
            nz(2),
        )
        .unwrap();
        let p = a.charpoly().unwrap();
        assert_eq!(
            p,
            NPoly::from_pairs(&[(0, 1), (0, 0), (1, 1), (1, 0)], nz(2)).unwrap()
        );
        assert_eq!(p.to_string(), "x^3+(I+1)x^2+I");
        // Cayley–Hamilton at the fixture
        assert!(a.eval_poly(&p).unwrap().is_zero());
    }

    #[test]
    fn charpoly_textbook_4x4_over_z3() {
        // [[2,I,0,I],[I,I,0,0],[0,2,2I,1],[0,0,0,1]] over N(Z₃)
        // → x⁴ + (I+2)x² + 2I... as printed in full below
        let a = NMatrix::from_pairs(
            &[
                &[(2, 0), (0, 1), (0, 0), (0, 1)],
                &[(0, 1), (0, 1), (0, 0), (0, 0)],
                &[(0, 0), (2, 0), (0, 2), (1, 0)],
                &[(0, 0), (0, 0), (0, 0), (1, 0)],
            ],
            nz(3),
        )
        .unwrap();
        let p = a.charpoly().unwrap();
        assert_eq!(p.degree(), Degree::Fin(4));
        assert!(p.is_monic());
        // slot images x⁴+2x² and x⁴+2 recombine to the printed form
        assert_eq!(p.to_string(), "x^4+(I+2)x^2+2I");
        assert!(a.eval_poly(&p).unwrap().is_zero());
    }

    #[test]
    fn charpoly_textbook_2x2_over_z3() {
        // [[I,0],[2,2]] over N(Z₃) → x² + (2I+1)x + 2I
        let a = NMatrix::from_pairs(&[&[(0, 1), (0, 0)], &[(2, 0), (2, 0)]], nz(3)).unwrap();
        let p = a.charpoly().unwrap();
        assert_eq!(p.to_string(), "x^2+(2I+1)x+2I");
    }

    #[test]
    fn charpoly_of_identity() {
        let p = NMatrix::identity(3, nq()).charpoly().unwrap();
        // (x−1)³
        let x1 = NPoly::from_pairs(&[(-1, 0), (1, 0)], nq()).unwrap();
        assert_eq!(p, x1.pow(3).unwrap());
    }

    #[test]
    fn inverse_fixtures() {
        let id = NMatrix::identity(2, nz(3));
        assert_eq!(id.inverse().unwrap(), id);
        // [[1+I,0],[0,1]] is an involution over N(Z₃) since (1+I)² = 1
        let a = NMatrix::from_pairs(&[&[(1, 1), (0, 0)], &[(0, 0), (1, 0)]], nz(3)).unwrap();
        assert_eq!(a.inverse().unwrap(), a);
        // [[I,0],[0,1]]: slot-0 image [[0,0],[0,1]] singular
        let b = NMatrix::from_pairs(&[&[(0, 1), (0, 0)], &[(0, 0), (1, 0)]], nz(3)).unwrap();
        assert_eq!(b.inverse(), Err(NError::Singular(Slot::At0)));
        // Singular exactly when some slot det vanishes
        assert!(b.det().unwrap().eval(Slot::At0).is_zero());
    }

    #[test]
    fn inverse_round_trip() {
        let a = NMatrix::from_pairs(&[&[(1, 1), (2, 0)], &[(1, 0), (1, 2)]], nz(5)).unwrap();
        // check invertibility via det being a unit
        assert!(a.det().unwrap().is_unit());
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&a).unwrap().is_identity());
    }

    #[test]
    fn split_recombine_round_trip() {
        let a = NMatrix::from_pairs(&[&[(0, 1), (0, 0)], &[(2, 0), (2, 0)]], nz(3)).unwrap();
        let (m0, m1) = a.split();
        assert_eq!(m0, KMatrix::from_i64(&[&[0, 0], &[2, 2]], crate::field::Base::Prime(3)));
        assert_eq!(m1, KMatrix::from_i64(&[&[1, 0], &[2, 2]], crate::field::Base::Prime(3)));
        assert_eq!(NMatrix::recombine(&m0, &m1, nz(3)).unwrap(), a);
        // recombine(0, Id) = I·Id
        let z = KMatrix::zero(2, 2, crate::field::Base::Prime(3));
        let id = KMatrix::identity(2, crate::field::Base::Prime(3));
        let r = NMatrix::recombine(&z, &id, nz(3)).unwrap();
        assert_eq!(r, NMatrix::diagonal(&[n(0, 1, nz(3)), n(0, 1, nz(3))], nz(3)).unwrap());
    }

    #[test]
    fn split_commutes_with_mul() {
        let a = NMatrix::from_pairs(&[&[(1, 1), (0, 2)], &[(2, 1), (1, 0)]], nz(3)).unwrap();
        let b = NMatrix::from_pairs(&[&[(0, 1), (1, 0)], &[(2, 2), (0, 0)]], nz(3)).unwrap();
        let prod = a.mul(&b).unwrap();
        for s in [Slot::At0, Slot::At1] {
            assert_eq!(prod.eval_slot(s), a.eval_slot(s).mul(&b.eval_slot(s)));
        }
    }

    #[test]
    fn similarity() {
        let a = NMatrix::diagonal(&[n(2, 0, nz(5)), n(0, 1, nz(5))], nz(5)).unwrap();
        let id = NMatrix::identity(2, nz(5));
        assert!(a.similarity_check(&a, &id).unwrap());
        // permutation similarity swaps the diagonal
        let p = NMatrix::from_pairs(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]], nz(5)).unwrap();
        let b = NMatrix::diagonal(&[n(0, 1, nz(5)), n(2, 0, nz(5))], nz(5)).unwrap();
        assert!(a.similarity_check(&b, &p).unwrap());
        // singular P rejected
        let s = NMatrix::from_pairs(&[&[(0, 1), (0, 0)], &[(0, 0), (1, 0)]], nz(5)).unwrap();
        assert_eq!(a.similarity_check(&b, &s), Err(NError::Singular(Slot::At0)));
    }

    #[test]
    fn pure_flavor_matrices() {
        let z5i = FieldDescriptor::prime(5, Flavor::PureNeutrosophic).unwrap();
        let a = NMatrix::from_pairs(&[&[(0, 1), (0, 0)], &[(0, 1), (0, 3)]], z5i).unwrap();
        // identity over Z₅I has I on the diagonal
        let id = NMatrix::identity(2, z5i);
        assert_eq!(a.mul(&id).unwrap(), a);
        // charpoly through the ε₁ chart: [[1,0],[1,3]] → (x−1)(x−3)
        let p = a.charpoly().unwrap();
        assert_eq!(p.to_string(), "Ix^2+Ix+3I");
        assert!(a.eval_poly(&p).unwrap().is_zero());
        // inverse in the KI world
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn eval_poly_constant() {
        let a = NMatrix::from_pairs(&[&[(1, 0), (2, 0)], &[(0, 0), (1, 0)]], nq()).unwrap();
        let k = NPoly::constant(n(3, 1, nq()));
        let e = a.eval_poly(&k).unwrap();
        assert_eq!(e, NMatrix::diagonal(&[n(3, 1, nq()), n(3, 1, nq())], nq()).unwrap());
    }

    #[test]
    fn shape_errors() {
        let a = NMatrix::from_pairs(&[&[(1, 0), (0, 0)]], nq()).unwrap();
        assert_eq!(a.det(), Err(NError::NonSquare(1, 2)));
        let b = NMatrix::from_pairs(&[&[(1, 0)], &[(0, 0)]], nq()).unwrap();
        assert_eq!(a.add(&b), Err(NError::ShapeMismatch));
        assert!(a.mul(&b).is_ok());
    }
}
