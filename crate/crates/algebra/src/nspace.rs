//! n-fold vector spaces V = V₁ ∪ … ∪ Vₙ and their linear algebra.
//!
//! Each component is an ambient (tuples, matrices, or bounded polynomials)
//! over its own scalar field, and every operation runs componentwise. Two
//! scalar regimes exist, fixed at construction by the scalar flavor:
//!
//! * real scalars K on neutrosophic entries — each entry a+bI expands into
//!   separate real and I coordinates and classical elimination over K does
//!   the rest;
//! * neutrosophic scalars N(K) or KI — one coordinate per entry position,
//!   with the linear algebra executed in both evaluation slots (N(K)) or in
//!   the single chart (KI).
//!
//! Slot computations can disagree in rank; such components are reported
//! with an explicit mismatch flag instead of a made-up dimension.

use std::fmt;

use crate::error::{NError, Result};
use crate::field::{BaseElem, FieldDescriptor, Flavor};
use crate::kmatrix::KMatrix;
use crate::matrix::NMatrix;
use crate::poly::NPoly;
use crate::scalar::{NNum, Slot};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NFoldKind {
    TypeI,
    TypeII,
}

/// The scalar side of an n-fold space: one field descriptor per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NFoldField {
    pub kind: NFoldKind,
    pub components: Vec<FieldDescriptor>,
}

impl NFoldField {
    /// Single shared scalar field, replicated across all components.
    pub fn type_i(field: FieldDescriptor, fold: usize) -> Result<Self> {
        if fold == 0 {
            return Err(NError::InvalidSpace("empty field tuple".into()));
        }
        Ok(NFoldField { kind: NFoldKind::TypeI, components: vec![field; fold] })
    }

    /// Per-component fields, pairwise non-containing: no component may sit
    /// inside another (equal descriptors are mutually contained, so they
    /// are rejected too).
    pub fn type_ii(components: Vec<FieldDescriptor>) -> Result<Self> {
        if components.is_empty() {
            return Err(NError::InvalidSpace("empty field tuple".into()));
        }
        for i in 0..components.len() {
            for j in (i + 1)..components.len() {
                let (a, b) = (components[i], components[j]);
                if a.contained_in(b) || b.contained_in(a) {
                    return Err(NError::InvalidSpace(format!(
                        "components {} and {} are not independent",
                        a.tag(),
                        b.tag()
                    )));
                }
            }
        }
        Ok(NFoldField { kind: NFoldKind::TypeII, components })
    }

    pub fn fold(&self) -> usize {
        self.components.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Tuple(usize),
    Matrix(usize, usize),
    /// Polynomials of degree at most d: a (d+1)-dimensional ambient.
    PolyUpTo(usize),
    /// Unbounded polynomials; representable, but dimension-dependent
    /// operations refuse with InfiniteDimension.
    PolyAny,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentAmbient {
    pub shape: Shape,
    pub entries: FieldDescriptor,
}

/// Which coordinate pictures a component needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CoordSys {
    /// Real scalars: entries expand into per-flavor axes over the base.
    RealAxes,
    /// Pure scalars KI: the single chart at slot 1.
    Chart,
    /// Full scalars N(K): one picture per evaluation slot.
    SlotView(Slot),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NFoldSpace {
    pub field: NFoldField,
    pub components: Vec<ComponentAmbient>,
}

fn axes_per_entry(flavor: Flavor) -> usize {
    match flavor {
        Flavor::Real | Flavor::PureNeutrosophic => 1,
        Flavor::FullNeutrosophic => 2,
    }
}

impl NFoldSpace {
    pub fn new(field: NFoldField, components: Vec<ComponentAmbient>) -> Result<Self> {
        if components.len() != field.fold() {
            return Err(NError::InvalidSpace(format!(
                "{} ambients for a {}-fold field",
                components.len(),
                field.fold()
            )));
        }
        for (amb, &scal) in components.iter().zip(&field.components) {
            if amb.entries.base != scal.base {
                return Err(NError::InvalidSpace(format!(
                    "entries {} over scalars {}",
                    amb.entries.tag(),
                    scal.tag()
                )));
            }
            // neutrosophic scalars need entries of the same flavor: anything
            // thinner breaks closure (I·a escapes the reals) or unitality
            if scal.flavor != Flavor::Real && amb.entries.flavor != scal.flavor {
                return Err(NError::InvalidSpace(format!(
                    "entries {} are not a module over {}",
                    amb.entries.tag(),
                    scal.tag()
                )));
            }
        }
        Ok(NFoldSpace { field, components })
    }

    pub fn fold(&self) -> usize {
        self.components.len()
    }

    pub fn scalars(&self, i: usize) -> FieldDescriptor {
        self.field.components[i]
    }

    pub fn ambient(&self, i: usize) -> &ComponentAmbient {
        &self.components[i]
    }

    fn positions(&self, i: usize) -> Result<usize> {
        match self.components[i].shape {
            Shape::Tuple(n) => Ok(n),
            Shape::Matrix(r, c) => Ok(r * c),
            Shape::PolyUpTo(d) => Ok(d + 1),
            Shape::PolyAny => Err(NError::InfiniteDimension),
        }
    }

    /// Dimension of component i under its regime.
    pub fn comp_dim(&self, i: usize) -> Result<usize> {
        let n = self.positions(i)?;
        if self.scalars(i).flavor == Flavor::Real {
            Ok(n * axes_per_entry(self.components[i].entries.flavor))
        } else {
            Ok(n)
        }
    }

    /// Per-component dimensions, plus the summed total for type I spaces
    /// (the source's m+n convention; the tuple stays primary).
    pub fn space_dim(&self) -> Result<(Vec<usize>, Option<usize>)> {
        let dims: Vec<usize> = (0..self.fold())
            .map(|i| self.comp_dim(i))
            .collect::<Result<_>>()?;
        let total = match self.field.kind {
            NFoldKind::TypeI => Some(dims.iter().sum()),
            NFoldKind::TypeII => None,
        };
        Ok((dims, total))
    }

    fn systems(&self, i: usize) -> Vec<CoordSys> {
        match self.scalars(i).flavor {
            Flavor::Real => vec![CoordSys::RealAxes],
            Flavor::PureNeutrosophic => vec![CoordSys::Chart],
            Flavor::FullNeutrosophic => {
                vec![CoordSys::SlotView(Slot::At0), CoordSys::SlotView(Slot::At1)]
            }
        }
    }

    fn entry_list(&self, i: usize, part: &Part) -> Result<Vec<NNum>> {
        let n = self.positions(i)?;
        let mut out = part.entries();
        // bounded polynomials pad up to their ambient length
        let zero = NNum::zero(self.components[i].entries);
        while out.len() < n {
            out.push(zero.clone());
        }
        Ok(out)
    }

    fn coords(&self, i: usize, part: &Part, sys: CoordSys) -> Result<Vec<BaseElem>> {
        let entries = self.entry_list(i, part)?;
        let mut out = Vec::new();
        for e in &entries {
            match sys {
                CoordSys::RealAxes => match self.components[i].entries.flavor {
                    Flavor::Real => out.push(e.real_part().clone()),
                    Flavor::PureNeutrosophic => out.push(e.i_part().clone()),
                    Flavor::FullNeutrosophic => {
                        out.push(e.real_part().clone());
                        out.push(e.i_part().clone());
                    }
                },
                CoordSys::Chart => out.push(e.eval(Slot::At1)),
                CoordSys::SlotView(s) => out.push(e.eval(s)),
            }
        }
        Ok(out)
    }

    /// Rebuild a part of component i from one coordinate vector per system.
    fn part_from_sys(&self, i: usize, per_sys: &[Vec<BaseElem>]) -> Result<Part> {
        let ef = self.components[i].entries;
        let n = self.positions(i)?;
        let mut entries = Vec::with_capacity(n);
        match self.scalars(i).flavor {
            Flavor::Real => {
                let coords = &per_sys[0];
                let mut k = 0;
                for _ in 0..n {
                    let e = match ef.flavor {
                        Flavor::Real => NNum::from_parts(
                            coords[k].clone(),
                            BaseElem::zero(ef.base),
                            ef,
                        )?,
                        Flavor::PureNeutrosophic => NNum::from_parts(
                            BaseElem::zero(ef.base),
                            coords[k].clone(),
                            ef,
                        )?,
                        Flavor::FullNeutrosophic => {
                            let e = NNum::from_parts(
                                coords[k].clone(),
                                coords[k + 1].clone(),
                                ef,
                            )?;
                            k += 1;
                            e
                        }
                    };
                    k += 1;
                    entries.push(e);
                }
            }
            Flavor::PureNeutrosophic => {
                for c in &per_sys[0] {
                    entries.push(NNum::from_parts(BaseElem::zero(ef.base), c.clone(), ef)?);
                }
            }
            Flavor::FullNeutrosophic => {
                for (u, v) in per_sys[0].iter().zip(&per_sys[1]) {
                    entries.push(NNum::recombine(u, v, ef)?);
                }
            }
        }
        self.part_from_entries(i, entries)
    }

    fn part_from_entries(&self, i: usize, entries: Vec<NNum>) -> Result<Part> {
        let ef = self.components[i].entries;
        Ok(match self.components[i].shape {
            Shape::Tuple(_) => Part::Tuple(entries),
            Shape::Matrix(r, c) => Part::Matrix(NMatrix::new(r, c, entries, ef)?),
            Shape::PolyUpTo(_) | Shape::PolyAny => Part::Poly(NPoly::new(entries, ef)?),
        })
    }

    pub fn zero_part(&self, i: usize) -> Part {
        let ef = self.components[i].entries;
        match self.components[i].shape {
            Shape::Tuple(n) => Part::Tuple(vec![NNum::zero(ef); n]),
            Shape::Matrix(r, c) => Part::Matrix(NMatrix::zero(r, c, ef)),
            Shape::PolyUpTo(_) | Shape::PolyAny => Part::Poly(NPoly::zero(ef)),
        }
    }

    /// Normalize a part into component i's ambient, widening or narrowing
    /// entry tags; rejects shape and flavor escapes.
    fn fit_part(&self, i: usize, part: &Part) -> Result<Part> {
        let amb = &self.components[i];
        match (amb.shape, part) {
            (Shape::Tuple(n), Part::Tuple(es)) => {
                if es.len() != n {
                    return Err(NError::ShapeMismatch);
                }
            }
            (Shape::Matrix(r, c), Part::Matrix(m)) => {
                if m.rows() != r || m.cols() != c {
                    return Err(NError::ShapeMismatch);
                }
            }
            (Shape::PolyUpTo(d), Part::Poly(p)) => {
                if p.coeffs().len() > d + 1 {
                    return Err(NError::ShapeMismatch);
                }
            }
            (Shape::PolyAny, Part::Poly(_)) => {}
            _ => return Err(NError::ShapeMismatch),
        }
        let entries = part
            .entries()
            .iter()
            .map(|e| fit_num(e, amb.entries))
            .collect::<Result<Vec<_>>>()?;
        self.part_from_entries(i, entries)
    }
}

fn fit_num(n: &NNum, target: FieldDescriptor) -> Result<NNum> {
    if n.field == target {
        Ok(n.clone())
    } else if n.field.base != target.base {
        Err(NError::FieldMismatch)
    } else if n.field.contained_in(target) {
        n.widen(target)
    } else {
        n.narrow(target)
    }
}

/// One component's worth of an n-fold vector.
#[derive(Debug, Clone, PartialEq)]
pub enum Part {
    Tuple(Vec<NNum>),
    Matrix(NMatrix),
    Poly(NPoly),
}

impl Part {
    pub fn entries(&self) -> Vec<NNum> {
        match self {
            Part::Tuple(es) => es.clone(),
            Part::Matrix(m) => m.entries().to_vec(),
            Part::Poly(p) => p.coeffs().to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|e| e.is_zero())
    }

    fn has_i(&self) -> bool {
        self.entries().iter().any(|e| !e.i_part().is_zero())
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Part::Tuple(es) => {
                f.write_str("(")?;
                for (k, e) in es.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{e}")?;
                }
                f.write_str(")")
            }
            Part::Matrix(m) => write!(f, "{m}"),
            Part::Poly(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NFoldVector {
    pub space: NFoldSpace,
    pub parts: Vec<Part>,
}

impl NFoldVector {
    pub fn new(space: NFoldSpace, parts: Vec<Part>) -> Result<Self> {
        if parts.len() != space.fold() {
            return Err(NError::SpaceMismatch);
        }
        let parts = parts
            .iter()
            .enumerate()
            .map(|(i, p)| space.fit_part(i, p))
            .collect::<Result<Vec<_>>>()?;
        Ok(NFoldVector { space, parts })
    }

    pub fn zero(space: &NFoldSpace) -> Self {
        let parts = (0..space.fold()).map(|i| space.zero_part(i)).collect();
        NFoldVector { space: space.clone(), parts }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.is_zero())
    }

    fn zip_entries(&self, other: &Self, f: impl Fn(&NNum, &NNum) -> Result<NNum>) -> Result<Self> {
        if self.space != other.space {
            return Err(NError::SpaceMismatch);
        }
        let mut parts = Vec::with_capacity(self.parts.len());
        for (i, (a, b)) in self.parts.iter().zip(&other.parts).enumerate() {
            let (mut ea, mut eb) = (a.entries(), b.entries());
            // unbounded polynomial parts align on the longer coefficient list
            let n = ea.len().max(eb.len());
            let zero = NNum::zero(self.space.components[i].entries);
            ea.resize(n, zero.clone());
            eb.resize(n, zero);
            for (x, y) in ea.iter_mut().zip(&eb) {
                *x = f(x, y)?;
            }
            parts.push(self.space.part_from_entries(i, ea)?);
        }
        Ok(NFoldVector { space: self.space.clone(), parts })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_entries(other, |x, y| x.add(y))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_entries(other, |x, y| x.sub(y))
    }

    pub fn neg(&self) -> Self {
        let parts = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let es = p.entries().iter().map(|e| e.neg()).collect();
                self.space.part_from_entries(i, es).expect("negation stays in ambient")
            })
            .collect();
        NFoldVector { space: self.space.clone(), parts }
    }

    /// Scale componentwise: one scalar per component, each from (or
    /// widenable into) that component's scalar field.
    pub fn scale(&self, cs: &[NNum]) -> Result<Self> {
        if cs.len() != self.space.fold() {
            return Err(NError::SpaceMismatch);
        }
        let mut parts = Vec::with_capacity(self.parts.len());
        for (i, p) in self.parts.iter().enumerate() {
            let c = fit_num(&cs[i], self.space.scalars(i))?;
            let es = p
                .entries()
                .iter()
                .map(|e| c.mul(e).and_then(|v| fit_num(&v, self.space.components[i].entries)))
                .collect::<Result<Vec<_>>>()?;
            parts.push(self.space.part_from_entries(i, es)?);
        }
        Ok(NFoldVector { space: self.space.clone(), parts })
    }
}

impl fmt::Display for NFoldVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------
// independence, spans, bases

#[derive(Debug, Clone, PartialEq)]
pub struct IndependenceReport {
    pub independent: bool,
    /// First component where a dependency exists.
    pub dependent_component: Option<usize>,
    /// Nonzero coefficients combining the inputs to zero in that component.
    pub witness: Option<Vec<NNum>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentDim {
    Finite(usize),
    /// Slot ranks disagree: the span is not a free module and has no
    /// honest single dimension.
    SlotRankMismatch(usize, usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct NBasis {
    /// Canonical elimination basis per component; None on slot mismatch.
    pub per_component: Vec<Option<Vec<Part>>>,
    pub dims: Vec<ComponentDim>,
}

impl NFoldSpace {
    fn check_members(&self, vectors: &[NFoldVector]) -> Result<()> {
        if vectors.iter().any(|v| v.space != *self) {
            return Err(NError::SpaceMismatch);
        }
        Ok(())
    }

    /// Coordinate matrix of component i with the vectors as columns.
    fn col_matrix(&self, i: usize, vectors: &[NFoldVector], sys: CoordSys) -> Result<KMatrix> {
        let cols = vectors
            .iter()
            .map(|v| self.coords(i, &v.parts[i], sys))
            .collect::<Result<Vec<_>>>()?;
        Ok(KMatrix::from_cols(cols, self.scalars(i).base))
    }

    pub fn independent(&self, vectors: &[NFoldVector]) -> Result<IndependenceReport> {
        self.check_members(vectors)?;
        if vectors.is_empty() {
            return Ok(IndependenceReport {
                independent: true,
                dependent_component: None,
                witness: None,
            });
        }
        for i in 0..self.fold() {
            for &sys in &self.systems(i) {
                let m = self.col_matrix(i, vectors, sys)?;
                let kernel = m.kernel_basis();
                let Some(k) = kernel.first() else { continue };
                let scal = self.scalars(i);
                let zero = BaseElem::zero(scal.base);
                let witness = k
                    .iter()
                    .map(|c| match sys {
                        CoordSys::RealAxes => NNum::from_parts(c.clone(), zero.clone(), scal),
                        CoordSys::Chart => NNum::from_parts(zero.clone(), c.clone(), scal),
                        CoordSys::SlotView(Slot::At0) => NNum::recombine(c, &zero, scal),
                        CoordSys::SlotView(Slot::At1) => NNum::recombine(&zero, c, scal),
                    })
                    .collect::<Result<Vec<_>>>()?;
                return Ok(IndependenceReport {
                    independent: false,
                    dependent_component: Some(i),
                    witness: Some(witness),
                });
            }
        }
        Ok(IndependenceReport { independent: true, dependent_component: None, witness: None })
    }

    /// Row-reduce each component's spanning set into a canonical basis.
    pub fn nbasis(&self, spanning: &[NFoldVector]) -> Result<NBasis> {
        self.check_members(spanning)?;
        let mut per_component = Vec::new();
        let mut dims = Vec::new();
        for i in 0..self.fold() {
            self.comp_dim(i)?;
            let mut sys_rows: Vec<Vec<Vec<BaseElem>>> = Vec::new();
            for &sys in &self.systems(i) {
                let rows = spanning
                    .iter()
                    .map(|v| self.coords(i, &v.parts[i], sys))
                    .collect::<Result<Vec<_>>>()?;
                let m = KMatrix::from_rows(rows, self.scalars(i).base);
                let (r, pivots) = m.rref();
                sys_rows.push((0..pivots.len()).map(|k| r.row(k)).collect());
            }
            if sys_rows.len() == 2 && sys_rows[0].len() != sys_rows[1].len() {
                dims.push(ComponentDim::SlotRankMismatch(sys_rows[0].len(), sys_rows[1].len()));
                per_component.push(None);
                continue;
            }
            let rank = sys_rows[0].len();
            let mut basis = Vec::with_capacity(rank);
            for k in 0..rank {
                let per_sys: Vec<Vec<BaseElem>> =
                    sys_rows.iter().map(|rows| rows[k].clone()).collect();
                basis.push(self.part_from_sys(i, &per_sys)?);
            }
            dims.push(ComponentDim::Finite(rank));
            per_component.push(Some(basis));
        }
        Ok(NBasis { per_component, dims })
    }
}

// ---------------------------------------------------------------------
// linear n-maps

#[derive(Debug, Clone, PartialEq)]
pub struct NFoldMap {
    pub domain: NFoldSpace,
    pub codomain: NFoldSpace,
    /// Domain component i feeds codomain component assign[i]; injective.
    pub assign: Vec<usize>,
    /// Matrix of each component map in the regime coordinates, shaped
    /// dim(codomain target) × dim(domain source).
    pub mats: Vec<NMatrix>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompRankNullity {
    pub rank: (usize, usize),
    pub nullity: (usize, usize),
    /// True when both slots agree (always, outside full-flavor scalars).
    pub uniform: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentKernel {
    /// Recombined kernel basis; None when the slot structures differ.
    pub basis: Option<Vec<Part>>,
    pub slot_nullity: (usize, usize),
    pub flag: Option<String>,
}

impl NFoldMap {
    pub fn new(
        domain: NFoldSpace,
        codomain: NFoldSpace,
        assign: Vec<usize>,
        mats: Vec<NMatrix>,
    ) -> Result<Self> {
        if assign.len() != domain.fold() || mats.len() != domain.fold() {
            return Err(NError::AssignmentMismatch);
        }
        for (i, &j) in assign.iter().enumerate() {
            if j >= codomain.fold() {
                return Err(NError::AssignmentMismatch);
            }
            if assign[..i].contains(&j) {
                return Err(NError::AssignmentMismatch);
            }
        }
        let mats = assign
            .iter()
            .enumerate()
            .map(|(i, &j)| {
                let scal = domain.scalars(i);
                if codomain.scalars(j) != scal {
                    return Err(NError::FieldMismatch);
                }
                let m = &mats[i];
                if m.rows() != codomain.comp_dim(j)? || m.cols() != domain.comp_dim(i)? {
                    return Err(NError::ShapeMismatch);
                }
                let entries = m
                    .entries()
                    .iter()
                    .map(|e| fit_num(e, scal))
                    .collect::<Result<Vec<_>>>()?;
                NMatrix::new(m.rows(), m.cols(), entries, scal)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NFoldMap { domain, codomain, assign, mats })
    }

    pub fn identity(space: &NFoldSpace) -> Result<Self> {
        let mats = (0..space.fold())
            .map(|i| Ok(NMatrix::identity(space.comp_dim(i)?, space.scalars(i))))
            .collect::<Result<Vec<_>>>()?;
        NFoldMap::new(space.clone(), space.clone(), (0..space.fold()).collect(), mats)
    }

    fn sys_view(m: &NMatrix, sys: CoordSys) -> KMatrix {
        match sys {
            CoordSys::RealAxes => m.eval_slot(Slot::At0),
            CoordSys::Chart => m.eval_slot(Slot::At1),
            CoordSys::SlotView(s) => m.eval_slot(s),
        }
    }

    pub fn apply(&self, v: &NFoldVector) -> Result<NFoldVector> {
        if v.space != self.domain {
            return Err(NError::SpaceMismatch);
        }
        let mut parts: Vec<Part> =
            (0..self.codomain.fold()).map(|j| self.codomain.zero_part(j)).collect();
        for (i, &j) in self.assign.iter().enumerate() {
            let per_sys = self
                .domain
                .systems(i)
                .iter()
                .map(|&sys| {
                    let x = self.domain.coords(i, &v.parts[i], sys)?;
                    Ok(Self::sys_view(&self.mats[i], sys).mul_vec(&x))
                })
                .collect::<Result<Vec<_>>>()?;
            parts[j] = self.codomain.part_from_sys(j, &per_sys)?;
        }
        Ok(NFoldVector { space: self.codomain.clone(), parts })
    }

    /// self ∘ inner.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.codomain != self.domain {
            return Err(NError::SpaceMismatch);
        }
        let assign: Vec<usize> = inner.assign.iter().map(|&m| self.assign[m]).collect();
        let mats = inner
            .assign
            .iter()
            .enumerate()
            .map(|(i, &m)| self.mats[m].mul(&inner.mats[i]))
            .collect::<Result<Vec<_>>>()?;
        NFoldMap::new(inner.domain.clone(), self.codomain.clone(), assign, mats)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(NError::SpaceMismatch);
        }
        if self.assign != other.assign {
            return Err(NError::AssignmentMismatch);
        }
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        NFoldMap::new(self.domain.clone(), self.codomain.clone(), self.assign.clone(), mats)
    }

    pub fn scale(&self, cs: &[NNum]) -> Result<Self> {
        if cs.len() != self.domain.fold() {
            return Err(NError::SpaceMismatch);
        }
        let mats = self
            .mats
            .iter()
            .enumerate()
            .map(|(i, m)| m.scale(&fit_num(&cs[i], self.domain.scalars(i))?))
            .collect::<Result<Vec<_>>>()?;
        NFoldMap::new(self.domain.clone(), self.codomain.clone(), self.assign.clone(), mats)
    }

    pub fn rank_nullity(&self) -> Result<Vec<CompRankNullity>> {
        (0..self.domain.fold())
            .map(|i| {
                let dim = self.domain.comp_dim(i)?;
                let ranks: Vec<usize> = self
                    .domain
                    .systems(i)
                    .iter()
                    .map(|&sys| Self::sys_view(&self.mats[i], sys).rank())
                    .collect();
                let (r0, r1) = (ranks[0], *ranks.last().unwrap());
                Ok(CompRankNullity {
                    rank: (r0, r1),
                    nullity: (dim - r0, dim - r1),
                    uniform: r0 == r1,
                })
            })
            .collect()
    }

    pub fn kernel_basis(&self) -> Result<Vec<ComponentKernel>> {
        (0..self.domain.fold())
            .map(|i| {
                let kernels: Vec<Vec<Vec<BaseElem>>> = self
                    .domain
                    .systems(i)
                    .iter()
                    .map(|&sys| Self::sys_view(&self.mats[i], sys).kernel_basis())
                    .collect();
                let (n0, n1) = (kernels[0].len(), kernels.last().unwrap().len());
                if kernels.len() == 2 && n0 != n1 {
                    return Ok(ComponentKernel {
                        basis: None,
                        slot_nullity: (n0, n1),
                        flag: Some("SlotStructureMismatch".into()),
                    });
                }
                let basis = (0..n0)
                    .map(|k| {
                        let per_sys: Vec<Vec<BaseElem>> =
                            kernels.iter().map(|ks| ks[k].clone()).collect();
                        self.domain.part_from_sys(i, &per_sys)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(ComponentKernel { basis: Some(basis), slot_nullity: (n0, n1), flag: None })
            })
            .collect()
    }

    /// Transpose in dual coordinates: the assignment inverts and every
    /// matrix transposes; ranks are preserved slot for slot.
    pub fn transpose_map(&self) -> Result<Self> {
        for space in [&self.domain, &self.codomain] {
            for i in 0..space.fold() {
                if space.scalars(i).flavor == Flavor::Real {
                    return Err(NError::UnsupportedRegime);
                }
            }
        }
        if self.domain.fold() != self.codomain.fold() {
            return Err(NError::AssignmentMismatch);
        }
        let mut assign = vec![0usize; self.codomain.fold()];
        let mut mats = vec![None; self.codomain.fold()];
        for (i, &j) in self.assign.iter().enumerate() {
            assign[j] = i;
            mats[j] = Some(self.mats[i].transpose());
        }
        let mats = mats.into_iter().map(|m| m.unwrap()).collect();
        NFoldMap::new(self.codomain.clone(), self.domain.clone(), assign, mats)
    }
}

// ---------------------------------------------------------------------
// duals and annihilators (neutrosophic scalars only: over a real field a
// functional cannot be linear on neutrosophic vectors)

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentFunctionals {
    /// Each functional is a coordinate row; apply = dot with coordinates.
    pub rows: Vec<Vec<NNum>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentAnnihilator {
    pub functionals: Option<Vec<Vec<NNum>>>,
    pub dim_w: (usize, usize),
    pub dim_ann: (usize, usize),
    pub flag: Option<String>,
}

impl NFoldSpace {
    fn require_dual_capable(&self) -> Result<()> {
        for i in 0..self.fold() {
            if self.scalars(i).flavor == Flavor::Real {
                return Err(NError::UnsupportedRegime);
            }
        }
        Ok(())
    }

    fn rows_to_nnum(&self, i: usize, per_sys: &[Vec<Vec<BaseElem>>]) -> Result<Vec<Vec<NNum>>> {
        let scal = self.scalars(i);
        let count = per_sys[0].len();
        (0..count)
            .map(|k| {
                (0..per_sys[0][k].len())
                    .map(|c| {
                        if per_sys.len() == 2 {
                            NNum::recombine(&per_sys[0][k][c], &per_sys[1][k][c], scal)
                        } else {
                            NNum::from_parts(
                                BaseElem::zero(scal.base),
                                per_sys[0][k][c].clone(),
                                scal,
                            )
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Dual basis of a per-component basis: fᵏ(αⱼ) = δₖⱼ, with δ read as
    /// the scalar ring's unit (I over KI).
    pub fn dual_basis(&self, basis: &[Vec<Part>]) -> Result<Vec<ComponentFunctionals>> {
        self.require_dual_capable()?;
        if basis.len() != self.fold() {
            return Err(NError::SpaceMismatch);
        }
        let mut out = Vec::new();
        for i in 0..self.fold() {
            let dim = self.comp_dim(i)?;
            if basis[i].len() != dim {
                return Err(NError::NotABasis);
            }
            let mut per_sys = Vec::new();
            for &sys in &self.systems(i) {
                let cols = basis[i]
                    .iter()
                    .map(|p| self.coords(i, p, sys))
                    .collect::<Result<Vec<_>>>()?;
                let m = KMatrix::from_cols(cols, self.scalars(i).base);
                let inv = m.inverse().ok_or(NError::NotABasis)?;
                per_sys.push((0..dim).map(|k| inv.row(k)).collect::<Vec<_>>());
            }
            out.push(ComponentFunctionals { rows: self.rows_to_nnum(i, &per_sys)? });
        }
        Ok(out)
    }

    /// Evaluate a functional row against a vector part of component i.
    pub fn functional_apply(&self, i: usize, row: &[NNum], part: &Part) -> Result<NNum> {
        let scal = self.scalars(i);
        let mut per_sys = Vec::new();
        for &sys in &self.systems(i) {
            let x = self.coords(i, part, sys)?;
            let r: Vec<BaseElem> = row
                .iter()
                .map(|c| match sys {
                    CoordSys::Chart => c.eval(Slot::At1),
                    CoordSys::RealAxes => c.real_part().clone(),
                    CoordSys::SlotView(s) => c.eval(s),
                })
                .collect();
            if r.len() != x.len() {
                return Err(NError::ShapeMismatch);
            }
            let mut acc = BaseElem::zero(scal.base);
            for (a, b) in r.iter().zip(&x) {
                acc = acc.add(&a.mul(b));
            }
            per_sys.push(acc);
        }
        if per_sys.len() == 2 {
            NNum::recombine(&per_sys[0], &per_sys[1], scal)
        } else {
            NNum::from_parts(BaseElem::zero(scal.base), per_sys[0].clone(), scal)
        }
    }

    /// Annihilator W° of the span of the given vectors: all functionals
    /// vanishing on W, with dim W + dim W° = dim V per slot.
    pub fn annihilator(&self, generators: &[NFoldVector]) -> Result<Vec<ComponentAnnihilator>> {
        self.require_dual_capable()?;
        self.check_members(generators)?;
        let mut out = Vec::new();
        for i in 0..self.fold() {
            let dim = self.comp_dim(i)?;
            let mut per_sys = Vec::new();
            let mut dims_w = Vec::new();
            for &sys in &self.systems(i) {
                let rows = generators
                    .iter()
                    .map(|v| self.coords(i, &v.parts[i], sys))
                    .collect::<Result<Vec<_>>>()?;
                let g = if rows.is_empty() {
                    KMatrix::zero(1, dim, self.scalars(i).base)
                } else {
                    KMatrix::from_rows(rows, self.scalars(i).base)
                };
                dims_w.push(g.rank());
                per_sys.push(g.kernel_basis());
            }
            let (w0, w1) = (dims_w[0], *dims_w.last().unwrap());
            let (a0, a1) = (per_sys[0].len(), per_sys.last().unwrap().len());
            if per_sys.len() == 2 && a0 != a1 {
                out.push(ComponentAnnihilator {
                    functionals: None,
                    dim_w: (w0, w1),
                    dim_ann: (a0, a1),
                    flag: Some("SlotStructureMismatch".into()),
                });
                continue;
            }
            out.push(ComponentAnnihilator {
                functionals: Some(self.rows_to_nnum(i, &per_sys)?),
                dim_w: (w0, w1),
                dim_ann: (a0, a1),
                flag: None,
            });
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------
// direct sums and projections

#[derive(Debug, Clone)]
pub struct DirectSumReport {
    pub direct: bool,
    pub spans: bool,
    /// Projections Eᵢ with Eᵢ² = Eᵢ, EᵢEⱼ = 0, ΣEᵢ = identity; present
    /// exactly when the sum is direct and fills the space.
    pub projections: Option<Vec<NFoldMap>>,
    /// A vector admitting two different decompositions when not direct.
    pub witness: Option<NFoldVector>,
}

impl NFoldSpace {
    pub fn direct_sum_check(&self, subspaces: &[Vec<NFoldVector>]) -> Result<DirectSumReport> {
        for w in subspaces {
            self.check_members(w)?;
        }
        let mut direct = true;
        let mut spans = true;
        let mut witness = None;
        // per component and system: a canonical basis per subspace, then
        // the concatenation test rank(⊕Bᵢ) = Σ rank(Bᵢ) = dim
        let mut proj_mats: Vec<Vec<Vec<KMatrix>>> = vec![Vec::new(); subspaces.len()];
        for i in 0..self.fold() {
            let dim = self.comp_dim(i)?;
            let base = self.scalars(i).base;
            // a two-decomposition witness collects one overlap vector per
            // system whose concatenated bases have a kernel
            let mut wit_sys: Vec<Vec<BaseElem>> = Vec::new();
            let mut comp_overlaps = false;
            for &sys in &self.systems(i) {
                let mut blocks: Vec<Vec<Vec<BaseElem>>> = Vec::new();
                for w in subspaces {
                    let rows = w
                        .iter()
                        .map(|v| self.coords(i, &v.parts[i], sys))
                        .collect::<Result<Vec<_>>>()?;
                    let m = if rows.is_empty() {
                        KMatrix::zero(1, dim, base)
                    } else {
                        KMatrix::from_rows(rows, base)
                    };
                    let (r, pivots) = m.rref();
                    blocks.push((0..pivots.len()).map(|k| r.row(k)).collect());
                }
                let total: usize = blocks.iter().map(|b| b.len()).sum();
                let cols: Vec<Vec<BaseElem>> = blocks.concat();
                let u = KMatrix::from_cols(cols.clone(), base);
                let rank = if total == 0 { 0 } else { u.rank() };
                let mut v = vec![BaseElem::zero(base); dim];
                if rank < total {
                    direct = false;
                    comp_overlaps = true;
                    // kernel coefficients across blocks combine one block's
                    // vectors into another's: a vector decomposing two ways
                    let k = &u.kernel_basis()[0];
                    let first = blocks[0].len();
                    for (c, col) in k[..first].iter().zip(&cols[..first]) {
                        for (vk, ck) in v.iter_mut().zip(col) {
                            *vk = vk.add(&c.mul(ck));
                        }
                    }
                    if v.iter().all(|e| e.is_zero()) {
                        // the dependency lives past block one; combine the
                        // positive half of the kernel coefficients instead
                        for (c, col) in k[first..].iter().zip(&cols[first..]) {
                            for (vk, ck) in v.iter_mut().zip(col) {
                                *vk = vk.add(&c.mul(ck));
                            }
                        }
                    }
                    if let Some(lead) = v.iter().position(|e| !e.is_zero()) {
                        let inv = v[lead].inv()?;
                        for e in &mut v {
                            *e = e.mul(&inv);
                        }
                    }
                }
                wit_sys.push(v);
                if rank < dim {
                    spans = false;
                }
                if direct && spans {
                    let u_inv = match u.inverse() {
                        Some(m) => m,
                        None => {
                            spans = false;
                            continue;
                        }
                    };
                    let mut offset = 0;
                    for (b, block) in blocks.iter().enumerate() {
                        let mut d = KMatrix::zero(dim, dim, base);
                        for k in offset..offset + block.len() {
                            d.set(k, k, BaseElem::one(base));
                        }
                        offset += block.len();
                        proj_mats[b].push(vec![u.mul(&d).mul(&u_inv)]);
                    }
                }
            }
            if comp_overlaps && witness.is_none() {
                let mut parts: Vec<Part> = (0..self.fold()).map(|j| self.zero_part(j)).collect();
                parts[i] = self.part_from_sys(i, &wit_sys)?;
                witness = Some(NFoldVector { space: self.clone(), parts });
            }
        }
        let projections = if direct && spans {
            // per_sys matrices were pushed system-major; regroup per component
            let mut maps = Vec::new();
            for mats_by_sys in proj_mats {
                let mut flat = mats_by_sys.into_iter().flatten();
                let mut mats = Vec::new();
                for i in 0..self.fold() {
                    let per_sys: Vec<KMatrix> =
                        (0..self.systems(i).len()).map(|_| flat.next().unwrap()).collect();
                    mats.push(self.nmatrix_from_sys(i, &per_sys)?);
                }
                maps.push(NFoldMap::new(
                    self.clone(),
                    self.clone(),
                    (0..self.fold()).collect(),
                    mats,
                )?);
            }
            Some(maps)
        } else {
            None
        };
        Ok(DirectSumReport { direct, spans, projections, witness })
    }

    fn nmatrix_from_sys(&self, i: usize, per_sys: &[KMatrix]) -> Result<NMatrix> {
        let scal = self.scalars(i);
        match scal.flavor {
            Flavor::Real => NMatrix::recombine(&per_sys[0], &per_sys[0], scal),
            Flavor::PureNeutrosophic => NMatrix::from_chart(&per_sys[0], scal),
            Flavor::FullNeutrosophic => NMatrix::recombine(&per_sys[0], &per_sys[1], scal),
        }
    }
}

// ---------------------------------------------------------------------
// subspace taxonomy

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentLabel {
    NeutrosophicSubspace,
    PseudoRealSubspace,
    QuasiPseudo,
    SpecialSubNeutrosophic(String),
    StrongNeutrosophic,
    PseudoStrong,
    Invalid,
}

impl ComponentLabel {
    pub fn name(&self) -> &'static str {
        match self {
            ComponentLabel::NeutrosophicSubspace => "NeutrosophicSubspace",
            ComponentLabel::PseudoRealSubspace => "PseudoRealSubspace",
            ComponentLabel::QuasiPseudo => "QuasiPseudo",
            ComponentLabel::SpecialSubNeutrosophic(_) => "SpecialSubNeutrosophic",
            ComponentLabel::StrongNeutrosophic => "StrongNeutrosophic",
            ComponentLabel::PseudoStrong => "PseudoStrong",
            ComponentLabel::Invalid => "Invalid",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationLabel {
    pub per_component: Vec<ComponentLabel>,
    pub overall: String,
}

impl NFoldSpace {
    /// Classify the span of the generators as a subspace of this space,
    /// optionally over a per-component scalar context (a subfield of the
    /// space's own scalars). Invalid is a label, not an error.
    pub fn subspace_classify(
        &self,
        generators: &[NFoldVector],
        context: Option<&[FieldDescriptor]>,
    ) -> ClassificationLabel {
        let bad = |n: usize| ClassificationLabel {
            per_component: vec![ComponentLabel::Invalid; n],
            overall: "Invalid".into(),
        };
        if generators.iter().any(|v| v.space != *self) {
            return bad(self.fold());
        }
        if let Some(ctx) = context {
            if ctx.len() != self.fold() {
                return bad(self.fold());
            }
        }
        let mut per_component = Vec::new();
        for i in 0..self.fold() {
            let scal = self.scalars(i);
            let ctx = context.map_or(scal, |c| c[i]);
            let nonzero = generators.iter().any(|v| !v.parts[i].is_zero());
            // over neutrosophic scalars any nonzero span reaches an I-part;
            // over a real context only the generators decide
            let neutro = if ctx.flavor == Flavor::Real {
                generators.iter().any(|v| v.parts[i].has_i())
            } else {
                nonzero
            };
            let label = if !ctx.contained_in(scal) {
                ComponentLabel::Invalid
            } else if ctx == scal {
                match (scal.flavor == Flavor::Real, neutro) {
                    (true, true) => ComponentLabel::NeutrosophicSubspace,
                    (true, false) => ComponentLabel::PseudoRealSubspace,
                    (false, true) => ComponentLabel::StrongNeutrosophic,
                    (false, false) => ComponentLabel::PseudoRealSubspace,
                }
            } else if ctx.flavor == Flavor::Real {
                // a strong space viewed over its real subfield
                if neutro {
                    ComponentLabel::PseudoStrong
                } else {
                    ComponentLabel::PseudoRealSubspace
                }
            } else if ctx.flavor == Flavor::PureNeutrosophic
                && scal.flavor == Flavor::FullNeutrosophic
            {
                if nonzero {
                    ComponentLabel::SpecialSubNeutrosophic(ctx.tag())
                } else {
                    ComponentLabel::PseudoRealSubspace
                }
            } else {
                ComponentLabel::Invalid
            };
            per_component.push(label);
        }
        let overall = overall_label(&per_component);
        ClassificationLabel { per_component, overall }
    }
}

fn overall_label(labels: &[ComponentLabel]) -> String {
    if labels.iter().any(|l| *l == ComponentLabel::Invalid) {
        return "Invalid".into();
    }
    let names: Vec<&str> = labels.iter().map(|l| l.name()).collect();
    if names.iter().all(|n| *n == names[0]) {
        return names[0].into();
    }
    let quasi = labels.iter().all(|l| {
        matches!(
            l,
            ComponentLabel::NeutrosophicSubspace | ComponentLabel::PseudoRealSubspace
        )
    });
    if quasi {
        return "QuasiPseudo".into();
    }
    names.join(" ∪ ")
}
