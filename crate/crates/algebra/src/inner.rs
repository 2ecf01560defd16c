//! Inner products on spaces with neutrosophic scalars: the standard dot
//! form per component, orthogonality, Gram-Schmidt, best approximation,
//! orthogonal complements with the direct-sum test, and the Bessel
//! inequality.
//!
//! Every value the form takes lives in N(K), where "x ≥ 0" is read through
//! the evaluation slots: nonnegative in both. That order is partial, and
//! the form is not positive definite; ‖(I)‖² = I vanishes in slot 0, so
//! positivity is a question answered per vector, never an axiom the module
//! assumes. Order-based checks run only over the rationals; prime fields
//! carry the arithmetic but no order, and asking raises UnorderedField.
//!
//! Division by a norm-squared requires it to be a unit of the ring. A
//! projection term divides only when its numerator is nonzero, so
//! already-orthogonal inputs pass through untouched; a genuinely needed
//! division by a non-unit is the ring obstruction NonInvertibleNorm.

use crate::error::{NError, Result};
use crate::field::{Base, BaseElem, Flavor};
use crate::kmatrix::KMatrix;
use crate::matrix::NMatrix;
use crate::nspace::{NFoldSpace, NFoldVector, Part, Shape};
use crate::poly::NPoly;
use crate::scalar::{NNum, Slot};

/// A space packaged with what the inner-product operations need to know.
///
/// Scalars must be neutrosophic in every component: projection coefficients
/// are ratios of dot values, which live in N(K), and real-scalar components
/// cannot absorb them. `orderable` is true exactly when every base field is
/// the rationals; it gates each ≤-based check.
#[derive(Debug, Clone, PartialEq)]
pub struct InnerSpaceContext {
    pub space: NFoldSpace,
    pub orderable: bool,
}

/// Outcome of the direct-sum test V = W ⊕ W⊥.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitReport {
    pub direct: bool,
    /// A nonzero vector lying in both W and W⊥ when the sum is not direct.
    pub witness: Option<NFoldVector>,
}

/// Bessel comparison Σ (β/αₖ)²/‖αₖ‖² against ‖β‖², one value per component.
#[derive(Debug, Clone, PartialEq)]
pub struct BesselReport {
    pub lhs: Vec<NNum>,
    pub rhs: Vec<NNum>,
    /// lhs ≤ rhs in every component, in both slots.
    pub holds: bool,
    /// β equals its best approximation from the set.
    pub equality: bool,
}

/// Coordinate pictures a component contributes: one per evaluation slot for
/// full scalars, the chart alone for the pure span of I.
fn slot_pictures(flavor: Flavor) -> &'static [Slot] {
    match flavor {
        Flavor::FullNeutrosophic => &[Slot::At0, Slot::At1],
        // real scalars never reach here: context construction refuses them
        Flavor::PureNeutrosophic | Flavor::Real => &[Slot::At1],
    }
}

fn padded_coords(part: &Part, slot: Slot, width: usize, base: Base) -> Vec<BaseElem> {
    let mut out: Vec<BaseElem> = part.entries().iter().map(|e| e.eval(slot)).collect();
    out.resize(width, BaseElem::zero(base));
    out
}

impl InnerSpaceContext {
    /// Wraps a space whose components all have neutrosophic scalars.
    pub fn new(space: NFoldSpace) -> Result<Self> {
        for i in 0..space.fold() {
            if space.scalars(i).flavor == Flavor::Real {
                return Err(NError::UnsupportedRegime);
            }
        }
        let orderable = (0..space.fold()).all(|i| space.scalars(i).base == Base::Rationals);
        Ok(InnerSpaceContext { space, orderable })
    }

    fn check_member(&self, v: &NFoldVector) -> Result<()> {
        if v.space != self.space {
            return Err(NError::SpaceMismatch);
        }
        Ok(())
    }

    /// The standard dot form, one value per component: the sum of entrywise
    /// products. Matrix components sum over all entries, polynomial
    /// components over coefficients.
    pub fn dot(&self, u: &NFoldVector, v: &NFoldVector) -> Result<Vec<NNum>> {
        self.check_member(u)?;
        self.check_member(v)?;
        let mut out = Vec::with_capacity(self.space.fold());
        for i in 0..self.space.fold() {
            let ue = u.parts[i].entries();
            let ve = v.parts[i].entries();
            let mut acc = NNum::zero(self.space.scalars(i));
            // coefficients past the shorter list are zero, so the zip is exact
            for (x, y) in ue.iter().zip(ve.iter()) {
                acc = acc.add(&x.mul(y)?)?;
            }
            out.push(acc);
        }
        Ok(out)
    }

    pub fn norm_sq(&self, v: &NFoldVector) -> Result<Vec<NNum>> {
        self.dot(v, v)
    }

    pub fn orthogonal(&self, u: &NFoldVector, v: &NFoldVector) -> Result<bool> {
        Ok(self.dot(u, v)?.iter().all(|x| x.is_zero()))
    }

    /// Whether ‖v‖² is strictly positive in every component, meaning both
    /// slots of each value are positive. The ring cannot promise this for
    /// nonzero vectors: ‖(I)‖² = I has slot-0 value 0, so positivity is
    /// reported per vector rather than assumed.
    pub fn positive_norm(&self, v: &NFoldVector) -> Result<bool> {
        if !self.orderable {
            return Err(NError::UnorderedField);
        }
        self.check_member(v)?;
        if v.is_zero() {
            return Err(NError::ZeroVector);
        }
        let norms = self.norm_sq(v)?;
        Ok(norms.iter().all(|x| x.is_positive() == Some(true)))
    }

    /// Componentwise dot(β, αₖ)/‖αₖ‖². Divides only where the numerator is
    /// nonzero; None means every component was zero and the projection term
    /// vanishes outright.
    fn proj_coeffs(
        &self,
        beta: &NFoldVector,
        ak: &NFoldVector,
        norm: &[NNum],
        k: usize,
    ) -> Result<Option<Vec<NNum>>> {
        let nums = self.dot(beta, ak)?;
        if nums.iter().all(|x| x.is_zero()) {
            return Ok(None);
        }
        let mut cs = Vec::with_capacity(nums.len());
        for (i, num) in nums.iter().enumerate() {
            if num.is_zero() {
                cs.push(NNum::zero(self.space.scalars(i)));
            } else {
                cs.push(num.div(&norm[i]).map_err(|_| NError::NonInvertibleNorm(k))?);
            }
        }
        Ok(Some(cs))
    }

    /// Orthogonalizes an independent list by the update
    /// αₘ = βₘ − Σₖ (βₘ/αₖ)/‖αₖ‖² · αₖ, applied per component.
    ///
    /// The output is pairwise orthogonal and spans what the input spans,
    /// prefix by prefix; both facts are re-verified before returning. An
    /// already orthogonal list comes back unchanged, even when its norms
    /// are not units, because no projection term needs the division.
    pub fn gram_schmidt(&self, vectors: &[NFoldVector]) -> Result<Vec<NFoldVector>> {
        for v in vectors {
            self.check_member(v)?;
        }
        if !self.space.independent(vectors)?.independent {
            return Err(NError::DependentInput);
        }
        let mut alphas: Vec<NFoldVector> = Vec::with_capacity(vectors.len());
        let mut norms: Vec<Vec<NNum>> = Vec::with_capacity(vectors.len());
        for beta in vectors {
            let mut alpha = beta.clone();
            for k in 0..alphas.len() {
                if let Some(cs) = self.proj_coeffs(beta, &alphas[k], &norms[k], k)? {
                    alpha = alpha.sub(&alphas[k].scale(&cs)?)?;
                }
            }
            norms.push(self.norm_sq(&alpha)?);
            alphas.push(alpha);
        }
        for j in 0..alphas.len() {
            for k in (j + 1)..alphas.len() {
                assert!(
                    self.orthogonal(&alphas[j], &alphas[k])?,
                    "orthogonalization left a nonzero dot"
                );
            }
        }
        for k in 0..alphas.len() {
            assert!(
                self.in_span(&vectors[..=k], &alphas[k])? && self.in_span(&alphas[..=k], &vectors[k])?,
                "orthogonalization changed a prefix span"
            );
        }
        Ok(alphas)
    }

    /// Best approximation to β from the span of a pairwise-orthogonal list:
    /// α = Σₖ (β/αₖ)/‖αₖ‖² · αₖ. The residual β − α is orthogonal to every
    /// list vector (re-verified), which makes α independent of the order
    /// the list is given in.
    pub fn best_approx(&self, beta: &NFoldVector, w_orth: &[NFoldVector]) -> Result<NFoldVector> {
        self.check_member(beta)?;
        for v in w_orth {
            self.check_member(v)?;
            if v.is_zero() {
                return Err(NError::ZeroVector);
            }
        }
        for j in 0..w_orth.len() {
            for k in (j + 1)..w_orth.len() {
                if !self.orthogonal(&w_orth[j], &w_orth[k])? {
                    return Err(NError::NotOrthogonal);
                }
            }
        }
        let mut alpha = NFoldVector::zero(&self.space);
        for (k, ak) in w_orth.iter().enumerate() {
            let nk = self.norm_sq(ak)?;
            if let Some(cs) = self.proj_coeffs(beta, ak, &nk, k)? {
                alpha = alpha.add(&ak.scale(&cs)?)?;
            }
        }
        let residual = beta.sub(&alpha)?;
        for ak in w_orth {
            assert!(
                self.orthogonal(&residual, ak)?,
                "approximation residual not orthogonal to the list"
            );
        }
        Ok(alpha)
    }

    /// Basis of the solution module of dot(v, g) = 0 for every generator g,
    /// found in each slot picture and recombined position by position.
    ///
    /// When the slot kernels have equal dimension the recombined list is a
    /// basis. When they do not, the solution module is not free; each slot
    /// kernel is then embedded on its own slot and the list is a generating
    /// set instead. An empty list means S⊥ = {0}.
    pub fn orth_complement(&self, gens: &[NFoldVector]) -> Result<Vec<NFoldVector>> {
        for g in gens {
            self.check_member(g)?;
        }
        let mut out = Vec::new();
        for i in 0..self.space.fold() {
            let n = self.space.comp_dim(i)?;
            let ef = self.space.components[i].entries;
            let kernels: Vec<Vec<Vec<BaseElem>>> = slot_pictures(ef.flavor)
                .iter()
                .map(|&s| {
                    if gens.is_empty() {
                        (0..n)
                            .map(|j| {
                                let mut e = vec![BaseElem::zero(ef.base); n];
                                e[j] = BaseElem::one(ef.base);
                                e
                            })
                            .collect()
                    } else {
                        let rows = gens
                            .iter()
                            .map(|g| padded_coords(&g.parts[i], s, n, ef.base))
                            .collect();
                        KMatrix::from_rows(rows, ef.base).kernel_basis()
                    }
                })
                .collect();
            match kernels.as_slice() {
                [chart] => {
                    for w in chart {
                        out.push(self.vector_with_part(i, self.nums_from_slots(i, None, Some(w), n)?)?);
                    }
                }
                [k0, k1] if k0.len() == k1.len() => {
                    for (u, w) in k0.iter().zip(k1) {
                        out.push(
                            self.vector_with_part(i, self.nums_from_slots(i, Some(u), Some(w), n)?)?,
                        );
                    }
                }
                [k0, k1] => {
                    for u in k0 {
                        out.push(self.vector_with_part(i, self.nums_from_slots(i, Some(u), None, n)?)?);
                    }
                    for w in k1 {
                        out.push(self.vector_with_part(i, self.nums_from_slots(i, None, Some(w), n)?)?);
                    }
                }
                _ => unreachable!("a component has one or two slot pictures"),
            }
        }
        for v in &out {
            assert!(!v.is_zero(), "complement generator degenerated to zero");
            for g in gens {
                assert!(self.orthogonal(v, g)?, "complement generator not orthogonal");
            }
        }
        Ok(out)
    }

    /// Does V = W ⊕ W⊥ hold? In each slot picture the sum is direct exactly
    /// when the Gram matrix of a slot basis of W is nonsingular; dimensions
    /// always add up, so failure means the slot intersection W ∩ W⊥ is
    /// nonzero, and a Gram kernel combination exhibits a witness in both.
    pub fn split_check(&self, w: &[NFoldVector]) -> Result<SplitReport> {
        for g in w {
            self.check_member(g)?;
        }
        for i in 0..self.space.fold() {
            let n = self.space.comp_dim(i)?;
            let ef = self.space.components[i].entries;
            for (pic, &s) in slot_pictures(ef.flavor).iter().enumerate() {
                let mut basis: Vec<Vec<BaseElem>> = Vec::new();
                let mut rank = 0;
                for g in w {
                    let r = padded_coords(&g.parts[i], s, n, ef.base);
                    let mut trial = basis.clone();
                    trial.push(r.clone());
                    let trial_rank = KMatrix::from_rows(trial, ef.base).rank();
                    if trial_rank > rank {
                        rank = trial_rank;
                        basis.push(r);
                    }
                }
                if basis.is_empty() {
                    continue;
                }
                let b = KMatrix::from_rows(basis.clone(), ef.base);
                let gram = b.mul(&b.transpose());
                if !gram.det().is_zero() {
                    continue;
                }
                let c = gram
                    .kernel_basis()
                    .into_iter()
                    .next()
                    .expect("a singular Gram matrix has a kernel");
                let mut combo = vec![BaseElem::zero(ef.base); n];
                for (cj, row) in c.iter().zip(&basis) {
                    for (t, rt) in row.iter().enumerate() {
                        combo[t] = combo[t].add(&cj.mul(rt));
                    }
                }
                let chart_only = slot_pictures(ef.flavor).len() == 1;
                let nums = if chart_only || pic == 1 {
                    self.nums_from_slots(i, None, Some(&combo), n)?
                } else {
                    self.nums_from_slots(i, Some(&combo), None, n)?
                };
                let witness = self.vector_with_part(i, nums)?;
                assert!(!witness.is_zero(), "split witness degenerated to zero");
                for g in w {
                    assert!(self.orthogonal(&witness, g)?, "split witness not in the complement");
                }
                assert!(self.in_span(w, &witness)?, "split witness escaped the subspace");
                return Ok(SplitReport { direct: false, witness: Some(witness) });
            }
        }
        Ok(SplitReport { direct: true, witness: None })
    }

    /// Compares Σₖ (β/αₖ)²/‖αₖ‖² with ‖β‖², componentwise, both slots.
    /// Equality holds exactly when β is its own best approximation from the
    /// set, which is checked directly.
    pub fn bessel_check(&self, beta: &NFoldVector, set: &[NFoldVector]) -> Result<BesselReport> {
        if !self.orderable {
            return Err(NError::UnorderedField);
        }
        let alpha = self.best_approx(beta, set)?;
        let mut lhs: Vec<NNum> =
            (0..self.space.fold()).map(|i| NNum::zero(self.space.scalars(i))).collect();
        for (k, ak) in set.iter().enumerate() {
            let nk = self.norm_sq(ak)?;
            let nums = self.dot(beta, ak)?;
            for (i, num) in nums.iter().enumerate() {
                if num.is_zero() {
                    continue;
                }
                let term = num.mul(num)?.div(&nk[i]).map_err(|_| NError::NonInvertibleNorm(k))?;
                lhs[i] = lhs[i].add(&term)?;
            }
        }
        let rhs = self.norm_sq(beta)?;
        let mut holds = true;
        for (l, r) in lhs.iter().zip(rhs.iter()) {
            holds &= r.sub(l)?.is_nonnegative() == Some(true);
        }
        Ok(BesselReport { lhs, rhs, holds, equality: alpha == *beta })
    }

    /// Membership in the span over the scalars. Checking coordinates in
    /// every slot picture is exact: a combining coefficient recombines
    /// freely from independent slot solutions.
    fn in_span(&self, gens: &[NFoldVector], v: &NFoldVector) -> Result<bool> {
        if gens.is_empty() {
            return Ok(v.is_zero());
        }
        for i in 0..self.space.fold() {
            let width = gens
                .iter()
                .chain(std::iter::once(v))
                .map(|g| g.parts[i].entries().len())
                .max()
                .unwrap()
                .max(1);
            let base = self.space.scalars(i).base;
            for &s in slot_pictures(self.space.components[i].entries.flavor) {
                let cols: Vec<Vec<BaseElem>> =
                    gens.iter().map(|g| padded_coords(&g.parts[i], s, width, base)).collect();
                let spanned = KMatrix::from_cols(cols.clone(), base);
                let mut with_v = cols;
                with_v.push(padded_coords(&v.parts[i], s, width, base));
                if spanned.rank() != KMatrix::from_cols(with_v, base).rank() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Entry list from per-slot coordinate vectors; a missing slot is zero.
    fn nums_from_slots(
        &self,
        i: usize,
        at0: Option<&[BaseElem]>,
        at1: Option<&[BaseElem]>,
        n: usize,
    ) -> Result<Vec<NNum>> {
        let ef = self.space.components[i].entries;
        let zero = BaseElem::zero(ef.base);
        (0..n)
            .map(|j| {
                let u = at0.map_or(&zero, |s| &s[j]);
                let w = at1.map_or(&zero, |s| &s[j]);
                NNum::recombine(u, w, ef)
            })
            .collect()
    }

    /// The vector whose component i has the given entries and whose other
    /// components are zero.
    fn vector_with_part(&self, i: usize, entries: Vec<NNum>) -> Result<NFoldVector> {
        let amb = self.space.components[i];
        let part = match amb.shape {
            Shape::Tuple(_) => Part::Tuple(entries),
            Shape::Matrix(r, c) => Part::Matrix(NMatrix::new(r, c, entries, amb.entries)?),
            Shape::PolyUpTo(_) => Part::Poly(NPoly::new(entries, amb.entries)?),
            Shape::PolyAny => return Err(NError::InfiniteDimension),
        };
        let parts = (0..self.space.fold())
            .map(|j| if j == i { part.clone() } else { self.space.zero_part(j) })
            .collect();
        NFoldVector::new(self.space.clone(), parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldDescriptor;
    use crate::nspace::{ComponentAmbient, NFoldField};
    use proptest::prelude::*;

    fn q_full() -> FieldDescriptor {
        FieldDescriptor::rationals(Flavor::FullNeutrosophic)
    }

    fn qi() -> FieldDescriptor {
        FieldDescriptor::rationals(Flavor::PureNeutrosophic)
    }

    fn z_full(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p, Flavor::FullNeutrosophic).unwrap()
    }

    fn tuple_space(f: FieldDescriptor, len: usize) -> NFoldSpace {
        NFoldSpace::new(
            NFoldField::type_i(f, 1).unwrap(),
            vec![ComponentAmbient { shape: Shape::Tuple(len), entries: f }],
        )
        .unwrap()
    }

    fn ctx(f: FieldDescriptor, len: usize) -> InnerSpaceContext {
        InnerSpaceContext::new(tuple_space(f, len)).unwrap()
    }

    fn tup(space: &NFoldSpace, pairs: &[(i64, i64)]) -> NFoldVector {
        let ef = space.components[0].entries;
        let es = pairs.iter().map(|&(a, b)| NNum::from_i64(a, b, ef).unwrap()).collect();
        NFoldVector::new(space.clone(), vec![Part::Tuple(es)]).unwrap()
    }

    fn fmt_vec(v: &NFoldVector) -> String {
        let es = v.parts[0].entries();
        format!("({})", es.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", "))
    }

    #[test]
    fn dot_is_the_componentwise_entry_sum() {
        let c = ctx(q_full(), 2);
        let u = tup(&c.space, &[(1, 0), (0, 1)]);
        let v = tup(&c.space, &[(0, 1), (1, 0)]);
        // 1·I + I·1
        assert_eq!(c.dot(&u, &v).unwrap()[0].to_string(), "2I");
        assert_eq!(c.norm_sq(&u).unwrap()[0].to_string(), "1+I");
        let w = tup(&c.space, &[(1, 0), (-1, 0)]);
        assert_eq!(c.dot(&u, &w).unwrap()[0].to_string(), "1-I");
        assert!(!c.orthogonal(&u, &w).unwrap());
        assert!(c.orthogonal(&u, &NFoldVector::zero(&c.space)).unwrap());
    }

    #[test]
    fn dot_rejects_vectors_from_another_space() {
        let c = ctx(q_full(), 2);
        let other = tuple_space(q_full(), 3);
        let v = tup(&other, &[(1, 0), (0, 0), (0, 0)]);
        assert!(matches!(c.dot(&v, &v), Err(NError::SpaceMismatch)));
    }

    #[test]
    fn dot_on_matrix_components_sums_all_entries() {
        let f = q_full();
        let space = NFoldSpace::new(
            NFoldField::type_i(f, 1).unwrap(),
            vec![ComponentAmbient { shape: Shape::Matrix(2, 2), entries: f }],
        )
        .unwrap();
        let c = InnerSpaceContext::new(space.clone()).unwrap();
        let u = NFoldVector::new(
            space.clone(),
            vec![Part::Matrix(NMatrix::from_pairs(&[&[(1, 0), (0, 0)], &[(0, 1), (0, 0)]], f).unwrap())],
        )
        .unwrap();
        let v = NFoldVector::new(
            space.clone(),
            vec![Part::Matrix(NMatrix::from_pairs(&[&[(1, 0), (0, 0)], &[(1, 0), (0, 0)]], f).unwrap())],
        )
        .unwrap();
        assert_eq!(c.dot(&u, &v).unwrap()[0].to_string(), "1+I");
    }

    #[test]
    fn context_requires_neutrosophic_scalars() {
        let real = FieldDescriptor::rationals(Flavor::Real);
        let space = NFoldSpace::new(
            NFoldField::type_i(real, 1).unwrap(),
            vec![ComponentAmbient { shape: Shape::Tuple(2), entries: q_full() }],
        )
        .unwrap();
        assert!(matches!(InnerSpaceContext::new(space), Err(NError::UnsupportedRegime)));
        assert!(ctx(q_full(), 2).orderable);
        assert!(!ctx(z_full(3), 2).orderable);
    }

    #[test]
    fn positivity_reports_the_neutrosophic_degeneration() {
        let c = ctx(q_full(), 2);
        // ‖(I, 0)‖² = I: zero in slot 0, so not positive
        assert!(!c.positive_norm(&tup(&c.space, &[(0, 1), (0, 0)])).unwrap());
        assert!(c.positive_norm(&tup(&c.space, &[(1, 0), (1, 0)])).unwrap());
        assert!(matches!(
            c.positive_norm(&NFoldVector::zero(&c.space)),
            Err(NError::ZeroVector)
        ));
        let zc = ctx(z_full(3), 2);
        assert!(matches!(
            zc.positive_norm(&tup(&zc.space, &[(1, 0), (0, 0)])),
            Err(NError::UnorderedField)
        ));
    }

    #[test]
    fn gram_schmidt_matches_the_worked_example() {
        let c = ctx(q_full(), 2);
        let b1 = tup(&c.space, &[(1, 0), (1, 0)]);
        let b2 = tup(&c.space, &[(1, 1), (0, 0)]);
        let out = c.gram_schmidt(&[b1.clone(), b2]).unwrap();
        assert_eq!(out[0], b1);
        // (1+I, 0) − (1+I)/2 · (1, 1)
        assert_eq!(fmt_vec(&out[1]), "(1/2+1/2I, -1/2-1/2I)");
        assert!(c.orthogonal(&out[0], &out[1]).unwrap());
    }

    #[test]
    fn gram_schmidt_leaves_orthogonal_inputs_alone() {
        let c = ctx(q_full(), 3);
        let basis: Vec<_> = (0..3)
            .map(|j| {
                let mut pairs = [(0, 0); 3];
                pairs[j] = (1, 0);
                tup(&c.space, &pairs)
            })
            .collect();
        assert_eq!(c.gram_schmidt(&basis).unwrap(), basis);
        // ‖(1,1,0)‖² = 0 over N(Z2), but nothing ever divides by it
        let c2 = ctx(z_full(2), 3);
        let skewless =
            vec![tup(&c2.space, &[(1, 0), (1, 0), (0, 0)]), tup(&c2.space, &[(0, 0), (0, 0), (1, 0)])];
        assert!(!c2.norm_sq(&skewless[0]).unwrap()[0].is_unit());
        assert_eq!(c2.gram_schmidt(&skewless).unwrap(), skewless);
    }

    #[test]
    fn gram_schmidt_rejects_dependent_input() {
        let c = ctx(q_full(), 2);
        let vs = vec![tup(&c.space, &[(1, 0), (0, 0)]), tup(&c.space, &[(2, 0), (0, 0)])];
        assert!(matches!(c.gram_schmidt(&vs), Err(NError::DependentInput)));
    }

    #[test]
    fn gram_schmidt_reports_the_ring_obstruction() {
        // dot((1,0), (1,1)) = 1 forces a division by ‖(1,1)‖² = 2 = 0 in Z2
        let c = ctx(z_full(2), 2);
        let vs = vec![tup(&c.space, &[(1, 0), (1, 0)]), tup(&c.space, &[(1, 0), (0, 0)])];
        assert!(matches!(c.gram_schmidt(&vs), Err(NError::NonInvertibleNorm(0))));
    }

    #[test]
    fn best_approx_projects_onto_the_line() {
        let c = ctx(q_full(), 3);
        let beta = tup(&c.space, &[(1, 0), (0, 1), (0, 0)]);
        let w = vec![tup(&c.space, &[(1, 0), (1, 0), (0, 0)])];
        let alpha = c.best_approx(&beta, &w).unwrap();
        assert_eq!(fmt_vec(&alpha), "(1/2+1/2I, 1/2+1/2I, 0)");

        let c2 = ctx(q_full(), 2);
        let beta2 = tup(&c2.space, &[(3, 2), (1, -1)]);
        let line = vec![tup(&c2.space, &[(1, 0), (0, 0)])];
        assert_eq!(fmt_vec(&c2.best_approx(&beta2, &line).unwrap()), "(3+2I, 0)");
    }

    #[test]
    fn best_approx_keeps_span_members_fixed() {
        let c = ctx(q_full(), 3);
        let w = vec![tup(&c.space, &[(1, 0), (1, 0), (0, 0)])];
        let beta = tup(&c.space, &[(2, 1), (2, 1), (0, 0)]);
        let alpha = c.best_approx(&beta, &w).unwrap();
        assert_eq!(alpha, beta);
        assert!(beta.sub(&alpha).unwrap().is_zero());
    }

    #[test]
    fn best_approx_is_order_invariant_and_idempotent() {
        let c = ctx(q_full(), 3);
        let w1 = tup(&c.space, &[(1, 0), (1, 0), (0, 0)]);
        let w2 = tup(&c.space, &[(1, 0), (-1, 0), (0, 0)]);
        let beta = tup(&c.space, &[(1, 0), (0, 1), (0, 2)]);
        let alpha = c.best_approx(&beta, &[w1.clone(), w2.clone()]).unwrap();
        assert_eq!(alpha, c.best_approx(&beta, &[w2.clone(), w1.clone()]).unwrap());
        assert_eq!(alpha, c.best_approx(&alpha, &[w1.clone(), w2.clone()]).unwrap());
        // the residual lands in the complement of W
        let residual = beta.sub(&alpha).unwrap();
        let comp = c.orth_complement(&[w1, w2]).unwrap();
        assert!(c.in_span(&comp, &residual).unwrap());
    }

    #[test]
    fn best_approx_rejects_a_skew_family() {
        let c = ctx(q_full(), 2);
        let w = vec![tup(&c.space, &[(1, 0), (0, 0)]), tup(&c.space, &[(1, 0), (1, 0)])];
        let beta = tup(&c.space, &[(0, 0), (1, 0)]);
        assert!(matches!(c.best_approx(&beta, &w), Err(NError::NotOrthogonal)));
        let zeroed = vec![NFoldVector::zero(&c.space)];
        assert!(matches!(c.best_approx(&beta, &zeroed), Err(NError::ZeroVector)));
    }

    #[test]
    fn orth_complement_of_a_line() {
        let c = ctx(q_full(), 2);
        let e1 = tup(&c.space, &[(1, 0), (0, 0)]);
        let comp = c.orth_complement(&[e1.clone()]).unwrap();
        assert_eq!(comp.len(), 1);
        assert_eq!(fmt_vec(&comp[0]), "(0, 1)");
        let e2 = tup(&c.space, &[(0, 0), (1, 0)]);
        assert!(c.orth_complement(&[e1, e2]).unwrap().is_empty());
        // complement of nothing is everything
        let full = c.orth_complement(&[]).unwrap();
        assert_eq!(full.len(), 2);
        assert_eq!(fmt_vec(&full[0]), "(1, 0)");
    }

    #[test]
    fn orth_complement_recombines_slot_solutions() {
        let c = ctx(q_full(), 2);
        let s = tup(&c.space, &[(1, 0), (0, 1)]);
        let comp = c.orth_complement(&[s.clone()]).unwrap();
        assert_eq!(comp.len(), 1);
        assert_eq!(fmt_vec(&comp[0]), "(-I, 1)");
        assert!(c.orthogonal(&comp[0], &s).unwrap());
        // the book's generator (I, −1) spans the same line
        let book = tup(&c.space, &[(0, 1), (-1, 0)]);
        assert!(c.in_span(&comp, &book).unwrap());
        assert!(c.in_span(&[book], &comp[0]).unwrap());
    }

    #[test]
    fn orth_complement_embeds_mismatched_slot_kernels() {
        let c = ctx(q_full(), 2);
        // (I, 0) vanishes in slot 0, so that slot constrains nothing
        let s = tup(&c.space, &[(0, 1), (0, 0)]);
        let comp = c.orth_complement(&[s.clone()]).unwrap();
        let shown: Vec<String> = comp.iter().map(fmt_vec).collect();
        assert_eq!(shown, ["(1-I, 0)", "(0, 1-I)", "(0, I)"]);
        for v in &comp {
            assert!(c.orthogonal(v, &s).unwrap());
        }
    }

    #[test]
    fn split_check_confirms_the_book_direct_sum() {
        let c = ctx(q_full(), 2);
        let report = c.split_check(&[tup(&c.space, &[(1, 0), (0, 1)])]).unwrap();
        assert!(report.direct);
        assert!(report.witness.is_none());
    }

    #[test]
    fn split_check_catches_ring_degeneration() {
        let c = ctx(z_full(2), 2);
        // over N(Z2) the vector (1,1) is orthogonal to itself
        let w = tup(&c.space, &[(1, 0), (1, 0)]);
        let report = c.split_check(&[w]).unwrap();
        assert!(!report.direct);
        assert_eq!(fmt_vec(report.witness.as_ref().unwrap()), "(1+I, 1+I)");
    }

    #[test]
    fn pure_components_use_the_chart() {
        let c = ctx(qi(), 2);
        let u = tup(&c.space, &[(0, 1), (0, 2)]);
        let v = tup(&c.space, &[(0, 2), (0, 1)]);
        assert_eq!(c.dot(&u, &v).unwrap()[0].to_string(), "4I");
        // every nonzero norm-squared lands in QI, so positivity always fails
        assert!(!c.positive_norm(&u).unwrap());
        let comp = c.orth_complement(&[tup(&c.space, &[(0, 1), (0, 1)])]).unwrap();
        assert_eq!(comp.len(), 1);
        assert_eq!(fmt_vec(&comp[0]), "(-I, I)");
    }

    #[test]
    fn bessel_matches_the_slot_values() {
        let c = ctx(q_full(), 2);
        let beta = tup(&c.space, &[(1, 0), (0, 1)]);
        let set = vec![tup(&c.space, &[(1, 0), (0, 0)])];
        let rep = c.bessel_check(&beta, &set).unwrap();
        assert_eq!(rep.lhs[0].to_string(), "1");
        assert_eq!(rep.rhs[0].to_string(), "1+I");
        assert!(rep.holds);
        assert!(!rep.equality);
        // strict only in slot 1: lhs evaluates to (1,1), rhs to (1,2)
        assert_eq!(rep.rhs[0].eval(Slot::At0), rep.lhs[0].eval(Slot::At0));
        assert_ne!(rep.rhs[0].eval(Slot::At1), rep.lhs[0].eval(Slot::At1));
    }

    #[test]
    fn bessel_equality_exactly_on_span_members() {
        let c = ctx(q_full(), 2);
        let set = vec![tup(&c.space, &[(1, 0), (0, 0)])];
        let inside = c.bessel_check(&tup(&c.space, &[(2, 0), (0, 0)]), &set).unwrap();
        assert!(inside.holds && inside.equality);
        assert_eq!(inside.lhs, inside.rhs);
        let across = c.bessel_check(&tup(&c.space, &[(0, 0), (1, 0)]), &set).unwrap();
        assert!(across.holds && !across.equality);
        assert!(across.lhs[0].is_zero());
    }

    #[test]
    fn bessel_requires_an_order() {
        let c = ctx(z_full(3), 2);
        let beta = tup(&c.space, &[(1, 0), (0, 0)]);
        assert!(matches!(c.bessel_check(&beta, &[]), Err(NError::UnorderedField)));
    }

    #[test]
    fn orthogonal_unit_sets_are_independent() {
        let c = ctx(q_full(), 2);
        let set =
            vec![tup(&c.space, &[(1, 0), (1, 0)]), tup(&c.space, &[(1, 0), (-1, 0)])];
        assert!(c.orthogonal(&set[0], &set[1]).unwrap());
        for v in &set {
            assert!(c.norm_sq(v).unwrap()[0].is_unit());
        }
        assert!(c.space.independent(&set).unwrap().independent);
    }

    fn arb_qvec(len: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
        proptest::collection::vec((-3i64..=3, -3i64..=3), len)
    }

    proptest! {
        #[test]
        fn gram_schmidt_orthogonalizes_random_independent_sets(
            rows in proptest::collection::vec(arb_qvec(4), 3)
        ) {
            let c = ctx(q_full(), 4);
            let vs: Vec<_> = rows.iter().map(|r| tup(&c.space, r)).collect();
            prop_assume!(c.space.independent(&vs).unwrap().independent);
            // a random set may still hit a non-unit norm; that exit is legal
            let out = match c.gram_schmidt(&vs) {
                Ok(out) => out,
                Err(NError::NonInvertibleNorm(_)) => return Ok(()),
                Err(e) => panic!("unexpected error {e}"),
            };
            for j in 0..out.len() {
                for k in (j + 1)..out.len() {
                    prop_assert!(c.orthogonal(&out[j], &out[k]).unwrap());
                }
            }
            for k in 0..out.len() {
                prop_assert!(c.in_span(&vs[..=k], &out[k]).unwrap());
                prop_assert!(c.in_span(&out[..=k], &vs[k]).unwrap());
            }
        }

        #[test]
        fn bessel_holds_with_equality_exactly_in_span(
            rows in proptest::collection::vec(arb_qvec(3), 2),
            beta in arb_qvec(3)
        ) {
            let c = ctx(q_full(), 3);
            let vs: Vec<_> = rows.iter().map(|r| tup(&c.space, r)).collect();
            prop_assume!(c.space.independent(&vs).unwrap().independent);
            let set = match c.gram_schmidt(&vs) {
                Ok(out) => out,
                Err(NError::NonInvertibleNorm(_)) => return Ok(()),
                Err(e) => panic!("unexpected error {e}"),
            };
            let b = tup(&c.space, &beta);
            let rep = match c.bessel_check(&b, &set) {
                Ok(rep) => rep,
                Err(NError::NonInvertibleNorm(_)) => return Ok(()),
                Err(e) => panic!("unexpected error {e}"),
            };
            prop_assert!(rep.holds);
            prop_assert_eq!(rep.equality, c.in_span(&set, &b).unwrap());
        }
    }
}
