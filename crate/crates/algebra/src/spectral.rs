//! Spectral theory for square matrices over N(K): characteristic values,
//! eigenvectors, minimal polynomials, and the canonical decompositions
//! (diagonal plus nilpotent, primary, rational, Jordan).
//!
//! Every operation runs the classical algorithm inside each evaluation slot,
//! where the scalars form a genuine field, then recombines the slot answers
//! into ring-level data. Recombination is unconditional where the shapes
//! always agree (D and N, projections with equal component counts) and
//! guarded by structure flags where they may not (invariant factor degrees,
//! Jordan block layouts, minimal polynomial degrees). Rings with a single
//! coordinate system, real scalars or the pure span of I, run one classical
//! pass and report it in both slot positions.
//!
//! All recombined identities are re-verified by exact matrix arithmetic
//! before a report is returned; a violated identity is a bug, not an error
//! value, and panics.

use std::fmt;

use crate::error::{NError, Result};
use crate::field::{Base, BaseElem, FieldDescriptor, Flavor};
use crate::kmatrix::KMatrix;
use crate::kpoly::KPoly;
use crate::matrix::NMatrix;
use crate::poly::NPoly;
use crate::scalar::{NNum, Slot};

/// Characteristic values of a square matrix. A scalar c is characteristic
/// exactly when det(A - c·Id) = 0 in the ring, which happens when every
/// slot sees a classical eigenvalue; `roots` lists all of them, sorted by
/// (real part, I part). `slot_spectra` keeps the finer per-slot picture,
/// including values that are singular in only one slot.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub charpoly: NPoly,
    pub roots: Vec<NNum>,
    pub slot_spectra: (Vec<BaseElem>, Vec<BaseElem>),
    /// True when the slot root searches were exhaustive. Always true over
    /// a prime field; over the rationals the candidate enumeration reports
    /// whether it covered every divisor pair.
    pub complete: bool,
}

/// Minimal monic annihilator data. When the slot minimal polynomials have
/// equal degree their coefficientwise recombination is the unique monic
/// generator of the annihilator ideal and `principal` is true. Otherwise no
/// monic generator exists; the shorter slot polynomial is padded by x^Δ so
/// a single annihilating polynomial can still be reported, and `principal`
/// is false.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnihilatorResult {
    pub polynomial: NPoly,
    pub principal: bool,
    pub slot_minpolys: (KPoly, KPoly),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompKind {
    DiagonalNilpotent,
    Primary,
    Rational,
    Jordan,
    Cyclic,
}

impl fmt::Display for DecompKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecompKind::DiagonalNilpotent => "DN",
            DecompKind::Primary => "Primary",
            DecompKind::Rational => "Rational",
            DecompKind::Jordan => "Jordan",
            DecompKind::Cyclic => "Cyclic",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompFlag {
    /// Slot minimal polynomial degrees differ; the reported annihilator is
    /// padded rather than a monic ideal generator.
    NonPrincipalMinPoly,
    /// The two slots decompose with different shapes (component counts,
    /// factor degrees, or block layouts); per-slot data is still complete.
    SlotStructureMismatch,
    /// A slot characteristic polynomial has no complete linear
    /// factorization over the base field.
    DoesNotSplit,
}

impl fmt::Display for DecompFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecompFlag::NonPrincipalMinPoly => "NonPrincipalMinPoly",
            DecompFlag::SlotStructureMismatch => "SlotStructureMismatch",
            DecompFlag::DoesNotSplit => "DoesNotSplit",
        })
    }
}

/// One classical decomposition, computed entirely inside a single slot.
/// `mats` and `polys` hold the named pieces: "D"/"N" and the interpolant
/// "h" for DN, projections "E1".. and factors "f1".. for primary, the form
/// "R"/"J" with basis "P" and invariant factors "p1".. for rational and
/// Jordan.
#[derive(Debug, Clone, PartialEq)]
pub struct SlotDecomposition {
    pub slot: Slot,
    pub mats: Vec<(String, KMatrix)>,
    pub polys: Vec<(String, KPoly)>,
}

/// Ring-level pieces rebuilt from the slot decompositions, under the same
/// names as the per-slot data.
#[derive(Debug, Clone, PartialEq)]
pub struct RecombinedForm {
    pub mats: Vec<(String, NMatrix)>,
    pub polys: Vec<(String, NPoly)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionReport {
    pub kind: DecompKind,
    /// Present when the slot structures line up (always, for DN).
    pub recombined: Option<RecombinedForm>,
    pub per_slot: (SlotDecomposition, SlotDecomposition),
    pub flags: Vec<DecompFlag>,
}

fn require_square(a: &NMatrix) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(NError::NonSquare(a.rows(), a.cols()))
    }
}

fn require_prime_base(a: &NMatrix) -> Result<()> {
    match a.field().base {
        Base::Prime(_) => Ok(()),
        Base::Rationals => Err(NError::UnsupportedField),
    }
}

/// The coordinate systems of the scalar ring, each with the matrix image
/// it sees. A full ring has two evaluation slots; real scalars and the
/// pure span of I each have a single classical picture (for pure scalars
/// the slot-1 evaluation is the chart aI ↦ a).
fn views(a: &NMatrix) -> Vec<(Slot, KMatrix)> {
    match a.field().flavor {
        Flavor::Real => vec![(Slot::At0, a.eval_slot(Slot::At0))],
        Flavor::PureNeutrosophic => vec![(Slot::At1, a.eval_slot(Slot::At1))],
        Flavor::FullNeutrosophic => vec![
            (Slot::At0, a.eval_slot(Slot::At0)),
            (Slot::At1, a.eval_slot(Slot::At1)),
        ],
    }
}

fn assemble_matrix(field: FieldDescriptor, outs: &[KMatrix]) -> Result<NMatrix> {
    match field.flavor {
        Flavor::Real => NMatrix::recombine(&outs[0], &outs[0], field),
        Flavor::PureNeutrosophic => NMatrix::from_chart(&outs[0], field),
        Flavor::FullNeutrosophic => NMatrix::recombine(&outs[0], &outs[1], field),
    }
}

fn assemble_poly(field: FieldDescriptor, outs: &[KPoly]) -> Result<NPoly> {
    match field.flavor {
        Flavor::Real => NPoly::recombine(&outs[0], &outs[0], field),
        Flavor::PureNeutrosophic => NPoly::from_chart(&outs[0], field),
        Flavor::FullNeutrosophic => NPoly::recombine(&outs[0], &outs[1], field),
    }
}

fn assemble_num(field: FieldDescriptor, parts: &[BaseElem]) -> Result<NNum> {
    match field.flavor {
        Flavor::Real => NNum::recombine(&parts[0], &parts[0], field),
        Flavor::PureNeutrosophic => {
            NNum::recombine(&BaseElem::zero(field.base), &parts[0], field)
        }
        Flavor::FullNeutrosophic => NNum::recombine(&parts[0], &parts[1], field),
    }
}

fn assemble_vector(field: FieldDescriptor, parts: &[Vec<BaseElem>]) -> Result<Vec<NNum>> {
    let n = parts[0].len();
    (0..n)
        .map(|j| {
            let slot_vals: Vec<BaseElem> = parts.iter().map(|p| p[j].clone()).collect();
            assemble_num(field, &slot_vals)
        })
        .collect()
}

fn slot_vec(v: &[NNum], slot: Slot) -> Vec<BaseElem> {
    v.iter().map(|x| x.eval(slot)).collect()
}

fn unit_vec(n: usize, i: usize, base: Base) -> Vec<BaseElem> {
    let mut v = vec![BaseElem::zero(base); n];
    v[i] = BaseElem::one(base);
    v
}

fn vec_add(a: &[BaseElem], b: &[BaseElem]) -> Vec<BaseElem> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

fn vec_sub(a: &[BaseElem], b: &[BaseElem]) -> Vec<BaseElem> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

/// Spectrum of a square matrix: slot eigenvalues computed classically,
/// then every cross-recombination reported as a characteristic value and
/// re-verified against det(A - c·Id) = 0. A full ring with slot spectra of
/// sizes j and k therefore has j·k characteristic values.
pub fn spectrum(a: &NMatrix) -> Result<SpectrumReport> {
    require_square(a)?;
    let field = a.field();
    let charpoly = a.charpoly()?;
    let vs = views(a);

    let mut spectra: Vec<Vec<BaseElem>> = Vec::new();
    let mut complete = true;
    for (_, m) in &vs {
        let (found, comp) = m.charpoly().roots()?;
        complete &= comp;
        let mut rs: Vec<BaseElem> = found.into_iter().map(|(r, _)| r).collect();
        rs.sort();
        spectra.push(rs);
    }

    let mut roots = Vec::new();
    match field.flavor {
        Flavor::FullNeutrosophic => {
            for r0 in &spectra[0] {
                for r1 in &spectra[1] {
                    roots.push(NNum::recombine(r0, r1, field)?);
                }
            }
        }
        _ => {
            for r in &spectra[0] {
                roots.push(assemble_num(field, std::slice::from_ref(r))?);
            }
        }
    }
    roots.sort_by(|x, y| {
        x.real_part()
            .cmp(y.real_part())
            .then(x.i_part().cmp(y.i_part()))
    });

    // soundness: each reported value makes A - c·Id singular in the ring
    let id = NMatrix::identity(a.rows(), field);
    for c in &roots {
        let shifted = a.sub(&id.scale(c)?)?;
        assert!(
            shifted.det()?.is_zero(),
            "characteristic value fails the determinant test"
        );
    }

    let s0 = spectra[0].clone();
    let s1 = spectra.last().expect("at least one view").clone();
    Ok(SpectrumReport {
        charpoly,
        roots,
        slot_spectra: (s0, s1),
        complete,
    })
}

/// Generating set for the eigenspace of `c`: each slot kernel of
/// ε(A) - ε(c)·Id is embedded back with zero in the opposite slot, so over
/// a full ring the set {recombine(u, 0)} ∪ {recombine(0, w)} generates all
/// solutions of A·v = c·v as an N(K) module. Every returned vector is
/// nonzero and satisfies the eigen identity exactly.
pub fn eigenvectors(a: &NMatrix, c: &NNum) -> Result<Vec<Vec<NNum>>> {
    require_square(a)?;
    let field = a.field();
    if c.field != field {
        return Err(NError::FieldMismatch);
    }
    let id = NMatrix::identity(a.rows(), field);
    let shifted = a.sub(&id.scale(c)?)?;
    if !shifted.det()?.is_zero() {
        return Err(NError::NotACharacteristicValue);
    }

    let mut out: Vec<Vec<NNum>> = Vec::new();
    match field.flavor {
        Flavor::FullNeutrosophic => {
            let zero = BaseElem::zero(field.base);
            for u in shifted.eval_slot(Slot::At0).kernel_basis() {
                out.push(
                    u.iter()
                        .map(|x| NNum::recombine(x, &zero, field))
                        .collect::<Result<_>>()?,
                );
            }
            for w in shifted.eval_slot(Slot::At1).kernel_basis() {
                out.push(
                    w.iter()
                        .map(|x| NNum::recombine(&zero, x, field))
                        .collect::<Result<_>>()?,
                );
            }
        }
        _ => {
            let (_, m) = &views(&shifted)[0];
            for u in m.kernel_basis() {
                out.push(assemble_vector(field, std::slice::from_ref(&u))?);
            }
        }
    }

    for v in &out {
        assert!(v.iter().any(|x| !x.is_zero()), "eigenvector is nonzero");
        let av = a.mul_vec(v)?;
        let cv: Vec<NNum> = v.iter().map(|x| x.mul(c)).collect::<Result<_>>()?;
        assert_eq!(av, cv, "eigen identity A v = c v");
    }
    Ok(out)
}

/// Recombine slot annihilators under the padding convention: equal degrees
/// recombine directly into the monic ideal generator; unequal degrees pad
/// the shorter polynomial by x^Δ, which still annihilates but generates a
/// strictly larger ideal, hence `principal: false`.
fn recombine_annihilators(field: FieldDescriptor, polys: &[KPoly]) -> Result<AnnihilatorResult> {
    if polys.len() == 1 {
        let p = &polys[0];
        return Ok(AnnihilatorResult {
            polynomial: assemble_poly(field, std::slice::from_ref(p))?,
            principal: true,
            slot_minpolys: (p.clone(), p.clone()),
        });
    }
    let (m0, m1) = (&polys[0], &polys[1]);
    let d0 = m0.degree().finite().expect("nonzero annihilator");
    let d1 = m1.degree().finite().expect("nonzero annihilator");
    let one = BaseElem::one(field.base);
    let (p0, p1) = if d0 == d1 {
        (m0.clone(), m1.clone())
    } else if d0 < d1 {
        (m0.mul(&KPoly::monomial(one, d1 - d0)), m1.clone())
    } else {
        (m0.clone(), m1.mul(&KPoly::monomial(one, d0 - d1)))
    };
    Ok(AnnihilatorResult {
        polynomial: NPoly::recombine(&p0, &p1, field)?,
        principal: d0 == d1,
        slot_minpolys: (m0.clone(), m1.clone()),
    })
}

/// Minimal annihilating polynomial of a square matrix, slot by slot.
pub fn minpoly(a: &NMatrix) -> Result<AnnihilatorResult> {
    require_square(a)?;
    let vs = views(a);
    let polys: Vec<KPoly> = vs.iter().map(|(_, m)| m.minpoly()).collect();
    let res = recombine_annihilators(a.field(), &polys)?;
    assert!(
        a.eval_poly(&res.polynomial)?.is_zero(),
        "minimal polynomial annihilates"
    );
    for ((_, m), p) in vs.iter().zip(&polys) {
        assert!(
            p.divides(&m.charpoly()),
            "slot minimal polynomial divides the slot characteristic polynomial"
        );
    }
    Ok(res)
}

/// Cayley-Hamilton: the characteristic polynomial annihilates the matrix,
/// and each slot minimal polynomial divides the slot characteristic
/// polynomial.
pub fn cayley_hamilton_check(a: &NMatrix) -> Result<bool> {
    require_square(a)?;
    let p = a.charpoly()?;
    let annihilates = a.eval_poly(&p)?.is_zero();
    let divides = views(a)
        .iter()
        .all(|(_, m)| m.minpoly().divides(&m.charpoly()));
    Ok(annihilates && divides)
}

/// Roots of `f` when it splits into linear factors over its base field:
/// `Some(roots)` when the found multiplicities exhaust the degree, `None`
/// when the search was exhaustive and they do not. Over the rationals an
/// incomplete candidate search cannot distinguish "irrational roots" from
/// "missed roots", so it refuses to decide.
fn split_roots(f: &KPoly) -> Result<Option<Vec<(BaseElem, u32)>>> {
    let deg = f.degree().finite().expect("nonzero polynomial");
    let (mut roots, complete) = f.roots()?;
    let found: u32 = roots.iter().map(|(_, m)| *m).sum();
    if found as usize == deg {
        roots.sort_by(|x, y| x.0.cmp(&y.0));
        return Ok(Some(roots));
    }
    if complete {
        Ok(None)
    } else {
        Err(NError::UndecidableOverQ)
    }
}

/// A matrix is diagonalizable exactly when every slot minimal polynomial
/// is a product of distinct linear factors. On success the eigenbasis is
/// constructed per slot and the diagonal witness verified by similarity.
pub fn diagonalizable(a: &NMatrix) -> Result<bool> {
    require_square(a)?;
    for (_, m) in views(a) {
        let roots = match split_roots(&m.minpoly())? {
            None => return Ok(false),
            Some(rs) => rs,
        };
        if roots.iter().any(|(_, mult)| *mult > 1) {
            return Ok(false);
        }
        // witness: eigenvectors per eigenvalue fill the space
        let n = m.rows();
        let base = m.base();
        let mut cols = Vec::new();
        let mut diag = Vec::new();
        for (r, _) in &roots {
            let shifted = m.sub(&KMatrix::identity(n, base).scale(r));
            for v in shifted.kernel_basis() {
                diag.push(r.clone());
                cols.push(v);
            }
        }
        assert_eq!(cols.len(), n, "eigenspaces fill the slot space");
        let p = KMatrix::from_cols(cols, base);
        let d = KMatrix::diagonal(&diag, base);
        assert!(m.similar_via(&d, &p), "diagonal witness verified");
    }
    Ok(true)
}

/// A matrix is triangularizable exactly when every slot minimal polynomial
/// splits into linear factors. On success a triangular witness (the slot
/// Jordan form) is constructed and verified.
pub fn triangularizable(a: &NMatrix) -> Result<bool> {
    require_square(a)?;
    for (slot, m) in views(a) {
        if split_roots(&m.minpoly())?.is_none() {
            return Ok(false);
        }
        slot_jordan(&m, slot)?;
    }
    Ok(true)
}

/// Spectral projectors for pairwise coprime monic factors f₁⋯f_k of an
/// annihilating polynomial: Eᵢ = hᵢ(m) where hᵢ = uᵢ·(f/fᵢ) mod f comes
/// from the Bezout identity uᵢ·(f/fᵢ) + vᵢ·fᵢ = 1. Returns the projector
/// together with its interpolating polynomial, after verifying the full
/// resolution of the identity.
fn bezout_projectors(m: &KMatrix, factors: &[KPoly]) -> Vec<(KMatrix, KPoly)> {
    let base = m.base();
    let n = m.rows();
    let f = factors
        .iter()
        .fold(KPoly::one(base), |acc, x| acc.mul(x));
    let mut out = Vec::new();
    for fi in factors {
        let gi = f.divmod(fi).expect("factor divides the product").0;
        let (d, u, _) = gi.extended_gcd(fi);
        assert_eq!(
            d.degree().finite(),
            Some(0),
            "factors are pairwise coprime"
        );
        let u = u.scale(&d.leading().inv().expect("nonzero gcd"));
        let hi = u.mul(&gi).rem(&f).expect("nonzero modulus");
        out.push((m.eval_poly(&hi), hi));
    }
    let sum = out
        .iter()
        .fold(KMatrix::zero(n, n, base), |acc, (e, _)| acc.add(e));
    assert_eq!(sum, KMatrix::identity(n, base), "projectors resolve the identity");
    for (i, (ei, _)) in out.iter().enumerate() {
        assert_eq!(ei.mul(ei), *ei, "projector is idempotent");
        for (j, (ej, _)) in out.iter().enumerate() {
            if i != j {
                assert!(ei.mul(ej).is_zero(), "projectors are orthogonal");
            }
        }
    }
    out
}

/// Jordan-Chevalley: A = D + N with D diagonalizable, N nilpotent, both
/// polynomials in A. Computed per slot from the primary projectors of the
/// minimal polynomial, which must split; D = Σ λᵢEᵢ = h(A) with h the
/// exhibited interpolant. D and N recombine unconditionally.
pub fn dn_decompose(a: &NMatrix) -> Result<DecompositionReport> {
    require_square(a)?;
    let field = a.field();
    let n = a.rows();

    let mut slots = Vec::new();
    let mut ds = Vec::new();
    let mut ns = Vec::new();
    let mut hs = Vec::new();
    for (slot, m) in views(a) {
        let base = m.base();
        let minp = m.minpoly();
        let roots = split_roots(&minp)?.ok_or(NError::DoesNotSplit(slot))?;
        let factors: Vec<KPoly> = roots
            .iter()
            .map(|(r, mult)| {
                KPoly::new(vec![r.neg(), BaseElem::one(base)], base).pow(*mult)
            })
            .collect();
        let projs = bezout_projectors(&m, &factors);

        let mut d = KMatrix::zero(n, n, base);
        let mut h = KPoly::zero(base);
        for ((r, _), (e, hi)) in roots.iter().zip(&projs) {
            d = d.add(&e.scale(r));
            h = h.add(&hi.scale(r));
        }
        let nil = m.sub(&d);
        assert_eq!(m.eval_poly(&h), d, "interpolant reproduces D");
        assert!(nil.pow(n as u64).is_zero(), "N is nilpotent");
        assert_eq!(d.mul(&nil), nil.mul(&d), "D and N commute");
        assert!(d.minpoly().is_squarefree(), "D is diagonalizable");

        let mut mats = vec![("D".to_string(), d.clone()), ("N".to_string(), nil.clone())];
        for (i, (e, _)) in projs.iter().enumerate() {
            mats.push((format!("E{}", i + 1), e.clone()));
        }
        slots.push(SlotDecomposition {
            slot,
            mats,
            polys: vec![("h".to_string(), h.clone())],
        });
        ds.push(d);
        ns.push(nil);
        hs.push(h);
    }

    let d = assemble_matrix(field, &ds)?;
    let nil = assemble_matrix(field, &ns)?;
    let h = assemble_poly(field, &hs)?;
    assert_eq!(d.add(&nil)?, *a, "A = D + N");
    assert_eq!(d.mul(&nil)?, nil.mul(&d)?, "DN = ND");
    assert!(nil.pow(n as u64)?.is_zero(), "N^n = 0");
    assert_eq!(a.eval_poly(&h)?, d, "D = h(A)");
    assert!(diagonalizable(&d)?, "D passes the diagonalizability test");

    let per_slot = pair_slots(slots);
    Ok(DecompositionReport {
        kind: DecompKind::DiagonalNilpotent,
        recombined: Some(RecombinedForm {
            mats: vec![("D".to_string(), d), ("N".to_string(), nil)],
            polys: vec![("h".to_string(), h)],
        }),
        per_slot,
        flags: Vec::new(),
    })
}

fn pair_slots(mut slots: Vec<SlotDecomposition>) -> (SlotDecomposition, SlotDecomposition) {
    if slots.len() == 1 {
        let s = slots.pop().expect("one view");
        (s.clone(), s)
    } else {
        let s1 = slots.pop().expect("two views");
        let s0 = slots.pop().expect("two views");
        (s0, s1)
    }
}

/// Primary decomposition: projections onto the invariant subspaces
/// ker(pᵢ^{rᵢ}(A)), one per irreducible factor of the slot minimal
/// polynomial. Slot factor lists are sorted by (degree, coefficient list)
/// and paired positionally; unequal component counts flag
/// SlotStructureMismatch and skip recombination.
pub fn primary_decomposition(a: &NMatrix) -> Result<DecompositionReport> {
    require_square(a)?;
    require_prime_base(a)?;
    let field = a.field();

    let mut slots = Vec::new();
    let mut slot_factors: Vec<Vec<KPoly>> = Vec::new();
    let mut slot_projs: Vec<Vec<KMatrix>> = Vec::new();
    for (slot, m) in views(a) {
        let minp = m.minpoly();
        let mut factors: Vec<KPoly> = minp
            .factor()?
            .into_iter()
            .map(|(p, r)| p.pow(r))
            .collect();
        factors.sort_by(|x, y| {
            x.degree()
                .finite()
                .cmp(&y.degree().finite())
                .then_with(|| x.coeffs().cmp(y.coeffs()))
        });
        let projs = bezout_projectors(&m, &factors);
        for (fi, (e, _)) in factors.iter().zip(&projs) {
            assert!(
                m.eval_poly(fi).mul(e).is_zero(),
                "factor annihilates its primary component"
            );
        }

        let mut mats = Vec::new();
        let mut polys = Vec::new();
        for (i, ((e, _), fi)) in projs.iter().zip(&factors).enumerate() {
            mats.push((format!("E{}", i + 1), e.clone()));
            polys.push((format!("f{}", i + 1), fi.clone()));
        }
        slots.push(SlotDecomposition { slot, mats, polys });
        slot_projs.push(projs.into_iter().map(|(e, _)| e).collect());
        slot_factors.push(factors);
    }

    let counts_match = slot_factors.iter().all(|fs| fs.len() == slot_factors[0].len());
    let mut flags = Vec::new();
    let recombined = if counts_match {
        let k = slot_factors[0].len();
        let mut mats = Vec::new();
        let mut polys = Vec::new();
        let mut padded = false;
        for i in 0..k {
            let es: Vec<KMatrix> = slot_projs.iter().map(|ps| ps[i].clone()).collect();
            let e = assemble_matrix(field, &es)?;
            assert_eq!(e.mul(&e)?, e, "recombined projector is idempotent");
            assert_eq!(e.mul(a)?, a.mul(&e)?, "projector commutes with A");
            mats.push((format!("E{}", i + 1), e));

            let fs: Vec<KPoly> = slot_factors.iter().map(|ps| ps[i].clone()).collect();
            let ann = recombine_annihilators(field, &fs)?;
            padded |= !ann.principal;
            polys.push((format!("f{}", i + 1), ann.polynomial));
        }
        let sum = mats
            .iter()
            .try_fold(NMatrix::zero(a.rows(), a.rows(), field), |acc, (_, e)| {
                acc.add(e)
            })?;
        assert!(sum.is_identity(), "recombined projectors resolve the identity");
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    assert!(
                        mats[i].1.mul(&mats[j].1)?.is_zero(),
                        "recombined projectors are orthogonal"
                    );
                }
            }
            assert!(
                a.eval_poly(&polys[i].1)?.mul(&mats[i].1)?.is_zero(),
                "recombined factor annihilates its component"
            );
        }
        if padded {
            flags.push(DecompFlag::NonPrincipalMinPoly);
        }
        Some(RecombinedForm { mats, polys })
    } else {
        flags.push(DecompFlag::SlotStructureMismatch);
        None
    };

    Ok(DecompositionReport {
        kind: DecompKind::Primary,
        recombined,
        per_slot: pair_slots(slots),
        flags,
    })
}

/// Split lcm(f, g) into coprime monic parts f₁·g₁ with f₁ | f and g₁ | g.
/// Shared irreducible factors migrate one gcd at a time to the side that
/// holds the higher power; no factorization needed.
fn coprime_split(f: &KPoly, g: &KPoly) -> (KPoly, KPoly) {
    let d = f.gcd(g);
    let mut f1 = f.divmod(&d).expect("gcd divides").0.make_monic();
    let mut g1 = g.make_monic();
    loop {
        let e = f1.gcd(&g1);
        if e.degree().finite() == Some(0) {
            return (f1, g1);
        }
        g1 = g1.divmod(&e).expect("gcd divides").0.make_monic();
        f1 = f1.mul(&e).make_monic();
    }
}

/// A vector whose annihilator is the full minimal polynomial. Standard
/// basis vectors are combined pairwise: if ann(v) = f and ann(w) = g, the
/// coprime split f₁·g₁ = lcm(f, g) makes (f/f₁)(A)v + (g/g₁)(A)w a vector
/// with annihilator lcm(f, g).
fn max_ann_vector(m: &KMatrix) -> (Vec<BaseElem>, KPoly) {
    let n = m.rows();
    let base = m.base();
    let target = m.minpoly();
    let mut v = unit_vec(n, 0, base);
    let mut f = m.vector_annihilator(&v);
    for i in 1..n {
        if f == target {
            break;
        }
        let w = unit_vec(n, i, base);
        let g = m.vector_annihilator(&w);
        if g.divides(&f) {
            continue;
        }
        let (f1, g1) = coprime_split(&f, &g);
        let va = m
            .eval_poly(&f.divmod(&f1).expect("coprime part divides").0)
            .mul_vec(&v);
        let wb = m
            .eval_poly(&g.divmod(&g1).expect("coprime part divides").0)
            .mul_vec(&w);
        v = vec_add(&va, &wb);
        f = f1.mul(&g1).make_monic();
        debug_assert_eq!(m.vector_annihilator(&v), f);
    }
    assert_eq!(f, target, "maximal vector realizes the minimal polynomial");
    (v, f)
}

/// Cyclic decomposition into A-invariant cyclic subspaces Z(β₁) ⊕ … ⊕
/// Z(β_k) with annihilator chain p_{i+1} | pᵢ. Each step finds a maximal
/// conductor vector through the quotient operator and corrects it so its
/// cyclic span is independent of the part already built.
fn cyclic_decomposition(m: &KMatrix) -> (Vec<KPoly>, Vec<Vec<BaseElem>>) {
    let n = m.rows();
    let base = m.base();
    let mut gens: Vec<Vec<BaseElem>> = Vec::new();
    let mut invs: Vec<KPoly> = Vec::new();
    let mut wcols: Vec<Vec<BaseElem>> = Vec::new();

    while wcols.len() < n {
        let (v, p) = if wcols.is_empty() {
            max_ann_vector(m)
        } else {
            // complement basis of standard vectors, then the quotient
            // operator in those coordinates
            let mut bcols = wcols.clone();
            let mut comp_idx = Vec::new();
            for i in 0..n {
                let e = unit_vec(n, i, base);
                if !KMatrix::span_contains(&bcols, &e, base) {
                    bcols.push(e);
                    comp_idx.push(i);
                }
            }
            let c = wcols.len();
            let q = n - c;
            let b = KMatrix::from_cols(bcols, base);
            let rep = b
                .inverse()
                .expect("complement completes a basis")
                .mul(m)
                .mul(&b);
            for j in 0..c {
                for i in c..n {
                    assert!(rep.get(i, j).is_zero(), "built subspace is invariant");
                }
            }
            let mut qm = KMatrix::zero(q, q, base);
            for i in 0..q {
                for j in 0..q {
                    qm.set(i, j, rep.get(c + i, c + j).clone());
                }
            }
            // a maximal vector of the quotient lifts to a maximal conductor
            let (vq, p) = max_ann_vector(&qm);
            let mut v = vec![BaseElem::zero(base); n];
            for (t, &idx) in comp_idx.iter().enumerate() {
                v[idx] = vq[t].clone();
            }
            (v, p)
        };
        let deg = p.degree().finite().expect("nonconstant conductor");

        // correction: p(A)v lies in the built part; rewriting it over the
        // cyclic generators as Σ gᵢ(A)βᵢ, maximality forces p | gᵢ, and
        // γ = v - Σ (gᵢ/p)(A)βᵢ has annihilator exactly p with its cyclic
        // span meeting the built part only in zero
        let gamma = if gens.is_empty() {
            v
        } else {
            let z = m.eval_poly(&p).mul_vec(&v);
            let x = KMatrix::from_cols(wcols.clone(), base)
                .solve(&z)
                .expect("conductor image lies in the built subspace");
            let mut corr = v;
            let mut off = 0;
            for (bi, pi) in gens.iter().zip(&invs) {
                let di = pi.degree().finite().expect("monic factor");
                let gi = KPoly::new(x[off..off + di].to_vec(), base);
                let (hi, r) = gi.divmod(&p).expect("nonzero conductor");
                assert!(r.is_zero(), "maximal conductor divides the coefficients");
                corr = vec_sub(&corr, &m.eval_poly(&hi).mul_vec(bi));
                off += di;
            }
            corr
        };
        assert_eq!(
            m.vector_annihilator(&gamma),
            p,
            "corrected generator keeps the conductor as annihilator"
        );

        let mut cur = gamma.clone();
        for _ in 0..deg {
            wcols.push(cur.clone());
            cur = m.mul_vec(&cur);
        }
        assert_eq!(
            KMatrix::from_cols(wcols.clone(), base).rank(),
            wcols.len(),
            "cyclic blocks are independent"
        );
        gens.push(gamma);
        invs.push(p);
    }

    for win in invs.windows(2) {
        assert!(win[1].divides(&win[0]), "invariant factor chain");
    }
    (invs, gens)
}

/// Companion matrix of a monic polynomial: identity subdiagonal, negated
/// coefficients in the last column, so the cyclic basis v, Av, ... puts
/// the operator in exactly this form.
fn companion(p: &KPoly) -> KMatrix {
    let base = p.base();
    let k = p.degree().finite().expect("nonconstant polynomial");
    let mut m = KMatrix::zero(k, k, base);
    for j in 0..k.saturating_sub(1) {
        m.set(j + 1, j, BaseElem::one(base));
    }
    for i in 0..k {
        m.set(i, k - 1, p.coeff(i).neg());
    }
    m
}

/// Rational canonical form: block diagonal of companion matrices of the
/// invariant factors, with the change of basis assembled from the cyclic
/// generators. Recombines when the slot invariant factor degree sequences
/// match.
pub fn rational_form(a: &NMatrix) -> Result<DecompositionReport> {
    require_square(a)?;
    require_prime_base(a)?;
    let field = a.field();
    let n = a.rows();

    let mut slots = Vec::new();
    let mut slot_invs: Vec<Vec<KPoly>> = Vec::new();
    let mut slot_rs: Vec<KMatrix> = Vec::new();
    let mut slot_ps: Vec<KMatrix> = Vec::new();
    for (slot, m) in views(a) {
        let base = m.base();
        let (invs, gens) = cyclic_decomposition(&m);

        let mut r = KMatrix::zero(n, n, base);
        let mut at = 0;
        let mut cols = Vec::new();
        for (p, g) in invs.iter().zip(&gens) {
            let k = p.degree().finite().expect("monic invariant factor");
            let block = companion(p);
            for i in 0..k {
                for j in 0..k {
                    r.set(at + i, at + j, block.get(i, j).clone());
                }
            }
            at += k;
            let mut cur = g.clone();
            for _ in 0..k {
                cols.push(cur.clone());
                cur = m.mul_vec(&cur);
            }
        }
        let p = KMatrix::from_cols(cols, base);
        assert!(m.similar_via(&r, &p), "rational form witness");

        let mut polys = Vec::new();
        for (i, inv) in invs.iter().enumerate() {
            polys.push((format!("p{}", i + 1), inv.clone()));
        }
        slots.push(SlotDecomposition {
            slot,
            mats: vec![("R".to_string(), r.clone()), ("P".to_string(), p.clone())],
            polys,
        });
        slot_invs.push(invs);
        slot_rs.push(r);
        slot_ps.push(p);
    }

    let degrees: Vec<Vec<usize>> = slot_invs
        .iter()
        .map(|invs| {
            invs.iter()
                .map(|p| p.degree().finite().expect("monic"))
                .collect()
        })
        .collect();
    let structure_match = degrees.iter().all(|d| *d == degrees[0]);
    let mut flags = Vec::new();
    let recombined = if structure_match {
        let r = assemble_matrix(field, &slot_rs)?;
        let p = assemble_matrix(field, &slot_ps)?;
        assert!(
            a.similarity_check(&r, &p)?,
            "recombined rational form is similar to A"
        );
        let mut polys = Vec::new();
        for i in 0..slot_invs[0].len() {
            let ps: Vec<KPoly> = slot_invs.iter().map(|invs| invs[i].clone()).collect();
            polys.push((format!("p{}", i + 1), assemble_poly(field, &ps)?));
        }
        for win in polys.windows(2) {
            assert!(
                win[1].1.divides(&win[0].1)?,
                "recombined invariant factor chain"
            );
        }
        Some(RecombinedForm {
            mats: vec![("R".to_string(), r), ("P".to_string(), p)],
            polys,
        })
    } else {
        flags.push(DecompFlag::SlotStructureMismatch);
        None
    };

    Ok(DecompositionReport {
        kind: DecompKind::Rational,
        recombined,
        per_slot: pair_slots(slots),
        flags,
    })
}

/// Jordan form of one slot image: eigenvalues in ascending residue order,
/// blocks of decreasing size per eigenvalue, each block with the value on
/// the diagonal and 1 directly below it. Returns the block layout, the
/// form J, and the chain basis P with m·P = P·J verified.
fn slot_jordan(
    m: &KMatrix,
    slot: Slot,
) -> Result<(Vec<(BaseElem, Vec<usize>)>, KMatrix, KMatrix)> {
    let n = m.rows();
    let base = m.base();
    let roots = split_roots(&m.charpoly())?.ok_or(NError::DoesNotSplit(slot))?;

    let mut layout = Vec::new();
    let mut jblocks: Vec<(BaseElem, usize)> = Vec::new();
    let mut cols: Vec<Vec<BaseElem>> = Vec::new();
    for (lam, mult) in &roots {
        let shifted = m.sub(&KMatrix::identity(n, base).scale(lam));
        // kernel filtration ker M ⊂ ker M² ⊂ … up to the algebraic
        // multiplicity
        let mut kers: Vec<Vec<Vec<BaseElem>>> = vec![Vec::new()];
        let mut top = 0;
        for j in 1..=n {
            let k = shifted.pow(j as u64).kernel_basis();
            let done = k.len() == *mult as usize;
            kers.push(k);
            if done {
                top = j;
                break;
            }
        }
        assert!(top > 0, "kernel chain reaches the algebraic multiplicity");

        // chain heads, tallest level first; the span being extended holds
        // the previous filtration layer plus the taller chains mapped down
        let mut heads: Vec<(usize, Vec<BaseElem>)> = Vec::new();
        for level in (1..=top).rev() {
            let mut span: Vec<Vec<BaseElem>> = kers[level - 1].clone();
            for (hl, h) in &heads {
                if *hl > level {
                    span.push(shifted.pow((*hl - level) as u64).mul_vec(h));
                } else {
                    span.push(h.clone());
                }
            }
            for cand in &kers[level] {
                if !KMatrix::span_contains(&span, cand, base) {
                    span.push(cand.clone());
                    heads.push((level, cand.clone()));
                }
            }
        }

        let mut sizes = Vec::new();
        for (level, h) in &heads {
            sizes.push(*level);
            let mut cur = h.clone();
            for t in 0..*level {
                cols.push(cur.clone());
                if t + 1 < *level {
                    cur = shifted.mul_vec(&cur);
                }
            }
            debug_assert!(shifted.mul_vec(&cur).iter().all(|x| x.is_zero()));
        }
        assert_eq!(
            sizes.iter().sum::<usize>(),
            *mult as usize,
            "chains fill the generalized eigenspace"
        );
        layout.push((lam.clone(), sizes.clone()));
        for s in sizes {
            jblocks.push((lam.clone(), s));
        }
    }

    let mut j = KMatrix::zero(n, n, base);
    let mut at = 0;
    for (lam, size) in &jblocks {
        for t in 0..*size {
            j.set(at + t, at + t, lam.clone());
            if t + 1 < *size {
                j.set(at + t + 1, at + t, BaseElem::one(base));
            }
        }
        at += size;
    }
    let p = KMatrix::from_cols(cols, base);
    assert!(m.similar_via(&j, &p), "Jordan witness verified");
    Ok((layout, j, p))
}

/// Jordan canonical form, when every slot characteristic polynomial splits.
/// Recombines when the slot block layouts agree position by position.
pub fn jordan_form(a: &NMatrix) -> Result<DecompositionReport> {
    require_square(a)?;
    require_prime_base(a)?;
    let field = a.field();

    let mut slots = Vec::new();
    let mut layouts: Vec<Vec<usize>> = Vec::new();
    let mut slot_js = Vec::new();
    let mut slot_ps = Vec::new();
    for (slot, m) in views(a) {
        let (layout, j, p) = slot_jordan(&m, slot)?;
        layouts.push(layout.iter().flat_map(|(_, sizes)| sizes.clone()).collect());
        slots.push(SlotDecomposition {
            slot,
            mats: vec![("J".to_string(), j.clone()), ("P".to_string(), p.clone())],
            polys: Vec::new(),
        });
        slot_js.push(j);
        slot_ps.push(p);
    }

    let structure_match = layouts.iter().all(|l| *l == layouts[0]);
    let mut flags = Vec::new();
    let recombined = if structure_match {
        let j = assemble_matrix(field, &slot_js)?;
        let p = assemble_matrix(field, &slot_ps)?;
        assert!(
            a.similarity_check(&j, &p)?,
            "recombined Jordan form is similar to A"
        );
        Some(RecombinedForm {
            mats: vec![("J".to_string(), j), ("P".to_string(), p)],
            polys: Vec::new(),
        })
    } else {
        flags.push(DecompFlag::SlotStructureMismatch);
        None
    };

    Ok(DecompositionReport {
        kind: DecompKind::Jordan,
        recombined,
        per_slot: pair_slots(slots),
        flags,
    })
}

/// Annihilator of a vector under A: the monic least-degree polynomial with
/// p(A)v = 0, computed per slot from the Krylov sequence and recombined
/// under the padding convention.
pub fn t_annihilator(a: &NMatrix, v: &[NNum]) -> Result<AnnihilatorResult> {
    require_square(a)?;
    if v.len() != a.rows() {
        return Err(NError::ShapeMismatch);
    }
    if v.iter().all(|x| x.is_zero()) {
        return Err(NError::ZeroVector);
    }
    let polys: Vec<KPoly> = views(a)
        .iter()
        .map(|(slot, m)| m.vector_annihilator(&slot_vec(v, *slot)))
        .collect();
    let res = recombine_annihilators(a.field(), &polys)?;
    let img = a.eval_poly(&res.polynomial)?.mul_vec(v)?;
    assert!(img.iter().all(|x| x.is_zero()), "annihilator kills the vector");
    Ok(res)
}

/// Generators of the cyclic subspace Z(v; A): the Krylov vectors
/// v, Av, …, A^{k-1}v where k is the larger slot annihilator degree. The
/// book's dimension identity, dim Z = deg of the annihilator, is verified
/// inside each slot.
pub fn cyclic_basis(a: &NMatrix, v: &[NNum]) -> Result<Vec<Vec<NNum>>> {
    let ann = t_annihilator(a, v)?;
    let d0 = ann
        .slot_minpolys
        .0
        .degree()
        .finite()
        .expect("nonzero annihilator");
    let d1 = ann
        .slot_minpolys
        .1
        .degree()
        .finite()
        .expect("nonzero annihilator");
    let k = d0.max(d1);

    let mut out = Vec::new();
    let mut cur = v.to_vec();
    for _ in 0..k {
        out.push(cur.clone());
        cur = a.mul_vec(&cur)?;
    }

    for (slot, m) in views(a) {
        let krylov: Vec<Vec<BaseElem>> = out.iter().map(|w| slot_vec(w, slot)).collect();
        let dim = KMatrix::from_cols(krylov, m.base()).rank();
        let want = m
            .vector_annihilator(&slot_vec(v, slot))
            .degree()
            .finite()
            .expect("nonzero annihilator");
        assert_eq!(dim, want, "cyclic dimension equals the annihilator degree");
    }
    Ok(out)
}

/// Conductor of v into an A-invariant subspace W: the monic least-degree g
/// with g(A)v ∈ W, computed per slot and recombined under the padding
/// convention. W is passed as a spanning set; invariance is checked per
/// slot and each slot conductor divides the slot minimal polynomial.
pub fn t_conductor(a: &NMatrix, v: &[NNum], w: &[Vec<NNum>]) -> Result<AnnihilatorResult> {
    require_square(a)?;
    let n = a.rows();
    if v.len() != n || w.iter().any(|x| x.len() != n) {
        return Err(NError::ShapeMismatch);
    }
    let mut polys = Vec::new();
    for (slot, m) in views(a) {
        let base = m.base();
        let wb: Vec<Vec<BaseElem>> = w.iter().map(|x| slot_vec(x, slot)).collect();
        for wv in &wb {
            if !KMatrix::span_contains(&wb, &m.mul_vec(wv), base) {
                return Err(NError::NotInvariant(slot));
            }
        }
        let vs = slot_vec(v, slot);
        let g = m.vector_conductor(&vs, &wb);
        assert!(
            KMatrix::span_contains(&wb, &m.eval_poly(&g).mul_vec(&vs), base),
            "conductor lands in the subspace"
        );
        assert!(
            g.divides(&m.minpoly()),
            "conductor divides the minimal polynomial"
        );
        polys.push(g);
    }
    recombine_annihilators(a.field(), &polys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nq() -> FieldDescriptor {
        FieldDescriptor::rationals(Flavor::FullNeutrosophic)
    }

    fn nz(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p, Flavor::FullNeutrosophic).unwrap()
    }

    fn n(a: i64, b: i64, f: FieldDescriptor) -> NNum {
        NNum::from_i64(a, b, f).unwrap()
    }

    fn fmt_vec(v: &[NNum]) -> String {
        let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        format!("({})", inner.join(", "))
    }

    // Ex 2.3.78 shape: the running 2x2 with one pure column
    fn book_matrix() -> NMatrix {
        NMatrix::from_pairs(&[&[(0, 1), (0, 0)], &[(2, 0), (2, 0)]], nz(3)).unwrap()
    }

    #[test]
    fn spectrum_of_the_running_example() {
        let rep = spectrum(&book_matrix()).unwrap();
        let shown: Vec<String> = rep.roots.iter().map(|r| r.to_string()).collect();
        assert_eq!(shown, ["I", "2I", "2", "2+2I"]);
        let s0: Vec<String> = rep.slot_spectra.0.iter().map(|r| r.to_string()).collect();
        let s1: Vec<String> = rep.slot_spectra.1.iter().map(|r| r.to_string()).collect();
        assert_eq!(s0, ["0", "2"]);
        assert_eq!(s1, ["1", "2"]);
        assert!(rep.complete);
    }

    #[test]
    fn spectrum_of_mixed_diagonals() {
        let f = nz(3);
        let a = NMatrix::diagonal(&[n(0, 1, f), n(1, 0, f)], f).unwrap();
        let rep = spectrum(&a).unwrap();
        let shown: Vec<String> = rep.roots.iter().map(|r| r.to_string()).collect();
        assert_eq!(shown, ["I", "1"]);

        let id = NMatrix::identity(3, nq());
        let rep = spectrum(&id).unwrap();
        assert_eq!(rep.roots, vec![NNum::one(nq())]);
        assert!(rep.complete);
    }

    #[test]
    fn spectrum_matches_the_brute_force_scan() {
        // every scalar of N(Z₂) and N(Z₃) checked against det(A - c·Id)
        for (f, p) in [(nz(2), 2i64), (nz(3), 3i64)] {
            let a = NMatrix::from_pairs(&[&[(1, 1), (0, 1)], &[(1, 0), (0, 0)]], f).unwrap();
            let rep = spectrum(&a).unwrap();
            let id = NMatrix::identity(2, f);
            let mut brute = Vec::new();
            for re in 0..p {
                for im in 0..p {
                    let c = n(re, im, f);
                    let d = a.sub(&id.scale(&c).unwrap()).unwrap().det().unwrap();
                    if d.is_zero() {
                        brute.push(c);
                    }
                }
            }
            assert_eq!(rep.roots.len(), brute.len());
            for c in brute {
                assert!(rep.roots.contains(&c));
            }
        }
    }

    #[test]
    fn eigenvectors_come_from_both_slots() {
        let a = book_matrix();
        let i = n(0, 1, nz(3));
        let vs = eigenvectors(&a, &i).unwrap();
        assert!(!vs.is_empty());
        // slot-0 kernel of [[0,0],[2,2]] is spanned by (2,1), embedded with
        // zero in the other slot
        assert_eq!(fmt_vec(&vs[0]), "(2+I, 1+2I)");

        let two_i = n(0, 2, nz(3));
        assert!(!eigenvectors(&a, &two_i).unwrap().is_empty());

        // the identity has every slot-unit vector in its eigenspace
        let id = NMatrix::identity(2, nz(3));
        let vs = eigenvectors(&id, &NNum::one(nz(3))).unwrap();
        assert_eq!(vs.len(), 4);
    }

    #[test]
    fn non_characteristic_values_are_rejected() {
        let a = book_matrix();
        assert!(matches!(
            eigenvectors(&a, &NNum::one(nz(3))),
            Err(NError::NotACharacteristicValue)
        ));
    }

    #[test]
    fn minpoly_of_scalar_and_mixed_diagonals() {
        let f = nz(3);
        let a = NMatrix::diagonal(&[n(0, 1, f), n(0, 1, f)], f).unwrap();
        let res = minpoly(&a).unwrap();
        assert_eq!(res.polynomial.to_string(), "x+2I");
        assert!(res.principal);

        // slot degrees 2 and 1: padded, not a principal ideal generator
        let a = NMatrix::diagonal(&[n(0, 1, f), n(1, 0, f)], f).unwrap();
        let res = minpoly(&a).unwrap();
        assert_eq!(res.polynomial.to_string(), "x^2+2x");
        assert!(!res.principal);
        assert_eq!(res.slot_minpolys.0.to_string(), "x^2+2x");
        assert_eq!(res.slot_minpolys.1.to_string(), "x+2");
        // A² - A = 0 even though the slots disagree on the degree
        let sq = a.mul(&a).unwrap();
        assert!(sq.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn cayley_hamilton_on_fixtures() {
        assert!(cayley_hamilton_check(&book_matrix()).unwrap());
        let a = NMatrix::from_pairs(
            &[&[(1, 1), (0, 1), (1, 0)], &[(0, 0), (1, 2), (2, 0)], &[(2, 1), (0, 0), (1, 1)]],
            nz(3),
        )
        .unwrap();
        assert!(cayley_hamilton_check(&a).unwrap());
        let q = NMatrix::from_pairs(&[&[(1, 2), (3, 0)], &[(0, 1), (2, 2)]], nq()).unwrap();
        assert!(cayley_hamilton_check(&q).unwrap());
    }

    #[test]
    fn diagonalizability_of_the_fixtures() {
        assert!(diagonalizable(&book_matrix()).unwrap());
        assert!(triangularizable(&book_matrix()).unwrap());

        // nilpotent and nonzero: triangular but not diagonal
        let nil = NMatrix::from_pairs(&[&[(0, 0), (0, 1)], &[(0, 0), (0, 0)]], nz(3)).unwrap();
        assert!(!diagonalizable(&nil).unwrap());
        assert!(triangularizable(&nil).unwrap());

        let diag = NMatrix::diagonal(&[n(0, 1, nz(3)), n(2, 0, nz(3))], nz(3)).unwrap();
        assert!(diagonalizable(&diag).unwrap());
    }

    #[test]
    fn rotation_matrix_does_not_triangularize_over_the_rationals() {
        // both slots have minimal polynomial x² + 1, which has no rational
        // root; the candidate search is exhaustive here, so the answer is
        // a definite no rather than UndecidableOverQ
        let a = NMatrix::from_pairs(&[&[(0, 0), (-1, 0)], &[(1, 0), (0, 0)]], nq()).unwrap();
        assert!(!triangularizable(&a).unwrap());
        assert!(!diagonalizable(&a).unwrap());
    }

    #[test]
    fn dn_of_the_book_block() {
        // [[I,1],[0,I]] over N(Q): D = I·Id, N is the unit nilpotent
        let a = NMatrix::from_pairs(&[&[(0, 1), (1, 0)], &[(0, 0), (0, 1)]], nq()).unwrap();
        let rep = dn_decompose(&a).unwrap();
        assert_eq!(rep.kind, DecompKind::DiagonalNilpotent);
        assert!(rep.flags.is_empty());
        let form = rep.recombined.unwrap();
        assert_eq!(form.mats[0].1.to_string(), "[[I,0],[0,I]]");
        assert_eq!(form.mats[1].1.to_string(), "[[0,1],[0,0]]");
        // the interpolant is the constant I: D = I·Id = h(A)
        assert_eq!(form.polys[0].1.to_string(), "I");
    }

    #[test]
    fn dn_degenerate_cases() {
        let f = nz(3);
        let diag = NMatrix::diagonal(&[n(0, 1, f), n(2, 0, f)], f).unwrap();
        let rep = dn_decompose(&diag).unwrap();
        let form = rep.recombined.unwrap();
        assert_eq!(form.mats[0].1, diag);
        assert!(form.mats[1].1.is_zero());

        let nil = NMatrix::from_pairs(&[&[(0, 0), (0, 1)], &[(0, 0), (0, 0)]], f).unwrap();
        let rep = dn_decompose(&nil).unwrap();
        let form = rep.recombined.unwrap();
        assert!(form.mats[0].1.is_zero());
        assert_eq!(form.mats[1].1, nil);
    }

    #[test]
    fn dn_refuses_non_split_slots() {
        let a = NMatrix::from_pairs(&[&[(0, 0), (-1, 0)], &[(1, 0), (0, 0)]], nq()).unwrap();
        assert!(matches!(dn_decompose(&a), Err(NError::DoesNotSplit(Slot::At0))));
    }

    #[test]
    fn primary_components_recombine_when_counts_agree() {
        let rep = primary_decomposition(&book_matrix()).unwrap();
        assert!(rep.flags.is_empty());
        let form = rep.recombined.unwrap();
        assert_eq!(form.polys[0].1.to_string(), "x+I");
        assert_eq!(form.polys[1].1.to_string(), "x+(I+1)");
        assert_eq!(form.mats.len(), 2);

        let id = NMatrix::identity(2, nz(3));
        let rep = primary_decomposition(&id).unwrap();
        let form = rep.recombined.unwrap();
        assert_eq!(form.mats.len(), 1);
        assert!(form.mats[0].1.is_identity());
    }

    #[test]
    fn primary_structure_mismatch_is_flagged() {
        let f = nz(3);
        let a = NMatrix::diagonal(&[n(0, 1, f), n(1, 0, f)], f).unwrap();
        let rep = primary_decomposition(&a).unwrap();
        assert_eq!(rep.flags, vec![DecompFlag::SlotStructureMismatch]);
        assert!(rep.recombined.is_none());
        assert_eq!(rep.per_slot.0.polys.len(), 2);
        assert_eq!(rep.per_slot.1.polys.len(), 1);
    }

    #[test]
    fn rational_form_of_a_companion_is_itself() {
        // companion of x² + (2I+1)x + 2I over N(Z₃)
        let charp = NPoly::from_pairs(&[(0, 2), (1, 2), (1, 0)], nz(3)).unwrap();
        let a = NMatrix::from_pairs(&[&[(0, 0), (0, 1)], &[(1, 0), (2, 1)]], nz(3)).unwrap();
        assert_eq!(a.charpoly().unwrap(), charp);
        let rep = rational_form(&a).unwrap();
        assert!(rep.flags.is_empty());
        let form = rep.recombined.unwrap();
        assert_eq!(form.mats[0].1, a);
        assert!(form.mats[1].1.is_identity());
        assert_eq!(form.polys.len(), 1);
        assert_eq!(form.polys[0].1, charp);
    }

    #[test]
    fn rational_form_splits_off_a_second_block() {
        let f = nz(5);
        let a = NMatrix::diagonal(&[n(1, 0, f), n(1, 0, f), n(2, 0, f)], f).unwrap();
        let rep = rational_form(&a).unwrap();
        let form = rep.recombined.unwrap();
        assert_eq!(form.polys[0].1.to_string(), "x^2+2x+2");
        assert_eq!(form.polys[1].1.to_string(), "x+4");
        assert_eq!(form.mats[0].1.to_string(), "[[0,3,0],[1,3,0],[0,0,1]]");
    }

    #[test]
    fn rational_form_requires_a_prime_field() {
        let a = NMatrix::identity(2, nq());
        assert!(matches!(rational_form(&a), Err(NError::UnsupportedField)));
        assert!(matches!(jordan_form(&a), Err(NError::UnsupportedField)));
        assert!(matches!(
            primary_decomposition(&a),
            Err(NError::UnsupportedField)
        ));
    }

    #[test]
    fn jordan_form_of_the_book_block() {
        // [[I,1],[0,I]] over N(Z₃) becomes the lower-1 elementary block
        let a = NMatrix::from_pairs(&[&[(0, 1), (1, 0)], &[(0, 0), (0, 1)]], nz(3)).unwrap();
        let rep = jordan_form(&a).unwrap();
        assert!(rep.flags.is_empty());
        let form = rep.recombined.unwrap();
        assert_eq!(form.mats[0].1.to_string(), "[[I,0],[1,I]]");

        let c = n(2, 2, nz(3));
        let scalar = NMatrix::diagonal(&[c.clone(), c.clone()], nz(3)).unwrap();
        let rep = jordan_form(&scalar).unwrap();
        assert_eq!(rep.recombined.unwrap().mats[0].1, scalar);
    }

    #[test]
    fn jordan_block_layout_mismatch_is_flagged() {
        // slot 0 is one 2-chain, slot 1 is two 1-chains
        let a = NMatrix::from_pairs(&[&[(0, 0), (1, -1)], &[(0, 0), (0, 0)]], nz(3)).unwrap();
        let rep = jordan_form(&a).unwrap();
        assert_eq!(rep.flags, vec![DecompFlag::SlotStructureMismatch]);
        assert!(rep.recombined.is_none());
        assert_eq!(rep.per_slot.0.mats[0].1.to_string(), "[[0,0],[1,0]]");
        assert_eq!(rep.per_slot.1.mats[0].1.to_string(), "[[0,0],[0,0]]");
    }

    #[test]
    fn jordan_refuses_non_split_charpolys() {
        // x² + 1 is irreducible over Z₃
        let a = NMatrix::from_pairs(&[&[(0, 0), (-1, 0)], &[(1, 0), (0, 0)]], nz(3)).unwrap();
        assert!(matches!(jordan_form(&a), Err(NError::DoesNotSplit(Slot::At0))));
    }

    #[test]
    fn annihilator_of_a_cyclic_vector_is_the_charpoly() {
        let a = NMatrix::from_pairs(&[&[(0, 0), (0, 1)], &[(1, 0), (2, 1)]], nz(3)).unwrap();
        let e1 = vec![NNum::one(nz(3)), NNum::zero(nz(3))];
        let res = t_annihilator(&a, &e1).unwrap();
        assert_eq!(res.polynomial, a.charpoly().unwrap());
        assert!(res.principal);

        let basis = cyclic_basis(&a, &e1).unwrap();
        assert_eq!(basis.len(), 2);
        assert_eq!(fmt_vec(&basis[0]), "(1, 0)");
        assert_eq!(fmt_vec(&basis[1]), "(0, 1)");
    }

    #[test]
    fn annihilator_of_an_eigenvector_is_linear() {
        let f = nz(3);
        let a = NMatrix::diagonal(&[n(0, 1, f), n(1, 0, f)], f).unwrap();
        let e1 = vec![NNum::one(f), NNum::zero(f)];
        let res = t_annihilator(&a, &e1).unwrap();
        assert_eq!(res.polynomial.to_string(), "x+2I");
        assert!(res.principal);

        assert!(matches!(
            t_annihilator(&a, &[NNum::zero(f), NNum::zero(f)]),
            Err(NError::ZeroVector)
        ));
    }

    #[test]
    fn conductor_of_the_shift_block() {
        // A = [[0,1],[0,0]], W = span{e₁}: Av₂ = e₁ lands in W, so the
        // conductor of e₂ is x
        let a = NMatrix::from_pairs(&[&[(0, 0), (1, 0)], &[(0, 0), (0, 0)]], nq()).unwrap();
        let e1 = vec![NNum::one(nq()), NNum::zero(nq())];
        let e2 = vec![NNum::zero(nq()), NNum::one(nq())];
        let res = t_conductor(&a, &e2, std::slice::from_ref(&e1)).unwrap();
        assert_eq!(res.polynomial.to_string(), "x");
        assert!(res.principal);

        // a vector already inside W has conductor 1
        let res = t_conductor(&a, &e1, std::slice::from_ref(&e1)).unwrap();
        assert_eq!(res.polynomial.to_string(), "1");

        // the empty subspace turns the conductor into the annihilator
        let res = t_conductor(&a, &e2, &[]).unwrap();
        assert_eq!(res.polynomial, t_annihilator(&a, &e2).unwrap().polynomial);

        // span{e₂} is not invariant: Ae₂ = e₁ escapes
        assert!(matches!(
            t_conductor(&a, &e1, std::slice::from_ref(&e2)),
            Err(NError::NotInvariant(Slot::At0))
        ));
    }

    #[test]
    fn pure_scalars_run_a_single_chart_pass() {
        let f = FieldDescriptor::prime(3, Flavor::PureNeutrosophic).unwrap();
        let a = NMatrix::from_pairs(&[&[(0, 1), (0, 2)], &[(0, 0), (0, 1)]], f).unwrap();
        let rep = spectrum(&a).unwrap();
        let shown: Vec<String> = rep.roots.iter().map(|r| r.to_string()).collect();
        assert_eq!(shown, ["I"]);
        let res = minpoly(&a).unwrap();
        assert!(res.principal);
        // (x - I)² in the chart: the minimal polynomial has I as its unit
        assert_eq!(res.polynomial.to_string(), "Ix^2+Ix+I");

        let rep = dn_decompose(&a).unwrap();
        let form = rep.recombined.unwrap();
        assert_eq!(form.mats[0].1.to_string(), "[[I,0],[0,I]]");
        assert_eq!(form.mats[1].1.to_string(), "[[0,2I],[0,0]]");
    }

    fn arb_matrix(p: u64, size: usize) -> impl Strategy<Value = NMatrix> {
        let f = nz(p);
        let pi = p as i64;
        proptest::collection::vec((0..pi, 0..pi), size * size).prop_map(move |cells| {
            let rows: Vec<Vec<NNum>> = cells
                .chunks(size)
                .map(|row| row.iter().map(|&(a, b)| n(a, b, f)).collect())
                .collect();
            NMatrix::from_rows(rows, f).unwrap()
        })
    }

    proptest! {
        #[test]
        fn charpoly_always_annihilates(a in arb_matrix(5, 3)) {
            prop_assert!(cayley_hamilton_check(&a).unwrap());
        }

        #[test]
        fn spectrum_is_sound_and_exhaustive(a in arb_matrix(3, 2)) {
            let rep = spectrum(&a).unwrap();
            let id = NMatrix::identity(2, nz(3));
            let mut count = 0;
            for re in 0..3 {
                for im in 0..3 {
                    let c = n(re, im, nz(3));
                    let d = a.sub(&id.scale(&c).unwrap()).unwrap().det().unwrap();
                    if d.is_zero() {
                        count += 1;
                        prop_assert!(rep.roots.contains(&c));
                    }
                }
            }
            prop_assert_eq!(rep.roots.len(), count);
        }

        #[test]
        fn minpoly_is_a_similarity_invariant(a in arb_matrix(5, 2), q in arb_matrix(5, 2)) {
            prop_assume!(q.inverse().is_ok());
            let conj = q.inverse().unwrap().mul(&a).unwrap().mul(&q).unwrap();
            let lhs = minpoly(&a).unwrap();
            let rhs = minpoly(&conj).unwrap();
            prop_assert_eq!(lhs.polynomial, rhs.polynomial);
            prop_assert_eq!(lhs.principal, rhs.principal);
        }

        #[test]
        fn decompositions_verify_on_random_matrices(a in arb_matrix(3, 3)) {
            // every internal identity is a hard assert; reaching Ok is the test
            if let Ok(rep) = dn_decompose(&a) {
                prop_assert!(rep.recombined.is_some());
            }
            let _ = rational_form(&a).unwrap();
            let _ = primary_decomposition(&a).unwrap();
            let _ = jordan_form(&a);
        }
    }
}
