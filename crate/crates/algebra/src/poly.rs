//! Neutrosophic polynomials in one variable.
//!
//! Coefficients are [`NNum`]; storage is ascending with no trailing zeros.
//! The raw degree is the coefficient-list degree. Because leading
//! coefficients can be zero divisors, the degree may drop under the slot
//! evaluations; [`EvalDegreeProfile`] makes that visible instead of hiding
//! it.
//!
//! Division is done directly over the ring (possible whenever the divisor's
//! leading coefficient is a unit); gcd has no ring-level meaning and is
//! computed per slot, recombined only when the slot degrees agree.

use std::fmt;

use crate::error::{NError, Result};
use crate::field::{BaseElem, FieldDescriptor, Flavor};
use crate::kpoly::{Degree, KPoly};
use crate::scalar::{NNum, Slot};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NPoly {
    field: FieldDescriptor,
    coeffs: Vec<NNum>,
}

/// Slot degrees of a polynomial. `split_degenerate` flags the ring
/// pathology where ε₀(f) and ε₁(f) have different degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalDegreeProfile {
    pub deg_at0: Degree,
    pub deg_at1: Degree,
    pub split_degenerate: bool,
}

impl NPoly {
    /// Widens every coefficient into `field` and strips trailing zeros.
    pub fn new(coeffs: Vec<NNum>, field: FieldDescriptor) -> Result<Self> {
        let mut out = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            out.push(c.widen(field)?);
        }
        while out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        Ok(NPoly { field, coeffs: out })
    }

    pub fn zero(field: FieldDescriptor) -> Self {
        NPoly { field, coeffs: vec![] }
    }

    pub fn one(field: FieldDescriptor) -> Self {
        Self::constant(NNum::one(field))
    }

    pub fn constant(c: NNum) -> Self {
        let field = c.field;
        NPoly {
            field,
            coeffs: if c.is_zero() { vec![] } else { vec![c] },
        }
    }

    /// The monic monomial x; its coefficient is the flavor's identity.
    pub fn x(field: FieldDescriptor) -> Self {
        Self::monomial(NNum::one(field), 1)
    }

    pub fn monomial(c: NNum, k: usize) -> Self {
        let field = c.field;
        if c.is_zero() {
            return Self::zero(field);
        }
        let mut coeffs = vec![NNum::zero(field); k];
        coeffs.push(c);
        NPoly { field, coeffs }
    }

    /// Test helper style constructor from (real, I) integer pairs, ascending.
    pub fn from_pairs(pairs: &[(i64, i64)], field: FieldDescriptor) -> Result<Self> {
        let coeffs = pairs
            .iter()
            .map(|&(a, b)| NNum::from_i64(a, b, field))
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs, field)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn coeffs(&self) -> &[NNum] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> NNum {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| NNum::zero(self.field))
    }

    pub fn degree(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::NegInf
        } else {
            Degree::Fin(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> NNum {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| NNum::zero(self.field))
    }

    /// Monic in the flavor's ring: leading coefficient is its identity.
    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&NNum::one(self.field))
    }

    /// Coefficientwise slot evaluation; a ring homomorphism N(K)[x] → K[x].
    pub fn eval_slot(&self, slot: Slot) -> KPoly {
        KPoly::new(
            self.coeffs.iter().map(|c| c.eval(slot)).collect(),
            self.field.base,
        )
    }

    /// The one faithful chart for the flavor: ε₁ for pure (ε₀ kills KI),
    /// either for real. Full-flavored polynomials have no single chart.
    pub fn chart(&self) -> KPoly {
        debug_assert!(self.field.flavor != Flavor::FullNeutrosophic);
        self.eval_slot(Slot::At1)
    }

    /// Rebuilds from a chart image: real coefficients for a real field,
    /// aI coefficients for a pure one.
    pub fn from_chart(p: &KPoly, field: FieldDescriptor) -> Result<Self> {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| match field.flavor {
                Flavor::PureNeutrosophic => {
                    NNum::from_parts(BaseElem::zero(field.base), c.clone(), field)
                }
                _ => NNum::from_parts(c.clone(), BaseElem::zero(field.base), field),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs, field)
    }

    /// Coefficientwise recombination: the unique f with ε₀(f) = p0,
    /// ε₁(f) = p1.
    pub fn recombine(p0: &KPoly, p1: &KPoly, field: FieldDescriptor) -> Result<Self> {
        if p0.base() != field.base || p1.base() != field.base {
            return Err(NError::FieldMismatch);
        }
        let n = p0.coeffs().len().max(p1.coeffs().len());
        let coeffs = (0..n)
            .map(|k| NNum::recombine(&p0.coeff(k), &p1.coeff(k), field))
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs, field)
    }

    pub fn degree_profile(&self) -> EvalDegreeProfile {
        let d0 = self.eval_slot(Slot::At0).degree();
        let d1 = self.eval_slot(Slot::At1).degree();
        EvalDegreeProfile {
            deg_at0: d0,
            deg_at1: d1,
            split_degenerate: d0 != d1,
        }
    }

    fn joined(&self, other: &Self) -> Result<FieldDescriptor> {
        self.field.join(other.field)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let field = self.joined(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k).add(&other.coeff(k)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs, field)
    }

    pub fn neg(&self) -> Self {
        NPoly {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let field = self.joined(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(field));
        }
        let mut coeffs = vec![NNum::zero(field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b)?)?;
            }
        }
        Self::new(coeffs, field)
    }

    pub fn scale(&self, c: &NNum) -> Result<Self> {
        self.mul(&Self::constant(c.clone()))
    }

    pub fn pow(&self, mut e: u32) -> Result<Self> {
        let mut acc = Self::one(self.field);
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

    /// Long division over the ring itself. Needs the divisor's leading
    /// coefficient to be a unit; under that precondition q and r are unique
    /// with f = d·q + r, deg r < deg d.
    pub fn divmod(&self, d: &Self) -> Result<(Self, Self)> {
        let field = self.joined(d)?;
        if d.is_zero() {
            return Err(NError::DivisionByZero);
        }
        if !d.leading().is_unit() {
            return Err(NError::NonUnitLeadingCoefficient);
        }
        let lead_inv = d.leading().widen(field)?.inverse()?;
        let dd = d.coeffs.len() - 1;
        let mut rem: Vec<NNum> = self
            .coeffs
            .iter()
            .map(|c| c.widen(field))
            .collect::<Result<Vec<_>>>()?;
        let mut quo = vec![NNum::zero(field); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap().mul(&lead_inv)?;
            if !factor.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].sub(&factor.mul(dc)?)?;
                }
                quo[k] = factor;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((Self::new(quo, field)?, Self::new(rem, field)?))
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.divmod(self)?.1.is_zero())
    }

    /// Slotwise gcd, recombined. The ideal (f, g) need not be principal in
    /// a product ring, so when the slot gcds have different degrees there is
    /// no monic recombination and that is an error, not a guess.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        let field = self.joined(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(NError::ZeroPolynomial);
        }
        match field.flavor {
            Flavor::FullNeutrosophic => {
                let g0 = self.eval_slot(Slot::At0).gcd(&other.eval_slot(Slot::At0));
                let g1 = self.eval_slot(Slot::At1).gcd(&other.eval_slot(Slot::At1));
                if g0.degree() != g1.degree() {
                    return Err(NError::SplitDegenerate(
                        deg_i64(g0.degree()),
                        deg_i64(g1.degree()),
                    ));
                }
                Self::recombine(&g0, &g1, field)
            }
            _ => {
                let g = self.chart().gcd(&other.chart());
                Self::from_chart(&g, field)
            }
        }
    }

    /// Both slot gcds constant (never raises SplitDegenerate).
    pub fn coprime(&self, other: &Self) -> Result<bool> {
        let field = self.joined(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(NError::ZeroPolynomial);
        }
        match field.flavor {
            Flavor::FullNeutrosophic => {
                let g0 = self.eval_slot(Slot::At0).gcd(&other.eval_slot(Slot::At0));
                let g1 = self.eval_slot(Slot::At1).gcd(&other.eval_slot(Slot::At1));
                Ok(g0.is_constant() && g1.is_constant())
            }
            _ => Ok(self.chart().gcd(&other.chart()).is_constant()),
        }
    }

    pub fn eval(&self, c: &NNum) -> Result<NNum> {
        let field = self.field.join(c.field)?;
        let c = c.widen(field)?;
        let mut acc = NNum::zero(field);
        for k in self.coeffs.iter().rev() {
            acc = acc.mul(&c)?.add(&k.widen(field)?)?;
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.field);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale_base(&BaseElem::from_i64(k as i64, self.field.base)))
            .collect();
        NPoly::new(coeffs, self.field).expect("same field")
    }

    /// Taylor coefficients tₖ = Dᵏf(c)/k! with Σ tₖ(x−c)ᵏ = f. Only over
    /// characteristic zero, where k! is invertible.
    pub fn taylor(&self, c: &NNum) -> Result<Vec<NNum>> {
        self.require_char_zero()?;
        let field = self.field.join(c.field)?;
        let deg = self.coeffs.len();
        let mut out = Vec::with_capacity(deg);
        let mut d = NPoly::new(self.coeffs.clone(), field)?;
        let mut kfact = BaseElem::one(field.base);
        for k in 0..deg {
            if k > 0 {
                kfact = kfact.mul(&BaseElem::from_i64(k as i64, field.base));
                d = d.derivative();
            }
            out.push(d.eval(c)?.scale_base(&kfact.inv()?));
        }
        Ok(out)
    }

    /// Multiplicity of c as a root: the least k with Dᵏf(c) ≠ 0. Zero when
    /// c is not a root at all.
    pub fn multiplicity(&self, c: &NNum) -> Result<u32> {
        self.require_char_zero()?;
        if self.is_zero() {
            return Err(NError::ZeroPolynomial);
        }
        let mut d = self.clone();
        let mut k = 0u32;
        loop {
            if !d.eval(c)?.is_zero() {
                return Ok(k);
            }
            d = d.derivative();
            k += 1;
            // the deg-th derivative is deg!·leading ≠ 0, so this terminates
            assert!(k as usize <= self.coeffs.len(), "derivative chain exhausted");
        }
    }

    fn require_char_zero(&self) -> Result<()> {
        match self.field.base {
            crate::field::Base::Rationals => Ok(()),
            crate::field::Base::Prime(p) => Err(NError::CharacteristicNotZero(p)),
        }
    }

    /// All roots in the polynomial's own field, sorted by (real, I) parts.
    ///
    /// Full flavor crosses the slot root sets and recombines: c is a root
    /// iff each εₛ(c) is a root of εₛ(f). A slot whose image is the zero
    /// polynomial admits every residue (prime fields); over Q such a slot
    /// has infinitely many roots, so candidates are borrowed from the other
    /// slot and the list is not exhaustive there (it never is over Q).
    pub fn roots(&self) -> Result<Vec<NNum>> {
        if self.is_zero() {
            return Err(NError::ZeroPolynomial);
        }
        let field = self.field;
        match field.flavor {
            Flavor::FullNeutrosophic => {
                let f0 = self.eval_slot(Slot::At0);
                let f1 = self.eval_slot(Slot::At1);
                let r0 = slot_root_candidates(&f0, &f1)?;
                let r1 = slot_root_candidates(&f1, &f0)?;
                let mut out = Vec::new();
                for a in &r0 {
                    for b in &r1 {
                        let c = NNum::recombine(a, b, field)?;
                        if self.eval(&c)?.is_zero() {
                            out.push(c);
                        }
                    }
                }
                out.sort_by(|x, y| {
                    (x.real_part(), x.i_part()).cmp(&(y.real_part(), y.i_part()))
                });
                out.dedup();
                Ok(out)
            }
            _ => {
                let g = self.chart();
                if g.is_zero() {
                    return Err(NError::ZeroPolynomial);
                }
                let (rs, _) = g.roots()?;
                let mut out = Vec::new();
                for (r, _) in rs {
                    let c = match field.flavor {
                        Flavor::PureNeutrosophic => NNum::from_parts(
                            BaseElem::zero(field.base),
                            r,
                            field,
                        )?,
                        _ => NNum::from_parts(r, BaseElem::zero(field.base), field)?,
                    };
                    debug_assert!(self.eval(&c)?.is_zero());
                    out.push(c);
                }
                out.sort_by(|x, y| {
                    (x.real_part(), x.i_part()).cmp(&(y.real_part(), y.i_part()))
                });
                Ok(out)
            }
        }
    }
}

fn deg_i64(d: Degree) -> i64 {
    match d {
        Degree::NegInf => -1,
        Degree::Fin(n) => n as i64,
    }
}

/// Root candidates of one slot image; a zero image means "everything", which
/// is all residues over Z_p and the partner slot's candidates over Q.
fn slot_root_candidates(f: &KPoly, partner: &KPoly) -> Result<Vec<BaseElem>> {
    use crate::field::Base;
    if !f.is_zero() {
        return Ok(f.roots()?.0.into_iter().map(|(r, _)| r).collect());
    }
    match f.base() {
        Base::Prime(p) => {
            if p > 1 << 20 {
                return Err(NError::UnsupportedField);
            }
            Ok((0..p).map(|a| BaseElem::from_i64(a as i64, f.base())).collect())
        }
        Base::Rationals => {
            if partner.is_zero() {
                return Err(NError::ZeroPolynomial);
            }
            Ok(partner.roots()?.0.into_iter().map(|(r, _)| r).collect())
        }
    }
}

impl fmt::Display for NPoly {
    /// Descending powers; two-part coefficients are parenthesized with the
    /// I term first, e.g. `x^2+(2I+1)x+2I`; single-part coefficients attach
    /// bare (`2Ix`, `Ix^2`); a unit coefficient is suppressed except as a
    /// constant.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let a = c.real_part();
            let b = c.i_part();
            let power = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if !a.is_zero() && !b.is_zero() {
                // two-part coefficient: parenthesize, I term first
                if !out.is_empty() {
                    out.push('+');
                }
                let bs = b.to_string();
                let i_mag = if bs == "1" {
                    "I".to_string()
                } else if bs == "-1" {
                    "-I".to_string()
                } else {
                    format!("{bs}I")
                };
                let a_str = a.to_string();
                let a_part = match a_str.strip_prefix('-') {
                    Some(m) => format!("-{m}"),
                    None => format!("+{a_str}"),
                };
                out.push_str(&format!("({i_mag}{a_part}){power}"));
                continue;
            }
            // single-part coefficient
            let (val, is_i) = if b.is_zero() { (a, false) } else { (b, true) };
            let vs = val.to_string();
            let (sign, mag) = match vs.strip_prefix('-') {
                Some(m) => ('-', m.to_string()),
                None => ('+', vs),
            };
            if out.is_empty() {
                if sign == '-' {
                    out.push('-');
                }
            } else {
                out.push(sign);
            }
            let coeff = if is_i {
                if mag == "1" {
                    "I".to_string()
                } else {
                    format!("{mag}I")
                }
            } else if mag == "1" && k > 0 {
                String::new()
            } else {
                mag
            };
            out.push_str(&coeff);
            out.push_str(&power);
        }
        f.write_str(&out)
    }
}
