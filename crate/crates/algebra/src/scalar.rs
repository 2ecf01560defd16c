//! The neutrosophic scalar a + bI with I² = I.
//!
//! Internally a value is always the pair (a, b); the two evaluation maps
//! ε₀(a+bI) = a and ε₁(a+bI) = a+b are ring homomorphisms (because I² = I)
//! and together realize N(K) ≅ K × K. They are the oracle everything else is
//! checked against, not the storage format, so printing stays in the a+bI
//! notation.
//!
//! The ring is flavor-aware: in the pure ring KI the multiplicative identity
//! is I itself, units are aI with a ≠ 0, and ε₁ is the one faithful chart.

use std::fmt;

use crate::error::{NError, Result};
use crate::field::{BaseElem, FieldDescriptor, Flavor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    At0,
    At1,
}

pub const SLOTS: [Slot; 2] = [Slot::At0, Slot::At1];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NNum {
    pub field: FieldDescriptor,
    a: BaseElem,
    b: BaseElem,
}

impl NNum {
    /// Canonical constructor; enforces the flavor constraint.
    pub fn from_parts(a: BaseElem, b: BaseElem, field: FieldDescriptor) -> Result<Self> {
        if a.base() != field.base || b.base() != field.base {
            return Err(NError::FieldMismatch);
        }
        match field.flavor {
            Flavor::Real if !b.is_zero() => return Err(NError::FlavorViolation),
            Flavor::PureNeutrosophic if !a.is_zero() => return Err(NError::FlavorViolation),
            _ => {}
        }
        Ok(NNum { field, a, b })
    }

    pub fn from_i64(a: i64, b: i64, field: FieldDescriptor) -> Result<Self> {
        Self::from_parts(
            BaseElem::from_i64(a, field.base),
            BaseElem::from_i64(b, field.base),
            field,
        )
    }

    pub fn zero(field: FieldDescriptor) -> Self {
        NNum {
            field,
            a: BaseElem::zero(field.base),
            b: BaseElem::zero(field.base),
        }
    }

    /// Multiplicative identity of the ring the flavor names: 1 for K and
    /// N(K), I for the pure ring KI.
    pub fn one(field: FieldDescriptor) -> Self {
        match field.flavor {
            Flavor::PureNeutrosophic => NNum {
                field,
                a: BaseElem::zero(field.base),
                b: BaseElem::one(field.base),
            },
            _ => NNum {
                field,
                a: BaseElem::one(field.base),
                b: BaseElem::zero(field.base),
            },
        }
    }

    /// The indeterminacy I. Not available in a real-flavored field.
    pub fn i(field: FieldDescriptor) -> Result<Self> {
        if field.flavor == Flavor::Real {
            return Err(NError::FlavorViolation);
        }
        Ok(NNum {
            field,
            a: BaseElem::zero(field.base),
            b: BaseElem::one(field.base),
        })
    }

    pub fn real_part(&self) -> &BaseElem {
        &self.a
    }

    pub fn i_part(&self) -> &BaseElem {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero()
    }

    /// ε₀(a+bI) = a and ε₁(a+bI) = a+b.
    pub fn eval(&self, slot: Slot) -> BaseElem {
        match slot {
            Slot::At0 => self.a.clone(),
            Slot::At1 => self.a.add(&self.b),
        }
    }

    /// Inverse of the split: the unique x with ε₀(x) = u, ε₁(x) = v.
    pub fn recombine(u: &BaseElem, v: &BaseElem, field: FieldDescriptor) -> Result<Self> {
        Self::from_parts(u.clone(), v.sub(u), field)
    }

    fn joined(&self, other: &Self) -> Result<FieldDescriptor> {
        self.field.join(other.field)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let field = self.joined(other)?;
        Ok(NNum {
            field,
            a: self.a.add(&other.a),
            b: self.b.add(&other.b),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        NNum {
            field: self.field,
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }

    /// (a+bI)(c+dI) = ac + (ad+bc+bd)I, the I² = I rule.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let field = self.joined(other)?;
        let a = self.a.mul(&other.a);
        let b = self
            .a
            .mul(&other.b)
            .add(&self.b.mul(&other.a))
            .add(&self.b.mul(&other.b));
        Ok(NNum { field, a, b })
    }

    /// Unit test in the ring the flavor names.
    pub fn is_unit(&self) -> bool {
        match self.field.flavor {
            Flavor::Real => !self.a.is_zero(),
            Flavor::PureNeutrosophic => !self.b.is_zero(),
            Flavor::FullNeutrosophic => !self.eval(Slot::At0).is_zero() && !self.eval(Slot::At1).is_zero(),
        }
    }

    /// Inverse where one exists. In N(K) that is exactly when both
    /// evaluations are nonzero; the failing slot is reported otherwise
    /// (a zero divisor or zero).
    pub fn inverse(&self) -> Result<Self> {
        match self.field.flavor {
            Flavor::Real => {
                if self.a.is_zero() {
                    return Err(NError::NotInvertible(Slot::At0));
                }
                Ok(NNum {
                    field: self.field,
                    a: self.a.inv()?,
                    b: BaseElem::zero(self.field.base),
                })
            }
            Flavor::PureNeutrosophic => {
                // (aI)(a⁻¹I) = I, the identity of KI; ε₁ is the failing chart.
                if self.b.is_zero() {
                    return Err(NError::NotInvertible(Slot::At1));
                }
                Ok(NNum {
                    field: self.field,
                    a: BaseElem::zero(self.field.base),
                    b: self.b.inv()?,
                })
            }
            Flavor::FullNeutrosophic => {
                let e0 = self.eval(Slot::At0);
                let e1 = self.eval(Slot::At1);
                if e0.is_zero() {
                    return Err(NError::NotInvertible(Slot::At0));
                }
                if e1.is_zero() {
                    return Err(NError::NotInvertible(Slot::At1));
                }
                Self::recombine(&e0.inv()?, &e1.inv()?, self.field)
            }
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inverse()?)
    }

    /// Multiplication by a base-field scalar; preserves the flavor, which a
    /// ring mul with a widened real NNum would not.
    pub fn scale_base(&self, c: &BaseElem) -> Self {
        NNum {
            field: self.field,
            a: self.a.mul(c),
            b: self.b.mul(c),
        }
    }

    pub fn pow(&self, mut e: u64) -> Result<Self> {
        let mut acc = Self::one(self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Lossless widening into a larger flavor over the same base.
    pub fn widen(&self, field: FieldDescriptor) -> Result<Self> {
        if !self.field.contained_in(field) {
            return Err(NError::FieldMismatch);
        }
        Self::from_parts(self.a.clone(), self.b.clone(), field)
    }

    /// Checked narrowing; fails when a part the target flavor forbids is
    /// nonzero.
    pub fn narrow(&self, field: FieldDescriptor) -> Result<Self> {
        if self.field.base != field.base {
            return Err(NError::FieldMismatch);
        }
        Self::from_parts(self.a.clone(), self.b.clone(), field)
    }

    /// The evaluation order on N(Q): x ≥ 0 iff both slots are ≥ 0.
    /// None over prime fields, which carry no order.
    pub fn is_nonnegative(&self) -> Option<bool> {
        let s0 = self.eval(Slot::At0).is_nonnegative()?;
        let s1 = self.eval(Slot::At1).is_nonnegative()?;
        Some(s0 && s1)
    }

    /// Strictly positive in both slots; I fails (slot 0 is 0).
    pub fn is_positive(&self) -> Option<bool> {
        let s0 = self.eval(Slot::At0);
        let s1 = self.eval(Slot::At1);
        Some(s0.is_nonnegative()? && !s0.is_zero() && s1.is_nonnegative()? && !s1.is_zero())
    }
}

impl fmt::Display for NNum {
    /// Canonical form: real part first, zero parts omitted, `I` not `1I`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        if !self.a.is_zero() {
            out.push_str(&self.a.to_string());
        }
        if !self.b.is_zero() {
            if !out.is_empty() {
                // Rational I-parts may be negative; fold the sign into the join.
                let bs = self.b.to_string();
                if let Some(stripped) = bs.strip_prefix('-') {
                    out.push('-');
                    out.push_str(&i_term(stripped));
                } else {
                    out.push('+');
                    out.push_str(&i_term(&bs));
                }
            } else {
                let bs = self.b.to_string();
                if let Some(stripped) = bs.strip_prefix('-') {
                    out.push('-');
                    out.push_str(&i_term(stripped));
                } else {
                    out.push_str(&i_term(&bs));
                }
            }
        }
        f.write_str(&out)
    }
}

fn i_term(magnitude: &str) -> String {
    if magnitude == "1" {
        "I".to_string()
    } else {
        format!("{magnitude}I")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Base;

    fn nz3() -> FieldDescriptor {
        FieldDescriptor::prime(3, Flavor::FullNeutrosophic).unwrap()
    }

    fn nq() -> FieldDescriptor {
        FieldDescriptor::rationals(Flavor::FullNeutrosophic)
    }

    fn n(a: i64, b: i64, f: FieldDescriptor) -> NNum {
        NNum::from_i64(a, b, f).unwrap()
    }

    #[test]
    fn i_squared_is_i() {
        let i = NNum::i(nq()).unwrap();
        assert_eq!(i.mul(&i).unwrap(), i);
    }

    #[test]
    fn identities() {
        let x = n(2, 1, nz3());
        assert_eq!(x.add(&NNum::zero(nz3())).unwrap(), x);
        assert_eq!(x.mul(&NNum::one(nz3())).unwrap(), x);
    }

    #[test]
    fn one_plus_i_squares_to_one_mod_3() {
        let x = n(1, 1, nz3());
        assert_eq!(x.mul(&x).unwrap(), NNum::one(nz3()));
    }

    #[test]
    fn eval_is_a_homomorphism_exhaustively_over_nz3() {
        let f = nz3();
        let all: Vec<NNum> = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .map(|(a, b)| n(a, b, f))
            .collect();
        for x in &all {
            for y in &all {
                for s in SLOTS {
                    assert_eq!(
                        x.mul(y).unwrap().eval(s),
                        x.eval(s).mul(&y.eval(s)),
                        "mul does not commute with eval"
                    );
                    assert_eq!(x.add(y).unwrap().eval(s), x.eval(s).add(&y.eval(s)));
                }
            }
        }
    }

    #[test]
    fn eval_examples() {
        let nz5 = FieldDescriptor::prime(5, Flavor::FullNeutrosophic).unwrap();
        assert!(n(3, 2, nz5).eval(Slot::At1).is_zero());
        let x = n(7, -4, nq());
        assert_eq!(x.eval(Slot::At0), BaseElem::from_i64(7, Base::Rationals));
        assert_eq!(x.eval(Slot::At1), BaseElem::from_i64(3, Base::Rationals));
    }

    #[test]
    fn recombine_inverts_the_split() {
        let f = nz3();
        for a in 0..3 {
            for b in 0..3 {
                let x = n(a, b, f);
                let back =
                    NNum::recombine(&x.eval(Slot::At0), &x.eval(Slot::At1), f).unwrap();
                assert_eq!(back, x);
            }
        }
        let r = NNum::recombine(
            &BaseElem::from_i64(1, Base::Prime(3)),
            &BaseElem::from_i64(2, Base::Prime(3)),
            f,
        )
        .unwrap();
        assert_eq!(r, n(1, 1, f));
    }

    #[test]
    fn unit_criterion_exhaustive_over_nz5() {
        let f = FieldDescriptor::prime(5, Flavor::FullNeutrosophic).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                let x = n(a, b, f);
                let invertible = x.inverse().is_ok();
                let criterion =
                    !x.eval(Slot::At0).is_zero() && !x.eval(Slot::At1).is_zero();
                assert_eq!(invertible, criterion);
                if let Ok(inv) = x.inverse() {
                    assert_eq!(x.mul(&inv).unwrap(), NNum::one(f));
                }
            }
        }
    }

    #[test]
    fn i_is_a_zero_divisor() {
        let i = NNum::i(nq()).unwrap();
        let one_minus_i = NNum::one(nq()).sub(&i).unwrap();
        assert!(i.mul(&one_minus_i).unwrap().is_zero());
        assert_eq!(i.inverse(), Err(NError::NotInvertible(Slot::At0)));
    }

    #[test]
    fn inverse_fixtures() {
        let x = n(1, 1, nz3());
        assert_eq!(x.inverse().unwrap(), x);
        let nz5 = FieldDescriptor::prime(5, Flavor::FullNeutrosophic).unwrap();
        assert_eq!(n(2, 0, nz5).inverse().unwrap(), n(3, 0, nz5));
    }

    #[test]
    fn pure_ring_has_i_as_identity() {
        let qi = FieldDescriptor::rationals(Flavor::PureNeutrosophic);
        let i = NNum::one(qi);
        assert_eq!(i, NNum::i(qi).unwrap());
        for a in [-3i64, 2, 5] {
            let x = NNum::from_i64(0, a, qi).unwrap();
            assert_eq!(x.mul(&i).unwrap(), x);
        }
        // 2I is a unit of KI even though it is a zero divisor of N(K).
        let two_i = NNum::from_i64(0, 2, qi).unwrap();
        let inv = two_i.inverse().unwrap();
        assert_eq!(two_i.mul(&inv).unwrap(), i);
    }

    #[test]
    fn flavor_constraints() {
        let z3 = FieldDescriptor::prime(3, Flavor::Real).unwrap();
        assert!(NNum::from_i64(1, 1, z3).is_err());
        let z3i = FieldDescriptor::prime(3, Flavor::PureNeutrosophic).unwrap();
        assert!(NNum::from_i64(1, 1, z3i).is_err());
        // widening is implicit and lossless; narrowing is checked
        let x = NNum::from_i64(2, 0, z3).unwrap();
        let wide = x.widen(z3.full()).unwrap();
        assert_eq!(wide.narrow(z3).unwrap(), x);
        let y = NNum::from_i64(1, 1, z3.full()).unwrap();
        assert!(y.narrow(z3).is_err());
    }

    #[test]
    fn printing() {
        assert_eq!(n(0, 0, nq()).to_string(), "0");
        assert_eq!(n(2, 0, nq()).to_string(), "2");
        assert_eq!(n(0, 1, nq()).to_string(), "I");
        assert_eq!(n(0, 2, nq()).to_string(), "2I");
        assert_eq!(n(1, 2, nq()).to_string(), "1+2I");
        assert_eq!(n(1, -1, nq()).to_string(), "1-I");
        assert_eq!(n(0, -1, nq()).to_string(), "-I");
        let half_i = NNum::from_parts(
            BaseElem::from_i64(0, Base::Rationals),
            BaseElem::from_ratio(1, 2, Base::Rationals).unwrap(),
            nq(),
        )
        .unwrap();
        assert_eq!(half_i.to_string(), "1/2I");
        // mod-p values print reduced
        assert_eq!(n(5, 4, nz3()).to_string(), "2+I");
    }
}
