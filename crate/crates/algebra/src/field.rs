//! Base fields and their elements.
//!
//! Two bases exist: the rationals (arbitrary precision, never floating point)
//! and a prime field Z_p. A `FieldDescriptor` combines a base with a flavor
//! telling which parts of a+bI may be nonzero:
//!
//! * `Real` — b = 0, the plain field K;
//! * `FullNeutrosophic` — the ring K + KI;
//! * `PureNeutrosophic` — a = 0, the ring KI, in which I is the
//!   multiplicative identity.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{NError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    Rationals,
    Prime(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Real,
    FullNeutrosophic,
    PureNeutrosophic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldDescriptor {
    pub base: Base,
    pub flavor: Flavor,
}

impl FieldDescriptor {
    pub fn rationals(flavor: Flavor) -> Self {
        FieldDescriptor {
            base: Base::Rationals,
            flavor,
        }
    }

    /// Primality is checked here; nothing downstream re-checks.
    pub fn prime(p: u64, flavor: Flavor) -> Result<Self> {
        if !is_prime(p) {
            return Err(NError::NotPrime(p));
        }
        Ok(FieldDescriptor {
            base: Base::Prime(p),
            flavor,
        })
    }

    pub fn real(self) -> Self {
        FieldDescriptor {
            flavor: Flavor::Real,
            ..self
        }
    }

    pub fn full(self) -> Self {
        FieldDescriptor {
            flavor: Flavor::FullNeutrosophic,
            ..self
        }
    }

    /// Smallest flavor containing both operands; errors when bases differ.
    pub fn join(self, other: Self) -> Result<Self> {
        if self.base != other.base {
            return Err(NError::FieldMismatch);
        }
        let flavor = if self.flavor == other.flavor {
            self.flavor
        } else {
            Flavor::FullNeutrosophic
        };
        Ok(FieldDescriptor {
            base: self.base,
            flavor,
        })
    }

    /// `X ⊆ Y` in the subfield sense: Real and Pure both sit inside Full over
    /// the same base. K and KI share only 0, so neither contains the other.
    pub fn contained_in(self, other: Self) -> bool {
        self.base == other.base
            && (self.flavor == other.flavor || other.flavor == Flavor::FullNeutrosophic)
    }

    /// Field tag as used in document formats: `Q`, `Z5`, `N(Q)`, `N(Z5)`,
    /// `QI`, `Z5I`.
    pub fn tag(&self) -> String {
        let core = match self.base {
            Base::Rationals => "Q".to_string(),
            Base::Prime(p) => format!("Z{p}"),
        };
        match self.flavor {
            Flavor::Real => core,
            Flavor::FullNeutrosophic => format!("N({core})"),
            Flavor::PureNeutrosophic => format!("{core}I"),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

/// Deterministic Miller-Rabin, exact for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// An element of a base field. `Mod` carries its modulus so arithmetic is
/// self-contained; mixing moduli is a bug and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseElem {
    Rat(BigRational),
    Mod(u64, u64),
}

impl BaseElem {
    pub fn zero(base: Base) -> Self {
        match base {
            Base::Rationals => BaseElem::Rat(BigRational::zero()),
            Base::Prime(p) => BaseElem::Mod(0, p),
        }
    }

    pub fn one(base: Base) -> Self {
        match base {
            Base::Rationals => BaseElem::Rat(BigRational::one()),
            Base::Prime(p) => BaseElem::Mod(1, p),
        }
    }

    pub fn from_i64(v: i64, base: Base) -> Self {
        match base {
            Base::Rationals => BaseElem::Rat(BigRational::from(BigInt::from(v))),
            Base::Prime(p) => {
                let r = v.rem_euclid(p as i64) as u64;
                BaseElem::Mod(r, p)
            }
        }
    }

    pub fn from_ratio(num: i64, den: i64, base: Base) -> Result<Self> {
        if den == 0 {
            return Err(NError::DivisionByZero);
        }
        match base {
            Base::Rationals => Ok(BaseElem::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            Base::Prime(_) => {
                let n = Self::from_i64(num, base);
                let d = Self::from_i64(den, base);
                n.div(&d)
            }
        }
    }

    /// Rational from big integers; reduction happens in the constructor.
    pub fn from_big_ratio(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        BaseElem::Rat(BigRational::new(num, den))
    }

    pub fn base(&self) -> Base {
        match self {
            BaseElem::Rat(_) => Base::Rationals,
            BaseElem::Mod(_, p) => Base::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            BaseElem::Rat(r) => r.is_zero(),
            BaseElem::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            BaseElem::Rat(r) => r.is_one(),
            BaseElem::Mod(v, _) => *v == 1,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (BaseElem::Rat(a), BaseElem::Rat(b)) => BaseElem::Rat(a + b),
            (BaseElem::Mod(a, p), BaseElem::Mod(b, q)) => {
                assert_eq!(p, q, "mixed moduli");
                BaseElem::Mod((a + b) % p, *p)
            }
            _ => panic!("mixed bases"),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        match self {
            BaseElem::Rat(a) => BaseElem::Rat(-a),
            BaseElem::Mod(a, p) => BaseElem::Mod((p - a) % p, *p),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (BaseElem::Rat(a), BaseElem::Rat(b)) => BaseElem::Rat(a * b),
            (BaseElem::Mod(a, p), BaseElem::Mod(b, q)) => {
                assert_eq!(p, q, "mixed moduli");
                BaseElem::Mod(mul_mod(*a, *b, *p), *p)
            }
            _ => panic!("mixed bases"),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(NError::DivisionByZero);
        }
        match self {
            BaseElem::Rat(a) => Ok(BaseElem::Rat(a.recip())),
            BaseElem::Mod(a, p) => Ok(BaseElem::Mod(pow_mod(*a, p - 2, *p), *p)),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.base());
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// Order test used by the inner-product module; only rationals carry one.
    pub fn is_nonnegative(&self) -> Option<bool> {
        match self {
            BaseElem::Rat(r) => Some(!r.is_negative()),
            BaseElem::Mod(..) => None,
        }
    }
}

impl fmt::Display for BaseElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseElem::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            BaseElem::Mod(v, _) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(97));
        assert!(is_prime((1 << 31) - 1));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(!is_prime(91));
    }

    #[test]
    fn descriptor_tags() {
        let f = FieldDescriptor::prime(3, Flavor::FullNeutrosophic).unwrap();
        assert_eq!(f.tag(), "N(Z3)");
        assert_eq!(f.real().tag(), "Z3");
        let qi = FieldDescriptor::rationals(Flavor::PureNeutrosophic);
        assert_eq!(qi.tag(), "QI");
        assert!(FieldDescriptor::prime(6, Flavor::Real).is_err());
    }

    #[test]
    fn containment() {
        let z3 = FieldDescriptor::prime(3, Flavor::Real).unwrap();
        let nz3 = z3.full();
        let z3i = FieldDescriptor::prime(3, Flavor::PureNeutrosophic).unwrap();
        assert!(z3.contained_in(nz3));
        assert!(z3i.contained_in(nz3));
        assert!(!nz3.contained_in(z3));
        assert!(!z3.contained_in(z3i));
        assert!(!z3i.contained_in(z3));
    }

    #[test]
    fn mod_arithmetic() {
        let a = BaseElem::from_i64(4, Base::Prime(5));
        let b = BaseElem::from_i64(3, Base::Prime(5));
        assert_eq!(a.mul(&b), BaseElem::Mod(2, 5));
        assert_eq!(a.inv().unwrap(), BaseElem::Mod(4, 5));
        assert_eq!(BaseElem::from_i64(-1, Base::Prime(5)), BaseElem::Mod(4, 5));
    }

    #[test]
    fn rational_reduction() {
        let r = BaseElem::from_ratio(2, 4, Base::Rationals).unwrap();
        assert_eq!(r.to_string(), "1/2");
        let w = BaseElem::from_ratio(3, -6, Base::Rationals).unwrap();
        assert_eq!(w.to_string(), "-1/2");
    }
}
