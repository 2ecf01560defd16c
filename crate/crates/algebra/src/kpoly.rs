//! Classical polynomials over the base field K (Q or Z_p).
//!
//! This is the slot-level workhorse: neutrosophic polynomial questions are
//! answered by mapping through ε₀/ε₁ to a pair of these and recombining.
//! Coefficients are stored ascending with no trailing zeros; the zero
//! polynomial is the empty list.
//!
//! Everything here is exact. Division assumes the base is a field, which it
//! always is (Q or Z_p with p prime).

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::{BigUint, Integer, One, Signed, Zero};

use crate::error::{NError, Result};
use crate::field::{is_prime, Base, BaseElem};

/// Degree with the usual convention deg 0 = −∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    NegInf,
    Fin(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Fin(d) => Some(d),
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInf, Degree::NegInf) => Ordering::Equal,
            (Degree::NegInf, _) => Ordering::Less,
            (_, Degree::NegInf) => Ordering::Greater,
            (Degree::Fin(a), Degree::Fin(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Fin(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KPoly {
    base: Base,
    coeffs: Vec<BaseElem>,
}

impl KPoly {
    /// Normalizing constructor: strips trailing zeros. Mixed bases are a
    /// programmer error at this layer and panic.
    pub fn new(mut coeffs: Vec<BaseElem>, base: Base) -> Self {
        for c in &coeffs {
            assert!(c.base() == base, "mixed bases in KPoly");
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        KPoly { base, coeffs }
    }

    pub fn zero(base: Base) -> Self {
        KPoly { base, coeffs: vec![] }
    }

    pub fn one(base: Base) -> Self {
        Self::constant(BaseElem::one(base))
    }

    pub fn constant(c: BaseElem) -> Self {
        Self::new(vec![c.clone()], c.base())
    }

    pub fn x(base: Base) -> Self {
        Self::monomial(BaseElem::one(base), 1)
    }

    /// c·x^k.
    pub fn monomial(c: BaseElem, k: usize) -> Self {
        let base = c.base();
        let mut coeffs = vec![BaseElem::zero(base); k];
        coeffs.push(c);
        Self::new(coeffs, base)
    }

    pub fn from_i64(coeffs: &[i64], base: Base) -> Self {
        Self::new(
            coeffs.iter().map(|&c| BaseElem::from_i64(c, base)).collect(),
            base,
        )
    }

    /// (x − r₁)···(x − rₖ).
    pub fn from_roots(roots: &[BaseElem], base: Base) -> Self {
        let mut p = Self::one(base);
        for r in roots {
            let lin = Self::new(vec![r.neg(), BaseElem::one(base)], base);
            p = p.mul(&lin);
        }
        p
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn coeffs(&self) -> &[BaseElem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BaseElem {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| BaseElem::zero(self.base))
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

    pub fn leading(&self) -> BaseElem {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| BaseElem::zero(self.base))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.base == other.base, "mixed bases in KPoly");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect();
        Self::new(coeffs, self.base)
    }

    pub fn neg(&self) -> Self {
        KPoly {
            base: self.base,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert!(self.base == other.base, "mixed bases in KPoly");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.base);
        }
        let mut coeffs =
            vec![BaseElem::zero(self.base); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::new(coeffs, self.base)
    }

    pub fn scale(&self, c: &BaseElem) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect(), self.base)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(self.base);
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

    /// Euclidean division: self = q·d + r with deg r < deg d.
    pub fn divmod(&self, d: &Self) -> Result<(Self, Self)> {
        assert!(self.base == d.base, "mixed bases in KPoly");
        if d.is_zero() {
            return Err(NError::DivisionByZero);
        }
        let dd = d.coeffs.len() - 1;
        let lead_inv = d.leading().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BaseElem::zero(self.base); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap().mul(&lead_inv);
            if !factor.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].sub(&factor.mul(dc));
                }
                quo[k] = factor;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        Ok((Self::new(quo, self.base), Self::new(rem, self.base)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.divmod(d)?.1)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn make_monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(&self.leading().inv().expect("field leading coefficient"))
    }

    /// Monic gcd by Euclid's algorithm; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Extended Euclid: returns (g, u, v) with u·self + v·other = g, g monic.
    pub fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let base = self.base;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Self::one(base), Self::zero(base));
        let (mut v0, mut v1) = (Self::zero(base), Self::one(base));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let nu = u0.sub(&q.mul(&u1));
            u0 = std::mem::replace(&mut u1, nu);
            let nv = v0.sub(&q.mul(&v1));
            v0 = std::mem::replace(&mut v1, nv);
        }
        if r0.is_zero() {
            return (r0, u0, v0);
        }
        let c = r0.leading().inv().expect("field leading coefficient");
        (r0.scale(&c), u0.scale(&c), v0.scale(&c))
    }

    pub fn eval(&self, x: &BaseElem) -> BaseElem {
        let mut acc = BaseElem::zero(self.base);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.base);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&BaseElem::from_i64(k as i64, self.base)))
            .collect();
        Self::new(coeffs, self.base)
    }

    /// Squarefree test; valid over Q and over Z_p (perfect fields).
    pub fn is_squarefree(&self) -> bool {
        if self.is_constant() {
            return true;
        }
        self.gcd(&self.derivative()).is_constant()
    }

    /// Composition self(g(x)).
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero(self.base);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// All roots in the base field, with multiplicities, plus a completeness
    /// flag. Exhaustive over Z_p; over Q via the rational root bound, where
    /// completeness can fail only if a coefficient resists factoring.
    pub fn roots(&self) -> Result<(Vec<(BaseElem, u32)>, bool)> {
        if self.is_zero() {
            return Err(NError::ZeroPolynomial);
        }
        let (candidates, complete) = match self.base {
            Base::Prime(p) => {
                if p > 1 << 20 {
                    return Err(NError::UnsupportedField);
                }
                ((0..p).map(|a| BaseElem::from_i64(a as i64, self.base)).collect(), true)
            }
            Base::Rationals => self.rational_root_candidates(),
        };
        let mut out = Vec::new();
        let mut f = self.clone();
        for c in candidates {
            if !self.eval(&c).is_zero() {
                continue;
            }
            let lin = Self::new(vec![c.neg(), BaseElem::one(self.base)], self.base);
            let mut mult = 0u32;
            loop {
                let (q, r) = f.divmod(&lin).expect("linear divisor");
                if !r.is_zero() {
                    break;
                }
                f = q;
                mult += 1;
            }
            debug_assert!(mult > 0);
            out.push((c, mult));
        }
        Ok((out, complete))
    }

    /// Peels every root found by `roots`; the polynomial splits into linear
    /// factors iff the cofactor is constant. Returns
    /// (roots with multiplicity, cofactor, decision was complete).
    pub fn split_into_linears(&self) -> Result<(Vec<(BaseElem, u32)>, Self, bool)> {
        let (roots, complete) = self.roots()?;
        let mut f = self.clone();
        for (r, m) in &roots {
            let lin = Self::new(vec![r.neg(), BaseElem::one(self.base)], self.base);
            f = f.divmod(&lin.pow(*m))?.0;
        }
        Ok((roots, f, complete))
    }

    fn rational_root_candidates(&self) -> (Vec<BaseElem>, bool) {
        // clear denominators: candidates ±p/q with p | constant, q | leading,
        // applied to the primitive integer form
        let mut k = self.coeffs.len();
        let mut lo = 0;
        while lo < k && self.coeffs[lo].is_zero() {
            lo += 1; // x^lo factors contribute the root 0, handled by eval
        }
        if lo >= k {
            return (vec![BaseElem::zero(self.base)], true);
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs[lo..] {
            if let BaseElem::Rat(r) = c {
                den_lcm = den_lcm.lcm(r.denom());
            }
        }
        let int_at = |i: usize| -> BigInt {
            match &self.coeffs[i] {
                BaseElem::Rat(r) => r.numer() * (&den_lcm / r.denom()),
                BaseElem::Mod(..) => unreachable!("rational base"),
            }
        };
        let a0 = int_at(lo).abs().to_biguint().unwrap();
        k -= 1;
        let an = int_at(k).abs().to_biguint().unwrap();
        let (nums, c0) = divisors(&a0);
        let (dens, c1) = divisors(&an);
        let mut cands = vec![BaseElem::zero(self.base)];
        for p in &nums {
            for q in &dens {
                let r = BaseElem::from_big_ratio(BigInt::from(p.clone()), BigInt::from(q.clone()));
                cands.push(r.neg());
                cands.push(r);
            }
        }
        cands.sort();
        cands.dedup();
        (cands, c0 && c1)
    }

    /// Monic irreducible factorization over Z_p by trial division in order of
    /// increasing (degree, coefficient tuple). Complete and deterministic;
    /// refuses inputs whose search space is out of desk range.
    pub fn factor(&self) -> Result<Vec<(KPoly, u32)>> {
        let p = match self.base {
            Base::Prime(p) => p,
            Base::Rationals => return Err(NError::UnsupportedField),
        };
        if self.is_zero() {
            return Err(NError::ZeroPolynomial);
        }
        let mut f = self.make_monic();
        let deg = f.coeffs.len() - 1;
        let mut budget: u64 = 0;
        for d in 1..=(deg / 2) {
            budget = budget.saturating_add((p as u64).saturating_pow(d as u32));
        }
        if budget > 4_000_000 {
            return Err(NError::UnsupportedField);
        }
        let mut out: Vec<(KPoly, u32)> = Vec::new();
        let mut d = 1usize;
        while f.coeffs.len() > 1 {
            let fdeg = f.coeffs.len() - 1;
            if d > fdeg / 2 {
                // no divisor of degree ≤ fdeg/2: f is irreducible
                out.push((f.clone(), 1));
                break;
            }
            let mut found = false;
            for g in MonicIter::new(p, d) {
                if g.divides(&f) {
                    let mut mult = 0u32;
                    loop {
                        let (q, r) = f.divmod(&g)?;
                        if !r.is_zero() {
                            break;
                        }
                        f = q;
                        mult += 1;
                    }
                    out.push((g, mult));
                    found = true;
                    break; // rescan the same degree: more factors may remain
                }
            }
            if !found {
                d += 1;
            }
        }
        Ok(out)
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        let f = self.factor()?;
        Ok(f.len() == 1 && f[0].1 == 1 && f[0].0.coeffs.len() == self.coeffs.len())
    }
}

/// Monic degree-d polynomials over Z_p in lex order of the coefficient tuple
/// (constant term varies fastest).
struct MonicIter {
    p: u64,
    digits: Vec<u64>,
    done: bool,
}

impl MonicIter {
    fn new(p: u64, d: usize) -> Self {
        MonicIter { p, digits: vec![0; d], done: false }
    }
}

impl Iterator for MonicIter {
    type Item = KPoly;

    fn next(&mut self) -> Option<KPoly> {
        if self.done {
            return None;
        }
        let base = Base::Prime(self.p);
        let mut coeffs: Vec<BaseElem> = self
            .digits
            .iter()
            .map(|&c| BaseElem::from_i64(c as i64, base))
            .collect();
        coeffs.push(BaseElem::one(base));
        // increment with the most significant digit last, so the tuple
        // (c_{d-1}, …, c_1, c_0) advances lexicographically
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                self.done = true;
                break;
            }
            self.digits[i] += 1;
            if self.digits[i] < self.p {
                break;
            }
            self.digits[i] = 0;
            i += 1;
        }
        Some(KPoly::new(coeffs, base))
    }
}

/// All divisors of n, with a completeness flag. Trial division to 10⁶, then
/// a primality test on the cofactor; a composite cofactor with no small
/// factors makes the list incomplete.
fn divisors(n: &BigUint) -> (Vec<BigUint>, bool) {
    if n.is_zero() {
        return (vec![BigUint::one()], true);
    }
    let mut m = n.clone();
    let mut primes: Vec<(BigUint, u32)> = Vec::new();
    let push = |p: BigUint, e: u32, primes: &mut Vec<(BigUint, u32)>| {
        if e > 0 {
            primes.push((p, e));
        }
    };
    let mut complete = true;
    let mut d = 2u64;
    while d <= 1_000_000 {
        let db = BigUint::from(d);
        if &db * &db > m {
            break;
        }
        let mut e = 0;
        while (&m % &db).is_zero() {
            m /= &db;
            e += 1;
        }
        push(db, e, &mut primes);
        d += if d == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        if biguint_is_probable_prime(&m) {
            push(m, 1, &mut primes);
        } else {
            complete = false;
        }
    }
    let mut divs = vec![BigUint::one()];
    for (p, e) in &primes {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for dv in &divs {
            let mut acc = dv.clone();
            next.push(acc.clone());
            for _ in 0..*e {
                acc *= p;
                next.push(acc.clone());
            }
        }
        divs = next;
        if divs.len() > 10_000 {
            // divisor explosion: keep what we have, flag incomplete
            divs.truncate(10_000);
            complete = false;
            break;
        }
    }
    divs.sort();
    divs.dedup();
    (divs, complete)
}

/// Miller–Rabin with the fixed witness set; deterministic for all u64 and
/// beyond any size reachable by honest coefficient growth here.
fn biguint_is_probable_prime(n: &BigUint) -> bool {
    if let Ok(small) = u64::try_from(n.clone()) {
        return is_prime(small);
    }
    let one = BigUint::one();
    let two = &one + &one;
    if n.is_even() {
        return false;
    }
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl fmt::Display for KPoly {
    /// Descending powers: `x^3+2x^2+1`; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(m) => ('-', m.to_string()),
                None => ('+', cs),
            };
            if out.is_empty() {
                if sign == '-' {
                    out.push('-');
                }
            } else {
                out.push(sign);
            }
            let power = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if k == 0 {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&power);
            } else {
                out.push_str(&mag);
                out.push_str(&power);
            }
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Base {
        Base::Rationals
    }

    fn z(p: u64) -> Base {
        Base::Prime(p)
    }

    #[test]
    fn degree_convention() {
        assert_eq!(KPoly::zero(q()).degree(), Degree::NegInf);
        assert_eq!(KPoly::one(q()).degree(), Degree::Fin(0));
        assert_eq!(KPoly::from_i64(&[1, 0, 3], q()).degree(), Degree::Fin(2));
        assert!(Degree::NegInf < Degree::Fin(0));
    }

    #[test]
    fn trailing_zeros_stripped() {
        let p = KPoly::from_i64(&[1, 2, 0, 0], q());
        assert_eq!(p.coeffs().len(), 2);
        let diff = KPoly::from_i64(&[1, 1], q()).sub(&KPoly::from_i64(&[0, 1], q()));
        assert_eq!(diff, KPoly::one(q()));
    }

    #[test]
    fn division_identity() {
        // (x²+3x+2) ÷ (x+1) = (x+2, 0)
        let f = KPoly::from_i64(&[2, 3, 1], q());
        let d = KPoly::from_i64(&[1, 1], q());
        let (qq, r) = f.divmod(&d).unwrap();
        assert_eq!(qq, KPoly::from_i64(&[2, 1], q()));
        assert!(r.is_zero());
        // x³ ÷ (2x+1) over Q leaves r of degree 0
        let f = KPoly::monomial(BaseElem::from_i64(1, q()), 3);
        let d = KPoly::from_i64(&[1, 2], q());
        let (qq, r) = f.divmod(&d).unwrap();
        assert_eq!(qq.mul(&d).add(&r), f);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn gcd_and_bezout() {
        let f = KPoly::from_i64(&[-1, 0, 1], q()); // (x-1)(x+1)
        let g = KPoly::from_i64(&[-1, 1], q()); // x-1
        assert_eq!(f.gcd(&g), g.make_monic());
        let a = KPoly::from_i64(&[2, 1], z(5)); // x+2
        let b = KPoly::from_i64(&[3, 1], z(5)); // x+3
        let (gg, u, v) = a.extended_gcd(&b);
        assert!(gg.is_constant() && gg.is_monic());
        assert_eq!(u.mul(&a).add(&v.mul(&b)), gg);
    }

    #[test]
    fn derivative_and_squarefree() {
        let f = KPoly::from_i64(&[1, 2, 3], q());
        assert_eq!(f.derivative(), KPoly::from_i64(&[2, 6], q()));
        assert!(f.is_squarefree());
        let sq = KPoly::from_i64(&[-1, 1], q()).pow(2);
        assert!(!sq.is_squarefree());
        // x² over Z₂: derivative vanishes, still not squarefree
        let xx = KPoly::from_i64(&[0, 0, 1], z(2));
        assert!(!xx.is_squarefree());
    }

    #[test]
    fn roots_mod_p() {
        // x²+1 over Z₅: roots 2, 3
        let f = KPoly::from_i64(&[1, 0, 1], z(5));
        let (roots, complete) = f.roots().unwrap();
        assert!(complete);
        let vals: Vec<String> = roots.iter().map(|(r, m)| format!("{r}^{m}")).collect();
        assert_eq!(vals, ["2^1", "3^1"]);
        // (x-1)²x over Z₃
        let g = KPoly::from_i64(&[0, 1], z(3)).mul(&KPoly::from_i64(&[-1, 1], z(3)).pow(2));
        let (roots, _) = g.roots().unwrap();
        assert_eq!(
            roots.iter().map(|(r, m)| (r.to_string(), *m)).collect::<Vec<_>>(),
            [("0".to_string(), 1), ("1".to_string(), 2)]
        );
    }

    #[test]
    fn rational_roots() {
        // 2x² - 3x + 1 = (2x - 1)(x - 1): roots 1/2 and 1
        let f = KPoly::from_i64(&[1, -3, 2], q());
        let (roots, complete) = f.roots().unwrap();
        assert!(complete);
        let vals: Vec<String> = roots.iter().map(|(r, _)| r.to_string()).collect();
        assert_eq!(vals, ["1/2", "1"]);
        // x² - 2 has no rational roots; decision still complete
        let g = KPoly::from_i64(&[-2, 0, 1], q());
        let (roots, complete) = g.roots().unwrap();
        assert!(roots.is_empty() && complete);
        let (_, cofactor, complete) = g.split_into_linears().unwrap();
        assert!(complete && cofactor.degree() == Degree::Fin(2));
    }

    #[test]
    fn factor_over_z2() {
        // x⁴+x = x(x+1)(x²+x+1) over Z₂
        let f = KPoly::from_i64(&[0, 1, 0, 0, 1], z(2));
        let factors = f.factor().unwrap();
        let shown: Vec<String> = factors.iter().map(|(g, m)| format!("({g})^{m}")).collect();
        assert_eq!(shown, ["(x)^1", "(x+1)^1", "(x^2+x+1)^1"]);
        let rebuilt = factors
            .iter()
            .fold(KPoly::one(z(2)), |acc, (g, m)| acc.mul(&g.pow(*m)));
        assert_eq!(rebuilt, f);
    }

    #[test]
    fn factor_with_multiplicity() {
        // (x+1)²(x²+1) over Z₃, where x²+1 is irreducible
        let f = KPoly::from_i64(&[1, 1], z(3))
            .pow(2)
            .mul(&KPoly::from_i64(&[1, 0, 1], z(3)));
        let factors = f.factor().unwrap();
        let shown: Vec<String> = factors.iter().map(|(g, m)| format!("({g})^{m}")).collect();
        assert_eq!(shown, ["(x+1)^2", "(x^2+1)^1"]);
        assert!(KPoly::from_i64(&[1, 0, 1], z(3)).is_irreducible().unwrap());
        assert!(!f.is_irreducible().unwrap());
    }

    #[test]
    fn factor_guard() {
        // degree 12 over a large prime: search space out of range
        let f = KPoly::monomial(BaseElem::from_i64(1, z(1009)), 12)
            .add(&KPoly::from_i64(&[7], z(1009)));
        assert_eq!(f.factor(), Err(NError::UnsupportedField));
    }

    #[test]
    fn eval_and_compose() {
        let f = KPoly::from_i64(&[1, 1], q()); // x+1
        let g = KPoly::from_i64(&[0, 0, 1], q()); // x²
        assert_eq!(f.compose(&g), KPoly::from_i64(&[1, 0, 1], q()));
        assert_eq!(
            f.eval(&BaseElem::from_i64(4, q())),
            BaseElem::from_i64(5, q())
        );
    }

    #[test]
    fn printing() {
        assert_eq!(KPoly::zero(q()).to_string(), "0");
        assert_eq!(KPoly::from_i64(&[-1, 0, 1], q()).to_string(), "x^2-1");
        assert_eq!(KPoly::from_i64(&[2, -3, 1], q()).to_string(), "x^2-3x+2");
        assert_eq!(KPoly::from_i64(&[0, 1], q()).to_string(), "x");
        assert_eq!(KPoly::from_i64(&[0, -1], q()).to_string(), "-x");
    }

    #[test]
    fn divisor_enumeration() {
        let (divs, complete) = divisors(&BigUint::from(12u32));
        assert!(complete);
        let vals: Vec<u64> = divs.iter().map(|d| u64::try_from(d.clone()).unwrap()).collect();
        assert_eq!(vals, [1, 2, 3, 4, 6, 12]);
    }
}
