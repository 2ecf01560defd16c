//! Exhaustive scans of finite neutrosophic group candidates.
//!
//! The additive scan checks ⟨Zₙ ∪ I⟩ = {a + bI : a, b ∈ Zₙ}, which is a
//! group of order n² for every n. The multiplicative scan checks the set
//! {a, aI : a ∈ Zₚ \ {0}} generated the way the source text builds it, and
//! reports the witness that it is not a group: I has no inverse.
//!
//! Composite moduli are legitimate here (and only here), so the scanner
//! carries its own element type instead of NNum.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{NError, Result};
use crate::field::is_prime;

const SCAN_LIMIT: u64 = 64;

/// Element a + bI of Zₙ[I]; the modulus lives in the report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GElem {
    pub a: u64,
    pub b: u64,
}

impl GElem {
    fn add(self, other: Self, n: u64) -> Self {
        GElem { a: (self.a + other.a) % n, b: (self.b + other.b) % n }
    }

    /// (a+bI)(c+dI) = ac + (ad+bc+bd)I.
    fn mul(self, other: Self, n: u64) -> Self {
        GElem {
            a: self.a * other.a % n,
            b: (self.a * other.b + self.b * other.a + self.b * other.b) % n,
        }
    }

    fn is_real(self) -> bool {
        self.b == 0
    }
}

impl fmt::Display for GElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => f.write_str("0"),
            (a, 0) => write!(f, "{a}"),
            (0, 1) => f.write_str("I"),
            (0, b) => write!(f, "{b}I"),
            (a, 1) => write!(f, "{a}+I"),
            (a, b) => write!(f, "{a}+{b}I"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupOp {
    AdditiveModN,
    MultiplicativeNonzeroModN,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupLabel {
    NeutrosophicSubgroup,
    PseudoNeutrosophicSubgroup,
    RealSubgroup,
}

impl fmt::Display for SubgroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubgroupLabel::NeutrosophicSubgroup => "Neutrosophic",
            SubgroupLabel::PseudoNeutrosophicSubgroup => "PseudoNeutrosophic",
            SubgroupLabel::RealSubgroup => "Real",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupScanReport {
    pub modulus: u64,
    pub operation: GroupOp,
    pub order: u64,
    pub is_group: bool,
    /// (x, e): no y in the set satisfies x·y = e.
    pub failure_witness: Option<(GElem, GElem)>,
    pub failure_reason: Option<String>,
    pub subgroups: Vec<(Vec<GElem>, SubgroupLabel)>,
    /// True when the subgroup list is a full enumeration rather than the
    /// single- and two-generator sweep.
    pub subgroups_exhaustive: bool,
}

pub fn group_scan(n: u64, operation: GroupOp) -> Result<GroupScanReport> {
    if n == 0 || n > SCAN_LIMIT {
        return Err(NError::ScanTooLarge(SCAN_LIMIT));
    }
    match operation {
        GroupOp::AdditiveModN => Ok(scan_additive(n)),
        GroupOp::MultiplicativeNonzeroModN => {
            if !is_prime(n) {
                return Err(NError::NotPrime(n));
            }
            Ok(scan_multiplicative(n))
        }
    }
}

fn scan_additive(n: u64) -> GroupScanReport {
    let elements: Vec<GElem> = (0..n)
        .flat_map(|a| (0..n).map(move |b| GElem { a, b }))
        .collect();
    let zero = GElem { a: 0, b: 0 };

    // closure, identity, inverses: exhaustive at every allowed n
    let set: BTreeSet<GElem> = elements.iter().copied().collect();
    let mut ok = elements
        .iter()
        .all(|&x| elements.iter().all(|&y| set.contains(&x.add(y, n))));
    ok &= elements.iter().all(|&x| x.add(zero, n) == x);
    ok &= elements
        .iter()
        .all(|&x| elements.iter().any(|&y| x.add(y, n) == zero));
    // associativity of mod-n addition is structural; recheck by brute force
    // while the triple count stays desk-sized
    if n <= 16 {
        ok &= elements.iter().all(|&x| {
            elements.iter().all(|&y| {
                elements
                    .iter()
                    .all(|&z| x.add(y, n).add(z, n) == x.add(y.add(z, n), n))
            })
        });
    }
    debug_assert!(ok, "Zn[I] under + is always a group");

    let subgroups_exhaustive = n <= 12;
    let mut found: BTreeSet<Vec<GElem>> = BTreeSet::new();
    // every subgroup of Zₙ × Zₙ has rank ≤ 2, so two generators reach all
    // of them; above the cutoff only cyclic subgroups are listed
    for (i, &g1) in elements.iter().enumerate() {
        if subgroups_exhaustive {
            for &g2 in &elements[i..] {
                found.insert(additive_closure(&[g1, g2], n));
            }
        } else {
            found.insert(additive_closure(&[g1], n));
        }
    }
    let subgroups = found
        .into_iter()
        .map(|h| {
            let label = label_subgroup(&h);
            (h, label)
        })
        .collect::<Vec<_>>();
    let mut subgroups = subgroups;
    subgroups.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    GroupScanReport {
        modulus: n,
        operation: GroupOp::AdditiveModN,
        order: n * n,
        is_group: ok,
        failure_witness: None,
        failure_reason: None,
        subgroups,
        subgroups_exhaustive,
    }
}

fn additive_closure(gens: &[GElem], n: u64) -> Vec<GElem> {
    let mut set = BTreeSet::new();
    set.insert(GElem { a: 0, b: 0 });
    let mut frontier: Vec<GElem> = vec![GElem { a: 0, b: 0 }];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = x.add(g, n);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set.into_iter().collect()
}

fn scan_multiplicative(p: u64) -> GroupScanReport {
    let mut elements: Vec<GElem> = (1..p).map(|a| GElem { a, b: 0 }).collect();
    elements.extend((1..p).map(|b| GElem { a: 0, b }));
    let one = GElem { a: 1, b: 0 };
    let set: BTreeSet<GElem> = elements.iter().copied().collect();

    let closed = elements
        .iter()
        .all(|&x| elements.iter().all(|&y| set.contains(&x.mul(y, p))));
    debug_assert!(closed, "the {{a, aI}} set is closed under multiplication");

    // the witness: I·y is always pure, never 1
    let i = GElem { a: 0, b: 1 };
    let has_inverse = elements.iter().any(|&y| i.mul(y, p) == one);
    let (is_group, failure_witness, failure_reason) = if has_inverse {
        (true, None, None)
    } else {
        (false, Some((i, one)), Some("I has no inverse".to_string()))
    };

    // maximal group-subsets inside the monoid; identities may differ (the
    // pure part is a group with identity I)
    let mut found: BTreeSet<Vec<GElem>> = BTreeSet::new();
    for (idx, &g1) in elements.iter().enumerate() {
        for &g2 in &elements[idx..] {
            let h = multiplicative_closure(&[g1, g2], p);
            if is_group_subset(&h, p) {
                found.insert(h);
            }
        }
    }
    let mut subgroups: Vec<(Vec<GElem>, SubgroupLabel)> = found
        .into_iter()
        .map(|h| {
            let label = label_subgroup(&h);
            (h, label)
        })
        .collect();
    subgroups.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    GroupScanReport {
        modulus: p,
        operation: GroupOp::MultiplicativeNonzeroModN,
        order: 2 * (p - 1),
        is_group,
        failure_witness,
        failure_reason,
        subgroups,
        subgroups_exhaustive: true,
    }
}

fn multiplicative_closure(gens: &[GElem], p: u64) -> Vec<GElem> {
    let mut set: BTreeSet<GElem> = gens.iter().copied().collect();
    let mut frontier: Vec<GElem> = set.iter().copied().collect();
    while let Some(x) = frontier.pop() {
        for &y in set.clone().iter() {
            for z in [x.mul(y, p), y.mul(x, p)] {
                if set.insert(z) {
                    frontier.push(z);
                }
            }
        }
    }
    set.into_iter().collect()
}

/// A subset of a monoid is a group iff it has an idempotent identity under
/// which every element is invertible (the identity need not be the monoid's:
/// the pure part has identity I).
fn is_group_subset(h: &[GElem], p: u64) -> bool {
    let Some(&e) = h.iter().find(|&&e| h.iter().all(|&x| e.mul(x, p) == x)) else {
        return false;
    };
    h.iter()
        .all(|&x| h.iter().any(|&y| x.mul(y, p) == e))
}

fn label_subgroup(h: &[GElem]) -> SubgroupLabel {
    let real_count = h.iter().filter(|x| x.is_real()).count();
    if real_count == h.len() {
        return SubgroupLabel::RealSubgroup;
    }
    // the real part of a subgroup is itself a subgroup; a nontrivial one
    // makes the subgroup neutrosophic, otherwise it is only pseudo
    if real_count > 1 {
        SubgroupLabel::NeutrosophicSubgroup
    } else {
        SubgroupLabel::PseudoNeutrosophicSubgroup
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find<'r>(
        report: &'r GroupScanReport,
        members: &[(u64, u64)],
    ) -> Option<&'r (Vec<GElem>, SubgroupLabel)> {
        let target: Vec<GElem> = {
            let mut v: Vec<GElem> = members.iter().map(|&(a, b)| GElem { a, b }).collect();
            v.sort();
            v
        };
        report.subgroups.iter().find(|(h, _)| *h == target)
    }

    #[test]
    fn additive_scan_mod4() {
        let r = group_scan(4, GroupOp::AdditiveModN).unwrap();
        assert_eq!(r.order, 16);
        assert!(r.is_group);
        assert!(r.subgroups_exhaustive);
        let (h, label) = find(&r, &[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap();
        assert_eq!(*label, SubgroupLabel::NeutrosophicSubgroup);
        assert_eq!(h.len(), 4);
        let (_, label) = find(&r, &[(0, 0), (0, 2)]).unwrap();
        assert_eq!(*label, SubgroupLabel::PseudoNeutrosophicSubgroup);
    }

    #[test]
    fn additive_scan_mod2() {
        let r = group_scan(2, GroupOp::AdditiveModN).unwrap();
        assert_eq!(r.order, 4);
        let (_, l1) = find(&r, &[(0, 0), (0, 1)]).unwrap();
        let (_, l2) = find(&r, &[(0, 0), (1, 1)]).unwrap();
        assert_eq!(*l1, SubgroupLabel::PseudoNeutrosophicSubgroup);
        assert_eq!(*l2, SubgroupLabel::PseudoNeutrosophicSubgroup);
        // {0, 1} is an honest real subgroup
        let (_, l3) = find(&r, &[(0, 0), (1, 0)]).unwrap();
        assert_eq!(*l3, SubgroupLabel::RealSubgroup);
    }

    #[test]
    fn multiplicative_scan_mod5() {
        let r = group_scan(5, GroupOp::MultiplicativeNonzeroModN).unwrap();
        assert_eq!(r.order, 8);
        assert!(!r.is_group);
        let (x, e) = r.failure_witness.unwrap();
        assert_eq!(x, GElem { a: 0, b: 1 });
        assert_eq!(e, GElem { a: 1, b: 0 });
        assert_eq!(r.failure_reason.as_deref(), Some("I has no inverse"));
        // the real multiplicative group and its pure mirror both appear
        let (_, real) = find(&r, &[(1, 0), (2, 0), (3, 0), (4, 0)]).unwrap();
        assert_eq!(*real, SubgroupLabel::RealSubgroup);
        let (_, pure) = find(&r, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(*pure, SubgroupLabel::PseudoNeutrosophicSubgroup);
        // no mixed real/pure subset is a group: every listed subgroup is
        // all-real or all-pure
        for (h, _) in &r.subgroups {
            let reals = h.iter().filter(|x| x.is_real()).count();
            assert!(reals == h.len() || reals == 0, "mixed subgroup {h:?}");
        }
    }

    #[test]
    fn multiplicative_requires_prime() {
        assert_eq!(
            group_scan(6, GroupOp::MultiplicativeNonzeroModN),
            Err(NError::NotPrime(6))
        );
    }

    #[test]
    fn scan_bounds() {
        assert_eq!(
            group_scan(65, GroupOp::AdditiveModN),
            Err(NError::ScanTooLarge(64))
        );
        // large-but-allowed scan lists cyclic subgroups only
        let r = group_scan(13, GroupOp::AdditiveModN).unwrap();
        assert!(!r.subgroups_exhaustive);
        assert!(r.is_group);
    }

    #[test]
    fn every_listed_subgroup_is_closed_with_identity() {
        for n in [2u64, 3, 4, 6] {
            let r = group_scan(n, GroupOp::AdditiveModN).unwrap();
            for (h, _) in &r.subgroups {
                assert!(h.contains(&GElem { a: 0, b: 0 }));
                for &x in h {
                    for &y in h {
                        assert!(h.contains(&x.add(y, n)));
                    }
                }
            }
        }
        let r = group_scan(3, GroupOp::MultiplicativeNonzeroModN).unwrap();
        for (h, _) in &r.subgroups {
            for &x in h {
                for &y in h {
                    assert!(h.contains(&x.mul(y, 3)));
                }
            }
        }
    }

    #[test]
    fn element_display() {
        assert_eq!(GElem { a: 0, b: 0 }.to_string(), "0");
        assert_eq!(GElem { a: 2, b: 0 }.to_string(), "2");
        assert_eq!(GElem { a: 0, b: 1 }.to_string(), "I");
        assert_eq!(GElem { a: 0, b: 2 }.to_string(), "2I");
        assert_eq!(GElem { a: 2, b: 2 }.to_string(), "2+2I");
    }
}
