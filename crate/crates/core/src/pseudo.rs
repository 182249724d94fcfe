//! Pseudoeffect algebras: the non-commutative generalisation with a left
//! complement (bar) and a right complement (tilde).
//!
//! `x-bar` is the unique `u` with `u + x = 1`, `x-tilde` the unique `w` with
//! `x + w = 1`; the two maps are mutually inverse antitone bijections.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::effect::{BuildError, EffectAlgebra, ExhaustiveLimits, MonotonicityMode, ShiftCheck};
use crate::poset::{Carrier, Elem, OrderRelation};
use crate::report::{AxiomTag, CheckError, Report};
use crate::tables::PartialBinTable;

/// Verifies (P1)-(P4) on a raw addition table.
pub fn check_pea_axioms(carrier: &Carrier, plus: &PartialBinTable) -> Result<Report, CheckError> {
    let n = carrier.size();
    if plus.size() != n {
        return Err(CheckError::Malformed {
            what: "plus table",
            detail: format!("table is {}x{}, carrier has {n} elements", plus.size(), plus.size()),
        });
    }
    let one = carrier.one();
    let zero = carrier.zero();
    let mut report = Report::new("pseudoeffect axioms");

    // P1: x+y defined gives u,w with u+x = y+w = x+y
    'p1: for x in 0..n {
        for y in 0..n {
            if let Some(s) = plus.get(x, y) {
                let left = (0..n).any(|u| plus.get(u, x) == Some(s));
                let right = (0..n).any(|w| plus.get(y, w) == Some(s));
                if !left || !right {
                    report.fail(
                        AxiomTag::P1,
                        alloc::vec![x, y],
                        format!(
                            "{}+{} = {} has no {} shift",
                            carrier.label(x),
                            carrier.label(y),
                            carrier.label(s),
                            if left { "right" } else { "left" }
                        ),
                    );
                    break 'p1;
                }
            }
        }
    }

    // P2: associativity including definedness
    'p2: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let left = plus.get(x, y).and_then(|xy| plus.get(xy, z));
                let right = plus.get(y, z).and_then(|yz| plus.get(x, yz));
                if left != right {
                    report.fail(
                        AxiomTag::P2,
                        alloc::vec![x, y, z],
                        format!(
                            "({}+{})+{} and {}+({}+{}) disagree",
                            carrier.label(x),
                            carrier.label(y),
                            carrier.label(z),
                            carrier.label(x),
                            carrier.label(y),
                            carrier.label(z)
                        ),
                    );
                    break 'p2;
                }
            }
        }
    }

    // P3: unique left and right complements
    for x in 0..n {
        let lefts: Vec<Elem> = (0..n).filter(|&u| plus.get(u, x) == Some(one)).collect();
        let rights: Vec<Elem> = (0..n).filter(|&w| plus.get(x, w) == Some(one)).collect();
        if lefts.len() != 1 || rights.len() != 1 {
            report.fail(
                AxiomTag::P3,
                alloc::vec![x],
                format!(
                    "element {} has {} left and {} right complements",
                    carrier.label(x),
                    lefts.len(),
                    rights.len()
                ),
            );
            break;
        }
    }

    // P4: 1+x or x+1 defined only for x = 0
    for x in 0..n {
        if x != zero && (plus.is_defined(one, x) || plus.is_defined(x, one)) {
            report.fail(AxiomTag::P4, alloc::vec![x], format!("1+{} or {}+1 is defined", carrier.label(x), carrier.label(x)));
            break;
        }
    }

    Ok(report)
}

/// A verified pseudoeffect algebra with derived complements and order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PseudoEffectAlgebra {
    carrier: Carrier,
    plus: PartialBinTable,
    lcomp: Vec<Elem>,
    rcomp: Vec<Elem>,
    order: OrderRelation,
}

impl PseudoEffectAlgebra {
    pub fn from_table(carrier: Carrier, plus: PartialBinTable) -> Result<Self, BuildError> {
        if plus.size() != carrier.size() {
            return Err(BuildError::SizeMismatch { carrier: carrier.size(), table: plus.size() });
        }
        let report = check_pea_axioms(&carrier, &plus).expect("shape checked");
        if !report.passed() {
            return Err(BuildError::Axioms(report));
        }
        let n = carrier.size();
        let one = carrier.one();
        let lcomp: Vec<Elem> = (0..n)
            .map(|x| (0..n).find(|&u| plus.get(u, x) == Some(one)).expect("P3 checked"))
            .collect();
        let rcomp: Vec<Elem> = (0..n)
            .map(|x| (0..n).find(|&w| plus.get(x, w) == Some(one)).expect("P3 checked"))
            .collect();
        let order = OrderRelation::from_leq(n, carrier.zero(), one, |x, y| {
            (0..n).any(|z| plus.get(x, z) == Some(y))
        })
        .map_err(BuildError::InducedOrder)?;
        // Divisibility is two-sided (lemma clause ix); the right-divisibility
        // relation above must agree with left divisibility.
        for x in 0..n {
            for y in 0..n {
                let left = (0..n).any(|e| plus.get(e, x) == Some(y));
                if left != order.leq(x, y) {
                    let mut r = Report::new("pseudoeffect axioms");
                    r.fail(
                        AxiomTag::PeaLemma("ix"),
                        alloc::vec![x, y],
                        format!(
                            "left and right divisibility disagree on ({}, {})",
                            carrier.label(x),
                            carrier.label(y)
                        ),
                    );
                    return Err(BuildError::Axioms(r));
                }
            }
        }
        Ok(PseudoEffectAlgebra { carrier, plus, lcomp, rcomp, order })
    }

    /// Cross-checks stored complement maps against the derived ones.
    pub fn from_parts(
        carrier: Carrier,
        plus: PartialBinTable,
        lcomp: &[Elem],
        rcomp: &[Elem],
    ) -> Result<Self, BuildError> {
        let built = Self::from_table(carrier, plus)?;
        for (given, derived) in [(lcomp, &built.lcomp), (rcomp, &built.rcomp)] {
            if given.len() != built.carrier.size() {
                return Err(BuildError::SizeMismatch { carrier: built.carrier.size(), table: given.len() });
            }
            for (x, (&g, &d)) in given.iter().zip(derived.iter()).enumerate() {
                if g != d {
                    return Err(BuildError::CompMismatch { x, derived: d, given: g });
                }
            }
        }
        Ok(built)
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn plus(&self) -> &PartialBinTable {
        &self.plus
    }

    /// The left complement `x-bar` (unique `u` with `u + x = 1`).
    pub fn lcomp(&self, x: Elem) -> Elem {
        self.lcomp[x]
    }

    /// The right complement `x-tilde` (unique `w` with `x + w = 1`).
    pub fn rcomp(&self, x: Elem) -> Elem {
        self.rcomp[x]
    }

    pub fn lcomp_slice(&self) -> &[Elem] {
        &self.lcomp
    }

    pub fn rcomp_slice(&self) -> &[Elem] {
        &self.rcomp
    }

    pub fn induced_order(&self) -> &OrderRelation {
        &self.order
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn is_commutative(&self) -> bool {
        self.plus.is_symmetric()
    }

    /// Checks goodness: `(x-bar + y-bar)-tilde = (x-tilde + y-tilde)-bar`
    /// whenever `x-tilde <= y`.
    pub fn check_good(&self) -> Report {
        let mut report = Report::new("good");
        let n = self.size();
        'outer: for x in 0..n {
            for y in 0..n {
                if !self.order.leq(self.rcomp[x], y) {
                    continue;
                }
                let lhs = self.plus.get(self.lcomp[x], self.lcomp[y]).map(|s| self.rcomp[s]);
                let rhs = self.plus.get(self.rcomp[x], self.rcomp[y]).map(|s| self.lcomp[s]);
                if lhs.is_none() || lhs != rhs {
                    report.fail(
                        AxiomTag::Good,
                        alloc::vec![x, y],
                        format!(
                            "(bar {}+bar {})~ = {} but (~{}+~{})bar = {}",
                            self.carrier.label(x),
                            self.carrier.label(y),
                            lhs.map_or("undefined", |v| self.carrier.label(v)),
                            self.carrier.label(x),
                            self.carrier.label(y),
                            rhs.map_or("undefined", |v| self.carrier.label(v)),
                        ),
                    );
                    break 'outer;
                }
            }
        }
        report
    }

    /// Checks both one-sided monotonicity conditions, reported separately:
    /// shifting on the right under the bar bound, and on the left under the
    /// tilde bound.
    pub fn check_monotonous(&self, mode: MonotonicityMode) -> Result<Report, CheckError> {
        self.check_monotonous_with_limits(mode, ExhaustiveLimits::default())
    }

    pub fn check_monotonous_with_limits(
        &self,
        mode: MonotonicityMode,
        limits: ExhaustiveLimits,
    ) -> Result<Report, CheckError> {
        let mut report = Report::new("pseudoeffect monotonous");
        let right = ShiftCheck {
            order: &self.order,
            carrier: &self.carrier,
            tag: AxiomTag::MonotonousRight,
            bound_of: &|x| self.lcomp[x],
            image: &|x, set| self.plus.image_right(set, x),
            op: "+x",
        };
        let left = ShiftCheck {
            order: &self.order,
            carrier: &self.carrier,
            tag: AxiomTag::MonotonousLeft,
            bound_of: &|x| self.rcomp[x],
            image: &|x, set| self.plus.image_left(x, set),
            op: "x+",
        };
        match mode {
            MonotonicityMode::Exhaustive => {
                right.run_exhaustive(&mut report, limits)?;
                left.run_exhaustive(&mut report, limits)?;
            }
            MonotonicityMode::Sampled { trials, seed } => {
                right.run_sampled(&mut report, trials, seed)?;
                left.run_sampled(&mut report, trials, seed.wrapping_add(1))?;
            }
        }
        Ok(report)
    }

    /// Verifies clauses (i)-(ix) of the pseudoeffect basic-property lemma.
    pub fn check_basic_lemma(&self) -> Report {
        let mut report = Report::new("pseudoeffect basic lemma");
        let n = self.size();
        let c = &self.carrier;
        let ord = &self.order;
        let plus = &self.plus;

        for a in 0..n {
            if self.lcomp[self.rcomp[a]] != a || self.rcomp[self.lcomp[a]] != a {
                report.fail(AxiomTag::PeaLemma("i"), alloc::vec![a], format!("complements of {} are not mutually inverse", c.label(a)));
                break;
            }
        }
        'ii: for a in 0..n {
            for b in ord.up_set(a).iter() {
                if !ord.leq(self.lcomp[b], self.lcomp[a]) || !ord.leq(self.rcomp[b], self.rcomp[a]) {
                    report.fail(AxiomTag::PeaLemma("ii"), alloc::vec![a, b], format!("complements not antitone on ({}, {})", c.label(a), c.label(b)));
                    break 'ii;
                }
            }
        }
        'iii: for a in 0..n {
            for b in 0..n {
                if plus.is_defined(a, b) != ord.leq(a, self.lcomp[b]) {
                    report.fail(AxiomTag::PeaLemma("iii"), alloc::vec![a, b], format!("{}+{} definedness disagrees with {} <= bar {}", c.label(a), c.label(b), c.label(a), c.label(b)));
                    break 'iii;
                }
            }
        }
        'iv: for a in 0..n {
            for b in ord.up_set(a).iter() {
                for z in 0..n {
                    if let Some(bz) = plus.get(b, z) {
                        match plus.get(a, z) {
                            Some(az) if ord.leq(az, bz) => {}
                            _ => {
                                report.fail(AxiomTag::PeaLemma("iv"), alloc::vec![a, b, z], format!("right addition of {} not monotone over {} <= {}", c.label(z), c.label(a), c.label(b)));
                                break 'iv;
                            }
                        }
                    }
                }
            }
        }
        'v: for a in 0..n {
            for b in ord.up_set(a).iter() {
                for z in 0..n {
                    if let Some(zb) = plus.get(z, b) {
                        match plus.get(z, a) {
                            Some(za) if ord.leq(za, zb) => {}
                            _ => {
                                report.fail(AxiomTag::PeaLemma("v"), alloc::vec![a, b, z], format!("left addition of {} not monotone over {} <= {}", c.label(z), c.label(a), c.label(b)));
                                break 'v;
                            }
                        }
                    }
                }
            }
        }
        'vi: for a in 0..n {
            for b in ord.up_set(a).iter() {
                // a + (bar b + a)~  =  (a + b~)bar + a  =  b
                let first = plus
                    .get(self.lcomp[b], a)
                    .and_then(|t| plus.get(a, self.rcomp[t]));
                let second = plus
                    .get(a, self.rcomp[b])
                    .and_then(|t| plus.get(self.lcomp[t], a));
                if first != Some(b) || second != Some(b) {
                    report.fail(AxiomTag::PeaLemma("vi"), alloc::vec![a, b], format!("reconstruction of {} from {} fails", c.label(b), c.label(a)));
                    break 'vi;
                }
            }
        }
        for a in 0..n {
            let z = self.carrier.zero();
            if plus.get(a, z) != Some(a) || plus.get(z, a) != Some(a) {
                report.fail(AxiomTag::PeaLemma("vii"), alloc::vec![a], format!("{}+0 != {}", c.label(a), c.label(a)));
                break;
            }
        }
        {
            let (z, o) = (self.carrier.zero(), self.carrier.one());
            if self.lcomp[z] != o || self.rcomp[z] != o || self.lcomp[o] != z || self.rcomp[o] != z {
                report.fail(AxiomTag::PeaLemma("viii"), alloc::vec![], String::from("complements of 0 and 1 are wrong"));
            }
        }
        'ix: for a in 0..n {
            for b in 0..n {
                let right = (0..n).any(|d| plus.get(a, d) == Some(b));
                let left = (0..n).any(|e| plus.get(e, a) == Some(b));
                if right != left || right != ord.leq(a, b) {
                    report.fail(AxiomTag::PeaLemma("ix"), alloc::vec![a, b], format!("divisibility characterisations disagree on ({}, {})", c.label(a), c.label(b)));
                    break 'ix;
                }
            }
        }
        report
    }

    /// Copy with elements renamed by `perm`; `perm` must fix 0 and 1.
    pub fn permuted(&self, perm: &[Elem]) -> PseudoEffectAlgebra {
        debug_assert_eq!(perm[self.carrier.zero()], self.carrier.zero());
        debug_assert_eq!(perm[self.carrier.one()], self.carrier.one());
        PseudoEffectAlgebra::from_table(self.carrier.clone(), self.plus.permuted(perm))
            .expect("permutation of a verified pseudoeffect algebra")
    }
}

/// Every effect algebra is a pseudoeffect algebra with both complements
/// equal to the supplement.
pub fn embed_commutative(e: &EffectAlgebra) -> PseudoEffectAlgebra {
    PseudoEffectAlgebra::from_table(e.carrier().clone(), e.plus().clone())
        .expect("a commutative table satisfying E1-E4 satisfies P1-P4")
}

/// Inverse of [`embed_commutative`] where it applies: the table must be
/// commutative (equivalently, bar = tilde).
pub fn forget_commutative(p: &PseudoEffectAlgebra) -> Result<EffectAlgebra, BuildError> {
    if !p.is_commutative() {
        let mut r = Report::new("commutative forgetting");
        let (x, y) = (0..p.size())
            .flat_map(|x| (0..p.size()).map(move |y| (x, y)))
            .find(|&(x, y)| p.plus().get(x, y) != p.plus().get(y, x))
            .expect("non-commutative table has an asymmetric pair");
        r.fail(
            AxiomTag::E1,
            alloc::vec![x, y],
            format!("{}+{} != {}+{}", p.carrier().label(x), p.carrier().label(y), p.carrier().label(y), p.carrier().label(x)),
        );
        return Err(BuildError::Axioms(r));
    }
    EffectAlgebra::from_table(p.carrier().clone(), p.plus().clone())
}
