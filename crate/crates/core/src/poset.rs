//! Bounded posets, cone operators and antichain machinery.
//!
//! The cone operators `L` and `U` substitute for meet and join in posets
//! that are not lattices: `L(A)` is the set of common lower bounds of `A`,
//! `U(A)` the set of common upper bounds. The set order `A <= B` holds when
//! every element of `A` is below every element of `B`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::report::{AxiomTag, Report};

/// Index of an element in a [`Carrier`].
pub type Elem = usize;

/// Largest supported carrier size; element sets are single `u64` masks.
pub const MAX_CARRIER: usize = 64;

/// A subset of a carrier, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ElementSet {
    bits: u64,
}

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet { bits: 0 };

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_CARRIER);
        if n == 64 {
            ElementSet { bits: u64::MAX }
        } else {
            ElementSet { bits: (1u64 << n) - 1 }
        }
    }

    pub fn singleton(e: Elem) -> Self {
        ElementSet { bits: 1u64 << e }
    }

    pub fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut s = Self::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }

    pub fn insert(&mut self, e: Elem) {
        debug_assert!(e < MAX_CARRIER);
        self.bits |= 1u64 << e;
    }

    pub fn remove(&mut self, e: Elem) {
        self.bits &= !(1u64 << e);
    }

    pub fn contains(&self, e: Elem) -> bool {
        e < MAX_CARRIER && self.bits >> e & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn union(&self, other: ElementSet) -> ElementSet {
        ElementSet { bits: self.bits | other.bits }
    }

    pub fn intersect(&self, other: ElementSet) -> ElementSet {
        ElementSet { bits: self.bits & other.bits }
    }

    pub fn difference(&self, other: ElementSet) -> ElementSet {
        ElementSet { bits: self.bits & !other.bits }
    }

    pub fn is_subset(&self, other: ElementSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: ElementSet) -> bool {
        self.bits & other.bits == 0
    }

    /// Elements in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        let mut bits = self.bits;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as Elem;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// The sole element of a singleton set.
    pub fn only(&self) -> Option<Elem> {
        if self.len() == 1 {
            Some(self.bits.trailing_zeros() as Elem)
        } else {
            None
        }
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<Elem> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        ElementSet::from_iter(iter)
    }
}

/// Violations detected while validating a carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CarrierDefect {
    Empty,
    TooLarge { size: usize },
    DuplicateLabel { label: String },
    IndexOutOfRange { index: Elem },
    ZeroEqualsOne,
}

impl fmt::Display for CarrierDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CarrierDefect::Empty => write!(f, "carrier has no elements"),
            CarrierDefect::TooLarge { size } => {
                write!(f, "carrier size {size} exceeds the supported maximum {MAX_CARRIER}")
            }
            CarrierDefect::DuplicateLabel { label } => write!(f, "duplicate label `{label}`"),
            CarrierDefect::IndexOutOfRange { index } => write!(f, "element index {index} out of range"),
            CarrierDefect::ZeroEqualsOne => write!(f, "bottom and top must differ on carriers of size >= 2"),
        }
    }
}

impl core::error::Error for CarrierDefect {}

/// An indexed finite set of labelled elements with distinguished bottom and top.
#[derive(Clone, PartialEq, Eq)]
pub struct Carrier {
    labels: Vec<String>,
    zero: Elem,
    one: Elem,
}

impl Carrier {
    pub fn new(labels: Vec<String>, zero: Elem, one: Elem) -> Result<Self, CarrierDefect> {
        let n = labels.len();
        if n == 0 {
            return Err(CarrierDefect::Empty);
        }
        if n > MAX_CARRIER {
            return Err(CarrierDefect::TooLarge { size: n });
        }
        for (i, a) in labels.iter().enumerate() {
            for b in labels.iter().skip(i + 1) {
                if a == b {
                    return Err(CarrierDefect::DuplicateLabel { label: a.clone() });
                }
            }
        }
        if zero >= n {
            return Err(CarrierDefect::IndexOutOfRange { index: zero });
        }
        if one >= n {
            return Err(CarrierDefect::IndexOutOfRange { index: one });
        }
        if n >= 2 && zero == one {
            return Err(CarrierDefect::ZeroEqualsOne);
        }
        Ok(Carrier { labels, zero, one })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size()
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.size())
    }

    /// Renders a set as `{a,b,c}` in carrier index order.
    pub fn set_to_string(&self, set: ElementSet) -> String {
        let mut out = String::from("{");
        for (i, e) in set.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(self.label(e));
        }
        out.push('}');
        out
    }
}

impl fmt::Debug for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Carrier({} elements, 0={}, 1={})", self.size(), self.labels[self.zero], self.labels[self.one])
    }
}

/// Why a relation fails to be a bounded partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderDefect {
    NotReflexive { x: Elem },
    NotAntisymmetric { x: Elem, y: Elem },
    NotTransitive { x: Elem, y: Elem, z: Elem },
    NoBottom { x: Elem },
    NoTop { x: Elem },
}

impl fmt::Display for OrderDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderDefect::NotReflexive { x } => write!(f, "not reflexive at {x}"),
            OrderDefect::NotAntisymmetric { x, y } => write!(f, "antisymmetry fails on ({x},{y})"),
            OrderDefect::NotTransitive { x, y, z } => write!(f, "transitivity fails on ({x},{y},{z})"),
            OrderDefect::NoBottom { x } => write!(f, "bottom is not below {x}"),
            OrderDefect::NoTop { x } => write!(f, "top is not above {x}"),
        }
    }
}

impl core::error::Error for OrderDefect {}

/// A verified bounded partial order with precomputed principal cones.
///
/// Cones of arbitrary sets are intersections of principal ones, which is the
/// hot path of every checker in this crate.
#[derive(Clone, PartialEq, Eq)]
pub struct OrderRelation {
    n: usize,
    zero: Elem,
    one: Elem,
    down: Vec<ElementSet>,
    up: Vec<ElementSet>,
}

impl OrderRelation {
    /// Builds and validates the order from a predicate.
    pub fn from_leq(
        n: usize,
        zero: Elem,
        one: Elem,
        leq: impl Fn(Elem, Elem) -> bool,
    ) -> Result<Self, OrderDefect> {
        let mut up = Vec::with_capacity(n);
        for x in 0..n {
            up.push(ElementSet::from_iter((0..n).filter(|&y| leq(x, y))));
        }
        Self::from_up_rows(up, zero, one)
    }

    /// Builds and validates the order from rows `rows[x] = {y | x <= y}`.
    pub fn from_up_rows(up: Vec<ElementSet>, zero: Elem, one: Elem) -> Result<Self, OrderDefect> {
        let n = up.len();
        let mut down = alloc::vec![ElementSet::EMPTY; n];
        for x in 0..n {
            for y in up[x].iter() {
                down[y].insert(x);
            }
        }
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(OrderDefect::NotReflexive { x });
            }
        }
        for x in 0..n {
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(OrderDefect::NotAntisymmetric { x, y });
                }
                // x <= y: up(y) must be contained in up(x)
                if !up[y].is_subset(up[x]) {
                    let z = up[y].difference(up[x]).iter().next().unwrap();
                    return Err(OrderDefect::NotTransitive { x, y, z });
                }
            }
        }
        for x in 0..n {
            if !up[zero].contains(x) {
                return Err(OrderDefect::NoBottom { x });
            }
            if !up[x].contains(one) {
                return Err(OrderDefect::NoTop { x });
            }
        }
        Ok(OrderRelation { n, zero, one, down, up })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.up[x].contains(y)
    }

    /// Principal down-set `{y | y <= e}`.
    pub fn down_set(&self, e: Elem) -> ElementSet {
        self.down[e]
    }

    /// Principal up-set `{y | e <= y}`.
    pub fn up_set(&self, e: Elem) -> ElementSet {
        self.up[e]
    }

    /// Row view of the relation, `rows[x] = {y | x <= y}`.
    pub fn up_rows(&self) -> &[ElementSet] {
        &self.up
    }

    /// Common lower bounds of `a`; the full carrier when `a` is empty.
    pub fn lower_cone(&self, a: ElementSet) -> ElementSet {
        let mut m = ElementSet::full(self.n);
        for e in a.iter() {
            m = m.intersect(self.down[e]);
        }
        m
    }

    /// Common upper bounds of `a`; the full carrier when `a` is empty.
    pub fn upper_cone(&self, a: ElementSet) -> ElementSet {
        let mut m = ElementSet::full(self.n);
        for e in a.iter() {
            m = m.intersect(self.up[e]);
        }
        m
    }

    /// Set order: every element of `a` is below every element of `b`.
    /// Vacuously true when either set is empty.
    pub fn set_leq(&self, a: ElementSet, b: ElementSet) -> bool {
        a.is_subset(self.lower_cone(b))
    }

    /// Minimal elements of `a`.
    pub fn min_elements(&self, a: ElementSet) -> ElementSet {
        ElementSet::from_iter(a.iter().filter(|&e| self.down[e].intersect(a) == ElementSet::singleton(e)))
    }

    /// Maximal elements of `a`.
    pub fn max_elements(&self, a: ElementSet) -> ElementSet {
        ElementSet::from_iter(a.iter().filter(|&e| self.up[e].intersect(a) == ElementSet::singleton(e)))
    }

    /// Streams every non-empty antichain contained in `within`, each once.
    pub fn antichains(&self, within: ElementSet) -> Antichains<'_> {
        // Linear extension: sort by down-set size (x < y implies a strictly
        // smaller down-set), so comparable pairs are seen in order.
        let mut items: Vec<Elem> = within.iter().collect();
        items.sort_by_key(|&e| (self.down[e].len(), e));
        Antichains { order: self, items, stack: alloc::vec![(ElementSet::EMPTY, 0)] }
    }

    /// Counts antichains within `within`, stopping early at `cap`.
    pub fn count_antichains_capped(&self, within: ElementSet, cap: u64) -> u64 {
        let mut count = 0;
        for _ in self.antichains(within) {
            count += 1;
            if count >= cap {
                break;
            }
        }
        count
    }

    /// Pairs `(lower, upper)` of the covering relation.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in self.up[x].iter() {
                if y == x {
                    continue;
                }
                // strict interval between x and y must be empty
                let between = self.up[x].intersect(self.down[y]);
                if between.len() == 2 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Checks whether every pair has a join and a meet.
    ///
    /// The failure witness names the offending pair together with its set of
    /// minimal upper bounds (or maximal lower bounds).
    pub fn is_lattice(&self, carrier: &Carrier) -> Report {
        let mut report = Report::new("lattice");
        'outer: for x in 0..self.n {
            for y in x + 1..self.n {
                let mub = self.min_elements(self.upper_cone(ElementSet::from_iter([x, y])));
                if mub.len() != 1 {
                    report.fail(
                        AxiomTag::Lattice,
                        alloc::vec![x, y],
                        alloc::format!(
                            "{} and {} have minimal upper bounds {}",
                            carrier.label(x),
                            carrier.label(y),
                            carrier.set_to_string(mub)
                        ),
                    );
                    break 'outer;
                }
                let mlb = self.max_elements(self.lower_cone(ElementSet::from_iter([x, y])));
                if mlb.len() != 1 {
                    report.fail(
                        AxiomTag::Lattice,
                        alloc::vec![x, y],
                        alloc::format!(
                            "{} and {} have maximal lower bounds {}",
                            carrier.label(x),
                            carrier.label(y),
                            carrier.set_to_string(mlb)
                        ),
                    );
                    break 'outer;
                }
            }
        }
        report
    }
}

impl fmt::Debug for OrderRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderRelation(n={})", self.n)
    }
}

/// Backtracking stream of non-empty antichains over a fixed linear extension.
pub struct Antichains<'a> {
    order: &'a OrderRelation,
    items: Vec<Elem>,
    stack: Vec<(ElementSet, usize)>,
}

impl Iterator for Antichains<'_> {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        while let Some((chosen, start)) = self.stack.pop() {
            for k in start..self.items.len() {
                let e = self.items[k];
                let comparable = self.order.up_set(e).union(self.order.down_set(e));
                if comparable.intersect(chosen).is_empty() {
                    // resume scanning siblings of `chosen` later
                    self.stack.push((chosen, k + 1));
                    let mut next = chosen;
                    next.insert(e);
                    self.stack.push((next, k + 1));
                    return Some(next);
                }
            }
        }
        None
    }
}

/// Why a map fails to be an involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvolutionDefect {
    WrongLength { expected: usize, found: usize },
    OutOfRange { x: Elem },
    NotInvolutive { x: Elem },
}

impl fmt::Display for InvolutionDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvolutionDefect::WrongLength { expected, found } => {
                write!(f, "map has {found} entries, carrier has {expected}")
            }
            InvolutionDefect::OutOfRange { x } => write!(f, "image of {x} out of range"),
            InvolutionDefect::NotInvolutive { x } => write!(f, "map(map({x})) != {x}"),
        }
    }
}

impl core::error::Error for InvolutionDefect {}

/// A self-inverse bijection on a carrier; with an order, usually antitone.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvolutionMap {
    map: Vec<Elem>,
}

impl InvolutionMap {
    pub fn new(map: Vec<Elem>, n: usize) -> Result<Self, InvolutionDefect> {
        if map.len() != n {
            return Err(InvolutionDefect::WrongLength { expected: n, found: map.len() });
        }
        for (x, &y) in map.iter().enumerate() {
            if y >= n {
                return Err(InvolutionDefect::OutOfRange { x });
            }
        }
        for (x, &y) in map.iter().enumerate() {
            if map[y] != x {
                return Err(InvolutionDefect::NotInvolutive { x });
            }
        }
        Ok(InvolutionMap { map })
    }

    pub fn apply(&self, e: Elem) -> Elem {
        self.map[e]
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.map
    }

    /// Elementwise image of a set.
    pub fn image(&self, set: ElementSet) -> ElementSet {
        ElementSet::from_iter(set.iter().map(|e| self.map[e]))
    }

    /// First pair `x <= y` whose images violate antitonicity, if any.
    pub fn antitone_witness(&self, order: &OrderRelation) -> Option<(Elem, Elem)> {
        for x in 0..self.map.len() {
            for y in order.up_set(x).iter() {
                if !order.leq(self.map[y], self.map[x]) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use alloc::vec::Vec;

    fn chain(k: usize) -> OrderRelation {
        OrderRelation::from_leq(k, 0, k - 1, |x, y| x <= y).unwrap()
    }

    /// The poset of Example 1: 0 < a,b,c; b < d; a,b < e; a,c,d < f; b,c < g; e,f,g < 1.
    pub(crate) fn example1_order() -> OrderRelation {
        // indices: 0 a b c d e f g 1
        let le: &[(usize, usize)] = &[
            (1, 5),
            (1, 6),
            (2, 4),
            (2, 5),
            (2, 6),
            (2, 7),
            (3, 6),
            (3, 7),
            (4, 6),
        ];
        OrderRelation::from_leq(9, 0, 8, |x, y| {
            x == y
                || x == 0
                || y == 8
                || le.contains(&(x, y))
        })
        .unwrap()
    }

    fn s(elems: &[Elem]) -> ElementSet {
        ElementSet::from_iter(elems.iter().copied())
    }

    #[test]
    fn element_set_basics() {
        let mut a = ElementSet::EMPTY;
        assert!(a.is_empty());
        a.insert(3);
        a.insert(0);
        assert_eq!(a.len(), 2);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 3]);
        assert!(a.contains(3) && !a.contains(1));
        assert_eq!(ElementSet::full(3), s(&[0, 1, 2]));
        assert_eq!(ElementSet::full(64).len(), 64);
        assert_eq!(s(&[1]).only(), Some(1));
        assert_eq!(s(&[1, 2]).only(), None);
    }

    #[test]
    fn carrier_validation() {
        let mk = |labels: &[&str]| labels.iter().map(|l| l.to_string()).collect::<Vec<_>>();
        assert!(Carrier::new(mk(&["0", "a", "1"]), 0, 2).is_ok());
        assert_eq!(
            Carrier::new(mk(&["0", "0"]), 0, 1),
            Err(CarrierDefect::DuplicateLabel { label: "0".to_string() })
        );
        assert_eq!(Carrier::new(mk(&["0", "1"]), 0, 0), Err(CarrierDefect::ZeroEqualsOne));
        assert_eq!(Carrier::new(mk(&["0", "1"]), 0, 5), Err(CarrierDefect::IndexOutOfRange { index: 5 }));
    }

    #[test]
    fn order_validation_catches_defects() {
        // missing reflexivity
        let r = OrderRelation::from_leq(2, 0, 1, |x, y| x == 0 && y == 1);
        assert_eq!(r.unwrap_err(), OrderDefect::NotReflexive { x: 0 });
        // a cycle
        let r = OrderRelation::from_leq(3, 0, 2, |x, y| x == y || (x, y) == (0, 1) || (x, y) == (1, 0));
        assert!(matches!(r.unwrap_err(), OrderDefect::NotAntisymmetric { .. }));
        // missing transitivity
        let r = OrderRelation::from_leq(4, 0, 3, |x, y| {
            x == y || (x, y) == (0, 1) || (x, y) == (1, 3) || (x, y) == (0, 3) || (x, y) == (0, 2)
        });
        assert_eq!(r.unwrap_err(), OrderDefect::NoTop { x: 2 });
    }

    #[test]
    fn cones_on_example1() {
        let p = example1_order();
        // L({e,a}) = {0,a}
        assert_eq!(p.lower_cone(s(&[5, 1])), s(&[0, 1]));
        // U({a,b}) = {e,f,1}
        assert_eq!(p.upper_cone(s(&[1, 2])), s(&[5, 6, 8]));
        // U({a}) = {a,e,f,1}
        assert_eq!(p.upper_cone(s(&[1])), s(&[1, 5, 6, 8]));
        // down-set of 1 is everything
        assert_eq!(p.lower_cone(s(&[8])), ElementSet::full(9));
        // U({0}) is everything
        assert_eq!(p.upper_cone(s(&[0])), ElementSet::full(9));
        // empty set cones are the full carrier
        assert_eq!(p.lower_cone(ElementSet::EMPTY), ElementSet::full(9));
        assert_eq!(p.upper_cone(ElementSet::EMPTY), ElementSet::full(9));
    }

    #[test]
    fn set_leq_on_example1() {
        let p = example1_order();
        assert!(p.set_leq(s(&[0]), ElementSet::full(9)));
        // {a,b} <= {e}
        assert!(p.set_leq(s(&[1, 2]), s(&[5])));
        // {e} <= {f} fails
        assert!(!p.set_leq(s(&[5]), s(&[6])));
        // vacuous on empty sets
        assert!(p.set_leq(ElementSet::EMPTY, s(&[3])));
        assert!(p.set_leq(s(&[3]), ElementSet::EMPTY));
    }

    #[test]
    fn min_max_elements() {
        let p = example1_order();
        assert_eq!(p.min_elements(s(&[2])), s(&[2]));
        // min of {a,e,f} is {a}
        assert_eq!(p.min_elements(s(&[1, 5, 6])), s(&[1]));
        // max of {a,b,e} is {e}
        assert_eq!(p.max_elements(s(&[1, 2, 5])), s(&[5]));
        // {a,b,c} is an antichain: min = max = itself
        assert_eq!(p.min_elements(s(&[1, 2, 3])), s(&[1, 2, 3]));
        assert_eq!(p.max_elements(s(&[1, 2, 3])), s(&[1, 2, 3]));
    }

    #[test]
    fn cone_closure_properties() {
        let p = example1_order();
        for bits in 1u64..(1 << 9) {
            let a = ElementSet::from_iter((0..9).filter(|&e| bits >> e & 1 == 1));
            let lu = p.lower_cone(p.upper_cone(a));
            let ul = p.upper_cone(p.lower_cone(a));
            assert!(a.is_subset(lu));
            assert!(a.is_subset(ul));
            assert_eq!(p.lower_cone(a), p.lower_cone(p.min_elements(a)));
            assert_eq!(p.upper_cone(a), p.upper_cone(p.max_elements(a)));
        }
    }

    #[test]
    fn set_leq_characterisations() {
        let p = example1_order();
        for abits in 0u64..(1 << 9) {
            let a = ElementSet::from_iter((0..9).filter(|&e| abits >> e & 1 == 1));
            for bbits in (0u64..(1 << 9)).step_by(7) {
                let b = ElementSet::from_iter((0..9).filter(|&e| bbits >> e & 1 == 1));
                let direct = a.iter().all(|x| b.iter().all(|y| p.leq(x, y)));
                assert_eq!(p.set_leq(a, b), direct);
                assert_eq!(direct, b.is_subset(p.upper_cone(a)));
            }
        }
    }

    #[test]
    fn antichain_stream_matches_bruteforce() {
        let p = example1_order();
        for within in [ElementSet::full(9), s(&[1, 2, 3]), s(&[0, 4, 5, 6, 7]), s(&[2])] {
            let mut streamed: Vec<ElementSet> = p.antichains(within).collect();
            let mut brute = Vec::new();
            for bits in 1u64..(1 << 9) {
                let cand = ElementSet::from_iter((0..9).filter(|&e| bits >> e & 1 == 1));
                if !cand.is_subset(within) {
                    continue;
                }
                let ok = cand
                    .iter()
                    .all(|x| cand.iter().all(|y| x == y || (!p.leq(x, y) && !p.leq(y, x))));
                if ok {
                    brute.push(cand);
                }
            }
            streamed.sort();
            brute.sort();
            assert_eq!(streamed, brute, "within {within:?}");
            // exactly once each
            streamed.dedup();
            assert_eq!(streamed.len(), brute.len());
        }
    }

    #[test]
    fn antichains_of_chain_are_singletons() {
        let p = chain(5);
        let all: Vec<_> = p.antichains(ElementSet::full(5)).collect();
        assert_eq!(all.len(), 5);
        assert!(all.iter().all(|a| a.len() == 1));
    }

    #[test]
    fn antichain_count_capped() {
        let p = example1_order();
        let full = p.count_antichains_capped(ElementSet::full(9), u64::MAX);
        assert!(full > 9);
        assert_eq!(p.count_antichains_capped(ElementSet::full(9), 5), 5);
    }

    #[test]
    fn lattice_detection() {
        let two = chain(2);
        let c = Carrier::new(vec!["0".into(), "1".into()], 0, 1).unwrap();
        assert!(two.is_lattice(&c).passed());

        let p = example1_order();
        let labels: Vec<_> = ["0", "a", "b", "c", "d", "e", "f", "g", "1"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let c = Carrier::new(labels, 0, 8).unwrap();
        let rep = p.is_lattice(&c);
        assert!(!rep.passed());
        let failure = &rep.failures()[0];
        // witness pair {a,b} with minimal upper bounds {e,f}
        assert_eq!(failure.tuple, vec![1, 2]);
        assert!(failure.witness.contains("{e,f}"));
    }

    #[test]
    fn covers_of_example1() {
        let p = example1_order();
        let mut cov = p.covers();
        cov.sort();
        // 0 is covered by a,b,c; 1 covers e,f,g; d sits between b and f
        assert!(cov.contains(&(0, 1)) && cov.contains(&(0, 2)) && cov.contains(&(0, 3)));
        assert!(cov.contains(&(2, 4)) && cov.contains(&(4, 6)));
        assert!(!cov.contains(&(2, 6)), "b < f is not a cover");
        assert!(cov.contains(&(5, 8)) && cov.contains(&(6, 8)) && cov.contains(&(7, 8)));
    }

    #[test]
    fn involution_validation_and_antitone() {
        let p = example1_order();
        // the supplement of Example 1
        let comp = InvolutionMap::new(vec![8, 7, 6, 5, 4, 3, 2, 1, 0], 9).unwrap();
        assert_eq!(comp.antitone_witness(&p), None);
        // complement maps lower cones to upper cones of the image
        for bits in 1u64..(1 << 9) {
            let a = ElementSet::from_iter((0..9).filter(|&e| bits >> e & 1 == 1));
            assert_eq!(comp.image(p.lower_cone(a)), p.upper_cone(comp.image(a)));
        }
        // a non-involutive map
        assert!(InvolutionMap::new(vec![1, 2, 0], 3).is_err());
        // identity is an involution but not antitone on a chain of 3
        let id = InvolutionMap::new(vec![0, 1, 2], 3).unwrap();
        assert_eq!(id.antitone_witness(&chain(3)), Some((0, 1)));
    }
}
