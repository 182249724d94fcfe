//! Exhaustive, isomorphism-free enumeration of small effect and
//! pseudoeffect algebras, with classification by the named predicates.
//!
//! Tables are generated by backtracking over the inner cells with axiom
//! propagation (forced zero row, at most one supplement per row/column,
//! cancellation as value distinctness). Canonical form is the
//! lexicographically minimal table over all permutations fixing 0 and 1;
//! partial tables whose completed row prefix is beaten by a permutation are
//! pruned, and only canonical completions are emitted.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::effect::{EffectAlgebra, ExhaustiveLimits, MonotonicityMode};
use crate::poset::{Carrier, Elem};
use crate::pseudo::PseudoEffectAlgebra;
use crate::rng::SplitMix64;
use crate::tables::PartialBinTable;

/// Which family of structures to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    Effect,
    Pseudoeffect,
}

impl StructureKind {
    /// Largest order the enumerator accepts by default.
    pub fn default_max_order(self) -> usize {
        match self {
            StructureKind::Effect => 7,
            StructureKind::Pseudoeffect => 6,
        }
    }
}

/// Classification predicates available for census grouping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Predicate {
    Monotonous,
    LatticeOrdered,
    Good,
    Commutative,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::Monotonous => "monotonous",
            Predicate::LatticeOrdered => "lattice_ordered",
            Predicate::Good => "good",
            Predicate::Commutative => "commutative",
        }
    }

    pub fn applies_to(self, kind: StructureKind) -> bool {
        match self {
            Predicate::Monotonous | Predicate::LatticeOrdered => true,
            Predicate::Good | Predicate::Commutative => kind == StructureKind::Pseudoeffect,
        }
    }
}

/// Evaluated predicate values for one enumerated structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PredicateFlags {
    pub monotonous: bool,
    pub lattice_ordered: bool,
    /// `None` on effect algebras, where goodness is not a distinction.
    pub good: Option<bool>,
    pub commutative: Option<bool>,
}

impl PredicateFlags {
    pub fn get(&self, p: Predicate) -> Option<bool> {
        match p {
            Predicate::Monotonous => Some(self.monotonous),
            Predicate::LatticeOrdered => Some(self.lattice_ordered),
            Predicate::Good => self.good,
            Predicate::Commutative => self.commutative,
        }
    }
}

/// Requested predicate values for witness searches; `None` entries are
/// unconstrained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PredicateProfile {
    pub monotonous: Option<bool>,
    pub lattice_ordered: Option<bool>,
    pub good: Option<bool>,
    pub commutative: Option<bool>,
}

impl PredicateProfile {
    pub fn matches(&self, flags: &PredicateFlags) -> bool {
        let ok = |want: Option<bool>, have: Option<bool>| match want {
            None => true,
            Some(w) => have == Some(w),
        };
        ok(self.monotonous, Some(flags.monotonous))
            && ok(self.lattice_ordered, Some(flags.lattice_ordered))
            && ok(self.good, flags.good)
            && ok(self.commutative, flags.commutative)
    }
}

/// An enumerated structure of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumeratedStructure {
    Effect(EffectAlgebra),
    Pseudo(PseudoEffectAlgebra),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedStructure {
    pub structure: EnumeratedStructure,
    pub flags: PredicateFlags,
}

/// Node budget for a search; `None` is unlimited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchLimits {
    pub max_nodes: Option<u64>,
}

/// What to enumerate and under which budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub order: usize,
    pub kind: StructureKind,
    /// Predicates to group by in census output; non-applicable ones are
    /// dropped. Defaults to all applicable predicates.
    pub predicates: Vec<Predicate>,
    pub limits: SearchLimits,
    /// Raises the per-kind default order cap when explicitly set.
    pub max_order_override: Option<usize>,
}

impl SearchSpec {
    pub fn new(order: usize, kind: StructureKind) -> Self {
        let predicates = [Predicate::Monotonous, Predicate::LatticeOrdered, Predicate::Good, Predicate::Commutative]
            .into_iter()
            .filter(|p| p.applies_to(kind))
            .collect();
        SearchSpec { order, kind, predicates, limits: SearchLimits::default(), max_order_override: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumError {
    OrderTooSmall { order: usize },
    OrderTooLarge { order: usize, max: usize },
    /// `find_witness` ran out of nodes before settling the question.
    Budget { nodes: u64 },
}

impl core::fmt::Display for EnumError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EnumError::OrderTooSmall { order } => write!(f, "order {order} is below 2"),
            EnumError::OrderTooLarge { order, max } => {
                write!(f, "order {order} exceeds the configured maximum {max}")
            }
            EnumError::Budget { nodes } => write!(f, "node budget exhausted after {nodes} nodes"),
        }
    }
}

impl core::error::Error for EnumError {}

/// Census of one (order, kind) cell: total up to isomorphism, per-predicate
/// counts, and the canonical representatives themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub order: usize,
    pub kind: StructureKind,
    pub total: u64,
    /// False when the node budget cut the search short.
    pub complete: bool,
    pub nodes_visited: u64,
    pub representatives: Vec<ClassifiedStructure>,
}

impl CensusRow {
    pub fn count_matching(&self, profile: &PredicateProfile) -> u64 {
        self.representatives.iter().filter(|r| profile.matches(&r.flags)).count() as u64
    }

    /// Counts per combination of the given predicates, in lexicographic
    /// order of the (true-first) value vectors.
    pub fn profile_counts(&self, predicates: &[Predicate]) -> Vec<(Vec<(Predicate, bool)>, u64)> {
        let preds: Vec<Predicate> =
            predicates.iter().copied().filter(|p| p.applies_to(self.kind)).collect();
        let mut out = Vec::new();
        let combos = 1usize << preds.len();
        for bits in 0..combos {
            let combo: Vec<(Predicate, bool)> = preds
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, bits >> i & 1 == 0))
                .collect();
            let count = self
                .representatives
                .iter()
                .filter(|r| combo.iter().all(|&(p, v)| r.flags.get(p) == Some(v)))
                .count() as u64;
            out.push((combo, count));
        }
        out
    }
}

/// Enumerates all structures of the given order up to isomorphism.
///
/// Deterministic for a fixed spec; every emitted structure has passed the
/// full axiom checker, and emitted tables are canonical forms, so no two
/// are isomorphic.
pub fn enumerate_structures(spec: &SearchSpec) -> Result<CensusRow, EnumError> {
    let mut gen = Generator::new(spec)?;
    gen.run(&mut |_| SearchStep::Continue);
    Ok(CensusRow {
        order: spec.order,
        kind: spec.kind,
        total: gen.results.len() as u64,
        complete: gen.complete,
        nodes_visited: gen.nodes,
        representatives: gen.results,
    })
}

/// First canonical structure matching the profile, if any.
pub fn find_witness(
    spec: &SearchSpec,
    profile: &PredicateProfile,
) -> Result<Option<ClassifiedStructure>, EnumError> {
    let mut gen = Generator::new(spec)?;
    let mut found = None;
    gen.run(&mut |candidate| {
        if profile.matches(&candidate.flags) {
            found = Some(candidate.clone());
            SearchStep::Stop
        } else {
            SearchStep::Continue
        }
    });
    match found {
        Some(c) => Ok(Some(c)),
        None if gen.complete => Ok(None),
        None => Err(EnumError::Budget { nodes: gen.nodes }),
    }
}

/// Pseudo-random valid effect algebras of the given order, for
/// property-testing at sizes where exhaustive enumeration is pointless.
///
/// Each dive randomises the branching order under a seeded generator;
/// samples are valid but not canonical and may repeat up to isomorphism.
pub fn sample_effect_algebras(order: usize, count: usize, seed: u64) -> Result<Vec<EffectAlgebra>, EnumError> {
    if order < 2 {
        return Err(EnumError::OrderTooSmall { order });
    }
    let spec = SearchSpec {
        order,
        kind: StructureKind::Effect,
        predicates: Vec::new(),
        limits: SearchLimits { max_nodes: Some(200_000) },
        max_order_override: Some(order),
    };
    let mut out = Vec::with_capacity(count);
    let mut dive_seed = seed;
    while out.len() < count {
        let mut gen = Generator::new(&spec)?;
        gen.randomise = Some(SplitMix64::new(dive_seed));
        gen.check_canonical = false;
        let mut first = None;
        gen.run(&mut |candidate| {
            first = Some(candidate.clone());
            SearchStep::Stop
        });
        if let Some(c) = first {
            match c.structure {
                EnumeratedStructure::Effect(e) => out.push(e),
                EnumeratedStructure::Pseudo(_) => unreachable!("effect spec"),
            }
        }
        dive_seed = dive_seed.wrapping_add(0x9E37_79B9);
    }
    Ok(out)
}

enum SearchStep {
    Continue,
    Stop,
}

/// Backtracking table generator shared by census, witness search and
/// sampling.
struct Generator {
    n: usize,
    one: Elem,
    kind: StructureKind,
    carrier: Carrier,
    /// Inner cells in fill order; for effect algebras only the upper
    /// triangle, mirrored on assignment.
    cells: Vec<(Elem, Elem)>,
    table: PartialBinTable,
    /// Full-carrier permutations fixing 0 and 1, for canonicity tests.
    perms: Vec<Vec<Elem>>,
    max_nodes: Option<u64>,
    nodes: u64,
    complete: bool,
    stopped: bool,
    check_canonical: bool,
    randomise: Option<SplitMix64>,
    results: Vec<ClassifiedStructure>,
}

impl Generator {
    fn new(spec: &SearchSpec) -> Result<Self, EnumError> {
        let n = spec.order;
        if n < 2 {
            return Err(EnumError::OrderTooSmall { order: n });
        }
        let max = spec.max_order_override.unwrap_or(spec.kind.default_max_order());
        if n > max {
            return Err(EnumError::OrderTooLarge { order: n, max });
        }
        let labels = enumeration_labels(n);
        let carrier = Carrier::new(labels, 0, n - 1).expect("generated labels are distinct");
        let mut table = PartialBinTable::new_undefined(n);
        // a+0 = 0+a = a is a theorem; forcing the zero row and column first
        // gives the largest forced substructure.
        for j in 0..n {
            table.set(0, j, Some(j));
            table.set(j, 0, Some(j));
        }
        let mut cells = Vec::new();
        for x in 1..n - 1 {
            for y in 1..n - 1 {
                if spec.kind == StructureKind::Effect && y < x {
                    continue;
                }
                cells.push((x, y));
            }
        }
        Ok(Generator {
            n,
            one: n - 1,
            kind: spec.kind,
            carrier,
            cells,
            table,
            perms: inner_permutations(n),
            max_nodes: spec.limits.max_nodes,
            nodes: 0,
            complete: true,
            stopped: false,
            check_canonical: true,
            randomise: None,
            results: Vec::new(),
        })
    }

    fn run(&mut self, on_emit: &mut dyn FnMut(&ClassifiedStructure) -> SearchStep) {
        self.dfs(0, on_emit);
    }

    fn budget_hit(&mut self) -> bool {
        self.nodes += 1;
        if let Some(max) = self.max_nodes {
            if self.nodes > max {
                self.complete = false;
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, k: usize, on_emit: &mut dyn FnMut(&ClassifiedStructure) -> SearchStep) {
        if self.stopped || self.budget_hit() {
            self.stopped = true;
            return;
        }
        if k == self.cells.len() {
            self.emit(on_emit);
            return;
        }
        let (x, y) = self.cells[k];
        let mut choices: Vec<Option<Elem>> = Vec::with_capacity(self.n);
        choices.push(None);
        for v in 1..self.n {
            if self.value_allowed(x, y, v) {
                choices.push(Some(v));
            }
        }
        if let Some(rng) = self.randomise.as_mut() {
            rng.shuffle(&mut choices);
        }
        for choice in choices {
            self.table.set(x, y, choice);
            if self.kind == StructureKind::Effect {
                self.table.set(y, x, choice);
            }
            if self.cell_consistent(k) {
                self.dfs(k + 1, on_emit);
            }
            if self.stopped {
                break;
            }
        }
        self.table.set(x, y, None);
        if self.kind == StructureKind::Effect {
            self.table.set(y, x, None);
        }
    }

    /// Value exclusions justified by the axioms: `x+y` cannot be `0`, `x`
    /// or `y` (cancellation against `a+0=a`), values repeat in no row or
    /// column (cancellation), and `1` appears at most once per row and
    /// column (uniqueness of the supplements).
    fn value_allowed(&self, x: Elem, y: Elem, v: Elem) -> bool {
        if v == x || v == y {
            return false;
        }
        for j in 0..self.n {
            if j != y && self.table.get(x, j) == Some(v) {
                return false;
            }
            if j != x && self.table.get(j, y) == Some(v) {
                return false;
            }
        }
        if self.kind == StructureKind::Effect && x != y {
            // the mirrored cell (y,x) also lands in row y and column x
            for j in 0..self.n {
                if j != x && self.table.get(y, j) == Some(v) {
                    return false;
                }
                if j != y && self.table.get(j, x) == Some(v) {
                    return false;
                }
            }
        }
        true
    }

    /// Propagation run after assigning cell `k`: supplement existence when a
    /// row completes, then the orderly prune against permutations that
    /// stabilise the completed rows.
    fn cell_consistent(&self, k: usize) -> bool {
        let (x, y) = self.cells[k];
        let row_completed = y == self.n - 2;
        if !row_completed {
            return true;
        }
        // row x is now fully decided: exactly one supplement required
        let ones = (0..self.n).filter(|&j| self.table.get(x, j) == Some(self.one)).count();
        if ones != 1 {
            return false;
        }
        if self.kind == StructureKind::Pseudoeffect && x == self.n - 2 {
            // all rows done: every column needs its supplement too
            for j in 1..self.n - 1 {
                let ones = (0..self.n).filter(|&i| self.table.get(i, j) == Some(self.one)).count();
                if ones != 1 {
                    return false;
                }
            }
        }
        if self.check_canonical && !self.prefix_canonical(x) {
            return false;
        }
        true
    }

    /// True unless some permutation stabilising rows `{0..=r}` maps the
    /// completed prefix to a lexicographically smaller one, in which case no
    /// completion of this table can be canonical.
    fn prefix_canonical(&self, r: usize) -> bool {
        'perm: for perm in &self.perms {
            if (1..=r).any(|i| perm[i] > r) {
                continue; // does not stabilise the filled rows
            }
            // compare enc(perm . T) with enc(T) on rows 0..=r
            for i in 0..=r {
                for j in 0..self.n {
                    let orig = encode(self.table.get(i, j));
                    let src = self.table.get(inverse_at(perm, i), inverse_at(perm, j));
                    let mapped = encode(src.map(|v| perm[v]));
                    if mapped < orig {
                        return false;
                    }
                    if mapped > orig {
                        continue 'perm;
                    }
                }
            }
        }
        true
    }

    fn emit(&mut self, on_emit: &mut dyn FnMut(&ClassifiedStructure) -> SearchStep) {
        let candidate = match self.kind {
            StructureKind::Effect => {
                match EffectAlgebra::from_table(self.carrier.clone(), self.table.clone()) {
                    Ok(e) => {
                        let flags = effect_flags(&e);
                        ClassifiedStructure { structure: EnumeratedStructure::Effect(e), flags }
                    }
                    Err(_) => return, // propagation admits some non-algebras; the checker is the filter
                }
            }
            StructureKind::Pseudoeffect => {
                match PseudoEffectAlgebra::from_table(self.carrier.clone(), self.table.clone()) {
                    Ok(p) => {
                        let flags = pea_flags(&p);
                        ClassifiedStructure { structure: EnumeratedStructure::Pseudo(p), flags }
                    }
                    Err(_) => return,
                }
            }
        };
        self.results.push(candidate);
        if let SearchStep::Stop = on_emit(self.results.last().unwrap()) {
            self.stopped = true;
        }
    }
}

fn encode(cell: Option<Elem>) -> usize {
    match cell {
        None => 0,
        Some(v) => v + 1,
    }
}

fn inverse_at(perm: &[Elem], i: Elem) -> Elem {
    perm.iter().position(|&p| p == i).expect("permutation is total")
}

/// All permutations of the full index range fixing 0 and n-1, identity
/// excluded.
fn inner_permutations(n: usize) -> Vec<Vec<Elem>> {
    let inner: Vec<Elem> = (1..n - 1).collect();
    let mut out = Vec::new();
    let mut current = inner.clone();
    permute_rec(&mut current, 0, &mut |p| {
        let mut full: Vec<Elem> = Vec::with_capacity(n);
        full.push(0);
        full.extend_from_slice(p);
        full.push(n - 1);
        if full.iter().enumerate().any(|(i, &v)| i != v) {
            out.push(full);
        }
    });
    out
}

fn permute_rec(items: &mut [Elem], k: usize, f: &mut dyn FnMut(&[Elem])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_rec(items, k + 1, f);
        items.swap(k, i);
    }
}

fn enumeration_labels(n: usize) -> Vec<String> {
    let mut labels = Vec::with_capacity(n);
    labels.push("0".to_string());
    for i in 1..n - 1 {
        labels.push(((b'a' + (i - 1) as u8) as char).to_string());
    }
    labels.push("1".to_string());
    labels
}

fn effect_flags(e: &EffectAlgebra) -> PredicateFlags {
    let monotonous = e
        .check_monotonous_with_limits(
            MonotonicityMode::Exhaustive,
            ExhaustiveLimits { max_carrier: 16, max_pairs: u64::MAX },
        )
        .map(|r| r.passed())
        .unwrap_or(false);
    PredicateFlags {
        monotonous,
        lattice_ordered: e.induced_order().is_lattice(e.carrier()).passed(),
        good: None,
        commutative: None,
    }
}

fn pea_flags(p: &PseudoEffectAlgebra) -> PredicateFlags {
    let monotonous = p
        .check_monotonous_with_limits(
            MonotonicityMode::Exhaustive,
            ExhaustiveLimits { max_carrier: 16, max_pairs: u64::MAX },
        )
        .map(|r| r.passed())
        .unwrap_or(false);
    PredicateFlags {
        monotonous,
        lattice_ordered: p.induced_order().is_lattice(p.carrier()).passed(),
        good: Some(p.check_good().passed()),
        commutative: Some(p.is_commutative()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::{find_isomorphism, StructureRef};

    fn census(order: usize, kind: StructureKind) -> CensusRow {
        enumerate_structures(&SearchSpec::new(order, kind)).unwrap()
    }

    #[test]
    fn forced_small_orders() {
        for kind in [StructureKind::Effect, StructureKind::Pseudoeffect] {
            assert_eq!(census(2, kind).total, 1);
            assert_eq!(census(3, kind).total, 1);
        }
        // order 2: 0+0=0, 0+1=1+0=1, 1+1 undefined
        let row = census(2, StructureKind::Effect);
        match &row.representatives[0].structure {
            EnumeratedStructure::Effect(e) => {
                assert_eq!(e.plus().get(0, 1), Some(1));
                assert_eq!(e.plus().get(1, 1), None);
            }
            _ => unreachable!(),
        }
        // order 3: a' = a, a+a = 1
        let row = census(3, StructureKind::Effect);
        match &row.representatives[0].structure {
            EnumeratedStructure::Effect(e) => {
                assert_eq!(e.plus().get(1, 1), Some(2));
                assert_eq!(e.comp(1), 1);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn census_is_deterministic() {
        let a = census(5, StructureKind::Effect);
        let b = census(5, StructureKind::Effect);
        assert_eq!(a, b);
    }

    #[test]
    fn no_two_representatives_isomorphic() {
        for kind in [StructureKind::Effect, StructureKind::Pseudoeffect] {
            for order in 2..=5 {
                let row = census(order, kind);
                assert!(row.complete);
                for i in 0..row.representatives.len() {
                    for j in i + 1..row.representatives.len() {
                        let (a, b) = (&row.representatives[i].structure, &row.representatives[j].structure);
                        let iso = match (a, b) {
                            (EnumeratedStructure::Effect(x), EnumeratedStructure::Effect(y)) => {
                                find_isomorphism(StructureRef::Effect(x), StructureRef::Effect(y)).unwrap()
                            }
                            (EnumeratedStructure::Pseudo(x), EnumeratedStructure::Pseudo(y)) => {
                                find_isomorphism(StructureRef::Pseudo(x), StructureRef::Pseudo(y)).unwrap()
                            }
                            _ => unreachable!(),
                        };
                        assert_eq!(iso, None, "order {order}: representatives {i} and {j} isomorphic");
                    }
                }
            }
        }
    }

    #[test]
    fn budget_marks_incomplete() {
        let mut spec = SearchSpec::new(6, StructureKind::Effect);
        spec.limits.max_nodes = Some(50);
        let row = enumerate_structures(&spec).unwrap();
        assert!(!row.complete);
    }

    #[test]
    fn order_limits_enforced() {
        assert!(matches!(
            enumerate_structures(&SearchSpec::new(8, StructureKind::Effect)),
            Err(EnumError::OrderTooLarge { order: 8, max: 7 })
        ));
        assert!(matches!(
            enumerate_structures(&SearchSpec::new(1, StructureKind::Effect)),
            Err(EnumError::OrderTooSmall { order: 1 })
        ));
        let mut spec = SearchSpec::new(7, StructureKind::Pseudoeffect);
        assert!(enumerate_structures(&spec).is_err());
        spec.max_order_override = Some(7);
        spec.limits.max_nodes = Some(10); // just probing the override path
        assert!(enumerate_structures(&spec).is_ok());
    }

    #[test]
    fn witness_search_finds_monotonous_order4() {
        let profile = PredicateProfile { monotonous: Some(true), ..Default::default() };
        let w = find_witness(&SearchSpec::new(4, StructureKind::Effect), &profile).unwrap();
        assert!(w.is_some());
    }

    #[test]
    fn no_noncommutative_pea_below_order_5() {
        let profile = PredicateProfile { commutative: Some(false), ..Default::default() };
        for order in 2..=4 {
            let w = find_witness(&SearchSpec::new(order, StructureKind::Pseudoeffect), &profile).unwrap();
            assert_eq!(w, None, "order {order}");
        }
        let w = find_witness(&SearchSpec::new(5, StructureKind::Pseudoeffect), &profile).unwrap();
        assert!(w.is_some(), "the cyclic pseudoeffect algebra has order 5");
    }

    #[test]
    fn samples_are_valid_and_deterministic() {
        let a = sample_effect_algebras(6, 5, 123).unwrap();
        let b = sample_effect_algebras(6, 5, 123).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
        // from_table inside the generator already verified the axioms;
        // spot-check the induced order exists and is bounded
        for e in &a {
            assert_eq!(e.induced_order().size(), 6);
        }
    }
}
