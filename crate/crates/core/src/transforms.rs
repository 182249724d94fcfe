//! The four constructions between quantum structures and residuated posets,
//! the round-trip comparisons, and structure equality/isomorphism testing.
//!
//! From an effect algebra: `x.y := (x'+y')'` iff `x' <= y`, and
//! `x -> y := x' + L(x,y)` elementwise. From a pseudoeffect algebra the two
//! arrows split into `bar x + L(x,y)` and `L(x,y) + ~x`. The converse
//! constructions recover the addition from the multiplication; on suitable
//! inputs the round trips are the identity, cell for cell.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::effect::EffectAlgebra;
use crate::poset::{Elem, ElementSet};
use crate::pseudo::PseudoEffectAlgebra;
use crate::report::{AxiomTag, Report};
use crate::residuation::{CommUnsharpResiduatedPoset, UnsharpResiduatedPoset};
use crate::tables::{PartialBinTable, SetValuedBinTable};

/// Failure of a converse construction on input that was presumed verified:
/// either a theorem-level violation or an unverified assumption upstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremViolation {
    pub stage: &'static str,
    pub detail: String,
}

impl core::fmt::Display for TheoremViolation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "theorem violation in {}: {}", self.stage, self.detail)
    }
}

impl core::error::Error for TheoremViolation {}

/// Builds the commutative unsharp residuated poset of an effect algebra.
///
/// Total on verified effect algebras. Whether the result satisfies
/// (C1)-(C4) is exactly the monotonicity theorem; callers that need the
/// guarantee re-run the checker.
pub fn ea_to_curp(e: &EffectAlgebra) -> CommUnsharpResiduatedPoset {
    let n = e.size();
    let ord = e.induced_order();
    let mut odot = PartialBinTable::new_undefined(n);
    let mut arrow = SetValuedBinTable::new_empty(n);
    for x in 0..n {
        for y in 0..n {
            if ord.leq(e.comp(x), y) {
                let sum = e
                    .plus()
                    .get(e.comp(x), e.comp(y))
                    .expect("x' <= y makes x'+y' defined");
                odot.set(x, y, Some(e.comp(sum)));
            }
            let l = ord.down_set(x).intersect(ord.down_set(y));
            let image = e
                .plus()
                .image_left(e.comp(x), l)
                .expect("u <= x makes x'+u defined");
            arrow.set(x, y, image);
        }
    }
    CommUnsharpResiduatedPoset::new(
        e.carrier().clone(),
        ord.up_rows().to_vec(),
        e.comp_map().as_slice().to_vec(),
        odot,
        arrow,
    )
    .expect("tables constructed to shape")
}

/// Recovers an effect algebra from a commutative unsharp residuated poset:
/// `x + y := (x'.y')'` iff `x <= y'`.
///
/// On a verified input the result passes (E1)-(E4) and its induced order
/// coincides with the stored one; any failure is a theorem violation.
pub fn curp_to_ea(c: &CommUnsharpResiduatedPoset) -> Result<EffectAlgebra, TheoremViolation> {
    let ord = c
        .order()
        .map_err(|d| TheoremViolation { stage: "curp-to-effect", detail: format!("input order invalid: {d}") })?;
    let n = c.size();
    let mut plus = PartialBinTable::new_undefined(n);
    for x in 0..n {
        for y in 0..n {
            if ord.leq(x, c.comp(y)) {
                let prod = c.odot().get(c.comp(x), c.comp(y)).ok_or(TheoremViolation {
                    stage: "curp-to-effect",
                    detail: format!("x'.y' undefined for x={x}, y={y} although x <= y'"),
                })?;
                plus.set(x, y, Some(c.comp(prod)));
            }
        }
    }
    let e = EffectAlgebra::from_table(c.carrier().clone(), plus)
        .map_err(|err| TheoremViolation { stage: "curp-to-effect", detail: format!("{err}") })?;
    if e.induced_order().up_rows() != c.leq_rows() {
        let (x, diff) = first_row_difference(e.induced_order().up_rows(), c.leq_rows());
        return Err(TheoremViolation {
            stage: "curp-to-effect",
            detail: format!("induced order differs from the stored order at {x}: {diff:?}"),
        });
    }
    Ok(e)
}

/// Builds the unsharp residuated poset of a pseudoeffect algebra:
/// `x.y := (bar x + bar y)~` iff `~x <= y`, `x -> y := bar x + L(x,y)`,
/// `x ~> y := L(x,y) + ~x`.
pub fn pea_to_urp(p: &PseudoEffectAlgebra) -> UnsharpResiduatedPoset {
    let n = p.size();
    let ord = p.induced_order();
    let mut odot = PartialBinTable::new_undefined(n);
    let mut arrow = SetValuedBinTable::new_empty(n);
    let mut squiggle = SetValuedBinTable::new_empty(n);
    for x in 0..n {
        for y in 0..n {
            if ord.leq(p.rcomp(x), y) {
                let sum = p
                    .plus()
                    .get(p.lcomp(x), p.lcomp(y))
                    .expect("~x <= y makes bar x + bar y defined");
                odot.set(x, y, Some(p.rcomp(sum)));
            }
            let l = ord.down_set(x).intersect(ord.down_set(y));
            let right = p
                .plus()
                .image_left(p.lcomp(x), l)
                .expect("u <= x makes bar x + u defined");
            arrow.set(x, y, right);
            let left = p
                .plus()
                .image_right(l, p.rcomp(x))
                .expect("u <= x makes u + ~x defined");
            squiggle.set(x, y, left);
        }
    }
    UnsharpResiduatedPoset::new(
        p.carrier().clone(),
        ord.up_rows().to_vec(),
        p.lcomp_slice().to_vec(),
        p.rcomp_slice().to_vec(),
        odot,
        arrow,
        squiggle,
    )
    .expect("tables constructed to shape")
}

/// Recovers a pseudoeffect algebra from an unsharp residuated poset:
/// `x + y := (bar x . bar y)~` iff `x <= bar y`.
///
/// On a verified input the result is a good pseudoeffect algebra whose
/// induced order coincides with the stored one.
pub fn urp_to_pea(r: &UnsharpResiduatedPoset) -> Result<PseudoEffectAlgebra, TheoremViolation> {
    let ord = r
        .order()
        .map_err(|d| TheoremViolation { stage: "urp-to-pea", detail: format!("input order invalid: {d}") })?;
    let n = r.size();
    let mut plus = PartialBinTable::new_undefined(n);
    for x in 0..n {
        for y in 0..n {
            if ord.leq(x, r.lcomp(y)) {
                let prod = r.odot().get(r.lcomp(x), r.lcomp(y)).ok_or(TheoremViolation {
                    stage: "urp-to-pea",
                    detail: format!("bar x . bar y undefined for x={x}, y={y} although x <= bar y"),
                })?;
                plus.set(x, y, Some(r.rcomp(prod)));
            }
        }
    }
    let p = PseudoEffectAlgebra::from_table(r.carrier().clone(), plus)
        .map_err(|err| TheoremViolation { stage: "urp-to-pea", detail: format!("{err}") })?;
    let good = p.check_good();
    if !good.passed() {
        return Err(TheoremViolation {
            stage: "urp-to-pea",
            detail: format!("output is not good: {good}"),
        });
    }
    if p.induced_order().up_rows() != r.leq_rows() {
        let (x, diff) = first_row_difference(p.induced_order().up_rows(), r.leq_rows());
        return Err(TheoremViolation {
            stage: "urp-to-pea",
            detail: format!("induced order differs from the stored order at {x}: {diff:?}"),
        });
    }
    Ok(p)
}

fn first_row_difference(a: &[ElementSet], b: &[ElementSet]) -> (usize, (ElementSet, ElementSet)) {
    for (x, (ra, rb)) in a.iter().zip(b.iter()).enumerate() {
        if ra != rb {
            return (x, (*ra, *rb));
        }
    }
    (0, (ElementSet::EMPTY, ElementSet::EMPTY))
}

/// Round trip effect -> curp -> effect, compared by literal table equality
/// on the same carrier (not isomorphism).
pub fn roundtrip_ea(e: &EffectAlgebra) -> Report {
    let mut report = Report::new("round trip (effect)");
    let curp = ea_to_curp(e);
    match curp_to_ea(&curp) {
        Ok(back) => compare_tables(&mut report, e.carrier(), e.plus(), back.plus()),
        Err(v) => report.fail(AxiomTag::TheoremViolation(v.stage), Vec::new(), v.detail),
    }
    report
}

/// Round trip pea -> urp -> pea, literal table equality.
pub fn roundtrip_pea(p: &PseudoEffectAlgebra) -> Report {
    let mut report = Report::new("round trip (pseudoeffect)");
    let urp = pea_to_urp(p);
    match urp_to_pea(&urp) {
        Ok(back) => compare_tables(&mut report, p.carrier(), p.plus(), back.plus()),
        Err(v) => report.fail(AxiomTag::TheoremViolation(v.stage), Vec::new(), v.detail),
    }
    report
}

fn compare_tables(
    report: &mut Report,
    carrier: &crate::poset::Carrier,
    original: &PartialBinTable,
    reconstructed: &PartialBinTable,
) {
    for x in 0..original.size() {
        for y in 0..original.size() {
            let (a, b) = (original.get(x, y), reconstructed.get(x, y));
            if a != b {
                report.fail(
                    AxiomTag::RoundTrip,
                    alloc::vec![x, y],
                    format!(
                        "cell ({}, {}): original {} reconstructed {}",
                        carrier.label(x),
                        carrier.label(y),
                        a.map_or("-", |v| carrier.label(v)),
                        b.map_or("-", |v| carrier.label(v)),
                    ),
                );
                return;
            }
        }
    }
}

/// Borrowed view over any of the four structure kinds.
#[derive(Clone, Copy)]
pub enum StructureRef<'a> {
    Effect(&'a EffectAlgebra),
    Pseudo(&'a PseudoEffectAlgebra),
    Curp(&'a CommUnsharpResiduatedPoset),
    Urp(&'a UnsharpResiduatedPoset),
}

impl StructureRef<'_> {
    pub fn kind_name(&self) -> &'static str {
        match self {
            StructureRef::Effect(_) => "effect",
            StructureRef::Pseudo(_) => "pea",
            StructureRef::Curp(_) => "curp",
            StructureRef::Urp(_) => "urp",
        }
    }

    fn view(&self) -> TableView<'_> {
        match self {
            StructureRef::Effect(e) => TableView {
                n: e.size(),
                zero: e.carrier().zero(),
                one: e.carrier().one(),
                partials: alloc::vec![e.plus()],
                maps: alloc::vec![e.comp_map().as_slice()],
                sets: Vec::new(),
                relations: Vec::new(),
            },
            StructureRef::Pseudo(p) => TableView {
                n: p.size(),
                zero: p.carrier().zero(),
                one: p.carrier().one(),
                partials: alloc::vec![p.plus()],
                maps: alloc::vec![p.lcomp_slice(), p.rcomp_slice()],
                sets: Vec::new(),
                relations: Vec::new(),
            },
            StructureRef::Curp(c) => TableView {
                n: c.size(),
                zero: c.carrier().zero(),
                one: c.carrier().one(),
                partials: alloc::vec![c.odot()],
                maps: alloc::vec![c.comp_slice()],
                sets: alloc::vec![c.arrow()],
                relations: alloc::vec![c.leq_rows()],
            },
            StructureRef::Urp(r) => TableView {
                n: r.size(),
                zero: r.carrier().zero(),
                one: r.carrier().one(),
                partials: alloc::vec![r.odot()],
                maps: alloc::vec![r.lcomp_slice(), r.rcomp_slice()],
                sets: alloc::vec![r.arrow(), r.squiggle()],
                relations: alloc::vec![r.leq_rows()],
            },
        }
    }
}

/// The two sides of a comparison have different kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KindMismatch {
    pub left: &'static str,
    pub right: &'static str,
}

impl core::fmt::Display for KindMismatch {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "cannot compare a {} with a {}", self.left, self.right)
    }
}

impl core::error::Error for KindMismatch {}

struct TableView<'a> {
    n: usize,
    zero: Elem,
    one: Elem,
    partials: Vec<&'a PartialBinTable>,
    maps: Vec<&'a [Elem]>,
    sets: Vec<&'a SetValuedBinTable>,
    relations: Vec<&'a [ElementSet]>,
}

impl TableView<'_> {
    /// Does `perm` (indexed by left elements) carry self onto `other`?
    fn maps_onto(&self, other: &TableView<'_>, perm: &[Elem]) -> bool {
        let n = self.n;
        for (ta, tb) in self.partials.iter().zip(other.partials.iter()) {
            for x in 0..n {
                for y in 0..n {
                    if ta.get(x, y).map(|v| perm[v]) != tb.get(perm[x], perm[y]) {
                        return false;
                    }
                }
            }
        }
        for (ma, mb) in self.maps.iter().zip(other.maps.iter()) {
            for x in 0..n {
                if perm[ma[x]] != mb[perm[x]] {
                    return false;
                }
            }
        }
        for (sa, sb) in self.sets.iter().zip(other.sets.iter()) {
            for x in 0..n {
                for y in 0..n {
                    let image = ElementSet::from_iter(sa.get(x, y).iter().map(|e| perm[e]));
                    if image != sb.get(perm[x], perm[y]) {
                        return false;
                    }
                }
            }
        }
        for (ra, rb) in self.relations.iter().zip(other.relations.iter()) {
            for x in 0..n {
                let image = ElementSet::from_iter(ra[x].iter().map(|e| perm[e]));
                if image != rb[perm[x]] {
                    return false;
                }
            }
        }
        true
    }
}

/// Cellwise equality of two structures of the same kind (labels included).
pub fn structures_equal(a: StructureRef<'_>, b: StructureRef<'_>) -> Result<bool, KindMismatch> {
    match (a, b) {
        (StructureRef::Effect(x), StructureRef::Effect(y)) => Ok(x == y),
        (StructureRef::Pseudo(x), StructureRef::Pseudo(y)) => Ok(x == y),
        (StructureRef::Curp(x), StructureRef::Curp(y)) => Ok(x == y),
        (StructureRef::Urp(x), StructureRef::Urp(y)) => Ok(x == y),
        _ => Err(KindMismatch { left: a.kind_name(), right: b.kind_name() }),
    }
}

/// A label-forgetting bijection witnessing isomorphism; maps left indices
/// to right indices, preserving all operations and constants both ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub map: Vec<Elem>,
}

/// Backtracking search for an isomorphism fixing bottom and top.
pub fn find_isomorphism(
    a: StructureRef<'_>,
    b: StructureRef<'_>,
) -> Result<Option<IsoWitness>, KindMismatch> {
    match (a, b) {
        (StructureRef::Effect(_), StructureRef::Effect(_))
        | (StructureRef::Pseudo(_), StructureRef::Pseudo(_))
        | (StructureRef::Curp(_), StructureRef::Curp(_))
        | (StructureRef::Urp(_), StructureRef::Urp(_)) => {}
        _ => return Err(KindMismatch { left: a.kind_name(), right: b.kind_name() }),
    }
    let va = a.view();
    let vb = b.view();
    if va.n != vb.n {
        return Ok(None);
    }
    let n = va.n;
    let inner_a: Vec<Elem> = (0..n).filter(|&e| e != va.zero && e != va.one).collect();
    let inner_b: Vec<Elem> = (0..n).filter(|&e| e != vb.zero && e != vb.one).collect();
    let mut perm = alloc::vec![0usize; n];
    perm[va.zero] = vb.zero;
    perm[va.one] = vb.one;
    let mut assignment: Vec<Elem> = inner_b.clone();
    let found = for_each_permutation(&mut assignment, &mut |candidate| {
        for (ia, ib) in inner_a.iter().zip(candidate.iter()) {
            perm[*ia] = *ib;
        }
        va.maps_onto(&vb, &perm)
    });
    if found {
        Ok(Some(IsoWitness { map: perm }))
    } else {
        Ok(None)
    }
}

/// Heap's algorithm; stops and returns true when `f` accepts a permutation.
fn for_each_permutation(items: &mut [Elem], f: &mut dyn FnMut(&[Elem]) -> bool) -> bool {
    fn rec(k: usize, items: &mut [Elem], f: &mut dyn FnMut(&[Elem]) -> bool) -> bool {
        if k <= 1 {
            return f(items);
        }
        for i in 0..k {
            if rec(k - 1, items, f) {
                return true;
            }
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
        false
    }
    let k = items.len();
    rec(k, items, f)
}
