//! Unsharp residuated posets: the commutative structure (C1)-(C4) and the
//! general one (R1)-(R7), with set-valued arrows and unsharp adjointness.
//!
//! The arrows map pairs to subsets, so residuation terms such as
//! `L(U(x,y') . y) <= UL(y,z)` are everywhere defined even though `.` itself
//! is partial. Kleene equality between partial terms means both sides
//! defined and equal, or both undefined.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::poset::{Carrier, Elem, ElementSet, InvolutionMap, OrderDefect, OrderRelation};
use crate::report::{AxiomTag, CheckError, Report};
use crate::tables::{PartialBinTable, SetValuedBinTable, TableDefect};

/// Shape or range problems in raw residuated-structure tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructDefect {
    Table(TableDefect),
    MapLength { expected: usize, found: usize },
    MapOutOfRange { x: Elem },
    OrderRows { expected: usize, found: usize },
}

impl core::fmt::Display for StructDefect {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            StructDefect::Table(d) => write!(f, "{d}"),
            StructDefect::MapLength { expected, found } => {
                write!(f, "unary map has {found} entries, carrier has {expected}")
            }
            StructDefect::MapOutOfRange { x } => write!(f, "unary map image of {x} out of range"),
            StructDefect::OrderRows { expected, found } => {
                write!(f, "order table has {found} rows, carrier has {expected}")
            }
        }
    }
}

impl core::error::Error for StructDefect {}

fn check_map(map: &[Elem], n: usize) -> Result<(), StructDefect> {
    if map.len() != n {
        return Err(StructDefect::MapLength { expected: n, found: map.len() });
    }
    if let Some(x) = (0..n).find(|&x| map[x] >= n) {
        return Err(StructDefect::MapOutOfRange { x });
    }
    Ok(())
}

fn check_rows(rows: &[ElementSet], n: usize) -> Result<(), StructDefect> {
    if rows.len() != n {
        return Err(StructDefect::OrderRows { expected: n, found: rows.len() });
    }
    Ok(())
}

/// A candidate commutative unsharp residuated poset
/// `(C, <=, ., ->, ', 0, 1)`; construction validates shapes only, the
/// axioms are verified by [`check_axioms`](Self::check_axioms).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommUnsharpResiduatedPoset {
    carrier: Carrier,
    /// Raw relation rows, `leq_rows[x] = {y | x <= y}`; validated in C1.
    leq_rows: Vec<ElementSet>,
    comp: Vec<Elem>,
    odot: PartialBinTable,
    arrow: SetValuedBinTable,
}

impl CommUnsharpResiduatedPoset {
    pub fn new(
        carrier: Carrier,
        leq_rows: Vec<ElementSet>,
        comp: Vec<Elem>,
        odot: PartialBinTable,
        arrow: SetValuedBinTable,
    ) -> Result<Self, StructDefect> {
        let n = carrier.size();
        check_rows(&leq_rows, n)?;
        check_map(&comp, n)?;
        if odot.size() != n {
            return Err(StructDefect::Table(TableDefect::WrongSize { expected: n * n, found: odot.size() * odot.size() }));
        }
        if arrow.size() != n {
            return Err(StructDefect::Table(TableDefect::WrongSize { expected: n * n, found: arrow.size() * arrow.size() }));
        }
        let full = ElementSet::full(n);
        for x in 0..n {
            if !leq_rows[x].is_subset(full) {
                return Err(StructDefect::OrderRows { expected: n, found: n + 1 });
            }
        }
        Ok(CommUnsharpResiduatedPoset { carrier, leq_rows, comp, odot, arrow })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn comp(&self, x: Elem) -> Elem {
        self.comp[x]
    }

    pub fn comp_slice(&self) -> &[Elem] {
        &self.comp
    }

    pub fn odot(&self) -> &PartialBinTable {
        &self.odot
    }

    pub fn arrow(&self) -> &SetValuedBinTable {
        &self.arrow
    }

    pub fn leq_rows(&self) -> &[ElementSet] {
        &self.leq_rows
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    /// The stored relation as a validated bounded order.
    pub fn order(&self) -> Result<OrderRelation, OrderDefect> {
        OrderRelation::from_up_rows(self.leq_rows.clone(), self.carrier.zero(), self.carrier.one())
    }

    /// Verifies (C1)-(C4).
    ///
    /// Cells of `.` defined where `x' <= y` fails are C2 violations; cells
    /// undefined where the rule requires them are hard input errors, since
    /// the adjointness terms could not even be evaluated.
    pub fn check_axioms(&self) -> Result<Report, CheckError> {
        let n = self.size();
        let c = &self.carrier;
        let mut report = Report::new("curp axioms");

        // C1: bounded poset with antitone involution
        let ord = match self.order() {
            Ok(ord) => ord,
            Err(defect) => {
                report.fail(AxiomTag::C1, Vec::new(), format!("order relation: {defect}"));
                report.note(String::from("remaining axioms not evaluated"));
                return Ok(report);
            }
        };
        match InvolutionMap::new(self.comp.clone(), n) {
            Ok(inv) => {
                if let Some((x, y)) = inv.antitone_witness(&ord) {
                    report.fail(
                        AxiomTag::C1,
                        alloc::vec![x, y],
                        format!("complement is not antitone on {} <= {}", c.label(x), c.label(y)),
                    );
                }
            }
            Err(d) => {
                report.fail(AxiomTag::C1, Vec::new(), format!("complement: {d}"));
            }
        }
        if !report.passed() {
            report.note(String::from("remaining axioms not evaluated"));
            return Ok(report);
        }

        // C2 definedness pattern: x.y defined iff x' <= y
        for x in 0..n {
            for y in 0..n {
                let required = ord.leq(self.comp[x], y);
                match (self.odot.is_defined(x, y), required) {
                    (true, false) => {
                        report.fail(
                            AxiomTag::C2,
                            alloc::vec![x, y],
                            format!("{}.{} is defined but {}' <= {} fails", c.label(x), c.label(y), c.label(x), c.label(y)),
                        );
                    }
                    (false, true) => {
                        return Err(CheckError::UndefinedRequired { op: "odot", x, y });
                    }
                    _ => {}
                }
            }
        }
        // C2 partial commutative monoid
        'comm: for x in 0..n {
            for y in 0..n {
                if self.odot.get(x, y) != self.odot.get(y, x) {
                    report.fail(
                        AxiomTag::C2,
                        alloc::vec![x, y],
                        format!("{}.{} != {}.{}", c.label(x), c.label(y), c.label(y), c.label(x)),
                    );
                    break 'comm;
                }
            }
        }
        let one = c.one();
        for x in 0..n {
            if self.odot.get(x, one) != Some(x) || self.odot.get(one, x) != Some(x) {
                report.fail(AxiomTag::C2, alloc::vec![x], format!("{} is not a unit at {}", c.label(one), c.label(x)));
                break;
            }
        }
        'assoc: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let left = self.odot.get(x, y).and_then(|xy| self.odot.get(xy, z));
                    let right = self.odot.get(y, z).and_then(|yz| self.odot.get(x, yz));
                    if left != right {
                        report.fail(
                            AxiomTag::C2,
                            alloc::vec![x, y, z],
                            format!("associativity fails on ({}, {}, {})", c.label(x), c.label(y), c.label(z)),
                        );
                        break 'assoc;
                    }
                }
            }
        }
        // C2 monotonicity: z' <= x <= y implies x.z <= y.z
        'mono: for z in 0..n {
            for x in ord.up_set(self.comp[z]).iter() {
                for y in ord.up_set(x).iter() {
                    let (xz, yz) = match (self.odot.get(x, z), self.odot.get(y, z)) {
                        (Some(a), Some(b)) => (a, b),
                        _ => return Err(CheckError::UndefinedRequired { op: "odot", x, y: z }),
                    };
                    if !ord.leq(xz, yz) {
                        report.fail(
                            AxiomTag::C2,
                            alloc::vec![x, y, z],
                            format!("{}' <= {} <= {} but {}.{} is not below {}.{}", c.label(z), c.label(x), c.label(y), c.label(x), c.label(z), c.label(y), c.label(z)),
                        );
                        break 'mono;
                    }
                }
            }
        }

        // C3 unsharp adjointness, both implications over all triples
        self.check_adjointness(&ord, &mut report)?;

        // C4: x -> 0 = {x'}
        let zero = c.zero();
        for x in 0..n {
            if self.arrow.get(x, zero) != ElementSet::singleton(self.comp[x]) {
                report.fail(
                    AxiomTag::C4,
                    alloc::vec![x],
                    format!(
                        "{} -> 0 = {}, expected {{{}}}",
                        c.label(x),
                        c.set_to_string(self.arrow.get(x, zero)),
                        c.label(self.comp[x])
                    ),
                );
                break;
            }
        }
        Ok(report)
    }

    fn check_adjointness(&self, ord: &OrderRelation, report: &mut Report) -> Result<(), CheckError> {
        let n = self.size();
        let c = &self.carrier;
        for x in 0..n {
            for y in 0..n {
                let u_xy = ord.up_set(x).intersect(ord.up_set(self.comp[y]));
                // elementwise U(x,y') . y; u' <= y holds for every u here
                let image = self
                    .odot
                    .image_right(u_xy, y)
                    .ok_or(CheckError::UndefinedRequired { op: "odot", x, y })?;
                let l_image = ord.lower_cone(image);
                let lu = ord.lower_cone(u_xy);
                for z in 0..n {
                    let ul = ord.upper_cone(ord.down_set(y).intersect(ord.down_set(z)));
                    let lhs = l_image.is_subset(ord.lower_cone(ul));
                    let rhs = lu.is_subset(ord.lower_cone(ord.upper_cone(self.arrow.get(y, z))));
                    if lhs && !rhs {
                        report.fail(
                            AxiomTag::C3Forward,
                            alloc::vec![x, y, z],
                            format!(
                                "L(U({x_},{y_}').{y_}) <= UL({y_},{z_}) holds but LU({x_},{y_}') <= U({y_}->{z_}) fails",
                                x_ = c.label(x),
                                y_ = c.label(y),
                                z_ = c.label(z)
                            ),
                        );
                    }
                    if rhs && !lhs {
                        report.fail(
                            AxiomTag::C3Backward,
                            alloc::vec![x, y, z],
                            format!(
                                "LU({x_},{y_}') <= U({y_}->{z_}) holds but L(U({x_},{y_}').{y_}) <= UL({y_},{z_}) fails",
                                x_ = c.label(x),
                                y_ = c.label(y),
                                z_ = c.label(z)
                            ),
                        );
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks divisibility: `x <= y` implies `y.(y -> x) = L(x)` exactly.
    pub fn check_divisible(&self) -> Result<Report, CheckError> {
        let mut report = Report::new("curp divisibility");
        let ord = match self.order() {
            Ok(ord) => ord,
            Err(defect) => {
                report.fail(AxiomTag::C1, Vec::new(), format!("order relation: {defect}"));
                return Ok(report);
            }
        };
        let n = self.size();
        let c = &self.carrier;
        'outer: for x in 0..n {
            for y in ord.up_set(x).iter() {
                let image = self
                    .odot
                    .image_left(y, self.arrow.get(y, x))
                    .ok_or(CheckError::UndefinedRequired { op: "odot", x: y, y: x })?;
                if image != ord.down_set(x) {
                    report.fail(
                        AxiomTag::Divisibility,
                        alloc::vec![x, y],
                        format!(
                            "{y_}.({y_}->{x_}) = {} but L({x_}) = {}",
                            c.set_to_string(image),
                            c.set_to_string(ord.down_set(x)),
                            y_ = c.label(y),
                            x_ = c.label(x)
                        ),
                    );
                    break 'outer;
                }
            }
        }
        Ok(report)
    }
}

/// A candidate unsharp residuated poset
/// `(R, <=, ., ->, ~>, bar, tilde, 0, 1)`; shapes validated at construction,
/// axioms by [`check_axioms`](Self::check_axioms).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnsharpResiduatedPoset {
    carrier: Carrier,
    leq_rows: Vec<ElementSet>,
    lcomp: Vec<Elem>,
    rcomp: Vec<Elem>,
    odot: PartialBinTable,
    arrow: SetValuedBinTable,
    squiggle: SetValuedBinTable,
}

impl UnsharpResiduatedPoset {
    pub fn new(
        carrier: Carrier,
        leq_rows: Vec<ElementSet>,
        lcomp: Vec<Elem>,
        rcomp: Vec<Elem>,
        odot: PartialBinTable,
        arrow: SetValuedBinTable,
        squiggle: SetValuedBinTable,
    ) -> Result<Self, StructDefect> {
        let n = carrier.size();
        check_rows(&leq_rows, n)?;
        check_map(&lcomp, n)?;
        check_map(&rcomp, n)?;
        for t in [&odot] {
            if t.size() != n {
                return Err(StructDefect::Table(TableDefect::WrongSize { expected: n * n, found: t.size() * t.size() }));
            }
        }
        for t in [&arrow, &squiggle] {
            if t.size() != n {
                return Err(StructDefect::Table(TableDefect::WrongSize { expected: n * n, found: t.size() * t.size() }));
            }
        }
        Ok(UnsharpResiduatedPoset { carrier, leq_rows, lcomp, rcomp, odot, arrow, squiggle })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn lcomp(&self, x: Elem) -> Elem {
        self.lcomp[x]
    }

    pub fn rcomp(&self, x: Elem) -> Elem {
        self.rcomp[x]
    }

    pub fn lcomp_slice(&self) -> &[Elem] {
        &self.lcomp
    }

    pub fn rcomp_slice(&self) -> &[Elem] {
        &self.rcomp
    }

    pub fn odot(&self) -> &PartialBinTable {
        &self.odot
    }

    pub fn arrow(&self) -> &SetValuedBinTable {
        &self.arrow
    }

    pub fn squiggle(&self) -> &SetValuedBinTable {
        &self.squiggle
    }

    pub fn leq_rows(&self) -> &[ElementSet] {
        &self.leq_rows
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn order(&self) -> Result<OrderRelation, OrderDefect> {
        OrderRelation::from_up_rows(self.leq_rows.clone(), self.carrier.zero(), self.carrier.one())
    }

    /// Verifies (R1)-(R7).
    pub fn check_axioms(&self) -> Result<Report, CheckError> {
        let n = self.size();
        let c = &self.carrier;
        let mut report = Report::new("urp axioms");

        // R1: bounded poset
        let ord = match self.order() {
            Ok(ord) => ord,
            Err(defect) => {
                report.fail(AxiomTag::R1, Vec::new(), format!("order relation: {defect}"));
                report.note(String::from("remaining axioms not evaluated"));
                return Ok(report);
            }
        };

        // R2: tilde and bar mutually inverse and antitone
        for x in 0..n {
            if self.rcomp[self.lcomp[x]] != x || self.lcomp[self.rcomp[x]] != x {
                report.fail(AxiomTag::R2, alloc::vec![x], format!("bar and tilde are not mutually inverse at {}", c.label(x)));
                break;
            }
        }
        'antitone: for x in 0..n {
            for y in ord.up_set(x).iter() {
                if !ord.leq(self.lcomp[y], self.lcomp[x]) || !ord.leq(self.rcomp[y], self.rcomp[x]) {
                    report.fail(AxiomTag::R2, alloc::vec![x, y], format!("complements not antitone on {} <= {}", c.label(x), c.label(y)));
                    break 'antitone;
                }
            }
        }
        if !report.passed() {
            report.note(String::from("remaining axioms not evaluated"));
            return Ok(report);
        }

        // R3 definedness pattern: x.y defined iff x~ <= y
        for x in 0..n {
            for y in 0..n {
                let required = ord.leq(self.rcomp[x], y);
                match (self.odot.is_defined(x, y), required) {
                    (true, false) => {
                        report.fail(
                            AxiomTag::R3,
                            alloc::vec![x, y],
                            format!("{}.{} is defined but ~{} <= {} fails", c.label(x), c.label(y), c.label(x), c.label(y)),
                        );
                    }
                    (false, true) => return Err(CheckError::UndefinedRequired { op: "odot", x, y }),
                    _ => {}
                }
            }
        }
        let one = c.one();
        for x in 0..n {
            if self.odot.get(x, one) != Some(x) || self.odot.get(one, x) != Some(x) {
                report.fail(AxiomTag::R3, alloc::vec![x], format!("{} is not a unit at {}", c.label(one), c.label(x)));
                break;
            }
        }
        'assoc: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let left = self.odot.get(x, y).and_then(|xy| self.odot.get(xy, z));
                    let right = self.odot.get(y, z).and_then(|yz| self.odot.get(x, yz));
                    if left != right {
                        report.fail(AxiomTag::R3, alloc::vec![x, y, z], format!("associativity fails on ({}, {}, {})", c.label(x), c.label(y), c.label(z)));
                        break 'assoc;
                    }
                }
            }
        }
        // R3 one-sided monotonicity clauses
        'monor: for z in 0..n {
            for x in ord.up_set(self.lcomp[z]).iter() {
                for y in ord.up_set(x).iter() {
                    let (xz, yz) = match (self.odot.get(x, z), self.odot.get(y, z)) {
                        (Some(a), Some(b)) => (a, b),
                        _ => return Err(CheckError::UndefinedRequired { op: "odot", x, y: z }),
                    };
                    if !ord.leq(xz, yz) {
                        report.fail(AxiomTag::R3, alloc::vec![x, y, z], format!("bar {} <= {} <= {} but right multiplication is not monotone", c.label(z), c.label(x), c.label(y)));
                        break 'monor;
                    }
                }
            }
        }
        'monol: for z in 0..n {
            for x in ord.up_set(self.rcomp[z]).iter() {
                for y in ord.up_set(x).iter() {
                    let (zx, zy) = match (self.odot.get(z, x), self.odot.get(z, y)) {
                        (Some(a), Some(b)) => (a, b),
                        _ => return Err(CheckError::UndefinedRequired { op: "odot", x: z, y: x }),
                    };
                    if !ord.leq(zx, zy) {
                        report.fail(AxiomTag::R3, alloc::vec![x, y, z], format!("~{} <= {} <= {} but left multiplication is not monotone", c.label(z), c.label(x), c.label(y)));
                        break 'monol;
                    }
                }
            }
        }

        // R4/R5 unsharp adjointness
        for x in 0..n {
            for y in 0..n {
                // R4: L(U(x, bar y) . y) <= UL(y,z)  iff  LU(x, bar y) <= U(y -> z)
                let u_bar = ord.up_set(x).intersect(ord.up_set(self.lcomp[y]));
                let image = self
                    .odot
                    .image_right(u_bar, y)
                    .ok_or(CheckError::UndefinedRequired { op: "odot", x, y })?;
                let l_image = ord.lower_cone(image);
                let lu_bar = ord.lower_cone(u_bar);
                // R5: L(y . U(x, ~y)) <= UL(y,z)  iff  LU(x, ~y) <= U(y ~> z)
                let u_tilde = ord.up_set(x).intersect(ord.up_set(self.rcomp[y]));
                let image5 = self
                    .odot
                    .image_left(y, u_tilde)
                    .ok_or(CheckError::UndefinedRequired { op: "odot", x: y, y: x })?;
                let l_image5 = ord.lower_cone(image5);
                let lu_tilde = ord.lower_cone(u_tilde);
                for z in 0..n {
                    let ul = ord.upper_cone(ord.down_set(y).intersect(ord.down_set(z)));
                    let l_ul = ord.lower_cone(ul);

                    let lhs4 = l_image.is_subset(l_ul);
                    let rhs4 = lu_bar.is_subset(ord.lower_cone(ord.upper_cone(self.arrow.get(y, z))));
                    if lhs4 && !rhs4 {
                        report.fail(AxiomTag::R4Forward, alloc::vec![x, y, z], format!("R4 forward fails on ({}, {}, {})", c.label(x), c.label(y), c.label(z)));
                    }
                    if rhs4 && !lhs4 {
                        report.fail(AxiomTag::R4Backward, alloc::vec![x, y, z], format!("R4 backward fails on ({}, {}, {})", c.label(x), c.label(y), c.label(z)));
                    }

                    let lhs5 = l_image5.is_subset(l_ul);
                    let rhs5 = lu_tilde.is_subset(ord.lower_cone(ord.upper_cone(self.squiggle.get(y, z))));
                    if lhs5 && !rhs5 {
                        report.fail(AxiomTag::R5Forward, alloc::vec![x, y, z], format!("R5 forward fails on ({}, {}, {})", c.label(x), c.label(y), c.label(z)));
                    }
                    if rhs5 && !lhs5 {
                        report.fail(AxiomTag::R5Backward, alloc::vec![x, y, z], format!("R5 backward fails on ({}, {}, {})", c.label(x), c.label(y), c.label(z)));
                    }
                }
            }
        }

        // R6: x -> 0 = {bar x} and x ~> 0 = {~x}
        let zero = c.zero();
        for x in 0..n {
            if self.arrow.get(x, zero) != ElementSet::singleton(self.lcomp[x])
                || self.squiggle.get(x, zero) != ElementSet::singleton(self.rcomp[x])
            {
                report.fail(AxiomTag::R6, alloc::vec![x], format!("arrows to 0 at {} are not the complements", c.label(x)));
                break;
            }
        }

        // R7: (bar x . bar y)~  ===  (~x . ~y)bar, as Kleene equality
        'r7: for x in 0..n {
            for y in 0..n {
                let lhs = self.odot.get(self.lcomp[x], self.lcomp[y]).map(|v| self.rcomp[v]);
                let rhs = self.odot.get(self.rcomp[x], self.rcomp[y]).map(|v| self.lcomp[v]);
                if lhs != rhs {
                    report.fail(AxiomTag::R7, alloc::vec![x, y], format!("Kleene equality fails on ({}, {})", c.label(x), c.label(y)));
                    break 'r7;
                }
            }
        }
        Ok(report)
    }

    /// Checks two-sided divisibility: `x <= y` implies
    /// `(y -> x).y = y.(y ~> x) = L(x)`.
    pub fn check_divisible(&self) -> Result<Report, CheckError> {
        let mut report = Report::new("urp divisibility");
        let ord = match self.order() {
            Ok(ord) => ord,
            Err(defect) => {
                report.fail(AxiomTag::R1, Vec::new(), format!("order relation: {defect}"));
                return Ok(report);
            }
        };
        let n = self.size();
        let c = &self.carrier;
        'outer: for x in 0..n {
            for y in ord.up_set(x).iter() {
                let left = self
                    .odot
                    .image_right(self.arrow.get(y, x), y)
                    .ok_or(CheckError::UndefinedRequired { op: "odot", x: y, y: x })?;
                let right = self
                    .odot
                    .image_left(y, self.squiggle.get(y, x))
                    .ok_or(CheckError::UndefinedRequired { op: "odot", x: y, y: x })?;
                if left != ord.down_set(x) || right != ord.down_set(x) {
                    report.fail(
                        AxiomTag::Divisibility,
                        alloc::vec![x, y],
                        format!(
                            "({y_}->{x_}).{y_} = {}, {y_}.({y_}~>{x_}) = {}, L({x_}) = {}",
                            c.set_to_string(left),
                            c.set_to_string(right),
                            c.set_to_string(ord.down_set(x)),
                            y_ = c.label(y),
                            x_ = c.label(x)
                        ),
                    );
                    break 'outer;
                }
            }
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::example_one;
    use crate::transforms::ea_to_curp;
    use alloc::vec;

    #[test]
    fn struct_defects_are_caught() {
        let e = example_one();
        let curp = ea_to_curp(&e);
        // wrong comp length
        let bad = CommUnsharpResiduatedPoset::new(
            e.carrier().clone(),
            curp.leq_rows().to_vec(),
            vec![0; 3],
            curp.odot().clone(),
            curp.arrow().clone(),
        );
        assert!(matches!(bad, Err(StructDefect::MapLength { .. })));
    }

    #[test]
    fn c4_slice_on_constructed_curp() {
        let curp = ea_to_curp(&example_one());
        for x in 0..9 {
            assert_eq!(curp.arrow().get(x, 0), ElementSet::singleton(curp.comp(x)));
        }
    }

    #[test]
    fn broken_order_reports_c1() {
        let e = example_one();
        let curp = ea_to_curp(&e);
        let mut rows = curp.leq_rows().to_vec();
        rows[3].remove(3); // break reflexivity
        let c = CommUnsharpResiduatedPoset::new(
            e.carrier().clone(),
            rows,
            curp.comp_slice().to_vec(),
            curp.odot().clone(),
            curp.arrow().clone(),
        )
        .unwrap();
        let r = c.check_axioms().unwrap();
        assert!(r.failure_for(AxiomTag::C1).is_some());
    }

    #[test]
    fn undefined_required_cell_is_hard_error() {
        let e = example_one();
        let curp = ea_to_curp(&e);
        let mut odot = curp.odot().clone();
        odot.set(8, 3, None); // 1.c must be defined (1' = 0 <= c)
        let c = CommUnsharpResiduatedPoset::new(
            e.carrier().clone(),
            curp.leq_rows().to_vec(),
            curp.comp_slice().to_vec(),
            odot,
            curp.arrow().clone(),
        )
        .unwrap();
        match c.check_axioms() {
            Err(CheckError::UndefinedRequired { op: "odot", .. }) => {}
            other => panic!("expected hard error, got {other:?}"),
        }
    }

    #[test]
    fn overdefined_cell_is_c2_failure() {
        let e = example_one();
        let curp = ea_to_curp(&e);
        let mut odot = curp.odot().clone();
        odot.set(1, 1, Some(0)); // a.a defined although a' = g <= a fails
        let c = CommUnsharpResiduatedPoset::new(
            e.carrier().clone(),
            curp.leq_rows().to_vec(),
            curp.comp_slice().to_vec(),
            odot,
            curp.arrow().clone(),
        )
        .unwrap();
        let r = c.check_axioms().unwrap();
        assert!(r.failure_for(AxiomTag::C2).is_some(), "{r}");
    }
}
