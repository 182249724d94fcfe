//! Structured verdicts for axiom checks.
//!
//! A [`Report`] either passes or carries failure witnesses. Distinct axiom
//! tags never collapse: the first witness per tag is kept, so a checker run
//! over an enumerator candidate shows every broken axiom at once.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::poset::Elem;

/// Names the axiom or property a witness violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomTag {
    // effect algebra
    E1,
    E2,
    E3,
    E4,
    // pseudoeffect algebra
    P1,
    P2,
    P3,
    P4,
    // commutative unsharp residuated poset
    C1,
    C2,
    C3Forward,
    C3Backward,
    C4,
    // unsharp residuated poset
    R1,
    R2,
    R3,
    R4Forward,
    R4Backward,
    R5Forward,
    R5Backward,
    R6,
    R7,
    // named properties
    Lattice,
    Monotonous,
    MonotonousRight,
    MonotonousLeft,
    DualMonotonicity,
    DecompositionLower,
    DecompositionUpper,
    Good,
    Divisibility,
    /// Clause of the effect-algebra basic lemma, e.g. `Lemma("iv")`.
    Lemma(&'static str),
    /// Clause of the pseudoeffect-algebra basic lemma.
    PeaLemma(&'static str),
    /// Stored unary maps disagree with the maps derived from the table.
    CompConsistency,
    /// Literal table difference found by a round-trip comparison.
    RoundTrip,
    /// A theorem's conclusion failed on a construction output; names the stage.
    TheoremViolation(&'static str),
}

impl fmt::Display for AxiomTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomTag::E1 => write!(f, "E1"),
            AxiomTag::E2 => write!(f, "E2"),
            AxiomTag::E3 => write!(f, "E3"),
            AxiomTag::E4 => write!(f, "E4"),
            AxiomTag::P1 => write!(f, "P1"),
            AxiomTag::P2 => write!(f, "P2"),
            AxiomTag::P3 => write!(f, "P3"),
            AxiomTag::P4 => write!(f, "P4"),
            AxiomTag::C1 => write!(f, "C1"),
            AxiomTag::C2 => write!(f, "C2"),
            AxiomTag::C3Forward => write!(f, "C3(=>)"),
            AxiomTag::C3Backward => write!(f, "C3(<=)"),
            AxiomTag::C4 => write!(f, "C4"),
            AxiomTag::R1 => write!(f, "R1"),
            AxiomTag::R2 => write!(f, "R2"),
            AxiomTag::R3 => write!(f, "R3"),
            AxiomTag::R4Forward => write!(f, "R4(=>)"),
            AxiomTag::R4Backward => write!(f, "R4(<=)"),
            AxiomTag::R5Forward => write!(f, "R5(=>)"),
            AxiomTag::R5Backward => write!(f, "R5(<=)"),
            AxiomTag::R6 => write!(f, "R6"),
            AxiomTag::R7 => write!(f, "R7"),
            AxiomTag::Lattice => write!(f, "lattice"),
            AxiomTag::Monotonous => write!(f, "monotonous"),
            AxiomTag::MonotonousRight => write!(f, "monotonous(right)"),
            AxiomTag::MonotonousLeft => write!(f, "monotonous(left)"),
            AxiomTag::DualMonotonicity => write!(f, "dual-monotonicity"),
            AxiomTag::DecompositionLower => write!(f, "decomposition(L)"),
            AxiomTag::DecompositionUpper => write!(f, "decomposition(U)"),
            AxiomTag::Good => write!(f, "good"),
            AxiomTag::Divisibility => write!(f, "divisibility"),
            AxiomTag::Lemma(clause) => write!(f, "lemma({clause})"),
            AxiomTag::PeaLemma(clause) => write!(f, "pea-lemma({clause})"),
            AxiomTag::CompConsistency => write!(f, "complement-consistency"),
            AxiomTag::RoundTrip => write!(f, "round-trip"),
            AxiomTag::TheoremViolation(stage) => write!(f, "theorem-violation({stage})"),
        }
    }
}

/// A single failed axiom instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub axiom: AxiomTag,
    /// The offending tuple, as raw element indices.
    pub tuple: Vec<Elem>,
    /// Human-readable description rendered with carrier labels.
    pub witness: String,
}

/// Outcome of a check: pass, or the first witness per violated axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    check: &'static str,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

impl Report {
    pub fn new(check: &'static str) -> Self {
        Report { check, failures: Vec::new(), notes: Vec::new() }
    }

    pub fn check_name(&self) -> &'static str {
        self.check
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records a failure unless the tag already has a witness.
    pub fn fail(&mut self, axiom: AxiomTag, tuple: Vec<Elem>, witness: String) {
        if !self.failures.iter().any(|f| f.axiom == axiom) {
            self.failures.push(Failure { axiom, tuple, witness });
        }
    }

    pub fn note(&mut self, note: String) {
        self.notes.push(note);
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    pub fn failure_for(&self, axiom: AxiomTag) -> Option<&Failure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    /// Folds another report's failures and notes into this one.
    pub fn merge(&mut self, other: Report) {
        for f in other.failures {
            self.fail(f.axiom, f.tuple, f.witness);
        }
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: PASS", self.check)?;
        } else {
            write!(f, "{}: FAIL", self.check)?;
            for failure in &self.failures {
                write!(f, "\n  {}: {}", failure.axiom, failure.witness)?;
            }
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

/// Hard errors: malformed inputs and refused budgets, as opposed to axiom
/// failures which are ordinary [`Report`] outcomes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckError {
    /// A table cell or map entry points outside the carrier.
    Malformed { what: &'static str, detail: String },
    /// A partial operation was undefined where the definedness rule
    /// requires it; the input tables are inconsistent.
    UndefinedRequired { op: &'static str, x: Elem, y: Elem },
    /// Exhaustive checking was refused: the carrier exceeds the limit.
    CarrierTooLarge { size: usize, limit: usize },
    /// Exhaustive checking was refused: too many antichain pairs.
    BudgetExceeded { estimated: u64, budget: u64 },
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckError::Malformed { what, detail } => write!(f, "malformed {what}: {detail}"),
            CheckError::UndefinedRequired { op, x, y } => {
                write!(f, "{op}({x},{y}) is undefined where the definedness rule requires it")
            }
            CheckError::CarrierTooLarge { size, limit } => {
                write!(f, "carrier size {size} exceeds exhaustive-mode limit {limit}; use sampled mode")
            }
            CheckError::BudgetExceeded { estimated, budget } => {
                write!(f, "estimated work {estimated} exceeds budget {budget}; use sampled mode")
            }
        }
    }
}

impl core::error::Error for CheckError {}
