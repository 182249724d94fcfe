//! Dense operation tables over a carrier.

use alloc::vec::Vec;
use core::fmt;

use crate::poset::{Elem, ElementSet};

/// Why a table does not fit its carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableDefect {
    WrongSize { expected: usize, found: usize },
    EntryOutOfRange { x: Elem, y: Elem, value: Elem },
}

impl fmt::Display for TableDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableDefect::WrongSize { expected, found } => {
                write!(f, "table is {found} cells, carrier needs {expected}")
            }
            TableDefect::EntryOutOfRange { x, y, value } => {
                write!(f, "cell ({x},{y}) holds out-of-range value {value}")
            }
        }
    }
}

impl core::error::Error for TableDefect {}

/// An n-by-n table of a partial binary operation; `None` means undefined.
#[derive(Clone, PartialEq, Eq)]
pub struct PartialBinTable {
    n: usize,
    cells: Vec<Option<Elem>>,
}

impl PartialBinTable {
    pub fn new_undefined(n: usize) -> Self {
        PartialBinTable { n, cells: alloc::vec![None; n * n] }
    }

    pub fn from_cells(n: usize, cells: Vec<Option<Elem>>) -> Result<Self, TableDefect> {
        if cells.len() != n * n {
            return Err(TableDefect::WrongSize { expected: n * n, found: cells.len() });
        }
        let t = PartialBinTable { n, cells };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<(), TableDefect> {
        for x in 0..self.n {
            for y in 0..self.n {
                if let Some(v) = self.get(x, y) {
                    if v >= self.n {
                        return Err(TableDefect::EntryOutOfRange { x, y, value: v });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.cells[x * self.n + y]
    }

    pub fn is_defined(&self, x: Elem, y: Elem) -> bool {
        self.get(x, y).is_some()
    }

    pub fn set(&mut self, x: Elem, y: Elem, v: Option<Elem>) {
        self.cells[x * self.n + y] = v;
    }

    /// All defined cells as `(x, y, value)`.
    pub fn iter_defined(&self) -> impl Iterator<Item = (Elem, Elem, Elem)> + '_ {
        (0..self.n).flat_map(move |x| {
            (0..self.n).filter_map(move |y| self.get(x, y).map(|v| (x, y, v)))
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.get(x, y) == self.get(y, x)))
    }

    /// Elementwise image `{op(x, a) | a in set}`; `None` if any cell is undefined.
    pub fn image_left(&self, x: Elem, set: ElementSet) -> Option<ElementSet> {
        let mut out = ElementSet::EMPTY;
        for a in set.iter() {
            out.insert(self.get(x, a)?);
        }
        Some(out)
    }

    /// Elementwise image `{op(a, y) | a in set}`; `None` if any cell is undefined.
    pub fn image_right(&self, set: ElementSet, y: Elem) -> Option<ElementSet> {
        let mut out = ElementSet::EMPTY;
        for a in set.iter() {
            out.insert(self.get(a, y)?);
        }
        Some(out)
    }

    /// Table with rows, columns and values renamed by `perm`.
    pub fn permuted(&self, perm: &[Elem]) -> PartialBinTable {
        let n = self.n;
        let mut out = PartialBinTable::new_undefined(n);
        for x in 0..n {
            for y in 0..n {
                if let Some(v) = self.get(x, y) {
                    out.set(perm[x], perm[y], Some(perm[v]));
                }
            }
        }
        out
    }

    /// Flat row-major encoding with undefined as 0 and element `k` as `k+1`;
    /// the key used for canonical-form comparisons.
    pub fn encoding(&self) -> Vec<u8> {
        self.cells.iter().map(|c| match c {
            None => 0,
            Some(v) => *v as u8 + 1,
        }).collect()
    }
}

impl fmt::Debug for PartialBinTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PartialBinTable(n={}) [", self.n)?;
        for x in 0..self.n {
            write!(f, "  ")?;
            for y in 0..self.n {
                match self.get(x, y) {
                    None => write!(f, "- ")?,
                    Some(v) => write!(f, "{v} ")?,
                }
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// An n-by-n table of element subsets (the set-valued arrows).
#[derive(Clone, PartialEq, Eq)]
pub struct SetValuedBinTable {
    n: usize,
    cells: Vec<ElementSet>,
}

impl SetValuedBinTable {
    pub fn new_empty(n: usize) -> Self {
        SetValuedBinTable { n, cells: alloc::vec![ElementSet::EMPTY; n * n] }
    }

    pub fn from_cells(n: usize, cells: Vec<ElementSet>) -> Result<Self, TableDefect> {
        if cells.len() != n * n {
            return Err(TableDefect::WrongSize { expected: n * n, found: cells.len() });
        }
        for x in 0..n {
            for y in 0..n {
                let s = cells[x * n + y];
                if !s.is_subset(ElementSet::full(n)) {
                    let value = s.iter().find(|&e| e >= n).unwrap();
                    return Err(TableDefect::EntryOutOfRange { x, y, value });
                }
            }
        }
        Ok(SetValuedBinTable { n, cells })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: Elem, y: Elem) -> ElementSet {
        self.cells[x * self.n + y]
    }

    pub fn set(&mut self, x: Elem, y: Elem, v: ElementSet) {
        self.cells[x * self.n + y] = v;
    }

    pub fn permuted(&self, perm: &[Elem]) -> SetValuedBinTable {
        let n = self.n;
        let mut out = SetValuedBinTable::new_empty(n);
        for x in 0..n {
            for y in 0..n {
                let img = ElementSet::from_iter(self.get(x, y).iter().map(|e| perm[e]));
                out.set(perm[x], perm[y], img);
            }
        }
        out
    }
}

impl fmt::Debug for SetValuedBinTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SetValuedBinTable(n={}) [", self.n)?;
        for x in 0..self.n {
            write!(f, "  ")?;
            for y in 0..self.n {
                write!(f, "{:?} ", self.get(x, y))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
