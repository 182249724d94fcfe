//! The two built-in effect algebras used throughout tests and the CLI.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::effect::EffectAlgebra;
use crate::poset::Carrier;
use crate::tables::PartialBinTable;

/// Labels of the nine-element example, in carrier order.
pub const EXAMPLE_ONE_LABELS: [&str; 9] = ["0", "a", "b", "c", "d", "e", "f", "g", "1"];

/// Addition table of the nine-element example, `-` for undefined.
const EXAMPLE_ONE_PLUS: [&str; 9] = [
    "0 a b c d e f g 1",
    "a - e f - - - 1 -",
    "b e d g f - 1 - -",
    "c f g - - 1 - - -",
    "d - f - 1 - - - -",
    "e - - 1 - - - - -",
    "f - 1 - - - - - -",
    "g 1 - - - - - - -",
    "1 - - - - - - - -",
];

/// The nine-element effect algebra on `{0,a,b,c,d,e,f,g,1}`.
///
/// Its induced order is the three-layer poset that is not a lattice
/// (`a` and `b` have the two minimal upper bounds `e` and `f`).
pub fn example_one() -> EffectAlgebra {
    let labels: Vec<String> = EXAMPLE_ONE_LABELS.iter().map(|s| s.to_string()).collect();
    let carrier = Carrier::new(labels, 0, 8).expect("static labels");
    let mut plus = PartialBinTable::new_undefined(9);
    for (x, row) in EXAMPLE_ONE_PLUS.iter().enumerate() {
        for (y, cell) in row.split_whitespace().enumerate() {
            if cell != "-" {
                let v = EXAMPLE_ONE_LABELS.iter().position(|l| *l == cell).unwrap();
                plus.set(x, y, Some(v));
            }
        }
    }
    EffectAlgebra::from_table(carrier, plus).expect("example 1 satisfies E1-E4")
}

/// The 32-element effect algebra of even-cardinality subsets of `{1,...,6}`:
/// `A+B = A u B` iff `A` and `B` are disjoint, and `A'` is the complement.
///
/// Elements are labelled `e0` (the empty set) through `e123456`, ordered by
/// cardinality and then lexicographically by digit string.
pub fn example_two() -> EffectAlgebra {
    let masks = example_two_masks();
    let labels: Vec<String> = masks.iter().map(|&m| mask_label(m)).collect();
    let carrier = Carrier::new(labels, 0, 31).expect("static labels");
    let mut plus = PartialBinTable::new_undefined(32);
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate() {
            if a & b == 0 {
                let v = masks.iter().position(|&m| m == a | b).unwrap();
                plus.set(i, j, Some(v));
            }
        }
    }
    EffectAlgebra::from_table(carrier, plus).expect("example 2 satisfies E1-E4")
}

/// Bitmasks over digits 1..=6 of the even-cardinality subsets, in carrier order.
fn example_two_masks() -> Vec<u8> {
    let mut masks: Vec<u8> = (0u8..64).filter(|m| m.count_ones() % 2 == 0).collect();
    masks.sort_by_key(|&m| (m.count_ones(), mask_label(m)));
    masks
}

fn mask_label(mask: u8) -> String {
    if mask == 0 {
        return "e0".to_string();
    }
    let mut s = String::from("e");
    for d in 1..=6 {
        if mask >> (d - 1) & 1 == 1 {
            s.push(char::from_digit(d, 10).unwrap());
        }
    }
    s
}
