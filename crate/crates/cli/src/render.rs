//! Human-facing renderers: aligned operation tables in the Cayley layout,
//! DOT output for Hasse diagrams, and tab-separated census rows.

use unsharp_core::enumerate::{CensusRow, Predicate, StructureKind};
use unsharp_core::poset::{Carrier, Elem, OrderDefect, OrderRelation};
use unsharp_core::tables::{PartialBinTable, SetValuedBinTable};

use crate::format::Structure;

/// Pads every column to its widest cell, paper style:
///
/// ```text
/// +  | 0 a 1
/// ---+------
/// 0  | 0 a 1
/// ```
fn aligned(symbol: &str, carrier: &Carrier, cell: impl Fn(Elem, Elem) -> String) -> String {
    let n = carrier.size();
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(n + 1);
    let mut header = vec![symbol.to_string()];
    header.extend((0..n).map(|y| carrier.label(y).to_string()));
    grid.push(header);
    for x in 0..n {
        let mut row = vec![carrier.label(x).to_string()];
        row.extend((0..n).map(|y| cell(x, y)));
        grid.push(row);
    }
    let widths: Vec<usize> = (0..=n)
        .map(|col| grid.iter().map(|row| row[col].chars().count()).max().unwrap_or(1))
        .collect();
    let mut lines = Vec::with_capacity(n + 2);
    for row in &grid {
        let mut line = String::new();
        for (col, cell) in row.iter().enumerate() {
            line.push_str(cell);
            for _ in 0..widths[col] - cell.chars().count() {
                line.push(' ');
            }
            if col == 0 {
                line.push_str(" | ");
            } else if col < n {
                line.push(' ');
            }
        }
        lines.push(line.trim_end().to_string());
    }
    // rule under the header, aligned with the column of vertical bars
    let rule: String = lines[0].chars().map(|c| if c == '|' { '+' } else { '-' }).collect();
    lines.insert(1, rule);
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

pub fn partial_table_text(symbol: &str, carrier: &Carrier, table: &PartialBinTable) -> String {
    aligned(symbol, carrier, |x, y| match table.get(x, y) {
        None => "-".to_string(),
        Some(v) => carrier.label(v).to_string(),
    })
}

pub fn set_table_text(symbol: &str, carrier: &Carrier, table: &SetValuedBinTable) -> String {
    let full = carrier.full_set();
    aligned(symbol, carrier, |x, y| {
        let s = table.get(x, y);
        if s == full {
            // the paper abbreviates the full carrier
            "E".to_string()
        } else {
            carrier.set_to_string(s)
        }
    })
}

pub fn unary_table_text(symbol: &str, carrier: &Carrier, map: impl Fn(Elem) -> Elem) -> String {
    let mut out = format!("x | {symbol}\n--+--\n");
    for x in 0..carrier.size() {
        out.push_str(&format!("{} | {}\n", carrier.label(x), carrier.label(map(x))));
    }
    out
}

/// The operation tables of a structure, matching the paper's layout.
pub fn tables_text(s: &Structure) -> String {
    let mut out = String::new();
    match s {
        Structure::Effect(e) => {
            out.push_str(&partial_table_text("+", e.carrier(), e.plus()));
            out.push('\n');
            out.push_str(&unary_table_text("x'", e.carrier(), |x| e.comp(x)));
        }
        Structure::Pseudo(p) => {
            out.push_str(&partial_table_text("+", p.carrier(), p.plus()));
            out.push('\n');
            out.push_str(&unary_table_text("bar", p.carrier(), |x| p.lcomp(x)));
            out.push('\n');
            out.push_str(&unary_table_text("~", p.carrier(), |x| p.rcomp(x)));
        }
        Structure::Curp(c) => {
            out.push_str(&partial_table_text("\u{2299}", c.carrier(), c.odot()));
            out.push('\n');
            out.push_str(&set_table_text("\u{2192}", c.carrier(), c.arrow()));
        }
        Structure::Urp(r) => {
            out.push_str(&partial_table_text("\u{2299}", r.carrier(), r.odot()));
            out.push('\n');
            out.push_str(&set_table_text("\u{2192}", r.carrier(), r.arrow()));
            out.push('\n');
            out.push_str(&set_table_text("\u{21dd}", r.carrier(), r.squiggle()));
        }
    }
    out
}

/// The order underlying a structure; effect and pseudoeffect algebras carry
/// a verified one, the residuated kinds validate on demand.
pub fn structure_order(s: &Structure) -> Result<OrderRelation, OrderDefect> {
    match s {
        Structure::Effect(e) => Ok(e.induced_order().clone()),
        Structure::Pseudo(p) => Ok(p.induced_order().clone()),
        Structure::Curp(c) => c.order(),
        Structure::Urp(r) => r.order(),
    }
}

/// DOT digraph of the covering relation, drawn bottom-up.
pub fn hasse_dot(carrier: &Carrier, order: &OrderRelation) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for e in 0..carrier.size() {
        out.push_str(&format!("  \"{}\";\n", carrier.label(e)));
    }
    for (lo, hi) in order.covers() {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", carrier.label(lo), carrier.label(hi)));
    }
    out.push_str("}\n");
    out
}

/// Census as tab-separated rows: a header, the total, then one row per
/// combination of the grouped predicates.
pub fn census_tsv(row: &CensusRow, predicates: &[Predicate]) -> String {
    let kind = match row.kind {
        StructureKind::Effect => "effect",
        StructureKind::Pseudoeffect => "pea",
    };
    let mut out = String::from("order\tkind\tprofile\tcount\n");
    let status = if row.complete { "" } else { "\t# incomplete: node budget exhausted" };
    out.push_str(&format!("{}\t{}\tall\t{}{}\n", row.order, kind, row.total, status));
    for (combo, count) in row.profile_counts(predicates) {
        let profile: Vec<String> = combo.iter().map(|(p, v)| format!("{}={}", p.name(), v)).collect();
        out.push_str(&format!("{}\t{}\t{}\t{}\n", row.order, kind, profile.join(","), count));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use unsharp_core::builtin::example_one;
    use unsharp_core::enumerate::{enumerate_structures, SearchSpec};
    use unsharp_core::transforms::ea_to_curp;

    #[test]
    fn aligned_table_shape() {
        let e = example_one();
        let text = partial_table_text("+", e.carrier(), e.plus());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 11); // header, rule, 9 rows
        assert!(lines[0].starts_with("+ | 0 a b"));
        assert!(lines[2].starts_with("0 | 0 a b"));
        // all rows equally wide
        let w = lines[0].len();
        assert!(lines[2..].iter().all(|l| l.len() == w));
    }

    #[test]
    fn set_table_abbreviates_full_carrier() {
        let curp = ea_to_curp(&example_one());
        let text = set_table_text("->", curp.carrier(), curp.arrow());
        assert!(text.contains('E'));
        assert!(text.contains("{c,f}"));
    }

    #[test]
    fn hasse_contains_covers_only() {
        let e = example_one();
        let dot = hasse_dot(e.carrier(), e.induced_order());
        assert!(dot.contains("\"0\" -> \"a\""));
        assert!(dot.contains("\"d\" -> \"f\""));
        assert!(!dot.contains("\"0\" -> \"1\""), "0 < 1 is not a cover");
        assert!(!dot.contains("\"b\" -> \"f\""), "b < f goes through d");
    }

    #[test]
    fn census_tsv_layout() {
        let spec = SearchSpec::new(4, unsharp_core::enumerate::StructureKind::Effect);
        let row = enumerate_structures(&spec).unwrap();
        let tsv = census_tsv(&row, &spec.predicates);
        let lines: Vec<&str> = tsv.lines().collect();
        assert_eq!(lines[0], "order\tkind\tprofile\tcount");
        assert_eq!(lines[1], "4\teffect\tall\t3");
        assert!(lines.iter().any(|l| l.contains("monotonous=true,lattice_ordered=true\t3")));
    }
}
