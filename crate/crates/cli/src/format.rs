//! The structure file format.
//!
//! A file is a header line `kind <effect|pea|curp|urp>`, a line
//! `elements <labels>` whose first label is the bottom and last the top,
//! and one section per operation. Partial tables use `-` for undefined
//! cells, set-valued tables use brace lists like `{a,b}`, unary maps are
//! label pairs, and the order relation of the residuated kinds is given as
//! 0/1 rows. `#` starts a comment. Rendering is deterministic and
//! `parse . render` is the identity on structures.

use thiserror::Error;

use unsharp_core::effect::{BuildError, EffectAlgebra};
use unsharp_core::poset::{Carrier, Elem, ElementSet};
use unsharp_core::pseudo::PseudoEffectAlgebra;
use unsharp_core::report::Report;
use unsharp_core::residuation::{CommUnsharpResiduatedPoset, UnsharpResiduatedPoset};
use unsharp_core::tables::{PartialBinTable, SetValuedBinTable};

/// A parsed structure of any supported kind.
///
/// Effect and pseudoeffect algebras are fully verified at parse time (their
/// constructors run the axiom checkers); the residuated kinds are
/// shape-validated containers whose axioms are checked on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Effect(EffectAlgebra),
    Pseudo(PseudoEffectAlgebra),
    Curp(CommUnsharpResiduatedPoset),
    Urp(UnsharpResiduatedPoset),
}

impl Structure {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Structure::Effect(_) => "effect",
            Structure::Pseudo(_) => "pea",
            Structure::Curp(_) => "curp",
            Structure::Urp(_) => "urp",
        }
    }

    pub fn carrier(&self) -> &Carrier {
        match self {
            Structure::Effect(e) => e.carrier(),
            Structure::Pseudo(p) => p.carrier(),
            Structure::Curp(c) => c.carrier(),
            Structure::Urp(r) => r.carrier(),
        }
    }
}

/// Parse or construction failure for a structure file.
#[derive(Debug, Error)]
pub enum FileError {
    /// Lexical/shape problem; maps to exit code 2.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// The file is well-formed but the structure violates its axioms or is
    /// internally inconsistent; maps to exit code 1.
    #[error("{message}")]
    Semantic { message: String, report: Option<Report> },
}

fn semantic_from_build(err: BuildError) -> FileError {
    match err {
        BuildError::Axioms(report) => {
            FileError::Semantic { message: format!("{report}"), report: Some(report) }
        }
        other => FileError::Semantic { message: format!("{other}"), report: None },
    }
}

const SECTION_NAMES: [&str; 8] =
    ["plus", "comp", "lcomp", "rcomp", "odot", "arrow", "squiggle", "order"];

fn sections_for(kind: &str) -> &'static [&'static str] {
    match kind {
        "effect" => &["plus", "comp"],
        "pea" => &["plus", "lcomp", "rcomp"],
        "curp" => &["order", "comp", "odot", "arrow"],
        "urp" => &["order", "lcomp", "rcomp", "odot", "arrow", "squiggle"],
        _ => &[],
    }
}

struct RawSection {
    line: usize,
    rows: Vec<(usize, Vec<String>)>,
}

/// Parses a structure file.
pub fn parse_structure(text: &str) -> Result<Structure, FileError> {
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if !content.trim().is_empty() {
            lines.push((idx + 1, content.trim()));
        }
    }
    let parse_err = |line: usize, message: String| FileError::Parse { line, message };

    let mut iter = lines.into_iter();
    let (kind_line, kind_text) = iter
        .next()
        .ok_or_else(|| parse_err(1, "empty file".into()))?;
    let kind = match kind_text.strip_prefix("kind ") {
        Some(k) if !sections_for(k.trim()).is_empty() => k.trim().to_string(),
        Some(k) => return Err(parse_err(kind_line, format!("unknown kind `{}`", k.trim()))),
        None => return Err(parse_err(kind_line, "expected `kind <effect|pea|curp|urp>`".into())),
    };

    let (elements_line, elements_text) = iter
        .next()
        .ok_or_else(|| parse_err(kind_line, "missing `elements` line".into()))?;
    let labels: Vec<String> = match elements_text.strip_prefix("elements ") {
        Some(rest) => rest.split_whitespace().map(str::to_string).collect(),
        None => return Err(parse_err(elements_line, "expected `elements <labels>`".into())),
    };
    if labels.len() < 2 {
        return Err(parse_err(elements_line, "need at least two elements".into()));
    }
    for l in &labels {
        if l == "-" || l.contains(['{', '}', ',', ':']) {
            return Err(parse_err(elements_line, format!("invalid label `{l}`")));
        }
    }
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(parse_err(elements_line, format!("duplicate label `{l}`")));
        }
    }
    let n = labels.len();
    let index_of = |tok: &str| labels.iter().position(|l| l == tok);

    // collect sections
    let mut sections: Vec<(String, RawSection)> = Vec::new();
    for (line, text) in iter {
        if let Some(name) = text.strip_suffix(':') {
            let name = name.trim();
            if !SECTION_NAMES.contains(&name) {
                return Err(parse_err(line, format!("unknown section `{name}:`")));
            }
            if sections.iter().any(|(n, _)| n == name) {
                return Err(parse_err(line, format!("duplicate section `{name}:`")));
            }
            sections.push((name.to_string(), RawSection { line, rows: Vec::new() }));
        } else {
            let tokens: Vec<String> = text.split_whitespace().map(str::to_string).collect();
            match sections.last_mut() {
                Some((_, sec)) => sec.rows.push((line, tokens)),
                None => return Err(parse_err(line, "data before any section header".into())),
            }
        }
    }

    let required = sections_for(&kind);
    for name in required {
        if !sections.iter().any(|(n, _)| n == name) {
            return Err(parse_err(kind_line, format!("kind {kind} requires section `{name}:`")));
        }
    }
    for (name, _) in &sections {
        if !required.contains(&name.as_str()) {
            let line = sections.iter().find(|(n, _)| n == name).unwrap().1.line;
            return Err(parse_err(line, format!("section `{name}:` does not belong to kind {kind}")));
        }
    }

    let get = |name: &str| -> &RawSection {
        &sections.iter().find(|(n, _)| n == name).unwrap().1
    };

    let parse_partial = |sec: &RawSection| -> Result<PartialBinTable, FileError> {
        if sec.rows.len() != n {
            return Err(parse_err(sec.line, format!("expected {n} rows, found {}", sec.rows.len())));
        }
        let mut table = PartialBinTable::new_undefined(n);
        for (x, (line, tokens)) in sec.rows.iter().enumerate() {
            if tokens.len() != n {
                return Err(parse_err(*line, format!("ragged row: expected {n} cells, found {}", tokens.len())));
            }
            for (y, tok) in tokens.iter().enumerate() {
                if tok != "-" {
                    let v = index_of(tok)
                        .ok_or_else(|| parse_err(*line, format!("unknown label `{tok}`")))?;
                    table.set(x, y, Some(v));
                }
            }
        }
        Ok(table)
    };

    let parse_map = |sec: &RawSection| -> Result<Vec<Elem>, FileError> {
        if sec.rows.len() != n {
            return Err(parse_err(sec.line, format!("expected {n} pairs, found {}", sec.rows.len())));
        }
        let mut map = vec![0usize; n];
        let mut seen = vec![false; n];
        for (line, tokens) in &sec.rows {
            if tokens.len() != 2 {
                return Err(parse_err(*line, format!("expected a label pair, found {} tokens", tokens.len())));
            }
            let x = index_of(&tokens[0])
                .ok_or_else(|| parse_err(*line, format!("unknown label `{}`", tokens[0])))?;
            let y = index_of(&tokens[1])
                .ok_or_else(|| parse_err(*line, format!("unknown label `{}`", tokens[1])))?;
            if seen[x] {
                return Err(parse_err(*line, format!("duplicate pair for `{}`", tokens[0])));
            }
            seen[x] = true;
            map[x] = y;
        }
        Ok(map)
    };

    let parse_sets = |sec: &RawSection| -> Result<SetValuedBinTable, FileError> {
        if sec.rows.len() != n {
            return Err(parse_err(sec.line, format!("expected {n} rows, found {}", sec.rows.len())));
        }
        let mut table = SetValuedBinTable::new_empty(n);
        for (x, (line, tokens)) in sec.rows.iter().enumerate() {
            if tokens.len() != n {
                return Err(parse_err(*line, format!("ragged row: expected {n} cells, found {}", tokens.len())));
            }
            for (y, tok) in tokens.iter().enumerate() {
                let inner = tok
                    .strip_prefix('{')
                    .and_then(|t| t.strip_suffix('}'))
                    .ok_or_else(|| parse_err(*line, format!("expected a brace set, found `{tok}`")))?;
                let mut set = ElementSet::EMPTY;
                if !inner.is_empty() {
                    for part in inner.split(',') {
                        let v = index_of(part)
                            .ok_or_else(|| parse_err(*line, format!("unknown label `{part}`")))?;
                        set.insert(v);
                    }
                }
                table.set(x, y, set);
            }
        }
        Ok(table)
    };

    let parse_order = |sec: &RawSection| -> Result<Vec<ElementSet>, FileError> {
        if sec.rows.len() != n {
            return Err(parse_err(sec.line, format!("expected {n} rows, found {}", sec.rows.len())));
        }
        let mut rows = Vec::with_capacity(n);
        for (line, tokens) in &sec.rows {
            if tokens.len() != n {
                return Err(parse_err(*line, format!("ragged row: expected {n} cells, found {}", tokens.len())));
            }
            let mut set = ElementSet::EMPTY;
            for (y, tok) in tokens.iter().enumerate() {
                match tok.as_str() {
                    "1" => set.insert(y),
                    "0" => {}
                    other => return Err(parse_err(*line, format!("expected 0 or 1, found `{other}`"))),
                }
            }
            rows.push(set);
        }
        Ok(rows)
    };

    let carrier = Carrier::new(labels.clone(), 0, n - 1)
        .map_err(|d| parse_err(elements_line, format!("{d}")))?;

    match kind.as_str() {
        "effect" => {
            let plus = parse_partial(get("plus"))?;
            let comp = parse_map(get("comp"))?;
            EffectAlgebra::from_parts(carrier, plus, &comp)
                .map(Structure::Effect)
                .map_err(semantic_from_build)
        }
        "pea" => {
            let plus = parse_partial(get("plus"))?;
            let lcomp = parse_map(get("lcomp"))?;
            let rcomp = parse_map(get("rcomp"))?;
            PseudoEffectAlgebra::from_parts(carrier, plus, &lcomp, &rcomp)
                .map(Structure::Pseudo)
                .map_err(semantic_from_build)
        }
        "curp" => {
            let order = parse_order(get("order"))?;
            let comp = parse_map(get("comp"))?;
            let odot = parse_partial(get("odot"))?;
            let arrow = parse_sets(get("arrow"))?;
            CommUnsharpResiduatedPoset::new(carrier, order, comp, odot, arrow)
                .map(Structure::Curp)
                .map_err(|d| FileError::Semantic { message: format!("{d}"), report: None })
        }
        "urp" => {
            let order = parse_order(get("order"))?;
            let lcomp = parse_map(get("lcomp"))?;
            let rcomp = parse_map(get("rcomp"))?;
            let odot = parse_partial(get("odot"))?;
            let arrow = parse_sets(get("arrow"))?;
            let squiggle = parse_sets(get("squiggle"))?;
            UnsharpResiduatedPoset::new(carrier, order, lcomp, rcomp, odot, arrow, squiggle)
                .map(Structure::Urp)
                .map_err(|d| FileError::Semantic { message: format!("{d}"), report: None })
        }
        _ => unreachable!("kind validated above"),
    }
}

/// Renders a structure; identical structures give identical bytes.
pub fn render_structure(s: &Structure) -> String {
    let carrier = s.carrier();
    let n = carrier.size();
    let mut out = String::new();
    out.push_str("kind ");
    out.push_str(s.kind_name());
    out.push('\n');
    out.push_str("elements");
    for e in 0..n {
        out.push(' ');
        out.push_str(carrier.label(e));
    }
    out.push('\n');

    let push_partial = |out: &mut String, name: &str, table: &PartialBinTable| {
        out.push_str(name);
        out.push_str(":\n");
        for x in 0..n {
            for y in 0..n {
                if y > 0 {
                    out.push(' ');
                }
                match table.get(x, y) {
                    None => out.push('-'),
                    Some(v) => out.push_str(carrier.label(v)),
                }
            }
            out.push('\n');
        }
    };
    let push_map = |out: &mut String, name: &str, map: &dyn Fn(Elem) -> Elem| {
        out.push_str(name);
        out.push_str(":\n");
        for x in 0..n {
            out.push_str(carrier.label(x));
            out.push(' ');
            out.push_str(carrier.label(map(x)));
            out.push('\n');
        }
    };
    let push_sets = |out: &mut String, name: &str, table: &SetValuedBinTable| {
        out.push_str(name);
        out.push_str(":\n");
        for x in 0..n {
            for y in 0..n {
                if y > 0 {
                    out.push(' ');
                }
                out.push_str(&carrier.set_to_string(table.get(x, y)));
            }
            out.push('\n');
        }
    };
    let push_order = |out: &mut String, rows: &[ElementSet]| {
        out.push_str("order:\n");
        for row in rows {
            for y in 0..n {
                if y > 0 {
                    out.push(' ');
                }
                out.push(if row.contains(y) { '1' } else { '0' });
            }
            out.push('\n');
        }
    };

    match s {
        Structure::Effect(e) => {
            push_partial(&mut out, "plus", e.plus());
            push_map(&mut out, "comp", &|x| e.comp(x));
        }
        Structure::Pseudo(p) => {
            push_partial(&mut out, "plus", p.plus());
            push_map(&mut out, "lcomp", &|x| p.lcomp(x));
            push_map(&mut out, "rcomp", &|x| p.rcomp(x));
        }
        Structure::Curp(c) => {
            push_order(&mut out, c.leq_rows());
            push_map(&mut out, "comp", &|x| c.comp(x));
            push_partial(&mut out, "odot", c.odot());
            push_sets(&mut out, "arrow", c.arrow());
        }
        Structure::Urp(r) => {
            push_order(&mut out, r.leq_rows());
            push_map(&mut out, "lcomp", &|x| r.lcomp(x));
            push_map(&mut out, "rcomp", &|x| r.rcomp(x));
            push_partial(&mut out, "odot", r.odot());
            push_sets(&mut out, "arrow", r.arrow());
            push_sets(&mut out, "squiggle", r.squiggle());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use unsharp_core::builtin::{example_one, example_two};
    use unsharp_core::pseudo::embed_commutative;
    use unsharp_core::transforms::{ea_to_curp, pea_to_urp};

    #[test]
    fn roundtrip_all_kinds() {
        let e = example_one();
        let structures = vec![
            Structure::Effect(e.clone()),
            Structure::Pseudo(embed_commutative(&e)),
            Structure::Curp(ea_to_curp(&e)),
            Structure::Urp(pea_to_urp(&embed_commutative(&e))),
        ];
        for s in structures {
            let text = render_structure(&s);
            let back = parse_structure(&text).unwrap();
            assert_eq!(back, s, "roundtrip failed for kind {}", s.kind_name());
            // determinism
            assert_eq!(render_structure(&back), text);
        }
    }

    #[test]
    fn roundtrip_example_two() {
        let s = Structure::Effect(example_two());
        let text = render_structure(&s);
        assert_eq!(parse_structure(&text).unwrap(), s);
    }

    #[test]
    fn unknown_label_reports_line() {
        let e = example_one();
        let text = render_structure(&Structure::Effect(e));
        let bad = text.replace("a - e f - - - 1 -", "a - e q - - - 1 -");
        match parse_structure(&bad) {
            Err(FileError::Parse { line, message }) => {
                assert_eq!(line, 5); // kind, elements, plus:, zero row, then row a
                assert!(message.contains("unknown label `q`"), "{message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn ragged_row_and_duplicate_section() {
        let text = "kind effect\nelements 0 1\nplus:\n0 1\n1\ncomp:\n0 1\n1 0\n";
        match parse_structure(text) {
            Err(FileError::Parse { line: 5, message }) => assert!(message.contains("ragged")),
            other => panic!("{other:?}"),
        }
        let text = "kind effect\nelements 0 1\nplus:\n0 1\n1 -\nplus:\n0 1\n1 -\ncomp:\n0 1\n1 0\n";
        match parse_structure(text) {
            Err(FileError::Parse { line: 6, message }) => assert!(message.contains("duplicate section")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let text = "# a comment\nkind effect\n\nelements 0 1  # trailing\nplus:\n0 1\n1 -\ncomp:\n0 1\n1 0\n";
        assert!(parse_structure(text).is_ok());
    }

    #[test]
    fn axiom_failure_is_semantic_not_parse() {
        // 1+1 = 1 violates E4/E3
        let text = "kind effect\nelements 0 1\nplus:\n0 1\n1 1\ncomp:\n0 1\n1 0\n";
        match parse_structure(text) {
            Err(FileError::Semantic { report: Some(r), .. }) => assert!(!r.passed()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn comp_mismatch_is_semantic() {
        let text = "kind effect\nelements 0 a 1\nplus:\n0 a 1\na 1 -\n1 - -\ncomp:\n0 1\na 1\n1 0\n";
        // the table has a+a=1 so a' = a, but the file claims a' = 1
        match parse_structure(text) {
            Err(FileError::Semantic { message, .. }) => {
                assert!(message.contains("complement"), "{message}")
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn wrong_kind_sections_rejected() {
        let text = "kind effect\nelements 0 1\nplus:\n0 1\n1 -\ncomp:\n0 1\n1 0\narrow:\n{0} {1}\n{1} {0}\n";
        assert!(matches!(parse_structure(text), Err(FileError::Parse { .. })));
    }
}
