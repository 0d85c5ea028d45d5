//! The lattice file format.
//!
//! Text, UTF-8, one directive per line; `#` starts a comment:
//!
//! ```text
//! oml <n>
//! elem <id> [<name>]
//! leq <i> <j>        # covering-or-equal pairs; closure taken by the loader
//! neg <i> <j>
//! bot <i>
//! top <i>
//! box <i> <j>        # optional modal table
//! ```

use super::{Elem, FiniteOml, RawLattice};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct FormatError {
    pub line: usize,
    pub msg: String,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError {
        line,
        msg: msg.into(),
    })
}

/// The parsed but not yet validated content of a lattice file.
#[derive(Debug, Clone)]
pub struct LatticeFile {
    pub raw: RawLattice,
    /// Entries of the optional `box` table, as written.
    pub box_table: Option<Vec<Elem>>,
}

pub fn parse_lattice_file(text: &str) -> Result<LatticeFile, FormatError> {
    let mut n: Option<usize> = None;
    let mut names: Vec<Option<String>> = Vec::new();
    let mut leq = Vec::new();
    let mut neg = Vec::new();
    let mut bot = None;
    let mut top = None;
    let mut box_entries: Vec<Option<Elem>> = Vec::new();
    let mut saw_box = false;

    for (idx, raw_line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw_line.find('#') {
            Some(p) => &raw_line[..p],
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let dir = words.next().unwrap();
        let rest: Vec<&str> = words.collect();
        let parse_id = |w: &str| -> Result<Elem, FormatError> {
            let id: Elem = w
                .parse()
                .map_err(|_| FormatError {
                    line: lineno,
                    msg: format!("expected an element id, got `{w}`"),
                })?;
            match n {
                Some(n) if id >= n => err(lineno, format!("element id {id} out of range 0..{n}")),
                None => err(lineno, "directive before the `oml <n>` header"),
                _ => Ok(id),
            }
        };
        match dir {
            "oml" => {
                if n.is_some() {
                    return err(lineno, "duplicate `oml` header");
                }
                let [w] = rest[..] else {
                    return err(lineno, "usage: oml <n>");
                };
                let count: usize = w.parse().map_err(|_| FormatError {
                    line: lineno,
                    msg: format!("bad element count `{w}`"),
                })?;
                n = Some(count);
                names = vec![None; count];
                box_entries = vec![None; count];
            }
            "elem" => {
                let (id, name) = match rest[..] {
                    [w] => (parse_id(w)?, None),
                    [w, name] => (parse_id(w)?, Some(name)),
                    _ => return err(lineno, "usage: elem <id> [<name>]"),
                };
                if names[id].is_some() {
                    return err(lineno, format!("element {id} declared twice"));
                }
                names[id] = Some(name.map_or_else(|| id.to_string(), str::to_string));
            }
            "leq" | "neg" | "box" => {
                let [wa, wb] = rest[..] else {
                    return err(lineno, format!("usage: {dir} <i> <j>"));
                };
                let (a, b) = (parse_id(wa)?, parse_id(wb)?);
                match dir {
                    "leq" => leq.push((a, b)),
                    "neg" => neg.push((a, b)),
                    _ => {
                        saw_box = true;
                        if box_entries[a].is_some() {
                            return err(lineno, format!("box image of {a} declared twice"));
                        }
                        box_entries[a] = Some(b);
                    }
                }
            }
            "bot" | "top" => {
                let [w] = rest[..] else {
                    return err(lineno, format!("usage: {dir} <i>"));
                };
                let id = parse_id(w)?;
                let slot = if dir == "bot" { &mut bot } else { &mut top };
                if slot.is_some() {
                    return err(lineno, format!("duplicate `{dir}`"));
                }
                *slot = Some(id);
            }
            other => return err(lineno, format!("unknown directive `{other}`")),
        }
    }

    let total = text.lines().count();
    let Some(n) = n else {
        return err(total, "missing `oml <n>` header");
    };
    let names: Vec<String> = names
        .into_iter()
        .enumerate()
        .map(|(id, v)| v.unwrap_or_else(|| id.to_string()))
        .collect();
    let Some(bot) = bot else {
        return err(total, "missing `bot`");
    };
    let Some(top) = top else {
        return err(total, "missing `top`");
    };
    let box_table = if saw_box {
        let mut t = Vec::with_capacity(n);
        for (a, entry) in box_entries.iter().enumerate() {
            match entry {
                Some(b) => t.push(*b),
                None => return err(total, format!("box table is partial: element {a} missing")),
            }
        }
        Some(t)
    } else {
        None
    };
    Ok(LatticeFile {
        raw: RawLattice {
            names,
            leq,
            neg,
            bot,
            top,
        },
        box_table,
    })
}

/// Renders a validated lattice in the file format; the order is written as
/// its covering pairs.
pub fn write_lattice_file(l: &FiniteOml, box_table: Option<&[Elem]>) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "oml {}", l.n());
    for e in l.elements() {
        let _ = writeln!(out, "elem {} {}", e, l.name(e));
    }
    for (a, b) in l.coverings() {
        let _ = writeln!(out, "leq {a} {b}");
    }
    for a in l.elements() {
        if a <= l.neg(a) {
            let _ = writeln!(out, "neg {} {}", a, l.neg(a));
        }
    }
    let _ = writeln!(out, "bot {}", l.bot());
    let _ = writeln!(out, "top {}", l.top());
    if let Some(bt) = box_table {
        for (a, &b) in bt.iter().enumerate() {
            let _ = writeln!(out, "box {a} {b}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::builtin;

    #[test]
    fn round_trip_through_the_file_format() {
        for name in ["b2", "b4", "b8", "mo2", "mo3"] {
            let l = crate::lattice::parse_model_name(name).unwrap();
            let text = write_lattice_file(&l, None);
            let file = parse_lattice_file(&text).unwrap();
            let reloaded = file.raw.validate().unwrap();
            assert_eq!(reloaded, l, "{name} changed across a save/load cycle");
        }
    }

    #[test]
    fn loader_reports_line_numbers() {
        let text = "oml 2\nelem 0 zero\nelem 1 one\nleq 0 5\n";
        let e = parse_lattice_file(text).unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.msg.contains("out of range"));
    }

    #[test]
    fn directives_before_header_are_rejected() {
        let e = parse_lattice_file("elem 0 x\n").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn partial_box_table_is_rejected() {
        let l = builtin("boolean", &["1"]).unwrap();
        let mut text = write_lattice_file(&l, None);
        text.push_str("box 0 0\n");
        let e = parse_lattice_file(&text).unwrap_err();
        assert!(e.msg.contains("partial"));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# header\n\noml 2\nelem 0 0\nelem 1 1\nleq 0 1 # order\nneg 0 1\nbot 0\ntop 1\n";
        let file = parse_lattice_file(text).unwrap();
        assert!(file.raw.validate().is_ok());
    }
}
