//! Proof scripts and the line-by-line checker.
//!
//! A script lists numbered terms, each justified as a premise, an axiom
//! instance, or an application of one of the two rules:
//!
//! - `DS i j` accepts line `k` when line `j` is *syntactically*
//!   `~t_i | t_k` (no matching modulo commutativity);
//! - `N i` accepts line `k` when `t_k` is `[]t_i`.
//!
//! Axiom citations name the schema and, normally, the full substitution;
//! a citation without a substitution falls back to `match_axiom`.

use std::fmt::Write as _;

use thiserror::Error;

use super::axioms::{match_axiom, AxiomId, MetaVar, Substitution};
use crate::term::{self, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Premise,
    Axiom {
        id: AxiomId,
        subst: Option<Substitution>,
    },
    /// From `t_i` (minor) and `~t_i | t_k` at `or_line`, infer `t_k`.
    Ds { minor: usize, or_line: usize },
    /// From `t_i`, infer `[]t_i`.
    Nec { from: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    pub index: usize,
    pub term: Term,
    pub justification: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProofScript {
    pub theory: Vec<Term>,
    pub lines: Vec<ProofLine>,
}

impl ProofScript {
    pub fn conclusion(&self) -> Option<&Term> {
        self.lines.last().map(|l| &l.term)
    }
}

/// Structural defects that make a script uncheckable.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ScriptError {
    #[error("line index {index} does not increase over {previous}")]
    NonIncreasingIndex { previous: usize, index: usize },
    #[error("line {index} references line {referenced}, which is not an earlier line")]
    DanglingReference { index: usize, referenced: usize },
    #[error("script has no lines")]
    EmptyScript,
}

/// Per-line outcome; `reason` explains a failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineVerdict {
    pub index: usize,
    pub ok: bool,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofVerdict {
    pub lines: Vec<LineVerdict>,
    pub accepted: bool,
}

/// Checks every line; acceptance means every line passed.
pub fn check_proof(script: &ProofScript) -> Result<ProofVerdict, ScriptError> {
    if script.lines.is_empty() {
        return Err(ScriptError::EmptyScript);
    }
    // Indices strictly increase and references point backward.
    let mut prev = 0usize;
    for line in &script.lines {
        if line.index <= prev {
            return Err(ScriptError::NonIncreasingIndex {
                previous: prev,
                index: line.index,
            });
        }
        prev = line.index;
    }
    let term_at = |upto: usize, index: usize| -> Option<&Term> {
        script.lines[..upto]
            .iter()
            .find(|l| l.index == index)
            .map(|l| &l.term)
    };
    for (pos, line) in script.lines.iter().enumerate() {
        let refs: &[usize] = match &line.justification {
            Justification::Ds { minor, or_line } => &[*minor, *or_line],
            Justification::Nec { from } => &[*from],
            _ => &[],
        };
        for &r in refs {
            if term_at(pos, r).is_none() {
                return Err(ScriptError::DanglingReference {
                    index: line.index,
                    referenced: r,
                });
            }
        }
    }

    let mut lines = Vec::with_capacity(script.lines.len());
    let mut accepted = true;
    for (pos, line) in script.lines.iter().enumerate() {
        let reason = judge_line(script, pos, line);
        let ok = reason.is_empty();
        accepted &= ok;
        lines.push(LineVerdict {
            index: line.index,
            ok,
            reason,
        });
    }
    Ok(ProofVerdict { lines, accepted })
}

fn judge_line(script: &ProofScript, pos: usize, line: &ProofLine) -> String {
    let term_at = |index: usize| -> &Term {
        &script.lines[..pos]
            .iter()
            .find(|l| l.index == index)
            .expect("references were pre-checked")
            .term
    };
    match &line.justification {
        Justification::Premise => {
            if script.theory.contains(&line.term) {
                String::new()
            } else {
                "term is not in the theory".into()
            }
        }
        Justification::Axiom { id, subst } => match subst {
            Some(subst) => {
                let missing: Vec<MetaVar> = id
                    .metavars()
                    .into_iter()
                    .filter(|m| subst.get(*m).is_none())
                    .collect();
                if !missing.is_empty() {
                    return format!("substitution misses {:?}", missing);
                }
                if !id.side_condition_holds(subst) {
                    return format!(
                        "{id} requires central-shaped terms for {:?}",
                        id.central_slots()
                    );
                }
                match id.schema().instantiate(subst) {
                    Some(expected) if expected == line.term => String::new(),
                    Some(expected) => format!("{id} instance would be `{expected}`"),
                    None => "substitution is not total".into(),
                }
            }
            None => {
                if match_axiom(&line.term).iter().any(|(got, _)| got == id) {
                    String::new()
                } else {
                    format!("term is not an instance of {id}")
                }
            }
        },
        Justification::Ds { minor, or_line } => {
            let expected = term::or(term::neg(term_at(*minor).clone()), line.term.clone());
            if *term_at(*or_line) == expected {
                String::new()
            } else {
                format!("line {or_line} is not `~({}) | ({})`", term_at(*minor), line.term)
            }
        }
        Justification::Nec { from } => {
            if line.term == term::bx(term_at(*from).clone()) {
                String::new()
            } else {
                format!("term is not `[]` of line {from}")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Text format

/// Renders a script in the proof file format.
pub fn write_proof(script: &ProofScript) -> String {
    let mut out = String::new();
    if !script.theory.is_empty() {
        out.push_str("theory:\n");
        for t in &script.theory {
            let _ = writeln!(out, "{t}");
        }
        out.push('\n');
    }
    for line in &script.lines {
        let just = match &line.justification {
            Justification::Premise => "premise".to_string(),
            Justification::Axiom { id, subst: None } => format!("axiom {id}"),
            Justification::Axiom {
                id,
                subst: Some(s),
            } => format!("axiom {id} {s}"),
            Justification::Ds { minor, or_line } => format!("DS {minor} {or_line}"),
            Justification::Nec { from } => format!("N {from}"),
        };
        let _ = writeln!(out, "{}. {} ; {}", line.index, line.term, just);
    }
    out
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct ProofParseError {
    pub line: usize,
    pub msg: String,
}

/// Parses the proof file format.
pub fn parse_proof(text: &str) -> Result<ProofScript, ProofParseError> {
    let fail = |line: usize, msg: String| ProofParseError { line, msg };
    let mut script = ProofScript::default();
    let mut in_theory = false;
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
        if line == "theory:" {
            in_theory = true;
            continue;
        }
        // A numbered line starts the proof body.
        if let Some(dot) = line.find('.') {
            if line[..dot].chars().all(|c| c.is_ascii_digit()) && !line[..dot].is_empty() {
                in_theory = false;
                let index: usize = line[..dot].parse().unwrap();
                let rest = &line[dot + 1..];
                let semi = rest
                    .rfind(';')
                    .ok_or_else(|| fail(lineno, "missing `; <justification>`".into()))?;
                let term = term::parse(rest[..semi].trim())
                    .map_err(|e| fail(lineno, e.to_string()))?;
                let justification = parse_justification(rest[semi + 1..].trim())
                    .map_err(|msg| fail(lineno, msg))?;
                script.lines.push(ProofLine {
                    index,
                    term,
                    justification,
                });
                continue;
            }
        }
        if in_theory {
            script
                .theory
                .push(term::parse(line).map_err(|e| fail(lineno, e.to_string()))?);
        } else {
            return Err(fail(lineno, format!("expected a numbered line, got `{line}`")));
        }
    }
    Ok(script)
}

fn parse_justification(s: &str) -> Result<Justification, String> {
    let mut words = s.split_whitespace();
    match words.next() {
        Some("premise") => Ok(Justification::Premise),
        Some("DS") => {
            let nums: Vec<usize> = words
                .map(|w| w.parse().map_err(|_| format!("bad line reference `{w}`")))
                .collect::<Result<_, _>>()?;
            match nums[..] {
                [i, j] => Ok(Justification::Ds { minor: i, or_line: j }),
                _ => Err("usage: DS <minor> <or-line>".into()),
            }
        }
        Some("N") => {
            let nums: Vec<usize> = words
                .map(|w| w.parse().map_err(|_| format!("bad line reference `{w}`")))
                .collect::<Result<_, _>>()?;
            match nums[..] {
                [i] => Ok(Justification::Nec { from: i }),
                _ => Err("usage: N <line>".into()),
            }
        }
        Some("axiom") => {
            let rest: Vec<&str> = s.split_whitespace().collect();
            let label = rest.get(1).ok_or("usage: axiom <id> [a=..] [b=..] [c=..]")?;
            let id = AxiomId::from_label(label).ok_or_else(|| format!("unknown axiom `{label}`"))?;
            // Everything after the id is `m=<term>` pieces; terms never
            // contain `=`, so markers are unambiguous.
            let tail = s
                .split_once(label)
                .map(|(_, t)| t.trim())
                .unwrap_or_default();
            if tail.is_empty() {
                return Ok(Justification::Axiom { id, subst: None });
            }
            let mut subst = Substitution::default();
            let mut cursor = tail;
            let mut pending: Option<(MetaVar, usize)> = None;
            let markers = [("a=", MetaVar::A), ("b=", MetaVar::B), ("c=", MetaVar::C)];
            let mut pieces: Vec<(MetaVar, &str)> = Vec::new();
            while let Some((mv, start)) = next_marker(cursor, &markers) {
                if let Some((prev_mv, _)) = pending {
                    pieces.push((prev_mv, cursor[..start].trim()));
                }
                let after = start + 2;
                pending = Some((mv, 0));
                cursor = &cursor[after..];
            }
            if let Some((mv, _)) = pending {
                pieces.push((mv, cursor.trim()));
            } else {
                return Err(format!("unintelligible substitution `{tail}`"));
            }
            for (mv, text) in pieces {
                let t = term::parse(text).map_err(|e| format!("{mv}=: {e}"))?;
                subst.0.insert(mv, t);
            }
            Ok(Justification::Axiom {
                id,
                subst: Some(subst),
            })
        }
        Some(other) => Err(format!("unknown justification `{other}`")),
        None => Err("empty justification".into()),
    }
}

/// Position of the next `m=` marker at a token boundary.
fn next_marker(s: &str, markers: &[(&str, MetaVar)]) -> Option<(MetaVar, usize)> {
    let mut best: Option<(MetaVar, usize)> = None;
    for (pat, mv) in markers {
        let mut from = 0;
        while let Some(rel) = s[from..].find(pat) {
            let at = from + rel;
            let boundary = at == 0 || s.as_bytes()[at - 1].is_ascii_whitespace();
            if boundary && best.is_none_or(|(_, b)| at < b) {
                best = Some((*mv, at));
                break;
            }
            from = at + 1;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::builder::ProofBuilder;
    use crate::term::parse;

    fn premise_and_box() -> ProofScript {
        // 1. x1        ; premise
        // 2. []x1      ; N 1
        ProofScript {
            theory: vec![parse("x1").unwrap()],
            lines: vec![
                ProofLine {
                    index: 1,
                    term: parse("x1").unwrap(),
                    justification: Justification::Premise,
                },
                ProofLine {
                    index: 2,
                    term: parse("[]x1").unwrap(),
                    justification: Justification::Nec { from: 1 },
                },
            ],
        }
    }

    #[test]
    fn necessitation_script_is_accepted() {
        let verdict = check_proof(&premise_and_box()).unwrap();
        assert!(verdict.accepted);
        assert!(verdict.lines.iter().all(|l| l.ok));
    }

    #[test]
    fn swapped_disjunct_is_rejected() {
        // DS expects `~t_i | t_k`; `t_k | ~t_i` must fail.
        let mut b = ProofBuilder::new(vec![parse("x1").unwrap(), parse("x2 | ~x1").unwrap()]);
        let _i = b.premise(parse("x1").unwrap());
        let _j = b.premise(parse("x2 | ~x1").unwrap());
        let mut script = b.build();
        script.lines.push(ProofLine {
            index: 3,
            term: parse("x2").unwrap(),
            justification: Justification::Ds { minor: 1, or_line: 2 },
        });
        let verdict = check_proof(&script).unwrap();
        assert!(!verdict.accepted);
        assert!(!verdict.lines[2].ok);
        assert!(verdict.lines[2].reason.contains("not `~"));
    }

    #[test]
    fn premise_outside_theory_is_rejected() {
        let mut script = premise_and_box();
        script.theory.clear();
        let verdict = check_proof(&script).unwrap();
        assert!(!verdict.accepted);
        assert_eq!(verdict.lines[0].reason, "term is not in the theory");
    }

    #[test]
    fn wrong_axiom_substitution_is_rejected() {
        let mut subst = Substitution::default();
        subst.0.insert(MetaVar::A, parse("x1").unwrap());
        subst.0.insert(MetaVar::B, parse("x2").unwrap());
        let script = ProofScript {
            theory: vec![],
            lines: vec![ProofLine {
                index: 1,
                // A5 with (a, b) = (x1, x2) is (x1 & x2) R (x2 & x1); cite it
                // for the commuted term instead.
                term: parse("(x2 & x1) R (x1 & x2)").unwrap(),
                justification: Justification::Axiom {
                    id: AxiomId::A5,
                    subst: Some(subst),
                },
            }],
        };
        let verdict = check_proof(&script).unwrap();
        assert!(!verdict.accepted);
        assert!(verdict.lines[0].reason.contains("instance would be"));
    }

    #[test]
    fn convenience_mode_searches_the_schema() {
        let script = ProofScript {
            theory: vec![],
            lines: vec![ProofLine {
                index: 1,
                term: parse("(x1 & x2) R (x2 & x1)").unwrap(),
                justification: Justification::Axiom {
                    id: AxiomId::A5,
                    subst: None,
                },
            }],
        };
        assert!(check_proof(&script).unwrap().accepted);
    }

    #[test]
    fn dangling_and_forward_references_are_malformed() {
        let mut script = premise_and_box();
        script.lines[1].justification = Justification::Nec { from: 9 };
        assert_eq!(
            check_proof(&script).unwrap_err(),
            ScriptError::DanglingReference {
                index: 2,
                referenced: 9
            }
        );
        let mut script = premise_and_box();
        script.lines[1].index = 1;
        assert!(matches!(
            check_proof(&script).unwrap_err(),
            ScriptError::NonIncreasingIndex { .. }
        ));
    }

    #[test]
    fn proof_text_round_trips() {
        let script = premise_and_box();
        let text = write_proof(&script);
        let reparsed = parse_proof(&text).unwrap();
        assert_eq!(reparsed, script);
    }

    #[test]
    fn substitutions_with_spaces_parse() {
        let text = "1. (x1 & x2) R (x2 & x1) ; axiom A5 a=x1 & x2 b=x2 & x1\n";
        let script = parse_proof(text).unwrap();
        match &script.lines[0].justification {
            Justification::Axiom { id, subst: Some(s) } => {
                assert_eq!(*id, AxiomId::A5);
                assert_eq!(s.get(MetaVar::A), Some(&parse("x1 & x2").unwrap()));
                assert_eq!(s.get(MetaVar::B), Some(&parse("x2 & x1").unwrap()));
            }
            j => panic!("unexpected justification {j:?}"),
        }
        // That citation is wrong for this term, and the checker says so.
        assert!(!check_proof(&script).unwrap().accepted);
    }
}
