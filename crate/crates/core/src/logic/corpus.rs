//! The checked-in derivation corpus.
//!
//! Each admissible rule of the calculus ships as a concrete accepted proof
//! script over `x1`, `x2`, `x3`. The text files under `corpus/` are the
//! rendered form of exactly these builders; a golden test keeps them in
//! sync.

use super::builder::ProofBuilder;
use super::proof::ProofScript;
use crate::term::{and, neg, or, r, var, Term};

pub struct CorpusEntry {
    pub name: &'static str,
    pub script: ProofScript,
}

/// All corpus scripts, in a stable order.
pub fn corpus() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry {
            name: "r_symmetry",
            script: r_symmetry(),
        },
        CorpusEntry {
            name: "r_transitivity",
            script: r_transitivity(),
        },
        CorpusEntry {
            name: "negation_congruence",
            script: negation_congruence(),
        },
        CorpusEntry {
            name: "conjunction_replacement",
            script: conjunction_replacement(),
        },
        CorpusEntry {
            name: "disjunction_replacement",
            script: disjunction_replacement(),
        },
        CorpusEntry {
            name: "box_congruence",
            script: box_congruence(),
        },
        CorpusEntry {
            name: "excluded_middle",
            script: excluded_middle(),
        },
        CorpusEntry {
            name: "disjunction_introduction",
            script: disjunction_introduction(),
        },
        CorpusEntry {
            name: "provable_equals_top",
            script: provable_equals_top(),
        },
    ]
}

fn x1() -> Term {
    var(1)
}

fn x2() -> Term {
    var(2)
}

fn x3() -> Term {
    var(3)
}

/// x1 R x2  |-  x2 R x1
fn r_symmetry() -> ProofScript {
    let mut b = ProofBuilder::new(vec![r(x1(), x2())]);
    let p = b.premise(r(x1(), x2()));
    b.sym(p);
    b.build()
}

/// x1 R x2, x2 R x3  |-  x1 R x3
fn r_transitivity() -> ProofScript {
    let mut b = ProofBuilder::new(vec![r(x1(), x2()), r(x2(), x3())]);
    let p = b.premise(r(x1(), x2()));
    let q = b.premise(r(x2(), x3()));
    b.trans(p, q);
    b.build()
}

/// x1 R x2  |-  ~x1 R ~x2
fn negation_congruence() -> ProofScript {
    let mut b = ProofBuilder::new(vec![r(x1(), x2())]);
    let p = b.premise(r(x1(), x2()));
    b.neg_cong(p);
    b.build()
}

/// x1 R x2, x1 & x3  |-  x2 & x3
fn conjunction_replacement() -> ProofScript {
    let mut b = ProofBuilder::new(vec![r(x1(), x2()), and(x1(), x3())]);
    let p = b.premise(r(x1(), x2()));
    let q = b.premise(and(x1(), x3()));
    b.replace_in_and(p, q);
    b.build()
}

/// x1 R x2, x1 | x3  |-  x2 | x3
fn disjunction_replacement() -> ProofScript {
    let mut b = ProofBuilder::new(vec![r(x1(), x2()), or(x1(), x3())]);
    let p = b.premise(r(x1(), x2()));
    let q = b.premise(or(x1(), x3()));
    b.replace_in_or(p, q);
    b.build()
}

/// x1 R x2  |-  []x1 R []x2
fn box_congruence() -> ProofScript {
    let mut b = ProofBuilder::new(vec![r(x1(), x2())]);
    let p = b.premise(r(x1(), x2()));
    b.box_cong(p);
    b.build()
}

/// |-  x1 | ~x1
fn excluded_middle() -> ProofScript {
    let mut b = ProofBuilder::new(vec![]);
    b.excluded_middle(&x1());
    b.build()
}

/// x1  |-  x1 | x2
fn disjunction_introduction() -> ProofScript {
    let mut b = ProofBuilder::new(vec![x1()]);
    let p = b.premise(x1());
    b.or_intro(p, &x2());
    b.build()
}

/// x1  |-  x1 R (x1 | ~x1): anything provable is equivalent to the top.
fn provable_equals_top() -> ProofScript {
    let mut b = ProofBuilder::new(vec![x1()]);
    let p = b.premise(x1());
    // x1 R (x1 & (x1 | ~x1)) via absorption, cut with the premise.
    let a7 = b.axiom(
        super::axioms::AxiomId::A7,
        &[
            (super::axioms::MetaVar::A, x1()),
            (super::axioms::MetaVar::B, neg(x1())),
        ],
    );
    let absorbed = b.sym(a7);
    let conj = b.mp_r(absorbed, p);
    // Pad with the complementary branch: the result is the expansion of
    // x1 R (x1 | ~x1).
    b.or_intro(conj, &and(neg(x1()), neg(or(x1(), neg(x1())))));
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::proof::check_proof;
    use crate::term::{bx, parse};

    #[test]
    fn every_corpus_script_is_accepted() {
        for entry in corpus() {
            let verdict = check_proof(&entry.script).unwrap();
            for line in &verdict.lines {
                assert!(
                    line.ok,
                    "{}: line {} rejected: {}",
                    entry.name, line.index, line.reason
                );
            }
            assert!(verdict.accepted);
        }
    }

    #[test]
    fn corpus_conclusions_are_the_advertised_rules() {
        let want: Vec<(&str, Term)> = vec![
            ("r_symmetry", r(x2(), x1())),
            ("r_transitivity", r(x1(), x3())),
            ("negation_congruence", r(neg(x1()), neg(x2()))),
            ("conjunction_replacement", and(x2(), x3())),
            ("disjunction_replacement", or(x2(), x3())),
            ("box_congruence", r(bx(x1()), bx(x2()))),
            ("excluded_middle", parse("x1 | ~x1").unwrap()),
            ("disjunction_introduction", or(x1(), x2())),
            ("provable_equals_top", parse("x1 R (x1 | ~x1)").unwrap()),
        ];
        let got = corpus();
        assert_eq!(got.len(), want.len());
        for (entry, (name, conclusion)) in got.iter().zip(&want) {
            assert_eq!(entry.name, *name);
            assert_eq!(entry.script.conclusion(), Some(conclusion), "{name}");
        }
    }
}
