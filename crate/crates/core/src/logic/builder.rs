//! Programmatic script construction.
//!
//! Every method appends primitive lines (premise, axiom instance, `DS`, `N`)
//! and returns the index of the line holding its result, so the derived
//! rules compose into fully checkable scripts. The combinators mirror the
//! admissible rules of the calculus: symmetry, transitivity and congruence
//! steps for `R`, the De Morgan bridges between `&` and `|`, disjunction
//! introduction, and the box congruence.

use super::axioms::{AxiomId, MetaVar, Substitution};
use super::proof::{Justification, ProofLine, ProofScript};
use crate::term::{and, bx, neg, or, r, Term};

pub struct ProofBuilder {
    theory: Vec<Term>,
    lines: Vec<ProofLine>,
}

impl ProofBuilder {
    pub fn new(theory: Vec<Term>) -> ProofBuilder {
        ProofBuilder {
            theory,
            lines: Vec::new(),
        }
    }

    pub fn build(self) -> ProofScript {
        ProofScript {
            theory: self.theory,
            lines: self.lines,
        }
    }

    fn term_at(&self, index: usize) -> &Term {
        &self
            .lines
            .iter()
            .find(|l| l.index == index)
            .expect("builder references its own lines")
            .term
    }

    fn push(&mut self, term: Term, justification: Justification) -> usize {
        let index = self.lines.len() + 1;
        self.lines.push(ProofLine {
            index,
            term,
            justification,
        });
        index
    }

    // -- primitive steps ----------------------------------------------------

    pub fn premise(&mut self, t: Term) -> usize {
        assert!(self.theory.contains(&t), "premise `{t}` is not in the theory");
        self.push(t, Justification::Premise)
    }

    /// Instantiates a schema; the substitution is recorded in full.
    pub fn axiom(&mut self, id: AxiomId, bindings: &[(MetaVar, Term)]) -> usize {
        let mut subst = Substitution::default();
        for (m, t) in bindings {
            subst.0.insert(*m, t.clone());
        }
        assert!(
            id.side_condition_holds(&subst),
            "{id} requires central-shaped terms for {:?}",
            id.central_slots()
        );
        let term = id
            .schema()
            .instantiate(&subst)
            .unwrap_or_else(|| panic!("{id} needs metavariables {:?}", id.metavars()));
        self.push(
            term,
            Justification::Axiom {
                id,
                subst: Some(subst),
            },
        )
    }

    /// From `t` at `minor` and `~t | s` at `or_line`, concludes `s`.
    pub fn ds(&mut self, minor: usize, or_line: usize) -> usize {
        let expected_neg = neg(self.term_at(minor).clone());
        let s = match self.term_at(or_line) {
            Term::Or(l, rr) if **l == expected_neg => (**rr).clone(),
            other => panic!("DS shape mismatch: `{other}` does not start with `{expected_neg} |`"),
        };
        self.push(s, Justification::Ds { minor, or_line })
    }

    pub fn nec(&mut self, from: usize) -> usize {
        let t = bx(self.term_at(from).clone());
        self.push(t, Justification::Nec { from })
    }

    // -- derived one-step helpers -------------------------------------------

    /// Destructures the term at `index` as an (expanded) `t R s`.
    fn r_parts(&self, index: usize) -> (Term, Term) {
        let t = self.term_at(index);
        if let Term::Or(l, _) = t {
            if let Term::And(a, b) = l.as_ref() {
                return ((**a).clone(), (**b).clone());
            }
        }
        panic!("line {index} is not an R-term: {t}");
    }

    /// From `t R s` and `t`, concludes `s` (A13 + DS twice).
    pub fn mp_r(&mut self, r_line: usize, t_line: usize) -> usize {
        let (t, s) = self.r_parts(r_line);
        debug_assert_eq!(self.term_at(t_line), &t, "minor premise mismatch");
        let a13 = self.axiom(AxiomId::A13, &[(MetaVar::A, t), (MetaVar::B, s)]);
        let imp = self.ds(r_line, a13);
        self.ds(t_line, imp)
    }

    /// `t R s  =>  s R t`.
    pub fn sym(&mut self, r_line: usize) -> usize {
        let (t, s) = self.r_parts(r_line);
        let a12 = self.axiom(
            AxiomId::A12,
            &[(MetaVar::A, t.clone()), (MetaVar::B, s.clone())],
        );
        let a13 = self.axiom(
            AxiomId::A13,
            &[(MetaVar::A, r(t.clone(), s.clone())), (MetaVar::B, r(s, t))],
        );
        let imp = self.ds(a12, a13);
        self.ds(r_line, imp)
    }

    /// `t R s`, `s R w  =>  t R w`.
    pub fn trans(&mut self, first: usize, second: usize) -> usize {
        let (t, s) = self.r_parts(first);
        let (s2, w) = self.r_parts(second);
        debug_assert_eq!(s, s2, "transitivity needs a shared middle term");
        let a2 = self.axiom(
            AxiomId::A2,
            &[(MetaVar::A, t), (MetaVar::B, s), (MetaVar::C, w)],
        );
        let step = self.ds(first, a2);
        self.ds(second, step)
    }

    /// `t R s  =>  ~t R ~s`.
    pub fn neg_cong(&mut self, r_line: usize) -> usize {
        let (t, s) = self.r_parts(r_line);
        let a3 = self.axiom(AxiomId::A3, &[(MetaVar::A, t), (MetaVar::B, s)]);
        self.ds(r_line, a3)
    }

    /// `t R s  =>  (t & w) R (s & w)`.
    pub fn and_cong(&mut self, r_line: usize, w: &Term) -> usize {
        let (t, s) = self.r_parts(r_line);
        let a4 = self.axiom(
            AxiomId::A4,
            &[(MetaVar::A, t), (MetaVar::B, s), (MetaVar::C, w.clone())],
        );
        self.ds(r_line, a4)
    }

    /// `t R s  =>  (w & t) R (w & s)`, commuting around `and_cong`.
    pub fn and_cong_r(&mut self, r_line: usize, w: &Term) -> usize {
        let (t, s) = self.r_parts(r_line);
        let comm1 = self.axiom(
            AxiomId::A5,
            &[(MetaVar::A, w.clone()), (MetaVar::B, t.clone())],
        );
        let mid = self.and_cong(r_line, w);
        let head = self.trans(comm1, mid);
        let comm2 = self.axiom(
            AxiomId::A5,
            &[(MetaVar::A, s), (MetaVar::B, w.clone())],
        );
        self.trans(head, comm2)
    }

    /// `~t R ~s  =>  t R s`, through double negation.
    pub fn un_neg_cong(&mut self, r_line: usize) -> usize {
        let (nt, ns) = self.r_parts(r_line);
        let (t, s) = match (&nt, &ns) {
            (Term::Neg(t), Term::Neg(s)) => ((**t).clone(), (**s).clone()),
            _ => panic!("un_neg_cong wants negated operands, got {nt} R {ns}"),
        };
        let doubled = self.neg_cong(r_line);
        let a9t = self.axiom(AxiomId::A9, &[(MetaVar::A, t)]);
        let head = self.trans(a9t, doubled);
        let a9s = self.axiom(AxiomId::A9, &[(MetaVar::A, s)]);
        let tail = self.sym(a9s);
        self.trans(head, tail)
    }

    /// `(t | w) R ~(~t & ~w)`, the De Morgan bridge.
    pub fn or_as_neg_and(&mut self, t: &Term, w: &Term) -> usize {
        let a10 = self.axiom(
            AxiomId::A10,
            &[(MetaVar::A, t.clone()), (MetaVar::B, w.clone())],
        );
        let negated = self.neg_cong(a10);
        let a9 = self.axiom(AxiomId::A9, &[(MetaVar::A, or(t.clone(), w.clone()))]);
        self.trans(a9, negated)
    }

    /// `t R s  =>  (t | w) R (s | w)`.
    pub fn or_cong(&mut self, r_line: usize, w: &Term) -> usize {
        let (t, s) = self.r_parts(r_line);
        let negs = self.neg_cong(r_line);
        let conj = self.and_cong(negs, &neg(w.clone()));
        let bridge_t = self.or_as_neg_and(&t, w);
        let negated = self.neg_cong(conj);
        let head = self.trans(bridge_t, negated);
        let bridge_s = self.or_as_neg_and(&s, w);
        let tail = self.sym(bridge_s);
        self.trans(head, tail)
    }

    /// `t R s  =>  (w | t) R (w | s)`.
    pub fn or_cong_r(&mut self, r_line: usize, w: &Term) -> usize {
        let (t, s) = self.r_parts(r_line);
        let negs = self.neg_cong(r_line);
        let conj = self.and_cong_r(negs, &neg(w.clone()));
        let bridge_t = self.or_as_neg_and(w, &t);
        let negated = self.neg_cong(conj);
        let head = self.trans(bridge_t, negated);
        let bridge_s = self.or_as_neg_and(w, &s);
        let tail = self.sym(bridge_s);
        self.trans(head, tail)
    }

    /// `(t | s) R (s | t)`.
    pub fn or_comm(&mut self, t: &Term, s: &Term) -> usize {
        let a10_ts = self.axiom(
            AxiomId::A10,
            &[(MetaVar::A, t.clone()), (MetaVar::B, s.clone())],
        );
        let a5 = self.axiom(
            AxiomId::A5,
            &[(MetaVar::A, neg(t.clone())), (MetaVar::B, neg(s.clone()))],
        );
        let head = self.trans(a10_ts, a5);
        let a10_st = self.axiom(
            AxiomId::A10,
            &[(MetaVar::A, s.clone()), (MetaVar::B, t.clone())],
        );
        let tail = self.sym(a10_st);
        let negs = self.trans(head, tail);
        self.un_neg_cong(negs)
    }

    /// `(t | (s | w)) R ((t | s) | w)`.
    pub fn or_assoc(&mut self, t: &Term, s: &Term, w: &Term) -> usize {
        let (nt, ns, nw) = (neg(t.clone()), neg(s.clone()), neg(w.clone()));
        let a10_outer = self.axiom(
            AxiomId::A10,
            &[(MetaVar::A, t.clone()), (MetaVar::B, or(s.clone(), w.clone()))],
        );
        let a10_inner = self.axiom(
            AxiomId::A10,
            &[(MetaVar::A, s.clone()), (MetaVar::B, w.clone())],
        );
        let lifted = self.and_cong_r(a10_inner, &nt);
        let head = self.trans(a10_outer, lifted);
        let a6 = self.axiom(
            AxiomId::A6,
            &[
                (MetaVar::A, nt.clone()),
                (MetaVar::B, ns.clone()),
                (MetaVar::C, nw.clone()),
            ],
        );
        let head = self.trans(head, a6);
        let a10_ts = self.axiom(
            AxiomId::A10,
            &[(MetaVar::A, t.clone()), (MetaVar::B, s.clone())],
        );
        let packed = self.sym(a10_ts);
        let lifted2 = self.and_cong(packed, &nw);
        let head = self.trans(head, lifted2);
        let a10_final = self.axiom(
            AxiomId::A10,
            &[(MetaVar::A, or(t.clone(), s.clone())), (MetaVar::B, w.clone())],
        );
        let tail = self.sym(a10_final);
        let negs = self.trans(head, tail);
        self.un_neg_cong(negs)
    }

    /// `|- t | ~t`.
    pub fn excluded_middle(&mut self, t: &Term) -> usize {
        let a1 = self.axiom(AxiomId::A1, &[(MetaVar::A, t.clone())]);
        let a13 = self.axiom(
            AxiomId::A13,
            &[(MetaVar::A, t.clone()), (MetaVar::B, t.clone())],
        );
        let nt_or_t = self.ds(a1, a13);
        let comm = self.or_comm(&neg(t.clone()), t);
        self.mp_r(comm, nt_or_t)
    }

    /// From `t` at `t_line`, concludes `t | s`.
    pub fn or_intro(&mut self, t_line: usize, s: &Term) -> usize {
        let t = self.term_at(t_line).clone();
        let w = or(t.clone(), neg(t.clone()));
        let em = self.excluded_middle(&t);

        // (w | s) R w: the extra disjunct is absorbed because ~w is a
        // contradiction.
        let a10 = self.axiom(
            AxiomId::A10,
            &[(MetaVar::A, w.clone()), (MetaVar::B, s.clone())],
        );
        let neg_w = self.axiom(
            AxiomId::A10,
            &[(MetaVar::A, t.clone()), (MetaVar::B, neg(t.clone()))],
        );
        let a5 = self.axiom(
            AxiomId::A5,
            &[(MetaVar::A, neg(t.clone())), (MetaVar::B, neg(neg(t.clone())))],
        );
        let neg_w_flipped = self.trans(neg_w, a5); // ~w R (~~t & ~t)
        let a8 = self.axiom(
            AxiomId::A8,
            &[(MetaVar::A, neg(t.clone())), (MetaVar::B, neg(s.clone()))],
        );
        let neg_w_padded = self.trans(neg_w_flipped, a8); // ~w R ((~~t & ~t) & ~s)
        let conj = self.and_cong(neg_w_flipped, &neg(s.clone())); // (~w & ~s) R ((~~t & ~t) & ~s)
        let conj_sym = self.sym(conj);
        let absorbed = self.trans(neg_w_padded, conj_sym); // ~w R (~w & ~s)
        let absorbed_sym = self.sym(absorbed); // (~w & ~s) R ~w
        let head = self.trans(a10, absorbed_sym); // ~(w | s) R ~w
        let collapsed = self.un_neg_cong(head); // (w | s) R w
        let expand = self.sym(collapsed); // w R (w | s)
        let w_or_s = self.mp_r(expand, em); // (t | ~t) | s

        // Reassociate to ~t | (t | s) and cut with t.
        let comm = self.or_comm(&t, &neg(t.clone()));
        let shifted = self.or_cong(comm, s); // ((t|~t)|s) R ((~t|t)|s)
        let assoc = self.or_assoc(&neg(t.clone()), &t, s); // (~t|(t|s)) R ((~t|t)|s)
        let assoc_sym = self.sym(assoc);
        let reshaped = self.trans(shifted, assoc_sym); // ((t|~t)|s) R (~t|(t|s))
        let cut = self.mp_r(reshaped, w_or_s); // ~t | (t | s)
        self.ds(t_line, cut)
    }

    /// From `t R s` and `t & w`, concludes `s & w`.
    pub fn replace_in_and(&mut self, r_line: usize, and_line: usize) -> usize {
        let w = match self.term_at(and_line) {
            Term::And(_, w) => (**w).clone(),
            other => panic!("expected a conjunction, got {other}"),
        };
        let lifted = self.and_cong(r_line, &w);
        self.mp_r(lifted, and_line)
    }

    /// From `t R s` and `t | w`, concludes `s | w`.
    pub fn replace_in_or(&mut self, r_line: usize, or_line: usize) -> usize {
        let w = match self.term_at(or_line) {
            Term::Or(_, w) => (**w).clone(),
            other => panic!("expected a disjunction, got {other}"),
        };
        let lifted = self.or_cong(r_line, &w);
        self.mp_r(lifted, or_line)
    }

    /// `t R s  =>  []t R []s`.
    pub fn box_cong(&mut self, r_line: usize) -> usize {
        let (t, s) = self.r_parts(r_line);
        let conj = and(t.clone(), s.clone());
        let disj = or(t.clone(), s.clone());

        // (t&s) | ~(t|s), from the expansion of t R s.
        let a10 = self.axiom(
            AxiomId::A10,
            &[(MetaVar::A, t.clone()), (MetaVar::B, s.clone())],
        );
        let packed = self.sym(a10); // (~t & ~s) R ~(t | s)
        let reshaped = self.or_cong_r(packed, &conj);
        let folded = self.mp_r(reshaped, r_line); // (t&s) | ~(t|s)

        // Push the box through A22, N, A19.
        let a22 = self.axiom(
            AxiomId::A22,
            &[(MetaVar::A, conj.clone()), (MetaVar::B, disj.clone())],
        );
        let weakened = self.ds(folded, a22); // (t&s) | ~[](t|s)
        let boxed = self.nec(weakened);
        let a19 = self.axiom(
            AxiomId::A19,
            &[(MetaVar::A, conj.clone()), (MetaVar::B, disj.clone())],
        );
        let dist = self.mp_r(a19, boxed); // [](t&s) | ~[](t|s)

        // Split the boxed conjunction with A17.
        let a17 = self.axiom(
            AxiomId::A17,
            &[(MetaVar::A, t.clone()), (MetaVar::B, s.clone())],
        );
        let lifted = self.or_cong(a17, &neg(bx(disj.clone())));
        let split = self.mp_r(lifted, dist); // ([]t & []s) | ~[](t|s)

        // Trade ~[](t|s) for ~[]t & ~[]s via A23 against A24.
        let boxes = and(bx(t.clone()), bx(s.clone()));
        let neg_boxes = and(neg(bx(t.clone())), neg(bx(s.clone())));
        let a23 = self.axiom(
            AxiomId::A23,
            &[
                (MetaVar::C, boxes),
                (MetaVar::B, bx(disj.clone())),
                (MetaVar::A, neg_boxes),
            ],
        );
        let step = self.ds(split, a23);
        let a24 = self.axiom(
            AxiomId::A24,
            &[(MetaVar::A, t.clone()), (MetaVar::B, s.clone())],
        );
        self.ds(a24, step)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::proof::check_proof;
    use crate::term::var;

    fn checked(b: ProofBuilder) -> ProofScript {
        let script = b.build();
        let verdict = check_proof(&script).unwrap();
        for line in &verdict.lines {
            assert!(line.ok, "line {}: {}", line.index, line.reason);
        }
        script
    }

    #[test]
    fn mp_r_produces_the_right_hand_side() {
        let t = var(1);
        let s = var(2);
        let mut b = ProofBuilder::new(vec![r(t.clone(), s.clone()), t.clone()]);
        let rp = b.premise(r(t.clone(), s.clone()));
        let tp = b.premise(t);
        let out = b.mp_r(rp, tp);
        let script = checked(b);
        assert_eq!(script.lines.last().unwrap().index, out);
        assert_eq!(*script.conclusion().unwrap(), s);
    }

    #[test]
    fn sym_trans_neg_cong_compose() {
        let (x, y, z) = (var(1), var(2), var(3));
        let mut b = ProofBuilder::new(vec![r(x.clone(), y.clone()), r(y.clone(), z.clone())]);
        let xy = b.premise(r(x.clone(), y.clone()));
        let yz = b.premise(r(y.clone(), z.clone()));
        let xz = b.trans(xy, yz);
        let zx = b.sym(xz);
        let nzx = b.neg_cong(zx);
        let back = b.un_neg_cong(nzx);
        let script = checked(b);
        let _ = (nzx, back);
        assert_eq!(*script.conclusion().unwrap(), r(z, x));
    }

    #[test]
    fn or_comm_and_assoc_are_derivable() {
        let (x, y, z) = (var(1), var(2), var(3));
        let mut b = ProofBuilder::new(vec![]);
        b.or_comm(&x, &y);
        b.or_assoc(&x, &y, &z);
        let script = checked(b);
        assert!(script.lines.len() > 20, "nontrivial derivation expected");
    }

    #[test]
    fn excluded_middle_is_a_theorem() {
        let mut b = ProofBuilder::new(vec![]);
        b.excluded_middle(&var(1));
        let script = checked(b);
        assert_eq!(*script.conclusion().unwrap(), or(var(1), neg(var(1))));
    }

    #[test]
    fn or_intro_weakens() {
        let mut b = ProofBuilder::new(vec![var(1)]);
        let p = b.premise(var(1));
        b.or_intro(p, &var(2));
        let script = checked(b);
        assert_eq!(*script.conclusion().unwrap(), or(var(1), var(2)));
    }

    #[test]
    fn box_cong_derives_the_boxed_equivalence() {
        let (x, y) = (var(1), var(2));
        let mut b = ProofBuilder::new(vec![r(x.clone(), y.clone())]);
        let p = b.premise(r(x.clone(), y.clone()));
        b.box_cong(p);
        let script = checked(b);
        assert_eq!(*script.conclusion().unwrap(), r(bx(x), bx(y)));
    }
}
