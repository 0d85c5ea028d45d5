//! Point semantics over Baer star-semigroups.
//!
//! A frame is a semigroup whose closed projections form a Boolean-saturated
//! orthomodular lattice, together with a valuation into those projections.
//! Truth at a point follows the forcing clauses — variables by right-ideal
//! membership, conjunction pointwise, negation by annihilation against all
//! points forcing the operand, box through a central closed projection —
//! and disjunction evaluates through its De Morgan definition.
//!
//! The negation clause exists in two readings, `y* . x = 0` and
//! `y' . x = 0`; both are implemented and the truth-ideal identity
//! (`verify_truth_ideals`) is the arbiter between them. The box clause can
//! also be deliberately weakened (dropping centrality) as a negative
//! control for the same identity.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::bits::Bits;
use crate::foulis::{ClosedProjectionLattice, LatticeRepresentation, SemigroupOps};
use crate::lattice::{center, Elem};
use crate::modal::{eval_term, saturate, ModalError, ModalOml, Valuation};
use crate::term::Term;

/// Which product must vanish in the negation clause.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NegationStyle {
    /// `y* . x = 0` for every `y` forcing the operand.
    Star,
    /// `y' . x = 0` for every `y` forcing the operand.
    Prime,
}

impl std::fmt::Display for NegationStyle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NegationStyle::Star => write!(f, "star"),
            NegationStyle::Prime => write!(f, "prime"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForcingConfig {
    pub negation: NegationStyle,
    /// The box clause demands a central witness; turning this off is the
    /// deliberate mutation used as a negative control.
    pub box_requires_central: bool,
}

impl Default for ForcingConfig {
    fn default() -> ForcingConfig {
        ForcingConfig {
            negation: NegationStyle::Star,
            box_requires_central: true,
        }
    }
}

/// Everything about a semigroup that forcing needs, shared across frames.
pub struct FrameContext<G> {
    pub semigroup: G,
    pub pc: ClosedProjectionLattice,
    /// The closed-projection lattice with its box operator.
    pub modal_pc: ModalOml,
    /// Central elements of the projection lattice, as lattice element ids.
    pub central_elems: Vec<Elem>,
    /// `annihilated_star[x]` = set of `y` with `y* . x = 0`.
    annihilated_star: Vec<Bits>,
    /// `annihilated_prime[x]` = set of `y` with `y' . x = 0`.
    annihilated_prime: Vec<Bits>,
}

impl<G: SemigroupOps> FrameContext<G> {
    pub fn new(semigroup: G, pc: ClosedProjectionLattice) -> FrameContext<G> {
        let n = semigroup.size();
        let modal_pc = saturate(pc.lattice.clone());
        debug_assert!(
            crate::modal::report_passes(&crate::modal::verify_s_axioms(&modal_pc)),
            "closed projections failed saturation"
        );
        let central_elems = center(&pc.lattice);
        let mut annihilated_star = vec![Bits::empty(n); n];
        let mut annihilated_prime = vec![Bits::empty(n); n];
        for y in 0..n {
            let ys = semigroup.star(y);
            let yp = pc.prime[y];
            for x in 0..n {
                if semigroup.product_is_zero(ys, x) {
                    annihilated_star[x].insert(y);
                }
                if semigroup.product_is_zero(yp, x) {
                    annihilated_prime[x].insert(y);
                }
            }
        }
        FrameContext {
            semigroup,
            pc,
            modal_pc,
            central_elems,
            annihilated_star,
            annihilated_prime,
        }
    }

    fn ideal(&self, e: Elem) -> &Bits {
        &self.pc.ideals[e]
    }

    fn annihilated(&self, style: NegationStyle, x: usize) -> &Bits {
        match style {
            NegationStyle::Star => &self.annihilated_star[x],
            NegationStyle::Prime => &self.annihilated_prime[x],
        }
    }
}

/// A modal orthomodular frame: shared semigroup context plus a valuation
/// into the closed-projection lattice.
pub struct ModalFrame<G> {
    pub ctx: Arc<FrameContext<G>>,
    /// Variable index to element of `ctx.pc.lattice`.
    pub valuation: BTreeMap<u32, Elem>,
    pub config: ForcingConfig,
    memo: RefCell<HashMap<Term, Bits>>,
}

impl<G: SemigroupOps> ModalFrame<G> {
    pub fn new(
        ctx: Arc<FrameContext<G>>,
        valuation: BTreeMap<u32, Elem>,
        config: ForcingConfig,
    ) -> ModalFrame<G> {
        for (&v, &e) in &valuation {
            assert!(
                e < ctx.pc.lattice.n(),
                "valuation of x{v} is not a closed projection"
            );
        }
        ModalFrame {
            ctx,
            valuation,
            config,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn points(&self) -> usize {
        self.ctx.semigroup.size()
    }

    /// Evaluates the term algebraically in the projection lattice.
    pub fn algebraic_value(&self, t: &Term) -> Result<Elem, ModalError> {
        eval_term(&self.ctx.modal_pc, t, &self.valuation)
    }

    /// The set of points where the term is true.
    pub fn truth_set(&self, t: &Term) -> Result<Bits, ModalError> {
        if let Some(hit) = self.memo.borrow().get(t) {
            return Ok(hit.clone());
        }
        let ctx = &self.ctx;
        let out = match t {
            Term::Var(i) => {
                let e = *self
                    .valuation
                    .get(i)
                    .ok_or(ModalError::UnboundVariable(*i))?;
                ctx.ideal(e).clone()
            }
            Term::One => ctx.ideal(ctx.pc.lattice.top()).clone(),
            Term::Zero => ctx.ideal(ctx.pc.lattice.bot()).clone(),
            Term::And(a, b) => {
                let mut ts = self.truth_set(a)?;
                ts.intersect_with(&self.truth_set(b)?);
                ts
            }
            Term::Neg(a) => self.negate(&self.truth_set(a)?),
            Term::Box(a) => self.boxed(&self.truth_set(a)?),
            Term::Or(a, b) => {
                // a | b forces as ~(~a & ~b).
                let mut inner = self.negate(&self.truth_set(a)?);
                inner.intersect_with(&self.negate(&self.truth_set(b)?));
                self.negate(&inner)
            }
        };
        self.memo.borrow_mut().insert(t.clone(), out.clone());
        Ok(out)
    }

    /// Truth at one point.
    pub fn forces(&self, x: usize, t: &Term) -> Result<bool, ModalError> {
        Ok(self.truth_set(t)?.contains(x))
    }

    /// Every point forces the term.
    pub fn valid(&self, t: &Term) -> Result<bool, ModalError> {
        Ok(self.truth_set(t)?.is_full())
    }

    fn negate(&self, forced: &Bits) -> Bits {
        let mut out = Bits::empty(self.points());
        for x in 0..self.points() {
            if forced.is_subset(self.ctx.annihilated(self.config.negation, x)) {
                out.insert(x);
            }
        }
        out
    }

    fn boxed(&self, forced: &Bits) -> Bits {
        let ctx = &self.ctx;
        let mut out = Bits::empty(self.points());
        let all_closed: Vec<Elem>;
        let candidates: &[Elem] = if self.config.box_requires_central {
            &ctx.central_elems
        } else {
            all_closed = (0..ctx.pc.lattice.n()).collect();
            &all_closed
        };
        for &z in candidates {
            if forced.contains(ctx.pc.carrier[z]) {
                out.union_with(ctx.ideal(z));
            }
        }
        out
    }
}

/// Builds the frame of a lattice from its representation: the valuation is
/// pushed through `a -> mu_a`.
pub fn frame_from_lattice(
    rep: &Arc<FrameContext<crate::foulis::FoulisSemigroup>>,
    iso_map: &[Elem],
    v: &Valuation,
    config: ForcingConfig,
) -> ModalFrame<crate::foulis::FoulisSemigroup> {
    let u = v.iter().map(|(&var, &a)| (var, iso_map[a])).collect();
    ModalFrame::new(rep.clone(), u, config)
}

/// Wraps a verified representation into a shareable frame context.
pub fn context_from_representation(
    rep: LatticeRepresentation,
) -> (Arc<FrameContext<crate::foulis::FoulisSemigroup>>, Vec<Elem>) {
    let iso_map = rep.iso.map.clone();
    let ctx = Arc::new(FrameContext::new(rep.semigroup, rep.pc));
    (ctx, iso_map)
}

/// One checked identity in a frame report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameCheck {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

/// The three right-ideal identities relating the valuation to truth sets:
/// meets intersect ideals, negation is star-annihilation of the ideal, and
/// a boxed ideal is the union of central ideals below.
pub fn verify_ideal_identities<G: SemigroupOps>(
    frame: &ModalFrame<G>,
    t: &Term,
    s: &Term,
) -> Result<Vec<FrameCheck>, ModalError> {
    let ctx = &frame.ctx;
    let l = &ctx.pc.lattice;
    let ut = frame.algebraic_value(t)?;
    let us = frame.algebraic_value(s)?;
    let mut out = Vec::new();

    let meet_ideal = {
        let both = frame.algebraic_value(&crate::term::and(t.clone(), s.clone()))?;
        let mut expect = ctx.ideal(ut).clone();
        expect.intersect_with(ctx.ideal(us));
        *ctx.ideal(both) == expect
    };
    out.push(FrameCheck {
        name: "MEET_IDEAL".into(),
        ok: meet_ideal,
        detail: format!("t={t} s={s}"),
    });

    let neg_ideal = {
        let nt = frame.algebraic_value(&crate::term::neg(t.clone()))?;
        let ideal_t = ctx.ideal(ut);
        let mut expect = Bits::empty(ctx.semigroup.size());
        for x in 0..ctx.semigroup.size() {
            if ideal_t.is_subset(&ctx.annihilated_star[x]) {
                expect.insert(x);
            }
        }
        *ctx.ideal(nt) == expect
    };
    out.push(FrameCheck {
        name: "NEG_IDEAL".into(),
        ok: neg_ideal,
        detail: format!("t={t}"),
    });

    let box_ideal = {
        let bt = frame.algebraic_value(&crate::term::bx(t.clone()))?;
        let mut expect = Bits::empty(ctx.semigroup.size());
        for &z in &ctx.central_elems {
            if l.leq(z, ut) {
                expect.union_with(ctx.ideal(z));
            }
        }
        *ctx.ideal(bt) == expect
    };
    out.push(FrameCheck {
        name: "BOX_IDEAL".into(),
        ok: box_ideal,
        detail: format!("t={t}"),
    });
    Ok(out)
}

/// The master invariant: the truth set of each term equals the right ideal
/// of its algebraic value.
pub fn verify_truth_ideals<G: SemigroupOps>(
    frame: &ModalFrame<G>,
    terms: &[Term],
) -> Result<Vec<FrameCheck>, ModalError> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let ts = frame.truth_set(t)?;
        let ideal = frame.ctx.ideal(frame.algebraic_value(t)?);
        out.push(FrameCheck {
            name: "TRUTH_IDEAL".into(),
            ok: ts == *ideal,
            detail: t.to_string(),
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrameVerdict {
    HoldsOnFrames,
    /// Index of the first refuting frame.
    Counterframe { frame: usize },
}

/// Consequence over a finite family of frames: whenever every premise is
/// valid on a frame, the conclusion must be valid there too.
pub fn frame_consequence<G: SemigroupOps>(
    premises: &[Term],
    conclusion: &Term,
    frames: &[ModalFrame<G>],
) -> Result<FrameVerdict, ModalError> {
    for (i, frame) in frames.iter().enumerate() {
        let mut premises_valid = true;
        for p in premises {
            if !frame.valid(p)? {
                premises_valid = false;
                break;
            }
        }
        if premises_valid && !frame.valid(conclusion)? {
            return Ok(FrameVerdict::Counterframe { frame: i });
        }
    }
    Ok(FrameVerdict::HoldsOnFrames)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foulis::{represent, FoulisSemigroup};
    use crate::lattice::parse_model_name;
    use crate::term::{enumerate_terms, parse};

    fn frame_over(
        name: &str,
        vals: &[(u32, Elem)],
        config: ForcingConfig,
    ) -> ModalFrame<FoulisSemigroup> {
        let l = parse_model_name(name).unwrap();
        let rep = represent(&l, 8).unwrap();
        let (ctx, iso) = context_from_representation(rep);
        let v: Valuation = vals.iter().copied().collect();
        frame_from_lattice(&ctx, &iso, &v, config)
    }

    #[test]
    fn zero_point_forces_every_variable() {
        let f = frame_over("mo2", &[(1, 3)], ForcingConfig::default());
        let zero = f.ctx.semigroup.zero();
        assert!(f.forces(zero, &parse("x1").unwrap()).unwrap());
    }

    #[test]
    fn full_valuation_forces_everywhere() {
        let l = parse_model_name("b2").unwrap();
        let f = frame_over("b2", &[(1, l.top())], ForcingConfig::default());
        assert!(f.valid(&parse("x1").unwrap()).unwrap());
    }

    #[test]
    fn sasaki_point_forces_its_own_variable() {
        // u(x1) = mu_a: the point mu_a forces x1, mu_~a does not.
        let l = parse_model_name("mo2").unwrap();
        let rep = represent(&l, 8).unwrap();
        let (ctx, iso) = context_from_representation(rep.clone());
        let v: Valuation = [(1, 1)].into();
        let f = frame_from_lattice(&ctx, &iso, &v, ForcingConfig::default());
        let mu_a = rep.semigroup.mu(1);
        let mu_na = rep.semigroup.mu(2);
        assert!(f.forces(mu_a, &parse("x1").unwrap()).unwrap());
        assert!(!f.forces(mu_na, &parse("x1").unwrap()).unwrap());
    }

    #[test]
    fn constant_truth_sets() {
        let f = frame_over("mo2", &[], ForcingConfig::default());
        assert!(f.truth_set(&parse("1").unwrap()).unwrap().is_full());
        let zero_set = f.truth_set(&parse("0").unwrap()).unwrap();
        assert_eq!(zero_set.count(), 1);
        assert!(zero_set.contains(f.ctx.semigroup.zero()));
    }

    #[test]
    fn boxed_variable_collapses_to_zero_ideal_on_mo2() {
        let f = frame_over("mo2", &[(1, 1)], ForcingConfig::default());
        let ts = f.truth_set(&parse("[]x1").unwrap()).unwrap();
        assert_eq!(ts.count(), 1, "box a = 0 in mo2, and the zero ideal is a point");
    }

    #[test]
    fn ideal_identities_hold_on_small_frames() {
        for name in ["b2", "b4"] {
            let l = parse_model_name(name).unwrap();
            for e in l.elements() {
                let f = frame_over(name, &[(1, e), (2, l.neg(e))], ForcingConfig::default());
                for c in
                    verify_ideal_identities(&f, &parse("x1").unwrap(), &parse("x2").unwrap())
                        .unwrap()
                {
                    assert!(c.ok, "{name}: {} {}", c.name, c.detail);
                }
            }
        }
    }

    #[test]
    fn meet_of_complements_has_point_ideal() {
        let f = frame_over("mo2", &[(1, 1)], ForcingConfig::default());
        let t = parse("x1 & ~x1").unwrap();
        let ts = f.truth_set(&t).unwrap();
        assert_eq!(ts.count(), 1);
    }

    #[test]
    fn truth_ideals_hold_for_small_terms_under_star() {
        let terms = enumerate_terms(3, &[1, 2]);
        for name in ["b2", "mo2"] {
            let l = parse_model_name(name).unwrap();
            let f = frame_over(name, &[(1, 1), (2, l.neg(1))], ForcingConfig::default());
            for c in verify_truth_ideals(&f, &terms).unwrap() {
                assert!(c.ok, "{name}: TRUTH_IDEAL failed on {}", c.detail);
            }
        }
    }

    #[test]
    fn prime_negation_breaks_the_truth_ideal_on_b2() {
        let cfg = ForcingConfig {
            negation: NegationStyle::Prime,
            ..ForcingConfig::default()
        };
        let f = frame_over("b2", &[(1, 0)], cfg);
        let checks = verify_truth_ideals(&f, &[parse("~x1").unwrap()]).unwrap();
        assert!(!checks[0].ok, "the prime reading should break on ~x1 with u(x1) = 0");
    }

    #[test]
    fn mutated_box_clause_breaks_the_truth_ideal_on_mo2() {
        let cfg = ForcingConfig {
            box_requires_central: false,
            ..ForcingConfig::default()
        };
        let f = frame_over("mo2", &[(1, 1)], cfg);
        let checks = verify_truth_ideals(&f, &[parse("[]x1").unwrap()]).unwrap();
        assert!(!checks[0].ok, "dropping centrality should break []x1");
    }

    #[test]
    fn frame_consequence_examples() {
        let l = parse_model_name("b2").unwrap();
        let frames: Vec<_> = l
            .elements()
            .map(|e| frame_over("b2", &[(1, e)], ForcingConfig::default()))
            .collect();
        assert_eq!(
            frame_consequence(
                &[parse("x1").unwrap()],
                &parse("[]x1").unwrap(),
                &frames
            )
            .unwrap(),
            FrameVerdict::HoldsOnFrames
        );
        assert_eq!(
            frame_consequence(&[], &parse("x1").unwrap(), &frames).unwrap(),
            FrameVerdict::Counterframe { frame: 0 }
        );
    }

    #[test]
    fn frames_work_over_raw_table_semigroups() {
        // Validation-level support: a frame straight over Cayley tables,
        // without the map-semigroup detour.
        let table = crate::foulis::StarSemigroup::validate(
            vec![0, 0, 0, 1],
            vec![0, 1],
            0,
        )
        .unwrap();
        let pc = crate::foulis::closed_projections(&table).unwrap();
        let ctx = Arc::new(FrameContext::new(table, pc));
        let top = ctx.pc.lattice.top();
        let f = ModalFrame::new(ctx, [(1, top)].into(), ForcingConfig::default());
        assert!(f.valid(&parse("x1").unwrap()).unwrap());
        for c in verify_truth_ideals(&f, &enumerate_terms(4, &[1])).unwrap() {
            assert!(c.ok, "table-backed frame broke on {}", c.detail);
        }
    }

    #[test]
    fn validity_bridges_to_algebraic_truth() {
        let l = parse_model_name("mo2").unwrap();
        let m = crate::modal::saturate(l.clone());
        let rep = represent(&l, 8).unwrap();
        let (ctx, iso) = context_from_representation(rep);
        for t in enumerate_terms(4, &[1]) {
            for a in l.elements() {
                let v: Valuation = [(1, a)].into();
                let f = frame_from_lattice(&ctx, &iso, &v, ForcingConfig::default());
                let frame_valid = f.valid(&t).unwrap();
                let alg = eval_term(&m, &t, &v).unwrap() == l.top();
                assert_eq!(frame_valid, alg, "bridge broke on {t} at {a}");
            }
        }
    }
}
