//! The axiom schemas of the calculus and syntactic schema matching.
//!
//! Schemas are patterns over the metavariables `a`, `b`, `c`; `R` inside a
//! schema expands exactly as it does in concrete terms. Matching a ground
//! term against a pattern determines the substitution uniquely, because
//! every metavariable occurrence sits at a fixed position.

use std::collections::BTreeMap;
use std::fmt;

use crate::term::{self, Term};

/// A schema metavariable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MetaVar {
    A,
    B,
    C,
}

impl fmt::Display for MetaVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetaVar::A => write!(f, "a"),
            MetaVar::B => write!(f, "b"),
            MetaVar::C => write!(f, "c"),
        }
    }
}

/// A total assignment of terms to the metavariables of one schema.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Substitution(pub BTreeMap<MetaVar, Term>);

impl Substitution {
    pub fn get(&self, m: MetaVar) -> Option<&Term> {
        self.0.get(&m)
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (m, t)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{m}={t}")?;
        }
        Ok(())
    }
}

/// Schema syntax: term constructors plus metavariables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pat {
    Meta(MetaVar),
    Zero,
    One,
    Neg(Box<Pat>),
    Box(Box<Pat>),
    And(Box<Pat>, Box<Pat>),
    Or(Box<Pat>, Box<Pat>),
}

fn ma() -> Pat {
    Pat::Meta(MetaVar::A)
}

fn mb() -> Pat {
    Pat::Meta(MetaVar::B)
}

fn mc() -> Pat {
    Pat::Meta(MetaVar::C)
}

fn pneg(p: Pat) -> Pat {
    Pat::Neg(Box::new(p))
}

fn pbox(p: Pat) -> Pat {
    Pat::Box(Box::new(p))
}

fn pand(p: Pat, q: Pat) -> Pat {
    Pat::And(Box::new(p), Box::new(q))
}

fn por(p: Pat, q: Pat) -> Pat {
    Pat::Or(Box::new(p), Box::new(q))
}

fn pr(p: Pat, q: Pat) -> Pat {
    por(pand(p.clone(), q.clone()), pand(pneg(p), pneg(q)))
}

impl Pat {
    pub fn metavars(&self) -> Vec<MetaVar> {
        let mut out = Vec::new();
        self.collect_metavars(&mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn collect_metavars(&self, out: &mut Vec<MetaVar>) {
        match self {
            Pat::Meta(m) => out.push(*m),
            Pat::Zero | Pat::One => {}
            Pat::Neg(p) | Pat::Box(p) => p.collect_metavars(out),
            Pat::And(p, q) | Pat::Or(p, q) => {
                p.collect_metavars(out);
                q.collect_metavars(out);
            }
        }
    }

    /// First-order matching of a ground term against the pattern.
    pub fn matches(&self, t: &Term, subst: &mut Substitution) -> bool {
        match (self, t) {
            (Pat::Meta(m), _) => match subst.0.get(m) {
                Some(bound) => bound == t,
                None => {
                    subst.0.insert(*m, t.clone());
                    true
                }
            },
            (Pat::Zero, Term::Zero) | (Pat::One, Term::One) => true,
            (Pat::Neg(p), Term::Neg(s)) | (Pat::Box(p), Term::Box(s)) => p.matches(s, subst),
            (Pat::And(p, q), Term::And(x, y)) | (Pat::Or(p, q), Term::Or(x, y)) => {
                p.matches(x, subst) && q.matches(y, subst)
            }
            _ => false,
        }
    }

    /// Applies a substitution; `None` when a metavariable is unassigned.
    pub fn instantiate(&self, subst: &Substitution) -> Option<Term> {
        Some(match self {
            Pat::Meta(m) => subst.get(*m)?.clone(),
            Pat::Zero => Term::Zero,
            Pat::One => Term::One,
            Pat::Neg(p) => term::neg(p.instantiate(subst)?),
            Pat::Box(p) => term::bx(p.instantiate(subst)?),
            Pat::And(p, q) => term::and(p.instantiate(subst)?, q.instantiate(subst)?),
            Pat::Or(p, q) => term::or(p.instantiate(subst)?, q.instantiate(subst)?),
        })
    }
}

macro_rules! axiom_ids {
    ($($name:ident => $label:literal),+ $(,)?) => {
        /// Identifier of one axiom schema of the calculus.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum AxiomId {
            $($name),+
        }

        impl AxiomId {
            pub const ALL: &'static [AxiomId] = &[$(AxiomId::$name),+];

            pub fn label(self) -> &'static str {
                match self {
                    $(AxiomId::$name => $label),+
                }
            }

            pub fn from_label(s: &str) -> Option<AxiomId> {
                match s {
                    $($label => Some(AxiomId::$name),)+
                    _ => None,
                }
            }
        }
    };
}

axiom_ids! {
    A0a => "A0a", A0b => "A0b",
    A1 => "A1", A2 => "A2", A3 => "A3", A4 => "A4", A5 => "A5", A6 => "A6",
    A7 => "A7", A8 => "A8", A9 => "A9", A10 => "A10", A11 => "A11", A12 => "A12",
    A13 => "A13", A14 => "A14", A15 => "A15", A16 => "A16", A17 => "A17",
    A18 => "A18", A19 => "A19", A20 => "A20", A21 => "A21", A22 => "A22",
    A23 => "A23", A24 => "A24",
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl AxiomId {
    /// The schema pattern, `R` pre-expanded.
    pub fn schema(self) -> Pat {
        use AxiomId::*;
        match self {
            A0a => pr(Pat::One, por(ma(), pneg(ma()))),
            A0b => pr(Pat::Zero, pand(ma(), pneg(ma()))),
            A1 => pr(ma(), ma()),
            A2 => por(
                pneg(pr(ma(), mb())),
                por(pneg(pr(mb(), mc())), pr(ma(), mc())),
            ),
            A3 => por(pneg(pr(ma(), mb())), pr(pneg(ma()), pneg(mb()))),
            A4 => por(
                pneg(pr(ma(), mb())),
                pr(pand(ma(), mc()), pand(mb(), mc())),
            ),
            A5 => pr(pand(ma(), mb()), pand(mb(), ma())),
            A6 => pr(pand(ma(), pand(mb(), mc())), pand(pand(ma(), mb()), mc())),
            A7 => pr(pand(ma(), por(ma(), mb())), ma()),
            A8 => pr(pand(pneg(ma()), ma()), pand(pand(pneg(ma()), ma()), mb())),
            A9 => pr(ma(), pneg(pneg(ma()))),
            A10 => pr(pneg(por(ma(), mb())), pand(pneg(ma()), pneg(mb()))),
            A11 => pr(por(ma(), pand(pneg(ma()), por(ma(), mb()))), por(ma(), mb())),
            A12 => pr(pr(ma(), mb()), pr(mb(), ma())),
            A13 => por(pneg(pr(ma(), mb())), por(pneg(ma()), mb())),
            A14 => pr(por(pbox(ma()), ma()), ma()),
            A15 => pr(pbox(por(ma(), pneg(ma()))), por(ma(), pneg(ma()))),
            A16 => pr(pbox(pbox(ma())), pbox(ma())),
            A17 => pr(pbox(pand(ma(), mb())), pand(pbox(ma()), pbox(mb()))),
            A18 => pr(
                por(pand(ma(), pbox(mb())), pand(ma(), pneg(pbox(mb())))),
                ma(),
            ),
            A19 => pr(
                pbox(por(ma(), pneg(pbox(mb())))),
                por(pbox(ma()), pneg(pbox(mb()))),
            ),
            A20 => pr(pbox(por(ma(), pbox(mb()))), por(pbox(ma()), pbox(mb()))),
            A21 => pr(
                por(
                    pbox(por(pneg(ma()), pand(mb(), ma()))),
                    por(pneg(pbox(ma())), pbox(mb())),
                ),
                por(pneg(pbox(ma())), pbox(mb())),
            ),
            A22 => por(pneg(por(ma(), pneg(mb()))), por(ma(), pneg(pbox(mb())))),
            A23 => por(
                pneg(por(mc(), pneg(mb()))),
                por(pneg(por(mb(), ma())), por(mc(), ma())),
            ),
            A24 => por(
                pbox(por(ma(), mb())),
                pand(pneg(pbox(ma())), pneg(pbox(mb()))),
            ),
        }
    }

    pub fn metavars(self) -> Vec<MetaVar> {
        self.schema().metavars()
    }
}

/// Terms whose value is central under every valuation: generated by the
/// constants and box-rooted subterms, closed under the lattice connectives
/// (the center is a subalgebra).
pub fn central_by_shape(t: &Term) -> bool {
    match t {
        Term::Zero | Term::One | Term::Box(_) => true,
        Term::Neg(s) => central_by_shape(s),
        Term::And(a, b) | Term::Or(a, b) => central_by_shape(a) && central_by_shape(b),
        Term::Var(_) => false,
    }
}

impl AxiomId {
    /// Metavariables restricted to central-shaped instances.
    ///
    /// The cut schema `A23` comes from a lattice law quantified over central
    /// elements; its unrestricted form is refutable (already on the
    /// six-element block lattice), while every use in the derived rules fills
    /// these slots with box-built terms. The side condition is therefore part
    /// of the schema.
    pub fn central_slots(self) -> &'static [MetaVar] {
        match self {
            AxiomId::A23 => &[MetaVar::B, MetaVar::C],
            _ => &[],
        }
    }

    /// Does the substitution respect the schema's centrality side condition?
    pub fn side_condition_holds(self, subst: &Substitution) -> bool {
        self.central_slots()
            .iter()
            .all(|m| subst.get(*m).is_some_and(central_by_shape))
    }
}

/// The generic instance of a schema: fresh distinct variables, boxed where
/// the slot demands a central shape.
pub fn canonical_instance(id: AxiomId) -> Substitution {
    let mut subst = Substitution::default();
    for (i, m) in id.metavars().into_iter().enumerate() {
        let fresh = crate::term::var(i as u32 + 1);
        let value = if id.central_slots().contains(&m) {
            crate::term::bx(fresh)
        } else {
            fresh
        };
        subst.0.insert(m, value);
    }
    subst
}

/// Every schema the term instantiates, with its (unique) substitution.
/// Side conditions are enforced: a shape match that violates one is not an
/// instance.
pub fn match_axiom(t: &Term) -> Vec<(AxiomId, Substitution)> {
    AxiomId::ALL
        .iter()
        .filter_map(|&id| {
            let mut subst = Substitution::default();
            if id.schema().matches(t, &mut subst) && id.side_condition_holds(&subst) {
                Some((id, subst))
            } else {
                None
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse;

    #[test]
    fn and_commutativity_matches_a5() {
        let t = parse("(x1 & x2) R (x2 & x1)").unwrap();
        let found = match_axiom(&t);
        assert_eq!(found.len(), 1);
        let (id, subst) = &found[0];
        assert_eq!(*id, AxiomId::A5);
        assert_eq!(subst.get(MetaVar::A), Some(&parse("x1").unwrap()));
        assert_eq!(subst.get(MetaVar::B), Some(&parse("x2").unwrap()));
    }

    #[test]
    fn reflexivity_matches_a1() {
        let t = parse("x3 R x3").unwrap();
        let found = match_axiom(&t);
        assert!(found.iter().any(|(id, s)| {
            *id == AxiomId::A1 && s.get(MetaVar::A) == Some(&parse("x3").unwrap())
        }));
    }

    #[test]
    fn a_bare_disjunction_matches_nothing() {
        assert!(match_axiom(&parse("x1 | x2").unwrap()).is_empty());
    }

    #[test]
    fn substitutions_reproduce_the_matched_term() {
        // Instantiate every schema with its canonical fresh instance, then
        // confirm the match round-trips the exact substitution.
        for &id in AxiomId::ALL {
            let subst = canonical_instance(id);
            let t = id.schema().instantiate(&subst).unwrap();
            let found = match_axiom(&t);
            let hit = found.iter().find(|(got, _)| *got == id);
            let (_, got_subst) = hit.unwrap_or_else(|| panic!("{id} failed to match itself"));
            assert_eq!(got_subst, &subst, "{id} substitution drifted");
            assert_eq!(id.schema().instantiate(got_subst).unwrap(), t);
        }
    }

    #[test]
    fn a23_without_central_shapes_is_not_an_instance() {
        let mut subst = Substitution::default();
        subst.0.insert(MetaVar::A, crate::term::var(1));
        subst.0.insert(MetaVar::B, crate::term::var(2));
        subst.0.insert(MetaVar::C, crate::term::var(3));
        let t = AxiomId::A23.schema().instantiate(&subst).unwrap();
        assert!(
            !match_axiom(&t).iter().any(|(id, _)| *id == AxiomId::A23),
            "the side condition must reject bare variables"
        );
    }

    #[test]
    fn central_shapes_are_recognized() {
        let yes = ["0", "1", "[]x1", "~[]x1", "[]x1 & ~[]x2", "[](x1 | x2) | 0"];
        let no = ["x1", "~x1", "[]x1 & x2", "x1 | []x2"];
        for s in yes {
            assert!(central_by_shape(&crate::term::parse(s).unwrap()), "{s}");
        }
        for s in no {
            assert!(!central_by_shape(&crate::term::parse(s).unwrap()), "{s}");
        }
    }

    #[test]
    fn partial_substitution_instantiates_to_none() {
        assert_eq!(AxiomId::A2.schema().instantiate(&Substitution::default()), None);
    }

    #[test]
    fn a13_instance_matches_with_both_parts() {
        let t = parse("~(x1 R x2) | (~x1 | x2)").unwrap();
        let found = match_axiom(&t);
        assert!(found.iter().any(|(id, _)| *id == AxiomId::A13));
    }
}
