//! Residuated endomaps of a finite lattice.
//!
//! In a finite lattice an order endomap has a residual exactly when it
//! preserves all joins (including the empty one), so the fast enumeration
//! walks assignments on the join-irreducibles and keeps the join-preserving
//! extensions. The definitional oracle enumerates every monotone self-map
//! and tests residual existence directly; both must agree on small lattices.

use std::collections::BTreeSet;

use super::FoulisError;
use crate::lattice::{Elem, FiniteOml};

/// An order endomap together with its residual.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResiduatedMap {
    pub graph: Vec<Elem>,
    pub residual: Vec<Elem>,
}

impl ResiduatedMap {
    pub fn apply(&self, x: Elem) -> Elem {
        self.graph[x]
    }

    /// Both maps are order homomorphisms and the pair satisfies
    /// `(f . f~)(x) <= x <= (f~ . f)(x)`.
    pub fn verify(&self, l: &FiniteOml) -> bool {
        let mono = |g: &[Elem]| {
            l.elements()
                .all(|x| l.elements().all(|y| !l.leq(x, y) || l.leq(g[x], g[y])))
        };
        mono(&self.graph)
            && mono(&self.residual)
            && l.elements().all(|x| {
                l.leq(self.graph[self.residual[x]], x) && l.leq(x, self.residual[self.graph[x]])
            })
    }
}

/// The residual of a join-preserving map: `y -> join { x : f(x) <= y }`.
fn residual_of(l: &FiniteOml, graph: &[Elem]) -> Vec<Elem> {
    l.elements()
        .map(|y| l.join_all(l.elements().filter(|&x| l.leq(graph[x], y))))
        .collect()
}

/// Enumerates the residuated endomaps via values on join-irreducibles,
/// sorted by graph. Fails when the lattice exceeds `cap`.
pub fn residuated_endomaps(l: &FiniteOml, cap: usize) -> Result<Vec<ResiduatedMap>, FoulisError> {
    let n = l.n();
    if n > cap {
        return Err(FoulisError::CapExceeded { n, cap });
    }
    let irr = l.join_irreducibles();
    let k = irr.len();
    // Downward closure masks: which irreducibles sit below each element.
    let below: Vec<Vec<usize>> = l
        .elements()
        .map(|x| (0..k).filter(|&i| l.leq(irr[i], x)).collect())
        .collect();

    let mut graphs = BTreeSet::new();
    let mut assign = vec![0usize; k];
    loop {
        let graph: Vec<Elem> = l
            .elements()
            .map(|x| l.join_all(below[x].iter().map(|&i| assign[i])))
            .collect();
        if join_preserving(l, &graph) {
            graphs.insert(graph);
        }
        // Next assignment, odometer order.
        let mut i = 0;
        loop {
            if i == k {
                let out = graphs
                    .into_iter()
                    .map(|graph| {
                        let residual = residual_of(l, &graph);
                        let m = ResiduatedMap { graph, residual };
                        assert!(m.verify(l), "join-preserving map failed the residual laws");
                        m
                    })
                    .collect();
                return Ok(out);
            }
            assign[i] += 1;
            if assign[i] < n {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

fn join_preserving(l: &FiniteOml, graph: &[Elem]) -> bool {
    graph[l.bot()] == l.bot()
        && l.elements().all(|x| {
            l.elements()
                .all(|y| graph[l.join(x, y)] == l.join(graph[x], graph[y]))
        })
}

/// Definitional oracle: every monotone self-map, residual existence tested
/// from the definition. Exponential; intended for lattices with at most 6
/// elements.
pub fn residuated_endomaps_oracle(l: &FiniteOml) -> Vec<ResiduatedMap> {
    let n = l.n();
    assert!(n <= 6, "oracle enumeration is n^n; keep it to toy sizes");
    let mut out = Vec::new();
    let mut graph = vec![0usize; n];
    'next: loop {
        if monotone(l, &graph) {
            if let Some(residual) = try_residual(l, &graph) {
                let m = ResiduatedMap {
                    graph: graph.clone(),
                    residual,
                };
                if m.verify(l) {
                    out.push(m);
                }
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                break 'next;
            }
            graph[i] += 1;
            if graph[i] < n {
                break;
            }
            graph[i] = 0;
            i += 1;
        }
    }
    out.sort_by(|a, b| a.graph.cmp(&b.graph));
    out
}

fn monotone(l: &FiniteOml, graph: &[Elem]) -> bool {
    l.elements()
        .all(|x| l.elements().all(|y| !l.leq(x, y) || l.leq(graph[x], graph[y])))
}

/// `max { x : f(x) <= y }` must exist for every `y`; when it does, it is the
/// join of the set and the residual is that map.
fn try_residual(l: &FiniteOml, graph: &[Elem]) -> Option<Vec<Elem>> {
    let mut residual = Vec::with_capacity(l.n());
    for y in l.elements() {
        let candidates: Vec<Elem> = l.elements().filter(|&x| l.leq(graph[x], y)).collect();
        let m = l.join_all(candidates.iter().copied());
        if !candidates.contains(&m) {
            return None;
        }
        residual.push(m);
    }
    Some(residual)
}

/// The Sasaki projection onto `a`: `x -> (x | ~a) & a`, with its residual.
pub fn sasaki_projection(l: &FiniteOml, a: Elem) -> ResiduatedMap {
    let graph: Vec<Elem> = l
        .elements()
        .map(|x| l.meet(l.join(x, l.neg(a)), a))
        .collect();
    let residual = residual_of(l, &graph);
    let m = ResiduatedMap { graph, residual };
    debug_assert!(m.verify(l), "sasaki projection onto {a} is not residuated");
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{builtin, parse_model_name};

    #[test]
    fn b2_has_exactly_zero_and_identity() {
        let l = builtin("boolean", &["1"]).unwrap();
        let maps = residuated_endomaps(&l, 8).unwrap();
        assert_eq!(maps.len(), 2);
        assert_eq!(maps[0].graph, vec![0, 0]);
        assert_eq!(maps[1].graph, vec![0, 1]);
    }

    #[test]
    fn b4_has_sixteen_maps() {
        let l = builtin("boolean", &["2"]).unwrap();
        let maps = residuated_endomaps(&l, 8).unwrap();
        assert_eq!(maps.len(), 16);
    }

    #[test]
    fn oracle_agrees_on_small_lattices() {
        for name in ["b2", "b4", "mo2"] {
            let l = parse_model_name(name).unwrap();
            let fast: Vec<Vec<Elem>> = residuated_endomaps(&l, 8)
                .unwrap()
                .into_iter()
                .map(|m| m.graph)
                .collect();
            let slow: Vec<Vec<Elem>> = residuated_endomaps_oracle(&l)
                .into_iter()
                .map(|m| m.graph)
                .collect();
            assert_eq!(fast, slow, "{name}: enumerations disagree");
        }
    }

    #[test]
    fn every_map_satisfies_the_residual_inequalities() {
        let l = parse_model_name("mo2").unwrap();
        for m in residuated_endomaps(&l, 8).unwrap() {
            assert!(m.verify(&l));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let l = parse_model_name("mo2xb2").unwrap();
        assert!(matches!(
            residuated_endomaps(&l, 8),
            Err(FoulisError::CapExceeded { n: 12, cap: 8 })
        ));
    }

    #[test]
    fn sasaki_projection_values() {
        let l = parse_model_name("mo2").unwrap();
        for a in l.elements() {
            let mu = sasaki_projection(&l, a);
            assert_eq!(mu.apply(l.bot()), l.bot());
            assert_eq!(mu.apply(l.top()), a);
        }
        // In mo2, distinct atoms join to 1, so mu_a(b) = a.
        let mu_a = sasaki_projection(&l, 1);
        assert_eq!(mu_a.apply(3), 1);
    }

    #[test]
    fn sasaki_projections_are_enumerated() {
        let l = parse_model_name("mo2").unwrap();
        let graphs: Vec<Vec<Elem>> = residuated_endomaps(&l, 8)
            .unwrap()
            .into_iter()
            .map(|m| m.graph)
            .collect();
        for a in l.elements() {
            assert!(graphs.contains(&sasaki_projection(&l, a).graph));
        }
    }
}
