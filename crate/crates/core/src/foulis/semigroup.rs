//! The semigroup of residuated endomaps of a lattice, multiplied by
//! composition, starred through the residual.

use std::collections::HashMap;

use super::{residuated_endomaps, sasaki_projection, FoulisError, ResiduatedMap, SemigroupOps, StarSemigroup};
use crate::lattice::{Elem, FiniteOml};

/// Default cap on the host lattice size for building the map semigroup.
pub const DEFAULT_FOULIS_CAP: usize = 8;

/// Default cap on materializing full Cayley tables (quadratic storage).
pub const DEFAULT_TABLE_CAP: usize = 1024;

/// Above this size the cubic axiom sweep is skipped at construction; the
/// laws hold structurally (composition is associative, the star conjugates
/// the residual) and every product still resolves through the closure index.
const VALIDATE_CAP: usize = 600;

/// The semigroup of all residuated endomaps of a lattice.
///
/// Elements are map indices; multiplication composes graphs and resolves
/// the result through an index of all graphs, which doubles as the closure
/// assertion: composing two enumerated maps outside the enumeration panics.
#[derive(Debug, Clone)]
pub struct FoulisSemigroup {
    host: FiniteOml,
    maps: Vec<ResiduatedMap>,
    index: HashMap<Vec<Elem>, usize>,
    star: Vec<usize>,
    zero: usize,
    mu: Vec<usize>,
    /// Bit i set iff i is in the range of the map.
    range_mask: Vec<u64>,
    /// Bit i set iff the map sends i to bottom.
    zero_mask: Vec<u64>,
}

/// Builds the semigroup of residuated endomaps over `l`.
pub fn foulis_semigroup(l: &FiniteOml, cap: usize) -> Result<FoulisSemigroup, FoulisError> {
    let maps = residuated_endomaps(l, cap)?;
    let index: HashMap<Vec<Elem>, usize> = maps
        .iter()
        .enumerate()
        .map(|(i, m)| (m.graph.clone(), i))
        .collect();
    let star: Vec<usize> = maps
        .iter()
        .map(|m| {
            // f*(x) = ~ f~(~x)
            let graph: Vec<Elem> = l.elements().map(|x| l.neg(m.residual[l.neg(x)])).collect();
            *index
                .get(&graph)
                .expect("star of a residuated map is residuated; enumeration incomplete")
        })
        .collect();
    let theta: Vec<Elem> = l.elements().map(|_| l.bot()).collect();
    let zero = index[&theta];
    let mu = l
        .elements()
        .map(|a| {
            let g = sasaki_projection(l, a);
            *index
                .get(&g.graph)
                .expect("sasaki projection is residuated; enumeration incomplete")
        })
        .collect();
    let range_mask = maps
        .iter()
        .map(|m| m.graph.iter().fold(0u64, |acc, &v| acc | (1 << v)))
        .collect();
    let zero_mask = maps
        .iter()
        .map(|m| {
            m.graph
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &v)| if v == l.bot() { acc | (1 << i) } else { acc })
        })
        .collect();
    let g = FoulisSemigroup {
        host: l.clone(),
        maps,
        index,
        star,
        zero,
        mu,
        range_mask,
        zero_mask,
    };
    // Closure under composition and the star-semigroup laws, exhaustively
    // while the quadratic/cubic cost is cheap. Materializing the table
    // resolves every product through the index, so it is the closure check.
    if g.maps.len() <= VALIDATE_CAP {
        g.to_star_semigroup(VALIDATE_CAP)?;
    }
    debug_assert_eq!(g.star(g.zero), g.zero, "theta is self-adjoint");
    Ok(g)
}

impl FoulisSemigroup {
    pub fn host(&self) -> &FiniteOml {
        &self.host
    }

    pub fn maps(&self) -> &[ResiduatedMap] {
        &self.maps
    }

    pub fn map(&self, i: usize) -> &ResiduatedMap {
        &self.maps[i]
    }

    /// Index of the Sasaki projection onto `a`.
    pub fn mu(&self, a: Elem) -> usize {
        self.mu[a]
    }

    pub fn index_of(&self, graph: &[Elem]) -> Option<usize> {
        self.index.get(graph).copied()
    }

    /// Materializes the full Cayley table when small enough to be practical.
    pub fn to_star_semigroup(&self, table_cap: usize) -> Result<StarSemigroup, FoulisError> {
        let n = self.maps.len();
        if n > table_cap {
            return Err(FoulisError::CapExceeded { n, cap: table_cap });
        }
        let mut cayley = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                cayley.push(self.mul(x, y));
            }
        }
        Ok(StarSemigroup::validate(cayley, self.star.clone(), self.zero)?)
    }
}

impl SemigroupOps for FoulisSemigroup {
    fn size(&self) -> usize {
        self.maps.len()
    }

    fn zero(&self) -> usize {
        self.zero
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        let gx = &self.maps[x].graph;
        let gy = &self.maps[y].graph;
        let composed: Vec<Elem> = gy.iter().map(|&v| gx[v]).collect();
        *self
            .index
            .get(&composed)
            .expect("composition of residuated maps is residuated; enumeration incomplete")
    }

    fn star(&self, x: usize) -> usize {
        self.star[x]
    }

    /// `x . y = theta` iff the range of `y` lands in the zero set of `x`.
    fn product_is_zero(&self, x: usize, y: usize) -> bool {
        self.range_mask[y] & !self.zero_mask[x] == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foulis::{projections, right_annihilator};
    use crate::lattice::parse_model_name;

    #[test]
    fn b2_semigroup_is_theta_and_identity() {
        let l = parse_model_name("b2").unwrap();
        let g = foulis_semigroup(&l, 8).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.zero(), 0);
        assert_eq!(g.star(g.zero()), g.zero());
        let table = g.to_star_semigroup(16).unwrap();
        assert_eq!(table.n(), 2);
    }

    #[test]
    fn b4_semigroup_has_sixteen_elements() {
        let l = parse_model_name("b4").unwrap();
        let g = foulis_semigroup(&l, 8).unwrap();
        assert_eq!(g.size(), 16);
        // The map p -> p, q -> 0 is the projection onto p. Its residual is
        // y -> max { x : f(x) <= y }, i.e. [q, 1, q, 1], and conjugating by
        // negation gives the map back: it is self-adjoint.
        let f = g.index_of(&[0, 1, 0, 1]).unwrap();
        assert_eq!(g.map(f).residual, vec![2, 3, 2, 3]);
        assert_eq!(g.star(f), f);
        assert_eq!(f, g.mu(1));
        let expect: Vec<Elem> = {
            let l = g.host();
            let m = g.map(f);
            l.elements().map(|x| l.neg(m.residual[l.neg(x)])).collect()
        };
        assert_eq!(g.map(g.star(f)).graph, expect);
    }

    #[test]
    fn mo2_semigroup_closes_and_validates() {
        let l = parse_model_name("mo2").unwrap();
        let g = foulis_semigroup(&l, 8).unwrap();
        assert_eq!(g.size(), 234);
        let table = g.to_star_semigroup(1024).unwrap();
        // Spot products agree between the table and composition.
        for (x, y) in [(0, 1), (3, 7), (100, 200), (233, 10)] {
            assert_eq!(table.mul(x, y), g.mul(x, y));
        }
    }

    #[test]
    fn mu_composition_matches_pointwise_composition() {
        let l = parse_model_name("mo2").unwrap();
        let g = foulis_semigroup(&l, 8).unwrap();
        for a in l.elements() {
            for b in l.elements() {
                let via_mul = g.mul(g.mu(a), g.mu(b));
                let ga = &g.map(g.mu(a)).graph;
                let gb = &g.map(g.mu(b)).graph;
                let pointwise: Vec<Elem> = gb.iter().map(|&v| ga[v]).collect();
                assert_eq!(g.map(via_mul).graph, pointwise);
            }
        }
    }

    #[test]
    fn annihilator_fast_path_matches_mul() {
        let l = parse_model_name("mo2").unwrap();
        let g = foulis_semigroup(&l, 8).unwrap();
        for x in (0..g.size()).step_by(17) {
            let viafast = right_annihilator(&g, x);
            for y in 0..g.size() {
                assert_eq!(viafast.contains(y), g.mul(x, y) == g.zero());
            }
        }
    }

    #[test]
    fn mu_p_annihilates_mu_q_in_b4() {
        let l = parse_model_name("b4").unwrap();
        let g = foulis_semigroup(&l, 8).unwrap();
        let (p, q) = (1, 2);
        let ann = right_annihilator(&g, g.mu(p));
        assert!(ann.contains(g.mu(q)), "mu_q annihilates mu_p on the right");
    }

    #[test]
    fn projections_include_all_sasaki_maps() {
        let l = parse_model_name("mo2").unwrap();
        let g = foulis_semigroup(&l, 8).unwrap();
        let projs = projections(&g);
        for a in l.elements() {
            assert!(projs.contains(&g.mu(a)), "mu_{a} is a projection");
        }
    }
}
