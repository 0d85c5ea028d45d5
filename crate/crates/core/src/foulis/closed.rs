//! Closed projections of a Baer star-semigroup and the reconstruction of the
//! orthomodular lattice they form.
//!
//! For every element `x` there must be a unique projection `e` whose right
//! ideal equals the right annihilator of `x`; that `e` is written `x'`. The
//! closed projections are the image of `'`, ordered by `e <= f iff e*f = e`,
//! with `e /\ f = e * (f' * e)'` and the join by De Morgan.

use std::collections::HashMap;

use super::{foulis_semigroup, projections, right_annihilator, right_ideal, FoulisError, FoulisSemigroup, SemigroupOps};
use crate::bits::Bits;
use crate::lattice::{find_isomorphism, Elem, FiniteOml, LatticeIso, RawLattice};
use crate::modal::{saturate, ModalOml};

/// The lattice of closed projections, with the back-maps into the semigroup.
#[derive(Debug, Clone)]
pub struct ClosedProjectionLattice {
    /// Semigroup ids of the closed projections, ascending; lattice element
    /// `i` is `carrier[i]`.
    pub carrier: Vec<usize>,
    /// The derived orthomodular lattice over the carrier.
    pub lattice: FiniteOml,
    /// `prime[x]` is the unique projection with `ideal(prime[x]) = ann(x)`,
    /// for every semigroup element.
    pub prime: Vec<usize>,
    /// Right ideal of each carrier element.
    pub ideals: Vec<Bits>,
    /// For each carrier element, a witness `x` whose annihilator defines it.
    pub witnesses: Vec<usize>,
}

impl ClosedProjectionLattice {
    /// Lattice element id of a semigroup element, when it is a closed
    /// projection.
    pub fn elem_of(&self, sg_id: usize) -> Option<Elem> {
        self.carrier.binary_search(&sg_id).ok()
    }
}

/// Finds all closed projections of `g` and builds their lattice.
pub fn closed_projections<G: SemigroupOps>(g: &G) -> Result<ClosedProjectionLattice, FoulisError> {
    let n = g.size();

    // Right ideals of all projections, grouped by ideal.
    let projs = projections(g);
    let mut ideal_of_proj: HashMap<Bits, Vec<usize>> = HashMap::new();
    for &e in &projs {
        ideal_of_proj.entry(right_ideal(g, e)).or_default().push(e);
    }

    // The representing projection of each annihilator; annihilators repeat
    // heavily, so resolve distinct sets once.
    let mut rep_of_ann: HashMap<Bits, usize> = HashMap::new();
    let mut prime = vec![0usize; n];
    let mut witness_of_proj: HashMap<usize, usize> = HashMap::new();
    for (x, slot) in prime.iter_mut().enumerate() {
        let ann = right_annihilator(g, x);
        let e = match rep_of_ann.get(&ann) {
            Some(&e) => e,
            None => {
                let matches = ideal_of_proj.get(&ann).map_or(&[][..], Vec::as_slice);
                let &e = match matches {
                    [] => return Err(FoulisError::NotBaer { x }),
                    [e] => e,
                    [e1, e2, ..] => {
                        return Err(FoulisError::NonUniqueProjection {
                            x,
                            e1: *e1,
                            e2: *e2,
                        })
                    }
                };
                rep_of_ann.insert(ann, e);
                e
            }
        };
        *slot = e;
        witness_of_proj.entry(e).or_insert(x);
    }

    let mut carrier: Vec<usize> = rep_of_ann.values().copied().collect();
    carrier.sort_unstable();
    carrier.dedup();
    let k = carrier.len();
    let ideals: Vec<Bits> = carrier.iter().map(|&e| right_ideal(g, e)).collect();
    let elem_of = |sg: usize| carrier.binary_search(&sg).expect("closed under prime");

    // Order: e <= f iff e*f = e, cross-checked against ideal inclusion.
    let mut leq_pairs = Vec::new();
    for (i, &e) in carrier.iter().enumerate() {
        for (j, &f) in carrier.iter().enumerate() {
            let by_product = g.mul(e, f) == e;
            let by_ideal = ideals[i].is_subset(&ideals[j]);
            if by_product != by_ideal {
                return Err(FoulisError::BadProjectionLattice(format!(
                    "order definitions disagree at ({e}, {f})"
                )));
            }
            if by_product {
                leq_pairs.push((i, j));
            }
        }
    }

    let bot = elem_of(g.zero());
    let top = elem_of(prime[g.zero()]);
    let neg_pairs: Vec<(Elem, Elem)> = (0..k).map(|i| (i, elem_of(prime[carrier[i]]))).collect();
    let raw = RawLattice {
        names: carrier.iter().map(|e| format!("g{e}")).collect(),
        leq: leq_pairs,
        neg: neg_pairs,
        bot,
        top,
    };
    let lattice = raw
        .validate_capped(k)
        .map_err(|d| FoulisError::BadProjectionLattice(d.to_string()))?;

    // The displayed meet and join formulas must agree with the order.
    for i in 0..k {
        for j in 0..k {
            let (e1, e2) = (carrier[i], carrier[j]);
            let meet = g.mul(e1, prime[g.mul(prime[e2], e1)]);
            if elem_of(meet) != lattice.meet(i, j) {
                return Err(FoulisError::BadProjectionLattice(format!(
                    "meet formula disagrees with the order at ({e1}, {e2})"
                )));
            }
            // e1 \/ e2 = (e1' /\ e2')', with the meet formula expanded.
            let join = prime[g.mul(prime[e1], prime[g.mul(prime[prime[e2]], prime[e1])])];
            if elem_of(join) != lattice.join(i, j) {
                return Err(FoulisError::BadProjectionLattice(format!(
                    "join formula disagrees with the order at ({e1}, {e2})"
                )));
            }
        }
    }

    let witnesses = carrier.iter().map(|e| witness_of_proj[e]).collect();
    Ok(ClosedProjectionLattice {
        carrier,
        lattice,
        prime,
        ideals,
        witnesses,
    })
}

/// A lattice, its map semigroup, and the verified isomorphism onto the
/// closed projections.
#[derive(Debug, Clone)]
pub struct LatticeRepresentation {
    pub semigroup: FoulisSemigroup,
    pub pc: ClosedProjectionLattice,
    /// `iso.map[a]` is the lattice element of `mu_a` inside `pc.lattice`.
    pub iso: LatticeIso,
}

/// Builds the semigroup of `l`, its closed projections, and checks that
/// `a -> mu_a` is an isomorphism onto them.
pub fn represent(l: &FiniteOml, cap: usize) -> Result<LatticeRepresentation, FoulisError> {
    let semigroup = foulis_semigroup(l, cap)?;
    let pc = closed_projections(&semigroup)?;
    if pc.carrier.len() != l.n() {
        return Err(FoulisError::RepresentationFailure(format!(
            "expected {} closed projections, found {}",
            l.n(),
            pc.carrier.len()
        )));
    }
    let mut map = Vec::with_capacity(l.n());
    for a in l.elements() {
        match pc.elem_of(semigroup.mu(a)) {
            Some(e) => map.push(e),
            None => {
                return Err(FoulisError::RepresentationFailure(format!(
                    "mu_{a} is not a closed projection"
                )))
            }
        }
    }
    let iso = LatticeIso { map };
    if !iso.verify(l, &pc.lattice) {
        return Err(FoulisError::RepresentationFailure(
            "a -> mu_a does not preserve the lattice operations".into(),
        ));
    }
    debug_assert!(find_isomorphism(l, &pc.lattice).is_some());
    Ok(LatticeRepresentation { semigroup, pc, iso })
}

/// `represent`, plus preservation of the box operator.
pub fn verify_modal_representation(
    m: &ModalOml,
    cap: usize,
) -> Result<LatticeRepresentation, FoulisError> {
    let rep = represent(m.base(), cap)?;
    let pc_modal = saturate(rep.pc.lattice.clone());
    for a in m.base().elements() {
        if rep.iso.map[m.bx(a)] != pc_modal.bx(rep.iso.map[a]) {
            return Err(FoulisError::RepresentationFailure(format!(
                "box is not preserved at {a}"
            )));
        }
    }
    Ok(rep)
}
