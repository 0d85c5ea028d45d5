//! Backtracking isomorphism search between finite orthomodular lattices.

use super::{Elem, FiniteOml};

/// A witnessed isomorphism: `map[a]` is the image of `a` in the codomain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeIso {
    pub map: Vec<Elem>,
}

impl LatticeIso {
    /// Full verification that `map` preserves all structure.
    pub fn verify(&self, l1: &FiniteOml, l2: &FiniteOml) -> bool {
        let n = l1.n();
        if n != l2.n() || self.map.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &y in &self.map {
            if y >= n || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        let m = &self.map;
        m[l1.bot()] == l2.bot()
            && m[l1.top()] == l2.top()
            && (0..n).all(|a| m[l1.neg(a)] == l2.neg(m[a]))
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    m[l1.meet(a, b)] == l2.meet(m[a], m[b])
                        && m[l1.join(a, b)] == l2.join(m[a], m[b])
                })
            })
    }
}

/// Order-theoretic fingerprint used to prune candidate images.
fn invariant(l: &FiniteOml, x: Elem) -> (usize, usize, usize) {
    let below = l.elements().filter(|&c| l.leq(c, x)).count();
    let above = l.elements().filter(|&c| l.leq(x, c)).count();
    let below_neg = l.elements().filter(|&c| l.leq(c, l.neg(x))).count();
    (below, above, below_neg)
}

/// Searches for an operation-preserving bijection. Sound and complete at
/// the sizes in scope; `None` means the lattices are not isomorphic.
pub fn find_isomorphism(l1: &FiniteOml, l2: &FiniteOml) -> Option<LatticeIso> {
    let n = l1.n();
    if n != l2.n() {
        return None;
    }
    let inv1: Vec<_> = l1.elements().map(|x| invariant(l1, x)).collect();
    let inv2: Vec<_> = l2.elements().map(|x| invariant(l2, x)).collect();
    {
        let mut s1 = inv1.clone();
        let mut s2 = inv2.clone();
        s1.sort_unstable();
        s2.sort_unstable();
        if s1 != s2 {
            return None;
        }
    }
    // Candidates per element, by matching fingerprints.
    let cands: Vec<Vec<Elem>> = (0..n)
        .map(|x| (0..n).filter(|&y| inv2[y] == inv1[x]).collect())
        .collect();
    // Assign scarce elements first, ties broken towards high degree.
    let mut order: Vec<Elem> = (0..n).collect();
    order.sort_by_key(|&x| (cands[x].len(), usize::MAX - inv1[x].0));

    let mut map: Vec<Option<Elem>> = vec![None; n];
    let mut used = vec![false; n];
    map[l1.bot()] = Some(l2.bot());
    used[l2.bot()] = true;
    map[l1.top()] = Some(l2.top());
    used[l2.top()] = true;
    if extend(l1, l2, &cands, &order, &mut map, &mut used, 0) {
        let iso = LatticeIso {
            map: map.into_iter().map(|v| v.unwrap()).collect(),
        };
        debug_assert!(iso.verify(l1, l2));
        Some(iso)
    } else {
        None
    }
}

fn extend(
    l1: &FiniteOml,
    l2: &FiniteOml,
    cands: &[Vec<Elem>],
    order: &[Elem],
    map: &mut Vec<Option<Elem>>,
    used: &mut Vec<bool>,
    depth: usize,
) -> bool {
    let Some(&x) = order.get(depth) else {
        return finish_check(l1, l2, map);
    };
    if map[x].is_some() {
        return extend(l1, l2, cands, order, map, used, depth + 1);
    }
    let nx = l1.neg(x);
    for &y in &cands[x] {
        if used[y] || !consistent(l1, l2, map, x, y) {
            continue;
        }
        // Assigning x forces neg x; check that image is free and consistent.
        let ny = l2.neg(y);
        let forced_neg = map[nx].is_none();
        if forced_neg {
            if used[ny] || !consistent(l1, l2, map, nx, ny) {
                continue;
            }
        } else if map[nx] != Some(ny) {
            continue;
        }
        map[x] = Some(y);
        used[y] = true;
        if forced_neg {
            map[nx] = Some(ny);
            used[ny] = true;
        }
        if extend(l1, l2, cands, order, map, used, depth + 1) {
            return true;
        }
        map[x] = None;
        used[y] = false;
        if forced_neg {
            map[nx] = None;
            used[ny] = false;
        }
    }
    false
}

/// Order compatibility of a tentative assignment with everything mapped so far.
fn consistent(l1: &FiniteOml, l2: &FiniteOml, map: &[Option<Elem>], x: Elem, y: Elem) -> bool {
    for a in l1.elements() {
        if let Some(b) = map[a] {
            if l1.leq(a, x) != l2.leq(b, y) || l1.leq(x, a) != l2.leq(y, b) {
                return false;
            }
        }
    }
    true
}

fn finish_check(l1: &FiniteOml, l2: &FiniteOml, map: &[Option<Elem>]) -> bool {
    let m: Vec<Elem> = map.iter().map(|v| v.unwrap()).collect();
    LatticeIso { map: m }.verify(l1, l2)
}

/// Isomorphism search for lattices that carry a box table: an order
/// isomorphism that additionally preserves box.
pub fn find_modal_isomorphism(
    l1: &FiniteOml,
    box1: &[Elem],
    l2: &FiniteOml,
    box2: &[Elem],
) -> Option<LatticeIso> {
    // Box is the maximum central element below, which every OML isomorphism
    // preserves; find one and confirm.
    let iso = find_isomorphism(l1, l2)?;
    for a in l1.elements() {
        if iso.map[box1[a]] != box2[iso.map[a]] {
            return None;
        }
    }
    Some(iso)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{builtin, direct_product, RawLattice};

    fn mo2() -> FiniteOml {
        builtin("mo", &["2"]).unwrap()
    }

    #[test]
    fn b4_is_isomorphic_to_b2_squared() {
        let b2 = builtin("boolean", &["1"]).unwrap();
        let b4 = builtin("boolean", &["2"]).unwrap();
        let p = direct_product(&b2, &b2);
        let iso = find_isomorphism(&b4, &p).unwrap();
        assert!(iso.verify(&b4, &p));
    }

    #[test]
    fn mo2_with_permuted_atoms_is_isomorphic() {
        // Same structure with the two blocks swapped and pairs flipped.
        let permuted = RawLattice {
            names: ["0", "b", "~b", "~a", "a", "1"].map(String::from).to_vec(),
            leq: vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5), (3, 5), (4, 5)],
            neg: vec![(0, 5), (1, 2), (3, 4)],
            bot: 0,
            top: 5,
        }
        .validate()
        .unwrap();
        let iso = find_isomorphism(&mo2(), &permuted).unwrap();
        assert!(iso.verify(&mo2(), &permuted));
    }

    #[test]
    fn non_isomorphic_lattices_report_none() {
        let b8 = builtin("boolean", &["3"]).unwrap();
        assert!(find_isomorphism(&mo2(), &b8).is_none());
        let mo3 = builtin("mo", &["3"]).unwrap();
        assert!(find_isomorphism(&mo3, &b8).is_none());
    }

    #[test]
    fn modal_isomorphism_carries_the_box_table() {
        use crate::modal::saturate;
        let m1 = saturate(mo2());
        let m2 = saturate(mo2());
        let iso = find_modal_isomorphism(m1.base(), m1.box_table(), m2.base(), m2.box_table());
        assert!(iso.is_some());
        // Identity box against a constant-zero table has no modal match.
        let zeros = vec![0; 6];
        assert!(
            find_modal_isomorphism(m1.base(), m1.box_table(), m2.base(), &zeros).is_none()
        );
    }
}
