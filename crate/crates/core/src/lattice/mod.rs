//! Finite bounded involutive lattices and orthomodular lattices as explicit
//! tables: validation, center computation, congruences, quotients, products
//! and isomorphism search.
//!
//! Elements are dense integer ids `0..n-1`; names are presentation-only.
//! The input carries only the order relation and the negation; meet and join
//! tables are computed from the order and cross-checked, never trusted.

mod builtins;
mod format;
mod iso;

pub use builtins::{builtin, parse_model_name, Builtin};
pub use format::{parse_lattice_file, write_lattice_file, FormatError, LatticeFile};
pub use iso::{find_isomorphism, find_modal_isomorphism, LatticeIso};

use thiserror::Error;

/// Dense element id of a finite lattice.
pub type Elem = usize;

/// Default cap on lattice size; the cubic validation sweeps stay cheap below it.
pub const DEFAULT_SIZE_CAP: usize = 64;

/// Which bound was missing when a poset failed to be a lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundKind::Meet => write!(f, "meet"),
            BoundKind::Join => write!(f, "join"),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("lattice has no elements")]
    Empty,
    #[error("degenerate lattice: bottom and top coincide")]
    Degenerate,
    #[error("{n} elements exceeds the size cap {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("element id {id} out of range (n = {n})")]
    BadElem { id: Elem, n: usize },
    #[error("order is not antisymmetric: {a} <= {b} and {b} <= {a}")]
    NotAntisymmetric { a: Elem, b: Elem },
    #[error("{bot} is not a global minimum or {top} is not a global maximum (witness {witness})")]
    BadBounds { bot: Elem, top: Elem, witness: Elem },
    #[error("not a lattice: pair ({a}, {b}) has no {kind}")]
    NotALattice { kind: BoundKind, a: Elem, b: Elem },
    #[error("negation is not a well-defined involution at {x}")]
    NotInvolutive { x: Elem },
    #[error("De Morgan law fails: neg(join({a}, {b})) != meet(neg {a}, neg {b})")]
    DeMorgan { a: Elem, b: Elem },
    #[error("ortholattice law fails: meet({x}, neg {x}) != bottom")]
    NotOrtho { x: Elem },
    #[error("orthomodular law fails at pair ({a}, {b})")]
    NotOrthomodular { a: Elem, b: Elem },
    #[error("element {z} is not central")]
    NotCentral { z: Elem },
    #[error("partition is not compatible with {op} at pair ({a}, {b})")]
    NotCompatible { op: &'static str, a: Elem, b: Elem },
    #[error("unknown builtin lattice `{0}`")]
    UnknownBuiltin(String),
    #[error("bad builtin parameter: {0}")]
    BadParam(String),
}

/// The diagnostics produced by a failed validation, first witness per law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostics(pub Vec<LatticeError>);

impl std::fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl std::error::Error for Diagnostics {}

/// Raw order/negation tables prior to validation.
#[derive(Debug, Clone)]
pub struct RawLattice {
    /// One name per element; positions are the element ids.
    pub names: Vec<String>,
    /// Pairs `(a, b)` with `a <= b`; the reflexive-transitive closure is taken.
    pub leq: Vec<(Elem, Elem)>,
    /// Pairs `(a, b)` with `neg a = b` (the reverse direction is implied).
    pub neg: Vec<(Elem, Elem)>,
    pub bot: Elem,
    pub top: Elem,
}

/// A validated finite orthomodular lattice.
///
/// All invariants hold by construction: the order is a bounded partial order
/// with all meets and joins, negation is a De Morgan involution with
/// `x /\ neg x = 0`, and the orthomodular law holds for every pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteOml {
    names: Vec<String>,
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    neg: Vec<Elem>,
    bot: Elem,
    top: Elem,
}

impl RawLattice {
    /// Validates against the default size cap.
    pub fn validate(self) -> Result<FiniteOml, Diagnostics> {
        self.validate_capped(DEFAULT_SIZE_CAP)
    }

    /// Checks every lattice invariant exhaustively and returns the finished
    /// tables, or the list of failing laws (first witness each).
    pub fn validate_capped(self, cap: usize) -> Result<FiniteOml, Diagnostics> {
        let n = self.names.len();
        if n == 0 {
            return Err(Diagnostics(vec![LatticeError::Empty]));
        }
        if n > cap {
            return Err(Diagnostics(vec![LatticeError::SizeCap { n, cap }]));
        }
        for &id in [self.bot, self.top]
            .iter()
            .chain(self.leq.iter().flat_map(|(a, b)| [a, b]))
            .chain(self.neg.iter().flat_map(|(a, b)| [a, b]))
        {
            if id >= n {
                return Err(Diagnostics(vec![LatticeError::BadElem { id, n }]));
            }
        }
        if n == 1 || self.bot == self.top {
            return Err(Diagnostics(vec![LatticeError::Degenerate]));
        }

        // Reflexive-transitive closure of the given order pairs.
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in &self.leq {
            leq[a * n + b] = true;
        }
        for k in 0..n {
            for a in 0..n {
                if leq[a * n + k] {
                    for b in 0..n {
                        if leq[k * n + b] {
                            leq[a * n + b] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                if leq[a * n + b] && leq[b * n + a] {
                    return Err(Diagnostics(vec![LatticeError::NotAntisymmetric { a, b }]));
                }
            }
        }
        for x in 0..n {
            if !leq[self.bot * n + x] || !leq[x * n + self.top] {
                return Err(Diagnostics(vec![LatticeError::BadBounds {
                    bot: self.bot,
                    top: self.top,
                    witness: x,
                }]));
            }
        }

        // Meet and join from the order; missing bounds are fatal.
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                match glb(&leq, n, a, b) {
                    Some(m) => meet[a * n + b] = m,
                    None => {
                        return Err(Diagnostics(vec![LatticeError::NotALattice {
                            kind: BoundKind::Meet,
                            a,
                            b,
                        }]))
                    }
                }
                match lub(&leq, n, a, b) {
                    Some(j) => join[a * n + b] = j,
                    None => {
                        return Err(Diagnostics(vec![LatticeError::NotALattice {
                            kind: BoundKind::Join,
                            a,
                            b,
                        }]))
                    }
                }
            }
        }

        // Negation table; each pair fixes both directions.
        let mut neg: Vec<Option<Elem>> = vec![None; n];
        let mut neg_err = None;
        for &(a, b) in &self.neg {
            for (x, y) in [(a, b), (b, a)] {
                match neg[x] {
                    None => neg[x] = Some(y),
                    Some(prev) if prev == y => {}
                    Some(_) => neg_err = neg_err.or(Some(LatticeError::NotInvolutive { x })),
                }
            }
        }
        let mut diags = Vec::new();
        if let Some(e) = neg_err {
            diags.push(e);
        }
        let neg: Vec<Elem> = match neg.iter().position(|v| v.is_none()) {
            Some(x) => {
                diags.push(LatticeError::NotInvolutive { x });
                return Err(Diagnostics(diags));
            }
            None => neg.into_iter().map(|v| v.unwrap()).collect(),
        };
        if !diags.is_empty() {
            return Err(Diagnostics(diags));
        }

        let l = FiniteOml {
            names: self.names,
            leq,
            meet,
            join,
            neg,
            bot: self.bot,
            top: self.top,
        };

        // Remaining laws: collect the first witness of each failing one.
        let mut diags = Vec::new();
        if let Some(x) = (0..n).find(|&x| l.neg(l.neg(x)) != x) {
            diags.push(LatticeError::NotInvolutive { x });
        }
        'dm: for a in 0..n {
            for b in 0..n {
                if l.neg(l.join(a, b)) != l.meet(l.neg(a), l.neg(b)) {
                    diags.push(LatticeError::DeMorgan { a, b });
                    break 'dm;
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| l.meet(x, l.neg(x)) != l.bot) {
            diags.push(LatticeError::NotOrtho { x });
        }
        'om: for a in 0..n {
            for b in 0..n {
                let lhs = l.join(a, l.meet(l.neg(a), l.join(a, b)));
                if lhs != l.join(a, b) {
                    diags.push(LatticeError::NotOrthomodular { a, b });
                    break 'om;
                }
            }
        }
        if diags.is_empty() {
            Ok(l)
        } else {
            Err(Diagnostics(diags))
        }
    }
}

fn glb(leq: &[bool], n: usize, a: Elem, b: Elem) -> Option<Elem> {
    let lower: Vec<Elem> = (0..n).filter(|&c| leq[c * n + a] && leq[c * n + b]).collect();
    lower
        .iter()
        .copied()
        .find(|&m| lower.iter().all(|&c| leq[c * n + m]))
}

fn lub(leq: &[bool], n: usize, a: Elem, b: Elem) -> Option<Elem> {
    let upper: Vec<Elem> = (0..n).filter(|&c| leq[a * n + c] && leq[b * n + c]).collect();
    upper
        .iter()
        .copied()
        .find(|&j| upper.iter().all(|&c| leq[j * n + c]))
}

impl FiniteOml {
    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n()
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.n() + b]
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.n() + b]
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.n() + b]
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a]
    }

    pub fn bot(&self) -> Elem {
        self.bot
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Resolves an element by name, falling back to a numeric id.
    pub fn elem_by_name(&self, s: &str) -> Option<Elem> {
        self.names
            .iter()
            .position(|m| m == s)
            .or_else(|| s.parse::<Elem>().ok().filter(|&e| e < self.n()))
    }

    /// Join of an arbitrary (possibly empty) set of elements.
    pub fn join_all(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.bot, |acc, x| self.join(acc, x))
    }

    /// Join-irreducible elements: nonzero `x` that are not the join of two
    /// strictly smaller elements.
    pub fn join_irreducibles(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&x| {
                x != self.bot
                    && !self.elements().any(|a| {
                        a != x
                            && self.leq(a, x)
                            && self
                                .elements()
                                .any(|b| b != x && self.leq(b, x) && self.join(a, b) == x)
                    })
            })
            .collect()
    }

    /// Pairs `(a, b)` with `a` covered by `b` (the Hasse relation).
    pub fn coverings(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if a != b
                    && self.leq(a, b)
                    && !self
                        .elements()
                        .any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Centrality of a single element: `a = (a /\ z) \/ (a /\ neg z)` for all `a`.
pub fn is_central(l: &FiniteOml, z: Elem) -> bool {
    l.elements()
        .all(|a| l.join(l.meet(a, z), l.meet(a, l.neg(z))) == a)
}

/// The center, by the orthomodular characterization.
///
/// In debug builds the result is cross-checked against the definitional
/// distributivity sweep.
pub fn center(l: &FiniteOml) -> Vec<Elem> {
    let out: Vec<Elem> = l.elements().filter(|&z| is_central(l, z)).collect();
    debug_assert_eq!(out, center_by_distributivity(l));
    out
}

/// The center computed from first principles: `z` is central iff the
/// distributive identities hold for `(a, b, z)` under every permutation.
pub fn center_by_distributivity(l: &FiniteOml) -> Vec<Elem> {
    let d = |a: Elem, b: Elem, c: Elem| l.meet(l.join(a, b), c) == l.join(l.meet(a, c), l.meet(b, c));
    let dd = |a: Elem, b: Elem, c: Elem| l.join(l.meet(a, b), c) == l.meet(l.join(a, c), l.join(b, c));
    let t = |a: Elem, b: Elem, z: Elem| {
        let perms = [(a, b, z), (a, z, b), (b, a, z), (b, z, a), (z, a, b), (z, b, a)];
        perms.iter().all(|&(x, y, w)| d(x, y, w) && dd(x, y, w))
    };
    l.elements()
        .filter(|&z| {
            l.elements()
                .all(|a| l.elements().all(|b| t(a, b, z)))
        })
        .collect()
}

/// A partition of a lattice compatible with its operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    class_of: Vec<usize>,
    classes: Vec<Vec<Elem>>,
    /// The central element this congruence was built from, if any.
    witness: Option<Elem>,
}

impl Congruence {
    /// Builds a congruence from an explicit class assignment, without
    /// compatibility checks (those happen at `quotient`).
    pub fn from_classes(class_of: Vec<usize>, witness: Option<Elem>) -> Congruence {
        let k = class_of.iter().copied().max().map_or(0, |m| m + 1);
        let mut classes = vec![Vec::new(); k];
        for (e, &c) in class_of.iter().enumerate() {
            classes[c].push(e);
        }
        Congruence {
            class_of,
            classes,
            witness,
        }
    }

    pub fn class_of(&self, a: Elem) -> usize {
        self.class_of[a]
    }

    pub fn classes(&self) -> &[Vec<Elem>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn witness(&self) -> Option<Elem> {
        self.witness
    }

    pub fn related(&self, a: Elem, b: Elem) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    fn check_compatible(&self, l: &FiniteOml) -> Result<(), LatticeError> {
        type BinOp<'a> = &'a dyn Fn(Elem, Elem) -> Elem;
        let ops: [(&'static str, BinOp); 2] = [
            ("meet", &|a, b| l.meet(a, b)),
            ("join", &|a, b| l.join(a, b)),
        ];
        for cls_a in &self.classes {
            for cls_b in &self.classes {
                for (name, op) in &ops {
                    let c0 = self.class_of[op(cls_a[0], cls_b[0])];
                    for &a in cls_a {
                        for &b in cls_b {
                            if self.class_of[op(a, b)] != c0 {
                                return Err(LatticeError::NotCompatible { op: name, a, b });
                            }
                        }
                    }
                }
            }
            let n0 = self.class_of[l.neg(cls_a[0])];
            for &a in cls_a {
                if self.class_of[l.neg(a)] != n0 {
                    return Err(LatticeError::NotCompatible {
                        op: "neg",
                        a,
                        b: cls_a[0],
                    });
                }
            }
        }
        Ok(())
    }
}

/// The congruence `a ~ b iff a /\ z = b /\ z` induced by a central element.
pub fn central_congruence(l: &FiniteOml, z: Elem) -> Result<Congruence, LatticeError> {
    if !is_central(l, z) {
        return Err(LatticeError::NotCentral { z });
    }
    // Classes are the fibers of a -> a /\ z, numbered by ascending kernel value.
    let kernel: Vec<Elem> = l.elements().map(|a| l.meet(a, z)).collect();
    let mut values: Vec<Elem> = kernel.clone();
    values.sort_unstable();
    values.dedup();
    let class_of = kernel
        .iter()
        .map(|v| values.binary_search(v).unwrap())
        .collect();
    let c = Congruence::from_classes(class_of, Some(z));
    c.check_compatible(l)
        .expect("kernel of meet with a central element is always compatible");
    Ok(c)
}

/// The quotient lattice; classes become elements, operations act on
/// representatives.
pub fn quotient(l: &FiniteOml, c: &Congruence) -> Result<FiniteOml, LatticeError> {
    assert_eq!(c.class_of.len(), l.n(), "congruence is over a different lattice");
    c.check_compatible(l)?;
    let k = c.num_classes();
    if k == 1 {
        return Err(LatticeError::Degenerate);
    }
    let rep: Vec<Elem> = c.classes.iter().map(|cls| cls[0]).collect();
    let names = c
        .classes
        .iter()
        .map(|cls| {
            let mut s = String::from("{");
            for (i, &e) in cls.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(l.name(e));
            }
            s.push('}');
            s
        })
        .collect();
    let mut leq_pairs = Vec::new();
    for x in 0..k {
        for y in 0..k {
            if c.class_of[l.meet(rep[x], rep[y])] == x {
                leq_pairs.push((x, y));
            }
        }
    }
    let neg_pairs = (0..k).map(|x| (x, c.class_of[l.neg(rep[x])])).collect();
    let raw = RawLattice {
        names,
        leq: leq_pairs,
        neg: neg_pairs,
        bot: c.class_of[l.bot()],
        top: c.class_of[l.top()],
    };
    raw.validate_capped(l.n())
        .map_err(|d| d.0.into_iter().next().unwrap())
}

/// Componentwise direct product.
pub fn direct_product(l1: &FiniteOml, l2: &FiniteOml) -> FiniteOml {
    let (n1, n2) = (l1.n(), l2.n());
    let n = n1 * n2;
    let id = |a: Elem, b: Elem| a * n2 + b;
    let mut names = Vec::with_capacity(n);
    for a in 0..n1 {
        for b in 0..n2 {
            names.push(format!("({},{})", l1.name(a), l2.name(b)));
        }
    }
    let mut leq = vec![false; n * n];
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for a1 in 0..n1 {
        for b1 in 0..n2 {
            for a2 in 0..n1 {
                for b2 in 0..n2 {
                    let (x, y) = (id(a1, b1), id(a2, b2));
                    leq[x * n + y] = l1.leq(a1, a2) && l2.leq(b1, b2);
                    meet[x * n + y] = id(l1.meet(a1, a2), l2.meet(b1, b2));
                    join[x * n + y] = id(l1.join(a1, a2), l2.join(b1, b2));
                }
            }
        }
    }
    let neg = (0..n)
        .map(|x| id(l1.neg(x / n2), l2.neg(x % n2)))
        .collect();
    let out = FiniteOml {
        names,
        leq,
        meet,
        join,
        neg,
        bot: id(l1.bot(), l2.bot()),
        top: id(l1.top(), l2.top()),
    };
    debug_assert!(revalidate(&out).is_ok());
    out
}

/// Re-runs the full validation sweep on an already-constructed lattice.
pub fn revalidate(l: &FiniteOml) -> Result<(), Diagnostics> {
    let pairs = l
        .elements()
        .flat_map(|a| l.elements().filter(move |&b| l.leq[a * l.n() + b]).map(move |b| (a, b)))
        .collect();
    let raw = RawLattice {
        names: l.names.clone(),
        leq: pairs,
        neg: l.elements().map(|a| (a, l.neg(a))).collect(),
        bot: l.bot,
        top: l.top,
    };
    let checked = raw.validate_capped(l.n())?;
    assert_eq!(&checked, l, "recomputed tables diverge from stored tables");
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn b2() -> FiniteOml {
        builtin("boolean", &["1"]).unwrap()
    }

    pub(crate) fn b4() -> FiniteOml {
        builtin("boolean", &["2"]).unwrap()
    }

    pub(crate) fn mo2() -> FiniteOml {
        builtin("mo", &["2"]).unwrap()
    }

    /// Hexagon ortholattice: 0 < a < b < 1 and 0 < ~b < ~a < 1.
    fn benzene_raw() -> RawLattice {
        RawLattice {
            names: ["0", "a", "b", "~b", "~a", "1"].map(String::from).to_vec(),
            leq: vec![(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)],
            neg: vec![(0, 5), (1, 4), (2, 3)],
            bot: 0,
            top: 5,
        }
    }

    #[test]
    fn two_chain_is_valid() {
        let raw = RawLattice {
            names: vec!["0".into(), "1".into()],
            leq: vec![(0, 1)],
            neg: vec![(0, 1)],
            bot: 0,
            top: 1,
        };
        let l = raw.validate().unwrap();
        assert_eq!(l.n(), 2);
        assert_eq!(l.join(0, 1), 1);
        assert_eq!(l.meet(0, 1), 0);
    }

    #[test]
    fn mo2_tables_are_orthomodular() {
        let l = mo2();
        assert_eq!(l.n(), 6);
        assert!(revalidate(&l).is_ok());
        // Distinct atoms join to top, exhaustively.
        for a in 1..5 {
            for b in 1..5 {
                if a != b {
                    assert_eq!(l.join(a, b), l.top());
                }
            }
        }
        // Hand enumeration of the orthomodular law over all 36 pairs.
        for a in l.elements() {
            for b in l.elements() {
                assert_eq!(l.join(a, l.meet(l.neg(a), l.join(a, b))), l.join(a, b));
            }
        }
    }

    #[test]
    fn benzene_ring_fails_orthomodularity_with_witness() {
        // First failing pair in scan order is (a, b): a \/ (~a /\ (a \/ b))
        // collapses to a, strictly below a \/ b = b.
        let err = benzene_raw().validate().unwrap_err();
        assert!(
            err.0
                .iter()
                .any(|e| matches!(e, LatticeError::NotOrthomodular { a: 1, b: 2 })),
            "expected witness (a, b), got {err:?}"
        );
    }

    #[test]
    fn degenerate_lattice_is_rejected() {
        let raw = RawLattice {
            names: vec!["x".into()],
            leq: vec![],
            neg: vec![(0, 0)],
            bot: 0,
            top: 0,
        };
        assert!(matches!(
            raw.validate().unwrap_err().0[0],
            LatticeError::Degenerate
        ));
    }

    #[test]
    fn size_cap_is_enforced() {
        let raw = RawLattice {
            names: (0..5).map(|i| i.to_string()).collect(),
            leq: vec![],
            neg: vec![],
            bot: 0,
            top: 4,
        };
        assert!(matches!(
            raw.validate_capped(4).unwrap_err().0[0],
            LatticeError::SizeCap { n: 5, cap: 4 }
        ));
    }

    #[test]
    fn de_morgan_holds_in_library_lattices() {
        for l in [b2(), b4(), mo2(), direct_product(&mo2(), &b2())] {
            for a in l.elements() {
                for b in l.elements() {
                    assert_eq!(l.join(a, b), l.neg(l.meet(l.neg(a), l.neg(b))));
                }
            }
        }
    }

    #[test]
    fn center_of_boolean_is_everything() {
        let l = b4();
        assert_eq!(center(&l), vec![0, 1, 2, 3]);
    }

    #[test]
    fn center_of_mo2_is_bounds() {
        let l = mo2();
        assert_eq!(center(&l), vec![l.bot(), l.top()]);
        assert_eq!(center_by_distributivity(&l), vec![l.bot(), l.top()]);
    }

    #[test]
    fn center_characterization_matches_the_distributivity_sweep() {
        for name in ["b2", "b4", "b8", "mo2", "mo3", "mo2xb2"] {
            let l = crate::lattice::parse_model_name(name).unwrap();
            assert_eq!(center(&l), center_by_distributivity(&l), "{name}");
        }
    }

    #[test]
    fn center_of_product_is_product_of_centers() {
        let p = direct_product(&mo2(), &b2());
        let c = center(&p);
        assert_eq!(c.len(), 4);
        // Pairs of central components, in id order: (0,0), (0,1), (1,0), (1,1).
        let n2 = 2;
        let expected: Vec<Elem> = [(0, 0), (0, 1), (5, 0), (5, 1)]
            .iter()
            .map(|&(a, b)| a * n2 + b)
            .collect();
        let mut expected = expected;
        expected.sort_unstable();
        assert_eq!(c, expected);
    }

    #[test]
    fn central_congruence_on_b4() {
        let l = b4();
        // b4 ids: 0, p=1, q=2, 1=3 with neg p = q.
        let p = 1;
        let c = central_congruence(&l, p).unwrap();
        assert_eq!(c.num_classes(), 2);
        assert!(c.related(0, 2), "0 and q collapse");
        assert!(c.related(p, 3), "p and 1 collapse");
        assert!(!c.related(0, p));
    }

    #[test]
    fn central_congruence_at_bounds() {
        let l = mo2();
        let top = central_congruence(&l, l.top()).unwrap();
        assert_eq!(top.num_classes(), l.n());
        let bot = central_congruence(&l, l.bot()).unwrap();
        assert_eq!(bot.num_classes(), 1);
    }

    #[test]
    fn non_central_element_is_rejected() {
        let l = mo2();
        assert!(matches!(
            central_congruence(&l, 1),
            Err(LatticeError::NotCentral { z: 1 })
        ));
    }

    #[test]
    fn quotient_of_b4_by_atom_is_b2() {
        let l = b4();
        let c = central_congruence(&l, 1).unwrap();
        let q = quotient(&l, &c).unwrap();
        assert_eq!(q.n(), 2);
        assert!(find_isomorphism(&q, &b2()).is_some());
    }

    #[test]
    fn quotient_by_identity_is_isomorphic() {
        let l = mo2();
        let c = central_congruence(&l, l.top()).unwrap();
        let q = quotient(&l, &c).unwrap();
        assert!(find_isomorphism(&q, &l).is_some());
    }

    #[test]
    fn quotient_by_total_congruence_is_degenerate() {
        let l = mo2();
        let c = central_congruence(&l, l.bot()).unwrap();
        assert!(matches!(quotient(&l, &c), Err(LatticeError::Degenerate)));
    }

    #[test]
    fn incompatible_partition_is_rejected() {
        let l = b4();
        // {0, 1} vs {p, q} is not meet-compatible: p /\ p = p but p /\ q = 0.
        let c = Congruence::from_classes(vec![0, 1, 1, 0], None);
        assert!(matches!(
            quotient(&l, &c),
            Err(LatticeError::NotCompatible { .. })
        ));
    }

    #[test]
    fn product_of_two_chains_is_b4() {
        let p = direct_product(&b2(), &b2());
        assert_eq!(p.n(), 4);
        assert!(find_isomorphism(&p, &b4()).is_some());
    }

    #[test]
    fn product_with_mo2_is_valid_orthomodular() {
        let p = direct_product(&mo2(), &b2());
        assert_eq!(p.n(), 12);
        assert!(revalidate(&p).is_ok());
    }
}
