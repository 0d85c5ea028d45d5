//! The modal operator on finite orthomodular lattices.
//!
//! `box a` is the largest central element below `a`; it always exists in the
//! finite case because the join of the (finitely many) central elements below
//! `a` is itself central and below `a`. `saturate` therefore never fails on
//! valid input. `diamond a = ~box ~a` is the least central element above `a`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::lattice::{center, is_central, Elem, FiniteOml};
use crate::term::Term;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ModalError {
    #[error("variable x{0} has no value in the valuation")]
    UnboundVariable(u32),
    #[error("{vars} variables exceed the cap {cap}")]
    VarCapExceeded { vars: usize, cap: usize },
    #[error("box table has {got} entries for {want} elements")]
    BadBoxTable { got: usize, want: usize },
}

/// A finite orthomodular lattice together with a box table.
///
/// `saturate` builds the canonical table; `with_box_table` accepts any table
/// (for file input and deliberate negative controls) and leaves judging it to
/// `verify_s_axioms` / `verify_box_laws`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModalOml {
    base: FiniteOml,
    bx: Vec<Elem>,
    central: Vec<Elem>,
}

/// Equips a lattice with the canonical box operator.
pub fn saturate(base: FiniteOml) -> ModalOml {
    let central = center(&base);
    let bx = base
        .elements()
        .map(|a| {
            let m = base.join_all(central.iter().copied().filter(|&z| base.leq(z, a)));
            // The join of central elements below a is again central and
            // below a, so it is the maximum such element.
            assert!(base.leq(m, a), "box {a} escaped above its argument");
            assert!(is_central(&base, m), "box {a} is not central");
            m
        })
        .collect();
    ModalOml { base, bx, central }
}

impl ModalOml {
    pub fn with_box_table(base: FiniteOml, bx: Vec<Elem>) -> Result<ModalOml, ModalError> {
        if bx.len() != base.n() {
            return Err(ModalError::BadBoxTable {
                got: bx.len(),
                want: base.n(),
            });
        }
        let central = center(&base);
        Ok(ModalOml { base, bx, central })
    }

    pub fn base(&self) -> &FiniteOml {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn bx(&self, a: Elem) -> Elem {
        self.bx[a]
    }

    pub fn box_table(&self) -> &[Elem] {
        &self.bx
    }

    /// `diamond a = ~box ~a`; checked to be the least central element above.
    pub fn diamond(&self, a: Elem) -> Elem {
        let l = &self.base;
        let d = l.neg(self.bx(l.neg(a)));
        debug_assert!(
            {
                let above: Vec<Elem> = self
                    .central
                    .iter()
                    .copied()
                    .filter(|&z| l.leq(a, z))
                    .collect();
                above.contains(&d) && above.iter().all(|&z| l.leq(d, z))
            },
            "diamond disagrees with the least central element above {a}"
        );
        d
    }

    pub fn central(&self) -> &[Elem] {
        &self.central
    }
}

/// Directly indecomposable: the center is exactly the two bounds.
pub fn is_directly_indecomposable(m: &ModalOml) -> bool {
    m.central.len() == 2
}

/// One checked law in a verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    /// Short stable key, e.g. `S4` or `L2`.
    pub name: &'static str,
    /// First witness as `var=elem` pairs, present iff the law failed.
    pub witness: Option<Vec<(char, Elem)>>,
}

impl LawCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    /// The machine-readable report line, `S4 PASS` or `S5 FAIL x=3 y=5`.
    pub fn report_line(&self) -> String {
        match &self.witness {
            None => format!("{} PASS", self.name),
            Some(w) => {
                let mut s = format!("{} FAIL", self.name);
                for (v, e) in w {
                    s.push_str(&format!(" {v}={e}"));
                }
                s
            }
        }
    }
}

pub fn report_passes(report: &[LawCheck]) -> bool {
    report.iter().all(LawCheck::passed)
}

/// Exhaustive check of the unary-operator axioms S1..S7.
pub fn verify_s_axioms(m: &ModalOml) -> Vec<LawCheck> {
    let l = &m.base;
    let n = l.n();
    let mut out = Vec::new();
    let mut law = |name: &'static str, witness: Option<Vec<(char, Elem)>>| {
        out.push(LawCheck { name, witness });
    };

    law("S1", (0..n).find(|&x| !l.leq(m.bx(x), x)).map(|x| vec![('x', x)]));
    law(
        "S2",
        (m.bx(l.top()) != l.top()).then(|| vec![('x', l.top())]),
    );
    law(
        "S3",
        (0..n).find(|&x| m.bx(m.bx(x)) != m.bx(x)).map(|x| vec![('x', x)]),
    );
    let first2 = |f: &dyn Fn(Elem, Elem) -> bool| {
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| !f(x, y))
            .map(|(x, y)| vec![('x', x), ('y', y)])
    };
    law(
        "S4",
        first2(&|x, y| m.bx(l.meet(x, y)) == l.meet(m.bx(x), m.bx(y))),
    );
    law(
        "S5",
        first2(&|x, y| l.join(l.meet(y, m.bx(x)), l.meet(y, l.neg(m.bx(x)))) == y),
    );
    law(
        "S6",
        first2(&|x, y| m.bx(l.join(x, m.bx(y))) == l.join(m.bx(x), m.bx(y))),
    );
    law(
        "S7",
        first2(&|x, y| {
            l.leq(
                m.bx(l.join(l.neg(x), l.meet(y, x))),
                l.join(l.neg(m.bx(x)), m.bx(y)),
            )
        }),
    );
    out
}

/// Exhaustive check of the six derived box laws L1..L6
/// (L3 quantifies over central z1, z2).
pub fn verify_box_laws(m: &ModalOml) -> Vec<LawCheck> {
    let l = &m.base;
    let n = l.n();
    let top = l.top();
    let mut out = Vec::new();

    // L1: ~box a | a = 1
    out.push(LawCheck {
        name: "L1",
        witness: (0..n)
            .find(|&a| l.join(l.neg(m.bx(a)), a) != top)
            .map(|a| vec![('a', a)]),
    });
    // L2: ~(a | ~b) | (a | ~box b) = 1
    out.push(LawCheck {
        name: "L2",
        witness: (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| {
                l.join(
                    l.neg(l.join(a, l.neg(b))),
                    l.join(a, l.neg(m.bx(b))),
                ) != top
            })
            .map(|(a, b)| vec![('a', a), ('b', b)]),
    });
    // L3: ~(~z1 | z2) | (~(z1 | a) | (z2 | a)) = 1 for central z1, z2
    out.push(LawCheck {
        name: "L3",
        witness: m
            .central
            .iter()
            .flat_map(|&z1| m.central.iter().map(move |&z2| (z1, z2)))
            .flat_map(|(z1, z2)| (0..n).map(move |a| (z1, z2, a)))
            .find(|&(z1, z2, a)| {
                l.join(
                    l.neg(l.join(l.neg(z1), z2)),
                    l.join(l.neg(l.join(z1, a)), l.join(z2, a)),
                ) != top
            })
            .map(|(z1, z2, a)| vec![('x', z1), ('y', z2), ('a', a)]),
    });
    // L4: box a | box b <= box(a | b)
    out.push(LawCheck {
        name: "L4",
        witness: (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| !l.leq(l.join(m.bx(a), m.bx(b)), m.bx(l.join(a, b))))
            .map(|(a, b)| vec![('a', a), ('b', b)]),
    });
    // L5: (~box a & ~box b) | box(a | b) = 1
    out.push(LawCheck {
        name: "L5",
        witness: (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| {
                l.join(
                    l.meet(l.neg(m.bx(a)), l.neg(m.bx(b))),
                    m.bx(l.join(a, b)),
                ) != top
            })
            .map(|(a, b)| vec![('a', a), ('b', b)]),
    });
    // L6: box is monotone
    out.push(LawCheck {
        name: "L6",
        witness: (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| l.leq(a, b) && !l.leq(m.bx(a), m.bx(b)))
            .map(|(a, b)| vec![('a', a), ('b', b)]),
    });
    out
}

/// A total assignment of lattice elements to variable indices.
pub type Valuation = BTreeMap<u32, Elem>;

/// Evaluates a term under a valuation by structural recursion on the tables.
pub fn eval_term(m: &ModalOml, t: &Term, v: &Valuation) -> Result<Elem, ModalError> {
    let l = &m.base;
    Ok(match t {
        Term::Var(i) => *v.get(i).ok_or(ModalError::UnboundVariable(*i))?,
        Term::Zero => l.bot(),
        Term::One => l.top(),
        Term::Neg(s) => l.neg(eval_term(m, s, v)?),
        Term::Box(s) => m.bx(eval_term(m, s, v)?),
        Term::And(a, b) => l.meet(eval_term(m, a, v)?, eval_term(m, b, v)?),
        Term::Or(a, b) => l.join(eval_term(m, a, v)?, eval_term(m, b, v)?),
    })
}

/// Outcome of an equation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquationVerdict {
    Holds,
    /// The lexicographically first refuting valuation.
    Counter(Valuation),
}

/// Decides `t = s` on one model by sweeping all valuations; truth of the
/// equation is truth of its R-form, which is cross-checked against direct
/// equality of the two sides.
pub fn check_equation(
    m: &ModalOml,
    t: &Term,
    s: &Term,
    var_cap: usize,
) -> Result<EquationVerdict, ModalError> {
    let mut vars = t.vars();
    vars.extend(s.vars());
    let vars: Vec<u32> = vars.into_iter().collect();
    if vars.len() > var_cap {
        return Err(ModalError::VarCapExceeded {
            vars: vars.len(),
            cap: var_cap,
        });
    }
    let mut verdict = EquationVerdict::Holds;
    for_each_valuation(m.n(), &vars, &mut |v| {
        let vt = eval_term(m, t, v).expect("valuation is total");
        let vs = eval_term(m, s, v).expect("valuation is total");
        let l = &m.base;
        let r_value = l.join(l.meet(vt, vs), l.meet(l.neg(vt), l.neg(vs)));
        debug_assert_eq!(
            r_value == l.top(),
            vt == vs,
            "R-form and direct equality disagree"
        );
        if r_value != l.top() {
            verdict = EquationVerdict::Counter(v.clone());
            false
        } else {
            true
        }
    });
    Ok(verdict)
}

/// Calls `f` for every valuation of `vars` into `0..n`, in lexicographic
/// order; stops early when `f` returns false.
pub fn for_each_valuation(n: usize, vars: &[u32], f: &mut dyn FnMut(&Valuation) -> bool) {
    let k = vars.len();
    let mut digits = vec![0usize; k];
    let mut v: Valuation = vars.iter().map(|&x| (x, 0)).collect();
    loop {
        if !f(&v) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < n {
                v.insert(vars[i], digits[i]);
                break;
            }
            digits[i] = 0;
            v.insert(vars[i], 0);
        }
    }
}

/// The ternary discriminator term, evaluated on elements:
/// `(x & ~box((x&y) | (~x&~y))) | (z & box((x&y) | (~x&~y)))`.
///
/// On directly indecomposable lattices it returns `x` when `x != y` and `z`
/// when `x = y`; that contract is asserted in debug builds.
pub fn discriminator_eval(m: &ModalOml, x: Elem, y: Elem, z: Elem) -> Elem {
    let l = &m.base;
    let r_val = l.join(l.meet(x, y), l.meet(l.neg(x), l.neg(y)));
    let b = m.bx(r_val);
    let out = l.join(l.meet(x, l.neg(b)), l.meet(z, b));
    if is_directly_indecomposable(m) {
        debug_assert_eq!(out, if x != y { x } else { z });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{builtin, direct_product, parse_model_name};
    use crate::term::parse;

    fn mo2() -> ModalOml {
        saturate(builtin("mo", &["2"]).unwrap())
    }

    #[test]
    fn box_is_identity_on_boolean_algebras() {
        for k in ["1", "2", "3"] {
            let m = saturate(builtin("boolean", &[k]).unwrap());
            for a in 0..m.n() {
                assert_eq!(m.bx(a), a);
                assert_eq!(m.diamond(a), a);
            }
        }
    }

    #[test]
    fn box_collapses_on_mo2() {
        let m = mo2();
        let top = m.base().top();
        for a in 0..m.n() {
            assert_eq!(m.bx(a), if a == top { top } else { m.base().bot() });
        }
        // diamond a = 1 for the atom a, since box ~a = 0.
        assert_eq!(m.diamond(1), top);
        assert_eq!(m.diamond(top), top);
    }

    #[test]
    fn box_on_product_is_componentwise() {
        let mo2l = builtin("mo", &["2"]).unwrap();
        let b2 = builtin("boolean", &["1"]).unwrap();
        let p = saturate(direct_product(&mo2l, &b2));
        // (a, 1) has box (0, 1): id pairing is a*2 + b.
        let a_id = 1;
        assert_eq!(p.bx(a_id * 2 + 1), 1);
    }

    #[test]
    fn s_axioms_hold_after_saturation() {
        for name in ["b2", "b4", "b8", "mo2", "mo3", "mo2xb2"] {
            let m = saturate(parse_model_name(name).unwrap());
            let rep = verify_s_axioms(&m);
            assert!(report_passes(&rep), "{name}: {rep:?}");
            assert_eq!(rep.len(), 7);
        }
    }

    #[test]
    fn constant_zero_box_fails_s2() {
        let l = builtin("mo", &["2"]).unwrap();
        let m = ModalOml::with_box_table(l, vec![0; 6]).unwrap();
        let rep = verify_s_axioms(&m);
        let s2 = rep.iter().find(|c| c.name == "S2").unwrap();
        assert!(!s2.passed());
        assert_eq!(s2.report_line(), "S2 FAIL x=5");
    }

    #[test]
    fn box_laws_hold_on_library() {
        for name in ["mo2", "mo3", "b8", "mo2xb2"] {
            let m = saturate(parse_model_name(name).unwrap());
            let rep = verify_box_laws(&m);
            assert!(report_passes(&rep), "{name}: {rep:?}");
            assert_eq!(rep.len(), 6);
        }
    }

    #[test]
    fn l4_is_strict_on_mo2() {
        // box a | box ~a = 0 but box(a | ~a) = 1.
        let m = mo2();
        let l = m.base();
        let (a, na) = (1, 2);
        let lhs = l.join(m.bx(a), m.bx(na));
        let rhs = m.bx(l.join(a, na));
        assert_eq!(lhs, l.bot());
        assert_eq!(rhs, l.top());
    }

    #[test]
    fn eval_matches_hand_values_on_mo2() {
        let m = mo2();
        let v: Valuation = [(1, 1), (2, 3)].into(); // x1 = a, x2 = b
        let om_instance = parse("x1 | (~x1 & (x1 | x2))").unwrap();
        assert_eq!(eval_term(&m, &om_instance, &v).unwrap(), m.base().top());

        let v2: Valuation = [(1, 1), (2, 2)].into(); // x1 = a, x2 = ~a
        assert_eq!(
            eval_term(&m, &parse("[](x1 | x2)").unwrap(), &v2).unwrap(),
            m.base().top()
        );
        assert_eq!(
            eval_term(&m, &parse("[]x1 | []x2").unwrap(), &v2).unwrap(),
            m.base().bot()
        );
    }

    #[test]
    fn unbound_variable_is_an_error() {
        let m = mo2();
        let v = Valuation::new();
        assert_eq!(
            eval_term(&m, &parse("x7").unwrap(), &v),
            Err(ModalError::UnboundVariable(7))
        );
    }

    #[test]
    fn box_meet_equation_holds_on_mo2() {
        let m = mo2();
        let t = parse("[](x1 & x2)").unwrap();
        let s = parse("[]x1 & []x2").unwrap();
        assert_eq!(
            check_equation(&m, &t, &s, 4).unwrap(),
            EquationVerdict::Holds
        );
    }

    #[test]
    fn box_join_equation_fails_on_mo2_with_first_counter() {
        let m = mo2();
        let t = parse("[](x1 | x2)").unwrap();
        let s = parse("[]x1 | []x2").unwrap();
        let expected: Valuation = [(1, 1), (2, 2)].into();
        assert_eq!(
            check_equation(&m, &t, &s, 4).unwrap(),
            EquationVerdict::Counter(expected)
        );
    }

    #[test]
    fn trivial_equation_holds() {
        let m = mo2();
        let t = parse("x1").unwrap();
        assert_eq!(
            check_equation(&m, &t, &t, 4).unwrap(),
            EquationVerdict::Holds
        );
    }

    #[test]
    fn var_cap_is_enforced() {
        let m = mo2();
        let t = parse("x1 & x2 & x3").unwrap();
        assert!(matches!(
            check_equation(&m, &t, &t, 2),
            Err(ModalError::VarCapExceeded { vars: 3, cap: 2 })
        ));
    }

    #[test]
    fn indecomposability_matches_center_size() {
        assert!(is_directly_indecomposable(&mo2()));
        assert!(!is_directly_indecomposable(&saturate(
            builtin("boolean", &["2"]).unwrap()
        )));
        let p = direct_product(
            &builtin("mo", &["2"]).unwrap(),
            &builtin("boolean", &["1"]).unwrap(),
        );
        assert!(!is_directly_indecomposable(&saturate(p)));
    }

    #[test]
    fn discriminator_contract_on_mo2() {
        let m = mo2();
        // (a, b, 0): distinct arguments return the first.
        assert_eq!(discriminator_eval(&m, 1, 3, 0), 1);
        // equal arguments return the third.
        for c in 0..m.n() {
            assert_eq!(discriminator_eval(&m, c, c, 4), 4);
        }
    }

    #[test]
    fn discriminator_on_b4_specific_triple() {
        // b4 is decomposable; the contract still holds for distinct atoms
        // because their R-value is 0.
        let m = saturate(builtin("boolean", &["2"]).unwrap());
        let (p, q) = (1, 2);
        assert_eq!(discriminator_eval(&m, p, q, 0), p);
    }

    #[test]
    fn saturated_box_table_is_the_unique_s_model() {
        // Any single-entry mutation of the canonical table breaks some S law.
        for name in ["b4", "mo2"] {
            let m = saturate(parse_model_name(name).unwrap());
            for a in 0..m.n() {
                for wrong in 0..m.n() {
                    if wrong == m.bx(a) {
                        continue;
                    }
                    let mut tbl = m.box_table().to_vec();
                    tbl[a] = wrong;
                    let mutant = ModalOml::with_box_table(m.base().clone(), tbl).unwrap();
                    assert!(
                        !report_passes(&verify_s_axioms(&mutant)),
                        "{name}: mutating box({a}) to {wrong} went unnoticed"
                    );
                }
            }
        }
    }

    #[test]
    fn central_congruences_respect_box() {
        // The kernel of meet-with-central is compatible with box as well,
        // so it is a congruence of the full modal algebra.
        for name in ["b4", "b8", "mo2xb2"] {
            let m = saturate(parse_model_name(name).unwrap());
            for &z in m.central() {
                let c = crate::lattice::central_congruence(m.base(), z).unwrap();
                for a in 0..m.n() {
                    for b in 0..m.n() {
                        if c.related(a, b) {
                            assert!(
                                c.related(m.bx(a), m.bx(b)),
                                "{name}: box breaks class of ({a}, {b}) at z={z}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn diamond_dominates_and_dualizes() {
        for name in ["b4", "mo2", "mo3"] {
            let m = saturate(parse_model_name(name).unwrap());
            let l = m.base();
            for a in 0..m.n() {
                assert!(l.leq(a, m.diamond(a)));
                assert_eq!(m.diamond(a), l.neg(m.bx(l.neg(a))));
            }
        }
    }
}
