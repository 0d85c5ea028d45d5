//! The modal term language.
//!
//! Primitive connectives are `~` (negation), `[]` (box), `&`, `|` and the
//! constants `0`, `1`; variables are `x1 x2 ...`. The derived connectives
//! `<>t` (diamond) and `t R s` expand at parse time:
//!
//! ```text
//! <>t    =  ~[]~t
//! t R s  =  (t & s) | (~t & ~s)
//! ```
//!
//! Precedence, tightest first: unary (`~`, `[]`, `<>`), then `&`, then `|`,
//! then `R`. Binary connectives associate to the left.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Abstract syntax of a modal term. Derived connectives never appear here.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Term {
    Var(u32),
    Zero,
    One,
    Neg(Box<Term>),
    Box(Box<Term>),
    And(Box<Term>, Box<Term>),
    Or(Box<Term>, Box<Term>),
}

pub fn var(i: u32) -> Term {
    Term::Var(i)
}

pub fn neg(t: Term) -> Term {
    Term::Neg(Box::new(t))
}

pub fn bx(t: Term) -> Term {
    Term::Box(Box::new(t))
}

pub fn and(t: Term, s: Term) -> Term {
    Term::And(Box::new(t), Box::new(s))
}

pub fn or(t: Term, s: Term) -> Term {
    Term::Or(Box::new(t), Box::new(s))
}

/// `<>t`, expanded.
pub fn diamond(t: Term) -> Term {
    neg(bx(neg(t)))
}

/// `t R s`, expanded: truth of the equation `t = s`.
pub fn r(t: Term, s: Term) -> Term {
    or(and(t.clone(), s.clone()), and(neg(t), neg(s)))
}

impl Term {
    /// Node count; the induction measure for everything recursive.
    pub fn comp(&self) -> usize {
        match self {
            Term::Var(_) | Term::Zero | Term::One => 1,
            Term::Neg(t) | Term::Box(t) => 1 + t.comp(),
            Term::And(t, s) | Term::Or(t, s) => 1 + t.comp() + s.comp(),
        }
    }

    /// The set of variable indices occurring in the term.
    pub fn vars(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<u32>) {
        match self {
            Term::Var(i) => {
                out.insert(*i);
            }
            Term::Zero | Term::One => {}
            Term::Neg(t) | Term::Box(t) => t.collect_vars(out),
            Term::And(t, s) | Term::Or(t, s) => {
                t.collect_vars(out);
                s.collect_vars(out);
            }
        }
    }

    /// Matches the expansion of `a R b`, returning the folded operands.
    fn as_r(&self) -> Option<(&Term, &Term)> {
        if let Term::Or(l, rr) = self {
            if let (Term::And(a, b), Term::And(na, nb)) = (l.as_ref(), rr.as_ref()) {
                if let (Term::Neg(a2), Term::Neg(b2)) = (na.as_ref(), nb.as_ref()) {
                    if a == a2 && b == b2 {
                        return Some((a, b));
                    }
                }
            }
        }
        None
    }

    /// Matches the expansion of `<>t`.
    fn as_diamond(&self) -> Option<&Term> {
        if let Term::Neg(b) = self {
            if let Term::Box(inner) = b.as_ref() {
                if let Term::Neg(t) = inner.as_ref() {
                    return Some(t);
                }
            }
        }
        None
    }
}

/// Every term with node count at most `max_comp` over the given variables
/// and the constants, ordered by size then construction, deterministically.
pub fn enumerate_terms(max_comp: usize, vars: &[u32]) -> Vec<Term> {
    let mut by_size: Vec<Vec<Term>> = vec![Vec::new()];
    for k in 1..=max_comp {
        let mut level = Vec::new();
        if k == 1 {
            level.push(Term::Zero);
            level.push(Term::One);
            level.extend(vars.iter().map(|&v| Term::Var(v)));
        } else {
            for t in &by_size[k - 1] {
                level.push(neg(t.clone()));
                level.push(bx(t.clone()));
            }
            for left in 1..k - 1 {
                let right = k - 1 - left;
                for a in &by_size[left] {
                    for b in &by_size[right] {
                        level.push(and(a.clone(), b.clone()));
                        level.push(or(a.clone(), b.clone()));
                    }
                }
            }
        }
        by_size.push(level);
    }
    by_size.into_iter().flatten().collect()
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("syntax error at byte {pos}: {msg}")]
pub struct SyntaxError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

/// Parses the documented grammar into an AST with `<>` and `R` expanded.
pub fn parse(src: &str) -> Result<Term, SyntaxError> {
    let mut p = Parser { src, pos: 0 };
    let t = p.parse_r()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(t)
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> SyntaxError {
        SyntaxError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn parse_r(&mut self) -> Result<Term, SyntaxError> {
        let mut t = self.parse_or()?;
        loop {
            self.skip_ws();
            // A bare `R` token, not the start of an identifier.
            let rest = &self.src[self.pos..];
            if rest.starts_with('R') {
                self.pos += 1;
                let s = self.parse_or()?;
                t = r(t, s);
            } else {
                return Ok(t);
            }
        }
    }

    fn parse_or(&mut self) -> Result<Term, SyntaxError> {
        let mut t = self.parse_and()?;
        while self.eat("|") {
            t = or(t, self.parse_and()?);
        }
        Ok(t)
    }

    fn parse_and(&mut self) -> Result<Term, SyntaxError> {
        let mut t = self.parse_unary()?;
        while self.eat("&") {
            t = and(t, self.parse_unary()?);
        }
        Ok(t)
    }

    fn parse_unary(&mut self) -> Result<Term, SyntaxError> {
        self.skip_ws();
        if self.eat("~") {
            return Ok(neg(self.parse_unary()?));
        }
        if self.eat("[]") {
            return Ok(bx(self.parse_unary()?));
        }
        if self.eat("<>") {
            return Ok(diamond(self.parse_unary()?));
        }
        self.parse_atom()
    }

    fn parse_atom(&mut self) -> Result<Term, SyntaxError> {
        self.skip_ws();
        if self.eat("(") {
            let t = self.parse_r()?;
            if !self.eat(")") {
                return Err(self.err("expected `)`"));
            }
            return Ok(t);
        }
        if self.eat("0") {
            return Ok(Term::Zero);
        }
        if self.eat("1") {
            return Ok(Term::One);
        }
        let rest = &self.src[self.pos..];
        if let Some(stripped) = rest.strip_prefix('x') {
            let digits: String = stripped.chars().take_while(|c| c.is_ascii_digit()).collect();
            if digits.is_empty() {
                self.pos += 1;
                return Err(self.err("variable needs an index, like `x1`"));
            }
            let i: u32 = digits
                .parse()
                .map_err(|_| self.err("variable index out of range"))?;
            if i == 0 {
                return Err(self.err("variable indices start at 1"));
            }
            self.pos += 1 + digits.len();
            return Ok(var(i));
        }
        Err(self.err(if rest.is_empty() {
            "unexpected end of input".to_string()
        } else {
            format!("unexpected `{}`", rest.chars().next().unwrap())
        }))
    }
}

// Printing. Levels: R = 0, | = 1, & = 2, unary and atoms = 3.
fn level(t: &Term) -> u8 {
    if t.as_r().is_some() {
        return 0;
    }
    match t {
        Term::Or(..) => 1,
        Term::And(..) => 2,
        _ => 3,
    }
}

fn print_into(t: &Term, min_level: u8, out: &mut String) {
    let lv = level(t);
    let parens = lv < min_level;
    if parens {
        out.push('(');
    }
    if let Some((a, b)) = t.as_r() {
        // Left operand at this level (left associative), right one tighter.
        print_into(a, 0, out);
        out.push_str(" R ");
        print_into(b, 1, out);
    } else if let Some(inner) = t.as_diamond() {
        out.push_str("<>");
        print_into(inner, 3, out);
    } else {
        match t {
            Term::Var(i) => out.push_str(&format!("x{i}")),
            Term::Zero => out.push('0'),
            Term::One => out.push('1'),
            Term::Neg(s) => {
                out.push('~');
                print_into(s, 3, out);
            }
            Term::Box(s) => {
                out.push_str("[]");
                print_into(s, 3, out);
            }
            Term::And(a, b) => {
                print_into(a, 2, out);
                out.push_str(" & ");
                print_into(b, 3, out);
            }
            Term::Or(a, b) => {
                print_into(a, 1, out);
                out.push_str(" | ");
                print_into(b, 2, out);
            }
        }
    }
    if parens {
        out.push(')');
    }
}

impl fmt::Display for Term {
    /// Prints with minimal parentheses, folding `R` and `<>` back in.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        print_into(self, 0, &mut s);
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_primitive_connectives() {
        assert_eq!(
            parse("~([]x1 | x2)").unwrap(),
            neg(or(bx(var(1)), var(2)))
        );
    }

    #[test]
    fn r_expands_at_parse_time() {
        assert_eq!(
            parse("x1 R x2").unwrap(),
            or(and(var(1), var(2)), and(neg(var(1)), neg(var(2))))
        );
    }

    #[test]
    fn diamond_expands_at_parse_time() {
        assert_eq!(parse("<>x1").unwrap(), neg(bx(neg(var(1)))));
    }

    #[test]
    fn precedence_is_unary_and_or_r() {
        assert_eq!(
            parse("~x1 & x2 | x3").unwrap(),
            or(and(neg(var(1)), var(2)), var(3))
        );
        assert_eq!(
            parse("x1 | x2 R x3 & x4").unwrap(),
            r(or(var(1), var(2)), and(var(3), var(4)))
        );
    }

    #[test]
    fn binary_connectives_associate_left() {
        assert_eq!(
            parse("x1 & x2 & x3").unwrap(),
            and(and(var(1), var(2)), var(3))
        );
        assert_eq!(
            parse("x1 | (x2 | x3)").unwrap(),
            or(var(1), or(var(2), var(3)))
        );
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("x1 & ?").unwrap_err();
        assert_eq!(e.pos, 5);
        let e = parse("(x1 | x2").unwrap_err();
        assert!(e.msg.contains(")"));
        assert!(parse("x0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn printer_folds_derived_connectives() {
        // R associates left, so the left operand needs no parentheses.
        let t = parse("(x1 R x2) R (x2 R x1)").unwrap();
        assert_eq!(t.to_string(), "x1 R x2 R (x2 R x1)");
        assert_eq!(parse(&t.to_string()).unwrap(), t);
        let d = parse("<>(x1 & x2)").unwrap();
        assert_eq!(d.to_string(), "<>(x1 & x2)");
    }

    #[test]
    fn comp_counts_nodes() {
        assert_eq!(parse("x1").unwrap().comp(), 1);
        assert_eq!(parse("x1 & ~x2").unwrap().comp(), 4);
        // R doubles its operands.
        assert_eq!(parse("x1 R x2").unwrap().comp(), 9);
    }

    #[test]
    fn vars_are_collected_sorted() {
        let t = parse("x3 & (x1 | x3)").unwrap();
        assert_eq!(t.vars().into_iter().collect::<Vec<_>>(), vec![1, 3]);
    }
}
