//! The built-in model library: Boolean algebras, horizontal sums of
//! four-element blocks, and products of those.

use super::{direct_product, revalidate, FiniteOml, LatticeError, RawLattice};

/// A description of a library lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Builtin {
    /// `2^k` elements, every element central.
    Boolean(u32),
    /// `2n + 2` elements: bounds plus `n` complementary atom pairs.
    Mo(u32),
    /// The two-element chain (alias for `Boolean(1)`).
    Chain2,
    Product(Box<Builtin>, Box<Builtin>),
}

impl Builtin {
    pub fn build(&self) -> Result<FiniteOml, LatticeError> {
        match self {
            Builtin::Boolean(k) => boolean(*k),
            Builtin::Mo(n) => mo(*n),
            Builtin::Chain2 => boolean(1),
            Builtin::Product(a, b) => Ok(direct_product(&a.build()?, &b.build()?)),
        }
    }
}

/// Builds a named library lattice, pre-validated.
pub fn builtin(name: &str, params: &[&str]) -> Result<FiniteOml, LatticeError> {
    let one_u32 = |what: &str| -> Result<u32, LatticeError> {
        match params {
            [p] => p
                .parse::<u32>()
                .map_err(|_| LatticeError::BadParam(format!("{what} wants an integer, got `{p}`"))),
            _ => Err(LatticeError::BadParam(format!(
                "{what} wants exactly one parameter"
            ))),
        }
    };
    match name {
        "boolean" => boolean(one_u32("boolean")?),
        "mo" => mo(one_u32("mo")?),
        "chain2" => {
            if params.is_empty() {
                boolean(1)
            } else {
                Err(LatticeError::BadParam("chain2 takes no parameters".into()))
            }
        }
        "product" => match params {
            [a, b] => Ok(direct_product(
                &parse_model_name(a)?,
                &parse_model_name(b)?,
            )),
            _ => Err(LatticeError::BadParam(
                "product wants exactly two model names".into(),
            )),
        },
        other => Err(LatticeError::UnknownBuiltin(other.to_string())),
    }
}

/// Parses compact model names: `b2`, `b8`, `mo3`, `chain2`, and `x`-joined
/// products such as `mo2xb2`.
pub fn parse_model_name(s: &str) -> Result<FiniteOml, LatticeError> {
    let parts: Vec<&str> = s.split('x').collect();
    let mut out: Option<FiniteOml> = None;
    for part in parts {
        let l = parse_atom_name(part)?;
        out = Some(match out {
            None => l,
            Some(prev) => direct_product(&prev, &l),
        });
    }
    out.ok_or_else(|| LatticeError::UnknownBuiltin(s.to_string()))
}

fn parse_atom_name(s: &str) -> Result<FiniteOml, LatticeError> {
    if s == "chain2" {
        return boolean(1);
    }
    if let Some(num) = s.strip_prefix("mo") {
        let n: u32 = num
            .parse()
            .map_err(|_| LatticeError::UnknownBuiltin(s.to_string()))?;
        return mo(n);
    }
    if let Some(num) = s.strip_prefix('b') {
        let size: u32 = num
            .parse()
            .map_err(|_| LatticeError::UnknownBuiltin(s.to_string()))?;
        if size.count_ones() != 1 || size < 2 {
            return Err(LatticeError::BadParam(format!(
                "b{size}: Boolean algebras have power-of-two size"
            )));
        }
        return boolean(size.trailing_zeros());
    }
    Err(LatticeError::UnknownBuiltin(s.to_string()))
}

const ATOM_LETTERS: [char; 6] = ['p', 'q', 'r', 's', 't', 'u'];

/// The Boolean algebra `2^k`; elements are subsets of `k` atoms, id = bitmask.
pub fn boolean(k: u32) -> Result<FiniteOml, LatticeError> {
    if k == 0 {
        return Err(LatticeError::BadParam(
            "boolean(0) is the degenerate one-element lattice".into(),
        ));
    }
    if k as usize > ATOM_LETTERS.len() {
        return Err(LatticeError::BadParam(format!(
            "boolean({k}) exceeds the supported size"
        )));
    }
    let n: usize = 1 << k;
    let names = (0..n)
        .map(|mask| match mask {
            0 => "0".to_string(),
            m if m == n - 1 => "1".to_string(),
            m => (0..k)
                .filter(|i| m & (1 << i) != 0)
                .map(|i| ATOM_LETTERS[i as usize])
                .collect(),
        })
        .collect();
    let mut leq = Vec::new();
    let mut neg = Vec::new();
    for a in 0..n {
        neg.push((a, !a & (n - 1)));
        for b in 0..n {
            if a & b == a {
                leq.push((a, b));
            }
        }
    }
    finish(RawLattice {
        names,
        leq,
        neg,
        bot: 0,
        top: n - 1,
    })
}

const MO_LETTERS: [char; 16] = [
    'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i', 'j', 'k', 'l', 'm', 'n', 'o', 'p',
];

/// The horizontal sum of `n` four-element blocks: ids are `0`, then the pairs
/// `a_i, ~a_i` in block order, then top.
pub fn mo(n: u32) -> Result<FiniteOml, LatticeError> {
    if n == 0 {
        return Err(LatticeError::BadParam(
            "mo(0) has no atoms; the two-element chain is chain2".into(),
        ));
    }
    if n as usize > MO_LETTERS.len() {
        return Err(LatticeError::BadParam(format!(
            "mo({n}) exceeds the supported size"
        )));
    }
    let size = 2 * n as usize + 2;
    let top = size - 1;
    let mut names = vec!["0".to_string()];
    let mut leq = Vec::new();
    let mut neg = vec![(0, top)];
    for (i, letter) in MO_LETTERS.iter().take(n as usize).enumerate() {
        let atom = 2 * i + 1;
        names.push(letter.to_string());
        names.push(format!("~{letter}"));
        neg.push((atom, atom + 1));
        leq.push((0, atom));
        leq.push((0, atom + 1));
        leq.push((atom, top));
        leq.push((atom + 1, top));
    }
    names.push("1".to_string());
    finish(RawLattice {
        names,
        leq,
        neg,
        bot: 0,
        top,
    })
}

fn finish(raw: RawLattice) -> Result<FiniteOml, LatticeError> {
    let l = raw
        .validate()
        .map_err(|d| d.0.into_iter().next().unwrap())?;
    debug_assert!(revalidate(&l).is_ok());
    Ok(l)
}
