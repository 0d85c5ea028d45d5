//! Finite-model semantics: tautology sweeps, consequence checking, the
//! deduction transform and the finite-subset probe.
//!
//! A sweep over a finite library can refute but never prove validity for
//! the whole variety, so positive verdicts are explicitly labeled
//! `...OnLibrary`. Witnesses are deterministic: models in library order,
//! valuations in lexicographic order.

use thiserror::Error;

use crate::lattice::{parse_model_name, LatticeError};
use crate::modal::{eval_term, saturate, ModalError, ModalOml, Valuation};
use crate::term::{bx, neg, or, Term};

/// A named library model.
#[derive(Debug, Clone)]
pub struct Model {
    pub name: String,
    pub oml: ModalOml,
}

/// Default variable cap for valuation sweeps.
pub const DEFAULT_VAR_CAP: usize = 4;

/// The names of the default model library.
pub const DEFAULT_LIBRARY: [&str; 6] = ["b2", "b4", "b8", "mo2", "mo3", "mo2xb2"];

/// The default library: Boolean and non-Boolean, decomposable and not.
pub fn default_library() -> Vec<Model> {
    library_from_names(&DEFAULT_LIBRARY).expect("default library names parse")
}

pub fn library_from_names<S: AsRef<str>>(names: &[S]) -> Result<Vec<Model>, LatticeError> {
    names
        .iter()
        .map(|name| {
            Ok(Model {
                name: name.as_ref().to_string(),
                oml: saturate(parse_model_name(name.as_ref())?),
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TautologyVerdict {
    /// No countermodel in the library; not a validity proof.
    NotRefutedOnLibrary,
    Refuted { model: String, valuation: Valuation },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConsequenceVerdict {
    HoldsOnLibrary,
    Counterexample { model: String, valuation: Valuation },
}

/// The valuation with the given lexicographic rank over `vars`.
fn valuation_at(mut rank: u64, vars: &[u32], n: usize) -> Valuation {
    let mut v = Valuation::new();
    for &x in vars.iter().rev() {
        v.insert(x, (rank % n as u64) as usize);
        rank /= n as u64;
    }
    v
}

/// Least valuation rank where `test` fails, scanning `workers` ranges in
/// parallel when asked to.
fn first_failure<F>(total: u64, workers: usize, test: F) -> Option<u64>
where
    F: Fn(u64) -> bool + Sync,
{
    if workers <= 1 || total < 1024 {
        return (0..total).find(|&i| !test(i));
    }
    let chunk = total.div_ceil(workers as u64);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..workers as u64 {
            let lo = w * chunk;
            let hi = (lo + chunk).min(total);
            let test = &test;
            handles.push(scope.spawn(move || (lo..hi).find(|&i| !test(i))));
        }
        handles
            .into_iter()
            .filter_map(|h| h.join().expect("sweep worker panicked"))
            .min()
    })
}

fn checked_vars(terms: &[&Term], var_cap: usize) -> Result<Vec<u32>, ModalError> {
    let mut vars = std::collections::BTreeSet::new();
    for t in terms {
        vars.extend(t.vars());
    }
    let vars: Vec<u32> = vars.into_iter().collect();
    if vars.len() > var_cap {
        return Err(ModalError::VarCapExceeded {
            vars: vars.len(),
            cap: var_cap,
        });
    }
    Ok(vars)
}

/// Is `v(t) = 1` under every valuation on every library model?
pub fn is_tautology(
    t: &Term,
    models: &[Model],
    var_cap: usize,
) -> Result<TautologyVerdict, ModalError> {
    is_tautology_with(t, models, var_cap, 1)
}

pub fn is_tautology_with(
    t: &Term,
    models: &[Model],
    var_cap: usize,
    workers: usize,
) -> Result<TautologyVerdict, ModalError> {
    let vars = checked_vars(&[t], var_cap)?;
    for model in models {
        let n = model.oml.n();
        let total = (n as u64).pow(vars.len() as u32);
        let refuted = first_failure(total, workers, |rank| {
            let v = valuation_at(rank, &vars, n);
            eval_term(&model.oml, t, &v).expect("valuation is total") == model.oml.base().top()
        });
        if let Some(rank) = refuted {
            return Ok(TautologyVerdict::Refuted {
                model: model.name.clone(),
                valuation: valuation_at(rank, &vars, n),
            });
        }
    }
    Ok(TautologyVerdict::NotRefutedOnLibrary)
}

/// Does every valuation making all premises true make the conclusion true?
pub fn semantic_consequence(
    premises: &[Term],
    conclusion: &Term,
    models: &[Model],
    var_cap: usize,
) -> Result<ConsequenceVerdict, ModalError> {
    semantic_consequence_with(premises, conclusion, models, var_cap, 1)
}

pub fn semantic_consequence_with(
    premises: &[Term],
    conclusion: &Term,
    models: &[Model],
    var_cap: usize,
    workers: usize,
) -> Result<ConsequenceVerdict, ModalError> {
    let mut all: Vec<&Term> = premises.iter().collect();
    all.push(conclusion);
    let vars = checked_vars(&all, var_cap)?;
    for model in models {
        let top = model.oml.base().top();
        let n = model.oml.n();
        let total = (n as u64).pow(vars.len() as u32);
        let refuted = first_failure(total, workers, |rank| {
            let v = valuation_at(rank, &vars, n);
            let premises_hold = premises
                .iter()
                .all(|p| eval_term(&model.oml, p, &v).expect("valuation is total") == top);
            !premises_hold
                || eval_term(&model.oml, conclusion, &v).expect("valuation is total") == top
        });
        if let Some(rank) = refuted {
            return Ok(ConsequenceVerdict::Counterexample {
                model: model.name.clone(),
                valuation: valuation_at(rank, &vars, n),
            });
        }
    }
    Ok(ConsequenceVerdict::HoldsOnLibrary)
}

/// The deduction-theorem transform: proving `t` from an extra hypothesis
/// `gamma` is the same as proving `~[]gamma | t` outright.
pub fn deduction_transform(gamma: &Term, t: &Term) -> Term {
    or(neg(bx(gamma.clone())), t.clone())
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CompactnessError {
    #[error("the full premise list does not yield the conclusion on the library")]
    NotConsequence,
    #[error(transparent)]
    Modal(#[from] ModalError),
}

/// Shortest premise prefix that already yields the conclusion on the
/// library; a diagnostic mirror of the finite-subset property.
pub fn compactness_probe(
    premises: &[Term],
    conclusion: &Term,
    models: &[Model],
    var_cap: usize,
) -> Result<Vec<Term>, CompactnessError> {
    for k in 0..=premises.len() {
        match semantic_consequence(&premises[..k], conclusion, models, var_cap)? {
            ConsequenceVerdict::HoldsOnLibrary => return Ok(premises[..k].to_vec()),
            ConsequenceVerdict::Counterexample { .. } => {}
        }
    }
    Err(CompactnessError::NotConsequence)
}
