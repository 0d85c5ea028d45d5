//! Baer star-semigroups and the semigroup of residuated endomaps of a
//! finite orthomodular lattice.
//!
//! Two concrete carriers implement [`SemigroupOps`]: [`StarSemigroup`] holds
//! explicit Cayley tables (the validation and file-dump path), while
//! [`FoulisSemigroup`] keeps the elements as endomap graphs and multiplies
//! by composition, which scales to the larger map semigroups.

mod closed;
mod dump;
mod residuated;
mod semigroup;

pub use closed::{closed_projections, represent, verify_modal_representation, ClosedProjectionLattice, LatticeRepresentation};
pub use dump::{parse_semigroup_dump, write_semigroup_dump, SemigroupDump};
pub use residuated::{residuated_endomaps, residuated_endomaps_oracle, sasaki_projection, ResiduatedMap};
pub use semigroup::{foulis_semigroup, FoulisSemigroup, DEFAULT_FOULIS_CAP, DEFAULT_TABLE_CAP};

use thiserror::Error;

use crate::bits::Bits;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("cayley table has {got} entries, expected {want}")]
    BadShape { got: usize, want: usize },
    #[error("element id {id} out of range (n = {n})")]
    BadElem { id: usize, n: usize },
    #[error("not associative at ({x}, {y}, {z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("zero law fails at {x}")]
    ZeroLaw { x: usize },
    #[error("star is not an involution at {x}")]
    StarInvolution { x: usize },
    #[error("(x*y)* != y* * x* at ({x}, {y})")]
    StarAntihomomorphism { x: usize, y: usize },
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FoulisError {
    #[error("lattice size {n} exceeds the semigroup cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("not a Baer star-semigroup: no projection represents the right annihilator of {x}")]
    NotBaer { x: usize },
    #[error("projections {e1} and {e2} share a right ideal (table bug: the representing projection is unique)")]
    NonUniqueProjection { x: usize, e1: usize, e2: usize },
    #[error("closed projections do not form a valid orthomodular lattice: {0}")]
    BadProjectionLattice(String),
    #[error("representation failure: {0}")]
    RepresentationFailure(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// The operations every finite star-semigroup carrier exposes.
pub trait SemigroupOps {
    fn size(&self) -> usize;
    fn zero(&self) -> usize;
    fn mul(&self, x: usize, y: usize) -> usize;
    fn star(&self, x: usize) -> usize;

    /// `x * y == 0`; carriers may answer this much faster than `mul`.
    fn product_is_zero(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.zero()
    }
}

/// A finite star-semigroup as explicit tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarSemigroup {
    n: usize,
    cayley: Vec<usize>,
    star: Vec<usize>,
    zero: usize,
}

impl StarSemigroup {
    /// Checks all four axiom families exhaustively (associativity is cubic).
    pub fn validate(
        cayley: Vec<usize>,
        star: Vec<usize>,
        zero: usize,
    ) -> Result<StarSemigroup, SemigroupError> {
        let n = star.len();
        if cayley.len() != n * n {
            return Err(SemigroupError::BadShape {
                got: cayley.len(),
                want: n * n,
            });
        }
        for &id in cayley.iter().chain(star.iter()).chain([&zero]) {
            if id >= n {
                return Err(SemigroupError::BadElem { id, n });
            }
        }
        let g = StarSemigroup {
            n,
            cayley,
            star,
            zero,
        };
        validate_axioms(&g)?;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cayley(&self) -> &[usize] {
        &self.cayley
    }

    pub fn star_table(&self) -> &[usize] {
        &self.star
    }
}

impl SemigroupOps for StarSemigroup {
    fn size(&self) -> usize {
        self.n
    }

    fn zero(&self) -> usize {
        self.zero
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        self.cayley[x * self.n + y]
    }

    fn star(&self, x: usize) -> usize {
        self.star[x]
    }
}

/// Exhaustive check of the star-semigroup axiom families over any carrier:
/// zero laws, star involution, star antihomomorphism, associativity (cubic).
pub fn validate_axioms<G: SemigroupOps>(g: &G) -> Result<(), SemigroupError> {
    let n = g.size();
    for x in 0..n {
        if g.mul(g.zero(), x) != g.zero() || g.mul(x, g.zero()) != g.zero() {
            return Err(SemigroupError::ZeroLaw { x });
        }
        if g.star(g.star(x)) != x {
            return Err(SemigroupError::StarInvolution { x });
        }
    }
    for x in 0..n {
        for y in 0..n {
            if g.star(g.mul(x, y)) != g.mul(g.star(y), g.star(x)) {
                return Err(SemigroupError::StarAntihomomorphism { x, y });
            }
            for z in 0..n {
                if g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)) {
                    return Err(SemigroupError::NotAssociative { x, y, z });
                }
            }
        }
    }
    Ok(())
}

/// Elements with `e = e* = e*e`.
pub fn projections<G: SemigroupOps>(g: &G) -> Vec<usize> {
    (0..g.size())
        .filter(|&e| g.star(e) == e && g.mul(e, e) == e)
        .collect()
}

/// `{y : x * y = 0}` as a bit set.
pub fn right_annihilator<G: SemigroupOps>(g: &G, x: usize) -> Bits {
    let mut out = Bits::empty(g.size());
    for y in 0..g.size() {
        if g.product_is_zero(x, y) {
            out.insert(y);
        }
    }
    out
}

/// The right ideal `e * G` as a bit set.
pub fn right_ideal<G: SemigroupOps>(g: &G, e: usize) -> Bits {
    let mut out = Bits::empty(g.size());
    for y in 0..g.size() {
        out.insert(g.mul(e, y));
    }
    out
}
