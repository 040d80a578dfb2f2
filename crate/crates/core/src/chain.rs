//! Star-chain n-regularity for a single map and its companions.
//!
//! A chain `[f, f*, f**, …]` of even length n alternates between two spaces
//! (even positions map X → Y, odd positions map Y → X). It is n-regular
//! when, for every cyclic rotation, composing all n maps and then the
//! starting map again reproduces the starting map. Odd lengths are rejected
//! at construction: no analogous alternating condition exists for them, and
//! cycles of odd length are handled by [`crate::category`] instead.

use thiserror::Error;

use crate::geninv::{generalized_inverse, GenInverseError};
use crate::linalg::{LinalgError, LinearMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("star chains require even length, got {n}")]
    OddLength { n: usize },

    #[error("star chains require length at least 2, got {n}")]
    TooShort { n: usize },

    #[error("chain entry {index} does not alternate between the two spaces")]
    Alternation { index: usize },

    #[error("chain is not n-regular; first failing rotation index {index}")]
    NotNRegular { index: usize },

    #[error("expected a chain of length {expected}, got {found}")]
    WrongLength { expected: usize, found: usize },

    #[error("hypothesis held but conclusion `{law}` failed")]
    TheoremContradiction { law: &'static str },

    #[error(transparent)]
    Linalg(#[from] LinalgError),

    #[error(transparent)]
    Inverse(#[from] GenInverseError),
}

/// An alternating chain `[f, f*, f**, …]` of even length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarChain {
    maps: Vec<LinearMap>,
}

impl StarChain {
    pub fn new(maps: Vec<LinearMap>) -> Result<Self, ChainError> {
        let n = maps.len();
        if n < 2 {
            return Err(ChainError::TooShort { n });
        }
        if !n.is_multiple_of(2) {
            return Err(ChainError::OddLength { n });
        }
        let x = maps[0].domain_dim();
        let y = maps[0].codomain_dim();
        for (index, map) in maps.iter().enumerate() {
            let (dom, cod) = if index % 2 == 0 { (x, y) } else { (y, x) };
            if map.domain_dim() != dom || map.codomain_dim() != cod {
                return Err(ChainError::Alternation { index });
            }
        }
        Ok(Self { maps })
    }

    pub fn n(&self) -> usize {
        self.maps.len()
    }

    pub fn maps(&self) -> &[LinearMap] {
        &self.maps
    }

    /// Composite of all n maps starting the application order at `start`:
    /// `maps[start-1]∘…∘maps[start+1]∘maps[start]` with cyclic indices.
    fn cycle_composite(&self, start: usize) -> LinearMap {
        let n = self.n();
        let mut acc = LinearMap::identity(self.maps[start].domain_dim());
        for j in 0..n {
            let map = &self.maps[(start + j) % n];
            acc = map.compose(&acc).expect("alternation validated");
        }
        acc
    }
}

/// Verdict of the full rotation check, with the first failing position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainCheck {
    pub regular: bool,
    /// 0-based position of the first rotation whose identity fails.
    pub first_failure: Option<usize>,
}

/// Checks every cyclic rotation identity
/// `maps[k]∘maps[k+n-1]∘…∘maps[k+1]∘maps[k] = maps[k]`.
pub fn check_star_chain(chain: &StarChain) -> ChainCheck {
    for k in 0..chain.n() {
        let round = chain.cycle_composite(k);
        let lhs = chain.maps[k]
            .compose(&round)
            .expect("endomap of the domain");
        if lhs != chain.maps[k] {
            return ChainCheck {
                regular: false,
                first_failure: Some(k),
            };
        }
    }
    ChainCheck {
        regular: true,
        first_failure: None,
    }
}

/// The product of all n maps in chain order, `f∘f*∘…∘f^{(n-1)}`.
///
/// For an n-regular chain this is an idempotent endomap of Y that absorbs
/// f on the left: `P∘P = P` and `P∘f = f`.
pub fn higher_projector(chain: &StarChain) -> Result<LinearMap, ChainError> {
    let check = check_star_chain(chain);
    if !check.regular {
        return Err(ChainError::NotNRegular {
            index: check.first_failure.expect("failure index set"),
        });
    }
    let n = chain.n();
    let mut acc = LinearMap::identity(chain.maps[n - 1].domain_dim());
    for k in (0..n).rev() {
        acc = chain.maps[k].compose(&acc)?;
    }
    debug_assert!(acc.is_idempotent());
    debug_assert_eq!(acc.compose(&chain.maps[0]).unwrap(), chain.maps[0]);
    Ok(acc)
}

/// The degenerate witness chain `[f, g, f, g, …]` with g the default
/// generalized inverse: `f∘g∘f = f` collapses every rotation composite.
pub fn build_default_chain(f: &LinearMap, n: usize) -> Result<StarChain, ChainError> {
    if n < 2 {
        return Err(ChainError::TooShort { n });
    }
    if !n.is_multiple_of(2) {
        return Err(ChainError::OddLength { n });
    }
    let g = generalized_inverse(f);
    let maps = (0..n)
        .map(|k| if k % 2 == 0 { f.clone() } else { g.clone() })
        .collect();
    StarChain::new(maps)
}

/// For a 4-chain `[f, f*, f**, f***]`: does `f*` agree with `f***` on
/// `Im f`? When it does, `f∘f*∘f = f` and `f*∘f**∘f* = f*` suffice for the
/// full 4-regularity, so both are asserted; a failure there means the
/// reduction itself is broken and surfaces as [`ChainError::TheoremContradiction`].
pub fn reduce_4_to_2(chain: &StarChain) -> Result<bool, ChainError> {
    if chain.n() != 4 {
        return Err(ChainError::WrongLength {
            expected: 4,
            found: chain.n(),
        });
    }
    let [f, f1, f2, f3] = [
        &chain.maps[0],
        &chain.maps[1],
        &chain.maps[2],
        &chain.maps[3],
    ];
    for basis_vec in f.image().basis_rows() {
        if f1.apply(&basis_vec)? != f3.apply(&basis_vec)? {
            return Ok(false);
        }
    }
    if f.compose(f1)?.compose(f)? != *f {
        return Err(ChainError::TheoremContradiction {
            law: "f∘f*∘f = f"
        });
    }
    if f1.compose(f2)?.compose(f1)? != *f1 {
        return Err(ChainError::TheoremContradiction {
            law: "f*∘f**∘f* = f*",
        });
    }
    Ok(true)
}
