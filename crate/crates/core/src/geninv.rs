//! Generalized inverses of linear maps.
//!
//! A map `g: Y → X` is an inner inverse of `f: X → Y` when `f∘g∘f = f`, an
//! outer inverse when `g∘f∘g = g`, and a generalized (reflexive) inverse
//! when both hold. [`generalized_inverse`] constructs one from a choice of
//! complements `X = M ⊕ Ker f` and `Y = Im f ⊕ N`: project onto `Im f`
//! along `N`, invert the restriction `f|_M`, include `M` back into `X`.
//! The result is the unique generalized inverse with `Im g = M` and
//! `Ker g = N`.

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{projector_onto, LinalgError, LinearMap, Rat, RationalMatrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenInverseError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),

    #[error("the supplied map is not an inner inverse")]
    NotAnInnerInverse,

    #[error("the supplied map is not a generalized inverse")]
    NotAGeneralizedInverse,

    #[error("internal consistency error: {0}")]
    Internal(&'static str),
}

/// Outcome of checking both regularity laws for a candidate inverse.
///
/// When a law fails, `witness` holds a standard basis vector on which the
/// first failing identity differs; substituting it exhibits the inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseReport {
    pub is_inner: bool,
    pub is_outer: bool,
    pub is_reflexive: bool,
    pub witness: Option<Vec<Rat>>,
}

fn check_candidate_shapes(f: &LinearMap, g: &LinearMap) -> Result<(), GenInverseError> {
    if g.domain_dim() != f.codomain_dim() || g.codomain_dim() != f.domain_dim() {
        return Err(LinalgError::DimensionMismatch {
            context: "inverse candidate",
            lhs: format!("f: {}→{}", f.domain_dim(), f.codomain_dim()),
            rhs: format!("g: {}→{}", g.domain_dim(), g.codomain_dim()),
        }
        .into());
    }
    Ok(())
}

/// First standard basis vector of the domain on which `a` and `b` disagree.
fn disagreement_witness(a: &LinearMap, b: &LinearMap) -> Option<Vec<Rat>> {
    for c in 0..a.domain_dim() {
        if a.matrix().column(c) != b.matrix().column(c) {
            let mut e = vec![Rat::zero(); a.domain_dim()];
            e[c] = num_traits::One::one();
            return Some(e);
        }
    }
    None
}

/// `f∘g∘f = f`?
pub fn is_inner_inverse(f: &LinearMap, g: &LinearMap) -> Result<bool, GenInverseError> {
    check_candidate_shapes(f, g)?;
    let fgf = f.compose(g)?.compose(f)?;
    Ok(fgf == *f)
}

/// `g∘f∘g = g`?
pub fn is_outer_inverse(f: &LinearMap, g: &LinearMap) -> Result<bool, GenInverseError> {
    check_candidate_shapes(f, g)?;
    let gfg = g.compose(f)?.compose(g)?;
    Ok(gfg == *g)
}

/// Checks both laws at once and digs out a witness for the first failure.
pub fn inverse_report(f: &LinearMap, g: &LinearMap) -> Result<InverseReport, GenInverseError> {
    check_candidate_shapes(f, g)?;
    let fgf = f.compose(g)?.compose(f)?;
    let gfg = g.compose(f)?.compose(g)?;
    let is_inner = fgf == *f;
    let is_outer = gfg == *g;
    let witness = if !is_inner {
        disagreement_witness(&fgf, f)
    } else if !is_outer {
        disagreement_witness(&gfg, g)
    } else {
        None
    };
    Ok(InverseReport {
        is_inner,
        is_outer,
        is_reflexive: is_inner && is_outer,
        witness,
    })
}

/// Upgrades an inner inverse to a reflexive one: `g∘f∘g` satisfies both
/// laws whenever `g` satisfies the inner one.
pub fn reflexive_from_inner(f: &LinearMap, g_in: &LinearMap) -> Result<LinearMap, GenInverseError> {
    if !is_inner_inverse(f, g_in)? {
        return Err(GenInverseError::NotAnInnerInverse);
    }
    let refl = g_in.compose(f)?.compose(g_in)?;
    debug_assert!(is_inner_inverse(f, &refl).unwrap());
    debug_assert!(is_outer_inverse(f, &refl).unwrap());
    Ok(refl)
}

/// The generalized inverse for the default complements
/// `M = complement(Ker f)` and `N = complement(Im f)`.
pub fn generalized_inverse(f: &LinearMap) -> LinearMap {
    generalized_inverse_with(f, None, None)
        .expect("default complements always give a valid decomposition")
}

/// The generalized inverse for the decompositions `X = m ⊕ Ker f` and
/// `Y = Im f ⊕ n`; either side defaults to the deterministic coordinate
/// complement. Unique once `(m, n)` is fixed: `Im g = m`, `Ker g = n`.
pub fn generalized_inverse_with(
    f: &LinearMap,
    m: Option<&Subspace>,
    n: Option<&Subspace>,
) -> Result<LinearMap, GenInverseError> {
    let kernel = f.kernel();
    let image = f.image();
    let m_owned;
    let m = match m {
        Some(s) => s,
        None => {
            m_owned = kernel.complement();
            &m_owned
        }
    };
    let n_owned;
    let n = match n {
        Some(s) => s,
        None => {
            n_owned = image.complement();
            &n_owned
        }
    };
    if !m.is_complementary_to(&kernel) || !image.is_complementary_to(n) {
        return Err(LinalgError::NotADirectSum.into());
    }

    let q = projector_onto(&image, n)?;

    // Columns of `restricted` are f applied to the basis of M; f|_M is a
    // bijection onto Im f, so this matrix has full column rank.
    let m_cols: Vec<Vec<Rat>> = m.basis_rows().collect();
    let restricted = if m_cols.is_empty() {
        RationalMatrix::zeros(f.codomain_dim(), 0)
    } else {
        RationalMatrix::from_columns(
            m_cols
                .iter()
                .map(|v| f.apply(v))
                .collect::<Result<Vec<_>, _>>()?,
        )?
    };

    // Solve f|_M · c = Q(e_j) for every standard basis vector of Y at once.
    let augmented = restricted.hstack(q.matrix())?;
    let (reduced, pivots) = augmented.rref();
    let rank = m.dim();
    if pivots.len() != rank || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return Err(GenInverseError::Internal(
            "restriction of f to the chosen complement is not injective",
        ));
    }
    for r in rank..reduced.rows() {
        for c in restricted.cols()..reduced.cols() {
            if !reduced.entry(r, c).is_zero() {
                return Err(GenInverseError::Internal(
                    "projected vector escaped the image of f",
                ));
            }
        }
    }
    let mut coefficients = RationalMatrix::zeros(rank, f.codomain_dim());
    for r in 0..rank {
        for c in 0..f.codomain_dim() {
            coefficients.set_entry(r, c, reduced.entry(r, restricted.cols() + c).clone());
        }
    }

    // g = (inclusion of M) · coefficients.
    let inclusion = if m_cols.is_empty() {
        RationalMatrix::zeros(f.domain_dim(), 0)
    } else {
        RationalMatrix::from_columns(m_cols)?
    };
    Ok(LinearMap::new(inclusion.mul(&coefficients)?))
}

/// The pair `(P_f, P_{f*}) = (f∘g, g∘f)` for a generalized inverse `g`.
///
/// Both are projectors, `P_f∘f = f∘P_{f*} = f`, and
/// `P_{f*}∘g = g∘P_f = g`.
pub fn range_projectors(
    f: &LinearMap,
    g: &LinearMap,
) -> Result<(LinearMap, LinearMap), GenInverseError> {
    let report = inverse_report(f, g)?;
    if !report.is_reflexive {
        return Err(GenInverseError::NotAGeneralizedInverse);
    }
    let p_f = f.compose(g)?;
    let p_fs = g.compose(f)?;
    debug_assert!(p_f.is_idempotent() && p_fs.is_idempotent());
    debug_assert_eq!(p_f.compose(f).unwrap(), *f);
    debug_assert_eq!(f.compose(&p_fs).unwrap(), *f);
    Ok((p_f, p_fs))
}

/// The image/kernel facts and decompositions that hold for any generalized
/// inverse, each verified independently by exact subspace comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    /// `Im f = Im (f∘g)`
    pub image_of_composite: bool,
    /// `Ker (f∘g) = Ker g`
    pub kernel_of_composite: bool,
    /// `Im (g∘f) = Im g`
    pub image_of_reversed: bool,
    /// `Ker (g∘f) = Ker f`
    pub kernel_of_reversed: bool,
    /// `X = Im g ⊕ Ker f`
    pub domain_decomposes: bool,
    /// `Y = Im f ⊕ Ker g`
    pub codomain_decomposes: bool,
    /// `f|_{Im g}: Im g → Im f` is a bijection
    pub restriction_bijective: bool,
}

impl DecompositionReport {
    pub fn all_hold(&self) -> bool {
        self.image_of_composite
            && self.kernel_of_composite
            && self.image_of_reversed
            && self.kernel_of_reversed
            && self.domain_decomposes
            && self.codomain_decomposes
            && self.restriction_bijective
    }
}

pub fn decomposition_report(
    f: &LinearMap,
    g: &LinearMap,
) -> Result<DecompositionReport, GenInverseError> {
    let report = inverse_report(f, g)?;
    if !report.is_reflexive {
        return Err(GenInverseError::NotAGeneralizedInverse);
    }
    let fg = f.compose(g)?;
    let gf = g.compose(f)?;
    let im_f = f.image();
    let im_g = g.image();
    let ker_f = f.kernel();
    let ker_g = g.kernel();

    let restriction_rank = {
        let cols: Vec<Vec<Rat>> = im_g
            .basis_rows()
            .map(|v| f.apply(&v))
            .collect::<Result<_, _>>()?;
        if cols.is_empty() {
            0
        } else {
            RationalMatrix::from_columns(cols)?.rank()
        }
    };

    Ok(DecompositionReport {
        image_of_composite: im_f == fg.image(),
        kernel_of_composite: fg.kernel() == ker_g,
        image_of_reversed: gf.image() == im_g,
        kernel_of_reversed: gf.kernel() == ker_f,
        domain_decomposes: im_g.is_complementary_to(&ker_f),
        codomain_decomposes: im_f.is_complementary_to(&ker_g),
        restriction_bijective: restriction_rank == im_g.dim() && im_g.dim() == im_f.dim(),
    })
}
