//! Tensor products, duals, and pairings on cocycles; functors between
//! represented categories and natural transformations between them.
//!
//! Conventions, fixed once: the monoidal unit is the 1-dimensional space;
//! `⊗` is the Kronecker product with row-major basis ordering; duals are
//! realized as transposes on the same coordinate space, so the double dual
//! is the identity on the nose; `(X⊗Y)* = X*⊗Y*` with no flip. Object and
//! arrow names gain or lose a trailing `*` under dualization.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::category::{
    verify_cocycle, ArrowDecl, CategoryError, Cocycle, ObjectDecl, ObstructionStructure,
    RepresentedCategory,
};
use crate::linalg::{LinalgError, LinearMap, Rat, RationalMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidalError {
    #[error("cocycles have different lengths: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("functor data does not cover `{0}`")]
    UnknownName(String),

    #[error("functor image is not a cocycle: {0}")]
    ImageNotACocycle(String),

    #[error("{0} does not pass the functor check")]
    NotAFunctor(&'static str),

    #[error("naturality component at `{object}` has the wrong shape")]
    ComponentShape { object: String },

    #[error(transparent)]
    Category(#[from] CategoryError),

    #[error(transparent)]
    Linalg(#[from] LinalgError),

    #[error("internal consistency error: {0}")]
    Internal(&'static str),
}

fn dual_name(name: &str) -> String {
    match name.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{name}*"),
    }
}

fn push_object(objects: &mut Vec<ObjectDecl>, decl: ObjectDecl) {
    if !objects.iter().any(|o| o.name == decl.name) {
        objects.push(decl);
    }
}

fn push_arrow(arrows: &mut Vec<ArrowDecl>, decl: ArrowDecl) {
    if !arrows.iter().any(|a| a.name == decl.name) {
        arrows.push(decl);
    }
}

/// The result of a cocycle-producing construction: the construction builds
/// a fresh category spanned by exactly the produced cocycle.
pub type BuiltCocycle = (RepresentedCategory, Cocycle, ObstructionStructure);

/// Componentwise tensor of two verified cocycles of equal length.
///
/// Objects are `X_i⊗Y_i` (dimensions multiply), arrows are the Kronecker
/// products. The output verifies, and its obstruction is the Kronecker
/// product of the input obstructions, entry-wise.
pub fn tensor_cocycles(
    cat: &RepresentedCategory,
    c1: &Cocycle,
    c2: &Cocycle,
) -> Result<BuiltCocycle, MonoidalError> {
    let obs1 = verify_cocycle(cat, c1)?;
    let obs2 = verify_cocycle(cat, c2)?;
    if c1.len() != c2.len() {
        return Err(MonoidalError::LengthMismatch {
            left: c1.len(),
            right: c2.len(),
        });
    }
    let n = c1.len();
    let maps1 = c1.resolved_maps(cat)?;
    let maps2 = c2.resolved_maps(cat)?;

    let mut objects = Vec::new();
    let mut arrows = Vec::new();
    let mut cocycle_objects = Vec::with_capacity(n);
    let mut cocycle_arrows = Vec::with_capacity(n);
    for i in 0..n {
        let obj_name = format!("{}⊗{}", c1.objects[i], c2.objects[i]);
        let dim = cat.object(&c1.objects[i])?.dim * cat.object(&c2.objects[i])?.dim;
        push_object(
            &mut objects,
            ObjectDecl {
                name: obj_name.clone(),
                dim,
            },
        );
        cocycle_objects.push(obj_name);
    }
    for i in 0..n {
        let arrow_name = format!("{}⊗{}", c1.arrows[i], c2.arrows[i]);
        push_arrow(
            &mut arrows,
            ArrowDecl {
                name: arrow_name.clone(),
                source: cocycle_objects[i].clone(),
                target: cocycle_objects[(i + 1) % n].clone(),
                map: maps1[i].kron(maps2[i]),
            },
        );
        cocycle_arrows.push(arrow_name);
    }

    let category = RepresentedCategory::new(objects, arrows)?;
    let cocycle = Cocycle::new(cocycle_objects, cocycle_arrows);
    let obstruction = verify_cocycle(&category, &cocycle)?;
    for i in 0..n {
        if obstruction.at(i) != &obs1.at(i).kron(obs2.at(i)) {
            return Err(MonoidalError::Internal(
                "tensor obstruction is not the Kronecker product of the factors",
            ));
        }
    }
    Ok((category, cocycle, obstruction))
}

/// The dual cocycle: reverse the traversal, transpose every arrow, and put
/// a `*` on every name. Verifies whenever the input does, and its
/// obstruction at each position is the transpose of the input obstruction
/// at the corresponding original position.
pub fn dual_cocycle(cat: &RepresentedCategory, c: &Cocycle) -> Result<BuiltCocycle, MonoidalError> {
    let obs = verify_cocycle(cat, c)?;
    let n = c.len();
    let maps = c.resolved_maps(cat)?;

    // Position k of the dual cocycle sits over the original position
    // (n - k) mod n and uses the transposed arrow (n - k - 1).
    let mut objects = Vec::new();
    let mut arrows = Vec::new();
    let mut cocycle_objects = Vec::with_capacity(n);
    let mut cocycle_arrows = Vec::with_capacity(n);
    for k in 0..n {
        let orig = (n - k) % n;
        let name = dual_name(&c.objects[orig]);
        let dim = cat.object(&c.objects[orig])?.dim;
        push_object(
            &mut objects,
            ObjectDecl {
                name: name.clone(),
                dim,
            },
        );
        cocycle_objects.push(name);
    }
    for k in 0..n {
        let orig_arrow = n - k - 1;
        let name = dual_name(&c.arrows[orig_arrow]);
        push_arrow(
            &mut arrows,
            ArrowDecl {
                name: name.clone(),
                source: cocycle_objects[k].clone(),
                target: cocycle_objects[(k + 1) % n].clone(),
                map: maps[orig_arrow].transpose(),
            },
        );
        cocycle_arrows.push(name);
    }

    let category = RepresentedCategory::new(objects, arrows)?;
    let cocycle = Cocycle::new(cocycle_objects, cocycle_arrows);
    let obstruction = verify_cocycle(&category, &cocycle)?;
    for k in 0..n {
        let orig = (n - k) % n;
        if obstruction.at(k) != &obs.at(orig).transpose() {
            return Err(MonoidalError::Internal(
                "dual obstruction is not the transpose of the original",
            ));
        }
    }
    Ok((category, cocycle, obstruction))
}

/// Row vector of the evaluation pairing `X*⊗X → I`, `ξ⊗x ↦ ξ(x)`:
/// entry at Kronecker index `a·d + b` is `δ_ab`.
fn evaluation_row(dim: usize) -> LinearMap {
    let mut entries = vec![Rat::zero(); dim * dim];
    for a in 0..dim {
        entries[a * dim + a] = Rat::one();
    }
    LinearMap::new(RationalMatrix::new(1, dim * dim, entries).expect("shape by construction"))
}

/// Checks the regularity of the standard evaluation pairing against the
/// transpose duals:
///
/// - per arrow, the adjunction `ev_{X_i}∘(f_iᵀ⊗id) = ev_{X_{i+1}}∘(id⊗f_i)`
///   as maps `X*_{i+1}⊗X_i → I`;
/// - per object, `ev∘(e_{X*_i}⊗id) = ev∘(id⊗e_{X_i})`, with `e_{X*_i}`
///   taken from the verified dual cocycle.
pub fn pairing_check(cat: &RepresentedCategory, c: &Cocycle) -> Result<bool, MonoidalError> {
    let obs = verify_cocycle(cat, c)?;
    let (_, _, dual_obs) = dual_cocycle(cat, c)?;
    let n = c.len();
    let maps = c.resolved_maps(cat)?;
    for (i, map) in maps.iter().enumerate() {
        let d_i = cat.object(&c.objects[i])?.dim;
        let d_next = cat.object(&c.objects[(i + 1) % n])?.dim;
        let lhs = evaluation_row(d_i).compose(&map.transpose().kron(&LinearMap::identity(d_i)))?;
        let rhs = evaluation_row(d_next).compose(&LinearMap::identity(d_next).kron(map))?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    for i in 0..n {
        let d_i = cat.object(&c.objects[i])?.dim;
        let ev = evaluation_row(d_i);
        let dual_position = (n - i) % n;
        let lhs = ev.compose(&dual_obs.at(dual_position).kron(&LinearMap::identity(d_i)))?;
        let rhs = ev.compose(&LinearMap::identity(d_i).kron(obs.at(i)))?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Name-level functor data: object names to object names, arrow names to
/// arrow names.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FunctorData {
    pub object_map: BTreeMap<String, String>,
    pub arrow_map: BTreeMap<String, String>,
}

impl FunctorData {
    pub fn identity(cat: &RepresentedCategory) -> Self {
        Self {
            object_map: cat
                .objects()
                .iter()
                .map(|o| (o.name.clone(), o.name.clone()))
                .collect(),
            arrow_map: cat
                .arrows()
                .iter()
                .map(|a| (a.name.clone(), a.name.clone()))
                .collect(),
        }
    }

    fn object_image(&self, name: &str) -> Result<&String, MonoidalError> {
        self.object_map
            .get(name)
            .ok_or_else(|| MonoidalError::UnknownName(name.to_string()))
    }

    fn arrow_image(&self, name: &str) -> Result<&String, MonoidalError> {
        self.arrow_map
            .get(name)
            .ok_or_else(|| MonoidalError::UnknownName(name.to_string()))
    }

    /// The image of a cocycle under the name maps, checked to be a
    /// well-formed cocycle over `dst`.
    pub fn image_cocycle(
        &self,
        dst: &RepresentedCategory,
        c: &Cocycle,
    ) -> Result<Cocycle, MonoidalError> {
        let objects: Vec<String> = c
            .objects
            .iter()
            .map(|o| self.object_image(o).cloned())
            .collect::<Result<_, _>>()?;
        let arrows: Vec<String> = c
            .arrows
            .iter()
            .map(|a| self.arrow_image(a).cloned())
            .collect::<Result<_, _>>()?;
        let image = Cocycle::new(objects, arrows);
        image
            .validate(dst)
            .map_err(|e| MonoidalError::ImageNotACocycle(e.to_string()))?;
        Ok(image)
    }
}

/// Per-condition outcome of the functor check over a cocycle family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FunctorReport {
    /// Every image cocycle satisfies the cyclic identities in the target.
    pub images_regular: bool,
    /// Image obstructions are conjugate to the source obstructions:
    /// equal object dimensions and equal idempotent ranks at every index.
    pub obstructions_preserved: bool,
    /// Every image arrow absorbs the image obstruction at its source.
    pub absorption: bool,
}

impl FunctorReport {
    pub fn passed(&self) -> bool {
        self.images_regular && self.obstructions_preserved && self.absorption
    }
}

pub fn functor_report(
    src: &RepresentedCategory,
    dst: &RepresentedCategory,
    functor: &FunctorData,
    cocycles: &[Cocycle],
) -> Result<FunctorReport, MonoidalError> {
    let mut report = FunctorReport {
        images_regular: true,
        obstructions_preserved: true,
        absorption: true,
    };
    for c in cocycles {
        let src_obs = verify_cocycle(src, c)?;
        let image = functor.image_cocycle(dst, c)?;
        let image_obs = match verify_cocycle(dst, &image) {
            Ok(obs) => obs,
            Err(CategoryError::NotRegular { .. }) => {
                return Ok(FunctorReport {
                    images_regular: false,
                    obstructions_preserved: false,
                    absorption: false,
                });
            }
            Err(other) => return Err(other.into()),
        };
        let n = c.len();
        for i in 0..n {
            let src_dim = src.object(&c.objects[i])?.dim;
            let dst_dim = dst.object(&image.objects[i])?.dim;
            if src_dim != dst_dim || src_obs.at(i).rank() != image_obs.at(i).rank() {
                report.obstructions_preserved = false;
            }
            let image_map = &dst.arrow(&image.arrows[i])?.map;
            if &image_map.compose(image_obs.at(i))? != image_map {
                report.absorption = false;
            }
        }
    }
    Ok(report)
}

/// `true` iff the functor preserves regularity, obstructions (up to
/// conjugation), and the absorption identities on the supplied cocycles.
pub fn functor_check(
    src: &RepresentedCategory,
    dst: &RepresentedCategory,
    functor: &FunctorData,
    cocycles: &[Cocycle],
) -> Result<bool, MonoidalError> {
    Ok(functor_report(src, dst, functor, cocycles)?.passed())
}

/// Checks the naturality squares `s_{X_{i+1}}∘F(f_i) = G(f_i)∘s_{X_i}` for
/// two functors that both pass [`functor_check`] on the same cocycles.
/// Components are indexed by source object name.
pub fn natural_transformation_check(
    src: &RepresentedCategory,
    dst: &RepresentedCategory,
    f: &FunctorData,
    g: &FunctorData,
    components: &BTreeMap<String, LinearMap>,
    cocycles: &[Cocycle],
) -> Result<bool, MonoidalError> {
    if !functor_check(src, dst, f, cocycles)? {
        return Err(MonoidalError::NotAFunctor("F"));
    }
    if !functor_check(src, dst, g, cocycles)? {
        return Err(MonoidalError::NotAFunctor("G"));
    }
    for c in cocycles {
        let n = c.len();
        let f_image = f.image_cocycle(dst, c)?;
        let g_image = g.image_cocycle(dst, c)?;
        for i in 0..n {
            let component_at = |object: &str| -> Result<&LinearMap, MonoidalError> {
                let s = components
                    .get(object)
                    .ok_or_else(|| MonoidalError::UnknownName(object.to_string()))?;
                let f_dim = dst.object(f.object_image(object)?)?.dim;
                let g_dim = dst.object(g.object_image(object)?)?.dim;
                if s.domain_dim() != f_dim || s.codomain_dim() != g_dim {
                    return Err(MonoidalError::ComponentShape {
                        object: object.to_string(),
                    });
                }
                Ok(s)
            };
            let s_here = component_at(&c.objects[i])?;
            let s_next = component_at(&c.objects[(i + 1) % n])?;
            let f_map = &dst.arrow(&f_image.arrows[i])?.map;
            let g_map = &dst.arrow(&g_image.arrows[i])?.map;
            if s_next.compose(f_map)? != g_map.compose(s_here)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
