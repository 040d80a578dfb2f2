//! Obstructed algebras, coalgebras, almost bialgebras, and their modules,
//! all finite-dimensional over the rationals.
//!
//! Structure maps are plain linear maps between Kronecker powers of the
//! underlying space: multiplication `A⊗A → A` is a `d × d²` matrix,
//! comultiplication is its mirror, and the designated obstruction is an
//! idempotent endomap `e` that the structure maps must interleave with:
//! `m∘(e⊗e) = e∘m` on the algebra side, `Δ∘e = (e⊗e)∘Δ` on the coalgebra
//! side. Convolution `s⋆t = m∘(s⊗t)∘Δ` and the weak antipode laws
//! `S⋆id⋆S = S`, `id⋆S⋆id = id` live on almost bialgebras. Duality is
//! everywhere the transpose under the standard dual-basis pairing.

use thiserror::Error;

use crate::linalg::{LinalgError, LinearMap, Rat, RationalMatrix};
use num_traits::One;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not idempotent")]
    NotIdempotent(&'static str),

    #[error("multiplication is not associative")]
    NotAssociative,

    #[error("comultiplication is not coassociative")]
    NotCoassociative,

    #[error("{map} has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    StructureShape {
        map: &'static str,
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },

    #[error("algebra and coalgebra obstructions differ")]
    ObstructionMismatch,

    #[error("comultiplication is not multiplicative on products")]
    NotCompatible,

    #[error("declared unit is not two-sided")]
    UnitLaw,

    #[error("declared counit is not two-sided")]
    CounitLaw,

    #[error("the candidate is not multiplicative")]
    NotMultiplicative,

    #[error("the algebra does not satisfy the obstruction law")]
    NotRegularAlgebra,

    #[error("the coalgebra does not satisfy the obstruction law")]
    NotRegularCoalgebra,

    #[error(transparent)]
    Linalg(#[from] LinalgError),

    #[error("internal consistency error: {0}")]
    Internal(&'static str),
}

fn expect_shape(
    map: &LinearMap,
    name: &'static str,
    codomain: usize,
    domain: usize,
) -> Result<(), AlgebraError> {
    if map.codomain_dim() != codomain || map.domain_dim() != domain {
        return Err(AlgebraError::StructureShape {
            map: name,
            rows: map.codomain_dim(),
            cols: map.domain_dim(),
            expected_rows: codomain,
            expected_cols: domain,
        });
    }
    Ok(())
}

/// The flip `A⊗A → A⊗A`, `x⊗y ↦ y⊗x`, in the Kronecker basis.
pub fn tensor_swap(dim: usize) -> LinearMap {
    let mut m = RationalMatrix::zeros(dim * dim, dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            m.set_entry(j * dim + i, i * dim + j, Rat::one());
        }
    }
    LinearMap::new(m)
}

/// `m∘(m⊗id) = m∘(id⊗m)`?
pub fn multiplication_associative(mult: &LinearMap) -> Result<bool, AlgebraError> {
    let d = mult.codomain_dim();
    expect_shape(mult, "multiplication", d, d * d)?;
    let id = LinearMap::identity(d);
    let left = mult.compose(&mult.kron(&id))?;
    let right = mult.compose(&id.kron(mult))?;
    Ok(left == right)
}

/// `(Δ⊗id)∘Δ = (id⊗Δ)∘Δ`?
pub fn comultiplication_coassociative(comult: &LinearMap) -> Result<bool, AlgebraError> {
    let d = comult.domain_dim();
    expect_shape(comult, "comultiplication", d * d, d)?;
    let id = LinearMap::identity(d);
    let left = comult.kron(&id).compose(comult)?;
    let right = id.kron(comult).compose(comult)?;
    Ok(left == right)
}

/// The obstruction law on the algebra side: `m∘(e⊗e) = e∘m`.
pub fn algebra_obstruction_law(mult: &LinearMap, e: &LinearMap) -> Result<bool, AlgebraError> {
    let d = mult.codomain_dim();
    expect_shape(mult, "multiplication", d, d * d)?;
    expect_shape(e, "obstruction", d, d)?;
    Ok(mult.compose(&e.kron(e))? == e.compose(mult)?)
}

/// The obstruction law on the coalgebra side: `Δ∘e = (e⊗e)∘Δ`.
pub fn coalgebra_obstruction_law(comult: &LinearMap, e: &LinearMap) -> Result<bool, AlgebraError> {
    let d = comult.domain_dim();
    expect_shape(comult, "comultiplication", d * d, d)?;
    expect_shape(e, "obstruction", d, d)?;
    Ok(comult.compose(e)? == e.kron(e).compose(comult)?)
}

/// `Δ∘m = (m⊗m)∘(id⊗swap⊗id)∘(Δ⊗Δ)`?
pub fn bialgebra_compatibility(mult: &LinearMap, comult: &LinearMap) -> Result<bool, AlgebraError> {
    let d = mult.codomain_dim();
    expect_shape(mult, "multiplication", d, d * d)?;
    expect_shape(comult, "comultiplication", d * d, d)?;
    let id = LinearMap::identity(d);
    let lhs = comult.compose(mult)?;
    let rhs = mult
        .kron(mult)
        .compose(&id.kron(&tensor_swap(d)).kron(&id))?
        .compose(&comult.kron(comult))?;
    Ok(lhs == rhs)
}

/// `m∘(u⊗id) = id = m∘(id⊗u)`?
pub fn unit_laws(mult: &LinearMap, unit: &LinearMap) -> Result<bool, AlgebraError> {
    let d = mult.codomain_dim();
    expect_shape(mult, "multiplication", d, d * d)?;
    expect_shape(unit, "unit", d, 1)?;
    let id = LinearMap::identity(d);
    Ok(mult.compose(&unit.kron(&id))? == id && mult.compose(&id.kron(unit))? == id)
}

/// `(ε⊗id)∘Δ = id = (id⊗ε)∘Δ`?
pub fn counit_laws(comult: &LinearMap, counit: &LinearMap) -> Result<bool, AlgebraError> {
    let d = comult.domain_dim();
    expect_shape(comult, "comultiplication", d * d, d)?;
    expect_shape(counit, "counit", 1, d)?;
    let id = LinearMap::identity(d);
    Ok(counit.kron(&id).compose(comult)? == id && id.kron(counit).compose(comult)? == id)
}

/// Associative multiplication on `Q^dim` with an idempotent obstruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructedAlgebra {
    dim: usize,
    mult: LinearMap,
    obstruction: LinearMap,
}

impl ObstructedAlgebra {
    pub fn new(mult: LinearMap, obstruction: LinearMap) -> Result<Self, AlgebraError> {
        let dim = mult.codomain_dim();
        expect_shape(&mult, "multiplication", dim, dim * dim)?;
        expect_shape(&obstruction, "obstruction", dim, dim)?;
        if !obstruction.is_idempotent() {
            return Err(AlgebraError::NotIdempotent("algebra obstruction"));
        }
        if !multiplication_associative(&mult)? {
            return Err(AlgebraError::NotAssociative);
        }
        Ok(Self {
            dim,
            mult,
            obstruction,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &LinearMap {
        &self.mult
    }

    pub fn obstruction(&self) -> &LinearMap {
        &self.obstruction
    }
}

/// Coassociative comultiplication on `Q^dim` with an idempotent obstruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructedCoalgebra {
    dim: usize,
    comult: LinearMap,
    obstruction: LinearMap,
}

impl ObstructedCoalgebra {
    pub fn new(comult: LinearMap, obstruction: LinearMap) -> Result<Self, AlgebraError> {
        let dim = comult.domain_dim();
        expect_shape(&comult, "comultiplication", dim * dim, dim)?;
        expect_shape(&obstruction, "obstruction", dim, dim)?;
        if !obstruction.is_idempotent() {
            return Err(AlgebraError::NotIdempotent("coalgebra obstruction"));
        }
        if !comultiplication_coassociative(&comult)? {
            return Err(AlgebraError::NotCoassociative);
        }
        Ok(Self {
            dim,
            comult,
            obstruction,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comult(&self) -> &LinearMap {
        &self.comult
    }

    pub fn obstruction(&self) -> &LinearMap {
        &self.obstruction
    }
}

/// `m∘(e⊗e) = e∘m`?
pub fn check_regular_algebra(a: &ObstructedAlgebra) -> bool {
    algebra_obstruction_law(&a.mult, &a.obstruction).expect("shapes validated at construction")
}

/// `Δ∘e = (e⊗e)∘Δ`?
pub fn check_regular_coalgebra(c: &ObstructedCoalgebra) -> bool {
    coalgebra_obstruction_law(&c.comult, &c.obstruction).expect("shapes validated at construction")
}

/// Algebra and coalgebra on the same space with the same obstruction and
/// multiplicative comultiplication; unit and counit are optional and
/// validated when present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostBialgebra {
    pub algebra: ObstructedAlgebra,
    pub coalgebra: ObstructedCoalgebra,
    pub unit: Option<LinearMap>,
    pub counit: Option<LinearMap>,
}

impl AlmostBialgebra {
    pub fn new(
        algebra: ObstructedAlgebra,
        coalgebra: ObstructedCoalgebra,
        unit: Option<LinearMap>,
        counit: Option<LinearMap>,
    ) -> Result<Self, AlgebraError> {
        if algebra.dim != coalgebra.dim {
            return Err(AlgebraError::StructureShape {
                map: "coalgebra",
                rows: coalgebra.dim,
                cols: coalgebra.dim,
                expected_rows: algebra.dim,
                expected_cols: algebra.dim,
            });
        }
        if algebra.obstruction != coalgebra.obstruction {
            return Err(AlgebraError::ObstructionMismatch);
        }
        if !bialgebra_compatibility(&algebra.mult, &coalgebra.comult)? {
            return Err(AlgebraError::NotCompatible);
        }
        if let Some(u) = &unit {
            if !unit_laws(&algebra.mult, u)? {
                return Err(AlgebraError::UnitLaw);
            }
        }
        if let Some(eps) = &counit {
            if !counit_laws(&coalgebra.comult, eps)? {
                return Err(AlgebraError::CounitLaw);
            }
        }
        Ok(Self {
            algebra,
            coalgebra,
            unit,
            counit,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    /// Convolution product `s⋆t = m∘(s⊗t)∘Δ` of two endomaps.
    pub fn convolution(&self, s: &LinearMap, t: &LinearMap) -> Result<LinearMap, AlgebraError> {
        let d = self.dim();
        expect_shape(s, "convolution factor", d, d)?;
        expect_shape(t, "convolution factor", d, d)?;
        Ok(self
            .algebra
            .mult
            .compose(&s.kron(t))?
            .compose(&self.coalgebra.comult)?)
    }
}

/// `s∘m = m∘(s⊗s)`?
pub fn hom_m_check(b: &AlmostBialgebra, s: &LinearMap) -> Result<bool, AlgebraError> {
    let d = b.dim();
    expect_shape(s, "candidate endomap", d, d)?;
    Ok(s.compose(&b.algebra.mult)? == b.algebra.mult.compose(&s.kron(s))?)
}

/// The weak antipode laws `S⋆id⋆S = S` and `id⋆S⋆id = id` for a
/// multiplicative `S`. Convolution associativity makes the triple products
/// unambiguous; both bracketings are computed and compared as a sanity
/// check before the laws themselves.
pub fn check_almost_hopf(b: &AlmostBialgebra, antipode: &LinearMap) -> Result<bool, AlgebraError> {
    if !hom_m_check(b, antipode)? {
        return Err(AlgebraError::NotMultiplicative);
    }
    let id = LinearMap::identity(b.dim());
    let triple = |x: &LinearMap, y: &LinearMap, z: &LinearMap| -> Result<LinearMap, AlgebraError> {
        let left = b.convolution(&b.convolution(x, y)?, z)?;
        let right = b.convolution(x, &b.convolution(y, z)?)?;
        if left != right {
            return Err(AlgebraError::Internal("convolution is not associative"));
        }
        Ok(left)
    };
    let s_id_s = triple(antipode, &id, antipode)?;
    let id_s_id = triple(&id, antipode, &id)?;
    Ok(s_id_s == *antipode && id_s_id == id)
}

/// The dual coalgebra: comultiplication and obstruction are the transposes
/// of the algebra's under the dual-basis pairing. Requires the input to
/// satisfy the algebra obstruction law and re-checks the output.
pub fn dualize_algebra(a: &ObstructedAlgebra) -> Result<ObstructedCoalgebra, AlgebraError> {
    if !check_regular_algebra(a) {
        return Err(AlgebraError::NotRegularAlgebra);
    }
    let dual = ObstructedCoalgebra::new(a.mult.transpose(), a.obstruction.transpose())?;
    if !check_regular_coalgebra(&dual) {
        return Err(AlgebraError::Internal("dual coalgebra law failed"));
    }
    Ok(dual)
}

/// Inverse direction of [`dualize_algebra`]; the two compose to the
/// identity on the underlying data.
pub fn dualize_coalgebra(c: &ObstructedCoalgebra) -> Result<ObstructedAlgebra, AlgebraError> {
    if !check_regular_coalgebra(c) {
        return Err(AlgebraError::NotRegularCoalgebra);
    }
    let dual = ObstructedAlgebra::new(c.comult.transpose(), c.obstruction.transpose())?;
    if !check_regular_algebra(&dual) {
        return Err(AlgebraError::Internal("dual algebra law failed"));
    }
    Ok(dual)
}

/// The dual almost bialgebra: multiplication and comultiplication swap
/// roles through transposition, unit and counit likewise.
pub fn dualize_bialgebra(b: &AlmostBialgebra) -> Result<AlmostBialgebra, AlgebraError> {
    AlmostBialgebra::new(
        dualize_coalgebra(&b.coalgebra)?,
        dualize_algebra(&b.algebra)?,
        b.counit.as_ref().map(LinearMap::transpose),
        b.unit.as_ref().map(LinearMap::transpose),
    )
}

/// Left module laws for an action `ρ: A⊗M → M`:
/// `ρ∘(m⊗id_M) = ρ∘(id_A⊗ρ)` and `ρ∘(e_A⊗e_M) = e_M∘ρ`.
pub fn check_regular_module(
    a: &ObstructedAlgebra,
    action: &LinearMap,
    e_m: &LinearMap,
) -> Result<bool, AlgebraError> {
    let m_dim = action.codomain_dim();
    expect_shape(action, "module action", m_dim, a.dim * m_dim)?;
    expect_shape(e_m, "module obstruction", m_dim, m_dim)?;
    if !e_m.is_idempotent() {
        return Err(AlgebraError::NotIdempotent("module obstruction"));
    }
    let id_m = LinearMap::identity(m_dim);
    let id_a = LinearMap::identity(a.dim);
    let assoc = action.compose(&a.mult.kron(&id_m))? == action.compose(&id_a.kron(action))?;
    let obstruction = action.compose(&a.obstruction.kron(e_m))? == e_m.compose(action)?;
    Ok(assoc && obstruction)
}

/// Comodule laws for a coaction `δ: M → A⊗M`:
/// `(Δ⊗id_M)∘δ = (id_A⊗δ)∘δ` and `(e_A⊗e_M)∘δ = δ∘e_M` — the
/// transpose-duals of the module laws.
pub fn check_regular_comodule(
    c: &ObstructedCoalgebra,
    coaction: &LinearMap,
    e_m: &LinearMap,
) -> Result<bool, AlgebraError> {
    let m_dim = coaction.domain_dim();
    expect_shape(coaction, "comodule coaction", c.dim * m_dim, m_dim)?;
    expect_shape(e_m, "comodule obstruction", m_dim, m_dim)?;
    if !e_m.is_idempotent() {
        return Err(AlgebraError::NotIdempotent("comodule obstruction"));
    }
    let id_m = LinearMap::identity(m_dim);
    let id_a = LinearMap::identity(c.dim);
    let coassoc =
        c.comult.kron(&id_m).compose(coaction)? == id_a.kron(coaction).compose(coaction)?;
    let obstruction = c.obstruction.kron(e_m).compose(coaction)? == coaction.compose(e_m)?;
    Ok(coassoc && obstruction)
}

/// The group algebra of `Z_n`: basis indexed by group elements,
/// `m(b_i⊗b_j) = b_{i+j mod n}`, group-like comultiplication, identity
/// obstruction, unit `b_0`, counit `ε ≡ 1`. A genuine Hopf fixture whose
/// antipode is [`group_inversion`].
pub fn group_algebra(order: usize) -> AlmostBialgebra {
    assert!(order >= 1, "group order must be positive");
    let mut mult = RationalMatrix::zeros(order, order * order);
    for i in 0..order {
        for j in 0..order {
            mult.set_entry((i + j) % order, i * order + j, Rat::one());
        }
    }
    let mut comult = RationalMatrix::zeros(order * order, order);
    for i in 0..order {
        comult.set_entry(i * order + i, i, Rat::one());
    }
    let mut unit = RationalMatrix::zeros(order, 1);
    unit.set_entry(0, 0, Rat::one());
    let counit = RationalMatrix::new(1, order, vec![Rat::one(); order]).expect("row shape");

    let algebra = ObstructedAlgebra::new(LinearMap::new(mult), LinearMap::identity(order))
        .expect("group multiplication is associative");
    let coalgebra = ObstructedCoalgebra::new(LinearMap::new(comult), LinearMap::identity(order))
        .expect("group-like comultiplication is coassociative");
    AlmostBialgebra::new(
        algebra,
        coalgebra,
        Some(LinearMap::new(unit)),
        Some(LinearMap::new(counit)),
    )
    .expect("group algebra is a bialgebra")
}

/// The inversion map `b_i ↦ b_{-i mod n}` of the `Z_n` group algebra.
pub fn group_inversion(order: usize) -> LinearMap {
    let mut m = RationalMatrix::zeros(order, order);
    for i in 0..order {
        m.set_entry((order - i) % order, i, Rat::one());
    }
    LinearMap::new(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(rows: &[&[i64]]) -> LinearMap {
        LinearMap::from_int_rows(rows)
    }

    /// Coordinate-wise product on Q²: m(b_i⊗b_j) = δ_ij b_i.
    fn coordinatewise_mult() -> LinearMap {
        map(&[&[1, 0, 0, 0], &[0, 0, 0, 1]])
    }

    /// Group-like comultiplication on Q²: Δ(b_i) = b_i⊗b_i.
    fn grouplike_comult() -> LinearMap {
        map(&[&[1, 0], &[0, 0], &[0, 0], &[0, 1]])
    }

    #[test]
    fn coordinatewise_algebra_with_identity_obstruction_is_regular() {
        let a = ObstructedAlgebra::new(coordinatewise_mult(), LinearMap::identity(2)).unwrap();
        assert!(check_regular_algebra(&a));
    }

    #[test]
    fn coordinate_projection_is_a_regular_obstruction() {
        let e = map(&[&[1, 0], &[0, 0]]);
        let a = ObstructedAlgebra::new(coordinatewise_mult(), e).unwrap();
        assert!(check_regular_algebra(&a));
    }

    #[test]
    fn skew_idempotent_breaks_the_algebra_law() {
        // e = [[1,1],[0,0]] is idempotent but m∘(e⊗e) ≠ e∘m: on b0⊗b1 the
        // left side gives b0 while the right side gives 0.
        let e = map(&[&[1, 1], &[0, 0]]);
        assert!(e.is_idempotent());
        let a = ObstructedAlgebra::new(coordinatewise_mult(), e).unwrap();
        assert!(!check_regular_algebra(&a));
    }

    #[test]
    fn grouplike_coalgebra_examples() {
        let c = ObstructedCoalgebra::new(grouplike_comult(), LinearMap::identity(2)).unwrap();
        assert!(check_regular_coalgebra(&c));

        let c = ObstructedCoalgebra::new(grouplike_comult(), map(&[&[1, 0], &[0, 0]])).unwrap();
        assert!(check_regular_coalgebra(&c));
    }

    #[test]
    fn transposed_skew_idempotent_breaks_the_coalgebra_law() {
        // The transpose-dual of the algebra counterexample: on b0 the left
        // side is b0⊗b0 + b1⊗b1, the right side the full rank-one square.
        let e = map(&[&[1, 0], &[1, 0]]);
        assert!(e.is_idempotent());
        let c = ObstructedCoalgebra::new(grouplike_comult(), e).unwrap();
        assert!(!check_regular_coalgebra(&c));
    }

    #[test]
    fn convolution_of_identities_is_the_squaring_map() {
        let b = group_algebra(2);
        let id = LinearMap::identity(2);
        let sq = b.convolution(&id, &id).unwrap();
        // 1 ↦ 1, g ↦ g² = 1.
        assert_eq!(sq, map(&[&[1, 1], &[0, 0]]));
    }

    #[test]
    fn convolution_of_zero_maps_is_zero() {
        let b = group_algebra(2);
        let z = LinearMap::zero(2, 2);
        assert!(b.convolution(&z, &z).unwrap().is_zero());
    }

    #[test]
    fn convolution_with_inversion_gives_unit_counit() {
        let b = group_algebra(2);
        let id = LinearMap::identity(2);
        let s = group_inversion(2);
        let conv = b.convolution(&id, &s).unwrap();
        let unit_counit = b
            .unit
            .as_ref()
            .unwrap()
            .compose(b.counit.as_ref().unwrap())
            .unwrap();
        assert_eq!(conv, unit_counit);
        assert_eq!(conv, map(&[&[1, 1], &[0, 0]]));
    }

    #[test]
    fn hom_m_examples() {
        let b = group_algebra(2);
        assert!(hom_m_check(&b, &LinearMap::identity(2)).unwrap());
        assert!(hom_m_check(&b, &group_inversion(2)).unwrap());
        // 1 ↦ 1, g ↦ 1 + g is not multiplicative: s(g·g) = 1 but s(g)² = 1 + 2g + g².
        let s = map(&[&[1, 1], &[0, 1]]);
        assert!(!hom_m_check(&b, &s).unwrap());
    }

    #[test]
    fn group_inversion_satisfies_weak_antipode_laws() {
        for order in [2usize, 3] {
            let b = group_algebra(order);
            assert!(check_almost_hopf(&b, &group_inversion(order)).unwrap());
        }
    }

    #[test]
    fn zero_antipode_fails_weak_laws() {
        let b = group_algebra(2);
        let zero = LinearMap::zero(2, 2);
        assert!(hom_m_check(&b, &zero).unwrap());
        assert!(!check_almost_hopf(&b, &zero).unwrap());
    }

    #[test]
    fn non_multiplicative_antipode_is_rejected() {
        let b = group_algebra(2);
        let s = map(&[&[1, 1], &[0, 1]]);
        assert_eq!(
            check_almost_hopf(&b, &s).unwrap_err(),
            AlgebraError::NotMultiplicative
        );
    }

    #[test]
    fn dualize_algebra_examples() {
        let a = ObstructedAlgebra::new(coordinatewise_mult(), LinearMap::identity(2)).unwrap();
        let dual = dualize_algebra(&a).unwrap();
        // The dual of the coordinate-wise product is group-like.
        assert_eq!(dual.comult(), &grouplike_comult());
        assert!(check_regular_coalgebra(&dual));

        let one = ObstructedAlgebra::new(map(&[&[1]]), LinearMap::identity(1)).unwrap();
        let dual = dualize_algebra(&one).unwrap();
        assert_eq!(dual.comult(), &map(&[&[1]]));

        let a = ObstructedAlgebra::new(coordinatewise_mult(), map(&[&[1, 0], &[0, 0]])).unwrap();
        let dual = dualize_algebra(&a).unwrap();
        assert_eq!(dual.obstruction(), &map(&[&[1, 0], &[0, 0]]));
        assert!(check_regular_coalgebra(&dual));
    }

    #[test]
    fn dualize_round_trip_is_identity() {
        let a = ObstructedAlgebra::new(coordinatewise_mult(), map(&[&[1, 0], &[0, 0]])).unwrap();
        let back = dualize_coalgebra(&dualize_algebra(&a).unwrap()).unwrap();
        assert_eq!(back, a);

        let b = group_algebra(3);
        let double = dualize_bialgebra(&dualize_bialgebra(&b).unwrap()).unwrap();
        assert_eq!(double, b);
    }

    #[test]
    fn self_action_is_a_regular_module() {
        // A acting on itself by multiplication with matching obstructions
        // reduces to associativity plus the algebra law.
        let e = map(&[&[1, 0], &[0, 0]]);
        let a = ObstructedAlgebra::new(coordinatewise_mult(), e.clone()).unwrap();
        assert!(check_regular_module(&a, a.mult(), &e).unwrap());
    }

    #[test]
    fn trivial_module_over_the_group_algebra() {
        // 1-dimensional module ρ(a⊗x) = ε(a)x over Z₂.
        let b = group_algebra(2);
        let action = map(&[&[1, 1]]);
        assert!(check_regular_module(&b.algebra, &action, &LinearMap::identity(1)).unwrap());
    }

    #[test]
    fn zero_algebra_obstruction_with_identity_module_obstruction_fails() {
        let a = ObstructedAlgebra::new(coordinatewise_mult(), LinearMap::zero(2, 2)).unwrap();
        assert!(check_regular_algebra(&a));
        // ρ∘(0⊗id) = 0 but id∘ρ = ρ ≠ 0.
        assert!(!check_regular_module(&a, a.mult(), &LinearMap::identity(2)).unwrap());
    }

    #[test]
    fn comodule_duals_of_module_fixtures() {
        let e = map(&[&[1, 0], &[0, 0]]);
        let a = ObstructedAlgebra::new(coordinatewise_mult(), e.clone()).unwrap();
        let c = dualize_algebra(&a).unwrap();
        let coaction = a.mult().transpose();
        assert!(check_regular_comodule(&c, &coaction, &e.transpose()).unwrap());

        let one_c = ObstructedCoalgebra::new(map(&[&[1]]), LinearMap::identity(1)).unwrap();
        assert!(check_regular_comodule(&one_c, &map(&[&[1]]), &LinearMap::identity(1)).unwrap());

        // Transposing the failing module fixture fails the comodule laws.
        let a0 = ObstructedAlgebra::new(coordinatewise_mult(), LinearMap::zero(2, 2)).unwrap();
        let c0 = dualize_algebra(&a0).unwrap();
        let bad_coaction = a0.mult().transpose();
        assert!(!check_regular_comodule(&c0, &bad_coaction, &LinearMap::identity(2)).unwrap());
    }

    #[test]
    fn module_obstruction_must_be_idempotent() {
        let a = ObstructedAlgebra::new(coordinatewise_mult(), LinearMap::identity(2)).unwrap();
        let e = map(&[&[2, 0], &[0, 0]]);
        assert_eq!(
            check_regular_module(&a, a.mult(), &e).unwrap_err(),
            AlgebraError::NotIdempotent("module obstruction")
        );
    }

    #[test]
    fn bialgebra_construction_rejects_mismatched_obstructions() {
        let algebra =
            ObstructedAlgebra::new(coordinatewise_mult(), LinearMap::identity(2)).unwrap();
        let coalgebra =
            ObstructedCoalgebra::new(grouplike_comult(), map(&[&[1, 0], &[0, 0]])).unwrap();
        assert_eq!(
            AlmostBialgebra::new(algebra, coalgebra, None, None).unwrap_err(),
            AlgebraError::ObstructionMismatch
        );
    }

    mod properties {
        use super::*;
        use crate::linalg::rat;
        use proptest::prelude::*;

        fn endomap_strategy(dim: usize) -> impl Strategy<Value = LinearMap> {
            proptest::collection::vec((-3i64..=3, 1i64..=3), dim * dim).prop_map(move |cells| {
                let entries = cells.into_iter().map(|(n, d)| rat(n, d)).collect();
                LinearMap::new(RationalMatrix::new(dim, dim, entries).unwrap())
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn convolution_is_associative_on_the_group_algebra(
                s in endomap_strategy(2),
                t in endomap_strategy(2),
                u in endomap_strategy(2),
            ) {
                let b = group_algebra(2);
                let left = b.convolution(&b.convolution(&s, &t).unwrap(), &u).unwrap();
                let right = b.convolution(&s, &b.convolution(&t, &u).unwrap()).unwrap();
                prop_assert_eq!(left, right);
            }
        }
    }
}
