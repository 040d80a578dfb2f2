//! A combinatorial cobordism model: boundary-parametrized interactions,
//! gluing, opposites, and evaluation into linear maps.
//!
//! No topology is computed. Cobordism classes are free generator tags with
//! declared boundaries and declared opposite tags; an [`Interaction`] is a
//! word of generators between an incoming and an outgoing [`Boundary`].
//! Cylinders are empty words, so gluing a cylinder is word concatenation
//! with the neutral word and evaluation sends it to the identity — the
//! cylinder-to-identity law holds by construction. A [`TqftAssignment`]
//! sends labels to dimensions and generators to matrices; boundaries
//! evaluate to ordered tensor products (dimensions multiply, the empty
//! boundary is the 1-dimensional unit), words evaluate to composites.
//! Cyclic regularity of a sequence of interactions delegates to
//! [`crate::category::verify_cocycle`] on the evaluated maps.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::category::{
    verify_cocycle, ArrowDecl, CategoryError, Cocycle, ObjectDecl, ObstructionStructure,
    RepresentedCategory,
};
use crate::linalg::{LinalgError, LinearMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TqftError {
    #[error("boundary component {position} differs: {left} vs {right}")]
    BoundaryMismatch {
        position: usize,
        left: String,
        right: String,
    },

    #[error("generator `{0}` is not declared")]
    UnknownGenerator(String),

    #[error("label `{0}` is not declared")]
    UndeclaredLabel(String),

    #[error("word position {position}: generator boundaries do not chain")]
    WordNotComposable { position: usize },

    #[error("generator `{0}` has no declared opposite")]
    NoOppositeDeclared(String),

    #[error("opposite declarations for `{0}` are not involutive")]
    OppositeNotInvolutive(String),

    #[error("opposite of `{0}` has incompatible boundaries")]
    OppositeBoundaryMismatch(String),

    #[error("no dimension assigned to label `{0}`")]
    UnassignedLabel(String),

    #[error("no matrix assigned to generator `{0}`")]
    UnassignedGenerator(String),

    #[error("matrix for generator `{generator}` has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    ShapeMismatch {
        generator: String,
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },

    #[error("a regularity check needs at least one interaction")]
    EmptyCycle,

    #[error(transparent)]
    Category(#[from] CategoryError),

    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::Positive => write!(f, "+"),
            Orientation::Negative => write!(f, "-"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoundaryComponent {
    pub label: String,
    pub orientation: Orientation,
}

impl fmt::Display for BoundaryComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.label, self.orientation)
    }
}

/// An ordered list of labelled, oriented components; may be empty.
/// Disjoint union is concatenation, the dual flips every orientation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Boundary {
    pub components: Vec<BoundaryComponent>,
}

impl Boundary {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(components: Vec<(String, Orientation)>) -> Self {
        Self {
            components: components
                .into_iter()
                .map(|(label, orientation)| BoundaryComponent { label, orientation })
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Same components with every orientation flipped; an involution.
    pub fn dual(&self) -> Self {
        Self {
            components: self
                .components
                .iter()
                .map(|c| BoundaryComponent {
                    label: c.label.clone(),
                    orientation: c.orientation.flipped(),
                })
                .collect(),
        }
    }

    pub fn disjoint_union(&self, other: &Boundary) -> Self {
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        Self { components }
    }

    fn first_difference(&self, other: &Boundary) -> Option<(usize, String, String)> {
        let n = self.components.len().max(other.components.len());
        for i in 0..n {
            let left = self.components.get(i);
            let right = other.components.get(i);
            if left != right {
                return Some((
                    i + 1,
                    left.map_or("(none)".to_string(), |c| c.to_string()),
                    right.map_or("(none)".to_string(), |c| c.to_string()),
                ));
            }
        }
        None
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "∅");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊔ ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Declared data of one cobordism generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorDecl {
    pub incoming: Boundary,
    pub outgoing: Boundary,
    pub opposite: Option<String>,
}

/// The finite label set and generator table interactions are built over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCatalog {
    labels: BTreeSet<String>,
    generators: BTreeMap<String, GeneratorDecl>,
}

impl GeneratorCatalog {
    pub fn new(
        labels: BTreeSet<String>,
        generators: BTreeMap<String, GeneratorDecl>,
    ) -> Result<Self, TqftError> {
        for decl in generators.values() {
            for boundary in [&decl.incoming, &decl.outgoing] {
                for component in &boundary.components {
                    if !labels.contains(&component.label) {
                        return Err(TqftError::UndeclaredLabel(component.label.clone()));
                    }
                }
            }
        }
        for (name, decl) in &generators {
            if let Some(op_name) = &decl.opposite {
                let op = generators
                    .get(op_name)
                    .ok_or_else(|| TqftError::UnknownGenerator(op_name.clone()))?;
                if op.opposite.as_deref() != Some(name.as_str()) {
                    return Err(TqftError::OppositeNotInvolutive(name.clone()));
                }
                if op.incoming != decl.outgoing || op.outgoing != decl.incoming {
                    return Err(TqftError::OppositeBoundaryMismatch(name.clone()));
                }
            }
        }
        Ok(Self { labels, generators })
    }

    pub fn labels(&self) -> &BTreeSet<String> {
        &self.labels
    }

    pub fn generator(&self, name: &str) -> Result<&GeneratorDecl, TqftError> {
        self.generators
            .get(name)
            .ok_or_else(|| TqftError::UnknownGenerator(name.to_string()))
    }

    pub fn generators(&self) -> &BTreeMap<String, GeneratorDecl> {
        &self.generators
    }
}

/// A boundary-parametrized word of generators. The empty word with equal
/// boundaries is the cylinder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interaction {
    pub incoming: Boundary,
    pub outgoing: Boundary,
    body: Vec<String>,
}

impl Interaction {
    /// Validates composability of the word against the catalog: the chain
    /// of generator boundaries must run from `incoming` to `outgoing`.
    pub fn new(
        catalog: &GeneratorCatalog,
        incoming: Boundary,
        outgoing: Boundary,
        body: Vec<String>,
    ) -> Result<Self, TqftError> {
        let mut current = incoming.clone();
        for (position, tag) in body.iter().enumerate() {
            let decl = catalog.generator(tag)?;
            if decl.incoming != current {
                return Err(TqftError::WordNotComposable {
                    position: position + 1,
                });
            }
            current = decl.outgoing.clone();
        }
        if current != outgoing {
            return Err(TqftError::WordNotComposable {
                position: body.len() + 1,
            });
        }
        Ok(Self {
            incoming,
            outgoing,
            body,
        })
    }

    /// The identity interaction on a boundary: an empty word.
    pub fn cylinder(boundary: Boundary) -> Self {
        Self {
            incoming: boundary.clone(),
            outgoing: boundary,
            body: Vec::new(),
        }
    }

    pub fn body(&self) -> &[String] {
        &self.body
    }

    pub fn is_cylinder(&self) -> bool {
        self.body.is_empty() && self.incoming == self.outgoing
    }
}

impl fmt::Display for Interaction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] : {} → {}",
            self.body.join("·"),
            self.incoming,
            self.outgoing
        )
    }
}

/// Gluing along the shared boundary: word concatenation. Associative, and
/// neutral for cylinders on either side.
pub fn glue(m1: &Interaction, m2: &Interaction) -> Result<Interaction, TqftError> {
    if m1.outgoing != m2.incoming {
        let (position, left, right) = m1
            .outgoing
            .first_difference(&m2.incoming)
            .expect("boundaries differ");
        return Err(TqftError::BoundaryMismatch {
            position,
            left,
            right,
        });
    }
    let mut body = m1.body.clone();
    body.extend(m2.body.iter().cloned());
    Ok(Interaction {
        incoming: m1.incoming.clone(),
        outgoing: m2.outgoing.clone(),
        body,
    })
}

/// Reversed boundary parametrization: incoming and outgoing swap, the word
/// reverses with every generator replaced by its declared opposite.
/// An involution.
pub fn opposite(catalog: &GeneratorCatalog, m: &Interaction) -> Result<Interaction, TqftError> {
    let mut body = Vec::with_capacity(m.body.len());
    for tag in m.body.iter().rev() {
        let decl = catalog.generator(tag)?;
        let op = decl
            .opposite
            .clone()
            .ok_or_else(|| TqftError::NoOppositeDeclared(tag.clone()))?;
        body.push(op);
    }
    Ok(Interaction {
        incoming: m.outgoing.clone(),
        outgoing: m.incoming.clone(),
        body,
    })
}

/// The functor data: label dimensions and generator matrices.
///
/// A boundary evaluates to the ordered tensor product of its label spaces;
/// orientation does not change the dimension (duals live on the same
/// coordinate space). The empty boundary evaluates to dimension 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TqftAssignment {
    pub label_space: BTreeMap<String, usize>,
    pub generator_map: BTreeMap<String, LinearMap>,
}

impl TqftAssignment {
    pub fn boundary_dim(&self, boundary: &Boundary) -> Result<usize, TqftError> {
        let mut dim = 1usize;
        for component in &boundary.components {
            let d = self
                .label_space
                .get(&component.label)
                .ok_or_else(|| TqftError::UnassignedLabel(component.label.clone()))?;
            dim *= d;
        }
        Ok(dim)
    }

    /// Checks that every generator in the catalog has a matrix of the
    /// shape its declared boundaries demand.
    pub fn validate(&self, catalog: &GeneratorCatalog) -> Result<(), TqftError> {
        for (name, decl) in catalog.generators() {
            let map = self
                .generator_map
                .get(name)
                .ok_or_else(|| TqftError::UnassignedGenerator(name.clone()))?;
            let expected_cols = self.boundary_dim(&decl.incoming)?;
            let expected_rows = self.boundary_dim(&decl.outgoing)?;
            if map.domain_dim() != expected_cols || map.codomain_dim() != expected_rows {
                return Err(TqftError::ShapeMismatch {
                    generator: name.clone(),
                    rows: map.codomain_dim(),
                    cols: map.domain_dim(),
                    expected_rows,
                    expected_cols,
                });
            }
        }
        Ok(())
    }

    fn generator(&self, name: &str) -> Result<&LinearMap, TqftError> {
        self.generator_map
            .get(name)
            .ok_or_else(|| TqftError::UnassignedGenerator(name.to_string()))
    }
}

/// Evaluates the word as a composite of generator matrices, from the
/// incoming boundary space to the outgoing one. The empty word gives the
/// identity. Functorial over [`glue`] by construction: concatenation of
/// words is composition of evaluations.
pub fn evaluate(assignment: &TqftAssignment, m: &Interaction) -> Result<LinearMap, TqftError> {
    let mut acc = LinearMap::identity(assignment.boundary_dim(&m.incoming)?);
    for (position, tag) in m.body().iter().enumerate() {
        let map = assignment.generator(tag)?;
        if map.domain_dim() != acc.codomain_dim() {
            return Err(TqftError::WordNotComposable {
                position: position + 1,
            });
        }
        acc = map.compose(&acc)?;
    }
    let out_dim = assignment.boundary_dim(&m.outgoing)?;
    if acc.codomain_dim() != out_dim {
        return Err(TqftError::ShapeMismatch {
            generator: m.body().last().cloned().unwrap_or_default(),
            rows: acc.codomain_dim(),
            cols: acc.domain_dim(),
            expected_rows: out_dim,
            expected_cols: acc.domain_dim(),
        });
    }
    Ok(acc)
}

/// Outcome of the cyclic regularity check: the evaluated maps assembled as
/// a represented cocycle, plus its obstruction structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TqftVerdict {
    pub category: RepresentedCategory,
    pub cocycle: Cocycle,
    pub obstruction: ObstructionStructure,
}

impl TqftVerdict {
    /// All obstructions equal to the identity — reversible evolution.
    pub fn is_reversible(&self) -> bool {
        self.obstruction.is_trivial()
    }
}

/// Evaluates a cyclic sequence of interactions and delegates the n-regular
/// cocycle check to [`crate::category::verify_cocycle`] on the resulting
/// maps, with objects `B1 … Bn` named after the boundaries in order.
pub fn check_n_regular_tqft(
    assignment: &TqftAssignment,
    interactions: &[Interaction],
) -> Result<TqftVerdict, TqftError> {
    if interactions.is_empty() {
        return Err(TqftError::EmptyCycle);
    }
    let n = interactions.len();
    for i in 0..n {
        let next = &interactions[(i + 1) % n];
        if interactions[i].outgoing != next.incoming {
            let (position, left, right) = interactions[i]
                .outgoing
                .first_difference(&next.incoming)
                .expect("boundaries differ");
            return Err(TqftError::BoundaryMismatch {
                position,
                left,
                right,
            });
        }
    }
    let mut objects = Vec::with_capacity(n);
    let mut arrows = Vec::with_capacity(n);
    for (i, interaction) in interactions.iter().enumerate() {
        objects.push(ObjectDecl {
            name: format!("B{}", i + 1),
            dim: assignment.boundary_dim(&interaction.incoming)?,
        });
        arrows.push(ArrowDecl {
            name: format!("m{}", i + 1),
            source: format!("B{}", i + 1),
            target: format!("B{}", ((i + 1) % n) + 1),
            map: evaluate(assignment, interaction)?,
        });
    }
    let category = RepresentedCategory::new(objects, arrows)?;
    let cocycle = Cocycle::new(
        (1..=n).map(|i| format!("B{i}")).collect(),
        (1..=n).map(|i| format!("m{i}")).collect(),
    );
    let obstruction = verify_cocycle(&category, &cocycle)?;
    Ok(TqftVerdict {
        category,
        cocycle,
        obstruction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, RationalMatrix};

    fn sigma() -> Boundary {
        Boundary::new(vec![("a".into(), Orientation::Positive)])
    }

    /// One label `a`; generators `m: Σ→Σ`, `w: Σ→Σ` (mutually opposite
    /// pair m/w), a self-opposite `p`, plus collapsion `c: Σ→∅` and
    /// expansion `x: ∅→Σ` (mutually opposite).
    fn catalog() -> GeneratorCatalog {
        let s = sigma();
        let decl = |incoming: &Boundary, outgoing: &Boundary, op: &str| GeneratorDecl {
            incoming: incoming.clone(),
            outgoing: outgoing.clone(),
            opposite: Some(op.to_string()),
        };
        GeneratorCatalog::new(
            BTreeSet::from(["a".to_string()]),
            BTreeMap::from([
                ("m".to_string(), decl(&s, &s, "w")),
                ("w".to_string(), decl(&s, &s, "m")),
                ("p".to_string(), decl(&s, &s, "p")),
                ("c".to_string(), decl(&s, &Boundary::empty(), "x")),
                ("x".to_string(), decl(&Boundary::empty(), &s, "c")),
            ]),
        )
        .unwrap()
    }

    fn assignment() -> TqftAssignment {
        let a = LinearMap::from_int_rows(&[&[2, 1], &[1, 1]]);
        let a_inv = a.inverse().unwrap();
        TqftAssignment {
            label_space: BTreeMap::from([("a".to_string(), 2)]),
            generator_map: BTreeMap::from([
                ("m".to_string(), a),
                ("w".to_string(), a_inv),
                (
                    "p".to_string(),
                    LinearMap::from_int_rows(&[&[1, 0], &[0, 0]]),
                ),
                ("c".to_string(), LinearMap::from_int_rows(&[&[1, 0]])),
                ("x".to_string(), LinearMap::from_int_rows(&[&[1], &[0]])),
            ]),
        }
    }

    fn word(tags: &[&str], incoming: Boundary, outgoing: Boundary) -> Interaction {
        Interaction::new(
            &catalog(),
            incoming,
            outgoing,
            tags.iter().map(|t| t.to_string()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn assignment_validates_against_the_catalog() {
        assignment().validate(&catalog()).unwrap();
        let mut bad = assignment();
        bad.generator_map
            .insert("c".to_string(), LinearMap::identity(2));
        assert!(matches!(
            bad.validate(&catalog()),
            Err(TqftError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn gluing_a_cylinder_is_neutral() {
        let m = word(&["m"], sigma(), sigma());
        let cyl = Interaction::cylinder(sigma());
        assert_eq!(glue(&cyl, &m).unwrap(), m);
        assert_eq!(glue(&m, &cyl).unwrap(), m);
    }

    #[test]
    fn expansion_then_collapsion_is_a_closed_word() {
        let c = word(&["c"], sigma(), Boundary::empty());
        let x = word(&["x"], Boundary::empty(), sigma());
        let closed = glue(&x, &c).unwrap();
        assert!(closed.incoming.is_empty());
        assert!(closed.outgoing.is_empty());
        assert_eq!(closed.body(), ["x".to_string(), "c".to_string()]);

        // Trivial gluing along the empty boundary in the other order.
        let around = glue(&c, &x).unwrap();
        assert_eq!(around.incoming, sigma());
        assert_eq!(around.outgoing, sigma());
    }

    #[test]
    fn gluing_concatenates_words() {
        let m1 = word(&["m"], sigma(), sigma());
        let m2 = word(&["w"], sigma(), sigma());
        let glued = glue(&m1, &m2).unwrap();
        assert_eq!(glued.body(), ["m".to_string(), "w".to_string()]);
    }

    #[test]
    fn gluing_requires_exact_boundary_equality() {
        let m = word(&["m"], sigma(), sigma());
        let c = word(&["c"], sigma(), Boundary::empty());
        let flipped = Interaction::cylinder(sigma().dual());
        assert!(matches!(
            glue(&c, &m),
            Err(TqftError::BoundaryMismatch { position: 1, .. })
        ));
        assert!(matches!(
            glue(&m, &flipped),
            Err(TqftError::BoundaryMismatch { position: 1, .. })
        ));
    }

    #[test]
    fn opposite_swaps_and_reverses() {
        let cyl = Interaction::cylinder(sigma());
        assert_eq!(opposite(&catalog(), &cyl).unwrap(), cyl);

        let c = word(&["c"], sigma(), Boundary::empty());
        let op = opposite(&catalog(), &c).unwrap();
        assert_eq!(op, word(&["x"], Boundary::empty(), sigma()));

        let two = word(&["m", "w"], sigma(), sigma());
        let op = opposite(&catalog(), &two).unwrap();
        assert_eq!(op.body(), ["m".to_string(), "w".to_string()]);
        let mixed = word(&["m", "p"], sigma(), sigma());
        let op = opposite(&catalog(), &mixed).unwrap();
        assert_eq!(op.body(), ["p".to_string(), "w".to_string()]);
    }

    #[test]
    fn opposite_is_an_involution() {
        for m in [
            word(&["m"], sigma(), sigma()),
            word(&["m", "p", "w"], sigma(), sigma()),
            word(&["c"], sigma(), Boundary::empty()),
        ] {
            let round_trip = opposite(&catalog(), &opposite(&catalog(), &m).unwrap()).unwrap();
            assert_eq!(round_trip, m);
        }
    }

    #[test]
    fn evaluate_cylinder_is_identity() {
        let cyl = Interaction::cylinder(sigma());
        assert!(evaluate(&assignment(), &cyl).unwrap().is_identity());

        let empty_cyl = Interaction::cylinder(Boundary::empty());
        let map = evaluate(&assignment(), &empty_cyl).unwrap();
        assert_eq!(map, LinearMap::identity(1));
    }

    #[test]
    fn boundary_dimensions_multiply() {
        let assignment = TqftAssignment {
            label_space: BTreeMap::from([("a".to_string(), 2), ("b".to_string(), 3)]),
            generator_map: BTreeMap::new(),
        };
        let boundary = Boundary::new(vec![
            ("a".into(), Orientation::Positive),
            ("b".into(), Orientation::Negative),
        ]);
        assert_eq!(assignment.boundary_dim(&boundary).unwrap(), 6);
        assert_eq!(assignment.boundary_dim(&Boundary::empty()).unwrap(), 1);
    }

    #[test]
    fn evaluation_is_functorial_over_gluing() {
        let m1 = word(&["m", "p"], sigma(), sigma());
        let m2 = word(&["w"], sigma(), sigma());
        let glued = glue(&m1, &m2).unwrap();
        let a = assignment();
        let lhs = evaluate(&a, &glued).unwrap();
        let rhs = evaluate(&a, &m2)
            .unwrap()
            .compose(&evaluate(&a, &m1).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn reversible_pair_is_trivially_regular() {
        let m = word(&["m"], sigma(), sigma());
        let op = opposite(&catalog(), &m).unwrap();
        let verdict = check_n_regular_tqft(&assignment(), &[m, op]).unwrap();
        assert!(verdict.is_reversible());
    }

    #[test]
    fn projector_pair_is_regular_with_nontrivial_obstruction() {
        let p = word(&["p"], sigma(), sigma());
        let verdict = check_n_regular_tqft(&assignment(), &[p.clone(), p]).unwrap();
        assert!(!verdict.is_reversible());
        assert_eq!(
            verdict.obstruction.at(0),
            &LinearMap::from_int_rows(&[&[1, 0], &[0, 0]])
        );
    }

    #[test]
    fn nilpotent_evaluation_fails_regularity() {
        let s = sigma();
        let catalog = GeneratorCatalog::new(
            BTreeSet::from(["a".to_string()]),
            BTreeMap::from([
                (
                    "n".to_string(),
                    GeneratorDecl {
                        incoming: s.clone(),
                        outgoing: s.clone(),
                        opposite: Some("n_op".to_string()),
                    },
                ),
                (
                    "n_op".to_string(),
                    GeneratorDecl {
                        incoming: s.clone(),
                        outgoing: s.clone(),
                        opposite: Some("n".to_string()),
                    },
                ),
            ]),
        )
        .unwrap();
        let nil = LinearMap::from_int_rows(&[&[0, 1], &[0, 0]]);
        let assignment = TqftAssignment {
            label_space: BTreeMap::from([("a".to_string(), 2)]),
            generator_map: BTreeMap::from([
                ("n".to_string(), nil.clone()),
                ("n_op".to_string(), nil),
            ]),
        };
        let m = Interaction::new(&catalog, s.clone(), s.clone(), vec!["n".to_string()]).unwrap();
        let op = opposite(&catalog, &m).unwrap();
        let err = check_n_regular_tqft(&assignment, &[m, op]).unwrap_err();
        assert!(matches!(
            err,
            TqftError::Category(CategoryError::NotRegular { index: 1, .. })
        ));
    }

    #[test]
    fn words_validate_at_construction() {
        let err = Interaction::new(
            &catalog(),
            sigma(),
            sigma(),
            vec!["c".to_string(), "m".to_string()],
        )
        .unwrap_err();
        assert!(matches!(err, TqftError::WordNotComposable { position: 2 }));
    }

    #[test]
    fn catalog_validates_opposites() {
        let s = sigma();
        let err = GeneratorCatalog::new(
            BTreeSet::from(["a".to_string()]),
            BTreeMap::from([(
                "m".to_string(),
                GeneratorDecl {
                    incoming: s.clone(),
                    outgoing: s,
                    opposite: Some("missing".to_string()),
                },
            )]),
        )
        .unwrap_err();
        assert!(matches!(err, TqftError::UnknownGenerator(_)));
    }

    #[test]
    fn fractional_assignments_evaluate_exactly() {
        let s = sigma();
        let catalog = GeneratorCatalog::new(
            BTreeSet::from(["a".to_string()]),
            BTreeMap::from([(
                "h".to_string(),
                GeneratorDecl {
                    incoming: s.clone(),
                    outgoing: s.clone(),
                    opposite: None,
                },
            )]),
        )
        .unwrap();
        let half = LinearMap::new(
            RationalMatrix::from_rows(vec![vec![rat(1, 2), rat(0, 1)], vec![rat(0, 1), rat(1, 3)]])
                .unwrap(),
        );
        let assignment = TqftAssignment {
            label_space: BTreeMap::from([("a".to_string(), 2)]),
            generator_map: BTreeMap::from([("h".to_string(), half.clone())]),
        };
        let m = Interaction::new(
            &catalog,
            s.clone(),
            s,
            vec!["h".to_string(), "h".to_string()],
        )
        .unwrap();
        assert_eq!(
            evaluate(&assignment, &m).unwrap(),
            half.compose(&half).unwrap()
        );
    }
}
