//! One runner per command: build the domain values, record one line per
//! verified law, collect printable outputs.
//!
//! Law violations become failed checks (process exit 1); malformed input
//! surfaces as [`CliError`] (exit 2).

use regcat::algebra::{
    algebra_obstruction_law, bialgebra_compatibility, check_almost_hopf, check_regular_comodule,
    check_regular_module, coalgebra_obstruction_law, comultiplication_coassociative, counit_laws,
    dualize_algebra, dualize_coalgebra, hom_m_check, multiplication_associative, unit_laws,
    AlgebraError, AlmostBialgebra, ObstructedAlgebra, ObstructedCoalgebra,
};
use regcat::category::{
    cocycle_morphism_check, lift_construct, obstruction_degree, verify_cocycle, CategoryError,
    Cocycle, MorphismClass, ObstructionStructure, RepresentedCategory,
};
use regcat::chain::{check_star_chain, higher_projector, reduce_4_to_2, ChainError, StarChain};
use regcat::geninv::generalized_inverse_with;
use regcat::linalg::{LinearMap, Rat, Subspace};
use regcat::monoidal::{dual_cocycle, functor_report, natural_transformation_check, pairing_check};
use regcat::tqft::{check_n_regular_tqft, evaluate, glue, TqftError};

use crate::report::{ReportBuilder, Verdict};
use crate::scenario::{
    input_error, CliError, CocycleFamily, FunctorScenario, Scenario, TqftScenario,
};

pub fn dispatch(
    command: &str,
    scenario: Scenario,
    stop_on_first_failure: bool,
) -> Result<Verdict, CliError> {
    let mut report = ReportBuilder::new(command, stop_on_first_failure);
    match (command, scenario) {
        ("ginverse", Scenario::Matrix { map, m, n }) => ginverse(&mut report, map, m, n)?,
        ("check-chain", Scenario::Chain { maps }) => check_chain(&mut report, maps)?,
        ("verify-cocycle", Scenario::CocycleFamily(family)) => {
            verify_cocycle_cmd(&mut report, &family)?
        }
        ("obstruction-degree", Scenario::CocycleFamily(family)) => {
            obstruction_degree_cmd(&mut report, &family)?
        }
        ("cocycle-morphism", Scenario::CocycleFamily(family)) => {
            cocycle_morphism_cmd(&mut report, &family)?
        }
        ("tensor", Scenario::CocycleFamily(family)) => tensor_cmd(&mut report, &family)?,
        ("dual", Scenario::CocycleFamily(family)) => dual_cmd(&mut report, &family)?,
        ("pairing", Scenario::CocycleFamily(family)) => pairing_cmd(&mut report, &family)?,
        ("lift", Scenario::Lift { data }) => lift_cmd(&mut report, &data)?,
        ("functor-check", Scenario::Functor(scenario)) => functor_cmd(&mut report, &scenario)?,
        (
            "algebra-check",
            Scenario::Algebra {
                mult,
                obstruction,
                comult,
            },
        ) => algebra_cmd(&mut report, mult, obstruction, comult)?,
        (
            "hopf-check",
            Scenario::Bialgebra {
                mult,
                comult,
                obstruction,
                unit,
                counit,
                antipode,
            },
        ) => hopf_cmd(
            &mut report,
            mult,
            comult,
            obstruction,
            unit,
            counit,
            antipode,
        )?,
        (
            "module-check",
            Scenario::Module {
                comodule,
                structure,
                obstruction,
                action,
                space_obstruction,
            },
        ) => module_cmd(
            &mut report,
            comodule,
            structure,
            obstruction,
            action,
            space_obstruction,
        )?,
        ("tqft-check", Scenario::Tqft(scenario)) => tqft_cmd(&mut report, &scenario)?,
        (command, scenario) => {
            return Err(CliError::Schema(format!(
                "command `{command}` does not accept `{}` scenarios",
                scenario.kind_name()
            )))
        }
    }
    Ok(report.finish())
}

fn witness_vector(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn subspace_from_rows(
    map: regcat::linalg::RationalMatrix,
    what: &str,
) -> Result<Subspace, CliError> {
    let rows = (0..map.rows()).map(|r| map.row_vec(r)).collect();
    Subspace::from_rows(map.cols(), rows).map_err(|e| CliError::Input(format!("{what}: {e}")))
}

fn ginverse(
    report: &mut ReportBuilder,
    map: LinearMap,
    m: Option<regcat::linalg::RationalMatrix>,
    n: Option<regcat::linalg::RationalMatrix>,
) -> Result<(), CliError> {
    let m = m.map(|rows| subspace_from_rows(rows, "m")).transpose()?;
    let n = n.map(|rows| subspace_from_rows(rows, "n")).transpose()?;
    let g = generalized_inverse_with(&map, m.as_ref(), n.as_ref()).map_err(input_error)?;

    let fgf = map
        .compose(&g)
        .and_then(|x| x.compose(&map))
        .map_err(input_error)?;
    report.check("inner inverse law", "f∘g∘f = f", fgf == map);
    let gfg = g
        .compose(&map)
        .and_then(|x| x.compose(&g))
        .map_err(input_error)?;
    report.check("outer inverse law", "g∘f∘g = g", gfg == g);

    let expected_image = m.unwrap_or_else(|| map.kernel().complement());
    let expected_kernel = n.unwrap_or_else(|| map.image().complement());
    report.check(
        "image of the inverse",
        "Im g = M",
        g.image() == expected_image,
    );
    report.check(
        "kernel of the inverse",
        "Ker g = N",
        g.kernel() == expected_kernel,
    );
    report.output("generalized inverse", &g);
    Ok(())
}

fn check_chain(report: &mut ReportBuilder, maps: Vec<LinearMap>) -> Result<(), CliError> {
    let chain = StarChain::new(maps).map_err(input_error)?;
    let n = chain.n();
    report.output("chain length", n);
    let verdict = check_star_chain(&chain);
    report.check_with_witness(
        "cyclic regularity",
        "f∘f*∘…∘f^(n-1)∘f = f (all rotations)",
        verdict.regular,
        verdict
            .first_failure
            .map(|k| format!("rotation index {k} fails")),
    );
    if verdict.regular {
        let p = higher_projector(&chain).map_err(input_error)?;
        report.check(
            "projector idempotence",
            "P∘P = P",
            p.compose(&p).map_err(input_error)? == p,
        );
        report.check(
            "projector absorption",
            "P∘f = f",
            p.compose(&chain.maps()[0]).map_err(input_error)? == chain.maps()[0],
        );
        report.output("higher projector", &p);
    }
    if n == 4 {
        match reduce_4_to_2(&chain) {
            Ok(true) => {
                report.check(
                    "4-to-2 reduction",
                    "f*|Im f = f***|Im f ⟹ f∘f*∘f = f and f*∘f**∘f* = f*",
                    true,
                );
            }
            Ok(false) => {
                report.output(
                    "4-to-2 reduction",
                    "companions disagree on Im f; not applicable",
                );
            }
            Err(ChainError::TheoremContradiction { law }) => {
                report.check_with_witness(
                    "4-to-2 reduction",
                    "f*|Im f = f***|Im f ⟹ f∘f*∘f = f and f*∘f**∘f* = f*",
                    false,
                    Some(format!("hypothesis held but `{law}` failed")),
                );
            }
            Err(e) => return Err(input_error(e)),
        }
    }
    Ok(())
}

/// Verifies one cocycle as check lines; returns the obstruction when it
/// holds.
fn cocycle_checks(
    report: &mut ReportBuilder,
    category: &RepresentedCategory,
    name: &str,
    cocycle: &Cocycle,
) -> Result<Option<ObstructionStructure>, CliError> {
    match verify_cocycle(category, cocycle) {
        Ok(obstruction) => {
            report.check(
                &format!("cyclic law ({name})"),
                "f_i∘f_{i-1}∘…∘f_i = f_i (all i)",
                true,
            );
            report.check(
                &format!("obstruction laws ({name})"),
                "e_i∘e_i = e_i, f_i∘e_i = f_i, e_{i+1}∘f_i = f_i",
                true,
            );
            Ok(Some(obstruction))
        }
        Err(CategoryError::NotRegular {
            index,
            arrow,
            witness,
        }) => {
            report.check_with_witness(
                &format!("cyclic law ({name})"),
                "f_i∘f_{i-1}∘…∘f_i = f_i (all i)",
                false,
                Some(format!(
                    "index {index} (arrow `{arrow}`) on basis vector {}",
                    witness_vector(&witness)
                )),
            );
            Ok(None)
        }
        Err(e) => Err(input_error(e)),
    }
}

fn verify_cocycle_cmd(report: &mut ReportBuilder, family: &CocycleFamily) -> Result<(), CliError> {
    for (name, cocycle) in &family.cocycles {
        if let Some(obstruction) = cocycle_checks(report, &family.category, name, cocycle)? {
            for (i, endo) in obstruction.endomaps().iter().enumerate() {
                report.output(
                    &format!("obstruction ({name}) at {}", cocycle.objects[i]),
                    format!("{endo} (rank {})", endo.rank()),
                );
            }
        }
    }
    // Degree at the declared object, or at the first cocycle's start.
    let at = family
        .object
        .clone()
        .or_else(|| family.cocycles.first().map(|(_, c)| c.objects[0].clone()));
    if let Some(object) = at {
        let cocycles: Vec<Cocycle> = family.cocycles.iter().map(|(_, c)| c.clone()).collect();
        if let Ok(degree) = obstruction_degree(&family.category, &cocycles, &object) {
            report.output(&format!("obstruction degree at {object}"), degree);
        }
    }
    Ok(())
}

fn obstruction_degree_cmd(
    report: &mut ReportBuilder,
    family: &CocycleFamily,
) -> Result<(), CliError> {
    let object = family.object.as_ref().ok_or_else(|| {
        CliError::Schema("obstruction-degree needs an `object` field".to_string())
    })?;
    let mut all_regular = true;
    for (name, cocycle) in &family.cocycles {
        all_regular &= cocycle_checks(report, &family.category, name, cocycle)?.is_some();
    }
    if all_regular {
        let cocycles: Vec<Cocycle> = family.cocycles.iter().map(|(_, c)| c.clone()).collect();
        let degree =
            obstruction_degree(&family.category, &cocycles, object).map_err(input_error)?;
        report.output(&format!("obstruction degree at {object}"), degree);
    }
    Ok(())
}

fn cocycle_morphism_cmd(
    report: &mut ReportBuilder,
    family: &CocycleFamily,
) -> Result<(), CliError> {
    let (from, to, components) = family
        .morphism
        .as_ref()
        .ok_or_else(|| CliError::Schema("cocycle-morphism needs a `morphism` field".to_string()))?;
    let from_cocycle = family.cocycle(from)?;
    let to_cocycle = family.cocycle(to)?;
    let from_ok = cocycle_checks(report, &family.category, from, from_cocycle)?.is_some();
    let to_ok = cocycle_checks(report, &family.category, to, to_cocycle)?.is_some();
    if !(from_ok && to_ok) {
        return Ok(());
    }
    let class = cocycle_morphism_check(&family.category, from_cocycle, to_cocycle, components)
        .map_err(input_error)?;
    report.check(
        "ladder commutes",
        "α_{i+1}∘f_i = g_i∘α_i (all i)",
        class != MorphismClass::NotAMorphism,
    );
    report.output("classification", class);
    Ok(())
}

fn tensor_cmd(report: &mut ReportBuilder, family: &CocycleFamily) -> Result<(), CliError> {
    let (left_name, right_name) = family
        .pair
        .clone()
        .or_else(|| {
            (family.cocycles.len() == 2)
                .then(|| (family.cocycles[0].0.clone(), family.cocycles[1].0.clone()))
        })
        .ok_or_else(|| CliError::Schema("tensor needs a `pair` of cocycle names".to_string()))?;
    let left = family.cocycle(&left_name)?;
    let right = family.cocycle(&right_name)?;
    let left_ok = cocycle_checks(report, &family.category, &left_name, left)?;
    let right_ok = cocycle_checks(report, &family.category, &right_name, right)?;
    let (Some(left_obs), Some(right_obs)) = (left_ok, right_ok) else {
        return Ok(());
    };
    let (tensor_cat, tensor_cocycle, tensor_obs) =
        regcat::monoidal::tensor_cocycles(&family.category, left, right).map_err(input_error)?;
    report.check(
        "tensor cocycle verifies",
        "(f_i⊗f'_i) is n-regular",
        verify_cocycle(&tensor_cat, &tensor_cocycle).is_ok(),
    );
    let mut multiplicative = true;
    for i in 0..left.len() {
        multiplicative &= tensor_obs.at(i) == &left_obs.at(i).kron(right_obs.at(i));
    }
    report.check(
        "obstruction multiplicativity",
        "e_{X⊗Y} = e_X⊗e_Y",
        multiplicative,
    );
    for (i, endo) in tensor_obs.endomaps().iter().enumerate() {
        report.output(
            &format!("obstruction at {}", tensor_cocycle.objects[i]),
            format!("{endo} (rank {})", endo.rank()),
        );
    }
    Ok(())
}

fn dual_target(family: &CocycleFamily) -> Result<(&String, &Cocycle), CliError> {
    match &family.target {
        Some(name) => Ok((
            family
                .cocycles
                .iter()
                .find(|(n, _)| n == name)
                .map(|(n, _)| n)
                .ok_or_else(|| {
                    CliError::Schema(format!("scenario declares no cocycle named `{name}`"))
                })?,
            family.cocycle(name)?,
        )),
        None => {
            let (name, cocycle) = family.first()?;
            Ok((name, cocycle))
        }
    }
}

fn dual_cmd(report: &mut ReportBuilder, family: &CocycleFamily) -> Result<(), CliError> {
    let (name, cocycle) = dual_target(family)?;
    let Some(original) = cocycle_checks(report, &family.category, name, cocycle)? else {
        return Ok(());
    };
    let (dual_cat, dual_c, dual_obs) =
        dual_cocycle(&family.category, cocycle).map_err(input_error)?;
    report.check(
        "dual cocycle verifies",
        "(X*, f*) is n-regular",
        verify_cocycle(&dual_cat, &dual_c).is_ok(),
    );
    report.check(
        "dual obstruction is the transpose",
        "e_{X*_1} = (e_{X_1})ᵀ",
        dual_obs.at(0) == &original.at(0).transpose(),
    );
    let (_, bidual_c, _) = dual_cocycle(&dual_cat, &dual_c).map_err(input_error)?;
    report.check(
        "double dual is the identity",
        "(X**, f**) = (X, f)",
        &bidual_c == cocycle,
    );
    for (i, endo) in dual_obs.endomaps().iter().enumerate() {
        report.output(
            &format!("dual obstruction at {}", dual_c.objects[i]),
            format!("{endo} (rank {})", endo.rank()),
        );
    }
    Ok(())
}

fn pairing_cmd(report: &mut ReportBuilder, family: &CocycleFamily) -> Result<(), CliError> {
    let (name, cocycle) = dual_target(family)?;
    if cocycle_checks(report, &family.category, name, cocycle)?.is_none() {
        return Ok(());
    }
    let holds = pairing_check(&family.category, cocycle).map_err(input_error)?;
    report.check(
        "evaluation pairing regularity",
        "⟨f_iᵀξ, x⟩ = ⟨ξ, f_i x⟩ and ⟨e_{X*}ξ, x⟩ = ⟨ξ, e_X x⟩",
        holds,
    );
    Ok(())
}

fn lift_cmd(report: &mut ReportBuilder, data: &regcat::category::LiftData) -> Result<(), CliError> {
    match lift_construct(data) {
        Ok(outcome) => {
            report.check("retractions split", "π_i∘ι_i = id", true);
            report.check("small cycle collapses", "f̃_{i-1}∘…∘f̃_i = id (all i)", true);
            report.check(
                "lifted cocycle verifies",
                "f_i := ι_{i+1}∘f̃_i∘π_i is n-regular",
                true,
            );
            report.check(
                "obstruction is the retract idempotent",
                "e_i = ι_i∘π_i",
                true,
            );
            for (i, endo) in outcome.obstruction.endomaps().iter().enumerate() {
                report.output(
                    &format!("obstruction at {}", outcome.cocycle.objects[i]),
                    format!("{endo} (rank {})", endo.rank()),
                );
            }
            for arrow in outcome.category.arrows() {
                report.output(&format!("arrow {}", arrow.name), &arrow.map);
            }
        }
        Err(CategoryError::RetractionFailure { index }) => {
            report.check_with_witness(
                "retractions split",
                "π_i∘ι_i = id",
                false,
                Some(format!("stage {index}")),
            );
        }
        Err(CategoryError::SmallCycleNotTrivial { index }) => {
            report.check("retractions split", "π_i∘ι_i = id", true);
            report.check_with_witness(
                "small cycle collapses",
                "f̃_{i-1}∘…∘f̃_i = id (all i)",
                false,
                Some(format!("stage {index}")),
            );
        }
        Err(e) => return Err(input_error(e)),
    }
    Ok(())
}

fn functor_cmd(report: &mut ReportBuilder, scenario: &FunctorScenario) -> Result<(), CliError> {
    for (name, cocycle) in &scenario.cocycles {
        if cocycle_checks(report, &scenario.source, name, cocycle)?.is_none() {
            return Ok(());
        }
    }
    let cocycles: Vec<Cocycle> = scenario.cocycles.iter().map(|(_, c)| c.clone()).collect();
    let outcome = functor_report(
        &scenario.source,
        &scenario.target,
        &scenario.functor,
        &cocycles,
    )
    .map_err(input_error)?;
    report.check(
        "image cocycles verify",
        "F(f_i) cycles are n-regular",
        outcome.images_regular,
    );
    report.check(
        "obstructions preserved up to conjugation",
        "F(e_{X_i}) = e_{F(X_i)}",
        outcome.obstructions_preserved,
    );
    report.check(
        "image absorption",
        "F(f_i)∘e_{F(X_i)} = F(f_i)",
        outcome.absorption,
    );
    if let Some(components) = &scenario.transformation {
        let second = scenario.second_functor.as_ref().ok_or_else(|| {
            CliError::Schema("a `transformation` needs a `second_functor` to map into".to_string())
        })?;
        let natural = natural_transformation_check(
            &scenario.source,
            &scenario.target,
            &scenario.functor,
            second,
            components,
            &cocycles,
        )
        .map_err(input_error)?;
        report.check(
            "naturality squares commute",
            "s_{X_{i+1}}∘F(f_i) = G(f_i)∘s_{X_i}",
            natural,
        );
    }
    Ok(())
}

fn algebra_cmd(
    report: &mut ReportBuilder,
    mult: LinearMap,
    obstruction: LinearMap,
    comult: Option<LinearMap>,
) -> Result<(), CliError> {
    let idempotent = report.check(
        "obstruction idempotent",
        "e∘e = e",
        obstruction.is_idempotent(),
    );
    let associative = report.check(
        "multiplication associativity",
        "m∘(m⊗id) = m∘(id⊗m)",
        multiplication_associative(&mult).map_err(input_error)?,
    );
    let regular = report.check(
        "algebra obstruction law",
        "m∘(e⊗e) = e∘m",
        algebra_obstruction_law(&mult, &obstruction).map_err(input_error)?,
    );
    if idempotent && associative && regular {
        let algebra =
            ObstructedAlgebra::new(mult.clone(), obstruction.clone()).map_err(input_error)?;
        let dual = dualize_algebra(&algebra).map_err(input_error)?;
        report.check(
            "dual coalgebra law",
            "Δ∘eᵀ = (eᵀ⊗eᵀ)∘Δ for Δ = mᵀ",
            regcat::algebra::check_regular_coalgebra(&dual),
        );
        report.check(
            "duality round-trip",
            "(A*)* = A",
            dualize_coalgebra(&dual).map_err(input_error)? == algebra,
        );
    }
    if let Some(comult) = comult {
        report.check(
            "comultiplication coassociativity",
            "(Δ⊗id)∘Δ = (id⊗Δ)∘Δ",
            comultiplication_coassociative(&comult).map_err(input_error)?,
        );
        report.check(
            "coalgebra obstruction law",
            "Δ∘e = (e⊗e)∘Δ",
            coalgebra_obstruction_law(&comult, &obstruction).map_err(input_error)?,
        );
    }
    Ok(())
}

fn hopf_cmd(
    report: &mut ReportBuilder,
    mult: LinearMap,
    comult: LinearMap,
    obstruction: LinearMap,
    unit: Option<LinearMap>,
    counit: Option<LinearMap>,
    antipode: LinearMap,
) -> Result<(), CliError> {
    let mut structural = true;
    structural &= report.check(
        "obstruction idempotent",
        "e∘e = e",
        obstruction.is_idempotent(),
    );
    structural &= report.check(
        "multiplication associativity",
        "m∘(m⊗id) = m∘(id⊗m)",
        multiplication_associative(&mult).map_err(input_error)?,
    );
    structural &= report.check(
        "comultiplication coassociativity",
        "(Δ⊗id)∘Δ = (id⊗Δ)∘Δ",
        comultiplication_coassociative(&comult).map_err(input_error)?,
    );
    structural &= report.check(
        "algebra obstruction law",
        "m∘(e⊗e) = e∘m",
        algebra_obstruction_law(&mult, &obstruction).map_err(input_error)?,
    );
    structural &= report.check(
        "coalgebra obstruction law",
        "Δ∘e = (e⊗e)∘Δ",
        coalgebra_obstruction_law(&comult, &obstruction).map_err(input_error)?,
    );
    structural &= report.check(
        "comultiplication is multiplicative",
        "Δ(ab) = Δ(a)Δ(b)",
        bialgebra_compatibility(&mult, &comult).map_err(input_error)?,
    );
    if let Some(u) = &unit {
        structural &= report.check(
            "unit laws",
            "m∘(u⊗id) = id = m∘(id⊗u)",
            unit_laws(&mult, u).map_err(input_error)?,
        );
    }
    if let Some(eps) = &counit {
        structural &= report.check(
            "counit laws",
            "(ε⊗id)∘Δ = id = (id⊗ε)∘Δ",
            counit_laws(&comult, eps).map_err(input_error)?,
        );
    }
    if !structural {
        return Ok(());
    }
    let algebra = ObstructedAlgebra::new(mult, obstruction.clone()).map_err(input_error)?;
    let coalgebra = ObstructedCoalgebra::new(comult, obstruction).map_err(input_error)?;
    let bialgebra = AlmostBialgebra::new(algebra, coalgebra, unit, counit).map_err(input_error)?;
    let multiplicative = report.check(
        "antipode multiplicative",
        "S∘m = m∘(S⊗S)",
        hom_m_check(&bialgebra, &antipode).map_err(input_error)?,
    );
    if !multiplicative {
        return Ok(());
    }
    match check_almost_hopf(&bialgebra, &antipode) {
        Ok(passed) => {
            let id = LinearMap::identity(bialgebra.dim());
            let s_id_s = bialgebra
                .convolution(
                    &bialgebra.convolution(&antipode, &id).map_err(input_error)?,
                    &antipode,
                )
                .map_err(input_error)?;
            let id_s_id = bialgebra
                .convolution(
                    &bialgebra.convolution(&id, &antipode).map_err(input_error)?,
                    &id,
                )
                .map_err(input_error)?;
            report.check("weak antipode law", "S⋆id⋆S = S", s_id_s == antipode);
            report.check("weak identity law", "id⋆S⋆id = id", id_s_id == id);
            debug_assert_eq!(passed, s_id_s == antipode && id_s_id == id);
        }
        Err(AlgebraError::NotMultiplicative) => unreachable!("multiplicativity checked above"),
        Err(e) => return Err(input_error(e)),
    }
    Ok(())
}

fn module_cmd(
    report: &mut ReportBuilder,
    comodule: bool,
    structure: LinearMap,
    obstruction: LinearMap,
    action: LinearMap,
    space_obstruction: LinearMap,
) -> Result<(), CliError> {
    report.check(
        "structure obstruction idempotent",
        "e_A∘e_A = e_A",
        obstruction.is_idempotent(),
    );
    report.check(
        "space obstruction idempotent",
        "e_M∘e_M = e_M",
        space_obstruction.is_idempotent(),
    );
    if comodule {
        let ok = report.check(
            "comultiplication coassociativity",
            "(Δ⊗id)∘Δ = (id⊗Δ)∘Δ",
            comultiplication_coassociative(&structure).map_err(input_error)?,
        ) && report.check(
            "coalgebra obstruction law",
            "Δ∘e_A = (e_A⊗e_A)∘Δ",
            coalgebra_obstruction_law(&structure, &obstruction).map_err(input_error)?,
        );
        if !ok || !space_obstruction.is_idempotent() || !obstruction.is_idempotent() {
            return Ok(());
        }
        let coalgebra = ObstructedCoalgebra::new(structure, obstruction).map_err(input_error)?;
        let holds =
            check_regular_comodule(&coalgebra, &action, &space_obstruction).map_err(input_error)?;
        report.check(
            "comodule laws",
            "(Δ⊗id)∘δ = (id⊗δ)∘δ and (e_A⊗e_M)∘δ = δ∘e_M",
            holds,
        );
    } else {
        let ok = report.check(
            "multiplication associativity",
            "m∘(m⊗id) = m∘(id⊗m)",
            multiplication_associative(&structure).map_err(input_error)?,
        ) && report.check(
            "algebra obstruction law",
            "m∘(e_A⊗e_A) = e_A∘m",
            algebra_obstruction_law(&structure, &obstruction).map_err(input_error)?,
        );
        if !ok || !space_obstruction.is_idempotent() || !obstruction.is_idempotent() {
            return Ok(());
        }
        let algebra = ObstructedAlgebra::new(structure, obstruction).map_err(input_error)?;
        let holds =
            check_regular_module(&algebra, &action, &space_obstruction).map_err(input_error)?;
        report.check(
            "module laws",
            "ρ∘(m⊗id) = ρ∘(id⊗ρ) and ρ∘(e_A⊗e_M) = e_M∘ρ",
            holds,
        );
    }
    Ok(())
}

fn tqft_cmd(report: &mut ReportBuilder, scenario: &TqftScenario) -> Result<(), CliError> {
    // Functoriality over consecutive gluings in the declared cycle.
    let n = scenario.cycle.len();
    let mut functorial = true;
    for i in 0..n {
        let here = &scenario.cycle[i];
        let next = &scenario.cycle[(i + 1) % n];
        if here.outgoing != next.incoming {
            return Err(CliError::Input(format!(
                "cycle position {}: outgoing boundary {} does not meet incoming {}",
                i + 1,
                here.outgoing,
                next.incoming
            )));
        }
        let glued = glue(here, next).map_err(input_error)?;
        let composite = evaluate(&scenario.assignment, &glued).map_err(input_error)?;
        let stepwise = evaluate(&scenario.assignment, next)
            .map_err(input_error)?
            .compose(&evaluate(&scenario.assignment, here).map_err(input_error)?)
            .map_err(input_error)?;
        functorial &= composite == stepwise;
    }
    report.check("gluing functoriality", "F(M₂∘M₁) = F(M₂)∘F(M₁)", functorial);

    match check_n_regular_tqft(&scenario.assignment, &scenario.cycle) {
        Ok(verdict) => {
            report.check(
                "cyclic regularity",
                "evaluated interactions form an n-regular cocycle",
                true,
            );
            for (i, endo) in verdict.obstruction.endomaps().iter().enumerate() {
                report.output(
                    &format!("obstruction at step {}", i + 1),
                    format!("{endo} (rank {})", endo.rank()),
                );
            }
            if verdict.is_reversible() {
                report.output("evolution", "trivial (time reversible)");
            } else {
                report.output(
                    "evolution",
                    format!("nontrivial: repeats after {n} steps up to obstructions"),
                );
            }
        }
        Err(TqftError::Category(CategoryError::NotRegular {
            index,
            arrow,
            witness,
        })) => {
            report.check_with_witness(
                "cyclic regularity",
                "evaluated interactions form an n-regular cocycle",
                false,
                Some(format!(
                    "index {index} (map `{arrow}`) on basis vector {}",
                    witness_vector(&witness)
                )),
            );
        }
        Err(e) => return Err(input_error(e)),
    }
    Ok(())
}
