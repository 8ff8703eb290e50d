//! One function per subcommand. Each returns the reports to render;
//! errors are reserved for unusable inputs (unreadable files, parse
//! failures, files violating their declared format), while every verdict
//! about the mathematics is reported, not errored.

use std::path::Path;

use anyhow::{anyhow, bail, Result};

use fincat_core::cartfs::{
    check_lr_squares_are_pullbacks, check_reflective, enough_injectives, injective_objects,
    is_cartesian, lemma_injectives,
};
use fincat_core::category::{FiniteCategory, MorId};
use fincat_core::double::{
    check_double_equivalence, check_interchange, double_functor_of, grothendieck_double,
    horizontal_transformation_of, span_double, span_double_over, DoubleCategory,
};
use fincat_core::dual::{
    build_dual, check_fiberwise_op_square, check_span_uniqueness, double_dual_check,
};
use fincat_core::fibration::{
    check_phi_xi_roundtrip, check_xi_phi_equivalence, find_rari, phi, validate_fibration,
    validate_rari, xi,
};
use fincat_core::functor::{EquivalenceReport, Functor};
use fincat_core::indexed::{grothendieck, lens_category, IndexedCategory};
use fincat_core::ofs::{
    factorize, lemma_suite, lemma_suite_raw, validate_ofs, ClassPair, LemmaReport,
};

use crate::formats::{
    classes_of, load_functor, load_indexed, load_system, parse_category_file, render_category,
    CatFile,
};
use crate::report::{all_pass, Report};

fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn fold_lemmas(mut report: Report, lemmas: &LemmaReport) -> Report {
    report = report.count("lemmas", lemmas.checks.len());
    for check in &lemmas.checks {
        if check.pass {
            report = report.witness(format!(
                "lemma {}: pass ({} instances)",
                check.name, check.checked
            ));
        } else {
            report = report.fail(format!(
                "lemma {}: {}",
                check.name,
                check
                    .witness
                    .clone()
                    .unwrap_or_else(|| "failed".to_string())
            ));
        }
    }
    report
}

fn fold_equivalence(report: Report, eq: &EquivalenceReport) -> Report {
    report
        .flag("full", eq.full)
        .flag("faithful", eq.faithful)
        .flag("essentially_surjective", eq.essentially_surjective)
        .require("equivalence", eq.is_equivalence(), eq.failure.clone())
}

/// `validate` — parses a category (or system) file and reports whether it
/// satisfies the category axioms; a `[classes]` block is additionally
/// checked to be a cartesian factorization system, so emitted system
/// files round-trip through this command.
pub fn cmd_validate(path: &Path) -> Result<Vec<Report>> {
    let file = parse_category_file(path)?;
    let mut report = Report::new(format!("validate {}", file_name(path)));
    let cat = match FiniteCategory::validate(&file.to_raw()) {
        Ok(cat) => cat,
        Err(e) => return Ok(vec![report.fail(e.to_string())]),
    };
    report = report
        .count("objects", cat.num_objects())
        .count("morphisms", cat.num_morphisms());
    if let Some(classes) = &file.classes {
        let resolved = (|| -> Result<ClassPair, String> {
            Ok(ClassPair {
                left: classes
                    .left
                    .to_spec()
                    .map_err(|e| e.to_string())?
                    .resolve(&cat)?,
                right: classes
                    .right
                    .to_spec()
                    .map_err(|e| e.to_string())?
                    .resolve(&cat)?,
            })
        })();
        report = match resolved {
            Err(e) => report.fail(format!("classes: {e}")),
            Ok(pair) => {
                let report = report
                    .count("left", pair.left.len())
                    .count("right", pair.right.len());
                match is_cartesian(&cat, pair) {
                    Ok(_) => report.flag("cartesian_classes", true),
                    Err(e) => report.fail(format!("classes: {e}")),
                }
            }
        };
    }
    Ok(vec![report])
}

/// `factorize` — validates the system as an orthogonal factorization
/// system, lists the canonical factorization of every morphism, and runs
/// the consequence-lemma suite. On an invalid system the lemma suite
/// still runs, to show which consequence breaks.
pub fn cmd_factorize(path: &Path) -> Result<Vec<Report>> {
    let (cat, pair) = load_system(path)?;
    let mut report = Report::new(format!("factorize {}", file_name(path)))
        .count("objects", cat.num_objects())
        .count("morphisms", cat.num_morphisms())
        .count("left", pair.left.len())
        .count("right", pair.right.len());
    match validate_ofs(&cat, pair.clone()) {
        Err(e) => {
            report = report.fail(e.to_string());
            report = fold_lemmas(report, &lemma_suite_raw(&cat, &pair));
        }
        Ok(fs) => {
            for f in cat.morphisms() {
                let fac = factorize(&fs, f);
                report = report.witness(format!(
                    "{} = {} ∘ {} through {}",
                    cat.mor_name(f),
                    cat.mor_name(fac.m),
                    cat.mor_name(fac.e),
                    cat.object_name(cat.dst(fac.e))
                ));
            }
            report = fold_lemmas(report, &lemma_suite(&fs));
        }
    }
    Ok(vec![report])
}

/// `cartesian` — validates the system as a cartesian factorization system
/// (orthogonal, both classes closed under the stability conditions) and
/// certifies that every mixed left/right square is a pullback.
pub fn cmd_cartesian(path: &Path) -> Result<Vec<Report>> {
    let (cat, pair) = load_system(path)?;
    let mut report = Report::new(format!("cartesian {}", file_name(path)))
        .count("objects", cat.num_objects())
        .count("morphisms", cat.num_morphisms())
        .count("left", pair.left.len())
        .count("right", pair.right.len());
    match is_cartesian(&cat, pair) {
        Err(e) => report = report.fail(e.to_string()),
        Ok(cfs) => {
            let squares = check_lr_squares_are_pullbacks(&cfs);
            report = report
                .count("mixed_squares", squares.squares_checked)
                .require("mixed squares are pullbacks", squares.pass, squares.witness);
        }
    }
    Ok(vec![report])
}

/// `injectives` — computes the injective objects of the system, chooses
/// a replacement for every object, and certifies the replacement
/// reflective (initial among maps into injectives).
pub fn cmd_injectives(path: &Path) -> Result<Vec<Report>> {
    let (cat, pair) = load_system(path)?;
    let mut report = Report::new(format!("injectives {}", file_name(path)));
    let fs = match validate_ofs(&cat, pair) {
        Ok(fs) => fs,
        Err(e) => return Ok(vec![report.fail(e.to_string())]),
    };
    let injectives = injective_objects(&fs);
    let names: Vec<&str> = injectives.iter().map(|&o| cat.object_name(o)).collect();
    report = report
        .count("injectives", injectives.len())
        .witness(format!("injective objects: {}", names.join(", ")));
    match enough_injectives(&fs) {
        Err(e) => report = report.fail(e.to_string()),
        Ok(replacement) => {
            for c in cat.objects() {
                let rho = replacement.rho[c.0];
                report = report.witness(format!(
                    "ρ({}) = {} : {} → {}",
                    cat.object_name(c),
                    cat.mor_name(rho),
                    cat.object_name(c),
                    cat.object_name(cat.dst(rho))
                ));
            }
            report = fold_lemmas(report, &lemma_injectives(&fs));
            let refl = check_reflective(&fs, &replacement);
            report = report.count("extension_problems", refl.checked).require(
                "replacement is reflective",
                refl.pass,
                refl.witness,
            );
        }
    }
    Ok(vec![report])
}

/// `fibration` — certifies the functor a fibration. With a `[section]`
/// block, the given section is certified a right adjoint right inverse;
/// without one, existence of such a section is searched for and reported.
pub fn cmd_fibration(path: &Path) -> Result<Vec<Report>> {
    let loaded = load_functor(path)?;
    let mut report = Report::new(format!("fibration {}", file_name(path)))
        .count("total_objects", loaded.functor.source().num_objects())
        .count("base_objects", loaded.functor.target().num_objects());
    match validate_fibration(&loaded.functor) {
        Err(e) => report = report.fail(e.to_string()),
        Ok(fib) => {
            report = report.flag("street_fallback", fib.street_fallback());
            match &loaded.section {
                Some(section) => {
                    report = match validate_rari(&fib, section) {
                        Ok(()) => report.flag("section_is_rari", true),
                        Err(e) => report.fail(format!("section: {e}")),
                    };
                }
                None => {
                    report = report.flag("rari_exists", find_rari(&fib).is_some());
                }
            }
        }
    }
    Ok(vec![report])
}

/// `phi` — the classes a fibration induces on its total category
/// (morphisms over isomorphisms / cartesian morphisms), certified a
/// cartesian factorization system and listed by name.
pub fn cmd_phi(path: &Path) -> Result<Vec<Report>> {
    let loaded = load_functor(path)?;
    let mut report = Report::new(format!("phi {}", file_name(path)));
    let fib = match validate_fibration(&loaded.functor) {
        Ok(fib) => fib,
        Err(e) => return Ok(vec![report.fail(e.to_string())]),
    };
    match phi(&fib) {
        Err(e) => report = report.fail(format!("induced classes: {e}")),
        Ok(cfs) => {
            let cat = cfs.cat();
            let list = |side: &std::collections::BTreeSet<fincat_core::category::MorId>| {
                side.iter()
                    .map(|&m| cat.mor_name(m))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            report = report
                .count("left", cfs.left().len())
                .count("right", cfs.right().len())
                .witness(format!("left class: {}", list(cfs.left())))
                .witness(format!("right class: {}", list(cfs.right())));
        }
    }
    Ok(vec![report])
}

/// `xi` — the injective-replacement fibration of a cartesian system: the
/// replacement functor onto the subcategory of injective targets,
/// certified a fibration, with the chosen replacement maps listed.
pub fn cmd_xi(path: &Path) -> Result<Vec<Report>> {
    let (cat, pair) = load_system(path)?;
    let mut report = Report::new(format!("xi {}", file_name(path)));
    let cfs = match is_cartesian(&cat, pair) {
        Ok(cfs) => cfs,
        Err(e) => return Ok(vec![report.fail(e.to_string())]),
    };
    match xi(&cfs) {
        Err(e) => report = report.fail(e.to_string()),
        Ok(xf) => {
            let total = xf.fib.total();
            report = report
                .count(
                    "replacement_objects",
                    xf.fib.projection().target().num_objects(),
                )
                .flag("street_fallback", xf.fib.street_fallback());
            for c in total.objects() {
                let rho = xf.rho[c.0];
                report = report.witness(format!(
                    "ρ({}) = {} : {} → {}",
                    total.object_name(c),
                    total.mor_name(rho),
                    total.object_name(c),
                    total.object_name(total.dst(rho))
                ));
            }
        }
    }
    Ok(vec![report])
}

/// `roundtrip` — for a system file, rebuilds the system through the
/// induced fibration and compares classes exactly; for a functor file,
/// rebuilds the fibration through the induced system and checks the
/// original factors through an equivalence of bases.
pub fn cmd_roundtrip(path: &Path) -> Result<Vec<Report>> {
    let name = file_name(path);
    match path.extension().and_then(|e| e.to_str()) {
        Some("sys") => {
            let (cat, pair) = load_system(path)?;
            let mut report = Report::new(format!("roundtrip {name}"));
            match is_cartesian(&cat, pair) {
                Err(e) => report = report.fail(e.to_string()),
                Ok(cfs) => {
                    let rt = check_phi_xi_roundtrip(&cfs);
                    report = report.require("classes are recovered exactly", rt.pass, rt.witness);
                }
            }
            Ok(vec![report])
        }
        Some("fun") => {
            let loaded = load_functor(path)?;
            let mut report = Report::new(format!("roundtrip {name}"));
            match validate_fibration(&loaded.functor) {
                Err(e) => report = report.fail(e.to_string()),
                Ok(fib) => {
                    let rt = check_xi_phi_equivalence(&fib);
                    report = fold_equivalence(report, &rt.base_equivalence)
                        .flag("factors_on_the_nose", rt.factors_on_the_nose)
                        .flag("factors_up_to_iso", rt.factors_up_to_iso)
                        .require("fibration is recovered", rt.pass, rt.witness);
                }
            }
            Ok(vec![report])
        }
        _ => bail!(
            "{}: roundtrip expects a .sys (system) or .fun (functor) file",
            path.display()
        ),
    }
}

/// `dual` — builds the fiberwise dual of a cartesian system: objects are
/// shared, morphisms are canonical spans (left leg in the left class,
/// right leg in the right class). The dual is itself emitted as a system
/// file — re-parsed, re-validated, and compared here, and written out
/// with `--emit`.
pub fn cmd_dual(path: &Path, emit: Option<&Path>) -> Result<Vec<Report>> {
    let (cat, pair) = load_system(path)?;
    let mut report = Report::new(format!("dual {}", file_name(path)));
    let cfs = match is_cartesian(&cat, pair) {
        Ok(cfs) => cfs,
        Err(e) => return Ok(vec![report.fail(e.to_string())]),
    };
    let uniq = check_span_uniqueness(&cfs);
    report = report.count("span_pairs", uniq.pairs_checked).require(
        "parallel spans are rigid",
        uniq.pass,
        uniq.witness,
    );
    match build_dual(&cfs) {
        Err(e) => report = report.fail(e.to_string()),
        Ok(dual) => {
            report = report
                .count("objects", dual.cat().num_objects())
                .count("spans", dual.cat().num_morphisms())
                .count("dual_left", dual.dual_left().len())
                .count("dual_right", dual.dual_right().len());
            let classes = classes_of(
                dual.cat(),
                &ClassPair {
                    left: dual.dual_left().clone(),
                    right: dual.dual_right().clone(),
                },
            );
            let text = render_category(dual.cat(), Some(&classes));
            report = match reparse_system(&text) {
                Err(e) => report.fail(format!("emitted dual does not re-validate: {e}")),
                Ok((recat, repair)) => {
                    let same = recat == *dual.cat();
                    let cartesian = is_cartesian(&recat, repair).is_ok();
                    report
                        .require(
                            "emitted dual re-parses to the same category",
                            same,
                            Some("category mismatch after round-trip".to_string()),
                        )
                        .require(
                            "emitted dual classes are cartesian",
                            cartesian,
                            Some("dual classes failed validation".to_string()),
                        )
                }
            };
            if let Some(out) = emit {
                std::fs::write(out, &text)
                    .map_err(|e| anyhow!("writing {}: {e}", out.display()))?;
                report = report.witness(format!("emitted {}", out.display()));
            }
        }
    }
    Ok(vec![report])
}

fn reparse_system(text: &str) -> Result<(FiniteCategory, ClassPair), String> {
    let file: CatFile = toml::from_str(text).map_err(|e| e.to_string())?;
    let cat = FiniteCategory::validate(&file.to_raw()).map_err(|e| e.to_string())?;
    let classes = file.classes.ok_or_else(|| "no classes block".to_string())?;
    let left = classes
        .left
        .to_spec()
        .map_err(|e| e.to_string())?
        .resolve(&cat)?;
    let right = classes
        .right
        .to_spec()
        .map_err(|e| e.to_string())?
        .resolve(&cat)?;
    Ok((cat, ClassPair { left, right }))
}

/// `double-dual` — dualizing twice is equivalent to the original system:
/// the canonical comparison is a functor, preserves both classes, and is
/// full, faithful, and essentially surjective.
pub fn cmd_double_dual(path: &Path) -> Result<Vec<Report>> {
    let (cat, pair) = load_system(path)?;
    let mut report = Report::new(format!("double-dual {}", file_name(path)));
    let cfs = match is_cartesian(&cat, pair) {
        Ok(cfs) => cfs,
        Err(e) => return Ok(vec![report.fail(e.to_string())]),
    };
    let dd = double_dual_check(&cfs);
    report = report
        .flag("functor_ok", dd.functor_ok)
        .flag("left_preserved", dd.left_preserved)
        .flag("right_preserved", dd.right_preserved);
    report = fold_equivalence(report, &dd.equivalence);
    if !dd.pass() {
        if let Some(w) = dd.witness {
            report = report.fail(w);
        }
    }
    Ok(vec![report])
}

/// `lens` — the category of lenses of an indexed category: pairs of a
/// base morphism with a fiber morphism against transport, composed by
/// the lens law.
pub fn cmd_lens(path: &Path) -> Result<Vec<Report>> {
    let ix = load_indexed(path)?;
    let mut report = Report::new(format!("lens {}", file_name(path)))
        .count("base_objects", ix.base().num_objects())
        .count("base_morphisms", ix.base().num_morphisms());
    match lens_category(&ix) {
        Err(e) => report = report.fail(e.to_string()),
        Ok(lens) => {
            report = report
                .count("objects", lens.total().num_objects())
                .count("lenses", lens.total().num_morphisms());
        }
    }
    Ok(vec![report])
}

/// `op-square` — the comparison between the lens category of an indexed
/// category and the fiberwise dual of the vertical/cartesian system on
/// its total category: a functor, bijective on hom-sets pointwise, and
/// an equivalence.
pub fn cmd_op_square(path: &Path) -> Result<Vec<Report>> {
    let ix = load_indexed(path)?;
    let mut report = Report::new(format!("op-square {}", file_name(path)));
    let op = check_fiberwise_op_square(&ix);
    report = report
        .flag("functor_ok", op.functor_ok)
        .flag("hom_counts_equal", op.hom_counts_equal);
    report = fold_equivalence(report, &op.equivalence);
    if !op.pass() {
        if let Some(w) = op.witness {
            report = report.fail(w);
        }
    }
    Ok(vec![report])
}

fn double_counts(report: Report, dc: &DoubleCategory) -> Report {
    report
        .count("objects", dc.horizontal().num_objects())
        .count("horizontal_morphisms", dc.horizontal().num_morphisms())
        .count("vertical_morphisms", dc.vertical().num_morphisms())
        .count("squares", dc.square_count())
        .count("candidates", dc.candidate_count())
}

/// The lens/transport double category of an indexed-category file, with
/// the interchange law checked on every 2×2 grid of squares.
fn groth_side(path: &Path, ix: &IndexedCategory) -> Report {
    let mut report = Report::new(format!("double {}", file_name(path)));
    match grothendieck_double(ix) {
        Err(e) => report = report.fail(e.to_string()),
        Ok(dc) => {
            report = double_counts(report, &dc);
            let inter = check_interchange(&dc);
            report = report.count("interchange_grids", inter.checked).require(
                "interchange",
                inter.pass,
                inter.witness,
            );
        }
    }
    report
}

/// The span-filled double category of a cartesian-system file.
/// Interchange — which grows quartically in the square count — is left
/// to the identity and closure laws verified during construction; in its
/// place the mapping layer is exercised on the cheapest instances: the
/// identity functor must induce a double functor, and identity
/// components a horizontal transformation from it to itself.  Any
/// preservation or naturality diagnostic surfaces as a failure witness.
fn span_side(path: &Path) -> Result<(Report, Option<DoubleCategory>)> {
    let (cat, pair) = load_system(path)?;
    let mut report = Report::new(format!("double --span {}", file_name(path)));
    let cfs = match is_cartesian(&cat, pair) {
        Err(e) => return Ok((report.fail(e.to_string()), None)),
        Ok(c) => c,
    };
    let dual = match build_dual(&cfs) {
        Err(e) => return Ok((report.fail(e.to_string()), None)),
        Ok(d) => d,
    };
    let dc = match span_double_over(&dual) {
        Err(e) => return Ok((report.fail(e.to_string()), None)),
        Ok(d) => d,
    };
    report = double_counts(report, &dc);
    let id = Functor::identity(cfs.cat());
    report = match double_functor_of(&dual, &dc, &dual, &dc, &id) {
        Err(e) => report.fail(format!("identity double functor: {e}")),
        Ok(_) => report.flag("identity_double_functor", true),
    };
    let components: Vec<MorId> = cfs.cat().objects().map(|o| cfs.cat().identity(o)).collect();
    report = match horizontal_transformation_of(&dual, &dc, &dual, &dc, &id, &id, &components) {
        Err(e) => report.fail(format!("identity horizontal transformation: {e}")),
        Ok(_) => report.flag("identity_transformation", true),
    };
    Ok((report, Some(dc)))
}

/// The span double an indexed category induces on its own: through the
/// total category's fibration and its cartesian/vertical system.
fn induced_span_double(ix: &IndexedCategory) -> Result<DoubleCategory, String> {
    let groth = grothendieck(ix).map_err(|e| format!("total category failed: {e}"))?;
    let cfs =
        phi(groth.fibration()).map_err(|e| format!("vertical/cartesian system failed: {e}"))?;
    span_double(&cfs).map_err(|e| format!("span double failed: {e}"))
}

/// `double` — builds double categories of squares and reports their
/// sizes.  With an indexed file the squares are the commuting
/// lens/transport squares; with `--span <system file>` the span-filled
/// carrier squares.  When both are given, both are built and a third
/// report records the equivalence verdict: the two doubles of the
/// indexed category coincide, and the provided system presents exactly
/// the span double the indexed category induces.
pub fn cmd_double(indexed: Option<&Path>, span: Option<&Path>) -> Result<Vec<Report>> {
    match (indexed, span) {
        (Some(path), None) => {
            let ix = load_indexed(path)?;
            Ok(vec![groth_side(path, &ix)])
        }
        (None, Some(path)) => Ok(vec![span_side(path)?.0]),
        (Some(ipath), Some(spath)) => {
            let ix = load_indexed(ipath)?;
            let groth_report = groth_side(ipath, &ix);
            let (span_report, file_double) = span_side(spath)?;
            let mut eq = Report::new(format!(
                "double {} --span {}",
                file_name(ipath),
                file_name(spath)
            ));
            let der = check_double_equivalence(&ix);
            eq = eq
                .count("groth_squares", der.groth_squares)
                .count("span_squares", der.span_squares)
                .require(
                    "lens/transport and span doubles coincide",
                    der.pass(),
                    der.witness,
                );
            match (file_double, induced_span_double(&ix)) {
                (Some(provided), Ok(induced)) => {
                    let same = provided.horizontal() == induced.horizontal()
                        && provided.vertical() == induced.vertical()
                        && provided.squares().keys().eq(induced.squares().keys());
                    eq = eq.require(
                        "provided system presents the induced span double",
                        same,
                        (!same).then(|| {
                            "the span double of the provided system differs from the one \
                             induced by the indexed category"
                                .to_string()
                        }),
                    );
                }
                (None, _) => eq = eq.fail("the span side did not build".to_string()),
                (Some(_), Err(e)) => eq = eq.fail(e),
            }
            Ok(vec![groth_report, span_report, eq])
        }
        (None, None) => bail!("double needs an indexed file, --span <system file>, or both"),
    }
}

/// `double-equiv` — the two double categories attached to an indexed
/// category (lens/transport squares on one side, span-filled squares on
/// the dual side) coincide: same horizontal category, and a boundary
/// bounds a square on one side exactly when its translation does on the
/// other.
pub fn cmd_double_equiv(path: &Path) -> Result<Vec<Report>> {
    let ix = load_indexed(path)?;
    let eq = check_double_equivalence(&ix);
    let report = Report::new(format!("double-equiv {}", file_name(path)))
        .count("groth_squares", eq.groth_squares)
        .count("span_squares", eq.span_squares)
        .flag("built", eq.built)
        .flag("horizontal_identical", eq.horizontal_identical)
        .flag("squares_match", eq.squares_match)
        .require("double categories coincide", eq.pass(), eq.witness);
    Ok(vec![report])
}

/// Adds a report asserting that the given run rejected its input: the
/// entry passes when the inner check failed or errored, and fails when
/// the input was unexpectedly accepted.
fn expect_reject(reports: &mut Vec<Report>, label: &str, run: Result<Vec<Report>>) {
    let mut report = Report::new(format!("reject {label}"));
    match run {
        Err(e) => report = report.flag("rejected", true).witness(format!("{e:#}")),
        Ok(inner) if !all_pass(&inner) => {
            report = report.flag("rejected", true);
            for r in inner.iter().filter(|r| !r.passed()) {
                for w in &r.witnesses {
                    report = report.witness(format!("{}: {}", r.check, w));
                }
            }
        }
        Ok(_) => report = report.fail("expected a failure, but the check passed"),
    }
    reports.push(report);
}

/// `check-all` — the full battery over the fixture bundle: every positive
/// fixture is validated through every check that applies to it, and every
/// corrupted fixture is required to fail with a diagnostic.
pub fn cmd_check_all(dir: &Path) -> Result<Vec<Report>> {
    let p = |f: &str| dir.join(f);
    let mut reports: Vec<Report> = Vec::new();

    for f in ["fix1.cat", "fix2.cat", "fix3.cat", "fix4.cat"] {
        reports.extend(cmd_validate(&p(f))?);
    }
    expect_reject(
        &mut reports,
        "mut_fix2_identity.cat",
        cmd_validate(&p("mut_fix2_identity.cat")),
    );

    for f in [
        "fix1.sys",
        "fix2.sys",
        "fix3.sys",
        "fix4_epi_mono.sys",
        "fix5.sys",
    ] {
        reports.extend(cmd_factorize(&p(f))?);
    }
    expect_reject(
        &mut reports,
        "mut_fix4_iso.sys",
        cmd_factorize(&p("mut_fix4_iso.sys")),
    );
    expect_reject(
        &mut reports,
        "mut_fix5_right.sys",
        cmd_factorize(&p("mut_fix5_right.sys")),
    );

    for f in [
        "fix1.sys",
        "fix2.sys",
        "fix3.sys",
        "fix4_iso_all.sys",
        "par2.sys",
        "fix5.sys",
    ] {
        reports.extend(cmd_cartesian(&p(f))?);
    }
    expect_reject(
        &mut reports,
        "fix4_epi_mono.sys (not cartesian)",
        cmd_cartesian(&p("fix4_epi_mono.sys")),
    );

    for f in ["fix2.sys", "fix4_iso_all.sys", "fix5.sys"] {
        reports.extend(cmd_injectives(&p(f))?);
    }
    expect_reject(
        &mut reports,
        "par2.sys (no injective targets)",
        cmd_injectives(&p("par2.sys")),
    );

    reports.extend(cmd_fibration(&p("fix5_cod.fun"))?);
    reports.extend(cmd_phi(&p("fix5_cod.fun"))?);

    for f in ["fix2.sys", "fix4_iso_all.sys", "fix5.sys"] {
        reports.extend(cmd_xi(&p(f))?);
    }
    for f in ["fix2.sys", "fix4_iso_all.sys", "fix5.sys"] {
        reports.extend(cmd_roundtrip(&p(f))?);
    }
    reports.extend(cmd_roundtrip(&p("fix5_cod.fun"))?);

    for f in ["fix2.sys", "fix4_iso_all.sys", "fix5.sys"] {
        reports.extend(cmd_dual(&p(f), None)?);
    }
    for f in [
        "fix1.sys",
        "fix2.sys",
        "fix3.sys",
        "fix4_iso_all.sys",
        "par2.sys",
        "fix5.sys",
    ] {
        reports.extend(cmd_double_dual(&p(f))?);
    }

    for f in ["fix6.idx", "fix7.idx", "fix8.idx"] {
        reports.extend(cmd_lens(&p(f))?);
    }
    expect_reject(
        &mut reports,
        "mut_fix6_strict.idx",
        cmd_lens(&p("mut_fix6_strict.idx")),
    );
    expect_reject(
        &mut reports,
        "mut_fix7_strict.idx",
        cmd_lens(&p("mut_fix7_strict.idx")),
    );

    for f in ["fix6.idx", "fix7.idx", "fix8.idx"] {
        reports.extend(cmd_op_square(&p(f))?);
    }
    for f in ["fix6.idx", "fix7.idx", "fix8.idx"] {
        reports.extend(cmd_double(Some(&p(f)), None)?);
    }
    reports.extend(cmd_double(None, Some(&p("fix5.sys")))?);
    reports.extend(cmd_double(Some(&p("fix6.idx")), Some(&p("fix6_phi.sys")))?);
    for f in ["fix6.idx", "fix7.idx", "fix8.idx"] {
        reports.extend(cmd_double_equiv(&p(f))?);
    }

    let passed = reports.iter().filter(|r| r.passed()).count();
    let failed = reports.len() - passed;
    let summary = Report::new("summary")
        .count("checks", reports.len())
        .count("passed", passed)
        .count("failed", failed);
    let summary = if failed == 0 {
        summary
    } else {
        summary.fail(format!("{failed} checks failed"))
    };
    reports.push(summary);
    Ok(reports)
}
