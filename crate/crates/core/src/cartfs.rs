//! Cartesian factorization systems and injective objects.
//!
//! A factorization system is *cartesian* when, on top of the orthogonal
//! axioms, the left class satisfies two-of-three (`g` and `g ∘ f` left
//! forces `f` left) and is stable along the right class: the pullback of a
//! left morphism along a right morphism exists and its projection is left
//! again. The stability pullbacks are certified exhaustively and stored (by
//! `(left, right)` cospan) so later constructions reuse the same chosen
//! squares instead of re-searching.
//!
//! An object is *injective* when every morphism into it extends along every
//! left map; a system has *enough injectives* when every object admits a
//! left map into an injective one. These replacements are the bridge to
//! Grothendieck fibrations, so the selection is deterministic: smallest
//! injective target index first, then smallest morphism index.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::category::{pullback, FiniteCategory, MorId, ObjId, PullbackSquare};
use crate::ofs::{validate_ofs, ClassPair, FactorizationSystem, LemmaCheck, LemmaReport, OfsError};

/// Why a class pair fails to be a cartesian factorization system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CartError {
    /// The pair is not even an orthogonal factorization system.
    Ofs(OfsError),
    /// `g` and `g ∘ f` are in the left class but `f` is not.
    LeftTwoOfThree { witness: String },
    /// A left-along-right pullback is missing or has a non-left projection.
    StabilityFails { witness: String },
}

impl fmt::Display for CartError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartError::Ofs(e) => write!(f, "{e}"),
            CartError::LeftTwoOfThree { witness } => {
                write!(f, "left class fails two-of-three: {witness}")
            }
            CartError::StabilityFails { witness } => {
                write!(f, "right-stability fails: {witness}")
            }
        }
    }
}

impl From<OfsError> for CartError {
    fn from(e: OfsError) -> Self {
        CartError::Ofs(e)
    }
}

/// A validated cartesian factorization system, carrying the certified
/// stability pullbacks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartesianFS {
    fs: FactorizationSystem,
    /// `(l, r)` with a common target ↦ the chosen pullback of the cospan.
    stability: BTreeMap<(MorId, MorId), PullbackSquare>,
}

impl CartesianFS {
    pub fn fs(&self) -> &FactorizationSystem {
        &self.fs
    }

    pub fn cat(&self) -> &FiniteCategory {
        self.fs.cat()
    }

    pub fn left(&self) -> &BTreeSet<MorId> {
        self.fs.left()
    }

    pub fn right(&self) -> &BTreeSet<MorId> {
        self.fs.right()
    }

    pub fn is_left(&self, m: MorId) -> bool {
        self.fs.is_left(m)
    }

    pub fn is_right(&self, m: MorId) -> bool {
        self.fs.is_right(m)
    }

    /// The certified pullback of left `l` along right `r` (common target).
    pub fn stability_witness(&self, l: MorId, r: MorId) -> Option<&PullbackSquare> {
        self.stability.get(&(l, r))
    }
}

/// Decides whether the class pair is a cartesian factorization system,
/// returning the system (with stability witnesses) or the first failure:
/// orthogonal axioms, then left two-of-three, then right stability.
pub fn is_cartesian(cat: &FiniteCategory, classes: ClassPair) -> Result<CartesianFS, CartError> {
    let fs = validate_ofs(cat, classes)?;

    for &g in fs.left() {
        for f in cat.morphisms() {
            if cat.dst(f) != cat.src(g) {
                continue;
            }
            let gf = cat.comp(g, f);
            if fs.is_left(gf) && !fs.is_left(f) {
                return Err(CartError::LeftTwoOfThree {
                    witness: format!(
                        "{} and {} ∘ {} = {} are left but {} is not",
                        cat.mor_name(g),
                        cat.mor_name(g),
                        cat.mor_name(f),
                        cat.mor_name(gf),
                        cat.mor_name(f)
                    ),
                });
            }
        }
    }

    let mut stability = BTreeMap::new();
    for &l in fs.left() {
        for &r in fs.right() {
            if cat.dst(l) != cat.dst(r) {
                continue;
            }
            let Some(sq) = pullback(cat, l, r) else {
                return Err(CartError::StabilityFails {
                    witness: format!(
                        "no pullback of left {} along right {}",
                        cat.mor_name(l),
                        cat.mor_name(r)
                    ),
                });
            };
            // p2 is the pulled-back copy of l over src(r).
            if !fs.is_left(sq.p2) {
                return Err(CartError::StabilityFails {
                    witness: format!(
                        "pullback of left {} along right {} has non-left projection {}",
                        cat.mor_name(l),
                        cat.mor_name(r),
                        cat.mor_name(sq.p2)
                    ),
                });
            }
            stability.insert((l, r), sq);
        }
    }

    Ok(CartesianFS { fs, stability })
}

/// Outcome of certifying a family of squares as pullbacks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquaresReport {
    pub pass: bool,
    /// Number of squares examined.
    pub squares_checked: usize,
    /// First failing square in scan order, if any.
    pub witness: Option<String>,
}

/// Certifies that every commuting square with left morphisms on two
/// opposite sides and right morphisms on the other two is a pullback:
///
/// ```text
///        l1
///    A -----> B
///  r1|        | r2       r2 ∘ l1 = l2 ∘ r1, l1 l2 left, r1 r2 right
///    v        v
///    C -----> D
///        l2
/// ```
///
/// The returned count is a useful regression value: it only changes when
/// the category or the classes change.
pub fn check_lr_squares_are_pullbacks(cfs: &CartesianFS) -> SquaresReport {
    let cat = cfs.cat();
    let mut squares = 0;
    for &l1 in cfs.left() {
        for &l2 in cfs.left() {
            for &r1 in cat.hom(cat.src(l1), cat.src(l2)) {
                if !cfs.is_right(r1) {
                    continue;
                }
                for &r2 in cat.hom(cat.dst(l1), cat.dst(l2)) {
                    if !cfs.is_right(r2) {
                        continue;
                    }
                    if cat.comp(r2, l1) != cat.comp(l2, r1) {
                        continue;
                    }
                    squares += 1;
                    let sq = PullbackSquare {
                        apex: cat.src(l1),
                        p1: l1,
                        p2: r1,
                        f: r2,
                        g: l2,
                    };
                    if !crate::category::certify_pullback(cat, &sq) {
                        return SquaresReport {
                            pass: false,
                            squares_checked: squares,
                            witness: Some(format!(
                                "square ({}, {}, {}, {}) is not a pullback",
                                cat.mor_name(l1),
                                cat.mor_name(r1),
                                cat.mor_name(l2),
                                cat.mor_name(r2)
                            )),
                        };
                    }
                }
            }
        }
    }
    SquaresReport {
        pass: true,
        squares_checked: squares,
        witness: None,
    }
}

/// Objects into which every morphism extends along every left map.
pub fn injective_objects(fs: &FactorizationSystem) -> BTreeSet<ObjId> {
    let cat = fs.cat();
    cat.objects()
        .filter(|&i| {
            fs.left().iter().all(|&l| {
                let (a, b) = (cat.src(l), cat.dst(l));
                cat.hom(a, i)
                    .iter()
                    .all(|&u| cat.hom(b, i).iter().any(|&d| cat.comp(d, l) == u))
            })
        })
        .collect()
}

/// The chosen injective replacements: one left map `ρ_C : C → R(C)` into an
/// injective object per object `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Replacement {
    pub injectives: BTreeSet<ObjId>,
    /// Per object: the chosen left map into an injective object.
    pub rho: Vec<MorId>,
}

impl Replacement {
    /// The replacement object `R(C)`.
    pub fn target(&self, cat: &FiniteCategory, c: ObjId) -> ObjId {
        cat.dst(self.rho[c.0])
    }
}

/// Why a system lacks enough injectives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoEnoughInjectives {
    /// An object with no left map into any injective object.
    pub witness: String,
}

impl fmt::Display for NoEnoughInjectives {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "object {} has no left map into an injective object",
            self.witness
        )
    }
}

/// Chooses a left map into an injective object for every object, scanning
/// injective targets in index order and morphisms in index order.
pub fn enough_injectives(fs: &FactorizationSystem) -> Result<Replacement, NoEnoughInjectives> {
    let cat = fs.cat();
    let injectives = injective_objects(fs);
    let rho = cat
        .objects()
        .map(|c| {
            injectives
                .iter()
                .find_map(|&i| cat.hom(c, i).iter().copied().find(|&m| fs.is_left(m)))
                .ok_or_else(|| NoEnoughInjectives {
                    witness: cat.object_name(c).to_string(),
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Replacement { injectives, rho })
}

/// Exhaustive verification of the standard facts about injective objects.
pub fn lemma_injectives(fs: &FactorizationSystem) -> LemmaReport {
    let cat = fs.cat();
    let injectives = injective_objects(fs);
    let mut checks = Vec::new();

    // Terminal detection: when a terminal object exists, an object is
    // injective exactly when its terminal map is right. Vacuous otherwise.
    {
        let mut pass = true;
        let mut witness = None;
        let mut checked = 0;
        if let Some(t) = cat.terminal_object() {
            for o in cat.objects() {
                checked += 1;
                let bang = cat.hom(o, t)[0];
                let inj = injectives.contains(&o);
                let right = fs.is_right(bang);
                if inj != right {
                    pass = false;
                    witness = Some(format!(
                        "object {} is {}injective but its terminal map {} is {}right",
                        cat.object_name(o),
                        if inj { "" } else { "not " },
                        cat.mor_name(bang),
                        if right { "" } else { "not " }
                    ));
                    break;
                }
            }
        }
        checks.push(LemmaCheck {
            name: "terminal map detects injectivity",
            pass,
            checked,
            witness,
        });
    }

    // Maps between injective objects are right.
    {
        let mut pass = true;
        let mut witness = None;
        let mut checked = 0;
        'outer: for &i in &injectives {
            for &j in &injectives {
                for &h in cat.hom(i, j) {
                    checked += 1;
                    if !fs.is_right(h) {
                        pass = false;
                        witness = Some(format!(
                            "{} maps between injectives but is not right",
                            cat.mor_name(h)
                        ));
                        break 'outer;
                    }
                }
            }
        }
        checks.push(LemmaCheck {
            name: "maps between injectives are right",
            pass,
            checked,
            witness,
        });
    }

    // A right map into an injective object has injective source.
    {
        let mut pass = true;
        let mut witness = None;
        let mut checked = 0;
        for &r in fs.right() {
            if !injectives.contains(&cat.dst(r)) {
                continue;
            }
            checked += 1;
            if !injectives.contains(&cat.src(r)) {
                pass = false;
                witness = Some(format!(
                    "right map {} lands in an injective object but its source is not injective",
                    cat.mor_name(r)
                ));
                break;
            }
        }
        checks.push(LemmaCheck {
            name: "right maps into injectives have injective source",
            pass,
            checked,
            witness,
        });
    }

    LemmaReport { checks }
}

/// Outcome of the reflectivity check for a chosen replacement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectiveReport {
    pub pass: bool,
    /// Number of extension problems examined.
    pub checked: usize,
    /// First failing instance in scan order, if any.
    pub witness: Option<String>,
}

/// Certifies that each replacement `ρ_C : C → R(C)` is initial among maps
/// from `C` into injective objects: every `u : C → J` with `J` injective
/// extends along `ρ_C` by exactly one morphism.
pub fn check_reflective(fs: &FactorizationSystem, replacement: &Replacement) -> ReflectiveReport {
    let cat = fs.cat();
    let mut checked = 0;
    for c in cat.objects() {
        let rho = replacement.rho[c.0];
        let rc = cat.dst(rho);
        checked += 1;
        if !replacement.injectives.contains(&rc) {
            return ReflectiveReport {
                pass: false,
                checked,
                witness: Some(format!(
                    "replacement target {} of {} is not injective",
                    cat.object_name(rc),
                    cat.object_name(c)
                )),
            };
        }
        for &j in &replacement.injectives {
            for &u in cat.hom(c, j) {
                checked += 1;
                let extensions = cat
                    .hom(rc, j)
                    .iter()
                    .filter(|&&d| cat.comp(d, rho) == u)
                    .count();
                if extensions != 1 {
                    return ReflectiveReport {
                        pass: false,
                        checked,
                        witness: Some(format!(
                            "{} : {} → {} has {} extensions along {}",
                            cat.mor_name(u),
                            cat.object_name(c),
                            cat.object_name(j),
                            extensions,
                            cat.mor_name(rho)
                        )),
                    };
                }
            }
        }
    }
    ReflectiveReport {
        pass: true,
        checked,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn build(sys: &fixtures::RawSystem) -> (FiniteCategory, ClassPair) {
        let built = sys.build();
        (
            built.cat,
            ClassPair {
                left: built.left,
                right: built.right,
            },
        )
    }

    #[test]
    fn iso_all_is_cartesian_on_fix4() {
        let (cat, classes) = build(&fixtures::fix4_iso_all_system());
        let cfs = is_cartesian(&cat, classes).expect("iso/all is cartesian");
        let report = check_lr_squares_are_pullbacks(&cfs);
        assert!(report.pass, "{:?}", report.witness);
    }

    #[test]
    fn all_iso_is_cartesian_on_fix4() {
        let (cat, classes) = build(&fixtures::fix4_all_iso_system());
        let cfs = is_cartesian(&cat, classes).expect("all/iso is cartesian");
        assert!(check_lr_squares_are_pullbacks(&cfs).pass);
    }

    #[test]
    fn vertical_cartesian_is_cartesian_on_fix5() {
        let (cat, classes) = build(&fixtures::fix5_system());
        let cfs = is_cartesian(&cat, classes).expect("vertical/pullback-square is cartesian");
        // Every stability witness must itself certify.
        for ((l, r), sq) in &cfs.stability {
            assert!(crate::category::certify_pullback(cfs.cat(), sq));
            assert_eq!(sq.f, *l);
            assert_eq!(sq.g, *r);
        }
    }

    #[test]
    fn epi_mono_is_ofs_but_fails_left_two_of_three() {
        let (cat, classes) = build(&fixtures::fix4_epi_mono_system());
        // It is a valid OFS…
        assert!(validate_ofs(&cat, classes.clone()).is_ok());
        // …but pt ∘ i0 = id_S1 breaks two-of-three.
        match is_cartesian(&cat, classes) {
            Err(CartError::LeftTwoOfThree { witness }) => {
                assert!(
                    witness.contains("pt") && witness.contains("i0"),
                    "{witness}"
                );
            }
            other => panic!("expected two-of-three failure, got {other:?}"),
        }
    }

    #[test]
    fn lr_squares_count_is_stable_on_fix5() {
        let (cat, classes) = build(&fixtures::fix5_system());
        let cfs = is_cartesian(&cat, classes).unwrap();
        let r1 = check_lr_squares_are_pullbacks(&cfs);
        let r2 = check_lr_squares_are_pullbacks(&cfs);
        assert!(r1.pass);
        assert_eq!(r1, r2);
        assert!(r1.squares_checked > 0);
    }

    #[test]
    fn injectives_of_fix5_are_the_isomorphism_objects() {
        let sys = fixtures::fix5();
        let fs = validate_ofs(
            &sys.cat,
            ClassPair {
                left: sys.left.clone(),
                right: sys.right.clone(),
            },
        )
        .unwrap();
        let injectives = injective_objects(&fs);
        let names: Vec<&str> = injectives.iter().map(|&o| sys.cat.object_name(o)).collect();
        assert_eq!(names, ["id_S0", "id_S1", "id_S2", "sw"]);
    }

    #[test]
    fn injectives_for_iso_all_and_all_iso() {
        // Left = isos: everything extends along isos, so all objects are
        // injective. Left = all: only objects that receive an extension of
        // every map along every morphism qualify.
        let cat = fixtures::fix4();
        let iso_all = validate_ofs(
            &cat,
            ClassPair {
                left: cat.isomorphisms(),
                right: cat.morphisms().collect(),
            },
        )
        .unwrap();
        assert_eq!(injective_objects(&iso_all).len(), cat.num_objects());

        let two = fixtures::fix2();
        let all_iso = validate_ofs(
            &two,
            ClassPair {
                left: two.morphisms().collect(),
                right: two.isomorphisms(),
            },
        )
        .unwrap();
        let inj = injective_objects(&all_iso);
        assert_eq!(inj.len(), 1);
        assert_eq!(two.object_name(*inj.iter().next().unwrap()), "b");
    }

    #[test]
    fn replacement_of_fix5_lands_on_identity_objects() {
        let sys = fixtures::fix5();
        let fs = validate_ofs(
            &sys.cat,
            ClassPair {
                left: sys.left.clone(),
                right: sys.right.clone(),
            },
        )
        .unwrap();
        let replacement = enough_injectives(&fs).expect("fix5 has enough injectives");
        // Every object f : X ↣ Y is replaced by the identity object on its
        // codomain class: z01 by id_S1, z02 and i0 and i1 by id_S2, and the
        // injective objects by (an isomorph of) themselves.
        let cat = &sys.cat;
        for c in cat.objects() {
            let rho = replacement.rho[c.0];
            assert!(sys.left.contains(&rho));
            assert!(replacement.injectives.contains(&cat.dst(rho)));
            assert_eq!(cat.src(rho), c);
        }
        let target_name = |obj: &str| {
            let c = cat.object_named(obj).unwrap();
            cat.object_name(replacement.target(cat, c)).to_string()
        };
        assert_eq!(target_name("z01"), "id_S1");
        assert_eq!(target_name("z02"), "id_S2");
        assert_eq!(target_name("i0"), "id_S2");
        assert_eq!(target_name("i1"), "id_S2");
        assert_eq!(target_name("id_S0"), "id_S0");
        assert_eq!(target_name("sw"), "id_S2");
    }

    #[test]
    fn parallel_pair_has_no_injectives_under_all_iso() {
        // With every morphism left, an injective object would have to
        // equalize extensions of s and t simultaneously; neither p nor q
        // does, so enough-injectives fails at the first object.
        let (cat, classes) = build(&fixtures::par2_all_iso_system());
        let cfs = is_cartesian(&cat, classes).expect("all/iso is cartesian");
        assert!(injective_objects(cfs.fs()).is_empty());
        let err = enough_injectives(cfs.fs()).unwrap_err();
        assert_eq!(err.witness, "p");
    }

    #[test]
    fn bundled_systems_have_enough_injectives() {
        for sys in [
            fixtures::fix4_iso_all_system(),
            fixtures::fix4_all_iso_system(),
            fixtures::fix2_all_iso_system(),
            fixtures::fix5_system(),
        ] {
            let built = sys.build();
            let fs = validate_ofs(
                &built.cat,
                ClassPair {
                    left: built.left,
                    right: built.right,
                },
            )
            .unwrap();
            assert!(enough_injectives(&fs).is_ok());
        }
    }

    #[test]
    fn lemma_injectives_passes_on_cartesian_fixtures() {
        for sys in [
            fixtures::fix4_iso_all_system(),
            fixtures::fix4_all_iso_system(),
            fixtures::fix2_all_iso_system(),
            fixtures::fix5_system(),
        ] {
            let built = sys.build();
            let fs = validate_ofs(
                &built.cat,
                ClassPair {
                    left: built.left,
                    right: built.right,
                },
            )
            .unwrap();
            let report = lemma_injectives(&fs);
            assert!(report.pass(), "{:?}", report.first_failure());
        }
    }

    #[test]
    fn reflectivity_holds_for_chosen_replacements() {
        for sys in [
            fixtures::fix4_iso_all_system(),
            fixtures::fix2_all_iso_system(),
            fixtures::fix5_system(),
        ] {
            let built = sys.build();
            let fs = validate_ofs(
                &built.cat,
                ClassPair {
                    left: built.left,
                    right: built.right,
                },
            )
            .unwrap();
            let replacement = enough_injectives(&fs).unwrap();
            let report = check_reflective(&fs, &replacement);
            assert!(report.pass, "{:?}", report.witness);
            assert!(report.checked > 0);
        }
    }

    #[test]
    fn reflectivity_fails_for_a_wrong_replacement() {
        // Point z01's replacement at its own identity: z01 is not injective,
        // so the corrupted choice must be flagged.
        let sys = fixtures::fix5();
        let fs = validate_ofs(
            &sys.cat,
            ClassPair {
                left: sys.left.clone(),
                right: sys.right.clone(),
            },
        )
        .unwrap();
        let mut replacement = enough_injectives(&fs).unwrap();
        let z01 = sys.cat.object_named("z01").unwrap();
        replacement.rho[z01.0] = sys.cat.identity(z01);
        let report = check_reflective(&fs, &replacement);
        assert!(!report.pass);
        assert!(report.witness.as_deref().unwrap().contains("not injective"));
    }
}
