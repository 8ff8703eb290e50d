//! Grothendieck fibrations and their correspondence with cartesian
//! factorization systems.
//!
//! A functor `p : E → B` is a fibration when every `f : b → p(e)` in the
//! base has a cartesian lift into `e`. Validation searches lifts on the
//! nose first; if a lift only exists after adjusting along a base
//! isomorphism (the Street notion), that fallback is recorded on the
//! returned witness.
//!
//! The two translations are:
//!
//! * [`phi`] — a fibration induces the class pair (morphisms over
//!   isomorphisms, cartesian morphisms) on its total category, which is
//!   certified to be a cartesian factorization system.
//! * [`xi`] — a cartesian factorization system with enough injectives
//!   induces the injective-replacement functor `R : C → C_R` onto the full
//!   subcategory spanned by the replacement targets, which is certified to
//!   be a fibration.
//!
//! [`check_phi_xi_roundtrip`] and [`check_xi_phi_equivalence`] verify the
//! two composites: classes are recovered exactly, and a fibration is
//! recovered up to an equivalence of bases under which the original
//! projection factors.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::cartfs::{check_reflective, enough_injectives, is_cartesian, CartError, CartesianFS};
use crate::category::{FiniteCategory, MorId, ObjId, Subcategory};
use crate::functor::{check_equivalence, find_natural_iso, EquivalenceReport, Functor};
use crate::ofs::ClassPair;

/// Is `m` cartesian for the functor `p`? Exhaustively: every `ψ` into
/// `dst(m)` lying over a factorization of `p(ψ)` through `p(m)` must factor
/// through `m` by exactly one morphism over the given base factor.
pub fn is_cartesian_morphism(p: &Functor, m: MorId) -> bool {
    let total = p.source();
    let base = p.target();
    let e1 = total.src(m);
    let e = total.dst(m);
    for e2 in total.objects() {
        for &psi in total.hom(e2, e) {
            for &g in base.hom(p.on_obj(e2), p.on_obj(e1)) {
                if base.comp(p.on_mor(m), g) != p.on_mor(psi) {
                    continue;
                }
                let count = total
                    .hom(e2, e1)
                    .iter()
                    .filter(|&&chi| total.comp(m, chi) == psi && p.on_mor(chi) == g)
                    .count();
                if count != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// A chosen cartesian lift. `theta` is the base isomorphism correcting the
/// source: `p(lift) = f ∘ theta`. For on-the-nose lifts it is an identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiftWitness {
    pub lift: MorId,
    pub theta: MorId,
}

/// A validated fibration: the projection functor plus one chosen cartesian
/// lift per (object of the total category, base morphism into its image).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fibration {
    p: Functor,
    lifts: BTreeMap<(ObjId, MorId), LiftWitness>,
    street_fallback: bool,
}

impl Fibration {
    pub fn projection(&self) -> &Functor {
        &self.p
    }

    pub fn total(&self) -> &FiniteCategory {
        self.p.source()
    }

    pub fn base(&self) -> &FiniteCategory {
        self.p.target()
    }

    /// The chosen cartesian lift of `f : b → p(e)` into `e`.
    pub fn lift(&self, e: ObjId, f: MorId) -> Option<&LiftWitness> {
        self.lifts.get(&(e, f))
    }

    /// Did any lift require the up-to-isomorphism fallback?
    pub fn street_fallback(&self) -> bool {
        self.street_fallback
    }
}

/// Why a functor fails to be a fibration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotAFibration {
    /// Object of the total category whose lift is missing.
    pub object: String,
    /// Base morphism with no cartesian lift, even up to isomorphism.
    pub morphism: String,
}

impl fmt::Display for NotAFibration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no cartesian lift of {} into {} exists, even up to isomorphism",
            self.morphism, self.object
        )
    }
}

/// Certifies `p` a fibration by exhibiting a cartesian lift for every
/// `f : b → p(e)`. Lifts are scanned in morphism-index order, on the nose
/// first, then up to a base isomorphism (scanned in index order too), so
/// the chosen witnesses are deterministic.
pub fn validate_fibration(p: &Functor) -> Result<Fibration, NotAFibration> {
    let total = p.source();
    let base = p.target();
    let cartesian: BTreeSet<MorId> = total
        .morphisms()
        .filter(|&m| is_cartesian_morphism(p, m))
        .collect();

    let mut lifts = BTreeMap::new();
    let mut street_fallback = false;
    for e in total.objects() {
        for f in base.morphisms() {
            if base.dst(f) != p.on_obj(e) {
                continue;
            }
            let mut found = None;
            'nose: for m in total.morphisms() {
                if total.dst(m) == e && cartesian.contains(&m) && p.on_mor(m) == f {
                    found = Some(LiftWitness {
                        lift: m,
                        theta: base.identity(base.src(f)),
                    });
                    break 'nose;
                }
            }
            if found.is_none() {
                'street: for m in total.morphisms() {
                    if total.dst(m) != e || !cartesian.contains(&m) {
                        continue;
                    }
                    for &theta in base.hom(p.on_obj(total.src(m)), base.src(f)) {
                        if base.is_isomorphism(theta) && base.comp(f, theta) == p.on_mor(m) {
                            found = Some(LiftWitness { lift: m, theta });
                            street_fallback = true;
                            break 'street;
                        }
                    }
                }
            }
            match found {
                Some(w) => {
                    lifts.insert((e, f), w);
                }
                None => {
                    return Err(NotAFibration {
                        object: total.object_name(e).to_string(),
                        morphism: base.mor_name(f).to_string(),
                    })
                }
            }
        }
    }

    Ok(Fibration {
        p: p.clone(),
        lifts,
        street_fallback,
    })
}

/// The class pair a fibration induces on its total category: morphisms
/// lying over base isomorphisms on the left, cartesian morphisms on the
/// right. The pair is certified to be a cartesian factorization system.
pub fn phi(fib: &Fibration) -> Result<CartesianFS, CartError> {
    let p = &fib.p;
    let total = p.source();
    let base = p.target();
    let left: BTreeSet<MorId> = total
        .morphisms()
        .filter(|&m| base.is_isomorphism(p.on_mor(m)))
        .collect();
    let right: BTreeSet<MorId> = total
        .morphisms()
        .filter(|&m| is_cartesian_morphism(p, m))
        .collect();
    is_cartesian(total, ClassPair { left, right })
}

/// Why the replacement fibration could not be built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum XiError {
    /// Some object has no left map into an injective object.
    NoEnoughInjectives(String),
    /// A map failed to extend uniquely along a replacement, so the
    /// replacement is not functorial.
    NotReflective(String),
    /// The replacement functor is not a fibration (should not happen for a
    /// validated cartesian system; reported rather than assumed).
    NotAFibration(String),
}

impl fmt::Display for XiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XiError::NoEnoughInjectives(w) => {
                write!(f, "not enough injectives: {w}")
            }
            XiError::NotReflective(w) => write!(f, "replacement is not reflective: {w}"),
            XiError::NotAFibration(w) => write!(f, "replacement is not a fibration: {w}"),
        }
    }
}

/// The replacement fibration built from a cartesian factorization system,
/// with the data connecting it back to the carrier category.
#[derive(Clone, Debug)]
pub struct XiFibration {
    /// The fibration `R : C → C_R`.
    pub fib: Fibration,
    /// Per object of `C`: the chosen left map into its replacement.
    pub rho: Vec<MorId>,
    /// The base `C_R` as a full subcategory of `C`, with embeddings.
    pub base: Subcategory,
}

/// Builds the injective-replacement fibration of a cartesian system:
/// choose replacements, extend to a functor by unique extension along the
/// replacement maps, restrict the target to the subcategory spanned by the
/// replacement objects, and certify the result a fibration.
pub fn xi(cfs: &CartesianFS) -> Result<XiFibration, XiError> {
    let fs = cfs.fs();
    let cat = fs.cat();
    let replacement = enough_injectives(fs).map_err(|e| XiError::NoEnoughInjectives(e.witness))?;
    let reflective = check_reflective(fs, &replacement);
    if !reflective.pass {
        return Err(XiError::NotReflective(
            reflective.witness.unwrap_or_default(),
        ));
    }

    let targets: BTreeSet<ObjId> = cat.objects().map(|c| replacement.target(cat, c)).collect();
    let base_objects: Vec<ObjId> = targets.into_iter().collect();
    let base = cat.full_subcategory(&base_objects);

    let obj_to_sub: BTreeMap<ObjId, ObjId> = base
        .obj_embed
        .iter()
        .enumerate()
        .map(|(i, &o)| (o, ObjId(i)))
        .collect();
    let mor_to_sub: BTreeMap<MorId, MorId> = base
        .mor_embed
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, MorId(i)))
        .collect();

    let obj_map: Vec<ObjId> = cat
        .objects()
        .map(|c| obj_to_sub[&replacement.target(cat, c)])
        .collect();
    let mut mor_map: Vec<MorId> = Vec::with_capacity(cat.num_morphisms());
    for f in cat.morphisms() {
        let (c, d) = (cat.src(f), cat.dst(f));
        let (rc, rd) = (replacement.target(cat, c), replacement.target(cat, d));
        let rho_c = replacement.rho[c.0];
        let rho_d = replacement.rho[d.0];
        let want = cat.comp(rho_d, f);
        let extensions: Vec<MorId> = cat
            .hom(rc, rd)
            .iter()
            .copied()
            .filter(|&d2| cat.comp(d2, rho_c) == want)
            .collect();
        match extensions.as_slice() {
            [unique] => mor_map.push(mor_to_sub[unique]),
            _ => {
                return Err(XiError::NotReflective(format!(
                    "{} has {} extensions along the replacement of {}",
                    cat.mor_name(f),
                    extensions.len(),
                    cat.object_name(c)
                )))
            }
        }
    }

    let functor = Functor::validate(cat.clone(), base.cat.clone(), obj_map, mor_map)
        .map_err(|e| XiError::NotReflective(format!("replacement is not functorial: {e}")))?;
    let fib = validate_fibration(&functor).map_err(|e| XiError::NotAFibration(format!("{e}")))?;

    Ok(XiFibration {
        fib,
        rho: replacement.rho,
        base,
    })
}

/// Outcome of the system-side round trip: the classes induced by the
/// replacement fibration must coincide with the original classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTripReport {
    pub pass: bool,
    pub witness: Option<String>,
}

/// Runs `xi` then `phi` and compares the resulting classes with the
/// original system, morphism by morphism.
pub fn check_phi_xi_roundtrip(cfs: &CartesianFS) -> RoundTripReport {
    let cat = cfs.cat();
    let xi_fib = match xi(cfs) {
        Ok(x) => x,
        Err(e) => {
            return RoundTripReport {
                pass: false,
                witness: Some(format!("{e}")),
            }
        }
    };
    let derived = match phi(&xi_fib.fib) {
        Ok(d) => d,
        Err(e) => {
            return RoundTripReport {
                pass: false,
                witness: Some(format!("derived classes are not cartesian: {e}")),
            }
        }
    };
    for (side, original, recovered) in [
        ("left", cfs.left(), derived.left()),
        ("right", cfs.right(), derived.right()),
    ] {
        if let Some(&m) = original.symmetric_difference(recovered).next() {
            return RoundTripReport {
                pass: false,
                witness: Some(format!(
                    "{side} classes disagree at {} ({})",
                    cat.mor_name(m),
                    if original.contains(&m) {
                        "lost"
                    } else {
                        "gained"
                    }
                )),
            };
        }
    }
    RoundTripReport {
        pass: true,
        witness: None,
    }
}

/// Outcome of the fibration-side round trip.
#[derive(Clone, Debug)]
pub struct FibRoundTripReport {
    pub pass: bool,
    /// The comparison functor from the rebuilt base into the original base
    /// must be an equivalence.
    pub base_equivalence: EquivalenceReport,
    /// Does the original projection equal the comparison composed with the
    /// replacement, on the nose?
    pub factors_on_the_nose: bool,
    /// If not on the nose, does it factor up to natural isomorphism?
    pub factors_up_to_iso: bool,
    pub witness: Option<String>,
}

/// Runs `phi` then `xi` on a fibration `p : E → B` and compares: the
/// rebuilt base embeds in `E` and maps to `B` by restricting `p`; that
/// comparison must be an equivalence under which `p` factors through the
/// replacement functor.
pub fn check_xi_phi_equivalence(fib: &Fibration) -> FibRoundTripReport {
    let fail = |witness: String| FibRoundTripReport {
        pass: false,
        base_equivalence: EquivalenceReport {
            full: false,
            faithful: false,
            essentially_surjective: false,
            failure: None,
        },
        factors_on_the_nose: false,
        factors_up_to_iso: false,
        witness: Some(witness),
    };
    let cfs = match phi(fib) {
        Ok(c) => c,
        Err(e) => return fail(format!("induced classes are not cartesian: {e}")),
    };
    let xi_fib = match xi(&cfs) {
        Ok(x) => x,
        Err(e) => return fail(format!("{e}")),
    };
    let p = fib.projection();

    // Comparison h : C_R → B, the restriction of p to the rebuilt base.
    let obj_map: Vec<ObjId> = xi_fib.base.obj_embed.iter().map(|&o| p.on_obj(o)).collect();
    let mor_map: Vec<MorId> = xi_fib.base.mor_embed.iter().map(|&m| p.on_mor(m)).collect();
    let h = match Functor::validate(
        xi_fib.base.cat.clone(),
        p.target().clone(),
        obj_map,
        mor_map,
    ) {
        Ok(h) => h,
        Err(e) => return fail(format!("restriction of p to the rebuilt base fails: {e}")),
    };

    let base_equivalence = check_equivalence(&h);
    let composite = Functor::compose(&h, xi_fib.fib.projection());
    let factors_on_the_nose = &composite == p;
    let factors_up_to_iso = factors_on_the_nose || find_natural_iso(&composite, p).is_some();
    let pass = base_equivalence.is_equivalence() && factors_up_to_iso;
    FibRoundTripReport {
        pass,
        witness: if pass {
            None
        } else {
            Some(
                base_equivalence
                    .failure
                    .clone()
                    .unwrap_or_else(|| "projection does not factor through the replacement".into()),
            )
        },
        base_equivalence,
        factors_on_the_nose,
        factors_up_to_iso,
    }
}

/// Certifies a given functor `r : B → E` as a right adjoint right inverse
/// of the fibration: `p ∘ r` must be the identity on the base, and for
/// every total object `e` and base object `b` the projection must restrict
/// to a bijection `hom_E(e, r(b)) → hom_B(p(e), b)`. Every morphism in
/// `hom_E(e, r(b))` already projects into the right hom-set by typing, so
/// the bijection holds iff each downstairs morphism has exactly one
/// preimage.
pub fn validate_rari(fib: &Fibration, r: &Functor) -> Result<(), String> {
    let p = fib.projection();
    let total = p.source();
    let base = p.target();
    if r.source() != base || r.target() != total {
        return Err("section endpoints do not match the fibration".to_string());
    }
    if Functor::compose(p, r) != Functor::identity(base) {
        return Err("the functor is not a strict section of the projection".to_string());
    }
    for e in total.objects() {
        for b in base.objects() {
            for &g in base.hom(p.on_obj(e), b) {
                let preimages = total
                    .hom(e, r.on_obj(b))
                    .iter()
                    .filter(|&&m| p.on_mor(m) == g)
                    .count();
                if preimages != 1 {
                    return Err(format!(
                        "hom({}, r({})) does not project bijectively onto \
                         hom({}, {}): {} has {} preimages",
                        total.object_name(e),
                        base.object_name(b),
                        base.object_name(p.on_obj(e)),
                        base.object_name(b),
                        base.mor_name(g),
                        preimages
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Searches for a right adjoint right inverse of the fibration: a section
/// `r : B → E` with `p ∘ r = Id` such that projection induces a bijection
/// `hom_E(e, r(b)) → hom_B(p(e), b)` for all `e`, `b`. Candidates are
/// scanned in index order, so the first solution is deterministic.
pub fn find_rari(fib: &Fibration) -> Option<Functor> {
    let p = fib.projection();
    let total = p.source();
    let base = p.target();

    // Candidate objects per base object: the strict fiber.
    let obj_candidates: Vec<Vec<ObjId>> = base
        .objects()
        .map(|b| total.objects().filter(|&e| p.on_obj(e) == b).collect())
        .collect();

    let mut chosen_objs: Vec<ObjId> = Vec::new();
    search_objects(fib, &obj_candidates, &mut chosen_objs)
}

fn search_objects(
    fib: &Fibration,
    candidates: &[Vec<ObjId>],
    chosen: &mut Vec<ObjId>,
) -> Option<Functor> {
    let p = fib.projection();
    let total = p.source();
    let base = p.target();
    if chosen.len() == candidates.len() {
        // All objects chosen. The adjunction bijection only depends on the
        // object choices, so check it before searching morphism
        // assignments: ψ ↦ p(ψ) from hom(e, r b) to hom(p e, b) is a
        // bijection iff every g downstairs has exactly one preimage (every
        // ψ upstairs projects into that hom-set automatically).
        for e in total.objects() {
            for b in base.objects() {
                for &g in base.hom(p.on_obj(e), b) {
                    let preimages = total
                        .hom(e, chosen[b.0])
                        .iter()
                        .filter(|&&m| p.on_mor(m) == g)
                        .count();
                    if preimages != 1 {
                        return None;
                    }
                }
                if total.hom(e, chosen[b.0]).len() != base.hom(p.on_obj(e), b).len() {
                    return None;
                }
            }
        }
        let mut mor_choice: Vec<MorId> = Vec::new();
        return search_morphisms(fib, chosen, &mut mor_choice);
    }
    let b = chosen.len();
    for &e in &candidates[b] {
        chosen.push(e);
        if let Some(found) = search_objects(fib, candidates, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

fn search_morphisms(fib: &Fibration, objs: &[ObjId], chosen: &mut Vec<MorId>) -> Option<Functor> {
    let p = fib.projection();
    let total = p.source();
    let base = p.target();
    if chosen.len() == base.num_morphisms() {
        let functor =
            Functor::validate(base.clone(), total.clone(), objs.to_vec(), chosen.clone()).ok()?;
        // p ∘ r = Id on the nose.
        let composite = Functor::compose(p, &functor);
        if composite == Functor::identity(base) {
            return Some(functor);
        }
        return None;
    }
    let f = MorId(chosen.len());
    let (b1, b2) = (base.src(f), base.dst(f));
    for &m in total.hom(objs[b1.0], objs[b2.0]) {
        if p.on_mor(m) != f {
            continue;
        }
        chosen.push(m);
        if let Some(found) = search_morphisms(fib, objs, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ofs::ClassPair;

    fn fix5_cfs() -> CartesianFS {
        let sys = fixtures::fix5();
        is_cartesian(
            &sys.cat,
            ClassPair {
                left: sys.left,
                right: sys.right,
            },
        )
        .unwrap()
    }

    #[test]
    fn codomain_projection_is_a_fibration_on_the_nose() {
        let cod = fixtures::fix5_cod();
        let fib = validate_fibration(&cod).expect("cod is a fibration");
        assert!(!fib.street_fallback());
        // Every chosen lift is on the nose: theta is an identity.
        for w in fib.lifts.values() {
            assert!(fib.base().is_identity(w.theta));
        }
    }

    #[test]
    fn cartesian_morphisms_over_cod_are_the_pullback_squares() {
        let sys = fixtures::fix5();
        let cod = fixtures::fix5_cod();
        for m in cod.source().morphisms() {
            assert_eq!(
                is_cartesian_morphism(&cod, m),
                sys.right.contains(&m),
                "square {}",
                cod.source().mor_name(m)
            );
        }
    }

    #[test]
    fn phi_of_cod_recovers_the_declared_classes() {
        let sys = fixtures::fix5();
        let cod = fixtures::fix5_cod();
        let fib = validate_fibration(&cod).unwrap();
        let cfs = phi(&fib).expect("induced classes are cartesian");
        assert_eq!(cfs.left(), &sys.left);
        assert_eq!(cfs.right(), &sys.right);
    }

    #[test]
    fn xi_of_fix5_projects_onto_the_identity_objects() {
        let cfs = fix5_cfs();
        let xi_fib = xi(&cfs).expect("fix5 system has enough injectives");
        let names: Vec<&str> = xi_fib
            .base
            .cat
            .objects()
            .map(|o| xi_fib.base.cat.object_name(o))
            .collect();
        assert_eq!(names, ["id_S0", "id_S1", "id_S2"]);
        assert!(!xi_fib.fib.street_fallback());
    }

    #[test]
    fn class_round_trip_on_standard_systems() {
        for sys in [
            fixtures::fix4_iso_all_system(),
            fixtures::fix4_all_iso_system(),
            fixtures::fix2_all_iso_system(),
            fixtures::fix5_system(),
        ] {
            let built = sys.build();
            let cfs = is_cartesian(
                &built.cat,
                ClassPair {
                    left: built.left,
                    right: built.right,
                },
            )
            .unwrap();
            let report = check_phi_xi_roundtrip(&cfs);
            assert!(report.pass, "{:?}", report.witness);
        }
    }

    #[test]
    fn fibration_round_trip_on_cod_factors_on_the_nose() {
        let cod = fixtures::fix5_cod();
        let fib = validate_fibration(&cod).unwrap();
        let report = check_xi_phi_equivalence(&fib);
        assert!(report.pass, "{:?}", report.witness);
        assert!(report.base_equivalence.is_equivalence());
        assert!(report.factors_on_the_nose);
    }

    #[test]
    fn xi_fails_without_enough_injectives() {
        let built = fixtures::par2_all_iso_system().build();
        let cfs = is_cartesian(
            &built.cat,
            ClassPair {
                left: built.left,
                right: built.right,
            },
        )
        .unwrap();
        match xi(&cfs) {
            Err(XiError::NoEnoughInjectives(w)) => assert_eq!(w, "p"),
            other => panic!("expected missing injectives, got {other:?}"),
        }
    }

    #[test]
    fn rari_of_the_replacement_fibration_is_the_inclusion() {
        let cfs = fix5_cfs();
        let xi_fib = xi(&cfs).unwrap();
        let rari = find_rari(&xi_fib.fib).expect("replacement fibration has a RARI");
        // The section embeds the base back into the total category: object
        // and morphism images are exactly the embedded subcategory indices.
        for (i, &o) in xi_fib.base.obj_embed.iter().enumerate() {
            assert_eq!(rari.on_obj(ObjId(i)), o);
        }
        for (i, &m) in xi_fib.base.mor_embed.iter().enumerate() {
            assert_eq!(rari.on_mor(MorId(i)), m);
        }
    }

    #[test]
    fn collapse_of_discrete_pair_has_no_rari() {
        let d2 = fixtures::disc2();
        let one = fixtures::fix1();
        let collapse = Functor::validate(
            d2.clone(),
            one,
            alloc::vec![ObjId(0), ObjId(0)],
            alloc::vec![MorId(0), MorId(0)],
        )
        .unwrap();
        let fib = validate_fibration(&collapse).expect("collapse is a fibration");
        assert!(find_rari(&fib).is_none());
    }

    #[test]
    fn street_fallback_is_recorded() {
        // Point into the walking isomorphism at x: the lift of j : y → x
        // exists only after correcting along the base isomorphism i.
        let one = fixtures::fix1();
        let iso = fixtures::fix3();
        let x = iso.object_named("x").unwrap();
        let at_x = Functor::validate(
            one,
            iso.clone(),
            alloc::vec![x],
            alloc::vec![iso.identity(x)],
        )
        .unwrap();
        let fib = validate_fibration(&at_x).expect("point into iso is a Street fibration");
        assert!(fib.street_fallback());
        let j = iso.mor_named("j").unwrap();
        let w = fib.lift(ObjId(0), j).unwrap();
        assert_eq!(w.theta, iso.mor_named("i").unwrap());
    }

    #[test]
    fn non_fibration_is_rejected_with_named_witness() {
        // The inclusion of b into the walking arrow is not a fibration:
        // u : a → b has no lift into the unique object upstairs.
        let one = fixtures::fix1();
        let two = fixtures::fix2();
        let b = two.object_named("b").unwrap();
        let at_b = Functor::validate(
            one,
            two.clone(),
            alloc::vec![b],
            alloc::vec![two.identity(b)],
        )
        .unwrap();
        let err = validate_fibration(&at_b).unwrap_err();
        assert_eq!(err.object, "star");
        assert_eq!(err.morphism, "u");
    }
}
