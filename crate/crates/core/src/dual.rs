//! The span dual of a cartesian factorization system.
//!
//! Over a carrier with class pair `(L, R)`, the dual category has the same
//! objects and, as morphisms `A → B`, spans `A ←l— Z —r→ B` with `l ∈ L` and
//! `r ∈ R`, composed by pullback. Parallel spans admit at most one morphism
//! between them and it is invertible, so the span bicategory is locally
//! essentially discrete; this module therefore materializes the dual on
//! *canonical representatives* of span isomorphism classes, keeping
//! composition a total table. The canonical representative of an iso-class
//! is the lexicographically least `(apex, left leg, right leg)` triple.
//!
//! The module also builds the dual class pair (spans whose right leg is
//! invertible / spans whose left leg is invertible), validates it as a
//! cartesian factorization system, checks the double-dual comparison
//! `C → C^∨∨`, transports class-preserving functors to dual functors, and
//! compares the dual of a total category against the lens category of the
//! indexed category it came from.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::cartfs::{is_cartesian, CartError, CartesianFS};
use crate::category::{
    pullback, CatError, FiniteCategory, MorId, ObjId, RawCategory, RawComposite, RawMorphism,
};
use crate::fibration::phi;
use crate::functor::{check_equivalence, EquivalenceReport, Functor, FunctorError};
use crate::indexed::{grothendieck, lens_category, GrothTotal, IndexedCategory};
use crate::ofs::{factorize, ClassPair};

/// A span `A ←l— Z —r→ B` over a fixed cartesian factorization system:
/// `left_leg ∈ L` lands in the source, `right_leg ∈ R` lands in the target.
/// The derived ordering (apex, then legs) is the canonicalization tie-break.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpanMorphism {
    pub apex: ObjId,
    pub left_leg: MorId,
    pub right_leg: MorId,
}

impl SpanMorphism {
    pub fn source(&self, cat: &FiniteCategory) -> ObjId {
        cat.dst(self.left_leg)
    }

    pub fn target(&self, cat: &FiniteCategory) -> ObjId {
        cat.dst(self.right_leg)
    }

    pub fn render(&self, cat: &FiniteCategory) -> String {
        format!(
            "span({},{})",
            cat.mor_name(self.left_leg),
            cat.mor_name(self.right_leg)
        )
    }
}

/// Why assembling a dual category failed. Every variant means the carrier
/// was not actually a valid cartesian factorization system (or the module
/// has a bug): `build_dual` on validated input does not produce them.
#[derive(Clone, Debug)]
pub enum DualError {
    /// No pullback exists for a required span composition.
    PullbackMissing { left: String, right: String },
    /// A composite leg escaped its class.
    ClassEscape { morphism: String },
    /// The assembled dual category failed the category axioms.
    Axioms(CatError),
    /// The dual class pair failed to validate as a cartesian factorization
    /// system.
    System(CartError),
}

impl fmt::Display for DualError {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualError::PullbackMissing { left, right } => {
                write!(out, "no pullback of {right} against {left}")
            }
            DualError::ClassEscape { morphism } => {
                write!(out, "composite leg {morphism} escaped its class")
            }
            DualError::Axioms(e) => write!(out, "dual category failed validation: {e}"),
            DualError::System(e) => write!(out, "dual classes failed validation: {e}"),
        }
    }
}

/// The dual category on canonical span representatives, with its class pair
/// validated as a cartesian factorization system.
#[derive(Clone, Debug)]
pub struct DualCategory {
    carrier: CartesianFS,
    cat: FiniteCategory,
    spans: Vec<SpanMorphism>,
    index: BTreeMap<SpanMorphism, MorId>,
    dual_left: BTreeSet<MorId>,
    dual_right: BTreeSet<MorId>,
    system: CartesianFS,
}

impl DualCategory {
    /// The cartesian factorization system the dual was built over.
    pub fn carrier(&self) -> &CartesianFS {
        &self.carrier
    }

    /// The dual category itself. Objects are the carrier's objects.
    pub fn cat(&self) -> &FiniteCategory {
        &self.cat
    }

    /// The canonical span a dual morphism stands for.
    pub fn span(&self, m: MorId) -> &SpanMorphism {
        &self.spans[m.0]
    }

    /// The dual morphism a canonical span stands for.
    pub fn span_mor(&self, s: &SpanMorphism) -> Option<MorId> {
        self.index.get(s).copied()
    }

    /// Spans whose canonical right leg is invertible.
    pub fn dual_left(&self) -> &BTreeSet<MorId> {
        &self.dual_left
    }

    /// Spans whose canonical left leg is invertible.
    pub fn dual_right(&self) -> &BTreeSet<MorId> {
        &self.dual_right
    }

    /// The dual class pair as a validated cartesian factorization system.
    pub fn system(&self) -> &CartesianFS {
        &self.system
    }
}

/// Enumerates every span `a ←l— z —r→ b` with `l` in the left class and `r`
/// in the right class, in (apex, left leg, right leg) order.
pub fn enumerate_spans(cfs: &CartesianFS, a: ObjId, b: ObjId) -> Vec<SpanMorphism> {
    let cat = cfs.cat();
    let mut out = Vec::new();
    for z in cat.objects() {
        for &l in cat.hom(z, a) {
            if !cfs.is_left(l) {
                continue;
            }
            for &r in cat.hom(z, b) {
                if cfs.is_right(r) {
                    out.push(SpanMorphism {
                        apex: z,
                        left_leg: l,
                        right_leg: r,
                    });
                }
            }
        }
    }
    out
}

/// The canonical representative of a span's isomorphism class: the
/// lexicographically least `(apex, left leg, right leg)` among all spans
/// related to it by an invertible apex map commuting with both legs.
/// Idempotent, and preserves class memberships (isomorphisms lie in both
/// classes, which are closed under composition).
pub fn canonicalize_span(cfs: &CartesianFS, s: &SpanMorphism) -> SpanMorphism {
    let cat = cfs.cat();
    let mut best = *s;
    for z in cat.objects() {
        for &theta in cat.hom(z, s.apex) {
            if !cat.is_isomorphism(theta) {
                continue;
            }
            let cand = SpanMorphism {
                apex: z,
                left_leg: cat.comp(s.left_leg, theta),
                right_leg: cat.comp(s.right_leg, theta),
            };
            if cand < best {
                best = cand;
            }
        }
    }
    best
}

/// Composes two spans by pulling the right leg of the first back against the
/// left leg of the second, preferring the stability witness stored in the
/// carrier when one applies; the result is canonicalized. The outer legs are
/// certified to stay in their classes.
pub fn compose_spans(
    cfs: &CartesianFS,
    s2: &SpanMorphism,
    s1: &SpanMorphism,
) -> Result<SpanMorphism, DualError> {
    let cat = cfs.cat();
    assert_eq!(
        s1.target(cat),
        s2.source(cat),
        "span composition needs matching endpoints"
    );
    let sq = match cfs.stability_witness(s2.left_leg, s1.right_leg) {
        Some(sq) => *sq,
        None => {
            pullback(cat, s2.left_leg, s1.right_leg).ok_or_else(|| DualError::PullbackMissing {
                left: cat.mor_name(s2.left_leg).to_string(),
                right: cat.mor_name(s1.right_leg).to_string(),
            })?
        }
    };
    let left = cat.comp(s1.left_leg, sq.p2);
    let right = cat.comp(s2.right_leg, sq.p1);
    if !cfs.is_left(left) {
        return Err(DualError::ClassEscape {
            morphism: cat.mor_name(left).to_string(),
        });
    }
    if !cfs.is_right(right) {
        return Err(DualError::ClassEscape {
            morphism: cat.mor_name(right).to_string(),
        });
    }
    Ok(canonicalize_span(
        cfs,
        &SpanMorphism {
            apex: sq.apex,
            left_leg: left,
            right_leg: right,
        },
    ))
}

/// Builds the dual category on canonical representatives, rebuilds it as raw
/// input and revalidates it (axioms included), and validates the dual class
/// pair as a cartesian factorization system.
pub fn build_dual(cfs: &CartesianFS) -> Result<DualCategory, DualError> {
    let cat = cfs.cat();

    let mut spans: Vec<SpanMorphism> = Vec::new();
    for a in cat.objects() {
        for b in cat.objects() {
            let canon: BTreeSet<SpanMorphism> = enumerate_spans(cfs, a, b)
                .iter()
                .map(|s| canonicalize_span(cfs, s))
                .collect();
            spans.extend(canon);
        }
    }

    let names: Vec<String> = spans.iter().map(|s| s.render(cat)).collect();
    let morphisms: Vec<RawMorphism> = spans
        .iter()
        .zip(&names)
        .map(|(s, name)| RawMorphism {
            name: name.clone(),
            src: cat.object_name(s.source(cat)).to_string(),
            dst: cat.object_name(s.target(cat)).to_string(),
        })
        .collect();
    let index: BTreeMap<SpanMorphism, MorId> = spans
        .iter()
        .enumerate()
        .map(|(i, s)| (*s, MorId(i)))
        .collect();

    let identities: Vec<(String, String)> = cat
        .objects()
        .map(|a| {
            let id_span = canonicalize_span(
                cfs,
                &SpanMorphism {
                    apex: a,
                    left_leg: cat.identity(a),
                    right_leg: cat.identity(a),
                },
            );
            (
                cat.object_name(a).to_string(),
                names[index[&id_span].0].clone(),
            )
        })
        .collect();

    let mut compose = Vec::new();
    for (i2, s2) in spans.iter().enumerate() {
        for (i1, s1) in spans.iter().enumerate() {
            if s1.target(cat) != s2.source(cat) {
                continue;
            }
            let composite = compose_spans(cfs, s2, s1)?;
            compose.push(RawComposite {
                g: names[i2].clone(),
                f: names[i1].clone(),
                result: names[index[&composite].0].clone(),
            });
        }
    }

    let raw = RawCategory {
        objects: (0..cat.num_objects())
            .map(|o| cat.object_name(ObjId(o)).to_string())
            .collect(),
        morphisms,
        identities,
        compose,
    };
    let dual_cat = FiniteCategory::validate(&raw).map_err(DualError::Axioms)?;

    let mut dual_left = BTreeSet::new();
    let mut dual_right = BTreeSet::new();
    for (i, s) in spans.iter().enumerate() {
        if cat.is_isomorphism(s.right_leg) {
            dual_left.insert(MorId(i));
        }
        if cat.is_isomorphism(s.left_leg) {
            dual_right.insert(MorId(i));
        }
    }

    let system = is_cartesian(
        &dual_cat,
        ClassPair {
            left: dual_left.clone(),
            right: dual_right.clone(),
        },
    )
    .map_err(DualError::System)?;

    Ok(DualCategory {
        carrier: cfs.clone(),
        cat: dual_cat,
        spans,
        index,
        dual_left,
        dual_right,
        system,
    })
}

/// Result of checking that parallel spans admit at most one connecting
/// morphism and that it is invertible.
#[derive(Clone, Debug)]
pub struct SpanUniquenessReport {
    pub pass: bool,
    pub pairs_checked: usize,
    pub witness: Option<String>,
}

/// For every parallel pair of spans (canonical or not), counts apex maps
/// commuting with both legs: more than one, or a non-invertible one, is a
/// failure.
pub fn check_span_uniqueness(cfs: &CartesianFS) -> SpanUniquenessReport {
    let cat = cfs.cat();
    let mut pairs_checked = 0;
    for a in cat.objects() {
        for b in cat.objects() {
            let spans = enumerate_spans(cfs, a, b);
            for s in &spans {
                for s2 in &spans {
                    pairs_checked += 1;
                    let connecting: Vec<MorId> = cat
                        .hom(s.apex, s2.apex)
                        .iter()
                        .copied()
                        .filter(|&w| {
                            cat.comp(s2.left_leg, w) == s.left_leg
                                && cat.comp(s2.right_leg, w) == s.right_leg
                        })
                        .collect();
                    if connecting.len() > 1 {
                        return SpanUniquenessReport {
                            pass: false,
                            pairs_checked,
                            witness: Some(format!(
                                "{} and {} admit {} connecting maps",
                                s.render(cat),
                                s2.render(cat),
                                connecting.len()
                            )),
                        };
                    }
                    if let Some(&w) = connecting.first() {
                        if !cat.is_isomorphism(w) {
                            return SpanUniquenessReport {
                                pass: false,
                                pairs_checked,
                                witness: Some(format!(
                                    "connecting map {} between {} and {} is not invertible",
                                    cat.mor_name(w),
                                    s.render(cat),
                                    s2.render(cat)
                                )),
                            };
                        }
                    }
                }
            }
        }
    }
    SpanUniquenessReport {
        pass: true,
        pairs_checked,
        witness: None,
    }
}

/// Result of the double-dual comparison `C → C^∨∨`.
#[derive(Clone, Debug)]
pub struct DoubleDualReport {
    pub functor_ok: bool,
    pub left_preserved: bool,
    pub right_preserved: bool,
    pub equivalence: EquivalenceReport,
    pub witness: Option<String>,
}

impl DoubleDualReport {
    pub fn pass(&self) -> bool {
        self.functor_ok
            && self.left_preserved
            && self.right_preserved
            && self.equivalence.is_equivalence()
    }
}

fn failed_equivalence() -> EquivalenceReport {
    EquivalenceReport {
        full: false,
        faithful: false,
        essentially_surjective: false,
        failure: None,
    }
}

/// Builds both duals, sends `f` with canonical factorization `X —e→ M —m→ Y`
/// to the span-of-spans through `M` (backward leg from `e`, forward leg from
/// `m`), and checks functor laws, class preservation, and equivalence.
pub fn double_dual_check(cfs: &CartesianFS) -> DoubleDualReport {
    let fail = |w: String| DoubleDualReport {
        functor_ok: false,
        left_preserved: false,
        right_preserved: false,
        equivalence: failed_equivalence(),
        witness: Some(w),
    };
    let d1 = match build_dual(cfs) {
        Ok(d) => d,
        Err(e) => return fail(format!("first dual failed: {e}")),
    };
    let d2 = match build_dual(d1.system()) {
        Ok(d) => d,
        Err(e) => return fail(format!("second dual failed: {e}")),
    };

    let cat = cfs.cat();
    let obj_map: Vec<ObjId> = cat.objects().collect();
    let mut mor_map: Vec<MorId> = Vec::new();
    for f in cat.morphisms() {
        let fact = factorize(cfs.fs(), f);
        let x = cat.src(f);
        let m_obj = cat.dst(fact.e);
        // Backward leg M → X in the first dual: apex X, left leg e, right
        // leg the identity. Forward leg M → Y: apex M, identity left leg,
        // right leg m.
        let back = canonicalize_span(
            cfs,
            &SpanMorphism {
                apex: x,
                left_leg: fact.e,
                right_leg: cat.identity(x),
            },
        );
        let forward = canonicalize_span(
            cfs,
            &SpanMorphism {
                apex: m_obj,
                left_leg: cat.identity(m_obj),
                right_leg: fact.m,
            },
        );
        let (Some(back), Some(forward)) = (d1.span_mor(&back), d1.span_mor(&forward)) else {
            return fail(format!(
                "factorization legs of {} are missing from the first dual",
                cat.mor_name(f)
            ));
        };
        let outer = canonicalize_span(
            d1.system(),
            &SpanMorphism {
                apex: m_obj,
                left_leg: back,
                right_leg: forward,
            },
        );
        let Some(image) = d2.span_mor(&outer) else {
            return fail(format!(
                "double-dual image of {} is missing from the second dual",
                cat.mor_name(f)
            ));
        };
        mor_map.push(image);
    }

    let functor = match Functor::validate(cat.clone(), d2.cat().clone(), obj_map, mor_map) {
        Ok(f) => f,
        Err(e) => return fail(format!("double-dual comparison is not a functor: {e}")),
    };

    let mut left_preserved = true;
    let mut right_preserved = true;
    let mut witness = None;
    for m in cat.morphisms() {
        if cfs.is_left(m) && !d2.dual_left().contains(&functor.on_mor(m)) {
            left_preserved = false;
            witness.get_or_insert_with(|| {
                format!(
                    "left morphism {} lands outside the dual left class",
                    cat.mor_name(m)
                )
            });
        }
        if cfs.is_right(m) && !d2.dual_right().contains(&functor.on_mor(m)) {
            right_preserved = false;
            witness.get_or_insert_with(|| {
                format!(
                    "right morphism {} lands outside the dual right class",
                    cat.mor_name(m)
                )
            });
        }
    }

    DoubleDualReport {
        functor_ok: true,
        left_preserved,
        right_preserved,
        equivalence: check_equivalence(&functor),
        witness,
    }
}

/// Why transporting a functor to the duals failed.
#[derive(Clone, Debug)]
pub enum DualFunctorError {
    /// `morphism` is in a class of the source system whose image leaves the
    /// corresponding class of the target system.
    ClassNotPreserved { morphism: String },
    /// The transported data failed the functor laws.
    Laws(FunctorError),
}

impl fmt::Display for DualFunctorError {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualFunctorError::ClassNotPreserved { morphism } => {
                write!(out, "functor does not preserve the class of {morphism}")
            }
            DualFunctorError::Laws(e) => write!(out, "transported functor fails the laws: {e}"),
        }
    }
}

/// Transports a class-preserving functor between carriers to a functor
/// between the duals: a canonical span maps to the canonicalization of its
/// image span. Class preservation is checked first, the functor laws after
/// transport.
pub fn dual_functor(
    src: &DualCategory,
    dst: &DualCategory,
    f: &Functor,
) -> Result<Functor, DualFunctorError> {
    let scat = src.carrier().cat();
    assert_eq!(f.source(), scat, "functor must start at the source carrier");
    assert_eq!(
        f.target(),
        dst.carrier().cat(),
        "functor must end at the target carrier"
    );
    for m in scat.morphisms() {
        let preserved = (!src.carrier().is_left(m) || dst.carrier().is_left(f.on_mor(m)))
            && (!src.carrier().is_right(m) || dst.carrier().is_right(f.on_mor(m)));
        if !preserved {
            return Err(DualFunctorError::ClassNotPreserved {
                morphism: scat.mor_name(m).to_string(),
            });
        }
    }
    let mor_map: Vec<MorId> = src
        .spans
        .iter()
        .map(|s| {
            let image = canonicalize_span(
                dst.carrier(),
                &SpanMorphism {
                    apex: f.on_obj(s.apex),
                    left_leg: f.on_mor(s.left_leg),
                    right_leg: f.on_mor(s.right_leg),
                },
            );
            dst.span_mor(&image)
                .expect("image span exists in the target dual")
        })
        .collect();
    Functor::validate(
        src.cat().clone(),
        dst.cat().clone(),
        f.obj_map().to_vec(),
        mor_map,
    )
    .map_err(DualFunctorError::Laws)
}

/// Builds the comparison functor from the lens category of `ix` into the
/// dual of the vertical/cartesian system on its total category.  A lens
/// `⟨f^♯, f⟩ : ⟨E, B⟩ ⇆ ⟨E′, B′⟩` goes to the span through `⟨f*E′, B⟩`
/// with backward leg `⟨f^♯, id_B⟩` and forward leg `⟨id_{f*E′}, f⟩`.
/// Objects are matched by name; the caller supplies all four structures so
/// they can be reused for further comparisons.
pub fn lens_to_span_functor(
    ix: &IndexedCategory,
    lens: &GrothTotal,
    groth: &GrothTotal,
    cfs: &CartesianFS,
    dual: &DualCategory,
) -> Result<Functor, String> {
    let ltot = lens.total();
    let dcat = dual.cat();
    let mut obj_map = Vec::new();
    for o in ltot.objects() {
        match dcat.object_named(ltot.object_name(o)) {
            Some(d) => obj_map.push(d),
            None => {
                return Err(format!(
                    "object {} is missing from the dual",
                    ltot.object_name(o)
                ))
            }
        }
    }

    let mut mor_map = Vec::new();
    for m in ltot.morphisms() {
        let l = lens.lens_of(m);
        let (e, b) = l.src;
        let (e2, _) = l.dst;
        let pulled = ix.reindex(l.base).on_obj(e2);
        let apex = groth.pair_obj(pulled, b).expect("apex pair exists");
        let src_tot = groth.pair_obj(e, b).expect("source pair exists");
        let dst_tot = groth.pair_obj(e2, l.dst.1).expect("target pair exists");
        let back = groth.pair_mor(apex, src_tot, l.fiber, ix.base().identity(b));
        let fwd = groth.pair_mor(apex, dst_tot, ix.fiber(b).identity(pulled), l.base);
        let (Some(back), Some(fwd)) = (back, fwd) else {
            return Err(format!(
                "span legs for lens {} are missing from the total category",
                ltot.mor_name(m)
            ));
        };
        let span = canonicalize_span(
            cfs,
            &SpanMorphism {
                apex,
                left_leg: back,
                right_leg: fwd,
            },
        );
        match dual.span_mor(&span) {
            Some(d) => mor_map.push(d),
            None => {
                return Err(format!(
                    "span for lens {} is missing from the dual",
                    ltot.mor_name(m)
                ))
            }
        }
    }

    Functor::validate(ltot.clone(), dcat.clone(), obj_map, mor_map)
        .map_err(|e| format!("lens-to-span comparison is not a functor: {e}"))
}

/// Result of comparing the lens category of an indexed category with the
/// dual of its total category.
#[derive(Clone, Debug)]
pub struct OpSquareReport {
    pub functor_ok: bool,
    pub hom_counts_equal: bool,
    pub equivalence: EquivalenceReport,
    pub witness: Option<String>,
}

impl OpSquareReport {
    pub fn pass(&self) -> bool {
        self.functor_ok && self.hom_counts_equal && self.equivalence.is_equivalence()
    }
}

/// Builds both sides — the lens category of `ix` and the dual of the
/// vertical/cartesian system on its total category — and the comparison
/// functor sending a lens `⟨f^♯, f⟩` to the span through `⟨f*E′, B⟩` with
/// backward leg `⟨f^♯, id⟩` and forward leg `⟨id, f⟩`; then checks functor
/// laws, pointwise hom cardinalities, and equivalence.
pub fn check_fiberwise_op_square(ix: &IndexedCategory) -> OpSquareReport {
    let fail = |w: String| OpSquareReport {
        functor_ok: false,
        hom_counts_equal: false,
        equivalence: failed_equivalence(),
        witness: Some(w),
    };
    let lens = match lens_category(ix) {
        Ok(l) => l,
        Err(e) => return fail(format!("lens category failed: {e}")),
    };
    let groth = match grothendieck(ix) {
        Ok(g) => g,
        Err(e) => return fail(format!("total category failed: {e}")),
    };
    let cfs = match phi(groth.fibration()) {
        Ok(c) => c,
        Err(e) => return fail(format!("vertical/cartesian system failed: {e}")),
    };
    let dual = match build_dual(&cfs) {
        Ok(d) => d,
        Err(e) => return fail(format!("dual failed: {e}")),
    };

    let functor = match lens_to_span_functor(ix, &lens, &groth, &cfs, &dual) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };

    let ltot = lens.total();
    let dcat = dual.cat();
    let mut hom_counts_equal = true;
    let mut witness = None;
    for a in ltot.objects() {
        for b in ltot.objects() {
            let lhs = ltot.hom(a, b).len();
            let rhs = dcat.hom(functor.on_obj(a), functor.on_obj(b)).len();
            if lhs != rhs {
                hom_counts_equal = false;
                witness.get_or_insert_with(|| {
                    format!(
                        "hom({},{}) has {} lenses but {} spans",
                        ltot.object_name(a),
                        ltot.object_name(b),
                        lhs,
                        rhs
                    )
                });
            }
        }
    }

    OpSquareReport {
        functor_ok: true,
        hom_counts_equal,
        equivalence: check_equivalence(&functor),
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{
        const_one_indexed, fix1, fix2, fix2_all_iso_system, fix4, fix4_iso_all_system, fix5,
        fix5_system, fix6, fix8, par2_all_iso_system,
    };
    use crate::ofs::ClassSpec;

    fn cartesian_fixture(sys: crate::fixtures::RawSystem) -> CartesianFS {
        let built = sys.build();
        is_cartesian(
            &built.cat,
            ClassPair {
                left: built.left,
                right: built.right,
            },
        )
        .expect("fixture system is cartesian")
    }

    fn fix5_cartesian() -> CartesianFS {
        cartesian_fixture(fix5_system())
    }

    /// Counts span iso-classes by exhaustive pairwise iso search, never
    /// consulting `canonicalize_span`.
    fn span_class_count_oracle(cfs: &CartesianFS, a: ObjId, b: ObjId) -> usize {
        let cat = cfs.cat();
        let spans = enumerate_spans(cfs, a, b);
        let isomorphic = |s: &SpanMorphism, t: &SpanMorphism| -> bool {
            cat.hom(s.apex, t.apex).iter().any(|&w| {
                cat.is_isomorphism(w)
                    && cat.comp(t.left_leg, w) == s.left_leg
                    && cat.comp(t.right_leg, w) == s.right_leg
            })
        };
        let mut classes: Vec<SpanMorphism> = Vec::new();
        for s in &spans {
            if !classes.iter().any(|c| isomorphic(s, c)) {
                classes.push(*s);
            }
        }
        classes.len()
    }

    /// Lens counts for the codomain projection of the mono-arrow category,
    /// computed set-theoretically from function tables: a lens
    /// `(m : D↣B) ⇆ (m′ : D′↣B′)` is a base map `f : B → B′` together with
    /// a fiber map from the pullback mono `f*m′` into `m`, which exists (and
    /// is then unique) iff the preimage `f⁻¹(im m′)` sits inside `im m`.
    fn cod_lens_count_oracle(base: &FiniteCategory, m: MorId, m2: MorId) -> usize {
        let image = |mor: MorId| -> BTreeSet<usize> {
            crate::fixtures::fix4_function_table(base, mor)
                .into_iter()
                .collect()
        };
        let b = base.dst(m);
        let b2 = base.dst(m2);
        let im_m = image(m);
        let im_m2 = image(m2);
        base.hom(b, b2)
            .iter()
            .filter(|&&f| {
                let ftab = crate::fixtures::fix4_function_table(base, f);
                // f⁻¹(im m′) ⊆ im m, elementwise over the source set.
                ftab.iter()
                    .enumerate()
                    .all(|(x, fx)| !im_m2.contains(fx) || im_m.contains(&x))
            })
            .count()
    }

    #[test]
    fn dual_of_the_point_is_the_point() {
        let cat = fix1();
        let cfs = is_cartesian(
            &cat,
            ClassPair {
                left: ClassSpec::Iso.resolve(&cat).unwrap(),
                right: ClassSpec::All.resolve(&cat).unwrap(),
            },
        )
        .unwrap();
        let d = build_dual(&cfs).unwrap();
        assert_eq!(d.cat().num_objects(), 1);
        assert_eq!(d.cat().num_morphisms(), 1);
    }

    #[test]
    fn dual_of_iso_all_is_equivalent_to_the_carrier() {
        let cfs = cartesian_fixture(fix4_iso_all_system());
        let d = build_dual(&cfs).unwrap();
        let cat = cfs.cat();
        // f ↦ the canonical class of the span with identity backward leg.
        let mor_map: Vec<MorId> = cat
            .morphisms()
            .map(|f| {
                let s = canonicalize_span(
                    &cfs,
                    &SpanMorphism {
                        apex: cat.src(f),
                        left_leg: cat.identity(cat.src(f)),
                        right_leg: f,
                    },
                );
                d.span_mor(&s).unwrap()
            })
            .collect();
        let functor = Functor::validate(
            cat.clone(),
            d.cat().clone(),
            cat.objects().collect(),
            mor_map,
        )
        .unwrap();
        assert!(check_equivalence(&functor).is_equivalence());
    }

    #[test]
    fn dual_hom_counts_match_the_naive_iso_class_oracle() {
        let cfs = fix5_cartesian();
        let d = build_dual(&cfs).unwrap();
        for a in cfs.cat().objects() {
            for b in cfs.cat().objects() {
                assert_eq!(
                    d.cat().hom(a, b).len(),
                    span_class_count_oracle(&cfs, a, b),
                    "span class count mismatch at ({},{})",
                    cfs.cat().object_name(a),
                    cfs.cat().object_name(b)
                );
            }
        }
    }

    #[test]
    fn dual_hom_counts_match_the_codomain_lens_oracle() {
        let base = fix4();
        let fixture = fix5();
        let cfs = is_cartesian(
            &fixture.cat,
            ClassPair {
                left: fixture.left,
                right: fixture.right,
            },
        )
        .unwrap();
        let d = build_dual(&cfs).unwrap();
        // Objects of the mono-arrow category are monos; object index order
        // matches the fixture's generation order, so recover each mono by
        // name.
        for a in cfs.cat().objects() {
            for b in cfs.cat().objects() {
                let m = base.mor_named(cfs.cat().object_name(a)).unwrap();
                let m2 = base.mor_named(cfs.cat().object_name(b)).unwrap();
                assert_eq!(
                    d.cat().hom(a, b).len(),
                    cod_lens_count_oracle(&base, m, m2),
                    "lens count mismatch at ({},{})",
                    cfs.cat().object_name(a),
                    cfs.cat().object_name(b)
                );
            }
        }
    }

    #[test]
    fn parallel_spans_admit_at_most_one_connecting_map() {
        let report = check_span_uniqueness(&fix5_cartesian());
        assert!(report.pass, "{:?}", report.witness);
        assert!(report.pairs_checked > 0);
    }

    #[test]
    fn canonicalization_is_idempotent_and_collapses_automorphic_spans() {
        let cfs = fix5_cartesian();
        let cat = cfs.cat();
        for a in cat.objects() {
            for b in cat.objects() {
                for s in enumerate_spans(&cfs, a, b) {
                    let c = canonicalize_span(&cfs, &s);
                    assert_eq!(c, canonicalize_span(&cfs, &c));
                }
            }
        }

        // Two spans related by a nonidentity apex automorphism canonicalize
        // identically: realign the legs of any span on an apex that has one.
        let mut exercised = 0;
        for a in cat.objects() {
            for b in cat.objects() {
                for s in enumerate_spans(&cfs, a, b) {
                    for &auto in cat.hom(s.apex, s.apex) {
                        if cat.is_identity(auto) || !cat.is_isomorphism(auto) {
                            continue;
                        }
                        let twisted = SpanMorphism {
                            apex: s.apex,
                            left_leg: cat.comp(s.left_leg, auto),
                            right_leg: cat.comp(s.right_leg, auto),
                        };
                        assert_eq!(
                            canonicalize_span(&cfs, &s),
                            canonicalize_span(&cfs, &twisted)
                        );
                        exercised += 1;
                    }
                }
            }
        }
        assert!(
            exercised > 0,
            "fixture should have nontrivial apex automorphisms"
        );
    }

    #[test]
    fn composing_with_identity_spans_is_neutral() {
        let cfs = fix5_cartesian();
        let d = build_dual(&cfs).unwrap();
        let cat = cfs.cat();
        for m in d.cat().morphisms() {
            let s = *d.span(m);
            let src = s.source(cat);
            let dst = s.target(cat);
            let id_src = canonicalize_span(
                &cfs,
                &SpanMorphism {
                    apex: src,
                    left_leg: cat.identity(src),
                    right_leg: cat.identity(src),
                },
            );
            let id_dst = canonicalize_span(
                &cfs,
                &SpanMorphism {
                    apex: dst,
                    left_leg: cat.identity(dst),
                    right_leg: cat.identity(dst),
                },
            );
            assert_eq!(compose_spans(&cfs, &s, &id_src).unwrap(), s);
            assert_eq!(compose_spans(&cfs, &id_dst, &s).unwrap(), s);
        }
    }

    #[test]
    fn double_dual_is_an_equivalence_on_every_fixture_system() {
        let fixtures = [
            cartesian_fixture(fix4_iso_all_system()),
            cartesian_fixture(fix2_all_iso_system()),
            cartesian_fixture(par2_all_iso_system()),
            fix5_cartesian(),
        ];
        for cfs in &fixtures {
            let report = double_dual_check(cfs);
            assert!(report.pass(), "{:?}", report);
        }

        let point = fix1();
        let cfs = is_cartesian(
            &point,
            ClassPair {
                left: ClassSpec::Iso.resolve(&point).unwrap(),
                right: ClassSpec::All.resolve(&point).unwrap(),
            },
        )
        .unwrap();
        assert!(double_dual_check(&cfs).pass());
    }

    #[test]
    fn identity_functor_transports_to_the_identity_dual_functor() {
        let cfs = fix5_cartesian();
        let d = build_dual(&cfs).unwrap();
        let f = dual_functor(&d, &d, &Functor::identity(cfs.cat())).unwrap();
        assert_eq!(f, Functor::identity(d.cat()));
    }

    #[test]
    fn subcategory_inclusion_transports_to_a_dual_functor() {
        // The identity-shaped objects of the mono-arrow category form a full
        // subcategory closed under factorization; with (Iso, All) classes
        // its inclusion preserves both classes of the big system.
        let cfs = fix5_cartesian();
        let cat = cfs.cat();
        let keep: Vec<ObjId> = ["id_S0", "id_S1", "id_S2"]
            .iter()
            .map(|n| cat.object_named(n).unwrap())
            .collect();
        let sub = cat.full_subcategory(&keep);
        let small = is_cartesian(
            &sub.cat,
            ClassPair {
                left: ClassSpec::Iso.resolve(&sub.cat).unwrap(),
                right: ClassSpec::All.resolve(&sub.cat).unwrap(),
            },
        )
        .unwrap();
        let inclusion = Functor::validate(
            sub.cat.clone(),
            cat.clone(),
            sub.obj_embed.clone(),
            sub.mor_embed.clone(),
        )
        .unwrap();
        let d_small = build_dual(&small).unwrap();
        let d_big = build_dual(&cfs).unwrap();
        dual_functor(&d_small, &d_big, &inclusion).unwrap();
    }

    #[test]
    fn class_dropping_functor_is_rejected() {
        let iso_all = is_cartesian(
            &fix2(),
            ClassPair {
                left: ClassSpec::Iso.resolve(&fix2()).unwrap(),
                right: ClassSpec::All.resolve(&fix2()).unwrap(),
            },
        )
        .unwrap();
        let all_iso = cartesian_fixture(fix2_all_iso_system());
        let d_src = build_dual(&iso_all).unwrap();
        let d_dst = build_dual(&all_iso).unwrap();
        let err = dual_functor(&d_src, &d_dst, &Functor::identity(&fix2())).unwrap_err();
        match err {
            DualFunctorError::ClassNotPreserved { morphism } => assert_eq!(morphism, "u"),
            other => panic!("expected class preservation failure, got {other:?}"),
        }
    }

    #[test]
    fn lens_category_agrees_with_the_dual_on_every_indexed_fixture() {
        for ix in [fix6(), fix8(), const_one_indexed(&fix2())] {
            let report = check_fiberwise_op_square(&ix);
            assert!(report.pass(), "{:?}", report);
        }
    }
}
