//! Strict indexed categories over a finite base.
//!
//! An [`IndexedCategory`] assigns a fiber category to every base object and a
//! transition functor to every base morphism, contravariantly and *strictly*:
//! identities go to identity functors and composites to composites on the
//! nose. [`grothendieck`] glues the fibers into a total category fibred over
//! the base; [`fiberwise_opposite`] dualizes each fiber in place; and
//! [`lens_category`] is the total category of the fiberwise opposite, whose
//! morphisms pair a forward base map with a backward fiber map
//! (`⟨f^♯, f⟩` with `f^♯ : f*E′ → E`). [`compose_lenses`] implements the
//! composite `⟨f^♯ ∘ f*(g^♯), g∘f⟩` directly so it can be cross-checked
//! against the total category's composition table.
//!
//! Only strict indexed categories are supported: the fixtures in this crate
//! can always be presented strictly, and strictness keeps the data model free
//! of coherence bookkeeping. Non-strict (pseudofunctorial) reindexing is out
//! of scope.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::category::{
    CatError, FiniteCategory, MorId, ObjId, RawCategory, RawComposite, RawMorphism,
};
use crate::fibration::{validate_fibration, Fibration, NotAFibration};
use crate::functor::{Functor, FunctorError};

/// A strict contravariant assignment of finite categories to a finite base:
/// one fiber per base object, one transition functor per base morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexedCategory {
    base: FiniteCategory,
    fibers: Vec<FiniteCategory>,
    /// Indexed by base morphism: `reindex[f] : fiber(dst f) → fiber(src f)`.
    reindex: Vec<Functor>,
}

/// Why a family of fibers and transition functors fails to be a strict
/// indexed category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexedError {
    /// Wrong number of fibers or transition functors.
    Shape(String),
    /// The transition functor for `morphism` does not run between the
    /// declared fibers.
    BadTransition { morphism: String, detail: String },
    /// The transition functor for the identity of `object` is not the
    /// identity functor.
    IdentityNotStrict { object: String },
    /// `reindex(g ∘ f)` differs from `reindex(f) ∘ reindex(g)`.
    CompositionNotStrict { f: String, g: String },
}

impl fmt::Display for IndexedError {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexedError::Shape(detail) => write!(out, "malformed indexed category: {detail}"),
            IndexedError::BadTransition { morphism, detail } => {
                write!(
                    out,
                    "transition functor for {morphism} is invalid: {detail}"
                )
            }
            IndexedError::IdentityNotStrict { object } => {
                write!(
                    out,
                    "transition along the identity of {object} is not the identity functor"
                )
            }
            IndexedError::CompositionNotStrict { f, g } => {
                write!(out, "transition along the composite of {g} after {f} is not the composite of the transitions")
            }
        }
    }
}

/// Checks strict contravariant functoriality and packages the data.
///
/// `fibers` is indexed by base object, `reindex` by base morphism; the
/// functor for `f : b → b′` must run `fibers[b′] → fibers[b]`. Strictness is
/// field-exact equality of functors: transitions along identities must *be*
/// identity functors, and the transition along a composite must *be* the
/// composite of the transitions.
pub fn validate_indexed(
    base: FiniteCategory,
    fibers: Vec<FiniteCategory>,
    reindex: Vec<Functor>,
) -> Result<IndexedCategory, IndexedError> {
    if fibers.len() != base.num_objects() {
        return Err(IndexedError::Shape(format!(
            "{} fibers for {} base objects",
            fibers.len(),
            base.num_objects()
        )));
    }
    if reindex.len() != base.num_morphisms() {
        return Err(IndexedError::Shape(format!(
            "{} transition functors for {} base morphisms",
            reindex.len(),
            base.num_morphisms()
        )));
    }
    for m in base.morphisms() {
        let tr = &reindex[m.0];
        if tr.source() != &fibers[base.dst(m).0] {
            return Err(IndexedError::BadTransition {
                morphism: base.mor_name(m).to_string(),
                detail: "source is not the fiber over the morphism's target".to_string(),
            });
        }
        if tr.target() != &fibers[base.src(m).0] {
            return Err(IndexedError::BadTransition {
                morphism: base.mor_name(m).to_string(),
                detail: "target is not the fiber over the morphism's source".to_string(),
            });
        }
    }
    for b in base.objects() {
        if reindex[base.identity(b).0] != Functor::identity(&fibers[b.0]) {
            return Err(IndexedError::IdentityNotStrict {
                object: base.object_name(b).to_string(),
            });
        }
    }
    for g in base.morphisms() {
        for f in base.morphisms() {
            let Some(gf) = base.compose(g, f) else {
                continue;
            };
            if reindex[gf.0] != Functor::compose(&reindex[f.0], &reindex[g.0]) {
                return Err(IndexedError::CompositionNotStrict {
                    f: base.mor_name(f).to_string(),
                    g: base.mor_name(g).to_string(),
                });
            }
        }
    }
    Ok(IndexedCategory {
        base,
        fibers,
        reindex,
    })
}

impl IndexedCategory {
    pub fn base(&self) -> &FiniteCategory {
        &self.base
    }

    pub fn fiber(&self, b: ObjId) -> &FiniteCategory {
        &self.fibers[b.0]
    }

    pub fn fibers(&self) -> &[FiniteCategory] {
        &self.fibers
    }

    /// The transition functor along `f : b → b′`, running
    /// `fiber(b′) → fiber(b)`.
    pub fn reindex(&self, f: MorId) -> &Functor {
        &self.reindex[f.0]
    }
}

/// The total category glued from an indexed category, with its projection to
/// the base (kept as a validated fibration) and the pair decomposition of
/// every object and morphism.
///
/// Objects are pairs `⟨E, B⟩` (fiber object first); a morphism
/// `⟨E, B⟩ → ⟨E′, B′⟩` is a pair `⟨φ, f⟩` of a base morphism `f : B → B′`
/// and a fiber morphism `φ : E → f*E′` in the fiber over `B`.
#[derive(Clone, Debug)]
pub struct GrothTotal {
    total: FiniteCategory,
    fibration: Fibration,
    obj_pairs: Vec<(ObjId, ObjId)>,
    mor_pairs: Vec<(MorId, MorId)>,
}

/// A failure while assembling a total category. Every variant indicates an
/// internal inconsistency (the input indexed category is validated before
/// construction starts), so these are surfaced verbatim rather than mapped.
#[derive(Clone, Debug)]
pub enum GrothError {
    Axioms(CatError),
    Projection(FunctorError),
    Fibration(NotAFibration),
}

impl fmt::Display for GrothError {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrothError::Axioms(e) => write!(out, "total category failed validation: {e}"),
            GrothError::Projection(e) => write!(out, "projection failed the functor laws: {e}"),
            GrothError::Fibration(e) => write!(out, "projection is not a fibration: {e}"),
        }
    }
}

impl GrothTotal {
    pub fn total(&self) -> &FiniteCategory {
        &self.total
    }

    pub fn projection(&self) -> &Functor {
        self.fibration.projection()
    }

    pub fn fibration(&self) -> &Fibration {
        &self.fibration
    }

    /// `(fiber object, base object)` for a total object.
    pub fn obj_pair(&self, o: ObjId) -> (ObjId, ObjId) {
        self.obj_pairs[o.0]
    }

    /// `(fiber component, base component)` for a total morphism. The fiber
    /// component lives in the fiber over the morphism's source base object.
    pub fn mor_pair(&self, m: MorId) -> (MorId, MorId) {
        self.mor_pairs[m.0]
    }

    /// The total object over `base_obj` whose fiber component is
    /// `fiber_obj`.
    pub fn pair_obj(&self, fiber_obj: ObjId, base_obj: ObjId) -> Option<ObjId> {
        self.obj_pairs
            .iter()
            .position(|&(e, b)| e == fiber_obj && b == base_obj)
            .map(ObjId)
    }

    /// The total morphism `src → dst` with the given fiber and base
    /// components.
    pub fn pair_mor(&self, src: ObjId, dst: ObjId, fiber: MorId, base: MorId) -> Option<MorId> {
        self.total
            .hom(src, dst)
            .iter()
            .copied()
            .find(|&m| self.mor_pairs[m.0] == (fiber, base))
    }

    /// Reads a total morphism as a lens. Meaningful when this total category
    /// was built over the fiberwise opposite: the fiber component is then a
    /// morphism `f*E′ → E` of the original fiber.
    pub fn lens_of(&self, m: MorId) -> Lens {
        let (fiber, base) = self.mor_pairs[m.0];
        Lens {
            base,
            fiber,
            src: self.obj_pairs[self.total.src(m).0],
            dst: self.obj_pairs[self.total.dst(m).0],
        }
    }

    /// The total morphism a lens denotes, if its endpoints exist here.
    pub fn lens_mor(&self, lens: &Lens) -> Option<MorId> {
        let src = self.pair_obj(lens.src.0, lens.src.1)?;
        let dst = self.pair_obj(lens.dst.0, lens.dst.1)?;
        self.pair_mor(src, dst, lens.fiber, lens.base)
    }
}

/// Builds the total category of a strict indexed category and validates it —
/// category axioms, projection functor laws, and the fibration property —
/// through the same paths as every other category in the crate.
pub fn grothendieck(ix: &IndexedCategory) -> Result<GrothTotal, GrothError> {
    let base = ix.base();

    let mut obj_pairs: Vec<(ObjId, ObjId)> = Vec::new();
    let mut obj_names: Vec<String> = Vec::new();
    for b in base.objects() {
        for e in ix.fiber(b).objects() {
            obj_names.push(format!(
                "<{},{}>",
                ix.fiber(b).object_name(e),
                base.object_name(b)
            ));
            obj_pairs.push((e, b));
        }
    }

    let mut mor_pairs: Vec<(MorId, MorId)> = Vec::new();
    let mut mor_ends: Vec<(usize, usize)> = Vec::new();
    let mut morphisms: Vec<RawMorphism> = Vec::new();
    // Keyed by (target total object, base component, fiber component); the
    // source is determined by the components, the target is not.
    let mut index: BTreeMap<(usize, MorId, MorId), usize> = BTreeMap::new();
    for (s, &(e, b)) in obj_pairs.iter().enumerate() {
        for (d, &(e2, b2)) in obj_pairs.iter().enumerate() {
            for &f in base.hom(b, b2) {
                let pulled = ix.reindex(f).on_obj(e2);
                for &phi in ix.fiber(b).hom(e, pulled) {
                    let name = format!(
                        "<{},{}>:{}=>{}",
                        ix.fiber(b).mor_name(phi),
                        base.mor_name(f),
                        obj_names[s],
                        obj_names[d]
                    );
                    index.insert((d, f, phi), morphisms.len());
                    mor_pairs.push((phi, f));
                    mor_ends.push((s, d));
                    morphisms.push(RawMorphism {
                        name,
                        src: obj_names[s].clone(),
                        dst: obj_names[d].clone(),
                    });
                }
            }
        }
    }

    let identities: Vec<(String, String)> = obj_pairs
        .iter()
        .enumerate()
        .map(|(o, &(e, b))| {
            let id = index[&(o, base.identity(b), ix.fiber(b).identity(e))];
            (obj_names[o].clone(), morphisms[id].name.clone())
        })
        .collect();

    let mut compose: Vec<RawComposite> = Vec::new();
    for (m2, &(phi2, f2)) in mor_pairs.iter().enumerate() {
        for (m1, &(phi1, f1)) in mor_pairs.iter().enumerate() {
            if mor_ends[m1].1 != mor_ends[m2].0 {
                continue;
            }
            let b1 = obj_pairs[mor_ends[m1].0].1;
            let base_part = base.comp(f2, f1);
            let fiber_part = ix.fiber(b1).comp(ix.reindex(f1).on_mor(phi2), phi1);
            let result = index[&(mor_ends[m2].1, base_part, fiber_part)];
            compose.push(RawComposite {
                g: morphisms[m2].name.clone(),
                f: morphisms[m1].name.clone(),
                result: morphisms[result].name.clone(),
            });
        }
    }

    let raw = RawCategory {
        objects: obj_names,
        morphisms,
        identities,
        compose,
    };
    let total = FiniteCategory::validate(&raw).map_err(GrothError::Axioms)?;

    let proj_obj: Vec<ObjId> = obj_pairs.iter().map(|&(_, b)| b).collect();
    let proj_mor: Vec<MorId> = mor_pairs.iter().map(|&(_, f)| f).collect();
    let projection = Functor::validate(total.clone(), base.clone(), proj_obj, proj_mor)
        .map_err(GrothError::Projection)?;
    let fibration = validate_fibration(&projection).map_err(GrothError::Fibration)?;

    Ok(GrothTotal {
        total,
        fibration,
        obj_pairs,
        mor_pairs,
    })
}

/// Replaces every fiber by its opposite and transports the transition
/// functors (a functor's object and morphism tables serve verbatim between
/// the opposite categories). Strictness is preserved field-exactly, and the
/// operation is an involution.
pub fn fiberwise_opposite(ix: &IndexedCategory) -> IndexedCategory {
    let fibers: Vec<FiniteCategory> = ix.fibers.iter().map(FiniteCategory::opposite).collect();
    let reindex: Vec<Functor> = ix
        .reindex
        .iter()
        .enumerate()
        .map(|(m, tr)| {
            let m = MorId(m);
            Functor::validate(
                fibers[ix.base.dst(m).0].clone(),
                fibers[ix.base.src(m).0].clone(),
                tr.obj_map().to_vec(),
                tr.mor_map().to_vec(),
            )
            .expect("a functor's tables transport to the opposite fibers")
        })
        .collect();
    validate_indexed(ix.base.clone(), fibers, reindex)
        .expect("fiberwise opposites preserve strictness")
}

/// The total category of the fiberwise opposite. Its morphisms are lenses
/// `⟨f^♯, f⟩` with `f : B → B′` forward in the base and `f^♯ : f*E′ → E`
/// backward in the fiber over `B`.
pub fn lens_category(ix: &IndexedCategory) -> Result<GrothTotal, GrothError> {
    grothendieck(&fiberwise_opposite(ix))
}

/// A lens over an indexed category: a forward base morphism together with a
/// backward fiber morphism `f^♯ : f*E′ → E` in the fiber over the source
/// base object. Endpoints are stored as `(fiber object, base object)` pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lens {
    pub base: MorId,
    pub fiber: MorId,
    pub src: (ObjId, ObjId),
    pub dst: (ObjId, ObjId),
}

/// The identity lens at `⟨E, B⟩`: identity base map, identity fiber map
/// (strictness makes `id*E = E`).
pub fn identity_lens(ix: &IndexedCategory, fiber_obj: ObjId, base_obj: ObjId) -> Lens {
    Lens {
        base: ix.base().identity(base_obj),
        fiber: ix.fiber(base_obj).identity(fiber_obj),
        src: (fiber_obj, base_obj),
        dst: (fiber_obj, base_obj),
    }
}

/// Composes two lenses by the direct formula `⟨f^♯ ∘ f*(g^♯), g∘f⟩`, where
/// `l1 = ⟨f^♯, f⟩` is applied first. The result can be cross-checked against
/// the composition table of [`lens_category`].
pub fn compose_lenses(ix: &IndexedCategory, l2: &Lens, l1: &Lens) -> Result<Lens, String> {
    if l1.dst != l2.src {
        return Err(format!(
            "lens endpoints do not match: first ends at <{},{}>, second starts at <{},{}>",
            ix.fiber(l1.dst.1).object_name(l1.dst.0),
            ix.base().object_name(l1.dst.1),
            ix.fiber(l2.src.1).object_name(l2.src.0),
            ix.base().object_name(l2.src.1),
        ));
    }
    let base = ix
        .base()
        .compose(l2.base, l1.base)
        .ok_or_else(|| "base morphisms do not compose".to_string())?;
    let pulled = ix.reindex(l1.base).on_mor(l2.fiber);
    let fiber = ix.fiber(l1.src.1).comp(l1.fiber, pulled);
    Ok(Lens {
        base,
        fiber,
        src: l1.src,
        dst: l2.dst,
    })
}
