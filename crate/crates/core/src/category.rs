//! Finite categories as explicit composition tables.
//!
//! A [`FiniteCategory`] stores its objects and morphisms as contiguous
//! indices, the identity assignment, and the full composition table. It is
//! only ever obtained through [`FiniteCategory::validate`], which checks the
//! category axioms exhaustively; every derived category in this crate (arrow
//! categories, total categories, span categories, opposites) is rebuilt as a
//! [`RawCategory`] and sent back through the same validator, so internal
//! constructions enjoy the same scrutiny as user input.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Index of an object within its category.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ObjId(pub usize);

/// Index of a morphism within its category.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MorId(pub usize);

/// A named morphism in a not-yet-validated category description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawMorphism {
    pub name: String,
    pub src: String,
    pub dst: String,
}

/// One entry `result = g ∘ f` of a raw composition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawComposite {
    pub g: String,
    pub f: String,
    pub result: String,
}

/// A category description in terms of names, prior to validation.
///
/// `identities` pairs each object with its identity morphism. `compose`
/// must list `g ∘ f` for every composable pair `(g, f)`; validation rejects
/// missing or ill-typed entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawCategory {
    pub objects: Vec<String>,
    pub morphisms: Vec<RawMorphism>,
    pub identities: Vec<(String, String)>,
    pub compose: Vec<RawComposite>,
}

/// Which category axiom a violation witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatLaw {
    /// A composable pair has no entry in the composition table.
    MissingComposite,
    /// `f ∘ id` or `id ∘ f` differs from `f`, or an identity is not an
    /// endomorphism of its object.
    Identity,
    /// A tabulated composite has the wrong source or target.
    Closure,
    /// `(h ∘ g) ∘ f ≠ h ∘ (g ∘ f)` for some composable triple.
    Associativity,
}

impl fmt::Display for CatLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CatLaw::MissingComposite => "missing composite",
            CatLaw::Identity => "identity law",
            CatLaw::Closure => "composite typing",
            CatLaw::Associativity => "associativity",
        };
        f.write_str(s)
    }
}

/// Why a [`RawCategory`] failed validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatError {
    /// Dangling or duplicate names, conflicting table entries, and similar
    /// shape problems that precede any axiom check.
    MalformedInput(String),
    /// A concrete witness that one of the category axioms fails.
    AxiomViolation { law: CatLaw, witness: String },
}

impl fmt::Display for CatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatError::MalformedInput(msg) => write!(f, "malformed input: {msg}"),
            CatError::AxiomViolation { law, witness } => {
                write!(f, "axiom violation ({law}): {witness}")
            }
        }
    }
}

/// A validated finite category.
///
/// Composition is total on composable pairs and stored row-major: the
/// composite of `g` after `f` lives at `g * num_morphisms + f`. Hom-sets are
/// precomputed and listed in morphism-index order, which is what makes every
/// search in this crate deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    object_names: Vec<String>,
    mor_names: Vec<String>,
    src: Vec<ObjId>,
    dst: Vec<ObjId>,
    identity: Vec<MorId>,
    table: Vec<Option<MorId>>,
    hom: Vec<Vec<MorId>>,
}

impl FiniteCategory {
    /// Checks the category axioms on `raw` exhaustively and builds the
    /// indexed representation.
    ///
    /// Checks run in a fixed order so diagnostics are stable: input shape
    /// (names resolve, no duplicates, identities cover every object, the
    /// table has one entry per composable pair and none for non-composable
    /// pairs), then the identity laws, then composite typing, then
    /// associativity. The first failure wins.
    pub fn validate(raw: &RawCategory) -> Result<Self, CatError> {
        let obj_index = index_names(&raw.objects, "object")?;
        let mor_index = index_names(
            &raw.morphisms
                .iter()
                .map(|m| m.name.clone())
                .collect::<Vec<_>>(),
            "morphism",
        )?;
        let n_obj = raw.objects.len();
        let n_mor = raw.morphisms.len();

        let mut src = Vec::with_capacity(n_mor);
        let mut dst = Vec::with_capacity(n_mor);
        for m in &raw.morphisms {
            src.push(ObjId(lookup(&obj_index, &m.src, "object", &m.name)?));
            dst.push(ObjId(lookup(&obj_index, &m.dst, "object", &m.name)?));
        }

        let mut identity: Vec<Option<MorId>> = vec![None; n_obj];
        for (obj, id_name) in &raw.identities {
            let o = lookup(&obj_index, obj, "object", id_name)?;
            let m = lookup(&mor_index, id_name, "morphism", obj)?;
            if identity[o].is_some() {
                return Err(CatError::MalformedInput(format!(
                    "object {obj} has two identity assignments"
                )));
            }
            identity[o] = Some(MorId(m));
        }
        let identity: Vec<MorId> = identity
            .into_iter()
            .enumerate()
            .map(|(i, id)| {
                id.ok_or_else(|| {
                    CatError::MalformedInput(format!(
                        "object {} has no identity assignment",
                        raw.objects[i]
                    ))
                })
            })
            .collect::<Result<_, _>>()?;

        let mut table: Vec<Option<MorId>> = vec![None; n_mor * n_mor];
        for entry in &raw.compose {
            let g = MorId(lookup(&mor_index, &entry.g, "morphism", &entry.result)?);
            let f = MorId(lookup(&mor_index, &entry.f, "morphism", &entry.result)?);
            let r = MorId(lookup(&mor_index, &entry.result, "morphism", &entry.g)?);
            if dst[f.0] != src[g.0] {
                return Err(CatError::MalformedInput(format!(
                    "composite {} ∘ {} is listed but the pair is not composable",
                    entry.g, entry.f
                )));
            }
            let slot = &mut table[g.0 * n_mor + f.0];
            match slot {
                Some(prev) if *prev != r => {
                    return Err(CatError::MalformedInput(format!(
                        "conflicting entries for {} ∘ {}",
                        entry.g, entry.f
                    )))
                }
                _ => *slot = Some(r),
            }
        }

        let cat = FiniteCategory {
            object_names: raw.objects.clone(),
            mor_names: raw.morphisms.iter().map(|m| m.name.clone()).collect(),
            src,
            dst,
            identity,
            table,
            hom: Vec::new(),
        };

        // Totality: every composable pair must be tabulated.
        for g in 0..n_mor {
            for f in 0..n_mor {
                if cat.dst[f] == cat.src[g] && cat.table[g * n_mor + f].is_none() {
                    return Err(CatError::AxiomViolation {
                        law: CatLaw::MissingComposite,
                        witness: format!(
                            "{} ∘ {} has no entry",
                            cat.mor_names[g], cat.mor_names[f]
                        ),
                    });
                }
            }
        }

        // Identity laws. An identity must be an endomorphism of its object
        // and must be neutral on both sides.
        for (o, &id) in cat.identity.iter().enumerate() {
            if cat.src[id.0] != ObjId(o) || cat.dst[id.0] != ObjId(o) {
                return Err(CatError::AxiomViolation {
                    law: CatLaw::Identity,
                    witness: format!(
                        "identity {} of {} is not an endomorphism of {}",
                        cat.mor_names[id.0], cat.object_names[o], cat.object_names[o]
                    ),
                });
            }
        }
        for f in 0..n_mor {
            let ids = cat.identity[cat.src[f].0];
            let idt = cat.identity[cat.dst[f].0];
            if cat.table[f * n_mor + ids.0] != Some(MorId(f)) {
                return Err(CatError::AxiomViolation {
                    law: CatLaw::Identity,
                    witness: format!(
                        "{} ∘ {} ≠ {}",
                        cat.mor_names[f], cat.mor_names[ids.0], cat.mor_names[f]
                    ),
                });
            }
            if cat.table[idt.0 * n_mor + f] != Some(MorId(f)) {
                return Err(CatError::AxiomViolation {
                    law: CatLaw::Identity,
                    witness: format!(
                        "{} ∘ {} ≠ {}",
                        cat.mor_names[idt.0], cat.mor_names[f], cat.mor_names[f]
                    ),
                });
            }
        }

        // Closure typing: tabulated composites must go src(f) → dst(g).
        for g in 0..n_mor {
            for f in 0..n_mor {
                if let Some(r) = cat.table[g * n_mor + f] {
                    if cat.src[r.0] != cat.src[f] || cat.dst[r.0] != cat.dst[g] {
                        return Err(CatError::AxiomViolation {
                            law: CatLaw::Closure,
                            witness: format!(
                                "{} ∘ {} = {} has the wrong endpoints",
                                cat.mor_names[g], cat.mor_names[f], cat.mor_names[r.0]
                            ),
                        });
                    }
                }
            }
        }

        // Associativity on every composable triple.
        for h in 0..n_mor {
            for g in 0..n_mor {
                if cat.dst[g] != cat.src[h] {
                    continue;
                }
                let hg = cat.table[h * n_mor + g].unwrap();
                for f in 0..n_mor {
                    if cat.dst[f] != cat.src[g] {
                        continue;
                    }
                    let gf = cat.table[g * n_mor + f].unwrap();
                    if cat.table[hg.0 * n_mor + f] != cat.table[h * n_mor + gf.0] {
                        return Err(CatError::AxiomViolation {
                            law: CatLaw::Associativity,
                            witness: format!(
                                "({} ∘ {}) ∘ {} ≠ {} ∘ ({} ∘ {})",
                                cat.mor_names[h],
                                cat.mor_names[g],
                                cat.mor_names[f],
                                cat.mor_names[h],
                                cat.mor_names[g],
                                cat.mor_names[f]
                            ),
                        });
                    }
                }
            }
        }

        Ok(cat.with_hom_table())
    }

    fn with_hom_table(mut self) -> Self {
        let n_obj = self.object_names.len();
        let mut hom = vec![Vec::new(); n_obj * n_obj];
        for m in 0..self.mor_names.len() {
            hom[self.src[m].0 * n_obj + self.dst[m].0].push(MorId(m));
        }
        self.hom = hom;
        self
    }

    pub fn num_objects(&self) -> usize {
        self.object_names.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.mor_names.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> {
        (0..self.num_objects()).map(ObjId)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> {
        (0..self.num_morphisms()).map(MorId)
    }

    pub fn object_name(&self, o: ObjId) -> &str {
        &self.object_names[o.0]
    }

    pub fn mor_name(&self, m: MorId) -> &str {
        &self.mor_names[m.0]
    }

    pub fn object_named(&self, name: &str) -> Option<ObjId> {
        self.object_names.iter().position(|n| n == name).map(ObjId)
    }

    pub fn mor_named(&self, name: &str) -> Option<MorId> {
        self.mor_names.iter().position(|n| n == name).map(MorId)
    }

    pub fn src(&self, m: MorId) -> ObjId {
        self.src[m.0]
    }

    pub fn dst(&self, m: MorId) -> ObjId {
        self.dst[m.0]
    }

    pub fn identity(&self, o: ObjId) -> MorId {
        self.identity[o.0]
    }

    pub fn is_identity(&self, m: MorId) -> bool {
        self.identity[self.src(m).0] == m
    }

    /// `g ∘ f`, or `None` when the pair is not composable.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.table[g.0 * self.mor_names.len() + f.0]
    }

    /// `g ∘ f` for a pair the caller knows to be composable.
    pub fn comp(&self, g: MorId, f: MorId) -> MorId {
        self.compose(g, f).expect("pair must be composable")
    }

    /// Morphisms `a → b` in morphism-index order.
    pub fn hom(&self, a: ObjId, b: ObjId) -> &[MorId] {
        &self.hom[a.0 * self.num_objects() + b.0]
    }

    /// The two-sided inverse of `f`, if one exists. Inverses are unique, so
    /// no tie-break is needed.
    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        let (a, b) = (self.src(f), self.dst(f));
        self.hom(b, a)
            .iter()
            .copied()
            .find(|&g| self.comp(g, f) == self.identity(a) && self.comp(f, g) == self.identity(b))
    }

    /// Certifies `f` invertible by exhibiting a two-sided inverse.
    pub fn is_isomorphism(&self, f: MorId) -> bool {
        self.inverse(f).is_some()
    }

    /// All isomorphisms, in index order.
    pub fn isomorphisms(&self) -> BTreeSet<MorId> {
        self.morphisms()
            .filter(|&m| self.is_isomorphism(m))
            .collect()
    }

    /// Certifies `m` a monomorphism: no two distinct parallel morphisms into
    /// `src m` are merged by postcomposition with `m`.
    pub fn is_mono(&self, m: MorId) -> bool {
        let a = self.src(m);
        self.objects().all(|v| {
            let hom = self.hom(v, a);
            hom.iter().all(|&u1| {
                hom.iter()
                    .all(|&u2| u1 == u2 || self.comp(m, u1) != self.comp(m, u2))
            })
        })
    }

    /// Certifies `m` an epimorphism: no two distinct parallel morphisms out
    /// of `dst m` are merged by precomposition with `m`.
    pub fn is_epi(&self, m: MorId) -> bool {
        let b = self.dst(m);
        self.objects().all(|v| {
            let hom = self.hom(b, v);
            hom.iter().all(|&u1| {
                hom.iter()
                    .all(|&u2| u1 == u2 || self.comp(u1, m) != self.comp(u2, m))
            })
        })
    }

    /// The smallest-index terminal object, certified by checking that every
    /// object has exactly one morphism into it.
    pub fn terminal_object(&self) -> Option<ObjId> {
        self.objects()
            .find(|&t| self.objects().all(|v| self.hom(v, t).len() == 1))
    }

    /// The opposite category. Objects and morphisms keep their indices and
    /// names; sources and targets swap and the table transposes.
    pub fn opposite(&self) -> FiniteCategory {
        let raw = RawCategory {
            objects: self.object_names.clone(),
            morphisms: self
                .morphisms()
                .map(|m| RawMorphism {
                    name: self.mor_names[m.0].clone(),
                    src: self.object_names[self.dst(m).0].clone(),
                    dst: self.object_names[self.src(m).0].clone(),
                })
                .collect(),
            identities: self
                .objects()
                .map(|o| {
                    (
                        self.object_names[o.0].clone(),
                        self.mor_names[self.identity(o).0].clone(),
                    )
                })
                .collect(),
            compose: self
                .morphisms()
                .flat_map(|g| self.morphisms().map(move |f| (g, f)))
                .filter_map(|(g, f)| {
                    self.compose(g, f).map(|r| RawComposite {
                        g: self.mor_names[f.0].clone(),
                        f: self.mor_names[g.0].clone(),
                        result: self.mor_names[r.0].clone(),
                    })
                })
                .collect(),
        };
        FiniteCategory::validate(&raw).expect("opposite of a valid category is valid")
    }

    /// The full subcategory on `objects` (given in the desired order),
    /// together with the maps sending its indices back to this category's.
    pub fn full_subcategory(&self, objects: &[ObjId]) -> Subcategory {
        let keep: BTreeSet<ObjId> = objects.iter().copied().collect();
        let mor_embed: Vec<MorId> = self
            .morphisms()
            .filter(|&m| keep.contains(&self.src(m)) && keep.contains(&self.dst(m)))
            .collect();
        let raw = RawCategory {
            objects: objects
                .iter()
                .map(|o| self.object_names[o.0].clone())
                .collect(),
            morphisms: mor_embed
                .iter()
                .map(|&m| RawMorphism {
                    name: self.mor_names[m.0].clone(),
                    src: self.object_names[self.src(m).0].clone(),
                    dst: self.object_names[self.dst(m).0].clone(),
                })
                .collect(),
            identities: objects
                .iter()
                .map(|&o| {
                    (
                        self.object_names[o.0].clone(),
                        self.mor_names[self.identity(o).0].clone(),
                    )
                })
                .collect(),
            compose: mor_embed
                .iter()
                .flat_map(|&g| mor_embed.iter().map(move |&f| (g, f)))
                .filter_map(|(g, f)| {
                    self.compose(g, f).map(|r| RawComposite {
                        g: self.mor_names[g.0].clone(),
                        f: self.mor_names[f.0].clone(),
                        result: self.mor_names[r.0].clone(),
                    })
                })
                .collect(),
        };
        let cat =
            FiniteCategory::validate(&raw).expect("full subcategory of a valid category is valid");
        Subcategory {
            cat,
            obj_embed: objects.to_vec(),
            mor_embed,
        }
    }

    /// Reconstructs the raw description (used for serialization).
    pub fn to_raw(&self) -> RawCategory {
        RawCategory {
            objects: self.object_names.clone(),
            morphisms: self
                .morphisms()
                .map(|m| RawMorphism {
                    name: self.mor_names[m.0].clone(),
                    src: self.object_names[self.src(m).0].clone(),
                    dst: self.object_names[self.dst(m).0].clone(),
                })
                .collect(),
            identities: self
                .objects()
                .map(|o| {
                    (
                        self.object_names[o.0].clone(),
                        self.mor_names[self.identity(o).0].clone(),
                    )
                })
                .collect(),
            compose: self
                .morphisms()
                .flat_map(|g| self.morphisms().map(move |f| (g, f)))
                .filter_map(|(g, f)| {
                    self.compose(g, f).map(|r| RawComposite {
                        g: self.mor_names[g.0].clone(),
                        f: self.mor_names[f.0].clone(),
                        result: self.mor_names[r.0].clone(),
                    })
                })
                .collect(),
        }
    }
}

/// A full subcategory together with its embedding back into the ambient
/// category.
#[derive(Clone, Debug)]
pub struct Subcategory {
    pub cat: FiniteCategory,
    /// Subcategory object index → ambient object.
    pub obj_embed: Vec<ObjId>,
    /// Subcategory morphism index → ambient morphism.
    pub mor_embed: Vec<MorId>,
}

fn index_names(
    names: &[String],
    kind: &str,
) -> Result<alloc::collections::BTreeMap<String, usize>, CatError> {
    let mut map = alloc::collections::BTreeMap::new();
    for (i, n) in names.iter().enumerate() {
        if n.is_empty() {
            return Err(CatError::MalformedInput(format!("empty {kind} name")));
        }
        if map.insert(n.clone(), i).is_some() {
            return Err(CatError::MalformedInput(format!(
                "duplicate {kind} name {n}"
            )));
        }
    }
    Ok(map)
}

fn lookup(
    map: &alloc::collections::BTreeMap<String, usize>,
    name: &str,
    kind: &str,
    context: &str,
) -> Result<usize, CatError> {
    map.get(name).copied().ok_or_else(|| {
        CatError::MalformedInput(format!("unknown {kind} {name} (referenced near {context})"))
    })
}

/// A commuting square
///
/// ```text
///        p1
///    P ------> A
///    |         |
///  p2|         | f
///    v         v
///    B ------> C
///        g
/// ```
///
/// recorded as a candidate or certified pullback of the cospan `(f, g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PullbackSquare {
    pub apex: ObjId,
    pub p1: MorId,
    pub p2: MorId,
    pub f: MorId,
    pub g: MorId,
}

/// Exhaustively certifies that the square is a limiting cone: every
/// competing cone factors through the apex by exactly one morphism.
pub fn certify_pullback(cat: &FiniteCategory, sq: &PullbackSquare) -> bool {
    if cat.dst(sq.f) != cat.dst(sq.g)
        || cat.src(sq.p1) != sq.apex
        || cat.src(sq.p2) != sq.apex
        || cat.dst(sq.p1) != cat.src(sq.f)
        || cat.dst(sq.p2) != cat.src(sq.g)
        || cat.compose(sq.f, sq.p1) != cat.compose(sq.g, sq.p2)
    {
        return false;
    }
    let (a, b) = (cat.src(sq.f), cat.src(sq.g));
    for v in cat.objects() {
        for &q1 in cat.hom(v, a) {
            for &q2 in cat.hom(v, b) {
                if cat.comp(sq.f, q1) != cat.comp(sq.g, q2) {
                    continue;
                }
                let mediators = cat
                    .hom(v, sq.apex)
                    .iter()
                    .filter(|&&u| cat.comp(sq.p1, u) == q1 && cat.comp(sq.p2, u) == q2)
                    .count();
                if mediators != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// The pullback of the cospan `f : A → C ← B : g`, if it exists.
///
/// Candidates are scanned in index order — apex first, then `p1`, then `p2`
/// — and the first certified square is returned, so the choice is
/// deterministic. Callers must pass a genuine cospan.
pub fn pullback(cat: &FiniteCategory, f: MorId, g: MorId) -> Option<PullbackSquare> {
    assert_eq!(cat.dst(f), cat.dst(g), "pullback requires a cospan");
    let (a, b) = (cat.src(f), cat.src(g));
    for apex in cat.objects() {
        for &p1 in cat.hom(apex, a) {
            for &p2 in cat.hom(apex, b) {
                let sq = PullbackSquare { apex, p1, p2, f, g };
                if cat.compose(f, p1) == cat.compose(g, p2) && certify_pullback(cat, &sq) {
                    return Some(sq);
                }
            }
        }
    }
    None
}
