//! Built-in fixture categories.
//!
//! These are the small categories the test suite and the CLI's bundled
//! checks run against:
//!
//! * `fix1` — the terminal category (one object).
//! * `fix2` — the walking arrow `a → b`.
//! * `fix3` — the walking isomorphism.
//! * `fix4` — the skeleton of finite sets of size at most 2 (objects `S0`,
//!   `S1`, `S2`; 11 morphisms), generated from function tables.
//! * `fix5` — the full subcategory of the arrow category of `fix4` on the
//!   monomorphism objects, together with its vertical / pullback-square
//!   class pair. The restriction to monomorphisms matters: pullbacks of
//!   arbitrary cospans can need four elements, which `fix4` lacks, but a
//!   pullback of a mono along anything embeds into the base of the cospan
//!   and therefore stays within size 2. On the full arrow category the
//!   vertical/pullback-square pair is *not* a factorization system; on the
//!   mono part it is.
//! * `disc2` — the discrete category on two objects.
//!
//! Indexed fixtures (`fix6`–`fix8`) live at the bottom of the module, and
//! deliberately broken variants (`mut_*`) are provided for exercising the
//! diagnostic paths.
//!
//! Everything here is produced by deterministic generation: object and
//! morphism orders are fixed, so downstream choices (canonical
//! factorizations, pullback representatives) are reproducible.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::category::{
    certify_pullback, FiniteCategory, MorId, ObjId, PullbackSquare, RawCategory, RawComposite,
    RawMorphism,
};
use crate::functor::Functor;
use crate::indexed::{validate_indexed, IndexedCategory};
use crate::ofs::ClassSpec;

fn mor(name: &str, src: &str, dst: &str) -> RawMorphism {
    RawMorphism {
        name: name.into(),
        src: src.into(),
        dst: dst.into(),
    }
}

fn comp(g: &str, f: &str, result: &str) -> RawComposite {
    RawComposite {
        g: g.into(),
        f: f.into(),
        result: result.into(),
    }
}

/// The terminal category: one object, its identity.
pub fn fix1_raw() -> RawCategory {
    RawCategory {
        objects: vec!["star".into()],
        morphisms: vec![mor("id_star", "star", "star")],
        identities: vec![("star".into(), "id_star".into())],
        compose: vec![comp("id_star", "id_star", "id_star")],
    }
}

pub fn fix1() -> FiniteCategory {
    FiniteCategory::validate(&fix1_raw()).expect("fix1 is valid")
}

/// The walking arrow `a → b`.
pub fn fix2_raw() -> RawCategory {
    RawCategory {
        objects: vec!["a".into(), "b".into()],
        morphisms: vec![
            mor("id_a", "a", "a"),
            mor("id_b", "b", "b"),
            mor("u", "a", "b"),
        ],
        identities: vec![("a".into(), "id_a".into()), ("b".into(), "id_b".into())],
        compose: vec![
            comp("id_a", "id_a", "id_a"),
            comp("id_b", "id_b", "id_b"),
            comp("u", "id_a", "u"),
            comp("id_b", "u", "u"),
        ],
    }
}

pub fn fix2() -> FiniteCategory {
    FiniteCategory::validate(&fix2_raw()).expect("fix2 is valid")
}

/// The walking arrow with its identity redirected: `u ∘ id_a` is tabulated
/// as `id_b`. Validation must reject this with an identity-law diagnostic
/// naming `u`.
pub fn mut_fix2_identity_raw() -> RawCategory {
    let mut raw = fix2_raw();
    for entry in &mut raw.compose {
        if entry.g == "u" && entry.f == "id_a" {
            entry.result = "id_b".into();
        }
    }
    raw
}

/// The walking isomorphism: `i : x ⇄ y : j`.
pub fn fix3_raw() -> RawCategory {
    RawCategory {
        objects: vec!["x".into(), "y".into()],
        morphisms: vec![
            mor("id_x", "x", "x"),
            mor("id_y", "y", "y"),
            mor("i", "x", "y"),
            mor("j", "y", "x"),
        ],
        identities: vec![("x".into(), "id_x".into()), ("y".into(), "id_y".into())],
        compose: vec![
            comp("id_x", "id_x", "id_x"),
            comp("id_y", "id_y", "id_y"),
            comp("i", "id_x", "i"),
            comp("id_y", "i", "i"),
            comp("j", "id_y", "j"),
            comp("id_x", "j", "j"),
            comp("j", "i", "id_x"),
            comp("i", "j", "id_y"),
        ],
    }
}

pub fn fix3() -> FiniteCategory {
    FiniteCategory::validate(&fix3_raw()).expect("fix3 is valid")
}

/// The discrete category on two objects.
pub fn disc2_raw() -> RawCategory {
    RawCategory {
        objects: vec!["x0".into(), "x1".into()],
        morphisms: vec![mor("id_x0", "x0", "x0"), mor("id_x1", "x1", "x1")],
        identities: vec![("x0".into(), "id_x0".into()), ("x1".into(), "id_x1".into())],
        compose: vec![
            comp("id_x0", "id_x0", "id_x0"),
            comp("id_x1", "id_x1", "id_x1"),
        ],
    }
}

pub fn disc2() -> FiniteCategory {
    FiniteCategory::validate(&disc2_raw()).expect("disc2 is valid")
}

/// The walking parallel pair: `s, t : p ⇉ q`.
pub fn par2_raw() -> RawCategory {
    RawCategory {
        objects: vec!["p".into(), "q".into()],
        morphisms: vec![
            mor("id_p", "p", "p"),
            mor("id_q", "q", "q"),
            mor("s", "p", "q"),
            mor("t", "p", "q"),
        ],
        identities: vec![("p".into(), "id_p".into()), ("q".into(), "id_q".into())],
        compose: vec![
            comp("id_p", "id_p", "id_p"),
            comp("id_q", "id_q", "id_q"),
            comp("s", "id_p", "s"),
            comp("id_q", "s", "s"),
            comp("t", "id_p", "t"),
            comp("id_q", "t", "t"),
        ],
    }
}

pub fn par2() -> FiniteCategory {
    FiniteCategory::validate(&par2_raw()).expect("par2 is valid")
}

/// `(all morphisms, isomorphisms)` on the walking parallel pair: a valid
/// cartesian system with *no* injective objects (nothing extends both `s`
/// and `t` against each other), so it has no replacements.
pub fn par2_all_iso_system() -> RawSystem {
    RawSystem {
        category: par2_raw(),
        left: ClassSpec::All,
        right: ClassSpec::Iso,
    }
}

/// Function tables for the skeleton of sets of size ≤ 2. Each entry is
/// `(name, source size index, target size index, graph)` where `graph[x]`
/// is the image of element `x`.
const FIX4_FUNCTIONS: [(&str, usize, usize, &[usize]); 11] = [
    ("id_S0", 0, 0, &[]),
    ("id_S1", 1, 1, &[0]),
    ("id_S2", 2, 2, &[0, 1]),
    ("z01", 0, 1, &[]),
    ("z02", 0, 2, &[]),
    ("i0", 1, 2, &[0]),
    ("i1", 1, 2, &[1]),
    ("pt", 2, 1, &[0, 0]),
    ("c0", 2, 2, &[0, 0]),
    ("c1", 2, 2, &[1, 1]),
    ("sw", 2, 2, &[1, 0]),
];

/// The skeleton of finite sets of size at most 2, with composition derived
/// from the function tables.
pub fn fix4_raw() -> RawCategory {
    let objects: Vec<String> = vec!["S0".into(), "S1".into(), "S2".into()];
    let morphisms: Vec<RawMorphism> = FIX4_FUNCTIONS
        .iter()
        .map(|(name, s, d, _)| mor(name, &objects[*s], &objects[*d]))
        .collect();
    let mut compose = Vec::new();
    for (gn, gs, gd, gt) in FIX4_FUNCTIONS {
        for (fname, fs, fd, ft) in FIX4_FUNCTIONS {
            if fd != gs {
                continue;
            }
            let graph: Vec<usize> = ft.iter().map(|&x| gt[x]).collect();
            let result = FIX4_FUNCTIONS
                .iter()
                .find(|(_, s, d, t)| *s == fs && *d == gd && *t == graph.as_slice())
                .map(|(n, ..)| *n)
                .expect("composite exists in the table");
            compose.push(comp(gn, fname, result));
        }
    }
    RawCategory {
        objects,
        morphisms,
        identities: vec![
            ("S0".into(), "id_S0".into()),
            ("S1".into(), "id_S1".into()),
            ("S2".into(), "id_S2".into()),
        ],
        compose,
    }
}

pub fn fix4() -> FiniteCategory {
    FiniteCategory::validate(&fix4_raw()).expect("fix4 is valid")
}

/// The function table of a `fix4` morphism, for use as a set-level oracle.
pub fn fix4_function_table(cat: &FiniteCategory, m: MorId) -> Vec<usize> {
    let name = cat.mor_name(m);
    FIX4_FUNCTIONS
        .iter()
        .find(|(n, ..)| *n == name)
        .map(|(_, _, _, t)| t.to_vec())
        .expect("morphism belongs to fix4")
}

/// Sizes of the three `fix4` objects.
pub fn fix4_object_size(name: &str) -> usize {
    match name {
        "S0" => 0,
        "S1" => 1,
        "S2" => 2,
        _ => panic!("not a fix4 object"),
    }
}

/// An arrow-category fixture: the category plus the names of its vertical
/// squares (isomorphism on the base side) and its certified pullback
/// squares. `tops` and `bottoms` give, per square index, the two legs as
/// morphisms of the base category.
#[derive(Clone, Debug)]
pub struct ArrowFixture {
    pub raw: RawCategory,
    pub vertical: Vec<String>,
    pub cartesian: Vec<String>,
    pub tops: Vec<MorId>,
    pub bottoms: Vec<MorId>,
}

/// Builds the full subcategory of the arrow category of `base` on the
/// monomorphism objects.
///
/// Objects are the monomorphisms of `base` in index order, named after
/// them. A morphism `(t, b) : f ⇒ f'` is a commuting square `f' ∘ t = b ∘
/// f`, named `[t,b]:f=>f'`. The vertical class collects squares whose `b`
/// is an isomorphism; the cartesian class collects squares that are
/// certified pullbacks in `base`.
pub fn mono_arrow_fixture(base: &FiniteCategory) -> ArrowFixture {
    let monos: Vec<MorId> = base.morphisms().filter(|&m| base.is_mono(m)).collect();
    let obj_names: Vec<String> = monos
        .iter()
        .map(|&m| base.mor_name(m).to_string())
        .collect();

    struct Square {
        name: String,
        src: usize,
        dst: usize,
        t: MorId,
        b: MorId,
    }

    // Enumerate with the bottom leg outermost: the first square from any
    // object into an identity-shaped object then has an identity bottom,
    // which keeps downstream canonical choices (injective replacements in
    // particular) aligned with the codomain projection on the nose.
    let mut squares: Vec<Square> = Vec::new();
    for (si, &f) in monos.iter().enumerate() {
        for (di, &f2) in monos.iter().enumerate() {
            for &b in base.hom(base.dst(f), base.dst(f2)) {
                for &t in base.hom(base.src(f), base.src(f2)) {
                    if base.comp(f2, t) == base.comp(b, f) {
                        squares.push(Square {
                            name: format!(
                                "[{},{}]:{}=>{}",
                                base.mor_name(t),
                                base.mor_name(b),
                                obj_names[si],
                                obj_names[di]
                            ),
                            src: si,
                            dst: di,
                            t,
                            b,
                        });
                    }
                }
            }
        }
    }

    let square_named = |src: usize, dst: usize, t: MorId, b: MorId| -> String {
        squares
            .iter()
            .find(|s| s.src == src && s.dst == dst && s.t == t && s.b == b)
            .map(|s| s.name.clone())
            .expect("squares are closed under composition")
    };

    let identities: Vec<(String, String)> = monos
        .iter()
        .enumerate()
        .map(|(i, &f)| {
            let t = base.identity(base.src(f));
            let b = base.identity(base.dst(f));
            (obj_names[i].clone(), square_named(i, i, t, b))
        })
        .collect();

    let mut compose = Vec::new();
    for s2 in &squares {
        for s1 in &squares {
            if s1.dst != s2.src {
                continue;
            }
            let t = base.comp(s2.t, s1.t);
            let b = base.comp(s2.b, s1.b);
            compose.push(RawComposite {
                g: s2.name.clone(),
                f: s1.name.clone(),
                result: square_named(s1.src, s2.dst, t, b),
            });
        }
    }

    let vertical: Vec<String> = squares
        .iter()
        .filter(|s| base.is_isomorphism(s.b))
        .map(|s| s.name.clone())
        .collect();
    let cartesian: Vec<String> = squares
        .iter()
        .filter(|s| {
            certify_pullback(
                base,
                &PullbackSquare {
                    apex: base.src(monos[s.src]),
                    p1: s.t,
                    p2: monos[s.src],
                    f: monos[s.dst],
                    g: s.b,
                },
            )
        })
        .map(|s| s.name.clone())
        .collect();

    let morphisms: Vec<RawMorphism> = squares
        .iter()
        .map(|s| RawMorphism {
            name: s.name.clone(),
            src: obj_names[s.src].clone(),
            dst: obj_names[s.dst].clone(),
        })
        .collect();
    let tops = squares.iter().map(|s| s.t).collect();
    let bottoms = squares.iter().map(|s| s.b).collect();

    ArrowFixture {
        raw: RawCategory {
            objects: obj_names,
            morphisms,
            identities,
            compose,
        },
        vertical,
        cartesian,
        tops,
        bottoms,
    }
}

/// The codomain functor from the mono arrow category of `fix4` down to
/// `fix4`: an object `f : X ↣ Y` goes to `Y`, a square `(t, b)` goes to
/// `b`.
pub fn fix5_cod() -> crate::functor::Functor {
    let base = fix4();
    let fixture = mono_arrow_fixture(&base);
    let cat = FiniteCategory::validate(&fixture.raw).expect("fix5 is valid");
    let obj_map: Vec<crate::category::ObjId> = cat
        .objects()
        .map(|o| {
            let m = base.mor_named(cat.object_name(o)).unwrap();
            base.dst(m)
        })
        .collect();
    let mor_map = fixture.bottoms.clone();
    crate::functor::Functor::validate(cat, base, obj_map, mor_map)
        .expect("codomain projection is a functor")
}

/// A category together with a resolved class pair.
#[derive(Clone, Debug)]
pub struct SystemFixture {
    pub cat: FiniteCategory,
    pub left: BTreeSet<MorId>,
    pub right: BTreeSet<MorId>,
}

/// A category plus class descriptions, the raw material for a system file.
#[derive(Clone, Debug)]
pub struct RawSystem {
    pub category: RawCategory,
    pub left: ClassSpec,
    pub right: ClassSpec,
}

impl RawSystem {
    /// Validates the category and resolves the classes.
    pub fn build(&self) -> SystemFixture {
        let cat = FiniteCategory::validate(&self.category).expect("fixture category is valid");
        let left = self.left.resolve(&cat).expect("left class resolves");
        let right = self.right.resolve(&cat).expect("right class resolves");
        SystemFixture { cat, left, right }
    }
}

/// The mono arrow category of `fix4` with its vertical / pullback-square
/// class pair.
pub fn fix5_system() -> RawSystem {
    let fixture = mono_arrow_fixture(&fix4());
    RawSystem {
        category: fixture.raw,
        left: ClassSpec::Named(fixture.vertical),
        right: ClassSpec::Named(fixture.cartesian),
    }
}

pub fn fix5() -> SystemFixture {
    fix5_system().build()
}

/// `(isomorphisms, all morphisms)` on `fix4`.
pub fn fix4_iso_all_system() -> RawSystem {
    RawSystem {
        category: fix4_raw(),
        left: ClassSpec::Iso,
        right: ClassSpec::All,
    }
}

/// `(all morphisms, isomorphisms)` on `fix4`.
pub fn fix4_all_iso_system() -> RawSystem {
    RawSystem {
        category: fix4_raw(),
        left: ClassSpec::All,
        right: ClassSpec::Iso,
    }
}

/// `(all morphisms, isomorphisms)` on the walking arrow.
pub fn fix2_all_iso_system() -> RawSystem {
    RawSystem {
        category: fix2_raw(),
        left: ClassSpec::All,
        right: ClassSpec::Iso,
    }
}

/// The image factorization on `fix4`: epimorphisms on the left,
/// monomorphisms on the right. A genuine orthogonal factorization system,
/// but not a cartesian one — the left class fails two-of-three (`pt ∘ i0 =
/// id_S1` is epi, `pt` is epi, `i0` is not).
pub fn fix4_epi_mono_system() -> RawSystem {
    let cat = fix4();
    let epis: Vec<String> = cat
        .morphisms()
        .filter(|&m| cat.is_epi(m))
        .map(|m| cat.mor_name(m).to_string())
        .collect();
    let monos: Vec<String> = cat
        .morphisms()
        .filter(|&m| cat.is_mono(m))
        .map(|m| cat.mor_name(m).to_string())
        .collect();
    RawSystem {
        category: fix4_raw(),
        left: ClassSpec::Named(epis),
        right: ClassSpec::Named(monos),
    }
}

/// `fix4` with the swap automorphism dropped from the left class: fails
/// validation because a class must contain every isomorphism.
pub fn mut_fix4_iso_system() -> RawSystem {
    let cat = fix4();
    let left: Vec<String> = cat
        .isomorphisms()
        .into_iter()
        .map(|m| cat.mor_name(m).to_string())
        .filter(|n| n != "sw")
        .collect();
    RawSystem {
        category: fix4_raw(),
        left: ClassSpec::Named(left),
        right: ClassSpec::All,
    }
}

/// `fix5` with one non-identity pullback square dropped from the right
/// class: factorization or saturation fails with a named witness.
pub fn mut_fix5_right_system() -> RawSystem {
    let fixture = mono_arrow_fixture(&fix4());
    let vertical: BTreeSet<&String> = fixture.vertical.iter().collect();
    let dropped = fixture
        .cartesian
        .iter()
        .find(|n| !vertical.contains(n))
        .expect("some pullback square is not vertical")
        .clone();
    let right: Vec<String> = fixture
        .cartesian
        .iter()
        .filter(|n| **n != dropped)
        .cloned()
        .collect();
    RawSystem {
        category: fixture.raw,
        left: ClassSpec::Named(fixture.vertical),
        right: ClassSpec::Named(right),
    }
}

/// Builds the thin category of a finite preorder. `leq` must be a square
/// reflexive transitive relation matrix; objects are named `p<i>` and the
/// arrow witnessing `leq[i][j]` (for `i ≠ j`) is `le_<i>_<j>`. Cycles are
/// allowed and produce isomorphic distinct objects.
pub fn preorder_category(leq: &[Vec<bool>]) -> FiniteCategory {
    let n = leq.len();
    let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let mut morphisms: Vec<RawMorphism> = (0..n)
        .map(|i| mor(&format!("id_p{i}"), &names[i], &names[i]))
        .collect();
    for (i, row) in leq.iter().enumerate() {
        for (j, &rel) in row.iter().enumerate() {
            if i != j && rel {
                morphisms.push(mor(&format!("le_{i}_{j}"), &names[i], &names[j]));
            }
        }
    }
    let unique = |s: &str, d: &str| -> String {
        morphisms
            .iter()
            .find(|m| m.src == s && m.dst == d)
            .expect("preorder relation is transitive")
            .name
            .clone()
    };
    let mut compose = Vec::new();
    for g in &morphisms {
        for f in &morphisms {
            if f.dst == g.src {
                compose.push(comp(&g.name, &f.name, &unique(&f.src, &g.dst)));
            }
        }
    }
    FiniteCategory::validate(&RawCategory {
        objects: names.clone(),
        morphisms: morphisms.clone(),
        identities: (0..n)
            .map(|i| (names[i].clone(), format!("id_p{i}")))
            .collect(),
        compose,
    })
    .expect("preorder data is reflexive and transitive")
}

/// Builds a thin category (at most one morphism per ordered object pair)
/// from its non-identity arrows; identities are named `id_<object>` and
/// composites are forced by thinness.
fn thin_category(objects: &[&str], arrows: &[(&str, &str, &str)]) -> FiniteCategory {
    let mut morphisms: Vec<RawMorphism> = objects
        .iter()
        .map(|o| mor(&format!("id_{o}"), o, o))
        .collect();
    morphisms.extend(arrows.iter().map(|&(n, s, d)| mor(n, s, d)));
    let unique = |s: &str, d: &str| -> String {
        morphisms
            .iter()
            .find(|m| m.src == s && m.dst == d)
            .expect("thin fixture is closed under composition")
            .name
            .clone()
    };
    let mut compose = Vec::new();
    for g in &morphisms {
        for f in &morphisms {
            if f.dst == g.src {
                compose.push(comp(&g.name, &f.name, &unique(&f.src, &g.dst)));
            }
        }
    }
    FiniteCategory::validate(&RawCategory {
        objects: objects.iter().map(|s| s.to_string()).collect(),
        morphisms: morphisms.clone(),
        identities: objects
            .iter()
            .map(|o| (o.to_string(), format!("id_{o}")))
            .collect(),
        compose,
    })
    .expect("thin fixtures are valid")
}

/// Builds a functor between fixture fibers from its non-identity data;
/// identity morphisms are sent to the identities of the image objects.
fn fiber_functor(
    source: &FiniteCategory,
    target: &FiniteCategory,
    objects: &[(&str, &str)],
    morphisms: &[(&str, &str)],
) -> Functor {
    let mut obj_map = vec![ObjId(usize::MAX); source.num_objects()];
    for &(a, b) in objects {
        obj_map[source.object_named(a).expect("source object exists").0] =
            target.object_named(b).expect("target object exists");
    }
    let mut mor_map = vec![MorId(usize::MAX); source.num_morphisms()];
    for o in source.objects() {
        mor_map[source.identity(o).0] = target.identity(obj_map[o.0]);
    }
    for &(a, b) in morphisms {
        mor_map[source.mor_named(a).expect("source morphism exists").0] =
            target.mor_named(b).expect("target morphism exists");
    }
    Functor::validate(source.clone(), target.clone(), obj_map, mor_map)
        .expect("fixture functor is valid")
}

/// The walking-arrow fiber `e0 → e1` used over `b0` in the indexed fixtures.
fn fiber_e() -> FiniteCategory {
    thin_category(&["e0", "e1"], &[("w", "e0", "e1")])
}

/// The one-object fiber.
fn fiber_point() -> FiniteCategory {
    thin_category(&["*"], &[])
}

/// `fix6` — an indexed category over the walking arrow `b0 → b1`: the fiber
/// over `b0` is the walking arrow `e0 → e1`, the fiber over `b1` is a point,
/// and the transition along `u` sends the point to `e1`.
pub fn fix6() -> IndexedCategory {
    let base = thin_category(&["b0", "b1"], &[("u", "b0", "b1")]);
    let e = fiber_e();
    let pt = fiber_point();
    let u_star = fiber_functor(&pt, &e, &[("*", "e1")], &[]);
    let reindex = vec![Functor::identity(&e), Functor::identity(&pt), u_star];
    validate_indexed(base, vec![e, pt], reindex).expect("fix6 is a strict indexed category")
}

/// `fix7` — an indexed category over the chain `b0 → b1 → b2` with chain
/// fibers of sizes three, two, and one; exercises strict composition of
/// transitions and nontrivial lens composites.
pub fn fix7() -> IndexedCategory {
    let base = thin_category(
        &["b0", "b1", "b2"],
        &[("u", "b0", "b1"), ("v", "b1", "b2"), ("vu", "b0", "b2")],
    );
    let e = thin_category(
        &["e0", "e1", "e2"],
        &[
            ("w01", "e0", "e1"),
            ("w12", "e1", "e2"),
            ("w02", "e0", "e2"),
        ],
    );
    let d = thin_category(&["d0", "d1"], &[("x", "d0", "d1")]);
    let pt = fiber_point();
    let u_star = fiber_functor(&d, &e, &[("d0", "e1"), ("d1", "e2")], &[("x", "w12")]);
    let v_star = fiber_functor(&pt, &d, &[("*", "d0")], &[]);
    let vu_star = Functor::compose(&u_star, &v_star);
    let reindex = vec![
        Functor::identity(&e),
        Functor::identity(&d),
        Functor::identity(&pt),
        u_star,
        v_star,
        vu_star,
    ];
    validate_indexed(base, vec![e, d, pt], reindex).expect("fix7 is a strict indexed category")
}

/// `fix8` — `fix6` enlarged with a second, parallel base arrow `v` whose
/// transition picks `e0` instead of `e1`.
pub fn fix8() -> IndexedCategory {
    let base = FiniteCategory::validate(&RawCategory {
        objects: vec!["b0".into(), "b1".into()],
        morphisms: vec![
            mor("id_b0", "b0", "b0"),
            mor("id_b1", "b1", "b1"),
            mor("u", "b0", "b1"),
            mor("v", "b0", "b1"),
        ],
        identities: vec![("b0".into(), "id_b0".into()), ("b1".into(), "id_b1".into())],
        compose: vec![
            comp("id_b0", "id_b0", "id_b0"),
            comp("id_b1", "id_b1", "id_b1"),
            comp("u", "id_b0", "u"),
            comp("id_b1", "u", "u"),
            comp("v", "id_b0", "v"),
            comp("id_b1", "v", "v"),
        ],
    })
    .expect("fix8 base is valid");
    let e = fiber_e();
    let pt = fiber_point();
    let u_star = fiber_functor(&pt, &e, &[("*", "e1")], &[]);
    let v_star = fiber_functor(&pt, &e, &[("*", "e0")], &[]);
    let reindex = vec![
        Functor::identity(&e),
        Functor::identity(&pt),
        u_star,
        v_star,
    ];
    validate_indexed(base, vec![e, pt], reindex).expect("fix8 is a strict indexed category")
}

/// The constant indexed category with point fibers over any base: its total
/// category is the base again.
pub fn const_one_indexed(base: &FiniteCategory) -> IndexedCategory {
    let pt = fiber_point();
    let fibers = vec![pt.clone(); base.num_objects()];
    let reindex = base.morphisms().map(|_| Functor::identity(&pt)).collect();
    validate_indexed(base.clone(), fibers, reindex).expect("constant indexed category is strict")
}

/// `fix6` with the transition along `id_b0` replaced by the constant functor
/// at `e1`: every transition is a valid functor, but the identity law of
/// strictness fails at `b0`.
pub fn mut_fix6_strict() -> (FiniteCategory, Vec<FiniteCategory>, Vec<Functor>) {
    let base = thin_category(&["b0", "b1"], &[("u", "b0", "b1")]);
    let e = fiber_e();
    let pt = fiber_point();
    let const_e1 = fiber_functor(&e, &e, &[("e0", "e1"), ("e1", "e1")], &[("w", "id_e1")]);
    let u_star = fiber_functor(&pt, &e, &[("*", "e1")], &[]);
    (
        base,
        vec![e.clone(), pt.clone()],
        vec![const_e1, Functor::identity(&pt), u_star],
    )
}

/// `fix7` with the transition along the composite `vu` redirected to the
/// constant functor at `e0`: every transition is a valid functor, but strict
/// composition fails for `v` after `u`.
pub fn mut_fix7_strict() -> (FiniteCategory, Vec<FiniteCategory>, Vec<Functor>) {
    let base = thin_category(
        &["b0", "b1", "b2"],
        &[("u", "b0", "b1"), ("v", "b1", "b2"), ("vu", "b0", "b2")],
    );
    let e = thin_category(
        &["e0", "e1", "e2"],
        &[
            ("w01", "e0", "e1"),
            ("w12", "e1", "e2"),
            ("w02", "e0", "e2"),
        ],
    );
    let d = thin_category(&["d0", "d1"], &[("x", "d0", "d1")]);
    let pt = fiber_point();
    let u_star = fiber_functor(&d, &e, &[("d0", "e1"), ("d1", "e2")], &[("x", "w12")]);
    let v_star = fiber_functor(&pt, &d, &[("*", "d0")], &[]);
    let bad_vu_star = fiber_functor(&pt, &e, &[("*", "e0")], &[]);
    let reindex = vec![
        Functor::identity(&e),
        Functor::identity(&d),
        Functor::identity(&pt),
        u_star,
        v_star,
        bad_vu_star,
    ];
    (base, vec![e, d, pt], reindex)
}
