//! The fixture bundle: every file the `check-all` battery consumes,
//! generated from the engine's built-in fixtures so the committed bundle
//! can be regenerated and compared byte for byte.

use std::collections::BTreeMap;

use fincat_core::category::{FiniteCategory, MorId};
use fincat_core::fibration::phi;
use fincat_core::fixtures::{
    fix1_raw, fix2_all_iso_system, fix2_raw, fix3_raw, fix4, fix4_epi_mono_system,
    fix4_iso_all_system, fix4_raw, fix5_cod, fix6, fix7, fix8, mono_arrow_fixture,
    mut_fix2_identity_raw, mut_fix4_iso_system, mut_fix5_right_system, mut_fix6_strict,
    mut_fix7_strict, par2_all_iso_system, RawSystem,
};
use fincat_core::functor::Functor;
use fincat_core::indexed::{grothendieck, IndexedCategory};
use fincat_core::ofs::{ClassPair, ClassSpec};

use crate::formats::{
    classes_of, functor_maps, raw_of, render_functor, render_indexed, render_raw, ClassField,
    ClassesBlock, FunFile, IdxFile, SectionBlock,
};

fn class_field(spec: &ClassSpec) -> ClassField {
    match spec {
        ClassSpec::Iso => ClassField::Token("iso".to_string()),
        ClassSpec::All => ClassField::Token("all".to_string()),
        ClassSpec::Named(names) => ClassField::List(names.clone()),
    }
}

fn render_system(sys: &RawSystem) -> String {
    let classes = ClassesBlock {
        left: class_field(&sys.left),
        right: class_field(&sys.right),
    };
    render_raw(&sys.category, Some(&classes))
}

fn render_cat(cat: &FiniteCategory) -> String {
    render_raw(&crate::formats::raw_of(cat), None)
}

fn fun_file(f: &Functor, source: &str, target: &str, section: Option<&Functor>) -> String {
    let (objects, morphisms) = functor_maps(f);
    let section = section.map(|s| {
        let (objects, morphisms) = functor_maps(s);
        SectionBlock { objects, morphisms }
    });
    render_functor(&FunFile {
        source: source.to_string(),
        target: target.to_string(),
        objects,
        morphisms,
        section,
    })
}

fn map(entries: &[(&str, &str)]) -> BTreeMap<String, String> {
    entries
        .iter()
        .map(|&(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn idx_file(base: &str, fibers: &[(&str, &str)], reindex: &[(&str, &str)]) -> String {
    render_indexed(&IdxFile {
        base: base.to_string(),
        fibers: map(fibers),
        reindex: map(reindex),
    })
}

fn fiber<'a>(ix: &'a IndexedCategory, name: &str) -> &'a FiniteCategory {
    ix.fiber(ix.base().object_named(name).expect("base object exists"))
}

fn transition<'a>(ix: &'a IndexedCategory, name: &str) -> &'a Functor {
    ix.reindex(ix.base().mor_named(name).expect("base morphism exists"))
}

/// The identity section of the codomain projection: each object of the
/// base goes to its identity arrow, each morphism to the square with that
/// morphism on both components.
pub fn cod_identity_section() -> Functor {
    let base = fix4();
    let fixture = mono_arrow_fixture(&base);
    let arrows = FiniteCategory::validate(&fixture.raw).expect("arrow fixture is valid");
    let obj_map: Vec<_> = base
        .objects()
        .map(|o| {
            arrows
                .object_named(base.mor_name(base.identity(o)))
                .expect("identity arrows are objects")
        })
        .collect();
    let mor_map: Vec<MorId> = base
        .morphisms()
        .map(|f| {
            arrows
                .morphisms()
                .find(|&m| {
                    arrows.src(m) == obj_map[base.src(f).0]
                        && arrows.dst(m) == obj_map[base.dst(f).0]
                        && fixture.tops[m.0] == f
                        && fixture.bottoms[m.0] == f
                })
                .expect("every base morphism gives a square between identities")
        })
        .collect();
    Functor::validate(base, arrows, obj_map, mor_map).expect("identity section is a functor")
}

/// Every file of the bundle, in a fixed order, as `(name, content)`.
pub fn bundle() -> Vec<(String, String)> {
    let mut files: Vec<(String, String)> = Vec::new();
    let mut put = |name: &str, text: String| files.push((name.to_string(), text));

    // Plain categories.
    put("fix1.cat", render_raw(&fix1_raw(), None));
    put("fix2.cat", render_raw(&fix2_raw(), None));
    put("fix3.cat", render_raw(&fix3_raw(), None));
    put("fix4.cat", render_raw(&fix4_raw(), None));
    put(
        "mut_fix2_identity.cat",
        render_raw(&mut_fix2_identity_raw(), None),
    );

    // Systems.
    let iso_all = ClassesBlock {
        left: ClassField::Token("iso".to_string()),
        right: ClassField::Token("all".to_string()),
    };
    put("fix1.sys", render_raw(&fix1_raw(), Some(&iso_all)));
    put("fix2.sys", render_system(&fix2_all_iso_system()));
    put("fix3.sys", render_raw(&fix3_raw(), Some(&iso_all)));
    put("fix4_iso_all.sys", render_system(&fix4_iso_all_system()));
    put("fix4_epi_mono.sys", render_system(&fix4_epi_mono_system()));
    put("par2.sys", render_system(&par2_all_iso_system()));
    put(
        "fix5.sys",
        render_system(&fincat_core::fixtures::fix5_system()),
    );
    put("mut_fix4_iso.sys", render_system(&mut_fix4_iso_system()));
    put(
        "mut_fix5_right.sys",
        render_system(&mut_fix5_right_system()),
    );

    // The codomain projection of the mono-arrow category, with its
    // identity section.
    let cod = fix5_cod();
    let section = cod_identity_section();
    put(
        "fix5_cod.fun",
        fun_file(&cod, "fix5.sys", "fix4.cat", Some(&section)),
    );

    // Indexed categories and their components, read off the validated
    // fixtures so the files stay in lockstep with the engine.
    let ix6 = fix6();
    let ix7 = fix7();
    let ix8 = fix8();
    put("fix6_base.cat", render_cat(ix6.base()));
    put("fix7_base.cat", render_cat(ix7.base()));
    put("fix8_base.cat", render_cat(ix8.base()));
    put("arrow_e.cat", render_cat(fiber(&ix6, "b0")));
    put("point.cat", render_cat(fiber(&ix6, "b1")));
    put("chain_e3.cat", render_cat(fiber(&ix7, "b0")));
    put("chain_d2.cat", render_cat(fiber(&ix7, "b1")));

    put(
        "pick_e1.fun",
        fun_file(transition(&ix6, "u"), "point.cat", "arrow_e.cat", None),
    );
    put(
        "pick_e0.fun",
        fun_file(transition(&ix8, "v"), "point.cat", "arrow_e.cat", None),
    );
    put(
        "fix7_u_star.fun",
        fun_file(transition(&ix7, "u"), "chain_d2.cat", "chain_e3.cat", None),
    );
    put(
        "fix7_v_star.fun",
        fun_file(transition(&ix7, "v"), "point.cat", "chain_d2.cat", None),
    );
    put(
        "fix7_vu_star.fun",
        fun_file(transition(&ix7, "vu"), "point.cat", "chain_e3.cat", None),
    );

    put(
        "fix6.idx",
        idx_file(
            "fix6_base.cat",
            &[("b0", "arrow_e.cat"), ("b1", "point.cat")],
            &[("u", "pick_e1.fun")],
        ),
    );
    put(
        "fix7.idx",
        idx_file(
            "fix7_base.cat",
            &[
                ("b0", "chain_e3.cat"),
                ("b1", "chain_d2.cat"),
                ("b2", "point.cat"),
            ],
            &[
                ("u", "fix7_u_star.fun"),
                ("v", "fix7_v_star.fun"),
                ("vu", "fix7_vu_star.fun"),
            ],
        ),
    );
    put(
        "fix8.idx",
        idx_file(
            "fix8_base.cat",
            &[("b0", "arrow_e.cat"), ("b1", "point.cat")],
            &[("u", "pick_e1.fun"), ("v", "pick_e0.fun")],
        ),
    );

    // The cartesian/vertical system the first indexed fixture induces on
    // its own total category — the span side for `double <idx> --span`.
    let groth6 = grothendieck(&ix6).expect("total category of the indexed fixture");
    let cfs6 = phi(groth6.fibration()).expect("cartesian system of the total category");
    let classes6 = classes_of(
        cfs6.cat(),
        &ClassPair {
            left: cfs6.left().clone(),
            right: cfs6.right().clone(),
        },
    );
    put(
        "fix6_phi.sys",
        render_raw(&raw_of(cfs6.cat()), Some(&classes6)),
    );

    // Strictness mutations: valid components, invalid assembly. The bad
    // transitions are read off the mutation fixtures.
    let (_, _, bad6) = mut_fix6_strict();
    put(
        "const_e1.fun",
        fun_file(&bad6[0], "arrow_e.cat", "arrow_e.cat", None),
    );
    put(
        "mut_fix6_strict.idx",
        idx_file(
            "fix6_base.cat",
            &[("b0", "arrow_e.cat"), ("b1", "point.cat")],
            &[("id_b0", "const_e1.fun"), ("u", "pick_e1.fun")],
        ),
    );
    let (_, _, bad7) = mut_fix7_strict();
    put(
        "fix7_bad_vu.fun",
        fun_file(&bad7[5], "point.cat", "chain_e3.cat", None),
    );
    put(
        "mut_fix7_strict.idx",
        idx_file(
            "fix7_base.cat",
            &[
                ("b0", "chain_e3.cat"),
                ("b1", "chain_d2.cat"),
                ("b2", "point.cat"),
            ],
            &[
                ("u", "fix7_u_star.fun"),
                ("v", "fix7_v_star.fun"),
                ("vu", "fix7_bad_vu.fun"),
            ],
        ),
    );

    files
}

/// Writes the bundle into `dir`, creating it if necessary.
pub fn write_bundle(dir: &std::path::Path) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    for (name, text) in bundle() {
        std::fs::write(dir.join(name), text)?;
    }
    Ok(())
}
