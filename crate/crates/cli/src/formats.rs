//! File formats for categories, systems, functors, and indexed categories.
//!
//! All four formats are TOML. Paths referenced inside a file (category
//! files from a functor file, component files from an indexed file) are
//! resolved relative to the directory of the referencing file, so a
//! fixture bundle can be moved as a whole.
//!
//! Loading is strict: a file that parses but violates the laws of the
//! structure it declares (category axioms, functor laws, strict
//! reindexing) is a load error carrying the verbatim diagnostic of the
//! engine. The one exception is [`parse_category_file`], which only
//! parses; the `validate` command uses it so that axiom violations become
//! a reported verdict instead of an input error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use fincat_core::category::{FiniteCategory, MorId, ObjId, RawCategory, RawComposite, RawMorphism};
use fincat_core::functor::Functor;
use fincat_core::indexed::{validate_indexed, IndexedCategory};
use fincat_core::ofs::{ClassPair, ClassSpec};

/// One morphism entry of a category file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorEntry {
    pub name: String,
    pub src: String,
    pub dst: String,
}

/// One composition-table entry `result = g ∘ f` of a category file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CompEntry {
    pub g: String,
    pub f: String,
    pub result: String,
}

/// A morphism class: the literal tokens `"iso"` / `"all"`, or an explicit
/// list of morphism names.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassField {
    Token(String),
    List(Vec<String>),
}

impl ClassField {
    pub fn to_spec(&self) -> Result<ClassSpec> {
        match self {
            ClassField::Token(t) if t == "iso" => Ok(ClassSpec::Iso),
            ClassField::Token(t) if t == "all" => Ok(ClassSpec::All),
            ClassField::Token(t) => {
                bail!("unknown class token {t:?} (expected \"iso\", \"all\", or a name list)")
            }
            ClassField::List(names) => Ok(ClassSpec::Named(names.clone())),
        }
    }
}

/// The `[classes]` block of a system file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassesBlock {
    pub left: ClassField,
    pub right: ClassField,
}

/// A category file, optionally carrying a `[classes]` block (which makes
/// it a system file).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatFile {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorEntry>,
    pub identities: BTreeMap<String, String>,
    pub compose: Vec<CompEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<ClassesBlock>,
}

impl CatFile {
    pub fn to_raw(&self) -> RawCategory {
        RawCategory {
            objects: self.objects.clone(),
            morphisms: self
                .morphisms
                .iter()
                .map(|m| RawMorphism {
                    name: m.name.clone(),
                    src: m.src.clone(),
                    dst: m.dst.clone(),
                })
                .collect(),
            identities: self
                .identities
                .iter()
                .map(|(o, m)| (o.clone(), m.clone()))
                .collect(),
            compose: self
                .compose
                .iter()
                .map(|c| RawComposite {
                    g: c.g.clone(),
                    f: c.f.clone(),
                    result: c.result.clone(),
                })
                .collect(),
        }
    }
}

/// The optional `[section]` block of a functor file: a candidate right
/// adjoint right inverse, mapping target objects and morphisms back into
/// the source.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SectionBlock {
    pub objects: BTreeMap<String, String>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, String>,
}

/// A functor file. `source` and `target` are category-file paths relative
/// to this file. Identity morphisms may be omitted from `morphisms`; they
/// are sent to the identities of the image objects.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FunFile {
    pub source: String,
    pub target: String,
    pub objects: BTreeMap<String, String>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub section: Option<SectionBlock>,
}

/// An indexed-category file. `base` is a category-file path; `fibers` maps
/// every base object to a category file; `reindex` maps base morphisms to
/// functor files. Entries for identity morphisms may be omitted (they
/// default to identity functors) but may also be given explicitly.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdxFile {
    pub base: String,
    pub fibers: BTreeMap<String, String>,
    pub reindex: BTreeMap<String, String>,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn parent(path: &Path) -> PathBuf {
    path.parent()
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from("."))
}

/// Parses a category or system file without validating the axioms.
pub fn parse_category_file(path: &Path) -> Result<CatFile> {
    let text = read(path)?;
    toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Loads and validates a category. System files are accepted; their
/// `[classes]` block is ignored here.
pub fn load_category(path: &Path) -> Result<FiniteCategory> {
    let file = parse_category_file(path)?;
    FiniteCategory::validate(&file.to_raw())
        .map_err(|e| anyhow!("{}: invalid category: {e}", path.display()))
}

/// Loads a system file: a valid category plus its resolved class pair.
/// Whether the pair satisfies any factorization-system axioms is left to
/// the calling check.
pub fn load_system(path: &Path) -> Result<(FiniteCategory, ClassPair)> {
    let file = parse_category_file(path)?;
    let classes = file
        .classes
        .clone()
        .ok_or_else(|| anyhow!("{}: missing [classes] block", path.display()))?;
    let cat = FiniteCategory::validate(&file.to_raw())
        .map_err(|e| anyhow!("{}: invalid category: {e}", path.display()))?;
    let left = classes
        .left
        .to_spec()?
        .resolve(&cat)
        .map_err(|e| anyhow!("{}: left class: {e}", path.display()))?;
    let right = classes
        .right
        .to_spec()?
        .resolve(&cat)
        .map_err(|e| anyhow!("{}: right class: {e}", path.display()))?;
    Ok((cat, ClassPair { left, right }))
}

/// Builds a functor from name maps, auto-filling identity morphisms.
fn functor_from_names(
    source: &FiniteCategory,
    target: &FiniteCategory,
    objects: &BTreeMap<String, String>,
    morphisms: &BTreeMap<String, String>,
    what: &str,
) -> Result<Functor> {
    let mut obj_map: Vec<Option<ObjId>> = vec![None; source.num_objects()];
    for (a, b) in objects {
        let src = source
            .object_named(a)
            .ok_or_else(|| anyhow!("{what}: unknown source object {a:?}"))?;
        let dst = target
            .object_named(b)
            .ok_or_else(|| anyhow!("{what}: unknown target object {b:?}"))?;
        obj_map[src.0] = Some(dst);
    }
    let obj_map: Vec<ObjId> = obj_map
        .into_iter()
        .enumerate()
        .map(|(i, o)| {
            o.ok_or_else(|| {
                anyhow!(
                    "{what}: no image for object {:?}",
                    source.object_name(ObjId(i))
                )
            })
        })
        .collect::<Result<_>>()?;

    let mut mor_map: Vec<Option<MorId>> = vec![None; source.num_morphisms()];
    for o in source.objects() {
        mor_map[source.identity(o).0] = Some(target.identity(obj_map[o.0]));
    }
    for (a, b) in morphisms {
        let src = source
            .mor_named(a)
            .ok_or_else(|| anyhow!("{what}: unknown source morphism {a:?}"))?;
        let dst = target
            .mor_named(b)
            .ok_or_else(|| anyhow!("{what}: unknown target morphism {b:?}"))?;
        mor_map[src.0] = Some(dst);
    }
    let mor_map: Vec<MorId> = mor_map
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            m.ok_or_else(|| {
                anyhow!(
                    "{what}: no image for morphism {:?}",
                    source.mor_name(MorId(i))
                )
            })
        })
        .collect::<Result<_>>()?;

    Functor::validate(source.clone(), target.clone(), obj_map, mor_map)
        .map_err(|e| anyhow!("{what}: not a functor: {e}"))
}

/// A loaded functor file: the validated functor plus its optional section
/// candidate (a functor from the target back into the source).
pub struct LoadedFunctor {
    pub functor: Functor,
    pub section: Option<Functor>,
}

/// Loads and validates a functor file, including its optional section.
pub fn load_functor(path: &Path) -> Result<LoadedFunctor> {
    let text = read(path)?;
    let file: FunFile =
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let dir = parent(path);
    let source = load_category(&dir.join(&file.source))?;
    let target = load_category(&dir.join(&file.target))?;
    let what = path.display().to_string();
    let functor = functor_from_names(&source, &target, &file.objects, &file.morphisms, &what)?;
    let section = file
        .section
        .as_ref()
        .map(|s| {
            functor_from_names(
                &target,
                &source,
                &s.objects,
                &s.morphisms,
                &format!("{what} [section]"),
            )
        })
        .transpose()?;
    Ok(LoadedFunctor { functor, section })
}

/// Loads an indexed-category file and validates strictness. A reindexing
/// functor file must connect the declared fibers: its source must equal
/// the fiber over the morphism's destination and its target the fiber
/// over the source.
pub fn load_indexed(path: &Path) -> Result<IndexedCategory> {
    let text = read(path)?;
    let file: IdxFile =
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let dir = parent(path);
    let base = load_category(&dir.join(&file.base))?;

    let mut fibers: Vec<FiniteCategory> = Vec::with_capacity(base.num_objects());
    for b in base.objects() {
        let name = base.object_name(b);
        let rel = file
            .fibers
            .get(name)
            .ok_or_else(|| anyhow!("{}: no fiber declared over {name:?}", path.display()))?;
        fibers.push(load_category(&dir.join(rel))?);
    }
    for declared in file.fibers.keys() {
        if base.object_named(declared).is_none() {
            bail!(
                "{}: fiber over unknown base object {declared:?}",
                path.display()
            );
        }
    }

    let mut reindex: Vec<Functor> = Vec::with_capacity(base.num_morphisms());
    for f in base.morphisms() {
        let name = base.mor_name(f);
        let expected_source = &fibers[base.dst(f).0];
        let expected_target = &fibers[base.src(f).0];
        match file.reindex.get(name) {
            Some(rel) => {
                let loaded = load_functor(&dir.join(rel))?;
                if loaded.functor.source() != expected_source {
                    bail!(
                        "{}: reindexing along {name:?}: functor source is not the fiber over {:?}",
                        path.display(),
                        base.object_name(base.dst(f))
                    );
                }
                if loaded.functor.target() != expected_target {
                    bail!(
                        "{}: reindexing along {name:?}: functor target is not the fiber over {:?}",
                        path.display(),
                        base.object_name(base.src(f))
                    );
                }
                reindex.push(loaded.functor);
            }
            None if base.identity(base.src(f)) == f => {
                reindex.push(Functor::identity(expected_source));
            }
            None => bail!("{}: no reindexing declared along {name:?}", path.display()),
        }
    }
    for declared in file.reindex.keys() {
        if base.mor_named(declared).is_none() {
            bail!(
                "{}: reindexing along unknown base morphism {declared:?}",
                path.display()
            );
        }
    }

    validate_indexed(base, fibers, reindex)
        .map_err(|e| anyhow!("{}: invalid indexed category: {e}", path.display()))
}

/// The raw form of a validated category: names in identity order, with
/// the full composition table.
pub fn raw_of(cat: &FiniteCategory) -> RawCategory {
    let mut compose = Vec::new();
    for g in cat.morphisms() {
        for f in cat.morphisms() {
            if let Some(gf) = cat.compose(g, f) {
                compose.push(RawComposite {
                    g: cat.mor_name(g).to_string(),
                    f: cat.mor_name(f).to_string(),
                    result: cat.mor_name(gf).to_string(),
                });
            }
        }
    }
    RawCategory {
        objects: cat
            .objects()
            .map(|o| cat.object_name(o).to_string())
            .collect(),
        morphisms: cat
            .morphisms()
            .map(|m| RawMorphism {
                name: cat.mor_name(m).to_string(),
                src: cat.object_name(cat.src(m)).to_string(),
                dst: cat.object_name(cat.dst(m)).to_string(),
            })
            .collect(),
        identities: cat
            .objects()
            .map(|o| {
                (
                    cat.object_name(o).to_string(),
                    cat.mor_name(cat.identity(o)).to_string(),
                )
            })
            .collect(),
        compose,
    }
}

/// Serializes a raw category (validated or not — corrupted fixtures are
/// files too) to its file form. The output re-parses to an equal raw
/// category.
pub fn render_raw(raw: &RawCategory, classes: Option<&ClassesBlock>) -> String {
    let mut out = String::new();
    let names: Vec<String> = raw.objects.iter().map(|o| toml_string(o)).collect();
    let _ = writeln!(out, "objects = [{}]", names.join(", "));
    out.push('\n');
    for m in &raw.morphisms {
        let _ = writeln!(
            out,
            "[[morphisms]]\nname = {}\nsrc = {}\ndst = {}",
            toml_string(&m.name),
            toml_string(&m.src),
            toml_string(&m.dst)
        );
    }
    out.push('\n');
    let _ = writeln!(out, "[identities]");
    for (o, m) in &raw.identities {
        let _ = writeln!(out, "{} = {}", toml_key(o), toml_string(m));
    }
    out.push('\n');
    for c in &raw.compose {
        let _ = writeln!(
            out,
            "[[compose]]\ng = {}\nf = {}\nresult = {}",
            toml_string(&c.g),
            toml_string(&c.f),
            toml_string(&c.result)
        );
    }
    if let Some(classes) = classes {
        out.push('\n');
        let _ = writeln!(out, "[classes]");
        let _ = writeln!(out, "left = {}", render_class(&classes.left));
        let _ = writeln!(out, "right = {}", render_class(&classes.right));
    }
    out
}

/// Serializes a validated category back to its file form.
pub fn render_category(cat: &FiniteCategory, classes: Option<&ClassesBlock>) -> String {
    render_raw(&raw_of(cat), classes)
}

fn render_class(c: &ClassField) -> String {
    match c {
        ClassField::Token(t) => toml_string(t),
        ClassField::List(names) => {
            let quoted: Vec<String> = names.iter().map(|n| toml_string(n)).collect();
            format!("[{}]", quoted.join(", "))
        }
    }
}

/// A class block naming the members of a resolved pair explicitly.
pub fn classes_of(cat: &FiniteCategory, pair: &ClassPair) -> ClassesBlock {
    let names = |set: &std::collections::BTreeSet<MorId>| {
        ClassField::List(set.iter().map(|&m| cat.mor_name(m).to_string()).collect())
    };
    ClassesBlock {
        left: names(&pair.left),
        right: names(&pair.right),
    }
}

/// Serializes a functor file.
pub fn render_functor(file: &FunFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "source = {}", toml_string(&file.source));
    let _ = writeln!(out, "target = {}", toml_string(&file.target));
    out.push('\n');
    let _ = writeln!(out, "[objects]");
    for (a, b) in &file.objects {
        let _ = writeln!(out, "{} = {}", toml_key(a), toml_string(b));
    }
    if !file.morphisms.is_empty() {
        out.push('\n');
        let _ = writeln!(out, "[morphisms]");
        for (a, b) in &file.morphisms {
            let _ = writeln!(out, "{} = {}", toml_key(a), toml_string(b));
        }
    }
    if let Some(section) = &file.section {
        out.push('\n');
        let _ = writeln!(out, "[section.objects]");
        for (a, b) in &section.objects {
            let _ = writeln!(out, "{} = {}", toml_key(a), toml_string(b));
        }
        if !section.morphisms.is_empty() {
            out.push('\n');
            let _ = writeln!(out, "[section.morphisms]");
            for (a, b) in &section.morphisms {
                let _ = writeln!(out, "{} = {}", toml_key(a), toml_string(b));
            }
        }
    }
    out
}

/// Serializes an indexed-category file.
pub fn render_indexed(file: &IdxFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "base = {}", toml_string(&file.base));
    out.push('\n');
    let _ = writeln!(out, "[fibers]");
    for (b, rel) in &file.fibers {
        let _ = writeln!(out, "{} = {}", toml_key(b), toml_string(rel));
    }
    out.push('\n');
    let _ = writeln!(out, "[reindex]");
    for (f, rel) in &file.reindex {
        let _ = writeln!(out, "{} = {}", toml_key(f), toml_string(rel));
    }
    out
}

/// Extracts the explicit object/morphism maps of a functor, omitting
/// identity morphisms (the file format fills those in).
pub fn functor_maps(f: &Functor) -> (BTreeMap<String, String>, BTreeMap<String, String>) {
    let src = f.source();
    let dst = f.target();
    let objects = src
        .objects()
        .map(|o| {
            (
                src.object_name(o).to_string(),
                dst.object_name(f.on_obj(o)).to_string(),
            )
        })
        .collect();
    let morphisms = src
        .morphisms()
        .filter(|&m| src.identity(src.src(m)) != m)
        .map(|m| {
            (
                src.mor_name(m).to_string(),
                dst.mor_name(f.on_mor(m)).to_string(),
            )
        })
        .collect();
    (objects, morphisms)
}

fn toml_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04X}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn toml_key(s: &str) -> String {
    let bare = !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-');
    if bare {
        s.to_string()
    } else {
        toml_string(s)
    }
}
