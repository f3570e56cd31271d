//! JSON documents and their conversion to and from library values.
//!
//! Wherever a document is expected, a string may be given instead:
//! `fixture:NAME` or `fixture:NAME/PART` (PART one of `domain`, `codomain`,
//! `source`, `target`, `immersion`), or a path to another JSON file,
//! resolved against the directory of the referring file.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use orbigroupoid::fixtures::{self, Fixture};
use orbigroupoid::{
    translation_groupoid, Bibundle, EquivariantMap, Error as CoreError, FiniteGroup, FiniteGroupoid, GSet, GroupoidMorphism,
    Presentation, TranslationGroupoid,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error in {source_name} at line {line}, column {column}: {message}")]
    Syntax { source_name: String, line: usize, column: usize, message: String },
    #[error("unresolved reference: {0}")]
    Unresolved(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let text = e.to_string();
        match e {
            CoreError::UnknownObject(_) | CoreError::UnknownArrow(_) | CoreError::UnknownElement(_) | CoreError::UnknownPoint(_) => {
                CliError::Unresolved(text)
            }
            CoreError::DuplicateIdentifier(_) | CoreError::Presentation(_) => CliError::Schema(text),
            CoreError::Malformed(_) | CoreError::NotAGroup(_) | CoreError::NotStrong { .. } | CoreError::NotFree(_) => {
                CliError::Invalid(text)
            }
            CoreError::Mismatch(_) | CoreError::Precondition(_) | CoreError::NoGlobalSection(_) => CliError::Precondition(text),
            CoreError::Internal(_) => CliError::Internal(text),
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Group,
    GSet,
    Groupoid,
    Morphism,
    EquivariantMap,
    Bibundle,
    Task,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Group => "group",
            Kind::GSet => "gset",
            Kind::Groupoid => "groupoid",
            Kind::Morphism => "morphism",
            Kind::EquivariantMap => "equivariant-map",
            Kind::Bibundle => "bibundle",
            Kind::Task => "task",
        }
    }

    pub fn parse(name: &str) -> Result<Kind> {
        Ok(match name {
            "group" => Kind::Group,
            "gset" => Kind::GSet,
            "groupoid" => Kind::Groupoid,
            "morphism" => Kind::Morphism,
            "equivariant-map" => Kind::EquivariantMap,
            "bibundle" => Kind::Bibundle,
            "task" => Kind::Task,
            other => return Err(CliError::Schema(format!("unknown document kind {other:?}"))),
        })
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationDoc {
    generators: Vec<String>,
    relations: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    table: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    presentation: Option<PresentationDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cyclic: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    symmetric: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GSetDoc {
    group: Value,
    points: Vec<String>,
    /// Per group element, the images of `points` in order.
    action: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowDoc {
    id: String,
    source: String,
    target: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupoidDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    objects: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    arrows: Option<Vec<ArrowDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    units: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inverses: Option<BTreeMap<String, String>>,
    /// `[second, first, result]` for every composable pair.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    composition: Option<Vec<[String; 3]>>,
    /// `B(G)` for the given group.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    group: Option<Value>,
    /// The translation groupoid of the given G-set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    translation: Option<Value>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphismDoc {
    domain: Value,
    codomain: Value,
    objects: BTreeMap<String, String>,
    arrows: BTreeMap<String, String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapDoc {
    source: Value,
    target: Value,
    map: BTreeMap<String, String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BibundleDoc {
    /// The groupoid acting on the right.
    domain: Value,
    /// The groupoid acting on the left.
    codomain: Value,
    points: Vec<String>,
    /// Anchor for the right action.
    rho: BTreeMap<String, String>,
    /// Anchor for the left action.
    anchor: BTreeMap<String, String>,
    /// `[arrow, point, result]`.
    left: Vec<[String; 3]>,
    /// `[point, arrow, result]`.
    right: Vec<[String; 3]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskDoc {
    pub operation: String,
    #[serde(default)]
    pub inputs: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object: Option<String>,
}

/// A groupoid, remembering the action it came from when there is one.
#[derive(Debug, Clone)]
pub struct Groupoid {
    pub groupoid: Arc<FiniteGroupoid>,
    pub translation: Option<TranslationGroupoid>,
}

impl Groupoid {
    pub fn plain(groupoid: Arc<FiniteGroupoid>) -> Self {
        Self { groupoid, translation: None }
    }

    pub fn from_translation(t: TranslationGroupoid) -> Self {
        Self { groupoid: t.groupoid.clone(), translation: Some(t) }
    }
}

#[derive(Debug, Clone)]
pub struct Morphism {
    pub morphism: GroupoidMorphism,
    pub domain: Groupoid,
    pub codomain: Groupoid,
}

/// Any parsed document.
#[derive(Debug, Clone)]
pub enum Document {
    Group(FiniteGroup),
    GSet(GSet),
    Groupoid(Groupoid),
    Morphism(Morphism),
    EquivariantMap(EquivariantMap),
    Bibundle(Bibundle),
    Task(TaskDoc),
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self {
            Document::Group(_) => Kind::Group,
            Document::GSet(_) => Kind::GSet,
            Document::Groupoid(_) => Kind::Groupoid,
            Document::Morphism(_) => Kind::Morphism,
            Document::EquivariantMap(_) => Kind::EquivariantMap,
            Document::Bibundle(_) => Kind::Bibundle,
            Document::Task(_) => Kind::Task,
        }
    }
}

/// Parses JSON text, reporting the line and column of syntax errors.
pub fn parse_json(text: &str, source_name: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| CliError::Syntax {
        source_name: source_name.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn schema<T: for<'de> Deserialize<'de>>(value: Value, kind: Kind) -> Result<T> {
    serde_json::from_value(value).map_err(|e| CliError::Schema(format!("{}: {e}", kind.name())))
}

/// Resolves references relative to a base directory.
#[derive(Debug, Clone)]
pub struct Resolver {
    base: PathBuf,
}

impl Default for Resolver {
    fn default() -> Self {
        Self { base: PathBuf::from(".") }
    }
}

impl Resolver {
    pub fn new(base: impl Into<PathBuf>) -> Self {
        Self { base: base.into() }
    }

    /// Reads a command-line argument: a `fixture:` reference or a file path.
    pub fn argument(&self, arg: &str) -> Result<(Value, Resolver)> {
        if arg.starts_with("fixture:") {
            return Ok((Value::String(arg.to_string()), self.clone()));
        }
        let path = self.base.join(arg);
        let text = fs::read_to_string(&path)
            .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
        let value = parse_json(&text, &path.display().to_string())?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok((value, Resolver::new(base)))
    }

    /// Follows string references until an inline object is reached, checking
    /// and stripping its `kind` tag.
    fn inline(&self, value: &Value, expected: Kind) -> Result<(Map<String, Value>, Resolver)> {
        match value {
            Value::String(s) if s.starts_with("fixture:") => {
                let v = fixture_part(&s["fixture:".len()..], expected)?;
                self.inline(&v, expected)
            }
            Value::String(s) => {
                let (v, next) = self.argument(s).map_err(|e| match e {
                    CliError::Io { path, .. } => CliError::Unresolved(format!("no document at {path}")),
                    other => other,
                })?;
                next.inline(&v, expected)
            }
            Value::Object(map) => {
                let mut map = map.clone();
                if let Some(kind) = map.remove("kind") {
                    let kind = kind.as_str().ok_or_else(|| CliError::Schema("kind must be a string".into()))?;
                    if Kind::parse(kind)? != expected {
                        return Err(CliError::Schema(format!("expected a {} document, found {kind}", expected.name())));
                    }
                }
                Ok((map, self.clone()))
            }
            _ => Err(CliError::Schema(format!("expected a {} document or a reference", expected.name()))),
        }
    }

    /// The kind of a top-level document.
    pub fn kind_of(&self, value: &Value) -> Result<Kind> {
        match value {
            Value::String(s) if s.starts_with("fixture:") => {
                let (_, part) = split_part(&s["fixture:".len()..]);
                Ok(match part {
                    None => Kind::Morphism,
                    Some("immersion") => Kind::EquivariantMap,
                    Some("source") | Some("target") => Kind::GSet,
                    Some(_) => Kind::Groupoid,
                })
            }
            Value::String(s) => {
                let (v, next) = self.argument(s)?;
                next.kind_of(&v)
            }
            Value::Object(map) => match map.get("kind").and_then(Value::as_str) {
                Some(k) => Kind::parse(k),
                None => Err(CliError::Schema("top-level documents need a kind".into())),
            },
            _ => Err(CliError::Schema("a document must be a JSON object".into())),
        }
    }

    pub fn document(&self, value: &Value) -> Result<Document> {
        Ok(match self.kind_of(value)? {
            Kind::Group => Document::Group(self.group(value)?),
            Kind::GSet => Document::GSet(self.gset(value)?),
            Kind::Groupoid => Document::Groupoid(self.groupoid(value)?),
            Kind::Morphism => Document::Morphism(self.morphism(value)?),
            Kind::EquivariantMap => Document::EquivariantMap(self.equivariant_map(value)?),
            Kind::Bibundle => Document::Bibundle(self.bibundle(value)?),
            Kind::Task => Document::Task(self.task(value)?),
        })
    }

    pub fn group(&self, value: &Value) -> Result<FiniteGroup> {
        let (map, _) = self.inline(value, Kind::Group)?;
        let doc: GroupDoc = schema(Value::Object(map), Kind::Group)?;
        let given = [doc.elements.is_some() || doc.table.is_some(), doc.presentation.is_some(), doc.cyclic.is_some(), doc.symmetric.is_some()];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(CliError::Schema(
                "a group needs exactly one of elements+table, presentation, cyclic, symmetric".into(),
            ));
        }
        if let Some(p) = doc.presentation {
            return Ok(Presentation::parse(&p.generators, &p.relations)?.enumerate()?);
        }
        if let Some(n) = doc.cyclic {
            return if n == 0 { Err(CliError::Schema("cyclic order must be positive".into())) } else { Ok(FiniteGroup::cyclic(n)) };
        }
        if let Some(n) = doc.symmetric {
            return if n == 0 || n > 6 {
                Err(CliError::Schema("symmetric degree must be between 1 and 6".into()))
            } else {
                Ok(FiniteGroup::symmetric(n))
            };
        }
        let (Some(elements), Some(table)) = (doc.elements, doc.table) else {
            return Err(CliError::Schema("elements and table must be given together".into()));
        };
        let index: HashMap<&str, usize> = elements.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
        let rows = table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|l| index.get(l.as_str()).copied().ok_or_else(|| CliError::Unresolved(format!("group element {l:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup::from_table(elements, rows)?)
    }

    pub fn gset(&self, value: &Value) -> Result<GSet> {
        let (map, next) = self.inline(value, Kind::GSet)?;
        let doc: GSetDoc = schema(Value::Object(map), Kind::GSet)?;
        let group = next.group(&doc.group)?;
        let action: HashMap<String, Vec<String>> = doc.action.into_iter().collect();
        Ok(GSet::from_labels(group, doc.points, &action)?)
    }

    pub fn groupoid(&self, value: &Value) -> Result<Groupoid> {
        let (map, next) = self.inline(value, Kind::Groupoid)?;
        let doc: GroupoidDoc = schema(Value::Object(map), Kind::Groupoid)?;
        let explicit = doc.objects.is_some() || doc.arrows.is_some();
        match (explicit, doc.group, doc.translation) {
            (false, Some(g), None) => Ok(Groupoid::plain(Arc::new(FiniteGroupoid::from_group(&next.group(&g)?)))),
            (false, None, Some(t)) => Ok(Groupoid::from_translation(translation_groupoid(&next.gset(&t)?))),
            (true, None, None) => {
                let objects = doc.objects.unwrap_or_default();
                let arrows = doc.arrows.unwrap_or_default().into_iter().map(|a| (a.id, a.source, a.target)).collect();
                let units: Vec<(String, String)> = doc.units.unwrap_or_default().into_iter().collect();
                let inverses: Vec<(String, String)> = doc.inverses.unwrap_or_default().into_iter().collect();
                let composition: Vec<(String, String, String)> =
                    doc.composition.unwrap_or_default().into_iter().map(|[a, b, c]| (a, b, c)).collect();
                let g = FiniteGroupoid::from_labels(objects, arrows, &units, &inverses, &composition)?;
                Ok(Groupoid::plain(Arc::new(g)))
            }
            _ => Err(CliError::Schema("a groupoid needs exactly one of explicit tables, group, translation".into())),
        }
    }

    pub fn morphism(&self, value: &Value) -> Result<Morphism> {
        let (map, next) = self.inline(value, Kind::Morphism)?;
        let doc: MorphismDoc = schema(Value::Object(map), Kind::Morphism)?;
        let domain = next.groupoid(&doc.domain)?;
        let codomain = next.groupoid(&doc.codomain)?;
        let objects: Vec<(String, String)> = doc.objects.into_iter().collect();
        let arrows: Vec<(String, String)> = doc.arrows.into_iter().collect();
        let morphism =
            GroupoidMorphism::from_labels(domain.groupoid.clone(), codomain.groupoid.clone(), &objects, &arrows)?;
        Ok(Morphism { morphism, domain, codomain })
    }

    pub fn equivariant_map(&self, value: &Value) -> Result<EquivariantMap> {
        let (map, next) = self.inline(value, Kind::EquivariantMap)?;
        let doc: MapDoc = schema(Value::Object(map), Kind::EquivariantMap)?;
        let source = next.gset(&doc.source)?;
        let target = next.gset(&doc.target)?;
        let mut images = vec![usize::MAX; source.point_count()];
        for (x, y) in &doc.map {
            images[source.point(x)?] = target.point(y)?;
        }
        if let Some(x) = images.iter().position(|&y| y == usize::MAX) {
            return Err(CliError::Schema(format!("point {} has no image", source.point_label(x))));
        }
        Ok(EquivariantMap::new(source, target, images)?)
    }

    pub fn bibundle(&self, value: &Value) -> Result<Bibundle> {
        let (map, next) = self.inline(value, Kind::Bibundle)?;
        let doc: BibundleDoc = schema(Value::Object(map), Kind::Bibundle)?;
        let domain = next.groupoid(&doc.domain)?.groupoid;
        let codomain = next.groupoid(&doc.codomain)?.groupoid;
        let index: HashMap<&str, usize> = doc.points.iter().enumerate().map(|(i, p)| (p.as_str(), i)).collect();
        let point = |l: &str| index.get(l).copied().ok_or_else(|| CliError::Unresolved(format!("bibundle point {l:?}")));
        let anchor = |m: &BTreeMap<String, String>, g: &FiniteGroupoid| -> Result<Vec<usize>> {
            let mut out = vec![usize::MAX; doc.points.len()];
            for (p, o) in m {
                out[point(p)?] = g.object(o)?;
            }
            match out.iter().position(|&o| o == usize::MAX) {
                Some(i) => Err(CliError::Schema(format!("point {} has no anchor", doc.points[i]))),
                None => Ok(out),
            }
        };
        let rho = anchor(&doc.rho, &domain)?;
        let r_anchor = anchor(&doc.anchor, &codomain)?;
        let mut left = HashMap::new();
        for [h, x, y] in &doc.left {
            left.insert((codomain.arrow(h)?, point(x)?), point(y)?);
        }
        let mut right = HashMap::new();
        for [x, g, y] in &doc.right {
            right.insert((point(x)?, domain.arrow(g)?), point(y)?);
        }
        Ok(Bibundle::new(domain, codomain, doc.points.clone(), rho, r_anchor, left, right)?)
    }

    pub fn task(&self, value: &Value) -> Result<TaskDoc> {
        let (map, _) = self.inline(value, Kind::Task)?;
        schema(Value::Object(map), Kind::Task)
    }
}

fn split_part(reference: &str) -> (&str, Option<&str>) {
    match reference.split_once('/') {
        Some((name, part)) => (name, Some(part)),
        None => (reference, None),
    }
}

fn fixture_part(reference: &str, expected: Kind) -> Result<Value> {
    let (name, part) = split_part(reference);
    let f = fixtures::fixture(name).map_err(|_| CliError::Unresolved(format!("fixture {name:?}")))?;
    let missing = || CliError::Unresolved(format!("fixture {name:?} has no part {:?}", part.unwrap_or("")));
    Ok(match (part, expected) {
        (None, Kind::Morphism) => fixture_morphism(&f),
        (None, Kind::EquivariantMap) | (Some("immersion"), _) => map_value(f.immersion.as_ref().ok_or_else(missing)?),
        (Some("domain"), _) => groupoid_value(&fixture_domain(&f)),
        (Some("codomain"), _) => groupoid_value(&fixture_codomain(&f)),
        (Some("source"), _) => gset_value(&f.source.as_ref().ok_or_else(missing)?.gset),
        (Some("target"), _) | (None, Kind::GSet) => gset_value(&f.target.as_ref().ok_or_else(missing)?.gset),
        (None, other) => {
            return Err(CliError::Schema(format!("fixture {name:?} is a morphism, not a {}", other.name())));
        }
        (Some(_), _) => return Err(missing()),
    })
}

fn fixture_domain(f: &Fixture) -> Groupoid {
    match &f.source {
        Some(t) => Groupoid::from_translation(t.clone()),
        None => Groupoid::plain(f.morphism.domain.clone()),
    }
}

fn fixture_codomain(f: &Fixture) -> Groupoid {
    match &f.target {
        Some(t) => Groupoid::from_translation(t.clone()),
        None => Groupoid::plain(f.morphism.codomain.clone()),
    }
}

fn fixture_morphism(f: &Fixture) -> Value {
    morphism_value(&Morphism { morphism: f.morphism.clone(), domain: fixture_domain(f), codomain: fixture_codomain(f) })
}

/// The document for a fixture's morphism, with its `kind` tag.
pub fn fixture_document(name: &str) -> Result<Value> {
    let f = fixtures::fixture(name).map_err(|_| CliError::Unresolved(format!("fixture {name:?}")))?;
    Ok(tagged(Kind::Morphism, fixture_morphism(&f)))
}

pub fn tagged(kind: Kind, value: Value) -> Value {
    let mut map = Map::new();
    map.insert("kind".into(), json!(kind.name()));
    if let Value::Object(body) = value {
        map.extend(body);
    }
    Value::Object(map)
}

pub fn group_value(g: &FiniteGroup) -> Value {
    let table: Vec<Vec<&str>> =
        g.elements().map(|a| g.elements().map(|b| g.label(g.mul(a, b))).collect()).collect();
    json!({ "elements": g.labels(), "table": table })
}

pub fn gset_value(m: &GSet) -> Value {
    let g = m.group();
    let action: BTreeMap<&str, Vec<&str>> = g
        .elements()
        .map(|e| (g.label(e), m.points().map(|x| m.point_label(m.act(e, x))).collect()))
        .collect();
    json!({ "group": group_value(g), "points": m.point_labels(), "action": action })
}

pub fn groupoid_value(g: &Groupoid) -> Value {
    if let Some(t) = &g.translation {
        return json!({ "translation": gset_value(&t.gset) });
    }
    let g = &*g.groupoid;
    let arrows: Vec<Value> = g
        .arrows()
        .map(|a| json!({ "id": g.arrow_label(a), "source": g.object_label(g.src(a)), "target": g.object_label(g.tgt(a)) }))
        .collect();
    let units: BTreeMap<&str, &str> = g.objects().map(|x| (g.object_label(x), g.arrow_label(g.unit(x)))).collect();
    let inverses: BTreeMap<&str, &str> = g.arrows().map(|a| (g.arrow_label(a), g.arrow_label(g.inv(a)))).collect();
    let mut composition = Vec::new();
    for first in g.arrows() {
        for &second in g.outgoing(g.tgt(first)) {
            let c = g.compose(second, first).expect("composable");
            composition.push([g.arrow_label(second), g.arrow_label(first), g.arrow_label(c)]);
        }
    }
    json!({
        "objects": g.object_labels(),
        "arrows": arrows,
        "units": units,
        "inverses": inverses,
        "composition": composition,
    })
}

pub fn morphism_value(m: &Morphism) -> Value {
    let f = &m.morphism;
    let (d, c) = (&*f.domain, &*f.codomain);
    let objects: BTreeMap<&str, &str> = d.objects().map(|y| (d.object_label(y), c.object_label(f.phi0[y]))).collect();
    let arrows: BTreeMap<&str, &str> = d.arrows().map(|a| (d.arrow_label(a), c.arrow_label(f.phi1[a]))).collect();
    json!({
        "domain": groupoid_value(&m.domain),
        "codomain": groupoid_value(&m.codomain),
        "objects": objects,
        "arrows": arrows,
    })
}

pub fn map_value(f: &EquivariantMap) -> Value {
    let map: BTreeMap<&str, &str> =
        f.source.points().map(|x| (f.source.point_label(x), f.target.point_label(f.map[x]))).collect();
    json!({ "source": gset_value(&f.source), "target": gset_value(&f.target), "map": map })
}

pub fn bibundle_value(b: &Bibundle) -> Value {
    let (d, c) = (&*b.domain, &*b.codomain);
    let rho: BTreeMap<&str, &str> = (0..b.len()).map(|x| (b.total[x].as_str(), d.object_label(b.rho[x]))).collect();
    let anchor: BTreeMap<&str, &str> = (0..b.len()).map(|x| (b.total[x].as_str(), c.object_label(b.r_anchor[x]))).collect();
    let mut left: Vec<[&str; 3]> =
        b.left.iter().map(|(&(h, x), &y)| [c.arrow_label(h), b.total[x].as_str(), b.total[y].as_str()]).collect();
    let mut right: Vec<[&str; 3]> =
        b.right.iter().map(|(&(x, g), &y)| [b.total[x].as_str(), d.arrow_label(g), b.total[y].as_str()]).collect();
    left.sort_unstable();
    right.sort_unstable();
    json!({
        "domain": groupoid_value(&Groupoid::plain(b.domain.clone())),
        "codomain": groupoid_value(&Groupoid::plain(b.codomain.clone())),
        "points": b.total,
        "rho": rho,
        "anchor": anchor,
        "left": left,
        "right": right,
    })
}

/// Serializes any document, with its `kind` tag.
pub fn serialize(doc: &Document) -> Value {
    let body = match doc {
        Document::Group(g) => group_value(g),
        Document::GSet(m) => gset_value(m),
        Document::Groupoid(g) => groupoid_value(g),
        Document::Morphism(m) => morphism_value(m),
        Document::EquivariantMap(f) => map_value(f),
        Document::Bibundle(b) => bibundle_value(b),
        Document::Task(t) => serde_json::to_value(t).expect("task serializes"),
    };
    tagged(doc.kind(), body)
}
