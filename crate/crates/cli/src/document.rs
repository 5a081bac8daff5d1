//! The JSON file format: parsing, canonical serialization, and conversion
//! to and from library objects.
//!
//! A document is a JSON object with the fields `format_version`, `kind`,
//! the kind-specific payload fields, and `provenance`:
//!
//! * `symset`: `truncation`, `objects`, `edges` (each `{"id","dom","cod","inv"}`,
//!   identities implicit and named `id:<object>`), and `simplices`, mapping
//!   a decimal degree to the list of nondegenerate matrices of that degree,
//!   each written as rows of edge ids;
//! * `group`: `elements` and the multiplication `table` of element indices;
//! * `groupoid`: `objects`, `morphisms` (each `{"id","dom","cod"}`),
//!   `identities` (one morphism id per object, in object order) and
//!   `compose`, a list of triples `[f, g, h]` meaning `h = g ∘ f`;
//! * `transporter`: a `group` (`elements`, `table`) and `delta`, a list of
//!   subgroups given by element indices.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use pgsym_core::constructors::{GroupTable, GroupoidPresentation, Morphism, TransporterSpec};
use pgsym_core::symcore::{closure_generate, EdgeSpec, EdgeStructure, SimplexMatrix};
use pgsym_core::TruncatedSymSet;

use crate::error::{CliError, CliResult};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub format_version: String,
    #[serde(flatten)]
    pub payload: Payload,
    #[serde(default)]
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Payload {
    Symset(SymsetData),
    Group(GroupData),
    Groupoid(GroupoidData),
    Transporter(TransporterData),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Symset(_) => "symset",
            Payload::Group(_) => "group",
            Payload::Groupoid(_) => "groupoid",
            Payload::Transporter(_) => "transporter",
        }
    }
}

/// A matrix as rows of edge ids.
pub type MatrixData = Vec<Vec<String>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymsetData {
    pub truncation: usize,
    pub objects: Vec<String>,
    pub edges: Vec<EdgeData>,
    #[serde(default)]
    pub simplices: Layers,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawEdge")]
pub struct EdgeData {
    pub id: String,
    pub dom: String,
    pub cod: String,
    pub inv: String,
}

/// An edge as written, so that a missing field can be reported together
/// with the id of the edge lacking it.
#[derive(Deserialize)]
struct RawEdge {
    id: Option<String>,
    dom: Option<String>,
    cod: Option<String>,
    inv: Option<String>,
}

impl TryFrom<RawEdge> for EdgeData {
    type Error = String;

    fn try_from(raw: RawEdge) -> Result<Self, String> {
        let id = raw.id.ok_or("an edge is missing field `id`")?;
        let field = |value: Option<String>, name: &str| {
            value.ok_or_else(|| format!("edge `{id}` is missing field `{name}`"))
        };
        Ok(EdgeData {
            dom: field(raw.dom, "dom")?,
            cod: field(raw.cod, "cod")?,
            inv: field(raw.inv, "inv")?,
            id: id.clone(),
        })
    }
}

/// Matrices keyed by degree; serialized with decimal string keys in
/// numeric order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Layers(pub BTreeMap<usize, Vec<MatrixData>>);

impl Serialize for Layers {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (degree, matrices) in &self.0 {
            map.serialize_entry(&degree.to_string(), matrices)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Layers {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct LayersVisitor;
        impl<'de> Visitor<'de> for LayersVisitor {
            type Value = Layers;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a map from decimal degrees to lists of matrices")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Layers, A::Error> {
                let mut out = BTreeMap::new();
                while let Some((key, value)) = access.next_entry::<String, Vec<MatrixData>>()? {
                    let degree: usize = key.parse().map_err(|_| {
                        serde::de::Error::custom(format!(
                            "simplices: key `{key}` is not a decimal degree"
                        ))
                    })?;
                    if out.insert(degree, value).is_some() {
                        return Err(serde::de::Error::custom(format!(
                            "simplices: degree {degree} listed twice"
                        )));
                    }
                }
                Ok(Layers(out))
            }
        }
        deserializer.deserialize_map(LayersVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupData {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MorphismData {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidData {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismData>,
    pub identities: Vec<String>,
    pub compose: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransporterData {
    pub group: GroupData,
    pub delta: Vec<Vec<usize>>,
}

/// Parses a document. Schema errors carry serde's line and column.
pub fn parse_document(text: &str) -> CliResult<Document> {
    let doc: Document =
        serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("schema: {e}")))?;
    if doc.format_version != FORMAT_VERSION {
        return Err(CliError::Invalid(format!(
            "format_version: unsupported version `{}` (expected `{FORMAT_VERSION}`)",
            doc.format_version
        )));
    }
    Ok(doc)
}

/// The canonical form: every set-valued array sorted.
pub fn canonicalize(doc: &Document) -> Document {
    let payload = match &doc.payload {
        Payload::Symset(s) => {
            let mut objects = s.objects.clone();
            objects.sort();
            let mut edges = s.edges.clone();
            edges.sort();
            let simplices = s
                .simplices
                .0
                .iter()
                .map(|(&k, mats)| {
                    let set: BTreeSet<MatrixData> = mats.iter().cloned().collect();
                    (k, set.into_iter().collect())
                })
                .collect();
            Payload::Symset(SymsetData {
                truncation: s.truncation,
                objects,
                edges,
                simplices: Layers(simplices),
            })
        }
        Payload::Group(g) => Payload::Group(g.clone()),
        Payload::Groupoid(g) => {
            let mut pairs: Vec<(String, String)> = g
                .objects
                .iter()
                .cloned()
                .zip(g.identities.iter().cloned())
                .collect();
            pairs.sort();
            let mut morphisms = g.morphisms.clone();
            morphisms.sort();
            let mut compose = g.compose.clone();
            compose.sort();
            compose.dedup();
            Payload::Groupoid(GroupoidData {
                objects: pairs.iter().map(|p| p.0.clone()).collect(),
                identities: pairs.into_iter().map(|p| p.1).collect(),
                morphisms,
                compose,
            })
        }
        Payload::Transporter(t) => {
            let mut delta: Vec<Vec<usize>> = t
                .delta
                .iter()
                .map(|p| {
                    let mut p = p.clone();
                    p.sort_unstable();
                    p.dedup();
                    p
                })
                .collect();
            delta.sort();
            delta.dedup();
            Payload::Transporter(TransporterData {
                group: t.group.clone(),
                delta,
            })
        }
    };
    Document {
        format_version: doc.format_version.clone(),
        payload,
        provenance: doc.provenance.clone(),
    }
}

/// Canonical text: two-space indentation, with arrays of scalars and
/// matrices written on one line, and a trailing newline.
pub fn serialize_document(doc: &Document) -> String {
    let value = serde_json::to_value(canonicalize(doc)).expect("documents serialize");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

/// Arrays nested at most two deep with scalar leaves stay on one line.
fn is_compact(v: &Value, depth: usize) -> bool {
    match v {
        Value::Array(items) => depth < 2 && items.iter().all(|i| is_compact(i, depth + 1)),
        Value::Object(_) => false,
        _ => true,
    }
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(item, indent + 1, out);
                if i + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if !items.is_empty() && !is_compact(v, 0) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        _ => out.push_str(&v.to_string()),
    }
}

/// A loaded symmetric set with notes about normalizations applied.
pub struct LoadedSymset {
    pub set: TruncatedSymSet,
    pub notes: Vec<String>,
}

/// Builds the symmetric set described by `data`: objects and edges are
/// taken in sorted order, listed simplices are closed up under all maps,
/// and the result is validated.
pub fn load_symset(data: &SymsetData) -> CliResult<LoadedSymset> {
    let mut notes = Vec::new();
    if data.truncation == 0 {
        return Err(CliError::Invalid("truncation: must be at least 1".into()));
    }
    let mut objects = data.objects.clone();
    objects.sort();
    let mut edge_data = data.edges.clone();
    edge_data.sort();
    let specs = edge_data
        .iter()
        .map(|e| EdgeSpec::new(&e.id, &e.dom, &e.cod, &e.inv))
        .collect();
    let edges =
        EdgeStructure::new(objects, specs).map_err(|e| CliError::from(e).context("edges"))?;
    let mut generators = Vec::new();
    let mut listed = BTreeSet::new();
    for (&degree, matrices) in &data.simplices.0 {
        if degree < 2 {
            return Err(CliError::Invalid(format!(
                "simplices.{degree}: degrees 0 and 1 are given by objects and edges"
            )));
        }
        if degree > data.truncation {
            return Err(CliError::Invalid(format!(
                "simplices.{degree}: degree exceeds the truncation {}",
                data.truncation
            )));
        }
        for (i, rows) in matrices.iter().enumerate() {
            let here = format!("simplices.{degree}[{i}]");
            let x = matrix_from_names(&edges, degree, rows).map_err(|e| e.context(&here))?;
            if let Some(reason) = x.well_formedness_violation(&edges) {
                return Err(CliError::Invalid(format!("{here}: {reason}")));
            }
            if x.has_repeated_row() {
                let (base, sigma) = x.split_repeated_rows();
                notes.push(format!(
                    "{here} is degenerate ({} acted on by {sigma}); dropped and regenerated",
                    base.display(&edges)
                ));
            } else {
                listed.insert(x.clone());
            }
            generators.push(x);
        }
    }
    let set = closure_generate(&edges, data.truncation, generators)?;
    let stored =
        set.total_nondegenerate() - set.nondegenerate(0).len() - set.nondegenerate(1).len();
    if stored > listed.len() {
        notes.push(format!(
            "closure added {} nondegenerate simplices not listed in the file",
            stored - listed.len()
        ));
    }
    let report = set.validate();
    if !report.is_valid() {
        let list: Vec<String> = report
            .violations()
            .iter()
            .map(ToString::to_string)
            .collect();
        return Err(CliError::Invalid(format!(
            "validation: {}",
            list.join("; ")
        )));
    }
    Ok(LoadedSymset { set, notes })
}

fn matrix_from_names(
    edges: &EdgeStructure,
    degree: usize,
    rows: &MatrixData,
) -> CliResult<SimplexMatrix> {
    let side = degree + 1;
    if rows.len() != side || rows.iter().any(|r| r.len() != side) {
        return Err(CliError::Invalid(format!(
            "expected a {side}x{side} matrix of edge ids"
        )));
    }
    let ids = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, name)| {
                    edges.edge_by_name(name).ok_or_else(|| {
                        CliError::Invalid(format!("[{i}][{j}]: unknown edge `{name}`"))
                    })
                })
                .collect::<CliResult<Vec<_>>>()
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(SimplexMatrix::from_rows(ids)?)
}

pub fn matrix_names(edges: &EdgeStructure, x: &SimplexMatrix) -> MatrixData {
    x.rows()
        .map(|row| {
            row.iter()
                .map(|&e| edges.edge_name(e).to_string())
                .collect()
        })
        .collect()
}

/// The document describing `set`, storing only nondegenerate simplices.
pub fn symset_document(set: &TruncatedSymSet, provenance: impl Into<String>) -> Document {
    let edges = set.edges();
    let edge_data = edges
        .edge_specs()
        .into_iter()
        .map(|s| EdgeData {
            id: s.name,
            dom: s.dom,
            cod: s.cod,
            inv: s.inv,
        })
        .collect();
    let simplices = (2..=set.truncation())
        .filter(|&k| !set.nondegenerate(k).is_empty())
        .map(|k| {
            let mats = set
                .nondegenerate(k)
                .iter()
                .map(|x| matrix_names(edges, x))
                .collect();
            (k, mats)
        })
        .collect();
    canonicalize(&Document {
        format_version: FORMAT_VERSION.into(),
        payload: Payload::Symset(SymsetData {
            truncation: set.truncation(),
            objects: edges.object_names().to_vec(),
            edges: edge_data,
            simplices: Layers(simplices),
        }),
        provenance: provenance.into(),
    })
}

pub fn load_group(data: &GroupData) -> CliResult<GroupTable> {
    Ok(GroupTable::new(data.elements.clone(), data.table.clone())?)
}

#[cfg(test)]
pub fn group_document(g: &GroupTable, provenance: impl Into<String>) -> Document {
    Document {
        format_version: FORMAT_VERSION.into(),
        payload: Payload::Group(GroupData {
            elements: g.elements().to_vec(),
            table: g.table().to_vec(),
        }),
        provenance: provenance.into(),
    }
}

pub fn load_groupoid(data: &GroupoidData) -> CliResult<GroupoidPresentation> {
    let object_index: HashMap<&str, usize> = data
        .objects
        .iter()
        .enumerate()
        .map(|(i, o)| (o.as_str(), i))
        .collect();
    let object = |name: &str, here: String| {
        object_index
            .get(name)
            .copied()
            .ok_or_else(|| CliError::Invalid(format!("{here}: unknown object `{name}`")))
    };
    let mut morphisms = Vec::new();
    let mut morphism_index: HashMap<&str, usize> = HashMap::new();
    for (i, m) in data.morphisms.iter().enumerate() {
        morphisms.push(Morphism {
            name: m.id.clone(),
            dom: object(&m.dom, format!("morphisms[{i}].dom"))?,
            cod: object(&m.cod, format!("morphisms[{i}].cod"))?,
        });
        morphism_index.insert(m.id.as_str(), i);
    }
    let morphism = |name: &str, here: String| {
        morphism_index
            .get(name)
            .copied()
            .ok_or_else(|| CliError::Invalid(format!("{here}: unknown morphism `{name}`")))
    };
    let identities = data
        .identities
        .iter()
        .enumerate()
        .map(|(i, name)| morphism(name, format!("identities[{i}]")))
        .collect::<CliResult<Vec<_>>>()?;
    let mut compose = BTreeMap::new();
    for (i, [f, g, h]) in data.compose.iter().enumerate() {
        let here = || format!("compose[{i}]");
        let key = (morphism(f, here())?, morphism(g, here())?);
        let value = morphism(h, here())?;
        if compose.insert(key, value).is_some_and(|old| old != value) {
            return Err(CliError::Invalid(format!(
                "{}: conflicting composite of `{f}` and `{g}`",
                here()
            )));
        }
    }
    Ok(GroupoidPresentation::new(
        data.objects.clone(),
        morphisms,
        identities,
        compose,
    )?)
}

pub fn load_transporter(data: &TransporterData) -> CliResult<TransporterSpec> {
    let group = load_group(&data.group).map_err(|e| e.context("group"))?;
    for (i, p) in data.delta.iter().enumerate() {
        if let Some(&bad) = p.iter().find(|&&a| a >= group.order()) {
            return Err(CliError::Invalid(format!(
                "delta[{i}]: element index {bad} is out of range"
            )));
        }
    }
    Ok(TransporterSpec {
        group,
        delta: data.delta.clone(),
    })
}
