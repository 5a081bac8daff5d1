//! The 1-truncation of a symmetric set: objects, edges, domains and
//! codomains, the inverse involution and identities.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl ObjectId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Name prefix of the implicit identity edges.
pub const IDENTITY_PREFIX: &str = "id:";

pub fn identity_name(object: &str) -> String {
    format!("{IDENTITY_PREFIX}{object}")
}

/// A non-identity edge as supplied by a caller, referring to objects and
/// to its inverse by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSpec {
    pub name: String,
    pub dom: String,
    pub cod: String,
    pub inv: String,
}

impl EdgeSpec {
    pub fn new(
        name: impl Into<String>,
        dom: impl Into<String>,
        cod: impl Into<String>,
        inv: impl Into<String>,
    ) -> Self {
        EdgeSpec {
            name: name.into(),
            dom: dom.into(),
            cod: cod.into(),
            inv: inv.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Edge {
    name: String,
    dom: ObjectId,
    cod: ObjectId,
    inv: EdgeId,
}

/// Objects and edges with their structure maps.
///
/// Identity edges are created automatically, one per object, and occupy
/// the first ids (in object order); the supplied edges follow in the order
/// given.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeStructure {
    objects: Vec<String>,
    edges: Vec<Edge>,
    identity_of: Vec<Option<ObjectId>>,
}

impl EdgeStructure {
    pub fn new(objects: Vec<String>, edges: Vec<EdgeSpec>) -> Result<Self> {
        let invalid = |msg: String| Error::InvalidEdgeStructure(msg);

        let mut object_ids = HashMap::new();
        for (i, name) in objects.iter().enumerate() {
            if object_ids
                .insert(name.as_str(), ObjectId(i as u32))
                .is_some()
            {
                return Err(invalid(format!("duplicate object `{name}`")));
            }
        }

        let mut edge_ids: HashMap<String, EdgeId> = HashMap::new();
        let mut all = Vec::with_capacity(objects.len() + edges.len());
        let mut identity_of = Vec::with_capacity(objects.len() + edges.len());
        for (i, name) in objects.iter().enumerate() {
            let id = EdgeId(i as u32);
            edge_ids.insert(identity_name(name), id);
            all.push(Edge {
                name: identity_name(name),
                dom: ObjectId(i as u32),
                cod: ObjectId(i as u32),
                inv: id,
            });
            identity_of.push(Some(ObjectId(i as u32)));
        }
        for spec in &edges {
            if edge_ids.contains_key(&spec.name) {
                return Err(invalid(format!("duplicate edge `{}`", spec.name)));
            }
            if spec.name.starts_with(IDENTITY_PREFIX) {
                return Err(invalid(format!(
                    "edge `{}` uses the reserved identity prefix `{IDENTITY_PREFIX}`",
                    spec.name
                )));
            }
            let lookup = |obj: &str| {
                object_ids.get(obj).copied().ok_or_else(|| {
                    invalid(format!(
                        "edge `{}` refers to unknown object `{obj}`",
                        spec.name
                    ))
                })
            };
            let dom = lookup(&spec.dom)?;
            let cod = lookup(&spec.cod)?;
            let id = EdgeId(all.len() as u32);
            edge_ids.insert(spec.name.clone(), id);
            all.push(Edge {
                name: spec.name.clone(),
                dom,
                cod,
                inv: id,
            });
            identity_of.push(None);
        }
        let offset = objects.len();
        for (k, spec) in edges.iter().enumerate() {
            let inv = *edge_ids.get(&spec.inv).ok_or_else(|| {
                invalid(format!(
                    "the inverse `{}` of edge `{}` is not listed",
                    spec.inv, spec.name
                ))
            })?;
            if inv.index() < offset {
                return Err(invalid(format!(
                    "edge `{}` declares an identity as its inverse",
                    spec.name
                )));
            }
            all[offset + k].inv = inv;
        }

        let structure = EdgeStructure {
            objects,
            edges: all,
            identity_of,
        };
        if let Some(problem) = structure.axiom_violations().into_iter().next() {
            return Err(invalid(problem));
        }
        Ok(structure)
    }

    /// Human-readable descriptions of every violated edge-structure axiom.
    pub fn axiom_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            let inv = &self.edges[e.inv.index()];
            if self.edges[inv.inv.index()].name != e.name {
                out.push(format!(
                    "inverse is not an involution at `{}`: inverse of `{}` is `{}`",
                    e.name,
                    inv.name,
                    self.edges[inv.inv.index()].name
                ));
            }
            if inv.dom != e.cod || inv.cod != e.dom {
                out.push(format!(
                    "inverse `{}` of `{}` does not reverse domain and codomain",
                    inv.name, e.name
                ));
            }
            if let Some(obj) = self.identity_of[i] {
                if e.dom != obj || e.cod != obj || e.inv.index() != i {
                    out.push(format!("identity `{}` is malformed", e.name));
                }
            }
        }
        out
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = ObjectId> + '_ {
        (0..self.objects.len() as u32).map(ObjectId)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = EdgeId> + '_ {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    /// Edges that are not identities, in id order.
    pub fn nonidentity_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges().filter(|&e| !self.is_identity(e))
    }

    pub fn object_name(&self, o: ObjectId) -> &str {
        &self.objects[o.index()]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.index()].name
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjectId> {
        self.objects
            .iter()
            .position(|o| o == name)
            .map(|i| ObjectId(i as u32))
    }

    pub fn edge_by_name(&self, name: &str) -> Option<EdgeId> {
        self.edges
            .iter()
            .position(|e| e.name == name)
            .map(|i| EdgeId(i as u32))
    }

    pub fn dom(&self, e: EdgeId) -> ObjectId {
        self.edges[e.index()].dom
    }

    pub fn cod(&self, e: EdgeId) -> ObjectId {
        self.edges[e.index()].cod
    }

    pub fn inv(&self, e: EdgeId) -> EdgeId {
        self.edges[e.index()].inv
    }

    pub fn ident(&self, o: ObjectId) -> EdgeId {
        EdgeId(o.0)
    }

    pub fn is_identity(&self, e: EdgeId) -> bool {
        self.identity_of[e.index()].is_some()
    }

    /// The supplied (non-identity) edges, in a form that rebuilds `self`.
    pub fn edge_specs(&self) -> Vec<EdgeSpec> {
        self.nonidentity_edges()
            .map(|e| {
                EdgeSpec::new(
                    self.edge_name(e),
                    self.object_name(self.dom(e)),
                    self.object_name(self.cod(e)),
                    self.edge_name(self.inv(e)),
                )
            })
            .collect()
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    /// Restricts to the objects and edges selected by `keep_edge`
    /// (identities of surviving objects are always kept). Returns the new
    /// structure with the old-to-new edge map. Objects without a kept edge
    /// are dropped.
    pub fn restrict(
        &self,
        keep_object: impl Fn(ObjectId) -> bool,
        keep_edge: impl Fn(EdgeId) -> bool,
    ) -> Result<(EdgeStructure, Vec<Option<EdgeId>>)> {
        let objects: Vec<String> = self
            .objects()
            .filter(|&o| keep_object(o))
            .map(|o| self.object_name(o).to_owned())
            .collect();
        let specs: Vec<EdgeSpec> = self
            .edge_specs()
            .into_iter()
            .zip(self.nonidentity_edges())
            .filter(|(_, e)| keep_edge(*e))
            .map(|(s, _)| s)
            .collect();
        let restricted = EdgeStructure::new(objects, specs)?;
        let remap = self
            .edges()
            .map(|e| restricted.edge_by_name(self.edge_name(e)))
            .collect();
        Ok((restricted, remap))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3_edges() -> EdgeStructure {
        EdgeStructure::new(
            vec!["*".into()],
            vec![
                EdgeSpec::new("g", "*", "*", "g2"),
                EdgeSpec::new("g2", "*", "*", "g"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn identities_are_implicit_and_first() {
        let e = c3_edges();
        assert_eq!(e.edge_count(), 3);
        assert_eq!(e.edge_name(EdgeId(0)), "id:*");
        assert!(e.is_identity(EdgeId(0)));
        assert_eq!(e.inv(EdgeId(1)), EdgeId(2));
        assert_eq!(e.nonidentity_edges().count(), 2);
        assert!(e.axiom_violations().is_empty());
    }

    #[test]
    fn missing_inverse_is_named() {
        let err = EdgeStructure::new(vec!["*".into()], vec![EdgeSpec::new("g", "*", "*", "h")])
            .unwrap_err();
        assert!(err.to_string().contains("`h`"), "{err}");
        assert!(err.to_string().contains("`g`"), "{err}");
    }

    #[test]
    fn inverse_must_reverse_direction() {
        let err = EdgeStructure::new(
            vec!["a".into(), "b".into()],
            vec![
                EdgeSpec::new("f", "a", "b", "g"),
                EdgeSpec::new("g", "a", "b", "f"),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidEdgeStructure(_)));
    }

    #[test]
    fn non_involutive_inverse_is_rejected() {
        let err = EdgeStructure::new(
            vec!["*".into()],
            vec![
                EdgeSpec::new("a", "*", "*", "b"),
                EdgeSpec::new("b", "*", "*", "c"),
                EdgeSpec::new("c", "*", "*", "a"),
            ],
        )
        .unwrap_err();
        assert!(err.to_string().contains("involution"), "{err}");
    }

    #[test]
    fn restriction_keeps_identities() {
        let e = c3_edges();
        let (r, remap) = e.restrict(|_| true, |_| false).unwrap();
        assert_eq!(r.edge_count(), 1);
        assert_eq!(remap, vec![Some(EdgeId(0)), None, None]);
    }
}
