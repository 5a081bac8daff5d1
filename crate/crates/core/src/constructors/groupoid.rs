//! Finite groupoids given by composition tables, and their nerves.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::group::GroupTable;
use crate::error::{Error, Result};
use crate::symcore::{EdgeId, EdgeSpec, EdgeStructure, SimplexMatrix, TruncatedSymSet};

/// A morphism of a presented groupoid, by object index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Morphism {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
}

/// A finite groupoid. `compose[(f, g)]` is the composite `g ∘ f` (first
/// `f`, then `g`) for every pair with `cod f = dom g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidPresentation {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    compose: BTreeMap<(usize, usize), usize>,
    inverses: Vec<usize>,
}

impl GroupoidPresentation {
    /// Checks the category axioms exhaustively and that every morphism is
    /// invertible.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: BTreeMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let bad = |msg: String| Error::InvalidGroupoid(msg);
        let (n_obj, n_mor) = (objects.len(), morphisms.len());
        for (i, o) in objects.iter().enumerate() {
            if objects[..i].contains(o) {
                return Err(bad(format!("duplicate object `{o}`")));
            }
        }
        for (i, m) in morphisms.iter().enumerate() {
            if m.dom >= n_obj || m.cod >= n_obj {
                return Err(bad(format!(
                    "morphism `{}` has an unknown endpoint",
                    m.name
                )));
            }
            if morphisms[..i].iter().any(|p| p.name == m.name) {
                return Err(bad(format!("duplicate morphism `{}`", m.name)));
            }
        }
        if identities.len() != n_obj {
            return Err(bad("one identity per object is required".into()));
        }
        for (o, &id) in identities.iter().enumerate() {
            let m = morphisms
                .get(id)
                .ok_or_else(|| bad(format!("identity of `{}` is out of range", objects[o])))?;
            if m.dom != o || m.cod != o {
                return Err(bad(format!(
                    "identity `{}` is not an endomorphism of `{}`",
                    m.name, objects[o]
                )));
            }
        }
        let name = |f: usize| morphisms[f].name.as_str();
        for (&(f, g), &h) in &compose {
            if f >= n_mor || g >= n_mor || h >= n_mor {
                return Err(bad("composition entry out of range".into()));
            }
            if morphisms[f].cod != morphisms[g].dom {
                return Err(bad(format!(
                    "composite of `{}` then `{}` is listed but they are not composable",
                    name(f),
                    name(g)
                )));
            }
            if morphisms[h].dom != morphisms[f].dom || morphisms[h].cod != morphisms[g].cod {
                return Err(bad(format!(
                    "composite of `{}` then `{}` has the wrong endpoints",
                    name(f),
                    name(g)
                )));
            }
        }
        let get = |f: usize, g: usize| -> Result<usize> {
            compose.get(&(f, g)).copied().ok_or_else(|| {
                bad(format!(
                    "composite of `{}` then `{}` is missing",
                    name(f),
                    name(g)
                ))
            })
        };
        for f in 0..n_mor {
            let (d, c) = (morphisms[f].dom, morphisms[f].cod);
            if get(identities[d], f)? != f || get(f, identities[c])? != f {
                return Err(bad(format!("identity laws fail at `{}`", name(f))));
            }
            for g in (0..n_mor).filter(|&g| morphisms[g].dom == c) {
                get(f, g)?;
            }
        }
        for f in 0..n_mor {
            for g in (0..n_mor).filter(|&g| morphisms[g].dom == morphisms[f].cod) {
                let gf = get(f, g)?;
                for h in (0..n_mor).filter(|&h| morphisms[h].dom == morphisms[g].cod) {
                    if get(gf, h)? != get(f, get(g, h)?)? {
                        return Err(bad(format!(
                            "associativity fails for `{}`, `{}`, `{}`",
                            name(f),
                            name(g),
                            name(h)
                        )));
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(n_mor);
        for f in 0..n_mor {
            let (d, c) = (morphisms[f].dom, morphisms[f].cod);
            let inv = (0..n_mor)
                .filter(|&g| morphisms[g].dom == c && morphisms[g].cod == d)
                .find(|&g| compose[&(f, g)] == identities[d] && compose[&(g, f)] == identities[c])
                .ok_or_else(|| bad(format!("`{}` is not invertible", name(f))))?;
            inverses.push(inv);
        }
        Ok(GroupoidPresentation {
            objects,
            morphisms,
            identities,
            compose,
            inverses,
        })
    }

    /// The one-object groupoid of a group, with object `*`; the composite
    /// `g ∘ f` is the product `g · f`.
    pub fn from_group(group: &GroupTable) -> Self {
        let n = group.order();
        let morphisms = group
            .elements()
            .iter()
            .map(|name| Morphism {
                name: name.clone(),
                dom: 0,
                cod: 0,
            })
            .collect();
        let compose = (0..n)
            .flat_map(|f| (0..n).map(move |g| ((f, g), group.mul(g, f))))
            .collect();
        GroupoidPresentation::new(vec!["*".into()], morphisms, vec![group.identity()], compose)
            .expect("a group is a groupoid")
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn composition(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.compose
    }

    /// `g ∘ f`, when composable.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.compose.get(&(f, g)).copied()
    }

    pub fn inverse(&self, f: usize) -> usize {
        self.inverses[f]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.morphisms[f].dom] == f
    }

    /// Non-identity morphisms out of each object, in morphism order.
    fn outgoing(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.objects.len()];
        for (f, m) in self.morphisms.iter().enumerate() {
            if !self.is_identity(f) {
                out[m.dom].push(f);
            }
        }
        out
    }

    /// `max_x |{ non-identity morphisms out of x }|`.
    pub fn p(&self) -> usize {
        self.outgoing().iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Edge structure of a groupoid: identity morphisms become the identity
/// edges, other morphisms keep their names. Returns the morphism-to-edge map.
fn groupoid_edges(p: &GroupoidPresentation) -> Result<(EdgeStructure, Vec<EdgeId>)> {
    let specs: Vec<EdgeSpec> = (0..p.morphisms.len())
        .filter(|&f| !p.is_identity(f))
        .map(|f| {
            let m = &p.morphisms[f];
            EdgeSpec::new(
                m.name.clone(),
                p.objects[m.dom].clone(),
                p.objects[m.cod].clone(),
                p.morphisms[p.inverse(f)].name.clone(),
            )
        })
        .collect();
    let edges = EdgeStructure::new(p.objects.clone(), specs)?;
    let by_name: HashMap<&str, EdgeId> = edges
        .nonidentity_edges()
        .map(|e| (edges.edge_name(e), e))
        .collect();
    let map = (0..p.morphisms.len())
        .map(|f| {
            if p.is_identity(f) {
                edges.ident(crate::ObjectId(p.morphisms[f].dom as u32))
            } else {
                by_name[p.morphisms[f].name.as_str()]
            }
        })
        .collect();
    Ok((edges, map))
}

/// The nerve, truncated at `max(1, p)`, beyond which it has no
/// nondegenerate simplices.
///
/// A nondegenerate `m`-simplex with initial object `o` is a sequence of
/// distinct non-identity morphisms `a_1, ..., a_m` out of `o`; with
/// `a_0 = id_o` its matrix is `x_ij = a_j ∘ a_i^-1`, so that
/// `x_jk ∘ x_ij = x_ik` and the superdiagonal is the chain of
/// consecutive quotients.
pub fn nerve_of_groupoid(p: &GroupoidPresentation) -> Result<TruncatedSymSet> {
    let (edges, edge_of) = groupoid_edges(p)?;
    let truncation = p.p().max(1);
    let outgoing = p.outgoing();
    let mut higher: BTreeMap<usize, BTreeSet<SimplexMatrix>> =
        (2..=truncation).map(|k| (k, BTreeSet::new())).collect();
    for (o, out) in outgoing.iter().enumerate() {
        let mut chosen = vec![p.identities[o]];
        let mut used = vec![false; out.len()];
        extend_chain(p, &edge_of, out, &mut chosen, &mut used, &mut higher);
    }
    TruncatedSymSet::from_parts(edges, truncation, higher)
}

fn extend_chain(
    p: &GroupoidPresentation,
    edge_of: &[EdgeId],
    out: &[usize],
    chosen: &mut Vec<usize>,
    used: &mut Vec<bool>,
    higher: &mut BTreeMap<usize, BTreeSet<SimplexMatrix>>,
) {
    let degree = chosen.len() - 1;
    if degree >= 2 {
        let x = SimplexMatrix::from_fn(degree, |i, j| {
            let quotient = p
                .compose(p.inverse(chosen[i]), chosen[j])
                .expect("common domain");
            edge_of[quotient]
        });
        higher
            .get_mut(&degree)
            .expect("within truncation")
            .insert(x);
    }
    for k in 0..out.len() {
        if used[k] {
            continue;
        }
        used[k] = true;
        chosen.push(out[k]);
        extend_chain(p, edge_of, out, chosen, used, higher);
        chosen.pop();
        used[k] = false;
    }
}

/// The nerve of a group: one object `*`, one edge per element, truncated at
/// `max(1, |G| - 1)`.
pub fn nerve_of_group(group: &GroupTable) -> Result<TruncatedSymSet> {
    nerve_of_groupoid(&GroupoidPresentation::from_group(group))
}
