//! One-point unions of partial groups, free partial groups, and the
//! decomposition of a partial group into wedge summands.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::analysis::spine_collision;
use crate::error::{Error, Result};
use crate::symcore::{EdgeId, EdgeSpec, EdgeStructure, SimplexMatrix, TruncatedSymSet};

fn require_reduced(x_set: &TruncatedSymSet) -> Result<()> {
    if x_set.is_reduced() {
        Ok(())
    } else {
        Err(Error::NotReduced {
            objects: x_set.edges().object_count(),
        })
    }
}

fn require_valid_spiny(x_set: &TruncatedSymSet) -> Result<()> {
    let report = x_set.validate();
    if !report.is_valid() {
        return Err(Error::InvalidInput(report.to_string()));
    }
    if let Some(c) = spine_collision(x_set) {
        return Err(Error::NotSpiny(format!(
            "{} and {} share a spine",
            c.first.display(x_set.edges()),
            c.second.display(x_set.edges())
        )));
    }
    Ok(())
}

/// The one-point union `A ∨ B` of two partial groups: the objects and
/// identities are identified, the non-identity edges and nondegenerate
/// simplices are the disjoint union. Edge names of `B` that clash with names
/// in `A` receive a `'` suffix. The object keeps the name from `A`.
pub fn wedge(a: &TruncatedSymSet, b: &TruncatedSymSet) -> Result<TruncatedSymSet> {
    require_reduced(a)?;
    require_reduced(b)?;
    require_valid_spiny(a)?;
    require_valid_spiny(b)?;
    let (ea, eb) = (a.edges(), b.edges());
    let object = ea.object_names()[0].clone();
    let mut taken: HashSet<String> = ea.edges().map(|e| ea.edge_name(e).to_owned()).collect();
    let mut rename: HashMap<EdgeId, String> = HashMap::new();
    for f in eb.nonidentity_edges() {
        let mut name = eb.edge_name(f).to_owned();
        while taken.contains(&name) {
            name.push('\'');
        }
        taken.insert(name.clone());
        rename.insert(f, name);
    }
    let mut specs: Vec<EdgeSpec> = ea
        .nonidentity_edges()
        .map(|f| EdgeSpec::new(ea.edge_name(f), &object, &object, ea.edge_name(ea.inv(f))))
        .collect();
    specs.extend(
        eb.nonidentity_edges()
            .map(|f| EdgeSpec::new(&rename[&f], &object, &object, &rename[&eb.inv(f)])),
    );
    let edges = EdgeStructure::new(vec![object], specs)?;
    let map_a: Vec<EdgeId> = ea
        .edges()
        .map(|f| edges.edge_by_name(ea.edge_name(f)).expect("copied"))
        .collect();
    let id = EdgeId(0);
    let map_b: Vec<EdgeId> = eb
        .edges()
        .map(|f| {
            if eb.is_identity(f) {
                id
            } else {
                edges.edge_by_name(&rename[&f]).expect("copied")
            }
        })
        .collect();
    let truncation = a.truncation().max(b.truncation());
    let mut higher: BTreeMap<usize, BTreeSet<SimplexMatrix>> = BTreeMap::new();
    for (set, map) in [(a, &map_a), (b, &map_b)] {
        for k in 2..=set.truncation() {
            let layer = higher.entry(k).or_default();
            for x in set.nondegenerate(k) {
                layer.insert(SimplexMatrix::from_fn(k, |i, j| map[x.get(i, j).index()]));
            }
        }
    }
    let w = TruncatedSymSet::from_parts(edges, truncation, higher)?;
    let report = w.validate();
    if !report.is_valid() {
        return Err(Error::Internal(format!(
            "wedge failed validation: {report}"
        )));
    }
    if spine_collision(&w).is_some() {
        return Err(Error::Internal("wedge is not spiny".into()));
    }
    Ok(w)
}

/// The free partial group on `k` generators: one object, edges `g1..gk`
/// with distinct inverses `g1^-1..gk^-1`, and no nondegenerate simplices of
/// degree 2 (truncation 1). For `k = 0` this is the point.
pub fn free_partial_group(k: usize) -> Result<TruncatedSymSet> {
    let specs = (1..=k)
        .flat_map(|i| {
            let (g, gi) = (format!("g{i}"), format!("g{i}^-1"));
            [
                EdgeSpec::new(&g, "*", "*", &gi),
                EdgeSpec::new(&gi, "*", "*", &g),
            ]
        })
        .collect();
    let edges = EdgeStructure::new(vec!["*".into()], specs)?;
    TruncatedSymSet::from_parts(edges, 1, BTreeMap::new())
}

/// Splits a partial group into wedge summands: non-identity edges are
/// joined to their inverses and to every edge they share a nondegenerate
/// simplex with; each connected class spans one summand. Summands keep the
/// truncation of `X` and are ordered by their least edge.
pub fn wedge_decompose(x_set: &TruncatedSymSet) -> Result<Vec<TruncatedSymSet>> {
    require_reduced(x_set)?;
    require_valid_spiny(x_set)?;
    let edges = x_set.edges();
    let n = edges.edge_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    fn join(parent: &mut [usize], a: usize, b: usize) {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    for f in edges.nonidentity_edges() {
        join(&mut parent, f.index(), edges.inv(f).index());
    }
    for k in 2..=x_set.truncation() {
        for x in x_set.nondegenerate(k) {
            let mut entries = x.entries().iter().filter(|e| !edges.is_identity(**e));
            if let Some(first) = entries.next() {
                for e in entries {
                    join(&mut parent, first.index(), e.index());
                }
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<EdgeId>> = BTreeMap::new();
    for f in edges.nonidentity_edges() {
        classes
            .entry(find(&mut parent, f.index()))
            .or_default()
            .push(f);
    }
    classes
        .into_values()
        .map(|class| {
            let keep: HashSet<EdgeId> = class.into_iter().collect();
            x_set.restricted(
                |_| true,
                |e| keep.contains(&e),
                |s| {
                    s.entries()
                        .iter()
                        .all(|e| edges.is_identity(*e) || keep.contains(e))
                },
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{dimension, is_group, is_spiny};
    use crate::constructors::{nerve_of_group, GroupTable};
    use crate::enumeration::are_isomorphic;

    #[test]
    fn wedge_examples() {
        let c2 = nerve_of_group(&GroupTable::cyclic(2)).unwrap();
        let f1 = free_partial_group(1).unwrap();
        let point = nerve_of_group(&GroupTable::cyclic(1)).unwrap();
        let w = wedge(&c2, &c2).unwrap();
        assert_eq!(w.edges().edge_count(), 3);
        assert_eq!(dimension(&w).unwrap(), 1);
        assert!(!is_group(&w).unwrap());
        assert!(is_spiny(&w));
        let w2 = wedge(&c2, &f1).unwrap();
        assert_eq!(w2.edges().edge_count(), 4);
        assert_eq!(dimension(&w2).unwrap(), 1);
        assert_eq!(wedge(&c2, &point).unwrap(), c2);
    }

    #[test]
    fn decomposition_round_trips() {
        let c2 = nerve_of_group(&GroupTable::cyclic(2)).unwrap();
        let c3 = nerve_of_group(&GroupTable::cyclic(3)).unwrap();
        assert_eq!(wedge_decompose(&c3).unwrap().len(), 1);
        let parts = wedge_decompose(&wedge(&c2, &c2).unwrap()).unwrap();
        assert_eq!(parts.len(), 2);
        for p in &parts {
            assert!(are_isomorphic(p, &c2).unwrap().is_some());
        }
        let f2 = free_partial_group(2).unwrap();
        let parts = wedge_decompose(&f2).unwrap();
        assert_eq!(parts.len(), 2);
        let f1 = free_partial_group(1).unwrap();
        for p in &parts {
            assert!(are_isomorphic(p, &f1).unwrap().is_some());
        }
        let rebuilt = wedge(&parts[0], &parts[1]).unwrap();
        assert!(are_isomorphic(&rebuilt, &f2).unwrap().is_some());
        let mixed = wedge(&c3, &c2).unwrap();
        let parts = wedge_decompose(&mixed).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(are_isomorphic(&parts[0], &c3).unwrap().is_some());
    }

    #[test]
    fn non_reduced_inputs_are_rejected() {
        let c2 = nerve_of_group(&GroupTable::cyclic(2)).unwrap();
        let two = crate::constructors::product(&c2, &c2).unwrap();
        let edges = EdgeStructure::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        let disc = TruncatedSymSet::from_parts(edges, 1, BTreeMap::new()).unwrap();
        assert!(matches!(
            wedge(&disc, &c2),
            Err(Error::NotReduced { objects: 2 })
        ));
        assert!(wedge_decompose(&two).is_ok());
    }
}
