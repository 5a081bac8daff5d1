//! Isomorphism of partial groups and canonical keys for isomorphism classes.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::symcore::{EdgeId, SimplexMatrix, TruncatedSymSet};

/// Canonical serialized form of a partial group: the lexicographically
/// least serialization over all relabelings of its non-identity edges.
/// Equal keys mean isomorphic partial groups.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsoClassKey(pub Vec<u8>);

impl IsoClassKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Lowercase hexadecimal rendering.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn require_reduced(x_set: &TruncatedSymSet) -> Result<()> {
    if x_set.is_reduced() {
        Ok(())
    } else {
        Err(Error::NotReduced {
            objects: x_set.edges().object_count(),
        })
    }
}

/// `relabel[e]` is the new id of edge `e`; the identity is edge 0.
fn relabel_matrix(x: &SimplexMatrix, relabel: &[u32]) -> Vec<u32> {
    x.entries().iter().map(|e| relabel[e.index()]).collect()
}

fn inverse_table(x_set: &TruncatedSymSet, relabel: &[u32]) -> Vec<u32> {
    let edges = x_set.edges();
    let mut table = vec![0u32; relabel.len()];
    for e in edges.edges() {
        table[relabel[e.index()] as usize] = relabel[edges.inv(e).index()];
    }
    table
}

fn serialize(x_set: &TruncatedSymSet, relabel: &[u32], inv: &[u32]) -> Vec<u32> {
    let top = x_set.top_degree().unwrap_or(0);
    let mut out = vec![relabel.len() as u32, top as u32];
    out.extend_from_slice(inv);
    for k in 2..=top {
        let layer: BTreeSet<Vec<u32>> = x_set
            .nondegenerate(k)
            .iter()
            .map(|x| relabel_matrix(x, relabel))
            .collect();
        out.push(layer.len() as u32);
        for m in layer {
            out.extend(m);
        }
    }
    out
}

/// Relabelings fixing the identity (edge 0), as `relabel[old] = new`.
fn relabelings(m: usize) -> impl Iterator<Item = Vec<u32>> {
    (1..=m as u32).permutations(m).map(move |p| {
        let mut relabel = Vec::with_capacity(m + 1);
        relabel.push(0);
        relabel.extend(p);
        relabel
    })
}

/// The canonical key of a reduced symmetric set. The truncation bound is
/// not part of the key: only edges and nondegenerate simplices count.
pub fn iso_class_key(x_set: &TruncatedSymSet) -> Result<IsoClassKey> {
    require_reduced(x_set)?;
    let m = x_set.edges().edge_count() - 1;
    // Minimise the inverse table first; only its minimisers compete on the
    // full serialization.
    let mut best_inv: Option<Vec<u32>> = None;
    let mut finalists: Vec<Vec<u32>> = Vec::new();
    for relabel in relabelings(m) {
        let inv = inverse_table(x_set, &relabel);
        match best_inv.as_ref().map(|b| inv.cmp(b)) {
            Some(std::cmp::Ordering::Greater) => {}
            Some(std::cmp::Ordering::Equal) => finalists.push(relabel),
            _ => {
                best_inv = Some(inv);
                finalists = vec![relabel];
            }
        }
    }
    let inv = best_inv.expect("at least one relabeling");
    let best = finalists
        .iter()
        .map(|r| serialize(x_set, r, &inv))
        .min()
        .expect("at least one finalist");
    Ok(IsoClassKey(
        best.iter().flat_map(|v| v.to_be_bytes()).collect(),
    ))
}

/// Searches for an isomorphism of reduced symmetric sets, i.e. a bijection
/// of edges preserving the identity, inverses and every nondegenerate layer.
/// The witness maps each edge id of `x` to an edge id of `y`.
pub fn are_isomorphic(x: &TruncatedSymSet, y: &TruncatedSymSet) -> Result<Option<Vec<EdgeId>>> {
    require_reduced(x)?;
    require_reduced(y)?;
    let (ex, ey) = (x.edges(), y.edges());
    let mut counts_x = x.nondegenerate_counts();
    let mut counts_y = y.nondegenerate_counts();
    while counts_x.last() == Some(&0) {
        counts_x.pop();
    }
    while counts_y.last() == Some(&0) {
        counts_y.pop();
    }
    if ex.edge_count() != ey.edge_count() || counts_x != counts_y {
        return Ok(None);
    }
    let top = counts_x.len().saturating_sub(1);
    let m = ex.edge_count() - 1;
    'search: for relabel in relabelings(m) {
        let map: Vec<EdgeId> = relabel.iter().map(|&v| EdgeId(v)).collect();
        for e in ex.edges() {
            if map[ex.inv(e).index()] != ey.inv(map[e.index()]) {
                continue 'search;
            }
        }
        for k in 2..=top {
            for s in x.nondegenerate(k) {
                let image = SimplexMatrix::from_fn(k, |i, j| map[s.get(i, j).index()]);
                if !y.nondegenerate(k).contains(&image) {
                    continue 'search;
                }
            }
        }
        return Ok(Some(map));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{free_partial_group, nerve_of_group, GroupTable};

    #[test]
    fn relabelled_c3_is_isomorphic() {
        let c3 = nerve_of_group(&GroupTable::cyclic(3)).unwrap();
        let swapped = GroupTable::new(
            vec!["e".into(), "b".into(), "a".into()],
            vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
        )
        .unwrap();
        let other = nerve_of_group(&swapped).unwrap();
        let witness = are_isomorphic(&c3, &other).unwrap().unwrap();
        assert_eq!(witness[0], EdgeId(0));
        assert_eq!(iso_class_key(&c3).unwrap(), iso_class_key(&other).unwrap());
        assert_eq!(
            are_isomorphic(&c3, &c3).unwrap().unwrap(),
            (0..3).map(EdgeId).collect::<Vec<_>>()
        );
    }

    #[test]
    fn different_cardinalities() {
        let c2 = nerve_of_group(&GroupTable::cyclic(2)).unwrap();
        let f1 = free_partial_group(1).unwrap();
        assert!(are_isomorphic(&c2, &f1).unwrap().is_none());
        assert_ne!(iso_class_key(&c2).unwrap(), iso_class_key(&f1).unwrap());
    }

    #[test]
    fn c4_and_v4_differ() {
        let c4 = nerve_of_group(&GroupTable::cyclic(4)).unwrap();
        let v4 = nerve_of_group(&GroupTable::klein_four()).unwrap();
        assert!(are_isomorphic(&c4, &v4).unwrap().is_none());
        assert_ne!(iso_class_key(&c4).unwrap(), iso_class_key(&v4).unwrap());
    }
}
