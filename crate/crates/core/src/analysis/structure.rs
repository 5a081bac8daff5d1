//! Skeleta, dimension, the p-invariant and connected components.

use crate::error::{Error, Result};
use crate::symcore::{ObjectId, TruncatedSymSet};

/// The sub-symmetric set generated by the simplices of degree `<= n`,
/// kept at the same truncation. Nondegenerate simplices of degree above `n`
/// are dropped; for `n = 0` the non-identity edges are dropped too.
pub fn skeleton(x_set: &TruncatedSymSet, n: usize) -> Result<TruncatedSymSet> {
    let truncation = x_set.truncation();
    if n > truncation {
        return Err(Error::TruncationExceeded {
            degree: n,
            truncation,
        });
    }
    let edges = x_set.edges();
    if n == 0 {
        return x_set.restricted(|_| true, |e| edges.is_identity(e), |_| false);
    }
    x_set.restricted(|_| true, |_| true, |s| s.degree() <= n)
}

/// The top degree of a nondegenerate simplex: 0 when every edge is an
/// identity.
pub fn dimension(x_set: &TruncatedSymSet) -> Result<usize> {
    if x_set.is_empty() {
        return Err(Error::Empty);
    }
    Ok(x_set.top_degree().unwrap_or(0))
}

/// `p(X)` together with the table `n_x`, the number of non-identity edges
/// with domain `x`, indexed by object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PInvariant {
    pub p: usize,
    pub table: Vec<usize>,
}

pub fn p_invariant(x_set: &TruncatedSymSet) -> Result<PInvariant> {
    if x_set.is_empty() {
        return Err(Error::Empty);
    }
    let edges = x_set.edges();
    let mut table = vec![0usize; edges.object_count()];
    for f in edges.nonidentity_edges() {
        table[edges.dom(f).index()] += 1;
    }
    let p = table.iter().copied().max().unwrap_or(0);
    Ok(PInvariant { p, table })
}

/// Partition of the objects under the equivalence generated by the edges,
/// each class sorted, classes ordered by their least object.
pub fn components(x_set: &TruncatedSymSet) -> Vec<Vec<ObjectId>> {
    let edges = x_set.edges();
    let mut parent: Vec<usize> = (0..edges.object_count()).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for f in edges.nonidentity_edges() {
        let a = find(&mut parent, edges.dom(f).index());
        let b = find(&mut parent, edges.cod(f).index());
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut classes: Vec<Vec<ObjectId>> = Vec::new();
    let mut slot = vec![usize::MAX; parent.len()];
    for o in edges.objects() {
        let root = find(&mut parent, o.index());
        if slot[root] == usize::MAX {
            slot[root] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot[root]].push(o);
    }
    classes
}

/// Connectedness with the component partition. The empty set has no
/// components and is reported as not connected.
pub fn is_connected(x_set: &TruncatedSymSet) -> (bool, Vec<Vec<ObjectId>>) {
    let parts = components(x_set);
    (parts.len() == 1, parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{free_partial_group, nerve_of_group, GroupTable};
    use crate::symcore::closure_generate;

    #[test]
    fn group_nerve_dimensions() {
        for (n, d) in [(1, 0), (2, 1), (3, 2), (4, 3)] {
            let x = nerve_of_group(&GroupTable::cyclic(n)).unwrap();
            assert_eq!(dimension(&x).unwrap(), d, "C{n}");
            assert_eq!(p_invariant(&x).unwrap().p, n - 1);
        }
        let f1 = free_partial_group(1).unwrap();
        assert_eq!(dimension(&f1).unwrap(), 1);
        assert_eq!(p_invariant(&f1).unwrap().p, 2);
    }

    #[test]
    fn skeleton_of_c3_removes_two_simplices() {
        let c3 = nerve_of_group(&GroupTable::cyclic(3)).unwrap();
        let sk1 = skeleton(&c3, 1).unwrap();
        assert!(sk1.nondegenerate(2).is_empty());
        assert_eq!(sk1.truncation(), 2);
        let expected = closure_generate(c3.edges(), 2, std::iter::empty()).unwrap();
        assert_eq!(sk1, expected);
        assert!(sk1.validate().is_valid());
        assert_eq!(skeleton(&c3, 2).unwrap(), c3);
        assert_eq!(skeleton(&sk1, 1).unwrap(), sk1);
    }

    #[test]
    fn zero_skeleton_keeps_only_identities() {
        let c2 = nerve_of_group(&GroupTable::cyclic(2)).unwrap();
        let sk0 = skeleton(&c2, 0).unwrap();
        assert_eq!(sk0.edges().edge_count(), 1);
        assert_eq!(dimension(&sk0).unwrap(), 0);
        assert!(matches!(
            skeleton(&c2, 2),
            Err(Error::TruncationExceeded { .. })
        ));
    }

    #[test]
    fn reduced_sets_are_connected() {
        let (connected, parts) = is_connected(&free_partial_group(2).unwrap());
        assert!(connected);
        assert_eq!(parts.len(), 1);
    }
}
