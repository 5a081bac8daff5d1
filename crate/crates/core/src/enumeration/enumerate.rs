//! Exhaustive enumeration of the partial groups of a given cardinality, up
//! to isomorphism.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::iso::{iso_class_key, IsoClassKey};
use crate::error::{Error, Result};
use crate::symcore::{EdgeId, EdgeSpec, EdgeStructure, FiniteMap, SimplexMatrix, TruncatedSymSet};

/// Default upper bound on the cardinality accepted by
/// [`enumerate_partial_groups`].
pub const DEFAULT_ENUMERATION_CAP: usize = 4;

/// One isomorphism class with a representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedPartialGroup {
    pub key: IsoClassKey,
    pub representative: TruncatedSymSet,
}

/// Edge structures on one object `*` with `e` non-identity edges `x1..xe`,
/// one per involution type: the first `2t` edges are paired as
/// `x1 <-> x2`, `x3 <-> x4`, ... and the rest are self-inverse.
pub fn involution_types(e: usize) -> Vec<EdgeStructure> {
    (0..=e / 2)
        .map(|t| {
            let specs = (0..e)
                .map(|i| {
                    let inv = if i < 2 * t { i ^ 1 } else { i };
                    EdgeSpec::new(format!("x{}", i + 1), "*", "*", format!("x{}", inv + 1))
                })
                .collect();
            EdgeStructure::new(vec!["*".into()], specs).expect("well-formed involution")
        })
        .collect()
}

/// Matrices of degree `n` with no identity off the diagonal whose faces all
/// lie in `previous` (the nondegenerate `(n-1)`-simplices), grouped into
/// orbits under permutation of vertices. Orbits and their members are
/// sorted.
pub fn candidate_orbits(
    edges: &EdgeStructure,
    previous: &BTreeSet<SimplexMatrix>,
    n: usize,
) -> Vec<Vec<SimplexMatrix>> {
    let nonid: Vec<EdgeId> = edges.nonidentity_edges().collect();
    let mut candidates: BTreeSet<SimplexMatrix> = BTreeSet::new();
    for y in previous {
        let mut column = vec![0usize; n];
        loop {
            let col: Vec<EdgeId> = column.iter().map(|&c| nonid[c]).collect();
            let x = y.extend_with_column(edges, &col);
            if (0..n).all(|skip| previous.contains(&x.face(skip))) {
                candidates.insert(x);
            }
            let mut pos = n;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                column[pos] += 1;
                if column[pos] < nonid.len() {
                    break;
                }
                column[pos] = 0;
            }
            if column.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    let mut orbits: Vec<Vec<SimplexMatrix>> = Vec::new();
    let mut assigned: BTreeSet<SimplexMatrix> = BTreeSet::new();
    for x in &candidates {
        if assigned.contains(x) {
            continue;
        }
        let orbit: BTreeSet<SimplexMatrix> = FiniteMap::permutations(n)
            .map(|pi| x.act(&pi).expect("degree matches"))
            .collect();
        debug_assert!(orbit.iter().all(|y| candidates.contains(y)));
        assigned.extend(orbit.iter().cloned());
        orbits.push(orbit.into_iter().collect());
    }
    orbits
}

struct Search<'a> {
    edges: &'a EdgeStructure,
    truncation: usize,
    found: BTreeMap<IsoClassKey, TruncatedSymSet>,
}

impl Search<'_> {
    fn finish(&mut self, layers: &BTreeMap<usize, BTreeSet<SimplexMatrix>>) -> Result<()> {
        let x = TruncatedSymSet::from_parts(self.edges.clone(), self.truncation, layers.clone())?;
        let key = iso_class_key(&x)?;
        self.found.entry(key).or_insert(x);
        Ok(())
    }

    /// Chooses the nondegenerate simplices of degree `n`, then recurses.
    fn degree(
        &mut self,
        n: usize,
        previous: &BTreeSet<SimplexMatrix>,
        layers: &mut BTreeMap<usize, BTreeSet<SimplexMatrix>>,
    ) -> Result<()> {
        if n > self.truncation || previous.is_empty() {
            return self.finish(layers);
        }
        let edges = self.edges;
        let orbits = candidate_orbits(edges, previous, n);
        // Superdiagonals of each orbit; an orbit is unusable if two of its
        // members share one or, in degree 2, if it collides with a
        // degenerate simplex `f · (1, 0, 1)` (superdiagonal `(f, f^-1)`).
        let mut usable = Vec::new();
        for orbit in &orbits {
            let supers: BTreeSet<Vec<EdgeId>> = orbit.iter().map(|x| x.superdiagonal()).collect();
            let clash_degenerate =
                n == 2 && orbit.iter().any(|x| x.get(1, 2) == edges.inv(x.get(0, 1)));
            if supers.len() == orbit.len() && !clash_degenerate {
                usable.push((orbit, supers));
            }
        }
        let m = usable.len();
        let mut conflicts = vec![vec![false; m]; m];
        let mut owner: HashMap<&Vec<EdgeId>, usize> = HashMap::new();
        for (i, (_, supers)) in usable.iter().enumerate() {
            for s in supers {
                if let Some(&j) = owner.get(s) {
                    conflicts[i][j] = true;
                    conflicts[j][i] = true;
                } else {
                    owner.insert(s, i);
                }
            }
        }
        let mut chosen: Vec<usize> = Vec::new();
        self.independent_sets(n, &usable, &conflicts, 0, &mut chosen, layers)
    }

    #[allow(clippy::too_many_arguments)]
    fn independent_sets(
        &mut self,
        n: usize,
        usable: &[(&Vec<SimplexMatrix>, BTreeSet<Vec<EdgeId>>)],
        conflicts: &[Vec<bool>],
        next: usize,
        chosen: &mut Vec<usize>,
        layers: &mut BTreeMap<usize, BTreeSet<SimplexMatrix>>,
    ) -> Result<()> {
        if next == usable.len() {
            let layer: BTreeSet<SimplexMatrix> = chosen
                .iter()
                .flat_map(|&i| usable[i].0.iter().cloned())
                .collect();
            layers.insert(n, layer.clone());
            let result = self.degree(n + 1, &layer, layers);
            layers.remove(&n);
            return result;
        }
        self.independent_sets(n, usable, conflicts, next + 1, chosen, layers)?;
        if chosen.iter().all(|&c| !conflicts[c][next]) {
            chosen.push(next);
            self.independent_sets(n, usable, conflicts, next + 1, chosen, layers)?;
            chosen.pop();
        }
        Ok(())
    }
}

/// Every partial group with `k` edges (identity included), one
/// representative per isomorphism class, sorted by [`IsoClassKey`].
///
/// Each involution type of the `k - 1` non-identity edges is explored; in
/// each degree `2 <= n <= k - 1` the nondegenerate simplices are chosen as a
/// union of permutation orbits of matrices whose faces are already present,
/// keeping the Segal map injective. Representatives have truncation
/// `max(1, k - 1)`, the largest possible dimension.
pub fn enumerate_partial_groups(k: usize, cap: usize) -> Result<Vec<EnumeratedPartialGroup>> {
    if k > cap {
        return Err(Error::CapExceeded { degree: k, cap });
    }
    if k == 0 {
        return Err(Error::InvalidInput(
            "a partial group has at least one element (k >= 1)".into(),
        ));
    }
    let e = k - 1;
    let truncation = e.max(1);
    let mut found = BTreeMap::new();
    for edges in involution_types(e) {
        let mut search = Search {
            edges: &edges,
            truncation,
            found: BTreeMap::new(),
        };
        let degree_one: BTreeSet<SimplexMatrix> = edges
            .nonidentity_edges()
            .map(|f| SimplexMatrix::edge(&edges, f))
            .collect();
        search.degree(2, &degree_one, &mut BTreeMap::new())?;
        for (key, x) in search.found {
            found.entry(key).or_insert(x);
        }
    }
    Ok(found
        .into_iter()
        .map(|(key, representative)| EnumeratedPartialGroup {
            key,
            representative,
        })
        .collect())
}
