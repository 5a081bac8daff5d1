//! Spine maps: injectivity (spininess) and the Segal / Bousfield–Segal
//! tuple sets.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::symcore::{
    all_spines_capped, ChainTuple, EdgeId, SimplexMatrix, Spine, TruncatedSymSet, DEFAULT_SPINE_CAP,
};

/// Two distinct simplices sharing their values along a spine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpineCollision {
    pub spine: Spine,
    pub first: SimplexMatrix,
    pub second: SimplexMatrix,
}

fn first_collision(
    simplices: impl Iterator<Item = SimplexMatrix>,
    spine: &Spine,
) -> Option<SpineCollision> {
    let mut seen: HashMap<Vec<EdgeId>, SimplexMatrix> = HashMap::new();
    for x in simplices {
        let key: Vec<EdgeId> = spine
            .tree_edges()
            .iter()
            .map(|&(i, j)| x.get(i, j))
            .collect();
        if let Some(prev) = seen.get(&key) {
            if *prev != x {
                let (first, second) = if *prev < x {
                    (prev.clone(), x)
                } else {
                    (x, prev.clone())
                };
                return Some(SpineCollision {
                    spine: spine.clone(),
                    first,
                    second,
                });
            }
        } else {
            seen.insert(key, x);
        }
    }
    None
}

/// Literal check of the Segal map on all of `X_n` (degeneracies included):
/// returns a colliding pair, if any.
pub fn standard_spine_collision(x_set: &TruncatedSymSet, n: usize) -> Option<SpineCollision> {
    if n == 0 {
        return None;
    }
    first_collision(x_set.simplices(n), &Spine::standard(n))
}

/// Whether the Segal map is injective on `X_n`.
pub fn standard_spine_injective(x_set: &TruncatedSymSet, n: usize) -> bool {
    standard_spine_collision(x_set, n).is_none()
}

/// First collision of the Segal map in the lowest degree where one occurs.
///
/// Only degrees up to the top nondegenerate degree matter: the skeletal
/// extension of a `q`-skeletal set is spiny as soon as its spine maps are
/// injective in degrees `<= q`. Degree 2 is checked on every simplex. In a
/// degree `n >= 3` where all lower degrees passed, a colliding pair differs
/// only in the corner entry `(0, n)`, and such a pair cannot contain a
/// degenerate simplex (its repeated vertices would either yield a collision
/// one degree lower or force the corner to be an identity through a
/// degree-2 face), so it suffices to compare the nondegenerate simplices.
pub fn spine_collision(x_set: &TruncatedSymSet) -> Option<SpineCollision> {
    let top = x_set.top_degree().unwrap_or(0).min(x_set.truncation());
    if top < 2 {
        return None;
    }
    if let Some(c) = standard_spine_collision(x_set, 2) {
        return Some(c);
    }
    (3..=top)
        .find_map(|n| first_collision(x_set.nondegenerate(n).iter().cloned(), &Spine::standard(n)))
}

/// Spininess: injectivity of every spine map, decided through the Segal map.
pub fn is_spiny(x_set: &TruncatedSymSet) -> bool {
    spine_collision(x_set).is_none()
}

/// Cross-check of [`is_spiny`] straight from the definition: injectivity on
/// all of `X_n` for every spine of every degree `1 <= n <= min(N, max_degree)`.
pub fn is_spiny_all_spines(x_set: &TruncatedSymSet, max_degree: usize) -> Result<bool> {
    Ok(all_spines_collision(x_set, max_degree)?.is_none())
}

/// As [`is_spiny_all_spines`], returning the first collision found.
pub fn all_spines_collision(
    x_set: &TruncatedSymSet,
    max_degree: usize,
) -> Result<Option<SpineCollision>> {
    if max_degree > DEFAULT_SPINE_CAP {
        return Err(Error::CapExceeded {
            degree: max_degree,
            cap: DEFAULT_SPINE_CAP,
        });
    }
    for n in 1..=x_set.truncation().min(max_degree) {
        let level: Vec<SimplexMatrix> = x_set.simplices(n).collect();
        for spine in all_spines_capped(n, DEFAULT_SPINE_CAP)? {
            if let Some(c) = first_collision(level.iter().cloned(), &spine) {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

/// Number of edges from each object to each object, identities included.
pub(crate) fn adjacency_counts(x_set: &TruncatedSymSet) -> Vec<Vec<u128>> {
    let edges = x_set.edges();
    let k = edges.object_count();
    let mut a = vec![vec![0u128; k]; k];
    for f in edges.edges() {
        a[edges.dom(f).index()][edges.cod(f).index()] += 1;
    }
    a
}

/// Number of composable chains `f_1, ..., f_n` (the size of the limit over
/// the standard spine of `[n]`).
pub fn count_segal_tuples(x_set: &TruncatedSymSet, n: usize) -> u128 {
    let a = adjacency_counts(x_set);
    let k = a.len();
    // Chains of length n ending at each object.
    let mut ending = vec![1u128; k];
    for _ in 0..n {
        let mut next = vec![0u128; k];
        for (src, &count) in ending.iter().enumerate() {
            if count == 0 {
                continue;
            }
            for (dst, &m) in a[src].iter().enumerate() {
                next[dst] += count * m;
            }
        }
        ending = next;
    }
    ending.iter().sum()
}

fn spine_tuples(x_set: &TruncatedSymSet, spine: Spine) -> BTreeSet<ChainTuple> {
    let n = spine.degree();
    let mut out = BTreeSet::new();
    // Vertex labels are fixed as the tree edges are processed in
    // lexicographic order; every tree edge (i, j) with i < j meets an
    // already-labelled vertex i for the standard and starry spines.
    fn extend(
        x_set: &TruncatedSymSet,
        spine: &Spine,
        labels: &mut Vec<Option<crate::ObjectId>>,
        chosen: &mut Vec<EdgeId>,
        out: &mut BTreeSet<ChainTuple>,
    ) {
        let edges = x_set.edges();
        let pos = chosen.len();
        if pos == spine.degree() {
            out.insert(ChainTuple {
                spine: spine.clone(),
                components: chosen.clone(),
            });
            return;
        }
        let (i, j) = spine.tree_edges()[pos];
        for f in edges.edges() {
            if labels[i].is_some_and(|o| o != edges.dom(f)) {
                continue;
            }
            if labels[j].is_some_and(|o| o != edges.cod(f)) {
                continue;
            }
            let saved = (labels[i], labels[j]);
            labels[i] = Some(edges.dom(f));
            labels[j] = Some(edges.cod(f));
            chosen.push(f);
            extend(x_set, spine, labels, chosen, out);
            chosen.pop();
            labels[i] = saved.0;
            labels[j] = saved.1;
        }
    }
    let mut labels = vec![None; n + 1];
    extend(x_set, &spine, &mut labels, &mut Vec::new(), &mut out);
    out
}

/// Composable chains `(f_1, ..., f_n)` with `cod f_i = dom f_(i+1)`.
pub fn segal_tuples(x_set: &TruncatedSymSet, n: usize) -> Result<BTreeSet<ChainTuple>> {
    check_tuple_degree(x_set, n)?;
    Ok(spine_tuples(x_set, Spine::standard(n)))
}

/// Tuples `(f_1, ..., f_n)` of edges with a common domain.
pub fn bousfield_tuples(x_set: &TruncatedSymSet, n: usize) -> Result<BTreeSet<ChainTuple>> {
    check_tuple_degree(x_set, n)?;
    Ok(spine_tuples(x_set, Spine::starry(n)))
}

fn check_tuple_degree(x_set: &TruncatedSymSet, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput(
            "spine tuples need degree at least 1".into(),
        ));
    }
    if n > x_set.truncation() {
        return Err(Error::TruncationExceeded {
            degree: n,
            truncation: x_set.truncation(),
        });
    }
    Ok(())
}
