//! Symmetric subsets (im-partial subgroups) of a partial group.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::symcore::{EdgeId, FiniteMap, SimplexMatrix, TruncatedSymSet};

/// A symmetric subset of `parent`, recorded by membership flags on the
/// nondegenerate simplices of each degree (in the parent's sorted order).
/// A simplex belongs to the subset when its nondegenerate base does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricSubset<'a> {
    parent: &'a TruncatedSymSet,
    flags: Vec<Vec<bool>>,
}

impl<'a> SymmetricSubset<'a> {
    /// Wraps membership flags (one vector per degree `0..=N`).
    pub fn from_flags(parent: &'a TruncatedSymSet, flags: Vec<Vec<bool>>) -> Result<Self> {
        let counts = parent.nondegenerate_counts();
        if flags.len() != counts.len() || flags.iter().zip(&counts).any(|(f, &c)| f.len() != c) {
            return Err(Error::InvalidInput(
                "membership flags do not match the nondegenerate layers".into(),
            ));
        }
        Ok(SymmetricSubset { parent, flags })
    }

    pub fn parent(&self) -> &'a TruncatedSymSet {
        self.parent
    }

    pub fn flags(&self) -> &[Vec<bool>] {
        &self.flags
    }

    /// Number of nondegenerate members over all degrees.
    pub fn nondegenerate_count(&self) -> usize {
        self.flags.iter().flatten().filter(|&&b| b).count()
    }

    pub fn contains(&self, x: &SimplexMatrix) -> bool {
        if !self.parent.contains(x) {
            return false;
        }
        let (base, _) = x.split_repeated_rows();
        self.parent
            .nondegenerate(base.degree())
            .iter()
            .position(|y| *y == base)
            .is_some_and(|i| self.flags[base.degree()][i])
    }

    /// Members that witness a failure of closure under faces and
    /// permutations (which generate all maps together with degeneracies),
    /// or `None` for a nonempty closed subset.
    pub fn closure_violation(&self) -> Option<String> {
        if !self.flags.first().is_some_and(|l| l.iter().any(|&b| b)) {
            return Some("the subset is empty".into());
        }
        let edges = self.parent.edges();
        for (k, layer) in self.flags.iter().enumerate().skip(1) {
            for (x, _) in self
                .parent
                .nondegenerate(k)
                .iter()
                .zip(layer)
                .filter(|(_, &b)| b)
            {
                for skip in 0..=k {
                    if !self.contains(&x.face(skip)) {
                        return Some(format!("face {skip} of {} is missing", x.display(edges)));
                    }
                }
                for i in 0..k {
                    let tau = FiniteMap::transposition(k, i, i + 1).expect("in range");
                    if !self.contains(&x.act(&tau).expect("degree matches")) {
                        return Some(format!("{} · {tau} is missing", x.display(edges)));
                    }
                }
            }
        }
        None
    }

    /// The subset as a symmetric set in its own right (same truncation).
    pub fn to_symset(&self) -> Result<TruncatedSymSet> {
        let parent = self.parent;
        let edge_member: Vec<bool> = {
            let layer1 = parent.nondegenerate(1);
            let mut member = vec![false; parent.edges().edge_count()];
            for o in parent.edges().objects() {
                member[parent.edges().ident(o).index()] = self.flags[0][o.index()];
            }
            for (x, &b) in layer1.iter().zip(&self.flags[1]) {
                member[x.get(0, 1).index()] = b;
            }
            member
        };
        let kept: HashSet<&SimplexMatrix> = (2..self.flags.len())
            .flat_map(|k| {
                parent
                    .nondegenerate(k)
                    .iter()
                    .zip(&self.flags[k])
                    .filter(|(_, &b)| b)
                    .map(|(x, _)| x)
            })
            .collect();
        parent.restricted(
            |o| self.flags[0][o.index()],
            |e: EdgeId| edge_member[e.index()],
            |s| kept.contains(s),
        )
    }
}

/// What [`impartial_subgroups`] should return.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupMode {
    Count,
    List,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupListing<'a> {
    Count(usize),
    List(Vec<SymmetricSubset<'a>>),
}

/// Permutation orbits of nondegenerate simplices of degree `>= 1`, each with
/// the orbits below it (bases of faces, recursively).
struct Units {
    /// `(degree, index in the layer)` of every member, per unit.
    members: Vec<Vec<(usize, usize)>>,
    /// Units required by each unit, itself included, as a bitset.
    closure: Vec<Vec<u64>>,
}

fn bitset_words(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Units {
    fn new(x_set: &TruncatedSymSet) -> Self {
        let top = x_set.truncation();
        let mut unit_of: HashMap<SimplexMatrix, usize> = HashMap::new();
        let mut members: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut unit_degree: Vec<usize> = Vec::new();
        for k in 1..=top {
            let layer: Vec<&SimplexMatrix> = x_set.nondegenerate(k).iter().collect();
            let position: HashMap<&SimplexMatrix, usize> =
                layer.iter().enumerate().map(|(i, x)| (*x, i)).collect();
            for (i, x) in layer.iter().enumerate() {
                if unit_of.contains_key(*x) {
                    continue;
                }
                let id = members.len();
                let mut orbit = Vec::new();
                for pi in FiniteMap::permutations(k) {
                    let y = x.act(&pi).expect("degree matches");
                    if let std::collections::hash_map::Entry::Vacant(slot) = unit_of.entry(y) {
                        let j = position[slot.key()];
                        slot.insert(id);
                        orbit.push((k, j));
                    }
                }
                debug_assert!(orbit.contains(&(k, i)));
                orbit.sort_unstable();
                members.push(orbit);
                unit_degree.push(k);
            }
        }
        let n = members.len();
        let words = bitset_words(n);
        let mut closure: Vec<Vec<u64>> = Vec::with_capacity(n);
        for u in 0..n {
            let mut bits = vec![0u64; words];
            bits[u / 64] |= 1 << (u % 64);
            let k = unit_degree[u];
            let (_, i) = members[u][0];
            let x = x_set.nondegenerate(k).iter().nth(i).expect("in layer");
            for skip in 0..=k {
                let (base, _) = x.face(skip).split_repeated_rows();
                if base.degree() >= 1 {
                    let below = unit_of[&base];
                    // Units are created in order of degree, so `below < u`.
                    for (w, word) in closure[below].iter().enumerate() {
                        bits[w] |= word;
                    }
                }
            }
            closure.push(bits);
        }
        Units { members, closure }
    }
}

/// All nonempty symmetric subsets of a partial group.
///
/// The object is in every nonempty subset; beyond it, a symmetric subset is
/// a union of permutation orbits of nondegenerate simplices that contains
/// the orbits of the bases of all faces. The subsets are generated from the
/// smallest one (the object alone) by repeatedly adding one orbit together
/// with everything below it, with deduplication. Output is ordered by size,
/// then by membership pattern.
pub fn impartial_subgroups(
    x_set: &TruncatedSymSet,
    mode: SubgroupMode,
) -> Result<SubgroupListing<'_>> {
    if !x_set.is_reduced() {
        return Err(Error::NotReduced {
            objects: x_set.edges().object_count(),
        });
    }
    let report = x_set.validate();
    if !report.is_valid() {
        return Err(Error::InvalidInput(report.to_string()));
    }
    let units = Units::new(x_set);
    let n = units.members.len();
    let words = bitset_words(n);
    let start = vec![0u64; words];
    let mut seen: HashSet<Vec<u64>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(current) = queue.pop_front() {
        for (u, closure) in units.closure.iter().enumerate() {
            if current[u / 64] & (1 << (u % 64)) != 0 {
                continue;
            }
            let next: Vec<u64> = current.iter().zip(closure).map(|(a, b)| a | b).collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    if mode == SubgroupMode::Count {
        return Ok(SubgroupListing::Count(seen.len()));
    }
    let mut all: Vec<Vec<u64>> = seen.into_iter().collect();
    let key = |bits: &Vec<u64>| {
        let chosen: Vec<usize> = (0..n)
            .filter(|&u| bits[u / 64] & (1 << (u % 64)) != 0)
            .collect();
        (chosen.len(), chosen)
    };
    all.sort_by_cached_key(key);
    let counts = x_set.nondegenerate_counts();
    let listing = all
        .into_iter()
        .map(|bits| {
            let mut flags: Vec<Vec<bool>> = counts.iter().map(|&c| vec![false; c]).collect();
            flags[0] = vec![true; counts[0]];
            for u in (0..n).filter(|&u| bits[u / 64] & (1 << (u % 64)) != 0) {
                for &(k, i) in &units.members[u] {
                    flags[k][i] = true;
                }
            }
            SymmetricSubset {
                parent: x_set,
                flags,
            }
        })
        .collect();
    Ok(SubgroupListing::List(listing))
}

/// Number of im-partial subgroups.
pub fn count_impartial_subgroups(x_set: &TruncatedSymSet) -> Result<usize> {
    match impartial_subgroups(x_set, SubgroupMode::Count)? {
        SubgroupListing::Count(c) => Ok(c),
        SubgroupListing::List(l) => Ok(l.len()),
    }
}

/// Nondegenerate simplex counts per degree of each subset, for reports.
pub fn subset_profile(subset: &SymmetricSubset<'_>) -> BTreeMap<usize, usize> {
    subset
        .flags
        .iter()
        .enumerate()
        .map(|(k, l)| (k, l.iter().filter(|&&b| b).count()))
        .filter(|&(_, c)| c > 0)
        .collect()
}
