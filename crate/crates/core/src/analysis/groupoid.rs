//! Recognition of groupoid and group nerves, and partial composition.

use std::collections::HashSet;

use super::spiny::count_segal_tuples;
use super::structure::p_invariant;
use crate::error::{Error, Result};
use crate::symcore::{EdgeId, FiniteMap, SimplexMatrix, TruncatedSymSet};

/// Largest level listed explicitly when searching for a composable chain
/// without a simplex.
const WITNESS_SEARCH_LIMIT: u128 = 1 << 21;

/// Outcome of the groupoid test, with the reason for a negative answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupoidVerdict {
    /// Segal maps are bijective up to the truncation, which is at least `p`.
    Groupoid,
    /// At `degree`, fewer simplices than composable chains; `missing` is a
    /// chain with no simplex when the level is small enough to search.
    SegalNotBijective {
        degree: usize,
        simplices: u128,
        tuples: u128,
        missing: Option<Vec<EdgeId>>,
    },
    /// Segal maps are bijective up to the truncation, but the truncation is
    /// below `p`, so the data cannot be a truncated groupoid nerve; `missing`
    /// locates a composable chain without a simplex in the skeletal
    /// extension, if one was found.
    TruncationBelowP {
        truncation: usize,
        p: usize,
        missing: Option<(usize, Vec<EdgeId>)>,
    },
}

impl GroupoidVerdict {
    pub fn is_groupoid(&self) -> bool {
        matches!(self, GroupoidVerdict::Groupoid)
    }
}

/// Searches for a composable chain of length `n` that is not the
/// superdiagonal of any `n`-simplex.
pub fn missing_segal_tuple(x_set: &TruncatedSymSet, n: usize) -> Option<Vec<EdgeId>> {
    if n == 0 || x_set.simplex_count(n) > WITNESS_SEARCH_LIMIT {
        return None;
    }
    let present: HashSet<Vec<EdgeId>> = x_set.simplices(n).map(|x| x.superdiagonal()).collect();
    let mut chain = Vec::with_capacity(n);
    fn search(
        x_set: &TruncatedSymSet,
        present: &HashSet<Vec<EdgeId>>,
        n: usize,
        chain: &mut Vec<EdgeId>,
    ) -> bool {
        if chain.len() == n {
            return !present.contains(chain);
        }
        let edges = x_set.edges();
        let candidates: Vec<EdgeId> = match chain.last() {
            Some(&prev) => edges
                .edges()
                .filter(|&f| edges.dom(f) == edges.cod(prev))
                .collect(),
            None => edges.edges().collect(),
        };
        for f in candidates {
            chain.push(f);
            if search(x_set, present, n, chain) {
                return true;
            }
            chain.pop();
        }
        false
    }
    search(x_set, &present, n, &mut chain).then_some(chain)
}

/// Groupoid test for a spiny `X`, by counting: the Segal map is injective
/// by spininess, so it is bijective exactly when `|X_n|` equals the number
/// of composable chains of length `n`. Bijectivity is required for
/// `1 <= n <= N`, together with `N >= p`.
pub fn groupoid_verdict(x_set: &TruncatedSymSet) -> Result<GroupoidVerdict> {
    let p = p_invariant(x_set)?.p;
    let truncation = x_set.truncation();
    for n in 1..=truncation {
        let simplices = x_set.simplex_count(n);
        let tuples = count_segal_tuples(x_set, n);
        if simplices > tuples {
            return Err(Error::NotSpiny(format!(
                "{simplices} simplices of degree {n} but only {tuples} composable chains"
            )));
        }
        if simplices < tuples {
            return Ok(GroupoidVerdict::SegalNotBijective {
                degree: n,
                simplices,
                tuples,
                missing: missing_segal_tuple(x_set, n),
            });
        }
    }
    if truncation < p {
        let missing = (truncation + 1..=p)
            .filter(|&n| x_set.simplex_count(n) < count_segal_tuples(x_set, n))
            .find_map(|n| missing_segal_tuple(x_set, n).map(|t| (n, t)));
        return Ok(GroupoidVerdict::TruncationBelowP {
            truncation,
            p,
            missing,
        });
    }
    Ok(GroupoidVerdict::Groupoid)
}

/// Whether a spiny `X` is (the truncation of) the nerve of a groupoid.
pub fn is_groupoid(x_set: &TruncatedSymSet) -> Result<bool> {
    Ok(groupoid_verdict(x_set)?.is_groupoid())
}

/// Whether a spiny `X` is the nerve of a group: a groupoid with one object.
pub fn is_group(x_set: &TruncatedSymSet) -> Result<bool> {
    Ok(x_set.edges().object_count() == 1 && is_groupoid(x_set)?)
}

/// The composite `g f`, read off as `x_02` of the 2-simplex with
/// superdiagonal `(f, g)`; `None` when no such simplex exists.
pub fn compose_edges(x_set: &TruncatedSymSet, f: EdgeId, g: EdgeId) -> Result<Option<EdgeId>> {
    let edges = x_set.edges();
    let count = edges.edge_count() as u32;
    if f.0 >= count || g.0 >= count {
        return Err(Error::InvalidInput("edge id out of range".into()));
    }
    if edges.cod(f) != edges.dom(g) {
        return Err(Error::NotComposable {
            cod: edges.object_name(edges.cod(f)).to_owned(),
            dom: edges.object_name(edges.dom(g)).to_owned(),
        });
    }
    let mut witnesses: Vec<SimplexMatrix> = x_set
        .simplices(2)
        .filter(|x| x.get(0, 1) == f && x.get(1, 2) == g)
        .collect();
    match witnesses.len() {
        0 => Ok(None),
        1 => Ok(Some(witnesses.pop().expect("one witness").get(0, 2))),
        _ => Err(Error::NotSpiny(format!(
            "{} and {} share the superdiagonal ({}, {})",
            witnesses[0].display(edges),
            witnesses[1].display(edges),
            edges.edge_name(f),
            edges.edge_name(g)
        ))),
    }
}

/// The 2-simplex `f · chi` with `chi = (1, 0, 1)`, witnessing `f^-1 f`.
pub fn inverse_witness(x_set: &TruncatedSymSet, f: EdgeId) -> SimplexMatrix {
    let chi = FiniteMap::new(1, vec![1, 0, 1]).expect("valid map");
    SimplexMatrix::edge(x_set.edges(), x_set.edges().inv(f))
        .act(&chi)
        .expect("degree 1")
}
