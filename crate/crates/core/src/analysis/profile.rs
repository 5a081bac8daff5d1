//! A summary of every analysis of a symmetric set.

use super::groupoid::{groupoid_verdict, GroupoidVerdict};
use super::spiny::spine_collision;
use super::structure::{components, dimension, p_invariant};
use crate::error::{Error, Result};
use crate::symcore::TruncatedSymSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisProfile {
    /// `None` for the empty set.
    pub dimension: Option<usize>,
    pub p_invariant: usize,
    /// `(object name, n_x)` in object order.
    pub n_x: Vec<(String, usize)>,
    pub spiny: bool,
    pub groupoid: bool,
    pub group: bool,
    /// Reason the groupoid test failed; `None` when it passed or was not
    /// applicable because the set is not spiny.
    pub groupoid_verdict: Option<GroupoidVerdict>,
    /// Object names, one list per component.
    pub connected_components: Vec<Vec<String>>,
    /// Nondegenerate simplex counts in degrees `0..=N`.
    pub nondegenerate_counts: Vec<usize>,
    pub truncation: usize,
}

/// Computes the profile of a valid symmetric set.
pub fn analyze(x_set: &TruncatedSymSet) -> Result<AnalysisProfile> {
    let edges = x_set.edges();
    if x_set.is_empty() {
        return Err(Error::Empty);
    }
    let p = p_invariant(x_set)?;
    let spiny = spine_collision(x_set).is_none();
    let verdict = if spiny {
        Some(groupoid_verdict(x_set)?)
    } else {
        None
    };
    let groupoid = verdict.as_ref().is_some_and(GroupoidVerdict::is_groupoid);
    Ok(AnalysisProfile {
        dimension: Some(dimension(x_set)?),
        p_invariant: p.p,
        n_x: edges
            .objects()
            .map(|o| (edges.object_name(o).to_owned(), p.table[o.index()]))
            .collect(),
        spiny,
        groupoid,
        group: groupoid && x_set.is_reduced(),
        groupoid_verdict: verdict.filter(|v| !v.is_groupoid()),
        connected_components: components(x_set)
            .into_iter()
            .map(|c| {
                c.into_iter()
                    .map(|o| edges.object_name(o).to_owned())
                    .collect()
            })
            .collect(),
        nondegenerate_counts: x_set.nondegenerate_counts(),
        truncation: x_set.truncation(),
    })
}
