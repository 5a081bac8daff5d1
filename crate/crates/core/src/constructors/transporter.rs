//! Transporter groupoids of a finite group on a collection of subgroups.

use std::collections::BTreeMap;

use super::group::GroupTable;
use super::groupoid::{nerve_of_groupoid, GroupoidPresentation, Morphism};
use crate::error::{Error, Result};
use crate::symcore::TruncatedSymSet;

/// A finite group with a collection `Δ` of subgroups, each given by element
/// indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransporterSpec {
    pub group: GroupTable,
    pub delta: Vec<Vec<usize>>,
}

/// The transporter groupoid nerve together with notes about how `Δ` was
/// normalised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransporterOutcome {
    pub nerve: TruncatedSymSet,
    pub presentation: GroupoidPresentation,
    /// Sorted members of the conjugation-closed collection, in object order.
    pub delta: Vec<Vec<usize>>,
    pub warnings: Vec<String>,
}

impl TransporterSpec {
    /// Checks that every member is a subgroup and returns the sorted,
    /// deduplicated collection closed under conjugation, with a warning per
    /// added conjugate (an error instead when `strict`).
    pub fn normalized_delta(&self, strict: bool) -> Result<(Vec<Vec<usize>>, Vec<String>)> {
        let g = &self.group;
        if self.delta.is_empty() {
            return Err(Error::InvalidTransporter("the collection is empty".into()));
        }
        let mut members: Vec<Vec<usize>> = Vec::new();
        for (k, subset) in self.delta.iter().enumerate() {
            let mut sorted = subset.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if !g.is_subgroup(&sorted) {
                return Err(Error::InvalidTransporter(format!(
                    "member {k} ({}) is not a subgroup",
                    self.subset_name(&sorted)
                )));
            }
            if !members.contains(&sorted) {
                members.push(sorted);
            }
        }
        let mut warnings = Vec::new();
        let mut k = 0;
        while k < members.len() {
            for x in 0..g.order() {
                let conj = g.conjugate(x, &members[k]);
                if !members.contains(&conj) {
                    let msg = format!(
                        "collection is not closed under conjugation: added {} = {} {} {}^-1",
                        self.subset_name(&conj),
                        g.element_name(x),
                        self.subset_name(&members[k]),
                        g.element_name(x)
                    );
                    if strict {
                        return Err(Error::NotConjugationClosed(msg));
                    }
                    warnings.push(msg);
                    members.push(conj);
                }
            }
            k += 1;
        }
        members.sort();
        Ok((members, warnings))
    }

    /// `{a,b,...}` with element names.
    pub fn subset_name(&self, subset: &[usize]) -> String {
        let names: Vec<&str> = subset.iter().map(|&a| self.group.element_name(a)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// The groupoid with objects the members `P` of `Δ` and morphisms
/// `P -> Q` the elements `g` with `g P g^-1 = Q`, named `g|P`; composition
/// is multiplication in the group.
pub fn transporter_presentation(
    spec: &TransporterSpec,
    strict: bool,
) -> Result<(GroupoidPresentation, Vec<Vec<usize>>, Vec<String>)> {
    let (delta, warnings) = spec.normalized_delta(strict)?;
    let g = &spec.group;
    let objects: Vec<String> = delta.iter().map(|p| spec.subset_name(p)).collect();
    let mut morphisms = Vec::new();
    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut identities = vec![0; delta.len()];
    for (pi, p) in delta.iter().enumerate() {
        for x in 0..g.order() {
            let conj = g.conjugate(x, p);
            let qi = delta
                .binary_search(&conj)
                .expect("closed under conjugation");
            if x == g.identity() {
                identities[pi] = morphisms.len();
            }
            index.insert((x, pi), morphisms.len());
            morphisms.push(Morphism {
                name: format!("{}|{}", g.element_name(x), objects[pi]),
                dom: pi,
                cod: qi,
            });
        }
    }
    let mut compose = BTreeMap::new();
    for (&(x, pi), &f) in &index {
        let qi = morphisms[f].cod;
        for y in 0..g.order() {
            let h = index[&(y, qi)];
            compose.insert((f, h), index[&(g.mul(y, x), pi)]);
        }
    }
    let presentation = GroupoidPresentation::new(objects, morphisms, identities, compose)?;
    Ok((presentation, delta, warnings))
}

/// The nerve of the transporter groupoid of `spec`.
pub fn transporter_groupoid(spec: &TransporterSpec, strict: bool) -> Result<TransporterOutcome> {
    let (presentation, delta, warnings) = transporter_presentation(spec, strict)?;
    Ok(TransporterOutcome {
        nerve: nerve_of_groupoid(&presentation)?,
        presentation,
        delta,
        warnings,
    })
}

/// `max_P |P^G| · |N_G(P)| - 1` over the conjugation closure of `Δ`, where
/// `P^G` is the conjugacy class of `P`.
pub fn locality_dimension_formula(spec: &TransporterSpec) -> Result<usize> {
    let (delta, _) = spec.normalized_delta(false)?;
    let g = &spec.group;
    let value = delta
        .iter()
        .map(|p| {
            let mut class: Vec<Vec<usize>> = (0..g.order()).map(|x| g.conjugate(x, p)).collect();
            class.sort();
            class.dedup();
            class.len() * g.normalizer(p).len()
        })
        .max()
        .expect("nonempty collection");
    Ok(value - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{dimension, is_connected, is_group, is_groupoid, p_invariant};

    fn s3_spec(generator: &str) -> TransporterSpec {
        let group = GroupTable::symmetric3();
        let x = group.element_by_name(generator).unwrap();
        let sub = group.generated_subgroup(&[x]);
        TransporterSpec {
            group,
            delta: vec![sub],
        }
    }

    #[test]
    fn sylow_two_class_is_closed_with_warnings() {
        let spec = s3_spec("(12)");
        let out = transporter_groupoid(&spec, false).unwrap();
        assert_eq!(out.warnings.len(), 2);
        assert_eq!(out.nerve.edges().object_count(), 3);
        assert_eq!(dimension(&out.nerve).unwrap(), 5);
        assert_eq!(p_invariant(&out.nerve).unwrap().p, 5);
        assert_eq!(locality_dimension_formula(&spec).unwrap(), 5);
        assert!(is_groupoid(&out.nerve).unwrap());
        assert!(!is_group(&out.nerve).unwrap());
        assert!(is_connected(&out.nerve).0);
        assert!(matches!(
            transporter_groupoid(&spec, true),
            Err(Error::NotConjugationClosed(_))
        ));
    }

    #[test]
    fn normal_rotation_subgroup() {
        let spec = s3_spec("(123)");
        let out = transporter_groupoid(&spec, true).unwrap();
        assert!(out.warnings.is_empty());
        assert_eq!(out.nerve.edges().object_count(), 1);
        assert_eq!(dimension(&out.nerve).unwrap(), 5);
        assert_eq!(locality_dimension_formula(&spec).unwrap(), 5);
        assert!(is_group(&out.nerve).unwrap());
    }

    #[test]
    fn whole_c2() {
        let spec = TransporterSpec {
            group: GroupTable::cyclic(2),
            delta: vec![vec![0, 1]],
        };
        let out = transporter_groupoid(&spec, true).unwrap();
        assert_eq!(dimension(&out.nerve).unwrap(), 1);
    }

    #[test]
    fn non_subgroup_is_rejected() {
        let spec = TransporterSpec {
            group: GroupTable::cyclic(3),
            delta: vec![vec![0, 1]],
        };
        assert!(matches!(
            transporter_groupoid(&spec, false),
            Err(Error::InvalidTransporter(_))
        ));
    }
}
