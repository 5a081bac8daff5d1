//! Property checks shared by the acceptance harness and the integration
//! suites. Each returns the list of violations found (empty on success).

#![allow(dead_code)]

use std::collections::BTreeSet;

use pgsym_core::analysis::{
    dimension, ez_decompose, is_connected, is_degenerate, is_group, is_groupoid, is_spiny,
    is_spiny_all_spines, p_invariant, skeleton, standard_spine_collision, DegeneracyOracle,
};
use pgsym_core::constructors::{
    locality_dimension_formula, transporter_groupoid, GroupoidPresentation, TransporterSpec,
};
use pgsym_core::symcore::{FiniteMap, SimplexMatrix};
use pgsym_core::TruncatedSymSet;

use super::{automorphism_count, Instance};

pub type Violations = Vec<String>;

/// Dimension never exceeds the p-invariant.
pub fn p_skeletal(instances: &[Instance]) -> Violations {
    let mut out = Vec::new();
    for i in instances {
        let d = dimension(&i.set).unwrap();
        let p = p_invariant(&i.set).unwrap().p;
        if d > p {
            out.push(format!("{}: dimension {d} > p {p}", i.name));
        }
    }
    out
}

/// For connected groupoids: dimension = p and p + 1 = |hom(x,x)| · |X_0|.
/// Returns the violations and the number of instances checked.
pub fn connected_groupoids(instances: &[Instance]) -> (Violations, usize) {
    let mut out = Vec::new();
    let mut checked = 0;
    for i in instances {
        let x = &i.set;
        if !is_connected(x).0 || !is_groupoid(x).unwrap() {
            continue;
        }
        checked += 1;
        let d = dimension(x).unwrap();
        let p = p_invariant(x).unwrap().p;
        if d != p {
            out.push(format!("{}: dimension {d} != p {p}", i.name));
        }
        let objects = x.edges().object_count();
        for o in x.edges().objects() {
            let hom = automorphism_count(x, o);
            if p + 1 != hom * objects {
                out.push(format!(
                    "{}: p + 1 = {} but |hom(x,x)| * |X_0| = {hom} * {objects}",
                    i.name,
                    p + 1
                ));
            }
        }
    }
    (out, checked)
}

/// Connected instances of dimension p are groupoids; connected instances
/// whose dimension reaches the number of non-identity edges are groups.
/// Returns the violations and the numbers of instances to which each
/// implication applied.
pub fn dimension_p_implies_groupoid(instances: &[Instance]) -> (Violations, usize, usize) {
    let mut out = Vec::new();
    let (mut groupoid_cases, mut group_cases) = (0, 0);
    for i in instances {
        let x = &i.set;
        if !is_connected(x).0 {
            continue;
        }
        let d = dimension(x).unwrap();
        let p = p_invariant(x).unwrap().p;
        if d == p {
            groupoid_cases += 1;
            if !is_groupoid(x).unwrap() {
                out.push(format!(
                    "{}: dimension = p = {p} but not a groupoid",
                    i.name
                ));
            }
        }
        let nonid = x.edges().nonidentity_edges().count();
        if d >= nonid {
            group_cases += 1;
            if !is_group(x).unwrap() {
                out.push(format!(
                    "{}: dimension {d} >= {nonid} non-identity edges but not a group",
                    i.name
                ));
            }
        }
    }
    (out, groupoid_cases, group_cases)
}

/// `is_degenerate` agrees with the exhaustive oracle on every simplex of
/// every level, and every simplex round-trips through `ez_decompose`.
/// Returns the violations and the number of simplices checked.
pub fn degeneracy_oracle(instance: &Instance) -> (Violations, usize) {
    let x_set = &instance.set;
    let mut out = Vec::new();
    let n_max = x_set.truncation();
    let oracle = DegeneracyOracle::new(x_set, n_max);
    let mut checked = 0;
    for n in 0..=n_max {
        for x in x_set.simplices(n) {
            checked += 1;
            let fast = is_degenerate(x_set, &x).unwrap();
            let slow = oracle.is_degenerate(&x).unwrap();
            if fast != slow {
                out.push(format!(
                    "{}: {} fast {fast} vs oracle {slow}",
                    instance.name,
                    x.display(x_set.edges())
                ));
            }
            match ez_decompose(x_set, &x) {
                Ok(ez) => {
                    if ez.base.act(&ez.surjection).unwrap() != x
                        || ez.base.has_offdiagonal_identity(x_set.edges())
                    {
                        out.push(format!(
                            "{}: bad factorization of {}",
                            instance.name,
                            x.display(x_set.edges())
                        ));
                    }
                }
                Err(e) => out.push(format!("{}: ez_decompose failed: {e}", instance.name)),
            }
        }
    }
    (out, checked)
}

/// Spininess by the standard spine agrees with the all-spines check up to
/// degree `min(N, 4)` and with the literal Segal check on every listed
/// level. Returns the common verdict, or the disagreement.
pub fn spine_agreement(instance: &Instance) -> Result<bool, String> {
    let x = &instance.set;
    let fast = is_spiny(x);
    let all = is_spiny_all_spines(x, 4).map_err(|e| e.to_string())?;
    let literal = (1..=x.truncation().min(4)).all(|n| standard_spine_collision(x, n).is_none());
    if fast == all && fast == literal {
        Ok(fast)
    } else {
        Err(format!(
            "{}: is_spiny {fast}, all spines {all}, literal {literal}",
            instance.name
        ))
    }
}

/// The automorphism lemmas on nondegenerate simplices of degree at most 3:
///
/// * for surjections `σ, τ: [m] ->> [k]` fixing 0 (`m <= min(N, 4)`), equal
///   first rows of `x·σ` and `x·τ` force `σ = τ`;
/// * an endomorphism `α` of `[k]` with `x·α = x` is a bijection;
/// * any two factorizations `x = y·σ = y'·σ'` through nondegenerate
///   simplices (simplices of degree `<= min(N, 3)`) differ by a unique
///   automorphism `α` with `y = y'·α` and `α∘σ = σ'`.
///
/// Returns the violations and the number of (simplex, map) cases checked.
pub fn automorphism_lemmas(instance: &Instance) -> (Violations, usize) {
    let x_set = &instance.set;
    let n = x_set.truncation();
    let mut out = Vec::new();
    let mut cases = 0;
    for k in 0..=n.min(3) {
        for x in x_set.nondegenerate(k) {
            for m in k..=n.min(4) {
                let surj: Vec<FiniteMap> = FiniteMap::surjections(m, k)
                    .filter(|s| s.apply(0) == 0)
                    .collect();
                let rows: Vec<Vec<_>> = surj
                    .iter()
                    .map(|s| x.act(s).unwrap().row(0).to_vec())
                    .collect();
                for a in 0..surj.len() {
                    for b in a + 1..surj.len() {
                        cases += 1;
                        if rows[a] == rows[b] {
                            out.push(format!(
                                "{}: {} has equal first rows under {} and {}",
                                instance.name,
                                x.display(x_set.edges()),
                                surj[a],
                                surj[b]
                            ));
                        }
                    }
                }
            }
            for alpha in FiniteMap::all(k, k) {
                cases += 1;
                if !alpha.is_bijective() && x.act(&alpha).unwrap() == *x {
                    out.push(format!(
                        "{}: {} is fixed by the non-bijective {alpha}",
                        instance.name,
                        x.display(x_set.edges())
                    ));
                }
            }
        }
    }
    for m in 0..=n.min(3) {
        for x in x_set.simplices(m) {
            let factorizations = all_factorizations(x_set, &x);
            cases += 1;
            if factorizations.is_empty() {
                out.push(format!(
                    "{}: {} has no factorization",
                    instance.name,
                    x.display(x_set.edges())
                ));
            }
            for (y, s) in &factorizations {
                for (y2, s2) in &factorizations {
                    if !related_by_automorphism(y, s, y2, s2) {
                        out.push(format!(
                            "{}: factorizations of {} through {s} and {s2} are unrelated",
                            instance.name,
                            x.display(x_set.edges())
                        ));
                    }
                }
            }
        }
    }
    (out, cases)
}

/// Every `(y, σ)` with `σ` any surjection and `y` nondegenerate, `y·σ = x`.
pub fn all_factorizations(
    x_set: &TruncatedSymSet,
    x: &SimplexMatrix,
) -> Vec<(SimplexMatrix, FiniteMap)> {
    let m = x.degree();
    let mut out = Vec::new();
    for k in 0..=m {
        for sigma in FiniteMap::surjections(m, k) {
            let y = x.act(&sigma.minimal_section().unwrap()).unwrap();
            if x_set.nondegenerate(k).contains(&y) && y.act(&sigma).unwrap() == *x {
                out.push((y, sigma));
            }
        }
    }
    out
}

/// Whether some bijection `α` has `α∘σ = σ'` and `y = y'·α`; such an `α`
/// is unique because `σ` is surjective.
fn related_by_automorphism(
    y: &SimplexMatrix,
    sigma: &FiniteMap,
    y2: &SimplexMatrix,
    sigma2: &FiniteMap,
) -> bool {
    let k = sigma.target_degree();
    if sigma2.target_degree() != k {
        return false;
    }
    let mut values = vec![usize::MAX; k + 1];
    for (i, &s) in sigma.values().iter().enumerate() {
        let t = sigma2.apply(i);
        if values[s] != usize::MAX && values[s] != t {
            return false;
        }
        values[s] = t;
    }
    let alpha = FiniteMap::new(k, values).unwrap();
    alpha.is_bijective() && y2.act(&alpha).unwrap() == *y
}

/// Skeleta are idempotent, monotone, exhaust the set at its dimension and
/// validate.
pub fn skeleton_laws(instance: &Instance) -> Violations {
    let x = &instance.set;
    let mut out = Vec::new();
    let n_max = x.truncation();
    let sk: Vec<TruncatedSymSet> = (0..=n_max).map(|n| skeleton(x, n).unwrap()).collect();
    for (n, s) in sk.iter().enumerate() {
        if !s.validate().is_valid() {
            out.push(format!("{}: skeleton {n} is invalid", instance.name));
        }
        if skeleton(s, n).unwrap() != *s {
            out.push(format!("{}: skeleton {n} is not idempotent", instance.name));
        }
        if n > 0 {
            let below = &sk[n - 1];
            let contained =
                (0..=n_max).all(|k| below.nondegenerate(k).is_subset(s.nondegenerate(k)));
            if !contained {
                out.push(format!(
                    "{}: skeleton {} not inside skeleton {n}",
                    instance.name,
                    n - 1
                ));
            }
        }
    }
    let d = dimension(x).unwrap();
    if sk[d.min(n_max)] != *x {
        out.push(format!(
            "{}: skeleton at the dimension differs from X",
            instance.name
        ));
    }
    if d > 0 && sk[d - 1] == *x {
        out.push(format!(
            "{}: skeleton below the dimension equals X",
            instance.name
        ));
    }
    out
}

/// Largest `n` with an `n`-chain of morphisms whose matrix has no identity
/// off the diagonal, found by depth-first search over the composition
/// table alone.
pub fn brute_force_groupoid_dimension(p: &GroupoidPresentation) -> usize {
    fn extend(p: &GroupoidPresentation, column: &[usize], depth: usize, best: &mut usize) {
        // `column[i]` is the composite from vertex i to the current last
        // vertex; adding g: last -> next gives composites g ∘ column[i].
        *best = (*best).max(depth);
        let last = *column.last().unwrap();
        let cod = p.morphisms()[last].cod;
        for (g, m) in p.morphisms().iter().enumerate() {
            if m.dom != cod || p.is_identity(g) {
                continue;
            }
            let mut next: Vec<usize> = column
                .iter()
                .map(|&c| p.compose(c, g).expect("composable"))
                .collect();
            if next.iter().any(|&c| p.is_identity(c)) {
                continue;
            }
            next.push(p.identities()[m.cod]);
            extend(p, &next, depth + 1, best);
        }
    }
    let mut best = 0;
    for &id in p.identities() {
        extend(p, &[id], 0, &mut best);
    }
    best
}

/// Transporter dimension agrees with the closed formula and with a brute
/// force chain search. Returns the three values on success.
pub fn locality(spec: &TransporterSpec) -> Result<(usize, usize, usize), String> {
    let outcome = transporter_groupoid(spec, false).map_err(|e| e.to_string())?;
    let d = dimension(&outcome.nerve).map_err(|e| e.to_string())?;
    let formula = locality_dimension_formula(spec).map_err(|e| e.to_string())?;
    let brute = brute_force_groupoid_dimension(&outcome.presentation);
    if d == formula && d == brute {
        Ok((d, formula, brute))
    } else {
        Err(format!(
            "dimension {d}, formula {formula}, brute force {brute}"
        ))
    }
}

/// Sorted nondegenerate counts per degree, trailing zeros removed.
pub fn trimmed_counts(x: &TruncatedSymSet) -> Vec<usize> {
    let mut c = x.nondegenerate_counts();
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

/// Non-identity edge names, sorted.
pub fn edge_names(x: &TruncatedSymSet) -> BTreeSet<String> {
    let e = x.edges();
    e.nonidentity_edges()
        .map(|f| e.edge_name(f).to_string())
        .collect()
}
