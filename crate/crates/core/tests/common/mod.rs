//! Shared test corpus: group and groupoid nerves, transporter groupoids,
//! wedges, free partial groups, products and small enumerated partial
//! groups, plus naive oracles used by several suites.

#![allow(dead_code)]

pub mod checks;

use std::collections::{BTreeMap, BTreeSet};

use pgsym_core::analysis::is_spiny;
use pgsym_core::constructors::{
    free_partial_group, nerve_of_group, nerve_of_groupoid, product, transporter_groupoid, wedge,
    GroupTable, GroupoidPresentation, Morphism, TransporterSpec,
};
use pgsym_core::enumeration::{are_isomorphic, enumerate_partial_groups, DEFAULT_ENUMERATION_CAP};
use pgsym_core::symcore::{closure_generate, EdgeSpec, EdgeStructure, FiniteMap, SimplexMatrix};
use pgsym_core::{EdgeId, TruncatedSymSet};

/// A named corpus member.
pub struct Instance {
    pub name: String,
    pub set: TruncatedSymSet,
}

impl Instance {
    pub fn new(name: impl Into<String>, set: TruncatedSymSet) -> Self {
        Instance {
            name: name.into(),
            set,
        }
    }
}

/// The groupoid with objects `0..n` and morphisms `(i, j, g)` for every
/// pair of objects and every element `g` of `group`; connected, with every
/// vertex group isomorphic to `group`.
pub fn connected_groupoid(group: &GroupTable, n: usize) -> GroupoidPresentation {
    let objects: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    let order = group.order();
    let index = |i: usize, j: usize, g: usize| (i * n + j) * order + g;
    let mut morphisms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for g in 0..order {
                morphisms.push(Morphism {
                    name: format!("{}:{i}>{j}", group.element_name(g)),
                    dom: i,
                    cod: j,
                });
            }
        }
    }
    let identities = (0..n).map(|i| index(i, i, group.identity())).collect();
    let mut compose = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for g in 0..order {
                    for h in 0..order {
                        compose.insert(
                            (index(i, j, g), index(j, k, h)),
                            index(i, k, group.mul(h, g)),
                        );
                    }
                }
            }
        }
    }
    GroupoidPresentation::new(objects, morphisms, identities, compose).expect("valid groupoid")
}

/// The disjoint union of two groups viewed as a two-object groupoid.
pub fn disjoint_groups(a: &GroupTable, b: &GroupTable) -> GroupoidPresentation {
    let mut morphisms = Vec::new();
    let mut compose = BTreeMap::new();
    let mut identities = Vec::new();
    for (obj, group) in [a, b].into_iter().enumerate() {
        let offset = morphisms.len();
        for g in 0..group.order() {
            morphisms.push(Morphism {
                name: format!("{}@{obj}", group.element_name(g)),
                dom: obj,
                cod: obj,
            });
        }
        identities.push(offset + group.identity());
        for g in 0..group.order() {
            for h in 0..group.order() {
                compose.insert((offset + g, offset + h), offset + group.mul(h, g));
            }
        }
    }
    GroupoidPresentation::new(vec!["a".into(), "b".into()], morphisms, identities, compose)
        .expect("valid groupoid")
}

pub fn group(g: &GroupTable) -> TruncatedSymSet {
    nerve_of_group(g).expect("group nerve")
}

pub fn c(n: usize) -> TruncatedSymSet {
    group(&GroupTable::cyclic(n))
}

pub fn f1() -> TruncatedSymSet {
    free_partial_group(1).expect("free partial group")
}

/// Conjugacy class of the subgroup generated by `(12)` in S₃.
pub fn s3_sylow2_spec() -> TransporterSpec {
    let g = GroupTable::symmetric3();
    let delta = ["(12)", "(13)", "(23)"]
        .iter()
        .map(|t| g.generated_subgroup(&[g.element_by_name(t).unwrap()]))
        .collect();
    TransporterSpec { group: g, delta }
}

/// The single normal subgroup of order 3 in S₃.
pub fn s3_a3_spec() -> TransporterSpec {
    let g = GroupTable::symmetric3();
    let delta = vec![g.generated_subgroup(&[g.element_by_name("(123)").unwrap()])];
    TransporterSpec { group: g, delta }
}

/// Every subgroup of S₃.
pub fn s3_all_subgroups_spec() -> TransporterSpec {
    let g = GroupTable::symmetric3();
    let mut delta = vec![vec![g.identity()]];
    for name in ["(12)", "(13)", "(23)", "(123)"] {
        delta.push(g.generated_subgroup(&[g.element_by_name(name).unwrap()]));
    }
    delta.push((0..g.order()).collect());
    TransporterSpec { group: g, delta }
}

pub fn transporter(spec: &TransporterSpec) -> TruncatedSymSet {
    transporter_groupoid(spec, false)
        .expect("transporter groupoid")
        .nerve
}

/// Group nerves of order at most 6.
pub fn group_nerves() -> Vec<Instance> {
    vec![
        Instance::new("C1", c(1)),
        Instance::new("C2", c(2)),
        Instance::new("C3", c(3)),
        Instance::new("C4", c(4)),
        Instance::new("V4", group(&GroupTable::klein_four())),
        Instance::new("C5", c(5)),
        Instance::new("S3", group(&GroupTable::symmetric3())),
    ]
}

/// Multi-object groupoid nerves, including transporter groupoids.
pub fn groupoid_nerves() -> Vec<Instance> {
    let trivial = GroupTable::cyclic(1);
    let c2 = GroupTable::cyclic(2);
    let c3 = GroupTable::cyclic(3);
    let nerve = |p: GroupoidPresentation| nerve_of_groupoid(&p).expect("groupoid nerve");
    let g = GroupTable::symmetric3();
    vec![
        Instance::new("codiscrete(2)", nerve(connected_groupoid(&trivial, 2))),
        Instance::new("codiscrete(3)", nerve(connected_groupoid(&trivial, 3))),
        Instance::new("C2 x codiscrete(2)", nerve(connected_groupoid(&c2, 2))),
        Instance::new("C2 + C2", nerve(disjoint_groups(&c2, &c2))),
        Instance::new("C2 + C3", nerve(disjoint_groups(&c2, &c3))),
        Instance::new(
            "transporter(C2, {C2})",
            transporter(&TransporterSpec {
                group: c2.clone(),
                delta: vec![vec![0, 1]],
            }),
        ),
        Instance::new(
            "transporter(S3, Sylow-2 class)",
            transporter(&s3_sylow2_spec()),
        ),
        Instance::new("transporter(S3, {A3})", transporter(&s3_a3_spec())),
        Instance::new(
            "transporter(S3, {1})",
            transporter(&TransporterSpec {
                group: g.clone(),
                delta: vec![vec![g.identity()]],
            }),
        ),
        Instance::new(
            "transporter(S3, all subgroups)",
            transporter(&s3_all_subgroups_spec()),
        ),
    ]
}

/// Partial groups that are not groups.
pub fn partial_groups() -> Vec<Instance> {
    let c2 = c(2);
    let c3 = c(3);
    vec![
        Instance::new("F1", f1()),
        Instance::new("F2", free_partial_group(2).unwrap()),
        Instance::new("C2 v C2", wedge(&c2, &c2).unwrap()),
        Instance::new("C2 v F1", wedge(&c2, &f1()).unwrap()),
        Instance::new("C3 v C2", wedge(&c3, &c2).unwrap()),
        Instance::new("C3 v C3", wedge(&c3, &c3).unwrap()),
        Instance::new("C2 x F1", product(&c2, &f1()).unwrap()),
        Instance::new(
            "skeleton(C3, 1)",
            pgsym_core::analysis::skeleton(&c3, 1).unwrap(),
        ),
    ]
}

/// Small products of dimension at most 3.
pub fn products() -> Vec<Instance> {
    let c2 = c(2);
    vec![
        Instance::new("C2 x C2", product(&c2, &c2).unwrap()),
        Instance::new("C2 x C1", product(&c2, &c(1)).unwrap()),
    ]
}

/// Every partial group with at most `k` elements, one per isomorphism class.
pub fn enumerated(k: usize) -> Vec<Instance> {
    (2..=k)
        .flat_map(|card| {
            enumerate_partial_groups(card, DEFAULT_ENUMERATION_CAP)
                .expect("enumeration")
                .into_iter()
                .enumerate()
                .map(move |(i, p)| Instance::new(format!("enum(k={card})#{i}"), p.representative))
        })
        .collect()
}

/// The standard corpus: every family above plus enumerated partial groups
/// of cardinality at most 3.
pub fn corpus() -> Vec<Instance> {
    let mut all = group_nerves();
    all.extend(groupoid_nerves());
    all.extend(partial_groups());
    all.extend(products());
    all.extend(enumerated(3));
    all
}

/// Corpus members whose levels `X_0..X_N` are small enough to list.
pub fn listable(limit: u128) -> Vec<Instance> {
    corpus()
        .into_iter()
        .filter(|i| (0..=i.set.truncation()).all(|n| i.set.simplex_count(n) <= limit))
        .collect()
}

/// Non-identity edges with domain and codomain `o`, plus the identity.
pub fn automorphism_count(x: &TruncatedSymSet, o: pgsym_core::ObjectId) -> usize {
    let e = x.edges();
    e.edges()
        .filter(|&f| e.dom(f) == o && e.cod(f) == o)
        .count()
}

/// Deliberately broken variants of spiny sets: a nondegenerate simplex of
/// degree 2 or 3 has one off-diagonal pair of entries replaced, and the
/// result is closed up with [`closure_generate`]. Only changes producing a
/// well-formed matrix outside the set are kept. At most `per_source`
/// mutants are drawn from each source.
pub fn mutants(per_source: usize) -> Vec<Instance> {
    let sources = vec![
        Instance::new("C3", c(3)),
        Instance::new("C4", c(4)),
        Instance::new("V4", group(&GroupTable::klein_four())),
        Instance::new("S3", group(&GroupTable::symmetric3())),
        Instance::new("C5", c(5)),
        Instance::new(
            "C2 x codiscrete(2)",
            nerve_of_groupoid(&connected_groupoid(&GroupTable::cyclic(2), 2)).unwrap(),
        ),
        Instance::new(
            "transporter(S3, Sylow-2 class)",
            transporter(&s3_sylow2_spec()),
        ),
    ];
    let mut out = Vec::new();
    for src in &sources {
        let x = &src.set;
        let edges = x.edges();
        let mut made = 0;
        'degrees: for degree in [2usize, 3] {
            for base in x.nondegenerate(degree) {
                let (i, j) = (0, degree);
                for f in edges.nonidentity_edges() {
                    if f == base.get(i, j)
                        || edges.dom(f) != edges.dom(base.get(i, j))
                        || edges.cod(f) != edges.cod(base.get(i, j))
                    {
                        continue;
                    }
                    let mutant = SimplexMatrix::from_fn(degree, |r, s| {
                        if (r, s) == (i, j) {
                            f
                        } else if (r, s) == (j, i) {
                            edges.inv(f)
                        } else {
                            base.get(r, s)
                        }
                    });
                    if x.contains(&mutant) || mutant.has_repeated_row() {
                        continue;
                    }
                    let generators: Vec<SimplexMatrix> = (2..=x.truncation())
                        .flat_map(|k| x.nondegenerate(k).iter().cloned())
                        .chain(std::iter::once(mutant.clone()))
                        .collect();
                    let broken = closure_generate(edges, x.truncation(), generators)
                        .expect("well-formed generators");
                    out.push(Instance::new(
                        format!("{} with {}", src.name, mutant.display(edges)),
                        broken,
                    ));
                    made += 1;
                    if made == per_source {
                        break 'degrees;
                    }
                    // one mutant per base simplex keeps the sample varied
                    break;
                }
            }
        }
    }
    out
}

/// Naive enumeration of partial groups with `k` elements, for `k <= 3`:
/// every involution on the `k - 1` non-identity edges and every subset of
/// the well-formed degree-2 matrices without off-diagonal identities,
/// closed up, filtered by spininess, and reduced modulo isomorphism by
/// pairwise search.
pub fn naive_partial_groups(k: usize) -> Vec<TruncatedSymSet> {
    assert!((2..=3).contains(&k), "the naive oracle covers k = 2, 3");
    let e = k - 1;
    let truncation = e.max(1);
    let mut classes: Vec<TruncatedSymSet> = Vec::new();
    for inv in involutions(e) {
        let specs = (0..e)
            .map(|i| EdgeSpec::new(format!("x{}", i + 1), "*", "*", format!("x{}", inv[i] + 1)))
            .collect();
        let edges = EdgeStructure::new(vec!["*".into()], specs).unwrap();
        let nonid: Vec<EdgeId> = edges.nonidentity_edges().collect();
        let mut candidates: Vec<SimplexMatrix> = Vec::new();
        if truncation >= 2 {
            for &a in &nonid {
                for &b in &nonid {
                    for &c in &nonid {
                        let id = edges.ident(edges.objects().next().unwrap());
                        let rows = vec![
                            vec![id, a, c],
                            vec![edges.inv(a), id, b],
                            vec![edges.inv(c), edges.inv(b), id],
                        ];
                        candidates.push(SimplexMatrix::from_rows(rows).unwrap());
                    }
                }
            }
        }
        for mask in 0u64..(1u64 << candidates.len()) {
            let chosen: Vec<SimplexMatrix> = candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, m)| m.clone())
                .collect();
            let x = closure_generate(&edges, truncation, chosen).unwrap();
            if !x.validate().is_valid() || !is_spiny(&x) {
                continue;
            }
            let new = classes
                .iter()
                .all(|y| are_isomorphic(&x, y).unwrap().is_none());
            if new {
                classes.push(x);
            }
        }
    }
    classes
}

/// All involutions of `0..e` as image vectors.
pub fn involutions(e: usize) -> Vec<Vec<usize>> {
    assert!(e >= 1);
    FiniteMap::permutations(e - 1)
        .filter(|p| (0..e).all(|i| p.apply(p.apply(i)) == i))
        .map(|p| p.values().to_vec())
        .collect()
}

/// Brute-force count of symmetric subsets: every assignment of membership
/// flags to the nondegenerate simplices, kept when nonempty and closed
/// under faces and permutations of members.
pub fn naive_subgroup_count(x: &TruncatedSymSet) -> usize {
    let layers: Vec<Vec<SimplexMatrix>> = (0..=x.truncation())
        .map(|k| x.nondegenerate(k).iter().cloned().collect())
        .collect();
    let all: Vec<(usize, usize)> = layers
        .iter()
        .enumerate()
        .flat_map(|(k, l)| (0..l.len()).map(move |i| (k, i)))
        .collect();
    assert!(all.len() <= 20, "brute force over 2^{} subsets", all.len());
    let mut count = 0;
    for mask in 0u64..(1u64 << all.len()) {
        let members: BTreeSet<&SimplexMatrix> = all
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &(k, i))| &layers[k][i])
            .collect();
        if !members.iter().any(|m| m.degree() == 0) {
            continue;
        }
        let member = |y: &SimplexMatrix| {
            let (base, _) = y.split_repeated_rows();
            members.contains(&base)
        };
        let closed = members.iter().all(|x| {
            let n = x.degree();
            (0..=n).all(|skip| n == 0 || member(&x.face(skip)))
                && FiniteMap::permutations(n).all(|p| member(&x.act(&p).unwrap()))
        });
        if closed {
            count += 1;
        }
    }
    count
}
