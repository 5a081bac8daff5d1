//! Truncated symmetric sets in matrix form.
//!
//! A [`TruncatedSymSet`] stores, for every degree up to its truncation
//! bound `N`, the set of *nondegenerate* simplex matrices. Degenerate
//! simplices are never stored: a matrix with two identical rows `i` and
//! `j` is the image of the matrix with row `j` deleted under the surjection
//! identifying `i` and `j`, so the full level `X_n` is
//!
//! ```text
//! X_n = { y · sigma : y nondegenerate of degree k <= min(n, N), sigma: [n] ->> [k] }
//! ```
//!
//! This describes the `N`-skeletal symmetric set generated by the stored
//! data, and makes sense for every `n`, including `n > N`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use super::edges::{EdgeId, EdgeStructure};
use super::map::FiniteMap;
use super::matrix::SimplexMatrix;
use crate::error::{Error, Result};

static EMPTY_LAYER: BTreeSet<SimplexMatrix> = BTreeSet::new();

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSymSet {
    truncation: usize,
    edges: EdgeStructure,
    /// `layers[k]` holds the nondegenerate `k`-simplices, `0 <= k <= N`.
    layers: Vec<BTreeSet<SimplexMatrix>>,
}

impl TruncatedSymSet {
    /// Assembles a symmetric set from an edge structure and the stored
    /// simplices of degree 2 and above, without checking closure. Use
    /// [`TruncatedSymSet::validate`] to audit the result, or
    /// [`closure_generate`] to obtain the smallest valid set containing the
    /// given simplices.
    pub fn from_parts(
        edges: EdgeStructure,
        truncation: usize,
        higher: BTreeMap<usize, BTreeSet<SimplexMatrix>>,
    ) -> Result<Self> {
        if truncation == 0 {
            return Err(Error::InvalidInput("truncation must be at least 1".into()));
        }
        let mut layers = base_layers(&edges, truncation);
        for (degree, set) in higher {
            if degree < 2 {
                return Err(Error::InvalidInput(format!(
                    "degree {degree} simplices are determined by the edge structure"
                )));
            }
            if degree > truncation {
                return Err(Error::TruncationExceeded { degree, truncation });
            }
            if let Some(bad) = set.iter().find(|x| x.degree() != degree) {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: bad.degree(),
                });
            }
            layers[degree] = set;
        }
        Ok(TruncatedSymSet {
            truncation,
            edges,
            layers,
        })
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn edges(&self) -> &EdgeStructure {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.edges.object_count() == 0
    }

    pub fn is_reduced(&self) -> bool {
        self.edges.object_count() == 1
    }

    /// Nondegenerate simplices of degree `k` (empty above the truncation).
    pub fn nondegenerate(&self, k: usize) -> &BTreeSet<SimplexMatrix> {
        self.layers.get(k).unwrap_or(&EMPTY_LAYER)
    }

    /// Stored simplices of degree 2 and above, keyed by degree.
    pub fn higher_layers(&self) -> BTreeMap<usize, BTreeSet<SimplexMatrix>> {
        (2..=self.truncation)
            .map(|k| (k, self.layers[k].clone()))
            .collect()
    }

    /// Number of nondegenerate simplices in each degree `0..=N`.
    pub fn nondegenerate_counts(&self) -> Vec<usize> {
        self.layers.iter().map(BTreeSet::len).collect()
    }

    pub fn total_nondegenerate(&self) -> usize {
        self.layers.iter().map(BTreeSet::len).sum()
    }

    /// Highest degree carrying a nondegenerate simplex.
    pub fn top_degree(&self) -> Option<usize> {
        self.layers.iter().rposition(|l| !l.is_empty())
    }

    /// Membership in `X_n` for `n = x.degree()`, any `n`.
    pub fn contains(&self, x: &SimplexMatrix) -> bool {
        if x.well_formedness_violation(&self.edges).is_some() {
            return false;
        }
        self.contains_well_formed(x)
    }

    pub(crate) fn contains_well_formed(&self, x: &SimplexMatrix) -> bool {
        let (base, _) = x.split_repeated_rows();
        self.nondegenerate(base.degree()).contains(&base)
    }

    /// `x · alpha` for `alpha: [m] -> [n]`, with `m` bounded by the truncation.
    pub fn apply_map(&self, x: &SimplexMatrix, alpha: &FiniteMap) -> Result<SimplexMatrix> {
        if alpha.source_degree() > self.truncation {
            return Err(Error::TruncationExceeded {
                degree: alpha.source_degree(),
                truncation: self.truncation,
            });
        }
        if x.degree() > self.truncation {
            return Err(Error::TruncationExceeded {
                degree: x.degree(),
                truncation: self.truncation,
            });
        }
        x.act(alpha)
    }

    /// Every simplex of degree `n`, each exactly once, grouped by the
    /// degree of its nondegenerate base.
    pub fn simplices(&self, n: usize) -> impl Iterator<Item = SimplexMatrix> + '_ {
        (0..=n.min(self.truncation)).flat_map(move |k| {
            let layer = &self.layers[k];
            FiniteMap::canonical_surjections(n, k)
                .into_iter()
                .flat_map(move |sigma| layer.iter().map(move |y| y.act_unchecked(sigma.values())))
        })
    }

    /// `|X_n|`, computed from the nondegenerate counts.
    pub fn simplex_count(&self, n: usize) -> u128 {
        (0..=n.min(self.truncation))
            .map(|k| self.layers[k].len() as u128 * stirling2(n + 1, k + 1))
            .sum()
    }

    /// `X_n` as a sorted set.
    pub fn materialize(&self, n: usize) -> BTreeSet<SimplexMatrix> {
        self.simplices(n).collect()
    }

    /// All levels `X_0, ..., X_N` written out explicitly.
    pub fn to_explicit(&self) -> ExplicitSymSet {
        ExplicitSymSet {
            truncation: self.truncation,
            edges: self.edges.clone(),
            layers: (0..=self.truncation).map(|n| self.materialize(n)).collect(),
        }
    }

    /// Audits every invariant: edge-structure axioms, matrix well-formedness,
    /// nondegeneracy of stored matrices, and closure under the action of all
    /// maps between degrees `<= N`.
    ///
    /// Degeneracy images are present by construction, and every map factors
    /// through elementary faces, elementary degeneracies and adjacent
    /// transpositions, so it suffices to check that stored simplices have
    /// their faces in the set and their orbits under adjacent transpositions
    /// stored.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for problem in self.edges.axiom_violations() {
            report.push(Violation::EdgeAxiom(problem));
        }
        for k in 2..=self.truncation {
            for x in &self.layers[k] {
                let shown = x.display(&self.edges).to_string();
                if let Some(reason) = x.well_formedness_violation(&self.edges) {
                    report.push(Violation::Malformed {
                        degree: k,
                        matrix: shown,
                        reason,
                    });
                    continue;
                }
                if x.has_repeated_row() {
                    report.push(Violation::StoredDegenerate {
                        degree: k,
                        matrix: shown.clone(),
                    });
                }
                for skip in 0..=k {
                    let face = x.face(skip);
                    if !self.contains_well_formed(&face) {
                        report.push(Violation::Closure {
                            source: shown.clone(),
                            map: FiniteMap::face(k, skip),
                            image: face.display(&self.edges).to_string(),
                        });
                    }
                }
                for i in 0..k {
                    let tau = FiniteMap::transposition(k, i, i + 1).expect("in range");
                    let image = x.act_unchecked(tau.values());
                    if !self.layers[k].contains(&image) {
                        report.push(Violation::Closure {
                            source: shown.clone(),
                            map: tau,
                            image: image.display(&self.edges).to_string(),
                        });
                    }
                }
            }
        }
        report
    }

    /// Restricts to the given nondegenerate simplices of degree 2 and above
    /// (and to the objects and edges selected), keeping the truncation.
    pub(crate) fn restricted(
        &self,
        keep_object: impl Fn(super::edges::ObjectId) -> bool,
        keep_edge: impl Fn(EdgeId) -> bool,
        keep_simplex: impl Fn(&SimplexMatrix) -> bool,
    ) -> Result<TruncatedSymSet> {
        let (edges, remap) = self.edges.restrict(keep_object, keep_edge)?;
        let mut higher = BTreeMap::new();
        for k in 2..=self.truncation {
            let mut layer = BTreeSet::new();
            for x in self.layers[k].iter().filter(|x| keep_simplex(x)) {
                let entries = x
                    .entries()
                    .iter()
                    .map(|e| {
                        remap[e.index()].ok_or_else(|| {
                            Error::InvalidInput(format!(
                                "kept simplex uses dropped edge `{}`",
                                self.edges.edge_name(*e)
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                layer.insert(SimplexMatrix::new(k, entries)?);
            }
            higher.insert(k, layer);
        }
        TruncatedSymSet::from_parts(edges, self.truncation, higher)
    }

    /// The same data viewed at a different truncation bound. Raising the
    /// bound keeps the skeletal extension; lowering it drops simplices.
    pub fn with_truncation(&self, truncation: usize) -> Result<TruncatedSymSet> {
        let higher = (2..=truncation.min(self.truncation))
            .map(|k| (k, self.layers[k].clone()))
            .collect();
        TruncatedSymSet::from_parts(self.edges.clone(), truncation, higher)
    }
}

fn base_layers(edges: &EdgeStructure, truncation: usize) -> Vec<BTreeSet<SimplexMatrix>> {
    let mut layers = vec![BTreeSet::new(); truncation + 1];
    layers[0] = edges
        .objects()
        .map(|o| SimplexMatrix::object(edges, o))
        .collect();
    layers[1] = edges
        .nonidentity_edges()
        .map(|f| SimplexMatrix::edge(edges, f))
        .collect();
    layers
}

/// Stirling numbers of the second kind: partitions of an `n`-set into `k`
/// nonempty blocks.
pub fn stirling2(n: usize, k: usize) -> u128 {
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = j as u128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

/// The smallest truncated symmetric set over `edges` with truncation `N`
/// containing `generators`, obtained by saturating under faces and
/// permutations (degeneracy images are implicit).
pub fn closure_generate(
    edges: &EdgeStructure,
    truncation: usize,
    generators: impl IntoIterator<Item = SimplexMatrix>,
) -> Result<TruncatedSymSet> {
    let mut set = TruncatedSymSet::from_parts(edges.clone(), truncation, BTreeMap::new())?;
    let mut work: Vec<SimplexMatrix> = Vec::new();
    for g in generators {
        if g.degree() > truncation {
            return Err(Error::TruncationExceeded {
                degree: g.degree(),
                truncation,
            });
        }
        if let Some(reason) = g.well_formedness_violation(edges) {
            return Err(Error::MalformedSimplex(format!(
                "generator {}: {reason}",
                g.display(edges)
            )));
        }
        work.push(g);
    }
    while let Some(x) = work.pop() {
        let (base, _) = x.split_repeated_rows();
        let k = base.degree();
        if k <= 1 || set.layers[k].contains(&base) {
            continue;
        }
        for pi in FiniteMap::permutations(k) {
            set.layers[k].insert(base.act_unchecked(pi.values()));
        }
        work.extend((0..=k).map(|skip| base.face(skip)));
    }
    Ok(set)
}

/// One violated invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EdgeAxiom(String),
    Malformed {
        degree: usize,
        matrix: String,
        reason: String,
    },
    StoredDegenerate {
        degree: usize,
        matrix: String,
    },
    MissingBasic {
        what: String,
    },
    Closure {
        source: String,
        map: FiniteMap,
        image: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeAxiom(msg) => write!(f, "edge structure: {msg}"),
            Violation::Malformed {
                degree,
                matrix,
                reason,
            } => write!(f, "malformed {degree}-simplex {matrix}: {reason}"),
            Violation::StoredDegenerate { degree, matrix } => {
                write!(f, "stored {degree}-simplex {matrix} is degenerate")
            }
            Violation::MissingBasic { what } => write!(f, "missing {what}"),
            Violation::Closure { source, map, image } => write!(
                f,
                "closure: {source} acted on by {map} gives {image}, which is missing"
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A truncated symmetric set with every level listed explicitly, degenerate
/// simplices included. Arbitrary (possibly non-closed) data can be put in
/// this form and audited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitSymSet {
    pub truncation: usize,
    pub edges: EdgeStructure,
    /// `layers[n]` is `X_n` for `0 <= n <= N`.
    pub layers: Vec<BTreeSet<SimplexMatrix>>,
}

impl ExplicitSymSet {
    /// Checks the presheaf axioms directly on the listed levels: objects and
    /// edges present, matrices well formed, closure under elementary faces,
    /// elementary degeneracies and adjacent transpositions, and presence of
    /// every degeneracy image of an object or edge.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let edges = &self.edges;
        for problem in edges.axiom_violations() {
            report.push(Violation::EdgeAxiom(problem));
        }
        if self.layers.len() != self.truncation + 1 {
            report.push(Violation::MissingBasic {
                what: format!("levels: expected {}", self.truncation + 1),
            });
            return report;
        }
        for o in edges.objects() {
            if !self.layers[0].contains(&SimplexMatrix::object(edges, o)) {
                report.push(Violation::MissingBasic {
                    what: format!("object `{}`", edges.object_name(o)),
                });
            }
        }
        for e in edges.edges() {
            if !self.layers[1].contains(&SimplexMatrix::edge(edges, e)) {
                report.push(Violation::MissingBasic {
                    what: format!("edge `{}`", edges.edge_name(e)),
                });
            }
        }
        let present: Vec<HashSet<&SimplexMatrix>> =
            self.layers.iter().map(|l| l.iter().collect()).collect();
        let check = |source: &SimplexMatrix, map: FiniteMap, report: &mut ValidationReport| {
            let image = source.act_unchecked(map.values());
            if !present[image.degree()].contains(&image) {
                report.push(Violation::Closure {
                    source: source.display(edges).to_string(),
                    map,
                    image: image.display(edges).to_string(),
                });
            }
        };
        for (n, layer) in self.layers.iter().enumerate() {
            for x in layer {
                if x.degree() != n {
                    report.push(Violation::Malformed {
                        degree: n,
                        matrix: x.display(edges).to_string(),
                        reason: format!("listed at degree {n} but has degree {}", x.degree()),
                    });
                    continue;
                }
                if let Some(reason) = x.well_formedness_violation(edges) {
                    report.push(Violation::Malformed {
                        degree: n,
                        matrix: x.display(edges).to_string(),
                        reason,
                    });
                    continue;
                }
                if n <= 1 {
                    for m in 1..=self.truncation {
                        for sigma in FiniteMap::surjections(m, n) {
                            check(x, sigma, &mut report);
                        }
                    }
                }
                if n >= 1 {
                    for skip in 0..=n {
                        check(x, FiniteMap::face(n, skip), &mut report);
                    }
                    for i in 0..n {
                        check(
                            x,
                            FiniteMap::transposition(n, i, i + 1).unwrap(),
                            &mut report,
                        );
                    }
                }
                if n < self.truncation {
                    for i in 0..=n {
                        check(x, FiniteMap::degeneracy(n, i), &mut report);
                    }
                }
            }
        }
        report
    }

    /// Keeps only the nondegenerate simplices.
    pub fn to_truncated(&self) -> Result<TruncatedSymSet> {
        let higher = (2..=self.truncation)
            .map(|n| {
                let nd = self.layers[n]
                    .iter()
                    .filter(|x| !x.has_repeated_row())
                    .cloned()
                    .collect();
                (n, nd)
            })
            .collect();
        TruncatedSymSet::from_parts(self.edges.clone(), self.truncation, higher)
    }
}
