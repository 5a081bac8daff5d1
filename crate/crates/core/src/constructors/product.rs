//! Products of partial groupoids.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::analysis::is_spiny;
use crate::error::{Error, Result};
use crate::symcore::{
    identity_name, EdgeId, EdgeSpec, EdgeStructure, ObjectId, SimplexMatrix, TruncatedSymSet,
};

fn require_valid_spiny(x_set: &TruncatedSymSet, which: &str) -> Result<()> {
    let report = x_set.validate();
    if !report.is_valid() {
        return Err(Error::InvalidInput(format!(
            "{which} factor is invalid: {report}"
        )));
    }
    if let Some(c) = crate::analysis::spine_collision(x_set) {
        return Err(Error::NotSpiny(format!(
            "{which} factor: {} and {} share a spine",
            c.first.display(x_set.edges()),
            c.second.display(x_set.edges())
        )));
    }
    debug_assert!(is_spiny(x_set));
    Ok(())
}

/// For every nondegenerate simplex `b` of degree `< N`, the last columns
/// (above the diagonal) of the nondegenerate simplices whose last face is `b`.
struct ExtensionIndex {
    columns: HashMap<SimplexMatrix, Vec<Vec<EdgeId>>>,
}

impl ExtensionIndex {
    fn new(x_set: &TruncatedSymSet) -> Self {
        let mut columns: HashMap<SimplexMatrix, Vec<Vec<EdgeId>>> = HashMap::new();
        for k in 1..=x_set.truncation() {
            for y in x_set.nondegenerate(k) {
                let column: Vec<EdgeId> = (0..k).map(|i| y.get(i, k)).collect();
                columns.entry(y.face(k)).or_default().push(column);
            }
        }
        ExtensionIndex { columns }
    }

    /// Last columns of all simplices (degenerate ones included) whose last
    /// face is `u`. A new vertex either repeats an existing vertex of `u`
    /// or extends the nondegenerate base of `u` by a fresh vertex.
    fn extensions(&self, u: &SimplexMatrix) -> Vec<Vec<EdgeId>> {
        let (sigma, reps) = u.row_classes();
        let base = u.act_unchecked(&reps);
        let mut out: Vec<Vec<EdgeId>> = reps
            .iter()
            .map(|&r| (0..u.side()).map(|i| u.get(i, r)).collect())
            .collect();
        if let Some(fresh) = self.columns.get(&base) {
            for column in fresh {
                out.push(sigma.values().iter().map(|&c| column[c]).collect());
            }
        }
        out
    }
}

/// The product `X × Y`: objects and edges are pairs, simplices are
/// entrywise pairs of simplices of equal degree. The truncation is
/// `(N_X + 1)(N_Y + 1) - 1`, the largest degree in which nondegenerate
/// simplices can occur.
///
/// Nondegenerate simplices are generated vertex by vertex: a pair is
/// nondegenerate exactly when no two vertices are repeated in both factors,
/// and its last face is again nondegenerate.
pub fn product(x_set: &TruncatedSymSet, y_set: &TruncatedSymSet) -> Result<TruncatedSymSet> {
    require_valid_spiny(x_set, "first")?;
    require_valid_spiny(y_set, "second")?;
    let (ex, ey) = (x_set.edges(), y_set.edges());

    let objects: Vec<String> = ex
        .objects()
        .flat_map(|a| {
            ey.objects()
                .map(move |b| format!("({},{})", ex.object_name(a), ey.object_name(b)))
        })
        .collect();
    let object_of = |a: ObjectId, b: ObjectId| &objects[a.index() * ey.object_count() + b.index()];
    let pair_name = |f: EdgeId, g: EdgeId| format!("({},{})", ex.edge_name(f), ey.edge_name(g));
    let mut specs = Vec::new();
    for f in ex.edges() {
        for g in ey.edges() {
            if ex.is_identity(f) && ey.is_identity(g) {
                continue;
            }
            specs.push(EdgeSpec::new(
                pair_name(f, g),
                object_of(ex.dom(f), ey.dom(g)).clone(),
                object_of(ex.cod(f), ey.cod(g)).clone(),
                pair_name(ex.inv(f), ey.inv(g)),
            ));
        }
    }
    let edges = EdgeStructure::new(objects.clone(), specs)?;
    let mut pair_edge = vec![vec![EdgeId(0); ey.edge_count()]; ex.edge_count()];
    let mut next = edges.object_count() as u32;
    for f in ex.edges() {
        for g in ey.edges() {
            pair_edge[f.index()][g.index()] = if ex.is_identity(f) && ey.is_identity(g) {
                let o = ex.dom(f).index() * ey.object_count() + ey.dom(g).index();
                debug_assert_eq!(
                    edges.edge_name(EdgeId(o as u32)),
                    identity_name(&objects[o])
                );
                EdgeId(o as u32)
            } else {
                next += 1;
                EdgeId(next - 1)
            };
        }
    }

    let truncation = (x_set.truncation() + 1) * (y_set.truncation() + 1) - 1;
    let (ix, iy) = (ExtensionIndex::new(x_set), ExtensionIndex::new(y_set));
    let mut higher: BTreeMap<usize, BTreeSet<SimplexMatrix>> =
        (2..=truncation).map(|k| (k, BTreeSet::new())).collect();
    let ctx = Context {
        ex,
        ey,
        ix: &ix,
        iy: &iy,
        pair_edge: &pair_edge,
    };
    for a in ex.objects() {
        for b in ey.objects() {
            let u = SimplexMatrix::object(ex, a);
            let v = SimplexMatrix::object(ey, b);
            ctx.grow(&u, &v, &mut higher);
        }
    }
    TruncatedSymSet::from_parts(edges, truncation, higher)
}

struct Context<'a> {
    ex: &'a EdgeStructure,
    ey: &'a EdgeStructure,
    ix: &'a ExtensionIndex,
    iy: &'a ExtensionIndex,
    pair_edge: &'a [Vec<EdgeId>],
}

impl Context<'_> {
    fn grow(
        &self,
        u: &SimplexMatrix,
        v: &SimplexMatrix,
        higher: &mut BTreeMap<usize, BTreeSet<SimplexMatrix>>,
    ) {
        let degree = u.degree();
        if degree >= 2 {
            let pair = SimplexMatrix::from_fn(degree, |i, j| {
                self.pair_edge[u.get(i, j).index()][v.get(i, j).index()]
            });
            higher
                .get_mut(&degree)
                .expect("degree within the product truncation")
                .insert(pair);
        }
        let cu = self.ix.extensions(u);
        let cv = self.iy.extensions(v);
        for col_u in &cu {
            for col_v in &cv {
                let repeats = col_u
                    .iter()
                    .zip(col_v)
                    .any(|(&f, &g)| self.ex.is_identity(f) && self.ey.is_identity(g));
                if repeats {
                    continue;
                }
                let u2 = u.extend_with_column(self.ex, col_u);
                let v2 = v.extend_with_column(self.ey, col_v);
                self.grow(&u2, &v2, higher);
            }
        }
    }
}
