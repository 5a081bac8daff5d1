//! Spines (trees on the vertex set `[n]`) and spine evaluation.

use std::collections::BTreeSet;

use super::edges::{EdgeId, EdgeStructure, ObjectId};
use super::matrix::SimplexMatrix;
use crate::error::{Error, Result};

/// Largest degree for which [`all_spines`] enumerates trees by default.
pub const DEFAULT_SPINE_CAP: usize = 5;

/// A tree with vertex set `[n]`, its edges stored as sorted pairs `(i, j)`
/// with `i < j`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Spine {
    degree: usize,
    tree_edges: Vec<(usize, usize)>,
}

impl Spine {
    pub fn new(degree: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let set: BTreeSet<(usize, usize)> = pairs
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let tree_edges: Vec<_> = set.into_iter().collect();
        if degree == 0 {
            return Err(Error::InvalidInput("spines have degree at least 1".into()));
        }
        if tree_edges.len() != degree {
            return Err(Error::InvalidInput(format!(
                "a spine of [{degree}] has {degree} edges, got {}",
                tree_edges.len()
            )));
        }
        if tree_edges.iter().any(|&(a, b)| a == b || b > degree) {
            return Err(Error::InvalidInput("spine edge out of range".into()));
        }
        let mut parent: Vec<usize> = (0..=degree).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &tree_edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Error::InvalidInput("spine edges contain a cycle".into()));
            }
            parent[ra] = rb;
        }
        Ok(Spine { degree, tree_edges })
    }

    /// Edges `{i-1, i}`.
    pub fn standard(degree: usize) -> Self {
        Spine {
            degree,
            tree_edges: (1..=degree).map(|i| (i - 1, i)).collect(),
        }
    }

    /// Edges `{0, i}`.
    pub fn starry(degree: usize) -> Self {
        Spine {
            degree,
            tree_edges: (1..=degree).map(|i| (0, i)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }
}

/// An element of the limit of a symmetric set over a spine: one edge per
/// tree edge `{i, j}` (`i < j`), running from the object at vertex `i` to
/// the object at vertex `j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainTuple {
    pub spine: Spine,
    pub components: Vec<EdgeId>,
}

impl ChainTuple {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Checks the matching conditions of the limit: the vertex objects
    /// implied by the components agree wherever tree edges meet.
    pub fn is_matching(&self, edges: &EdgeStructure) -> bool {
        if self.components.len() != self.spine.degree {
            return false;
        }
        let mut labels: Vec<Option<ObjectId>> = vec![None; self.spine.degree + 1];
        let mut assign = |v: usize, o: ObjectId| match labels[v] {
            Some(existing) => existing == o,
            None => {
                labels[v] = Some(o);
                true
            }
        };
        self.spine
            .tree_edges
            .iter()
            .zip(&self.components)
            .all(|(&(i, j), &f)| assign(i, edges.dom(f)) && assign(j, edges.cod(f)))
    }
}

/// Every labelled tree on the vertex set `[n]`, in lexicographic order of
/// sorted edge lists. There are `(n + 1)^(n - 1)` of them.
pub fn all_spines(n: usize) -> Result<Vec<Spine>> {
    all_spines_capped(n, DEFAULT_SPINE_CAP)
}

/// [`all_spines`] with an explicit cap on `n`.
pub fn all_spines_capped(n: usize, cap: usize) -> Result<Vec<Spine>> {
    if n > cap {
        return Err(Error::CapExceeded { degree: n, cap });
    }
    if n == 0 {
        return Err(Error::InvalidInput("spines have degree at least 1".into()));
    }
    if n == 1 {
        return Ok(vec![Spine::standard(1)]);
    }
    // Decode every Pruefer sequence of length n - 1 over n + 1 labels.
    let vertices = n + 1;
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 1];
    loop {
        out.push(decode_pruefer(&seq, vertices));
        let mut pos = seq.len();
        loop {
            if pos == 0 {
                out.sort();
                return Ok(out);
            }
            pos -= 1;
            if seq[pos] + 1 < vertices {
                seq[pos] += 1;
                break;
            }
            seq[pos] = 0;
        }
    }
}

fn decode_pruefer(seq: &[usize], vertices: usize) -> Spine {
    let mut degree = vec![1usize; vertices];
    for &s in seq {
        degree[s] += 1;
    }
    let mut pairs = Vec::with_capacity(vertices - 1);
    for &s in seq {
        let leaf = (0..vertices)
            .find(|&v| degree[v] == 1)
            .expect("a leaf exists");
        pairs.push((leaf.min(s), leaf.max(s)));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..vertices).filter(|&v| degree[v] == 1).collect();
    pairs.push((rest[0], rest[1]));
    pairs.sort();
    Spine {
        degree: vertices - 1,
        tree_edges: pairs,
    }
}

/// The spine map: the component at tree edge `{i, j}`, `i < j`, is `x_ij`.
pub fn spine_eval(x: &SimplexMatrix, spine: &Spine) -> Result<ChainTuple> {
    if x.degree() != spine.degree {
        return Err(Error::DegreeMismatch {
            expected: spine.degree,
            found: x.degree(),
        });
    }
    Ok(ChainTuple {
        spine: spine.clone(),
        components: spine.tree_edges.iter().map(|&(i, j)| x.get(i, j)).collect(),
    })
}
