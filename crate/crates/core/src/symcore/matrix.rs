//! Matrix form of simplices: an `n`-simplex of a partial groupoid is the
//! `(n+1) x (n+1)` grid of edges `x_ij = x · (0 -> i, 1 -> j)`.

use std::fmt;

use super::edges::{EdgeId, EdgeStructure, ObjectId};
use super::map::FiniteMap;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexMatrix {
    degree: usize,
    entries: Vec<EdgeId>,
}

impl SimplexMatrix {
    /// Builds a matrix of the given degree from row-major entries.
    pub fn new(degree: usize, entries: Vec<EdgeId>) -> Result<Self> {
        let side = degree + 1;
        if entries.len() != side * side {
            return Err(Error::MalformedSimplex(format!(
                "a degree-{degree} matrix needs {} entries, got {}",
                side * side,
                entries.len()
            )));
        }
        Ok(SimplexMatrix { degree, entries })
    }

    pub fn from_rows(rows: Vec<Vec<EdgeId>>) -> Result<Self> {
        let side = rows.len();
        if side == 0 || rows.iter().any(|r| r.len() != side) {
            return Err(Error::MalformedSimplex("matrix rows are not square".into()));
        }
        Ok(SimplexMatrix {
            degree: side - 1,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(degree: usize, mut f: impl FnMut(usize, usize) -> EdgeId) -> Self {
        let side = degree + 1;
        let mut entries = Vec::with_capacity(side * side);
        for i in 0..side {
            for j in 0..side {
                entries.push(f(i, j));
            }
        }
        SimplexMatrix { degree, entries }
    }

    /// The degree-0 simplex of an object.
    pub fn object(edges: &EdgeStructure, o: ObjectId) -> Self {
        SimplexMatrix {
            degree: 0,
            entries: vec![edges.ident(o)],
        }
    }

    /// The degree-1 simplex of an edge `f: a -> b`.
    pub fn edge(edges: &EdgeStructure, f: EdgeId) -> Self {
        SimplexMatrix {
            degree: 1,
            entries: vec![
                edges.ident(edges.dom(f)),
                f,
                edges.inv(f),
                edges.ident(edges.cod(f)),
            ],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn side(&self) -> usize {
        self.degree + 1
    }

    pub fn entries(&self) -> &[EdgeId] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> EdgeId {
        self.entries[i * self.side() + j]
    }

    pub fn row(&self, i: usize) -> &[EdgeId] {
        let side = self.side();
        &self.entries[i * side..(i + 1) * side]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[EdgeId]> {
        self.entries.chunks(self.side())
    }

    /// The object label `o_i`, read off the diagonal.
    pub fn object_label(&self, edges: &EdgeStructure, i: usize) -> ObjectId {
        edges.dom(self.get(i, i))
    }

    pub fn object_labels(&self, edges: &EdgeStructure) -> Vec<ObjectId> {
        (0..self.side())
            .map(|i| self.object_label(edges, i))
            .collect()
    }

    /// `(x_01, x_12, ..., x_(n-1)n)`.
    pub fn superdiagonal(&self) -> Vec<EdgeId> {
        (1..self.side()).map(|i| self.get(i - 1, i)).collect()
    }

    /// `(x_01, x_02, ..., x_0n)`.
    pub fn first_row_tail(&self) -> Vec<EdgeId> {
        self.row(0)[1..].to_vec()
    }

    /// The relabelled matrix `x · alpha` with entries `x_{alpha(i) alpha(j)}`.
    pub fn act(&self, alpha: &FiniteMap) -> Result<SimplexMatrix> {
        if alpha.target_degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: alpha.target_degree(),
            });
        }
        Ok(self.act_unchecked(alpha.values()))
    }

    pub(crate) fn act_unchecked(&self, values: &[usize]) -> SimplexMatrix {
        let side = self.side();
        let m = values.len();
        let mut entries = Vec::with_capacity(m * m);
        for &a in values {
            let row = &self.entries[a * side..(a + 1) * side];
            for &b in values {
                entries.push(row[b]);
            }
        }
        SimplexMatrix {
            degree: m - 1,
            entries,
        }
    }

    /// The face obtained by deleting vertex `skip`.
    pub fn face(&self, skip: usize) -> SimplexMatrix {
        let values: Vec<usize> = (0..self.side()).filter(|&v| v != skip).collect();
        self.act_unchecked(&values)
    }

    /// Appends a vertex whose column (above the diagonal entry) is
    /// `column`; the new row is filled in with inverses.
    pub(crate) fn extend_with_column(
        &self,
        edges: &EdgeStructure,
        column: &[EdgeId],
    ) -> SimplexMatrix {
        debug_assert_eq!(column.len(), self.side());
        let new_object = edges.cod(column[0]);
        let side = self.side() + 1;
        SimplexMatrix::from_fn(side - 1, |i, j| match (i + 1 == side, j + 1 == side) {
            (false, false) => self.get(i, j),
            (false, true) => column[i],
            (true, false) => edges.inv(column[j]),
            (true, true) => edges.ident(new_object),
        })
    }

    /// Describes the first violated matrix axiom, if any: identities on the
    /// diagonal, `x_ji = inv(x_ij)`, and consistent domains and codomains.
    pub fn well_formedness_violation(&self, edges: &EdgeStructure) -> Option<String> {
        let n = edges.edge_count() as u32;
        if let Some(bad) = self.entries.iter().find(|e| e.0 >= n) {
            return Some(format!("entry {bad} is not an edge"));
        }
        let labels: Vec<ObjectId> = (0..self.side())
            .map(|i| {
                let d = self.get(i, i);
                edges.dom(d)
            })
            .collect();
        for i in 0..self.side() {
            let d = self.get(i, i);
            if !edges.is_identity(d) {
                return Some(format!(
                    "diagonal entry ({i},{i}) = `{}` is not an identity",
                    edges.edge_name(d)
                ));
            }
            for j in 0..self.side() {
                let f = self.get(i, j);
                if self.get(j, i) != edges.inv(f) {
                    return Some(format!(
                        "entry ({j},{i}) = `{}` is not the inverse of ({i},{j}) = `{}`",
                        edges.edge_name(self.get(j, i)),
                        edges.edge_name(f)
                    ));
                }
                if edges.dom(f) != labels[i] || edges.cod(f) != labels[j] {
                    return Some(format!(
                        "entry ({i},{j}) = `{}` does not run from `{}` to `{}`",
                        edges.edge_name(f),
                        edges.object_name(labels[i]),
                        edges.object_name(labels[j])
                    ));
                }
            }
        }
        None
    }

    pub fn has_offdiagonal_identity(&self, edges: &EdgeStructure) -> bool {
        let side = self.side();
        (0..side).any(|i| (0..side).any(|j| i != j && edges.is_identity(self.get(i, j))))
    }

    /// The partition of vertices into classes of identical rows, as a
    /// canonical surjection (classes numbered by minimal element) together
    /// with the sorted minimal representatives.
    ///
    /// Two equal rows force equal columns in a well-formed matrix, so the
    /// matrix is constant on blocks of this partition and is the coarsest
    /// partition with that property.
    pub fn row_classes(&self) -> (FiniteMap, Vec<usize>) {
        let side = self.side();
        let mut reps: Vec<usize> = Vec::new();
        let mut values = Vec::with_capacity(side);
        for i in 0..side {
            match reps.iter().position(|&r| self.row(r) == self.row(i)) {
                Some(class) => values.push(class),
                None => {
                    values.push(reps.len());
                    reps.push(i);
                }
            }
        }
        let k = reps.len() - 1;
        (FiniteMap::from_values_unchecked(k, values), reps)
    }

    /// True when two rows coincide, i.e. the matrix is the image of a
    /// smaller matrix under a noninvertible surjection.
    pub fn has_repeated_row(&self) -> bool {
        let side = self.side();
        (0..side).any(|i| (i + 1..side).any(|j| self.row(i) == self.row(j)))
    }

    /// Splits `self` as `base · sigma` along identical rows.
    pub fn split_repeated_rows(&self) -> (SimplexMatrix, FiniteMap) {
        let (sigma, reps) = self.row_classes();
        (self.act_unchecked(&reps), sigma)
    }

    pub fn display<'a>(&'a self, edges: &'a EdgeStructure) -> MatrixDisplay<'a> {
        MatrixDisplay {
            matrix: self,
            edges,
        }
    }
}

/// Renders a matrix with edge names.
pub struct MatrixDisplay<'a> {
    matrix: &'a SimplexMatrix,
    edges: &'a EdgeStructure,
}

impl fmt::Display for MatrixDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.matrix.rows().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.edges.edge_name(*e))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::edges::EdgeSpec;

    fn edges() -> EdgeStructure {
        EdgeStructure::new(
            vec!["a".into(), "b".into()],
            vec![
                EdgeSpec::new("f", "a", "b", "f'"),
                EdgeSpec::new("f'", "b", "a", "f"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn chi_on_an_edge() {
        let e = edges();
        let f = e.edge_by_name("f").unwrap();
        let chi = FiniteMap::new(1, vec![1, 0, 1]).unwrap();
        let x = SimplexMatrix::edge(&e, f).act(&chi).unwrap();
        assert_eq!(x.superdiagonal(), vec![e.inv(f), f]);
        assert_eq!(x.get(0, 2), e.ident(e.cod(f)));
        assert!(x.well_formedness_violation(&e).is_none());
        assert!(x.has_repeated_row());
        let (base, sigma) = x.split_repeated_rows();
        assert_eq!(base, SimplexMatrix::edge(&e, e.inv(f)));
        assert_eq!(base.act(&sigma).unwrap(), x);
    }

    #[test]
    fn identity_action_and_transposition() {
        let e = edges();
        let f = e.edge_by_name("f").unwrap();
        let x = SimplexMatrix::edge(&e, f)
            .act(&FiniteMap::new(1, vec![0, 1, 1]).unwrap())
            .unwrap();
        assert_eq!(x.act(&FiniteMap::identity(2)).unwrap(), x);
        let swapped = x.act(&FiniteMap::transposition(2, 0, 1).unwrap()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let p = |v: usize| [1, 0, 2][v];
                assert_eq!(swapped.get(i, j), x.get(p(i), p(j)));
            }
        }
    }

    #[test]
    fn broken_inverse_is_reported() {
        let e = edges();
        let f = e.edge_by_name("f").unwrap();
        let x = SimplexMatrix::from_fn(1, |i, j| match (i, j) {
            (0, 0) => e.ident(e.dom(f)),
            (1, 1) => e.ident(e.cod(f)),
            _ => f,
        });
        let msg = x.well_formedness_violation(&e).unwrap();
        assert!(msg.contains("inverse"), "{msg}");
    }

    #[test]
    fn degree_mismatch_on_action() {
        let e = edges();
        let f = e.edge_by_name("f").unwrap();
        let err = SimplexMatrix::edge(&e, f)
            .act(&FiniteMap::identity(2))
            .unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { .. }));
    }
}
