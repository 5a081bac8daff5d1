//! Finite groups given by multiplication tables.

use crate::error::{Error, Result};

/// A finite group: `table[a][b]` is the index of the product `a · b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl GroupTable {
    /// Checks closure, associativity, the identity and inverses exhaustively.
    pub fn new(elements: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: String| Error::InvalidGroup(msg);
        let n = elements.len();
        if n == 0 {
            return Err(bad("a group needs at least one element".into()));
        }
        for (i, name) in elements.iter().enumerate() {
            if elements[..i].contains(name) {
                return Err(bad(format!("duplicate element `{name}`")));
            }
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(bad(format!("the table must be {n} x {n}")));
        }
        if let Some((a, b)) = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| table[a][b] >= n)
        {
            return Err(bad(format!(
                "product of `{}` and `{}` is out of range",
                elements[a], elements[b]
            )));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| bad("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad(format!(
                            "associativity fails for (`{}`, `{}`, `{}`)",
                            elements[a], elements[b], elements[c]
                        )));
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| bad(format!("`{}` has no inverse", elements[a])))?;
            inverses.push(inv);
        }
        Ok(GroupTable {
            elements,
            table,
            identity,
            inverses,
        })
    }

    /// Builds a table from a multiplication function on indices.
    pub fn from_fn(elements: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = elements.len();
        let table = (0..n)
            .map(|a| (0..n).map(|b| mul(a, b)).collect())
            .collect();
        GroupTable::new(elements, table)
    }

    /// The cyclic group of order `n >= 1`, with elements `e, g1, ..., g(n-1)`
    /// where `gk` is the `k`-th power of the generator.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic groups have order at least 1");
        let elements = (0..n)
            .map(|k| {
                if k == 0 {
                    "e".to_owned()
                } else {
                    format!("g{k}")
                }
            })
            .collect();
        GroupTable::from_fn(elements, |a, b| (a + b) % n).expect("cyclic group")
    }

    /// The Klein four-group `{e, a, b, c}`.
    pub fn klein_four() -> Self {
        let elements = ["e", "a", "b", "c"].map(String::from).to_vec();
        GroupTable::from_fn(elements, |a, b| a ^ b).expect("Klein four-group")
    }

    /// The symmetric group on `{1, 2, 3}` in cycle notation, with
    /// `(s t)(x) = s(t(x))`.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let names = ["()", "(12)", "(13)", "(23)", "(123)", "(132)"];
        GroupTable::from_permutations(names.map(String::from).to_vec(), &perms)
    }

    /// The dihedral group of order `2n` (`n >= 3`): rotations `r0..r(n-1)`
    /// followed by reflections `s0..s(n-1)`, with `sk = s0 · rk`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 3, "dihedral groups need n >= 3");
        let elements = (0..n)
            .map(|k| format!("r{k}"))
            .chain((0..n).map(|k| format!("s{k}")))
            .collect();
        // (flip, rotation) with r s = s r^-1.
        let split = |x: usize| (x >= n, x % n);
        GroupTable::from_fn(elements, |a, b| {
            let ((fa, ra), (fb, rb)) = (split(a), split(b));
            let rot = if fb { (n + rb - ra) % n } else { (ra + rb) % n };
            if fa != fb {
                n + rot
            } else {
                rot
            }
        })
        .expect("dihedral group")
    }

    /// The quaternion group `{1, -1, i, -i, j, -j, k, -k}`.
    pub fn quaternion() -> Self {
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
        // Unit (0..4 for 1, i, j, k) and sign.
        let split = |x: usize| (x / 2, x % 2 == 1);
        let unit_mul = |a: usize, b: usize| -> (usize, bool) {
            match (a, b) {
                (0, u) | (u, 0) => (u, false),
                (u, v) if u == v => (0, true),
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        GroupTable::from_fn(names.map(String::from).to_vec(), |a, b| {
            let ((ua, sa), (ub, sb)) = (split(a), split(b));
            let (u, s) = unit_mul(ua, ub);
            2 * u + usize::from(s ^ sa ^ sb)
        })
        .expect("quaternion group")
    }

    /// The direct product, elements named `(a,b)` in lexicographic order.
    pub fn direct_product(&self, other: &GroupTable) -> Self {
        let m = other.order();
        let elements = self
            .elements
            .iter()
            .flat_map(|a| other.elements.iter().map(move |b| format!("({a},{b})")))
            .collect();
        GroupTable::from_fn(elements, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })
        .expect("direct product")
    }

    fn from_permutations(names: Vec<String>, perms: &[[usize; 3]]) -> Self {
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        GroupTable::from_fn(names, |a, b| {
            let (s, t) = (perms[a], perms[b]);
            index([s[t[0]], s[t[1]], s[t[2]]])
        })
        .expect("permutation group")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_name(&self, a: usize) -> &str {
        &self.elements[a]
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    /// `g S g^-1`, sorted.
    pub fn conjugate(&self, g: usize, subset: &[usize]) -> Vec<usize> {
        let gi = self.inverse(g);
        let mut out: Vec<usize> = subset
            .iter()
            .map(|&s| self.mul(self.mul(g, s), gi))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Whether a nonempty subset is closed under products and inverses.
    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        !subset.is_empty()
            && subset.iter().all(|&a| a < self.order())
            && subset.contains(&self.identity)
            && subset.iter().all(|&a| subset.contains(&self.inverse(a)))
            && subset
                .iter()
                .all(|&a| subset.iter().all(|&b| subset.contains(&self.mul(a, b))))
    }

    /// The subgroup generated by `generators`, sorted.
    pub fn generated_subgroup(&self, generators: &[usize]) -> Vec<usize> {
        let mut members = vec![self.identity];
        let mut frontier = vec![self.identity];
        while let Some(a) = frontier.pop() {
            for &g in generators {
                let b = self.mul(a, g);
                if !members.contains(&b) {
                    members.push(b);
                    frontier.push(b);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// `{ g : g S g^-1 = S }`.
    pub fn normalizer(&self, subset: &[usize]) -> Vec<usize> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        (0..self.order())
            .filter(|&g| self.conjugate(g, &sorted) == sorted)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_groups_are_valid() {
        assert_eq!(GroupTable::cyclic(1).order(), 1);
        assert_eq!(GroupTable::cyclic(5).mul(3, 4), 2);
        let s3 = GroupTable::symmetric3();
        let t = s3.element_by_name("(12)").unwrap();
        let u = s3.element_by_name("(23)").unwrap();
        // (12)(23) sends 1 -> 2 -> ..., i.e. 1 -> 2, 2 -> 3, 3 -> 1.
        assert_eq!(s3.element_name(s3.mul(t, u)), "(123)");
        assert_eq!(GroupTable::dihedral(4).order(), 8);
        assert_eq!(GroupTable::quaternion().order(), 8);
        let c2 = GroupTable::cyclic(2);
        assert_eq!(c2.direct_product(&GroupTable::cyclic(4)).order(), 8);
    }

    #[test]
    fn subgroup_helpers() {
        let s3 = GroupTable::symmetric3();
        let r = s3.element_by_name("(123)").unwrap();
        let rot = s3.generated_subgroup(&[r]);
        assert_eq!(rot.len(), 3);
        assert!(s3.is_subgroup(&rot));
        assert_eq!(s3.normalizer(&rot).len(), 6);
        let t = s3.element_by_name("(12)").unwrap();
        let sylow = s3.generated_subgroup(&[t]);
        assert_eq!(s3.normalizer(&sylow), sylow);
        assert!(!s3.is_subgroup(&[t]));
    }

    #[test]
    fn invalid_tables_are_rejected() {
        let names = vec!["a".to_owned(), "b".to_owned()];
        let err = GroupTable::new(names.clone(), vec![vec![0, 0], vec![0, 0]]).unwrap_err();
        assert!(matches!(err, Error::InvalidGroup(_)));
        assert!(GroupTable::new(names, vec![vec![0, 1], vec![1, 2]]).is_err());
    }
}
