//! Morphisms of the indexing category: arbitrary functions `[m] -> [n]`
//! between the finite ordinals `[n] = {0, 1, ..., n}`.

use std::fmt;

use crate::error::{Error, Result};

/// A function `[m] -> [n]`, stored as its value list of length `m + 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteMap {
    target: usize,
    values: Vec<usize>,
}

impl FiniteMap {
    /// Builds the map `[values.len() - 1] -> [target]`.
    pub fn new(target: usize, values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidInput(
                "a finite map needs at least one value".into(),
            ));
        }
        if let Some((position, &value)) = values.iter().enumerate().find(|(_, &v)| v > target) {
            return Err(Error::MapValueOutOfRange {
                position,
                value,
                target,
            });
        }
        Ok(FiniteMap { target, values })
    }

    pub(crate) fn from_values_unchecked(target: usize, values: Vec<usize>) -> Self {
        debug_assert!(!values.is_empty() && values.iter().all(|&v| v <= target));
        FiniteMap { target, values }
    }

    pub fn identity(n: usize) -> Self {
        FiniteMap {
            target: n,
            values: (0..=n).collect(),
        }
    }

    /// The constant map `[m] -> [n]` with value `value`.
    pub fn constant(m: usize, n: usize, value: usize) -> Result<Self> {
        Self::new(n, vec![value; m + 1])
    }

    /// The automorphism of `[n]` exchanging `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        let mut values: Vec<usize> = (0..=n).collect();
        if i > n || j > n {
            return Err(Error::MapValueOutOfRange {
                position: i.max(j),
                value: i.max(j),
                target: n,
            });
        }
        values.swap(i, j);
        Ok(FiniteMap { target: n, values })
    }

    /// The order-preserving injection `[n - 1] -> [n]` that skips `i`.
    pub fn face(n: usize, skip: usize) -> Self {
        assert!(n >= 1 && skip <= n, "face map out of range");
        FiniteMap {
            target: n,
            values: (0..=n).filter(|&v| v != skip).collect(),
        }
    }

    /// The order-preserving surjection `[n + 1] -> [n]` hitting `i` twice.
    pub fn degeneracy(n: usize, repeat: usize) -> Self {
        assert!(repeat <= n, "degeneracy map out of range");
        FiniteMap {
            target: n,
            values: (0..=n + 1)
                .map(|v| if v <= repeat { v } else { v - 1 })
                .collect(),
        }
    }

    pub fn source_degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target_degree(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target + 1];
        for &v in &self.values {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target + 1];
        for &v in &self.values {
            if hit[v] {
                return false;
            }
            hit[v] = true;
        }
        true
    }

    pub fn is_bijective(&self) -> bool {
        self.source_degree() == self.target && self.is_injective()
    }

    /// Returns a section `s` (so that `self ∘ s = id`) choosing the minimal
    /// preimage of every point. Fails unless `self` is surjective.
    pub fn minimal_section(&self) -> Result<FiniteMap> {
        let mut section = vec![usize::MAX; self.target + 1];
        for (i, &v) in self.values.iter().enumerate().rev() {
            section[v] = i;
        }
        if section.contains(&usize::MAX) {
            return Err(Error::InvalidInput(format!("{self} is not surjective")));
        }
        Ok(FiniteMap {
            target: self.source_degree(),
            values: section,
        })
    }

    /// The inverse of a bijection.
    pub fn inverse(&self) -> Result<FiniteMap> {
        if !self.is_bijective() {
            return Err(Error::InvalidInput(format!("{self} is not a bijection")));
        }
        self.minimal_section()
    }

    /// Every function `[m] -> [n]`, in lexicographic order of value lists.
    pub fn all(m: usize, n: usize) -> AllMaps {
        AllMaps {
            target: n,
            next: Some(vec![0; m + 1]),
        }
    }

    /// Every surjection `[m] -> [k]`, in lexicographic order.
    pub fn surjections(m: usize, k: usize) -> impl Iterator<Item = FiniteMap> {
        Self::all(m, k).filter(FiniteMap::is_surjective)
    }

    /// Every bijection `[n] -> [n]`, in lexicographic order.
    pub fn permutations(n: usize) -> impl Iterator<Item = FiniteMap> {
        use itertools::Itertools;
        (0..=n)
            .permutations(n + 1)
            .map(move |values| FiniteMap { target: n, values })
    }

    /// The surjections `[m] -> [k]` that number their fibers in order of
    /// first appearance (restricted growth strings). Every surjection is
    /// the composite of exactly one of these with an automorphism of `[k]`.
    pub fn canonical_surjections(m: usize, k: usize) -> Vec<FiniteMap> {
        fn extend(
            prefix: &mut Vec<usize>,
            max: usize,
            m: usize,
            k: usize,
            out: &mut Vec<FiniteMap>,
        ) {
            let remaining = m + 1 - prefix.len();
            if remaining == 0 {
                if max == k {
                    out.push(FiniteMap {
                        target: k,
                        values: prefix.clone(),
                    });
                }
                return;
            }
            // Not enough positions left to reach k.
            if max + remaining < k {
                return;
            }
            for v in 0..=(max + 1).min(k) {
                prefix.push(v);
                extend(prefix, max.max(v), m, k, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if k <= m {
            let mut prefix = vec![0];
            extend(&mut prefix, 0, m, k, &mut out);
        }
        out
    }
}

impl fmt::Display for FiniteMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]->[{}](", self.source_degree(), self.target)?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Iterator over all maps `[m] -> [n]`.
pub struct AllMaps {
    target: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for AllMaps {
    type Item = FiniteMap;

    fn next(&mut self) -> Option<FiniteMap> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            if succ[pos] < self.target {
                succ[pos] += 1;
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(FiniteMap {
            target: self.target,
            values: current,
        })
    }
}

/// `g ∘ f`: first `f: [m] -> [n]`, then `g: [n] -> [p]`.
pub fn compose_maps(g: &FiniteMap, f: &FiniteMap) -> Result<FiniteMap> {
    if f.target != g.source_degree() {
        return Err(Error::DegreeMismatch {
            expected: g.source_degree(),
            found: f.target,
        });
    }
    Ok(FiniteMap {
        target: g.target,
        values: f.values.iter().map(|&v| g.values[v]).collect(),
    })
}

/// Factors `alpha` as `mono ∘ epi`, where `epi` sends each point to the
/// rank of its image within the sorted image of `alpha` and `mono` is the
/// order-preserving inclusion of that image.
pub fn factor_epi_mono(alpha: &FiniteMap) -> (FiniteMap, FiniteMap) {
    let mut image = alpha.values.clone();
    image.sort_unstable();
    image.dedup();
    let k = image.len() - 1;
    let epi = FiniteMap {
        target: k,
        values: alpha
            .values
            .iter()
            .map(|v| image.binary_search(v).expect("value is in the image"))
            .collect(),
    };
    let mono = FiniteMap {
        target: alpha.target,
        values: image,
    };
    (epi, mono)
}
