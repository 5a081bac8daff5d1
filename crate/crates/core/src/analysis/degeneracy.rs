//! Degenerate simplices and Eilenberg–Zilber factorizations.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::symcore::{FiniteMap, SimplexMatrix, TruncatedSymSet};

/// A simplex written as `base · surjection` with `base` nondegenerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EZFactorization {
    pub base: SimplexMatrix,
    pub surjection: FiniteMap,
}

fn require_member(x_set: &TruncatedSymSet, x: &SimplexMatrix) -> Result<()> {
    if x_set.contains(x) {
        Ok(())
    } else {
        Err(Error::NotMember(x.display(x_set.edges()).to_string()))
    }
}

/// In a partial groupoid, a simplex is degenerate exactly when some
/// off-diagonal entry of its matrix is an identity.
pub fn is_degenerate(x_set: &TruncatedSymSet, x: &SimplexMatrix) -> Result<bool> {
    require_member(x_set, x)?;
    Ok(x.has_offdiagonal_identity(x_set.edges()))
}

/// Searches for a noninvertible surjection `sigma: [n] ->> [k]` and a
/// simplex `y` of degree `k` with `y · sigma = x`.
///
/// Holds the explicitly listed levels of the symmetric set so that repeated
/// queries do not rebuild them.
pub struct DegeneracyOracle<'a> {
    set: &'a TruncatedSymSet,
    levels: Vec<HashSet<SimplexMatrix>>,
}

impl<'a> DegeneracyOracle<'a> {
    /// Lists the levels `X_0, ..., X_top` explicitly.
    pub fn new(set: &'a TruncatedSymSet, top: usize) -> Self {
        DegeneracyOracle {
            set,
            levels: (0..=top).map(|n| set.simplices(n).collect()).collect(),
        }
    }

    pub fn is_degenerate(&self, x: &SimplexMatrix) -> Result<bool> {
        let n = x.degree();
        let member = match self.levels.get(n) {
            Some(level) => level.contains(x),
            None => {
                return Err(Error::InvalidInput(format!(
                    "oracle holds levels up to {}, asked about degree {n}",
                    self.levels.len() - 1
                )))
            }
        };
        if !member {
            return Err(Error::NotMember(x.display(self.set.edges()).to_string()));
        }
        // Every surjection is a canonical one followed by an automorphism of
        // its target, and precomposing y with that automorphism stays in X_k.
        // Any witness y equals x · delta for a section delta of sigma.
        for k in 0..n {
            for sigma in FiniteMap::canonical_surjections(n, k) {
                let delta = sigma.minimal_section()?;
                let y = x.act(&delta)?;
                if self.levels[k].contains(&y) && y.act(&sigma)? == *x {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

/// Exhaustive-search degeneracy test; see [`DegeneracyOracle`].
pub fn is_degenerate_oracle(x_set: &TruncatedSymSet, x: &SimplexMatrix) -> Result<bool> {
    DegeneracyOracle::new(x_set, x.degree()).is_degenerate(x)
}

/// Splits `x` along the relation "`x_ij` is an identity": the surjection
/// numbers the classes in order of their minimal elements and the base is
/// the submatrix on those minimal representatives.
pub fn ez_decompose(x_set: &TruncatedSymSet, x: &SimplexMatrix) -> Result<EZFactorization> {
    require_member(x_set, x)?;
    let edges = x_set.edges();
    let side = x.side();
    let related = |i: usize, j: usize| edges.is_identity(x.get(i, j));
    for i in 0..side {
        for j in 0..side {
            if !related(i, j) {
                continue;
            }
            if let Some(l) = (0..side).find(|&l| related(j, l) && !related(i, l)) {
                return Err(Error::InvalidInput(format!(
                    "identity entries of {} are not transitive at ({i},{j},{l})",
                    x.display(edges)
                )));
            }
        }
    }
    let mut reps: Vec<usize> = Vec::new();
    let mut values = Vec::with_capacity(side);
    for i in 0..side {
        match reps.iter().position(|&r| related(r, i)) {
            Some(class) => values.push(class),
            None => {
                values.push(reps.len());
                reps.push(i);
            }
        }
    }
    let surjection = FiniteMap::new(reps.len() - 1, values)?;
    let section = FiniteMap::new(side - 1, reps)?;
    let base = x.act(&section)?;
    if base.act(&surjection)? != *x {
        return Err(Error::InvalidInput(format!(
            "{} is not determined by its identity pattern; the set is not spiny",
            x.display(edges)
        )));
    }
    Ok(EZFactorization { base, surjection })
}
