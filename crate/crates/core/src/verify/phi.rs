//! Index-pair multisets of permutation products with one row substituted,
//! and the constructive exchange that rewrites a pair of them.
//!
//! `phi(sigma, p, q)` is `{(i, sigma(i)) : i != q}` plus `(p, sigma(q))`: the
//! entries touched by the `sigma` term of `per(A(p => q))`. The combiner
//! turns `phi(sigma, p, q) + phi(pi, q, r)` into `phi(phi_perm) + phi(tau, p, r)`
//! with multiset semantics throughout.

use std::fmt;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// A sorted multiset of 1-based `(row, column)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhiSet {
    pairs: Vec<(usize, usize)>,
}

impl PhiSet {
    fn from_unsorted(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        PhiSet { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Multiset sum.
    pub fn union(&self, other: &PhiSet) -> PhiSet {
        PhiSet::from_unsorted(self.pairs.iter().chain(&other.pairs).copied().collect())
    }

    /// Removes one copy of each pair of `other`; `None` if some pair is missing.
    pub fn difference(&self, other: &PhiSet) -> Option<PhiSet> {
        let mut left = self.pairs.clone();
        for pair in &other.pairs {
            let pos = left.iter().position(|p| p == pair)?;
            left.remove(pos);
        }
        Some(PhiSet { pairs: left })
    }
}

impl fmt::Display for PhiSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(r, c)| format!("({r},{c})")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            kind: "phi",
            index: i,
            bound: n,
        });
    }
    Ok(())
}

/// `{(i, sigma(i)) : i != q} + {(p, sigma(q))}`; `p = q` gives the graph of `sigma`.
pub fn phi_set(sigma: &Permutation, p: usize, q: usize) -> Result<PhiSet> {
    let n = sigma.len();
    check_index(n, p)?;
    check_index(n, q)?;
    let mut pairs: Vec<(usize, usize)> = (1..=n).filter(|&i| i != q).map(|i| (i, sigma.image(i))).collect();
    pairs.push((p, sigma.image(q)));
    Ok(PhiSet::from_unsorted(pairs))
}

/// The graph of `sigma`.
pub fn phi_graph(sigma: &Permutation) -> PhiSet {
    phi_set(sigma, 1, 1).expect("index 1 is always valid")
}

/// Which construction produced `phi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineCase {
    /// `q` is not on the orbit of `r` under `pi^-1 sigma`.
    OrbitMissesQ,
    /// `q` is `k0` steps along that orbit, `k0 >= 1`.
    OrbitHitsQ { k0: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Combination {
    pub phi: Permutation,
    pub tau: Permutation,
    pub case: CombineCase,
}

/// Builds `(phi, tau)` with
/// `phi_set(sigma, p, q) + phi_set(pi, q, r) = phi_graph(phi) + phi_set(tau, p, r)`.
///
/// `phi` is assembled from `sigma` and `pi` along the orbit `U` of `r` under
/// `pi^-1 sigma`. `tau` is read off the pairs left after deleting the graph of
/// `phi`. The identity and bijectivity of both are verified before
/// returning; a violation is an error, never a silent result.
pub fn lemma42_combine(sigma: &Permutation, pi: &Permutation, p: usize, q: usize, r: usize) -> Result<Combination> {
    let n = sigma.len();
    if pi.len() != n {
        return Err(Error::InvalidPermutation(format!("sizes differ: {n} vs {}", pi.len())));
    }
    for i in [p, q, r] {
        check_index(n, i)?;
    }
    if q == r {
        return Err(Error::Precondition("the exchange needs q != r".into()));
    }

    // orbit of r under rho = pi^-1 sigma, in visiting order
    let rho = pi.inverse().compose(sigma)?;
    let mut orbit = vec![r];
    let mut x = rho.image(r);
    while x != r {
        orbit.push(x);
        x = rho.image(x);
    }
    let in_orbit = |i: usize| orbit.contains(&i);

    let (phi_images, case): (Vec<usize>, CombineCase) = match orbit.iter().position(|&x| x == q) {
        None => (
            (1..=n)
                .map(|i| if in_orbit(i) { sigma.image(i) } else { pi.image(i) })
                .collect(),
            CombineCase::OrbitMissesQ,
        ),
        Some(k0) => {
            let prefix = &orbit[..k0];
            (
                (1..=n)
                    .map(|i| {
                        if i == q {
                            pi.image(r)
                        } else if !in_orbit(i) || prefix.contains(&i) {
                            sigma.image(i)
                        } else {
                            pi.image(i)
                        }
                    })
                    .collect(),
                CombineCase::OrbitHitsQ { k0 },
            )
        }
    };
    let phi = Permutation::new(phi_images)
        .map_err(|e| Error::Invalid(format!("exchange produced a non-bijective phi: {e}")))?;

    let combined = phi_set(sigma, p, q)?.union(&phi_set(pi, q, r)?);
    let leftover = combined
        .difference(&phi_graph(&phi))
        .ok_or_else(|| Error::Invalid("graph of phi is not contained in the combined multiset".into()))?;

    // leftover rows are {1..n} \ {r} with p added once more: the extra copy of
    // row p is the substituted row of tau
    let mut tau_images = vec![0usize; n];
    let mut spare: Option<usize> = None;
    for &(row, col) in leftover.pairs() {
        if row == p && (p == r || tau_images[p - 1] != 0) {
            if p == r {
                tau_images[r - 1] = col;
            } else {
                spare = Some(col);
            }
        } else if row == r || tau_images[row - 1] != 0 {
            return Err(Error::Invalid(format!(
                "leftover pairs {leftover} do not form a substituted graph"
            )));
        } else {
            tau_images[row - 1] = col;
        }
    }
    if p != r {
        tau_images[r - 1] = spare.ok_or_else(|| Error::Invalid(format!("row {p} missing from leftover {leftover}")))?;
    }
    let tau = Permutation::new(tau_images).map_err(|e| Error::Invalid(format!("leftover does not define tau: {e}")))?;

    if phi_graph(&phi).union(&phi_set(&tau, p, r)?) != combined {
        return Err(Error::Invalid(
            "multiset identity fails for the constructed pair".into(),
        ));
    }
    Ok(Combination { phi, tau, case })
}
