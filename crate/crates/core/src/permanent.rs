//! Permanents by definition, by subset dynamic programming and by Laplace
//! expansion, plus the dominant-diagonal shortcut.
//!
//! Subset DP is the production path. Enumeration is the reference oracle and
//! is capped hard; exceeding a cap is an error, never a truncation.

use std::env;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::{omega, IndexTuple, Matrix};
use crate::permutation::Permutation;
use crate::semiring::Element;

pub const DEFAULT_ENUMERATION_CAP: usize = 10;
pub const DEFAULT_SUBSET_DP_CAP: usize = 20;

/// Environment variables that override the size caps.
pub const ENUMERATION_CAP_VAR: &str = "SEMIPERM_ENUM_CAP";
pub const SUBSET_DP_CAP_VAR: &str = "SEMIPERM_DP_CAP";

/// Largest matrix order each algorithm accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub enumeration: usize,
    pub subset_dp: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: DEFAULT_ENUMERATION_CAP,
            subset_dp: DEFAULT_SUBSET_DP_CAP,
        }
    }
}

impl Caps {
    /// Defaults overridden by [`ENUMERATION_CAP_VAR`] and [`SUBSET_DP_CAP_VAR`].
    pub fn from_env() -> Result<Self> {
        let read = |var: &str, default: usize| -> Result<usize> {
            match env::var(var) {
                Ok(v) => v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Invalid(format!("{var} must be a non-negative integer, got `{v}`"))),
                Err(_) => Ok(default),
            }
        };
        let caps = Caps {
            enumeration: read(ENUMERATION_CAP_VAR, DEFAULT_ENUMERATION_CAP)?,
            subset_dp: read(SUBSET_DP_CAP_VAR, DEFAULT_SUBSET_DP_CAP)?,
        };
        if caps.subset_dp >= usize::BITS as usize - 1 {
            return Err(Error::Invalid(format!(
                "{SUBSET_DP_CAP_VAR} is too large: {}",
                caps.subset_dp
            )));
        }
        Ok(caps)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Enumerate,
    SubsetDp,
    Laplace,
    RowExpansion,
    DiagonalDominant,
    /// Max-plus, max-min or Boolean assignment solver.
    Fast,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Enumerate => "enum",
            Algorithm::SubsetDp => "dp",
            Algorithm::Laplace => "laplace",
            Algorithm::RowExpansion => "row",
            Algorithm::DiagonalDominant => "diag",
            Algorithm::Fast => "fast",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "enum" => Algorithm::Enumerate,
            "dp" => Algorithm::SubsetDp,
            "laplace" => Algorithm::Laplace,
            "row" => Algorithm::RowExpansion,
            "diag" => Algorithm::DiagonalDominant,
            "fast" => Algorithm::Fast,
            other => return Err(Error::Invalid(format!("unknown permanent algorithm `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermanentResult {
    pub value: Element,
    pub algorithm: Algorithm,
    pub n: usize,
}

fn check_cap(algorithm: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { algorithm, n, cap });
    }
    Ok(())
}

/// Sum over all `n!` permutations of the diagonal products, enumeration cap
/// from [`Caps::default`].
pub fn per_enumerate(a: &Matrix) -> Result<Element> {
    per_enumerate_capped(a, DEFAULT_ENUMERATION_CAP)
}

pub fn per_enumerate_capped(a: &Matrix, cap: usize) -> Result<Element> {
    let n = a.order()?;
    check_cap("enumeration", n, cap)?;
    let s = a.semiring();
    let mut acc = s.zero();
    for sigma in Permutation::all(n) {
        let term = s.product(sigma.as_slice().iter().enumerate().map(|(r, &c)| a.at(r, c)));
        acc = s.plus(&acc, &term);
    }
    Ok(acc)
}

/// Subset dynamic program: with `g(empty) = 1`, the value for a column set
/// `S` of size `i` is `sum_{j in S} a_{i j} g(S \ {j})`; the permanent is
/// `g({1..n})`. Uses only semiring operations.
pub fn per_subset_dp(a: &Matrix) -> Result<Element> {
    per_subset_dp_capped(a, DEFAULT_SUBSET_DP_CAP)
}

pub fn per_subset_dp_capped(a: &Matrix, cap: usize) -> Result<Element> {
    let n = a.order()?;
    check_cap("subset-dp", n, cap.min(usize::BITS as usize - 2))?;
    Ok(subset_dp(a))
}

/// Uncapped subset DP for internal callers working on small minors.
pub(crate) fn subset_dp(a: &Matrix) -> Element {
    let n = a.rows();
    let s = a.semiring();
    if n == 1 {
        return a.at(0, 0).clone();
    }
    let full = 1usize << n;
    let mut g: Vec<Element> = Vec::with_capacity(full);
    g.push(s.one());
    for mask in 1..full {
        let row = mask.count_ones() as usize - 1;
        let mut acc = s.zero();
        let mut rest = mask;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let entry = a.at(row, j);
            let prev = &g[mask ^ (1 << j)];
            if s.is_zero(entry) || s.is_zero(prev) {
                continue;
            }
            acc = s.plus(&acc, &s.times(entry, prev));
        }
        g.push(acc);
    }
    g.pop().expect("table has 2^n entries")
}

/// Laplace expansion along the rows `alpha`:
/// `per(A) = sum_beta per(A[alpha|beta]) per(A(alpha|beta))`.
pub fn per_laplace(a: &Matrix, alpha: &IndexTuple) -> Result<Element> {
    let n = a.order()?;
    if n < 2 {
        return Err(Error::TooSmall {
            what: "Laplace expansion",
            n,
            min: 2,
        });
    }
    if alpha.ambient() != n || alpha.len() >= n {
        return Err(Error::InvalidIndexTuple(format!(
            "alpha {alpha} must be a proper tuple over 1..={n}"
        )));
    }
    check_cap("subset-dp", n, DEFAULT_SUBSET_DP_CAP)?;
    let s = a.semiring();
    let mut acc = s.zero();
    for beta in omega(alpha.len(), n)? {
        let inside = subset_dp(&a.select(alpha, &beta)?);
        if s.is_zero(&inside) {
            continue;
        }
        let outside = subset_dp(&a.delete(alpha, &beta)?);
        acc = s.plus(&acc, &s.times(&inside, &outside));
    }
    Ok(acc)
}

/// Expansion along row `i`: `per(A) = sum_j a_{ij} per(A(i|j))`.
pub fn per_row_expansion(a: &Matrix, i: usize) -> Result<Element> {
    let n = a.order()?;
    if n < 2 {
        return Err(Error::TooSmall {
            what: "row expansion",
            n,
            min: 2,
        });
    }
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            kind: "row",
            index: i,
            bound: n,
        });
    }
    check_cap("subset-dp", n, DEFAULT_SUBSET_DP_CAP)?;
    let s = a.semiring();
    let mut acc = s.zero();
    for c in 0..n {
        let entry = a.at(i - 1, c);
        if s.is_zero(entry) {
            continue;
        }
        acc = s.plus(&acc, &s.times(entry, &subset_dp(&a.minor_raw(i - 1, c))));
    }
    Ok(acc)
}

/// First `(i, k)` with `a_{ik} <= a_{ii}` failing, if any.
pub fn row_dominance_violation(a: &Matrix) -> Result<Option<(usize, usize)>> {
    let n = a.order()?;
    let s = a.semiring();
    for r in 0..n {
        for c in 0..n {
            if !s.le(a.at(r, c), a.at(r, r)) {
                return Ok(Some((r + 1, c + 1)));
            }
        }
    }
    Ok(None)
}

/// `a_11 a_22 .. a_nn`, valid when every diagonal entry dominates its row.
pub fn per_diag_dominant(a: &Matrix) -> Result<Element> {
    if let Some((i, k)) = row_dominance_violation(a)? {
        return Err(Error::Precondition(format!(
            "diagonal does not dominate its row: a_{i}{k} = {} is not <= a_{i}{i} = {}",
            a.at(i - 1, k - 1),
            a.at(i - 1, i - 1)
        )));
    }
    let n = a.rows();
    Ok(a.semiring().product((0..n).map(|r| a.at(r, r))))
}

/// Dispatches on `algorithm`. `alpha` defaults to `(1)` for Laplace and its
/// first index picks the row for row expansion.
pub fn permanent(a: &Matrix, algorithm: Algorithm, alpha: Option<&IndexTuple>, caps: Caps) -> Result<PermanentResult> {
    let n = a.order()?;
    let value = match algorithm {
        Algorithm::Enumerate => per_enumerate_capped(a, caps.enumeration)?,
        Algorithm::SubsetDp => per_subset_dp_capped(a, caps.subset_dp)?,
        Algorithm::Laplace | Algorithm::RowExpansion => {
            check_cap("subset-dp", n, caps.subset_dp)?;
            let default_alpha;
            let alpha = match alpha {
                Some(t) => t,
                None => {
                    default_alpha = IndexTuple::single(n, 1)?;
                    &default_alpha
                }
            };
            if algorithm == Algorithm::Laplace {
                per_laplace(a, alpha)?
            } else {
                per_row_expansion(a, alpha.indices()[0])?
            }
        }
        Algorithm::DiagonalDominant => per_diag_dominant(a)?,
        Algorithm::Fast => crate::assignment::per_fast(a)?,
    };
    Ok(PermanentResult { value, algorithm, n })
}

/// `prod_i a_{i sigma(i)}`: the term of the permanent contributed by `sigma`.
pub fn diagonal_product(a: &Matrix, sigma: &Permutation) -> Result<Element> {
    let n = a.order()?;
    if sigma.len() != n {
        return Err(Error::InvalidPermutation(format!(
            "permutation of {} on a matrix of order {n}",
            sigma.len()
        )));
    }
    Ok(a.semiring()
        .product(sigma.as_slice().iter().enumerate().map(|(r, &c)| a.at(r, c))))
}
