//! Permanental adjoint matrices and the diagonal-dominance condition (*).

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::permanent::subset_dp;
use crate::semiring::Element;

/// Outcome of testing `a_ii >= a_jk` for all `i, j, k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarWitness {
    pub holds: bool,
    /// 1-based `(i, j, k)` with `a_jk <= a_ii` false.
    pub violation: Option<(usize, usize, usize)>,
}

impl StarWitness {
    pub fn into_error(self) -> Option<Error> {
        self.violation.map(|(i, j, k)| Error::StarConditionFails { i, j, k })
    }
}

/// The adjoint: entry `(i, j)` is `per(A(j|i))`. No signs appear.
pub fn adj(a: &Matrix) -> Result<Matrix> {
    let n = a.order()?;
    if n < 2 {
        return Err(Error::TooSmall {
            what: "adjoint",
            n,
            min: 2,
        });
    }
    let entries: Vec<Element> = (0..n * n)
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            subset_dp(&a.minor_raw(j, i))
        })
        .collect();
    Matrix::new(a.semiring(), n, n, entries)
}

/// Tests condition (*). For each diagonal position `i` in turn, entries are
/// scanned from the bottom-right corner so the reported `(j, k)` is the last
/// violating entry in row-major order.
pub fn satisfies_star(a: &Matrix) -> Result<StarWitness> {
    let n = a.order()?;
    let s = a.semiring();
    for i in 0..n {
        let d = a.at(i, i);
        for idx in (0..n * n).rev() {
            let (j, k) = (idx / n, idx % n);
            if !s.le(a.at(j, k), d) {
                return Ok(StarWitness {
                    holds: false,
                    violation: Some((i + 1, j + 1, k + 1)),
                });
            }
        }
    }
    debug_assert!(
        (1..n).all(|i| a.at(i, i) == a.at(0, 0)),
        "(*) forces a constant diagonal"
    );
    Ok(StarWitness {
        holds: true,
        violation: None,
    })
}

fn require_star(a: &Matrix) -> Result<usize> {
    let n = a.order()?;
    if n < 2 {
        return Err(Error::TooSmall {
            what: "condition (*)",
            n,
            min: 2,
        });
    }
    match satisfies_star(a)?.into_error() {
        Some(err) => Err(err),
        None => Ok(n),
    }
}

/// `A^{n-1}`, which equals `adj(A)` under condition (*).
pub fn adj_via_power(a: &Matrix) -> Result<Matrix> {
    let n = require_star(a)?;
    a.pow(n as u32 - 1)
}

/// `per(adj(A))` for a matrix satisfying (*); equals `per(A)^{n-1}`.
pub fn per_adj_star(a: &Matrix) -> Result<Element> {
    require_star(a)?;
    Ok(subset_dp(&adj(a)?))
}
