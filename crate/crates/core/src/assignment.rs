//! Combinatorial fast paths for permanents over specific semirings.
//!
//! Over max-plus the permanent is the optimal assignment value, over max-min
//! it is the bottleneck assignment value, and over the Boolean semiring it
//! records whether a perfect matching exists.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::permanent::diagonal_product;
use crate::permutation::Permutation;
use crate::semiring::{Element, Semiring};

/// An optimal value together with a permutation attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssignmentSolution {
    pub value: Element,
    pub assignment: Permutation,
}

impl AssignmentSolution {
    /// Whether the product along the witness reproduces the value.
    pub fn witness_holds(&self, a: &Matrix) -> bool {
        diagonal_product(a, &self.assignment).is_ok_and(|v| v == self.value)
    }
}

fn expect_semiring(a: &Matrix, wanted: Semiring) -> Result<usize> {
    if a.semiring() != wanted {
        return Err(Error::SemiringMismatch {
            left: a.semiring().to_string(),
            right: wanted.to_string(),
        });
    }
    a.order()
}

/// Maximum-weight assignment over `(max, +)`, with `-inf` entries treated as
/// forbidden edges.
///
/// Rows are added one at a time; each is connected by the best augmenting
/// path, found by Bellman-Ford relaxation over the alternating graph. The
/// current matching is optimal for the rows seen so far, so no positive
/// cycle exists and no potentials are needed. Comparisons are exact and ties
/// go to the lowest column index.
pub fn per_maxplus(a: &Matrix) -> Result<AssignmentSolution> {
    let n = expect_semiring(a, Semiring::MaxPlus)?;
    let weight = |r: usize, c: usize| a.at(r, c).as_rational();
    let mut col_of_row: Vec<Option<usize>> = vec![None; n];
    let mut row_of_col: Vec<Option<usize>> = vec![None; n];

    for new_row in 0..n {
        // gain of the best alternating walk from new_row that ends by taking column c
        let mut gain: Vec<Option<BigRational>> = (0..n).map(|c| weight(new_row, c).cloned()).collect();
        let mut parent: Vec<Option<usize>> = vec![None; n];
        for _ in 0..n {
            let mut changed = false;
            for via in 0..n {
                let (Some(base), Some(displaced)) = (gain[via].clone(), row_of_col[via]) else {
                    continue;
                };
                let leave = weight(displaced, via).expect("matched edges are finite");
                for c in 0..n {
                    if c == via {
                        continue;
                    }
                    let Some(enter) = weight(displaced, c) else {
                        continue;
                    };
                    let candidate = &base + enter - leave;
                    if gain[c].as_ref().is_none_or(|g| candidate > *g) {
                        gain[c] = Some(candidate);
                        parent[c] = Some(via);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }

        let mut best: Option<usize> = None;
        for c in (0..n).filter(|&c| row_of_col[c].is_none()) {
            if let Some(g) = &gain[c] {
                if best.is_none_or(|b| *g > *gain[b].as_ref().expect("best has a gain")) {
                    best = Some(c);
                }
            }
        }
        let Some(mut c) = best else {
            return Ok(AssignmentSolution {
                value: Element::NegInf,
                assignment: Permutation::identity(n),
            });
        };
        // shift every row on the path one column along
        loop {
            match parent[c] {
                None => {
                    col_of_row[new_row] = Some(c);
                    row_of_col[c] = Some(new_row);
                    break;
                }
                Some(via) => {
                    let r = row_of_col[via].expect("path runs through matched columns");
                    col_of_row[r] = Some(c);
                    row_of_col[c] = Some(r);
                    c = via;
                }
            }
        }
    }

    let assignment =
        Permutation::from_zero_based(col_of_row.into_iter().map(|c| c.expect("every row matched")).collect())?;
    let value = diagonal_product(a, &assignment)?;
    Ok(AssignmentSolution { value, assignment })
}

/// Bottleneck assignment over `(max, min)`: the largest entry value `t`
/// such that the entries `>= t` admit a perfect matching. The search runs
/// over the sorted distinct entries, never over a continuum.
pub fn per_maxmin(a: &Matrix) -> Result<AssignmentSolution> {
    let n = expect_semiring(a, Semiring::FuzzyMaxMin)?;
    let mut values: Vec<&BigRational> = a.entries().iter().filter_map(Element::as_rational).collect();
    values.sort();
    values.dedup();

    let matching_at = |t: &BigRational| perfect_matching(n, |r, c| a.at(r, c).as_rational().is_some_and(|v| v >= t));
    // invariant: values[lo] feasible, values[hi] infeasible (hi may be one past the end)
    let (mut lo, mut hi) = (0usize, values.len());
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if matching_at(values[mid]).is_some() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let map = matching_at(values[lo]).expect("the smallest entry admits every permutation");
    let assignment = Permutation::from_zero_based(map)?;
    Ok(AssignmentSolution {
        value: Element::Rational(values[lo].clone()),
        assignment,
    })
}

/// One if the ones of `A` contain a perfect matching, zero otherwise.
pub fn per_boolean(a: &Matrix) -> Result<Element> {
    Ok(Element::Bool(boolean_matching(a)?.is_some()))
}

/// A permutation supported on the ones of `A`, if one exists.
pub fn boolean_matching(a: &Matrix) -> Result<Option<Permutation>> {
    let n = expect_semiring(a, Semiring::Boolean)?;
    perfect_matching(n, |r, c| *a.at(r, c) == Element::Bool(true))
        .map(Permutation::from_zero_based)
        .transpose()
}

/// Dispatches to the fast path for the matrix's semiring.
pub fn per_fast(a: &Matrix) -> Result<Element> {
    match a.semiring() {
        Semiring::MaxPlus => Ok(per_maxplus(a)?.value),
        Semiring::FuzzyMaxMin => Ok(per_maxmin(a)?.value),
        Semiring::Boolean => per_boolean(a),
        other => Err(Error::Invalid(format!("no fast permanent for semiring {other}"))),
    }
}

/// Simple augmenting-path matching; returns the column of each row.
fn perfect_matching(n: usize, edge: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    fn augment(
        r: usize,
        n: usize,
        edge: &dyn Fn(usize, usize) -> bool,
        seen: &mut [bool],
        row_of_col: &mut [Option<usize>],
    ) -> bool {
        for c in 0..n {
            if seen[c] || !edge(r, c) {
                continue;
            }
            seen[c] = true;
            let free = match row_of_col[c] {
                None => true,
                Some(other) => augment(other, n, edge, seen, row_of_col),
            };
            if free {
                row_of_col[c] = Some(r);
                return true;
            }
        }
        false
    }

    let mut row_of_col: Vec<Option<usize>> = vec![None; n];
    for r in 0..n {
        let mut seen = vec![false; n];
        if !augment(r, n, &edge, &mut seen, &mut row_of_col) {
            return None;
        }
    }
    let mut col_of_row = vec![0; n];
    for (c, r) in row_of_col.into_iter().enumerate() {
        col_of_row[r.expect("perfect matching covers every column")] = c;
    }
    Some(col_of_row)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permanent::per_subset_dp;

    #[test]
    fn maxplus_diagonal_only() {
        let a = Matrix::parse(
            Semiring::MaxPlus,
            &[&["1", "-inf", "-inf"], &["-inf", "2", "-inf"], &["-inf", "-inf", "3"]],
        )
        .unwrap();
        let sol = per_maxplus(&a).unwrap();
        assert_eq!(sol.value, Element::int(6));
        assert_eq!(sol.assignment, Permutation::identity(3));
    }

    #[test]
    fn maxplus_all_zero_entries() {
        let a = Matrix::constant(Semiring::MaxPlus, 4, Element::int(0)).unwrap();
        let sol = per_maxplus(&a).unwrap();
        assert_eq!(sol.value, Element::int(0));
        assert_eq!(sol.assignment, Permutation::identity(4));
    }

    #[test]
    fn maxplus_needs_rerouting() {
        // greedy row-by-row picks column 1 for row 1; the optimum is the anti-diagonal
        let a = Matrix::parse(Semiring::MaxPlus, &[&["5", "4"], &["9", "1"]]).unwrap();
        let sol = per_maxplus(&a).unwrap();
        assert_eq!(sol.value, Element::int(13));
        assert_eq!(sol.assignment.images(), vec![2, 1]);
        assert_eq!(per_subset_dp(&a).unwrap(), Element::int(13));
    }

    #[test]
    fn maxplus_infeasible() {
        let a = Matrix::parse(Semiring::MaxPlus, &[&["1", "2"], &["-inf", "-inf"]]).unwrap();
        let sol = per_maxplus(&a).unwrap();
        assert_eq!(sol.value, Element::NegInf);
        assert!(sol.witness_holds(&a));
    }

    #[test]
    fn maxmin_examples() {
        let f = Semiring::FuzzyMaxMin;
        let a = Matrix::parse(f, &[&["0.9", "0.3"], &["0.5", "0.8"]]).unwrap();
        let sol = per_maxmin(&a).unwrap();
        assert_eq!(sol.value, Element::ratio(4, 5));
        assert_eq!(sol.assignment, Permutation::identity(2));
        let c = Matrix::constant(f, 3, Element::ratio(2, 7)).unwrap();
        assert_eq!(per_maxmin(&c).unwrap().value, Element::ratio(2, 7));
    }

    #[test]
    fn boolean_examples() {
        let s = Semiring::Boolean;
        assert_eq!(
            per_boolean(&Matrix::identity(s, 5).unwrap()).unwrap(),
            Element::Bool(true)
        );
        let a = Matrix::parse(s, &[&["1", "1"], &["0", "0"]]).unwrap();
        assert_eq!(per_boolean(&a).unwrap(), Element::Bool(false));
        let b = Matrix::parse(s, &[&["1", "1", "0"], &["1", "0", "0"], &["0", "1", "1"]]).unwrap();
        let m = boolean_matching(&b).unwrap().unwrap();
        assert_eq!(diagonal_product(&b, &m).unwrap(), Element::Bool(true));
    }

    #[test]
    fn wrong_semiring_is_rejected() {
        let a = Matrix::identity(Semiring::MaxTimes, 2).unwrap();
        assert!(matches!(per_maxplus(&a), Err(Error::SemiringMismatch { .. })));
        assert!(per_maxmin(&a).is_err());
        assert!(per_boolean(&a).is_err());
        assert!(per_fast(&a).is_err());
    }
}
