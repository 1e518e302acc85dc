//! Dense matrices over a single built-in semiring.
//!
//! Entries are stored row-major and validated against the carrier on
//! construction. All public indices are 1-based.

use std::fmt;

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::semiring::{Element, Semiring};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    semiring: Semiring,
    rows: usize,
    cols: usize,
    entries: Vec<Element>,
}

impl Matrix {
    pub fn new(semiring: Semiring, rows: usize, cols: usize, entries: Vec<Element>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != rows * cols {
            return Err(Error::Invalid(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            semiring.ensure(e)?;
        }
        Ok(Matrix {
            semiring,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(semiring: Semiring, rows: Vec<Vec<Element>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Invalid("ragged rows".into()));
        }
        Matrix::new(semiring, r, c, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix from element strings, e.g. `&[&["1", "1/2"], &["2", "2"]]`.
    pub fn parse<R: AsRef<[S]>, S: AsRef<str>>(semiring: Semiring, rows: &[R]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|row| {
                row.as_ref()
                    .iter()
                    .map(|t| semiring.parse_element(t.as_ref()))
                    .collect()
            })
            .collect::<Result<Vec<Vec<Element>>>>()?;
        Matrix::from_rows(semiring, rows)
    }

    /// Builds a matrix from a function of 0-based `(row, col)`.
    pub(crate) fn from_fn(
        semiring: Semiring,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Element,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        debug_assert!(entries.iter().all(|e| semiring.contains(e)));
        Matrix {
            semiring,
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(semiring: Semiring, rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        Ok(Matrix::from_fn(semiring, rows, cols, |_, _| semiring.zero()))
    }

    pub fn identity(semiring: Semiring, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        Ok(Matrix::from_fn(semiring, n, n, |r, c| {
            if r == c {
                semiring.one()
            } else {
                semiring.zero()
            }
        }))
    }

    pub fn constant(semiring: Semiring, n: usize, value: Element) -> Result<Self> {
        semiring.ensure(&value)?;
        Matrix::new(semiring, n, n, vec![value; n * n])
    }

    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length of a square matrix.
    pub fn order(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Result<&Element> {
        self.check_row(i)?;
        self.check_col(j)?;
        Ok(self.at(i - 1, j - 1))
    }

    /// 0-based unchecked access.
    pub(crate) fn at(&self, r: usize, c: usize) -> &Element {
        &self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn row_vec(&self, i: usize) -> Result<Vec<Element>> {
        self.check_row(i)?;
        Ok(self.entries[(i - 1) * self.cols..i * self.cols].to_vec())
    }

    /// Copy with entry `(i, j)` replaced.
    pub fn with_entry(&self, i: usize, j: usize, value: Element) -> Result<Self> {
        self.check_row(i)?;
        self.check_col(j)?;
        self.semiring.ensure(&value)?;
        let mut out = self.clone();
        out.entries[(i - 1) * self.cols + (j - 1)] = value;
        Ok(out)
    }

    fn check_row(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rows {
            return Err(Error::IndexOutOfRange {
                kind: "row",
                index: i,
                bound: self.rows,
            });
        }
        Ok(())
    }

    fn check_col(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.cols {
            return Err(Error::IndexOutOfRange {
                kind: "column",
                index: j,
                bound: self.cols,
            });
        }
        Ok(())
    }

    fn same_semiring(&self, other: &Matrix) -> Result<()> {
        if self.semiring != other.semiring {
            return Err(Error::SemiringMismatch {
                left: self.semiring.to_string(),
                right: other.semiring.to_string(),
            });
        }
        Ok(())
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        self.same_semiring(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.shape_error(other));
        }
        Ok(())
    }

    fn shape_error(&self, other: &Matrix) -> Error {
        Error::ShapeMismatch {
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: other.rows,
            right_cols: other.cols,
        }
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let s = self.semiring;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| s.plus(a, b))
            .collect();
        Ok(Matrix {
            entries,
            ..self.clone_shape()
        })
    }

    /// Matrix product with semiring sum and product.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_semiring(other)?;
        if self.cols != other.rows {
            return Err(self.shape_error(other));
        }
        let s = self.semiring;
        Ok(Matrix::from_fn(s, self.rows, other.cols, |r, c| {
            let mut acc = s.zero();
            for k in 0..self.cols {
                acc = s.plus(&acc, &s.times(self.at(r, k), other.at(k, c)));
            }
            acc
        }))
    }

    /// `lambda * A`, entrywise.
    pub fn scale(&self, lambda: &Element) -> Result<Matrix> {
        self.semiring.ensure(lambda)?;
        let s = self.semiring;
        let entries = self.entries.iter().map(|a| s.times(lambda, a)).collect();
        Ok(Matrix {
            entries,
            ..self.clone_shape()
        })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.semiring, self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// `A^l`; `l = 0` gives the identity.
    pub fn pow(&self, l: u32) -> Result<Matrix> {
        let n = self.order()?;
        let mut acc = Matrix::identity(self.semiring, n)?;
        for _ in 0..l {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `A[alpha|beta]`: rows `alpha`, columns `beta`.
    pub fn select(&self, alpha: &IndexTuple, beta: &IndexTuple) -> Result<Matrix> {
        self.check_tuple(alpha, self.rows)?;
        self.check_tuple(beta, self.cols)?;
        if alpha.len() != beta.len() {
            return Err(Error::InvalidIndexTuple(format!(
                "row tuple has {} indices, column tuple has {}",
                alpha.len(),
                beta.len()
            )));
        }
        Ok(self.select_raw(&alpha.zero_based(), &beta.zero_based()))
    }

    /// `A(alpha|beta)`: delete rows `alpha` and columns `beta`.
    pub fn delete(&self, alpha: &IndexTuple, beta: &IndexTuple) -> Result<Matrix> {
        self.check_tuple(alpha, self.rows)?;
        self.check_tuple(beta, self.cols)?;
        if alpha.len() != beta.len() {
            return Err(Error::InvalidIndexTuple(
                "row and column tuples differ in length".into(),
            ));
        }
        let keep_rows = complement(&alpha.zero_based(), self.rows);
        let keep_cols = complement(&beta.zero_based(), self.cols);
        if keep_rows.is_empty() || keep_cols.is_empty() {
            return Err(Error::InvalidIndexTuple(
                "deleting every row leaves an empty matrix".into(),
            ));
        }
        Ok(self.select_raw(&keep_rows, &keep_cols))
    }

    pub(crate) fn select_raw(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.semiring, rows.len(), cols.len(), |r, c| {
            self.at(rows[r], cols[c]).clone()
        })
    }

    fn check_tuple(&self, t: &IndexTuple, bound: usize) -> Result<()> {
        if t.ambient() != bound {
            return Err(Error::InvalidIndexTuple(format!(
                "tuple over 1..={} used on a dimension of size {bound}",
                t.ambient()
            )));
        }
        Ok(())
    }

    /// `A(j|i)`: delete row `j` and column `i`.
    pub fn minor(&self, j: usize, i: usize) -> Result<Matrix> {
        let n = self.order()?;
        if n < 2 {
            return Err(Error::TooSmall {
                what: "minor",
                n,
                min: 2,
            });
        }
        self.check_row(j)?;
        self.check_col(i)?;
        Ok(self.minor_raw(j - 1, i - 1))
    }

    pub(crate) fn minor_raw(&self, r: usize, c: usize) -> Matrix {
        let rows: Vec<usize> = (0..self.rows).filter(|&x| x != r).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&x| x != c).collect();
        self.select_raw(&rows, &cols)
    }

    /// `A(p => q)`: row `q` replaced by a copy of row `p`.
    pub fn row_replace(&self, p: usize, q: usize) -> Result<Matrix> {
        self.order()?;
        self.check_row(p)?;
        self.check_row(q)?;
        Ok(self.row_replace_raw(p - 1, q - 1))
    }

    pub(crate) fn row_replace_raw(&self, p: usize, q: usize) -> Matrix {
        Matrix::from_fn(self.semiring, self.rows, self.cols, |r, c| {
            let src = if r == q { p } else { r };
            self.at(src, c).clone()
        })
    }

    /// Entrywise canonical order; equivalent to `A + B == B`.
    pub fn leq(&self, other: &Matrix) -> Result<bool> {
        self.same_shape(other)?;
        let s = self.semiring;
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| s.le(a, b)))
    }

    /// `[[A, C], [O, B]]` for square `A`, `B` and `C` of matching shape.
    pub fn block_upper(a: &Matrix, c: &Matrix, b: &Matrix) -> Result<Matrix> {
        a.same_semiring(b)?;
        a.same_semiring(c)?;
        let (n, m) = (a.order()?, b.order()?);
        if c.rows != n || c.cols != m {
            return Err(c.shape_error(&Matrix {
                semiring: a.semiring,
                rows: n,
                cols: m,
                entries: Vec::new(),
            }));
        }
        let s = a.semiring;
        Ok(Matrix::from_fn(s, n + m, n + m, |r, col| match (r < n, col < n) {
            (true, true) => a.at(r, col).clone(),
            (true, false) => c.at(r, col - n).clone(),
            (false, true) => s.zero(),
            (false, false) => b.at(r - n, col - n).clone(),
        }))
    }

    fn clone_shape(&self) -> Matrix {
        Matrix {
            semiring: self.semiring,
            rows: self.rows,
            cols: self.cols,
            entries: Vec::new(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Entry `(i, sigma(i))` is one, every other entry zero.
pub fn permutation_matrix(sigma: &Permutation, semiring: Semiring) -> Matrix {
    let n = sigma.len();
    let map = sigma.as_slice();
    Matrix::from_fn(semiring, n, n, |r, c| {
        if map[r] == c {
            semiring.one()
        } else {
            semiring.zero()
        }
    })
}

/// A strictly increasing tuple `1 <= i_1 < .. < i_k <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple {
    n: usize,
    indices: Vec<usize>,
}

impl IndexTuple {
    pub fn new(n: usize, indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidIndexTuple("empty tuple".into()));
        }
        if indices.iter().any(|&i| i == 0 || i > n) {
            return Err(Error::InvalidIndexTuple(format!("{indices:?} leaves 1..={n}")));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndexTuple(format!(
                "{indices:?} is not strictly increasing"
            )));
        }
        Ok(IndexTuple { n, indices })
    }

    pub fn single(n: usize, i: usize) -> Result<Self> {
        IndexTuple::new(n, vec![i])
    }

    /// `(1, .., n)`.
    pub fn full(n: usize) -> Self {
        IndexTuple {
            n,
            indices: (1..=n).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// The indices of `1..=n` not in this tuple, if any remain.
    pub fn complement(&self) -> Option<IndexTuple> {
        let rest: Vec<usize> = (1..=self.n).filter(|i| !self.indices.contains(i)).collect();
        (!rest.is_empty()).then_some(IndexTuple {
            n: self.n,
            indices: rest,
        })
    }

    pub(crate) fn zero_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i - 1).collect()
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn complement(sorted: &[usize], n: usize) -> Vec<usize> {
    (0..n).filter(|x| !sorted.contains(x)).collect()
}

/// All `C(n, k)` strictly increasing `k`-tuples over `1..=n`, lexicographic.
pub fn omega(k: usize, n: usize) -> Result<Vec<IndexTuple>> {
    if k == 0 || k >= n {
        return Err(Error::InvalidIndexTuple(format!(
            "omega needs 1 <= k <= n-1, got k={k}, n={n}"
        )));
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=k).collect();
    loop {
        out.push(IndexTuple {
            n,
            indices: current.clone(),
        });
        // rightmost position that can still advance
        let Some(pos) = (0..k).rev().find(|&p| current[p] < n - (k - 1 - p)) else {
            break;
        };
        current[pos] += 1;
        for q in pos + 1..k {
            current[q] = current[q - 1] + 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mt(rows: &[&[&str]]) -> Matrix {
        Matrix::parse(Semiring::MaxTimes, rows).unwrap()
    }

    fn triangular_witness() -> Matrix {
        mt(&[&["0.1", "0", "0.2"], &["0", "0.2", "0.3"], &["0", "0", "0.3"]])
    }

    #[test]
    fn construction_validates() {
        assert!(Matrix::parse(Semiring::FuzzyMaxMin, &[&["2"]]).is_err());
        assert_eq!(
            Matrix::new(Semiring::Boolean, 0, 1, vec![]).unwrap_err(),
            Error::EmptyMatrix
        );
        assert!(Matrix::from_rows(Semiring::Boolean, vec![vec![Element::Bool(true)], vec![]]).is_err());
    }

    #[test]
    fn mat_add_examples() {
        let f = Semiring::FuzzyMaxMin;
        let a = Matrix::parse(f, &[&["0.2"]]).unwrap();
        let b = Matrix::parse(f, &[&["0.7"]]).unwrap();
        assert_eq!(a.add(&b).unwrap(), b);
        let mp = Semiring::MaxPlus;
        let a = Matrix::parse(mp, &[&["1", "-inf"], &["0", "2"]]).unwrap();
        let z = Matrix::parse(mp, &[&["0", "0"], &["0", "0"]]).unwrap();
        assert_eq!(
            a.add(&z).unwrap(),
            Matrix::parse(mp, &[&["1", "0"], &["0", "2"]]).unwrap()
        );
        assert_eq!(a.add(&a).unwrap(), a);
        assert!(a.add(&b).is_err());
        assert!(a.add(&Matrix::zeros(mp, 2, 3).unwrap()).is_err());
    }

    #[test]
    fn mat_mul_examples() {
        let a = mt(&[&["1", "1/2"], &["2", "2"]]);
        let b = mt(&[&["2", "1"], &["1", "0"]]);
        assert_eq!(a.mul(&b).unwrap(), mt(&[&["2", "1"], &["4", "2"]]));
        let i = Matrix::identity(Semiring::MaxTimes, 2).unwrap();
        assert_eq!(i.mul(&a).unwrap(), a);
        assert!(a.mul(&Matrix::zeros(Semiring::MaxTimes, 3, 1).unwrap()).is_err());

        // adjacency of the 3-cycle 1->2->3->1; its square maps i -> i+2
        let bo = Semiring::Boolean;
        let c = Matrix::parse(bo, &[&["0", "1", "0"], &["0", "0", "1"], &["1", "0", "0"]]).unwrap();
        let mut expected = Matrix::zeros(bo, 3, 3).unwrap();
        for i in 0..3 {
            let j = (i + 2) % 3;
            expected = expected.with_entry(i + 1, j + 1, Element::Bool(true)).unwrap();
        }
        assert_eq!(c.mul(&c).unwrap(), expected);
    }

    #[test]
    fn scalar_examples() {
        let a = mt(&[&["1", "1/2"], &["2", "2"]]);
        assert_eq!(a.scale(&Element::int(1)).unwrap(), a);
        assert_eq!(
            a.scale(&Element::int(0)).unwrap(),
            Matrix::zeros(Semiring::MaxTimes, 2, 2).unwrap()
        );
        assert_eq!(a.scale(&Element::int(2)).unwrap(), mt(&[&["2", "1"], &["4", "4"]]));
        assert!(a.scale(&Element::NegInf).is_err());
    }

    #[test]
    fn transpose_examples() {
        let s = mt(&[&["1", "2"], &["2", "3"]]);
        assert_eq!(s.transpose(), s);
        let e12 = mt(&[&["0", "1"], &["0", "0"]]);
        assert_eq!(e12.transpose(), mt(&[&["0", "0"], &["1", "0"]]));
        let r = mt(&[&["1", "2", "3"]]);
        assert_eq!(r.transpose().rows(), 3);
        assert_eq!(r.transpose().transpose(), r);
    }

    #[test]
    fn pow_examples() {
        let f = Matrix::parse(Semiring::FuzzyMaxMin, &[&["0.5", "0.2"], &["0.3", "0.5"]]).unwrap();
        assert_eq!(f.pow(1).unwrap(), f);
        assert_eq!(f.pow(0).unwrap(), Matrix::identity(Semiring::FuzzyMaxMin, 2).unwrap());
        let swap = permutation_matrix(&Permutation::new(vec![2, 1]).unwrap(), Semiring::Boolean);
        assert_eq!(swap.pow(2).unwrap(), Matrix::identity(Semiring::Boolean, 2).unwrap());
        let a = triangular_witness();
        assert_eq!(a.pow(2).unwrap(), a.mul(&a).unwrap());
        assert_eq!(a.pow(3).unwrap(), a.mul(&a).unwrap().mul(&a).unwrap());
        assert!(mt(&[&["1", "2"]]).pow(2).is_err());
    }

    #[test]
    fn selection_and_deletion() {
        let a = triangular_witness();
        let full = IndexTuple::full(3);
        assert_eq!(a.select(&full, &full).unwrap(), a);
        let one = IndexTuple::single(3, 1).unwrap();
        let two = IndexTuple::single(3, 2).unwrap();
        assert_eq!(a.select(&one, &two).unwrap(), mt(&[&["0"]]));
        assert_eq!(a.delete(&one, &one).unwrap(), a.minor(1, 1).unwrap());
        assert_eq!(a.minor(1, 1).unwrap(), mt(&[&["0.2", "0.3"], &["0", "0.3"]]));
        let ab = IndexTuple::new(3, vec![1, 2]).unwrap();
        assert_eq!(a.delete(&ab, &ab).unwrap(), mt(&[&["0.3"]]));
        assert!(a.delete(&full, &full).is_err());
        assert!(a.select(&one, &ab).is_err());
        assert!(a.select(&IndexTuple::single(4, 1).unwrap(), &one).is_err());
        assert!(a.minor(4, 1).is_err());
        assert!(mt(&[&["1"]]).minor(1, 1).is_err());
        let m2 = mt(&[&["1", "2"], &["3", "4"]]);
        assert_eq!(m2.minor(1, 1).unwrap(), mt(&[&["4"]]));
    }

    #[test]
    fn row_replacement() {
        let a = mt(&[&["1", "2"], &["3", "4"]]);
        assert_eq!(a.row_replace(1, 1).unwrap(), a);
        assert_eq!(a.row_replace(1, 2).unwrap(), mt(&[&["1", "2"], &["1", "2"]]));
        assert!(a.row_replace(3, 1).is_err());
    }

    #[test]
    fn permutation_matrices() {
        let s = Semiring::Boolean;
        assert_eq!(
            permutation_matrix(&Permutation::identity(3), s),
            Matrix::identity(s, 3).unwrap()
        );
        let swap = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(
            permutation_matrix(&swap, s),
            Matrix::parse(s, &[&["0", "1"], &["1", "0"]]).unwrap()
        );
        for sigma in Permutation::all(4) {
            let p = permutation_matrix(&sigma, Semiring::MaxPlus);
            assert_eq!(
                p.mul(&p.transpose()).unwrap(),
                Matrix::identity(Semiring::MaxPlus, 4).unwrap()
            );
        }
    }

    #[test]
    fn permutation_matrix_composition_on_s3() {
        // P_sigma has (i, sigma(i)) = 1, so P_sigma * P_tau = P_{tau∘sigma}
        let s = Semiring::FuzzyMaxProd;
        for sigma in Permutation::all(3) {
            for tau in Permutation::all(3) {
                let lhs = permutation_matrix(&sigma, s).mul(&permutation_matrix(&tau, s)).unwrap();
                assert_eq!(lhs, permutation_matrix(&tau.compose(&sigma).unwrap(), s));
            }
        }
    }

    #[test]
    fn omega_examples() {
        let show = |k, n| -> Vec<String> { omega(k, n).unwrap().iter().map(ToString::to_string).collect() };
        assert_eq!(show(1, 3), vec!["(1)", "(2)", "(3)"]);
        assert_eq!(show(2, 3), vec!["(1,2)", "(1,3)", "(2,3)"]);
        assert_eq!(omega(3, 6).unwrap().len(), 20);
        assert_eq!(omega(2, 5).unwrap().len(), 10);
        assert!(omega(0, 3).is_err());
        assert!(omega(3, 3).is_err());
    }

    #[test]
    fn mat_leq_examples() {
        let a = triangular_witness();
        assert!(a.leq(&a).unwrap());
        assert!(Matrix::zeros(Semiring::MaxTimes, 3, 3).unwrap().leq(&a).unwrap());
        let b = Matrix::constant(Semiring::MaxTimes, 3, Element::ratio(1, 4)).unwrap();
        assert!(a.leq(&a.add(&b).unwrap()).unwrap());
        assert!(!a.leq(&b).unwrap());
    }

    #[test]
    fn block_upper_layout() {
        let a = mt(&[&["1"]]);
        let b = mt(&[&["2"]]);
        let c = mt(&[&["3"]]);
        assert_eq!(
            Matrix::block_upper(&a, &c, &b).unwrap(),
            mt(&[&["1", "3"], &["0", "2"]])
        );
    }

    #[test]
    fn index_tuple_validation() {
        assert!(IndexTuple::new(3, vec![2, 1]).is_err());
        assert!(IndexTuple::new(3, vec![0]).is_err());
        assert!(IndexTuple::new(3, vec![4]).is_err());
        assert!(IndexTuple::new(3, vec![]).is_err());
        let t = IndexTuple::new(5, vec![2, 4]).unwrap();
        assert_eq!(t.complement().unwrap().indices(), &[1, 3, 5]);
        assert!(IndexTuple::full(2).complement().is_none());
    }
}
