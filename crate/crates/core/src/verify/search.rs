//! Seeded searches for matrices that break an equality.
//!
//! A search report counts a trial as passed when no witness was found in it,
//! so `counterexample` holds the first witness. Absence of a witness only
//! means none turned up in the trials run.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::adjoint::adj;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::permanent::subset_dp;
use crate::semiring::Semiring;
use crate::verify::gen::{draw_pair, draw_profile, rng_for, GenSpec, Profile};
use crate::verify::report::{summarize, CheckReport, Counterexample, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchTarget {
    /// `per(A adj(A)) != per(A)`.
    Problem11,
    /// `per(AB) != per(A) per(B)`, i.e. the product inequality is strict.
    Strict23,
    /// `per(adj(A)) != per(A)^{n-1}` with no condition on `A`.
    Eq32General,
}

impl SearchTarget {
    pub const ALL: [SearchTarget; 3] = [
        SearchTarget::Problem11,
        SearchTarget::Strict23,
        SearchTarget::Eq32General,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SearchTarget::Problem11 => "problem_1_1",
            SearchTarget::Strict23 => "strict_2_3",
            SearchTarget::Eq32General => "eq_3_2_general",
        }
    }
}

impl fmt::Display for SearchTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SearchTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SearchTarget::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown search target `{s}`")))
    }
}

/// Known matrices used to seed searches.
pub mod fixtures {
    use crate::matrix::Matrix;
    use crate::semiring::Semiring;

    /// `A = [[1, 1/2], [2, 2]]` over max-times, `per(A) = 2`.
    pub fn strict_pair_a() -> Matrix {
        Matrix::parse(Semiring::MaxTimes, &[&["1", "1/2"], &["2", "2"]]).expect("valid fixture")
    }

    /// `B = [[2, 1], [1, 0]]` over max-times, `per(B) = 1`, `per(AB) = 4`.
    pub fn strict_pair_b() -> Matrix {
        Matrix::parse(Semiring::MaxTimes, &[&["2", "1"], &["1", "0"]]).expect("valid fixture")
    }

    /// The upper-triangular 3x3 matrix with `per = 6/1000` and
    /// `per(A adj A) = (6/1000)^3`. Only defined for carriers containing `[0, 1]`
    /// with ordinary multiplication.
    pub fn triangular_witness(s: Semiring) -> Option<Matrix> {
        matches!(s, Semiring::MaxTimes | Semiring::FuzzyMaxProd).then(|| {
            Matrix::parse(s, &[&["1/10", "0", "1/5"], &["0", "1/5", "3/10"], &["0", "0", "3/10"]])
                .expect("valid fixture")
        })
    }
}

fn problem11(a: &Matrix) -> Result<Outcome> {
    let p = subset_dp(a);
    let left = subset_dp(&a.mul(&adj(a)?)?);
    Ok(Outcome::from_bool(left == p, || {
        Counterexample::new("per(A adj A) != per(A)")
            .matrix("A", a)
            .value("per(A adj A)", &left)
            .value("per(A)", &p)
    }))
}

fn strict23(a: &Matrix, b: &Matrix) -> Result<Outcome> {
    let s = a.semiring();
    let left = subset_dp(&a.mul(b)?);
    let right = s.times(&subset_dp(a), &subset_dp(b));
    Ok(Outcome::from_bool(left == right, || {
        Counterexample::new("per(AB) > per(A) per(B)")
            .matrix("A", a)
            .matrix("B", b)
            .value("per(AB)", &left)
            .value("per(A) per(B)", &right)
    }))
}

fn per_adjoint_power(a: &Matrix) -> Result<Outcome> {
    let s = a.semiring();
    let n = a.order()?;
    let left = subset_dp(&adj(a)?);
    let right = s.pow(&subset_dp(a), n as u32 - 1);
    Ok(Outcome::from_bool(left == right, || {
        Counterexample::new("per(adj A) != per(A)^{n-1}")
            .matrix("A", a)
            .value("per(adj A)", &left)
            .value("per(A)^{n-1}", &right)
    }))
}

fn trial(target: SearchTarget, spec: &GenSpec, t: usize) -> Result<Outcome> {
    let s = spec.semiring;
    let mut rng = rng_for(spec.trial(t).seed);
    match target {
        SearchTarget::Problem11 => {
            let seeded = fixtures::triangular_witness(s).filter(|m| t == 0 && m.rows() == spec.n);
            problem11(&seeded.unwrap_or_else(|| draw_profile(s, spec.n, spec.profile, &mut rng)))
        }
        SearchTarget::Strict23 => {
            if t == 0 && s == Semiring::MaxTimes && spec.n == 2 {
                return strict23(&fixtures::strict_pair_a(), &fixtures::strict_pair_b());
            }
            let (a, b) = match spec.profile {
                Profile::ComparablePair => draw_pair(s, spec.n, &mut rng),
                p => {
                    let a = draw_profile(s, spec.n, p, &mut rng);
                    (a, draw_profile(s, spec.n, p, &mut rng))
                }
            };
            strict23(&a, &b)
        }
        SearchTarget::Eq32General => per_adjoint_power(&draw_profile(s, spec.n, spec.profile, &mut rng)),
    }
}

/// Runs `trials` seeded instances looking for a witness against `target`.
pub fn search_counterexample(target: SearchTarget, spec: &GenSpec, trials: usize) -> Result<CheckReport> {
    let min_n = if target == SearchTarget::Strict23 { 1 } else { 2 };
    if spec.n < min_n {
        return Err(Error::TooSmall {
            what: target.name(),
            n: spec.n,
            min: min_n,
        });
    }
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|t| trial(target, spec, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(summarize(
        target.name(),
        &spec.semiring.to_string(),
        Some(spec.n),
        spec.seed,
        outcomes,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::Element;

    #[test]
    fn problem11_trial_zero_is_the_fixture() {
        let spec = GenSpec::new(Semiring::MaxTimes, 3, 0, Profile::Dense);
        let report = search_counterexample(SearchTarget::Problem11, &spec, 5).unwrap();
        let cx = report.counterexample.as_ref().unwrap();
        assert_eq!(cx.trial, 0);
        let a = cx.matrices[0].matrix.to_matrix().unwrap();
        assert_eq!(a, fixtures::triangular_witness(Semiring::MaxTimes).unwrap());
    }

    #[test]
    fn strict23_finds_the_fixture_pair() {
        let spec = GenSpec::new(Semiring::MaxTimes, 2, 3, Profile::Dense);
        let report = search_counterexample(SearchTarget::Strict23, &spec, 3).unwrap();
        let cx = report.counterexample.unwrap();
        assert_eq!(cx.trial, 0);
        assert_eq!(cx.values[0].value, "4");
        assert_eq!(cx.values[1].value, "2");
    }

    #[test]
    fn fixtures_have_the_stated_permanents() {
        assert_eq!(subset_dp(&fixtures::strict_pair_a()), Element::int(2));
        assert_eq!(subset_dp(&fixtures::strict_pair_b()), Element::int(1));
        let a = fixtures::triangular_witness(Semiring::FuzzyMaxProd).unwrap();
        assert_eq!(subset_dp(&a), Element::ratio(6, 1000));
        assert!(fixtures::triangular_witness(Semiring::Lukasiewicz).is_none());
    }

    #[test]
    fn searches_are_reproducible() {
        let spec = GenSpec::new(Semiring::Lukasiewicz, 3, 17, Profile::Dense);
        for target in SearchTarget::ALL {
            let a = search_counterexample(target, &spec, 30).unwrap();
            assert_eq!(a, search_counterexample(target, &spec, 30).unwrap());
        }
    }
}
