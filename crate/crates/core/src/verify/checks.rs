//! One executable check per statement about permanents and adjoints, and
//! seeded suites that run them over generated instances.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::adjoint::{adj, satisfies_star};
use crate::assignment::{boolean_matching, per_maxmin, per_maxplus, AssignmentSolution};
use crate::error::{Error, Result};
use crate::matrix::{permutation_matrix, IndexTuple, Matrix};
use crate::permanent::{
    per_diag_dominant, per_enumerate, per_laplace, per_row_expansion, row_dominance_violation, subset_dp,
};
use crate::permutation::Permutation;
use crate::semiring::{Element, Semiring};
use crate::verify::gen::{draw_element, draw_profile, draw_star, draw_star_with_diagonal, rng_for, Profile, TrialRng};
use crate::verify::phi::lemma42_combine;
use crate::verify::report::{summarize, CheckReport, Counterexample, Outcome};

fn per(a: &Matrix) -> Element {
    subset_dp(a)
}

fn pow(s: Semiring, e: &Element, k: usize) -> Element {
    s.pow(e, k as u32)
}

/// `per(A(p1 => p2)) per(A(p2 => p3)) .. per(A(pk => p1)) <= per(A)^k`.
pub fn lemma43(a: &Matrix, ps: &[usize]) -> Result<Outcome> {
    let n = a.order()?;
    if ps.is_empty() || ps.len() > n {
        return Err(Error::Invalid(format!("need 1..={n} cycle indices, got {}", ps.len())));
    }
    let s = a.semiring();
    let mut left = s.one();
    for (idx, &p) in ps.iter().enumerate() {
        let next = ps[(idx + 1) % ps.len()];
        left = s.times(&left, &per(&a.row_replace(p, next)?));
    }
    let right = pow(s, &per(a), ps.len());
    Ok(Outcome::from_bool(s.le(&left, &right), || {
        Counterexample::new("cyclic product of row-replaced permanents exceeds per(A)^k")
            .matrix("A", a)
            .note("indices", format!("{ps:?}"))
            .value("left", &left)
            .value("right", &right)
    }))
}

/// `per(A adj(A)) = per(adj(A) A) = per(A)^n`.
pub fn thm35(a: &Matrix) -> Result<Outcome> {
    let n = a.order()?;
    let s = a.semiring();
    let adjoint = adj(a)?;
    let left = per(&a.mul(&adjoint)?);
    let right = per(&adjoint.mul(a)?);
    let power = pow(s, &per(a), n);
    Ok(Outcome::from_bool(left == power && right == power, || {
        Counterexample::new("per(A adj A), per(adj A A) and per(A)^n differ")
            .matrix("A", a)
            .value("per(A adj A)", &left)
            .value("per(adj A A)", &right)
            .value("per(A)^n", &power)
    }))
}

/// `per(A adj(A)) >= per(A)^n`.
pub fn lemma44(a: &Matrix) -> Result<Outcome> {
    let n = a.order()?;
    let s = a.semiring();
    let left = per(&a.mul(&adj(a)?)?);
    let power = pow(s, &per(a), n);
    Ok(Outcome::from_bool(s.le(&power, &left), || {
        Counterexample::new("per(A adj A) is not >= per(A)^n")
            .matrix("A", a)
            .value("per(A adj A)", &left)
            .value("per(A)^n", &power)
    }))
}

/// Entry `(i, j)` of `A adj(A)` equals `per(A(i => j))`.
pub fn row_replacement(a: &Matrix) -> Result<Outcome> {
    let n = a.order()?;
    let b = a.mul(&adj(a)?)?;
    for i in 1..=n {
        for j in 1..=n {
            let direct = per(&a.row_replace(i, j)?);
            if *b.entry(i, j)? != direct {
                return Ok(Outcome::Fail(Box::new(
                    Counterexample::new(format!("(A adj A)_{i}{j} != per(A({i} => {j}))"))
                        .matrix("A", a)
                        .value("product entry", b.entry(i, j)?)
                        .value("row-replaced permanent", &direct),
                )));
            }
        }
    }
    Ok(Outcome::Pass)
}

/// `per(AB) >= per(A) per(B)`.
pub fn prop23(a: &Matrix, b: &Matrix) -> Result<Outcome> {
    let s = a.semiring();
    let ab = a.mul(b)?;
    a.order()?;
    let left = per(&ab);
    let right = s.times(&per(a), &per(b));
    Ok(Outcome::from_bool(s.le(&right, &left), || {
        Counterexample::new("per(AB) is not >= per(A) per(B)")
            .matrix("A", a)
            .matrix("B", b)
            .value("per(AB)", &left)
            .value("per(A) per(B)", &right)
    }))
}

/// If `A^2 = A` and `per(A) >= 1` then `per(A)^2 = per(A)`. Instances
/// failing either premise are skipped.
pub fn cor25(a: &Matrix) -> Result<Outcome> {
    a.order()?;
    let s = a.semiring();
    if a.mul(a)? != *a {
        return Ok(Outcome::Skip);
    }
    let p = per(a);
    if !s.le(&s.one(), &p) {
        return Ok(Outcome::Skip);
    }
    let square = s.times(&p, &p);
    Ok(Outcome::from_bool(square == p, || {
        Counterexample::new("idempotent A with per(A) >= 1 has non-idempotent permanent")
            .matrix("A", a)
            .value("per(A)", &p)
            .value("per(A)^2", &square)
    }))
}

/// Inputs for the six permanent identities checked together.
#[derive(Debug, Clone)]
pub struct Prop21Instance {
    pub a: Matrix,
    pub b: Matrix,
    /// Upper-right block of the block-triangular clause.
    pub c: Matrix,
    pub lambda: Element,
    pub sigma: Permutation,
    pub tau: Permutation,
}

/// Scalar, transpose, permutation invariance, dominant diagonal,
/// block-triangular and monotonicity clauses.
pub fn prop21(inst: &Prop21Instance) -> Result<Outcome> {
    let Prop21Instance {
        a,
        b,
        c,
        lambda,
        sigma,
        tau,
    } = inst;
    let n = a.order()?;
    let s = a.semiring();
    let pa = per(a);
    let fail = |clause: &str, left: &Element, right: &Element| {
        Outcome::Fail(Box::new(
            Counterexample::new(clause)
                .matrix("A", a)
                .matrix("B", b)
                .matrix("C", c)
                .value("lambda", lambda)
                .note("sigma", sigma.to_string())
                .note("tau", tau.to_string())
                .value("left", left)
                .value("right", right),
        ))
    };

    let left = per(&a.scale(lambda)?);
    let right = s.times(&pow(s, lambda, n), &pa);
    if left != right {
        return Ok(fail("per(lambda A) = lambda^n per(A)", &left, &right));
    }

    let left = per(&a.transpose());
    if left != pa {
        return Ok(fail("per(A^T) = per(A)", &left, &pa));
    }

    let paq = permutation_matrix(sigma, s).mul(a)?.mul(&permutation_matrix(tau, s))?;
    let left = per(&paq);
    if left != pa {
        return Ok(fail("per(PAQ) = per(A)", &left, &pa));
    }

    // raise each diagonal entry to its row sum so the diagonal dominates
    let mut dominated = a.clone();
    for i in 1..=n {
        let row_sum = s.sum(a.row_vec(i)?.iter());
        dominated = dominated.with_entry(i, i, row_sum)?;
    }
    for m in [Some(&dominated), row_dominance_violation(a)?.is_none().then_some(a)]
        .into_iter()
        .flatten()
    {
        let left = per_diag_dominant(m)?;
        let right = per_enumerate(m)?;
        if left != right {
            return Ok(fail("dominant diagonal: per(A) = a_11 .. a_nn", &left, &right));
        }
    }

    let block = Matrix::block_upper(a, c, b)?;
    let left = per(&block);
    let right = s.times(&pa, &per(b));
    if left != right {
        return Ok(fail("per([[A, C], [O, B]]) = per(A) per(B)", &left, &right));
    }

    let upper = a.add(b)?;
    let right = per(&upper);
    if !s.le(&pa, &right) {
        return Ok(fail("A <= A + B implies per(A) <= per(A + B)", &pa, &right));
    }
    Ok(Outcome::Pass)
}

/// Monotonicity, subadditivity and transpose commutation of the adjoint.
pub fn prop31(a: &Matrix, b: &Matrix) -> Result<Outcome> {
    let adj_a = adj(a)?;
    let adj_b = adj(b)?;
    let sum = a.add(b)?;
    let adj_sum = adj(&sum)?;
    let cx = |clause: &str| {
        Outcome::Fail(Box::new(
            Counterexample::new(clause)
                .matrix("A", a)
                .matrix("B", b)
                .matrix("adj(A)", &adj_a)
                .matrix("adj(A + B)", &adj_sum),
        ))
    };
    if !adj_a.leq(&adj_sum)? {
        return Ok(cx("A <= A + B implies adj(A) <= adj(A + B)"));
    }
    if !adj_a.add(&adj_b)?.leq(&adj_sum)? {
        return Ok(cx("adj(A) + adj(B) <= adj(A + B)"));
    }
    if adj_a.transpose() != adj(&a.transpose())? {
        return Ok(cx("adj(A)^T = adj(A^T)"));
    }
    Ok(Outcome::Pass)
}

/// For `A` satisfying (*): `adj(A) = A^{n-1}`, `per(adj A) = per(A)^{n-1}`,
/// and for `l <= 4` both `per(A^l) = per(A)^l` and (*) for `A^l`.
/// Instances violating (*) are skipped.
pub fn thm33(a: &Matrix) -> Result<Outcome> {
    let n = a.order()?;
    if n < 2 || !satisfies_star(a)?.holds {
        return Ok(Outcome::Skip);
    }
    let s = a.semiring();
    let adjoint = adj(a)?;
    let power = a.pow(n as u32 - 1)?;
    if adjoint != power {
        return Ok(Outcome::Fail(Box::new(
            Counterexample::new("adj(A) = A^{n-1}")
                .matrix("A", a)
                .matrix("adj(A)", &adjoint)
                .matrix("A^{n-1}", &power),
        )));
    }
    let pa = per(a);
    let left = per(&adjoint);
    let right = pow(s, &pa, n - 1);
    if left != right {
        return Ok(Outcome::Fail(Box::new(
            Counterexample::new("per(adj A) = per(A)^{n-1}")
                .matrix("A", a)
                .value("per(adj A)", &left)
                .value("per(A)^{n-1}", &right),
        )));
    }
    let mut al = a.clone();
    for l in 1..=4 {
        if l > 1 {
            al = al.mul(a)?;
        }
        let left = per(&al);
        let right = pow(s, &pa, l);
        if left != right {
            return Ok(Outcome::Fail(Box::new(
                Counterexample::new(format!("per(A^{l}) = per(A)^{l}"))
                    .matrix("A", a)
                    .value("left", &left)
                    .value("right", &right),
            )));
        }
        if !satisfies_star(&al)?.holds {
            return Ok(Outcome::Fail(Box::new(
                Counterexample::new(format!("A^{l} satisfies (*)"))
                    .matrix("A", a)
                    .matrix("A^l", &al),
            )));
        }
    }
    Ok(Outcome::Pass)
}

/// Enumeration, subset DP, Laplace along every proper row tuple and row
/// expansion along every row all agree.
pub fn permanent_agreement(a: &Matrix) -> Result<Outcome> {
    let n = a.order()?;
    let reference = per_enumerate(a)?;
    let mut candidates: Vec<(String, Element)> = vec![("subset-dp".into(), per(a))];
    if n >= 2 {
        for mask in 1u32..(1 << n) - 1 {
            let rows: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            let alpha = IndexTuple::new(n, rows)?;
            candidates.push((format!("laplace {alpha}"), per_laplace(a, &alpha)?));
        }
        for i in 1..=n {
            candidates.push((format!("row {i}"), per_row_expansion(a, i)?));
        }
    }
    for (name, value) in candidates {
        if value != reference {
            return Ok(Outcome::Fail(Box::new(
                Counterexample::new(format!("{name} disagrees with enumeration"))
                    .matrix("A", a)
                    .value("enumeration", &reference)
                    .value(&name, &value),
            )));
        }
    }
    Ok(Outcome::Pass)
}

/// The semiring's fast path matches subset DP and its witness reproduces
/// the value.
pub fn fast_path(a: &Matrix) -> Result<Outcome> {
    let reference = per(a);
    let (value, witness_ok) = match a.semiring() {
        Semiring::MaxPlus => solution_parts(a, per_maxplus(a)?),
        Semiring::FuzzyMaxMin => solution_parts(a, per_maxmin(a)?),
        Semiring::Boolean => {
            let m = boolean_matching(a)?;
            let ok = m
                .as_ref()
                .is_none_or(|p| crate::permanent::diagonal_product(a, p).is_ok_and(|v| v == Element::Bool(true)));
            (Element::Bool(m.is_some()), ok)
        }
        other => return Err(Error::Invalid(format!("no fast permanent for semiring {other}"))),
    };
    Ok(Outcome::from_bool(value == reference && witness_ok, || {
        Counterexample::new("fast path disagrees with subset DP or has an invalid witness")
            .matrix("A", a)
            .value("fast", &value)
            .value("subset-dp", &reference)
            .note("witness valid", witness_ok.to_string())
    }))
}

fn solution_parts(a: &Matrix, sol: AssignmentSolution) -> (Element, bool) {
    let ok = sol.witness_holds(a);
    (sol.value, ok)
}

fn single(statement: &str, a: &Matrix, outcome: Outcome) -> CheckReport {
    summarize(statement, &a.semiring().to_string(), Some(a.rows()), 0, [outcome])
}

pub fn check_lemma43(a: &Matrix, ps: &[usize]) -> Result<CheckReport> {
    Ok(single("lemma43", a, lemma43(a, ps)?))
}

pub fn check_thm35(a: &Matrix) -> Result<CheckReport> {
    Ok(single("thm35", a, thm35(a)?))
}

pub fn check_lemma44(a: &Matrix) -> Result<CheckReport> {
    Ok(single("lemma44", a, lemma44(a)?))
}

pub fn check_prop23(a: &Matrix, b: &Matrix) -> Result<CheckReport> {
    Ok(single("prop23", a, prop23(a, b)?))
}

pub fn check_cor25(a: &Matrix) -> Result<CheckReport> {
    Ok(single("cor25", a, cor25(a)?))
}

/// Runs the six permanent identities with `C = A + B` as the off-diagonal block.
pub fn check_prop21(
    a: &Matrix,
    b: &Matrix,
    lambda: &Element,
    sigma: &Permutation,
    tau: &Permutation,
) -> Result<CheckReport> {
    a.semiring().ensure(lambda)?;
    let inst = Prop21Instance {
        a: a.clone(),
        b: b.clone(),
        c: a.add(b)?,
        lambda: lambda.clone(),
        sigma: sigma.clone(),
        tau: tau.clone(),
    };
    Ok(single("prop21", a, prop21(&inst)?))
}

pub fn check_prop31(a: &Matrix, b: &Matrix) -> Result<CheckReport> {
    Ok(single("prop31", a, prop31(a, b)?))
}

/// Named batches of checks runnable from a seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Permanents,
    Fast,
    Thm35,
    Lemma43,
    Lemma44,
    RowReplacement,
    Prop21,
    Prop23,
    Prop31,
    Cor25,
    Thm33,
    Lemma42,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Permanents,
        Suite::Fast,
        Suite::Thm35,
        Suite::Lemma43,
        Suite::Lemma44,
        Suite::RowReplacement,
        Suite::Prop21,
        Suite::Prop23,
        Suite::Prop31,
        Suite::Cor25,
        Suite::Thm33,
        Suite::Lemma42,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Permanents => "permanents",
            Suite::Fast => "fast",
            Suite::Thm35 => "thm35",
            Suite::Lemma43 => "lemma43",
            Suite::Lemma44 => "lemma44",
            Suite::RowReplacement => "row_replacement",
            Suite::Prop21 => "prop21",
            Suite::Prop23 => "prop23",
            Suite::Prop31 => "prop31",
            Suite::Cor25 => "cor25",
            Suite::Thm33 => "thm33",
            Suite::Lemma42 => "lemma42",
        }
    }

    /// Whether the suite draws its instances itself, ignoring the semiring.
    pub fn is_combinatorial(&self) -> bool {
        matches!(self, Suite::Lemma42)
    }

    /// Semirings the suite applies to.
    pub fn supports(&self, s: Semiring) -> bool {
        match self {
            Suite::Fast => matches!(s, Semiring::MaxPlus | Semiring::FuzzyMaxMin | Semiring::Boolean),
            _ => true,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite `{s}`")))
    }
}

/// Parameters of a seeded suite run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteRun {
    pub semiring: Semiring,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub profile: Profile,
}

fn random_permutation(n: usize, rng: &mut TrialRng) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("a shuffle is a bijection")
}

fn one_trial(suite: Suite, run: &SuiteRun, rng: &mut TrialRng) -> Result<Outcome> {
    let (s, n) = (run.semiring, run.n);
    let draw = |rng: &mut TrialRng| draw_profile(s, n, run.profile, rng);
    match suite {
        Suite::Permanents => permanent_agreement(&draw(rng)),
        Suite::Fast => fast_path(&draw(rng)),
        Suite::Thm35 => thm35(&draw(rng)),
        Suite::Lemma44 => lemma44(&draw(rng)),
        Suite::RowReplacement => row_replacement(&draw(rng)),
        Suite::Lemma43 => {
            let a = draw(rng);
            let k = rng.gen_range(1..=n);
            let ps: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
            lemma43(&a, &ps)
        }
        Suite::Prop21 => {
            let inst = Prop21Instance {
                a: draw(rng),
                b: draw(rng),
                c: draw(rng),
                lambda: draw_element(&s, rng),
                sigma: random_permutation(n, rng),
                tau: random_permutation(n, rng),
            };
            prop21(&inst)
        }
        Suite::Prop23 => {
            let a = draw(rng);
            prop23(&a, &draw(rng))
        }
        Suite::Prop31 => {
            let a = draw(rng);
            prop31(&a, &draw(rng))
        }
        Suite::Cor25 => {
            // entries below one around a unit diagonal make A^{n-1} idempotent
            let m = draw_star_with_diagonal(s, n, &s.one(), rng);
            let candidate = if rng.gen_bool(0.75) {
                m.pow(n.max(2) as u32 - 1)?
            } else {
                draw(rng)
            };
            cor25(&candidate)
        }
        Suite::Thm33 => thm33(&draw_star(s, n, rng)),
        Suite::Lemma42 => unreachable!("combinatorial suite has no random trials"),
    }
}

/// Runs `suite` for trials `0..trials`, instance `t` drawn from seed
/// `seed + t`. Trials run in parallel; the report is identical to a serial run.
pub fn run_suite(suite: Suite, run: &SuiteRun) -> Result<CheckReport> {
    if suite.is_combinatorial() {
        return lemma42_exhaustive(run.n);
    }
    if !suite.supports(run.semiring) {
        return Err(Error::Invalid(format!(
            "suite {suite} does not apply to {}",
            run.semiring
        )));
    }
    let min_n = match suite {
        Suite::Permanents | Suite::Fast | Suite::Prop23 | Suite::Prop21 | Suite::Lemma43 | Suite::Cor25 => 1,
        _ => 2,
    };
    if run.n < min_n {
        return Err(Error::TooSmall {
            what: suite.name(),
            n: run.n,
            min: min_n,
        });
    }
    let outcomes = (0..run.trials)
        .into_par_iter()
        .map(|t| one_trial(suite, run, &mut rng_for(run.seed.wrapping_add(t as u64))))
        .collect::<Result<Vec<Outcome>>>()?;
    Ok(summarize(
        suite.name(),
        &run.semiring.to_string(),
        Some(run.n),
        run.seed,
        outcomes,
    ))
}

/// Every `sigma, pi` in `S_n` and every `p, q, r` with `q != r`.
pub fn lemma42_exhaustive(n: usize) -> Result<CheckReport> {
    if n < 2 {
        return Err(Error::TooSmall {
            what: "lemma42",
            n,
            min: 2,
        });
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let outcomes: Vec<Outcome> = perms
        .par_iter()
        .flat_map_iter(|sigma| {
            let perms = &perms;
            perms.iter().flat_map(move |pi| {
                (1..=n).flat_map(move |p| {
                    (1..=n).flat_map(move |q| {
                        (1..=n)
                            .filter(move |&r| r != q)
                            .map(move |r| match lemma42_combine(sigma, pi, p, q, r) {
                                Ok(_) => Outcome::Pass,
                                Err(e) => Outcome::Fail(Box::new(
                                    Counterexample::new(e.to_string())
                                        .note("sigma", sigma.to_string())
                                        .note("pi", pi.to_string())
                                        .note("p,q,r", format!("{p},{q},{r}")),
                                )),
                            })
                    })
                })
            })
        })
        .collect();
    Ok(summarize("lemma42", "-", Some(n), 0, outcomes))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mt(rows: &[&[&str]]) -> Matrix {
        Matrix::parse(Semiring::MaxTimes, rows).unwrap()
    }

    fn strict_pair() -> (Matrix, Matrix) {
        (mt(&[&["1", "0.5"], &["2", "2"]]), mt(&[&["2", "1"], &["1", "0"]]))
    }

    fn triangular_witness() -> Matrix {
        mt(&[&["0.1", "0", "0.2"], &["0", "0.2", "0.3"], &["0", "0", "0.3"]])
    }

    #[test]
    fn cyclic_row_replacement_examples() {
        let (a, _) = strict_pair();
        assert!(check_lemma43(&a, &[2]).unwrap().all_passed());
        assert!(check_lemma43(&a, &[1, 2]).unwrap().all_passed());
        assert!(check_lemma43(&a, &[1, 2, 3]).is_err());
        assert!(check_lemma43(&a, &[]).is_err());
    }

    #[test]
    fn adjoint_products_on_triangular_witness() {
        let a = triangular_witness();
        let report = check_thm35(&a).unwrap();
        assert!(report.all_passed());
        let adjoint = adj(&a).unwrap();
        let expected = Element::ratio(216, 1_000_000_000);
        assert_eq!(per(&a.mul(&adjoint).unwrap()), expected);
        assert_eq!(per(&adjoint.mul(&a).unwrap()), expected);
        assert_ne!(per(&a), expected);
        assert!(check_lemma44(&a).unwrap().all_passed());
    }

    #[test]
    fn identity_cases() {
        for s in Semiring::BUILT_INS {
            let i = Matrix::identity(s, 3).unwrap();
            assert!(check_thm35(&i).unwrap().all_passed(), "{s}");
            assert!(check_lemma44(&i).unwrap().all_passed(), "{s}");
            assert!(check_cor25(&i).unwrap().all_passed(), "{s}");
            assert!(check_prop23(&i, &i).unwrap().all_passed(), "{s}");
        }
    }

    #[test]
    fn product_inequality_is_strict_on_pair() {
        let (a, b) = strict_pair();
        assert!(check_prop23(&a, &b).unwrap().all_passed());
        let s = Semiring::MaxTimes;
        assert_eq!(per(&a.mul(&b).unwrap()), Element::int(4));
        assert_eq!(s.times(&per(&a), &per(&b)), Element::int(2));
        let i = Matrix::identity(s, 2).unwrap();
        assert_eq!(per(&a.mul(&i).unwrap()), s.times(&per(&a), &per(&i)));
    }

    #[test]
    fn idempotent_permanent_examples() {
        let z = Matrix::parse(Semiring::MaxPlus, &[&["0", "0"], &["0", "0"]]).unwrap();
        let report = check_cor25(&z).unwrap();
        assert_eq!((report.trials, report.passed), (1, 1));
        // not idempotent: skipped rather than failed
        let (a, _) = strict_pair();
        let report = check_cor25(&a).unwrap();
        assert_eq!((report.trials, report.skipped), (0, 1));
        assert!(report.counterexample.is_none());
        // boolean idempotents found by filtering every 2x2 matrix
        let s = Semiring::Boolean;
        let mut seen = 0;
        for bits in 0u8..16 {
            let m = Matrix::from_fn(s, 2, 2, |r, c| Element::Bool(bits >> (2 * r + c) & 1 == 1));
            let report = check_cor25(&m).unwrap();
            assert!(report.counterexample.is_none());
            seen += report.trials;
        }
        assert!(seen > 0);
    }

    #[test]
    fn permanent_identity_examples() {
        let (a, b) = strict_pair();
        let id = Permutation::identity(2);
        assert!(check_prop21(&a, &b, &Element::int(1), &id, &id).unwrap().all_passed());
        assert!(
            check_prop21(&a, &b, &Element::int(2), &Permutation::new(vec![2, 1]).unwrap(), &id)
                .unwrap()
                .all_passed()
        );
        assert_eq!(per(&a.scale(&Element::int(2)).unwrap()), Element::int(8));
    }

    #[test]
    fn adjoint_clauses_with_zero_matrix() {
        let a = triangular_witness();
        let z = Matrix::zeros(Semiring::MaxTimes, 3, 3).unwrap();
        assert!(check_prop31(&a, &z).unwrap().all_passed());
    }

    #[test]
    fn suites_are_reproducible() {
        let run = SuiteRun {
            semiring: Semiring::Lukasiewicz,
            n: 3,
            trials: 20,
            seed: 42,
            profile: Profile::Dense,
        };
        let first = run_suite(Suite::Thm35, &run).unwrap();
        assert_eq!(first, run_suite(Suite::Thm35, &run).unwrap());
        assert!(first.all_passed());
    }

    #[test]
    fn fast_suite_rejects_other_semirings() {
        let run = SuiteRun {
            semiring: Semiring::MaxTimes,
            n: 3,
            trials: 1,
            seed: 0,
            profile: Profile::Dense,
        };
        assert!(run_suite(Suite::Fast, &run).is_err());
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
    }

    #[test]
    fn exchange_is_exhaustive_at_two() {
        let report = lemma42_exhaustive(2).unwrap();
        // 2! * 2! * p in 2 * ordered (q, r) with q != r in 2
        assert_eq!(report.trials, 16);
        assert!(report.all_passed());
    }
}
