//! End-to-end acceptance run. Prints one line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use semiperm::axioms::{check_axioms, default_samples, NonIdempotentControl};
use semiperm::verify::checks::lemma42_exhaustive;
use semiperm::verify::search::fixtures;
use semiperm::verify::{gen_matrix, run_suite, CheckReport, GenSpec, Profile, Suite, SuiteRun};
use semiperm::{adj, per_subset_dp, Element, Semiring};

type Criterion = fn() -> Result<String, String>;

struct Verdict {
    ok: bool,
    detail: String,
}

fn timed(limit: Option<Duration>, body: impl FnOnce() -> Result<String, String>) -> Verdict {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let timing = format!("{:.2}s", elapsed.as_secs_f64());
    match outcome {
        Err(why) => Verdict {
            ok: false,
            detail: format!("{why} ({timing})"),
        },
        Ok(summary) => match limit {
            Some(limit) if elapsed >= limit => Verdict {
                ok: false,
                detail: format!("{summary}; took {timing}, limit {:.0}s", limit.as_secs_f64()),
            },
            _ => Verdict {
                ok: true,
                detail: format!("{summary} ({timing})"),
            },
        },
    }
}

fn expect(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

/// Runs `suite` for every built-in semiring and each `n`, requiring zero failures.
fn sweep(
    suite: Suite,
    semirings: &[Semiring],
    ns: std::ops::RangeInclusive<usize>,
    trials: usize,
    profile: Profile,
) -> Result<(usize, usize), String> {
    let (mut evaluated, mut skipped) = (0, 0);
    for &semiring in semirings {
        for n in ns.clone() {
            let run = SuiteRun {
                semiring,
                n,
                trials,
                seed: 1000 * n as u64,
                profile,
            };
            let report: CheckReport = run_suite(suite, &run).map_err(|e| format!("{suite} {semiring} n={n}: {e}"))?;
            if !report.all_passed() {
                return Err(format!("{report}"));
            }
            evaluated += report.trials;
            skipped += report.skipped;
        }
    }
    Ok((evaluated, skipped))
}

fn criterion_1() -> Result<String, String> {
    let s = Semiring::MaxTimes;
    let (a, b) = (fixtures::strict_pair_a(), fixtures::strict_pair_b());
    let pa = per_subset_dp(&a).map_err(|e| e.to_string())?;
    let pb = per_subset_dp(&b).map_err(|e| e.to_string())?;
    let pab = per_subset_dp(&a.mul(&b).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    expect(pa == Element::int(2), format!("per(A) = {pa}"))?;
    expect(pb == Element::int(1), format!("per(B) = {pb}"))?;
    expect(pab == Element::int(4), format!("per(AB) = {pab}"))?;
    let product = s.mul(&pa, &pb).unwrap();
    expect(
        s.leq(&product, &pab).unwrap() && product != pab,
        "per(AB) is not strictly above per(A) per(B)",
    )?;
    Ok(format!("per(A)={pa}, per(B)={pb}, per(AB)={pab} > {product}"))
}

fn criterion_2() -> Result<String, String> {
    let a = fixtures::triangular_witness(Semiring::MaxTimes).unwrap();
    let s = a.semiring();
    let adjoint = adj(&a).map_err(|e| e.to_string())?;
    let pa = per_subset_dp(&a).unwrap();
    let left = per_subset_dp(&a.mul(&adjoint).unwrap()).unwrap();
    let right = per_subset_dp(&adjoint.mul(&a).unwrap()).unwrap();
    let cube = s.nat_pow(&pa, 3).unwrap();
    expect(pa == Element::ratio(6, 1000), format!("per(A) = {pa}"))?;
    expect(
        left == Element::ratio(216, 1_000_000_000),
        format!("per(A adj A) = {left}"),
    )?;
    expect(right == left, format!("per(adj A A) = {right}"))?;
    expect(cube == left, format!("per(A)^3 = {cube}"))?;
    expect(left != pa, "per(A adj A) equals per(A)")?;
    Ok(format!("per(A)={pa}, per(A adj A)=per(adj A A)={left}=per(A)^3"))
}

fn criterion_3() -> Result<String, String> {
    let (evaluated, _) = sweep(Suite::Permanents, &Semiring::BUILT_INS, 2..=6, 200, Profile::Dense)?;
    Ok(format!("{evaluated} matrices, zero mismatches"))
}

fn criterion_4() -> Result<String, String> {
    let (evaluated, _) = sweep(Suite::Thm35, &Semiring::BUILT_INS, 2..=5, 500, Profile::Dense)?;
    Ok(format!("{evaluated} matrices, zero failures"))
}

fn criterion_5() -> Result<String, String> {
    let (evaluated, skipped) = sweep(Suite::Thm33, &Semiring::BUILT_INS, 2..=5, 200, Profile::Star)?;
    expect(skipped == 0, format!("{skipped} generated matrices violated (*)"))?;
    Ok(format!("{evaluated} matrices, zero failures"))
}

fn criterion_6() -> Result<String, String> {
    let mut counts = Vec::new();
    for (n, expected) in [(3, 648), (4, 24 * 24 * 4 * 4 * 3)] {
        let report = lemma42_exhaustive(n).map_err(|e| e.to_string())?;
        expect(report.all_passed(), format!("{report}"))?;
        expect(
            report.trials == expected,
            format!("n={n}: {} combinations, expected {expected}", report.trials),
        )?;
        counts.push(report.trials);
    }
    Ok(format!("{} + {} combinations, zero failures", counts[0], counts[1]))
}

fn criterion_7() -> Result<String, String> {
    let mut parts = Vec::new();
    for suite in [
        Suite::Lemma43,
        Suite::Lemma44,
        Suite::Prop21,
        Suite::Prop23,
        Suite::Prop31,
        Suite::Cor25,
    ] {
        let (evaluated, skipped) = sweep(suite, &Semiring::BUILT_INS, 2..=5, 500, Profile::Dense)?;
        expect(evaluated > 0, format!("{suite}: every instance was skipped"))?;
        parts.push(if skipped > 0 {
            format!("{suite} {evaluated} ({skipped} skipped)")
        } else {
            format!("{suite} {evaluated}")
        });
    }
    Ok(parts.join(", "))
}

fn criterion_8() -> Result<String, String> {
    let fast = [Semiring::MaxPlus, Semiring::FuzzyMaxMin, Semiring::Boolean];
    let (evaluated, _) = sweep(Suite::Fast, &fast, 2..=8, 500, Profile::Dense)?;
    let big = gen_matrix(&GenSpec::new(Semiring::MaxPlus, 18, 18, Profile::Dense)).unwrap();
    let start = Instant::now();
    per_subset_dp(&big).map_err(|e| e.to_string())?;
    let dp = start.elapsed();
    expect(
        dp < Duration::from_secs(5),
        format!("subset DP at n=18 took {:.2}s", dp.as_secs_f64()),
    )?;
    Ok(format!(
        "{evaluated} instances agree; subset DP n=18 in {:.2}s",
        dp.as_secs_f64()
    ))
}

fn criterion_9() -> Result<String, String> {
    for s in Semiring::BUILT_INS {
        let report = check_axioms(&s, &default_samples(&s)).map_err(|e| e.to_string())?;
        expect(report.passed(), format!("{report}"))?;
        if matches!(s, Semiring::Boolean | Semiring::DivisorLattice(30)) {
            expect(report.exhaustive, format!("{s} was not checked exhaustively"))?;
        }
    }
    let control =
        check_axioms(&NonIdempotentControl, &default_samples(&Semiring::MaxTimes)).map_err(|e| e.to_string())?;
    let failure = control.failures.first().ok_or("the non-idempotent control passed")?;
    expect(!failure.witness.is_empty(), "control failed without a witness")?;
    Ok(format!(
        "7 semirings pass; control fails {} at ({})",
        failure.axiom,
        failure.witness.join(", ")
    ))
}

fn main() -> ExitCode {
    let criteria: [(u32, Option<u64>, Criterion); 9] = [
        (1, Some(1), criterion_1),
        (2, Some(1), criterion_2),
        (3, Some(60), criterion_3),
        (4, Some(120), criterion_4),
        (5, None, criterion_5),
        (6, Some(60), criterion_6),
        (7, None, criterion_7),
        (8, None, criterion_8),
        (9, None, criterion_9),
    ];
    let mut failed = 0;
    for (id, limit, body) in criteria {
        let verdict = timed(limit.map(Duration::from_secs), body);
        println!(
            "criterion {id}: {} - {}",
            if verdict.ok { "PASS" } else { "FAIL" },
            verdict.detail
        );
        failed += usize::from(!verdict.ok);
    }
    if failed == 0 {
        println!("acceptance: all 9 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 9 criteria fail");
        ExitCode::FAILURE
    }
}
