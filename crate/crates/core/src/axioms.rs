//! Sample-based and exhaustive verification of the semiring axioms.

use std::fmt;

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semiring::{Element, Semiring};
use crate::verify::gen::draw_element;

/// The operations an axiom check needs. Implemented by [`Semiring`] and by
/// [`NonIdempotentControl`], which exists to show the checker can fail.
pub trait SemiringLaws {
    fn label(&self) -> String;
    fn zero(&self) -> Element;
    fn one(&self) -> Element;
    fn add(&self, a: &Element, b: &Element) -> Result<Element>;
    fn mul(&self, a: &Element, b: &Element) -> Result<Element>;

    /// Every carrier element, when the carrier is finite and enumerable.
    fn finite_carrier(&self) -> Option<Vec<Element>> {
        None
    }
}

impl SemiringLaws for Semiring {
    fn label(&self) -> String {
        self.to_string()
    }
    fn zero(&self) -> Element {
        Semiring::zero(self)
    }
    fn one(&self) -> Element {
        Semiring::one(self)
    }
    fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        Semiring::add(self, a, b)
    }
    fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        Semiring::mul(self, a, b)
    }
    fn finite_carrier(&self) -> Option<Vec<Element>> {
        Semiring::finite_carrier(self)
    }
}

/// Rationals with ordinary `+` and `*`: a semiring, but not an additively
/// idempotent one.
#[derive(Debug, Clone, Copy, Default)]
pub struct NonIdempotentControl;

impl NonIdempotentControl {
    fn rational(a: &Element) -> Result<&BigRational> {
        a.as_rational().ok_or_else(|| Error::CarrierMismatch {
            semiring: "ordinary_rationals".into(),
            element: a.to_string(),
        })
    }
}

impl SemiringLaws for NonIdempotentControl {
    fn label(&self) -> String {
        "ordinary_rationals".into()
    }
    fn zero(&self) -> Element {
        Element::int(0)
    }
    fn one(&self) -> Element {
        Element::int(1)
    }
    fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(Element::Rational(Self::rational(a)? + Self::rational(b)?))
    }
    fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(Element::Rational(Self::rational(a)? * Self::rational(b)?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub semiring: String,
    pub failures: Vec<AxiomFailure>,
    pub samples_used: usize,
    pub exhaustive: bool,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scope = if self.exhaustive { "exhaustive" } else { "sampled" };
        writeln!(
            f,
            "axioms {}: {} ({} samples, {scope})",
            self.semiring,
            if self.passed() { "pass" } else { "FAIL" },
            self.samples_used
        )?;
        for failure in &self.failures {
            writeln!(f, "  {} fails at ({})", failure.axiom, failure.witness.join(", "))?;
        }
        Ok(())
    }
}

/// Zero, one, a fixed spread of values and generator draws for infinite
/// carriers; the whole carrier for finite ones.
pub fn default_samples(s: &Semiring) -> Vec<Element> {
    if let Some(all) = s.finite_carrier() {
        return all;
    }
    let fixed: &[&str] = match s {
        Semiring::MaxPlus => &["-inf", "0", "1", "-1", "5/2", "-7/3", "10"],
        Semiring::MaxTimes => &["0", "1", "1/2", "2", "3/4", "7/3", "10"],
        Semiring::SubsetLattice(_) => &["{}", "{1}", "{2}", "{1,2}", "{1,3}"],
        _ => &["0", "1", "1/2", "1/3", "2/3", "1/10", "9/10", "3/7"],
    };
    let mut samples: Vec<Element> = vec![s.zero(), s.one()];
    samples.extend(fixed.iter().filter_map(|t| s.parse_element(t).ok()));
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..8 {
        samples.push(draw_element(s, &mut rng));
    }
    dedup(samples)
}

fn dedup(items: Vec<Element>) -> Vec<Element> {
    let mut out: Vec<Element> = Vec::with_capacity(items.len());
    for e in items {
        if !out.contains(&e) {
            out.push(e);
        }
    }
    out
}

/// Checks every axiom over all pairs and triples drawn from `samples`
/// (the whole carrier when it is finite). Zero and one are always included.
///
/// Only the first witness per axiom is recorded.
pub fn check_axioms<S: SemiringLaws + ?Sized>(s: &S, samples: &[Element]) -> Result<AxiomReport> {
    let finite = s.finite_carrier();
    let exhaustive = finite.is_some();
    let mut pool = vec![s.zero(), s.one()];
    pool.extend(finite.unwrap_or_else(|| samples.to_vec()));
    let pool = dedup(pool);
    let required = if exhaustive { pool.len().min(3) } else { 3 };
    if pool.len() < required {
        return Err(Error::TooFewSamples {
            required,
            got: pool.len(),
        });
    }

    let mut failures: Vec<AxiomFailure> = Vec::new();
    let mut fail = |axiom: &'static str, witness: &[&Element]| {
        if !failures.iter().any(|f| f.axiom == axiom) {
            failures.push(AxiomFailure {
                axiom,
                witness: witness.iter().map(|e| e.to_string()).collect(),
            });
        }
    };
    // closure failures surface as Err; record them under their own name
    let add = |a: &Element, b: &Element| s.add(a, b).ok();
    let mul = |a: &Element, b: &Element| s.mul(a, b).ok();
    let zero = s.zero();
    let one = s.one();

    if zero == one {
        fail("one != zero", &[&zero, &one]);
    }
    for a in &pool {
        if add(a, a).as_ref() != Some(a) {
            fail("add idempotent", &[a]);
        }
        if add(&zero, a).as_ref() != Some(a) {
            fail("add identity", &[a]);
        }
        if mul(&one, a).as_ref() != Some(a) || mul(a, &one).as_ref() != Some(a) {
            fail("mul identity", &[a]);
        }
        if mul(&zero, a).as_ref() != Some(&zero) || mul(a, &zero).as_ref() != Some(&zero) {
            fail("zero annihilates", &[a]);
        }
        for b in &pool {
            let (ab, ba) = (add(a, b), add(b, a));
            if ab.is_none() {
                fail("add closed", &[a, b]);
            }
            if ab != ba {
                fail("add commutative", &[a, b]);
            }
            let (mab, mba) = (mul(a, b), mul(b, a));
            if mab.is_none() {
                fail("mul closed", &[a, b]);
            }
            if mab != mba {
                fail("mul commutative", &[a, b]);
            }
            for c in &pool {
                let lhs = ab.as_ref().and_then(|ab| add(ab, c));
                let rhs = add(b, c).and_then(|bc| add(a, &bc));
                if lhs != rhs {
                    fail("add associative", &[a, b, c]);
                }
                let lhs = mab.as_ref().and_then(|ab| mul(ab, c));
                let rhs = mul(b, c).and_then(|bc| mul(a, &bc));
                if lhs != rhs {
                    fail("mul associative", &[a, b, c]);
                }
                let bc = add(b, c);
                let lhs = bc.as_ref().and_then(|bc| mul(a, bc));
                let rhs = match (mul(a, b), mul(a, c)) {
                    (Some(x), Some(y)) => add(&x, &y),
                    _ => None,
                };
                if lhs != rhs {
                    fail("left distributive", &[a, b, c]);
                }
                let lhs = bc.as_ref().and_then(|bc| mul(bc, a));
                let rhs = match (mul(b, a), mul(c, a)) {
                    (Some(x), Some(y)) => add(&x, &y),
                    _ => None,
                };
                if lhs != rhs {
                    fail("right distributive", &[a, b, c]);
                }
            }
        }
    }

    Ok(AxiomReport {
        semiring: s.label(),
        failures,
        samples_used: pool.len(),
        exhaustive,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclineVerdict {
    pub holds: bool,
    /// True when the whole carrier was checked rather than the samples.
    pub exhaustive: bool,
    pub counterexample: Option<Element>,
}

/// Whether `a + 1 = 1` on the carrier (finite) or on `samples` (infinite).
pub fn is_incline(s: &Semiring, samples: &[Element]) -> Result<InclineVerdict> {
    let finite = s.finite_carrier();
    let exhaustive = finite.is_some();
    let pool = finite.unwrap_or_else(|| samples.to_vec());
    let one = s.one();
    for a in &pool {
        if s.add(a, &one)? != one {
            return Ok(InclineVerdict {
                holds: false,
                exhaustive,
                counterexample: Some(a.clone()),
            });
        }
    }
    Ok(InclineVerdict {
        holds: true,
        exhaustive,
        counterexample: None,
    })
}
