//! Deterministic random instances.
//!
//! Numeric carriers draw from small grids (tenths on `[0,1]`, halves for
//! max-plus, quarters for max-times) so exact arithmetic stays cheap and ties
//! are common. A [`GenSpec`] always regenerates the same matrix.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::semiring::{divisors, full_set, Element, Semiring};

pub type TrialRng = ChaCha8Rng;

pub fn rng_for(seed: u64) -> TrialRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Profile {
    Dense,
    /// Each entry is zero with probability `zero_percent / 100`.
    Sparse {
        zero_percent: u8,
    },
    /// Constant diagonal dominating every entry, i.e. condition (*).
    Star,
    /// `A` followed by `A + noise`; [`gen_matrix`] returns the first.
    ComparablePair,
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Profile::Dense => f.write_str("dense"),
            Profile::Sparse { zero_percent } => write!(f, "sparse:{zero_percent}"),
            Profile::Star => f.write_str("star"),
            Profile::ComparablePair => f.write_str("comparable-pair"),
        }
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dense" => Ok(Profile::Dense),
            "star" => Ok(Profile::Star),
            "comparable-pair" => Ok(Profile::ComparablePair),
            "sparse" => Ok(Profile::Sparse { zero_percent: 50 }),
            _ => {
                let pct = s
                    .strip_prefix("sparse:")
                    .and_then(|p| p.parse::<u8>().ok())
                    .filter(|p| *p <= 100)
                    .ok_or_else(|| Error::Invalid(format!("unknown profile `{s}`")))?;
                Ok(Profile::Sparse { zero_percent: pct })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub semiring: Semiring,
    pub n: usize,
    pub seed: u64,
    pub profile: Profile,
}

impl GenSpec {
    pub fn new(semiring: Semiring, n: usize, seed: u64, profile: Profile) -> Self {
        GenSpec {
            semiring,
            n,
            seed,
            profile,
        }
    }

    /// The spec for trial `t`: same everything, seed `seed + t`.
    pub fn trial(&self, t: usize) -> GenSpec {
        GenSpec {
            seed: self.seed.wrapping_add(t as u64),
            ..*self
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Invalid("generated matrices need n >= 1".into()));
        }
        Ok(())
    }
}

fn rational(numer: i64, denom: i64) -> Element {
    Element::Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
}

/// The grid numerator of a rational on denominator `denom`.
fn grid_index(r: &BigRational, denom: i64) -> i64 {
    (r * BigRational::from_integer(BigInt::from(denom)))
        .floor()
        .to_integer()
        .to_i64()
        .expect("grid values are small")
}

/// One element from the semiring's sampling distribution.
pub fn draw_element<R: Rng + ?Sized>(s: &Semiring, rng: &mut R) -> Element {
    match s {
        Semiring::Boolean => Element::Bool(rng.gen_bool(0.5)),
        Semiring::FuzzyMaxMin | Semiring::FuzzyMaxProd | Semiring::Lukasiewicz => rational(rng.gen_range(0..=10), 10),
        Semiring::MaxPlus => {
            if rng.gen_ratio(1, 8) {
                Element::NegInf
            } else {
                rational(rng.gen_range(-8..=8), 2)
            }
        }
        Semiring::MaxTimes => rational(rng.gen_range(0..=12), 4),
        Semiring::DivisorLattice(n) => {
            let ds = divisors(*n);
            Element::Divisor(ds[rng.gen_range(0..ds.len())])
        }
        Semiring::SubsetLattice(m) => Element::Set(rng.gen::<u64>() & full_set(*m)),
    }
}

/// An element `e` with `e <= bound`.
pub fn draw_below<R: Rng + ?Sized>(s: &Semiring, bound: &Element, rng: &mut R) -> Element {
    match (s, bound) {
        (Semiring::Boolean, Element::Bool(true)) => Element::Bool(rng.gen_bool(0.5)),
        (Semiring::Boolean, _) => Element::Bool(false),
        (Semiring::FuzzyMaxMin | Semiring::FuzzyMaxProd | Semiring::Lukasiewicz, Element::Rational(d)) => {
            rational(rng.gen_range(0..=grid_index(d, 10)), 10)
        }
        (Semiring::MaxTimes, Element::Rational(d)) => rational(rng.gen_range(0..=grid_index(d, 4)), 4),
        (Semiring::MaxPlus, Element::Rational(d)) => {
            if rng.gen_ratio(1, 8) {
                Element::NegInf
            } else {
                Element::Rational(d - BigRational::new(BigInt::from(rng.gen_range(0..=8)), BigInt::from(2)))
            }
        }
        (Semiring::MaxPlus, _) => Element::NegInf,
        (Semiring::DivisorLattice(_), Element::Divisor(d)) => {
            let ds = divisors(*d);
            Element::Divisor(ds[rng.gen_range(0..ds.len())])
        }
        (Semiring::SubsetLattice(_), Element::Set(d)) => Element::Set(rng.gen::<u64>() & d),
        _ => s.zero(),
    }
}

pub fn draw_dense<R: Rng + ?Sized>(s: Semiring, n: usize, rng: &mut R) -> Matrix {
    Matrix::from_fn(s, n, n, |_, _| draw_element(&s, rng))
}

pub fn draw_sparse<R: Rng + ?Sized>(s: Semiring, n: usize, zero_percent: u8, rng: &mut R) -> Matrix {
    Matrix::from_fn(s, n, n, |_, _| {
        if rng.gen_range(0..100) < u32::from(zero_percent) {
            s.zero()
        } else {
            draw_element(&s, rng)
        }
    })
}

/// A matrix satisfying (*) with the given diagonal value.
pub fn draw_star_with_diagonal<R: Rng + ?Sized>(s: Semiring, n: usize, diagonal: &Element, rng: &mut R) -> Matrix {
    Matrix::from_fn(s, n, n, |r, c| {
        if r == c {
            diagonal.clone()
        } else {
            draw_below(&s, diagonal, rng)
        }
    })
}

/// A matrix satisfying (*): draw the diagonal, then entries below it.
pub fn draw_star<R: Rng + ?Sized>(s: Semiring, n: usize, rng: &mut R) -> Matrix {
    // a zero diagonal forces the zero matrix; keep it rare
    let mut d = draw_element(&s, rng);
    for _ in 0..3 {
        if d != s.zero() {
            break;
        }
        d = draw_element(&s, rng);
    }
    draw_star_with_diagonal(s, n, &d, rng)
}

/// `(A, A + noise)`, so the first is below the second.
pub fn draw_pair<R: Rng + ?Sized>(s: Semiring, n: usize, rng: &mut R) -> (Matrix, Matrix) {
    let a = draw_dense(s, n, rng);
    let noise = draw_sparse(s, n, 50, rng);
    let b = a.add(&noise).expect("same semiring and shape");
    (a, b)
}

pub fn draw_profile<R: Rng + ?Sized>(s: Semiring, n: usize, profile: Profile, rng: &mut R) -> Matrix {
    match profile {
        Profile::Dense => draw_dense(s, n, rng),
        Profile::Sparse { zero_percent } => draw_sparse(s, n, zero_percent, rng),
        Profile::Star => draw_star(s, n, rng),
        Profile::ComparablePair => draw_pair(s, n, rng).0,
    }
}

pub fn gen_matrix(spec: &GenSpec) -> Result<Matrix> {
    spec.validate()?;
    let mut rng = rng_for(spec.seed);
    Ok(draw_profile(spec.semiring, spec.n, spec.profile, &mut rng))
}

/// Both halves of a comparable pair; the first equals [`gen_matrix`] for the
/// same seed under [`Profile::ComparablePair`].
pub fn gen_pair(spec: &GenSpec) -> Result<(Matrix, Matrix)> {
    spec.validate()?;
    let mut rng = rng_for(spec.seed);
    Ok(draw_pair(spec.semiring, spec.n, &mut rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjoint::satisfies_star;

    #[test]
    fn same_spec_same_matrix() {
        for s in Semiring::BUILT_INS {
            for profile in [Profile::Dense, Profile::Sparse { zero_percent: 30 }, Profile::Star] {
                let spec = GenSpec::new(s, 4, 99, profile);
                assert_eq!(gen_matrix(&spec).unwrap(), gen_matrix(&spec).unwrap());
            }
        }
        let spec = GenSpec::new(Semiring::MaxPlus, 4, 1, Profile::Dense);
        assert_ne!(gen_matrix(&spec).unwrap(), gen_matrix(&spec.trial(1)).unwrap());
    }

    #[test]
    fn star_profile_always_satisfies_star() {
        for s in Semiring::BUILT_INS.iter().chain(&[Semiring::SubsetLattice(4)]) {
            let spec = GenSpec::new(*s, 4, 0, Profile::Star);
            for t in 0..10_000 / 8 {
                let a = gen_matrix(&spec.trial(t)).unwrap();
                assert!(satisfies_star(&a).unwrap().holds, "{s}\n{a}");
            }
        }
    }

    #[test]
    fn fuzzy_entries_are_bounded_tenths() {
        let spec = GenSpec::new(Semiring::FuzzyMaxProd, 6, 5, Profile::Dense);
        let ten = BigInt::from(10);
        for t in 0..50 {
            for e in gen_matrix(&spec.trial(t)).unwrap().entries() {
                let r = e.as_rational().unwrap();
                assert!(ten.clone() % r.denom() == BigInt::from(0));
                assert!(Semiring::FuzzyMaxProd.contains(e));
            }
        }
    }

    #[test]
    fn comparable_pairs_are_ordered() {
        for s in Semiring::BUILT_INS {
            let spec = GenSpec::new(s, 3, 11, Profile::ComparablePair);
            let (a, b) = gen_pair(&spec).unwrap();
            assert!(a.leq(&b).unwrap());
            assert_eq!(gen_matrix(&spec).unwrap(), a);
        }
    }

    #[test]
    fn profile_names() {
        assert_eq!(
            "sparse:30".parse::<Profile>().unwrap(),
            Profile::Sparse { zero_percent: 30 }
        );
        assert_eq!("star".parse::<Profile>().unwrap(), Profile::Star);
        assert!("sparse:300".parse::<Profile>().is_err());
        assert!("wide".parse::<Profile>().is_err());
        assert!(gen_matrix(&GenSpec::new(Semiring::Boolean, 0, 0, Profile::Dense)).is_err());
    }
}
