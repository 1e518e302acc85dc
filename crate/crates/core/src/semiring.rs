//! Built-in commutative additively idempotent semirings and their exact elements.
//!
//! Every carrier is represented exactly: booleans as bits, numeric carriers as
//! big rationals in lowest terms, the max-plus bottom as its own tag, divisor
//! lattices by the divisor itself and subset lattices by a bitmask over the
//! universe `{1..M}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest universe supported by [`Semiring::SubsetLattice`].
pub const MAX_SUBSET_UNIVERSE: u32 = 64;

/// An exact value in one of the built-in carriers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Bool(bool),
    /// Rationals are kept in lowest terms with a positive denominator.
    Rational(BigRational),
    /// The max-plus zero, standing for minus infinity.
    NegInf,
    Divisor(u64),
    /// Bit `k` set means `k + 1` is a member.
    Set(u64),
}

impl Element {
    pub fn int(value: i64) -> Self {
        Element::Rational(BigRational::from_integer(BigInt::from(value)))
    }

    /// `numer / denom` reduced to lowest terms. Panics if `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Element::Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn set<I: IntoIterator<Item = u32>>(members: I) -> Self {
        Element::Set(members.into_iter().fold(0u64, |bits, m| bits | 1u64 << (m - 1)))
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Element::Bool(_) => "boolean",
            Element::Rational(_) => "rational",
            Element::NegInf => "bottom",
            Element::Divisor(_) => "divisor",
            Element::Set(_) => "set",
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Element::Rational(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Bool(b) => write!(f, "{}", u8::from(*b)),
            Element::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Element::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Element::NegInf => f.write_str("-inf"),
            Element::Divisor(d) => write!(f, "{d}"),
            Element::Set(bits) => {
                f.write_str("{")?;
                let mut first = true;
                for k in 0..64 {
                    if bits >> k & 1 == 1 {
                        if !first {
                            f.write_str(",")?;
                        }
                        write!(f, "{}", k + 1)?;
                        first = false;
                    }
                }
                f.write_str("}")
            }
        }
    }
}

/// Identifies one of the built-in semirings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semiring {
    /// `({0,1}, or, and)`.
    Boolean,
    /// `([0,1], max, min)`.
    FuzzyMaxMin,
    /// `([0,1], max, product)`.
    FuzzyMaxProd,
    /// `([0,1], max, max(0, a+b-1))`.
    Lukasiewicz,
    /// `(Q with -inf, max, +)`.
    MaxPlus,
    /// `([0,inf), max, product)`.
    MaxTimes,
    /// Divisors of `N` under `(lcm, gcd)`; zero is 1 and one is `N`.
    DivisorLattice(u64),
    /// Subsets of `{1..M}` under `(union, intersection)`.
    SubsetLattice(u32),
}

impl Semiring {
    /// The seven semirings every verification suite runs over.
    pub const BUILT_INS: [Semiring; 7] = [
        Semiring::Boolean,
        Semiring::FuzzyMaxMin,
        Semiring::FuzzyMaxProd,
        Semiring::Lukasiewicz,
        Semiring::MaxPlus,
        Semiring::MaxTimes,
        Semiring::DivisorLattice(30),
    ];

    pub fn divisor_lattice(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid(format!(
                "divisor_lattice needs N >= 2 so that zero != one, got {n}"
            )));
        }
        Ok(Semiring::DivisorLattice(n))
    }

    pub fn subset_lattice(m: u32) -> Result<Self> {
        if m == 0 || m > MAX_SUBSET_UNIVERSE {
            return Err(Error::Invalid(format!(
                "subset_lattice universe must be 1..={MAX_SUBSET_UNIVERSE}, got {m}"
            )));
        }
        Ok(Semiring::SubsetLattice(m))
    }

    /// Bare identifier without the lattice parameter.
    pub fn name(&self) -> &'static str {
        match self {
            Semiring::Boolean => "boolean",
            Semiring::FuzzyMaxMin => "fuzzy_maxmin",
            Semiring::FuzzyMaxProd => "fuzzy_maxprod",
            Semiring::Lukasiewicz => "lukasiewicz",
            Semiring::MaxPlus => "max_plus",
            Semiring::MaxTimes => "max_times",
            Semiring::DivisorLattice(_) => "divisor_lattice",
            Semiring::SubsetLattice(_) => "subset_lattice",
        }
    }

    /// The lattice parameter `N` when the semiring has one.
    pub fn parameter(&self) -> Option<u64> {
        match self {
            Semiring::DivisorLattice(n) => Some(*n),
            Semiring::SubsetLattice(m) => Some(u64::from(*m)),
            _ => None,
        }
    }

    pub fn from_parts(name: &str, parameter: Option<u64>) -> Result<Self> {
        let need = |p: Option<u64>| p.ok_or_else(|| Error::Invalid(format!("semiring {name} needs a parameter N")));
        match name {
            "boolean" => Ok(Semiring::Boolean),
            "fuzzy_maxmin" => Ok(Semiring::FuzzyMaxMin),
            "fuzzy_maxprod" => Ok(Semiring::FuzzyMaxProd),
            "lukasiewicz" => Ok(Semiring::Lukasiewicz),
            "max_plus" => Ok(Semiring::MaxPlus),
            "max_times" => Ok(Semiring::MaxTimes),
            "divisor_lattice" => Semiring::divisor_lattice(need(parameter)?),
            "subset_lattice" => {
                let m = need(parameter)?;
                Semiring::subset_lattice(
                    u32::try_from(m).map_err(|_| Error::Invalid(format!("subset_lattice universe too large: {m}")))?,
                )
            }
            other => Err(Error::UnknownSemiring(other.to_string())),
        }
    }

    pub fn zero(&self) -> Element {
        match self {
            Semiring::Boolean => Element::Bool(false),
            Semiring::MaxPlus => Element::NegInf,
            Semiring::DivisorLattice(_) => Element::Divisor(1),
            Semiring::SubsetLattice(_) => Element::Set(0),
            _ => Element::Rational(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Element {
        match self {
            Semiring::Boolean => Element::Bool(true),
            Semiring::MaxPlus => Element::Rational(BigRational::zero()),
            Semiring::DivisorLattice(n) => Element::Divisor(*n),
            Semiring::SubsetLattice(m) => Element::Set(full_set(*m)),
            _ => Element::Rational(BigRational::one()),
        }
    }

    pub fn contains(&self, a: &Element) -> bool {
        match (self, a) {
            (Semiring::Boolean, Element::Bool(_)) => true,
            (Semiring::FuzzyMaxMin | Semiring::FuzzyMaxProd | Semiring::Lukasiewicz, Element::Rational(r)) => {
                !r.is_negative() && *r <= BigRational::one()
            }
            (Semiring::MaxPlus, Element::Rational(_) | Element::NegInf) => true,
            (Semiring::MaxTimes, Element::Rational(r)) => !r.is_negative(),
            (Semiring::DivisorLattice(n), Element::Divisor(d)) => *d >= 1 && n % d == 0,
            (Semiring::SubsetLattice(m), Element::Set(bits)) => bits & !full_set(*m) == 0,
            _ => false,
        }
    }

    pub fn ensure(&self, a: &Element) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::CarrierMismatch {
                semiring: self.to_string(),
                element: format!("{a} ({})", a.tag()),
            })
        }
    }

    /// Checked semiring addition.
    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.ensure(a)?;
        self.ensure(b)?;
        Ok(self.plus(a, b))
    }

    /// Checked semiring multiplication.
    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.ensure(a)?;
        self.ensure(b)?;
        Ok(self.times(a, b))
    }

    /// Canonical preorder: `a <= b` iff `a + b = b`.
    pub fn leq(&self, a: &Element, b: &Element) -> Result<bool> {
        self.ensure(a)?;
        self.ensure(b)?;
        Ok(self.le(a, b))
    }

    /// `a` multiplied by itself `k` times; `k = 0` gives one.
    pub fn nat_pow(&self, a: &Element, k: u32) -> Result<Element> {
        self.ensure(a)?;
        Ok(self.pow(a, k))
    }

    /// Addition on elements already known to lie in the carrier.
    ///
    /// Panics on a carrier mismatch; matrices validate their entries on
    /// construction so internal arithmetic never hits that path.
    pub(crate) fn plus(&self, a: &Element, b: &Element) -> Element {
        use Element::*;
        match (self, a, b) {
            (Semiring::Boolean, Bool(x), Bool(y)) => Bool(*x || *y),
            (Semiring::MaxPlus, NegInf, x) | (Semiring::MaxPlus, x, NegInf) => x.clone(),
            (_, Rational(x), Rational(y)) => Rational(x.max(y).clone()),
            (Semiring::DivisorLattice(_), Divisor(x), Divisor(y)) => Divisor(x.lcm(y)),
            (Semiring::SubsetLattice(_), Set(x), Set(y)) => Set(x | y),
            _ => panic!("carrier mismatch in {self}: {a} + {b}"),
        }
    }

    pub(crate) fn times(&self, a: &Element, b: &Element) -> Element {
        use Element::*;
        match (self, a, b) {
            (Semiring::Boolean, Bool(x), Bool(y)) => Bool(*x && *y),
            (Semiring::FuzzyMaxMin, Rational(x), Rational(y)) => Rational(x.min(y).clone()),
            (Semiring::FuzzyMaxProd | Semiring::MaxTimes, Rational(x), Rational(y)) => Rational(x * y),
            (Semiring::Lukasiewicz, Rational(x), Rational(y)) => {
                let s = x + y - BigRational::one();
                Rational(if s.is_negative() { BigRational::zero() } else { s })
            }
            (Semiring::MaxPlus, NegInf, _) | (Semiring::MaxPlus, _, NegInf) => NegInf,
            (Semiring::MaxPlus, Rational(x), Rational(y)) => Rational(x + y),
            (Semiring::DivisorLattice(_), Divisor(x), Divisor(y)) => Divisor(x.gcd(y)),
            (Semiring::SubsetLattice(_), Set(x), Set(y)) => Set(x & y),
            _ => panic!("carrier mismatch in {self}: {a} * {b}"),
        }
    }

    pub(crate) fn le(&self, a: &Element, b: &Element) -> bool {
        self.plus(a, b) == *b
    }

    pub(crate) fn pow(&self, a: &Element, k: u32) -> Element {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.times(&acc, a);
        }
        acc
    }

    pub(crate) fn is_zero(&self, a: &Element) -> bool {
        match (self, a) {
            (Semiring::Boolean, Element::Bool(b)) => !b,
            (Semiring::MaxPlus, e) => matches!(e, Element::NegInf),
            (Semiring::DivisorLattice(_), Element::Divisor(d)) => *d == 1,
            (Semiring::SubsetLattice(_), Element::Set(s)) => *s == 0,
            (_, Element::Rational(r)) => r.is_zero(),
            _ => false,
        }
    }

    /// Semiring sum of an iterator; the empty sum is zero.
    pub fn sum<'a, I: IntoIterator<Item = &'a Element>>(&self, items: I) -> Element {
        items.into_iter().fold(self.zero(), |acc, x| self.plus(&acc, x))
    }

    /// Semiring product of an iterator; the empty product is one.
    pub fn product<'a, I: IntoIterator<Item = &'a Element>>(&self, items: I) -> Element {
        let mut acc = self.one();
        for x in items {
            if self.is_zero(&acc) {
                break;
            }
            acc = self.times(&acc, x);
        }
        acc
    }

    /// Every element of the carrier when it is small enough to enumerate.
    pub fn finite_carrier(&self) -> Option<Vec<Element>> {
        match self {
            Semiring::Boolean => Some(vec![Element::Bool(false), Element::Bool(true)]),
            Semiring::DivisorLattice(n) => Some(divisors(*n).into_iter().map(Element::Divisor).collect()),
            Semiring::SubsetLattice(m) if *m <= 6 => Some((0..=full_set(*m)).map(Element::Set).collect()),
            _ => None,
        }
    }

    /// Parses one element in the textual encoding and checks carrier membership.
    ///
    /// Numeric carriers accept `p/q`, integers and finite decimals such as
    /// `0.25`; output is always the lowest-terms fraction.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let t = text.trim();
        let e = match self {
            Semiring::Boolean => match t {
                "0" => Element::Bool(false),
                "1" => Element::Bool(true),
                _ => return Err(Error::Parse(format!("boolean element must be 0 or 1, got `{t}`"))),
            },
            Semiring::MaxPlus if t == "-inf" => Element::NegInf,
            Semiring::DivisorLattice(_) => Element::Divisor(
                t.parse()
                    .map_err(|_| Error::Parse(format!("divisor must be a positive integer, got `{t}`")))?,
            ),
            Semiring::SubsetLattice(_) => parse_set(t)?,
            _ => Element::Rational(parse_rational(t)?),
        };
        self.ensure(&e).map_err(|err| Error::Parse(err.to_string()))?;
        Ok(e)
    }
}

impl fmt::Display for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter() {
            Some(p) => write!(f, "{}({p})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

impl FromStr for Semiring {
    type Err = Error;

    /// Accepts `name`, `name(N)` and `name:N`. A bare `divisor_lattice`
    /// means `divisor_lattice(30)`; a bare `subset_lattice` means universe 4.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, param) = if let Some(open) = s.find('(') {
            let inner = s[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::UnknownSemiring(s.to_string()))?;
            (&s[..open], Some(inner))
        } else if let Some((name, p)) = s.split_once(':') {
            (name, Some(p))
        } else {
            (s, None)
        };
        let param = param
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::UnknownSemiring(s.to_string()))
            })
            .transpose()?;
        let param = match (name, param) {
            ("divisor_lattice", None) => Some(30),
            ("subset_lattice", None) => Some(4),
            (_, p) => p,
        };
        Semiring::from_parts(name, param)
    }
}

pub(crate) fn full_set(m: u32) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn parse_set(t: &str) -> Result<Element> {
    let inner = t
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("set element must look like {{1,3}}, got `{t}`")))?;
    let mut bits = 0u64;
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let m: u32 = part
            .parse()
            .map_err(|_| Error::Parse(format!("bad set member `{part}`")))?;
        if m == 0 || m > MAX_SUBSET_UNIVERSE {
            return Err(Error::Parse(format!(
                "set member {m} outside 1..={MAX_SUBSET_UNIVERSE}"
            )));
        }
        bits |= 1u64 << (m - 1);
    }
    Ok(Element::Set(bits))
}

fn parse_rational(t: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational: `{t}`"));
    let int = |s: &str| -> Result<BigInt> {
        if s.is_empty() || s.starts_with('+') {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    if let Some((p, q)) = t.split_once('/') {
        let q = int(q)?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{t}`")));
        }
        return Ok(BigRational::new(int(p)?, q));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let digits = format!("{}{frac}", whole.trim_start_matches('-'));
        let magnitude = int(&digits)?;
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        let value = BigRational::new(magnitude, denom);
        return Ok(if negative { -value } else { value });
    }
    Ok(BigRational::from_integer(int(t)?))
}
