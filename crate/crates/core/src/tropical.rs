//! Exact extended-real scalars and the elementary operations on tropical points.
//!
//! A [`TropicalPoint`] has `d + 1` coordinates indexed `0..=d`. Coordinate 0 is
//! the distinguished one: outcomes `z ∈ ℚ^d` are embedded as `(0, z_1, …, z_d)`.
//! The same type is used for generators of max-cones (entries in `ℚ ∪ {-∞}`)
//! and apices of min-cones (entries in `ℚ ∪ {+∞}`); which side a point lives on
//! is a contract checked by the cone module.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational numbers.
pub type Rational = BigRational;

/// An outcome vector in `ℚ^d` (objective values, without the 0th coordinate).
pub type Outcome = Vec<Rational>;

/// Builds an exact rational from an integer.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Builds an outcome vector from integers.
pub fn outcome(values: &[i64]) -> Outcome {
    values.iter().map(|&v| int(v)).collect()
}

/// Which tropical semiring a point is read in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `(ℚ ∪ {+∞}, min, +)`; `+∞` is the excluded value for supports.
    Min,
    /// `(ℚ ∪ {-∞}, max, +)`; `-∞` is the excluded value for supports.
    Max,
}

/// A rational number or one of the two infinities.
///
/// The derived order puts `MinusInf` below every finite value and `PlusInf`
/// above, which is the order used everywhere, including output sorting.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedScalar {
    MinusInf,
    Finite(Rational),
    PlusInf,
}

impl ExtendedScalar {
    pub fn zero() -> Self {
        ExtendedScalar::Finite(Rational::zero())
    }

    pub fn from_int(v: i64) -> Self {
        ExtendedScalar::Finite(int(v))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedScalar::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtendedScalar::Finite(r) => Some(r),
            _ => None,
        }
    }

    /// `self + other`. Adding opposite infinities is an error.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        use ExtendedScalar::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Ok(Finite(a + b)),
            (PlusInf, MinusInf) | (MinusInf, PlusInf) => Err(Error::OppositeInfinities),
            (PlusInf, _) | (_, PlusInf) => Ok(PlusInf),
            (MinusInf, _) | (_, MinusInf) => Ok(MinusInf),
        }
    }

    /// `self - other`.
    ///
    /// Mixed infinities resolve in the obvious direction (`+∞ - x = +∞`,
    /// `x - (-∞) = +∞`, `x - (+∞) = -∞`, `-∞ - x = -∞`); `+∞ - +∞` and
    /// `-∞ - -∞` are errors.
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        use ExtendedScalar::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Ok(Finite(a - b)),
            (PlusInf, PlusInf) => Err(Error::SameSignInfinity("inf")),
            (MinusInf, MinusInf) => Err(Error::SameSignInfinity("-inf")),
            (PlusInf, _) | (_, MinusInf) => Ok(PlusInf),
            (MinusInf, _) | (_, PlusInf) => Ok(MinusInf),
        }
    }
}

impl From<Rational> for ExtendedScalar {
    fn from(r: Rational) -> Self {
        ExtendedScalar::Finite(r)
    }
}

impl From<i64> for ExtendedScalar {
    fn from(v: i64) -> Self {
        ExtendedScalar::from_int(v)
    }
}

impl fmt::Display for ExtendedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedScalar::MinusInf => f.write_str("-inf"),
            ExtendedScalar::PlusInf => f.write_str("inf"),
            ExtendedScalar::Finite(r) => f.write_str(&format_rational(r)),
        }
    }
}

impl FromStr for ExtendedScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "+inf" | "∞" | "+∞" => Ok(ExtendedScalar::PlusInf),
            "-inf" | "-∞" => Ok(ExtendedScalar::MinusInf),
            other => parse_rational(other).map(ExtendedScalar::Finite),
        }
    }
}

/// Parses `"-3"`, `"1.25"`, `"2e-3"` or `"p/q"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not an exact rational: {text:?}"));
    let s = text.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let joined = format!("{whole}{frac}");
    let mut value = Rational::from_integer(joined.parse::<BigInt>().map_err(|_| bad())?);
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    if scale >= 0 {
        value *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if negative { -value } else { value })
}

/// Renders an integer as `"3"`, a terminating fraction as an exact decimal
/// `"0.125"`, and anything else as `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    let mut den = r.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let (mut twos, mut fives) = (0usize, 0usize);
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if den != BigInt::from(1) {
        return format!("{}/{}", r.numer(), r.denom());
    }
    let places = twos.max(fives);
    let scaled = r * Rational::from_integer(num_traits::pow(BigInt::from(10), places));
    let digits = scaled.to_integer().abs().to_string();
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (whole, frac) = digits.split_at(digits.len() - places);
    let sign = if r.is_negative() { "-" } else { "" };
    format!("{sign}{whole}.{frac}")
}

/// A point of `𝕋^{d+1}` with coordinates indexed `0..=d`.
///
/// Ordered lexicographically by coordinates, so `BTreeSet`s of points iterate
/// deterministically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TropicalPoint {
    coords: Vec<ExtendedScalar>,
}

impl TropicalPoint {
    /// Needs at least two coordinates (`d >= 1`).
    pub fn new(coords: Vec<ExtendedScalar>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::ZeroDimension);
        }
        Ok(TropicalPoint { coords })
    }

    /// The tropical unit vector `e^{(i)}`: `0` at index `i`, `+∞` elsewhere.
    pub fn unit(d: usize, i: usize) -> Self {
        assert!(d >= 1 && i <= d, "unit vector index {i} out of range for d = {d}");
        let coords = (0..=d)
            .map(|k| if k == i { ExtendedScalar::zero() } else { ExtendedScalar::PlusInf })
            .collect();
        TropicalPoint { coords }
    }

    /// The number `d` of objective coordinates.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[ExtendedScalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &ExtendedScalar {
        &self.coords[i]
    }

    /// Indices of the coordinates that are not the excluded infinity of `side`.
    pub fn support(&self, side: Side) -> Vec<usize> {
        let excluded = match side {
            Side::Min => ExtendedScalar::PlusInf,
            Side::Max => ExtendedScalar::MinusInf,
        };
        (0..self.coords.len())
            .filter(|&i| self.coords[i] != excluded)
            .collect()
    }

    /// Tropical scaling: adds the finite scalar `lambda` to every coordinate.
    pub fn shift(&self, lambda: &ExtendedScalar) -> Result<Self> {
        let lambda = lambda.as_finite().ok_or(Error::InfiniteScalar)?;
        Ok(self.shift_by(lambda))
    }

    pub fn shift_by(&self, lambda: &Rational) -> Self {
        let coords = self
            .coords
            .iter()
            .map(|c| match c {
                ExtendedScalar::Finite(v) => ExtendedScalar::Finite(v + lambda),
                inf => inf.clone(),
            })
            .collect();
        TropicalPoint { coords }
    }

    /// Coordinatewise minimum.
    pub fn cw_min(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.min(b).clone())
            .collect();
        Ok(TropicalPoint { coords })
    }

    /// The representative of `self + ℚ·𝟏` with 0th coordinate `0`.
    pub fn normalize(&self) -> Result<Self> {
        let lead = self.coords[0]
            .as_finite()
            .ok_or(Error::InfiniteLeadingCoordinate)?;
        Ok(self.shift_by(&-lead))
    }

    /// True when the point is `e^{(i)}` for some `i >= 1`.
    pub fn is_trivial_unit(&self) -> bool {
        self.coords[0] == ExtendedScalar::PlusInf
            && self.coords[1..]
                .iter()
                .filter(|c| **c != ExtendedScalar::PlusInf)
                .count()
                == 1
            && self.coords[1..].iter().any(|c| *c == ExtendedScalar::zero())
    }

    /// The objective part `(x_1, …, x_d)` of the point.
    pub fn tail(&self) -> &[ExtendedScalar] {
        &self.coords[1..]
    }

    /// The objective part as exact rationals, if every entry is finite.
    pub fn finite_tail(&self) -> Option<Outcome> {
        self.coords[1..]
            .iter()
            .map(|c| c.as_finite().cloned())
            .collect()
    }

    pub fn is_real(&self) -> bool {
        self.coords.iter().all(ExtendedScalar::is_finite)
    }

    pub(crate) fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.coords.len() != other.coords.len() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for TropicalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for TropicalPoint {
    type Err = Error;

    /// Parses `"(0,3,inf,-2/3)"`; the parentheses are optional.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = inner
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<ExtendedScalar>>>()?;
        TropicalPoint::new(coords)
    }
}

/// Embeds `z ∈ ℚ^d` as `(0, z_1, …, z_d)`.
pub fn embed_outcome(z: &[Rational]) -> Result<TropicalPoint> {
    if z.is_empty() {
        return Err(Error::ZeroDimension);
    }
    let coords = std::iter::once(ExtendedScalar::zero())
        .chain(z.iter().cloned().map(ExtendedScalar::Finite))
        .collect();
    Ok(TropicalPoint { coords })
}

/// Weak componentwise dominance `g ≦ z`.
pub fn dominates_leq(g: &[Rational], z: &[Rational]) -> Result<bool> {
    if g.len() != z.len() {
        return Err(Error::DimensionMismatch {
            expected: g.len(),
            found: z.len(),
        });
    }
    Ok(g.iter().zip(z).all(|(a, b)| a <= b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> TropicalPoint {
        s.parse().unwrap()
    }

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn support_min_and_max_side() {
        assert_eq!(p("(0,-3,inf)").support(Side::Min), vec![0, 1]);
        assert!(p("(inf,inf,inf)").support(Side::Min).is_empty());
        assert_eq!(p("(0,1,-inf)").support(Side::Max), vec![0, 1]);
    }

    #[test]
    fn shift_examples() {
        let three = ExtendedScalar::from_int(3);
        assert_eq!(p("(inf,0,inf,inf)").shift(&three).unwrap(), p("(inf,3,inf,inf)"));
        let x = p("(0,-2,inf,7)");
        assert_eq!(x.shift(&ExtendedScalar::zero()).unwrap(), x);
        assert_eq!(p("(inf,0)").shift(&5.into()).unwrap(), p("(inf,5)"));
        assert_eq!(x.shift(&ExtendedScalar::PlusInf), Err(Error::InfiniteScalar));
        assert_eq!(x.shift(&ExtendedScalar::MinusInf), Err(Error::InfiniteScalar));
    }

    #[test]
    fn cw_min_examples() {
        assert_eq!(
            p("(inf,3,inf,inf)").cw_min(&p("(0,inf,inf,inf)")).unwrap(),
            p("(0,3,inf,inf)")
        );
        let x = p("(1,inf,-2,4)");
        assert_eq!(x.cw_min(&x).unwrap(), x);
        assert_eq!(
            p("(inf,inf,3,inf)").cw_min(&p("(0,3,inf,inf)")).unwrap(),
            p("(0,3,3,inf)")
        );
        assert!(matches!(
            x.cw_min(&p("(0,1)")),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(p("(2,5,inf,3)").normalize().unwrap(), p("(0,3,inf,1)"));
        assert_eq!(p("(0,3,inf,inf)").normalize().unwrap(), p("(0,3,inf,inf)"));
        assert_eq!(p("(4,4,4,4)").normalize().unwrap(), p("(0,0,0,0)"));
        assert_eq!(
            p("(inf,0,inf)").normalize(),
            Err(Error::InfiniteLeadingCoordinate)
        );
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed_outcome(&outcome(&[3, 0, 0])).unwrap(), p("(0,3,0,0)"));
        assert_eq!(embed_outcome(&[]), Err(Error::ZeroDimension));
        assert_eq!(embed_outcome(&outcome(&[-3, 2])).unwrap(), p("(0,-3,2)"));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates_leq(&outcome(&[0, 0]), &outcome(&[1, 1])).unwrap());
        let z = outcome(&[4, -1]);
        assert!(dominates_leq(&z, &z).unwrap());
        assert!(!dominates_leq(&outcome(&[0, 3, 3]), &outcome(&[3, 0, 0])).unwrap());
        assert!(dominates_leq(&outcome(&[0]), &outcome(&[0, 1])).is_err());
    }

    #[test]
    fn subtraction_table() {
        use ExtendedScalar::*;
        let five = ExtendedScalar::from_int(5);
        assert_eq!(PlusInf.checked_sub(&five).unwrap(), PlusInf);
        assert_eq!(five.checked_sub(&MinusInf).unwrap(), PlusInf);
        assert_eq!(five.checked_sub(&PlusInf).unwrap(), MinusInf);
        assert_eq!(MinusInf.checked_sub(&five).unwrap(), MinusInf);
        assert_eq!(PlusInf.checked_sub(&MinusInf).unwrap(), PlusInf);
        assert_eq!(MinusInf.checked_sub(&PlusInf).unwrap(), MinusInf);
        assert!(PlusInf.checked_sub(&PlusInf).is_err());
        assert!(MinusInf.checked_sub(&MinusInf).is_err());
        assert_eq!(five.checked_add(&PlusInf).unwrap(), PlusInf);
        assert_eq!(five.checked_add(&MinusInf).unwrap(), MinusInf);
        assert!(PlusInf.checked_add(&MinusInf).is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(r("-3"), int(-3));
        assert_eq!(r("1.25"), Rational::new(5.into(), 4.into()));
        assert_eq!(r("-0.5"), Rational::new((-1).into(), 2.into()));
        assert_eq!(r("2e3"), int(2000));
        assert_eq!(r("15e-1"), Rational::new(3.into(), 2.into()));
        assert_eq!(r("6/4"), Rational::new(3.into(), 2.into()));
        assert_eq!(r(".5"), Rational::new(1.into(), 2.into()));
        for bad in ["", "abc", "1/0", "1.2.3", "inf", "--1", "."] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rational(&int(-7)), "-7");
        assert_eq!(format_rational(&r("1/8")), "0.125");
        assert_eq!(format_rational(&r("-5/2")), "-2.5");
        assert_eq!(format_rational(&r("-1/20")), "-0.05");
        assert_eq!(format_rational(&r("1/3")), "1/3");
        assert_eq!(format_rational(&r("-7/6")), "-7/6");
    }

    #[test]
    fn trivial_units() {
        assert!(TropicalPoint::unit(3, 2).is_trivial_unit());
        assert!(!TropicalPoint::unit(3, 0).is_trivial_unit());
        assert!(!p("(inf,3,inf)").is_trivial_unit());
        assert_eq!(TropicalPoint::unit(2, 1), p("(inf,0,inf)"));
    }
}
