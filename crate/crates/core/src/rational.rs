//! Exact rationals and their text format.
//!
//! Entries are arbitrary precision [`num_rational::BigRational`] values,
//! always in lowest terms with a positive denominator. Text input accepts
//! integers (`-3`), fractions (`7/2`) and exact decimals (`3.5`, `-.25`);
//! output uses the canonical `a/b` or `a` form.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Converts an integral rational to `i64`; `None` if non-integral or too large.
pub fn to_i64(x: &Rational) -> Option<i64> {
    if is_integer(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Whether x − y is an integer.
pub fn differ_by_integer(x: &Rational, y: &Rational) -> bool {
    // in lowest terms, an integral difference forces equal denominators
    x.denom() == y.denom() && (x.denom().is_one() || is_integer(&(x - y)))
}

/// `xᵢ − x₀` for every entry, as `i64`; `None` unless all of them are
/// integers in range. Lets integral computations run on machine integers.
pub fn integer_offsets(xs: &[Rational]) -> Option<Vec<i64>> {
    let base = xs.first()?;
    if xs.iter().all(|x| x.denom().is_one()) {
        let base = base.numer().to_i64()?;
        return xs
            .iter()
            .map(|x| x.numer().to_i64()?.checked_sub(base))
            .collect();
    }
    xs.iter().map(|x| to_i64(&(x - base))).collect()
}

/// x + d without renormalizing: adding a multiple of the denominator keeps
/// the fraction in lowest terms.
pub fn add_integer(x: &Rational, d: i64) -> Rational {
    Rational::new_raw(x.numer() + BigInt::from(d) * x.denom(), x.denom().clone())
}

/// Largest integer `<= x`.
pub fn floor_i64(x: &Rational) -> Option<i64> {
    x.floor().numer().to_i64()
}

pub fn to_string(x: &Rational) -> String {
    x.to_string()
}

fn parse_digits(s: &str, token: &str) -> Result<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("invalid number {token:?}")));
    }
    s.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("invalid number {token:?}")))
}

/// Parses one rational token: integer, `a/b`, or exact decimal.
pub fn parse_rational(token: &str) -> Result<Rational> {
    let s: String = token.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }

    if let Some((num, den)) = s.split_once('/') {
        let (negative, num) = strip_sign(num);
        let num = parse_digits(num, token)?;
        let den = parse_digits(den, token)?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {token:?}")));
        }
        let r = Rational::new(num, den);
        return Ok(if negative { -r } else { r });
    }

    let (negative, body) = strip_sign(&s);
    let r = match body.split_once('.') {
        Some((whole, fractional)) => {
            if whole.is_empty() && fractional.is_empty() {
                return Err(Error::Parse(format!("invalid number {token:?}")));
            }
            let whole = if whole.is_empty() {
                BigInt::zero()
            } else {
                parse_digits(whole, token)?
            };
            let (digits, scale) = if fractional.is_empty() {
                (BigInt::zero(), BigInt::one())
            } else {
                let scale = num_traits::pow(BigInt::from(10), fractional.len());
                (parse_digits(fractional, token)?, scale)
            };
            Rational::new(whole * &scale + digits, scale)
        }
        None => Rational::from_integer(parse_digits(body, token)?),
    };
    Ok(if negative { -r } else { r })
}

fn strip_sign(s: &str) -> (bool, &str) {
    if let Some(rest) = s.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = s.strip_prefix('+') {
        (false, rest)
    } else {
        (false, s)
    }
}
