use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// An element of ℤ[v, v⁻¹].
///
/// Stored densely from the lowest exponent; never has zero coefficients at
/// either end, and the zero polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · v^e`.
    pub fn monomial(c: i64, e: i32) -> Self {
        Self::from_dense(e, vec![c])
    }

    /// Coefficients `coeffs[i]` of `v^(low + i)`.
    pub fn from_dense(low: i32, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| acc + Self::monomial(c, e))
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().position(|&c| c != 0);
        match lead {
            None => {
                self.coeffs.clear();
                self.low = 0;
            }
            Some(start) => {
                let end = self.coeffs.iter().rposition(|&c| c != 0).unwrap() + 1;
                self.coeffs.truncate(end);
                self.coeffs.drain(..start);
                self.low += start as i32;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent; `None` for the zero polynomial (degree −∞).
    pub fn degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// Lowest exponent; `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn coefficient(&self, e: i32) -> i64 {
        let i = e - self.low;
        if i < 0 {
            0
        } else {
            self.coeffs.get(i as usize).copied().unwrap_or(0)
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.low + i as i32, c))
    }

    /// v ↦ v⁻¹.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly {
            low: -self.degree().unwrap(),
            coeffs,
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// True iff every exponent is negative, i.e. the element lies in v⁻¹ℤ[v⁻¹].
    pub fn is_negative_part(&self) -> bool {
        self.degree().is_none_or(|d| d < 0)
    }

    /// The part with exponents ≥ `e`.
    pub fn truncate_below(&self, e: i32) -> Self {
        Self::from_terms(self.terms().filter(|&(x, _)| x >= e))
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_dense(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplication by `v^e`.
    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub(crate) fn dense(&self) -> (i32, &[i64]) {
        (self.low, &self.coeffs)
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        if self.is_zero() {
            return other.scale(sign);
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.degree().unwrap().max(other.degree().unwrap());
        let mut coeffs = vec![0; (high - low + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - low) as usize] += c;
        }
        for (e, c) in other.terms() {
            coeffs[(e - low) as usize] += sign * c;
        }
        Self::from_dense(low, coeffs)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.combine(rhs, 1)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.combine(rhs, -1)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            if !first {
                f.write_str(" ")?;
            }
            let mag = c.abs();
            let coeff = if mag == 1 && e != 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var = match e {
                0 => String::new(),
                1 => "v".to_string(),
                e => format!("v^{e}"),
            };
            if first {
                write!(f, "{sign}{coeff}{var}")?;
            } else {
                write!(f, "{sign} {coeff}{var}")?;
            }
            first = false;
        }
        Ok(())
    }
}
