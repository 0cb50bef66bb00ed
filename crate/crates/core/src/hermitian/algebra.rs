//! The algebra over ℤ[v] generated by x and y subject to xy = v.
//!
//! Its monomials y^s x^t form a ℤ[v]-basis, so every word reduces to a
//! unique v^m y^s x^t.

use std::fmt;

use crate::error::{Error, Result};
use crate::hermitian::ball::BallSignature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    X,
    Y,
}

/// A word x^{e₁} y^{e₂} ⋯ stored as (letter, exponent) factors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraWord {
    factors: Vec<(Letter, usize)>,
}

impl AlgebraWord {
    pub fn new(factors: Vec<(Letter, usize)>) -> Self {
        AlgebraWord { factors }
    }

    /// x^{a₁} y^{b₁} ⋯ x^{a_r} y^{b_r}.
    pub fn from_signature(xi: &BallSignature) -> Self {
        let factors = xi
            .pairs()
            .flat_map(|(a, b)| [(Letter::X, a), (Letter::Y, b)])
            .collect();
        AlgebraWord { factors }
    }

    /// Parses text such as `x^3y^2xyxyx`; whitespace is ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut factors = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let letter = match chars[i] {
                'x' => Letter::X,
                'y' => Letter::Y,
                c => return Err(Error::Parse(format!("unexpected character '{c}' in word"))),
            };
            i += 1;
            let mut exponent = 1;
            if chars.get(i) == Some(&'^') {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                exponent = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("missing exponent in word '{text}'")))?;
            }
            factors.push((letter, exponent));
        }
        Ok(AlgebraWord { factors })
    }

    pub fn factors(&self) -> &[(Letter, usize)] {
        &self.factors
    }

    /// The word spelled out one letter at a time.
    pub fn letters(&self) -> Vec<Letter> {
        self.factors
            .iter()
            .flat_map(|&(l, e)| std::iter::repeat_n(l, e))
            .collect()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.factors
            .iter()
            .filter(|(l, _)| *l == letter)
            .map(|(_, e)| e)
            .sum()
    }
}

impl fmt::Display for AlgebraWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(letter, e) in &self.factors {
            let c = match letter {
                Letter::X => 'x',
                Letter::Y => 'y',
            };
            match e {
                0 => {}
                1 => write!(f, "{c}")?,
                e => write!(f, "{c}^{e}")?,
            }
        }
        Ok(())
    }
}

/// v^{v_exp} y^{y_exp} x^{x_exp}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub v_exp: usize,
    pub y_exp: usize,
    pub x_exp: usize,
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [("v", self.v_exp), ("y", self.y_exp), ("x", self.x_exp)]
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(s, e)| {
                if *e == 1 {
                    s.to_string()
                } else {
                    format!("{s}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Since v is central, each y cancels the nearest unmatched x to its left.
pub fn algebra_normal_form(word: &AlgebraWord) -> NormalForm {
    let mut pending_x = 0;
    let mut v_exp = 0;
    let mut y_exp = 0;
    for &(letter, e) in word.factors() {
        match letter {
            Letter::X => pending_x += e,
            Letter::Y => {
                let cancelled = pending_x.min(e);
                v_exp += cancelled;
                pending_x -= cancelled;
                y_exp += e - cancelled;
            }
        }
    }
    NormalForm {
        v_exp,
        y_exp,
        x_exp: pending_x,
    }
}
