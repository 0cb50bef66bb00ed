//! The line of white and black balls attached to an integral (p,q)-dominant
//! weight, and the count of removable adjacent white-black pairs.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ball {
    /// An entry from the last q positions.
    White,
    /// An entry from the first p positions.
    Black,
}

/// Run lengths (a₁, b₁, …, a_r, b_r): a₁ white balls, then b₁ black, and so on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BallSignature {
    runs: Vec<usize>,
}

impl BallSignature {
    /// Requires an even, nonempty list whose entries are positive except
    /// possibly the first and the last.
    pub fn new(runs: Vec<usize>) -> Result<Self> {
        if runs.is_empty() || !runs.len().is_multiple_of(2) {
            return Err(Error::InvalidSignature(format!(
                "expected an even number of runs, got {}",
                runs.len()
            )));
        }
        let last = runs.len() - 1;
        if let Some(i) = (1..last).find(|&i| runs[i] == 0) {
            return Err(Error::InvalidSignature(format!(
                "interior run {} is empty",
                i + 1
            )));
        }
        Ok(BallSignature { runs })
    }

    /// Run-length encoding of a line of balls, starting with a (possibly
    /// empty) white run and ending with a (possibly empty) black run.
    pub fn from_balls(balls: &[Ball]) -> Self {
        let mut runs = vec![0];
        let mut current = Ball::White;
        for &ball in balls {
            if ball != current {
                runs.push(0);
                current = ball;
            }
            *runs.last_mut().unwrap() += 1;
        }
        if runs.len() % 2 == 1 {
            runs.push(0);
        }
        BallSignature { runs }
    }

    pub fn runs(&self) -> &[usize] {
        &self.runs
    }

    /// r, the number of (white, black) run pairs.
    pub fn len(&self) -> usize {
        self.runs.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.runs.iter().all(|&x| x == 0)
    }

    /// (a_k, b_k) pairs.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.runs.chunks(2).map(|c| (c[0], c[1]))
    }

    /// q = Σ aᵢ.
    pub fn whites(&self) -> usize {
        self.pairs().map(|(a, _)| a).sum()
    }

    /// p = Σ bᵢ.
    pub fn blacks(&self) -> usize {
        self.pairs().map(|(_, b)| b).sum()
    }

    pub fn balls(&self) -> Vec<Ball> {
        self.pairs()
            .flat_map(|(a, b)| {
                std::iter::repeat_n(Ball::White, a).chain(std::iter::repeat_n(Ball::Black, b))
            })
            .collect()
    }
}

impl fmt::Display for BallSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.runs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// G_r from G₁ = min(a₁, b₁) and G_{k+1} = G_k + min(Σ_{i≤k+1} aᵢ − G_k, b_{k+1}).
pub fn ball_model_m(xi: &BallSignature) -> usize {
    let mut whites_so_far = 0;
    let mut g = 0;
    for (a, b) in xi.pairs() {
        whites_so_far += a;
        g += (whites_so_far - g).min(b);
    }
    g
}

/// Removes adjacent white-black pairs as they appear while scanning the
/// line left to right, and counts them.
pub fn ball_model_m_by_simulation(xi: &BallSignature) -> usize {
    let mut stack: Vec<Ball> = Vec::new();
    let mut removed = 0;
    for ball in xi.balls() {
        if ball == Ball::Black && stack.last() == Some(&Ball::White) {
            stack.pop();
            removed += 1;
        } else {
            stack.push(ball);
        }
    }
    removed
}

/// The local moves W B B ↔ B W B and W W B ↔ W B W, at any position.
fn neighbours(line: &[Ball]) -> Vec<Vec<Ball>> {
    use Ball::{Black as B, White as W};
    const MOVES: [([Ball; 3], [Ball; 3]); 2] = [([W, B, B], [B, W, B]), ([W, W, B], [W, B, W])];
    let mut out = Vec::new();
    for i in 0..line.len().saturating_sub(2) {
        let window = &line[i..i + 3];
        for (from, to) in MOVES {
            for (x, y) in [(from, to), (to, from)] {
                if window == x {
                    let mut next = line.to_vec();
                    next[i..i + 3].copy_from_slice(&y);
                    out.push(next);
                }
            }
        }
    }
    out
}

/// Whether `xi2` can be reached from `xi1` by the local moves, by
/// breadth-first search over ball lines. Meant for small sizes.
pub fn ball_transform_equivalent(xi1: &BallSignature, xi2: &BallSignature) -> Result<bool> {
    if xi1.whites() != xi2.whites() || xi1.blacks() != xi2.blacks() {
        return Err(Error::BallCountMismatch {
            white1: xi1.whites(),
            black1: xi1.blacks(),
            white2: xi2.whites(),
            black2: xi2.blacks(),
        });
    }
    let start = xi1.balls();
    let target = xi2.balls();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(line) = queue.pop_front() {
        if line == target {
            return Ok(true);
        }
        for next in neighbours(&line) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}
