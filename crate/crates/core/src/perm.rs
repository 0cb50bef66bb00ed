//! The symmetric group S_n in one-line notation.
//!
//! Composition is as functions: `a.compose(&b)` maps `i ↦ a(b(i))`. A
//! permutation acts on a weight by moving coordinates, `σ.(λ+ρ) = Σ λᵢ ε_{σ(i)}`,
//! so entry `σ(i)` of the result is `λᵢ`.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tableau::{rs_pair, RecordingTableau, Shape};
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    /// Validates that `one_line` is a rearrangement of 1..=n.
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{one_line:?} is not a rearrangement of 1..={n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    /// w₀ = (n, n−1, …, 1).
    pub fn longest(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).rev().collect(),
        }
    }

    /// The simple reflection s_k = (k, k+1), 1 ≤ k < n.
    pub fn simple(n: usize, k: usize) -> Self {
        assert!(
            k >= 1 && k < n,
            "simple reflection s_{k} does not exist in S_{n}"
        );
        let mut p = Self::identity(n);
        p.one_line.swap(k - 1, k);
        p
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    /// σ(i), 1-indexed.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            one_line: other
                .one_line
                .iter()
                .map(|&j| self.one_line[j - 1])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.one_line.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.one_line;
        (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&y| y < v[i]).count())
            .sum()
    }

    /// True iff l(s_k σ) < l(σ), i.e. k+1 appears before k in one-line form.
    pub fn has_left_descent(&self, k: usize) -> bool {
        let inv = self.inverse();
        inv.one_line[k - 1] > inv.one_line[k]
    }

    /// True iff l(σ s_k) < l(σ), i.e. σ(k) > σ(k+1).
    pub fn has_right_descent(&self, k: usize) -> bool {
        self.one_line[k - 1] > self.one_line[k]
    }

    /// s_k σ: swaps the values k and k+1.
    pub fn left_mul_simple(&self, k: usize) -> Permutation {
        let one_line = self
            .one_line
            .iter()
            .map(|&x| match x {
                x if x == k => k + 1,
                x if x == k + 1 => k,
                x => x,
            })
            .collect();
        Permutation { one_line }
    }

    /// σ s_k: swaps the positions k and k+1.
    pub fn right_mul_simple(&self, k: usize) -> Permutation {
        let mut p = self.clone();
        p.one_line.swap(k - 1, k);
        p
    }

    /// A reduced word `[k₁, …, k_l]` with σ = s_{k₁} ⋯ s_{k_l}.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(k) = (1..w.n()).find(|&k| w.has_left_descent(k)) {
            word.push(k);
            w = w.left_mul_simple(k);
        }
        word
    }

    /// Bruhat order via the rank-matrix criterion: x ≤ y iff for all i, k,
    /// #{j ≤ i : x(j) ≥ k} ≤ #{j ≤ i : y(j) ≥ k}.
    pub fn bruhat_le(&self, other: &Permutation) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let n = self.n();
        let mut cx = vec![0usize; n + 2];
        let mut cy = vec![0usize; n + 2];
        for (&x, &y) in self.one_line.iter().zip(&other.one_line) {
            // cx[k] counts entries ≥ k among the positions seen so far
            cx[1..=x].iter_mut().for_each(|c| *c += 1);
            cy[1..=y].iter_mut().for_each(|c| *c += 1);
            if (1..=n).any(|k| cx[k] > cy[k]) {
                return false;
            }
        }
        true
    }

    /// σ.(λ+ρ): the entry at position σ(i) is λᵢ.
    pub fn act(&self, w: &Weight) -> Result<Weight> {
        if self.n() != w.len() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: w.len(),
            });
        }
        let mut out = vec![Rational::default(); self.n()];
        for (i, x) in w.entries().iter().enumerate() {
            out[self.one_line[i] - 1] = x.clone();
        }
        Weight::new(out)
    }

    /// All of S_n in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation {
            one_line: current.clone(),
        }];
        while next_permutation(&mut current) {
            out.push(Permutation {
                one_line: current.clone(),
            });
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.one_line.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// P(σ) and Q(σ), the tableaux of the sequence (σ₁, …, σₙ).
pub fn rs_of_permutation(a: &Permutation) -> (RecordingTableau, RecordingTableau) {
    rs_pair(a.one_line())
}

/// a(σ) = A(P(σ)).
pub fn a_value_of_permutation(a: &Permutation) -> usize {
    rs_of_permutation(a).0.shape().column_statistic()
}

/// σ_Y: the longest element of the parabolic subgroup generated by the s_k
/// with k not a partial sum of the column sizes.
pub fn parabolic_longest(shape: &Shape, n: usize) -> Result<Permutation> {
    if shape.num_boxes() != n {
        return Err(Error::ShapeSize {
            boxes: shape.num_boxes(),
            n,
        });
    }
    let mut one_line = Vec::with_capacity(n);
    let mut start = 0;
    for &c in shape.column_sizes() {
        one_line.extend((start + 1..=start + c).rev());
        start += c;
    }
    Ok(Permutation { one_line })
}

/// σ_λ for an integral weight: the stable ranking of the entries, so that
/// λᵢ ≤ λⱼ ⇔ σ(i) < σ(j) for i < j.
pub fn minimal_antidominant_permutation(w: &Weight) -> Result<Permutation> {
    if let Some((i, j)) = w.first_non_integral_pair() {
        return Err(Error::NotIntegral { i: i + 1, j: j + 1 });
    }
    Ok(stable_ranking(w.entries()))
}

pub(crate) fn stable_ranking(entries: &[Rational]) -> Permutation {
    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_by(|&i, &j| entries[i].cmp(&entries[j]).then(i.cmp(&j)));
    let mut one_line = vec![0; entries.len()];
    for (rank, &i) in order.iter().enumerate() {
        one_line[i] = rank + 1;
    }
    Permutation { one_line }
}
