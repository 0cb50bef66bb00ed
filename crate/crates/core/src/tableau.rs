//! Young tableaux and Schensted row insertion.

use std::fmt;

use crate::rational::Rational;

/// Rows of a Young tableau, top row first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Tableau<T> {
    rows: Vec<Vec<T>>,
}

/// Semistandard tableau with rational entries: P(γ), P(λ_X).
pub type YoungTableau = Tableau<Rational>;

/// Standard tableau filled with 1..k: Q(γ), and P(σ), Q(σ) for permutations.
pub type RecordingTableau = Tableau<usize>;

/// A box position, `(row, column)`, both 1-indexed.
pub type BoxPosition = (usize, usize);

impl<T> Tableau<T> {
    pub fn new() -> Self {
        Tableau { rows: Vec::new() }
    }

    /// Builds a tableau from rows without checking any ordering condition.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        Tableau {
            rows: rows.into_iter().filter(|r| !r.is_empty()).collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn num_boxes(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Shape {
        Shape::from_row_lengths(self.rows.iter().map(Vec::len))
    }

    /// Entries of column `c` (0-indexed), top to bottom.
    pub fn column(&self, c: usize) -> Vec<&T> {
        self.rows.iter().filter_map(|r| r.get(c)).collect()
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Tableau<U> {
        Tableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&mut f).collect())
                .collect(),
        }
    }
}

impl<T: Ord> Tableau<T> {
    fn has_partition_shape(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].len() >= w[1].len())
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        self.has_partition_shape()
            && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
            && self
                .rows
                .windows(2)
                .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below))
    }
}

impl<T: Ord + Clone> Tableau<T> {
    /// Row-inserts `x` in place and returns the position of the new box.
    ///
    /// `x` replaces the leftmost entry of the first row strictly bigger than
    /// it, the bumped entry goes to the next row the same way, and so on until
    /// an entry lands at the end of a row.
    pub fn insert_mut(&mut self, x: T) -> BoxPosition {
        let mut carry = x;
        for (r, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|y| *y > carry) {
                Some(c) => carry = std::mem::replace(&mut row[c], carry),
                None => {
                    row.push(carry);
                    return (r + 1, row.len());
                }
            }
        }
        self.rows.push(vec![carry]);
        (self.rows.len(), 1)
    }

    /// Pure form of [`Tableau::insert_mut`].
    pub fn insert(&self, x: T) -> (Tableau<T>, BoxPosition) {
        let mut t = self.clone();
        let pos = t.insert_mut(x);
        (t, pos)
    }
}

impl Tableau<usize> {
    /// Rows and columns strictly increase and the entries are exactly 1..k.
    pub fn is_standard(&self) -> bool {
        let k = self.num_boxes();
        let mut seen = vec![false; k + 1];
        for &x in self.rows.iter().flatten() {
            if x == 0 || x > k || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        self.is_semistandard() && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    fn place(&mut self, (row, col): BoxPosition, value: usize) {
        if row > self.rows.len() {
            self.rows.push(Vec::new());
        }
        debug_assert_eq!(self.rows[row - 1].len() + 1, col);
        self.rows[row - 1].push(value);
    }
}

impl<T: fmt::Display> fmt::Display for Tableau<T> {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Insertion tableau P and recording tableau Q of a sequence.
pub fn rs_pair<T: Ord + Clone>(seq: &[T]) -> (Tableau<T>, RecordingTableau) {
    let mut p = Tableau::new();
    let mut q = Tableau::new();
    for (k, x) in seq.iter().enumerate() {
        let pos = p.insert_mut(x.clone());
        q.place(pos, k + 1);
    }
    (p, q)
}

/// Every intermediate pair (P_k, Q_k), k = 1..len.
pub fn rs_chain<T: Ord + Clone>(seq: &[T]) -> Vec<(Tableau<T>, RecordingTableau)> {
    let mut p = Tableau::new();
    let mut q = Tableau::new();
    seq.iter()
        .enumerate()
        .map(|(k, x)| {
            let pos = p.insert_mut(x.clone());
            q.place(pos, k + 1);
            (p.clone(), q.clone())
        })
        .collect()
}

/// The shape of a tableau, stored by column sizes c₁ ≥ c₂ ≥ ….
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Shape {
    columns: Vec<usize>,
}

impl Shape {
    /// `None` unless the sizes are positive and weakly decreasing.
    pub fn from_columns(columns: Vec<usize>) -> Option<Shape> {
        let ok = columns.iter().all(|&c| c > 0) && columns.windows(2).all(|w| w[0] >= w[1]);
        ok.then_some(Shape { columns })
    }

    pub fn from_row_lengths(rows: impl IntoIterator<Item = usize>) -> Shape {
        Shape {
            columns: conjugate(&rows.into_iter().collect::<Vec<_>>()),
        }
    }

    pub fn column_sizes(&self) -> &[usize] {
        &self.columns
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        conjugate(&self.columns)
    }

    pub fn num_boxes(&self) -> usize {
        self.columns.iter().sum()
    }

    /// A(Y) = Σ cᵢ(cᵢ−1)/2 over the column sizes.
    pub fn column_statistic(&self) -> usize {
        self.columns
            .iter()
            .map(|&c| c * (c.saturating_sub(1)) / 2)
            .sum()
    }
}

fn conjugate(parts: &[usize]) -> Vec<usize> {
    let longest = parts.iter().copied().max().unwrap_or(0);
    (1..=longest)
        .map(|i| parts.iter().filter(|&&p| p >= i).count())
        .collect()
}

/// All partitions of `n`, each as a weakly decreasing list of parts.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
