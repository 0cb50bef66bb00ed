//! Highest weight Harish-Chandra modules of su(p,q).
//!
//! A weight is read against a [`PqContext`]: the first p entries of λ+ρ are
//! the black balls, the last q the white balls. For (p,q)-dominant λ the
//! tableau P(λ) has at most two columns when λ is integral, and
//! GKdim L(λ) = m(n−m) with m the length of the second column. Otherwise
//! GKdim L(λ) = pq.

mod algebra;
mod ball;
mod unitary;

pub use algebra::{algebra_normal_form, AlgebraWord, Letter, NormalForm};
pub use ball::{
    ball_model_m, ball_model_m_by_simulation, ball_transform_equivalent, Ball, BallSignature,
};
pub use unitary::{
    gkdim_series, series_zero_threshold, unitary_gkdim, unitary_interval, SeriesPoint,
    UnitaryInterval,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gkdim::tableau_collection;
use crate::rational::{add_integer, integer_offsets, to_string, Rational};
use crate::weight::{PqContext, Weight};

fn check_integral(w: &Weight) -> Result<()> {
    match w.first_non_integral_pair() {
        Some((i, j)) => Err(Error::NotIntegral { i: i + 1, j: j + 1 }),
        None => Ok(()),
    }
}

fn check_integral_dominant(w: &Weight, ctx: PqContext) -> Result<()> {
    w.check_pq_dominant(ctx)?;
    check_integral(w)
}

/// Entries of the second column of P(λ), top to bottom.
///
/// Each step removes λ_p together with every white entry from λ_{p+k} on,
/// where λ_{p+k} is the last white entry ≥ λ_p, and records λ_{p+k}. The
/// process stops once the remaining entries are strictly decreasing.
pub fn second_column_by_deletion(w: &Weight, ctx: PqContext) -> Result<Vec<Rational>> {
    check_integral_dominant(w, ctx)?;
    Ok(deletion_of(w, ctx))
}

/// Both halves as offsets from λ₁, when they fit in `i64`.
fn integer_halves(w: &Weight, ctx: PqContext) -> Option<(Vec<i64>, Vec<i64>)> {
    let mut offsets = integer_offsets(w.entries())?;
    let white = offsets.split_off(ctx.p());
    Some((offsets, white))
}

fn deletion_of(w: &Weight, ctx: PqContext) -> Vec<Rational> {
    match integer_halves(w, ctx) {
        Some((black, white)) => {
            let base = &w.entries()[0];
            deletion(&black, &white)
                .into_iter()
                .map(|d| add_integer(base, d))
                .collect()
        }
        None => deletion(w.black(ctx), w.white(ctx)),
    }
}

fn xi_of(w: &Weight, ctx: PqContext) -> Result<BallSignature> {
    let runs = match integer_halves(w, ctx) {
        Some((black, white)) => xi_runs(&black, &white),
        None => xi_runs(w.black(ctx), w.white(ctx)),
    };
    BallSignature::new(runs)
}

fn deletion<T: Ord + Clone>(black: &[T], white: &[T]) -> Vec<T> {
    let mut black = black.to_vec();
    let mut white = white.to_vec();
    let mut column = Vec::new();
    while let Some(last_black) = black.last() {
        let k = white.iter().take_while(|x| *x >= last_black).count();
        if k == 0 {
            break;
        }
        column.push(white[k - 1].clone());
        black.pop();
        white.truncate(k - 1);
    }
    column
}

/// ξ(λ) = (a₁, b₁, …, a_r, b_r), the run lengths of the ball line.
///
/// a₁ counts whites ≥ λ₁. Afterwards, with A = a₁+⋯+a_k whites and
/// B = b₁+⋯+b_k blacks consumed, b_{k+1} counts blacks in
/// (W_{A+1}, W_A] (or ≤ W_q once A = q) and a_{k+1} counts whites in
/// [B_{B+1}, B_B) (or < B_p once B = p). The induction stops as soon as all
/// balls have been counted.
pub fn xi_signature(w: &Weight, ctx: PqContext) -> Result<BallSignature> {
    check_integral_dominant(w, ctx)?;
    xi_of(w, ctx)
}

fn xi_runs<T: Ord>(black: &[T], white: &[T]) -> Vec<usize> {
    let (p, q) = (black.len(), white.len());
    let count_blacks = |used_whites: usize| -> usize {
        if used_whites < q {
            let lower = &white[used_whites];
            black
                .iter()
                .filter(|x| *x > lower && (used_whites == 0 || *x <= &white[used_whites - 1]))
                .count()
        } else {
            black.iter().filter(|x| *x <= &white[q - 1]).count()
        }
    };
    let count_whites = |used_blacks: usize| -> usize {
        let upper = &black[used_blacks - 1];
        if used_blacks < p {
            let lower = &black[used_blacks];
            white.iter().filter(|x| *x < upper && *x >= lower).count()
        } else {
            white.iter().filter(|x| *x < upper).count()
        }
    };

    let mut runs = Vec::new();
    let mut a = white.iter().filter(|x| *x >= &black[0]).count();
    let (mut whites, mut blacks) = (0, 0);
    loop {
        whites += a;
        let b = count_blacks(whites);
        blacks += b;
        runs.push(a);
        runs.push(b);
        if (whites == q && blacks == p) || (a == 0 && b == 0) {
            return runs;
        }
        a = count_whites(blacks);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianReport {
    pub p: usize,
    pub q: usize,
    pub integral: bool,
    /// Second-column length in the integral case, min(p,q) otherwise.
    pub m: usize,
    /// Empty in the non-integral case.
    pub second_column: Vec<Rational>,
    /// `None` in the non-integral case.
    pub xi: Option<BallSignature>,
    pub gk_dimension: usize,
    pub orbit_index: usize,
    pub orbit_dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HermitianReportJson {
    pub p: usize,
    pub q: usize,
    pub integral: bool,
    pub m: usize,
    pub second_column: Vec<String>,
    pub xi: Vec<usize>,
    pub gk_dimension: usize,
    pub orbit_index: usize,
    pub orbit_dimension: usize,
}

impl HermitianReport {
    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn to_json(&self) -> HermitianReportJson {
        HermitianReportJson {
            p: self.p,
            q: self.q,
            integral: self.integral,
            m: self.m,
            second_column: self.second_column.iter().map(to_string).collect(),
            xi: self
                .xi
                .as_ref()
                .map(|x| x.runs().to_vec())
                .unwrap_or_default(),
            gk_dimension: self.gk_dimension,
            orbit_index: self.orbit_index,
            orbit_dimension: self.orbit_dimension,
        }
    }
}

fn disagreement(what: &'static str, left: impl ToString, right: impl ToString) -> Error {
    Error::Disagreement {
        what,
        left: left.to_string(),
        right: right.to_string(),
    }
}

/// GK dimension and associated-variety data of L(λ) for (p,q)-dominant λ.
///
/// In the integral case m is read off the tableau P(λ) and checked against
/// the deletion algorithm and the ball model.
pub fn gk_pq(w: &Weight, ctx: PqContext) -> Result<HermitianReport> {
    w.check_pq_dominant(ctx)?;
    let (p, q, n) = (ctx.p(), ctx.q(), ctx.n());
    let collection = tableau_collection(w);
    let report = |integral, m, second_column, xi| HermitianReport {
        p,
        q,
        integral,
        m,
        second_column,
        xi,
        gk_dimension: m * (n - m),
        orbit_index: m,
        orbit_dimension: m * (n - m),
    };

    if !w.is_integral() {
        let sizes: Vec<usize> = collection.tableaux.iter().map(|t| t.num_boxes()).collect();
        let columns: Vec<usize> = collection
            .tableaux
            .iter()
            .map(|t| t.shape().column_sizes().len())
            .collect();
        if sizes != [p, q] || columns != [1, 1] {
            return Err(disagreement(
                "non-integral tableau sizes",
                format!("{sizes:?}"),
                format!("[{p}, {q}]"),
            ));
        }
        // m(n−m) = pq with m = min(p,q)
        return Ok(report(false, p.min(q), Vec::new(), None));
    }

    let tableau = &collection.tableaux[0];
    let columns = tableau.shape().column_sizes().len();
    if columns > 2 {
        return Err(disagreement(
            "number of tableau columns",
            columns,
            "at most 2",
        ));
    }
    let second_column: Vec<Rational> = tableau.column(1).into_iter().cloned().collect();
    let deleted = deletion_of(w, ctx);
    if deleted != second_column {
        return Err(disagreement(
            "second column",
            format_list(&second_column),
            format_list(&deleted),
        ));
    }
    let xi = xi_of(w, ctx)?;
    let m_ball = ball_model_m(&xi);
    if m_ball != second_column.len() {
        return Err(disagreement("m", second_column.len(), m_ball));
    }
    Ok(report(true, m_ball, second_column, Some(xi)))
}

fn format_list(xs: &[Rational]) -> String {
    xs.iter().map(to_string).collect::<Vec<_>>().join(",")
}

/// (k, dim Ō_k) for the orbit closure Ō_k that is the associated variety of
/// L(λ); dim Ō_k = k(n−k).
pub fn associated_variety(w: &Weight, ctx: PqContext) -> Result<(usize, usize)> {
    let report = gk_pq(w, ctx)?;
    Ok((report.orbit_index, report.orbit_dimension))
}
