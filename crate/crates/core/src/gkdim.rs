//! GK dimension of a simple highest weight sl(n)-module L(λ).
//!
//! The entries of λ+ρ are split into classes of mutually integral entries,
//! each class is Schensted-inserted in its original order, and
//! `GKdim L(λ) = n(n−1)/2 − Σ A(P(λ_X))`.

use serde::Serialize;

use crate::rational::{add_integer, differ_by_integer, integer_offsets, Rational};
use crate::tableau::{rs_pair, YoungTableau};
use crate::weight::Weight;

/// One class X of positions whose entries differ pairwise by integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceClass {
    /// 1-indexed, increasing.
    pub indices: Vec<usize>,
    /// The entries at `indices`, in their original order.
    pub subweight: Vec<Rational>,
}

/// Classes ordered by their first position in the weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceDecomposition {
    pub classes: Vec<CongruenceClass>,
}

pub fn congruence_decomposition(w: &Weight) -> CongruenceDecomposition {
    let mut classes: Vec<CongruenceClass> = Vec::new();
    for (i, x) in w.entries().iter().enumerate() {
        match classes
            .iter_mut()
            .find(|c| differ_by_integer(&c.subweight[0], x))
        {
            Some(class) => {
                class.indices.push(i + 1);
                class.subweight.push(x.clone());
            }
            None => classes.push(CongruenceClass {
                indices: vec![i + 1],
                subweight: vec![x.clone()],
            }),
        }
    }
    CongruenceDecomposition { classes }
}

/// P(λ): one tableau per congruence class, in class order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauCollection {
    pub tableaux: Vec<YoungTableau>,
}

impl TableauCollection {
    pub fn num_boxes(&self) -> usize {
        self.tableaux.iter().map(|t| t.num_boxes()).sum()
    }

    /// A(P(λ)) = Σ_X A(P(λ_X)).
    pub fn column_statistic(&self) -> usize {
        self.tableaux
            .iter()
            .map(|t| t.shape().column_statistic())
            .sum()
    }
}

fn collection_of(decomposition: &CongruenceDecomposition) -> TableauCollection {
    TableauCollection {
        tableaux: decomposition
            .classes
            .iter()
            .map(|c| insertion_tableau(&c.subweight))
            .collect(),
    }
}

fn insertion_tableau(xs: &[Rational]) -> YoungTableau {
    match integer_offsets(xs) {
        Some(offsets) => {
            let base = &xs[0];
            rs_pair(&offsets).0.map(|&d| add_integer(base, d))
        }
        None => rs_pair(xs).0,
    }
}

pub fn tableau_collection(w: &Weight) -> TableauCollection {
    collection_of(&congruence_decomposition(w))
}

/// a(λ) = A(P(λ)).
pub fn a_value(w: &Weight) -> usize {
    tableau_collection(w).column_statistic()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkReport {
    pub n: usize,
    pub nu0: usize,
    pub a_value: usize,
    pub gk_dimension: usize,
    pub integral: bool,
    pub decomposition: CongruenceDecomposition,
    pub tableaux: TableauCollection,
}

pub fn gk_dimension(w: &Weight) -> GkReport {
    let decomposition = congruence_decomposition(w);
    let tableaux = collection_of(&decomposition);
    let a_value = tableaux.column_statistic();
    let nu0 = w.nu0();
    GkReport {
        n: w.len(),
        nu0,
        a_value,
        gk_dimension: nu0 - a_value,
        integral: decomposition.classes.len() == 1,
        decomposition,
        tableaux,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassJson {
    pub indices: Vec<usize>,
    pub tableau: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GkReportJson {
    pub n: usize,
    pub nu0: usize,
    pub a_value: usize,
    pub gk_dimension: usize,
    pub integral: bool,
    pub classes: Vec<ClassJson>,
}

impl GkReport {
    pub fn to_json(&self) -> GkReportJson {
        GkReportJson {
            n: self.n,
            nu0: self.nu0,
            a_value: self.a_value,
            gk_dimension: self.gk_dimension,
            integral: self.integral,
            classes: self
                .decomposition
                .classes
                .iter()
                .zip(&self.tableaux.tableaux)
                .map(|(c, t)| ClassJson {
                    indices: c.indices.clone(),
                    tableau: t
                        .rows()
                        .iter()
                        .map(|r| r.iter().map(ToString::to_string).collect())
                        .collect(),
                })
                .collect(),
        }
    }
}
