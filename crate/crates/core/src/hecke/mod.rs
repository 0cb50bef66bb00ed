//! Hecke algebra of S_n over ℤ[v, v⁻¹] and the definitional a-function.
//!
//! Generators `T_w` satisfy `T_w T_w' = T_{ww'}` when lengths add and
//! `(T_s + v⁻¹)(T_s − v) = 0`. The Kazhdan–Lusztig element `C_w` is the unique
//! bar-invariant element with `C_w ≡ T_w` modulo `⊕ v⁻¹ℤ[v⁻¹] T_y`, and
//! `a(z)` is the largest v-degree of the structure constants `h_{x,y,z}` in
//! `C_x C_y = Σ h_{x,y,z} C_z`.
//!
//! This is a validation oracle for small ranks. The fast path for a-values is
//! [`crate::perm::a_value_of_permutation`].

mod laurent;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

pub use laurent::LaurentPoly;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_RANK_BOUND: usize = 5;

/// `v − v⁻¹`.
fn v_minus_vinv() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 1), (-1, -1)])
}

/// An element Σ f_w T_w of the Hecke algebra of S_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::t(&Permutation::identity(n))
    }

    /// The standard basis element T_w.
    pub fn t(w: &Permutation) -> Self {
        Self::from_terms(w.n(), [(w.clone(), LaurentPoly::one())]).unwrap()
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Permutation, LaurentPoly)>,
    ) -> Result<Self> {
        let mut out = Self::zero(n);
        for (w, f) in terms {
            if w.n() != n {
                return Err(Error::SizeMismatch {
                    left: n,
                    right: w.n(),
                });
            }
            out.add_term(w, &f);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, LaurentPoly> {
        &self.terms
    }

    pub fn coefficient(&self, w: &Permutation) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Permutation, f: &LaurentPoly) {
        if f.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(slot) => {
                slot.insert(f.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += f;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_same_rank(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_rank(other)?;
        let mut out = self.clone();
        for (w, f) in &other.terms {
            out.add_term(w.clone(), f);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&LaurentPoly::monomial(-1, 0)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (w, f) in &self.terms {
            out.add_term(w.clone(), &(f * c));
        }
        out
    }

    /// T_{s_k} · self.
    fn left_mul_simple(&self, k: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (w, f) in &self.terms {
            let sw = w.left_mul_simple(k);
            out.add_term(sw, f);
            if w.has_left_descent(k) {
                out.add_term(w.clone(), &(f * &v_minus_vinv()));
            }
        }
        out
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_rank(other)?;
        let mut out = Self::zero(self.n);
        for (u, f) in &self.terms {
            // T_u = T_{k₁} ⋯ T_{k_l}, applied right to left
            let product = u
                .reduced_word()
                .iter()
                .rev()
                .fold(other.clone(), |acc, &k| acc.left_mul_simple(k));
            for (w, g) in &product.terms {
                out.add_term(w.clone(), &(f * g));
            }
        }
        Ok(out)
    }

    /// The ring involution with v ↦ v⁻¹ and T_w ↦ (T_{w⁻¹})⁻¹.
    pub fn bar_involution(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for (w, f) in &self.terms {
            // bar(T_w) = bar(T_{k₁}) ⋯ bar(T_{k_l}), bar(T_s) = T_s + (v⁻¹ − v)
            let mut bar_tw = Self::one(n);
            for k in w.reduced_word() {
                let s = Permutation::simple(n, k);
                let bar_ts = Self::t(&s)
                    .add(&Self::one(n).scale(&-&v_minus_vinv()))
                    .unwrap();
                bar_tw = bar_tw.multiply(&bar_ts).unwrap();
            }
            out = out.add(&bar_tw.scale(&f.bar())).unwrap();
        }
        out
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})T{w}")?;
        }
        Ok(())
    }
}

/// T-basis product with the defining relations.
pub fn multiply(a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
    a.multiply(b)
}

pub fn bar_involution(a: &HeckeElement) -> HeckeElement {
    a.bar_involution()
}

/// C_w, with the default rank bound.
pub fn kl_basis_element(w: &Permutation) -> Result<HeckeElement> {
    HeckeOracle::default().kl_basis_element(w)
}

/// a(z) from the structure constants, with the default rank bound.
pub fn a_function_definitional(z: &Permutation) -> Result<usize> {
    HeckeOracle::default().a_function_definitional(z)
}

/// Entry point for the Kazhdan–Lusztig computations, limited to S_n with
/// `n <= rank_bound`. Results are memoized per rank across all oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeckeOracle {
    rank_bound: usize,
}

impl Default for HeckeOracle {
    fn default() -> Self {
        HeckeOracle {
            rank_bound: DEFAULT_RANK_BOUND,
        }
    }
}

impl HeckeOracle {
    pub fn with_rank_bound(rank_bound: usize) -> Self {
        HeckeOracle { rank_bound }
    }

    pub fn rank_bound(&self) -> usize {
        self.rank_bound
    }

    fn data(&self, n: usize) -> Result<Arc<RankData>> {
        if n > self.rank_bound {
            return Err(Error::RankBound {
                n,
                bound: self.rank_bound,
            });
        }
        Ok(rank_data(n))
    }

    pub fn kl_basis_element(&self, w: &Permutation) -> Result<HeckeElement> {
        let data = self.data(w.n())?;
        let c = &data.kl_basis()[data.index[w]];
        HeckeElement::from_terms(
            w.n(),
            c.iter()
                .map(|(y, f)| (data.elements[*y].clone(), f.clone())),
        )
    }

    /// Coordinates of `h` in the Kazhdan–Lusztig basis.
    pub fn kl_coordinates(&self, h: &HeckeElement) -> Result<BTreeMap<Permutation, LaurentPoly>> {
        let data = self.data(h.n())?;
        let mut dense = vec![LaurentPoly::zero(); data.elements.len()];
        for (w, f) in h.terms() {
            dense[data.index[w]] = f.clone();
        }
        let kl = data.kl_basis();
        let mut out = BTreeMap::new();
        for z in (0..dense.len()).rev() {
            let coeff = std::mem::take(&mut dense[z]);
            if coeff.is_zero() {
                continue;
            }
            for (y, f) in &kl[z] {
                dense[*y] -= &(&coeff * f);
            }
            out.insert(data.elements[z].clone(), coeff);
        }
        Ok(out)
    }

    /// h_{x,y,z} for all z: the KL coordinates of C_x C_y.
    pub fn structure_constants(
        &self,
        x: &Permutation,
        y: &Permutation,
    ) -> Result<BTreeMap<Permutation, LaurentPoly>> {
        let product = self
            .kl_basis_element(x)?
            .multiply(&self.kl_basis_element(y)?)?;
        self.kl_coordinates(&product)
    }

    pub fn a_function_definitional(&self, z: &Permutation) -> Result<usize> {
        let data = self.data(z.n())?;
        Ok(data.a_values()[data.index[z]])
    }

    /// a(z) for every z in S_n, in lexicographic order of z.
    pub fn a_function_table(&self, n: usize) -> Result<Vec<(Permutation, usize)>> {
        let data = self.data(n)?;
        let mut table: Vec<_> = data
            .elements
            .iter()
            .cloned()
            .zip(data.a_values().iter().copied())
            .collect();
        table.sort();
        Ok(table)
    }
}

fn rank_data(n: usize) -> Arc<RankData> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<RankData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(RankData::new(n)))
        .clone()
}

type Sparse = Vec<(usize, LaurentPoly)>;

/// Dense tables for S_n, with elements indexed in order of increasing length.
struct RankData {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    lengths: Vec<usize>,
    /// `left_mul[k-1][i]` is the index of s_k · elements[i].
    left_mul: Vec<Vec<usize>>,
    left_descent: Vec<Vec<bool>>,
    kl: OnceLock<Vec<Sparse>>,
    a_values: OnceLock<Vec<usize>>,
}

impl RankData {
    fn new(n: usize) -> Self {
        let mut elements = Permutation::all(n);
        elements.sort_by_key(|w| w.length());
        let index: HashMap<_, _> = elements.iter().cloned().zip(0..).collect();
        let lengths = elements.iter().map(Permutation::length).collect();
        let left_mul = (1..n)
            .map(|k| {
                elements
                    .iter()
                    .map(|w| index[&w.left_mul_simple(k)])
                    .collect()
            })
            .collect();
        let left_descent = (1..n)
            .map(|k| elements.iter().map(|w| w.has_left_descent(k)).collect())
            .collect();
        RankData {
            elements,
            index,
            lengths,
            left_mul,
            left_descent,
            kl: OnceLock::new(),
            a_values: OnceLock::new(),
        }
    }

    fn first_left_descent(&self, i: usize) -> Option<usize> {
        (0..self.left_descent.len()).find(|&k| self.left_descent[k][i])
    }

    /// T_{s_{k+1}} · Σ f_w T_w on dense coordinates.
    fn left_mul_t(&self, k: usize, h: &[LaurentPoly]) -> Vec<LaurentPoly> {
        let mut out = vec![LaurentPoly::zero(); h.len()];
        let vv = v_minus_vinv();
        for (i, f) in h.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            out[self.left_mul[k][i]] += f;
            if self.left_descent[k][i] {
                out[i] += &(f * &vv);
            }
        }
        out
    }

    fn kl_basis(&self) -> &[Sparse] {
        self.kl.get_or_init(|| self.compute_kl_basis())
    }

    fn a_values(&self) -> &[usize] {
        self.a_values.get_or_init(|| self.compute_a_values())
    }

    /// C_w by induction on length: C_s C_{sw} is bar-invariant and equals
    /// T_w plus lower terms; subtracting bar-invariant multiples of lower
    /// C_z clears every coefficient outside v⁻¹ℤ[v⁻¹].
    fn compute_kl_basis(&self) -> Vec<Sparse> {
        let size = self.elements.len();
        let mut dense: Vec<Vec<LaurentPoly>> = Vec::with_capacity(size);
        let mut sparse: Vec<Sparse> = Vec::with_capacity(size);
        let vinv = LaurentPoly::monomial(1, -1);
        for w in 0..size {
            let c = match self.first_left_descent(w) {
                None => {
                    let mut e = vec![LaurentPoly::zero(); size];
                    e[w] = LaurentPoly::one();
                    e
                }
                Some(k) => {
                    let shorter = &dense[self.left_mul[k][w]];
                    let mut e = self.left_mul_t(k, shorter);
                    for (y, f) in shorter.iter().enumerate() {
                        if !f.is_zero() {
                            e[y] += &(f * &vinv);
                        }
                    }
                    for z in (0..w).rev() {
                        let f = &e[z];
                        if f.is_negative_part() {
                            continue;
                        }
                        let positive = f.truncate_below(1);
                        let correction = &(&positive + &LaurentPoly::monomial(f.coefficient(0), 0))
                            + &positive.bar();
                        for (y, g) in &sparse[z] {
                            e[*y] -= &(&correction * g);
                        }
                    }
                    e
                }
            };
            debug_assert_eq!(c[w], LaurentPoly::one());
            debug_assert!(c[w + 1..].iter().all(LaurentPoly::is_zero));
            sparse.push(
                c.iter()
                    .enumerate()
                    .filter(|(_, f)| !f.is_zero())
                    .map(|(y, f)| (y, f.clone()))
                    .collect(),
            );
            dense.push(c);
        }
        sparse
    }

    /// a(z) = max over x, y of deg h_{x,y,z}.
    fn compute_a_values(&self) -> Vec<usize> {
        let size = self.elements.len();
        let top = self.lengths.last().copied().unwrap_or(0) as i32;
        // exponents of C_x · (T_u C_y) stay within [-3·top, top]
        let offset = 3 * top;
        let width = (4 * top + 1) as usize;
        let kl = self.kl_basis();
        let mut best: Vec<Option<i32>> = vec![None; size];
        let mut buf = vec![0i64; size * width];

        for y in 0..size {
            // T_u C_y for every u, by induction on the length of u
            let mut tc_dense: Vec<Vec<LaurentPoly>> = Vec::with_capacity(size);
            let mut c_y = vec![LaurentPoly::zero(); size];
            for (i, f) in &kl[y] {
                c_y[*i] = f.clone();
            }
            tc_dense.push(c_y);
            for u in 1..size {
                let k = self.first_left_descent(u).unwrap();
                let next = self.left_mul_t(k, &tc_dense[self.left_mul[k][u]]);
                tc_dense.push(next);
            }
            let tc: Vec<Sparse> = tc_dense
                .into_iter()
                .map(|h| {
                    h.into_iter()
                        .enumerate()
                        .filter(|(_, f)| !f.is_zero())
                        .collect()
                })
                .collect();

            for c_x in kl {
                buf.fill(0);
                for (u, f) in c_x {
                    for (z, g) in &tc[*u] {
                        add_product(&mut buf[z * width..(z + 1) * width], offset, f, g);
                    }
                }
                for z in (0..size).rev() {
                    let row = &buf[z * width..(z + 1) * width];
                    let h = LaurentPoly::from_dense(-offset, row.to_vec());
                    let Some(deg) = h.degree() else { continue };
                    best[z] = Some(best[z].map_or(deg, |b| b.max(deg)));
                    for (w, g) in &kl[z] {
                        let slot = &mut buf[w * width..(w + 1) * width];
                        sub_product(slot, offset, &h, g);
                    }
                }
            }
        }
        best.into_iter()
            .map(|d| d.expect("a-function is defined for every element").max(0) as usize)
            .collect()
    }
}

fn add_product(slot: &mut [i64], offset: i32, f: &LaurentPoly, g: &LaurentPoly) {
    let (fl, fc) = f.dense();
    let (gl, gc) = g.dense();
    let base = fl + gl + offset;
    debug_assert!(base >= 0 && (base as usize + fc.len() + gc.len()) <= slot.len() + 1);
    for (i, a) in fc.iter().enumerate() {
        if *a == 0 {
            continue;
        }
        for (j, b) in gc.iter().enumerate() {
            slot[base as usize + i + j] += a * b;
        }
    }
}

fn sub_product(slot: &mut [i64], offset: i32, f: &LaurentPoly, g: &LaurentPoly) {
    add_product(slot, offset, &f.scale(-1), g);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{a_value_of_permutation, rs_of_permutation};

    fn poly(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let s = Permutation::simple(2, 1);
        let ts = HeckeElement::t(&s);
        let sq = ts.multiply(&ts).unwrap();
        let expected = HeckeElement::from_terms(
            2,
            [
                (s.clone(), poly(&[(1, 1), (-1, -1)])),
                (Permutation::identity(2), LaurentPoly::one()),
            ],
        )
        .unwrap();
        assert_eq!(sq, expected);

        // (T_s + v⁻¹)(T_s − v) = 0
        let left = ts
            .add(&HeckeElement::one(2).scale(&poly(&[(-1, 1)])))
            .unwrap();
        let right = ts
            .sub(&HeckeElement::one(2).scale(&poly(&[(1, 1)])))
            .unwrap();
        assert!(left.multiply(&right).unwrap().is_zero());
    }

    #[test]
    fn identity_and_length_additivity() {
        let e = HeckeElement::one(3);
        let x = HeckeElement::from_terms(
            3,
            [
                (perm(&[2, 3, 1]), poly(&[(2, 3), (-1, 1)])),
                (perm(&[1, 3, 2]), poly(&[(0, -2)])),
            ],
        )
        .unwrap();
        assert_eq!(e.multiply(&x).unwrap(), x);
        assert_eq!(x.multiply(&e).unwrap(), x);
        let s1 = Permutation::simple(3, 1);
        let s2 = Permutation::simple(3, 2);
        let prod = HeckeElement::t(&s1)
            .multiply(&HeckeElement::t(&s2))
            .unwrap();
        assert_eq!(prod, HeckeElement::t(&s1.compose(&s2).unwrap()));
        assert!(e.multiply(&HeckeElement::one(2)).is_err());
    }

    #[test]
    fn bar_examples() {
        let e = HeckeElement::one(3);
        assert_eq!(e.bar_involution(), e);
        let s = Permutation::simple(2, 1);
        let expected = HeckeElement::from_terms(
            2,
            [
                (s.clone(), LaurentPoly::one()),
                (Permutation::identity(2), poly(&[(1, -1), (-1, 1)])),
            ],
        )
        .unwrap();
        assert_eq!(HeckeElement::t(&s).bar_involution(), expected);
        // bar(T_s) = T_s⁻¹
        let product = HeckeElement::t(&s).multiply(&expected).unwrap();
        assert_eq!(product, HeckeElement::one(2));
    }

    fn random_element(n: usize, rng: &mut impl rand::Rng) -> HeckeElement {
        let all = Permutation::all(n);
        let terms = (0..rng.gen_range(1..4)).map(|_| {
            let w = all[rng.gen_range(0..all.len())].clone();
            let f = LaurentPoly::from_dense(
                rng.gen_range(-2..3),
                vec![rng.gen_range(-2..3), rng.gen_range(-2..3)],
            );
            (w, f)
        });
        HeckeElement::from_terms(n, terms).unwrap()
    }

    #[test]
    fn bar_is_an_involutive_ring_map() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for n in 1..=4 {
            for _ in 0..6 {
                let x = random_element(n, &mut rng);
                let y = random_element(n, &mut rng);
                assert_eq!(x.bar_involution().bar_involution(), x);
                assert_eq!(
                    x.multiply(&y).unwrap().bar_involution(),
                    x.bar_involution().multiply(&y.bar_involution()).unwrap()
                );
            }
        }
    }

    #[test]
    fn multiplication_is_associative() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for n in 2..=4 {
            for _ in 0..8 {
                let a = random_element(n, &mut rng);
                let b = random_element(n, &mut rng);
                let c = random_element(n, &mut rng);
                let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
                let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn kl_basis_examples() {
        assert_eq!(
            kl_basis_element(&Permutation::identity(3)).unwrap(),
            HeckeElement::one(3)
        );

        let s = Permutation::simple(3, 2);
        let cs = kl_basis_element(&s).unwrap();
        let expected = HeckeElement::from_terms(
            3,
            [
                (s.clone(), LaurentPoly::one()),
                (Permutation::identity(3), poly(&[(-1, 1)])),
            ],
        )
        .unwrap();
        assert_eq!(cs, expected);
        assert_eq!(cs.bar_involution(), cs);

        let w0 = Permutation::longest(3);
        let c = kl_basis_element(&w0).unwrap();
        let expected = HeckeElement::from_terms(
            3,
            Permutation::all(3).into_iter().map(|y| {
                let e = y.length() as i32 - 3;
                (y, LaurentPoly::monomial(1, e))
            }),
        )
        .unwrap();
        assert_eq!(c, expected);
        assert_eq!(c.bar_involution(), c);
    }

    #[test]
    fn kl_basis_characterization() {
        for n in 1..=4 {
            for w in Permutation::all(n) {
                let c = kl_basis_element(&w).unwrap();
                assert_eq!(c.bar_involution(), c, "C_{w} is not bar-invariant");
                assert_eq!(c.coefficient(&w), LaurentPoly::one());
                for (y, f) in c.terms() {
                    if *y != w {
                        assert!(f.is_negative_part(), "coefficient of T_{y} in C_{w} is {f}");
                        assert!(y.bruhat_le(&w) && y.length() < w.length());
                    }
                }
            }
        }
    }

    #[test]
    fn structure_constant_examples() {
        let oracle = HeckeOracle::default();
        let s = Permutation::simple(2, 1);
        let h = oracle.structure_constants(&s, &s).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h[&s], poly(&[(1, 1), (-1, 1)]));

        let e = Permutation::identity(3);
        let h = oracle.structure_constants(&e, &e).unwrap();
        assert_eq!(h[&e], LaurentPoly::one());

        // structure constants are bar-invariant
        for x in Permutation::all(3) {
            for y in Permutation::all(3) {
                for f in oracle.structure_constants(&x, &y).unwrap().values() {
                    assert!(f.is_bar_invariant());
                }
            }
        }
    }

    #[test]
    fn a_function_examples() {
        assert_eq!(
            a_function_definitional(&Permutation::identity(1)).unwrap(),
            0
        );
        assert_eq!(
            a_function_definitional(&Permutation::identity(3)).unwrap(),
            0
        );
        assert_eq!(
            a_function_definitional(&Permutation::simple(2, 1)).unwrap(),
            1
        );
        assert_eq!(
            a_function_definitional(&Permutation::longest(3)).unwrap(),
            3
        );
        assert_eq!(a_function_definitional(&perm(&[2, 1, 3])).unwrap(), 1);
    }

    #[test]
    fn rank_bound_is_enforced() {
        let oracle = HeckeOracle::with_rank_bound(3);
        assert_eq!(
            oracle.a_function_definitional(&Permutation::identity(4)),
            Err(Error::RankBound { n: 4, bound: 3 })
        );
        assert!(kl_basis_element(&Permutation::identity(6)).is_err());
    }

    #[test]
    fn a_function_agrees_with_tableau_statistic() {
        for n in 1..=4 {
            for w in Permutation::all(n) {
                let a = a_function_definitional(&w).unwrap();
                assert_eq!(a, a_value_of_permutation(&w), "w = {w}");
                assert_eq!(a, a_function_definitional(&w.inverse()).unwrap());
            }
        }
    }

    #[test]
    fn a_function_is_constant_on_shapes() {
        let mut by_shape: HashMap<_, usize> = HashMap::new();
        for n in 1..=4 {
            for w in Permutation::all(n) {
                let shape = rs_of_permutation(&w).0.shape();
                let a = a_function_definitional(&w).unwrap();
                assert_eq!(*by_shape.entry(shape).or_insert(a), a);
            }
        }
    }

    /// Cells from the KL preorders generated by y ← w when C_y occurs in
    /// C_s C_w (left) or C_w C_s (right).
    #[test]
    fn cells_match_robinson_schensted() {
        let oracle = HeckeOracle::default();
        for n in 1..=4 {
            let all = Permutation::all(n);
            let idx: HashMap<_, _> = all.iter().cloned().zip(0..).collect();
            let size = all.len();
            let mut left = vec![vec![false; size]; size];
            let mut right = vec![vec![false; size]; size];
            for (i, w) in all.iter().enumerate() {
                left[i][i] = true;
                right[i][i] = true;
                let cw = oracle.kl_basis_element(w).unwrap();
                for k in 1..n {
                    let cs = oracle.kl_basis_element(&Permutation::simple(n, k)).unwrap();
                    for y in oracle
                        .kl_coordinates(&cs.multiply(&cw).unwrap())
                        .unwrap()
                        .keys()
                    {
                        left[idx[y]][i] = true;
                    }
                    for y in oracle
                        .kl_coordinates(&cw.multiply(&cs).unwrap())
                        .unwrap()
                        .keys()
                    {
                        right[idx[y]][i] = true;
                    }
                }
            }
            let mut both: Vec<Vec<bool>> = (0..size)
                .map(|i| (0..size).map(|j| left[i][j] || right[i][j]).collect())
                .collect();
            for rel in [&mut left, &mut right, &mut both] {
                for k in 0..size {
                    for i in 0..size {
                        for j in 0..size {
                            if rel[i][k] && rel[k][j] {
                                rel[i][j] = true;
                            }
                        }
                    }
                }
            }
            for (i, x) in all.iter().enumerate() {
                let (px, qx) = rs_of_permutation(x);
                for (j, y) in all.iter().enumerate() {
                    let (py, qy) = rs_of_permutation(y);
                    let same_left = left[i][j] && left[j][i];
                    let same_right = right[i][j] && right[j][i];
                    let same_two_sided = both[i][j] && both[j][i];
                    assert_eq!(same_right, px == py, "right cell of {x}, {y}");
                    assert_eq!(same_left, qx == qy, "left cell of {x}, {y}");
                    assert_eq!(same_two_sided, px.shape() == py.shape());
                }
            }
        }
    }
}
