//! Weights of sl(n) in λ+ρ coordinates.
//!
//! A [`Weight`] is the coordinate vector `(λ₁, …, λₙ)` of λ+ρ. Because the
//! coordinates sum to zero only up to the relation Σεᵢ = 0, two vectors that
//! differ by a constant added to every entry describe the same weight, and
//! `==`/`Hash` respect that.

use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{self, differ_by_integer, is_integer, Rational};

#[derive(Debug, Clone)]
pub struct Weight {
    entries: Vec<Rational>,
}

impl Weight {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Parse("a weight needs at least one entry".into()));
        }
        Ok(Weight { entries })
    }

    pub fn from_integers(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| rational::int(x)).collect())
    }

    /// Parses the comma-separated λ+ρ text format, e.g. `"3, 3.5, 7/2, -1"`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        let entries = text
            .split(',')
            .map(rational::parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of positive roots, n(n−1)/2.
    pub fn nu0(&self) -> usize {
        let n = self.len();
        n * (n - 1) / 2
    }

    /// Representative of the shift class with last entry 0.
    pub fn canonicalize(&self) -> Weight {
        let last = self.entries[self.len() - 1].clone();
        Weight {
            entries: self.entries.iter().map(|x| x - &last).collect(),
        }
    }

    /// True iff all pairwise differences of entries are integers.
    pub fn is_integral(&self) -> bool {
        self.first_non_integral_pair().is_none()
    }

    /// First pair `(i, j)` (0-indexed, i < j) with non-integral difference.
    pub(crate) fn first_non_integral_pair(&self) -> Option<(usize, usize)> {
        let first = &self.entries[0];
        self.entries
            .iter()
            .position(|x| !differ_by_integer(x, first))
            .map(|j| (0, j))
    }

    /// λᵢ ≤ λⱼ whenever i < j and λᵢ − λⱼ is an integer.
    pub fn is_antidominant(&self) -> bool {
        let e = &self.entries;
        (0..e.len()).all(|i| {
            (i + 1..e.len()).all(|j| {
                let d = &e[i] - &e[j];
                !is_integer(&d) || d <= Rational::zero()
            })
        })
    }

    pub fn is_pq_dominant(&self, ctx: PqContext) -> bool {
        self.check_pq_dominant(ctx).is_ok()
    }

    /// Like [`Weight::is_pq_dominant`], but names the first violated pair.
    /// Positive integral steps between neighbours suffice, so only adjacent
    /// pairs within a half are reported.
    pub fn check_pq_dominant(&self, ctx: PqContext) -> Result<()> {
        ctx.check(self)?;
        let halves = [(0, ctx.p), (ctx.p, ctx.p + ctx.q)];
        for (start, end) in halves {
            for i in start..end - 1 {
                let (x, y) = (&self.entries[i], &self.entries[i + 1]);
                if !differ_by_integer(x, y) || x <= y {
                    return Err(Error::NotPqDominant { i: i + 1, j: i + 2 });
                }
            }
        }
        Ok(())
    }

    /// λ + zζ, where ζ = (1,…,1,0,…,0) has p ones.
    pub fn add_z_zeta(&self, ctx: PqContext, z: &Rational) -> Result<Weight> {
        ctx.check(self)?;
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, x)| if i < ctx.p { x + z } else { x.clone() })
            .collect();
        Ok(Weight { entries })
    }

    pub fn black(&self, ctx: PqContext) -> &[Rational] {
        &self.entries[..ctx.p]
    }

    pub fn white(&self, ctx: PqContext) -> &[Rational] {
        &self.entries[ctx.p..]
    }
}

impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.canonicalize().entries == other.canonicalize().entries
    }
}

impl Eq for Weight {}

impl Hash for Weight {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonicalize().entries.hash(state);
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Weight::parse(s)
    }
}

/// The signature (p, q) of su(p,q); paired with a weight of length p + q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PqContext {
    p: usize,
    q: usize,
}

impl PqContext {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::NonPositiveSignature { p, q });
        }
        Ok(PqContext { p, q })
    }

    /// Parses `"p,q"`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        let [p, q] = parts[..] else {
            return Err(Error::Parse(format!("expected \"p,q\", got {text:?}")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid signature component {s:?}")))
        };
        Self::new(parse(p)?, parse(q)?)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn rank(&self) -> usize {
        self.p.min(self.q)
    }

    pub fn check(&self, w: &Weight) -> Result<()> {
        if w.len() != self.n() {
            return Err(Error::InvalidContext {
                expected: self.n(),
                actual: w.len(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn w(s: &str) -> Weight {
        Weight::parse(s).unwrap()
    }

    fn ctx(p: usize, q: usize) -> PqContext {
        PqContext::new(p, q).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(w("2,1,0").canonicalize().entries(), w("2,1,0").entries());
        assert_eq!(w("3,2,1").canonicalize().entries(), w("2,1,0").entries());
        let mixed = w("3,3.5,2,1.5,-1,5.5,-1,0,1.1").canonicalize();
        let expected = w("19/10,12/5,9/10,2/5,-21/10,22/5,-21/10,-11/10,0");
        assert_eq!(mixed.entries(), expected.entries());
    }

    #[test]
    fn equality_is_up_to_shift() {
        assert_eq!(w("3,2,1"), w("2,1,0"));
        assert_eq!(w("1/2,3/2"), w("7,8"));
        assert_ne!(w("1,2"), w("2,1"));
        assert_ne!(w("1,2"), w("1,2,3"));
    }

    #[test]
    fn integrality_examples() {
        assert!(w("5,4,3,2,1,9,8,7,6,2").is_integral());
        assert!(!w("3,3.5,2,1.5,-1,5.5,-1,0,1.1").is_integral());
        assert!(w("7/3,7/3").is_integral());
        assert!(w("1/2,3/2,-5/2").is_integral());
    }

    #[test]
    fn antidominance_examples() {
        assert!(w("1,2,3").is_antidominant());
        assert!(!w("2,1").is_antidominant());
        assert!(w("2,1/2,3").is_antidominant());
        assert!(w("1,1").is_antidominant());
    }

    #[test]
    fn pq_dominance_examples() {
        assert!(w("6,5,3,2,9,8,7,4,2,1").is_pq_dominant(ctx(4, 6)));
        assert!(w("2,1,1,0").is_pq_dominant(ctx(2, 2)));
        assert!(!w("1,1,2,1").is_pq_dominant(ctx(2, 2)));
        assert_eq!(
            w("1,1,2,1").check_pq_dominant(ctx(2, 2)),
            Err(Error::NotPqDominant { i: 1, j: 2 })
        );
        // strictly decreasing but with a non-integral gap
        assert_eq!(
            w("2,1/2,1,0").check_pq_dominant(ctx(2, 2)),
            Err(Error::NotPqDominant { i: 1, j: 2 })
        );
        assert!(matches!(
            w("1,2,3").check_pq_dominant(ctx(2, 2)),
            Err(Error::InvalidContext {
                expected: 4,
                actual: 3
            })
        ));
    }

    #[test]
    fn adjacent_check_matches_all_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(1);
        for _ in 0..2000 {
            let n = rng.gen_range(2..7);
            let p = rng.gen_range(1..n);
            let entries: Vec<Rational> = (0..n)
                .map(|_| crate::rational::frac(rng.gen_range(-6..6), rng.gen_range(1..3)))
                .collect();
            let weight = Weight::new(entries.clone()).unwrap();
            let pairwise = [(0, p), (p, n)].iter().all(|&(s, e)| {
                (s..e).all(|i| {
                    (i + 1..e).all(|j| {
                        let d = &entries[i] - &entries[j];
                        is_integer(&d) && d > Rational::zero()
                    })
                })
            });
            assert_eq!(weight.is_pq_dominant(ctx(p, n - p)), pairwise, "{weight}");
        }
    }

    #[test]
    fn add_z_zeta_examples() {
        let base = w("2,1,4,3,2");
        let c = ctx(2, 3);
        assert_eq!(
            base.add_z_zeta(c, &int(3)).unwrap().entries(),
            w("5,4,4,3,2").entries()
        );
        assert_eq!(
            base.add_z_zeta(c, &int(0)).unwrap().entries(),
            base.entries()
        );
        assert_eq!(
            base.add_z_zeta(c, &frac(1, 2)).unwrap().entries(),
            w("5/2,3/2,4,3,2").entries()
        );
        assert!(base.add_z_zeta(ctx(2, 2), &int(1)).is_err());
    }

    #[test]
    fn context_validation() {
        assert!(PqContext::new(0, 3).is_err());
        assert_eq!(PqContext::parse(" 4 , 6 ").unwrap(), ctx(4, 6));
        assert!(PqContext::parse("4").is_err());
        assert!(PqContext::parse("4,x").is_err());
    }

    #[test]
    fn parse_rejects_empty() {
        assert!(Weight::parse("").is_err());
        assert!(Weight::parse("  ").is_err());
        assert!(Weight::parse("1,,2").is_err());
        assert_eq!(
            Weight::parse(" 1 , 2.5 ").unwrap().entries(),
            &[int(1), frac(5, 2)]
        );
    }

    fn rational_strategy() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..5).prop_map(|(n, d)| frac(n, d))
    }

    proptest! {
        #[test]
        fn canonicalize_is_idempotent_and_equal(
            entries in prop::collection::vec(rational_strategy(), 1..8)
        ) {
            let w = Weight::new(entries).unwrap();
            let c = w.canonicalize();
            prop_assert_eq!(c.entries().last().unwrap(), &int(0));
            let cc = c.canonicalize();
            prop_assert_eq!(cc.entries(), c.entries());
            prop_assert_eq!(&c, &w);
        }

        #[test]
        fn predicates_are_shift_invariant(
            entries in prop::collection::vec(rational_strategy(), 1..8),
            shift in rational_strategy(),
        ) {
            let w = Weight::new(entries.clone()).unwrap();
            let shifted = Weight::new(entries.iter().map(|x| x + &shift).collect()).unwrap();
            prop_assert_eq!(w.is_integral(), shifted.is_integral());
            prop_assert_eq!(w.is_antidominant(), shifted.is_antidominant());
        }

        #[test]
        fn integer_z_preserves_pq_dominance(
            p in 1usize..5, q in 1usize..5,
            gaps in prop::collection::vec(1i64..4, 8),
            start_black in -5i64..5, start_white in -5i64..5,
            offset in prop::sample::select(vec![frac(0, 1), frac(1, 2), frac(1, 3)]),
            z in -6i64..6,
        ) {
            let mut entries = Vec::new();
            let mut x = int(start_black) + &offset;
            for g in &gaps[..p] { entries.push(x.clone()); x -= int(*g); }
            let mut y = int(start_white);
            for g in &gaps[4..4 + q] { entries.push(y.clone()); y -= int(*g); }
            let w = Weight::new(entries).unwrap();
            let c = PqContext::new(p, q).unwrap();
            prop_assert!(w.is_pq_dominant(c));
            prop_assert!(w.add_z_zeta(c, &int(z)).unwrap().is_pq_dominant(c));
            // within each half, differences are nonzero integers
            for half in [w.black(c), w.white(c)] {
                for (i, a) in half.iter().enumerate() {
                    for b in &half[i + 1..] {
                        let d = a - b;
                        prop_assert!(is_integer(&d) && !d.is_zero());
                    }
                }
            }
        }
    }
}
