//! The line λ̃ + zζ of weights through a weight λ̃ with λ̃₁ = λ̃ₙ, where
//! ζ = (1,…,1,0,…,0) has p ones.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hermitian::{check_integral, disagreement, gk_pq};
use crate::rational::{int, is_integer, to_i64, to_string, Rational};
use crate::weight::{PqContext, Weight};

/// I = {z ∈ ℝ : z ≤ max(p′,q′)} ∪ {z ∈ ℤ : z ≤ p′+q′−1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitaryInterval {
    /// Length of the run of consecutive integers λ̃₁, λ̃₁−1, … at the head.
    pub p_prime: usize,
    /// Length of the run of consecutive integers ending at λ̃ₙ.
    pub q_prime: usize,
}

impl UnitaryInterval {
    pub fn threshold_real(&self) -> Rational {
        int(self.p_prime.max(self.q_prime) as i64)
    }

    pub fn threshold_int(&self) -> i64 {
        (self.p_prime + self.q_prime) as i64 - 1
    }

    pub fn contains(&self, z: &Rational) -> bool {
        *z <= self.threshold_real() || (is_integer(z) && *z <= int(self.threshold_int()))
    }
}

fn run_length(entries: &[Rational]) -> usize {
    1 + entries
        .windows(2)
        .take_while(|w| &w[0] - &w[1] == int(1))
        .count()
}

/// Requires (p,q)-dominance and λ̃₁ = λ̃ₙ.
pub fn unitary_interval(tilde: &Weight, ctx: PqContext) -> Result<UnitaryInterval> {
    tilde.check_pq_dominant(ctx)?;
    let entries = tilde.entries();
    let (first, last) = (&entries[0], &entries[entries.len() - 1]);
    if first != last {
        return Err(Error::NotOrthogonalToMaximalRoot {
            first: to_string(first),
            last: to_string(last),
        });
    }
    let white: Vec<Rational> = tilde.white(ctx).iter().rev().cloned().collect();
    let reversed_run = 1 + white
        .windows(2)
        .take_while(|w| &w[1] - &w[0] == int(1))
        .count();
    Ok(UnitaryInterval {
        p_prime: run_length(tilde.black(ctx)),
        q_prime: reversed_run,
    })
}

/// GKdim L(λ̃ + zζ) for unitary z: pq for z < max(p,q) or z ∉ ℤ, and
/// (z+1)(n−z−1) for integral max(p,q) ≤ z ≤ p′+q′−1.
///
/// The value is checked against [`gk_pq`] on λ̃ + zζ.
pub fn unitary_gkdim(tilde: &Weight, ctx: PqContext, z: &Rational) -> Result<usize> {
    let interval = unitary_interval(tilde, ctx)?;
    if !interval.contains(z) {
        return Err(Error::NotUnitary {
            z: to_string(z),
            threshold_real: to_string(&interval.threshold_real()),
            threshold_int: interval.threshold_int(),
        });
    }
    let (p, q, n) = (ctx.p(), ctx.q(), ctx.n() as i64);
    let closed_form = match to_i64(z) {
        Some(z) if z >= p.max(q) as i64 => ((z + 1) * (n - z - 1)) as usize,
        _ => p * q,
    };
    let direct = gk_pq(&tilde.add_z_zeta(ctx, z)?, ctx)?.gk_dimension;
    if direct != closed_form {
        return Err(disagreement("unitary GK dimension", closed_form, direct));
    }
    Ok(closed_form)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SeriesPoint {
    pub z: i64,
    pub gk_dimension: usize,
}

/// λ̃_{p+1} − λ̃_p in λ+ρ coordinates; GKdim L(λ̃ + zζ) = 0 for every larger
/// integer z.
pub fn series_zero_threshold(tilde: &Weight, ctx: PqContext) -> Result<i64> {
    tilde.check_pq_dominant(ctx)?;
    check_integral(tilde)?;
    let e = tilde.entries();
    let diff = &e[ctx.p()] - &e[ctx.p() - 1];
    to_i64(&diff).ok_or_else(|| Error::Parse(format!("entry difference {diff} is out of range")))
}

/// GKdim L(λ̃ + zζ) for each integer z in `from..=to`.
pub fn gkdim_series(
    tilde: &Weight,
    ctx: PqContext,
    from: i64,
    to: i64,
) -> Result<Vec<SeriesPoint>> {
    if from > to {
        return Err(Error::InvalidRange { from, to });
    }
    tilde.check_pq_dominant(ctx)?;
    check_integral(tilde)?;
    (from..=to)
        .map(|z| {
            let shifted = tilde.add_z_zeta(ctx, &int(z))?;
            Ok(SeriesPoint {
                z,
                gk_dimension: gk_pq(&shifted, ctx)?.gk_dimension,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use rand::{Rng, SeedableRng};

    fn ctx(p: usize, q: usize) -> PqContext {
        PqContext::new(p, q).unwrap()
    }

    /// μ̃+ρ = (p, p−1, …, 1, p+q−1, …, p).
    fn mu(p: usize, q: usize) -> Weight {
        let black = (1..=p as i64).rev();
        let white = (p as i64..=(p + q) as i64 - 1).rev();
        Weight::from_integers(&black.chain(white).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn interval_examples() {
        let i = unitary_interval(&mu(3, 4), ctx(3, 4)).unwrap();
        assert_eq!(
            (i.p_prime, i.q_prime, i.threshold_real(), i.threshold_int()),
            (3, 4, int(4), 6)
        );
        let i = unitary_interval(&Weight::parse("5/2,5/2").unwrap(), ctx(1, 1)).unwrap();
        assert_eq!((i.p_prime, i.q_prime, i.threshold_int()), (1, 1, 1));
        // the tail (4,3) is a run of two consecutive integers
        let i = unitary_interval(&Weight::parse("3,1,4,3").unwrap(), ctx(2, 2)).unwrap();
        assert_eq!((i.p_prime, i.q_prime), (1, 2));
        assert!(i.contains(&frac(3, 2)) && i.contains(&int(2)) && !i.contains(&frac(5, 2)));
        assert!(!i.contains(&int(3)));
    }

    #[test]
    fn interval_preconditions() {
        assert!(matches!(
            unitary_interval(&Weight::parse("3,1,4,2").unwrap(), ctx(2, 2)),
            Err(Error::NotOrthogonalToMaximalRoot { .. })
        ));
        assert!(matches!(
            unitary_interval(&Weight::parse("1,3,4,1").unwrap(), ctx(2, 2)),
            Err(Error::NotPqDominant { i: 1, j: 2 })
        ));
    }

    #[test]
    fn unitary_examples() {
        let m = mu(2, 3);
        assert_eq!(unitary_gkdim(&m, ctx(2, 3), &int(3)).unwrap(), 4);
        assert_eq!(unitary_gkdim(&m, ctx(2, 3), &int(0)).unwrap(), 6);
        assert_eq!(unitary_gkdim(&m, ctx(2, 3), &frac(1, 2)).unwrap(), 6);
        assert_eq!(unitary_gkdim(&m, ctx(2, 3), &int(-7)).unwrap(), 6);
        assert!(matches!(
            unitary_gkdim(&m, ctx(2, 3), &int(5)),
            Err(Error::NotUnitary {
                threshold_int: 4,
                ..
            })
        ));
        assert!(matches!(
            unitary_gkdim(&m, ctx(2, 3), &frac(7, 2)),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn series_examples() {
        let values: Vec<usize> = gkdim_series(&mu(2, 3), ctx(2, 3), 0, 5)
            .unwrap()
            .iter()
            .map(|s| s.gk_dimension)
            .collect();
        assert_eq!(values, vec![6, 6, 6, 4, 0, 0]);
        assert_eq!(series_zero_threshold(&mu(2, 3), ctx(2, 3)).unwrap(), 3);
        assert_eq!(gkdim_series(&mu(2, 3), ctx(2, 3), 2, 2).unwrap().len(), 1);
        assert!(matches!(
            gkdim_series(&mu(2, 3), ctx(2, 3), 3, 2),
            Err(Error::InvalidRange { .. })
        ));
    }

    #[test]
    fn closed_form_on_mu() {
        for n in 2..=12usize {
            for p in 1..n {
                let q = n - p;
                let weight = mu(p, q);
                for z in -2..=(n as i64 + 2) {
                    let expected = if z < p.max(q) as i64 {
                        p * q
                    } else if z < n as i64 {
                        ((z + 1) * (n as i64 - 1 - z)) as usize
                    } else {
                        0
                    };
                    let shifted = weight.add_z_zeta(ctx(p, q), &int(z)).unwrap();
                    assert_eq!(
                        gk_pq(&shifted, ctx(p, q)).unwrap().gk_dimension,
                        expected,
                        "p={p} q={q} z={z}"
                    );
                    if z < n as i64 {
                        assert_eq!(
                            unitary_gkdim(&weight, ctx(p, q), &int(z)).unwrap(),
                            expected
                        );
                    }
                }
            }
        }
    }

    /// A random λ̃ with λ̃₁ = λ̃ₙ and prescribed head and tail runs.
    fn random_tilde(rng: &mut impl Rng, p: usize, q: usize) -> Weight {
        let mut black = vec![0i64];
        for _ in 1..p {
            let gap = if rng.gen_bool(0.6) {
                1
            } else {
                rng.gen_range(2..4)
            };
            black.push(black.last().unwrap() - gap);
        }
        let mut white_rev = vec![0i64];
        for _ in 1..q {
            let gap = if rng.gen_bool(0.6) {
                1
            } else {
                rng.gen_range(2..4)
            };
            white_rev.push(white_rev.last().unwrap() + gap);
        }
        let entries: Vec<i64> = black
            .into_iter()
            .chain(white_rev.into_iter().rev())
            .collect();
        Weight::from_integers(&entries).unwrap()
    }

    #[test]
    fn series_is_monotone_and_vanishes_past_threshold() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(29);
        for _ in 0..200 {
            let n = rng.gen_range(2..=12);
            let p = rng.gen_range(1..n);
            let tilde = random_tilde(&mut rng, p, n - p);
            let series = gkdim_series(&tilde, ctx(p, n - p), -3, n as i64 + 3).unwrap();
            assert!(series
                .windows(2)
                .all(|s| s[0].gk_dimension >= s[1].gk_dimension));
            let threshold = series_zero_threshold(&tilde, ctx(p, n - p)).unwrap();
            for point in &series {
                // zero exactly past the threshold
                assert_eq!(
                    point.gk_dimension == 0,
                    point.z > threshold,
                    "{tilde} z={}",
                    point.z
                );
            }
        }
    }

    #[test]
    fn unitary_value_depends_only_on_parameters() {
        use std::collections::HashMap;
        let mut rng = rand::rngs::StdRng::seed_from_u64(31);
        let mut seen: HashMap<(usize, usize, usize, usize, i64), usize> = HashMap::new();
        for _ in 0..400 {
            let n = rng.gen_range(2..=10);
            let p = rng.gen_range(1..n);
            let c = ctx(p, n - p);
            let tilde = random_tilde(&mut rng, p, n - p);
            let interval = unitary_interval(&tilde, c).unwrap();
            for z in -2..=interval.threshold_int() {
                let value = unitary_gkdim(&tilde, c, &int(z)).unwrap();
                let key = (p, n - p, interval.p_prime, interval.q_prime, z);
                assert_eq!(*seen.entry(key).or_insert(value), value, "{tilde} z={z}");
            }
        }
    }
}
