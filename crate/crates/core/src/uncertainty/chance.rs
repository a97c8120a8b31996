//! Crisp reduction of the credibility-of-trust chance constraint
//! `Cr{ Tr{ X <= f } >= alpha } >= beta` for aggregated rough-fuzzy sums.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::fuzzy::TriangularFuzzy;

/// Trust levels `alpha1, alpha2` and credibility levels `beta1, beta2`,
/// one pair per objective.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfidenceLevels<T> {
    pub alpha1: T,
    pub alpha2: T,
    pub beta1: T,
    pub beta2: T,
}

impl<T: Scalar> ConfidenceLevels<T> {
    pub fn new(alpha1: T, alpha2: T, beta1: T, beta2: T) -> Result<Self> {
        let check = |name, v: T| {
            if v >= T::zero() && v <= T::one() {
                Ok(())
            } else {
                Err(Error::InvalidLevel {
                    name,
                    value: v.to_f64_lossy(),
                })
            }
        };
        check("alpha1", alpha1)?;
        check("alpha2", alpha2)?;
        check("beta1", beta1)?;
        check("beta2", beta2)?;
        Ok(Self {
            alpha1,
            alpha2,
            beta1,
            beta2,
        })
    }

    /// Same `alpha` and `beta` for both objectives.
    pub fn uniform(alpha: T, beta: T) -> Result<Self> {
        Self::new(alpha, alpha, beta, beta)
    }
}

/// Summed rough-fuzzy weight of a tree reduced to what the chance constraint
/// needs: the fuzzy lower end `p` of the upper approximation and the crisp
/// width `q1 = q - p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AggregatedChance<T> {
    pub p: TriangularFuzzy<T>,
    pub q1: T,
}

impl<T: Scalar> AggregatedChance<T> {
    pub fn zero() -> Self {
        Self {
            p: TriangularFuzzy::zero(),
            q1: T::zero(),
        }
    }
}

/// Which closed form of the reduction to apply.
///
/// `Lower` is valid for `beta <= 0.5` and `Upper` for `beta >= 0.5`; both agree
/// at `beta = 0.5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChanceBranch {
    Lower,
    Upper,
}

impl ChanceBranch {
    pub fn for_beta<T: Scalar>(beta: T) -> Self {
        if beta <= T::half() {
            ChanceBranch::Lower
        } else {
            ChanceBranch::Upper
        }
    }
}

/// Minimal crisp objective bound `f` satisfying the chance constraint in the
/// `p <= f <= m` trust case.
pub fn chance_reduce<T: Scalar>(agg: &AggregatedChance<T>, alpha: T, beta: T) -> T {
    chance_reduce_branch(agg, alpha, beta, ChanceBranch::for_beta(beta))
}

/// [`chance_reduce`] with an explicitly chosen closed form.
///
/// - lower: `u + 2 alpha q1 + 2 beta (v - u)`
/// - upper: `2v - w + 2 alpha q1 + 2 beta (w - v)`
pub fn chance_reduce_branch<T: Scalar>(
    agg: &AggregatedChance<T>,
    alpha: T,
    beta: T,
    branch: ChanceBranch,
) -> T {
    let TriangularFuzzy { u, v, w } = agg.p;
    let two = T::two();
    let trust_term = two * alpha * agg.q1;
    match branch {
        ChanceBranch::Lower => u + trust_term + two * beta * (v - u),
        ChanceBranch::Upper => two * v - w + trust_term + two * beta * (w - v),
    }
}

/// Independent numerical route to the same bound: bisection over `f` of the
/// monotone map `f -> Cr{p <= f - 2 alpha q1}` for the smallest `f` reaching
/// `beta`, searched over the shifted support of `p`.
pub fn chance_reduce_bisect_oracle<T: Scalar>(agg: &AggregatedChance<T>, alpha: T, beta: T) -> T {
    let shift = T::two() * alpha * agg.q1;
    let cr = |f: T| agg.p.cr_leq(f - shift);
    let mut lo = agg.p.u + shift;
    let mut hi = agg.p.w + shift;
    if cr(lo) >= beta {
        return lo;
    }
    let tol = T::lit(1e-12) * (T::one() + hi.abs().max(lo.abs()));
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = lo + (hi - lo) * T::half();
        if cr(mid) >= beta {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn agg(u: f64, v: f64, w: f64, q1: f64) -> AggregatedChance<f64> {
        AggregatedChance {
            p: TriangularFuzzy::new(u, v, w).unwrap(),
            q1,
        }
    }

    #[test]
    fn reduce_examples() {
        let r1 = chance_reduce(&agg(8.4, 9.0, 9.6, 1.7), 0.9, 0.4);
        assert!((r1 - 11.94).abs() < 1e-9, "{r1}");
        let r2 = chance_reduce(&agg(10.0, 11.1, 12.2, 2.6), 0.9, 0.8);
        assert!((r2 - 16.44).abs() < 1e-9, "{r2}");
        assert_eq!(chance_reduce(&agg(1.0, 2.0, 3.0, 1.0), 0.0, 0.5), 2.0);
    }

    #[test]
    fn oracle_examples() {
        let r1 = chance_reduce_bisect_oracle(&agg(8.4, 9.0, 9.6, 1.7), 0.9, 0.4);
        assert!((r1 - 11.94).abs() < 1e-9, "{r1}");
        for (a, b) in [(0.0, 0.0), (0.3, 0.7), (1.0, 1.0)] {
            assert_eq!(
                chance_reduce_bisect_oracle(&agg(5.0, 5.0, 5.0, 0.0), a, b),
                5.0
            );
        }
        let r3 = chance_reduce_bisect_oracle(&agg(0.0, 1.0, 2.0, 0.0), 0.77, 0.25);
        assert!((r3 - 0.5).abs() < 1e-9);
    }

    #[test]
    fn levels_validated() {
        assert!(ConfidenceLevels::uniform(0.9, 0.4).is_ok());
        assert!(matches!(
            ConfidenceLevels::new(0.9, 1.1, 0.4, 0.4),
            Err(Error::InvalidLevel { name: "alpha2", .. })
        ));
        assert!(ConfidenceLevels::uniform(f64::NAN, 0.4).is_err());
    }

    fn arb_agg() -> impl Strategy<Value = AggregatedChance<f64>> {
        (-100.0..100.0f64, 0.0..30.0f64, 0.0..30.0f64, 0.0..40.0f64).prop_map(|(u, a, b, q1)| {
            AggregatedChance {
                p: TriangularFuzzy {
                    u,
                    v: u + a,
                    w: u + a + b,
                },
                q1,
            }
        })
    }

    proptest! {
        #[test]
        fn oracle_agrees(g in arb_agg(), alpha in 0.0..=1.0f64, beta in 0.0..=1.0f64) {
            let closed = chance_reduce(&g, alpha, beta);
            let oracle = chance_reduce_bisect_oracle(&g, alpha, beta);
            prop_assert!((closed - oracle).abs() <= 1e-9, "{} vs {}", closed, oracle);
        }

        #[test]
        fn monotone_in_levels(g in arb_agg(), a in 0.0..=1.0f64, b in 0.0..=1.0f64, da in 0.0..0.5f64, db in 0.0..0.5f64) {
            let base = chance_reduce(&g, a, b);
            prop_assert!(chance_reduce(&g, (a + da).min(1.0), b) >= base - 1e-12);
            prop_assert!(chance_reduce(&g, a, (b + db).min(1.0)) >= base - 1e-12);
        }

        #[test]
        fn branches_meet_at_half(g in arb_agg(), a in 0.0..=1.0f64) {
            let lo = chance_reduce_branch(&g, a, 0.5, ChanceBranch::Lower);
            let hi = chance_reduce_branch(&g, a, 0.5, ChanceBranch::Upper);
            prop_assert!((lo - hi).abs() <= 1e-12 * (1.0 + lo.abs()));
        }
    }
}
