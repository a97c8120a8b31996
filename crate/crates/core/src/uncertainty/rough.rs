//! Interval rough variables `[lo1, lo2][up1, up2]` and rough-fuzzy weights.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::fuzzy::TriangularFuzzy;

/// Rough variable with lower approximation `[lo1, lo2]` nested inside the
/// upper approximation `[up1, up2]`.
///
/// Trust is the mean of the normalized Lebesgue measures over both
/// approximations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoughInterval<T> {
    pub lo1: T,
    pub lo2: T,
    pub up1: T,
    pub up2: T,
}

impl<T: Scalar> RoughInterval<T> {
    pub fn new(lo1: T, lo2: T, up1: T, up2: T) -> Result<Self> {
        let finite = [lo1, lo2, up1, up2].iter().all(|x| x.is_finite());
        if !finite || !(up1 <= lo1 && lo1 <= lo2 && lo2 <= up2) {
            return Err(Error::RoughOrder {
                lo1: lo1.to_f64_lossy(),
                lo2: lo2.to_f64_lossy(),
                up1: up1.to_f64_lossy(),
                up2: up2.to_f64_lossy(),
            });
        }
        Ok(Self { lo1, lo2, up1, up2 })
    }

    /// `(Tr{rho <= x}, Tr{rho >= x})`.
    pub fn trust(&self, x: T) -> (T, T) {
        (self.tr_leq(x), self.tr_geq(x))
    }

    pub fn tr_leq(&self, x: T) -> T {
        T::half() * (uniform_cdf(self.lo1, self.lo2, x) + uniform_cdf(self.up1, self.up2, x))
    }

    pub fn tr_geq(&self, x: T) -> T {
        T::half() * (uniform_sf(self.lo1, self.lo2, x) + uniform_sf(self.up1, self.up2, x))
    }

    /// The `f` with `Tr{rho <= f} = alpha`.
    ///
    /// Three linear branches, split where the result crosses `lo1` and `lo2`:
    /// `up1 + 2a(up2-up1)` below `lo1`, the blended middle branch between
    /// `lo1` and `lo2`, and `2up1 - up2 + 2a(up2-up1)` above `lo2`. A collapsed
    /// lower approximation makes the distribution jump at `lo1`; levels inside
    /// the jump map to `lo1`.
    pub fn tr_quantile_leq(&self, alpha: T) -> T {
        let (m, n, p, q) = (self.lo1, self.lo2, self.up1, self.up2);
        let two = T::two();
        if q <= p {
            return p;
        }
        let width = q - p;
        let at_m = T::half() * (m - p) / width;
        if alpha <= at_m {
            return p + two * alpha * width;
        }
        let at_n = if n > m {
            T::half() * ((n - p) / width + T::one())
        } else {
            at_m + T::half()
        };
        if alpha <= at_n {
            if n <= m {
                return m;
            }
            let q2 = (n - m) * width;
            return (m * q + p * n + two * alpha * q2 - two * p * m) / (n + q - (p + m));
        }
        two * p - q + two * alpha * width
    }
}

/// `P{X <= x}` for X uniform on `[a, b]`; a point mass when `a == b`.
fn uniform_cdf<T: Scalar>(a: T, b: T, x: T) -> T {
    if x >= b {
        T::one()
    } else if x <= a {
        T::zero()
    } else {
        (x - a) / (b - a)
    }
}

/// `P{X >= x}` for X uniform on `[a, b]`; a point mass when `a == b`.
fn uniform_sf<T: Scalar>(a: T, b: T, x: T) -> T {
    if x <= a {
        T::one()
    } else if x >= b {
        T::zero()
    } else {
        (b - x) / (b - a)
    }
}

/// Rough-fuzzy weight `[xi + a1, xi + a2][xi + a3, xi + a4]` where `xi` is a
/// triangular fuzzy variable shared by all four endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoughFuzzyWeight<T> {
    pub base: TriangularFuzzy<T>,
    pub a1: T,
    pub a2: T,
    pub a3: T,
    pub a4: T,
}

impl<T: Scalar> RoughFuzzyWeight<T> {
    pub fn new(base: TriangularFuzzy<T>, a1: T, a2: T, a3: T, a4: T) -> Result<Self> {
        if !base.is_valid() {
            return Err(Error::FuzzyOrder {
                u: base.u.to_f64_lossy(),
                v: base.v.to_f64_lossy(),
                w: base.w.to_f64_lossy(),
            });
        }
        let finite = [a1, a2, a3, a4].iter().all(|x| x.is_finite());
        if !finite || !(a3 <= a1 && a1 <= a2 && a2 <= a4) {
            return Err(Error::OffsetOrder {
                a1: a1.to_f64_lossy(),
                a2: a2.to_f64_lossy(),
                a3: a3.to_f64_lossy(),
                a4: a4.to_f64_lossy(),
            });
        }
        Ok(Self {
            base,
            a1,
            a2,
            a3,
            a4,
        })
    }

    /// The rough interval obtained when the fuzzy base takes the value `xi`.
    pub fn realize(&self, xi: T) -> RoughInterval<T> {
        RoughInterval {
            lo1: xi + self.a1,
            lo2: xi + self.a2,
            up1: xi + self.a3,
            up2: xi + self.a4,
        }
    }

    /// Fuzzy lower endpoint of the upper approximation, `xi + a3`.
    pub fn upper_lower_end(&self) -> TriangularFuzzy<T> {
        self.base.shift(self.a3)
    }

    /// Width of the upper approximation, `a4 - a3`. Crisp because all four
    /// endpoints share the same fuzzy base.
    pub fn upper_width(&self) -> T {
        self.a4 - self.a3
    }

    /// Multiplies base and offsets by `k > 0`.
    pub fn scale(&self, k: T) -> Self {
        Self {
            base: self.base.scale(k),
            a1: self.a1 * k,
            a2: self.a2 * k,
            a3: self.a3 * k,
            a4: self.a4 * k,
        }
    }

    pub fn cast<U: Scalar>(&self) -> RoughFuzzyWeight<U> {
        let c = |x: T| U::lit(x.to_f64_lossy());
        RoughFuzzyWeight {
            base: self.base.cast(),
            a1: c(self.a1),
            a2: c(self.a2),
            a3: c(self.a3),
            a4: c(self.a4),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rho() -> RoughInterval<f64> {
        RoughInterval::new(1.0, 2.0, 0.0, 4.0).unwrap()
    }

    #[test]
    fn trust_examples() {
        assert_eq!(rho().trust(4.0), (1.0, 0.0));
        assert_eq!(rho().trust(1.0), (0.125, 0.875));
        assert_eq!(rho().trust(0.0), (0.0, 1.0));
    }

    #[test]
    fn trust_matches_piecewise_definition() {
        // middle segment: 0.5((x-lo1)/(lo2-lo1) + (x-up1)/(up2-up1))
        let r = rho();
        assert!((r.tr_leq(1.5) - 0.5 * (0.5 + 1.5 / 4.0)).abs() < 1e-15);
        // right segment: 0.5((x-up1)/(up2-up1) + 1)
        assert!((r.tr_leq(3.0) - 0.5 * (0.75 + 1.0)).abs() < 1e-15);
        assert!((r.tr_geq(3.0) - 0.5 * 0.25).abs() < 1e-15);
    }

    #[test]
    fn quantile_examples() {
        assert_eq!(rho().tr_quantile_leq(0.125), 1.0);
        assert_eq!(rho().tr_quantile_leq(1.0), 4.0);
        assert_eq!(rho().tr_quantile_leq(0.0), 0.0);
    }

    #[test]
    fn quantile_branches() {
        let r = rho();
        // middle: solve 0.5((f-1) + f/4) = 0.5 -> f = 1.6
        assert!((r.tr_quantile_leq(0.5) - 1.6).abs() < 1e-12);
        // upper: 2*0 - 4 + 2*0.9*4 = 3.2
        assert!((r.tr_quantile_leq(0.9) - 3.2).abs() < 1e-12);
    }

    #[test]
    fn collapsed_lower_approximation() {
        let r = RoughInterval::new(2.0, 2.0, 0.0, 4.0).unwrap();
        assert_eq!(r.tr_leq(1.999), 0.5 * 1.999 / 4.0);
        assert_eq!(r.tr_leq(2.0), 0.5 * (1.0 + 0.5));
        assert_eq!(r.tr_quantile_leq(0.5), 2.0);
        let crisp = RoughInterval::new(3.0, 3.0, 3.0, 3.0).unwrap();
        assert_eq!(crisp.trust(3.0), (1.0, 1.0));
        assert_eq!(crisp.tr_quantile_leq(0.3), 3.0);
    }

    #[test]
    fn invalid_intervals_rejected() {
        assert!(RoughInterval::new(0.0, 2.0, 1.0, 4.0).is_err());
        let base = TriangularFuzzy::new(1.0, 2.0, 3.0).unwrap();
        assert!(RoughFuzzyWeight::new(base, 0.0, 2.0, 0.5, 3.0).is_err());
        assert!(RoughFuzzyWeight::new(base, 0.0, 2.0, -1.0, 3.0).is_ok());
    }

    fn arb_rough() -> impl Strategy<Value = RoughInterval<f64>> {
        (-50.0..50.0f64, 0.01..10.0f64, 0.01..10.0f64, 0.01..10.0f64).prop_map(|(up1, a, b, c)| {
            RoughInterval {
                up1,
                lo1: up1 + a,
                lo2: up1 + a + b,
                up2: up1 + a + b + c,
            }
        })
    }

    proptest! {
        #[test]
        fn trust_duality(r in arb_rough(), t in -0.2..1.2f64) {
            let x = r.up1 + t * (r.up2 - r.up1);
            let (l, g) = r.trust(x);
            prop_assert!((l + g - 1.0).abs() <= 1e-12);
        }

        #[test]
        fn quantile_inverts_trust(r in arb_rough(), alpha in 0.0..=1.0f64) {
            let f = r.tr_quantile_leq(alpha);
            prop_assert!((r.tr_leq(f) - alpha).abs() <= 1e-9);
        }

        #[test]
        fn trust_monotone(r in arb_rough(), t in -0.2..1.2f64, dt in 0.0..0.3f64) {
            let x = r.up1 + t * (r.up2 - r.up1);
            let y = x + dt * (r.up2 - r.up1);
            prop_assert!(r.tr_leq(x) <= r.tr_leq(y));
            prop_assert!(r.tr_geq(x) >= r.tr_geq(y));
        }
    }
}
