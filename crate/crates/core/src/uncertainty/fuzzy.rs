//! Triangular fuzzy variables: membership, possibility/necessity, credibility
//! and the credibility quantile.

use std::ops::Add;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Triangular fuzzy variable `(u, v, w)` with tent-shaped membership.
///
/// `u == v` or `v == w` collapses the corresponding leg; `u == v == w` is a
/// crisp number. Distributions over collapsed legs become steps.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TriangularFuzzy<T> {
    pub u: T,
    pub v: T,
    pub w: T,
}

/// One term `coeff * xi + shift` of an affine fuzzy sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineTerm<T> {
    pub xi: TriangularFuzzy<T>,
    pub coeff: T,
    pub shift: T,
}

impl<T: Scalar> TriangularFuzzy<T> {
    /// Builds a TFV, rejecting `u > v`, `v > w` or non-finite components.
    pub fn new(u: T, v: T, w: T) -> Result<Self> {
        let ok = u.is_finite() && v.is_finite() && w.is_finite() && u <= v && v <= w;
        if !ok {
            return Err(Error::FuzzyOrder {
                u: u.to_f64_lossy(),
                v: v.to_f64_lossy(),
                w: w.to_f64_lossy(),
            });
        }
        Ok(Self { u, v, w })
    }

    pub fn crisp(c: T) -> Self {
        Self { u: c, v: c, w: c }
    }

    pub fn zero() -> Self {
        Self::crisp(T::zero())
    }

    pub fn is_valid(&self) -> bool {
        self.u.is_finite() && self.w.is_finite() && self.u <= self.v && self.v <= self.w
    }

    pub fn is_crisp(&self) -> bool {
        self.u == self.w
    }

    /// Adds a crisp shift to every component.
    pub fn shift(self, s: T) -> Self {
        Self {
            u: self.u + s,
            v: self.v + s,
            w: self.w + s,
        }
    }

    /// Multiplies every component by `k`. Order is preserved only for `k >= 0`.
    pub fn scale(self, k: T) -> Self {
        Self {
            u: self.u * k,
            v: self.v * k,
            w: self.w * k,
        }
    }

    /// Membership degree `mu(x)`.
    pub fn membership(&self, x: T) -> T {
        let (u, v, w) = (self.u, self.v, self.w);
        if x < u || x > w {
            T::zero()
        } else if x == v {
            T::one()
        } else if x < v {
            (x - u) / (v - u)
        } else {
            (w - x) / (w - v)
        }
    }

    /// `(Pos{xi <= x}, Nec{xi <= x})`.
    ///
    /// Possibility is the supremum of membership over `(-inf, x]`; necessity is
    /// one minus the supremum over the complement `(x, inf)`.
    pub fn possibility_necessity_leq(&self, x: T) -> (T, T) {
        let pos = if x >= self.v {
            T::one()
        } else {
            self.membership(x)
        };
        let nec = if x < self.v {
            T::zero()
        } else if x >= self.w {
            T::one()
        } else {
            // sup over (x, inf) is the right-leg value at x
            T::one() - (self.w - x) / (self.w - self.v)
        };
        (pos, nec)
    }

    /// `(Cr{xi <= x}, Cr{xi >= x})`.
    pub fn credibility(&self, x: T) -> (T, T) {
        (self.cr_leq(x), self.cr_geq(x))
    }

    pub fn cr_leq(&self, x: T) -> T {
        let (u, v, w) = (self.u, self.v, self.w);
        let two = T::two();
        if x < u {
            T::zero()
        } else if x >= w {
            T::one()
        } else if x < v {
            (x - u) / (two * (v - u))
        } else {
            (x + w - two * v) / (two * (w - v))
        }
    }

    pub fn cr_geq(&self, x: T) -> T {
        let (u, v, w) = (self.u, self.v, self.w);
        let two = T::two();
        if x <= u {
            T::one()
        } else if x > w {
            T::zero()
        } else if x < v {
            (two * v - u - x) / (two * (v - u))
        } else if v < w {
            (w - x) / (two * (w - v))
        } else {
            // x == v == w with a nondegenerate left leg
            T::half()
        }
    }

    /// Smallest `x` with `Cr{xi <= x} >= beta`.
    pub fn cr_quantile_leq(&self, beta: T) -> T {
        let two = T::two();
        if beta <= T::half() {
            (T::one() - two * beta) * self.u + two * beta * self.v
        } else {
            (two - two * beta) * self.v + (two * beta - T::one()) * self.w
        }
    }

    /// Extension-principle sum `sum(coeff_i * xi_i + shift_i)`.
    pub fn affine_sum<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = AffineTerm<T>>,
    {
        let mut acc = Self::zero();
        for t in terms {
            if t.coeff < T::zero() {
                return Err(Error::NegativeCoefficient(t.coeff.to_f64_lossy()));
            }
            acc = acc + t.xi.scale(t.coeff).shift(t.shift);
        }
        Ok(acc)
    }

    pub fn cast<U: Scalar>(self) -> TriangularFuzzy<U> {
        TriangularFuzzy {
            u: U::lit(self.u.to_f64_lossy()),
            v: U::lit(self.v.to_f64_lossy()),
            w: U::lit(self.w.to_f64_lossy()),
        }
    }
}

impl<T: Scalar> Add for TriangularFuzzy<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            u: self.u + rhs.u,
            v: self.v + rhs.v,
            w: self.w + rhs.w,
        }
    }
}
