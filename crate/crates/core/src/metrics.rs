//! Quality indicators for bi-objective fronts and multi-run statistics.
//!
//! Indicators expect coordinates normalized against a reference front (see
//! [`normalize`]); [`Indicators::compute`] does that step itself.

use std::cmp::Ordering;

use crate::qmst::ObjectivePair;
use crate::scalar::Scalar;

/// Nondominated, duplicate-free point set sorted by `f1` ascending (and so
/// by `f2` descending).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Front<T> {
    points: Vec<ObjectivePair<T>>,
}

fn cmp_pair<T: Scalar>(a: &ObjectivePair<T>, b: &ObjectivePair<T>) -> Ordering {
    a.f1.partial_cmp(&b.f1)
        .unwrap_or(Ordering::Equal)
        .then(a.f2.partial_cmp(&b.f2).unwrap_or(Ordering::Equal))
}

impl<T: Scalar> Front<T> {
    /// Keeps the nondominated subset of `points`, one copy of each.
    pub fn new(mut points: Vec<ObjectivePair<T>>) -> Self {
        points.sort_by(cmp_pair);
        let mut best = T::infinity();
        points.retain(|p| {
            let keep = p.f2 < best;
            if keep {
                best = p.f2;
            }
            keep
        });
        Self { points }
    }

    pub fn points(&self) -> &[ObjectivePair<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

impl<T: Scalar> FromIterator<ObjectivePair<T>> for Front<T> {
    fn from_iter<I: IntoIterator<Item = ObjectivePair<T>>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

/// Nondominated union of several fronts.
pub fn build_reference_front<T: Scalar>(fronts: &[Front<T>]) -> Front<T> {
    fronts
        .iter()
        .flat_map(|f| f.points.iter().copied())
        .collect()
}

/// Maps each objective affinely so the reference front's minimum goes to 0
/// and its maximum to 1. An objective with zero reference range maps to 0.
pub fn normalize<T: Scalar>(front: &Front<T>, reference: &Front<T>) -> Front<T> {
    let bounds = |get: fn(&ObjectivePair<T>) -> T| {
        let lo = reference.points.iter().map(get).fold(T::infinity(), T::min);
        let hi = reference
            .points
            .iter()
            .map(get)
            .fold(T::neg_infinity(), T::max);
        (lo, hi - lo)
    };
    let (lo1, r1) = bounds(|p| p.f1);
    let (lo2, r2) = bounds(|p| p.f2);
    let map = |x: T, lo: T, r: T| {
        if r > T::zero() {
            (x - lo) / r
        } else {
            T::zero()
        }
    };
    front
        .points
        .iter()
        .map(|p| ObjectivePair::new(map(p.f1, lo1, r1), map(p.f2, lo2, r2)))
        .collect()
}

/// Area dominated by `front` and bounded by the reference point `(1, 1)`.
pub fn hypervolume<T: Scalar>(front: &Front<T>) -> T {
    let one = T::one();
    let mut area = T::zero();
    let mut ceiling = one;
    for p in &front.points {
        if p.f1 < one && p.f2 < ceiling {
            area += (one - p.f1) * (ceiling - p.f2);
            ceiling = p.f2;
        }
    }
    area
}

fn distance<T: Scalar>(a: &ObjectivePair<T>, b: &ObjectivePair<T>) -> T {
    (a.f1 - b.f1).hypot(a.f2 - b.f2)
}

fn nearest<T: Scalar>(p: &ObjectivePair<T>, set: &Front<T>) -> T {
    set.points
        .iter()
        .map(|q| distance(p, q))
        .fold(T::infinity(), T::min)
}

/// Generational distance: `sqrt(sum d_i^2) / N`, `d_i` the distance from
/// each front point to its nearest reference point.
pub fn gd<T: Scalar>(front: &Front<T>, reference: &Front<T>) -> T {
    if front.is_empty() || reference.is_empty() {
        return T::infinity();
    }
    let sum: T = front
        .points
        .iter()
        .map(|p| nearest(p, reference).powi(2))
        .sum();
    sum.sqrt() / T::from_usize(front.len()).expect("length fits")
}

/// Inverted generational distance: [`gd`] with the roles swapped.
pub fn igd<T: Scalar>(front: &Front<T>, reference: &Front<T>) -> T {
    gd(reference, front)
}

/// Spread `(d_f + d_l + sum |d_i - mean|) / (d_f + d_l + (N - 1) mean)`,
/// with `d_f`, `d_l` the distances from the front's ends to the reference
/// extremes and `d_i` the gaps between consecutive front points.
///
/// Returns 0 when the formula is undefined.
pub fn spread<T: Scalar>(front: &Front<T>, reference: &Front<T>) -> T {
    let (Some(first), Some(last)) = (front.points.first(), front.points.last()) else {
        return T::zero();
    };
    let (Some(ext_a), Some(ext_b)) = (reference.points.first(), reference.points.last()) else {
        return T::zero();
    };
    if front.len() < 2 && ext_a == ext_b {
        return T::zero();
    }
    let d_f = distance(first, ext_a);
    let d_l = distance(last, ext_b);
    let gaps: Vec<T> = front
        .points
        .windows(2)
        .map(|w| distance(&w[0], &w[1]))
        .collect();
    let mean = if gaps.is_empty() {
        T::zero()
    } else {
        gaps.iter().copied().sum::<T>() / T::from_usize(gaps.len()).expect("length fits")
    };
    let dev: T = gaps.iter().map(|&g| (g - mean).abs()).sum();
    let denom = d_f + d_l + T::from_usize(gaps.len()).expect("length fits") * mean;
    if denom <= T::zero() {
        return T::zero();
    }
    (d_f + d_l + dev) / denom
}

/// Additive epsilon: the smallest shift that makes `front` weakly dominate
/// every reference point.
pub fn epsilon_additive<T: Scalar>(front: &Front<T>, reference: &Front<T>) -> T {
    reference
        .points
        .iter()
        .map(|r| {
            front
                .points
                .iter()
                .map(|p| (p.f1 - r.f1).max(p.f2 - r.f2))
                .fold(T::infinity(), T::min)
        })
        .fold(T::neg_infinity(), T::max)
}

/// The five indicators of one front against a reference front.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Indicators<T> {
    pub hv: T,
    pub spread: T,
    pub gd: T,
    pub igd: T,
    pub epsilon: T,
}

impl<T: Scalar> Indicators<T> {
    pub const NAMES: [&'static str; 5] = ["HV", "Spread", "GD", "IGD", "Epsilon"];

    /// Normalizes both fronts by `reference` and evaluates every indicator.
    pub fn compute(front: &Front<T>, reference: &Front<T>) -> Self {
        let f = normalize(front, reference);
        let r = normalize(reference, reference);
        Self {
            hv: hypervolume(&f),
            spread: spread(&f, &r),
            gd: gd(&f, &r),
            igd: igd(&f, &r),
            epsilon: epsilon_additive(&f, &r),
        }
    }

    /// Values in [`Self::NAMES`] order.
    pub fn values(&self) -> [T; 5] {
        [self.hv, self.spread, self.gd, self.igd, self.epsilon]
    }
}

/// Summary of one indicator across runs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunStats {
    pub mean: f64,
    /// Population standard deviation.
    pub sd: f64,
    pub median: f64,
    /// `Q3 - Q1` with linearly interpolated quartiles.
    pub iqr: f64,
}

fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

/// Mean, population SD, median and IQR. Panics on empty input.
pub fn summarize_runs(values: &[f64]) -> RunStats {
    assert!(!values.is_empty(), "no values to summarize");
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let sd = (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n).sqrt();
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    RunStats {
        mean,
        sd,
        median: quantile(&sorted, 0.5),
        iqr: quantile(&sorted, 0.75) - quantile(&sorted, 0.25),
    }
}
