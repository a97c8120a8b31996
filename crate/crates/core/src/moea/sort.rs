//! Fast nondominated sorting and crowding distance.

use std::cmp::Ordering;

use crate::qmst::{dominates, ObjectivePair};
use crate::scalar::Scalar;

/// Nondomination rank of every point; rank 0 is the nondominated set.
pub fn fast_nondominated_sort<T: Scalar>(points: &[ObjectivePair<T>]) -> Vec<usize> {
    let n = points.len();
    let mut dominated_by: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut counts = vec![0usize; n];
    for i in 0..n {
        for j in i + 1..n {
            if dominates(&points[i], &points[j]) {
                dominated_by[i].push(j);
                counts[j] += 1;
            } else if dominates(&points[j], &points[i]) {
                dominated_by[j].push(i);
                counts[i] += 1;
            }
        }
    }
    let mut ranks = vec![0usize; n];
    let mut current: Vec<usize> = (0..n).filter(|&i| counts[i] == 0).collect();
    let mut rank = 0;
    while !current.is_empty() {
        let mut next = Vec::new();
        for &i in &current {
            ranks[i] = rank;
            for &j in &dominated_by[i] {
                counts[j] -= 1;
                if counts[j] == 0 {
                    next.push(j);
                }
            }
        }
        current = next;
        rank += 1;
    }
    ranks
}

/// Crowding distance within one front. Boundary points of each objective
/// get infinity; an objective with zero range adds nothing to interior
/// points.
pub fn crowding_distance<T: Scalar>(front: &[ObjectivePair<T>]) -> Vec<T> {
    let n = front.len();
    let mut dist = vec![T::zero(); n];
    if n == 0 {
        return dist;
    }
    for obj in 0..2 {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&a, &b| {
            front[a]
                .get(obj)
                .partial_cmp(&front[b].get(obj))
                .unwrap_or(Ordering::Equal)
        });
        let lo = front[idx[0]].get(obj);
        let hi = front[idx[n - 1]].get(obj);
        dist[idx[0]] = T::infinity();
        dist[idx[n - 1]] = T::infinity();
        let range = hi - lo;
        if range <= T::zero() {
            continue;
        }
        for k in 1..n.saturating_sub(1) {
            let gap = front[idx[k + 1]].get(obj) - front[idx[k - 1]].get(obj);
            dist[idx[k]] += gap / range;
        }
    }
    dist
}
