//! Brute-force enumeration of ordinary partitions and overpartitions.
//!
//! These enumerators are the independent oracles against which generating
//! functions are checked, so they work directly from the combinatorial
//! definitions and never consult a series.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::series::{MarkerPoly, MarkerSet, QSeries};

/// Anything with a size, i.e. the integer it partitions.
pub trait Weighted {
    fn size(&self) -> u64;
}

impl<T: Weighted + ?Sized> Weighted for &T {
    fn size(&self) -> u64 {
        (**self).size()
    }
}

/// A partition with parts listed in non-decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u64>);

impl Partition {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<u64>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable();
        Some(Partition(parts))
    }

    pub(crate) fn from_sorted(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(parts.first().is_none_or(|&p| p > 0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.0
    }
}

impl Weighted for Partition {
    fn size(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.0.iter().rev().map(u64::to_string).collect();
        write!(f, "{}", s.join("+"))
    }
}

/// A partition in which each part size may carry one overline.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Overpartition {
    parts: Vec<u64>,
    overlined: BTreeSet<u64>,
}

impl Overpartition {
    /// `overlined` must only name sizes that occur among the parts.
    pub fn new(partition: Partition, overlined: BTreeSet<u64>) -> Option<Self> {
        if overlined.iter().all(|s| partition.parts().contains(s)) {
            Some(Overpartition {
                parts: partition.into_parts(),
                overlined,
            })
        } else {
            None
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn overlined(&self) -> &BTreeSet<u64> {
        &self.overlined
    }
}

impl Weighted for Overpartition {
    fn size(&self) -> u64 {
        self.parts.iter().sum()
    }
}

/// Depth-first enumeration of non-decreasing part sequences with sum at most
/// `total_max`. `admit(prefix, next)` decides whether `next` may extend the
/// current prefix; every admitted prefix, starting with the empty one, is
/// yielded exactly once.
pub struct AscendingParts<F> {
    total_max: u64,
    min_gap: u64,
    parts: Vec<u64>,
    sum: u64,
    resume: Vec<u64>,
    started: bool,
    admit: F,
}

impl<F: FnMut(&[u64], u64) -> bool> AscendingParts<F> {
    /// `min_gap` is a lower bound on every difference between consecutive
    /// parts that `admit` can accept; it only speeds up the search.
    pub fn new(total_max: u64, min_gap: u64, admit: F) -> Self {
        AscendingParts {
            total_max,
            min_gap,
            parts: Vec::new(),
            sum: 0,
            resume: Vec::new(),
            started: false,
            admit,
        }
    }
}

impl<F: FnMut(&[u64], u64) -> bool> Iterator for AscendingParts<F> {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if !self.started {
            self.started = true;
            self.resume.push(1);
            return Some(Partition::empty());
        }
        loop {
            let start = *self.resume.last()?;
            let mut found = None;
            let mut c = start;
            while self.sum + c <= self.total_max {
                if (self.admit)(&self.parts, c) {
                    found = Some(c);
                    break;
                }
                c += 1;
            }
            match found {
                Some(c) => {
                    *self.resume.last_mut().unwrap() = c + 1;
                    self.parts.push(c);
                    self.sum += c;
                    self.resume.push(c + self.min_gap);
                    return Some(Partition::from_sorted(self.parts.clone()));
                }
                None => {
                    self.resume.pop();
                    self.sum -= self.parts.pop()?;
                }
            }
        }
    }
}

/// Every partition of every `n <= total_max` satisfying `predicate`.
pub fn enumerate_partitions<P>(total_max: u64, mut predicate: P) -> impl Iterator<Item = Partition>
where
    P: FnMut(&Partition) -> bool,
{
    AscendingParts::new(total_max, 0, |_: &[u64], _| true).filter(move |p| predicate(p))
}

/// Every overpartition of every `n <= total_max` satisfying `predicate`.
pub fn enumerate_overpartitions<P>(
    total_max: u64,
    mut predicate: P,
) -> impl Iterator<Item = Overpartition>
where
    P: FnMut(&Overpartition) -> bool,
{
    enumerate_partitions(total_max, |_| true)
        .flat_map(|p| {
            let sizes: Vec<u64> = p
                .parts()
                .iter()
                .copied()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            (0u64..(1 << sizes.len())).map(move |mask| {
                let overlined = sizes
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &s)| s)
                    .collect();
                Overpartition {
                    parts: p.parts().to_vec(),
                    overlined,
                }
            })
        })
        .filter(move |o| predicate(o))
}

/// `Σ_n #{objects of size n} q^n`; objects larger than `trunc` are ignored.
pub fn counting_series<T, I>(items: I, trunc: usize) -> QSeries
where
    T: Weighted,
    I: IntoIterator<Item = T>,
{
    let mut counts = vec![0u64; trunc + 1];
    for item in items {
        let n = item.size() as usize;
        if n <= trunc {
            counts[n] += 1;
        }
    }
    QSeries::from_integers(&counts, trunc)
}

/// Like [`counting_series`] but each object contributes `weight(object)`
/// instead of 1.
pub fn weighted_counting_series<T, I, W>(
    items: I,
    markers: &MarkerSet,
    mut weight: W,
    trunc: usize,
) -> QSeries
where
    T: Weighted,
    I: IntoIterator<Item = T>,
    W: FnMut(&T) -> MarkerPoly,
{
    let mut coeffs = vec![MarkerPoly::zero(); trunc + 1];
    for item in items {
        let n = item.size() as usize;
        if n <= trunc {
            coeffs[n].add_assign(&weight(&item));
        }
    }
    QSeries::from_polys(markers, coeffs, trunc)
}

/// Counts as plain integers, indexed by size.
pub fn count_by_size<T, I>(items: I, total_max: u64) -> Vec<BigInt>
where
    T: Weighted,
    I: IntoIterator<Item = T>,
{
    let mut counts = vec![BigInt::from(0); total_max as usize + 1];
    for item in items {
        let n = item.size();
        if n <= total_max {
            counts[n as usize] += 1;
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has_gap(p: &Partition, d: u64) -> bool {
        p.parts().windows(2).all(|w| w[1] - w[0] >= d)
    }

    /// Number of partitions of n with parts at most m.
    fn p_bounded(n: u64, m: u64) -> u64 {
        if n == 0 {
            return 1;
        }
        if m == 0 {
            return 0;
        }
        (1..=m.min(n)).map(|k| p_bounded(n - k, k)).sum()
    }

    #[test]
    fn empty_partition_only_at_zero() {
        let all: Vec<_> = enumerate_partitions(0, |_| true).collect();
        assert_eq!(all, vec![Partition::empty()]);
    }

    #[test]
    fn no_duplicates_and_matches_recursive_count() {
        let all: Vec<_> = enumerate_partitions(18, |_| true).collect();
        let distinct: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(all.len(), distinct.len());
        let counts = count_by_size(all, 18);
        for n in 0..=18u64 {
            assert_eq!(counts[n as usize], BigInt::from(p_bounded(n, n)), "p({n})");
        }
    }

    #[test]
    fn difference_two_count_at_nine() {
        let c = enumerate_partitions(9, |p| p.size() == 9 && has_gap(p, 2)).count();
        assert_eq!(c, 5);
    }

    #[test]
    fn counting_series_examples() {
        let s = counting_series(enumerate_partitions(5, |_| true), 5);
        assert_eq!(s, QSeries::from_integers(&[1, 1, 2, 3, 5, 7], 5));
        let d = counting_series(enumerate_partitions(5, |p| has_gap(p, 1)), 5);
        assert_eq!(d, QSeries::from_integers(&[1, 1, 1, 2, 2, 3], 5));
    }

    #[test]
    fn overpartition_counts() {
        let at = |n: u64| enumerate_overpartitions(n, |o| o.size() == n).count();
        assert_eq!(at(0), 1);
        assert_eq!(at(3), 8);
        let j4 =
            enumerate_overpartitions(4, |o| o.size() == 4 && o.parts().iter().all(|p| p % 3 != 0))
                .count();
        assert_eq!(j4, 10);
    }

    #[test]
    fn overpartition_rejects_foreign_overline() {
        let p = Partition::new(vec![2, 1]).unwrap();
        assert!(Overpartition::new(p.clone(), [3].into()).is_none());
        assert!(Overpartition::new(p, [2].into()).is_some());
    }

    #[test]
    fn display_lists_largest_first() {
        assert_eq!(Partition::new(vec![2, 7, 3]).unwrap().to_string(), "7+3+2");
    }
}
