//! Partitions with n copies of n: every part is a pair `m_i` with
//! `1 <= i <= m`, ordered lexicographically, and the distance between two
//! parts is the weighted difference `((m_i - n_j)) = m - n - i - j`.
//!
//! Constraints always refer to successive parts in ascending lexicographic
//! order, so two parts with equal value and different subscripts are
//! adjacent and constrained like any other pair.

mod gr;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Weighted;

pub use gr::{beta_r, gr_closed, gr_table, ncopies_gf, GrTable};

/// One part `value_subscript`, possibly overlined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CopyPart {
    value: u64,
    subscript: u64,
    overline: bool,
}

impl CopyPart {
    pub fn new(value: u64, subscript: u64) -> Option<Self> {
        (subscript >= 1 && subscript <= value).then_some(CopyPart {
            value,
            subscript,
            overline: false,
        })
    }

    pub fn overlined(mut self) -> Self {
        self.overline = true;
        self
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn subscript(&self) -> u64 {
        self.subscript
    }

    pub fn is_overlined(&self) -> bool {
        self.overline
    }

    /// Whether the part has the form `j_j`.
    pub fn is_diagonal(&self) -> bool {
        self.value == self.subscript
    }

    fn same_pair(&self, other: &CopyPart) -> bool {
        self.value == other.value && self.subscript == other.subscript
    }
}

/// `((a - b)) = a.value - b.value - a.subscript - b.subscript`.
pub fn weighted_difference(a: &CopyPart, b: &CopyPart) -> i64 {
    a.value as i64 - b.value as i64 - a.subscript as i64 - b.subscript as i64
}

/// `value:subscript`, with a trailing `'` for an overline.
impl fmt::Display for CopyPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.value, self.subscript)?;
        if self.overline {
            write!(f, "'")?;
        }
        Ok(())
    }
}

impl FromStr for CopyPart {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, overline) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let (v, i) = body
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected value:subscript, got {s:?}")))?;
        let v: u64 = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad value in {s:?}")))?;
        let i: u64 = i
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad subscript in {s:?}")))?;
        let part = CopyPart::new(v, i)
            .ok_or_else(|| Error::Parse(format!("need 1 <= subscript <= value in {s:?}")))?;
        Ok(if overline { part.overlined() } else { part })
    }
}

/// A multiset of parts kept in ascending lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NCopiesPartition {
    parts: Vec<CopyPart>,
}

impl NCopiesPartition {
    pub fn new(mut parts: Vec<CopyPart>) -> Self {
        parts.sort();
        NCopiesPartition { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[CopyPart] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `((p_(k+1) - p_k))` for each successive pair.
    pub fn successive_differences(&self) -> Vec<i64> {
        self.parts
            .windows(2)
            .map(|w| weighted_difference(&w[1], &w[0]))
            .collect()
    }

    pub fn smallest_is_diagonal(&self) -> bool {
        self.parts.first().is_some_and(CopyPart::is_diagonal)
    }
}

impl Weighted for NCopiesPartition {
    fn size(&self) -> u64 {
        self.parts.iter().map(|p| p.value).sum()
    }
}

impl fmt::Display for NCopiesPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for NCopiesPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<CopyPart>>>()?;
        Ok(Self::new(parts))
    }
}

/// Depth-first search over ascending part sequences. `admit(prefix, next)`
/// decides whether `next` may follow the prefix.
fn search<F>(total_max: u64, mut admit: F) -> Vec<NCopiesPartition>
where
    F: FnMut(&[CopyPart], &CopyPart) -> bool,
{
    fn go<F: FnMut(&[CopyPart], &CopyPart) -> bool>(
        budget: u64,
        prefix: &mut Vec<CopyPart>,
        admit: &mut F,
        out: &mut Vec<NCopiesPartition>,
    ) {
        out.push(NCopiesPartition {
            parts: prefix.clone(),
        });
        let (v0, s0) = prefix.last().map_or((1, 1), |p| (p.value, p.subscript));
        for v in v0..=budget {
            let first_sub = if v == v0 { s0 } else { 1 };
            for s in first_sub..=v {
                let part = CopyPart::new(v, s).unwrap();
                if admit(prefix, &part) {
                    prefix.push(part);
                    go(budget - v, prefix, admit, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(total_max, &mut Vec::new(), &mut admit, &mut out);
    out
}

/// All n-copies partitions of total at most `total_max` whose successive
/// weighted differences are at least `min_diff` (no constraint for `None`)
/// and which pass `pred`.
pub fn enumerate_ncopies<P>(
    total_max: u64,
    min_diff: Option<i64>,
    mut pred: P,
) -> Vec<NCopiesPartition>
where
    P: FnMut(&NCopiesPartition) -> bool,
{
    let all = search(total_max, |prefix, next| match (min_diff, prefix.last()) {
        (Some(r), Some(last)) => weighted_difference(next, last) >= r,
        _ => true,
    });
    all.into_iter().filter(|p| pred(p)).collect()
}

/// Partitions whose successive weighted differences all equal `r` and whose
/// smallest part has the form `j_j` (the empty partition included).
pub fn enumerate_exact(total_max: u64, r: i64) -> Vec<NCopiesPartition> {
    search(total_max, |prefix, next| match prefix.last() {
        None => next.is_diagonal(),
        Some(last) => weighted_difference(next, last) == r,
    })
}

/// Split a partition with successive weighted differences `>= r` into the
/// base partition with the same subscripts, smallest part `i_i` and all
/// differences exactly `r`, and the non-decreasing amounts `ψ_k` added to
/// each base value.
pub fn chain_decompose(p: &NCopiesPartition, r: i64) -> Result<(NCopiesPartition, Vec<u64>)> {
    if r < -1 {
        return Err(Error::ConstraintViolation(format!("r = {r} is below -1")));
    }
    if let Some(d) = p.successive_differences().into_iter().find(|&d| d < r) {
        return Err(Error::ConstraintViolation(format!(
            "{p} has a successive weighted difference {d} < {r}"
        )));
    }
    let mut base = Vec::with_capacity(p.len());
    let mut psi = Vec::with_capacity(p.len());
    let mut prev: Option<CopyPart> = None;
    for part in p.parts() {
        let s = part.subscript;
        let v = match prev {
            None => s,
            Some(b) => (b.value as i64 + b.subscript as i64 + s as i64 + r) as u64,
        };
        let b = CopyPart::new(v, s).expect("base values never drop below their subscripts");
        psi.push(part.value - v);
        base.push(b);
        prev = Some(b);
    }
    debug_assert!(psi.windows(2).all(|w| w[0] <= w[1]));
    Ok((NCopiesPartition { parts: base }, psi))
}

/// Inverse of [`chain_decompose`].
pub fn chain_recompose(
    base: &NCopiesPartition,
    attached: &[u64],
    r: i64,
) -> Result<NCopiesPartition> {
    if base.len() != attached.len() {
        return Err(Error::InvalidDecomposition(format!(
            "{} base parts but {} attached values",
            base.len(),
            attached.len()
        )));
    }
    if !base.is_empty() && !base.smallest_is_diagonal() {
        return Err(Error::InvalidDecomposition(format!(
            "{base} does not start with a part j_j"
        )));
    }
    if base.successive_differences().iter().any(|&d| d != r) {
        return Err(Error::InvalidDecomposition(format!(
            "{base} is not an exact-{r} chain"
        )));
    }
    if attached.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidDecomposition(
            "attached values must be non-decreasing".into(),
        ));
    }
    let parts = base
        .parts()
        .iter()
        .zip(attached)
        .map(|(b, &x)| CopyPart::new(b.value + x, b.subscript).unwrap())
        .collect();
    Ok(NCopiesPartition { parts })
}

/// Overpartitions with n copies of n: successive weighted differences at
/// least 0, and within every run of successive differences equal to 0 only
/// the lexicographically smallest part may be overlined.
pub fn enumerate_ncopies_over(total_max: u64) -> Vec<NCopiesPartition> {
    let mut out = Vec::new();
    for p in enumerate_ncopies(total_max, Some(0), |_| true) {
        let diffs = p.successive_differences();
        // part k may carry an overline iff it does not continue a zero run
        let eligible: Vec<usize> = (0..p.len())
            .filter(|&k| k == 0 || diffs[k - 1] > 0)
            .collect();
        for mask in 0u64..(1 << eligible.len()) {
            let mut parts = p.parts.clone();
            for (bit, &k) in eligible.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    parts[k] = parts[k].overlined();
                }
            }
            out.push(NCopiesPartition { parts });
        }
    }
    out
}

/// Every n-copies overpartition, with no difference condition: each distinct
/// pair `m_i` may have one overlined instance.
pub fn enumerate_ncopies_over_unrestricted(total_max: u64) -> Vec<NCopiesPartition> {
    let mut out = Vec::new();
    for p in enumerate_ncopies(total_max, None, |_| true) {
        // one overline slot per distinct pair, on its first occurrence
        let firsts: Vec<usize> = (0..p.len())
            .filter(|&k| k == 0 || !p.parts[k].same_pair(&p.parts[k - 1]))
            .collect();
        for mask in 0u64..(1 << firsts.len()) {
            let mut parts = p.parts.clone();
            for (bit, &k) in firsts.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    parts[k] = parts[k].overlined();
                }
            }
            out.push(NCopiesPartition::new(parts));
        }
    }
    out
}

/// Even subscripts only, successive weighted differences at least 0, and no
/// successive pair of odd values at weighted difference exactly 0.
pub fn enumerate_even_subscript(total_max: u64) -> Vec<NCopiesPartition> {
    search(total_max, |prefix, next| {
        if next.subscript % 2 != 0 {
            return false;
        }
        match prefix.last() {
            None => true,
            Some(last) => {
                let d = weighted_difference(next, last);
                d >= 0 && !(d == 0 && next.value % 2 == 1 && last.value % 2 == 1)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{count_by_size, enumerate_partitions, Partition};
    use num_bigint::BigInt;

    fn cp(v: u64, s: u64) -> CopyPart {
        CopyPart::new(v, s).unwrap()
    }

    fn of_size(v: Vec<NCopiesPartition>, n: u64) -> Vec<NCopiesPartition> {
        v.into_iter().filter(|p| p.size() == n).collect()
    }

    #[test]
    fn weighted_difference_examples() {
        assert_eq!(weighted_difference(&cp(7, 2), &cp(3, 2)), 0);
        assert_eq!(weighted_difference(&cp(2, 2), &cp(1, 1)), -2);
        assert_eq!(weighted_difference(&cp(8, 6), &cp(1, 1)), 0);
        assert!(CopyPart::new(3, 4).is_none());
        assert!(CopyPart::new(3, 0).is_none());
    }

    #[test]
    fn parse_and_display() {
        let p: NCopiesPartition = "3:1,1:1'".parse().unwrap();
        assert_eq!(p.parts(), &[cp(1, 1).overlined(), cp(3, 1)]);
        assert_eq!(p.to_string(), "1:1',3:1");
        assert!("3:4".parse::<NCopiesPartition>().is_err());
        assert!("3".parse::<CopyPart>().is_err());
    }

    #[test]
    fn six_partitions_of_three() {
        let three = of_size(enumerate_ncopies(3, None, |_| true), 3);
        let mut got: Vec<String> = three.iter().map(ToString::to_string).collect();
        got.sort();
        let mut want = vec!["3:1", "3:2", "3:3", "1:1,2:2", "1:1,2:1", "1:1,1:1,1:1"];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(
            enumerate_ncopies(0, None, |_| true),
            vec![NCopiesPartition::empty()]
        );
    }

    #[test]
    fn unrestricted_counts_are_plane_partition_numbers() {
        let counts = count_by_size(enumerate_ncopies(8, None, |_| true), 8);
        let plane = [1, 1, 3, 6, 13, 24, 48, 86, 160];
        assert_eq!(
            counts,
            plane.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn m2_of_nine() {
        let mut got: Vec<String> = of_size(enumerate_exact(9, 0), 9)
            .iter()
            .map(ToString::to_string)
            .collect();
        got.sort();
        let mut want = vec!["9:9", "1:1,8:6", "2:2,7:3", "1:1,3:1,5:1"];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn m1_matches_m2() {
        // largest part unique, every other part exactly twice
        let m1 = |p: &Partition| {
            let parts = p.parts();
            let Some(&top) = parts.last() else {
                return true;
            };
            if parts.iter().filter(|&&x| x == top).count() != 1 {
                return false;
            }
            parts
                .iter()
                .filter(|&&x| x != top)
                .all(|x| parts.iter().filter(|&y| y == x).count() == 2)
        };
        let a = count_by_size(enumerate_partitions(25, m1), 25);
        let b = count_by_size(enumerate_exact(25, 0), 25);
        assert_eq!(a, b);
        assert_eq!(a[9], BigInt::from(4));
    }

    #[test]
    fn chain_round_trip() {
        for r in [-1i64, 0, 1] {
            let valid = enumerate_ncopies(18, Some(r), |_| true);
            for p in &valid {
                let (base, psi) = chain_decompose(p, r).unwrap();
                assert_eq!(base.len(), p.len());
                assert!(base.is_empty() || base.smallest_is_diagonal());
                assert!(base.successive_differences().iter().all(|&d| d == r));
                let subs: Vec<u64> = base.parts().iter().map(|x| x.subscript()).collect();
                let orig: Vec<u64> = p.parts().iter().map(|x| x.subscript()).collect();
                assert_eq!(subs, orig);
                // ψ_(k+1) - ψ_k = ((p_(k+1) - p_k)) - r
                for (k, d) in p.successive_differences().iter().enumerate() {
                    assert_eq!(psi[k + 1] as i64 - psi[k] as i64, d - r);
                }
                assert_eq!(&chain_recompose(&base, &psi, r).unwrap(), p);
            }
        }
    }

    #[test]
    fn chain_bijection_cardinality() {
        // pairs (base, ψ) of total <= 18 against valid partitions of total <= 18
        for r in [-1i64, 0, 1] {
            let total = 18u64;
            let valid = enumerate_ncopies(total, Some(r), |_| true).len();
            let mut pairs = 0usize;
            for base in enumerate_exact(total, r) {
                let n = base.len();
                let slack = total - base.size();
                // non-decreasing ψ of length n and sum <= slack
                pairs += enumerate_partitions(slack, |q| q.len() <= n).count();
            }
            assert_eq!(pairs, valid, "r={r}");
        }
    }

    #[test]
    fn chain_rejects_bad_input() {
        let p: NCopiesPartition = "1:1,2:2".parse().unwrap();
        assert!(matches!(
            chain_decompose(&p, 0),
            Err(Error::ConstraintViolation(_))
        ));
        assert!(chain_decompose(&p, -2).is_err());
        let base: NCopiesPartition = "1:1,3:1".parse().unwrap();
        assert!(chain_recompose(&base, &[0, 0], 0).is_ok());
        assert!(chain_recompose(&base, &[1, 0], 0).is_err());
        assert!(chain_recompose(&base, &[0], 0).is_err());
        assert!(chain_recompose(&base, &[0, 0], 1).is_err());
    }

    #[test]
    fn l_of_four() {
        let mut got: Vec<String> = of_size(enumerate_ncopies_over(4), 4)
            .iter()
            .map(ToString::to_string)
            .collect();
        got.sort();
        let mut want = vec![
            "4:4", "4:4'", "4:3", "4:3'", "4:2", "4:2'", "4:1", "4:1'", "1:1,3:1", "1:1',3:1",
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(enumerate_ncopies_over(0).len(), 1);
    }

    #[test]
    fn h_of_ten() {
        let mut got: Vec<String> = of_size(enumerate_even_subscript(10), 10)
            .iter()
            .map(ToString::to_string)
            .collect();
        got.sort();
        let mut want = vec![
            "10:10", "10:8", "10:6", "10:4", "10:2", "2:2,8:2", "2:2,8:4",
        ];
        want.sort();
        assert_eq!(got, want);
        let seven_three: NCopiesPartition = "3:2,7:2".parse().unwrap();
        assert!(!enumerate_even_subscript(10).contains(&seven_three));
    }

    #[test]
    fn unrestricted_overpartitions_of_three() {
        let counts = count_by_size(enumerate_ncopies_over_unrestricted(4), 4);
        assert_eq!(
            counts,
            [1, 2, 6, 16, 38]
                .iter()
                .map(|&x| BigInt::from(x))
                .collect::<Vec<_>>()
        );
    }
}
