use std::collections::BTreeMap;

use super::SipClassSpec;
use crate::partition::Partition;

/// A basis element: its first part equals `c_r` for its residue `r`, and each
/// later part `β_i ≡ r` satisfies `d_r <= β_i - β_{i-1} < d_r + k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisPartition(Partition);

impl BasisPartition {
    pub fn new(parts: Vec<u64>, spec: &SipClassSpec) -> Option<Self> {
        is_basis(&parts, spec).then(|| BasisPartition(Partition::from_sorted(parts)))
    }

    pub(crate) fn from_checked(parts: Vec<u64>) -> Self {
        BasisPartition(Partition::from_sorted(parts))
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[u64] {
        self.0.parts()
    }
}

pub fn is_basis(parts: &[u64], spec: &SipClassSpec) -> bool {
    let Some(&first) = parts.first() else {
        return true;
    };
    if first == 0 || first != spec.threshold_for(first) {
        return false;
    }
    parts
        .windows(2)
        .all(|w| w[1] >= w[0] && next_in_window(spec, w[0], w[1]) == w[1])
}

/// The unique value `≡ target (mod k)` in `[prev + d_r, prev + d_r + k)`,
/// where `r` is the residue of `target`.
pub(crate) fn next_in_window(spec: &SipClassSpec, prev: u64, target: u64) -> u64 {
    let k = spec.k();
    let lo = prev + spec.gap_for(target);
    let shift = (target % k + k - lo % k) % k;
    lo + shift
}

/// Candidate successors of `prev` in a basis element, one per residue.
fn successors(spec: &SipClassSpec, prev: u64) -> impl Iterator<Item = u64> + '_ {
    // residue r is represented by the threshold c_r, which is ≡ r
    spec.thresholds()
        .iter()
        .map(move |&representative| next_in_window(spec, prev, representative))
}

/// All basis elements with exactly `n_parts` parts and largest part at most
/// `h_max`, in lexicographic order of their parts.
pub fn enumerate_basis(spec: &SipClassSpec, n_parts: usize, h_max: u64) -> Vec<BasisPartition> {
    assert!(n_parts >= 1, "basis elements have at least one part");
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u64>> = spec
        .thresholds()
        .iter()
        .filter(|&&c| c <= h_max)
        .map(|&c| vec![c])
        .collect();
    while let Some(parts) = stack.pop() {
        if parts.len() == n_parts {
            out.push(BasisPartition::from_checked(parts));
            continue;
        }
        let last = *parts.last().unwrap();
        for next in successors(spec, last) {
            if next <= h_max {
                let mut extended = parts.clone();
                extended.push(next);
                stack.push(extended);
            }
        }
    }
    out.sort();
    out
}

/// Smallest total of an `n`-part basis element (0 for `n = 0`).
pub fn min_basis_total(spec: &SipClassSpec, n: usize) -> u64 {
    if n == 0 {
        return 0;
    }
    // largest part -> smallest total reaching it
    let mut frontier: BTreeMap<u64, u64> = BTreeMap::new();
    for &c in spec.thresholds() {
        frontier.insert(c, c);
    }
    for _ in 1..n {
        let mut next: BTreeMap<u64, u64> = BTreeMap::new();
        for (&last, &total) in &frontier {
            for h in successors(spec, last) {
                let t = total + h;
                next.entry(h).and_modify(|v| *v = (*v).min(t)).or_insert(t);
            }
        }
        frontier = next;
    }
    frontier.values().copied().min().unwrap()
}

/// Upper bound on the largest part of an `n`-part basis element.
pub fn max_basis_largest(spec: &SipClassSpec, n: usize) -> u64 {
    let c_max = spec.thresholds().iter().copied().max().unwrap();
    let step = spec.gaps().iter().copied().max().unwrap() + spec.k() - 1;
    c_max + (n.saturating_sub(1) as u64) * step
}
