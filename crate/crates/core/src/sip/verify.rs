use std::collections::{BTreeMap, BTreeSet};

use super::{
    decompose, enumerate_basis, enumerate_class, in_sip_class, min_basis_total, recompose,
    SipClassSpec,
};
use crate::partition::{Partition, Weighted};

/// Outcome of checking the basis-plus-padding decomposition exhaustively.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SipReport {
    pub total_max: u64,
    /// Class members of total at most `total_max`, the empty partition included.
    pub members: usize,
    /// (basis, padding) pairs of total at most `total_max`.
    pub pairs: usize,
    /// Partitions produced by more than one pair.
    pub collisions: Vec<Partition>,
    /// Class members produced by no pair.
    pub omissions: Vec<Partition>,
    /// Pairs whose sum lies outside the class.
    pub escapes: Vec<Partition>,
    /// Members for which `recompose(decompose(p)) != p`.
    pub round_trip_failures: Vec<Partition>,
}

impl SipReport {
    pub fn pass(&self) -> bool {
        self.collisions.is_empty()
            && self.omissions.is_empty()
            && self.escapes.is_empty()
            && self.round_trip_failures.is_empty()
    }
}

/// Every non-decreasing list of `len` multiples of `k` with sum at most `budget`.
fn paddings(len: usize, k: u64, budget: u64) -> Vec<Vec<u64>> {
    fn go(
        len: usize,
        k: u64,
        budget: u64,
        floor: u64,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let remaining = (len - cur.len()) as u64;
        let mut v = floor;
        // every later entry is at least v
        while v * remaining <= budget {
            cur.push(v);
            go(len, k, budget - v, v, cur, out);
            cur.pop();
            v += k;
        }
    }
    let mut out = Vec::new();
    go(len, k, budget, 0, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Build every (basis, padding) pair of total at most `total_max`, recompose
/// each one, and compare the multiset of results against the class members.
pub fn verify_sip(spec: &SipClassSpec, total_max: u64) -> SipReport {
    let mut hits: BTreeMap<Partition, usize> = BTreeMap::new();
    hits.insert(Partition::empty(), 1);
    let mut pairs = 1;
    let mut n = 1;
    while min_basis_total(spec, n) <= total_max {
        for b in enumerate_basis(spec, n, total_max) {
            let base = b.partition().size();
            if base > total_max {
                continue;
            }
            for pad in paddings(n, spec.k(), total_max - base) {
                let parts: Vec<u64> = b.parts().iter().zip(&pad).map(|(x, y)| x + y).collect();
                *hits.entry(Partition::from_sorted(parts)).or_default() += 1;
                pairs += 1;
            }
        }
        n += 1;
    }

    let members: BTreeSet<Partition> = enumerate_class(spec, total_max).collect();
    let mut report = SipReport {
        total_max,
        members: members.len(),
        pairs,
        ..SipReport::default()
    };
    for (p, &count) in &hits {
        if count > 1 {
            report.collisions.push(p.clone());
        }
        if !members.contains(p) {
            debug_assert!(!in_sip_class(p, spec));
            report.escapes.push(p.clone());
        }
    }
    for p in &members {
        if !hits.contains_key(p) {
            report.omissions.push(p.clone());
        }
        match decompose(p, spec) {
            Ok(d) if recompose(&d) == *p => {}
            _ => report.round_trip_failures.push(p.clone()),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn padding_lists() {
        assert_eq!(
            paddings(2, 2, 4),
            vec![vec![0, 0], vec![0, 2], vec![0, 4], vec![2, 2]]
        );
        assert_eq!(paddings(1, 3, 2), vec![vec![0]]);
        assert_eq!(paddings(3, 1, 0), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn presets_pass() {
        for (name, spec) in SipClassSpec::named_presets() {
            let r = verify_sip(&spec, 20);
            assert!(r.pass(), "{name}: {r:?}");
            assert_eq!(r.pairs, r.members, "{name}");
        }
    }

    #[test]
    fn gollnitz_member_count() {
        // class members of total <= 20, counted directly from the product side
        let r = verify_sip(&SipClassSpec::gollnitz_gordon(), 20);
        let direct = crate::partition::enumerate_partitions(20, |p| {
            p.parts().iter().all(|x| matches!(x % 8, 1 | 4 | 7))
        })
        .count();
        assert_eq!(r.members, direct);
    }

    #[test]
    fn lopsided_spec_escapes() {
        // the basis element 2+3 has an odd part below c_1 = 5
        let spec = SipClassSpec::new(2, vec![5, 2], vec![0, 0]).unwrap();
        let r = verify_sip(&spec, 12);
        assert!(!r.pass());
        assert!(r.escapes.contains(&Partition::new(vec![2, 3]).unwrap()));
    }
}
