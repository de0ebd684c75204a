//! Separable integer partition classes defined by residue thresholds and gaps.
//!
//! A class with modulus `k` is given by thresholds `c_1..c_k` (with
//! `c_r ≡ r mod k`) and gaps `d_1..d_k`. A partition `b_1 <= ... <= b_j`
//! belongs to the class when every part `b_i ≡ r` satisfies `b_i >= c_r` and,
//! for `i > 1`, `b_i - b_{i-1} >= d_r`. Every `n`-part member splits uniquely
//! as a basis element plus a non-decreasing list of multiples of `k`; the
//! submodules enumerate the basis, perform the split, tabulate basis
//! generating functions and assemble the class generating function.

mod basis;
mod decompose;
mod table;
mod verify;

use crate::error::{Error, Result};
use crate::partition::{AscendingParts, Partition};
use crate::series::{MarkerPoly, MarkerSet};

pub use basis::{enumerate_basis, is_basis, max_basis_largest, min_basis_total, BasisPartition};
pub use decompose::{decompose, recompose, SipDecomposition};
pub use table::{assemble_gf, basis_table, class_generating_function, BasisTable};
pub use verify::{verify_sip, SipReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SipClassSpec {
    k: u64,
    c: Vec<u64>,
    d: Vec<u64>,
    markers: MarkerSet,
    weights: Vec<MarkerPoly>,
}

impl SipClassSpec {
    /// `c[r-1]` and `d[r-1]` belong to residue `r` (`r = k` is the residue 0).
    pub fn new(k: u64, c: Vec<u64>, d: Vec<u64>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidSpec("modulus k must be positive".into()));
        }
        if c.len() != k as usize || d.len() != k as usize {
            return Err(Error::InvalidSpec(format!(
                "expected {k} thresholds and {k} gaps, got {} and {}",
                c.len(),
                d.len()
            )));
        }
        for (i, &cr) in c.iter().enumerate() {
            let r = i as u64 + 1;
            if cr == 0 {
                return Err(Error::InvalidSpec(format!("c_{r} must be positive")));
            }
            if cr % k != r % k {
                return Err(Error::InvalidSpec(format!(
                    "c_{r} = {cr} is not congruent to {r} mod {k}"
                )));
            }
        }
        Ok(SipClassSpec {
            k,
            c,
            d,
            markers: MarkerSet::empty(),
            weights: vec![MarkerPoly::one(0); k as usize],
        })
    }

    /// Attach a residue-indexed marker weight: a part `≡ r` contributes
    /// `weights[r-1]` to the monomial of its partition.
    pub fn with_weights(mut self, markers: MarkerSet, weights: Vec<MarkerPoly>) -> Result<Self> {
        if weights.len() != self.k as usize {
            return Err(Error::InvalidSpec(format!(
                "expected {} weights, got {}",
                self.k,
                weights.len()
            )));
        }
        self.markers = markers;
        self.weights = weights;
        Ok(self)
    }

    /// All partitions.
    pub fn natural() -> Self {
        Self::new(1, vec![1], vec![0]).unwrap()
    }

    /// Partitions into distinct parts.
    pub fn distinct() -> Self {
        Self::new(1, vec![1], vec![1]).unwrap()
    }

    /// Parts differing by at least 2.
    pub fn rogers_ramanujan() -> Self {
        Self::new(1, vec![1], vec![2]).unwrap()
    }

    /// Difference at least 2, and at least 4 between even parts.
    pub fn gollnitz_gordon() -> Self {
        Self::new(2, vec![1, 2], vec![2, 3]).unwrap()
    }

    /// Difference at least 3, and at least 4 when a multiple of 3 is involved.
    pub fn schur() -> Self {
        Self::new(3, vec![1, 2, 3], vec![3, 3, 4]).unwrap()
    }

    /// Schur's class with `u` marking parts `≡ 0, 1 (mod 3)` and `v` marking
    /// parts `≡ 0, 2 (mod 3)`.
    pub fn schur_refined() -> Self {
        let uv = MarkerSet::new(["u", "v"]);
        let u = MarkerPoly::marker(&uv, "u").unwrap();
        let v = MarkerPoly::marker(&uv, "v").unwrap();
        let weights = vec![u.clone(), v.clone(), u.mul(&v)];
        Self::schur().with_weights(uv, weights).unwrap()
    }

    /// Parts at least 2, and each odd part at least 3 larger than any part
    /// not exceeding it.
    pub fn glasgow() -> Self {
        Self::new(2, vec![3, 2], vec![3, 0]).unwrap()
    }

    /// The six classes used throughout, with their names.
    pub fn named_presets() -> Vec<(&'static str, SipClassSpec)> {
        vec![
            ("natural", Self::natural()),
            ("distinct", Self::distinct()),
            ("rogers-ramanujan", Self::rogers_ramanujan()),
            ("gollnitz-gordon", Self::gollnitz_gordon()),
            ("schur", Self::schur()),
            ("glasgow", Self::glasgow()),
        ]
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn thresholds(&self) -> &[u64] {
        &self.c
    }

    pub fn gaps(&self) -> &[u64] {
        &self.d
    }

    pub fn markers(&self) -> &MarkerSet {
        &self.markers
    }

    /// Zero-based residue slot of a positive part: slot `r-1` for `part ≡ r`.
    pub(crate) fn slot(&self, part: u64) -> usize {
        debug_assert!(part > 0);
        ((part - 1) % self.k) as usize
    }

    pub fn threshold_for(&self, part: u64) -> u64 {
        self.c[self.slot(part)]
    }

    pub fn gap_for(&self, part: u64) -> u64 {
        self.d[self.slot(part)]
    }

    pub fn weight_for(&self, part: u64) -> &MarkerPoly {
        &self.weights[self.slot(part)]
    }

    /// Product of the marker weights of all parts.
    pub fn partition_weight(&self, parts: &[u64]) -> MarkerPoly {
        parts
            .iter()
            .fold(MarkerPoly::one(self.markers.arity()), |acc, &p| {
                acc.mul(self.weight_for(p))
            })
    }

    fn min_gap(&self) -> u64 {
        self.d.iter().copied().min().unwrap_or(0)
    }

    /// Whether `next` may follow `prefix` in a class member.
    pub(crate) fn admits(&self, prefix: &[u64], next: u64) -> bool {
        next >= self.threshold_for(next)
            && prefix
                .last()
                .is_none_or(|&last| next >= last && next - last >= self.gap_for(next))
    }
}

/// Membership in the class described by `spec`.
pub fn in_sip_class(p: &Partition, spec: &SipClassSpec) -> bool {
    let parts = p.parts();
    (0..parts.len()).all(|i| spec.admits(&parts[..i], parts[i]))
}

/// All class members of total at most `total_max`, generated with the
/// residue thresholds and gaps applied while extending each prefix.
pub fn enumerate_class(
    spec: &SipClassSpec,
    total_max: u64,
) -> impl Iterator<Item = Partition> + '_ {
    AscendingParts::new(total_max, spec.min_gap(), move |prefix: &[u64], next| {
        spec.admits(prefix, next)
    })
}
