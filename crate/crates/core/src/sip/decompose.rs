use super::basis::next_in_window;
use super::{in_sip_class, is_basis, BasisPartition, SipClassSpec};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A class member split as basis element plus padding: part `i` is
/// `basis[i] + padding[i]`, where the padding is non-decreasing and every
/// entry is a multiple of `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SipDecomposition {
    basis: BasisPartition,
    padding: Vec<u64>,
}

impl SipDecomposition {
    pub fn new(spec: &SipClassSpec, basis: Vec<u64>, padding: Vec<u64>) -> Result<Self> {
        let basis = BasisPartition::new(basis, spec)
            .ok_or_else(|| Error::InvalidDecomposition("not a basis element".into()))?;
        if basis.parts().len() != padding.len() {
            return Err(Error::InvalidDecomposition(format!(
                "basis has {} parts, padding has {}",
                basis.parts().len(),
                padding.len()
            )));
        }
        if padding.iter().any(|p| p % spec.k() != 0) {
            return Err(Error::InvalidDecomposition(format!(
                "padding entries must be multiples of {}",
                spec.k()
            )));
        }
        if padding.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidDecomposition(
                "padding must be non-decreasing".into(),
            ));
        }
        Ok(SipDecomposition { basis, padding })
    }

    pub fn basis(&self) -> &BasisPartition {
        &self.basis
    }

    pub fn padding(&self) -> &[u64] {
        &self.padding
    }
}

/// Split a class member into its basis element and padding.
///
/// Built left to right: `β_1 = c_r` for the residue of the first part, and
/// each later `β_i` is the unique value of the same residue as `p_i` in
/// `[β_{i-1} + d_r, β_{i-1} + d_r + k)`.
pub fn decompose(p: &Partition, spec: &SipClassSpec) -> Result<SipDecomposition> {
    if !in_sip_class(p, spec) {
        return Err(Error::NotInClass(p.parts().to_vec()));
    }
    let mut basis: Vec<u64> = Vec::with_capacity(p.len());
    let mut padding: Vec<u64> = Vec::with_capacity(p.len());
    for &part in p.parts() {
        let beta = match basis.last() {
            None => spec.threshold_for(part),
            Some(&prev) => next_in_window(spec, prev, part),
        };
        // membership guarantees part >= beta and the padding is non-decreasing
        debug_assert!(part >= beta && (part - beta) % spec.k() == 0);
        basis.push(beta);
        padding.push(part - beta);
    }
    debug_assert!(is_basis(&basis, spec));
    debug_assert!(padding.windows(2).all(|w| w[0] <= w[1]));
    Ok(SipDecomposition {
        basis: BasisPartition::from_checked(basis),
        padding,
    })
}

/// Reassemble `basis[i] + padding[i]`.
pub fn recompose(d: &SipDecomposition) -> Partition {
    let parts = d
        .basis
        .parts()
        .iter()
        .zip(&d.padding)
        .map(|(b, p)| b + p)
        .collect();
    Partition::from_sorted(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sip::enumerate_class;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_part_minimal() {
        let gg = SipClassSpec::gollnitz_gordon();
        let d = decompose(&p(&[1]), &gg).unwrap();
        assert_eq!(d.basis().parts(), &[1]);
        assert_eq!(d.padding(), &[0]);
    }

    #[test]
    fn natural_class_uses_all_ones() {
        let spec = SipClassSpec::natural();
        let d = decompose(&p(&[1, 3, 3, 7]), &spec).unwrap();
        assert_eq!(d.basis().parts(), &[1, 1, 1, 1]);
        assert_eq!(d.padding(), &[0, 2, 2, 6]);
    }

    #[test]
    fn gollnitz_decomposition_matches_brute_force() {
        // search all (basis, padding) pairs for 3 + 8
        let gg = SipClassSpec::gollnitz_gordon();
        let target = p(&[3, 8]);
        let mut hits = Vec::new();
        for b in crate::sip::enumerate_basis(&gg, 2, 11) {
            for a in (0..=10).step_by(2) {
                for c in (a..=10).step_by(2) {
                    let parts = vec![b.parts()[0] + a, b.parts()[1] + c];
                    if parts == target.parts() {
                        hits.push((b.parts().to_vec(), vec![a, c]));
                    }
                }
            }
        }
        assert_eq!(hits.len(), 1);
        let d = decompose(&target, &gg).unwrap();
        assert_eq!((d.basis().parts().to_vec(), d.padding().to_vec()), hits[0]);
        assert_eq!(d.basis().parts(), &[1, 4]);
        assert_eq!(d.padding(), &[2, 4]);
    }

    #[test]
    fn recompose_examples() {
        let rr = SipClassSpec::rogers_ramanujan();
        let d = SipDecomposition::new(&rr, vec![1, 3], vec![0, 2]).unwrap();
        let q = recompose(&d);
        assert_eq!(q, p(&[1, 5]));
        assert!(in_sip_class(&q, &rr));
        let zero = SipDecomposition::new(&rr, vec![1, 3, 5], vec![0, 0, 0]).unwrap();
        assert_eq!(recompose(&zero).parts(), &[1, 3, 5]);
    }

    #[test]
    fn invalid_inputs() {
        let rr = SipClassSpec::rogers_ramanujan();
        assert_eq!(
            decompose(&p(&[2, 3]), &rr),
            Err(Error::NotInClass(vec![2, 3]))
        );
        assert!(SipDecomposition::new(&rr, vec![1, 4], vec![0, 0]).is_err());
        assert!(SipDecomposition::new(&rr, vec![1, 3], vec![2, 0]).is_err());
        assert!(SipDecomposition::new(&rr, vec![1, 3], vec![0]).is_err());
        let gg = SipClassSpec::gollnitz_gordon();
        assert!(SipDecomposition::new(&gg, vec![1, 3], vec![0, 1]).is_err());
    }

    #[test]
    fn round_trip_on_members() {
        for (name, spec) in SipClassSpec::named_presets() {
            for q in enumerate_class(&spec, 25) {
                let d = decompose(&q, &spec).unwrap();
                assert_eq!(recompose(&d), q, "{name}");
                let again =
                    SipDecomposition::new(&spec, d.basis().parts().to_vec(), d.padding().to_vec())
                        .unwrap();
                assert_eq!(again, d);
            }
        }
    }
}
