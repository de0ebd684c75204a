use num_bigint::BigInt;
use proptest::prelude::*;
use sipq::ncopies::{
    chain_decompose, chain_recompose, enumerate_ncopies, weighted_difference, CopyPart,
    NCopiesPartition,
};
use sipq::partition::{enumerate_partitions, Partition};
use sipq::qfactory::{gaussian_binomial, gaussian_coefficients};
use sipq::series::{MarkerSet, QSeries};
use sipq::sip::{decompose, enumerate_class, in_sip_class, recompose, SipClassSpec};

const T: usize = 12;

fn series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec(-20i64..=20, T + 1).prop_map(|c| QSeries::from_integers(&c, T))
}

fn unit_series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec(-20i64..=20, T).prop_map(|mut c| {
        c.insert(0, 1);
        QSeries::from_integers(&c, T)
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        let one = QSeries::one(&MarkerSet::empty(), T);
        prop_assert_eq!(a.mul(&one), a.clone());
    }

    #[test]
    fn inverses(a in unit_series()) {
        let inv = a.inverse().unwrap();
        prop_assert_eq!(a.mul(&inv), QSeries::one(&MarkerSet::empty(), T));
    }

    #[test]
    fn truncation_is_a_ring_map(a in series(), b in series(), t in 0usize..T) {
        prop_assert_eq!(a.mul(&b).truncate(t), a.truncate(t).mul(&b.truncate(t)));
    }

    #[test]
    fn gaussian_symmetry_and_pascal(a in 1i64..12, b in 0i64..12, step in 1u64..4) {
        prop_assume!(b <= a);
        prop_assert_eq!(gaussian_coefficients(a, b, step), gaussian_coefficients(a, a - b, step));
        // [a, b] = [a-1, b-1] + q^(step*b) [a-1, b]
        let t = 80;
        let lhs = gaussian_binomial(a, b, step, t);
        let rhs = gaussian_binomial(a - 1, b - 1, step, t)
            .add(&gaussian_binomial(a - 1, b, step, t).shift((step as i64 * b) as usize));
        prop_assert_eq!(lhs, rhs);
        // at q = 1 the coefficients sum to the ordinary binomial
        let total: BigInt = gaussian_coefficients(a, b, step).iter().sum();
        let mut binom = BigInt::from(1);
        for i in 0..b {
            binom = binom * (a - i) / (i + 1);
        }
        prop_assert_eq!(total, binom);
    }

    #[test]
    fn weighted_difference_formula(m in 1u64..30, i in 1u64..30, n in 1u64..30, j in 1u64..30) {
        prop_assume!(i <= m && j <= n);
        let a = CopyPart::new(m, i).unwrap();
        let b = CopyPart::new(n, j).unwrap();
        prop_assert_eq!(weighted_difference(&a, &b), m as i64 - n as i64 - i as i64 - j as i64);
    }

    #[test]
    fn copy_part_parse_round_trip(m in 1u64..50, i in 1u64..50, over: bool) {
        prop_assume!(i <= m);
        let mut p = CopyPart::new(m, i).unwrap();
        if over {
            p = p.overlined();
        }
        prop_assert_eq!(p.to_string().parse::<CopyPart>().unwrap(), p);
    }
}

fn presets() -> Vec<SipClassSpec> {
    SipClassSpec::named_presets()
        .into_iter()
        .map(|(_, s)| s)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decompose_round_trips_on_members(which in 0usize..6, pick in any::<prop::sample::Index>()) {
        let spec = &presets()[which];
        let members: Vec<Partition> = enumerate_class(spec, 30).collect();
        let p = pick.get(&members);
        let d = decompose(p, spec).unwrap();
        prop_assert_eq!(&recompose(&d), p);
        prop_assert!(d.padding().iter().all(|x| x % spec.k() == 0));
        prop_assert!(d.padding().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn non_members_are_rejected(which in 0usize..6, pick in any::<prop::sample::Index>()) {
        let spec = &presets()[which];
        let outside: Vec<Partition> = enumerate_partitions(14, |p| !in_sip_class(p, spec)).collect();
        prop_assume!(!outside.is_empty());
        prop_assert!(decompose(pick.get(&outside), spec).is_err());
    }

    #[test]
    fn chain_psi_is_monotone(r in -1i64..=2, pick in any::<prop::sample::Index>()) {
        let all: Vec<NCopiesPartition> = enumerate_ncopies(16, Some(r), |_| true);
        let p = pick.get(&all);
        let (base, psi) = chain_decompose(p, r).unwrap();
        prop_assert!(psi.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(base.successive_differences().iter().all(|&d| d == r));
        prop_assert_eq!(&chain_recompose(&base, &psi, r).unwrap(), p);
        // ψ_(k+1) - ψ_k is the excess of the k-th weighted difference over r
        let diffs = p.successive_differences();
        for k in 0..diffs.len() {
            prop_assert_eq!(psi[k + 1] as i64 - psi[k] as i64, diffs[k] - r);
        }
    }
}
