use num_bigint::BigInt;
use proptest::prelude::*;

use nearcentral::genchar::{connection_coefficient, genchar_strahov_at, genchar_strahov};
use nearcentral::oracle::{enumerate_star_factorizations, Guard, Permutation};
use nearcentral::partitions::{enumerate_marked_partitions, enumerate_partitions};
use nearcentral::starcount::{star_count, star_count_by_cycle_count};
use nearcentral::{MarkedPartition, Partition};

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (2..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

fn marked(max_n: usize) -> impl Strategy<Value = MarkedPartition> {
    (1..=max_n).prop_flat_map(|n| {
        let all = enumerate_marked_partitions(n);
        (0..all.len()).prop_map(move |k| all[k].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip(m in marked(9)) {
        prop_assert_eq!(m.to_string().parse::<MarkedPartition>().unwrap(), m.clone());
        prop_assert_eq!(m.shape().to_string().parse::<Partition>().unwrap(), m.shape().clone());
    }

    #[test]
    fn star_count_depends_only_on_marked_type(pi in permutation(5), r in 0u32..7) {
        let m = pi.marked_type();
        let literal = enumerate_star_factorizations(&pi, r, &Guard::default()).unwrap();
        prop_assert_eq!(star_count(m.shape(), m.mark(), r).unwrap(), BigInt::from(literal));
    }

    #[test]
    fn strahov_depends_only_on_marked_type(pi in permutation(5), k in 0usize..64) {
        let n = pi.n();
        let uppers = enumerate_marked_partitions(n);
        let up = &uppers[k % uppers.len()];
        let m = pi.marked_type();
        prop_assert_eq!(
            genchar_strahov_at(up.shape(), up.mark(), &pi, &Guard::default()).unwrap(),
            genchar_strahov(up.shape(), up.mark(), m.shape(), m.mark()).unwrap()
        );
    }

    #[test]
    fn connection_coefficients_commute(n in 3usize..=5, a in 0usize..64, b in 0usize..64, c in 0usize..64) {
        let all = enumerate_marked_partitions(n);
        let (a, b, c) = (&all[a % all.len()], &all[b % all.len()], &all[c % all.len()]);
        prop_assert_eq!(connection_coefficient(a, b, c).unwrap(), connection_coefficient(b, a, c).unwrap());
    }

    #[test]
    fn star_factorizations_flip_parity(n in 2usize..=7, r in 0u32..10) {
        // Each star transposition is odd, so only classes of parity r are hit.
        for lambda in enumerate_partitions(n) {
            let odd = (n - lambda.len()) % 2 == 1;
            for i in lambda.distinct_parts() {
                let count = star_count(&lambda, i, r).unwrap();
                if odd != (r % 2 == 1) {
                    prop_assert_eq!(count, BigInt::from(0));
                }
            }
        }
    }

    #[test]
    fn cycle_counts_conserve_mass(n in 1usize..=8, r in 0u32..12) {
        let total: BigInt = (1..=n).map(|k| star_count_by_cycle_count(n, k, r).unwrap()).sum();
        prop_assert_eq!(total, BigInt::from(n - 1).pow(r));
    }
}
