use coxkrew::partitions::*;
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=6, 0..=6).prop_map(Partition::from_unsorted)
}

fn bipartition() -> impl Strategy<Value = Bipartition> {
    (partition(), partition()).prop_map(|(a, b)| Bipartition::new(a, b))
}

fn partition_count(n: u32) -> usize {
    // p(n) by the standard recurrence on largest part
    let n = n as usize;
    let mut p = vec![0usize; n + 1];
    p[0] = 1;
    for k in 1..=n {
        for m in k..=n {
            p[m] += p[m - k];
        }
    }
    p[n]
}

#[test]
fn enumeration_sizes() {
    for n in 0..=10 {
        assert_eq!(enumerate_partitions(n).len(), partition_count(n));
        let want: usize = (0..=n).map(|k| partition_count(k) * partition_count(n - k)).sum();
        let bips = enumerate_bipartitions(n);
        assert_eq!(bips.len(), want);
        assert!(bips.iter().all(|b| b.size() == n));
    }
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
        prop_assert_eq!(p.conjugate().len() as u32, p.part(1));
        prop_assert_eq!(p.weighted_size(), p.weighted_size_via_conjugate());
    }

    #[test]
    fn display_round_trip(b in bipartition()) {
        prop_assert_eq!(b.to_string().parse::<Bipartition>().unwrap(), b.clone());
        prop_assert_eq!(b.first.to_string().parse::<Partition>().unwrap(), b.first.clone());
    }

    #[test]
    fn pair_stats_invariants(b in bipartition()) {
        let s = pair_stats(&b);
        prop_assert_eq!(s.big_l + s.total_mult(), s.l);
        prop_assert_eq!(s.l, b.level_length());
        prop_assert!(s.hm_case.keys().eq(s.m.keys()));
        let (mu, nu) = (&b.first, &b.second);
        prop_assert_eq!(
            s.z,
            2 * mu.weighted_size() + 2 * nu.weighted_size() + nu.size() as u64
        );
        let d: u64 = s.m.values().map(|&k| k as u64 * (k as u64 + 1)).sum();
        prop_assert_eq!(s.d, d);
    }

    #[test]
    fn multiplicities_rebuild_partition(p in partition()) {
        prop_assert_eq!(Partition::from_multiplicities(&p.multiplicities()), p.clone());
        let total: u32 = p.multiplicities().values().sum();
        prop_assert_eq!(total as usize, p.len());
    }
}
