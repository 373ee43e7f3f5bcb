use std::collections::{BTreeMap, BTreeSet};

use coxkrew::kreweras::kreweras_bc_closed;
use coxkrew::partitions::{enumerate_bipartitions, pair_stats, Bipartition};
use coxkrew::qlaurent::q_binomial;
use coxkrew::springer_bc::*;
use num_bigint::BigInt;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn iota_is_a_bijection_and_inverse_matches_search() {
    for n in 1..=6 {
        let omegas = enumerate_omega(n);
        let by_image: BTreeMap<Bipartition, OmegaPair> = omegas
            .iter()
            .map(|w| (iota(w).unwrap(), w.clone()))
            .collect();
        assert_eq!(by_image.len(), omegas.len(), "n={n}: iota not injective");
        let all: BTreeSet<Bipartition> = enumerate_bipartitions(n).into_iter().collect();
        assert_eq!(by_image.keys().cloned().collect::<BTreeSet<_>>(), all);
        for (b, w) in &by_image {
            assert_eq!(&iota_inverse(b), w, "{b}");
            assert_eq!(w.lambda().len() / 2, pair_stats(b).l, "{w}");
        }
    }
}

#[test]
fn multiplicities_follow_critical_values() {
    for n in 1..=6 {
        for w in enumerate_omega(n) {
            let b = iota(&w).unwrap();
            let stats = pair_stats(&b);
            let crit = critical_values(&w);
            for (r, m) in w.lambda().multiplicities() {
                if m % 2 == 1 {
                    assert!(crit.contains(&r), "{w}: odd multiplicity at {r}");
                }
                let drop = match (crit.contains(&r), m % 2) {
                    (false, _) => 0,
                    (true, 1) => 1,
                    (true, _) => 2,
                };
                assert_eq!(stats.mult(r), (m - drop) / 2, "{w} at {r}");
            }
            let (tilde, induced) = split(&w).unwrap();
            assert_eq!(
                tilde.lambda().union(induced.lambda()),
                w.lambda().clone(),
                "{w}"
            );
            assert!(critical_values(&induced).is_empty());
        }
    }
}

#[test]
fn positivity_conditions_agree() {
    for n in 1..=6 {
        for w in enumerate_omega(n) {
            let b = iota(&w).unwrap();
            let crit = critical_values(&w);
            let c1 = pair_stats(&b).big_l == 0;
            let c2 = crit.len() <= 1 && crit.iter().all(|&r| w.lambda().multiplicity(r) % 2 == 1);
            let k = b.second.len() + 1;
            let c4 = (1..=k).all(|i| b.first.part(i) == b.first.part(1));
            assert!(c1 == c2 && c2 == c4, "{w} -> {b}: {c1} {c2} {c4}");
        }
    }
}

#[test]
fn collapse_and_phi_c() {
    for n in 1..=6 {
        let mut images: BTreeMap<_, Bipartition> = BTreeMap::new();
        for b in enumerate_bipartitions(n) {
            let c = collapse_c(&b);
            assert_eq!(collapse_c(&c), c, "{b}");
            assert_eq!(pair_stats(&c).l, pair_stats(&b).l, "{b}");
            let lam = phi_c(&b);
            assert_eq!(lam.size(), 2 * n);
            assert_eq!(lam.len() / 2, pair_stats(&b).l, "{b}");
            if let Some(prev) = images.insert(phi_c(&c), c.clone()) {
                assert_eq!(prev, c, "phi_c not injective on collapsed pairs");
            }
        }
    }
}

#[test]
fn orbit_counts() {
    for n in 1..=6 {
        for b in enumerate_bipartitions(n) {
            let p = orbit_count_exotic(&b);
            assert_eq!(p, orbit_count_exotic_sun(&b), "{b}");
            assert!(!p.has_negative_exponent());
            assert!(p.leading_term().unwrap().1 > &BigInt::from(0));
        }
        for k in 0..=n {
            assert!(level_stratum_sum_check(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn exterior_powers() {
    for n in 1..=5 {
        for b in enumerate_bipartitions(n) {
            let l = pair_stats(&b).l as u64;
            let ext = exterior_gen_poly(&b);
            let rev = exterior_gen_poly_reversed(&b);
            assert_eq!(ext.len(), n as usize + 1);
            for i in 0..=n as usize {
                let want = if (i as u64) <= l { binomial(l, i as u64) } else { 0 };
                assert_eq!(ext[i].eval_at_one(), BigInt::from(want), "{b} i={i}");
                assert_eq!(rev[n as usize - i], ext[i]);
                // q-binomial in q^2 with the shift q^{i^2}
                let q = q_binomial(l as u32, i as u32, 2).shift((i * i) as i64);
                assert_eq!(ext[i], if (i as u64) <= l { q } else { Default::default() });
            }
        }
    }
}

#[test]
fn orbit_route_matches_closed_form() {
    for n in 1..=4 {
        for b in enumerate_bipartitions(n) {
            for t in (1..=11).step_by(2) {
                assert!(kreweras_bc_closed(&b, t).unwrap().equals(&kreweras_via_orbit(&b, t)));
            }
        }
    }
}
