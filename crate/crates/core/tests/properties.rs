use dmx_core::gf2::{is_binary_delta, is_binary_delta_exhaustive};
use dmx_core::verify::corpus::random_delta_matroids_of_size;
use dmx_core::{DeltaMatroid, GroundSet, SetSystem, Subset};
use proptest::prelude::*;

fn delta(max_n: usize) -> impl Strategy<Value = DeltaMatroid> {
    (0..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        if n == 0 {
            return DeltaMatroid::numbered(0, &[&[]]).unwrap();
        }
        random_delta_matroids_of_size(n, seed, 1).unwrap().instances[0]
            .0
            .clone()
    })
}

fn with_sets(max_n: usize) -> impl Strategy<Value = (DeltaMatroid, Subset, Subset)> {
    (delta(max_n), any::<u32>(), any::<u32>()).prop_map(|(d, a, b)| {
        let full = d.ground().full().0;
        (d, Subset(a & full), Subset(b & full))
    })
}

fn system(max_n: usize) -> impl Strategy<Value = SetSystem> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u32..1 << n, 0..12).prop_map(move |raw| {
            let members: Vec<Subset> = raw.into_iter().map(Subset).collect();
            SetSystem::new(GroundSet::numbered(n).unwrap(), members).unwrap()
        })
    })
}

/// Symmetric exchange, straight from the definition.
fn naive_exchange(s: &SetSystem) -> bool {
    let n = s.size();
    s.iter().all(|x| {
        s.iter().all(|y| {
            (0..n)
                .filter(|&u| x.symmetric_difference(y).contains(u))
                .all(|u| {
                    (0..n).any(|v| {
                        let step = if v == u {
                            x.toggle(u)
                        } else {
                            x.toggle(u).toggle(v)
                        };
                        x.symmetric_difference(y).contains(v) && s.contains(step)
                    })
                })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn twists_compose_and_stay_valid((d, a, b) in with_sets(6)) {
        let da = d.twist(a).unwrap();
        prop_assert!(DeltaMatroid::new(da.system().clone()).is_ok());
        prop_assert_eq!(da.twist(b).unwrap(), d.twist(a.symmetric_difference(b)).unwrap());
        prop_assert_eq!(da.twist(a).unwrap(), d.clone());
        prop_assert_eq!(d.dual().dual(), d);
    }

    #[test]
    fn loop_complement_is_an_involution((d, a, _) in with_sets(6)) {
        let once = d.system().loop_complement(a).unwrap();
        prop_assert_eq!(once.loop_complement(a).unwrap(), d.system().clone());
    }

    #[test]
    fn minors_agree_with_twists((d, x, _) in with_sets(6)) {
        prop_assert_eq!(d.delete_set(x).unwrap(), d.dual().contract_set(x).unwrap().dual());
        prop_assert_eq!(d.contract_set(x).unwrap(), d.twist(x).unwrap().delete_set(x).unwrap());
        prop_assert!(DeltaMatroid::new(d.delete_set(x).unwrap().into_system()).is_ok());
    }

    #[test]
    fn twisting_preserves_parity((d, a, _) in with_sets(6)) {
        prop_assert_eq!(d.twist(a).unwrap().parity(), d.parity());
    }

    #[test]
    fn lower_matroid_bases_are_the_smallest_sets(d in delta(6)) {
        let lower = d.lower_matroid();
        let k = d.feasible().iter().map(|f| f.len()).min().unwrap();
        let expect: Vec<Subset> = d.feasible().iter().copied().filter(|f| f.len() == k).collect();
        prop_assert_eq!(lower.bases().members(), expect.as_slice());
    }

    #[test]
    fn exchange_check_matches_definition(s in system(4)) {
        let fast = DeltaMatroid::new(s.clone()).is_ok();
        prop_assert_eq!(fast, s.is_proper() && naive_exchange(&s));
    }

    #[test]
    fn storage_is_canonical_and_membership_consistent(s in system(5), probe in any::<u32>()) {
        let m = s.members();
        prop_assert!(m.windows(2).all(|w| w[0].canonical_cmp(w[1]).is_lt()));
        let probe = Subset(probe & s.ground().full().0);
        prop_assert_eq!(s.contains(probe), m.contains(&probe));
    }

    #[test]
    fn compress_expand_round_trip(x in any::<u32>(), keep in any::<u32>()) {
        let (x, keep) = (Subset(x & 0xff_ffff), Subset(keep & 0xff_ffff));
        let c = x.intersection(keep).compress(keep);
        prop_assert_eq!(c.len(), x.intersection(keep).len());
        prop_assert_eq!(c.expand(keep), x.intersection(keep));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn binary_shortcut_matches_exhaustive_search(d in delta(3)) {
        prop_assert_eq!(is_binary_delta(&d).unwrap().verdict, is_binary_delta_exhaustive(&d).unwrap());
    }
}
