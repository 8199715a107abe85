use dmx_core::verify::checks::{self, Outcome};
use dmx_core::verify::corpus::{self, Instance};
use dmx_core::verify::{run_shard, select, CorpusCache, CorpusKind, VerifyConfig};
use dmx_core::{DeltaMatroid, Gf2Matrix, GroundSet, Matroid, RibbonGraph, Subset};

fn on_delta(d: &DeltaMatroid) -> Instance {
    Instance::Delta {
        d: d.clone(),
        probe: 0,
    }
}

fn clean(o: &Outcome) -> bool {
    o.applicable && o.failures.is_empty()
}

fn run_over(check: &str, kind: CorpusKind) -> (u64, usize) {
    let c = select(check).unwrap()[0];
    let inst = corpus::build(kind).unwrap().instances;
    let r = run_shard(c, &inst, 0, 1);
    (r.tested, r.counterexamples.len())
}

#[test]
fn min_deletion_on_exhaustive_and_random_corpora() {
    let (tested, bad) = run_over("min-deletion", CorpusKind::AllDelta { max_n: 3 });
    assert!(tested > 0);
    assert_eq!(bad, 0);
    let random = CorpusKind::Random {
        max_n: 6,
        seed: 1,
        count: 1000,
    };
    assert_eq!(run_over("min-deletion", random), (1000, 0));
}

#[test]
fn min_contraction_counterexample_is_detected() {
    let o = checks::min_contraction_counterexample(&on_delta(&checks::min_contraction_witness()));
    assert!(o.hit);
    assert_eq!(
        o.witness.as_deref(),
        Some("(D/1)_min = ({2}, {{2}}) but D_min/1 = ({2}, {{}})")
    );
}

#[test]
fn odd_circuit_on_order_three_symmetric_twists() {
    let (tested, bad) = run_over("odd-circuit", CorpusKind::SymmetricTwists { max_n: 3 });
    assert!(tested > 0);
    assert_eq!(bad, 0);
}

#[test]
fn mobius_loop_has_a_qualifying_circuit() {
    let g = RibbonGraph::from_labels(&[&["a", "b"]], &[("e", "a", "b", true)]).unwrap();
    let d = g.delta_matroid().unwrap();
    assert!(!d.is_even());
    assert_eq!(d.lower_matroid().circuits().as_slice(), [Subset(1)]);
    assert!(clean(&checks::odd_circuit(&on_delta(&d))));
}

#[test]
fn bipartite_loop_complement_examples() {
    // the cycle matroid of a 4-cycle is U_{3,4}
    let c4 = Matroid::uniform(3, 4).unwrap().into_delta();
    assert!(c4.is_bipartite());
    assert!(c4
        .loop_complement(c4.ground().full())
        .unwrap()
        .parity()
        .is_even());
    assert!(clean(&checks::bipartite_loop_complement(&on_delta(&c4))));

    let u23 = Matroid::uniform(2, 3).unwrap().into_delta();
    assert!(!u23.is_bipartite());
    assert!(!u23
        .loop_complement(u23.ground().full())
        .unwrap()
        .parity()
        .is_even());
    assert!(clean(&checks::bipartite_loop_complement(&on_delta(&u23))));
}

#[test]
fn welsh_duality_examples() {
    let u12 = Matroid::uniform(1, 2).unwrap();
    assert!(u12.is_eulerian() && u12.dual().is_bipartite());
    let free = Matroid::free(GroundSet::numbered(1).unwrap());
    assert!(!free.is_eulerian());
    assert_eq!(free.dual().odd_circuit(), Some(Subset(1)));
    for m in [u12, free] {
        assert!(clean(&checks::welsh_duality(&Instance::Matroid(m))));
    }
    assert_eq!(
        run_over("welsh-duality", CorpusKind::BinaryMatroids { max_n: 4 }).1,
        0
    );
}

#[test]
fn twist_decomposition_examples() {
    let m = Matroid::uniform(1, 2).unwrap();
    let d = m.as_delta().twist(Subset(1)).unwrap();
    assert_eq!(d.lower_matroid(), Matroid::rank_zero(m.ground().clone()));
    for a in [Subset::EMPTY, Subset(1)] {
        let o = checks::twist_decomposition(&Instance::Twisted { m: m.clone(), a });
        assert!(clean(&o), "{:?}", o.failures);
    }
    let d0 = m.as_delta().twist(Subset::EMPTY).unwrap();
    assert_eq!(d0.lower_matroid(), m);
    assert_eq!(d0.upper_matroid(), m);
}

#[test]
fn circuit_contraction_with_a_parallel_pair() {
    // columns (1,0), (0,1), (1,1), (1,1): U_{2,3} with 4 parallel to 3
    let m = Gf2Matrix::new(4, vec![0b1101, 0b1110])
        .unwrap()
        .column_matroid()
        .unwrap();
    assert!(m.circuits().contains(Subset(0b0111)));
    let contracted = m.contract_set(Subset(0b1000)).unwrap().circuits();
    // {1,2,3} splits into the loop {3} and the parallel pair {1,2}
    assert!(contracted.contains(Subset(0b100)));
    assert!(contracted.contains(Subset(0b011)));
    assert!(clean(&checks::circuit_contraction(&Instance::Matroid(m))));
}

#[test]
fn converse_of_bipartite_dual_eulerian_fails_on_the_witness() {
    let (m, a) = checks::converse_witness();
    let d = m.as_delta().twist(a).unwrap();
    assert_eq!(d.dual(), d);
    assert!(d.is_eulerian() && !d.is_bipartite());
    let o = checks::bipartite_dual_eulerian_converse(&Instance::Twisted { m, a });
    assert!(o.hit && o.witness.is_some());
}

#[test]
fn characterization_degenerate_twists() {
    for m in corpus::binary_matroids(3).unwrap() {
        let n = m.size();
        for a in [Subset::EMPTY, Subset::full(n)] {
            let o = checks::twist_characterization(&Instance::Twisted { m: m.clone(), a });
            assert!(clean(&o), "{m} {:?}", o.failures);
        }
    }
}

#[test]
fn bipartite_closure_on_all_small_delta_matroids() {
    for name in ["deletion-bipartite", "contraction-bipartite", "lower-bound"] {
        let (_, bad) = run_over(name, CorpusKind::AllDelta { max_n: 4 });
        assert_eq!(bad, 0, "{name}");
    }
}

#[test]
fn lower_bound_with_full_set_is_the_rank() {
    for d in corpus::all_delta_matroids(3).unwrap() {
        let r = d.lower_matroid().rank();
        assert!(d.feasible().iter().all(|f| f.len() >= r));
    }
}

#[test]
fn random_corpus_is_reproducible_and_valid() {
    let a = corpus::random_delta_matroids(6, 9, 300).unwrap();
    let b = corpus::random_delta_matroids(6, 9, 300).unwrap();
    assert_eq!(a.instances, b.instances);
    assert_eq!(a.rejections, b.rejections);
    for (d, _) in &a.instances {
        assert!(DeltaMatroid::new(d.system().clone()).is_ok());
    }
}

#[test]
fn every_check_has_instances_at_default_size() {
    let cfg = VerifyConfig::default();
    let mut cache = CorpusCache::new();
    for c in select("all").unwrap() {
        let inst = cache.instances(c, &cfg).unwrap();
        assert!(run_shard(c, &inst, 0, 1).tested > 0, "{}", c.name);
    }
}
