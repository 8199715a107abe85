//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines always reach the output; exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use dmx::runner;
use dmx_core::verify::corpus::{self, Instance};
use dmx_core::verify::{checks, run_shard, select, CorpusKind, VerificationReport, VerifyConfig};
use dmx_core::Subset;

type Verdict = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Verdict);

const SHARDS: usize = 4;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Runs the named check over explicit corpora, sharded across threads.
fn run_on(name: &str, kinds: &[CorpusKind], extra: Vec<Instance>) -> VerificationReport {
    let check = select(name).expect("known check")[0];
    let mut instances = Vec::new();
    for &k in kinds {
        instances.extend(corpus::build(k).expect("corpus").instances);
    }
    for w in extra {
        if !instances.contains(&w) {
            instances.push(w);
        }
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..SHARDS)
            .map(|k| {
                let instances = &instances;
                s.spawn(move || run_shard(check, instances, k, SHARDS))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap())
            .reduce(VerificationReport::merge)
            .unwrap()
    })
}

fn clean(r: &VerificationReport) -> Result<(), String> {
    ensure(
        r.counterexamples.is_empty(),
        format!(
            "{}: {} counterexamples, first: {:?}",
            r.name,
            r.counterexamples.len(),
            r.counterexamples.first()
        ),
    )?;
    ensure(r.tested > 0, format!("{}: nothing tested", r.name))
}

fn witness(r: &VerificationReport) -> Result<(), String> {
    clean(r)?;
    ensure(
        r.passed(),
        format!("{}: documented witness not found", r.name),
    )
}

fn criterion_1() -> Verdict {
    // (a)
    let d = checks::min_contraction_witness();
    let lhs = d.contract(0).unwrap().lower_matroid().to_string();
    let rhs = d
        .lower_matroid()
        .contract_set(Subset(1))
        .unwrap()
        .to_string();
    ensure(lhs == "({2}, {{2}})", format!("(D/1)_min = {lhs}"))?;
    ensure(rhs == "({2}, {{}})", format!("D_min/1 = {rhs}"))?;
    // (b)
    let d = checks::non_binary_witness();
    ensure(!d.is_even(), "witness is not odd")?;
    ensure(
        !dmx_core::gf2::is_binary_delta(&d).unwrap().verdict,
        "witness is binary",
    )?;
    let circuits: Vec<String> = d
        .lower_matroid()
        .circuits()
        .iter()
        .map(|c| d.ground().show(c))
        .collect();
    ensure(
        circuits == ["{1}", "{2}", "{3}"],
        format!("circuits {circuits:?}"),
    )?;
    for i in 0..3 {
        let r = d.restrict(Subset::singleton(i)).unwrap();
        ensure(
            r.to_string() == format!("({{{}}}, {{{{}}}})", i + 1),
            format!("D|{} = {r}", i + 1),
        )?;
    }
    // (c)
    let (m, a) = checks::converse_witness();
    let d = m.as_delta().twist(a).unwrap();
    ensure(
        d.to_string() == "({1,2}, {{}, {1,2}})",
        format!("M*1 = {d}"),
    )?;
    ensure(d.dual() == d, "D* != D")?;
    ensure(d.dual().is_eulerian(), "D* not Eulerian")?;
    ensure(!d.is_bipartite(), "D bipartite")?;
    Ok(format!(
        "(D/1)_min = {lhs} != D_min/1 = {rhs}; C(D_min) = {{{}}}; D* = D = {d}",
        circuits.join(", ")
    ))
}

fn criterion_2() -> Verdict {
    let r = run_on(
        "bipartite-loop-complement",
        &[CorpusKind::SymmetricTwists { max_n: 4 }],
        vec![],
    );
    clean(&r)?;
    let total = corpus::symmetric_twists(4).unwrap().len();
    Ok(format!(
        "{} even of {total} distinct order-4 twists, 0 counterexamples",
        r.tested
    ))
}

fn criterion_3() -> Verdict {
    let kinds = [CorpusKind::BinaryMatroidTwists { max_n: 5 }];
    let implication = run_on("bipartite-dual-eulerian", &kinds, vec![]);
    clean(&implication)?;
    let characterization = run_on("twist-characterization", &kinds, vec![]);
    clean(&characterization)?;
    let (m, a) = checks::converse_witness();
    let converse = run_on(
        "bipartite-dual-eulerian-converse",
        &kinds,
        vec![Instance::Twisted { m, a }],
    );
    witness(&converse)?;
    Ok(format!(
        "{} (M, A) pairs, {} bipartite, 0 counterexamples; converse fails on {} pairs incl. {}",
        characterization.tested,
        implication.tested,
        converse.witness_hits,
        converse.witnesses[0].instance
    ))
}

fn criterion_4() -> Verdict {
    let r = run_on(
        "odd-circuit",
        &[CorpusKind::SymmetricTwists { max_n: 4 }],
        vec![],
    );
    clean(&r)?;
    let w = run_on(
        "odd-circuit-non-binary",
        &[],
        vec![Instance::Delta {
            d: checks::non_binary_witness(),
            probe: 0,
        }],
    );
    witness(&w)?;
    Ok(format!(
        "{} binary instances, both directions hold; non-binary witness fails forward direction",
        r.tested
    ))
}

fn criterion_5() -> Verdict {
    let r = run_on(
        "welsh-duality",
        &[CorpusKind::BinaryMatroids { max_n: 5 }],
        vec![],
    );
    clean(&r)?;
    Ok(format!("{} binary matroids, 100% agreement", r.tested))
}

fn criterion_6() -> Verdict {
    let kinds = [
        CorpusKind::AllDelta { max_n: 3 },
        CorpusKind::Random {
            max_n: 6,
            seed: 2024,
            count: 10_000,
        },
    ];
    let names = [
        "twist-group-law",
        "dual-involution",
        "contraction-via-twist",
        "deletion-via-dual",
        "loop-complement-involution",
        "loop-complement-interval",
        "minor-order-independence",
        "twist-parity",
        "min-deletion",
        "lower-bound",
    ];
    let mut tested = 0;
    for name in names {
        let r = run_on(name, &kinds, vec![]);
        clean(&r)?;
        tested += r.tested;
    }
    Ok(format!(
        "{} identities, {tested} instance checks, 0 violations",
        names.len()
    ))
}

fn criterion_7() -> Verdict {
    let graphs = corpus::ribbon_corpus().unwrap();
    ensure(graphs.len() >= 10, "fewer than 10 ribbon graphs")?;
    ensure(
        graphs.iter().all(|(_, g)| g.edge_count() <= 5),
        "ribbon graph with more than 5 edges",
    )?;
    let plane = graphs
        .iter()
        .filter(|(n, _)| n.starts_with("plane-"))
        .count();
    let torus = graphs
        .iter()
        .filter(|(n, _)| n.starts_with("torus-"))
        .count();
    let nonorientable = graphs.iter().filter(|(_, g)| !g.is_orientable()).count();
    ensure(
        plane > 0 && torus > 0 && nonorientable > 0,
        "missing a surface type",
    )?;
    let kinds = [CorpusKind::Ribbon];
    for name in [
        "ribbon-parity-orientability",
        "ribbon-petrie-bipartite",
        "ribbon-bipartite-dual-eulerian",
    ] {
        clean(&run_on(name, &kinds, vec![]))?;
    }
    let converse = run_on("ribbon-converse-witness", &kinds, vec![]);
    witness(&converse)?;
    Ok(format!(
        "{} graphs ({plane} plane, {torus} torus, {nonorientable} non-orientable); first one-way witness: {}",
        graphs.len(),
        converse.witnesses[0].instance
    ))
}

fn dmx(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_dmx"))
        .args(args)
        .env_remove("DMX_SEED")
        .output()
        .unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().unwrap(),
    )
}

fn criterion_8() -> Verdict {
    let base = ["verify", "--suite", "all", "--max-n", "3", "--seed", "7"];
    let (first, code) = dmx(&base);
    ensure(code == 0, format!("exit code {code}"))?;
    let (second, _) = dmx(&base);
    ensure(first == second, "repeated runs differ")?;
    let sharded_args: Vec<&str> = base.iter().copied().chain(["--shards", "4"]).collect();
    let (sharded, _) = dmx(&sharded_args);
    ensure(
        sharded == first,
        "4-shard report differs from 1-shard report",
    )?;
    let cfg = VerifyConfig {
        max_n: 3,
        seed: 7,
        random_count: 1000,
    };
    let all = select("all").unwrap();
    let one = runner::run(&all, &cfg, 1).unwrap();
    let four = runner::run(&all, &cfg, 4).unwrap();
    for (a, b) in one.reports.iter().zip(&four.reports) {
        ensure(
            (a.tested, &a.counterexamples, a.witness_hits)
                == (b.tested, &b.counterexamples, b.witness_hits),
            format!("{}: totals differ between 1 and 4 shards", a.name),
        )?;
    }
    Ok(format!(
        "{} report bytes identical across 2 runs and 1 vs 4 shards",
        first.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            1,
            "documented witnesses",
            Duration::from_secs(1),
            criterion_1,
        ),
        (
            2,
            "bipartite iff D+E even",
            Duration::from_secs(60),
            criterion_2,
        ),
        (
            3,
            "twisted binary matroids",
            Duration::from_secs(300),
            criterion_3,
        ),
        (4, "odd circuits", Duration::from_secs(60), criterion_4),
        (
            5,
            "Eulerian / dual bipartite / parity",
            Duration::from_secs(60),
            criterion_5,
        ),
        (
            6,
            "operation calculus",
            Duration::from_secs(300),
            criterion_6,
        ),
        (7, "ribbon corpus", Duration::from_secs(10), criterion_7),
        (8, "determinism", Duration::from_secs(300), criterion_8),
    ];
    let mut failed = 0;
    for (id, title, limit, f) in criteria {
        let start = Instant::now();
        let verdict = f();
        let took = start.elapsed();
        let (ok, detail) = match verdict {
            Ok(d) if took <= limit => (true, d),
            Ok(d) => (false, format!("{d}; took {took:.2?}, limit {limit:?}")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {id} {}: {title} [{took:.2?} / {limit:?}] {detail}",
            if ok { "PASS" } else { "FAIL" }
        );
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
