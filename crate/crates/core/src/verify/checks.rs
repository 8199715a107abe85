//! One function per statement under test. Each takes a single instance and
//! reports whether the statement applied, any violations, and whether the
//! instance is an expected or documented counterexample.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::corpus::{permutations, Instance};
use crate::delta::{exchange_violation, DeltaMatroid};
use crate::gf2::{find_binary_representation, is_binary_delta, reconstruct_candidate};
use crate::matroid::Matroid;
use crate::ribbon::RibbonGraph;
use crate::subset::Subset;
use crate::system::{MinorStep, SetSystem};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub applicable: bool,
    pub failures: Vec<String>,
    /// The instance shows the expected failure.
    pub hit: bool,
    /// The instance is a documented witness.
    pub witness: Option<String>,
}

impl Outcome {
    fn skip() -> Outcome {
        Outcome::default()
    }

    fn tested() -> Outcome {
        Outcome {
            applicable: true,
            ..Outcome::default()
        }
    }

    fn fail(&mut self, msg: String) {
        self.failures.push(msg);
    }

    fn require(&mut self, cond: bool, msg: impl FnOnce() -> String) {
        if !cond {
            self.failures.push(msg());
        }
    }
}

/// `({1,2}, {∅, {1,2}})`: contraction does not commute with taking the lower matroid.
pub fn min_contraction_witness() -> DeltaMatroid {
    DeltaMatroid::numbered(2, &[&[], &[1, 2]]).expect("valid")
}

/// `({1,2,3}, {∅, {1,2}, {2,3}, {1,3}, {1,2,3}})`, a minimal non-binary delta-matroid.
pub fn non_binary_witness() -> DeltaMatroid {
    DeltaMatroid::numbered(3, &[&[], &[1, 2], &[2, 3], &[1, 3], &[1, 2, 3]]).expect("valid")
}

/// `M = U_{1,2}` twisted by `{1}`: the dual is Eulerian but the twist is not bipartite.
pub fn converse_witness() -> (Matroid, Subset) {
    (
        Matroid::numbered(2, &[&[1], &[2]]).expect("valid"),
        Subset(0b1),
    )
}

/// All subsets for small ground sets, otherwise `k` seeded draws.
fn probe_subsets(n: usize, probe: u64, k: usize) -> Vec<Subset> {
    if n <= 4 {
        return Subset::full(n).subsets().collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(probe);
    (0..k)
        .map(|_| Subset(rng.next_u32() & Subset::full(n).0))
        .collect()
}

fn show(d: &DeltaMatroid, s: Subset) -> String {
    d.ground().show(s)
}

fn delta(inst: &Instance) -> Option<(&DeltaMatroid, u64)> {
    match inst {
        Instance::Delta { d, probe } => Some((d, *probe)),
        _ => None,
    }
}

// ---- operation calculus ----

pub fn twist_group_law(inst: &Instance) -> Outcome {
    let Some((d, probe)) = delta(inst) else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    let n = d.size();
    let sets = probe_subsets(n, probe, 6);
    let partners = probe_subsets(n, probe.rotate_left(17), 6);
    for &a in &sets {
        let da = d.twist(a).expect("in range");
        out.require(exchange_violation(da.system()).is_none(), || {
            format!("D*{} is not a delta-matroid", show(d, a))
        });
        out.require(da.twist(a).expect("in range") == *d, || {
            format!("(D*{0})*{0} != D", show(d, a))
        });
        for &b in &partners {
            let lhs = da.twist(b).expect("in range");
            let rhs = d.twist(a.symmetric_difference(b)).expect("in range");
            out.require(lhs == rhs, || {
                format!("(D*{})*{} != D*(AΔB)", show(d, a), show(d, b))
            });
        }
    }
    out
}

pub fn dual_involution(inst: &Instance) -> Outcome {
    let Some((d, _)) = delta(inst) else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    let dual = d.dual();
    out.require(dual.dual() == *d, || String::from("D** != D"));
    out.require(
        dual == d.twist(d.ground().full()).expect("in range"),
        || String::from("D* != D*E"),
    );
    out
}

pub fn contraction_via_twist(inst: &Instance) -> Outcome {
    let Some((d, _)) = delta(inst) else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    for e in 0..d.size() {
        let te = d.twist(Subset::singleton(e)).expect("in range");
        let label = d.ground().label(e);
        out.require(d.contract(e).unwrap() == te.delete(e).unwrap(), || {
            format!("D/{label} != (D*{label})\\{label}")
        });
        out.require(d.delete(e).unwrap() == te.contract(e).unwrap(), || {
            format!("D\\{label} != (D*{label})/{label}")
        });
    }
    out
}

pub fn deletion_via_dual(inst: &Instance) -> Outcome {
    let Some((d, probe)) = delta(inst) else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    for x in probe_subsets(d.size(), probe, 6) {
        let lhs = d.delete_set(x).unwrap();
        let rhs = d.dual().contract_set(x).unwrap().dual();
        out.require(lhs == rhs, || {
            format!("D\\X != (D*/X)* for X={}", show(d, x))
        });
    }
    out
}

pub fn loop_complement_involution(inst: &Instance) -> Outcome {
    let Some((d, probe)) = delta(inst) else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    let n = d.size();
    let s = d.system();
    for e in 0..n {
        let e1 = Subset::singleton(e);
        let twice = s.loop_complement(e1).unwrap().loop_complement(e1).unwrap();
        out.require(twice == *s, || {
            format!("(D+{0})+{0} != D", d.ground().label(e))
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(probe ^ 0x5eed);
    let pairs: Vec<(usize, usize)> = if n <= 4 {
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect()
    } else {
        (0..6)
            .map(|_| ((rng.next_u32() as usize) % n, (rng.next_u32() as usize) % n))
            .collect()
    };
    for (a, b) in pairs {
        let (sa, sb) = (Subset::singleton(a), Subset::singleton(b));
        let ab = s.loop_complement(sa).unwrap().loop_complement(sb).unwrap();
        let ba = s.loop_complement(sb).unwrap().loop_complement(sa).unwrap();
        out.require(ab == ba, || {
            format!(
                "(D+{0})+{1} != (D+{1})+{0}",
                d.ground().label(a),
                d.ground().label(b)
            )
        });
    }
    out
}

/// `Y ∈ F(D+X)` iff an odd number of feasible `Z` satisfy `Y - X ⊆ Z ⊆ Y`.
fn interval_rule(d: &DeltaMatroid, x: Subset, y: Subset) -> bool {
    let lower = y.difference(x);
    d.feasible()
        .iter()
        .filter(|z| lower.is_subset_of(**z) && z.is_subset_of(y))
        .count()
        % 2
        == 1
}

pub fn loop_complement_interval(inst: &Instance) -> Outcome {
    let Some((d, probe)) = delta(inst) else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    for x in probe_subsets(d.size(), probe, 4) {
        let lc = d.system().loop_complement(x).unwrap();
        for y in d.ground().full().subsets() {
            if lc.contains(y) != interval_rule(d, x, y) {
                out.fail(format!(
                    "membership of {} in D+{} disagrees with the interval rule",
                    show(d, y),
                    show(d, x)
                ));
                break;
            }
        }
    }
    out
}

pub fn minor_order_independence(inst: &Instance) -> Outcome {
    let Some((d, probe)) = delta(inst) else {
        return Outcome::skip();
    };
    let n = d.size();
    if n > 5 {
        return Outcome::skip();
    }
    let mut out = Outcome::tested();
    let pairs: Vec<(Subset, Subset)> = if n <= 3 {
        // every disjoint (X, Y): each element deleted, contracted or kept
        (0..3u32.pow(n as u32))
            .map(|mut code| {
                let (mut x, mut y) = (Subset::EMPTY, Subset::EMPTY);
                for e in 0..n {
                    match code % 3 {
                        1 => x = x.with(e),
                        2 => y = y.with(e),
                        _ => {}
                    }
                    code /= 3;
                }
                (x, y)
            })
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(probe ^ 0x3141);
        (0..3)
            .map(|_| {
                let x = Subset(rng.next_u32() & Subset::full(n).0);
                let y = Subset(rng.next_u32() & Subset::full(n).0).difference(x);
                (x, y)
            })
            .collect()
    };
    for (x, y) in pairs {
        let target = d.minor(x, y).unwrap();
        let elems: Vec<usize> = x.union(y).iter().collect();
        for perm in permutations(elems.len()) {
            let steps: Vec<(MinorStep, &str)> = perm
                .iter()
                .map(|&i| {
                    let e = elems[i];
                    let step = if x.contains(e) {
                        MinorStep::Delete
                    } else {
                        MinorStep::Contract
                    };
                    (step, d.ground().label(e))
                })
                .collect();
            let got = d.system().minor_sequence(&steps).unwrap();
            if got != *target.system() {
                out.fail(format!(
                    "D\\{}/{} depends on the order {:?}",
                    show(d, x),
                    show(d, y),
                    steps
                ));
                break;
            }
        }
    }
    out
}

pub fn twist_parity(inst: &Instance) -> Outcome {
    let Some((d, probe)) = delta(inst) else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    for a in probe_subsets(d.size(), probe, 6) {
        out.require(d.twist(a).unwrap().parity() == d.parity(), || {
            format!("parity changes under twist by {}", show(d, a))
        });
    }
    out
}

// ---- lower matroids ----

pub fn min_deletion(inst: &Instance) -> Outcome {
    let Some((d, _)) = delta(inst) else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    let lower = d.lower_matroid();
    for e in 0..d.size() {
        let s = Subset::singleton(e);
        let lhs = d.delete(e).unwrap().lower_matroid();
        let rhs = lower.delete_set(s).unwrap();
        out.require(lhs == rhs, || {
            format!(
                "(D\\{0})_min = {lhs} but D_min\\{0} = {rhs}",
                d.ground().label(e)
            )
        });
    }
    out
}

pub fn min_contraction_counterexample(inst: &Instance) -> Outcome {
    let Some((d, _)) = delta(inst) else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    let lower = d.lower_matroid();
    let documented = *d == min_contraction_witness();
    for e in 0..d.size() {
        let lhs = d.contract(e).unwrap().lower_matroid();
        let rhs = lower.contract_set(Subset::singleton(e)).unwrap();
        if lhs != rhs {
            out.hit = true;
            if documented && e == 0 {
                out.witness = Some(format!("(D/1)_min = {lhs} but D_min/1 = {rhs}"));
            }
        }
    }
    out
}

pub fn lower_bound(inst: &Instance) -> Outcome {
    let Some((d, _)) = delta(inst) else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    let bases = d.minimum_feasible();
    for a in d.ground().full().subsets() {
        let s0 = bases
            .iter()
            .map(|b| b.intersection(a).len())
            .min()
            .expect("proper");
        if let Some(f) = d.feasible().iter().find(|f| f.intersection(a).len() < s0) {
            out.fail(format!(
                "|F∩A| < {s0} for F={}, A={}",
                show(d, *f),
                show(d, a)
            ));
        }
    }
    out
}

pub fn deletion_bipartite(inst: &Instance) -> Outcome {
    let Some((d, probe)) = delta(inst) else {
        return Outcome::skip();
    };
    if !d.is_bipartite() {
        return Outcome::skip();
    }
    let mut out = Outcome::tested();
    for a in probe_subsets(d.size(), probe, 6) {
        out.require(d.delete_set(a).unwrap().is_bipartite(), || {
            format!("D\\{} is not bipartite", show(d, a))
        });
    }
    out
}

pub fn contraction_bipartite(inst: &Instance) -> Outcome {
    let Some((d, probe)) = delta(inst) else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    let n = d.size();
    for a in probe_subsets(n, probe, 6) {
        if !d.twist(a).unwrap().is_bipartite() {
            continue;
        }
        let co = a.complement(n);
        out.require(d.dual().contract_set(co).unwrap().is_bipartite(), || {
            format!("D*A bipartite but D*/A^c is not, A={}", show(d, a))
        });
        out.require(d.contract_set(a).unwrap().is_bipartite(), || {
            format!("D*A bipartite but D/A is not, A={}", show(d, a))
        });
    }
    out
}

// ---- binary delta-matroids ----

/// `C` is a circuit of `D_min` with `C` feasible in `D|_C`.
fn qualifying_circuit(d: &DeltaMatroid) -> Option<Subset> {
    d.lower_matroid().circuits().iter().find(|&c| {
        let r = d.restrict(c).expect("in range");
        r.is_feasible(r.ground().full())
    })
}

pub fn odd_circuit(inst: &Instance) -> Outcome {
    let Some((d, _)) = delta(inst) else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    let odd = !d.is_even();
    let circuit = qualifying_circuit(d);
    out.require(odd == circuit.is_some(), || match circuit {
        Some(c) => format!("even, yet circuit {} is feasible in D|_C", show(d, c)),
        None => String::from("odd, yet no circuit C of D_min is feasible in D|_C"),
    });
    out
}

pub fn odd_circuit_non_binary(inst: &Instance) -> Outcome {
    let Some((d, _)) = delta(inst) else {
        return Outcome::skip();
    };
    if is_binary_delta(d).expect("small").verdict {
        return Outcome::skip();
    }
    let mut out = Outcome::tested();
    if !d.is_even() && qualifying_circuit(d).is_none() {
        out.hit = true;
        if *d == non_binary_witness() {
            let circuits: Vec<String> = d
                .lower_matroid()
                .circuits()
                .iter()
                .map(|c| show(d, c))
                .collect();
            out.witness = Some(format!(
                "odd; C(D_min) = {{{}}}; no circuit is feasible in its restriction",
                circuits.join(", ")
            ));
        }
    }
    out
}

pub fn bipartite_loop_complement(inst: &Instance) -> Outcome {
    let Some((d, _)) = delta(inst) else {
        return Outcome::skip();
    };
    if !d.is_even() {
        return Outcome::skip();
    }
    let mut out = Outcome::tested();
    let lc = d.loop_complement(d.ground().full()).expect("proper");
    let bip = d.is_bipartite();
    let even = lc.parity().is_even();
    out.require(bip == even, || {
        format!("bipartite={bip} but D+E even={even}")
    });
    out
}

pub fn binary_closure(inst: &Instance) -> Outcome {
    let Some((d, _)) = delta(inst) else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    let cert = is_binary_delta(d).expect("small");
    out.require(cert.verdict, || {
        format!("binary test fails at {:?}", cert.failure_witness)
    });
    if d.is_normal() {
        let a = reconstruct_candidate(d).expect("normal");
        out.require(
            a.delta_matroid_on(d.ground().clone()).unwrap() == *d,
            || String::from("D(reconstruct(D)) != D"),
        );
    }
    if d.size() <= 5 {
        for (which, m) in [("lower", d.lower_matroid()), ("upper", d.upper_matroid())] {
            out.require(find_binary_representation(&m).unwrap().is_some(), || {
                format!("{which} matroid {m} has no GF(2) representation")
            });
        }
    }
    if d.size() <= 4 {
        let n = d.size();
        for code in 0..3u32.pow(n as u32) {
            let (mut x, mut y, mut c) = (Subset::EMPTY, Subset::EMPTY, code);
            for e in 0..n {
                match c % 3 {
                    1 => x = x.with(e),
                    2 => y = y.with(e),
                    _ => {}
                }
                c /= 3;
            }
            let minor = d.minor(x, y).unwrap();
            out.require(is_binary_delta(&minor).unwrap().verdict, || {
                format!("minor D\\{}/{} is not binary", show(d, x), show(d, y))
            });
        }
    }
    out
}

// ---- binary matroids and their twists ----

pub fn welsh_duality(inst: &Instance) -> Outcome {
    let Instance::Matroid(m) = inst else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    let eulerian = m.is_eulerian();
    let dual_bipartite = m.dual().is_bipartite();
    let odd_count = m.count_independent_sets() % 2 == 1;
    out.require(eulerian == dual_bipartite, || {
        format!("Eulerian={eulerian} but dual bipartite={dual_bipartite}")
    });
    out.require(eulerian == odd_count, || {
        format!("Eulerian={eulerian} but independent-set count odd={odd_count}")
    });
    out
}

pub fn circuit_contraction(inst: &Instance) -> Outcome {
    let Instance::Matroid(m) = inst else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    let n = m.size();
    let circuits = m.circuits();
    for e in 0..n {
        let keep = Subset::full(n).without(e);
        let contracted = m.contract_set(Subset::singleton(e)).unwrap().circuits();
        for c in circuits.iter().filter(|c| !c.contains(e)) {
            let image = c.compress(keep);
            let ok = contracted.contains(image)
                || contracted.iter().any(|c1| {
                    c1.is_subset_of(image)
                        && c1 != image
                        && contracted.contains(image.difference(c1))
                });
            out.require(ok, || {
                format!(
                    "in M/{}, {} is neither a circuit nor two disjoint circuits",
                    m.ground().label(e),
                    m.ground().show(c)
                )
            });
        }
    }
    out
}

fn embedded_sum(
    m: &Matroid,
    left: &Matroid,
    left_on: Subset,
    right: &Matroid,
    right_on: Subset,
) -> SetSystem {
    let mut members = Vec::with_capacity(left.bases().len() * right.bases().len());
    for a in left.bases().iter() {
        for b in right.bases().iter() {
            members.push(a.expand(left_on).union(b.expand(right_on)));
        }
    }
    SetSystem::from_unsorted(m.ground().clone(), members)
}

pub fn twist_decomposition(inst: &Instance) -> Outcome {
    let Instance::Twisted { m, a } = inst else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    let n = m.size();
    let (a, co) = (*a, a.complement(n));
    let d = m.as_delta().twist(a).unwrap();
    // D_min = M/A ⊕ (M\A^c)*
    let lower = embedded_sum(
        m,
        &m.contract_set(a).unwrap(),
        co,
        &m.delete_set(co).unwrap().dual(),
        a,
    );
    out.require(d.lower_matroid().bases() == &lower, || {
        format!(
            "D_min = {} but M/A ⊕ (M\\A^c)* = {lower}",
            d.lower_matroid()
        )
    });
    // D_max = M\A ⊕ (M/A^c)*
    let upper = embedded_sum(
        m,
        &m.delete_set(a).unwrap(),
        co,
        &m.contract_set(co).unwrap().dual(),
        a,
    );
    out.require(d.upper_matroid().bases() == &upper, || {
        format!(
            "D_max = {} but M\\A ⊕ (M/A^c)* = {upper}",
            d.upper_matroid()
        )
    });
    out
}

pub fn bipartite_dual_eulerian(inst: &Instance) -> Outcome {
    let Instance::Twisted { m, a } = inst else {
        return Outcome::skip();
    };
    let d = m.as_delta().twist(*a).unwrap();
    if !d.is_bipartite() {
        return Outcome::skip();
    }
    let mut out = Outcome::tested();
    out.require(d.dual().is_eulerian(), || {
        String::from("D bipartite but D* not Eulerian")
    });
    out
}

pub fn bipartite_dual_eulerian_converse(inst: &Instance) -> Outcome {
    let Instance::Twisted { m, a } = inst else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    let d = m.as_delta().twist(*a).unwrap();
    if d.dual().is_eulerian() && !d.is_bipartite() {
        out.hit = true;
        let (wm, wa) = converse_witness();
        if *m == wm && *a == wa {
            out.witness = Some(format!(
                "D = {d}, D* = {} Eulerian, D not bipartite",
                d.dual()
            ));
        }
    }
    out
}

pub fn twist_characterization(inst: &Instance) -> Outcome {
    let Instance::Twisted { m, a } = inst else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    let n = m.size();
    let d = m.as_delta().twist(*a).unwrap();
    let restricted = m.delete_set(a.complement(n)).unwrap();
    let co_deleted = m.dual().delete_set(*a).unwrap();
    let bip = d.is_bipartite();
    let eul = d.is_eulerian();
    let both_eulerian = restricted.is_eulerian() && co_deleted.is_eulerian();
    let both_bipartite = restricted.is_bipartite() && co_deleted.is_bipartite();
    out.require(bip == both_eulerian, || {
        format!("D bipartite={bip} but M\\A^c and M*\\A Eulerian={both_eulerian}")
    });
    out.require(eul == both_bipartite, || {
        format!("D Eulerian={eul} but M\\A^c and M*\\A bipartite={both_bipartite}")
    });
    out
}

// ---- ribbon graphs ----

fn ribbon(inst: &Instance) -> Option<(&str, &RibbonGraph, DeltaMatroid)> {
    match inst {
        Instance::Ribbon { name, g } => Some((name, g, g.delta_matroid().ok()?)),
        _ => None,
    }
}

pub fn ribbon_parity(inst: &Instance) -> Outcome {
    let Some((_, g, d)) = ribbon(inst) else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    out.require(d.is_even() == g.is_orientable(), || {
        format!("even={} orientable={}", d.is_even(), g.is_orientable())
    });
    out
}

pub fn ribbon_petrie(inst: &Instance) -> Outcome {
    let Some((_, g, _)) = ribbon(inst) else {
        return Outcome::skip();
    };
    if !g.is_orientable() {
        return Outcome::skip();
    }
    let mut out = Outcome::tested();
    let petrie = g.petrial(Subset::full(g.edge_count()));
    out.require(g.underlying_bipartite() == petrie.is_orientable(), || {
        format!(
            "bipartite={} but Petrie dual orientable={}",
            g.underlying_bipartite(),
            petrie.is_orientable()
        )
    });
    out
}

pub fn ribbon_bipartite_dual(inst: &Instance) -> Outcome {
    let Some((_, g, d)) = ribbon(inst) else {
        return Outcome::skip();
    };
    if !g.underlying_bipartite() {
        return Outcome::skip();
    }
    let mut out = Outcome::tested();
    out.require(d.dual().is_eulerian(), || {
        String::from("bipartite but dual delta-matroid not Eulerian")
    });
    out
}

pub fn ribbon_bipartite_dual_converse(inst: &Instance) -> Outcome {
    let Some((name, g, d)) = ribbon(inst) else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    if !g.underlying_bipartite() && d.dual().is_eulerian() {
        out.hit = true;
        out.witness = Some(format!(
            "{name}: not bipartite, D(G)* = {} Eulerian",
            d.dual()
        ));
    }
    out
}

/// Spanning trees of the underlying multigraph, by union-find.
fn spanning_trees(g: &RibbonGraph) -> Vec<Subset> {
    let v = g.vertex_count();
    let m = g.edge_count();
    let ends: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| {
            let find = |h: usize| {
                g.vertices()
                    .iter()
                    .position(|rot| rot.contains(&h))
                    .unwrap()
            };
            (find(e.ends[0]), find(e.ends[1]))
        })
        .collect();
    let mut out: Vec<Subset> = Subset::full(m)
        .subsets()
        .filter(|t| t.len() + 1 == v)
        .filter(|t| {
            let mut parent: Vec<usize> = (0..v).collect();
            fn root(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    x = p[x];
                }
                x
            }
            t.iter().all(|e| {
                let (a, b) = (root(&mut parent, ends[e].0), root(&mut parent, ends[e].1));
                parent[a] = b;
                a != b
            })
        })
        .collect();
    out.sort_unstable_by(|a, b| a.canonical_cmp(*b));
    out
}

pub fn ribbon_spanning_trees(inst: &Instance) -> Outcome {
    let Instance::Ribbon { g, .. } = inst else {
        return Outcome::skip();
    };
    let mut out = Outcome::tested();
    let d = match g.delta_matroid() {
        Ok(d) => d,
        Err(e) => {
            out.fail(format!("no delta-matroid: {e}"));
            return out;
        }
    };
    let trees = spanning_trees(g);
    out.require(
        d.lower_matroid().bases().members() == trees.as_slice(),
        || {
            format!(
                "D(G)_min = {} differs from the spanning trees",
                d.lower_matroid()
            )
        },
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_rule_matches_definition_on_a_loop() {
        let d = DeltaMatroid::numbered(1, &[&[]]).unwrap();
        assert!(interval_rule(&d, Subset(1), Subset(1)));
        assert!(interval_rule(&d, Subset(1), Subset::EMPTY));
        assert!(!interval_rule(&d, Subset::EMPTY, Subset(1)));
    }

    #[test]
    fn documented_witnesses_are_flagged() {
        let d = Instance::Delta {
            d: min_contraction_witness(),
            probe: 0,
        };
        assert!(min_contraction_counterexample(&d).witness.is_some());
        let nb = Instance::Delta {
            d: non_binary_witness(),
            probe: 0,
        };
        let o = odd_circuit_non_binary(&nb);
        assert_eq!(
            o.witness.as_deref(),
            Some("odd; C(D_min) = {{1}, {2}, {3}}; no circuit is feasible in its restriction")
        );
        let (m, a) = converse_witness();
        assert!(
            bipartite_dual_eulerian_converse(&Instance::Twisted { m, a })
                .witness
                .is_some()
        );
    }

    #[test]
    fn spanning_trees_of_theta() {
        let g = RibbonGraph::from_labels(
            &[&["a1", "a2", "a3"], &["b3", "b2", "b1"]],
            &[
                ("1", "a1", "b1", false),
                ("2", "a2", "b2", false),
                ("3", "a3", "b3", false),
            ],
        )
        .unwrap();
        assert_eq!(spanning_trees(&g), [Subset(1), Subset(2), Subset(4)]);
    }
}
