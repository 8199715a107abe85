//! Instance generators. Every generator is deterministic in its inputs and
//! only emits instances that passed their validator.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::delta::{exchange_violation, DeltaMatroid};
use crate::error::Error;
use crate::gf2::{Gf2Matrix, Gf2SymmetricMatrix};
use crate::matroid::Matroid;
use crate::ribbon::RibbonGraph;
use crate::subset::{GroundSet, Subset};
use crate::system::SetSystem;

/// Exhaustive delta-matroid enumeration runs over `2^(2^n) - 1` families.
pub const ALL_DELTA_LIMIT: usize = 4;
pub const SYMMETRIC_TWIST_LIMIT: usize = 4;
pub const BINARY_MATROID_LIMIT: usize = 5;
pub const RANDOM_LIMIT: usize = 8;

/// One unit of work for a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    /// A delta-matroid plus a seed for any per-instance sampling.
    Delta {
        d: DeltaMatroid,
        probe: u64,
    },
    Matroid(Matroid),
    /// `M * A`.
    Twisted {
        m: Matroid,
        a: Subset,
    },
    Ribbon {
        name: String,
        g: RibbonGraph,
    },
}

impl core::fmt::Display for Instance {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Instance::Delta { d, .. } => write!(f, "{d}"),
            Instance::Matroid(m) => write!(f, "M={m}"),
            Instance::Twisted { m, a } => write!(f, "M={m} A={}", m.ground().show(*a)),
            Instance::Ribbon { name, .. } => write!(f, "ribbon {name}"),
        }
    }
}

/// Families of generated instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CorpusKind {
    /// Every delta-matroid on `1..=n` for `n ≤ max_n`.
    AllDelta {
        max_n: usize,
    },
    /// Every twist of `D(A)` for every symmetric `A` of order `≤ max_n`, deduplicated.
    SymmetricTwists {
        max_n: usize,
    },
    /// Every binary matroid on `1..=n` for `n ≤ max_n`.
    BinaryMatroids {
        max_n: usize,
    },
    /// Every binary matroid on `≤ max_n` elements with every twist set.
    BinaryMatroidTwists {
        max_n: usize,
    },
    Random {
        max_n: usize,
        seed: u64,
        count: usize,
    },
    Ribbon,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Corpus {
    pub instances: Vec<Instance>,
    /// Candidates discarded by validation (random corpora only).
    pub rejections: u64,
}

pub fn build(kind: CorpusKind) -> Result<Corpus, Error> {
    Ok(match kind {
        CorpusKind::AllDelta { max_n } => Corpus {
            instances: (0..=max_n)
                .map(all_delta_matroids)
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .flatten()
                .map(|d| Instance::Delta { d, probe: 0 })
                .collect(),
            rejections: 0,
        },
        CorpusKind::SymmetricTwists { max_n } => Corpus {
            instances: (0..=max_n)
                .map(symmetric_twists)
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .flatten()
                .map(|d| Instance::Delta { d, probe: 0 })
                .collect(),
            rejections: 0,
        },
        CorpusKind::BinaryMatroids { max_n } => Corpus {
            instances: (0..=max_n)
                .map(binary_matroids)
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .flatten()
                .map(Instance::Matroid)
                .collect(),
            rejections: 0,
        },
        CorpusKind::BinaryMatroidTwists { max_n } => {
            let mut instances = Vec::new();
            for n in 0..=max_n {
                for m in binary_matroids(n)? {
                    for a in Subset::full(n).subsets() {
                        instances.push(Instance::Twisted { m: m.clone(), a });
                    }
                }
            }
            Corpus {
                instances,
                rejections: 0,
            }
        }
        CorpusKind::Random { max_n, seed, count } => {
            let batch = random_delta_matroids(max_n, seed, count)?;
            Corpus {
                instances: batch
                    .instances
                    .into_iter()
                    .map(|(d, probe)| Instance::Delta { d, probe })
                    .collect(),
                rejections: batch.rejections,
            }
        }
        CorpusKind::Ribbon => Corpus {
            instances: ribbon_corpus()?
                .into_iter()
                .map(|(name, g)| Instance::Ribbon { name, g })
                .collect(),
            rejections: 0,
        },
    })
}

fn family_from_code(n: usize, code: u64) -> Vec<Subset> {
    (0..1u32 << n)
        .filter(|i| code >> i & 1 == 1)
        .map(Subset)
        .collect()
}

/// All delta-matroids on `1..=n`, in increasing order of the family's
/// characteristic code.
pub fn all_delta_matroids(n: usize) -> Result<Vec<DeltaMatroid>, Error> {
    if n > ALL_DELTA_LIMIT {
        return Err(Error::GroundTooLarge {
            size: n,
            max: ALL_DELTA_LIMIT,
        });
    }
    let ground = GroundSet::numbered(n)?;
    let mut out = Vec::new();
    for code in 1u64..1 << (1u64 << n) {
        let s = SetSystem::from_unsorted(ground.clone(), family_from_code(n, code));
        if exchange_violation(&s).is_none() {
            out.push(DeltaMatroid::new_unchecked(s));
        }
    }
    Ok(out)
}

/// All twists of all `D(A)` with `A` symmetric of order `n`, deduplicated
/// and sorted.
pub fn symmetric_twists(n: usize) -> Result<Vec<DeltaMatroid>, Error> {
    if n > SYMMETRIC_TWIST_LIMIT {
        return Err(Error::GroundTooLarge {
            size: n,
            max: SYMMETRIC_TWIST_LIMIT,
        });
    }
    let ground = GroundSet::numbered(n)?;
    let mut seen = BTreeSet::new();
    for code in 0..1u64 << (n * (n + 1) / 2) {
        let d = Gf2SymmetricMatrix::from_code(n, code).delta_matroid_on(ground.clone())?;
        for s in Subset::full(n).subsets() {
            seen.insert(d.twist(s)?);
        }
    }
    Ok(seen.into_iter().collect())
}

/// All binary matroids on `1..=n`.
///
/// Each binary matroid of rank `r` has a representation `[I | X]` relative
/// to any of its bases, so ranging over every `r`-subset as the identity
/// block and every `X` reaches all of them.
pub fn binary_matroids(n: usize) -> Result<Vec<Matroid>, Error> {
    if n > BINARY_MATROID_LIMIT {
        return Err(Error::GroundTooLarge {
            size: n,
            max: BINARY_MATROID_LIMIT,
        });
    }
    let ground = GroundSet::numbered(n)?;
    let mut seen = BTreeSet::new();
    for r in 0..=n {
        for base in Subset::full(n).subsets().filter(|b| b.len() == r) {
            let free: Vec<usize> = base.complement(n).iter().collect();
            for code in 0..1u64 << (r * free.len()) {
                let mut rows = alloc::vec![0u32; r];
                for (i, e) in base.iter().enumerate() {
                    rows[i] |= 1 << e;
                }
                for (k, &c) in free.iter().enumerate() {
                    for (i, row) in rows.iter_mut().enumerate() {
                        if code >> (k * r + i) & 1 == 1 {
                            *row |= 1 << c;
                        }
                    }
                }
                let m = Gf2Matrix::new(n, rows)?.column_matroid_on(ground.clone())?;
                seen.insert(m);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[derive(Clone, Debug)]
pub struct RandomBatch {
    /// Delta-matroids with a per-instance probe seed.
    pub instances: Vec<(DeltaMatroid, u64)>,
    pub rejections: u64,
}

/// Seeded random delta-matroids on `1..=n`, `1 ≤ n ≤ max_n`.
///
/// Each instance starts from a construction that is a delta-matroid by
/// design (a twisted `D(A)`, a twisted uniform or binary matroid, a direct
/// sum), then some draws are perturbed by toggling random subsets in or out
/// of the family; perturbations that break the exchange axiom are rejected
/// and counted. No claim of uniformity is made.
pub fn random_delta_matroids(max_n: usize, seed: u64, count: usize) -> Result<RandomBatch, Error> {
    random_batch(1, max_n, seed, count)
}

/// Like [`random_delta_matroids`] with every instance on exactly `n` elements.
pub fn random_delta_matroids_of_size(
    n: usize,
    seed: u64,
    count: usize,
) -> Result<RandomBatch, Error> {
    random_batch(n.max(1), n, seed, count)
}

fn random_batch(min_n: usize, max_n: usize, seed: u64, count: usize) -> Result<RandomBatch, Error> {
    if max_n > RANDOM_LIMIT {
        return Err(Error::GroundTooLarge {
            size: max_n,
            max: RANDOM_LIMIT,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rejections = 0u64;
    let mut instances = Vec::with_capacity(count);
    if max_n == 0 {
        return Ok(RandomBatch {
            instances,
            rejections,
        });
    }
    for _ in 0..count {
        let n = rng.gen_range(min_n..=max_n);
        let d = random_base(&mut rng, n)?;
        let d = if rng.gen_bool(0.4) {
            perturb(&mut rng, d, 3, &mut rejections)
        } else {
            d
        };
        let probe = rng.next_u64();
        instances.push((d, probe));
    }
    Ok(RandomBatch {
        instances,
        rejections,
    })
}

fn random_subset<R: Rng>(rng: &mut R, n: usize) -> Subset {
    Subset(rng.next_u32() & Subset::full(n).0)
}

fn random_base<R: Rng>(rng: &mut R, n: usize) -> Result<DeltaMatroid, Error> {
    let ground = GroundSet::numbered(n)?;
    let twist = random_subset(rng, n);
    let d = match rng.gen_range(0..4u32) {
        0 => {
            let code = rng.next_u64() & ((1u64 << (n * (n + 1) / 2)) - 1);
            Gf2SymmetricMatrix::from_code(n, code).delta_matroid_on(ground)?
        }
        1 => {
            let rows = (0..rng.gen_range(0..=n))
                .map(|_| random_subset(rng, n).0)
                .collect();
            Gf2Matrix::new(n, rows)?
                .column_matroid_on(ground)?
                .into_delta()
        }
        2 => {
            let r = rng.gen_range(0..=n);
            Matroid::uniform(r, n)?.into_delta()
        }
        _ if n >= 2 => {
            let k = rng.gen_range(1..n);
            let left = random_base(rng, k)?;
            let labels = GroundSet::new((k + 1..=n).map(|i| format!("{i}")).collect())?;
            let right = random_base(rng, n - k)?.system().relabel(labels)?;
            left.direct_sum(&DeltaMatroid::new_unchecked(right))?
        }
        _ => Gf2SymmetricMatrix::identity(n).delta_matroid_on(ground)?,
    };
    d.twist(twist)
}

fn perturb<R: Rng>(
    rng: &mut R,
    d: DeltaMatroid,
    attempts: usize,
    rejections: &mut u64,
) -> DeltaMatroid {
    let mut cur = d;
    let n = cur.size();
    for _ in 0..attempts {
        let s = random_subset(rng, n);
        let members: Vec<Subset> = if cur.is_feasible(s) {
            cur.feasible().iter().copied().filter(|&m| m != s).collect()
        } else {
            cur.feasible().iter().copied().chain([s]).collect()
        };
        let candidate = SetSystem::from_unsorted(cur.ground().clone(), members);
        if candidate.is_proper() && exchange_violation(&candidate).is_none() {
            cur = DeltaMatroid::new_unchecked(candidate);
        } else {
            *rejections += 1;
        }
    }
    cur
}

/// Named ribbon graphs with at most five edges, followed by every bouquet
/// of up to three loops and every dipole of up to three edges, over all
/// rotations and twist patterns.
type NamedRibbon<'a> = (
    &'a str,
    &'a [&'a [&'a str]],
    &'a [(&'a str, &'a str, &'a str, bool)],
);

pub fn ribbon_corpus() -> Result<Vec<(String, RibbonGraph)>, Error> {
    let named: [NamedRibbon; 16] = [
        ("bridge", &[&["a"], &["b"]], &[("1", "a", "b", false)]),
        ("plane-loop", &[&["a", "b"]], &[("1", "a", "b", false)]),
        ("mobius-loop", &[&["a", "b"]], &[("1", "a", "b", true)]),
        (
            "plane-bouquet-2",
            &[&["a1", "b1", "a2", "b2"]],
            &[("1", "a1", "b1", false), ("2", "a2", "b2", false)],
        ),
        (
            "torus-bouquet-2",
            &[&["a1", "a2", "b1", "b2"]],
            &[("1", "a1", "b1", false), ("2", "a2", "b2", false)],
        ),
        (
            "projective-bouquet-2",
            &[&["a1", "a2", "b1", "b2"]],
            &[("1", "a1", "b1", true), ("2", "a2", "b2", true)],
        ),
        (
            "plane-digon",
            &[&["a1", "a2"], &["b2", "b1"]],
            &[("1", "a1", "b1", false), ("2", "a2", "b2", false)],
        ),
        (
            "twisted-digon",
            &[&["a1", "a2"], &["b2", "b1"]],
            &[("1", "a1", "b1", false), ("2", "a2", "b2", true)],
        ),
        (
            "plane-theta",
            &[&["a1", "a2", "a3"], &["b3", "b2", "b1"]],
            &[
                ("1", "a1", "b1", false),
                ("2", "a2", "b2", false),
                ("3", "a3", "b3", false),
            ],
        ),
        (
            "torus-theta",
            &[&["a1", "a2", "a3"], &["b1", "b2", "b3"]],
            &[
                ("1", "a1", "b1", false),
                ("2", "a2", "b2", false),
                ("3", "a3", "b3", false),
            ],
        ),
        (
            "plane-triangle",
            &[&["x1", "y3"], &["x2", "y1"], &["x3", "y2"]],
            &[
                ("1", "x1", "y1", false),
                ("2", "x2", "y2", false),
                ("3", "x3", "y3", false),
            ],
        ),
        (
            "mobius-triangle",
            &[&["x1", "y3"], &["x2", "y1"], &["x3", "y2"]],
            &[
                ("1", "x1", "y1", true),
                ("2", "x2", "y2", false),
                ("3", "x3", "y3", false),
            ],
        ),
        (
            "plane-square",
            &[&["x1", "y4"], &["x2", "y1"], &["x3", "y2"], &["x4", "y3"]],
            &[
                ("1", "x1", "y1", false),
                ("2", "x2", "y2", false),
                ("3", "x3", "y3", false),
                ("4", "x4", "y4", false),
            ],
        ),
        (
            "mobius-square",
            &[&["x1", "y4"], &["x2", "y1"], &["x3", "y2"], &["x4", "y3"]],
            &[
                ("1", "x1", "y1", false),
                ("2", "x2", "y2", true),
                ("3", "x3", "y3", false),
                ("4", "x4", "y4", false),
            ],
        ),
        (
            "plane-square-diagonal",
            &[
                &["x1", "d1", "y4"],
                &["x2", "y1"],
                &["x3", "d2", "y2"],
                &["x4", "y3"],
            ],
            &[
                ("1", "x1", "y1", false),
                ("2", "x2", "y2", false),
                ("3", "x3", "y3", false),
                ("4", "x4", "y4", false),
                ("5", "d1", "d2", false),
            ],
        ),
        (
            "plane-path-loop",
            &[&["x1"], &["y1", "x2", "l1", "l2"], &["y2"]],
            &[
                ("1", "x1", "y1", false),
                ("2", "x2", "y2", false),
                ("3", "l1", "l2", false),
            ],
        ),
    ];
    let mut out = Vec::new();
    for (name, vertices, edges) in named {
        out.push((
            String::from(name),
            RibbonGraph::from_labels(vertices, edges)?,
        ));
    }
    for k in 1..=3usize {
        for (rot, code) in bouquet_rotations(k) {
            let halves: Vec<String> = rot.iter().map(|h| format!("h{h}")).collect();
            let edges: Vec<(String, String, String, bool)> = (0..k)
                .map(|e| {
                    (
                        format!("{}", e + 1),
                        format!("h{}", 2 * e),
                        format!("h{}", 2 * e + 1),
                        code >> e & 1 == 1,
                    )
                })
                .collect();
            let name = format!(
                "bouquet-{k}[{}]{}",
                rot.iter()
                    .map(|h| format!("{h}"))
                    .collect::<Vec<_>>()
                    .join(","),
                sign_string(k, code)
            );
            out.push((name, RibbonGraph::new(alloc::vec![halves], edges)?));
        }
    }
    for k in 1..=3usize {
        for perm in permutations(k).into_iter().filter(|p| p[0] == 0) {
            for code in 0..1u32 << k {
                let left: Vec<String> = (0..k).map(|e| format!("a{e}")).collect();
                // reversed so that the identity permutation draws a plane dipole
                let right: Vec<String> = perm.iter().rev().map(|e| format!("b{e}")).collect();
                let edges = (0..k)
                    .map(|e| {
                        (
                            format!("{}", e + 1),
                            format!("a{e}"),
                            format!("b{e}"),
                            code >> e & 1 == 1,
                        )
                    })
                    .collect();
                let name = format!(
                    "dipole-{k}[{}]{}",
                    perm.iter()
                        .map(|h| format!("{h}"))
                        .collect::<Vec<_>>()
                        .join(","),
                    sign_string(k, code)
                );
                out.push((name, RibbonGraph::new(alloc::vec![left, right], edges)?));
            }
        }
    }
    Ok(out)
}

fn sign_string(k: usize, code: u32) -> String {
    (0..k)
        .map(|e| if code >> e & 1 == 1 { '-' } else { '+' })
        .collect()
}

/// Cyclic orders of the `2k` half-edges of a bouquet, with half-edge 0
/// fixed in front, paired with every twist pattern.
fn bouquet_rotations(k: usize) -> Vec<(Vec<usize>, u32)> {
    let mut out = Vec::new();
    for perm in permutations(2 * k).into_iter().filter(|p| p[0] == 0) {
        for code in 0..1u32 << k {
            out.push((perm.clone(), code));
        }
    }
    out
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n)
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}
