//! Command implementations behind the `dmx` binary.

use std::fmt::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use dmx_core::gf2::{is_binary_delta, BINARY_TEST_LIMIT};
use dmx_core::verify::{enumerate_delta_matroids, render_text, select, VerifyConfig, CHECKS};
use dmx_core::{DeltaMatroid, Error, GroundSet, Matroid, RibbonGraph, SetSystem, Subset};
use thiserror::Error;

use crate::format::{self, DmKind, Document, ParseError};
use crate::runner;

#[derive(Debug, Parser)]
#[command(
    name = "dmx",
    version,
    about = "Delta-matroids, binary matroids and ribbon graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a .dm, .gf2 or .rg file and describe it.
    Check { file: PathBuf },
    /// Apply an operation and print the result in .dm form.
    Op {
        #[arg(value_enum)]
        op: OpKind,
        /// Comma-separated labels from the file's ground set.
        #[arg(long)]
        set: Option<String>,
        file: PathBuf,
    },
    /// Parity, binarity, bipartiteness and Eulerian-ness.
    Classify { file: PathBuf },
    /// Count delta-matroids on n elements by property.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, env = "DMX_SEED", default_value_t = 0)]
        seed: u64,
        /// Draws for sampled sizes (n = 5, 6).
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Run property checks over generated corpora.
    Verify {
        /// `all`, a group (calculus, lower, binary, matroid, ribbon) or a check name.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, env = "DMX_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        #[arg(long, default_value_t = 1000)]
        random_count: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Print the check names and exit.
        #[arg(long)]
        list: bool,
    },
    /// Ribbon-graph commands on .rg files.
    Ribbon {
        #[arg(value_enum)]
        action: RibbonAction,
        /// Edges to half-twist for `petrial` (default: all).
        #[arg(long)]
        set: Option<String>,
        file: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    Twist,
    Lc,
    Dual,
    Delete,
    Contract,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Records,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RibbonAction {
    Classify,
    Petrial,
    ToDm,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: {message}")]
    Invalid { path: PathBuf, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

/// What a command printed and how it ended.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

pub fn run(cli: Cli) -> Output {
    let result = match cli.command {
        Command::Check { file } => check(&file),
        Command::Op { op, set, file } => apply(op, set.as_deref(), &file),
        Command::Classify { file } => classify(&file),
        Command::Enumerate { n, seed, samples } => enumerate(n, seed, samples),
        Command::Verify {
            suite,
            max_n,
            seed,
            shards,
            random_count,
            format,
            list,
        } => {
            let cfg = VerifyConfig {
                max_n,
                seed,
                random_count,
            };
            if list {
                Ok(list_checks())
            } else {
                verify(&suite, &cfg, shards, format)
            }
        }
        Command::Ribbon { action, set, file } => ribbon(action, set.as_deref(), &file),
    };
    result.unwrap_or_else(|e| Output {
        stderr: format!("error: {e}\n"),
        code: EXIT_INVALID,
        ..Output::default()
    })
}

fn load(path: &Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })?;
    format::parse(&text).map_err(|source| CliError::Parse {
        path: path.into(),
        source,
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Why a family fails validation, with labels instead of indices.
fn describe(ground: &GroundSet, e: &Error) -> String {
    match *e {
        Error::Improper => "no feasible sets".into(),
        Error::ExchangeViolation { x, y, u } => format!(
            "symmetric exchange fails for X={} Y={} u={}",
            ground.show(x),
            ground.show(y),
            ground.label(u)
        ),
        Error::NotEquicardinal { a, b } => format!(
            "bases {} and {} differ in size",
            ground.show(a),
            ground.show(b)
        ),
        Error::BaseExchangeViolation { b1, b2, x } => format!(
            "base exchange fails for B1={} B2={} x={}",
            ground.show(b1),
            ground.show(b2),
            ground.label(x)
        ),
        ref other => other.to_string(),
    }
}

/// The delta-matroid a document stands for, and whether it is a matroid file.
fn as_delta(doc: Document, path: &Path) -> Result<(DeltaMatroid, DmKind), CliError> {
    let invalid = |message: String| CliError::Invalid {
        path: path.into(),
        message,
    };
    Ok(match doc {
        Document::Dm(f) => {
            let ground = f.system.ground().clone();
            match f.kind {
                DmKind::DeltaMatroid => (
                    DeltaMatroid::new(f.system).map_err(|e| invalid(describe(&ground, &e)))?,
                    DmKind::DeltaMatroid,
                ),
                DmKind::Matroid => (
                    Matroid::from_bases(f.system)
                        .map_err(|e| invalid(describe(&ground, &e)))?
                        .into_delta(),
                    DmKind::Matroid,
                ),
            }
        }
        Document::Symmetric(a) => (a.delta_matroid()?, DmKind::DeltaMatroid),
        Document::Matrix(b) => (b.column_matroid()?.into_delta(), DmKind::Matroid),
        Document::Ribbon(g) => (
            g.delta_matroid().map_err(|e| invalid(e.to_string()))?,
            DmKind::DeltaMatroid,
        ),
    })
}

fn check(path: &Path) -> Result<Output, CliError> {
    let mut out = String::new();
    let mut code = 0;
    match load(path)? {
        Document::Dm(f) => {
            let ground = f.system.ground().clone();
            let verdict = match f.kind {
                DmKind::DeltaMatroid => {
                    out.push_str("kind: delta-matroid\n");
                    DeltaMatroid::new(f.system.clone()).map(|_| ())
                }
                DmKind::Matroid => {
                    out.push_str("kind: matroid\n");
                    Matroid::from_bases(f.system.clone()).map(|_| ())
                }
            };
            let _ = writeln!(out, "ground: {}", ground.len());
            let _ = writeln!(out, "feasible: {}", f.system.len());
            match verdict {
                Ok(()) => {
                    out.push_str("valid: yes\n");
                    if let Some(p) = f.system.parity() {
                        let _ =
                            writeln!(out, "parity: {}", if p.is_even() { "even" } else { "odd" });
                    }
                    let _ = writeln!(out, "normal: {}", yes(f.system.contains(Subset::EMPTY)));
                }
                Err(e) => {
                    out.push_str("valid: no\n");
                    let _ = writeln!(out, "witness: {}", describe(&ground, &e));
                    code = EXIT_INVALID;
                }
            }
        }
        Document::Symmetric(a) => {
            let d = a.delta_matroid()?;
            out.push_str("kind: gf2sym\n");
            let _ = writeln!(out, "order: {}", a.order());
            out.push_str("valid: yes\n");
            let _ = writeln!(out, "feasible: {}", d.feasible().len());
            let _ = writeln!(out, "parity: {}", if d.is_even() { "even" } else { "odd" });
        }
        Document::Matrix(b) => {
            let m = b.column_matroid()?;
            out.push_str("kind: gf2\n");
            let _ = writeln!(out, "rows: {}", b.rows());
            let _ = writeln!(out, "cols: {}", b.cols());
            out.push_str("valid: yes\n");
            let _ = writeln!(out, "rank: {}", m.rank());
            let _ = writeln!(out, "bases: {}", m.bases().len());
        }
        Document::Ribbon(g) => {
            out.push_str("kind: ribbon\n");
            let _ = writeln!(out, "vertices: {}", g.vertex_count());
            let _ = writeln!(out, "edges: {}", g.edge_count());
            let connected = g.is_connected();
            let _ = writeln!(out, "connected: {}", yes(connected));
            out.push_str("valid: yes\n");
            if connected {
                let d = g.delta_matroid()?;
                let _ = writeln!(out, "quasi-trees: {}", d.feasible().len());
            }
        }
    }
    Ok(Output {
        stdout: out,
        code,
        ..Output::default()
    })
}

fn required_set(ground: &GroundSet, set: Option<&str>, what: &str) -> Result<Subset, CliError> {
    let text = set.ok_or_else(|| CliError::Usage(format!("`{what}` needs --set")))?;
    labels(ground, text)
}

fn labels(ground: &GroundSet, text: &str) -> Result<Subset, CliError> {
    format::parse_label_list(ground, text)
        .map_err(|e| CliError::Usage(format!("--set: {}", e.message)))
}

fn apply(op: OpKind, set: Option<&str>, path: &Path) -> Result<Output, CliError> {
    let (d, kind) = as_delta(load(path)?, path)?;
    let ground = d.ground().clone();
    let mut stderr = String::new();
    let (system, kind): (SetSystem, DmKind) = match op {
        OpKind::Twist => {
            let a = required_set(&ground, set, "twist")?;
            (d.twist(a)?.into_system(), DmKind::DeltaMatroid)
        }
        OpKind::Lc => {
            let a = required_set(&ground, set, "lc")?;
            let lc = d.loop_complement(a)?;
            if let Some((x, y, u)) = lc.violation {
                let _ = writeln!(
                    stderr,
                    "note: result is not a delta-matroid (exchange fails for X={} Y={} u={})",
                    ground.show(x),
                    ground.show(y),
                    ground.label(u)
                );
            }
            (lc.system, DmKind::DeltaMatroid)
        }
        OpKind::Dual => (d.dual().into_system(), kind),
        OpKind::Delete => {
            let a = required_set(&ground, set, "delete")?;
            (d.delete_set(a)?.into_system(), kind)
        }
        OpKind::Contract => {
            let a = required_set(&ground, set, "contract")?;
            (d.contract_set(a)?.into_system(), kind)
        }
    };
    Ok(Output {
        stdout: format::write_dm(&system, kind),
        stderr,
        code: 0,
    })
}

fn classify(path: &Path) -> Result<Output, CliError> {
    let (d, _) = as_delta(load(path)?, path)?;
    let g = d.ground();
    let mut out = String::new();
    let _ = writeln!(out, "even: {}", yes(d.is_even()));
    if d.size() <= BINARY_TEST_LIMIT {
        let cert = is_binary_delta(&d)?;
        let _ = writeln!(out, "binary: {}", yes(cert.verdict));
        if let Some(a) = cert.matrix {
            let _ = writeln!(out, "twist: {}", g.show(cert.twist_set));
            let rows: Vec<String> = a
                .rows()
                .iter()
                .map(|r| {
                    (0..a.order())
                        .map(|j| if r >> j & 1 == 1 { '1' } else { '0' })
                        .collect()
                })
                .collect();
            let _ = writeln!(out, "matrix: {}", rows.join(" "));
        }
    } else {
        let _ = writeln!(
            out,
            "binary: unknown (more than {BINARY_TEST_LIMIT} elements)"
        );
    }
    let report = d.classify();
    let _ = writeln!(out, "bipartite: {}", yes(report.bipartite));
    if let Some(c) = report.odd_circuit_witness {
        let _ = writeln!(out, "odd-circuit: {}", g.show(c));
    }
    let _ = writeln!(out, "eulerian: {}", yes(report.eulerian));
    if let Some(p) = report.eulerian_partition {
        let parts: Vec<String> = p.iter().map(|c| g.show(*c)).collect();
        let _ = writeln!(out, "partition: {}", parts.join(" "));
    }
    Ok(Output {
        stdout: out,
        ..Output::default()
    })
}

fn enumerate(n: usize, seed: u64, samples: usize) -> Result<Output, CliError> {
    let cat = enumerate_delta_matroids(n, seed, samples)?;
    Ok(Output {
        stdout: cat.to_string(),
        ..Output::default()
    })
}

fn list_checks() -> Output {
    let mut out = String::new();
    for c in CHECKS {
        let _ = writeln!(out, "{} {}", c.group, c.name);
    }
    Output {
        stdout: out,
        ..Output::default()
    }
}

fn verify(
    suite: &str,
    cfg: &VerifyConfig,
    shards: usize,
    format: ReportFormat,
) -> Result<Output, CliError> {
    let checks = select(suite).ok_or_else(|| {
        CliError::Usage(format!("unknown suite `{suite}`; see `dmx verify --list`"))
    })?;
    if shards == 0 {
        return Err(CliError::Usage("--shards must be at least 1".into()));
    }
    let run = runner::run(&checks, cfg, shards)?;
    let mut stdout = String::new();
    let mut stderr = String::new();
    match format {
        ReportFormat::Text => {
            let _ = writeln!(stdout, "suite: {suite}");
            let _ = writeln!(stdout, "max-n: {}", cfg.max_n);
            let _ = writeln!(stdout, "seed: {}", cfg.seed);
            let _ = writeln!(stdout, "random-count: {}", cfg.random_count);
            let _ = writeln!(stdout, "random-rejections: {}", run.rejections);
            stdout.push_str(&render_text(&run.reports, 10));
            for r in &run.reports {
                let _ = writeln!(stderr, "time {}: {:.3}s", r.name, r.elapsed.as_secs_f64());
            }
        }
        ReportFormat::Records => stdout.push_str(&runner::records(&run.reports)),
    }
    Ok(Output {
        stdout,
        stderr,
        code: if run.passed() { 0 } else { EXIT_FAILED },
    })
}

fn ribbon_graph(path: &Path) -> Result<RibbonGraph, CliError> {
    match load(path)? {
        Document::Ribbon(g) => Ok(g),
        _ => Err(CliError::Invalid {
            path: path.into(),
            message: "not a ribbon graph (.rg) file".into(),
        }),
    }
}

fn ribbon(action: RibbonAction, set: Option<&str>, path: &Path) -> Result<Output, CliError> {
    let g = ribbon_graph(path)?;
    let stdout = match action {
        RibbonAction::Classify => {
            let mut out = String::new();
            let full = Subset::full(g.edge_count());
            let faces = g.boundary_components(full);
            let connected = g.is_connected();
            let _ = writeln!(out, "vertices: {}", g.vertex_count());
            let _ = writeln!(out, "edges: {}", g.edge_count());
            let _ = writeln!(out, "boundary-components: {faces}");
            let _ = writeln!(out, "connected: {}", yes(connected));
            let _ = writeln!(out, "orientable: {}", yes(g.is_orientable()));
            if connected {
                let euler_genus = 2 + g.edge_count() - g.vertex_count() - faces;
                let _ = writeln!(out, "euler-genus: {euler_genus}");
            }
            let _ = writeln!(out, "bipartite: {}", yes(g.underlying_bipartite()));
            let _ = writeln!(out, "eulerian: {}", yes(g.underlying_eulerian()));
            if connected {
                let d = g.delta_matroid()?;
                let _ = writeln!(out, "delta-matroid-even: {}", yes(d.is_even()));
                let _ = writeln!(out, "dual-eulerian: {}", yes(d.dual().is_eulerian()));
            }
            out
        }
        RibbonAction::Petrial => {
            let ground = g.edge_ground();
            let a = match set {
                Some(text) => labels(&ground, text)?,
                None => ground.full(),
            };
            format::write_rg(&g.petrial(a))
        }
        RibbonAction::ToDm => {
            let d = g.delta_matroid().map_err(|e| CliError::Invalid {
                path: path.into(),
                message: e.to_string(),
            })?;
            format::write_dm(d.system(), DmKind::DeltaMatroid)
        }
    };
    Ok(Output {
        stdout,
        ..Output::default()
    })
}
