mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use topodist::indices::{self, IndexKind, LogBase};
use topodist::measures::{self, Sigma};
use topodist::search::{
    caterpillar_scan, equienergetic_scan, find_equal_wiener_pairs, verify_conjecture,
    CollisionPair, ConjectureId, SearchConfig, Verification, ViolationRecord,
};
use topodist::{enumerate_trees, Graph};

use report::{opt, RunReport, Table, SCHEMA_VERSION};

#[derive(Parser)]
#[command(name = "topodist", version, about = "Topological indices, index distances and tree counterexample search")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "W")]
    W,
    #[value(name = "R")]
    R,
    #[value(name = "E")]
    E,
    #[value(name = "Ig")]
    Ig,
    #[value(name = "If")]
    If,
    #[value(name = "mu")]
    Mu,
}

impl Kind {
    fn resolve(self, k: u32) -> IndexKind {
        match self {
            Kind::W => IndexKind::Wiener,
            Kind::R => IndexKind::Randic,
            Kind::E => IndexKind::Energy,
            Kind::Ig => IndexKind::SpectralEntropy,
            Kind::If => IndexKind::DegreePowerEntropy { k },
            Kind::Mu => IndexKind::AverageDistance,
        }
    }
}

#[derive(clap::Args)]
struct IndexOpts {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Degree exponent for `If`.
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Logarithm base for the entropies; natural log when omitted.
    #[arg(long)]
    log_base: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one index on an edge-list file.
    Index {
        file: PathBuf,
        #[command(flatten)]
        opts: IndexOpts,
    },
    /// Index distance between two graphs.
    Distance {
        file_a: PathBuf,
        file_b: PathBuf,
        #[command(flatten)]
        opts: IndexOpts,
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
    },
    /// List all free trees of one order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Check one conjecture over all tree pairs of each order.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        conjecture: u8,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 1e-9)]
        float_tol: f64,
    },
    /// Collision searches.
    Scan {
        #[command(subcommand)]
        scan: Scan,
    },
    /// Evaluate the bounds on entropy and Wiener distances.
    Bounds {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        theorem: u8,
        /// Probability vector p' (theorem 1), comma separated.
        #[arg(long, value_delimiter = ',')]
        p_prime: Vec<f64>,
        /// Graph order (theorem 3).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[arg(long)]
        log_base: Option<f64>,
    },
}

#[derive(Subcommand)]
enum Scan {
    /// Equal-Randić caterpillar quadruples.
    Caterpillar {
        #[arg(long, default_value_t = 100)]
        limit: u32,
        #[arg(long, default_value_t = 4)]
        t: u32,
        /// Try every integer degree, not only perfect squares.
        #[arg(long)]
        all_integers: bool,
        /// Only pairs whose caterpillars have the same order.
        #[arg(long)]
        equal_order: bool,
        #[arg(long, default_value_t = 1e-9)]
        float_tol: f64,
    },
    /// Non-isomorphic trees with equal Wiener index.
    EqualWiener {
        #[arg(long)]
        n: usize,
    },
    /// Trees with equal energy.
    Equienergetic {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 1e-8)]
        energy_tol: f64,
        #[arg(long, default_value_t = 1e-9)]
        float_tol: f64,
    },
}

fn load(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    topodist::io::parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn log_base(base: Option<f64>) -> Result<LogBase<f64>> {
    Ok(match base {
        None => LogBase::Natural,
        Some(b) => LogBase::new(b)?,
    })
}

struct Output {
    name: String,
    config: Value,
    payload: Value,
    table: Table,
}

fn pair_table(pairs: &[CollisionPair]) -> Table {
    let mut t = Table::new(vec![
        "kind", "first_code", "second_code", "first_order", "second_order", "first_spine",
        "second_spine", "shared_value", "gap_W", "gap_R", "gap_E", "gap_Ig", "gap_If_1", "exact",
        "cospectral", "spine_if1_gap", "label",
    ]);
    let spine = |s: Option<[u32; 4]>| {
        s.map(|q| q.iter().map(u32::to_string).collect::<Vec<_>>().join("-")).unwrap_or_default()
    };
    for p in pairs {
        t.push(vec![
            serde_json::to_value(p.kind).unwrap().as_str().unwrap().to_string(),
            p.first.code.to_hex(),
            p.second.code.to_hex(),
            p.first.order.to_string(),
            p.second.order.to_string(),
            spine(p.first.spine),
            spine(p.second.spine),
            p.shared_value.to_string(),
            opt(p.gaps.wiener),
            opt(p.gaps.randic),
            opt(p.gaps.energy),
            opt(p.gaps.ig),
            opt(p.gaps.if1),
            opt(p.exact),
            opt(p.cospectral),
            opt(p.spine_if1_gap),
            p.label.clone().unwrap_or_default(),
        ]);
    }
    t
}

fn violation_table(runs: &[(usize, Verification)]) -> Table {
    let mut t = Table::new(vec![
        "conjecture", "order", "status", "first", "second", "a_first", "b_first", "a_second",
        "b_second", "gap_a", "gap_b", "margin",
    ]);
    let mut push = |r: &ViolationRecord, status: &str| {
        t.push(vec![
            u8::from(r.conjecture).to_string(),
            r.order.to_string(),
            status.to_string(),
            r.first.to_hex(),
            r.second.to_hex(),
            r.first_values.0.to_string(),
            r.first_values.1.to_string(),
            r.second_values.0.to_string(),
            r.second_values.1.to_string(),
            r.gap_a.to_string(),
            r.gap_b.to_string(),
            r.margin.to_string(),
        ])
    };
    for (_, v) in runs {
        v.violations.iter().for_each(|r| push(r, "violation"));
        v.borderline.iter().for_each(|r| push(r, "borderline"));
    }
    t
}

fn run(command: Command) -> Result<Output> {
    Ok(match command {
        Command::Index { file, opts } => {
            let g = load(&file)?;
            let kind = opts.kind.resolve(opts.k);
            let v = indices::compute(&g, kind, log_base(opts.log_base)?)?;
            let mut table = Table::new(vec!["kind", "value", "log_base"]);
            table.push(vec![kind.symbol(), v.value.to_string(), opt(v.log_base)]);
            Output {
                name: "index".into(),
                config: json!({"file": file, "kind": kind.symbol(), "k": opts.k, "log_base": opts.log_base.unwrap_or(std::f64::consts::E)}),
                payload: serde_json::to_value(&v)?,
                table,
            }
        }
        Command::Distance { file_a, file_b, opts, sigma } => {
            let (g, h) = (load(&file_a)?, load(&file_b)?);
            let kind = opts.kind.resolve(opts.k);
            let d = measures::graph_distance(&g, &h, kind, log_base(opts.log_base)?, Sigma::new(sigma)?)?;
            let mut table = Table::new(vec!["kind", "value_g", "value_h", "gap", "distance", "sigma"]);
            table.push(vec![
                kind.symbol(),
                d.value_g.to_string(),
                d.value_h.to_string(),
                d.gap.to_string(),
                d.distance.to_string(),
                sigma.to_string(),
            ]);
            Output {
                name: "distance".into(),
                config: json!({"file_a": file_a, "file_b": file_b, "kind": kind.symbol(), "k": opts.k, "sigma": sigma, "log_base": opts.log_base.unwrap_or(std::f64::consts::E)}),
                payload: serde_json::to_value(&d)?,
                table,
            }
        }
        Command::Enumerate { n, count_only } => {
            let config = json!({"n": n, "count_only": count_only});
            if count_only {
                let count = enumerate_trees(n).count();
                let mut table = Table::new(vec!["n", "count"]);
                table.push(vec![n.to_string(), count.to_string()]);
                Output { name: "enumerate".into(), config, payload: json!({"n": n, "count": count}), table }
            } else {
                let mut table = Table::new(vec!["n", "code", "edges"]);
                let mut trees = Vec::new();
                for t in enumerate_trees(n) {
                    let edges: Vec<String> = t.graph().edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                    table.push(vec![n.to_string(), t.code().to_hex(), edges.join(" ")]);
                    trees.push(json!({"code": t.code(), "edges": t.graph().edges()}));
                }
                Output {
                    name: "enumerate".into(),
                    config,
                    payload: json!({"n": n, "count": trees.len(), "trees": trees}),
                    table,
                }
            }
        }
        Command::Verify { conjecture, n, n_max, float_tol } => {
            let id = ConjectureId::try_from(conjecture)?;
            let n_max = n_max.unwrap_or(n);
            if n_max < n {
                bail!("--n-max {n_max} is below --n {n}");
            }
            let cfg = SearchConfig { n_min: n, n_max, float_tol, ..SearchConfig::default() };
            let runs = (n..=n_max)
                .map(|k| Ok((k, verify_conjecture(id, k, &cfg)?)))
                .collect::<Result<Vec<_>>>()?;
            let payload: Vec<Value> = runs
                .iter()
                .map(|(k, v)| json!({"n": k, "pairs_checked": v.pairs_checked, "violations": v.violations, "borderline": v.borderline}))
                .collect();
            Output {
                name: "verify".into(),
                config: json!({"conjecture": conjecture, "n": n, "n_max": n_max, "float_tol": float_tol}),
                table: violation_table(&runs),
                payload: Value::Array(payload),
            }
        }
        Command::Scan { scan } => match scan {
            Scan::Caterpillar { limit, t, all_integers, equal_order, float_tol } => {
                let cfg = SearchConfig {
                    scan_limit: limit,
                    fixed_t: t,
                    perfect_squares_only: !all_integers,
                    equal_order_only: equal_order,
                    float_tol,
                    ..SearchConfig::default()
                };
                let pairs = caterpillar_scan(&cfg)?;
                Output {
                    name: "scan caterpillar".into(),
                    config: json!({"limit": limit, "t": t, "perfect_squares_only": !all_integers, "equal_order_only": equal_order, "float_tol": float_tol, "tail": "P2"}),
                    table: pair_table(&pairs),
                    payload: json!({"count": pairs.len(), "pairs": pairs}),
                }
            }
            Scan::EqualWiener { n } => {
                let pairs = find_equal_wiener_pairs(n)?;
                Output {
                    name: "scan equal-wiener".into(),
                    config: json!({"n": n}),
                    table: pair_table(&pairs),
                    payload: json!({"count": pairs.len(), "pairs": pairs}),
                }
            }
            Scan::Equienergetic { n_max, n_min, energy_tol, float_tol } => {
                let cfg = SearchConfig { n_min, n_max, energy_tol, float_tol, ..SearchConfig::default() };
                let report = equienergetic_scan(&cfg)?;
                Output {
                    name: "scan equienergetic".into(),
                    config: json!({"n_min": n_min, "n_max": n_max, "energy_tol": energy_tol, "float_tol": float_tol}),
                    table: pair_table(&report.pairs),
                    payload: serde_json::to_value(&report)?,
                }
            }
        },
        Command::Bounds { theorem, p_prime, n, sigma, log_base: base } => {
            let s = Sigma::new(sigma)?;
            let mut table = Table::new(vec!["theorem", "n", "sigma", "a", "bound"]);
            let config = json!({"theorem": theorem, "p_prime": p_prime, "n": n, "sigma": sigma, "log_base": base.unwrap_or(std::f64::consts::E)});
            let payload = match theorem {
                1 => {
                    let lb = log_base(base)?;
                    let a = measures::theorem1_a(&p_prime, lb)?;
                    let bound = measures::theorem1_bound(&p_prime, lb, s)?;
                    table.push(vec!["1".into(), String::new(), sigma.to_string(), a.to_string(), bound.to_string()]);
                    json!({"theorem": 1, "a": a, "bound": bound})
                }
                3 => {
                    let n = n.context("--n is required for theorem 3")?;
                    let bound = measures::theorem3_bound(n, s)?;
                    let c = measures::theorem3_coefficient::<f64>();
                    table.push(vec!["3".into(), n.to_string(), sigma.to_string(), String::new(), bound.to_string()]);
                    json!({"theorem": 3, "n": n, "coefficient": c, "bound": bound, "note": "asymptotic, lower-order terms dropped"})
                }
                _ => bail!("theorem 2 has no closed-form bound to evaluate; use --theorem 1 or 3"),
            };
            Output { name: "bounds".into(), config, payload, table }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Json => {
                    let report = RunReport {
                        schema: SCHEMA_VERSION,
                        tool_version: env!("CARGO_PKG_VERSION"),
                        subcommand: out.name,
                        config: out.config,
                        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
                        payload: out.payload,
                    };
                    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
                }
                Format::Csv => print!("{}", out.table.render()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
