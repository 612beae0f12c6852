//! `levi`: Betti tables and classification for Levi graphs of curve arrangements.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use levi::arrangements::{self, Arrangement};
use levi::bipartite::{levi_graph, BipartiteGraph};
use levi::classify::{
    bounds_report, bounds_verify, classify_graph, graph_bounds, power_bound_check, BoundReport,
};
use levi::corpus::run_corpus;
use levi::homology::PrimeField;
use levi::resolutions::analyze_graph;
use levi::{Caps, Error};

const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_MISMATCH: u8 = 4;
const EXIT_ZERO_IDEAL: u8 = 5;
const EXIT_UNKNOWN_FAMILY: u8 = 6;

#[derive(Parser)]
#[command(
    name = "levi",
    version,
    about = "Edge ideals of Levi graphs of curve arrangements"
)]
struct Cli {
    /// Characteristic of the coefficient field.
    #[arg(long = "char", global = true, default_value_t = 2)]
    characteristic: u64,
    /// Worker threads for the homology loops (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Diagram)]
    format: Format,
    /// Largest vertex count handled by Hochster's formula.
    #[arg(long, global = true)]
    cap_vertices: Option<usize>,
    /// Largest number of faces enumerated in one complex.
    #[arg(long, global = true)]
    cap_faces: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Diagram,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a built-in arrangement as JSON.
    Gen {
        /// pencil, quasi-pencil, generic-lines, projective-plane, conic-6-5
        /// or marked-triple-point.
        family: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        q: Option<u64>,
    },
    /// Graded Betti table of S/I(G) with pd, reg, depth and the CM flag.
    Betti { input: Option<PathBuf> },
    /// Cohen-Macaulay and sequentially Cohen-Macaulay verdicts.
    Classify { input: Option<PathBuf> },
    /// Combinatorial bounds, checked against the Betti table when feasible.
    Bounds { input: Option<PathBuf> },
    /// reg(I^q) against 2q + k - 1.
    Power {
        input: Option<PathBuf>,
        #[arg(long)]
        q: u32,
    },
    /// Recompute every reference result over GF(2), GF(3) and GF(32003).
    Corpus,
}

struct Failure {
    code: u8,
    message: String,
    /// Output that explains the failure, written like a normal result.
    report: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::ZeroIdeal => EXIT_ZERO_IDEAL,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
            report: None,
        }
    }
}

fn input_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
        report: None,
    }
}

/// Parsed input: an arrangement carries its Levi graph along.
struct Input {
    arrangement: Option<Arrangement>,
    graph: BipartiteGraph,
}

fn read_input(path: &Option<PathBuf>) -> Result<Input, Failure> {
    let text = match path {
        Some(p) => {
            fs::read_to_string(p).map_err(|e| input_failure(format!("{}: {e}", p.display())))?
        }
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| input_failure(format!("stdin: {e}")))?;
            s
        }
    };
    let value: Value =
        serde_json::from_str(&text).map_err(|e| input_failure(format!("parse error: {e}")))?;
    if value.get("points").is_some() {
        let a = Arrangement::from_json(&text)?;
        Ok(Input {
            graph: levi_graph(&a),
            arrangement: Some(a),
        })
    } else if value.get("edges").is_some() {
        Ok(Input {
            arrangement: None,
            graph: BipartiteGraph::from_json(&text)?,
        })
    } else {
        Err(input_failure(
            "input is neither an arrangement (\"points\") nor a graph (\"edges\")",
        ))
    }
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    v.ok_or_else(|| input_failure(format!("{family} needs --{flag}")))
}

fn generate(family: &str, k: Option<usize>, q: Option<u64>) -> Result<Arrangement, Failure> {
    let a = match family {
        "pencil" => arrangements::gen_pencil(need(k, "k", family)?)?,
        "quasi-pencil" => arrangements::gen_quasi_pencil(need(k, "k", family)?)?,
        "generic-lines" => arrangements::gen_generic_lines(need(k, "k", family)?)?,
        "projective-plane" => arrangements::gen_projective_plane(need(q, "q", family)?)?,
        "conic-6-5" => arrangements::gen_conic_6_5()?,
        "marked-triple-point" => arrangements::gen_marked_triple_point()?,
        other => {
            return Err(Failure {
                code: EXIT_UNKNOWN_FAMILY,
                message: format!("unknown family {other:?}"),
                report: None,
            });
        }
    };
    Ok(a)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

fn bounds_of(input: &Input, caps: &Caps) -> BoundReport {
    match &input.arrangement {
        Some(a) => bounds_report(a, caps),
        None => graph_bounds(&input.graph, caps),
    }
}

fn render_bounds(r: &BoundReport) -> String {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "n/a".into());
    let mut out = format!("s = {}, k = {}, n = {}\n", r.s, r.k, r.n);
    if let Some(d) = r.degree {
        out += &format!(
            "degree d = {d}, no point on all curves: {}\n",
            r.t_k_zero == Some(true)
        );
    }
    out += &format!(
        "pd lower bound: {}\n",
        opt(r.pd_lower.map(|v| v.to_string()))
    );
    out += &format!(
        "pd upper bound: {}\n",
        opt(r.pd_upper.map(|v| v.to_string()))
    );
    out += &format!(
        "max-degree pd bound: {} (max degree {})\n",
        opt(r.dhs_upper.map(|v| v.to_string())),
        r.max_degree
    );
    out += &format!("matching number: {}\n", r.matching_number);
    out += &format!(
        "induced matching number: {}\n",
        opt(r.induced_matching_number.map(|v| v.to_string()))
    );
    out += &format!("reg(I) <= {}\n", r.reg_upper_matching);
    if let Some(lo) = r.reg_lower_induced {
        out += &format!("reg(I) >= {lo}\n");
    }
    if let Some(hi) = r.reg_upper_global {
        out += &format!("reg(I) <= k + 1 = {hi}\n");
    }
    out += &format!(
        "power bound reg(I^q) <= 2q + {} applies: {}\n",
        r.k as i64 - 1,
        r.power_bound_applicable
    );
    if let Some(rr) = r.rees_reg {
        out += &format!("Rees algebra regularity: {rr}\n");
    }
    out
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let field = PrimeField::new(cli.characteristic)?;
    let mut caps = Caps::default();
    if let Some(v) = cli.cap_vertices {
        caps.hochster_vertices = v;
    }
    if let Some(f) = cli.cap_faces {
        caps.faces = f;
    }
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Gen { family, k, q } => {
            let a = generate(family, *k, *q)?;
            Ok(a.to_json() + "\n")
        }
        Command::Betti { input } => {
            let input = read_input(input)?;
            match analyze_graph(&input.graph, field, &caps) {
                Ok((table, summary)) => {
                    if json {
                        let table: Value =
                            serde_json::from_str(&table.to_json()).expect("table json");
                        return Ok(pretty(&json!({ "table": table, "summary": summary })));
                    }
                    let mut out = table.diagram();
                    out += &format!("pd(S/I) = {}\n", summary.pd);
                    out += &format!("reg(S/I) = {}\n", summary.reg_quotient);
                    out += &format!("reg(I) = {}\n", summary.reg_ideal);
                    out += &format!(
                        "dim = {}, depth = {}, codim = {}\n",
                        summary.dim, summary.depth, summary.codim
                    );
                    out += &format!(
                        "Cohen-Macaulay: {}\n",
                        if summary.is_cm { "yes" } else { "no" }
                    );
                    Ok(out)
                }
                Err(e @ Error::CapExceeded { .. }) => {
                    let r = bounds_of(&input, &caps);
                    let report = if json {
                        pretty(&json!({ "error": e.to_string(), "bounds": r }))
                    } else {
                        format!(
                            "Betti table not computed: {e}\nbounds only:\n{}",
                            render_bounds(&r)
                        )
                    };
                    Err(Failure {
                        code: EXIT_CAP,
                        message: e.to_string(),
                        report: Some(report),
                    })
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Classify { input } => {
            let input = read_input(input)?;
            let v = classify_graph(&input.graph, &caps)?;
            Ok(if json { v.to_json() + "\n" } else { v.report() })
        }
        Command::Bounds { input } => {
            let input = read_input(input)?;
            let r = bounds_of(&input, &caps);
            let computed = match analyze_graph(&input.graph, field, &caps) {
                Ok((_, summary)) => Some(summary),
                Err(Error::CapExceeded { .. }) | Err(Error::ZeroIdeal) => None,
                Err(e) => return Err(e.into()),
            };
            let checks = computed.as_ref().map(|s| bounds_verify(&r, s));
            if json {
                return Ok(pretty(
                    &json!({ "bounds": r, "summary": computed, "checks": checks }),
                ));
            }
            let mut out = render_bounds(&r);
            match (&computed, &checks) {
                (Some(s), Some(checks)) => {
                    out += &format!("computed: pd(S/I) = {}, reg(I) = {}\n", s.pd, s.reg_ideal);
                    for c in checks {
                        out += &format!(
                            "{} {}: {}\n",
                            if c.holds { "PASS" } else { "FAIL" },
                            c.name,
                            c.statement
                        );
                    }
                }
                _ => out += "computed values: not available (beyond caps or zero ideal)\n",
            }
            Ok(out)
        }
        Command::Power { input, q } => {
            let input = read_input(input)?;
            if *q == 0 {
                return Err(input_failure("--q must be positive"));
            }
            let c = power_bound_check(&input.graph, *q, field, &caps)?;
            let applicable = input
                .arrangement
                .as_ref()
                .map(|a| bounds_report(a, &caps).power_bound_applicable);
            if json {
                return Ok(pretty(&json!({ "check": c, "applicable": applicable })));
            }
            let mut out = format!(
                "reg(I^{q}) = {}, bound 2q + k - 1 = {}: {}\n",
                c.reg,
                c.bound,
                if c.holds { "holds" } else { "VIOLATED" }
            );
            if let Some(a) = applicable {
                out += &format!("bound claimed for this arrangement (3 <= k <= s): {a}\n");
            }
            Ok(out)
        }
        Command::Corpus => {
            let fields: Vec<PrimeField> = [2, 3, 32003]
                .into_iter()
                .map(|p| PrimeField::new(p).expect("prime"))
                .collect();
            let checks = run_corpus(&fields, &caps)?;
            let failed = checks.iter().filter(|c| !c.passed).count();
            let out = if json {
                pretty(&json!({ "checks": checks, "failed": failed }))
            } else {
                let mut out: String = checks
                    .iter()
                    .map(|c| {
                        format!(
                            "{} {}: {}\n",
                            if c.passed { "PASS" } else { "FAIL" },
                            c.name,
                            c.detail
                        )
                    })
                    .collect();
                out += &format!("{} checks, {} failed\n", checks.len(), failed);
                out
            };
            if failed > 0 {
                Err(Failure {
                    code: EXIT_MISMATCH,
                    message: format!("{failed} corpus checks failed"),
                    report: Some(out),
                })
            } else {
                Ok(out)
            }
        }
    }
}

fn emit(cli: &Cli, text: &str) -> io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    }
    match run(&cli) {
        Ok(text) => match emit(&cli, &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_INPUT)
            }
        },
        Err(f) => {
            if let Some(report) = &f.report {
                if let Err(e) = emit(&cli, report) {
                    eprintln!("error: {e}");
                }
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
