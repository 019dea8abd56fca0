//! `tppa`: command-line access to the rook monoid and totally propagating
//! partition algebra computations.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tppa_core::bratteli::{ihat, rhat, rook_tower, GradedGraph};
use tppa_core::characters::chi_star;
use tppa_core::combinat::{SetPartitionTableau, YoungDiagram};
use tppa_core::diagram::{compose, from_orbit, to_orbit, AlgebraElement, Basis, PartitionDiagram};
use tppa_core::jm::{gt_decompose, verify_centrality, verify_operator_identity};
use tppa_core::rook::RookElement;
use tppa_core::rsk::{path_to_spt, spt_to_path};
use tppa_core::seminormal::RookIrrep;
use tppa_core::tensor::schur_weyl_report;
use tppa_core::verify::{multiplicity_three_ways, run_suite, Scope};
use tppa_core::{Error, Level};

const DEFAULT_PATH_CEILING: u128 = 100_000;

#[derive(Parser)]
#[command(
    name = "tppa",
    version,
    about = "Rook monoid and totally propagating partition algebra toolkit"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphArg {
    Rook,
    Rhat,
    Ihat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Diagram,
    Orbit,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compose two partition diagrams (first on top).
    Compose { d1: String, d2: String },
    /// Rewrite a single basis element in the other basis.
    Orbit {
        diagram: String,
        /// Basis the input is written in.
        #[arg(long, value_enum, default_value = "diagram")]
        from: BasisArg,
    },
    /// Emit a Bratteli graph as DOT or JSON.
    Bratteli {
        #[arg(long, value_enum)]
        graph: GraphArg,
        /// Rook size (rook, rhat).
        #[arg(long)]
        n: Option<usize>,
        /// Top level for rhat.
        #[arg(long)]
        k: Option<usize>,
        /// Top level for ihat, e.g. 3 or 5/2.
        #[arg(long)]
        t: Option<Level>,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        /// List the paths from the bottom vertex to this shape at the top level.
        #[arg(long)]
        paths_to: Option<YoungDiagram>,
    },
    /// Dimension tables for V^λ_n and I^λ_t.
    Dims {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        t: Option<Level>,
    },
    /// Multiplicity of V^λ_n in (ℂⁿ)^⊗k, computed three ways.
    Mult {
        #[arg(long)]
        lambda: YoungDiagram,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Convert between R̂(n)-paths and set-partition tableaux.
    Rsk {
        /// JSON list of partitions starting at [1].
        #[arg(long, conflicts_with = "tableau")]
        path: Option<String>,
        /// JSON rows of blocks, e.g. [[[1]],[[2,3]]].
        #[arg(long)]
        tableau: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// χ*_λ(σ) for σ given as (column,row) pairs.
    Character {
        #[arg(long)]
        lambda: YoungDiagram,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: String,
    },
    /// Kernel, image and commutant dimensions on (ℂⁿ)^⊗k.
    SchurWeyl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        half: bool,
    },
    /// Gelfand–Tsetlin table, or the centrality and operator checks with --verify.
    Jm {
        #[arg(long)]
        t: Level,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        verify: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Verification(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(msg) => Failure::Verification(json!({ "error": msg })),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<Output, Failure>;

enum Output {
    Json(Value),
    Text(String),
}

fn path_ceiling() -> std::result::Result<u128, Failure> {
    match std::env::var("TPPA_PATH_CEILING") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("TPPA_PATH_CEILING={s:?} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_PATH_CEILING),
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, s: &str) -> std::result::Result<T, Failure> {
    serde_json::from_str(s).map_err(|e| Failure::Usage(format!("{what}: {e}")))
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn element_json(a: &AlgebraElement) -> Value {
    let terms: serde_json::Map<String, Value> = a
        .sum()
        .iter()
        .map(|(d, c)| (d.to_string(), Value::String(c.to_string())))
        .collect();
    json!({
        "basis": match a.basis() { Basis::Diagram => "diagram", Basis::Orbit => "orbit" },
        "terms": terms,
    })
}

fn shapes_json(v: &[YoungDiagram]) -> Value {
    v.iter().map(|l| to_json(&l.parts())).collect()
}

fn build_graph(
    graph: GraphArg,
    n: Option<usize>,
    k: Option<usize>,
    t: Option<Level>,
) -> std::result::Result<GradedGraph, Failure> {
    let need = |x: Option<usize>, name: &str| x.ok_or_else(|| Failure::Usage(format!("--{name} is required")));
    Ok(match graph {
        GraphArg::Rook => rook_tower(need(n, "n")?),
        GraphArg::Rhat => {
            let (n, k) = (need(n, "n")?, need(k, "k")?);
            if n == 0 || k == 0 {
                return Err(Failure::Usage("rhat needs n, k >= 1".into()));
            }
            rhat(n, k)
        }
        GraphArg::Ihat => {
            let t = t.ok_or_else(|| Failure::Usage("--t is required".into()))?;
            if t.twice() == 0 {
                return Err(Failure::Usage("--t must be at least 1/2".into()));
            }
            ihat(t)
        }
    })
}

fn run(cmd: Cmd) -> Outcome {
    match cmd {
        Cmd::Compose { d1, d2 } => {
            let d1: PartitionDiagram = d1.parse()?;
            let d2: PartitionDiagram = d2.parse()?;
            let (d, l) = compose(&d1, &d2)?;
            Ok(Output::Json(json!({ "diagram": d.to_string(), "xi_power": l })))
        }
        Cmd::Orbit { diagram, from } => {
            let d: PartitionDiagram = diagram.parse()?;
            let out = match from {
                BasisArg::Diagram => to_orbit(&AlgebraElement::basis_element(d, Basis::Diagram)),
                BasisArg::Orbit => from_orbit(&AlgebraElement::basis_element(d, Basis::Orbit)),
            };
            Ok(Output::Json(element_json(&out)))
        }
        Cmd::Bratteli {
            graph,
            n,
            k,
            t,
            format,
            paths_to,
        } => {
            let g = build_graph(graph, n, k, t)?;
            if let Some(target) = paths_to {
                let top = *g.levels.last().ok_or_else(|| Failure::Usage("empty graph".into()))?;
                let bottom = g.levels[0];
                let root = g.vertices[0][0].clone();
                let paths = g.enumerate_paths((bottom, &root), (top, &target), path_ceiling()?)?;
                let list: Vec<Value> = paths
                    .iter()
                    .map(|p| {
                        json!({
                            "shapes": shapes_json(&p.vertices),
                            "via": p.labels.iter().map(|l| l.as_ref().map(|l| to_json(&l.parts()))).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                return Ok(Output::Json(json!({ "count": list.len(), "paths": list })));
            }
            Ok(match format {
                Format::Dot => Output::Text(g.to_dot()),
                Format::Json => Output::Json(g.to_json()),
            })
        }
        Cmd::Dims { n, t } => {
            if n.is_none() && t.is_none() {
                return Err(Failure::Usage("give --n and/or --t".into()));
            }
            let mut out = serde_json::Map::new();
            if let Some(n) = n {
                let mut rows = serde_json::Map::new();
                for l in tppa_core::combinat::partitions_upto(n) {
                    rows.insert(l.to_string(), json!(RookIrrep::new(&l, n)?.dim()));
                }
                out.insert("rook".into(), Value::Object(rows));
            }
            if let Some(t) = t {
                if t.twice() == 0 {
                    return Err(Failure::Usage("--t must be at least 1/2".into()));
                }
                let g = ihat(t);
                let empty = YoungDiagram::empty();
                let mut rows = serde_json::Map::new();
                for (l, c) in g.path_counts((Level::HALF, &empty), t)? {
                    rows.insert(l.to_string(), json!(c.to_string()));
                }
                out.insert("tppa".into(), Value::Object(rows));
            }
            Ok(Output::Json(Value::Object(out)))
        }
        Cmd::Mult { lambda, k, n } => {
            let (p, f, c) = multiplicity_three_ways(&lambda, k, n)?;
            Ok(Output::Json(
                json!({ "paths": p, "stirling_formula": f, "character": c }),
            ))
        }
        Cmd::Rsk { path, tableau, n } => {
            if let Some(path) = path {
                let parts: Vec<Vec<usize>> = parse_json("path", &path)?;
                let shapes: Vec<YoungDiagram> = parts.into_iter().map(YoungDiagram::new).collect::<Result<_, _>>()?;
                let k = shapes.len();
                let n = n.unwrap_or_else(|| shapes.iter().map(YoungDiagram::size).max().unwrap_or(1));
                if k == 0 || n == 0 {
                    return Err(Failure::Usage("empty path".into()));
                }
                let g = rhat(n, k);
                let p = g.path_from_shapes(Level::integer(1), &shapes)?;
                let t = path_to_spt(&p)?;
                Ok(Output::Json(json!({ "tableau": to_json(&t) })))
            } else if let Some(tableau) = tableau {
                let t: SetPartitionTableau = parse_json("tableau", &tableau)?;
                let t = SetPartitionTableau::new(t.rows().to_vec())?;
                let k = t.letters().last().copied().unwrap_or(0);
                let p = spt_to_path(&t, k)?;
                Ok(Output::Json(json!({
                    "path": shapes_json(&p.vertices),
                    "via": p.labels.iter().map(|l| l.as_ref().map(|l| to_json(&l.parts()))).collect::<Vec<_>>(),
                })))
            } else {
                Err(Failure::Usage("give --path or --tableau".into()))
            }
        }
        Cmd::Character { lambda, n, sigma } => {
            let s = RookElement::parse(n, &sigma)?;
            let v = chi_star(&lambda, &s)?;
            Ok(Output::Json(
                json!({ "lambda": lambda.to_string(), "sigma": s.to_string(), "chi_star": v.to_string() }),
            ))
        }
        Cmd::SchurWeyl { n, k, half } => {
            let r = schur_weyl_report(n, k, half)?;
            let v = to_json(&r);
            if r.ok {
                Ok(Output::Json(v))
            } else {
                Err(Failure::Verification(v))
            }
        }
        Cmd::Jm { t, n, verify } => {
            if verify {
                let mut out = serde_json::Map::new();
                let c = verify_centrality(t)?;
                let mut ok = c.ok;
                out.insert("centrality".into(), to_json(&c));
                if t >= Level::integer(1) {
                    let n = n.unwrap_or(t.ceil() as usize + usize::from(!t.is_integer()));
                    let r = verify_operator_identity(n, t)?;
                    ok &= r.ok;
                    out.insert("operator_identity".into(), to_json(&r));
                }
                out.insert("ok".into(), json!(ok));
                let v = Value::Object(out);
                return if ok {
                    Ok(Output::Json(v))
                } else {
                    Err(Failure::Verification(v))
                };
            }
            let n = n.unwrap_or(t.ceil() as usize + 1);
            let r = gt_decompose(t, n)?;
            let v = to_json(&r);
            if r.ok {
                Ok(Output::Json(v))
            } else {
                Err(Failure::Verification(v))
            }
        }
        Cmd::Verify { suite, n } => {
            let checks = run_suite(&suite, Scope { n })?;
            let ok = checks.iter().all(|c| c.ok);
            let v = json!({ "suite": suite, "ok": ok, "checks": to_json(&checks) });
            if ok {
                Ok(Output::Json(v))
            } else {
                Err(Failure::Verification(v))
            }
        }
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}

fn print_json(v: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(Output::Json(v)) => {
            print_json(&v);
            ExitCode::SUCCESS
        }
        Ok(Output::Text(s)) => {
            emit(&s);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(v)) => {
            print_json(&v);
            ExitCode::from(1)
        }
    }
}
