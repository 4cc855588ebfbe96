use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use interlace_core::graph::{canonical_cyclic, parse_dow, EulerSystem, Multigraph};
use interlace_core::interlace::{interlace_graph, interlace_matrix, parse_label_set, LoopedGraph};
use interlace_core::partitions::{
    partition_matrix, trace, verify_extended_cle, TransitionAssignment,
};
use interlace_core::permutations::{
    as_cycle_times_transpositions, orbit_count_via_nullity, verify_permutation_reduction,
    Permutation, DEFAULT_REDUCTION_CAP,
};
use interlace_core::polynomials::{
    check_subset_cap, courcelle, courcelle_from_partitions, q2_from_partitions, q_from_partitions,
    q_nullity, q_two_variable, DEFAULT_PAIR_CAP, DEFAULT_SUBSET_CAP,
};
use interlace_core::{Gf2Matrix, MultiPoly};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "interlace",
    version,
    about = "Interlace matrices, circuit partitions and interlace polynomials"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Rank and nullity over GF(2) of a matrix file.
    Nullity { file: PathBuf },
    /// Interlace matrix of the Euler system given by a word file.
    InterlaceMatrix {
        #[arg(long)]
        dow: PathBuf,
    },
    /// Vertex-nullity interlace polynomial.
    Qn(PolyInput),
    /// Two-variable interlace polynomial.
    Q2(PolyInput),
    /// Courcelle's multivariate interlace polynomial.
    Courcelle(PolyInput),
    /// Trace the circuit partition of a transition assignment.
    Partitions {
        #[arg(long)]
        dow: PathBuf,
        /// Tokens `v:F`, `v:C` or `v:X`, one per vertex.
        #[arg(long)]
        assign: String,
    },
    /// Check |P| = nullity(I_P) + c(G) for every transition assignment.
    VerifyCle {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = DEFAULT_PAIR_CAP)]
        cap: usize,
    },
    /// Count the orbits of a permutation.
    Orbits {
        /// Image notation `3 1 2 5 4` or cycle notation `(1 3 2)(4 5)`.
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        /// Size for cycle notation when trailing points are fixed.
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, value_enum, default_value_t = Via::Oracle)]
        via: Via,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    #[arg(long)]
    dow: Option<PathBuf>,
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Args)]
struct PolyInput {
    #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
    dow: Option<PathBuf>,
    /// Comma-separated looped vertices of the interlace graph.
    #[arg(long, requires = "dow")]
    loops: Option<String>,
    /// Looped-graph file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Compute from circuit partitions of the Euler system instead of
    /// nullities of the interlace graph.
    #[arg(long, requires = "dow")]
    partitions: bool,
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    Oracle,
    Nullity,
    Reduction,
}

enum Failure {
    Input(String),
    /// Output that should be shown even though a check failed.
    Counterexample(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn with_path<T, E: std::fmt::Display>(path: &Path, r: Result<T, E>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_dow(path: &Path) -> Result<EulerSystem, Failure> {
    let words = with_path(path, parse_dow(&read(path)?))?;
    Ok(with_path(path, Multigraph::from_double_occurrence_words(&words))?.1)
}

fn load_system(input: &GraphInput) -> Result<EulerSystem, Failure> {
    match (&input.dow, &input.edges) {
        (Some(p), _) => load_dow(p),
        (_, Some(p)) => {
            let g = with_path(p, Multigraph::parse_edge_list(&read(p)?))?;
            Ok(EulerSystem::hierholzer(Arc::new(g)))
        }
        _ => Err(Failure::Input("one of --dow or --edges is required".into())),
    }
}

fn matrix_json(m: &Gf2Matrix) -> Value {
    json!({ "labels": m.labels(), "rows": m.to_rows() })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serialises");
    s.push('\n');
    s
}

fn nullity(path: &Path, format: Format) -> Outcome {
    let m = with_path(path, Gf2Matrix::parse(&read(path)?))?;
    let (rank, nullity) = (m.rank(), m.nullity());
    Ok(match format {
        Format::Text => format!("n {}\nrank {rank}\nnullity {nullity}\n", m.n()),
        Format::Json => pretty(&json!({ "n": m.n(), "rank": rank, "nullity": nullity })),
    })
}

fn interlace(path: &Path, format: Format) -> Outcome {
    let m = interlace_matrix(&load_dow(path)?);
    Ok(match format {
        Format::Text => m.to_string(),
        Format::Json => pretty(&matrix_json(&m)),
    })
}

#[derive(Clone, Copy)]
enum PolyKind {
    Qn,
    Q2,
    Courcelle,
}

fn polynomial(kind: PolyKind, input: &PolyInput, format: Format) -> Outcome {
    let default_cap = match kind {
        PolyKind::Courcelle => DEFAULT_PAIR_CAP,
        _ => DEFAULT_SUBSET_CAP,
    };
    let cap = input.cap.unwrap_or(default_cap);
    let p: MultiPoly = if let Some(path) = &input.graph {
        let h = with_path(path, LoopedGraph::parse(&read(path)?))?;
        direct(kind, &h, cap)?
    } else {
        let path = input.dow.as_deref().expect("clap enforces an input");
        let es = load_dow(path)?;
        let loops = input
            .loops
            .as_deref()
            .map(parse_label_set)
            .unwrap_or_default();
        if input.partitions {
            match kind {
                PolyKind::Qn => q_from_partitions(&es, &loops, cap)?,
                PolyKind::Q2 => q2_from_partitions(&es, &loops, cap)?,
                PolyKind::Courcelle => courcelle_from_partitions(&es, &loops, cap)?,
            }
        } else {
            direct(kind, &interlace_graph(&es, &loops)?, cap)?
        }
    };
    Ok(match format {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", p.to_json()),
    })
}

fn direct(kind: PolyKind, h: &LoopedGraph, cap: usize) -> Result<MultiPoly, Failure> {
    Ok(match kind {
        PolyKind::Qn => {
            check_subset_cap(h.vertex_count(), cap)?;
            q_nullity(h)
        }
        PolyKind::Q2 => {
            check_subset_cap(h.vertex_count(), cap)?;
            q_two_variable(h)
        }
        PolyKind::Courcelle => courcelle(h, cap)?,
    })
}

fn partitions(path: &Path, assign: &str, format: Format) -> Outcome {
    let es = load_dow(path)?;
    let g = es.graph().clone();
    let t = TransitionAssignment::parse(&g, assign)?;
    let ip = partition_matrix(&es, &t);
    let nu = ip.nullity();
    let c = es.component_count();
    let p = trace(&es, &t);
    let circuits: Vec<Vec<String>> = p
        .vertex_words(&g)
        .iter()
        .map(|w| {
            canonical_cyclic(w)
                .iter()
                .map(|&v| g.label(v).to_string())
                .collect()
        })
        .collect();
    let out = match format {
        Format::Text => {
            let mut s = format!(
                "assignment {}\nI_P\n{ip}nullity {nu}\ncomponents {c}\n",
                t.format(&g)
            );
            s += &format!("predicted |P| {}\ntraced |P| {}\n", nu + c, p.size());
            for w in &circuits {
                s += &format!("circuit {}\n", w.join(" "));
            }
            s
        }
        Format::Json => pretty(&json!({
            "assignment": t.format(&g),
            "matrix": matrix_json(&ip),
            "nullity": nu,
            "components": c,
            "predicted": nu + c,
            "traced": p.size(),
            "circuits": circuits,
        })),
    };
    if nu + c == p.size() {
        Ok(out)
    } else {
        Err(Failure::Counterexample(out))
    }
}

fn verify(input: &GraphInput, cap: usize, format: Format) -> Outcome {
    let es = load_system(input)?;
    let report = verify_extended_cle(&es, cap)?;
    let out = match format {
        Format::Text => report.to_string(),
        Format::Json => format!("{}\n", report.to_json()),
    };
    if report.passed() {
        Ok(out)
    } else {
        Err(Failure::Counterexample(out))
    }
}

fn orbits(perm: &str, size: Option<usize>, via: Via, format: Format) -> Outcome {
    let p = Permutation::parse(perm, size)?;
    let (count, report) = match via {
        Via::Oracle => (p.orbit_count(), None),
        Via::Nullity => {
            let ts = as_cycle_times_transpositions(&p).ok_or_else(|| {
                Failure::Input(format!(
                    "{p} is not (1 ... {}) followed by disjoint transpositions",
                    p.size()
                ))
            })?;
            (orbit_count_via_nullity(p.size(), &ts)?, None)
        }
        Via::Reduction => {
            let r = verify_permutation_reduction(&p, DEFAULT_REDUCTION_CAP)?;
            (r.nullity + r.components, Some(r))
        }
    };
    let out = match (format, &report) {
        (Format::Text, None) => format!("orbits {count}\n"),
        (Format::Text, Some(r)) => r.to_string(),
        (Format::Json, None) => pretty(&json!({ "permutation": p.to_string(), "orbits": count })),
        (Format::Json, Some(r)) => pretty(&serde_json::to_value(r).expect("report serialises")),
    };
    match report {
        Some(r) if !r.agree => Err(Failure::Counterexample(out)),
        _ => Ok(out),
    }
}

fn run(cli: &Cli) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Nullity { file } => nullity(file, f),
        Command::InterlaceMatrix { dow } => interlace(dow, f),
        Command::Qn(input) => polynomial(PolyKind::Qn, input, f),
        Command::Q2(input) => polynomial(PolyKind::Q2, input, f),
        Command::Courcelle(input) => polynomial(PolyKind::Courcelle, input, f),
        Command::Partitions { dow, assign } => partitions(dow, assign, f),
        Command::VerifyCle { graph, cap } => verify(graph, *cap, f),
        Command::Orbits { perm, size, via } => orbits(perm, *size, *via, f),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Counterexample(out)) => {
            print!("{out}");
            eprintln!("counterexample found");
            ExitCode::from(2)
        }
    }
}
