//! `cwreg`: exact computations and verification sweeps for regularity of
//! symbolic powers of edge ideals.
//!
//! Exit codes: 0 = success / all checks ok; 1 = at least one violated check;
//! 2 = usage or input error; 3 = a verification run where every row was
//! skipped.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use cwreg_core::resolution::CoefficientField;
use cwreg_core::{cw, ideal, io, resolution};

use cwreg::cache::Cache;
use cwreg::report::VerificationReport;
use cwreg::verify::{self, SweepOptions};

#[derive(Parser)]
#[command(
    name = "cwreg",
    version,
    about = "Exact regularity of symbolic powers of edge ideals, with verification sweeps",
    after_help = "Report CSV schema:\n  graph_id,provenance,n,m,match,ind_match,s,field_char,reg_symbolic,reg_ordinary,formula_value,status,elapsed_ms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Coefficient field characteristic: 0 for the rationals or a prime.
    #[arg(long, global = true, default_value_t = 0)]
    field_char: u64,

    /// Worker threads for verification sweeps.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,

    /// Output format for reports and artifacts.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Cache directory for computed regularities (falls back to the
    /// CWREG_CACHE_DIR environment variable; unset means no caching).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Generator cap when constructing symbolic/ordinary powers; rows that
    /// exceed it are reported as skipped.
    #[arg(long, global = true, default_value_t = ideal::DEFAULT_GEN_CAP)]
    gen_cap: usize,

    /// Seed for random-ideal generation in oracle tests.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl Format {
    fn as_str(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

/// Inclusive range of powers, written `k` or `lo..hi`.
#[derive(Debug, Clone, Copy)]
struct SRange {
    lo: i64,
    hi: i64,
}

impl std::str::FromStr for SRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_one = |t: &str| {
            t.trim().parse::<i64>().map_err(|_| format!("invalid power value {t:?}"))
        };
        let range = match s.split_once("..") {
            Some((lo, hi)) => SRange { lo: parse_one(lo)?, hi: parse_one(hi)? },
            None => {
                let k = parse_one(s)?;
                SRange { lo: k, hi: k }
            }
        };
        if range.lo > range.hi {
            return Err(format!("empty power range {s:?}"));
        }
        if range.lo < 1 {
            return Err(format!("powers must be at least 1; got {s:?}"));
        }
        Ok(range)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print graph invariants and the Cameron-Walker decomposition.
    Analyze {
        /// Graph file: "n m" header + edge lines, or JSON {"n":..,"edges":[..]}.
        graph_file: PathBuf,
    },
    /// Print the minimal generators of the s-th symbolic power of the edge ideal.
    Sympow {
        graph_file: PathBuf,
        /// Power.
        #[arg(long, default_value_t = 1)]
        s: i64,
    },
    /// Print the Castelnuovo-Mumford regularity of a monomial ideal (JSON
    /// file with "gens") or of a power of a graph's edge ideal.
    Reg {
        /// Ideal JSON or graph file.
        input: PathBuf,
        /// Power of the edge ideal (graph inputs only; default 1).
        #[arg(long)]
        s: Option<i64>,
        /// Use the ordinary power instead of the symbolic power.
        #[arg(long)]
        ordinary: bool,
    },
    /// Generate a Cameron-Walker graph from a parameter JSON file.
    GenCw {
        params_file: PathBuf,
    },
    /// Print the graded Betti table of a monomial ideal.
    Betti {
        ideal_file: PathBuf,
    },
    /// Run a verification sweep and print its report.
    #[command(subcommand_value_name = "CHECK")]
    Verify {
        #[command(subcommand)]
        check: VerifyCheck,
    },
}

#[derive(Subcommand)]
enum VerifyCheck {
    /// reg(I(G)^(s)) = 2s + ind_match(G) - 1 across the Cameron-Walker
    /// family sweep (members plus disjoint unions of a fixed prefix).
    Theorem {
        #[arg(long, default_value_t = 11)]
        max_vertices: usize,
        /// Powers to sweep, e.g. 2 or 1..3 (inclusive).
        #[arg(long, default_value = "1..3")]
        s: SRange,
    },
    /// reg(I(G)^(s)) >= 2s + ind_match(G) - 1 on every labeled connected
    /// graph up to the vertex bound (exhaustive; bound capped at 7).
    LowerBound {
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        #[arg(long, default_value = "1..2")]
        s: SRange,
    },
    /// Colon identities: (I^(s) : triangle product) = I^(s-2) and
    /// (I^(s) : pendant-edge product) = I^(s-1) per pendant feature.
    Colon {
        #[arg(long, default_value_t = 11)]
        max_vertices: usize,
        #[arg(long, default_value = "1..3")]
        s: SRange,
    },
    /// The nine inequalities of the inductive regularity proof, each side
    /// computed exactly, on non-chordal family members with a pendant
    /// triangle.
    ProofTrace {
        #[arg(long, default_value_t = 11)]
        max_vertices: usize,
        /// Powers to trace (values below 2 are outside the inductive range
        /// and are ignored).
        #[arg(long, default_value = "2..3")]
        s: SRange,
        /// How many graphs to trace.
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Ordinary powers: reg(I(G)^s) = 2s + ind_match(G) - 1 on family
    /// members, ideal equality with the symbolic power on bipartite ones,
    /// and agreement of both regularities where both are computed.
    Ordinary {
        #[arg(long, default_value_t = 11)]
        max_vertices: usize,
        #[arg(long, default_value = "1..3")]
        s: SRange,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32, String> {
    let field = CoefficientField::new(cli.field_char)
        .map_err(|e| format!("--field-char: {e}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs as usize)
        .build_global()
        .map_err(|e| format!("failed to build worker pool: {e}"))?;

    match &cli.command {
        Command::Analyze { graph_file } => {
            let g = read_graph(graph_file)?;
            let out = render_analysis(&g, cli.format)?;
            write_out(cli.out.as_deref(), &out)?;
            Ok(0)
        }
        Command::Sympow { graph_file, s } => {
            let g = read_graph(graph_file)?;
            let power = ideal::symbolic_power_with_cap(&g, *s, cli.gen_cap)
                .map_err(|e| e.to_string())?;
            let out = match cli.format {
                Format::Json => io::ideal_to_json(&power),
                Format::Csv => {
                    let mut lines: Vec<String> =
                        power.gens().iter().map(io::monomial_to_string).collect();
                    lines.push(String::new());
                    lines.join("\n")
                }
            };
            write_out(cli.out.as_deref(), &out)?;
            Ok(0)
        }
        Command::Reg { input, s, ordinary } => {
            let reg = compute_reg(input, *s, *ordinary, field, cli.gen_cap)?;
            write_out(cli.out.as_deref(), &format!("{reg}\n"))?;
            Ok(0)
        }
        Command::GenCw { params_file } => {
            let text = read_file(params_file)?;
            let params = io::parse_params_json(&text).map_err(|e| e.to_string())?;
            let g = cw::generate(&params).map_err(|e| e.to_string())?;
            let out = match cli.format {
                Format::Json => {
                    let mut s = io::graph_to_json_with_params(&g, &params);
                    s.push('\n');
                    s
                }
                Format::Csv => io::graph_to_text(&g),
            };
            write_out(cli.out.as_deref(), &out)?;
            Ok(0)
        }
        Command::Betti { ideal_file } => {
            let text = read_file(ideal_file)?;
            let ideal = io::parse_ideal_json(&text).map_err(|e| e.to_string())?;
            let table = resolution::betti_table(&ideal, field).map_err(|e| e.to_string())?;
            let out = match cli.format {
                Format::Json => {
                    let mut s = io::betti_to_json(&table);
                    s.push('\n');
                    s
                }
                Format::Csv => io::betti_to_csv(&table),
            };
            write_out(cli.out.as_deref(), &out)?;
            Ok(0)
        }
        Command::Verify { check } => {
            let mut cache = Cache::open(cli.cache_dir.as_deref())
                .map_err(|e| format!("cannot open cache: {e}"))?;
            let report = run_verify(check, field, cli.gen_cap, &mut cache)?;
            write_out(cli.out.as_deref(), &report.render(cli.format.as_str()))?;
            eprintln!("{}", report.summary());
            Ok(report.exit_code())
        }
    }
}

fn run_verify(
    check: &VerifyCheck,
    field: CoefficientField,
    gen_cap: usize,
    cache: &mut Cache,
) -> Result<VerificationReport, String> {
    let opts = |max_vertices: usize, s: SRange| SweepOptions {
        max_vertices,
        s_min: s.lo,
        s_max: s.hi,
        field,
        gen_cap,
    };
    match check {
        VerifyCheck::Theorem { max_vertices, s } => {
            Ok(verify::verify_theorem_sweep(&opts(*max_vertices, *s), cache))
        }
        VerifyCheck::LowerBound { max_vertices, s } => {
            verify::verify_lower_bound(&opts(*max_vertices, *s), cache)
                .map_err(|e| e.to_string())
        }
        VerifyCheck::Colon { max_vertices, s } => {
            Ok(verify::verify_colon_sweep(&opts(*max_vertices, *s)))
        }
        VerifyCheck::ProofTrace { max_vertices, s, count } => {
            Ok(verify::verify_proof_trace_sweep(&opts(*max_vertices, *s), *count))
        }
        VerifyCheck::Ordinary { max_vertices, s } => {
            Ok(verify::verify_ordinary_sweep(&opts(*max_vertices, *s), cache))
        }
    }
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn read_graph(path: &Path) -> Result<cwreg_core::Graph, String> {
    let text = read_file(path)?;
    io::parse_graph_auto(&text).map_err(|e| e.to_string())
}

fn write_out(out: Option<&Path>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn compute_reg(
    input: &Path,
    s: Option<i64>,
    ordinary: bool,
    field: CoefficientField,
    gen_cap: usize,
) -> Result<usize, String> {
    let text = read_file(input)?;
    // An ideal file is JSON with a "gens" field; otherwise expect a graph.
    if let Ok(ideal) = io::parse_ideal_json(&text) {
        if s.is_some() || ordinary {
            return Err("--s and --ordinary apply to graph inputs only".into());
        }
        return resolution::regularity(&ideal, field).map_err(|e| e.to_string());
    }
    let g = io::parse_graph_auto(&text).map_err(|e| e.to_string())?;
    let s = s.unwrap_or(1);
    let power = if ordinary {
        let exp = u32::try_from(s).map_err(|_| format!("--ordinary needs s >= 1; got {s}"))?;
        ideal::edge_ideal(&g).power_with_cap(exp, gen_cap).map_err(|e| e.to_string())?
    } else {
        ideal::symbolic_power_with_cap(&g, s, gen_cap).map_err(|e| e.to_string())?
    };
    resolution::regularity(&power, field).map_err(|e| e.to_string())
}

fn render_analysis(g: &cwreg_core::Graph, format: Format) -> Result<String, String> {
    let matching = g.matching_number().map_err(|e| e.to_string())?;
    let ind_match = g.induced_matching_number().map_err(|e| e.to_string())?;
    let decomposition = cw::decompose(g);
    let is_cw = decomposition.is_ok();
    match format {
        Format::Csv => {
            let mut out = String::new();
            out.push_str(&format!("n: {}\n", g.n()));
            out.push_str(&format!("m: {}\n", g.m()));
            out.push_str(&format!("connected: {}\n", g.is_connected()));
            out.push_str(&format!("bipartite: {}\n", g.is_bipartite()));
            out.push_str(&format!("chordal: {}\n", g.is_chordal()));
            out.push_str(&format!("match: {matching}\n"));
            out.push_str(&format!("ind_match: {ind_match}\n"));
            out.push_str(&format!("pendant_edges: {}\n", g.pendant_edges().len()));
            out.push_str(&format!("pendant_triangles: {}\n", g.pendant_triangles().len()));
            out.push_str(&format!("cameron_walker: {is_cw}\n"));
            match &decomposition {
                Ok(d) => {
                    out.push_str(&format!("decomposition: {}\n", d.describe()));
                    out.push_str(&format!("params: {}\n", io::params_to_json(d)));
                }
                Err(e) => out.push_str(&format!("reason: {e}\n")),
            }
            Ok(out)
        }
        Format::Json => {
            let mut obj = serde_json::json!({
                "n": g.n(),
                "m": g.m(),
                "connected": g.is_connected(),
                "bipartite": g.is_bipartite(),
                "chordal": g.is_chordal(),
                "match": matching,
                "ind_match": ind_match,
                "pendant_edges": g.pendant_edges().len(),
                "pendant_triangles": g.pendant_triangles().len(),
                "cameron_walker": is_cw,
            });
            match &decomposition {
                Ok(d) => {
                    obj["decomposition"] = serde_json::json!(d.describe());
                    obj["params"] = serde_json::from_str(&io::params_to_json(d))
                        .map_err(|e| e.to_string())?;
                }
                Err(e) => obj["reason"] = serde_json::json!(e.to_string()),
            }
            let mut s = serde_json::to_string_pretty(&obj).map_err(|e| e.to_string())?;
            s.push('\n');
            Ok(s)
        }
    }
}
