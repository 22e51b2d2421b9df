use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pistr::constructions::{
    apply_injections, direct_sum, l_matrix, l_matrix_k1, m_matrix, named_family, tilde_matrix,
    BlockPair, Family, FixedMatrix, InjectionSpec,
};
use pistr::engine::{construct_labeling_with, EngineConfig};
use pistr::graph::{
    add_cross_edge, clique_cover, complete_graph, disjoint_union, matrix_to_labeled_graph, Graph,
    WeightedAdjacencyMatrix,
};
use pistr::io::{emit_graph, emit_labeling, parse_graph, GraphDocument};
use pistr::report::{ConstructReport, CoverReport, PsReport, VerifyReport};
use pistr::solver::{ps_exact, ps_exact_disconnected, PsValue, SolverConfig};
use pistr::verifier::{is_product_irregular, product_degrees};
use pistr::{Error, Result};

/// Product-irregular edge labelings: generate, verify, solve, construct.
#[derive(Parser)]
#[command(name = "pistr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit labeled matrices or unlabeled clique unions.
    #[command(subcommand)]
    Gen(Gen),
    /// Check a labeled document for product irregularity.
    Verify {
        /// Graph document, `-` for stdin.
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Exact product irregularity strength.
    Ps {
        file: String,
        #[arg(long, default_value_t = 8)]
        s_max: u32,
        /// Node budget; defaults to PISTR_BUDGET or 10^9.
        #[arg(long)]
        budget: Option<u64>,
        /// Combine per-component signatures instead of searching the whole graph.
        #[arg(long)]
        disconnected: bool,
        #[arg(long)]
        json: bool,
    },
    /// Minimum clique cover.
    Cover {
        file: String,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Strength-3 labeling from a clique cover of at most three parts.
    Construct {
        file: String,
        /// Seed of the randomized fallback search.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum Gen {
    /// Direct sum of named matrices, e.g. `A4 B9`, `T5 T5_TILDE`, `B5_TILDE`,
    /// `M7:1:2:3`, `L6`, `L6_K1`.
    Matrix {
        #[arg(required = true)]
        terms: Vec<String>,
        /// Injected cross entry `T12:i:j:w` with 1-based block rows.
        #[arg(long = "inject")]
        injections: Vec<String>,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Document)]
        format: MatrixFormat,
    },
    /// Disjoint union of complete graphs with optional cross edges.
    Graph {
        #[arg(required = true)]
        sizes: Vec<usize>,
        /// Cross edge `u,v` with 1-based vertex ids.
        #[arg(long = "edge")]
        edges: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Document,
    Matrix,
}

fn read_input(file: &str) -> Result<String> {
    let io_err = |e: std::io::Error| Error::Parse {
        line: 0,
        msg: format!("{file}: {e}"),
    };
    if file == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(file).map_err(io_err)
    }
}

fn load(file: &str) -> Result<GraphDocument> {
    parse_graph(&read_input(file)?)
}

fn parse_term(term: &str) -> Result<WeightedAdjacencyMatrix> {
    if let Ok(m) = term.parse::<FixedMatrix>() {
        return Ok(m.matrix());
    }
    let unknown = || Error::UnknownMatrix(term.to_string());
    let upper = term.to_ascii_uppercase();
    if let Some(rest) = upper.strip_prefix('M') {
        let parts: Vec<&str> = rest.split(':').collect();
        if let [n, x, y, z] = parts[..] {
            let num = |s: &str| s.parse::<u32>().map_err(|_| unknown());
            return m_matrix(n.parse().map_err(|_| unknown())?, num(x)?, num(y)?, num(z)?);
        }
        return Err(unknown());
    }
    if let Some(rest) = upper.strip_prefix('L') {
        return match rest.strip_suffix("_K1") {
            Some(n) => l_matrix_k1(n.parse().map_err(|_| unknown())?),
            None => l_matrix(rest.parse().map_err(|_| unknown())?),
        };
    }
    let (body, tilde) = match upper.strip_suffix("_TILDE") {
        Some(b) => (b, true),
        None => (upper.as_str(), false),
    };
    let family = match body.chars().next() {
        Some('A') => Family::A,
        Some('B') => Family::B,
        Some('C') => Family::C,
        _ => return Err(unknown()),
    };
    let n: usize = body[1..].parse().map_err(|_| unknown())?;
    if tilde {
        tilde_matrix(n, family)
    } else {
        named_family(n, family)
    }
}

fn parse_injection(s: &str) -> Result<InjectionSpec> {
    let bad = || Error::InvalidInjection(format!("`{s}`; expected T12:i:j:w"));
    let parts: Vec<&str> = s.split(':').collect();
    let [pair, i, j, w] = parts[..] else {
        return Err(bad());
    };
    let pair = match pair.to_ascii_uppercase().as_str() {
        "T12" => BlockPair::P12,
        "T13" => BlockPair::P13,
        "T23" => BlockPair::P23,
        _ => return Err(bad()),
    };
    let num = |x: &str| x.parse::<usize>().map_err(|_| bad());
    Ok(InjectionSpec::new(pair, num(i)?, num(j)?, num(w)? as u32))
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse {
        line: 0,
        msg: format!("edge `{s}`; expected u,v with 1-based ids"),
    };
    let (u, v) = s.split_once(',').ok_or_else(bad)?;
    let u: usize = u.trim().parse().map_err(|_| bad())?;
    let v: usize = v.trim().parse().map_err(|_| bad())?;
    if u == 0 || v == 0 {
        return Err(bad());
    }
    Ok((u - 1, v - 1))
}

macro_rules! put {
    ($buf:expr, $($arg:tt)*) => {
        $buf.push_str(&format!($($arg)*))
    };
}

macro_rules! putln {
    ($buf:expr, $($arg:tt)*) => {{
        put!($buf, $($arg)*);
        $buf.push('\n');
    }};
}

fn print_json<T: Serialize>(buf: &mut String, value: &T) {
    putln!(
        buf,
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn solver_config(budget: Option<u64>) -> SolverConfig {
    let mut cfg = SolverConfig::from_env();
    if let Some(b) = budget {
        cfg.budget = b;
    }
    cfg
}

/// Exit status: 0 success or verdict true, 1 verdict false or nothing found.
fn run(cli: Cli, buf: &mut String) -> Result<u8> {
    match cli.command {
        Command::Gen(Gen::Matrix {
            terms,
            injections,
            format,
        }) => {
            let blocks = terms
                .iter()
                .map(|t| parse_term(t))
                .collect::<Result<Vec<_>>>()?;
            let orders: Vec<usize> = blocks.iter().map(WeightedAdjacencyMatrix::order).collect();
            let specs = injections
                .iter()
                .map(|s| parse_injection(s))
                .collect::<Result<Vec<_>>>()?;
            let m = apply_injections(&direct_sum(&blocks)?, &orders, &specs)?;
            match format {
                MatrixFormat::Matrix => put!(buf, "{m}"),
                MatrixFormat::Document => {
                    put!(buf, "{}", emit_labeling(&matrix_to_labeled_graph(&m)?))
                }
            }
            Ok(0)
        }
        Command::Gen(Gen::Graph { sizes, edges }) => {
            let mut g: Option<Graph> = None;
            for &n in &sizes {
                let k = complete_graph(n)?;
                g = Some(match g {
                    None => k,
                    Some(g) => disjoint_union(&g, &k),
                });
            }
            let mut g = g.expect("clap requires one size");
            for e in &edges {
                let (u, v) = parse_pair(e)?;
                g = add_cross_edge(&g, u, v)?;
            }
            put!(buf, "{}", emit_graph(&g));
            Ok(0)
        }
        Command::Verify { file, json } => {
            let doc = load(&file)?;
            let labeling = doc.labeling().ok_or_else(|| Error::Parse {
                line: 1,
                msg: "verify needs a labeled document".into(),
            })?;
            let r = is_product_irregular(labeling)?;
            if json {
                print_json(buf, &VerifyReport::new(labeling, &r));
            } else {
                putln!(
                    buf,
                    "product-irregular: {}",
                    if r.ok { "yes" } else { "no" }
                );
                putln!(buf, "strength: {}", labeling.strength());
                if let Some((u, v)) = r.witness {
                    putln!(
                        buf,
                        "witness: {} {} share degree {}",
                        u + 1,
                        v + 1,
                        r.degrees[u]
                    );
                }
            }
            Ok(if r.ok { 0 } else { 1 })
        }
        Command::Ps {
            file,
            s_max,
            budget,
            disconnected,
            json,
        } => {
            let doc = load(&file)?;
            let cfg = solver_config(budget);
            let (method, r) = if disconnected {
                (
                    "signatures",
                    ps_exact_disconnected(doc.graph(), s_max, cfg)?,
                )
            } else {
                ("search", ps_exact(doc.graph(), s_max, cfg)?)
            };
            if json {
                print_json(buf, &PsReport::new(method, &r));
            } else {
                match r.value {
                    PsValue::Exact(s) => putln!(buf, "ps = {s}"),
                    PsValue::GreaterThan(s) => putln!(buf, "ps > {s}"),
                }
                putln!(buf, "nodes: {}", r.nodes_explored);
                if let Some(c) = &r.certificate {
                    put!(buf, "{}", emit_labeling(c));
                }
            }
            Ok(if r.exact().is_some() { 0 } else { 1 })
        }
        Command::Cover { file, k_max, json } => {
            let doc = load(&file)?;
            let cover = clique_cover(doc.graph(), k_max);
            if json {
                print_json(buf, &CoverReport::new(k_max, cover.as_ref()));
            } else {
                match &cover {
                    Some(c) => {
                        putln!(buf, "clique cover number: {}", c.len());
                        for p in c.parts() {
                            let ids: Vec<String> = p.iter().map(|v| (v + 1).to_string()).collect();
                            putln!(buf, "part: {}", ids.join(" "));
                        }
                    }
                    None => putln!(buf, "clique cover number > {k_max}"),
                }
            }
            Ok(if cover.is_some() { 0 } else { 1 })
        }
        Command::Construct {
            file,
            seed,
            budget,
            json,
        } => {
            let doc = load(&file)?;
            let config = EngineConfig {
                budget: solver_config(budget).budget,
                seed,
            };
            let out = construct_labeling_with(doc.graph(), config)?;
            if json {
                let degrees = product_degrees(&out.labeling)?;
                print_json(buf, &ConstructReport::new(&out, &degrees));
            } else {
                let t = &out.case_trace;
                putln!(buf, "c source {}", out.source);
                putln!(buf, "c strength {}", out.strength);
                putln!(buf, "c construction {}", t.construction_id);
                putln!(buf, "c cover {:?} pattern {:?}", t.cover_sizes, t.pattern);
                for note in &t.notes {
                    putln!(buf, "c {note}");
                }
                put!(buf, "{}", emit_labeling(&out.labeling));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut buf = String::new();
    let result = run(cli, &mut buf);
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = io::stdout().lock().write_all(buf.as_bytes());
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e @ (Error::Unsupported | Error::FallbackFailed(_))) => {
            eprintln!("pistr: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("pistr: {e}");
            ExitCode::from(2)
        }
    }
}
