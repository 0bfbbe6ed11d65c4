//! Command-line front end. The binary in `src/main.rs` is a thin shell
//! around [`run`], which takes the argument list and two sinks so the whole
//! surface stays testable in-process.
//!
//! Exit codes: 0 success, 1 unreadable or malformed input, 2 not a block
//! graph (`oracle` alone accepts general graphs), 3 oracle size cap
//! exceeded, 4 bad arguments.

use crate::blocks::{validate_block_graph, BlockDecomposition};
use crate::dim::{certify_witness, krull_dim_linear, min_cutset_witness};
use crate::gen::{generate_block_graph, GenConfig};
use crate::graph::{parse_graph, Graph};
use crate::oracle::{Oracle, OracleError, DEFAULT_ORACLE_LIMIT};
use crate::reg::{compute_regularity, reg_bounds_totals};
use crate::report::{build_report, list_field};
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NOT_BLOCK_GRAPH: i32 = 2;
pub const EXIT_ORACLE_LIMIT: i32 = 3;
pub const EXIT_BAD_ARGS: i32 = 4;

/// Environment variable overriding the default oracle cap.
pub const ORACLE_LIMIT_ENV: &str = "BEI_ORACLE_LIMIT";

const USAGE: &str = "\
bei - invariants of binomial edge ideals of block graphs

Usage:
  bei invariants <file> [--format json|text] [--check]
  bei dim <file> [--witness] [--check]
  bei reg <file> [--bounds]
  bei oracle <file> [--limit-n K]
  bei decompose <file>
  bei gen --blocks B --max-block-size S --seed X [--out <file>]

Input files use the edge-list format: one 'u v' pair per line, an optional
leading 'n <count>' header, '#' comments. All commands except 'oracle'
require the input to be a block graph.

Exit codes: 0 ok, 1 input error, 2 not a block graph, 3 oracle limit
exceeded, 4 bad arguments.
";

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::new(EXIT_ORACLE_LIMIT, e.to_string())
    }
}

/// Parses and executes one invocation. Reports go to `out`, diagnostics to
/// `err`; the return value is the process exit code.
pub fn run(args: &[String], out: &mut impl Write, err: &mut impl Write) -> i32 {
    match dispatch(args) {
        Ok(report) => {
            let _ = out.write_all(report.as_bytes());
            EXIT_OK
        }
        Err(failure) => {
            if failure.code == EXIT_BAD_ARGS {
                let _ = writeln!(err, "error: {}", failure.message);
                let _ = err.write_all(USAGE.as_bytes());
            } else if failure.code == EXIT_OK {
                // help text goes to stdout
                let _ = out.write_all(failure.message.as_bytes());
            } else {
                let _ = writeln!(err, "error: {}", failure.message);
            }
            failure.code
        }
    }
}

fn dispatch(args: &[String]) -> Result<String, Failure> {
    let Some(command) = args.first() else {
        return Err(Failure::new(EXIT_BAD_ARGS, "missing subcommand"));
    };
    if command == "--help" || command == "-h" || command == "help" {
        return Err(Failure { code: EXIT_OK, message: USAGE.to_string() });
    }
    let rest = &args[1..];
    match command.as_str() {
        "invariants" => cmd_invariants(rest),
        "dim" => cmd_dim(rest),
        "reg" => cmd_reg(rest),
        "oracle" => cmd_oracle(rest),
        "decompose" => cmd_decompose(rest),
        "gen" => cmd_gen(rest),
        other => Err(Failure::new(EXIT_BAD_ARGS, format!("unknown subcommand '{other}'"))),
    }
}

fn env_oracle_limit() -> Result<usize, Failure> {
    match std::env::var(ORACLE_LIMIT_ENV) {
        Ok(value) => value.parse::<usize>().map_err(|_| {
            Failure::new(EXIT_BAD_ARGS, format!("{ORACLE_LIMIT_ENV} must be an integer, got {value:?}"))
        }),
        Err(_) => Ok(DEFAULT_ORACLE_LIMIT),
    }
}

fn load_graph(path: &str) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("cannot read {path}: {e}")))?;
    parse_graph(&text).map_err(|e| Failure::new(EXIT_INPUT, format!("{path}: {e}")))
}

fn load_block_graph(path: &str) -> Result<(Graph, BlockDecomposition), Failure> {
    let g = load_graph(path)?;
    let bd = validate_block_graph(&g)
        .map_err(|e| Failure::new(EXIT_NOT_BLOCK_GRAPH, format!("{path}: {e}")))?;
    Ok((g, bd))
}

/// One optional positional argument plus `(name, value)` flags.
type ParsedArgs<'a> = (Option<&'a str>, Vec<(&'a str, Option<&'a str>)>);

fn split_flags<'a>(args: &'a [String], valued: &[&str]) -> Result<ParsedArgs<'a>, Failure> {
    let mut positional = None;
    let mut flags = Vec::new();
    let mut i = 0;
    while i < args.len() {
        let a = args[i].as_str();
        if let Some(name) = a.strip_prefix("--") {
            if valued.contains(&name) {
                let value = args
                    .get(i + 1)
                    .map(|s| s.as_str())
                    .ok_or_else(|| Failure::new(EXIT_BAD_ARGS, format!("--{name} needs a value")))?;
                flags.push((name, Some(value)));
                i += 2;
            } else {
                flags.push((name, None));
                i += 1;
            }
        } else {
            if positional.is_some() {
                return Err(Failure::new(EXIT_BAD_ARGS, format!("unexpected argument '{a}'")));
            }
            positional = Some(a);
            i += 1;
        }
    }
    Ok((positional, flags))
}

fn expect_file(positional: Option<&str>) -> Result<String, Failure> {
    positional
        .map(str::to_string)
        .ok_or_else(|| Failure::new(EXIT_BAD_ARGS, "missing input file"))
}

fn cmd_invariants(args: &[String]) -> Result<String, Failure> {
    let (positional, flags) = split_flags(args, &["format"])?;
    let file = expect_file(positional)?;
    let mut format = "text";
    let mut check = false;
    for (name, value) in flags {
        match (name, value) {
            ("format", Some(v)) if v == "json" || v == "text" => format = if v == "json" { "json" } else { "text" },
            ("format", Some(v)) => {
                return Err(Failure::new(EXIT_BAD_ARGS, format!("unknown format '{v}'")))
            }
            ("check", None) => check = true,
            (other, _) => {
                return Err(Failure::new(EXIT_BAD_ARGS, format!("unknown flag '--{other}'")))
            }
        }
    }
    let (_, bd) = load_block_graph(&file)?;
    let oracle = if check { Some(Oracle::with_limit(env_oracle_limit()?)) } else { None };
    let report = build_report(&bd, oracle.as_ref())?;
    if check {
        let brute = report.oracle.dim_bruteforce.expect("check ran the oracle");
        if brute != report.krull_dimension {
            return Err(Failure::new(
                EXIT_INPUT,
                format!(
                    "self-check failed: linear dimension {} but oracle found {brute}",
                    report.krull_dimension
                ),
            ));
        }
    }
    Ok(if format == "json" { report.to_json() } else { report.to_text() })
}

fn cmd_dim(args: &[String]) -> Result<String, Failure> {
    let (positional, flags) = split_flags(args, &[])?;
    let file = expect_file(positional)?;
    let mut witness = false;
    let mut check = false;
    for (name, _) in flags {
        match name {
            "witness" => witness = true,
            "check" => check = true,
            other => return Err(Failure::new(EXIT_BAD_ARGS, format!("unknown flag '--{other}'"))),
        }
    }
    let (g, bd) = load_block_graph(&file)?;
    let dim = krull_dim_linear(&bd);
    let mut out = format!("dimension: {dim}\n");
    if witness {
        let w = min_cutset_witness(&bd);
        let peel: Vec<String> =
            w.peel_sequence.iter().map(|(v, d)| format!("{v}:{d}")).collect();
        out.push_str(&format!(
            "witness_cutset:{}\nwitness_components: {}\nwitness_height: {}\npeel:{}\ncertified: {}\n",
            list_field(&w.cutset.vertices),
            w.cutset.num_components,
            w.cutset.height,
            list_field(&peel),
            certify_witness(&g, &w).is_ok(),
        ));
    }
    if check {
        let oracle = Oracle::with_limit(env_oracle_limit()?);
        let (brute, _) = oracle.krull_dim_bruteforce(&g)?;
        if brute != dim {
            return Err(Failure::new(
                EXIT_INPUT,
                format!("self-check failed: linear dimension {dim} but oracle found {brute}"),
            ));
        }
        out.push_str(&format!("oracle_dimension: {brute}\n"));
    }
    Ok(out)
}

fn cmd_reg(args: &[String]) -> Result<String, Failure> {
    let (positional, flags) = split_flags(args, &[])?;
    let file = expect_file(positional)?;
    let mut bounds = false;
    for (name, _) in flags {
        match name {
            "bounds" => bounds = true,
            other => return Err(Failure::new(EXIT_BAD_ARGS, format!("unknown flag '--{other}'"))),
        }
    }
    let (_, bd) = load_block_graph(&file)?;
    let mut out = format!("regularity: {}\n", compute_regularity(&bd));
    if bounds {
        let b = reg_bounds_totals(&bd);
        out.push_str(&format!(
            "flower_lower: {}\npath_lower: {}\nclique_upper: {}\n",
            b.flower_lower, b.path_lower, b.clique_upper
        ));
    }
    Ok(out)
}

fn cmd_oracle(args: &[String]) -> Result<String, Failure> {
    let (positional, flags) = split_flags(args, &["limit-n"])?;
    let file = expect_file(positional)?;
    let mut limit = env_oracle_limit()?;
    for (name, value) in flags {
        match (name, value) {
            ("limit-n", Some(v)) => {
                limit = v.parse::<usize>().map_err(|_| {
                    Failure::new(EXIT_BAD_ARGS, format!("--limit-n must be an integer, got '{v}'"))
                })?;
            }
            (other, _) => {
                return Err(Failure::new(EXIT_BAD_ARGS, format!("unknown flag '--{other}'")))
            }
        }
    }
    // general graphs allowed here
    let g = load_graph(&file)?;
    let oracle = Oracle::with_limit(limit);
    let summary = oracle.minh_maxh(&g)?;
    let (dim, witness) = oracle.krull_dim_bruteforce(&g)?;
    Ok(format!(
        "n: {}\nedge_count: {}\ncutset_count: {}\nminh_height: {}\nminh_count: {}\nmaxh_height: {}\nmaxh_count: {}\ndimension: {}\ndim_witness:{}\n",
        g.vertex_count(),
        g.edge_count(),
        summary.all_cutsets.len(),
        summary.minh[0].height,
        summary.minh.len(),
        summary.maxh[0].height,
        summary.maxh.len(),
        dim,
        list_field(&witness.vertices),
    ))
}

fn cmd_decompose(args: &[String]) -> Result<String, Failure> {
    let (positional, flags) = split_flags(args, &[])?;
    let file = expect_file(positional)?;
    if let Some((name, _)) = flags.first() {
        return Err(Failure::new(EXIT_BAD_ARGS, format!("unknown flag '--{name}'")));
    }
    let (_, bd) = load_block_graph(&file)?;
    let split = bd.split_indecomposable();
    let mut out = format!("part_count: {}\n", split.parts.len());
    for (i, part) in split.parts.iter().enumerate() {
        out.push_str(&format!("part {}:{}\n", i + 1, list_field(part)));
    }
    out.push_str(&format!("glue_vertices:{}\n", list_field(&split.glue_vertices)));
    Ok(out)
}

fn cmd_gen(args: &[String]) -> Result<String, Failure> {
    let (positional, flags) = split_flags(args, &["blocks", "max-block-size", "seed", "out"])?;
    if let Some(p) = positional {
        return Err(Failure::new(EXIT_BAD_ARGS, format!("unexpected argument '{p}'")));
    }
    let mut blocks = None;
    let mut max_block_size = None;
    let mut seed = None;
    let mut out_path: Option<String> = None;
    for (name, value) in flags {
        let parse_usize = |v: Option<&str>, what: &str| -> Result<usize, Failure> {
            v.ok_or_else(|| Failure::new(EXIT_BAD_ARGS, format!("--{what} needs a value")))?
                .parse::<usize>()
                .map_err(|_| Failure::new(EXIT_BAD_ARGS, format!("--{what} must be an integer")))
        };
        match name {
            "blocks" => blocks = Some(parse_usize(value, "blocks")?),
            "max-block-size" => max_block_size = Some(parse_usize(value, "max-block-size")?),
            "seed" => {
                seed = Some(
                    value
                        .ok_or_else(|| Failure::new(EXIT_BAD_ARGS, "--seed needs a value"))?
                        .parse::<u64>()
                        .map_err(|_| Failure::new(EXIT_BAD_ARGS, "--seed must be an integer"))?,
                )
            }
            "out" => {
                out_path = Some(
                    value
                        .ok_or_else(|| Failure::new(EXIT_BAD_ARGS, "--out needs a value"))?
                        .to_string(),
                )
            }
            other => return Err(Failure::new(EXIT_BAD_ARGS, format!("unknown flag '--{other}'"))),
        }
    }
    let blocks = blocks.ok_or_else(|| Failure::new(EXIT_BAD_ARGS, "--blocks is required"))?;
    let size = max_block_size
        .ok_or_else(|| Failure::new(EXIT_BAD_ARGS, "--max-block-size is required"))?;
    let seed = seed.ok_or_else(|| Failure::new(EXIT_BAD_ARGS, "--seed is required"))?;
    let g = generate_block_graph(&GenConfig::new(blocks, size), seed)
        .map_err(|e| Failure::new(EXIT_BAD_ARGS, e.to_string()))?;
    let text = g.to_edge_list_text();
    match out_path {
        Some(path) => {
            std::fs::write(&path, &text)
                .map_err(|e| Failure::new(EXIT_INPUT, format!("cannot write {path}: {e}")))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}
