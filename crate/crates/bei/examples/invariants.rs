//! Full invariant report for a graph: parse, validate, compute, print.
//!
//!     cargo run --example invariants [path/to/graph.txt]
//!
//! Without an argument a built-in 12-vertex fixture is used.

use bei::families;
use bei::oracle::Oracle;
use bei::report::build_report;

fn main() {
    let g = match std::env::args().nth(1) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).expect("readable input file");
            bei::parse_graph(&text).expect("valid edge-list file")
        }
        None => families::bridged_flowers(2, 3),
    };
    let bd = bei::validate_block_graph(&g).expect("input must be a block graph");

    // run the exhaustive cross-check when the graph is small enough
    let oracle = Oracle::default();
    let use_oracle = g.vertex_count() <= oracle.limit();
    let report = build_report(&bd, use_oracle.then_some(&oracle)).unwrap();

    print!("{}", report.to_text());
    println!();
    println!("json:");
    print!("{}", report.to_json());
}
