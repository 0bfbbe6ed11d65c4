//! Krull dimension three ways: the one-pass linear algorithm, the peel that
//! builds a minimum-height cutset witness, and the exhaustive check.
//!
//!     cargo run --example krull_dimension

use bei::dim::{certify_witness, krull_dim_linear, min_cutset_witness};
use bei::families;
use bei::oracle::Oracle;

fn main() {
    let g = families::bridged_flowers(2, 3);
    let bd = bei::validate_block_graph(&g).unwrap();
    println!("graph: {} vertices, {} edges, {} blocks", g.vertex_count(), g.edge_count(), bd.blocks().len());

    let dim = krull_dim_linear(&bd);
    println!("linear algorithm:   dimension = {dim}");

    let w = min_cutset_witness(&bd);
    println!(
        "witness cutset:     T = {:?} (components {}, height {})",
        w.cutset.vertices, w.cutset.num_components, w.cutset.height
    );
    for (step, (v, cdeg)) in w.peel_sequence.iter().enumerate() {
        println!("  peel step {}: vertex {v} with clique degree {cdeg} contributes {}", step + 1, cdeg - 2);
    }
    println!("certification:      {:?}", certify_witness(&g, &w).is_ok());

    let (brute, brute_witness) = Oracle::default().krull_dim_bruteforce(&g).unwrap();
    println!("exhaustive search:  dimension = {brute}, first witness {:?}", brute_witness.vertices);
    assert_eq!(dim, brute);
}
