//! Regularity of a block graph: flower detection, end-flower peeling, and
//! the bounds wrapped around the exact value.
//!
//!     cargo run --example regularity

use bei::families;
use bei::graph::Vertex;
use bei::reg::{compute_regularity, eligible_block_count, find_end_flower, reg_bounds};

fn main() {
    let g = families::bridged_flowers(2, 3);
    let bd = bei::validate_block_graph(&g).unwrap();

    println!("flower vertices (petal capacity >= 3):");
    for v in g.vertices() {
        let sig = eligible_block_count(&bd, v);
        if sig.max_cdeg_f >= 3 {
            println!("  vertex {v}: {} petals from blocks {:?}", sig.max_cdeg_f, sig.eligible_blocks);
        }
    }

    // narrate the peel the recursion performs
    let mut layer = vec![g.clone()];
    let mut round = 0;
    while !layer.is_empty() {
        round += 1;
        let mut next = Vec::new();
        for piece in &layer {
            let piece_bd = bei::validate_block_graph(piece).unwrap();
            match find_end_flower(&piece_bd) {
                None => println!(
                    "  round {round}: flower-free piece with {} inner vertices -> contributes {}",
                    piece_bd.inner_count(),
                    piece_bd.inner_count() + 1
                ),
                Some(v) => {
                    println!("  round {round}: removing end-flower center {v} (piece-local id)");
                    let keep: Vec<Vertex> = piece.vertices().filter(|&u| u != v).collect();
                    let (rest, _) = piece.induced_subgraph(&keep);
                    for comp in rest.connected_components() {
                        if comp.len() >= 2 {
                            next.push(rest.induced_subgraph(&comp).0);
                        }
                    }
                }
            }
        }
        layer = next;
    }

    let reg = compute_regularity(&bd);
    let bounds = reg_bounds(&bd).unwrap();
    println!("regularity = {reg}");
    println!(
        "bounds: max(flower lower {}, path lower {}) <= {reg} <= clique upper {}",
        bounds.flower_lower, bounds.path_lower, bounds.clique_upper
    );
}
