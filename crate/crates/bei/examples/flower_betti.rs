//! Closed-form Betti entries of flowers across a grid of petal mixes, with
//! the regularity each one implies.
//!
//!     cargo run --example flower_betti

use bei::families;
use bei::reg::{compute_regularity, flower_betti};

fn main() {
    println!("h k |  n  edges | first entry (row,col)=value | second entry | regularity");
    println!("----+----------+-----------------------------+--------------+-----------");
    for h in 0..=4usize {
        for k in 0..=4usize {
            let Ok(pair) = flower_betti(h, k) else { continue };
            let (g, _) = families::flower(h, k);
            let bd = bei::validate_block_graph(&g).unwrap();
            let reg = compute_regularity(&bd);
            println!(
                "{h} {k} | {:>3} {:>6} | ({:>2},{:>2}) = {:<15} | ({:>2},{:>2}) = {} | {reg}",
                g.vertex_count(),
                g.edge_count(),
                pair.first.row,
                pair.first.col,
                pair.first.value,
                pair.second.row,
                pair.second.col,
                pair.second.value,
            );
            // the shared column sits at n + inner count, and the regularity
            // is inner count + petal count - 1
            let inner = bd.inner_count();
            assert_eq!(pair.first.col, g.vertex_count() + inner);
            assert_eq!(reg, inner + bd.clique_degree(1) - 1);
        }
    }
}
