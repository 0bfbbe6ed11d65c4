//! Seeded random block graphs, self-checked: the linear dimension against
//! the exhaustive oracle and the petal rule against the flower search.
//!
//!     cargo run --example generate_and_check [count]

use bei::dim::krull_dim_linear;
use bei::gen::{generate_block_graph, GenConfig};
use bei::oracle::Oracle;
use bei::reg::eligible_block_count;

fn main() {
    let count: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(25);
    let oracle = Oracle::default();
    let cfg = GenConfig { num_blocks: 5, max_block_size: 4, tree_shape_bias: 0.4 };

    for seed in 0..count {
        let g = generate_block_graph(&cfg, seed).unwrap();
        let bd = bei::validate_block_graph(&g).unwrap();
        let linear = krull_dim_linear(&bd);
        let (brute, _) = oracle.krull_dim_bruteforce(&g).unwrap();
        assert_eq!(linear, brute, "dimension mismatch on seed {seed}");

        let mut flowers = 0;
        for v in g.vertices() {
            let rule = eligible_block_count(&bd, v).max_cdeg_f;
            let search = oracle.flower_oracle(&bd, v).unwrap();
            assert_eq!(rule >= 3, search >= 3, "flower threshold mismatch on seed {seed}");
            if rule >= 3 {
                assert_eq!(rule, search);
                flowers += 1;
            }
        }
        println!(
            "seed {seed:>3}: n = {:>2}, dimension = {linear:>2} (oracle agrees), flower vertices = {flowers}",
            g.vertex_count()
        );
    }
    println!("all {count} seeds check out");
}
