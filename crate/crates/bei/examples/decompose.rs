//! Splitting a block graph into its indecomposable pieces at the vertices of
//! clique degree 2.
//!
//!     cargo run --example decompose

use bei::families;

fn main() {
    for (name, g) in [
        ("path on 5 vertices", families::path(5)),
        ("spider with 3 two-edge legs", families::spider(3)),
        ("two bridged flower centers", families::bridged_flowers(2, 3)),
    ] {
        let bd = bei::validate_block_graph(&g).unwrap();
        let split = bd.split_indecomposable();
        println!("{name}:");
        println!("  blocks: {:?}", bd.blocks());
        println!("  cutpoints: {:?}", bd.cutpoints());
        for (i, part) in split.parts.iter().enumerate() {
            println!("  part {}: {:?}", i + 1, part);
        }
        println!("  glue vertices: {:?}", split.glue_vertices);
        println!();
    }
}
