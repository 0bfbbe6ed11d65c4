//! Exhaustive cutset enumeration on small graphs: every cutset with its
//! component count, height, and dimension term, plus the extremal slices.
//!
//!     cargo run --example cutset_census

use bei::families;
use bei::oracle::Oracle;

fn main() {
    let oracle = Oracle::default();
    for (name, g) in [
        ("path on 4 vertices", families::path(4)),
        ("star with 3 leaves", families::star(3)),
        ("flower with 2 triangles and 1 claw", families::flower(2, 1).0),
        ("4-cycle (not a block graph)", families::cycle(4)),
    ] {
        println!("{name}: n = {}", g.vertex_count());
        let summary = oracle.minh_maxh(&g).unwrap();
        for c in &summary.all_cutsets {
            println!(
                "  T = {:?}  components = {}  height = {}  dim term = {}",
                c.vertices, c.num_components, c.height, c.dim_term
            );
        }
        println!(
            "  min height {} ({} cutsets), max height {} ({} cutsets), dimension {}",
            summary.minh[0].height,
            summary.minh.len(),
            summary.maxh[0].height,
            summary.maxh.len(),
            summary.dim
        );
        println!();
    }
}
