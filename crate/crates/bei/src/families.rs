//! Constructors for the small named graph families the test suites and
//! examples lean on.

use crate::graph::{Graph, Vertex};

/// Complete graph on `m >= 1` vertices.
pub fn complete(m: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=m as Vertex {
        for v in (u + 1)..=m as Vertex {
            edges.push((u, v));
        }
    }
    Graph::from_sorted_edges(m, edges)
}

/// Path on `p >= 1` vertices, `1 - 2 - ... - p`.
pub fn path(p: usize) -> Graph {
    let edges = (1..p as Vertex).map(|v| (v, v + 1)).collect();
    Graph::from_sorted_edges(p, edges)
}

/// Cycle on `p >= 3` vertices.
pub fn cycle(p: usize) -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = (1..p as Vertex).map(|v| (v, v + 1)).collect();
    edges.push((1, p as Vertex));
    edges.sort_unstable();
    Graph::from_sorted_edges(p, edges)
}

/// Star `K_{1,m}` with center 1 and leaves `2..=m+1`.
pub fn star(m: usize) -> Graph {
    let edges = (2..=(m + 1) as Vertex).map(|v| (1, v)).collect();
    Graph::from_sorted_edges(m + 1, edges)
}

/// Spider with center 1 and `legs` legs of two edges each:
/// `1 - (1+i) - (1+legs+i)`.
pub fn spider(legs: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=legs as Vertex {
        edges.push((1, 1 + i));
        edges.push((1 + i, 1 + legs as Vertex + i));
    }
    edges.sort_unstable();
    Graph::from_sorted_edges(1 + 2 * legs, edges)
}

/// Flower with `h` triangle petals and `k` claw petals glued at the center,
/// which is vertex 1 and is free in every petal. Returns the graph and the
/// center. A proper flower needs `h + k >= 3`; smaller values still build the
/// graph (useful as degenerate fixtures).
///
/// The graph has `2h + 3k + 1` vertices and `3(h + k)` edges.
pub fn flower(h: usize, k: usize) -> (Graph, Vertex) {
    let center: Vertex = 1;
    let mut next: Vertex = 2;
    let mut edges = Vec::new();
    for _ in 0..h {
        let (a, b) = (next, next + 1);
        next += 2;
        edges.push((center, a));
        edges.push((center, b));
        edges.push((a, b));
    }
    for _ in 0..k {
        let (w, x, y) = (next, next + 1, next + 2);
        next += 3;
        edges.push((center, w));
        edges.push((w, x));
        edges.push((w, y));
    }
    edges.sort_unstable();
    (Graph::from_sorted_edges((next - 1) as usize, edges), center)
}

/// Two flower centers joined by a bridge: vertex 1 carries `h1` triangles,
/// vertex 2 carries `h2` triangles, and the edge `1-2` connects them. Each
/// center sees the bridge as one more clique, so for `h1, h2 >= 2` both ends
/// host flowers.
pub fn bridged_flowers(h1: usize, h2: usize) -> Graph {
    let mut edges = vec![(1 as Vertex, 2 as Vertex)];
    let mut next: Vertex = 3;
    for (center, count) in [(1 as Vertex, h1), (2 as Vertex, h2)] {
        for _ in 0..count {
            let (a, b) = (next, next + 1);
            next += 2;
            edges.push((center, a));
            edges.push((center, b));
            edges.push((a, b));
        }
    }
    edges.sort_unstable();
    Graph::from_sorted_edges((next - 1) as usize, edges)
}

/// Glues `g2` onto `g1` by identifying `v2` (in `g2`) with `v1` (in `g1`).
/// The result keeps `g1`'s labels; the remaining vertices of `g2` are
/// relabeled to follow them. For the invariant sum rules to apply, both glue
/// points should be free vertices of their graphs.
pub fn glue_at(g1: &Graph, v1: Vertex, g2: &Graph, v2: Vertex) -> Graph {
    assert!(g1.contains(v1) && g2.contains(v2));
    let n1 = g1.vertex_count();
    let mut map2 = vec![0 as Vertex; g2.vertex_count()];
    let mut next = n1 as Vertex;
    for v in g2.vertices() {
        if v == v2 {
            map2[(v - 1) as usize] = v1;
        } else {
            next += 1;
            map2[(v - 1) as usize] = next;
        }
    }
    let mut edges: Vec<(Vertex, Vertex)> = g1.edges().to_vec();
    for &(u, v) in g2.edges() {
        let (a, b) = (map2[(u - 1) as usize], map2[(v - 1) as usize]);
        edges.push((a.min(b), a.max(b)));
    }
    edges.sort_unstable();
    Graph::from_sorted_edges(next as usize, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::validate_block_graph;

    #[test]
    fn flower_counts() {
        for h in 0..=4 {
            for k in 0..=4 {
                if h + k == 0 {
                    continue;
                }
                let (g, center) = flower(h, k);
                assert_eq!(g.vertex_count(), 2 * h + 3 * k + 1);
                assert_eq!(g.edge_count(), 3 * (h + k));
                let bd = validate_block_graph(&g).unwrap();
                assert_eq!(bd.clique_degree(center), h + k);
                let center_inner = if h + k >= 2 { 1 } else { 0 };
                assert_eq!(bd.inner_count(), k + center_inner);
            }
        }
    }

    #[test]
    fn flower_inner_vertices() {
        // the center plus the k claw centers are the inner vertices
        let (g, _) = flower(2, 1);
        let bd = validate_block_graph(&g).unwrap();
        assert_eq!(bd.inner_count(), 2);
        assert_eq!(bd.free_count(), 6);
    }

    #[test]
    fn bridged_flower_fixture_shape() {
        let g = bridged_flowers(2, 3);
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 16);
        let bd = validate_block_graph(&g).unwrap();
        assert_eq!(bd.clique_degree(1), 3);
        assert_eq!(bd.clique_degree(2), 4);
        assert_eq!(bd.blocks().len(), 6);
        assert_eq!(bd.inner_count(), 2);
    }

    #[test]
    fn glue_preserves_structure() {
        // glue a path of 3 at a leaf of a star: still a block graph
        let g = glue_at(&star(3), 2, &path(3), 1);
        assert_eq!(g.vertex_count(), 4 + 3 - 1);
        let bd = validate_block_graph(&g).unwrap();
        assert_eq!(bd.component_count(), 1);
    }
}
