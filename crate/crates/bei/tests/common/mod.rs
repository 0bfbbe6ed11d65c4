//! Shared corpus builders and independent reference checks for the
//! integration suites.

#![allow(dead_code)]

use bei::gen::{generate_block_graph, GenConfig, SplitMix64};
use bei::graph::{Graph, Vertex};

/// Connected seeded block graphs with at most `max_n` vertices. Configs are
/// drawn from the seed stream; oversized draws are skipped, so the corpus is
/// deterministic for a fixed request.
pub fn connected_corpus(max_n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let cfg = GenConfig {
            num_blocks: rng.range(1, 6),
            max_block_size: rng.range(2, 5),
            tree_shape_bias: [0.0, 0.5, 1.0][rng.range(0, 2)],
        };
        let g = generate_block_graph(&cfg, rng.next_u64()).expect("valid config");
        if g.vertex_count() <= max_n {
            out.push(g);
        }
    }
    out
}

/// Mixed corpus: mostly connected graphs, with disjoint unions and isolated
/// vertices sprinkled in.
pub fn mixed_corpus(max_n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = SplitMix64::new(seed ^ 0x5eed);
    let connected = connected_corpus(max_n, count, seed);
    connected
        .into_iter()
        .map(|g| match rng.range(0, 3) {
            0 if g.vertex_count() + 2 <= max_n => {
                let other = bei::families::path(2);
                disjoint_union(&g, &other)
            }
            1 if g.vertex_count() < max_n => with_isolated(&g),
            _ => g,
        })
        .collect()
}

/// Disjoint union, relabeling `b`'s vertices after `a`'s.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.vertex_count() as Vertex;
    let mut edges: Vec<(Vertex, Vertex)> = a.edges().to_vec();
    edges.extend(b.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    edges.sort_unstable();
    Graph::new(a.vertex_count() + b.vertex_count(), edges).expect("disjoint union is simple")
}

/// Appends one isolated vertex.
pub fn with_isolated(g: &Graph) -> Graph {
    Graph::new(g.vertex_count() + 1, g.edges().iter().copied()).expect("still simple")
}

// ---------------------------------------------------------------------------
// free trees up to isomorphism
// ---------------------------------------------------------------------------

/// All free trees with `1..=max_n` vertices, one representative per
/// isomorphism class, built by leaf extension with canonical-form dedup.
pub fn all_free_trees(max_n: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = Vec::new();
    let mut level: Vec<Graph> = vec![Graph::new(1, []).unwrap()];
    out.extend(level.iter().cloned());
    for n in 2..=max_n {
        let mut next: Vec<Graph> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for t in &level {
            for v in t.vertices() {
                let mut edges: Vec<(Vertex, Vertex)> = t.edges().to_vec();
                edges.push((v, n as Vertex));
                edges.sort_unstable();
                let ext = Graph::new(n, edges).unwrap();
                if seen.insert(tree_canonical(&ext)) {
                    next.push(ext);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// Canonical form of a free tree: the rooted shape string taken at the
/// center (or the sorted pair of halves of the central edge).
pub fn tree_canonical(g: &Graph) -> String {
    let n = g.vertex_count();
    if n == 1 {
        return "()".to_string();
    }
    // peel leaves layer by layer; the last one or two vertices are the center
    let mut deg: Vec<usize> = (1..=n as Vertex).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<Vertex> =
        g.vertices().filter(|&v| deg[(v - 1) as usize] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[(v - 1) as usize] = true;
            remaining -= 1;
            for &w in g.neighbors(v) {
                if !removed[(w - 1) as usize] {
                    deg[(w - 1) as usize] -= 1;
                    if deg[(w - 1) as usize] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let centers: Vec<Vertex> = g.vertices().filter(|&v| !removed[(v - 1) as usize]).collect();
    match centers.as_slice() {
        [c] => encode_rooted(g, *c, 0),
        [c1, c2] => {
            let a = encode_rooted(g, *c1, *c2);
            let b = encode_rooted(g, *c2, *c1);
            if a <= b {
                format!("[{a}{b}]")
            } else {
                format!("[{b}{a}]")
            }
        }
        _ => unreachable!("center of a tree has 1 or 2 vertices"),
    }
}

fn encode_rooted(g: &Graph, root: Vertex, banned: Vertex) -> String {
    fn rec(g: &Graph, v: Vertex, parent: Vertex, banned: Vertex) -> String {
        let mut kids: Vec<String> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent && w != banned)
            .map(|&w| rec(g, w, v, banned))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    rec(g, root, 0, banned)
}

// ---------------------------------------------------------------------------
// independent block-graph test: chordality + clique intersections
// ---------------------------------------------------------------------------

/// Reference predicate used to cross-check validation: a graph is a block
/// graph iff it is chordal and every two maximal cliques share at most one
/// vertex. Exponential clique enumeration, so keep `n` small.
pub fn is_block_graph_reference(g: &Graph) -> bool {
    is_chordal(g) && max_cliques_pairwise_share_at_most_one(g)
}

/// Chordality via maximum cardinality search: the reverse visit order is a
/// perfect elimination ordering iff the graph is chordal.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut order: Vec<Vertex> = Vec::with_capacity(n);
    for _ in 0..n {
        let v = g
            .vertices()
            .filter(|&v| !numbered[(v - 1) as usize])
            .max_by_key(|&v| weight[(v - 1) as usize])
            .expect("unnumbered vertex remains");
        numbered[(v - 1) as usize] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !numbered[(w - 1) as usize] {
                weight[(w - 1) as usize] += 1;
            }
        }
    }
    // order is reversed PEO; check each vertex's earlier-numbered neighbors
    // form a clique
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[(v - 1) as usize] = i;
    }
    for (i, &v) in order.iter().enumerate() {
        let earlier: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[(w - 1) as usize] < i)
            .collect();
        // the latest earlier neighbor must dominate the rest
        if let Some(&u) = earlier.iter().max_by_key(|&&w| pos[(w - 1) as usize]) {
            for &w in &earlier {
                if w != u && !g.has_edge(u, w) {
                    return false;
                }
            }
        }
    }
    true
}

fn max_cliques_pairwise_share_at_most_one(g: &Graph) -> bool {
    let cliques = maximal_cliques_bruteforce(g);
    for (i, a) in cliques.iter().enumerate() {
        for b in cliques.iter().skip(i + 1) {
            let shared = a.iter().filter(|v| b.contains(v)).count();
            if shared > 1 {
                return false;
            }
        }
    }
    true
}

/// All maximal cliques by subset enumeration; fine for `n <= 16`.
pub fn maximal_cliques_bruteforce(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    assert!(n <= 16, "subset enumeration wants a small graph");
    let mut cliques: Vec<u32> = Vec::new();
    for mask in 1u32..(1 << n) {
        let verts: Vec<Vertex> =
            (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| (i + 1) as Vertex).collect();
        let is_clique = verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts.iter().skip(i + 1).all(|&v| g.has_edge(u, v)));
        if is_clique {
            cliques.push(mask);
        }
    }
    cliques
        .iter()
        .filter(|&&m| !cliques.iter().any(|&other| other != m && other & m == m))
        .map(|&m| (0..n).filter(|&i| m >> i & 1 == 1).map(|i| (i + 1) as Vertex).collect())
        .collect()
}

/// Random general (not necessarily block) graphs for validator cross-checks.
pub fn random_general_graphs(max_n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = SplitMix64::new(seed ^ 0x6e6e);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let n = rng.range(1, max_n);
        let p = rng.f64();
        let mut edges = Vec::new();
        for u in 1..=n as Vertex {
            for v in (u + 1)..=n as Vertex {
                if rng.f64() < p {
                    edges.push((u, v));
                }
            }
        }
        out.push(Graph::new(n, edges).unwrap());
    }
    out
}

/// Smallest free vertex (clique degree exactly 1); every connected block
/// graph with an edge has one.
pub fn smallest_free_vertex(g: &Graph) -> Vertex {
    let bd = bei::validate_block_graph(g).expect("corpus graphs are block graphs");
    g.vertices()
        .find(|&v| bd.clique_degree(v) == 1)
        .expect("connected block graph with an edge has a free vertex")
}
