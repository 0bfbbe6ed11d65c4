//! Block decomposition of a graph: biconnected components, cutpoints, clique
//! degrees, and the split into indecomposable pieces.
//!
//! A graph is a block graph when every biconnected component is a complete
//! graph. Those components (the blocks) are then exactly the maximal cliques,
//! and together with the cutpoints they form a forest.

use crate::graph::{Graph, Vertex};
use std::fmt;

/// A graph together with its blocks (maximal cliques), cutpoints and
/// connected components. Only constructed for verified block graphs.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    graph: Graph,
    /// Each block as a sorted vertex set; blocks sorted lexicographically.
    blocks: Vec<Vec<Vertex>>,
    /// For each vertex (index `v - 1`), the indices of the blocks containing it.
    blocks_at: Vec<Vec<usize>>,
    cutpoints: Vec<Vertex>,
    components: Vec<Vec<Vertex>>,
}

/// Rejection witness: a biconnected component that is not a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotBlockGraph {
    /// Vertex set of the offending biconnected component.
    pub block: Vec<Vertex>,
    /// Edges found in it (a clique on `block.len()` vertices would need
    /// `block.len() * (block.len() - 1) / 2`).
    pub edge_count: usize,
}

impl fmt::Display for NotBlockGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.block.len();
        write!(
            f,
            "not a block graph: biconnected component {:?} has {} edges, a clique needs {}",
            self.block,
            self.edge_count,
            s * (s - 1) / 2
        )
    }
}

impl std::error::Error for NotBlockGraph {}

/// Raw biconnected components of any graph, as (vertex set, edge count)
/// pairs. Single-pass lowpoint DFS, iterative so deep paths cannot overflow
/// the call stack. Isolated vertices produce no component.
fn biconnected_components(g: &Graph) -> Vec<(Vec<Vertex>, usize)> {
    let n = g.vertex_count();
    let mut disc = vec![0usize; n]; // 0 = unvisited
    let mut low = vec![0usize; n];
    let mut timer = 1usize;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut out = Vec::new();

    struct Frame {
        v: Vertex,
        parent: Vertex, // 0 = none
        next: usize,
    }

    let mut stack: Vec<Frame> = Vec::new();
    for root in 1..=n as Vertex {
        if disc[(root - 1) as usize] != 0 {
            continue;
        }
        disc[(root - 1) as usize] = timer;
        low[(root - 1) as usize] = timer;
        timer += 1;
        stack.push(Frame { v: root, parent: 0, next: 0 });

        while let Some(top) = stack.last_mut() {
            let v = top.v;
            let vi = (v - 1) as usize;
            if top.next < g.neighbors(v).len() {
                let w = g.neighbors(v)[top.next];
                top.next += 1;
                let wi = (w - 1) as usize;
                if w == top.parent {
                    continue;
                }
                if disc[wi] == 0 {
                    disc[wi] = timer;
                    low[wi] = timer;
                    timer += 1;
                    edge_stack.push((v, w));
                    stack.push(Frame { v: w, parent: v, next: 0 });
                } else if disc[wi] < disc[vi] {
                    // back edge to an ancestor
                    edge_stack.push((v, w));
                    low[vi] = low[vi].min(disc[wi]);
                }
            } else {
                stack.pop();
                if let Some(parent_frame) = stack.last() {
                    let p = parent_frame.v;
                    let pi = (p - 1) as usize;
                    low[pi] = low[pi].min(low[vi]);
                    if low[vi] >= disc[pi] {
                        // pop one biconnected component, delimited by (p, v)
                        let mut verts: Vec<Vertex> = Vec::new();
                        let mut edge_count = 0;
                        loop {
                            let (a, b) = edge_stack.pop().expect("edge stack underflow");
                            edge_count += 1;
                            verts.push(a);
                            verts.push(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        verts.sort_unstable();
                        verts.dedup();
                        out.push((verts, edge_count));
                    }
                }
            }
        }
    }
    out
}

/// Checks that every biconnected component of `g` is a clique and packages
/// the decomposition. Rejects with the first offending component otherwise.
pub fn validate_block_graph(g: &Graph) -> Result<BlockDecomposition, NotBlockGraph> {
    let mut blocks = Vec::new();
    for (verts, edge_count) in biconnected_components(g) {
        let s = verts.len();
        if edge_count != s * (s - 1) / 2 {
            return Err(NotBlockGraph { block: verts, edge_count });
        }
        blocks.push(verts);
    }
    blocks.sort();
    let mut blocks_at = vec![Vec::new(); g.vertex_count()];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            blocks_at[(v - 1) as usize].push(i);
        }
    }
    let cutpoints = (1..=g.vertex_count() as Vertex)
        .filter(|&v| blocks_at[(v - 1) as usize].len() >= 2)
        .collect();
    let components = g.connected_components();
    Ok(BlockDecomposition { graph: g.clone(), blocks, blocks_at, cutpoints, components })
}

impl BlockDecomposition {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Blocks as sorted vertex sets, in lexicographic order.
    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[Vertex] {
        &self.blocks[i]
    }

    /// Indices of the blocks containing `v`, ascending.
    pub fn blocks_at(&self, v: Vertex) -> &[usize] {
        &self.blocks_at[(v - 1) as usize]
    }

    /// Number of maximal cliques containing `v`. Isolated vertices have
    /// clique degree 0.
    ///
    /// Panics if `v` is out of range.
    pub fn clique_degree(&self, v: Vertex) -> usize {
        assert!(self.graph.contains(v), "vertex {v} out of range");
        self.blocks_at[(v - 1) as usize].len()
    }

    pub fn is_cutpoint(&self, v: Vertex) -> bool {
        self.clique_degree(v) >= 2
    }

    pub fn cutpoints(&self) -> &[Vertex] {
        &self.cutpoints
    }

    pub fn components(&self) -> &[Vec<Vertex>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Number of inner vertices (clique degree >= 2).
    pub fn inner_count(&self) -> usize {
        self.cutpoints.len()
    }

    /// Number of free vertices. Vertices in at most one clique count as free,
    /// so `inner_count + free_count` covers every vertex, isolated ones
    /// included.
    pub fn free_count(&self) -> usize {
        self.vertex_count() - self.inner_count()
    }

    /// Number of cutpoints lying in block `i`.
    pub fn cutpoints_in_block(&self, i: usize) -> usize {
        self.blocks[i].iter().filter(|&&v| self.is_cutpoint(v)).count()
    }

    /// A block is an endblock when it contains exactly one cutpoint.
    pub fn is_endblock(&self, i: usize) -> bool {
        self.cutpoints_in_block(i) == 1
    }

    /// How many endblocks contain `v`.
    pub fn endblocks_at(&self, v: Vertex) -> usize {
        self.blocks_at(v).iter().filter(|&&i| self.is_endblock(i)).count()
    }

    /// True when every indecomposable piece is a single block, i.e. no vertex
    /// lies in three or more cliques. The empty graph qualifies.
    pub fn is_block_decomposable(&self) -> bool {
        (1..=self.vertex_count() as Vertex).all(|v| self.clique_degree(v) <= 2)
    }

    /// Splits the graph at every vertex of clique degree exactly 2, the only
    /// place a block graph can be separated into pieces sharing one free
    /// vertex. Blocks glued at a vertex of clique degree >= 3 stay together.
    pub fn split_indecomposable(&self) -> IndecomposableSplit {
        let nb = self.blocks.len();
        let mut uf = UnionFind::new(nb);
        for v in 1..=self.vertex_count() as Vertex {
            let at = self.blocks_at(v);
            if at.len() >= 3 {
                for w in at.windows(2) {
                    uf.union(w[0], w[1]);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); nb];
        for i in 0..nb {
            groups[uf.find(i)].push(i);
        }
        let mut parts: Vec<Vec<Vertex>> = Vec::new();
        for g in groups.into_iter().filter(|g| !g.is_empty()) {
            let mut verts: Vec<Vertex> = g.iter().flat_map(|&i| self.blocks[i].iter().copied()).collect();
            verts.sort_unstable();
            verts.dedup();
            parts.push(verts);
        }
        // isolated vertices become singleton parts
        for v in 1..=self.vertex_count() as Vertex {
            if self.clique_degree(v) == 0 {
                parts.push(vec![v]);
            }
        }
        parts.sort();
        let glue_vertices = (1..=self.vertex_count() as Vertex)
            .filter(|&v| self.clique_degree(v) == 2)
            .collect();
        IndecomposableSplit { parts, glue_vertices }
    }
}

/// One node of the block-cut forest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcNode {
    Block(usize),
    Cut(Vertex),
}

/// Preorder view of the block-cut forest. Each tree is rooted at the
/// lexicographically first block of its component; iterating `order` in
/// reverse therefore visits every node after all of its descendants.
#[derive(Clone, Debug)]
pub struct BlockCutForest {
    pub order: Vec<BcNode>,
    /// Depth of each cutpoint in its tree, indexed `v - 1`; zero for
    /// vertices that are not cutpoints. Root blocks have depth 0, so
    /// cutpoint depths are odd.
    pub cut_depth: Vec<usize>,
}

impl BlockDecomposition {
    /// Builds the preorder traversal of the block-cut forest.
    pub fn block_cut_forest(&self) -> BlockCutForest {
        let n = self.vertex_count();
        let nb = self.blocks.len();
        let mut block_seen = vec![false; nb];
        let mut cut_seen = vec![false; n];
        let mut order = Vec::with_capacity(nb + self.cutpoints.len());
        let mut cut_depth = vec![0usize; n];

        for root in 0..nb {
            if block_seen[root] {
                continue;
            }
            block_seen[root] = true;
            // (node, depth)
            let mut stack: Vec<(BcNode, usize)> = vec![(BcNode::Block(root), 0)];
            while let Some((node, depth)) = stack.pop() {
                order.push(node);
                match node {
                    BcNode::Block(b) => {
                        for &v in self.block(b) {
                            if self.is_cutpoint(v) && !cut_seen[(v - 1) as usize] {
                                cut_seen[(v - 1) as usize] = true;
                                cut_depth[(v - 1) as usize] = depth + 1;
                                stack.push((BcNode::Cut(v), depth + 1));
                            }
                        }
                    }
                    BcNode::Cut(v) => {
                        for &b in self.blocks_at(v) {
                            if !block_seen[b] {
                                block_seen[b] = true;
                                stack.push((BcNode::Block(b), depth + 1));
                            }
                        }
                    }
                }
            }
        }
        BlockCutForest { order, cut_depth }
    }
}

/// Result of splitting at all clique-degree-2 vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndecomposableSplit {
    /// Vertex sets of the indecomposable pieces, sorted.
    pub parts: Vec<Vec<Vertex>>,
    /// Vertices shared by exactly two parts (clique degree 2 in the input).
    pub glue_vertices: Vec<Vertex>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != c {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
