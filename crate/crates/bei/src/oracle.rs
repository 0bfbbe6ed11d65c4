//! Exhaustive reference computations over cutsets.
//!
//! A set `T` of vertices is a cutset when removing any single member of `T`
//! strictly lowers the number of connected components left behind; the empty
//! set always qualifies. Every invariant the fast algorithms produce can be
//! recomputed here by enumerating all `2^n` subsets, so this module acts as
//! the referee for the linear-time paths. Enumeration is capped (default
//! `n <= 22`, see [`Oracle`]).

use crate::blocks::BlockDecomposition;
use crate::graph::{Graph, Vertex};
use std::fmt;

pub const DEFAULT_ORACLE_LIMIT: usize = 22;

/// A cutset together with its derived quantities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutSet {
    /// The vertices of `T`, sorted ascending.
    pub vertices: Vec<Vertex>,
    /// Number of connected components of the graph restricted to the
    /// complement of `T`.
    pub num_components: usize,
    /// `n - num_components + |T|`.
    pub height: usize,
    /// `n + num_components - |T|`; the dimension is the maximum of this over
    /// all cutsets.
    pub dim_term: usize,
}

/// All cutsets plus the extremal-height slices.
#[derive(Clone, Debug)]
pub struct MinimalPrimeSummary {
    pub all_cutsets: Vec<CutSet>,
    /// Cutsets of minimum height, in enumeration order.
    pub minh: Vec<CutSet>,
    /// Cutsets of maximum height, in enumeration order.
    pub maxh: Vec<CutSet>,
    /// `max dim_term = 2n - min height`.
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    LimitExceeded { n: usize, limit: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::LimitExceeded { n, limit } => {
                write!(f, "graph has {n} vertices, oracle limit is {limit}")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// Witness for a failed cutset check: member `i` whose removal does not
/// lower the component count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotACutset {
    pub vertex: Vertex,
    pub components_with: usize,
    pub components_without: usize,
}

impl fmt::Display for NotACutset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not a cutset: dropping vertex {} leaves {} components, not fewer than {}",
            self.vertex, self.components_without, self.components_with
        )
    }
}

impl std::error::Error for NotACutset {}

/// Counts connected components of `g` restricted to vertices with
/// `removed[v-1] == false`. Union-find over the surviving edges.
pub(crate) fn component_count_without(g: &Graph, removed: &[bool]) -> usize {
    let n = g.vertex_count();
    let mut parent: Vec<u32> = (0..n as u32).collect();
    fn find(parent: &mut [u32], x: u32) -> u32 {
        let mut r = x;
        while parent[r as usize] != r {
            r = parent[r as usize];
        }
        let mut c = x;
        while parent[c as usize] != c {
            let next = parent[c as usize];
            parent[c as usize] = r;
            c = next;
        }
        r
    }
    let mut merges = 0usize;
    let alive = removed.iter().filter(|&&r| !r).count();
    for &(u, v) in g.edges() {
        let (ui, vi) = ((u - 1) as usize, (v - 1) as usize);
        if removed[ui] || removed[vi] {
            continue;
        }
        let (ru, rv) = (find(&mut parent, ui as u32), find(&mut parent, vi as u32));
        if ru != rv {
            parent[ru.max(rv) as usize] = ru.min(rv);
            merges += 1;
        }
    }
    alive - merges
}

/// Fills in the derived quantities for a claimed cutset `t`, verifying the
/// cutset property first.
pub fn cutset_stats(g: &Graph, t: &[Vertex]) -> Result<CutSet, NotACutset> {
    let n = g.vertex_count();
    let mut vertices: Vec<Vertex> = t.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    let mut removed = vec![false; n];
    for &v in &vertices {
        removed[(v - 1) as usize] = true;
    }
    let c = component_count_without(g, &removed);
    for &v in &vertices {
        removed[(v - 1) as usize] = false;
        let c_without = component_count_without(g, &removed);
        removed[(v - 1) as usize] = true;
        if c_without >= c {
            return Err(NotACutset { vertex: v, components_with: c, components_without: c_without });
        }
    }
    Ok(CutSet {
        num_components: c,
        height: n - c + vertices.len(),
        dim_term: n + c - vertices.len(),
        vertices,
    })
}

/// Exhaustive cutset machinery with a size cap.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { limit: DEFAULT_ORACLE_LIMIT }
    }
}

impl Oracle {
    pub fn with_limit(limit: usize) -> Self {
        Oracle { limit }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn check(&self, g: &Graph) -> Result<(), OracleError> {
        let n = g.vertex_count();
        if n > self.limit {
            Err(OracleError::LimitExceeded { n, limit: self.limit })
        } else {
            Ok(())
        }
    }

    /// Runs `f` on every cutset, in (size, lexicographic) order.
    fn for_each_cutset(
        &self,
        g: &Graph,
        mut f: impl FnMut(&[Vertex], usize),
    ) -> Result<(), OracleError> {
        self.check(g)?;
        let n = g.vertex_count();
        let mut removed = vec![false; n];

        // size 0: the empty set is always a cutset
        f(&[], component_count_without(g, &removed));

        let mut combo: Vec<Vertex> = Vec::new();
        for size in 1..=n {
            combo.clear();
            combo.extend(1..=size as Vertex);
            loop {
                self.test_and_report(g, &combo, &mut removed, &mut f);
                // advance to the next combination of this size
                let mut i = size;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    if combo[i] < (n - (size - 1 - i)) as Vertex {
                        combo[i] += 1;
                        for j in (i + 1)..size {
                            combo[j] = combo[j - 1] + 1;
                        }
                        break;
                    }
                    if i == 0 {
                        combo.clear();
                        break;
                    }
                }
                if combo.is_empty() {
                    break;
                }
            }
        }
        Ok(())
    }

    fn test_and_report(
        &self,
        g: &Graph,
        t: &[Vertex],
        removed: &mut [bool],
        f: &mut impl FnMut(&[Vertex], usize),
    ) {
        for &v in t {
            removed[(v - 1) as usize] = true;
        }
        let c = component_count_without(g, removed);
        let mut ok = true;
        for &v in t {
            removed[(v - 1) as usize] = false;
            let c_without = component_count_without(g, removed);
            removed[(v - 1) as usize] = true;
            if c_without >= c {
                ok = false;
                break;
            }
        }
        if ok {
            f(t, c);
        }
        for &v in t {
            removed[(v - 1) as usize] = false;
        }
    }

    /// Every cutset of `g`, ordered by size then lexicographically.
    pub fn enumerate_cutsets(&self, g: &Graph) -> Result<Vec<CutSet>, OracleError> {
        let n = g.vertex_count();
        let mut out = Vec::new();
        self.for_each_cutset(g, |t, c| {
            out.push(CutSet {
                vertices: t.to_vec(),
                num_components: c,
                height: n - c + t.len(),
                dim_term: n + c - t.len(),
            });
        })?;
        Ok(out)
    }

    /// Maximum of `n + c(T) - |T|` over all cutsets, with the witness that
    /// attains it first in (size, lexicographic) order.
    pub fn krull_dim_bruteforce(&self, g: &Graph) -> Result<(usize, CutSet), OracleError> {
        let n = g.vertex_count();
        let mut best: Option<CutSet> = None;
        self.for_each_cutset(g, |t, c| {
            let dim_term = n + c - t.len();
            if best.as_ref().is_none_or(|b| dim_term > b.dim_term) {
                best = Some(CutSet {
                    vertices: t.to_vec(),
                    num_components: c,
                    height: n - c + t.len(),
                    dim_term,
                });
            }
        })?;
        let best = best.expect("the empty cutset always exists");
        Ok((best.dim_term, best))
    }

    /// Full summary: all cutsets plus the minimum- and maximum-height slices.
    pub fn minh_maxh(&self, g: &Graph) -> Result<MinimalPrimeSummary, OracleError> {
        let all = self.enumerate_cutsets(g)?;
        let min_h = all.iter().map(|c| c.height).min().expect("nonempty");
        let max_h = all.iter().map(|c| c.height).max().expect("nonempty");
        let minh: Vec<CutSet> = all.iter().filter(|c| c.height == min_h).cloned().collect();
        let maxh: Vec<CutSet> = all.iter().filter(|c| c.height == max_h).cloned().collect();
        let dim = 2 * g.vertex_count() - min_h;
        Ok(MinimalPrimeSummary { all_cutsets: all, minh, maxh, dim })
    }

    /// Largest petal count of a flower induced at `v`, or 0 when no flower
    /// with at least 3 petals embeds there.
    ///
    /// Search: a petal uses one block at `v`, realized either as a triangle
    /// (two more vertices from a block of size >= 3) or as a claw (an
    /// edge-block neighbor `w` plus one vertex from each of two further
    /// blocks at `w`). Petal realizations are enumerated exhaustively and a
    /// candidate set counts only if its vertices induce exactly the flower's
    /// edges, so this stays independent of the counting rule it referees.
    pub fn flower_oracle(&self, bd: &BlockDecomposition, v: Vertex) -> Result<usize, OracleError> {
        let g = bd.graph();
        self.check(g)?;
        assert!(g.contains(v), "vertex {v} out of range");

        // realizations[b] = ways to realize block index `b` as a petal; each
        // realization is the petal's vertex set without `v`.
        let mut realizations: Vec<Vec<Vec<Vertex>>> = Vec::new();
        for &bi in bd.blocks_at(v) {
            let block = bd.block(bi);
            let mut ways = Vec::new();
            if block.len() >= 3 {
                let others: Vec<Vertex> = block.iter().copied().filter(|&u| u != v).collect();
                for i in 0..others.len() {
                    for j in (i + 1)..others.len() {
                        ways.push(vec![others[i], others[j]]);
                    }
                }
            } else {
                let w = *block.iter().find(|&&u| u != v).expect("blocks have >= 2 vertices");
                let other_blocks: Vec<usize> =
                    bd.blocks_at(w).iter().copied().filter(|&ci| ci != bi).collect();
                for a in 0..other_blocks.len() {
                    for b in (a + 1)..other_blocks.len() {
                        for &x in bd.block(other_blocks[a]).iter().filter(|&&u| u != w) {
                            for &y in bd.block(other_blocks[b]).iter().filter(|&&u| u != w) {
                                ways.push(vec![w, x, y]);
                            }
                        }
                    }
                }
            }
            realizations.push(ways);
        }

        let mut best = 0usize;
        let mut chosen: Vec<usize> = Vec::new(); // chosen realization per taken block
        let mut taken: Vec<usize> = Vec::new(); // indices into realizations
        let search = PetalSearch { g, v, realizations: &realizations };
        search.run(0, &mut taken, &mut chosen, &mut best);
        Ok(if best >= 3 { best } else { 0 })
    }
}

struct PetalSearch<'a> {
    g: &'a Graph,
    v: Vertex,
    realizations: &'a [Vec<Vec<Vertex>>],
}

impl PetalSearch<'_> {
    fn run(&self, block_pos: usize, taken: &mut Vec<usize>, chosen: &mut Vec<usize>, best: &mut usize) {
        if taken.len() + (self.realizations.len() - block_pos) <= *best {
            return; // cannot beat the current best
        }
        if block_pos == self.realizations.len() {
            if taken.len() >= 3 && self.induces_flower(taken, chosen) {
                *best = (*best).max(taken.len());
            }
            return;
        }
        for ri in 0..self.realizations[block_pos].len() {
            taken.push(block_pos);
            chosen.push(ri);
            self.run(block_pos + 1, taken, chosen, best);
            taken.pop();
            chosen.pop();
        }
        self.run(block_pos + 1, taken, chosen, best);
    }

    /// Verifies that `v` plus the chosen petal vertex sets induce exactly a
    /// flower: pairwise disjoint petals and exactly 3 induced edges per
    /// petal with the right local shape.
    fn induces_flower(&self, taken: &[usize], chosen: &[usize]) -> bool {
        let (g, v) = (self.g, self.v);
        let mut all: Vec<Vertex> = vec![v];
        for (t, &bi) in taken.iter().enumerate() {
            let petal = &self.realizations[bi][chosen[t]];
            for &u in petal {
                if all.contains(&u) {
                    return false; // petals must not share vertices
                }
                all.push(u);
            }
        }
        // count induced edges; a flower on these vertices has exactly 3 per
        // petal
        let mut induced = 0usize;
        for i in 0..all.len() {
            for j in (i + 1)..all.len() {
                if g.has_edge(all[i], all[j]) {
                    induced += 1;
                }
            }
        }
        if induced != 3 * taken.len() {
            return false;
        }
        // local shape per petal
        for (t, &bi) in taken.iter().enumerate() {
            let petal = &self.realizations[bi][chosen[t]];
            match petal.len() {
                2 => {
                    // triangle: v-a, v-b, a-b
                    if !(g.has_edge(v, petal[0])
                        && g.has_edge(v, petal[1])
                        && g.has_edge(petal[0], petal[1]))
                    {
                        return false;
                    }
                }
                3 => {
                    // claw centered at w = petal[0] with leaves v, x, y
                    let (w, x, y) = (petal[0], petal[1], petal[2]);
                    if !(g.has_edge(v, w) && g.has_edge(w, x) && g.has_edge(w, y)) {
                        return false;
                    }
                    if g.has_edge(v, x) || g.has_edge(v, y) || g.has_edge(x, y) {
                        return false;
                    }
                }
                _ => return false,
            }
        }
        true
    }
}
