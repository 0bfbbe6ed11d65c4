//! Undirected simple graphs on vertex set `1..=n`, plus the edge-list text
//! format shared by the whole crate.

use std::fmt;

/// External vertex id. Ids are 1-based everywhere in the public API; adjacency
/// arrays are indexed with `v - 1` internally.
pub type Vertex = u32;

/// Immutable undirected simple graph.
///
/// Edges are stored normalized (`u < v`) and sorted, so two graphs with the
/// same vertex count and edge set compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

/// Error building a graph from explicit parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { v: Vertex, n: usize },
    SelfLoop { v: Vertex },
    DuplicateEdge { u: Vertex, v: Vertex },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range 1..={n}")
            }
            GraphError::SelfLoop { v } => write!(f, "self-loop at vertex {v}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u},{v}}}"),
        }
    }
}

impl std::error::Error for GraphError {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph on `1..=n`, validating every edge.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Graph, GraphError> {
        let mut norm: Vec<(Vertex, Vertex)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop { v: a });
            }
            for v in [a, b] {
                if v < 1 || v as usize > n {
                    return Err(GraphError::VertexOutOfRange { v, n });
                }
            }
            let e = (a.min(b), a.max(b));
            norm.push(e);
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
            }
        }
        Ok(Graph::from_sorted_edges(n, norm))
    }

    /// No-validation constructor for edges already normalized, sorted and
    /// deduplicated. Used on internal paths (induced subgraphs, generators)
    /// where the input is valid by construction.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[(u - 1) as usize].push(v);
            adj[(v - 1) as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All vertices `1..=n` in order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        1..=self.n as Vertex
    }

    /// Normalized edge list, sorted ascending.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[(v - 1) as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[(v - 1) as usize].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if u == v {
            return false;
        }
        self.adj[(u - 1) as usize].binary_search(&v).is_ok()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v >= 1 && v as usize <= self.n
    }

    /// Partition of `1..=n` into connected components, each sorted, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 1..=self.n as Vertex {
            if seen[(start - 1) as usize] {
                continue;
            }
            let mut comp = Vec::new();
            seen[(start - 1) as usize] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in self.neighbors(v) {
                    if !seen[(w - 1) as usize] {
                        seen[(w - 1) as usize] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    /// Induced subgraph on `keep`, relabeled to `1..=keep.len()` in the order
    /// given. Returns the subgraph together with the map from new ids back to
    /// the original ones (`map[new - 1] = old`).
    ///
    /// `keep` must list distinct vertices of the graph.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut new_id = vec![0 as Vertex; self.n];
        for (i, &old) in keep.iter().enumerate() {
            assert!(self.contains(old), "vertex {old} not in graph");
            assert!(new_id[(old - 1) as usize] == 0, "vertex {old} listed twice");
            new_id[(old - 1) as usize] = (i + 1) as Vertex;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            let (nu, nv) = (new_id[(u - 1) as usize], new_id[(v - 1) as usize]);
            if nu != 0 && nv != 0 {
                edges.push((nu.min(nv), nu.max(nv)));
            }
        }
        edges.sort_unstable();
        (Graph::from_sorted_edges(keep.len(), edges), keep.to_vec())
    }

    /// Serializes in the edge-list text format, with an explicit header so
    /// isolated vertices survive a round trip.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("n {}\n", self.n));
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Error parsing the edge-list text format. Each variant carries the 1-based
/// line number where the problem was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    /// A line that is neither a comment, a header, nor `u v`.
    MalformedLine { line: usize, content: String },
    /// Vertex id `0` (ids are 1-based).
    InvalidVertexId { line: usize },
    SelfLoop { line: usize, v: Vertex },
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    /// `n <count>` header declares fewer vertices than some edge uses.
    HeaderTooSmall { declared: usize, max_seen: Vertex },
    /// No vertices at all (empty input and no header).
    Empty,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::MalformedLine { line, content } => {
                write!(f, "line {line}: malformed line {content:?}")
            }
            ParseError::InvalidVertexId { line } => {
                write!(f, "line {line}: vertex ids must be >= 1")
            }
            ParseError::SelfLoop { line, v } => write!(f, "line {line}: self-loop at vertex {v}"),
            ParseError::DuplicateEdge { line, u, v } => {
                write!(f, "line {line}: duplicate edge {{{u},{v}}}")
            }
            ParseError::HeaderTooSmall { declared, max_seen } => {
                write!(f, "header declares n={declared} but vertex {max_seen} appears in an edge")
            }
            ParseError::Empty => write!(f, "empty input: no vertices declared and no edges"),
        }
    }
}

impl std::error::Error for ParseError {}

/// Parses the edge-list text format.
///
/// Format: UTF-8 lines. An optional first meaningful line `n <count>` declares
/// the vertex count. Every other non-empty line is `u v` with `u != v`. Lines
/// starting with `#` are ignored. Without a header the vertex count is the
/// largest endpoint seen.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut seen_meaningful = false;
    let mut max_seen: Vertex = 0;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if !seen_meaningful && tokens[0] == "n" {
            seen_meaningful = true;
            if tokens.len() != 2 {
                return Err(ParseError::MalformedLine { line: line_no, content: line.to_string() });
            }
            match tokens[1].parse::<usize>() {
                Ok(c) if c >= 1 => declared = Some(c),
                _ => {
                    return Err(ParseError::MalformedLine {
                        line: line_no,
                        content: line.to_string(),
                    })
                }
            }
            continue;
        }
        seen_meaningful = true;
        if tokens.len() != 2 {
            return Err(ParseError::MalformedLine { line: line_no, content: line.to_string() });
        }
        let mut ends = [0 as Vertex; 2];
        for (k, t) in tokens.iter().enumerate() {
            match t.parse::<Vertex>() {
                Ok(v) if v >= 1 => ends[k] = v,
                Ok(_) => return Err(ParseError::InvalidVertexId { line: line_no }),
                Err(_) => {
                    return Err(ParseError::MalformedLine {
                        line: line_no,
                        content: line.to_string(),
                    })
                }
            }
        }
        let (u, v) = (ends[0], ends[1]);
        if u == v {
            return Err(ParseError::SelfLoop { line: line_no, v });
        }
        let e = (u.min(v), u.max(v));
        if edges.contains(&e) {
            return Err(ParseError::DuplicateEdge { line: line_no, u: e.0, v: e.1 });
        }
        max_seen = max_seen.max(e.1);
        edges.push(e);
    }

    let n = match declared {
        Some(c) => {
            if (max_seen as usize) > c {
                return Err(ParseError::HeaderTooSmall { declared: c, max_seen });
            }
            c
        }
        None => {
            if max_seen == 0 {
                return Err(ParseError::Empty);
            }
            max_seen as usize
        }
    };
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_triangle() {
        let g = parse_graph("1 2\n2 3\n1 3").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn parse_isolated_via_header() {
        let g = parse_graph("n 1\n").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_header_with_isolated_tail() {
        let g = parse_graph("n 4\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.connected_components(), vec![vec![1, 2], vec![3], vec![4]]);
    }

    #[test]
    fn parse_comments_and_blanks() {
        let g = parse_graph("# a comment\n\n1 2\n# another\n2 3\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn parse_self_loop_rejected() {
        assert_eq!(parse_graph("1 1"), Err(ParseError::SelfLoop { line: 1, v: 1 }));
    }

    #[test]
    fn parse_duplicate_rejected_across_orientations() {
        assert_eq!(
            parse_graph("1 2\n2 1"),
            Err(ParseError::DuplicateEdge { line: 2, u: 1, v: 2 })
        );
    }

    #[test]
    fn parse_zero_id_rejected() {
        assert_eq!(parse_graph("0 2"), Err(ParseError::InvalidVertexId { line: 1 }));
    }

    #[test]
    fn parse_small_header_rejected() {
        assert_eq!(
            parse_graph("n 2\n1 3"),
            Err(ParseError::HeaderTooSmall { declared: 2, max_seen: 3 })
        );
    }

    #[test]
    fn parse_garbage_rejected() {
        assert!(matches!(parse_graph("1 2 3"), Err(ParseError::MalformedLine { .. })));
        assert!(matches!(parse_graph("x y"), Err(ParseError::MalformedLine { .. })));
        assert!(matches!(parse_graph(""), Err(ParseError::Empty)));
    }

    #[test]
    fn components_ordered_by_smallest_member() {
        let g = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![1, 2], vec![3]]);
        let empty = Graph::new(2, []).unwrap();
        assert_eq!(empty.connected_components(), vec![vec![1], vec![2]]);
        let path = Graph::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(path.connected_components(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let tri = Graph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        let (sub, map) = tri.induced_subgraph(&[1, 2]);
        assert_eq!(sub.vertex_count(), 2);
        assert_eq!(sub.edges(), &[(1, 2)]);
        assert_eq!(map, vec![1, 2]);

        let (all, _) = tri.induced_subgraph(&[1, 2, 3]);
        assert_eq!(all, tri);

        let path = Graph::new(3, [(1, 2), (2, 3)]).unwrap();
        let (ends, _) = path.induced_subgraph(&[1, 3]);
        assert_eq!(ends.vertex_count(), 2);
        assert_eq!(ends.edge_count(), 0);
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::new(5, [(1, 2), (2, 3), (4, 5)]).unwrap();
        let text = g.to_edge_list_text();
        let back = parse_graph(&text).unwrap();
        assert_eq!(back, g);
    }
}
