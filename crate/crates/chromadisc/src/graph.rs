//! Immutable small-graph representation on at most 64 labeled vertices.
//!
//! Adjacency is a `u64` neighbor mask per vertex, so set operations on
//! vertex subsets are single word ops. Everything downstream (invariants,
//! solvers, recognizers) consumes this type only.

use std::fmt;

use thiserror::Error;

/// Hard cap baked into the representation: one machine word of vertices.
pub const MAX_VERTICES: usize = 64;

#[inline(always)]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, the representation caps at {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("combined graph would have {0} vertices, exceeding {MAX_VERTICES}")]
    SizeOverflow(usize),
    #[error("vertex set {bits:#x} is not a subset of the {n} graph vertices")]
    SetOutOfRange { bits: u64, n: usize },
    #[error("graph6 parse: {0}")]
    Graph6(String),
    #[error("edge list parse: {0}")]
    EdgeList(String),
}

// ============================================================================
// VertexSet
// ============================================================================

/// A subset of the vertices of some host graph, stored as a bit mask.
///
/// The set itself does not remember its host; operations that need the
/// host's vertex count take the graph as an argument and validate there.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    /// All vertices of a graph on `n` vertices.
    #[inline]
    pub fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest vertex in the set, if any.
    #[inline]
    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates vertices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

// ============================================================================
// Graph
// ============================================================================

/// Simple undirected graph on `n <= 64` labeled vertices.
///
/// Invariants enforced by every constructor: symmetric adjacency, no
/// self-loops, neighbor masks confined to `0..n`. Instances are immutable
/// after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds from raw neighbor masks; used internally by constructors that
    /// already guarantee the invariants.
    pub(crate) fn from_adj(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        debug_assert!(adj.iter().all(|&m| m & !low_bits(n) == 0));
        debug_assert!((0..n).all(|v| adj[v] & bit(v) == 0));
        debug_assert!((0..n).all(|u| (0..n).all(|v| (adj[u] >> v) & 1 == (adj[v] >> u) & 1)));
        Graph { n, adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbor mask of `v`.
    #[inline]
    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !low_bits(u + 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_subset(&self, s: VertexSet) -> Result<(), GraphError> {
        if s.0 & !low_bits(self.n) != 0 {
            Err(GraphError::SetOutOfRange {
                bits: s.0,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Subgraph induced by `s`, relabeled to `0..s.len()` preserving vertex
    /// order. The returned map sends each new label to its original vertex.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_subset(s)?;
        let verts = s.to_vec();
        let mut adj = vec![0u64; verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
            }
        }
        Ok((Graph::from_adj(adj), verts))
    }

    pub fn complement(&self) -> Graph {
        let mask = low_bits(self.n);
        let adj = (0..self.n).map(|v| !self.adj[v] & mask & !bit(v)).collect();
        Graph::from_adj(adj)
    }

    /// Disjoint union; vertices of `other` are shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::SizeOverflow(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&m| m << self.n));
        Ok(Graph::from_adj(adj))
    }

    /// Disjoint union plus all edges between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let left = low_bits(self.n);
        let right = low_bits(g.n) & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Connected components as vertex sets, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut seen = 0u64;
        let all = low_bits(self.n);
        while seen != all {
            let start = (!seen & all).trailing_zeros() as usize;
            let mut comp = bit(start);
            loop {
                let mut grown = comp;
                let mut rest = comp;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    grown |= self.adj[v];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Max over vertex pairs of the shortest-path length; `None` when
    /// disconnected.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let all = low_bits(self.n);
        let mut diam = 0;
        for v in 0..self.n {
            let mut visited = bit(v);
            let mut frontier = bit(v);
            let mut dist = 0;
            while visited != all {
                let mut next = 0u64;
                let mut rest = frontier;
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    next |= self.adj[u];
                }
                next &= !visited;
                if next == 0 {
                    return None;
                }
                visited |= next;
                frontier = next;
                dist += 1;
            }
            diam = diam.max(dist);
        }
        Some(diam)
    }

    /// Whether `s` induces a connected subgraph. The empty set counts as
    /// connected (it never arises as a discrepancy witness).
    pub fn is_connected_subset(&self, s: VertexSet) -> bool {
        if s.0 == 0 {
            return true;
        }
        let start = s.0.trailing_zeros() as usize;
        let mut comp = bit(start);
        loop {
            let mut grown = comp;
            let mut rest = comp;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grown |= self.adj[v] & s.0;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        comp == s.0
    }

    /// Streams every nonempty vertex set that induces a connected subgraph,
    /// each exactly once.
    pub fn connected_induced_subsets(&self) -> ConnectedSubsets<'_> {
        ConnectedSubsets {
            g: self,
            root: 0,
            stack: Vec::new(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

// ============================================================================
// Connected induced subset enumeration
// ============================================================================

#[derive(Clone)]
struct Frame {
    set: u64,
    // Extension candidates not yet branched on at this node.
    ext: u64,
    // Closed neighborhood of `set`; new candidates must avoid it.
    nbhd: u64,
}

/// Enumerates connected induced subsets by rooted extension: each set is
/// generated exactly once, from its minimum vertex, growing only along the
/// boundary. Candidates ever considered under root `r` are `> r`, and a
/// candidate entering the extension is outside the closed neighborhood of
/// the current set, which is what makes generation unique.
pub struct ConnectedSubsets<'g> {
    g: &'g Graph,
    root: usize,
    stack: Vec<Frame>,
}

impl Iterator for ConnectedSubsets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            if let Some(top) = self.stack.last_mut() {
                if top.ext == 0 {
                    self.stack.pop();
                    continue;
                }
                let w = top.ext.trailing_zeros() as usize;
                top.ext &= top.ext - 1;
                let above_root = !low_bits(self.root + 1);
                let child = Frame {
                    set: top.set | bit(w),
                    ext: top.ext | (self.g.adj[w] & above_root & !top.nbhd),
                    nbhd: top.nbhd | self.g.adj[w] | bit(w),
                };
                let out = child.set;
                self.stack.push(child);
                return Some(VertexSet(out));
            }
            if self.root >= self.g.n {
                return None;
            }
            let r = self.root;
            self.root += 1;
            let above_root = !low_bits(r + 1);
            self.stack.push(Frame {
                set: bit(r),
                ext: self.g.adj[r] & above_root,
                nbhd: self.g.adj[r] | bit(r),
            });
            return Some(VertexSet(bit(r)));
        }
    }
}

// ============================================================================
// graph6
// ============================================================================

const GRAPH6_HEADER: &str = ">>graph6<<";

impl Graph {
    /// Parses the graph6 format (bit-exact per the published spec), for
    /// graphs on at most 64 vertices. A `>>graph6<<` header and trailing
    /// whitespace are tolerated.
    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        let text = text.trim();
        let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
        let bytes = text.as_bytes();
        if bytes.is_empty() {
            return Err(GraphError::Graph6("empty input".into()));
        }
        let (n, body) = if bytes[0] == 126 {
            // 126 introduces the 3-sextet size form (n >= 63).
            if bytes.len() < 4 {
                return Err(GraphError::Graph6("truncated size field".into()));
            }
            if bytes[1] == 126 {
                return Err(GraphError::Graph6(
                    "8-byte size form exceeds 64 vertices".into(),
                ));
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                if !(63..=126).contains(&b) {
                    return Err(GraphError::Graph6(format!("invalid size byte {b}")));
                }
                n = (n << 6) | (b - 63) as usize;
            }
            if n < 63 {
                return Err(GraphError::Graph6(
                    "non-canonical long size for n < 63".into(),
                ));
            }
            (n, &bytes[4..])
        } else {
            if !(63..=125).contains(&bytes[0]) {
                return Err(GraphError::Graph6(format!(
                    "invalid size byte {}",
                    bytes[0]
                )));
            }
            ((bytes[0] - 63) as usize, &bytes[1..])
        };
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let nbits = n * (n.saturating_sub(1)) / 2;
        let expect = nbits.div_ceil(6);
        if body.len() != expect {
            return Err(GraphError::Graph6(format!(
                "expected {expect} data bytes for n={n}, found {}",
                body.len()
            )));
        }
        let mut adj = vec![0u64; n];
        let mut idx = 0usize;
        for &b in body {
            if !(63..=126).contains(&b) {
                return Err(GraphError::Graph6(format!("invalid data byte {b}")));
            }
            let sextet = b - 63;
            for k in 0..6 {
                let bit_set = (sextet >> (5 - k)) & 1 == 1;
                if idx < nbits {
                    if bit_set {
                        // Bit order: column j = 1..n, rows i < j.
                        let (i, j) = triangle_coords(idx);
                        adj[i] |= bit(j);
                        adj[j] |= bit(i);
                    }
                } else if bit_set {
                    return Err(GraphError::Graph6("nonzero padding bits".into()));
                }
                idx += 1;
            }
        }
        Ok(Graph::from_adj(adj))
    }

    pub fn to_graph6(&self) -> String {
        let mut out = Vec::new();
        if self.n <= 62 {
            out.push(self.n as u8 + 63);
        } else {
            out.push(126);
            out.push(((self.n >> 12) & 0x3f) as u8 + 63);
            out.push(((self.n >> 6) & 0x3f) as u8 + 63);
            out.push((self.n & 0x3f) as u8 + 63);
        }
        let nbits = self.n * self.n.saturating_sub(1) / 2;
        let mut sextet = 0u8;
        for idx in 0..nbits {
            let (i, j) = triangle_coords(idx);
            sextet = (sextet << 1) | u8::from(self.has_edge(i, j));
            if idx % 6 == 5 {
                out.push(sextet + 63);
                sextet = 0;
            }
        }
        if !nbits.is_multiple_of(6) {
            sextet <<= 6 - (nbits % 6) as u8;
            out.push(sextet + 63);
        }
        String::from_utf8(out).unwrap()
    }

    /// Parses the edge-list text format `n: u-v,u-v,...`.
    pub fn from_edge_list_text(text: &str) -> Result<Graph, GraphError> {
        let text = text.trim();
        let (head, rest) = text
            .split_once(':')
            .ok_or_else(|| GraphError::EdgeList("missing ':' separator".into()))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| GraphError::EdgeList(format!("bad vertex count {head:?}")))?;
        let mut edges = Vec::new();
        for part in rest.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (a, b) = part
                .split_once('-')
                .ok_or_else(|| GraphError::EdgeList(format!("bad edge {part:?}")))?;
            let u: usize = a
                .trim()
                .parse()
                .map_err(|_| GraphError::EdgeList(format!("bad endpoint {a:?}")))?;
            let v: usize = b
                .trim()
                .parse()
                .map_err(|_| GraphError::EdgeList(format!("bad endpoint {b:?}")))?;
            edges.push((u, v));
        }
        Graph::from_edge_list(n, &edges)
    }

    pub fn to_edge_list_text(&self) -> String {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        if edges.is_empty() {
            format!("{}:", self.n)
        } else {
            format!("{}: {}", self.n, edges.join(","))
        }
    }
}

/// All vertex pairs `(i, j)` with `i < j` on `n` vertices, in graph6 bit
/// order (by `j`, then `i`). Enumerating edge masks over this list walks
/// every labeled graph on `n` vertices.
pub fn bit_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Inverse of the graph6 bit layout: bit `idx` encodes the pair `(i, j)`
/// with `i < j`, ordered by `j` then `i`.
fn triangle_coords(idx: usize) -> (usize, usize) {
    // Find j with j(j-1)/2 <= idx < j(j+1)/2.
    let mut j = 1;
    while j * (j + 1) / 2 <= idx {
        j += 1;
    }
    (idx - j * (j - 1) / 2, j)
}
