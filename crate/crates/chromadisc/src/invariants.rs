//! Exact classical invariants: chromatic, clique, independence and
//! achromatic numbers, maximum degree, local chromatic number, and the
//! proper-partition enumerator they share.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{low_bits, Graph, VertexSet};
use crate::search::{chi_of_subset, omega_of_subset, PartitionCursor};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("operation undefined on the empty graph")]
    EmptyGraph,
    #[error("coloring is not a proper partition of the graph: {0}")]
    InvalidColoring(String),
}

// ============================================================================
// Coloring
// ============================================================================

/// A proper coloring as an ordered partition of the vertices into nonempty
/// independent blocks; color identities are block indices.
#[derive(Clone, PartialEq, Eq)]
pub struct Coloring {
    blocks: Vec<VertexSet>,
}

impl Coloring {
    /// Builds a coloring after checking it is a partition of `V(g)` into
    /// nonempty independent blocks.
    pub fn new(g: &Graph, blocks: Vec<VertexSet>) -> Result<Coloring, InvariantError> {
        let mut union = 0u64;
        for b in &blocks {
            if b.is_empty() {
                return Err(InvariantError::InvalidColoring("empty block".into()));
            }
            if b.bits() & !low_bits(g.n()) != 0 {
                return Err(InvariantError::InvalidColoring(
                    "block out of vertex range".into(),
                ));
            }
            if union & b.bits() != 0 {
                return Err(InvariantError::InvalidColoring("blocks overlap".into()));
            }
            union |= b.bits();
            for v in b.iter() {
                if g.adj(v) & b.bits() != 0 {
                    return Err(InvariantError::InvalidColoring(format!(
                        "block containing vertex {v} is not independent"
                    )));
                }
            }
        }
        if union != low_bits(g.n()) {
            return Err(InvariantError::InvalidColoring(
                "blocks do not cover V".into(),
            ));
        }
        Ok(Coloring { blocks })
    }

    pub(crate) fn from_masks(blocks: &[u64]) -> Coloring {
        Coloring {
            blocks: blocks.iter().map(|&b| VertexSet(b)).collect(),
        }
    }

    /// Builds from a per-vertex color assignment.
    pub fn from_assignment(g: &Graph, colors: &[usize]) -> Result<Coloring, InvariantError> {
        if colors.len() != g.n() {
            return Err(InvariantError::InvalidColoring(
                "assignment length mismatch".into(),
            ));
        }
        let k = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut blocks = vec![VertexSet::EMPTY; k];
        for (v, &c) in colors.iter().enumerate() {
            blocks[c].insert(v);
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_by_key(|b| b.min_vertex());
        Coloring::new(g, blocks)
    }

    #[inline]
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    #[inline]
    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub(crate) fn block_masks(&self) -> Vec<u64> {
        self.blocks.iter().map(|b| b.bits()).collect()
    }

    pub fn color_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(v))
    }

    /// Number of blocks meeting `s` (the colors used on the subset).
    pub fn colors_on(&self, s: VertexSet) -> usize {
        self.blocks
            .iter()
            .filter(|b| b.bits() & s.bits() != 0)
            .count()
    }

    /// Whether every pair of blocks sees at least one edge of `g`.
    pub fn is_complete(&self, g: &Graph) -> bool {
        for (i, bi) in self.blocks.iter().enumerate() {
            let mut nb = 0u64;
            for v in bi.iter() {
                nb |= g.adj(v);
            }
            for bj in &self.blocks[i + 1..] {
                if nb & bj.bits() == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Greedy coloring under a seeded random vertex order: each vertex takes
    /// the smallest color absent from its neighborhood. Deterministic for a
    /// fixed seed, always proper, and always complete (a vertex colored `j`
    /// has neighbors of every color below `j`).
    pub fn random_greedy(g: &Graph, seed: u64) -> Coloring {
        let mut rng = crate::rng::SplitMix64::new(seed);
        let mut order: Vec<usize> = (0..g.n()).collect();
        crate::rng::shuffle(&mut order, &mut rng);
        let mut blocks: Vec<u64> = Vec::new();
        for v in order {
            match blocks.iter_mut().find(|b| **b & g.adj(v) == 0) {
                Some(b) => *b |= 1u64 << v,
                None => blocks.push(1u64 << v),
            }
        }
        blocks.sort_by_key(|b| b.trailing_zeros());
        Coloring::from_masks(&blocks)
    }

    /// Seeded random optimal coloring: a proper coloring with exactly
    /// chromatic-number colors, found by backtracking over a shuffled
    /// vertex order with per-vertex shuffled color preferences.
    /// Deterministic for a fixed seed.
    pub fn random_optimal(g: &Graph, seed: u64) -> Coloring {
        let chi = chi_of_subset(g, low_bits(g.n()));
        let mut rng = crate::rng::SplitMix64::new(seed);
        let mut order: Vec<usize> = (0..g.n()).collect();
        crate::rng::shuffle(&mut order, &mut rng);
        let prefs: Vec<Vec<usize>> = (0..g.n())
            .map(|_| {
                let mut cs: Vec<usize> = (0..chi).collect();
                crate::rng::shuffle(&mut cs, &mut rng);
                cs
            })
            .collect();
        fn rec(
            g: &Graph,
            order: &[usize],
            prefs: &[Vec<usize>],
            colors: &mut Vec<u64>,
            i: usize,
        ) -> bool {
            if i == order.len() {
                return true;
            }
            let v = order[i];
            for &c in &prefs[v] {
                if colors[c] & g.adj(v) == 0 {
                    colors[c] |= 1u64 << v;
                    if rec(g, order, prefs, colors, i + 1) {
                        return true;
                    }
                    colors[c] &= !(1u64 << v);
                }
            }
            false
        }
        let mut colors = vec![0u64; chi];
        let ok = rec(g, &order, &prefs, &mut colors, 0);
        debug_assert!(ok, "a chromatic-number coloring always exists");
        // Every slot is used: a proper coloring with fewer colors would
        // contradict the minimality of chi.
        colors.sort_by_key(|b| b.trailing_zeros());
        Coloring::from_masks(&colors)
    }

    /// Repeatedly merges pairs of blocks with no edge between them until the
    /// coloring is complete. Never increases the number of colors seen on
    /// any subset.
    pub fn merge_to_complete(&self, g: &Graph) -> Coloring {
        let mut blocks = self.block_masks();
        loop {
            let mut merged = false;
            'outer: for i in 0..blocks.len() {
                let mut nb = 0u64;
                let mut rest = blocks[i];
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    nb |= g.adj(v);
                }
                for j in i + 1..blocks.len() {
                    if nb & blocks[j] == 0 {
                        let bj = blocks.remove(j);
                        blocks[i] |= bj;
                        merged = true;
                        break 'outer;
                    }
                }
            }
            if !merged {
                break;
            }
        }
        blocks.sort_by_key(|b| b.trailing_zeros());
        Coloring::from_masks(&blocks)
    }
}

impl std::fmt::Debug for Coloring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.blocks.iter()).finish()
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.blocks.len()))?;
        for b in &self.blocks {
            seq.serialize_element(&b.to_vec())?;
        }
        seq.end()
    }
}

// ============================================================================
// Classical invariants
// ============================================================================

/// Least number of colors in a proper coloring, with one optimal coloring
/// as witness. The zero-vertex graph has chromatic number 0.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    let chi = chi_of_subset(g, low_bits(g.n()));
    // Re-derive a coloring with exactly chi blocks: assign vertices in label
    // order, backtracking, capped at chi colors. Must succeed by exactness.
    let mut cursor = PartitionCursor::new(g, false, Some(chi));
    while let Some(blocks) = cursor.advance() {
        if blocks.len() == chi {
            return (chi, Coloring::from_masks(blocks));
        }
    }
    debug_assert!(g.n() == 0 && chi == 0);
    (0, Coloring { blocks: Vec::new() })
}

pub fn clique_number(g: &Graph) -> usize {
    omega_of_subset(g, low_bits(g.n()))
}

pub fn independence_number(g: &Graph) -> usize {
    omega_of_subset(&g.complement(), low_bits(g.n()))
}

pub fn max_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0)
}

pub fn is_triangle_free(g: &Graph) -> bool {
    for u in 0..g.n() {
        for v in VertexSet(g.adj(u) & !low_bits(u + 1)).iter() {
            if g.adj(u) & g.adj(v) != 0 {
                return false;
            }
        }
    }
    true
}

// ============================================================================
// Partition stream
// ============================================================================

/// Iterator over proper partitions of `V(g)` into independent blocks, one
/// representative per partition, block order normalized by smallest
/// contained vertex.
pub struct ProperPartitions<'g> {
    cursor: PartitionCursor<'g>,
}

impl Iterator for ProperPartitions<'_> {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        self.cursor.advance().map(Coloring::from_masks)
    }
}

/// Streams every proper partition of `V(g)`; with `complete_only`, only
/// partitions where every block pair sees an edge; with `max_colors`, only
/// partitions with at most that many blocks.
pub fn proper_partitions(
    g: &Graph,
    complete_only: bool,
    max_colors: Option<usize>,
) -> ProperPartitions<'_> {
    ProperPartitions {
        cursor: PartitionCursor::new(g, complete_only, max_colors),
    }
}

/// Maximum number of blocks over complete proper colorings.
pub fn achromatic_number(g: &Graph) -> usize {
    let mut cursor = PartitionCursor::new(g, true, None);
    let mut best = 0;
    while let Some(blocks) = cursor.advance() {
        best = best.max(blocks.len());
    }
    best
}

/// Minimum over proper colorings of the maximum number of colors in a
/// closed neighborhood.
///
/// The enumeration is capped at the achromatic number of colors: merging
/// two blocks with no edge between them never increases the number of
/// colors in any closed neighborhood, so some coloring attaining the
/// minimum is complete, and complete colorings use at most the achromatic
/// number of colors.
pub fn local_chromatic_number(g: &Graph) -> Result<usize, InvariantError> {
    if g.n() == 0 {
        return Err(InvariantError::EmptyGraph);
    }
    let cap = achromatic_number(g);
    let mut cursor = PartitionCursor::new(g, false, Some(cap));
    let mut best = usize::MAX;
    while let Some(blocks) = cursor.advance() {
        let mut worst = 0;
        for v in 0..g.n() {
            let closed = g.adj(v) | (1u64 << v);
            let colors = blocks.iter().filter(|&&b| b & closed != 0).count();
            worst = worst.max(colors);
            if worst >= best {
                break;
            }
        }
        best = best.min(worst);
    }
    Ok(best)
}

// ============================================================================
// ParamReport
// ============================================================================

/// Structural flags of one graph. `perfect` is absent when the graph is
/// beyond the perfectness-check cap.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Flags {
    pub connected: bool,
    pub triangle_free: bool,
    pub paw_free: bool,
    pub complete_multipartite: bool,
    pub perfect: Option<bool>,
    pub bipartite: bool,
}

/// All exact invariants and structural flags of one graph. `phi` and
/// `phi_hat` stay empty when the discrepancy solvers were skipped or ran
/// out of budget.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ParamReport {
    pub n: usize,
    pub m: usize,
    pub chi: usize,
    pub omega: usize,
    pub alpha: usize,
    pub delta: usize,
    /// Local chromatic number; reported as 0 for the zero-vertex graph.
    pub psi: usize,
    pub achromatic: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_hat: Option<i64>,
    /// `None` means infinite (disconnected graph).
    pub diameter: Option<usize>,
    pub flags: Flags,
}
