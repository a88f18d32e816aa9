//! Internal exact-search kernels shared by the invariant and discrepancy
//! solvers: chromatic number and clique number of masked subsets, memo
//! tables for both, and a streaming proper-partition enumerator.

use std::collections::HashMap;

use crate::graph::{bit, low_bits, Graph};

// ============================================================================
// Chromatic number / clique number on subsets
// ============================================================================

/// Greedy clique inside `s`, grown from the highest-degree vertex. Lower
/// bound for chi, starting point for the exact clique search.
pub(crate) fn greedy_clique(g: &Graph, s: u64) -> u64 {
    if s == 0 {
        return 0;
    }
    let mut best_v = 0;
    let mut best_deg = usize::MAX;
    let mut rest = s;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (g.adj(v) & s).count_ones() as usize;
        if best_deg == usize::MAX || d > best_deg {
            best_v = v;
            best_deg = d;
        }
    }
    let mut clique = bit(best_v);
    let mut cands = g.adj(best_v) & s;
    while cands != 0 {
        // Next member: candidate with most neighbors among remaining candidates.
        let mut pick = 0;
        let mut pick_deg = 0;
        let mut it = cands;
        let mut first = true;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let d = (g.adj(v) & cands).count_ones() as usize;
            if first || d > pick_deg {
                pick = v;
                pick_deg = d;
                first = false;
            }
        }
        clique |= bit(pick);
        cands &= g.adj(pick);
    }
    clique
}

/// Greedy coloring of `s` in decreasing-degree order; returns the number of
/// colors used (an upper bound for chi).
fn greedy_coloring_bound(g: &Graph, s: u64) -> usize {
    let mut verts: Vec<usize> = crate::graph::VertexSet(s).iter().collect();
    verts.sort_by_key(|&v| std::cmp::Reverse((g.adj(v) & s).count_ones()));
    let mut color_masks: Vec<u64> = Vec::new();
    for v in verts {
        match color_masks.iter_mut().find(|m| **m & g.adj(v) == 0) {
            Some(m) => *m |= bit(v),
            None => color_masks.push(bit(v)),
        }
    }
    color_masks.len()
}

fn colorable_with(g: &Graph, order: &[usize], k: usize) -> bool {
    fn rec(g: &Graph, order: &[usize], colors: &mut Vec<u64>, k: usize, i: usize) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let used = colors.len();
        for c in 0..used.min(k) {
            if colors[c] & g.adj(v) == 0 {
                colors[c] |= bit(v);
                if rec(g, order, colors, k, i + 1) {
                    return true;
                }
                colors[c] &= !bit(v);
            }
        }
        // One fresh color; trying more than one at the same depth only
        // permutes color names.
        if used < k {
            colors.push(bit(v));
            if rec(g, order, colors, k, i + 1) {
                return true;
            }
            colors.pop();
        }
        false
    }
    rec(g, order, &mut Vec::new(), k, 0)
}

/// Exact chromatic number of the subgraph induced by `s`, by iterative
/// deepening between a greedy clique lower bound and a greedy coloring
/// upper bound.
pub(crate) fn chi_of_subset(g: &Graph, s: u64) -> usize {
    if s == 0 {
        return 0;
    }
    let clique = greedy_clique(g, s);
    let lb = clique.count_ones() as usize;
    let ub = greedy_coloring_bound(g, s);
    if lb == ub {
        return lb;
    }
    let mut order: Vec<usize> = crate::graph::VertexSet(s).iter().collect();
    // Clique vertices first (they pin distinct colors), then by degree.
    order.sort_by_key(|&v| {
        (
            clique & bit(v) == 0,
            std::cmp::Reverse((g.adj(v) & s).count_ones()),
        )
    });
    for k in lb..ub {
        if colorable_with(g, &order, k) {
            return k;
        }
    }
    ub
}

/// Exact clique number of the subgraph induced by `s`.
pub(crate) fn omega_of_subset(g: &Graph, s: u64) -> usize {
    let mut best = greedy_clique(g, s).count_ones() as usize;
    fn expand(g: &Graph, cands: u64, size: usize, best: &mut usize) {
        if size + cands.count_ones() as usize <= *best {
            return;
        }
        if cands == 0 {
            *best = size;
            return;
        }
        // Branch on the pivot's non-neighbors (the pivot is one of them);
        // cliques inside N(pivot) are reached through the pivot branch.
        let pivot = cands.trailing_zeros() as usize;
        let mut branch = cands & !g.adj(pivot);
        let mut remaining = cands;
        while branch != 0 {
            let v = branch.trailing_zeros() as usize;
            branch &= branch - 1;
            expand(g, remaining & g.adj(v), size + 1, best);
            remaining &= !bit(v);
        }
    }
    expand(g, s, 0, &mut best);
    best
}

/// Lazily filled chi table over subsets of one graph. Dense vector up to 22
/// vertices, hash map beyond.
pub(crate) struct ChiCache<'g> {
    g: &'g Graph,
    table: Option<Vec<u8>>,
    map: HashMap<u64, u8>,
}

const DENSE_CACHE_LIMIT: usize = 22;

impl<'g> ChiCache<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let table = if g.n() <= DENSE_CACHE_LIMIT {
            Some(vec![u8::MAX; 1usize << g.n()])
        } else {
            None
        };
        ChiCache {
            g,
            table,
            map: HashMap::new(),
        }
    }

    pub fn chi(&mut self, s: u64) -> usize {
        debug_assert_eq!(s & !low_bits(self.g.n()), 0);
        if let Some(table) = &mut self.table {
            let entry = &mut table[s as usize];
            if *entry == u8::MAX {
                *entry = chi_of_subset(self.g, s) as u8;
            }
            *entry as usize
        } else {
            match self.map.get(&s) {
                Some(&v) => v as usize,
                None => {
                    let v = chi_of_subset(self.g, s) as u8;
                    self.map.insert(s, v);
                    v as usize
                }
            }
        }
    }
}

// ============================================================================
// Proper partition enumeration
// ============================================================================

/// Streaming enumerator of proper partitions (partitions of the vertex set
/// into independent blocks), one representative per partition.
///
/// Vertices are assigned in label order; a vertex joins an existing block
/// or opens a fresh one, so blocks are created by their smallest vertex and
/// the block list is automatically ordered by smallest contained vertex.
/// With `complete_only`, only partitions where every block pair sees at
/// least one edge are yielded. `max_colors` prunes branches whose block
/// count already exceeds the cap.
///
/// `leaves` counts every proper partition reached (before the completeness
/// filter); solver budgets meter this counter.
pub(crate) struct PartitionCursor<'g> {
    g: &'g Graph,
    complete_only: bool,
    max_colors: Option<usize>,
    blocks: Vec<u64>,
    // choice[v]: next candidate block index to try for vertex v; the value
    // blocks-at-that-depth means "open a fresh block".
    choice: Vec<usize>,
    depth: usize,
    state: CursorState,
    pub leaves: u64,
    limit: Option<u64>,
    exceeded: bool,
}

enum CursorState {
    Fresh,
    AtLeaf,
    Backtracking,
    Done,
}

impl<'g> PartitionCursor<'g> {
    pub fn new(g: &'g Graph, complete_only: bool, max_colors: Option<usize>) -> Self {
        Self::with_limit(g, complete_only, max_colors, None)
    }

    /// Like [`PartitionCursor::new`] but stops after visiting `limit`
    /// proper partitions, flagging `limit_exceeded`.
    pub fn with_limit(
        g: &'g Graph,
        complete_only: bool,
        max_colors: Option<usize>,
        limit: Option<u64>,
    ) -> Self {
        PartitionCursor {
            g,
            complete_only,
            max_colors,
            blocks: Vec::new(),
            choice: vec![0; g.n()],
            depth: 0,
            state: CursorState::Fresh,
            leaves: 0,
            limit,
            exceeded: false,
        }
    }

    /// The block stack of the most recently yielded partition.
    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn limit_exceeded(&self) -> bool {
        self.exceeded
    }

    fn is_complete(&self) -> bool {
        let k = self.blocks.len();
        for i in 0..k {
            let mut nb = 0u64;
            let mut rest = self.blocks[i];
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                nb |= self.g.adj(v);
            }
            for j in i + 1..k {
                if nb & self.blocks[j] == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Advances to the next accepted partition; the returned slice borrows
    /// the cursor's internal block stack.
    pub fn advance(&mut self) -> Option<&[u64]> {
        let n = self.g.n();
        loop {
            match self.state {
                CursorState::Done => return None,
                CursorState::Fresh => {
                    if n == 0 {
                        self.state = CursorState::Done;
                        self.leaves += 1;
                        // The empty partition is vacuously complete.
                        return Some(&self.blocks);
                    }
                    self.state = CursorState::Backtracking;
                    // Fall through to assignment of vertex 0.
                    self.depth = 0;
                    self.choice[0] = 0;
                }
                CursorState::AtLeaf => {
                    // Resume past the leaf we just yielded.
                    self.state = CursorState::Backtracking;
                    self.undo_last();
                }
                CursorState::Backtracking => {}
            }

            // Try to extend the current prefix.
            let v = self.depth;
            let nb = self.blocks.len();
            let mut c = self.choice[v];
            let mut advanced = false;
            while c <= nb {
                if c < nb {
                    if self.blocks[c] & self.g.adj(v) == 0 {
                        self.choice[v] = c + 1;
                        self.blocks[c] |= bit(v);
                        advanced = true;
                        break;
                    }
                    c += 1;
                } else {
                    self.choice[v] = nb + 1;
                    if self.max_colors.is_none_or(|m| nb < m) {
                        self.blocks.push(bit(v));
                        advanced = true;
                    }
                    break;
                }
            }

            if !advanced {
                if v == 0 {
                    self.state = CursorState::Done;
                    return None;
                }
                self.depth -= 1;
                self.undo_at_depth();
                continue;
            }

            self.depth += 1;
            if self.depth < n {
                self.choice[self.depth] = 0;
                continue;
            }

            // Leaf: a full proper partition.
            self.leaves += 1;
            if self.limit.is_some_and(|l| self.leaves > l) {
                self.exceeded = true;
                self.state = CursorState::Done;
                return None;
            }
            if !self.complete_only || self.is_complete() {
                self.state = CursorState::AtLeaf;
                return Some(&self.blocks);
            }
            self.undo_last();
        }
    }

    /// Undoes the assignment of the last-placed vertex (depth == n).
    fn undo_last(&mut self) {
        self.depth -= 1;
        self.undo_at_depth();
    }

    /// Removes vertex `self.depth` from its block; `choice` keeps the resume
    /// position for that vertex.
    fn undo_at_depth(&mut self) {
        let v = self.depth;
        let b = self.choice[v] - 1;
        // A joined block keeps its smaller vertices; the fresh block held
        // only v and is dropped once emptied.
        self.blocks[b] &= !bit(v);
        if self.blocks.last() == Some(&0) {
            self.blocks.pop();
        }
    }
}
