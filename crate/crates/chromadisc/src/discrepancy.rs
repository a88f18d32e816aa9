//! The discrepancy solvers: evaluation of a fixed coloring (phi_c and its
//! connected restriction) and exact minimization over complete colorings,
//! with self-certifying witnesses.
//!
//! Two structural facts drive the implementation. First, for a fixed
//! coloring the unrestricted maximum is always attained by a transversal
//! (one vertex per color class), so phi_c reduces to a minimum-chi search
//! over transversals instead of a sweep of all induced subgraphs. Second,
//! both parameters are attained by complete colorings: merging two color
//! classes with no edge between them never increases the number of colors
//! on any subset, so the exact solvers enumerate complete colorings only,
//! capped at the achromatic number of colors.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{bit, low_bits, Graph, VertexSet};
use crate::invariants::{Coloring, InvariantError};
use crate::search::{ChiCache, PartitionCursor};

// ============================================================================
// Budget
// ============================================================================

/// Structural solver budget: a vertex cap checked up front and a cap on the
/// number of proper partitions the enumeration may visit. Both are
/// machine-independent, so a budgeted run either succeeds or fails
/// identically everywhere; exceeding the budget is an error, never a
/// silently approximate answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverBudget {
    pub max_vertices: usize,
    pub max_partitions: u64,
}

pub const DEFAULT_MAX_VERTICES: usize = 16;
pub const DEFAULT_MAX_PARTITIONS: u64 = 5_000_000;

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget {
            max_vertices: DEFAULT_MAX_VERTICES,
            max_partitions: DEFAULT_MAX_PARTITIONS,
        }
    }
}

impl SolverBudget {
    pub fn with_max_partitions(max_partitions: u64) -> Self {
        SolverBudget {
            max_partitions,
            ..Default::default()
        }
    }
}

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("graph has {n} vertices, over the solver budget of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("partition enumeration exceeded the budget of {max} partitions")]
    PartitionBudget { max: u64 },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

// ============================================================================
// Witness
// ============================================================================

/// A coloring together with an induced subgraph attaining the reported
/// discrepancy; `value` always equals the number of coloring blocks meeting
/// `subgraph` minus the chromatic number of the induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub coloring: Coloring,
    pub subgraph: VertexSet,
    pub value: i64,
}

impl Witness {
    /// Recomputes the discrepancy of `subgraph` under `coloring` from
    /// scratch and compares it with `value`.
    pub fn revalidate(&self, g: &Graph) -> bool {
        if Coloring::new(g, self.coloring.blocks().to_vec()).is_err() {
            return false;
        }
        let colors = self.coloring.colors_on(self.subgraph) as i64;
        let chi = crate::search::chi_of_subset(g, self.subgraph.bits()) as i64;
        colors - chi == self.value
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Witness", 3)?;
        s.serialize_field("coloring", &self.coloring)?;
        s.serialize_field("subgraph", &self.subgraph.to_vec())?;
        s.serialize_field("value", &self.value)?;
        s.end()
    }
}

// ============================================================================
// Per-coloring evaluation
// ============================================================================

fn colors_on_mask(blocks: &[u64], m: u64) -> usize {
    blocks.iter().filter(|&&b| b & m != 0).count()
}

/// Minimum chromatic number over transversals (one vertex per block), with
/// the attaining transversal mask.
///
/// `abort_le`: stop as soon as some transversal with chi at most the given
/// threshold is found, returning `None`. `exact_ties`: keep searching tied
/// branches so the returned mask is the numerically smallest minimizer.
fn min_transversal_chi(
    cache: &mut ChiCache<'_>,
    blocks: &[u64],
    abort_le: Option<usize>,
    exact_ties: bool,
) -> Option<(usize, u64)> {
    struct Search<'a, 'g> {
        cache: &'a mut ChiCache<'g>,
        blocks: &'a [u64],
        abort_le: Option<usize>,
        exact_ties: bool,
        best_chi: usize,
        best_mask: u64,
    }
    impl Search<'_, '_> {
        // Returns true when the abort threshold fired.
        fn rec(&mut self, idx: usize, partial: u64) -> bool {
            let chi_p = self.cache.chi(partial);
            if chi_p > self.best_chi || (!self.exact_ties && chi_p >= self.best_chi) {
                // Any completion only adds vertices, so chi can only grow.
                return false;
            }
            if idx == self.blocks.len() {
                if chi_p < self.best_chi
                    || (chi_p == self.best_chi && self.exact_ties && partial < self.best_mask)
                {
                    self.best_chi = chi_p;
                    self.best_mask = partial;
                }
                return self.abort_le.is_some_and(|t| self.best_chi <= t);
            }
            let mut rest = self.blocks[idx];
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.rec(idx + 1, partial | bit(v)) {
                    return true;
                }
            }
            false
        }
    }
    let mut s = Search {
        cache,
        blocks,
        abort_le,
        exact_ties,
        best_chi: usize::MAX,
        best_mask: u64::MAX,
    };
    if s.rec(0, 0) {
        None
    } else {
        debug_assert!(s.best_chi != usize::MAX);
        Some((s.best_chi, s.best_mask))
    }
}

enum HatOutcome {
    Exact { value: i64, mask: u64 },
    Aborted,
}

/// Maximum of colors-minus-chi over nonempty connected induced subsets.
///
/// Rooted boundary-expansion enumeration with a monotone upper bound: at a
/// node with set S, every set in the subtree lies inside S plus the still
/// reachable vertices, and has chi at least chi(S), so subtrees whose bound
/// cannot beat the incumbent are cut. `abort_ge`: stop once the incumbent
/// reaches the threshold. `exact_ties`: only cut strictly dominated
/// subtrees, so ties resolve to the smallest subset mask.
fn phi_hat_search<'g>(
    g: &'g Graph,
    cache: &mut ChiCache<'g>,
    blocks: &[u64],
    abort_ge: Option<i64>,
    exact_ties: bool,
) -> HatOutcome {
    if g.n() == 0 {
        return HatOutcome::Exact { value: 0, mask: 0 };
    }
    struct Search<'a, 'g> {
        g: &'g Graph,
        cache: &'a mut ChiCache<'g>,
        blocks: &'a [u64],
        universe: u64,
        abort_ge: Option<i64>,
        exact_ties: bool,
        best: i64,
        best_mask: u64,
    }
    impl Search<'_, '_> {
        // Returns true when the abort threshold fired.
        fn rec(&mut self, s: u64, ext: u64, nbhd: u64) -> bool {
            let chi_s = self.cache.chi(s) as i64;
            let val = colors_on_mask(self.blocks, s) as i64 - chi_s;
            if val > self.best {
                self.best = val;
                self.best_mask = s;
            } else if val == self.best && self.exact_ties && s < self.best_mask {
                self.best_mask = s;
            }
            if self.abort_ge.is_some_and(|t| self.best >= t) {
                return true;
            }
            // Vertices still reachable below this node: current extension
            // plus everything outside the closed neighborhood. A vertex
            // adjacent to S but no longer in the extension was branched
            // away and cannot re-enter.
            let avail = ext | (self.universe & !nbhd);
            if avail == 0 {
                return false;
            }
            let ub = colors_on_mask(self.blocks, s | avail) as i64 - chi_s;
            let mut rest = ext;
            while rest != 0 {
                if ub < self.best || (!self.exact_ties && ub == self.best) {
                    return false;
                }
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let child_ext = rest | (self.g.adj(w) & self.universe & !nbhd);
                let child_nbhd = nbhd | self.g.adj(w) | bit(w);
                if self.rec(s | bit(w), child_ext, child_nbhd) {
                    return true;
                }
            }
            false
        }
    }
    let mut search = Search {
        g,
        cache,
        blocks,
        universe: 0,
        abort_ge,
        exact_ties,
        best: -1,
        best_mask: u64::MAX,
    };
    for root in 0..g.n() {
        search.universe = !low_bits(root + 1) & low_bits(g.n());
        let ext = g.adj(root) & search.universe;
        if search.rec(bit(root), ext, g.adj(root) | bit(root)) {
            return HatOutcome::Aborted;
        }
    }
    HatOutcome::Exact {
        value: search.best,
        mask: search.best_mask,
    }
}

fn validated_blocks(g: &Graph, c: &Coloring) -> Result<Vec<u64>, SolverError> {
    Coloring::new(g, c.blocks().to_vec())?;
    Ok(c.block_masks())
}

/// phi of one coloring: the maximum over all induced subgraphs of the
/// number of colors used minus the chromatic number, computed as block
/// count minus the minimum transversal chi. The witness subgraph is the
/// smallest-mask minimizing transversal.
pub fn phi_of_coloring(g: &Graph, c: &Coloring) -> Result<Witness, SolverError> {
    let blocks = validated_blocks(g, c)?;
    let mut cache = ChiCache::new(g);
    let (min_chi, mask) = min_transversal_chi(&mut cache, &blocks, None, true)
        .expect("unaborted search always returns");
    Ok(Witness {
        coloring: c.clone(),
        subgraph: VertexSet(mask),
        value: blocks.len() as i64 - min_chi as i64,
    })
}

/// Connected variant of [`phi_of_coloring`]: the maximum runs over
/// connected induced subgraphs only; ties break to the smallest mask.
pub fn phi_hat_of_coloring(g: &Graph, c: &Coloring) -> Result<Witness, SolverError> {
    let blocks = validated_blocks(g, c)?;
    let mut cache = ChiCache::new(g);
    match phi_hat_search(g, &mut cache, &blocks, None, true) {
        HatOutcome::Exact { value, mask } => Ok(Witness {
            coloring: c.clone(),
            subgraph: VertexSet(mask),
            value,
        }),
        HatOutcome::Aborted => unreachable!("no abort threshold was set"),
    }
}

// ============================================================================
// Exact solvers
// ============================================================================

struct MeteredCursor<'g> {
    cursor: PartitionCursor<'g>,
    max_partitions: u64,
    consumed_before: u64,
}

impl<'g> MeteredCursor<'g> {
    fn new(g: &'g Graph, max_colors: Option<usize>, budget: &SolverBudget, used: u64) -> Self {
        MeteredCursor {
            cursor: PartitionCursor::with_limit(
                g,
                true,
                max_colors,
                Some(budget.max_partitions.saturating_sub(used)),
            ),
            max_partitions: budget.max_partitions,
            consumed_before: used,
        }
    }

    fn advance(&mut self) -> Result<Option<&[u64]>, SolverError> {
        if self.cursor.advance().is_none() {
            if self.cursor.limit_exceeded() {
                return Err(SolverError::PartitionBudget {
                    max: self.max_partitions,
                });
            }
            return Ok(None);
        }
        Ok(Some(self.cursor.blocks()))
    }

    fn used(&self) -> u64 {
        self.consumed_before + self.cursor.leaves
    }
}

fn check_vertices(n: usize, budget: &SolverBudget) -> Result<(), SolverError> {
    if n > budget.max_vertices {
        Err(SolverError::TooManyVertices {
            n,
            max: budget.max_vertices,
        })
    } else {
        Ok(())
    }
}

/// Achromatic number computed under the partition budget; first pass of
/// both exact solvers, providing the color cap for the second pass.
fn budgeted_achromatic(g: &Graph, budget: &SolverBudget) -> Result<(usize, u64), SolverError> {
    let mut cursor = MeteredCursor::new(g, None, budget, 0);
    let mut best = 0;
    while let Some(blocks) = cursor.advance()? {
        best = best.max(blocks.len());
    }
    Ok((best, cursor.used()))
}

/// Exact chromatic discrepancy: the minimum of phi_c over complete proper
/// colorings with at most achromatic-number blocks, which equals the
/// minimum over all proper colorings. Returns the minimizing coloring with
/// its worst transversal.
pub fn phi_exact(g: &Graph, budget: &SolverBudget) -> Result<Witness, SolverError> {
    check_vertices(g.n(), budget)?;
    let (cap, used) = budgeted_achromatic(g, budget)?;
    let chi = crate::search::chi_of_subset(g, crate::graph::low_bits(g.n()));
    let mut cache = ChiCache::new(g);
    let mut cursor = MeteredCursor::new(g, Some(cap), budget, used);
    let mut best: Option<(i64, Vec<u64>)> = None;
    while let Some(blocks) = cursor.advance()? {
        let k = blocks.len() as i64;
        // Skip this coloring once it provably cannot become the incumbent:
        // worse value, or equal value without fewer blocks (equal values
        // tie-break toward the smallest block count). A transversal with
        // chi at most the threshold proves that; a negative threshold can
        // never fire.
        let abort_le = best.as_ref().and_then(|(b, bb)| {
            let cutoff = if blocks.len() < bb.len() { k - b - 1 } else { k - b };
            usize::try_from(cutoff).ok()
        });
        if let Some((min_chi, _)) = min_transversal_chi(&mut cache, blocks, abort_le, false) {
            let value = k - min_chi as i64;
            let improves = best
                .as_ref()
                .is_none_or(|(b, bb)| value < *b || (value == *b && blocks.len() < bb.len()));
            if improves {
                // Value 0 with the fewest possible blocks cannot be beaten.
                let done = value == 0 && blocks.len() == chi;
                best = Some((value, blocks.to_vec()));
                if done {
                    break;
                }
            }
        }
    }
    let (value, blocks) = best.expect("every graph has a complete coloring");
    let witness = phi_of_coloring(g, &Coloring::from_masks(&blocks))?;
    debug_assert_eq!(witness.value, value);
    Ok(witness)
}

/// Exact connected chromatic discrepancy. Disconnected graphs decompose:
/// the value is the maximum over components, and the witness coloring is
/// assembled from per-component minimizers, merged into a complete coloring
/// of the whole graph.
pub fn phi_hat_exact(g: &Graph, budget: &SolverBudget) -> Result<Witness, SolverError> {
    if g.n() == 0 {
        return Ok(Witness {
            coloring: Coloring::from_masks(&[]),
            subgraph: VertexSet::EMPTY,
            value: 0,
        });
    }
    let comps = g.components();
    if comps.len() == 1 {
        return phi_hat_exact_connected(g, budget);
    }

    let mut expected = 0i64;
    let mut lifted: Vec<u64> = Vec::new();
    for comp in comps {
        let (sub, map) = g.induced_subgraph(comp).expect("component is in range");
        let w = phi_hat_exact_connected(&sub, budget)?;
        expected = expected.max(w.value);
        for b in w.coloring.blocks() {
            lifted.push(b.iter().fold(0u64, |m, v| m | bit(map[v])));
        }
    }
    lifted.sort_by_key(|b| b.trailing_zeros());
    // Merging blocks across (and within) components never increases the
    // colors seen by any connected subgraph, and every coloring is at least
    // the per-component minimum, so the merged coloring still attains it.
    let merged = Coloring::from_masks(&lifted).merge_to_complete(g);
    let witness = phi_hat_of_coloring(g, &merged)?;
    assert_eq!(
        witness.value, expected,
        "component decomposition and whole-graph evaluation disagree"
    );
    Ok(witness)
}

fn phi_hat_exact_connected(g: &Graph, budget: &SolverBudget) -> Result<Witness, SolverError> {
    check_vertices(g.n(), budget)?;
    let (cap, used) = budgeted_achromatic(g, budget)?;
    let chi = crate::search::chi_of_subset(g, crate::graph::low_bits(g.n()));
    let mut cache = ChiCache::new(g);
    let mut cursor = MeteredCursor::new(g, Some(cap), budget, used);
    let mut best: Option<(i64, Vec<u64>)> = None;
    while let Some(blocks) = cursor.advance()? {
        // As in phi_exact, value ties resolve toward fewer blocks, so a
        // coloring with fewer blocks than the incumbent is only abandoned
        // once it is strictly worse.
        let abort_ge = best
            .as_ref()
            .map(|(b, bb)| if blocks.len() < bb.len() { b + 1 } else { *b });
        match phi_hat_search(g, &mut cache, blocks, abort_ge, false) {
            HatOutcome::Exact { value, .. } => {
                let improves = best
                    .as_ref()
                    .is_none_or(|(b, bb)| value < *b || (value == *b && blocks.len() < bb.len()));
                if improves {
                    let done = value == 0 && blocks.len() == chi;
                    best = Some((value, blocks.to_vec()));
                    if done {
                        break;
                    }
                }
            }
            HatOutcome::Aborted => {}
        }
    }
    let (value, blocks) = best.expect("every graph has a complete coloring");
    let witness = phi_hat_of_coloring(g, &Coloring::from_masks(&blocks))?;
    debug_assert_eq!(witness.value, value);
    Ok(witness)
}

// ============================================================================
// Optimal-coloring profile
// ============================================================================

/// Extremes of phi_c and its connected variant over all colorings with
/// exactly chi blocks.
#[derive(Debug, Clone, Serialize)]
pub struct ColoringProfile {
    pub chi: usize,
    /// Number of optimal colorings inspected.
    pub colorings: u64,
    pub phi_c_min: Witness,
    pub phi_c_max: Witness,
    pub phi_hat_c_min: Witness,
    pub phi_hat_c_max: Witness,
}

/// Evaluates both discrepancies for every chi-coloring and returns the
/// extremes with witnesses. Every proper partition has at least chi blocks,
/// so capping the enumeration at chi colors yields exactly the optimal
/// colorings.
pub fn optimal_coloring_profile(
    g: &Graph,
    budget: &SolverBudget,
) -> Result<ColoringProfile, SolverError> {
    check_vertices(g.n(), budget)?;
    let (chi, _) = crate::invariants::chromatic_number(g);
    let mut cache = ChiCache::new(g);
    let mut cursor = PartitionCursor::with_limit(g, false, Some(chi), Some(budget.max_partitions));
    let mut colorings = 0u64;
    let mut extremes: Option<(Witness, Witness, Witness, Witness)> = None;
    while cursor.advance().is_some() {
        let blocks = cursor.blocks().to_vec();
        colorings += 1;
        let coloring = Coloring::from_masks(&blocks);
        let k = blocks.len() as i64;
        let (min_chi, tmask) = min_transversal_chi(&mut cache, &blocks, None, true)
            .expect("unaborted search always returns");
        let phi_w = Witness {
            coloring: coloring.clone(),
            subgraph: VertexSet(tmask),
            value: k - min_chi as i64,
        };
        let hat_w = match phi_hat_search(g, &mut cache, &blocks, None, true) {
            HatOutcome::Exact { value, mask } => Witness {
                coloring,
                subgraph: VertexSet(mask),
                value,
            },
            HatOutcome::Aborted => unreachable!("no abort threshold was set"),
        };
        extremes = Some(match extremes {
            None => (phi_w.clone(), phi_w, hat_w.clone(), hat_w),
            Some((pmin, pmax, hmin, hmax)) => (
                if phi_w.value < pmin.value {
                    phi_w.clone()
                } else {
                    pmin
                },
                if phi_w.value > pmax.value {
                    phi_w
                } else {
                    pmax
                },
                if hat_w.value < hmin.value {
                    hat_w.clone()
                } else {
                    hmin
                },
                if hat_w.value > hmax.value {
                    hat_w
                } else {
                    hmax
                },
            ),
        });
    }
    if cursor.limit_exceeded() {
        return Err(SolverError::PartitionBudget {
            max: budget.max_partitions,
        });
    }
    let (phi_c_min, phi_c_max, phi_hat_c_min, phi_hat_c_max) =
        extremes.expect("a chi-coloring always exists");
    Ok(ColoringProfile {
        chi,
        colorings,
        phi_c_min,
        phi_c_max,
        phi_hat_c_min,
        phi_hat_c_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::invariants::chromatic_number;

    fn exact(g: &Graph) -> (i64, i64) {
        let b = SolverBudget::default();
        (
            phi_exact(g, &b).unwrap().value,
            phi_hat_exact(g, &b).unwrap().value,
        )
    }

    #[test]
    fn named_small_values() {
        assert_eq!(exact(&families::complete(5).unwrap()), (0, 0));
        assert_eq!(exact(&families::cycle(5).unwrap()), (1, 1));
        assert_eq!(exact(&families::cycle(7).unwrap()), (1, 1));
        assert_eq!(exact(&families::cycle(9).unwrap()), (2, 1));
        assert_eq!(exact(&families::paw()), (1, 1));
        let k2k1 = families::complete(2)
            .unwrap()
            .disjoint_union(&families::complete(1).unwrap())
            .unwrap();
        assert_eq!(exact(&k2k1), (1, 0));
        assert_eq!(exact(&Graph::empty(0).unwrap()), (0, 0));
        assert_eq!(exact(&Graph::empty(1).unwrap()), (0, 0));
        assert_eq!(exact(&Graph::empty(5).unwrap()), (0, 0));
    }

    #[test]
    fn phi_of_coloring_examples() {
        // Complete graph: the unique coloring has discrepancy 0.
        let k4 = families::complete(4).unwrap();
        let (_, c) = chromatic_number(&k4);
        assert_eq!(phi_of_coloring(&k4, &c).unwrap().value, 0);

        // C9: every proper coloring has phi_c at least 2.
        let c9 = families::cycle(9).unwrap();
        let (_, opt) = chromatic_number(&c9);
        assert!(phi_of_coloring(&c9, &opt).unwrap().value >= 2);
        for seed in 0..10 {
            let c = Coloring::random_greedy(&c9, seed);
            assert!(phi_of_coloring(&c9, &c).unwrap().value >= 2);
        }

        // C4 under its 2-coloring: brute force over all 15 subsets gives 0.
        let c4 = families::cycle(4).unwrap();
        let two = Coloring::new(
            &c4,
            vec![VertexSet::from_iter([0, 2]), VertexSet::from_iter([1, 3])],
        )
        .unwrap();
        assert_eq!(phi_of_coloring(&c4, &two).unwrap().value, 0);
    }

    #[test]
    fn phi_hat_of_coloring_examples() {
        // K2 + K1 with the isolated vertex reusing a color.
        let g = families::complete(2)
            .unwrap()
            .disjoint_union(&families::complete(1).unwrap())
            .unwrap();
        let c = Coloring::new(
            &g,
            vec![VertexSet::from_iter([0, 2]), VertexSet::singleton(1)],
        )
        .unwrap();
        assert_eq!(phi_hat_of_coloring(&g, &c).unwrap().value, 0);

        // Paw: every proper coloring gives 1.
        let paw = families::paw();
        for c in crate::invariants::proper_partitions(&paw, false, None) {
            assert_eq!(phi_hat_of_coloring(&paw, &c).unwrap().value, 1);
        }

        // Star with distinctly colored leaves: the whole star has 4 colors
        // and chromatic number 2.
        let star = families::star(4).unwrap();
        let c = Coloring::new(
            &star,
            vec![
                VertexSet::singleton(0),
                VertexSet::singleton(1),
                VertexSet::singleton(2),
                VertexSet::singleton(3),
            ],
        )
        .unwrap();
        let w = phi_hat_of_coloring(&star, &c).unwrap();
        assert_eq!(w.value, 2);
        assert_eq!(w.subgraph, VertexSet::from_iter([0, 1, 2, 3]));
    }

    #[test]
    fn witness_ties_break_to_smallest_mask() {
        // C4 under its 2-coloring: all four transversals have chi 2, and
        // every singleton attains the connected maximum 0; the reported
        // subgraphs must be the numerically smallest masks.
        let c4 = families::cycle(4).unwrap();
        let two = Coloring::new(
            &c4,
            vec![VertexSet::from_iter([0, 2]), VertexSet::from_iter([1, 3])],
        )
        .unwrap();
        let w = phi_of_coloring(&c4, &two).unwrap();
        assert_eq!(w.subgraph, VertexSet::from_iter([0, 1]));
        let wh = phi_hat_of_coloring(&c4, &two).unwrap();
        assert_eq!(wh.subgraph, VertexSet::singleton(0));
    }

    #[test]
    fn coloring_validation_errors() {
        let p3 = families::path(3).unwrap();
        let c4 = families::cycle(4).unwrap();
        let (_, c) = chromatic_number(&c4);
        assert!(matches!(
            phi_of_coloring(&p3, &c),
            Err(SolverError::Invariant(_))
        ));
    }

    #[test]
    fn witnesses_revalidate() {
        for g in [
            families::cycle(9).unwrap(),
            families::paw(),
            families::tight_phi_family(3, 2).unwrap(),
            families::gr_gadget(4).unwrap(),
        ] {
            let b = SolverBudget::default();
            let w = phi_exact(&g, &b).unwrap();
            assert!(w.revalidate(&g));
            let wh = phi_hat_exact(&g, &b).unwrap();
            assert!(wh.revalidate(&g));
            assert!(g.is_connected_subset(wh.subgraph));
        }
    }

    #[test]
    fn disconnected_phi_hat_decomposes() {
        let k4 = families::complete(4).unwrap();
        let g = k4.disjoint_union(&k4).unwrap();
        let b = SolverBudget::default();
        let w = phi_hat_exact(&g, &b).unwrap();
        assert_eq!(w.value, 0);
        // phi stays 2 on the union: the disconnected counterexample.
        assert_eq!(phi_exact(&g, &b).unwrap().value, 2);
    }

    #[test]
    fn budget_errors() {
        let g = families::gt_gadget(4).unwrap();
        let tight = SolverBudget {
            max_vertices: 8,
            max_partitions: 1000,
        };
        assert!(matches!(
            phi_exact(&g, &tight),
            Err(SolverError::TooManyVertices { n: 16, max: 8 })
        ));
        let g = families::mycielski_k(4).unwrap();
        let tiny = SolverBudget {
            max_vertices: 16,
            max_partitions: 50,
        };
        assert!(matches!(
            phi_exact(&g, &tiny),
            Err(SolverError::PartitionBudget { max: 50 })
        ));
    }

    #[test]
    fn profile_of_gr_gadget() {
        let g = families::gr_gadget(4).unwrap();
        let p = optimal_coloring_profile(&g, &SolverBudget::default()).unwrap();
        assert_eq!(p.chi, 4);
        assert_eq!(p.colorings, 1); // the optimal coloring is unique
        assert_eq!(p.phi_c_min.value, 3);
        assert_eq!(p.phi_c_max.value, 3);
        assert_eq!(p.phi_hat_c_min.value, 2);
        assert_eq!(p.phi_hat_c_max.value, 2);
    }

    #[test]
    fn profile_of_complete_and_c5() {
        let p = optimal_coloring_profile(&families::complete(5).unwrap(), &SolverBudget::default())
            .unwrap();
        assert_eq!(
            (
                p.phi_c_min.value,
                p.phi_c_max.value,
                p.phi_hat_c_min.value,
                p.phi_hat_c_max.value
            ),
            (0, 0, 0, 0)
        );

        let p = optimal_coloring_profile(&families::cycle(5).unwrap(), &SolverBudget::default())
            .unwrap();
        assert_eq!(p.colorings, 5);
        assert_eq!(p.phi_c_min.value, 1);
    }

    #[test]
    fn witness_json_shape() {
        let g = families::paw();
        let w = phi_exact(&g, &SolverBudget::default()).unwrap();
        let json = serde_json::to_value(&w).unwrap();
        assert!(json.get("coloring").unwrap().is_array());
        assert!(json.get("subgraph").unwrap().is_array());
        assert_eq!(json.get("value").unwrap().as_i64().unwrap(), 1);
    }
}
