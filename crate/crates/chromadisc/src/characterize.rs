//! Polynomial-time recognizers behind the zero-discrepancy
//! characterizations: complete multipartite graphs, paw-free graphs,
//! bipartite graphs, and a desk-scale perfectness check used for
//! cross-validation.

use thiserror::Error;

use crate::graph::{bit, low_bits, Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharacterizeError {
    #[error("perfectness check capped at {cap} vertices, graph has {n}")]
    PerfectCapExceeded { n: usize, cap: usize },
}

pub const DEFAULT_PERFECT_CAP: usize = 12;

/// True iff the complement of `g` is a disjoint union of cliques
/// (equivalently, `g` has no induced K1 plus K2). Both routes are
/// implemented; this one runs the complement route and cross-checks the
/// induced-subgraph route in debug builds.
pub fn is_complete_multipartite(g: &Graph) -> bool {
    let result = complement_of_cluster_graph(g);
    debug_assert_eq!(result, has_no_induced_k1_plus_k2(g));
    result
}

/// Complement route: every component of the complement must be a clique.
pub(crate) fn complement_of_cluster_graph(g: &Graph) -> bool {
    let co = g.complement();
    co.components().into_iter().all(|comp| {
        comp.iter()
            .all(|v| (co.adj(v) & comp.bits()).count_ones() as usize == comp.len() - 1)
    })
}

/// Forbidden-subgraph route: no edge (u, v) together with a vertex w
/// adjacent to neither endpoint.
pub(crate) fn has_no_induced_k1_plus_k2(g: &Graph) -> bool {
    let all = low_bits(g.n());
    for u in 0..g.n() {
        for v in VertexSet(g.adj(u) & !low_bits(u + 1)).iter() {
            if !g.adj(u) & !g.adj(v) & all & !bit(u) & !bit(v) != 0 {
                return false;
            }
        }
    }
    true
}

/// True iff no 4 vertices induce the paw (triangle plus a pendant edge).
pub fn is_paw_free(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let s = bit(a) | bit(b) | bit(c) | bit(d);
                    if induces_paw(g, s) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The paw has degree sequence (1, 2, 2, 3) and 4 edges among its 4
/// vertices, and that pair pins it down uniquely.
fn induces_paw(g: &Graph, s: u64) -> bool {
    let mut degs = [0usize; 4];
    let mut i = 0;
    let mut edges = 0;
    let mut rest = s;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (g.adj(v) & s).count_ones() as usize;
        degs[i] = d;
        edges += d;
        i += 1;
    }
    degs.sort_unstable();
    edges == 8 && degs == [1, 2, 2, 3]
}

/// Two-colorability, component by component.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut color = vec![2u8; g.n()];
    for comp in g.components() {
        let start = comp.min_vertex().unwrap();
        color[start] = 0;
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for u in g.neighbors(v).iter() {
                if color[u] == 2 {
                    color[u] = 1 - color[v];
                    frontier.push(u);
                } else if color[u] == color[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether some subset of `g` induces an odd cycle of length at least 5:
/// a connected set of odd size >= 5 whose vertices all have exactly two
/// neighbors inside the set.
fn has_odd_hole(g: &Graph) -> bool {
    let n = g.n();
    if n < 5 {
        return false;
    }
    for s in 1u64..(1 << n) {
        let size = s.count_ones() as usize;
        if size < 5 || size.is_multiple_of(2) {
            continue;
        }
        let mut all_deg2 = true;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (g.adj(v) & s).count_ones() != 2 {
                all_deg2 = false;
                break;
            }
        }
        if all_deg2 && g.is_connected_subset(VertexSet(s)) {
            return true;
        }
    }
    false
}

/// Perfectness by direct search for induced odd holes in the graph and its
/// complement, valid by the strong perfect graph theorem. Exponential scan,
/// hence the vertex cap; it exists only to cross-validate the polynomial
/// recognizers at desk scale.
pub fn is_perfect_small(g: &Graph) -> Result<bool, CharacterizeError> {
    is_perfect_small_with_cap(g, DEFAULT_PERFECT_CAP)
}

pub fn is_perfect_small_with_cap(g: &Graph, cap: usize) -> Result<bool, CharacterizeError> {
    if g.n() > cap {
        return Err(CharacterizeError::PerfectCapExceeded { n: g.n(), cap });
    }
    Ok(!has_odd_hole(g) && !has_odd_hole(&g.complement()))
}

/// The zero characterization for the connected discrepancy, applied
/// verbatim: every component is bipartite or complete multipartite.
pub fn phi_hat_zero_characterization(g: &Graph) -> bool {
    g.components().into_iter().all(|comp| {
        let (sub, _) = g.induced_subgraph(comp).expect("component is in range");
        is_bipartite(&sub) || is_complete_multipartite(&sub)
    })
}
