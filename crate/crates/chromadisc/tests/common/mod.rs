//! Independent oracles for the integration tests: a subset-DP chromatic
//! number, a recursive proper-partition enumerator, and the definitional
//! double brute force for both discrepancy parameters. Nothing here shares
//! code with the solver paths it checks.

use chromadisc::graph::{bit_pairs, Graph};

pub fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Every labeled graph on exactly `n` vertices, in edge-mask order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = bit_pairs(n);
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edge_list(n, &edges).expect("in range")
    })
}

fn is_independent(g: &Graph, s: u64) -> bool {
    let mut rest = s;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if g.adj(v) & s != 0 {
            return false;
        }
    }
    true
}

/// Chromatic number of every subset at once, by dynamic programming over
/// independent subsets: chi(S) is one more than the minimum over
/// independent subsets of S containing its lowest vertex.
pub fn oracle_chi_table(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut table = vec![0u8; 1usize << n];
    for s in 1..(1u64 << n) {
        let low = bit(s.trailing_zeros() as usize);
        let mut best = u8::MAX;
        let mut t = s;
        loop {
            if t & low != 0 && is_independent(g, t) {
                best = best.min(1 + table[(s & !t) as usize]);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & s;
        }
        table[s as usize] = best;
    }
    table
}

/// All proper partitions of V(g) into independent blocks, by plain
/// recursion: vertex v joins a compatible existing block or a fresh one.
pub fn oracle_partitions(g: &Graph) -> Vec<Vec<u64>> {
    fn rec(g: &Graph, v: usize, blocks: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if v == g.n() {
            out.push(blocks.clone());
            return;
        }
        for i in 0..blocks.len() {
            if blocks[i] & g.adj(v) == 0 {
                blocks[i] |= bit(v);
                rec(g, v + 1, blocks, out);
                blocks[i] &= !bit(v);
            }
        }
        blocks.push(bit(v));
        rec(g, v + 1, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    rec(g, 0, &mut Vec::new(), &mut out);
    out
}

pub fn colors_on(blocks: &[u64], s: u64) -> i64 {
    blocks.iter().filter(|&&b| b & s != 0).count() as i64
}

fn connected_mask(g: &Graph, s: u64) -> bool {
    if s == 0 {
        return true;
    }
    let mut comp = bit(s.trailing_zeros() as usize);
    loop {
        let mut grown = comp;
        let mut rest = comp;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grown |= g.adj(v) & s;
        }
        if grown == comp {
            return comp == s;
        }
        comp = grown;
    }
}

pub fn is_complete_partition(g: &Graph, blocks: &[u64]) -> bool {
    for (i, &bi) in blocks.iter().enumerate() {
        let mut nb = 0u64;
        let mut rest = bi;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            nb |= g.adj(v);
        }
        for &bj in &blocks[i + 1..] {
            if nb & bj == 0 {
                return false;
            }
        }
    }
    true
}

/// Connectivity of every subset, indexed by mask.
pub fn oracle_connectivity_table(g: &Graph) -> Vec<bool> {
    (0..(1u64 << g.n())).map(|s| connected_mask(g, s)).collect()
}

/// Maximum of colors-minus-chi over all nonempty subsets (connected ones
/// only when `connected` is set), straight from the definition.
#[allow(dead_code)] // not every test binary exercises it
pub fn oracle_discrepancy_of(g: &Graph, chi: &[u8], blocks: &[u64], connected: bool) -> i64 {
    let conn = oracle_connectivity_table(g);
    oracle_discrepancy_tabled(g, chi, &conn, blocks, connected)
}

fn oracle_discrepancy_tabled(
    g: &Graph,
    chi: &[u8],
    conn: &[bool],
    blocks: &[u64],
    connected: bool,
) -> i64 {
    let mut best = 0i64;
    for s in 1..(1u64 << g.n()) {
        if connected && !conn[s as usize] {
            continue;
        }
        best = best.max(colors_on(blocks, s) - chi[s as usize] as i64);
    }
    best
}

/// Definitional brute force over all proper partitions and all (connected)
/// induced subgraphs; no transversal shortcut, no completeness
/// restriction, no color cap.
pub fn oracle_phi(g: &Graph, connected: bool) -> i64 {
    let chi = oracle_chi_table(g);
    let conn = oracle_connectivity_table(g);
    oracle_partitions(g)
        .iter()
        .map(|blocks| oracle_discrepancy_tabled(g, &chi, &conn, blocks, connected))
        .min()
        .unwrap_or(0)
}

/// Same minimization restricted to complete colorings; used to confirm the
/// restriction never changes the value.
pub fn oracle_phi_complete_only(g: &Graph, connected: bool) -> i64 {
    let chi = oracle_chi_table(g);
    let conn = oracle_connectivity_table(g);
    oracle_partitions(g)
        .iter()
        .filter(|blocks| is_complete_partition(g, blocks))
        .map(|blocks| oracle_discrepancy_tabled(g, &chi, &conn, blocks, connected))
        .min()
        .unwrap_or(0)
}

/// The Petersen graph: outer cycle 0..5, inner pentagram 5..10, spokes.
#[allow(dead_code)] // not every test binary exercises it
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edge_list(10, &edges).expect("in range")
}
