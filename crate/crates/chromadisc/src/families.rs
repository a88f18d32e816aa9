//! Deterministic constructors for the graph families used throughout the
//! toolkit. Every constructor has a fixed vertex layout, documented per
//! function, so witnesses in golden tests are stable.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("{family}: parameter out of range: {reason}")]
    ParameterRange {
        family: &'static str,
        reason: String,
    },
    #[error("input graph must be connected")]
    Disconnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown family spec {0:?}")]
    UnknownSpec(String),
}

fn range_err(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::ParameterRange {
        family,
        reason: reason.into(),
    }
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    let edges: Vec<_> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn empty(n: usize) -> Result<Graph, FamilyError> {
    Ok(Graph::empty(n)?)
}

/// Cycle 0-1-...-(n-1)-0.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::CycleTooSmall(n));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Path 0-1-...-(n-1).
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Star on `n` vertices: center 0 adjacent to 1..n-1.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(range_err("star", "needs at least the center vertex"));
    }
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Triangle 0-1-2 plus the pendant edge 2-3.
pub fn paw() -> Graph {
    Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap()
}

/// Mycielskian of `g`: original vertices 0..n, shadow vertices n..2n
/// (shadow `n+i` mirrors `i`), apex `2n` last. Edges: those of `g`; apex to
/// every shadow; and for each edge (i, j) of `g` the pair (i, n+j), (j, n+i).
pub fn mycielski(g: &Graph) -> Result<Graph, FamilyError> {
    let n = g.n();
    let nn = 2 * n + 1;
    if nn > MAX_VERTICES {
        return Err(range_err(
            "mycielski",
            format!("result would have {nn} vertices"),
        ));
    }
    let mut edges = g.edges();
    for (i, j) in g.edges() {
        edges.push((i, n + j));
        edges.push((j, n + i));
    }
    for i in 0..n {
        edges.push((2 * n, n + i));
    }
    Ok(Graph::from_edge_list(nn, &edges)?)
}

/// The Mycielski sequence member M_k: M_2 = K_2 and M_k = M(M_{k-1}).
/// M_k has 3 * 2^(k-2) - 1 vertices, so k <= 6 fits in 64.
pub fn mycielski_k(k: usize) -> Result<Graph, FamilyError> {
    if k < 2 {
        return Err(range_err("mycielski_k", "order starts at 2"));
    }
    let mut g = complete(2)?;
    for _ in 2..k {
        g = mycielski(&g)?;
    }
    Ok(g)
}

/// Disjoint union of K_c (vertices 0..c) and p copies of K_p. Expected
/// chi = c and phi = p for 0 <= p <= c-1.
pub fn tight_phi_family(c: usize, p: usize) -> Result<Graph, FamilyError> {
    if c < 1 {
        return Err(range_err("tight_phi_family", "c must be at least 1"));
    }
    if p + 1 > c {
        return Err(range_err("tight_phi_family", "requires p <= c - 1"));
    }
    if c + p * p > MAX_VERTICES {
        return Err(range_err(
            "tight_phi_family",
            format!("{} vertices", c + p * p),
        ));
    }
    let mut g = complete(c)?;
    let kp = complete(p)?;
    for _ in 0..p {
        g = g.disjoint_union(&kp)?;
    }
    Ok(g)
}

/// Join of K_{c-(p+1)} (vertices first) with p+1 copies of K_{p+1}.
/// Expected chi = c and phi_hat = p for 0 <= p <= c-2.
pub fn tight_phi_hat_family(c: usize, p: usize) -> Result<Graph, FamilyError> {
    if c < 2 {
        return Err(range_err("tight_phi_hat_family", "c must be at least 2"));
    }
    if p + 2 > c {
        return Err(range_err("tight_phi_hat_family", "requires p <= c - 2"));
    }
    let a = c - (p + 1);
    let total = a + (p + 1) * (p + 1);
    if total > MAX_VERTICES {
        return Err(range_err(
            "tight_phi_hat_family",
            format!("{total} vertices"),
        ));
    }
    let kpp = complete(p + 1)?;
    let mut copies = kpp.clone();
    for _ in 1..(p + 1) {
        copies = copies.disjoint_union(&kpp)?;
    }
    Ok(complete(a)?.join(&copies)?)
}

/// Hub clique K_t on vertices 0..t; branch i is a K_{t-1} on vertices
/// t + i(t-1) .. t + (i+1)(t-1), fully joined to hub vertex i. Total t^2
/// vertices, chromatic number t.
pub fn gt_gadget(t: usize) -> Result<Graph, FamilyError> {
    if t < 2 {
        return Err(range_err("gt_gadget", "t must be at least 2"));
    }
    if t * t > MAX_VERTICES {
        return Err(range_err("gt_gadget", format!("{} vertices", t * t)));
    }
    let mut edges: Vec<_> = (0..t).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    for i in 0..t {
        let base = t + i * (t - 1);
        for a in 0..t - 1 {
            edges.push((i, base + a));
            for b in 0..a {
                edges.push((base + b, base + a));
            }
        }
    }
    Ok(Graph::from_edge_list(t * t, &edges)?)
}

/// Clique K_r on vertices 0..r plus an independent set r..2r; independent
/// vertex r+i is adjacent to every clique vertex except i.
pub fn gr_gadget(r: usize) -> Result<Graph, FamilyError> {
    if r < 4 {
        return Err(range_err("gr_gadget", "r must be at least 4"));
    }
    if 2 * r > MAX_VERTICES {
        return Err(range_err("gr_gadget", format!("{} vertices", 2 * r)));
    }
    let mut edges: Vec<_> = (0..r).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    for i in 0..r {
        for j in 0..r {
            if j != i {
                edges.push((r + i, j));
            }
        }
    }
    Ok(Graph::from_edge_list(2 * r, &edges)?)
}

/// Hardness-reduction gadget: a copy of `g` (vertices 0..n) plus K_{2n}
/// (vertices n..3n), with g-vertex i adjacent to clique vertices n+2i and
/// n+2i+1. Every clique vertex then has exactly one neighbor in `g`.
pub fn nphard_gadget(g: &Graph) -> Result<Graph, FamilyError> {
    let n = g.n();
    if n < 2 {
        return Err(range_err(
            "nphard_gadget",
            "base graph needs at least 2 vertices",
        ));
    }
    if !g.is_connected() {
        return Err(FamilyError::Disconnected);
    }
    if 3 * n > MAX_VERTICES {
        return Err(range_err("nphard_gadget", format!("{} vertices", 3 * n)));
    }
    let mut edges = g.edges();
    for j in 0..2 * n {
        for i in 0..j {
            edges.push((n + i, n + j));
        }
    }
    for i in 0..n {
        edges.push((i, n + 2 * i));
        edges.push((i, n + 2 * i + 1));
    }
    Ok(Graph::from_edge_list(3 * n, &edges)?)
}

/// Erdos-Renyi G(n, p) from a counter-based SplitMix64 generator: the edge
/// (i, j) with i < j is present iff output `seed`-stream value at the
/// pair's triangular index maps below `p`. Sampling is per-pair, so the
/// result is independent of evaluation order and identical on every
/// platform for the same (n, p, seed).
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    if n > MAX_VERTICES {
        return Err(range_err("gnp", format!("{n} vertices")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(range_err("gnp", format!("probability {p} outside [0, 1]")));
    }
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            let idx = (j * (j - 1) / 2 + i) as u64;
            let u = (crate::rng::at_index(seed, idx) >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            if u < p {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Builds a graph from a flat family spec like `cycle:9`, `tight-phi:4,2`
/// or `nphard:path:3`. This is the grammar the CLI exposes.
pub fn from_spec(spec: &str) -> Result<Graph, FamilyError> {
    let (name, rest) = match spec.split_once(':') {
        Some((n, r)) => (n.trim(), Some(r.trim())),
        None => (spec.trim(), None),
    };
    let args = |expect: usize| -> Result<Vec<usize>, FamilyError> {
        let raw = rest.ok_or_else(|| FamilyError::UnknownSpec(spec.into()))?;
        let parts: Vec<&str> = raw.split(',').map(str::trim).collect();
        if parts.len() != expect {
            return Err(range_err(
                "spec",
                format!("{name} expects {expect} parameter(s)"),
            ));
        }
        parts
            .iter()
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| range_err("spec", format!("bad number {s:?}")))
            })
            .collect()
    };
    match name {
        "complete" => complete(args(1)?[0]),
        "empty" => empty(args(1)?[0]),
        "cycle" => cycle(args(1)?[0]),
        "path" => path(args(1)?[0]),
        "star" => star(args(1)?[0]),
        "paw" => Ok(paw()),
        "mycielski" => mycielski_k(args(1)?[0]),
        "tight-phi" => {
            let a = args(2)?;
            tight_phi_family(a[0], a[1])
        }
        "tight-phi-hat" => {
            let a = args(2)?;
            tight_phi_hat_family(a[0], a[1])
        }
        "gt" => gt_gadget(args(1)?[0]),
        "gr" => gr_gadget(args(1)?[0]),
        "nphard" => {
            let inner = rest.ok_or_else(|| FamilyError::UnknownSpec(spec.into()))?;
            nphard_gadget(&from_spec(inner)?)
        }
        "gnp" => {
            let raw = rest.ok_or_else(|| FamilyError::UnknownSpec(spec.into()))?;
            let parts: Vec<&str> = raw.split(',').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(range_err("spec", "gnp expects n,p,seed"));
            }
            let n = parts[0].parse().map_err(|_| range_err("spec", "bad n"))?;
            let p = parts[1].parse().map_err(|_| range_err("spec", "bad p"))?;
            let seed = parts[2]
                .parse()
                .map_err(|_| range_err("spec", "bad seed"))?;
            gnp(n, p, seed)
        }
        _ => Err(FamilyError::UnknownSpec(spec.into())),
    }
}
