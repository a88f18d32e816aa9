//! Every bound on the discrepancy parameters as an executable check:
//! compute the bound from exact invariants, compare against the exact
//! values, and report holds/slack per entry. All comparisons are exact
//! rational arithmetic; floats appear only in serialized output.

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::characterize::{
    complement_of_cluster_graph, has_no_induced_k1_plus_k2, is_bipartite, is_complete_multipartite,
    is_paw_free, is_perfect_small, phi_hat_zero_characterization,
};
use crate::discrepancy::{
    optimal_coloring_profile, phi_exact, phi_hat_exact, SolverBudget, SolverError, Witness,
};
use crate::graph::{bit, low_bits, Graph, VertexSet};
use crate::invariants::{
    achromatic_number, chromatic_number, clique_number, independence_number, is_triangle_free,
    local_chromatic_number, max_degree, Flags, ParamReport,
};
use crate::search::ChiCache;

type Rational = Ratio<i64>;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("diameter lemma requires a connected graph")]
    NotConnected,
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// Induced subgraphs are enumerated exhaustively for the subgraph-gap lower
/// bound only up to this many vertices; beyond it the whole-graph term is
/// used alone.
pub const SUBGRAPH_ENUM_CAP: usize = 12;

fn ser_ratio<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&r.to_f64()),
        None => s.serialize_none(),
    }
}

/// One checked inequality. `holds` is empty when the entry is not
/// applicable or the exact value needed for the comparison is missing;
/// `slack` is how far the exact value sits inside the bound.
#[derive(Debug, Clone, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub applicable: bool,
    #[serde(serialize_with = "ser_ratio")]
    pub bound_value: Option<Rational>,
    pub exact_value: Option<i64>,
    #[serde(serialize_with = "ser_ratio")]
    pub slack: Option<Rational>,
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundEntry {
    fn not_applicable(name: &'static str) -> Self {
        BoundEntry {
            name,
            applicable: false,
            bound_value: None,
            exact_value: None,
            slack: None,
            holds: None,
            note: None,
        }
    }

    /// exact <= bound.
    fn upper(name: &'static str, bound: Rational, exact: Option<i64>) -> Self {
        let holds = exact.map(|e| Rational::from_integer(e) <= bound);
        BoundEntry {
            name,
            applicable: true,
            bound_value: Some(bound),
            exact_value: exact,
            slack: exact.map(|e| bound - Rational::from_integer(e)),
            holds,
            note: None,
        }
    }

    /// exact >= bound.
    fn lower(name: &'static str, bound: Rational, exact: Option<i64>) -> Self {
        let holds = exact.map(|e| Rational::from_integer(e) >= bound);
        BoundEntry {
            name,
            applicable: true,
            bound_value: Some(bound),
            exact_value: exact,
            slack: exact.map(|e| Rational::from_integer(e) - bound),
            holds,
            note: None,
        }
    }

    /// A logical check with no numeric bound.
    fn check(name: &'static str, holds: bool) -> Self {
        BoundEntry {
            name,
            applicable: true,
            bound_value: None,
            exact_value: None,
            slack: None,
            holds: Some(holds),
            note: None,
        }
    }

    fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }
}

// ============================================================================
// Report computation
// ============================================================================

/// A [`ParamReport`] plus the discrepancy witnesses that certify its phi
/// and phi_hat fields.
#[derive(Debug, Clone, Serialize)]
pub struct ReportBundle {
    pub report: ParamReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_hat_witness: Option<Witness>,
    /// Set when the discrepancy solvers ran out of budget; the classical
    /// invariants are still filled in.
    pub budget_exceeded: bool,
}

/// Fills every classical invariant and flag; runs the discrepancy solvers
/// unless `skip_discrepancy`. Solver budget overruns leave phi and phi_hat
/// absent and set `budget_exceeded` instead of failing.
pub fn compute_report(
    g: &Graph,
    budget: &SolverBudget,
    skip_discrepancy: bool,
) -> Result<ReportBundle, SolverError> {
    let (chi, _) = chromatic_number(g);
    let psi = if g.n() == 0 {
        0
    } else {
        local_chromatic_number(g).expect("nonempty")
    };
    let report = ParamReport {
        n: g.n(),
        m: g.edge_count(),
        chi,
        omega: clique_number(g),
        alpha: independence_number(g),
        delta: max_degree(g),
        psi,
        achromatic: achromatic_number(g),
        phi: None,
        phi_hat: None,
        diameter: g.diameter(),
        flags: Flags {
            connected: g.is_connected(),
            triangle_free: is_triangle_free(g),
            paw_free: is_paw_free(g),
            complete_multipartite: is_complete_multipartite(g),
            perfect: is_perfect_small(g).ok(),
            bipartite: is_bipartite(g),
        },
    };
    let mut bundle = ReportBundle {
        report,
        phi_witness: None,
        phi_hat_witness: None,
        budget_exceeded: false,
    };
    if skip_discrepancy {
        return Ok(bundle);
    }
    match (phi_exact(g, budget), phi_hat_exact(g, budget)) {
        (Ok(pw), Ok(hw)) => {
            bundle.report.phi = Some(pw.value);
            bundle.report.phi_hat = Some(hw.value);
            bundle.phi_witness = Some(pw);
            bundle.phi_hat_witness = Some(hw);
        }
        (Err(SolverError::Invariant(e)), _) | (_, Err(SolverError::Invariant(e))) => {
            return Err(SolverError::Invariant(e));
        }
        _ => bundle.budget_exceeded = true,
    }
    let r = &bundle.report;
    debug_assert!(r.omega <= r.chi && r.chi <= r.delta + 1);
    debug_assert!(r.psi <= r.chi && r.chi <= r.achromatic);
    debug_assert!(r.alpha * r.chi >= r.n);
    debug_assert!(match (r.phi, r.phi_hat) {
        (Some(p), Some(ph)) => ph <= p,
        _ => true,
    });
    Ok(bundle)
}

// ============================================================================
// Individual bounds
// ============================================================================

/// The unconditional upper bounds on phi (and the one on phi_hat).
pub fn upper_bounds(r: &ParamReport) -> Vec<BoundEntry> {
    let mut out = Vec::new();
    let n = r.n as i64;
    let chi = r.chi as i64;
    let alpha = r.alpha as i64;

    out.push(if r.n >= 1 {
        BoundEntry::upper("phi_le_chi_minus_1", Rational::from_integer(chi - 1), r.phi)
    } else {
        BoundEntry::not_applicable("phi_le_chi_minus_1")
    });
    out.push(if r.m >= 1 {
        BoundEntry::upper(
            "phi_hat_le_chi_minus_2",
            Rational::from_integer(chi - 2),
            r.phi_hat,
        )
    } else {
        BoundEntry::not_applicable("phi_hat_le_chi_minus_2")
    });
    out.push(BoundEntry::upper(
        "phi_le_n_minus_chi",
        Rational::from_integer(n - chi),
        r.phi,
    ));
    out.push(if r.alpha >= 1 {
        BoundEntry::upper(
            "phi_le_chi_times_one_minus_inv_alpha",
            Rational::new(chi * (alpha - 1), alpha),
            r.phi,
        )
    } else {
        BoundEntry::not_applicable("phi_le_chi_times_one_minus_inv_alpha")
    });
    out.push(BoundEntry::upper(
        "phi_le_n_over_3",
        Rational::new(n, 3),
        r.phi,
    ));
    out
}

/// Largest value of (chi(H) - omega(H)) / 2 over induced subgraphs; all
/// subgraphs when the graph is small enough, the whole-graph term alone
/// beyond the cap.
pub fn subgraph_gap_lower_bound(g: &Graph) -> Rational {
    let full = low_bits(g.n());
    if g.n() > SUBGRAPH_ENUM_CAP {
        let gap = crate::search::chi_of_subset(g, full) as i64
            - crate::search::omega_of_subset(g, full) as i64;
        return Rational::new(gap.max(0), 2);
    }
    let mut best = 0i64;
    let mut cache = ChiCache::new(g);
    for s in 0..=full {
        let gap = cache.chi(s) as i64 - crate::search::omega_of_subset(g, s) as i64;
        best = best.max(gap);
    }
    Rational::new(best, 2)
}

/// The independent-transversal lower bound and its corollary, each flagged
/// not-applicable when its premise fails. The note records the intermediate
/// form with the alpha - 2*delta + 1 denominator for inspection.
pub fn haxell_lower_bound(r: &ParamReport) -> Vec<BoundEntry> {
    let n = r.n as i64;
    let chi = r.chi as i64;
    let alpha = r.alpha as i64;
    let delta = r.delta as i64;
    let mut out = Vec::new();

    if alpha >= 2 * delta && r.n >= 1 {
        let bound = Rational::new(n - (2 * delta - 1) * (chi - 1), alpha) - 1;
        let mut entry = BoundEntry::lower("phi_ge_haxell", bound, r.phi);
        if let Some(phi) = r.phi {
            let denom = alpha - 2 * delta + 1;
            if denom > 0 {
                let r_bound = Rational::new(n - (2 * delta - 1) * (chi + phi), denom);
                entry = entry.with_note(format!(
                    "intermediate color-class count bound r >= {r_bound} (denominator alpha - 2*delta + 1)"
                ));
            }
        }
        out.push(entry);
    } else {
        out.push(BoundEntry::not_applicable("phi_ge_haxell"));
    }

    // delta <= sqrt(n)/2 compared exactly as 4*delta^2 <= n.
    if alpha >= 2 * delta && 4 * delta * delta <= n && r.n >= 1 {
        let bound = Rational::new(n, 2 * alpha) - 1;
        out.push(BoundEntry::lower("phi_ge_haxell_corollary", bound, r.phi));
    } else {
        out.push(BoundEntry::not_applicable("phi_ge_haxell_corollary"));
    }
    out
}

/// psi - 2 lower-bounds the connected discrepancy on triangle-free graphs.
pub fn local_chromatic_lower_bound(r: &ParamReport) -> BoundEntry {
    if r.flags.triangle_free && r.n >= 1 {
        BoundEntry::lower(
            "phi_hat_ge_psi_minus_2",
            Rational::from_integer(r.psi as i64 - 2),
            r.phi_hat,
        )
    } else {
        BoundEntry::not_applicable("phi_hat_ge_psi_minus_2")
    }
}

/// Outcome of the diameter-lemma check for one `k`: whether every induced
/// subgraph on at most chi * diam vertices is k-colorable, and if so
/// whether the implied bound phi_hat >= chi - k holds.
#[derive(Debug, Clone, Serialize)]
pub struct DiameterLemmaReport {
    pub chi: usize,
    pub diameter: usize,
    pub k: usize,
    pub hypothesis_holds: bool,
    pub phi_hat: Option<i64>,
    pub bound_holds: Option<bool>,
}

const DIAMETER_LEMMA_SIZE_CAP: usize = 16;
const DIAMETER_LEMMA_VERTEX_CAP: usize = 20;

/// Verifies the hypothesis of the diameter lemma by enumeration, then
/// asserts its conclusion against the exact solver.
pub fn diameter_lemma_bound(
    g: &Graph,
    k: usize,
    budget: &SolverBudget,
) -> Result<DiameterLemmaReport, BoundsError> {
    let Some(diameter) = g.diameter() else {
        return Err(BoundsError::NotConnected);
    };
    let (chi, _) = chromatic_number(g);
    let cap = chi * diameter;
    if cap > DIAMETER_LEMMA_SIZE_CAP && g.n() > DIAMETER_LEMMA_SIZE_CAP {
        return Err(BoundsError::CapExceeded(format!(
            "chi * diam = {cap} exceeds the enumeration cap {DIAMETER_LEMMA_SIZE_CAP}"
        )));
    }
    if g.n() > DIAMETER_LEMMA_VERTEX_CAP {
        return Err(BoundsError::CapExceeded(format!(
            "{} vertices exceed the enumeration cap {DIAMETER_LEMMA_VERTEX_CAP}",
            g.n()
        )));
    }
    let mut cache = ChiCache::new(g);
    let mut hypothesis_holds = true;
    'scan: for s in 1..=low_bits(g.n()) {
        if (s.count_ones() as usize) <= cap && cache.chi(s) > k {
            hypothesis_holds = false;
            break 'scan;
        }
    }
    let mut report = DiameterLemmaReport {
        chi,
        diameter,
        k,
        hypothesis_holds,
        phi_hat: None,
        bound_holds: None,
    };
    if hypothesis_holds {
        let phi_hat = phi_hat_exact(g, budget)?.value;
        report.phi_hat = Some(phi_hat);
        report.bound_holds = Some(phi_hat >= chi as i64 - k as i64);
    }
    Ok(report)
}

fn greedy_independent_set(g: &Graph, order: &[usize]) -> u64 {
    let mut is = 0u64;
    for &v in order {
        if g.adj(v) & is == 0 {
            is |= bit(v);
        }
    }
    is
}

/// The connected-gap bound phi <= phi_hat + alpha - 1, plus the vertex
/// deletion property phi(G) <= phi(G minus I) + 1 checked for one greedy
/// maximal independent set and twenty seeded random ones.
pub fn gap_bounds(
    g: &Graph,
    r: &ParamReport,
    budget: &SolverBudget,
) -> Result<Vec<BoundEntry>, SolverError> {
    let mut out = Vec::new();
    match r.phi_hat {
        Some(ph) if r.flags.connected && r.n >= 1 => {
            out.push(BoundEntry::upper(
                "phi_le_phi_hat_plus_alpha_minus_1",
                Rational::from_integer(ph + r.alpha as i64 - 1),
                r.phi,
            ));
        }
        _ => out.push(BoundEntry::not_applicable(
            "phi_le_phi_hat_plus_alpha_minus_1",
        )),
    }

    let Some(phi) = r.phi else {
        out.push(BoundEntry::not_applicable("phi_deletion_lemma"));
        return Ok(out);
    };
    if r.n == 0 {
        out.push(BoundEntry::not_applicable("phi_deletion_lemma"));
        return Ok(out);
    }

    let lex: Vec<usize> = (0..g.n()).collect();
    let mut sets = vec![greedy_independent_set(g, &lex)];
    for seed in 0..20u64 {
        let mut order = lex.clone();
        crate::rng::shuffle(&mut order, &mut crate::rng::SplitMix64::new(seed));
        sets.push(greedy_independent_set(g, &order));
    }
    sets.sort_unstable();
    sets.dedup();
    let mut checked = 0;
    let mut all_hold = true;
    for is in &sets {
        let rest = VertexSet(low_bits(g.n()) & !is);
        let (h, _) = g.induced_subgraph(rest).expect("subset of V");
        let phi_h = phi_exact(&h, budget)?.value;
        checked += 1;
        if phi > phi_h + 1 {
            all_hold = false;
        }
    }
    out.push(
        BoundEntry::check("phi_deletion_lemma", all_hold)
            .with_note(format!("{checked} distinct independent sets checked")),
    );
    Ok(out)
}

// ============================================================================
// verify_all
// ============================================================================

/// Per-graph verification record: the filled report plus one entry per
/// checked bound or structural agreement.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub report: ParamReport,
    pub entries: Vec<BoundEntry>,
    pub all_hold: bool,
}

impl BoundReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.holds == Some(false))
    }
}

/// Runs every bound and structural cross-check against exact values.
/// Fails with the solver error when the graph is over budget.
pub fn verify_all(g: &Graph, budget: &SolverBudget) -> Result<BoundReport, SolverError> {
    let bundle = compute_report(g, budget, false)?;
    if bundle.budget_exceeded {
        // Without exact phi and phi_hat there is nothing to verify against.
        return Err(SolverError::PartitionBudget {
            max: budget.max_partitions,
        });
    }
    let r = &bundle.report;
    let phi_w = bundle.phi_witness.as_ref().expect("solved");
    let hat_w = bundle.phi_hat_witness.as_ref().expect("solved");

    let mut entries = upper_bounds(r);
    entries.push(BoundEntry::lower(
        "phi_ge_subgraph_gap",
        subgraph_gap_lower_bound(g),
        r.phi,
    ));
    entries.extend(haxell_lower_bound(r));
    entries.push(local_chromatic_lower_bound(r));
    entries.extend(gap_bounds(g, r, budget)?);

    entries.push(BoundEntry::upper(
        "phi_hat_le_phi",
        Rational::from_integer(r.phi.unwrap()),
        r.phi_hat,
    ));
    entries.push(BoundEntry::check(
        "phi_zero_iff_complete_multipartite",
        (r.phi == Some(0)) == r.flags.complete_multipartite,
    ));
    entries.push(BoundEntry::check(
        "phi_hat_zero_iff_components_bipartite_or_multipartite",
        (r.phi_hat == Some(0)) == phi_hat_zero_characterization(g),
    ));
    entries.push(match r.flags.perfect {
        Some(perfect) => BoundEntry::check(
            "phi_hat_zero_iff_paw_free_and_perfect",
            (r.phi_hat == Some(0)) == (r.flags.paw_free && perfect),
        ),
        None => BoundEntry::not_applicable("phi_hat_zero_iff_paw_free_and_perfect"),
    });
    entries.push(BoundEntry::check(
        "complete_multipartite_routes_agree",
        complement_of_cluster_graph(g) == has_no_induced_k1_plus_k2(g),
    ));
    entries.push(BoundEntry::check(
        "witness_colorings_within_achromatic",
        phi_w.coloring.block_count() <= r.achromatic
            && hat_w.coloring.block_count() <= r.achromatic,
    ));
    entries.push(BoundEntry::check(
        "witnesses_revalidate",
        phi_w.revalidate(g) && hat_w.revalidate(g) && g.is_connected_subset(hat_w.subgraph),
    ));

    // Profile over optimal colorings: both minima sit at or above the true
    // minima over all colorings, the maxima respect the color-count cap,
    // and the connected value never exceeds the unrestricted one.
    match optimal_coloring_profile(g, budget) {
        Ok(p) => {
            let phi = r.phi.unwrap();
            let phi_hat = r.phi_hat.unwrap();
            let consistent = p.phi_c_min.value >= phi
                && p.phi_hat_c_min.value >= phi_hat
                && p.phi_hat_c_max.value <= p.phi_c_max.value
                && (r.n == 0 || p.phi_c_max.value < r.chi as i64);
            entries.push(BoundEntry::check("optimal_profile_consistent", consistent).with_note(
                format!(
                    "over {} optimal colorings: phi_c in [{}, {}], phi_hat_c in [{}, {}]; exact ({}, {})",
                    p.colorings,
                    p.phi_c_min.value,
                    p.phi_c_max.value,
                    p.phi_hat_c_min.value,
                    p.phi_hat_c_max.value,
                    phi,
                    phi_hat,
                ),
            ));
        }
        Err(e) => entries.push(
            BoundEntry::not_applicable("optimal_profile_consistent")
                .with_note(format!("profile skipped: {e}")),
        ),
    }

    let all_hold = entries.iter().all(|e| e.holds != Some(false));
    Ok(BoundReport {
        report: bundle.report,
        entries,
        all_hold,
    })
}

/// Flattens a bound report into CSV rows, one per entry.
pub fn csv_rows(graph_id: &str, report: &BoundReport) -> Vec<String> {
    report
        .entries
        .iter()
        .map(|e| {
            format!(
                "{},{},{},{},{},{},{}",
                graph_id,
                e.name,
                e.applicable,
                e.bound_value
                    .map(|r| r.to_f64().unwrap().to_string())
                    .unwrap_or_default(),
                e.exact_value.map(|v| v.to_string()).unwrap_or_default(),
                e.slack
                    .map(|r| r.to_f64().unwrap().to_string())
                    .unwrap_or_default(),
                e.holds.map(|h| h.to_string()).unwrap_or_default(),
            )
        })
        .collect()
}

pub const CSV_HEADER: &str = "graph,bound,applicable,bound_value,exact_value,slack,holds";

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn verified(g: &Graph) -> BoundReport {
        verify_all(g, &SolverBudget::default()).unwrap()
    }

    #[test]
    fn complete_graph_bounds_hold_with_slack() {
        let rep = verified(&families::complete(6).unwrap());
        assert!(rep.all_hold);
        let e = rep
            .entries
            .iter()
            .find(|e| e.name == "phi_le_chi_minus_1")
            .unwrap();
        assert_eq!(e.exact_value, Some(0));
        assert_eq!(e.slack, Some(Rational::from_integer(5)));
    }

    #[test]
    fn n_over_3_tight_for_k2_union_k4() {
        let g = families::complete(2)
            .unwrap()
            .disjoint_union(&families::complete(4).unwrap())
            .unwrap();
        let rep = verified(&g);
        assert!(rep.all_hold);
        assert_eq!(rep.report.phi, Some(2));
        let e = rep
            .entries
            .iter()
            .find(|e| e.name == "phi_le_n_over_3")
            .unwrap();
        assert_eq!(e.slack, Some(Rational::from_integer(0)));
    }

    #[test]
    fn chi_minus_1_tight_for_c9() {
        let rep = verified(&families::cycle(9).unwrap());
        assert!(rep.all_hold);
        assert_eq!(rep.report.phi, Some(2));
        let e = rep
            .entries
            .iter()
            .find(|e| e.name == "phi_le_chi_minus_1")
            .unwrap();
        assert_eq!(e.bound_value, Some(Rational::from_integer(2)));
        assert_eq!(e.slack, Some(Rational::from_integer(0)));
    }

    #[test]
    fn subgraph_gap_values() {
        // Triangle-free with chi 4: gap (4 - 2) / 2 = 1.
        let m4 = families::mycielski_k(4).unwrap();
        assert_eq!(subgraph_gap_lower_bound(&m4), Rational::from_integer(1));
        assert_eq!(
            subgraph_gap_lower_bound(&families::complete(7).unwrap()),
            Rational::from_integer(0)
        );
        assert_eq!(
            subgraph_gap_lower_bound(&families::cycle(5).unwrap()),
            Rational::new(1, 2)
        );
    }

    #[test]
    fn haxell_on_edgeless_and_star() {
        let rep = verified(&Graph::empty(8).unwrap());
        assert!(rep.all_hold);
        let e = rep
            .entries
            .iter()
            .find(|e| e.name == "phi_ge_haxell")
            .unwrap();
        assert!(e.applicable);
        // (8 - (-1) * 0) / 8 - 1 = 0.
        assert_eq!(e.bound_value, Some(Rational::from_integer(0)));
        assert_eq!(e.holds, Some(true));

        let rep = verified(&families::star(4).unwrap());
        let e = rep
            .entries
            .iter()
            .find(|e| e.name == "phi_ge_haxell")
            .unwrap();
        assert!(!e.applicable, "alpha = 3 < 6 = 2 * delta");
    }

    #[test]
    fn psi_bound_on_mycielski_and_c5() {
        let rep = verified(&families::mycielski_k(4).unwrap());
        let e = rep
            .entries
            .iter()
            .find(|e| e.name == "phi_hat_ge_psi_minus_2")
            .unwrap();
        assert_eq!(e.bound_value, Some(Rational::from_integer(2)));
        assert_eq!(e.exact_value, Some(2));
        assert_eq!(e.holds, Some(true));

        let rep = verified(&families::cycle(5).unwrap());
        let e = rep
            .entries
            .iter()
            .find(|e| e.name == "phi_hat_ge_psi_minus_2")
            .unwrap();
        assert_eq!(e.bound_value, Some(Rational::from_integer(1)));
        assert_eq!(e.holds, Some(true));

        let rep = verified(&families::complete(4).unwrap());
        let e = rep
            .entries
            .iter()
            .find(|e| e.name == "phi_hat_ge_psi_minus_2")
            .unwrap();
        assert!(!e.applicable);
    }

    #[test]
    fn gap_bound_connected_vs_disconnected() {
        let rep = verified(&families::gt_gadget(3).unwrap());
        let e = rep
            .entries
            .iter()
            .find(|e| e.name == "phi_le_phi_hat_plus_alpha_minus_1")
            .unwrap();
        assert!(e.applicable);
        assert_eq!(e.holds, Some(true));

        // K4 + K4: the bound does not apply to disconnected graphs; the
        // exact values show why it must not.
        let k4 = families::complete(4).unwrap();
        let rep = verified(&k4.disjoint_union(&k4).unwrap());
        assert!(rep.all_hold);
        assert_eq!(rep.report.phi, Some(2));
        assert_eq!(rep.report.phi_hat, Some(0));
        assert_eq!(rep.report.alpha, 2);
        let e = rep
            .entries
            .iter()
            .find(|e| e.name == "phi_le_phi_hat_plus_alpha_minus_1")
            .unwrap();
        assert!(!e.applicable);
        // phi > phi_hat + alpha - 1 = 1 here.
    }

    #[test]
    fn deletion_lemma_on_complete_graphs() {
        let rep = verified(&families::complete(6).unwrap());
        let e = rep
            .entries
            .iter()
            .find(|e| e.name == "phi_deletion_lemma")
            .unwrap();
        assert_eq!(e.holds, Some(true));
    }

    #[test]
    fn diameter_lemma_cases() {
        let b = SolverBudget::default();
        // K_n with k = n: hypothesis vacuously holds, bound phi_hat >= 0.
        let k5 = families::complete(5).unwrap();
        let rep = diameter_lemma_bound(&k5, 5, &b).unwrap();
        assert!(rep.hypothesis_holds);
        assert_eq!(rep.bound_holds, Some(true));

        // C5 with k = 3: every subgraph is 3-colorable.
        let c5 = families::cycle(5).unwrap();
        let rep = diameter_lemma_bound(&c5, 3, &b).unwrap();
        assert!(rep.hypothesis_holds);
        assert_eq!(rep.bound_holds, Some(true));

        // C9 with k = 2: C9 itself has chi = 3 within the size cap.
        let c9 = families::cycle(9).unwrap();
        let rep = diameter_lemma_bound(&c9, 2, &b).unwrap();
        assert!(!rep.hypothesis_holds);

        let disconnected = families::complete(2)
            .unwrap()
            .disjoint_union(&families::complete(2).unwrap())
            .unwrap();
        assert!(matches!(
            diameter_lemma_bound(&disconnected, 2, &b),
            Err(BoundsError::NotConnected)
        ));
    }

    #[test]
    fn report_fields_and_json_shape() {
        let bundle = compute_report(
            &families::cycle(9).unwrap(),
            &SolverBudget::default(),
            false,
        )
        .unwrap();
        let r = &bundle.report;
        assert_eq!(
            (r.n, r.m, r.chi, r.omega, r.alpha, r.delta),
            (9, 9, 3, 2, 4, 2)
        );
        assert_eq!(r.phi, Some(2));
        assert_eq!(r.phi_hat, Some(1));
        assert_eq!(r.diameter, Some(4));
        let json = serde_json::to_value(r).unwrap();
        for key in [
            "n",
            "m",
            "chi",
            "omega",
            "alpha",
            "delta",
            "psi",
            "achromatic",
            "phi",
            "phi_hat",
            "diameter",
            "flags",
        ] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        assert_eq!(json["flags"]["connected"], serde_json::Value::Bool(true));
    }

    #[test]
    fn skip_discrepancy_leaves_phi_absent() {
        let bundle =
            compute_report(&families::cycle(9).unwrap(), &SolverBudget::default(), true).unwrap();
        assert_eq!(bundle.report.phi, None);
        let json = serde_json::to_value(&bundle.report).unwrap();
        assert!(json.get("phi").is_none());
        assert!(json.get("diameter").is_some());
    }

    #[test]
    fn mycielski_sweep_all_bounds_hold() {
        for k in 2..=3 {
            let rep = verified(&families::mycielski_k(k).unwrap());
            assert!(
                rep.all_hold,
                "M_{k}: {:?}",
                rep.violations().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn csv_rows_shape() {
        let rep = verified(&families::paw());
        let rows = csv_rows("paw", &rep);
        assert_eq!(rows.len(), rep.entries.len());
        assert!(rows[0].starts_with("paw,"));
        assert_eq!(rows[0].split(',').count(), 7);
    }
}
