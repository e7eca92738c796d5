//! Cost-error regime map: within-family Pareto frontiers under simultaneous
//! minimization of output error and expected cost. Dominance is only ever
//! evaluated inside a (family, cost unit, error definition) group; values in
//! different native units are never compared.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::record_store::{rules, Diagnostic, Family, ProtocolRecord, Severity};
use crate::reconstruct::fill_record;

/// One plottable record with its frontier flag.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontierPoint {
    pub record_id: String,
    pub family: Family,
    pub epsilon_out: f64,
    pub v_expected: f64,
    pub cost_unit: String,
    pub on_frontier: bool,
}

/// Flag the non-dominated points of a set under simultaneous minimization.
///
/// Flag i is true iff no j has `x_j <= x_i` and `y_j <= y_i` with at least
/// one strict inequality; identical points are all on the frontier. Runs in
/// O(n log n) by sweeping x groups in ascending order and tracking the best
/// y seen at strictly smaller x.
///
/// Coordinates must be finite; they may be negative, so flags are invariant
/// under monotone transforms such as log-scaling an axis.
pub fn pareto_frontier(points: &[(f64, f64)]) -> Result<Vec<bool>, Error> {
    if points.is_empty() {
        return Err(Error::invalid("point list must be non-empty"));
    }
    for (i, &(x, y)) in points.iter().enumerate() {
        if !(x.is_finite() && y.is_finite()) {
            return Err(Error::invalid(format!(
                "point {i} has a non-finite coordinate ({x}, {y})"
            )));
        }
    }

    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| {
        points[a]
            .0
            .total_cmp(&points[b].0)
            .then(points[a].1.total_cmp(&points[b].1))
    });

    let mut flags = vec![false; points.len()];
    // Minimum y over all points with strictly smaller x than the current group.
    let mut best_left = f64::INFINITY;
    let mut i = 0;
    while i < order.len() {
        let x = points[order[i]].0;
        let mut j = i;
        while j < order.len() && points[order[j]].0 == x {
            j += 1;
        }
        // Group is y-sorted, so its first element holds the minimum.
        let group_min = points[order[i]].1;
        if group_min < best_left {
            for &k in &order[i..j] {
                flags[k] = points[k].1 == group_min;
            }
        }
        best_left = best_left.min(group_min);
        i = j;
    }
    Ok(flags)
}

type GroupKey = (Family, Option<String>, Option<String>);

/// Extract the plottable (epsilon_out, v_expected) points of a record list,
/// reconstructing v_expected where the yield relation allows, and report a
/// warning for every skipped record.
fn usable_points(
    records: &[ProtocolRecord],
) -> (Vec<FrontierPoint>, Vec<Diagnostic>, BTreeMap<GroupKey, Vec<usize>>) {
    let mut points = Vec::new();
    let mut diagnostics = Vec::new();
    let mut groups: BTreeMap<GroupKey, Vec<usize>> = BTreeMap::new();

    for r in records {
        let filled = fill_record(r);
        let usable = |v: Option<f64>| v.filter(|x| x.is_finite() && *x > 0.0);
        let eps = usable(filled.epsilon_out);
        let ve = usable(filled.v_expected);
        let (Some(eps), Some(ve)) = (eps, ve) else {
            let mut missing = Vec::new();
            if eps.is_none() {
                missing.push("epsilon_out");
            }
            if ve.is_none() {
                missing.push("v_expected");
            }
            diagnostics.push(Diagnostic {
                severity: Severity::Warning,
                record_id: filled.id.clone(),
                field: missing[0].to_string(),
                rule: rules::MAP_SKIPPED.to_string(),
                message: format!(
                    "skipped by the regime map: {} absent or unusable",
                    missing.join(" and ")
                ),
            });
            continue;
        };
        let key = (filled.family, filled.cost_unit.clone(), filled.epsilon_def.clone());
        groups.entry(key).or_default().push(points.len());
        points.push(FrontierPoint {
            record_id: filled.id.clone(),
            family: filled.family,
            epsilon_out: eps,
            v_expected: ve,
            cost_unit: filled.cost_unit.clone().unwrap_or_default(),
            on_frontier: false,
        });
    }
    (points, diagnostics, groups)
}

fn sort_points(points: &mut [FrontierPoint]) {
    points.sort_by(|a, b| {
        a.family
            .cmp(&b.family)
            .then(b.epsilon_out.total_cmp(&a.epsilon_out))
            .then(a.record_id.cmp(&b.record_id))
    });
}

/// Build the regime map of a record list: every record with both coordinates
/// available (directly or via the yield relation) becomes a point, flagged
/// on_frontier per (family, cost_unit, epsilon_def) group. Output is sorted
/// by family, then epsilon_out descending, then record id.
pub fn regime_map(records: &[ProtocolRecord]) -> (Vec<FrontierPoint>, Vec<Diagnostic>) {
    let (mut points, diagnostics, groups) = usable_points(records);
    for group in groups.values() {
        let coords: Vec<(f64, f64)> = group
            .iter()
            .map(|&i| (points[i].epsilon_out, points[i].v_expected))
            .collect();
        let flags = pareto_frontier(&coords).expect("group points are finite and non-empty");
        for (&i, on) in group.iter().zip(flags) {
            points[i].on_frontier = on;
        }
    }
    sort_points(&mut points);
    (points, diagnostics)
}

/// Plot-only points for supplementary anchor records: same extraction and
/// ordering as [`regime_map`], but excluded from dominance, so every flag is
/// false.
pub fn anchor_points(records: &[ProtocolRecord]) -> (Vec<FrontierPoint>, Vec<Diagnostic>) {
    let (mut points, diagnostics, _) = usable_points(records);
    sort_points(&mut points);
    (points, diagnostics)
}
