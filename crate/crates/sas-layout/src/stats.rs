//! Component counts and per-path signal penalties.
//!
//! A switch-and-select fabric routes each of n inputs through a 1-to-n
//! selector tree on both sides, so component totals follow closed forms in
//! n alone. Signal penalties accumulate per waveguide crossing: insertion
//! loss adds linearly, while worst-case crosstalk adds as amplitudes (or as
//! powers in the incoherent variant). This is the one module that works in
//! plain floating point; everything geometric stays exact.

use serde::{Deserialize, Serialize};

use crate::model::LayoutError;

/// Component totals for an n x n switch-and-select fabric.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DeviceStats {
    /// Mach-Zehnder interferometers across all 2n selector trees.
    pub mzi_count: u64,
    /// Phase shifters: two arms per interferometer.
    pub phase_shifter_count: u64,
    /// Shifters that must be driven to hold one routing state.
    pub active_shifters_per_state: u64,
    /// Distinct full-fabric routing states, n!, saturating at `u64::MAX`.
    pub switch_state_count: u64,
    /// True when n! exceeded the integer range and the count saturated.
    pub switch_state_overflowed: bool,
}

/// Accumulated dB penalties along one light path.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct PathPenalty {
    /// Total insertion loss in dB: crossings times the per-crossing loss.
    pub total_il_db: f64,
    /// Worst-case crosstalk leaked into the path, in dB relative to the
    /// signal. `NEG_INFINITY` when the path crosses nothing.
    pub worst_case_coherent_xt_db: f64,
}

fn ceil_log2(n: u32) -> u32 {
    (n - 1).ilog2() + 1
}

fn saturating_factorial(n: u64) -> (u64, bool) {
    let mut acc = 1u64;
    for k in 2..=n {
        match acc.checked_mul(k) {
            Some(next) => acc = next,
            None => return (u64::MAX, true),
        }
    }
    (acc, false)
}

/// Component totals for an n x n fabric built from binary selector trees.
///
/// Each of the 2n trees spends n - 1 interferometers, each interferometer
/// carries two phase shifters, and holding one routing state drives one
/// shifter per tree level on every tree.
pub fn device_stats(n: u32) -> Result<DeviceStats, LayoutError> {
    if n < 2 {
        return Err(LayoutError::StatsTooSmall { n, min: 2 });
    }
    let ports = u64::from(n);
    let mzi_count = 2 * ports * (ports - 1);
    let (switch_state_count, switch_state_overflowed) = saturating_factorial(ports);
    Ok(DeviceStats {
        mzi_count,
        phase_shifter_count: 2 * mzi_count,
        active_shifters_per_state: 2 * ports * u64::from(ceil_log2(n)),
        switch_state_count,
        switch_state_overflowed,
    })
}

fn penalty(
    crossings: u64,
    il_per_crossing_db: f64,
    xt_per_crossing_db: f64,
    log_scale: f64,
) -> Result<PathPenalty, LayoutError> {
    if xt_per_crossing_db > 0.0 || xt_per_crossing_db.is_nan() {
        return Err(LayoutError::PositiveCrosstalk(xt_per_crossing_db));
    }
    if il_per_crossing_db < 0.0 || il_per_crossing_db.is_nan() {
        return Err(LayoutError::NegativeInsertionLoss(il_per_crossing_db));
    }
    let k = crossings as f64;
    let worst_case_coherent_xt_db = if crossings == 0 {
        f64::NEG_INFINITY
    } else {
        xt_per_crossing_db + log_scale * k.log10()
    };
    Ok(PathPenalty {
        total_il_db: k * il_per_crossing_db,
        worst_case_coherent_xt_db,
    })
}

/// Penalties after `crossings` waveguide crossings, with crosstalk summed
/// coherently: k equal leaks in phase add 20 log10(k) dB to one leak.
///
/// Requires a nonnegative insertion loss and a nonpositive crosstalk figure
/// per crossing.
pub fn path_penalty(
    crossings: u64,
    il_per_crossing_db: f64,
    xt_per_crossing_db: f64,
) -> Result<PathPenalty, LayoutError> {
    penalty(crossings, il_per_crossing_db, xt_per_crossing_db, 20.0)
}

/// [`path_penalty`] with crosstalk summed incoherently: k equal leaks add
/// 10 log10(k) dB, i.e. powers rather than amplitudes. The crosstalk field
/// of the result then carries the power-sum figure.
pub fn path_penalty_incoherent(
    crossings: u64,
    il_per_crossing_db: f64,
    xt_per_crossing_db: f64,
) -> Result<PathPenalty, LayoutError> {
    penalty(crossings, il_per_crossing_db, xt_per_crossing_db, 10.0)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::{crossing, facet, surface};

    fn counts(d: DeviceStats) -> (u64, u64, u64, u64) {
        (
            d.mzi_count,
            d.phase_shifter_count,
            d.active_shifters_per_state,
            d.switch_state_count,
        )
    }

    #[test]
    fn device_counts_match_the_selector_tree_construction() {
        assert_eq!(counts(device_stats(2).unwrap()), (4, 8, 4, 2));
        assert_eq!(counts(device_stats(4).unwrap()), (24, 48, 16, 24));
        assert_eq!(counts(device_stats(8).unwrap()), (112, 224, 48, 40_320));
    }

    #[test]
    fn tiny_fabrics_are_rejected() {
        assert_eq!(device_stats(0), Err(LayoutError::StatsTooSmall { n: 0, min: 2 }));
        assert_eq!(device_stats(1), Err(LayoutError::StatsTooSmall { n: 1, min: 2 }));
    }

    #[test]
    fn state_count_saturates_past_twenty_ports() {
        let last_exact = device_stats(20).unwrap();
        assert_eq!(last_exact.switch_state_count, 2_432_902_008_176_640_000);
        assert!(!last_exact.switch_state_overflowed);
        let saturated = device_stats(21).unwrap();
        assert_eq!(saturated.switch_state_count, u64::MAX);
        assert!(saturated.switch_state_overflowed);
        assert_eq!(saturated.mzi_count, 840);
    }

    #[test]
    fn penalty_examples_hit_the_closed_forms() {
        let p = path_penalty(100, 0.04, -40.0).unwrap();
        assert!((p.total_il_db - 4.0).abs() < 1e-12);
        assert!(p.worst_case_coherent_xt_db.abs() < 1e-12);

        let quiet = path_penalty(0, 0.04, -40.0).unwrap();
        assert_eq!(quiet.total_il_db, 0.0);
        assert_eq!(quiet.worst_case_coherent_xt_db, f64::NEG_INFINITY);

        let p = path_penalty(49, 0.019, -40.0).unwrap();
        assert!((p.total_il_db - 0.931).abs() < 1e-12);
        let want = -40.0 + 20.0 * 49f64.log10();
        assert!((p.worst_case_coherent_xt_db - want).abs() < 1e-12);
    }

    #[test]
    fn signed_penalty_inputs_are_rejected() {
        assert_eq!(
            path_penalty(5, 0.04, 1.5),
            Err(LayoutError::PositiveCrosstalk(1.5))
        );
        assert_eq!(
            path_penalty(5, -0.01, -40.0),
            Err(LayoutError::NegativeInsertionLoss(-0.01))
        );
        assert!(path_penalty(5, f64::NAN, -40.0).is_err());
        assert!(path_penalty(5, 0.04, f64::NAN).is_err());
    }

    #[test]
    fn incoherent_summation_grows_half_as_fast() {
        let coherent = path_penalty(100, 0.0, -30.0).unwrap();
        let incoherent = path_penalty_incoherent(100, 0.0, -30.0).unwrap();
        assert!((coherent.worst_case_coherent_xt_db - 10.0).abs() < 1e-12);
        assert!((incoherent.worst_case_coherent_xt_db + 10.0).abs() < 1e-12);
    }

    #[test]
    fn worst_path_penalty_matches_per_edge_accumulation() {
        let d = facet::build_interleaved_facet_drawing(4).unwrap();
        let report = crossing::count_crossings(&d).unwrap();
        let mut per_edge = vec![0u64; d.edges.len()];
        for &(a, b) in &report.crossing_pairs {
            per_edge[a] += 1;
            per_edge[b] += 1;
        }
        let worst = crossing::max_crossings_along_path(&d);
        let trace = d
            .connection_map
            .values()
            .max_by_key(|t| t.planar_crossings)
            .unwrap();
        assert_eq!(worst, trace.planar_crossings);
        assert!(worst > 0);

        let along: u64 = trace.edge_sequence.iter().map(|&e| per_edge[e]).sum();
        assert_eq!(along, worst);

        let whole = path_penalty(worst, 0.04, -40.0).unwrap();
        let stepped: f64 = trace
            .edge_sequence
            .iter()
            .map(|&e| path_penalty(per_edge[e], 0.04, -40.0).unwrap().total_il_db)
            .sum();
        assert!((whole.total_il_db - stepped).abs() < 1e-9);
    }

    #[test]
    fn zarankiewicz_worst_path_prices_like_its_tally() {
        let d = surface::build_zarankiewicz_drawing(5, 4).unwrap();
        let worst = crossing::max_crossings_along_path(&d);
        assert_eq!(worst, surface::xi_surface(5, 4));
        let p = path_penalty(worst, 0.019, -40.0).unwrap();
        assert!((p.total_il_db - worst as f64 * 0.019).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn shifter_counts_stay_consistent(n in 2u32..=500) {
            let d = device_stats(n).unwrap();
            prop_assert_eq!(d.phase_shifter_count, 2 * d.mzi_count);
            prop_assert!(d.active_shifters_per_state <= d.phase_shifter_count);
            prop_assert_eq!(d.switch_state_overflowed, n > 20);
        }

        #[test]
        fn insertion_loss_is_linear_in_crossings(
            a in 0u64..=10_000,
            b in 0u64..=10_000,
            il in 0.0f64..=1.0,
        ) {
            let pa = path_penalty(a, il, -40.0).unwrap();
            let pb = path_penalty(b, il, -40.0).unwrap();
            let pc = path_penalty(a + b, il, -40.0).unwrap();
            prop_assert!((pa.total_il_db + pb.total_il_db - pc.total_il_db).abs() < 1e-9);
        }

        #[test]
        fn crosstalk_grows_with_crossings_and_leak(
            k in 1u64..=100_000,
            xt in -80.0f64..=-1.0,
        ) {
            let base = path_penalty(k, 0.1, xt).unwrap();
            let more = path_penalty(k + 1, 0.1, xt).unwrap();
            let leakier = path_penalty(k, 0.1, xt + 0.5).unwrap();
            prop_assert!(more.worst_case_coherent_xt_db > base.worst_case_coherent_xt_db);
            prop_assert!(leakier.worst_case_coherent_xt_db > base.worst_case_coherent_xt_db);
            prop_assert!(base.worst_case_coherent_xt_db > f64::NEG_INFINITY);
        }
    }
}
