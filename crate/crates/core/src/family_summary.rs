//! Family-level radar summary: six per-family spokes scored by normalizing
//! each quantity over the whole dataset and taking the family median. A
//! configurable floor keeps spokes with no reporting rows visible instead of
//! silently dropping them.

use crate::error::Error;
use crate::record_store::{Family, NumericField, ProtocolRecord, FAMILIES};

/// Floor score used when a family has no contributing rows for a spoke.
pub const DEFAULT_S_MIN: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    SmallerBetter,
    LargerBetter,
}

/// The six radar spokes. All quantitative spokes are smaller-better on a log
/// scale; reporting completeness is larger-better on a linear scale since
/// its scores live in [0, 1] and may be 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpokeField {
    VSingle,
    VExpected,
    QPeak,
    Latency,
    EpsilonOut,
    Completeness,
}

pub const SPOKE_FIELDS: [SpokeField; 6] = [
    SpokeField::VSingle,
    SpokeField::VExpected,
    SpokeField::QPeak,
    SpokeField::Latency,
    SpokeField::EpsilonOut,
    SpokeField::Completeness,
];

impl SpokeField {
    pub fn name(self) -> &'static str {
        match self {
            SpokeField::VSingle => "v_single",
            SpokeField::VExpected => "v_expected",
            SpokeField::QPeak => "q_peak",
            SpokeField::Latency => "latency",
            SpokeField::EpsilonOut => "epsilon_out",
            SpokeField::Completeness => "completeness",
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            SpokeField::Completeness => Direction::LargerBetter,
            _ => Direction::SmallerBetter,
        }
    }

    pub fn log_scale(self) -> bool {
        self != SpokeField::Completeness
    }

    /// The spoke's raw value for one record, if the record carries it.
    pub fn value(self, r: &ProtocolRecord) -> Option<f64> {
        match self {
            SpokeField::VSingle => r.value(NumericField::VSingle),
            SpokeField::VExpected => r.value(NumericField::VExpected),
            SpokeField::QPeak => r.value(NumericField::QPeak),
            SpokeField::Latency => r.value(NumericField::Latency),
            SpokeField::EpsilonOut => r.value(NumericField::EpsilonOut),
            SpokeField::Completeness => Some(r.completeness_score()),
        }
    }
}

/// One radar spoke for one family. `n_rows` counts the family rows that
/// entered the median; 0 means the score is the floor.
#[derive(Debug, Clone, PartialEq)]
pub struct SpokeScore {
    pub family: Family,
    pub field: SpokeField,
    pub score: f64,
    pub n_rows: usize,
}

fn check_s_min(s_min: f64) -> Result<(), Error> {
    if s_min.is_finite() && (0.0..1.0).contains(&s_min) {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "s_min must lie in [0, 1), got {s_min}"
        )))
    }
}

/// Normalize a value pool to scores in [s_min, 1].
///
/// With x' = ln x when `log_scale` (else x' = x) and t = (x' - min)/(max - min):
/// smaller-better scores are `s_min + (1 - s_min)(1 - t)`, larger-better
/// scores drop the `1 -`. A degenerate pool (max = min) scores 1 everywhere,
/// the lone value being trivially best.
pub fn normalize_scores(
    values: &[f64],
    direction: Direction,
    log_scale: bool,
    s_min: f64,
) -> Result<Vec<f64>, Error> {
    if values.is_empty() {
        return Err(Error::invalid("value pool must be non-empty"));
    }
    check_s_min(s_min)?;
    let mut transformed = Vec::with_capacity(values.len());
    for &v in values {
        if !v.is_finite() {
            return Err(Error::invalid(format!("pool value {v} is not finite")));
        }
        if log_scale {
            if v <= 0.0 {
                return Err(Error::invalid(format!(
                    "pool value {v} is not positive, cannot log-scale"
                )));
            }
            transformed.push(v.ln());
        } else {
            transformed.push(v);
        }
    }
    let min = transformed.iter().copied().fold(f64::INFINITY, f64::min);
    let max = transformed.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == min {
        return Ok(vec![1.0; values.len()]);
    }
    let span = max - min;
    // t stays in [0, 1] because f64 subtraction and division by a positive
    // span preserve ordering; no clamp is needed.
    Ok(transformed
        .iter()
        .map(|&x| {
            let t = (x - min) / span;
            let t = match direction {
                Direction::SmallerBetter => 1.0 - t,
                Direction::LargerBetter => t,
            };
            s_min + (1.0 - s_min) * t
        })
        .collect())
}

fn median(sorted: &mut [f64]) -> f64 {
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

/// Score all six spokes for each family.
///
/// Each spoke's normalization pool is every record in `records` carrying a
/// usable value for it, pooled across families so spokes are comparable
/// between families; the per-family score is the median over that family's
/// contributing rows. Records never cause errors: a row lacking a field (or
/// carrying one unusable for the scale) simply does not contribute. The only
/// error is an out-of-range `s_min`.
pub fn family_radar(
    records: &[ProtocolRecord],
    s_min: f64,
) -> Result<Vec<SpokeScore>, Error> {
    check_s_min(s_min)?;

    // Per field: the contributing (family, score) pairs.
    let mut scored: Vec<Vec<(Family, f64)>> = Vec::with_capacity(SPOKE_FIELDS.len());
    for field in SPOKE_FIELDS {
        let mut families = Vec::new();
        let mut values = Vec::new();
        for r in records {
            let Some(v) = field.value(r) else { continue };
            let usable = if field.log_scale() {
                v.is_finite() && v > 0.0
            } else {
                v.is_finite()
            };
            if usable {
                families.push(r.family);
                values.push(v);
            }
        }
        if values.is_empty() {
            scored.push(Vec::new());
            continue;
        }
        let scores = normalize_scores(&values, field.direction(), field.log_scale(), s_min)
            .expect("pool values pre-filtered for the scale");
        scored.push(families.into_iter().zip(scores).collect());
    }

    let mut out = Vec::with_capacity(FAMILIES.len() * SPOKE_FIELDS.len());
    for family in FAMILIES {
        for (field, pairs) in SPOKE_FIELDS.iter().zip(&scored) {
            let mut mine: Vec<f64> = pairs
                .iter()
                .filter(|(f, _)| *f == family)
                .map(|&(_, s)| s)
                .collect();
            let n_rows = mine.len();
            let score = if n_rows == 0 { s_min } else { median(&mut mine) };
            out.push(SpokeScore {
                family,
                field: *field,
                score,
                n_rows,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::record_store::Completeness;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn endpoint_scores_are_exact() {
        let s = normalize_scores(&[10.0, 1000.0], Direction::SmallerBetter, true, 0.05).unwrap();
        assert_eq!(s, vec![1.0, 0.05]);
    }

    #[test]
    fn log_midpoint_scores_halfway() {
        let s = normalize_scores(
            &[10.0, 100.0, 1000.0],
            Direction::SmallerBetter,
            true,
            0.05,
        )
        .unwrap();
        assert_eq!(s[0], 1.0);
        assert_relative_eq!(s[1], 0.525, max_relative = 1e-12);
        assert_eq!(s[2], 0.05);
    }

    #[test]
    fn degenerate_pool_scores_one() {
        for dir in [Direction::SmallerBetter, Direction::LargerBetter] {
            assert_eq!(normalize_scores(&[7.0], dir, true, 0.05).unwrap(), vec![1.0]);
            assert_eq!(
                normalize_scores(&[3.0, 3.0, 3.0], dir, false, 0.2).unwrap(),
                vec![1.0, 1.0, 1.0]
            );
        }
    }

    #[test]
    fn larger_better_reverses_the_scale() {
        let s = normalize_scores(&[1.0, 2.0, 3.0], Direction::LargerBetter, false, 0.05).unwrap();
        assert_eq!(s[0], 0.05);
        assert_relative_eq!(s[1], 0.525, max_relative = 1e-12);
        assert_eq!(s[2], 1.0);
        // Zero is a legal value on the linear scale.
        let s = normalize_scores(&[0.0, 1.0], Direction::LargerBetter, false, 0.05).unwrap();
        assert_eq!(s, vec![0.05, 1.0]);
    }

    #[test]
    fn invalid_pools_are_rejected() {
        assert!(normalize_scores(&[], Direction::SmallerBetter, false, 0.05).is_err());
        assert!(normalize_scores(&[0.0], Direction::SmallerBetter, true, 0.05).is_err());
        assert!(normalize_scores(&[-1.0], Direction::SmallerBetter, true, 0.05).is_err());
        assert!(normalize_scores(&[f64::NAN], Direction::SmallerBetter, false, 0.05).is_err());
        assert!(normalize_scores(&[1.0], Direction::SmallerBetter, false, 1.0).is_err());
        assert!(normalize_scores(&[1.0], Direction::SmallerBetter, false, -0.1).is_err());
    }

    fn rec(family: Family) -> ProtocolRecord {
        ProtocolRecord::new("x", family, "s")
    }

    fn full_rec(family: Family) -> ProtocolRecord {
        let mut r = rec(family);
        r.v_single = Some(100.0);
        r.v_expected = Some(200.0);
        r.q_peak = Some(50.0);
        r.latency = Some(30.0);
        r.epsilon_out = Some(1e-6);
        r.completeness = Completeness::uniform(true);
        r
    }

    #[test]
    fn empty_input_yields_floor_spokes() {
        let scores = family_radar(&[], 0.05).unwrap();
        assert_eq!(scores.len(), 18);
        assert!(scores.iter().all(|s| s.score == 0.05 && s.n_rows == 0));
        // Family-major, field order fixed.
        assert_eq!(scores[0].family, Family::Distillation);
        assert_eq!(scores[0].field, SpokeField::VSingle);
        assert_eq!(scores[5].field, SpokeField::Completeness);
        assert_eq!(scores[6].family, Family::Cultivation);
        assert_eq!(scores[12].family, Family::CodeSwitching);
    }

    #[test]
    fn single_row_scores_one_on_every_spoke() {
        let scores = family_radar(&[full_rec(Family::Cultivation)], 0.3).unwrap();
        for s in &scores {
            if s.family == Family::Cultivation {
                assert_eq!(s.score, 1.0, "{:?}", s.field);
                assert_eq!(s.n_rows, 1);
            } else {
                assert_eq!(s.score, 0.3);
                assert_eq!(s.n_rows, 0);
            }
        }
    }

    #[test]
    fn missing_field_floors_only_that_family() {
        let mut cult = full_rec(Family::Cultivation);
        cult.latency = None;
        let dist = full_rec(Family::Distillation);
        let scores = family_radar(&[cult, dist], 0.05).unwrap();
        let spoke = |f: Family, field: SpokeField| {
            scores
                .iter()
                .find(|s| s.family == f && s.field == field)
                .unwrap()
                .clone()
        };
        let floored = spoke(Family::Cultivation, SpokeField::Latency);
        assert_eq!(floored.score, 0.05);
        assert_eq!(floored.n_rows, 0);
        let present = spoke(Family::Distillation, SpokeField::Latency);
        assert_eq!(present.score, 1.0);
        assert_eq!(present.n_rows, 1);
    }

    #[test]
    fn pools_are_shared_across_families() {
        let mut a = rec(Family::Distillation);
        a.v_expected = Some(10.0);
        let mut b = rec(Family::Cultivation);
        b.v_expected = Some(1000.0);
        let scores = family_radar(&[a, b], 0.05).unwrap();
        let by = |f: Family| {
            scores
                .iter()
                .find(|s| s.family == f && s.field == SpokeField::VExpected)
                .unwrap()
                .score
        };
        assert_eq!(by(Family::Distillation), 1.0);
        assert_eq!(by(Family::Cultivation), 0.05);
    }

    #[test]
    fn zero_completeness_contributes_instead_of_flooring() {
        let a = rec(Family::Distillation);
        let mut b = rec(Family::Cultivation);
        b.completeness = Completeness::uniform(true);
        let scores = family_radar(&[a, b], 0.05).unwrap();
        let worst = scores
            .iter()
            .find(|s| s.family == Family::Distillation && s.field == SpokeField::Completeness)
            .unwrap();
        assert_eq!(worst.score, 0.05);
        assert_eq!(worst.n_rows, 1);
    }

    #[test]
    fn family_score_is_the_median_of_its_rows() {
        let mut rows = Vec::new();
        for v in [10.0, 100.0, 1000.0] {
            let mut r = rec(Family::Distillation);
            r.v_expected = Some(v);
            rows.push(r);
        }
        let scores = family_radar(&rows, 0.05).unwrap();
        let s = scores
            .iter()
            .find(|s| s.family == Family::Distillation && s.field == SpokeField::VExpected)
            .unwrap();
        assert_eq!(s.n_rows, 3);
        assert_relative_eq!(s.score, 0.525, max_relative = 1e-12);
    }

    #[test]
    fn bad_s_min_is_the_only_error() {
        assert!(family_radar(&[], 1.0).is_err());
        assert!(family_radar(&[], f64::NAN).is_err());
        // A record with an unusable value contributes nothing, no error.
        let mut r = rec(Family::Distillation);
        r.epsilon_out = Some(-1.0);
        let scores = family_radar(&[r], 0.05).unwrap();
        let s = scores
            .iter()
            .find(|s| s.family == Family::Distillation && s.field == SpokeField::EpsilonOut)
            .unwrap();
        assert_eq!(s.n_rows, 0);
        assert_eq!(s.score, 0.05);
    }

    proptest! {
        #[test]
        fn scores_stay_in_range(
            values in prop::collection::vec(1e-9f64..1e9, 1..40),
            s_min in 0.0f64..0.9,
            log in any::<bool>(),
        ) {
            let s = normalize_scores(&values, Direction::SmallerBetter, log, s_min).unwrap();
            prop_assert!(s.iter().all(|&x| x >= s_min && x <= 1.0));
        }

        #[test]
        fn smaller_values_score_strictly_higher(
            a in 1e-6f64..1e6,
            ratio in 1.01f64..1e3,
            filler in prop::collection::vec(1e-6f64..1e9, 0..10),
        ) {
            let b = a * ratio;
            let mut pool = vec![a, b];
            pool.extend(filler);
            let s = normalize_scores(&pool, Direction::SmallerBetter, true, 0.05).unwrap();
            prop_assert!(s[0] > s[1]);
        }

        #[test]
        fn record_order_never_changes_scores(
            seed in any::<u64>(),
        ) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut records = Vec::new();
            for (i, v) in [3.0, 7.0, 20.0, 500.0, 1e4].iter().enumerate() {
                let fam = FAMILIES[i % 3];
                let mut r = full_rec(fam);
                r.v_expected = Some(*v);
                records.push(r);
            }
            let base = family_radar(&records, 0.05).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            records.shuffle(&mut rng);
            prop_assert_eq!(base, family_radar(&records, 0.05).unwrap());
        }
    }
}
