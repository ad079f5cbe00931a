use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize, Serializer};

use super::{OracleAnnotation, PatchReport};
use crate::detect::PatternId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("report for case `{0}` has no oracle annotation")]
    NoOracle(String),
    #[error("oracle annotation for case `{0}` has no report")]
    NoReport(String),
    #[error("duplicate case id `{0}`")]
    Duplicate(String),
}

/// Per-pattern outcome of comparing detector output with the oracle. A
/// pattern counts once per patch, however many sites it has.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PatternTally {
    /// Both detector and oracle report the pattern.
    pub agreements: usize,
    /// Only the detector reports it: candidate DW or DC.
    pub detector_only: usize,
    /// Only the oracle reports it: candidate HC or HW.
    pub oracle_only: usize,
}

impl PatternTally {
    fn add(&mut self, other: &PatternTally) {
        self.agreements += other.agreements;
        self.detector_only += other.detector_only;
        self.oracle_only += other.oracle_only;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseDisagreement {
    pub case_id: String,
    pub detector_only: Vec<PatternId>,
    pub oracle_only: Vec<PatternId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Comparison {
    pub per_pattern: BTreeMap<PatternId, PatternTally>,
    pub overall: PatternTally,
    /// Cases with at least one disagreement, by case id.
    pub disagreements: Vec<CaseDisagreement>,
}

impl Comparison {
    /// Counts as if every disagreement were adjudicated against the side
    /// that reported it alone: A = agreements, DW = detector-only,
    /// HC = oracle-only.
    pub fn unadjudicated_counts(&self) -> EvaluationCounts {
        EvaluationCounts {
            a: self.overall.agreements as u64,
            dw: self.overall.detector_only as u64,
            hc: self.overall.oracle_only as u64,
            ..EvaluationCounts::default()
        }
    }
}

/// Presence comparison per (case, pattern id). Every report needs exactly one
/// annotation and vice versa.
pub fn compare_to_oracle(
    reports: &[PatchReport],
    oracle: &[OracleAnnotation],
) -> Result<Comparison, EvalError> {
    let mut expected: BTreeMap<&str, BTreeSet<PatternId>> = BTreeMap::new();
    for o in oracle {
        if expected
            .insert(&o.case_id, o.expected.iter().copied().collect())
            .is_some()
        {
            return Err(EvalError::Duplicate(o.case_id.clone()));
        }
    }
    let mut seen = BTreeSet::new();
    let mut per_pattern: BTreeMap<PatternId, PatternTally> = PatternId::ALL
        .iter()
        .map(|&p| (p, PatternTally::default()))
        .collect();
    let mut disagreements = Vec::new();
    for r in reports {
        if !seen.insert(r.case_id.as_str()) {
            return Err(EvalError::Duplicate(r.case_id.clone()));
        }
        let want = expected
            .get(r.case_id.as_str())
            .ok_or_else(|| EvalError::NoOracle(r.case_id.clone()))?;
        let got: BTreeSet<PatternId> = r.pattern_ids().into_iter().collect();
        for id in want.intersection(&got) {
            per_pattern.get_mut(id).unwrap().agreements += 1;
        }
        let detector_only: Vec<PatternId> = got.difference(want).copied().collect();
        let oracle_only: Vec<PatternId> = want.difference(&got).copied().collect();
        for id in &detector_only {
            per_pattern.get_mut(id).unwrap().detector_only += 1;
        }
        for id in &oracle_only {
            per_pattern.get_mut(id).unwrap().oracle_only += 1;
        }
        if !detector_only.is_empty() || !oracle_only.is_empty() {
            disagreements.push(CaseDisagreement {
                case_id: r.case_id.clone(),
                detector_only,
                oracle_only,
            });
        }
    }
    if let Some(missing) = expected.keys().find(|k| !seen.contains(*k)) {
        return Err(EvalError::NoReport(missing.to_string()));
    }
    let mut overall = PatternTally::default();
    for t in per_pattern.values() {
        overall.add(t);
    }
    disagreements.sort_by(|a, b| a.case_id.cmp(&b.case_id));
    Ok(Comparison {
        per_pattern,
        overall,
        disagreements,
    })
}

/// Adjudicated disagreement counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvaluationCounts {
    /// Agreements.
    #[serde(rename = "A")]
    pub a: u64,
    /// Both answers acceptable.
    #[serde(rename = "B", default)]
    pub b: u64,
    /// Disagreement where the detector was right.
    #[serde(rename = "DC", default)]
    pub dc: u64,
    /// Disagreement where the detector was wrong.
    #[serde(rename = "DW", default)]
    pub dw: u64,
    /// Disagreement where the human annotation was right.
    #[serde(rename = "HC", default)]
    pub hc: u64,
    /// Disagreement where the human annotation was wrong. Informational only.
    #[serde(rename = "HW", default)]
    pub hw: u64,
}

fn four_decimals<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64((x * 10_000.0).round() / 10_000.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetricsReport {
    pub tp: u64,
    #[serde(serialize_with = "four_decimals")]
    pub precision: f64,
    #[serde(serialize_with = "four_decimals")]
    pub recall: f64,
}

fn ratio(tp: u64, denominator: u64) -> f64 {
    if denominator == 0 {
        1.0
    } else {
        tp as f64 / denominator as f64
    }
}

/// tp = A + B + DC; precision = tp / (tp + DW); recall = tp / (tp + HC).
/// A zero denominator (only possible with tp = 0) yields 1.
pub fn compute_metrics(counts: &EvaluationCounts) -> MetricsReport {
    let tp = counts.a + counts.b + counts.dc;
    MetricsReport {
        tp,
        precision: ratio(tp, tp + counts.dw),
        recall: ratio(tp, tp + counts.hc),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::PatternRecord;

    fn counts(a: u64, b: u64, dc: u64, dw: u64, hc: u64) -> EvaluationCounts {
        EvaluationCounts {
            a,
            b,
            dc,
            dw,
            hc,
            hw: 0,
        }
    }

    #[test]
    fn all_agree_is_perfect() {
        let m = compute_metrics(&counts(10, 0, 0, 0, 0));
        assert_eq!((m.tp, m.precision, m.recall), (10, 1.0, 1.0));
    }

    #[test]
    fn zero_tp_with_wrong_detections() {
        let m = compute_metrics(&counts(0, 0, 0, 5, 0));
        assert_eq!((m.tp, m.precision, m.recall), (0, 0.0, 1.0));
    }

    #[test]
    fn metrics_serialize_with_four_decimals() {
        let m = MetricsReport {
            tp: 3,
            precision: 2.0 / 3.0,
            recall: 1.0,
        };
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"{"tp":3,"precision":0.6667,"recall":1.0}"#
        );
    }

    #[test]
    fn counts_file_uses_table_symbols() {
        let c: EvaluationCounts =
            serde_json::from_str(r#"{"A":1,"B":2,"DC":3,"DW":4,"HC":5,"HW":6}"#).unwrap();
        assert_eq!(
            c,
            EvaluationCounts {
                a: 1,
                b: 2,
                dc: 3,
                dw: 4,
                hc: 5,
                hw: 6
            }
        );
    }

    fn report(id: &str, patterns: &[PatternId]) -> PatchReport {
        PatchReport {
            case_id: id.into(),
            files: vec![],
            patterns: patterns
                .iter()
                .map(|&p| PatternRecord {
                    id: p,
                    group: p.group(),
                    anchors: vec![],
                    note: None,
                })
                .collect(),
            error: None,
            timing_ms: 0,
        }
    }

    fn oracle(id: &str, expected: &[PatternId]) -> OracleAnnotation {
        OracleAnnotation {
            case_id: id.into(),
            expected: expected.to_vec(),
        }
    }

    #[test]
    fn detector_only_and_oracle_only_entries() {
        use PatternId::*;
        let reports = [report("x", &[CopyPaste, SingleLine]), report("y", &[])];
        let oracles = [oracle("x", &[SingleLine]), oracle("y", &[ExpArithMod])];
        let c = compare_to_oracle(&reports, &oracles).unwrap();
        assert_eq!(c.per_pattern[&CopyPaste].detector_only, 1);
        assert_eq!(c.per_pattern[&ExpArithMod].oracle_only, 1);
        assert_eq!(c.per_pattern[&SingleLine].agreements, 1);
        assert_eq!(
            c.overall,
            PatternTally {
                agreements: 1,
                detector_only: 1,
                oracle_only: 1
            }
        );
        assert_eq!(c.disagreements.len(), 2);
    }

    #[test]
    fn unknown_case_is_an_error() {
        let err = compare_to_oracle(&[report("x", &[])], &[oracle("z", &[])]).unwrap_err();
        assert_eq!(err, EvalError::NoOracle("x".into()));
        let err = compare_to_oracle(&[], &[oracle("z", &[])]).unwrap_err();
        assert_eq!(err, EvalError::NoReport("z".into()));
    }
}
