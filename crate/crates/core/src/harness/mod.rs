//! Patch cases in, reports out: diff application, per-file analysis,
//! oracle comparison and metrics.

mod corpus;
mod evaluate;
pub mod unidiff;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::detect::{
    detect_files, Anchor, DetectConfig, DiffContext, PatternGroup, PatternId, PatternInstance, Side,
};
use crate::diff::{ActionCounts, MatchConfig};
use crate::parser::{parse, ParseError};

pub use corpus::{case_dirs, load_case, load_corpus, CorpusError, PatchCase};
pub use evaluate::{
    compare_to_oracle, compute_metrics, Comparison, EvalError, EvaluationCounts, MetricsReport,
    PatternTally,
};
pub use unidiff::{apply_unified_diff, DiffError};

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisConfig {
    pub matching: MatchConfig,
    pub detect: DetectConfig,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleAnnotation {
    pub case_id: String,
    pub expected: Vec<PatternId>,
}

#[derive(Debug, thiserror::Error)]
pub enum CaseError {
    #[error("{file}: patch does not apply: {source}")]
    Apply {
        file: String,
        #[source]
        source: DiffError,
    },
    #[error("patch is not a valid unified diff: {0}")]
    Patch(#[source] DiffError),
    #[error("{file}: patched file is not in before/")]
    UnknownFile { file: String },
    #[error("{side} version of {source}")]
    Parse {
        side: &'static str,
        #[source]
        source: ParseError,
    },
}

/// One changed file of a case, with both versions reconstructed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FileChange {
    pub path: String,
    pub before: String,
    pub after: String,
}

/// Applies the case's diff to its before-files. Files the diff does not
/// touch are not returned.
pub fn reconstruct(case: &PatchCase) -> Result<Vec<FileChange>, CaseError> {
    let patches = unidiff::parse_patch(&case.diff_text).map_err(CaseError::Patch)?;
    let mut out = Vec::with_capacity(patches.len());
    for p in &patches {
        let path = p.path().to_string();
        let before = match &p.old_path {
            None => String::new(),
            Some(old) => case
                .before_files
                .get(old)
                .cloned()
                .ok_or_else(|| CaseError::UnknownFile { file: old.clone() })?,
        };
        let after = unidiff::apply_hunks(&before, &p.hunks).map_err(|source| CaseError::Apply {
            file: path.clone(),
            source,
        })?;
        out.push(FileChange {
            path,
            before,
            after,
        });
    }
    Ok(out)
}

/// Parses and diffs every changed file of a case.
pub fn diff_case(
    case: &PatchCase,
    config: &AnalysisConfig,
) -> Result<Vec<(String, DiffContext)>, CaseError> {
    reconstruct(case)?
        .into_iter()
        .map(|f| {
            let before = parse(&f.before, &f.path).map_err(|source| CaseError::Parse {
                side: "before",
                source,
            })?;
            let after = parse(&f.after, &f.path).map_err(|source| CaseError::Parse {
                side: "after",
                source,
            })?;
            Ok((
                f.path,
                DiffContext::compute(before, after, &config.matching),
            ))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileSummary {
    pub path: String,
    pub actions: ActionCounts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AnchorRecord {
    pub file: String,
    pub side: Side,
    pub start_line: u32,
    pub end_line: u32,
}

impl From<&Anchor> for AnchorRecord {
    fn from(a: &Anchor) -> Self {
        AnchorRecord {
            file: a.span.file.to_string(),
            side: a.side,
            start_line: a.span.start_line,
            end_line: a.span.end_line,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternRecord {
    pub id: PatternId,
    pub group: PatternGroup,
    pub anchors: Vec<AnchorRecord>,
    pub note: Option<String>,
}

impl From<&PatternInstance> for PatternRecord {
    fn from(p: &PatternInstance) -> Self {
        PatternRecord {
            id: p.id,
            group: p.group(),
            anchors: p.anchors.iter().map(AnchorRecord::from).collect(),
            note: p.note.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PatchReport {
    pub case_id: String,
    pub files: Vec<FileSummary>,
    pub patterns: Vec<PatternRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Wall-clock analysis time. Kept out of the JSON so reports stay
    /// byte-identical across runs.
    #[serde(skip)]
    pub timing_ms: u128,
}

impl PatchReport {
    /// Distinct pattern ids, sorted.
    pub fn pattern_ids(&self) -> Vec<PatternId> {
        let mut ids: Vec<PatternId> = self.patterns.iter().map(|p| p.id).collect();
        ids.sort();
        ids.dedup();
        ids
    }

    pub fn is_error(&self) -> bool {
        self.error.is_some()
    }
}

/// Runs the whole pipeline on one case. Failures end up in `error`.
pub fn analyze_patch(case: &PatchCase, config: &AnalysisConfig) -> PatchReport {
    let started = Instant::now();
    let mut report = PatchReport {
        case_id: case.case_id.clone(),
        files: Vec::new(),
        patterns: Vec::new(),
        error: None,
        timing_ms: 0,
    };
    match diff_case(case, config) {
        Ok(files) => {
            report.files = files
                .iter()
                .map(|(path, ctx)| FileSummary {
                    path: path.clone(),
                    actions: ctx.script.counts(),
                })
                .collect();
            let contexts: Vec<DiffContext> = files.into_iter().map(|(_, c)| c).collect();
            report.patterns = detect_files(&contexts, &config.detect)
                .iter()
                .map(PatternRecord::from)
                .collect();
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    report.timing_ms = started.elapsed().as_millis();
    report
}

/// Analyzes cases in parallel; the result is ordered by case id.
pub fn analyze_all(cases: &[PatchCase], config: &AnalysisConfig) -> Vec<PatchReport> {
    let mut reports: Vec<PatchReport> =
        cases.par_iter().map(|c| analyze_patch(c, config)).collect();
    reports.sort_by(|a, b| a.case_id.cmp(&b.case_id));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn case(before: &str, diff: &str) -> PatchCase {
        PatchCase {
            case_id: "c".into(),
            before_files: BTreeMap::from([("C.java".to_string(), before.to_string())]),
            diff_text: diff.into(),
            oracle: None,
        }
    }

    #[test]
    fn empty_diff_gives_empty_report() {
        let r = analyze_patch(&case("class C { }\n", ""), &AnalysisConfig::default());
        assert!(r.files.is_empty() && r.patterns.is_empty() && r.error.is_none());
    }

    #[test]
    fn parse_failure_is_a_case_error() {
        let diff = "--- a/C.java\n+++ b/C.java\n@@ -1 +1 @@\n-class C { }\n+class C { @ }\n";
        let r = analyze_patch(&case("class C { }\n", diff), &AnalysisConfig::default());
        let msg = r.error.unwrap();
        assert!(msg.contains("after version of C.java:1:11"), "{msg}");
    }

    #[test]
    fn unknown_file_is_a_case_error() {
        let diff = "--- a/D.java\n+++ b/D.java\n@@ -1 +1 @@\n-x\n+y\n";
        let r = analyze_patch(&case("class C { }\n", diff), &AnalysisConfig::default());
        assert!(r.error.unwrap().contains("D.java"));
    }

    #[test]
    fn report_json_shape() {
        let diff = "--- a/C.java\n+++ b/C.java\n@@ -1 +1 @@\n-class C { int m() { return 0; } }\n+class C { int m() { return 1; } }\n";
        let r = analyze_patch(
            &case("class C { int m() { return 0; } }\n", diff),
            &AnalysisConfig::default(),
        );
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["caseId"], "c");
        assert_eq!(v["files"][0]["actions"]["update"], 1);
        assert_eq!(v["files"][0]["actions"]["move"], 0);
        assert!(v.get("error").is_none());
        assert!(v.get("timingMs").is_none());
        let ids: Vec<&str> = v["patterns"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| p["id"].as_str().unwrap())
            .collect();
        assert_eq!(ids, ["singleLine", "constantChange"]);
        assert_eq!(v["patterns"][1]["group"], "constantChange");
        assert_eq!(v["patterns"][1]["anchors"][0]["side"], "before");
        assert_eq!(v["patterns"][1]["anchors"][0]["startLine"], 1);
    }
}
