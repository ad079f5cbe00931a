//! The `patchlens` command line.
//!
//! Exit status: 0 on success, 1 when any case failed (the others are still
//! reported), 2 on configuration errors (bad flags, missing corpus, unreadable
//! counts file, unwritable output).

use std::fs;
use std::io::{self, IsTerminal, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::detect::DetectConfig;
use crate::diff::{EditAction, MatchConfig};
use crate::harness::{
    analyze_all, compare_to_oracle, compute_metrics, diff_case, load_corpus, AnalysisConfig,
    Comparison, EvaluationCounts, MetricsReport, OracleAnnotation, PatchCase, PatchReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CASE_ERROR: i32 = 1;
pub const EXIT_CONFIG_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "patchlens",
    version,
    about = "Detect repair patterns in patches"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write one pattern report per case.
    Detect(CommonArgs),
    /// Print the edit scripts of the selected cases.
    Diff(CommonArgs),
    /// Compare detections with each case's oracle.json and compute metrics.
    Evaluate {
        #[command(flatten)]
        common: CommonArgs,
        /// JSON file of adjudicated counts {A, B, DC, DW, HC, HW}. Without
        /// it, disagreements count against whichever side reported alone.
        #[arg(long)]
        counts: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Directory holding one subdirectory per case.
    #[arg(long)]
    pub corpus: PathBuf,
    /// Only cases whose id matches this glob.
    #[arg(long = "case")]
    pub case_filter: Option<String>,
    /// Output file (standard output when absent; required by `evaluate`).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    pub min_height: u32,
    #[arg(long, default_value_t = 0.5)]
    pub min_dice: f64,
    #[arg(long, default_value_t = 4)]
    pub min_clone_size: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads; 0 means one per available core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, thiserror::Error)]
enum ConfigError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Corpus(#[from] crate::harness::CorpusError),
    #[error("{path}: {message}")]
    File { path: PathBuf, message: String },
}

fn file_error(path: &Path, e: impl std::fmt::Display) -> ConfigError {
    ConfigError::File {
        path: path.to_path_buf(),
        message: e.to_string(),
    }
}

impl CommonArgs {
    fn analysis_config(&self) -> Result<AnalysisConfig, ConfigError> {
        if self.min_height == 0 {
            return Err(ConfigError::Invalid("--min-height must be positive".into()));
        }
        if !(self.min_dice > 0.0 && self.min_dice <= 1.0) {
            return Err(ConfigError::Invalid("--min-dice must be in (0, 1]".into()));
        }
        if self.min_clone_size == 0 {
            return Err(ConfigError::Invalid(
                "--min-clone-size must be positive".into(),
            ));
        }
        Ok(AnalysisConfig {
            matching: MatchConfig {
                min_height: self.min_height,
                min_dice: self.min_dice,
            },
            detect: DetectConfig {
                min_clone_size: self.min_clone_size,
            },
        })
    }

    fn cases(&self) -> Result<Vec<PatchCase>, ConfigError> {
        let filter = match &self.case_filter {
            Some(g) => Some(
                glob::Pattern::new(g)
                    .map_err(|e| ConfigError::Invalid(format!("--case {g:?}: {e}")))?,
            ),
            None => None,
        };
        let mut cases = load_corpus(&self.corpus)?;
        if let Some(f) = filter {
            cases.retain(|c| f.matches(&c.case_id));
        }
        Ok(cases)
    }

    fn pool(&self) -> Result<rayon::ThreadPool, ConfigError> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| ConfigError::Invalid(format!("--jobs: {e}")))
    }

    fn write_output(&self, text: &str, stdout: &mut dyn Write) -> Result<(), ConfigError> {
        match &self.out {
            Some(path) => fs::write(path, text).map_err(|e| file_error(path, e)),
            None => stdout
                .write_all(text.as_bytes())
                .map_err(|e| ConfigError::Invalid(format!("standard output: {e}"))),
        }
    }
}

struct Style {
    color: bool,
}

impl Style {
    fn detect() -> Self {
        Style {
            color: std::env::var_os("PATCHLENS_NO_COLOR").is_none() && io::stdout().is_terminal(),
        }
    }

    fn paint(&self, code: &str, text: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn report_errors(reports: &[PatchReport], stderr: &mut dyn Write) -> bool {
    let mut any = false;
    for r in reports {
        if let Some(e) = &r.error {
            let _ = writeln!(stderr, "case {}: {e}", r.case_id);
            any = true;
        }
    }
    any
}

fn detect_text(reports: &[PatchReport], style: &Style) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&style.paint("1", &r.case_id));
        if let Some(e) = &r.error {
            s.push_str(&format!(
                "  {}\n",
                style.paint("31", &format!("error: {e}"))
            ));
            continue;
        }
        let ids: Vec<String> = r.pattern_ids().iter().map(|p| p.to_string()).collect();
        s.push_str(&format!("  [{}]\n", ids.join(", ")));
        for p in &r.patterns {
            let anchors: Vec<String> = p
                .anchors
                .iter()
                .map(|a| {
                    let side = match a.side {
                        crate::detect::Side::Before => "-",
                        crate::detect::Side::After => "+",
                    };
                    format!("{side}{}:{}-{}", a.file, a.start_line, a.end_line)
                })
                .collect();
            let note = p
                .note
                .as_deref()
                .map(|n| format!(" ({n})"))
                .unwrap_or_default();
            s.push_str(&format!(
                "    {}{note}  {}\n",
                style.paint("32", p.id.name()),
                anchors.join(" ")
            ));
        }
    }
    s
}

fn run_detect(
    args: &CommonArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, ConfigError> {
    let config = args.analysis_config()?;
    let cases = args.cases()?;
    let reports = args.pool()?.install(|| analyze_all(&cases, &config));
    let text = match args.format {
        Format::Json => to_json(&reports),
        Format::Text => detect_text(&reports, &Style::detect()),
    };
    args.write_output(&text, stdout)?;
    Ok(if report_errors(&reports, stderr) {
        EXIT_CASE_ERROR
    } else {
        EXIT_OK
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CaseDiff {
    case_id: String,
    files: Vec<FileDiff>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct FileDiff {
    path: String,
    actions: Vec<EditAction>,
}

fn run_diff(
    args: &CommonArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, ConfigError> {
    let config = args.analysis_config()?;
    let cases = args.cases()?;
    let diffs: Vec<CaseDiff> = args.pool()?.install(|| {
        use rayon::prelude::*;
        cases
            .par_iter()
            .map(|c| match diff_case(c, &config) {
                Ok(files) => CaseDiff {
                    case_id: c.case_id.clone(),
                    files: files
                        .into_iter()
                        .map(|(path, ctx)| FileDiff {
                            path,
                            actions: ctx.script.actions,
                        })
                        .collect(),
                    error: None,
                },
                Err(e) => CaseDiff {
                    case_id: c.case_id.clone(),
                    files: Vec::new(),
                    error: Some(e.to_string()),
                },
            })
            .collect()
    });
    let style = Style::detect();
    let text = match args.format {
        Format::Json => to_json(&diffs),
        Format::Text => {
            let mut s = String::new();
            for d in &diffs {
                if let Some(e) = &d.error {
                    s.push_str(&format!(
                        "== {}  {}\n",
                        d.case_id,
                        style.paint("31", &format!("error: {e}"))
                    ));
                }
                for f in &d.files {
                    s.push_str(&style.paint("1", &format!("== {} {}", d.case_id, f.path)));
                    s.push('\n');
                    for a in &f.actions {
                        s.push_str(&format!("{a}\n"));
                    }
                }
            }
            s
        }
    };
    args.write_output(&text, stdout)?;
    let mut failed = false;
    for d in &diffs {
        if let Some(e) = &d.error {
            let _ = writeln!(stderr, "case {}: {e}", d.case_id);
            failed = true;
        }
    }
    Ok(if failed { EXIT_CASE_ERROR } else { EXIT_OK })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct EvaluationOutput<'a> {
    comparison: &'a Comparison,
    counts: EvaluationCounts,
    metrics: MetricsReport,
}

fn run_evaluate(
    args: &CommonArgs,
    counts_path: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, ConfigError> {
    let config = args.analysis_config()?;
    let Some(out) = &args.out else {
        return Err(ConfigError::Invalid("evaluate requires --out".into()));
    };
    let adjudicated = match counts_path {
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| file_error(p, e))?;
            Some(serde_json::from_str::<EvaluationCounts>(&text).map_err(|e| file_error(p, e))?)
        }
        None => None,
    };
    let cases = args.cases()?;
    let mut oracles: Vec<OracleAnnotation> = Vec::new();
    for c in &cases {
        match &c.oracle {
            Some(o) if o.case_id == c.case_id => oracles.push(o.clone()),
            Some(o) => {
                return Err(ConfigError::Invalid(format!(
                    "case {}: oracle.json names case `{}`",
                    c.case_id, o.case_id
                )))
            }
            None => {
                return Err(ConfigError::Invalid(format!(
                    "case {}: missing oracle.json",
                    c.case_id
                )))
            }
        }
    }
    let reports = args.pool()?.install(|| analyze_all(&cases, &config));
    let comparison =
        compare_to_oracle(&reports, &oracles).map_err(|e| ConfigError::Invalid(e.to_string()))?;
    let counts = adjudicated.unwrap_or_else(|| comparison.unadjudicated_counts());
    let metrics = compute_metrics(&counts);
    fs::write(out, to_json(&metrics)).map_err(|e| file_error(out, e))?;

    let text = match args.format {
        Format::Json => to_json(&EvaluationOutput {
            comparison: &comparison,
            counts,
            metrics,
        }),
        Format::Text => evaluate_text(&comparison, &metrics, &Style::detect()),
    };
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| ConfigError::Invalid(format!("standard output: {e}")))?;
    Ok(if report_errors(&reports, stderr) {
        EXIT_CASE_ERROR
    } else {
        EXIT_OK
    })
}

fn evaluate_text(c: &Comparison, m: &MetricsReport, style: &Style) -> String {
    let mut s = format!(
        "{:<28}{:>8}{:>10}{:>10}\n",
        "pattern", "agree", "det-only", "orc-only"
    );
    for (id, t) in &c.per_pattern {
        s.push_str(&format!(
            "{:<28}{:>8}{:>10}{:>10}\n",
            id.name(),
            t.agreements,
            t.detector_only,
            t.oracle_only
        ));
    }
    s.push_str(&format!(
        "{:<28}{:>8}{:>10}{:>10}\n",
        "overall", c.overall.agreements, c.overall.detector_only, c.overall.oracle_only
    ));
    for d in &c.disagreements {
        let fmt = |ids: &[crate::detect::PatternId]| {
            ids.iter().map(|p| p.name()).collect::<Vec<_>>().join(", ")
        };
        s.push_str(&format!(
            "{}  detector-only [{}]  oracle-only [{}]\n",
            style.paint("33", &d.case_id),
            fmt(&d.detector_only),
            fmt(&d.oracle_only)
        ));
    }
    s.push_str(&format!(
        "tp={} precision={:.4} recall={:.4}\n",
        m.tp, m.precision, m.recall
    ));
    s
}

/// Runs a parsed command line; returns the process exit status.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Detect(args) => run_detect(args, stdout, stderr),
        Command::Diff(args) => run_diff(args, stdout, stderr),
        Command::Evaluate { common, counts } => {
            run_evaluate(common, counts.as_deref(), stdout, stderr)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "patchlens: {e}");
            EXIT_CONFIG_ERROR
        }
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_CONFIG_ERROR
            } else {
                EXIT_OK
            };
        }
    };
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(&cli, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let cli =
            Cli::try_parse_from(std::iter::once("patchlens").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&cli, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn missing_corpus_is_a_config_error() {
        let (code, out, err) = run_args(&["detect", "--corpus", "/definitely/not/here"]);
        assert_eq!(code, EXIT_CONFIG_ERROR);
        assert!(out.is_empty());
        assert!(err.contains("does not exist"), "{err}");
    }

    #[test]
    fn thresholds_must_be_positive() {
        for flag in ["--min-height", "--min-clone-size"] {
            let (code, _, err) = run_args(&["detect", "--corpus", ".", flag, "0"]);
            assert_eq!(code, EXIT_CONFIG_ERROR);
            assert!(err.contains(flag), "{err}");
        }
    }

    #[test]
    fn bad_case_glob_is_rejected() {
        let (code, _, err) = run_args(&["diff", "--corpus", ".", "--case", "[x"]);
        assert_eq!(code, EXIT_CONFIG_ERROR);
        assert!(err.contains("--case"), "{err}");
    }

    #[test]
    fn usage_errors_go_to_stderr() {
        for args in [&["patchlens", "detect"][..], &["patchlens", "frobnicate"]] {
            assert!(Cli::try_parse_from(args).unwrap_err().use_stderr());
        }
    }

    #[test]
    fn plain_style_leaves_text_alone() {
        assert_eq!(Style { color: false }.paint("1", "x"), "x");
        assert_eq!(Style { color: true }.paint("1", "x"), "\x1b[1mx\x1b[0m");
    }
}
