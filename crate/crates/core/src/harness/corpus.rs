use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use super::OracleAnnotation;

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("corpus directory {0} does not exist")]
    Missing(PathBuf),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}: invalid oracle file: {source}")]
    Oracle {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CorpusError + '_ {
    move |source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// One bug fix: the buggy sources and the patch that fixes them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatchCase {
    pub case_id: String,
    /// Relative path (with `/` separators) to file text.
    pub before_files: BTreeMap<String, String>,
    pub diff_text: String,
    pub oracle: Option<OracleAnnotation>,
}

fn collect_files(
    root: &Path,
    dir: &Path,
    out: &mut BTreeMap<String, String>,
) -> Result<(), CorpusError> {
    let mut entries: Vec<_> = fs::read_dir(dir)
        .map_err(io_err(dir))?
        .collect::<Result<_, _>>()
        .map_err(io_err(dir))?;
    entries.sort_by_key(|e| e.file_name());
    for e in entries {
        let path = e.path();
        if path.is_dir() {
            collect_files(root, &path, out)?;
        } else {
            let rel = path
                .strip_prefix(root)
                .expect("walked below root")
                .components()
                .map(|c| c.as_os_str().to_string_lossy())
                .collect::<Vec<_>>()
                .join("/");
            out.insert(rel, fs::read_to_string(&path).map_err(io_err(&path))?);
        }
    }
    Ok(())
}

/// Reads a case directory: `before/`, `patch.diff`, optional `oracle.json`.
/// The case id is the directory name.
pub fn load_case(dir: &Path) -> Result<PatchCase, CorpusError> {
    let case_id = dir
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let mut before_files = BTreeMap::new();
    let before_dir = dir.join("before");
    if before_dir.is_dir() {
        collect_files(&before_dir, &before_dir, &mut before_files)?;
    }
    let diff_path = dir.join("patch.diff");
    let diff_text = fs::read_to_string(&diff_path).map_err(io_err(&diff_path))?;
    let oracle_path = dir.join("oracle.json");
    let oracle = if oracle_path.is_file() {
        let text = fs::read_to_string(&oracle_path).map_err(io_err(&oracle_path))?;
        Some(
            serde_json::from_str(&text).map_err(|source| CorpusError::Oracle {
                path: oracle_path.clone(),
                source,
            })?,
        )
    } else {
        None
    };
    Ok(PatchCase {
        case_id,
        before_files,
        diff_text,
        oracle,
    })
}

/// Case directories of a corpus (subdirectories holding a `patch.diff`),
/// sorted by name.
pub fn case_dirs(corpus: &Path) -> Result<Vec<PathBuf>, CorpusError> {
    if !corpus.is_dir() {
        return Err(CorpusError::Missing(corpus.to_path_buf()));
    }
    let mut dirs: Vec<PathBuf> = fs::read_dir(corpus)
        .map_err(io_err(corpus))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.join("patch.diff").is_file())
        .collect();
    dirs.sort();
    Ok(dirs)
}

pub fn load_corpus(corpus: &Path) -> Result<Vec<PatchCase>, CorpusError> {
    case_dirs(corpus)?.iter().map(|d| load_case(d)).collect()
}
