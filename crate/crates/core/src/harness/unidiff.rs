//! Strict unified-diff parsing and application. Hunks must apply at exactly
//! the stated line numbers; there is no fuzz or offset search.

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiffError {
    #[error("line {line}: malformed diff: {message}")]
    Malformed { line: usize, message: String },
    #[error("hunk {hunk}: line {line} expected {expected:?}, found {found:?}")]
    Mismatch {
        hunk: usize,
        line: usize,
        expected: String,
        found: Option<String>,
    },
    #[error("hunk {hunk}: starts at line {start}, before the end of the previous hunk")]
    Overlap { hunk: usize, start: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HunkLine<'a> {
    Context(&'a str),
    Remove(&'a str),
    Add(&'a str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hunk<'a> {
    pub old_start: usize,
    pub old_len: usize,
    pub new_start: usize,
    pub new_len: usize,
    pub lines: Vec<HunkLine<'a>>,
    /// `\ No newline at end of file` seen after the last old / new line.
    pub old_no_eol: bool,
    pub new_no_eol: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilePatch<'a> {
    /// `None` for `/dev/null` (file added).
    pub old_path: Option<String>,
    /// `None` for `/dev/null` (file removed).
    pub new_path: Option<String>,
    pub hunks: Vec<Hunk<'a>>,
}

impl FilePatch<'_> {
    /// Path the patch is about: the new path, or the old one for removals.
    pub fn path(&self) -> &str {
        self.new_path
            .as_deref()
            .or(self.old_path.as_deref())
            .unwrap_or("")
    }
}

fn strip_path(raw: &str) -> Option<String> {
    let raw = raw.split('\t').next().unwrap_or("").trim_end();
    if raw == "/dev/null" {
        return None;
    }
    let p = raw
        .strip_prefix("a/")
        .or_else(|| raw.strip_prefix("b/"))
        .unwrap_or(raw);
    Some(p.to_string())
}

fn parse_range(text: &str, line: usize) -> Result<(usize, usize), DiffError> {
    let bad = || DiffError::Malformed {
        line,
        message: format!("bad hunk range {text:?}"),
    };
    let (start, len) = match text.split_once(',') {
        Some((s, l)) => (s, l),
        None => (text, "1"),
    };
    Ok((
        start.parse().map_err(|_| bad())?,
        len.parse().map_err(|_| bad())?,
    ))
}

fn parse_hunk_header(text: &str, line: usize) -> Result<(usize, usize, usize, usize), DiffError> {
    let bad = || DiffError::Malformed {
        line,
        message: format!("bad hunk header {text:?}"),
    };
    let rest = text.strip_prefix("@@ ").ok_or_else(bad)?;
    let (ranges, _) = rest.split_once(" @@").ok_or_else(bad)?;
    let (old, new) = ranges.split_once(' ').ok_or_else(bad)?;
    let (os, ol) = parse_range(old.strip_prefix('-').ok_or_else(bad)?, line)?;
    let (ns, nl) = parse_range(new.strip_prefix('+').ok_or_else(bad)?, line)?;
    Ok((os, ol, ns, nl))
}

/// Parses every file section of a unified diff. Lines outside sections
/// (`diff --git`, `index ...`) are ignored.
pub fn parse_patch(text: &str) -> Result<Vec<FilePatch<'_>>, DiffError> {
    let lines: Vec<&str> = text.lines().collect();
    let mut files = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let Some(old) = lines[i].strip_prefix("--- ") else {
            i += 1;
            continue;
        };
        let new = lines
            .get(i + 1)
            .and_then(|l| l.strip_prefix("+++ "))
            .ok_or_else(|| DiffError::Malformed {
                line: i + 2,
                message: "expected `+++` after `---`".into(),
            })?;
        let mut patch = FilePatch {
            old_path: strip_path(old),
            new_path: strip_path(new),
            hunks: Vec::new(),
        };
        i += 2;
        while i < lines.len() && lines[i].starts_with("@@") {
            let (old_start, old_len, new_start, new_len) = parse_hunk_header(lines[i], i + 1)?;
            i += 1;
            let mut hunk = Hunk {
                old_start,
                old_len,
                new_start,
                new_len,
                lines: Vec::new(),
                old_no_eol: false,
                new_no_eol: false,
            };
            let (mut seen_old, mut seen_new) = (0, 0);
            while seen_old < old_len || seen_new < new_len {
                let Some(&l) = lines.get(i) else {
                    return Err(DiffError::Malformed {
                        line: i + 1,
                        message: "hunk ended early".into(),
                    });
                };
                let body = l.get(1..).unwrap_or("");
                let hl = match l.chars().next() {
                    Some(' ') => HunkLine::Context(body),
                    // Some tools drop the space of an empty context line.
                    None => HunkLine::Context(""),
                    Some('-') => HunkLine::Remove(body),
                    Some('+') => HunkLine::Add(body),
                    Some('\\') => {
                        mark_no_eol(&mut hunk);
                        i += 1;
                        continue;
                    }
                    _ => {
                        return Err(DiffError::Malformed {
                            line: i + 1,
                            message: format!("unexpected hunk line {l:?}"),
                        })
                    }
                };
                match hl {
                    HunkLine::Context(_) => {
                        seen_old += 1;
                        seen_new += 1;
                    }
                    HunkLine::Remove(_) => seen_old += 1,
                    HunkLine::Add(_) => seen_new += 1,
                }
                hunk.lines.push(hl);
                i += 1;
            }
            if seen_old != old_len || seen_new != new_len {
                return Err(DiffError::Malformed {
                    line: i,
                    message: "hunk line counts disagree with its header".into(),
                });
            }
            if lines.get(i).is_some_and(|l| l.starts_with('\\')) {
                mark_no_eol(&mut hunk);
                i += 1;
            }
            patch.hunks.push(hunk);
        }
        files.push(patch);
    }
    Ok(files)
}

fn mark_no_eol(hunk: &mut Hunk<'_>) {
    match hunk.lines.last() {
        Some(HunkLine::Remove(_)) => hunk.old_no_eol = true,
        Some(HunkLine::Add(_)) => hunk.new_no_eol = true,
        _ => {
            hunk.old_no_eol = true;
            hunk.new_no_eol = true;
        }
    }
}

/// Applies the hunks of one file to `before`.
pub fn apply_hunks(before: &str, hunks: &[Hunk<'_>]) -> Result<String, DiffError> {
    let old: Vec<&str> = before.lines().collect();
    let mut ends_with_newline = before.is_empty() || before.ends_with('\n');
    let mut out: Vec<&str> = Vec::with_capacity(old.len());
    let mut cursor = 0usize;
    for (h, hunk) in hunks.iter().enumerate() {
        let hunk_no = h + 1;
        // An empty old range names the line after which the new lines go.
        let start = if hunk.old_len == 0 {
            hunk.old_start
        } else {
            hunk.old_start.saturating_sub(1)
        };
        if start < cursor {
            return Err(DiffError::Overlap {
                hunk: hunk_no,
                start: hunk.old_start,
            });
        }
        if start > old.len() {
            return Err(DiffError::Mismatch {
                hunk: hunk_no,
                line: start + 1,
                expected: "<start of hunk>".into(),
                found: None,
            });
        }
        out.extend_from_slice(&old[cursor..start]);
        cursor = start;
        for hl in &hunk.lines {
            match *hl {
                HunkLine::Context(text) | HunkLine::Remove(text) => {
                    let found = old.get(cursor).copied();
                    if found != Some(text) {
                        return Err(DiffError::Mismatch {
                            hunk: hunk_no,
                            line: cursor + 1,
                            expected: text.to_string(),
                            found: found.map(str::to_string),
                        });
                    }
                    if let HunkLine::Context(t) = *hl {
                        out.push(t);
                    }
                    cursor += 1;
                }
                HunkLine::Add(text) => out.push(text),
            }
        }
        if cursor == old.len() {
            if hunk.new_no_eol {
                ends_with_newline = false;
            } else if hunk.old_no_eol {
                ends_with_newline = true;
            }
        }
    }
    out.extend_from_slice(&old[cursor..]);
    let mut text = out.join("\n");
    if ends_with_newline && !out.is_empty() {
        text.push('\n');
    }
    Ok(text)
}

/// Applies a single-file unified diff to `before`. An empty diff leaves the
/// text unchanged.
pub fn apply_unified_diff(before: &str, diff: &str) -> Result<String, DiffError> {
    let files = parse_patch(diff)?;
    match files.as_slice() {
        [] => Ok(before.to_string()),
        [one] => apply_hunks(before, &one.hunks),
        _ => Err(DiffError::Malformed {
            line: 1,
            message: format!("expected one file section, found {}", files.len()),
        }),
    }
}
