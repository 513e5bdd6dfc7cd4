use std::fmt;

/// Diagnostic severity. Errors reject their subject (a tree, a sentence, a
/// run); warnings report degraded or suspicious output that was still
/// produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Warning => "warning",
            Severity::Error => "error",
        })
    }
}

/// Source position of a diagnostic: the ordinal of the tree or sentence in
/// its stream, and a line/column when the problem is textual.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Location {
    pub ordinal: Option<usize>,
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn part(f: &mut fmt::Formatter<'_>, value: Option<usize>) -> fmt::Result {
            match value {
                Some(v) => write!(f, "{v}"),
                None => f.write_str("-"),
            }
        }
        part(f, self.ordinal)?;
        f.write_str(":")?;
        part(f, self.line)?;
        f.write_str(":")?;
        part(f, self.column)
    }
}

/// Stable machine-readable diagnostic codes.
pub mod codes {
    pub const UNBALANCED_BRACKETS: &str = "unbalanced-brackets";
    pub const EMPTY_PHRASE: &str = "empty-phrase";
    pub const MALFORMED_MORPHEME: &str = "malformed-morpheme";
    pub const UNKNOWN_TAG: &str = "unknown-tag";
    pub const UNKNOWN_PHRASE_LABEL: &str = "unknown-phrase-label";
    pub const UNKNOWN_FUNCTION_TAG: &str = "unknown-function-tag";
    pub const ROOT_NOT_SENTENCE: &str = "root-not-sentence";
    pub const STRAY_TEXT: &str = "stray-text";
    pub const BAD_ESCAPE: &str = "bad-escape";
    pub const MISSING_TAB: &str = "missing-tab";
    pub const EMPTY_ANALYSIS: &str = "empty-analysis";
    pub const BAD_COLUMN_COUNT: &str = "bad-column-count";
    pub const BAD_TOKEN_ID: &str = "bad-token-id";
    pub const BAD_HEAD: &str = "bad-head";
    pub const HEAD_OUT_OF_RANGE: &str = "head-out-of-range";
    pub const SELF_HEAD: &str = "self-head";
    pub const UNKNOWN_LABEL: &str = "unknown-label";
    pub const COLUMN_ARITY: &str = "column-arity";
    pub const UNREPRESENTABLE: &str = "unrepresentable";
    pub const UNBALANCED_PARENS: &str = "unbalanced-parens";
    pub const SURFACE_MISMATCH: &str = "surface-mismatch";
    pub const NO_ROOT: &str = "no-root";
    pub const MULTIPLE_ROOTS: &str = "multiple-roots";
    pub const ROOT_LABEL: &str = "root-label";
    pub const CYCLE: &str = "cycle";
    pub const NON_PROJECTIVE: &str = "non-projective";
    pub const LABEL_NOT_ALLOWED: &str = "label-not-allowed";
    pub const SUBST_LENGTH_MISMATCH: &str = "subst-length-mismatch";
    pub const SUBST_UNALIGNED: &str = "subst-unaligned";
}

/// One record of the diagnostics stream: what went wrong, where, how badly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub location: Location,
    pub code: &'static str,
    pub message: String,
}

impl Diagnostic {
    pub fn error(code: &'static str, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Error,
            location: Location::default(),
            code,
            message: message.into(),
        }
    }

    pub fn warning(code: &'static str, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Warning,
            location: Location::default(),
            code,
            message: message.into(),
        }
    }

    pub fn at_line(mut self, line: usize, column: usize) -> Self {
        self.location.line = Some(line);
        self.location.column = Some(column);
        self
    }

    pub fn at_ordinal(mut self, ordinal: usize) -> Self {
        self.location.ordinal = Some(ordinal);
        self
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

/// Tab-separated one-line rendering: `severity<TAB>location<TAB>code<TAB>message`.
impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}",
            self.severity, self.location, self.code, self.message
        )
    }
}
