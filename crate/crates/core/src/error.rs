use thiserror::Error;

use crate::model::SourcePos;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Input is not valid UTF-8.
    Encoding,
    /// Character that starts no token.
    Lexical,
    /// Unexpected token or end of input.
    Syntax,
    /// Well-formed text describing an invalid architecture.
    Semantic,
}

/// First error found while reading MiniADL source.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub message: String,
    pub line: u32,
    pub column: u32,
    /// Token descriptions that would have been accepted (syntax errors only).
    pub expected: Vec<String>,
}

impl ParseError {
    pub(crate) fn new(kind: ParseErrorKind, message: String, pos: SourcePos) -> Self {
        debug_assert!(!message.is_empty());
        ParseError {
            kind,
            message,
            line: pos.line.max(1),
            column: pos.column.max(1),
            expected: Vec::new(),
        }
    }

    pub(crate) fn lexical(message: String, pos: SourcePos) -> Self {
        Self::new(ParseErrorKind::Lexical, message, pos)
    }

    pub fn pos(&self) -> SourcePos {
        SourcePos::new(self.line, self.column)
    }
}
