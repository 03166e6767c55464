//! MiniADL tokenizer.

use std::fmt;

use crate::error::ParseError;
use crate::model::SourcePos;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Keyword {
    Architecture,
    Component,
    Port,
    In,
    Out,
    InOut,
    Complexity,
    Reads,
    Writes,
    Via,
    Resource,
    Attach,
    Before,
    Exclusive,
    Internal,
}

impl Keyword {
    pub const ALL: [Keyword; 15] = [
        Keyword::Architecture,
        Keyword::Component,
        Keyword::Port,
        Keyword::In,
        Keyword::Out,
        Keyword::InOut,
        Keyword::Complexity,
        Keyword::Reads,
        Keyword::Writes,
        Keyword::Via,
        Keyword::Resource,
        Keyword::Attach,
        Keyword::Before,
        Keyword::Exclusive,
        Keyword::Internal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Keyword::Architecture => "architecture",
            Keyword::Component => "component",
            Keyword::Port => "port",
            Keyword::In => "in",
            Keyword::Out => "out",
            Keyword::InOut => "inout",
            Keyword::Complexity => "complexity",
            Keyword::Reads => "reads",
            Keyword::Writes => "writes",
            Keyword::Via => "via",
            Keyword::Resource => "resource",
            Keyword::Attach => "attach",
            Keyword::Before => "before",
            Keyword::Exclusive => "exclusive",
            Keyword::Internal => "internal",
        }
    }

    pub fn from_ident(s: &str) -> Option<Keyword> {
        Keyword::ALL.into_iter().find(|k| k.as_str() == s)
    }
}

/// True if `s` is a reserved word and cannot name anything.
pub fn is_reserved(s: &str) -> bool {
    Keyword::from_ident(s).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Keyword(Keyword),
    Ident,
    Int,
    LBrace,
    RBrace,
    Colon,
    Semicolon,
    Dot,
    Comma,
    /// `->`
    Arrow,
    /// `<-`
    BackArrow,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Keyword(k) => write!(f, "`{}`", k.as_str()),
            TokenKind::Ident => f.write_str("identifier"),
            TokenKind::Int => f.write_str("integer"),
            TokenKind::LBrace => f.write_str("`{`"),
            TokenKind::RBrace => f.write_str("`}`"),
            TokenKind::Colon => f.write_str("`:`"),
            TokenKind::Semicolon => f.write_str("`;`"),
            TokenKind::Dot => f.write_str("`.`"),
            TokenKind::Comma => f.write_str("`,`"),
            TokenKind::Arrow => f.write_str("`->`"),
            TokenKind::BackArrow => f.write_str("`<-`"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token<'a> {
    pub kind: TokenKind,
    pub lexeme: &'a str,
    pub pos: SourcePos,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

struct Cursor<'a> {
    src: &'a str,
    offset: usize,
    line: u32,
    column: u32,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.offset..].chars().next()
    }

    fn peek_second(&self) -> Option<char> {
        let mut it = self.src[self.offset..].chars();
        it.next();
        it.next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.offset += c.len_utf8();
        if c == '\n' {
            self.line = self.line.saturating_add(1);
            self.column = 1;
        } else {
            self.column = self.column.saturating_add(1);
        }
        Some(c)
    }

    fn bump_while(&mut self, pred: impl Fn(char) -> bool) {
        while self.peek().is_some_and(&pred) {
            self.bump();
        }
    }

    fn pos(&self) -> SourcePos {
        SourcePos::new(self.line, self.column)
    }
}

/// Splits `src` into tokens, skipping whitespace and `//` comments.
pub fn tokenize(src: &str) -> Result<Vec<Token<'_>>, ParseError> {
    let mut cur = Cursor {
        src,
        offset: 0,
        line: 1,
        column: 1,
    };
    let mut tokens = Vec::new();

    while let Some(c) = cur.peek() {
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        if c == '/' && cur.peek_second() == Some('/') {
            cur.bump_while(|c| c != '\n');
            continue;
        }

        let start = cur.offset;
        let pos = cur.pos();
        let kind = if is_ident_start(c) {
            cur.bump_while(is_ident_continue);
            match Keyword::from_ident(&src[start..cur.offset]) {
                Some(k) => TokenKind::Keyword(k),
                None => TokenKind::Ident,
            }
        } else if c.is_ascii_digit() {
            cur.bump_while(|c| c.is_ascii_digit());
            TokenKind::Int
        } else {
            let two = (c, cur.peek_second());
            let kind = match two {
                ('-', Some('>')) => Some(TokenKind::Arrow),
                ('<', Some('-')) => Some(TokenKind::BackArrow),
                _ => None,
            };
            if let Some(kind) = kind {
                cur.bump();
                cur.bump();
                kind
            } else {
                let kind = match c {
                    '{' => TokenKind::LBrace,
                    '}' => TokenKind::RBrace,
                    ':' => TokenKind::Colon,
                    ';' => TokenKind::Semicolon,
                    '.' => TokenKind::Dot,
                    ',' => TokenKind::Comma,
                    _ => return Err(ParseError::lexical(format!("illegal character {c:?}"), pos)),
                };
                cur.bump();
                kind
            }
        };
        tokens.push(Token {
            kind,
            lexeme: &src[start..cur.offset],
            pos,
        });
    }
    Ok(tokens)
}

/// Line/column of the byte at `offset`, counting columns in characters.
/// Used to locate invalid UTF-8; `valid_prefix` must be well-formed.
pub(crate) fn position_after(valid_prefix: &str) -> SourcePos {
    let mut line = 1u32;
    let mut column = 1u32;
    for c in valid_prefix.chars() {
        if c == '\n' {
            line = line.saturating_add(1);
            column = 1;
        } else {
            column = column.saturating_add(1);
        }
    }
    SourcePos::new(line, column)
}
