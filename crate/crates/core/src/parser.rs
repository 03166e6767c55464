//! Recursive-descent parser for MiniADL.
//!
//! ```text
//! architecture ::= "architecture" IDENT "{" item* "}"
//! item         ::= component | resource | attach | before | exclusive | internal
//! component    ::= "component" IDENT "{" compitem* "}"
//! compitem     ::= port | complexity | access
//! port         ::= "port" IDENT ":" ("in" | "out" | "inout") ";"
//! complexity   ::= "complexity" INT ";"
//! access       ::= ("reads" | "writes") IDENT "via" IDENT ";"
//! resource     ::= "resource" IDENT ";"
//! attach       ::= "attach" portref "->" portref ";"
//! before       ::= "before" portref "->" portref ";"
//! exclusive    ::= "exclusive" portref "," portref ";"
//! internal     ::= "internal" portref "<-" portref ";"
//! portref      ::= IDENT "." IDENT
//! ```
//!
//! The grammar is LL(1); the parser stops at the first error. A
//! successfully parsed architecture has also passed [`Architecture::validate`].

use crate::error::{ParseError, ParseErrorKind};
use crate::lexer::{self, Keyword, Token, TokenKind};
use crate::model::{
    AccessMode, Architecture, Attachment, Component, Direction, ExclusivePair, InternalFlow, Port,
    PortRef, Resource, ResourceAccess, SourcePos,
};

/// Parses MiniADL from raw bytes. Invalid UTF-8 is reported at the first
/// offending byte.
pub fn parse(source: &[u8]) -> Result<Architecture, ParseError> {
    match std::str::from_utf8(source) {
        Ok(text) => parse_str(text),
        Err(e) => {
            let valid = &source[..e.valid_up_to()];
            // valid_up_to guarantees this prefix is well-formed
            let prefix = std::str::from_utf8(valid).unwrap_or_default();
            Err(ParseError::new(
                ParseErrorKind::Encoding,
                format!("invalid UTF-8 at byte offset {}", e.valid_up_to()),
                lexer::position_after(prefix),
            ))
        }
    }
}

pub fn parse_str(source: &str) -> Result<Architecture, ParseError> {
    let tokens = lexer::tokenize(source)?;
    let eof = lexer::position_after(source);
    let arch = Parser {
        tokens: &tokens,
        next: 0,
        eof,
    }
    .architecture()?;

    if let Some(v) = arch.validate().violations.into_iter().next() {
        return Err(ParseError::new(ParseErrorKind::Semantic, v.message, v.pos));
    }
    Ok(arch)
}

struct Parser<'t, 'src> {
    tokens: &'t [Token<'src>],
    next: usize,
    eof: SourcePos,
}

type PResult<T> = Result<T, ParseError>;

impl<'t, 'src> Parser<'t, 'src> {
    fn peek(&self) -> Option<&'t Token<'src>> {
        self.tokens.get(self.next)
    }

    fn peek_kind(&self) -> Option<&'t TokenKind> {
        self.peek().map(|t| &t.kind)
    }

    fn advance(&mut self) -> &'t Token<'src> {
        let t = &self.tokens[self.next];
        self.next += 1;
        t
    }

    fn unexpected(&self, expected: &[TokenKind]) -> ParseError {
        let expected: Vec<String> = expected.iter().map(|k| k.to_string()).collect();
        let wanted = match expected.as_slice() {
            [one] => one.clone(),
            many => format!("one of {}", many.join(", ")),
        };
        let (found, pos) = match self.peek() {
            Some(t) => (format!("`{}`", t.lexeme), t.pos),
            None => ("end of input".to_string(), self.eof),
        };
        let mut err = ParseError::new(
            ParseErrorKind::Syntax,
            format!("expected {wanted}, found {found}"),
            pos,
        );
        err.expected = expected;
        err
    }

    fn expect(&mut self, kind: TokenKind) -> PResult<&'t Token<'src>> {
        if self.peek_kind() == Some(&kind) {
            Ok(self.advance())
        } else {
            Err(self.unexpected(&[kind]))
        }
    }

    fn keyword(&mut self, k: Keyword) -> PResult<&'t Token<'src>> {
        self.expect(TokenKind::Keyword(k))
    }

    fn ident(&mut self) -> PResult<(String, SourcePos)> {
        let t = self.expect(TokenKind::Ident)?;
        Ok((t.lexeme.to_string(), t.pos))
    }

    fn architecture(&mut self) -> PResult<Architecture> {
        self.keyword(Keyword::Architecture)?;
        let (name, _) = self.ident()?;
        self.expect(TokenKind::LBrace)?;
        let mut arch = Architecture::new(name);
        loop {
            let Some(kind) = self.peek_kind() else {
                return Err(self.unexpected(&ITEM_START));
            };
            match kind {
                TokenKind::RBrace => {
                    self.advance();
                    break;
                }
                TokenKind::Keyword(Keyword::Component) => {
                    let c = self.component()?;
                    arch.components.push(c);
                }
                TokenKind::Keyword(Keyword::Resource) => {
                    let pos = self.advance().pos;
                    let (name, _) = self.ident()?;
                    self.expect(TokenKind::Semicolon)?;
                    arch.resources.push(Resource { name, pos });
                }
                TokenKind::Keyword(Keyword::Attach) => {
                    let a = self.connection(TokenKind::Arrow)?;
                    arch.attachments.push(a);
                }
                TokenKind::Keyword(Keyword::Before) => {
                    let a = self.connection(TokenKind::Arrow)?;
                    arch.befores.push(a);
                }
                TokenKind::Keyword(Keyword::Exclusive) => {
                    let a = self.connection(TokenKind::Comma)?;
                    arch.exclusives.push(ExclusivePair {
                        a: a.from,
                        b: a.to,
                        pos: a.pos,
                    });
                }
                TokenKind::Keyword(Keyword::Internal) => {
                    let flow = self.internal()?;
                    arch.internal_flows.push(flow);
                }
                _ => return Err(self.unexpected(&ITEM_START)),
            }
        }
        if let Some(t) = self.peek() {
            return Err(ParseError::new(
                ParseErrorKind::Syntax,
                format!("expected end of input, found `{}`", t.lexeme),
                t.pos,
            ));
        }
        Ok(arch)
    }

    fn component(&mut self) -> PResult<Component> {
        let pos = self.keyword(Keyword::Component)?.pos;
        let (name, _) = self.ident()?;
        self.expect(TokenKind::LBrace)?;
        let mut component = Component::new(name);
        component.pos = pos;
        let mut complexity_seen = false;
        loop {
            let Some(kind) = self.peek_kind() else {
                return Err(self.unexpected(&COMPITEM_START));
            };
            match kind {
                TokenKind::RBrace => {
                    self.advance();
                    return Ok(component);
                }
                TokenKind::Keyword(Keyword::Port) => {
                    let pos = self.advance().pos;
                    let (name, _) = self.ident()?;
                    self.expect(TokenKind::Colon)?;
                    let direction = match self.peek_kind() {
                        Some(TokenKind::Keyword(Keyword::In)) => Direction::In,
                        Some(TokenKind::Keyword(Keyword::Out)) => Direction::Out,
                        Some(TokenKind::Keyword(Keyword::InOut)) => Direction::InOut,
                        _ => return Err(self.unexpected(&DIRECTIONS)),
                    };
                    self.advance();
                    self.expect(TokenKind::Semicolon)?;
                    component.ports.push(Port {
                        name,
                        direction,
                        pos,
                    });
                }
                TokenKind::Keyword(Keyword::Complexity) => {
                    let pos = self.advance().pos;
                    let value = self.expect(TokenKind::Int)?;
                    let parsed = value.lexeme.parse::<u64>().map_err(|_| {
                        ParseError::new(
                            ParseErrorKind::Semantic,
                            format!("complexity `{}` is out of range", value.lexeme),
                            value.pos,
                        )
                    })?;
                    self.expect(TokenKind::Semicolon)?;
                    if complexity_seen {
                        return Err(ParseError::new(
                            ParseErrorKind::Semantic,
                            format!("complexity of `{}` declared more than once", component.name),
                            pos,
                        ));
                    }
                    complexity_seen = true;
                    component.complexity = parsed;
                }
                TokenKind::Keyword(k @ (Keyword::Reads | Keyword::Writes)) => {
                    let mode = if *k == Keyword::Reads {
                        AccessMode::Reads
                    } else {
                        AccessMode::Writes
                    };
                    let pos = self.advance().pos;
                    let (resource, _) = self.ident()?;
                    self.keyword(Keyword::Via)?;
                    let (via, _) = self.ident()?;
                    self.expect(TokenKind::Semicolon)?;
                    component.accesses.push(ResourceAccess {
                        resource,
                        mode,
                        via,
                        pos,
                    });
                }
                _ => return Err(self.unexpected(&COMPITEM_START)),
            }
        }
    }

    fn port_ref(&mut self) -> PResult<PortRef> {
        let (component, pos) = self.ident()?;
        self.expect(TokenKind::Dot)?;
        let (port, _) = self.ident()?;
        Ok(PortRef {
            component,
            port,
            pos,
        })
    }

    /// `keyword portref <sep> portref ;`
    fn connection(&mut self, sep: TokenKind) -> PResult<Attachment> {
        let pos = self.advance().pos;
        let from = self.port_ref()?;
        self.expect(sep)?;
        let to = self.port_ref()?;
        self.expect(TokenKind::Semicolon)?;
        Ok(Attachment { from, to, pos })
    }

    fn internal(&mut self) -> PResult<InternalFlow> {
        let pos = self.keyword(Keyword::Internal)?.pos;
        let out = self.port_ref()?;
        self.expect(TokenKind::BackArrow)?;
        let input = self.port_ref()?;
        self.expect(TokenKind::Semicolon)?;
        if out.component != input.component {
            return Err(ParseError::new(
                ParseErrorKind::Semantic,
                format!(
                    "`internal` must name ports of one component, found `{}` and `{}`",
                    out.component, input.component
                ),
                input.pos,
            ));
        }
        Ok(InternalFlow {
            component: out.component,
            out_port: out.port,
            in_port: input.port,
            pos,
            in_pos: input.pos,
        })
    }
}

const ITEM_START: [TokenKind; 7] = [
    TokenKind::Keyword(Keyword::Component),
    TokenKind::Keyword(Keyword::Resource),
    TokenKind::Keyword(Keyword::Attach),
    TokenKind::Keyword(Keyword::Before),
    TokenKind::Keyword(Keyword::Exclusive),
    TokenKind::Keyword(Keyword::Internal),
    TokenKind::RBrace,
];

const COMPITEM_START: [TokenKind; 5] = [
    TokenKind::Keyword(Keyword::Port),
    TokenKind::Keyword(Keyword::Complexity),
    TokenKind::Keyword(Keyword::Reads),
    TokenKind::Keyword(Keyword::Writes),
    TokenKind::RBrace,
];

const DIRECTIONS: [TokenKind; 3] = [
    TokenKind::Keyword(Keyword::In),
    TokenKind::Keyword(Keyword::Out),
    TokenKind::Keyword(Keyword::InOut),
];
