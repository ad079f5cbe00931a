use std::sync::Arc;

use super::ParseError;
use crate::ast::SourceSpan;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Int,
    Float,
    Str,
    Char,
    Punct,
    Eof,
}

#[derive(Debug, Clone)]
pub struct Token {
    pub kind: TokenKind,
    /// Source text of the token. For string and char literals, the text
    /// between the quotes, escapes left as written.
    pub text: String,
    pub start: (u32, u32),
    pub end: (u32, u32),
}

impl Token {
    pub fn is(&self, punct: &str) -> bool {
        self.kind == TokenKind::Punct && self.text == punct
    }

    pub fn is_ident(&self, name: &str) -> bool {
        self.kind == TokenKind::Ident && self.text == name
    }
}

const PUNCTS: &[&str] = &[
    "&&", "||", "==", "!=", "<=", ">=", "+=", "-=", "*=", "/=", "%=", "++", "--", "+", "-", "*",
    "/", "%", "<", ">", "=", "!", "~", "?", ":", ";", ",", ".", "(", ")", "{", "}", "[", "]", "&",
    "|", "^",
];

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: u32,
    col: u32,
    file: &'a Arc<str>,
}

impl Cursor<'_> {
    fn peek(&self, ahead: usize) -> Option<char> {
        self.chars.get(self.pos + ahead).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.pos).copied()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn here(&self) -> (u32, u32) {
        (self.line, self.col)
    }

    fn error(&self, msg: impl Into<String>, start: (u32, u32)) -> ParseError {
        ParseError {
            message: msg.into(),
            span: SourceSpan::new(self.file.clone(), start, start),
        }
    }
}

pub fn tokenize(source: &str, file: &Arc<str>) -> Result<Vec<Token>, ParseError> {
    let mut cur = Cursor {
        chars: source.chars().collect(),
        pos: 0,
        line: 1,
        col: 1,
        file,
    };
    let mut tokens = Vec::new();
    loop {
        skip_trivia(&mut cur)?;
        let start = cur.here();
        let Some(c) = cur.peek(0) else {
            tokens.push(Token {
                kind: TokenKind::Eof,
                text: String::new(),
                start,
                end: start,
            });
            return Ok(tokens);
        };
        let mut text = String::new();
        let mut end = start;
        let kind = if c.is_ascii_alphabetic() || c == '_' || c == '$' {
            while let Some(c) = cur.peek(0) {
                if c.is_ascii_alphanumeric() || c == '_' || c == '$' {
                    end = cur.here();
                    text.push(c);
                    cur.bump();
                } else {
                    break;
                }
            }
            TokenKind::Ident
        } else if c.is_ascii_digit()
            || (c == '.' && cur.peek(1).is_some_and(|d| d.is_ascii_digit()))
        {
            let (kind, t, e) = lex_number(&mut cur)?;
            text = t;
            end = e;
            kind
        } else if c == '"' || c == '\'' {
            let quote = c;
            cur.bump();
            loop {
                match cur.peek(0) {
                    None | Some('\n') => {
                        return Err(cur.error("unterminated literal", start));
                    }
                    Some('\\') => {
                        text.push('\\');
                        cur.bump();
                        match cur.bump() {
                            Some('\n') | None => {
                                return Err(cur.error("unterminated literal", start))
                            }
                            Some(e) => text.push(e),
                        }
                    }
                    Some(q) if q == quote => {
                        end = cur.here();
                        cur.bump();
                        break;
                    }
                    Some(other) => {
                        text.push(other);
                        cur.bump();
                    }
                }
            }
            if quote == '"' {
                TokenKind::Str
            } else {
                TokenKind::Char
            }
        } else {
            let rest: String = cur.chars[cur.pos..cur.chars.len().min(cur.pos + 3)]
                .iter()
                .collect();
            let Some(p) = PUNCTS.iter().find(|p| rest.starts_with(**p)) else {
                return Err(cur.error(format!("unexpected character `{c}`"), start));
            };
            for _ in 0..p.chars().count() {
                end = cur.here();
                cur.bump();
            }
            text.push_str(p);
            TokenKind::Punct
        };
        tokens.push(Token {
            kind,
            text,
            start,
            end,
        });
    }
}

fn skip_trivia(cur: &mut Cursor<'_>) -> Result<(), ParseError> {
    loop {
        match (cur.peek(0), cur.peek(1)) {
            (Some(c), _) if c.is_whitespace() => {
                cur.bump();
            }
            (Some('/'), Some('/')) => {
                while let Some(c) = cur.peek(0) {
                    if c == '\n' {
                        break;
                    }
                    cur.bump();
                }
            }
            (Some('/'), Some('*')) => {
                let start = cur.here();
                cur.bump();
                cur.bump();
                loop {
                    match (cur.peek(0), cur.peek(1)) {
                        (Some('*'), Some('/')) => {
                            cur.bump();
                            cur.bump();
                            break;
                        }
                        (Some(_), _) => {
                            cur.bump();
                        }
                        (None, _) => return Err(cur.error("unterminated comment", start)),
                    }
                }
            }
            _ => return Ok(()),
        }
    }
}

fn lex_number(cur: &mut Cursor<'_>) -> Result<(TokenKind, String, (u32, u32)), ParseError> {
    let start = cur.here();
    let mut text = String::new();
    let mut end = start;
    let mut take = |cur: &mut Cursor<'_>, text: &mut String| {
        end = cur.here();
        text.push(cur.bump().unwrap());
    };
    let mut kind = TokenKind::Int;
    if cur.peek(0) == Some('0') && matches!(cur.peek(1), Some('x' | 'X')) {
        take(cur, &mut text);
        take(cur, &mut text);
        while cur
            .peek(0)
            .is_some_and(|c| c.is_ascii_hexdigit() || c == '_')
        {
            take(cur, &mut text);
        }
    } else {
        while cur.peek(0).is_some_and(|c| c.is_ascii_digit() || c == '_') {
            take(cur, &mut text);
        }
        if cur.peek(0) == Some('.') && cur.peek(1).is_some_and(|c| c.is_ascii_digit()) {
            kind = TokenKind::Float;
            take(cur, &mut text);
            while cur.peek(0).is_some_and(|c| c.is_ascii_digit() || c == '_') {
                take(cur, &mut text);
            }
        } else if cur.peek(0) == Some('.') && !cur.peek(1).is_some_and(|c| c.is_alphabetic()) {
            // `1.` is a float literal; `1.foo` is not numeric syntax we accept.
            kind = TokenKind::Float;
            take(cur, &mut text);
        }
        if matches!(cur.peek(0), Some('e' | 'E')) {
            kind = TokenKind::Float;
            take(cur, &mut text);
            if matches!(cur.peek(0), Some('+' | '-')) {
                take(cur, &mut text);
            }
            if !cur.peek(0).is_some_and(|c| c.is_ascii_digit()) {
                return Err(cur.error("malformed exponent", start));
            }
            while cur.peek(0).is_some_and(|c| c.is_ascii_digit()) {
                take(cur, &mut text);
            }
        }
    }
    match cur.peek(0) {
        Some('f' | 'F' | 'd' | 'D') => {
            kind = TokenKind::Float;
            take(cur, &mut text);
        }
        Some('l' | 'L') if kind == TokenKind::Int => take(cur, &mut text),
        _ => {}
    }
    if cur
        .peek(0)
        .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
    {
        return Err(cur.error("malformed number literal", start));
    }
    Ok((kind, text, end))
}
