//! Recursive-descent parser for the Java-like subset.
//!
//! The accepted language: class declarations (optionally `extends` one type)
//! holding fields, methods and constructors; statements `{}`, `if`/`else`,
//! `while`, classic and enhanced `for`, `try`/`catch`/`finally`, `return`,
//! `throw`, `break`, `continue`, local variable declarations and expression
//! statements; expressions with Java precedence over assignment operators,
//! `?:`, `||`, `&&`, `|`, `^`, `&`, equality, relational, additive,
//! multiplicative and unary operators, plus calls, field and array access,
//! `new`, identifiers and literals. Anything else is rejected with the span of
//! the first offending token.
//!
//! Tree shape conventions relied on by the differ and the detectors:
//! - `If` children are `[condition, then-Block, Else?]`; bodies that are a
//!   single statement are wrapped in an implicit `Block`.
//! - `Else` has exactly one child, a `Block` or an `If` (`else if` chains nest).
//! - `MethodCall` always has its receiver as child 0. Unqualified calls get an
//!   implicit receiver: a `VariableRead` with an empty label.
//! - Declarations (`ClassDecl`, `FieldDecl`, `MethodDecl`, `Parameter`,
//!   `VarDecl`, `CatchClause`) carry the declared name as their label; types
//!   and modifiers are `TypeRef` / `Modifier` children.

mod lexer;

use std::sync::Arc;

use crate::ast::{Ast, AstBuilder, BuildId, NodeKind, SourceSpan};
use lexer::{Token, TokenKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{}:{}:{}: {message}", span.file, span.start_line, span.start_col)]
pub struct ParseError {
    pub message: String,
    pub span: SourceSpan,
}

/// Parses `source` into a tree rooted at a `CompilationUnit`.
pub fn parse(source: &str, file: &str) -> Result<Ast, ParseError> {
    let file: Arc<str> = file.into();
    let tokens = lexer::tokenize(source, &file)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        b: AstBuilder::new(file.clone()),
        file,
    };
    let root = p.compilation_unit()?;
    Ok(p.b.finish(root))
}

const MODIFIERS: &[&str] = &[
    "public",
    "private",
    "protected",
    "static",
    "final",
    "abstract",
    "synchronized",
    "native",
    "transient",
    "volatile",
    "strictfp",
];

const RESERVED: &[&str] = &[
    "class",
    "if",
    "else",
    "while",
    "for",
    "do",
    "try",
    "catch",
    "finally",
    "return",
    "throw",
    "break",
    "continue",
    "new",
    "switch",
    "case",
    "default",
    "import",
    "package",
    "interface",
    "enum",
    "extends",
    "implements",
    "instanceof",
    "throws",
    "void",
    "true",
    "false",
    "null",
    "public",
    "private",
    "protected",
    "static",
    "final",
    "abstract",
    "synchronized",
    "native",
    "transient",
    "volatile",
    "strictfp",
    "assert",
    "goto",
    "const",
];

const PRIMITIVES: &[&str] = &[
    "int", "long", "short", "byte", "char", "boolean", "float", "double", "void",
];

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    b: AstBuilder,
    file: Arc<str>,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, ahead: usize) -> &Token {
        let i = (self.pos + ahead).min(self.tokens.len() - 1);
        &self.tokens[i]
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.kind != TokenKind::Eof {
            self.pos += 1;
        }
        t
    }

    fn prev_end(&self) -> (u32, u32) {
        self.tokens[self.pos.saturating_sub(1)].end
    }

    fn span(&self, start: (u32, u32)) -> SourceSpan {
        SourceSpan::new(self.file.clone(), start, self.prev_end())
    }

    fn token_span(&self, t: &Token) -> SourceSpan {
        SourceSpan::new(self.file.clone(), t.start, t.end)
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let t = self.peek();
        let found = if t.kind == TokenKind::Eof {
            "end of input".to_string()
        } else {
            format!("`{}`", t.text)
        };
        ParseError {
            message: format!("{}, found {found}", message.into()),
            span: self.token_span(t),
        }
    }

    fn eat(&mut self, punct: &str) -> bool {
        if self.peek().is(punct) {
            self.advance();
            true
        } else {
            false
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if self.peek().is_ident(kw) {
            self.advance();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, punct: &str) -> PResult<Token> {
        if self.peek().is(punct) {
            Ok(self.advance())
        } else {
            Err(self.error_here(format!("expected `{punct}`")))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> PResult<Token> {
        if self.peek().is_ident(kw) {
            Ok(self.advance())
        } else {
            Err(self.error_here(format!("expected `{kw}`")))
        }
    }

    fn is_name(t: &Token) -> bool {
        t.kind == TokenKind::Ident && !RESERVED.contains(&t.text.as_str())
    }

    fn expect_name(&mut self) -> PResult<Token> {
        if Self::is_name(self.peek()) {
            Ok(self.advance())
        } else {
            Err(self.error_here("expected identifier"))
        }
    }

    // ---- declarations ----

    fn compilation_unit(&mut self) -> PResult<BuildId> {
        let start = self.peek().start;
        let mut classes = Vec::new();
        while self.peek().kind != TokenKind::Eof {
            classes.push(self.class_decl()?);
        }
        let span = if classes.is_empty() {
            SourceSpan::new(self.file.clone(), (1, 1), (1, 1))
        } else {
            self.span(start)
        };
        Ok(self.b.node(NodeKind::CompilationUnit, "", span, classes))
    }

    fn modifiers(&mut self) -> Vec<BuildId> {
        let mut out = Vec::new();
        while self.peek().kind == TokenKind::Ident && MODIFIERS.contains(&self.peek().text.as_str())
        {
            let t = self.advance();
            let span = self.token_span(&t);
            out.push(self.b.node(NodeKind::Modifier, t.text, span, vec![]));
        }
        out
    }

    fn class_decl(&mut self) -> PResult<BuildId> {
        let start = self.peek().start;
        let mut children = self.modifiers();
        self.expect_keyword("class")?;
        let name = self.expect_name()?;
        if self.eat_keyword("extends") {
            children.push(self.type_ref()?);
        }
        self.expect("{")?;
        while !self.peek().is("}") {
            if self.peek().kind == TokenKind::Eof {
                return Err(self.error_here("expected `}`"));
            }
            children.push(self.member(&name.text)?);
        }
        self.expect("}")?;
        let span = self.span(start);
        Ok(self.b.node(NodeKind::ClassDecl, name.text, span, children))
    }

    fn member(&mut self, class_name: &str) -> PResult<BuildId> {
        let start = self.peek().start;
        let mut children = self.modifiers();
        // Constructor: `Name (`.
        if self.peek().is_ident(class_name) && self.peek_at(1).is("(") {
            let name = self.advance();
            self.method_rest(start, name, children)
        } else {
            children.push(self.type_ref()?);
            let name = self.expect_name()?;
            if self.peek().is("(") {
                self.method_rest(start, name, children)
            } else {
                if self.eat("=") {
                    children.push(self.expression()?);
                }
                self.expect(";")?;
                let span = self.span(start);
                Ok(self.b.node(NodeKind::FieldDecl, name.text, span, children))
            }
        }
    }

    fn method_rest(
        &mut self,
        start: (u32, u32),
        name: Token,
        mut children: Vec<BuildId>,
    ) -> PResult<BuildId> {
        self.expect("(")?;
        if !self.peek().is(")") {
            loop {
                children.push(self.parameter()?);
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect(")")?;
        if self.eat_keyword("throws") {
            loop {
                children.push(self.type_ref()?);
                if !self.eat(",") {
                    break;
                }
            }
        }
        children.push(self.block()?);
        let span = self.span(start);
        Ok(self.b.node(NodeKind::MethodDecl, name.text, span, children))
    }

    fn parameter(&mut self) -> PResult<BuildId> {
        let start = self.peek().start;
        let mut children = self.modifiers();
        children.push(self.type_ref()?);
        let name = self.expect_name()?;
        let span = self.span(start);
        Ok(self.b.node(NodeKind::Parameter, name.text, span, children))
    }

    /// `Name(.Name)*(<args>)?([])*`, rendered into a single label.
    fn type_text(&mut self) -> PResult<String> {
        let t = self.peek().clone();
        let mut text = if PRIMITIVES.contains(&t.text.as_str()) || Self::is_name(&t) {
            self.advance();
            t.text
        } else {
            return Err(self.error_here("expected type"));
        };
        while self.peek().is(".") && Self::is_name(self.peek_at(1)) {
            self.advance();
            text.push('.');
            text.push_str(&self.advance().text);
        }
        if self.eat("<") {
            text.push('<');
            if !self.peek().is(">") {
                loop {
                    if self.eat("?") {
                        text.push('?');
                        if self.eat_keyword("extends") {
                            text.push_str(" extends ");
                            text.push_str(&self.type_text()?);
                        }
                    } else {
                        text.push_str(&self.type_text()?);
                    }
                    if self.eat(",") {
                        text.push_str(", ");
                    } else {
                        break;
                    }
                }
            }
            self.expect(">")?;
            text.push('>');
        }
        while self.peek().is("[") && self.peek_at(1).is("]") {
            self.advance();
            self.advance();
            text.push_str("[]");
        }
        Ok(text)
    }

    fn type_ref(&mut self) -> PResult<BuildId> {
        let start = self.peek().start;
        let text = self.type_text()?;
        let span = self.span(start);
        Ok(self.b.node(NodeKind::TypeRef, text, span, vec![]))
    }

    // ---- statements ----

    fn block(&mut self) -> PResult<BuildId> {
        let start = self.expect("{")?.start;
        let mut stmts = Vec::new();
        while !self.peek().is("}") {
            if self.peek().kind == TokenKind::Eof {
                return Err(self.error_here("expected `}`"));
            }
            stmts.push(self.statement()?);
        }
        self.expect("}")?;
        let span = self.span(start);
        Ok(self.b.node(NodeKind::Block, "", span, stmts))
    }

    /// A statement in a branch or loop body; non-block bodies get an implicit block.
    fn body(&mut self) -> PResult<BuildId> {
        if self.peek().is("{") {
            return self.block();
        }
        let stmt = self.statement()?;
        let span = self.b.span_of(stmt).clone();
        Ok(self.b.node(NodeKind::Block, "", span, vec![stmt]))
    }

    fn statement(&mut self) -> PResult<BuildId> {
        let t = self.peek().clone();
        let start = t.start;
        if t.is("{") {
            return self.block();
        }
        if t.kind == TokenKind::Ident {
            match t.text.as_str() {
                "if" => return self.if_stmt(),
                "while" => {
                    self.advance();
                    self.expect("(")?;
                    let cond = self.expression()?;
                    self.expect(")")?;
                    let body = self.body()?;
                    let span = self.span(start);
                    return Ok(self.b.node(NodeKind::WhileLoop, "", span, vec![cond, body]));
                }
                "for" => return self.for_stmt(),
                "try" => return self.try_stmt(),
                "return" => {
                    self.advance();
                    let mut children = Vec::new();
                    if !self.peek().is(";") {
                        children.push(self.expression()?);
                    }
                    self.expect(";")?;
                    let span = self.span(start);
                    return Ok(self.b.node(NodeKind::Return, "", span, children));
                }
                "throw" => {
                    self.advance();
                    let e = self.expression()?;
                    self.expect(";")?;
                    let span = self.span(start);
                    return Ok(self.b.node(NodeKind::Throw, "", span, vec![e]));
                }
                "break" | "continue" => {
                    self.advance();
                    let label = if Self::is_name(self.peek()) {
                        self.advance().text
                    } else {
                        String::new()
                    };
                    self.expect(";")?;
                    let kind = if t.text == "break" {
                        NodeKind::Break
                    } else {
                        NodeKind::Continue
                    };
                    let span = self.span(start);
                    return Ok(self.b.node(kind, label, span, vec![]));
                }
                "final" => {
                    let decl = self.var_decl(true)?;
                    self.expect(";")?;
                    return Ok(decl);
                }
                "else" | "catch" | "finally" => {
                    return Err(self.error_here("unexpected keyword"));
                }
                _ => {}
            }
            if let Some(decl) = self.try_var_decl()? {
                self.expect(";")?;
                return Ok(decl);
            }
        }
        let e = self.expression()?;
        self.expect(";")?;
        let span = self.span(start);
        Ok(self.b.node(NodeKind::ExpressionStmt, "", span, vec![e]))
    }

    /// Speculatively parses `Type name` followed by `=`, `;`, `:` or `,`.
    fn try_var_decl(&mut self) -> PResult<Option<BuildId>> {
        let save = self.pos;
        let looks_like_decl = self.type_text().is_ok()
            && Self::is_name(self.peek())
            && matches!(self.peek_at(1).text.as_str(), "=" | ";" | ":" | ",")
            && self.peek_at(1).kind == TokenKind::Punct;
        self.pos = save;
        if looks_like_decl {
            Ok(Some(self.var_decl(true)?))
        } else {
            Ok(None)
        }
    }

    fn var_decl(&mut self, allow_init: bool) -> PResult<BuildId> {
        let start = self.peek().start;
        let mut children = self.modifiers();
        children.push(self.type_ref()?);
        let name = self.expect_name()?;
        if self.peek().is(",") {
            return Err(self.error_here("multiple declarators are not supported"));
        }
        if allow_init && self.eat("=") {
            children.push(self.expression()?);
        }
        let span = self.span(start);
        Ok(self.b.node(NodeKind::VarDecl, name.text, span, children))
    }

    fn if_stmt(&mut self) -> PResult<BuildId> {
        let start = self.expect_keyword("if")?.start;
        self.expect("(")?;
        let cond = self.expression()?;
        self.expect(")")?;
        let then = self.body()?;
        let mut children = vec![cond, then];
        if self.peek().is_ident("else") {
            let else_start = self.advance().start;
            let branch = if self.peek().is_ident("if") {
                self.if_stmt()?
            } else {
                self.body()?
            };
            let span = self.span(else_start);
            children.push(self.b.node(NodeKind::Else, "", span, vec![branch]));
        }
        let span = self.span(start);
        Ok(self.b.node(NodeKind::If, "", span, children))
    }

    fn for_stmt(&mut self) -> PResult<BuildId> {
        let start = self.expect_keyword("for")?.start;
        self.expect("(")?;
        // Enhanced for: `for (T x : expr)`.
        let save = self.pos;
        self.modifiers();
        let enhanced =
            self.type_text().is_ok() && Self::is_name(self.peek()) && self.peek_at(1).is(":");
        self.pos = save;
        if enhanced {
            let var = self.var_decl(false)?;
            self.expect(":")?;
            let iterable = self.expression()?;
            self.expect(")")?;
            let body = self.body()?;
            let span = self.span(start);
            return Ok(self
                .b
                .node(NodeKind::ForLoop, ":", span, vec![var, iterable, body]));
        }
        let mut children = Vec::new();
        if !self.peek().is(";") {
            let init_is_decl = self.peek().is_ident("final") || {
                let save = self.pos;
                let ok = self.type_text().is_ok() && Self::is_name(self.peek());
                self.pos = save;
                ok
            };
            if init_is_decl {
                children.push(self.var_decl(true)?);
            } else {
                loop {
                    children.push(self.expression_stmt_no_semi()?);
                    if !self.eat(",") {
                        break;
                    }
                }
            }
        }
        self.expect(";")?;
        if self.peek().is(";") {
            return Err(self.error_here("a loop condition is required"));
        }
        children.push(self.expression()?);
        self.expect(";")?;
        if !self.peek().is(")") {
            loop {
                children.push(self.expression_stmt_no_semi()?);
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect(")")?;
        children.push(self.body()?);
        let span = self.span(start);
        Ok(self.b.node(NodeKind::ForLoop, "", span, children))
    }

    fn expression_stmt_no_semi(&mut self) -> PResult<BuildId> {
        let start = self.peek().start;
        let e = self.expression()?;
        let span = self.span(start);
        Ok(self.b.node(NodeKind::ExpressionStmt, "", span, vec![e]))
    }

    fn try_stmt(&mut self) -> PResult<BuildId> {
        let start = self.expect_keyword("try")?.start;
        if self.peek().is("(") {
            return Err(self.error_here("try-with-resources is not supported"));
        }
        let mut children = vec![self.block()?];
        while self.peek().is_ident("catch") {
            let cstart = self.advance().start;
            self.expect("(")?;
            let tstart = self.peek().start;
            let mut text = self.type_text()?;
            while self.eat("|") {
                text.push_str(" | ");
                text.push_str(&self.type_text()?);
            }
            let tspan = self.span(tstart);
            let ty = self.b.node(NodeKind::TypeRef, text, tspan, vec![]);
            let name = self.expect_name()?;
            self.expect(")")?;
            let body = self.block()?;
            let span = self.span(cstart);
            children.push(
                self.b
                    .node(NodeKind::CatchClause, name.text, span, vec![ty, body]),
            );
        }
        if self.peek().is_ident("finally") {
            let fstart = self.advance().start;
            let body = self.block()?;
            let span = self.span(fstart);
            children.push(self.b.node(NodeKind::FinallyBlock, "", span, vec![body]));
        }
        if children.len() == 1 {
            return Err(self.error_here("expected `catch` or `finally`"));
        }
        let span = self.span(start);
        Ok(self.b.node(NodeKind::TryBlock, "", span, children))
    }

    // ---- expressions ----

    fn expression(&mut self) -> PResult<BuildId> {
        let start = self.peek().start;
        let lhs = self.ternary()?;
        let t = self.peek().clone();
        if t.kind == TokenKind::Punct
            && matches!(t.text.as_str(), "=" | "+=" | "-=" | "*=" | "/=" | "%=")
        {
            if !matches!(
                self.b.kind_of(lhs),
                NodeKind::VariableRead | NodeKind::FieldAccess | NodeKind::ArrayAccess
            ) {
                return Err(self.error_here("invalid assignment target before"));
            }
            self.advance();
            let rhs = self.expression()?;
            let span = self.span(start);
            return Ok(self
                .b
                .node(NodeKind::Assignment, t.text, span, vec![lhs, rhs]));
        }
        Ok(lhs)
    }

    fn ternary(&mut self) -> PResult<BuildId> {
        let start = self.peek().start;
        let cond = self.binary(0)?;
        if self.eat("?") {
            let then = self.expression()?;
            self.expect(":")?;
            let otherwise = self.ternary()?;
            let span = self.span(start);
            return Ok(self
                .b
                .node(NodeKind::Ternary, "", span, vec![cond, then, otherwise]));
        }
        Ok(cond)
    }

    fn binary(&mut self, level: usize) -> PResult<BuildId> {
        const LEVELS: &[&[&str]] = &[
            &["||"],
            &["&&"],
            &["|"],
            &["^"],
            &["&"],
            &["==", "!="],
            &["<", "<=", ">", ">="],
            &["+", "-"],
            &["*", "/", "%"],
        ];
        if level == LEVELS.len() {
            return self.unary();
        }
        let start = self.peek().start;
        let mut lhs = self.binary(level + 1)?;
        loop {
            let t = self.peek();
            if t.kind != TokenKind::Punct || !LEVELS[level].contains(&t.text.as_str()) {
                break;
            }
            let op = self.advance().text;
            let rhs = self.binary(level + 1)?;
            let span = self.span(start);
            lhs = self.b.node(NodeKind::BinaryOp, op, span, vec![lhs, rhs]);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<BuildId> {
        let t = self.peek().clone();
        if t.kind == TokenKind::Punct
            && matches!(t.text.as_str(), "!" | "-" | "+" | "~" | "++" | "--")
        {
            self.advance();
            let operand = self.unary()?;
            let span = self.span(t.start);
            return Ok(self.b.node(NodeKind::UnaryOp, t.text, span, vec![operand]));
        }
        let start = t.start;
        let mut e = self.postfix()?;
        while self.peek().is("++") || self.peek().is("--") {
            let op = format!("post{}", self.advance().text);
            let span = self.span(start);
            e = self.b.node(NodeKind::UnaryOp, op, span, vec![e]);
        }
        Ok(e)
    }

    fn arguments(&mut self) -> PResult<Vec<BuildId>> {
        self.expect("(")?;
        let mut args = Vec::new();
        if !self.peek().is(")") {
            loop {
                args.push(self.expression()?);
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect(")")?;
        Ok(args)
    }

    fn postfix(&mut self) -> PResult<BuildId> {
        let start = self.peek().start;
        let mut e = self.primary()?;
        loop {
            if self.peek().is(".") {
                self.advance();
                let name = self.peek().clone();
                let is_member = Self::is_name(&name) || name.is_ident("class");
                if !is_member {
                    return Err(self.error_here("expected member name"));
                }
                self.advance();
                if self.peek().is("(") {
                    let mut children = vec![e];
                    children.extend(self.arguments()?);
                    let span = self.span(start);
                    e = self.b.node(NodeKind::MethodCall, name.text, span, children);
                } else {
                    let span = self.span(start);
                    e = self.b.node(NodeKind::FieldAccess, name.text, span, vec![e]);
                }
            } else if self.peek().is("[") {
                self.advance();
                let index = self.expression()?;
                self.expect("]")?;
                let span = self.span(start);
                e = self.b.node(NodeKind::ArrayAccess, "", span, vec![e, index]);
            } else {
                return Ok(e);
            }
        }
    }

    fn primary(&mut self) -> PResult<BuildId> {
        let t = self.peek().clone();
        let span = self.token_span(&t);
        match t.kind {
            TokenKind::Int => {
                self.advance();
                Ok(self.b.node(NodeKind::LiteralInt, t.text, span, vec![]))
            }
            TokenKind::Float => {
                self.advance();
                Ok(self.b.node(NodeKind::LiteralFloat, t.text, span, vec![]))
            }
            TokenKind::Str => {
                self.advance();
                Ok(self.b.node(NodeKind::LiteralString, t.text, span, vec![]))
            }
            TokenKind::Char => {
                self.advance();
                Ok(self.b.node(NodeKind::LiteralChar, t.text, span, vec![]))
            }
            TokenKind::Punct if t.text == "(" => {
                self.advance();
                let e = self.expression()?;
                self.expect(")")?;
                Ok(e)
            }
            TokenKind::Ident => match t.text.as_str() {
                "null" => {
                    self.advance();
                    Ok(self.b.node(NodeKind::LiteralNull, "null", span, vec![]))
                }
                "true" | "false" => {
                    self.advance();
                    Ok(self.b.node(NodeKind::LiteralBool, t.text, span, vec![]))
                }
                "this" | "super" => {
                    self.advance();
                    Ok(self.b.node(NodeKind::VariableRead, t.text, span, vec![]))
                }
                "new" => self.creation(),
                _ if Self::is_name(&t) || PRIMITIVES.contains(&t.text.as_str()) => {
                    self.advance();
                    if self.peek().is("(") {
                        let receiver = self.b.node(NodeKind::VariableRead, "", span, vec![]);
                        let mut children = vec![receiver];
                        children.extend(self.arguments()?);
                        let span = self.span(t.start);
                        Ok(self.b.node(NodeKind::MethodCall, t.text, span, children))
                    } else {
                        Ok(self.b.node(NodeKind::VariableRead, t.text, span, vec![]))
                    }
                }
                _ => Err(self.error_here("expected expression")),
            },
            _ => Err(self.error_here("expected expression")),
        }
    }

    fn creation(&mut self) -> PResult<BuildId> {
        let start = self.expect_keyword("new")?.start;
        let t = self.peek().clone();
        if !(Self::is_name(&t) || PRIMITIVES.contains(&t.text.as_str())) {
            return Err(self.error_here("expected type"));
        }
        // Parse the type without array suffixes so `new T[n]` stays distinguishable.
        let mut text = t.text.clone();
        self.advance();
        while self.peek().is(".") && Self::is_name(self.peek_at(1)) {
            self.advance();
            text.push('.');
            text.push_str(&self.advance().text);
        }
        if self.peek().is("<") {
            self.advance();
            text.push('<');
            if !self.peek().is(">") {
                loop {
                    text.push_str(&self.type_text()?);
                    if self.eat(",") {
                        text.push_str(", ");
                    } else {
                        break;
                    }
                }
            }
            self.expect(">")?;
            text.push('>');
        }
        if self.eat("[") {
            let dim = self.expression()?;
            self.expect("]")?;
            text.push_str("[]");
            let span = self.span(start);
            return Ok(self
                .b
                .node(NodeKind::ConstructorCall, text, span, vec![dim]));
        }
        let args = self.arguments()?;
        if self.peek().is("{") {
            return Err(self.error_here("anonymous classes are not supported"));
        }
        let span = self.span(start);
        Ok(self.b.node(NodeKind::ConstructorCall, text, span, args))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::{isomorphic, NodeId};

    fn kinds_path(ast: &Ast) -> Vec<NodeKind> {
        ast.ids().map(|id| ast.kind(id)).collect()
    }

    fn find(ast: &Ast, kind: NodeKind) -> NodeId {
        ast.ids().find(|&id| ast.kind(id) == kind).unwrap()
    }

    #[test]
    fn minimal_program() {
        let ast = parse("class C { void m() { return; } }", "C.java").unwrap();
        assert_eq!(
            kinds_path(&ast),
            [
                NodeKind::CompilationUnit,
                NodeKind::ClassDecl,
                NodeKind::MethodDecl,
                NodeKind::TypeRef,
                NodeKind::Block,
                NodeKind::Return
            ]
        );
    }

    #[test]
    fn null_guard_condition_shape() {
        let src = "class C { boolean m() { if (markers == null) { return false; } return true; } }";
        let ast = parse(src, "C.java").unwrap();
        let if_node = find(&ast, NodeKind::If);
        let cond = ast.children(if_node)[0];
        assert_eq!(ast.kind(cond), NodeKind::BinaryOp);
        assert_eq!(ast.label(cond), "==");
        let ops = ast.children(cond);
        assert_eq!(
            (ast.kind(ops[0]), ast.label(ops[0])),
            (NodeKind::VariableRead, "markers")
        );
        assert_eq!(ast.kind(ops[1]), NodeKind::LiteralNull);
    }

    #[test]
    fn ternary_argument_shape() {
        let src = "class C { void m() {\n description.appendText(wanted == null ? \"null\" : wanted.toString());\n } }";
        let ast = parse(src, "C.java").unwrap();
        let stmt = find(&ast, NodeKind::ExpressionStmt);
        let call = ast.children(stmt)[0];
        assert_eq!(
            (ast.kind(call), ast.label(call)),
            (NodeKind::MethodCall, "appendText")
        );
        let arg = ast.children(call)[1];
        assert_eq!(ast.kind(arg), NodeKind::Ternary);
        let then = ast.children(arg)[1];
        assert_eq!(
            (ast.kind(then), ast.label(then)),
            (NodeKind::LiteralString, "null")
        );
        assert_eq!(ast.span(stmt).start_line, 2);
    }

    #[test]
    fn illegal_token_reports_its_span() {
        let err = parse("class C { void m() { @@@ } }", "C.java").unwrap_err();
        assert_eq!((err.span.start_line, err.span.start_col), (1, 22));
    }

    #[test]
    fn else_if_nests_under_else() {
        let src = "class C { int m(Object type) { if (type == A.class) { return 1; } else if (type == B.class) { return 2; } else return 3; } }";
        let ast = parse(src, "C.java").unwrap();
        let outer = find(&ast, NodeKind::If);
        let else1 = ast.children(outer)[2];
        assert_eq!(ast.kind(else1), NodeKind::Else);
        let inner = ast.children(else1)[0];
        assert_eq!(ast.kind(inner), NodeKind::If);
        let else2 = ast.children(inner)[2];
        let implicit = ast.children(else2)[0];
        assert_eq!(ast.kind(implicit), NodeKind::Block);
        assert_eq!(ast.kind(ast.children(implicit)[0]), NodeKind::Return);
    }

    #[test]
    fn generic_type_text_lands_in_type_label() {
        let src = "class C { Object m() { return new ArrayList<Object>(0); } }";
        let ast = parse(src, "C.java").unwrap();
        let ctor = find(&ast, NodeKind::ConstructorCall);
        assert_eq!(ast.label(ctor), "ArrayList<Object>");
        let src = "class C { Map<String, List<Integer>> f; }";
        let ast = parse(src, "C.java").unwrap();
        assert_eq!(
            ast.label(find(&ast, NodeKind::TypeRef)),
            "Map<String, List<Integer>>"
        );
    }

    #[test]
    fn precedence_follows_java() {
        let ast = parse(
            "class C { boolean f = a || b && c == d + e * g; }",
            "C.java",
        )
        .unwrap();
        let labels: Vec<_> = ast
            .ids()
            .filter(|&id| ast.kind(id) == NodeKind::BinaryOp)
            .map(|id| ast.label(id).to_string())
            .collect();
        assert_eq!(labels, ["||", "&&", "==", "+", "*"]);
    }

    #[test]
    fn same_text_parses_to_isomorphic_trees() {
        let src = "class C { int x; void m(int a) { for (int i = 0; i < a; i++) { x += i; } } }";
        let a = parse(src, "C.java").unwrap();
        let b = parse(src, "C.java").unwrap();
        assert!(isomorphic(&a, a.root(), &b, b.root()));
        assert_eq!(a.dump(), b.dump());
    }

    #[test]
    fn implicit_receiver_for_unqualified_calls() {
        let ast = parse("class C { void m() { log(1); } }", "C.java").unwrap();
        let call = find(&ast, NodeKind::MethodCall);
        let recv = ast.children(call)[0];
        assert_eq!(
            (ast.kind(recv), ast.label(recv)),
            (NodeKind::VariableRead, "")
        );
    }

    #[test]
    fn rejects_constructs_outside_the_subset() {
        for src in [
            "class C { void m() { switch (x) { } } }",
            "class C implements R { }",
            "class C { int a, b; }",
            "class C { void m() { x = y -> y; } }",
            "class C { void m() { 1 = 2; } }",
            "class C { void m() { try { } } }",
        ] {
            assert!(parse(src, "C.java").is_err(), "{src}");
        }
    }

    #[test]
    fn empty_compilation_unit_is_legal() {
        let ast = parse("  // nothing\n", "C.java").unwrap();
        assert_eq!(ast.len(), 1);
        assert_eq!(ast.kind(ast.root()), NodeKind::CompilationUnit);
    }
}
