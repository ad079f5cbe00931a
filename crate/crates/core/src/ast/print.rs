//! Source rendering of a tree. Output re-parses to an isomorphic tree; spans
//! and formatting of the original text are not preserved.

use super::{Ast, NodeId, NodeKind};

pub fn to_source(ast: &Ast) -> String {
    let mut p = Printer {
        ast,
        out: String::new(),
        indent: 0,
    };
    p.node(ast.root());
    p.out
}

struct Printer<'a> {
    ast: &'a Ast,
    out: String,
    indent: usize,
}

impl Printer<'_> {
    fn line(&mut self, text: &str) {
        for _ in 0..self.indent {
            self.out.push_str("    ");
        }
        self.out.push_str(text);
        self.out.push('\n');
    }

    fn children_of(&self, id: NodeId, kind: NodeKind) -> Vec<NodeId> {
        self.ast
            .children(id)
            .iter()
            .copied()
            .filter(|&c| self.ast.kind(c) == kind)
            .collect()
    }

    fn modifiers(&self, id: NodeId) -> String {
        self.children_of(id, NodeKind::Modifier)
            .iter()
            .map(|&m| format!("{} ", self.ast.label(m)))
            .collect()
    }

    fn node(&mut self, id: NodeId) {
        let ast = self.ast;
        match ast.kind(id) {
            NodeKind::CompilationUnit => {
                for &c in ast.children(id) {
                    self.node(c);
                }
            }
            NodeKind::ClassDecl => {
                let mut head = format!("{}class {}", self.modifiers(id), ast.label(id));
                if let Some(&sup) = self.children_of(id, NodeKind::TypeRef).first() {
                    head.push_str(&format!(" extends {}", ast.label(sup)));
                }
                head.push_str(" {");
                self.line(&head);
                self.indent += 1;
                for &c in ast.children(id) {
                    if matches!(ast.kind(c), NodeKind::FieldDecl | NodeKind::MethodDecl) {
                        self.node(c);
                    }
                }
                self.indent -= 1;
                self.line("}");
            }
            NodeKind::FieldDecl | NodeKind::VarDecl => {
                let text = self.declaration(id);
                self.line(&format!("{text};"));
            }
            NodeKind::MethodDecl => {
                let is_ctor = ast
                    .parent(id)
                    .is_some_and(|p| ast.label(p) == ast.label(id));
                let types = self.children_of(id, NodeKind::TypeRef);
                let (ret, throws) = if is_ctor {
                    (None, &types[..])
                } else {
                    (types.first(), types.get(1..).unwrap_or(&[]))
                };
                let params: Vec<String> = self
                    .children_of(id, NodeKind::Parameter)
                    .into_iter()
                    .map(|p| self.declaration(p))
                    .collect();
                let mut head = self.modifiers(id);
                if let Some(&r) = ret {
                    head.push_str(ast.label(r));
                    head.push(' ');
                }
                head.push_str(&format!("{}({})", ast.label(id), params.join(", ")));
                if !throws.is_empty() {
                    let names: Vec<_> = throws.iter().map(|&t| ast.label(t)).collect();
                    head.push_str(&format!(" throws {}", names.join(", ")));
                }
                self.line(&head);
                if let Some(&body) = self.children_of(id, NodeKind::Block).first() {
                    self.node(body);
                }
            }
            NodeKind::Block => {
                self.line("{");
                self.indent += 1;
                for &c in ast.children(id) {
                    self.node(c);
                }
                self.indent -= 1;
                self.line("}");
            }
            NodeKind::If => {
                let c = ast.children(id);
                let cond = self.expr(c[0]);
                self.line(&format!("if ({cond})"));
                self.node(c[1]);
                if let Some(&e) = c.get(2) {
                    self.node(e);
                }
            }
            NodeKind::Else => {
                self.line("else");
                self.node(ast.children(id)[0]);
            }
            NodeKind::WhileLoop => {
                let c = ast.children(id);
                let cond = self.expr(c[0]);
                self.line(&format!("while ({cond})"));
                self.node(c[1]);
            }
            NodeKind::ForLoop => {
                let c = ast.children(id);
                let body = *c.last().unwrap();
                if ast.label(id) == ":" {
                    let var = self.declaration(c[0]);
                    let it = self.expr(c[1]);
                    self.line(&format!("for ({var} : {it})"));
                } else {
                    let cond_pos = c
                        .iter()
                        .position(|&x| ast.kind(x).is_expression())
                        .expect("for loop without condition");
                    let init: Vec<String> = c[..cond_pos].iter().map(|&x| self.simple(x)).collect();
                    let update: Vec<String> = c[cond_pos + 1..c.len() - 1]
                        .iter()
                        .map(|&x| self.simple(x))
                        .collect();
                    let cond = self.expr(c[cond_pos]);
                    self.line(&format!(
                        "for ({}; {cond}; {})",
                        init.join(", "),
                        update.join(", ")
                    ));
                }
                self.node(body);
            }
            NodeKind::TryBlock => {
                self.line("try");
                for &c in ast.children(id) {
                    self.node(c);
                }
            }
            NodeKind::CatchClause => {
                let c = ast.children(id);
                self.line(&format!("catch ({} {})", ast.label(c[0]), ast.label(id)));
                self.node(c[1]);
            }
            NodeKind::FinallyBlock => {
                self.line("finally");
                self.node(ast.children(id)[0]);
            }
            NodeKind::Return
            | NodeKind::Throw
            | NodeKind::Break
            | NodeKind::Continue
            | NodeKind::ExpressionStmt => {
                let text = self.simple(id);
                self.line(&format!("{text};"));
            }
            kind => panic!("{kind} is not a statement or declaration"),
        }
    }

    /// A simple statement without its trailing semicolon.
    fn simple(&self, id: NodeId) -> String {
        let ast = self.ast;
        let c = ast.children(id);
        match ast.kind(id) {
            NodeKind::Return if c.is_empty() => "return".into(),
            NodeKind::Return => format!("return {}", self.expr(c[0])),
            NodeKind::Throw => format!("throw {}", self.expr(c[0])),
            NodeKind::Break | NodeKind::Continue => {
                let kw = if ast.kind(id) == NodeKind::Break {
                    "break"
                } else {
                    "continue"
                };
                if ast.label(id).is_empty() {
                    kw.into()
                } else {
                    format!("{kw} {}", ast.label(id))
                }
            }
            NodeKind::ExpressionStmt => self.expr_top(c[0]),
            NodeKind::VarDecl => self.declaration(id),
            kind => panic!("{kind} is not a simple statement"),
        }
    }

    fn declaration(&self, id: NodeId) -> String {
        let ast = self.ast;
        let ty = self.children_of(id, NodeKind::TypeRef)[0];
        let mut text = format!("{}{} {}", self.modifiers(id), ast.label(ty), ast.label(id));
        if let Some(&init) = ast
            .children(id)
            .iter()
            .find(|&&c| ast.kind(c).is_expression())
        {
            text.push_str(&format!(" = {}", self.expr_top(init)));
        }
        text
    }

    fn expr_top(&self, id: NodeId) -> String {
        let ast = self.ast;
        match ast.kind(id) {
            NodeKind::Assignment => {
                let c = ast.children(id);
                format!(
                    "{} {} {}",
                    self.expr(c[0]),
                    ast.label(id),
                    self.expr_top(c[1])
                )
            }
            _ => self.expr(id),
        }
    }

    fn args(&self, ids: &[NodeId]) -> String {
        ids.iter()
            .map(|&a| self.expr_top(a))
            .collect::<Vec<_>>()
            .join(", ")
    }

    fn expr(&self, id: NodeId) -> String {
        let ast = self.ast;
        let c = ast.children(id);
        let label = ast.label(id);
        match ast.kind(id) {
            NodeKind::Assignment => format!("({})", self.expr_top(id)),
            NodeKind::BinaryOp => format!("({} {label} {})", self.expr(c[0]), self.expr(c[1])),
            NodeKind::Ternary => format!(
                "({} ? {} : {})",
                self.expr(c[0]),
                self.expr(c[1]),
                self.expr(c[2])
            ),
            NodeKind::UnaryOp => match label.strip_prefix("post") {
                Some(op) => format!("({}){op}", self.expr(c[0])),
                None => format!("{label}({})", self.expr(c[0])),
            },
            NodeKind::MethodCall => {
                let recv = c[0];
                let args = self.args(&c[1..]);
                if ast.kind(recv) == NodeKind::VariableRead && ast.label(recv).is_empty() {
                    format!("{label}({args})")
                } else {
                    format!("{}.{label}({args})", self.expr(recv))
                }
            }
            NodeKind::FieldAccess => format!("{}.{label}", self.expr(c[0])),
            NodeKind::ArrayAccess => format!("{}[{}]", self.expr(c[0]), self.expr_top(c[1])),
            NodeKind::ConstructorCall => match label.strip_suffix("[]") {
                Some(elem) if c.len() == 1 => format!("new {elem}[{}]", self.expr_top(c[0])),
                _ => format!("new {label}({})", self.args(c)),
            },
            NodeKind::VariableRead
            | NodeKind::LiteralNull
            | NodeKind::LiteralInt
            | NodeKind::LiteralFloat
            | NodeKind::LiteralBool => label.to_string(),
            NodeKind::LiteralString => format!("\"{label}\""),
            NodeKind::LiteralChar => format!("'{label}'"),
            kind => panic!("{kind} is not an expression"),
        }
    }
}
