use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Syntactic category of a node. The set is closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NodeKind {
    CompilationUnit,
    ClassDecl,
    FieldDecl,
    MethodDecl,
    Parameter,
    Block,
    If,
    /// Explicit container for an `else` branch; its only child is a `Block` or an `If`.
    Else,
    Ternary,
    WhileLoop,
    ForLoop,
    TryBlock,
    CatchClause,
    FinallyBlock,
    Return,
    Throw,
    Break,
    Continue,
    ExpressionStmt,
    VarDecl,
    Assignment,
    BinaryOp,
    UnaryOp,
    MethodCall,
    FieldAccess,
    VariableRead,
    ArrayAccess,
    ConstructorCall,
    TypeRef,
    Modifier,
    LiteralNull,
    LiteralInt,
    LiteralFloat,
    LiteralString,
    LiteralBool,
    LiteralChar,
}

impl NodeKind {
    pub const ALL: [NodeKind; 36] = [
        NodeKind::CompilationUnit,
        NodeKind::ClassDecl,
        NodeKind::FieldDecl,
        NodeKind::MethodDecl,
        NodeKind::Parameter,
        NodeKind::Block,
        NodeKind::If,
        NodeKind::Else,
        NodeKind::Ternary,
        NodeKind::WhileLoop,
        NodeKind::ForLoop,
        NodeKind::TryBlock,
        NodeKind::CatchClause,
        NodeKind::FinallyBlock,
        NodeKind::Return,
        NodeKind::Throw,
        NodeKind::Break,
        NodeKind::Continue,
        NodeKind::ExpressionStmt,
        NodeKind::VarDecl,
        NodeKind::Assignment,
        NodeKind::BinaryOp,
        NodeKind::UnaryOp,
        NodeKind::MethodCall,
        NodeKind::FieldAccess,
        NodeKind::VariableRead,
        NodeKind::ArrayAccess,
        NodeKind::ConstructorCall,
        NodeKind::TypeRef,
        NodeKind::Modifier,
        NodeKind::LiteralNull,
        NodeKind::LiteralInt,
        NodeKind::LiteralFloat,
        NodeKind::LiteralString,
        NodeKind::LiteralBool,
        NodeKind::LiteralChar,
    ];

    pub fn ordinal(self) -> u8 {
        self as u8
    }

    pub fn name(self) -> &'static str {
        use NodeKind::*;
        match self {
            CompilationUnit => "CompilationUnit",
            ClassDecl => "ClassDecl",
            FieldDecl => "FieldDecl",
            MethodDecl => "MethodDecl",
            Parameter => "Parameter",
            Block => "Block",
            If => "If",
            Else => "Else",
            Ternary => "Ternary",
            WhileLoop => "WhileLoop",
            ForLoop => "ForLoop",
            TryBlock => "TryBlock",
            CatchClause => "CatchClause",
            FinallyBlock => "FinallyBlock",
            Return => "Return",
            Throw => "Throw",
            Break => "Break",
            Continue => "Continue",
            ExpressionStmt => "ExpressionStmt",
            VarDecl => "VarDecl",
            Assignment => "Assignment",
            BinaryOp => "BinaryOp",
            UnaryOp => "UnaryOp",
            MethodCall => "MethodCall",
            FieldAccess => "FieldAccess",
            VariableRead => "VariableRead",
            ArrayAccess => "ArrayAccess",
            ConstructorCall => "ConstructorCall",
            TypeRef => "TypeRef",
            Modifier => "Modifier",
            LiteralNull => "LiteralNull",
            LiteralInt => "LiteralInt",
            LiteralFloat => "LiteralFloat",
            LiteralString => "LiteralString",
            LiteralBool => "LiteralBool",
            LiteralChar => "LiteralChar",
        }
    }

    /// Statement kinds. Disjoint from [`NodeKind::is_expression`].
    pub fn is_statement(self) -> bool {
        use NodeKind::*;
        matches!(
            self,
            Block
                | If
                | WhileLoop
                | ForLoop
                | TryBlock
                | Return
                | Throw
                | Break
                | Continue
                | ExpressionStmt
                | VarDecl
        )
    }

    /// Statements that contain no nested statements.
    pub fn is_simple_statement(self) -> bool {
        use NodeKind::*;
        matches!(
            self,
            Return | Throw | Break | Continue | ExpressionStmt | VarDecl
        )
    }

    pub fn is_expression(self) -> bool {
        use NodeKind::*;
        matches!(
            self,
            Ternary
                | Assignment
                | BinaryOp
                | UnaryOp
                | MethodCall
                | FieldAccess
                | VariableRead
                | ArrayAccess
                | ConstructorCall
        ) || self.is_literal()
    }

    pub fn is_literal(self) -> bool {
        use NodeKind::*;
        matches!(
            self,
            LiteralNull | LiteralInt | LiteralFloat | LiteralString | LiteralBool | LiteralChar
        )
    }

    pub fn is_loop(self) -> bool {
        matches!(self, NodeKind::WhileLoop | NodeKind::ForLoop)
    }

    pub fn is_call(self) -> bool {
        matches!(self, NodeKind::MethodCall | NodeKind::ConstructorCall)
    }
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown node kind `{0}`")]
pub struct UnknownKind(pub String);

impl FromStr for NodeKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NodeKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| UnknownKind(s.to_string()))
    }
}
