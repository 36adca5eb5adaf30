use std::fmt;

use num_bigint::BigInt;

use super::Pos;
use crate::field::Field;
use crate::monomial::MonomialOrder;

/// A parsed script. Equality ignores source positions.
#[derive(Clone, Debug, Default)]
pub struct Script {
    pub statements: Vec<Statement>,
}

#[derive(Clone, Debug)]
pub struct Statement {
    pub stmt: Stmt,
    pub pos: Pos,
}

impl PartialEq for Script {
    fn eq(&self, other: &Self) -> bool {
        self.statements.len() == other.statements.len()
            && self.statements.iter().zip(&other.statements).all(|(a, b)| a.stmt == b.stmt)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Ring { name: String, spec: RingSpec },
    Use(String),
    Ideal { name: String, value: Expr },
    Print(Expr),
    Check { lhs: Expr, rhs: Option<Expr> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    pub field: Field,
    pub vars: Vec<String>,
    pub order: Option<MonomialOrder>,
    pub relations: Vec<PolyExpr>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// A bound ideal.
    Name(String),
    /// `(p1, ..., pk)` in the active ring.
    Ideal(Vec<PolyExpr>),
    MaxIdeal,
    Int(u64),
    Bool(bool),
    None,
    Poly(PolyExpr),
    Call(Func, Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyExpr {
    Int(BigInt),
    Var(String),
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Div(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArgKind {
    Ideal,
    Int,
    Poly,
}

/// Static type of an expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueKind {
    Ideal,
    Int,
    /// An integer or `none`.
    OptInt,
    Bool,
    Poly,
    IntList,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Func {
    Colon,
    Sum,
    Product,
    Power,
    Intersect,
    Gb,
    Length,
    RelativeLength,
    Socle,
    Mu,
    Mult,
    Defect,
    Dim,
    Type,
    Depth,
    Hilbert,
    Stability,
    Equal,
    Subset,
    Member,
    OriginPrimary,
    Nf,
}

impl Func {
    pub const ALL: [Func; 22] = [
        Func::Colon,
        Func::Sum,
        Func::Product,
        Func::Power,
        Func::Intersect,
        Func::Gb,
        Func::Length,
        Func::RelativeLength,
        Func::Socle,
        Func::Mu,
        Func::Mult,
        Func::Defect,
        Func::Dim,
        Func::Type,
        Func::Depth,
        Func::Hilbert,
        Func::Stability,
        Func::Equal,
        Func::Subset,
        Func::Member,
        Func::OriginPrimary,
        Func::Nf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Colon => "colon",
            Func::Sum => "sum",
            Func::Product => "product",
            Func::Power => "power",
            Func::Intersect => "intersect",
            Func::Gb => "gb",
            Func::Length => "length",
            Func::RelativeLength => "relative_length",
            Func::Socle => "socle",
            Func::Mu => "mu",
            Func::Mult => "mult",
            Func::Defect => "defect",
            Func::Dim => "dim",
            Func::Type => "type",
            Func::Depth => "depth",
            Func::Hilbert => "hilbert",
            Func::Stability => "stability",
            Func::Equal => "equal",
            Func::Subset => "subset",
            Func::Member => "member",
            Func::OriginPrimary => "origin_primary",
            Func::Nf => "nf",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.iter().copied().find(|f| f.name() == name)
    }

    pub fn signature(self) -> (&'static [ArgKind], ValueKind) {
        use ArgKind as A;
        match self {
            Func::Colon | Func::Sum | Func::Product | Func::Intersect => (&[A::Ideal, A::Ideal], ValueKind::Ideal),
            Func::Power => (&[A::Ideal, A::Int], ValueKind::Ideal),
            Func::Gb => (&[A::Ideal], ValueKind::Ideal),
            Func::Length | Func::Socle | Func::Mu | Func::Mult | Func::Defect | Func::Dim | Func::Type => {
                (&[A::Ideal], ValueKind::Int)
            }
            Func::RelativeLength => (&[A::Ideal, A::Ideal], ValueKind::Int),
            Func::Depth => (&[A::Int], ValueKind::Int),
            Func::Hilbert => (&[A::Ideal, A::Int], ValueKind::IntList),
            Func::Stability => (&[A::Ideal, A::Ideal, A::Int], ValueKind::OptInt),
            Func::Equal | Func::Subset => (&[A::Ideal, A::Ideal], ValueKind::Bool),
            Func::Member => (&[A::Poly, A::Ideal], ValueKind::Bool),
            Func::OriginPrimary => (&[A::Ideal], ValueKind::Bool),
            Func::Nf => (&[A::Poly, A::Ideal], ValueKind::Poly),
        }
    }
}

impl Expr {
    pub fn kind(&self) -> ValueKind {
        match self {
            Expr::Name(_) | Expr::Ideal(_) | Expr::MaxIdeal => ValueKind::Ideal,
            Expr::Int(_) => ValueKind::Int,
            Expr::Bool(_) => ValueKind::Bool,
            Expr::None => ValueKind::OptInt,
            Expr::Poly(_) => ValueKind::Poly,
            Expr::Call(f, _) => f.signature().1,
        }
    }
}

const PREC_SUM: u8 = 1;
const PREC_PRODUCT: u8 = 2;
const PREC_UNARY: u8 = 3;
const PREC_POWER: u8 = 4;
const PREC_ATOM: u8 = 5;

impl PolyExpr {
    fn prec(&self) -> u8 {
        match self {
            PolyExpr::Add(..) | PolyExpr::Sub(..) => PREC_SUM,
            PolyExpr::Mul(..) | PolyExpr::Div(..) => PREC_PRODUCT,
            PolyExpr::Neg(_) => PREC_UNARY,
            PolyExpr::Pow(..) => PREC_POWER,
            PolyExpr::Int(_) | PolyExpr::Var(_) => PREC_ATOM,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            PolyExpr::Int(n) => write!(f, "{n}"),
            PolyExpr::Var(v) => write!(f, "{v}"),
            PolyExpr::Neg(e) => {
                write!(f, "-")?;
                e.write_at(f, PREC_UNARY)
            }
            PolyExpr::Add(a, b) | PolyExpr::Sub(a, b) => {
                a.write_at(f, PREC_SUM)?;
                write!(f, "{}", if matches!(self, PolyExpr::Add(..)) { " + " } else { " - " })?;
                b.write_at(f, PREC_PRODUCT)
            }
            PolyExpr::Mul(a, b) | PolyExpr::Div(a, b) => {
                a.write_at(f, PREC_PRODUCT)?;
                write!(f, "{}", if matches!(self, PolyExpr::Mul(..)) { "*" } else { "/" })?;
                b.write_at(f, PREC_UNARY)
            }
            PolyExpr::Pow(b, e) => {
                b.write_at(f, PREC_ATOM)?;
                write!(f, "^{e}")
            }
        }
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Name(n) => write!(f, "{n}"),
            Expr::Ideal(ps) => write_list(f, ps),
            Expr::MaxIdeal => write!(f, "maxideal"),
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Bool(b) => write!(f, "{b}"),
            Expr::None => write!(f, "none"),
            Expr::Poly(p) => write!(f, "{p}"),
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))?;
        if let Some(order) = self.order {
            write!(f, " {}", order.name())?;
        }
        if !self.relations.is_empty() {
            write!(f, " / ")?;
            write_list(f, &self.relations)?;
        }
        Ok(())
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Ring { name, spec } => write!(f, "ring {name} = {spec};"),
            Stmt::Use(name) => write!(f, "use {name};"),
            Stmt::Ideal { name, value } => write!(f, "ideal {name} = {value};"),
            Stmt::Print(e) => write!(f, "print {e};"),
            Stmt::Check { lhs, rhs: None } => write!(f, "check {lhs};"),
            Stmt::Check { lhs, rhs: Some(rhs) } => write!(f, "check {lhs} == {rhs};"),
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{}", s.stmt)?;
        }
        Ok(())
    }
}
