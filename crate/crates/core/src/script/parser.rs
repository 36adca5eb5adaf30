use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::ast::{ArgKind, Expr, Func, PolyExpr, RingSpec, Script, Statement, Stmt, ValueKind};
use super::lexer::{tokenize, Tok, Token};
use super::{ParseError, ParseErrorKind, Pos};
use crate::field::Field;
use crate::monomial::MonomialOrder;

const KEYWORDS: &[&str] = &["ring", "ideal", "print", "check", "use", "true", "false", "none", "maxideal"];
const MAX_EXPONENT: u32 = 10_000;

/// Parses and resolves a whole script.
pub fn parse_script(src: &str) -> Result<Script, ParseError> {
    let mut p = Parser::new(src)?;
    let mut statements = Vec::new();
    while p.peek() != &Tok::Eof {
        statements.push(p.statement()?);
    }
    Ok(Script { statements })
}

/// Parses `field[vars] [order] [/ (relations)]` on its own.
pub fn parse_ring_spec_ast(src: &str) -> Result<RingSpec, ParseError> {
    let mut p = Parser::new(src)?;
    let spec = p.ring_spec()?;
    p.expect(Tok::Eof)?;
    Ok(spec)
}

/// Parses one polynomial over the given variables.
pub fn parse_poly_expr(src: &str, vars: &[String]) -> Result<PolyExpr, ParseError> {
    let mut p = Parser::new(src)?;
    p.vars = Some(vars.to_vec());
    let e = p.poly()?;
    p.expect(Tok::Eof)?;
    Ok(e)
}

/// Parses `(p1, ..., pk)` over the given variables; `()` is the empty list.
pub fn parse_value_list(src: &str, vars: &[String]) -> Result<Vec<PolyExpr>, ParseError> {
    let mut p = Parser::new(src)?;
    p.vars = Some(vars.to_vec());
    let list = p.poly_list()?;
    p.expect(Tok::Eof)?;
    Ok(list)
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    rings: HashMap<String, Vec<String>>,
    active: Option<String>,
    ideals: HashMap<String, String>,
    /// Variables admissible in polynomials right now.
    vars: Option<Vec<String>>,
}

impl Parser {
    fn new(src: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: tokenize(src)?,
            at: 0,
            rings: HashMap::new(),
            active: None,
            ideals: HashMap::new(),
            vars: None,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> ParseError {
        ParseError::syntax(
            self.pos(),
            format!("unexpected {}", self.peek()),
            expected.iter().map(|s| s.to_string()).collect(),
        )
    }

    fn expect(&mut self, tok: Tok) -> Result<Token, ParseError> {
        if *self.peek() == tok {
            Ok(self.bump())
        } else {
            Err(self.unexpected(&[&tok.to_string()]))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, Pos), ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                let pos = self.bump().pos;
                Ok((s, pos))
            }
            _ => Err(self.unexpected(&[what])),
        }
    }

    fn small_int(&mut self, what: &str) -> Result<u64, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                let pos = self.bump().pos;
                n.to_u64()
                    .ok_or_else(|| ParseError::new(ParseErrorKind::Invalid, pos, format!("{what} too large")))
            }
            _ => Err(self.unexpected(&[what])),
        }
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        let pos = self.pos();
        let stmt = match self.peek().clone() {
            Tok::Ident(kw) if kw == "ring" => {
                self.bump();
                let (name, npos) = self.ident("ring name")?;
                self.check_fresh(&name, npos)?;
                self.expect(Tok::Assign)?;
                let spec = self.ring_spec()?;
                self.rings.insert(name.clone(), spec.vars.clone());
                self.active = Some(name.clone());
                Stmt::Ring { name, spec }
            }
            Tok::Ident(kw) if kw == "use" => {
                self.bump();
                let (name, npos) = self.ident("ring name")?;
                if !self.rings.contains_key(&name) {
                    return Err(ParseError::new(
                        ParseErrorKind::UnboundRing,
                        npos,
                        format!("unbound ring `{name}`"),
                    ));
                }
                self.active = Some(name.clone());
                Stmt::Use(name)
            }
            Tok::Ident(kw) if kw == "ideal" => {
                self.bump();
                let ring = self.require_ring(pos)?;
                let (name, npos) = self.ident("ideal name")?;
                self.check_fresh(&name, npos)?;
                self.expect(Tok::Assign)?;
                let vpos = self.pos();
                let value = self.value()?;
                if value.kind() != ValueKind::Ideal {
                    return Err(ParseError::new(ParseErrorKind::Type, vpos, "expected an ideal expression"));
                }
                self.ideals.insert(name.clone(), ring);
                Stmt::Ideal { name, value }
            }
            Tok::Ident(kw) if kw == "print" => {
                self.bump();
                self.require_ring(pos)?;
                Stmt::Print(self.value()?)
            }
            Tok::Ident(kw) if kw == "check" => {
                self.bump();
                self.require_ring(pos)?;
                let lpos = self.pos();
                let lhs = self.value()?;
                let rhs = if *self.peek() == Tok::EqEq {
                    self.bump();
                    let rpos = self.pos();
                    let rhs = self.value()?;
                    if !comparable(lhs.kind(), rhs.kind()) {
                        return Err(ParseError::new(
                            ParseErrorKind::Type,
                            rpos,
                            format!("cannot compare {:?} with {:?}", lhs.kind(), rhs.kind()),
                        ));
                    }
                    Some(rhs)
                } else {
                    if lhs.kind() != ValueKind::Bool {
                        return Err(ParseError::new(
                            ParseErrorKind::Type,
                            lpos,
                            "check without `==` needs a boolean expression",
                        ));
                    }
                    None
                };
                Stmt::Check { lhs, rhs }
            }
            _ => return Err(self.unexpected(&["`ring`", "`use`", "`ideal`", "`print`", "`check`"])),
        };
        self.expect(Tok::Semi)?;
        Ok(Statement { stmt, pos })
    }

    fn check_fresh(&self, name: &str, pos: Pos) -> Result<(), ParseError> {
        if KEYWORDS.contains(&name) || Func::from_name(name).is_some() {
            return Err(ParseError::new(ParseErrorKind::Invalid, pos, format!("`{name}` is reserved")));
        }
        Ok(())
    }

    fn require_ring(&mut self, pos: Pos) -> Result<String, ParseError> {
        match &self.active {
            Some(r) => {
                self.vars = Some(self.rings[r].clone());
                Ok(r.clone())
            }
            None => Err(ParseError::new(
                ParseErrorKind::UnboundRing,
                pos,
                "no ring declared: use `ring NAME = FIELD[vars];` first",
            )),
        }
    }

    fn ring_spec(&mut self) -> Result<RingSpec, ParseError> {
        let (fname, fpos) = self.ident("field (`Q` or `F<p>`)")?;
        let field = parse_field(&fname).ok_or_else(|| {
            ParseError::new(ParseErrorKind::Invalid, fpos, format!("`{fname}` is not a field (use Q or F<prime>)"))
        })?;
        self.expect(Tok::LBracket)?;
        let mut vars = Vec::new();
        if *self.peek() != Tok::RBracket {
            loop {
                let (v, vpos) = self.ident("variable name")?;
                if vars.contains(&v) {
                    return Err(ParseError::new(ParseErrorKind::Invalid, vpos, format!("duplicate variable `{v}`")));
                }
                vars.push(v);
                if *self.peek() == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RBracket)?;
        let order = match self.peek().clone() {
            Tok::Ident(o) if o == "degrevlex" => {
                self.bump();
                Some(MonomialOrder::DegRevLex)
            }
            Tok::Ident(o) if o == "lex" => {
                self.bump();
                Some(MonomialOrder::Lex)
            }
            Tok::Ident(o) if o == "elim" => {
                let opos = self.bump().pos;
                self.expect(Tok::LParen)?;
                let block = self.small_int("block size")? as usize;
                self.expect(Tok::RParen)?;
                if block > vars.len() {
                    return Err(ParseError::new(ParseErrorKind::Invalid, opos, "elimination block exceeds variables"));
                }
                Some(MonomialOrder::Elimination { block })
            }
            _ => None,
        };
        let relations = if *self.peek() == Tok::Slash {
            self.bump();
            let saved = self.vars.replace(vars.clone());
            let rel = self.poly_list();
            self.vars = saved;
            rel?
        } else {
            Vec::new()
        };
        Ok(RingSpec { field, vars, order, relations })
    }

    fn value(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(_) => Ok(Expr::Int(self.small_int("integer")?)),
            Tok::LParen => Ok(Expr::Ideal(self.poly_list()?)),
            Tok::Ident(name) => {
                let pos = self.bump().pos;
                match name.as_str() {
                    "true" => return Ok(Expr::Bool(true)),
                    "false" => return Ok(Expr::Bool(false)),
                    "none" => return Ok(Expr::None),
                    "maxideal" => return Ok(Expr::MaxIdeal),
                    _ => {}
                }
                if let Some(func) = Func::from_name(&name) {
                    return self.call(func, pos);
                }
                match self.ideals.get(&name) {
                    Some(ring) if Some(ring) == self.active.as_ref() => Ok(Expr::Name(name)),
                    Some(ring) => Err(ParseError::new(
                        ParseErrorKind::Type,
                        pos,
                        format!("ideal `{name}` belongs to ring `{ring}`, not the active ring"),
                    )),
                    None => Err(ParseError::new(
                        ParseErrorKind::UnboundName,
                        pos,
                        format!("unbound name `{name}`"),
                    )),
                }
            }
            _ => Err(self.unexpected(&["integer", "`(`", "name", "function call"])),
        }
    }

    fn call(&mut self, func: Func, pos: Pos) -> Result<Expr, ParseError> {
        let (params, _) = func.signature();
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        while *self.peek() != Tok::RParen {
            if !args.is_empty() {
                self.expect(Tok::Comma)?;
            }
            let apos = self.pos();
            let arg = match params.get(args.len()) {
                None => {
                    return Err(ParseError::new(
                        ParseErrorKind::Arity,
                        apos,
                        format!("`{}` takes {} argument(s)", func.name(), params.len()),
                    ))
                }
                Some(ArgKind::Int) => Expr::Int(self.small_int("integer")?),
                Some(ArgKind::Poly) => Expr::Poly(self.poly()?),
                Some(ArgKind::Ideal) => {
                    let v = self.value()?;
                    if v.kind() != ValueKind::Ideal {
                        return Err(ParseError::new(ParseErrorKind::Type, apos, "expected an ideal argument"));
                    }
                    v
                }
            };
            args.push(arg);
        }
        if args.len() != params.len() {
            return Err(ParseError::new(
                ParseErrorKind::Arity,
                pos,
                format!("`{}` takes {} argument(s), got {}", func.name(), params.len(), args.len()),
            ));
        }
        self.expect(Tok::RParen)?;
        Ok(Expr::Call(func, args))
    }

    fn poly_list(&mut self) -> Result<Vec<PolyExpr>, ParseError> {
        self.expect(Tok::LParen)?;
        let mut out = Vec::new();
        if *self.peek() != Tok::RParen {
            loop {
                out.push(self.poly()?);
                if *self.peek() == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RParen)?;
        Ok(out)
    }

    fn poly(&mut self) -> Result<PolyExpr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = PolyExpr::Add(Box::new(lhs), Box::new(self.product()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = PolyExpr::Sub(Box::new(lhs), Box::new(self.product()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<PolyExpr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = PolyExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = PolyExpr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<PolyExpr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(PolyExpr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<PolyExpr, ParseError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let pos = self.pos();
            let e = self.small_int("exponent")?;
            if e > MAX_EXPONENT as u64 {
                return Err(ParseError::new(ParseErrorKind::Invalid, pos, format!("exponent above {MAX_EXPONENT}")));
            }
            return Ok(PolyExpr::Pow(Box::new(base), e as u32));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<PolyExpr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(PolyExpr::Int(n))
            }
            Tok::Ident(name) => {
                let pos = self.bump().pos;
                let known = self.vars.as_ref().is_some_and(|vs| vs.contains(&name));
                if !known {
                    return Err(ParseError::new(
                        ParseErrorKind::UnknownVariable,
                        pos,
                        format!("`{name}` is not a variable of the active ring"),
                    ));
                }
                Ok(PolyExpr::Var(name))
            }
            Tok::LParen => {
                self.bump();
                let e = self.poly()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => Err(self.unexpected(&["integer", "variable", "`(`", "`-`"])),
        }
    }
}

fn comparable(a: ValueKind, b: ValueKind) -> bool {
    use ValueKind::*;
    matches!(
        (a, b),
        (Ideal, Ideal) | (Bool, Bool) | (Poly, Poly) | (IntList, IntList) | (Int | OptInt, Int | OptInt)
    )
}

fn parse_field(name: &str) -> Option<Field> {
    if name == "Q" {
        return Some(Field::Rational);
    }
    let digits = name.strip_prefix('F')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    let p: BigInt = digits.parse().ok()?;
    Field::prime(p.to_u32()?).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_statement_set() {
        let src = "ring R = F101[x,y] degrevlex;\nideal I = (x^2, x*y + y^2);\nprint length(I);\n\
                   check colon(I, maxideal) == (x, y);\ncheck equal(I, I);";
        let s = parse_script(src).unwrap();
        assert_eq!(s.statements.len(), 5);
        assert_eq!(s.statements[2].pos, Pos { line: 3, col: 1 });
    }

    #[test]
    fn ideal_without_ring_is_unbound() {
        let err = parse_script("ideal I = (x);").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnboundRing);
        assert_eq!(err.pos, Pos { line: 1, col: 1 });
    }

    #[test]
    fn syntax_errors_report_expected_tokens() {
        let err = parse_script("ring R = Q[x];\nideal I = (x^2 x);").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Syntax);
        assert_eq!(err.pos, Pos { line: 2, col: 16 });
        assert!(err.expected.iter().any(|e| e.contains(')')), "{err}");
    }

    #[test]
    fn arity_and_names_checked() {
        let err = parse_script("ring R = Q[x]; print length((x), (x));").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Arity);
        let err = parse_script("ring R = Q[x]; print length(J);").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnboundName);
        let err = parse_script("ring R = Q[x]; ideal I = (y);").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownVariable);
        let err = parse_script("ring R = Q[x]; ideal I = length((x));").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Type);
        let err = parse_script("ring R = F100[x];").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Invalid);
    }

    #[test]
    fn ideals_are_scoped_to_their_ring() {
        let err = parse_script("ring R = Q[x]; ideal I = (x); ring S = Q[x]; print length(I);").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Type);
        parse_script("ring R = Q[x]; ideal I = (x); ring S = Q[x]; use R; print length(I);").unwrap();
    }

    #[test]
    fn ring_spec_with_relations() {
        let spec = parse_ring_spec_ast("Q[x,y] lex / (x*y)").unwrap();
        assert_eq!(spec.order, Some(MonomialOrder::Lex));
        assert_eq!(spec.relations.len(), 1);
        assert_eq!(spec.to_string(), "Q[x,y] lex / (x*y)");
        assert!(parse_ring_spec_ast("Q[x] / (z)").is_err());
    }

    #[test]
    fn printing_respects_precedence() {
        let vars: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        for src in ["-(x*y)", "x - (y - 1)", "(x + y)^3", "-x^2", "x*(y*x)", "1/2*x", "x/(2*3)", "- -x"] {
            let e = parse_poly_expr(src, &vars).unwrap();
            let again = parse_poly_expr(&e.to_string(), &vars).unwrap();
            assert_eq!(e, again, "{src} -> {e}");
        }
    }
}
