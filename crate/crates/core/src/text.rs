//! Text forms of polynomials, polynomial lists and ring specifications.
//!
//! These share the script grammar: `x^2 - 3*x*y + 1/2`, `(f, g, h)` and
//! `F101[x,y] degrevlex / (x*y)`.

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::presentation::RingPresentation;
use crate::ring::PolyRing;
use crate::script::{parse_poly_expr, parse_ring_spec_ast, parse_value_list, PolyExpr, RingSpec};

pub fn parse_polynomial(ring: &Arc<PolyRing>, src: &str) -> Result<Polynomial> {
    let expr = parse_poly_expr(src, ring.names())?;
    eval_poly_expr(ring, &expr)
}

/// Parses `(p1, ..., pk)`.
pub fn parse_polynomial_list(ring: &Arc<PolyRing>, src: &str) -> Result<Vec<Polynomial>> {
    parse_value_list(src, ring.names())?
        .iter()
        .map(|e| eval_poly_expr(ring, e))
        .collect()
}

/// Parses `FIELD[vars] [order] [/ (relations)]`; the order defaults to degrevlex.
pub fn parse_ring_spec(src: &str) -> Result<Arc<RingPresentation>> {
    build_ring(&parse_ring_spec_ast(src)?)
}

pub(crate) fn build_ring(spec: &RingSpec) -> Result<Arc<RingPresentation>> {
    let ring = PolyRing::new(spec.field, &spec.vars, spec.order.unwrap_or(MonomialOrder::DegRevLex))?;
    let relations = spec
        .relations
        .iter()
        .map(|e| eval_poly_expr(&ring, e))
        .collect::<Result<Vec<_>>>()?;
    RingPresentation::new(ring, relations)
}

/// Evaluates a polynomial expression. Division is only by nonzero constants.
pub fn eval_poly_expr(ring: &Arc<PolyRing>, expr: &PolyExpr) -> Result<Polynomial> {
    let field = ring.field();
    Ok(match expr {
        PolyExpr::Int(n) => {
            if n.is_zero() {
                Polynomial::zero(ring)
            } else {
                Polynomial::constant(ring, field.from_bigint(n))
            }
        }
        PolyExpr::Var(name) => Polynomial::var(ring, name)?,
        PolyExpr::Neg(e) => eval_poly_expr(ring, e)?.neg(),
        PolyExpr::Add(a, b) => eval_poly_expr(ring, a)?.checked_add(&eval_poly_expr(ring, b)?)?,
        PolyExpr::Sub(a, b) => eval_poly_expr(ring, a)?.checked_sub(&eval_poly_expr(ring, b)?)?,
        PolyExpr::Mul(a, b) => eval_poly_expr(ring, a)?.checked_mul(&eval_poly_expr(ring, b)?)?,
        PolyExpr::Div(a, b) => {
            let num = eval_poly_expr(ring, a)?;
            let den = eval_poly_expr(ring, b)?;
            if !den.is_unit() {
                return Err(Error::Eval(format!("cannot divide by `{den}`: only nonzero constants are allowed")));
            }
            let inv = field.inv(den.lc()).expect("unit has an inverse");
            num.scale(&inv)
        }
        PolyExpr::Pow(b, e) => eval_poly_expr(ring, b)?.pow(*e),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn parses_and_prints_canonically() {
        let r = PolyRing::new(Field::Rational, &["x", "y"], MonomialOrder::DegRevLex).unwrap();
        let p = parse_polynomial(&r, "(x + y)*(x - y) + 1/2").unwrap();
        assert_eq!(p.to_string(), "x^2 - y^2 + 1/2");
        assert_eq!(parse_polynomial(&r, &p.to_string()).unwrap(), p);
        assert!(parse_polynomial(&r, "x/y").is_err());
        assert!(parse_polynomial(&r, "z").is_err());
    }

    #[test]
    fn prime_field_reduces_literals() {
        let r = PolyRing::new(Field::Prime(7), &["x"], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(parse_polynomial(&r, "8*x - 14").unwrap().to_string(), "x");
        assert!(parse_polynomial(&r, "x/7").is_err());
        assert_eq!(parse_polynomial(&r, "x/2").unwrap().to_string(), "4*x");
    }

    #[test]
    fn lists_and_ring_specs() {
        let r = PolyRing::new(Field::Rational, &["x", "y"], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(parse_polynomial_list(&r, "()").unwrap().len(), 0);
        assert_eq!(parse_polynomial_list(&r, "(x, y^2, 0)").unwrap().len(), 3);
        let pres = parse_ring_spec("F101[x,y] / (x*y)").unwrap();
        assert_eq!(pres.relations().len(), 1);
        assert!(pres.is_graded());
    }
}
