//! Sparse multivariate polynomials over an exact field.

use std::collections::hash_map::{Entry, HashMap};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::monomial::{Exponents, Monomial};
use crate::ring::PolyRing;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub monomial: Monomial,
    pub coeff: Scalar,
}

/// A polynomial: terms strictly descending in the ring's order, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        Polynomial::monomial(ring, ring.one_monomial(), c)
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, monomial: Monomial, coeff: Scalar) -> Self {
        let terms = if ring.field().is_zero(&coeff) {
            Vec::new()
        } else {
            vec![Term { monomial, coeff }]
        };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn variable(ring: &Arc<PolyRing>, var: usize) -> Self {
        Polynomial::monomial(ring, Monomial::variable(ring.nvars(), var), ring.field().one())
    }

    pub fn var(ring: &Arc<PolyRing>, name: &str) -> Result<Self> {
        Ok(Polynomial::variable(ring, ring.require_var(name)?))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal monomials
    /// and drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<Term>) -> Self {
        let order = ring.order();
        let field = ring.field();
        terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                }
                _ => {
                    if let Some(last) = out.last() {
                        if field.is_zero(&last.coeff) {
                            out.pop();
                        }
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|t| field.is_zero(&t.coeff)) {
            out.pop();
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Wraps terms already in canonical form.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].monomial, &w[1].monomial) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one()
    }

    pub fn leading_term(&self) -> Result<(&Monomial, &Scalar)> {
        self.terms
            .first()
            .map(|t| (&t.monomial, &t.coeff))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Leading monomial; panics on zero (internal use where nonzero is known).
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].monomial
    }

    pub fn lc(&self) -> &Scalar {
        &self.terms[0].coeff
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.monomial.degree() == t.monomial.degree()),
        }
    }

    /// Bit mask of the variables occurring in the polynomial.
    pub fn support_mask(&self) -> u64 {
        self.terms.iter().fold(0, |acc, t| acc | t.monomial.support_mask())
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.monomial.exponents()[var] > 0)
    }

    pub fn coeff_of(&self, m: &Monomial) -> Scalar {
        let order = self.ring.order();
        match self.terms.binary_search_by(|t| order.cmp(m, &t.monomial)) {
            Ok(i) => self.terms[i].coeff.clone(),
            Err(_) => self.field().zero(),
        }
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) {
            return Ok(());
        }
        self.ring.check_same(&other.ring)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.combine(other, None))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let minus_one = self.field().neg(&self.field().one());
        Ok(self.combine(other, Some((&minus_one, None))))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { monomial: t.monomial.clone(), coeff: field.mul(&t.coeff, c) })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&self.field().neg(&self.field().one()))
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { monomial: t.monomial.mul(m), coeff: field.mul(&t.coeff, c) })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if self.field().is_one(&t.coeff) => self.clone(),
            Some(t) => self.scale(&self.field().inv(&t.coeff).expect("nonzero leading coefficient")),
        }
    }

    /// `self + c * m * other`, merging in one pass; `c = None` means 1.
    pub(crate) fn combine(&self, other: &Polynomial, mul: Option<(&Scalar, Option<&Monomial>)>) -> Polynomial {
        let field = self.field();
        let order = self.ring.order();
        let (c, m) = match mul {
            Some((c, m)) => (Some(c), m),
            None => (None, None),
        };
        let shifted = |t: &Term| -> Term {
            let monomial = match m {
                Some(m) => t.monomial.mul(m),
                None => t.monomial.clone(),
            };
            let coeff = match c {
                Some(c) => field.mul(&t.coeff, c),
                None => t.coeff.clone(),
            };
            Term { monomial, coeff }
        };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            let tb = shifted(&b[j]);
            match order.cmp(&a[i].monomial, &tb.monomial) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(tb);
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(&a[i].coeff, &tb.coeff);
                    if !field.is_zero(&s) {
                        out.push(Term { monomial: tb.monomial, coeff: s });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(shifted));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() < 16 {
            let mut acc = Polynomial::zero(&self.ring);
            for t in &small.terms {
                acc = acc.combine(big, Some((&t.coeff, Some(&t.monomial))));
            }
            return acc;
        }
        let field = self.field();
        let mut sums: HashMap<Monomial, Scalar> = HashMap::with_capacity(small.len() * 4);
        for s in &small.terms {
            for b in &big.terms {
                let c = field.mul(&s.coeff, &b.coeff);
                match sums.entry(s.monomial.mul(&b.monomial)) {
                    Entry::Occupied(mut e) => {
                        let v = field.add(e.get(), &c);
                        e.insert(v);
                    }
                    Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let terms = sums
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(monomial, coeff)| Term { monomial, coeff })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `map[i]` of the target ring.
    pub fn map_vars(&self, target: &Arc<PolyRing>, map: &[usize]) -> Polynomial {
        debug_assert_eq!(map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut e: Exponents = smallvec::smallvec![0; n];
                for (i, x) in t.monomial.exponents().iter().enumerate() {
                    e[map[i]] += x;
                }
                Term { monomial: Monomial::new(e), coeff: t.coeff.clone() }
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Moves a polynomial into a ring with the same variables in the same
    /// positions (typically another order).
    pub fn reorder_into(&self, target: &Arc<PolyRing>) -> Polynomial {
        Polynomial::from_terms(target, self.terms.clone())
    }

    /// Substitutes polynomials (all in one target ring) for the variables.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Precondition(format!(
                "substitution needs {} images, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        for p in images {
            target.check_same(&p.ring)?;
        }
        let mut acc = Polynomial::zero(&target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(&target, t.coeff.clone());
            for (i, e) in t.monomial.exponents().iter().enumerate() {
                if *e > 0 {
                    prod = prod.mul_unchecked(&images[i].pow(*e));
                }
            }
            acc = acc.combine(&prod, None);
        }
        Ok(acc)
    }

    pub fn display(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        let names = self.ring.names();
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = if neg { field.neg(&t.coeff) } else { t.coeff.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if t.monomial.is_one() {
                write!(f, "{abs}")?;
            } else if field.is_one(&abs) {
                write!(f, "{}", t.monomial.display(names))?;
            } else {
                write!(f, "{abs}*{}", t.monomial.display(names))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl std::ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics with a ring-mismatch diagnostic; use the `checked_*` form
            /// when the rings are not known to agree.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl std::ops::$tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;

    fn ring(field: Field, names: &[&str], order: MonomialOrder) -> Arc<PolyRing> {
        PolyRing::new(field, names, order).unwrap()
    }

    #[test]
    fn additive_inverse() {
        let r = ring(Field::Rational, &["x", "y"], MonomialOrder::DegRevLex);
        let x = Polynomial::var(&r, "x").unwrap();
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(Field::Rational, &["x", "y"], MonomialOrder::DegRevLex);
        let x = Polynomial::var(&r, "x").unwrap();
        let y = Polynomial::var(&r, "y").unwrap();
        let p = (&x + &y) * (&x - &y);
        assert_eq!(p.to_string(), "x^2 - y^2");
        assert_eq!(p, &(&x * &x) - &(&y * &y));
    }

    #[test]
    fn leading_terms_under_orders() {
        let r = ring(Field::Rational, &["x", "y"], MonomialOrder::DegRevLex);
        let x = Polynomial::var(&r, "x").unwrap();
        let y = Polynomial::var(&r, "y").unwrap();
        let f = &(&x * &x) + &(&x * &y);
        assert_eq!(f.leading_term().unwrap().0.exponents(), &[2, 0]);
        let g = &x + &y.pow(3);
        assert_eq!(g.leading_term().unwrap().0.exponents(), &[0, 3]);

        let lex = ring(Field::Rational, &["x", "y"], MonomialOrder::Lex);
        let g = g.reorder_into(&lex);
        assert_eq!(g.leading_term().unwrap().0.exponents(), &[1, 0]);

        assert_eq!(Polynomial::zero(&r).leading_term().unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn ring_mismatch_names_both_rings() {
        let r1 = ring(Field::Rational, &["x"], MonomialOrder::DegRevLex);
        let r2 = ring(Field::Prime(101), &["x"], MonomialOrder::DegRevLex);
        let a = Polynomial::var(&r1, "x").unwrap();
        let b = Polynomial::var(&r2, "x").unwrap();
        let err = a.checked_add(&b).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("Q[x]") && msg.contains("F101[x]"), "{msg}");
    }

    #[test]
    fn counterexample_generator_reconstructed() {
        // v*v - a1*x1 for m = 2, d = 1
        let r = ring(Field::Prime(101), &["x1", "x2", "v", "a1"], MonomialOrder::DegRevLex);
        let v = Polynomial::var(&r, "v").unwrap();
        let a1 = Polynomial::var(&r, "a1").unwrap();
        let x1 = Polynomial::var(&r, "x1").unwrap();
        let g = &(&v * &v) - &(&a1 * &x1);
        assert_eq!(g.len(), 2);
        assert_eq!(g.terms()[0].monomial.exponents(), &[0, 0, 2, 0]);
        assert_eq!(g.terms()[0].coeff, Scalar::Prime(1));
        assert_eq!(g.terms()[1].monomial.exponents(), &[1, 0, 0, 1]);
        assert_eq!(g.terms()[1].coeff, Scalar::Prime(100));
    }

    #[test]
    fn from_terms_merges_and_drops_zeros() {
        let r = ring(Field::Prime(7), &["x"], MonomialOrder::DegRevLex);
        let x = Monomial::variable(1, 0);
        let p = Polynomial::from_terms(
            &r,
            vec![
                Term { monomial: x.clone(), coeff: Scalar::Prime(3) },
                Term { monomial: r.one_monomial(), coeff: Scalar::Prime(1) },
                Term { monomial: x, coeff: Scalar::Prime(4) },
            ],
        );
        assert_eq!(p.to_string(), "1");
    }
}
