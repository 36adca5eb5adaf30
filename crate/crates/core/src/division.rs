//! Multivariate division: normal forms against an ordered list of divisors.

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Term};

/// Quotients and remainder with `f = sum(quotients[i] * divisors[i]) + remainder`.
#[derive(Clone, Debug)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Normal form of `f` against `divisors`.
///
/// Always reduces the highest reducible monomial, using the first divisor (in
/// the given order) whose leading monomial divides it. No monomial of the
/// result is divisible by a leading monomial of `divisors`.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    check(f, divisors)?;
    Ok(reduce(f, divisors, false).remainder)
}

/// Like [`normal_form`], also returning the quotients.
pub fn divide(f: &Polynomial, divisors: &[Polynomial]) -> Result<Division> {
    check(f, divisors)?;
    Ok(reduce(f, divisors, true))
}

/// Exact quotient `f / g`; errors if `g` does not divide `f`.
pub fn exact_quotient(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if g.is_zero() {
        return Err(Error::InexactDivision("division by zero polynomial".into()));
    }
    let d = divide(f, std::slice::from_ref(g))?;
    if !d.remainder.is_zero() {
        return Err(Error::InexactDivision(format!("{g} does not divide {f}")));
    }
    Ok(d.quotients.into_iter().next().expect("one quotient"))
}

fn check(f: &Polynomial, divisors: &[Polynomial]) -> Result<()> {
    for g in divisors {
        f.ring().check_same(g.ring())?;
        if g.is_zero() {
            return Err(Error::Precondition("zero divisor in normal form".into()));
        }
    }
    Ok(())
}

pub(crate) fn reduce(f: &Polynomial, divisors: &[Polynomial], track: bool) -> Division {
    let ring = f.ring();
    let field = ring.field();
    let mut quotient_terms: Vec<Vec<Term>> = if track { vec![Vec::new(); divisors.len()] } else { Vec::new() };
    let mut rem: Vec<Term> = Vec::new();
    let mut p = f.clone();
    let masks: Vec<u64> = divisors.iter().map(|g| g.lm().support_mask()).collect();
    while !p.is_zero() {
        let lead = &p.terms()[0];
        let lead_mask = lead.monomial.support_mask();
        let hit = divisors.iter().enumerate().find_map(|(i, g)| {
            if masks[i] & !lead_mask != 0 {
                return None;
            }
            g.lm().quotient_of(&lead.monomial).map(|q| (i, q))
        });
        match hit {
            Some((i, q)) => {
                let g = &divisors[i];
                let c = field.div(&lead.coeff, g.lc());
                if track {
                    quotient_terms[i].push(Term { monomial: q.clone(), coeff: c.clone() });
                }
                let minus_c = field.neg(&c);
                p = p.combine(g, Some((&minus_c, Some(&q))));
            }
            None => {
                let mut terms = p.into_terms();
                let t = terms.remove(0);
                rem.push(t);
                p = Polynomial::from_sorted_terms(ring, terms);
            }
        }
    }
    let quotients = quotient_terms
        .into_iter()
        .map(|ts| Polynomial::from_terms(ring, ts))
        .collect();
    Division { quotients, remainder: Polynomial::from_sorted_terms(ring, rem) }
}
