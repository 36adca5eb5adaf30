//! Quotient rings `S/a` of a polynomial ring, viewed locally at the origin.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::Result;
use crate::field::Field;
use crate::groebner::{cache, GroebnerBasis};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use crate::text;

/// `S/a` with `S` a polynomial ring and `a` given by generators.
///
/// The graded flag is computed from the relations and is true iff all of
/// them are homogeneous.
#[derive(Debug)]
pub struct RingPresentation {
    ring: Arc<PolyRing>,
    relations: Vec<Polynomial>,
    graded: bool,
    basis: OnceLock<Arc<GroebnerBasis>>,
}

impl PartialEq for RingPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.relations == other.relations
    }
}

impl Eq for RingPresentation {}

impl RingPresentation {
    pub fn new(ring: Arc<PolyRing>, relations: Vec<Polynomial>) -> Result<Arc<Self>> {
        for r in &relations {
            ring.check_same(r.ring())?;
        }
        let mut rels: Vec<Polynomial> = Vec::new();
        for r in relations {
            if !r.is_zero() && !rels.iter().any(|s| s.monic() == r.monic()) {
                rels.push(r);
            }
        }
        let graded = rels.iter().all(Polynomial::is_homogeneous);
        Ok(Arc::new(RingPresentation { ring, relations: rels, graded, basis: OnceLock::new() }))
    }

    /// The polynomial ring itself.
    pub fn free(ring: Arc<PolyRing>) -> Arc<Self> {
        Arc::new(RingPresentation { ring, relations: Vec::new(), graded: true, basis: OnceLock::new() })
    }

    pub fn parse(spec: &str) -> Result<Arc<Self>> {
        text::parse_ring_spec(spec)
    }

    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn names(&self) -> &[String] {
        self.ring.names()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    /// Reduced Gröbner basis of the defining ideal.
    pub fn defining_basis(&self) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.basis.get() {
            return Ok(gb.clone());
        }
        let gb = cache::groebner_basis(&self.ring, &self.relations)?;
        Ok(self.basis.get_or_init(|| gb).clone())
    }

    /// Normal form of a representative modulo the defining ideal.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        self.defining_basis()?.normal_form(f)
    }

    pub fn var(&self, name: &str) -> Result<Polynomial> {
        Polynomial::var(&self.ring, name)
    }

    pub fn variables(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| Polynomial::variable(&self.ring, i)).collect()
    }

    pub fn parse_poly(&self, src: &str) -> Result<Polynomial> {
        text::parse_polynomial(&self.ring, src)
    }

    /// Parses `(p1, ..., pk)` into an ideal of this ring.
    pub fn parse_ideal(self: &Arc<Self>, src: &str) -> Result<Ideal> {
        Ideal::new(self, text::parse_polynomial_list(&self.ring, src)?)
    }

    pub fn ideal(self: &Arc<Self>, gens: Vec<Polynomial>) -> Result<Ideal> {
        Ideal::new(self, gens)
    }

    /// The ideal of all variables.
    pub fn max_ideal(self: &Arc<Self>) -> Result<Ideal> {
        Ideal::new(self, self.variables())
    }

    pub fn zero_ideal(self: &Arc<Self>) -> Ideal {
        Ideal::new(self, Vec::new()).expect("empty generator list")
    }

    /// Krull dimension of the ring.
    pub fn dimension(self: &Arc<Self>) -> Result<usize> {
        self.zero_ideal().krull_dimension()
    }

    /// Structural equality, as an error naming both rings on mismatch.
    pub fn check_same(&self, other: &RingPresentation) -> Result<()> {
        if std::ptr::eq(self, other) || self == other {
            return Ok(());
        }
        Err(crate::error::Error::RingMismatch { left: self.to_string(), right: other.to_string() })
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring)?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self.relations.iter().map(|r| r.to_string()).collect();
            write!(f, " / ({})", rels.join(", "))?;
        }
        Ok(())
    }
}
