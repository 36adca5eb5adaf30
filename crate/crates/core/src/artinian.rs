//! Finite-dimensional quotients `R/J` through their standard monomials.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::ideal::Ideal;
use crate::monomial::Monomial;

/// Refuse quotients with more standard monomials than this.
pub const DEFAULT_LENGTH_CAP: usize = 2_000_000;

/// `R/J` for an origin-primary `J`, with the standard monomials of the
/// reduced basis of `J + a` as a vector-space basis.
#[derive(Clone, Debug)]
pub struct ArtinianQuotient {
    ideal: Ideal,
    basis: Arc<GroebnerBasis>,
    standard: Vec<Monomial>,
}

impl ArtinianQuotient {
    pub fn new(ideal: &Ideal) -> Result<Self> {
        Self::with_cap(ideal, DEFAULT_LENGTH_CAP)
    }

    pub fn with_cap(ideal: &Ideal, cap: usize) -> Result<Self> {
        ideal.origin_primary_check()?;
        let basis = ideal.basis()?;
        let standard = standard_monomials(&basis, cap)?;
        Ok(ArtinianQuotient { ideal: ideal.clone(), basis, standard })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn basis(&self) -> &Arc<GroebnerBasis> {
        &self.basis
    }

    /// Standard monomials in ascending order.
    pub fn standard_monomials(&self) -> &[Monomial] {
        &self.standard
    }

    pub fn length(&self) -> u64 {
        self.standard.len() as u64
    }
}

/// Monomials divisible by no leading monomial of `gb`, in ascending order.
/// Requires the quotient to be finite-dimensional; fails past `cap` monomials.
pub fn standard_monomials(gb: &GroebnerBasis, cap: usize) -> Result<Vec<Monomial>> {
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    let ring = gb.ring();
    let n = ring.nvars();
    let one = ring.one_monomial();
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(one.clone());
    queue.push_back(one);
    while let Some(m) = queue.pop_front() {
        for v in 0..n {
            let next = m.mul(&Monomial::variable(n, v));
            if seen.contains(&next) || !gb.is_standard(&next) {
                continue;
            }
            if seen.len() >= cap {
                return Err(Error::ResourceCap(format!("quotient has more than {cap} standard monomials")));
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    let order = ring.order();
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| order.cmp(a, b));
    Ok(out)
}
