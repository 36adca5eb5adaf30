//! Seeded random linear forms and parameter ideals.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::presentation::RingPresentation;

/// Rejections allowed before a sample is given up.
pub const MAX_REJECTIONS: usize = 50;

/// Bound on random integer coefficients over `Q`.
pub const RATIONAL_COEFF_BOUND: i64 = 9;

/// Draws linear forms and `d`-generated origin-primary ideals from a seeded
/// stream, so runs are reproducible.
#[derive(Clone, Debug)]
pub struct ParameterSampler {
    rng: ChaCha8Rng,
    perturb: bool,
}

impl ParameterSampler {
    pub fn new(seed: u64) -> Self {
        ParameterSampler { rng: ChaCha8Rng::seed_from_u64(seed), perturb: false }
    }

    /// Makes the generators inhomogeneous: the `k`-th form gets random
    /// degree-2 terms `c * x * f_j` built from the earlier forms `f_j`.
    pub fn with_perturbation(mut self, on: bool) -> Self {
        self.perturb = on;
        self
    }

    /// Uniform in `F_p`, or a uniform integer in `[-9, 9]` over `Q`.
    pub fn scalar(&mut self, field: Field) -> Scalar {
        match field {
            Field::Prime(p) => Scalar::Prime(self.rng.random_range(0..p)),
            Field::Rational => field.from_i64(self.rng.random_range(-RATIONAL_COEFF_BOUND..=RATIONAL_COEFF_BOUND)),
        }
    }

    /// A nonzero linear form in all variables.
    pub fn linear_form(&mut self, pres: &RingPresentation) -> Polynomial {
        let ring = pres.poly_ring();
        let n = ring.nvars();
        loop {
            let terms: Vec<Term> = (0..n)
                .map(|v| Term { monomial: Monomial::variable(n, v), coeff: self.scalar(ring.field()) })
                .collect();
            let f = Polynomial::from_terms(ring, terms);
            if !f.is_zero() {
                return f;
            }
        }
    }

    fn perturbation(&mut self, pres: &RingPresentation, earlier: &[Polynomial]) -> Polynomial {
        let ring = pres.poly_ring();
        let n = ring.nvars();
        let mut acc = Polynomial::zero(ring);
        for f in earlier {
            let x = Monomial::variable(n, self.rng.random_range(0..n));
            acc = acc.combine(f, Some((&self.scalar(ring.field()), Some(&x))));
        }
        acc
    }

    /// `d` random forms generating an origin-primary ideal.
    pub fn parameter_ideal(&mut self, pres: &Arc<RingPresentation>, d: usize) -> Result<Ideal> {
        for _ in 0..=MAX_REJECTIONS {
            let forms: Vec<Polynomial> = (0..d).map(|_| self.linear_form(pres)).collect();
            let gens: Vec<Polynomial> = if self.perturb {
                (0..d).map(|k| forms[k].combine(&self.perturbation(pres, &forms[..k]), None)).collect()
            } else {
                forms
            };
            let q = Ideal::new(pres, gens)?;
            if q.gens().len() == d && q.is_origin_primary()? {
                return Ok(q);
            }
        }
        Err(Error::SamplingFailed { attempts: MAX_REJECTIONS + 1 })
    }
}
