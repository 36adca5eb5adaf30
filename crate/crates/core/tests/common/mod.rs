#![allow(dead_code)]

use socle_lab::{Ideal, Polynomial, RingPresentation, Scalar};
use socle_lab_testkit::SparsePoly;
use std::sync::Arc;

pub const P: u64 = 101;

/// Coefficients of an `F_p` polynomial as a testkit sparse map.
pub fn sparse(f: &Polynomial) -> SparsePoly {
    f.terms()
        .iter()
        .map(|t| {
            let c = match &t.coeff {
                Scalar::Prime(c) => *c as u64,
                Scalar::Rational(_) => panic!("oracle conversion needs a prime field"),
            };
            (t.monomial.exponents().to_vec(), c)
        })
        .collect()
}

/// Generators of the preimage of `i` in the polynomial ring.
pub fn preimage(i: &Ideal) -> Vec<SparsePoly> {
    i.preimage_gens().iter().map(sparse).collect()
}

pub fn ring(spec: &str) -> Arc<RingPresentation> {
    RingPresentation::parse(spec).unwrap()
}

pub fn ideal(r: &Arc<RingPresentation>, src: &str) -> Ideal {
    r.parse_ideal(src).unwrap()
}

pub fn poly(r: &Arc<RingPresentation>, src: &str) -> Polynomial {
    r.parse_poly(src).unwrap()
}

/// Length of the local ring at the origin, from the truncated-dimension oracle.
pub fn oracle_length(i: &Ideal) -> u64 {
    socle_lab_testkit::local_length(&preimage(i), i.poly_ring().nvars(), 14, P).expect("oracle length settles")
}

pub fn oracle_socle(i: &Ideal) -> u64 {
    socle_lab_testkit::socle_dimension(&preimage(i), i.poly_ring().nvars(), 14, P).expect("oracle socle settles")
}

/// Macaulay-matrix membership of `f` in the preimage of `i`, using multiples
/// up to degree `bound`.
pub fn oracle_contains(i: &Ideal, f: &Polynomial, bound: u32) -> bool {
    socle_lab_testkit::macaulay_contains_up_to(&preimage(i), &sparse(f), i.poly_ring().nvars(), bound, P)
}
