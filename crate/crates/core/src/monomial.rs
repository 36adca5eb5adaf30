//! Exponent vectors and the monomial orders used for Gröbner bases.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

pub type Exponents = SmallVec<[u32; 8]>;

/// A monomial `x^e` over a fixed number of variables, with its total degree cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn new(exps: impl Into<Exponents>) -> Self {
        let exps = exps.into();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// The monomial `x_var`.
    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[var] = 1;
        m.degree = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect::<Exponents>(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit mask of the variables that occur (variables past 63 share the top bit).
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1u64 << i.min(63)))
    }

    /// If this is a pure power `x_i^k` with `k > 0`, returns `i`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, e) in self.exps.iter().enumerate() {
            if *e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Renders against variable names, e.g. `x^2*y`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, names }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, e) in self.names.iter().zip(self.mono.exponents()) {
            if *e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A multiplicative well-order on monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    DegRevLex,
    Lex,
    /// Degrevlex on the first `block` variables, ties broken by degrevlex on
    /// the rest. Any monomial involving the first block outranks every
    /// monomial free of it.
    Elimination { block: usize },
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::DegRevLex
    }
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => a
                .degree
                .cmp(&b.degree)
                .then_with(|| revlex(&a.exps, &b.exps)),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Elimination { block } => {
                let k = block.min(a.exps.len());
                let (a1, a2) = a.exps.split_at(k);
                let (b1, b2) = b.exps.split_at(k);
                let da: u32 = a1.iter().sum();
                let db: u32 = b1.iter().sum();
                da.cmp(&db)
                    .then_with(|| revlex(a1, b1))
                    .then_with(|| (a.degree - da).cmp(&(b.degree - db)))
                    .then_with(|| revlex(a2, b2))
            }
        }
    }

    /// Short name used in ring declarations.
    pub fn name(&self) -> String {
        match self {
            MonomialOrder::DegRevLex => "degrevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Elimination { block } => format!("elim({block})"),
        }
    }
}

/// Reverse lexicographic tie-break for equal degree: the monomial with the
/// smaller exponent in the last differing variable is larger.
fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(Exponents::from_slice(e))
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::DegRevLex;
        // x^2 > xy > y^2 ; xz < y^2 in degrevlex over (x, y, z)
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[0, 3]), &m(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 3])), Ordering::Greater);
    }

    #[test]
    fn elimination_ranks_block_first() {
        let o = MonomialOrder::Elimination { block: 1 };
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b).unwrap(), m(&[1, 0, 1]));
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
        assert!(m(&[1, 0]).is_coprime(&m(&[0, 4])));
        assert_eq!(m(&[0, 3, 0]).pure_power_var(), Some(1));
        assert_eq!(m(&[1, 3, 0]).pure_power_var(), None);
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..4, 3).prop_map(|v| Monomial::new(Exponents::from_vec(v)))
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::DegRevLex),
            Just(MonomialOrder::Lex),
            (0usize..4).prop_map(|block| MonomialOrder::Elimination { block }),
        ]
    }

    proptest! {
        #[test]
        fn order_axioms(o in arb_order(), a in arb_mono(), b in arb_mono(), w in arb_mono()) {
            let one = Monomial::one(3);
            // totality: equal only for identical exponent vectors
            prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
            // multiplicativity
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&w), &b.mul(&w)));
            // 1 is minimal
            prop_assert_ne!(o.cmp(&one, &a), Ordering::Greater);
        }
    }
}
