//! Exact coefficient fields: the rationals and prime fields `F_p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime; keeps products of two residues inside `u64`.
pub const MAX_PRIME: u32 = (1 << 31) - 1;

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

/// An element of a [`Field`].
///
/// Rationals are kept in lowest terms with a positive denominator (this is
/// what `BigRational` normalizes to); residues live in `[0, p)`. A scalar does
/// not know its own field, arithmetic always goes through [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime(u32),
}

impl Field {
    /// `F_p`, checking that `p` is a prime that fits the word-size arithmetic.
    pub fn prime(p: u32) -> Result<Field> {
        if p < 2 || p > MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not an admissible prime")));
        }
        Ok(Field::Prime(p))
    }

    /// Field of characteristic `c`; `0` means the rationals.
    pub fn with_characteristic(c: u32) -> Result<Field> {
        if c == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(c)
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(_) => Scalar::Prime(0),
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::one()),
            Field::Prime(_) => Scalar::Prime(1),
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Prime(n.rem_euclid(p as i64) as u32),
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Prime(r.to_u32().expect("residue fits in u32"))
            }
        }
    }

    /// `num / den`; `None` when the denominator vanishes in this field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        let d = self.from_bigint(den);
        if self.is_zero(&d) {
            return None;
        }
        Some(self.div(&self.from_bigint(num), &d))
    }

    pub fn is_zero(self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime(v) => *v == 0,
        }
    }

    pub fn is_one(self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime(v) => *v == 1,
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rational, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Field::Prime(p), Scalar::Prime(x), Scalar::Prime(y)) => {
                Scalar::Prime(((*x as u64 + *y as u64) % p as u64) as u32)
            }
            _ => mixed(self),
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rational, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x - y),
            (Field::Prime(p), Scalar::Prime(x), Scalar::Prime(y)) => {
                Scalar::Prime(((*x as u64 + p as u64 - *y as u64) % p as u64) as u32)
            }
            _ => mixed(self),
        }
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rational, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Field::Prime(p), Scalar::Prime(x), Scalar::Prime(y)) => {
                Scalar::Prime(((*x as u64 * *y as u64) % p as u64) as u32)
            }
            _ => mixed(self),
        }
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Rational, Scalar::Rational(x)) => Scalar::Rational(-x),
            (Field::Prime(p), Scalar::Prime(x)) => Scalar::Prime(if *x == 0 { 0 } else { p - x }),
            _ => mixed(self),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        Some(match (self, a) {
            (Field::Rational, Scalar::Rational(x)) => Scalar::Rational(x.recip()),
            (Field::Prime(p), Scalar::Prime(x)) => Scalar::Prime(pow_mod(*x, p - 2, p)),
            _ => mixed(self),
        })
    }

    /// `a / b`. Panics when `b` is zero.
    pub fn div(self, a: &Scalar, b: &Scalar) -> Scalar {
        let inv = self.inv(b).expect("division by zero scalar");
        self.mul(a, &inv)
    }

    /// True iff the scalar belongs to this field's representation.
    pub fn contains(self, a: &Scalar) -> bool {
        match (self, a) {
            (Field::Rational, Scalar::Rational(_)) => true,
            (Field::Prime(p), Scalar::Prime(v)) => *v < p,
            _ => false,
        }
    }

    /// Whether `a` is a square in this field (Euler's criterion over `F_p`).
    pub fn is_square(self, a: &Scalar) -> bool {
        match (self, a) {
            (_, s) if self.is_zero(s) => true,
            (Field::Prime(2), _) => true,
            (Field::Prime(p), Scalar::Prime(v)) => pow_mod(*v, (p - 1) / 2, p) == 1,
            (Field::Rational, Scalar::Rational(r)) => {
                !r.is_negative() && is_square_int(r.numer()) && is_square_int(r.denom())
            }
            _ => mixed(self),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime(v) => write!(f, "{v}"),
        }
    }
}

impl Scalar {
    /// Sign used when printing: rationals can be negative, residues never are.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }
}

fn mixed(field: Field) -> ! {
    panic!("scalar does not belong to field {field}")
}

fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let m = p as u64;
    let mut acc = 1u64;
    let mut b = base as u64 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u32
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn is_square_int(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Field::prime(101).is_ok());
        assert!(Field::prime(100).is_err());
        assert!(Field::prime(1).is_err());
        assert_eq!(Field::with_characteristic(0).unwrap(), Field::Rational);
    }

    #[test]
    fn residues_stay_reduced() {
        let f = Field::Prime(7);
        assert_eq!(f.from_i64(-1), Scalar::Prime(6));
        assert_eq!(f.add(&Scalar::Prime(5), &Scalar::Prime(4)), Scalar::Prime(2));
        assert_eq!(f.mul(&Scalar::Prime(3), &f.inv(&Scalar::Prime(3)).unwrap()), f.one());
        assert_eq!(f.neg(&Scalar::Prime(0)), Scalar::Prime(0));
    }

    #[test]
    fn rationals_in_lowest_terms() {
        let q = Field::Rational;
        let half = q.from_ratio(&BigInt::from(2), &BigInt::from(-4)).unwrap();
        assert_eq!(half.to_string(), "-1/2");
        assert!(q.from_ratio(&BigInt::from(1), &BigInt::from(0)).is_none());
        assert!(Field::Prime(5).from_ratio(&BigInt::from(1), &BigInt::from(10)).is_none());
    }

    #[test]
    fn squares() {
        // 101 = 1 mod 4 so -1 is a square, 2 is not since 101 = 5 mod 8
        let f = Field::Prime(101);
        assert!(f.is_square(&f.from_i64(-1)));
        assert!(!f.is_square(&f.from_i64(2)));
        assert!(!Field::Rational.is_square(&Field::Rational.from_i64(-1)));
        assert!(Field::Rational.is_square(&Field::Rational.from_ratio(&4.into(), &9.into()).unwrap()));
    }
}
