//! Exact coefficient fields: the rationals and prime fields `F_p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::PolyError;

/// Largest supported prime modulus. Products of two residues must fit in a `u64`.
pub const MAX_PRIME: u32 = (1 << 31) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Self, PolyError> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(PolyError::NotPrime(p as u64));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match *self {
            Field::Rational => Coeff::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coeff::Fp {
                v: n.rem_euclid(p as i64) as u32,
                p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match *self {
            Field::Rational => Coeff::Q(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor_u32(p);
                Coeff::Fp { v: r, p }
            }
        }
    }

    /// `num/den` in this field; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coeff, PolyError> {
        let d = self.from_bigint(den);
        let inv = d.inv().ok_or(PolyError::DivisionByZero)?;
        Ok(&self.from_bigint(num) * &inv)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

trait ModFloorU32 {
    fn mod_floor_u32(&self, p: u32) -> u32;
}

impl ModFloorU32 for BigInt {
    fn mod_floor_u32(&self, p: u32) -> u32 {
        let m = BigInt::from(p);
        let r = ((self % &m) + &m) % &m;
        r.to_u32().expect("residue fits in u32")
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Rationals are kept in lowest terms with positive
/// denominator (guaranteed by `BigRational`); residues lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    Fp { v: u32, p: u32 },
}

impl Coeff {
    pub fn field(&self) -> Field {
        match self {
            Coeff::Q(_) => Field::Rational,
            Coeff::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_zero(),
            Coeff::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_one(),
            Coeff::Fp { v, .. } => *v == 1,
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_negative(),
            Coeff::Fp { .. } => false,
        }
    }

    pub fn inv(&self) -> Option<Coeff> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Coeff::Q(q) => Coeff::Q(q.recip()),
            Coeff::Fp { v, p } => Coeff::Fp {
                v: pow_mod(*v as u64, (*p - 2) as u64, *p as u64) as u32,
                p: *p,
            },
        })
    }

    pub fn abs(&self) -> Coeff {
        match self {
            Coeff::Q(q) => Coeff::Q(q.abs()),
            c => c.clone(),
        }
    }

    /// Integer value when the coefficient is an integer (rationals) or the
    /// canonical residue (prime fields).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Coeff::Q(q) if q.is_integer() => q.to_integer().to_i64(),
            Coeff::Q(_) => None,
            Coeff::Fp { v, .. } => Some(*v as i64),
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn field_mismatch(a: &Coeff, b: &Coeff) -> ! {
    panic!("coefficient field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a + b),
            (Coeff::Fp { v: a, p }, Coeff::Fp { v: b, p: q }) if p == q => Coeff::Fp {
                v: ((*a as u64 + *b as u64) % *p as u64) as u32,
                p: *p,
            },
            _ => field_mismatch(self, rhs),
        }
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a - b),
            (Coeff::Fp { v: a, p }, Coeff::Fp { v: b, p: q }) if p == q => Coeff::Fp {
                v: ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32,
                p: *p,
            },
            _ => field_mismatch(self, rhs),
        }
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a * b),
            (Coeff::Fp { v: a, p }, Coeff::Fp { v: b, p: q }) if p == q => Coeff::Fp {
                v: ((*a as u64 * *b as u64) % *p as u64) as u32,
                p: *p,
            },
            _ => field_mismatch(self, rhs),
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Q(a) => Coeff::Q(-a),
            Coeff::Fp { v, p } => Coeff::Fp {
                v: if *v == 0 { 0 } else { *p - *v },
                p: *p,
            },
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Coeff::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Coeff::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_normalize() {
        let q = Field::Rational;
        let c = q.from_ratio(&BigInt::from(4), &BigInt::from(-6)).unwrap();
        assert_eq!(c.to_string(), "-2/3");
        assert!(c.is_negative());
        assert_eq!((&c * &c.inv().unwrap()), q.one());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a.to_string(), "6");
        assert_eq!(&a * &a, f.one());
        assert_eq!(&f.from_i64(3) * &f.from_i64(3).inv().unwrap(), f.one());
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(14)).is_err());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
    }
}
