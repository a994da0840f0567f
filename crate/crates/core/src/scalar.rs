//! Exact scalars: rationals (machine-word fast path, arbitrary precision
//! fallback) and prime fields.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not a supported prime")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Q(Rational::Small(v, 1)),
            FieldSpec::PrimeField(p) => Scalar::Fp {
                v: v.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }

    /// Parses `7`, `-3/2`; fractions are reduced into the field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Parse {
            line: 0,
            msg: format!("bad scalar `{s}`"),
        };
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        match *self {
            FieldSpec::Rationals => Ok(Scalar::Q(Rational::from_big(BigRational::new(n, d)))),
            FieldSpec::PrimeField(p) => {
                let pb = BigInt::from(p);
                let nm = n.mod_floor(&pb).to_u64().unwrap();
                let dm = d.mod_floor(&pb).to_u64().unwrap();
                if dm == 0 {
                    return Err(bad());
                }
                Ok(&Scalar::Fp { v: nm, p } * &Scalar::Fp { v: dm, p }.inv())
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            FieldSpec::Rationals => "Q".into(),
            FieldSpec::PrimeField(p) => format!("F{p}"),
        }
    }

    pub fn parse_name(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s
            .strip_prefix("F")
            .ok_or_else(|| Error::InvalidInput(format!("unknown field `{s}`")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidInput(format!("unknown field `{s}`")))?;
        FieldSpec::prime(p)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A normalized rational number. `Small` is used whenever numerator and
/// denominator fit in an `i64`; the denominator is always positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(i64, i64),
    Big(BigRational),
}

impl Rational {
    fn from_i128(n: i128, d: i128) -> Rational {
        debug_assert!(d != 0);
        let g = n.gcd(&d);
        let (mut n, mut d) = (n / g, d / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational::Small(n, d),
            _ => Rational::Big(BigRational::new(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(r: BigRational) -> Rational {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational::Small(n, d),
            _ => Rational::Big(r),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rational::Big(r) => r.clone(),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    fn add(&self, o: &Rational) -> Rational {
        match (self, o) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * d + c * b, b * d)
            }
            _ => Rational::from_big(self.to_big() + o.to_big()),
        }
    }

    fn mul(&self, o: &Rational) -> Rational {
        match (self, o) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * o.to_big()),
        }
    }

    fn neg(&self) -> Rational {
        match self {
            Rational::Small(n, d) if *n != i64::MIN => Rational::Small(-n, *d),
            _ => Rational::from_big(-self.to_big()),
        }
    }

    fn inv(&self) -> Rational {
        match self {
            Rational::Small(n, d) => Rational::from_i128(*d as i128, *n as i128),
            Rational::Big(r) => Rational::from_big(r.recip()),
        }
    }

    fn cmp_value(&self, o: &Rational) -> Ordering {
        match (self, o) {
            (Rational::Small(a, b), Rational::Small(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_big().cmp(&o.to_big()),
        }
    }
}

/// An element of the session's ground field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => matches!(r, Rational::Small(1, 1)),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::Fp { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Scalar::Fp { v: (a + b) % p, p: *p },
            _ => panic!("mixed fields"),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => {
                if a.is_zero() || b.is_zero() {
                    Scalar::Q(Rational::Small(0, 1))
                } else {
                    Scalar::Q(a.mul(b))
                }
            }
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                v: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => panic!("mixed fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::Fp { v, p } => Scalar::Fp { v: (p - v) % p, p: *p },
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Scalar::Q(a) => Scalar::Q(a.inv()),
            Scalar::Fp { v, p } => {
                let mut r = 1u128;
                let mut b = *v as u128;
                let m = *p as u128;
                let mut e = p - 2;
                while e > 0 {
                    if e & 1 == 1 {
                        r = r * b % m;
                    }
                    b = b * b % m;
                    e >>= 1;
                }
                Scalar::Fp { v: r as u64, p: *p }
            }
        }
    }

    pub fn div(&self, o: &Scalar) -> Scalar {
        self.mul(&o.inv())
    }

    /// Rational value as `(numerator, denominator)` strings; prime field
    /// elements are reported as their least nonnegative residue.
    pub fn to_exact_string(&self) -> String {
        self.to_string()
    }

    /// Total order used only for deterministic tie-breaking (rationals by
    /// value, residues by representative).
    pub fn cmp_value(&self, o: &Scalar) -> Ordering {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => a.cmp_value(b),
            (Scalar::Fp { v: a, .. }, Scalar::Fp { v: b, .. }) => a.cmp(b),
            _ => panic!("mixed fields"),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(Rational::Small(n, _)) => *n < 0,
            Scalar::Q(Rational::Big(r)) => r.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }

    /// Rational value. Panics on prime-field elements.
    pub fn to_big_rational(&self) -> BigRational {
        match self {
            Scalar::Q(r) => r.to_big(),
            Scalar::Fp { .. } => panic!("not a rational"),
        }
    }

    pub fn from_big_rational(r: BigRational) -> Scalar {
        Scalar::Q(Rational::from_big(r))
    }

    /// Bit size of numerator plus denominator; zero for prime fields.
    pub fn height(&self) -> u64 {
        match self {
            Scalar::Q(Rational::Small(n, d)) => {
                (128 - n.unsigned_abs().leading_zeros() - d.unsigned_abs().leading_zeros()) as u64
            }
            Scalar::Q(Rational::Big(r)) => r.numer().bits() + r.denom().bits(),
            Scalar::Fp { .. } => 0,
        }
    }

    /// Integer value if this is an integral rational fitting in `i64`.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(Rational::Small(n, 1)) => Some(*n),
            Scalar::Fp { v, .. } => i64::try_from(*v).ok(),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(Rational::Small(n, 1)) => write!(f, "{n}"),
            Scalar::Q(Rational::Small(n, d)) => write!(f, "{n}/{d}"),
            Scalar::Q(Rational::Big(r)) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                Scalar::$m(self, o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                Scalar::$m(&self, &o)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_normalizes() {
        let q = FieldSpec::Rationals;
        let a = q.parse_scalar("2/4").unwrap();
        assert_eq!(a.to_string(), "1/2");
        let b = q.parse_scalar("-3/2").unwrap();
        assert_eq!((&a + &b).to_string(), "-1");
        assert_eq!((&a * &b).to_string(), "-3/4");
        assert_eq!((&a / &b).to_string(), "-1/3");
    }

    #[test]
    fn overflow_promotes_to_big() {
        let q = FieldSpec::Rationals;
        let big = q.from_i64(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Scalar::Q(Rational::Big(_))));
        let back = &sq / &big;
        assert_eq!(back, big);
    }

    #[test]
    fn prime_field_inverse() {
        let f = FieldSpec::prime(7).unwrap();
        for v in 1..7 {
            let x = f.from_i64(v);
            assert!((&x * &x.inv()).is_one());
        }
        assert_eq!(f.parse_scalar("1/2").unwrap(), f.from_i64(4));
        assert!(FieldSpec::prime(9).is_err());
    }
}
