//! Exact scalars: arbitrary-precision rationals or prime-field residues.
//!
//! Every computation in this crate is exact; there is no floating point.
//! A [`Field`] is chosen once per session and all scalars carry it.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The base field of a session.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Field {
    /// The rational numbers.
    Q,
    /// The prime field with `p` elements.
    Fp { p: u64 },
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, Error> {
        if is_prime(p) {
            Ok(Field::Fp { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Q => 0,
            Field::Fp { p } => p,
        }
    }

    /// True when the characteristic is zero or does not divide `n`.
    pub fn char_coprime_to(self, n: u64) -> bool {
        match self.characteristic() {
            0 => true,
            p => n % p != 0,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Fp { p } => Scalar::Fp {
                p,
                r: v.rem_euclid(p as i64) as u64,
            },
        }
    }

    /// Parses `"p"` or `"p/q"`. Over a prime field the denominator is inverted mod p.
    pub fn parse(self, s: &str) -> Result<Scalar, Error> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let n: BigInt = num.parse().map_err(|_| Error::ScalarParse(s.to_string()))?;
        let d: BigInt = match den {
            Some(d) => d.parse().map_err(|_| Error::ScalarParse(s.to_string()))?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(Error::ScalarParse(s.to_string()));
        }
        match self {
            Field::Q => Ok(Scalar::Q(BigRational::new(n, d))),
            Field::Fp { p } => {
                let pb = BigInt::from(p);
                let nr = ((n % &pb) + &pb) % &pb;
                let dr = ((d % &pb) + &pb) % &pb;
                let nr: u64 = nr.try_into().unwrap();
                let dr: u64 = dr.try_into().unwrap();
                if dr == 0 {
                    return Err(Error::ScalarParse(s.to_string()));
                }
                Ok(Scalar::Fp {
                    p,
                    r: mul_mod(nr, inv_mod(dr, p), p),
                })
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "division by zero in F_{p}");
    pow_mod(a, p - 2, p)
}

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator; residues lie in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u64, r: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { r, .. } => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { r, .. } => *r == 1,
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(q) => {
                assert!(!q.is_zero(), "division by zero");
                Scalar::Q(q.recip())
            }
            Scalar::Fp { p, r } => Scalar::Fp {
                p: *p,
                r: inv_mod(*r, *p),
            },
        }
    }

    /// Integer power, negative exponents via the inverse.
    pub fn pow_i64(&self, e: i64) -> Scalar {
        if e < 0 {
            return self.inv().pow_i64(-e);
        }
        let mut acc = self.field().one();
        let mut b = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    fn q(&self) -> &BigRational {
        match self {
            Scalar::Q(q) => q,
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => write!(f, "{q}"),
            Scalar::Fp { r, .. } => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! same_p {
    ($a:expr, $b:expr) => {
        assert_eq!($a, $b, "mixed prime fields")
    };
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { p, r: a }, Scalar::Fp { p: q, r: b }) => {
                same_p!(p, q);
                Scalar::Fp {
                    p: *p,
                    r: (a + b) % p,
                }
            }
            _ => panic!("mixed base fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { p, r: a }, Scalar::Fp { p: q, r: b }) => {
                same_p!(p, q);
                Scalar::Fp {
                    p: *p,
                    r: (a + p - b) % p,
                }
            }
            _ => panic!("mixed base fields"),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { p, r: a }, Scalar::Fp { p: q, r: b }) => {
                same_p!(p, q);
                Scalar::Fp {
                    p: *p,
                    r: mul_mod(*a, *b, *p),
                }
            }
            _ => panic!("mixed base fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, r } => Scalar::Fp {
                p: *p,
                r: (p - r) % p,
            },
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// Divides exactly; panics on a zero divisor.
impl std::ops::Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Scalar {
    /// Rational value as an `f64`-free printable pair for diagnostics only.
    pub fn numer_denom_strings(&self) -> (String, String) {
        match self {
            Scalar::Q(q) => (q.numer().to_string(), q.denom().to_string()),
            Scalar::Fp { r, .. } => (r.to_string(), "1".to_string()),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(_) => Some(self.q()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let f = Field::Q;
        let a = f.parse("2/4").unwrap();
        assert_eq!(a.to_string(), "1/2");
        let b = f.parse("-3/-6").unwrap();
        assert_eq!(b.to_string(), "1/2");
        let c = f.parse("3/-6").unwrap();
        assert_eq!(c.to_string(), "-1/2");
        assert_eq!(f.parse("4/2").unwrap().to_string(), "2");
    }

    #[test]
    fn field_axioms_q() {
        let f = Field::Q;
        let a = f.parse("2/3").unwrap();
        let b = f.parse("-5/7").unwrap();
        let c = f.parse("11/13").unwrap();
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert!((&a * &a.inv()).is_one());
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn field_axioms_fp() {
        let f = Field::prime(7).unwrap();
        for x in 1..7 {
            let a = f.from_i64(x);
            assert!((&a * &a.inv()).is_one());
        }
        let a = f.from_i64(-3);
        assert_eq!(a.to_string(), "4");
        assert_eq!(f.parse("1/2").unwrap().to_string(), "4");
    }

    #[test]
    fn prime_check() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(97).is_ok());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(91).is_err());
    }

    #[test]
    fn powers() {
        let f = Field::Q;
        let two = f.from_i64(2);
        assert_eq!(two.pow_i64(10), f.from_i64(1024));
        assert_eq!(two.pow_i64(-1).to_string(), "1/2");
        assert_eq!(f.from_i64(-1).pow_i64(5), f.from_i64(-1));
    }
}
