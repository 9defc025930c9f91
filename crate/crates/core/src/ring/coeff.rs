//! Exact coefficients: arbitrary-precision rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    /// Prime field of the given characteristic.
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if p >= 1 << 62 {
            return Err(Error::InvalidRing(format!("characteristic {p} too large")));
        }
        Ok(Field::Prime(p))
    }

    /// Parses `qq` or `fp:<p>`.
    pub fn parse(s: &str) -> Result<Field> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("qq") {
            return Ok(Field::Rationals);
        }
        if let Some(rest) = s.strip_prefix("fp:").or_else(|| s.strip_prefix("FP:")) {
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad characteristic in field `{s}`")))?;
            return Field::prime(p);
        }
        Err(Error::Parse(format!("unknown field `{s}` (expected qq or fp:<p>)")))
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match *self {
            Field::Rationals => Coeff::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coeff::P {
                v: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// Builds `num/den` in this field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        if den.is_zero() {
            return Err(Error::Parse("division by zero in coefficient".into()));
        }
        match *self {
            Field::Rationals => Ok(Coeff::Q(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let n = num.mod_floor(&m).to_u64().unwrap();
                let d = den.mod_floor(&m).to_u64().unwrap();
                let d = Coeff::P { v: d, p };
                let inv = d
                    .inv()
                    .ok_or_else(|| Error::Parse(format!("denominator vanishes mod {p}")))?;
                Ok(&Coeff::P { v: n, p } * &inv)
            }
        }
    }

    /// Parses an unsigned decimal integer or fraction such as `3` or `3/4`.
    pub fn parse_coeff(&self, s: &str) -> Result<Coeff> {
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a, b),
            None => (s, "1"),
        };
        let num: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))?;
        let den: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))?;
        self.from_ratio(&num, &den)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "qq"),
            Field::Prime(p) => write!(f, "fp:{p}"),
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

/// A field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field elements are canonical representatives in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    P { v: u64, p: u64 },
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_zero(),
            Coeff::P { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_one(),
            Coeff::P { v, .. } => *v == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Coeff::Q(_) => Field::Rationals,
            Coeff::P { p, .. } => Field::Prime(*p),
        }
    }

    /// True for rationals with a leading minus sign. Prime-field elements are
    /// never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_negative(),
            Coeff::P { .. } => false,
        }
    }

    pub fn inv(&self) -> Option<Coeff> {
        match self {
            Coeff::Q(q) => (!q.is_zero()).then(|| Coeff::Q(q.recip())),
            Coeff::P { v, p } => {
                if *v == 0 {
                    return None;
                }
                Some(Coeff::P {
                    v: pow_mod(*v, p - 2, *p),
                    p: *p,
                })
            }
        }
    }

    pub fn abs(&self) -> Coeff {
        match self {
            Coeff::Q(q) => Coeff::Q(q.abs()),
            c => c.clone(),
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

macro_rules! binop {
    ($trait:ident, $method:ident, $q:expr, $fp:expr) => {
        impl<'a> std::ops::$trait<&'a Coeff> for &'a Coeff {
            type Output = Coeff;
            fn $method(self, rhs: &'a Coeff) -> Coeff {
                match (self, rhs) {
                    (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q($q(a, b)),
                    (Coeff::P { v: a, p }, Coeff::P { v: b, p: p2 }) => {
                        assert_eq!(p, p2, "coefficients from different prime fields");
                        Coeff::P {
                            v: $fp(*a, *b, *p),
                            p: *p,
                        }
                    }
                    _ => panic!("coefficients from different fields"),
                }
            }
        }
    };
}

// Integers skip the gcd normalization of `Ratio`.
fn q_add(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_integer() && b.is_integer() {
        return BigRational::from_integer(a.numer() + b.numer());
    }
    a + b
}

fn q_sub(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_integer() && b.is_integer() {
        return BigRational::from_integer(a.numer() - b.numer());
    }
    a - b
}

fn q_mul(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_integer() && b.is_integer() {
        return BigRational::from_integer(a.numer() * b.numer());
    }
    a * b
}

binop!(Add, add, q_add, |a: u64, b: u64, p: u64| (a + b) % p);
binop!(Sub, sub, q_sub, |a: u64, b: u64, p: u64| (a + p - b) % p);
binop!(Mul, mul, q_mul, mul_mod);

/// `(s, t)` with `s·c = t·a` and, for integers, `s = a/g`, `t = c/g` where
/// `g = gcd(a, c)`. Otherwise `s = 1`, `t = c/a`.
pub(crate) fn cofactors(a: &Coeff, c: &Coeff) -> (Coeff, Coeff) {
    if let (Coeff::Q(x), Coeff::Q(y)) = (a, c) {
        if x.is_integer() && y.is_integer() {
            let g = x.numer().gcd(y.numer());
            return (
                Coeff::Q(BigRational::from_integer(x.numer() / &g)),
                Coeff::Q(BigRational::from_integer(y.numer() / &g)),
            );
        }
    }
    (a.field().one(), c * &a.inv().expect("nonzero lead coefficient"))
}

/// Divides integer coefficients by their content and flips signs so the
/// first one is positive. `None` if some coefficient is not an integer or
/// nothing would change.
pub(crate) fn make_primitive(cs: &[&Coeff]) -> Option<Vec<Coeff>> {
    let mut ints = Vec::with_capacity(cs.len());
    for c in cs {
        match c {
            Coeff::Q(q) if q.is_integer() => ints.push(q.numer()),
            _ => return None,
        }
    }
    let mut by_size: Vec<&BigInt> = ints.clone();
    by_size.sort_by_key(|n| n.bits());
    let mut g = BigInt::zero();
    for n in by_size {
        g = g.gcd(n);
        if g.is_one() {
            break;
        }
    }
    if ints.first().is_some_and(|n| n.is_negative()) {
        g = -g;
    }
    if g.is_one() || g.is_zero() {
        return None;
    }
    Some(ints.into_iter().map(|n| Coeff::Q(BigRational::from_integer(n / &g))).collect())
}

/// Least common multiple of the denominators. `None` over prime fields.
pub(crate) fn denominator_lcm<'a>(cs: impl Iterator<Item = &'a Coeff>) -> Option<BigInt> {
    let mut den = BigInt::one();
    for c in cs {
        let Coeff::Q(q) = c else { return None };
        if !q.denom().is_one() {
            den = den.lcm(q.denom());
        }
    }
    Some(den)
}

impl std::ops::Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Q(q) => Coeff::Q(-q),
            Coeff::P { v, p } => Coeff::P {
                v: (p - v) % p,
                p: *p,
            },
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coeff::P { v, .. } => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let q = Field::Rationals;
        let a = q.parse_coeff("6/8").unwrap();
        assert_eq!(a.to_string(), "3/4");
        let b = q.parse_coeff("-2/-4").unwrap();
        assert_eq!(b.to_string(), "1/2");
        assert!((&a - &a).is_zero());
        assert_eq!((&a * &a.inv().unwrap()), q.one());
    }

    #[test]
    fn prime_field_canonical() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.from_i64(-1), Coeff::P { v: 6, p: 7 });
        let three = f.from_i64(3);
        assert_eq!(&three * &three.inv().unwrap(), f.one());
        assert_eq!(f.parse_coeff("1/2").unwrap(), f.from_i64(4));
        assert!(Field::prime(9).is_err());
        assert!(Field::parse("fp:1").is_err());
        assert_eq!(Field::parse("fp:101").unwrap(), Field::Prime(101));
    }
}
