//! Arbitrary-precision integers with an inline fast path.
//!
//! Values that fit in an `i64` are stored inline; anything larger is promoted
//! to a [`BigInt`]. Every operation is exact: there are no overflow semantics.
//! The representation is normalized (a `Big` never holds a value that fits in
//! `i64`), so structural equality and hashing agree with numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Int::Small(v) => Some(*v),
            Int::Big(_) => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.to_i64().and_then(|v| u64::try_from(v).ok())
    }

    pub fn to_usize(&self) -> Option<usize> {
        self.to_i64().and_then(|v| usize::try_from(v).ok())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Int::Small(v) => v.signum() as i32,
            Int::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_abs() {
                Some(a) => Int::Small(a),
                None => Int::from_big(BigInt::from(*v).abs()),
            },
            Int::Big(b) => Int::from_big(b.abs()),
        }
    }

    /// Floor division; panics on a zero divisor.
    pub fn div_floor(&self, rhs: &Int) -> Int {
        assert!(!rhs.is_zero(), "division by zero");
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let (Some(q), Some(r)) = (a.checked_div_euclid(*b), a.checked_rem_euclid(*b)) {
                // div_euclid rounds so that the remainder is non-negative;
                // adjust to floor semantics for negative divisors.
                if r != 0 && *b < 0 {
                    if let Some(q) = q.checked_sub(1) {
                        return Int::Small(q);
                    }
                } else {
                    return Int::Small(q);
                }
            }
        }
        Int::from_big(self.to_big().div_floor(&rhs.to_big()))
    }

    /// Remainder in `[0, |m|)`; panics on a zero modulus.
    pub fn rem_euclid(&self, m: &Int) -> Int {
        assert!(!m.is_zero(), "reduction modulo zero");
        if let (Int::Small(a), Int::Small(b)) = (self, m) {
            if let Some(r) = a.checked_rem_euclid(*b) {
                return Int::Small(r);
            }
        }
        let m = m.to_big().abs();
        Int::from_big(self.to_big().mod_floor(&m))
    }

    /// Reduce modulo a group order, where order 0 means "infinite cyclic"
    /// and leaves the value untouched.
    pub fn reduce_mod_order(&self, order: &Int) -> Int {
        if order.is_zero() {
            self.clone()
        } else {
            self.rem_euclid(order)
        }
    }

    /// `self` divides `other` (0 divides only 0).
    pub fn divides(&self, other: &Int) -> bool {
        if self.is_zero() {
            other.is_zero()
        } else {
            other.rem_euclid(self).is_zero()
        }
    }

    /// Exact quotient; caller guarantees divisibility.
    pub fn div_exact(&self, rhs: &Int) -> Int {
        debug_assert!(rhs.divides(self));
        self.div_floor(rhs)
    }

    /// Non-negative gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
            while y != 0 {
                let t = x % y;
                x = y;
                y = t;
            }
            return Int::from(x);
        }
        Int::from_big(self.to_big().gcd(&other.to_big()))
    }

    pub fn lcm(&self, other: &Int) -> Int {
        if self.is_zero() || other.is_zero() {
            return Int::ZERO;
        }
        (self * other).abs().div_exact(&self.gcd(other))
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g >= 0`.
    pub fn ext_gcd(&self, other: &Int) -> (Int, Int, Int) {
        let (mut old_r, mut r) = (self.clone(), other.clone());
        let (mut old_s, mut s) = (Int::ONE, Int::ZERO);
        let (mut old_t, mut t) = (Int::ZERO, Int::ONE);
        while !r.is_zero() {
            let q = old_r.div_floor(&r);
            let nr = &old_r - &(&q * &r);
            old_r = std::mem::replace(&mut r, nr);
            let ns = &old_s - &(&q * &s);
            old_s = std::mem::replace(&mut s, ns);
            let nt = &old_t - &(&q * &t);
            old_t = std::mem::replace(&mut t, nt);
        }
        if old_r.is_negative() {
            (-old_r, -old_s, -old_t)
        } else {
            (old_r, old_s, old_t)
        }
    }

    /// `c (c - 1) / 2`, valid for negative `c` as well.
    pub fn binomial2(&self) -> Int {
        let prod = self * &(self - &Int::ONE);
        prod.div_exact(&Int::from(2))
    }

    pub fn pow(&self, exp: u32) -> Int {
        let mut acc = Int::ONE;
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for Int {
    fn default() -> Self {
        Int::ZERO
    }
}

macro_rules! from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for Int {
            fn from(v: $t) -> Int {
                match i64::try_from(v) {
                    Ok(s) => Int::Small(s),
                    Err(_) => Int::Big(BigInt::from(v)),
                }
            }
        }
    )*};
}
from_prim!(i8, i16, i32, i64, u8, u16, u32, u64, usize, isize, i128, u128);

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Int {
        Int::from_big(b)
    }
}

impl From<&Int> for Int {
    fn from(v: &Int) -> Int {
        v.clone()
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<&Int> for &Int {
    type Output = Int;
    fn add(self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() + rhs.to_big())
    }
}

impl Sub<&Int> for &Int {
    type Output = Int;
    fn sub(self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_sub(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() - rhs.to_big())
    }
}

impl Mul<&Int> for &Int {
    type Output = Int;
    fn mul(self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_mul(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() * rhs.to_big())
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        if let Int::Small(a) = self {
            if let Some(n) = a.checked_neg() {
                return Int::Small(n);
            }
        }
        Int::from_big(-self.to_big())
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<Int> for Int {
            type Output = Int;
            fn $m(self, rhs: Int) -> Int {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Int> for Int {
            type Output = Int;
            fn $m(self, rhs: &Int) -> Int {
                (&self).$m(rhs)
            }
        }
        impl $tr<Int> for &Int {
            type Output = Int;
            fn $m(self, rhs: Int) -> Int {
                self.$m(&rhs)
            }
        }
        impl $atr<&Int> for Int {
            fn $am(&mut self, rhs: &Int) {
                *self = (&*self).$m(rhs);
            }
        }
        impl $atr<Int> for Int {
            fn $am(&mut self, rhs: Int) {
                *self = (&*self).$m(&rhs);
            }
        }
    };
}
owned_binop!(Add, add, AddAssign, add_assign);
owned_binop!(Sub, sub, SubAssign, sub_assign);
owned_binop!(Mul, mul, MulAssign, mul_assign);

impl std::iter::Sum for Int {
    fn sum<I: Iterator<Item = Int>>(iter: I) -> Int {
        iter.fold(Int::ZERO, |a, b| a + b)
    }
}

impl std::iter::Product for Int {
    fn product<I: Iterator<Item = Int>>(iter: I) -> Int {
        iter.fold(Int::ONE, |a, b| a * b)
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Int {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Int, Self::Err> {
        let s = s.trim();
        match s.parse::<i64>() {
            Ok(v) => Ok(Int::Small(v)),
            Err(_) => s.parse::<BigInt>().map(Int::from_big),
        }
    }
}

// JSON numbers for values that fit in i64, decimal strings otherwise.
impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Int::Small(v) => s.serialize_i64(*v),
            Int::Big(b) => s.serialize_str(&b.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Int, D::Error> {
        struct IntVisitor;
        impl Visitor<'_> for IntVisitor {
            type Value = Int;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Int, E> {
                Ok(Int::from(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Int, E> {
                Ok(Int::from(v))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Int, E> {
                v.parse().map_err(|_| E::custom(format!("invalid integer {v:?}")))
            }
        }
        d.deserialize_any(IntVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(s: &str) -> Int {
        s.parse().unwrap()
    }

    #[test]
    fn promotes_on_overflow_and_demotes_back() {
        let m = Int::from(i64::MAX);
        let s = &m + &Int::ONE;
        assert!(matches!(s, Int::Big(_)));
        assert_eq!(s.to_string(), "9223372036854775808");
        let back = &s - &Int::ONE;
        assert!(matches!(back, Int::Small(_)));
        assert_eq!(back, m);
        let sq = &m * &m;
        assert_eq!(sq.div_exact(&m), m);
    }

    #[test]
    fn floor_division_and_euclid_remainder() {
        let cases = [(7, 3, 2, 1), (-7, 3, -3, 2), (7, -3, -3, 1), (-7, -3, 2, 2)];
        for (a, b, q, r) in cases {
            assert_eq!(Int::from(a).div_floor(&Int::from(b)), Int::from(q), "{a}/{b}");
            assert_eq!(Int::from(a).rem_euclid(&Int::from(b)), Int::from(r), "{a}%{b}");
        }
        assert_eq!(Int::from(i64::MIN).div_floor(&Int::from(-1)), big("9223372036854775808"));
        assert_eq!(Int::from(i64::MIN).div_floor(&Int::from(-3)), Int::from(i64::MIN / -3));
        assert_eq!(Int::from(i64::MIN + 1).div_floor(&Int::from(i64::MAX)), Int::from(-1));
    }

    #[test]
    fn gcd_and_extended_gcd() {
        assert_eq!(Int::from(12).gcd(&Int::from(-18)), Int::from(6));
        assert_eq!(Int::ZERO.gcd(&Int::ZERO), Int::ZERO);
        for (a, b) in [(12, 18), (-4, 6), (0, 5), (7, 0), (0, 0), (35, -64)] {
            let (a, b) = (Int::from(a), Int::from(b));
            let (g, s, t) = a.ext_gcd(&b);
            assert_eq!(g, a.gcd(&b));
            assert_eq!(&s * &a + &t * &b, g);
        }
        assert_eq!(Int::from(4).lcm(&Int::from(6)), Int::from(12));
    }

    #[test]
    fn binomial_handles_negatives() {
        assert_eq!(Int::from(2).binomial2(), Int::ONE);
        assert_eq!(Int::from(3).binomial2(), Int::from(3));
        assert_eq!(Int::from(-1).binomial2(), Int::ONE);
        assert_eq!(Int::from(-2).binomial2(), Int::from(3));
        assert_eq!(Int::ZERO.binomial2(), Int::ZERO);
    }

    #[test]
    fn serde_uses_strings_only_for_large_values() {
        let v = vec![Int::from(-5), big("123456789012345678901234567890")];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"[-5,"123456789012345678901234567890"]"#);
        let back: Vec<Int> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
