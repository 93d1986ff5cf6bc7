//! Exact scalar arithmetic over the supported coefficient rings.
//!
//! All three rings are principal ideal rings with decidable exact division,
//! which is what the normal-form and lifting machinery needs. Integers are
//! arbitrary precision, rationals are kept in lowest terms, prime-field
//! elements are kept reduced.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// The active coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    /// Arbitrary-precision integers.
    Int,
    /// Rationals in lowest terms.
    Rat,
    /// The prime field with the given modulus.
    Fp(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A scalar in one of the supported rings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Fp(u64),
}

impl Ring {
    pub fn fp(p: u64) -> Ring {
        assert!(is_prime(p), "prime field modulus must be prime, got {p}");
        Ring::Fp(p)
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Ring::Int)
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Ring::Int => Scalar::Int(BigInt::from(v)),
            Ring::Rat => Scalar::Rat(BigRational::from(BigInt::from(v))),
            Ring::Fp(p) => Scalar::Fp(v.rem_euclid(p as i64) as u64),
        }
    }

    pub fn from_bigint(self, v: BigInt) -> Scalar {
        match self {
            Ring::Int => Scalar::Int(v),
            Ring::Rat => Scalar::Rat(BigRational::from(v)),
            Ring::Fp(p) => {
                let m = v.mod_floor(&BigInt::from(p));
                Scalar::Fp(m.to_u64().expect("reduced residue fits in u64"))
            }
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x + y),
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Scalar::Fp(x), Scalar::Fp(y)) => {
                let p = self.modulus();
                Scalar::Fp(((*x as u128 + *y as u128) % p as u128) as u64)
            }
            _ => panic!("mixed-ring arithmetic"),
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Int(x) => Scalar::Int(-x),
            Scalar::Rat(x) => Scalar::Rat(-x),
            Scalar::Fp(x) => {
                let p = self.modulus();
                Scalar::Fp(if *x == 0 { 0 } else { p - x })
            }
        }
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x * y),
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Scalar::Fp(x), Scalar::Fp(y)) => {
                let p = self.modulus();
                Scalar::Fp(((*x as u128 * *y as u128) % p as u128) as u64)
            }
            _ => panic!("mixed-ring arithmetic"),
        }
    }

    pub fn is_zero(self, a: &Scalar) -> bool {
        match a {
            Scalar::Int(x) => x.is_zero(),
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Fp(x) => *x == 0,
        }
    }

    pub fn is_one(self, a: &Scalar) -> bool {
        match a {
            Scalar::Int(x) => x.is_one(),
            Scalar::Rat(x) => x.is_one(),
            Scalar::Fp(x) => *x == 1,
        }
    }

    pub fn is_unit(self, a: &Scalar) -> bool {
        match a {
            Scalar::Int(x) => x.abs().is_one(),
            Scalar::Rat(x) => !x.is_zero(),
            Scalar::Fp(x) => *x != 0,
        }
    }

    /// Multiplicative inverse of a unit.
    pub fn inv(self, a: &Scalar) -> Scalar {
        assert!(self.is_unit(a), "inverse of a non-unit");
        match a {
            Scalar::Int(x) => Scalar::Int(x.clone()),
            Scalar::Rat(x) => Scalar::Rat(x.recip()),
            Scalar::Fp(x) => Scalar::Fp(fp_inv(*x, self.modulus())),
        }
    }

    /// Does `a` divide `b`?
    pub fn divides(self, a: &Scalar, b: &Scalar) -> bool {
        if self.is_zero(b) {
            return true;
        }
        if self.is_zero(a) {
            return false;
        }
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => y.mod_floor(x).is_zero(),
            _ => true,
        }
    }

    /// Exact quotient `b / a`, when `a` divides `b`.
    pub fn exact_div(self, b: &Scalar, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(b) {
            return Some(self.zero());
        }
        if self.is_zero(a) {
            return None;
        }
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => {
                let (q, r) = y.div_rem(x);
                if r.is_zero() {
                    Some(Scalar::Int(q))
                } else {
                    None
                }
            }
            _ => Some(self.mul(b, &self.inv(a))),
        }
    }

    /// Quotient used when clearing entries against a pivot: over a field the
    /// exact quotient, over the integers the nearest integer (so the
    /// remainder has at most half the pivot's magnitude).
    pub fn round_div(self, b: &Scalar, a: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => {
                // floor division leaves a remainder with the divisor's sign;
                // bumping the quotient by one flips it to the short side
                let (mut q, r) = y.div_mod_floor(x);
                if 2 * r.abs() > x.abs() {
                    q += 1;
                }
                Scalar::Int(q)
            }
            _ => self.mul(b, &self.inv(a)),
        }
    }

    /// Pivot preference key, smaller is better. Over the integers the
    /// absolute value; over a field every nonzero entry is equally good.
    pub fn pivot_key(self, a: &Scalar) -> BigInt {
        match a {
            Scalar::Int(x) => x.abs(),
            _ => BigInt::one(),
        }
    }

    /// A unit `u` with `u * a` in canonical form (nonnegative integer,
    /// monic field element).
    pub fn normalizing_unit(self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Int(x) => {
                if x.is_negative() {
                    self.from_i64(-1)
                } else {
                    self.one()
                }
            }
            _ => {
                if self.is_zero(a) {
                    self.one()
                } else {
                    self.inv(a)
                }
            }
        }
    }

    fn modulus(self) -> u64 {
        match self {
            Ring::Fp(p) => p,
            _ => panic!("modulus of a non prime-field ring"),
        }
    }
}

fn fp_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p)
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "{a} is not invertible mod {p}");
    (t.rem_euclid(p as i128)) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(x) => write!(f, "{x}"),
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Fp(x) => write!(f, "{x}"),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Int => write!(f, "Z"),
            Ring::Rat => write!(f, "Q"),
            Ring::Fp(p) => write!(f, "Z/{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic() {
        let r = Ring::fp(5);
        let a = r.from_i64(3);
        let b = r.from_i64(4);
        assert_eq!(r.add(&a, &b), r.from_i64(2));
        assert_eq!(r.mul(&a, &b), r.from_i64(2));
        assert_eq!(r.mul(&a, &r.inv(&a)), r.one());
        assert_eq!(r.from_i64(-1), r.from_i64(4));
    }

    #[test]
    #[should_panic]
    fn composite_modulus_rejected() {
        Ring::fp(6);
    }

    #[test]
    fn integer_divisibility() {
        let r = Ring::Int;
        assert!(r.divides(&r.from_i64(2), &r.from_i64(4)));
        assert!(!r.divides(&r.from_i64(2), &r.from_i64(3)));
        assert_eq!(
            r.exact_div(&r.from_i64(4), &r.from_i64(2)),
            Some(r.from_i64(2))
        );
        assert_eq!(r.exact_div(&r.from_i64(3), &r.from_i64(2)), None);
    }

    #[test]
    fn round_division_minimizes_remainder() {
        let r = Ring::Int;
        for a in -20i64..=20 {
            for b in [-7i64, -3, -2, 2, 3, 7] {
                let q = r.round_div(&r.from_i64(a), &r.from_i64(b));
                let rem = r.sub(&r.from_i64(a), &r.mul(&q, &r.from_i64(b)));
                if let Scalar::Int(rem) = rem {
                    assert!(2 * rem.abs().to_i64().unwrap() <= b.abs());
                }
            }
        }
    }

    #[test]
    fn rational_display_lowest_terms() {
        let r = Ring::Rat;
        let x = r.exact_div(&r.from_i64(6), &r.from_i64(4)).unwrap();
        assert_eq!(x.to_string(), "3/2");
        assert_eq!(r.from_i64(7).to_string(), "7");
    }
}
