//! Exact scalar arithmetic over the rationals or a prime field GF(p), p odd.
//!
//! Scalars are plain values with no field attached; every operation goes
//! through the [`FieldSpec`] that owns them. Rationals are always stored in
//! lowest terms with a positive denominator and residues in `[0, p)`, so
//! structural equality is field equality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("malformed scalar {0:?}")]
    MalformedScalar(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator {denominator} is not invertible modulo {p}")]
    NonInvertibleDenominator { denominator: String, p: u64 },
    #[error("{0} is not an odd prime")]
    InvalidModulus(u64),
    #[error("malformed field {0:?}")]
    MalformedField(String),
}

/// The field an algebra is defined over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// GF(p). Characteristic 2 is rejected since every formula divides by 2.
    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if p == 2 || !is_prime(p) {
            return Err(ScalarError::InvalidModulus(p));
        }
        // keep products of two residues inside u128 comfortably and the
        // modulus itself in i64 range for signed reduction
        if p > i64::MAX as u64 {
            return Err(ScalarError::InvalidModulus(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::PrimeField(_) => Scalar::Residue(0),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    /// The element 1/2 (the residue (p+1)/2 in GF(p)).
    pub fn half(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::new(BigInt::one(), BigInt::from(2))),
            FieldSpec::PrimeField(p) => Scalar::Residue((*p).div_ceil(2)),
        }
    }

    #[allow(clippy::wrong_self_convention)]
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => Scalar::Residue(reduce_i128(n as i128, *p)),
        }
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::PrimeField(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Scalar::Residue(r.to_u64().expect("residue below modulus"))
            }
        }
    }

    /// Parses `"int"` or `"int/uint"`.
    pub fn parse(&self, text: &str) -> Result<Scalar, ScalarError> {
        let malformed = || ScalarError::MalformedScalar(text.to_string());
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let num: BigInt = parse_signed(num).ok_or_else(malformed)?;
        let den: BigInt = match den {
            Some(d) => {
                if d.is_empty() || !d.bytes().all(|c| c.is_ascii_digit()) {
                    return Err(malformed());
                }
                d.parse().map_err(|_| malformed())?
            }
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldSpec::PrimeField(p) => {
                let d = self.from_bigint(&den);
                if self.is_zero(&d) {
                    return Err(ScalarError::NonInvertibleDenominator {
                        denominator: den.to_string(),
                        p: *p,
                    });
                }
                let n = self.from_bigint(&num);
                Ok(self.mul(&n, &self.inv(&d)?))
            }
        }
    }

    pub fn is_zero(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue(v) => *v == 0,
        }
    }

    pub fn add(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (x, y) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue(a), Scalar::Residue(b)) => {
                let p = self.modulus();
                Scalar::Residue(((*a as u128 + *b as u128) % p as u128) as u64)
            }
            _ => mixed(),
        }
    }

    pub fn neg(&self, x: &Scalar) -> Scalar {
        match x {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue(0) => Scalar::Residue(0),
            Scalar::Residue(a) => Scalar::Residue(self.modulus() - a),
        }
    }

    pub fn sub(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (x, y) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue(a), Scalar::Residue(b)) => {
                let p = self.modulus();
                Scalar::Residue(((*a as u128 * *b as u128) % p as u128) as u64)
            }
            _ => mixed(),
        }
    }

    pub fn inv(&self, x: &Scalar) -> Result<Scalar, ScalarError> {
        if self.is_zero(x) {
            return Err(ScalarError::DivisionByZero);
        }
        match x {
            Scalar::Rational(a) => Ok(Scalar::Rational(a.recip())),
            Scalar::Residue(a) => {
                let p = self.modulus() as i128;
                let e = (*a as i128).extended_gcd(&p);
                debug_assert_eq!(e.gcd, 1);
                Ok(Scalar::Residue(reduce_i128(e.x, p as u64)))
            }
        }
    }

    pub fn div(&self, x: &Scalar, y: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    /// Whether a scalar belongs to this field's representation.
    pub fn owns(&self, x: &Scalar) -> bool {
        match (self, x) {
            (FieldSpec::Rationals, Scalar::Rational(_)) => true,
            (FieldSpec::PrimeField(p), Scalar::Residue(v)) => v < p,
            _ => false,
        }
    }

    fn modulus(&self) -> u64 {
        match self {
            FieldSpec::PrimeField(p) => *p,
            FieldSpec::Rationals => mixed(),
        }
    }
}

fn mixed() -> ! {
    panic!("scalar from a different field")
}

fn reduce_i128(n: i128, p: u64) -> u64 {
    n.rem_euclid(p as i128) as u64
}

fn parse_signed(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = ScalarError;

    /// Accepts `Q`, `GF<p>`, `GF(p)` and `GF <p>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let rest = t.strip_prefix("GF").ok_or_else(|| ScalarError::MalformedField(s.to_string()))?;
        let rest = rest.trim().trim_start_matches('(').trim_end_matches(')').trim();
        let p: u64 = rest.parse().map_err(|_| ScalarError::MalformedField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue(v) => write!(f, "{v}"),
        }
    }
}

impl Scalar {
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Residue(_) => false,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Residue(_) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn modinv_bruteforce(x: u64, p: u64) -> u64 {
        (1..p).find(|y| (x * y) % p == 1).unwrap()
    }

    #[test]
    fn parse_rational_canonical() {
        let q = FieldSpec::Rationals;
        let h = q.parse("1/2").unwrap();
        let r = h.as_rational().unwrap();
        assert_eq!(r.numer(), &BigInt::from(1));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(q.parse("2/4").unwrap(), h);
        assert_eq!(q.parse("-3/6").unwrap(), q.neg(&h));
        assert_eq!(q.parse(" 7 ").unwrap(), q.from_i64(7));
    }

    #[test]
    fn parse_prime_field() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.parse("1/2").unwrap(), Scalar::Residue(modinv_bruteforce(2, 5)));
        assert_eq!(f.parse("1/2").unwrap(), Scalar::Residue(3));
        assert_eq!(f.parse("-1").unwrap(), Scalar::Residue(4));
        assert_eq!(f.half(), Scalar::Residue(3));
    }

    #[test]
    fn parse_errors() {
        let q = FieldSpec::Rationals;
        assert!(matches!(q.parse("1/0"), Err(ScalarError::DivisionByZero)));
        assert!(matches!(q.parse("x"), Err(ScalarError::MalformedScalar(_))));
        assert!(matches!(q.parse("1/-2"), Err(ScalarError::MalformedScalar(_))));
        assert!(matches!(q.parse(""), Err(ScalarError::MalformedScalar(_))));
        let f3 = FieldSpec::prime(3).unwrap();
        assert!(matches!(f3.parse("1/3"), Err(ScalarError::NonInvertibleDenominator { .. })));
        assert!(matches!(f3.parse("1/6"), Err(ScalarError::NonInvertibleDenominator { .. })));
        assert_eq!(f3.parse("1/4").unwrap(), Scalar::Residue(1));
    }

    #[test]
    fn characteristic_values() {
        assert_eq!(FieldSpec::Rationals.characteristic(), 0);
        assert_eq!(FieldSpec::prime(3).unwrap().characteristic(), 3);
        assert_eq!(FieldSpec::prime(5).unwrap().characteristic(), 5);
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(FieldSpec::prime(2).is_err());
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert_eq!("GF3".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(3));
        assert_eq!("GF(7)".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(7));
        assert_eq!("GF 11".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(11));
        assert!("GF2".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn invert_zero_fails() {
        for f in [FieldSpec::Rationals, FieldSpec::prime(7).unwrap()] {
            assert_eq!(f.inv(&f.zero()), Err(ScalarError::DivisionByZero));
        }
    }

    #[test]
    fn rationals_do_not_overflow() {
        let q = FieldSpec::Rationals;
        let mut x = q.from_i64(i64::MAX);
        for _ in 0..4 {
            x = q.mul(&x, &x);
        }
        let back = q.div(&x, &x).unwrap();
        assert_eq!(back, q.one());
    }

    fn small_rational() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20)
            .prop_map(|(n, d)| Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d))))
    }

    proptest! {
        #[test]
        fn rational_field_axioms(x in small_rational(), y in small_rational(), z in small_rational()) {
            let q = FieldSpec::Rationals;
            prop_assert_eq!(q.mul(&q.mul(&x, &y), &z), q.mul(&x, &q.mul(&y, &z)));
            prop_assert_eq!(q.add(&q.add(&x, &y), &z), q.add(&x, &q.add(&y, &z)));
            prop_assert_eq!(q.mul(&x, &q.add(&y, &z)), q.add(&q.mul(&x, &y), &q.mul(&x, &z)));
            prop_assert!(q.is_zero(&q.add(&x, &q.neg(&x))));
            if !q.is_zero(&x) {
                prop_assert_eq!(q.mul(&x, &q.inv(&x).unwrap()), q.one());
            }
        }

        #[test]
        fn prime_field_axioms(p in prop::sample::select(vec![3u64, 5, 7, 13, 1_000_000_007]),
                              a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
            let f = FieldSpec::prime(p).unwrap();
            let (x, y, z) = (Scalar::Residue(a % p), Scalar::Residue(b % p), Scalar::Residue(c % p));
            prop_assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
            prop_assert_eq!(f.mul(&x, &f.add(&y, &z)), f.add(&f.mul(&x, &y), &f.mul(&x, &z)));
            prop_assert!(f.is_zero(&f.sub(&x, &x)));
            if !f.is_zero(&x) {
                prop_assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
            }
        }
    }
}
