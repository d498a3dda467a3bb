//! Exact scalar domains.
//!
//! Two fields are supported: the rationals with arbitrary-precision
//! numerator and denominator, and the prime fields GF(p). Algorithms are
//! generic over the [`Field`] trait, which follows the context pattern: a
//! small field object performs arithmetic on plain element values. The
//! dynamically typed [`Scalar`] carries its own domain and is used at the
//! text boundary (file formats, CLI output).

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, RngCore};

use crate::error::{Error, Result};

/// Which field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    /// GF(p). Only construct through [`FieldSpec::prime_modular`] or
    /// [`FromStr`], which verify primality.
    PrimeModular(u64),
}

impl FieldSpec {
    pub fn prime_modular(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeModular(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::PrimeModular(p) => *p,
        }
    }

    /// Checks that every integer in `1..=n` is invertible, which is what the
    /// trace formula needs for its `ℓ` and factorial denominators.
    pub fn check_trace_formula(&self, n: usize) -> Result<()> {
        match self {
            FieldSpec::PrimeModular(p) if (*p as u128) <= n as u128 => {
                Err(Error::DomainTooSmall { field: *self, n })
            }
            _ => Ok(()),
        }
    }

    pub fn from_integer(&self, z: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(z.clone())),
            FieldSpec::PrimeModular(p) => Scalar::Modular {
                value: reduce_bigint(z, *p),
                modulus: *p,
            },
        }
    }

    /// Parses a scalar in the text syntax `-?[0-9]+` or `-?[0-9]+/[1-9][0-9]*`
    /// and maps it into this field.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let q = parse_rational(text)
            .ok_or_else(|| Error::parse(0, format!("invalid scalar {text:?}")))?;
        match self {
            FieldSpec::Rational => Ok(Scalar::Rational(q)),
            FieldSpec::PrimeModular(p) => Ok(Scalar::Modular {
                value: PrimeField { p: *p }.from_rational(&q)?,
                modulus: *p,
            }),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("rational"),
            FieldSpec::PrimeModular(p) => write!(f, "mod:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "rational" {
            return Ok(FieldSpec::Rational);
        }
        let p = s
            .strip_prefix("mod:")
            .and_then(|rest| rest.parse::<u64>().ok())
            .ok_or_else(|| Error::parse(0, format!("unknown field {s:?}")))?;
        FieldSpec::prime_modular(p)
    }
}

/// A field element tagged with its domain.
///
/// Rationals are kept in lowest terms with a positive denominator, residues
/// in `[0, p)`. Arithmetic between different domains is an error.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Modular { modulus, .. } => FieldSpec::PrimeModular(*modulus),
        }
    }

    fn same_domain(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::DomainMismatch {
                left: self.field(),
                right: other.field(),
            })
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_domain(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: PrimeField { p: *modulus }.add(a, b),
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_domain(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: PrimeField { p: *modulus }.mul(a, b),
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: PrimeField { p: *modulus }.neg(value),
                modulus: *modulus,
            },
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(a) => Rationals.inv(a).map(Scalar::Rational),
            Scalar::Modular { value, modulus } => Ok(Scalar::Modular {
                value: PrimeField { p: *modulus }.inv(value)?,
                modulus: *modulus,
            }),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(a) => a.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => fmt_rational(q, f),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Parses `-?[0-9]+` or `-?[0-9]+/[1-9][0-9]*`; the result is normalized.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    fn digits(s: &str) -> bool {
        !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
    }
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((num, den)) => {
            if !digits(den) || den.starts_with('0') {
                return None;
            }
            (num, Some(den))
        }
        None => (body, None),
    };
    if !digits(num) {
        return None;
    }
    let mut numer: BigInt = num.parse().ok()?;
    if neg {
        numer = -numer;
    }
    let denom: BigInt = match den {
        Some(d) => d.parse().ok()?,
        None => BigInt::one(),
    };
    Some(BigRational::new(numer, denom))
}

/// Arithmetic context for one exact field.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, z: i64) -> Self::Elem;
    fn from_integer(&self, z: &BigInt) -> Self::Elem;
    /// Fails when the denominator vanishes in the field.
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn to_scalar(&self, a: &Self::Elem) -> Scalar;
    /// Uniform over GF(p); an integer in `[-9, 9]` for the rationals.
    fn sample(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn from_scalar(&self, s: &Scalar) -> Result<Self::Elem> {
        if s.field() != self.spec() {
            return Err(Error::DomainMismatch {
                left: self.spec(),
                right: s.field(),
            });
        }
        match s {
            Scalar::Rational(q) => self.from_rational(q),
            Scalar::Modular { value, .. } => Ok(self.from_i64(*value as i64)),
        }
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Inner product, summed in ascending index order.
    fn dot(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Self::Elem {
        a.iter()
            .zip(b)
            .fold(self.zero(), |acc, (x, y)| self.add(&acc, &self.mul(x, y)))
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn format(&self, a: &Self::Elem) -> String {
        self.to_scalar(a).to_string()
    }
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, z: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(z))
    }
    fn from_integer(&self, z: &BigInt) -> BigRational {
        BigRational::from_integer(z.clone())
    }
    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn to_scalar(&self, a: &BigRational) -> Scalar {
        Scalar::Rational(a.clone())
    }
    fn sample(&self, rng: &mut dyn RngCore) -> BigRational {
        self.from_i64(rng.random_range(-9..=9))
    }

    // Integer-valued inner products (the common case for matrix powers)
    // skip the gcd normalization of every partial sum.
    fn dot(&self, a: &[BigRational], b: &[BigRational]) -> BigRational {
        if a.iter().chain(b).all(|x| x.denom().is_one()) {
            let mut acc = BigInt::zero();
            for (x, y) in a.iter().zip(b) {
                acc += x.numer() * y.numer();
            }
            BigRational::from_integer(acc)
        } else {
            a.iter()
                .zip(b)
                .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
        }
    }
}

/// GF(p) for a verified prime `p`; elements are residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        FieldSpec::prime_modular(p)?;
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeModular(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, z: i64) -> u64 {
        (z as i128).rem_euclid(self.p as i128) as u64
    }
    fn from_integer(&self, z: &BigInt) -> u64 {
        reduce_bigint(z, self.p)
    }
    fn from_rational(&self, q: &BigRational) -> Result<u64> {
        let num = self.from_integer(q.numer());
        let den = self.from_integer(q.denom());
        self.div(&num, &den)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let (s, overflow) = a.overflowing_add(*b);
        if overflow || s >= self.p {
            s.wrapping_sub(self.p)
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        if self.p <= 1 << 32 {
            a * b % self.p
        } else {
            ((*a as u128 * *b as u128) % self.p as u128) as u64
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        // Fermat: a^(p-2).
        Ok(self.pow(a, self.p - 2))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn to_scalar(&self, a: &u64) -> Scalar {
        Scalar::Modular {
            value: *a,
            modulus: self.p,
        }
    }
    fn sample(&self, rng: &mut dyn RngCore) -> u64 {
        rng.random_range(0..self.p)
    }
    fn from_scalar(&self, s: &Scalar) -> Result<u64> {
        match s {
            Scalar::Modular { value, modulus } if *modulus == self.p => Ok(*value),
            other => Err(Error::DomainMismatch {
                left: self.spec(),
                right: other.field(),
            }),
        }
    }

    fn dot(&self, a: &[u64], b: &[u64]) -> u64 {
        let p = self.p;
        if p <= 1 << 32 {
            // Accumulate unreduced products while they cannot overflow.
            let max_prod = (p - 1) * (p - 1);
            let batch = u64::MAX
                .checked_div(max_prod)
                .map_or(usize::MAX, |b| b as usize);
            let mut acc = 0u64;
            for (xs, ys) in a.chunks(batch).zip(b.chunks(batch)) {
                let mut part = 0u64;
                for (x, y) in xs.iter().zip(ys) {
                    part += x * y;
                }
                acc = (acc + part % p) % p;
            }
            acc
        } else {
            let mut acc = 0u64;
            for (x, y) in a.iter().zip(b) {
                acc = self.add(&acc, &self.mul(x, y));
            }
            acc
        }
    }
}

fn reduce_bigint(z: &BigInt, p: u64) -> u64 {
    let r = z.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    fn m(v: u64, p: u64) -> Scalar {
        Scalar::Modular {
            value: v,
            modulus: p,
        }
    }

    #[test]
    fn scalar_examples() {
        assert_eq!(q(1, 2).add(&q(1, 3)).unwrap(), q(5, 6));
        assert_eq!(m(3, 5).add(&m(4, 5)).unwrap(), m(2, 5));
        assert_eq!(q(2, 3).inv().unwrap(), q(3, 2));
        assert_eq!(m(3, 7).inv().unwrap(), m(5, 7));
        let gf5 = FieldSpec::prime_modular(5).unwrap();
        assert_eq!(gf5.from_integer(&BigInt::from(-1)), m(4, 5));
    }

    #[test]
    fn additive_identity_on_random_rationals() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let zero = q(0, 1);
        for _ in 0..100 {
            let x = q(rng.random_range(-1000..1000), rng.random_range(1..1000));
            assert_eq!(x.add(&zero).unwrap(), x);
        }
    }

    #[test]
    fn mixed_domains_are_rejected() {
        assert!(matches!(
            q(1, 2).add(&m(1, 5)),
            Err(Error::DomainMismatch { .. })
        ));
        assert!(matches!(
            m(1, 7).mul(&m(1, 5)),
            Err(Error::DomainMismatch { .. })
        ));
    }

    #[test]
    fn inverting_zero_fails() {
        assert_eq!(q(0, 1).inv(), Err(Error::DivisionByZero));
        assert_eq!(m(0, 7).inv(), Err(Error::DivisionByZero));
        let gf5 = FieldSpec::prime_modular(5).unwrap();
        assert_eq!(
            gf5.from_integer(&BigInt::from(10)).inv(),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn primality_is_checked() {
        assert_eq!(FieldSpec::prime_modular(91), Err(Error::NotPrime(91)));
        assert_eq!(FieldSpec::prime_modular(1), Err(Error::NotPrime(1)));
        assert!(PrimeField::new(101).is_ok());
        assert!(PrimeField::new(18446744073709551557).is_ok());
        assert!(!is_prime(3215031751)); // strong pseudoprime to bases 2, 3, 5, 7
        let brute = |n: u64| {
            n >= 2
                && (2..n)
                    .take_while(|d| d * d <= n)
                    .all(|d| !n.is_multiple_of(d))
        };
        for n in 0..2000 {
            assert_eq!(is_prime(n), brute(n), "{n}");
        }
    }

    #[test]
    fn field_spec_text() {
        assert_eq!(
            "rational".parse::<FieldSpec>().unwrap(),
            FieldSpec::Rational
        );
        assert_eq!(
            "mod:101".parse::<FieldSpec>().unwrap(),
            FieldSpec::PrimeModular(101)
        );
        assert_eq!("mod:100".parse::<FieldSpec>(), Err(Error::NotPrime(100)));
        assert!("mod:".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::PrimeModular(7).to_string(), "mod:7");
    }

    #[test]
    fn scalar_syntax() {
        let r = FieldSpec::Rational;
        assert_eq!(r.parse_scalar("-12").unwrap(), q(-12, 1));
        assert_eq!(r.parse_scalar("4/6").unwrap(), q(2, 3));
        assert_eq!(r.parse_scalar("-4/6").unwrap().to_string(), "-2/3");
        assert_eq!(r.parse_scalar("6/3").unwrap().to_string(), "2");
        for bad in ["", "-", "1/0", "1/05", "1/-2", "+3", "1.5", "1/", "/2", "a"] {
            assert!(r.parse_scalar(bad).is_err(), "{bad:?}");
        }
        let gf7 = FieldSpec::prime_modular(7).unwrap();
        assert_eq!(gf7.parse_scalar("-1").unwrap().to_string(), "6");
        assert_eq!(gf7.parse_scalar("1/2").unwrap(), m(4, 7));
        assert_eq!(gf7.parse_scalar("1/7"), Err(Error::DivisionByZero));
    }

    #[test]
    fn trace_formula_guard() {
        let gf5 = FieldSpec::prime_modular(5).unwrap();
        assert!(gf5.check_trace_formula(4).is_ok());
        assert!(matches!(
            gf5.check_trace_formula(5),
            Err(Error::DomainTooSmall { n: 5, .. })
        ));
        assert!(FieldSpec::Rational.check_trace_formula(1000).is_ok());
    }

    #[test]
    fn lazy_dot_matches_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [2u64, 101, 65521, 4294967291, 18446744073709551557] {
            let f = PrimeField::new(p).unwrap();
            for len in [0usize, 1, 5, 300] {
                let a: Vec<u64> = (0..len).map(|_| f.sample(&mut rng)).collect();
                let b: Vec<u64> = (0..len).map(|_| f.sample(&mut rng)).collect();
                let naive = a.iter().zip(&b).fold(0u128, |acc, (x, y)| {
                    (acc + *x as u128 * *y as u128) % p as u128
                });
                assert_eq!(f.dot(&a, &b) as u128, naive);
            }
        }
    }

    fn axioms<F: Field>(f: &F, rng: &mut ChaCha8Rng, draw: impl Fn(&mut ChaCha8Rng) -> F::Elem) {
        for _ in 0..1000 {
            let (a, b, c) = (draw(rng), draw(rng), draw(rng));
            assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            assert_eq!(
                f.mul(&a, &f.add(&b, &c)),
                f.add(&f.mul(&a, &b), &f.mul(&a, &c))
            );
            assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
            assert_eq!(f.sub(&a, &b), f.add(&a, &f.neg(&b)));
            if !f.is_zero(&a) {
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            }
        }
    }

    #[test]
    fn field_axioms_rational() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        axioms(&Rationals, &mut rng, |r| {
            let q = BigRational::new(
                r.random_range(-500i64..500).into(),
                r.random_range(1i64..500).into(),
            );
            // canonical form after construction
            assert_eq!(
                num_integer::gcd(q.numer().clone(), q.denom().clone()),
                BigInt::one()
            );
            assert!(q.denom().is_positive());
            q
        });
    }

    #[test]
    fn field_axioms_modular() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for p in [101u64, 4294967291, 18446744073709551557] {
            let f = PrimeField::new(p).unwrap();
            axioms(&f, &mut rng, |r| f.sample(r));
        }
    }

    #[test]
    fn rational_results_stay_canonical() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let f = Rationals;
        for _ in 0..200 {
            let a = BigRational::new(
                rng.random_range(-99i64..99).into(),
                rng.random_range(1i64..99).into(),
            );
            let b = BigRational::new(
                rng.random_range(-99i64..99).into(),
                rng.random_range(1i64..99).into(),
            );
            for r in [f.add(&a, &b), f.mul(&a, &b), f.sub(&a, &b), f.neg(&a)] {
                assert_eq!(
                    num_integer::gcd(r.numer().clone(), r.denom().clone()),
                    BigInt::one()
                );
                assert!(r.denom().is_positive());
            }
        }
    }

    #[test]
    fn modular_from_i64() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.from_i64(-1), 4);
        assert_eq!(
            f.from_i64(i64::MIN),
            reduce_bigint(&BigInt::from(i64::MIN), 5)
        );
        assert_eq!(f.from_i64(12), 2);
    }
}
