//! Exact scalars in cyclotomic fields Q(zeta_N).
//!
//! A scalar is stored as a rational polynomial in zeta_N reduced modulo the
//! N-th cyclotomic polynomial, using the power basis 1, zeta, ..., zeta^(phi(N)-1).
//! Rational values always normalize to conductor 1, so equality of values is
//! equality of representations.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible conductors {0} and {1}")]
    IncompatibleConductors(u32, u32),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseScalarError {
    #[error("empty scalar string")]
    Empty,
    #[error("malformed rational `{0}`")]
    BadRational(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("malformed cyclotomic scalar `{0}`")]
    BadCyclotomic(String),
    #[error("coefficient count {got} does not match phi({conductor}) = {want}")]
    WrongLength {
        conductor: u32,
        got: usize,
        want: usize,
    },
    #[error("conductor must be positive")]
    ZeroConductor,
}

/// Euler's totient, by trial division.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Monic integer coefficients of the n-th cyclotomic polynomial, low degree first.
fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    // x^n - 1 divided by all proper-divisor cyclotomics.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_poly(d);
            num = exact_int_div(&num, &phi_d);
        }
    }
    num
}

/// Exact division of integer polynomials (divisor monic), low degree first.
fn exact_int_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "inexact polynomial division"
    );
    quot
}

/// Cached reduction data for one cyclotomic field.
struct Field {
    phi: usize,
    /// Monic modulus, rational coefficients, length phi+1.
    modulus: Vec<Rational>,
    /// zeta^k in the power basis, for k = phi .. 2*phi-2.
    high_powers: Vec<Vec<Rational>>,
}

impl Field {
    fn new(n: u32) -> Field {
        let ints = cyclotomic_poly(n);
        let phi = ints.len() - 1;
        let modulus: Vec<Rational> = ints.into_iter().map(Rational::from_integer).collect();
        let mut high_powers = Vec::with_capacity(phi.saturating_sub(1));
        // zeta^phi = -(c_0 + c_1 zeta + ...), then multiply up by zeta.
        let mut cur: Vec<Rational> = (0..phi).map(|i| -modulus[i].clone()).collect();
        if phi >= 1 {
            high_powers.push(cur.clone());
            for _ in phi + 1..=(2 * phi).saturating_sub(2) {
                // cur * zeta, reduced using the first high power.
                let carry = cur[phi - 1].clone();
                let mut next = vec![Rational::zero(); phi];
                for i in (1..phi).rev() {
                    next[i] = cur[i - 1].clone();
                }
                if !carry.is_zero() {
                    for i in 0..phi {
                        next[i] += &carry * &high_powers[0][i];
                    }
                }
                cur = next;
                high_powers.push(cur.clone());
            }
        }
        Field {
            phi,
            modulus,
            high_powers,
        }
    }
}

fn field(n: u32) -> Arc<Field> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(Field::new(n)))
        .clone()
}

/// Exact element of Q(zeta_N). Conductor 1 means a plain rational.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar {
            conductor: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Scalar {
        Scalar {
            conductor: 1,
            coeffs: vec![Rational::one()],
        }
    }

    pub fn from_integer(k: i64) -> Scalar {
        Scalar {
            conductor: 1,
            coeffs: vec![Rational::from_integer(BigInt::from(k))],
        }
    }

    pub fn from_rational(r: Rational) -> Scalar {
        Scalar {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn ratio(num: i64, den: i64) -> Scalar {
        assert!(den != 0);
        Scalar::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The primitive N-th root of unity. Rational for N = 1, 2.
    pub fn zeta(n: u32) -> Scalar {
        assert!(n >= 1, "conductor must be positive");
        match n {
            1 => Scalar::one(),
            2 => Scalar::from_integer(-1),
            _ => {
                let phi = euler_phi(n) as usize;
                let mut coeffs = vec![Rational::zero(); phi];
                coeffs[1] = Rational::one();
                Scalar {
                    conductor: n,
                    coeffs,
                }
            }
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    /// The rational value, if the scalar lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.conductor == 1 {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Rational values collapse to conductor 1; this keeps equality canonical.
    fn normalize(mut self) -> Scalar {
        if self.conductor > 1 && self.coeffs[1..].iter().all(|c| c.is_zero()) {
            self.coeffs.truncate(1);
            self.conductor = 1;
        }
        self
    }

    fn promote(&self, n: u32) -> Result<Scalar, ScalarError> {
        if self.conductor == n {
            return Ok(self.clone());
        }
        if self.conductor == 1 {
            let phi = euler_phi(n) as usize;
            let mut coeffs = vec![Rational::zero(); phi];
            coeffs[0] = self.coeffs[0].clone();
            return Ok(Scalar {
                conductor: n,
                coeffs,
            });
        }
        Err(ScalarError::IncompatibleConductors(self.conductor, n))
    }

    fn common(a: &Scalar, b: &Scalar) -> Result<(Scalar, Scalar, u32), ScalarError> {
        if a.conductor == b.conductor {
            Ok((a.clone(), b.clone(), a.conductor))
        } else if a.conductor == 1 {
            Ok((a.promote(b.conductor)?, b.clone(), b.conductor))
        } else if b.conductor == 1 {
            Ok((a.clone(), b.promote(a.conductor)?, a.conductor))
        } else {
            Err(ScalarError::IncompatibleConductors(
                a.conductor,
                b.conductor,
            ))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        let (a, b, n) = Scalar::common(self, other)?;
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x + y)
            .collect();
        Ok(Scalar {
            conductor: n,
            coeffs,
        }
        .normalize())
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        let (a, b, n) = Scalar::common(self, other)?;
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x - y)
            .collect();
        Ok(Scalar {
            conductor: n,
            coeffs,
        }
        .normalize())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        let (a, b, n) = Scalar::common(self, other)?;
        if n == 1 {
            return Ok(Scalar::from_rational(&a.coeffs[0] * &b.coeffs[0]));
        }
        let f = field(n);
        let phi = f.phi;
        let mut prod = vec![Rational::zero(); 2 * phi - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut coeffs: Vec<Rational> = prod[..phi].to_vec();
        for k in phi..2 * phi - 1 {
            if !prod[k].is_zero() {
                let row = &f.high_powers[k - phi];
                for i in 0..phi {
                    coeffs[i] += &prod[k] * &row[i];
                }
            }
        }
        Ok(Scalar {
            conductor: n,
            coeffs,
        }
        .normalize())
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (a, b, n) = Scalar::common(self, other)?;
        if n == 1 {
            return Ok(Scalar::from_rational(&a.coeffs[0] / &b.coeffs[0]));
        }
        let inv = b.inverse_mod(n)?;
        a.checked_mul(&inv)
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn inverse(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(Scalar::from_rational(self.coeffs[0].recip()));
        }
        self.inverse_mod(self.conductor)
    }

    /// Extended Euclid in Q[x] against the cyclotomic modulus.
    fn inverse_mod(&self, n: u32) -> Result<Scalar, ScalarError> {
        let f = field(n);
        // r0 = modulus, r1 = self; track s only against r1.
        let mut r0 = f.modulus.clone();
        let mut r1 = self.coeffs.clone();
        let mut s0 = vec![Rational::zero()];
        let mut s1 = vec![Rational::one()];
        trim(&mut r1);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is the gcd, a nonzero constant since the modulus is irreducible.
        assert_eq!(r0.len(), 1, "cyclotomic modulus must be irreducible");
        let g = r0[0].clone();
        let mut coeffs = vec![Rational::zero(); f.phi];
        for (i, c) in s0.iter().enumerate() {
            coeffs[i] = c / &g;
        }
        Ok(Scalar {
            conductor: n,
            coeffs,
        }
        .normalize())
    }

    pub fn pow(&self, mut k: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base).expect("compatible conductors");
            }
            base = base.checked_mul(&base).expect("compatible conductors");
            k >>= 1;
        }
        acc
    }

    /// Height used to pick the reported "max residual": the largest absolute
    /// value among numerators and denominators of the coefficients.
    pub fn height(&self) -> BigInt {
        let mut h = BigInt::zero();
        for c in &self.coeffs {
            let n = c.numer().abs();
            let d = c.denom().abs();
            if n > h {
                h = n;
            }
            if d > h {
                h = d;
            }
        }
        h
    }
}

fn trim(p: &mut Vec<Rational>) {
    while let Some(last) = p.last() {
        if last.is_zero() {
            p.pop();
        } else {
            break;
        }
    }
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem: Vec<Rational> = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    let lead = den.last().expect("nonzero divisor");
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / lead;
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                let t = &c * d;
                rem[k + i] -= t;
            }
        }
        quot[k] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rational(s: &str) -> Result<Rational, ParseScalarError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseScalarError::Empty);
    }
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|_| ParseScalarError::BadRational(s.into()))?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            let p =
                BigInt::from_str(p.trim()).map_err(|_| ParseScalarError::BadRational(s.into()))?;
            let q =
                BigInt::from_str(q.trim()).map_err(|_| ParseScalarError::BadRational(s.into()))?;
            if q.is_zero() {
                return Err(ParseScalarError::ZeroDenominator(s.into()));
            }
            Ok(Rational::new(p, q))
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            write!(f, "{}", fmt_rational(&self.coeffs[0]))
        } else {
            let parts: Vec<String> = self.coeffs.iter().map(fmt_rational).collect();
            write!(f, "[{}] @ {}", parts.join(", "), self.conductor)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseScalarError::Empty);
        }
        if let Some(rest) = s.strip_prefix('[') {
            let (list, tail) = rest
                .split_once(']')
                .ok_or_else(|| ParseScalarError::BadCyclotomic(s.into()))?;
            let tail = tail.trim();
            let n: u32 = tail
                .strip_prefix('@')
                .map(|t| t.trim())
                .ok_or_else(|| ParseScalarError::BadCyclotomic(s.into()))?
                .parse()
                .map_err(|_| ParseScalarError::BadCyclotomic(s.into()))?;
            if n == 0 {
                return Err(ParseScalarError::ZeroConductor);
            }
            let coeffs: Vec<Rational> = list
                .split(',')
                .map(parse_rational)
                .collect::<Result<_, _>>()?;
            let want = euler_phi(n) as usize;
            if coeffs.len() != want {
                return Err(ParseScalarError::WrongLength {
                    conductor: n,
                    got: coeffs.len(),
                    want,
                });
            }
            Ok(Scalar {
                conductor: n,
                coeffs,
            }
            .normalize())
        } else {
            Ok(Scalar::from_rational(parse_rational(s)?))
        }
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("compatible conductors")
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("compatible conductors")
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("compatible conductors")
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl std::ops::AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.checked_add(rhs).expect("compatible conductors");
    }
}

impl std::ops::SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.checked_sub(rhs).expect("compatible conductors");
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn cyclotomic_polys() {
        let phi4 = cyclotomic_poly(4);
        assert_eq!(
            phi4,
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]
        );
        let phi6 = cyclotomic_poly(6);
        assert_eq!(
            phi6,
            vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]
        );
        let phi12 = cyclotomic_poly(12);
        assert_eq!(phi12.len(), 5); // degree 4
    }

    #[test]
    fn zeta4_squares_to_minus_one() {
        let z = Scalar::zeta(4);
        let sq = z.checked_mul(&z).unwrap();
        assert_eq!(sq, Scalar::from_integer(-1));
    }

    #[test]
    fn rational_sum() {
        let a = Scalar::ratio(1, 2);
        let b = Scalar::ratio(1, 3);
        assert_eq!(a.checked_add(&b).unwrap(), Scalar::ratio(5, 6));
    }

    #[test]
    fn zeta3_defining_relation() {
        let z = Scalar::zeta(3);
        let val = &(&z.pow(2) + &z) + &Scalar::one();
        assert!(val.is_zero());
    }

    #[test]
    fn zeta_powers_demote_to_rational() {
        let z = Scalar::zeta(5);
        assert_eq!(z.pow(5), Scalar::one());
        assert_eq!(z.pow(0), Scalar::one());
        // zeta + zeta^2 + zeta^3 + zeta^4 = -1
        let sum = &(&(&z + &z.pow(2)) + &z.pow(3)) + &z.pow(4);
        assert_eq!(sum, Scalar::from_integer(-1));
    }

    #[test]
    fn division_and_inverse() {
        let z = Scalar::zeta(3);
        let inv = z.inverse().unwrap();
        assert_eq!(z.checked_mul(&inv).unwrap(), Scalar::one());
        assert_eq!(inv, z.pow(2));
        assert_eq!(
            Scalar::zero().inverse().unwrap_err(),
            ScalarError::DivisionByZero
        );
    }

    #[test]
    fn incompatible_conductors_detected() {
        let a = Scalar::zeta(3);
        let b = Scalar::zeta(4);
        assert_eq!(
            a.checked_add(&b).unwrap_err(),
            ScalarError::IncompatibleConductors(3, 4)
        );
    }

    #[test]
    fn mixed_conductor_with_rational_promotes() {
        let z = Scalar::zeta(3);
        let r = Scalar::ratio(2, 1);
        let prod = z.checked_mul(&r).unwrap();
        assert_eq!(prod, z.checked_add(&z).unwrap());
    }

    #[test]
    fn text_round_trip() {
        for text in ["0", "5", "-7/3", "[1/2, -3] @ 4", "[0, 1, 0, 0] @ 5"] {
            let v = s(text);
            assert_eq!(v.to_string(), text.trim());
            let back: Scalar = v.to_string().parse().unwrap();
            assert_eq!(back, v);
        }
        // Non-canonical inputs normalize.
        assert_eq!(s("[3, 0] @ 3"), Scalar::from_integer(3));
        assert_eq!(s("[ -1 ] @ 2"), Scalar::from_integer(-1));
    }

    #[test]
    fn zeta2_is_rational_minus_one() {
        assert_eq!(Scalar::zeta(2), Scalar::from_integer(-1));
        assert!(Scalar::zeta(2).is_rational());
    }
}
