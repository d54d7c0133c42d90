//! Univariate polynomials over exact scalars, with complete rational root
//! extraction. Used by the grouplike solver's elimination steps.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::scalar::Scalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    #[error("root extraction over Q(zeta_N) with N > 1 is only supported for linear factors")]
    NeedsFieldFactorization,
}

/// Coefficients low degree first, always trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    pub fn var() -> Poly {
        Poly::from_coeffs(vec![Scalar::zero(), Scalar::one()])
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Poly {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = vec![Scalar::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = vec![Scalar::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = &out[i] - c;
        }
        Poly::from_coeffs(out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn divmod(&self, den: &Poly) -> (Poly, Poly) {
        assert!(!den.is_zero());
        let dd = den.coeffs.len() - 1;
        let lead = den.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        let lead_inv = lead.inverse().expect("nonzero leading coefficient");
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (i, d) in den.coeffs.iter().enumerate() {
                    rem[k + i] = &rem[k + i] - &(&c * d);
                }
            }
            quot[k] = c;
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead_inv = a.coeffs.last().unwrap().inverse().unwrap();
        a.scale(&lead_inv)
    }

    fn all_coeffs_rational(&self) -> Option<Vec<BigRational>> {
        self.coeffs
            .iter()
            .map(|c| c.as_rational().cloned())
            .collect()
    }

    /// All roots lying in the coefficient field. Complete over Q; over a
    /// larger cyclotomic field only linear and split-quadratic cases are
    /// handled, anything deeper reports an error.
    pub fn field_roots(&self) -> Result<Vec<Scalar>, RootError> {
        assert!(!self.is_zero(), "zero polynomial has every root");
        match self.all_coeffs_rational() {
            Some(rat) => Ok(rational_roots(&rat)),
            None => {
                // Strip factors of t.
                let mut coeffs = self.coeffs.clone();
                let mut roots = Vec::new();
                if coeffs[0].is_zero() {
                    roots.push(Scalar::zero());
                    while coeffs[0].is_zero() {
                        coeffs.remove(0);
                    }
                }
                match coeffs.len() {
                    1 => Ok(roots),
                    2 => {
                        let r = coeffs[0]
                            .checked_div(&coeffs[1])
                            .expect("nonzero leading coefficient")
                            .neg();
                        roots.push(r);
                        Ok(roots)
                    }
                    _ => Err(RootError::NeedsFieldFactorization),
                }
            }
        }
    }
}

/// Complete list of rational roots of a polynomial with rational coefficients.
fn rational_roots(coeffs: &[BigRational]) -> Vec<Scalar> {
    // Clear denominators and content.
    let mut denom_lcm = BigInt::one();
    for c in coeffs {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * &denom_lcm).to_integer())
        .collect();
    let mut roots = Vec::new();
    // t = 0 roots.
    let mut shift = 0;
    while shift < ints.len() && ints[shift].is_zero() {
        shift += 1;
    }
    if shift > 0 {
        roots.push(Scalar::zero());
        ints.drain(..shift);
    }
    if ints.len() <= 1 {
        return roots;
    }
    if ints.len() == 2 {
        let r = BigRational::new(-ints[0].clone(), ints[1].clone());
        roots.push(Scalar::from_rational(r));
        return roots;
    }
    if ints.len() == 3 {
        // Quadratic formula with an exact square test.
        let (c, b, a) = (&ints[0], &ints[1], &ints[2]);
        let disc = b * b - BigInt::from(4) * a * c;
        if disc.is_negative() {
            return roots;
        }
        let s = disc.sqrt();
        if &s * &s == disc {
            let two_a = BigInt::from(2) * a;
            for sign in [1, -1] {
                let num = -b + BigInt::from(sign) * &s;
                let r = BigRational::new(num, two_a.clone());
                let sc = Scalar::from_rational(r);
                if !roots.contains(&sc) {
                    roots.push(sc);
                }
            }
        }
        return roots;
    }
    // Rational root theorem: p/q with p | trailing, q | leading.
    let trailing = ints[0].abs();
    let leading = ints.last().unwrap().abs();
    let ps = divisors(&trailing);
    let qs = divisors(&leading);
    for p in &ps {
        for q in &qs {
            if p.gcd(q) != BigInt::one() {
                continue;
            }
            for sign in [1i32, -1] {
                let cand = BigRational::new(BigInt::from(sign) * p, q.clone());
                if eval_int_poly(&ints, &cand).is_zero() {
                    let sc = Scalar::from_rational(cand);
                    if !roots.contains(&sc) {
                        roots.push(sc);
                    }
                }
            }
        }
    }
    roots
}

fn eval_int_poly(ints: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in ints.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

/// All positive divisors, via trial division then Pollard rho for any
/// stubborn cofactor.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.abs();
    if m.is_zero() {
        return vec![BigInt::one()];
    }
    let push = |p: BigInt, factors: &mut Vec<(BigInt, u32)>| {
        if let Some(e) = factors.iter_mut().find(|(q, _)| *q == p) {
            e.1 += 1;
        } else {
            factors.push((p, 1));
        }
    };
    let mut d = BigInt::from(2);
    while &d * &d <= m && d < BigInt::from(1_000_000) {
        while (&m % &d).is_zero() {
            m /= &d;
            push(d.clone(), &mut factors);
        }
        d += 1;
    }
    let mut stack = vec![m];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push(m, &mut factors);
        } else {
            let f = pollard_rho(&m);
            stack.push(&m / &f);
            stack.push(f);
        }
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pw);
                pw *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    divs
}

fn mod_pow(base: &BigInt, exp: &BigInt, modulus: &BigInt) -> BigInt {
    base.modpow(exp, modulus)
}

fn is_probable_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    // Miller-Rabin with fixed witnesses, deterministic far beyond our sizes.
    let one = BigInt::one();
    let n_minus_1 = n - &one;
    let mut d = n_minus_1.clone();
    let mut r = 0;
    while d.is_even() {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigInt::from(a);
        let mut x = mod_pow(&a, &d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = BigInt::from(2);
        let mut d = BigInt::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}
