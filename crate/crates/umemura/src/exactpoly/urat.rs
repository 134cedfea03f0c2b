//! Dense univariate polynomials and reduced rational functions in one formal
//! variable `x`, used by the exact partial-fraction machinery.

use super::mpoly::{rat, Rational};
use num_traits::{One, Signed, Zero};
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of `x^k`.
/// The representation is normalized: no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = UPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = UPoly { coeffs };
        p.normalize();
        p
    }

    /// x + c
    pub fn linear(c: Rational) -> Self {
        UPoly { coeffs: vec![c, Rational::one()] }
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly { coeffs: self.coeffs.iter().map(|v| v * c).collect() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        let lc = self.leading_coeff();
        self.scale(&(Rational::one() / lc))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(d.coeffs.len()) + 1];
        let dlc = d.leading_coeff();
        while let (Some(rd), Some(dd)) = (rem.degree(), d.degree()) {
            if rd < dd || rem.is_zero() {
                break;
            }
            let shift = rd - dd;
            let f = rem.leading_coeff() / &dlc;
            for (i, dc) in d.coeffs.iter().enumerate() {
                let v = dc * &f;
                rem.coeffs[i + shift] -= v;
            }
            rem.normalize();
            quot[shift] = f;
        }
        (UPoly::from_coeffs(quot), rem)
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn deriv(&self) -> UPoly {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        UPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let a = c.abs();
            if a.denom().is_one() {
                write!(out, "{}", a.numer()).unwrap();
            } else {
                write!(out, "{}/{}", a.numer(), a.denom()).unwrap();
            }
            if k == 1 {
                out.push_str("*x");
            } else if k > 1 {
                write!(out, "*x^{k}").unwrap();
            }
        }
        out
    }
}

impl std::fmt::Debug for UPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        UPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        UPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(coeffs)
    }
}

/// A rational function num/den with monic denominator and gcd(num, den) = 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct URat {
    num: UPoly,
    den: UPoly,
}

impl URat {
    pub fn new(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return URat { num, den: UPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, r1) = num.div_rem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.div_rem(&g);
        debug_assert!(r2.is_zero());
        let lc = den.leading_coeff();
        URat {
            num: num.scale(&(Rational::one() / &lc)),
            den: den.scale(&(Rational::one() / lc)),
        }
    }

    pub fn from_poly(p: UPoly) -> Self {
        URat { num: p, den: UPoly::one() }
    }

    pub fn zero() -> Self {
        URat::from_poly(UPoly::zero())
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> Option<Rational> {
        if self.den.degree() == Some(0) || self.den == UPoly::one() {
            match self.num.degree() {
                None => Some(Rational::zero()),
                Some(0) => Some(self.num.coeff(0) / self.den.coeff(0)),
                _ => None,
            }
        } else {
            None
        }
    }

    pub fn add(&self, other: &URat) -> URat {
        URat::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &URat) -> URat {
        URat::new(
            &(&self.num * &other.den) - &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn mul(&self, other: &URat) -> URat {
        URat::new(&self.num * &other.num, &self.den * &other.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::mpoly::ratio;

    #[test]
    fn div_rem_exact() {
        // (x^2 - 1) / (x - 1) = x + 1 rem 0
        let p = UPoly::from_coeffs(vec![rat(-1), rat(0), rat(1)]);
        let d = UPoly::linear(rat(-1));
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, UPoly::linear(rat(1)));
    }

    #[test]
    fn gcd_common_factor() {
        let a = &UPoly::linear(rat(1)) * &UPoly::linear(rat(2)); // (x+1)(x+2)
        let b = &UPoly::linear(rat(1)) * &UPoly::linear(rat(3)); // (x+1)(x+3)
        assert_eq!(a.gcd(&b), UPoly::linear(rat(1)));
    }

    #[test]
    fn urat_reduces_and_is_monic() {
        // (2x+2)/(4x+8) = (1/2)(x+1)/(x+2)
        let r = URat::new(
            UPoly::from_coeffs(vec![rat(2), rat(2)]),
            UPoly::from_coeffs(vec![rat(8), rat(4)]),
        );
        assert_eq!(r.den(), &UPoly::linear(rat(2)));
        assert_eq!(r.num(), &UPoly::from_coeffs(vec![ratio(1, 2), ratio(1, 2)]));
    }

    #[test]
    fn sum_of_mirror_fractions_is_constant() {
        // (x+3)/(x+1) + (x-1)/(x+1) = 2
        let lhs = URat::new(UPoly::linear(rat(3)), UPoly::linear(rat(1)))
            .add(&URat::new(UPoly::linear(rat(-1)), UPoly::linear(rat(1))));
        assert_eq!(lhs.is_constant(), Some(rat(2)));
    }
}
