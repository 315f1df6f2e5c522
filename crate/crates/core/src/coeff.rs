//! Exact arithmetic in the rational function field `Q(q)`.
//!
//! A [`QScalar`] is a reduced fraction `num / den` of integer polynomials in
//! `q`. Negative powers of `q` never appear explicitly: `q^-k` is stored as
//! `1 / q^k`. After every operation the pair is brought to canonical form
//!
//! * `gcd(num, den) = 1` in `Z[q]` (integer content included),
//! * the leading coefficient of `den` is positive,
//! * zero is `0 / 1`,
//!
//! so equality and hashing are structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial in `q` with integer coefficients, lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Largest `k` with `q^k | self`; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// True when the polynomial is `c * q^k` for some `c` and `k`.
    pub fn is_monomial(&self) -> bool {
        match self.valuation() {
            Some(v) => v + 1 == self.coeffs.len(),
            None => false,
        }
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn div_int_exact(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Divide by `q^k`; caller guarantees `k <= valuation`.
    fn shift_down(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        QPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// `q^deg * p(1/q)`.
    fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_coeffs(coeffs)
    }

    fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return Self::zero();
        }
        let mut p = self.div_int_exact(&c);
        if p.leading().is_some_and(Signed::is_negative) {
            p = -p;
        }
        p
    }

    /// Pseudo-remainder of `self` by `divisor`.
    fn pseudo_rem(&self, divisor: &QPoly) -> QPoly {
        let dd = divisor.degree().expect("pseudo_rem by zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let lead = rem[top].clone();
            if lead.is_zero() {
                rem.pop();
                continue;
            }
            let shift = top - dd;
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &lead * dc;
            }
            rem.pop();
        }
        QPoly::from_coeffs(rem)
    }

    /// Greatest common divisor in `Z[q]`, with positive leading coefficient.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        if self.is_zero() {
            return other.primitive_part().scale_int(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale_int(&self.content());
        }
        if self.is_monomial() || other.is_monomial() {
            let v = self.valuation().unwrap().min(other.valuation().unwrap());
            let c = self.content().gcd(&other.content());
            return QPoly::monomial(c, v);
        }
        let cont = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                a = QPoly::one();
                break;
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part().scale_int(&cont)
    }

    /// Exact quotient `self / divisor`; the division must leave no remainder.
    fn div_exact(&self, divisor: &QPoly) -> QPoly {
        if divisor.is_one() {
            return self.clone();
        }
        if divisor.is_monomial() {
            let v = divisor.valuation().unwrap();
            return self.shift_down(v).div_int_exact(divisor.leading().unwrap());
        }
        let dd = divisor.degree().unwrap();
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return QPoly::zero();
        };
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lc;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        debug_assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
        QPoly::from_coeffs(quot)
    }

    fn render(&self, out: &mut String) {
        if self.is_zero() {
            out.push('0');
            return;
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                out.push('-');
            } else if !first {
                out.push('+');
            }
            first = false;
            if k == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push('q');
            if k > 1 {
                out.push('^');
                out.push_str(&k.to_string());
            }
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(mut self) -> QPoly {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        if rhs.is_monomial() {
            let v = rhs.valuation().unwrap();
            return self.scale_int(rhs.leading().unwrap()).shift_up(v);
        }
        if self.is_monomial() {
            return rhs * self;
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

/// An element of `Q(q)` in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: QPoly,
    den: QPoly,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        QScalar {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QScalar {
            num: QPoly::constant(BigInt::from(n)),
            den: QPoly::one(),
        }
    }

    /// The rational number `n / d`.
    pub fn from_ratio(n: i64, d: i64) -> Result<Self> {
        Self::from_parts(
            QPoly::constant(BigInt::from(n)),
            QPoly::constant(BigInt::from(d)),
        )
    }

    /// `q^k` for any integer `k`.
    pub fn qpow(k: i64) -> Self {
        let mag = k.unsigned_abs() as usize;
        let power = QPoly::monomial(BigInt::one(), mag);
        if k >= 0 {
            QScalar {
                num: power,
                den: QPoly::one(),
            }
        } else {
            QScalar {
                num: QPoly::one(),
                den: power,
            }
        }
    }

    /// `c * q^k` with an integer `c`.
    pub fn monomial(c: i64, k: i64) -> Self {
        &Self::from_int(c) * &Self::qpow(k)
    }

    /// Build `num / den` and canonicalize.
    pub fn from_parts(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Self::canonical(num, den))
    }

    /// Laurent polynomial `sum_k coeffs[k] * q^(k + low)`.
    pub fn laurent(low: i64, coeffs: &[i64]) -> Self {
        let num = QPoly::from_i64s(coeffs);
        if low >= 0 {
            Self::canonical(num.shift_up(low as usize), QPoly::one())
        } else {
            Self::canonical(num, QPoly::monomial(BigInt::one(), (-low) as usize))
        }
    }

    fn canonical(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_monomial() {
            let v = den.valuation().unwrap().min(num.valuation().unwrap());
            let c = num.content().gcd(den.leading().unwrap());
            (
                num.shift_down(v).div_int_exact(&c),
                den.shift_down(v).div_int_exact(&c),
            )
        } else if num.is_monomial() {
            let v = num.valuation().unwrap().min(den.valuation().unwrap());
            let c = den.content().gcd(num.leading().unwrap());
            (
                num.shift_down(v).div_int_exact(&c),
                den.shift_down(v).div_int_exact(&c),
            )
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        if den.leading().is_some_and(Signed::is_negative) {
            num = -num;
            den = -den;
        }
        QScalar { num, den }
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is `c * q^k` for a rational `c`.
    pub fn is_monomial(&self) -> bool {
        self.num.is_monomial() && self.den.is_monomial()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &QScalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        // p(1/q) = rev(p) / q^deg(p)
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let num = self.num.reversed().shift_up(dd);
        let den = self.den.reversed().shift_up(dn);
        Self::canonical(num, den)
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// True when the numerator is a single term with a negative coefficient,
    /// so the value renders after a leading minus sign.
    pub(crate) fn is_negative_term(&self) -> bool {
        self.num.term_count() == 1 && self.num.leading().unwrap().is_negative()
    }
}

/// Balanced quantum integer `[n] = (q^n - q^-n) / (q - q^-1)`.
pub fn qint(n: i64) -> QScalar {
    if n == 0 {
        return QScalar::zero();
    }
    let m = n.unsigned_abs() as usize;
    // [m] = q^{-(m-1)} (1 + q^2 + ... + q^{2(m-1)})
    let mut coeffs = vec![BigInt::zero(); 2 * m - 1];
    for k in 0..m {
        coeffs[2 * k] = BigInt::one();
    }
    let value = QScalar {
        num: QPoly::from_coeffs(coeffs),
        den: QPoly::monomial(BigInt::one(), m - 1),
    };
    if n < 0 {
        -value
    } else {
        value
    }
}

/// Quantum factorial `[n]! = [1][2]...[n]`.
pub fn qfact(n: u32) -> QScalar {
    (1..=n as i64).fold(QScalar::one(), |acc, k| &acc * &qint(k))
}

/// Quantum double factorial `[a]!! = [2a][2a-2]...[2]`.
pub fn qdoublefact(a: u32) -> QScalar {
    (1..=a as i64).fold(QScalar::one(), |acc, k| &acc * &qint(2 * k))
}

/// `1 / (q - q^-1)`, the denominator of the Weyl relations.
pub fn inv_q_minus_qinv() -> QScalar {
    // q / (q^2 - 1)
    QScalar::canonical(
        QPoly::monomial(BigInt::one(), 1),
        QPoly::from_i64s(&[-1, 0, 1]),
    )
}

impl Default for QScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        if self.den.is_one() {
            if self.num.term_count() > 1 {
                out.push('(');
                self.num.render(&mut out);
                out.push(')');
            } else {
                self.num.render(&mut out);
            }
        } else {
            out.push('(');
            self.num.render(&mut out);
            out.push_str(")/(");
            self.den.render(&mut out);
            out.push(')');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialOrd for QScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but total order, used only for deterministic sorting.
impl Ord for QScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num.coeffs, &self.den.coeffs).cmp(&(&other.num.coeffs, &other.den.coeffs))
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -self.clone()
    }
}

impl<'a> Add<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return QScalar::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        QScalar::canonical(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return QScalar::canonical(&self.num - &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        QScalar::canonical(num, &self.den * &rhs.den)
    }
}

impl<'a> Mul<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() || rhs.is_zero() {
            return QScalar::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // Cross-cancel first so the intermediate products stay small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = rhs.den.div_exact(&g1);
        let n2 = rhs.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        let mut num = &n1 * &n2;
        let mut den = &d1 * &d2;
        if den.leading().is_some_and(Signed::is_negative) {
            num = -num;
            den = -den;
        }
        QScalar { num, den }
    }
}

impl<'a> Div<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    /// Panics on division by zero; use [`QScalar::checked_div`] otherwise.
    fn div(self, rhs: &QScalar) -> QScalar {
        self.checked_div(rhs).expect("zero divisor")
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: QScalar) -> QScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: &QScalar) -> QScalar {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl AddAssign<&QScalar> for QScalar {
    fn add_assign(&mut self, rhs: &QScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QScalar> for QScalar {
    fn sub_assign(&mut self, rhs: &QScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&QScalar> for QScalar {
    fn mul_assign(&mut self, rhs: &QScalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QScalar {
        QScalar::qpow(1)
    }

    fn qinv() -> QScalar {
        QScalar::qpow(-1)
    }

    #[test]
    fn add_q_and_inverse() {
        let s = &q() + &qinv();
        assert_eq!(s.to_string(), "(q^2+1)/(q)");
        assert_eq!(s.numer(), &QPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(s.denom(), &QPoly::from_i64s(&[0, 1]));
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let d = &q() - &qinv();
        let prod = &inv_q_minus_qinv() * &d;
        assert!(prod.is_one());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(QScalar::zero().inv(), Err(Error::ZeroDivisor));
        assert!(QScalar::one().checked_div(&QScalar::zero()).is_err());
        assert!(QScalar::from_parts(QPoly::one(), QPoly::zero()).is_err());
    }

    #[test]
    fn zero_is_unique() {
        let z = &q() - &q();
        assert_eq!(z, QScalar::zero());
        assert!(z.denom().is_one());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(q().bar(), qinv());
        let sym = &q() + &qinv();
        assert_eq!(sym.bar(), sym);
        let x = inv_q_minus_qinv();
        assert_eq!(x.bar(), -x.clone());
    }

    #[test]
    fn qint_examples() {
        assert_eq!(qint(0), QScalar::zero());
        assert_eq!(qint(1), QScalar::one());
        assert_eq!(qint(2), &q() + &qinv());
        assert_eq!(qint(-3), -qint(3));
    }

    #[test]
    fn qint_matches_defining_quotient() {
        for n in -6..=6 {
            let direct = &(&QScalar::qpow(n) - &QScalar::qpow(-n)) * &inv_q_minus_qinv();
            assert_eq!(qint(n), direct, "n = {n}");
        }
    }

    #[test]
    fn qint_recursion() {
        for n in 0..=20 {
            let rhs = &(&q() * &qint(n)) + &QScalar::qpow(-n);
            assert_eq!(qint(n + 1), rhs, "n = {n}");
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(qdoublefact(0), QScalar::one());
        assert_eq!(qdoublefact(1), qint(2));
        assert_eq!(qfact(2), &q() + &qinv());
        assert_eq!(qfact(0), QScalar::one());
        assert_eq!(qdoublefact(2), &qint(4) * &qint(2));
    }

    #[test]
    fn sign_and_content_normalization() {
        let a =
            QScalar::from_parts(QPoly::from_i64s(&[2, 4]), QPoly::from_i64s(&[-6, -2])).unwrap();
        // (2 + 4q) / (-6 - 2q) = -(1 + 2q) / (q + 3)
        assert_eq!(a.numer(), &QPoly::from_i64s(&[-1, -2]));
        assert_eq!(a.denom(), &QPoly::from_i64s(&[3, 1]));
    }

    #[test]
    fn polynomial_gcd_cancels() {
        // (q^2 - 1) / (q - 1) = q + 1
        let a =
            QScalar::from_parts(QPoly::from_i64s(&[-1, 0, 1]), QPoly::from_i64s(&[-1, 1])).unwrap();
        assert_eq!(a, QScalar::laurent(0, &[1, 1]));
    }

    #[test]
    fn laurent_folding() {
        let a = QScalar::laurent(-2, &[3, 0, 1]);
        assert_eq!(a.to_string(), "(q^2+3)/(q^2)");
        assert_eq!(QScalar::qpow(-3).to_string(), "(1)/(q^3)");
        assert_eq!(QScalar::monomial(-2, 3).to_string(), "-2*q^3");
    }

    #[test]
    fn pow_handles_negative_exponents() {
        assert_eq!(q().pow(-3).unwrap(), QScalar::qpow(-3));
        assert!(QScalar::zero().pow(-1).is_err());
    }
}
