use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::{inv_q_minus_qinv, QScalar};
use crate::error::{Error, Result};
use crate::expr::{render_terms, Direction, Ring, Twist};
use crate::variant::Variant;

use super::{FreeExpr, WeylLetter};

/// Exponents `x^x d^d m^m` at one index. Canonical slots have `min(x, d) = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub x: u32,
    pub d: u32,
    pub m: i32,
}

impl Slot {
    pub fn is_one(&self) -> bool {
        self.x == 0 && self.d == 0 && self.m == 0
    }
}

/// Canonical basis monomial `prod_i x_i^a_i d_i^b_i m_i^c_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylMonomial {
    slots: Vec<Slot>,
}

impl WeylMonomial {
    pub fn one(len: u32) -> Self {
        WeylMonomial {
            slots: vec![Slot::default(); len as usize],
        }
    }

    /// Build from per-index slots; rejects slots with both `x` and `d`.
    pub fn new(slots: Vec<Slot>) -> Result<Self> {
        if let Some(s) = slots.iter().find(|s| s.x > 0 && s.d > 0) {
            return Err(Error::Malformed(format!(
                "non-canonical slot x^{} d^{} in a monomial",
                s.x, s.d
            )));
        }
        Ok(WeylMonomial { slots })
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// Slot of the 1-based index `i`.
    pub fn slot(&self, i: u32) -> Slot {
        self.slots[(i - 1) as usize]
    }

    pub fn is_one(&self) -> bool {
        self.slots.iter().all(Slot::is_one)
    }

    /// The canonical reading word: indices ascending, `x` then `d` then `m`.
    pub fn word(&self) -> Vec<WeylLetter> {
        let mut w = Vec::new();
        for (k, s) in self.slots.iter().enumerate() {
            let i = k as u32 + 1;
            w.extend(std::iter::repeat(WeylLetter::X(i)).take(s.x as usize));
            w.extend(std::iter::repeat(WeylLetter::D(i)).take(s.d as usize));
            w.extend(WeylLetter::m_power(i, s.m));
        }
        w
    }
}

impl fmt::Display for WeylMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let pw = |name: char, i: usize, e: i64| {
            if e == 1 {
                format!("{name}{i}")
            } else {
                format!("{name}{i}^{e}")
            }
        };
        for (k, s) in self.slots.iter().enumerate() {
            let i = k + 1;
            if s.x > 0 {
                parts.push(pw('x', i, s.x as i64));
            }
            if s.d > 0 {
                parts.push(pw('d', i, s.d as i64));
            }
            if s.m != 0 {
                parts.push(pw('m', i, s.m as i64));
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Laurent polynomial in a single `m_i` with `Q(q)` coefficients.
type MPoly = BTreeMap<i32, QScalar>;

fn mpoly_mul(a: &MPoly, b: &MPoly) -> MPoly {
    let mut out = MPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let entry = out.entry(ea + eb).or_insert_with(QScalar::zero);
            *entry += &(ca * cb);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `(q^s m - q^-s m^-1) / (q - q^-1)`.
fn shifted_bracket(s: i64) -> MPoly {
    let inv = inv_q_minus_qinv();
    let mut p = MPoly::new();
    p.insert(1, &QScalar::qpow(s) * &inv);
    p.insert(-1, -(&QScalar::qpow(-s) * &inv));
    p
}

#[derive(Clone, Copy)]
enum Block {
    /// `x^k d^k`
    XD,
    /// `d^k x^k`
    DX,
}

/// `x^k d^k = prod_{j<k} (q^{-kj} m - q^{kj} m^-1)/(q - q^-1)` and
/// `d^k x^k = prod_{1<=j<=k} (q^{kj} m - q^{-kj} m^-1)/(q - q^-1)` with
/// `kj = kappa * j`.
fn block(kind: Block, kappa: u32, k: u32) -> MPoly {
    let kap = kappa as i64;
    let mut p = MPoly::from([(0, QScalar::one())]);
    for j in 0..k as i64 {
        let s = match kind {
            Block::XD => -kap * j,
            Block::DX => kap * (j + 1),
        };
        p = mpoly_mul(&p, &shifted_bracket(s));
    }
    p
}

/// Product of two canonical slots at one index with weight `kappa`.
fn slot_mul(kappa: u32, s1: Slot, s2: Slot) -> Vec<(Slot, QScalar)> {
    if s2.is_one() {
        return vec![(s1, QScalar::one())];
    }
    if s1.is_one() {
        return vec![(s2, QScalar::one())];
    }
    let kap = kappa as i64;
    // m^c x^a' d^b' = q^{kappa c (a' - b')} x^a' d^b' m^c
    let pre = QScalar::qpow(kap * s1.m as i64 * (s2.x as i64 - s2.d as i64));
    let mt = s1.m + s2.m;
    let mut out = Vec::new();
    if s1.d == 0 {
        let (a, b) = (s1.x + s2.x, s2.d);
        if a == 0 || b == 0 {
            out.push((Slot { x: a, d: b, m: mt }, pre));
        } else {
            let k = a.min(b);
            let p = block(Block::XD, kappa, k);
            for (c, pc) in &p {
                let coeff = &pre * pc;
                if a >= b {
                    out.push((
                        Slot {
                            x: a - k,
                            d: 0,
                            m: c + mt,
                        },
                        coeff,
                    ));
                } else {
                    // P(m) d^s = d^s P(q^{-kappa s} m)
                    let s = (b - a) as i64;
                    let shift = QScalar::qpow(-kap * s * *c as i64);
                    out.push((
                        Slot {
                            x: 0,
                            d: b - a,
                            m: c + mt,
                        },
                        &coeff * &shift,
                    ));
                }
            }
        }
    } else if s2.x == 0 {
        out.push((
            Slot {
                x: 0,
                d: s1.d + s2.d,
                m: mt,
            },
            pre,
        ));
    } else {
        let (b, a) = (s1.d, s2.x);
        let k = a.min(b);
        let p = block(Block::DX, kappa, k);
        for (c, pc) in &p {
            let coeff = &pre * pc;
            if b >= a {
                out.push((
                    Slot {
                        x: 0,
                        d: b - a,
                        m: c + mt,
                    },
                    coeff,
                ));
            } else {
                // Q(m) x^s = x^s Q(q^{kappa s} m)
                let s = (a - b) as i64;
                let shift = QScalar::qpow(kap * s * *c as i64);
                out.push((
                    Slot {
                        x: a - b,
                        d: 0,
                        m: c + mt,
                    },
                    &coeff * &shift,
                ));
            }
        }
    }
    out
}

/// A finite `Q(q)`-linear combination of canonical monomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    variant: Variant,
    terms: BTreeMap<WeylMonomial, QScalar>,
}

impl WeylElement {
    pub fn zero(v: Variant) -> Self {
        WeylElement {
            variant: v,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(v: Variant) -> Self {
        Self::scalar(v, QScalar::one())
    }

    pub fn scalar(v: Variant, c: QScalar) -> Self {
        Self::term(v, WeylMonomial::one(v.weyl_len()), c)
    }

    pub fn term(v: Variant, mono: WeylMonomial, c: QScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        WeylElement { variant: v, terms }
    }

    pub fn letter(v: Variant, l: WeylLetter) -> Result<Self> {
        l.validate(&v)?;
        let mut slots = vec![Slot::default(); v.weyl_len() as usize];
        let s = &mut slots[(l.index() - 1) as usize];
        match l {
            WeylLetter::X(_) => s.x = 1,
            WeylLetter::D(_) => s.d = 1,
            WeylLetter::M(_) => s.m = 1,
            WeylLetter::MInv(_) => s.m = -1,
        }
        Ok(Self::term(v, WeylMonomial { slots }, QScalar::one()))
    }

    /// Canonical product of letters, left to right.
    pub fn word(v: Variant, letters: &[WeylLetter]) -> Result<Self> {
        let mut acc = Self::one(v);
        for &l in letters {
            acc = acc.checked_mul(&Self::letter(v, l)?)?;
        }
        Ok(acc)
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn terms(&self) -> &BTreeMap<WeylMonomial, QScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same(&self, other: &WeylElement) -> Result<()> {
        if self.variant != other.variant {
            return Err(Error::VariantMismatch(
                self.variant.to_string(),
                other.variant.to_string(),
            ));
        }
        Ok(())
    }

    fn add_term(&mut self, mono: WeylMonomial, c: QScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn checked_add(&self, other: &WeylElement) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.variant);
        }
        WeylElement {
            variant: self.variant,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), c * x)).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&QScalar) -> QScalar) -> Self {
        let mut out = Self::zero(self.variant);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn checked_mul(&self, other: &WeylElement) -> Result<Self> {
        self.check_same(other)?;
        let v = self.variant;
        let mut out = Self::zero(v);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut partial: Vec<(Vec<Slot>, QScalar)> =
                    vec![(Vec::with_capacity(m1.slots.len()), c1 * c2)];
                for (k, (s1, s2)) in m1.slots.iter().zip(&m2.slots).enumerate() {
                    let local = slot_mul(v.kappa_of(k as u32 + 1), *s1, *s2);
                    if local.len() == 1 {
                        let (s, c) = &local[0];
                        for (slots, coeff) in partial.iter_mut() {
                            slots.push(*s);
                            if !c.is_one() {
                                *coeff *= c;
                            }
                        }
                        continue;
                    }
                    let mut next = Vec::with_capacity(partial.len() * local.len());
                    for (slots, coeff) in &partial {
                        for (s, c) in &local {
                            let mut ns = slots.clone();
                            ns.push(*s);
                            next.push((ns, coeff * c));
                        }
                    }
                    partial = next;
                }
                for (slots, c) in partial {
                    out.add_term(WeylMonomial { slots }, c);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.variant);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of `c * prod m_i^c_i`; any other element is rejected.
    pub fn unit_inverse(&self) -> Result<Self> {
        let not_unit = || Error::NotInvertible(self.to_string());
        if self.terms.len() != 1 {
            return Err(not_unit());
        }
        let (mono, c) = self.terms.iter().next().unwrap();
        if mono.slots.iter().any(|s| s.x > 0 || s.d > 0) {
            return Err(not_unit());
        }
        let slots = mono
            .slots
            .iter()
            .map(|s| Slot {
                x: 0,
                d: 0,
                m: -s.m,
            })
            .collect();
        Ok(Self::term(self.variant, WeylMonomial { slots }, c.inv()?))
    }

    /// Apply the bar involution to every coefficient.
    pub fn bar_coeffs(&self) -> Self {
        self.map_coeffs(QScalar::bar)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_terms(self.terms.iter().map(|(m, c)| {
            let body = if m.is_one() {
                String::new()
            } else {
                m.to_string()
            };
            (c, body)
        }));
        f.write_str(&s)
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement[{}]({self})", self.variant)
    }
}

impl<'a> Mul<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    /// Panics on a variant mismatch; see [`WeylElement::checked_mul`].
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        self.checked_mul(rhs).expect("variant mismatch")
    }
}

impl<'a> Add<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: &WeylElement) -> WeylElement {
        self.checked_add(rhs).expect("variant mismatch")
    }
}

impl<'a> Sub<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: &WeylElement) -> WeylElement {
        self.checked_add(&-rhs).expect("variant mismatch")
    }
}

impl Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        self.scale(&QScalar::from_int(-1))
    }
}

/// `A_q(S)` for a fixed variant, as an evaluation target.
#[derive(Clone, Copy, Debug)]
pub struct WeylAlgebra(pub Variant);

impl Ring for WeylAlgebra {
    type Elem = WeylElement;

    fn scalar(&self, c: &QScalar) -> WeylElement {
        WeylElement::scalar(self.0, c.clone())
    }

    fn add(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        a + b
    }

    fn mul(&self, a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
        a.checked_mul(b)
    }

    fn scale(&self, c: &QScalar, a: &WeylElement) -> WeylElement {
        a.scale(c)
    }
}

/// Canonical form of a free expression.
pub fn reduce(v: Variant, expr: &FreeExpr) -> Result<WeylElement> {
    expr.eval(
        &WeylAlgebra(v),
        &|l: &WeylLetter| WeylElement::letter(v, *l),
        Direction::Multiplicative,
        Twist::Identity,
    )
}

impl Mul<WeylElement> for WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: WeylElement) -> WeylElement {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylcore::WeylLetter::*;

    fn el(v: Variant, w: &[WeylLetter]) -> WeylElement {
        WeylElement::word(v, w).unwrap()
    }

    fn bracket(v: Variant, i: u32, kappa: i64) -> WeylElement {
        let inv = inv_q_minus_qinv();
        &el(v, &[M(i)]).scale(&(&QScalar::qpow(kappa) * &inv))
            - &el(v, &[MInv(i)]).scale(&(&QScalar::qpow(-kappa) * &inv))
    }

    #[test]
    fn x_d_reduces_to_bracket() {
        let v = Variant::imath(2).unwrap();
        assert_eq!(el(v, &[X(1), D(1)]), bracket(v, 1, 0));
    }

    #[test]
    fn distinguished_index_doubles_weight() {
        let v = Variant::jmath(2).unwrap();
        assert_eq!(el(v, &[D(3), X(3)]), bracket(v, 3, 2));
        assert_eq!(el(v, &[D(1), X(1)]), bracket(v, 1, 1));
    }

    #[test]
    fn distinct_indices_commute() {
        let v = Variant::jmath(2).unwrap();
        let a = el(v, &[D(1), X(2)]);
        assert_eq!(a, el(v, &[X(2), D(1)]));
        assert_eq!(a.len(), 1);
    }

    #[test]
    fn inverse_cancellation() {
        let v = Variant::jmath(2).unwrap();
        assert_eq!(el(v, &[M(1), MInv(1), D(2)]), el(v, &[D(2)]));
    }

    #[test]
    fn m_d_reorders_with_q_inverse() {
        let v = Variant::jmath(2).unwrap();
        let md = el(v, &[M(1), D(1)]);
        let expected = el(v, &[D(1), M(1)]).scale(&QScalar::qpow(-1));
        assert_eq!(md, expected);
        // and the canonical monomial is d1 m1
        assert_eq!(md.to_string(), "(1)/(q) * d1 m1");
    }

    #[test]
    fn unit_and_inverse() {
        let v = Variant::imath(1).unwrap();
        let a = el(v, &[X(2), D(1)]);
        assert_eq!(&a * &WeylElement::one(v), a);
        let u = el(v, &[M(1), MInv(2)]).scale(&QScalar::qpow(3));
        assert!((&u * &u.unit_inverse().unwrap()) == WeylElement::one(v));
        assert!(a.unit_inverse().is_err());
    }

    #[test]
    fn variant_mismatch_is_an_error() {
        let a = WeylElement::one(Variant::jmath(1).unwrap());
        let b = WeylElement::one(Variant::imath(1).unwrap());
        assert!(matches!(a.checked_mul(&b), Err(Error::VariantMismatch(..))));
    }

    #[test]
    fn higher_blocks_match_iterated_products() {
        let v = Variant::jmath(1).unwrap();
        for i in 1..=2 {
            for a in 0..4u32 {
                for b in 0..4u32 {
                    let mut w = vec![X(i); a as usize];
                    w.extend(vec![D(i); b as usize]);
                    let direct = el(v, &w);
                    let folded = el(v, &vec![X(i); a as usize]) * el(v, &vec![D(i); b as usize]);
                    assert_eq!(direct, folded);
                    let mut w2 = vec![D(i); b as usize];
                    w2.extend(vec![X(i); a as usize]);
                    let direct2 = el(v, &w2);
                    let folded2 = el(v, &vec![D(i); b as usize]) * el(v, &vec![X(i); a as usize]);
                    assert_eq!(direct2, folded2);
                }
            }
        }
    }
}
