//! Noncommutative expression trees over an arbitrary letter alphabet.
//!
//! [`Expr`] is the shared AST for Weyl words, ıquantum-group words and
//! polynomial input. It is purely syntactic: evaluation into a concrete
//! algebra goes through the [`Ring`] trait, substitution produces another
//! tree.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::QScalar;
use crate::error::Result;

/// Whether a substitution preserves or reverses the order of products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Multiplicative,
    Antimultiplicative,
}

impl Direction {
    pub fn compose(self, other: Direction) -> Direction {
        if self == other {
            Direction::Multiplicative
        } else {
            Direction::Antimultiplicative
        }
    }

    pub fn is_anti(self) -> bool {
        self == Direction::Antimultiplicative
    }
}

/// Action on scalar coefficients: identity or the bar involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Twist {
    Identity,
    Bar,
}

impl Twist {
    pub fn compose(self, other: Twist) -> Twist {
        if self == other {
            Twist::Identity
        } else {
            Twist::Bar
        }
    }

    pub fn apply(self, c: &QScalar) -> QScalar {
        match self {
            Twist::Identity => c.clone(),
            Twist::Bar => c.bar(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr<L> {
    Scalar(QScalar),
    Letter(L),
    Sum(Vec<Expr<L>>),
    Product(Vec<Expr<L>>),
    Scale(QScalar, Box<Expr<L>>),
}

/// Target algebra for [`Expr::eval`].
pub trait Ring {
    type Elem: Clone;
    fn scalar(&self, c: &QScalar) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn scale(&self, c: &QScalar, a: &Self::Elem) -> Self::Elem;

    fn zero(&self) -> Self::Elem {
        self.scalar(&QScalar::zero())
    }

    fn one(&self) -> Self::Elem {
        self.scalar(&QScalar::one())
    }
}

impl<L> Expr<L> {
    pub fn letter(l: L) -> Self {
        Expr::Letter(l)
    }

    pub fn scalar(c: QScalar) -> Self {
        Expr::Scalar(c)
    }

    pub fn one() -> Self {
        Expr::Scalar(QScalar::one())
    }

    pub fn word<I: IntoIterator<Item = L>>(letters: I) -> Self {
        Expr::Product(letters.into_iter().map(Expr::Letter).collect())
    }

    pub fn product(factors: Vec<Expr<L>>) -> Self {
        Expr::Product(factors)
    }

    pub fn sum(terms: Vec<Expr<L>>) -> Self {
        Expr::Sum(terms)
    }

    pub fn scaled(self, c: QScalar) -> Self {
        if c.is_one() {
            self
        } else {
            Expr::Scale(c, Box::new(self))
        }
    }

    pub fn neg(self) -> Self {
        self.scaled(QScalar::from_int(-1))
    }

    pub fn minus(self, other: Expr<L>) -> Self {
        Expr::Sum(vec![self, other.neg()])
    }
}

impl<L: Clone> Expr<L> {
    pub fn times(&self, other: &Expr<L>) -> Self {
        Expr::Product(vec![self.clone(), other.clone()])
    }

    /// q-commutator `[x, y]_e = x y - q^e y x`.
    pub fn qcomm(x: &Expr<L>, y: &Expr<L>, e: i64) -> Self {
        Expr::Sum(vec![
            x.times(y),
            y.times(x).scaled(QScalar::monomial(-1, e)),
        ])
    }

    /// Replace every letter by `f(letter)`; products are reversed when
    /// `direction` is antimultiplicative and scalars pass through `twist`.
    pub fn substitute<M, F>(&self, f: &F, direction: Direction, twist: Twist) -> Result<Expr<M>>
    where
        F: Fn(&L) -> Result<Expr<M>>,
    {
        Ok(match self {
            Expr::Scalar(c) => Expr::Scalar(twist.apply(c)),
            Expr::Letter(l) => f(l)?,
            Expr::Sum(ts) => Expr::Sum(
                ts.iter()
                    .map(|t| t.substitute(f, direction, twist))
                    .collect::<Result<_>>()?,
            ),
            Expr::Product(fs) => {
                let mut out: Vec<Expr<M>> = fs
                    .iter()
                    .map(|t| t.substitute(f, direction, twist))
                    .collect::<Result<_>>()?;
                if direction.is_anti() {
                    out.reverse();
                }
                Expr::Product(out)
            }
            Expr::Scale(c, inner) => Expr::Scale(
                twist.apply(c),
                Box::new(inner.substitute(f, direction, twist)?),
            ),
        })
    }

    /// Evaluate in `ring`, mapping letters through `leaf`.
    pub fn eval<R, F>(
        &self,
        ring: &R,
        leaf: &F,
        direction: Direction,
        twist: Twist,
    ) -> Result<R::Elem>
    where
        R: Ring,
        F: Fn(&L) -> Result<R::Elem>,
    {
        Ok(match self {
            Expr::Scalar(c) => ring.scalar(&twist.apply(c)),
            Expr::Letter(l) => leaf(l)?,
            Expr::Sum(ts) => {
                let mut acc = ring.zero();
                for t in ts {
                    acc = ring.add(&acc, &t.eval(ring, leaf, direction, twist)?);
                }
                acc
            }
            Expr::Product(fs) => {
                let mut acc = ring.one();
                let mut apply = |t: &Expr<L>| -> Result<()> {
                    let v = t.eval(ring, leaf, direction, twist)?;
                    acc = match direction {
                        Direction::Multiplicative => ring.mul(&acc, &v)?,
                        Direction::Antimultiplicative => ring.mul(&v, &acc)?,
                    };
                    Ok(())
                };
                for t in fs {
                    apply(t)?;
                }
                acc
            }
            Expr::Scale(c, inner) => {
                ring.scale(&twist.apply(c), &inner.eval(ring, leaf, direction, twist)?)
            }
        })
    }

    pub fn letters(&self) -> Vec<&L> {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters<'a>(&'a self, out: &mut Vec<&'a L>) {
        match self {
            Expr::Scalar(_) => {}
            Expr::Letter(l) => out.push(l),
            Expr::Sum(ts) | Expr::Product(ts) => ts.iter().for_each(|t| t.collect_letters(out)),
            Expr::Scale(_, inner) => inner.collect_letters(out),
        }
    }
}

/// Linear combination of words in the free algebra; the canonical form of
/// an [`Expr`] when no relations are imposed.
pub type FreeCombination<L> = BTreeMap<Vec<L>, QScalar>;

fn add_term<L: Ord + Clone>(acc: &mut FreeCombination<L>, w: Vec<L>, c: QScalar) {
    if c.is_zero() {
        return;
    }
    match acc.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// The free associative algebra over `L`, as a [`Ring`].
pub struct FreeRing<L>(std::marker::PhantomData<L>);

impl<L> Default for FreeRing<L> {
    fn default() -> Self {
        FreeRing(std::marker::PhantomData)
    }
}

impl<L: Ord + Clone> Ring for FreeRing<L> {
    type Elem = FreeCombination<L>;

    fn scalar(&self, c: &QScalar) -> Self::Elem {
        let mut m = BTreeMap::new();
        add_term(&mut m, Vec::new(), c.clone());
        m
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = a.clone();
        for (w, c) in b {
            add_term(&mut out, w.clone(), c.clone());
        }
        out
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let mut out = BTreeMap::new();
        for (wa, ca) in a {
            for (wb, cb) in b {
                let mut w = wa.clone();
                w.extend(wb.iter().cloned());
                add_term(&mut out, w, ca * cb);
            }
        }
        Ok(out)
    }

    fn scale(&self, c: &QScalar, a: &Self::Elem) -> Self::Elem {
        if c.is_zero() {
            return BTreeMap::new();
        }
        a.iter().map(|(w, x)| (w.clone(), c * x)).collect()
    }
}

impl<L: Ord + Clone> Expr<L> {
    /// Expand into a linear combination of words, collecting like terms.
    pub fn expand(&self) -> FreeCombination<L> {
        self.eval(
            &FreeRing::<L>::default(),
            &|l: &L| {
                let mut m = BTreeMap::new();
                m.insert(vec![l.clone()], QScalar::one());
                Ok(m)
            },
            Direction::Multiplicative,
            Twist::Identity,
        )
        .expect("free expansion cannot fail")
    }
}

/// Render a free linear combination as `c * w + ...`.
pub fn render_combination<L: fmt::Display>(comb: &FreeCombination<L>) -> String {
    render_terms(comb.iter().map(|(w, c)| {
        let body = w
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        (c, body)
    }))
}

/// Join `(coefficient, monomial text)` pairs with explicit signs.
pub(crate) fn render_terms<'a, I>(terms: I) -> String
where
    I: Iterator<Item = (&'a QScalar, String)>,
{
    let mut out = String::new();
    for (c, body) in terms {
        let (neg, mag) = if c.is_negative_term() {
            (true, -c)
        } else {
            (false, c.clone())
        };
        let text = if body.is_empty() {
            mag.to_string()
        } else if mag.is_one() {
            body
        } else {
            format!("{mag} * {body}")
        };
        match (out.is_empty(), neg) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        out.push_str(&text);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<L: fmt::Display> fmt::Display for Expr<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Scalar(c) => write!(f, "{c}"),
            Expr::Letter(l) => write!(f, "{l}"),
            Expr::Sum(ts) => {
                if ts.is_empty() {
                    return f.write_str("0");
                }
                for (k, t) in ts.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
            Expr::Product(fs) => {
                if fs.is_empty() {
                    return f.write_str("1");
                }
                for (k, t) in fs.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" ")?;
                    }
                    match t {
                        Expr::Sum(_) | Expr::Scale(..) => write!(f, "({t})")?,
                        _ => write!(f, "{t}")?,
                    }
                }
                Ok(())
            }
            Expr::Scale(c, inner) => match **inner {
                Expr::Sum(_) => write!(f, "{c} * ({inner})"),
                _ => write!(f, "{c} * {inner}"),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = Expr<char>;

    #[test]
    fn qcomm_of_equal_letters_collects() {
        let b = E::letter('b');
        let c = E::qcomm(&b, &b, 1).expand();
        assert_eq!(c.len(), 1);
        let coeff = &QScalar::one() - &QScalar::qpow(1);
        assert_eq!(c[&vec!['b', 'b']], coeff);
    }

    #[test]
    fn substitution_reverses_and_twists() {
        let e = E::word(['a', 'b']).scaled(QScalar::qpow(1));
        let s = e
            .substitute(
                &|l: &char| Ok(Expr::letter(l.to_ascii_uppercase())),
                Direction::Antimultiplicative,
                Twist::Bar,
            )
            .unwrap();
        let exp = s.expand();
        assert_eq!(exp[&vec!['B', 'A']], QScalar::qpow(-1));
    }

    #[test]
    fn rendering_uses_signs() {
        let e = E::word(['a']).minus(E::word(['b']).scaled(QScalar::qpow(2)));
        assert_eq!(render_combination(&e.expand()), "a - q^2 * b");
    }
}
