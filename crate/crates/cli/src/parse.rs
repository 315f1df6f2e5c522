//! Text syntax for Weyl, ıquantum and polynomial expressions.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor (('*'|'/')? factor)*
//! factor := atom ('^' signedInt)?
//! atom   := generator | 'q' | integer | '(' expr ')' | '[' expr ',' expr ']_' ('+'|'-')?
//! ```
//!
//! Juxtaposition is multiplication. `/` divides by a letter-free factor, which
//! also covers rational literals such as `3/2`.

use qweyl_core::expr::Ring;
use qweyl_core::{
    Direction, Expr, FreeExpr, IExpr, ILetter, PolyElement, QScalar, Twist, Variant, WeylLetter,
};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator '{name}' at {pos}")]
    UnknownGenerator { pos: usize, name: String },
    #[error("{source} (at {pos})")]
    Algebra {
        pos: usize,
        #[source]
        source: qweyl_core::Error,
    },
}

impl ParseError {
    pub fn pos(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. }
            | ParseError::UnknownGenerator { pos, .. }
            | ParseError::Algebra { pos, .. } => *pos,
        }
    }
}

type PResult<T> = Result<T, ParseError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Context {
    Weyl,
    Iqg,
    Poly,
}

impl Context {
    fn accepts(self, name: char) -> bool {
        match self {
            Context::Weyl => matches!(name, 'd' | 'x' | 'm'),
            Context::Iqg => matches!(name, 'B' | 'K'),
            Context::Poly => name == 'X',
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Node {
    Num(QScalar),
    Gen { name: char, index: u32, pos: usize },
    Sum(Vec<Node>),
    Product(Vec<Node>),
    Neg(Box<Node>),
    Div(Box<Node>, Box<Node>, usize),
    Pow(Box<Node>, i64, usize),
    Comm(Box<Node>, Box<Node>, i64),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: Context,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax(format!("expected '{}'", c as char)))
        }
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn expr(&mut self) -> PResult<Node> {
        let mut terms = Vec::new();
        let first_neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let t = self.term()?;
        terms.push(if first_neg { Node::Neg(Box::new(t)) } else { t });
        loop {
            if self.eat(b'+') {
                terms.push(self.term()?);
            } else if self.eat(b'-') {
                terms.push(Node::Neg(Box::new(self.term()?)));
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Node::Sum(terms)
        })
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c == b'(' || c == b'[' || c.is_ascii_alphanumeric())
    }

    fn term(&mut self) -> PResult<Node> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = mul(acc, self.factor()?);
            } else if self.peek() == Some(b'/') {
                let pos = self.pos;
                self.pos += 1;
                acc = Node::Div(Box::new(acc), Box::new(self.factor()?), pos);
            } else if self.starts_factor() {
                acc = mul(acc, self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> PResult<Node> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        let pos = self.pos;
        self.pos += 1;
        self.skip_ws();
        let neg = if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            true
        } else {
            if self.src.get(self.pos) == Some(&b'+') {
                self.pos += 1;
            }
            false
        };
        let k: i64 = self
            .digits()
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| self.syntax("expected integer exponent"))?;
        Ok(Node::Pow(Box::new(base), if neg { -k } else { k }, pos))
    }

    fn atom(&mut self) -> PResult<Node> {
        let next = self.peek();
        let pos = self.pos;
        match next {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b']')?;
                if self.src.get(self.pos) != Some(&b'_') {
                    return Err(self.syntax("expected '_' after ']'"));
                }
                self.pos += 1;
                let e = match self.src.get(self.pos) {
                    Some(b'-') => {
                        self.pos += 1;
                        -1
                    }
                    Some(b'+') => {
                        self.pos += 1;
                        1
                    }
                    _ => 1,
                };
                Ok(Node::Comm(Box::new(a), Box::new(b), e))
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                let n: i64 = d.parse().map_err(|_| ParseError::Syntax {
                    pos,
                    msg: format!("integer literal {d} too large"),
                })?;
                Ok(Node::Num(QScalar::from_int(n)))
            }
            Some(b'q') => {
                self.pos += 1;
                if self
                    .src
                    .get(self.pos)
                    .is_some_and(u8::is_ascii_alphanumeric)
                {
                    return Err(self.unknown(pos));
                }
                Ok(Node::Num(QScalar::qpow(1)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                let name = c as char;
                let Some(d) = self.digits() else {
                    return Err(self.unknown(pos));
                };
                if self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic)
                    || !self.ctx.accepts(name)
                {
                    return Err(self.unknown(pos));
                }
                let index = d.parse().map_err(|_| ParseError::Syntax {
                    pos,
                    msg: format!("index {d} too large"),
                })?;
                Ok(Node::Gen { name, index, pos })
            }
            Some(c) => Err(self.syntax(format!("unexpected '{}'", c as char))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn unknown(&mut self, pos: usize) -> ParseError {
        let end = self.src[pos..]
            .iter()
            .position(|c| !c.is_ascii_alphanumeric())
            .map_or(self.src.len(), |k| pos + k);
        ParseError::UnknownGenerator {
            pos,
            name: String::from_utf8_lossy(&self.src[pos..end]).into_owned(),
        }
    }
}

fn mul(a: Node, b: Node) -> Node {
    match a {
        Node::Product(mut fs) => {
            fs.push(b);
            Node::Product(fs)
        }
        a => Node::Product(vec![a, b]),
    }
}

fn parse_node(text: &str, ctx: Context) -> PResult<Node> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ctx,
    };
    let node = p.expr()?;
    match p.peek() {
        None => Ok(node),
        Some(c) => Err(p.syntax(format!("unexpected '{}'", c as char))),
    }
}

impl Node {
    /// Value of a letter-free subtree; `None` if it contains a generator.
    fn constant(&self) -> PResult<Option<QScalar>> {
        Ok(match self {
            Node::Num(c) => Some(c.clone()),
            Node::Gen { .. } => None,
            Node::Neg(a) => a.constant()?.map(|c| -c),
            Node::Sum(ts) => {
                let mut acc = QScalar::zero();
                for t in ts {
                    let Some(c) = t.constant()? else {
                        return Ok(None);
                    };
                    acc += &c;
                }
                Some(acc)
            }
            Node::Product(fs) => {
                let mut acc = QScalar::one();
                for f in fs {
                    let Some(c) = f.constant()? else {
                        return Ok(None);
                    };
                    acc *= &c;
                }
                Some(acc)
            }
            Node::Div(a, b, pos) => match (a.constant()?, b.constant()?) {
                (Some(x), Some(y)) => Some(
                    x.checked_div(&y)
                        .map_err(|source| ParseError::Algebra { pos: *pos, source })?,
                ),
                _ => None,
            },
            Node::Pow(a, k, pos) => match a.constant()? {
                Some(c) => Some(
                    c.pow(*k)
                        .map_err(|source| ParseError::Algebra { pos: *pos, source })?,
                ),
                None => None,
            },
            Node::Comm(a, b, e) => match (a.constant()?, b.constant()?) {
                (Some(x), Some(y)) => {
                    let xy = &x * &y;
                    Some(&xy - &(&QScalar::qpow(*e) * &xy))
                }
                _ => None,
            },
        })
    }

    /// Lower to an expression over `L`; `letter(name, index, inverse, pos)`
    /// resolves generators.
    fn lower<L, F>(&self, letter: &F) -> PResult<Expr<L>>
    where
        L: Clone,
        F: Fn(char, u32, bool, usize) -> PResult<L>,
    {
        if let Some(c) = self.constant()? {
            return Ok(Expr::scalar(c));
        }
        Ok(match self {
            Node::Num(c) => Expr::scalar(c.clone()),
            Node::Gen { name, index, pos } => Expr::letter(letter(*name, *index, false, *pos)?),
            Node::Neg(a) => a.lower(letter)?.neg(),
            Node::Sum(ts) => Expr::sum(ts.iter().map(|t| t.lower(letter)).collect::<PResult<_>>()?),
            Node::Product(fs) => {
                Expr::product(fs.iter().map(|f| f.lower(letter)).collect::<PResult<_>>()?)
            }
            Node::Div(a, b, pos) => {
                let Some(d) = b.constant()? else {
                    return Err(ParseError::Syntax {
                        pos: *pos,
                        msg: "divisor must be a scalar".into(),
                    });
                };
                let inv = d
                    .inv()
                    .map_err(|source| ParseError::Algebra { pos: *pos, source })?;
                a.lower(letter)?.scaled(inv)
            }
            Node::Pow(a, k, pos) => {
                if *k >= 0 {
                    let base = a.lower(letter)?;
                    Expr::product(vec![base; *k as usize])
                } else if let Node::Gen { name, index, pos } = a.as_ref() {
                    let l = letter(*name, *index, true, *pos)?;
                    Expr::word(vec![l; k.unsigned_abs() as usize])
                } else {
                    return Err(ParseError::Syntax {
                        pos: *pos,
                        msg: "negative powers apply only to scalars and invertible generators"
                            .into(),
                    });
                }
            }
            Node::Comm(a, b, e) => Expr::qcomm(&a.lower(letter)?, &b.lower(letter)?, *e),
        })
    }
}

fn algebra(pos: usize) -> impl Fn(qweyl_core::Error) -> ParseError {
    move |source| ParseError::Algebra { pos, source }
}

fn not_invertible(name: char, pos: usize) -> ParseError {
    ParseError::Syntax {
        pos,
        msg: format!("generator {name} has no inverse"),
    }
}

/// Parse an expression in the Weyl letters `d`, `x`, `m`.
pub fn parse_weyl(text: &str, v: &Variant) -> PResult<FreeExpr> {
    parse_node(text, Context::Weyl)?.lower(&|name, i, inverse, pos| {
        let l = match (name, inverse) {
            ('m', false) => WeylLetter::M(i),
            ('m', true) => WeylLetter::MInv(i),
            (_, true) => return Err(not_invertible(name, pos)),
            ('d', _) => WeylLetter::D(i),
            _ => WeylLetter::X(i),
        };
        l.validate(v).map_err(algebra(pos))?;
        Ok(l)
    })
}

/// Parse an expression in the ıquantum letters `B`, `K`.
pub fn parse_iqg(text: &str, v: &Variant) -> PResult<IExpr> {
    parse_node(text, Context::Iqg)?.lower(&|name, i, inverse, pos| {
        let l = match (name, inverse) {
            ('K', false) => ILetter::K(i),
            ('K', true) => ILetter::KInv(i),
            (_, true) => return Err(not_invertible(name, pos)),
            _ => ILetter::B(i),
        };
        l.validate(v).map_err(algebra(pos))?;
        Ok(l)
    })
}

/// Polynomials in `X_1..X_{weyl_len}` under commutative multiplication.
struct PolyRing(u32);

impl Ring for PolyRing {
    type Elem = PolyElement;

    fn scalar(&self, c: &QScalar) -> PolyElement {
        PolyElement::term(vec![0; self.0 as usize], c.clone())
    }

    fn add(&self, a: &PolyElement, b: &PolyElement) -> PolyElement {
        a + b
    }

    fn mul(&self, a: &PolyElement, b: &PolyElement) -> qweyl_core::Result<PolyElement> {
        a.checked_mul(b)
    }

    fn scale(&self, c: &QScalar, a: &PolyElement) -> PolyElement {
        a.scale(c)
    }
}

/// Parse a polynomial in `X1..Xn`, where `n` is the number of Weyl indices.
pub fn parse_poly(text: &str, v: &Variant) -> PResult<PolyElement> {
    let n = v.weyl_len();
    let expr = parse_node(text, Context::Poly)?.lower(&|_, i, inverse, pos| {
        if inverse {
            return Err(not_invertible('X', pos));
        }
        v.check_weyl_index(i).map_err(algebra(pos))?;
        Ok(i)
    })?;
    expr.eval(
        &PolyRing(n),
        &|&i: &u32| PolyElement::var(n, i),
        Direction::Multiplicative,
        Twist::Identity,
    )
    .map_err(algebra(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use qweyl_core::{reduce, WeylElement};

    fn jm(r: u32) -> Variant {
        Variant::jmath(r).unwrap()
    }

    #[test]
    fn juxtaposition_is_product() {
        let v = jm(1);
        let e = parse_weyl("x2 d1", &v).unwrap();
        assert_eq!(
            e,
            Expr::product(vec![
                Expr::letter(WeylLetter::X(2)),
                Expr::letter(WeylLetter::D(1))
            ])
        );
    }

    #[test]
    fn q_commutator_sugar() {
        let v = jm(2);
        let e = parse_iqg("[B1,B2]_-", &v).unwrap();
        let b = |i| Expr::letter(ILetter::B(i));
        assert_eq!(e, Expr::qcomm(&b(1), &b(2), -1));
    }

    #[test]
    fn illegal_k_is_rejected() {
        let v = Variant::imath(2).unwrap();
        let err = parse_iqg("K3", &v).unwrap_err();
        assert_eq!(err.to_string(), "K3 illegal: ρ fixes node 3 (at 0)");
    }

    #[test]
    fn errors_carry_positions() {
        let v = jm(1);
        assert_eq!(parse_weyl("x1 + * d1", &v).unwrap_err().pos(), 5);
        assert!(matches!(
            parse_weyl("x1 y2", &v),
            Err(ParseError::UnknownGenerator { pos: 3, .. })
        ));
        assert!(matches!(
            parse_weyl("x1 B1", &v),
            Err(ParseError::UnknownGenerator { .. })
        ));
        assert!(matches!(
            parse_weyl("x9", &v),
            Err(ParseError::Algebra {
                source: qweyl_core::Error::IndexOutOfRange { .. },
                ..
            })
        ));
        assert!(parse_weyl("x1^-1", &v).is_err());
        assert!(parse_weyl("x1 / d1", &v).is_err());
        assert!(parse_weyl("(x1", &v).is_err());
    }

    #[test]
    fn scalars_and_rationals() {
        let v = jm(1);
        let e = reduce(v, &parse_weyl("3/2 q^-2 m1^-2", &v).unwrap()).unwrap();
        let expected = WeylElement::word(v, &[WeylLetter::MInv(1), WeylLetter::MInv(1)])
            .unwrap()
            .scale(&(&QScalar::from_ratio(3, 2).unwrap() * &QScalar::qpow(-2)));
        assert_eq!(e, expected);
    }

    #[test]
    fn polynomial_syntax() {
        let v = jm(2);
        let f = parse_poly("X1^2 X3 + (q+q^-1) X2", &v).unwrap();
        assert_eq!(f.terms().len(), 2);
        assert_eq!(
            f.to_string(),
            parse_poly(&f.to_string(), &v).unwrap().to_string()
        );
    }
}
