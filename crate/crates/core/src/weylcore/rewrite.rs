//! Letter-level rewriting of free words, independent of the structured
//! multiplication in [`super::element`]. Used to cross-check confluence.

use std::collections::BTreeMap;

use crate::coeff::{inv_q_minus_qinv, QScalar};
use crate::error::Result;
use crate::variant::Variant;

use super::element::{Slot, WeylElement, WeylMonomial};
use super::{FreeExpr, WeylLetter};

/// Which redex to contract first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

fn rank(l: WeylLetter) -> u8 {
    match l {
        WeylLetter::X(_) => 0,
        WeylLetter::D(_) => 1,
        WeylLetter::M(_) | WeylLetter::MInv(_) => 2,
    }
}

/// Result of contracting the pair `(a, b)`: a combination of replacement
/// words, or `None` when the pair is already in order.
fn contract(v: &Variant, a: WeylLetter, b: WeylLetter) -> Option<Vec<(Vec<WeylLetter>, QScalar)>> {
    use WeylLetter::*;
    let (i, j) = (a.index(), b.index());
    if i > j {
        return Some(vec![(vec![b, a], QScalar::one())]);
    }
    if i < j {
        return None;
    }
    let k = v.kappa_of(i) as i64;
    let inv = inv_q_minus_qinv();
    let out = match (a, b) {
        (M(_), MInv(_)) | (MInv(_), M(_)) => vec![(vec![], QScalar::one())],
        (D(_), X(_)) => vec![
            (vec![M(i)], &QScalar::qpow(k) * &inv),
            (vec![MInv(i)], -(&QScalar::qpow(-k) * &inv)),
        ],
        (X(_), D(_)) => vec![(vec![M(i)], inv.clone()), (vec![MInv(i)], -inv)],
        (M(_), X(_)) => vec![(vec![X(i), M(i)], QScalar::qpow(k))],
        (MInv(_), X(_)) => vec![(vec![X(i), MInv(i)], QScalar::qpow(-k))],
        (M(_), D(_)) => vec![(vec![D(i), M(i)], QScalar::qpow(-k))],
        (MInv(_), D(_)) => vec![(vec![D(i), MInv(i)], QScalar::qpow(k))],
        _ => {
            debug_assert!(rank(a) <= rank(b));
            return None;
        }
    };
    Some(out)
}

fn find_redex(
    v: &Variant,
    w: &[WeylLetter],
    strategy: Strategy,
) -> Option<(usize, Vec<(Vec<WeylLetter>, QScalar)>)> {
    let n = w.len();
    if n < 2 {
        return None;
    }
    let mut scan = |p: usize| contract(v, w[p], w[p + 1]).map(|r| (p, r));
    match strategy {
        Strategy::Leftmost => (0..n - 1).find_map(&mut scan),
        Strategy::Rightmost => (0..n - 1).rev().find_map(&mut scan),
    }
}

fn irreducible_to_monomial(v: &Variant, w: &[WeylLetter]) -> WeylMonomial {
    let mut slots = vec![Slot::default(); v.weyl_len() as usize];
    for l in w {
        let s = &mut slots[(l.index() - 1) as usize];
        match l {
            WeylLetter::X(_) => s.x += 1,
            WeylLetter::D(_) => s.d += 1,
            WeylLetter::M(_) => s.m += 1,
            WeylLetter::MInv(_) => s.m -= 1,
        }
    }
    WeylMonomial::new(slots).expect("irreducible word has no x d pair")
}

/// Canonical form computed by repeated contraction of adjacent pairs.
pub fn reduce_with(v: Variant, expr: &FreeExpr, strategy: Strategy) -> Result<WeylElement> {
    for l in expr.letters() {
        l.validate(&v)?;
    }
    let mut pending: BTreeMap<Vec<WeylLetter>, QScalar> = expr.expand();
    let mut out = WeylElement::zero(v);
    while let Some((w, c)) = pending.pop_first() {
        match find_redex(&v, &w, strategy) {
            None => {
                let t = WeylElement::term(v, irreducible_to_monomial(&v, &w), c);
                out = &out + &t;
            }
            Some((p, replacement)) => {
                for (mid, rc) in replacement {
                    let mut nw = Vec::with_capacity(w.len());
                    nw.extend_from_slice(&w[..p]);
                    nw.extend(mid);
                    nw.extend_from_slice(&w[p + 2..]);
                    let nc = &c * &rc;
                    let entry = pending.entry(nw).or_insert_with(QScalar::zero);
                    *entry += &nc;
                }
                pending.retain(|_, c| !c.is_zero());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylcore::{reduce, WeylLetter::*};

    #[test]
    fn strategies_agree_on_a_mixed_word() {
        let v = Variant::jmath(1).unwrap();
        let e = FreeExpr::word([D(2), M(1), X(2), MInv(2), X(1), D(2), X(2), D(1)]);
        let a = reduce_with(v, &e, Strategy::Leftmost).unwrap();
        let b = reduce_with(v, &e, Strategy::Rightmost).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, reduce(v, &e).unwrap());
    }

    #[test]
    fn out_of_range_letter_rejected() {
        let v = Variant::imath(1).unwrap();
        assert!(reduce_with(v, &FreeExpr::word([X(3)]), Strategy::Leftmost).is_err());
    }
}
