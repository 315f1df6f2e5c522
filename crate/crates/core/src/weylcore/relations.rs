use crate::coeff::{inv_q_minus_qinv, QScalar};
use crate::variant::Variant;

use super::{FreeExpr, WeylLetter};

/// One instance `lhs = rhs` of a defining relation.
#[derive(Clone, Debug)]
pub struct Relation {
    pub id: String,
    pub description: String,
    pub lhs: FreeExpr,
    pub rhs: FreeExpr,
}

impl Relation {
    fn new(id: String, lhs: FreeExpr, rhs: FreeExpr) -> Self {
        let description = format!("{lhs} = {rhs}");
        Relation {
            id,
            description,
            lhs,
            rhs,
        }
    }
}

fn w(ls: &[WeylLetter]) -> FreeExpr {
    FreeExpr::word(ls.iter().copied())
}

/// `(q^s m_i - q^-s m_i^-1) / (q - q^-1)` as a free expression.
fn bracket(i: u32, s: i64) -> FreeExpr {
    let inv = inv_q_minus_qinv();
    FreeExpr::sum(vec![
        w(&[WeylLetter::M(i)]).scaled(&QScalar::qpow(s) * &inv),
        w(&[WeylLetter::MInv(i)]).scaled(-(&QScalar::qpow(-s) * &inv)),
    ])
}

/// Every instance of the defining relations of `A_q(S)` over all index
/// pairs, in a fixed order. Ids have the form `<family>/i=..,j=..`.
pub fn defining_relations(v: &Variant) -> Vec<Relation> {
    use WeylLetter::*;
    let len = v.weyl_len();
    let mut out = Vec::new();
    for i in 1..=len {
        out.push(Relation::new(
            format!("m-inverse/i={i}"),
            w(&[M(i), MInv(i)]),
            FreeExpr::one(),
        ));
        out.push(Relation::new(
            format!("m-inverse-left/i={i}"),
            w(&[MInv(i), M(i)]),
            FreeExpr::one(),
        ));
    }
    for i in 1..=len {
        for j in i + 1..=len {
            out.push(Relation::new(
                format!("mm/i={i},j={j}"),
                w(&[M(i), M(j)]),
                w(&[M(j), M(i)]),
            ));
        }
    }
    for i in 1..=len {
        for j in 1..=len {
            if i == j {
                continue;
            }
            let ij = format!("i={i},j={j}");
            out.push(Relation::new(
                format!("dm/{ij}"),
                w(&[D(i), M(j)]),
                w(&[M(j), D(i)]),
            ));
            out.push(Relation::new(
                format!("xm/{ij}"),
                w(&[X(i), M(j)]),
                w(&[M(j), X(i)]),
            ));
            out.push(Relation::new(
                format!("dx/{ij}"),
                w(&[D(i), X(j)]),
                w(&[X(j), D(i)]),
            ));
        }
    }
    for i in 1..=len {
        for j in i + 1..=len {
            let ij = format!("i={i},j={j}");
            out.push(Relation::new(
                format!("dd/{ij}"),
                w(&[D(i), D(j)]),
                w(&[D(j), D(i)]),
            ));
            out.push(Relation::new(
                format!("xx/{ij}"),
                w(&[X(i), X(j)]),
                w(&[X(j), X(i)]),
            ));
        }
    }
    for i in 1..=len {
        let k = v.kappa_of(i) as i64;
        out.push(Relation::new(
            format!("dm/i={i},j={i}"),
            w(&[D(i), M(i)]),
            w(&[M(i), D(i)]).scaled(QScalar::qpow(k)),
        ));
        out.push(Relation::new(
            format!("xm/i={i},j={i}"),
            w(&[X(i), M(i)]),
            w(&[M(i), X(i)]).scaled(QScalar::qpow(-k)),
        ));
        out.push(Relation::new(
            format!("dx/i={i},j={i}"),
            w(&[D(i), X(i)]),
            bracket(i, k),
        ));
        out.push(Relation::new(
            format!("xd/i={i}"),
            w(&[X(i), D(i)]),
            bracket(i, 0),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_count() {
        // r+1 = 3 indices: 6 inverse, 3 mm, 18 mixed, 6 dd/xx, 12 same-index
        let v = Variant::jmath(2).unwrap();
        assert_eq!(defining_relations(&v).len(), 6 + 3 + 18 + 6 + 12);
    }
}
