//! Canonical forms in the modified q-Weyl algebra `A_q(S)`.
//!
//! Per index `i` the algebra has letters `x_i`, `d_i`, `m_i`, `m_i^-1` with
//! weight `k = kappa(i)`:
//!
//! ```text
//! d_i m_i = q^k m_i d_i        x_i m_i = q^-k m_i x_i
//! d_i x_i = (q^k m_i - q^-k m_i^-1) / (q - q^-1)
//! x_i d_i = (m_i - m_i^-1) / (q - q^-1)
//! ```
//!
//! and letters with different indices commute. Canonical monomials are
//! `prod_i x_i^a d_i^b m_i^c` with `min(a, b) = 0`, indices ascending.

mod element;
mod endo;
mod relations;
mod rewrite;

pub use element::{reduce, Slot, WeylAlgebra, WeylElement, WeylMonomial};
pub use endo::EndoSpec;
pub use relations::{defining_relations, Relation};
pub use rewrite::{reduce_with, Strategy};

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::expr::Expr;
use crate::report::Report;
use crate::variant::Variant;

/// A generator letter of `A_q(S)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeylLetter {
    X(u32),
    D(u32),
    M(u32),
    MInv(u32),
}

pub type FreeExpr = Expr<WeylLetter>;

impl WeylLetter {
    pub fn index(self) -> u32 {
        match self {
            WeylLetter::X(i) | WeylLetter::D(i) | WeylLetter::M(i) | WeylLetter::MInv(i) => i,
        }
    }

    /// All letters of the variant, index-major.
    pub fn all(v: &Variant) -> Vec<WeylLetter> {
        (1..=v.weyl_len())
            .flat_map(|i| {
                [
                    WeylLetter::X(i),
                    WeylLetter::D(i),
                    WeylLetter::M(i),
                    WeylLetter::MInv(i),
                ]
            })
            .collect()
    }

    /// `m_i^c` as a letter power: `c` copies of `m_i` or `m_i^-1`.
    pub fn m_power(i: u32, c: i32) -> impl Iterator<Item = WeylLetter> {
        let l = if c >= 0 {
            WeylLetter::M(i)
        } else {
            WeylLetter::MInv(i)
        };
        std::iter::repeat(l).take(c.unsigned_abs() as usize)
    }

    pub fn validate(self, v: &Variant) -> Result<()> {
        v.check_weyl_index(self.index())
    }
}

impl fmt::Display for WeylLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylLetter::X(i) => write!(f, "x{i}"),
            WeylLetter::D(i) => write!(f, "d{i}"),
            WeylLetter::M(i) => write!(f, "m{i}"),
            WeylLetter::MInv(i) => write!(f, "m{i}^-1"),
        }
    }
}

/// Both sides of every defining relation reduce to the same normal form.
pub fn check_weyl_relations(v: Variant) -> Report {
    let mut report = Report::new();
    for rel in defining_relations(&v) {
        match (reduce(v, &rel.lhs), reduce(v, &rel.rhs)) {
            (Ok(a), Ok(b)) => {
                report.push_eq(rel.id, rel.description, &a, &b);
            }
            (Err(err), _) | (_, Err(err)) => report.push_error(rel.id, rel.description, err),
        }
    }
    report
}

/// Random words over the letters of `v`, reproducible from `seed`.
pub fn random_words(v: &Variant, count: usize, max_len: usize, seed: u64) -> Vec<Vec<WeylLetter>> {
    let letters = WeylLetter::all(v);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            (0..len)
                .map(|_| letters[rng.gen_range(0..letters.len())])
                .collect()
        })
        .collect()
}

/// Leftmost and rightmost rewriting agree with each other and with the
/// structured product on `count` random words. One report entry; a failure
/// shows the first disagreeing word.
pub fn check_confluence(v: Variant, count: usize, max_len: usize, seed: u64) -> Report {
    let words = random_words(&v, count, max_len, seed);
    let bad = words.par_iter().find_map_first(|w| {
        let e = FreeExpr::word(w.iter().copied());
        let l = reduce_with(v, &e, Strategy::Leftmost);
        let r = reduce_with(v, &e, Strategy::Rightmost);
        let s = reduce(v, &e);
        match (l, r, s) {
            (Ok(l), Ok(r), Ok(s)) if l == r && r == s => None,
            (Ok(l), Ok(r), Ok(_)) => Some((e, l.to_string(), r.to_string())),
            (l, r, _) => Some((e, format!("{l:?}"), format!("{r:?}"))),
        }
    });
    let mut report = Report::new();
    let id = format!("confluence/{}/r={}", v.kind().name(), v.rank());
    let description = format!("{count} random words of length <= {max_len}");
    match bad {
        None => {
            let text = format!("{count} words agree");
            report.push_eq(id, description, &text, &text);
        }
        Some((e, l, r)) => {
            report.push_eq(id, format!("{description}; first mismatch {e}"), &l, &r);
        }
    }
    report
}
