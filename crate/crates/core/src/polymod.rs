//! The polynomial module `P = Q(q)[X_1, .., X_{r+1}]` of `A_q(S)` and the
//! operators `Tcal'_{i,e}`, `Tcal''_{i,-e}` on it.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use rayon::prelude::*;

use crate::coeff::{qint, QScalar};
use crate::error::{Error, Result};
use crate::expr::render_terms;
use crate::iqg::{tau, ILetter, Realization};
use crate::operators::{generators, BraidKind, BraidParams, Tables};
use crate::report::Report;
use crate::variant::{Sign, Variant};
use crate::weylcore::{random_words, reduce, FreeExpr, Slot, WeylElement, WeylLetter};

/// A polynomial as a map from exponent vectors to coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyElement {
    nvars: u32,
    terms: BTreeMap<Vec<u32>, QScalar>,
}

impl PolyElement {
    pub fn zero(nvars: u32) -> Self {
        PolyElement {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: u32) -> Self {
        Self::term(vec![0; nvars as usize], QScalar::one())
    }

    pub fn monomial(a: Vec<u32>) -> Self {
        Self::term(a, QScalar::one())
    }

    pub fn term(a: Vec<u32>, c: QScalar) -> Self {
        let mut p = Self::zero(a.len() as u32);
        p.add_term(a, c);
        p
    }

    /// `X_i` as a polynomial in `nvars` variables.
    pub fn var(nvars: u32, i: u32) -> Result<Self> {
        if !(1..=nvars).contains(&i) {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: nvars,
            });
        }
        let mut a = vec![0; nvars as usize];
        a[(i - 1) as usize] = 1;
        Ok(Self::monomial(a))
    }

    pub fn nvars(&self) -> u32 {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, QScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: Vec<u32>, c: QScalar) {
        assert_eq!(a.len(), self.nvars as usize, "exponent vector length");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(a) {
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

    pub fn scale(&self, c: &QScalar) -> Self {
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            out.add_term(a.clone(), c * x);
        }
        out
    }

    pub fn checked_mul(&self, other: &PolyElement) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::VariantMismatch(
                format!("{} variables", self.nvars),
                format!("{} variables", other.nvars),
            ));
        }
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let s = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(s, x * y);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_terms(self.terms.iter().map(|(a, c)| {
            let body = a
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(k, &p)| {
                    if p == 1 {
                        format!("X{}", k + 1)
                    } else {
                        format!("X{}^{p}", k + 1)
                    }
                })
                .collect::<Vec<_>>()
                .join(" ");
            (c, body)
        }));
        f.write_str(&s)
    }
}

impl fmt::Debug for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyElement({self})")
    }
}

impl<'a> Add<&'a PolyElement> for &'a PolyElement {
    type Output = PolyElement;
    fn add(self, rhs: &PolyElement) -> PolyElement {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }
}

impl Neg for &PolyElement {
    type Output = PolyElement;
    fn neg(self) -> PolyElement {
        self.scale(&QScalar::from_int(-1))
    }
}

impl<'a> Sub<&'a PolyElement> for &'a PolyElement {
    type Output = PolyElement;
    fn sub(self, rhs: &PolyElement) -> PolyElement {
        self + &-rhs
    }
}

fn check_nvars(v: &Variant, f: &PolyElement) -> Result<()> {
    if f.nvars != v.weyl_len() {
        return Err(Error::VariantMismatch(
            v.to_string(),
            format!("polynomial in {} variables", f.nvars),
        ));
    }
    Ok(())
}

/// Action of one canonical slot `x^x d^d m^m` at index `i` on the exponent
/// `a`; `None` when the result vanishes.
fn act_slot(kappa: i64, s: Slot, a: u32) -> Option<(u32, QScalar)> {
    let mut c = QScalar::qpow(kappa * s.m as i64 * a as i64);
    if s.d > a {
        return None;
    }
    for t in 0..s.d {
        c *= &qint(kappa * (a - t) as i64);
    }
    Some((a - s.d + s.x, c))
}

/// `u . f`.
pub fn act(v: &Variant, u: &WeylElement, f: &PolyElement) -> Result<PolyElement> {
    check_nvars(v, f)?;
    if u.variant() != *v {
        return Err(Error::VariantMismatch(
            v.to_string(),
            u.variant().to_string(),
        ));
    }
    let mut out = PolyElement::zero(f.nvars);
    for (mono, cu) in u.terms() {
        'term: for (a, cf) in &f.terms {
            let mut b = a.clone();
            let mut c = cu * cf;
            for (k, s) in mono.slots().iter().enumerate() {
                let kappa = v.kappa_of(k as u32 + 1) as i64;
                match act_slot(kappa, *s, a[k]) {
                    Some((e, x)) => {
                        b[k] = e;
                        c *= &x;
                    }
                    None => continue 'term,
                }
            }
            out.add_term(b, c);
        }
    }
    Ok(out)
}

/// Letter-by-letter action of a word, rightmost letter first.
pub fn act_word(v: &Variant, word: &[WeylLetter], f: &PolyElement) -> Result<PolyElement> {
    check_nvars(v, f)?;
    let mut cur = f.clone();
    for &l in word.iter().rev() {
        l.validate(v)?;
        let k = (l.index() - 1) as usize;
        let kappa = v.kappa_of(l.index()) as i64;
        let mut next = PolyElement::zero(f.nvars);
        for (a, c) in &cur.terms {
            let mut b = a.clone();
            let coeff = match l {
                WeylLetter::X(_) => {
                    b[k] += 1;
                    c.clone()
                }
                WeylLetter::D(_) => {
                    if a[k] == 0 {
                        continue;
                    }
                    b[k] -= 1;
                    c * &qint(kappa * a[k] as i64)
                }
                WeylLetter::M(_) => c * &QScalar::qpow(kappa * a[k] as i64),
                WeylLetter::MInv(_) => c * &QScalar::qpow(-kappa * a[k] as i64),
            };
            next.add_term(b, coeff);
        }
        cur = next;
    }
    Ok(cur)
}

/// Image of `X^a` under one `Tcal`: new exponents and coefficient.
fn tcal_monomial(v: &Variant, p: BraidParams, a: &[u32]) -> (Vec<u32>, QScalar) {
    let r = v.rank();
    let e = p.e.value();
    let flip = if p.kind == BraidKind::Prime { 1 } else { -1 };
    let i = p.i as usize;
    if v.is_jmath() && p.i == r {
        let (x, y) = (a[i - 1] as i64, a[i] as i64);
        let num = x * x + 3 * x - 2 * y + 4 * x * y;
        assert!(num % 2 == 0, "half-integer exponent");
        (a.to_vec(), QScalar::qpow(flip * e * num / 2))
    } else if !v.is_jmath() && p.i == r + 1 {
        let x = a[i - 1] as i64;
        let num = x * x - x;
        assert!(num % 2 == 0, "half-integer exponent");
        (a.to_vec(), QScalar::qpow(flip * e * num / 2))
    } else {
        let (x, y) = (a[i - 1] as i64, a[i] as i64);
        // (-q^-e)^{-y} q^{e x y} or (-q^-e)^{x} q^{-e x y}
        let (sign_exp, qexp) = match p.kind {
            BraidKind::Prime => (y, e * y + e * x * y),
            BraidKind::DoublePrime => (x, -e * x - e * x * y),
        };
        let sign = if sign_exp % 2 == 0 { 1 } else { -1 };
        let mut b = a.to_vec();
        b.swap(i - 1, i);
        (b, QScalar::monomial(sign, qexp))
    }
}

/// `Tcal'_{i,e}` or `Tcal''_{i,-e}` applied to `f`.
pub fn tcal(v: &Variant, p: BraidParams, f: &PolyElement) -> Result<PolyElement> {
    check_nvars(v, f)?;
    v.check_braid_index(p.i)?;
    let mut out = PolyElement::zero(f.nvars);
    for (a, c) in &f.terms {
        let (b, x) = tcal_monomial(v, p, a);
        out.add_term(b, c * &x);
    }
    Ok(out)
}

/// All exponent vectors of length `len` with entries `<= n`.
pub fn grid(len: u32, n: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|a| {
                (0..=n).map(move |k| {
                    let mut b = a.clone();
                    b.push(k);
                    b
                })
            })
            .collect();
    }
    out
}

/// Compare two sides at every grid point; one report entry per call. A
/// failing entry shows the first failing point.
fn grid_check<F>(report: &mut Report, id: String, description: String, points: &[Vec<u32>], f: F)
where
    F: Fn(&PolyElement) -> Result<(PolyElement, PolyElement)> + Sync,
{
    let first_bad = points.par_iter().find_map_first(|a| {
        let x = PolyElement::monomial(a.clone());
        match f(&x) {
            Ok((l, r)) if l == r => None,
            Ok((l, r)) => Some(Ok((x, l, r))),
            Err(err) => Some(Err(err)),
        }
    });
    match first_bad {
        None => {
            let text = format!("agree on {} monomials", points.len());
            report.push_eq(id, description, &text, &text);
        }
        Some(Ok((x, l, r))) => {
            report.push_eq(
                id,
                description,
                &format!("{l} at {x}"),
                &format!("{r} at {x}"),
            );
        }
        Some(Err(err)) => report.push_error(id, description, err),
    }
}

const WORD_SEED: u64 = 0x5eed_0001;

fn word_text(w: &[WeylLetter]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// The action is compatible with normal forms and with multiplication.
pub fn check_module_homomorphism(v: &Variant, n: u32) -> Report {
    let pts = grid(v.weyl_len(), n);
    let mut report = Report::new();
    let seed = WORD_SEED ^ ((v.rank() as u64) << 8) ^ v.is_jmath() as u64;
    let mut words: Vec<Vec<WeylLetter>> = vec![vec![]];
    for i in 1..=v.weyl_len() {
        words.push(vec![WeylLetter::D(i), WeylLetter::X(i)]);
        words.push(vec![WeylLetter::X(i), WeylLetter::D(i)]);
    }
    words.extend(random_words(v, 24, 6, seed));
    for (k, w) in words.iter().enumerate() {
        let reduced = match reduce(*v, &FreeExpr::word(w.iter().copied())) {
            Ok(x) => x,
            Err(err) => {
                report.push_error(format!("word/{k:02}"), word_text(w), err);
                continue;
            }
        };
        grid_check(
            &mut report,
            format!("word/{k:02}"),
            format!("normal form of {} acts as the word", word_text(w)),
            &pts,
            |f| Ok((act(v, &reduced, f)?, act_word(v, w, f)?)),
        );
    }
    for i in 1..=v.weyl_len() {
        let kappa = v.kappa_of(i) as i64;
        let dx =
            reduce(*v, &FreeExpr::word([WeylLetter::D(i), WeylLetter::X(i)])).expect("in range");
        let xd =
            reduce(*v, &FreeExpr::word([WeylLetter::X(i), WeylLetter::D(i)])).expect("in range");
        let k = (i - 1) as usize;
        grid_check(
            &mut report,
            format!("bracket/i={i}"),
            format!("d{i} x{i} acts by [k(a+1)], x{i} d{i} by [k a]"),
            &pts,
            |f| {
                let a = f.terms().keys().next().expect("monomial")[k] as i64;
                let lhs = &act(v, &dx, f)? - &act(v, &xd, f)?;
                let rhs = f.scale(&(&qint(kappa * (a + 1)) - &qint(kappa * a)));
                Ok((lhs, rhs))
            },
        );
    }
    let factors = random_words(v, 24, 4, seed.wrapping_add(1));
    for (k, pair) in factors.chunks(2).enumerate() {
        let u = reduce(*v, &FreeExpr::word(pair[0].iter().copied())).expect("in range");
        let w = reduce(*v, &FreeExpr::word(pair[1].iter().copied())).expect("in range");
        let uw = &u * &w;
        grid_check(
            &mut report,
            format!("product/{k:02}"),
            format!("({u}) ({w}) acts as the composite action"),
            &pts,
            |f| Ok((act(v, &uw, f)?, act(v, &u, &act(v, &w, f)?)?)),
        );
    }
    report
}

fn tcal_chain(v: &Variant, ps: &[BraidParams], f: &PolyElement) -> Result<PolyElement> {
    let mut cur = f.clone();
    for p in ps.iter().rev() {
        cur = tcal(v, *p, &cur)?;
    }
    Ok(cur)
}

/// `Tcal(k f) = T(k) Tcal(f)`, `Tcal' Tcal'' = id`, and the type B braid
/// relations for `Tcal`, on every grid monomial.
pub fn check_tcal_suite(t: &Tables, e: Sign, n: u32) -> Report {
    let v = t.variant();
    let pts = grid(v.weyl_len(), n);
    let len = v.braid_len();
    let mut report = Report::new();
    for i in v.braid_indices() {
        for kind in BraidKind::BOTH {
            let p = BraidParams { i, e, kind };
            let spec = match t.braid_t(p) {
                Ok(s) => s,
                Err(err) => {
                    report.push_error(format!("intertwine/{}/i={i}", kind.name()), "", err);
                    continue;
                }
            };
            for g in generators(&v)
                .into_iter()
                .chain((1..=v.weyl_len()).map(WeylLetter::MInv))
            {
                let k = WeylElement::letter(v, g).expect("in range");
                let tk = spec.apply(&k);
                let m = kind.marks();
                grid_check(
                    &mut report,
                    format!("intertwine/{}/i={i}/{g}", kind.name()),
                    format!("Tcal{m}_{i}({g} f) = T{m}_{i}({g}) Tcal{m}_{i}(f)"),
                    &pts,
                    |f| {
                        let tk = tk.clone()?;
                        Ok((
                            tcal(&v, p, &act(&v, &k, f)?)?,
                            act(&v, &tk, &tcal(&v, p, f)?)?,
                        ))
                    },
                );
            }
        }
        let a = BraidParams {
            i,
            e,
            kind: BraidKind::Prime,
        };
        let b = a.inverse();
        grid_check(
            &mut report,
            format!("inverse/i={i}/prime-doubleprime"),
            format!("Tcal'_{i} Tcal''_{i} = id"),
            &pts,
            |f| Ok((tcal_chain(&v, &[a, b], f)?, f.clone())),
        );
        grid_check(
            &mut report,
            format!("inverse/i={i}/doubleprime-prime"),
            format!("Tcal''_{i} Tcal'_{i} = id"),
            &pts,
            |f| Ok((tcal_chain(&v, &[b, a], f)?, f.clone())),
        );
    }
    for kind in BraidKind::BOTH {
        let bp = |i: u32| BraidParams { i, e, kind };
        let mut rels: Vec<(String, Vec<u32>, Vec<u32>)> = Vec::new();
        for i in 2..len {
            rels.push((
                format!("three-term/i={i}"),
                vec![i - 1, i, i - 1],
                vec![i, i - 1, i],
            ));
        }
        if len >= 2 {
            rels.push((
                format!("four-term/i={len}"),
                vec![len - 1, len, len - 1, len],
                vec![len, len - 1, len, len - 1],
            ));
        }
        for i in 1..=len {
            for j in i + 2..=len {
                rels.push((format!("commute/i={i},j={j}"), vec![i, j], vec![j, i]));
            }
        }
        if len < 3 {
            report.push_skipped(
                format!("braid/{}/three-term", kind.name()),
                "no index with 2 <= i <= |I|-1",
            );
        }
        if len < 2 {
            report.push_skipped(
                format!("braid/{}/four-term", kind.name()),
                "single braid generator",
            );
        }
        for (label, lhs, rhs) in rels {
            let l: Vec<_> = lhs.iter().map(|&i| bp(i)).collect();
            let r: Vec<_> = rhs.iter().map(|&i| bp(i)).collect();
            let name = |c: &[u32]| {
                c.iter()
                    .map(|k| format!("Tcal_{k}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            grid_check(
                &mut report,
                format!("braid/{}/{label}", kind.name()),
                format!("{} = {}", name(&lhs), name(&rhs)),
                &pts,
                |f| Ok((tcal_chain(&v, &l, f)?, tcal_chain(&v, &r, f)?)),
            );
        }
    }
    report
}

/// `Tcal_i(u f) = tau_i(u) Tcal_i(f)` for every ıquantum letter `u`, acting
/// through `phi`.
pub fn check_iu_module(v: &Variant, e: Sign, n: u32) -> Report {
    let pts = grid(v.weyl_len(), n);
    let phi = Realization::phi(*v);
    let mut report = Report::new();
    for i in v.braid_indices() {
        for kind in BraidKind::BOTH {
            let p = BraidParams { i, e, kind };
            let phi_tau = tau(*v, p).and_then(|s| phi.after(&s));
            let phi_tau = match phi_tau {
                Ok(x) => x,
                Err(err) => {
                    report.push_error(format!("{}/i={i}", kind.name()), "", err);
                    continue;
                }
            };
            for u in ILetter::all(v) {
                let (pu, ptu) = (phi.image(u).cloned(), phi_tau.image(u).cloned());
                let m = kind.marks();
                grid_check(
                    &mut report,
                    format!("{}/i={i}/{u}", kind.name()),
                    format!("Tcal{m}_{i}({u} f) = tau{m}_{i}({u}) Tcal{m}_{i}(f)"),
                    &pts,
                    |f| {
                        let (pu, ptu) = (pu.clone()?, ptu.clone()?);
                        Ok((
                            tcal(v, p, &act(v, &pu, f)?)?,
                            act(v, &ptu, &tcal(v, p, f)?)?,
                        ))
                    },
                );
            }
        }
    }
    report
}
