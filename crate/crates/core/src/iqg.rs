//! The ıquantum group `U(S)`: free expressions in `B_i`, `K_i^{±1}`, the
//! substitutions `tau`, `Omega`, `Psi`, and the homomorphism `phi` into
//! `A_q(S)`. Identities of `U(S)` are checked on their `phi`-images.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::coeff::{inv_q_minus_qinv, qint, QScalar};
use crate::error::{Error, Result};
use crate::expr::{Direction, Expr, Twist};
use crate::operators::{BraidKind, BraidParams, Tables};
use crate::report::Report;
use crate::variant::{cartan_of, Sign, Variant};
use crate::weylcore::{EndoSpec, WeylAlgebra, WeylElement, WeylLetter};

/// A generator letter of `U(S)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ILetter {
    B(u32),
    K(u32),
    KInv(u32),
}

pub type IExpr = Expr<ILetter>;

impl ILetter {
    pub fn index(self) -> u32 {
        match self {
            ILetter::B(i) | ILetter::K(i) | ILetter::KInv(i) => i,
        }
    }

    pub fn validate(self, v: &Variant) -> Result<()> {
        let i = self.index();
        v.check_node(i)?;
        match self {
            ILetter::B(_) => Ok(()),
            ILetter::K(_) | ILetter::KInv(_) if v.has_k(i) => Ok(()),
            _ => Err(Error::IllegalLetter(format!("K{i}"), i)),
        }
    }

    /// Every legal letter of the variant: all `B`, then `K`, then `K^-1`.
    pub fn all(v: &Variant) -> Vec<ILetter> {
        let n = v.n();
        let ks: Vec<u32> = (1..=n).filter(|&i| v.has_k(i)).collect();
        (1..=n)
            .map(ILetter::B)
            .chain(ks.iter().map(|&i| ILetter::K(i)))
            .chain(ks.iter().map(|&i| ILetter::KInv(i)))
            .collect()
    }
}

impl fmt::Display for ILetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ILetter::B(i) => write!(f, "B{i}"),
            ILetter::K(i) => write!(f, "K{i}"),
            ILetter::KInv(i) => write!(f, "K{i}^-1"),
        }
    }
}

fn b(j: u32) -> IExpr {
    IExpr::letter(ILetter::B(j))
}

/// `K_i^e`.
fn kp(i: u32, e: i64) -> IExpr {
    IExpr::letter(if e > 0 {
        ILetter::K(i)
    } else {
        ILetter::KInv(i)
    })
}

fn qc(x: &IExpr, y: &IExpr, e: i64) -> IExpr {
    IExpr::qcomm(x, y, e)
}

/// `q^k * x`.
fn qs(k: i64, x: IExpr) -> IExpr {
    x.scaled(QScalar::qpow(k))
}

/// `[x, y]_e = x y - q^e y x`.
pub fn qcomm(x: &IExpr, y: &IExpr, e: Sign) -> IExpr {
    IExpr::qcomm(x, y, e.value())
}

/// `varsigma_i = delta_{i,r} + q^-1 delta_{i,r+1}`.
pub fn varsigma(v: &Variant, i: u32) -> Result<QScalar> {
    v.check_node(i)?;
    let r = v.rank();
    Ok(if i == r {
        QScalar::one()
    } else if i == r + 1 {
        QScalar::qpow(-1)
    } else {
        QScalar::zero()
    })
}

/// A substitution of `U(S)` letters by expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ISubst {
    variant: Variant,
    images: BTreeMap<ILetter, IExpr>,
    direction: Direction,
    twist: Twist,
}

impl ISubst {
    pub fn new(variant: Variant, direction: Direction, twist: Twist) -> Self {
        ISubst {
            variant,
            images: BTreeMap::new(),
            direction,
            twist,
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    pub fn set_image(&mut self, l: ILetter, image: IExpr) -> Result<()> {
        l.validate(&self.variant)?;
        for x in image.letters() {
            x.validate(&self.variant)?;
        }
        self.images.insert(l, image);
        Ok(())
    }

    pub fn image(&self, l: ILetter) -> Result<&IExpr> {
        self.images
            .get(&l)
            .ok_or_else(|| Error::MissingImage(l.to_string()))
    }

    pub fn apply(&self, e: &IExpr) -> Result<IExpr> {
        e.substitute(
            &|l: &ILetter| self.image(*l).cloned(),
            self.direction,
            self.twist,
        )
    }
}

/// `K` images as exponent lists `[(index, ±1)]`, for lower indices only.
fn tau_k_lower(v: &Variant, i: u32, j: u32) -> Vec<(u32, i64)> {
    let r = v.rank();
    let special = if v.is_jmath() { r } else { r + 1 };
    if i == j && (!v.is_jmath() || i != r) {
        // K_{rho(i)} = K_i^-1
        vec![(i, -1)]
    } else if i.abs_diff(j) == 1 && i != special {
        vec![(i, 1), (j, 1)]
    } else {
        vec![(j, 1)]
    }
}

fn k_word(ks: &[(u32, i64)]) -> IExpr {
    IExpr::product(ks.iter().map(|&(k, s)| kp(k, s)).collect())
}

fn invert(ks: &[(u32, i64)]) -> Vec<(u32, i64)> {
    ks.iter().map(|&(k, s)| (k, -s)).collect()
}

/// `tau'_{i,e}` (prime) or `tau''_{i,-e}` (doubleprime) as a substitution.
pub fn tau(v: Variant, p: BraidParams) -> Result<ISubst> {
    v.check_braid_index(p.i)?;
    let (r, n, i, e) = (v.rank(), v.n(), p.i, p.e.value());
    let prime = p.kind == BraidKind::Prime;
    let rho = |k: u32| v.rho(k);
    let mut s = ISubst::new(v, Direction::Multiplicative, Twist::Identity);

    for j in 1..=n {
        if !v.has_k(j) {
            continue;
        }
        let ks = if j < rho(j) {
            tau_k_lower(&v, i, j)
        } else {
            invert(&tau_k_lower(&v, i, rho(j)))
        };
        s.set_image(ILetter::K(j), k_word(&ks))?;
        s.set_image(ILetter::KInv(j), k_word(&invert(&ks)))?;
    }

    for j in 1..=n {
        let image = if v.is_jmath() && i == r {
            jmath_end_b(r, j, e, prime)
        } else if !v.is_jmath() && i == r + 1 {
            imath_middle_b(r, j, e, prime)
        } else {
            generic_b(&v, i, j, e, prime)
        };
        s.set_image(ILetter::B(j), image)?;
    }
    Ok(s)
}

fn generic_b(v: &Variant, i: u32, j: u32, e: i64, prime: bool) -> IExpr {
    let r = v.rank();
    let ri = v.rho(i);
    let adj = cartan_of(i, j) == -1;
    let adj_rho = cartan_of(ri, j) == -1;
    if j == i {
        return if prime {
            b(ri).times(&kp(ri, e)).neg()
        } else {
            kp(i, e).times(&b(ri)).neg()
        };
    }
    if j == ri {
        return if prime {
            kp(i, e).times(&b(i)).neg()
        } else {
            b(i).times(&kp(ri, e)).neg()
        };
    }
    match (adj, adj_rho) {
        (true, false) => {
            if prime {
                qc(&b(i), &b(j), -e)
            } else {
                qc(&b(j), &b(i), -e)
            }
        }
        (false, true) => {
            if prime {
                qc(&b(j), &b(ri), e)
            } else {
                qc(&b(ri), &b(j), e)
            }
        }
        (true, true) => {
            // only imath, i = r, j = r + 1
            let tail = b(r + 1).times(&kp(v.rho(r), e));
            let head = if prime {
                qc(&b(r), &qc(&b(r + 1), &b(r + 2), e), -e)
            } else {
                qc(&qc(&b(r), &b(r + 1), e), &b(r + 2), -e)
            };
            IExpr::sum(vec![head, tail])
        }
        (false, false) => b(j),
    }
}

fn jmath_end_b(r: u32, j: u32, e: i64, prime: bool) -> IExpr {
    let rr = r + 1; // rho(r)
    if j + 1 == r {
        if prime {
            let c = qs(-e, qc(&qc(&b(r - 1), &b(r), e), &b(r + 1), e));
            c.minus(kp(r, e).times(&b(r - 1)))
        } else {
            let c = qs(-e, qc(&b(r + 1), &qc(&b(r), &b(r - 1), e), e));
            c.minus(kp(rr, e).times(&b(r - 1)))
        }
    } else if j == r {
        let k = if prime { r } else { rr };
        kp(k, e).times(&b(r))
    } else if j == r + 1 {
        let k = if prime { rr } else { r };
        b(r + 1).times(&kp(k, e))
    } else if j == r + 2 {
        if prime {
            let c = qs(-e, qc(&qc(&b(r + 2), &b(r + 1), e), &b(r), e));
            c.minus(b(r + 2).times(&kp(rr, e)))
        } else {
            let c = qs(-e, qc(&b(r), &qc(&b(r + 1), &b(r + 2), e), e));
            c.minus(b(r + 2).times(&kp(r, e)))
        }
    } else {
        b(j)
    }
}

fn imath_middle_b(r: u32, j: u32, e: i64, prime: bool) -> IExpr {
    let s = if prime { 1 } else { -1 };
    if j == r {
        qc(&b(r + 1), &b(r), -s * e)
    } else if j == r + 2 {
        qc(&b(r + 2), &b(r + 1), s * e)
    } else {
        b(j)
    }
}

/// `Omega`: antimultiplicative, bar-twisted, `B_i -> B_rho(i)`, `K_i -> K_rho(i)`.
pub fn big_omega(v: Variant) -> ISubst {
    let mut s = ISubst::new(v, Direction::Antimultiplicative, Twist::Bar);
    for l in ILetter::all(&v) {
        let image = match l {
            ILetter::B(i) => ILetter::B(v.rho(i)),
            ILetter::K(i) => ILetter::K(v.rho(i)),
            ILetter::KInv(i) => ILetter::KInv(v.rho(i)),
        };
        s.set_image(l, IExpr::letter(image)).expect("legal letter");
    }
    s
}

/// `Psi`: antimultiplicative, `B_i -> B_i`,
/// `K_i -> q^{-delta_{i,r} delta_{r.rho(r),-1}} K_rho(i)`.
pub fn big_psi(v: Variant) -> ISubst {
    let mut s = ISubst::new(v, Direction::Antimultiplicative, Twist::Identity);
    let r = v.rank();
    let adjacent_pair = cartan_of(r, v.rho(r)) == -1;
    for l in ILetter::all(&v) {
        let image = match l {
            ILetter::B(i) => b(i),
            ILetter::K(i) => {
                let k = if i == r && adjacent_pair { -1 } else { 0 };
                qs(k, IExpr::letter(ILetter::K(v.rho(i))))
            }
            ILetter::KInv(i) => {
                let k = if i == r && adjacent_pair { 1 } else { 0 };
                qs(k, IExpr::letter(ILetter::KInv(v.rho(i))))
            }
        };
        s.set_image(l, image).expect("legal letter");
    }
    s
}

/// A map from `U(S)` letters into `A_q(S)`, extended (anti)multiplicatively.
/// Built from `phi` by composing with substitutions on the right and Weyl
/// operators on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    variant: Variant,
    images: BTreeMap<ILetter, WeylElement>,
    direction: Direction,
    twist: Twist,
}

fn weyl(v: Variant, coeff: QScalar, letters: &[WeylLetter]) -> WeylElement {
    let mut acc = WeylElement::scalar(v, coeff);
    for &l in letters {
        acc = &acc * &WeylElement::letter(v, l).expect("index in range");
    }
    acc
}

impl Realization {
    /// The homomorphism `phi`.
    pub fn phi(v: Variant) -> Self {
        use WeylLetter::{MInv, D, M, X};
        let (r, n) = (v.rank(), v.n());
        let mut images = BTreeMap::new();
        for j in 1..=n {
            let rj = v.rho(j);
            let img = if j <= r {
                weyl(v, QScalar::one(), &[X(j + 1), D(j)])
            } else if j == rj {
                weyl(v, QScalar::one(), &[X(j), D(j)])
            } else {
                weyl(v, QScalar::one(), &[X(rj), D(rj + 1)])
            };
            images.insert(ILetter::B(j), img);
        }
        let mut lower = BTreeMap::new();
        for j in 1..=r {
            let q = if v.is_jmath() && j == r { -1 } else { 0 };
            lower.insert(j, weyl(v, QScalar::qpow(q), &[M(j), MInv(j + 1)]));
        }
        for j in 1..=n {
            if !v.has_k(j) {
                continue;
            }
            let rj = v.rho(j);
            let k = if j <= r {
                lower[&j].clone()
            } else if v.is_jmath() {
                let q = if j == r + 1 { 1 } else { 0 };
                weyl(v, QScalar::qpow(q), &[MInv(rj), M(rj + 1)])
            } else {
                lower[&rj].unit_inverse().expect("unit")
            };
            let kinv = k.unit_inverse().expect("unit");
            images.insert(ILetter::K(j), k);
            images.insert(ILetter::KInv(j), kinv);
        }
        Realization {
            variant: v,
            images,
            direction: Direction::Multiplicative,
            twist: Twist::Identity,
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn images(&self) -> &BTreeMap<ILetter, WeylElement> {
        &self.images
    }

    pub fn image(&self, l: ILetter) -> Result<&WeylElement> {
        l.validate(&self.variant)?;
        self.images
            .get(&l)
            .ok_or_else(|| Error::MissingImage(l.to_string()))
    }

    pub fn realize(&self, e: &IExpr) -> Result<WeylElement> {
        e.eval(
            &WeylAlgebra(self.variant),
            &|l: &ILetter| self.image(*l).cloned(),
            self.direction,
            self.twist,
        )
    }

    /// `self ∘ s`.
    pub fn after(&self, s: &ISubst) -> Result<Self> {
        let mut images = BTreeMap::new();
        for (l, e) in &s.images {
            images.insert(*l, self.realize(e)?);
        }
        Ok(Realization {
            variant: self.variant,
            images,
            direction: self.direction.compose(s.direction),
            twist: self.twist.compose(s.twist),
        })
    }

    /// `t ∘ self`.
    pub fn then(&self, t: &EndoSpec) -> Result<Self> {
        let mut images = BTreeMap::new();
        for (l, x) in &self.images {
            images.insert(*l, t.apply(x)?);
        }
        Ok(Realization {
            variant: self.variant,
            images,
            direction: t.direction().compose(self.direction),
            twist: t.twist().compose(self.twist),
        })
    }
}

/// `phi` applied to an expression.
pub fn phi(v: Variant, e: &IExpr) -> Result<WeylElement> {
    Realization::phi(v).realize(e)
}

/// One instance `lhs = rhs` of a defining relation of `U(S)`.
#[derive(Clone, Debug)]
pub struct IRelation {
    pub id: String,
    pub description: String,
    pub lhs: IExpr,
    pub rhs: IExpr,
}

fn rel(id: String, lhs: IExpr, rhs: IExpr) -> IRelation {
    IRelation {
        description: format!("{lhs} = {rhs}"),
        id,
        lhs,
        rhs,
    }
}

/// Every instance of the defining relations of `U(S)`.
pub fn iu_relations(v: &Variant) -> Vec<IRelation> {
    let n = v.n();
    let rho = |k: u32| v.rho(k);
    let ks: Vec<u32> = (1..=n).filter(|&i| v.has_k(i)).collect();
    let mut out = Vec::new();
    for &i in &ks {
        out.push(rel(
            format!("k-rho/i={i}"),
            kp(i, 1).times(&kp(rho(i), 1)),
            IExpr::one(),
        ));
        out.push(rel(
            format!("k-inverse/i={i}"),
            kp(i, 1).times(&kp(i, -1)),
            IExpr::one(),
        ));
        out.push(rel(
            format!("k-inverse-left/i={i}"),
            kp(i, -1).times(&kp(i, 1)),
            IExpr::one(),
        ));
    }
    for &i in &ks {
        for j in 1..=n {
            let k = (cartan_of(j, rho(i)) - cartan_of(j, i)) as i64;
            out.push(rel(
                format!("k-b/i={i},j={j}"),
                kp(i, 1).times(&b(j)),
                qs(k, b(j).times(&kp(i, 1))),
            ));
        }
    }
    let inv = inv_q_minus_qinv();
    for i in 1..=n {
        for j in 1..=n {
            if cartan_of(i, j) != 0 {
                continue;
            }
            let rhs = if rho(i) == j {
                kp(i, 1).minus(kp(rho(i), 1)).scaled(inv.clone())
            } else {
                IExpr::scalar(QScalar::zero())
            };
            out.push(rel(
                format!("commutator/i={i},j={j}"),
                b(j).times(&b(i)).minus(b(i).times(&b(j))),
                rhs,
            ));
        }
    }
    let two = qint(2);
    for i in 1..=n {
        for j in 1..=n {
            if cartan_of(i, j) != -1 {
                continue;
            }
            let lhs = IExpr::sum(vec![
                IExpr::product(vec![b(i), b(i), b(j)]),
                IExpr::product(vec![b(i), b(j), b(i)]).scaled(-&two),
                IExpr::product(vec![b(j), b(i), b(i)]),
            ]);
            let mut rhs = Vec::new();
            if i == rho(i) {
                rhs.push(b(j));
            }
            if j == rho(i) {
                let si = varsigma(v, i).expect("node in range");
                let sr = varsigma(v, rho(i)).expect("node in range");
                let corr = IExpr::sum(vec![
                    kp(i, 1).scaled(&QScalar::qpow(-1) * &si),
                    kp(rho(i), 1).scaled(&QScalar::qpow(2) * &sr),
                ]);
                rhs.push(b(i).times(&corr).scaled(-&two));
            }
            out.push(rel(format!("serre/i={i},j={j}"), lhs, IExpr::sum(rhs)));
        }
    }
    out
}

fn push_result(
    report: &mut Report,
    id: String,
    description: String,
    lhs: Result<WeylElement>,
    rhs: Result<WeylElement>,
) {
    match (lhs, rhs) {
        (Ok(a), Ok(b)) => {
            report.push_eq(id, description, &a, &b);
        }
        (Err(err), _) | (_, Err(err)) => report.push_error(id, description, err),
    }
}

fn relations_through(real: &Realization, rels: &[IRelation], label: &str) -> Report {
    let mut r = Report::new();
    for x in rels {
        push_result(
            &mut r,
            format!("{label}/{}", x.id),
            format!("{label}: {}", x.description),
            real.realize(&x.lhs),
            real.realize(&x.rhs),
        );
    }
    r
}

/// Every defining relation holds under `phi` and under `phi ∘ Omega`.
pub fn check_iu_relations_via_phi(v: Variant) -> Report {
    let rels = iu_relations(&v);
    let phi = Realization::phi(v);
    let mut report = relations_through(&phi, &rels, "phi");
    match phi.after(&big_omega(v)) {
        Ok(po) => report.merge(relations_through(&po, &rels, "phi-Omega")),
        Err(err) => report.push_error("phi-Omega", "phi after Omega", err),
    }
    report
}

fn compare_realizations(
    report: &mut Report,
    prefix: &str,
    what: &str,
    a: &Result<Realization>,
    b: &Result<Realization>,
    letters: &[ILetter],
) {
    match (a, b) {
        (Ok(a), Ok(b)) => {
            for &l in letters {
                push_result(
                    report,
                    format!("{prefix}/{l}"),
                    format!("{what} ({l})"),
                    a.image(l).cloned(),
                    b.image(l).cloned(),
                );
            }
        }
        (Err(err), _) | (_, Err(err)) => {
            report.push_error(prefix.to_string(), what.to_string(), err)
        }
    }
}

/// `T_i ∘ phi = phi ∘ tau_i`, `omega ∘ phi = phi ∘ Omega`,
/// `tau_i ∘ Omega = Omega ∘ tau_i`, `tau' tau'' = id` and the type B braid
/// relations for `tau`, all on `phi`-images of every letter.
pub fn check_intertwine(t: &Tables, e: Sign) -> Report {
    let v = t.variant();
    let letters = ILetter::all(&v);
    let phi = Realization::phi(v);
    let omega_u = big_omega(v);
    let len = v.braid_len();
    let taus: BTreeMap<(u32, BraidKind), ISubst> = v
        .braid_indices()
        .flat_map(|i| BraidKind::BOTH.map(|kind| (i, kind)))
        .map(|(i, kind)| {
            (
                (i, kind),
                tau(v, BraidParams { i, e, kind }).expect("index in range"),
            )
        })
        .collect();

    let mut jobs: Vec<Box<dyn Fn() -> Report + Send + Sync + '_>> = Vec::new();

    for (&(i, kind), tau_i) in &taus {
        let (phi, letters) = (&phi, &letters);
        jobs.push(Box::new(move || {
            let mut r = Report::new();
            let lhs = t
                .braid_t(BraidParams { i, e, kind })
                .and_then(|spec| phi.then(&spec));
            let rhs = phi.after(tau_i);
            let m = kind.marks();
            compare_realizations(
                &mut r,
                &format!("T-phi/{}/i={i}", kind.name()),
                &format!("T{m}_{i} phi = phi tau{m}_{i}"),
                &lhs,
                &rhs,
                letters,
            );
            r
        }));
    }
    {
        let (phi, letters, omega_u) = (&phi, &letters, &omega_u);
        jobs.push(Box::new(move || {
            let mut r = Report::new();
            let lhs = phi.then(&t.omega());
            let rhs = phi.after(omega_u);
            compare_realizations(
                &mut r,
                "omega-phi",
                "omega phi = phi Omega",
                &lhs,
                &rhs,
                letters,
            );
            r
        }));
    }
    for (&(i, kind), tau_i) in &taus {
        let (phi, letters, omega_u) = (&phi, &letters, &omega_u);
        jobs.push(Box::new(move || {
            let mut r = Report::new();
            let lhs = phi.after(tau_i).and_then(|x| x.after(omega_u));
            let rhs = phi.after(omega_u).and_then(|x| x.after(tau_i));
            let m = kind.marks();
            compare_realizations(
                &mut r,
                &format!("tau-Omega/{}/i={i}", kind.name()),
                &format!("tau{m}_{i} Omega = Omega tau{m}_{i}"),
                &lhs,
                &rhs,
                letters,
            );
            r
        }));
    }
    for i in 1..=len {
        let (phi, letters, taus) = (&phi, &letters, &taus);
        jobs.push(Box::new(move || {
            let mut r = Report::new();
            let a = &taus[&(i, BraidKind::Prime)];
            let b = &taus[&(i, BraidKind::DoublePrime)];
            let id = Ok(phi.clone());
            let ab = phi.after(a).and_then(|x| x.after(b));
            let ba = phi.after(b).and_then(|x| x.after(a));
            compare_realizations(
                &mut r,
                &format!("tau-inverse/i={i}/prime-doubleprime"),
                &format!("phi tau'_{i} tau''_{i} = phi"),
                &ab,
                &id,
                letters,
            );
            compare_realizations(
                &mut r,
                &format!("tau-inverse/i={i}/doubleprime-prime"),
                &format!("phi tau''_{i} tau'_{i} = phi"),
                &ba,
                &id,
                letters,
            );
            r
        }));
    }
    for kind in BraidKind::BOTH {
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
        for (label, lhs, rhs) in rels {
            let (phi, letters, taus) = (&phi, &letters, &taus);
            jobs.push(Box::new(move || {
                let chain = |c: &[u32]| -> Result<Realization> {
                    let mut acc = phi.clone();
                    for &k in c {
                        acc = acc.after(&taus[&(k, kind)])?;
                    }
                    Ok(acc)
                };
                let name = |c: &[u32]| {
                    c.iter()
                        .map(|k| format!("tau_{k}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                let mut r = Report::new();
                compare_realizations(
                    &mut r,
                    &format!("tau-braid/{}/{label}", kind.name()),
                    &format!("phi {} = phi {}", name(&lhs), name(&rhs)),
                    &chain(&lhs),
                    &chain(&rhs),
                    letters,
                );
                r
            }));
        }
    }

    jobs.par_iter()
        .map(|job| job())
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// `Psi` through `phi` and `psi ∘ phi = phi ∘ Psi`. Neither identity is
/// part of the acceptance suites; the outcome is reported as is.
pub fn check_psi_informational(v: Variant) -> Report {
    let rels = iu_relations(&v);
    let letters = ILetter::all(&v);
    let phi = Realization::phi(v);
    let mut report = Report::new();
    match phi.after(&big_psi(v)) {
        Ok(pp) => {
            report.merge(relations_through(&pp, &rels, "phi-Psi"));
            let lhs = phi.then(&Tables::new(v).psi());
            compare_realizations(
                &mut report,
                "psi-phi",
                "psi phi = phi Psi",
                &lhs,
                &Ok(pp),
                &letters,
            );
        }
        Err(err) => report.push_error("phi-Psi", "phi after Psi", err),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use WeylLetter::{MInv, D, M, X};

    #[test]
    fn illegal_k_letter() {
        let v = Variant::imath(2).unwrap();
        let err = ILetter::K(3).validate(&v).unwrap_err();
        assert_eq!(err.to_string(), "K3 illegal: ρ fixes node 3");
        assert!(ILetter::K(3).validate(&Variant::jmath(2).unwrap()).is_ok());
    }

    #[test]
    fn phi_table_examples() {
        let v = Variant::jmath(2).unwrap();
        let p = Realization::phi(v);
        assert_eq!(
            p.image(ILetter::B(2)).unwrap(),
            &weyl(v, QScalar::one(), &[X(3), D(2)])
        );
        assert_eq!(
            p.image(ILetter::K(2)).unwrap(),
            &weyl(v, QScalar::qpow(-1), &[M(2), MInv(3)])
        );
        assert_eq!(
            p.image(ILetter::K(3)).unwrap(),
            &weyl(v, QScalar::qpow(1), &[MInv(2), M(3)])
        );
        let w = Variant::imath(2).unwrap();
        assert_eq!(
            Realization::phi(w).image(ILetter::B(3)).unwrap(),
            &weyl(w, QScalar::one(), &[X(3), D(3)])
        );
    }

    #[test]
    fn varsigma_values() {
        let v = Variant::jmath(3).unwrap();
        assert_eq!(varsigma(&v, 3).unwrap(), QScalar::one());
        assert_eq!(varsigma(&v, 4).unwrap(), QScalar::qpow(-1));
        assert_eq!(varsigma(&v, 1).unwrap(), QScalar::zero());
    }

    #[test]
    fn omega_image_of_b1() {
        let v = Variant::jmath(2).unwrap();
        assert_eq!(big_omega(v).image(ILetter::B(1)).unwrap(), &b(4));
    }
}
