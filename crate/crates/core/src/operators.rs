//! The braid operators `T'_{i,e}`, `T''_{i,-e}` and the anti-automorphisms
//! `omega`, `psi` on `A_q(S)`, with the suites that check them.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::QScalar;
use crate::error::Result;
use crate::expr::{Direction, Twist};
use crate::report::Report;
use crate::variant::{cartan_of, Sign, Variant};
use crate::weylcore::{defining_relations, EndoSpec, WeylElement, WeylLetter};

/// `T'` or `T''`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BraidKind {
    Prime,
    #[serde(rename = "doubleprime")]
    DoublePrime,
}

impl BraidKind {
    pub const BOTH: [BraidKind; 2] = [BraidKind::Prime, BraidKind::DoublePrime];

    pub fn other(self) -> BraidKind {
        match self {
            BraidKind::Prime => BraidKind::DoublePrime,
            BraidKind::DoublePrime => BraidKind::Prime,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BraidKind::Prime => "prime",
            BraidKind::DoublePrime => "doubleprime",
        }
    }

    /// `'` or `''`, used in check ids.
    pub fn marks(self) -> &'static str {
        match self {
            BraidKind::Prime => "'",
            BraidKind::DoublePrime => "''",
        }
    }
}

impl std::str::FromStr for BraidKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "prime" | "'" => Ok(BraidKind::Prime),
            "doubleprime" | "''" => Ok(BraidKind::DoublePrime),
            other => Err(format!(
                "unknown kind '{other}' (expected prime or doubleprime)"
            )),
        }
    }
}

/// `T'_{i,e}` (kind prime) or `T''_{i,-e}` (kind doubleprime). The two
/// operators with the same `i` and `e` are mutually inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidParams {
    pub i: u32,
    pub e: Sign,
    pub kind: BraidKind,
}

impl BraidParams {
    pub fn new(v: &Variant, i: u32, e: Sign, kind: BraidKind) -> Result<Self> {
        v.check_braid_index(i)?;
        Ok(BraidParams { i, e, kind })
    }

    pub fn inverse(self) -> Self {
        BraidParams {
            kind: self.kind.other(),
            ..self
        }
    }
}

impl fmt::Display for BraidParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = match self.kind {
            BraidKind::Prime => self.e,
            BraidKind::DoublePrime => self.e.flip(),
        };
        write!(f, "T{}_{{{},{}}}", self.kind.marks(), self.i, e)
    }
}

/// Deliberate table corruption, used to confirm that the suites detect a
/// wrong entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fault {
    /// Negate the image `T'_{i,e}(d_{i+1})` for every `i`.
    FlipPrimeNextD,
}

/// Operator tables for a variant, optionally with an injected fault.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Tables {
    variant: Variant,
    fault: Option<Fault>,
}

/// `sign * q^qexp * prod m_k^p * tail`, multiplied in written order.
fn img(v: Variant, sign: i64, qexp: i64, ms: &[(u32, i64)], tail: WeylLetter) -> WeylElement {
    let mut acc = WeylElement::scalar(v, QScalar::monomial(sign, qexp));
    for &(k, p) in ms {
        let m = WeylElement::letter(v, WeylLetter::M(k)).expect("index in range");
        let m = if p < 0 {
            m.unit_inverse().expect("m is a unit")
        } else {
            m
        };
        acc = &acc * &m.pow(p.unsigned_abs() as u32);
    }
    &acc * &WeylElement::letter(v, tail).expect("index in range")
}

fn m_letter(v: Variant, k: u32) -> WeylElement {
    WeylElement::letter(v, WeylLetter::M(k)).expect("index in range")
}

/// Exponent of `q` in `psi(m_i)` in its Kronecker-delta form; must agree with `-kappa(i)`.
fn psi_m_exponent_delta(v: &Variant, i: u32) -> i64 {
    let rho = v.rho(i);
    let delta_fixed = (i == rho) as i32;
    if i == v.rank() + 1 {
        (cartan_of(i, rho) - 2 * delta_fixed) as i64 - 1
    } else {
        -1
    }
}

/// The generators `x_i`, `d_i`, `m_i` of `A_q(S)`, index-major.
pub fn generators(v: &Variant) -> Vec<WeylLetter> {
    (1..=v.weyl_len())
        .flat_map(|i| [WeylLetter::X(i), WeylLetter::D(i), WeylLetter::M(i)])
        .collect()
}

impl Tables {
    pub fn new(variant: Variant) -> Self {
        Tables {
            variant,
            fault: None,
        }
    }

    pub fn with_fault(variant: Variant, fault: Fault) -> Self {
        Tables {
            variant,
            fault: Some(fault),
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn fault(&self) -> Option<Fault> {
        self.fault
    }

    /// The operator `T'_{i,e}` or `T''_{i,-e}` as a multiplicative spec.
    pub fn braid_t(&self, p: BraidParams) -> Result<EndoSpec> {
        use WeylLetter::{D, X};
        let v = self.variant;
        v.check_braid_index(p.i)?;
        let r = v.rank();
        let i = p.i;
        let e = p.e.value();
        let prime = p.kind == BraidKind::Prime;
        let mut spec = EndoSpec::identity(v);
        let set = |spec: &mut EndoSpec, l: WeylLetter, image: WeylElement| spec.set_image(l, image);

        if v.is_jmath() && i == r {
            let (s, t) = (r, r + 1);
            if prime {
                set(&mut spec, D(t), img(v, 1, e, &[(s, -2 * e)], D(t)))?;
                set(
                    &mut spec,
                    D(s),
                    img(v, 1, -2 * e, &[(s, -e), (t, -e)], D(s)),
                )?;
                set(&mut spec, X(t), img(v, 1, -e, &[(s, 2 * e)], X(t)))?;
                set(&mut spec, X(s), img(v, 1, e, &[(s, e), (t, e)], X(s)))?;
            } else {
                set(&mut spec, D(t), img(v, 1, -e, &[(s, 2 * e)], D(t)))?;
                set(&mut spec, D(s), img(v, 1, 2 * e, &[(s, e), (t, e)], D(s)))?;
                set(&mut spec, X(t), img(v, 1, e, &[(s, -2 * e)], X(t)))?;
                set(&mut spec, X(s), img(v, 1, -e, &[(s, -e), (t, -e)], X(s)))?;
            }
        } else if !v.is_jmath() && i == r + 1 {
            if prime {
                set(&mut spec, D(i), img(v, 1, 0, &[(i, -e)], D(i)))?;
                set(&mut spec, X(i), img(v, 1, -e, &[(i, e)], X(i)))?;
            } else {
                set(&mut spec, D(i), img(v, 1, 0, &[(i, e)], D(i)))?;
                set(&mut spec, X(i), img(v, 1, e, &[(i, -e)], X(i)))?;
            }
        } else {
            let j = i + 1;
            if prime {
                set(&mut spec, D(j), img(v, -1, -e, &[(j, -e)], D(i)))?;
                set(&mut spec, D(i), img(v, 1, 0, &[(i, -e)], D(j)))?;
                set(&mut spec, X(j), img(v, -1, e, &[(j, e)], X(i)))?;
                set(&mut spec, X(i), img(v, 1, 0, &[(i, e)], X(j)))?;
            } else {
                set(&mut spec, D(j), img(v, 1, 0, &[(j, e)], D(i)))?;
                set(&mut spec, D(i), img(v, -1, e, &[(i, e)], D(j)))?;
                set(&mut spec, X(j), img(v, 1, 0, &[(j, -e)], X(i)))?;
                set(&mut spec, X(i), img(v, -1, -e, &[(i, -e)], X(j)))?;
            }
            spec.set_m_image(i, m_letter(v, j))?;
            spec.set_m_image(j, m_letter(v, i))?;
        }

        if prime && self.fault == Some(Fault::FlipPrimeNextD) {
            let target = if !v.is_jmath() && i == r + 1 {
                D(i)
            } else {
                D(i + 1)
            };
            let flipped = -spec.image(target)?;
            spec.set_image(target, flipped)?;
        }
        Ok(spec)
    }

    /// `omega`: antimultiplicative, bar-twisted, `x <-> d`, `m -> m^-1`.
    pub fn omega(&self) -> EndoSpec {
        let v = self.variant;
        let mut s = EndoSpec::new(v, Direction::Antimultiplicative, Twist::Bar);
        for i in 1..=v.weyl_len() {
            let l = |l| WeylElement::letter(v, l).expect("index in range");
            s.set_image(WeylLetter::X(i), l(WeylLetter::D(i))).unwrap();
            s.set_image(WeylLetter::D(i), l(WeylLetter::X(i))).unwrap();
            s.set_m_image(i, l(WeylLetter::MInv(i))).unwrap();
        }
        s
    }

    /// `psi`: antimultiplicative, signs on `x`, `d` and
    /// `m_i -> q^{-kappa(i)} m_i^-1`.
    pub fn psi(&self) -> EndoSpec {
        let v = self.variant;
        let mut s = EndoSpec::new(v, Direction::Antimultiplicative, Twist::Identity);
        for i in 1..=v.weyl_len() {
            let kappa = v.kappa_of(i) as i64;
            assert_eq!(psi_m_exponent_delta(&v, i), -kappa);
            let sign = |p: u32| if p % 2 == 0 { 1 } else { -1 };
            let l = |l| WeylElement::letter(v, l).expect("index in range");
            s.set_image(
                WeylLetter::X(i),
                l(WeylLetter::X(i)).scale(&QScalar::from_int(sign(i + 1))),
            )
            .unwrap();
            s.set_image(
                WeylLetter::D(i),
                l(WeylLetter::D(i)).scale(&QScalar::from_int(sign(i))),
            )
            .unwrap();
            s.set_m_image(i, l(WeylLetter::MInv(i)).scale(&QScalar::qpow(-kappa)))
                .unwrap();
        }
        s
    }

    /// All operators `T_i` of one kind and sign, indexed by `i - 1`.
    pub fn braid_family(&self, e: Sign, kind: BraidKind) -> Vec<EndoSpec> {
        self.variant
            .braid_indices()
            .map(|i| {
                self.braid_t(BraidParams { i, e, kind })
                    .expect("index in range")
            })
            .collect()
    }
}

pub fn braid_t(v: Variant, p: BraidParams) -> Result<EndoSpec> {
    Tables::new(v).braid_t(p)
}

pub fn omega_spec(v: Variant) -> EndoSpec {
    Tables::new(v).omega()
}

pub fn psi_spec(v: Variant) -> EndoSpec {
    Tables::new(v).psi()
}

/// Apply `ops[0] ∘ ops[1] ∘ ...` to `x` (the last operator acts first).
pub fn apply_chain(ops: &[&EndoSpec], x: &WeylElement) -> Result<WeylElement> {
    let mut acc = x.clone();
    for op in ops.iter().rev() {
        acc = op.apply(&acc)?;
    }
    Ok(acc)
}

fn gen_elem(v: Variant, l: WeylLetter) -> WeylElement {
    WeylElement::letter(v, l).expect("generator in range")
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

/// Every defining relation instance is mapped to an equality by `spec`.
pub fn check_well_defined(spec: &EndoSpec) -> Report {
    let v = spec.variant();
    let mut report = Report::new();
    for rel in defining_relations(&v) {
        push_result(
            &mut report,
            rel.id.clone(),
            rel.description.clone(),
            spec.apply_expr(&rel.lhs),
            spec.apply_expr(&rel.rhs),
        );
    }
    report
}

/// Well-definedness of every `T`, plus `omega` and `psi`.
pub fn check_endo_suite(t: &Tables, e: Sign) -> Report {
    let v = t.variant();
    let mut jobs: Vec<(String, EndoSpec)> = Vec::new();
    for i in v.braid_indices() {
        for kind in BraidKind::BOTH {
            let spec = t
                .braid_t(BraidParams { i, e, kind })
                .expect("index in range");
            jobs.push((format!("T{}_{i}", kind.marks()), spec));
        }
    }
    jobs.push(("omega".into(), t.omega()));
    jobs.push(("psi".into(), t.psi()));
    jobs.par_iter()
        .map(|(name, spec)| check_well_defined(spec).prefixed(name))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// `T'T'' = T''T' = id`, and the type B braid relations for each kind.
pub fn check_braid_suite(t: &Tables, e: Sign) -> Report {
    let v = t.variant();
    let len = v.braid_len();
    let gens = generators(&v);
    let prime = t.braid_family(e, BraidKind::Prime);
    let dprime = t.braid_family(e, BraidKind::DoublePrime);
    let mut report = Report::new();

    let inverse: Vec<Report> = (1..=len)
        .into_par_iter()
        .map(|i| {
            let (a, b) = (&prime[(i - 1) as usize], &dprime[(i - 1) as usize]);
            let mut r = Report::new();
            for &g in &gens {
                let x = gen_elem(v, g);
                push_result(
                    &mut r,
                    format!("inverse/i={i}/T'T''({g})"),
                    format!("T'_{i} T''_{i} ({g}) = {g}"),
                    apply_chain(&[a, b], &x),
                    Ok(x.clone()),
                );
                push_result(
                    &mut r,
                    format!("inverse/i={i}/T''T'({g})"),
                    format!("T''_{i} T'_{i} ({g}) = {g}"),
                    apply_chain(&[b, a], &x),
                    Ok(x.clone()),
                );
            }
            r
        })
        .collect();
    inverse.into_iter().for_each(|r| report.merge(r));

    for (kind, fam) in [
        (BraidKind::Prime, &prime),
        (BraidKind::DoublePrime, &dprime),
    ] {
        let k = kind.name();
        let op = |i: u32| &fam[(i - 1) as usize];
        // (label, lhs chain, rhs chain)
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
            report.push_skipped(format!("{k}/three-term"), "no index with 2 <= i <= |I|-1");
            report.push_skipped(format!("{k}/commute"), "no pair with |i-j| >= 2");
        }
        if len < 2 {
            report.push_skipped(format!("{k}/four-term"), "single braid generator");
        }
        let results: Vec<Report> = rels
            .par_iter()
            .map(|(label, lhs, rhs)| {
                let lops: Vec<&EndoSpec> = lhs.iter().map(|&i| op(i)).collect();
                let rops: Vec<&EndoSpec> = rhs.iter().map(|&i| op(i)).collect();
                let name = |c: &[u32]| {
                    c.iter()
                        .map(|i| format!("T_{i}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                let mut r = Report::new();
                for &g in &gens {
                    let x = gen_elem(v, g);
                    push_result(
                        &mut r,
                        format!("{k}/{label}/{g}"),
                        format!("{} ({g}) = {} ({g})", name(lhs), name(rhs)),
                        apply_chain(&lops, &x),
                        apply_chain(&rops, &x),
                    );
                }
                r
            })
            .collect();
        results.into_iter().for_each(|r| report.merge(r));
    }
    report
}

/// `omega ∘ T_i = T_i ∘ omega` on every generator, both kinds.
pub fn check_omega_commutes(t: &Tables, e: Sign) -> Report {
    let v = t.variant();
    let omega = t.omega();
    let gens = generators(&v);
    let jobs: Vec<(u32, BraidKind)> = v
        .braid_indices()
        .flat_map(|i| BraidKind::BOTH.map(|k| (i, k)))
        .collect();
    jobs.par_iter()
        .map(|&(i, kind)| {
            let spec = t
                .braid_t(BraidParams { i, e, kind })
                .expect("index in range");
            let mut r = Report::new();
            for &g in &gens {
                let x = gen_elem(v, g);
                push_result(
                    &mut r,
                    format!("{}/i={i}/{g}", kind.name()),
                    format!(
                        "omega T{}_{i} ({g}) = T{}_{i} omega ({g})",
                        kind.marks(),
                        kind.marks()
                    ),
                    apply_chain(&[&omega, &spec], &x),
                    apply_chain(&[&spec, &omega], &x),
                );
            }
            r
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use WeylLetter::*;

    fn p(i: u32, e: Sign, kind: BraidKind) -> BraidParams {
        BraidParams { i, e, kind }
    }

    #[test]
    fn jmath_special_column() {
        let v = Variant::jmath(2).unwrap();
        let s = braid_t(v, p(2, Sign::Plus, BraidKind::Prime)).unwrap();
        // q m2^-2 d3, canonical: d3 commutes past m2
        let expected = img(v, 1, 1, &[(2, -2)], D(3));
        assert_eq!(s.image(D(3)).unwrap(), &expected);
        assert_eq!(s.image(M(2)).unwrap(), &gen_elem(v, M(2)));
    }

    #[test]
    fn generic_column_has_sign() {
        let v = Variant::jmath(3).unwrap();
        let s = braid_t(v, p(1, Sign::Minus, BraidKind::Prime)).unwrap();
        assert_eq!(s.image(D(2)).unwrap(), &img(v, -1, 1, &[(2, 1)], D(1)));
        assert_eq!(s.image(M(2)).unwrap(), &gen_elem(v, M(1)));
        assert_eq!(s.image(M(3)).unwrap(), &gen_elem(v, M(3)));
    }

    #[test]
    fn out_of_range_index() {
        let v = Variant::jmath(2).unwrap();
        assert!(braid_t(v, p(3, Sign::Plus, BraidKind::Prime)).is_err());
        assert!(braid_t(
            Variant::imath(2).unwrap(),
            p(3, Sign::Plus, BraidKind::Prime)
        )
        .is_ok());
    }

    #[test]
    fn psi_m_images() {
        let j = Variant::jmath(2).unwrap();
        let psi = psi_spec(j);
        let expected = gen_elem(j, MInv(3)).scale(&QScalar::qpow(-2));
        assert_eq!(psi.image(M(3)).unwrap(), &expected);
        let i = Variant::imath(2).unwrap();
        let expected = gen_elem(i, MInv(3)).scale(&QScalar::qpow(-1));
        assert_eq!(psi_spec(i).image(M(3)).unwrap(), &expected);
    }

    #[test]
    fn broken_spec_fails_well_definedness() {
        let v = Variant::jmath(1).unwrap();
        let mut s = EndoSpec::identity(v);
        s.set_image(D(1), gen_elem(v, X(1))).unwrap();
        let r = check_well_defined(&s);
        assert!(r.failures().any(|c| c.id == "dx/i=1,j=1"));
    }

    #[test]
    fn rank_one_jmath_skips_relations() {
        let v = Variant::jmath(1).unwrap();
        let r = check_braid_suite(&Tables::new(v), Sign::Plus);
        assert!(r.all_passed());
        assert_eq!(r.summary().skipped, 6);
    }
}
