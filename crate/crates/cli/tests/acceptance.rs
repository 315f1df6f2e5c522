//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use qweyl_core::iqg::{check_intertwine, check_iu_relations_via_phi};
use qweyl_core::operators::{check_braid_suite, check_endo_suite, check_omega_commutes};
use qweyl_core::polymod::{check_iu_module, check_module_homomorphism, check_tcal_suite};
use qweyl_core::{
    check_confluence, check_weyl_relations, phi, tau, BraidKind, BraidParams, Expr, ILetter,
    QScalar, Report, Sign, Tables, Variant, WeylElement, WeylLetter,
};

fn variants(max_rank: u32) -> Vec<Variant> {
    (1..=max_rank)
        .flat_map(|r| [Variant::jmath(r).unwrap(), Variant::imath(r).unwrap()])
        .collect()
}

fn per_e(max_rank: u32, f: impl Fn(&Tables, Sign) -> Report) -> Report {
    let mut out = Report::new();
    for v in variants(max_rank) {
        let t = Tables::new(v);
        for e in Sign::BOTH {
            out.merge(f(&t, e).prefixed(&format!("{v}/e={e}")));
        }
    }
    out
}

type Criterion = fn() -> Result<String, String>;

/// Summarize a report; `Err` carries the first failure.
fn verdict(r: &Report) -> Result<String, String> {
    let s = r.summary();
    if s.passed == 0 {
        return Err("no checks ran".into());
    }
    match r.failures().next() {
        None => Ok(format!("{} checks, {} skipped", s.passed, s.skipped)),
        Some(c) => Err(format!(
            "{} failed, first {}: {} != {}",
            s.failed, c.id, c.lhs, c.rhs
        )),
    }
}

fn only(r: Report, keep: impl Fn(&str) -> bool) -> Report {
    r.checks()
        .iter()
        .filter(|c| keep(&c.id))
        .cloned()
        .map(|c| {
            let mut one = Report::new();
            one.push(c);
            one
        })
        .collect()
}

fn weyl_relations() -> Result<String, String> {
    verdict(&variants(4).into_iter().map(check_weyl_relations).collect())
}

fn confluence() -> Result<String, String> {
    let vs = variants(3);
    let words = 10_000 / vs.len() + 1;
    let r: Report = vs
        .iter()
        .enumerate()
        .map(|(k, v)| check_confluence(*v, words, 8, 0xc0ff_ee00 + k as u64))
        .collect();
    verdict(&r).map(|s| format!("{s}, {} words", words * vs.len()))
}

fn well_defined() -> Result<String, String> {
    let mut r = per_e(4, check_endo_suite);
    r.merge(only(per_e(4, check_braid_suite), |id| {
        id.contains("/inverse/")
    }));
    verdict(&r)
}

fn braid() -> Result<String, String> {
    verdict(&only(per_e(4, check_braid_suite), |id| {
        !id.contains("/inverse/")
    }))
}

fn phi_relations() -> Result<String, String> {
    verdict(
        &variants(4)
            .into_iter()
            .map(check_iu_relations_via_phi)
            .collect(),
    )
}

/// `q^e m_r^e m_{r+1}^e x_r d_{r-1}`, assembled letter by letter.
fn worked_instance(v: Variant, e: Sign) -> WeylElement {
    let r = v.rank();
    let m = |i| {
        if e == Sign::Plus {
            WeylLetter::M(i)
        } else {
            WeylLetter::MInv(i)
        }
    };
    WeylElement::word(v, &[m(r), m(r + 1), WeylLetter::X(r), WeylLetter::D(r - 1)])
        .unwrap()
        .scale(&QScalar::qpow(e.value()))
}

fn intertwine() -> Result<String, String> {
    let r = per_e(4, check_intertwine);
    let summary = verdict(&r)?;
    let mut instances = 0;
    for v in variants(4)
        .into_iter()
        .filter(|v| v.is_jmath() && v.rank() >= 2)
    {
        for e in Sign::BOTH {
            let p = BraidParams::new(&v, v.rank(), e, BraidKind::Prime).unwrap();
            let image = tau(v, p)
                .unwrap()
                .apply(&Expr::letter(ILetter::B(v.rank() - 1)))
                .unwrap();
            let got = phi(v, &image).unwrap();
            let want = worked_instance(v, e);
            if got != want || got.to_string() != want.to_string() {
                return Err(format!("worked instance {v} e={e}: {got} != {want}"));
            }
            instances += 1;
        }
    }
    Ok(format!(
        "{summary}, worked instance at {instances} (rank, e)"
    ))
}

fn omega_commute() -> Result<String, String> {
    verdict(&per_e(4, check_omega_commutes))
}

fn module_suites() -> Result<String, String> {
    const N: u32 = 6;
    let mut r = Report::new();
    for v in variants(3) {
        r.merge(check_module_homomorphism(&v, N));
        for e in Sign::BOTH {
            r.merge(check_tcal_suite(&Tables::new(v), e, N));
            r.merge(check_iu_module(&v, e, N));
        }
    }
    verdict(&r)
}

fn cli(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_qweyl"))
        .args(args)
        .output()
        .expect("spawn qweyl");
    (out.status.code(), out.stdout)
}

fn cli_determinism() -> Result<String, String> {
    let args = [
        "verify",
        "all",
        "--variant",
        "jmath",
        "--rank",
        "3",
        "--e",
        "+1",
        "--degree",
        "4",
        "--format",
        "json",
    ];
    let (c1, a) = cli(&args);
    let (c2, b) = cli(&args);
    if a != b {
        return Err("JSON differs between runs".into());
    }
    if (c1, c2) != (Some(0), Some(0)) {
        return Err(format!("clean exit codes {c1:?}, {c2:?}"));
    }
    let mut faulty = args.to_vec();
    faulty.extend(["--inject-fault", "flip-prime-next-d"]);
    let (c3, _) = cli(&faulty);
    if c3 != Some(1) {
        return Err(format!("perturbed table exit code {c3:?}"));
    }
    Ok(format!(
        "{} identical bytes, exit 0 clean, exit 1 perturbed",
        a.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 9] = [
        ("1 weyl relations", weyl_relations),
        ("2 confluence", confluence),
        ("3 well-definedness", well_defined),
        ("4 type-B braid relations", braid),
        ("5 phi relations", phi_relations),
        ("6 intertwining", intertwine),
        ("7 omega commutation", omega_commute),
        ("8 module suites", module_suites),
        ("9 cli determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let t0 = Instant::now();
        let res = f();
        let secs = t0.elapsed().as_secs_f64();
        match res {
            Ok(s) => println!("PASS criterion {name}: {s} ({secs:.1}s)"),
            Err(s) => {
                failed += 1;
                println!("FAIL criterion {name}: {s} ({secs:.1}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
