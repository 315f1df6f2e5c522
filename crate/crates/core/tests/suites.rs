use qweyl_core::iqg::{check_intertwine, check_iu_relations_via_phi, check_psi_informational};
use qweyl_core::operators::{check_braid_suite, check_endo_suite, check_omega_commutes};
use qweyl_core::{check_confluence, check_weyl_relations, Fault, Report, Sign, Tables, Variant};

fn variants(max_rank: u32) -> Vec<Variant> {
    (1..=max_rank)
        .flat_map(|r| [Variant::jmath(r).unwrap(), Variant::imath(r).unwrap()])
        .collect()
}

fn assert_clean(what: &str, v: Variant, r: &Report) {
    let fails: Vec<_> = r
        .failures()
        .take(8)
        .map(|c| format!("{}: {} != {}", c.id, c.lhs, c.rhs))
        .collect();
    assert!(
        fails.is_empty(),
        "{what} {v}: {} failures, e.g.\n{}",
        r.summary().failed,
        fails.join("\n")
    );
}

#[test]
fn operators_are_well_defined() {
    for v in variants(4) {
        for e in Sign::BOTH {
            assert_clean("endo", v, &check_endo_suite(&Tables::new(v), e));
        }
    }
}

#[test]
fn braid_relations_hold() {
    for v in variants(4) {
        for e in Sign::BOTH {
            assert_clean("braid", v, &check_braid_suite(&Tables::new(v), e));
        }
    }
}

#[test]
fn omega_commutes_with_braid_operators() {
    for v in variants(4) {
        for e in Sign::BOTH {
            assert_clean("omega", v, &check_omega_commutes(&Tables::new(v), e));
        }
    }
}

#[test]
fn phi_respects_relations() {
    for v in variants(4) {
        assert_clean("phi", v, &check_iu_relations_via_phi(v));
    }
}

#[test]
fn intertwining_holds() {
    for v in variants(4) {
        for e in Sign::BOTH {
            assert_clean("intertwine", v, &check_intertwine(&Tables::new(v), e));
        }
    }
}

#[test]
fn psi_informational_runs() {
    for v in variants(2) {
        let r = check_psi_informational(v);
        assert!(!r.is_empty());
    }
}

#[test]
fn weyl_relations_and_confluence() {
    for v in variants(4) {
        assert_clean("relations", v, &check_weyl_relations(v));
        assert_clean("confluence", v, &check_confluence(v, 300, 8, 7));
    }
}

#[test]
fn injected_fault_is_detected() {
    for v in variants(3) {
        let t = Tables::with_fault(v, Fault::FlipPrimeNextD);
        for e in Sign::BOTH {
            assert!(!check_endo_suite(&t, e).all_passed(), "endo {v}");
            assert!(!check_intertwine(&t, e).all_passed(), "intertwine {v}");
        }
    }
}

mod module {
    use super::*;
    use qweyl_core::polymod::{check_iu_module, check_module_homomorphism, check_tcal_suite};

    #[test]
    fn module_suites_small_grid() {
        for v in variants(2) {
            assert_clean("module-hom", v, &check_module_homomorphism(&v, 3));
            for e in Sign::BOTH {
                assert_clean("tcal", v, &check_tcal_suite(&Tables::new(v), e, 3));
                assert_clean("iu-module", v, &check_iu_module(&v, e, 3));
            }
        }
    }
}
