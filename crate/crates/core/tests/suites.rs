use dunkl_slice::io::{parse_poly, parse_root_system, serialize_poly};
use dunkl_slice::report::Status;
use dunkl_slice::suite::{run_suite, Selector, SuiteConfig};
use dunkl_slice::{ops, RootSystem};

#[test]
fn all_suites_pass_for_small_dimensions() {
    for m in 1..=4 {
        let cfg = SuiteConfig { m: Some(m), seed: 11, samples: 3, max_power: 5, ..SuiteConfig::default() };
        let r = run_suite(Selector::All, &cfg).unwrap();
        assert!(r.passed(), "m = {m}\n{r}");
        assert!(r.cases.iter().all(|c| c.status != Status::Fail || c.witness.is_some()));
    }
}

#[test]
fn fueter_suite_to_power_eight() {
    let cfg = SuiteConfig { m: Some(3), max_power: 8, ..SuiteConfig::default() };
    let r = run_suite(Selector::Fueter, &cfg).unwrap();
    assert!(r.passed(), "{r}");
    for c in r.cases.iter().filter(|c| c.status == Status::DiscrepancyRecorded) {
        assert!(c.witness.as_ref().is_some_and(|w| !w.is_zero()), "{}", c.id);
    }
}

#[test]
fn file_round_trip_through_operators() {
    let roots = parse_root_system(
        r#"{"m":2,"positive_roots":[["1","1"],["1","-1"]],"kappa":["1/3","-1/5"]}"#,
    )
    .unwrap();
    let p = parse_poly(
        r#"{"m":2,"terms":[{"exp":[1,2,0],"blade":[1,2],"coeff":"-1/2"},{"exp":[0,1,1],"blade":[2],"coeff":"3"}]}"#,
    )
    .unwrap();
    for name in ["dirac_m", "gamma_tilde_rho", "psi", "laplacian", "intertwine"] {
        let out = ops::apply_named(name, &roots, &p).unwrap();
        assert_eq!(parse_poly(&serialize_poly(&out)).unwrap(), out);
    }
    assert_eq!(
        ops::apply_named("gamma_tilde_rho", &roots, &p).unwrap(),
        ops::apply_named("gamma_tilde_psi", &roots, &p).unwrap()
    );
    assert!(ops::apply_named("fueter", &RootSystem::trivial(2), &p).is_err());
}
