use hopfkit::suite::{mutation, run_mutation, run_suite, QChoice, SuiteFlags, MUTATIONS, SUITES};
use hopfkit::{catalog, Error, Report, Status};

fn flags() -> SuiteFlags {
    SuiteFlags::default()
}

fn run(entry: &str, suite: &str) -> Report {
    run_suite(entry, suite, &flags()).unwrap_or_else(|e| panic!("{entry}/{suite}: {e}"))
}

fn assert_pass(entry: &str, suite: &str) {
    let r = run(entry, suite);
    assert!(r.passed(), "{r}");
    assert!(r.count(Status::Pass) > 0, "{entry}/{suite} ran no checks");
}

#[test]
fn hopf_axioms_on_every_hopf_entry() {
    for e in ["SLq2", "Cq", "Uq", "SL2", "u3", "u4", "u6", "taft2", "taft3", "CZ2", "OZ2", "CZ6", "OZ6", "CS3", "OS3"] {
        assert_pass(e, "hopf-axioms");
    }
}

#[test]
fn rewriting_and_quantum_plane() {
    for e in ["qplane", "SLq2", "Uq", "u4"] {
        assert_pass(e, "rewriting");
    }
    let r = run("qplane", "rewriting");
    assert_eq!(r.data[0].value, "1 2 3 4 5 6 7");
    assert_pass("qplane", "quantum-plane");
    assert!(run_suite("Uq", "quantum-plane", &flags()).is_err());
}

#[test]
fn representation_and_pairing() {
    assert_pass("Uq", "representation");
    let f = SuiteFlags { degree: 2, ..flags() };
    assert!(run_suite("Uq", "pairing", &f).unwrap().passed());
    let f = SuiteFlags { q: QChoice::Cyclotomic(5), ..flags() };
    assert!(run_suite("Uq", "representation", &f).unwrap().passed());
}

#[test]
fn duality_on_group_entries() {
    for e in ["CZ2", "OZ2", "CZ6", "OZ6", "CS3", "OS3", "taft2"] {
        assert_pass(e, "duality");
    }
}

#[test]
fn coinvariants_of_the_quantum_plane() {
    let f = SuiteFlags { degree: 4, ..flags() };
    for e in ["qplane", "qplane-coaction"] {
        let r = run_suite(e, "coinvariants", &f).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.data[0].value, "1");
        assert_eq!(r.checks[0].degree_bound, Some(4));
    }
    for e in ["quaternions", "M3", "CS3", "taft-object-2-1"] {
        assert_pass(e, "coinvariants");
    }
}

#[test]
fn comodule_and_grading_suites() {
    for e in ["qplane-coaction", "quaternions", "M2", "M3", "CZ6", "taft-object-3-2", "laurent3"] {
        assert_pass(e, "comodule");
    }
    for e in ["quaternions", "M2", "M3", "CZ6", "Uq", "u3", "u4", "generic-u4"] {
        assert_pass(e, "grading");
    }
    assert!(matches!(run_suite("OS3", "grading", &flags()), Err(Error::NotGroupAlgebra(_))));
}

#[test]
fn galois_suites() {
    for e in ["CZ2", "OS3", "u4", "taft3", "quaternions", "M3", "laurent3", "taft-object-2-0", "generic-taft2"] {
        assert_pass(e, "galois");
    }
    let r = run("M3", "galois");
    assert!(r.data.iter().any(|d| d.key == "module basis size" && d.value == "3"));
}

#[test]
fn generic_suites() {
    for e in ["Uq", "u3", "u4", "generic-taft2", "generic-u4"] {
        assert_pass(e, "generic");
    }
    let r = run("Uq", "generic");
    assert!(r.data.iter().filter(|d| d.key.starts_with("residual")).all(|d| d.value == "0"));
}

#[test]
fn errors() {
    assert!(matches!(run_suite("nope", "hopf-axioms", &flags()), Err(Error::UnknownEntry(_))));
    assert!(matches!(run_suite("Uq", "nope", &flags()), Err(Error::UnknownSuite(_))));
    assert!(run_suite("qplane", "hopf-axioms", &flags()).is_err());
    let f = SuiteFlags { q: QChoice::Cyclotomic(3), ..flags() };
    assert!(run_suite("CZ2", "hopf-axioms", &f).is_err());
    assert!(run_suite("SL2", "hopf-axioms", &f).is_err());
    assert!("cyclotomic:2".parse::<QChoice>().is_err());
    assert!("cyclotomic:x".parse::<QChoice>().is_err());
    assert_eq!("cyclotomic:6".parse::<QChoice>().unwrap(), QChoice::Cyclotomic(6));
    assert_eq!(QChoice::Cyclotomic(6).to_string(), "cyclotomic:6");
}

#[test]
fn every_listed_entry_resolves_for_some_suite() {
    for e in catalog::list() {
        let ok = SUITES.iter().any(|(s, _)| run_suite(&e.name, s, &SuiteFlags { degree: 2, ..flags() }).is_ok());
        assert!(ok, "{}", e.name);
    }
}

#[test]
fn mutations_fail_with_witnesses() {
    assert!(MUTATIONS.len() >= 5);
    for m in MUTATIONS {
        let r = run_mutation(m.name, &flags()).unwrap();
        assert!(!r.passed(), "{}: {r}", m.name);
        let w = r.failures().next().and_then(|c| c.witness.clone()).unwrap_or_default();
        assert!(!w.is_empty() && !w.ends_with("= 0"), "{}: {w}", m.name);
        assert!(r.to_string().contains(&w));
        assert_eq!(r.suite, m.suite);
    }
    assert!(mutation("nope").is_err());
}

#[test]
fn reports_are_deterministic() {
    let f = SuiteFlags { seed: 5, ..flags() };
    let mut a = run_suite("generic-taft2", "galois", &f).unwrap();
    let mut b = run_suite("generic-taft2", "galois", &f).unwrap();
    a.elapsed_ms = 0;
    b.elapsed_ms = 0;
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(Report::from_json(&a.to_json()).unwrap(), a);
}

#[test]
fn pairing_to_degree_four() {
    let f = SuiteFlags { degree: 4, ..flags() };
    let r = run_suite("Uq", "pairing", &f).unwrap();
    assert!(r.passed(), "{r}");
}
