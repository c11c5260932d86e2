use super::*;
use crate::catalog;
use crate::ncalg::{parse_expr, ParseEnv};

fn env(h: &HopfPresentation) -> ParseEnv<Coef> {
    catalog::env_for(h.alphabet(), h.alg.q.as_ref())
}

fn p(h: &HopfPresentation, s: &str) -> NcPoly<Coef> {
    h.rs().normal_form(&parse_expr(&env(h), s).unwrap())
}

#[test]
fn slq2_coproduct_and_antipode() {
    let h = catalog::hopf("SLq2").unwrap();
    let a = p(&h, "a");
    let expect = TensorElem::pure(&[&a, &a]).plus(&TensorElem::pure(&[&p(&h, "b"), &p(&h, "c")]));
    assert_eq!(h.coproduct(&a), expect);
    assert_eq!(h.coproduct(&p(&h, "1")).to_string(), "1 (x) 1");
    assert_eq!(h.antipode(&p(&h, "b")), p(&h, "-q*b"));
    let s2 = h.antipode(&h.antipode(&p(&h, "b")));
    assert_eq!(s2, p(&h, "q^2*b"));
    assert!(h.counit(&p(&h, "ad")).is_one());
}

#[test]
fn uq_coproduct_of_e_squared() {
    let h = catalog::hopf("Uq").unwrap();
    let e2 = p(&h, "E^2");
    let lhs = h.coproduct(&e2);
    // Oracle: expand (1 (x) E + E (x) K)^2 with the leg-wise product rule.
    let one = p(&h, "1");
    let e = p(&h, "E");
    let k = p(&h, "K");
    let de = TensorElem::pure(&[&one, &e]).plus(&TensorElem::pure(&[&e, &k]));
    assert_eq!(lhs, de.mul(&de, &[h.rs(), h.rs()]));
    let expected = TensorElem::pure(&[&one, &p(&h, "E^2")])
        .plus(&TensorElem::pure(&[&e, &p(&h, "(1 + q^2)*EK")]))
        .plus(&TensorElem::pure(&[&p(&h, "E^2"), &p(&h, "K^2")]));
    assert_eq!(lhs, expected);
}

#[test]
fn convolution_examples() {
    let h = catalog::hopf("SLq2").unwrap();
    let s = LinMap::tabulate(&h, 2, |x| h.antipode(x));
    let id = LinMap::tabulate(&h, 2, |x| x.clone());
    let sid = convolve(&s, &id, &h).unwrap();
    let a = h.alphabet().word(&["a"]).unwrap();
    assert_eq!(sid.table[&a], p(&h, "1"));
    let u = catalog::hopf("Uq").unwrap();
    let s = LinMap::tabulate(&u, 1, |x| u.antipode(x));
    let id = LinMap::tabulate(&u, 1, |x| x.clone());
    let ids = convolve(&id, &s, &u).unwrap();
    let e = u.alphabet().word(&["E"]).unwrap();
    assert!(ids.table[&e].is_zero());
    // Out-of-range lookups are errors.
    let small = LinMap::tabulate(&u, 0, |x| x.clone());
    let big = LinMap::tabulate(&u, 1, |x| x.clone());
    assert!(matches!(convolve(&big, &small, &u), Err(Error::UndefinedMapValue(_))));
    // The counit map is the convolution unit.
    let unit = LinMap::tabulate(&h, 2, |x| NcPoly::constant(h.alphabet(), h.counit(x)));
    let f = LinMap::tabulate(&h, 2, |x| h.rs().mul(x, &p(&h, "b + 2*a")));
    let uf = convolve(&unit, &f, &h).unwrap();
    for (w, v) in &f.table {
        assert_eq!(&uf.table[w], v);
    }
}

#[test]
fn axioms_hold_on_catalog() {
    for name in ["SLq2", "SL2", "Cq", "Uq", "u3", "u4", "u6", "taft2", "taft3"] {
        let h = catalog::hopf(name).unwrap();
        let r = check_hopf_axioms_with(&h, 30, 4, 1);
        assert!(r.passed(), "{name}: {r}");
    }
}

#[test]
fn classical_antipode_on_slq2_fails() {
    let h = catalog::hopf("SLq2").unwrap();
    let bad = h.with_antipode("b", p(&h, "-b")).unwrap();
    let r = check_hopf_axioms(&bad);
    let f: Vec<_> = r.failures().map(|c| c.name.clone()).collect();
    assert!(f.iter().any(|n| n.contains("antipode law") && n.ends_with(" b")), "{f:?}");
}

#[test]
fn printed_f_antipode_fails() {
    let h = catalog::hopf("Uq").unwrap();
    let printed = h.with_antipode("F", p(&h, "-q^-1*FK")).unwrap();
    let (l, _) = printed.antipode_defect(&p(&h, "F"));
    assert!(!l.is_zero());
    let (l, r) = h.antipode_defect(&p(&h, "F"));
    assert!(l.is_zero() && r.is_zero());
}

#[test]
fn grouplikes_in_uq() {
    let h = catalog::hopf("Uq").unwrap();
    for k in -4i32..=4 {
        let s = format!("K^{k}");
        assert!(h.is_grouplike(&p(&h, &s)), "{s}");
    }
    for s in ["E", "F", "EK"] {
        assert!(!h.is_grouplike(&p(&h, s)));
    }
    let t = catalog::hopf("taft2").unwrap();
    assert!(!t.is_grouplike(&p(&t, "g*x")));
    assert!(t.is_grouplike(&p(&t, "g")));
}

#[test]
fn slq2_coproduct_expressions_vanish() {
    let h = catalog::hopf("SLq2").unwrap();
    let d = |s: &str| h.coproduct(&p(&h, s));
    let rs = [h.rs(), h.rs()];
    let m = |x: &str, y: &str| d(x).mul(&d(y), &rs);
    let q = h.alg.q.clone().unwrap();
    let qi = q.inv().unwrap();
    let one = TensorElem::one(&[h.alphabet().clone(), h.alphabet().clone()]);
    let exprs = [
        m("b", "a").minus(&m("a", "b").scale(&q)),
        m("c", "a").minus(&m("a", "c").scale(&q)),
        m("d", "b").minus(&m("b", "d").scale(&q)),
        m("d", "c").minus(&m("c", "d").scale(&q)),
        m("b", "c").minus(&m("c", "b")),
        m("a", "d").minus(&m("b", "c").scale(&qi)).minus(&one),
        m("a", "d").minus(&m("d", "a")).minus(&m("b", "c").scale(&(&qi - &q))),
    ];
    for e in &exprs {
        assert!(e.is_zero(), "{e}");
    }
    // With the coefficient (q - q^-1) in the last expression it does not vanish.
    let printed = m("a", "d").minus(&m("d", "a")).minus(&m("b", "c").scale(&(&q - &qi)));
    assert!(!printed.is_zero());
}

#[test]
fn antipode_square_order_at_roots_of_unity() {
    for n in [2u32, 3] {
        let mut pr = catalog::presentation("SLq2").unwrap();
        pr.ring = format!("base=cyclotomic:{}", 2 * n);
        let h = pr.hopf().unwrap();
        for g in ["a", "b", "c", "d"] {
            let x = p(&h, g);
            let mut y = x.clone();
            let mut order = 0;
            for k in 1..=2 * n {
                y = h.antipode(&h.antipode(&y));
                if y == x {
                    order = k;
                    break;
                }
            }
            let expect = if g == "a" || g == "d" { 1 } else { n };
            assert_eq!(order, expect, "S^2 on {g} at N={n}");
        }
    }
}

#[test]
fn projection_morphisms() {
    let slq = catalog::hopf("SLq2").unwrap();
    let cq = catalog::hopf("Cq").unwrap();
    let imgs: Vec<_> = ["X", "Y", "0", "Xinv"].iter().map(|s| p(&cq, s)).collect();
    let r = check_hopf_morphism(&imgs, &slq, &cq);
    assert!(r.passed(), "{r}");
    let uq = catalog::hopf("Uq").unwrap();
    for d in [3, 4] {
        let ud = catalog::hopf(&format!("u{d}")).unwrap();
        let imgs: Vec<_> = ["E", "F", "K", "Kinv"].iter().map(|s| p(&ud, s)).collect();
        let mut pr = catalog::presentation("Uq").unwrap();
        pr.ring = format!("base=cyclotomic:{d}");
        let uqd = pr.hopf().unwrap();
        let r = check_hopf_morphism(&imgs, &uqd, &ud);
        assert!(r.passed(), "{r}");
    }
    let ids: Vec<_> = ["E", "F", "K", "Kinv"].iter().map(|s| p(&uq, s)).collect();
    assert!(check_hopf_morphism(&ids, &uq, &uq).passed());
}

fn rho(h: &HopfPresentation) -> Vec<Matrix> {
    let q = h.alg.q.clone().unwrap();
    let qi = q.inv().unwrap();
    let z = Coef::zero;
    let o = Coef::one;
    vec![
        vec![vec![z(), o()], vec![z(), z()]],
        vec![vec![z(), z()], vec![o(), z()]],
        vec![vec![q.clone(), z()], vec![z(), qi.clone()]],
        vec![vec![qi, z()], vec![z(), q]],
    ]
}

#[test]
fn two_dimensional_representation() {
    let h = catalog::hopf("Uq").unwrap();
    let r = rho(&h);
    assert!(check_matrix_rep(&r, &h.alg).unwrap().passed());
    let mut swapped = r.clone();
    swapped.swap(0, 1);
    let rep = check_matrix_rep(&swapped, &h.alg).unwrap();
    assert!(rep.failures().any(|c| c.name.starts_with("relation K*E")), "{rep}");
    for name in ["SLq2", "Cq", "Uq", "u3", "taft3"] {
        let h = catalog::hopf(name).unwrap();
        let triv: Vec<Matrix> = (0..h.alphabet().len() as u8).map(|g| vec![vec![h.eps_gen(g).clone()]]).collect();
        assert!(check_matrix_rep(&triv, &h.alg).unwrap().passed(), "{name}");
    }
    assert!(check_matrix_rep(&r[..2], &h.alg).is_err());
}

#[test]
fn casimir_is_central() {
    let h = catalog::hopf("Uq").unwrap();
    let z = p(&h, "EF + (q^-1*K + q*Kinv)/(q - q^-1)^2");
    for g in ["E", "F", "K", "Kinv"] {
        let x = p(&h, g);
        let c = h.rs().mul(&z, &x).minus(&h.rs().mul(&x, &z));
        assert!(c.is_zero(), "{g}: {c}");
    }
}

#[test]
fn pairing_degree_two() {
    let h = catalog::hopf("Uq").unwrap();
    let out = dual_pairing_check(&h, &rho(&h), 2).unwrap();
    assert!(out.report.passed(), "{}", out.report);
}
