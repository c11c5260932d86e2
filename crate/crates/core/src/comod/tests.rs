use super::*;
use crate::catalog::{self, laurent_extension, matrix_algebra, quaternions, struct_hopf, truncated_polynomials, FINITE_HOPF};
use crate::findim::FiniteGroup;
use crate::hopf::TensorElem;
use crate::ncalg::NcPoly;
use crate::scalar::{Coef, TPoly};

fn poly(c: &PresentedCoaction, s: &str) -> NcPoly<Coef> {
    let env = catalog::env_for(c.a.alphabet(), c.a.q.as_ref());
    crate::ncalg::parse_expr(&env, s).unwrap()
}

#[test]
fn self_coaction_is_comodule_with_scalar_coinvariants() {
    for name in ["CS3", "OS3", "taft2", "u4"] {
        let h = struct_hopf(name).unwrap();
        let c = trivial_extension(&h);
        assert!(c.check().passed(), "{name}: {}", c.check());
        let co = c.coinvariants();
        assert_eq!(co.len(), 1, "{name}");
        assert_eq!(span_dim(&[co[0].clone(), h.alg.one()], h.dim()), 1);
    }
}

#[test]
fn quantum_plane_coaction() {
    let c = PresentedCoaction::quantum_plane().unwrap();
    let r = c.check_comodule(5, 3);
    assert!(r.passed(), "{}", r.to_string());
    assert!(r.count(crate::Status::Pass) >= 6);
    // δ(Y)δ(X) - q δ(X)δ(Y), expanded by hand
    let x = poly(&c, "X");
    let y = poly(&c, "Y");
    let dx = c.coact(&x);
    let dy = c.coact(&y);
    let q = c.a.q.clone().unwrap();
    let rs = [&c.a.rs, c.h.rs()];
    let lhs = dy.mul(&dx, &rs).minus(&dx.mul(&dy, &rs).scale(&q));
    assert!(lhs.is_zero(), "{lhs}");
}

#[test]
fn swapped_legs_break_the_coaction() {
    let bad = PresentedCoaction::parse(
        "swapped",
        catalog::algebra("qplane").unwrap(),
        catalog::hopf("SLq2").unwrap(),
        &[("X", &[("X", "a"), ("Y", "b")]), ("Y", &[("X", "c"), ("Y", "d")])],
    )
    .unwrap();
    let r = bad.check_comodule(3, 1);
    let f: Vec<_> = r.failures().collect();
    assert!(!f.is_empty());
    assert!(f.iter().any(|c| c.witness.as_deref().is_some_and(|w| !w.is_empty())));
}

#[test]
fn quantum_plane_coinvariants_are_scalars() {
    let c = PresentedCoaction::quantum_plane().unwrap();
    let co = c.coinvariants(6);
    assert_eq!(co.len(), 1);
    assert_eq!(co[0].max_len(), 0);
}

#[test]
fn coinvariants_of_quotient_coactions() {
    let sl = catalog::hopf("SLq2").unwrap();
    let cq = catalog::hopf("Cq").unwrap();
    let env = catalog::env_for(cq.alphabet(), cq.alg.q.as_ref());
    let images: Vec<_> = ["X", "Y", "0", "Xinv"].iter().map(|s| crate::ncalg::parse_expr(&env, s).unwrap()).collect();
    let co = homogeneous_coinvariants(&sl, &cq, &images, 2).unwrap();
    // left coinvariants of degree <= 2 for this projection
    assert!(!co.is_empty());
    assert!(co.iter().any(|p| p.max_len() == 0));
    let shown: Vec<String> = co.iter().map(|p| p.to_string()).collect();
    for p in &co {
        let d = homogeneous_check(&sl, &cq, &images, p);
        assert!(d, "{p} in {shown:?}");
    }

    let k = trivial_hopf(&sl);
    let one = NcPoly::<Coef>::one(k.alphabet());
    let zero = NcPoly::<Coef>::zero(k.alphabet());
    let counit = vec![one.clone(), zero.clone(), zero, one];
    let all = homogeneous_coinvariants(&sl, &k, &counit, 2).unwrap();
    assert_eq!(all.len(), sl.rs().irreducible_words(2).len());

    let sl_env = catalog::env_for(sl.alphabet(), sl.alg.q.as_ref());
    let id: Vec<_> = ["a", "b", "c", "d"].iter().map(|s| crate::ncalg::parse_expr(&sl_env, s).unwrap()).collect();
    let co = homogeneous_coinvariants(&sl, &sl, &id, 2).unwrap();
    assert_eq!(co.len(), 1);
    assert_eq!(co[0].max_len(), 0);

    let wrong: Vec<_> = ["X", "X", "0", "Xinv"].iter().map(|s| crate::ncalg::parse_expr(&env, s).unwrap()).collect();
    assert!(homogeneous_coinvariants(&sl, &cq, &wrong, 1).is_err());
}

fn homogeneous_check(h: &crate::hopf::HopfPresentation, hbar: &crate::hopf::HopfPresentation, images: &[NcPoly<Coef>], p: &NcPoly<Coef>) -> bool {
    let d = h.coproduct(p);
    let target = [hbar.alphabet().clone()];
    let projected = d
        .expand_leg(1, &target, |w| {
            let x = crate::hopf::substitute(&NcPoly::word(h.alphabet(), w), images, hbar.rs());
            Ok::<_, crate::Error>(TensorElem::pure(&[&x]))
        })
        .unwrap();
    let one = NcPoly::<Coef>::one(hbar.alphabet());
    projected.minus(&TensorElem::pure(&[&h.alg.nf(p), &one])).is_zero()
}

#[test]
fn grading_round_trips() {
    let mut cases = vec![quaternions(), matrix_algebra(2), matrix_algebra(3), truncated_polynomials(4)];
    for g in [FiniteGroup::cyclic(3), FiniteGroup::sym(3)] {
        let h = crate::findim::group_algebra(&g);
        cases.push(GradedAlgebra { alg: h.alg.clone(), group: g.clone(), degree: (0..g.order()).collect() });
    }
    for ga in cases {
        assert!(ga.check().passed(), "{}", ga.alg.name);
        let c = ga.to_coaction();
        assert!(c.check().passed(), "{}: {}", ga.alg.name, c.check());
        let gr = coaction_to_grading(&c).unwrap();
        assert!(gr.check_projectors(&c.a).passed());
        let back = gr.to_graded(&c.a).unwrap();
        assert_eq!(back.alg, ga.alg);
        assert_eq!(back.degree, ga.degree);
        assert_eq!(back.group.table(), ga.group.table());
    }
}

#[test]
fn non_group_coaction_has_no_grading() {
    let c = trivial_extension(&struct_hopf("OS3").unwrap());
    assert!(matches!(coaction_to_grading(&c), Err(Error::NotGroupAlgebra(_))));
}

#[test]
fn strong_gradings() {
    assert!(quaternions().is_strongly_graded());
    assert!(matrix_algebra(3).is_strongly_graded());
    for n in 2..5 {
        let t = truncated_polynomials(n);
        assert!(t.check().passed());
        assert!(t.strong_grading_witness().is_some());
    }
}

#[test]
fn trivial_extensions_are_galois() {
    for name in FINITE_HOPF {
        if name == "u6" {
            continue;
        }
        let h = struct_hopf(name).unwrap();
        let b = galois_beta(&trivial_extension(&h), None);
        assert!(b.bijective, "{name}: {}", b.report);
        assert!(check_beta_inverse(&h).passed(), "{name}");
    }
}

#[test]
fn strongly_graded_algebras_are_galois() {
    let q = quaternions();
    let b = galois_beta(&q.to_coaction(), None);
    assert!(b.bijective, "{}", b.report.to_string());

    let m = matrix_algebra(3);
    let mb = m.module_basis();
    assert_eq!(mb.base.len(), 3);
    assert_eq!(mb.gens.len(), 3);
    let b = galois_beta(&m.to_coaction(), Some(&mb));
    assert!(b.bijective, "{}", b.report.to_string());
    assert_eq!(b.rank, b.cols);

    let t = truncated_polynomials(3);
    let b = galois_beta(&t.to_coaction(), Some(&t.module_basis()));
    assert!(!b.bijective);
}

#[test]
fn laurent_extension_over_cubes() {
    let e = laurent_extension(3);
    assert!(e.check().passed(), "{}", e.check().to_string());
    let (b, d) = galois_beta_ring(&e);
    assert!(b.bijective, "{}", b.report.to_string());
    assert!(d.unwrap().unit_inverse().is_some());

    let fib = e.fiber_at(&[Some(Coef::one())], None).unwrap();
    assert!(fib.check().passed());
    let x = fib.a.basis(1);
    let x3 = fib.a.mul(&fib.a.mul(&x, &x), &x);
    assert_eq!(x3, fib.a.one());
    assert!(galois_beta(&fib, None).bijective);

    // at u = 0 the fiber is Q[x]/(x^3) and β degenerates
    let mut zero = e.clone();
    zero.mult[2][1] = vec![(0, <TPoly as crate::scalar::Scalar>::zero())];
    zero.mult[1][2] = vec![(0, <TPoly as crate::scalar::Scalar>::zero())];
    zero.mult[2][2] = vec![(1, <TPoly as crate::scalar::Scalar>::zero())];
    let (b, _) = galois_beta_ring(&zero);
    assert!(!b.bijective);
}

#[test]
fn invariants_of_conjugation_are_coinvariants() {
    let g = FiniteGroup::sym(3);
    let o = crate::findim::function_algebra(&g);
    let n = g.order();
    // (g . f)(x) = f(g^-1 x g)
    let rho: Vec<Vec<Elem>> = (0..n)
        .map(|s| {
            (0..n)
                .map(|x| {
                    let mut v = o.alg.zero();
                    v[g.mul(g.mul(s, x), g.inv(s))] = Coef::one();
                    v
                })
                .collect()
        })
        .collect();
    let c = action_coaction(&o.alg, &g, &rho);
    assert!(c.check().passed(), "{}", c.check().to_string());
    let inv = invariants(&o.alg, &rho);
    let co = c.coinvariants();
    assert_eq!(inv.len(), 3);
    assert_eq!(co.len(), 3);
    let mut both = inv.clone();
    both.extend(co);
    assert_eq!(span_dim(&both, n), 3);
}
