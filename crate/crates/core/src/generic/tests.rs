use super::*;
use crate::catalog::struct_hopf;
use crate::findim::{function_algebra, group_algebra};
use crate::comod::FreeExtension;

fn ext(name: &str) -> GenericExtension {
    generic_extension(&struct_hopf(name).unwrap()).unwrap()
}

#[test]
fn group_algebra_tinv_is_pointwise_inverse() {
    let h = group_algebra(&FiniteGroup::cyclic(3));
    let r = TSymRing::for_hopf(&h);
    let t = t_inverse_solve(&h, &r).unwrap();
    for b in 0..3 {
        assert_eq!(t.values[b], r.t(b).unit_inverse().unwrap());
    }
    assert_eq!(r.character_shape(), (0, 3));
}

#[test]
fn taft_pieces() {
    let g = ext("taft2");
    assert!(check_tinv(&g.h, &g.ring, &g.tinv).passed());
    assert_eq!(g.hab.group.order(), 2);
    assert_eq!(g.ring.character_shape(), (2, 2));
    let rep = ah_verify(&g, 7, 3);
    assert!(rep.passed(), "{rep}");
}

#[test]
fn u4_extension() {
    let g = ext("u4");
    assert_eq!(g.hab.group.order(), 2);
    let rep = ah_verify(&g, 11, 3);
    assert!(rep.passed(), "{rep}");
}

#[test]
fn odd_root_is_trivially_graded() {
    let h = struct_hopf("u3").unwrap();
    let ab = hab(&h).unwrap();
    assert_eq!(ab.group.order(), 1);
    let g = gamma_grading(&h, &ab).unwrap();
    assert!(g.is_trivial());
    assert_eq!(TSymRing::for_hopf(&h).character_shape(), (24, 3));
}

#[test]
fn noncommutative_dual_is_not_a_group_algebra() {
    let h = function_algebra(&FiniteGroup::sym(3));
    assert!(matches!(hab(&h), Err(Error::NotGroupAlgebra(_))));
    let h = group_algebra(&FiniteGroup::sym(3));
    assert_eq!(hab(&h).unwrap().group.order(), 2);
}

#[test]
fn presented_abelianization_of_uq() {
    let h = crate::catalog::hopf("Uq").unwrap();
    let ab = hab_presented(&h).unwrap();
    assert_eq!(ab.group.order(), 2);
    let rep = check_hab_candidate(&h, &ab.group, &ab.image);
    assert!(rep.passed(), "{rep}");
    let k = ab.image[2].unwrap();
    let wrong = vec![None, None, Some(ab.group.identity()), Some(k)];
    assert!(!check_hab_candidate(&h, &ab.group, &wrong).passed());
}

#[test]
fn pbw_degrees() {
    for i in 0..=3 {
        for j in 0..=3 {
            for l in -3..=3i32 {
                let (g, d) = uq_pbw_degree(i, j, l).unwrap();
                assert_eq!(d == g.identity(), (i as i32 + l) % 2 == 0, "E^{i} F^{j} K^{l}");
            }
        }
    }
}

#[test]
fn relations_at_formal_q() {
    let out = verify_thm812().unwrap();
    assert!(out.report.passed(), "{}", out.report);
    assert!(out.residuals.iter().all(|(_, r)| r == "0"));
}

#[test]
fn power_relations() {
    for d in [3, 4] {
        let out = verify_thm813(d).unwrap();
        assert!(out.report.passed(), "{}", out.report);
    }
}

#[test]
fn scalar_inside_power_must_be_x_one() {
    let h = crate::catalog::hopf("u3").unwrap();
    let syms = uq_symbols();
    let s2 = syms.clone();
    let k = h.alphabet().word(&["K"]).unwrap();
    let kk = h.alphabet().word(&["K", "K"]).unwrap();
    let words = [crate::ncalg::Word::new(), h.alphabet().word(&["E"]).unwrap(), h.alphabet().word(&["F"]).unwrap(), k, kk];
    let resolve = move |w: &crate::ncalg::Word| words.iter().position(|x| x == w).map(|i| TPoly::sym(&s2, i as u16));
    let names = ["t_1", "t_E", "t_F", "t_K", "t_Kinv"];
    let scalars: Vec<(&str, TPoly)> = names.iter().enumerate().map(|(i, n)| (*n, TPoly::sym(&syms, i as u16))).collect();
    let cx = XContext::new(h, syms.clone(), &scalars, &resolve).unwrap();
    assert!(cx.eval_x("(F - t_F/t_1*I)^3").unwrap().is_zero());
    assert!(!cx.eval_x("(F - t_F/t_1)^3").unwrap().is_zero());
}

fn swapped_legs(g: &GenericExtension) -> FreeExtension<TPoly> {
    g.with_swapped_sigma_legs()
}

#[test]
fn sigma_leg_order_matters() {
    for name in ["taft2", "u4"] {
        let g = ext(name);
        let swapped = swapped_legs(&g);
        assert!(associativity_witness(&g.ext).unwrap().is_none());
        assert!(associativity_witness(&swapped).unwrap().is_some(), "{name}");
        assert!(!swapped.check().passed());
    }
}

#[test]
fn fast_and_direct_associativity_agree() {
    let g = ext("taft3");
    assert_eq!(associativity_witness(&g.ext).unwrap().is_none(), g.ext.check().passed());
    let mut broken = g.ext.clone();
    let (x, y) = (1, 4);
    broken.mult[x][y] = broken.mult[x][y].iter().map(|(k, c)| (*k, c.scale(&Coef::int(2)))).collect();
    let w = associativity_witness(&broken).unwrap();
    assert!(w.is_some());
    let direct = broken.check();
    assert!(direct.failures().any(|f| f.name == "associativity"));
}

#[test]
fn formal_q_is_outside_the_fast_kernel() {
    let h = group_algebra(&FiniteGroup::cyclic(2));
    let mut e = FreeExtension::trivial(&h);
    e.mult[1][1] = vec![(0, TPoly::constant(Coef::q_formal()))];
    assert!(associativity_witness(&e).is_err());
}

#[test]
fn random_characters_are_seeded() {
    let g = ext("taft2");
    assert_eq!(g.ring.random_character(5), g.ring.random_character(5));
    let chi = g.ring.random_character(9);
    for b in 0..g.ring.len() {
        if g.ring.is_invertible(b) {
            assert!(!chi[b].as_ref().unwrap().is_zero());
        }
    }
}

#[test]
fn fibers_of_trivial_cocycle_are_h() {
    let g = ext("taft3");
    assert!(g.counit_fiber_is_h().unwrap());
}

fn sym(g: &GenericExtension, label: &str) -> TPoly {
    g.ring.t(g.ring.labels.iter().position(|l| l == label).unwrap())
}

fn inv(p: &TPoly) -> TPoly {
    p.unit_inverse().unwrap()
}

#[test]
fn taft_tinv_closed_form() {
    let g = ext("taft2");
    let (t1, tg, tx) = (sym(&g, "1"), sym(&g, "g"), sym(&g, "x"));
    assert_eq!(g.tinv.values[2], tx.times(&inv(&t1)).times(&inv(&tg)).negated());
}

#[test]
fn sigma_on_grouplikes() {
    let h = group_algebra(&FiniteGroup::product(&[2, 3]));
    let g = generic_extension(&h).unwrap();
    let grp = FiniteGroup::product(&[2, 3]);
    for a in 0..6 {
        for b in 0..6 {
            let want = g.ring.t(a).times(&g.ring.t(b)).times(&inv(&g.ring.t(grp.mul(a, b))));
            assert_eq!(g.sigma[a][b], want);
        }
    }
}

#[test]
fn sweedler_square_of_g() {
    let g = ext("taft2");
    let (t1, tg) = (sym(&g, "1"), sym(&g, "g"));
    let want = tg.times(&tg).times(&inv(&t1));
    assert_eq!(g.sigma[1][1], want);
    assert_eq!(g.ext.mult[1][1], vec![(0, want)]);
}

#[test]
fn sigma_at_counit_character_is_eps_eps() {
    for name in ["taft2", "taft3", "u4"] {
        let g = ext(name);
        let chi = g.ring.counit_character(&g.h);
        for x in 0..g.h.dim() {
            for y in 0..g.h.dim() {
                let v = g.sigma[x][y].specialize(&chi, None).unwrap();
                assert_eq!(v, &g.h.counit[x] * &g.h.counit[y], "{name} {x} {y}");
            }
        }
    }
}

#[test]
fn sweedler_sigma_fixture() {
    let g = ext("taft2");
    let mut lines = Vec::new();
    for x in 0..4 {
        for y in 0..4 {
            lines.push(format!("sigma({}, {}) = {}", g.ring.labels[x], g.ring.labels[y], g.sigma[x][y]));
        }
    }
    let got = lines.join("\n") + "\n";
    assert_eq!(got, include_str!("fixtures/sweedler_sigma.txt"));
}

#[test]
fn uq_symbol_degrees() {
    let gr = uq_symbol_grading().unwrap();
    let k = gr.degree[3];
    assert_ne!(k, gr.group.identity());
    assert_eq!(gr.degree, vec![gr.group.identity(), k, gr.group.identity(), k, k]);
    let syms = uq_symbols();
    let u_e = TPoly::sym(&syms, 1).times(&TPoly::sym(&syms, 3).unit_inverse().unwrap());
    assert!(gr.is_degree_zero(&u_e));
    assert!(!gr.is_degree_zero(&TPoly::sym(&syms, 1)));
}

#[test]
fn substitution_generators_have_degree_zero() {
    let g = ext("u4");
    let k = g.ring.labels.iter().position(|l| l == "K").unwrap();
    let u = bh_generators(&g.ring, &g.grading, Some(k)).unwrap();
    assert!(u.iter().all(|p| g.grading.is_degree_zero(p)));
    let g3 = ext("u3");
    let u3 = bh_generators(&g3.ring, &g3.grading, None).unwrap();
    assert!(u3.iter().enumerate().all(|(b, p)| *p == g3.ring.t(b)));
}

#[test]
fn lattice_kernels() {
    for (spec, index) in [(vec![2, 2], 4), (vec![6], 6), (vec![2, 4], 8)] {
        let h = group_algebra(&FiniteGroup::product(&spec));
        let g = generic_extension(&h).unwrap();
        let y = lattice_kernel(&g.grading).unwrap();
        assert_eq!(y.index, index);
    }
    let y = lattice_kernel(&ext("u3").grading).unwrap();
    assert_eq!(y.index, 1);
}

#[test]
fn solver_reports_singular_systems() {
    let mut h = group_algebra(&FiniteGroup::cyclic(2));
    h.delta[1] = vec![];
    h.counit[1] = Coef::zero();
    let r = TSymRing::for_hopf(&h);
    assert!(matches!(t_inverse_solve(&h, &r), Err(Error::SingularSystem(_))));
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(16))]

    #[test]
    fn seeded_fibers_are_galois(seed in 0u64..1000) {
        for name in ["taft2", "u4"] {
            let g = ext(name);
            let f = g.fiber(&g.ring.random_character(seed)).unwrap();
            proptest::prop_assert!(f.check().passed());
            proptest::prop_assert!(crate::comod::galois_beta(&f, None).bijective);
        }
    }

    #[test]
    fn kernel_membership_is_degree_zero(v in proptest::collection::vec(-3i64..4, 4)) {
        let h = group_algebra(&FiniteGroup::product(&[2, 2]));
        let g = generic_extension(&h).unwrap();
        let y = lattice_kernel(&g.grading).unwrap();
        let m: Mono = v.iter().enumerate().filter(|(_, e)| **e != 0).map(|(s, e)| (s as u16, *e as i16)).collect();
        let p = TPoly::monomial(&g.ring.syms, m, Coef::one()).unwrap();
        proptest::prop_assert_eq!(y.contains(&v), g.grading.is_degree_zero(&p));
    }
}
