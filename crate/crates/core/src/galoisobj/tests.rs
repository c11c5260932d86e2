use super::*;
use crate::catalog;
use crate::comod::{galois_beta, GradedAlgebra};
use crate::findim::{find_basis_iso, from_presentation};

fn klein_class() -> Cocycle2 {
    // λ((a1,a2),(b1,b2)) = (-1)^{a2 b1}
    let inv = AbelianInvariants::new(&[2, 2]).unwrap();
    let g = inv.group();
    Cocycle2::from_fn(&g, |x, y| {
        let (a, b) = (inv.coords(x), inv.coords(y));
        Coef::int(if a[1] * b[0] % 2 == 1 { -1 } else { 1 })
    })
    .unwrap()
}

#[test]
fn invariant_factors() {
    assert_eq!(AbelianInvariants::new(&[6]).unwrap().factors(), &[6]);
    assert_eq!(AbelianInvariants::new(&[2, 3]).unwrap().factors(), &[6]);
    assert_eq!(AbelianInvariants::new(&[4, 6]).unwrap().factors(), &[2, 12]);
    assert_eq!(AbelianInvariants::new(&[2, 2, 3, 9]).unwrap().factors(), &[6, 18]);
    assert!(AbelianInvariants::new(&[1]).unwrap().is_trivial());
    assert!(AbelianInvariants::new(&[0]).is_err());
    for ns in [vec![6], vec![2, 2], vec![2, 4], vec![3, 3, 3], vec![2, 3, 4]] {
        let g = FiniteGroup::product(&ns);
        assert_eq!(AbelianInvariants::of_group(&g).unwrap(), AbelianInvariants::new(&ns).unwrap());
    }
    assert!(matches!(AbelianInvariants::of_group(&FiniteGroup::sym(3)), Err(Error::NotAbelian)));
}

#[test]
fn trivial_and_coboundary_tables() {
    let g = FiniteGroup::cyclic(4);
    let one = Cocycle2::trivial(&g);
    assert!(one.is_cocycle());
    assert!(one.is_coboundary().unwrap().is_some());
    let mu: Vec<Coef> = [3, -1, 2, 5].iter().map(|&k| Coef::int(k)).collect();
    let b = Cocycle2::coboundary(&g, &mu).unwrap();
    assert!(b.is_cocycle());
    let found = b.is_coboundary().unwrap().unwrap();
    assert_eq!(Cocycle2::coboundary(&g, &found).unwrap(), b);
}

#[test]
fn zero_entries_are_rejected() {
    let g = FiniteGroup::cyclic(2);
    let t = vec![vec![Coef::one(), Coef::one()], vec![Coef::one(), Coef::zero()]];
    assert!(matches!(is_cocycle(&g, &t), Err(Error::NotACocycle(_))));
}

#[test]
fn klein_four_class_is_not_a_coboundary() {
    let lam = klein_class();
    // direct check of the identity over all 64 triples
    let inv = AbelianInvariants::new(&[2, 2]).unwrap();
    for x in 0..4 {
        for y in 0..4 {
            for z in 0..4 {
                let (a, b, c) = (inv.coords(x), inv.coords(y), inv.coords(z));
                let e = |u: &[usize], v: &[usize]| u[1] * v[0];
                let s = |u: &[usize], v: &[usize]| vec![(u[0] + v[0]) % 2, (u[1] + v[1]) % 2];
                let lhs = e(&a, &b) + e(&s(&a, &b), &c);
                let rhs = e(&b, &c) + e(&a, &s(&b, &c));
                assert_eq!(lhs % 2, rhs % 2);
            }
        }
    }
    assert!(lam.is_cocycle());
    assert!(lam.is_coboundary().unwrap().is_none());
    assert!(!lam.alternation_is_trivial());
}

#[test]
fn broken_entry_is_detected() {
    let mut lam = klein_class();
    lam.table[1][2] = Coef::int(2);
    let (g, h, k) = lam.cocycle_defect().unwrap();
    let m = |a, b| lam.group.mul(a, b);
    assert_ne!(&lam.table[g][h] * &lam.table[m(g, h)][k], &lam.table[h][k] * &lam.table[g][m(h, k)]);
    assert!(twisted_group_algebra(&lam).is_err());
}

#[test]
fn non_normalized_coboundaries() {
    let g = FiniteGroup::product(&[2, 3]);
    let mu: Vec<Coef> = (0..6).map(|k| Coef::rat(k as i64 + 2, 3)).collect();
    let lam = Cocycle2::coboundary(&g, &mu).unwrap().pointwise(&Cocycle2::from_fn(&g, |_, _| Coef::int(7)).unwrap());
    assert!(lam.is_cocycle());
    assert!(!lam.get(0, 0).is_one());
    let nu = lam.is_coboundary().unwrap().unwrap();
    assert_eq!(Cocycle2::coboundary(&g, &nu).unwrap(), lam);
}

#[test]
fn h2_examples() {
    for n in 1..=12 {
        let h = h2_finite_abelian(&AbelianInvariants::new(&[n]).unwrap());
        assert_eq!(h.order(), 1);
    }
    let h = h2_finite_abelian(&AbelianInvariants::new(&[2, 2]).unwrap());
    assert_eq!(h.invariants.factors(), &[2]);
    let h = h2_finite_abelian(&AbelianInvariants::new(&[3, 3, 3]).unwrap());
    assert_eq!(h.invariants.factors(), &[3, 3, 3]);
    for (_, _, _, lam) in &h.generators {
        assert!(lam.is_cocycle());
        assert!(lam.is_coboundary().unwrap().is_none());
    }
}

#[test]
fn h2_order_matches_exhaustive_count() {
    for ns in [vec![2], vec![6], vec![2, 2], vec![2, 4], vec![3, 3], vec![2, 2, 2], vec![2, 6], vec![4, 4], vec![2, 8], vec![2, 2, 4]] {
        let inv = AbelianInvariants::new(&ns).unwrap();
        let h = h2_finite_abelian(&inv);
        assert_eq!(h.order(), count_alternation_classes(&inv), "{inv}");
        let reps = h.representatives();
        assert_eq!(reps.len(), h.order());
        let alts: Vec<_> = reps.iter().map(|r| r.alternation()).collect();
        for i in 0..alts.len() {
            for j in 0..i {
                assert_ne!(alts[i], alts[j], "{inv}");
            }
        }
    }
}

#[test]
fn cocycle_products_and_coboundary_subgroup() {
    let inv = AbelianInvariants::new(&[2, 4]).unwrap();
    let h = h2_finite_abelian(&inv);
    let g = inv.group();
    let lam = &h.generators[0].3;
    let mu: Vec<Coef> = (0..8).map(|k| zeta_pow(4, k)).collect();
    let b = Cocycle2::coboundary(&g, &mu).unwrap();
    let nu: Vec<Coef> = (0..8).map(|k| Coef::int(k + 1)).collect();
    let b2 = Cocycle2::coboundary(&g, &nu).unwrap();
    assert!(lam.pointwise(lam).is_cocycle());
    assert!(lam.pointwise(&b).is_cocycle());
    assert!(b.pointwise(&b2).is_coboundary().unwrap().is_some());
    assert_eq!(lam.pointwise(&b).alternation(), lam.alternation());
}

#[test]
fn real_forms_of_z2() {
    let g = FiniteGroup::cyclic(2);
    let plus = Cocycle2::from_fn(&g, |_, _| Coef::one()).unwrap();
    let minus = Cocycle2::from_fn(&g, |a, b| Coef::int(if a * b == 1 { -1 } else { 1 })).unwrap();
    assert!(plus.trivialize_in(1).unwrap().is_some());
    assert!(minus.trivialize_in(1).unwrap().is_none());
    let mu = minus.is_coboundary().unwrap().unwrap();
    assert_eq!(Cocycle2::coboundary(&g, &mu).unwrap(), minus);
}

#[test]
fn q_commutation_on_finite_quotients_of_z2() {
    for n in [3, 4, 5] {
        let inv = AbelianInvariants::new(&[n, n]).unwrap();
        let g = inv.group();
        let lam = Cocycle2::from_fn(&g, |x, y| zeta_pow(n, (inv.coords(x)[1] * inv.coords(y)[0]) as i64)).unwrap();
        assert!(lam.is_cocycle());
        assert!(lam.is_coboundary().unwrap().is_none());
    }
}

#[test]
fn twisted_algebras_are_galois() {
    let inv = AbelianInvariants::new(&[2, 2]).unwrap();
    let plain = twisted_group_algebra(&Cocycle2::trivial(&inv.group())).unwrap();
    let ca = crate::findim::group_algebra(&inv.group()).alg;
    assert_eq!((&plain.a.mult, &plain.a.unit), (&ca.mult, &ca.unit));
    for ns in [vec![2, 2], vec![2, 4], vec![3, 3], vec![2, 2, 2], vec![4, 4]] {
        let inv = AbelianInvariants::new(&ns).unwrap();
        for lam in h2_finite_abelian(&inv).representatives() {
            let c = twisted_group_algebra(&lam).unwrap();
            assert!(c.check().passed());
            let gr = twisted_graded(&lam).unwrap();
            assert!(gr.is_strongly_graded());
            assert!(galois_beta(&c, None).bijective);
        }
    }
}

#[test]
fn klein_twist_matches_quaternions_after_rescaling() {
    let c = twisted_group_algebra(&klein_class()).unwrap();
    assert!(!c.a.is_commutative());
    let quat = catalog::quaternions();
    // basis iso 1 -> u_e, i -> c_i u_(1,0), j -> c_j u_(0,1), k -> c_k u_(1,1), with c in {±1, ±ζ_4}
    let units: Vec<Coef> = (0..4).map(|k| zeta_pow(4, k)).collect();
    let n = 4;
    let mut found = None;
    'search: for a in &units {
        for b in &units {
            for d in &units {
                let scal = [Coef::one(), a.clone(), b.clone(), d.clone()];
                let phi = |x: &[Coef]| -> Vec<Coef> {
                    let mut out = vec![Coef::zero(); n];
                    for (i, coef) in x.iter().enumerate() {
                        let t = quat.degree[i];
                        out[t] = &out[t] + &(coef * &scal[i]);
                    }
                    out
                };
                let ok = (0..n).all(|i| {
                    (0..n).all(|j| phi(&quat.alg.mul(&quat.alg.basis(i), &quat.alg.basis(j))) == c.a.mul(&phi(&quat.alg.basis(i)), &phi(&quat.alg.basis(j))))
                });
                if ok {
                    found = Some(scal);
                    break 'search;
                }
            }
        }
    }
    assert!(found.is_some());
}

#[test]
fn cohomologous_twists_are_diagonally_isomorphic() {
    let inv = AbelianInvariants::new(&[2, 4]).unwrap();
    let lam = h2_finite_abelian(&inv).generators[0].3.clone();
    let mu: Vec<Coef> = (0..8).map(|k| Coef::int(k + 2)).collect();
    let lam2 = lam.rescaled(&mu).unwrap();
    let r = check_diagonal_iso(&lam, &lam2, &mu).unwrap();
    assert!(r.passed(), "{r}");
    let wrong: Vec<Coef> = (0..8).map(|k| Coef::int(k + 3)).collect();
    assert!(!check_diagonal_iso(&lam, &lam2, &wrong).unwrap().passed());
}

#[test]
fn taft_hopf_matches_presentation() {
    for n in [2usize, 3] {
        let pres = catalog::hopf(&format!("taft{n}")).unwrap();
        let q = pres.alg.q.clone().unwrap();
        let mine = taft_hopf(n, &q).unwrap();
        assert!(mine.check_axioms().passed());
        let theirs = from_presentation(&pres, n * n).unwrap();
        assert!(find_basis_iso(&mine, &theirs).is_some());
    }
    assert!(taft_hopf(3, &Coef::one()).is_err());
    assert!(taft_hopf(4, &Coef::int(-1)).is_err());
}

#[test]
fn taft_objects_are_galois() {
    for n in [2usize, 3] {
        let q = catalog::hopf(&format!("taft{n}")).unwrap().alg.q.clone().unwrap();
        for s in 0..3 {
            let c = taft_galois_object(n, &q, &Coef::int(s)).unwrap();
            assert!(c.check().passed(), "{}", c.check());
            let b = galois_beta(&c, None);
            assert!(b.bijective, "N={n} s={s}");
            assert_eq!(b.cols, n.pow(4));
        }
    }
    let q = Coef::int(-1);
    let a1 = taft_galois_object(2, &q, &Coef::one()).unwrap();
    let x = a1.a.basis(1);
    assert_eq!(a1.a.mul(&x, &x), a1.a.one());
    let coinv = a1.coinvariants();
    assert_eq!(coinv.len(), 1);
}

#[test]
fn taft_object_with_wrong_leg_order_fails() {
    let q = Coef::int(-1);
    let mut c = taft_galois_object(2, &q, &Coef::one()).unwrap();
    // δ(X) = x (x) 1 + g (x) X: legs swapped
    c.delta[1] = vec![(0, 1, Coef::one()), (1, 0, Coef::one())];
    assert!(!c.check().passed());
}

#[test]
fn graded_view_has_one_dimensional_components() {
    let lam = klein_class();
    let gr: GradedAlgebra = twisted_graded(&lam).unwrap();
    for g in 0..4 {
        assert_eq!(gr.component(g).len(), 1);
    }
}
