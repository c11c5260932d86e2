use super::*;
use crate::catalog;

fn groups_up_to_12() -> Vec<FiniteGroup> {
    let mut v: Vec<FiniteGroup> = (1..=12).map(FiniteGroup::cyclic).collect();
    for ns in [&[2usize, 2][..], &[2, 4], &[2, 2, 2], &[3, 3], &[2, 6], &[2, 2, 3]] {
        v.push(FiniteGroup::product(ns));
    }
    v.push(FiniteGroup::sym(3));
    v
}

#[test]
fn group_and_function_algebras() {
    let z2 = FiniteGroup::cyclic(2);
    let s3 = FiniteGroup::sym(3);
    let cz2 = group_algebra(&z2);
    assert!(cz2.antipode_squared_is_identity());
    assert!((0..2).all(|i| cz2.antipode[i] == vec![(i, Coef::one())]));
    let cs3 = group_algebra(&s3);
    assert!(cs3.is_cocommutative() && !cs3.alg.is_commutative());
    let sum = vec![Coef::one(); 6];
    assert_eq!(cs3.counit_of(&sum), Coef::int(6));
    let os3 = function_algebra(&s3);
    assert_eq!(os3.alg.one(), sum);
    assert!(os3.alg.is_commutative() && !os3.is_cocommutative());
    let oz2 = function_algebra(&z2);
    assert!(oz2.alg.is_commutative() && oz2.is_cocommutative());
    for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(6), FiniteGroup::sym(3)] {
        for h in [group_algebra(&g), function_algebra(&g)] {
            let r = h.check_axioms();
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn broken_antipode_is_caught() {
    let mut h = group_algebra(&FiniteGroup::cyclic(3));
    h.antipode[1] = vec![(1, Coef::one())];
    let r = h.check_axioms();
    assert!(r.failures().any(|c| c.name == "antipode laws"), "{r}");
}

#[test]
fn duals() {
    let s3 = FiniteGroup::sym(3);
    let cs3 = group_algebra(&s3);
    let d = dual_hopf(&cs3);
    assert!(d.check_axioms().passed());
    assert!(d.alg.is_commutative() && !d.is_cocommutative());
    let os3 = function_algebra(&s3);
    assert!(dual_hopf(&os3).is_cocommutative());
    for h in [cs3.clone(), os3, from_presentation(&catalog::hopf("taft2").unwrap(), 4).unwrap()] {
        let dd = dual_hopf(&dual_hopf(&h));
        let perm = find_basis_iso(&h, &dd).expect("biduality");
        let phi: Vec<Elem> = perm.iter().map(|&p| dd.alg.basis(p)).collect();
        assert!(check_iso(&h, &dd, &phi).passed());
    }
    // (1 ± g)/2 are orthogonal idempotents in the dual of O(Z/2).
    let dz = dual_hopf(&function_algebra(&FiniteGroup::cyclic(2)));
    let half = Coef::rat(1, 2);
    let p = vec![half.clone(), half.clone()];
    let m = vec![half.clone(), -&half];
    assert_eq!(dz.alg.mul(&p, &p), p);
    assert_eq!(dz.alg.mul(&m, &m), m);
    assert_eq!(dz.alg.mul(&p, &m), dz.alg.zero());
    assert_eq!(add(&p, &m), dz.alg.one());
}

#[test]
fn dual_of_group_algebra_is_function_algebra() {
    for g in groups_up_to_12().into_iter().filter(|g| g.is_abelian() && g.order() <= 8) {
        let perm = find_basis_iso(&dual_hopf(&group_algebra(&g)), &function_algebra(&g));
        assert!(perm.is_some(), "order {}", g.order());
    }
    assert!(find_basis_iso(&group_algebra(&FiniteGroup::sym(3)), &function_algebra(&FiniteGroup::sym(3))).is_none());
}

#[test]
fn omega_for_small_groups() {
    for g in groups_up_to_12() {
        let r = duality_omega(&g);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn pontryagin() {
    for n in 1..=8 {
        let g = FiniteGroup::cyclic(n);
        let r = pontryagin_check(&g).unwrap();
        assert!(r.passed(), "{r}");
        assert!(Characters::of(&g).unwrap().dual.is_cyclic());
    }
    let g = FiniteGroup::product(&[2, 3]);
    assert!(pontryagin_check(&g).unwrap().passed());
    let dual = Characters::of(&g).unwrap().dual;
    assert!(dual.find_isomorphism(&FiniteGroup::cyclic(6)).is_some());
    let klein = FiniteGroup::product(&[2, 2]);
    assert!(pontryagin_check(&klein).unwrap().passed());
    assert_eq!(Characters::of(&FiniteGroup::trivial()).unwrap().dual.order(), 1);
    assert_eq!(pontryagin_check(&FiniteGroup::sym(3)).unwrap_err(), Error::NotAbelian);
}

#[test]
fn presented_algebras_materialize() {
    let t = from_presentation(&catalog::hopf("taft2").unwrap(), 4).unwrap();
    assert_eq!(t.labels(), ["1", "g", "x", "g*x"]);
    assert_eq!(from_presentation(&catalog::hopf("u4").unwrap(), 8).unwrap().dim(), 8);
    let u3 = from_presentation(&catalog::hopf("u3").unwrap(), 27).unwrap();
    assert!(!u3.antipode_squared_is_identity());
    assert_eq!(
        from_presentation(&catalog::hopf("u4").unwrap(), 9).unwrap_err(),
        Error::BasisCount { expected: 9, found: 8 }
    );
    assert!(matches!(from_presentation(&catalog::hopf("Uq").unwrap(), 4), Err(Error::BasisCount { .. })));
}

#[test]
fn grouplike_elements() {
    let cs3 = group_algebra(&FiniteGroup::sym(3));
    let gl = grouplikes(&cs3, None);
    assert_eq!(gl.elements.len(), 6);
    assert!(gl.group.unwrap().find_isomorphism(&FiniteGroup::sym(3)).is_some());
    let oz2 = function_algebra(&FiniteGroup::cyclic(2));
    let gl = grouplikes(&oz2, None);
    assert_eq!(gl.elements, vec![vec![Coef::one(), Coef::one()], vec![Coef::one(), Coef::int(-1)]]);
    let oz3 = function_algebra(&FiniteGroup::cyclic(3));
    assert_eq!(grouplikes(&oz3, None).group.unwrap().order(), 3);
    let t = from_presentation(&catalog::hopf("taft2").unwrap(), 4).unwrap();
    let gl = grouplikes(&t, None);
    let shown: Vec<String> = gl.elements.iter().map(|e| t.alg.show(e)).collect();
    assert_eq!(shown, ["1", "g"]);
    let sums = [add(&t.alg.basis(1), &t.alg.basis(2))];
    assert!(grouplikes(&t, Some(&sums)).elements.is_empty());
}
