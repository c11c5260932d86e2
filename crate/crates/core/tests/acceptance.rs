//! One line per acceptance criterion; exits nonzero if any fails.

use hopfkit::catalog::{self, FINITE_HOPF};
use hopfkit::comod::{check_beta_inverse, galois_beta, trivial_extension, PresentedCoaction};
use hopfkit::findim::{
    dual_hopf, duality_omega, find_basis_iso, function_algebra, group_algebra, pontryagin_check, FiniteGroup,
};
use hopfkit::galoisobj::{count_alternation_classes, h2_finite_abelian, twisted_group_algebra, AbelianInvariants, Cocycle2};
use hopfkit::generic::{ah_verify, generic_extension, grouplike_basis, verify_thm812, verify_thm813, TSymRing};
use hopfkit::hopf::{check_hopf_axioms, dual_pairing_check, eval_matrix, uq_fundamental_rep, Matrix};
use hopfkit::ncalg::parse_expr;
use hopfkit::scalar::{q_binomial, Coef, Rat};
use hopfkit::suite::{self, SuiteFlags, MUTATIONS};
use hopfkit::Report;
use std::process::ExitCode;
use std::time::Instant;

type Outcome = Result<String, String>;

fn ensure(r: &Report) -> Result<(), String> {
    match r.failures().next() {
        None => Ok(()),
        Some(c) => Err(format!("{} / {}: {}", r.target, c.name, c.witness.clone().unwrap_or_default())),
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn c1() -> Outcome {
    for name in ["CZ2", "OZ2", "CZ6", "OZ6", "CS3", "OS3"] {
        ensure(&catalog::struct_hopf(name).map_err(err)?.check_axioms())?;
    }
    for name in ["SLq2", "Cq", "Uq", "u3", "u4", "u6", "taft2", "taft3"] {
        ensure(&check_hopf_axioms(&catalog::hopf(name).map_err(err)?))?;
    }
    // second route for the finite entries: axioms on structure constants
    for name in ["u3", "u4", "u6", "taft2", "taft3"] {
        ensure(&catalog::struct_hopf(name).map_err(err)?.check_axioms())?;
    }
    Ok("14 entries, finite ones on both presentations and structure constants".into())
}

/// Coefficient of `q^m` in the Gaussian binomial `[n, k]`: partitions of `m`
/// into at most `k` parts, each at most `n - k`.
fn box_partitions(m: usize, parts: usize, largest: usize) -> i64 {
    if m == 0 {
        return 1;
    }
    if parts == 0 || largest == 0 {
        return 0;
    }
    (1..=largest.min(m)).map(|first| box_partitions(m - first, parts - 1, first)).sum()
}

fn c2() -> Outcome {
    ensure(&suite::quantum_plane_laws(11).map_err(err)?)?;
    for n in 0..=12usize {
        for k in 0..=n {
            let got = q_binomial(n as u32, k as u32).map_err(err)?;
            for m in 0..=k * (n - k) + 1 {
                let want = Rat::int(box_partitions(m, k, n - k));
                if got.coeff(m) != want {
                    return Err(format!("[{n}, {k}] coefficient of q^{m}: {} vs {want}", got.coeff(m)));
                }
            }
        }
    }
    Ok("counts n <= 10, 200 product pairs, q-binomial n <= 8, q-Pascal n <= 12, box-partition oracle n <= 12".into())
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    (0..2).map(|i| (0..2).map(|j| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j])).collect()).collect()
}

fn c3() -> Outcome {
    let uq = catalog::hopf("Uq").map_err(err)?;
    ensure(&suite::uq_representation(&uq).map_err(err)?)?;
    // hand products of the 2x2 matrices
    let rho = uq_fundamental_rep(&uq).map_err(err)?;
    let q = Coef::q_formal();
    let q2 = &q * &q;
    let (e, f, k, ki) = (&rho[0], &rho[1], &rho[2], &rho[3]);
    let scale = |m: &Matrix, c: &Coef| -> Matrix { m.iter().map(|r| r.iter().map(|x| x * c).collect()).collect() };
    let sub = |a: &Matrix, b: &Matrix| -> Matrix {
        a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
    };
    let kek = mat_mul(&mat_mul(k, e), ki);
    let ef_fe = sub(&mat_mul(e, f), &mat_mul(f, e));
    let kk = scale(&sub(k, ki), &(&q - &q.inv().unwrap()).inv().unwrap());
    if kek != scale(e, &q2) || ef_fe != kk {
        return Err("hand product of rho matrices".into());
    }
    let env = catalog::env_for(uq.alphabet(), uq.alg.q.as_ref());
    let cas = eval_matrix(&parse_expr(&env, suite::CASIMIR).map_err(err)?, &rho);
    if cas[0][1] != Coef::zero() || cas[1][0] != Coef::zero() || cas[0][0] != cas[1][1] {
        return Err(format!("Casimir is not scalar on rho: {cas:?}"));
    }
    Ok("rho, Casimir central and scalar on rho, K^k group-like for |k| <= 4, E F EK not".into())
}

fn c4() -> Outcome {
    let uq = catalog::hopf("Uq").map_err(err)?;
    let rho = uq_fundamental_rep(&uq).map_err(err)?;
    let mut words = Vec::new();
    for d in [3, 4] {
        let out = dual_pairing_check(&uq, &rho, d).map_err(err)?;
        ensure(&out.report)?;
        words.push(out.words_checked.to_string());
    }
    Ok(format!("7 relations on {} PBW words (degree 3) and {} (degree 4)", words[0], words[1]))
}

fn abelian_groups_up_to_8() -> Vec<FiniteGroup> {
    let mut v: Vec<FiniteGroup> = (1..=8).map(FiniteGroup::cyclic).collect();
    for ns in [&[2usize, 2][..], &[2, 4], &[2, 2, 2]] {
        v.push(FiniteGroup::product(ns));
    }
    v
}

fn c5() -> Outcome {
    let mut groups = abelian_groups_up_to_8();
    groups.push(FiniteGroup::sym(3));
    for g in &groups {
        ensure(&duality_omega(g))?;
    }
    for g in abelian_groups_up_to_8() {
        if find_basis_iso(&dual_hopf(&group_algebra(&g)), &function_algebra(&g)).is_none() {
            return Err(format!("dual of C[G] vs O(G), |G| = {}", g.order()));
        }
    }
    for n in 1..=8 {
        ensure(&pontryagin_check(&FiniteGroup::cyclic(n)).map_err(err)?)?;
    }
    ensure(&pontryagin_check(&FiniteGroup::product(&[2, 3])).map_err(err)?)?;
    Ok(format!("omega on {} groups, 11 abelian duals, Pontryagin for Z/n n <= 8 and Z/2 x Z/3", groups.len()))
}

fn c6() -> Outcome {
    for name in ["quaternions", "M2", "M3"] {
        ensure(&suite::graded_report(&catalog::graded(name).map_err(err)?).map_err(err)?)?;
    }
    // i*j = k and j*i = -k on the structure constants
    let q = catalog::quaternions();
    let (i, j, k) = (q.alg.basis(1), q.alg.basis(2), q.alg.basis(3));
    let neg: Vec<Coef> = k.iter().map(|c| -c).collect();
    if q.alg.mul(&i, &j) != k || q.alg.mul(&j, &i) != neg {
        return Err("quaternion table".into());
    }
    Ok("quaternions, M2, M3 round trip and projectors".into())
}

fn c7() -> Outcome {
    let c = PresentedCoaction::quantum_plane().map_err(err)?;
    let flags = SuiteFlags { degree: 5, seed: 3, ..SuiteFlags::default() };
    let r = suite::coaction_report(&c, &flags).map_err(err)?;
    ensure(&r)?;
    if !r.checks.iter().any(|c| c.name.starts_with("delta(Y) delta(X)")) {
        return Err("missing delta(Y) delta(X) - q delta(X) delta(Y)".into());
    }
    let co = c.coinvariants(6);
    if co.len() != 1 || co[0].max_len() != 0 {
        return Err(format!("coinvariants {co:?}"));
    }
    Ok("comodule algebra, delta(Y)delta(X) = q delta(X)delta(Y), coinvariants span{1} to degree 6".into())
}

fn c8() -> Outcome {
    for name in FINITE_HOPF {
        let h = catalog::struct_hopf(name).map_err(err)?;
        let b = galois_beta(&trivial_extension(&h), None);
        if !b.bijective {
            return Err(format!("trivial extension of {name}"));
        }
        ensure(&check_beta_inverse(&h))?;
    }
    let flags = SuiteFlags::default();
    for e in ["quaternions", "M3", "laurent3"] {
        ensure(&suite::run_suite(e, "galois", &flags).map_err(err)?)?;
    }
    let m3 = catalog::matrix_algebra(3).module_basis();
    if m3.gens.len() != 3 {
        return Err(format!("M3 module basis of size {}", m3.gens.len()));
    }
    Ok(format!("{} trivial extensions with beta_2, quaternions, M3 (3 generators), Laurent unit determinant", FINITE_HOPF.len()))
}

fn abelian_groups_up_to_16() -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = (1..=16).map(|n| vec![n]).collect();
    for ns in [
        vec![2, 2],
        vec![2, 4],
        vec![2, 2, 2],
        vec![3, 3],
        vec![2, 6],
        vec![4, 4],
        vec![2, 8],
        vec![2, 2, 4],
        vec![2, 2, 2, 2],
    ] {
        v.push(ns);
    }
    v
}

fn c9() -> Outcome {
    for n in 1..=12 {
        let h = h2_finite_abelian(&AbelianInvariants::new(&[n]).map_err(err)?);
        if h.order() != 1 {
            return Err(format!("H2(Z/{n}) has order {}", h.order()));
        }
    }
    for (ns, want) in [(vec![2, 2], vec![2]), (vec![3, 3, 3], vec![3, 3, 3])] {
        let h = h2_finite_abelian(&AbelianInvariants::new(&ns).map_err(err)?);
        if h.invariants.factors() != want.as_slice() {
            return Err(format!("H2 of {ns:?} is {}", h.invariants));
        }
        for (_, _, _, lam) in &h.generators {
            if !lam.is_cocycle() || lam.is_coboundary().map_err(err)?.is_some() {
                return Err(format!("representative for {ns:?}"));
            }
        }
    }
    // Oracle for (Z/2)^2: the alternating form of (-1)^(a2 b1) is nontrivial.
    let inv = AbelianInvariants::new(&[2, 2]).map_err(err)?;
    let lam = Cocycle2::from_fn(&inv.group(), |x, y| {
        Coef::int(if inv.coords(x)[1] * inv.coords(y)[0] % 2 == 1 { -1 } else { 1 })
    })
    .map_err(err)?;
    if lam.alternation_is_trivial() || lam.is_coboundary().map_err(err)?.is_some() {
        return Err("(-1)^(a2 b1) should be a nontrivial class".into());
    }
    let mut count = 0;
    for ns in abelian_groups_up_to_16() {
        let inv = AbelianInvariants::new(&ns).map_err(err)?;
        let h2 = h2_finite_abelian(&inv);
        if h2.order() != count_alternation_classes(&inv) {
            return Err(format!("|H2({inv})| = {} but {} alternating forms", h2.order(), count_alternation_classes(&inv)));
        }
        for lam in h2.representatives() {
            let c = twisted_group_algebra(&lam).map_err(err)?;
            ensure(&c.check())?;
            if !galois_beta(&c, None).bijective {
                return Err(format!("twisted group algebra over {inv}"));
            }
            count += 1;
        }
    }
    Ok(format!("H2 trivial for Z/n n <= 12, (Z/2)^2 and (Z/3)^3 exact, orders match alternating-form counts, {count} twisted algebras Galois"))
}

fn c10() -> Outcome {
    let mut dims = Vec::new();
    for n in [2usize, 3] {
        for s in 0..3 {
            let r = suite::taft_report(n, s).map_err(err)?;
            ensure(&r)?;
            dims.push(r.data.iter().find(|d| d.key == "beta matrix").map(|d| d.value.clone()).unwrap_or_default());
        }
    }
    if !dims[3].starts_with("81x81") {
        return Err(format!("N = 3 matrix {}", dims[3]));
    }
    Ok(format!("6 objects, beta matrices {} and {}", dims[0], dims[3]))
}

fn c11() -> Outcome {
    let mut times = Vec::new();
    for name in ["taft2", "u4", "u3"] {
        let t = Instant::now();
        let g = generic_extension(&catalog::struct_hopf(name).map_err(err)?).map_err(err)?;
        let r = ah_verify(&g, 7, 3);
        ensure(&r)?;
        let need = ["associativity on all triples", "fiber at chi_0 is H", "beta bijective at seed 9"];
        if let Some(miss) = need.iter().find(|n| !r.checks.iter().any(|c| c.name == **n)) {
            return Err(format!("{name}: missing {miss}"));
        }
        times.push(format!("{name} {:.1}s", t.elapsed().as_secs_f64()));
    }
    Ok(times.join(", "))
}

fn c12() -> Outcome {
    let o = verify_thm812().map_err(err)?;
    ensure(&o.report)?;
    if let Some((n, r)) = o.residuals.iter().find(|(_, r)| r != "0") {
        return Err(format!("{n}: residual {r}"));
    }
    Ok(format!("{} identities exact, residuals all 0", o.residuals.len()))
}

fn c13() -> Outcome {
    for d in [3, 4] {
        ensure(&verify_thm813(d).map_err(err)?.report)?;
    }
    Ok("u3 and u4: three power relations, specialization to K^e - 1, E^e, F^e".into())
}

fn c14() -> Outcome {
    ensure(&suite::uq_grading_report().map_err(err)?)?;
    for name in ["u3", "u4", "u6"] {
        let d: u32 = name[1..].parse().unwrap();
        let e = catalog::ud_e(d) as usize;
        ensure(&suite::ud_grading_report(name).map_err(err)?)?;
        // group-like basis elements are the powers of K
        let h = catalog::struct_hopf(name).map_err(err)?;
        let gl = grouplike_basis(&h).iter().filter(|&&b| b).count();
        let shape = TSymRing::for_hopf(&h).character_shape();
        if gl != e || shape != (h.dim() - gl, gl) || h.dim() != e * e * e {
            return Err(format!("{name}: {gl} group-likes, shape {shape:?}"));
        }
    }
    Ok("Uq degrees for i, j <= 3, |l| <= 3; u3 and u6 trivially graded; shapes C^(e(e^2-1)) x (C^x)^e".into())
}

fn c15() -> Outcome {
    let mut names = Vec::new();
    for m in MUTATIONS {
        let r = suite::run_mutation(m.name, &SuiteFlags::default()).map_err(err)?;
        let w = r.failures().next().and_then(|c| c.witness.clone());
        match w {
            Some(w) if !w.is_empty() && !w.ends_with("= 0") && r.to_string().contains(&w) => names.push(m.name),
            _ => return Err(format!("{} was not caught", m.name)),
        }
    }
    Ok(format!("{} mutations caught: {}", names.len(), names.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 15] = [
        (1, c1),
        (2, c2),
        (3, c3),
        (4, c4),
        (5, c5),
        (6, c6),
        (7, c7),
        (8, c8),
        (9, c9),
        (10, c10),
        (11, c11),
        (12, c12),
        (13, c13),
        (14, c14),
        (15, c15),
    ];
    let filter: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for (k, f) in criteria {
        if filter.is_some_and(|n| n != k) {
            continue;
        }
        let t = Instant::now();
        let out = f();
        let secs = t.elapsed().as_secs_f64();
        match out {
            Ok(msg) => println!("criterion {k:2}: PASS ({secs:.1}s) {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {k:2}: FAIL ({secs:.1}s) {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
