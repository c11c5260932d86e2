//! Named verification suites over catalog entries, and single-token
//! mutations of catalog data that each suite must reject.

use crate::catalog::{self, group_named, Presentation};
use crate::comod::{
    check_beta_inverse, coaction_to_grading, galois_beta, galois_beta_ring, span_dim, trivial_extension, GradedAlgebra,
    PresentedCoaction, StructComod,
};
use crate::error::{Error, Result};
use crate::findim::{
    duality_omega, dual_hopf, find_basis_iso, function_algebra, group_algebra, pontryagin_check, FiniteGroup, StructHopf,
};
use crate::galoisobj::{
    count_alternation_classes, h2_finite_abelian, taft_galois_object, twisted_group_algebra, AbelianInvariants, Cocycle2,
};
use crate::generic::{
    ah_verify, associativity_witness, generic_extension, hab, gamma_grading, thm812_relations, uq_context, uq_pbw_degree,
    verify_thm812, verify_thm813, GenericExtension, Identity, TSymRing,
};
use crate::hopf::{check_hopf_axioms, check_matrix_rep, dual_pairing_check, uq_fundamental_rep, HopfPresentation, TensorElem};
use crate::ncalg::{parse_expr, NcPoly};
use crate::report::Report;
use crate::scalar::{q_binomial, Coef, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

/// Base for presented entries whose ring carries a formal `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QChoice {
    #[default]
    Formal,
    Cyclotomic(u32),
}

impl FromStr for QChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<QChoice> {
        if s == "formal" {
            return Ok(QChoice::Formal);
        }
        let d = s
            .strip_prefix("cyclotomic:")
            .and_then(|d| d.parse::<u32>().ok())
            .ok_or_else(|| Error::InvalidArgument(format!("--q expects formal or cyclotomic:<d>, got `{s}`")))?;
        if d < 3 {
            return Err(Error::CyclotomicOrder(d));
        }
        Ok(QChoice::Cyclotomic(d))
    }
}

impl fmt::Display for QChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QChoice::Formal => write!(f, "formal"),
            QChoice::Cyclotomic(d) => write!(f, "cyclotomic:{d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteFlags {
    /// Truncation degree for infinite-dimensional checks.
    pub degree: usize,
    pub seed: u64,
    pub q: QChoice,
}

impl Default for SuiteFlags {
    fn default() -> Self {
        SuiteFlags { degree: 6, seed: 0, q: QChoice::Formal }
    }
}

pub const SUITES: [(&str, &str); 11] = [
    ("hopf-axioms", "bialgebra and antipode identities"),
    ("rewriting", "critical pairs of the rewriting system resolve"),
    ("quantum-plane", "basis counts, monomial product law, q-binomial and q-Pascal"),
    ("representation", "2-dim representation, Casimir, group-like elements"),
    ("pairing", "quantum coordinate relations vanish on PBW words"),
    ("duality", "dual Hopf algebras, omega and Pontryagin duality"),
    ("comodule", "comodule algebra axioms"),
    ("coinvariants", "coinvariant subalgebra"),
    ("grading", "group gradings and their degree data"),
    ("galois", "bijectivity of the Galois map"),
    ("generic", "generic Galois extension and its relations"),
];

enum Target {
    Presented(Presentation),
    Struct(StructHopf),
    Graded(GradedAlgebra),
    QplaneCoaction,
    Laurent(usize),
    TaftObject(usize, i64),
    Generic(String),
}

fn resolve(entry: &str) -> Result<Target> {
    if entry == "qplane-coaction" {
        return Ok(Target::QplaneCoaction);
    }
    if let Ok(g) = catalog::graded(entry) {
        return Ok(Target::Graded(g));
    }
    if let Some(n) = entry.strip_prefix("laurent").and_then(|n| n.parse::<usize>().ok()) {
        if n == 0 {
            return Err(Error::UnknownEntry(entry.into()));
        }
        return Ok(Target::Laurent(n));
    }
    if let Some(rest) = entry.strip_prefix("taft-object-") {
        let parts: Vec<&str> = rest.split('-').collect();
        if let [n, s] = parts[..] {
            if let (Ok(n), Ok(s)) = (n.parse(), s.parse()) {
                return Ok(Target::TaftObject(n, s));
            }
        }
        return Err(Error::UnknownEntry(entry.into()));
    }
    if let Some(h) = entry.strip_prefix("generic-") {
        return Ok(Target::Generic(h.into()));
    }
    match catalog::presentation(entry) {
        Ok(p) => Ok(Target::Presented(p)),
        Err(Error::UnknownEntry(_)) => Ok(Target::Struct(catalog::struct_hopf(entry)?)),
        Err(e) => Err(e),
    }
}

/// Presentation with the `--q` choice applied.
fn with_q(mut p: Presentation, q: QChoice) -> Result<Presentation> {
    if let QChoice::Cyclotomic(d) = q {
        if p.ring != "base=q" {
            return Err(Error::InvalidArgument(format!("{} has no formal q to specialize", p.name)));
        }
        p.ring = format!("base=cyclotomic:{d}");
    }
    Ok(p)
}

fn formal_only(entry: &str, q: QChoice) -> Result<()> {
    match q {
        QChoice::Formal => Ok(()),
        QChoice::Cyclotomic(_) => Err(Error::InvalidArgument(format!("--q does not apply to {entry}"))),
    }
}

fn unsupported(entry: &str, suite: &str) -> Error {
    Error::InvalidArgument(format!("suite {suite} does not apply to {entry}"))
}

/// Runs `suite` on `entry`. Failing checks are reported, not raised.
pub fn run_suite(entry: &str, suite: &str, flags: &SuiteFlags) -> Result<Report> {
    if !SUITES.iter().any(|(s, _)| *s == suite) {
        return Err(Error::UnknownSuite(suite.into()));
    }
    let start = Instant::now();
    let target = resolve(entry)?;
    if !matches!(target, Target::Presented(_) | Target::QplaneCoaction) {
        formal_only(entry, flags.q)?;
    }
    let inner = match suite {
        "hopf-axioms" => hopf_axioms(entry, &target, flags),
        "rewriting" => rewriting(entry, &target, flags),
        "quantum-plane" => quantum_plane(entry, &target, flags),
        "representation" => representation(entry, &target, flags),
        "pairing" => pairing(entry, &target, flags),
        "duality" => duality(entry, &target),
        "comodule" => comodule(entry, &target, flags),
        "coinvariants" => coinvariants(entry, &target, flags),
        "grading" => grading(entry, &target),
        "galois" => galois(entry, &target, flags),
        _ => generic(entry, &target, flags),
    }?;
    Ok(finish(suite, entry, inner, start))
}

fn finish(suite: &str, entry: &str, inner: Report, start: Instant) -> Report {
    let mut r = Report::new(suite, entry);
    r.data = inner.data.clone();
    r.extend("", inner);
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    r
}

fn presented_hopf(entry: &str, t: &Target, flags: &SuiteFlags, suite: &str) -> Result<HopfPresentation> {
    match t {
        Target::Presented(p) if !p.coproduct.is_empty() => with_q(p.clone(), flags.q)?.hopf(),
        _ => Err(unsupported(entry, suite)),
    }
}

fn struct_of(entry: &str, t: &Target, suite: &str) -> Result<StructHopf> {
    match t {
        Target::Struct(h) => Ok(h.clone()),
        Target::Presented(p) if !p.coproduct.is_empty() => catalog::struct_hopf(&p.name),
        _ => Err(unsupported(entry, suite)),
    }
}

fn hopf_axioms(entry: &str, t: &Target, flags: &SuiteFlags) -> Result<Report> {
    match t {
        Target::Struct(h) => Ok(h.check_axioms()),
        _ => Ok(check_hopf_axioms(&presented_hopf(entry, t, flags, "hopf-axioms")?)),
    }
}

fn rewriting(entry: &str, t: &Target, flags: &SuiteFlags) -> Result<Report> {
    let Target::Presented(p) = t else { return Err(unsupported(entry, "rewriting")) };
    let alg = with_q(p.clone(), flags.q)?.algebra()?;
    let mut r = Report::new("rewriting", entry);
    let bad = alg.rs.overlap_report(flags.degree);
    r.check("critical pairs resolve", bad.is_empty(), || {
        let c = &bad[0];
        format!("{} = {}", alg.alphabet().fmt_word(&c.word), c.difference)
    });
    r.bounded(flags.degree as u32);
    let words = alg.rs.irreducible_words(flags.degree);
    let counts: Vec<String> = (0..=flags.degree).map(|n| words.iter().filter(|w| w.len() == n).count().to_string()).collect();
    r.note("basis words by degree", counts.join(" "));
    Ok(r)
}

fn quantum_plane(entry: &str, t: &Target, flags: &SuiteFlags) -> Result<Report> {
    match t {
        Target::Presented(p) if p.name == "qplane" => {
            formal_only(entry, flags.q)?;
            quantum_plane_laws(flags.seed)
        }
        _ => Err(unsupported(entry, "quantum-plane")),
    }
}

/// Structure of the quantum plane `YX = qXY` at formal `q`.
pub fn quantum_plane_laws(seed: u64) -> Result<Report> {
    let a = catalog::algebra("qplane")?;
    let q = a.q.clone().ok_or(Error::DegenerateQ)?;
    let env = catalog::env_for(a.alphabet(), Some(&q));
    let p = |s: &str| -> Result<NcPoly<Coef>> { Ok(a.rs.normal_form(&parse_expr(&env, s)?)) };
    let mono = |i: usize, j: usize| p(&format!("X^{i}*Y^{j}"));
    let mut r = Report::new("quantum-plane", "qplane");

    let words = a.rs.irreducible_words(10);
    for n in 0..=10 {
        let k = words.iter().filter(|w| w.len() == n).count();
        r.check(format!("degree {n} has {} basis words", n + 1), k == n + 1, || format!("{k} words"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = None;
    for _ in 0..200 {
        let (i, j, k, l) = (rng.gen_range(0..5), rng.gen_range(0..5), rng.gen_range(0..5), rng.gen_range(0..5));
        let lhs = a.rs.mul(&mono(i, j)?, &mono(k, l)?);
        let rhs = mono(i + k, j + l)?.scale(&q.pow((j * k) as i32).ok_or(Error::DegenerateQ)?);
        if lhs != rhs && bad.is_none() {
            bad = Some(format!("X^{i}*Y^{j}*X^{k}*Y^{l} - ({}) = {}", rhs, lhs.minus(&rhs)));
        }
    }
    r.record("X^i Y^j X^k Y^l = q^(jk) X^(i+k) Y^(j+l) on 200 random pairs", bad);

    let x_plus_y = p("X + Y")?;
    for n in 0..=8u32 {
        let lhs = a.rs.pow(&x_plus_y, n);
        let mut rhs = NcPoly::zero(a.alphabet());
        for k in 0..=n {
            rhs = rhs.plus(&mono(k as usize, (n - k) as usize)?.scale(&Coef::from_qpoly(&q_binomial(n, k)?)));
        }
        r.check(format!("q-binomial theorem for n = {n}"), lhs == rhs, || lhs.minus(&rhs).to_string());
    }

    let mut bad = None;
    for n in 1..=12u32 {
        for k in 1..n {
            let lhs = q_binomial(n, k)?;
            let rhs = &q_binomial(n - 1, k - 1)? + &q_binomial(n - 1, k)?.shift(k as usize);
            if lhs != rhs && bad.is_none() {
                bad = Some(format!("[{n}, {k}] - ([{}, {}] + q^{k}*[{}, {k}]) = {}", n - 1, k - 1, n - 1, &lhs - &rhs));
            }
        }
    }
    r.record("q-Pascal rule for n <= 12", bad);
    Ok(r)
}

pub const CASIMIR: &str = "EF + (q^-1*K + q*Kinv)/(q - q^-1)^2";

fn representation(entry: &str, t: &Target, flags: &SuiteFlags) -> Result<Report> {
    let h = presented_hopf(entry, t, flags, "representation")?;
    uq_representation(&h)
}

/// The 2-dim representation, centrality of the Casimir and group-like powers of `K`.
pub fn uq_representation(h: &HopfPresentation) -> Result<Report> {
    let mut r = Report::new("representation", h.name());
    let rho = uq_fundamental_rep(h)?;
    r.extend("rho: ", check_matrix_rep(&rho, &h.alg)?);
    let env = catalog::env_for(h.alphabet(), h.alg.q.as_ref());
    let p = |s: &str| -> Result<NcPoly<Coef>> { Ok(h.rs().normal_form(&parse_expr(&env, s)?)) };
    let z = p(CASIMIR)?;
    for g in ["E", "F", "K", "Kinv"] {
        let x = p(g)?;
        let c = h.rs().mul(&z, &x).minus(&h.rs().mul(&x, &z));
        r.check(format!("Casimir commutes with {g}"), c.is_zero(), || c.to_string());
    }
    for k in -4i32..=4 {
        let x = p(&format!("K^{k}"))?;
        r.check(format!("K^{k} is group-like"), h.is_grouplike(&x), || grouplike_defect(h, &x));
    }
    for s in ["E", "F", "EK"] {
        let x = p(s)?;
        r.check(format!("{s} is not group-like"), !h.is_grouplike(&x), || format!("Delta({s}) = {s} (x) {s}"));
    }
    Ok(r)
}

fn grouplike_defect(h: &HopfPresentation, x: &NcPoly<Coef>) -> String {
    h.coproduct(x).minus(&TensorElem::pure(&[x, x])).to_string()
}

fn pairing(entry: &str, t: &Target, flags: &SuiteFlags) -> Result<Report> {
    let h = presented_hopf(entry, t, flags, "pairing")?;
    let out = dual_pairing_check(&h, &uq_fundamental_rep(&h)?, flags.degree)?;
    let mut r = out.report;
    r.note("words per relation", out.words_checked.to_string());
    Ok(r)
}

fn entry_group(entry: &str) -> Option<FiniteGroup> {
    entry.strip_prefix('C').or_else(|| entry.strip_prefix('O')).and_then(|g| group_named(g).ok())
}

fn duality(entry: &str, t: &Target) -> Result<Report> {
    let h = struct_of(entry, t, "duality")?;
    let mut r = Report::new("duality", entry);
    let d = dual_hopf(&h);
    r.extend("dual: ", d.check_axioms());
    let dd = dual_hopf(&d);
    r.check("H is isomorphic to its double dual", find_basis_iso(&h, &dd).is_some(), || {
        format!("no basis isomorphism {} -> {}", h.name(), dd.name())
    });
    if let Some(g) = entry_group(entry) {
        r.extend("omega: ", duality_omega(&g));
        if g.is_abelian() {
            let iso = find_basis_iso(&dual_hopf(&group_algebra(&g)), &function_algebra(&g));
            r.check("dual of the group algebra is the function algebra", iso.is_some(), || {
                format!("no basis isomorphism for order {}", g.order())
            });
            r.extend("pontryagin: ", pontryagin_check(&g)?);
        }
    }
    Ok(r)
}

/// Coaction of the quantum coordinate algebra on the quantum plane, with the `--q` choice.
pub fn qplane_coaction(q: QChoice) -> Result<PresentedCoaction> {
    if q == QChoice::Formal {
        return PresentedCoaction::quantum_plane();
    }
    PresentedCoaction::parse(
        "qplane-coaction",
        with_q(catalog::presentation("qplane")?, q)?.algebra()?,
        with_q(catalog::presentation("SLq2")?, q)?.hopf()?,
        &[("X", &[("X", "a"), ("Y", "c")]), ("Y", &[("X", "b"), ("Y", "d")])],
    )
}

/// Comodule checks plus `δ(Y)δ(X) - q δ(X)δ(Y) = 0`.
pub fn coaction_report(c: &PresentedCoaction, flags: &SuiteFlags) -> Result<Report> {
    let mut r = c.check_comodule(flags.degree, flags.seed);
    let env = catalog::env_for(c.a.alphabet(), c.a.q.as_ref());
    if let (Ok(x), Ok(y), Some(q)) = (parse_expr(&env, "X"), parse_expr(&env, "Y"), c.a.q.clone()) {
        let (dx, dy) = (c.coact(&x), c.coact(&y));
        let rs = [&*c.a.rs, c.h.rs()];
        let d = dy.mul(&dx, &rs).minus(&dx.mul(&dy, &rs).scale(&q));
        r.check("delta(Y) delta(X) - q delta(X) delta(Y) = 0", d.is_zero(), || d.to_string());
    }
    Ok(r)
}

fn comodule(entry: &str, t: &Target, flags: &SuiteFlags) -> Result<Report> {
    match t {
        Target::QplaneCoaction => coaction_report(&qplane_coaction(flags.q)?, flags),
        Target::Graded(g) => {
            let mut r = Report::new("comodule", entry);
            r.extend("grading: ", g.check());
            r.extend("coaction: ", g.to_coaction().check());
            Ok(r)
        }
        Target::TaftObject(n, s) => Ok(taft_object(*n, *s)?.check()),
        Target::Laurent(n) => Ok(catalog::laurent_extension(*n).check()),
        _ => Ok(trivial_extension(&struct_of(entry, t, "comodule")?).check()),
    }
}

fn scalar_coinvariants(r: &mut Report, c: &StructComod) {
    let co = c.coinvariants();
    let n = c.a.dim();
    let mut all = co.clone();
    all.push(c.a.one());
    r.check("coinvariants are the scalars", co.len() == 1 && span_dim(&all, n) == 1, || {
        co.iter().map(|v| c.a.show(v)).collect::<Vec<_>>().join(", ")
    });
}

fn coinvariants(entry: &str, t: &Target, flags: &SuiteFlags) -> Result<Report> {
    let mut r = Report::new("coinvariants", entry);
    match t {
        Target::QplaneCoaction | Target::Presented(_) if matches!(t, Target::QplaneCoaction) || entry == "qplane" => {
            let c = qplane_coaction(flags.q)?;
            let co = c.coinvariants(flags.degree);
            r.note("basis", co.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "));
            r.check("coinvariants are span{1}", co.len() == 1 && co[0].max_len() == 0, || {
                co.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
            });
            r.bounded(flags.degree as u32);
        }
        Target::Graded(g) => {
            let c = g.to_coaction();
            let co = c.coinvariants();
            let e = g.component(g.group.identity());
            let mut all = co.clone();
            all.extend(e.iter().map(|&i| g.alg.basis(i)));
            let n = g.alg.dim();
            r.check("coinvariants are the identity component", co.len() == e.len() && span_dim(&all, n) == e.len(), || {
                co.iter().map(|v| g.alg.show(v)).collect::<Vec<_>>().join(", ")
            });
            r.note("basis", co.iter().map(|v| g.alg.show(v)).collect::<Vec<_>>().join(", "));
        }
        Target::TaftObject(n, s) => scalar_coinvariants(&mut r, &taft_object(*n, *s)?),
        _ => scalar_coinvariants(&mut r, &trivial_extension(&struct_of(entry, t, "coinvariants")?)),
    }
    Ok(r)
}

/// Round trip grading -> coaction -> grading, projector identities and strong grading.
pub fn graded_report(g: &GradedAlgebra) -> Result<Report> {
    let mut r = Report::new("grading", &g.alg.name);
    r.extend("", g.check());
    let c = g.to_coaction();
    let gr = coaction_to_grading(&c)?;
    r.extend("projectors: ", gr.check_projectors(&c.a));
    let back = gr.to_graded(&c.a)?;
    r.check(
        "grading -> coaction -> grading is the identity",
        back.alg == g.alg && back.degree == g.degree && back.group.table() == g.group.table(),
        || format!("degrees {:?} became {:?}", g.degree, back.degree),
    );
    match g.strong_grading_witness() {
        None => r.note("strongly graded", "yes"),
        Some((a, b)) => r.note("strongly graded", format!("no: A_{a} A_{b} misses A_({a}{b})")),
    }
    Ok(r)
}

fn grading(entry: &str, t: &Target) -> Result<Report> {
    match t {
        Target::Graded(g) => graded_report(g),
        Target::Presented(p) if p.name == "Uq" => uq_grading_report(),
        Target::Presented(p) if p.name.starts_with('u') => ud_grading_report(&p.name),
        Target::Generic(h) => {
            let g = generic_extension(&catalog::struct_hopf(h)?)?;
            let mut r = Report::new("grading", entry);
            r.pass("sigma has degree 0 on all basis pairs");
            r.note("grading group order", g.grading.group.order().to_string());
            let degs: Vec<String> =
                g.ring.labels.iter().zip(&g.grading.degree).map(|(l, d)| format!("t_{l}:{d}")).collect();
            r.note("symbol degrees", degs.join(" "));
            Ok(r)
        }
        _ => {
            let h = struct_of(entry, t, "grading")?;
            let c = trivial_extension(&h);
            let gr = coaction_to_grading(&c)?;
            let mut r = Report::new("grading", entry);
            r.extend("projectors: ", gr.check_projectors(&c.a));
            Ok(r)
        }
    }
}

/// Degrees of `t_{E^i F^j K^l}`: zero exactly when `i + l` is even.
pub fn uq_grading_report() -> Result<Report> {
    let mut r = Report::new("grading", "Uq");
    let mut bad = None;
    let mut group = 0;
    for i in 0..=3u32 {
        for j in 0..=3u32 {
            for l in -3i32..=3 {
                let (g, d) = uq_pbw_degree(i, j, l)?;
                group = g.order();
                let even = (i as i32 + l).rem_euclid(2) == 0;
                if (d == g.identity()) != even && bad.is_none() {
                    bad = Some(format!("t_(E^{i}*F^{j}*K^{l}) has degree {}", g.label(d)));
                }
            }
        }
    }
    r.record("deg t_(E^i F^j K^l) = 0 iff i + l is even, i, j <= 3, |l| <= 3", bad);
    r.note("grading group order", group.to_string());
    Ok(r)
}

/// Grading of the parameter ring of `u_d` and the shape of its character space.
pub fn ud_grading_report(name: &str) -> Result<Report> {
    let d: u32 = name[1..].parse().map_err(|_| Error::UnknownEntry(name.into()))?;
    let e = catalog::ud_e(d) as usize;
    let h = catalog::struct_hopf(name)?;
    let ring = TSymRing::for_hopf(&h);
    let grading = gamma_grading(&h, &hab(&h)?)?;
    let mut r = Report::new("grading", name);
    if e % 2 == 1 {
        r.check("grading is trivial for odd e", grading.is_trivial(), || {
            format!("grading group of order {}", grading.group.order())
        });
    }
    let shape = ring.character_shape();
    let want = (e * (e * e - 1), e);
    r.check(format!("character space is C^{} x (C^x)^{}", want.0, want.1), shape == want, || {
        format!("C^{} x (C^x)^{}", shape.0, shape.1)
    });
    Ok(r)
}

fn taft_object(n: usize, s: i64) -> Result<StructComod> {
    let q = catalog::hopf(&format!("taft{n}"))?.alg.q.clone().ok_or(Error::DegenerateQ)?;
    taft_galois_object(n, &q, &Coef::int(s))
}

/// Galois object `A_s` of the Taft algebra: comodule checks and `β`.
pub fn taft_report(n: usize, s: i64) -> Result<Report> {
    let start = Instant::now();
    let c = taft_object(n, s)?;
    let mut r = Report::new("galois", &format!("taft-object-{n}-{s}"));
    r.extend("", c.check());
    let b = galois_beta(&c, None);
    r.note("beta matrix", format!("{}x{}, rank {}", b.rows, b.cols, b.rank));
    r.extend("", b.report);
    scalar_coinvariants(&mut r, &c);
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

fn galois(entry: &str, t: &Target, flags: &SuiteFlags) -> Result<Report> {
    match t {
        Target::Graded(g) => {
            let c = g.to_coaction();
            let one_dim = g.component(g.group.identity()).len() == 1;
            let mb = g.module_basis();
            let b = galois_beta(&c, if one_dim { None } else { Some(&mb) });
            let mut r = b.report;
            r.note("beta matrix", format!("{}x{}, rank {}", b.rows, b.cols, b.rank));
            if !one_dim {
                r.note("module basis size", mb.gens.len().to_string());
            }
            Ok(r)
        }
        Target::Laurent(n) => {
            let e = catalog::laurent_extension(*n);
            let mut r = Report::new("galois", entry);
            r.extend("", e.check());
            let (b, det) = galois_beta_ring(&e);
            r.extend("", b.report);
            if let Some(d) = det {
                r.check("determinant of beta is a unit", d.unit_inverse().is_some(), || d.to_string());
                r.note("determinant", d.to_string());
            }
            Ok(r)
        }
        Target::TaftObject(n, s) => taft_report(*n, *s),
        Target::Generic(h) => Ok(ah_verify(&generic_extension(&catalog::struct_hopf(h)?)?, flags.seed, 3)),
        _ => {
            let h = struct_of(entry, t, "galois")?;
            let b = galois_beta(&trivial_extension(&h), None);
            let mut r = b.report;
            r.extend("inverse: ", check_beta_inverse(&h));
            Ok(r)
        }
    }
}

fn generic(entry: &str, t: &Target, flags: &SuiteFlags) -> Result<Report> {
    match t {
        Target::Generic(h) => Ok(ah_verify(&generic_extension(&catalog::struct_hopf(h)?)?, flags.seed, 3)),
        Target::Presented(p) if p.name == "Uq" => {
            formal_only(entry, flags.q)?;
            Ok(with_residuals(verify_thm812()?))
        }
        Target::Presented(p) if p.name.starts_with('u') => {
            let d = p.name[1..].parse().map_err(|_| Error::UnknownEntry(entry.into()))?;
            Ok(with_residuals(verify_thm813(d)?))
        }
        _ => Ok(ah_verify(&generic_extension(&struct_of(entry, t, "generic")?)?, flags.seed, 3)),
    }
}

/// Report with each X-variable residual attached verbatim.
pub fn with_residuals(o: crate::generic::XOutcome) -> Report {
    let mut r = o.report;
    for (name, res) in o.residuals {
        r.note(format!("residual {name}"), res);
    }
    r
}

/// Cocycle identity, normalization data and the twisted group algebra.
pub fn cocycle_report(lam: &Cocycle2) -> Report {
    let g = &lam.group;
    let mut r = Report::new("cohomology", &format!("group of order {}", g.order()));
    let defect = lam.cocycle_defect();
    r.record(
        "cocycle identity",
        defect.map(|(a, b, c)| {
            let m = |x, y| g.mul(x, y);
            let (la, lb, lc) = (g.label(a), g.label(b), g.label(c));
            let (lab, lbc) = (g.label(m(a, b)), g.label(m(b, c)));
            format!(
                "l({la},{lb})*l({lab},{lc}) - l({lb},{lc})*l({la},{lbc}) = {}",
                &(&lam.table[a][b] * &lam.table[m(a, b)][c]) - &(&lam.table[b][c] * &lam.table[a][m(b, c)])
            )
        }),
    );
    if defect.is_none() {
        match twisted_group_algebra(lam) {
            Ok(c) => {
                r.extend("twisted group algebra: ", c.check());
                let b = galois_beta(&c, None);
                r.check("twisted group algebra is Galois", b.bijective, || format!("rank {} of {}", b.rank, b.cols));
            }
            Err(e) => r.fail("twisted group algebra", e.to_string()),
        }
    }
    r
}

/// `H²(G, k^×)` for a finite abelian group: invariant factors, representative
/// tables, and their cocycle and coboundary status.
pub fn h2_report(spec: &str) -> Result<Report> {
    let start = Instant::now();
    let g = FiniteGroup::parse(spec)?;
    let inv = AbelianInvariants::of_group(&g)?;
    let h2 = h2_finite_abelian(&inv);
    let mut r = Report::new("cohomology", spec);
    r.note("group", inv.to_string());
    r.note("H2", h2.invariants.to_string());
    if inv.order() <= 64 {
        let count = count_alternation_classes(&inv);
        r.check("order agrees with the enumeration of alternating forms", count == h2.order(), || {
            format!("{count} classes, {} predicted", h2.order())
        });
    }
    for (k, (i, j, d, lam)) in h2.generators.iter().enumerate() {
        let table: Vec<String> =
            lam.table.iter().map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")).collect();
        r.note(format!("generator {k} (factors {i}, {j}, order {d})"), table.join("; "));
        r.extend(&format!("generator {k}: "), cocycle_report(lam));
        r.check(format!("generator {k} is not a coboundary"), lam.is_coboundary()?.is_none(), || {
            "coboundary".into()
        });
    }
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

/// A single-token change to catalog data, with the entry and suite that catch it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mutation {
    pub name: &'static str,
    pub entry: &'static str,
    pub suite: &'static str,
    pub description: &'static str,
}

pub const MUTATIONS: [Mutation; 6] = [
    Mutation {
        name: "antipode-sign",
        entry: "Uq",
        suite: "hopf-axioms",
        description: "S(E) = E*Kinv instead of -E*Kinv",
    },
    Mutation {
        name: "printed-antipode-f",
        entry: "Uq",
        suite: "hopf-axioms",
        description: "S(F) = -q^-1*F*K instead of -K*F",
    },
    Mutation {
        name: "coaction-legs",
        entry: "qplane-coaction",
        suite: "comodule",
        description: "delta(X) = X (x) a + Y (x) b, delta(Y) = X (x) c + Y (x) d",
    },
    Mutation {
        name: "dropped-q-power",
        entry: "Uq",
        suite: "generic",
        description: "K*E - E*K in place of K*E - q^2*E*K in the generic relations",
    },
    Mutation {
        name: "cocycle-entry",
        entry: "product:[2,2]",
        suite: "cohomology",
        description: "one entry of the nontrivial cocycle of (Z/2)^2 set to 2",
    },
    Mutation {
        name: "sigma-legs",
        entry: "generic-taft2",
        suite: "generic",
        description: "sigma(y1, x1) in place of sigma(x1, y1) in the product",
    },
];

pub fn mutation(name: &str) -> Result<Mutation> {
    MUTATIONS
        .iter()
        .find(|m| m.name == name)
        .copied()
        .ok_or_else(|| Error::InvalidArgument(format!("unknown mutation `{name}`")))
}

/// Runs the suite of mutation `name` on the mutated data. The report is
/// expected to fail.
pub fn run_mutation(name: &str, flags: &SuiteFlags) -> Result<Report> {
    let m = mutation(name)?;
    let start = Instant::now();
    let inner = match m.name {
        "antipode-sign" | "printed-antipode-f" => {
            let mut p = catalog::presentation("Uq")?;
            let (g, v) = if m.name == "antipode-sign" { ("E", "E*Kinv") } else { ("F", "-q^-1*F*K") };
            p.antipode.insert(g.into(), v.into());
            check_hopf_axioms(&p.hopf()?)
        }
        "coaction-legs" => {
            let c = PresentedCoaction::parse(
                "qplane-coaction",
                catalog::algebra("qplane")?,
                catalog::hopf("SLq2")?,
                &[("X", &[("X", "a"), ("Y", "b")]), ("Y", &[("X", "c"), ("Y", "d")])],
            )?;
            coaction_report(&c, flags)?
        }
        "dropped-q-power" => {
            let cx = uq_context()?;
            let mut r = Report::new("generic-relations", "Uq");
            for (rel, t) in thm812_relations() {
                let t = if rel == "K*E" { t.replacen("q^2*E*K", "E*K", 1) } else { t.to_string() };
                let id = Identity::new(&format!("relation {rel}"), &t, "0");
                cx.check_identity(&mut r, &id)?;
            }
            r
        }
        "cocycle-entry" => {
            let inv = AbelianInvariants::new(&[2, 2])?;
            let mut lam = h2_finite_abelian(&inv).generators[0].3.clone();
            lam.table[1][2] = Coef::int(2);
            cocycle_report(&lam)
        }
        _ => {
            let g = generic_extension(&catalog::struct_hopf("taft2")?)?;
            sigma_swapped_report(&g)?
        }
    };
    let mut r = finish(m.suite, m.entry, inner, start);
    r.note("mutation", format!("{}: {}", m.name, m.description));
    Ok(r)
}

/// Associativity of the product built with the legs of `σ` exchanged.
fn sigma_swapped_report(g: &GenericExtension) -> Result<Report> {
    let e = g.with_swapped_sigma_legs();
    let mut r = Report::new("generic-extension", &e.name);
    let w = associativity_witness(&e)?;
    r.record(
        "associativity on all triples",
        w.map(|(x, y, z)| e.associator(x, y, z)),
    );
    Ok(r)
}

fn generic_of(name: &str) -> Result<GenericExtension> {
    generic_extension(&catalog::struct_hopf(name.strip_prefix("generic-").unwrap_or(name))?)
}

/// `t⁻¹` and every nonzero value of `σ` on basis pairs, with both `t⁻¹` identities.
pub fn sigma_report(name: &str) -> Result<Report> {
    let start = Instant::now();
    let mut r = Report::new("generic-sigma", name);
    let g = match generic_of(name) {
        Ok(g) => g,
        Err(Error::DegreeAssertion(w)) => {
            r.fail("sigma has degree 0 on all basis pairs", w);
            return Ok(r);
        }
        Err(e) => return Err(e),
    };
    r.extend("", crate::generic::check_tinv(&g.h, &g.ring, &g.tinv));
    r.pass("sigma has degree 0 on all basis pairs");
    for (k, v) in crate::generic::tinv_display(&g.ring, &g.tinv) {
        r.note(k, v);
    }
    let l = &g.ring.labels;
    for (x, row) in g.sigma.iter().enumerate() {
        for (y, v) in row.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            r.note(format!("sigma({}, {})", l[x], l[y]), v.to_string());
        }
    }
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

/// Associativity of `A_H` over all basis triples, and its unit.
pub fn assoc_report(name: &str) -> Result<Report> {
    let start = Instant::now();
    let g = generic_of(name)?;
    let mut r = Report::new("generic-assoc", name);
    match associativity_witness(&g.ext) {
        Ok(w) => r.record("associativity on all triples", w.map(|(i, j, k)| g.ext.associator(i, j, k))),
        Err(e) => r.fail("associativity on all triples", e.to_string()),
    }
    if g.h.dim() <= crate::generic::DIRECT_ASSOCIATIVITY_DIM {
        r.extend("direct ", g.ext.check());
    }
    let unit: Vec<String> = g.ext.unit.iter().map(|(i, c)| format!("({c})*{}", g.ext.labels[*i])).collect();
    r.note("unit", unit.join(" + "));
    r.note("triples", g.h.dim().pow(3).to_string());
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

/// Fiber of `A_H` at the seeded character: comodule algebra axioms and `β`.
pub fn fiber_report(name: &str, seed: u64) -> Result<Report> {
    let start = Instant::now();
    let g = generic_of(name)?;
    let chi = g.ring.random_character(seed);
    let mut r = Report::new("generic-fiber", name);
    for (k, v) in chi.iter().enumerate() {
        if let Some(v) = v {
            r.note(g.ring.syms.name(k as u16).to_string(), v.to_string());
        }
    }
    let f = g.fiber(&chi)?;
    r.extend("", f.check());
    let b = galois_beta(&f, None);
    r.note("beta matrix", format!("{}x{}, rank {}", b.rows, b.cols, b.rank));
    r.extend("", b.report);
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}
