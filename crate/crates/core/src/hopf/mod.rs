//! Hopf structures on presented algebras: coproduct, counit and antipode
//! extended from generators, axiom checks, convolution and representations.

mod pairing;
mod tensor;

pub use pairing::{dual_pairing_check, kronecker, uq_fundamental_rep, PairingOutcome};
pub use tensor::{Legs, TensorElem};

use crate::error::{Error, Result};
use crate::ncalg::{Alphabet, Gen, NcPoly, RewriteSystem, Word};
use crate::report::Report;
use crate::scalar::{Coef, Ring, Scalar};
use parking_lot::Mutex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// Algebra given by generators and oriented relations.
#[derive(Debug, Clone)]
pub struct Algebra {
    pub name: String,
    pub ring: Ring,
    /// Value of `q` used when parsing; may differ from the ring's own `q`
    /// (e.g. `q = -1` over the rationals).
    pub q: Option<Coef>,
    pub rs: Arc<RewriteSystem>,
}

impl Algebra {
    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.rs.alphabet()
    }

    pub fn gen(&self, name: &str) -> Result<NcPoly<Coef>> {
        NcPoly::gen(self.alphabet(), name)
    }

    /// Relations as elements `lhs - rhs` of the free algebra.
    pub fn relations(&self) -> Vec<NcPoly<Coef>> {
        self.rs
            .rules()
            .iter()
            .map(|r| NcPoly::word(self.alphabet(), &r.lhs).minus(&r.rhs))
            .collect()
    }

    pub fn mul<C: Scalar>(&self, a: &NcPoly<C>, b: &NcPoly<C>) -> NcPoly<C> {
        self.rs.mul(a, b)
    }

    pub fn nf<C: Scalar>(&self, a: &NcPoly<C>) -> NcPoly<C> {
        self.rs.normal_form(a)
    }
}

/// Hopf algebra given by a presentation and the values of `Δ`, `ε`, `S` on generators.
pub struct HopfPresentation {
    pub alg: Algebra,
    delta: Vec<TensorElem<Coef>>,
    eps: Vec<Coef>,
    antipode: Vec<NcPoly<Coef>>,
    delta_cache: Mutex<HashMap<Word, Arc<TensorElem<Coef>>>>,
    s_cache: Mutex<HashMap<Word, Arc<NcPoly<Coef>>>>,
}

impl std::fmt::Debug for HopfPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HopfPresentation").field("name", &self.alg.name).finish()
    }
}

impl Clone for HopfPresentation {
    fn clone(&self) -> Self {
        HopfPresentation::new(
            self.alg.clone(),
            self.delta.clone(),
            self.eps.clone(),
            self.antipode.clone(),
        )
        .expect("valid presentation")
    }
}

impl HopfPresentation {
    pub fn new(
        alg: Algebra,
        delta: Vec<TensorElem<Coef>>,
        eps: Vec<Coef>,
        antipode: Vec<NcPoly<Coef>>,
    ) -> Result<HopfPresentation> {
        let n = alg.alphabet().len();
        if delta.len() != n || eps.len() != n || antipode.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "structure maps must be given on all {n} generators"
            )));
        }
        let rs = alg.rs.clone();
        let delta = delta.iter().map(|t| t.normalize(&[&rs, &rs])).collect();
        let antipode = antipode.iter().map(|p| rs.normal_form(p)).collect();
        Ok(HopfPresentation {
            alg,
            delta,
            eps,
            antipode,
            delta_cache: Mutex::new(HashMap::new()),
            s_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn name(&self) -> &str {
        &self.alg.name
    }

    pub fn rs(&self) -> &RewriteSystem {
        &self.alg.rs
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.alg.alphabet()
    }

    fn alphas2(&self) -> [Arc<Alphabet>; 2] {
        [self.alphabet().clone(), self.alphabet().clone()]
    }

    pub fn delta_gen(&self, g: Gen) -> &TensorElem<Coef> {
        &self.delta[g as usize]
    }

    pub fn eps_gen(&self, g: Gen) -> &Coef {
        &self.eps[g as usize]
    }

    pub fn antipode_gen(&self, g: Gen) -> &NcPoly<Coef> {
        &self.antipode[g as usize]
    }

    /// Copy with the antipode replaced on one generator.
    pub fn with_antipode(&self, gen: &str, value: NcPoly<Coef>) -> Result<HopfPresentation> {
        let g = self.alphabet().gen(gen)?;
        let mut s = self.antipode.clone();
        s[g as usize] = value;
        HopfPresentation::new(self.alg.clone(), self.delta.clone(), self.eps.clone(), s)
    }

    /// Copy with the coproduct replaced on one generator.
    pub fn with_coproduct(&self, gen: &str, value: TensorElem<Coef>) -> Result<HopfPresentation> {
        let g = self.alphabet().gen(gen)?;
        let mut d = self.delta.clone();
        d[g as usize] = value;
        HopfPresentation::new(self.alg.clone(), d, self.eps.clone(), self.antipode.clone())
    }

    /// `Δ` of a word, as the product of generator coproducts.
    pub fn delta_word(&self, w: &[Gen]) -> Arc<TensorElem<Coef>> {
        if let Some(t) = self.delta_cache.lock().get(w) {
            return t.clone();
        }
        let t = match w.split_last() {
            None => TensorElem::one(&self.alphas2()),
            Some((&g, rest)) => {
                let head = self.delta_word(rest);
                let rs = self.rs();
                head.mul(&self.delta[g as usize], &[rs, rs])
            }
        };
        let t = Arc::new(t);
        self.delta_cache.lock().insert(w.iter().copied().collect(), t.clone());
        t
    }

    /// `S` of a word, anti-multiplicatively.
    pub fn antipode_word(&self, w: &[Gen]) -> Arc<NcPoly<Coef>> {
        if let Some(t) = self.s_cache.lock().get(w) {
            return t.clone();
        }
        let t = match w.split_last() {
            None => NcPoly::one(self.alphabet()),
            Some((&g, rest)) => {
                let tail = self.antipode_word(rest);
                self.rs().mul(&self.antipode[g as usize], &tail)
            }
        };
        let t = Arc::new(t);
        self.s_cache.lock().insert(w.iter().copied().collect(), t.clone());
        t
    }

    pub fn counit_word(&self, w: &[Gen]) -> Coef {
        w.iter().fold(Coef::one(), |acc, &g| &acc * &self.eps[g as usize])
    }

    pub fn coproduct<C: Scalar>(&self, x: &NcPoly<C>) -> TensorElem<C> {
        let mut out = TensorElem::zero(&self.alphas2());
        for (w, c) in x.terms() {
            out.add_scaled_coef(&self.delta_word(w), c);
        }
        out
    }

    pub fn counit<C: Scalar>(&self, x: &NcPoly<C>) -> C {
        let mut acc = C::zero();
        for (w, c) in x.terms() {
            acc = acc.plus(&c.scale_coef(&self.counit_word(w)));
        }
        acc
    }

    pub fn antipode<C: Scalar>(&self, x: &NcPoly<C>) -> NcPoly<C> {
        let mut out = NcPoly::zero(self.alphabet());
        for (w, c) in x.terms() {
            for (v, d) in self.antipode_word(w).terms() {
                out.add_term(v.clone(), &c.scale_coef(d));
            }
        }
        out
    }

    fn delta_leg(&self, w: &Word) -> std::result::Result<TensorElem<Coef>, Error> {
        Ok((*self.delta_word(w)).clone())
    }

    fn eps_leg(&self, w: &Word) -> std::result::Result<TensorElem<Coef>, Error> {
        Ok(TensorElem::scalar(self.counit_word(w)))
    }

    fn s_leg(&self, w: &Word) -> std::result::Result<TensorElem<Coef>, Error> {
        Ok(TensorElem::pure(&[&*self.antipode_word(w)]))
    }

    /// Witness (if any) that coassociativity fails on `x`.
    pub fn coassociativity_defect(&self, x: &NcPoly<Coef>) -> TensorElem<Coef> {
        let d = self.coproduct(x);
        let l = d.expand_leg(0, &self.alphas2(), |w| self.delta_leg(w)).unwrap();
        let r = d.expand_leg(1, &self.alphas2(), |w| self.delta_leg(w)).unwrap();
        l.minus(&r)
    }

    /// `((ε⊗id)Δ(x) - x, (id⊗ε)Δ(x) - x)`.
    pub fn counit_defect(&self, x: &NcPoly<Coef>) -> (NcPoly<Coef>, NcPoly<Coef>) {
        let d = self.coproduct(x);
        let xn = self.rs().normal_form(x);
        let l = d.expand_leg(0, &[], |w| self.eps_leg(w)).unwrap();
        let r = d.expand_leg(1, &[], |w| self.eps_leg(w)).unwrap();
        (one_leg(&l, self.alphabet()).minus(&xn), one_leg(&r, self.alphabet()).minus(&xn))
    }

    /// `(Σ S(x1)x2 - ε(x)1, Σ x1 S(x2) - ε(x)1)`.
    pub fn antipode_defect(&self, x: &NcPoly<Coef>) -> (NcPoly<Coef>, NcPoly<Coef>) {
        let d = self.coproduct(x);
        let e = NcPoly::constant(self.alphabet(), self.counit(x));
        let a = self.alphabet().clone();
        let l = d.expand_leg(0, std::slice::from_ref(&a), |w| self.s_leg(w)).unwrap();
        let r = d.expand_leg(1, &[a], |w| self.s_leg(w)).unwrap();
        (l.contract(self.rs()).minus(&e), r.contract(self.rs()).minus(&e))
    }

    /// `(S⊗S)Δ(x) - Δ^op S(x)`.
    pub fn antipode_anti_coalgebra_defect(&self, x: &NcPoly<Coef>) -> TensorElem<Coef> {
        let a = self.alphabet().clone();
        let d = self.coproduct(x);
        let ss = d
            .expand_leg(0, std::slice::from_ref(&a), |w| self.s_leg(w))
            .unwrap()
            .expand_leg(1, &[a], |w| self.s_leg(w))
            .unwrap();
        ss.minus(&self.coproduct(&self.antipode(x)).swap())
    }

    pub fn is_grouplike(&self, x: &NcPoly<Coef>) -> bool {
        let x = self.rs().normal_form(x);
        self.counit(&x).is_one() && self.coproduct(&x) == TensorElem::pure(&[&x, &x])
    }
}

fn one_leg(t: &TensorElem<Coef>, alpha: &Arc<Alphabet>) -> NcPoly<Coef> {
    let mut p = NcPoly::zero(alpha);
    for (l, c) in t.terms() {
        p.add_term(l[0].clone(), c);
    }
    p
}

/// Axiom suite: well-definedness on relations, then coassociativity, counit
/// and antipode laws on generators, plus random spot checks.
///
/// Generator-level checks suffice: both sides of the coassociativity and
/// counit laws are algebra morphisms, and once `S` is anti-multiplicative
/// the antipode identity for `x` and `y` gives it for `xy` via
/// `Σ S(y1)S(x1)x2y2 = ε(x)ε(y)1`.
pub fn check_hopf_axioms(h: &HopfPresentation) -> Report {
    check_hopf_axioms_with(h, 100, 5, 7)
}

pub fn check_hopf_axioms_with(h: &HopfPresentation, spot: usize, spot_degree: usize, seed: u64) -> Report {
    let mut r = Report::new("hopf-axioms", h.name());
    let alpha = h.alphabet().clone();
    for (rel, rule) in h.alg.relations().iter().zip(h.rs().rules()) {
        let lhs = alpha.fmt_word(&rule.lhs);
        let d = h.coproduct(rel);
        r.check(format!("coproduct respects {lhs} -> {}", rule.rhs), d.is_zero(), || d.to_string());
        let e = h.counit(rel);
        r.check(format!("counit respects {lhs} -> {}", rule.rhs), e.is_zero(), || e.to_string());
        let s = h.antipode(rel);
        r.check(format!("antipode respects {lhs} -> {}", rule.rhs), s.is_zero(), || s.to_string());
    }
    for g in 0..alpha.len() as Gen {
        let x = NcPoly::word(&alpha, &[g]);
        law_checks(h, &mut r, &x, alpha.name(g));
        let es = h.counit(&h.antipode(&x));
        r.check(
            format!("counit of antipode on {}", alpha.name(g)),
            es == *h.eps_gen(g),
            || format!("{} vs {}", es, h.eps_gen(g)),
        );
        let ac = h.antipode_anti_coalgebra_defect(&x);
        r.check(
            format!("(S (x) S) Delta = Delta^op S on {}", alpha.name(g)),
            ac.is_zero(),
            || ac.to_string(),
        );
    }
    let s1 = h.antipode(&NcPoly::<Coef>::one(&alpha));
    r.check("S(1) = 1", s1 == NcPoly::<Coef>::one(&alpha), || s1.to_string());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = None;
    for _ in 0..spot {
        let len = rng.gen_range(0..=spot_degree);
        let w: Word = (0..len).map(|_| rng.gen_range(0..alpha.len()) as Gen).collect();
        let x = h.rs().normal_form(&NcPoly::word(&alpha, &w));
        let mut sub = Report::new("", "");
        law_checks(h, &mut sub, &x, &alpha.fmt_word(&w));
        let first = sub.failures().next().map(|f| format!("{}: {}", f.name, f.witness.clone().unwrap_or_default()));
        if first.is_some() {
            bad = first;
            break;
        }
    }
    r.record(format!("spot checks on {spot} random monomials"), bad);
    r.bounded(spot_degree as u32);
    r
}

fn law_checks(h: &HopfPresentation, r: &mut Report, x: &NcPoly<Coef>, label: &str) {
    let c = h.coassociativity_defect(x);
    r.check(format!("coassociativity on {label}"), c.is_zero(), || c.to_string());
    let (l, rr) = h.counit_defect(x);
    r.check(format!("left counit law on {label}"), l.is_zero(), || l.to_string());
    r.check(format!("right counit law on {label}"), rr.is_zero(), || rr.to_string());
    let (l, rr) = h.antipode_defect(x);
    r.check(format!("antipode law S*id on {label}"), l.is_zero(), || l.to_string());
    r.check(format!("antipode law id*S on {label}"), rr.is_zero(), || rr.to_string());
}

/// Linear map given by its values on words.
#[derive(Clone, Debug)]
pub struct LinMap {
    pub table: BTreeMap<Word, NcPoly<Coef>>,
}

impl LinMap {
    /// Tabulate `f` on the irreducible words of degree at most `degree`.
    pub fn tabulate(h: &HopfPresentation, degree: usize, f: impl Fn(&NcPoly<Coef>) -> NcPoly<Coef>) -> LinMap {
        let table = h
            .rs()
            .irreducible_words(degree)
            .into_iter()
            .map(|w| {
                let v = f(&NcPoly::word(h.alphabet(), &w));
                (w, v)
            })
            .collect();
        LinMap { table }
    }

    pub fn apply(&self, x: &NcPoly<Coef>, alpha: &Arc<Alphabet>) -> Result<NcPoly<Coef>> {
        let mut out = NcPoly::zero(alpha);
        for (w, c) in x.terms() {
            let v = self
                .table
                .get(w)
                .ok_or_else(|| Error::UndefinedMapValue(alpha.fmt_word(w)))?;
            out.add_scaled(v, c);
        }
        Ok(out)
    }
}

/// `(f * g)(x) = Σ f(x1) g(x2)`, tabulated on the domain of `f`.
pub fn convolve(f: &LinMap, g: &LinMap, h: &HopfPresentation) -> Result<LinMap> {
    let alpha = h.alphabet();
    let mut table = BTreeMap::new();
    for w in f.table.keys() {
        let d = h.delta_word(w);
        let mut acc = NcPoly::zero(alpha);
        for (legs, c) in d.terms() {
            let a = f.apply(&NcPoly::word(alpha, &legs[0]), alpha)?;
            let b = g.apply(&NcPoly::word(alpha, &legs[1]), alpha)?;
            acc.add_scaled(&h.rs().mul(&a, &b), c);
        }
        table.insert(w.clone(), acc);
    }
    Ok(LinMap { table })
}

/// Image of `x` under the algebra map sending generator `g` to `images[g]`,
/// normalized in `target`.
pub fn substitute(x: &NcPoly<Coef>, images: &[NcPoly<Coef>], target: &RewriteSystem) -> NcPoly<Coef> {
    let mut out = NcPoly::zero(target.alphabet());
    for (w, c) in x.terms() {
        let mut acc = NcPoly::one(target.alphabet());
        for &g in w.iter() {
            acc = target.mul(&acc, &images[g as usize]);
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// Checks that generator images define a Hopf morphism `H -> H'`.
pub fn check_hopf_morphism(images: &[NcPoly<Coef>], h: &HopfPresentation, h2: &HopfPresentation) -> Report {
    let mut r = Report::new("hopf-morphism", &format!("{} -> {}", h.name(), h2.name()));
    let alpha = h.alphabet();
    if images.len() != alpha.len() {
        r.fail("generator images", format!("expected {} images, got {}", alpha.len(), images.len()));
        return r;
    }
    let tgt = h2.rs();
    for (rel, rule) in h.alg.relations().iter().zip(h.rs().rules()) {
        let v = substitute(rel, images, tgt);
        r.check(format!("relation {} maps to 0", alpha.fmt_word(&rule.lhs)), v.is_zero(), || v.to_string());
    }
    let a2 = [h2.alphabet().clone(), h2.alphabet().clone()];
    for g in 0..alpha.len() as Gen {
        let name = alpha.name(g);
        let fg = &images[g as usize];
        let lhs = h2.coproduct(fg);
        let rhs = h
            .delta_gen(g)
            .expand_leg(0, &a2[..1], |w| {
                Ok::<_, Error>(TensorElem::pure(&[&substitute(&NcPoly::word(alpha, w), images, tgt)]))
            })
            .unwrap()
            .expand_leg(1, &a2[..1], |w| {
                Ok::<_, Error>(TensorElem::pure(&[&substitute(&NcPoly::word(alpha, w), images, tgt)]))
            })
            .unwrap();
        let d = lhs.minus(&rhs);
        r.check(format!("coproduct compatible on {name}"), d.is_zero(), || d.to_string());
        let e = h2.counit(fg);
        r.check(format!("counit compatible on {name}"), e == *h.eps_gen(g), || {
            format!("{} vs {}", e, h.eps_gen(g))
        });
        let s = h2.antipode(fg).minus(&substitute(h.antipode_gen(g), images, tgt));
        r.check(format!("antipode compatible on {name}"), s.is_zero(), || s.to_string());
    }
    r
}

pub type Matrix = Vec<Vec<Coef>>;

pub fn mat_identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Coef::one() } else { Coef::zero() }).collect())
        .collect()
}

pub fn mat_add_scaled(a: &mut Matrix, b: &Matrix, c: &Coef) {
    for (ra, rb) in a.iter_mut().zip(b) {
        for (x, y) in ra.iter_mut().zip(rb) {
            *x = &*x + &(y * c);
        }
    }
}

/// Value of `x` under the matrix representation `rho`.
pub fn eval_matrix(x: &NcPoly<Coef>, rho: &[Matrix]) -> Matrix {
    let n = rho.first().map_or(0, |m| m.len());
    let mut out = vec![vec![Coef::zero(); n]; n];
    for (w, c) in x.terms() {
        let mut m = mat_identity(n);
        for &g in w.iter() {
            m = crate::linalg::mat_mul(&m, &rho[g as usize]);
        }
        mat_add_scaled(&mut out, &m, c);
    }
    out
}

fn fmt_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Every relation of `h` must evaluate to the zero matrix.
pub fn check_matrix_rep(rho: &[Matrix], alg: &Algebra) -> Result<Report> {
    let alpha = alg.alphabet();
    if rho.len() != alpha.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} matrices for {} generators",
            rho.len(),
            alpha.len()
        )));
    }
    let n = rho[0].len();
    if rho.iter().any(|m| m.len() != n || m.iter().any(|row| row.len() != n)) {
        return Err(Error::DimensionMismatch("matrices must be square of equal size".into()));
    }
    let mut r = Report::new("matrix-rep", &alg.name);
    for (rel, rule) in alg.relations().iter().zip(alg.rs.rules()) {
        let m = eval_matrix(rel, rho);
        let zero = m.iter().flatten().all(|c| c.is_zero());
        r.check(format!("relation {} -> {}", alpha.fmt_word(&rule.lhs), rule.rhs), zero, || {
            fmt_matrix(&m)
        });
    }
    Ok(r)
}

#[cfg(test)]
mod tests;
