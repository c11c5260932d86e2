//! The variables `X_x = Σ t_{x(1)} x(2)` of the generic extension of a
//! presented Hopf algebra, and exact checks of identities between them.

use super::GammaGrading;
use crate::catalog;
use crate::error::{Error, Result};
use crate::findim::FiniteGroup;
use crate::hopf::HopfPresentation;
use crate::ncalg::{parse_expr, Alphabet, Gen, NcPoly, ParseEnv, Word};
use crate::report::Report;
use crate::scalar::{Coef, SymTable, TPoly};
use std::sync::Arc;

/// Parameter symbols `t_1, t_E, t_F, t_K, t_Kinv`; the group-like ones are invertible.
pub fn uq_symbols() -> Arc<SymTable> {
    SymTable::new(&[("t_1", true), ("t_E", false), ("t_F", false), ("t_K", true), ("t_Kinv", true)]).unwrap()
}

/// `X_w = Σ t_{w(1)} w(2)` with `t_{w(1)}` supplied by `resolve`.
pub fn x_var(h: &HopfPresentation, w: &[Gen], resolve: &dyn Fn(&Word) -> Option<TPoly>) -> Result<NcPoly<TPoly>> {
    let alpha = h.alphabet();
    let mut out = NcPoly::zero(alpha);
    for (legs, c) in h.delta_word(w).terms() {
        let t = resolve(&legs[0])
            .ok_or_else(|| Error::InvalidArgument(format!("no parameter symbol for {}", alpha.fmt_word(&legs[0]))))?;
        out.add_term(legs[1].clone(), &t.scale(c));
    }
    Ok(out)
}

/// An identity `x_side = h_side`: the left side is evaluated on X-variables
/// (word `g1...gk` as `X_g1 ... X_gk`, a scalar `c` as `c X_1`), the right
/// side directly in `H` with parameter coefficients.
#[derive(Clone, Debug)]
pub struct Identity {
    pub name: String,
    pub x_side: String,
    pub h_side: String,
}

impl Identity {
    pub fn new(name: &str, x_side: &str, h_side: &str) -> Identity {
        Identity { name: name.into(), x_side: x_side.into(), h_side: h_side.into() }
    }
}

/// Evaluation context over a presented Hopf algebra. Templates are parsed
/// over the generators of `H` plus `I`, which stands for `X_1`; a scalar
/// term `c` of a template also denotes `c X_1`.
pub struct XContext {
    pub h: HopfPresentation,
    pub syms: Arc<SymTable>,
    pub env: ParseEnv<TPoly>,
    pub env_h: ParseEnv<TPoly>,
    pub x_gen: Vec<NcPoly<TPoly>>,
    pub x_one: NcPoly<TPoly>,
}

/// Name of the extra template generator for `X_1`.
pub const X_ONE: &str = "I";

impl XContext {
    /// `scalars` extends the parser with named parameter values.
    pub fn new(
        h: HopfPresentation,
        syms: Arc<SymTable>,
        scalars: &[(&str, TPoly)],
        resolve: &dyn Fn(&Word) -> Option<TPoly>,
    ) -> Result<XContext> {
        let q = h.alg.q.clone().or_else(|| h.alg.ring.q());
        let mut names = h.alphabet().names().to_vec();
        names.push(X_ONE.to_string());
        let make = |alpha: &Arc<Alphabet>| {
            let mut env = ParseEnv::new(alpha);
            if let Some(q) = &q {
                env = env.with_scalar("q", TPoly::constant(q.clone()));
            }
            for (n, v) in scalars {
                env = env.with_scalar(n, v.clone());
            }
            env
        };
        let env = make(&Alphabet::new(&names)?);
        let env_h = make(h.alphabet());
        let x_gen = (0..h.alphabet().len() as Gen).map(|g| x_var(&h, &[g], resolve)).collect::<Result<Vec<_>>>()?;
        let x_one = x_var(&h, &[], resolve)?;
        Ok(XContext { h, syms, env, env_h, x_gen, x_one })
    }

    /// Template as an element of the free algebra with parameter coefficients.
    pub fn template(&self, s: &str) -> Result<NcPoly<TPoly>> {
        parse_expr(&self.env, s)
    }

    /// Value of a template on X-variables, in normal form.
    pub fn eval_x(&self, s: &str) -> Result<NcPoly<TPoly>> {
        let p = self.template(s)?;
        let rs = self.h.rs();
        let mut out = NcPoly::zero(self.h.alphabet());
        for (w, c) in p.terms() {
            let x = |g: Gen| self.x_gen.get(g as usize).unwrap_or(&self.x_one);
            let v = match w.split_first() {
                None => self.x_one.clone(),
                Some((&g, rest)) => rest.iter().fold(x(g).clone(), |acc, &g| rs.mul(&acc, x(g))),
            };
            out.add_scaled(&v, c);
        }
        Ok(out)
    }

    /// Value of a template directly in `H`.
    pub fn eval_h(&self, s: &str) -> Result<NcPoly<TPoly>> {
        Ok(self.h.rs().normal_form(&parse_expr(&self.env_h, s)?))
    }

    /// Records `x_side - h_side` verbatim.
    pub fn check_identity(&self, r: &mut Report, id: &Identity) -> Result<String> {
        let d = self.eval_x(&id.x_side)?.minus(&self.eval_h(&id.h_side)?);
        let s = d.to_string();
        r.check(id.name.clone(), d.is_zero(), || format!("residual {s}"));
        Ok(s)
    }

    /// Every coefficient monomial of the template has degree zero.
    pub fn coefficients_degree_zero(&self, s: &str, grading: &GammaGrading) -> Result<Option<String>> {
        for (w, c) in self.template(s)?.terms() {
            if !grading.is_degree_zero(c) {
                return Ok(Some(format!("coefficient {c} of {}", self.h.alphabet().fmt_word(w))));
            }
        }
        Ok(None)
    }

    /// Coefficients specialized at `assign`, kept in the free algebra on the
    /// generators of `H`; each `I` contributes the value of `X_1`.
    pub fn specialize(&self, s: &str, assign: &[Option<Coef>]) -> Result<NcPoly<Coef>> {
        let one = self.x_one.coeff(&[]).specialize(assign, None)?;
        let n = self.h.alphabet().len() as Gen;
        let mut out = NcPoly::zero(self.h.alphabet());
        for (w, c) in self.template(s)?.terms() {
            let k = w.iter().filter(|&&g| g == n).count();
            let c = c.specialize(assign, None)? * one.pow(k as i32).expect("nonzero");
            out.add_term(w.iter().copied().filter(|&g| g != n).collect(), &c);
        }
        Ok(out)
    }
}

/// Outcome of an X-variable verification: the report and each residual verbatim.
#[derive(Clone, Debug)]
pub struct XOutcome {
    pub report: Report,
    pub residuals: Vec<(String, String)>,
}

/// Displayed relations, as `(name, template)`; each template should vanish on X-variables.
pub fn thm812_relations() -> Vec<(&'static str, &'static str)> {
    vec![
        ("K*Kinv", "K*Kinv - t_K*t_Kinv/t_1"),
        ("Kinv*K", "Kinv*K - t_K*t_Kinv/t_1"),
        ("K*E", "K*E - q^2*E*K - (1 - q^2)*t_E/t_K*K*K"),
        ("K*F", "K*F - q^-2*F*K - (1 - q^-2)*t_F*K"),
        ("E*F - F*E", "E*F - F*E - t_1*(t_Kinv/t_K*K - Kinv)/(q - q^-1) - (q^-2 - 1)*(t_E/t_K*F*K - t_E*t_F/t_K*K)"),
    ]
}

fn thm812_intermediates() -> Vec<Identity> {
    vec![
        Identity::new("X_1", "1", "t_1"),
        Identity::new("X_K X_Kinv", "K*Kinv", "t_K*t_Kinv"),
        Identity::new("X_K X_E - q^2 X_E X_K", "K*E - q^2*E*K", "(1 - q^2)*t_E*t_K*K*K"),
        Identity::new("X_K^2", "K*K", "t_K^2*K*K"),
        Identity::new("X_E X_F - X_F X_E in E, F", "E*F - F*E", "t_1*t_Kinv*(E*F - F*E) + (q^-2 - 1)*t_E*t_Kinv*F*K"),
        Identity::new(
            "X_E X_F - X_F X_E in K",
            "E*F - F*E",
            "t_1*t_Kinv*(K - Kinv)/(q - q^-1) + (q^-2 - 1)*t_E*t_Kinv*F*K",
        ),
        Identity::new("X_F X_K", "F*K", "t_K*t_Kinv*F*K + t_F*t_K*K"),
        Identity::new("t_E t_Kinv FK", "t_E/t_K*F*K - t_E*t_F/t_K*K", "t_E*t_Kinv*F*K"),
    ]
}

fn uq_scalars(syms: &Arc<SymTable>) -> Vec<(&'static str, TPoly)> {
    ["t_1", "t_E", "t_F", "t_K", "t_Kinv"]
        .iter()
        .enumerate()
        .map(|(i, n)| (*n, TPoly::sym(syms, i as u16)))
        .collect()
}

/// Assignment `t_1, t_K, t_Kinv -> 1`, `t_E, t_F -> 0`.
fn classical_point() -> Vec<Option<Coef>> {
    vec![Some(Coef::one()), Some(Coef::zero()), Some(Coef::zero()), Some(Coef::one()), Some(Coef::one())]
}

/// Degrees of `t_1, t_E, t_F, t_K, t_Kinv` for the formal quantum group.
pub fn uq_symbol_grading() -> Result<GammaGrading> {
    let h = catalog::hopf("Uq")?;
    let words: Vec<Word> = vec![Word::new(), word(&h, &["E"]), word(&h, &["F"]), word(&h, &["K"]), word(&h, &["Kinv"])];
    uq_grading(&h, &words)
}

/// Symbol degrees in `Γ = ℤ/2` read off from the presented abelianization.
fn uq_grading(h: &HopfPresentation, words: &[Word]) -> Result<GammaGrading> {
    let ab = super::hab_presented(h)?;
    let degree = words.iter().map(|w| super::gamma_grading_presented(h, &ab, w)).collect::<Result<Vec<_>>>()?;
    Ok(GammaGrading { group: ab.group, degree })
}

fn word(h: &HopfPresentation, names: &[&str]) -> Word {
    h.alphabet().word(names).expect("generator")
}

/// X-variables of the formal quantum group over `t_1, t_E, t_F, t_K, t_Kinv`.
pub fn uq_context() -> Result<XContext> {
    let h = catalog::hopf("Uq")?;
    let syms = uq_symbols();
    let words: Vec<Word> = vec![Word::new(), word(&h, &["E"]), word(&h, &["F"]), word(&h, &["K"]), word(&h, &["Kinv"])];
    let s2 = syms.clone();
    let resolve = move |w: &Word| words.iter().position(|x| x == w).map(|i| TPoly::sym(&s2, i as u16));
    XContext::new(h, syms.clone(), &uq_scalars(&syms), &resolve)
}

/// Relations of the generic extension of `U_q` at formal `q`, the
/// intermediate identities of their derivation, degree-zero coefficients and
/// the classical specialization.
pub fn verify_thm812() -> Result<XOutcome> {
    let cx = uq_context()?;
    let grading = uq_symbol_grading()?;
    let mut r = Report::new("generic-relations", "Uq");
    let mut residuals = Vec::new();
    for (name, t) in thm812_relations() {
        let id = Identity::new(&format!("relation {name}"), t, "0");
        residuals.push((id.name.clone(), cx.check_identity(&mut r, &id)?));
    }
    for id in thm812_intermediates() {
        residuals.push((id.name.clone(), cx.check_identity(&mut r, &id)?));
    }
    for (name, t) in thm812_relations() {
        r.record(format!("coefficients of {name} have degree 0"), cx.coefficients_degree_zero(t, &grading)?);
    }
    let classical = [
        "K*Kinv - 1",
        "Kinv*K - 1",
        "K*E - q^2*E*K",
        "K*F - q^-2*F*K",
        "E*F - F*E - (K - Kinv)/(q - q^-1)",
    ];
    let q = cx.h.alg.ring.q();
    let env = catalog::env_for(cx.h.alphabet(), q.as_ref());
    for ((name, t), want) in thm812_relations().into_iter().zip(classical) {
        let got = cx.specialize(t, &classical_point())?;
        let want = parse_expr(&env, want)?;
        r.check(format!("{name} specializes to the classical relation"), got == want, || format!("{got}"));
    }
    Ok(XOutcome { report: r, residuals })
}

/// `∗`-power relations of the generic extension of `u_d`: `K^e = t_K^e/t_1`,
/// `(E - (t_E/t_K) K)^e = 0`, `(F - t_F/t_1)^e = 0`.
pub fn thm813_relations(e: u32) -> Vec<(String, String)> {
    vec![
        ("K^e".into(), format!("K^{e} - t_K^{e}/t_1*I")),
        ("(E - t_E/t_K K)^e".into(), format!("(E - t_E/t_K*K)^{e}")),
        ("(F - t_F/t_1)^e".into(), format!("(F - t_F/t_1*I)^{e}")),
    ]
}

/// Checks the power relations for `u_d`, their two linear intermediates, the
/// relations shared with the formal case, and the specialization to
/// `K^e - 1, E^e, F^e`. For `e = 2`, `K^(e-1) = K` so `t_Kinv` is `t_K`.
pub fn verify_thm813(d: u32) -> Result<XOutcome> {
    let h = catalog::hopf(&format!("u{d}"))?;
    let e = catalog::ud_e(d);
    if e < 2 {
        return Err(Error::InvalidArgument(format!("u{d} has e = {e}")));
    }
    let syms = uq_symbols();
    let kpow = |k: u32| -> Word { std::iter::repeat_n(word(&h, &["K"])[0], k as usize).collect() };
    let mut words: Vec<Word> = vec![Word::new(), word(&h, &["E"]), word(&h, &["F"]), kpow(1)];
    if e > 2 {
        words.push(kpow(e - 1));
    }
    let ws = words.clone();
    let s2 = syms.clone();
    let resolve = move |w: &Word| ws.iter().position(|x| x == w).map(|i| TPoly::sym(&s2, i as u16));
    let mut scalars = uq_scalars(&syms);
    if e == 2 {
        scalars[4].1 = TPoly::sym(&syms, 3);
    }
    let cx = XContext::new(h, syms.clone(), &scalars, &resolve)?;
    let mut r = Report::new("generic-power-relations", &format!("u{d}"));
    let mut residuals = Vec::new();
    for (name, t) in thm813_relations(e) {
        let id = Identity::new(&format!("relation {name}"), &t, "0");
        residuals.push((id.name.clone(), cx.check_identity(&mut r, &id)?));
    }
    for id in [
        Identity::new("X_E - (t_E/t_K) X_K", "E - t_E/t_K*K", "t_1*E"),
        Identity::new("X_F - (t_F/t_1) X_1", "F - t_F/t_1*I", "t_Kinv*F"),
    ] {
        residuals.push((id.name.clone(), cx.check_identity(&mut r, &id)?));
    }
    for (name, t) in thm812_relations() {
        let id = Identity::new(&format!("relation {name}"), t, "0");
        residuals.push((id.name.clone(), cx.check_identity(&mut r, &id)?));
    }
    let grading = {
        let ab = super::hab_presented(&cx.h)?;
        let mut degree: Vec<usize> = words
            .iter()
            .map(|w| super::gamma_grading_presented(&cx.h, &ab, w))
            .collect::<Result<Vec<_>>>()?;
        if e == 2 {
            degree.push(degree[3]);
        }
        GammaGrading { group: ab.group, degree }
    };
    for (name, t) in thm813_relations(e) {
        r.record(format!("coefficients of {name} have degree 0"), cx.coefficients_degree_zero(&t, &grading)?);
    }
    let q = cx.h.alg.ring.q();
    let env = catalog::env_for(cx.h.alphabet(), q.as_ref());
    let classical = [format!("K^{e} - 1"), format!("E^{e}"), format!("F^{e}")];
    for ((name, t), want) in thm813_relations(e).into_iter().zip(classical) {
        let got = cx.specialize(&t, &classical_point())?;
        let want = parse_expr(&env, &want)?;
        r.check(format!("{name} specializes to {want}"), got == want, || format!("{got}"));
    }
    Ok(XOutcome { report: r, residuals })
}

/// Degree of `t_{E^i F^j K^l}` in `Γ` for the formal quantum group; `l < 0` uses `Kinv`.
pub fn uq_pbw_degree(i: u32, j: u32, l: i32) -> Result<(FiniteGroup, usize)> {
    let h = catalog::hopf("Uq")?;
    let ab = super::hab_presented(&h)?;
    let alpha = h.alphabet();
    let (e, f) = (alpha.gen("E")?, alpha.gen("F")?);
    let k = alpha.gen(if l < 0 { "Kinv" } else { "K" })?;
    let mut w = Word::new();
    w.extend(std::iter::repeat_n(e, i as usize));
    w.extend(std::iter::repeat_n(f, j as usize));
    w.extend(std::iter::repeat_n(k, l.unsigned_abs() as usize));
    let deg = super::gamma_grading_presented(&h, &ab, &w)?;
    Ok((ab.group, deg))
}
