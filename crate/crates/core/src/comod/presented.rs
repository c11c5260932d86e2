use crate::catalog::{self, env_for, parse_tensor2};
use crate::error::{Error, Result};
use crate::hopf::{check_hopf_morphism, substitute, Algebra, HopfPresentation, Legs, TensorElem};
use crate::linalg::{kernel, SparseVec};
use crate::ncalg::{Alphabet, Gen, NcPoly, RewriteSystem, Word};
use crate::report::Report;
use crate::scalar::Coef;
use parking_lot::Mutex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::sync::Arc;

/// Coaction of a presented Hopf algebra on a presented algebra, given on generators.
pub struct PresentedCoaction {
    pub name: String,
    pub a: Algebra,
    pub h: HopfPresentation,
    gens: Vec<TensorElem<Coef>>,
    cache: Mutex<HashMap<Word, Arc<TensorElem<Coef>>>>,
}

impl std::fmt::Debug for PresentedCoaction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PresentedCoaction").field("name", &self.name).finish()
    }
}

impl PresentedCoaction {
    pub fn new(name: &str, a: Algebra, h: HopfPresentation, gens: Vec<TensorElem<Coef>>) -> Result<PresentedCoaction> {
        if gens.len() != a.alphabet().len() {
            return Err(Error::DimensionMismatch(format!(
                "coaction must be given on all {} generators",
                a.alphabet().len()
            )));
        }
        let gens = gens.iter().map(|t| t.normalize(&[&a.rs, h.rs()])).collect();
        Ok(PresentedCoaction { name: name.into(), a, h, gens, cache: Mutex::new(HashMap::new()) })
    }

    /// Values on generators as `A (x) H` pair lists in the relation grammar.
    pub fn parse(name: &str, a: Algebra, h: HopfPresentation, values: &[(&str, &[(&str, &str)])]) -> Result<PresentedCoaction> {
        let left = env_for(a.alphabet(), a.q.as_ref());
        let right = env_for(h.alphabet(), h.alg.q.as_ref());
        let mut gens = vec![None; a.alphabet().len()];
        for (g, terms) in values {
            let i = a.alphabet().gen(g)? as usize;
            let pairs: Vec<(String, String)> = terms.iter().map(|(l, r)| (l.to_string(), r.to_string())).collect();
            gens[i] = Some(parse_tensor2(&left, &right, &pairs)?);
        }
        let gens = gens
            .into_iter()
            .enumerate()
            .map(|(i, t)| t.ok_or_else(|| Error::MissingAssignment(a.alphabet().name(i as Gen).to_string())))
            .collect::<Result<Vec<_>>>()?;
        PresentedCoaction::new(name, a, h, gens)
    }

    /// `δ(X) = X (x) a + Y (x) c`, `δ(Y) = X (x) b + Y (x) d`.
    pub fn quantum_plane() -> Result<PresentedCoaction> {
        PresentedCoaction::parse(
            "qplane-coaction",
            catalog::algebra("qplane")?,
            catalog::hopf("SLq2")?,
            &[("X", &[("X", "a"), ("Y", "c")]), ("Y", &[("X", "b"), ("Y", "d")])],
        )
    }

    fn alphas(&self) -> [Arc<Alphabet>; 2] {
        [self.a.alphabet().clone(), self.h.alphabet().clone()]
    }

    pub fn coact_gen(&self, g: Gen) -> &TensorElem<Coef> {
        &self.gens[g as usize]
    }

    pub fn coact_word(&self, w: &[Gen]) -> Arc<TensorElem<Coef>> {
        if let Some(t) = self.cache.lock().get(w) {
            return t.clone();
        }
        let t = match w.split_last() {
            None => TensorElem::one(&self.alphas()),
            Some((&last, prefix)) => self.coact_word(prefix).mul(&self.gens[last as usize], &[&self.a.rs, self.h.rs()]),
        };
        let t = Arc::new(t);
        self.cache.lock().insert(w.iter().copied().collect(), t.clone());
        t
    }

    pub fn coact(&self, x: &NcPoly<Coef>) -> TensorElem<Coef> {
        let mut out = TensorElem::zero(&self.alphas());
        for (w, c) in x.terms() {
            out.add_scaled(&self.coact_word(w), c);
        }
        out
    }

    /// `δ(lhs) - δ(rhs)` for every defining relation of `A`.
    pub fn relation_defects(&self) -> Vec<(String, TensorElem<Coef>)> {
        let alpha = self.a.alphabet();
        self.a
            .rs
            .rules()
            .iter()
            .map(|r| {
                let name = format!("{} -> {}", alpha.fmt_word(&r.lhs), r.rhs);
                (name, self.coact_word(&r.lhs).minus(&self.coact(&r.rhs)))
            })
            .collect()
    }

    pub fn coassociativity_defect(&self, x: &NcPoly<Coef>) -> TensorElem<Coef> {
        let d = self.coact(x);
        let hh = [self.h.alphabet().clone(), self.h.alphabet().clone()];
        let left = d
            .expand_leg(0, &self.alphas(), |w| Ok::<_, Error>((*self.coact_word(w)).clone()))
            .unwrap();
        let right = d
            .expand_leg(1, &hh, |w| Ok::<_, Error>((*self.h.delta_word(w)).clone()))
            .unwrap();
        left.minus(&right)
    }

    pub fn counit_defect(&self, x: &NcPoly<Coef>) -> NcPoly<Coef> {
        let d = self.coact(x);
        let mut out = NcPoly::zero(self.a.alphabet());
        for (legs, c) in d.terms() {
            out.add_term(legs[0].clone(), &(c * &self.h.counit_word(&legs[1])));
        }
        out.minus(&self.a.rs.normal_form(x))
    }

    /// Relations map to zero, coassociativity and counitarity on generators,
    /// and random spot checks on monomials up to `spot_degree`.
    pub fn check_comodule(&self, spot_degree: usize, seed: u64) -> Report {
        let mut r = Report::new("comodule-algebra", &self.name);
        for (name, d) in self.relation_defects() {
            r.check(format!("relation {name} maps to zero"), d.is_zero(), || d.to_string());
        }
        let alpha = self.a.alphabet().clone();
        for g in 0..alpha.len() as Gen {
            let x = NcPoly::word(&alpha, &[g]);
            let c = self.coassociativity_defect(&x);
            r.check(format!("coassociativity on {}", alpha.name(g)), c.is_zero(), || c.to_string());
            let e = self.counit_defect(&x);
            r.check(format!("counitarity on {}", alpha.name(g)), e.is_zero(), || e.to_string());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut bad = None;
        for _ in 0..20 {
            if alpha.is_empty() {
                break;
            }
            let len = rng.gen_range(0..=spot_degree);
            let w: Word = (0..len).map(|_| rng.gen_range(0..alpha.len()) as Gen).collect();
            let x = self.a.rs.normal_form(&NcPoly::word(&alpha, &w));
            if !self.coassociativity_defect(&x).is_zero() || !self.counit_defect(&x).is_zero() {
                bad = Some(alpha.fmt_word(&w));
                break;
            }
        }
        r.record("spot checks on random monomials", bad);
        r.bounded(spot_degree as u32);
        r
    }

    /// Basis of the coinvariants among normal-form words of length at most `degree`.
    pub fn coinvariants(&self, degree: usize) -> Vec<NcPoly<Coef>> {
        let words = self.a.rs.irreducible_words(degree);
        let mut cols: HashMap<Legs, usize> = HashMap::new();
        let one_h = Word::new();
        let rows: Vec<SparseVec<Coef>> = words
            .iter()
            .map(|w| {
                let mut t = (*self.coact_word(w)).clone();
                let mut legs = Legs::new();
                legs.push(w.clone());
                legs.push(one_h.clone());
                t.add_term(legs, &Coef::int(-1));
                let mut row: Vec<(usize, Coef)> = t
                    .terms()
                    .iter()
                    .map(|(l, c)| {
                        let k = cols.len();
                        (*cols.entry(l.clone()).or_insert(k), c.clone())
                    })
                    .collect();
                row.sort_by_key(|(i, _)| *i);
                row
            })
            .collect();
        kernel(&rows)
            .into_iter()
            .map(|v| {
                NcPoly::from_terms(
                    self.a.alphabet(),
                    words.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(w, c)| (w.clone(), c)),
                )
            })
            .collect()
    }
}

/// The ground field as a Hopf algebra with no generators.
pub fn trivial_hopf(like: &HopfPresentation) -> HopfPresentation {
    let alpha = Alphabet::new::<&str>(&[]).expect("empty alphabet");
    let rs = RewriteSystem::new(&alpha, vec![]).expect("no rules");
    let alg = Algebra { name: "k".into(), ring: like.alg.ring.clone(), q: like.alg.q.clone(), rs: Arc::new(rs) };
    HopfPresentation::new(alg, vec![], vec![], vec![]).expect("trivial Hopf algebra")
}

/// Coinvariants of `δ = (id (x) π) ∘ Δ : H → H (x) H̄` up to `degree`, where
/// `π` sends the generators of `h` to `images` in `hbar`.
pub fn homogeneous_coinvariants(
    h: &HopfPresentation,
    hbar: &HopfPresentation,
    images: &[NcPoly<Coef>],
    degree: usize,
) -> Result<Vec<NcPoly<Coef>>> {
    let rep = check_hopf_morphism(images, h, hbar);
    if let Some(f) = rep.failures().next() {
        return Err(Error::CandidateRejected(format!("{}: {}", f.name, f.witness.clone().unwrap_or_default())));
    }
    let target = [hbar.alphabet().clone()];
    let gens = (0..h.alphabet().len() as Gen)
        .map(|g| {
            h.delta_gen(g).expand_leg(1, &target, |w| {
                let p = substitute(&NcPoly::word(h.alphabet(), w), images, hbar.rs());
                Ok::<_, Error>(TensorElem::pure(&[&p]))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let c = PresentedCoaction::new(&format!("{} over {}", h.name(), hbar.name()), h.alg.clone(), hbar.clone(), gens)?;
    Ok(c.coinvariants(degree))
}
