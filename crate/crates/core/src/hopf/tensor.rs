use crate::ncalg::{Alphabet, NcPoly, RewriteSystem, Word};
use crate::scalar::{Coef, Scalar};
use smallvec::SmallVec;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub type Legs = SmallVec<[Word; 3]>;

/// Element of a tensor product of presented algebras, keyed by tuples of
/// words. Zero legs is a scalar; two legs is the usual `A (x) B`.
#[derive(Clone)]
pub struct TensorElem<C> {
    alphas: Vec<Arc<Alphabet>>,
    terms: BTreeMap<Legs, C>,
}

impl<C: Scalar> TensorElem<C> {
    pub fn zero(alphas: &[Arc<Alphabet>]) -> Self {
        TensorElem {
            alphas: alphas.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn basic(alphas: &[Arc<Alphabet>], legs: Legs, c: C) -> Self {
        let mut t = TensorElem::zero(alphas);
        t.add_term(legs, &c);
        t
    }

    pub fn one(alphas: &[Arc<Alphabet>]) -> Self {
        let legs = alphas.iter().map(|_| Word::new()).collect();
        TensorElem::basic(alphas, legs, C::one())
    }

    pub fn scalar(c: C) -> Self {
        TensorElem::basic(&[], Legs::new(), c)
    }

    /// `p_1 (x) p_2 (x) ...`
    pub fn pure(polys: &[&NcPoly<C>]) -> Self {
        let alphas: Vec<_> = polys.iter().map(|p| p.alphabet().clone()).collect();
        let mut acc = TensorElem::basic(&[], Legs::new(), C::one());
        for p in polys {
            let mut next = BTreeMap::new();
            for (legs, c) in &acc.terms {
                for (w, d) in p.terms() {
                    let mut l = legs.clone();
                    l.push(w.clone());
                    add_into(&mut next, l, c.times(d));
                }
            }
            acc.terms = next;
        }
        acc.alphas = alphas;
        acc
    }

    pub fn alphabets(&self) -> &[Arc<Alphabet>] {
        &self.alphas
    }

    pub fn n_legs(&self) -> usize {
        self.alphas.len()
    }

    pub fn terms(&self) -> &BTreeMap<Legs, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, legs: &[Word]) -> C {
        self.terms
            .get(legs)
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn as_scalar(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (l, c) = self.terms.iter().next().unwrap();
                l.iter().all(|w| w.is_empty()).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, legs: Legs, c: &C) {
        add_into(&mut self.terms, legs, c.clone());
    }

    pub fn add_scaled(&mut self, o: &TensorElem<C>, c: &C) {
        for (l, d) in &o.terms {
            add_into(&mut self.terms, l.clone(), d.times(c));
        }
    }

    pub fn add_scaled_coef(&mut self, o: &TensorElem<Coef>, c: &C) {
        for (l, d) in &o.terms {
            add_into(&mut self.terms, l.clone(), c.scale_coef(d));
        }
    }

    pub fn plus(&self, o: &TensorElem<C>) -> TensorElem<C> {
        let mut r = self.clone();
        r.add_scaled(o, &C::one());
        r
    }

    pub fn minus(&self, o: &TensorElem<C>) -> TensorElem<C> {
        let mut r = self.clone();
        r.add_scaled(o, &C::one().negated());
        r
    }

    pub fn scale(&self, c: &C) -> TensorElem<C> {
        let mut r = TensorElem::zero(&self.alphas);
        r.add_scaled(self, c);
        r
    }

    /// Leg-wise product, each leg normalized in its rewrite system.
    pub fn mul(&self, o: &TensorElem<C>, rs: &[&RewriteSystem]) -> TensorElem<C> {
        assert_eq!(self.alphas.len(), o.alphas.len(), "leg count mismatch");
        let mut out = TensorElem::zero(&self.alphas);
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                let cd = c.times(d);
                let legs: Vec<Word> = a
                    .iter()
                    .zip(b.iter())
                    .map(|(u, v)| {
                        let mut w = u.clone();
                        w.extend_from_slice(v);
                        w
                    })
                    .collect();
                expand_nf(&mut out.terms, &legs, rs, &cd);
            }
        }
        out
    }

    pub fn normalize(&self, rs: &[&RewriteSystem]) -> TensorElem<C> {
        let mut out = TensorElem::zero(&self.alphas);
        for (a, c) in &self.terms {
            let legs: Vec<Word> = a.to_vec();
            expand_nf(&mut out.terms, &legs, rs, c);
        }
        out
    }

    /// Exchange the first two legs.
    pub fn swap(&self) -> TensorElem<C> {
        let mut alphas = self.alphas.clone();
        alphas.swap(0, 1);
        let mut out = TensorElem::zero(&alphas);
        for (l, c) in &self.terms {
            let mut l = l.clone();
            l.swap(0, 1);
            out.terms.insert(l, c.clone());
        }
        out
    }

    /// Replace leg `i` by the tensor `f(word)`; the legs of `f`'s value are
    /// spliced in at position `i`.
    pub fn expand_leg<E>(
        &self,
        i: usize,
        new_alphas: &[Arc<Alphabet>],
        mut f: impl FnMut(&Word) -> Result<TensorElem<Coef>, E>,
    ) -> Result<TensorElem<C>, E> {
        let mut alphas = self.alphas[..i].to_vec();
        alphas.extend_from_slice(new_alphas);
        alphas.extend_from_slice(&self.alphas[i + 1..]);
        let mut out = TensorElem::zero(&alphas);
        for (legs, c) in &self.terms {
            let img = f(&legs[i])?;
            for (mid, d) in &img.terms {
                let mut l: Legs = legs[..i].iter().cloned().collect();
                l.extend(mid.iter().cloned());
                l.extend(legs[i + 1..].iter().cloned());
                add_into(&mut out.terms, l, c.scale_coef(d));
            }
        }
        Ok(out)
    }

    /// Multiply all legs together in order (all legs in the same algebra).
    pub fn contract(&self, rs: &RewriteSystem) -> NcPoly<C> {
        let mut out = NcPoly::zero(rs.alphabet());
        for (legs, c) in &self.terms {
            let w: Word = legs.iter().flat_map(|w| w.iter().copied()).collect();
            for (v, d) in rs.nf_word(&w).terms() {
                out.add_term(v.clone(), &c.scale_coef(d));
            }
        }
        out
    }

    pub fn map_coefs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> TensorElem<D> {
        let mut out = TensorElem::zero(&self.alphas);
        for (l, c) in &self.terms {
            add_into(&mut out.terms, l.clone(), f(c));
        }
        out
    }
}

impl TensorElem<Coef> {
    pub fn lift<C: Scalar>(&self) -> TensorElem<C> {
        self.map_coefs(|c| C::from_coef(c.clone()))
    }
}

fn add_into<C: Scalar>(m: &mut BTreeMap<Legs, C>, l: Legs, c: C) {
    if c.is_zero() {
        return;
    }
    match m.entry(l) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().plus(&c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

fn expand_nf<C: Scalar>(out: &mut BTreeMap<Legs, C>, legs: &[Word], rs: &[&RewriteSystem], c: &C) {
    let mut acc: Vec<(Legs, C)> = vec![(Legs::new(), c.clone())];
    for (w, r) in legs.iter().zip(rs.iter()) {
        let nf = r.nf_word(w);
        let mut next = Vec::with_capacity(acc.len() * nf.len());
        for (l, a) in &acc {
            for (v, d) in nf.terms() {
                let mut l2 = l.clone();
                l2.push(v.clone());
                next.push((l2, a.scale_coef(d)));
            }
        }
        acc = next;
    }
    for (l, a) in acc {
        add_into(out, l, a);
    }
}

impl<C: Scalar> PartialEq for TensorElem<C> {
    fn eq(&self, o: &Self) -> bool {
        self.terms == o.terms
    }
}

impl<C: Scalar> fmt::Display for TensorElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphas = &self.alphas;
        crate::ncalg::fmt_terms(
            f,
            self.terms.iter().rev().map(|(l, c)| {
                let s = l
                    .iter()
                    .zip(alphas.iter())
                    .map(|(w, a)| a.fmt_word(w))
                    .collect::<Vec<_>>()
                    .join(" (x) ");
                (if l.is_empty() { "1".to_string() } else { s }, c)
            }),
        )
    }
}

impl<C: Scalar> fmt::Debug for TensorElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
