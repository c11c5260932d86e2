//! Free noncommutative polynomials, rewrite systems and normal forms.

mod parse;
mod rewrite;

pub use parse::{orient, parse_expr, parse_relation, ParseEnv};
pub use rewrite::{CriticalPair, RewriteSystem, Rule};

use crate::error::{Error, Result};
use crate::scalar::{Coef, Scalar};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub type Gen = u8;
pub type Word = SmallVec<[Gen; 12]>;

/// Ordered generator names; the order is the generator precedence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    weights: Vec<u32>,
    inverses: Vec<Option<Gen>>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Alphabet>> {
        Alphabet::weighted(names, &vec![1; names.len()])
    }

    /// Generators with explicit weights for the weighted degree order.
    pub fn weighted<S: AsRef<str>>(names: &[S], weights: &[u32]) -> Result<Arc<Alphabet>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || names[..i].contains(n) {
                return Err(Error::Parse(format!("duplicate or empty generator name `{n}`")));
            }
        }
        if names.len() > Gen::MAX as usize {
            return Err(Error::Parse("too many generators".into()));
        }
        // `Xinv` is the declared inverse of `X` when both are present.
        let inverses = names
            .iter()
            .map(|n| {
                let base = n.strip_suffix("inv")?;
                names.iter().position(|m| m == base).map(|i| i as Gen)
            })
            .collect::<Vec<_>>();
        let mut inv2 = inverses.clone();
        for (i, v) in inverses.iter().enumerate() {
            if let Some(j) = v {
                inv2[*j as usize] = Some(i as Gen);
            }
        }
        Ok(Arc::new(Alphabet {
            names,
            weights: weights.to_vec(),
            inverses: inv2,
        }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn gen(&self, name: &str) -> Result<Gen> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| i as Gen)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn inverse(&self, g: Gen) -> Option<Gen> {
        self.inverses[g as usize]
    }

    pub fn weight(&self, w: &[Gen]) -> u32 {
        w.iter().map(|&g| self.weights[g as usize]).sum()
    }

    /// Monomial order: weighted degree, then length, then lexicographic by precedence.
    pub fn cmp_words(&self, a: &[Gen], b: &[Gen]) -> Ordering {
        self.weight(a)
            .cmp(&self.weight(b))
            .then(a.len().cmp(&b.len()))
            .then_with(|| a.cmp(b))
    }

    pub fn word(&self, names: &[&str]) -> Result<Word> {
        names.iter().map(|n| self.gen(n)).collect()
    }

    /// Word written with run-length powers, e.g. `E^2*K`; `1` for the empty word.
    pub fn fmt_word(&self, w: &[Gen]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let n = self.name(w[i]);
            if j - i == 1 {
                parts.push(n.to_string());
            } else {
                parts.push(format!("{n}^{}", j - i));
            }
            i = j;
        }
        parts.join("*")
    }
}

/// Finitely supported map from words to coefficients. Words are stored
/// verbatim; normalization is explicit.
#[derive(Clone)]
pub struct NcPoly<C> {
    alpha: Arc<Alphabet>,
    terms: BTreeMap<Word, C>,
}

impl<C: Scalar> NcPoly<C> {
    pub fn zero(alpha: &Arc<Alphabet>) -> Self {
        NcPoly {
            alpha: alpha.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alpha: &Arc<Alphabet>) -> Self {
        NcPoly::constant(alpha, C::one())
    }

    pub fn constant(alpha: &Arc<Alphabet>, c: C) -> Self {
        NcPoly::term(alpha, Word::new(), c)
    }

    pub fn term(alpha: &Arc<Alphabet>, w: Word, c: C) -> Self {
        let mut p = NcPoly::zero(alpha);
        if !c.is_zero() {
            p.terms.insert(w, c);
        }
        p
    }

    pub fn word(alpha: &Arc<Alphabet>, w: &[Gen]) -> Self {
        NcPoly::term(alpha, w.iter().copied().collect(), C::one())
    }

    pub fn gen(alpha: &Arc<Alphabet>, name: &str) -> Result<Self> {
        Ok(NcPoly::word(alpha, &[alpha.gen(name)?]))
    }

    pub fn from_terms(alpha: &Arc<Alphabet>, it: impl IntoIterator<Item = (Word, C)>) -> Self {
        let mut p = NcPoly::zero(alpha);
        for (w, c) in it {
            p.add_term(w, &c);
        }
        p
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alpha
    }

    pub fn terms(&self) -> &BTreeMap<Word, C> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, C> {
        self.terms
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

    pub fn coeff(&self, w: &[Gen]) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// The scalar value when the polynomial is a multiple of the empty word.
    pub fn as_scalar(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Word::new()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().plus(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &NcPoly<C>, c: &C) {
        for (w, a) in &o.terms {
            self.add_term(w.clone(), &a.times(c));
        }
    }

    pub fn plus(&self, o: &NcPoly<C>) -> NcPoly<C> {
        let mut r = self.clone();
        for (w, a) in &o.terms {
            r.add_term(w.clone(), a);
        }
        r
    }

    pub fn minus(&self, o: &NcPoly<C>) -> NcPoly<C> {
        let mut r = self.clone();
        for (w, a) in &o.terms {
            r.add_term(w.clone(), &a.negated());
        }
        r
    }

    pub fn negated(&self) -> NcPoly<C> {
        self.scale(&C::one().negated())
    }

    pub fn scale(&self, c: &C) -> NcPoly<C> {
        let mut r = NcPoly::zero(&self.alpha);
        if c.is_zero() {
            return r;
        }
        for (w, a) in &self.terms {
            let v = a.times(c);
            if !v.is_zero() {
                r.terms.insert(w.clone(), v);
            }
        }
        r
    }

    /// Product in the free algebra (word concatenation, no reduction).
    pub fn mul_free(&self, o: &NcPoly<C>) -> NcPoly<C> {
        let mut r = NcPoly::zero(&self.alpha);
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                r.add_term(w, &a.times(b));
            }
        }
        r
    }

    pub fn map_coefs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> NcPoly<D> {
        NcPoly::from_terms(&self.alpha, self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn try_map_coefs<D: Scalar>(&self, f: impl Fn(&C) -> Result<D>) -> Result<NcPoly<D>> {
        let mut out = NcPoly::zero(&self.alpha);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Largest word in the alphabet's monomial order.
    pub fn leading(&self) -> Option<(&Word, &C)> {
        self.terms.iter().max_by(|a, b| self.alpha.cmp_words(a.0, b.0))
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Terms sorted by the monomial order, largest first.
    pub fn sorted_terms(&self) -> Vec<(&Word, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| self.alpha.cmp_words(b.0, a.0));
        v
    }
}

impl NcPoly<Coef> {
    pub fn lift<C: Scalar>(&self) -> NcPoly<C> {
        self.map_coefs(|c| C::from_coef(c.clone()))
    }
}

impl<C: Scalar> PartialEq for NcPoly<C> {
    fn eq(&self, o: &NcPoly<C>) -> bool {
        self.terms == o.terms
    }
}

/// Writes `c*word` terms joined by `+`/`-` in a form the expression parser reads back.
pub(crate) fn fmt_terms<'a, C: Scalar + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a C)>,
) -> fmt::Result {
    let mut first = true;
    for (w, c) in terms {
        let mut cs = c.to_string();
        let paren = crate::scalar::needs_parens(&cs);
        let neg = !paren && cs.starts_with('-');
        if neg {
            cs.remove(0);
        }
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let cs = if paren { format!("({cs})") } else { cs };
        match (w.as_str(), cs.as_str()) {
            ("1", _) => write!(f, "{cs}")?,
            (_, "1") => write!(f, "{w}")?,
            _ => write!(f, "{cs}*{w}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<C: Scalar> fmt::Display for NcPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alpha = self.alpha.clone();
        fmt_terms(
            f,
            self.sorted_terms()
                .into_iter()
                .map(|(w, c)| (alpha.fmt_word(w), c)),
        )
    }
}

impl<C: Scalar> fmt::Debug for NcPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_pairs_and_order() {
        let a = Alphabet::new(&["E", "F", "K", "Kinv"]).unwrap();
        assert_eq!(a.inverse(2), Some(3));
        assert_eq!(a.inverse(3), Some(2));
        assert_eq!(a.inverse(0), None);
        let ek = a.word(&["E", "K"]).unwrap();
        let ke = a.word(&["K", "E"]).unwrap();
        assert_eq!(a.cmp_words(&ek, &ke), Ordering::Less);
        assert_eq!(a.fmt_word(&a.word(&["E", "E", "K"]).unwrap()), "E^2*K");
    }

    #[test]
    fn zero_coefficients_dropped() {
        let a = Alphabet::new(&["X", "Y"]).unwrap();
        let x = NcPoly::<Coef>::gen(&a, "X").unwrap();
        assert!(x.minus(&x).terms().is_empty());
        let y = NcPoly::<Coef>::gen(&a, "Y").unwrap();
        let p = x.plus(&y.scale(&Coef::int(-2)));
        assert_eq!(p.to_string(), "-2*Y + X");
    }
}
