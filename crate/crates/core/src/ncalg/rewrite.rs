use super::{Alphabet, Gen, NcPoly, Word};
use crate::error::{Error, Result};
use crate::scalar::{Coef, Scalar};
use parking_lot::Mutex;
use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NcPoly<Coef>,
}

/// Unresolved overlap: the word and the difference of its two reductions.
#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub word: Word,
    pub rules: (usize, usize),
    pub difference: NcPoly<Coef>,
}

/// Oriented relations defining a quotient of the free algebra.
///
/// Normal forms of words are memoized; the cache is internal and does not
/// affect results.
pub struct RewriteSystem {
    alpha: Arc<Alphabet>,
    rules: Vec<Rule>,
    by_lhs: HashMap<Word, usize>,
    lhs_lens: Vec<usize>,
    cache: Mutex<HashMap<Word, Arc<NcPoly<Coef>>>>,
}

impl std::fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("generators", &self.alpha.names())
            .field("rules", &self.rules.len())
            .finish()
    }
}

impl RewriteSystem {
    /// Validated system: every rhs word is below its lhs, and lhs are distinct.
    pub fn new(alpha: &Arc<Alphabet>, rules: Vec<Rule>) -> Result<RewriteSystem> {
        let mut seen = HashSet::new();
        for r in &rules {
            if !seen.insert(r.lhs.clone()) {
                return Err(Error::DuplicateLhs(alpha.fmt_word(&r.lhs)));
            }
            if r.lhs.is_empty() {
                return Err(Error::RuleOrder("empty left-hand side".into()));
            }
            for w in r.rhs.terms().keys() {
                if alpha.cmp_words(w, &r.lhs) != Ordering::Less {
                    return Err(Error::RuleOrder(format!(
                        "{} -> {}",
                        alpha.fmt_word(&r.lhs),
                        r.rhs
                    )));
                }
            }
        }
        Ok(RewriteSystem::new_unchecked(alpha, rules))
    }

    /// Construct without validation; used for diagnostics on broken systems.
    pub fn new_unchecked(alpha: &Arc<Alphabet>, rules: Vec<Rule>) -> RewriteSystem {
        let mut by_lhs = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            by_lhs.entry(r.lhs.clone()).or_insert(i);
        }
        let mut lhs_lens: Vec<usize> = rules.iter().map(|r| r.lhs.len()).collect();
        lhs_lens.sort_unstable();
        lhs_lens.dedup();
        lhs_lens.reverse();
        RewriteSystem {
            alpha: alpha.clone(),
            rules,
            by_lhs,
            lhs_lens,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alpha
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Longest suffix of `w` that is a rule lhs.
    fn suffix_redex(&self, w: &[Gen]) -> Option<usize> {
        for &l in &self.lhs_lens {
            if l <= w.len() {
                if let Some(&i) = self.by_lhs.get(&w[w.len() - l..]) {
                    return Some(i);
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &[Gen]) -> bool {
        (0..w.len()).all(|end| self.suffix_redex(&w[..=end]).is_none())
    }

    /// Normal form of a single word.
    pub fn nf_word(&self, w: &[Gen]) -> Arc<NcPoly<Coef>> {
        if let Some(p) = self.cache.lock().get(w) {
            return p.clone();
        }
        let result = if w.is_empty() {
            NcPoly::one(&self.alpha)
        } else {
            let (prefix, last) = w.split_at(w.len() - 1);
            let head = self.nf_word(prefix);
            let mut acc = NcPoly::zero(&self.alpha);
            for (v, c) in head.terms() {
                let mut vx = v.clone();
                vx.push(last[0]);
                match self.suffix_redex(&vx) {
                    None => acc.add_term(vx, c),
                    Some(i) => {
                        let rule = &self.rules[i];
                        let keep = vx.len() - rule.lhs.len();
                        for (r, rc) in rule.rhs.terms() {
                            let mut pw: Word = vx[..keep].iter().copied().collect();
                            pw.extend_from_slice(r);
                            let sub = self.nf_word(&pw);
                            acc.add_scaled(&sub, &c.times(rc));
                        }
                    }
                }
            }
            acc
        };
        let result = Arc::new(result);
        self.cache.lock().insert(w.iter().copied().collect(), result.clone());
        result
    }

    pub fn normal_form<C: Scalar>(&self, p: &NcPoly<C>) -> NcPoly<C> {
        let mut out = NcPoly::zero(&self.alpha);
        for (w, c) in p.terms() {
            let nf = self.nf_word(w);
            for (v, d) in nf.terms() {
                out.add_term(v.clone(), &c.scale_coef(d));
            }
        }
        out
    }

    pub fn multiply<C: Scalar>(&self, p: &NcPoly<C>, r: &NcPoly<C>) -> Result<NcPoly<C>> {
        if **p.alphabet() != *self.alpha || **r.alphabet() != *self.alpha {
            return Err(Error::AlphabetMismatch);
        }
        Ok(self.mul(p, r))
    }

    /// Product of two polynomials followed by normalization.
    pub fn mul<C: Scalar>(&self, p: &NcPoly<C>, r: &NcPoly<C>) -> NcPoly<C> {
        let mut out = NcPoly::zero(&self.alpha);
        for (u, a) in p.terms() {
            for (v, b) in r.terms() {
                let mut w = u.clone();
                w.extend_from_slice(v);
                let ab = a.times(b);
                for (x, d) in self.nf_word(&w).terms() {
                    out.add_term(x.clone(), &ab.scale_coef(d));
                }
            }
        }
        out
    }

    pub fn pow<C: Scalar>(&self, p: &NcPoly<C>, n: u32) -> NcPoly<C> {
        let mut acc = NcPoly::one(&self.alpha);
        for _ in 0..n {
            acc = self.mul(&acc, p);
        }
        acc
    }

    /// Irreducible words of length at most `max_degree`, in the monomial order.
    pub fn irreducible_words(&self, max_degree: usize) -> Vec<Word> {
        let mut out = vec![Word::new()];
        let mut queue = VecDeque::from([Word::new()]);
        while let Some(w) = queue.pop_front() {
            if w.len() == max_degree {
                continue;
            }
            for g in 0..self.alpha.len() as Gen {
                let mut x = w.clone();
                x.push(g);
                if self.suffix_redex(&x).is_none() {
                    out.push(x.clone());
                    queue.push_back(x);
                }
            }
        }
        out.sort_by(|a, b| self.alpha.cmp_words(a, b));
        out
    }

    /// Overlaps and inclusions of rule lhs up to the given word length whose
    /// two one-step reductions have different normal forms.
    pub fn overlap_report(&self, max_overlap_len: usize) -> Vec<CriticalPair> {
        let mut out = Vec::new();
        let one_step = |w: &[Gen], start: usize, rule: usize| -> NcPoly<Coef> {
            let r = &self.rules[rule];
            let mut acc = NcPoly::zero(&self.alpha);
            for (v, c) in r.rhs.terms() {
                let mut x: Word = w[..start].iter().copied().collect();
                x.extend_from_slice(v);
                x.extend_from_slice(&w[start + r.lhs.len()..]);
                acc.add_scaled(&self.nf_word(&x), c);
            }
            acc
        };
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                let (l1, l2) = (&r1.lhs, &r2.lhs);
                // Inclusion: l2 occurs inside l1 (distinct rules).
                if i != j
                    && (l2.len() < l1.len() || (l1 == l2 && i < j))
                    && l1.len() <= max_overlap_len
                {
                    for s in 0..=l1.len() - l2.len() {
                        if l1[s..s + l2.len()] == l2[..] {
                            let a = one_step(l1, 0, i);
                            let b = one_step(l1, s, j);
                            let d = a.minus(&b);
                            if !d.is_zero() {
                                out.push(CriticalPair { word: l1.clone(), rules: (i, j), difference: d });
                            }
                        }
                    }
                }
                // Proper overlap: suffix of l1 equals prefix of l2.
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] != l2[..k] {
                        continue;
                    }
                    let mut w = l1.clone();
                    w.extend_from_slice(&l2[k..]);
                    if w.len() > max_overlap_len {
                        continue;
                    }
                    let a = one_step(&w, 0, i);
                    let b = one_step(&w, l1.len() - k, j);
                    let d = a.minus(&b);
                    if !d.is_zero() {
                        out.push(CriticalPair { word: w, rules: (i, j), difference: d });
                    }
                }
            }
        }
        out
    }
}
