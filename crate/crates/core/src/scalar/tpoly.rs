use super::coef::{needs_parens, Coef};
use super::Scalar;
use crate::error::{Error, Result};
use smallvec::SmallVec;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

pub type Sym = u16;

/// Sparse Laurent monomial: sorted `(symbol, exponent)` pairs, no zero exponents.
pub type Mono = SmallVec<[(Sym, i16); 4]>;

/// Named parameter symbols with their invertibility flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymTable {
    names: Vec<String>,
    invertible: Vec<bool>,
    index: HashMap<String, Sym>,
}

impl SymTable {
    pub fn new<S: AsRef<str>>(params: &[(S, bool)]) -> Result<Arc<SymTable>> {
        let mut t = SymTable {
            names: Vec::new(),
            invertible: Vec::new(),
            index: HashMap::new(),
        };
        for (name, inv) in params {
            let name = name.as_ref().to_string();
            if t.index.contains_key(&name) {
                return Err(Error::DuplicateParam(name));
            }
            t.index.insert(name.clone(), t.names.len() as Sym);
            t.names.push(name);
            t.invertible.push(*inv);
        }
        Ok(Arc::new(t))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, s: Sym) -> &str {
        &self.names[s as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_invertible(&self, s: Sym) -> bool {
        self.invertible[s as usize]
    }

    pub fn lookup(&self, name: &str) -> Option<Sym> {
        self.index.get(name).copied()
    }
}

pub fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut out = Mono::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let e = a[i].1 + b[j].1;
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Lexicographic order on exponent vectors (a group order on Laurent monomials).
pub fn mono_lex(a: &Mono, b: &Mono) -> std::cmp::Ordering {
    use std::cmp::Ordering::*;
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Equal,
            (Some(&(_, e)), None) => return e.cmp(&0),
            (None, Some(&(_, e))) => return 0.cmp(&e),
            (Some(&(s, e)), Some(&(t, f))) => match s.cmp(&t) {
                Less => return e.cmp(&0),
                Greater => return 0.cmp(&f),
                Equal => {
                    if e != f {
                        return e.cmp(&f);
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

fn lead_term(p: &TPoly) -> Option<(Mono, Coef)> {
    p.terms.iter().max_by(|a, b| mono_lex(&a.0, &b.0)).cloned()
}

pub fn mono_inv(a: &Mono) -> Mono {
    a.iter().map(|&(s, e)| (s, -e)).collect()
}

/// Polynomial in the parameter symbols over [`Coef`], Laurent in invertible symbols.
///
/// Terms are sorted by monomial with nonzero coefficients, so equality is structural.
#[derive(Clone)]
pub struct TPoly {
    syms: Option<Arc<SymTable>>,
    terms: Vec<(Mono, Coef)>,
}

fn join_syms(a: &Option<Arc<SymTable>>, b: &Option<Arc<SymTable>>) -> Option<Arc<SymTable>> {
    match (a, b) {
        (Some(x), Some(y)) => {
            debug_assert!(Arc::ptr_eq(x, y) || x == y, "parameter rings differ");
            Some(x.clone())
        }
        (Some(x), None) | (None, Some(x)) => Some(x.clone()),
        (None, None) => None,
    }
}

fn collect_terms(mut v: Vec<(Mono, Coef)>) -> Vec<(Mono, Coef)> {
    v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut out: Vec<(Mono, Coef)> = Vec::with_capacity(v.len());
    for (m, c) in v {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
            _ => {
                if let Some((_, lc)) = out.last() {
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if out.last().is_some_and(|(_, c)| c.is_zero()) {
        out.pop();
    }
    out
}

impl TPoly {
    pub fn constant(c: Coef) -> TPoly {
        let terms = if c.is_zero() { vec![] } else { vec![(Mono::new(), c)] };
        TPoly { syms: None, terms }
    }

    pub fn sym(syms: &Arc<SymTable>, s: Sym) -> TPoly {
        TPoly {
            syms: Some(syms.clone()),
            terms: vec![(smallvec::smallvec![(s, 1)], Coef::one())],
        }
    }

    pub fn monomial(syms: &Arc<SymTable>, m: Mono, c: Coef) -> Result<TPoly> {
        for &(s, e) in &m {
            if e < 0 && !syms.is_invertible(s) {
                return Err(Error::NotInvertible(syms.name(s).to_string()));
            }
        }
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Ok(TPoly {
            syms: Some(syms.clone()),
            terms,
        })
    }

    pub fn from_terms(syms: Option<Arc<SymTable>>, terms: Vec<(Mono, Coef)>) -> TPoly {
        TPoly {
            syms,
            terms: collect_terms(terms),
        }
    }

    pub fn syms(&self) -> Option<&Arc<SymTable>> {
        self.syms.as_ref()
    }

    pub fn terms(&self) -> &[(Mono, Coef)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Coef> {
        match self.terms.as_slice() {
            [] => Some(Coef::zero()),
            [(m, c)] if m.is_empty() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<(&Mono, &Coef)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    pub fn is_invertible_mono(&self, m: &Mono) -> bool {
        m.is_empty()
            || self
                .syms
                .as_ref()
                .is_some_and(|t| m.iter().all(|&(s, _)| t.is_invertible(s)))
    }

    pub fn scale(&self, c: &Coef) -> TPoly {
        if c.is_zero() {
            return TPoly { syms: self.syms.clone(), terms: vec![] };
        }
        TPoly {
            syms: self.syms.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono, c: &Coef) -> TPoly {
        let mut terms: Vec<(Mono, Coef)> = self
            .terms
            .iter()
            .map(|(n, a)| (mono_mul(n, m), a * c))
            .filter(|(_, a)| !a.is_zero())
            .collect();
        if !m.is_empty() {
            terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        }
        TPoly {
            syms: self.syms.clone(),
            terms,
        }
    }

    fn add_impl(&self, o: &TPoly, negate: bool) -> TPoly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let neg = |c: &Coef| if negate { -c } else { c.clone() };
        while i < self.terms.len() && j < o.terms.len() {
            match self.terms[i].0.cmp(&o.terms[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((o.terms[j].0.clone(), neg(&o.terms[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        &self.terms[i].1 - &o.terms[j].1
                    } else {
                        &self.terms[i].1 + &o.terms[j].1
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(o.terms[j..].iter().map(|(m, c)| (m.clone(), neg(c))));
        TPoly {
            syms: join_syms(&self.syms, &o.syms),
            terms: out,
        }
    }

    fn mul_impl(&self, o: &TPoly) -> TPoly {
        let syms = join_syms(&self.syms, &o.syms);
        if self.terms.is_empty() || o.terms.is_empty() {
            return TPoly { syms, terms: vec![] };
        }
        if let [(m, c)] = o.terms.as_slice() {
            let mut r = self.mul_mono(m, c);
            r.syms = syms;
            return r;
        }
        if let [(m, c)] = self.terms.as_slice() {
            let mut r = o.mul_mono(m, c);
            r.syms = syms;
            return r;
        }
        let mut v = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                v.push((mono_mul(ma, mb), ca * cb));
            }
        }
        TPoly {
            syms,
            terms: collect_terms(v),
        }
    }

    /// Inverse when this is a single term over invertible symbols.
    pub fn unit_inverse(&self) -> Option<TPoly> {
        let (m, c) = self.as_monomial()?;
        if !self.is_invertible_mono(m) {
            return None;
        }
        Some(TPoly {
            syms: self.syms.clone(),
            terms: vec![(mono_inv(m), c.inv()?)],
        })
    }

    /// Ring homomorphism to the base coefficients.
    ///
    /// `assign[s]` is the value of symbol `s`; `q_target` substitutes formal `q`.
    pub fn specialize(&self, assign: &[Option<Coef>], q_target: Option<&Coef>) -> Result<Coef> {
        let mut acc = Coef::zero();
        for (m, c) in &self.terms {
            let mut v = match q_target {
                Some(qv) => c.eval_q(qv)?,
                None => c.clone(),
            };
            for &(s, e) in m {
                let name = || {
                    self.syms
                        .as_ref()
                        .map(|t| t.name(s).to_string())
                        .unwrap_or_else(|| format!("#{s}"))
                };
                let val = assign
                    .get(s as usize)
                    .and_then(|x| x.clone())
                    .ok_or_else(|| Error::MissingAssignment(name()))?;
                let p = val.pow(e as i32).ok_or_else(|| Error::ZeroAssignedToInvertible(name()))?;
                v = &v * &p;
            }
            acc = &acc + &v;
        }
        Ok(acc)
    }

    /// Substitute symbols by parameter polynomials (partial substitution allowed).
    pub fn substitute(&self, subs: &HashMap<Sym, TPoly>) -> Result<TPoly> {
        let mut acc = TPoly { syms: self.syms.clone(), terms: vec![] };
        for (m, c) in &self.terms {
            let mut keep = Mono::new();
            let mut v = TPoly::constant(c.clone());
            v.syms = self.syms.clone();
            for &(s, e) in m {
                match subs.get(&s) {
                    Some(p) => {
                        let base = if e < 0 {
                            p.unit_inverse().ok_or_else(|| {
                                Error::NotInvertible(format!("substitute for {}", self.sym_name(s)))
                            })?
                        } else {
                            p.clone()
                        };
                        for _ in 0..e.unsigned_abs() {
                            v = v.mul_impl(&base);
                        }
                    }
                    None => keep.push((s, e)),
                }
            }
            acc = acc.add_impl(&v.mul_mono(&keep, &Coef::one()), false);
        }
        Ok(acc)
    }

    fn sym_name(&self, s: Sym) -> String {
        self.syms
            .as_ref()
            .map(|t| t.name(s).to_string())
            .unwrap_or_else(|| format!("#{s}"))
    }

    pub fn map_coefs(&self, f: impl Fn(&Coef) -> Result<Coef>) -> Result<TPoly> {
        let mut v = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            v.push((m.clone(), f(c)?));
        }
        Ok(TPoly {
            syms: self.syms.clone(),
            terms: collect_terms(v),
        })
    }

    pub fn fmt_mono(&self, m: &Mono) -> String {
        m.iter()
            .map(|&(s, e)| {
                let n = self.sym_name(s);
                if e == 1 {
                    n
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl PartialEq for TPoly {
    fn eq(&self, o: &TPoly) -> bool {
        self.terms == o.terms
    }
}

impl Eq for TPoly {}

impl std::hash::Hash for TPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mono = self.fmt_mono(m);
            let mut cs = c.to_string();
            let neg = !needs_parens(&cs) && cs.starts_with('-');
            if neg {
                cs.remove(0);
            }
            if i > 0 {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            let cs = if needs_parens(&cs) { format!("({cs})") } else { cs };
            match (mono.is_empty(), cs.as_str()) {
                (true, _) => write!(f, "{cs}")?,
                (false, "1") => write!(f, "{mono}")?,
                (false, _) => write!(f, "{cs}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Scalar for TPoly {
    fn zero() -> Self {
        TPoly { syms: None, terms: vec![] }
    }
    fn one() -> Self {
        TPoly::constant(Coef::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_coef(c: Coef) -> Self {
        TPoly::constant(c)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add_impl(o, false)
    }
    fn minus(&self, o: &Self) -> Self {
        self.add_impl(o, true)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul_impl(o)
    }
    fn negated(&self) -> Self {
        self.scale(&Coef::int(-1))
    }
    fn try_inv(&self) -> Option<Self> {
        self.unit_inverse()
    }
    fn as_coef(&self) -> Option<Coef> {
        self.as_constant()
    }
    fn scale_coef(&self, c: &Coef) -> Self {
        self.scale(c)
    }
}

/// Fraction-field element `num/den` of the parameter ring.
///
/// Denominators that are units are folded into the numerator; otherwise no
/// cancellation is attempted, and equality compares cross products.
#[derive(Clone)]
pub struct TFrac {
    num: TPoly,
    den: TPoly,
}

impl TFrac {
    pub fn new(num: TPoly, den: TPoly) -> Result<TFrac> {
        if den.is_zero() {
            return Err(Error::VanishingDenominator(format!("{num} / 0")));
        }
        if num.is_zero() {
            return Ok(TFrac::from_poly(num));
        }
        if let Some(u) = den.unit_inverse() {
            return Ok(TFrac::from_poly(num.mul_impl(&u)));
        }
        if let Some(q) = exact_div(&num, &den) {
            return Ok(TFrac::from_poly(q));
        }
        Ok(TFrac { num, den })
    }

    pub fn from_poly(p: TPoly) -> TFrac {
        TFrac { num: p, den: TPoly::one() }
    }

    pub fn num(&self) -> &TPoly {
        &self.num
    }

    pub fn den(&self) -> &TPoly {
        &self.den
    }

    /// The value as a Laurent polynomial when the denominator is trivial.
    pub fn as_poly(&self) -> Option<TPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            exact_div(&self.num, &self.den)
        }
    }

    /// True when the value is a unit of the Laurent ring: a nonzero
    /// coefficient times a monomial in invertible symbols.
    pub fn is_unit(&self) -> bool {
        match self.as_poly() {
            Some(p) => p.unit_inverse().is_some(),
            None => false,
        }
    }

    pub fn specialize(&self, assign: &[Option<Coef>], q_target: Option<&Coef>) -> Result<Coef> {
        let d = self.den.specialize(assign, q_target)?;
        if d.is_zero() {
            return Err(Error::VanishingDenominator(format!("{}", self.den)));
        }
        Ok(&self.num.specialize(assign, q_target)? * &d.inv().unwrap())
    }
}

/// Exact quotient of Laurent polynomials when `den` divides `num` with a
/// monomial quotient or by multivariate long division.
pub fn exact_div(num: &TPoly, den: &TPoly) -> Option<TPoly> {
    if den.is_zero() {
        return None;
    }
    if num.is_zero() {
        return Some(num.clone());
    }
    // Long division on the largest term; Laurent exponents are allowed only
    // for invertible symbols, which `monomial` checks.
    let (dm, dc) = lead_term(den).unwrap();
    let dci = dc.inv()?;
    let mut rem = num.clone();
    let mut quo = TPoly { syms: join_syms(&num.syms, &den.syms), terms: vec![] };
    let mut steps = 0usize;
    while let Some((rm, rc)) = lead_term(&rem) {
        steps += 1;
        if steps > 4 * (num.len() + 1) * (den.len() + 1) + 64 {
            return None;
        }
        let m = mono_mul(&rm, &mono_inv(&dm));
        for &(s, e) in &m {
            if e < 0 && !quo.syms.as_ref().is_some_and(|t| t.is_invertible(s)) {
                return None;
            }
        }
        let c = &rc * &dci;
        let t = TPoly { syms: quo.syms.clone(), terms: vec![(m, c)] };
        rem = rem.add_impl(&den.mul_impl(&t), true);
        quo = quo.add_impl(&t, false);
        if let Some((nm, _)) = lead_term(&rem) {
            if mono_lex(&nm, &rm) != std::cmp::Ordering::Less {
                return None;
            }
        }
    }
    Some(quo)
}

impl PartialEq for TFrac {
    fn eq(&self, o: &TFrac) -> bool {
        if self.den.is_one() && o.den.is_one() {
            return self.num == o.num;
        }
        self.num.mul_impl(&o.den) == o.num.mul_impl(&self.den)
    }
}

impl fmt::Display for TFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for TFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Scalar for TFrac {
    fn zero() -> Self {
        TFrac::from_poly(TPoly::zero())
    }
    fn one() -> Self {
        TFrac::from_poly(TPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_coef(c: Coef) -> Self {
        TFrac::from_poly(TPoly::constant(c))
    }
    fn plus(&self, o: &Self) -> Self {
        if self.den == o.den {
            return TFrac::new(self.num.add_impl(&o.num, false), self.den.clone()).unwrap();
        }
        TFrac::new(
            self.num.mul_impl(&o.den).add_impl(&o.num.mul_impl(&self.den), false),
            self.den.mul_impl(&o.den),
        )
        .unwrap()
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }
    fn times(&self, o: &Self) -> Self {
        TFrac::new(self.num.mul_impl(&o.num), self.den.mul_impl(&o.den)).unwrap()
    }
    fn negated(&self) -> Self {
        TFrac {
            num: self.num.negated(),
            den: self.den.clone(),
        }
    }
    fn try_inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            TFrac::new(self.den.clone(), self.num.clone()).ok()
        }
    }
    fn as_coef(&self) -> Option<Coef> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(&n * &d.inv()?)
    }
    fn scale_coef(&self, c: &Coef) -> Self {
        TFrac::new(self.num.scale(c), self.den.clone()).unwrap()
    }
}

impl super::Field for TFrac {}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> Arc<SymTable> {
        SymTable::new(&[("t_1", true), ("t_E", false), ("t_K", true)]).unwrap()
    }

    #[test]
    fn laurent_units() {
        let t = table();
        let t1 = TPoly::sym(&t, 0);
        let te = TPoly::sym(&t, 1);
        assert!(t1.try_inv().is_some());
        assert!(te.try_inv().is_none());
        let x = t1.try_inv().unwrap().times(&t1);
        assert!(x.is_one());
    }

    #[test]
    fn zero_normal_form() {
        let t = table();
        let x = TPoly::sym(&t, 1).plus(&TPoly::sym(&t, 2).scale(&Coef::rat(1, 3)));
        assert!(x.minus(&x).is_zero());
        assert!(x.minus(&x).terms().is_empty());
    }

    #[test]
    fn fraction_division() {
        let t = table();
        let a = TPoly::sym(&t, 1).plus(&TPoly::one());
        let b = a.times(&a);
        let f = TFrac::new(b.clone(), a.clone()).unwrap();
        assert_eq!(f.as_poly().unwrap(), a);
        let g = TFrac::new(TPoly::one(), TPoly::sym(&t, 1)).unwrap();
        assert!(!g.is_unit());
        let mut assign = vec![Some(Coef::one()); 3];
        assign[1] = Some(Coef::zero());
        assert!(matches!(g.specialize(&assign, None), Err(Error::VanishingDenominator(_))));
    }
}
