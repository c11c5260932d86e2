//! Finite-dimensional algebras and Hopf algebras given by structure constants.

mod duality;
mod group;

pub use duality::{
    check_iso, check_pairing, dual_hopf, duality_omega, find_basis_iso, function_group, grouplikes, pontryagin_check,
    Characters, GroupLikes,
};
pub use group::{gcd, lcm, FiniteGroup};

use crate::error::{Error, Result};
use crate::hopf::HopfPresentation;
use crate::linalg::SparseVec;
use crate::ncalg::Word;
use crate::report::Report;
use crate::scalar::Coef;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

pub type Sparse = SparseVec<Coef>;
/// Dense coordinate vector in a fixed basis.
pub type Elem = Vec<Coef>;
pub type Tensor2 = BTreeMap<(usize, usize), Coef>;
pub type Tensor3 = BTreeMap<(usize, usize, usize), Coef>;

pub(crate) fn add_to<K: Ord>(m: &mut BTreeMap<K, Coef>, k: K, c: Coef) {
    if c.is_zero() {
        return;
    }
    match m.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

pub fn to_sparse(x: &[Coef]) -> Sparse {
    x.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn to_dense(x: &Sparse, n: usize) -> Elem {
    let mut v = vec![Coef::zero(); n];
    for (i, c) in x {
        v[*i] = c.clone();
    }
    v
}

/// Displays a coordinate vector against basis labels.
pub struct Show<'a>(pub &'a [String], pub &'a [Coef]);

impl fmt::Display for Show<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .1
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.0[i].clone(), c));
        crate::ncalg::fmt_terms(f, terms)
    }
}

fn show_tensor(labels: &[String], t: &Tensor2) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter()
        .map(|((i, j), c)| format!("({c})*{} (x) {}", labels[*i], labels[*j]))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Associative unital algebra by structure constants `e_i e_j = Σ mult[i][j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructAlg {
    pub name: String,
    pub labels: Vec<String>,
    pub mult: Vec<Vec<Sparse>>,
    pub unit: Sparse,
}

impl StructAlg {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn basis(&self, i: usize) -> Elem {
        let mut v = self.zero();
        v[i] = Coef::one();
        v
    }

    pub fn zero(&self) -> Elem {
        vec![Coef::zero(); self.dim()]
    }

    pub fn one(&self) -> Elem {
        to_dense(&self.unit, self.dim())
    }

    pub fn mul(&self, x: &[Coef], y: &[Coef]) -> Elem {
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in &self.mult[i][j] {
                    out[*k] = &out[*k] + &(&ab * c);
                }
            }
        }
        out
    }

    pub fn show(&self, x: &[Coef]) -> String {
        Show(&self.labels, x).to_string()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    /// Associativity on basis triples and the two unit laws.
    pub fn check(&self) -> Report {
        let mut r = Report::new("algebra-axioms", &self.name);
        let n = self.dim();
        let mut bad = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let ij = to_dense(&self.mult[i][j], n);
                for k in 0..n {
                    let l = self.mul(&ij, &self.basis(k));
                    let rr = self.mul(&self.basis(i), &to_dense(&self.mult[j][k], n));
                    if l != rr {
                        bad = Some(format!(
                            "({}*{})*{} - {}*({}*{}) = {}",
                            self.labels[i],
                            self.labels[j],
                            self.labels[k],
                            self.labels[i],
                            self.labels[j],
                            self.labels[k],
                            self.show(&sub(&l, &rr))
                        ));
                        break 'outer;
                    }
                }
            }
        }
        r.record("associativity on basis triples", bad);
        let one = self.one();
        let bad = (0..n).find(|&i| self.mul(&one, &self.basis(i)) != self.basis(i) || self.mul(&self.basis(i), &one) != self.basis(i));
        r.record("unit laws", bad.map(|i| format!("fails on {}", self.labels[i])));
        r
    }
}

pub fn sub(x: &[Coef], y: &[Coef]) -> Elem {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn add(x: &[Coef], y: &[Coef]) -> Elem {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn scale(x: &[Coef], c: &Coef) -> Elem {
    x.iter().map(|a| a * c).collect()
}

/// Finite-dimensional Hopf algebra by structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct StructHopf {
    pub alg: StructAlg,
    /// `Δ(e_i) = Σ c e_j (x) e_k`.
    pub delta: Vec<Vec<(usize, usize, Coef)>>,
    pub counit: Vec<Coef>,
    /// `S(e_i)` as a sparse vector.
    pub antipode: Vec<Sparse>,
}

impl StructHopf {
    pub fn name(&self) -> &str {
        &self.alg.name
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.alg.labels
    }

    pub fn coproduct(&self, x: &[Coef]) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, k, c) in &self.delta[i] {
                add_to(&mut t, (*j, *k), a * c);
            }
        }
        t
    }

    pub fn counit_of(&self, x: &[Coef]) -> Coef {
        x.iter()
            .zip(&self.counit)
            .fold(Coef::zero(), |acc, (a, e)| &acc + &(a * e))
    }

    pub fn antipode_of(&self, x: &[Coef]) -> Elem {
        let mut out = self.alg.zero();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (k, c) in &self.antipode[i] {
                out[*k] = &out[*k] + &(a * c);
            }
        }
        out
    }

    pub fn pure(&self, x: &[Coef], y: &[Coef]) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                add_to(&mut t, (i, j), a * b);
            }
        }
        t
    }

    /// Product in `H (x) H`.
    pub fn tensor_mul(&self, a: &Tensor2, b: &Tensor2) -> Tensor2 {
        let mut t = Tensor2::new();
        for ((i, j), c) in a {
            for ((k, l), d) in b {
                let cd = c * d;
                for (x, e) in &self.alg.mult[*i][*k] {
                    let ce = &cd * e;
                    for (y, f) in &self.alg.mult[*j][*l] {
                        add_to(&mut t, (*x, *y), &ce * f);
                    }
                }
            }
        }
        t
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim()).all(|i| {
            let t = self.coproduct(&self.alg.basis(i));
            t.iter().all(|((j, k), c)| t.get(&(*k, *j)) == Some(c))
        })
    }

    pub fn antipode_squared_is_identity(&self) -> bool {
        (0..self.dim()).all(|i| {
            let b = self.alg.basis(i);
            self.antipode_of(&self.antipode_of(&b)) == b
        })
    }

    /// Every Hopf axiom as an exact identity of structure constants.
    pub fn check_axioms(&self) -> Report {
        let n = self.dim();
        let labels = &self.alg.labels;
        let mut r = Report::new("hopf-axioms", self.name());
        r.extend("", self.alg.check());

        let dc: Vec<Tensor2> = (0..n).map(|i| self.coproduct(&self.alg.basis(i))).collect();
        let mut bad = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let l = self.coproduct(&to_dense(&self.alg.mult[i][j], n));
                let rr = self.tensor_mul(&dc[i], &dc[j]);
                if l != rr {
                    bad = Some(format!("Delta({}*{}): {} vs {}", labels[i], labels[j], show_tensor(labels, &l), show_tensor(labels, &rr)));
                    break 'outer;
                }
            }
        }
        r.record("coproduct is multiplicative", bad);
        let one = self.alg.one();
        let d1 = self.coproduct(&one);
        r.check("Delta(1) = 1 (x) 1", d1 == self.pure(&one, &one), || show_tensor(labels, &d1));
        let mut bad = None;
        for i in 0..n {
            for j in 0..n {
                let l = self.counit_of(&to_dense(&self.alg.mult[i][j], n));
                let rr = &self.counit[i] * &self.counit[j];
                if l != rr && bad.is_none() {
                    bad = Some(format!("eps({}*{}) = {l}, expected {rr}", labels[i], labels[j]));
                }
            }
        }
        r.record("counit is multiplicative", bad);
        let e1 = self.counit_of(&one);
        r.check("eps(1) = 1", e1.is_one(), || e1.to_string());

        let mut coassoc = None;
        let mut counit = None;
        let mut anti = None;
        for i in 0..n {
            let mut left = Tensor3::new();
            let mut right = Tensor3::new();
            let mut cl = self.alg.zero();
            let mut cr = self.alg.zero();
            let mut sl = self.alg.zero();
            let mut sr = self.alg.zero();
            for ((a, b), c) in &dc[i] {
                for ((x, y), d) in &dc[*a] {
                    add_to(&mut left, (*x, *y, *b), c * d);
                }
                for ((x, y), d) in &dc[*b] {
                    add_to(&mut right, (*a, *x, *y), c * d);
                }
                cl[*b] = &cl[*b] + &(c * &self.counit[*a]);
                cr[*a] = &cr[*a] + &(c * &self.counit[*b]);
                let s_a = to_dense(&self.antipode[*a], n);
                let s_b = to_dense(&self.antipode[*b], n);
                sl = add(&sl, &scale(&self.alg.mul(&s_a, &self.alg.basis(*b)), c));
                sr = add(&sr, &scale(&self.alg.mul(&self.alg.basis(*a), &s_b), c));
            }
            if left != right && coassoc.is_none() {
                coassoc = Some(format!("on {}", labels[i]));
            }
            let b = self.alg.basis(i);
            if (cl != b || cr != b) && counit.is_none() {
                counit = Some(format!("on {}: {} / {}", labels[i], self.alg.show(&cl), self.alg.show(&cr)));
            }
            let target = scale(&one, &self.counit[i]);
            if (sl != target || sr != target) && anti.is_none() {
                anti = Some(format!(
                    "on {}: S*id gives {}, id*S gives {}",
                    labels[i],
                    self.alg.show(&sl),
                    self.alg.show(&sr)
                ));
            }
        }
        r.record("coassociativity", coassoc);
        r.record("counit laws", counit);
        r.record("antipode laws", anti);
        r
    }
}

pub fn group_algebra(g: &FiniteGroup) -> StructHopf {
    let n = g.order();
    let one = Coef::one;
    StructHopf {
        alg: StructAlg {
            name: "C[G]".into(),
            labels: g.labels().iter().map(|l| format!("[{l}]")).collect(),
            mult: (0..n).map(|a| (0..n).map(|b| vec![(g.mul(a, b), one())]).collect()).collect(),
            unit: vec![(g.identity(), one())],
        },
        delta: (0..n).map(|a| vec![(a, a, one())]).collect(),
        counit: vec![one(); n],
        antipode: (0..n).map(|a| vec![(g.inv(a), one())]).collect(),
    }
}

pub fn function_algebra(g: &FiniteGroup) -> StructHopf {
    let n = g.order();
    let one = Coef::one;
    StructHopf {
        alg: StructAlg {
            name: "O(G)".into(),
            labels: g.labels().iter().map(|l| format!("d{l}")).collect(),
            mult: (0..n)
                .map(|a| (0..n).map(|b| if a == b { vec![(a, one())] } else { vec![] }).collect())
                .collect(),
            unit: (0..n).map(|a| (a, one())).collect(),
        },
        delta: (0..n)
            .map(|x| {
                let mut v: Vec<_> = (0..n).map(|h| (h, g.mul(g.inv(h), x), one())).collect();
                v.sort_by_key(|t| (t.0, t.1));
                v
            })
            .collect(),
        counit: (0..n).map(|a| if a == g.identity() { one() } else { Coef::zero() }).collect(),
        antipode: (0..n).map(|a| vec![(g.inv(a), one())]).collect(),
    }
}

/// Irreducible words of a presented algebra when they form a finite set.
pub fn finite_basis(h: &HopfPresentation, cap: usize) -> Option<Vec<Word>> {
    (1..=cap)
        .map(|d| (d, h.rs().irreducible_words(d)))
        .find(|(d, words)| words.iter().all(|w| w.len() < *d))
        .map(|(_, words)| words)
}

/// Structure constants of a finite-dimensional presented Hopf algebra, with
/// every axiom re-verified on the result.
pub fn from_presentation(h: &HopfPresentation, expected_dim: usize) -> Result<StructHopf> {
    let words = finite_basis(h, expected_dim + 2).ok_or(Error::BasisCount {
        expected: expected_dim,
        found: h.rs().irreducible_words(expected_dim + 2).len(),
    })?;
    if words.len() != expected_dim {
        return Err(Error::BasisCount { expected: expected_dim, found: words.len() });
    }
    let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let alpha = h.alphabet();
    let express = |p: &crate::ncalg::NcPoly<Coef>| -> Sparse {
        let mut m = BTreeMap::new();
        for (w, c) in p.terms() {
            add_to(&mut m, index[w], c.clone());
        }
        m.into_iter().collect()
    };
    let mult = words
        .iter()
        .map(|a| {
            words
                .iter()
                .map(|b| {
                    let mut w = a.clone();
                    w.extend_from_slice(b);
                    express(&h.rs().nf_word(&w))
                })
                .collect()
        })
        .collect();
    let delta = words
        .iter()
        .map(|w| {
            h.delta_word(w)
                .terms()
                .iter()
                .map(|(legs, c)| (index[&legs[0]], index[&legs[1]], c.clone()))
                .collect()
        })
        .collect();
    let sh = StructHopf {
        alg: StructAlg {
            name: h.name().to_string(),
            labels: words.iter().map(|w| alpha.fmt_word(w)).collect(),
            mult,
            unit: vec![(index[&Word::new()], Coef::one())],
        },
        delta,
        counit: words.iter().map(|w| h.counit_word(w)).collect(),
        antipode: words.iter().map(|w| express(&h.antipode_word(w))).collect(),
    };
    let rep = sh.check_axioms();
    if let Some(f) = rep.failures().next() {
        return Err(Error::CandidateRejected(format!("{}: {}", f.name, f.witness.clone().unwrap_or_default())));
    }
    Ok(sh)
}

#[cfg(test)]
mod tests;
