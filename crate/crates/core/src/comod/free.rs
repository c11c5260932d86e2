use super::{BetaOutcome, StructComod};
use crate::error::Result;
use crate::findim::{StructAlg, StructHopf};
use crate::linalg::{det, SparseVec};
use crate::report::Report;
use crate::scalar::{Coef, Scalar, TFrac, TPoly};
use std::collections::BTreeMap;

/// Comodule algebra that is free over a commutative central base ring `C`,
/// described on a module basis `{m_i}` by structure constants in `C`.
#[derive(Clone, Debug)]
pub struct FreeExtension<C: Scalar> {
    pub name: String,
    pub labels: Vec<String>,
    /// `m_i m_j = Σ c m_k`.
    pub mult: Vec<Vec<SparseVec<C>>>,
    pub unit: SparseVec<C>,
    pub h: StructHopf,
    /// `δ(m_i) = Σ c m_a (x) h_b`.
    pub delta: Vec<Vec<(usize, usize, C)>>,
}

fn add_into<K: Ord, C: Scalar>(m: &mut BTreeMap<K, C>, k: K, c: C) {
    if c.is_zero() {
        return;
    }
    let s = match m.remove(&k) {
        Some(v) => v.plus(&c),
        None => c,
    };
    if !s.is_zero() {
        m.insert(k, s);
    }
}

impl<C: Scalar> FreeExtension<C> {
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    fn mul_elems(&self, x: &BTreeMap<usize, C>, y: &BTreeMap<usize, C>) -> BTreeMap<usize, C> {
        let mut out = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                let ab = a.times(b);
                for (k, c) in &self.mult[*i][*j] {
                    add_into(&mut out, *k, ab.times(c));
                }
            }
        }
        out
    }

    fn coact_basis(&self, i: usize) -> BTreeMap<(usize, usize), C> {
        let mut t = BTreeMap::new();
        for (a, b, c) in &self.delta[i] {
            add_into(&mut t, (*a, *b), c.clone());
        }
        t
    }

    fn tensor_mul(
        &self,
        s: &BTreeMap<(usize, usize), C>,
        t: &BTreeMap<(usize, usize), C>,
    ) -> BTreeMap<(usize, usize), C> {
        let mut out = BTreeMap::new();
        for ((i, j), c) in s {
            for ((k, l), d) in t {
                let cd = c.times(d);
                for (x, e) in &self.mult[*i][*k] {
                    let ce = cd.times(e);
                    for (y, f) in &self.h.alg.mult[*j][*l] {
                        add_into(&mut out, (*x, *y), ce.scale_coef(f));
                    }
                }
            }
        }
        out
    }

    /// Associativity, unit, multiplicativity of `δ`, coassociativity and counitarity.
    pub fn check(&self) -> Report {
        self.check_with(true)
    }

    /// `(e_i*e_j)*e_k - e_i*(e_j*e_k) = ...` on the basis labels.
    pub fn associator(&self, i: usize, j: usize, k: usize) -> String {
        let basis = |i: usize| -> BTreeMap<usize, C> { [(i, C::one())].into_iter().collect() };
        let elem = |v: &SparseVec<C>| -> BTreeMap<usize, C> { v.iter().cloned().collect() };
        let l = self.mul_elems(&elem(&self.mult[i][j]), &basis(k));
        let mut d = self.mul_elems(&basis(i), &elem(&self.mult[j][k]));
        for v in d.values_mut() {
            *v = v.negated();
        }
        for (key, c) in l {
            add_into(&mut d, key, c);
        }
        let terms: Vec<String> = d.iter().map(|(b, c)| format!("({c})*{}", self.labels[*b])).collect();
        let (a, b, c) = (&self.labels[i], &self.labels[j], &self.labels[k]);
        let value = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        format!("({a}*{b})*{c} - {a}*({b}*{c}) = {value}")
    }

    /// As [`check`](Self::check), optionally leaving out the cubic associativity pass.
    pub fn check_with(&self, associativity: bool) -> Report {
        let n = self.rank();
        let mut r = Report::new("free-extension", &self.name);
        let basis = |i: usize| -> BTreeMap<usize, C> { [(i, C::one())].into_iter().collect() };
        let elem = |v: &SparseVec<C>| -> BTreeMap<usize, C> { v.iter().cloned().collect() };
        let mut assoc = None;
        let mut mult = None;
        for i in 0..n {
            for j in 0..n {
                let ij = elem(&self.mult[i][j]);
                for k in (0..n).filter(|_| associativity) {
                    let l = self.mul_elems(&ij, &basis(k));
                    let rr = self.mul_elems(&basis(i), &elem(&self.mult[j][k]));
                    if l != rr && assoc.is_none() {
                        assoc = Some(self.associator(i, j, k));
                    }
                }
                let mut lhs = BTreeMap::new();
                for (k, c) in &self.mult[i][j] {
                    for (key, d) in self.coact_basis(*k) {
                        add_into(&mut lhs, key, c.times(&d));
                    }
                }
                if lhs != self.tensor_mul(&self.coact_basis(i), &self.coact_basis(j)) && mult.is_none() {
                    mult = Some(format!("delta({}*{})", self.labels[i], self.labels[j]));
                }
            }
        }
        if associativity {
            r.record("associativity", assoc);
        }
        let one = elem(&self.unit);
        let unit_bad = (0..n).find(|&i| self.mul_elems(&one, &basis(i)) != basis(i) || self.mul_elems(&basis(i), &one) != basis(i));
        r.record("unit laws", unit_bad.map(|i| self.labels[i].clone()));
        r.record("delta is multiplicative", mult);
        let mut coassoc = None;
        let mut counit = None;
        for i in 0..n {
            let d = self.coact_basis(i);
            let mut left = BTreeMap::new();
            let mut right = BTreeMap::new();
            let mut cu = BTreeMap::new();
            for ((a, b), c) in &d {
                for ((x, y), e) in self.coact_basis(*a) {
                    add_into(&mut left, (x, y, *b), c.times(&e));
                }
                for (x, y, e) in &self.h.delta[*b] {
                    add_into(&mut right, (*a, *x, *y), c.scale_coef(e));
                }
                add_into(&mut cu, *a, c.scale_coef(&self.h.counit[*b]));
            }
            if left != right && coassoc.is_none() {
                coassoc = Some(format!("on {}", self.labels[i]));
            }
            if cu != basis(i) && counit.is_none() {
                counit = Some(format!("on {}", self.labels[i]));
            }
        }
        r.record("coassociativity", coassoc);
        r.record("counitarity", counit);
        r
    }

    /// Matrix of `β` from `A (x)_B A` (basis `m_i (x) m_j`) to `A (x) H`
    /// (basis `m_a (x) h_b`), over the base ring.
    pub fn beta_matrix(&self) -> Vec<Vec<C>> {
        let n = self.rank();
        let m = self.h.dim();
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![C::zero(); n * m];
                for (a, b, c) in &self.delta[j] {
                    for (k, e) in &self.mult[i][*a] {
                        let idx = k * m + b;
                        row[idx] = row[idx].plus(&c.times(e));
                    }
                }
                rows.push(row);
            }
        }
        rows
    }
}

impl FreeExtension<TPoly> {
    /// `B (x) H` with constant structure constants.
    pub fn trivial(h: &StructHopf) -> FreeExtension<TPoly> {
        let lift = |v: &SparseVec<Coef>| -> SparseVec<TPoly> { v.iter().map(|(i, c)| (*i, TPoly::constant(c.clone()))).collect() };
        FreeExtension {
            name: format!("B (x) {}", h.name()),
            labels: h.labels().to_vec(),
            mult: h.alg.mult.iter().map(|row| row.iter().map(lift).collect()).collect(),
            unit: lift(&h.alg.unit),
            h: h.clone(),
            delta: h
                .delta
                .iter()
                .map(|d| d.iter().map(|(a, b, c)| (*a, *b, TPoly::constant(c.clone()))).collect())
                .collect(),
        }
    }

    /// Fiber `ℂ (x)_B A` at the character sending each symbol to its assigned value.
    pub fn fiber_at(&self, assign: &[Option<Coef>], q_target: Option<&Coef>) -> Result<StructComod> {
        let sp = |c: &TPoly| c.specialize(assign, q_target);
        let sparse = |v: &SparseVec<TPoly>| -> Result<SparseVec<Coef>> {
            let mut out = Vec::new();
            for (i, c) in v {
                let x = sp(c)?;
                if !x.is_zero() {
                    out.push((*i, x));
                }
            }
            Ok(out)
        };
        let mult = self
            .mult
            .iter()
            .map(|row| row.iter().map(sparse).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut delta = Vec::new();
        for d in &self.delta {
            let mut v = Vec::new();
            for (a, b, c) in d {
                let x = sp(c)?;
                if !x.is_zero() {
                    v.push((*a, *b, x));
                }
            }
            delta.push(v);
        }
        Ok(StructComod {
            a: StructAlg { name: format!("fiber of {}", self.name), labels: self.labels.clone(), mult, unit: sparse(&self.unit)? },
            h: self.h.clone(),
            delta,
        })
    }
}

/// Bijectivity of `β` over a Laurent base: the matrix is square and its
/// determinant is a unit (a monomial in invertible symbols).
pub fn galois_beta_ring(e: &FreeExtension<TPoly>) -> (BetaOutcome, Option<TPoly>) {
    let n = e.rank();
    let m = e.h.dim();
    let mut r = Report::new("galois-map", &format!("{} over its base", e.name));
    r.extend("", e.check());
    let rows = e.beta_matrix();
    let cols = n * m;
    r.check("A (x)_B A and A (x) H have equal rank", rows.len() == cols, || format!("{} vs {cols}", rows.len()));
    let mut d = None;
    let mut bijective = false;
    if rows.len() == cols {
        let frac: Vec<Vec<TFrac>> = rows.iter().map(|row| row.iter().map(|c| TFrac::from_poly(c.clone())).collect()).collect();
        let dt = det(&frac);
        let poly = dt.as_poly();
        bijective = poly.as_ref().map(|p| p.unit_inverse().is_some()).unwrap_or(false);
        r.check("determinant is a unit of the base", bijective, || format!("det = {dt}"));
        d = poly;
    }
    let bijective = bijective && r.passed();
    (BetaOutcome { report: r, rows: rows.len(), cols, rank: if bijective { cols } else { 0 }, bijective }, d)
}
