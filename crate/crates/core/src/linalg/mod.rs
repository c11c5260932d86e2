//! Exact linear algebra over coefficient fields: sparse echelon forms,
//! kernels, dense determinants and inverses, plus a modular rank certificate.

pub mod modp;

use crate::scalar::{Coef, Field, QPoly};
use std::collections::BTreeMap;

/// Sparse vector as sorted `(index, value)` pairs without zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn sparse_from_map<F: Field>(m: BTreeMap<usize, F>) -> SparseVec<F> {
    m.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Incremental row echelon form with monic pivot rows.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    pivots: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = &usize> {
        self.pivots.keys()
    }

    /// Remainder of `v` after reduction by the stored pivots.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut work: BTreeMap<usize, F> = v.iter().cloned().collect();
        let mut out = Vec::new();
        while let Some((&c, _)) = work.iter().next() {
            let val = work.remove(&c).unwrap();
            if val.is_zero() {
                continue;
            }
            match self.pivots.get(&c) {
                Some(row) => {
                    for (j, x) in row.iter().skip(1) {
                        let e = work.entry(*j).or_insert_with(F::zero);
                        *e = e.minus(&val.times(x));
                    }
                }
                None => out.push((c, val)),
            }
        }
        out
    }

    /// Insert a vector; returns true when it was independent.
    pub fn insert(&mut self, v: &SparseVec<F>) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.inv();
        let row: SparseVec<F> = r.into_iter().map(|(j, x)| (j, x.times(&inv))).collect();
        self.pivots.insert(row[0].0, row);
        true
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_empty()
    }
}

pub fn rank<F: Field>(rows: &[SparseVec<F>]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Basis of `{x : Σ x_i v_i = 0}` for the given vectors.
pub fn kernel<F: Field>(vs: &[SparseVec<F>]) -> Vec<Vec<F>> {
    let n = vs.len();
    let width = vs.iter().flat_map(|v| v.iter().map(|(j, _)| j + 1)).max().unwrap_or(0);
    let mut e: Echelon<F> = Echelon::new();
    let mut kern: Echelon<F> = Echelon::new();
    let mut out = Vec::new();
    for (i, v) in vs.iter().enumerate() {
        let mut row = v.clone();
        row.push((width + i, F::one()));
        let r = e.reduce(&row);
        if r.is_empty() {
            continue;
        }
        if r[0].0 >= width {
            let kv: SparseVec<F> = r.iter().map(|(j, x)| (j - width, x.clone())).collect();
            if kern.insert(&kv) {
                let mut dense = vec![F::zero(); n];
                for (j, x) in kv {
                    dense[j] = x;
                }
                out.push(dense);
            }
        } else {
            e.insert(&r);
        }
    }
    out
}

/// Coefficients expressing `b` in terms of `vs`, if it lies in their span.
pub fn express<F: Field>(vs: &[SparseVec<F>], b: &SparseVec<F>) -> Option<Vec<F>> {
    let mut all = vs.to_vec();
    all.push(b.clone());
    let n = vs.len();
    for k in kernel(&all) {
        if !k[n].is_zero() {
            let f = k[n].inv().negated();
            return Some(k[..n].iter().map(|x| x.times(&f)).collect());
        }
    }
    None
}

pub fn det<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m.to_vec();
    let mut d = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            a.swap(p, c);
            d = d.negated();
        }
        d = d.times(&a[c][c]);
        let inv = a[c][c].inv();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].times(&inv);
            for j in c..n {
                let t = f.times(&a[c][j]);
                a[i][j] = a[i][j].minus(&t);
            }
        }
    }
    d
}

pub fn invert<F: Field>(m: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(p, c);
        let inv = a[c][c].inv();
        for x in a[c].iter_mut() {
            *x = x.times(&inv);
        }
        let pr = a[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(pr.iter()) {
                    *x = x.minus(&f.times(y));
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    (0..k).fold(F::zero(), |acc, t| {
                        if row[t].is_zero() {
                            acc
                        } else {
                            acc.plus(&row[t].times(&b[t][j]))
                        }
                    })
                })
                .collect()
        })
        .collect()
}

/// Reduction data for mapping coefficients to F_p.
#[derive(Debug, Clone, Copy)]
pub struct ModContext {
    pub p: u64,
    pub qval: u64,
}

impl ModContext {
    /// A prime `p ≡ 1 (mod d)` with `qval` a root of Φ_d, or for formal `q`
    /// (`d = 0`) a fixed pseudo-random evaluation point.
    pub fn for_order(d: u32, salt: u64) -> ModContext {
        let start: u64 = (1 << 61) - 1 - salt * 1_000_003;
        if d == 0 {
            let p = (0..).map(|k| (start | 1) - 2 * k).find(|&n| is_probable_prime(n)).unwrap();
            return ModContext { p, qval: 1_234_567_891 + salt * 7919 };
        }
        let d64 = d as u64;
        let mut n = start - (start % d64) + 1;
        loop {
            if n < start && is_probable_prime(n) {
                let phi = QPoly::cyclotomic(d);
                for base in 2..200u64 {
                    let cand = modp::pow(base, (n - 1) / d64, n);
                    if phi.mod_p(cand, n) == Some(0) {
                        return ModContext { p: n, qval: cand };
                    }
                }
            }
            n -= d64;
        }
    }

    pub fn reduce(&self, c: &Coef) -> Option<u64> {
        c.mod_p(self.p, self.qval)
    }
}

fn is_probable_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    // Deterministic Miller-Rabin bases for 64-bit integers.
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = modp::pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = modp::mul(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn coef_order(rows: &[SparseVec<Coef>]) -> Option<u32> {
    let mut d = None;
    for r in rows {
        for (_, c) in r {
            match c {
                Coef::Func(_) => return Some(0),
                Coef::Cyc(e) => d = Some(e.field().order()),
                Coef::Rat(_) => {}
            }
        }
    }
    Some(d.unwrap_or(3))
}

/// Sparse elimination over F_p; `None` when some entry does not reduce.
pub fn rank_mod(rows: &[SparseVec<Coef>], ctx: ModContext) -> Option<usize> {
    let p = ctx.p;
    let mut pivots: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
    for r in rows {
        let mut work: BTreeMap<usize, u64> = BTreeMap::new();
        for (j, c) in r {
            let v = ctx.reduce(c)?;
            if v != 0 {
                work.insert(*j, v);
            }
        }
        loop {
            let Some((&c, &val)) = work.iter().next() else { break };
            match pivots.get(&c) {
                Some(row) => {
                    for &(j, x) in row {
                        let e = work.entry(j).or_insert(0);
                        *e = modp::sub(*e, modp::mul(val, x, p), p);
                        if *e == 0 {
                            work.remove(&j);
                        }
                    }
                }
                None => {
                    let inv = modp::inv(val, p);
                    let row: Vec<(usize, u64)> =
                        work.iter().map(|(&j, &x)| (j, modp::mul(x, inv, p))).collect();
                    pivots.insert(c, row);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// Rank over the coefficient field. A full-rank reduction modulo a prime is
/// an exact certificate; otherwise exact elimination decides.
pub fn rank_coef(rows: &[SparseVec<Coef>], ncols: usize) -> usize {
    let full = rows.len().min(ncols);
    if let Some(d) = coef_order(rows) {
        for salt in 0..2 {
            if rank_mod(rows, ModContext::for_order(d, salt)) == Some(full) {
                return full;
            }
        }
    }
    rank(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycloField;

    fn c(n: i64) -> Coef {
        Coef::int(n)
    }

    #[test]
    fn kernel_of_dependent_rows() {
        let vs = vec![
            vec![(0, c(1)), (1, c(2))],
            vec![(0, c(2)), (1, c(4))],
            vec![(1, c(1))],
        ];
        let k = kernel(&vs);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![c(-2), c(1), c(0)]);
        assert_eq!(rank(&vs), 2);
    }

    #[test]
    fn express_and_det() {
        let vs = vec![vec![(0, c(1))], vec![(1, c(1))]];
        let b = vec![(0, c(3)), (1, c(-5))];
        assert_eq!(express(&vs, &b).unwrap(), vec![c(3), c(-5)]);
        let m = vec![vec![c(1), c(2)], vec![c(3), c(4)]];
        assert_eq!(det(&m), c(-2));
        let inv = invert(&m).unwrap();
        let id = mat_mul(&m, &inv);
        assert!(id[0][0].is_one() && id[0][1].is_zero());
    }

    #[test]
    fn modular_agrees_with_exact() {
        let f = CycloField::new(3);
        let z = Coef::zeta(&f);
        let rows = vec![
            vec![(0, z.clone()), (1, c(1))],
            vec![(0, c(1)), (1, &z * &z)],
        ];
        // det = z^3 - 1 = 0
        assert_eq!(rank(&rows), 1);
        assert_eq!(rank_coef(&rows, 2), 1);
        let ctx = ModContext::for_order(3, 0);
        assert_eq!(modp::pow(ctx.qval, 3, ctx.p), 1);
        assert_ne!(ctx.qval, 1);
        assert_eq!(rank_mod(&rows, ctx), Some(1));
    }
}
