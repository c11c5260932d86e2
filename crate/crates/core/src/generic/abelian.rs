//! Abelianization `H_ab` and its identification with a group algebra `ℂ[Γ]`.

use crate::error::{Error, Result};
use crate::findim::{FiniteGroup, StructHopf};
use crate::hopf::HopfPresentation;
use crate::linalg::{express, Echelon, SparseVec};
use crate::ncalg::{Gen, Word};
use crate::report::Report;
use crate::scalar::Coef;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// `H_ab = ℂ[Γ]` for a finite-dimensional `H`: `pi[b]` is the image of basis
/// element `b` as a combination of elements of `Γ`.
#[derive(Clone, Debug)]
pub struct Hab {
    pub group: FiniteGroup,
    pub pi: Vec<Vec<(usize, Coef)>>,
    pub ideal_dim: usize,
}

fn mul_sparse(h: &StructHopf, x: &SparseVec<Coef>, y: &SparseVec<Coef>) -> SparseVec<Coef> {
    let mut out: BTreeMap<usize, Coef> = BTreeMap::new();
    for (i, a) in x {
        for (j, b) in y {
            let ab = a * b;
            for (k, c) in &h.alg.mult[*i][*j] {
                let v = out.remove(k).unwrap_or_else(Coef::zero) + &ab * c;
                if !v.is_zero() {
                    out.insert(*k, v);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Two-sided ideal generated by all commutators of basis elements.
fn commutator_ideal(h: &StructHopf) -> Echelon<Coef> {
    let n = h.dim();
    let mut ideal = Echelon::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        for j in i + 1..n {
            let ij = mul_sparse(h, &vec![(i, Coef::one())], &vec![(j, Coef::one())]);
            let ji = mul_sparse(h, &vec![(j, Coef::one())], &vec![(i, Coef::one())]);
            let mut m: BTreeMap<usize, Coef> = ij.into_iter().collect();
            for (k, c) in ji {
                let v = m.remove(&k).unwrap_or_else(Coef::zero) - c;
                if !v.is_zero() {
                    m.insert(k, v);
                }
            }
            let v: SparseVec<Coef> = m.into_iter().collect();
            if ideal.insert(&v) {
                queue.push_back(v);
            }
        }
    }
    while let Some(v) = queue.pop_front() {
        if ideal.rank() == n {
            break;
        }
        for b in 0..n {
            let e = vec![(b, Coef::one())];
            for w in [mul_sparse(h, &e, &v), mul_sparse(h, &v, &e)] {
                if ideal.insert(&w) {
                    queue.push_back(w);
                }
            }
        }
    }
    ideal
}

/// Abelianization of a finite-dimensional Hopf algebra, required to be
/// spanned by the images of group-like basis elements.
pub fn hab(h: &StructHopf) -> Result<Hab> {
    let n = h.dim();
    let ideal = commutator_ideal(h);
    let rep = |b: usize| ideal.reduce(&vec![(b, Coef::one())]);
    let gl = super::grouplike_basis(h);
    let mut classes: Vec<SparseVec<Coef>> = Vec::new();
    let mut class_of = vec![None; n];
    let mut labels = Vec::new();
    for b in (0..n).filter(|&b| gl[b]) {
        let r = rep(b);
        let k = match classes.iter().position(|c| *c == r) {
            Some(k) => k,
            None => {
                classes.push(r);
                labels.push(h.labels()[b].clone());
                classes.len() - 1
            }
        };
        class_of[b] = Some(k);
    }
    let qdim = n - ideal.rank();
    if classes.len() != qdim || crate::linalg::rank(&classes) != qdim {
        return Err(Error::NotGroupAlgebra(format!(
            "abelianization of {} has dimension {qdim} but {} group-like classes",
            h.name(),
            classes.len()
        )));
    }
    let reps: Vec<usize> = (0..classes.len()).map(|k| class_of.iter().position(|c| *c == Some(k)).unwrap()).collect();
    let mut table = vec![vec![0; reps.len()]; reps.len()];
    for (a, &ga) in reps.iter().enumerate() {
        for (b, &gb) in reps.iter().enumerate() {
            let p = ideal.reduce(&h.alg.mult[ga][gb]);
            table[a][b] = classes.iter().position(|c| *c == p).ok_or_else(|| {
                Error::NotGroupAlgebra(format!("{} * {} is not a group-like class", labels[a], labels[b]))
            })?;
        }
    }
    let group = FiniteGroup::from_table(labels, table)?;
    let mut pi = Vec::with_capacity(n);
    for b in 0..n {
        let r = rep(b);
        let c = express(&classes, &r).ok_or_else(|| Error::NotGroupAlgebra(format!("{} outside the span", h.labels()[b])))?;
        pi.push(c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect());
    }
    let out = Hab { group, pi, ideal_dim: ideal.rank() };
    if let Some(f) = out.check(h).failures().next() {
        return Err(Error::NotGroupAlgebra(format!("{}: {}", f.name, f.witness.clone().unwrap_or_default())));
    }
    Ok(out)
}

impl Hab {
    /// `π` is multiplicative, unital, counital and `(π (x) π)Δ = Δ_Γ π`.
    pub fn check(&self, h: &StructHopf) -> Report {
        let g = &self.group;
        let mut r = Report::new("abelianization", h.name());
        let img = |v: &SparseVec<Coef>| -> BTreeMap<usize, Coef> {
            let mut m = BTreeMap::new();
            for (b, c) in v {
                for (k, x) in &self.pi[*b] {
                    let s: Coef = m.remove(k).unwrap_or_else(Coef::zero) + c * x;
                    if !s.is_zero() {
                        m.insert(*k, s);
                    }
                }
            }
            m
        };
        let n = h.dim();
        let mut bad = None;
        'outer: for a in 0..n {
            for b in 0..n {
                let lhs = img(&h.alg.mult[a][b]);
                let mut rhs: BTreeMap<usize, Coef> = BTreeMap::new();
                for (x, c) in &self.pi[a] {
                    for (y, d) in &self.pi[b] {
                        let k = g.mul(*x, *y);
                        let s: Coef = rhs.remove(&k).unwrap_or_else(Coef::zero) + c * d;
                        if !s.is_zero() {
                            rhs.insert(k, s);
                        }
                    }
                }
                if lhs != rhs {
                    bad = Some(format!("pi({} * {})", h.labels()[a], h.labels()[b]));
                    break 'outer;
                }
            }
        }
        r.record("pi is multiplicative", bad);
        let u = img(&h.alg.unit);
        r.check("pi is unital", u == BTreeMap::from([(g.identity(), Coef::one())]), || format!("{u:?}"));
        let mut bad = None;
        for b in 0..n {
            let mut lhs: BTreeMap<(usize, usize), Coef> = BTreeMap::new();
            for (x, y, c) in &h.delta[b] {
                for (i, a) in &self.pi[*x] {
                    for (j, d) in &self.pi[*y] {
                        let s: Coef = lhs.remove(&(*i, *j)).unwrap_or_else(Coef::zero) + &(c * a) * d;
                        if !s.is_zero() {
                            lhs.insert((*i, *j), s);
                        }
                    }
                }
            }
            let rhs: BTreeMap<(usize, usize), Coef> = self.pi[b].iter().map(|(k, c)| ((*k, *k), c.clone())).collect();
            let eps = self.pi[b].iter().fold(Coef::zero(), |acc, (_, c)| acc + c);
            if lhs != rhs || eps != h.counit[b] {
                bad = Some(h.labels()[b].clone());
                break;
            }
        }
        r.record("pi is a coalgebra map", bad);
        r
    }
}

/// Abelianization of a presented Hopf algebra. Each generator becomes a
/// commuting variable (a generator and its declared inverse share one
/// exponent); single-term relations kill the non-unit variable they
/// contain, and the remaining binomial relations cut out a lattice `L` with
/// `Γ = ℤ^r / L` finite.
#[derive(Clone, Debug)]
pub struct PresentedHab {
    pub group: FiniteGroup,
    /// Image of each generator: `None` for zero, else an element of `Γ`.
    pub image: Vec<Option<usize>>,
    /// One line per derived fact.
    pub derivation: Vec<String>,
}

type Lin = BTreeMap<Vec<i64>, Coef>;

fn abelianize_word(var: &[(usize, i64)], r: usize, w: &[Gen]) -> Vec<i64> {
    let mut e = vec![0i64; r];
    for &g in w {
        let (v, s) = var[g as usize];
        e[v] += s;
    }
    e
}

fn add_lin(m: &mut Lin, k: Vec<i64>, c: Coef) {
    let s = m.remove(&k).unwrap_or_else(Coef::zero) + c;
    if !s.is_zero() {
        m.insert(k, s);
    }
}

/// Hermite normal form of an integer lattice of full rank `r`, upper triangular
/// with positive diagonal.
fn hnf(mut rows: Vec<Vec<i64>>, r: usize) -> Option<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for col in 0..r {
        loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| rows[i][col].abs()).unwrap();
            for &i in &nz {
                if i != p {
                    let f = rows[i][col] / rows[p][col];
                    let pr = rows[p].clone();
                    for (x, y) in rows[i].iter_mut().zip(&pr) {
                        *x -= f * y;
                    }
                }
            }
        }
        let p = (0..rows.len()).find(|&i| rows[i][col] != 0)?;
        let mut row = rows.remove(p);
        if row[col] < 0 {
            row.iter_mut().for_each(|x| *x = -*x);
        }
        out.push(row);
    }
    Some(out)
}

fn reduce_lattice(h: &[Vec<i64>], mut v: Vec<i64>) -> Vec<i64> {
    for (i, row) in h.iter().enumerate() {
        let f = v[i].div_euclid(row[i]);
        for (x, y) in v.iter_mut().zip(row) {
            *x -= f * y;
        }
    }
    v
}

pub fn hab_presented(h: &HopfPresentation) -> Result<PresentedHab> {
    let alpha = h.alphabet().clone();
    let mut var = Vec::with_capacity(alpha.len());
    let mut names: Vec<String> = Vec::new();
    for g in 0..alpha.len() as Gen {
        match alpha.inverse(g) {
            Some(i) if i < g => {
                let (v, _) = var[i as usize];
                var.push((v, -1i64));
            }
            _ => {
                var.push((names.len(), 1));
                names.push(alpha.name(g).to_string());
            }
        }
    }
    let r = names.len();
    let rels: Vec<Lin> = h
        .alg
        .relations()
        .iter()
        .map(|p| {
            let mut m = Lin::new();
            for (w, c) in p.terms() {
                add_lin(&mut m, abelianize_word(&var, r, w), c.clone());
            }
            m
        })
        .collect();
    let mut unit: Vec<bool> = (0..r).map(|v| (0..alpha.len()).any(|g| var[g].0 == v && alpha.inverse(g as Gen).is_some())).collect();
    let mut derivation = Vec::new();
    for m in &rels {
        if let [(a, ca), (b, cb)] = m.iter().collect::<Vec<_>>().as_slice() {
            if (*ca + *cb).is_zero() {
                for (x, y) in [(a, b), (b, a)] {
                    let nz: Vec<usize> = (0..r).filter(|&v| x[v] != 0).collect();
                    if y.iter().all(|&e| e == 0) && nz.len() == 1 && !unit[nz[0]] {
                        unit[nz[0]] = true;
                        derivation.push(format!("{} is a unit", names[nz[0]]));
                    }
                }
            }
        }
    }
    let mut killed = vec![false; r];
    loop {
        let mut progress = false;
        for m in &rels {
            let live: Vec<(&Vec<i64>, &Coef)> = m.iter().filter(|(k, _)| (0..r).all(|v| !killed[v] || k[v] == 0)).collect();
            if let [(k, c)] = live.as_slice() {
                let nonunit: Vec<usize> = (0..r).filter(|&v| k[v] != 0 && !unit[v]).collect();
                if nonunit.len() == 1 {
                    killed[nonunit[0]] = true;
                    progress = true;
                    derivation.push(format!("{} = 0 (from a single term with coefficient {c})", names[nonunit[0]]));
                } else if nonunit.is_empty() {
                    return Err(Error::NotGroupAlgebra(format!("abelianization of {} is zero", h.name())));
                }
            }
        }
        if !progress {
            break;
        }
    }
    if let Some(v) = (0..r).find(|&v| !killed[v] && !unit[v]) {
        return Err(Error::NotGroupAlgebra(format!("{} survives without being a unit", names[v])));
    }
    let live: Vec<usize> = (0..r).filter(|&v| !killed[v]).collect();
    let mut lattice = Vec::new();
    for m in &rels {
        let terms: Vec<(&Vec<i64>, &Coef)> = m.iter().filter(|(k, _)| (0..r).all(|v| !killed[v] || k[v] == 0)).collect();
        match terms.as_slice() {
            [] => {}
            [(a, ca), (b, cb)] if (*ca + *cb).is_zero() => {
                let d: Vec<i64> = live.iter().map(|&v| a[v] - b[v]).collect();
                derivation.push(format!("lattice relation {d:?}"));
                lattice.push(d);
            }
            _ => return Err(Error::NotGroupAlgebra(format!("relation {m:?} is not binomial after abelianizing"))),
        }
    }
    let lr = live.len();
    let basis = hnf(lattice, lr).ok_or_else(|| Error::NotGroupAlgebra("abelianization is not finite".into()))?;
    let mut elems: Vec<Vec<i64>> = vec![vec![]];
    for row in basis.iter().enumerate().map(|(i, row)| row[i]) {
        elems = elems.into_iter().flat_map(|e| (0..row).map(move |k| [e.clone(), vec![k]].concat())).collect();
    }
    let index: BTreeMap<Vec<i64>, usize> = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let label = |e: &[i64]| -> String {
        let parts: Vec<String> = e
            .iter()
            .zip(&live)
            .filter(|(x, _)| **x != 0)
            .map(|(x, v)| if *x == 1 { names[*v].clone() } else { format!("{}^{x}", names[*v]) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("")
        }
    };
    let table: Vec<Vec<usize>> = elems
        .iter()
        .map(|a| {
            elems
                .iter()
                .map(|b| index[&reduce_lattice(&basis, a.iter().zip(b).map(|(x, y)| x + y).collect())])
                .collect()
        })
        .collect();
    let group = FiniteGroup::from_table(elems.iter().map(|e| label(e)).collect(), table)?;
    let image = (0..alpha.len())
        .map(|g| {
            let (v, s) = var[g];
            if killed[v] {
                return None;
            }
            let e: Vec<i64> = live.iter().map(|&u| if u == v { s } else { 0 }).collect();
            Some(index[&reduce_lattice(&basis, e)])
        })
        .collect();
    Ok(PresentedHab { group, image, derivation })
}

impl PresentedHab {
    /// Image of a word: `None` when it contains a generator mapping to zero.
    pub fn word_image(&self, w: &[Gen]) -> Option<usize> {
        w.iter().try_fold(self.group.identity(), |acc, &g| Some(self.group.mul(acc, self.image[g as usize]?)))
    }
}

/// A proposed `π` on generators (`None` for zero) kills every relation and
/// is compatible with `Δ` and `ε`.
pub fn check_hab_candidate(h: &HopfPresentation, group: &FiniteGroup, images: &[Option<usize>]) -> Report {
    let cand = PresentedHab { group: group.clone(), image: images.to_vec(), derivation: vec![] };
    let mut r = Report::new("abelianization candidate", h.name());
    let apply = |p: &crate::ncalg::NcPoly<Coef>| -> BTreeMap<usize, Coef> {
        let mut m = BTreeMap::new();
        for (w, c) in p.terms() {
            if let Some(k) = cand.word_image(w) {
                let s: Coef = m.remove(&k).unwrap_or_else(Coef::zero) + c;
                if !s.is_zero() {
                    m.insert(k, s);
                }
            }
        }
        m
    };
    let bad = h.alg.relations().iter().map(apply).find(|m| !m.is_empty());
    r.record("relations map to zero", bad.map(|m| format!("{m:?}")));
    let mut bad = None;
    for g in 0..h.alphabet().len() as Gen {
        let mut lhs: BTreeMap<(usize, usize), Coef> = BTreeMap::new();
        for (legs, c) in h.delta_gen(g).terms() {
            if let (Some(a), Some(b)) = (cand.word_image(&legs[0]), cand.word_image(&legs[1])) {
                let s: Coef = lhs.remove(&(a, b)).unwrap_or_else(Coef::zero) + c;
                if !s.is_zero() {
                    lhs.insert((a, b), s);
                }
            }
        }
        let rhs: BTreeMap<(usize, usize), Coef> =
            images[g as usize].map(|k| ((k, k), Coef::one())).into_iter().collect();
        let eps_ok = match images[g as usize] {
            Some(_) => h.eps_gen(g).is_one(),
            None => h.eps_gen(g).is_zero(),
        };
        if lhs != rhs || !eps_ok {
            bad = Some(h.alphabet().name(g).to_string());
            break;
        }
    }
    r.record("coalgebra compatibility on generators", bad);
    r
}

/// Degree in `Γ` of the symbol `t_w` for a normal word `w`:
/// `δ(t_w) = Σ t_{w(1)} (x) π(w(2))` must be the single term `t_w (x) γ`.
pub fn gamma_grading_presented(h: &HopfPresentation, ab: &PresentedHab, w: &Word) -> Result<usize> {
    let mut m: BTreeMap<(Word, usize), Coef> = BTreeMap::new();
    for (legs, c) in h.delta_word(w).terms() {
        if let Some(g) = ab.word_image(&legs[1]) {
            let key = (legs[0].clone(), g);
            let s: Coef = m.remove(&key).unwrap_or_else(Coef::zero) + c;
            if !s.is_zero() {
                m.insert(key, s);
            }
        }
    }
    let alpha = h.alphabet();
    match m.into_iter().collect::<Vec<_>>().as_slice() {
        [((x, g), c)] if x == w && c.is_one() => Ok(*g),
        other => {
            let shown: BTreeSet<String> =
                other.iter().map(|((x, g), c)| format!("{c} t_{} (x) {}", alpha.fmt_word(x), ab.group.label(*g))).collect();
            Err(Error::MultipleDegrees(format!(
                "delta(t_{}) = {}",
                alpha.fmt_word(w),
                shown.into_iter().collect::<Vec<_>>().join(" + ")
            )))
        }
    }
}

/// The lattice `Y = {v ∈ ℤ^n : Σ v_b deg(t_b) = 0}` of exponent vectors of
/// degree-zero monomials, with an upper triangular basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeKernel {
    pub basis: Vec<Vec<i64>>,
    /// `[ℤ^n : Y]`.
    pub index: u64,
}

/// Row-reduces the first `cols` columns of `rows` with unimodular row
/// operations; returns the pivot rows and the rows left with zero there.
fn eliminate(mut rows: Vec<Vec<i64>>, cols: usize) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let mut pivots = Vec::new();
    for col in 0..cols {
        loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| rows[i][col].abs()).unwrap();
            let pr = rows[p].clone();
            for &i in &nz {
                if i != p {
                    let f = rows[i][col] / pr[col];
                    for (x, y) in rows[i].iter_mut().zip(&pr) {
                        *x -= f * y;
                    }
                }
            }
        }
        if let Some(p) = (0..rows.len()).find(|&i| rows[i][col] != 0) {
            pivots.push(rows.remove(p));
        }
    }
    (pivots, rows)
}

/// Kernel of the exponent map `ℤ^n → Γ` of a grading, via elementary
/// divisors of `Γ`.
pub fn lattice_kernel(g: &super::GammaGrading) -> Result<LatticeKernel> {
    let inv = crate::galoisobj::AbelianInvariants::of_group(&g.group)?;
    let iso = g
        .group
        .find_isomorphism(&inv.group())
        .ok_or_else(|| Error::InvalidGroup("no cyclic decomposition".into()))?;
    let r = inv.factors().len();
    let n = g.degree.len();
    let mut rows = Vec::with_capacity(n + r);
    for (b, &d) in g.degree.iter().enumerate() {
        let mut row: Vec<i64> = inv.coords(iso[d]).iter().map(|&x| x as i64).collect();
        row.extend((0..n).map(|j| i64::from(j == b)));
        rows.push(row);
    }
    for (k, &f) in inv.factors().iter().enumerate() {
        let mut row = vec![0i64; r + n];
        row[k] = f as i64;
        rows.push(row);
    }
    let (_, rest) = eliminate(rows, r);
    let kernel: Vec<Vec<i64>> = rest.into_iter().map(|row| row[r..].to_vec()).filter(|v| v.iter().any(|&x| x != 0)).collect();
    let (mut basis, _) = eliminate(kernel, n);
    for (i, row) in basis.iter_mut().enumerate() {
        if row[i] < 0 {
            row.iter_mut().for_each(|x| *x = -*x);
        }
    }
    if basis.len() != n {
        return Err(Error::InvalidArgument("kernel lattice is not of full rank".into()));
    }
    let index = basis.iter().enumerate().map(|(i, row)| row[i].unsigned_abs()).product();
    Ok(LatticeKernel { basis, index })
}

impl LatticeKernel {
    pub fn contains(&self, v: &[i64]) -> bool {
        let mut v = v.to_vec();
        for (i, row) in self.basis.iter().enumerate() {
            if v[i] % row[i] != 0 {
                return false;
            }
            let f = v[i] / row[i];
            for (x, y) in v.iter_mut().zip(row) {
                *x -= f * y;
            }
        }
        v.iter().all(|&x| x == 0)
    }
}
