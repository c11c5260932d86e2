//! Comodule algebras, coinvariants, gradings and the Galois map.

mod free;
mod presented;

pub use free::{galois_beta_ring, FreeExtension};
pub use presented::{homogeneous_coinvariants, trivial_hopf, PresentedCoaction};

use crate::error::{Error, Result};
use crate::findim::{
    add, add_to, function_algebra, group_algebra, scale, to_dense, to_sparse, Elem, FiniteGroup, Sparse, StructAlg,
    StructHopf, Tensor2, Tensor3,
};
use crate::linalg::{express, kernel, rank_coef, Echelon};
use crate::report::Report;
use crate::scalar::Coef;

/// Finite-dimensional comodule algebra `δ : A → A (x) H`.
#[derive(Clone, Debug)]
pub struct StructComod {
    pub a: StructAlg,
    pub h: StructHopf,
    /// `δ(e_i) = Σ c a_j (x) h_k`.
    pub delta: Vec<Vec<(usize, usize, Coef)>>,
}

impl StructComod {
    pub fn coact(&self, x: &[Coef]) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, k, c) in &self.delta[i] {
                add_to(&mut t, (*j, *k), a * c);
            }
        }
        t
    }

    /// `x (x) 1_H`
    pub fn with_unit(&self, x: &[Coef]) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (u, c) in &self.h.alg.unit {
                add_to(&mut t, (i, *u), a * c);
            }
        }
        t
    }

    /// Product in `A (x) H`.
    pub fn tensor_mul(&self, s: &Tensor2, t: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for ((i, j), c) in s {
            for ((k, l), d) in t {
                let cd = c * d;
                for (x, e) in &self.a.mult[*i][*k] {
                    let ce = &cd * e;
                    for (y, f) in &self.h.alg.mult[*j][*l] {
                        add_to(&mut out, (*x, *y), &ce * f);
                    }
                }
            }
        }
        out
    }

    /// Morphism property, coassociativity and counitarity on the basis.
    pub fn check(&self) -> Report {
        let n = self.a.dim();
        let la = &self.a.labels;
        let mut r = Report::new("comodule-algebra", &format!("{} over {}", self.a.name, self.h.name()));
        let images: Vec<Tensor2> = (0..n).map(|i| self.coact(&self.a.basis(i))).collect();
        let mut bad = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let l = self.coact(&to_dense(&self.a.mult[i][j], n));
                if l != self.tensor_mul(&images[i], &images[j]) {
                    bad = Some(format!("delta({}*{})", la[i], la[j]));
                    break 'outer;
                }
            }
        }
        r.record("delta is multiplicative", bad);
        let one = self.a.one();
        r.check("delta(1) = 1 (x) 1", self.coact(&one) == self.with_unit(&one), || "delta(1) differs".into());
        let mut coassoc = None;
        let mut counit = None;
        for i in 0..n {
            let mut left = Tensor3::new();
            let mut right = Tensor3::new();
            let mut cu = self.a.zero();
            for ((a, b), c) in &images[i] {
                for ((x, y), d) in &images[*a] {
                    add_to(&mut left, (*x, *y, *b), c * d);
                }
                for (x, y, d) in &self.h.delta[*b] {
                    add_to(&mut right, (*a, *x, *y), c * d);
                }
                cu[*a] = &cu[*a] + &(c * &self.h.counit[*b]);
            }
            if left != right && coassoc.is_none() {
                coassoc = Some(format!("on {}", la[i]));
            }
            if cu != self.a.basis(i) && counit.is_none() {
                counit = Some(format!("on {}: {}", la[i], self.a.show(&cu)));
            }
        }
        r.record("coassociativity (delta (x) id) delta = (id (x) Delta) delta", coassoc);
        r.record("counitarity (id (x) eps) delta = id", counit);
        r
    }

    /// Basis of `{a : δ(a) = a (x) 1}`.
    pub fn coinvariants(&self) -> Vec<Elem> {
        let n = self.a.dim();
        let m = self.h.dim();
        let rows: Vec<Sparse> = (0..n)
            .map(|i| {
                let b = self.a.basis(i);
                let mut t = self.coact(&b);
                for (k, c) in self.with_unit(&b) {
                    add_to(&mut t, k, -c);
                }
                t.into_iter().map(|((a, h), c)| (a * m + h, c)).collect()
            })
            .collect();
        kernel(&rows)
    }
}

/// `H` coacting on itself by `Δ`.
pub fn trivial_extension(h: &StructHopf) -> StructComod {
    StructComod { a: h.alg.clone(), h: h.clone(), delta: h.delta.clone() }
}

/// Base algebra `B` inside the coinvariants and a basis `{m_k}` of `A` as a free left `B`-module.
#[derive(Clone, Debug)]
pub struct ModuleBasis {
    pub base: Vec<Elem>,
    pub gens: Vec<Elem>,
}

#[derive(Clone, Debug)]
pub struct BetaOutcome {
    pub report: Report,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub bijective: bool,
}

/// Matrix of `β(a (x) a') = (a (x) 1) δ(a')` on `A (x)_B A`, presented as
/// `A (x) span{m_k}`, and an exact bijectivity decision.
pub fn galois_beta(c: &StructComod, module: Option<&ModuleBasis>) -> BetaOutcome {
    let n = c.a.dim();
    let m = c.h.dim();
    let mut r = Report::new("galois-map", &format!("{} over {}", c.a.name, c.h.name()));
    let trivial_base;
    let mb = match module {
        Some(mb) => mb,
        None => {
            trivial_base = ModuleBasis { base: vec![c.a.one()], gens: (0..n).map(|i| c.a.basis(i)).collect() };
            r.check("dim A = dim H", n == m, || format!("dim A = {n}, dim H = {m}"));
            &trivial_base
        }
    };
    let bad = mb.base.iter().find(|b| c.coact(b) != c.with_unit(b));
    r.record("base lies in the coinvariants", bad.map(|b| c.a.show(b)));
    let products: Vec<Sparse> = mb
        .gens
        .iter()
        .flat_map(|g| mb.base.iter().map(move |b| to_sparse(&c.a.mul(b, g))))
        .collect();
    let prk = rank_coef(&products, n);
    r.check(
        "A is free over the base on the given module basis",
        products.len() == n && prk == n,
        || format!("{} products of rank {prk} in dimension {n}", products.len()),
    );
    let rows: Vec<Sparse> = (0..n)
        .flat_map(|i| {
            mb.gens.iter().map(move |g| {
                let mut t = Tensor2::new();
                for ((a, h), v) in c.coact(g) {
                    for (k, w) in &c.a.mult[i][a] {
                        add_to(&mut t, (*k, h), &v * w);
                    }
                }
                t.into_iter().map(|((a, h), v)| (a * m + h, v)).collect::<Sparse>()
            })
        })
        .collect();
    let cols = n * m;
    let rank = rank_coef(&rows, cols);
    let bijective = rows.len() == cols && rank == cols && r.passed();
    r.check("beta is bijective", bijective, || format!("{} x {cols} matrix of rank {rank}", rows.len()));
    BetaOutcome { report: r, rows: rows.len(), cols, rank, bijective }
}

/// `β(x (x) y) = Σ x y_(1) (x) y_(2)` and `β₂(x (x) y) = Σ x S(y_(1)) (x) y_(2)`
/// on `H (x) H`; checks both composites are the identity on basis pairs.
pub fn check_beta_inverse(h: &StructHopf) -> Report {
    let n = h.dim();
    let mut r = Report::new("galois-map-inverse", h.name());
    let apply = |t: &Tensor2, anti: bool| -> Tensor2 {
        let mut out = Tensor2::new();
        for ((x, y), c) in t {
            for (a, b, d) in &h.delta[*y] {
                let left = if anti { to_dense(&h.antipode[*a], n) } else { h.alg.basis(*a) };
                let prod = h.alg.mul(&h.alg.basis(*x), &left);
                for (k, v) in prod.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    add_to(&mut out, (k, *b), &(c * d) * v);
                }
            }
        }
        out
    };
    let mut b1 = None;
    let mut b2 = None;
    for x in 0..n {
        for y in 0..n {
            let t: Tensor2 = [((x, y), Coef::one())].into_iter().collect();
            if apply(&apply(&t, true), false) != t && b1.is_none() {
                b1 = Some(format!("on {} (x) {}", h.labels()[x], h.labels()[y]));
            }
            if apply(&apply(&t, false), true) != t && b2.is_none() {
                b2 = Some(format!("on {} (x) {}", h.labels()[x], h.labels()[y]));
            }
        }
    }
    r.record("beta o beta2 = id", b1);
    r.record("beta2 o beta = id", b2);
    r
}

/// Algebra with a basis of homogeneous elements for a group grading.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedAlgebra {
    pub alg: StructAlg,
    pub group: FiniteGroup,
    pub degree: Vec<usize>,
}

impl GradedAlgebra {
    pub fn component(&self, g: usize) -> Vec<usize> {
        (0..self.alg.dim()).filter(|&i| self.degree[i] == g).collect()
    }

    /// `A_g A_h ⊂ A_{gh}` and `1 ∈ A_e`.
    pub fn check(&self) -> Report {
        let mut r = Report::new("grading", &self.alg.name);
        let n = self.alg.dim();
        let mut bad = None;
        for i in 0..n {
            for j in 0..n {
                let d = self.group.mul(self.degree[i], self.degree[j]);
                if self.alg.mult[i][j].iter().any(|(k, _)| self.degree[*k] != d) && bad.is_none() {
                    bad = Some(format!("{}*{}", self.alg.labels[i], self.alg.labels[j]));
                }
            }
        }
        r.record("A_g A_h in A_gh", bad);
        let e = self.group.identity();
        let unit_ok = self.alg.unit.iter().all(|(k, _)| self.degree[*k] == e);
        r.check("1 in A_e", unit_ok, || "unit has components outside A_e".into());
        r
    }

    /// `δ(a) = a (x) g` for `a ∈ A_g`.
    pub fn to_coaction(&self) -> StructComod {
        StructComod {
            a: self.alg.clone(),
            h: group_algebra(&self.group),
            delta: (0..self.alg.dim()).map(|i| vec![(i, self.degree[i], Coef::one())]).collect(),
        }
    }

    /// First pair `(g, h)` with `A_g A_h ≠ A_{gh}`, if any.
    pub fn strong_grading_witness(&self) -> Option<(usize, usize)> {
        let k = self.group.order();
        let n = self.alg.dim();
        for g in 0..k {
            for h in 0..k {
                let target = self.component(self.group.mul(g, h)).len();
                let prods: Vec<Sparse> = self
                    .component(g)
                    .iter()
                    .flat_map(|&i| self.component(h).into_iter().map(move |j| (i, j)))
                    .map(|(i, j)| self.alg.mult[i][j].clone())
                    .collect();
                if rank_coef(&prods, n) != target {
                    return Some((g, h));
                }
            }
        }
        None
    }

    pub fn is_strongly_graded(&self) -> bool {
        self.strong_grading_witness().is_none()
    }

    /// `A_e` together with one invertible element per degree, tried among
    /// the basis vectors of each component and then their sum.
    pub fn module_basis(&self) -> ModuleBasis {
        let n = self.alg.dim();
        let base = self.component(self.group.identity()).iter().map(|&i| self.alg.basis(i)).collect();
        let invertible = |x: &Elem| {
            let rows: Vec<Sparse> = (0..n).map(|j| to_sparse(&self.alg.mul(x, &self.alg.basis(j)))).collect();
            rank_coef(&rows, n) == n
        };
        let mut gens = Vec::new();
        for g in 0..self.group.order() {
            let comp = self.component(g);
            let sum = comp.iter().fold(self.alg.zero(), |acc, &i| add(&acc, &self.alg.basis(i)));
            let cands = comp.iter().map(|&i| self.alg.basis(i)).chain(std::iter::once(sum));
            if let Some(u) = cands.into_iter().find(|x| invertible(x)) {
                gens.push(u);
            }
        }
        ModuleBasis { base, gens }
    }
}

/// Grading recovered from a coaction of a group algebra: `δ(a) = Σ p_g(a) (x) g`.
#[derive(Clone, Debug)]
pub struct Grading {
    pub group: FiniteGroup,
    /// `projectors[g][i] = p_g(e_i)`.
    pub projectors: Vec<Vec<Elem>>,
    pub components: Vec<Vec<Elem>>,
}

/// The group when `h` is a group algebra on its basis.
pub fn group_of(h: &StructHopf) -> Result<FiniteGroup> {
    let n = h.dim();
    let mut table = vec![vec![0; n]; n];
    for i in 0..n {
        if h.delta[i] != vec![(i, i, Coef::one())] || !h.counit[i].is_one() {
            return Err(Error::NotGroupAlgebra("coaction target".into()));
        }
        for j in 0..n {
            match h.alg.mult[i][j].as_slice() {
                [(k, c)] if c.is_one() => table[i][j] = *k,
                _ => return Err(Error::NotGroupAlgebra("coaction target".into())),
            }
        }
    }
    FiniteGroup::from_table(h.labels().to_vec(), table).map_err(|e| Error::NotGroupAlgebra(e.to_string()))
}

pub fn coaction_to_grading(c: &StructComod) -> Result<Grading> {
    let group = group_of(&c.h)?;
    let n = c.a.dim();
    let k = group.order();
    let mut projectors = vec![vec![c.a.zero(); n]; k];
    for i in 0..n {
        for (a, g, v) in &c.delta[i] {
            projectors[*g][i][*a] = &projectors[*g][i][*a] + v;
        }
    }
    let components = projectors
        .iter()
        .map(|p| {
            let mut e = Echelon::new();
            let mut basis = Vec::new();
            for v in p {
                let s = to_sparse(v);
                if !s.is_empty() && e.insert(&s) {
                    basis.push(v.clone());
                }
            }
            basis
        })
        .collect();
    Ok(Grading { group, projectors, components })
}

impl Grading {
    /// `p_h ∘ p_g = δ_{g,h} p_g` and `Σ_g p_g = id`.
    pub fn check_projectors(&self, alg: &StructAlg) -> Report {
        let n = alg.dim();
        let k = self.group.order();
        let apply = |p: &Vec<Elem>, x: &Elem| -> Elem {
            let mut out = alg.zero();
            for (i, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                out = add(&out, &scale(&p[i], c));
            }
            out
        };
        let mut r = Report::new("projectors", &alg.name);
        let mut bad = None;
        for g in 0..k {
            for h in 0..k {
                for i in 0..n {
                    let l = apply(&self.projectors[h], &self.projectors[g][i]);
                    let expect = if g == h { self.projectors[g][i].clone() } else { alg.zero() };
                    if l != expect && bad.is_none() {
                        bad = Some(format!("p_{} p_{} on {}", self.group.label(h), self.group.label(g), alg.labels[i]));
                    }
                }
            }
        }
        r.record("p_h p_g = delta_gh p_g", bad);
        let bad = (0..n).find(|&i| (0..k).fold(alg.zero(), |acc, g| add(&acc, &self.projectors[g][i])) != alg.basis(i));
        r.record("sum of p_g = id", bad.map(|i| alg.labels[i].clone()));
        r
    }

    /// Graded algebra on a homogeneous basis. The original basis is kept when
    /// it is already homogeneous; otherwise the component bases are used and
    /// the structure constants are re-expressed.
    pub fn to_graded(&self, alg: &StructAlg) -> Result<GradedAlgebra> {
        let n = alg.dim();
        let homogeneous: Option<Vec<usize>> = (0..n)
            .map(|i| {
                let b = alg.basis(i);
                (0..self.group.order()).find(|&g| self.projectors[g][i] == b)
            })
            .collect();
        if let Some(degree) = homogeneous {
            return Ok(GradedAlgebra { alg: alg.clone(), group: self.group.clone(), degree });
        }
        let mut basis = Vec::new();
        let mut degree = Vec::new();
        for (g, comp) in self.components.iter().enumerate() {
            for v in comp {
                basis.push(v.clone());
                degree.push(g);
            }
        }
        let new = change_basis(alg, &basis)?;
        Ok(GradedAlgebra { alg: new, group: self.group.clone(), degree })
    }
}

/// Structure constants of `alg` in a new basis.
pub fn change_basis(alg: &StructAlg, basis: &[Elem]) -> Result<StructAlg> {
    let n = alg.dim();
    let vs: Vec<Sparse> = basis.iter().map(|v| to_sparse(v)).collect();
    if basis.len() != n || rank_coef(&vs, n) != n {
        return Err(Error::DimensionMismatch("new basis is not a basis".into()));
    }
    let coords = |x: &Elem| -> Result<Sparse> {
        express(&vs, &to_sparse(x))
            .map(|c| to_sparse(&c))
            .ok_or_else(|| Error::SingularSystem("vector outside the span".into()))
    };
    let mut mult = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            mult[i][j] = coords(&alg.mul(&basis[i], &basis[j]))?;
        }
    }
    Ok(StructAlg {
        name: alg.name.clone(),
        labels: basis.iter().map(|v| format!("({})", alg.show(v))).collect(),
        mult,
        unit: coords(&alg.one())?,
    })
}

/// `δ(a) = Σ_g ρ(g)(a) (x) δ_g` for an action of `g` on `alg`, given as
/// matrices `rho[g][i] = ρ(g)(e_i)`.
pub fn action_coaction(alg: &StructAlg, g: &FiniteGroup, rho: &[Vec<Elem>]) -> StructComod {
    let h = function_algebra(g);
    let n = alg.dim();
    let delta = (0..n)
        .map(|i| {
            let mut v = Vec::new();
            for (x, img) in rho.iter().enumerate() {
                for (a, c) in img[i].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    v.push((a, x, c.clone()));
                }
            }
            v
        })
        .collect();
    StructComod { a: alg.clone(), h, delta }
}

/// Basis of `{a : ρ(g)(a) = a for all g}`.
pub fn invariants(alg: &StructAlg, rho: &[Vec<Elem>]) -> Vec<Elem> {
    let n = alg.dim();
    let rows: Vec<Sparse> = (0..n)
        .map(|i| {
            let mut v = Vec::new();
            for (x, img) in rho.iter().enumerate() {
                let d = add(&img[i], &scale(&alg.basis(i), &Coef::int(-1)));
                v.extend(d.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(a, c)| (x * n + a, c)));
            }
            v
        })
        .collect();
    kernel(&rows)
}

/// Dimension of the span of a set of vectors.
pub fn span_dim(vs: &[Elem], n: usize) -> usize {
    rank_coef(&vs.iter().map(|v| to_sparse(v)).collect::<Vec<_>>(), n)
}

#[cfg(test)]
mod tests;
