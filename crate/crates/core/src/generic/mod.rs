//! Generic Hopf Galois extensions of a finite-dimensional `H`: parameter
//! symbols `t_b`, the convolution inverse `t⁻¹`, the cocycle `σ`, the grading
//! by the abelianization and the algebra `A_H`.

mod abelian;
mod fast;
mod xvar;

pub use fast::associativity_witness;
pub use abelian::{
    check_hab_candidate, gamma_grading_presented, hab, hab_presented, lattice_kernel, Hab, LatticeKernel, PresentedHab,
};
pub use xvar::{
    thm812_relations, thm813_relations, uq_context, uq_pbw_degree, uq_symbol_grading, uq_symbols, verify_thm812, verify_thm813, x_var, Identity,
    XContext, XOutcome,
};

use crate::comod::{galois_beta, FreeExtension, StructComod};
use crate::error::{Error, Result};
use crate::findim::{FiniteGroup, StructHopf};
use crate::linalg::{invert, SparseVec};
use crate::report::Report;
use crate::scalar::{Coef, Mono, Scalar, SymTable, TFrac, TPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Basis indices `b` with `Δ(b) = b (x) b` and `ε(b) = 1`.
pub fn grouplike_basis(h: &StructHopf) -> Vec<bool> {
    (0..h.dim())
        .map(|b| h.delta[b] == vec![(b, b, Coef::one())] && h.counit[b].is_one())
        .collect()
}

/// Symbols `t_b`, one per basis element, invertible exactly on group-likes.
#[derive(Clone, Debug)]
pub struct TSymRing {
    pub syms: Arc<SymTable>,
    pub labels: Vec<String>,
}

impl TSymRing {
    pub fn for_hopf(h: &StructHopf) -> TSymRing {
        let gl = grouplike_basis(h);
        let names: Vec<(String, bool)> =
            h.labels().iter().zip(&gl).map(|(l, &g)| (format!("t_{}", l.replace('*', "")), g)).collect();
        TSymRing { syms: SymTable::new(&names).expect("distinct labels"), labels: h.labels().to_vec() }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn t(&self, b: usize) -> TPoly {
        TPoly::sym(&self.syms, b as u16)
    }

    pub fn is_invertible(&self, b: usize) -> bool {
        self.syms.is_invertible(b as u16)
    }

    /// `(free, invertible)` symbol counts: characters form `ℂ^free × (ℂ^×)^invertible`.
    pub fn character_shape(&self) -> (usize, usize) {
        let inv = (0..self.len()).filter(|&b| self.is_invertible(b)).count();
        (self.len() - inv, inv)
    }

    /// `t_b ↦ ε(b)`.
    pub fn counit_character(&self, h: &StructHopf) -> Vec<Option<Coef>> {
        h.counit.iter().cloned().map(Some).collect()
    }

    /// Invertible symbols from `{±1, ±2, 1/2}`, free ones from `{0, ±1, 2}`.
    pub fn random_character(&self, seed: u64) -> Vec<Option<Coef>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inv = [Coef::one(), Coef::int(-1), Coef::int(2), Coef::int(-2), Coef::rat(1, 2)];
        let free = [Coef::zero(), Coef::one(), Coef::int(-1), Coef::int(2)];
        (0..self.len())
            .map(|b| {
                let pool: &[Coef] = if self.is_invertible(b) { &inv } else { &free };
                Some(pool[rng.gen_range(0..pool.len())].clone())
            })
            .collect()
    }
}

/// Values `t⁻¹_b`.
#[derive(Clone, Debug, PartialEq)]
pub struct TInvTable {
    pub values: Vec<TPoly>,
}

fn unit_index(h: &StructHopf) -> Result<usize> {
    match h.alg.unit.as_slice() {
        [(i, c)] if c.is_one() => Ok(*i),
        _ => Err(Error::InvalidArgument("unit must be a basis element".into())),
    }
}

/// `Σ t⁻¹_{x(1)} t_{x(2)}` (left) or `Σ t_{x(1)} t⁻¹_{x(2)}` (right) for every basis `x`.
fn convolution(h: &StructHopf, r: &TSymRing, inv: &[TPoly], left: bool) -> Vec<TPoly> {
    (0..h.dim())
        .map(|x| {
            h.delta[x].iter().fold(TPoly::zero(), |acc, (a, b, c)| {
                let term = if left { inv[*a].times(&r.t(*b)) } else { r.t(*a).times(&inv[*b]) };
                acc.plus(&term.scale(c))
            })
        })
        .collect()
}

/// Solves `Σ t⁻¹_{x(1)} t_{x(2)} = ε(x)` by successive elimination on
/// equations with a single unknown and a unit coefficient; the mirrored
/// identity is then verified.
pub fn t_inverse_solve(h: &StructHopf, r: &TSymRing) -> Result<TInvTable> {
    let n = h.dim();
    // coefficient of t⁻¹_a in equation x
    let rows: Vec<BTreeMap<usize, TPoly>> = (0..n)
        .map(|x| {
            let mut m: BTreeMap<usize, TPoly> = BTreeMap::new();
            for (a, b, c) in &h.delta[x] {
                let v = m.remove(a).unwrap_or_else(TPoly::zero).plus(&r.t(*b).scale(c));
                if !v.is_zero() {
                    m.insert(*a, v);
                }
            }
            m
        })
        .collect();
    let mut val: Vec<Option<TPoly>> = vec![None; n];
    let mut used = vec![false; n];
    loop {
        let mut progress = false;
        for x in 0..n {
            if used[x] {
                continue;
            }
            let open: Vec<usize> = rows[x].keys().copied().filter(|a| val[*a].is_none()).collect();
            if open.len() != 1 {
                continue;
            }
            let a = open[0];
            let Some(pivot) = rows[x][&a].unit_inverse() else { continue };
            let mut rhs = TPoly::constant(h.counit[x].clone());
            for (b, c) in &rows[x] {
                if *b != a {
                    rhs = rhs.minus(&c.times(val[*b].as_ref().unwrap()));
                }
            }
            val[a] = Some(rhs.times(&pivot));
            used[x] = true;
            progress = true;
        }
        if !progress {
            break;
        }
    }
    if val.iter().any(Option::is_none) {
        if let Some(v) = fraction_solve(h, &rows) {
            val = v.into_iter().map(Some).collect();
        }
    }
    if let Some(a) = val.iter().position(Option::is_none) {
        let shown: Vec<String> = rows
            .iter()
            .enumerate()
            .map(|(x, m)| {
                let terms: Vec<String> = m.iter().map(|(a, c)| format!("({c})*inv_{}", r.labels[*a])).collect();
                format!("{}: {} = {}", r.labels[x], terms.join(" + "), h.counit[x])
            })
            .collect();
        return Err(Error::SingularSystem(format!(
            "no unit pivot for t^-1 of {}; system: {}",
            r.labels[a],
            shown.join("; ")
        )));
    }
    let values: Vec<TPoly> = val.into_iter().map(Option::unwrap).collect();
    let t = TInvTable { values };
    let rep = check_tinv(h, r, &t);
    if let Some(f) = rep.failures().next() {
        return Err(Error::SingularSystem(format!("{}: {}", f.name, f.witness.clone().unwrap_or_default())));
    }
    Ok(t)
}

/// Gaussian elimination over the fraction field; `None` unless the system is
/// regular and every solution is a Laurent polynomial.
fn fraction_solve(h: &StructHopf, rows: &[BTreeMap<usize, TPoly>]) -> Option<Vec<TPoly>> {
    let n = h.dim();
    let m: Vec<Vec<TFrac>> = rows
        .iter()
        .map(|r| (0..n).map(|a| TFrac::from_poly(r.get(&a).cloned().unwrap_or_else(TPoly::zero))).collect())
        .collect();
    let inv = invert(&m)?;
    (0..n)
        .map(|a| {
            let v = (0..n).fold(TFrac::zero(), |acc, x| {
                acc.plus(&inv[a][x].times(&TFrac::from_poly(TPoly::constant(h.counit[x].clone()))))
            });
            v.as_poly()
        })
        .collect()
}

/// Both one-sided defining identities of `t⁻¹`.
pub fn check_tinv(h: &StructHopf, r: &TSymRing, t: &TInvTable) -> Report {
    let mut rep = Report::new("t-inverse", h.name());
    for (left, name) in [(true, "sum t^-1_(1) t_(2) = eps"), (false, "sum t_(1) t^-1_(2) = eps")] {
        let conv = convolution(h, r, &t.values, left);
        let bad = (0..h.dim()).find(|&x| conv[x] != TPoly::constant(h.counit[x].clone()));
        rep.record(name, bad.map(|x| format!("on {}: {}", r.labels[x], conv[x])));
    }
    rep
}

/// `σ(x, y) = Σ t_{x(1)} t_{y(1)} t⁻¹_{x(2) y(2)}`.
pub fn sigma(h: &StructHopf, r: &TSymRing, tinv: &TInvTable, x: usize, y: usize) -> TPoly {
    let mut acc = TPoly::zero();
    for (a, b, c) in &h.delta[x] {
        for (a2, b2, c2) in &h.delta[y] {
            let tt = r.t(*a).times(&r.t(*a2));
            let cc = c * c2;
            for (k, d) in &h.alg.mult[*b][*b2] {
                acc = acc.plus(&tt.times(&tinv.values[*k]).scale(&(&cc * d)));
            }
        }
    }
    acc
}

pub fn sigma_table(h: &StructHopf, r: &TSymRing, tinv: &TInvTable) -> Vec<Vec<TPoly>> {
    (0..h.dim()).map(|x| (0..h.dim()).map(|y| sigma(h, r, tinv, x, y)).collect()).collect()
}

/// Degrees of the symbols `t_b` in the group `Γ` with `H_ab = ℂ[Γ]`.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaGrading {
    pub group: FiniteGroup,
    pub degree: Vec<usize>,
}

impl GammaGrading {
    pub fn mono_degree(&self, m: &Mono) -> usize {
        let g = &self.group;
        m.iter().fold(g.identity(), |acc, &(s, e)| {
            let base = if e < 0 { g.inv(self.degree[s as usize]) } else { self.degree[s as usize] };
            (0..e.unsigned_abs()).fold(acc, |a, _| g.mul(a, base))
        })
    }

    /// The common degree of all monomials.
    pub fn degree_of(&self, p: &TPoly) -> Result<Option<usize>> {
        let mut ds = p.terms().iter().map(|(m, _)| self.mono_degree(m));
        let Some(first) = ds.next() else { return Ok(None) };
        if ds.any(|d| d != first) {
            return Err(Error::MultipleDegrees(format!("{p}")));
        }
        Ok(Some(first))
    }

    pub fn is_degree_zero(&self, p: &TPoly) -> bool {
        p.terms().iter().all(|(m, _)| self.mono_degree(m) == self.group.identity())
    }

    pub fn is_trivial(&self) -> bool {
        self.degree.iter().all(|&d| d == self.group.identity())
    }
}

/// `δ(t_b) = Σ t_{b(1)} (x) π(b(2))` must be `t_b (x) γ` for a single `γ`.
pub fn gamma_grading(h: &StructHopf, ab: &Hab) -> Result<GammaGrading> {
    let mut degree = Vec::with_capacity(h.dim());
    for b in 0..h.dim() {
        let mut m: BTreeMap<(usize, usize), Coef> = BTreeMap::new();
        for (a, c, coef) in &h.delta[b] {
            for (g, lam) in &ab.pi[*c] {
                let v = &m.remove(&(*a, *g)).unwrap_or_else(Coef::zero) + &(coef * lam);
                if !v.is_zero() {
                    m.insert((*a, *g), v);
                }
            }
        }
        match m.into_iter().collect::<Vec<_>>().as_slice() {
            [((a, g), c)] if *a == b && c.is_one() => degree.push(*g),
            other => {
                let shown: Vec<String> =
                    other.iter().map(|((a, g), c)| format!("{c} t_{} (x) {}", h.labels()[*a], ab.group.label(*g))).collect();
                return Err(Error::MultipleDegrees(format!("delta(t_{}) = {}", h.labels()[b], shown.join(" + "))));
            }
        }
    }
    Ok(GammaGrading { group: ab.group.clone(), degree })
}

/// Generators `u_b` of `B_H`: `t_b` in degree 0, `t_b t_odd⁻¹` otherwise, for
/// a grading by `ℤ/2` (or the trivial group) with `odd` an invertible symbol of degree 1.
pub fn bh_generators(r: &TSymRing, g: &GammaGrading, odd: Option<usize>) -> Result<Vec<TPoly>> {
    if g.group.order() > 2 {
        return Err(Error::InvalidArgument("substitution generators need a grading by Z/2".into()));
    }
    (0..r.len())
        .map(|b| {
            if g.degree[b] == g.group.identity() {
                return Ok(r.t(b));
            }
            let k = odd.ok_or_else(|| Error::InvalidArgument("no odd invertible symbol".into()))?;
            let u = r.t(b).times(&r.t(k).unit_inverse().ok_or_else(|| Error::NotInvertible(r.labels[k].clone()))?);
            if g.is_degree_zero(&u) {
                Ok(u)
            } else {
                Err(Error::DegreeAssertion(format!("u for {}", r.labels[b])))
            }
        })
        .collect()
}

/// `A_H` as a free module over the parameter ring on `1 (x) x`.
#[derive(Clone, Debug)]
pub struct GenericExtension {
    pub h: StructHopf,
    pub ring: TSymRing,
    pub tinv: TInvTable,
    pub sigma: Vec<Vec<TPoly>>,
    pub hab: Hab,
    pub grading: GammaGrading,
    pub ext: FreeExtension<TPoly>,
}

/// `(b (x) x) * (c (x) y) = Σ bc σ(x(1), y(1)) (x) x(2) y(2)`, unit `t₁⁻¹ (x) 1`.
pub fn generic_extension(h: &StructHopf) -> Result<GenericExtension> {
    let ring = TSymRing::for_hopf(h);
    let tinv = t_inverse_solve(h, &ring)?;
    let sig = sigma_table(h, &ring, &tinv);
    let ab = hab(h)?;
    let grading = gamma_grading(h, &ab)?;
    for x in 0..h.dim() {
        for y in 0..h.dim() {
            if !grading.is_degree_zero(&sig[x][y]) {
                return Err(Error::DegreeAssertion(format!(
                    "sigma({}, {}) = {}",
                    ring.labels[x], ring.labels[y], sig[x][y]
                )));
            }
        }
    }
    let mult = star_table(h, &sig, false);
    let one = unit_index(h)?;
    let ext = FreeExtension {
        name: format!("A_{}", h.name()),
        labels: h.labels().to_vec(),
        mult,
        unit: vec![(one, tinv.values[one].clone())],
        h: h.clone(),
        delta: h.delta.iter().map(|d| d.iter().map(|(a, b, c)| (*a, *b, TPoly::constant(c.clone()))).collect()).collect(),
    };
    Ok(GenericExtension { h: h.clone(), ring, tinv, sigma: sig, hab: ab, grading, ext })
}

/// Structure constants of `*`; with `swapped` the legs of `σ` are exchanged.
fn star_table(h: &StructHopf, sig: &[Vec<TPoly>], swapped: bool) -> Vec<Vec<SparseVec<TPoly>>> {
    let n = h.dim();
    let mut mult = Vec::with_capacity(n);
    for x in 0..n {
        let mut row = Vec::with_capacity(n);
        for y in 0..n {
            let mut acc: BTreeMap<usize, TPoly> = BTreeMap::new();
            for (a, b, c) in &h.delta[x] {
                for (a2, b2, c2) in &h.delta[y] {
                    let v = if swapped { &sig[*a2][*a] } else { &sig[*a][*a2] };
                    let s = v.scale(&(c * c2));
                    if s.is_zero() {
                        continue;
                    }
                    for (k, d) in &h.alg.mult[*b][*b2] {
                        let v = acc.remove(k).unwrap_or_else(TPoly::zero).plus(&s.scale(d));
                        if !v.is_zero() {
                            acc.insert(*k, v);
                        }
                    }
                }
            }
            row.push(acc.into_iter().collect::<SparseVec<TPoly>>());
        }
        mult.push(row);
    }
    mult
}

impl GenericExtension {
    /// Same data with `σ(y(1), x(1))` in place of `σ(x(1), y(1))`.
    pub fn with_swapped_sigma_legs(&self) -> FreeExtension<TPoly> {
        let mut e = self.ext.clone();
        e.mult = star_table(&self.h, &self.sigma, true);
        e
    }

    pub fn fiber(&self, chi: &[Option<Coef>]) -> Result<StructComod> {
        self.ext.fiber_at(chi, None)
    }

    /// Structure constants of the fiber at `χ₀` equal those of `H`.
    pub fn counit_fiber_is_h(&self) -> Result<bool> {
        let f = self.fiber(&self.ring.counit_character(&self.h))?;
        Ok(f.a.mult == self.h.alg.mult && f.a.unit == self.h.alg.unit && f.delta == self.h.delta)
    }
}

/// Largest rank for which associativity is also checked with generic
/// polynomial arithmetic.
pub const DIRECT_ASSOCIATIVITY_DIM: usize = 9;

/// Associativity and unit over all basis triples, comodule-algebra laws,
/// coefficients in `B_H`, `χ₀` fiber, and `β` at `χ₀` and `fibers` seeded characters.
pub fn ah_verify(g: &GenericExtension, seed: u64, fibers: usize) -> Report {
    let mut r = Report::new("generic-extension", g.h.name());
    r.extend("", check_tinv(&g.h, &g.ring, &g.tinv));
    let n = g.h.dim();
    let bad_sigma = (0..n * n).find(|k| !g.grading.is_degree_zero(&g.sigma[k / n][k % n]));
    r.record(
        "sigma takes values in B_H",
        bad_sigma.map(|k| format!("sigma({}, {})", g.ring.labels[k / n], g.ring.labels[k % n])),
    );
    r.extend("", g.ext.check_with(false));
    match associativity_witness(&g.ext) {
        Ok(w) => r.record(
            "associativity on all triples",
            w.map(|(i, j, k)| g.ext.associator(i, j, k)),
        ),
        Err(e) => r.fail("associativity on all triples", e.to_string()),
    }
    if n <= DIRECT_ASSOCIATIVITY_DIM {
        r.extend("direct ", g.ext.check());
    }
    r.record("base scalars are central", central_defect(g));
    let unit_ok = g.ext.unit.iter().all(|(_, c)| g.grading.is_degree_zero(c));
    r.check("unit t_1^-1 (x) 1 lies in B_H (x) H", unit_ok, || format!("{:?}", g.ext.unit));
    match g.counit_fiber_is_h() {
        Ok(ok) => r.check("fiber at chi_0 is H", ok, || "structure constants differ".into()),
        Err(e) => r.fail("fiber at chi_0 is H", e.to_string()),
    }
    let mut chars = vec![("chi_0".to_string(), g.ring.counit_character(&g.h))];
    for k in 0..fibers as u64 {
        chars.push((format!("seed {}", seed + k), g.ring.random_character(seed + k)));
    }
    for (name, chi) in chars {
        match g.fiber(&chi) {
            Ok(f) => {
                let b = galois_beta(&f, None);
                r.check(format!("beta bijective at {name}"), b.bijective, || {
                    format!("rank {} of {}", b.rank, b.cols)
                });
            }
            Err(e) => r.fail(format!("beta bijective at {name}"), e.to_string()),
        }
    }
    r
}

/// `(b 1_A) * x = x * (b 1_A) = b x` for each degree-zero symbol `b` and basis `x`.
fn central_defect(g: &GenericExtension) -> Option<String> {
    let n = g.h.dim();
    let prod = |x: &[(usize, TPoly)], y: &[(usize, TPoly)]| -> BTreeMap<usize, TPoly> {
        let mut out: BTreeMap<usize, TPoly> = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                for (k, c) in &g.ext.mult[*i][*j] {
                    let v = out.remove(k).unwrap_or_else(TPoly::zero).plus(&a.times(b).times(c));
                    if !v.is_zero() {
                        out.insert(*k, v);
                    }
                }
            }
        }
        out
    };
    for s in (0..n).filter(|&s| g.grading.degree[s] == g.grading.group.identity()) {
        let t = g.ring.t(s);
        let scalar: Vec<(usize, TPoly)> = g.ext.unit.iter().map(|(i, c)| (*i, c.times(&t))).collect();
        for x in 0..n {
            let e = [(x, TPoly::one())];
            let want = BTreeMap::from([(x, t.clone())]);
            if prod(&scalar, &e) != want || prod(&e, &scalar) != want {
                return Some(format!("{} against {}", g.ring.syms.name(s as u16), g.ring.labels[x]));
            }
        }
    }
    None
}

/// `t⁻¹_b` expressed with a single denominator monomial, for display.
pub fn tinv_display(r: &TSymRing, t: &TInvTable) -> Vec<(String, String)> {
    r.labels.iter().zip(&t.values).map(|(l, v)| (format!("t^-1_{}", l.replace('*', "")), v.to_string())).collect()
}

#[cfg(test)]
mod tests;
