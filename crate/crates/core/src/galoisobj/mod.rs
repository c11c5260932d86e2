//! Galois objects over the base field: group 2-cocycles, `H²(G, ℂ×)` for
//! finite abelian `G`, twisted group algebras and Taft-algebra objects.

mod taft;

pub use taft::{taft_galois_object, taft_hopf};

use crate::comod::{GradedAlgebra, StructComod};
use crate::error::{Error, Result};
use crate::findim::{gcd, group_algebra, lcm, FiniteGroup, StructAlg};
use crate::report::Report;
use crate::scalar::{Coef, CycloField, QPoly, Rat};
use num_traits::Signed;
use std::collections::HashSet;
use std::fmt;

/// Invariant factors `n_1 | n_2 | ...` of a finite abelian group, all `> 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    factors: Vec<usize>,
}

fn prime_powers(mut n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut q = 1;
            while n.is_multiple_of(p) {
                n /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

impl AbelianInvariants {
    /// Normalizes an arbitrary list of cyclic orders through elementary divisors.
    pub fn new(cyclic: &[usize]) -> Result<AbelianInvariants> {
        if cyclic.contains(&0) {
            return Err(Error::InvalidGroup("cyclic factor of order 0".into()));
        }
        let mut by_prime: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for &n in cyclic {
            for (p, q) in prime_powers(n) {
                by_prime.entry(p).or_default().push(q);
            }
        }
        let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1; len];
        for qs in by_prime.values_mut() {
            qs.sort_unstable_by(|a, b| b.cmp(a));
            for (f, q) in factors.iter_mut().zip(qs.iter()) {
                *f *= q;
            }
        }
        factors.reverse();
        Ok(AbelianInvariants { factors })
    }

    /// Invariants of an abelian group given by its table.
    pub fn of_group(g: &FiniteGroup) -> Result<AbelianInvariants> {
        if !g.is_abelian() {
            return Err(Error::NotAbelian);
        }
        let mut cyclic = Vec::new();
        for (p, _) in prime_powers(g.order()) {
            // s_k = log_p #{x : x^(p^k) = 1}
            let mut prev = 0;
            let mut k = 1;
            let mut pk = p;
            let mut counts = Vec::new();
            loop {
                let c = (0..g.order()).filter(|&x| pk % g.element_order(x) == 0).count();
                let mut s = 0;
                let mut c2 = c;
                while c2 > 1 {
                    c2 /= p;
                    s += 1;
                }
                if s == prev {
                    break;
                }
                counts.push(s - prev);
                prev = s;
                k += 1;
                pk *= p;
            }
            let _ = k;
            // counts[k-1] = #{i : a_i >= k}
            for (k, w) in counts.iter().enumerate() {
                let next = counts.get(k + 1).copied().unwrap_or(0);
                for _ in 0..(w - next) {
                    cyclic.push(p.pow(k as u32 + 1));
                }
            }
        }
        AbelianInvariants::new(&cyclic)
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> usize {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// `ℤ/n_1 × ℤ/n_2 × ...`, indexed in mixed radix.
    pub fn group(&self) -> FiniteGroup {
        FiniteGroup::product(&self.factors)
    }

    pub fn coords(&self, mut x: usize) -> Vec<usize> {
        let mut c = vec![0; self.factors.len()];
        for i in (0..self.factors.len()).rev() {
            c[i] = x % self.factors[i];
            x /= self.factors[i];
        }
        c
    }

    pub fn index(&self, c: &[usize]) -> usize {
        c.iter().zip(&self.factors).fold(0, |acc, (a, n)| acc * n + a % n)
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.factors.iter().map(|n| format!("Z/{n}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// `ζ_m^k` with `ζ_m = exp(2πi/m)`, as an element of `cyclotomic(m)` (or `ℚ` for `m ≤ 2`).
pub fn zeta_pow(m: usize, k: i64) -> Coef {
    let k = k.rem_euclid(m.max(1) as i64);
    match m {
        0 | 1 => Coef::one(),
        2 => Coef::int(if k == 0 { 1 } else { -1 }),
        _ => Coef::zeta(&CycloField::new(m as u32)).pow(k as i32).expect("root of unity"),
    }
}

/// Image of `c` in `cyclotomic(l)`; `None` when `c` lives in a field not contained in it.
pub fn embed(c: &Coef, l: usize) -> Option<Coef> {
    match c {
        Coef::Rat(_) => Some(c.clone()),
        Coef::Cyc(e) => {
            let m = e.field().order() as usize;
            if m == l {
                return Some(c.clone());
            }
            if l < 3 || !l.is_multiple_of(m) {
                return None;
            }
            let step = l / m;
            let p = e.residue();
            let mut coeffs = vec![Rat::zero(); p.coeffs().len() * step];
            for (k, a) in p.coeffs().iter().enumerate() {
                coeffs[k * step] = a.clone();
            }
            Some(Coef::cyc_from_qpoly(&CycloField::new(l as u32), &QPoly::from_coeffs(coeffs)))
        }
        Coef::Func(_) => None,
    }
}

fn field_order(c: &Coef) -> usize {
    match c {
        Coef::Cyc(e) => e.field().order() as usize,
        _ => 1,
    }
}

fn rational_root(r: &Rat, n: u32) -> Option<Rat> {
    let (num, den) = (r.numer(), r.denom());
    let (a, b) = (num.abs().nth_root(n), den.nth_root(n));
    if num_traits::pow(a.clone(), n as usize) == num.abs() && num_traits::pow(b.clone(), n as usize) == den {
        Some(Rat::from_big(num_rational::BigRational::new(a, b)))
    } else {
        None
    }
}

/// An `n`-th root of `c` of the form `r·ζ_l^k` with `r` rational, if one exists.
fn nth_root(c: &Coef, n: usize, l: usize) -> Option<Coef> {
    let c = embed(c, l)?;
    let units: Vec<Coef> = (0..l.max(1)).map(|k| zeta_pow(l, k as i64)).collect();
    let rho = units.iter().find_map(|u| {
        let d = &c * &u.inv().unwrap();
        d.as_rat().cloned()
    })?;
    let r = rational_root(&rho.abs(), n as u32)?;
    let signs = [Coef::Rat(r.clone()), Coef::Rat(-&r)];
    for s in &signs {
        for u in &units {
            let cand = s * u;
            if cand.pow(n as i32).as_ref() == Some(&c) {
                return Some(cand);
            }
        }
    }
    None
}

/// Table `λ: G × G → k^×`, not necessarily normalized.
#[derive(Clone, Debug, PartialEq)]
pub struct Cocycle2 {
    pub group: FiniteGroup,
    pub table: Vec<Vec<Coef>>,
}

impl Cocycle2 {
    pub fn new(group: FiniteGroup, table: Vec<Vec<Coef>>) -> Result<Cocycle2> {
        let n = group.order();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!("cocycle table must be {n} x {n}")));
        }
        for (g, row) in table.iter().enumerate() {
            if let Some(h) = row.iter().position(Coef::is_zero) {
                return Err(Error::NotACocycle(format!(
                    "zero entry at ({}, {})",
                    group.label(g),
                    group.label(h)
                )));
            }
        }
        Ok(Cocycle2 { group, table })
    }

    pub fn trivial(group: &FiniteGroup) -> Cocycle2 {
        let n = group.order();
        Cocycle2 { group: group.clone(), table: vec![vec![Coef::one(); n]; n] }
    }

    pub fn from_fn(group: &FiniteGroup, f: impl Fn(usize, usize) -> Coef) -> Result<Cocycle2> {
        let n = group.order();
        Cocycle2::new(group.clone(), (0..n).map(|g| (0..n).map(|h| f(g, h)).collect()).collect())
    }

    /// `(g, h) ↦ μ(g)μ(h)/μ(gh)`.
    pub fn coboundary(group: &FiniteGroup, mu: &[Coef]) -> Result<Cocycle2> {
        if mu.iter().any(Coef::is_zero) {
            return Err(Error::NotInvertible("scaling with a zero value".into()));
        }
        Cocycle2::from_fn(group, |g, h| &(&mu[g] * &mu[h]) / &mu[group.mul(g, h)])
    }

    pub fn get(&self, g: usize, h: usize) -> &Coef {
        &self.table[g][h]
    }

    /// First triple violating `λ(g,h) λ(gh,k) = λ(h,k) λ(g,hk)`.
    pub fn cocycle_defect(&self) -> Option<(usize, usize, usize)> {
        let n = self.group.order();
        let m = |a, b| self.group.mul(a, b);
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    let l = &self.table[g][h] * &self.table[m(g, h)][k];
                    let r = &self.table[h][k] * &self.table[g][m(h, k)];
                    if l != r {
                        return Some((g, h, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_cocycle(&self) -> bool {
        self.cocycle_defect().is_none()
    }

    pub fn pointwise(&self, o: &Cocycle2) -> Cocycle2 {
        let table = self
            .table
            .iter()
            .zip(&o.table)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x * y).collect())
            .collect();
        Cocycle2 { group: self.group.clone(), table }
    }

    /// `λ'(g,h) = μ(g)μ(h)/μ(gh) λ(g,h)`.
    pub fn rescaled(&self, mu: &[Coef]) -> Result<Cocycle2> {
        Ok(self.pointwise(&Cocycle2::coboundary(&self.group, mu)?))
    }

    /// `b(g,h) = λ(g,h) λ(h,g)^-1`.
    pub fn alternation(&self) -> Vec<Vec<Coef>> {
        let n = self.group.order();
        (0..n).map(|g| (0..n).map(|h| &self.table[g][h] / &self.table[h][g]).collect()).collect()
    }

    pub fn alternation_is_trivial(&self) -> bool {
        self.alternation().iter().all(|r| r.iter().all(Coef::is_one))
    }

    /// Trivializing scaling over `ℂ`: `Some(μ)` with `λ = ∂μ` iff the
    /// alternation is trivial. Roots are taken among rational multiples of
    /// roots of unity; anything else is reported as out of scope.
    pub fn is_coboundary(&self) -> Result<Option<Vec<Coef>>> {
        if !self.group.is_abelian() {
            return Err(Error::NotAbelian);
        }
        let inv = AbelianInvariants::of_group(&self.group)?;
        let m = self.table.iter().flatten().map(field_order).fold(1, lcm);
        let l = lcm(m, 2) * inv.exponent();
        match self.trivialize_in(l)? {
            Some(mu) => Ok(Some(mu)),
            None if self.alternation_is_trivial() => Err(Error::InvalidRoot(format!(
                "trivializing scaling needs a root outside rational multiples of roots of unity in cyclotomic({l})"
            ))),
            None => Ok(None),
        }
    }

    /// Trivializing scaling with values in `cyclotomic(l)` (`l = 1` means `ℚ`),
    /// restricted to rational multiples of roots of unity.
    pub fn trivialize_in(&self, l: usize) -> Result<Option<Vec<Coef>>> {
        if let Some((g, h, k)) = self.cocycle_defect() {
            return Err(Error::NotACocycle(format!(
                "identity fails at ({}, {}, {})",
                self.group.label(g),
                self.group.label(h),
                self.group.label(k)
            )));
        }
        if !self.group.is_abelian() {
            return Err(Error::NotAbelian);
        }
        if !self.alternation_is_trivial() {
            return Ok(None);
        }
        let inv = AbelianInvariants::of_group(&self.group)?;
        let std = inv.group();
        let iso = std.find_isomorphism(&self.group).ok_or_else(|| Error::InvalidGroup("no cyclic decomposition".into()))?;
        let r = inv.factors().len();
        let e = self.group.identity();
        let gens: Vec<usize> = (0..r)
            .map(|i| {
                let mut c = vec![0; r];
                c[i] = 1;
                iso[inv.index(&c)]
            })
            .collect();
        let mu_e = self.table[e][e].clone();
        let mut t = Vec::with_capacity(r);
        for (i, &g) in gens.iter().enumerate() {
            let mut c = mu_e.clone();
            let mut x = g;
            for _ in 1..inv.factors()[i] {
                c = &c * &self.table[x][g];
                x = self.group.mul(x, g);
            }
            match nth_root(&c, inv.factors()[i], l) {
                Some(root) => t.push(root),
                None => return Ok(None),
            }
        }
        let n = self.group.order();
        let mut mu = vec![Coef::zero(); n];
        for s in 0..n {
            let coords = inv.coords(s);
            let x = iso[s];
            match coords.iter().rposition(|&a| a != 0) {
                None => mu[x] = mu_e.clone(),
                Some(i) => {
                    let mut prev = coords.clone();
                    prev[i] -= 1;
                    let p = iso[inv.index(&prev)];
                    mu[x] = &(&mu[p] * &t[i]) / &self.table[p][gens[i]];
                }
            }
        }
        let check = Cocycle2::coboundary(&self.group, &mu)?;
        if check.table != self.table {
            return Err(Error::CandidateRejected("scaling does not reproduce the cocycle".into()));
        }
        Ok(Some(mu))
    }
}

/// `is_cocycle` on a raw table.
pub fn is_cocycle(group: &FiniteGroup, table: &[Vec<Coef>]) -> Result<bool> {
    Ok(Cocycle2::new(group.clone(), table.to_vec())?.is_cocycle())
}

pub fn is_coboundary(lambda: &Cocycle2) -> Result<Option<Vec<Coef>>> {
    lambda.is_coboundary()
}

/// `H²(G, ℂ×) ≅ ∏_{i<j} ℤ/gcd(n_i, n_j)` with one bicharacter generator per factor.
#[derive(Clone, Debug)]
pub struct H2 {
    pub group: AbelianInvariants,
    pub invariants: AbelianInvariants,
    /// `(i, j, d, λ)` with `λ(a, b) = ζ_d^{a_i b_j}`.
    pub generators: Vec<(usize, usize, usize, Cocycle2)>,
}

impl H2 {
    pub fn order(&self) -> usize {
        self.invariants.order()
    }

    /// One bicharacter per class: all products of powers of the generators.
    pub fn representatives(&self) -> Vec<Cocycle2> {
        let g = self.group.group();
        let mut out = vec![Cocycle2::trivial(&g)];
        for (_, _, d, lam) in &self.generators {
            let mut next = Vec::new();
            for base in &out {
                let mut cur = base.clone();
                for _ in 0..*d {
                    next.push(cur.clone());
                    cur = cur.pointwise(lam);
                }
            }
            out = next;
        }
        out
    }
}

pub fn h2_finite_abelian(g: &AbelianInvariants) -> H2 {
    let ns = g.factors();
    let e = g.exponent();
    let grp = g.group();
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    for i in 0..ns.len() {
        for j in i + 1..ns.len() {
            let d = gcd(ns[i], ns[j]);
            if d == 1 {
                continue;
            }
            let lam = Cocycle2::from_fn(&grp, |a, b| {
                let (a, b) = (g.coords(a), g.coords(b));
                zeta_pow(e, ((e / d) * a[i] * b[j]) as i64)
            })
            .expect("roots of unity are nonzero");
            generators.push((i, j, d, lam));
            orders.push(d);
        }
    }
    H2 { group: g.clone(), invariants: AbelianInvariants::new(&orders).expect("positive orders"), generators }
}

/// Number of distinct alternating forms among all bicharacters of the group,
/// enumerated with integer exponents of `ζ_exp(G)`.
pub fn count_alternation_classes(g: &AbelianInvariants) -> usize {
    let ns = g.factors();
    let r = ns.len();
    let e = g.exponent();
    let n = g.order();
    let coords: Vec<Vec<usize>> = (0..n).map(|x| g.coords(x)).collect();
    // admissible c_ij are multiples of e / gcd(n_i, n_j)
    let slots: Vec<(usize, usize, usize)> =
        (0..r).flat_map(|i| (0..r).map(move |j| (i, j))).map(|(i, j)| (i, j, gcd(ns[i], ns[j]))).collect();
    let total: usize = slots.iter().map(|s| s.2).product();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut c = vec![0usize; slots.len()];
    for mut idx in 0..total {
        for (k, s) in slots.iter().enumerate() {
            c[k] = (idx % s.2) * (e / s.2);
            idx /= s.2;
        }
        let mut alt = Vec::with_capacity(n * n);
        for a in &coords {
            for b in &coords {
                let mut v = 0;
                for (k, &(i, j, _)) in slots.iter().enumerate() {
                    v += c[k] * (a[i] * b[j] % e + e - b[i] * a[j] % e);
                }
                alt.push(v % e);
            }
        }
        seen.insert(alt);
    }
    seen.len()
}

/// `u_g u_h = λ(g,h) u_{gh}` with `δ(u_g) = u_g (x) g`.
pub fn twisted_group_algebra(lambda: &Cocycle2) -> Result<StructComod> {
    if let Some((g, h, k)) = lambda.cocycle_defect() {
        let l = |x| lambda.group.label(x).to_string();
        return Err(Error::NotACocycle(format!("identity fails at ({}, {}, {})", l(g), l(h), l(k))));
    }
    let g = &lambda.group;
    let n = g.order();
    let e = g.identity();
    let alg = StructAlg {
        name: format!("twisted group algebra of order {n}"),
        labels: (0..n).map(|x| format!("u{}", g.label(x))).collect(),
        mult: (0..n).map(|x| (0..n).map(|y| vec![(g.mul(x, y), lambda.table[x][y].clone())]).collect()).collect(),
        unit: vec![(e, lambda.table[e][e].inv().expect("nonzero entry"))],
    };
    Ok(GradedAlgebra { alg, group: g.clone(), degree: (0..n).collect() }.to_coaction())
}

/// The twisted group algebra as a graded algebra with one-dimensional components.
pub fn twisted_graded(lambda: &Cocycle2) -> Result<GradedAlgebra> {
    let c = twisted_group_algebra(lambda)?;
    Ok(GradedAlgebra { alg: c.a, group: lambda.group.clone(), degree: (0..lambda.group.order()).collect() })
}

/// `u_g ↦ μ(g) u'_g` is an algebra map from the twist by `λ'` to the twist by `λ`
/// when `λ' = ∂μ · λ`; checks multiplicativity and the unit on the basis.
pub fn check_diagonal_iso(lambda: &Cocycle2, lambda2: &Cocycle2, mu: &[Coef]) -> Result<Report> {
    let a = twisted_group_algebra(lambda)?;
    let b = twisted_group_algebra(lambda2)?;
    let g = &lambda.group;
    let n = g.order();
    let mut r = Report::new("diagonal-iso", &format!("{} -> {}", b.a.name, a.a.name));
    let phi = |x: &[Coef]| -> Vec<Coef> { x.iter().zip(mu).map(|(c, m)| c * m).collect() };
    let mut bad = None;
    for x in 0..n {
        for y in 0..n {
            let l = phi(&b.a.mul(&b.a.basis(x), &b.a.basis(y)));
            let rr = a.a.mul(&phi(&b.a.basis(x)), &phi(&b.a.basis(y)));
            if l != rr && bad.is_none() {
                bad = Some(format!("u{} * u{}", g.label(x), g.label(y)));
            }
        }
    }
    r.record("multiplicative", bad);
    r.check("unit", phi(&b.a.one()) == a.a.one(), || "unit not preserved".into());
    let h = group_algebra(g);
    r.check("same coacting group algebra", h == a.h && h == b.h, || "different Hopf algebras".into());
    Ok(r)
}

#[cfg(test)]
mod tests;
