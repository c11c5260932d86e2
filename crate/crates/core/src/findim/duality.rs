use super::{add_to, function_algebra, group_algebra, to_dense, to_sparse, Elem, FiniteGroup, Sparse, StructAlg, StructHopf, Tensor2};
use crate::error::{Error, Result};
use crate::linalg::rank_coef;
use crate::report::Report;
use crate::scalar::{Coef, CycloField};
use std::collections::BTreeMap;

/// Dual Hopf algebra on the dual basis: product transposes Δ, coproduct
/// transposes μ, unit is ε, counit is evaluation at 1, antipode transposes S.
pub fn dual_hopf(h: &StructHopf) -> StructHopf {
    let n = h.dim();
    let mut mult: Vec<Vec<BTreeMap<usize, Coef>>> = vec![vec![BTreeMap::new(); n]; n];
    for (k, d) in h.delta.iter().enumerate() {
        for (i, j, c) in d {
            add_to(&mut mult[*i][*j], k, c.clone());
        }
    }
    let mut delta = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in &h.alg.mult[i][j] {
                delta[*k].push((i, j, c.clone()));
            }
        }
    }
    let mut antipode: Vec<BTreeMap<usize, Coef>> = vec![BTreeMap::new(); n];
    for (j, s) in h.antipode.iter().enumerate() {
        for (i, c) in s {
            add_to(&mut antipode[*i], j, c.clone());
        }
    }
    let unit_dense = h.alg.one();
    StructHopf {
        alg: StructAlg {
            name: format!("{}^dual", h.name()),
            labels: h.labels().iter().map(|l| format!("{l}^")).collect(),
            mult: mult
                .into_iter()
                .map(|row| row.into_iter().map(|m| m.into_iter().collect()).collect())
                .collect(),
            unit: to_sparse(&h.counit),
        },
        delta,
        counit: unit_dense,
        antipode: antipode.into_iter().map(|m| m.into_iter().collect()).collect(),
    }
}

fn map_tensor(t: &Tensor2, phi: &[Elem]) -> Tensor2 {
    let mut out = Tensor2::new();
    for ((i, j), c) in t {
        for (a, x) in phi[*i].iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, y) in phi[*j].iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                add_to(&mut out, (a, b), &(c * x) * y);
            }
        }
    }
    out
}

fn apply(phi: &[Elem], x: &[Coef], dim: usize) -> Elem {
    let mut out = vec![Coef::zero(); dim];
    for (i, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (k, v) in phi[i].iter().enumerate() {
            out[k] = &out[k] + &(c * v);
        }
    }
    out
}

/// Checks that the linear map `e_i ↦ phi[i]` is an isomorphism of Hopf algebras.
pub fn check_iso(h1: &StructHopf, h2: &StructHopf, phi: &[Elem]) -> Report {
    let mut r = Report::new("hopf-isomorphism", &format!("{} -> {}", h1.name(), h2.name()));
    let (n, m) = (h1.dim(), h2.dim());
    if phi.len() != n || phi.iter().any(|v| v.len() != m) {
        r.fail("map shape", format!("{n} images of length {m} expected"));
        return r;
    }
    let rows: Vec<Sparse> = phi.iter().map(|v| to_sparse(v)).collect();
    let rk = rank_coef(&rows, m);
    r.check("bijective", n == m && rk == n, || format!("dims {n} -> {m}, rank {rk}"));
    let mut bad = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let l = apply(phi, &to_dense(&h1.alg.mult[i][j], n), m);
            let rr = h2.alg.mul(&phi[i], &phi[j]);
            if l != rr {
                bad = Some(format!("on {}*{}", h1.labels()[i], h1.labels()[j]));
                break 'outer;
            }
        }
    }
    r.record("multiplicative", bad);
    let u = apply(phi, &h1.alg.one(), m);
    r.check("unital", u == h2.alg.one(), || h2.alg.show(&u));
    let mut dbad = None;
    let mut ebad = None;
    let mut sbad = None;
    for i in 0..n {
        let label = &h1.labels()[i];
        let l = map_tensor(&h1.coproduct(&h1.alg.basis(i)), phi);
        if l != h2.coproduct(&phi[i]) && dbad.is_none() {
            dbad = Some(format!("on {label}"));
        }
        if h1.counit[i] != h2.counit_of(&phi[i]) && ebad.is_none() {
            ebad = Some(format!("on {label}"));
        }
        let s1 = apply(phi, &h1.antipode_of(&h1.alg.basis(i)), m);
        if s1 != h2.antipode_of(&phi[i]) && sbad.is_none() {
            sbad = Some(format!("on {label}"));
        }
    }
    r.record("comultiplicative", dbad);
    r.record("counital", ebad);
    r.record("commutes with antipodes", sbad);
    r
}

/// Searches basis permutations transporting all structure tensors exactly.
pub fn find_basis_iso(h1: &StructHopf, h2: &StructHopf) -> Option<Vec<usize>> {
    let n = h1.dim();
    if n != h2.dim() {
        return None;
    }
    let unit1 = h1.alg.one();
    let unit2 = h2.alg.one();
    let dense_mult = |h: &StructHopf| -> Vec<Vec<Elem>> {
        (0..n).map(|i| (0..n).map(|j| to_dense(&h.alg.mult[i][j], n)).collect()).collect()
    };
    let (m1, m2) = (dense_mult(h1), dense_mult(h2));
    let delta_map = |h: &StructHopf| -> Vec<Tensor2> { (0..n).map(|i| h.coproduct(&h.alg.basis(i))).collect() };
    let (d1, d2) = (delta_map(h1), delta_map(h2));
    let anti = |h: &StructHopf| -> Vec<Elem> { (0..n).map(|i| to_dense(&h.antipode[i], n)).collect() };
    let (s1, s2) = (anti(h1), anti(h2));

    // Consistency of all entries whose indices are already assigned.
    let consistent = |perm: &[usize], k: usize| -> bool {
        let i = k;
        let pi = perm[i];
        if h1.counit[i] != h2.counit[pi] || unit1[i] != unit2[pi] {
            return false;
        }
        for a in 0..=k {
            if s1[a][i] != s2[perm[a]][pi] || s1[i][a] != s2[pi][perm[a]] {
                return false;
            }
            for b in 0..=k {
                let trip = [(a, b, i), (a, i, b), (i, a, b)];
                for &(x, y, z) in &trip {
                    if m1[x][y][z] != m2[perm[x]][perm[y]][perm[z]] {
                        return false;
                    }
                    let c1 = d1[x].get(&(y, z));
                    let c2 = d2[perm[x]].get(&(perm[y], perm[z]));
                    if c1 != c2 {
                        return false;
                    }
                }
            }
        }
        true
    };
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(
        perm: &mut Vec<usize>,
        used: &mut [bool],
        n: usize,
        ok: &dyn Fn(&[usize], usize) -> bool,
    ) -> bool {
        let k = perm.len();
        if k == n {
            return true;
        }
        for t in 0..n {
            if used[t] {
                continue;
            }
            perm.push(t);
            used[t] = true;
            if ok(perm, k) && go(perm, used, n, ok) {
                return true;
            }
            perm.pop();
            used[t] = false;
        }
        false
    }
    go(&mut perm, &mut used, n, &consistent).then_some(perm)
}

/// Checks that `pair[u][x] = <e_u, f_x>` is a nondegenerate Hopf pairing
/// between `h1` and `h2`.
pub fn check_pairing(h1: &StructHopf, h2: &StructHopf, pair: &[Vec<Coef>]) -> Report {
    let mut r = Report::new("hopf-pairing", &format!("{} x {}", h1.name(), h2.name()));
    let (n, m) = (h1.dim(), h2.dim());
    let ev = |u: &[Coef], x: &[Coef]| -> Coef {
        let mut s = Coef::zero();
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in x.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                s = &s + &(&(a * b) * &pair[i][j]);
            }
        }
        s
    };
    let ev2 = |t1: &Tensor2, t2: &Tensor2| -> Coef {
        let mut s = Coef::zero();
        for ((a, b), c) in t1 {
            for ((x, y), d) in t2 {
                s = &s + &(&(c * d) * &(&pair[*a][*x] * &pair[*b][*y]));
            }
        }
        s
    };
    let rows: Vec<Sparse> = pair.iter().map(|row| to_sparse(row)).collect();
    let rk = rank_coef(&rows, m);
    r.check("nondegenerate", n == m && rk == n, || format!("rank {rk} for dims {n}, {m}"));
    let mut b1 = None;
    let mut b2 = None;
    let mut b3 = None;
    for u in 0..n {
        for v in 0..n {
            let uv = to_dense(&h1.alg.mult[u][v], n);
            for x in 0..m {
                let bx = h2.alg.basis(x);
                let l = ev(&uv, &bx);
                let rr = ev2(&h1.pure(&h1.alg.basis(u), &h1.alg.basis(v)), &h2.coproduct(&bx));
                if l != rr && b1.is_none() {
                    b1 = Some(format!("<{}*{}, {}>", h1.labels()[u], h1.labels()[v], h2.labels()[x]));
                }
            }
        }
    }
    for u in 0..n {
        let bu = h1.alg.basis(u);
        let du = h1.coproduct(&bu);
        for x in 0..m {
            for y in 0..m {
                let xy = to_dense(&h2.alg.mult[x][y], m);
                let rr = ev2(&du, &h2.pure(&h2.alg.basis(x), &h2.alg.basis(y)));
                if ev(&bu, &xy) != rr && b2.is_none() {
                    b2 = Some(format!("<{}, {}*{}>", h1.labels()[u], h2.labels()[x], h2.labels()[y]));
                }
            }
            let bx = h2.alg.basis(x);
            if ev(&h1.antipode_of(&bu), &bx) != ev(&bu, &h2.antipode_of(&bx)) && b3.is_none() {
                b3 = Some(format!("<S {}, {}>", h1.labels()[u], h2.labels()[x]));
            }
        }
    }
    r.record("<uv, x> = <u (x) v, Delta x>", b1);
    r.record("<u, xy> = <Delta u, x (x) y>", b2);
    let one1 = h1.alg.one();
    let unit_bad = (0..m).find(|&x| ev(&one1, &h2.alg.basis(x)) != h2.counit[x]);
    r.record("<1, x> = eps(x)", unit_bad.map(|x| h2.labels()[x].clone()));
    let one2 = h2.alg.one();
    let counit_bad = (0..n).find(|&u| ev(&h1.alg.basis(u), &one2) != h1.counit[u]);
    r.record("<u, 1> = eps(u)", counit_bad.map(|u| h1.labels()[u].clone()));
    r.record("<S u, x> = <u, S x>", b3);
    r
}

/// Builds ω : O(G) → ℂ[G]^dual from the evaluation form and verifies it.
pub fn duality_omega(g: &FiniteGroup) -> Report {
    let o = function_algebra(g);
    let cg = group_algebra(g);
    let dual = dual_hopf(&cg);
    let n = g.order();
    // <δ_a, Σ λ_h h> = Σ λ_h δ_a(h).
    let delta_fn = |a: usize, h: usize| if a == h { Coef::one() } else { Coef::zero() };
    let pair: Vec<Vec<Coef>> = (0..n).map(|a| (0..n).map(|h| delta_fn(a, h)).collect()).collect();
    let mut r = Report::new("duality-omega", &format!("G of order {n}"));
    r.extend("pairing: ", check_pairing(&o, &cg, &pair));
    let omega: Vec<Elem> = pair.clone();
    r.extend("omega: ", check_iso(&o, &dual, &omega));
    let bad = (0..n).find(|&a| omega[a] != dual.alg.basis(a));
    r.record("omega(delta_g) is the dual basis vector of g", bad.map(|a| g.label(a).to_string()));
    r
}

/// Characters of a finite abelian group with values `ζ^k`, `ζ` a primitive
/// root of unity of order `m = exp(G)`.
#[derive(Clone, Debug)]
pub struct Characters {
    pub m: usize,
    pub zeta: Coef,
    /// `exps[χ][g] = k` with `χ(g) = ζ^k`.
    pub exps: Vec<Vec<usize>>,
    pub dual: FiniteGroup,
}

pub fn root_of_unity(m: usize) -> Coef {
    match m {
        1 => Coef::one(),
        2 => Coef::int(-1),
        _ => Coef::zeta(&CycloField::new(m as u32)),
    }
}

impl Characters {
    pub fn of(g: &FiniteGroup) -> Result<Characters> {
        if !g.is_abelian() {
            return Err(Error::NotAbelian);
        }
        let m = g.exponent();
        let gens = g.generators();
        let mut exps = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        loop {
            if let Some(v) = extend_character(g, &gens, &choice, m) {
                exps.push(v);
            }
            let mut i = 0;
            loop {
                if i == choice.len() {
                    break;
                }
                choice[i] += 1;
                if choice[i] < m {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == choice.len() {
                break;
            }
        }
        exps.sort();
        exps.dedup();
        let k = exps.len();
        let index: BTreeMap<Vec<usize>, usize> = exps.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let table = (0..k)
            .map(|a| {
                (0..k)
                    .map(|b| {
                        let v: Vec<usize> = exps[a].iter().zip(&exps[b]).map(|(x, y)| (x + y) % m).collect();
                        index[&v]
                    })
                    .collect()
            })
            .collect();
        let dual = FiniteGroup::from_table((0..k).map(|i| format!("chi{i}")).collect(), table)?;
        Ok(Characters { m, zeta: root_of_unity(m), exps, dual })
    }

    pub fn value(&self, chi: usize, g: usize) -> Coef {
        self.zeta.pow(self.exps[chi][g] as i32).expect("root of unity is invertible")
    }
}

fn extend_character(g: &FiniteGroup, gens: &[usize], choice: &[usize], m: usize) -> Option<Vec<usize>> {
    let zm = FiniteGroup::cyclic(m);
    g.extend_hom(gens, choice, &zm)
}

/// Pontryagin duality for a finite abelian group: |Ĝ| = |G|, the evaluation
/// map G → Ĝ^ is an isomorphism, and g ↦ Σ χ(g) δ_χ is a Hopf isomorphism
/// ℂ[G] → O(Ĝ).
pub fn pontryagin_check(g: &FiniteGroup) -> Result<Report> {
    let ch = Characters::of(g)?;
    let n = g.order();
    let mut r = Report::new("pontryagin", &format!("G of order {n}"));
    r.check("|dual G| = |G|", ch.dual.order() == n, || format!("{} characters", ch.dual.order()));
    r.check("dual G is isomorphic to G", ch.dual.find_isomorphism(g).is_some(), || "no isomorphism".into());
    let ch2 = Characters::of(&ch.dual)?;
    // ev(g)(χ) = χ(g), as an exponent vector over the characters of the dual.
    let scale = ch2.m.max(1);
    let mut ev_ok = true;
    let mut ev_map = vec![usize::MAX; n];
    for x in 0..n {
        let v: Vec<usize> = (0..ch.dual.order())
            .map(|c| ch.exps[c][x] * scale / ch.m.max(1) % scale)
            .collect();
        match ch2.exps.iter().position(|w| *w == v) {
            Some(i) => ev_map[x] = i,
            None => ev_ok = false,
        }
    }
    if ev_ok {
        let mut hit = vec![false; ch2.dual.order()];
        ev_map.iter().for_each(|&i| hit[i] = true);
        ev_ok = hit.iter().all(|&h| h)
            && (0..n).all(|a| (0..n).all(|b| ev_map[g.mul(a, b)] == ch2.dual.mul(ev_map[a], ev_map[b])));
    }
    r.check("evaluation G -> double dual is an isomorphism", ev_ok, || format!("{ev_map:?}"));
    let cg = group_algebra(g);
    let o = function_algebra(&ch.dual);
    let phi: Vec<Elem> = (0..n).map(|x| (0..ch.dual.order()).map(|c| ch.value(c, x)).collect()).collect();
    r.extend("C[G] -> O(dual G): ", check_iso(&cg, &o, &phi));
    Ok(r)
}

/// Group law read off a coproduct of the form `Δ(δ_g) = Σ δ_h (x) δ_k` with
/// `hk = g` on a basis of orthogonal idempotents.
pub fn function_group(h: &StructHopf) -> Option<FiniteGroup> {
    let n = h.dim();
    for i in 0..n {
        for j in 0..n {
            let expect: Sparse = if i == j { vec![(i, Coef::one())] } else { vec![] };
            if h.alg.mult[i][j] != expect {
                return None;
            }
        }
    }
    let mut table = vec![vec![usize::MAX; n]; n];
    for (g, d) in h.delta.iter().enumerate() {
        for (a, b, c) in d {
            if !c.is_one() || table[*a][*b] != usize::MAX {
                return None;
            }
            table[*a][*b] = g;
        }
    }
    FiniteGroup::from_table(h.labels().to_vec(), table).ok()
}

#[derive(Clone, Debug)]
pub struct GroupLikes {
    pub elements: Vec<Elem>,
    /// Multiplication table of the verified group-likes when they close up.
    pub group: Option<FiniteGroup>,
}

/// Verifies `Δ(x) = x (x) x` and `ε(x) = 1` on a candidate set. The default
/// candidates are the basis vectors, plus characters when the basis is a
/// function algebra on an abelian group.
pub fn grouplikes(h: &StructHopf, candidates: Option<&[Elem]>) -> GroupLikes {
    let mut cands: Vec<Elem> = match candidates {
        Some(c) => c.to_vec(),
        None => {
            let mut v: Vec<Elem> = (0..h.dim()).map(|i| h.alg.basis(i)).collect();
            if let Some(g) = function_group(h) {
                if let Ok(ch) = Characters::of(&g) {
                    for c in 0..ch.dual.order() {
                        v.push((0..g.order()).map(|x| ch.value(c, x)).collect());
                    }
                }
            }
            v
        }
    };
    cands.dedup();
    let mut elements: Vec<Elem> = Vec::new();
    for x in cands {
        if h.counit_of(&x).is_one() && h.coproduct(&x) == h.pure(&x, &x) && !elements.contains(&x) {
            elements.push(x);
        }
    }
    let k = elements.len();
    let mut table = vec![vec![0; k]; k];
    let mut closed = true;
    for a in 0..k {
        for b in 0..k {
            let p = h.alg.mul(&elements[a], &elements[b]);
            match elements.iter().position(|e| *e == p) {
                Some(i) => table[a][b] = i,
                None => closed = false,
            }
        }
    }
    let group = if closed && k > 0 {
        FiniteGroup::from_table(elements.iter().map(|e| h.alg.show(e)).collect(), table).ok()
    } else {
        None
    };
    GroupLikes { elements, group }
}
