use crate::comod::StructComod;
use crate::error::{Error, Result};
use crate::findim::{add_to, scale, to_sparse, StructAlg, StructHopf, Tensor2};
use crate::scalar::Coef;
use std::collections::BTreeMap;

fn label(a: usize, b: usize, g: &str, x: &str) -> String {
    let p = |s: &str, k: usize| match k {
        0 => None,
        1 => Some(s.to_string()),
        _ => Some(format!("{s}^{k}")),
    };
    let parts: Vec<String> = [p(g, a), p(x, b)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn check_order(n: usize, q: &Coef) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("Taft algebra needs N >= 2, got {n}")));
    }
    let mut p = Coef::one();
    for k in 1..=n {
        p = &p * q;
        if p.is_one() != (k == n) {
            return Err(Error::InvalidRoot(format!("{q} does not have order {n}")));
        }
    }
    Ok(())
}

/// `ℂ⟨G, X⟩/(G^N - 1, X^N - s, XG - qGX)` on the basis `G^a X^b`, index `a*N + b`.
fn skew_algebra(n: usize, q: &Coef, s: &Coef, g: &str, x: &str, name: String) -> StructAlg {
    let qp: Vec<Coef> = (0..n).map(|k| q.pow(k as i32).unwrap()).collect();
    let mult = (0..n * n)
        .map(|i| {
            let (a, b) = (i / n, i % n);
            (0..n * n)
                .map(|j| {
                    let (c, d) = (j / n, j % n);
                    // X^b G^c = q^{bc} G^c X^b
                    let coef = &qp[(b * c) % n];
                    let e = (a + c) % n;
                    if b + d < n {
                        vec![(e * n + b + d, coef.clone())]
                    } else if s.is_zero() {
                        vec![]
                    } else {
                        vec![(e * n + b + d - n, coef * s)]
                    }
                })
                .collect()
        })
        .collect();
    StructAlg {
        name,
        labels: (0..n * n).map(|i| label(i / n, i % n, g, x)).collect(),
        mult,
        unit: vec![(0, Coef::one())],
    }
}

fn tensor_pow(one: Tensor2, f: &Tensor2, k: usize, mul: impl Fn(&Tensor2, &Tensor2) -> Tensor2) -> Tensor2 {
    (0..k).fold(one, |acc, _| mul(&acc, f))
}

fn t_basic(i: usize, j: usize) -> Tensor2 {
    BTreeMap::from([((i, j), Coef::one())])
}

/// Taft algebra `H_{N²}` at the primitive root `q`, built on structure constants
/// with `Δ(g) = g (x) g`, `Δ(x) = 1 (x) x + x (x) g`.
pub fn taft_hopf(n: usize, q: &Coef) -> Result<StructHopf> {
    check_order(n, q)?;
    let alg = skew_algebra(n, q, &Coef::zero(), "g", "x", format!("taft{n}"));
    let (g, x) = (n, 1);
    let mut h = StructHopf {
        alg,
        delta: vec![],
        counit: (0..n * n).map(|i| if i % n == 0 { Coef::one() } else { Coef::zero() }).collect(),
        antipode: vec![],
    };
    let dg = t_basic(g, g);
    let mut dx = t_basic(0, x);
    add_to(&mut dx, (x, g), Coef::one());
    let mut delta = Vec::new();
    let mut antipode = Vec::new();
    // S(g) = g^{N-1}, S(x) = -x g^{N-1}
    let gi = h.alg.basis((n - 1) * n);
    let sx = scale(&h.alg.mul(&h.alg.basis(x), &gi), &Coef::int(-1));
    for i in 0..n * n {
        let (a, b) = (i / n, i % n);
        let t = tensor_pow(t_basic(0, 0), &dg, a, |u, v| h.tensor_mul(u, v));
        let t = tensor_pow(t, &dx, b, |u, v| h.tensor_mul(u, v));
        delta.push(t.into_iter().map(|((l, r), c)| (l, r, c)).collect());
        let mut s = h.alg.one();
        for _ in 0..b {
            s = h.alg.mul(&s, &sx);
        }
        for _ in 0..a {
            s = h.alg.mul(&s, &gi);
        }
        antipode.push(to_sparse(&s));
    }
    h.delta = delta;
    h.antipode = antipode;
    Ok(h)
}

/// The Galois object `A_s` with `δ(G) = G (x) g`, `δ(X) = 1 (x) x + X (x) g`.
pub fn taft_galois_object(n: usize, q: &Coef, s: &Coef) -> Result<StructComod> {
    let h = taft_hopf(n, q)?;
    let a = skew_algebra(n, q, s, "G", "X", format!("A_{s} over taft{n}"));
    let mut c = StructComod { a, h, delta: vec![] };
    let (g, x) = (n, 1);
    let dg = t_basic(g, g);
    let mut dx = t_basic(0, x);
    add_to(&mut dx, (x, g), Coef::one());
    let mut delta = Vec::new();
    for i in 0..n * n {
        let (a, b) = (i / n, i % n);
        let t = tensor_pow(t_basic(0, 0), &dg, a, |u, v| c.tensor_mul(u, v));
        let t = tensor_pow(t, &dx, b, |u, v| c.tensor_mul(u, v));
        delta.push(t.into_iter().map(|((l, r), c)| (l, r, c)).collect());
    }
    c.delta = delta;
    Ok(c)
}
