use super::{eval_matrix, HopfPresentation, Matrix, TensorElem};
use crate::error::{Error, Result};
use crate::ncalg::{parse_expr, Alphabet, NcPoly, ParseEnv, Word};
use crate::report::Report;
use crate::scalar::Coef;
use std::sync::Arc;

/// Relations of the quantum coordinate algebra in generators `a, b, c, d`.
pub const SLQ2_RELATIONS: [&str; 7] = [
    "ba - q*ab",
    "ca - q*ac",
    "db - q*bd",
    "dc - q*cd",
    "bc - cb",
    "ad - da - (q^-1 - q)*bc",
    "ad - q^-1*bc - 1",
];

pub fn kronecker(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![Coef::zero(); n * m]; n * m];
    for i in 0..n {
        for j in 0..n {
            if a[i][j].is_zero() {
                continue;
            }
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct PairingOutcome {
    pub report: Report,
    /// Number of basis words each relation was evaluated on.
    pub words_checked: usize,
}

/// Two-dimensional representation `E, F, K, Kinv ->` `[[0,1],[0,0]]`,
/// `[[0,0],[1,0]]`, `diag(q, q^-1)`, `diag(q^-1, q)`.
pub fn uq_fundamental_rep(uq: &HopfPresentation) -> Result<Vec<Matrix>> {
    if uq.alphabet().names() != ["E", "F", "K", "Kinv"] {
        return Err(Error::InvalidArgument(format!("{} is not presented on E, F, K, Kinv", uq.name())));
    }
    let q = uq.alg.q.clone().ok_or(Error::DegenerateQ)?;
    let qi = q.inv().ok_or(Error::DegenerateQ)?;
    let (z, o) = (Coef::zero, Coef::one);
    Ok(vec![
        vec![vec![z(), o()], vec![z(), z()]],
        vec![vec![z(), z()], vec![o(), z()]],
        vec![vec![q.clone(), z()], vec![z(), qi.clone()]],
        vec![vec![qi, z()], vec![z(), q]],
    ])
}

/// Entry `(i, j)` of `rho` for the functional named `a`, `b`, `c` or `d`.
fn entry(g: u8) -> (usize, usize) {
    [(0, 0), (0, 1), (1, 0), (1, 1)][g as usize]
}

/// Evaluates each relation of the quantum coordinate algebra as a functional
/// on the basis words of `uq` up to `degree`, with the functionals `A, B, C, D`
/// read off the matrix coefficients of `rho` and products taken through the
/// iterated coproduct. Every value is cross-checked against the same number
/// computed as an entry of the tensor-power representation built from
/// Kronecker products.
pub fn dual_pairing_check(uq: &HopfPresentation, rho: &[Matrix], degree: usize) -> Result<PairingOutcome> {
    let q = uq.alg.q.clone().unwrap_or_else(Coef::q_formal);
    let abcd = Alphabet::new(&["a", "b", "c", "d"])?;
    let env = ParseEnv::new(&abcd).with_scalar("q", q);
    let rels: Vec<(String, NcPoly<Coef>)> = SLQ2_RELATIONS
        .iter()
        .map(|s| Ok((s.to_string(), parse_expr(&env, s)?)))
        .collect::<Result<_>>()?;
    let words = uq.rs().irreducible_words(degree);
    let alpha = uq.alphabet().clone();
    let max_k = rels.iter().map(|(_, p)| p.max_len()).max().unwrap_or(0);
    let tensor_reps: Vec<Vec<Matrix>> = (0..=max_k).map(|k| tensor_power_rep(uq, rho, k)).collect();

    let mut report = Report::new("dual-pairing", uq.name());
    for (name, rel) in &rels {
        let mut witness = None;
        let mut oracle_mismatch = None;
        let mut max_ok = 0usize;
        for w in &words {
            let via_delta = functional(uq, rho, rel, w, &alpha);
            let via_kron = functional_kron(&tensor_reps, rel, w);
            if via_delta != via_kron && oracle_mismatch.is_none() {
                oracle_mismatch = Some(format!("{} on {}: {} vs {}", name, alpha.fmt_word(w), via_delta, via_kron));
            }
            if via_delta.is_zero() {
                max_ok = max_ok.max(w.len());
            } else if witness.is_none() {
                witness = Some(format!("({name})({}) = {via_delta}", alpha.fmt_word(w)));
            }
        }
        report.record(format!("{name} vanishes (largest degree {max_ok})"), witness);
        report.bounded(degree as u32);
        report.record(format!("{name}: coproduct and Kronecker evaluations agree"), oracle_mismatch);
    }
    Ok(PairingOutcome { report, words_checked: words.len() })
}

/// Value of a polynomial in the functionals on the basis word `w`.
fn functional(uq: &HopfPresentation, rho: &[Matrix], rel: &NcPoly<Coef>, w: &Word, alpha: &Arc<Alphabet>) -> Coef {
    let mut total = Coef::zero();
    let x = NcPoly::<Coef>::word(alpha, w);
    for (fw, c) in rel.terms() {
        let k = fw.len();
        let val = if k == 0 {
            uq.counit(&x)
        } else {
            let mut t = TensorElem::pure(&[&x]);
            for leg in 1..k {
                let a = [alpha.clone(), alpha.clone()];
                t = t
                    .expand_leg(leg - 1, &a, |v| Ok::<_, crate::Error>((*uq.delta_word(v)).clone()))
                    .unwrap();
            }
            let mut acc = Coef::zero();
            for (legs, d) in t.terms() {
                let mut prod = d.clone();
                for (v, &g) in legs.iter().zip(fw.iter()) {
                    let (i, j) = entry(g);
                    let m = eval_matrix(&NcPoly::word(alpha, v), rho);
                    prod = &prod * &m[i][j];
                    if prod.is_zero() {
                        break;
                    }
                }
                acc = &acc + &prod;
            }
            acc
        };
        total = &total + &(c * &val);
    }
    total
}

/// Representation `ρ^{⊗k} ∘ Δ^{(k)}` on generators; `k = 0` is the counit.
fn tensor_power_rep(uq: &HopfPresentation, rho: &[Matrix], k: usize) -> Vec<Matrix> {
    let alpha = uq.alphabet();
    (0..alpha.len() as u8)
        .map(|g| {
            if k == 0 {
                return vec![vec![uq.eps_gen(g).clone()]];
            }
            let mut reps: Vec<Matrix> = rho.to_vec();
            for _ in 1..k {
                reps = (0..alpha.len() as u8)
                    .map(|h| {
                        let n = reps[0].len() * rho[0].len();
                        let mut m = vec![vec![Coef::zero(); n]; n];
                        for (legs, c) in uq.delta_gen(h).terms() {
                            let left = eval_matrix(&NcPoly::word(alpha, &legs[0]), &reps);
                            let right = eval_matrix(&NcPoly::word(alpha, &legs[1]), rho);
                            super::mat_add_scaled(&mut m, &kronecker(&left, &right), c);
                        }
                        m
                    })
                    .collect();
            }
            reps[g as usize].clone()
        })
        .collect()
}

fn functional_kron(reps: &[Vec<Matrix>], rel: &NcPoly<Coef>, w: &Word) -> Coef {
    let mut total = Coef::zero();
    for (fw, c) in rel.terms() {
        let k = fw.len();
        let n = reps[k][0].len();
        let mut m = super::mat_identity(n);
        for &g in w.iter() {
            m = crate::linalg::mat_mul(&m, &reps[k][g as usize]);
        }
        // Row and column multi-indices in base 2, first leg most significant.
        let (mut row, mut col) = (0, 0);
        for &g in fw.iter() {
            let (i, j) = entry(g);
            row = row * 2 + i;
            col = col * 2 + j;
        }
        total = &total + &(c * &m[row][col]);
    }
    total
}
