//! Exact associativity of a free extension over a Laurent base with
//! cyclotomic coefficients. Denominators are cleared once, so coefficients
//! live in `ℤ[ζ]` as overflow-checked `i128` vectors, and monomials are
//! fixed-width exponent keys.

use crate::comod::FreeExtension;
use crate::error::{Error, Result};
use crate::scalar::{Coef, Rat, TPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use std::collections::HashMap;
use std::sync::Arc;

const WIDTH: usize = 32;
const MAX_PHI: usize = 4;

type Key = [i8; WIDTH];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
struct Z([i128; MAX_PHI]);

/// `ℤ[x]/Φ_d` with `phi = deg Φ_d`; `red[k]` is `x^(phi + k)` reduced.
struct Cyclo {
    phi: usize,
    red: Vec<[i128; MAX_PHI]>,
}

fn unavailable(why: impl Into<String>) -> Error {
    Error::InvalidArgument(format!("fast kernel unavailable: {}", why.into()))
}

fn big_to_i128(b: &BigInt) -> Result<i128> {
    b.to_i128().ok_or_else(|| unavailable("coefficient exceeds 128 bits"))
}

impl Cyclo {
    fn new(field: Option<&Arc<crate::scalar::CycloField>>) -> Result<Cyclo> {
        let Some(f) = field else { return Ok(Cyclo { phi: 1, red: vec![] }) };
        let phi = f.degree();
        if phi > MAX_PHI {
            return Err(unavailable(format!("cyclotomic degree {phi}")));
        }
        let m = f.modulus();
        let mut red = Vec::new();
        // x^phi = -Σ m_j x^j; higher powers by shifting.
        let mut cur = [0i128; MAX_PHI];
        for (j, c) in cur.iter_mut().enumerate().take(phi) {
            *c = -big_to_i128(&m.coeff(j).numer())?;
        }
        for _ in 0..phi.saturating_sub(1) {
            red.push(cur);
            let top = cur[phi - 1];
            let mut next = [0i128; MAX_PHI];
            for j in (1..phi).rev() {
                next[j] = cur[j - 1];
            }
            for j in 0..phi {
                next[j] += top * red[0][j];
            }
            cur = next;
        }
        if red.is_empty() {
            red.push(cur);
        }
        Ok(Cyclo { phi, red })
    }

    fn mul(&self, a: &Z, b: &Z) -> Option<Z> {
        let p = self.phi;
        let mut wide = [0i128; 2 * MAX_PHI];
        for i in 0..p {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..p {
                wide[i + j] = wide[i + j].checked_add(a.0[i].checked_mul(b.0[j])?)?;
            }
        }
        let mut out = [0i128; MAX_PHI];
        out[..p].copy_from_slice(&wide[..p]);
        for k in p..2 * p - 1 {
            if wide[k] == 0 {
                continue;
            }
            for j in 0..p {
                out[j] = out[j].checked_add(wide[k].checked_mul(self.red[k - p][j])?)?;
            }
        }
        Some(Z(out))
    }
}

fn add(a: &mut Z, b: &Z) -> Option<()> {
    for (x, y) in a.0.iter_mut().zip(&b.0) {
        *x = x.checked_add(*y)?;
    }
    Some(())
}

type FPoly = Vec<(Key, Z)>;

fn rats(c: &Coef, phi: usize) -> Result<Vec<Rat>> {
    match c {
        Coef::Rat(r) => {
            let mut v = vec![Rat::zero(); phi];
            v[0] = r.clone();
            Ok(v)
        }
        Coef::Cyc(e) => {
            let mut v = e.residue().coeffs().to_vec();
            v.resize(phi, Rat::zero());
            Ok(v)
        }
        Coef::Func(_) => Err(unavailable("formal q")),
    }
}

fn fields(e: &FreeExtension<TPoly>) -> Result<Option<&Arc<crate::scalar::CycloField>>> {
    let mut found: Option<&Arc<crate::scalar::CycloField>> = None;
    for row in &e.mult {
        for v in row {
            for (_, p) in v {
                for (_, c) in p.terms() {
                    if let Some(f) = c.field() {
                        if found.is_some_and(|g| g.order() != f.order()) {
                            return Err(unavailable("mixed cyclotomic fields"));
                        }
                        found = Some(f);
                    }
                }
            }
        }
    }
    Ok(found)
}

/// First triple `(i, j, k)` with `(m_i m_j) m_k != m_i (m_j m_k)`, checked exactly
/// on every triple; an error when the structure constants do not fit the kernel.
pub fn associativity_witness(e: &FreeExtension<TPoly>) -> Result<Option<(usize, usize, usize)>> {
    let field = fields(e)?;
    let ring = Cyclo::new(field)?;
    let phi = ring.phi;
    let mut den = BigInt::one();
    for row in &e.mult {
        for v in row {
            for (_, p) in v {
                for (_, c) in p.terms() {
                    for r in rats(c, phi)? {
                        den = den.lcm(&r.denom());
                    }
                }
            }
        }
    }
    let conv = |p: &TPoly| -> Result<FPoly> {
        let mut out = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let mut key = [0i8; WIDTH];
            for &(s, x) in m.iter() {
                let s = s as usize;
                if s >= WIDTH {
                    return Err(unavailable(format!("{} symbols", s + 1)));
                }
                key[s] = i8::try_from(x).map_err(|_| unavailable("exponent"))?;
            }
            let mut z = Z::default();
            for (j, r) in rats(c, phi)?.iter().enumerate() {
                z.0[j] = big_to_i128(&(r.numer() * (&den / r.denom())))?;
            }
            out.push((key, z));
        }
        Ok(out)
    };
    let n = e.rank();
    let mut fm: Vec<Vec<Vec<(usize, FPoly)>>> = Vec::with_capacity(n);
    for row in &e.mult {
        let mut r = Vec::with_capacity(n);
        for v in row {
            r.push(v.iter().map(|(k, p)| Ok((*k, conv(p)?))).collect::<Result<Vec<_>>>()?);
        }
        fm.push(r);
    }
    let overflow = || unavailable("overflow");
    let accumulate = |acc: &mut HashMap<(usize, Key), Z>, c: &FPoly, r: usize, d: &FPoly| -> Result<()> {
        for (ka, za) in c {
            for (kb, zb) in d {
                let mut key = [0i8; WIDTH];
                for t in 0..WIDTH {
                    key[t] = ka[t].checked_add(kb[t]).ok_or_else(|| unavailable("exponent"))?;
                }
                let prod = ring.mul(za, zb).ok_or_else(overflow)?;
                add(acc.entry((r, key)).or_default(), &prod).ok_or_else(overflow)?;
            }
        }
        Ok(())
    };
    let mut lhs = HashMap::new();
    let mut rhs = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                lhs.clear();
                rhs.clear();
                for (l, c) in &fm[i][j] {
                    for (r, d) in &fm[*l][k] {
                        accumulate(&mut lhs, c, *r, d)?;
                    }
                }
                for (l, c) in &fm[j][k] {
                    for (r, d) in &fm[i][*l] {
                        accumulate(&mut rhs, d, *r, c)?;
                    }
                }
                lhs.retain(|_, z| *z != Z::default());
                rhs.retain(|_, z| *z != Z::default());
                if lhs != rhs {
                    return Ok(Some((i, j, k)));
                }
            }
        }
    }
    Ok(None)
}
