use super::qpoly::QPoly;
use super::rat::Rat;
use crate::error::{Error, Result};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

/// Reduced rational function in `q` with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn new(num: QPoly, den: QPoly) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator in rational function");
        if num.is_zero() {
            return RatFunc { num, den: QPoly::one() };
        }
        let g = QPoly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let l = den.lead();
        if !l.is_one() {
            let li = l.inv().unwrap();
            num = num.scale(&li);
            den = den.scale(&li);
        }
        RatFunc { num, den }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }
}

/// The cyclotomic field ℚ[q]/Φ_d.
#[derive(Debug)]
pub struct CycloField {
    d: u32,
    phi: QPoly,
    deg: usize,
    /// `pow_red[k]` is `q^k mod Φ_d` for `k < 2*deg - 1`.
    pow_red: Vec<Vec<Rat>>,
}

impl CycloField {
    pub fn new(d: u32) -> Arc<CycloField> {
        let phi = QPoly::cyclotomic(d);
        let deg = phi.degree().unwrap();
        let mut pow_red = Vec::new();
        let mut cur = QPoly::one();
        for _ in 0..(2 * deg).max(1) {
            let mut v = cur.coeffs().to_vec();
            v.resize(deg, Rat::zero());
            pow_red.push(v);
            cur = cur.shift(1).divrem(&phi).1;
        }
        Arc::new(CycloField { d, phi, deg, pow_red })
    }

    pub fn order(&self) -> u32 {
        self.d
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn modulus(&self) -> &QPoly {
        &self.phi
    }
}

/// Element of a cyclotomic field with a non-rational residue.
#[derive(Clone, Debug)]
pub struct CycElem {
    field: Arc<CycloField>,
    c: Vec<Rat>,
}

impl CycElem {
    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn residue(&self) -> QPoly {
        QPoly::from_coeffs(self.c.clone())
    }
}

impl PartialEq for CycElem {
    fn eq(&self, o: &CycElem) -> bool {
        self.field.d == o.field.d && self.c == o.c
    }
}

impl Eq for CycElem {}

impl Hash for CycElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.d.hash(state);
        self.c.hash(state);
    }
}

/// Base coefficient: a rational, a rational function in formal `q`,
/// or an element of a cyclotomic field. Constants are always `Rat`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coef {
    Rat(Rat),
    Func(Box<RatFunc>),
    Cyc(Box<CycElem>),
}

fn cyc_canon(field: &Arc<CycloField>, mut c: Vec<Rat>) -> Coef {
    c.resize(field.deg, Rat::zero());
    if c[1..].iter().all(|r| r.is_zero()) {
        Coef::Rat(c.swap_remove(0))
    } else {
        Coef::Cyc(Box::new(CycElem { field: field.clone(), c }))
    }
}

fn cyc_from_poly(field: &Arc<CycloField>, p: &QPoly) -> Coef {
    let mut out = vec![Rat::zero(); field.deg];
    for (k, a) in p.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let red = if k < field.pow_red.len() {
            field.pow_red[k].clone()
        } else {
            let mut v = QPoly::monomial(k, Rat::one()).divrem(&field.phi).1.coeffs().to_vec();
            v.resize(field.deg, Rat::zero());
            v
        };
        for (o, r) in out.iter_mut().zip(red.iter()) {
            if !r.is_zero() {
                *o = &*o + &(a * r);
            }
        }
    }
    cyc_canon(field, out)
}

fn func(num: QPoly, den: QPoly) -> Coef {
    let f = RatFunc::new(num, den);
    if f.den.is_one() {
        if let Some(c) = f.num.as_constant() {
            return Coef::Rat(c);
        }
    }
    Coef::Func(Box::new(f))
}

fn incompatible() -> ! {
    panic!("incompatible coefficient rings: formal q mixed with a cyclotomic specialization")
}

impl Coef {
    pub fn zero() -> Coef {
        Coef::Rat(Rat::zero())
    }

    pub fn one() -> Coef {
        Coef::Rat(Rat::one())
    }

    pub fn int(n: i64) -> Coef {
        Coef::Rat(Rat::int(n))
    }

    pub fn rat(n: i64, d: i64) -> Coef {
        Coef::Rat(Rat::new(n, d))
    }

    /// Formal parameter `q` in ℚ(q).
    pub fn q_formal() -> Coef {
        func(QPoly::x(), QPoly::one())
    }

    /// The generator `q` of ℚ[q]/Φ_d.
    pub fn zeta(field: &Arc<CycloField>) -> Coef {
        cyc_from_poly(field, &QPoly::x())
    }

    pub fn from_qpoly(p: &QPoly) -> Coef {
        func(p.clone(), QPoly::one())
    }

    pub fn from_ratfunc(num: QPoly, den: QPoly) -> Coef {
        func(num, den)
    }

    pub fn cyc_from_qpoly(field: &Arc<CycloField>, p: &QPoly) -> Coef {
        cyc_from_poly(field, p)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coef::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coef::Rat(r) if r.is_one())
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Coef::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn field(&self) -> Option<&Arc<CycloField>> {
        match self {
            Coef::Cyc(c) => Some(&c.field),
            _ => None,
        }
    }

    fn as_ratfunc(&self) -> (QPoly, QPoly) {
        match self {
            Coef::Rat(r) => (QPoly::constant(r.clone()), QPoly::one()),
            Coef::Func(f) => (f.num.clone(), f.den.clone()),
            Coef::Cyc(_) => incompatible(),
        }
    }

    fn as_cyc(&self, field: &Arc<CycloField>) -> Vec<Rat> {
        match self {
            Coef::Rat(r) => {
                let mut v = vec![Rat::zero(); field.deg];
                v[0] = r.clone();
                v
            }
            Coef::Cyc(c) => {
                if c.field.d != field.d {
                    panic!("cyclotomic fields of orders {} and {} mixed", c.field.d, field.d);
                }
                c.c.clone()
            }
            Coef::Func(_) => incompatible(),
        }
    }

    pub fn inv(&self) -> Option<Coef> {
        match self {
            Coef::Rat(r) => r.inv().map(Coef::Rat),
            Coef::Func(f) => Some(func(f.den.clone(), f.num.clone())),
            Coef::Cyc(c) => {
                let a = c.residue();
                let (g, s, _) = xgcd(&a, &c.field.phi);
                let gi = g.as_constant()?.inv()?;
                Some(cyc_from_poly(&c.field, &s.scale(&gi)))
            }
        }
    }

    pub fn pow(&self, e: i32) -> Option<Coef> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Coef::one();
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &b;
            }
            n >>= 1;
            if n > 0 {
                b = &b * &b;
            }
        }
        Some(acc)
    }

    /// Substitute a value for formal `q`. Rationals and cyclotomic elements pass through.
    pub fn eval_q(&self, value: &Coef) -> Result<Coef> {
        match self {
            Coef::Func(f) => {
                let ev = |p: &QPoly| {
                    p.eval_with(value, Coef::zero(), |r| Coef::Rat(r.clone()), |a, b| a + b, |a, b| a * b)
                };
                let d = ev(&f.den);
                if d.is_zero() {
                    return Err(Error::VanishingDenominator(format!(
                        "({})/({}) at q = {value}",
                        f.num, f.den
                    )));
                }
                Ok(&ev(&f.num) * &d.inv().unwrap())
            }
            other => Ok(other.clone()),
        }
    }

    /// Image under reduction modulo `p`, with `q` sent to `qval`.
    /// `None` when a denominator vanishes.
    pub fn mod_p(&self, p: u64, qval: u64) -> Option<u64> {
        use crate::linalg::modp;
        match self {
            Coef::Rat(r) => r.mod_p(p),
            Coef::Func(f) => {
                let d = f.den.mod_p(qval, p)?;
                if d == 0 {
                    return None;
                }
                Some(modp::mul(f.num.mod_p(qval, p)?, modp::inv(d, p), p))
            }
            Coef::Cyc(c) => c.residue().mod_p(qval, p),
        }
    }

    /// Compact canonical text, parenthesised when it is a sum.
    pub fn to_factor_string(&self) -> String {
        let s = self.to_string();
        if needs_parens(&s) {
            format!("({s})")
        } else {
            s
        }
    }
}

pub fn needs_parens(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return true,
            '/' if depth == 0 && s.starts_with('(') => return true,
            _ => {}
        }
    }
    false
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g.
fn xgcd(a: &QPoly, b: &QPoly) -> (QPoly, QPoly, QPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
    let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let s2 = &s0 - &(&q * &s1);
        let t2 = &t0 - &(&q * &t1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    (r0, s0, t0)
}

impl Default for Coef {
    fn default() -> Self {
        Coef::zero()
    }
}

impl From<i64> for Coef {
    fn from(n: i64) -> Coef {
        Coef::int(n)
    }
}

impl From<Rat> for Coef {
    fn from(r: Rat) -> Coef {
        Coef::Rat(r)
    }
}

impl<'a> Add<&'a Coef> for &'a Coef {
    type Output = Coef;
    fn add(self, o: &Coef) -> Coef {
        match (self, o) {
            (Coef::Rat(a), Coef::Rat(b)) => Coef::Rat(a + b),
            (Coef::Cyc(c), x) | (x, Coef::Cyc(c)) => {
                let a = Coef::Cyc(c.clone()).as_cyc(&c.field);
                let b = x.as_cyc(&c.field);
                cyc_canon(&c.field, a.iter().zip(b.iter()).map(|(p, q)| p + q).collect())
            }
            _ => {
                let (an, ad) = self.as_ratfunc();
                let (bn, bd) = o.as_ratfunc();
                if ad == bd {
                    func(&an + &bn, ad)
                } else {
                    func(&(&an * &bd) + &(&bn * &ad), &ad * &bd)
                }
            }
        }
    }
}

impl Neg for &Coef {
    type Output = Coef;
    fn neg(self) -> Coef {
        match self {
            Coef::Rat(a) => Coef::Rat(-a),
            Coef::Func(f) => Coef::Func(Box::new(RatFunc {
                num: -&f.num,
                den: f.den.clone(),
            })),
            Coef::Cyc(c) => Coef::Cyc(Box::new(CycElem {
                field: c.field.clone(),
                c: c.c.iter().map(|r| -r).collect(),
            })),
        }
    }
}

impl<'a> Sub<&'a Coef> for &'a Coef {
    type Output = Coef;
    fn sub(self, o: &Coef) -> Coef {
        if let (Coef::Rat(a), Coef::Rat(b)) = (self, o) {
            return Coef::Rat(a - b);
        }
        self + &(-o)
    }
}

impl<'a> Mul<&'a Coef> for &'a Coef {
    type Output = Coef;
    fn mul(self, o: &Coef) -> Coef {
        match (self, o) {
            (Coef::Rat(a), Coef::Rat(b)) => Coef::Rat(a * b),
            (Coef::Rat(a), x) | (x, Coef::Rat(a)) => {
                if a.is_zero() {
                    return Coef::zero();
                }
                if a.is_one() {
                    return x.clone();
                }
                match x {
                    Coef::Func(f) => func(f.num.scale(a), f.den.clone()),
                    Coef::Cyc(c) => cyc_canon(&c.field, c.c.iter().map(|r| r * a).collect()),
                    Coef::Rat(_) => unreachable!(),
                }
            }
            (Coef::Cyc(c), x) | (x, Coef::Cyc(c)) => {
                let a = QPoly::from_coeffs(c.c.clone());
                let b = QPoly::from_coeffs(x.as_cyc(&c.field));
                cyc_from_poly(&c.field, &(&a * &b))
            }
            _ => {
                let (an, ad) = self.as_ratfunc();
                let (bn, bd) = o.as_ratfunc();
                func(&an * &bn, &ad * &bd)
            }
        }
    }
}

impl<'a> Div<&'a Coef> for &'a Coef {
    type Output = Coef;
    fn div(self, o: &Coef) -> Coef {
        self * &o.inv().expect("division by zero coefficient")
    }
}

impl Neg for Coef {
    type Output = Coef;
    fn neg(self) -> Coef {
        -&self
    }
}

macro_rules! owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Coef> for Coef {
            type Output = Coef;
            fn $f(self, o: Coef) -> Coef {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a Coef> for Coef {
            type Output = Coef;
            fn $f(self, o: &Coef) -> Coef {
                (&self).$f(o)
            }
        }
    };
}
owned!(Add, add);
owned!(Sub, sub);
owned!(Mul, mul);
owned!(Div, div);

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coef::Rat(r) => write!(f, "{r}"),
            Coef::Func(r) => {
                if r.den.is_one() {
                    write!(f, "{}", r.num)
                } else {
                    let n = r.num.to_string();
                    let d = r.den.to_string();
                    let n = if needs_parens(&n) || n.contains('*') { format!("({n})") } else { n };
                    let d = if needs_parens(&d) || d.contains('*') { format!("({d})") } else { d };
                    write!(f, "{n}/{d}")
                }
            }
            Coef::Cyc(c) => write!(f, "{}", c.residue()),
        }
    }
}

impl fmt::Debug for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_four_has_q_squared_minus_one() {
        let f = CycloField::new(4);
        let q = Coef::zeta(&f);
        assert_eq!(&q * &q, Coef::int(-1));
    }

    #[test]
    fn cyclotomic_orders() {
        for d in 3..=12u32 {
            let f = CycloField::new(d);
            let q = Coef::zeta(&f);
            for k in 1..d {
                assert!(!q.pow(k as i32).unwrap().is_one(), "d={d} k={k}");
            }
            assert!(q.pow(d as i32).unwrap().is_one());
        }
    }

    #[test]
    fn cyclotomic_inverse() {
        let f = CycloField::new(5);
        let q = Coef::zeta(&f);
        let x = &(&q * &q) + &Coef::int(3);
        let xi = x.inv().unwrap();
        assert!((&x * &xi).is_one());
    }

    #[test]
    fn ratfunc_normalizes() {
        let q = Coef::q_formal();
        let num = &(&q * &q) - &Coef::one();
        let den = &q - &Coef::one();
        let r = &num / &den;
        assert_eq!(r, &q + &Coef::one());
        assert_eq!(r.eval_q(&Coef::int(3)).unwrap(), Coef::int(4));
    }

    #[test]
    fn display_forms() {
        let q = Coef::q_formal();
        let x = &Coef::one() / &(&q - &q.inv().unwrap());
        assert_eq!(x.to_string(), "q/(q^2 - 1)");
        assert_eq!(Coef::rat(-1, 2).to_string(), "-1/2");
    }
}
