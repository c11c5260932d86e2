use super::rat::Rat;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial in `q` over the rationals, trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    c: Vec<Rat>,
}

impl QPoly {
    pub fn zero() -> QPoly {
        QPoly { c: Vec::new() }
    }

    pub fn one() -> QPoly {
        QPoly::constant(Rat::one())
    }

    pub fn constant(r: Rat) -> QPoly {
        QPoly::from_coeffs(vec![r])
    }

    /// `q` itself.
    pub fn x() -> QPoly {
        QPoly::monomial(1, Rat::one())
    }

    pub fn monomial(deg: usize, r: Rat) -> QPoly {
        let mut c = vec![Rat::zero(); deg + 1];
        c[deg] = r;
        QPoly::from_coeffs(c)
    }

    pub fn from_coeffs(mut c: Vec<Rat>) -> QPoly {
        while c.last().is_some_and(|r| r.is_zero()) {
            c.pop();
        }
        QPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.iter().map(|&n| Rat::int(n)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.c.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.c.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, r: &Rat) -> QPoly {
        if r.is_zero() {
            return QPoly::zero();
        }
        QPoly::from_coeffs(self.c.iter().map(|a| a * r).collect())
    }

    pub fn monic(&self) -> QPoly {
        match self.lead().inv() {
            Some(i) => self.scale(&i),
            None => QPoly::zero(),
        }
    }

    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![Rat::zero(); k];
        c.extend(self.c.iter().cloned());
        QPoly { c }
    }

    pub fn pow(&self, e: u32) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division by a nonzero divisor.
    pub fn divrem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lead().inv().unwrap();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quo = vec![Rat::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let f = &r[i] * &inv;
            for (j, dc) in d.c.iter().enumerate() {
                r[i - dd + j] = &r[i - dd + j] - &(&f * dc);
            }
            quo[i - dd] = f;
        }
        r.truncate(dd);
        (QPoly::from_coeffs(quo), QPoly::from_coeffs(r))
    }

    /// Exact quotient; `None` if the division leaves a remainder.
    pub fn div_exact(&self, d: &QPoly) -> Option<QPoly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    /// Horner evaluation in any ring given by closures.
    pub fn eval_with<T: Clone>(
        &self,
        x: &T,
        zero: T,
        lift: impl Fn(&Rat) -> T,
        add: impl Fn(&T, &T) -> T,
        mul: impl Fn(&T, &T) -> T,
    ) -> T {
        let mut acc = zero;
        for a in self.c.iter().rev() {
            acc = add(&mul(&acc, x), &lift(a));
        }
        acc
    }

    pub fn mod_p(&self, x: u64, p: u64) -> Option<u64> {
        use crate::linalg::modp;
        let mut acc = 0u64;
        for a in self.c.iter().rev() {
            acc = modp::add(modp::mul(acc, x, p), a.mod_p(p)?, p);
        }
        Some(acc)
    }

    /// The `n`-th cyclotomic polynomial.
    pub fn cyclotomic(n: u32) -> QPoly {
        assert!(n >= 1);
        let mut p = QPoly::monomial(n as usize, Rat::one()) - QPoly::one();
        for k in 1..n {
            if n.is_multiple_of(k) {
                p = p.div_exact(&QPoly::cyclotomic(k)).expect("cyclotomic division");
            }
        }
        p
    }

    pub(crate) fn fmt_in(&self, var: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a.signum() < 0;
            let mag = a.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "{var}")?,
                _ => write!(f, "{var}^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in("q", f)
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in("q", f)
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        QPoly::from_coeffs(c)
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        self + &(-o)
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        QPoly::from_coeffs(c)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            c: self.c.iter().map(|a| -a).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

macro_rules! owned {
    ($tr:ident, $f:ident) => {
        impl $tr<QPoly> for QPoly {
            type Output = QPoly;
            fn $f(self, o: QPoly) -> QPoly {
                (&self).$f(&o)
            }
        }
    };
}
owned!(Add, add);
owned!(Sub, sub);
owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(QPoly::cyclotomic(4), QPoly::from_ints(&[1, 0, 1]));
        assert_eq!(QPoly::cyclotomic(6), QPoly::from_ints(&[1, -1, 1]));
        assert_eq!(QPoly::cyclotomic(3), QPoly::from_ints(&[1, 1, 1]));
        assert_eq!(QPoly::cyclotomic(12).degree(), Some(4));
    }

    #[test]
    fn gcd_is_monic() {
        let a = QPoly::from_ints(&[-1, 0, 1]);
        let b = QPoly::from_ints(&[-2, 2]);
        assert_eq!(QPoly::gcd(&a, &b), QPoly::from_ints(&[-1, 1]));
    }

    #[test]
    fn display() {
        let p = QPoly::from_ints(&[1, -2, 0, 1]);
        assert_eq!(p.to_string(), "q^3 - 2*q + 1");
    }
}
