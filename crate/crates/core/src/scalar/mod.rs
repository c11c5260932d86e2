//! Exact coefficient rings: rationals, ℚ(q), cyclotomic fields, and
//! parameter rings in named symbols.

mod coef;
mod qpoly;
mod rat;
mod ring;
mod tpoly;

pub use coef::{needs_parens, Coef, CycElem, CycloField, RatFunc};
pub use qpoly::QPoly;
pub use rat::Rat;
pub use ring::{q_binomial, q_factorial, q_integer, specialize, Base, Ring, RingSpec};
pub use tpoly::{exact_div, mono_inv, mono_lex, mono_mul, Mono, Sym, SymTable, TFrac, TPoly};

use std::fmt;

/// Coefficient ring interface used by the generic algebra code.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_coef(c: Coef) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Inverse when the element is a unit of the ring.
    fn try_inv(&self) -> Option<Self>;
    /// The element as a base coefficient, when it is one.
    fn as_coef(&self) -> Option<Coef>;
    fn scale_coef(&self, c: &Coef) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_coef(Coef::int(n))
    }

    fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.times(self);
        }
        acc
    }
}

/// A [`Scalar`] ring in which every nonzero element is invertible.
pub trait Field: Scalar {
    fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }
}

impl Scalar for Coef {
    fn zero() -> Self {
        Coef::zero()
    }
    fn one() -> Self {
        Coef::one()
    }
    fn is_zero(&self) -> bool {
        Coef::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Coef::is_one(self)
    }
    fn from_coef(c: Coef) -> Self {
        c
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }
    fn as_coef(&self) -> Option<Coef> {
        Some(self.clone())
    }
    fn scale_coef(&self, c: &Coef) -> Self {
        self * c
    }
    fn pow(&self, n: u32) -> Self {
        Coef::pow(self, n as i32).unwrap()
    }
}

impl Field for Coef {}
