use super::coef::{Coef, CycloField};
use super::qpoly::QPoly;
use super::tpoly::{Sym, SymTable, TPoly};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Base {
    Rationals,
    FormalQ,
    Cyclotomic(u32),
}

/// Text form: `base=rationals|q|cyclotomic:<d>; params=t_1!,t_E,...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    pub base: Base,
    /// Parameter names with their invertibility flag, in order.
    pub params: Vec<(String, bool)>,
}

impl RingSpec {
    pub fn new(base: Base) -> RingSpec {
        RingSpec { base, params: Vec::new() }
    }

    pub fn with_param(mut self, name: &str, invertible: bool) -> RingSpec {
        self.params.push((name.to_string(), invertible));
        self
    }

    pub fn validate(&self) -> Result<()> {
        if let Base::Cyclotomic(d) = self.base {
            if d < 3 {
                return Err(Error::CyclotomicOrder(d));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for (p, _) in &self.params {
            if !seen.insert(p) {
                return Err(Error::DuplicateParam(p.clone()));
            }
        }
        Ok(())
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.base {
            Base::Rationals => write!(f, "base=rationals")?,
            Base::FormalQ => write!(f, "base=q")?,
            Base::Cyclotomic(d) => write!(f, "base=cyclotomic:{d}")?,
        }
        if !self.params.is_empty() {
            let ps: Vec<String> = self
                .params
                .iter()
                .map(|(n, inv)| if *inv { format!("{n}!") } else { n.clone() })
                .collect();
            write!(f, "; params={}", ps.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for RingSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<RingSpec> {
        let mut base = None;
        let mut params = Vec::new();
        for part in s.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("ring spec field `{part}`")))?;
            match k.trim() {
                "base" => {
                    let v = v.trim();
                    base = Some(match v {
                        "rationals" => Base::Rationals,
                        "q" => Base::FormalQ,
                        _ => {
                            let d = v
                                .strip_prefix("cyclotomic:")
                                .and_then(|d| d.trim().parse::<u32>().ok())
                                .ok_or_else(|| Error::Parse(format!("ring base `{v}`")))?;
                            Base::Cyclotomic(d)
                        }
                    });
                }
                "params" => {
                    for p in v.split(',') {
                        let p = p.trim();
                        if p.is_empty() {
                            continue;
                        }
                        match p.strip_suffix('!') {
                            Some(n) => params.push((n.trim().to_string(), true)),
                            None => params.push((p.to_string(), false)),
                        }
                    }
                }
                other => return Err(Error::Parse(format!("unknown ring spec key `{other}`"))),
            }
        }
        let spec = RingSpec {
            base: base.ok_or_else(|| Error::Parse("ring spec without base".into()))?,
            params,
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Constructed coefficient ring: base field context plus parameter symbols.
#[derive(Debug, Clone)]
pub struct Ring {
    spec: RingSpec,
    field: Option<Arc<CycloField>>,
    syms: Arc<SymTable>,
}

impl Ring {
    pub fn make(spec: RingSpec) -> Result<Ring> {
        spec.validate()?;
        let field = match spec.base {
            Base::Cyclotomic(d) => Some(CycloField::new(d)),
            _ => None,
        };
        let syms = SymTable::new(&spec.params)?;
        Ok(Ring { spec, field, syms })
    }

    pub fn rationals() -> Ring {
        Ring::make(RingSpec::new(Base::Rationals)).unwrap()
    }

    pub fn formal() -> Ring {
        Ring::make(RingSpec::new(Base::FormalQ)).unwrap()
    }

    pub fn cyclotomic(d: u32) -> Result<Ring> {
        Ring::make(RingSpec::new(Base::Cyclotomic(d)))
    }

    /// Field containing a primitive `n`-th root of unity: ℚ for n ≤ 2.
    pub fn root_of_unity_field(n: u32) -> Ring {
        if n <= 2 {
            Ring::rationals()
        } else {
            Ring::cyclotomic(n).unwrap()
        }
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn base(&self) -> Base {
        self.spec.base
    }

    pub fn field(&self) -> Option<&Arc<CycloField>> {
        self.field.as_ref()
    }

    pub fn syms(&self) -> &Arc<SymTable> {
        &self.syms
    }

    /// Same base with a different parameter list.
    pub fn with_params(&self, params: Vec<(String, bool)>) -> Result<Ring> {
        Ring::make(RingSpec { base: self.spec.base, params })
    }

    /// The distinguished element `q`, if the base has one.
    pub fn q(&self) -> Option<Coef> {
        match self.spec.base {
            Base::Rationals => None,
            Base::FormalQ => Some(Coef::q_formal()),
            Base::Cyclotomic(_) => Some(Coef::zeta(self.field.as_ref().unwrap())),
        }
    }

    /// A primitive `n`-th root of unity in this base, when one exists.
    pub fn root_of_unity(&self, n: u32) -> Option<Coef> {
        match (n, self.spec.base) {
            (1, _) => Some(Coef::one()),
            (2, _) => Some(Coef::int(-1)),
            (_, Base::Cyclotomic(d)) if d % n == 0 => {
                Some(Coef::zeta(self.field.as_ref().unwrap()).pow((d / n) as i32).unwrap())
            }
            _ => None,
        }
    }

    /// Evaluate a polynomial in `q` in this ring.
    pub fn lift_qpoly(&self, p: &QPoly) -> Result<Coef> {
        match self.spec.base {
            Base::FormalQ => Ok(Coef::from_qpoly(p)),
            Base::Cyclotomic(_) => Ok(Coef::cyc_from_qpoly(self.field.as_ref().unwrap(), p)),
            Base::Rationals => p
                .as_constant()
                .map(Coef::Rat)
                .ok_or_else(|| Error::InvalidArgument("q is not defined over the rationals".into())),
        }
    }

    pub fn sym(&self, name: &str) -> Result<TPoly> {
        let s = self.sym_id(name)?;
        Ok(TPoly::sym(&self.syms, s))
    }

    pub fn sym_id(&self, name: &str) -> Result<Sym> {
        self.syms
            .lookup(name)
            .ok_or_else(|| Error::UnknownParam(name.to_string()))
    }

    /// Assignment vector indexed by symbol id, validating invertible symbols.
    pub fn assignment(&self, values: &HashMap<String, Coef>) -> Result<Vec<Option<Coef>>> {
        let mut v = vec![None; self.syms.len()];
        for (name, val) in values {
            let s = self.sym_id(name)?;
            if self.syms.is_invertible(s) && val.is_zero() {
                return Err(Error::ZeroAssignedToInvertible(name.clone()));
            }
            v[s as usize] = Some(val.clone());
        }
        Ok(v)
    }
}

/// Ring homomorphism from the parameter ring to base coefficients.
pub fn specialize(
    ring: &Ring,
    x: &TPoly,
    assignment: &HashMap<String, Coef>,
    q_target: Option<&Coef>,
) -> Result<Coef> {
    let a = ring.assignment(assignment)?;
    x.specialize(&a, q_target)
}

/// `[r] = 1 + q + ... + q^(r-1)`.
pub fn q_integer(r: u32) -> QPoly {
    QPoly::from_ints(&vec![1; r as usize])
}

pub fn q_factorial(r: u32) -> QPoly {
    (1..=r).fold(QPoly::one(), |acc, k| &acc * &q_integer(k))
}

pub fn q_binomial(n: u32, r: u32) -> Result<QPoly> {
    if r > n {
        return Err(Error::InvalidBinomial { n, r });
    }
    let den = &q_factorial(r) * &q_factorial(n - r);
    Ok(q_factorial(n)
        .div_exact(&den)
        .expect("q-binomial is a polynomial"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rat, Scalar, TFrac};

    #[test]
    fn spec_round_trip() {
        let s: RingSpec = "base=cyclotomic:4; params=t_1!,t_E".parse().unwrap();
        assert_eq!(s.base, Base::Cyclotomic(4));
        assert_eq!(s.params, vec![("t_1".into(), true), ("t_E".into(), false)]);
        assert_eq!(s.to_string(), "base=cyclotomic:4; params=t_1!,t_E");
        assert_eq!(s.to_string().parse::<RingSpec>().unwrap(), s);
    }

    #[test]
    fn spec_errors() {
        assert_eq!("base=cyclotomic:2".parse::<RingSpec>(), Err(Error::CyclotomicOrder(2)));
        assert_eq!(
            "base=q; params=a,a!".parse::<RingSpec>(),
            Err(Error::DuplicateParam("a".into()))
        );
    }

    #[test]
    fn rational_sum() {
        let r = Ring::rationals();
        assert!(r.q().is_none());
        assert_eq!(&Coef::rat(1, 3) + &Coef::rat(1, 6), Coef::rat(1, 2));
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_integer(2), QPoly::from_ints(&[1, 1]));
        assert_eq!(q_binomial(5, 0).unwrap(), QPoly::one());
        let expect = &QPoly::from_ints(&[1, 0, 1]) * &QPoly::from_ints(&[1, 1, 1]);
        assert_eq!(q_binomial(4, 2).unwrap(), expect);
        assert!(q_binomial(2, 3).is_err());
    }

    #[test]
    fn specialize_examples() {
        let spec: RingSpec = "base=q; params=t_1!,t_E,t_K!,t_Kinv!".parse().unwrap();
        let ring = Ring::make(spec).unwrap();
        let x = ring
            .sym("t_K")
            .unwrap()
            .times(&ring.sym("t_Kinv").unwrap())
            .times(&ring.sym("t_1").unwrap().try_inv().unwrap());
        let ones: HashMap<String, Coef> =
            ["t_1", "t_E", "t_K", "t_Kinv"].iter().map(|n| (n.to_string(), Coef::one())).collect();
        assert_eq!(specialize(&ring, &x, &ones, None).unwrap(), Coef::one());

        let q = Coef::q_formal();
        let y = &(&(&q * &q) - &Coef::one()) / &(&q - &Coef::one());
        let p = TPoly::constant(y);
        assert_eq!(specialize(&ring, &p, &ones, Some(&Coef::int(3))).unwrap(), Coef::int(4));

        let inv_te = TFrac::new(TPoly::one(), ring.sym("t_E").unwrap()).unwrap();
        let mut zero_e = ones.clone();
        zero_e.insert("t_E".into(), Coef::zero());
        let a = ring.assignment(&zero_e).unwrap();
        assert!(matches!(inv_te.specialize(&a, None), Err(Error::VanishingDenominator(_))));

        let mut bad = ones.clone();
        bad.insert("t_K".into(), Coef::Rat(Rat::zero()));
        assert_eq!(ring.assignment(&bad), Err(Error::ZeroAssignedToInvertible("t_K".into())));
    }
}
