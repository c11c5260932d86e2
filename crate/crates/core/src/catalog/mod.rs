//! Presentation files and the registry of named objects.

use crate::error::{Error, Result};
use crate::hopf::{Algebra, HopfPresentation, TensorElem};
use crate::ncalg::{parse_expr, parse_relation, Alphabet, NcPoly, ParseEnv, RewriteSystem};
use crate::scalar::{Coef, Rat, Ring, RingSpec};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

mod structs;
pub use structs::{graded, group_named, laurent_extension, matrix_algebra, quaternions, struct_hopf, truncated_polynomials, FINITE_HOPF};

pub const CATALOG_DIR_ENV: &str = "HOPFKIT_CATALOG_DIR";

/// On-disk presentation of an algebra, optionally with Hopf structure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Presentation {
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub ring: String,
    /// Value substituted for `q` when the base has no distinguished `q`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    /// Reject `q = ±1`.
    #[serde(default)]
    pub require_generic_q: bool,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub coproduct: BTreeMap<String, Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub counit: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub antipode: BTreeMap<String, String>,
}

impl Presentation {
    pub fn from_json(s: &str) -> Result<Presentation> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentation serializes")
    }

    pub fn ring(&self) -> Result<Ring> {
        Ring::make(self.ring.parse::<RingSpec>()?)
    }

    fn q_value(&self, ring: &Ring) -> Result<Option<Coef>> {
        match &self.q {
            Some(s) => Ok(Some(Coef::Rat(s.trim().parse::<Rat>().map_err(Error::Parse)?))),
            None => Ok(ring.q()),
        }
    }

    fn alphabet(&self) -> Result<Arc<Alphabet>> {
        match &self.weights {
            Some(w) if w.len() != self.generators.len() => {
                Err(Error::DimensionMismatch("one weight per generator".into()))
            }
            Some(w) => Alphabet::weighted(&self.generators, w),
            None => Alphabet::new(&self.generators),
        }
    }

    pub fn algebra(&self) -> Result<Algebra> {
        let ring = self.ring()?;
        let q = self.q_value(&ring)?;
        if self.require_generic_q {
            match &q {
                Some(v) if v.is_one() || (-v).is_one() => return Err(Error::DegenerateQ),
                None => return Err(Error::DegenerateQ),
                _ => {}
            }
        }
        let alpha = self.alphabet()?;
        let env = env_for(&alpha, q.as_ref());
        let rules = self
            .relations
            .iter()
            .map(|s| parse_relation(&env, s))
            .collect::<Result<Vec<_>>>()?;
        let rs = RewriteSystem::new(&alpha, rules)?;
        Ok(Algebra {
            name: self.name.clone(),
            ring,
            q,
            rs: Arc::new(rs),
        })
    }

    pub fn hopf(&self) -> Result<HopfPresentation> {
        let alg = self.algebra()?;
        let alpha = alg.alphabet().clone();
        let env = env_for(&alpha, alg.q.as_ref());
        let mut delta = Vec::new();
        let mut eps = Vec::new();
        let mut s = Vec::new();
        for g in &self.generators {
            let terms = self
                .coproduct
                .get(g)
                .ok_or_else(|| Error::Parse(format!("no coproduct for `{g}`")))?;
            delta.push(parse_tensor(&env, terms)?);
            let e = self
                .counit
                .get(g)
                .ok_or_else(|| Error::Parse(format!("no counit for `{g}`")))?;
            eps.push(parse_scalar(&env, e)?);
            let a = self
                .antipode
                .get(g)
                .ok_or_else(|| Error::Parse(format!("no antipode for `{g}`")))?;
            s.push(parse_expr(&env, a)?);
        }
        HopfPresentation::new(alg, delta, eps, s)
    }
}

pub fn env_for(alpha: &Arc<Alphabet>, q: Option<&Coef>) -> ParseEnv<Coef> {
    let env = ParseEnv::new(alpha);
    match q {
        Some(q) => env.with_scalar("q", q.clone()),
        None => env,
    }
}

pub fn parse_scalar(env: &ParseEnv<Coef>, s: &str) -> Result<Coef> {
    parse_expr(env, s)?
        .as_scalar()
        .ok_or_else(|| Error::Parse(format!("`{s}` is not a scalar")))
}

/// Sum of `left (x) right` over the listed pairs.
pub fn parse_tensor(env: &ParseEnv<Coef>, terms: &[(String, String)]) -> Result<TensorElem<Coef>> {
    let alpha = env.alpha.clone();
    let mut t = TensorElem::zero(&[alpha.clone(), alpha]);
    for (l, r) in terms {
        let a = parse_expr(env, l)?;
        let b = parse_expr(env, r)?;
        t = t.plus(&TensorElem::pure(&[&a, &b]));
    }
    Ok(t)
}

/// Same as [`parse_tensor`] with separate alphabets for the two legs.
pub fn parse_tensor2(
    left: &ParseEnv<Coef>,
    right: &ParseEnv<Coef>,
    terms: &[(String, String)],
) -> Result<TensorElem<Coef>> {
    let mut t = TensorElem::zero(&[left.alpha.clone(), right.alpha.clone()]);
    for (l, r) in terms {
        let a: NcPoly<Coef> = parse_expr(left, l)?;
        let b = parse_expr(right, r)?;
        t = t.plus(&TensorElem::pure(&[&a, &b]));
    }
    Ok(t)
}

const BUILTIN: [(&str, &str); 5] = [
    ("qplane", include_str!("data/qplane.json")),
    ("SL2", include_str!("data/SL2.json")),
    ("SLq2", include_str!("data/SLq2.json")),
    ("Cq", include_str!("data/Cq.json")),
    ("Uq", include_str!("data/Uq.json")),
];

/// `e = d` for odd `d`, `d/2` for even `d`.
pub fn ud_e(d: u32) -> u32 {
    if d % 2 == 1 {
        d
    } else {
        d / 2
    }
}

/// The finite quotient `u_d` of the quantum enveloping algebra at a primitive
/// `d`-th root of unity. `Kinv` is eliminated in favour of `K^(e-1)`, which the
/// weights make a decreasing rule.
pub fn ud_presentation(d: u32) -> Result<Presentation> {
    if d < 3 {
        return Err(Error::CyclotomicOrder(d));
    }
    let e = ud_e(d);
    let ke1 = if e == 1 { "1".to_string() } else { format!("K^{}", e - 1) };
    let rels = vec![
        format!("Kinv -> {ke1}"),
        format!("K^{e} -> 1"),
        format!("E^{e} -> 0"),
        format!("F^{e} -> 0"),
        "KE -> q^2*EK".to_string(),
        "KF -> q^-2*FK".to_string(),
        format!("FE -> EF - (q - q^-1)^-1*(K - {ke1})"),
    ];
    let pairs = |v: &[(&str, &str)]| v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    Ok(Presentation {
        name: format!("u{d}"),
        description: format!("restricted quantum sl(2) at a primitive {d}-th root of unity, dimension {}", e * e * e),
        ring: format!("base=cyclotomic:{d}"),
        q: None,
        require_generic_q: true,
        generators: ["E", "F", "K", "Kinv"].map(String::from).to_vec(),
        weights: Some(vec![1, 1, 0, 1]),
        relations: rels,
        coproduct: BTreeMap::from([
            ("E".into(), pairs(&[("1", "E"), ("E", "K")])),
            ("F".into(), pairs(&[("Kinv", "F"), ("F", "1")])),
            ("K".into(), pairs(&[("K", "K")])),
            ("Kinv".into(), pairs(&[("Kinv", "Kinv")])),
        ]),
        counit: BTreeMap::from([
            ("E".into(), "0".into()),
            ("F".into(), "0".into()),
            ("K".into(), "1".into()),
            ("Kinv".into(), "1".into()),
        ]),
        antipode: BTreeMap::from([
            ("E".into(), "-E*Kinv".into()),
            ("F".into(), "-K*F".into()),
            ("K".into(), "Kinv".into()),
            ("Kinv".into(), "K".into()),
        ]),
    })
}

/// Taft algebra of dimension `N^2` at a primitive `N`-th root of unity.
pub fn taft_presentation(n: u32) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("Taft algebra needs N >= 2, got {n}")));
    }
    let (ring, q) = if n == 2 {
        ("base=rationals".to_string(), Some("-1".to_string()))
    } else {
        (format!("base=cyclotomic:{n}"), None)
    };
    let gn1 = if n == 2 { "g".to_string() } else { format!("g^{}", n - 1) };
    Ok(Presentation {
        name: format!("taft{n}"),
        description: format!("Taft algebra of dimension {}", n * n),
        ring,
        q,
        require_generic_q: false,
        generators: vec!["g".into(), "x".into()],
        weights: None,
        relations: vec![format!("xg -> q*gx"), format!("g^{n} -> 1"), format!("x^{n} -> 0")],
        coproduct: BTreeMap::from([
            ("g".into(), vec![("g".into(), "g".into())]),
            ("x".into(), vec![("1".into(), "x".into()), ("x".into(), "g".into())]),
        ]),
        counit: BTreeMap::from([("g".into(), "1".into()), ("x".into(), "0".into())]),
        antipode: BTreeMap::from([("g".into(), gn1.clone()), ("x".into(), format!("-x*{gn1}"))]),
    })
}

/// Resolve a presentation by name: built-in files, generated families
/// (`u<d>`, `taft<N>`), then `<name>.json` under the catalog directory.
pub fn presentation(name: &str) -> Result<Presentation> {
    if let Some((_, src)) = BUILTIN.iter().find(|(n, _)| *n == name) {
        return Presentation::from_json(src);
    }
    if let Some(d) = name.strip_prefix('u').and_then(|s| s.parse::<u32>().ok()) {
        return ud_presentation(d);
    }
    if let Some(n) = name.strip_prefix("taft").and_then(|s| s.parse::<u32>().ok()) {
        return taft_presentation(n);
    }
    if let Ok(dir) = std::env::var(CATALOG_DIR_ENV) {
        let path = std::path::Path::new(&dir).join(format!("{name}.json"));
        if path.exists() {
            let s = std::fs::read_to_string(&path).map_err(|e| Error::Io(e.to_string()))?;
            return Presentation::from_json(&s);
        }
    }
    Err(Error::UnknownEntry(name.to_string()))
}

pub fn hopf(name: &str) -> Result<HopfPresentation> {
    presentation(name)?.hopf()
}

pub fn algebra(name: &str) -> Result<Algebra> {
    presentation(name)?.algebra()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    Presented,
    Struct,
    Graded,
    Coaction,
    Extension,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: EntryKind,
    pub params: String,
    pub description: String,
}

fn entry(name: &str, kind: EntryKind, params: &str, description: &str) -> CatalogEntry {
    CatalogEntry {
        name: name.into(),
        kind,
        params: params.into(),
        description: description.into(),
    }
}

/// Every named object known to the suite runner.
pub fn list() -> Vec<CatalogEntry> {
    use EntryKind::*;
    let mut v = Vec::new();
    for (name, src) in BUILTIN {
        let p = Presentation::from_json(src).expect("built-in presentation parses");
        v.push(entry(name, Presented, &p.ring, &p.description));
    }
    for d in [3, 4, 6] {
        let p = ud_presentation(d).unwrap();
        v.push(entry(&p.name, Presented, &p.ring, &p.description));
    }
    for n in [2, 3] {
        let p = taft_presentation(n).unwrap();
        v.push(entry(&p.name, Presented, &p.ring, &p.description));
    }
    for g in ["Z2", "Z6", "S3"] {
        v.push(entry(&format!("C{g}"), Struct, g, &format!("group algebra of {g}")));
        v.push(entry(&format!("O{g}"), Struct, g, &format!("function algebra of {g}")));
    }
    v.push(entry("quaternions", Graded, "(Z/2)^2", "quaternions over Q with the (Z/2)^2 grading"));
    v.push(entry("M2", Graded, "Z/2", "2x2 matrices graded by diagonals"));
    v.push(entry("M3", Graded, "Z/3", "3x3 matrices graded by diagonals"));
    v.push(entry("qplane-coaction", Coaction, "SLq2", "quantum plane as an SL_q(2)-comodule algebra"));
    v.push(entry("laurent3", Extension, "Z/3", "Laurent polynomials over C[x^3, x^-3]"));
    for n in [2, 3] {
        for s in 0..3 {
            v.push(entry(
                &format!("taft-object-{n}-{s}"),
                Extension,
                &format!("N={n}, s={s}"),
                "Galois object A_s of the Taft algebra",
            ));
        }
    }
    for h in ["taft2", "u4", "u3"] {
        v.push(entry(&format!("generic-{h}"), Extension, h, "generic Galois extension A_H"));
    }
    v
}

/// Presentations found as `<name>.json` under the catalog directory, by name.
pub fn user_entries() -> Result<Vec<CatalogEntry>> {
    let Ok(dir) = std::env::var(CATALOG_DIR_ENV) else { return Ok(Vec::new()) };
    let mut paths: Vec<_> = std::fs::read_dir(&dir)
        .map_err(|e| Error::Io(format!("{dir}: {e}")))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|path| {
            let s = std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?;
            let p = Presentation::from_json(&s)?;
            Ok(entry(&p.name, EntryKind::Presented, &p.ring, &p.description))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_load() {
        for (name, _) in BUILTIN {
            let p = presentation(name).unwrap();
            let a = p.algebra().unwrap();
            assert_eq!(a.name, name);
            if !p.coproduct.is_empty() {
                p.hopf().unwrap();
            }
        }
        for d in [3, 4, 5, 6] {
            hopf(&format!("u{d}")).unwrap();
        }
        hopf("taft2").unwrap();
        hopf("taft3").unwrap();
        assert!(list().len() >= 14);
        assert!(matches!(presentation("nope"), Err(Error::UnknownEntry(_))));
    }

    #[test]
    fn degenerate_q_rejected() {
        let mut p = presentation("Uq").unwrap();
        p.ring = "base=rationals".into();
        p.q = Some("1".into());
        assert_eq!(p.algebra().unwrap_err(), Error::DegenerateQ);
        p.q = Some("-1".into());
        assert_eq!(p.algebra().unwrap_err(), Error::DegenerateQ);
    }

    #[test]
    fn json_round_trip() {
        let p = ud_presentation(4).unwrap();
        assert_eq!(Presentation::from_json(&p.to_json()).unwrap(), p);
    }
}
