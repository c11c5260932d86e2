use super::{Alphabet, NcPoly, Rule, Word};
use crate::error::{Error, Result};
use crate::scalar::{Coef, Rat, Scalar};
use std::sync::Arc;

/// Names the parser may resolve: generators of the alphabet plus named scalars
/// such as `q` or parameter symbols.
pub struct ParseEnv<C> {
    pub alpha: Arc<Alphabet>,
    pub scalars: Vec<(String, C)>,
}

impl<C: Scalar> ParseEnv<C> {
    pub fn new(alpha: &Arc<Alphabet>) -> Self {
        ParseEnv {
            alpha: alpha.clone(),
            scalars: Vec::new(),
        }
    }

    pub fn with_scalar(mut self, name: &str, value: C) -> Self {
        self.scalars.push((name.to_string(), value));
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let n: String = cs[st..i].iter().collect();
            out.push(Tok::Num(n.parse().map_err(|_| Error::Parse(format!("number `{n}`")))?));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()=".contains(c) {
            if c == '-' && cs.get(i + 1) == Some(&'>') {
                out.push(Tok::Op('>'));
                i += 2;
            } else {
                out.push(Tok::Op(c));
                i += 1;
            }
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}` in `{s}`")));
        }
    }
    Ok(out)
}

struct Parser<'a, C> {
    env: &'a ParseEnv<C>,
    toks: Vec<Tok>,
    pos: usize,
    src: &'a str,
}

impl<'a, C: Scalar> Parser<'a, C> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at token {} in `{}`", self.pos, self.src))
    }

    fn expr(&mut self) -> Result<NcPoly<C>> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc.plus(&t) } else { acc.minus(&t) };
        }
        Ok(acc)
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')))
    }

    fn term(&mut self) -> Result<NcPoly<C>> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    let r = self.unary()?;
                    acc = acc.mul_free(&r);
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let r = self.unary()?;
                    let s = r
                        .as_scalar()
                        .ok_or_else(|| self.err("division by a non-scalar"))?;
                    let inv = s.try_inv().ok_or_else(|| self.err("division by a non-unit"))?;
                    acc = acc.scale(&inv);
                }
                _ if self.starts_atom() => {
                    let r = self.power()?;
                    acc = acc.mul_free(&r);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<NcPoly<C>> {
        if let Some(Tok::Op('-')) = self.peek() {
            self.pos += 1;
            return Ok(self.unary()?.negated());
        }
        if let Some(Tok::Op('+')) = self.peek() {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<i64> {
        let mut sign = 1;
        let mut paren = false;
        if let Some(Tok::Op('(')) = self.peek() {
            paren = true;
            self.pos += 1;
        }
        if let Some(Tok::Op('-')) = self.peek() {
            sign = -1;
            self.pos += 1;
        }
        let n = match self.peek() {
            Some(Tok::Num(n)) => *n as i64,
            _ => return Err(self.err("expected integer exponent")),
        };
        self.pos += 1;
        if paren {
            if self.peek() != Some(&Tok::Op(')')) {
                return Err(self.err("expected `)`"));
            }
            self.pos += 1;
        }
        Ok(sign * n)
    }

    fn power(&mut self) -> Result<NcPoly<C>> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let e = self.exponent()?;
            return self.raise(base, e);
        }
        Ok(base)
    }

    fn raise(&self, base: NcPoly<C>, e: i64) -> Result<NcPoly<C>> {
        let b = if e >= 0 { base } else { self.invert(&base)? };
        let mut acc = NcPoly::one(&self.env.alpha);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul_free(&b);
        }
        Ok(acc)
    }

    fn invert(&self, p: &NcPoly<C>) -> Result<NcPoly<C>> {
        if let Some(s) = p.as_scalar() {
            let i = s.try_inv().ok_or_else(|| self.err("negative power of a non-unit"))?;
            return Ok(NcPoly::constant(&self.env.alpha, i));
        }
        if p.len() == 1 {
            let (w, c) = p.terms().iter().next().unwrap();
            let ci = c.try_inv().ok_or_else(|| self.err("negative power of a non-unit"))?;
            let mut inv = Word::new();
            for &g in w.iter().rev() {
                inv.push(
                    self.env
                        .alpha
                        .inverse(g)
                        .ok_or_else(|| self.err("negative power of a generator without inverse"))?,
                );
            }
            return Ok(NcPoly::term(&self.env.alpha, inv, ci));
        }
        Err(self.err("negative power of a sum"))
    }

    fn atom(&mut self) -> Result<NcPoly<C>> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let r = Rat::from(num_bigint::BigInt::from(n));
                Ok(NcPoly::constant(&self.env.alpha, C::from_coef(Coef::Rat(r))))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Ident(id)) => {
                self.pos += 1;
                self.identifier(&id)
            }
            _ => Err(self.err("expected a term")),
        }
    }

    /// Greedy split of an identifier into generator and scalar names.
    fn identifier(&self, id: &str) -> Result<NcPoly<C>> {
        let alpha = &self.env.alpha;
        let mut acc = NcPoly::one(alpha);
        let mut rest = id;
        while !rest.is_empty() {
            let mut best: Option<(usize, NcPoly<C>)> = None;
            for (i, n) in alpha.names().iter().enumerate() {
                if rest.starts_with(n.as_str()) && best.as_ref().is_none_or(|b| n.len() > b.0) {
                    best = Some((n.len(), NcPoly::word(alpha, &[i as u8])));
                }
            }
            for (n, v) in &self.env.scalars {
                if rest.starts_with(n.as_str()) && best.as_ref().is_none_or(|b| n.len() > b.0) {
                    best = Some((n.len(), NcPoly::constant(alpha, v.clone())));
                }
            }
            let (len, p) = best.ok_or_else(|| Error::UnknownGenerator(rest.to_string()))?;
            acc = acc.mul_free(&p);
            rest = &rest[len..];
        }
        Ok(acc)
    }
}

/// Parse an expression into the free algebra (no reduction).
pub fn parse_expr<C: Scalar>(env: &ParseEnv<C>, s: &str) -> Result<NcPoly<C>> {
    let toks = tokenize(s)?;
    let mut p = Parser { env, toks, pos: 0, src: s };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Parse `lhs -> rhs` (explicit orientation), `a = b`, or a bare expression
/// (meaning `expr = 0`), orienting the latter two by their leading word.
pub fn parse_relation(env: &ParseEnv<Coef>, s: &str) -> Result<Rule> {
    if let Some((l, r)) = s.split_once("->") {
        let lhs = parse_expr(env, l)?;
        let rhs = parse_expr(env, r)?;
        if lhs.len() != 1 {
            return Err(Error::Parse(format!("rule lhs must be a single word: `{l}`")));
        }
        let (w, c) = lhs.terms().iter().next().unwrap();
        let ci = c.inv().ok_or_else(|| Error::Parse("zero lhs".into()))?;
        return Ok(Rule { lhs: w.clone(), rhs: rhs.scale(&ci) });
    }
    let expr = match s.split_once('=') {
        Some((l, r)) => parse_expr(env, l)?.minus(&parse_expr(env, r)?),
        None => parse_expr(env, s)?,
    };
    orient(&expr)
}

/// Turn `expr = 0` into a rule whose lhs is the leading word.
pub fn orient(expr: &NcPoly<Coef>) -> Result<Rule> {
    let (w, c) = expr
        .leading()
        .ok_or_else(|| Error::Parse("trivial relation 0 = 0".into()))?;
    let w = w.clone();
    let ci = c.inv().unwrap();
    let rest = expr.minus(&NcPoly::term(expr.alphabet(), w.clone(), c.clone()));
    Ok(Rule { lhs: w, rhs: rest.scale(&ci.negated()) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env() -> ParseEnv<Coef> {
        let a = Alphabet::new(&["E", "F", "K", "Kinv"]).unwrap();
        ParseEnv::new(&a).with_scalar("q", Coef::q_formal())
    }

    #[test]
    fn greedy_identifier_split() {
        let e = env();
        let p = parse_expr(&e, "KinvE").unwrap();
        let w = e.alpha.word(&["Kinv", "E"]).unwrap();
        assert_eq!(p.coeff(&w), Coef::one());
        let p = parse_expr(&e, "qEF").unwrap();
        assert_eq!(p.coeff(&e.alpha.word(&["E", "F"]).unwrap()), Coef::q_formal());
    }

    #[test]
    fn scalar_arithmetic() {
        let e = env();
        let p = parse_expr(&e, "(q - q^-1)^-1 * (K - Kinv)").unwrap();
        let q = Coef::q_formal();
        let c = (&q - &q.inv().unwrap()).inv().unwrap();
        assert_eq!(p.coeff(&e.alpha.word(&["K"]).unwrap()), c);
        assert_eq!(p.coeff(&e.alpha.word(&["Kinv"]).unwrap()), -&c);
        let p = parse_expr(&e, "K^-2").unwrap();
        assert_eq!(p.coeff(&e.alpha.word(&["Kinv", "Kinv"]).unwrap()), Coef::one());
        let p = parse_expr(&e, "3/2*E - -E").unwrap();
        assert_eq!(p.coeff(&e.alpha.word(&["E"]).unwrap()), Coef::rat(5, 2));
    }

    #[test]
    fn relation_orientation() {
        let e = env();
        let r = parse_relation(&e, "KE = q^2 EK").unwrap();
        assert_eq!(r.lhs, e.alpha.word(&["K", "E"]).unwrap());
        let r2 = parse_relation(&e, "KE -> q^2 EK").unwrap();
        assert_eq!(r.rhs, r2.rhs);
        assert!(parse_expr(&e, "E + ").is_err());
        assert!(matches!(parse_expr(&e, "Z"), Err(Error::UnknownGenerator(_))));
    }
}
