//! Text syntax for rings and extensions.
//!
//! ```text
//! ring   := factor ('x' factor)*
//! factor := 'Z/' n | 'GF(' p ['^' k] ')' | 'poly(' ring ',' poly ')'
//!         | 'mvq(' ring ',' rel {',' rel} ')' | 'idealize(' ring ',' gens ')'
//!         | 'sub(' ring ',' gens ')' | 'quot(' ring ',' gens ')' | '(' ring ')'
//! poly   := '[' int {',' int} ']' | expr          (coefficients low-to-high)
//! ext    := 'ext(' ('[' gens ']' | ring) ',' ring ')'
//! ```

use super::construct::{make_idealization, make_poly_quotient_named, make_product, make_zmod, quotient_ring_labeled};
use super::expr::{eval_element, eval_poly, multivariate_from_exprs, Expr, Parser, Tok};
use super::{find_embedding, make_gf, Ring, RingMap};
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::ideal::Ideal;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolySpec {
    Coeffs(Vec<i64>),
    Expr(Expr),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Zmod(u64),
    Gf(u64, u32),
    Product(Vec<RingSpec>),
    Poly(Box<RingSpec>, PolySpec),
    Mvq(Box<RingSpec>, Vec<Expr>),
    Idealize(Box<RingSpec>, Vec<Expr>),
    Sub(Box<RingSpec>, Vec<Expr>),
    Quot(Box<RingSpec>, Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubSpec {
    Gens(Vec<Expr>),
    Ring(RingSpec),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtSpec {
    pub sub: SubSpec,
    pub ambient: RingSpec,
}

fn join(items: &[Expr]) -> String {
    items.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zmod(n) => write!(f, "Z/{n}"),
            RingSpec::Gf(p, 1) => write!(f, "GF({p})"),
            RingSpec::Gf(p, k) => write!(f, "GF({p}^{k})"),
            RingSpec::Product(items) => {
                let parts: Vec<String> = items
                    .iter()
                    .map(|r| match r {
                        RingSpec::Product(_) => format!("({r})"),
                        _ => r.to_string(),
                    })
                    .collect();
                write!(f, "{}", parts.join(" x "))
            }
            RingSpec::Poly(r, PolySpec::Coeffs(c)) => {
                let cs: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                write!(f, "poly({r}, [{}])", cs.join(","))
            }
            RingSpec::Poly(r, PolySpec::Expr(e)) => write!(f, "poly({r}, {e})"),
            RingSpec::Mvq(r, rels) => write!(f, "mvq({r}, {})", join(rels)),
            RingSpec::Idealize(r, g) => write!(f, "idealize({r}, {})", join(g)),
            RingSpec::Sub(r, g) => write!(f, "sub({r}, {})", join(g)),
            RingSpec::Quot(r, g) => write!(f, "quot({r}, {})", join(g)),
        }
    }
}

impl fmt::Display for ExtSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.sub {
            SubSpec::Gens(g) => write!(f, "ext([{}], {})", join(g), self.ambient),
            SubSpec::Ring(r) => write!(f, "ext({r}, {})", self.ambient),
        }
    }
}

impl Parser {
    fn ring(&mut self) -> Result<RingSpec> {
        let mut items = vec![self.factor()?];
        while self.peek() == Some(&Tok::Ident("x".into())) {
            self.next();
            items.push(self.factor()?);
        }
        Ok(if items.len() == 1 { items.pop().unwrap() } else { RingSpec::Product(items) })
    }

    fn gens(&mut self) -> Result<Vec<Expr>> {
        let mut out = vec![self.expr()?];
        while self.eat_sym(',') {
            out.push(self.expr()?);
        }
        Ok(out)
    }

    fn factor(&mut self) -> Result<RingSpec> {
        if self.eat_sym('(') {
            let r = self.ring()?;
            self.expect_sym(')')?;
            return Ok(r);
        }
        let start = self.offset();
        let name = match self.next() {
            Some(Tok::Ident(s)) => s,
            _ => return Err(Error::Parse { pos: start, msg: "expected a ring".into() }),
        };
        match name.as_str() {
            "Z" => {
                self.expect_sym('/')?;
                Ok(RingSpec::Zmod(self.expect_int()?))
            }
            "GF" => {
                self.expect_sym('(')?;
                let p = self.expect_int()?;
                let (p, k) = if self.eat_sym('^') { (p, self.expect_int()?) } else { prime_power(p) };
                self.expect_sym(')')?;
                let k = u32::try_from(k).map_err(|_| Error::Parse { pos: start, msg: "degree too large".into() })?;
                Ok(RingSpec::Gf(p, k))
            }
            "poly" | "mvq" | "idealize" | "sub" | "quot" => {
                self.expect_sym('(')?;
                let base = Box::new(self.ring()?);
                self.expect_sym(',')?;
                let spec = match name.as_str() {
                    "poly" => {
                        if self.eat_sym('[') {
                            let mut cs = Vec::new();
                            loop {
                                let neg = self.eat_sym('-');
                                let v = self.expect_int()? as i64;
                                cs.push(if neg { -v } else { v });
                                if !self.eat_sym(',') {
                                    break;
                                }
                            }
                            self.expect_sym(']')?;
                            RingSpec::Poly(base, PolySpec::Coeffs(cs))
                        } else {
                            RingSpec::Poly(base, PolySpec::Expr(self.expr()?))
                        }
                    }
                    "mvq" => {
                        let mut rels = vec![self.relation()?];
                        while self.eat_sym(',') {
                            rels.push(self.relation()?);
                        }
                        RingSpec::Mvq(base, rels)
                    }
                    "idealize" => RingSpec::Idealize(base, self.gens()?),
                    "sub" => RingSpec::Sub(base, self.gens()?),
                    _ => RingSpec::Quot(base, self.gens()?),
                };
                self.expect_sym(')')?;
                Ok(spec)
            }
            other => Err(Error::Parse { pos: start, msg: format!("unknown ring constructor {other}") }),
        }
    }
}

impl RingSpec {
    pub fn parse(src: &str) -> Result<RingSpec> {
        let mut p = Parser::new(src)?;
        let r = p.ring()?;
        p.finish()?;
        Ok(r)
    }

    pub fn build(&self) -> Result<Ring> {
        let label = self.to_string();
        match self {
            RingSpec::Zmod(n) => make_zmod(usize::try_from(*n).unwrap_or(usize::MAX)),
            RingSpec::Gf(p, k) => make_gf(usize::try_from(*p).unwrap_or(usize::MAX), *k),
            RingSpec::Product(items) => {
                let rings = items.iter().map(|r| r.build()).collect::<Result<Vec<_>>>()?;
                Ok(make_product(&rings)?.0)
            }
            RingSpec::Poly(base, poly) => {
                let b = base.build()?;
                let (coeffs, var) = match poly {
                    PolySpec::Coeffs(cs) => (cs.iter().map(|&c| b.from_int(c)).collect::<Vec<_>>(), "x".to_string()),
                    PolySpec::Expr(e) => {
                        let mut vars = Vec::new();
                        e.vars(&mut vars);
                        vars.retain(|v| b.element_by_name(v).is_none());
                        let var = match vars.as_slice() {
                            [v] => v.clone(),
                            [] => "x".to_string(),
                            _ => return Err(Error::InvalidParameter(format!("{e} has several variables"))),
                        };
                        (eval_poly(&b, e, &var)?, var)
                    }
                };
                Ok(make_poly_quotient_named(&b, &coeffs, &var, Some(label))?.0)
            }
            RingSpec::Mvq(base, rels) => multivariate_from_exprs(&base.build()?, rels, label),
            RingSpec::Idealize(base, gens) => {
                let b = base.build()?;
                let e = eval_ideal(&b, gens)?;
                let (r, _, _) = make_idealization(&b, &e)?;
                r.with_label(label, r.names().to_vec(), r.shape().clone())
            }
            RingSpec::Sub(base, gens) => {
                let b = base.build()?;
                let seeds = gens.iter().map(|g| eval_element(&b, g)).collect::<Result<Vec<_>>>()?;
                let ext = Extension::subring_generated(&b, &seeds)?;
                let r = ext.sub().clone();
                r.with_label(label, r.names().to_vec(), r.shape().clone())
            }
            RingSpec::Quot(base, gens) => {
                let b = base.build()?;
                let i = eval_ideal(&b, gens)?;
                Ok(quotient_ring_labeled(&b, &i, Some(label))?.0)
            }
        }
    }
}

/// Ideal generated by a list of element expressions.
pub fn eval_ideal(r: &Ring, gens: &[Expr]) -> Result<Ideal> {
    let elems = gens.iter().map(|g| eval_element(r, g)).collect::<Result<Vec<_>>>()?;
    Ok(r.ideal_generated(&elems))
}

/// Parses `a, b, ...` and returns the ideal they generate.
pub fn parse_ideal(r: &Ring, src: &str) -> Result<Ideal> {
    eval_ideal(r, &super::expr::parse_expr_list(src)?)
}

impl ExtSpec {
    pub fn parse(src: &str) -> Result<ExtSpec> {
        let mut p = Parser::new(src)?;
        match p.next() {
            Some(Tok::Ident(s)) if s == "ext" => {}
            _ => return Err(Error::Parse { pos: 0, msg: "expected ext(...)".into() }),
        }
        p.expect_sym('(')?;
        let sub = if p.eat_sym('[') {
            let gens = if p.at_sym(']') { Vec::new() } else { p.gens()? };
            p.expect_sym(']')?;
            SubSpec::Gens(gens)
        } else {
            SubSpec::Ring(p.ring()?)
        };
        p.expect_sym(',')?;
        let ambient = p.ring()?;
        p.expect_sym(')')?;
        p.finish()?;
        Ok(ExtSpec { sub, ambient })
    }

    /// Builds the extension. A ring given as the first argument is embedded
    /// by the first injective homomorphism the search finds.
    pub fn build(&self) -> Result<Extension> {
        let s = self.ambient.build()?;
        match &self.sub {
            SubSpec::Gens(g) => {
                let seeds = g.iter().map(|e| eval_element(&s, e)).collect::<Result<Vec<_>>>()?;
                Extension::subring_generated(&s, &seeds)
            }
            SubSpec::Ring(rs) => {
                let r = rs.build()?;
                let map: RingMap = find_embedding(&r, &s)
                    .ok_or_else(|| Error::InvalidParameter(format!("{} does not embed in {}", r.label(), s.label())))?;
                Extension::new(map)
            }
        }
    }
}

/// `GF(q)` shorthand: splits q = p^k when q is a prime power.
fn prime_power(q: u64) -> (u64, u64) {
    let Some(p) = (2..=q).find(|d| q.is_multiple_of(*d)) else { return (q, 1) };
    let (mut m, mut k) = (q, 0);
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    if m == 1 {
        (p, k)
    } else {
        (q, 1)
    }
}
