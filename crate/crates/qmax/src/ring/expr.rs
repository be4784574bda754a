//! Element expressions: integers, named generators, `#k` raw indices,
//! `+ - * ^`, and tuples for products and idealizations.

use super::construct::{make_poly_quotient_named, quotient_ring_labeled};
use super::{Ring, Shape, TableRing};
use crate::error::{Error, Result};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Var(String),
    Index(usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    Tuple(Vec<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

impl Expr {
    // prec is the binding strength the context demands: 0 sum, 1 product,
    // 2 unary, 3 power, 4 power base
    fn write(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        let open = match self {
            Expr::Add(..) | Expr::Sub(..) => prec > 0,
            Expr::Mul(..) => prec > 1,
            Expr::Neg(_) => prec > 2,
            Expr::Int(v) if *v < 0 => prec > 2,
            Expr::Pow(..) => prec > 3,
            _ => false,
        };
        if open {
            write!(f, "(")?;
        }
        match self {
            Expr::Int(v) => write!(f, "{v}")?,
            Expr::Var(s) => write!(f, "{s}")?,
            Expr::Index(k) => write!(f, "#{k}")?,
            Expr::Add(a, b) => {
                a.write(f, 0)?;
                write!(f, "+")?;
                b.write(f, 1)?;
            }
            Expr::Sub(a, b) => {
                a.write(f, 0)?;
                write!(f, "-")?;
                b.write(f, 1)?;
            }
            Expr::Mul(a, b) => {
                a.write(f, 1)?;
                write!(f, "*")?;
                b.write(f, 2)?;
            }
            Expr::Neg(a) => {
                write!(f, "-")?;
                a.write(f, 2)?;
            }
            Expr::Pow(a, k) => {
                a.write(f, 4)?;
                write!(f, "^{k}")?;
            }
            Expr::Tuple(items) => {
                write!(f, "(")?;
                for (i, e) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    e.write(f, 0)?;
                }
                write!(f, ")")?;
            }
        }
        if open {
            write!(f, ")")?;
        }
        Ok(())
    }

    pub fn vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Var(s) => {
                if !out.contains(s) {
                    out.push(s.clone());
                }
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.vars(out);
                b.vars(out);
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.vars(out),
            Expr::Tuple(items) => items.iter().for_each(|e| e.vars(out)),
            Expr::Int(_) | Expr::Index(_) => {}
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(u64),
    Ident(String),
    Sym(char),
}

pub(crate) struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    pub(crate) fn new(src: &str) -> Result<Parser> {
        let mut toks = Vec::new();
        let bytes = src.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v = src[start..i].parse().map_err(|_| Error::Parse { pos: start, msg: "integer too large".into() })?;
                toks.push((Tok::Int(v), start));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push((Tok::Ident(src[start..i].to_string()), start));
            } else if "+-*^(),[]#=/".contains(c) {
                toks.push((Tok::Sym(c), i));
                i += 1;
            } else {
                return Err(Error::Parse { pos: i, msg: format!("unexpected character {c:?}") });
            }
        }
        Ok(Parser { toks, pos: 0, end: src.len() })
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    pub(crate) fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(_, p)| p)
    }

    pub(crate) fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.offset(), msg: msg.into() })
    }

    pub(crate) fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    pub(crate) fn at_sym(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Sym(c))
    }

    pub(crate) fn eat_sym(&mut self, c: char) -> bool {
        if self.at_sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    pub(crate) fn expect_int(&mut self) -> Result<u64> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("expected an integer"),
        }
    }

    pub(crate) fn done(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub(crate) fn finish(&self) -> Result<()> {
        if self.done() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }

    /// `lhs = rhs` becomes `lhs - rhs`; a bare expression stands for `= 0`.
    pub(crate) fn relation(&mut self) -> Result<Expr> {
        let lhs = self.expr()?;
        if self.eat_sym('=') {
            let rhs = self.expr()?;
            if rhs == Expr::Int(0) {
                return Ok(lhs);
            }
            return Ok(Expr::Sub(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    pub(crate) fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat_sym('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat_sym('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            if self.eat_sym('*') {
                acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
            } else if matches!(self.peek(), Some(Tok::Ident(_))) {
                // juxtaposition such as 2x
                acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_sym('-') {
            return Ok(match self.unary()? {
                Expr::Int(v) => Expr::Int(-v),
                e => Expr::Neg(Box::new(e)),
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat_sym('^') {
            let k = self.expect_int()?;
            let k = u32::try_from(k).or_else(|_| self.err("exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Tok::Int(v)) => Ok(Expr::Int(i64::try_from(v).or_else(|_| {
                self.pos -= 1;
                self.err("integer too large")
            })?)),
            Some(Tok::Ident(s)) => Ok(Expr::Var(s)),
            Some(Tok::Sym('#')) => Ok(Expr::Index(self.expect_int()? as usize)),
            Some(Tok::Sym('(')) => {
                let first = self.expr()?;
                if self.eat_sym(')') {
                    return Ok(first);
                }
                let mut items = vec![first];
                while self.eat_sym(',') {
                    items.push(self.expr()?);
                }
                self.expect_sym(')')?;
                Ok(Expr::Tuple(items))
            }
            _ => {
                self.pos = self.pos.saturating_sub(1);
                self.err("expected an element expression")
            }
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr> {
    let mut p = Parser::new(src)?;
    let e = p.relation()?;
    p.finish()?;
    Ok(e)
}

/// Comma-separated element expressions (top-level commas only).
pub fn parse_expr_list(src: &str) -> Result<Vec<Expr>> {
    let mut p = Parser::new(src)?;
    let mut out = Vec::new();
    if p.done() {
        return Ok(out);
    }
    out.push(p.expr()?);
    while p.eat_sym(',') {
        out.push(p.expr()?);
    }
    p.finish()?;
    Ok(out)
}

fn unknown(name: &str, r: &TableRing) -> Error {
    Error::InvalidParameter(format!("{name} names no element of {}", r.label()))
}

pub fn eval_element(r: &TableRing, e: &Expr) -> Result<usize> {
    Ok(match e {
        Expr::Int(v) => r.from_int(*v),
        Expr::Var(s) => r.element_by_name(s).ok_or_else(|| unknown(s, r))?,
        Expr::Index(k) => r.element(*k)?.index,
        Expr::Add(a, b) => r.add(eval_element(r, a)?, eval_element(r, b)?),
        Expr::Sub(a, b) => r.sub(eval_element(r, a)?, eval_element(r, b)?),
        Expr::Mul(a, b) => r.mul(eval_element(r, a)?, eval_element(r, b)?),
        Expr::Neg(a) => r.neg(eval_element(r, a)?),
        Expr::Pow(a, k) => r.pow(eval_element(r, a)?, *k as u64),
        Expr::Tuple(items) => match r.shape() {
            Shape::Product(factors) if factors.len() == items.len() => {
                let mut idx = 0;
                for (f, item) in factors.iter().zip(items) {
                    idx = idx * f.size() + eval_element(f, item)?;
                }
                idx
            }
            Shape::Idealization { base, module, module_pos } if items.len() == 2 => {
                let a = eval_element(base, &items[0])?;
                let e = eval_element(base, &items[1])?;
                let k = module_pos[e].ok_or_else(|| {
                    Error::InvalidParameter(format!("{e} is not in the idealization module"))
                })?;
                a * module.len() + k
            }
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "tuple of length {} does not match the shape of {}",
                    items.len(),
                    r.label()
                )))
            }
        },
    })
}

/// Polynomials over a ring, coefficients low-to-high with no trailing zeros
/// (the zero polynomial is empty).
struct PolyOps<'a> {
    r: &'a TableRing,
}

impl PolyOps<'_> {
    fn trim(&self, mut p: Vec<usize>) -> Vec<usize> {
        while p.last() == Some(&self.r.zero()) {
            p.pop();
        }
        p
    }

    fn constant(&self, c: usize) -> Vec<usize> {
        self.trim(vec![c])
    }

    fn add(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let n = a.len().max(b.len());
        let z = self.r.zero();
        let v = (0..n).map(|i| self.r.add(*a.get(i).unwrap_or(&z), *b.get(i).unwrap_or(&z))).collect();
        self.trim(v)
    }

    fn neg(&self, a: &[usize]) -> Vec<usize> {
        a.iter().map(|&c| self.r.neg(c)).collect()
    }

    fn mul(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut v = vec![self.r.zero(); a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                v[i + j] = self.r.add(v[i + j], self.r.mul(x, y));
            }
        }
        self.trim(v)
    }

    fn eval(&self, e: &Expr, var: &str) -> Result<Vec<usize>> {
        Ok(match e {
            Expr::Var(s) if s == var => self.trim(vec![self.r.zero(), self.r.one()]),
            Expr::Add(a, b) => self.add(&self.eval(a, var)?, &self.eval(b, var)?),
            Expr::Sub(a, b) => self.add(&self.eval(a, var)?, &self.neg(&self.eval(b, var)?)),
            Expr::Mul(a, b) => self.mul(&self.eval(a, var)?, &self.eval(b, var)?),
            Expr::Neg(a) => self.neg(&self.eval(a, var)?),
            Expr::Pow(a, k) => {
                let base = self.eval(a, var)?;
                let mut acc = self.constant(self.r.one());
                for _ in 0..*k {
                    acc = self.mul(&acc, &base);
                }
                acc
            }
            other => self.constant(eval_element(self.r, other)?),
        })
    }
}

/// Coefficients (low-to-high) of a polynomial expression in `var`.
pub fn eval_poly(base: &TableRing, e: &Expr, var: &str) -> Result<Vec<usize>> {
    PolyOps { r: base }.eval(e, var)
}

/// Scales a polynomial with unit leading coefficient to a monic one.
pub(crate) fn make_monic(base: &TableRing, p: &[usize]) -> Option<Vec<usize>> {
    let lead = *p.last()?;
    let inv = (0..base.size()).find(|&b| base.mul(lead, b) == base.one())?;
    Some(p.iter().map(|&c| base.mul(c, inv)).collect())
}

pub(crate) fn multivariate_quotient(base: &Ring, relations: &[&str], label: Option<String>) -> Result<Ring> {
    let exprs = relations.iter().map(|s| parse_expr(s)).collect::<Result<Vec<_>>>()?;
    let label = label.unwrap_or_else(|| {
        let rels: Vec<String> = exprs.iter().map(|e| e.to_string()).collect();
        format!("mvq({}, {})", base.label(), rels.join(", "))
    });
    multivariate_from_exprs(base, &exprs, label)
}

pub(crate) fn multivariate_from_exprs(base: &Ring, exprs: &[Expr], label: String) -> Result<Ring> {
    let mut vars = Vec::new();
    for e in exprs {
        e.vars(&mut vars);
    }
    vars.retain(|v| base.element_by_name(v).is_none());
    vars.sort();
    if vars.is_empty() {
        return Err(Error::InvalidParameter("relations mention no variable".into()));
    }
    let mut ring = base.clone();
    let mut embed: Vec<usize> = (0..base.size()).collect();
    for v in &vars {
        let monic = exprs
            .iter()
            .filter(|e| {
                let mut vs = Vec::new();
                e.vars(&mut vs);
                vs.iter().all(|s| s == v || base.element_by_name(s).is_some())
            })
            .filter_map(|e| eval_poly(base, e, v).ok())
            .filter(|p| p.len() >= 2)
            .find_map(|p| make_monic(base, &p))
            .ok_or_else(|| {
                Error::ResourceLimit(format!("no monic relation in {v} alone; the quotient is not finite"))
            })?;
        let coeffs: Vec<usize> = monic.iter().map(|&c| embed[c]).collect();
        let (next, incl) = make_poly_quotient_named(&ring, &coeffs, v, None)?;
        embed = embed.iter().map(|&c| incl.apply(c)).collect();
        ring = next;
    }
    let gens = exprs.iter().map(|e| eval_element(&ring, e)).collect::<Result<Vec<_>>>()?;
    let ideal = ring.ideal_generated(&gens);
    Ok(quotient_ring_labeled(&ring, &ideal, Some(label))?.0)
}
