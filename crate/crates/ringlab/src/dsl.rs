//! Textual ring-construction expressions.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr    := factor ('x' factor)*
//! factor  := primary quot?
//! primary := 'Z' '(' int ')' | 'Id' '(' expr ',' int ')'
//! quot    := '[' ident (',' ident)* ']' '/' '(' rel (',' rel)* ')'
//! rel     := ['-'] term (('+'|'-') term)*
//! term    := atom ('*' atom)*        atom := int | ident ('^' int)?
//! ```
//!
//! `x` is reserved as the product separator, so variable names never
//! contain it. Quotient relations carry integer coefficients and are
//! canonicalized (coefficients reduced mod n, terms merged and sorted)
//! at parse time, so `parse(render(s)) == s` structurally.

use crate::error::{Error, Result};
use std::fmt;

/// Abstract syntax of a ring construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    /// Z(n), the integers mod n, n >= 2.
    Modular(u64),
    /// Direct product, arity >= 2.
    Product(Vec<RingSpec>),
    /// base[vars]/(relations); base restricted to Modular.
    PolyQuotient {
        base: Box<RingSpec>,
        vars: Vec<String>,
        relations: Vec<RelPoly>,
    },
    /// Idealization of the cyclic module base/(m) over base.
    Idealization { base: Box<RingSpec>, modulus: u64 },
}

/// One term of a quotient relation: coefficient times a monomial in the
/// quotient variables. Exponents are indexed by variable position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelTerm {
    pub coeff: u64,
    pub exps: Vec<u32>,
}

/// An integer-coefficient polynomial relation, canonicalized: zero terms
/// dropped, exponent vectors distinct, terms sorted graded-lex descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelPoly {
    pub terms: Vec<RelTerm>,
}

impl RelPoly {
    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| t.exps.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    fn canonicalize(mut terms: Vec<(i64, Vec<u32>)>, modulus: u64) -> RelPoly {
        terms.sort_by(|a, b| mon_cmp(&b.1, &a.1));
        let mut out: Vec<RelTerm> = Vec::new();
        for (c, e) in terms {
            if let Some(last) = out.last_mut() {
                if last.exps == e {
                    let c2 = (last.coeff as i64 + c).rem_euclid(modulus as i64) as u64;
                    last.coeff = c2;
                    continue;
                }
            }
            out.push(RelTerm {
                coeff: c.rem_euclid(modulus as i64) as u64,
                exps: e,
            });
        }
        out.retain(|t| t.coeff != 0);
        RelPoly { terms: out }
    }
}

/// Graded-lexicographic monomial comparison (total degree, then exponents).
pub fn mon_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl RingSpec {
    /// Arity of the top-level product (1 for non-products).
    pub fn product_arity(&self) -> usize {
        match self {
            RingSpec::Product(fs) => fs.len(),
            _ => 1,
        }
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&mut self, expected: &str) -> Error {
        self.skip_ws();
        let found = match self.src.get(self.pos) {
            Some(&c) => (c as char).to_string(),
            None => "end of input".to_string(),
        };
        Error::Syntax {
            pos: self.pos,
            expected: expected.to_string(),
            found,
        }
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("'{}'", c as char)))
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| self.err("integer in range"))
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            let ok_head = c.is_ascii_lowercase() && c != b'x';
            let ok_tail = ok_head || (self.pos > start && c.is_ascii_digit());
            if ok_tail {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.err("variable name (lowercase, 'x' excluded)"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .to_string())
    }

    fn expr(&mut self) -> Result<RingSpec> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(b'x') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        if factors.len() == 1 {
            Ok(factors.pop().unwrap())
        } else {
            Ok(RingSpec::Product(factors))
        }
    }

    fn factor(&mut self) -> Result<RingSpec> {
        let base = self.primary()?;
        if self.peek() == Some(b'[') {
            let modulus = match base {
                RingSpec::Modular(n) => n,
                _ => {
                    return Err(Error::Semantic(
                        "polynomial quotients are only supported over Z(n)".into(),
                    ))
                }
            };
            self.eat(b'[')?;
            let mut vars = vec![self.ident()?];
            while self.peek() == Some(b',') {
                self.pos += 1;
                vars.push(self.ident()?);
            }
            self.eat(b']')?;
            self.eat(b'/')?;
            self.eat(b'(')?;
            let mut relations = vec![self.relation(&vars, modulus)?];
            while self.peek() == Some(b',') {
                self.pos += 1;
                relations.push(self.relation(&vars, modulus)?);
            }
            self.eat(b')')?;
            if self.peek() == Some(b'[') {
                return Err(Error::Semantic(
                    "nested polynomial quotients are not supported".into(),
                ));
            }
            for (i, v) in vars.iter().enumerate() {
                if vars[..i].contains(v) {
                    return Err(Error::Semantic(format!("duplicate variable {v:?}")));
                }
            }
            if relations.iter().all(|r| r.terms.is_empty()) {
                return Err(Error::Semantic("every relation is zero".into()));
            }
            Ok(RingSpec::PolyQuotient {
                base: Box::new(base),
                vars,
                relations,
            })
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<RingSpec> {
        self.skip_ws();
        if self.eat_keyword("Id") {
            self.eat(b'(')?;
            let base = self.expr()?;
            self.eat(b',')?;
            let m = self.int()?;
            self.eat(b')')?;
            if m == 0 {
                return Err(Error::Semantic("idealization modulus must be >= 1".into()));
            }
            Ok(RingSpec::Idealization {
                base: Box::new(base),
                modulus: m,
            })
        } else if self.eat_keyword("Z") {
            self.eat(b'(')?;
            let n = self.int()?;
            self.eat(b')')?;
            if n < 2 {
                return Err(Error::Semantic(format!("Z({n}): modulus must be >= 2")));
            }
            Ok(RingSpec::Modular(n))
        } else {
            Err(self.err("'Z(' or 'Id('"))
        }
    }

    fn relation(&mut self, vars: &[String], modulus: u64) -> Result<RelPoly> {
        let mut terms: Vec<(i64, Vec<u32>)> = Vec::new();
        let mut sign: i64 = 1;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -1;
        }
        loop {
            let (c, e) = self.rel_term(vars)?;
            terms.push((sign * c, e));
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => break,
            }
        }
        Ok(RelPoly::canonicalize(terms, modulus))
    }

    fn rel_term(&mut self, vars: &[String]) -> Result<(i64, Vec<u32>)> {
        let mut coeff: i64 = 1;
        let mut exps = vec![0u32; vars.len()];
        let mut any = false;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff = coeff.saturating_mul(self.int()? as i64);
                    any = true;
                }
                Some(c) if c.is_ascii_lowercase() && c != b'x' => {
                    let name = self.ident()?;
                    let idx = vars
                        .iter()
                        .position(|v| *v == name)
                        .ok_or_else(|| Error::Semantic(format!("unknown variable {name:?}")))?;
                    let e = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.int()? as u32
                    } else {
                        1
                    };
                    exps[idx] += e;
                    any = true;
                }
                _ => {
                    if !any {
                        return Err(self.err("relation term"));
                    }
                    break;
                }
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((coeff, exps))
    }
}

/// Parse a ring-construction expression into its AST.
pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    let mut p = Parser::new(text);
    let spec = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("end of input"));
    }
    Ok(spec)
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

fn render_rel(rel: &RelPoly, vars: &[String], out: &mut String) {
    if rel.terms.is_empty() {
        out.push('0');
        return;
    }
    for (i, t) in rel.terms.iter().enumerate() {
        if i > 0 {
            out.push('+');
        }
        let mut parts: Vec<String> = Vec::new();
        if t.coeff != 1 || t.exps.iter().all(|&e| e == 0) {
            parts.push(t.coeff.to_string());
        }
        for (vi, &e) in t.exps.iter().enumerate() {
            if e == 1 {
                parts.push(vars[vi].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", vars[vi], e));
            }
        }
        out.push_str(&parts.join("*"));
    }
}

fn render_into(spec: &RingSpec, out: &mut String) {
    match spec {
        RingSpec::Modular(n) => {
            out.push_str(&format!("Z({n})"));
        }
        RingSpec::Product(fs) => {
            for (i, f) in fs.iter().enumerate() {
                if i > 0 {
                    out.push('x');
                }
                render_into(f, out);
            }
        }
        RingSpec::PolyQuotient {
            base,
            vars,
            relations,
        } => {
            render_into(base, out);
            out.push('[');
            out.push_str(&vars.join(","));
            out.push_str("]/(");
            for (i, r) in relations.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                render_rel(r, vars, out);
            }
            out.push(')');
        }
        RingSpec::Idealization { base, modulus } => {
            out.push_str("Id(");
            render_into(base, out);
            out.push_str(&format!(",{modulus})"));
        }
    }
}

/// Canonical text for a ring spec; `parse_ring_spec(render_ring_spec(s)) == s`.
pub fn render_ring_spec(spec: &RingSpec) -> String {
    let mut s = String::new();
    render_into(spec, &mut s);
    s
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_ring_spec(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_modular() {
        assert_eq!(parse_ring_spec("Z(4)").unwrap(), RingSpec::Modular(4));
        assert_eq!(parse_ring_spec(" Z( 12 ) ").unwrap(), RingSpec::Modular(12));
    }

    #[test]
    fn parses_product() {
        assert_eq!(
            parse_ring_spec("Z(2)xZ(3)").unwrap(),
            RingSpec::Product(vec![RingSpec::Modular(2), RingSpec::Modular(3)])
        );
        assert_eq!(
            parse_ring_spec("Z(2)xZ(2)xZ(2)").unwrap().product_arity(),
            3
        );
    }

    #[test]
    fn parses_quotient() {
        let s = parse_ring_spec("Z(2)[s,t]/(s^2,s*t,t^2)").unwrap();
        match &s {
            RingSpec::PolyQuotient {
                base,
                vars,
                relations,
            } => {
                assert_eq!(**base, RingSpec::Modular(2));
                assert_eq!(vars, &["s".to_string(), "t".to_string()]);
                assert_eq!(relations.len(), 3);
                assert_eq!(
                    relations[0].terms,
                    vec![RelTerm {
                        coeff: 1,
                        exps: vec![2, 0]
                    }]
                );
            }
            _ => panic!("wrong variant"),
        }
    }

    #[test]
    fn rejects_small_modulus() {
        assert!(matches!(
            parse_ring_spec("Z(1)"),
            Err(Error::Semantic(_))
        ));
        assert!(matches!(parse_ring_spec("Z(0)"), Err(Error::Semantic(_))));
    }

    #[test]
    fn rejects_unbalanced_parens() {
        assert!(parse_ring_spec("Z(4").is_err());
        assert!(parse_ring_spec("Z(2)[s]/(s^2").is_err());
        assert!(parse_ring_spec("Id(Z(4),2").is_err());
    }

    #[test]
    fn rejects_trailing_garbage() {
        assert!(parse_ring_spec("Z(4))").is_err());
        assert!(parse_ring_spec("Z(4)y").is_err());
    }

    #[test]
    fn rejects_nested_quotients() {
        assert!(parse_ring_spec("Z(2)[s]/(s^2)[t]/(t^2)").is_err());
    }

    #[test]
    fn render_round_trip_corpus() {
        for text in [
            "Z(4)",
            "Z(2)xZ(3)",
            "Z(2)[s,t]/(s^2,s*t,t^2)",
            "Z(4)[t]/(t^2,2*t)",
            "Z(2)[u]/(u^2+u+1)",
            "Id(Z(4),2)",
            "Id(Z(2)xZ(4),2)",
            "Z(2)xZ(2)xZ(2)",
        ] {
            let s = parse_ring_spec(text).unwrap();
            let rendered = render_ring_spec(&s);
            assert_eq!(rendered, text, "canonical text unstable for {text}");
            assert_eq!(parse_ring_spec(&rendered).unwrap(), s);
        }
    }

    #[test]
    fn canonicalizes_relation_coefficients() {
        // -u parses to 3u over Z(4); 5*t to t.
        let a = parse_ring_spec("Z(4)[u]/(u^2-u)").unwrap();
        let b = parse_ring_spec("Z(4)[u]/(u^2+3*u)").unwrap();
        assert_eq!(a, b);
        let c = parse_ring_spec("Z(4)[t]/(t^2,5*t)").unwrap();
        let d = parse_ring_spec("Z(4)[t]/(t^2,t)").unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn whitespace_insensitive() {
        let a = parse_ring_spec("Z(2) [ s , t ] / ( s^2 , s * t , t ^ 2 )").unwrap();
        let b = parse_ring_spec("Z(2)[s,t]/(s^2,s*t,t^2)").unwrap();
        assert_eq!(a, b);
    }
}
