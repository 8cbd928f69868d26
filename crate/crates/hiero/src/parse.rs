//! The ideal-file input language.
//!
//! ```text
//! file         = ring_decl order_decl [grading_decl] gens_decl
//! ring_decl    = "ring" var_item+ ";"
//! var_item     = IDENT ["@" INT "," INT "," INT]
//! order_decl   = "order" ("lex" | "grevlex") IDENT ("," IDENT)* ";"
//! grading_decl = "grading" INT ":" (IDENT "=" "[" INT ("," INT)* "]")+ ";"
//! gens_decl    = "gens" poly ("," poly)* ";"
//! poly         = ["+"|"-"] term (("+"|"-") term)*
//! term         = [RATIONAL "*"] IDENT ["^" INT] ("*" IDENT ["^" INT])*
//! RATIONAL     = INT ["/" INT]
//! ```
//!
//! Whitespace-insensitive; "#" starts a line comment. The order declaration
//! must list every declared variable. Grading defaults to standard.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::groebner::Ideal;
use crate::ring::{
    Coeff, Grading, GradingError, GridCell, Monomial, OrderKind, Polynomial, Ring, Term, TermOrder, VarId,
};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at {line}:{col}: {message}")]
    SyntaxError { line: usize, col: usize, message: String },
    #[error("undeclared variable {name} at {line}:{col}")]
    UndeclaredVariable { line: usize, col: usize, name: String },
    #[error("duplicate variable {name} at {line}:{col}")]
    DuplicateVariable { line: usize, col: usize, name: String },
    #[error("grading is not positive: {0}")]
    NonPositiveGrading(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Punct(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
                col += 1;
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let (l0, c0) = (line, col);
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            out.push(Token { tok: Tok::Ident(s), line: l0, col: c0 });
        } else if c.is_ascii_digit() {
            let (l0, c0) = (line, col);
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            out.push(Token { tok: Tok::Int(s.parse().unwrap()), line: l0, col: c0 });
        } else if "@,;:=[]^*/+-".contains(c) {
            out.push(Token { tok: Tok::Punct(c), line, col });
            chars.next();
            col += 1;
        } else {
            return Err(ParseError::SyntaxError {
                line,
                col,
                message: format!("unexpected character {:?}", c),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end_line: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        match self.peek() {
            Some(t) => (t.line, t.col),
            None => (self.end_line, self.end_col),
        }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError::SyntaxError { line, col, message: message.into() }
    }

    fn next(&mut self, expected: &str) -> Result<Token, ParseError> {
        match self.toks.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.clone())
            }
            None => Err(self.err(format!("expected {}, found end of input", expected))),
        }
    }

    fn expect_punct(&mut self, p: char) -> Result<(), ParseError> {
        let t = self.next(&format!("{:?}", p))?;
        match t.tok {
            Tok::Punct(c) if c == p => Ok(()),
            _ => Err(ParseError::SyntaxError {
                line: t.line,
                col: t.col,
                message: format!("expected {:?}", p),
            }),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        let t = self.next(&format!("keyword {:?}", kw))?;
        match &t.tok {
            Tok::Ident(s) if s == kw => Ok(()),
            _ => Err(ParseError::SyntaxError {
                line: t.line,
                col: t.col,
                message: format!("expected keyword {:?}", kw),
            }),
        }
    }

    fn expect_ident(&mut self) -> Result<(String, usize, usize), ParseError> {
        let t = self.next("an identifier")?;
        match t.tok {
            Tok::Ident(s) => Ok((s, t.line, t.col)),
            _ => Err(ParseError::SyntaxError {
                line: t.line,
                col: t.col,
                message: "expected an identifier".into(),
            }),
        }
    }

    fn expect_int(&mut self) -> Result<BigInt, ParseError> {
        let t = self.next("an integer")?;
        match t.tok {
            Tok::Int(n) => Ok(n),
            _ => Err(ParseError::SyntaxError {
                line: t.line,
                col: t.col,
                message: "expected an integer".into(),
            }),
        }
    }

    fn expect_small_int(&mut self, what: &str) -> Result<u32, ParseError> {
        let (line, col) = self.here();
        let n = self.expect_int()?;
        u32::try_from(n).map_err(|_| ParseError::SyntaxError {
            line,
            col,
            message: format!("{} out of range", what),
        })
    }

    fn at_punct(&self, p: char) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Punct(c), .. }) if *c == p)
    }

    fn at_ident(&self) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Ident(_), .. }))
    }

    fn at_int(&self) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Int(_), .. }))
    }
}

/// A parsed ideal file: the consistent (ring, grading, order, ideal) tuple.
#[derive(Debug, Clone)]
pub struct ParsedFile {
    pub ring: Ring,
    pub grading: Grading,
    pub order: TermOrder,
    pub ideal: Ideal,
}

pub fn parse_ideal_file(text: &str) -> Result<ParsedFile, ParseError> {
    let toks = lex(text)?;
    let end_line = text.lines().count().max(1);
    let end_col = text.lines().last().map(|l| l.chars().count() + 1).unwrap_or(1);
    let mut p = Parser { toks, pos: 0, end_line, end_col };

    // ring
    p.expect_keyword("ring")?;
    let mut descr: Vec<(String, u32, Option<GridCell>)> = Vec::new();
    while p.at_ident() {
        let (name, line, col) = p.expect_ident()?;
        if descr.iter().any(|(n, _, _)| *n == name) {
            return Err(ParseError::DuplicateVariable { line, col, name });
        }
        let grid = if p.at_punct('@') {
            p.expect_punct('@')?;
            let pane = p.expect_small_int("pane")?;
            p.expect_punct(',')?;
            let row = p.expect_small_int("row")?;
            p.expect_punct(',')?;
            let col = p.expect_small_int("col")?;
            Some(GridCell { pane, row, col })
        } else {
            None
        };
        descr.push((name, 1, grid));
    }
    if descr.is_empty() {
        return Err(p.err("expected at least one variable"));
    }
    p.expect_punct(';')?;
    let ring = Ring::new(descr);
    let lookup = |name: &str, line: usize, col: usize| -> Result<VarId, ParseError> {
        ring.var_by_name(name).ok_or(ParseError::UndeclaredVariable { line, col, name: name.to_string() })
    };

    // order
    p.expect_keyword("order")?;
    let (kind_name, kline, kcol) = p.expect_ident()?;
    let kind = match kind_name.as_str() {
        "lex" => OrderKind::Lex,
        "grevlex" => OrderKind::GRevLex,
        _ => {
            return Err(ParseError::SyntaxError {
                line: kline,
                col: kcol,
                message: "expected \"lex\" or \"grevlex\"".into(),
            })
        }
    };
    let mut reading = Vec::new();
    loop {
        let (name, line, col) = p.expect_ident()?;
        let id = lookup(&name, line, col)?;
        if reading.contains(&id) {
            return Err(ParseError::DuplicateVariable { line, col, name });
        }
        reading.push(id);
        if p.at_punct(',') {
            p.expect_punct(',')?;
        } else {
            break;
        }
    }
    if reading.len() != ring.num_vars() {
        return Err(p.err("the order must list every declared variable"));
    }
    p.expect_punct(';')?;
    let order = TermOrder::new(kind, reading);

    // grading (optional)
    let grading = if p.at_ident() && matches!(p.peek().unwrap().tok, Tok::Ident(ref s) if s == "grading") {
        p.expect_keyword("grading")?;
        let (dline, dcol) = p.here();
        let dim = p.expect_small_int("grading dimension")? as usize;
        if dim == 0 {
            return Err(ParseError::SyntaxError {
                line: dline,
                col: dcol,
                message: "grading dimension must be positive".into(),
            });
        }
        p.expect_punct(':')?;
        let mut weights: Vec<Option<Vec<i64>>> = vec![None; ring.num_vars()];
        while p.at_ident() {
            let (name, line, col) = p.expect_ident()?;
            let id = lookup(&name, line, col)?;
            if weights[id].is_some() {
                return Err(ParseError::DuplicateVariable { line, col, name });
            }
            p.expect_punct('=')?;
            p.expect_punct('[')?;
            let mut w = Vec::new();
            loop {
                let (wline, wcol) = p.here();
                let n = p.expect_int()?;
                let v = i64::try_from(n).map_err(|_| ParseError::SyntaxError {
                    line: wline,
                    col: wcol,
                    message: "weight out of range".into(),
                })?;
                w.push(v);
                if p.at_punct(',') {
                    p.expect_punct(',')?;
                } else {
                    break;
                }
            }
            p.expect_punct(']')?;
            if w.len() != dim {
                return Err(ParseError::SyntaxError {
                    line,
                    col,
                    message: format!("expected {} weights for {}", dim, name),
                });
            }
            weights[id] = Some(w);
        }
        if let Some(missing) = weights.iter().position(|w| w.is_none()) {
            return Err(p.err(format!("no weights declared for {}", ring.name(missing))));
        }
        p.expect_punct(';')?;
        match Grading::new(&ring, dim, weights.into_iter().map(Option::unwrap).collect()) {
            Ok(g) => g,
            Err(GradingError::NonPositiveGrading(name)) => return Err(ParseError::NonPositiveGrading(name)),
            Err(e) => return Err(p.err(e.to_string())),
        }
    } else {
        Grading::standard(&ring)
    };

    // gens
    p.expect_keyword("gens")?;
    let mut gens = Vec::new();
    loop {
        gens.push(parse_poly(&mut p, &ring)?);
        if p.at_punct(',') {
            p.expect_punct(',')?;
        } else {
            break;
        }
    }
    p.expect_punct(';')?;
    if let Some(t) = p.peek() {
        return Err(ParseError::SyntaxError {
            line: t.line,
            col: t.col,
            message: "trailing input after the generator list".into(),
        });
    }
    let ideal = Ideal::new(ring.clone(), gens);
    Ok(ParsedFile { ring, grading, order, ideal })
}

fn parse_poly(p: &mut Parser, ring: &Ring) -> Result<Polynomial, ParseError> {
    let mut terms = Vec::new();
    let mut sign = BigInt::one();
    if p.at_punct('-') {
        p.expect_punct('-')?;
        sign = -sign;
    } else if p.at_punct('+') {
        p.expect_punct('+')?;
    }
    loop {
        terms.push(parse_term(p, ring, &sign)?);
        if p.at_punct('+') {
            p.expect_punct('+')?;
            sign = BigInt::one();
        } else if p.at_punct('-') {
            p.expect_punct('-')?;
            sign = -BigInt::one();
        } else {
            break;
        }
    }
    Ok(Polynomial::from_terms(terms))
}

fn parse_term(p: &mut Parser, ring: &Ring, sign: &BigInt) -> Result<Term, ParseError> {
    let mut coeff = Coeff::from(sign.clone());
    if p.at_int() {
        let num = p.expect_int()?;
        let den = if p.at_punct('/') {
            p.expect_punct('/')?;
            let (dline, dcol) = p.here();
            let d = p.expect_int()?;
            if d.is_zero() {
                return Err(ParseError::SyntaxError {
                    line: dline,
                    col: dcol,
                    message: "zero denominator".into(),
                });
            }
            d
        } else {
            BigInt::one()
        };
        coeff *= BigRational::new(num, den);
        p.expect_punct('*')?;
    }
    let mut pairs = Vec::new();
    loop {
        let (name, line, col) = p.expect_ident()?;
        let id = ring
            .var_by_name(&name)
            .ok_or(ParseError::UndeclaredVariable { line, col, name })?;
        let e = if p.at_punct('^') {
            p.expect_punct('^')?;
            p.expect_small_int("exponent")?
        } else {
            1
        };
        pairs.push((id, e));
        if p.at_punct('*') {
            p.expect_punct('*')?;
        } else {
            break;
        }
    }
    Ok(Term { coeff, mono: Monomial::from_pairs(ring.num_vars(), &pairs) })
}

/// Parse one polynomial over an existing ring; the text is a complete `poly`
/// production.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end_line: 1, end_col: text.chars().count() + 1 };
    let poly = parse_poly(&mut p, ring)?;
    if let Some(t) = p.peek() {
        return Err(ParseError::SyntaxError {
            line: t.line,
            col: t.col,
            message: "trailing input after the polynomial".into(),
        });
    }
    Ok(poly)
}

/// Render a quadruple back into the input language. Polarization copies
/// cannot appear: their names are not identifiers.
pub fn pretty_print(f: &ParsedFile) -> String {
    let ring = &f.ring;
    let mut out = String::new();
    out.push_str("ring");
    for v in ring.vars() {
        debug_assert_eq!(v.copy_index, 1, "polarized rings have no file form");
        out.push(' ');
        out.push_str(&v.base_name);
        if let Some(g) = v.grid {
            out.push_str(&format!("@{},{},{}", g.pane, g.row, g.col));
        }
    }
    out.push_str(";\n");

    out.push_str(match f.order.kind {
        OrderKind::Lex => "order lex ",
        OrderKind::GRevLex => "order grevlex ",
    });
    let names: Vec<String> = f.order.reading().iter().map(|&id| ring.name(id)).collect();
    out.push_str(&names.join(", "));
    out.push_str(";\n");

    out.push_str(&format!("grading {}:", f.grading.dim()));
    for id in 0..ring.num_vars() {
        let w: Vec<String> = f.grading.weight_of_var(id).iter().map(|x| x.to_string()).collect();
        out.push_str(&format!(" {} = [{}]", ring.name(id), w.join(", ")));
    }
    out.push_str(";\n");

    out.push_str("gens ");
    let shown: Vec<String> = f.ideal.gens().iter().map(|g| poly_text(g, ring)).collect();
    out.push_str(&shown.join(",\n     "));
    out.push_str(";\n");
    out
}

/// Grammar-conforming polynomial text: the display form, with constant terms
/// written as multiples of the first variable to the zeroth power.
fn poly_text(poly: &Polynomial, ring: &Ring) -> String {
    let mut out = String::new();
    for (i, t) in poly.terms().iter().enumerate() {
        let neg = t.coeff < Coeff::zero();
        let abs = if neg { -t.coeff.clone() } else { t.coeff.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if t.mono.is_one() {
            out.push_str(&format!("{}*{}^0", abs, ring.name(0)));
        } else if abs == Coeff::from(BigInt::one()) {
            out.push_str(&format!("{}", t.mono.display(ring)));
        } else {
            out.push_str(&format!("{}*{}", abs, t.mono.display(ring)));
        }
    }
    if poly.is_zero() {
        // unreachable through Ideal, which drops zero generators
        out.push_str(&format!("0*{}^0", ring.name(0)));
    }
    out
}
