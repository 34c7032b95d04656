//! Expression language for elements of the free algebra.
//!
//! ```text
//! expr   := ["+"|"-"] term (("+"|"-") term)*
//! term   := factor ("*" factor)*
//! factor := atom ("^" signed-int)?
//! atom   := "X[" int "," int "]" | "X_{" digit digit "}" | "q" | int | "(" expr ")"
//! ```
//!
//! Negative exponents are allowed only on a bare `q`. Other powers are
//! capped at [`MAX_POWER`].

use num_bigint::BigInt;
use qleft_core::{LaurentPoly, NcPoly};
use thiserror::Error;

/// Largest exponent accepted on anything but `q`.
pub const MAX_POWER: i64 = 1024;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ParseError {
    /// `pos` is a 0-based character offset into the input.
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("index {index} at position {pos} is out of range for n = {n}")]
    IndexOutOfRange { pos: usize, index: usize, n: usize },
    #[error("negative power at position {pos}: only q may carry a negative exponent")]
    NegativePower { pos: usize },
}

impl ParseError {
    pub fn pos(&self) -> usize {
        match *self {
            ParseError::Syntax { pos, .. }
            | ParseError::IndexOutOfRange { pos, .. }
            | ParseError::NegativePower { pos } => pos,
        }
    }

    /// The message followed by the input with a caret under the offending
    /// character.
    pub fn annotate(&self, input: &str) -> String {
        format!("{self}\n  {input}\n  {}^", " ".repeat(self.pos()))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Gen(usize, usize),
    Q,
    Int(BigInt),
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Int(BigInt),
    Q,
    X,
    /// `X_{ij}` with both indices already read.
    XSub(usize, usize),
    LBracket,
    RBracket,
    Comma,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Caret,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(v) => format!("integer {v}"),
        Tok::Q => "'q'".into(),
        Tok::X | Tok::XSub(..) => "generator".into(),
        Tok::LBracket => "'['".into(),
        Tok::RBracket => "']'".into(),
        Tok::Comma => "','".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::End => "end of input".into(),
    }
}

fn syntax(pos: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        pos,
        message: message.into(),
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Int(digits.parse().expect("ascii digits")), start));
                continue;
            }
            'q' => Tok::Q,
            'X' if chars.get(i + 1) == Some(&'_') => {
                let body: String = chars.iter().skip(i + 2).take(4).collect();
                let b: Vec<char> = body.chars().collect();
                if b.len() == 4 && b[0] == '{' && b[1].is_ascii_digit() && b[2].is_ascii_digit() && b[3] == '}' {
                    let row = b[1].to_digit(10).unwrap() as usize;
                    let col = b[2].to_digit(10).unwrap() as usize;
                    i += 6;
                    out.push((Tok::XSub(row, col), start));
                    continue;
                }
                return Err(syntax(start, "expected X_{ij} with two single-digit indices"));
            }
            'X' => Tok::X,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            other => return Err(syntax(start, format!("unexpected character '{other}'"))),
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    n: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if t.0 != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected {what}, found {}", describe(self.peek()))))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = match self.peek() {
            Tok::Minus => {
                self.bump();
                Expr::Neg(Box::new(self.term()?))
            }
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let atom = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(atom);
        }
        self.bump();
        let sign_pos = self.pos();
        let negative = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let (tok, pos) = self.bump();
        let Tok::Int(v) = tok else {
            return Err(syntax(pos, format!("expected an exponent, found {}", describe(&tok))));
        };
        let mut k: i64 = i64::try_from(&v).map_err(|_| syntax(pos, "exponent too large"))?;
        if negative {
            k = -k;
        }
        if atom != Expr::Q {
            if k < 0 {
                return Err(ParseError::NegativePower { pos: sign_pos });
            }
            if k > MAX_POWER {
                return Err(syntax(pos, format!("exponent {k} exceeds the limit of {MAX_POWER}")));
            }
        }
        Ok(Expr::Pow(Box::new(atom), k))
    }

    fn index(&mut self) -> Result<usize, ParseError> {
        let (tok, pos) = self.bump();
        let Tok::Int(v) = tok else {
            return Err(syntax(pos, format!("expected an index, found {}", describe(&tok))));
        };
        let index = usize::try_from(&v).unwrap_or(usize::MAX);
        self.check_index(index, pos)
    }

    fn check_index(&self, index: usize, pos: usize) -> Result<usize, ParseError> {
        if (1..=self.n).contains(&index) {
            Ok(index)
        } else {
            Err(ParseError::IndexOutOfRange { pos, index, n: self.n })
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Q => Ok(Expr::Q),
            Tok::Int(v) => Ok(Expr::Int(v)),
            Tok::X => {
                self.expect(Tok::LBracket, "'[' after X")?;
                let i = self.index()?;
                self.expect(Tok::Comma, "','")?;
                let j = self.index()?;
                self.expect(Tok::RBracket, "']'")?;
                Ok(Expr::Gen(i, j))
            }
            Tok::XSub(i, j) => {
                // the indices sit two and three characters after the X
                let i = self.check_index(i, pos + 3)?;
                let j = self.check_index(j, pos + 4)?;
                Ok(Expr::Gen(i, j))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            other => Err(syntax(pos, format!("expected a term, found {}", describe(&other)))),
        }
    }
}

/// Parses `input` with generator indices checked against `n`.
pub fn parse(input: &str, n: usize) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        at: 0,
        n,
    };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        t => Err(syntax(p.pos(), format!("unexpected {}", describe(t)))),
    }
}

/// The free-algebra element denoted by `e`.
pub fn evaluate(e: &Expr) -> NcPoly {
    match e {
        Expr::Add(a, b) => &evaluate(a) + &evaluate(b),
        Expr::Sub(a, b) => &evaluate(a) - &evaluate(b),
        Expr::Neg(a) => -&evaluate(a),
        Expr::Mul(a, b) => &evaluate(a) * &evaluate(b),
        Expr::Pow(base, k) => match (&**base, *k) {
            (Expr::Q, k) => NcPoly::constant(LaurentPoly::q_pow(k)),
            (_, k) => evaluate(base).pow(u32::try_from(k).expect("parser rejects negative powers")),
        },
        Expr::Gen(i, j) => NcPoly::generator(*i, *j),
        Expr::Q => NcPoly::constant(LaurentPoly::q()),
        Expr::Int(v) => {
            if v == &BigInt::from(0) {
                NcPoly::zero()
            } else {
                NcPoly::constant(LaurentPoly::constant(v.clone()))
            }
        }
    }
}

/// `parse` followed by `evaluate`.
pub fn parse_poly(input: &str, n: usize) -> Result<NcPoly, ParseError> {
    parse(input, n).map(|e| evaluate(&e))
}
