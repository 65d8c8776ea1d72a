//! Expression language for multivectors.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (prod factor)*        one product kind per chain
//! prod   := '*' | '∘' | 'o' | '⊗' | 'x' | '∧' | '/\' | '·' | '.'
//! factor := unary ('^' int)?
//! unary  := ('~' | '#' | '!' | '-')* atom
//! atom   := number | symbol | call '(' expr ')' | '(' expr ')'
//!         | '<' expr '>' digit | '⟨' expr '⟩' digit
//! ```
//!
//! Numbers may carry an `i` suffix (`2.5i`). Symbols are `g0`–`g3`,
//! `e1`–`e3`, `I`, `J` and `i`; calls are `exp`, `inv`, `matrix` and `det`.

use std::fmt;

use num_complex::Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Gamma(u8),
    E(u8),
    BigI,
    BigJ,
    Imag,
}

impl Symbol {
    fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "g0" => Symbol::Gamma(0),
            "g1" => Symbol::Gamma(1),
            "g2" => Symbol::Gamma(2),
            "g3" => Symbol::Gamma(3),
            "e1" => Symbol::E(1),
            "e2" => Symbol::E(2),
            "e3" => Symbol::E(3),
            "I" => Symbol::BigI,
            "J" => Symbol::BigJ,
            "i" => Symbol::Imag,
            _ => return None,
        })
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Gamma(k) => write!(f, "g{k}"),
            Symbol::E(k) => write!(f, "e{k}"),
            Symbol::BigI => f.write_str("I"),
            Symbol::BigJ => f.write_str("J"),
            Symbol::Imag => f.write_str("i"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnaryOp {
    Reverse,
    GradeInvolute,
    Conjugate,
    Negate,
    Grade(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Geometric,
    Symmetric,
    Antisymmetric,
    Wedge,
    Dot,
}

impl BinaryOp {
    fn symbol(self) -> &'static str {
        match self {
            BinaryOp::Add => "+",
            BinaryOp::Sub => "-",
            BinaryOp::Geometric => "*",
            BinaryOp::Symmetric => "∘",
            BinaryOp::Antisymmetric => "⊗",
            BinaryOp::Wedge => "∧",
            BinaryOp::Dot => "·",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Function {
    Exp,
    Inv,
    Matrix,
    Det,
}

impl Function {
    fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "exp" => Function::Exp,
            "inv" => Function::Inv,
            "matrix" => Function::Matrix,
            "det" => Function::Det,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Function::Exp => "exp",
            Function::Inv => "inv",
            Function::Matrix => "matrix",
            Function::Det => "det",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Literal(Complex64),
    Symbol(Symbol),
    Unary(UnaryOp, Box<Expr>),
    Binary(BinaryOp, Box<Expr>, Box<Expr>),
    Power(Box<Expr>, i32),
    Call(Function, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Syntax { offset: usize, found: String, expected: Vec<&'static str> },
    UnknownSymbol { offset: usize, name: String },
    MixedProducts { offset: usize, first: &'static str, second: &'static str },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownSymbol { offset, .. }
            | ParseError::MixedProducts { offset, .. } => *offset,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { offset, found, expected } => write!(
                f,
                "syntax error at offset {offset}: found {found}, expected one of {}",
                expected.join(" ")
            ),
            ParseError::UnknownSymbol { offset, name } => {
                write!(f, "unknown symbol `{name}` at offset {offset}")
            }
            ParseError::MixedProducts { offset, first, second } => write!(
                f,
                "syntax error at offset {offset}: `{second}` follows `{first}` without parentheses"
            ),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number(f64),
    Imaginary(f64),
    Ident(String),
    Plus,
    Minus,
    Product(BinaryOp),
    Caret,
    Tilde,
    Hash,
    Bang,
    LParen,
    RParen,
    LAngle,
    RAngle,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number(x) => format!("number {x}"),
            Tok::Imaginary(x) => format!("number {x}i"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Product(op) => format!("`{}`", op.symbol()),
            Tok::Caret => "`^`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Hash => "`#`".into(),
            Tok::Bang => "`!`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LAngle => "`<`".into(),
            Tok::RAngle => "`>`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

const ATOM_START: &[&str] = &["number", "symbol", "function", "(", "<", "~", "#", "!", "-"];

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < src.len() {
        let ch = src[pos..].chars().next().expect("in bounds");
        let start = pos;
        let single = |t: Tok| (t, ch.len_utf8());
        let (tok, len) = match ch {
            c if c.is_whitespace() => {
                pos += c.len_utf8();
                continue;
            }
            '0'..='9' => {
                let mut end = pos;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                if end + 1 < bytes.len() && bytes[end] == b'.' && bytes[end + 1].is_ascii_digit() {
                    end += 1;
                    while end < bytes.len() && bytes[end].is_ascii_digit() {
                        end += 1;
                    }
                }
                if end < bytes.len() && (bytes[end] == b'e' || bytes[end] == b'E') {
                    let mut k = end + 1;
                    if k < bytes.len() && (bytes[k] == b'+' || bytes[k] == b'-') {
                        k += 1;
                    }
                    // `2e1` is twenty: a number directly followed by a
                    // symbol is not valid syntax, so there is no ambiguity.
                    if k < bytes.len() && bytes[k].is_ascii_digit() {
                        while k < bytes.len() && bytes[k].is_ascii_digit() {
                            k += 1;
                        }
                        end = k;
                    }
                }
                let value: f64 = src[pos..end].parse().expect("lexed digits parse");
                if !value.is_finite() {
                    return Err(ParseError::Syntax {
                        offset: start,
                        found: format!("number {}", &src[pos..end]),
                        expected: vec!["finite number"],
                    });
                }
                if end < bytes.len() && bytes[end] == b'i' && !ident_continues(bytes, end + 1) {
                    (Tok::Imaginary(value), end + 1 - pos)
                } else {
                    (Tok::Number(value), end - pos)
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = pos;
                while ident_continues(bytes, end) {
                    end += 1;
                }
                let word = &src[pos..end];
                let tok = match word {
                    "o" => Tok::Product(BinaryOp::Symmetric),
                    "x" => Tok::Product(BinaryOp::Antisymmetric),
                    _ => Tok::Ident(word.to_string()),
                };
                (tok, end - pos)
            }
            '+' => single(Tok::Plus),
            '-' | '−' => single(Tok::Minus),
            '*' => single(Tok::Product(BinaryOp::Geometric)),
            '∘' => single(Tok::Product(BinaryOp::Symmetric)),
            '⊗' => single(Tok::Product(BinaryOp::Antisymmetric)),
            '∧' => single(Tok::Product(BinaryOp::Wedge)),
            '·' | '.' => single(Tok::Product(BinaryOp::Dot)),
            '/' if bytes.get(pos + 1) == Some(&b'\\') => (Tok::Product(BinaryOp::Wedge), 2),
            '^' => single(Tok::Caret),
            '~' => single(Tok::Tilde),
            '#' => single(Tok::Hash),
            '!' => single(Tok::Bang),
            '(' => single(Tok::LParen),
            ')' => single(Tok::RParen),
            '<' | '⟨' => single(Tok::LAngle),
            '>' | '⟩' => single(Tok::RAngle),
            other => {
                return Err(ParseError::Syntax {
                    offset: start,
                    found: format!("`{other}`"),
                    expected: ATOM_START.to_vec(),
                })
            }
        };
        out.push((start, tok));
        pos += len;
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

fn ident_continues(bytes: &[u8], at: usize) -> bool {
    at < bytes.len() && (bytes[at].is_ascii_alphanumeric() || bytes[at] == b'_')
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError::Syntax { offset: self.offset(), found: self.peek().describe(), expected: expected.to_vec() }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinaryOp::Add,
                Tok::Minus => BinaryOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        let mut chain: Option<BinaryOp> = None;
        while let Tok::Product(op) = *self.peek() {
            if let Some(first) = chain {
                if first != op {
                    return Err(ParseError::MixedProducts {
                        offset: self.offset(),
                        first: first.symbol(),
                        second: op.symbol(),
                    });
                }
            }
            chain = Some(op);
            self.bump();
            let rhs = self.factor()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.unary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let offset = self.offset();
        match self.bump() {
            Tok::Number(n) if n.fract() == 0.0 && n <= f64::from(i32::MAX) => {
                let n = n as i32;
                Ok(Expr::Power(Box::new(base), if negative { -n } else { n }))
            }
            found => Err(ParseError::Syntax { offset, found: found.describe(), expected: vec!["integer"] }),
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        let op = match self.peek() {
            Tok::Tilde => UnaryOp::Reverse,
            Tok::Hash => UnaryOp::GradeInvolute,
            Tok::Bang => UnaryOp::Conjugate,
            Tok::Minus => UnaryOp::Negate,
            _ => return self.atom(),
        };
        self.bump();
        Ok(Expr::Unary(op, Box::new(self.unary()?)))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Number(x) => {
                self.bump();
                Ok(Expr::Literal(Complex64::new(x, 0.0)))
            }
            Tok::Imaginary(x) => {
                self.bump();
                Ok(Expr::Literal(Complex64::new(0.0, x)))
            }
            Tok::Ident(name) => {
                self.bump();
                if let Some(s) = Symbol::parse(&name) {
                    return Ok(Expr::Symbol(s));
                }
                if let Some(func) = Function::parse(&name) {
                    self.expect(Tok::LParen, "(")?;
                    let arg = self.expr()?;
                    self.expect(Tok::RParen, ")")?;
                    return Ok(Expr::Call(func, Box::new(arg)));
                }
                Err(ParseError::UnknownSymbol { offset, name })
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, ")")?;
                Ok(e)
            }
            Tok::LAngle => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RAngle, ">")?;
                let offset = self.offset();
                match self.bump() {
                    Tok::Number(k) if k.fract() == 0.0 && (0.0..=4.0).contains(&k) => {
                        Ok(Expr::Unary(UnaryOp::Grade(k as u32), Box::new(e)))
                    }
                    found => Err(ParseError::Syntax {
                        offset,
                        found: found.describe(),
                        expected: vec!["grade 0-4"],
                    }),
                }
            }
            _ => Err(self.error(ATOM_START)),
        }
    }
}

/// Parses a complete expression.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        let mut expected = vec!["+", "-", "*", "∘", "⊗", "∧", "·", "^"];
        expected.push("end of input");
        return Err(p.error(&expected));
    }
    Ok(e)
}

fn fmt_number(x: f64) -> String {
    // `{:?}` prints the shortest representation that parses back exactly.
    let s = format!("{x:?}");
    s.trim_end_matches(".0").to_string()
}

impl fmt::Display for Expr {
    /// Fully parenthesized form that parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Literal(c) if c.im == 0.0 => {
                if c.re < 0.0 {
                    write!(f, "(-{})", fmt_number(-c.re))
                } else {
                    f.write_str(&fmt_number(c.re))
                }
            }
            Expr::Literal(c) if c.re == 0.0 && c.im >= 0.0 => write!(f, "{}i", fmt_number(c.im)),
            Expr::Literal(c) => {
                // Only reachable for trees built by hand.
                write!(f, "({} + {}i)", fmt_number(c.re), fmt_number(c.im))
            }
            Expr::Symbol(s) => write!(f, "{s}"),
            Expr::Unary(op, e) => match op {
                UnaryOp::Reverse => write!(f, "~{e}"),
                UnaryOp::GradeInvolute => write!(f, "#{e}"),
                UnaryOp::Conjugate => write!(f, "!{e}"),
                UnaryOp::Negate => write!(f, "-{e}"),
                UnaryOp::Grade(k) => write!(f, "<{e}>{k}"),
            },
            Expr::Binary(op, a, b) => write!(f, "({a} {} {b})", op.symbol()),
            Expr::Power(e, n) => write!(f, "({e}^{n})"),
            Expr::Call(func, e) => write!(f, "{}({e})", func.name()),
        }
    }
}
