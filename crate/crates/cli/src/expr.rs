//! Expression grammar:
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary ("*" unary)*
//! unary := "-" unary | atom
//! atom  := NUMBER | CONST | IDENT "(" [expr ("," expr)*] ")" | "(" expr ")"
//! ```

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constant {
    E0,
    E1,
    E2,
    E3,
    S1,
    S2,
    S3,
    I,
    J,
    IJ,
}

impl Constant {
    pub const ALL: [Constant; 10] = [
        Constant::E0,
        Constant::E1,
        Constant::E2,
        Constant::E3,
        Constant::S1,
        Constant::S2,
        Constant::S3,
        Constant::I,
        Constant::J,
        Constant::IJ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Constant::E0 => "e0",
            Constant::E1 => "e1",
            Constant::E2 => "e2",
            Constant::E3 => "e3",
            Constant::S1 => "s1",
            Constant::S2 => "s2",
            Constant::S3 => "s3",
            Constant::I => "i",
            Constant::J => "j",
            Constant::IJ => "ij",
        }
    }

    fn lookup(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Bar,
    Rev,
    Grad,
    Exp,
    Inv,
    Dot,
    Wedge,
    Boost,
    Rot,
    Spinor,
    Sprod,
    Norm2,
    Commutator,
}

impl Func {
    pub const ALL: [Func; 13] = [
        Func::Bar,
        Func::Rev,
        Func::Grad,
        Func::Exp,
        Func::Inv,
        Func::Dot,
        Func::Wedge,
        Func::Boost,
        Func::Rot,
        Func::Spinor,
        Func::Sprod,
        Func::Norm2,
        Func::Commutator,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Bar => "bar",
            Func::Rev => "rev",
            Func::Grad => "grad",
            Func::Exp => "exp",
            Func::Inv => "inv",
            Func::Dot => "dot",
            Func::Wedge => "wedge",
            Func::Boost => "boost",
            Func::Rot => "rot",
            Func::Spinor => "spinor",
            Func::Sprod => "sprod",
            Func::Norm2 => "norm2",
            Func::Commutator => "commutator",
        }
    }

    fn lookup(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
        }
    }

    fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul => 2,
        }
    }
}

/// Syntax tree. `at` is the byte offset of the operator or call name and is
/// ignored by equality.
#[derive(Clone, Debug)]
pub enum Expr {
    Num(f64),
    Const(Constant),
    Neg(Box<Expr>),
    Binary { op: BinOp, lhs: Box<Expr>, rhs: Box<Expr>, at: usize },
    Call { func: Func, args: Vec<Expr>, at: usize },
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        use Expr::*;
        match (self, other) {
            (Num(a), Num(b)) => a == b,
            (Const(a), Const(b)) => a == b,
            (Neg(a), Neg(b)) => a == b,
            (Binary { op: o1, lhs: l1, rhs: r1, .. }, Binary { op: o2, lhs: l2, rhs: r2, .. }) => {
                o1 == o2 && l1 == l2 && r1 == r2
            }
            (Call { func: f1, args: a1, .. }, Call { func: f2, args: a2, .. }) => f1 == f2 && a1 == a2,
            _ => false,
        }
    }
}

impl Expr {
    /// Canonical text; reparses to an equal tree.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, min_prec: u8) {
        match self {
            Expr::Num(v) => out.push_str(&v.to_string()),
            Expr::Const(c) => out.push_str(c.name()),
            Expr::Neg(inner) => {
                out.push('-');
                inner.render_into(out, 3);
            }
            Expr::Binary { op, lhs, rhs, .. } => {
                let p = op.precedence();
                let paren = p < min_prec;
                if paren {
                    out.push('(');
                }
                lhs.render_into(out, p);
                out.push(' ');
                out.push_str(op.symbol());
                out.push(' ');
                rhs.render_into(out, p + 1);
                if paren {
                    out.push(')');
                }
            }
            Expr::Call { func, args, .. } => {
                out.push_str(func.name());
                out.push('(');
                for (n, a) in args.iter().enumerate() {
                    if n > 0 {
                        out.push_str(", ");
                    }
                    a.render_into(out, 0);
                }
                out.push(')');
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: expected {}, found {}", self.offset, self.expected.join(" | "), self.found)
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(v) => format!("number {v}"),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, SyntaxError> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        let start = pos;
        let single = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
                continue;
            }
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = single {
            toks.push((t, start));
            pos += 1;
        } else if c.is_ascii_digit() || c == b'.' {
            pos = scan_number(bytes, pos);
            let text = &src[start..pos];
            match text.parse::<f64>() {
                Ok(v) if v.is_finite() => toks.push((Tok::Num(v), start)),
                _ => {
                    return Err(SyntaxError {
                        offset: start,
                        expected: vec!["finite number".into()],
                        found: format!("'{text}'"),
                    })
                }
            }
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                pos += 1;
            }
            toks.push((Tok::Ident(src[start..pos].to_string()), start));
        } else {
            let ch = src[start..].chars().next().unwrap_or('?');
            return Err(SyntaxError { offset: start, expected: atom_expected(), found: format!("'{ch}'") });
        }
    }
    toks.push((Tok::End, src.len()));
    Ok(toks)
}

fn scan_number(b: &[u8], mut pos: usize) -> usize {
    let digits = |mut p: usize| {
        while p < b.len() && b[p].is_ascii_digit() {
            p += 1;
        }
        p
    };
    pos = digits(pos);
    if pos < b.len() && b[pos] == b'.' {
        pos = digits(pos + 1);
    }
    if pos < b.len() && (b[pos] == b'e' || b[pos] == b'E') {
        let mut p = pos + 1;
        if p < b.len() && (b[p] == b'+' || b[p] == b'-') {
            p += 1;
        }
        if p < b.len() && b[p].is_ascii_digit() {
            pos = digits(p);
        }
    }
    pos
}

fn atom_expected() -> Vec<String> {
    ["number", "constant", "function call", "'('", "'-'"].map(String::from).to_vec()
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: Vec<String>) -> SyntaxError {
        SyntaxError { offset: self.offset(), expected, found: self.peek().describe() }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            let (_, at) = self.bump();
            let rhs = self.term()?;
            lhs = Expr::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs), at };
        }
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            let (_, at) = self.bump();
            let rhs = self.unary()?;
            lhs = Expr::Binary { op: BinOp::Mul, lhs: Box::new(lhs), rhs: Box::new(rhs), at };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, SyntaxError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek().clone() {
            Tok::Num(v) => {
                self.bump();
                Ok(Expr::Num(v))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, &["'+'", "'-'", "'*'", "')'"])?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if let Some(c) = Constant::lookup(&name) {
                    self.bump();
                    return Ok(Expr::Const(c));
                }
                let Some(func) = Func::lookup(&name) else {
                    return Err(self.error(atom_expected()));
                };
                let (_, at) = self.bump();
                self.expect(Tok::LParen, &["'('"])?;
                let mut args = Vec::new();
                if *self.peek() != Tok::RParen {
                    args.push(self.expr()?);
                    while *self.peek() == Tok::Comma {
                        self.bump();
                        args.push(self.expr()?);
                    }
                }
                self.expect(Tok::RParen, &["'+'", "'-'", "'*'", "','", "')'"])?;
                Ok(Expr::Call { func, args, at })
            }
            _ => Err(self.error(atom_expected())),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &[&str]) -> Result<(), SyntaxError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected.iter().map(|s| s.to_string()).collect()))
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(["'+'", "'-'", "'*'", "end of input"].map(String::from).to_vec()));
    }
    Ok(e)
}
