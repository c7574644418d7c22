//! A small expression language over every realization.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := '-' factor | primary ('^' ['-'] int)?
//! primary := int ['/' int] | t | t' | t'' | atom | '[' expr ',' expr ']' | '(' expr ')'
//! atom    := A_m | G_l | b_m | c_l | e | f | h | x | y | z | X_ij | u_i | v_i
//! ```
//!
//! The realization of an expression is inferred from its atoms; mixing
//! atoms of different realizations is a type error. Ring coefficients may
//! multiply elements on either side: Laurent polynomials for the loop
//! realization, three-point fractions for `x, y, z, X_ij, u_i`,
//! polynomials for `v_i`, and plain scalars for `A_m, G_l`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::loop_algebra::{basis_b, basis_c, LoopElement};
use crate::onsager::OnsagerElement;
use crate::poly::{Polynomial, ThreePointFraction};
use crate::scalar::{Field, Rational};
use crate::tetrahedron::{psi_generator, u_elements, ThreePointElement, VElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    A(i64),
    G(i64),
    B(i64),
    C(i64),
    E,
    F,
    H,
    X,
    Y,
    Z,
    Gen(u8, u8),
    U(u8),
    V(u8),
}

impl Atom {
    pub fn realization(&self) -> Realization {
        match self {
            Atom::A(_) | Atom::G(_) => Realization::Onsager,
            Atom::B(_) | Atom::C(_) | Atom::E | Atom::F | Atom::H => Realization::Loop,
            Atom::X | Atom::Y | Atom::Z | Atom::Gen(..) | Atom::U(_) => Realization::ThreePoint,
            Atom::V(_) => Realization::V,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::A(m) => write!(f, "A_{m}"),
            Atom::G(l) => write!(f, "G_{l}"),
            Atom::B(m) => write!(f, "b_{m}"),
            Atom::C(l) => write!(f, "c_{l}"),
            Atom::E => write!(f, "e"),
            Atom::F => write!(f, "f"),
            Atom::H => write!(f, "h"),
            Atom::X => write!(f, "x"),
            Atom::Y => write!(f, "y"),
            Atom::Z => write!(f, "z"),
            Atom::Gen(i, j) => write!(f, "X_{i}{j}"),
            Atom::U(i) => write!(f, "u_{i}"),
            Atom::V(i) => write!(f, "v_{i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Realization {
    Onsager,
    Loop,
    ThreePoint,
    V,
}

impl Realization {
    pub fn name(&self) -> &'static str {
        match self {
            Realization::Onsager => "onsager",
            Realization::Loop => "loop",
            Realization::ThreePoint => "three-point",
            Realization::V => "v",
        }
    }
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Realization {
    type Err = ExprError;
    fn from_str(s: &str) -> Result<Self, ExprError> {
        match s {
            "onsager" => Ok(Realization::Onsager),
            "loop" => Ok(Realization::Loop),
            "three-point" | "tetra" => Ok(Realization::ThreePoint),
            "v" => Ok(Realization::V),
            _ => Err(ExprError::UnknownRealization(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// A non-negative literal `n` or `n/d`.
    Num(Rational),
    /// `t`, `t'` or `t''` (0, 1 or 2 primes).
    T(u8),
    Atom(Atom),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Bracket(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("cannot mix {0} and {1} elements")]
    MixedRealization(Realization, Realization),
    #[error("type error: {0}")]
    Type(String),
    #[error("{0}")]
    Domain(String),
    #[error("unknown realization {0:?}")]
    UnknownRealization(String),
}

fn syntax(pos: usize, msg: impl Into<String>) -> ExprError {
    ExprError::Syntax { pos, msg: msg.into() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LBrack,
    RBrack,
    LParen,
    RParen,
    Comma,
    T(u8),
    Atom(Atom),
}

fn read_index(chars: &[char], mut i: usize) -> (Option<String>, usize) {
    if chars.get(i) != Some(&'_') {
        return (None, i);
    }
    i += 1;
    let start = i;
    if chars.get(i) == Some(&'-') {
        i += 1;
    }
    while chars.get(i).is_some_and(char::is_ascii_digit) {
        i += 1;
    }
    (Some(chars[start..i].iter().collect()), i)
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        let start = i;
        let simple = match ch {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push((start, tok));
            i += 1;
            continue;
        }
        if ch.is_whitespace() {
            i += 1;
            continue;
        }
        if ch.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((start, Tok::Int(digits.parse().unwrap())));
            continue;
        }
        if !ch.is_ascii_alphabetic() {
            return Err(syntax(start, format!("unexpected character {ch:?}")));
        }
        while i < chars.len() && chars[i].is_ascii_alphabetic() {
            i += 1;
        }
        let name: String = chars[start..i].iter().collect();
        if name == "t" {
            let mut primes = 0u8;
            while chars.get(i) == Some(&'\'') && primes < 2 {
                primes += 1;
                i += 1;
            }
            out.push((start, Tok::T(primes)));
            continue;
        }
        let (index, next) = read_index(&chars, i);
        i = next;
        let int_index = |idx: &Option<String>| -> Result<i64, ExprError> {
            idx.as_deref()
                .and_then(|s| s.parse::<i64>().ok())
                .ok_or_else(|| syntax(start, format!("{name} needs an integer index, as in {name}_1")))
        };
        let small_index = |idx: &Option<String>, max: u8| -> Result<u8, ExprError> {
            let v = int_index(idx)?;
            if (0..=max as i64).contains(&v) {
                Ok(v as u8)
            } else {
                Err(syntax(start, format!("{name} index must lie in 0..={max}")))
            }
        };
        let atom = match (name.as_str(), &index) {
            ("A", _) => Atom::A(int_index(&index)?),
            ("G", _) => Atom::G(int_index(&index)?),
            ("b", _) => Atom::B(int_index(&index)?),
            ("c", _) => Atom::C(int_index(&index)?),
            ("e", None) => Atom::E,
            ("f", None) => Atom::F,
            ("h", None) => Atom::H,
            ("x", None) => Atom::X,
            ("y", None) => Atom::Y,
            ("z", None) => Atom::Z,
            ("u", _) => Atom::U(small_index(&index, 2)?),
            ("v", _) => Atom::V(small_index(&index, 2)?),
            ("X", Some(s)) if s.len() == 2 && s.chars().all(|c| ('0'..='3').contains(&c)) => {
                let b = s.as_bytes();
                let (a, c) = (b[0] - b'0', b[1] - b'0');
                if a == c {
                    return Err(syntax(start, "X_ij needs distinct indices"));
                }
                Atom::Gen(a, c)
            }
            ("X", _) => return Err(syntax(start, "X needs two distinct indices in 0..=3, as in X_12")),
            _ => return Err(syntax(start, format!("unknown symbol {name:?}"))),
        };
        out.push((start, Tok::Atom(atom)));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ExprError> {
        let at = self.here();
        match self.bump() {
            Some(t) if t == tok => Ok(()),
            _ => Err(syntax(at, format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let negative = self.peek() == Some(&Tok::Minus);
        if negative {
            self.bump();
        }
        let at = self.here();
        let Some(Tok::Int(n)) = self.bump() else {
            return Err(syntax(at, "expected an integer exponent"));
        };
        let n: i64 = n.try_into().map_err(|_| syntax(at, "exponent too large"))?;
        Ok(Expr::Pow(Box::new(base), if negative { -n } else { n }))
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let at_d = self.here();
                    let Some(Tok::Int(d)) = self.bump() else {
                        return Err(syntax(at_d, "expected a denominator"));
                    };
                    let q = Rational::from_big(n, d).map_err(|_| syntax(at_d, "zero denominator"))?;
                    Ok(Expr::Num(q))
                } else {
                    Ok(Expr::Num(Rational::from(n)))
                }
            }
            Some(Tok::T(p)) => Ok(Expr::T(p)),
            Some(Tok::Atom(a)) => Ok(Expr::Atom(a)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Some(Tok::LBrack) => {
                let a = self.expr()?;
                self.expect(Tok::Comma, "',' inside a bracket")?;
                let b = self.expr()?;
                self.expect(Tok::RBrack, "']'")?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            Some(_) => Err(syntax(at, "expected a number, symbol, '[' or '('")),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

/// Parses and type-checks.
pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let expr = parse_untyped(src)?;
    infer(&expr)?;
    Ok(expr)
}

/// Parses without the realization check.
pub fn parse_untyped(src: &str) -> Result<Expr, ExprError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, end: src.chars().count() };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(syntax(p.here(), "unexpected trailing input"));
    }
    Ok(e)
}

/// Static kind of a subexpression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Scalar,
    Ring,
    Element(Realization),
}

fn combine_additive(a: Kind, b: Kind) -> Result<Kind, ExprError> {
    match (a, b) {
        (Kind::Scalar, Kind::Scalar) => Ok(Kind::Scalar),
        (Kind::Scalar | Kind::Ring, Kind::Scalar | Kind::Ring) => Ok(Kind::Ring),
        (Kind::Element(x), Kind::Element(y)) if x == y => Ok(a),
        (Kind::Element(x), Kind::Element(y)) => Err(ExprError::MixedRealization(x, y)),
        _ => Err(ExprError::Type("cannot add an algebra element and a scalar".into())),
    }
}

/// Infers the kind, rejecting mixed realizations.
pub fn infer(e: &Expr) -> Result<Kind, ExprError> {
    match e {
        Expr::Num(_) => Ok(Kind::Scalar),
        Expr::T(_) => Ok(Kind::Ring),
        Expr::Atom(a) => Ok(Kind::Element(a.realization())),
        Expr::Neg(x) => infer(x),
        Expr::Add(a, b) | Expr::Sub(a, b) => combine_additive(infer(a)?, infer(b)?),
        Expr::Mul(a, b) => match (infer(a)?, infer(b)?) {
            (Kind::Element(_), Kind::Element(_)) => {
                Err(ExprError::Type("elements multiply through brackets [a, b], not '*'".into()))
            }
            (Kind::Scalar, Kind::Scalar) => Ok(Kind::Scalar),
            (k @ Kind::Element(_), _) | (_, k @ Kind::Element(_)) => Ok(k),
            _ => Ok(Kind::Ring),
        },
        Expr::Pow(a, _) => match infer(a)? {
            Kind::Element(_) => Err(ExprError::Type("powers apply to scalars and ring elements".into())),
            k => Ok(k),
        },
        Expr::Bracket(a, b) => match (infer(a)?, infer(b)?) {
            (Kind::Element(x), Kind::Element(y)) if x == y => Ok(Kind::Element(x)),
            (Kind::Element(x), Kind::Element(y)) => Err(ExprError::MixedRealization(x, y)),
            _ => Err(ExprError::Type("brackets take two algebra elements".into())),
        },
    }
}

// Binding strength used by the printer: sums 1, products 2, negation 3, powers 4, atoms 5.
fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) => 2,
        Expr::Num(q) if !q.is_integer() => 2,
        Expr::Neg(_) => 3,
        Expr::Pow(..) => 4,
        _ => 5,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if prec(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Prints with the fewest parentheses that parse back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) => write!(f, "{q}"),
            Expr::T(p) => write!(f, "t{}", "'".repeat(*p as usize)),
            Expr::Atom(a) => write!(f, "{a}"),
            Expr::Neg(x) => {
                write!(f, "-")?;
                write_at(f, x, 3)
            }
            Expr::Add(a, b) => {
                write_at(f, a, 1)?;
                write!(f, " + ")?;
                write_at(f, b, 2)
            }
            Expr::Sub(a, b) => {
                write_at(f, a, 1)?;
                write!(f, " - ")?;
                write_at(f, b, 2)
            }
            Expr::Mul(a, b) => {
                write_at(f, a, 2)?;
                write!(f, "*")?;
                write_at(f, b, 3)
            }
            Expr::Pow(a, n) => {
                write_at(f, a, 5)?;
                write!(f, "^{n}")
            }
            Expr::Bracket(a, b) => write!(f, "[{a}, {b}]"),
        }
    }
}

/// An evaluated expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Rational),
    Ring(ThreePointFraction),
    Onsager(OnsagerElement),
    Loop(LoopElement<Rational>),
    ThreePoint(ThreePointElement),
    V(VElement),
}

impl Value {
    pub fn realization(&self) -> Option<Realization> {
        match self {
            Value::Scalar(_) | Value::Ring(_) => None,
            Value::Onsager(_) => Some(Realization::Onsager),
            Value::Loop(_) => Some(Realization::Loop),
            Value::ThreePoint(_) => Some(Realization::ThreePoint),
            Value::V(_) => Some(Realization::V),
        }
    }

    /// The zero element of a realization.
    pub fn zero_of(r: Realization) -> Value {
        match r {
            Realization::Onsager => Value::Onsager(OnsagerElement::zero()),
            Realization::Loop => Value::Loop(LoopElement::zero()),
            Realization::ThreePoint => Value::ThreePoint(ThreePointElement::zero()),
            Realization::V => Value::V(VElement::zero()),
        }
    }

    fn as_ring(&self) -> Option<ThreePointFraction> {
        match self {
            Value::Scalar(q) => Some(ThreePointFraction::constant(q.clone())),
            Value::Ring(r) => Some(r.clone()),
            _ => None,
        }
    }

    /// The value as a polynomial in `t`, if it is one.
    pub fn to_polynomial(&self) -> Option<Polynomial<Rational>> {
        self.as_ring()?.to_polynomial()
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(q) => write!(f, "{q}"),
            Value::Ring(r) => write!(f, "{r}"),
            Value::Onsager(x) => write!(f, "{x}"),
            Value::Loop(x) => write!(f, "{x}"),
            Value::ThreePoint(x) => write!(f, "{x}"),
            Value::V(x) => write!(f, "{x}"),
        }
    }
}

fn domain(msg: impl Into<String>) -> ExprError {
    ExprError::Domain(msg.into())
}

fn atom_value(a: &Atom) -> Result<Value, ExprError> {
    Ok(match *a {
        Atom::A(m) => Value::Onsager(OnsagerElement::a(m)),
        Atom::G(l) => Value::Onsager(OnsagerElement::g(l)),
        Atom::B(m) => Value::Loop(basis_b(m).into_loop()),
        Atom::C(l) => Value::Loop(basis_c(l).into_loop()),
        Atom::E => Value::Loop(LoopElement::e(0)),
        Atom::F => Value::Loop(LoopElement::f(0)),
        Atom::H => Value::Loop(LoopElement::h(0)),
        Atom::X => Value::ThreePoint(ThreePointElement::x()),
        Atom::Y => Value::ThreePoint(ThreePointElement::y()),
        Atom::Z => Value::ThreePoint(ThreePointElement::z()),
        Atom::Gen(i, j) => Value::ThreePoint(psi_generator(i, j).map_err(|e| domain(e.to_string()))?),
        Atom::U(i) => {
            let (u0, u1, u2) = u_elements();
            Value::ThreePoint([u0, u1, u2][i as usize].clone())
        }
        Atom::V(i) => Value::V(VElement::basis(i as usize, 0)),
    })
}

fn scale_element(coeff: &Value, el: &Value) -> Result<Value, ExprError> {
    let c = coeff.as_ring().expect("coefficient");
    let outside = |r: &str| domain(format!("coefficient {c} is not allowed for {r} elements"));
    Ok(match el {
        Value::Onsager(x) => {
            let s = c.as_constant().ok_or_else(|| outside("onsager"))?;
            Value::Onsager(x.scale(&s))
        }
        Value::Loop(x) => Value::Loop(x.mul_poly(&c.to_laurent().ok_or_else(|| outside("loop"))?)),
        Value::ThreePoint(x) => Value::ThreePoint(x.mul_ring(&c)),
        Value::V(x) => Value::V(x.mul_poly(&c.to_polynomial().ok_or_else(|| outside("v"))?)),
        _ => unreachable!("checked by the caller"),
    })
}

fn add_values(a: Value, b: Value, negate_b: bool) -> Result<Value, ExprError> {
    let b = if negate_b { negate(b) } else { b };
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
        (Value::Onsager(x), Value::Onsager(y)) => Value::Onsager(x + y),
        (Value::Loop(x), Value::Loop(y)) => Value::Loop(x + y),
        (Value::ThreePoint(x), Value::ThreePoint(y)) => Value::ThreePoint(x + y),
        (Value::V(x), Value::V(y)) => Value::V(x + y),
        (a, b) => match (a.as_ring(), b.as_ring()) {
            (Some(x), Some(y)) => Value::Ring(x + y),
            _ => return Err(ExprError::Type("mismatched operands".into())),
        },
    })
}

fn negate(v: Value) -> Value {
    let m1 = -Rational::one();
    match v {
        Value::Scalar(x) => Value::Scalar(-x),
        Value::Ring(x) => Value::Ring(-x),
        Value::Onsager(x) => Value::Onsager(-x),
        Value::Loop(x) => Value::Loop(x.scale(&m1)),
        Value::ThreePoint(x) => Value::ThreePoint(-x),
        Value::V(x) => Value::V(-x),
    }
}

fn pow_value(v: Value, n: i64) -> Result<Value, ExprError> {
    match v {
        Value::Scalar(q) => {
            let base = if n < 0 {
                q.inverse().ok_or_else(|| domain("zero has no inverse"))?
            } else {
                q
            };
            let mut acc = Rational::one();
            for _ in 0..n.unsigned_abs() {
                acc = acc * base.clone();
            }
            Ok(Value::Scalar(acc))
        }
        Value::Ring(r) => {
            let base = if n < 0 {
                r.unit_inverse().ok_or_else(|| domain(format!("{r} is not invertible in the ring")))?
            } else {
                r
            };
            let e = u32::try_from(n.unsigned_abs()).map_err(|_| domain("exponent too large"))?;
            Ok(Value::Ring(base.pow(e)))
        }
        _ => Err(ExprError::Type("powers apply to scalars and ring elements".into())),
    }
}

/// Evaluates a type-correct expression.
pub fn eval(e: &Expr) -> Result<Value, ExprError> {
    infer(e)?;
    eval_inner(e)
}

fn eval_inner(e: &Expr) -> Result<Value, ExprError> {
    match e {
        Expr::Num(q) => Ok(Value::Scalar(q.clone())),
        Expr::T(0) => Ok(Value::Ring(ThreePointFraction::t())),
        Expr::T(1) => Ok(Value::Ring(ThreePointFraction::t_prime())),
        Expr::T(_) => Ok(Value::Ring(ThreePointFraction::t_double_prime())),
        Expr::Atom(a) => atom_value(a),
        Expr::Neg(x) => Ok(negate(eval_inner(x)?)),
        Expr::Add(a, b) => add_values(eval_inner(a)?, eval_inner(b)?, false),
        Expr::Sub(a, b) => add_values(eval_inner(a)?, eval_inner(b)?, true),
        Expr::Mul(a, b) => {
            let (x, y) = (eval_inner(a)?, eval_inner(b)?);
            match (x.realization(), y.realization()) {
                (Some(_), Some(_)) => Err(ExprError::Type("elements multiply through brackets".into())),
                (Some(_), None) => scale_element(&y, &x),
                (None, Some(_)) => scale_element(&x, &y),
                (None, None) => match (x, y) {
                    (Value::Scalar(p), Value::Scalar(q)) => Ok(Value::Scalar(p * q)),
                    (x, y) => Ok(Value::Ring(&x.as_ring().unwrap() * &y.as_ring().unwrap())),
                },
            }
        }
        Expr::Pow(a, n) => pow_value(eval_inner(a)?, *n),
        Expr::Bracket(a, b) => Ok(match (eval_inner(a)?, eval_inner(b)?) {
            (Value::Onsager(x), Value::Onsager(y)) => Value::Onsager(x.bracket(&y)),
            (Value::Loop(x), Value::Loop(y)) => Value::Loop(x.bracket(&y)),
            (Value::ThreePoint(x), Value::ThreePoint(y)) => Value::ThreePoint(x.bracket(&y)),
            (Value::V(x), Value::V(y)) => Value::V(x.bracket(&y)),
            _ => return Err(ExprError::Type("brackets take two elements of one realization".into())),
        }),
    }
}

/// Parses, checks and evaluates.
pub fn evaluate(src: &str) -> Result<Value, ExprError> {
    eval(&parse(src)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_bracket() {
        let e = parse("[A_1, A_0]").unwrap();
        assert_eq!(e, Expr::Bracket(Box::new(Expr::Atom(Atom::A(1))), Box::new(Expr::Atom(Atom::A(0)))));
        assert_eq!(evaluate("[A_1, A_0]").unwrap().to_string(), "2*G_1");
    }

    #[test]
    fn parses_sum() {
        let e = parse("1/2*c_3 + b_-2").unwrap();
        assert!(matches!(e, Expr::Add(..)));
        assert_eq!(infer(&e).unwrap(), Kind::Element(Realization::Loop));
    }

    #[test]
    fn rejects_mixed() {
        assert_eq!(
            parse("[A_1, b_0]"),
            Err(ExprError::MixedRealization(Realization::Onsager, Realization::Loop))
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("A_1 + ") {
            Err(ExprError::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("[A_1 A_0]"), Err(ExprError::Syntax { pos: 5, .. })));
        assert!(matches!(parse("X_11"), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse("q"), Err(ExprError::Syntax { .. })));
    }

    #[test]
    fn ring_coefficients() {
        assert_eq!(evaluate("(t - t^-1)*h").unwrap(), Value::Loop(basis_c(1).into_loop()));
        assert_eq!(evaluate("t''*(1 - t)").unwrap(), Value::Ring(ThreePointFraction::one()));
        assert!(matches!(evaluate("t*A_0"), Err(ExprError::Domain(_))));
        assert!(matches!(evaluate("t^-1*v_0"), Err(ExprError::Domain(_))));
        assert_eq!(evaluate("u_2*t").unwrap(), Value::ThreePoint(u_elements().2.mul_ring(&ThreePointFraction::t())));
    }

    #[test]
    fn value_text_reparses() {
        for src in ["[A_1, A_0]", "[G_1, A_0]", "1/2*c_3 + b_-2", "[u_0, u_1]", "[v_0, v_1]", "t''*x + t'*y", "G_1"] {
            let v = evaluate(src).unwrap();
            assert_eq!(evaluate(&v.to_string()).unwrap(), v, "{src} -> {v}");
        }
    }

    #[test]
    fn printer_round_trip() {
        for src in ["-(A_1 + A_2)", "2*(t - 1)^2*x", "(1/2)^3", "--A_0", "A_1 - (A_2 - A_3)", "[e, f]*t^-2"] {
            let e = parse_untyped(src).unwrap();
            assert_eq!(parse_untyped(&e.to_string()).unwrap(), e, "{src} printed as {e}");
        }
    }
}
