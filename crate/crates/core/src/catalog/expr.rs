//! A small expression language for identities between products in an
//! axis-pair algebra.
//!
//! Juxtaposition multiplies (`bh (x0 y0)`), `<u,w>` is the form, `(e)_0`,
//! `(e)_h`, `(e)_1` project onto the eigenspaces of `a`, `L` is `(a,b)`,
//! `comm(p,q,r) = p(qr) - q(pr)`, `P(p,q)` and `Q(p)` are the polynomials of
//! the axis `a`. Sides of an equation are separated by `=` (chains allowed),
//! equations by `;`.

use std::fmt;

use crate::scalar::Scalar;

use super::Context;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Var {
    A,
    B,
    B0,
    Bh,
    X,
    Y,
    X0,
    Xh,
    Y0,
    Yh,
    V,
}

impl Var {
    fn from_name(s: &str) -> Option<Var> {
        Some(match s {
            "a" => Var::A,
            "b" => Var::B,
            "b0" => Var::B0,
            "bh" => Var::Bh,
            "x" => Var::X,
            "y" => Var::Y,
            "x0" => Var::X0,
            "xh" => Var::Xh,
            "y0" => Var::Y0,
            "yh" => Var::Yh,
            "v" => Var::V,
            _ => return None,
        })
    }

    pub(crate) const COUNT: usize = 11;

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Proj {
    One,
    Zero,
    Half,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Op {
    Mul,
    Div,
}

#[derive(Debug, Clone)]
pub(crate) enum Expr {
    Num(i64),
    Lambda,
    Var(Var),
    Form(Box<Expr>, Box<Expr>),
    Project(Box<Expr>, Proj),
    Comm(Box<Expr>, Box<Expr>, Box<Expr>),
    P(Box<Expr>, Box<Expr>),
    Q(Box<Expr>),
    Sum(Vec<(bool, Expr)>),
    Chain(Vec<(Op, Expr)>),
}

/// One `=` chain; residuals are the differences of neighbouring sides.
pub(crate) type Equation = Vec<Expr>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub pos: usize,
    pub reason: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: {}", self.pos, self.reason)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(i64),
    Ident(String),
    Proj(Proj),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = src[start..i]
                .parse()
                .map_err(|_| SyntaxError { pos: start, reason: "number too large".into() })?;
            out.push((start, Tok::Num(n)));
        } else if c == '_' {
            let p = match bytes.get(i + 1).map(|&b| b as char) {
                Some('0') => Proj::Zero,
                Some('h') => Proj::Half,
                Some('1') => Proj::One,
                _ => return Err(SyntaxError { pos: i, reason: "expected _0, _h or _1".into() }),
            };
            out.push((i, Tok::Proj(p)));
            i += 2;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if "()<>,+-*/=;".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(SyntaxError { pos: i, reason: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, reason: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError { pos: self.pos(), reason: reason.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected {c:?}"))
        }
    }

    fn equations(&mut self) -> Result<Vec<Equation>, SyntaxError> {
        let mut eqs = Vec::new();
        loop {
            let mut sides = vec![self.sum()?];
            while self.eat('=') {
                sides.push(self.sum()?);
            }
            if sides.len() < 2 {
                return self.err("equation needs at least two sides");
            }
            eqs.push(sides);
            if !self.eat(';') {
                break;
            }
        }
        if self.at != self.toks.len() {
            return self.err("trailing input");
        }
        Ok(eqs)
    }

    fn sum(&mut self) -> Result<Expr, SyntaxError> {
        let mut terms = Vec::new();
        let mut negative = self.eat('-');
        loop {
            terms.push((negative, self.chain()?));
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                break;
            }
        }
        if terms.len() == 1 && !terms[0].0 {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(Expr::Sum(terms))
    }

    fn starts_factor(&self) -> bool {
        match self.peek() {
            Some(Tok::Num(_)) | Some(Tok::Ident(_)) => true,
            Some(Tok::Sym(c)) => *c == '(' || *c == '<',
            _ => false,
        }
    }

    fn chain(&mut self) -> Result<Expr, SyntaxError> {
        let mut factors = vec![(Op::Mul, self.postfix()?)];
        loop {
            if self.eat('*') {
                factors.push((Op::Mul, self.postfix()?));
            } else if self.eat('/') {
                factors.push((Op::Div, self.postfix()?));
            } else if self.starts_factor() {
                factors.push((Op::Mul, self.postfix()?));
            } else {
                break;
            }
        }
        if factors.len() == 1 {
            return Ok(factors.pop().expect("one factor").1);
        }
        Ok(Expr::Chain(factors))
    }

    fn postfix(&mut self) -> Result<Expr, SyntaxError> {
        let mut e = self.atom()?;
        while let Some(Tok::Proj(p)) = self.peek() {
            let p = *p;
            self.at += 1;
            e = Expr::Project(Box::new(e), p);
        }
        Ok(e)
    }

    fn args(&mut self, n: usize) -> Result<Vec<Expr>, SyntaxError> {
        self.expect('(')?;
        let mut out = vec![self.sum()?];
        while out.len() < n {
            self.expect(',')?;
            out.push(self.sum()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        let Some((_, tok)) = self.toks.get(self.at).cloned() else {
            return self.err("unexpected end of input");
        };
        match tok {
            Tok::Num(n) => {
                self.at += 1;
                Ok(Expr::Num(n))
            }
            Tok::Sym('(') => {
                self.at += 1;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Sym('<') => {
                self.at += 1;
                let u = self.sum()?;
                self.expect(',')?;
                let w = self.sum()?;
                self.expect('>')?;
                Ok(Expr::Form(Box::new(u), Box::new(w)))
            }
            Tok::Ident(name) => {
                self.at += 1;
                match name.as_str() {
                    "L" => Ok(Expr::Lambda),
                    "comm" => {
                        let mut a = self.args(3)?.into_iter();
                        let (p, q, r) = (a.next(), a.next(), a.next());
                        Ok(Expr::Comm(
                            Box::new(p.expect("arity")),
                            Box::new(q.expect("arity")),
                            Box::new(r.expect("arity")),
                        ))
                    }
                    "P" => {
                        let mut a = self.args(2)?.into_iter();
                        let (p, q) = (a.next(), a.next());
                        Ok(Expr::P(Box::new(p.expect("arity")), Box::new(q.expect("arity"))))
                    }
                    "Q" => {
                        let p = self.args(1)?.pop().expect("arity");
                        Ok(Expr::Q(Box::new(p)))
                    }
                    _ => match Var::from_name(&name) {
                        Some(v) => Ok(Expr::Var(v)),
                        None => {
                            self.at -= 1;
                            self.err(format!("unknown name {name:?}"))
                        }
                    },
                }
            }
            Tok::Sym(c) => self.err(format!("unexpected {c:?}")),
            Tok::Proj(_) => self.err("projection without operand"),
        }
    }
}

pub(crate) fn parse(src: &str) -> Result<Vec<Equation>, SyntaxError> {
    let toks = tokenize(src)?;
    Parser { toks, at: 0, end: src.len() }.equations()
}

/// Scalars and elements (as coordinate vectors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Value {
    Scalar(Scalar),
    Element(Vec<Scalar>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum EvalError {
    Unbound(Var),
    Type(&'static str),
    TooManyFactors,
    DivisionByZero,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Unbound(v) => write!(f, "variable {v:?} is not bound by the slots"),
            EvalError::Type(what) => write!(f, "type error: {what}"),
            EvalError::TooManyFactors => write!(f, "product of more than two elements is ambiguous"),
            EvalError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

fn element(v: Value, what: &'static str) -> Result<Vec<Scalar>, EvalError> {
    match v {
        Value::Element(e) => Ok(e),
        Value::Scalar(_) => Err(EvalError::Type(what)),
    }
}

impl Expr {
    pub(crate) fn eval(&self, ctx: &Context<'_>) -> Result<Value, EvalError> {
        let alg = ctx.algebra;
        let f = alg.field();
        Ok(match self {
            Expr::Num(n) => Value::Scalar(f.from_i64(*n)),
            Expr::Lambda => Value::Scalar(ctx.lambda.clone()),
            Expr::Var(v) => Value::Element(ctx.var(*v)?.to_vec()),
            Expr::Form(u, w) => {
                let u = element(u.eval(ctx)?, "form of a scalar")?;
                let w = element(w.eval(ctx)?, "form of a scalar")?;
                Value::Scalar(alg.form_raw(&u, &w))
            }
            Expr::Project(e, p) => {
                let x = element(e.eval(ctx)?, "projection of a scalar")?;
                let (alpha, x0, xh) = ctx.cert_a.decompose_raw(&x);
                Value::Element(match p {
                    Proj::One => alg.scale_raw(&alpha, ctx.a()),
                    Proj::Zero => x0,
                    Proj::Half => xh,
                })
            }
            Expr::Comm(p, q, r) => {
                let p = element(p.eval(ctx)?, "comm of a scalar")?;
                let q = element(q.eval(ctx)?, "comm of a scalar")?;
                let r = element(r.eval(ctx)?, "comm of a scalar")?;
                let left = alg.mul_raw(&p, &alg.mul_raw(&q, &r));
                let right = alg.mul_raw(&q, &alg.mul_raw(&p, &r));
                Value::Element(alg.sub_raw(&left, &right))
            }
            Expr::P(x, y) => {
                let x = element(x.eval(ctx)?, "P of a scalar")?;
                let y = element(y.eval(ctx)?, "P of a scalar")?;
                Value::Element(ctx.p_a(&x, &y))
            }
            Expr::Q(x) => {
                let x = element(x.eval(ctx)?, "Q of a scalar")?;
                Value::Element(ctx.q_a(&x))
            }
            Expr::Sum(terms) => {
                let mut acc: Option<Value> = None;
                for (negative, t) in terms {
                    let mut v = t.eval(ctx)?;
                    if *negative {
                        v = match v {
                            Value::Scalar(s) => Value::Scalar(f.neg(&s)),
                            Value::Element(e) => Value::Element(alg.scale_raw(&f.from_i64(-1), &e)),
                        };
                    }
                    acc = Some(match acc {
                        None => v,
                        Some(prev) => add(ctx, prev, v)?,
                    });
                }
                acc.expect("sums are nonempty")
            }
            Expr::Chain(factors) => {
                let mut coeff = f.one();
                let mut elems: Vec<Vec<Scalar>> = Vec::new();
                for (op, e) in factors {
                    match (op, e.eval(ctx)?) {
                        (Op::Mul, Value::Scalar(s)) => coeff = f.mul(&coeff, &s),
                        (Op::Div, Value::Scalar(s)) => {
                            coeff = f.div(&coeff, &s).map_err(|_| EvalError::DivisionByZero)?;
                        }
                        (Op::Mul, Value::Element(x)) => {
                            if elems.len() == 2 {
                                return Err(EvalError::TooManyFactors);
                            }
                            elems.push(x);
                        }
                        (Op::Div, Value::Element(_)) => {
                            return Err(EvalError::Type("division by an element"))
                        }
                    }
                }
                match elems.len() {
                    0 => Value::Scalar(coeff),
                    1 => Value::Element(alg.scale_raw(&coeff, &elems[0])),
                    _ => Value::Element(alg.scale_raw(&coeff, &alg.mul_raw(&elems[0], &elems[1]))),
                }
            }
        })
    }
}

/// Adds two values; a literal zero scalar may stand in for the zero element.
fn add(ctx: &Context<'_>, x: Value, y: Value) -> Result<Value, EvalError> {
    let alg = ctx.algebra;
    let f = alg.field();
    match (x, y) {
        (Value::Scalar(s), Value::Scalar(t)) => Ok(Value::Scalar(f.add(&s, &t))),
        (Value::Element(e), Value::Element(g)) => Ok(Value::Element(alg.add_raw(&e, &g))),
        (Value::Scalar(s), Value::Element(e)) | (Value::Element(e), Value::Scalar(s)) => {
            if f.is_zero(&s) {
                Ok(Value::Element(e))
            } else {
                Err(EvalError::Type("sum of a nonzero scalar and an element"))
            }
        }
    }
}

/// `x - y` for the two sides of an equation.
pub(crate) fn difference(ctx: &Context<'_>, x: Value, y: Value) -> Result<Value, EvalError> {
    let alg = ctx.algebra;
    let f = alg.field();
    let neg = match y {
        Value::Scalar(s) => Value::Scalar(f.neg(&s)),
        Value::Element(e) => Value::Element(alg.scale_raw(&f.from_i64(-1), &e)),
    };
    add(ctx, x, neg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_chains_and_projections() {
        let eqs = parse("(bh xh)_0 b0 = 1/2 (1 - L) <b,xh> b0 ; a = a = a").unwrap();
        assert_eq!(eqs.len(), 2);
        assert_eq!(eqs[0].len(), 2);
        assert_eq!(eqs[1].len(), 3);
        assert!(matches!(eqs[0][0], Expr::Chain(ref f) if f.len() == 2));
    }

    #[test]
    fn reports_positions() {
        assert_eq!(parse("a + ").unwrap_err().pos, 4);
        assert_eq!(parse("a = z").unwrap_err().pos, 4);
        assert_eq!(parse("a").unwrap_err().reason, "equation needs at least two sides");
        assert!(parse("a = (b").is_err());
        assert!(parse("a = b_2").is_err());
    }
}
