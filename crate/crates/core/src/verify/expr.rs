//! A small language for quadratic relations among named operators.
//!
//! ```text
//! relation := expr '=' expr
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := power (('*' | '/' | juxtaposition) power)*
//! power    := atom ['^' integer]
//! atom     := integer | identifier | '(' expr ')' | '[' expr ',' expr ']' | '{' expr ',' expr '}'
//! ```
//!
//! Identifiers resolve to operators or scalars. A scalar standing alone in
//! a sum means that multiple of the identity.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::{int, Rational};
use crate::ops::DifferenceOperator;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Rational),
    Op(DifferenceOperator),
}

impl Value {
    fn into_op(self) -> DifferenceOperator {
        match self {
            Value::Scalar(c) => DifferenceOperator::scalar(c),
            Value::Op(op) => op,
        }
    }

    fn add(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a + b),
            (a, b) => Value::Op(&a.into_op() + &b.into_op()),
        }
    }

    fn neg(self) -> Value {
        match self {
            Value::Scalar(a) => Value::Scalar(-a),
            Value::Op(op) => Value::Op(-op),
        }
    }

    fn mul(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a * b),
            (Value::Scalar(a), Value::Op(op)) | (Value::Op(op), Value::Scalar(a)) => Value::Op(op.scale(&a)),
            (Value::Op(a), Value::Op(b)) => Value::Op(a.compose(&b)),
        }
    }
}

/// Named operators and scalars available to relation texts.
#[derive(Clone, Debug, Default)]
pub struct Env {
    ops: BTreeMap<String, DifferenceOperator>,
    scalars: BTreeMap<String, Rational>,
}

impl Env {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn op(mut self, name: &str, op: DifferenceOperator) -> Self {
        self.ops.insert(name.to_string(), op);
        self
    }

    pub fn scalar(mut self, name: &str, value: Rational) -> Self {
        self.scalars.insert(name.to_string(), value);
        self
    }

    pub fn insert_op(&mut self, name: &str, op: DifferenceOperator) {
        self.ops.insert(name.to_string(), op);
    }

    pub fn lookup(&self, name: &str) -> Result<Value> {
        if let Some(op) = self.ops.get(name) {
            return Ok(Value::Op(op.clone()));
        }
        if let Some(c) = self.scalars.get(name) {
            return Ok(Value::Scalar(c.clone()));
        }
        Err(Error::UnknownOperator(name.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(i64),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token::Int(
                s.parse()
                    .map_err(|_| Error::Parse(format!("integer `{s}` too large")))?,
            ));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()[]{},=".contains(c) {
            out.push(Token::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}` in `{text}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    env: &'a Env,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected `{c}` at token {}", self.pos)))
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(self.term()?);
            } else if self.eat('-') {
                acc = acc.add(self.term()?.neg());
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Token::Int(_))
                | Some(Token::Ident(_))
                | Some(Token::Sym('('))
                | Some(Token::Sym('['))
                | Some(Token::Sym('{'))
        )
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(self.power()?);
            } else if self.eat('/') {
                match self.power()? {
                    Value::Scalar(d) if !d.is_zero() => acc = acc.mul(Value::Scalar(d.recip())),
                    Value::Scalar(_) => return Err(Error::DivisionByZero("scalar")),
                    Value::Op(_) => return Err(Error::Parse("division by an operator".into())),
                }
            } else if self.starts_atom() {
                acc = acc.mul(self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let n = match self.tokens.get(self.pos) {
            Some(Token::Int(n)) => *n,
            _ => return Err(Error::Parse("exponent must be a nonnegative integer".into())),
        };
        self.pos += 1;
        Ok(match base {
            Value::Scalar(c) => Value::Scalar((0..n).fold(int(1), |acc, _| acc * &c)),
            Value::Op(op) => Value::Op(op.pow(n as u32)),
        })
    }

    fn pair(&mut self, close: char) -> Result<(Value, Value)> {
        let a = self.expr()?;
        self.expect(',')?;
        let b = self.expr()?;
        self.expect(close)?;
        Ok((a, b))
    }

    fn atom(&mut self) -> Result<Value> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of expression".into()))?;
        self.pos += 1;
        match tok {
            Token::Int(n) => Ok(Value::Scalar(int(n))),
            Token::Ident(name) => self.env.lookup(&name),
            Token::Sym('(') => {
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Token::Sym('[') => {
                let (a, b) = self.pair(']')?;
                Ok(Value::Op(a.into_op().commutator(&b.into_op())))
            }
            Token::Sym('{') => {
                let (a, b) = self.pair('}')?;
                Ok(Value::Op(a.into_op().anticommutator(&b.into_op())))
            }
            Token::Sym(c) => Err(Error::Parse(format!("unexpected `{c}`"))),
        }
    }
}

/// Evaluates an expression to an operator.
pub fn eval_expr(text: &str, env: &Env) -> Result<DifferenceOperator> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        env,
    };
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("trailing input in `{text}`")));
    }
    Ok(v.into_op())
}

/// Evaluates `lhs = rhs` to the operator `lhs − rhs`.
pub fn relation_residual(text: &str, env: &Env) -> Result<DifferenceOperator> {
    let (lhs, rhs) = text
        .split_once('=')
        .ok_or_else(|| Error::Parse(format!("relation `{text}` has no `=`")))?;
    Ok(&eval_expr(lhs, env)? - &eval_expr(rhs, env)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;
    use crate::ops::sheun_basis;

    fn env() -> Env {
        let b = sheun_basis();
        Env::new()
            .op("L", b.l)
            .op("M1", b.m1)
            .op("M2", b.m2)
            .scalar("e1", rat(3, 2))
    }

    #[test]
    fn brackets_and_powers() {
        let e = env();
        assert!(relation_residual("[L,M1] = 2L^2", &e).unwrap().is_zero());
        assert!(relation_residual("[L, M1] = 2 * L * L", &e).unwrap().is_zero());
        assert!(relation_residual("{L,L} = 2L^2", &e).unwrap().is_zero());
        assert!(!relation_residual("[L,M1] = 3L^2", &e).unwrap().is_zero());
    }

    #[test]
    fn scalars_become_identity_multiples() {
        let e = env();
        assert!(relation_residual("M1^2 - {M2,L} + 3L^2 = 1", &e).unwrap().is_zero());
        assert!(relation_residual("2e1 - 3 = 0", &e).unwrap().is_zero());
        assert!(relation_residual("(e1 - 1/2) L = L", &e).unwrap().is_zero());
        assert!(relation_residual("1/2 {M1, L} - 1/2 {L, M1} = 0", &e)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn errors_are_reported() {
        let e = env();
        assert_eq!(eval_expr("Q + L", &e), Err(Error::UnknownOperator("Q".into())));
        assert!(eval_expr("[L, M1", &e).is_err());
        assert!(relation_residual("L + M1", &e).is_err());
        assert!(eval_expr("L / M1", &e).is_err());
        assert!(eval_expr("L / 0", &e).is_err());
    }
}
