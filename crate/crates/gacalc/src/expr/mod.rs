//! The calculator's expression language: lexer, parser and evaluator.
//!
//! An expression evaluates to a [`Multivector`]. The only free variable
//! is `ans`, which the REPL binds to the previous result; everywhere
//! else it is an error.

mod lexer;
mod parser;

pub use lexer::{lex, LexError, LexErrorKind, Token, TokenKind};
pub use parser::{parse, ParseError};

use thiserror::Error;

use crate::blade::BasisBlade;
use crate::multivector::Multivector;

/// Abstract syntax of an expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Scalar(f64),
    Blade(BasisBlade),
    Ans,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Every blade literal in the tree, in source order.
    pub fn blade_literals(&self) -> Vec<&BasisBlade> {
        let mut out = Vec::new();
        self.collect_blades(&mut out);
        out
    }

    fn collect_blades<'a>(&'a self, out: &mut Vec<&'a BasisBlade>) {
        match self {
            Expr::Scalar(_) | Expr::Ans => {}
            Expr::Blade(blade) => out.push(blade),
            Expr::Neg(inner) | Expr::Pow(inner, _) => inner.collect_blades(out),
            Expr::Add(lhs, rhs) | Expr::Sub(lhs, rhs) | Expr::Mul(lhs, rhs) => {
                lhs.collect_blades(out);
                rhs.collect_blades(out);
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("no value bound to 'ans' yet")]
    AnsUnbound,
}

/// A lexing or parsing failure, either way carrying a byte offset.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SyntaxError {
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl SyntaxError {
    pub fn offset(&self) -> usize {
        match self {
            SyntaxError::Lex(e) => e.offset,
            SyntaxError::Parse(e) => e.offset,
        }
    }
}

/// Lexes and parses in one step.
pub fn parse_str(input: &str) -> Result<Expr, SyntaxError> {
    Ok(parse(&lex(input)?)?)
}

/// Evaluates an expression with `ans` unbound.
pub fn eval(expr: &Expr) -> Result<Multivector, EvalError> {
    eval_with(expr, None)
}

/// Evaluates an expression, resolving `ans` to the given value.
pub fn eval_with(expr: &Expr, ans: Option<&Multivector>) -> Result<Multivector, EvalError> {
    match expr {
        Expr::Scalar(value) => Ok(Multivector::scalar(*value)),
        Expr::Blade(blade) => Ok(Multivector::from_blade(blade.clone())),
        Expr::Ans => ans.cloned().ok_or(EvalError::AnsUnbound),
        Expr::Neg(inner) => Ok(-eval_with(inner, ans)?),
        Expr::Add(lhs, rhs) => Ok(eval_with(lhs, ans)? + eval_with(rhs, ans)?),
        Expr::Sub(lhs, rhs) => Ok(eval_with(lhs, ans)? - eval_with(rhs, ans)?),
        Expr::Mul(lhs, rhs) => Ok(eval_with(lhs, ans)?.product(&eval_with(rhs, ans)?)),
        Expr::Pow(base, exponent) => Ok(power(&eval_with(base, ans)?, *exponent)),
    }
}

// Square-and-multiply; the product is associative, so this agrees with
// the n-fold product while doing O(log n) multiplications.
fn power(base: &Multivector, mut exponent: u32) -> Multivector {
    let mut result = Multivector::one();
    let mut square = base.clone();
    while exponent > 0 {
        if exponent & 1 == 1 {
            result = result.product(&square);
        }
        exponent >>= 1;
        if exponent > 0 {
            square = square.product(&square);
        }
    }
    result
}
