//! Recursive-descent parser for the expression grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' NAT)?
//! atom   := NUMBER | BLADE | 'ans' | '(' expr ')'
//! ```
//!
//! There is no implicit multiplication: `e[0] e[1]` is a parse error,
//! not a product.

use std::fmt;

use super::lexer::{Token, TokenKind};
use super::Expr;

/// Token kinds that may start a factor.
const VALUE_START: &[&str] = &["a number", "a blade literal", "'ans'", "'-'", "'('"];

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "byte {}: expected ", self.offset)?;
        for (n, item) in self.expected.iter().enumerate() {
            if n > 0 {
                f.write_str(if n + 1 == self.expected.len() {
                    " or "
                } else {
                    ", "
                })?;
            }
            f.write_str(item)?;
        }
        write!(f, ", found {}", self.found)
    }
}

impl std::error::Error for ParseError {}

fn describe(token: &Token) -> String {
    match token.kind {
        TokenKind::Number(_) => format!("number '{}'", token.lexeme),
        TokenKind::Blade(_) => format!("blade literal '{}'", token.lexeme),
        TokenKind::Ident => format!("identifier '{}'", token.lexeme),
        TokenKind::Plus => "'+'".to_string(),
        TokenKind::Minus => "'-'".to_string(),
        TokenKind::Star => "'*'".to_string(),
        TokenKind::Caret => "'^'".to_string(),
        TokenKind::LParen => "'('".to_string(),
        TokenKind::RParen => "')'".to_string(),
        TokenKind::End => "end of input".to_string(),
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl Parser<'_> {
    fn current(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> &Token {
        let token = &self.tokens[self.pos];
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        token
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.current().offset,
            expected: expected.to_vec(),
            found: describe(self.current()),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut node = self.term()?;
        loop {
            match self.current().kind {
                TokenKind::Plus => {
                    self.bump();
                    node = Expr::Add(node.into(), self.term()?.into());
                }
                TokenKind::Minus => {
                    self.bump();
                    node = Expr::Sub(node.into(), self.term()?.into());
                }
                _ => return Ok(node),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut node = self.factor()?;
        while self.current().kind == TokenKind::Star {
            self.bump();
            node = Expr::Mul(node.into(), self.factor()?.into());
        }
        Ok(node)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.current().kind == TokenKind::Minus {
            self.bump();
            return Ok(Expr::Neg(self.factor()?.into()));
        }
        let atom = self.atom()?;
        if self.current().kind == TokenKind::Caret {
            self.bump();
            return Ok(Expr::Pow(atom.into(), self.natural()?));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match &self.current().kind {
            TokenKind::Number(value) => {
                let value = *value;
                self.bump();
                Ok(Expr::Scalar(value))
            }
            TokenKind::Blade(blade) => {
                let blade = blade.clone();
                self.bump();
                Ok(Expr::Blade(blade))
            }
            TokenKind::Ident if self.current().lexeme == "ans" => {
                self.bump();
                Ok(Expr::Ans)
            }
            TokenKind::LParen => {
                self.bump();
                let inner = self.expr()?;
                if self.current().kind != TokenKind::RParen {
                    return Err(self.error(&["')'"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(VALUE_START)),
        }
    }

    // The exponent must be a plain digit string; '2.0', '1e2' and '-1'
    // are all rejected here even though they are fine as numbers.
    fn natural(&mut self) -> Result<u32, ParseError> {
        if let TokenKind::Number(_) = self.current().kind {
            let lexeme = &self.current().lexeme;
            if lexeme.bytes().all(|b| b.is_ascii_digit()) {
                let value = lexeme
                    .parse()
                    .map_err(|_| self.error(&["an exponent that fits in 32 bits"]))?;
                self.bump();
                return Ok(value);
            }
        }
        Err(self.error(&["a nonnegative integer exponent"]))
    }
}

/// Parses a full token stream (as produced by `lex`, ending in `End`)
/// into an expression tree.
pub fn parse(tokens: &[Token]) -> Result<Expr, ParseError> {
    assert!(
        matches!(tokens.last().map(|t| &t.kind), Some(TokenKind::End)),
        "token stream must end with an End token",
    );
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.expr()?;
    if parser.current().kind != TokenKind::End {
        return Err(parser.error(&["'+'", "'-'", "end of input"]));
    }
    Ok(expr)
}
