//! Tokenizer for the calculator's expression language.
//!
//! Blade literals like `e[-1,0,3]` are single tokens, so a `-` inside
//! the brackets is part of the index and never collides with binary
//! minus. Scientific notation only claims an `e` when an exponent
//! actually follows, which keeps `2e3` (a number) and `2e[3]` (a number
//! then a blade) distinct.

use thiserror::Error;

use crate::blade::BasisBlade;

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    Number(f64),
    Blade(BasisBlade),
    Ident,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

/// One lexeme with its byte offset in the input.
#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub offset: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum LexErrorKind {
    #[error("unrecognized character {0:?}")]
    UnrecognizedChar(char),
    #[error("duplicate index {0} in blade literal")]
    DuplicateIndex(i64),
    #[error("expected a digit after the decimal point")]
    ExpectedDigit,
    #[error("expected an index in the blade literal")]
    ExpectedIndex,
    #[error("expected ',' or ']' in the blade literal")]
    ExpectedCommaOrBracket,
    #[error("number literal does not fit a finite double")]
    NumberOutOfRange,
    #[error("blade index does not fit a 64-bit integer")]
    IndexOutOfRange,
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("byte {offset}: {kind}")]
pub struct LexError {
    pub offset: usize,
    pub kind: LexErrorKind,
}

fn err(offset: usize, kind: LexErrorKind) -> LexError {
    LexError { offset, kind }
}

/// Splits the input into tokens, ending with an `End` token at the
/// input's length. Whitespace separates tokens and is dropped.
pub fn lex(input: &str) -> Result<Vec<Token>, LexError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let kind = match bytes[pos] {
            b'+' => {
                pos += 1;
                TokenKind::Plus
            }
            b'-' => {
                pos += 1;
                TokenKind::Minus
            }
            b'*' => {
                pos += 1;
                TokenKind::Star
            }
            b'^' => {
                pos += 1;
                TokenKind::Caret
            }
            b'(' => {
                pos += 1;
                TokenKind::LParen
            }
            b')' => {
                pos += 1;
                TokenKind::RParen
            }
            b'0'..=b'9' => lex_number(input, start, &mut pos)?,
            b'a'..=b'z' | b'A'..=b'Z' => lex_word(input, start, &mut pos)?,
            _ => {
                let ch = input[start..].chars().next().unwrap();
                return Err(err(start, LexErrorKind::UnrecognizedChar(ch)));
            }
        };
        tokens.push(Token {
            kind,
            lexeme: input[start..pos].to_string(),
            offset: start,
        });
    }
    tokens.push(Token {
        kind: TokenKind::End,
        lexeme: String::new(),
        offset: input.len(),
    });
    Ok(tokens)
}

fn eat_digits(bytes: &[u8], pos: &mut usize) -> usize {
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    *pos - start
}

// NUMBER := DIGITS ('.' DIGITS)? (('e'|'E') ('+'|'-')? DIGITS)?
fn lex_number(input: &str, start: usize, pos: &mut usize) -> Result<TokenKind, LexError> {
    let bytes = input.as_bytes();
    eat_digits(bytes, pos);
    if bytes.get(*pos) == Some(&b'.') {
        *pos += 1;
        if eat_digits(bytes, pos) == 0 {
            return Err(err(*pos, LexErrorKind::ExpectedDigit));
        }
    }
    // Claim an exponent only when one is really there; otherwise the
    // 'e' belongs to the next token.
    if matches!(bytes.get(*pos), Some(b'e' | b'E')) {
        let mut probe = *pos + 1;
        if matches!(bytes.get(probe), Some(b'+' | b'-')) {
            probe += 1;
        }
        if bytes.get(probe).is_some_and(u8::is_ascii_digit) {
            *pos = probe;
            eat_digits(bytes, pos);
        }
    }
    let value: f64 = input[start..*pos]
        .parse()
        .map_err(|_| err(start, LexErrorKind::NumberOutOfRange))?;
    if !value.is_finite() {
        return Err(err(start, LexErrorKind::NumberOutOfRange));
    }
    Ok(TokenKind::Number(value))
}

fn lex_word(input: &str, start: usize, pos: &mut usize) -> Result<TokenKind, LexError> {
    let bytes = input.as_bytes();
    while *pos < bytes.len() && bytes[*pos].is_ascii_alphanumeric() {
        *pos += 1;
    }
    if &input[start..*pos] == "e" && bytes.get(*pos) == Some(&b'[') {
        return lex_blade(input, pos);
    }
    Ok(TokenKind::Ident)
}

// BLADE := 'e' '[' (INT (',' INT)*)? ']', with no interior whitespace.
fn lex_blade(input: &str, pos: &mut usize) -> Result<TokenKind, LexError> {
    let bytes = input.as_bytes();
    *pos += 1; // '['
    let mut indices: Vec<i64> = Vec::new();
    if bytes.get(*pos) != Some(&b']') {
        loop {
            let index_start = *pos;
            if bytes.get(*pos) == Some(&b'-') {
                *pos += 1;
            }
            if eat_digits(bytes, pos) == 0 {
                return Err(err(index_start, LexErrorKind::ExpectedIndex));
            }
            let index: i64 = input[index_start..*pos]
                .parse()
                .map_err(|_| err(index_start, LexErrorKind::IndexOutOfRange))?;
            if indices.contains(&index) {
                return Err(err(index_start, LexErrorKind::DuplicateIndex(index)));
            }
            indices.push(index);
            match bytes.get(*pos) {
                Some(b',') => *pos += 1,
                Some(b']') => break,
                _ => return Err(err(*pos, LexErrorKind::ExpectedCommaOrBracket)),
            }
        }
    }
    *pos += 1; // ']'
    let blade = BasisBlade::new(indices).expect("duplicates were rejected above");
    Ok(TokenKind::Blade(blade))
}
