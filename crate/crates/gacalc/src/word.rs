//! Brute-force normal forms for generator words.
//!
//! A generator word is an arbitrary finite sequence of generator
//! indices, repetitions and any order allowed. Reduction rewrites it to
//! a strictly increasing word plus a sign using only the generator
//! relations: swapping adjacent distinct letters flips the sign, and an
//! adjacent equal pair cancels to `+1` or `-1` depending on the index
//! sign. This is an independent route to the same answer as the
//! sign-function product, and the two are checked against each other.

use thiserror::Error;

use crate::blade::{BasisBlade, Sign, SignedBlade};
use crate::multivector::Multivector;

/// Longest word `reduce` accepts; rewriting is quadratic in the length.
pub const MAX_REDUCE_LEN: usize = 64;

/// A word over the generators: any finite sequence of indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GeneratorWord {
    letters: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("generator word of length {len} exceeds the reduction bound {MAX_REDUCE_LEN}")]
pub struct WordTooLong {
    pub len: usize,
}

impl GeneratorWord {
    pub fn new(letters: impl IntoIterator<Item = i64>) -> Self {
        GeneratorWord {
            letters: letters.into_iter().collect(),
        }
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation of two words.
    pub fn concat(&self, rhs: &GeneratorWord) -> GeneratorWord {
        GeneratorWord::new(self.letters.iter().chain(&rhs.letters).copied())
    }

    /// Rewrites the word to its normal form: repeatedly cancel adjacent
    /// equal letters (eagerly) and swap the rightmost out-of-order
    /// adjacent pair (flipping the sign) until the word is strictly
    /// increasing.
    pub fn reduce(&self) -> Result<SignedBlade, WordTooLong> {
        if self.len() > MAX_REDUCE_LEN {
            return Err(WordTooLong { len: self.len() });
        }
        Ok(reduce_bubble(&self.letters))
    }

    /// Alternative reduction that inserts letters left to right into an
    /// already-sorted prefix. Agrees with `reduce` on every word; kept
    /// as a cross-check that the rewrite order does not matter.
    pub fn reduce_by_insertion(&self) -> Result<SignedBlade, WordTooLong> {
        if self.len() > MAX_REDUCE_LEN {
            return Err(WordTooLong { len: self.len() });
        }
        Ok(reduce_insertion(&self.letters))
    }

    /// Left-to-right product of the generators as multivectors,
    /// starting from the unit.
    pub fn to_multivector(&self) -> Multivector {
        self.letters.iter().fold(Multivector::one(), |acc, &i| {
            acc.product(&Multivector::basis_vector(i))
        })
    }
}

impl From<&BasisBlade> for GeneratorWord {
    fn from(blade: &BasisBlade) -> Self {
        GeneratorWord::new(blade.indices().iter().copied())
    }
}

fn cancellation_sign(index: i64) -> Sign {
    if index >= 0 {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

fn reduce_bubble(letters: &[i64]) -> SignedBlade {
    let mut word = letters.to_vec();
    let mut sign = Sign::Pos;
    loop {
        if let Some(k) = word.windows(2).position(|p| p[0] == p[1]) {
            sign = sign * cancellation_sign(word[k]);
            word.drain(k..k + 2);
            continue;
        }
        match word.windows(2).rposition(|p| p[0] > p[1]) {
            Some(k) => {
                word.swap(k, k + 1);
                sign = -sign;
            }
            None => break,
        }
    }
    SignedBlade {
        sign,
        blade: BasisBlade::new(word).expect("reduced word is strictly increasing"),
    }
}

fn reduce_insertion(letters: &[i64]) -> SignedBlade {
    let mut sorted: Vec<i64> = Vec::with_capacity(letters.len());
    let mut sign = Sign::Pos;
    for &letter in letters {
        // The letter moves left past every strictly larger element, one
        // sign flip per swap.
        let pos = sorted.partition_point(|&y| y <= letter);
        sign = sign * Sign::from_parity((sorted.len() - pos) as u64);
        if pos > 0 && sorted[pos - 1] == letter {
            sign = sign * cancellation_sign(letter);
            sorted.remove(pos - 1);
        } else {
            sorted.insert(pos, letter);
        }
    }
    SignedBlade {
        sign,
        blade: BasisBlade::new(sorted).expect("insertion keeps the word strictly increasing"),
    }
}
