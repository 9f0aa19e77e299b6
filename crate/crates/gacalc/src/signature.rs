//! Finite-signature views over the one big algebra.
//!
//! A signature `(p, q)` selects the subalgebra generated by `e_i` for
//! `-q <= i < p`: `p` generators squaring to `+1` (indices `0..p-1`) and
//! `q` squaring to `-1` (indices `-q..-1`). Membership is a predicate on
//! multivectors of the ambient algebra rather than a separate algebra
//! instance, so the views nest: everything in `(p, q)` also lies in any
//! `(p', q')` with `p <= p'` and `q <= q'`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::blade::{blade_product, BasisBlade, SignedBlade};
use crate::multivector::Multivector;

/// Largest `p + q` for which `dimension` can report a count.
pub const MAX_DIMENSION_BITS: u32 = 62;
/// Largest `p + q` for which `basis` will enumerate blades.
pub const MAX_BASIS_BITS: u32 = 20;
/// Largest `p + q` for which `cayley_table` will tabulate products.
pub const MAX_TABLE_BITS: u32 = 8;

/// Counts of positive-squaring (`p`) and negative-squaring (`q`)
/// generators; the index window is exactly `{-q, ..., p-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: u32,
    q: u32,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SignatureError {
    #[error("GA({p},{q}) dimension 2^{} exceeds the representable bound (p+q <= {MAX_DIMENSION_BITS})", p + q)]
    DimensionOverflow { p: u32, q: u32 },
    #[error("GA({p},{q}) basis has 2^{} blades, over the enumeration guard (p+q <= {MAX_BASIS_BITS})", p + q)]
    BasisTooLarge { p: u32, q: u32 },
    #[error("GA({p},{q}) Cayley table would have 4^{} cells, over the table guard (p+q <= {MAX_TABLE_BITS})", p + q)]
    TableTooLarge { p: u32, q: u32 },
    #[error("operand {operand} lies outside GA({p},{q})")]
    OperandOutsideSignature {
        operand: Multivector,
        p: u32,
        q: u32,
    },
}

/// Malformed `p,q` text form.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expected a signature of the form p,q (two comma-separated naturals), got {0:?}")]
pub struct ParseSignatureError(String);

impl Signature {
    pub fn new(p: u32, q: u32) -> Self {
        Signature { p, q }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Whether generator index `i` falls in the window `{-q, ..., p-1}`.
    pub fn contains_index(&self, i: i64) -> bool {
        -i64::from(self.q) <= i && i < i64::from(self.p)
    }

    pub fn contains_blade(&self, blade: &BasisBlade) -> bool {
        blade.indices().iter().all(|&i| self.contains_index(i))
    }

    /// Whether every blade of `x` has all indices in the window.
    pub fn contains(&self, x: &Multivector) -> bool {
        x.terms().all(|(blade, _)| self.contains_blade(blade))
    }

    /// `2^(p+q)`, the number of basis blades.
    pub fn dimension(&self) -> Result<u64, SignatureError> {
        let bits = self.p + self.q;
        if bits > MAX_DIMENSION_BITS {
            return Err(SignatureError::DimensionOverflow {
                p: self.p,
                q: self.q,
            });
        }
        Ok(1u64 << bits)
    }

    /// All subsets of the index window as canonical blades, ordered by
    /// (grade, lexicographic).
    pub fn basis(&self) -> Result<Vec<BasisBlade>, SignatureError> {
        let bits = self.p + self.q;
        if bits > MAX_BASIS_BITS {
            return Err(SignatureError::BasisTooLarge {
                p: self.p,
                q: self.q,
            });
        }
        let window: Vec<i64> = (-i64::from(self.q)..i64::from(self.p)).collect();
        let mut blades: Vec<BasisBlade> = (0u64..1 << bits)
            .map(|mask| {
                let indices = window
                    .iter()
                    .enumerate()
                    .filter(|(bit, _)| mask >> bit & 1 == 1)
                    .map(|(_, &i)| i);
                BasisBlade::new(indices).expect("window indices are distinct")
            })
            .collect();
        blades.sort();
        Ok(blades)
    }

    /// Tabulates the blade product over `basis() x basis()`.
    pub fn cayley_table(&self) -> Result<CayleyTable, SignatureError> {
        if self.p + self.q > MAX_TABLE_BITS {
            return Err(SignatureError::TableTooLarge {
                p: self.p,
                q: self.q,
            });
        }
        let basis = self.basis()?;
        let cells = basis
            .iter()
            .flat_map(|row| basis.iter().map(|col| blade_product(row, col)))
            .collect();
        Ok(CayleyTable { basis, cells })
    }

    /// Checks that the product of two members stays inside the
    /// signature. Errors if either operand is not a member to begin
    /// with; the result is `true` for every valid pair.
    pub fn closure_check(&self, x: &Multivector, y: &Multivector) -> Result<bool, SignatureError> {
        for operand in [x, y] {
            if !self.contains(operand) {
                return Err(SignatureError::OperandOutsideSignature {
                    operand: operand.clone(),
                    p: self.p,
                    q: self.q,
                });
            }
        }
        Ok(self.contains(&x.product(y)))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GA({},{})", self.p, self.q)
    }
}

impl FromStr for Signature {
    type Err = ParseSignatureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseSignatureError(s.to_owned());
        let (p, q) = s.split_once(',').ok_or_else(bad)?;
        let p = p.trim().parse().map_err(|_| bad())?;
        let q = q.trim().parse().map_err(|_| bad())?;
        Ok(Signature::new(p, q))
    }
}

/// The full multiplication table of a finite signature's basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    basis: Vec<BasisBlade>,
    cells: Vec<SignedBlade>, // row-major, len = basis.len()^2
}

impl CayleyTable {
    pub fn basis(&self) -> &[BasisBlade] {
        &self.basis
    }

    pub fn size(&self) -> usize {
        self.basis.len()
    }

    /// Entry at (row, col): the product `basis[row] * basis[col]`.
    pub fn cell(&self, row: usize, col: usize) -> &SignedBlade {
        &self.cells[row * self.basis.len() + col]
    }

    /// Human-readable table with a header row and column of blade names.
    pub fn render_pretty(&self) -> String {
        let names: Vec<String> = self.basis.iter().map(|b| b.to_string()).collect();
        let header_width = names.iter().map(String::len).max().unwrap_or(0);
        let col_widths: Vec<usize> = names
            .iter()
            .enumerate()
            .map(|(c, name)| {
                (0..self.size())
                    .map(|r| self.cell(r, c).to_string().len())
                    .chain([name.len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();

        let mut lines = Vec::with_capacity(self.size() + 2);
        let mut header = format!("{:header_width$} |", "");
        for (name, &width) in names.iter().zip(&col_widths) {
            header.push_str(&format!(" {name:<width$}"));
        }
        lines.push(header);
        lines.push(format!(
            "{}-+{}",
            "-".repeat(header_width),
            "-".repeat(col_widths.iter().map(|w| w + 1).sum()),
        ));
        for (r, row_name) in names.iter().enumerate() {
            let mut line = format!("{row_name:<header_width$} |");
            for (c, &width) in col_widths.iter().enumerate() {
                let cell = self.cell(r, c).to_string();
                line.push_str(&format!(" {cell:<width$}"));
            }
            lines.push(line);
        }
        // Alignment padding never survives at line ends.
        lines
            .into_iter()
            .map(|line| format!("{}\n", line.trim_end()))
            .collect()
    }

    /// Machine-readable form: one `row<TAB>col<TAB>sign<TAB>result`
    /// line per cell, row-major.
    pub fn render_tsv(&self) -> String {
        let mut out = String::new();
        for (r, row_name) in self.basis.iter().enumerate() {
            for (c, col_name) in self.basis.iter().enumerate() {
                let cell = self.cell(r, c);
                out.push_str(&format!(
                    "{row_name}\t{col_name}\t{}\t{}\n",
                    cell.sign, cell.blade
                ));
            }
        }
        out
    }
}
