//! Sparse multivectors: finite real-linear combinations of basis blades
//! over the full integer-indexed generator family, with the bilinear
//! geometric product.
//!
//! Stored terms never carry a zero coefficient, so the zero multivector
//! is the empty term map and equality is structural.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::blade::{blade_product, BasisBlade, SignedBlade};

/// A finite sum of real coefficients times basis blades.
///
/// Terms are keyed by blade in (grade, lexicographic) order and are
/// zero-pruned after every operation.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Multivector {
    terms: BTreeMap<BasisBlade, f64>,
}

impl Multivector {
    /// The zero multivector (empty term map).
    pub fn zero() -> Self {
        Multivector::default()
    }

    /// The multiplicative unit: coefficient 1 on the scalar blade.
    pub fn one() -> Self {
        Multivector::scalar(1.0)
    }

    /// A scalar multiple of the unit blade.
    pub fn scalar(value: f64) -> Self {
        Multivector::from_terms([(BasisBlade::scalar(), value)])
    }

    /// The generator `e_i` as a multivector.
    pub fn basis_vector(i: i64) -> Self {
        Multivector::from_terms([(BasisBlade::vector(i), 1.0)])
    }

    /// A single blade with coefficient 1.
    pub fn from_blade(blade: BasisBlade) -> Self {
        Multivector::from_terms([(blade, 1.0)])
    }

    /// Sums the supplied coefficients per blade, then prunes zeros.
    pub fn from_terms(pairs: impl IntoIterator<Item = (BasisBlade, f64)>) -> Self {
        let mut terms: BTreeMap<BasisBlade, f64> = BTreeMap::new();
        for (blade, coeff) in pairs {
            *terms.entry(blade).or_insert(0.0) += coeff;
        }
        terms.retain(|_, c| *c != 0.0);
        Multivector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient at `blade`; zero when the blade is absent.
    pub fn coefficient(&self, blade: &BasisBlade) -> f64 {
        self.terms.get(blade).copied().unwrap_or(0.0)
    }

    /// Terms in (grade, lexicographic) blade order.
    pub fn terms(&self) -> impl Iterator<Item = (&BasisBlade, f64)> {
        self.terms.iter().map(|(blade, &coeff)| (blade, coeff))
    }

    /// Scales every coefficient by `factor`.
    pub fn scale(&self, factor: f64) -> Self {
        Multivector::from_terms(
            self.terms()
                .map(|(blade, coeff)| (blade.clone(), coeff * factor)),
        )
    }

    /// Geometric product: the double sum of blade products over all
    /// term pairs of the operands.
    pub fn product(&self, rhs: &Multivector) -> Multivector {
        // Accumulate per result blade; the summand order is fixed by the
        // operands' term order, so results are bit-deterministic.
        let mut acc: HashMap<BasisBlade, f64> = HashMap::new();
        for (lb, lc) in self.terms() {
            for (rb, rc) in rhs.terms() {
                let SignedBlade { sign, blade } = blade_product(lb, rb);
                *acc.entry(blade).or_insert(0.0) += sign.as_f64() * lc * rc;
            }
        }
        Multivector::from_terms(acc)
    }

    /// The part of `self` whose blades have exactly grade `k`.
    pub fn grade_project(&self, k: usize) -> Multivector {
        Multivector {
            terms: self
                .terms
                .iter()
                .filter(|(blade, _)| blade.grade() == k)
                .map(|(blade, &coeff)| (blade.clone(), coeff))
                .collect(),
        }
    }

    /// The distinct grades present, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut grades: Vec<usize> = self.terms.keys().map(BasisBlade::grade).collect();
        grades.dedup();
        grades
    }
}

impl From<SignedBlade> for Multivector {
    fn from(signed: SignedBlade) -> Self {
        Multivector::from_terms([(signed.blade, signed.sign.as_f64())])
    }
}

impl Add for &Multivector {
    type Output = Multivector;

    fn add(self, rhs: &Multivector) -> Multivector {
        Multivector::from_terms(
            self.terms()
                .chain(rhs.terms())
                .map(|(blade, coeff)| (blade.clone(), coeff)),
        )
    }
}

impl Sub for &Multivector {
    type Output = Multivector;

    fn sub(self, rhs: &Multivector) -> Multivector {
        Multivector::from_terms(
            self.terms()
                .map(|(blade, coeff)| (blade.clone(), coeff))
                .chain(rhs.terms().map(|(blade, coeff)| (blade.clone(), -coeff))),
        )
    }
}

impl Neg for &Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Mul for &Multivector {
    type Output = Multivector;

    fn mul(self, rhs: &Multivector) -> Multivector {
        self.product(rhs)
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;

    fn mul(self, factor: f64) -> Multivector {
        self.scale(factor)
    }
}

impl Add for Multivector {
    type Output = Multivector;

    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl Sub for Multivector {
    type Output = Multivector;

    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Neg for Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        -&self
    }
}

impl Mul for Multivector {
    type Output = Multivector;

    fn mul(self, rhs: Multivector) -> Multivector {
        &self * &rhs
    }
}

// Canonical rendering: terms in (grade, lexicographic) order, the
// scalar term as a bare number, other coefficients as `c*e[...]` with
// `c` dropped when it is 1, joined with ` + ` / ` - `.
impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (blade, coeff)) in self.terms().enumerate() {
            let magnitude = coeff.abs();
            if n == 0 {
                if coeff < 0.0 {
                    write!(f, "-")?;
                }
            } else if coeff < 0.0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if blade.is_scalar() {
                write!(f, "{magnitude}")?;
            } else if magnitude == 1.0 {
                write!(f, "{blade}")?;
            } else {
                write!(f, "{magnitude}*{blade}")?;
            }
        }
        Ok(())
    }
}
