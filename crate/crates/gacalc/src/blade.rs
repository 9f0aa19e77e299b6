//! Basis blades and the sign bookkeeping behind the geometric product.
//!
//! A basis blade is a finite set of integer generator indices kept in a
//! canonical form: a strictly increasing sequence. The product of two
//! blades is the blade on the symmetric difference of their index sets,
//! times a sign determined by how many index pairs are out of order
//! across the two operands and how many negative-squaring generators
//! they share.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

use thiserror::Error;

/// Canonical basis blade: a strictly increasing sequence of generator
/// indices. The empty blade is the scalar unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisBlade {
    indices: Vec<i64>,
}

/// Rejected blade construction: the same index appeared twice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("duplicate index {0} in basis blade")]
pub struct DuplicateIndex(pub i64);

impl BasisBlade {
    /// The scalar unit blade (empty index set).
    pub fn scalar() -> Self {
        BasisBlade {
            indices: Vec::new(),
        }
    }

    /// The grade-1 blade for generator `i`.
    pub fn vector(i: i64) -> Self {
        BasisBlade { indices: vec![i] }
    }

    /// Builds a blade from indices in any order. Sorts into canonical
    /// form and rejects duplicates.
    pub fn new(indices: impl IntoIterator<Item = i64>) -> Result<Self, DuplicateIndex> {
        let mut indices: Vec<i64> = indices.into_iter().collect();
        indices.sort_unstable();
        for pair in indices.windows(2) {
            if pair[0] == pair[1] {
                return Err(DuplicateIndex(pair[0]));
            }
        }
        Ok(BasisBlade { indices })
    }

    // Invariant: `indices` is already strictly increasing.
    fn from_canonical(indices: Vec<i64>) -> Self {
        debug_assert!(indices.windows(2).all(|p| p[0] < p[1]));
        BasisBlade { indices }
    }

    pub fn indices(&self) -> &[i64] {
        &self.indices
    }

    /// Number of generator indices in the blade.
    pub fn grade(&self) -> usize {
        self.indices.len()
    }

    pub fn is_scalar(&self) -> bool {
        self.indices.is_empty()
    }
}

// Blades order by grade first, then lexicographically on the index
// sequence. This is the ordering used for term rendering, basis
// enumeration and Cayley tables.
impl Ord for BasisBlade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.indices
            .len()
            .cmp(&other.indices.len())
            .then_with(|| self.indices.cmp(&other.indices))
    }
}

impl PartialOrd for BasisBlade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[")?;
        for (n, i) in self.indices.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

/// Sign of a blade product: exactly `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Pos => 1.0,
            Sign::Neg => -1.0,
        }
    }

    /// `Pos` for an even count, `Neg` for an odd one.
    pub fn from_parity(count: u64) -> Self {
        if count.is_multiple_of(2) {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Pos => write!(f, "+1"),
            Sign::Neg => write!(f, "-1"),
        }
    }
}

/// A blade together with a sign; the result of a blade product or of
/// reducing a generator word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedBlade {
    pub sign: Sign,
    pub blade: BasisBlade,
}

impl fmt::Display for SignedBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbol = match self.sign {
            Sign::Pos => '+',
            Sign::Neg => '-',
        };
        write!(f, "{symbol}{}", self.blade)
    }
}

/// Counts the pairs `(i, j)` with `i` in `lhs`, `j` in `rhs` and `j < i`:
/// the number of adjacent transpositions needed to interleave the two
/// index sequences in order. Linear merge over the sorted sequences.
pub fn alpha(lhs: &BasisBlade, rhs: &BasisBlade) -> u64 {
    let mut pairs = 0u64;
    let mut passed = 0u64; // rhs indices strictly below the current lhs index
    let mut rhs_iter = rhs.indices().iter().peekable();
    for &i in lhs.indices() {
        while let Some(&&j) = rhs_iter.peek() {
            if j < i {
                passed += 1;
                rhs_iter.next();
            } else {
                break;
            }
        }
        pairs += passed;
    }
    pairs
}

/// Counts the negative indices common to both blades: the generators
/// that square to `-1` and cancel during the product.
pub fn beta(lhs: &BasisBlade, rhs: &BasisBlade) -> u64 {
    let mut count = 0u64;
    let mut a = lhs.indices().iter().peekable();
    let mut b = rhs.indices().iter().peekable();
    while let (Some(&&x), Some(&&y)) = (a.peek(), b.peek()) {
        match x.cmp(&y) {
            Ordering::Less => {
                a.next();
            }
            Ordering::Greater => {
                b.next();
            }
            Ordering::Equal => {
                if x < 0 {
                    count += 1;
                }
                a.next();
                b.next();
            }
        }
    }
    count
}

/// Sign of the product of two basis blades: `(-1)^(alpha + beta)`.
pub fn sigma(lhs: &BasisBlade, rhs: &BasisBlade) -> Sign {
    Sign::from_parity(alpha(lhs, rhs) + beta(lhs, rhs))
}

/// Symmetric difference of the index sets, as a canonical blade.
pub fn sym_diff(lhs: &BasisBlade, rhs: &BasisBlade) -> BasisBlade {
    let mut out = Vec::with_capacity(lhs.grade() + rhs.grade());
    let mut a = lhs.indices().iter().peekable();
    let mut b = rhs.indices().iter().peekable();
    loop {
        match (a.peek(), b.peek()) {
            (Some(&&x), Some(&&y)) => match x.cmp(&y) {
                Ordering::Less => {
                    out.push(x);
                    a.next();
                }
                Ordering::Greater => {
                    out.push(y);
                    b.next();
                }
                Ordering::Equal => {
                    a.next();
                    b.next();
                }
            },
            (Some(&&x), None) => {
                out.push(x);
                a.next();
            }
            (None, Some(&&y)) => {
                out.push(y);
                b.next();
            }
            (None, None) => break,
        }
    }
    BasisBlade::from_canonical(out)
}

/// Intersection of the index sets, as a canonical blade.
pub fn intersect(lhs: &BasisBlade, rhs: &BasisBlade) -> BasisBlade {
    let mut out = Vec::new();
    let mut a = lhs.indices().iter().peekable();
    let mut b = rhs.indices().iter().peekable();
    while let (Some(&&x), Some(&&y)) = (a.peek(), b.peek()) {
        match x.cmp(&y) {
            Ordering::Less => {
                a.next();
            }
            Ordering::Greater => {
                b.next();
            }
            Ordering::Equal => {
                out.push(x);
                a.next();
                b.next();
            }
        }
    }
    BasisBlade::from_canonical(out)
}

/// Product of two basis blades: the signed blade on the symmetric
/// difference of their index sets.
pub fn blade_product(lhs: &BasisBlade, rhs: &BasisBlade) -> SignedBlade {
    SignedBlade {
        sign: sigma(lhs, rhs),
        blade: sym_diff(lhs, rhs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn b(indices: &[i64]) -> BasisBlade {
        BasisBlade::new(indices.iter().copied()).unwrap()
    }

    /// Quadratic pair count straight from the defining condition.
    fn alpha_by_enumeration(lhs: &BasisBlade, rhs: &BasisBlade) -> u64 {
        let mut n = 0;
        for &i in lhs.indices() {
            for &j in rhs.indices() {
                if j < i {
                    n += 1;
                }
            }
        }
        n
    }

    fn beta_by_enumeration(lhs: &BasisBlade, rhs: &BasisBlade) -> u64 {
        lhs.indices()
            .iter()
            .filter(|&&i| i < 0 && rhs.indices().contains(&i))
            .count() as u64
    }

    fn random_blade(rng: &mut impl Rng, lo: i64, hi: i64) -> BasisBlade {
        let indices = (lo..=hi).filter(|_| rng.gen_bool(0.5));
        BasisBlade::new(indices).unwrap()
    }

    #[test]
    fn new_sorts_into_canonical_form() {
        assert_eq!(b(&[3, -1, 0]).indices(), &[-1, 0, 3]);
        assert_eq!(BasisBlade::new([1, 1]), Err(DuplicateIndex(1)));
        assert!(BasisBlade::scalar().is_scalar());
        assert_eq!(b(&[-1, 0, 3]).grade(), 3);
    }

    #[test]
    fn blade_ordering_is_grade_then_lexicographic() {
        let mut blades = vec![b(&[-1, 0]), b(&[0]), b(&[]), b(&[-1])];
        blades.sort();
        assert_eq!(blades, vec![b(&[]), b(&[-1]), b(&[0]), b(&[-1, 0])]);
    }

    #[test]
    fn blade_display() {
        assert_eq!(b(&[]).to_string(), "e[]");
        assert_eq!(b(&[-1, 0, 3]).to_string(), "e[-1,0,3]");
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&b(&[]), &b(&[1, 2])), 0);
        assert_eq!(alpha(&b(&[1, 3]), &b(&[2])), 1);
        assert_eq!(alpha(&b(&[1, 2]), &b(&[1, 2])), 1);
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&b(&[1]), &b(&[1])), 0);
        assert_eq!(beta(&b(&[-1, 2]), &b(&[-1, 3])), 1);
        assert_eq!(beta(&b(&[-2, -1]), &b(&[-2, -1])), 2);
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&b(&[]), &b(&[])), Sign::Pos);
        assert_eq!(sigma(&b(&[1]), &b(&[2])), Sign::Pos);
        assert_eq!(sigma(&b(&[2]), &b(&[1])), Sign::Neg);
        assert_eq!(sigma(&b(&[-1]), &b(&[-1])), Sign::Neg);
    }

    #[test]
    fn sym_diff_examples() {
        assert_eq!(sym_diff(&b(&[1, 2]), &b(&[])), b(&[1, 2]));
        assert_eq!(sym_diff(&b(&[1, 2]), &b(&[1, 2])), b(&[]));
        assert_eq!(sym_diff(&b(&[-1, 0]), &b(&[0, 3])), b(&[-1, 3]));
    }

    #[test]
    fn blade_product_examples() {
        let prod = blade_product(&b(&[0]), &b(&[0]));
        assert_eq!((prod.sign, prod.blade), (Sign::Pos, b(&[])));
        let prod = blade_product(&b(&[-1]), &b(&[-1]));
        assert_eq!((prod.sign, prod.blade), (Sign::Neg, b(&[])));
        let prod = blade_product(&b(&[2]), &b(&[1]));
        assert_eq!((prod.sign, prod.blade), (Sign::Neg, b(&[1, 2])));
    }

    #[test]
    fn unit_blade_laws() {
        for blade in [b(&[]), b(&[-2]), b(&[-1, 0, 4])] {
            let left = blade_product(&b(&[]), &blade);
            let right = blade_product(&blade, &b(&[]));
            assert_eq!((left.sign, &left.blade), (Sign::Pos, &blade));
            assert_eq!((right.sign, &right.blade), (Sign::Pos, &blade));
        }
    }

    #[test]
    fn sign_arithmetic() {
        assert_eq!(Sign::Neg * Sign::Neg, Sign::Pos);
        assert_eq!(Sign::Pos * Sign::Neg, Sign::Neg);
        assert_eq!(-Sign::Pos, Sign::Neg);
        assert_eq!(Sign::from_parity(3), Sign::Neg);
        assert_eq!(
            SignedBlade {
                sign: Sign::Neg,
                blade: b(&[1, 2])
            }
            .to_string(),
            "-e[1,2]"
        );
    }

    #[test]
    fn merge_agrees_with_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
        for _ in 0..10_000 {
            let lhs = random_blade(&mut rng, -6, 6);
            let rhs = random_blade(&mut rng, -6, 6);
            assert_eq!(alpha(&lhs, &rhs), alpha_by_enumeration(&lhs, &rhs));
            assert_eq!(beta(&lhs, &rhs), beta_by_enumeration(&lhs, &rhs));
        }
    }

    #[test]
    fn cocycle_identity_and_congruences() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
        for _ in 0..10_000 {
            let i = random_blade(&mut rng, -6, 6);
            let j = random_blade(&mut rng, -6, 6);
            let k = random_blade(&mut rng, -6, 6);

            let lhs = sigma(&i, &j) * sigma(&sym_diff(&i, &j), &k);
            let rhs = sigma(&i, &sym_diff(&j, &k)) * sigma(&j, &k);
            assert_eq!(lhs, rhs);

            let a_cong = (alpha(&i, &j) + alpha(&sym_diff(&i, &j), &k)) % 2
                == (alpha(&i, &sym_diff(&j, &k)) + alpha(&j, &k)) % 2;
            assert!(a_cong);
            let b_cong = (beta(&i, &j) + beta(&sym_diff(&i, &j), &k)) % 2
                == (beta(&i, &sym_diff(&j, &k)) + beta(&j, &k)) % 2;
            assert!(b_cong);
        }
    }

    #[test]
    fn inclusion_exclusion_over_symmetric_difference() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
        for _ in 0..10_000 {
            let i = random_blade(&mut rng, -6, 6);
            let j = random_blade(&mut rng, -6, 6);
            let k = random_blade(&mut rng, -6, 6);

            let lhs = alpha(&sym_diff(&i, &j), &k) as i64;
            let rhs = alpha(&i, &k) as i64 + alpha(&j, &k) as i64
                - 2 * alpha(&intersect(&i, &j), &k) as i64;
            assert_eq!(lhs, rhs);

            let lhs = beta(&sym_diff(&i, &j), &k) as i64;
            let rhs =
                beta(&i, &k) as i64 + beta(&j, &k) as i64 - 2 * beta(&intersect(&i, &j), &k) as i64;
            assert_eq!(lhs, rhs);
        }
    }

    fn subset_strategy() -> impl Strategy<Value = BasisBlade> {
        prop::collection::btree_set(-6i64..=6, 0..=13).prop_map(|set| BasisBlade::new(set).unwrap())
    }

    proptest! {
        #[test]
        fn outputs_are_canonical(i in subset_strategy(), j in subset_strategy()) {
            for blade in [sym_diff(&i, &j), intersect(&i, &j), blade_product(&i, &j).blade] {
                prop_assert!(blade.indices().windows(2).all(|p| p[0] < p[1]));
            }
        }

        #[test]
        fn sym_diff_is_associative(
            i in subset_strategy(),
            j in subset_strategy(),
            k in subset_strategy(),
        ) {
            prop_assert_eq!(
                sym_diff(&sym_diff(&i, &j), &k),
                sym_diff(&i, &sym_diff(&j, &k))
            );
        }

        #[test]
        fn sym_diff_self_and_identity(i in subset_strategy()) {
            prop_assert_eq!(sym_diff(&i, &i), BasisBlade::scalar());
            prop_assert_eq!(sym_diff(&i, &BasisBlade::scalar()), i.clone());
            prop_assert_eq!(sym_diff(&BasisBlade::scalar(), &i), i);
        }
    }
}
