//! Index-set combinatorics for the generalized Umemura families and the
//! partition machinery behind the explicit subset formula.
//!
//! The ground set [n;m] is {1, ..., n, n+2, n+4, ..., n+2m}. For a subset I
//! the integer coefficient d_{n,m}(I) is prod |(i+j)/(i-j)| over i in I and
//! j in the complement, and the sign exponent c(I) is sum (i-n)/2 over the
//! members above n. The weight |I| of an index set is the SUM of its
//! elements, not its cardinality.

use crate::exactpoly::{rat, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

#[derive(Debug, Clone, thiserror::Error)]
pub enum CombinatError {
    /// d_{n,m}(I) failed the integrality claim; carries the witness subset.
    #[error("d coefficient for subset {subset:?} of [{n};{m}] is not a positive integer: {value}")]
    NonIntegerCoefficient { n: u32, m: u32, subset: Vec<i64>, value: Rational },
    /// Arms/legs that do not describe any Young diagram.
    #[error("invalid Frobenius symbol: {0}")]
    InvalidSymbol(String),
    /// Weyl dimension request with more parts than the group rank.
    #[error("partition has {parts} parts but the group is GL({n})")]
    TooManyParts { parts: usize, n: u32 },
}

/// The ground set [n;m] = {1,...,n} U {n+2, n+4, ..., n+2m}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroundSet {
    pub n: u32,
    pub m: u32,
    elements: Vec<i64>,
}

impl GroundSet {
    pub fn new(n: u32, m: u32) -> Self {
        let mut elements: Vec<i64> = (1..=n as i64).collect();
        for j in 1..=m as i64 {
            elements.push(n as i64 + 2 * j);
        }
        GroundSet { n, m, elements }
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn weight(&self) -> i64 {
        weight(&self.elements)
    }

    /// All subsets as bitmask-ordered `IndexSubset`s (mask ascending, bit k
    /// selecting the k-th smallest element), so reports are deterministic.
    pub fn subsets(&self) -> impl Iterator<Item = IndexSubset> + '_ {
        (0u64..(1u64 << self.len())).map(move |mask| IndexSubset::from_mask(self.clone(), mask))
    }

    pub fn subset(&self, members: &[i64]) -> IndexSubset {
        IndexSubset::new(self.clone(), members.to_vec())
    }
}

/// A subset of a ground set, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexSubset {
    pub ground: GroundSet,
    members: Vec<i64>,
}

impl IndexSubset {
    pub fn new(ground: GroundSet, mut members: Vec<i64>) -> Self {
        members.sort_unstable();
        members.dedup();
        for x in &members {
            assert!(
                ground.elements().contains(x),
                "{x} is not an element of [{};{}]",
                ground.n,
                ground.m
            );
        }
        IndexSubset { ground, members }
    }

    pub fn from_mask(ground: GroundSet, mask: u64) -> Self {
        let members = ground
            .elements()
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        IndexSubset { ground, members }
    }

    pub fn members(&self) -> &[i64] {
        &self.members
    }

    pub fn weight(&self) -> i64 {
        weight(&self.members)
    }

    pub fn complement(&self) -> IndexSubset {
        let members = self
            .ground
            .elements()
            .iter()
            .filter(|x| !self.members.contains(x))
            .copied()
            .collect();
        IndexSubset { ground: self.ground.clone(), members }
    }

    pub fn contains(&self, x: i64) -> bool {
        self.members.contains(&x)
    }
}

/// Element-sum weight of an index set.
pub fn weight(set: &[i64]) -> i64 {
    set.iter().sum()
}

/// d_{n,m}(I) = prod_{i in I, j in complement} |(i+j)/(i-j)|, asserted to be
/// a positive integer.
pub fn dcoef(subset: &IndexSubset) -> Result<BigInt, CombinatError> {
    let comp = subset.complement();
    let mut acc = Rational::one();
    for &i in subset.members() {
        for &j in comp.members() {
            acc *= rat(i + j) / rat((i - j).abs());
        }
    }
    if acc.denom().is_one() && acc.is_positive() {
        Ok(acc.numer().clone())
    } else if subset.members().is_empty() || comp.members().is_empty() {
        Ok(BigInt::one())
    } else {
        Err(CombinatError::NonIntegerCoefficient {
            n: subset.ground.n,
            m: subset.ground.m,
            subset: subset.members().to_vec(),
            value: acc,
        })
    }
}

/// c(I) = sum_{i in I, i > n} (i-n)/2; each summand is integral because
/// every element above n shares its parity.
pub fn csign_exponent(subset: &IndexSubset) -> u64 {
    let n = subset.ground.n as i64;
    subset
        .members()
        .iter()
        .filter(|&&i| i > n)
        .map(|&i| ((i - n) / 2) as u64)
        .sum()
}

/// An integer partition: weakly decreasing parts, trailing zeros removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Frobenius coordinates (arms | legs) read along the main diagonal.
    pub fn to_frobenius(&self) -> FrobeniusSymbol {
        let conj = self.conjugate();
        let p = (0..self.parts.len())
            .take_while(|&i| self.part(i) as usize > i)
            .count();
        let arms = (0..p).map(|i| self.part(i) - i as u32 - 1).collect();
        let legs = (0..p).map(|i| conj.part(i) - i as u32 - 1).collect();
        FrobeniusSymbol { arms, legs }
    }
}

/// Frobenius coordinates (a_1,...,a_p | b_1,...,b_p) of a partition: arm and
/// leg lengths of the p diagonal cells, each strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrobeniusSymbol {
    arms: Vec<u32>,
    legs: Vec<u32>,
}

impl FrobeniusSymbol {
    pub fn new(arms: Vec<u32>, legs: Vec<u32>) -> Result<Self, CombinatError> {
        if arms.len() != legs.len() {
            return Err(CombinatError::InvalidSymbol(format!(
                "{} arms vs {} legs",
                arms.len(),
                legs.len()
            )));
        }
        if arms.windows(2).any(|w| w[0] <= w[1]) || legs.windows(2).any(|w| w[0] <= w[1]) {
            return Err(CombinatError::InvalidSymbol(
                "arms and legs must be strictly decreasing".into(),
            ));
        }
        Ok(FrobeniusSymbol { arms, legs })
    }

    pub fn arms(&self) -> &[u32] {
        &self.arms
    }

    pub fn legs(&self) -> &[u32] {
        &self.legs
    }

    /// The partition whose diagonal hooks have these arms and legs:
    /// row i (1-based, i <= p) has length a_i + i, and column j has height
    /// b_j + j.
    pub fn to_partition(&self) -> Result<Partition, CombinatError> {
        let p = self.arms.len();
        if p == 0 {
            return Ok(Partition::empty());
        }
        let rows = (self.legs[0] + 1) as usize;
        let mut parts = Vec::with_capacity(rows);
        for i in 1..=rows {
            let len = if i <= p {
                self.arms[i - 1] as usize + i
            } else {
                // Below the diagonal: row length is the number of columns
                // whose height b_j + j reaches this row.
                (1..=p).filter(|&j| self.legs[j - 1] as usize + j >= i).count()
            };
            parts.push(len as u32);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatError::InvalidSymbol(format!(
                "arms {:?} / legs {:?} do not cut out a Young diagram",
                self.arms, self.legs
            )));
        }
        let part = Partition::new(parts);
        // Round-trip sanity: the symbol of the result must be this symbol.
        if &part.to_frobenius() != self {
            return Err(CombinatError::InvalidSymbol(format!(
                "arms {:?} / legs {:?} are not the diagonal hooks of any partition",
                self.arms, self.legs
            )));
        }
        Ok(part)
    }
}

/// The highest weight attached to a subset I = {i_1 > ... > i_p} of [n-1]:
/// the partition with Frobenius symbol (i_1, ..., i_p | i_1 - 1, ..., i_p - 1).
pub fn lambda_of_subset(set: &[i64]) -> Partition {
    let mut desc: Vec<u32> = set.iter().map(|&x| x as u32).collect();
    desc.sort_unstable_by(|a, b| b.cmp(a));
    let legs: Vec<u32> = desc.iter().map(|&x| x - 1).collect();
    FrobeniusSymbol::new(desc, legs)
        .and_then(|f| f.to_partition())
        .expect("subset symbols (i | i-1) always form a partition")
}

/// Weyl dimension formula for GL(n): prod_{1<=i<j<=n} (l_i - l_j + j - i)/(j - i),
/// computed exactly and asserted to land on a positive integer.
pub fn gl_dim(n: u32, lambda: &Partition) -> Result<BigInt, CombinatError> {
    if lambda.len() > n as usize {
        return Err(CombinatError::TooManyParts { parts: lambda.len(), n });
    }
    let mut acc = Rational::one();
    for i in 1..=n as i64 {
        for j in (i + 1)..=n as i64 {
            let li = lambda.part(i as usize - 1) as i64;
            let lj = lambda.part(j as usize - 1) as i64;
            acc *= rat(li - lj + j - i) / rat(j - i);
        }
    }
    debug_assert!(acc.denom().is_one() && acc.is_positive(), "Weyl product must be a positive integer");
    Ok(acc.numer().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_set_examples() {
        assert!(GroundSet::new(0, 0).is_empty());
        assert_eq!(GroundSet::new(0, 2).elements(), &[2, 4]);
        assert_eq!(GroundSet::new(2, 2).elements(), &[1, 2, 4, 6]);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight(&[]), 0);
        assert_eq!(weight(&[2, 4]), 6);
        assert_eq!(weight(&[1, 2, 4, 6]), 13);
    }

    #[test]
    fn dcoef_examples() {
        let g = GroundSet::new(1, 1); // {1, 3}
        assert_eq!(dcoef(&g.subset(&[])).unwrap(), BigInt::from(1));
        assert_eq!(dcoef(&g.subset(&[1, 3])).unwrap(), BigInt::from(1));
        assert_eq!(dcoef(&g.subset(&[1])).unwrap(), BigInt::from(2));
    }

    #[test]
    fn dcoef_complement_symmetry_small() {
        for (n, m) in [(0u32, 3u32), (2, 2), (3, 1), (4, 0)] {
            let g = GroundSet::new(n, m);
            for s in g.subsets() {
                assert_eq!(dcoef(&s).unwrap(), dcoef(&s.complement()).unwrap());
            }
        }
    }

    #[test]
    fn csign_examples() {
        let g = GroundSet::new(0, 2);
        assert_eq!(csign_exponent(&g.subset(&[])), 0);
        assert_eq!(csign_exponent(&g.subset(&[2, 4])), 3);
        let g = GroundSet::new(2, 1);
        assert_eq!(csign_exponent(&g.subset(&[1, 2])), 0);
    }

    #[test]
    fn csign_additive_over_complement() {
        for (n, m) in [(1u32, 2u32), (2, 2), (0, 4)] {
            let g = GroundSet::new(n, m);
            let full = csign_exponent(&g.subset(g.elements()));
            for s in g.subsets() {
                assert_eq!(csign_exponent(&s) + csign_exponent(&s.complement()), full);
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        let empty = FrobeniusSymbol::new(vec![], vec![]).unwrap();
        assert_eq!(empty.to_partition().unwrap(), Partition::empty());
        // (1|0) -> (2)
        let f = FrobeniusSymbol::new(vec![1], vec![0]).unwrap();
        assert_eq!(f.to_partition().unwrap(), Partition::new(vec![2]));
        // (2,0|1,0) -> (3,2)
        let f = FrobeniusSymbol::new(vec![2, 0], vec![1, 0]).unwrap();
        assert_eq!(f.to_partition().unwrap(), Partition::new(vec![3, 2]));
    }

    #[test]
    fn frobenius_round_trip_random() {
        // All partitions of size <= 8.
        fn partitions(total: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::new(prefix.clone()));
            for p in (1..=max.min(total)).rev() {
                prefix.push(p);
                partitions(total - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut all = Vec::new();
        partitions(8, 8, &mut Vec::new(), &mut all);
        for lam in all {
            let f = lam.to_frobenius();
            assert_eq!(f.to_partition().unwrap(), lam);
        }
    }

    #[test]
    fn lambda_of_subset_examples() {
        assert_eq!(lambda_of_subset(&[]), Partition::empty());
        assert_eq!(lambda_of_subset(&[1]), Partition::new(vec![2]));
        // {2,1}: symbol (2,1|1,0) -> (3,3)
        assert_eq!(lambda_of_subset(&[2, 1]), Partition::new(vec![3, 3]));
    }

    /// Brute-force count of semistandard Young tableaux of a given shape with
    /// entries in {1, ..., n}; the independent oracle for gl_dim.
    pub(crate) fn ssyt_count(n: u32, lambda: &Partition) -> u64 {
        fn fill(
            shape: &[u32],
            n: u32,
            row: usize,
            col: usize,
            grid: &mut Vec<Vec<u32>>,
        ) -> u64 {
            if row == shape.len() {
                return 1;
            }
            if col == shape[row] as usize {
                return fill(shape, n, row + 1, 0, grid);
            }
            let lo = {
                let mut v = 1;
                if col > 0 {
                    v = v.max(grid[row][col - 1]); // weakly increasing rows
                }
                if row > 0 && (grid[row - 1].len() > col) {
                    v = v.max(grid[row - 1][col] + 1); // strictly increasing cols
                }
                v
            };
            let mut total = 0;
            for entry in lo..=n {
                grid[row].push(entry);
                total += fill(shape, n, row, col + 1, grid);
                grid[row].pop();
            }
            total
        }
        let shape = lambda.parts().to_vec();
        let mut grid: Vec<Vec<u32>> = vec![Vec::new(); shape.len()];
        fill(&shape, n, 0, 0, &mut grid)
    }

    #[test]
    fn gl_dim_examples() {
        assert_eq!(gl_dim(3, &Partition::empty()).unwrap(), BigInt::from(1));
        assert_eq!(gl_dim(2, &Partition::new(vec![2])).unwrap(), BigInt::from(3));
        assert_eq!(gl_dim(3, &Partition::new(vec![1, 1])).unwrap(), BigInt::from(3));
    }

    #[test]
    fn gl_dim_matches_tableau_count() {
        fn partitions_up_to(total: u32) -> Vec<Partition> {
            fn go(total: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
                out.push(Partition::new(prefix.clone()));
                for p in (1..=max.min(total)).rev() {
                    prefix.push(p);
                    go(total - p, p, prefix, out);
                    prefix.pop();
                }
            }
            let mut v = Vec::new();
            go(total, total, &mut Vec::new(), &mut v);
            v
        }
        for lam in partitions_up_to(6) {
            for n in 1..=4u32 {
                if lam.len() > n as usize {
                    assert!(matches!(
                        gl_dim(n, &lam),
                        Err(CombinatError::TooManyParts { .. })
                    ));
                    continue;
                }
                let weyl = gl_dim(n, &lam).unwrap();
                let brute = ssyt_count(n, &lam);
                assert_eq!(weyl, BigInt::from(brute), "shape {:?}, n = {n}", lam.parts());
            }
        }
    }

    #[test]
    fn too_many_parts_rejected() {
        let lam = Partition::new(vec![1, 1, 1]);
        assert!(matches!(gl_dim(2, &lam), Err(CombinatError::TooManyParts { .. })));
    }
}
