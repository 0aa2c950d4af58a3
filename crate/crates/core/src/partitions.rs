//! Integer partitions, coarsenings, and the combinatorics of how strata
//! close up on one another.
//!
//! A partition records the multiplicities of the zeros of a section; the
//! stratum labelled by a finer partition degenerates onto the one
//! labelled by a coarser partition when groups of zeros collide.  The
//! number of distinct ways a collision pattern can happen is a *lift
//! count*, computed here by distributing the parts of the finer partition
//! over the parts of the coarser one.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

/// An integer partition: positive parts in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Build from any list of parts; zeros are dropped and the rest is
    /// sorted into canonical decreasing order.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// The partitioned number `n = Σ parts`.
    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn odd_part_count(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// All parts even?
    pub fn is_even(&self) -> bool {
        self.odd_part_count() == 0
    }

    /// Part value → multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// All coarsenings: partitions obtained by merging at least two parts
    /// (the partition itself is not included).
    pub fn coarsenings(&self) -> Vec<Partition> {
        let mut seen = BTreeSet::new();
        let mut frontier = vec![self.clone()];
        while let Some(p) = frontier.pop() {
            for i in 0..p.len() {
                for j in (i + 1)..p.len() {
                    let mut parts = p.0.clone();
                    let merged = parts[i] + parts[j];
                    parts.remove(j);
                    parts[i] = merged;
                    let q = Partition::new(parts);
                    if seen.insert(q.clone()) {
                        frontier.push(q);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = String;

    /// Accepts `3,2,1` or `(3,2,1)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Err("empty partition".to_string());
        }
        let mut parts = Vec::new();
        for piece in inner.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| format!("bad part {piece:?}"))?;
            if p == 0 {
                return Err("parts must be positive".to_string());
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }
}

/// All partitions of `n`, coarsest first (decreasing lexicographic), so
/// iterating the result visits every coarsening of a partition before the
/// partition itself.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// How the parts of a partition are treated when counting lifts: parts
/// equal to 1 are mutually interchangeable (a generic point of the
/// stratum does not order its simple zeros), larger parts stay
/// distinguishable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftScheme {
    ordered: Vec<u32>,
    free_ones: usize,
}

impl LiftScheme {
    /// The convention used by the stratum tables: 1-parts symmetrized,
    /// everything else ordered.
    pub fn ones_symmetrized(lambda: &Partition) -> Self {
        let ordered: Vec<u32> = lambda.parts().iter().copied().filter(|&p| p > 1).collect();
        let free_ones = lambda.len() - ordered.len();
        LiftScheme { ordered, free_ones }
    }

    /// Every part distinguishable, including the 1s.
    pub fn fully_ordered(lambda: &Partition) -> Self {
        LiftScheme {
            ordered: lambda.parts().to_vec(),
            free_ones: 0,
        }
    }

    pub fn total(&self) -> u32 {
        self.ordered.iter().sum::<u32>() + self.free_ones as u32
    }
}

/// The number of ways the parts of the scheme's partition can collide to
/// form the coarser partition `mu`: assignments of the ordered parts to
/// the parts of `mu` that leave non-negative residual capacity, the
/// residue being filled by the interchangeable 1-parts (in the unique way
/// possible).  Zero when the totals differ.
pub fn lift_count(scheme: &LiftScheme, mu: &Partition) -> u64 {
    if scheme.total() != mu.sum() {
        return 0;
    }

    fn rec(ordered: &[u32], caps: &mut [i64]) -> u64 {
        let Some((&p, rest)) = ordered.split_first() else {
            return 1;
        };
        let mut total = 0;
        for j in 0..caps.len() {
            if caps[j] >= p as i64 {
                caps[j] -= p as i64;
                total += rec(rest, caps);
                caps[j] += p as i64;
            }
        }
        total
    }

    let mut caps: Vec<i64> = mu.parts().iter().map(|&p| p as i64).collect();
    rec(&scheme.ordered, &mut caps)
}

/// The symmetry factor dividing an inclusion–exclusion step: parts larger
/// than `threshold` that occur with multiplicity `m` contribute `m!`, the
/// order of the group permuting identical non-generic branch points.
pub fn aut_factor(lambda: &Partition, threshold: u32) -> u64 {
    lambda
        .multiplicities()
        .iter()
        .filter(|&(&v, _)| v > threshold)
        .map(|(_, &m)| (1..=m as u64).product::<u64>())
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied())
    }

    #[test]
    fn construction_canonicalizes() {
        assert_eq!(part(&[1, 3, 2]).parts(), &[3, 2, 1]);
        assert_eq!(part(&[0, 2, 0]).parts(), &[2]);
        assert_eq!(part(&[]).parts(), &[] as &[u32]);
        assert_eq!(part(&[4, 1, 1]).sum(), 6);
        assert_eq!(part(&[4, 1, 1]).odd_part_count(), 2);
        assert!(part(&[4, 2]).is_even());
        assert!(!part(&[4, 1, 1]).is_even());
    }

    #[test]
    fn parsing_and_display_round_trip() {
        for s in ["(3,2,1)", "(6)", "(1,1,1,1,1,1)"] {
            let p: Partition = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert_eq!("2, 1, 4".parse::<Partition>().unwrap(), part(&[4, 2, 1]));
        assert!("".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration_is_coarse_to_fine() {
        let sixes: Vec<String> = partitions_of(6).iter().map(|p| p.to_string()).collect();
        assert_eq!(
            sixes,
            vec![
                "(6)",
                "(5,1)",
                "(4,2)",
                "(4,1,1)",
                "(3,3)",
                "(3,2,1)",
                "(3,1,1,1)",
                "(2,2,2)",
                "(2,2,1,1)",
                "(2,1,1,1,1)",
                "(1,1,1,1,1,1)"
            ]
        );
        // Partition numbers p(1).. p(10).
        let counts: Vec<usize> = (1..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        // Every coarsening of a partition appears before the partition itself.
        let all = partitions_of(6);
        for (i, p) in all.iter().enumerate() {
            for c in p.coarsenings() {
                let j = all.iter().position(|q| *q == c).unwrap();
                assert!(j < i, "{c} should precede {p}");
            }
        }
    }

    #[test]
    fn coarsenings_of_a_small_partition() {
        let got: BTreeSet<String> = part(&[2, 2, 1, 1])
            .coarsenings()
            .iter()
            .map(|p| p.to_string())
            .collect();
        let want: BTreeSet<String> = [
            "(6)",
            "(5,1)",
            "(4,2)",
            "(4,1,1)",
            "(3,3)",
            "(3,2,1)",
            "(2,2,2)",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        assert_eq!(got, want);
        // (3,1,1,1) is *not* reachable: splitting the 2 is not a merge.
        assert!(!got.contains("(3,1,1,1)"));
    }

    #[test]
    fn lift_counts_match_known_collision_patterns() {
        // From the degree-6 stratum analysis: each pair (λ, μ, count).
        let cases: &[(&[u32], &[u32], u64)] = &[
            (&[4, 1, 1], &[5, 1], 1),
            (&[4, 1, 1], &[4, 2], 1),
            (&[4, 1, 1], &[6], 1),
            (&[3, 2, 1], &[3, 3], 2),
            (&[3, 2, 1], &[4, 2], 1),
            (&[3, 2, 1], &[5, 1], 1),
            (&[3, 2, 1], &[6], 1),
            (&[3, 1, 1, 1], &[3, 3], 2),
            (&[3, 1, 1, 1], &[4, 2], 1),
            (&[3, 1, 1, 1], &[4, 1, 1], 1),
            (&[3, 1, 1, 1], &[3, 2, 1], 1),
            (&[2, 2, 1, 1], &[4, 2], 3),
            (&[2, 2, 1, 1], &[3, 3], 2),
            (&[2, 2, 1, 1], &[3, 2, 1], 2),
            (&[2, 2, 1, 1], &[2, 2, 2], 6),
            (&[2, 2, 1, 1], &[4, 1, 1], 1),
            (&[2, 1, 1, 1, 1], &[2, 2, 2], 3),
            (&[2, 1, 1, 1, 1], &[3, 2, 1], 2),
            (&[2, 1, 1, 1, 1], &[2, 2, 1, 1], 2),
            (&[1, 1, 1, 1, 1, 1], &[3, 2, 1], 1),
        ];
        for &(l, m, want) in cases {
            let scheme = LiftScheme::ones_symmetrized(&part(l));
            assert_eq!(
                lift_count(&scheme, &part(m)),
                want,
                "lift count {:?} -> {:?}",
                l,
                m
            );
        }
        // Mismatched totals give zero.
        assert_eq!(
            lift_count(&LiftScheme::ones_symmetrized(&part(&[2, 1])), &part(&[4])),
            0
        );
    }

    /// Independent enumeration: assign each part of λ (kept as a labelled
    /// list) to a row of μ and keep assignments whose row sums are exactly
    /// μ.  The ones-symmetrized count de-duplicates by forgetting which
    /// 1-part went where, keeping only the count of 1s per row.
    fn oracle_counts(lambda: &Partition, mu: &Partition) -> (u64, u64) {
        let parts = lambda.parts();
        let rows = mu.parts();
        let mut assignment = vec![0usize; parts.len()];
        let mut ordered = 0u64;
        let mut symmetrized = BTreeSet::new();
        loop {
            let mut sums = vec![0u32; rows.len()];
            for (part, &row) in parts.iter().zip(&assignment) {
                sums[row] += part;
            }
            if sums == rows {
                ordered += 1;
                let mut key: Vec<(u32, usize)> = Vec::new();
                let mut one_counts = vec![0usize; rows.len()];
                for (i, (&part, &row)) in parts.iter().zip(&assignment).enumerate() {
                    if part > 1 {
                        key.push((i as u32, row));
                    } else {
                        one_counts[row] += 1;
                    }
                }
                key.extend(one_counts.iter().map(|&c| (u32::MAX, c)));
                symmetrized.insert(key);
            }
            // Odometer increment.
            let mut i = 0;
            loop {
                if i == assignment.len() {
                    return (ordered, symmetrized.len() as u64);
                }
                assignment[i] += 1;
                if assignment[i] < rows.len() {
                    break;
                }
                assignment[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn lift_counts_agree_with_brute_force_enumeration() {
        for n in 1..=6u32 {
            for lambda in partitions_of(n) {
                for mu in partitions_of(n) {
                    let (ordered, symmetrized) = oracle_counts(&lambda, &mu);
                    assert_eq!(
                        lift_count(&LiftScheme::fully_ordered(&lambda), &mu),
                        ordered,
                        "ordered {lambda} -> {mu}"
                    );
                    assert_eq!(
                        lift_count(&LiftScheme::ones_symmetrized(&lambda), &mu),
                        symmetrized,
                        "symmetrized {lambda} -> {mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn aut_factors_count_repeated_large_parts() {
        assert_eq!(aut_factor(&part(&[3, 3]), 1), 2);
        assert_eq!(aut_factor(&part(&[2, 2, 1, 1]), 1), 2);
        assert_eq!(aut_factor(&part(&[4, 1, 1]), 1), 1);
        assert_eq!(aut_factor(&part(&[1, 1, 1, 1, 1, 1]), 1), 1);
        assert_eq!(aut_factor(&part(&[2, 2, 2]), 1), 6);
        assert_eq!(aut_factor(&part(&[3, 3, 2, 2, 2]), 1), 12);
        // Thresholds: at 0 even the 1s count, at 3 nothing here does.
        assert_eq!(aut_factor(&part(&[2, 2, 1, 1]), 0), 4);
        assert_eq!(aut_factor(&part(&[2, 2, 1, 1]), 3), 1);
    }
}
