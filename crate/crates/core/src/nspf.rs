//! Parking functions, their two-colored variant, and the block partition of
//! the colored set.
//!
//! A sequence of positive integers parks when its increasing rearrangement
//! `b₁ ≤ ⋯ ≤ bₙ` satisfies `b_i ≤ i`; the condition depends only on the
//! multiset of values. Coloring every entry red or blue multiplies the count
//! by `2ⁿ`. Grouping the colored functions by (value multiset, color of the
//! leftmost occurrence of each value) partitions them into blocks whose
//! per-shape counts reproduce the coefficients of [`sh_easy_v`], which is
//! what ties this module's enumeration to the algebra in the rest of the
//! crate.

use crate::partitions::{multinomial, Partition};
use crate::schur::cmp_mult_desc;
use crate::shifted::sh_easy_v;
use num_bigint::BigInt;
use num_traits::One;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// Largest `n` for which uncolored parking functions are enumerated.
pub const PF_ENUM_BOUND: u32 = 8;
/// Largest `n` for which the colored set is walked element by element.
pub const COLORED_ENUM_BOUND: u32 = 6;

/// Entry color. `Blue` renders plain; `Red` renders with a trailing `*`
/// in text and a bar in LaTeX.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Blue,
    Red,
}

/// An enumeration request exceeded the hard-coded size cap.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("length {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: u32, bound: u32 },
    #[error("member listing for length {n} exceeds the colored enumeration bound {bound}")]
    MemberListingTooLarge { n: u32, bound: u32 },
}

/// Anything `partition_into_blocks` can report: a size cap or a failed
/// statistic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NspfError {
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Census(#[from] CensusError),
}

/// The constructed blocks contradict one of the claimed statistics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("block {key} of shape {label} has {got} members but the formula predicts {expected}")]
    SizeMismatch {
        key: String,
        label: Partition,
        expected: BigInt,
        got: BigInt,
    },
    #[error("{got} blocks have shape {label} but the coefficient formula predicts {expected}")]
    CountMismatch {
        label: Partition,
        expected: BigInt,
        got: BigInt,
    },
    #[error("block sizes sum to {got}, not the full colored count {expected}")]
    TotalMismatch { expected: BigInt, got: BigInt },
    #[error("colored function {nspf} matched {hits} blocks instead of exactly one")]
    NotAPartition { nspf: String, hits: usize },
}

/// True iff the increasing rearrangement `b₁ ≤ ⋯ ≤ bₙ` has `b_i ≤ i`.
pub fn is_parking(seq: &[u32]) -> bool {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    sorted
        .iter()
        .enumerate()
        .all(|(i, &b)| b as usize <= i + 1 && b >= 1)
}

/// A sequence of positive integers whose increasing rearrangement satisfies
/// the parking condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParkingFunction {
    entries: Vec<u32>,
}

impl ParkingFunction {
    /// Wraps a sequence, checking the parking condition.
    pub fn new(entries: Vec<u32>) -> Self {
        assert!(is_parking(&entries), "sequence does not park: {entries:?}");
        ParkingFunction { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.entries {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Lazy lexicographic stream over all parking functions of length `n`.
#[derive(Debug)]
pub struct PfIter {
    n: usize,
    current: Vec<u32>,
    started: bool,
    done: bool,
}

/// Streams every parking function of length `n` exactly once, in
/// lexicographic order. Errors when `n` exceeds [`PF_ENUM_BOUND`].
pub fn enumerate_pf(n: u32) -> Result<PfIter, EnumError> {
    if !(1..=PF_ENUM_BOUND).contains(&n) {
        return Err(EnumError::BoundExceeded {
            n,
            bound: PF_ENUM_BOUND,
        });
    }
    Ok(PfIter {
        n: n as usize,
        current: vec![1; n as usize],
        started: false,
        done: false,
    })
}

impl Iterator for PfIter {
    type Item = ParkingFunction;

    fn next(&mut self) -> Option<ParkingFunction> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(ParkingFunction::new(self.current.clone()));
        }
        // Odometer with carry. Raising an entry can only hurt the parking
        // condition, so when a prefix fails every larger value at that
        // position fails too and the carry moves left immediately.
        let mut k = self.n - 1;
        loop {
            self.current[k] += 1;
            if self.current[k] > self.n as u32 {
                self.current[k] = 1;
                if k == 0 {
                    self.done = true;
                    return None;
                }
                k -= 1;
                continue;
            }
            for v in &mut self.current[k + 1..] {
                *v = 1;
            }
            if is_parking(&self.current) {
                return Some(ParkingFunction::new(self.current.clone()));
            }
            if k < self.n - 1 {
                // The tail of ones is the best completion; a failing prefix
                // cannot recover, so carry out of this position.
                self.current[k] = self.n as u32;
            }
        }
    }
}

/// The number of parking functions of length `n` fixed by the given
/// permutation (one-line, 0-indexed), counted by assigning one value per
/// cycle — a fixed function is exactly one that is constant on cycles.
pub fn count_fixed_by_perm(perm: &[usize]) -> u64 {
    let n = perm.len();
    assert!(n >= 1);
    let mut seen = vec![false; n];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = perm[i];
        }
        cycles.push(cycle);
    }
    let ell = cycles.len();
    let mut values = vec![1u32; ell];
    let mut count = 0u64;
    let mut buffer = vec![0u32; n];
    loop {
        for (cycle, &v) in cycles.iter().zip(&values) {
            for &i in cycle {
                buffer[i] = v;
            }
        }
        if is_parking(&buffer) {
            count += 1;
        }
        let mut k = ell;
        loop {
            if k == 0 {
                return count;
            }
            k -= 1;
            values[k] += 1;
            if values[k] <= n as u32 {
                break;
            }
            values[k] = 1;
        }
    }
}

/// The permutation with the cycles of `lambda` laid out on consecutive
/// indices: part `k` starting at offset `s` maps `s+i ↦ s+(i+1 mod k)`.
pub fn consecutive_cycle_perm(lambda: &Partition) -> Vec<usize> {
    let n = lambda.weight() as usize;
    let mut perm = vec![0usize; n];
    let mut offset = 0usize;
    for &part in lambda.parts() {
        let k = part as usize;
        for i in 0..k {
            perm[offset + i] = offset + (i + 1) % k;
        }
        offset += k;
    }
    perm
}

/// The number of parking functions fixed by a permutation of cycle type
/// `lambda` (the count is a class function, so one representative — the
/// consecutive-cycle layout — suffices). Errors when `|λ|` exceeds
/// [`PF_ENUM_BOUND`].
pub fn count_fixed(lambda: &Partition) -> Result<u64, EnumError> {
    let n = lambda.weight();
    if !(1..=PF_ENUM_BOUND).contains(&n) {
        return Err(EnumError::BoundExceeded {
            n,
            bound: PF_ENUM_BOUND,
        });
    }
    Ok(count_fixed_by_perm(&consecutive_cycle_perm(lambda)))
}

/// What determines a colored function's block: its value multiplicities and
/// its leftmost-occurrence colors.
pub type BlockKey = (Vec<u32>, Vec<(u32, Color)>);

/// A parking function with every entry colored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Nspf {
    entries: Vec<(u32, Color)>,
}

impl Nspf {
    /// Wraps a colored sequence, checking that the values park.
    pub fn new(entries: Vec<(u32, Color)>) -> Self {
        let values: Vec<u32> = entries.iter().map(|&(v, _)| v).collect();
        assert!(is_parking(&values), "values do not park: {values:?}");
        Nspf { entries }
    }

    pub fn entries(&self) -> &[(u32, Color)] {
        &self.entries
    }

    pub fn values(&self) -> Vec<u32> {
        self.entries.iter().map(|&(v, _)| v).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The grouping key: per-value multiplicities `a₁…aₙ` plus the color of
    /// the leftmost occurrence of each value present.
    pub fn block_key(&self) -> BlockKey {
        let n = self.entries.len();
        let mut mults = vec![0u32; n];
        let mut first: BTreeMap<u32, Color> = BTreeMap::new();
        for &(v, c) in &self.entries {
            mults[v as usize - 1] += 1;
            first.entry(v).or_insert(c);
        }
        (mults, first.into_iter().collect())
    }

    /// LaTeX form, red entries barred: `1\bar{2}`.
    pub fn latex(&self) -> String {
        let mut s = String::new();
        for &(v, c) in &self.entries {
            match c {
                Color::Blue => s.push_str(&v.to_string()),
                Color::Red => s.push_str(&format!("\\bar{{{v}}}")),
            }
        }
        s
    }
}

impl fmt::Display for Nspf {
    /// Overline-free text form, red entries starred: `12*` for (1 blue, 2 red).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(v, c) in &self.entries {
            write!(f, "{v}")?;
            if c == Color::Red {
                write!(f, "*")?;
            }
        }
        Ok(())
    }
}

/// `2ⁿ(n+1)^{n−1}`, the number of colored parking functions of length `n`.
/// For `n ≤ 5` the closed form is cross-checked by walking every colored
/// function explicitly.
pub fn nspf_count(n: u32) -> BigInt {
    assert!(n >= 1);
    let formula = (BigInt::one() << n) * BigInt::from(n + 1).pow(n - 1);
    if n <= 5 {
        let mut walked = BigInt::ZERO;
        for pf in enumerate_pf(n).expect("n ≤ 5 is within bound") {
            for mask in 0u32..(1 << n) {
                let entries: Vec<(u32, Color)> = pf
                    .entries()
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| {
                        let c = if mask >> i & 1 == 1 {
                            Color::Red
                        } else {
                            Color::Blue
                        };
                        (v, c)
                    })
                    .collect();
                let _ = Nspf::new(entries);
                walked += 1;
            }
        }
        assert_eq!(walked, formula, "closed form vs explicit walk at n = {n}");
    }
    formula
}

/// One block: all colored functions with a fixed value multiset and fixed
/// leftmost-occurrence colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// `multiplicities[v−1]` = number of entries equal to `v`.
    pub multiplicities: Vec<u32>,
    /// Color of the leftmost occurrence of each present value, ascending.
    pub first_colors: Vec<(u32, Color)>,
    /// Multiplicities sorted decreasingly, as a partition of `n`.
    pub label: Partition,
    /// `2^{n−ℓ}·multinomial(n; label)`.
    pub size: BigInt,
    /// Every member, when listing was requested: arrangements of the value
    /// multiset in lexicographic order, the colors of non-leftmost
    /// occurrences advancing like a binary counter (earliest such position
    /// least significant, blue before red).
    pub members: Option<Vec<Nspf>>,
}

impl Block {
    /// Short text key: values starred per their leftmost color, e.g. `1*2`.
    pub fn key_text(&self) -> String {
        let mut s = String::new();
        for &(v, c) in &self.first_colors {
            s.push_str(&v.to_string());
            if c == Color::Red {
                s.push('*');
            }
        }
        format!("[{s}]")
    }
}

/// The complete block partition for one `n`, with per-shape statistics.
#[derive(Clone, Debug)]
pub struct BlockCensus {
    pub n: u32,
    /// Blocks ordered by value-multiplicity vector (lexicographically
    /// descending), then by color index (blue-first binary counting on the
    /// present values, smallest value least significant).
    pub blocks: Vec<Block>,
    /// Per-shape rows `(label, number of blocks, size of each)`, ordered
    /// with the most parts of 1 first, matching the product-formula display.
    pub per_label: Vec<(Partition, u64, BigInt)>,
    /// Sum of all block sizes.
    pub total: BigInt,
}

/// Multiplicity vectors `(a₁,…,aₙ)` of parking multisets, lexicographically
/// descending: `Σa_v = n` with every prefix sum `≥` its index.
fn parking_multiplicity_vectors(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut acc = vec![0u32; n as usize];
    fn rec(v: usize, placed: u32, n: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if v == n as usize - 1 {
            acc[v] = n - placed;
            out.push(acc.clone());
            return;
        }
        let need = (v as u32 + 1).saturating_sub(placed);
        let mut a = n - placed;
        loop {
            acc[v] = a;
            rec(v + 1, placed + a, n, acc, out);
            if a == need {
                break;
            }
            a -= 1;
        }
    }
    if n == 1 {
        return vec![vec![1]];
    }
    rec(0, 0, n, &mut acc, &mut out);
    out
}

/// Arrangements of the multiset given by `mults` (value `v` appearing
/// `mults[v−1]` times), in lexicographic order.
fn multiset_arrangements(mults: &[u32]) -> Vec<Vec<u32>> {
    let n: u32 = mults.iter().sum();
    let mut remaining = mults.to_vec();
    let mut acc = Vec::with_capacity(n as usize);
    let mut out = Vec::new();
    fn rec(remaining: &mut [u32], acc: &mut Vec<u32>, n: usize, out: &mut Vec<Vec<u32>>) {
        if acc.len() == n {
            out.push(acc.clone());
            return;
        }
        for v in 0..remaining.len() {
            if remaining[v] > 0 {
                remaining[v] -= 1;
                acc.push(v as u32 + 1);
                rec(remaining, acc, n, out);
                acc.pop();
                remaining[v] += 1;
            }
        }
    }
    rec(&mut remaining, &mut acc, n as usize, &mut out);
    out
}

/// Builds every block of length `n`, checks the two claimed statistics —
/// each block's size is `2^{n−ℓ}·multinomial(n;λ)`, and the number of blocks
/// of shape `λ` is the coefficient of `V_λ` in [`sh_easy_v`] — plus the
/// grand total `2ⁿ(n+1)^{n−1}`, and (for `n ≤ 5`) that the blocks really do
/// partition the colored set, every colored function landing in exactly one
/// block via its key. With `with_members`, each block carries its full
/// member list (capped at `n ≤` [`COLORED_ENUM_BOUND`]).
pub fn partition_into_blocks(n: u32, with_members: bool) -> Result<BlockCensus, NspfError> {
    if !(1..=PF_ENUM_BOUND).contains(&n) {
        return Err(EnumError::BoundExceeded {
            n,
            bound: PF_ENUM_BOUND,
        }
        .into());
    }
    if with_members && n > COLORED_ENUM_BOUND {
        return Err(EnumError::MemberListingTooLarge {
            n,
            bound: COLORED_ENUM_BOUND,
        }
        .into());
    }
    Ok(build_census(n, with_members)?)
}

fn build_census(n: u32, with_members: bool) -> Result<BlockCensus, CensusError> {
    let mut blocks = Vec::new();
    for mults in parking_multiplicity_vectors(n) {
        let present: Vec<u32> = (1..=n).filter(|&v| mults[v as usize - 1] > 0).collect();
        let ell = present.len();
        let label = Partition::from_unsorted(
            mults.iter().copied().filter(|&m| m > 0).collect::<Vec<_>>(),
        );
        debug_assert_eq!(label.weight(), n);
        let size = (BigInt::one() << (n as usize - ell)) * multinomial(n, label.parts());

        let arrangements = if with_members {
            let arr = multiset_arrangements(&mults);
            // Rearranging cannot break the parking condition: it only sees
            // the multiset. Checked here on every arrangement.
            for a in &arr {
                assert!(is_parking(a), "rearrangement fails to park: {a:?}");
            }
            Some(arr)
        } else {
            None
        };

        for color_idx in 0u32..(1 << ell) {
            let first_colors: Vec<(u32, Color)> = present
                .iter()
                .enumerate()
                .map(|(j, &v)| {
                    let c = if color_idx >> j & 1 == 1 {
                        Color::Red
                    } else {
                        Color::Blue
                    };
                    (v, c)
                })
                .collect();
            let members = arrangements.as_ref().map(|arr| {
                let mut ms = Vec::new();
                for a in arr {
                    let mut seen = BTreeSet::new();
                    let mut free_positions = Vec::new();
                    let mut base: Vec<(u32, Color)> = Vec::with_capacity(a.len());
                    for (i, &v) in a.iter().enumerate() {
                        if seen.insert(v) {
                            let c = first_colors
                                .iter()
                                .find(|&&(fv, _)| fv == v)
                                .map(|&(_, c)| c)
                                .expect("present value has an assigned color");
                            base.push((v, c));
                        } else {
                            free_positions.push(i);
                            base.push((v, Color::Blue));
                        }
                    }
                    for mask in 0u32..(1 << free_positions.len()) {
                        let mut entries = base.clone();
                        for (j, &pos) in free_positions.iter().enumerate() {
                            if mask >> j & 1 == 1 {
                                entries[pos].1 = Color::Red;
                            }
                        }
                        ms.push(Nspf::new(entries));
                    }
                }
                ms
            });
            blocks.push(Block {
                multiplicities: mults.clone(),
                first_colors,
                label: label.clone(),
                size: size.clone(),
                members,
            });
        }
    }

    // Size check: member count against the closed formula.
    for b in &blocks {
        if let Some(ms) = &b.members {
            let got = BigInt::from(ms.len());
            if got != b.size {
                return Err(CensusError::SizeMismatch {
                    key: b.key_text(),
                    label: b.label.clone(),
                    expected: b.size.clone(),
                    got,
                });
            }
        }
    }

    // Shape-count check against the product-formula coefficients.
    let coeffs = sh_easy_v(n);
    let mut per_label_map: BTreeMap<Partition, u64> = BTreeMap::new();
    for b in &blocks {
        *per_label_map.entry(b.label.clone()).or_insert(0) += 1;
    }
    for (label, &count) in &per_label_map {
        let expected = coeffs.coeff(label);
        if expected != crate::Rational::from(BigInt::from(count)) {
            return Err(CensusError::CountMismatch {
                label: label.clone(),
                expected: expected.to_integer(),
                got: BigInt::from(count),
            });
        }
    }
    if per_label_map.len() != coeffs.num_terms() {
        let missing = coeffs
            .terms()
            .find(|(l, _)| !per_label_map.contains_key(l))
            .expect("some coefficient shape is unrepresented");
        return Err(CensusError::CountMismatch {
            label: missing.0.clone(),
            expected: missing.1.to_integer(),
            got: BigInt::ZERO,
        });
    }

    // Grand total.
    let total: BigInt = blocks.iter().map(|b| b.size.clone()).sum();
    let expected_total = (BigInt::one() << n) * BigInt::from(n + 1).pow(n - 1);
    if total != expected_total {
        return Err(CensusError::TotalMismatch {
            expected: expected_total,
            got: total,
        });
    }

    // Partition check by full colored enumeration: every colored function's
    // key matches exactly one block.
    if n <= 5 {
        let mut key_index: BTreeMap<BlockKey, usize> = BTreeMap::new();
        for (i, b) in blocks.iter().enumerate() {
            key_index.insert((b.multiplicities.clone(), b.first_colors.clone()), i);
        }
        let mut hits = vec![0u64; blocks.len()];
        for pf in enumerate_pf(n).expect("n ≤ 5 is within bound") {
            for mask in 0u32..(1 << n) {
                let entries: Vec<(u32, Color)> = pf
                    .entries()
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| {
                        let c = if mask >> i & 1 == 1 {
                            Color::Red
                        } else {
                            Color::Blue
                        };
                        (v, c)
                    })
                    .collect();
                let nspf = Nspf::new(entries);
                match key_index.get(&nspf.block_key()) {
                    Some(&i) => hits[i] += 1,
                    None => {
                        return Err(CensusError::NotAPartition {
                            nspf: nspf.to_string(),
                            hits: 0,
                        })
                    }
                }
            }
        }
        for (i, b) in blocks.iter().enumerate() {
            if BigInt::from(hits[i]) != b.size {
                return Err(CensusError::SizeMismatch {
                    key: b.key_text(),
                    label: b.label.clone(),
                    expected: b.size.clone(),
                    got: BigInt::from(hits[i]),
                });
            }
        }
    }

    let mut per_label: Vec<(Partition, u64, BigInt)> = per_label_map
        .into_iter()
        .map(|(label, count)| {
            let ell = label.length();
            let size = (BigInt::one() << (n as usize - ell)) * multinomial(n, label.parts());
            (label, count, size)
        })
        .collect();
    per_label.sort_by(|a, b| cmp_mult_desc(&a.0, &b.0));

    Ok(BlockCensus {
        n,
        blocks,
        per_label,
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::powersum::PPoly;
    use crate::schur::VExpansion;
    use crate::shifted::sh_main_v;
    use crate::{rat, Rational};
    use num_traits::Zero;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn parking_condition() {
        assert!(is_parking(&[2, 1]));
        assert!(!is_parking(&[2, 2]));
        assert!(is_parking(&[1; 7]));
        assert!(is_parking(&[3, 1, 1]));
        assert!(!is_parking(&[3, 3, 1]));
        assert!(!is_parking(&[0, 1]));
        let count = (1..=3u32)
            .flat_map(|a| (1..=3u32).flat_map(move |b| (1..=3u32).map(move |c| [a, b, c])))
            .filter(|s| is_parking(s))
            .count();
        assert_eq!(count, 16);
    }

    #[test]
    fn rearrangement_invariance() {
        // The parking condition only sees the multiset.
        for pf in enumerate_pf(4).unwrap() {
            let mut rev = pf.entries().to_vec();
            rev.reverse();
            assert!(is_parking(&rev));
            let mut rot = pf.entries().to_vec();
            rot.rotate_left(1);
            assert!(is_parking(&rot));
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let two: Vec<String> = enumerate_pf(2).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(two, ["11", "12", "21"]);

        let three: Vec<ParkingFunction> = enumerate_pf(3).unwrap().collect();
        assert_eq!(three.len(), 16);
        assert_eq!(three[0].entries(), &[1, 1, 1]);
        assert_eq!(three[15].entries(), &[3, 2, 1]);
        for w in three.windows(2) {
            assert!(w[0].entries() < w[1].entries(), "lex order violated");
        }

        for n in 1..=6u32 {
            let count = enumerate_pf(n).unwrap().count() as u64;
            assert_eq!(count, (n as u64 + 1).pow(n - 1), "n = {n}");
        }
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        assert_eq!(
            enumerate_pf(9).unwrap_err(),
            EnumError::BoundExceeded { n: 9, bound: 8 }
        );
        assert!(enumerate_pf(0).is_err());
    }

    #[test]
    fn fixed_point_counts_match_power_formula() {
        assert_eq!(count_fixed(&pt(&[1, 1, 1])).unwrap(), 16);
        assert_eq!(count_fixed(&pt(&[2, 1])).unwrap(), 4);
        assert_eq!(count_fixed(&pt(&[3])).unwrap(), 1);
        for n in 1..=6u32 {
            for l in crate::partitions::gen_partitions(n, crate::partitions::Flavor::Any) {
                let predicted = (n as u64 + 1).pow(l.length() as u32 - 1);
                assert_eq!(count_fixed(&l).unwrap(), predicted, "λ = {l}");
            }
        }
    }

    #[test]
    fn fixed_point_count_is_a_class_function() {
        // Same cycle type, different supports: (1 2 3)(4 5) vs (2 4 5)(1 3).
        let a = vec![1, 2, 0, 4, 3];
        let b = vec![2, 3, 0, 4, 1];
        assert_eq!(count_fixed_by_perm(&a), count_fixed_by_perm(&b));
        assert_eq!(count_fixed_by_perm(&a), count_fixed(&pt(&[3, 2])).unwrap());

        // And against a filter over the raw enumeration.
        let brute = enumerate_pf(5)
            .unwrap()
            .filter(|pf| {
                let e = pf.entries();
                b.iter().enumerate().all(|(i, &j)| e[i] == e[j])
            })
            .count() as u64;
        assert_eq!(brute, count_fixed(&pt(&[3, 2])).unwrap());
    }

    #[test]
    fn colored_count_closed_form() {
        assert_eq!(nspf_count(1), BigInt::from(2));
        assert_eq!(nspf_count(2), BigInt::from(12));
        assert_eq!(nspf_count(4), BigInt::from(2000));
        assert_eq!(nspf_count(8), BigInt::from(256u64 * 4782969));
    }

    #[test]
    fn length_two_census_matches_published_example() {
        let census = partition_into_blocks(2, true).unwrap();
        assert_eq!(census.blocks.len(), 6);
        assert!(census.blocks.iter().all(|b| b.size == BigInt::from(2)));
        assert_eq!(census.total, BigInt::from(12));

        let rendered: Vec<Vec<String>> = census
            .blocks
            .iter()
            .map(|b| {
                b.members
                    .as_ref()
                    .unwrap()
                    .iter()
                    .map(|m| m.to_string())
                    .collect()
            })
            .collect();
        let expected: Vec<Vec<String>> = [
            ["11", "11*"],
            ["1*1", "1*1*"],
            ["12", "21"],
            ["1*2", "21*"],
            ["12*", "2*1"],
            ["1*2*", "2*1*"],
        ]
        .iter()
        .map(|pair| pair.iter().map(|s| s.to_string()).collect())
        .collect();
        assert_eq!(rendered, expected);

        let ones_blocks = census
            .blocks
            .iter()
            .filter(|b| b.label == pt(&[1, 1]))
            .count();
        assert_eq!(ones_blocks, 4);
    }

    #[test]
    fn length_one_census() {
        let census = partition_into_blocks(1, true).unwrap();
        assert_eq!(census.blocks.len(), 2);
        for b in &census.blocks {
            assert_eq!(b.label, pt(&[1]));
            assert_eq!(b.size, BigInt::one());
        }
        let texts: Vec<String> = census
            .blocks
            .iter()
            .map(|b| b.members.as_ref().unwrap()[0].to_string())
            .collect();
        assert_eq!(texts, ["1", "1*"]);
    }

    #[test]
    fn length_three_census_statistics() {
        let census = partition_into_blocks(3, true).unwrap();
        assert_eq!(census.total, BigInt::from(128));
        let mut subtotals: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for b in &census.blocks {
            *subtotals.entry(b.label.clone()).or_insert(BigInt::ZERO) += &b.size;
        }
        assert_eq!(subtotals[&pt(&[3])], BigInt::from(8));
        assert_eq!(subtotals[&pt(&[2, 1])], BigInt::from(72));
        assert_eq!(subtotals[&pt(&[1, 1, 1])], BigInt::from(48));

        let row = census
            .per_label
            .iter()
            .find(|(l, _, _)| *l == pt(&[2, 1]))
            .unwrap();
        assert_eq!(row.1, 12);
        assert_eq!(row.2, BigInt::from(6));
    }

    #[test]
    fn member_listing_cap() {
        assert_eq!(
            partition_into_blocks(7, true).unwrap_err(),
            NspfError::Enum(EnumError::MemberListingTooLarge { n: 7, bound: 6 })
        );
        // Without members the same size is fine.
        let census = partition_into_blocks(7, false).unwrap();
        assert_eq!(census.total, nspf_count(7));
    }

    #[test]
    fn per_label_rows_follow_display_order() {
        let census = partition_into_blocks(4, false).unwrap();
        let labels: Vec<Partition> = census.per_label.iter().map(|r| r.0.clone()).collect();
        assert_eq!(
            labels,
            vec![
                pt(&[1, 1, 1, 1]),
                pt(&[2, 1, 1]),
                pt(&[3, 1]),
                pt(&[2, 2]),
                pt(&[4]),
            ]
        );
    }

    #[test]
    fn serious_spf_numerology() {
        for n in 1..=8u32 {
            let v = sh_main_v(n);
            let mut weighted = Rational::zero();
            for (l, c) in v.terms() {
                let dim = (BigInt::one() << (n as usize - l.length())) * multinomial(n, l.parts());
                weighted += c * Rational::from(dim);
            }
            assert_eq!(weighted, Rational::from(nspf_count(n)), "n = {n}");
            assert_eq!(
                v.coeff_sum(),
                Rational::from(crate::shifted::schroeder(n)),
                "n = {n}"
            );
        }
    }

    #[test]
    fn block_dimension_matches_algebraic_dimension() {
        // dim V_λ computed through the power-sum expansion equals the
        // combinatorial block size for odd shapes.
        for n in 1..=6u32 {
            for l in crate::partitions::gen_partitions(n, crate::partitions::Flavor::Odd) {
                let mut v = VExpansion::new();
                v.add_term(l.clone(), rat(1));
                let dim = crate::schur::v_to_gamma(&v).dimension(n).unwrap();
                let expected = Rational::from(
                    (BigInt::one() << (n as usize - l.length())) * multinomial(n, l.parts()),
                );
                assert_eq!(dim, expected, "λ = {l}");
            }
        }
    }

    #[test]
    fn square_of_first_power_sum_has_dimension_two() {
        let mut v = VExpansion::new();
        v.add_term(pt(&[2]), rat(1));
        let p2 = crate::schur::v_to_gamma(&v);
        assert_eq!(p2, PPoly::power_sum(1).pow(2));
        assert_eq!(p2.dimension(2).unwrap(), rat(2));
    }
}
