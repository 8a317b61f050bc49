//! Integer partitions and the small combinatorial toolbox built on them.
//!
//! A partition is stored as a weakly decreasing list of positive parts. Three
//! families show up throughout the crate and are selected by [`Flavor`]:
//! unrestricted partitions, partitions into odd parts, and partitions into
//! distinct parts.
//!
//! The [`Ord`] on [`Partition`] is graded: first by weight, then by the parts
//! lists in *descending* lexicographic order. Within one weight this is the
//! canonical order used everywhere in the crate — `(6)` before `(5,1)` before
//! `(4,2)` — and it is the order [`gen_partitions`] emits.

use num_bigint::BigInt;
use num_traits::One;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Restriction on the parts admitted by [`gen_partitions`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// No restriction.
    Any,
    /// Every part odd.
    Odd,
    /// Parts strictly decreasing.
    Distinct,
}

/// A partition of a nonnegative integer: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing
    /// and positive.
    ///
    /// Panics if the list is increasing somewhere or contains a zero; use
    /// [`Partition::from_unsorted`] for raw multisets.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {parts:?}"
        );
        assert!(
            parts.last().is_none_or(|&p| p > 0),
            "parts must be positive: {parts:?}"
        );
        Partition { parts }
    }

    /// Builds a partition from an arbitrary multiset of positive parts.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-part partition `(k)`, `k ≥ 1`.
    pub fn single(k: u32) -> Self {
        Partition::new(vec![k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The weight `|λ|`, i.e. the sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The number of parts `ℓ(λ)`.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True when every part is odd.
    pub fn is_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    /// True when the parts are strictly decreasing.
    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn has_flavor(&self, flavor: Flavor) -> bool {
        match flavor {
            Flavor::Any => true,
            Flavor::Odd => self.is_odd(),
            Flavor::Distinct => self.is_distinct(),
        }
    }

    /// Multiplicity map `part value → how often it occurs`.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Inverse of [`Partition::multiplicities`].
    pub fn from_multiplicities(mult: &BTreeMap<u32, u32>) -> Self {
        let mut parts = Vec::new();
        for (&value, &count) in mult.iter().rev() {
            if value > 0 {
                parts.extend(std::iter::repeat_n(value, count as usize));
            }
        }
        Partition::new(parts)
    }

    /// The multiset union of two partitions (part lists merged, re-sorted).
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// The centralizer order `z_λ = ∏ k^{m_k} · m_k!` over the distinct part
    /// values `k` with multiplicities `m_k`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (&value, &count) in &self.multiplicities() {
            z *= BigInt::from(value).pow(count);
            z *= factorial(count);
        }
        z
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            // Within one weight: descending lexicographic on the part lists,
            // so (6) < (5,1) < (4,2) < … as keys of a BTreeMap.
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n` with the given flavor, in canonical order (first part
/// descending, then recursively): `gen_partitions(6, Distinct)` yields
/// `(6), (5,1), (4,2), (3,2,1)`.
///
/// `n = 0` yields exactly the empty partition for every flavor.
pub fn gen_partitions(n: u32, flavor: Flavor) -> Vec<Partition> {
    fn rec(
        remaining: u32,
        max_part: u32,
        flavor: Flavor,
        prefix: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let mut k = max_part.min(remaining);
        while k >= 1 {
            if !matches!(flavor, Flavor::Odd) || k % 2 == 1 {
                let next_max = match flavor {
                    Flavor::Distinct => k - 1,
                    _ => k,
                };
                prefix.push(k);
                rec(remaining - k, next_max, flavor, prefix, out);
                prefix.pop();
            }
            k -= 1;
        }
    }

    let mut out = Vec::new();
    rec(n, n, flavor, &mut Vec::new(), &mut out);
    out
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= BigInt::from(k);
    }
    f
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::ZERO;
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
    }
    num / factorial(k)
}

/// Multinomial coefficient `n! / (k_1! · k_2! ⋯)`; the `k_i` must sum to `n`.
pub fn multinomial(n: u32, ks: &[u32]) -> BigInt {
    assert_eq!(
        ks.iter().sum::<u32>(),
        n,
        "multinomial parts must sum to the top index"
    );
    let mut denom = BigInt::one();
    for &k in ks {
        denom *= factorial(k);
    }
    factorial(n) / denom
}
