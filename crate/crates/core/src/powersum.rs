//! Exact polynomials in the power sums `p_1, p_2, p_3, …` over the rationals.
//!
//! A symmetric function is stored in the power-sum basis as a finite map
//! `partition λ → coefficient of p_λ`, where `p_λ = p_{λ_1} p_{λ_2} ⋯`. The
//! map is a [`BTreeMap`], so iteration is always in the canonical partition
//! order and every operation is deterministic.
//!
//! The subring generated by the odd power sums `p_1, p_3, p_5, …` plays a
//! special role; [`GammaPoly`] is an alias that marks values known to lie in
//! it (membership is checked by [`PPoly::is_gamma`], not by the type system).

use crate::partitions::{gen_partitions, Flavor, Partition};
use crate::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial is not homogeneous of degree {0}")]
    NotHomogeneous(u32),
}

/// A polynomial in the power sums with rational coefficients.
///
/// The zero coefficient is never stored, so `terms` is empty exactly for the
/// zero polynomial and two values are equal iff their maps are equal.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PPoly {
    terms: BTreeMap<Partition, Rational>,
}

/// A [`PPoly`] that lies in the subring generated by the odd power sums.
pub type GammaPoly = PPoly;

impl PPoly {
    pub fn new() -> Self {
        PPoly::default()
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Rational) -> Self {
        let mut p = PPoly::new();
        p.add_term(Partition::empty(), c);
        p
    }

    /// The power sum `p_k`, `k ≥ 1`.
    pub fn power_sum(k: u32) -> Self {
        PPoly::monomial(Partition::single(k))
    }

    /// The monomial `p_λ` with coefficient one.
    pub fn monomial(lambda: Partition) -> Self {
        let mut p = PPoly::new();
        p.add_term(lambda, Rational::one());
        p
    }

    /// Adds `c · p_λ`, dropping the entry if the total cancels to zero.
    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// The coefficient of `p_λ` (zero when absent).
    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return PPoly::new();
        }
        let mut out = PPoly::new();
        for (l, a) in &self.terms {
            out.terms.insert(l.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = PPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// The degree of the highest-weight term, or `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::weight).max()
    }

    /// True when every monomial has weight `n` (vacuously true for zero).
    pub fn is_homogeneous(&self, n: u32) -> bool {
        self.terms.keys().all(|l| l.weight() == n)
    }

    /// True when every power sum that occurs has odd index, i.e. the value
    /// lies in the subring generated by `p_1, p_3, p_5, …`.
    pub fn is_gamma(&self) -> bool {
        self.terms.keys().all(Partition::is_odd)
    }

    /// The substitution `p_k(x/x)`: every odd power sum is doubled and every
    /// even power sum is killed, extended multiplicatively to monomials. This
    /// is a ring homomorphism onto the odd subring.
    pub fn shiftify(&self) -> GammaPoly {
        let mut out = PPoly::new();
        for (l, c) in &self.terms {
            if l.is_odd() {
                let factor = Rational::from(BigInt::one() << l.length());
                out.add_term(l.clone(), c * factor);
            }
        }
        out
    }

    /// The Hall inner product, under which `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ`.
    pub fn inner_product(&self, other: &PPoly) -> Rational {
        let mut acc = Rational::zero();
        for (l, a) in &self.terms {
            if let Some(b) = other.terms.get(l) {
                acc += a * b * Rational::from(l.z());
            }
        }
        acc
    }

    /// The dimension of the (virtual) representation of the symmetric group
    /// on `n` letters whose Frobenius characteristic is `self`: the value
    /// `n! · [p_1^n] self`. Fails unless `self` is homogeneous of degree `n`.
    pub fn dimension(&self, n: u32) -> Result<Rational, PolyError> {
        if !self.is_homogeneous(n) {
            return Err(PolyError::NotHomogeneous(n));
        }
        let ones = Partition::new(vec![1; n as usize]);
        Ok(self.coeff(&ones) * Rational::from(crate::partitions::factorial(n)))
    }

    /// The principal specialization at `m` equal variables: `p_k ↦ m` for all
    /// `k`, so `p_λ ↦ m^{ℓ(λ)}`.
    pub fn eval_ones(&self, m: u32) -> Rational {
        let m = BigInt::from(m);
        let mut acc = Rational::zero();
        for (l, c) in &self.terms {
            acc += c * Rational::from(m.pow(l.length() as u32));
        }
        acc
    }

    pub fn latex(&self) -> String {
        latex_bracket_terms(self.terms.iter(), 'p')
    }
}

/// Renders a term list like the text output of the command-line tool, e.g.
/// `6*p[1,1]`, with an arbitrary basis letter. Shared by the p-basis and the
/// P-expansion displays.
pub(crate) fn fmt_bracket_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Partition, &'a Rational)>,
    letter: char,
) -> fmt::Result {
    let mut wrote = false;
    for (i, (l, c)) in terms.enumerate() {
        let abs = c.abs();
        if i == 0 {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if l.is_empty() {
            write!(f, "{abs}")?;
        } else {
            let parts: Vec<String> = l.parts().iter().map(u32::to_string).collect();
            write!(f, "{abs}*{letter}[{}]", parts.join(","))?;
        }
        wrote = true;
    }
    if !wrote {
        write!(f, "0")?;
    }
    Ok(())
}

/// LaTeX form of a term list with partition subscripts, e.g. `6p_{(1,1)}`.
pub(crate) fn latex_bracket_terms<'a>(
    terms: impl Iterator<Item = (&'a Partition, &'a Rational)>,
    letter: char,
) -> String {
    let mut out = String::new();
    for (i, (l, c)) in terms.enumerate() {
        let abs = c.abs();
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !abs.is_one() || l.is_empty() {
            out.push_str(&latex_rational(&abs));
        }
        if !l.is_empty() {
            out.push_str(&format!("{letter}_{{{l}}}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders a rational for LaTeX: integers plainly, fractions with `\frac`.
pub(crate) fn latex_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else if c.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", c.numer().abs(), c.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

impl fmt::Display for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_bracket_terms(f, self.terms.iter(), 'p')
    }
}

impl fmt::Debug for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Zero for PPoly {
    fn zero() -> Self {
        PPoly::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for PPoly {
    fn one() -> Self {
        PPoly::constant(Rational::one())
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Partition::empty())
                .is_some_and(Rational::is_one)
    }
}

impl AddAssign<&PPoly> for PPoly {
    fn add_assign(&mut self, rhs: &PPoly) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), c.clone());
        }
    }
}

impl SubAssign<&PPoly> for PPoly {
    fn sub_assign(&mut self, rhs: &PPoly) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), -c.clone());
        }
    }
}

impl Add for PPoly {
    type Output = PPoly;
    fn add(mut self, rhs: PPoly) -> PPoly {
        self += &rhs;
        self
    }
}

impl Add for &PPoly {
    type Output = PPoly;
    fn add(self, rhs: &PPoly) -> PPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for PPoly {
    type Output = PPoly;
    fn sub(mut self, rhs: PPoly) -> PPoly {
        self -= &rhs;
        self
    }
}

impl Sub for &PPoly {
    type Output = PPoly;
    fn sub(self, rhs: &PPoly) -> PPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for PPoly {
    type Output = PPoly;
    fn neg(self) -> PPoly {
        let mut out = PPoly::new();
        for (l, c) in self.terms {
            out.terms.insert(l, -c);
        }
        out
    }
}

impl Mul for &PPoly {
    type Output = PPoly;
    fn mul(self, rhs: &PPoly) -> PPoly {
        let mut out = PPoly::new();
        for (l, a) in &self.terms {
            for (m, b) in &rhs.terms {
                out.add_term(l.concat(m), a * b);
            }
        }
        out
    }
}

impl Mul for PPoly {
    type Output = PPoly;
    fn mul(self, rhs: PPoly) -> PPoly {
        &self * &rhs
    }
}

/// The complete homogeneous symmetric function `h_n = Σ_{λ⊢n} p_λ / z_λ`.
pub fn hom_sym(n: u32) -> PPoly {
    let mut out = PPoly::new();
    for l in gen_partitions(n, Flavor::Any) {
        let z = Rational::from(l.z());
        out.add_term(l, z.recip());
    }
    out
}

/// The elementary symmetric function
/// `e_n = Σ_{λ⊢n} (−1)^{n−ℓ(λ)} p_λ / z_λ`.
pub fn elem_sym(n: u32) -> PPoly {
    let mut out = PPoly::new();
    for l in gen_partitions(n, Flavor::Any) {
        let mut c = Rational::from(l.z()).recip();
        if (n as usize - l.length()) % 2 == 1 {
            c = -c;
        }
        out.add_term(l, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{frac, rat};

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn arithmetic_basics() {
        let p1 = PPoly::power_sum(1);
        let p2 = PPoly::power_sum(2);
        let sq = &p1 * &p1;
        assert_eq!(sq.coeff(&pt(&[1, 1])), rat(1));
        let prod = &sq * &p2;
        assert_eq!(prod.coeff(&pt(&[2, 1, 1])), rat(1));
        assert_eq!(prod.num_terms(), 1);

        let diff = &prod - &prod;
        assert!(diff.is_zero());

        assert_eq!(p1.pow(3).coeff(&pt(&[1, 1, 1])), rat(1));
        assert!(PPoly::zero().pow(0).is_one());
    }

    #[test]
    fn hom_and_elem_small_cases() {
        // h_2 = (p_1² + p_2)/2, e_2 = (p_1² − p_2)/2.
        let h2 = hom_sym(2);
        assert_eq!(h2.coeff(&pt(&[1, 1])), frac(1, 2));
        assert_eq!(h2.coeff(&pt(&[2])), frac(1, 2));
        let e2 = elem_sym(2);
        assert_eq!(e2.coeff(&pt(&[1, 1])), frac(1, 2));
        assert_eq!(e2.coeff(&pt(&[2])), frac(-1, 2));
        assert_eq!(hom_sym(0), PPoly::one());
        assert_eq!(hom_sym(1), PPoly::power_sum(1));
        assert_eq!(elem_sym(1), PPoly::power_sum(1));
    }

    #[test]
    fn hom_satisfies_newton_recurrence() {
        // n·h_n = Σ_{k=1}^{n} p_k h_{n−k} — an independent route to h_n.
        let hs: Vec<PPoly> = (0..=9).map(hom_sym).collect();
        for n in 1..=9u32 {
            let mut rhs = PPoly::zero();
            for k in 1..=n {
                rhs += &(&PPoly::power_sum(k) * &hs[(n - k) as usize]);
            }
            assert_eq!(hs[n as usize].scale(&rat(n as i64)), rhs, "n = {n}");
        }
    }

    #[test]
    fn elem_satisfies_newton_recurrence() {
        // n·e_n = Σ_{k=1}^{n} (−1)^{k−1} p_k e_{n−k}.
        let es: Vec<PPoly> = (0..=9).map(elem_sym).collect();
        for n in 1..=9u32 {
            let mut rhs = PPoly::zero();
            for k in 1..=n {
                let term = &PPoly::power_sum(k) * &es[(n - k) as usize];
                if k % 2 == 1 {
                    rhs += &term;
                } else {
                    rhs -= &term;
                }
            }
            assert_eq!(es[n as usize].scale(&rat(n as i64)), rhs, "n = {n}");
        }
    }

    #[test]
    fn shiftify_doubles_odd_and_kills_even() {
        let f = PPoly::monomial(pt(&[3, 1, 1]));
        assert_eq!(f.shiftify().coeff(&pt(&[3, 1, 1])), rat(8));
        assert!(PPoly::power_sum(2).shiftify().is_zero());
        assert!(PPoly::monomial(pt(&[4, 3, 1])).shiftify().is_zero());
        // Ring homomorphism on a mixed value.
        let g = &PPoly::power_sum(1) + &PPoly::power_sum(2);
        let gg = &g * &g; // p1² + 2 p2 p1 + p2²
        assert_eq!(gg.shiftify(), PPoly::power_sum(1).shiftify().pow(2));
    }

    #[test]
    fn inner_product_is_diagonal_in_z() {
        assert_eq!(
            PPoly::monomial(pt(&[3, 1, 1])).inner_product(&PPoly::monomial(pt(&[3, 1, 1]))),
            rat(6)
        );
        assert_eq!(
            PPoly::monomial(pt(&[3, 1, 1])).inner_product(&PPoly::monomial(pt(&[5]))),
            rat(0)
        );
        // ⟨h_n, p_λ⟩ = 1 for every λ ⊢ n.
        for n in 1..=7u32 {
            let h = hom_sym(n);
            for l in gen_partitions(n, Flavor::Any) {
                assert_eq!(h.inner_product(&PPoly::monomial(l)), rat(1));
            }
        }
        // h_n ⟂ e_n for n ≥ 2 (they are distinct irreducibles).
        for n in 2..=7u32 {
            assert_eq!(hom_sym(n).inner_product(&elem_sym(n)), rat(0));
            assert_eq!(hom_sym(n).inner_product(&hom_sym(n)), rat(1));
        }
    }

    #[test]
    fn dimension_of_known_representations() {
        // Trivial and sign representations have dimension 1; the regular
        // character p_1^n has dimension n!.
        for n in 1..=8u32 {
            assert_eq!(hom_sym(n).dimension(n).unwrap(), rat(1));
            assert_eq!(elem_sym(n).dimension(n).unwrap(), rat(1));
            assert_eq!(
                PPoly::power_sum(1).pow(n).dimension(n).unwrap(),
                Rational::from(crate::partitions::factorial(n))
            );
        }
        assert_eq!(
            hom_sym(3).dimension(4),
            Err(PolyError::NotHomogeneous(4))
        );
        let mixed = &hom_sym(2) + &hom_sym(3);
        assert!(mixed.dimension(2).is_err());
        assert_eq!(PPoly::zero().dimension(5).unwrap(), rat(0));
    }

    #[test]
    fn eval_ones_matches_binomial_counts() {
        // h_n(1^m) = C(m+n−1, n) and e_n(1^m) = C(m, n).
        for n in 0..=6u32 {
            for m in 0..=6u32 {
                assert_eq!(
                    hom_sym(n).eval_ones(m),
                    Rational::from(crate::partitions::binomial(m + n.max(1) - 1, n)),
                    "h_{n}(1^{m})"
                );
                assert_eq!(
                    elem_sym(n).eval_ones(m),
                    Rational::from(crate::partitions::binomial(m, n)),
                    "e_{n}(1^{m})"
                );
            }
        }
    }

    #[test]
    fn display_formats() {
        let mut f = PPoly::new();
        f.add_term(pt(&[1, 1]), rat(6));
        assert_eq!(f.to_string(), "6*p[1,1]");
        // Canonical order within one weight puts (2) before (1,1).
        f.add_term(pt(&[2]), frac(-1, 2));
        assert_eq!(f.to_string(), "-1/2*p[2] + 6*p[1,1]");
        assert_eq!(PPoly::zero().to_string(), "0");
        assert_eq!(PPoly::constant(frac(3, 4)).to_string(), "3/4");
        assert_eq!(f.latex(), "-\\frac{1}{2}p_{(2)} + 6p_{(1,1)}");
        assert_eq!(PPoly::power_sum(3).latex(), "p_{(3)}");
    }

    #[test]
    fn gamma_membership() {
        assert!(PPoly::monomial(pt(&[5, 3, 3, 1])).is_gamma());
        assert!(!PPoly::monomial(pt(&[4, 1])).is_gamma());
        assert!(PPoly::zero().is_gamma());
    }
}
