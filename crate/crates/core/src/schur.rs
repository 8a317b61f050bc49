//! Schur P- and Q-functions in the power-sum basis, and the two expansion
//! forms built from them.
//!
//! The generating series `K(t) = 1 + 2ΣPₙtⁿ = exp(2Σ_{k odd} p_k t^k/k)`
//! defines the one-row functions. Multi-row `P_λ` (λ with distinct parts) is
//! assembled from the two-row `Q_{(r,s)}` recurrence via a Pfaffian, padding
//! with a zero part when the number of rows is odd; `{P_λ}` is then a basis
//! of the odd-power-sum subring Γ, and [`p_basis_convert`] inverts it by an
//! exact linear solve.
//!
//! [`VExpansion`] holds combinations of the *products* `V_λ = P_{λ₁}P_{λ₂}⋯`,
//! which for odd-part λ are a second (polynomial) basis of Γ;
//! [`even_p_elimination`] rewrites an even-indexed `P_{2n}` in that basis,
//! with signed Catalan-number coefficients.

use crate::partitions::{gen_partitions, multinomial, Flavor, Partition};
use crate::powersum::{fmt_bracket_terms, latex_bracket_terms, GammaPoly, PPoly, PolyError};
use crate::shifted::catalan;
use crate::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{AddAssign, Mul};
use std::sync::Mutex;

/// Coefficients of `K(t)` up to the highest order computed so far; a pure
/// read-through cache (identical values are recomputed, never changed).
static Q_CACHE: Mutex<Vec<PPoly>> = Mutex::new(Vec::new());

/// Memoized `p_lambda` values for multi-row partitions.
static P_LAMBDA_CACHE: Mutex<BTreeMap<Partition, PPoly>> = Mutex::new(BTreeMap::new());

/// The series `K(t) = exp(2 Σ_{k odd, k ≤ N} p_k t^k / k)` truncated at
/// order `N ≥ 1`; the coefficient of `tⁿ` is `Qₙ = 2Pₙ`.
pub fn q_series(order: usize) -> crate::GammaSeries {
    assert!(order >= 1);
    let log = crate::GammaSeries::from_fn(order, |k| {
        if k % 2 == 1 {
            PPoly::power_sum(k as u32).scale(&crate::frac(2, k as i64))
        } else {
            PPoly::zero()
        }
    });
    log.exp().expect("the logarithm has zero constant term")
}

/// `K(−t)` at the same order: the sign of every odd coefficient is flipped.
pub fn q_series_neg(order: usize) -> crate::GammaSeries {
    let k = q_series(order);
    crate::GammaSeries::from_fn(order, |j| {
        if j % 2 == 1 {
            -k.coeff(j).clone()
        } else {
            k.coeff(j).clone()
        }
    })
}

/// `Q₀, …, Qₙ` from the cache, extending it if needed.
fn q_upto(n: usize) -> Vec<PPoly> {
    let mut cache = Q_CACHE.lock().unwrap();
    if cache.len() <= n {
        *cache = q_series(n.max(1)).coeffs().to_vec();
    }
    cache[..=n].to_vec()
}

/// The Schur Q-function `Qₙ = 2Pₙ`, `n ≥ 1`.
pub fn q_function(n: u32) -> GammaPoly {
    assert!(n >= 1);
    q_upto(n as usize)[n as usize].clone()
}

/// The one-row Schur P-function `Pₙ = Qₙ/2`, `n ≥ 1`.
pub fn p_function(n: u32) -> GammaPoly {
    q_function(n).scale(&crate::frac(1, 2))
}

/// The two-row `Q_{(r,s)}` for `r > s ≥ 0`, with `Q_{(r,0)} = Q_r`:
/// `Q_{(r,s)} = Q_r Q_s + 2 Σ_{i=1}^{s} (−1)^i Q_{r+i} Q_{s−i}` (`Q₀ = 1`).
fn q_two_row(r: u32, s: u32, qs: &[PPoly]) -> PPoly {
    if s == 0 {
        return qs[r as usize].clone();
    }
    let mut acc = &qs[r as usize] * &qs[s as usize];
    for i in 1..=s {
        let prod = (&qs[(r + i) as usize] * &qs[(s - i) as usize]).scale(&crate::rat(2));
        if i % 2 == 1 {
            acc -= &prod;
        } else {
            acc += &prod;
        }
    }
    acc
}

/// Pfaffian of the antisymmetric matrix whose upper triangle is given, by
/// recursive expansion along the first row; `active` is sorted ascending.
fn pfaffian(a: &[Vec<PPoly>], active: &[usize]) -> PPoly {
    if active.is_empty() {
        return PPoly::one();
    }
    let i = active[0];
    let mut acc = PPoly::zero();
    for (pos, &j) in active.iter().enumerate().skip(1) {
        let rest: Vec<usize> = active
            .iter()
            .copied()
            .filter(|&k| k != i && k != j)
            .collect();
        let term = &a[i][j] * &pfaffian(a, &rest);
        if pos % 2 == 1 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// The Schur P-function `P_λ` for a partition with distinct parts, in the
/// power-sum basis: `P_λ = Q_λ / 2^{ℓ(λ)}` with `Q_λ` the Pfaffian of the
/// two-row values (λ padded by a zero part to even length).
pub fn p_lambda(lambda: &Partition) -> GammaPoly {
    assert!(lambda.is_distinct(), "P_λ needs distinct parts: {lambda}");
    if lambda.is_empty() {
        return PPoly::one();
    }
    if lambda.length() == 1 {
        return p_function(lambda.parts()[0]);
    }
    if let Some(hit) = P_LAMBDA_CACHE.lock().unwrap().get(lambda) {
        return hit.clone();
    }

    let mut rows: Vec<u32> = lambda.parts().to_vec();
    if rows.len() % 2 == 1 {
        rows.push(0);
    }
    let qs = q_upto(lambda.weight() as usize);
    let m = rows.len();
    let mut mat = vec![vec![PPoly::zero(); m]; m];
    for i in 0..m {
        for j in (i + 1)..m {
            mat[i][j] = q_two_row(rows[i], rows[j], &qs);
        }
    }
    let active: Vec<usize> = (0..m).collect();
    let q_lambda = pfaffian(&mat, &active);
    // P_λ = Q_λ / 2^{ℓ(λ)} with the true (unpadded) length.
    let half_pow = Rational::new(BigInt::one(), BigInt::one() << lambda.length());
    let result = q_lambda.scale(&half_pow);

    P_LAMBDA_CACHE
        .lock()
        .unwrap()
        .insert(lambda.clone(), result.clone());
    result
}

/// The principal specialization `P_λ(1^m)`.
pub fn principal_spec(lambda: &Partition, m: u32) -> Rational {
    p_lambda(lambda).eval_ones(m)
}

/// A linear combination `Σ b_λ P_λ` over distinct-part partitions.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PExpansion {
    terms: BTreeMap<Partition, Rational>,
}

impl PExpansion {
    pub fn new() -> Self {
        PExpansion::default()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        assert!(
            lambda.is_distinct(),
            "P-expansion keys need distinct parts: {lambda}"
        );
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
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

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Expands every `P_λ` into the power-sum basis: `Σ b_λ p_lambda(λ)`.
    pub fn to_gamma(&self) -> GammaPoly {
        let mut acc = PPoly::zero();
        for (l, c) in &self.terms {
            acc += &p_lambda(l).scale(c);
        }
        acc
    }

    pub fn latex(&self) -> String {
        latex_bracket_terms(self.terms.iter(), 'P')
    }
}

impl fmt::Display for PExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_bracket_terms(f, self.terms.iter(), 'P')
    }
}

impl fmt::Debug for PExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A linear combination `Σ a_λ V_λ` of the products `V_λ = P_{λ₁}P_{λ₂}⋯`.
///
/// Keys may be any partitions; expansions whose keys all have odd parts are
/// unique representations (the odd `P`s are algebraically independent),
/// others are not.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct VExpansion {
    terms: BTreeMap<Partition, Rational>,
}

impl VExpansion {
    pub fn new() -> Self {
        VExpansion::default()
    }

    /// The constant expansion `c·V_∅ = c`.
    pub fn constant(c: Rational) -> Self {
        let mut v = VExpansion::new();
        v.add_term(Partition::empty(), c);
        v
    }

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

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every key has odd parts only.
    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(Partition::is_odd)
    }

    /// The sum of all coefficients (the image under `P_k ↦ 1` for every k).
    pub fn coeff_sum(&self) -> Rational {
        self.terms.values().sum()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = VExpansion::new();
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c * r);
        }
        out
    }

    /// Expands into the power-sum basis; alias for [`v_to_gamma`].
    pub fn to_gamma(&self) -> GammaPoly {
        v_to_gamma(self)
    }

    /// Terms sorted for display: lexicographically *descending* on the
    /// multiplicity vector `(m₁, m₂, m₃, …)`, so the term with the most `P₁`
    /// factors comes first. This reproduces the published table layout
    /// (`924*P1^6 + 840*P3*P1^3 + 28*P5*P1 + 14*P3^2`), which differs from
    /// the canonical partition order used for the p- and P-basis listings.
    pub fn display_order(&self) -> Vec<(&Partition, &Rational)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|a, b| cmp_mult_desc(a.0, b.0));
        out
    }

    pub fn latex(&self) -> String {
        let mut out = String::new();
        for (i, (l, c)) in self.display_order().into_iter().enumerate() {
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
                out.push_str(&crate::powersum::latex_rational(&abs));
            }
            out.push_str(&v_term_latex(l));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Compares by multiplicity vectors `(m₁, m₂, …)`, larger vector first.
pub(crate) fn cmp_mult_desc(a: &Partition, b: &Partition) -> Ordering {
    let ma = a.multiplicities();
    let mb = b.multiplicities();
    let top = a
        .parts()
        .first()
        .copied()
        .unwrap_or(0)
        .max(b.parts().first().copied().unwrap_or(0));
    for v in 1..=top {
        let x = ma.get(&v).copied().unwrap_or(0);
        let y = mb.get(&v).copied().unwrap_or(0);
        match x.cmp(&y) {
            Ordering::Greater => return Ordering::Less,
            Ordering::Less => return Ordering::Greater,
            Ordering::Equal => {}
        }
    }
    Ordering::Equal
}

/// `V_λ` as a product string, highest part first: `P3*P1^3`.
fn v_term_text(l: &Partition) -> String {
    let parts = l.parts();
    let mut s = String::new();
    let mut i = 0;
    while i < parts.len() {
        let p = parts[i];
        let mut j = i;
        while j < parts.len() && parts[j] == p {
            j += 1;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(&format!("P{p}"));
        if j - i > 1 {
            s.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    s
}

/// LaTeX form of `V_λ`: `P_3P_1^3`, bracing multi-digit scripts.
fn v_term_latex(l: &Partition) -> String {
    let parts = l.parts();
    let mut s = String::new();
    let mut i = 0;
    while i < parts.len() {
        let p = parts[i];
        let mut j = i;
        while j < parts.len() && parts[j] == p {
            j += 1;
        }
        if p < 10 {
            s.push_str(&format!("P_{p}"));
        } else {
            s.push_str(&format!("P_{{{p}}}"));
        }
        let e = j - i;
        if e > 1 {
            if e < 10 {
                s.push_str(&format!("^{e}"));
            } else {
                s.push_str(&format!("^{{{e}}}"));
            }
        }
        i = j;
    }
    s
}

impl fmt::Display for VExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ordered = self.display_order();
        if ordered.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in ordered.into_iter().enumerate() {
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
                write!(f, "{abs}*{}", v_term_text(l))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for VExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl AddAssign<&VExpansion> for VExpansion {
    fn add_assign(&mut self, rhs: &VExpansion) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), c.clone());
        }
    }
}

impl Mul for &VExpansion {
    type Output = VExpansion;
    fn mul(self, rhs: &VExpansion) -> VExpansion {
        let mut out = VExpansion::new();
        for (l, a) in &self.terms {
            for (m, b) in &rhs.terms {
                out.add_term(l.concat(m), a * b);
            }
        }
        out
    }
}

/// Expands `Σ a_λ ∏ P_{λᵢ}` into the power-sum basis.
pub fn v_to_gamma(v: &VExpansion) -> GammaPoly {
    let mut acc = PPoly::zero();
    for (l, c) in v.terms() {
        let mut prod = PPoly::constant(c.clone());
        for (&value, &mult) in &l.multiplicities() {
            prod = &prod * &p_function(value).pow(mult);
        }
        acc += &prod;
    }
    acc
}

/// `P_{2n}` rewritten as a polynomial in odd-indexed `P`s:
/// `Σ (−1)^{(ℓ−2)/2} C_{(ℓ−2)/2} · multinomial(ℓ; m₁, m₃, …) · V_λ` over
/// odd-part partitions `λ ⊢ 2n` with `ℓ = ℓ(λ)` (always even here).
///
/// Small cases: `P₂ = P₁²`, `P₄ = 2P₃P₁ − P₁⁴`,
/// `P₆ = 2P₅P₁ + P₃² − 4P₃P₁³ + 2P₁⁶`.
pub fn even_p_elimination(n: u32) -> VExpansion {
    assert!(n >= 1);
    let mut out = VExpansion::new();
    for l in gen_partitions(2 * n, Flavor::Odd) {
        let ell = l.length() as u32;
        debug_assert_eq!(ell % 2, 0, "odd parts summing to an even weight");
        let k = (ell - 2) / 2;
        let mults: Vec<u32> = l.multiplicities().values().copied().collect();
        let mut c = Rational::from(catalan(k) * multinomial(ell, &mults));
        if k % 2 == 1 {
            c = -c;
        }
        out.add_term(l, c);
    }
    out
}

/// Rewrites an arbitrary V-expansion over odd-part keys only, replacing each
/// even factor `P_{2k}` via [`even_p_elimination`] and multiplying out.
pub fn reduce_to_odd(v: &VExpansion) -> VExpansion {
    let mut cache: BTreeMap<u32, VExpansion> = BTreeMap::new();
    let mut out = VExpansion::new();
    for (l, c) in v.terms() {
        let mut acc = VExpansion::constant(c.clone());
        for &part in l.parts() {
            if part % 2 == 1 {
                let mut single = VExpansion::new();
                single.add_term(Partition::single(part), Rational::one());
                acc = &acc * &single;
            } else {
                let expansion = cache
                    .entry(part / 2)
                    .or_insert_with(|| even_p_elimination(part / 2));
                acc = &acc * &*expansion;
            }
        }
        out += &acc;
    }
    debug_assert!(out.is_odd());
    out
}

/// The unique expansion of a homogeneous degree-`n` element of Γ in the
/// basis `{P_λ : λ ⊢ n, parts distinct}`, found by an exact linear solve
/// against the odd power-sum monomials.
pub fn p_basis_convert(f: &GammaPoly, n: u32) -> Result<PExpansion, PolyError> {
    if !f.is_homogeneous(n) {
        return Err(PolyError::NotHomogeneous(n));
    }
    assert!(
        f.is_gamma(),
        "the input must lie in the odd power-sum subring"
    );
    let rows = gen_partitions(n, Flavor::Odd);
    let cols = gen_partitions(n, Flavor::Distinct);
    let col_polys: Vec<PPoly> = cols.iter().map(p_lambda).collect();
    let a: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| col_polys.iter().map(|p| p.coeff(r)).collect())
        .collect();
    let b: Vec<Rational> = rows.iter().map(|r| f.coeff(r)).collect();
    let x = solve_exact(a, b).expect("{P_λ} is a basis of the degree-n component of Γ");
    let mut out = PExpansion::new();
    for (lambda, c) in cols.into_iter().zip(x) {
        out.add_term(lambda, c);
    }
    Ok(out)
}

/// Solves the square system `A·x = b` by Gaussian elimination over ℚ;
/// `None` when `A` is singular.
fn solve_exact(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].clone().recip();
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            let (top, bottom) = a.split_at_mut(col + 1);
            let pivot_row = &top[col];
            let row_r = &mut bottom[r - col - 1];
            for (dst, src) in row_r[col..].iter_mut().zip(&pivot_row[col..]) {
                let sub = src * &factor;
                *dst -= sub;
            }
            let sub = &b[col] * &factor;
            b[r] -= sub;
        }
    }
    let mut x = vec![Rational::zero(); n];
    for row in (0..n).rev() {
        let mut acc = b[row].clone();
        for c2 in (row + 1)..n {
            acc -= &a[row][c2] * &x[c2];
        }
        x[row] = acc / &a[row][row];
    }
    Some(x)
}
