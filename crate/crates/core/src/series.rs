//! Truncated formal power series in one variable over an exact coefficient
//! ring.
//!
//! The ring is abstracted by [`Coeff`]: a commutative ℚ-algebra exposing only
//! zero, one, ring arithmetic, a unit test, and exact division by a rational
//! scalar. The two instances used in this crate are [`Rational`] itself and
//! [`PPoly`]; the aliases `QSeries` and `GammaSeries` live at the crate root.
//!
//! Every series carries its truncation order `N` explicitly (coefficients
//! `c₀…c_N` are stored, degree `N+1` and beyond is unknown). Binary operations
//! truncate to the smaller operand order rather than fabricating precision.

use crate::powersum::PPoly;
use crate::Rational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// An exact commutative ℚ-algebra usable as a series coefficient ring.
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    /// The multiplicative inverse, when this element is a unit of the ring.
    fn invert(&self) -> Option<Self>;
    /// Exact multiplication by a rational scalar.
    fn mul_rat(&self, r: &Rational) -> Self;
    /// Exact division by a nonzero rational scalar.
    fn div_rat(&self, r: &Rational) -> Self;
    /// The image of a rational scalar under the structure map ℚ → ring.
    fn from_rat(r: &Rational) -> Self;
}

impl Coeff for Rational {
    fn invert(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn mul_rat(&self, r: &Rational) -> Self {
        self * r
    }
    fn div_rat(&self, r: &Rational) -> Self {
        self / r
    }
    fn from_rat(r: &Rational) -> Self {
        r.clone()
    }
}

impl Coeff for PPoly {
    /// Only the nonzero constants are units of a polynomial ring.
    fn invert(&self) -> Option<Self> {
        let c = self.coeff(&crate::partitions::Partition::empty());
        if c.is_zero() || self.num_terms() != 1 {
            None
        } else {
            Some(PPoly::constant(c.recip()))
        }
    }
    fn mul_rat(&self, r: &Rational) -> Self {
        self.scale(r)
    }
    fn div_rat(&self, r: &Rational) -> Self {
        self.scale(&r.recip())
    }
    fn from_rat(r: &Rational) -> Self {
        PPoly::constant(r.clone())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("constant term is not a unit of the coefficient ring")]
    NonUnitConstantTerm,
    #[error("constant term must be one")]
    ConstantTermNotOne,
    #[error("constant term must be zero")]
    ConstantTermNotZero,
    #[error("linear coefficient must be one")]
    LinearCoeffNotOne,
    #[error("series truncated at order {order}, but the operation needs order {needed}")]
    InsufficientOrder { order: usize, needed: usize },
}

/// A power series truncated at degree `order()`, inclusive.
#[derive(Clone, PartialEq, Eq)]
pub struct Series<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Series<C> {
    /// Wraps explicit coefficients `c₀…c_N`; the list must be nonempty.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least c₀");
        Series { coeffs }
    }

    /// Builds `c₀…c_N` by evaluating `f` at each index.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> C) -> Self {
        Series {
            coeffs: (0..=order).map(&mut f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Series::from_fn(order, |_| C::zero())
    }

    pub fn one(order: usize) -> Self {
        Series::from_fn(order, |k| if k == 0 { C::one() } else { C::zero() })
    }

    /// The series `t`; needs `order ≥ 1`.
    pub fn identity(order: usize) -> Self {
        assert!(order >= 1);
        Series::from_fn(order, |k| if k == 1 { C::one() } else { C::zero() })
    }

    /// The constant `c` at the given order.
    pub fn constant(c: C, order: usize) -> Self {
        Series::from_fn(order, |k| if k == 0 { c.clone() } else { C::zero() })
    }

    /// The truncation order `N` (the last stored degree).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The coefficient of `t^k`; `k` must not exceed the truncation order.
    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Drops coefficients beyond `order` (never extends — unknown
    /// coefficients are not fabricated).
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Multiplies every coefficient by a rational scalar.
    pub fn scale_rat(&self, r: &Rational) -> Self {
        Series::from_fn(self.order(), |k| self.coeffs[k].mul_rat(r))
    }

    /// `self^e` by binary exponentiation at this series' order.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = Series::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The multiplicative inverse `1/self`; requires a unit constant term.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let b0 = self.coeffs[0]
            .invert()
            .ok_or(SeriesError::NonUnitConstantTerm)?;
        let n = self.order();
        let mut b: Vec<C> = Vec::with_capacity(n + 1);
        b.push(b0.clone());
        for m in 1..=n {
            let mut acc = C::zero();
            for i in 1..=m {
                acc = acc + self.coeffs[i].clone() * b[m - i].clone();
            }
            b.push(-(b0.clone() * acc));
        }
        Ok(Series { coeffs: b })
    }

    /// The square root with constant term one; requires `c₀ = 1`.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let n = self.order();
        let two = crate::rat(2);
        let mut b: Vec<C> = Vec::with_capacity(n + 1);
        b.push(C::one());
        for m in 1..=n {
            // From b² = a: a_m = 2 b_m b_0 + Σ_{i=1}^{m−1} b_i b_{m−i}.
            let mut acc = self.coeffs[m].clone();
            for i in 1..m {
                acc = acc - b[i].clone() * b[m - i].clone();
            }
            b.push(acc.div_rat(&two));
        }
        Ok(Series { coeffs: b })
    }

    /// The exponential; requires `c₀ = 0`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermNotZero);
        }
        let n = self.order();
        let mut e: Vec<C> = Vec::with_capacity(n + 1);
        e.push(C::one());
        for m in 1..=n {
            // From E' = a'E: m·e_m = Σ_{k=1}^{m} k·a_k·e_{m−k}.
            let mut acc = C::zero();
            for k in 1..=m {
                let ka = self.coeffs[k].mul_rat(&crate::rat(k as i64));
                acc = acc + ka * e[m - k].clone();
            }
            e.push(acc.div_rat(&crate::rat(m as i64)));
        }
        Ok(Series { coeffs: e })
    }

    /// The composition `self ∘ g`; requires `g` to have zero constant term.
    /// The result is truncated to the smaller of the two orders.
    pub fn compose(&self, g: &Series<C>) -> Result<Self, SeriesError> {
        if !g.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermNotZero);
        }
        let order = self.order().min(g.order());
        let g = g.truncated(order);
        // Horner: (((a_N·g + a_{N−1})·g + …)·g + a_0). Terms a_k g^k with
        // k > order vanish modulo t^{order+1} because g has no constant term.
        let mut acc = Series::constant(self.coeffs[self.order()].clone(), order);
        for k in (0..self.order()).rev() {
            acc = &acc * &g;
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[k].clone();
        }
        Ok(acc)
    }

    /// Splits off one factor of `t`: the series `self/t`, losing one order.
    /// Private helper for the compositional-inverse routines; the caller has
    /// already checked `c₀ = 0` and order ≥ 1.
    fn shifted_down(&self) -> Self {
        Series {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    fn check_comp_invertible(&self) -> Result<(), SeriesError> {
        if self.order() < 1 {
            return Err(SeriesError::InsufficientOrder {
                order: self.order(),
                needed: 1,
            });
        }
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermNotZero);
        }
        if !self.coeffs[1].is_one() {
            return Err(SeriesError::LinearCoeffNotOne);
        }
        Ok(())
    }

    /// The compositional inverse: the unique `G` with `self(G(t)) = t`, for a
    /// series `t + c₂t² + …`. Coefficient `m` of `G` is extracted as
    /// `(1/m)·[t^{m−1}](t/self)^m`, accumulating the powers of `t/self`
    /// incrementally.
    pub fn comp_inverse(&self) -> Result<Self, SeriesError> {
        self.check_comp_invertible()?;
        let n = self.order();
        let v = self.shifted_down().reciprocal()?; // t/self, order n−1
        let mut g: Vec<C> = Vec::with_capacity(n + 1);
        g.push(C::zero());
        let mut power = v.clone(); // v^m at step m
        for m in 1..=n {
            g.push(power.coeff(m - 1).div_rat(&crate::rat(m as i64)));
            if m < n {
                power = &power * &v;
            }
        }
        Ok(Series { coeffs: g })
    }

    /// The single coefficient `[t^{n+1}]` of the compositional inverse,
    /// computed directly as `(1/(n+1))·[tⁿ](t/self)^{n+1}` without building
    /// the whole inverse. Needs the input truncated at order ≥ n+1, since the
    /// answer genuinely involves the input coefficient of `t^{n+1}`.
    pub fn lagrange_coeff(&self, n: usize) -> Result<C, SeriesError> {
        self.check_comp_invertible()?;
        if self.order() < n + 1 {
            return Err(SeriesError::InsufficientOrder {
                order: self.order(),
                needed: n + 1,
            });
        }
        let v = self.shifted_down().truncated(n).reciprocal()?;
        let c = v.pow(n as u32 + 1).coeff(n).clone();
        Ok(c.div_rat(&crate::rat(n as i64 + 1)))
    }
}

impl<C: Coeff> Add for &Series<C> {
    type Output = Series<C>;
    fn add(self, rhs: &Series<C>) -> Series<C> {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |k| self.coeffs[k].clone() + rhs.coeffs[k].clone())
    }
}

impl<C: Coeff> Sub for &Series<C> {
    type Output = Series<C>;
    fn sub(self, rhs: &Series<C>) -> Series<C> {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |k| self.coeffs[k].clone() - rhs.coeffs[k].clone())
    }
}

impl<C: Coeff> Neg for &Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        Series::from_fn(self.order(), |k| -self.coeffs[k].clone())
    }
}

impl<C: Coeff> Mul for &Series<C> {
    type Output = Series<C>;
    fn mul(self, rhs: &Series<C>) -> Series<C> {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![C::zero(); order + 1];
        for i in 0..=order.min(self.order()) {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i).min(rhs.order()) {
                let prod = self.coeffs[i].clone() * rhs.coeffs[j].clone();
                coeffs[i + j] = std::mem::replace(&mut coeffs[i + j], C::zero()) + prod;
            }
        }
        Series { coeffs }
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

impl<C: Coeff> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Series")
            .field("order", &self.order())
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{frac, rat, QSeries};

    fn qs(vals: &[(i64, i64)]) -> QSeries {
        Series::new(vals.iter().map(|&(n, d)| frac(n, d)).collect())
    }

    fn ints(vals: &[i64]) -> QSeries {
        Series::new(vals.iter().map(|&n| rat(n)).collect())
    }

    #[test]
    fn mul_and_pow() {
        let one_plus_t = ints(&[1, 1, 0, 0, 0, 0]);
        let p5 = one_plus_t.pow(5);
        assert_eq!(p5, ints(&[1, 5, 10, 10, 5, 1]));
        assert_eq!(one_plus_t.pow(0), Series::one(5));

        // Mixed orders truncate to the smaller one.
        let a = ints(&[1, 2, 3]);
        let b = ints(&[1, 1, 1, 1, 1, 1]);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!(&a * &b, ints(&[1, 3, 6]));
        assert_eq!((&a + &b).order(), 2);
    }

    #[test]
    fn reciprocal_geometric() {
        let f = ints(&[1, 1, 0, 0, 0, 0, 0]);
        assert_eq!(f.reciprocal().unwrap(), ints(&[1, -1, 1, -1, 1, -1, 1]));
        let g = ints(&[0, 1]);
        assert_eq!(g.reciprocal(), Err(SeriesError::NonUnitConstantTerm));
        // A scaled constant term is fine over ℚ.
        let h = qs(&[(2, 1), (1, 1)]);
        let r = h.reciprocal().unwrap();
        assert_eq!(&h * &r, Series::one(1));
    }

    #[test]
    fn sqrt_of_one_plus_four_t_squared() {
        let s = ints(&[1, 0, 4, 0, 0, 0, 0]);
        let root = s.sqrt().unwrap();
        assert_eq!(root, ints(&[1, 0, 2, 0, -2, 0, 4]));
        assert_eq!(&root * &root, s);
        assert_eq!(
            ints(&[2, 1]).sqrt(),
            Err(SeriesError::ConstantTermNotOne)
        );
    }

    #[test]
    fn exp_matches_exponential_coefficients() {
        let f = ints(&[0, 2, 0, 0]);
        assert_eq!(
            f.exp().unwrap(),
            qs(&[(1, 1), (2, 1), (2, 1), (4, 3)])
        );
        assert_eq!(ints(&[1, 1]).exp(), Err(SeriesError::ConstantTermNotZero));
        // exp(a+b) = exp(a)·exp(b).
        let a = qs(&[(0, 1), (1, 2), (0, 1), (5, 1), (0, 1), (1, 7)]);
        let b = qs(&[(0, 1), (-2, 3), (1, 1), (0, 1), (3, 4), (1, 1)]);
        assert_eq!(
            (&a + &b).exp().unwrap(),
            &a.exp().unwrap() * &b.exp().unwrap()
        );
    }

    #[test]
    fn compose_basics() {
        // 1 + u − u² at u = t² — plain monomial substitution.
        let f = ints(&[1, 1, -1, 0, 0]);
        let g = ints(&[0, 0, 1, 0, 0]);
        assert_eq!(f.compose(&g).unwrap(), ints(&[1, 0, 1, 0, -1]));
        assert_eq!(
            f.compose(&ints(&[1, 1])),
            Err(SeriesError::ConstantTermNotZero)
        );
    }

    #[test]
    fn compose_catalan_branch() {
        // (−1+√(1+4u))/2 at u = t² gives the alternating Catalan series
        // t² − t⁴ + 2t⁶ − 5t⁸.
        let root = ints(&[1, 4, 0, 0, 0, 0, 0, 0, 0]).sqrt().unwrap();
        let f = (&root - &Series::one(8)).scale_rat(&frac(1, 2));
        let u_sq = Series::from_fn(8, |k| if k == 2 { rat(1) } else { rat(0) });
        assert_eq!(
            f.compose(&u_sq).unwrap(),
            ints(&[0, 0, 1, 0, -1, 0, 2, 0, -5])
        );
    }

    #[test]
    fn comp_inverse_moebius_pair() {
        // t/(1+t) and t/(1−t) are mutually inverse.
        let f = ints(&[0, 1, -1, 1, -1, 1, -1, 1]);
        let g = f.comp_inverse().unwrap();
        assert_eq!(g, ints(&[0, 1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(f.compose(&g).unwrap(), Series::identity(7));
    }

    #[test]
    fn comp_inverse_catalan() {
        // The inverse of t − t² generates the Catalan numbers.
        let mut f = Series::zero(7);
        f.coeffs[1] = rat(1);
        f.coeffs[2] = rat(-1);
        let g = f.comp_inverse().unwrap();
        assert_eq!(g, ints(&[0, 1, 1, 2, 5, 14, 42, 132]));
        assert_eq!(f.compose(&g).unwrap(), Series::identity(7));
        assert_eq!(g.compose(&f).unwrap(), Series::identity(7));
    }

    #[test]
    fn comp_inverse_rejects_bad_input() {
        assert_eq!(
            ints(&[1, 1]).comp_inverse(),
            Err(SeriesError::ConstantTermNotZero)
        );
        assert_eq!(
            ints(&[0, 2, 1]).comp_inverse(),
            Err(SeriesError::LinearCoeffNotOne)
        );
        assert_eq!(
            ints(&[5]).comp_inverse(),
            Err(SeriesError::InsufficientOrder {
                order: 0,
                needed: 1
            })
        );
    }

    #[test]
    fn lagrange_coeff_matches_comp_inverse() {
        // f = t(1−t)/(1+t) = t − 2t² + 2t³ − 2t⁴ + … ; its inverse counts
        // Schröder paths: t + 2t² + 6t³ + 22t⁴ + 90t⁵.
        let f = ints(&[0, 1, -2, 2, -2, 2, -2, 2, -2]);
        let g = f.comp_inverse().unwrap();
        assert_eq!(
            g.coeffs()[1..6],
            [rat(1), rat(2), rat(6), rat(22), rat(90)]
        );
        for n in 0..=7 {
            assert_eq!(&f.lagrange_coeff(n).unwrap(), g.coeff(n + 1), "n = {n}");
        }
        assert_eq!(f.lagrange_coeff(3).unwrap(), rat(22));
        assert_eq!(
            f.truncated(3).lagrange_coeff(3),
            Err(SeriesError::InsufficientOrder {
                order: 3,
                needed: 4
            })
        );
    }

    #[test]
    fn truncation_and_accessors() {
        let f = ints(&[3, 1, 4, 1, 5]);
        assert_eq!(f.order(), 4);
        assert_eq!(f.truncated(2), ints(&[3, 1, 4]));
        assert_eq!(*f.coeff(4), rat(5));
        assert!(Series::<Rational>::zero(3).is_zero());
        assert!(!f.is_zero());
    }

    #[test]
    fn display_is_readable() {
        let f = ints(&[1, 0, -2]);
        assert_eq!(f.to_string(), "(1) + (-2)*t^2 + O(t^3)");
        assert_eq!(QSeries::zero(2).to_string(), "0 + O(t^3)");
    }
}
