//! The shifted parking-function symmetric function `shₙ` computed by several
//! independent routes, plus the scalar sequences (Schröder, Catalan, the
//! doubled falling products) tied to its coefficients.
//!
//! `pfₙ` is the Frobenius characteristic of the symmetric-group action on
//! parking functions; `shₙ` is its shiftification. Each `sh_*` function
//! derives `shₙ` from a different formula, and [`verify_routes`] reduces all
//! of them to the power-sum basis and insists they agree — that cross-check
//! is the core guarantee of the crate.

use crate::partitions::{binomial, factorial, gen_partitions, multinomial, Flavor};
use crate::powersum::{elem_sym, GammaPoly, PPoly};
use crate::schur::{
    p_basis_convert, principal_spec, q_series, q_series_neg, reduce_to_odd, v_to_gamma,
    PExpansion, VExpansion,
};
use crate::{frac, rat, GammaSeries, QSeries, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// The parking-function characteristic
/// `pfₙ = Σ_{λ⊢n} z_λ^{−1} (n+1)^{ℓ(λ)−1} p_λ`.
pub fn pf_powersum(n: u32) -> PPoly {
    assert!(n >= 1);
    let np1 = BigInt::from(n + 1);
    let mut out = PPoly::new();
    for l in gen_partitions(n, Flavor::Any) {
        let c = Rational::new(np1.pow(l.length() as u32 - 1), l.z());
        out.add_term(l, c);
    }
    out
}

/// `shₙ` by the power-sum formula
/// `Σ_{λ⊢n, parts odd} z_λ^{−1} 2^{ℓ(λ)} (n+1)^{ℓ(λ)−1} p_λ`.
pub fn sh_powersum(n: u32) -> GammaPoly {
    assert!(n >= 1);
    let np1 = BigInt::from(n + 1);
    let mut out = PPoly::new();
    for l in gen_partitions(n, Flavor::Odd) {
        let ell = l.length() as u32;
        let c = Rational::new((BigInt::one() << ell) * np1.pow(ell - 1), l.z());
        out.add_term(l, c);
    }
    out
}

/// `shₙ` by series-power extraction: `(1/(n+1)) [tⁿ] K(t)^{n+1}`.
pub fn sh_lagrange(n: u32) -> GammaPoly {
    assert!(n >= 1);
    let k = q_series(n as usize);
    k.pow(n + 1).coeff(n as usize).scale(&frac(1, (n + 1) as i64))
}

/// `shₙ` as the `t^{n+1}` coefficient of the compositional inverse of
/// `t·K(−t)`, extracted by the direct Lagrange formula.
pub fn sh_lagrange_inverse(n: u32) -> GammaPoly {
    assert!(n >= 1);
    let neg = q_series_neg(n as usize);
    let mut coeffs = vec![PPoly::zero()];
    coeffs.extend_from_slice(neg.coeffs());
    let f = GammaSeries::new(coeffs);
    f.lagrange_coeff(n as usize)
        .expect("t·K(−t) starts t + O(t²) and has order n+1")
}

/// `shₙ` over all partitions of `n`:
/// `Σ_{λ⊢n} 2^{ℓ} n(n−1)⋯(n−ℓ+2) / (m₁!m₂!⋯) · V_λ`
/// (the falling product has ℓ−1 factors; empty product 1 when ℓ = 1).
///
/// This expansion involves even-indexed `P`s and is not unique;
/// [`reduce_to_odd`] rewrites it over the odd basis.
pub fn sh_easy_v(n: u32) -> VExpansion {
    assert!(n >= 1);
    let mut out = VExpansion::new();
    for l in gen_partitions(n, Flavor::Any) {
        let ell = l.length() as u32;
        let mut num = BigInt::one() << ell;
        for j in 0..ell.saturating_sub(1) {
            num *= BigInt::from(n - j);
        }
        let mut den = BigInt::one();
        for &m in l.multiplicities().values() {
            den *= factorial(m);
        }
        out.add_term(l, Rational::new(num, den));
    }
    out
}

/// `shₙ` over odd-part partitions only:
/// `Σ (2^ℓ/ℓ!) · multinomial(ℓ; m₁, m₃, …) · (n+ℓ−1)(n+ℓ−3)⋯(n−ℓ+3) · V_λ`
/// (the product descends by 2 with ℓ−1 factors; empty product 1 when ℓ = 1).
pub fn sh_main_v(n: u32) -> VExpansion {
    assert!(n >= 1);
    let mut out = VExpansion::new();
    for l in gen_partitions(n, Flavor::Odd) {
        let ell = l.length() as u32;
        let mults: Vec<u32> = l.multiplicities().values().copied().collect();
        let mut num = (BigInt::one() << ell) * multinomial(ell, &mults);
        let mut factor = (n + ell - 1) as i64;
        for _ in 0..ell - 1 {
            num *= BigInt::from(factor);
            factor -= 2;
        }
        out.add_term(l, Rational::new(num, factorial(ell)));
    }
    out
}

/// `shₙ` in the `P_λ` basis by principal specialization:
/// `b_λ = 2^{ℓ(λ)} P_λ(1^{n+1}) / (n+1)` over distinct-part `λ ⊢ n`.
pub fn sh_p_expansion(n: u32) -> PExpansion {
    assert!(n >= 1);
    let np1 = rat((n + 1) as i64);
    let mut out = PExpansion::new();
    for l in gen_partitions(n, Flavor::Distinct) {
        let b = Rational::from(BigInt::one() << l.length()) * principal_spec(&l, n + 1) / &np1;
        out.add_term(l, b);
    }
    out
}

/// The large Schröder number `r_n`, read off the generating function
/// `(1 − t − √(1−6t+t²))/2 = Σ r_n t^{n+1}`.
pub fn schroeder(n: u32) -> BigInt {
    let order = n as usize + 1;
    let radicand = QSeries::from_fn(order, |k| match k {
        0 => rat(1),
        1 => rat(-6),
        2 => rat(1),
        _ => rat(0),
    });
    let root = radicand.sqrt().expect("constant term is one");
    let linear = QSeries::from_fn(order, |k| match k {
        0 => rat(1),
        1 => rat(-1),
        _ => rat(0),
    });
    let gf = (&linear - &root).scale_rat(&frac(1, 2));
    let c = gf.coeff(order);
    debug_assert!(c.is_integer());
    c.to_integer()
}

/// The Catalan number `C_k = C(2k, k)/(k+1)` by the closed formula.
pub fn catalan(k: u32) -> BigInt {
    binomial(2 * k, k) / BigInt::from(k + 1)
}

/// The doubled falling product `g_k(n) = 2^k (n+k−1)(n+k−3)⋯(n−k+3)`
/// (k−1 factors descending by 2; empty product 1 when k = 1). Defined for
/// every integer `n`; the product may be negative.
pub fn taylor_g(k: u32, n: i64) -> BigInt {
    assert!(k >= 1);
    let mut prod = BigInt::one() << k;
    let mut factor = n + k as i64 - 1;
    for _ in 0..k - 1 {
        prod *= BigInt::from(factor);
        factor -= 2;
    }
    prod
}

/// Checks that the expansion of `(2z+√(1+4z²))^{n+1}` has `z^k` coefficient
/// `(n+1)·g_k(n)/k!` for all `0 ≤ n ≤ max_n`, `1 ≤ k ≤ max_k`, by expanding
/// the power once per `n` and comparing against [`taylor_g`].
pub fn verify_lemma34(max_n: u32, max_k: u32) -> crate::verify::SuiteReport {
    let order = max_k as usize;
    let radicand = QSeries::from_fn(order, |k| match k {
        0 => rat(1),
        2 => rat(4),
        _ => rat(0),
    });
    let base = {
        let mut two_z = QSeries::zero(order);
        if order >= 1 {
            two_z = QSeries::from_fn(order, |k| if k == 1 { rat(2) } else { rat(0) });
        }
        &two_z + &radicand.sqrt().expect("constant term is one")
    };
    let mut checks = Vec::new();
    for n in 0..=max_n {
        let power = base.pow(n + 1);
        let mut first_bad = None;
        for k in 1..=max_k {
            let expected = rat((n + 1) as i64) * Rational::new(taylor_g(k, n as i64), factorial(k));
            let got = power.coeff(k as usize);
            if *got != expected {
                first_bad = Some(format!(
                    "k = {k}: coefficient {got} but doubled falling product predicts {expected}"
                ));
                break;
            }
        }
        checks.push(crate::verify::Check {
            name: format!(
                "binomial-power coefficients match doubled falling products, n = {n}, k ≤ {max_k}"
            ),
            passed: first_bad.is_none(),
            detail: first_bad.unwrap_or_else(|| "all coefficients equal".to_string()),
        });
    }
    crate::verify::SuiteReport {
        suite: "lemma34".to_string(),
        bound: max_n,
        checks,
    }
}

/// The series whose `t^{n+1}` coefficient is `pfₙ`: the compositional
/// inverse of `t·E(x,−t)`, where `E(t) = Σ elem_sym(n) tⁿ`.
///
/// (`t/H(x,t)` equals `t·E(x,−t)`; written via `E` so the inverse matches
/// the all-positive permutation-character normalization of `pf_powersum`.)
pub fn pf_series_by_inverse(order: usize) -> crate::GammaSeries {
    assert!(order >= 1);
    let f = GammaSeries::from_fn(order, |k| {
        if k == 0 {
            PPoly::zero()
        } else {
            let e = elem_sym(k as u32 - 1);
            if k % 2 == 0 {
                -e
            } else {
                e
            }
        }
    });
    f.comp_inverse().expect("t·E(−t) starts t + O(t²)")
}

/// The series whose `t^{n+1}` coefficient is `shₙ`: the compositional
/// inverse of `t·K(x,−t)`.
pub fn sh_series_by_inverse(order: usize) -> crate::GammaSeries {
    assert!(order >= 1);
    let neg = q_series_neg(order - 1);
    let mut coeffs = vec![PPoly::zero()];
    coeffs.extend_from_slice(neg.coeffs());
    GammaSeries::new(coeffs)
        .comp_inverse()
        .expect("t·K(−t) starts t + O(t²)")
}

/// Which formula produced each form in a [`ShResult`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub gamma: &'static str,
    pub v_odd: &'static str,
    pub v_any: &'static str,
    pub p_exp: &'static str,
}

/// The cross-validated bundle of expansions of `shₙ`.
#[derive(Clone, Debug)]
pub struct ShResult {
    pub n: u32,
    /// Power-sum (p-basis) form — the canonical comparison form.
    pub gamma: GammaPoly,
    /// Odd-part `V_λ` form (unique representation).
    pub v_odd: VExpansion,
    /// All-partitions `V_λ` form (non-unique representation).
    pub v_any: VExpansion,
    /// `P_λ` basis form.
    pub p_exp: PExpansion,
    pub provenance: Provenance,
}

/// Two routes to `shₙ` produced different power-sum forms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "routes to sh_{n} disagree: {left_route} produced {left_form}, while {right_route} produced {right_form}"
)]
pub struct RouteMismatch {
    pub n: u32,
    pub left_route: String,
    pub left_form: String,
    pub right_route: String,
    pub right_form: String,
}

const ROUTE_POWERSUM: &str = "power-sum formula over odd partitions";
const ROUTE_SHIFTIFY: &str = "shiftified parking-function characteristic";
const ROUTE_POWER_EXTRACT: &str = "series-power coefficient extraction";
const ROUTE_INVERSE_COEFF: &str = "compositional-inverse coefficient";
const ROUTE_EASY_V: &str = "all-partitions product formula, reduced to odd parts";
const ROUTE_MAIN_V: &str = "odd falling-product formula";
const ROUTE_P_EXPANSION: &str = "principal-specialization P-basis expansion";

/// Computes `shₙ` by every implemented route, reduces each to the power-sum
/// basis, and returns the bundle; any two disagreeing forms abort with a
/// [`RouteMismatch`] naming both.
pub fn verify_routes(n: u32) -> Result<ShResult, RouteMismatch> {
    assert!(n >= 1);
    let base = sh_powersum(n);
    let mismatch = |route: &str, form: &PPoly| RouteMismatch {
        n,
        left_route: ROUTE_POWERSUM.to_string(),
        left_form: base.to_string(),
        right_route: route.to_string(),
        right_form: form.to_string(),
    };

    let shifted = pf_powersum(n).shiftify();
    if shifted != base {
        return Err(mismatch(ROUTE_SHIFTIFY, &shifted));
    }

    let powered = sh_lagrange(n);
    if powered != base {
        return Err(mismatch(ROUTE_POWER_EXTRACT, &powered));
    }

    let inverted = sh_lagrange_inverse(n);
    if inverted != base {
        return Err(mismatch(ROUTE_INVERSE_COEFF, &inverted));
    }

    let v_any = sh_easy_v(n);
    let easy_odd = reduce_to_odd(&v_any);
    let easy_gamma = v_to_gamma(&easy_odd);
    if easy_gamma != base {
        return Err(mismatch(ROUTE_EASY_V, &easy_gamma));
    }

    let v_odd = sh_main_v(n);
    let main_gamma = v_to_gamma(&v_odd);
    if main_gamma != base {
        return Err(mismatch(ROUTE_MAIN_V, &main_gamma));
    }
    // The odd Ps are algebraically independent, so beyond the p-basis values
    // agreeing, the two odd V-expansions must agree coefficient by
    // coefficient.
    if easy_odd != v_odd {
        return Err(RouteMismatch {
            n,
            left_route: ROUTE_MAIN_V.to_string(),
            left_form: v_odd.to_string(),
            right_route: ROUTE_EASY_V.to_string(),
            right_form: easy_odd.to_string(),
        });
    }

    let p_exp = sh_p_expansion(n);
    let p_gamma = p_exp.to_gamma();
    if p_gamma != base {
        return Err(mismatch(ROUTE_P_EXPANSION, &p_gamma));
    }

    Ok(ShResult {
        n,
        gamma: base,
        v_odd,
        v_any,
        p_exp,
        provenance: Provenance {
            gamma: ROUTE_POWERSUM,
            v_odd: ROUTE_MAIN_V,
            v_any: "all-partitions product formula",
            p_exp: ROUTE_P_EXPANSION,
        },
    })
}

/// Convenience accessor used by the command-line front end: the p-basis
/// conversion oracle `p_basis_convert(sh_powersum(n), n)`.
pub fn sh_p_expansion_by_solve(n: u32) -> PExpansion {
    p_basis_convert(&sh_powersum(n), n).expect("sh_powersum is homogeneous of degree n")
}
