//! Named verification suites: each one grinds through a family of exact
//! identities relating different parts of the crate and reports every check
//! individually, so a single command can re-certify the whole construction.

use crate::partitions::{gen_partitions, Flavor, Partition};
use crate::powersum::PPoly;
use crate::schur::{
    even_p_elimination, p_basis_convert, p_function, p_lambda, principal_spec, q_series,
    q_series_neg, v_to_gamma,
};
use crate::shifted::{
    catalan, pf_powersum, pf_series_by_inverse, schroeder, sh_main_v, sh_p_expansion, sh_powersum,
    sh_series_by_inverse, verify_lemma34, verify_routes,
};
use crate::{frac, rat, GammaSeries, QSeries, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// One verified identity instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The outcome of one suite run.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    /// The suite token, as accepted on the command line.
    pub suite: String,
    /// The bound the suite actually ran up to.
    pub bound: u32,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// The individually runnable suites. `all` is handled by [`run_all`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Every route to `shₙ` agrees in the power-sum basis.
    Routes,
    /// Dimensions `2ⁿ(n+1)^{n−1}` and `(n+1)^{n−1}`.
    Dim,
    /// Five expressions for the large Schröder numbers coincide.
    Schroeder,
    /// Series identities over the odd subalgebra: `K(t)K(−t) = 1` and the
    /// square root expressing even-indexed `P`s through odd-indexed ones.
    Lemma31,
    /// Even-index elimination: the alternating Catalan combination of odd
    /// products rebuilds `P_{2n}`; plus the Catalan closed form itself.
    Catalan,
    /// Coefficients of `(2z+√(1+4z²))^{n+1}` match the doubled falling
    /// products.
    Lemma34,
    /// The specialization-based P-expansion equals direct basis conversion.
    PExp,
    /// Cauchy-type specializations tie `P_λ` to powers of the kernel series.
    Cauchy,
    /// Block census statistics for colored parking functions.
    Nspf,
    /// Brute-force fixed-point counts match `(n+1)^{ℓ−1}`.
    Fixpoints,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Routes,
        Suite::Dim,
        Suite::Schroeder,
        Suite::Lemma31,
        Suite::Catalan,
        Suite::Lemma34,
        Suite::PExp,
        Suite::Cauchy,
        Suite::Nspf,
        Suite::Fixpoints,
    ];

    /// Command-line token.
    pub fn token(self) -> &'static str {
        match self {
            Suite::Routes => "routes",
            Suite::Dim => "dim",
            Suite::Schroeder => "schroeder",
            Suite::Lemma31 => "lemma31",
            Suite::Catalan => "catalan",
            Suite::Lemma34 => "lemma34",
            Suite::PExp => "pexp",
            Suite::Cauchy => "cauchy",
            Suite::Nspf => "nspf",
            Suite::Fixpoints => "fixpoints",
        }
    }

    pub fn parse(token: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.token() == token)
    }

    /// Documented bound: the largest argument the suite accepts without an
    /// explicit override. For most suites this is the top `n`; for
    /// `lemma31` it is the truncation order.
    pub fn default_bound(self) -> u32 {
        match self {
            Suite::Routes => 10,
            Suite::Dim => 10,
            Suite::Schroeder => 8,
            Suite::Lemma31 => 24,
            Suite::Catalan => 6,
            Suite::Lemma34 => 10,
            Suite::PExp => 8,
            Suite::Cauchy => 6,
            Suite::Nspf => 7,
            Suite::Fixpoints => 7,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Routes => "independent routes to sh_n agree in the power-sum basis",
            Suite::Dim => "representation dimensions match the closed counting formulas",
            Suite::Schroeder => "five expressions for the large Schröder numbers coincide",
            Suite::Lemma31 => "kernel-series identities over the odd subalgebra",
            Suite::Catalan => "Catalan-weighted elimination of even-indexed P functions",
            Suite::Lemma34 => "binomial-power coefficients equal doubled falling products",
            Suite::PExp => "specialization P-expansion equals direct basis conversion",
            Suite::Cauchy => "Cauchy-type specializations tie P_λ to kernel powers",
            Suite::Nspf => "colored parking-function census matches the block formulas",
            Suite::Fixpoints => "brute-force fixed-point counts match (n+1)^(ℓ-1)",
        }
    }
}

/// Runs one suite up to `max_n` (interpreted per suite; see
/// [`Suite::default_bound`]). The library itself accepts any bound — the
/// command-line layer enforces the documented limits.
pub fn run_suite(suite: Suite, max_n: u32) -> SuiteReport {
    let checks = match suite {
        Suite::Routes => suite_routes(max_n),
        Suite::Dim => suite_dim(max_n),
        Suite::Schroeder => suite_schroeder(max_n),
        Suite::Lemma31 => suite_lemma31(max_n),
        Suite::Catalan => suite_catalan(max_n),
        Suite::Lemma34 => return verify_lemma34(max_n, 10),
        Suite::PExp => suite_pexp(max_n),
        Suite::Cauchy => suite_cauchy(max_n),
        Suite::Nspf => suite_nspf(max_n),
        Suite::Fixpoints => suite_fixpoints(max_n),
    };
    SuiteReport {
        suite: suite.token().to_string(),
        bound: max_n,
        checks,
    }
}

/// Runs every suite at `min(max_n, its documented bound)` (or the documented
/// bound when `max_n` is `None`).
pub fn run_all(max_n: Option<u32>) -> Vec<SuiteReport> {
    Suite::ALL
        .iter()
        .map(|&s| {
            let bound = match max_n {
                Some(m) => m.min(s.default_bound()),
                None => s.default_bound(),
            };
            run_suite(s, bound)
        })
        .collect()
}

fn check(name: String, passed: bool, detail: String) -> Check {
    Check {
        name,
        passed,
        detail,
    }
}

fn suite_routes(bound: u32) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=bound {
        match verify_routes(n) {
            Ok(r) => checks.push(check(
                format!("all routes to sh_{n} agree"),
                true,
                format!(
                    "{} power-sum terms, {} odd product terms",
                    r.gamma.num_terms(),
                    r.v_odd.num_terms()
                ),
            )),
            Err(e) => checks.push(check(
                format!("all routes to sh_{n} agree"),
                false,
                e.to_string(),
            )),
        }
    }

    let order = bound.min(8) as usize + 1;
    let sh_series = sh_series_by_inverse(order);
    let pf_series = pf_series_by_inverse(order);
    let mut failure = None;
    if !sh_series.coeff(0).is_zero() || !sh_series.coeff(1).is_one() {
        failure = Some("inverse series does not start at t".to_string());
    }
    for n in 1..order as u32 {
        if failure.is_some() {
            break;
        }
        if *sh_series.coeff(n as usize + 1) != sh_powersum(n) {
            failure = Some(format!("shifted series coefficient of t^{} differs", n + 1));
        } else if *pf_series.coeff(n as usize + 1) != pf_powersum(n) {
            failure = Some(format!("plain series coefficient of t^{} differs", n + 1));
        }
    }
    checks.push(check(
        format!(
            "compositional-inverse series reproduce the coefficient formulas to order {order}"
        ),
        failure.is_none(),
        failure.unwrap_or_else(|| "both inverse series match".to_string()),
    ));
    checks
}

fn suite_dim(bound: u32) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=bound {
        let dim = sh_powersum(n).dimension(n).expect("homogeneous of degree n");
        let expected = Rational::from((BigInt::one() << n) * BigInt::from(n + 1).pow(n - 1));
        checks.push(check(
            format!("dim sh_{n} = 2^{n}·{}^{}", n + 1, n - 1),
            dim == expected,
            format!("computed {dim}, expected {expected}"),
        ));
    }
    for n in 1..=bound.min(8) {
        let dim = pf_powersum(n).dimension(n).expect("homogeneous of degree n");
        let expected = Rational::from(BigInt::from(n + 1).pow(n - 1));
        checks.push(check(
            format!("dim pf_{n} = {}^{}", n + 1, n - 1),
            dim == expected,
            format!("computed {dim}, expected {expected}"),
        ));
    }
    checks
}

fn suite_schroeder(bound: u32) -> Vec<Check> {
    let mut checks = Vec::new();
    // Compositional inverse of t(1−t)/(1+t), computed once.
    let order = bound as usize + 1;
    let numerator = QSeries::from_fn(order, |k| match k {
        1 => rat(1),
        2 => rat(-1),
        _ => rat(0),
    });
    let denom = QSeries::from_fn(order, |k| match k {
        0 => rat(1),
        1 => rat(1),
        _ => rat(0),
    });
    let f = &numerator * &denom.reciprocal().expect("unit constant term");
    let inverse = f.comp_inverse().expect("starts t + O(t²)");

    for n in 1..=bound {
        let from_table = sh_main_v(n).coeff_sum();
        let from_p_basis = sh_p_expansion(n).coeff(&Partition::single(n));
        let from_spec =
            frac(2, (n + 1) as i64) * principal_spec(&Partition::single(n), n + 1);
        let from_inverse = inverse.coeff(n as usize + 1).clone();
        let from_closed_form = Rational::from(schroeder(n));
        let all_equal = from_table == from_p_basis
            && from_table == from_spec
            && from_table == from_inverse
            && from_table == from_closed_form;
        checks.push(check(
            format!("five expressions for the Schröder number r_{n} coincide"),
            all_equal,
            format!(
                "coefficient sum {from_table}, top P-coefficient {from_p_basis}, \
                 specialization {from_spec}, inverse-series {from_inverse}, \
                 closed form {from_closed_form}"
            ),
        ));
    }
    checks
}

fn suite_lemma31(order_bound: u32) -> Vec<Check> {
    let order = order_bound as usize;
    let mut checks = Vec::new();

    let k = q_series(order);
    let k_neg = q_series_neg(order);
    let product = &k * &k_neg;
    checks.push(check(
        format!("K(t)·K(−t) = 1 to order {order}"),
        product == GammaSeries::one(order),
        "both kernel orientations multiply to one".to_string(),
    ));

    let a = GammaSeries::from_fn(order, |i| {
        if i % 2 == 1 {
            p_function(i as u32)
        } else {
            PPoly::zero()
        }
    });
    let b = GammaSeries::from_fn(order, |i| {
        if i >= 2 && i % 2 == 0 {
            p_function(i as u32)
        } else {
            PPoly::zero()
        }
    });
    let radicand = &GammaSeries::one(order) + &(&a * &a).scale_rat(&rat(4));
    let root = radicand.sqrt().expect("constant term is one");
    let rhs = &GammaSeries::one(order) + &b.scale_rat(&rat(2));
    checks.push(check(
        format!("√(1+4A²) = 1+2B for the odd/even P series split, order {order}"),
        root == rhs,
        "even-indexed P functions satisfy B+B² = A²".to_string(),
    ));
    checks
}

fn suite_catalan(bound: u32) -> Vec<Check> {
    let mut checks = Vec::new();

    let order = 2 * bound as usize + 1;
    let radicand = QSeries::from_fn(order, |k| match k {
        0 => rat(1),
        1 => rat(-4),
        _ => rat(0),
    });
    let gf = (&QSeries::one(order) - &radicand.sqrt().expect("constant term is one"))
        .scale_rat(&frac(1, 2));
    let mut gf_ok = true;
    let mut gf_detail = String::new();
    for kk in 0..2 * bound {
        if *gf.coeff(kk as usize + 1) != Rational::from(catalan(kk)) {
            gf_ok = false;
            gf_detail = format!("C_{kk} differs from the generating-function coefficient");
            break;
        }
    }
    checks.push(check(
        format!("Catalan closed form matches its generating function, k < {}", 2 * bound),
        gf_ok,
        if gf_ok {
            "all coefficients equal".to_string()
        } else {
            gf_detail
        },
    ));

    for n in 1..=bound {
        let rebuilt = v_to_gamma(&even_p_elimination(n));
        let direct = p_function(2 * n);
        checks.push(check(
            format!("odd-product elimination rebuilds P_{}", 2 * n),
            rebuilt == direct,
            format!(
                "{} odd shapes combine into the even P function",
                even_p_elimination(n).num_terms()
            ),
        ));
    }
    checks
}

fn suite_pexp(bound: u32) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=bound {
        let by_spec = sh_p_expansion(n);
        let by_solve = p_basis_convert(&sh_powersum(n), n).expect("homogeneous of degree n");
        checks.push(check(
            format!("both P-basis expansions of sh_{n} agree"),
            by_spec == by_solve,
            format!("{} basis terms", by_spec.num_terms()),
        ));
    }
    checks
}

fn suite_cauchy(bound: u32) -> Vec<Check> {
    let mut checks = Vec::new();
    for d in 1..=bound {
        let k = q_series(d as usize);
        let mut ok = true;
        let mut detail = String::new();
        for m in 0..=bound {
            let mut lhs = PPoly::zero();
            for l in gen_partitions(d, Flavor::Distinct) {
                let factor =
                    Rational::from(BigInt::one() << l.length()) * principal_spec(&l, m);
                lhs += &p_lambda(&l).scale(&factor);
            }
            if lhs != *k.pow(m).coeff(d as usize) {
                ok = false;
                detail = format!("specialized sum differs from the kernel power at m = {m}");
                break;
            }
        }
        checks.push(check(
            format!("Σ 2^ℓ P_λ(1^m) P_λ = [t^{d}] K(t)^m for m ≤ {bound}"),
            ok,
            if ok {
                "all specializations equal".to_string()
            } else {
                detail
            },
        ));
    }

    // Fully specialized version: both sides are plain rationals.
    let one_plus_t = QSeries::from_fn(bound as usize, |k| match k {
        0 => rat(1),
        1 => rat(1),
        _ => rat(0),
    });
    let one_minus_t = QSeries::from_fn(bound as usize, |k| match k {
        0 => rat(1),
        1 => rat(-1),
        _ => rat(0),
    });
    let ratio = &one_plus_t * &one_minus_t.reciprocal().expect("unit constant term");
    let mut ok = true;
    let mut detail = String::new();
    'outer: for nv in 0..=bound {
        for m in 0..=bound {
            let rhs_series = ratio.pow(nv * m);
            for d in 1..=bound {
                let mut lhs = Rational::zero();
                for l in gen_partitions(d, Flavor::Distinct) {
                    lhs += Rational::from(BigInt::one() << l.length())
                        * principal_spec(&l, nv)
                        * principal_spec(&l, m);
                }
                if lhs != *rhs_series.coeff(d as usize) {
                    ok = false;
                    detail = format!(
                        "double specialization differs at degree {d}, {nv} and {m} variables"
                    );
                    break 'outer;
                }
            }
        }
    }
    checks.push(check(
        format!("Σ 2^ℓ P_λ(1^a)P_λ(1^b) = [t^d] ((1+t)/(1−t))^(ab) for a,b,d ≤ {bound}"),
        ok,
        if ok {
            "all double specializations equal".to_string()
        } else {
            detail
        },
    ));
    checks
}

fn suite_nspf(bound: u32) -> Vec<Check> {
    use crate::nspf::{nspf_count, partition_into_blocks};
    use crate::partitions::multinomial;
    let mut checks = Vec::new();
    for n in 1..=bound {
        let name = format!("block census for length {n} satisfies all three statistics");
        match partition_into_blocks(n, n <= 5) {
            Ok(census) => {
                let total_ok = census.total == nspf_count(n);
                checks.push(check(
                    name,
                    total_ok,
                    format!("{} blocks, {} colored functions", census.blocks.len(), census.total),
                ));
            }
            Err(e) => checks.push(check(name, false, e.to_string())),
        }
    }
    for n in 1..=bound {
        let v = sh_main_v(n);
        let mut weighted = Rational::zero();
        for (l, c) in v.terms() {
            let dim = (BigInt::one() << (n as usize - l.length())) * multinomial(n, l.parts());
            weighted += c * Rational::from(dim);
        }
        let total_ok = weighted == Rational::from(nspf_count(n));
        let sum_ok = v.coeff_sum() == Rational::from(schroeder(n));
        checks.push(check(
            format!("odd-shape block numerology is consistent at length {n}"),
            total_ok && sum_ok,
            format!(
                "coefficient-weighted sizes total {weighted}; coefficients sum to {}",
                v.coeff_sum()
            ),
        ));
    }
    checks
}

fn suite_fixpoints(bound: u32) -> Vec<Check> {
    use crate::nspf::{count_fixed, count_fixed_by_perm};
    let mut checks = Vec::new();
    for n in 1..=bound {
        let mut failure = None;
        let mut shapes = 0usize;
        for l in gen_partitions(n, Flavor::Any) {
            shapes += 1;
            let predicted = (n as u64 + 1).pow(l.length() as u32 - 1);
            let counted = match count_fixed(&l) {
                Ok(c) => c,
                Err(e) => {
                    failure = Some(e.to_string());
                    break;
                }
            };
            if counted != predicted {
                failure = Some(format!(
                    "cycle type {l}: counted {counted}, predicted {predicted}"
                ));
                break;
            }
            // Same count from a second permutation of the same cycle type.
            let mut reversed_parts: Vec<u32> = l.parts().to_vec();
            reversed_parts.reverse();
            let alt = layout_cycles(&reversed_parts);
            if count_fixed_by_perm(&alt) != counted {
                failure = Some(format!("cycle type {l}: layout-dependent count"));
                break;
            }
        }
        checks.push(check(
            format!("fixed parking functions number (n+1)^(ℓ-1) for every cycle type, n = {n}"),
            failure.is_none(),
            failure.unwrap_or_else(|| format!("{shapes} cycle types checked twice")),
        ));
    }
    checks
}

/// Cycles laid out on consecutive indices in the given part order.
fn layout_cycles(parts: &[u32]) -> Vec<usize> {
    let n: u32 = parts.iter().sum();
    let mut perm = vec![0usize; n as usize];
    let mut offset = 0usize;
    for &part in parts {
        let k = part as usize;
        for i in 0..k {
            perm[offset + i] = offset + (i + 1) % k;
        }
        offset += k;
    }
    perm
}
