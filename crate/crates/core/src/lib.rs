//! Exact computation of the shifted parking-function symmetric function.
//!
//! The symmetric group acts on parking functions of length `n` by permuting
//! positions; the Frobenius characteristic of that action is a symmetric
//! function `pfₙ`. Substituting `p_{2i+1} ↦ 2p_{2i+1}`, `p_{2i} ↦ 0` turns it
//! into an element `shₙ` of the subalgebra generated by odd power sums. This
//! crate computes `shₙ` exactly — in the power-sum basis, as a polynomial in
//! the one-row Schur P-functions, and in the P-function basis proper — by
//! several logically independent routes, and cross-checks all of them against
//! each other and against direct enumeration of (colored) parking functions.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! every comparison is equality, never tolerance.
//!
//! Module map:
//! - [`partitions`]: integer partitions, generation by flavor, `z_λ`,
//!   factorials and multinomials.
//! - [`powersum`]: polynomials in the power sums `p_k` with rational
//!   coefficients; shiftification, inner product, dimension, complete and
//!   elementary symmetric functions.
//! - [`series`]: truncated formal power series over any exact coefficient
//!   ring — products, powers, square roots, exponentials, composition, and
//!   compositional inverses.
//! - [`schur`]: one-row Schur Q/P-functions, Pfaffian `P_λ`, principal
//!   specialization, products of one-row `P`s as an expansion basis, and
//!   conversion into the `P_λ` basis.
//! - [`shifted`]: the `shₙ` routes themselves plus the Schröder/Catalan
//!   scalar sequences, and the cross-route verifier.
//! - [`nspf`]: parking-function enumeration, fixed-point counting, and the
//!   block census of two-colored parking functions.
//! - [`verify`]: named suites that re-run every identity on demand.

pub mod nspf;
pub mod partitions;
pub mod powersum;
pub mod schur;
pub mod series;
pub mod shifted;
pub mod verify;

/// Exact scalar type used throughout: arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

/// Truncated power series with rational coefficients.
pub type QSeries = series::Series<Rational>;

/// Truncated power series whose coefficients are power-sum polynomials.
pub type GammaSeries = series::Series<powersum::PPoly>;

/// The integer `n` as a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// The fraction `n/d` as a [`Rational`] (panics when `d = 0`).
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub use nspf::{
    count_fixed, enumerate_pf, is_parking, nspf_count, partition_into_blocks, Block, BlockCensus,
    Color, Nspf, ParkingFunction,
};
pub use partitions::{gen_partitions, Flavor, Partition};
pub use powersum::{elem_sym, hom_sym, GammaPoly, PPoly, PolyError};
pub use schur::{
    p_basis_convert, p_function, p_lambda, principal_spec, q_function, PExpansion, VExpansion,
};
pub use series::{Coeff, Series, SeriesError};
pub use shifted::{
    catalan, pf_powersum, schroeder, sh_easy_v, sh_lagrange, sh_main_v, sh_p_expansion,
    sh_powersum, verify_routes, ShResult,
};
pub use verify::{run_all, run_suite, Suite, SuiteReport};
