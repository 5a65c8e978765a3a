//! Exact arithmetic substrate: arbitrary-precision rationals, sparse
//! polynomials in up to three variables, and the univariate helpers the
//! blow-up engine needs. No floating point anywhere.

mod intfactor;
mod polynomial;
mod resultant;
mod roots;
mod univariate;

pub use polynomial::{Polynomial, Var};
pub use resultant::resultant_eliminating;
pub use roots::{squarefree_and_rational_roots, RationalRoots};
pub use univariate::{gcd_univariate, resultant_univariate, UnivariatePolynomial};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Fraction n/d as a rational, d != 0.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
