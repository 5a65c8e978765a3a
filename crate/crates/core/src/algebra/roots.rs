//! Complete rational-root extraction for univariate polynomials over Q.
//!
//! The candidate set comes from the rational root theorem applied to the
//! primitive integer model: numerators divide the constant term, the
//! denominators divide the leading coefficient. Both are factored exactly
//! (Pollard rho backstop), candidates are pruned with the classical
//! p - kq | P(k) filters, and every survivor is verified by exact
//! evaluation, so the residual degree is certified, not heuristic.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::intfactor::{divisors_up_to, factor};
use crate::algebra::{Rational, UnivariatePolynomial};
use crate::error::{Error, Result};

/// Rational roots with exact multiplicities, plus the rational-root-free
/// cofactor. `residual_degree` counts the non-rational roots with
/// multiplicity; `residual` is the deflated polynomial carrying them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRoots {
    pub roots: Vec<(Rational, u32)>,
    pub residual_degree: usize,
    pub residual: UnivariatePolynomial,
}

/// All rational roots of a nonzero polynomial, each with its exact
/// multiplicity, sorted ascending.
pub fn squarefree_and_rational_roots(p: &UnivariatePolynomial) -> Result<RationalRoots> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots: Vec<(Rational, u32)> = Vec::new();
    let mut work = p.clone();

    let zero_mult = work.order_at_zero();
    if zero_mult > 0 {
        work = work.shift_down(zero_mult);
        roots.push((Rational::zero(), zero_mult as u32));
    }

    if work.degree() == Some(0) {
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        return Ok(RationalRoots {
            roots,
            residual_degree: 0,
            residual: work,
        });
    }

    for r in candidate_roots(&work) {
        let linear = UnivariatePolynomial::new(vec![-r.clone(), Rational::one()]);
        let mut mult = 0u32;
        loop {
            let (q, rem) = work.div_rem(&linear);
            if rem.is_zero() {
                work = q;
                mult += 1;
            } else {
                break;
            }
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    }

    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(RationalRoots {
        residual_degree: work.degree().unwrap_or(0),
        residual: work,
        roots,
    })
}

/// Primitive integer coefficients of a nonzero rational polynomial.
fn primitive_integer_coeffs(p: &UnivariatePolynomial) -> Vec<BigInt> {
    let mut denom_lcm = BigInt::one();
    for c in p.coefficients() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coefficients()
        .iter()
        .map(|c| c.numer() * &denom_lcm / c.denom())
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    ints.iter().map(|c| c / &content).collect()
}

/// Candidate rational roots of a polynomial with nonzero constant term:
/// every actual rational root appears among the candidates.
fn candidate_roots(p: &UnivariatePolynomial) -> Vec<Rational> {
    let ints = primitive_integer_coeffs(p);
    let a0 = ints.first().unwrap().magnitude().clone();
    let lead = ints.last().unwrap().magnitude().clone();
    debug_assert!(!a0.is_zero());

    // Cauchy bound: |root| <= 1 + max |a_i| / |lead|, so the numerator of
    // a root p/q (q <= lead) is at most lead + max |a_i|.
    let max_abs = ints
        .iter()
        .map(|c| c.magnitude().clone())
        .max()
        .unwrap_or_else(BigUint::one);
    let numer_bound = &lead + &max_abs;

    let numers = divisors_up_to(&factor(&a0), &numer_bound);
    let denoms = divisors_up_to(&factor(&lead), &lead);

    // Filters: if p/q is a root of the integer polynomial P, then
    // (p - q) | P(1) and (p + q) | P(-1).
    let at_one: BigInt = ints.iter().sum();
    let at_minus_one: BigInt = ints
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c.clone() })
        .sum();

    let mut candidates = Vec::new();
    for q in &denoms {
        let qi = BigInt::from_biguint(Sign::Plus, q.clone());
        for n in &numers {
            if !n.gcd(q).is_one() {
                continue;
            }
            let ni = BigInt::from_biguint(Sign::Plus, n.clone());
            for sign in [1i32, -1] {
                let p = if sign > 0 { ni.clone() } else { -ni.clone() };
                let diff = &p - &qi;
                if !at_one.is_zero() && !diff.is_zero() && !at_one.is_multiple_of(&diff) {
                    continue;
                }
                let sum = &p + &qi;
                if !at_minus_one.is_zero() && !sum.is_zero() && !at_minus_one.is_multiple_of(&sum) {
                    continue;
                }
                candidates.push(Rational::new(p, qi.clone()));
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    candidates
}
