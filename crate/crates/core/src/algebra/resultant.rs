//! Resultants of bivariate polynomials by evaluation and interpolation:
//! specialize the kept variable at enough sample points where neither
//! leading coefficient drops, take exact univariate resultants, and
//! recover the eliminant by Newton interpolation. Everything stays in
//! exact rational arithmetic.

use num_traits::Zero;

use crate::algebra::{resultant_univariate, Polynomial, Rational, UnivariatePolynomial};

/// Resultant of two nonzero two-variable polynomials with respect to the
/// variable at `elim_idx`, returned as a univariate polynomial in the
/// other variable. The result is identically zero exactly when the inputs
/// share a factor of positive degree in the eliminated variable.
pub fn resultant_eliminating(
    f: &Polynomial,
    g: &Polynomial,
    elim_idx: usize,
) -> UnivariatePolynomial {
    assert_eq!(f.vars().len(), 2);
    assert_eq!(g.vars(), f.vars());
    assert!(!f.is_zero() && !g.is_zero());
    let keep_idx = 1 - elim_idx;

    let df = f.total_degree().unwrap();
    let dg = g.total_degree().unwrap();
    let bound = (df * dg) as usize;

    let lcf = f.leading_coefficient_in(elim_idx);
    let lcg = g.leading_coefficient_in(elim_idx);

    let mut samples: Vec<(Rational, Rational)> = Vec::with_capacity(bound + 1);
    let mut k: i64 = 0;
    while samples.len() < bound + 1 {
        let x0 = Rational::from_integer(k.into());
        // Alternate 0, 1, -1, 2, -2, ...
        k = if k > 0 { -k } else { -k + 1 };
        if lcf.eval(&x0).is_zero() || lcg.eval(&x0).is_zero() {
            continue;
        }
        let fu = f.specialize(keep_idx, &x0);
        let gu = g.specialize(keep_idx, &x0);
        let value = resultant_univariate(&fu, &gu);
        samples.push((x0, value));
    }

    newton_interpolate(&samples)
}

/// Exact interpolation through distinct sample points.
fn newton_interpolate(samples: &[(Rational, Rational)]) -> UnivariatePolynomial {
    let n = samples.len();
    // Divided differences in place.
    let mut table: Vec<Rational> = samples.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = &samples[i].0 - &samples[i - level].0;
            table[i] = (&table[i] - &table[i - 1]) / dx;
        }
    }
    // Horner-style accumulation of sum_k table[k] * prod_{j<k} (t - x_j).
    let mut acc = UnivariatePolynomial::zero();
    for i in (0..n).rev() {
        let linear = UnivariatePolynomial::new(vec![
            -samples[i].0.clone(),
            Rational::from_integer(1.into()),
        ]);
        acc = &(&acc * &linear) + &UnivariatePolynomial::constant(table[i].clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Var;
    use crate::parse::parse_polynomial;

    fn p2(s: &str) -> Polynomial {
        parse_polynomial(s, &[Var::X, Var::Y]).unwrap()
    }

    #[test]
    fn eliminates_y_from_circle_and_line() {
        // x^2 + y^2 - 1 and y - x: common zeros have 2x^2 = 1.
        let r = resultant_eliminating(&p2("x^2 + y^2 - 1"), &p2("y - x"), 1);
        let expected = UnivariatePolynomial::from_ints(&[-1, 0, 2]);
        assert_eq!(r.monic(), expected.monic());
    }

    #[test]
    fn common_factor_gives_zero() {
        let f = p2("(x + y) (x - 2 y)");
        let g = p2("(x + y) (y^2 + 1)");
        let r = resultant_eliminating(&f, &g, 1);
        assert!(r.is_zero());
    }

    #[test]
    fn y_free_argument_uses_power_convention() {
        // Res_y(f, g) with deg_y f = 0 is f^(deg_y g) up to the sample
        // structure: its roots are exactly the roots of f.
        let f = p2("x^2 - 1");
        let g = p2("y^3 - y + x");
        let r = resultant_eliminating(&f, &g, 1);
        let cube = {
            let base = UnivariatePolynomial::from_ints(&[-1, 0, 1]);
            &(&base * &base) * &base
        };
        assert_eq!(r.monic(), cube.monic());
    }

    #[test]
    fn nine_point_grid() {
        let r = resultant_eliminating(&p2("x^3 - x"), &p2("y^3 - y"), 1);
        // Every x in {-1, 0, 1} admits a common zero; eliminant vanishes there.
        let roots = crate::algebra::squarefree_and_rational_roots(&r).unwrap();
        let root_values: Vec<_> = roots.roots.iter().map(|(r, _)| r.clone()).collect();
        assert_eq!(
            root_values,
            vec![
                Rational::from_integer((-1).into()),
                Rational::from_integer(0.into()),
                Rational::from_integer(1.into())
            ]
        );
        assert_eq!(roots.residual_degree, 0);
    }
}
