use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals. `coeffs[i]` is the
/// coefficient of t^i; the highest stored coefficient is nonzero, and the
/// zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariatePolynomial {
    coeffs: Vec<Rational>,
}

impl UnivariatePolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> UnivariatePolynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UnivariatePolynomial { coeffs }
    }

    pub fn zero() -> UnivariatePolynomial {
        UnivariatePolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> UnivariatePolynomial {
        UnivariatePolynomial::new(vec![c])
    }

    /// Test helper: polynomial with the given integer coefficients,
    /// constant term first.
    pub fn from_ints(coeffs: &[i64]) -> UnivariatePolynomial {
        UnivariatePolynomial::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coefficient(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> UnivariatePolynomial {
        if c.is_zero() {
            return UnivariatePolynomial::zero();
        }
        UnivariatePolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> UnivariatePolynomial {
        match self.leading_coefficient() {
            None => UnivariatePolynomial::zero(),
            Some(lc) => self.scale(&(Rational::one() / lc)),
        }
    }

    pub fn derivative(&self) -> UnivariatePolynomial {
        if self.coeffs.len() <= 1 {
            return UnivariatePolynomial::zero();
        }
        UnivariatePolynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rational::from_integer((i as u64 + 1).into()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact Euclidean division; the divisor must be nonzero.
    pub fn div_rem(
        &self,
        divisor: &UnivariatePolynomial,
    ) -> (UnivariatePolynomial, UnivariatePolynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading_coefficient().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (UnivariatePolynomial::zero(), self.clone());
        }
        let qlen = rem.len() - dd;
        let mut quo = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = rem[i + dd].clone() / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let prod = d * &c;
                rem[i + j] -= prod;
            }
            quo[i] = c;
        }
        (
            UnivariatePolynomial::new(quo),
            UnivariatePolynomial::new(rem),
        )
    }

    /// Number of leading zero coefficients, i.e. the multiplicity of the
    /// root t = 0 (degree + 1 of the t-power factor). Zero polynomial: 0.
    pub fn order_at_zero(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Divide out t^k; the first k coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> UnivariatePolynomial {
        assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        UnivariatePolynomial::new(self.coeffs.iter().skip(k).cloned().collect())
    }
}

impl Add for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn add(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        UnivariatePolynomial::new(coeffs)
    }
}

impl Sub for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn sub(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        self + &(-rhs)
    }
}

impl Neg for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn neg(self) -> UnivariatePolynomial {
        UnivariatePolynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn mul(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UnivariatePolynomial::new(coeffs)
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
                if e > 0 {
                    write!(f, "*")?;
                }
            }
            if e == 1 {
                write!(f, "t")?;
            } else if e > 1 {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monic greatest common divisor via the exact Euclidean remainder
/// sequence. Errors when both inputs are zero.
pub fn gcd_univariate(
    a: &UnivariatePolynomial,
    b: &UnivariatePolynomial,
) -> Result<UnivariatePolynomial> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let mut r0 = a.monic();
    let mut r1 = b.monic();
    while !r1.is_zero() {
        let (_, r) = r0.div_rem(&r1);
        r0 = r1;
        r1 = r.monic();
    }
    Ok(r0)
}

/// Resultant of two univariate polynomials over the rationals, computed
/// through the Euclidean remainder chain. Conventions: Res(a, b) = 0 when
/// either is zero, and Res of two nonzero constants is 1.
pub fn resultant_univariate(a: &UnivariatePolynomial, b: &UnivariatePolynomial) -> Rational {
    let mut a = a.clone();
    let mut b = b.clone();
    let mut acc = Rational::one();
    loop {
        if a.is_zero() || b.is_zero() {
            return Rational::zero();
        }
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if da == 0 && db == 0 {
            return acc;
        }
        if da == 0 {
            return acc * pow_rational(a.leading_coefficient().unwrap(), db as u32);
        }
        if db == 0 {
            return acc * pow_rational(b.leading_coefficient().unwrap(), da as u32);
        }
        if da < db {
            // Res(a, b) = (-1)^(da*db) Res(b, a)
            if da * db % 2 == 1 {
                acc = -acc;
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let (_, r) = a.div_rem(&b);
        // Res(a, b) = lc(b)^(da - dr) * (-1)^(da*db) * Res(b, r)
        let dr = r.degree().map(|d| d as i64).unwrap_or(-1);
        let lcb = b.leading_coefficient().unwrap();
        acc *= pow_rational(lcb, (da as i64 - dr) as u32);
        if da * db % 2 == 1 {
            acc = -acc;
        }
        a = b;
        b = r;
    }
}

fn pow_rational(base: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}
