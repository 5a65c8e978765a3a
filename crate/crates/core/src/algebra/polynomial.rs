use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::{Rational, UnivariatePolynomial};
use crate::error::{Error, Result};

/// One of the three supported variable symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
        }
    }

    pub fn from_char(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Sparse polynomial with exact rational coefficients in up to three
/// variables. Invariants: no zero coefficients are stored, every exponent
/// vector has length equal to the variable count, and the zero polynomial
/// is the empty term map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vec<Var>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &[Var]) -> Polynomial {
        assert!(vars.len() <= 3, "at most three variables supported");
        Polynomial {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[Var], c: Rational) -> Polynomial {
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    /// The monomial `v` with coefficient 1; `v` must be one of `vars`.
    pub fn variable(vars: &[Var], v: Var) -> Polynomial {
        let idx = vars
            .iter()
            .position(|&w| w == v)
            .expect("variable not in scope");
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = Polynomial::zero(vars);
        p.terms.insert(exps, Rational::one());
        p
    }

    pub fn from_terms<I>(vars: &[Var], terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Polynomial::zero(vars);
        for (exps, c) in terms {
            p.add_term(exps, c);
        }
        p
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Maximum total degree, or None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u64).sum())
            .max()
    }

    /// Minimum total degree over all terms, or None for the zero
    /// polynomial. For a polynomial in two variables this is the order of
    /// vanishing at the origin (None standing for +infinity).
    pub fn ord_at_origin(&self) -> Option<u64> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u64).sum())
            .min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self
            .terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u64).sum::<u64>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::constant(&self.vars, Rational::one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Shift the argument: returns q with q(v) = p(v + point).
    pub fn translate(&self, point: &[Rational]) -> Result<Polynomial> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut result = self.clone();
        for (idx, shift) in point.iter().enumerate() {
            if shift.is_zero() {
                continue;
            }
            result = result.shift_var(idx, shift);
        }
        Ok(result)
    }

    /// Single-variable shift v_idx -> v_idx + c via binomial expansion.
    fn shift_var(&self, idx: usize, c: &Rational) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (exps, coeff) in &self.terms {
            let e = exps[idx];
            // (v + c)^e = sum_k C(e,k) c^(e-k) v^k
            let mut binom = Rational::one();
            let mut cpow = Rational::one(); // c^(e-k), built from k = e downward
            for k in (0..=e).rev() {
                let mut new_exps = exps.clone();
                new_exps[idx] = k;
                out.add_term(new_exps, coeff * &binom * &cpow);
                if k > 0 {
                    // C(e, k-1) = C(e, k) * k / (e - k + 1)
                    binom = binom * Rational::from_integer(k.into())
                        / Rational::from_integer((e - k + 1).into());
                    cpow *= c;
                }
            }
        }
        out
    }

    /// Substitute 1 for `chart` in a homogeneous polynomial; the remaining
    /// variables keep their (x, y, z) order.
    pub fn dehomogenize(&self, chart: Var) -> Result<Polynomial> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let idx = self
            .vars
            .iter()
            .position(|&v| v == chart)
            .expect("chart variable not in scope");
        let kept: Vec<Var> = self.vars.iter().copied().filter(|&v| v != chart).collect();
        let mut out = Polynomial::zero(&kept);
        for (exps, c) in &self.terms {
            let new_exps: Vec<u32> = exps
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != idx)
                .map(|(_, &e)| e)
                .collect();
            out.add_term(new_exps, c.clone());
        }
        Ok(out)
    }

    /// Homogenize a two-variable polynomial to degree `d` with the missing
    /// third variable from (x, y, z).
    pub fn homogenize(&self, d: u64) -> Result<Polynomial> {
        assert_eq!(self.vars.len(), 2, "homogenize expects two variables");
        if let Some(deg) = self.total_degree() {
            if deg > d {
                return Err(Error::DegreeTooSmall {
                    degree: d,
                    required: deg,
                });
            }
        }
        let missing = [Var::X, Var::Y, Var::Z]
            .into_iter()
            .find(|v| !self.vars.contains(v))
            .expect("two distinct variables leave one free");
        let mut all: Vec<Var> = self.vars.clone();
        all.push(missing);
        all.sort();
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| all.iter().position(|w| w == v).unwrap())
            .collect();
        let mpos = all.iter().position(|w| *w == missing).unwrap();
        let mut out = Polynomial::zero(&all);
        for (exps, c) in &self.terms {
            let deg: u64 = exps.iter().map(|&e| e as u64).sum();
            let mut new_exps = vec![0u32; 3];
            for (i, &e) in exps.iter().enumerate() {
                new_exps[pos[i]] = e;
            }
            new_exps[mpos] = (d - deg) as u32;
            out.add_term(new_exps, c.clone());
        }
        Ok(out)
    }

    /// Remap every exponent vector. Colliding images accumulate.
    pub fn map_exponents<F>(&self, f: F) -> Polynomial
    where
        F: Fn(&[u32]) -> Vec<u32>,
    {
        let mut out = Polynomial::zero(&self.vars);
        for (exps, c) in &self.terms {
            out.add_term(f(exps), c.clone());
        }
        out
    }

    /// Divide by the m-th power of the variable at `idx`; every term must
    /// be divisible.
    pub fn divide_var_power(&self, idx: usize, m: u32) -> Polynomial {
        self.map_exponents(|exps| {
            let mut e = exps.to_vec();
            assert!(e[idx] >= m, "term not divisible by the exceptional power");
            e[idx] -= m;
            e
        })
    }

    /// For a two-variable polynomial: substitute `value` for the variable
    /// at `idx` and return the result as a univariate polynomial in the
    /// other variable.
    pub fn specialize(&self, idx: usize, value: &Rational) -> UnivariatePolynomial {
        assert_eq!(self.vars.len(), 2);
        let other = 1 - idx;
        let max_e = self
            .terms
            .keys()
            .map(|e| e[other] as usize)
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); max_e + 1];
        for (exps, c) in &self.terms {
            let mut pow = Rational::one();
            for _ in 0..exps[idx] {
                pow *= value;
            }
            coeffs[exps[other] as usize] += c * pow;
        }
        UnivariatePolynomial::new(coeffs)
    }

    /// For a two-variable polynomial: set the variable at `idx` to zero
    /// and view the rest as univariate in the other variable.
    pub fn restrict_var_zero(&self, idx: usize) -> UnivariatePolynomial {
        assert_eq!(self.vars.len(), 2);
        let other = 1 - idx;
        let max_e = self
            .terms
            .iter()
            .filter(|(e, _)| e[idx] == 0)
            .map(|(e, _)| e[other] as usize)
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); max_e + 1];
        for (exps, c) in &self.terms {
            if exps[idx] == 0 {
                coeffs[exps[other] as usize] += c;
            }
        }
        UnivariatePolynomial::new(coeffs)
    }

    /// Leading-coefficient polynomial with respect to the variable at
    /// `idx`: the coefficient of its highest power, as a univariate
    /// polynomial in the other variable. Two-variable polynomials only.
    pub fn leading_coefficient_in(&self, idx: usize) -> UnivariatePolynomial {
        assert_eq!(self.vars.len(), 2);
        let other = 1 - idx;
        let top = self.terms.keys().map(|e| e[idx]).max().unwrap_or(0);
        let max_e = self
            .terms
            .iter()
            .filter(|(e, _)| e[idx] == top)
            .map(|(e, _)| e[other] as usize)
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); max_e + 1];
        for (exps, c) in &self.terms {
            if exps[idx] == top {
                coeffs[exps[other] as usize] += c;
            }
        }
        UnivariatePolynomial::new(coeffs)
    }

    /// Degree in the single variable at `idx`, or None if zero.
    pub fn degree_in(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[idx]).max()
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitute each variable by a linear form in (x, y, z); used for
    /// projective changes of coordinates. Three-variable polynomials only.
    pub fn linear_substitute(&self, matrix: &[[Rational; 3]; 3]) -> Polynomial {
        assert_eq!(self.vars.len(), 3);
        let vars = self.vars.clone();
        let images: Vec<Polynomial> = (0..3)
            .map(|i| {
                let mut p = Polynomial::zero(&vars);
                for (j, var) in [Var::X, Var::Y, Var::Z].iter().enumerate() {
                    if !matrix[i][j].is_zero() {
                        p = &p + &Polynomial::variable(&vars, *var).scale(&matrix[i][j]);
                    }
                }
                p
            })
            .collect();
        let max_exp: Vec<u32> = (0..3)
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        // Cache powers of each image polynomial.
        let powers: Vec<Vec<Polynomial>> = images
            .iter()
            .zip(&max_exp)
            .map(|(img, &m)| {
                let mut v = vec![Polynomial::constant(&vars, Rational::one())];
                for k in 1..=m as usize {
                    v.push(&v[k - 1] * img);
                }
                v
            })
            .collect();
        let mut out = Polynomial::zero(&vars);
        for (exps, c) in &self.terms {
            let mut term = Polynomial::constant(&vars, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                term = &term * &powers[i][e as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Terms in graded-lexicographic order, highest first; the canonical
    /// order used for printing.
    fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Rational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(ea, _), (eb, _)| {
            let da: u64 = ea.iter().map(|&x| x as u64).sum();
            let db: u64 = eb.iter().map(|&x| x as u64).sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        ts
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.vars, rhs.vars, "variable sets must match");
        let mut out = self.clone();
        for (exps, c) in &rhs.terms {
            out.add_term(exps.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.vars, rhs.vars, "variable sets must match");
        let mut out = self.clone();
        for (exps, c) in &rhs.terms {
            out.add_term(exps.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.vars, rhs.vars, "variable sets must match");
        let mut out = Polynomial::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(&a, &b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.sorted_terms() {
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
            let is_const = exps.iter().all(|&e| e == 0);
            let mut wrote_coeff = false;
            if is_const || !abs.is_one() {
                write!(f, "{abs}")?;
                wrote_coeff = true;
            }
            let mut wrote_var = false;
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote_coeff || wrote_var {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.vars[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote_var = true;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{frac, rat};

    fn p2(s: &str) -> Polynomial {
        crate::parse::parse_polynomial(s, &[Var::X, Var::Y]).unwrap()
    }

    fn p3(s: &str) -> Polynomial {
        crate::parse::parse_polynomial(s, &[Var::X, Var::Y, Var::Z]).unwrap()
    }

    #[test]
    fn ord_at_origin_examples() {
        assert_eq!(p2("x^2 + x*y^3").ord_at_origin(), Some(2));
        assert_eq!(Polynomial::zero(&[Var::X, Var::Y]).ord_at_origin(), None);
        assert_eq!(p2("7").ord_at_origin(), Some(0));
    }

    #[test]
    fn translate_examples() {
        let shifted = p2("x^2").translate(&[rat(1), rat(0)]).unwrap();
        assert_eq!(shifted, p2("x^2 + 2*x + 1"));

        let diag = p2("y - x").translate(&[frac(5, 3), frac(5, 3)]).unwrap();
        assert_eq!(diag, p2("y - x"));

        let xy = p2("x*y").translate(&[rat(1), rat(1)]).unwrap();
        assert_eq!(xy, p2("x*y + x + y + 1"));
    }

    #[test]
    fn translate_dimension_mismatch() {
        assert_eq!(
            p2("x").translate(&[rat(1)]),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn dehomogenize_examples() {
        assert_eq!(p3("x^2*z").dehomogenize(Var::Z).unwrap(), p2("x^2"));
        assert_eq!(
            p3("x^3 - x*z^2").dehomogenize(Var::Z).unwrap(),
            p2("x^3 - x")
        );
        let yz = p3("x*y + z^2").dehomogenize(Var::X).unwrap();
        assert_eq!(yz.vars(), &[Var::Y, Var::Z]);
        assert_eq!(
            yz,
            crate::parse::parse_polynomial("y + z^2", &[Var::Y, Var::Z]).unwrap()
        );
    }

    #[test]
    fn dehomogenize_rejects_inhomogeneous() {
        assert_eq!(
            p3("x + z^2").dehomogenize(Var::Z),
            Err(Error::NotHomogeneous)
        );
    }

    #[test]
    fn homogenize_round_trip() {
        let affine = p2("x^3 - x");
        let form = affine.homogenize(3).unwrap();
        assert_eq!(form, p3("x^3 - x*z^2"));
        assert_eq!(form.dehomogenize(Var::Z).unwrap(), affine);
    }

    #[test]
    fn display_canonical_order() {
        assert_eq!(p2("y^2 + x^2 - 2*x*y").to_string(), "x^2 - 2*x*y + y^2");
        assert_eq!(p2("3/2 x y^3").to_string(), "3/2*x*y^3");
        assert_eq!(Polynomial::zero(&[Var::X, Var::Y]).to_string(), "0");
    }

    #[test]
    fn specialization_and_restriction() {
        let p = p2("x^2*y + y^3 - x");
        let at1 = p.specialize(0, &rat(1));
        // y + y^3 - 1
        assert_eq!(at1.coefficient(0), rat(-1));
        assert_eq!(at1.coefficient(1), rat(1));
        assert_eq!(at1.coefficient(3), rat(1));
        let restricted = p.restrict_var_zero(0);
        assert_eq!(restricted.degree(), Some(3));
        assert_eq!(restricted.coefficient(3), rat(1));
        assert_eq!(restricted.coefficient(1), rat(0));
    }

    #[test]
    fn ord_multiplicative() {
        let a = p2("x^2 + x*y");
        let b = p2("y^3 - x^4");
        let prod = &a * &b;
        assert_eq!(
            prod.ord_at_origin(),
            Some(a.ord_at_origin().unwrap() + b.ord_at_origin().unwrap())
        );
    }

    #[test]
    fn linear_substitute_identity() {
        let f = p3("x^2*y - z^3 + x*y*z");
        let id = [
            [rat(1), rat(0), rat(0)],
            [rat(0), rat(1), rat(0)],
            [rat(0), rat(0), rat(1)],
        ];
        assert_eq!(f.linear_substitute(&id), f);
    }
}
