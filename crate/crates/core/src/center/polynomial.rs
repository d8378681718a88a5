use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Univariate polynomial with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolynomial {
    coefficients: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        RationalPolynomial {
            coefficients: Vec::new(),
        }
    }

    pub fn new(mut coefficients: Vec<BigRational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        RationalPolynomial { coefficients }
    }

    pub fn from_integers(coefficients: &[i64]) -> Self {
        RationalPolynomial::new(coefficients.iter().map(|&c| int(c)).collect())
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn evaluate(&self, at: &BigRational) -> BigRational {
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    pub fn evaluate_at(&self, n: i64) -> BigRational {
        self.evaluate(&int(n))
    }

    /// Coefficients `c_j` with `P(n) = Σ_j c_j (n - shift)(n - shift - 1)..(n - shift - j + 1)`.
    ///
    /// Computed from forward differences at `n = shift`: `c_j = Δ^j P(shift) / j!`.
    pub fn falling_factorial_coefficients(&self, shift: i64) -> Vec<BigRational> {
        let Some(degree) = self.degree() else {
            return Vec::new();
        };
        let mut diffs: Vec<BigRational> = (0..=degree as i64)
            .map(|j| self.evaluate_at(shift + j))
            .collect();
        let mut out = Vec::with_capacity(degree + 1);
        let mut j_factorial = BigRational::one();
        for j in 0..=degree {
            if j > 0 {
                j_factorial *= int(j as i64);
            }
            out.push(&diffs[0] / &j_factorial);
            for i in 0..diffs.len() - 1 {
                diffs[i] = &diffs[i + 1] - &diffs[i];
            }
            diffs.pop();
        }
        out
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coefficients.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = power == 0 || !magnitude.is_one();
            if show_coeff {
                write!(f, "{magnitude}")?;
            }
            match power {
                0 => {}
                1 => f.write_str("n")?,
                _ => write!(f, "n^{power}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// The unique polynomial of degree `< points.len()` through `points`, by Newton
/// divided differences over exact rationals.
pub fn interpolate(points: &[(i64, BigRational)]) -> Result<RationalPolynomial> {
    if points.is_empty() {
        return Err(Error::TooFewPoints { needed: 1, got: 0 });
    }
    for (i, (a, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(b, _)| b == a) {
            return Err(Error::DuplicateAbscissa(*a));
        }
    }
    let xs: Vec<BigRational> = points.iter().map(|(a, _)| int(*a)).collect();
    let mut table: Vec<BigRational> = points.iter().map(|(_, v)| v.clone()).collect();
    let m = points.len();
    // table[i] becomes f[x_0, .., x_i]
    for level in 1..m {
        for i in (level..m).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner on the Newton form, expanding into monomials.
    let mut acc: Vec<BigRational> = vec![table[m - 1].clone()];
    for i in (0..m - 1).rev() {
        // acc = acc * (n - x_i) + table[i]
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (power, c) in acc.iter().enumerate() {
            next[power + 1] += c;
            next[power] -= c * &xs[i];
        }
        next[0] += &table[i];
        acc = next;
    }
    Ok(RationalPolynomial::new(acc))
}
