//! The center of the group algebra of `B_{kn}^k`: structure coefficients of
//! class-sum products and checks that they are polynomial in `n`.
//!
//! `c_{xy}^z` is computed by fixing one `ω ∈ C_z` and counting the `α ∈ C_x`
//! for which `α⁻¹ ω` lies in `C_y`. Members of `C_x` are generated directly, so
//! the full group is never enumerated.

mod polynomial;

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::budget::Budget;
use crate::conjugacy::{
    class_size, enumerate_class_types, for_each_class_element, representative, ProperClassFamily,
};
use crate::error::{Error, Result};
use crate::wreath::{BlockPermutation, ClassType, TypeExtractor};

pub use polynomial::{interpolate, RationalPolynomial};

/// `C_x C_y = Σ_z c_{xy}^z C_z`, storing only nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassExpansion {
    pub k: usize,
    pub n: usize,
    pub terms: BTreeMap<ClassType, BigUint>,
}

impl ClassExpansion {
    pub fn coefficient(&self, z: &ClassType) -> BigUint {
        self.terms.get(z).cloned().unwrap_or_default()
    }

    /// `Σ_z c_{xy}^z |C_z|`, which must equal `|C_x| |C_y|`.
    pub fn mass(&self) -> BigUint {
        self.terms.iter().map(|(z, c)| c * class_size(z)).sum()
    }

    pub fn to_json(&self, x: &ClassType, y: &ClassType) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(z, c)| json!({ "type": z.to_string(), "coeff": c.to_string() }))
            .collect();
        json!({
            "k": self.k,
            "n": self.n,
            "x": x.to_string(),
            "y": y.to_string(),
            "terms": terms,
        })
    }
}

fn check_compatible(x: &ClassType, y: &ClassType) -> Result<()> {
    if x.k() != y.k() || x.size() != y.size() {
        return Err(Error::DimensionMismatch {
            k1: x.k(),
            n1: x.size(),
            k2: y.k(),
            n2: y.size(),
        });
    }
    Ok(())
}

/// `c_{xy}^z`, counted against the canonical representative of `C_z`.
pub fn structure_coefficient(
    x: &ClassType,
    y: &ClassType,
    z: &ClassType,
    budget: &Budget,
) -> Result<BigUint> {
    check_compatible(x, y)?;
    check_compatible(x, z)?;
    structure_coefficient_at(x, y, &representative(z), budget)
}

/// `#{α ∈ C_x : α⁻¹ ω ∈ C_y}` for a given `ω`; equals `c_{xy}^z` for every `ω ∈ C_z`.
pub fn structure_coefficient_at(
    x: &ClassType,
    y: &ClassType,
    omega: &BlockPermutation,
    budget: &Budget,
) -> Result<BigUint> {
    check_compatible(x, y)?;
    if omega.k() != x.k() || omega.n() != x.size() {
        return Err(Error::DimensionMismatch {
            k1: x.k(),
            n1: x.size(),
            k2: omega.k(),
            n2: omega.n(),
        });
    }
    // Every block moved by ω is moved by α or by α⁻¹ω.
    if omega.class_type().moved_blocks() > x.moved_blocks() + y.moved_blocks() {
        return Ok(BigUint::zero());
    }
    let extractor = TypeExtractor::new(x.k());
    let mut count: u64 = 0;
    let _ = for_each_class_element(x, budget, |alpha| {
        let beta = alpha
            .inverse()
            .compose(omega)
            .expect("shapes checked above");
        if extractor.type_of(&beta) == *y {
            count += 1;
        }
        ControlFlow::Continue(())
    })?;
    Ok(BigUint::from(count))
}

/// Full expansion of `C_x C_y` over every class type of the same `n`.
pub fn class_product(x: &ClassType, y: &ClassType, budget: &Budget) -> Result<ClassExpansion> {
    check_compatible(x, y)?;
    let candidates = enumerate_class_types(x.k(), x.size());
    budget.check(&(class_size(x) * BigUint::from(candidates.len())))?;
    let coefficients: Vec<(ClassType, BigUint)> = candidates
        .into_par_iter()
        .map(|z| {
            let c = structure_coefficient(x, y, &z, budget)?;
            Ok((z, c))
        })
        .collect::<Result<Vec<_>>>()?;
    let terms = coefficients
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(ClassExpansion {
        k: x.k(),
        n: x.size(),
        terms,
    })
}

/// `c_{xy}^h(n)` for proper families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperCoefficient {
    pub value: BigUint,
    /// Set when `n` equals the largest of `|x|, |y|, |h|` rather than exceeding it.
    pub at_boundary: bool,
}

pub fn proper_coefficient(
    x: &ProperClassFamily,
    y: &ProperClassFamily,
    h: &ProperClassFamily,
    n: usize,
    budget: &Budget,
) -> Result<ProperCoefficient> {
    let largest = x.size().max(y.size()).max(h.size());
    if n < largest {
        return Err(Error::TooSmall { n, size: largest });
    }
    let value = structure_coefficient(&x.pad(n)?, &y.pad(n)?, &h.pad(n)?, budget)?;
    Ok(ProperCoefficient {
        value,
        at_boundary: n == largest,
    })
}

/// Outcome of fitting `c_{xy}^h(n)` on a minimal set of `n` values and
/// checking the rest.
#[derive(Clone, Debug)]
pub struct PolynomialityReport {
    pub x: ProperClassFamily,
    pub y: ProperClassFamily,
    pub h: ProperClassFamily,
    pub points: Vec<(usize, BigUint)>,
    /// Number of leading points used for the fit.
    pub fit_points: usize,
    pub polynomial: RationalPolynomial,
    /// `|x| + |y| - |h|`.
    pub bound: i64,
    /// The fit reproduces every held-out point exactly.
    pub predicts_holdout: bool,
    /// Coefficients in the basis `(n - |h|)(n - |h| - 1)..`, lowest first.
    pub falling_basis: Vec<BigRational>,
    /// No negative coefficient in the falling-factorial basis.
    pub nonnegative: bool,
    /// No negative coefficient in the monomial basis.
    pub monomial_nonnegative: bool,
    /// `deg ≤ |x| + |y| - |h|`.
    pub weak_bound: bool,
    /// `deg < |x| + |y| - |h|`.
    pub strict_bound: bool,
}

impl PolynomialityReport {
    pub fn degree(&self) -> Option<usize> {
        self.polynomial.degree()
    }

    /// Holdout prediction, nonnegativity and the weak degree bound all hold.
    pub fn passes(&self) -> bool {
        self.predicts_holdout && self.nonnegative && self.weak_bound
    }

    pub fn to_json(&self) -> Value {
        let points: Vec<Value> = self
            .points
            .iter()
            .map(|(n, c)| json!([n, c.to_string()]))
            .collect();
        let rationals =
            |v: &[BigRational]| -> Vec<String> { v.iter().map(|c| c.to_string()).collect() };
        json!({
            "x": self.x.to_string(),
            "y": self.y.to_string(),
            "h": self.h.to_string(),
            "points": points,
            "poly": rationals(self.polynomial.coefficients()),
            "degree": self.degree(),
            "bound": self.bound,
            "fit_points": self.fit_points,
            "predicts_holdout": self.predicts_holdout,
            "falling_basis": rationals(&self.falling_basis),
            "nonnegative": self.nonnegative,
            "monomial_nonnegative": self.monomial_nonnegative,
            "strict_bound": self.strict_bound,
            "weak_bound": self.weak_bound,
        })
    }
}

/// Default sample range: from `max(|x|,|y|,|h|) + 1` through `d + 3` values,
/// where `d = |x| + |y| - |h|` (clamped at 0).
pub fn default_n_range(
    x: &ProperClassFamily,
    y: &ProperClassFamily,
    h: &ProperClassFamily,
) -> std::ops::RangeInclusive<usize> {
    let start = x.size().max(y.size()).max(h.size()) + 1;
    let d = (x.size() + y.size()).saturating_sub(h.size());
    start..=start + d + 2
}

/// Computes `c_{xy}^h(n)` over `n_range`, fits the first `d + 1` values and
/// checks the remaining ones.
pub fn polynomiality_report(
    x: &ProperClassFamily,
    y: &ProperClassFamily,
    h: &ProperClassFamily,
    n_range: Option<std::ops::RangeInclusive<usize>>,
    budget: &Budget,
) -> Result<PolynomialityReport> {
    if x.k() != y.k() || x.k() != h.k() {
        return Err(Error::DimensionMismatch {
            k1: x.k(),
            n1: x.size(),
            k2: if x.k() != y.k() { y.k() } else { h.k() },
            n2: if x.k() != y.k() { y.size() } else { h.size() },
        });
    }
    let range = n_range.unwrap_or_else(|| default_n_range(x, y, h));
    let largest = x.size().max(y.size()).max(h.size());
    if *range.start() <= largest {
        return Err(Error::TooSmall {
            n: *range.start(),
            size: largest + 1,
        });
    }
    let bound = x.size() as i64 + y.size() as i64 - h.size() as i64;
    let fit_points = bound.max(0) as usize + 1;
    let ns: Vec<usize> = range.collect();
    if ns.len() < fit_points + 1 {
        return Err(Error::TooFewPoints {
            needed: fit_points + 1,
            got: ns.len(),
        });
    }

    let values: Vec<BigUint> = ns
        .par_iter()
        .map(|&n| proper_coefficient(x, y, h, n, budget).map(|c| c.value))
        .collect::<Result<Vec<_>>>()?;
    let points: Vec<(usize, BigUint)> = ns.iter().copied().zip(values).collect();
    let as_rational = |(n, c): &(usize, BigUint)| {
        (
            *n as i64,
            BigRational::from_integer(BigInt::from(c.clone())),
        )
    };
    let sample: Vec<(i64, BigRational)> = points.iter().map(as_rational).collect();

    let polynomial = interpolate(&sample[..fit_points])?;
    let predicts_holdout = sample[fit_points..]
        .iter()
        .all(|(n, v)| polynomial.evaluate_at(*n) == *v);
    let falling_basis = polynomial.falling_factorial_coefficients(h.size() as i64);
    let nonnegative = falling_basis.iter().all(|c| !c.is_negative());
    let degree = polynomial.degree().map(|d| d as i64);
    let (weak_bound, strict_bound) = match degree {
        None => (true, true),
        Some(d) => (d <= bound, d < bound),
    };

    Ok(PolynomialityReport {
        x: x.clone(),
        y: y.clone(),
        h: h.clone(),
        points,
        fit_points,
        monomial_nonnegative: polynomial.has_nonnegative_coefficients(),
        polynomial,
        bound,
        predicts_holdout,
        falling_basis,
        nonnegative,
        weak_bound,
        strict_bound,
    })
}
