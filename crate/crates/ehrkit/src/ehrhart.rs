//! Exact rational polynomials and closed-form lattice-point counting
//! polynomials for three polytope families.
//!
//! The families, all cut out of unit cubes by the coordinate sum:
//!
//! * **hypersimplex** `(k, n)`: points of `[0,1]^n` with coordinate sum
//!   exactly `k`, for `1 ≤ k ≤ n−1`; dimension `n−1`.
//! * **half-open hypersimplex** `(k, n)`: points of `[0,1]^{n−1}` with
//!   coordinate sum in `(k−1, k]` — both bounds closed when `k = 1`.
//!   The `n−1` of them tile the unit `(n−1)`-cube without overlap.
//! * **independence polytope** `(k, n)`: points of `[0,1]^n` with
//!   coordinate sum at most `k` — the independence polytope of the uniform
//!   matroid of rank `k` on `n` elements, for `1 ≤ k ≤ n`.
//!
//! The closed forms combine weighted Lah numbers with Eulerian numbers; the
//! [`crate::lattice`] module recovers the same polynomials by brute force,
//! and the test suites hold the two routes together.

use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{eulerian, factorial, weighted_lah, MemoTable};
use crate::error::DomainError;

/// Sign of a rational coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    /// Sign of the given rational.
    pub fn of(value: &BigRational) -> Sign {
        if value.is_zero() {
            Sign::Zero
        } else if value.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// A polynomial with exact rational coefficients, stored dense from the
/// constant term up. Canonical form: trailing zero coefficients are
/// trimmed, but at least one coefficient is always present, so the zero
/// polynomial is `[0]` with degree 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    coeffs: Vec<BigRational>,
}

impl EhrhartPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        EhrhartPolynomial {
            coeffs: vec![BigRational::zero()],
        }
    }

    /// Builds a polynomial from coefficients (constant term first),
    /// trimming trailing zeros into canonical form.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        EhrhartPolynomial { coeffs }
    }

    /// The coefficients, constant term first; never empty.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `t^degree`, zero beyond the stored length.
    pub fn coeff(&self, degree: usize) -> BigRational {
        self.coeffs
            .get(degree)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Degree of the canonical form (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// The highest stored coefficient.
    pub fn leading_coefficient(&self) -> &BigRational {
        self.coeffs.last().expect("canonical form is nonempty")
    }

    /// The polynomial multiplied by a rational factor.
    pub fn scale(&self, factor: &BigRational) -> Self {
        EhrhartPolynomial::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Exact evaluation at a rational point (Horner scheme).
    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Exact evaluation at a nonnegative integer point.
    pub fn eval_integer(&self, t: u64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(t)))
    }

    /// Evaluation at an integer point, as a count: `Some` exactly when the
    /// value is a nonnegative integer.
    pub fn eval_count(&self, t: u64) -> Option<BigUint> {
        let value = self.eval_integer(t);
        if value.is_integer() && !value.is_negative() {
            value.to_integer().try_into().ok()
        } else {
            None
        }
    }
}

impl Add for &EhrhartPolynomial {
    type Output = EhrhartPolynomial;

    fn add(self, other: &EhrhartPolynomial) -> EhrhartPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        EhrhartPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }
}

impl Sub for &EhrhartPolynomial {
    type Output = EhrhartPolynomial;

    fn sub(self, other: &EhrhartPolynomial) -> EhrhartPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        EhrhartPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }
}

impl fmt::Display for EhrhartPolynomial {
    /// Renders like `1 + 3/2 t + 1/2 t^2`, skipping zero terms; the zero
    /// polynomial renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut written = false;
        for (degree, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if written {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let magnitude = c.abs();
            match degree {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude} ")?;
                    }
                    if degree == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{degree}")?;
                    }
                }
            }
            written = true;
        }
        if !written {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Identifies a hypersimplex slice of the unit cube, closed or half-open;
/// valid for `1 ≤ k ≤ n−1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HypersimplexId {
    k: u64,
    n: u64,
    half_open: bool,
}

impl HypersimplexId {
    fn validate(k: u64, n: u64) -> Result<(), DomainError> {
        if k < 1 || k >= n {
            return Err(DomainError::new(format!(
                "hypersimplex slice requires 1 <= k <= n-1, got k={k}, n={n}"
            )));
        }
        Ok(())
    }

    /// The closed slice: coordinate sum exactly `k` in `[0,1]^n`.
    pub fn closed(k: u64, n: u64) -> Result<Self, DomainError> {
        Self::validate(k, n)?;
        Ok(HypersimplexId {
            k,
            n,
            half_open: false,
        })
    }

    /// The half-open slice: coordinate sum in `(k−1, k]` inside
    /// `[0,1]^{n−1}` (closed at both ends when `k = 1`).
    pub fn half_open(k: u64, n: u64) -> Result<Self, DomainError> {
        Self::validate(k, n)?;
        Ok(HypersimplexId {
            k,
            n,
            half_open: true,
        })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn is_half_open(&self) -> bool {
        self.half_open
    }

    /// Dimension of the ambient space the slice is embedded in: `n` for the
    /// closed slice (which spans a hyperplane), `n−1` for the half-open one.
    pub fn ambient_dim(&self) -> usize {
        if self.half_open {
            (self.n - 1) as usize
        } else {
            self.n as usize
        }
    }

    /// Degree of the counting polynomial: both variants are
    /// `(n−1)`-dimensional bodies.
    pub fn degree(&self) -> usize {
        (self.n - 1) as usize
    }
}

/// Identifies the uniform matroid of rank `k` on `n ≥ 1` elements,
/// `0 ≤ k ≤ n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UniformMatroidId {
    k: u64,
    n: u64,
}

impl UniformMatroidId {
    pub fn new(k: u64, n: u64) -> Result<Self, DomainError> {
        if n < 1 {
            return Err(DomainError::new("uniform matroid needs a nonempty ground set"));
        }
        if k > n {
            return Err(DomainError::new(format!(
                "uniform matroid rank must satisfy k <= n, got k={k}, n={n}"
            )));
        }
        Ok(UniformMatroidId { k, n })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Ambient dimension of the independence polytope.
    pub fn ambient_dim(&self) -> usize {
        self.n as usize
    }
}

/// Coefficient of `t^m` in the hypersimplex counting polynomial, using a
/// caller-provided memo table for the weighted Lah numbers.
///
/// For `1 ≤ m ≤ n−1` this is
/// `(Σ_{l=0}^{k−1} W(l, n, m+1) · A(m, k−1−l)) / (n−1)!`; the constant
/// coefficient (`m = 0`) is 1. Every coefficient is strictly positive.
pub fn hypersimplex_coefficient_with(
    k: u64,
    n: u64,
    m: u64,
    memo: &MemoTable,
) -> Result<BigRational, DomainError> {
    HypersimplexId::validate(k, n)?;
    if m >= n {
        return Err(DomainError::new(format!(
            "coefficient degree must satisfy m <= n-1, got m={m}, n={n}"
        )));
    }
    if m == 0 {
        return Ok(BigRational::one());
    }
    let mut numer = BigUint::zero();
    for l in 0..k as i64 {
        let w = weighted_lah(l, n, m + 1, memo);
        if !w.is_zero() {
            numer += w * eulerian(m, k as i64 - 1 - l);
        }
    }
    Ok(BigRational::new(
        BigInt::from(numer),
        BigInt::from(factorial(n - 1)),
    ))
}

/// Coefficient of `t^m` in the hypersimplex counting polynomial.
pub fn hypersimplex_coefficient(k: u64, n: u64, m: u64) -> Result<BigRational, DomainError> {
    hypersimplex_coefficient_with(k, n, m, &MemoTable::new())
}

/// Counting polynomial of the hypersimplex `(k, n)`: the number of integer
/// points of the `t`-th dilate, as a polynomial in `t` of degree `n−1` with
/// constant term 1, using a caller-provided memo table.
pub fn hypersimplex_ehrhart_with(
    k: u64,
    n: u64,
    memo: &MemoTable,
) -> Result<EhrhartPolynomial, DomainError> {
    HypersimplexId::validate(k, n)?;
    let mut coeffs = Vec::with_capacity(n as usize);
    for m in 0..n {
        coeffs.push(hypersimplex_coefficient_with(k, n, m, memo)?);
    }
    Ok(EhrhartPolynomial::from_coeffs(coeffs))
}

/// Counting polynomial of the hypersimplex `(k, n)`.
pub fn hypersimplex_ehrhart(k: u64, n: u64) -> Result<EhrhartPolynomial, DomainError> {
    hypersimplex_ehrhart_with(k, n, &MemoTable::new())
}

/// Counting polynomial of the half-open hypersimplex `(k, n)`, using a
/// caller-provided memo table.
///
/// For `k = 1` this equals the closed polynomial; for `k ≥ 2` it is the
/// difference `closed(k, n) − closed(k−1, n−1)`, which removes exactly the
/// points on the closed lower face. Constant term 1 for `k = 1`, else 0;
/// all higher coefficients are strictly positive.
pub fn half_open_ehrhart_with(
    k: u64,
    n: u64,
    memo: &MemoTable,
) -> Result<EhrhartPolynomial, DomainError> {
    HypersimplexId::half_open(k, n)?;
    if k == 1 {
        return hypersimplex_ehrhart_with(1, n, memo);
    }
    let closed = hypersimplex_ehrhart_with(k, n, memo)?;
    let lower_face = hypersimplex_ehrhart_with(k - 1, n - 1, memo)?;
    Ok(&closed - &lower_face)
}

/// Counting polynomial of the half-open hypersimplex `(k, n)`.
pub fn half_open_ehrhart(k: u64, n: u64) -> Result<EhrhartPolynomial, DomainError> {
    half_open_ehrhart_with(k, n, &MemoTable::new())
}

/// Counting polynomial of the independence polytope of the uniform matroid
/// of rank `k ≥ 1` on `n` elements, using a caller-provided memo table.
///
/// The sum-at-most-`k` region of `[0,1]^n` is tiled by the half-open slices
/// `1..=k` of the unit `n`-cube (ground set parameter `n+1`), so the
/// polynomial is the sum of their counting polynomials.
pub fn independence_ehrhart_with(
    k: u64,
    n: u64,
    memo: &MemoTable,
) -> Result<EhrhartPolynomial, DomainError> {
    UniformMatroidId::new(k, n)?;
    if k < 1 {
        return Err(DomainError::new(
            "independence counting needs rank k >= 1 (rank 0 leaves only the origin)",
        ));
    }
    let mut acc = EhrhartPolynomial::zero();
    for j in 1..=k {
        acc = &acc + &half_open_ehrhart_with(j, n + 1, memo)?;
    }
    Ok(acc)
}

/// Counting polynomial of the uniform-matroid independence polytope.
pub fn independence_ehrhart(k: u64, n: u64) -> Result<EhrhartPolynomial, DomainError> {
    independence_ehrhart_with(k, n, &MemoTable::new())
}

/// Sign of every coefficient, constant term first: `(degree, sign)` pairs.
pub fn positivity_report(p: &EhrhartPolynomial) -> Vec<(usize, Sign)> {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(degree, c)| (degree, Sign::of(c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;
    use proptest::prelude::*;

    fn rat(numer: i64, denom: i64) -> BigRational {
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn poly(entries: &[(i64, i64)]) -> EhrhartPolynomial {
        EhrhartPolynomial::from_coeffs(entries.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        let p = poly(&[(1, 1), (2, 1), (0, 1), (0, 1)]);
        assert_eq!(p.degree(), 1);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(p.coeff(5), rat(0, 1));

        let z = EhrhartPolynomial::from_coeffs(vec![]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), 0);
        assert_eq!(z, EhrhartPolynomial::zero());
    }

    #[test]
    fn arithmetic_on_small_polynomials() {
        let p = poly(&[(1, 1), (3, 2), (1, 2)]);
        let q = poly(&[(0, 1), (1, 2), (1, 2)]);
        assert_eq!(&p - &q, poly(&[(1, 1), (1, 1)]));
        assert_eq!(&p + &q, poly(&[(1, 1), (2, 1), (1, 1)]));
        assert_eq!(p.scale(&rat(2, 1)), poly(&[(2, 1), (3, 1), (1, 1)]));
        assert_eq!(p.eval_integer(2), rat(6, 1));
        assert_eq!(p.eval(&rat(1, 2)), rat(15, 8));
        assert_eq!(p.eval_count(3), Some(BigUint::from(10u32)));
        assert_eq!(poly(&[(1, 2)]).eval_count(1), None, "not an integer");
    }

    #[test]
    fn display_formats_readably() {
        assert_eq!(poly(&[(1, 1), (3, 2), (1, 2)]).to_string(), "1 + 3/2 t + 1/2 t^2");
        assert_eq!(poly(&[(0, 1), (1, 2), (1, 2)]).to_string(), "1/2 t + 1/2 t^2");
        assert_eq!(poly(&[(1, 1), (1, 1)]).to_string(), "1 + t");
        assert_eq!(poly(&[(1, 1), (-1, 2)]).to_string(), "1 - 1/2 t");
        assert_eq!(poly(&[(-1, 1), (1, 1)]).to_string(), "-1 + t");
        assert_eq!(EhrhartPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn identifier_validation() {
        assert!(HypersimplexId::closed(1, 2).is_ok());
        assert!(HypersimplexId::closed(0, 4).is_err());
        assert!(HypersimplexId::closed(4, 4).is_err());
        assert!(HypersimplexId::half_open(5, 4).is_err());
        assert_eq!(HypersimplexId::closed(2, 5).unwrap().ambient_dim(), 5);
        assert_eq!(HypersimplexId::half_open(2, 5).unwrap().ambient_dim(), 4);
        assert_eq!(HypersimplexId::closed(2, 5).unwrap().degree(), 4);

        assert!(UniformMatroidId::new(0, 3).is_ok());
        assert!(UniformMatroidId::new(4, 3).is_err());
        assert!(UniformMatroidId::new(0, 0).is_err());
        assert_eq!(UniformMatroidId::new(2, 3).unwrap().ambient_dim(), 3);
    }

    #[test]
    fn hypersimplex_known_polynomials() {
        assert_eq!(
            hypersimplex_ehrhart(1, 3).unwrap(),
            poly(&[(1, 1), (3, 2), (1, 2)])
        );
        assert_eq!(
            hypersimplex_ehrhart(2, 4).unwrap(),
            poly(&[(1, 1), (7, 3), (2, 1), (2, 3)]),
            "the octahedron slice of the 4-cube"
        );
        assert_eq!(
            hypersimplex_ehrhart(2, 5).unwrap(),
            poly(&[(1, 1), (35, 12), (85, 24), (25, 12), (11, 24)])
        );
        assert_eq!(hypersimplex_ehrhart(1, 2).unwrap(), poly(&[(1, 1), (1, 1)]));
    }

    #[test]
    fn hypersimplex_domain_errors() {
        assert!(hypersimplex_ehrhart(0, 4).is_err());
        assert!(hypersimplex_ehrhart(4, 4).is_err());
        assert!(hypersimplex_coefficient(2, 4, 4).is_err());
        assert_eq!(hypersimplex_coefficient(2, 4, 0).unwrap(), rat(1, 1));
        assert_eq!(hypersimplex_coefficient(2, 4, 3).unwrap(), rat(2, 3));
    }

    #[test]
    fn hypersimplex_reflection_symmetry() {
        // Swapping each coordinate x for 1-x maps the slice at k to the
        // slice at n-k, so the polynomials agree coefficient by coefficient.
        let memo = MemoTable::new();
        for n in 2..=9u64 {
            for k in 1..n {
                assert_eq!(
                    hypersimplex_ehrhart_with(k, n, &memo).unwrap(),
                    hypersimplex_ehrhart_with(n - k, n, &memo).unwrap(),
                    "(k, n) = ({k}, {n})"
                );
            }
        }
    }

    #[test]
    fn hypersimplex_at_dilation_one_counts_cube_vertices() {
        // The only lattice points of the unit slice are the 0/1 vectors
        // with exactly k ones.
        let memo = MemoTable::new();
        for n in 2..=8u64 {
            for k in 1..n {
                let p = hypersimplex_ehrhart_with(k, n, &memo).unwrap();
                assert_eq!(p.eval_count(1), Some(binomial(n, k)), "(k, n) = ({k}, {n})");
            }
        }
    }

    #[test]
    fn half_open_known_polynomials() {
        assert_eq!(
            half_open_ehrhart(2, 3).unwrap(),
            poly(&[(0, 1), (1, 2), (1, 2)])
        );
        assert_eq!(
            half_open_ehrhart(1, 4).unwrap(),
            hypersimplex_ehrhart(1, 4).unwrap(),
            "k = 1 keeps the closed simplex"
        );
        assert_eq!(
            half_open_ehrhart(2, 5).unwrap(),
            poly(&[(0, 1), (13, 12), (61, 24), (23, 12), (11, 24)])
        );
        assert_eq!(
            half_open_ehrhart(2, 5).unwrap().eval_count(1),
            Some(BigUint::from(6u32))
        );
    }

    #[test]
    fn half_open_constant_terms() {
        let memo = MemoTable::new();
        for n in 2..=9u64 {
            for k in 1..n {
                let p = half_open_ehrhart_with(k, n, &memo).unwrap();
                let expect = if k == 1 { rat(1, 1) } else { rat(0, 1) };
                assert_eq!(p.coeff(0), expect, "(k, n) = ({k}, {n})");
            }
        }
    }

    #[test]
    fn half_open_slices_tile_the_cube() {
        // Summing the n-1 half-open slices of the unit (n-1)-cube must give
        // the cube's own counting polynomial (t+1)^{n-1}.
        let memo = MemoTable::new();
        for n in 2..=7u64 {
            let mut acc = EhrhartPolynomial::zero();
            for k in 1..n {
                acc = &acc + &half_open_ehrhart_with(k, n, &memo).unwrap();
            }
            let cube = EhrhartPolynomial::from_coeffs(
                (0..n)
                    .map(|m| BigRational::from_integer(BigInt::from(binomial(n - 1, m))))
                    .collect(),
            );
            assert_eq!(acc, cube, "n = {n}");
        }
    }

    #[test]
    fn independence_known_polynomials() {
        assert_eq!(
            independence_ehrhart(3, 3).unwrap(),
            poly(&[(1, 1), (3, 1), (3, 1), (1, 1)]),
            "full rank fills the whole cube"
        );
        assert_eq!(
            independence_ehrhart(1, 3).unwrap(),
            poly(&[(1, 1), (11, 6), (1, 1), (1, 6)])
        );
        assert_eq!(
            independence_ehrhart(2, 4).unwrap(),
            poly(&[(1, 1), (19, 6), (4, 1), (7, 3), (1, 2)])
        );
        assert_eq!(
            independence_ehrhart(1, 3).unwrap().eval_count(2),
            Some(BigUint::from(10u32))
        );
    }

    #[test]
    fn independence_domain_errors() {
        assert!(independence_ehrhart(0, 3).is_err());
        assert!(independence_ehrhart(4, 3).is_err());
        assert!(independence_ehrhart(1, 0).is_err());
    }

    #[test]
    fn independence_at_dilation_one_counts_small_supports() {
        // Lattice points of the unit polytope are the 0/1 vectors with at
        // most k ones.
        let memo = MemoTable::new();
        for n in 1..=8u64 {
            for k in 1..=n {
                let p = independence_ehrhart_with(k, n, &memo).unwrap();
                let expect: BigUint = (0..=k).map(|j| binomial(n, j)).sum();
                assert_eq!(p.eval_count(1), Some(expect), "(k, n) = ({k}, {n})");
            }
        }
    }

    #[test]
    fn coefficients_grow_strictly_across_slices() {
        // Removing the lower closed face leaves something positive in every
        // degree: the (k, n) coefficient strictly dominates the (k-1, n-1)
        // one wherever both are defined.
        let memo = MemoTable::new();
        for n in 4..=12u64 {
            for k in 2..=n - 2 {
                for m in 1..=n - 2 {
                    let large = hypersimplex_coefficient_with(k, n, m, &memo).unwrap();
                    let small = hypersimplex_coefficient_with(k - 1, n - 1, m, &memo).unwrap();
                    assert!(large > small, "(k, n, m) = ({k}, {n}, {m})");
                }
            }
        }
    }

    #[test]
    fn evaluations_of_counting_polynomials_are_integers() {
        let memo = MemoTable::new();
        for n in 2..=8u64 {
            for k in 1..n {
                let closed = hypersimplex_ehrhart_with(k, n, &memo).unwrap();
                let open = half_open_ehrhart_with(k, n, &memo).unwrap();
                let ind = independence_ehrhart_with(k, n, &memo).unwrap();
                for t in 0..=2 * n {
                    for p in [&closed, &open, &ind] {
                        assert!(
                            p.eval_count(t).is_some(),
                            "non-integer value at t = {t} for (k, n) = ({k}, {n})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn positivity_report_flags_each_coefficient() {
        let p = hypersimplex_ehrhart(2, 4).unwrap();
        let report = positivity_report(&p);
        assert_eq!(report.len(), 4);
        assert!(report.iter().all(|&(_, s)| s == Sign::Positive));

        let h = half_open_ehrhart(2, 5).unwrap();
        let report = positivity_report(&h);
        assert_eq!(report[0], (0, Sign::Zero));
        assert!(report[1..].iter().all(|&(_, s)| s == Sign::Positive));

        let mixed = poly(&[(1, 1), (-2, 1)]);
        assert_eq!(
            positivity_report(&mixed),
            vec![(0, Sign::Positive), (1, Sign::Negative)]
        );
    }

    fn arb_poly() -> impl Strategy<Value = EhrhartPolynomial> {
        proptest::collection::vec((-20i64..20, 1i64..8), 0..6)
            .prop_map(|entries| {
                EhrhartPolynomial::from_coeffs(
                    entries.into_iter().map(|(p, q)| rat(p, q)).collect(),
                )
            })
    }

    proptest! {
        #[test]
        fn add_then_subtract_round_trips(p in arb_poly(), q in arb_poly()) {
            let sum = &p + &q;
            prop_assert_eq!(&sum - &q, p);
        }

        #[test]
        fn evaluation_is_additive(p in arb_poly(), q in arb_poly(), t in 0u64..30) {
            let sum = &p + &q;
            prop_assert_eq!(sum.eval_integer(t), p.eval_integer(t) + q.eval_integer(t));
        }

        #[test]
        fn scaling_scales_values(p in arb_poly(), t in 0u64..30, num in -9i64..9, den in 1i64..9) {
            let factor = rat(num, den);
            prop_assert_eq!(
                p.scale(&factor).eval_integer(t),
                p.eval_integer(t) * &factor
            );
        }
    }
}
