//! Brute-force integer-point counting over rational H-polytopes (with
//! strict or weak inequalities) and exact interpolation of counting series.
//!
//! This module is the independent second route to every polynomial the
//! closed forms in [`crate::ehrhart`] produce: enumerate the integer points
//! of the first few dilates directly, then recover the polynomial by exact
//! Lagrange interpolation. Nothing here shares code with the closed forms,
//! which is the point.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::ehrhart::{EhrhartPolynomial, HypersimplexId, UniformMatroidId};
use crate::error::DomainError;

/// Default ceiling on the number of candidate points one count may sweep.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Comparison relation of a linear constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Lt,
    Eq,
    Ge,
    Gt,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Gt => ">",
        };
        f.write_str(s)
    }
}

/// One rational constraint `coeffs · x  R  bound`.
///
/// Dilating the polytope by `t` scales only the bound: the `t`-th dilate
/// satisfies `coeffs · x  R  t · bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub bound: BigRational,
}

impl LinearConstraint {
    /// Constraint `x_0 + … + x_{dim-1}  R  bound` on the coordinate sum.
    pub fn coordinate_sum(dim: usize, relation: Relation, bound: u64) -> Self {
        LinearConstraint {
            coeffs: vec![BigRational::one(); dim],
            relation,
            bound: BigRational::from_integer(BigInt::from(bound)),
        }
    }
}

/// A bounded region of the nonnegative orthant: the integer box
/// `0 ≤ x_i ≤ box_upper[i]` intersected with rational constraints. The box
/// scales with dilation exactly like the constraints do.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolytope {
    dim: usize,
    box_upper: Vec<u64>,
    constraints: Vec<LinearConstraint>,
}

impl HPolytope {
    /// Builds a polytope description, checking constraint arity.
    pub fn new(box_upper: Vec<u64>, constraints: Vec<LinearConstraint>) -> Result<Self, DomainError> {
        let dim = box_upper.len();
        for (i, c) in constraints.iter().enumerate() {
            if c.coeffs.len() != dim {
                return Err(DomainError::new(format!(
                    "constraint {i} has {} coefficients in dimension {dim}",
                    c.coeffs.len()
                )));
            }
        }
        Ok(HPolytope {
            dim,
            box_upper,
            constraints,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn box_upper(&self) -> &[u64] {
        &self.box_upper
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }
}

/// The hypersimplex `(k, n)` as an H-polytope: unit `n`-cube sliced at
/// coordinate sum exactly `k`.
pub fn build_hypersimplex(k: u64, n: u64) -> Result<HPolytope, DomainError> {
    HypersimplexId::closed(k, n)?;
    let dim = n as usize;
    HPolytope::new(
        vec![1; dim],
        vec![LinearConstraint::coordinate_sum(dim, Relation::Eq, k)],
    )
}

/// The half-open hypersimplex `(k, n)` as an H-polytope in the unit
/// `(n−1)`-cube: coordinate sum in `(k−1, k]`, closed at both ends for
/// `k = 1`.
pub fn build_half_open(k: u64, n: u64) -> Result<HPolytope, DomainError> {
    HypersimplexId::half_open(k, n)?;
    let dim = (n - 1) as usize;
    let mut constraints = vec![LinearConstraint::coordinate_sum(dim, Relation::Le, k)];
    if k >= 2 {
        constraints.push(LinearConstraint::coordinate_sum(dim, Relation::Gt, k - 1));
    }
    HPolytope::new(vec![1; dim], constraints)
}

/// The independence polytope of the uniform matroid `(k, n)` as an
/// H-polytope: unit `n`-cube with coordinate sum at most `k`, `k ≥ 1`.
pub fn build_independence(k: u64, n: u64) -> Result<HPolytope, DomainError> {
    UniformMatroidId::new(k, n)?;
    if k < 1 {
        return Err(DomainError::new(
            "independence enumeration needs rank k >= 1",
        ));
    }
    let dim = n as usize;
    HPolytope::new(
        vec![1; dim],
        vec![LinearConstraint::coordinate_sum(dim, Relation::Le, k)],
    )
}

/// Enumeration refused or failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    /// The candidate box of the requested dilate holds more points than the
    /// sweep budget allows.
    #[error(
        "counting budget exceeded: {candidates} candidate points in dimension {dim} \
         at dilation {t} (budget {budget})"
    )]
    BudgetExceeded {
        candidates: BigUint,
        budget: u64,
        dim: usize,
        t: u64,
    },
    /// The requested family parameters are out of range.
    #[error(transparent)]
    Domain(#[from] DomainError),
}

/// A constraint scaled to integers for the `t`-th dilate, with per-depth
/// bounds on what the not-yet-fixed coordinates can still contribute.
struct ScaledConstraint {
    coeffs: Vec<BigInt>,
    bound: BigInt,
    relation: Relation,
    suffix_min: Vec<BigInt>,
    suffix_max: Vec<BigInt>,
}

impl ScaledConstraint {
    fn build(c: &LinearConstraint, t: u64, caps: &[u64]) -> Self {
        let mut denom_lcm = BigInt::one();
        for q in c.coeffs.iter().chain(std::iter::once(&c.bound)) {
            denom_lcm = denom_lcm.lcm(q.denom());
        }
        let coeffs: Vec<BigInt> = c
            .coeffs
            .iter()
            .map(|q| (q * &denom_lcm).to_integer())
            .collect();
        let bound = (&c.bound * &denom_lcm).to_integer() * t;
        let dim = caps.len();
        let mut suffix_min = vec![BigInt::zero(); dim + 1];
        let mut suffix_max = vec![BigInt::zero(); dim + 1];
        for i in (0..dim).rev() {
            let reach = &coeffs[i] * caps[i];
            let (lo, hi) = if reach.is_negative() {
                (reach.clone(), BigInt::zero())
            } else {
                (BigInt::zero(), reach.clone())
            };
            suffix_min[i] = &suffix_min[i + 1] + lo;
            suffix_max[i] = &suffix_max[i + 1] + hi;
        }
        ScaledConstraint {
            coeffs,
            bound,
            relation: c.relation,
            suffix_min,
            suffix_max,
        }
    }

    /// Whether any completion of the first `depth` coordinates (whose
    /// contribution is `partial`) can still satisfy the constraint.
    fn feasible(&self, depth: usize, partial: &BigInt) -> bool {
        let lo = partial + &self.suffix_min[depth];
        let hi = partial + &self.suffix_max[depth];
        match self.relation {
            Relation::Le => lo <= self.bound,
            Relation::Lt => lo < self.bound,
            Relation::Ge => hi >= self.bound,
            Relation::Gt => hi > self.bound,
            Relation::Eq => lo <= self.bound && hi >= self.bound,
        }
    }
}

fn count_rec(caps: &[u64], cs: &[ScaledConstraint], depth: usize, partials: &mut [BigInt]) -> BigUint {
    for (c, p) in cs.iter().zip(partials.iter()) {
        if !c.feasible(depth, p) {
            return BigUint::zero();
        }
    }
    if depth == caps.len() {
        return BigUint::one();
    }
    let saved: Vec<BigInt> = partials.to_vec();
    let mut total = BigUint::zero();
    for _ in 0..=caps[depth] {
        total += count_rec(caps, cs, depth + 1, partials);
        for (c, p) in cs.iter().zip(partials.iter_mut()) {
            *p += &c.coeffs[depth];
        }
    }
    partials.clone_from_slice(&saved);
    total
}

/// Counts the integer points of the `t`-th dilate of `p` by interval-pruned
/// sweep over the dilated box, in parallel over the first coordinate.
///
/// Refuses with [`CountError::BudgetExceeded`] when the dilated box holds
/// more than `budget` candidate points. The `t = 0` dilate degenerates to
/// the origin with every constraint read as `0 R 0`, which yields exactly
/// the counting polynomial's constant term.
pub fn count_points(p: &HPolytope, t: u64, budget: u64) -> Result<BigUint, CountError> {
    let caps: Vec<u64> = p.box_upper.iter().map(|&u| u.saturating_mul(t)).collect();
    let mut candidates = BigUint::one();
    for &c in &caps {
        candidates *= BigUint::from(c) + 1u32;
    }
    if candidates > BigUint::from(budget) {
        return Err(CountError::BudgetExceeded {
            candidates,
            budget,
            dim: p.dim,
            t,
        });
    }
    let cs: Vec<ScaledConstraint> = p
        .constraints
        .iter()
        .map(|c| ScaledConstraint::build(c, t, &caps))
        .collect();
    if caps.is_empty() {
        let ok = cs.iter().all(|c| c.feasible(0, &BigInt::zero()));
        return Ok(if ok { BigUint::one() } else { BigUint::zero() });
    }
    let total = (0..=caps[0])
        .into_par_iter()
        .map(|x0| {
            let mut partials: Vec<BigInt> = cs.iter().map(|c| &c.coeffs[0] * x0).collect();
            count_rec(&caps, &cs, 1, &mut partials)
        })
        .reduce(BigUint::zero, |a, b| a + b);
    Ok(total)
}

/// Integer-point counts of the dilates `t = 0, 1, …` of one polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSeries {
    values: Vec<BigUint>,
}

impl CountSeries {
    /// Wraps counts for consecutive dilations starting at `t = 0`.
    pub fn new(values: Vec<BigUint>) -> Self {
        CountSeries { values }
    }

    /// The counts, indexed by dilation.
    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

/// Multiplies `poly` by the linear factor `(x + shift)`.
fn mul_linear(poly: &[BigRational], shift: &BigInt) -> Vec<BigRational> {
    let shift = BigRational::from_integer(shift.clone());
    let mut out = vec![BigRational::zero(); poly.len() + 1];
    for (i, c) in poly.iter().enumerate() {
        out[i + 1] += c;
        out[i] += c * &shift;
    }
    out
}

/// Recovers the unique polynomial of degree `< series.len()` through the
/// points `(t, series[t])` for `t = 0, …, len−1`, by exact Lagrange
/// interpolation.
///
/// Panics if the series is empty.
pub fn interpolate(series: &CountSeries) -> EhrhartPolynomial {
    let values = series.values();
    assert!(!values.is_empty(), "interpolation needs at least one sample");
    let d = values.len() - 1;
    let mut acc = vec![BigRational::zero(); d + 1];
    for (j, yj) in values.iter().enumerate() {
        if yj.is_zero() {
            continue;
        }
        let mut basis = vec![BigRational::one()];
        let mut denom = BigInt::one();
        for i in 0..=d {
            if i == j {
                continue;
            }
            basis = mul_linear(&basis, &-BigInt::from(i));
            denom *= BigInt::from(j as i64 - i as i64);
        }
        let scale = BigRational::new(BigInt::from(yj.clone()), denom);
        for (slot, c) in acc.iter_mut().zip(basis.iter()) {
            *slot += c * &scale;
        }
    }
    EhrhartPolynomial::from_coeffs(acc)
}

/// Counting polynomial of `p` obtained purely by enumeration: counts the
/// dilates `t = 0..=degree_bound` and interpolates. Exact whenever the true
/// counting polynomial has degree at most `degree_bound`.
pub fn oracle_ehrhart(
    p: &HPolytope,
    degree_bound: usize,
    budget: u64,
) -> Result<EhrhartPolynomial, CountError> {
    let mut values = Vec::with_capacity(degree_bound + 1);
    for t in 0..=degree_bound as u64 {
        values.push(count_points(p, t, budget)?);
    }
    Ok(interpolate(&CountSeries::new(values)))
}

/// Buckets the integer points of `[0, t]^n` with coordinate sum at most
/// `t·k` by the sum layer `⌈sum / t⌉` (the origin and, for `t = 0`, the
/// whole count land in layer 1). Returns `k` bucket counts, layer 1 first.
///
/// Layer `j` is exactly the `t`-th dilate of the half-open slice `(j, n+1)`
/// of the unit `n`-cube, so this histogram witnesses that the slices tile
/// the sum-at-most-`k` region with neither gaps nor overlaps.
pub fn layer_histogram(k: u64, n: u64, t: u64, budget: u64) -> Result<Vec<BigUint>, CountError> {
    UniformMatroidId::new(k, n)?;
    if k < 1 {
        return Err(DomainError::new("layer histogram needs rank k >= 1").into());
    }
    let dim = n as usize;
    let mut candidates = BigUint::one();
    for _ in 0..dim {
        candidates *= BigUint::from(t) + 1u32;
    }
    if candidates > BigUint::from(budget) {
        return Err(CountError::BudgetExceeded {
            candidates,
            budget,
            dim,
            t,
        });
    }
    let cap_sum = t.saturating_mul(k);
    fn rec(dim: usize, t: u64, cap_sum: u64, depth: usize, sum: u64, buckets: &mut [u64]) {
        if sum > cap_sum {
            return;
        }
        if depth == dim {
            let layer = if sum == 0 { 1 } else { sum.div_ceil(t) };
            buckets[(layer - 1) as usize] += 1;
            return;
        }
        for x in 0..=t {
            rec(dim, t, cap_sum, depth + 1, sum + x, buckets);
        }
    }
    // n >= 1 is guaranteed, so the sweep can parallelize over the first
    // coordinate like `count_points` does.
    let merged = (0..=t)
        .into_par_iter()
        .map(|x0| {
            let mut buckets = vec![0u64; k as usize];
            rec(dim, t, cap_sum, 1, x0, &mut buckets);
            buckets
        })
        .reduce(
            || vec![0u64; k as usize],
            |mut a, b| {
                for (slot, v) in a.iter_mut().zip(b) {
                    *slot += v;
                }
                a
            },
        );
    Ok(merged.into_iter().map(BigUint::from).collect())
}
