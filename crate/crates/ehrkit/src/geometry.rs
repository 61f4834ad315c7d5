//! Vertex and edge structure of uniform-matroid independence polytopes,
//! verified exactly at small scale.
//!
//! The vertices of the rank-`k` independence polytope on `n` elements are
//! the 0/1 indicator vectors with at most `k` ones; the lifted variant
//! appends the corank `k − (number of ones)` as an extra coordinate, which
//! realizes the polytope as a generalized permutohedron. A pair of
//! vertices spans an edge exactly when its midpoint cannot be written as a
//! convex combination of the remaining vertices; for the 0/1 vertex sets
//! handled here that criterion is exact, and it is decided by an exact
//! rational LP, so there is no numerical tolerance anywhere. Hard scale
//! guards keep the all-pairs sweep small.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::ehrhart::UniformMatroidId;
use crate::error::DomainError;

/// Hard limits for the all-pairs edge sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeometryConfig {
    /// Largest ground-set size accepted by the vertex enumerators.
    pub max_ground_set: u64,
    /// Largest vertex count accepted by the edge tests.
    pub max_vertices: usize,
}

impl Default for GeometryConfig {
    fn default() -> Self {
        GeometryConfig {
            max_ground_set: 6,
            max_vertices: 64,
        }
    }
}

/// Refusal of a geometry computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    /// A scale guard tripped; the computation would be too large.
    #[error("scale guard: {0}")]
    Scale(String),
    /// The requested parameters are out of range.
    #[error(transparent)]
    Domain(#[from] DomainError),
}

/// A 0/1 vertex of an independence polytope.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex01 {
    coords: Vec<u8>,
}

impl Vertex01 {
    /// The 0/1 coordinates.
    pub fn coords(&self) -> &[u8] {
        &self.coords
    }

    /// Number of ones (the size of the indicated subset).
    pub fn ones(&self) -> u64 {
        self.coords.iter().filter(|&&c| c == 1).count() as u64
    }

    /// The vertex as an exact rational point.
    pub fn to_rational(&self) -> Vec<BigRational> {
        self.coords
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect()
    }
}

/// A vertex of the lifted independence polytope: the 0/1 indicator with the
/// corank appended as a final coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LiftedVertex {
    coords: Vec<u8>,
    corank: u64,
}

impl LiftedVertex {
    /// The 0/1 part of the coordinates.
    pub fn coords(&self) -> &[u8] {
        &self.coords
    }

    /// The appended corank coordinate `k − ones`.
    pub fn corank(&self) -> u64 {
        self.corank
    }

    /// The vertex as an exact rational point (corank last).
    pub fn to_rational(&self) -> Vec<BigRational> {
        let mut out: Vec<BigRational> = self
            .coords
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        out.push(BigRational::from_integer(BigInt::from(self.corank)));
        out
    }
}

/// Direction class of an edge, read off the difference of its endpoints
/// (larger endpoint minus smaller, in lexicographic order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeDirection {
    /// `e_plus − e_minus`: swapping one element for another.
    Diff { plus: usize, minus: usize },
    /// `e_i`: adding element `i`.
    Plus(usize),
    /// `−e_i`: removing element `i`.
    Minus(usize),
    /// `(e_plus − e_minus, 0)` in the lifted polytope.
    LiftedDiff { plus: usize, minus: usize },
    /// `(e_i, −1)` in the lifted polytope: adding element `i` drops the
    /// corank by one.
    LiftedDrop(usize),
    /// Anything else.
    Other,
}

fn check_scale(cfg: &GeometryConfig, n: u64) -> Result<(), GeometryError> {
    if n > cfg.max_ground_set {
        return Err(GeometryError::Scale(format!(
            "ground set {n} exceeds the limit {}",
            cfg.max_ground_set
        )));
    }
    Ok(())
}

/// All vertices of the rank-`k` independence polytope on `n` elements, in
/// ascending lexicographic order of coordinates.
pub fn enumerate_vertices(k: u64, n: u64, cfg: &GeometryConfig) -> Result<Vec<Vertex01>, GeometryError> {
    UniformMatroidId::new(k, n)?;
    check_scale(cfg, n)?;
    let n = n as usize;
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        let coords: Vec<u8> = (0..n).map(|i| ((mask >> (n - 1 - i)) & 1) as u8).collect();
        let ones = coords.iter().filter(|&&c| c == 1).count() as u64;
        if ones <= k {
            out.push(Vertex01 { coords });
        }
    }
    Ok(out)
}

/// All vertices of the lifted rank-`k` independence polytope on `n`
/// elements, in the same order as [`enumerate_vertices`].
pub fn enumerate_lifted_vertices(
    k: u64,
    n: u64,
    cfg: &GeometryConfig,
) -> Result<Vec<LiftedVertex>, GeometryError> {
    Ok(enumerate_vertices(k, n, cfg)?
        .into_iter()
        .map(|v| {
            let corank = k - v.ones();
            LiftedVertex {
                coords: v.coords,
                corank,
            }
        })
        .collect())
}

/// Decides whether `target` lies in the convex hull of `generators`, by an
/// exact phase-1 simplex over the rationals with Bland's rule (so it always
/// terminates, and the answer is exact).
///
/// Panics if a generator's dimension differs from the target's. An empty
/// generator list spans nothing, so the answer is `false`.
pub fn lp_feasible(target: &[BigRational], generators: &[Vec<BigRational>]) -> bool {
    if generators.is_empty() {
        return false;
    }
    let coords = target.len();
    for g in generators {
        assert_eq!(g.len(), coords, "generator dimension mismatch");
    }
    // Feasibility of: Σ_j λ_j g_j = target, Σ_j λ_j = 1, λ ≥ 0, decided by
    // minimizing the sum of one artificial variable per row.
    let rows = coords + 1;
    let cols = generators.len();
    let rhs = cols + rows;
    let width = rhs + 1;
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row = vec![BigRational::zero(); width];
        for (j, g) in generators.iter().enumerate() {
            row[j] = if i < coords {
                g[i].clone()
            } else {
                BigRational::one()
            };
        }
        row[rhs] = if i < coords {
            target[i].clone()
        } else {
            BigRational::one()
        };
        if row[rhs].is_negative() {
            for entry in row.iter_mut() {
                *entry = -entry.clone();
            }
        }
        row[cols + i] = BigRational::one();
        tab.push(row);
    }
    let mut basis: Vec<usize> = (cols..cols + rows).collect();
    // Reduced-cost row for the artificial sum, with the (basic) artificial
    // columns already eliminated: structural entries are column sums.
    let mut obj = vec![BigRational::zero(); width];
    for row in &tab {
        for j in 0..cols {
            obj[j] += &row[j];
        }
        obj[rhs] += &row[rhs];
    }
    while let Some(enter) = (0..cols + rows).find(|&j| obj[j].is_positive()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[rhs] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((pivot_row, _)) = leave else {
            // The artificial sum is bounded below by zero, so the entering
            // column always admits a blocking row.
            unreachable!("phase-1 simplex cannot be unbounded");
        };
        let pivot = tab[pivot_row][enter].clone();
        for entry in tab[pivot_row].iter_mut() {
            *entry = &*entry / &pivot;
        }
        let prow = tab[pivot_row].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i != pivot_row && !row[enter].is_zero() {
                let factor = row[enter].clone();
                for (slot, p) in row.iter_mut().zip(prow.iter()) {
                    *slot -= p * &factor;
                }
            }
        }
        if !obj[enter].is_zero() {
            let factor = obj[enter].clone();
            for (slot, p) in obj.iter_mut().zip(prow.iter()) {
                *slot -= p * &factor;
            }
        }
        basis[pivot_row] = enter;
    }
    obj[rhs].is_zero()
}

/// Core of the edge test: is the midpoint of `points[i]` and `points[j]`
/// outside the hull of the remaining points?
fn midpoint_is_exposed(i: usize, j: usize, points: &[Vec<BigRational>]) -> bool {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mid: Vec<BigRational> = points[i]
        .iter()
        .zip(points[j].iter())
        .map(|(a, b)| (a + b) * &half)
        .collect();
    let others: Vec<Vec<BigRational>> = points
        .iter()
        .enumerate()
        .filter(|&(idx, _)| idx != i && idx != j)
        .map(|(_, p)| p.clone())
        .collect();
    if others.is_empty() {
        return true;
    }
    !lp_feasible(&mid, &others)
}

/// Whether the segment from `v` to `w` is an edge of the polytope whose
/// vertex set is `all_vertices` (assumed pairwise distinct): true exactly
/// when the midpoint of `v` and `w` is not a convex combination of the
/// other vertices.
pub fn is_edge(
    v: &[BigRational],
    w: &[BigRational],
    all_vertices: &[Vec<BigRational>],
    cfg: &GeometryConfig,
) -> Result<bool, GeometryError> {
    if all_vertices.len() > cfg.max_vertices {
        return Err(GeometryError::Scale(format!(
            "{} vertices exceed the limit {}",
            all_vertices.len(),
            cfg.max_vertices
        )));
    }
    if v == w {
        return Err(DomainError::new("edge endpoints must be distinct").into());
    }
    let find = |x: &[BigRational]| all_vertices.iter().position(|p| p.as_slice() == x);
    let (Some(i), Some(j)) = (find(v), find(w)) else {
        return Err(DomainError::new("edge endpoints must be vertices of the polytope").into());
    };
    Ok(midpoint_is_exposed(i, j, all_vertices))
}

/// Index pairs `(i, j)` with `i < j` spanning the edges of the polytope
/// with the given (pairwise distinct) vertex set, in lexicographic pair
/// order.
pub fn edge_pairs(
    points: &[Vec<BigRational>],
    cfg: &GeometryConfig,
) -> Result<Vec<(usize, usize)>, GeometryError> {
    if points.len() > cfg.max_vertices {
        return Err(GeometryError::Scale(format!(
            "{} vertices exceed the limit {}",
            points.len(),
            cfg.max_vertices
        )));
    }
    let mut pairs = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            pairs.push((i, j));
        }
    }
    let flags: Vec<Option<(usize, usize)>> = pairs
        .into_par_iter()
        .map(|(i, j)| midpoint_is_exposed(i, j, points).then_some((i, j)))
        .collect();
    Ok(flags.into_iter().flatten().collect())
}

/// Direction class of an unlifted difference vector.
pub fn classify_direction(d: &[BigRational]) -> EdgeDirection {
    let one = BigRational::one();
    let neg_one = -BigRational::one();
    let nonzero: Vec<(usize, &BigRational)> =
        d.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    match nonzero.as_slice() {
        [(i, c)] if **c == one => EdgeDirection::Plus(*i),
        [(i, c)] if **c == neg_one => EdgeDirection::Minus(*i),
        [(i, a), (j, b)] if **a == one && **b == neg_one => EdgeDirection::Diff {
            plus: *i,
            minus: *j,
        },
        [(i, a), (j, b)] if **a == neg_one && **b == one => EdgeDirection::Diff {
            plus: *j,
            minus: *i,
        },
        _ => EdgeDirection::Other,
    }
}

/// Direction class of a lifted difference vector (corank coordinate last).
pub fn classify_lifted_direction(d: &[BigRational]) -> EdgeDirection {
    let Some((corank_step, head)) = d.split_last() else {
        return EdgeDirection::Other;
    };
    if corank_step.is_zero() {
        return match classify_direction(head) {
            EdgeDirection::Diff { plus, minus } => EdgeDirection::LiftedDiff { plus, minus },
            _ => EdgeDirection::Other,
        };
    }
    if *corank_step == -BigRational::one() {
        if let EdgeDirection::Plus(i) = classify_direction(head) {
            return EdgeDirection::LiftedDrop(i);
        }
    }
    if *corank_step == BigRational::one() {
        if let EdgeDirection::Minus(i) = classify_direction(head) {
            return EdgeDirection::LiftedDrop(i);
        }
    }
    EdgeDirection::Other
}

/// Direction classes of every edge of the (lifted or unlifted) rank-`k`
/// independence polytope on `n` elements, one entry per edge, in
/// lexicographic order of vertex index pairs. Differences are taken larger
/// endpoint minus smaller in the enumeration (= lexicographic) order.
pub fn classify_edges(
    k: u64,
    n: u64,
    lifted: bool,
    cfg: &GeometryConfig,
) -> Result<Vec<EdgeDirection>, GeometryError> {
    let points: Vec<Vec<BigRational>> = if lifted {
        enumerate_lifted_vertices(k, n, cfg)?
            .iter()
            .map(LiftedVertex::to_rational)
            .collect()
    } else {
        enumerate_vertices(k, n, cfg)?
            .iter()
            .map(Vertex01::to_rational)
            .collect()
    };
    let pairs = edge_pairs(&points, cfg)?;
    Ok(pairs
        .into_iter()
        .map(|(i, j)| {
            let d: Vec<BigRational> = points[j]
                .iter()
                .zip(points[i].iter())
                .map(|(b, a)| b - a)
                .collect();
            if lifted {
                classify_lifted_direction(&d)
            } else {
                classify_direction(&d)
            }
        })
        .collect())
}
