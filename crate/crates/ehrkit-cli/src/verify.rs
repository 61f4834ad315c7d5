//! The `verify` subcommand: every module invariant exercised up to a size
//! ceiling, with one report line per check.
//!
//! Checks are capped at `min(their stated range, --max-n)`, so small
//! ceilings give fast (possibly vacuous) passes and larger ones widen the
//! sweep. Brute-force checks respect the candidate budget and report
//! budget exhaustion separately from genuine mismatches.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use ehrkit::combinatorics::{
    binomial, enumerate_ordered_partitions, eulerian, factorial, partition_weight,
    stirling_first_unsigned, weighted_lah, MemoTable,
};
use ehrkit::ehrhart::{
    half_open_ehrhart_with, hypersimplex_coefficient_with, hypersimplex_ehrhart_with,
    independence_ehrhart_with, positivity_report, Sign,
};
use ehrkit::error::DomainError;
use ehrkit::geometry::{
    classify_edges, edge_pairs, enumerate_vertices, is_edge, EdgeDirection, GeometryConfig,
    GeometryError, Vertex01,
};
use ehrkit::lattice::{
    build_half_open, build_hypersimplex, build_independence, count_points, layer_histogram,
    oracle_ehrhart, CountError,
};

/// Limits for one verification run.
pub struct VerifyConfig {
    pub max_n: u64,
    pub budget: u64,
}

enum CheckError {
    Mismatch(String),
    Budget(String),
}

type CheckResult = Result<(), CheckError>;

impl From<CountError> for CheckError {
    fn from(e: CountError) -> Self {
        match &e {
            CountError::BudgetExceeded { .. } => CheckError::Budget(e.to_string()),
            CountError::Domain(_) => CheckError::Mismatch(e.to_string()),
        }
    }
}

impl From<DomainError> for CheckError {
    fn from(e: DomainError) -> Self {
        CheckError::Mismatch(e.to_string())
    }
}

impl From<GeometryError> for CheckError {
    fn from(e: GeometryError) -> Self {
        CheckError::Mismatch(e.to_string())
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(CheckError::Mismatch(msg()))
    }
}

fn lah_vs_enumeration(cfg: &VerifyConfig, memo: &MemoTable) -> CheckResult {
    for n in 1..=cfg.max_n.min(8) {
        for m in 1..=n {
            let weights: Vec<u64> = enumerate_ordered_partitions(n, m)
                .map(|p| partition_weight(&p))
                .collect();
            for l in 0..=(n - m) as i64 {
                let direct = weights.iter().filter(|&&w| w as i64 == l).count() as u64;
                ensure(weighted_lah(l, n, m, memo) == BigUint::from(direct), || {
                    format!("W({l}, {n}, {m}) differs from direct enumeration ({direct})")
                })?;
            }
        }
    }
    Ok(())
}

fn lah_row_sums(cfg: &VerifyConfig, memo: &MemoTable) -> CheckResult {
    for n in 1..=cfg.max_n.min(10) {
        for m in 1..=n {
            let sum: BigUint = (0..=(n - m) as i64).map(|l| weighted_lah(l, n, m, memo)).sum();
            let expect = binomial(n - 1, m - 1) * factorial(n) / factorial(m);
            ensure(sum == expect, || {
                format!("weight sums at ({n}, {m}): {sum} vs ordered-block count {expect}")
            })?;
        }
    }
    Ok(())
}

fn lah_zero_weight_is_stirling(cfg: &VerifyConfig, memo: &MemoTable) -> CheckResult {
    for n in 0..=cfg.max_n.min(10) {
        for m in 0..=n {
            let w = weighted_lah(0, n, m, memo);
            let c = stirling_first_unsigned(n, m);
            ensure(w == c, || format!("W(0, {n}, {m}) = {w} is not c({n}, {m}) = {c}"))?;
        }
    }
    Ok(())
}

fn lah_strict_growth(cfg: &VerifyConfig, memo: &MemoTable) -> CheckResult {
    for n in 3..=cfg.max_n.min(10) {
        for m in 2..=n {
            for l in 0..=(n - m) as i64 {
                let grown = weighted_lah(l, n, m, memo);
                let scaled = weighted_lah(l, n - 1, m, memo) * (n - 1);
                ensure(grown > scaled, || {
                    format!("W({l}, {n}, {m}) fails strict growth over ground set {}", n - 1)
                })?;
            }
        }
    }
    Ok(())
}

fn eulerian_rows(cfg: &VerifyConfig) -> CheckResult {
    for m in 1..=cfg.max_n.min(12) {
        let sum: BigUint = (0..m as i64).map(|j| eulerian(m, j)).sum();
        ensure(sum == factorial(m), || {
            format!("descent counts over {m} letters do not sum to {m}!")
        })?;
        for j in 0..m as i64 {
            let a = eulerian(m, j);
            let b = eulerian(m, m as i64 - 1 - j);
            ensure(a == b, || {
                format!("A({m}, {j}) = {a} differs from its reverse {b}")
            })?;
        }
    }
    Ok(())
}

fn hypersimplex_reflection(cfg: &VerifyConfig, memo: &MemoTable) -> CheckResult {
    for n in 2..=cfg.max_n.min(12) {
        for k in 1..n {
            let a = hypersimplex_ehrhart_with(k, n, memo)?;
            let b = hypersimplex_ehrhart_with(n - k, n, memo)?;
            ensure(a == b, || format!("slices ({k}, {n}) and ({}, {n}) disagree", n - k))?;
        }
    }
    Ok(())
}

fn half_open_positivity(cfg: &VerifyConfig, memo: &MemoTable) -> CheckResult {
    for n in 2..=cfg.max_n.min(12) {
        for k in 1..n {
            let p = half_open_ehrhart_with(k, n, memo)?;
            let expected_constant = if k == 1 {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            ensure(p.coeff(0) == expected_constant, || {
                format!("half-open ({k}, {n}): constant term {}", p.coeff(0))
            })?;
            for (degree, sign) in positivity_report(&p).into_iter().skip(1) {
                ensure(sign == Sign::Positive, || {
                    format!("half-open ({k}, {n}): coefficient of degree {degree} not positive")
                })?;
            }
        }
    }
    Ok(())
}

fn independence_positivity(cfg: &VerifyConfig, memo: &MemoTable) -> CheckResult {
    for n in 1..=cfg.max_n.min(12) {
        for k in 1..=n {
            let p = independence_ehrhart_with(k, n, memo)?;
            ensure(p.coeff(0) == BigRational::one(), || {
                format!("independence ({k}, {n}): constant term {}", p.coeff(0))
            })?;
            for (degree, sign) in positivity_report(&p) {
                ensure(sign == Sign::Positive, || {
                    format!("independence ({k}, {n}): coefficient of degree {degree} not positive")
                })?;
            }
        }
    }
    Ok(())
}

fn coefficient_strict_inequality(cfg: &VerifyConfig, memo: &MemoTable) -> CheckResult {
    for n in 4..=cfg.max_n.min(12) {
        for k in 2..=n - 2 {
            for m in 1..=n - 2 {
                let large = hypersimplex_coefficient_with(k, n, m, memo)?;
                let small = hypersimplex_coefficient_with(k - 1, n - 1, m, memo)?;
                ensure(large > small, || {
                    format!("coefficient ({k}, {n}, {m}) does not dominate ({}, {}, {m})", k - 1, n - 1)
                })?;
            }
        }
    }
    Ok(())
}

fn evaluation_integrality(cfg: &VerifyConfig, memo: &MemoTable) -> CheckResult {
    for n in 2..=cfg.max_n.min(10) {
        for k in 1..n {
            let polys = [
                hypersimplex_ehrhart_with(k, n, memo)?,
                half_open_ehrhart_with(k, n, memo)?,
                independence_ehrhart_with(k, n, memo)?,
            ];
            for t in 0..=2 * n {
                for p in &polys {
                    ensure(p.eval_count(t).is_some(), || {
                        format!("family at ({k}, {n}): non-integer value at t = {t}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn hypersimplex_closed_vs_oracle(cfg: &VerifyConfig, memo: &MemoTable) -> CheckResult {
    for n in 3..=cfg.max_n.min(7) {
        for k in 1..n {
            let closed = hypersimplex_ehrhart_with(k, n, memo)?;
            let body = build_hypersimplex(k, n)?;
            let oracle = oracle_ehrhart(&body, (n - 1) as usize, cfg.budget)?;
            ensure(closed == oracle, || {
                format!("hypersimplex ({k}, {n}): closed form {closed} vs sweep {oracle}")
            })?;
        }
    }
    Ok(())
}

fn half_open_closed_vs_oracle(cfg: &VerifyConfig, memo: &MemoTable) -> CheckResult {
    for n in 3..=cfg.max_n.min(7) {
        // k = n-1 included: the top slice exercises the extended difference
        // rule, which is exactly what the sweep is gating.
        for k in 1..n {
            let closed = half_open_ehrhart_with(k, n, memo)?;
            let body = build_half_open(k, n)?;
            let oracle = oracle_ehrhart(&body, (n - 1) as usize, cfg.budget)?;
            ensure(closed == oracle, || {
                format!("half-open ({k}, {n}): closed form {closed} vs sweep {oracle}")
            })?;
        }
    }
    Ok(())
}

fn independence_telescoping(cfg: &VerifyConfig, memo: &MemoTable) -> CheckResult {
    for n in 1..=cfg.max_n.min(6) {
        for k in 1..=n {
            let closed = independence_ehrhart_with(k, n, memo)?;
            let body = build_independence(k, n)?;
            for t in 0..=n + 1 {
                let predicted = closed.eval_count(t).ok_or_else(|| {
                    CheckError::Mismatch(format!(
                        "independence ({k}, {n}): non-integer value at t = {t}"
                    ))
                })?;
                let counted = count_points(&body, t, cfg.budget)?;
                ensure(predicted == counted, || {
                    format!("independence ({k}, {n}) at t = {t}: {predicted} vs sweep {counted}")
                })?;
            }
        }
    }
    Ok(())
}

fn dilation_zero_constants(cfg: &VerifyConfig) -> CheckResult {
    for n in 2..=cfg.max_n.min(8) {
        for k in 1..n {
            let closed = count_points(&build_hypersimplex(k, n)?, 0, cfg.budget)?;
            ensure(closed == BigUint::one(), || {
                format!("hypersimplex ({k}, {n}): zero dilate count {closed}")
            })?;
            let open = count_points(&build_half_open(k, n)?, 0, cfg.budget)?;
            let expect = if k == 1 { BigUint::one() } else { BigUint::zero() };
            ensure(open == expect, || {
                format!("half-open ({k}, {n}): zero dilate count {open}")
            })?;
            let ind = count_points(&build_independence(k, n)?, 0, cfg.budget)?;
            ensure(ind == BigUint::one(), || {
                format!("independence ({k}, {n}): zero dilate count {ind}")
            })?;
        }
    }
    Ok(())
}

fn layer_tiling(cfg: &VerifyConfig) -> CheckResult {
    for n in 1..=cfg.max_n.min(6) {
        for k in 1..=n {
            for t in 0..=n {
                let hist = layer_histogram(k, n, t, cfg.budget)?;
                let mut total = BigUint::zero();
                for (idx, bucket) in hist.iter().enumerate() {
                    let j = idx as u64 + 1;
                    let direct = count_points(&build_half_open(j, n + 1)?, t, cfg.budget)?;
                    ensure(*bucket == direct, || {
                        format!("layer {j} of ({k}, {n}) at t = {t}: {bucket} vs {direct}")
                    })?;
                    total += bucket;
                }
                let whole = count_points(&build_independence(k, n)?, t, cfg.budget)?;
                ensure(total == whole, || {
                    format!("layers of ({k}, {n}) at t = {t} sum to {total}, region holds {whole}")
                })?;
            }
        }
    }
    Ok(())
}

fn edge_direction_classes(cfg: &VerifyConfig) -> CheckResult {
    let geo = GeometryConfig::default();
    for n in 1..=cfg.max_n.min(5) {
        for k in 1..=n {
            let flat = classify_edges(k, n, false, &geo)?;
            for class in &flat {
                ensure(
                    matches!(
                        class,
                        EdgeDirection::Diff { .. } | EdgeDirection::Plus(_) | EdgeDirection::Minus(_)
                    ),
                    || format!("unlifted ({k}, {n}): unexpected direction {class:?}"),
                )?;
            }
            let lifted = classify_edges(k, n, true, &geo)?;
            for class in &lifted {
                ensure(
                    matches!(
                        class,
                        EdgeDirection::LiftedDiff { .. } | EdgeDirection::LiftedDrop(_)
                    ),
                    || format!("lifted ({k}, {n}): unexpected direction {class:?}"),
                )?;
            }
            ensure(flat.len() == lifted.len(), || {
                format!(
                    "({k}, {n}): {} unlifted edges but {} lifted ones",
                    flat.len(),
                    lifted.len()
                )
            })?;
        }
    }
    Ok(())
}

fn edge_census(cfg: &VerifyConfig) -> CheckResult {
    fn expected_edge(a: &Vertex01, b: &Vertex01, k: u64) -> bool {
        let sym_diff = a
            .coords()
            .iter()
            .zip(b.coords().iter())
            .filter(|(x, y)| x != y)
            .count();
        sym_diff == 1 || (sym_diff == 2 && a.ones() == k && b.ones() == k)
    }
    let geo = GeometryConfig::default();
    for n in 1..=cfg.max_n.min(4) {
        for k in 1..=n {
            let vs = enumerate_vertices(k, n, &geo)?;
            let points: Vec<Vec<BigRational>> = vs.iter().map(Vertex01::to_rational).collect();
            let found = edge_pairs(&points, &geo)?;
            let mut expect = Vec::new();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    if expected_edge(&vs[i], &vs[j], k) {
                        expect.push((i, j));
                    }
                }
            }
            ensure(found == expect, || {
                format!(
                    "({k}, {n}): LP edge census found {} edges, subsets give {}",
                    found.len(),
                    expect.len()
                )
            })?;
        }
    }
    Ok(())
}

fn guard_rails() -> CheckResult {
    let geo = GeometryConfig::default();
    ensure(
        matches!(
            enumerate_vertices(1, geo.max_ground_set + 1, &geo),
            Err(GeometryError::Scale(_))
        ),
        || "oversized ground set was not refused".to_string(),
    )?;
    let square: Vec<Vec<BigRational>> = enumerate_vertices(2, 2, &geo)
        .map_err(CheckError::from)?
        .iter()
        .map(Vertex01::to_rational)
        .collect();
    let tiny = GeometryConfig {
        max_ground_set: 6,
        max_vertices: 2,
    };
    ensure(
        matches!(
            is_edge(&square[0], &square[1], &square, &tiny),
            Err(GeometryError::Scale(_))
        ),
        || "oversized vertex set was not refused".to_string(),
    )?;
    let body = build_hypersimplex(1, 3).map_err(CheckError::from)?;
    ensure(
        matches!(
            count_points(&body, 1, 1),
            Err(CountError::BudgetExceeded { .. })
        ),
        || "candidate budget was not enforced".to_string(),
    )?;
    Ok(())
}

/// Runs every check, printing one line each, and returns the process exit
/// code: 0 all pass, 3 on any mismatch, 4 when only budget limits were hit.
pub fn run(cfg: &VerifyConfig) -> i32 {
    let memo = MemoTable::new();
    let mut passed = 0u32;
    let mut mismatched = 0u32;
    let mut budgeted = 0u32;
    let mut record = |name: &str, result: CheckResult| match result {
        Ok(()) => {
            println!("[verify] {name}: ok");
            passed += 1;
        }
        Err(CheckError::Mismatch(msg)) => {
            println!("[verify] {name}: FAILED — {msg}");
            mismatched += 1;
        }
        Err(CheckError::Budget(msg)) => {
            println!("[verify] {name}: budget-limited — {msg}");
            budgeted += 1;
        }
    };

    record("lah-vs-enumeration", lah_vs_enumeration(cfg, &memo));
    record("lah-row-sums", lah_row_sums(cfg, &memo));
    record("lah-zero-weight-is-stirling", lah_zero_weight_is_stirling(cfg, &memo));
    record("lah-strict-growth", lah_strict_growth(cfg, &memo));
    record("eulerian-rows", eulerian_rows(cfg));
    record("hypersimplex-reflection", hypersimplex_reflection(cfg, &memo));
    record("half-open-positivity", half_open_positivity(cfg, &memo));
    record("independence-positivity", independence_positivity(cfg, &memo));
    record("coefficient-strict-inequality", coefficient_strict_inequality(cfg, &memo));
    record("evaluation-integrality", evaluation_integrality(cfg, &memo));
    record("hypersimplex-closed-vs-oracle", hypersimplex_closed_vs_oracle(cfg, &memo));
    record("half-open-closed-vs-oracle", half_open_closed_vs_oracle(cfg, &memo));
    record("independence-telescoping", independence_telescoping(cfg, &memo));
    record("dilation-zero-constants", dilation_zero_constants(cfg));
    record("layer-tiling", layer_tiling(cfg));
    record("edge-direction-classes", edge_direction_classes(cfg));
    record("edge-census", edge_census(cfg));
    record("guard-rails", guard_rails());

    let total = passed + mismatched + budgeted;
    println!(
        "verify: {total} checks — {passed} ok, {mismatched} failed, {budgeted} budget-limited \
         (max_n = {}, budget = {})",
        cfg.max_n, cfg.budget
    );
    if mismatched > 0 {
        3
    } else if budgeted > 0 {
        4
    } else {
        0
    }
}
