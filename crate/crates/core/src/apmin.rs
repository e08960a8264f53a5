//! Extrema of `|f(x)|` on finite windows, and the formulas they are checked
//! against.
//!
//! The outer radius `M = Σ|c_k|` and the inner radius `m` (partition minimum
//! of the moduli) come from [`radii_formulas`]. Scans only ever give bounds:
//! `min_val` is an upper bound on `inf |f|` over the window and `max_val` a
//! lower bound on `sup |f|`. For rationally independent frequencies the
//! bounds approach the formulas as the window grows, but for three or more
//! terms with a small `m` the required windows are astronomically long, so
//! [`certified_upper_bound`] offers the constructive alternative: align every
//! phase with the optimal signs through a Kronecker search.

use crate::partition::{self, PartitionError};
use crate::poly::{Frequency, IndependenceClass, TrigPolynomial};
use crate::presets;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::{PI, TAU};

/// Grid points per parallel work unit. Fixed so that results never depend on
/// the thread count.
const CHUNK: usize = 1 << 14;
/// Grid minima (and maxima) handed to local refinement.
pub const REFINE_STARTS: usize = 32;
const REFINE_ITERS: usize = 64;
const REFINE_STEP_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ApminError {
    #[error("window [{0}, {1}] is empty or not finite")]
    EmptyWindow(f64, f64),
    #[error("step {step} exceeds the sampling limit {limit} (π/(4·λ_max))")]
    StepTooCoarse { step: f64, limit: f64 },
    #[error("window schedule must be positive and strictly increasing")]
    InvalidSchedule,
    #[error("invalid Kronecker query: {0}")]
    InvalidQuery(&'static str),
    #[error("invalid coverage request: {0}")]
    InvalidCoverage(&'static str),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremaFormulas {
    /// `Σ |c_k|`.
    pub big_m: f64,
    /// Exact partition minimum of the moduli.
    pub small_m: f64,
    /// A sign vector attaining `small_m`.
    pub signs: Vec<i8>,
}

/// Outer and inner radii computed from the moduli alone.
pub fn radii_formulas(f: &TrigPolynomial) -> Result<ExtremaFormulas, ApminError> {
    let moduli = f.moduli();
    let exact = partition::exact_minimum(&moduli)?;
    Ok(ExtremaFormulas {
        big_m: moduli.iter().sum(),
        small_m: exact.m,
        signs: exact.signs,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport {
    pub window: [f64; 2],
    pub step: f64,
    pub min_val: f64,
    pub argmin: f64,
    pub max_val: f64,
    pub argmax: f64,
    pub refined: bool,
    pub evaluations: u64,
}

/// Largest admissible grid step for `f`: a quarter period of the fastest
/// oscillation in `|f|²`, or unbounded for constant `|f|`.
pub fn step_limit(f: &TrigPolynomial) -> f64 {
    let lambda_max = f.max_abs_frequency();
    if lambda_max == 0.0 {
        f64::INFINITY
    } else {
        PI / (4.0 * lambda_max)
    }
}

fn check_step(f: &TrigPolynomial, step: f64) -> Result<(), ApminError> {
    let limit = step_limit(f);
    if !(step > 0.0 && step.is_finite() && step <= limit) {
        return Err(ApminError::StepTooCoarse { step, limit });
    }
    Ok(())
}

fn grid_len(x_lo: f64, x_hi: f64, step: f64) -> usize {
    let mut count = ((x_hi - x_lo) / step).floor() as usize + 1;
    while count > 1 && x_lo + (count - 1) as f64 * step > x_hi {
        count -= 1;
    }
    count
}

/// `(value, index)` candidates; smaller value first, then smaller index.
type Candidate = (f64, usize);

fn better(a: Candidate, b: Candidate) -> bool {
    a.0 < b.0 || (a.0 == b.0 && a.1 < b.1)
}

fn keep_best(mut cands: Vec<Candidate>, k: usize) -> Vec<Candidate> {
    cands.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    cands.truncate(k);
    cands
}

struct ChunkSummary {
    min: Candidate,
    /// Negated `|f|²`, so "better" means larger.
    max: Candidate,
    local_min: Vec<Candidate>,
    local_max: Vec<Candidate>,
    evaluations: u64,
}

fn scan_chunk(
    f: &TrigPolynomial,
    x_lo: f64,
    step: f64,
    count: usize,
    start: usize,
) -> ChunkSummary {
    let end = (start + CHUNK).min(count);
    let at = |i: usize| f.evaluate_abs2(x_lo + i as f64 * step);
    let values: Vec<f64> = (start..end).map(at).collect();
    let mut evaluations = values.len() as u64;
    let before = if start > 0 {
        evaluations += 1;
        Some(at(start - 1))
    } else {
        None
    };
    let after = if end < count {
        evaluations += 1;
        Some(at(end))
    } else {
        None
    };

    let mut min = (f64::INFINITY, usize::MAX);
    let mut max = (f64::INFINITY, usize::MAX);
    let mut local_min = Vec::new();
    let mut local_max = Vec::new();
    for (offset, &v) in values.iter().enumerate() {
        let idx = start + offset;
        if better((v, idx), min) {
            min = (v, idx);
        }
        if better((-v, idx), max) {
            max = (-v, idx);
        }
        let prev = if offset > 0 {
            Some(values[offset - 1])
        } else {
            before
        };
        let next = values.get(offset + 1).copied().or(after);
        let below = |n: Option<f64>| n.is_none_or(|n| v <= n);
        let above = |n: Option<f64>| n.is_none_or(|n| v >= n);
        if below(prev) && below(next) {
            local_min.push((v, idx));
        }
        if above(prev) && above(next) {
            local_max.push((-v, idx));
        }
    }
    ChunkSummary {
        min,
        max,
        local_min: keep_best(local_min, REFINE_STARTS),
        local_max: keep_best(local_max, REFINE_STARTS),
        evaluations,
    }
}

/// Golden-section search for the minimum of `phi` on `[a, b]`.
fn golden_section_minimize(
    phi: impl Fn(f64) -> f64,
    mut a: f64,
    mut b: f64,
    max_evals: usize,
) -> (f64, f64, u64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = phi(x1);
    let mut f2 = phi(x2);
    let mut evals = 2u64;
    while (evals as usize) < max_evals && b - a > REFINE_STEP_TOL * a.abs().max(1.0) {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = phi(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = phi(x2);
        }
        evals += 1;
    }
    if f1 <= f2 {
        (x1, f1, evals)
    } else {
        (x2, f2, evals)
    }
}

/// Local refinement of `sense · |f|²` (sense = 1 for minima, -1 for maxima)
/// on `[lo, hi]` starting from `x0`: safeguarded Newton on the derivative,
/// falling back to golden-section search once a Newton step leaves the
/// bracket or fails to descend. Returns `(x, sense·|f(x)|², evaluations)`.
fn refine(f: &TrigPolynomial, lo: f64, hi: f64, x0: f64, sense: f64) -> (f64, f64, u64) {
    let (mut a, mut b) = (lo, hi);
    let mut x = x0;
    let mut evals = 0u64;
    let mut v = f64::NAN;
    let mut newton_failed = false;
    let mut iters = 0;
    while iters < REFINE_ITERS {
        iters += 1;
        let jet = f.jet(x);
        evals += 1;
        v = sense * jet.value;
        let (g, h) = (sense * jet.d1, sense * jet.d2);
        if g > 0.0 {
            b = b.min(x);
        } else if g < 0.0 {
            a = a.max(x);
        } else {
            break;
        }
        if !(h > 0.0) {
            newton_failed = true;
            break;
        }
        let xn = x - g / h;
        if !(xn >= a && xn <= b) {
            newton_failed = true;
            break;
        }
        let vn = sense * f.evaluate_abs2(xn);
        evals += 1;
        if vn > v {
            newton_failed = true;
            break;
        }
        let dx = (xn - x).abs();
        x = xn;
        v = vn;
        if dx <= REFINE_STEP_TOL * x.abs().max(1.0) {
            break;
        }
    }
    if newton_failed && b > a {
        let budget = 2 * (REFINE_ITERS - iters) + 2;
        let (xg, vg, e) = golden_section_minimize(|t| sense * f.evaluate_abs2(t), a, b, budget);
        evals += e;
        if vg < v {
            return (xg, vg, evals);
        }
    }
    (x, v, evals)
}

/// Grid scan of `|f|` over `[x_lo, x_hi]` at `x_lo + i·step`, optionally
/// followed by local refinement of the best grid minima and maxima.
pub fn scan_extrema(
    f: &TrigPolynomial,
    x_lo: f64,
    x_hi: f64,
    step: f64,
    refine_extrema: bool,
) -> Result<ScanReport, ApminError> {
    if !(x_lo.is_finite() && x_hi.is_finite() && x_lo < x_hi) {
        return Err(ApminError::EmptyWindow(x_lo, x_hi));
    }
    check_step(f, step)?;
    let count = grid_len(x_lo, x_hi, step);
    let chunks: Vec<ChunkSummary> = (0..count.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| scan_chunk(f, x_lo, step, count, c * CHUNK))
        .collect();

    let mut min = (f64::INFINITY, usize::MAX);
    let mut max = (f64::INFINITY, usize::MAX);
    let mut evaluations = 0;
    let mut local_min = Vec::new();
    let mut local_max = Vec::new();
    for chunk in chunks {
        if better(chunk.min, min) {
            min = chunk.min;
        }
        if better(chunk.max, max) {
            max = chunk.max;
        }
        evaluations += chunk.evaluations;
        local_min.extend(chunk.local_min);
        local_max.extend(chunk.local_max);
    }
    let grid_x = |i: usize| x_lo + i as f64 * step;
    // (value, x) with sense applied, compared by value then position
    let mut best_min = (min.0, grid_x(min.1));
    let mut best_max = (max.0, grid_x(max.1));

    if refine_extrema {
        let starts: Vec<(f64, usize)> = keep_best(local_min, REFINE_STARTS)
            .into_iter()
            .map(|(_, i)| (1.0, i))
            .chain(
                keep_best(local_max, REFINE_STARTS)
                    .into_iter()
                    .map(|(_, i)| (-1.0, i)),
            )
            .collect();
        let refined: Vec<(f64, f64, f64, u64)> = starts
            .par_iter()
            .map(|&(sense, i)| {
                let x0 = grid_x(i);
                let lo = (x0 - step).max(x_lo);
                let hi = (x0 + step).min(x_hi);
                let (x, v, e) = refine(f, lo, hi, x0, sense);
                (sense, v, x, e)
            })
            .collect();
        for (sense, v, x, e) in refined {
            evaluations += e;
            let slot = if sense > 0.0 {
                &mut best_min
            } else {
                &mut best_max
            };
            if v < slot.0 || (v == slot.0 && x < slot.1) {
                *slot = (v, x);
            }
        }
    }

    Ok(ScanReport {
        window: [x_lo, x_hi],
        step,
        min_val: best_min.0.max(0.0).sqrt(),
        argmin: best_min.1,
        max_val: (-best_max.0).max(0.0).sqrt(),
        argmax: best_max.1,
        refined: refine_extrema,
        evaluations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RunningMin {
    pub t: f64,
    pub min_val: f64,
    pub argmin: f64,
}

/// Refined minima of `|f|` over `[0, T]` for each `T` of an increasing
/// schedule. Each entry is clamped by its predecessor (the windows are
/// nested), so the sequence never increases.
pub fn running_min_series(
    f: &TrigPolynomial,
    schedule: &[f64],
    step: f64,
) -> Result<Vec<RunningMin>, ApminError> {
    if schedule.is_empty()
        || schedule[0] <= 0.0
        || schedule.windows(2).any(|w| !(w[0] < w[1]))
        || schedule.iter().any(|t| !t.is_finite())
    {
        return Err(ApminError::InvalidSchedule);
    }
    let mut out: Vec<RunningMin> = Vec::with_capacity(schedule.len());
    for &t in schedule {
        let report = scan_extrema(f, 0.0, t, step, true)?;
        let mut entry = RunningMin {
            t,
            min_val: report.min_val,
            argmin: report.argmin,
        };
        if let Some(prev) = out.last() {
            if prev.min_val <= entry.min_val {
                entry.min_val = prev.min_val;
                entry.argmin = prev.argmin;
            }
        }
        out.push(entry);
    }
    Ok(out)
}

/// Distance from `v` to the nearest multiple of `2π`.
pub fn circular_distance(v: f64) -> f64 {
    let r = v.rem_euclid(TAU);
    r.min(TAU - r)
}

/// Simultaneous approximation `|λ_k τ − θ_k| < δ (mod 2π)` for `τ ∈ [0, T]`.
#[derive(Debug, Clone, PartialEq)]
pub struct KroneckerQuery {
    frequencies: Vec<Frequency>,
    lambdas: Vec<f64>,
    targets: Vec<f64>,
    delta: f64,
    t_max: f64,
}

impl KroneckerQuery {
    pub fn new(
        frequencies: Vec<Frequency>,
        targets: Vec<f64>,
        delta: f64,
        t_max: f64,
    ) -> Result<Self, ApminError> {
        if frequencies.is_empty() {
            return Err(ApminError::InvalidQuery("no frequencies"));
        }
        if frequencies.len() != targets.len() {
            return Err(ApminError::InvalidQuery(
                "frequency and target counts differ",
            ));
        }
        if targets.iter().any(|t| !t.is_finite()) {
            return Err(ApminError::InvalidQuery("targets must be finite"));
        }
        if !(delta > 0.0 && delta <= PI) {
            return Err(ApminError::InvalidQuery("delta must lie in (0, π]"));
        }
        if !(t_max >= 0.0 && t_max.is_finite()) {
            return Err(ApminError::InvalidQuery(
                "window end must be finite and nonnegative",
            ));
        }
        let lambdas = frequencies.iter().map(Frequency::numeric_value).collect();
        Ok(KroneckerQuery {
            frequencies,
            lambdas,
            targets,
            delta,
            t_max,
        })
    }

    pub fn frequencies(&self) -> &[Frequency] {
        &self.frequencies
    }

    pub fn targets(&self) -> &[f64] {
        &self.targets
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    /// Grid spacing `δ/(4·λ_max)`; zero-frequency queries only test `τ = 0`.
    pub fn grid_step(&self) -> f64 {
        let lambda_max = self.lambdas.iter().fold(0.0f64, |acc, l| acc.max(l.abs()));
        if lambda_max == 0.0 {
            f64::INFINITY
        } else {
            self.delta / (4.0 * lambda_max)
        }
    }

    pub fn distances(&self, tau: f64) -> Vec<f64> {
        self.lambdas
            .iter()
            .zip(&self.targets)
            .map(|(&l, &t)| circular_distance(l * tau - t))
            .collect()
    }

    pub fn max_distance(&self, tau: f64) -> f64 {
        self.lambdas
            .iter()
            .zip(&self.targets)
            .fold(0.0, |acc, (&l, &t)| acc.max(circular_distance(l * tau - t)))
    }

    pub fn is_satisfied(&self, tau: f64) -> bool {
        self.lambdas
            .iter()
            .zip(&self.targets)
            .all(|(&l, &t)| circular_distance(l * tau - t) < self.delta)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KroneckerHit {
    pub tau: f64,
    /// Circular distance of `λ_k τ − θ_k` from zero, per frequency.
    pub distances: Vec<f64>,
    pub max_distance: f64,
}

/// Smallest grid point of `[0, T]` meeting every inequality, polished by one
/// golden-section pass on the worst-case distance. `None` when no grid point
/// qualifies.
pub fn kronecker_search(q: &KroneckerQuery) -> Option<KroneckerHit> {
    let step = q.grid_step();
    let count = if step.is_finite() {
        grid_len(0.0, q.t_max, step).max(1)
    } else {
        1
    };
    let grid = |i: usize| if i == 0 { 0.0 } else { i as f64 * step };
    let batch = CHUNK * rayon::current_num_threads().max(1) * 4;
    let mut found = None;
    let mut start = 0;
    while start < count && found.is_none() {
        let end = (start + batch).min(count);
        found = (start..end)
            .into_par_iter()
            .with_min_len(CHUNK)
            .find_first(|&i| q.is_satisfied(grid(i)));
        start = end;
    }
    let idx = found?;
    let tau0 = grid(idx);
    let mut tau = tau0;
    let d0 = q.max_distance(tau0);
    if d0 > 0.0 && step.is_finite() {
        let lo = (tau0 - step).max(0.0);
        let hi = (tau0 + step).min(q.t_max);
        if hi > lo {
            let (t, d, _) =
                golden_section_minimize(|t| q.max_distance(t), lo, hi, 2 * REFINE_ITERS);
            if d < d0 && q.is_satisfied(t) {
                tau = t;
            }
        }
    }
    Some(KroneckerHit {
        tau,
        distances: q.distances(tau),
        max_distance: q.max_distance(tau),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertifiedBound {
    pub x: f64,
    /// `|f(x)|`.
    pub bound: f64,
    /// `m + M·δ`, which `bound` can never exceed.
    pub guarantee: f64,
    pub signs: Vec<i8>,
    pub max_distance: f64,
}

/// Turns the exact partition signs into phase targets (`θ_k = −φ_k` for `+1`,
/// `π − φ_k` for `−1`) and searches for a `τ` aligning them. At such a point
/// `f(τ)` is within `M·δ` of the signed modulus sum, so `|f(τ)| ≤ m + M·δ`.
pub fn certified_upper_bound(
    f: &TrigPolynomial,
    delta: f64,
    t_max: f64,
) -> Result<Option<CertifiedBound>, ApminError> {
    let formulas = radii_formulas(f)?;
    let targets = f
        .terms()
        .iter()
        .zip(&formulas.signs)
        .map(|(term, &s)| {
            if s > 0 {
                -term.phase()
            } else {
                PI - term.phase()
            }
        })
        .collect();
    let query = KroneckerQuery::new(f.frequencies(), targets, delta, t_max)?;
    let Some(hit) = kronecker_search(&query) else {
        return Ok(None);
    };
    Ok(Some(CertifiedBound {
        x: hit.tau,
        bound: f.evaluate_abs(hit.tau),
        guarantee: formulas.small_m + formulas.big_m * delta,
        signs: formulas.signs,
        max_distance: hit.max_distance,
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverageReport {
    pub radial_bins: usize,
    pub angular_bins: usize,
    pub fraction_covered: f64,
    pub observed_min_abs: f64,
    pub observed_max_abs: f64,
    pub inner_radius: f64,
    pub outer_radius: f64,
}

/// Samples `f` at equispaced points of `[0, T]` and reports which cells of
/// the annulus between the formula radii (split into radial × angular bins)
/// were visited.
pub fn ring_coverage(
    f: &TrigPolynomial,
    t_max: f64,
    samples: usize,
    radial_bins: usize,
    angular_bins: usize,
) -> Result<CoverageReport, ApminError> {
    if radial_bins == 0 || angular_bins == 0 {
        return Err(ApminError::InvalidCoverage("bin counts must be positive"));
    }
    if samples < radial_bins.saturating_mul(angular_bins) {
        return Err(ApminError::InvalidCoverage("fewer samples than bins"));
    }
    if !(t_max >= 0.0 && t_max.is_finite()) {
        return Err(ApminError::InvalidCoverage(
            "window end must be finite and nonnegative",
        ));
    }
    let formulas = radii_formulas(f)?;
    let (inner, outer) = (formulas.small_m, formulas.big_m);
    let tol = 1e-9 * outer.max(1.0);
    let bins = radial_bins * angular_bins;
    let x_at = |i: usize| {
        if samples == 1 {
            0.0
        } else {
            t_max * i as f64 / (samples - 1) as f64
        }
    };
    let radial_of = |r: f64| -> Option<usize> {
        if r < inner - tol || r > outer + tol {
            return None;
        }
        if outer - inner <= tol {
            return Some(0);
        }
        let t = ((r - inner) / (outer - inner)).clamp(0.0, 1.0);
        Some(((t * radial_bins as f64) as usize).min(radial_bins - 1))
    };

    let partials: Vec<(Vec<bool>, f64, f64)> = (0..samples.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut hit = vec![false; bins];
            let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
            for i in c * CHUNK..((c + 1) * CHUNK).min(samples) {
                let z = f.components(x_at(i));
                let r = z.abs2().sqrt();
                lo = lo.min(r);
                hi = hi.max(r);
                if let Some(rb) = radial_of(r) {
                    let turn = (z.b.atan2(z.a) + PI) / TAU;
                    let ab = ((turn * angular_bins as f64) as usize).min(angular_bins - 1);
                    hit[rb * angular_bins + ab] = true;
                }
            }
            (hit, lo, hi)
        })
        .collect();

    let mut hit = vec![false; bins];
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for (h, l, u) in partials {
        hit.iter_mut().zip(h).for_each(|(a, b)| *a |= b);
        lo = lo.min(l);
        hi = hi.max(u);
    }
    let covered = hit.iter().filter(|&&b| b).count();
    Ok(CoverageReport {
        radial_bins,
        angular_bins,
        fraction_covered: covered as f64 / bins as f64,
        observed_min_abs: lo,
        observed_max_abs: hi,
        inner_radius: inner,
        outer_radius: outer,
    })
}

/// Outcome of comparing the partition formula with observed values of `|f|`
/// for a polynomial with rationally dependent frequencies.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimProbe {
    pub name: String,
    pub independence: IndependenceClass,
    /// Inner radius predicted by the partition formula.
    pub formula_min: f64,
    /// Smallest `|f|` actually observed.
    pub observed_min: f64,
    pub witness_x: f64,
    pub status: String,
}

pub const CONTRADICTED: &str = "numerically contradicted in the dependent case";
pub const NOT_CONTRADICTED: &str = "not contradicted at this scale";

fn probe_status(formula: f64, observed: f64) -> String {
    // a margin well above rounding noise
    if observed < formula - 1e-6 * formula.max(1.0) {
        CONTRADICTED.to_string()
    } else {
        NOT_CONTRADICTED.to_string()
    }
}

/// Checks whether the partition formula for the inner radius survives two
/// dependent-frequency polynomials: `e^{ix}+e^{2ix}+e^{3ix}` evaluated at
/// `2π/3`, and `e^{ix}+e^{2ix}+(1/10)e^{i√3x}` scanned over `[0, T]` for each
/// `T` of `schedule`.
pub fn dependent_claim_probes(schedule: &[f64], step: f64) -> Result<Vec<ClaimProbe>, ApminError> {
    let triple = presets::unit_triple_harmonic();
    let x = 2.0 * PI / 3.0;
    let formula = radii_formulas(&triple)?.small_m;
    let observed = triple.evaluate_abs(x);
    let first = ClaimProbe {
        name: "unit moduli on frequencies 1, 2, 3".to_string(),
        independence: crate::poly::classify_independence(&triple.frequencies()).expect("nonempty"),
        formula_min: formula,
        observed_min: observed,
        witness_x: x,
        status: probe_status(formula, observed),
    };

    let mixed = presets::harmonic_pair_with_sqrt3();
    let formula = radii_formulas(&mixed)?.small_m;
    let series = running_min_series(&mixed, schedule, step)?;
    let last = series.last().expect("schedule is nonempty");
    let second = ClaimProbe {
        name: format!("e^ix + e^2ix + 0.1 e^(i sqrt3 x) on [0, {}]", last.t),
        independence: crate::poly::classify_independence(&mixed.frequencies()).expect("nonempty"),
        formula_min: formula,
        observed_min: last.min_val,
        witness_x: last.argmin,
        status: probe_status(formula, last.min_val),
    };
    Ok(vec![first, second])
}
