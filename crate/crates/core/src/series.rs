//! Partition minima of truncated absolutely summable coefficient series.
//!
//! For `f(x) = Σ_{k≥1} c_k e^{iλ_k x}` with `Σ|c_k| < ∞`, the truncations
//! `f_n` differ from `f` by at most the tail `Σ_{k>n}|c_k|`. This module
//! tabulates `m_n` (the partition minimum of the first `n` moduli) next to
//! that tail and checks the step bound `|m_{n+1} − m_n| ≤ |c_{n+1}|`.

use crate::partition::{self, PartitionError, MEET_IN_MIDDLE_CAP};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SeriesError {
    #[error("geometric series needs 0 < r < 1 and a > 0")]
    InvalidGeometric,
    #[error("power-law series needs p > 1 and a positive finite scale")]
    InvalidPowerLaw,
    #[error("explicit series needs finite nonnegative terms")]
    InvalidExplicit,
    #[error("n_max {0} exceeds the limit {1}")]
    TooManyTerms(usize, usize),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Absolutely summable moduli `|c_k|`, `k = 1, 2, …`.
#[derive(Debug, Clone, PartialEq)]
pub enum CoefficientSeries {
    /// `|c_k| = a·r^(k−1)`.
    Geometric { a: f64, r: f64 },
    /// `|c_k| = scale·k^(−p)`.
    PowerLaw { p: f64, scale: f64 },
    /// Finitely many nonzero terms.
    Explicit(Vec<f64>),
}

impl CoefficientSeries {
    pub fn geometric(a: f64, r: f64) -> Result<Self, SeriesError> {
        if !(a > 0.0 && a.is_finite() && r > 0.0 && r < 1.0) {
            return Err(SeriesError::InvalidGeometric);
        }
        Ok(CoefficientSeries::Geometric { a, r })
    }

    pub fn power_law(p: f64, scale: f64) -> Result<Self, SeriesError> {
        if !(p > 1.0 && p.is_finite() && scale > 0.0 && scale.is_finite()) {
            return Err(SeriesError::InvalidPowerLaw);
        }
        Ok(CoefficientSeries::PowerLaw { p, scale })
    }

    pub fn explicit(terms: Vec<f64>) -> Result<Self, SeriesError> {
        if terms.is_empty() || terms.iter().any(|t| !(t.is_finite() && *t >= 0.0)) {
            return Err(SeriesError::InvalidExplicit);
        }
        Ok(CoefficientSeries::Explicit(terms))
    }

    /// `|c_k|` for `k ≥ 1`; explicit series are zero past their end.
    pub fn term(&self, k: usize) -> f64 {
        assert!(k >= 1, "series terms are indexed from 1");
        match self {
            CoefficientSeries::Geometric { a, r } => a * r.powi(k as i32 - 1),
            CoefficientSeries::PowerLaw { p, scale } => scale * (k as f64).powf(-p),
            CoefficientSeries::Explicit(terms) => terms.get(k - 1).copied().unwrap_or(0.0),
        }
    }

    pub fn terms(&self, n: usize) -> Vec<f64> {
        (1..=n).map(|k| self.term(k)).collect()
    }

    /// `Σ_{k>n} |c_k|` as `(estimate, half_width)`. Exact kinds report a zero
    /// half-width; power laws report the midpoint of the integral bracket
    /// `[scale·(n+1)^(1−p)/(p−1), scale·n^(1−p)/(p−1)]`.
    pub fn tail(&self, n: usize) -> (f64, f64) {
        match self {
            CoefficientSeries::Geometric { a, r } => (a * r.powi(n as i32) / (1.0 - r), 0.0),
            CoefficientSeries::PowerLaw { p, scale } => {
                let integral_from = |x: f64| scale * x.powf(1.0 - p) / (p - 1.0);
                let lower = integral_from((n + 1) as f64);
                // the integral from 0 diverges; at n = 0 the first term bounds it
                let upper = if n == 0 {
                    scale + integral_from(1.0)
                } else {
                    integral_from(n as f64)
                };
                ((lower + upper) / 2.0, (upper - lower) / 2.0)
            }
            CoefficientSeries::Explicit(terms) => {
                (terms.iter().skip(n).rev().fold(0.0, |acc, t| acc + t), 0.0)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub m_n: f64,
    pub tail: f64,
    pub tail_half_width: f64,
}

/// Rows `n = 1..=n_max` of exact partition minima and tails.
pub fn mn_sequence(
    series: &CoefficientSeries,
    n_max: usize,
) -> Result<Vec<ConvergenceRow>, SeriesError> {
    if n_max > MEET_IN_MIDDLE_CAP {
        return Err(SeriesError::TooManyTerms(n_max, MEET_IN_MIDDLE_CAP));
    }
    if let CoefficientSeries::Explicit(terms) = series {
        if n_max > terms.len() {
            return Err(SeriesError::TooManyTerms(n_max, terms.len()));
        }
    }
    let weights = series.terms(n_max);
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let m_n = partition::exact_minimum(&weights[..n])?.m;
            let (tail, tail_half_width) = series.tail(n);
            Ok(ConvergenceRow {
                n,
                m_n,
                tail,
                tail_half_width,
            })
        })
        .collect()
}

/// Whether consecutive rows obey `|m_{n+1} − m_n| ≤ |c_{n+1}|` (up to 1e−12).
/// Flipping one more ±|c_{n+1}| into an optimal sum moves it by exactly that
/// much, so this holds for every exact sequence.
pub fn cauchy_check(rows: &[ConvergenceRow], series: &CoefficientSeries) -> bool {
    rows.windows(2).all(|w| {
        let next = series.term(w[1].n);
        (w[1].m_n - w[0].m_n).abs() <= next + 1e-12
    })
}

/// Renders rows as a `n,m_n,tail` CSV table.
pub fn rows_to_csv(rows: &[ConvergenceRow]) -> String {
    let mut out = String::from("n,m_n,tail\n");
    for row in rows {
        out.push_str(&format!("{},{},{}\n", row.n, row.m_n, row.tail));
    }
    out
}
