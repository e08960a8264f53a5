//! Parametric traces `t ↦ (Re f(t), Im f(t))` and their CSV/SVG renderings.

use crate::apmin::step_limit;
use crate::poly::TrigPolynomial;
use std::fmt::Write as _;
use std::io::{self, Write};

#[derive(Debug, thiserror::Error)]
pub enum CurveError {
    #[error("t_max must be positive and finite, got {0}")]
    InvalidRange(f64),
    #[error("step {step} exceeds the sampling limit {limit}")]
    StepTooCoarse { step: f64, limit: f64 },
    #[error("a polyline needs at least 2 samples, got {0}")]
    TooFewSamples(usize),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRow {
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveSamples {
    pub rows: Vec<CurveRow>,
    pub poly: TrigPolynomial,
    pub t_max: f64,
    pub step: f64,
}

impl CurveSamples {
    /// `Σ |c_k|`, the radius every sample stays within.
    pub fn radius(&self) -> f64 {
        self.poly.modulus_sum()
    }
}

/// Samples `f` at `t = 0, step, 2·step, … ≤ t_max`.
pub fn sample_curve(f: &TrigPolynomial, t_max: f64, step: f64) -> Result<CurveSamples, CurveError> {
    if !(t_max > 0.0 && t_max.is_finite()) {
        return Err(CurveError::InvalidRange(t_max));
    }
    let limit = step_limit(f);
    if !(step > 0.0 && step.is_finite() && step <= limit) {
        return Err(CurveError::StepTooCoarse { step, limit });
    }
    let mut count = (t_max / step).floor() as usize + 1;
    while count > 1 && (count - 1) as f64 * step > t_max {
        count -= 1;
    }
    let rows = (0..count)
        .map(|i| {
            let t = i as f64 * step;
            let z = f.components(t);
            CurveRow { t, x: z.a, y: z.b }
        })
        .collect();
    Ok(CurveSamples {
        rows,
        poly: f.clone(),
        t_max,
        step,
    })
}

/// `t,x,y` header, one line per sample, shortest round-trip floats.
pub fn emit_csv<W: Write>(c: &CurveSamples, mut out: W) -> Result<(), CurveError> {
    let mut buf = String::with_capacity(32 * (c.rows.len() + 1));
    buf.push_str("t,x,y\n");
    for row in &c.rows {
        let _ = writeln!(buf, "{},{},{}", row.t, row.x, row.y);
    }
    out.write_all(buf.as_bytes())?;
    out.flush()?;
    Ok(())
}

/// Parses the output of [`emit_csv`].
pub fn parse_csv(text: &str) -> Option<Vec<CurveRow>> {
    let mut lines = text.lines();
    if lines.next()? != "t,x,y" {
        return None;
    }
    lines
        .map(|line| {
            let mut it = line.split(',').map(|v| v.parse::<f64>().ok());
            let row = CurveRow {
                t: it.next()??,
                x: it.next()??,
                y: it.next()??,
            };
            it.next().is_none().then_some(row)
        })
        .collect()
}

/// Fixed six-decimal coordinate with negative zero folded to zero.
fn coord(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

/// Single-polyline SVG, y flipped for screen orientation, with the viewBox
/// padded 0.1 beyond the outer radius.
pub fn emit_svg<W: Write>(
    c: &CurveSamples,
    mut out: W,
    stroke_width: f64,
) -> Result<(), CurveError> {
    if c.rows.len() < 2 {
        return Err(CurveError::TooFewSamples(c.rows.len()));
    }
    let r = c.radius();
    let mut buf = String::with_capacity(24 * c.rows.len() + 256);
    buf.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        buf,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
        -r - 0.1,
        -r - 0.1,
        2.0 * r + 0.2,
        2.0 * r + 0.2
    );
    let _ = write!(
        buf,
        "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"{stroke_width}\" points=\""
    );
    for (i, row) in c.rows.iter().enumerate() {
        if i > 0 {
            buf.push(' ');
        }
        let _ = write!(buf, "{},{}", coord(row.x), coord(-row.y));
    }
    buf.push_str("\"/>\n</svg>\n");
    out.write_all(buf.as_bytes())?;
    out.flush()?;
    Ok(())
}
