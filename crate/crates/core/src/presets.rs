//! Fixed polynomials used as worked examples and figure sources.

use crate::poly::{Frequency, PolyError, Rational, TrigPolynomial};

fn sqrt_freq(radicand: u64, scale: Rational) -> Frequency {
    Frequency::sqrt(radicand, scale).expect("preset radicands are in range")
}

/// `e^{ix} + e^{i√2x}`: inner radius 0, outer radius 2.
pub fn unit_pair_sqrt2() -> TrigPolynomial {
    TrigPolynomial::from_moduli(&[
        (1.0, Frequency::integer(1)),
        (1.0, sqrt_freq(2, Rational::ONE)),
    ])
    .expect("valid preset")
}

/// `e^{ix} + ½e^{i√2x}`: radii 1/2 and 3/2.
pub fn half_pair_sqrt2() -> TrigPolynomial {
    TrigPolynomial::from_moduli(&[
        (1.0, Frequency::integer(1)),
        (0.5, sqrt_freq(2, Rational::ONE)),
    ])
    .expect("valid preset")
}

/// Periodic `e^{ix} + a·e^{2ix}`, with `|f|² = 1 + a² + 2a·cos x`.
pub fn harmonic_pair(a: f64) -> Result<TrigPolynomial, PolyError> {
    TrigPolynomial::from_moduli(&[(1.0, Frequency::integer(1)), (a, Frequency::integer(2))])
}

/// `e^{ix} + e^{2ix} + (1/10)e^{i√3x}`: not periodic, yet the frequencies
/// are rationally dependent.
pub fn harmonic_pair_with_sqrt3() -> TrigPolynomial {
    TrigPolynomial::from_moduli(&[
        (1.0, Frequency::integer(1)),
        (1.0, Frequency::integer(2)),
        (0.1, sqrt_freq(3, Rational::ONE)),
    ])
    .expect("valid preset")
}

/// `5e^{ixa} + 5e^{ixa√2} + 6e^{ixa√3} + 7e^{ixa√5} + 9e^{ixa√7}`, whose
/// moduli partition perfectly while differencing leaves 2.
pub fn five_weight_sqrt(a: f64) -> Result<TrigPolynomial, PolyError> {
    let scale = Rational::from_f64(a)?;
    let freq = |d| Frequency::sqrt(d, scale);
    TrigPolynomial::from_moduli(&[
        (5.0, freq(1)?),
        (5.0, freq(2)?),
        (6.0, freq(3)?),
        (7.0, freq(5)?),
        (9.0, freq(7)?),
    ])
}

/// `e^{ix} + e^{2ix} + e^{3ix}`: partition minimum of the moduli is 1, but
/// `|f(2π/3)| = 0`.
pub fn unit_triple_harmonic() -> TrigPolynomial {
    TrigPolynomial::from_moduli(&[
        (1.0, Frequency::integer(1)),
        (1.0, Frequency::integer(2)),
        (1.0, Frequency::integer(3)),
    ])
    .expect("valid preset")
}

/// Example identifiers accepted on the command line.
pub const EXAMPLE_IDS: [&str; 5] = ["2.8", "2.9", "2.16", "2.19", "3.9"];

/// Resolves an example id; `a` parameterizes "2.16" and "3.9".
pub fn example(id: &str, a: f64) -> Option<Result<TrigPolynomial, PolyError>> {
    Some(match id {
        "2.8" => Ok(unit_pair_sqrt2()),
        "2.9" => Ok(half_pair_sqrt2()),
        "2.16" => harmonic_pair(a),
        "2.19" => Ok(harmonic_pair_with_sqrt3()),
        "3.9" => five_weight_sqrt(a),
        _ => return None,
    })
}

/// Curve presets: polynomial, parameter range and sampling step.
#[derive(Debug, Clone)]
pub struct FigurePreset {
    pub number: u8,
    pub poly: TrigPolynomial,
    pub t_max: f64,
    pub step: f64,
}

pub fn figure(number: u8) -> Option<FigurePreset> {
    let (poly, t_max) = match number {
        1 => (unit_pair_sqrt2(), 200.0),
        2 => (half_pair_sqrt2(), 200.0),
        3 => (
            harmonic_pair(2.0).expect("valid preset"),
            std::f64::consts::TAU,
        ),
        4 => (harmonic_pair_with_sqrt3(), 200.0),
        _ => return None,
    };
    Some(FigurePreset {
        number,
        poly,
        t_max,
        step: 0.01,
    })
}
