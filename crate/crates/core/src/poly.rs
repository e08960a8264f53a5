//! Trigonometric polynomials `f(x) = Σ c_k e^{iλ_k x}` with exactly-tagged
//! frequencies.
//!
//! Coefficients are stored as `(modulus, phase)` pairs. Everything the radii
//! formulas need depends on the moduli alone, so keeping the phase separate
//! makes that dependence visible in the types.

use serde::Serialize;
use std::fmt;

/// Largest radicand accepted by [`Frequency::sqrt`]. Canonicalization uses
/// trial division, which stays fast up to this bound.
pub const MAX_RADICAND: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PolyError {
    #[error("frequency list is empty")]
    EmptyList,
    #[error("a polynomial needs at least one term")]
    EmptyPolynomial,
    #[error("modulus must be finite and nonnegative, got {0}")]
    InvalidModulus(f64),
    #[error("phase must be finite, got {0}")]
    InvalidPhase(f64),
    #[error("frequency value must be finite, got {0}")]
    NonFiniteFrequency(f64),
    #[error("radicand {0} outside 1..={MAX_RADICAND}")]
    RadicandOutOfRange(u64),
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("{0} cannot be represented as an exact rational")]
    NotRepresentable(f64),
    #[error("integer overflow while canonicalizing")]
    Overflow,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Reduced fraction `num/den` with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: u64,
}

impl Rational {
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: u64) -> Result<Self, PolyError> {
        if den == 0 {
            return Err(PolyError::ZeroDenominator);
        }
        let g = gcd(num.unsigned_abs(), den);
        if g <= 1 {
            return Ok(Rational { num, den });
        }
        Ok(Rational {
            num: num / g as i64,
            den: den / g,
        })
    }

    pub fn integer(num: i64) -> Self {
        Rational { num, den: 1 }
    }

    /// Exact conversion of a finite float. Every finite double is a dyadic
    /// rational; this fails only when numerator or denominator overflow 64 bits.
    pub fn from_f64(value: f64) -> Result<Self, PolyError> {
        if !value.is_finite() {
            return Err(PolyError::NonFiniteFrequency(value));
        }
        if value == 0.0 {
            return Ok(Rational { num: 0, den: 1 });
        }
        let bits = value.to_bits();
        let negative = bits >> 63 == 1;
        let biased = ((bits >> 52) & 0x7ff) as i32;
        let fraction = bits & ((1u64 << 52) - 1);
        let (mut mantissa, mut exp) = if biased == 0 {
            (fraction, -1074)
        } else {
            (fraction | (1u64 << 52), biased - 1075)
        };
        while exp < 0 && mantissa & 1 == 0 {
            mantissa >>= 1;
            exp += 1;
        }
        let magnitude: i64 = if exp >= 0 {
            if exp > 62 || mantissa.leading_zeros() < exp as u32 + 1 {
                return Err(PolyError::NotRepresentable(value));
            }
            (mantissa << exp) as i64
        } else {
            mantissa as i64
        };
        if exp < -63 {
            return Err(PolyError::NotRepresentable(value));
        }
        let den = if exp >= 0 { 1 } else { 1u64 << (-exp) as u32 };
        let num = if negative { -magnitude } else { magnitude };
        Ok(Rational { num, den })
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn value(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    fn checked_mul_int(self, k: u64) -> Result<Self, PolyError> {
        let k = i64::try_from(k).map_err(|_| PolyError::Overflow)?;
        let num = self.num.checked_mul(k).ok_or(PolyError::Overflow)?;
        Rational::new(num, self.den)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Splits `n = s² · d` with `d` squarefree, returning `(d, s)`.
pub fn squarefree_split(n: u64) -> (u64, u64) {
    let mut rest = n;
    let mut root = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        let sq = p * p;
        while rest.is_multiple_of(sq) {
            rest /= sq;
            root *= p;
        }
        p += 1;
    }
    (rest, root)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FrequencyKind {
    /// `scale · √radicand`, radicand squarefree.
    SqrtInteger {
        radicand: u64,
        scale: Rational,
    },
    Rational(Rational),
    /// A float of unknown arithmetic nature.
    Real(f64),
}

/// A frequency `λ_k`, tagged with enough exact structure to decide rational
/// independence when possible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frequency {
    kind: FrequencyKind,
}

impl Frequency {
    /// `scale · √radicand`, folding square factors of the radicand into the scale.
    pub fn sqrt(radicand: u64, scale: Rational) -> Result<Self, PolyError> {
        if radicand == 0 || radicand > MAX_RADICAND {
            return Err(PolyError::RadicandOutOfRange(radicand));
        }
        let (core, root) = squarefree_split(radicand);
        let scale = scale.checked_mul_int(root)?;
        Ok(Frequency {
            kind: FrequencyKind::SqrtInteger {
                radicand: core,
                scale,
            },
        })
    }

    pub fn rational(num: i64, den: u64) -> Result<Self, PolyError> {
        Ok(Frequency {
            kind: FrequencyKind::Rational(Rational::new(num, den)?),
        })
    }

    pub fn integer(value: i64) -> Self {
        Frequency {
            kind: FrequencyKind::Rational(Rational::integer(value)),
        }
    }

    pub fn real(value: f64) -> Result<Self, PolyError> {
        if !value.is_finite() {
            return Err(PolyError::NonFiniteFrequency(value));
        }
        Ok(Frequency {
            kind: FrequencyKind::Real(value),
        })
    }

    pub fn kind(&self) -> &FrequencyKind {
        &self.kind
    }

    pub fn numeric_value(&self) -> f64 {
        match self.kind {
            FrequencyKind::SqrtInteger { radicand, scale } => {
                scale.num as f64 * (radicand as f64).sqrt() / scale.den as f64
            }
            FrequencyKind::Rational(q) => q.value(),
            FrequencyKind::Real(v) => v,
        }
    }

    fn is_zero(&self) -> bool {
        match self.kind {
            FrequencyKind::SqrtInteger { scale, .. } => scale.is_zero(),
            FrequencyKind::Rational(q) => q.is_zero(),
            FrequencyKind::Real(v) => v == 0.0,
        }
    }
}

impl fmt::Display for Frequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FrequencyKind::SqrtInteger { radicand: 1, scale } => write!(f, "{scale}"),
            FrequencyKind::SqrtInteger { radicand, scale } if scale == Rational::ONE => {
                write!(f, "sqrt({radicand})")
            }
            FrequencyKind::SqrtInteger { radicand, scale } => write!(f, "{scale}*sqrt({radicand})"),
            FrequencyKind::Rational(q) => write!(f, "{q}"),
            FrequencyKind::Real(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IndependenceClass {
    Independent,
    Dependent,
    Unknown,
}

/// Decides rational linear independence of a frequency list where exact
/// structure allows it.
///
/// Square roots of distinct squarefree integers are independent over the
/// rationals. Rational frequencies and `√1` multiples all live on the single
/// rational direction, so at most one of them may appear. Any zero frequency,
/// or two terms on the same radicand, is an exact dependence. A `Real`
/// frequency makes the answer `Unknown` unless a dependence was already found.
pub fn classify_independence(freqs: &[Frequency]) -> Result<IndependenceClass, PolyError> {
    if freqs.is_empty() {
        return Err(PolyError::EmptyList);
    }
    if freqs.iter().any(Frequency::is_zero) {
        return Ok(IndependenceClass::Dependent);
    }
    let mut radicands: Vec<u64> = Vec::with_capacity(freqs.len());
    let mut has_real = false;
    for freq in freqs {
        match freq.kind {
            FrequencyKind::SqrtInteger { radicand, .. } => radicands.push(radicand),
            FrequencyKind::Rational(_) => radicands.push(1),
            FrequencyKind::Real(_) => has_real = true,
        }
    }
    radicands.sort_unstable();
    if radicands.windows(2).any(|w| w[0] == w[1]) {
        return Ok(IndependenceClass::Dependent);
    }
    Ok(if has_real {
        IndependenceClass::Unknown
    } else {
        IndependenceClass::Independent
    })
}

/// One coefficient `c_k = modulus · e^{i·phase}` and its frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    modulus: f64,
    phase: f64,
    frequency: Frequency,
}

impl Term {
    pub fn new(modulus: f64, phase: f64, frequency: Frequency) -> Result<Self, PolyError> {
        if !(modulus.is_finite() && modulus >= 0.0) {
            return Err(PolyError::InvalidModulus(modulus));
        }
        if !phase.is_finite() {
            return Err(PolyError::InvalidPhase(phase));
        }
        Ok(Term {
            modulus,
            phase,
            frequency,
        })
    }

    pub fn modulus(&self) -> f64 {
        self.modulus
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn frequency(&self) -> &Frequency {
        &self.frequency
    }
}

/// Real and imaginary parts `(a, b)` of `f(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComponentPair {
    pub a: f64,
    pub b: f64,
}

impl ComponentPair {
    pub fn abs2(&self) -> f64 {
        self.a * self.a + self.b * self.b
    }
}

/// Value of `|f|²` and its first two x-derivatives at a point.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Abs2Jet {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

/// `f(x) = Σ_k m_k e^{i(λ_k x + φ_k)}` with at least one term.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPolynomial {
    terms: Vec<Term>,
    lambdas: Vec<f64>,
}

impl TrigPolynomial {
    pub fn new(terms: Vec<Term>) -> Result<Self, PolyError> {
        if terms.is_empty() {
            return Err(PolyError::EmptyPolynomial);
        }
        let lambdas = terms.iter().map(|t| t.frequency.numeric_value()).collect();
        Ok(TrigPolynomial { terms, lambdas })
    }

    /// Zero-phase polynomial from `(modulus, frequency)` pairs.
    pub fn from_moduli(pairs: &[(f64, Frequency)]) -> Result<Self, PolyError> {
        let terms = pairs
            .iter()
            .map(|&(m, freq)| Term::new(m, 0.0, freq))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(terms)
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(|c_1|, …, |c_n|)` in term order.
    pub fn moduli(&self) -> Vec<f64> {
        self.terms.iter().map(|t| t.modulus).collect()
    }

    pub fn modulus_sum(&self) -> f64 {
        self.terms.iter().map(|t| t.modulus).sum()
    }

    pub fn frequencies(&self) -> Vec<Frequency> {
        self.terms.iter().map(|t| t.frequency).collect()
    }

    pub fn frequency_values(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn max_abs_frequency(&self) -> f64 {
        self.lambdas.iter().fold(0.0, |acc, l| acc.max(l.abs()))
    }

    /// Same frequencies and moduli, phases replaced.
    pub fn with_phases(&self, phases: &[f64]) -> Result<Self, PolyError> {
        let terms = self
            .terms
            .iter()
            .zip(phases)
            .map(|(t, &p)| Term::new(t.modulus, p, t.frequency))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(terms)
    }

    pub fn components(&self, x: f64) -> ComponentPair {
        let (mut a, mut b) = (0.0, 0.0);
        for (term, &lambda) in self.terms.iter().zip(&self.lambdas) {
            let (s, c) = (lambda * x + term.phase).sin_cos();
            a += term.modulus * c;
            b += term.modulus * s;
        }
        ComponentPair { a, b }
    }

    pub fn evaluate_abs2(&self, x: f64) -> f64 {
        self.components(x).abs2()
    }

    pub fn evaluate_abs(&self, x: f64) -> f64 {
        self.evaluate_abs2(x).sqrt()
    }

    /// `d/dx |f(x)|² = 2(a·a′ + b·b′)`.
    pub fn abs2_derivative(&self, x: f64) -> f64 {
        self.jet(x).d1
    }

    pub(crate) fn jet(&self, x: f64) -> Abs2Jet {
        let (mut a, mut b) = (0.0, 0.0);
        let (mut da, mut db) = (0.0, 0.0);
        let (mut dda, mut ddb) = (0.0, 0.0);
        for (term, &lambda) in self.terms.iter().zip(&self.lambdas) {
            let (s, c) = (lambda * x + term.phase).sin_cos();
            let m = term.modulus;
            a += m * c;
            b += m * s;
            da -= m * lambda * s;
            db += m * lambda * c;
            dda -= m * lambda * lambda * c;
            ddb -= m * lambda * lambda * s;
        }
        Abs2Jet {
            value: a * a + b * b,
            d1: 2.0 * (a * da + b * db),
            d2: 2.0 * (da * da + a * dda + db * db + b * ddb),
        }
    }
}
