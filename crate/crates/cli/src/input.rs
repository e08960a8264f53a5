//! Parsing of command-line inputs: polynomial specs, weight lists, angle
//! lists and series descriptors.

use crate::error::CliError;
use apring_core::poly::{Frequency, Rational, Term, TrigPolynomial};
use apring_core::series::CoefficientSeries;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::path::Path;

/// JSON description of `f(x) = Σ modulus·e^{i(λx + phase)}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialSpec {
    pub terms: Vec<TermSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub modulus: f64,
    #[serde(default)]
    pub phase: f64,
    pub frequency: FrequencySpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FrequencySpec {
    Sqrt {
        radicand: u64,
        #[serde(default = "ScaleSpec::one")]
        scale: ScaleSpec,
    },
    Rational {
        num: i64,
        den: u64,
    },
    Real {
        value: f64,
    },
}

/// A sqrt scale written either as a JSON number or as a `"p/q"` string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScaleSpec {
    Number(f64),
    Fraction(String),
}

impl ScaleSpec {
    fn one() -> Self {
        ScaleSpec::Number(1.0)
    }

    fn to_rational(&self) -> Result<Rational, CliError> {
        match self {
            ScaleSpec::Number(v) => Ok(Rational::from_f64(*v)?),
            ScaleSpec::Fraction(text) => {
                let bad = || CliError::Parse(format!("scale {text:?} is not of the form p/q"));
                let (p, q) = text.split_once('/').unwrap_or((text.as_str(), "1"));
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: u64 = q.trim().parse().map_err(|_| bad())?;
                Ok(Rational::new(p, q)?)
            }
        }
    }
}

impl FrequencySpec {
    pub fn to_frequency(&self) -> Result<Frequency, CliError> {
        Ok(match self {
            FrequencySpec::Sqrt { radicand, scale } => {
                Frequency::sqrt(*radicand, scale.to_rational()?)?
            }
            FrequencySpec::Rational { num, den } => Frequency::rational(*num, *den)?,
            FrequencySpec::Real { value } => Frequency::real(*value)?,
        })
    }
}

impl PolynomialSpec {
    pub fn to_polynomial(&self) -> Result<TrigPolynomial, CliError> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(Term::new(t.modulus, t.phase, t.frequency.to_frequency()?)?))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(TrigPolynomial::new(terms)?)
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Inline JSON when the argument starts with `{`, otherwise a file path.
pub fn load_spec(arg: &str) -> Result<PolynomialSpec, CliError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        read_file(Path::new(arg))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("polynomial spec: {e}")))
}

fn looks_like_path(arg: &str) -> bool {
    arg.contains('/') || arg.contains('\\') || arg.ends_with(".csv") || arg.ends_with(".txt")
}

/// Number tokens from an inline `a,b,c` list or from a CSV file holding one
/// number per line or a single comma-separated line.
pub fn number_tokens(arg: &str) -> Result<Vec<String>, CliError> {
    let path = Path::new(arg);
    let text = if path.is_file() || looks_like_path(arg) {
        read_file(path)?
    } else {
        arg.to_string()
    };
    let tokens: Vec<String> = text
        .split([',', '\n', '\r'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect();
    if tokens.is_empty() {
        return Err(CliError::Parse("empty number list".into()));
    }
    Ok(tokens)
}

/// An angle such as `0.5`, `pi`, `-pi/2`, `2*pi/3`, `3pi/4` or `1/3`.
pub fn parse_angle(text: &str) -> Result<f64, CliError> {
    let bad = || CliError::Parse(format!("cannot read angle {text:?}"));
    let number = |s: &str| s.trim().parse::<f64>().map_err(|_| bad());
    let lowered = text.trim().to_ascii_lowercase().replace('π', "pi");
    let (sign, body) = match lowered.strip_prefix('-') {
        Some(rest) => (-1.0, rest.trim().to_string()),
        None => (1.0, lowered.trim_start_matches('+').trim().to_string()),
    };
    let (numerator, denominator) = match body.split_once('/') {
        Some((n, d)) => (n.trim(), number(d)?),
        None => (body.as_str(), 1.0),
    };
    let value = match numerator.strip_suffix("pi") {
        Some(coef) => {
            let coef = coef.trim().trim_end_matches('*').trim();
            let c = if coef.is_empty() { 1.0 } else { number(coef)? };
            c * PI
        }
        None => number(numerator)?,
    };
    let v = sign * value / denominator;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(bad())
    }
}

pub fn parse_angles(list: &str) -> Result<Vec<f64>, CliError> {
    list.split(',').map(parse_angle).collect()
}

pub fn parse_numbers(list: &str) -> Result<Vec<f64>, CliError> {
    list.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Parse(format!("cannot read number {s:?}")))
        })
        .collect()
}

/// A JSON list of frequencies: integers become exact rationals, other numbers
/// become reals, objects use the polynomial spec's frequency schema.
pub fn parse_frequency_list(json: &str) -> Result<Vec<Frequency>, CliError> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Entry {
        Number(f64),
        Spec(FrequencySpec),
    }
    let entries: Vec<Entry> =
        serde_json::from_str(json).map_err(|e| CliError::Parse(format!("frequency list: {e}")))?;
    entries
        .into_iter()
        .map(|entry| match entry {
            Entry::Number(v) if v.fract() == 0.0 && v.abs() < 9.0e15 => {
                Ok(Frequency::integer(v as i64))
            }
            Entry::Number(v) => Ok(Frequency::real(v)?),
            Entry::Spec(spec) => spec.to_frequency(),
        })
        .collect()
}

/// `geometric:a,r`, `powerlaw:p,scale` or `explicit:<list or csv file>`.
pub fn parse_series(text: &str) -> Result<CoefficientSeries, CliError> {
    let (kind, params) = text
        .split_once(':')
        .ok_or_else(|| CliError::Parse(format!("series {text:?} lacks a kind: prefix")))?;
    let pair = |params: &str| -> Result<(f64, f64), CliError> {
        match parse_numbers(params)?.as_slice() {
            [x, y] => Ok((*x, *y)),
            _ => Err(CliError::Parse(format!(
                "{kind} needs exactly two parameters"
            ))),
        }
    };
    Ok(match kind {
        "geometric" => {
            let (a, r) = pair(params)?;
            CoefficientSeries::geometric(a, r)?
        }
        "powerlaw" => {
            let (p, scale) = pair(params)?;
            CoefficientSeries::power_law(p, scale)?
        }
        "explicit" => {
            let terms = number_tokens(params)?
                .iter()
                .map(|s| {
                    s.parse::<f64>()
                        .map_err(|_| CliError::Parse(format!("cannot read number {s:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            CoefficientSeries::explicit(terms)?
        }
        other => return Err(CliError::Parse(format!("unknown series kind {other:?}"))),
    })
}
