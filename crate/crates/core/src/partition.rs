//! Two-way number partitioning: `m = min over ε ∈ {±1}ⁿ of |Σ w_k ε_k|`.
//!
//! Four exact solvers (exhaustive search, meet-in-the-middle, integer subset-sum
//! DP, small-n closed forms) and the Karmarkar–Karp differencing heuristic.
//! Every result carries a sign vector that certifies its value.

use serde::Serialize;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

pub const BRUTE_FORCE_CAP: usize = 24;
pub const MEET_IN_MIDDLE_CAP: usize = 40;
pub const DP_SUM_CAP: u64 = 1 << 26;

/// Absolute slack allowed when checking that `weight · scale` is an integer.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PartitionError {
    #[error("weight set is empty")]
    Empty,
    #[error("weight {0} is negative or not finite")]
    InvalidWeight(f64),
    #[error("decimal literal {0:?} does not match its weight")]
    InvalidDecimal(String),
    #[error("{0} weights exceed the solver cap of {1}")]
    TooManyWeights(usize, usize),
    #[error("weight {weight} times scale {scale} is not an integer")]
    NotIntegral { weight: f64, scale: u64 },
    #[error("scaled weight sum {0} exceeds the DP cap of {1}")]
    SumCapExceeded(u64, u64),
    #[error("closed forms cover 1 to 4 weights, got {0}")]
    WrongArity(usize),
    #[error("no exact method handles {0} non-integral weights")]
    NoExactMethod(usize),
    #[error("scale must be a positive integer")]
    ZeroScale,
}

/// Multiset of nonnegative weights, optionally with their original decimal
/// spellings so that scaled integer solving can avoid float rounding.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSet {
    weights: Vec<f64>,
    decimals: Option<Vec<String>>,
}

impl WeightSet {
    pub fn new(weights: Vec<f64>) -> Result<Self, PartitionError> {
        if weights.is_empty() {
            return Err(PartitionError::Empty);
        }
        if let Some(&bad) = weights.iter().find(|w| !(w.is_finite() && **w >= 0.0)) {
            return Err(PartitionError::InvalidWeight(bad));
        }
        Ok(WeightSet {
            weights,
            decimals: None,
        })
    }

    /// Parses decimal literals such as `"5"`, `"0.25"` or `"1e-3"`, keeping the
    /// text for exact integer scaling.
    pub fn from_decimals<S: AsRef<str>>(literals: &[S]) -> Result<Self, PartitionError> {
        let mut weights = Vec::with_capacity(literals.len());
        let mut decimals = Vec::with_capacity(literals.len());
        for lit in literals {
            let text = lit.as_ref().trim();
            let w: f64 = text
                .parse()
                .map_err(|_| PartitionError::InvalidDecimal(text.to_string()))?;
            if !(w.is_finite() && w >= 0.0) {
                return Err(PartitionError::InvalidWeight(w));
            }
            if parse_decimal(text).is_none() {
                return Err(PartitionError::InvalidDecimal(text.to_string()));
            }
            weights.push(w);
            decimals.push(text.to_string());
        }
        let mut set = WeightSet::new(weights)?;
        set.decimals = Some(decimals);
        Ok(set)
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Weights times `scale` as exact integers, if every product is integral.
    pub fn scaled_integers(&self, scale: u64) -> Result<Vec<u64>, PartitionError> {
        if scale == 0 {
            return Err(PartitionError::ZeroScale);
        }
        match &self.decimals {
            Some(decimals) => decimals
                .iter()
                .zip(&self.weights)
                .map(|(text, &weight)| {
                    parse_decimal(text)
                        .and_then(|d| d.scaled(scale))
                        .ok_or(PartitionError::NotIntegral { weight, scale })
                })
                .collect(),
            None => self
                .weights
                .iter()
                .map(|&weight| {
                    let scaled = weight * scale as f64;
                    let rounded = scaled.round();
                    if (scaled - rounded).abs() > INTEGRALITY_TOLERANCE
                        || rounded >= u64::MAX as f64
                    {
                        Err(PartitionError::NotIntegral { weight, scale })
                    } else {
                        Ok(rounded as u64)
                    }
                })
                .collect(),
        }
    }
}

/// `digits · 10^exp10` for a nonnegative decimal literal.
struct Decimal {
    digits: u128,
    exp10: i32,
}

impl Decimal {
    fn scaled(&self, scale: u64) -> Option<u64> {
        let mut value = self.digits.checked_mul(scale as u128)?;
        let mut exp = self.exp10;
        while exp > 0 {
            value = value.checked_mul(10)?;
            exp -= 1;
        }
        while exp < 0 {
            if value % 10 != 0 {
                return None;
            }
            value /= 10;
            exp += 1;
        }
        u64::try_from(value).ok()
    }
}

fn parse_decimal(text: &str) -> Option<Decimal> {
    let text = text.strip_prefix('+').unwrap_or(text);
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let mut digits: u128 = 0;
    for c in int_part.chars().chain(frac_part.chars()) {
        digits = digits
            .checked_mul(10)?
            .checked_add(c.to_digit(10)? as u128)?;
    }
    let exp10 = exponent.checked_sub(i32::try_from(frac_part.len()).ok()?)?;
    Some(Decimal { digits, exp10 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PartitionMethod {
    BruteForce,
    MeetInMiddle,
    IntegerDP,
    KarmarkarKarp,
    ClosedForm,
}

/// Solver selection for [`solve`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    /// Closed form for n ≤ 4, integer DP for integral weights under the sum
    /// cap, meet-in-the-middle up to its cap. Never the heuristic.
    Auto,
    BruteForce,
    MeetInMiddle,
    IntegerDp {
        scale: u64,
    },
    KarmarkarKarp,
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartitionResult {
    pub m: f64,
    pub signs: Vec<i8>,
    pub method: PartitionMethod,
}

impl PartitionResult {
    /// Builds a result whose `m` is recomputed from the signs, so the
    /// certificate `|Σ w_k ε_k| = m` holds by construction.
    fn certified(weights: &[f64], mut signs: Vec<i8>, method: PartitionMethod) -> Self {
        if signs.first() == Some(&-1) {
            signs.iter_mut().for_each(|s| *s = -*s);
        }
        let m = signed_sum(weights, &signs).abs();
        PartitionResult { m, signs, method }
    }
}

pub fn signed_sum(weights: &[f64], signs: &[i8]) -> f64 {
    weights
        .iter()
        .zip(signs)
        .map(|(&w, &s)| if s < 0 { -w } else { w })
        .sum()
}

/// Lexicographic order on sign vectors with `-1 < +1`.
#[cfg(test)]
fn lex_less(a: &[i8], b: &[i8]) -> bool {
    a < b
}

/// Bit `i` of `mask` set means weight `i` gets sign `-1`.
fn signs_from_mask(n: usize, mask: u64) -> Vec<i8> {
    (0..n)
        .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
        .collect()
}

/// Signed subset sums of `weights`, indexed by sign mask. Each entry is
/// summed directly so its rounding does not depend on the enumeration order.
fn signed_subset_sums(weights: &[f64]) -> Vec<f64> {
    (0u64..1 << weights.len())
        .map(|mask| {
            weights
                .iter()
                .enumerate()
                .map(|(i, &w)| if mask >> i & 1 == 1 { -w } else { w })
                .sum()
        })
        .collect()
}

/// [`lex_less`] on sign masks: the first differing weight decides, and the
/// mask carrying `-1` there is smaller.
fn mask_lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a >> diff.trailing_zeros() & 1 == 1
}

/// Exhaustive search over the `2^(n-1)` sign patterns with `ε_1 = +1`.
/// Ties go to the lexicographically smallest sign vector.
pub fn exact_bruteforce(w: &WeightSet) -> Result<PartitionResult, PartitionError> {
    exact_bruteforce_with_cap(w, BRUTE_FORCE_CAP)
}

pub fn exact_bruteforce_with_cap(
    w: &WeightSet,
    cap: usize,
) -> Result<PartitionResult, PartitionError> {
    let n = w.len();
    if n > cap || n > 63 {
        return Err(PartitionError::TooManyWeights(n, cap));
    }
    let weights = w.weights();
    // weight 0 keeps +1; the rest are split into two halves whose signed
    // sums are tabulated once, so each pattern costs one addition
    let rest = &weights[1..];
    let lo_len = rest.len() / 2;
    let lo = signed_subset_sums(&rest[..lo_len]);
    let hi = signed_subset_sums(&rest[lo_len..]);
    let first = weights[0];

    let mut best_val = f64::INFINITY;
    let mut best_mask = 0u64;
    for (h, &hs) in hi.iter().enumerate() {
        let base = first + hs;
        for (l, &ls) in lo.iter().enumerate() {
            let val = (base + ls).abs();
            let mask = ((h as u64) << lo_len | l as u64) << 1;
            if val < best_val || (val == best_val && mask_lex_less(mask, best_mask)) {
                best_val = val;
                best_mask = mask;
            }
        }
    }
    Ok(PartitionResult::certified(
        weights,
        signs_from_mask(n, best_mask),
        PartitionMethod::BruteForce,
    ))
}

/// Splits the weights in two halves, sorts the signed half-sums and matches
/// them with a two-pointer sweep.
pub fn exact_meet_in_middle(w: &WeightSet) -> Result<PartitionResult, PartitionError> {
    let n = w.len();
    if n > MEET_IN_MIDDLE_CAP {
        return Err(PartitionError::TooManyWeights(n, MEET_IN_MIDDLE_CAP));
    }
    let weights = w.weights();
    if n == 1 {
        return Ok(PartitionResult::certified(
            weights,
            vec![1],
            PartitionMethod::MeetInMiddle,
        ));
    }
    let left_len = n / 2;
    let (left, right) = weights.split_at(left_len);

    // left half keeps ε_1 = +1, so only even masks
    let mut left_sums: Vec<(f64, u64)> = signed_subset_sums(left)
        .into_iter()
        .enumerate()
        .filter(|(mask, _)| mask & 1 == 0)
        .map(|(mask, s)| (s, mask as u64))
        .collect();
    let mut right_sums: Vec<(f64, u64)> = signed_subset_sums(right)
        .into_iter()
        .enumerate()
        .map(|(mask, s)| (s, mask as u64))
        .collect();
    let by_value = |a: &(f64, u64), b: &(f64, u64)| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1));
    left_sums.sort_unstable_by(by_value);
    right_sums.sort_unstable_by(by_value);

    // as the left sum grows, the best right partner (closest to -left) moves down
    let mut best = (f64::INFINITY, 0u64, 0u64);
    let mut j = right_sums.len() - 1;
    for &(ls, lm) in &left_sums {
        while j > 0 && ls + right_sums[j - 1].0 >= 0.0 {
            j -= 1;
        }
        while j + 1 < right_sums.len() && ls + right_sums[j].0 < 0.0 {
            j += 1;
        }
        for k in [j.saturating_sub(1), j] {
            let (rs, rm) = right_sums[k];
            let val = (ls + rs).abs();
            if val < best.0 {
                best = (val, lm, rm);
            }
        }
    }
    let mask = best.1 | best.2 << left_len;
    Ok(PartitionResult::certified(
        weights,
        signs_from_mask(n, mask),
        PartitionMethod::MeetInMiddle,
    ))
}

/// Subset-sum bitset DP on `weights · scale`, which must all be integers.
pub fn exact_integer_dp(w: &WeightSet, scale: u64) -> Result<PartitionResult, PartitionError> {
    exact_integer_dp_with_cap(w, scale, DP_SUM_CAP)
}

pub fn exact_integer_dp_with_cap(
    w: &WeightSet,
    scale: u64,
    sum_cap: u64,
) -> Result<PartitionResult, PartitionError> {
    let ints = w.scaled_integers(scale)?;
    let total = ints
        .iter()
        .try_fold(0u64, |acc, &v| acc.checked_add(v))
        .ok_or(PartitionError::SumCapExceeded(u64::MAX, sum_cap))?;
    if total > sum_cap {
        return Err(PartitionError::SumCapExceeded(total, sum_cap));
    }
    let half = (total / 2) as usize;

    // `first[s]` is the index of the item that first made sum `s` reachable;
    // any earlier-reached predecessor `s - w_i` has a strictly smaller index
    const UNREACHED: u32 = u32::MAX;
    const EMPTY: u32 = u32::MAX - 1;
    let mut first = vec![UNREACHED; half + 1];
    first[0] = EMPTY;
    let words = half / 64 + 1;
    let mut reach = vec![0u64; words];
    reach[0] = 1;
    let mut shifted = vec![0u64; words];

    for (idx, &v) in ints.iter().enumerate() {
        let v = v as usize;
        if v == 0 || v > half {
            continue;
        }
        shift_left_into(&reach, v, &mut shifted);
        for (word, (r, s)) in reach.iter_mut().zip(&shifted).enumerate() {
            let mut fresh = s & !*r;
            *r |= s;
            while fresh != 0 {
                let bit = fresh.trailing_zeros() as usize;
                let sum = word * 64 + bit;
                if sum <= half {
                    first[sum] = idx as u32;
                }
                fresh &= fresh - 1;
            }
        }
        if let Some(last) = reach.last_mut() {
            let used = half % 64 + 1;
            if used < 64 {
                *last &= (1u64 << used) - 1;
            }
        }
    }

    let mut target = half;
    while first[target] == UNREACHED {
        target -= 1;
    }
    let mut signs = vec![1i8; ints.len()];
    while first[target] != EMPTY {
        let idx = first[target] as usize;
        signs[idx] = -1;
        target -= ints[idx] as usize;
    }
    Ok(PartitionResult::certified(
        w.weights(),
        signs,
        PartitionMethod::IntegerDP,
    ))
}

fn shift_left_into(src: &[u64], by: usize, dst: &mut [u64]) {
    let word_shift = by / 64;
    let bit_shift = by % 64;
    for (i, slot) in dst.iter_mut().enumerate() {
        *slot = if i < word_shift {
            0
        } else {
            let j = i - word_shift;
            let mut v = src[j] << bit_shift;
            if bit_shift > 0 && j > 0 {
                v |= src[j - 1] >> (64 - bit_shift);
            }
            v
        };
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct KkNode {
    value: f64,
    id: usize,
}

impl Eq for KkNode {}

impl Ord for KkNode {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value
            .total_cmp(&other.value)
            .then_with(|| other.id.cmp(&self.id))
    }
}

impl PartialOrd for KkNode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Karmarkar–Karp differencing: replace the two largest values by their
/// difference until one value is left. Signs come from two-coloring the
/// difference tree: the smaller operand lands opposite the larger one.
pub fn karmarkar_karp(w: &WeightSet) -> PartitionResult {
    let weights = w.weights();
    let n = weights.len();
    let mut heap: BinaryHeap<KkNode> = weights
        .iter()
        .enumerate()
        .map(|(id, &value)| KkNode { value, id })
        .collect();
    // parent link and relative sign for every node, leaves first
    let mut parent: Vec<Option<(usize, i8)>> = vec![None; n];
    loop {
        let big = heap.pop().expect("heap holds at least one node");
        let Some(small) = heap.pop() else {
            break;
        };
        let id = parent.len();
        parent.push(None);
        parent[big.id] = Some((id, 1));
        parent[small.id] = Some((id, -1));
        heap.push(KkNode {
            value: big.value - small.value,
            id,
        });
    }
    let mut sign_of = vec![0i8; parent.len()];
    for id in (0..parent.len()).rev() {
        sign_of[id] = match parent[id] {
            None => 1,
            Some((p, rel)) => sign_of[p] * rel,
        };
    }
    sign_of.truncate(n);
    PartitionResult::certified(weights, sign_of, PartitionMethod::KarmarkarKarp)
}

/// Explicit minima for one to four weights. With `c1 ≥ c2 ≥ c3 ≥ c4`:
/// three weights give `|c1 - c2 - c3|`; four weights give
/// `|c1 - c2 - c3 - c4|` when `c1 - c2 ≥ c3` and `|c3 - c1 + c2 - c4|` otherwise.
pub fn closed_form_small(w: &WeightSet) -> Result<PartitionResult, PartitionError> {
    let n = w.len();
    if !(1..=4).contains(&n) {
        return Err(PartitionError::WrongArity(n));
    }
    let weights = w.weights();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| weights[j].total_cmp(&weights[i]).then(i.cmp(&j)));
    let c: Vec<f64> = order.iter().map(|&i| weights[i]).collect();
    let sorted_signs: &[i8] = match n {
        1 => &[1],
        2 => &[1, -1],
        3 => &[1, -1, -1],
        _ if c[0] - c[1] >= c[2] => &[1, -1, -1, -1],
        _ => &[-1, 1, 1, -1],
    };
    let mut signs = vec![0i8; n];
    for (&idx, &s) in order.iter().zip(sorted_signs) {
        signs[idx] = s;
    }
    Ok(PartitionResult::certified(
        weights,
        signs,
        PartitionMethod::ClosedForm,
    ))
}

pub fn solve(w: &WeightSet, method: MethodChoice) -> Result<PartitionResult, PartitionError> {
    match method {
        MethodChoice::BruteForce => exact_bruteforce(w),
        MethodChoice::MeetInMiddle => exact_meet_in_middle(w),
        MethodChoice::IntegerDp { scale } => exact_integer_dp(w, scale),
        MethodChoice::KarmarkarKarp => Ok(karmarkar_karp(w)),
        MethodChoice::ClosedForm => closed_form_small(w),
        MethodChoice::Auto => {
            let n = w.len();
            if n <= 4 {
                return closed_form_small(w);
            }
            match exact_integer_dp(w, 1) {
                Ok(result) => return Ok(result),
                Err(PartitionError::NotIntegral { .. } | PartitionError::SumCapExceeded(..)) => {}
                Err(e) => return Err(e),
            }
            if n <= MEET_IN_MIDDLE_CAP {
                exact_meet_in_middle(w)
            } else {
                Err(PartitionError::NoExactMethod(n))
            }
        }
    }
}

/// Exact minimum for plain weights via [`MethodChoice::Auto`].
pub fn exact_minimum(weights: &[f64]) -> Result<PartitionResult, PartitionError> {
    solve(&WeightSet::new(weights.to_vec())?, MethodChoice::Auto)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ws(w: &[f64]) -> WeightSet {
        WeightSet::new(w.to_vec()).unwrap()
    }

    const FIVE: [f64; 5] = [5.0, 5.0, 6.0, 7.0, 9.0];

    /// Independent oracle: enumerate every sign vector directly.
    fn oracle(w: &[f64]) -> f64 {
        let n = w.len();
        (0u64..1 << n)
            .map(|mask| {
                (0..n)
                    .map(|i| if mask >> i & 1 == 1 { -w[i] } else { w[i] })
                    .sum::<f64>()
                    .abs()
            })
            .fold(f64::INFINITY, f64::min)
    }

    fn assert_certificate(w: &[f64], r: &PartitionResult) {
        let total: f64 = w.iter().sum();
        assert_eq!(r.signs.len(), w.len());
        assert!(r.signs.iter().all(|s| *s == 1 || *s == -1));
        assert!((signed_sum(w, &r.signs).abs() - r.m).abs() <= 1e-12 * total.max(1.0));
        assert_eq!(r.signs[0], 1);
        assert!(r.m >= 0.0);
    }

    #[test]
    fn five_weights_exact_and_heuristic() {
        let w = ws(&FIVE);
        for r in [
            exact_bruteforce(&w).unwrap(),
            exact_meet_in_middle(&w).unwrap(),
            exact_integer_dp(&w, 1).unwrap(),
        ] {
            assert_eq!(r.m, 0.0);
            assert_certificate(&FIVE, &r);
        }
        let kk = karmarkar_karp(&w);
        assert_eq!(kk.m, 2.0);
        assert_certificate(&FIVE, &kk);
    }

    #[test]
    fn brute_force_small_cases() {
        assert_eq!(exact_bruteforce(&ws(&[1.0, 0.5])).unwrap().m, 0.5);
        assert_eq!(exact_bruteforce(&ws(&[1.0, 1.0])).unwrap().m, 0.0);
        assert_eq!(exact_bruteforce(&ws(&[3.0])).unwrap().signs, vec![1]);
    }

    #[test]
    fn brute_force_tie_break_is_lexicographic() {
        // {1,1,1,1}: optimal vectors with ε_1=+1 are +−+−, +−−+, ++−−;
        // the smallest with −1 < +1 is +−−+
        let r = exact_bruteforce(&ws(&[1.0; 4])).unwrap();
        assert_eq!(r.signs, vec![1, -1, -1, 1]);
        assert_eq!(r.m, 0.0);
    }

    #[test]
    fn mask_order_matches_vector_order() {
        for a in 0u64..64 {
            for b in 0u64..64 {
                assert_eq!(
                    mask_lex_less(a, b),
                    lex_less(&signs_from_mask(6, a), &signs_from_mask(6, b))
                );
            }
        }
    }

    #[test]
    fn brute_force_cap() {
        let w = ws(&[1.0; 25]);
        assert_eq!(
            exact_bruteforce(&w),
            Err(PartitionError::TooManyWeights(25, 24))
        );
        assert!(exact_bruteforce_with_cap(&ws(&[1.0; 6]), 5).is_err());
    }

    #[test]
    fn meet_in_middle_edge_cases() {
        let r = exact_meet_in_middle(&ws(&[4.25])).unwrap();
        assert_eq!(r.m, 4.25);
        assert!(matches!(
            exact_meet_in_middle(&ws(&[1.0; 41])),
            Err(PartitionError::TooManyWeights(41, 40))
        ));
        let r = exact_meet_in_middle(&ws(&[1.0; 40])).unwrap();
        assert_eq!(r.m, 0.0);
    }

    #[test]
    fn integer_dp_cases() {
        assert_eq!(exact_integer_dp(&ws(&[4.0, 3.0, 2.0]), 1).unwrap().m, 1.0);
        assert!(matches!(
            exact_integer_dp(&ws(&[0.5, 1.0]), 1),
            Err(PartitionError::NotIntegral { .. })
        ));
        assert_eq!(exact_integer_dp(&ws(&[0.5, 1.0]), 2).unwrap().m, 0.5);
        assert!(matches!(
            exact_integer_dp_with_cap(&ws(&[100.0, 1.0]), 1, 100),
            Err(PartitionError::SumCapExceeded(101, 100))
        ));
        assert_eq!(
            exact_integer_dp(&ws(&[1.0]), 0),
            Err(PartitionError::ZeroScale)
        );
        // zeros and oversized items
        let r = exact_integer_dp(&ws(&[0.0, 10.0, 1.0, 0.0]), 1).unwrap();
        assert_eq!(r.m, 9.0);
        assert_certificate(&[0.0, 10.0, 1.0, 0.0], &r);
    }

    #[test]
    fn integer_dp_uses_exact_decimals() {
        let w = WeightSet::from_decimals(&["0.1", "0.2", "0.3"]).unwrap();
        assert_eq!(w.scaled_integers(10).unwrap(), vec![1, 2, 3]);
        let r = exact_integer_dp(&w, 10).unwrap();
        assert!(r.m < 1e-15);
        let w = WeightSet::from_decimals(&["1.5e1", "2.5E-1"]).unwrap();
        assert_eq!(w.scaled_integers(4).unwrap(), vec![60, 1]);
        assert!(w.scaled_integers(2).is_err());
        assert!(WeightSet::from_decimals(&["-1"]).is_err());
        assert!(WeightSet::from_decimals(&["abc"]).is_err());
        assert!(WeightSet::from_decimals(&["inf"]).is_err());
    }

    #[test]
    fn karmarkar_karp_small() {
        assert_eq!(karmarkar_karp(&ws(&[1.0, 1.0])).m, 0.0);
        assert_eq!(karmarkar_karp(&ws(&[7.0])).m, 7.0);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_small(&ws(&[6.0, 5.0, 2.0])).unwrap().m, 1.0);
        let r = closed_form_small(&ws(&[9.0, 7.0, 6.0, 5.0])).unwrap();
        assert_eq!(r.m, 1.0);
        assert_eq!(r.signs, vec![1, -1, -1, 1]);
        assert_eq!(
            closed_form_small(&ws(&[7.0, 2.0, 3.0, 1.0])).unwrap().m,
            1.0
        );
        assert_eq!(
            closed_form_small(&ws(&FIVE)),
            Err(PartitionError::WrongArity(5))
        );
        // signs map back to input order
        let r = closed_form_small(&ws(&[2.0, 6.0, 5.0])).unwrap();
        assert_eq!(r.signs, vec![1, -1, 1]);
    }

    #[test]
    fn solve_dispatch() {
        let r = solve(&ws(&FIVE), MethodChoice::Auto).unwrap();
        assert_eq!((r.m, r.method), (0.0, PartitionMethod::IntegerDP));
        let r = solve(&ws(&[1.0, 0.5]), MethodChoice::Auto).unwrap();
        assert_eq!((r.m, r.method), (0.5, PartitionMethod::ClosedForm));
        let r = solve(&ws(&[7.0]), MethodChoice::Auto).unwrap();
        assert_eq!((r.m, r.method), (7.0, PartitionMethod::ClosedForm));
        let r = solve(&ws(&[0.5, 1.5, 2.25, 3.0, 0.1]), MethodChoice::Auto).unwrap();
        assert_eq!(r.method, PartitionMethod::MeetInMiddle);
        let irrational: Vec<f64> = (1..=45).map(|k| std::f64::consts::PI * k as f64).collect();
        assert_eq!(
            solve(&ws(&irrational), MethodChoice::Auto),
            Err(PartitionError::NoExactMethod(45))
        );
        let r = solve(&ws(&FIVE), MethodChoice::KarmarkarKarp).unwrap();
        assert_eq!(r.method, PartitionMethod::KarmarkarKarp);
    }

    #[test]
    fn weight_validation() {
        assert_eq!(WeightSet::new(vec![]), Err(PartitionError::Empty));
        assert!(WeightSet::new(vec![1.0, -0.5]).is_err());
        assert!(WeightSet::new(vec![f64::NAN]).is_err());
    }

    #[test]
    fn oracle_equivalence_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for round in 0..300 {
            let n = rng.gen_range(1..=14);
            let integer = round % 2 == 0;
            let w: Vec<f64> = (0..n)
                .map(|_| {
                    if integer {
                        rng.gen_range(0..50) as f64
                    } else {
                        rng.gen_range(0.0..10.0)
                    }
                })
                .collect();
            let expect = oracle(&w);
            let tol = 1e-12 * w.iter().sum::<f64>().max(1.0);
            let set = ws(&w);
            let mut results = vec![
                exact_bruteforce(&set).unwrap(),
                exact_meet_in_middle(&set).unwrap(),
            ];
            if integer {
                results.push(exact_integer_dp(&set, 1).unwrap());
            }
            if n <= 4 {
                results.push(closed_form_small(&set).unwrap());
                results.push(karmarkar_karp(&set));
            }
            for r in &results {
                assert!((r.m - expect).abs() <= tol, "{:?} {w:?} {expect}", r.method);
                assert_certificate(&w, r);
            }
            assert!(karmarkar_karp(&set).m >= expect - tol);
        }
    }

    #[test]
    fn envelope_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=8);
            let w: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..5.0)).collect();
            let r = exact_bruteforce(&ws(&w)).unwrap();
            let total: f64 = w.iter().sum();
            assert!(r.m >= 0.0 && r.m <= total + 1e-12);
            let max = w.iter().cloned().fold(0.0, f64::max);
            // the heaviest weight against the rest
            assert!(r.m <= (2.0 * max - total).abs() + 1e-12);
        }
        assert_eq!(exact_bruteforce(&ws(&[0.0, 3.0, 0.0])).unwrap().m, 3.0);
        assert!(exact_bruteforce(&ws(&[1.0, 3.0])).unwrap().m < 4.0);
    }

    proptest! {
        #[test]
        fn permutation_changes_nothing_but_signs(
            w in prop::collection::vec(0.0f64..100.0, 1..12),
            seed in any::<u64>(),
        ) {
            use rand::seq::SliceRandom;
            let mut shuffled = w.clone();
            shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let a = solve(&ws(&w), MethodChoice::Auto).unwrap().m;
            let b = solve(&ws(&shuffled), MethodChoice::Auto).unwrap().m;
            prop_assert!((a - b).abs() <= 1e-12 * w.iter().sum::<f64>().max(1.0));
        }

        #[test]
        fn scale_equivariance(
            w in prop::collection::vec(0u32..100, 1..12),
            alpha in 0.01f64..100.0,
        ) {
            let w: Vec<f64> = w.into_iter().map(f64::from).collect();
            let scaled: Vec<f64> = w.iter().map(|x| x * alpha).collect();
            let tol = 1e-12 * alpha * w.iter().sum::<f64>().max(1.0) * 4.0;
            for method in [MethodChoice::Auto, MethodChoice::BruteForce, MethodChoice::MeetInMiddle, MethodChoice::KarmarkarKarp] {
                let base = solve(&ws(&w), method).unwrap().m;
                let big = solve(&ws(&scaled), method).unwrap().m;
                prop_assert!((big - alpha * base).abs() <= tol, "{:?}", method);
            }
        }
    }
}
