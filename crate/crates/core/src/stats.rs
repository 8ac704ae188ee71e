//! Partition statistics built on the seaweed index.
//!
//! For a partition `λ` of `n` the two basic statistics are the index of
//! `λ / 1|1|...|1` ([`ind_ones`]) and the index of the maximal parabolic type
//! `λ / n` ([`ind_maxpar`]). A *Frobenius partition* is one with
//! `ind_maxpar = 0`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::meander::{index_dk, SeaweedType};
use crate::partition::{
    conjugate, enumerate_partitions, for_each_partition_with_parts, reverse, Composition,
    Partition, Partitions,
};
use crate::series::a300574_gf;
use crate::winding::WindingEngine;

/// Index of `λ / 1^n`: `n - 1 - sum floor(λ_i / 2)`. With an all-ones bottom
/// the meander is a union of top arcs, so every arc merges two singleton
/// paths.
pub fn ind_ones(lambda: &Partition) -> Result<u32> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    Ok(lambda.weight() - 1 - lambda.arc_count())
}

/// Index of the maximal parabolic type `λ / w(λ)`, computed by winding.
pub fn ind_maxpar(lambda: &Partition) -> Result<u32> {
    ind_maxpar_with(&mut WindingEngine::new(), lambda.parts())
}

/// [`ind_maxpar`] on raw parts with a caller-owned engine.
pub fn ind_maxpar_with(engine: &mut WindingEngine, parts: &[u32]) -> Result<u32> {
    if parts.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let n: u32 = parts.iter().sum();
    engine.index(parts, &[n])
}

/// Counts of partitions of each `n` by the value of [`ind_ones`].
/// `cell(n, i)` is the number of `λ ⊢ n` with `ind_ones(λ) = i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OnesTable {
    pub n_max: u32,
    pub i_max: u32,
    /// `cells[n - 1][i]` for `n` in `1..=n_max`, `i` in `0..i_max`.
    pub cells: Vec<Vec<u64>>,
}

impl OnesTable {
    pub fn cell(&self, n: u32, i: u32) -> u64 {
        if n == 0 || n > self.n_max || i >= self.i_max {
            return 0;
        }
        self.cells[(n - 1) as usize][i as usize]
    }

    pub fn row(&self, n: u32) -> &[u64] {
        &self.cells[(n - 1) as usize]
    }

    /// Header `n,i=0,i=1,...` followed by one row per `n`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n");
        for i in 0..self.i_max {
            out.push_str(&format!(",i={i}"));
        }
        out.push('\n');
        for (idx, row) in self.cells.iter().enumerate() {
            out.push_str(&(idx + 1).to_string());
            for c in row {
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Number of partitions of `n` at each [`ind_ones`] value `0..n`.
pub fn ones_distribution(n: u32) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; n.max(1) as usize];
    let mut it = Partitions::new(n, None);
    while let Some(parts) = it.advance() {
        if parts.is_empty() {
            break;
        }
        let arcs: u32 = parts.iter().map(|p| p / 2).sum();
        let idx = (n - 1 - arcs) as usize;
        bump(&mut counts[idx])?;
    }
    Ok(counts)
}

pub fn ones_table(n_max: u32, i_max: u32) -> Result<OnesTable> {
    if n_max == 0 || i_max == 0 {
        return Err(Error::InvalidArgument("n_max and i_max must be positive".into()));
    }
    let cells = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let dist = ones_distribution(n)?;
            Ok((0..i_max as usize)
                .map(|i| dist.get(i).copied().unwrap_or(0))
                .collect())
        })
        .collect::<Result<Vec<Vec<u64>>>>()?;
    Ok(OnesTable { n_max, i_max, cells })
}

/// `c^i_n`: the number of `λ ⊢ n` with `ind_ones(λ) = n - i`.
pub fn c_in(i: u32, n: u32) -> Result<u64> {
    if n == 0 || i > n || i == 0 {
        return Ok(0);
    }
    let dist = ones_distribution(n)?;
    Ok(dist[(n - i) as usize])
}

/// Stable value of `c^i_n`, checked to be constant for `n` in
/// `[max(3i-3, 1), 3i+5]`.
pub fn stabilized_c(i: u32) -> Result<u64> {
    if i == 0 {
        return Err(Error::InvalidArgument("i must be at least 1".into()));
    }
    let from = (3 * i).saturating_sub(3).max(1);
    let to = 3 * i + 5;
    let values = (from..=to).map(|n| c_in(i, n)).collect::<Result<Vec<_>>>()?;
    if values.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::NotStabilized { i, from, to, values });
    }
    Ok(values[0])
}

/// True when some prefix `a_1..a_i` and suffix `a_j..a_m` with `i < j - 1`
/// have equal sums; such a maximal parabolic type is never Frobenius.
pub fn lemma_sum_applies(parts: &[u32]) -> bool {
    let m = parts.len();
    if m < 3 {
        return false;
    }
    // prefix[k] = a_1 + ... + a_k
    let mut prefix = Vec::with_capacity(m + 1);
    prefix.push(0u64);
    for &p in parts {
        prefix.push(prefix.last().unwrap() + u64::from(p));
    }
    let total = prefix[m];
    // Need 1 <= i < k <= m - 1 (k = j - 1) with prefix[i] + prefix[k] = total.
    let (mut i, mut k) = (1usize, m - 1);
    while i < k {
        let s = prefix[i] + prefix[k];
        match s.cmp(&total) {
            std::cmp::Ordering::Equal => return true,
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => k -= 1,
        }
    }
    false
}

/// True when more than two parts are odd; such a maximal parabolic type has
/// at least two open paths and is never Frobenius.
pub fn lemma_odd_applies(parts: &[u32]) -> bool {
    parts.iter().filter(|&&p| p % 2 == 1).count() > 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusCount {
    pub n: u32,
    pub d: u32,
    pub count: u64,
}

/// Number of Frobenius partitions of `n` with all parts at most `d`.
pub fn frobenius_count(n: u32, d: u32) -> Result<FrobeniusCount> {
    frobenius_count_with(&mut WindingEngine::new(), n, d)
}

fn frobenius_count_with(engine: &mut WindingEngine, n: u32, d: u32) -> Result<FrobeniusCount> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument("n and d must be positive".into()));
    }
    let mut count = 0u64;
    let mut it = Partitions::new(n, Some(d));
    while let Some(parts) = it.advance() {
        // Cheap rejection; the index check below would reject these anyway.
        if lemma_odd_applies(parts) {
            continue;
        }
        if engine.index(parts, &[n])? == 0 {
            bump(&mut count)?;
        }
    }
    Ok(FrobeniusCount { n, d, count })
}

/// The Frobenius partitions themselves, in reverse lexicographic order.
pub fn frobenius_partitions(n: u32, d: u32) -> Result<Vec<Partition>> {
    let mut engine = WindingEngine::new();
    let mut out = Vec::new();
    for lambda in Partitions::new(n, Some(d)) {
        if !lambda.is_empty() && ind_maxpar_with(&mut engine, lambda.parts())? == 0 {
            out.push(lambda);
        }
    }
    Ok(out)
}

/// `|P(n, d)|` for every `n` in `1..=n_max`, evaluated in parallel and
/// returned in `n` order.
pub fn frobenius_counts(d: u32, n_max: u32) -> Result<Vec<FrobeniusCount>> {
    // Large n dominate; schedule them first.
    let mut out = (1..=n_max)
        .rev()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map_init(WindingEngine::new, |engine, n| frobenius_count_with(engine, n, d))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|c| c.n);
    Ok(out)
}

/// Eventual periodicity of a sequence `f(first_n), f(first_n + 1), ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Periodicity {
    pub onset: u32,
    pub period: u32,
    pub values: Vec<u64>,
    pub verified_up_to: u32,
}

/// Smallest period `p` (then smallest onset for it) such that the tail from
/// the onset satisfies `f(n + p) = f(n)` and spans at least `min_repeats`
/// full periods.
pub fn detect_period(values: &[u64], first_n: u32, min_repeats: usize) -> Option<Periodicity> {
    let len = values.len();
    let min_repeats = min_repeats.max(1);
    if len == 0 {
        return None;
    }
    for p in 1..=len / min_repeats {
        let onset_idx = (0..len - p)
            .rev()
            .find(|&k| values[k] != values[k + p])
            .map_or(0, |k| k + 1);
        if len - onset_idx >= min_repeats * p {
            return Some(Periodicity {
                onset: first_n + onset_idx as u32,
                period: p as u32,
                values: values[onset_idx..onset_idx + p].to_vec(),
                verified_up_to: first_n + len as u32 - 1,
            });
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodReport {
    pub d: u32,
    pub onset: u32,
    pub period: u32,
    pub values: Vec<u64>,
    pub verified_up_to: u32,
}

/// Detects the eventual period of `n -> |P(n, d)|` over `n` in `1..=n_max`.
pub fn frobenius_period(d: u32, n_max: u32, min_repeats: usize) -> Result<Option<PeriodReport>> {
    let counts: Vec<u64> = frobenius_counts(d, n_max)?.iter().map(|c| c.count).collect();
    Ok(detect_period(&counts, 1, min_repeats).map(|p| PeriodReport {
        d,
        onset: p.onset,
        period: p.period,
        values: p.values,
        verified_up_to: p.verified_up_to,
    }))
}

/// Published eventual values of `|P(n, d)|`: from `onset` on, the values
/// cycle through `values`. `stated_period` is the period length given in the
/// accompanying prose, which for d = 6, 7 differs from `values.len()`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceTail {
    pub d: u32,
    pub onset: u32,
    pub values: &'static [u64],
    pub stated_period: u32,
}

pub const REFERENCE_TAILS: &[ReferenceTail] = &[
    ReferenceTail { d: 1, onset: 3, values: &[0], stated_period: 1 },
    ReferenceTail { d: 2, onset: 5, values: &[1, 0], stated_period: 2 },
    ReferenceTail { d: 3, onset: 13, values: &[2, 0], stated_period: 2 },
    ReferenceTail { d: 4, onset: 17, values: &[4, 2, 3, 0], stated_period: 4 },
    ReferenceTail { d: 5, onset: 21, values: &[7, 3, 5, 3], stated_period: 4 },
    ReferenceTail {
        d: 6,
        onset: 37,
        values: &[14, 5, 9, 3, 11, 5, 11, 3, 12, 5, 8, 3],
        stated_period: 14,
    },
    ReferenceTail {
        d: 7,
        onset: 41,
        values: &[19, 9, 18, 7, 19, 9, 17, 7, 20, 9, 17, 7],
        stated_period: 14,
    },
];

pub fn reference_tail(d: u32) -> Option<&'static ReferenceTail> {
    REFERENCE_TAILS.iter().find(|t| t.d == d)
}

/// Comparison of computed counts against a [`ReferenceTail`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailCheck {
    pub d: u32,
    /// Every computed `|P(n, d)|` with `onset <= n` agrees with the cycled
    /// reference values.
    pub matches: bool,
    /// First `n` at which the computed value disagrees, if any.
    pub first_mismatch: Option<u32>,
    pub reference_onset: u32,
    pub reference_values: Vec<u64>,
    pub stated_period: u32,
    pub detected_period: Option<u32>,
    pub detected_onset: Option<u32>,
    /// The detected minimal period differs from the prose's stated period.
    pub period_discrepancy: bool,
}

/// Checks `counts` (indexed by `n` starting at 1) against the reference tail
/// for `d`; `None` when no reference exists for `d`.
pub fn check_reference_tail(
    d: u32,
    counts: &[FrobeniusCount],
    min_repeats: usize,
) -> Option<TailCheck> {
    let tail = reference_tail(d)?;
    let values: Vec<u64> = counts.iter().map(|c| c.count).collect();
    let period = tail.values.len() as u32;
    let first_mismatch = counts
        .iter()
        .filter(|c| c.n >= tail.onset)
        .find(|c| c.count != tail.values[((c.n - tail.onset) % period) as usize])
        .map(|c| c.n);
    let first_n = counts.first().map_or(1, |c| c.n);
    let detected = detect_period(&values, first_n, min_repeats);
    let detected_period = detected.as_ref().map(|p| p.period);
    Some(TailCheck {
        d,
        matches: first_mismatch.is_none() && counts.last().is_some_and(|c| c.n >= tail.onset),
        first_mismatch,
        reference_onset: tail.onset,
        reference_values: tail.values.to_vec(),
        stated_period: tail.stated_period,
        detected_period,
        detected_onset: detected.as_ref().map(|p| p.onset),
        period_discrepancy: detected_period.is_some_and(|p| p != tail.stated_period),
    })
}

/// The partitions `1^1 4^{2(m-k)} 8^k`, `k = 0..=m`, of `8m + 1`.
pub fn d8_witnesses(m: u32) -> Vec<Partition> {
    (0..=m)
        .map(|k| {
            let mut parts = vec![8; k as usize];
            parts.extend(std::iter::repeat_n(4, 2 * (m - k) as usize));
            parts.push(1);
            Partition::new(parts).expect("witness parts are non-increasing")
        })
        .collect()
}

/// Number of `λ ⊢ n` with `index(λ / Rev(λ)) = n - 1`.
pub fn rev_statistic(n: u32) -> Result<u64> {
    pair_statistic(n, reverse)
}

/// Number of `λ ⊢ n` with `index(λ / λ^C) = n - 1`.
pub fn conj_statistic(n: u32) -> Result<u64> {
    pair_statistic(n, |lambda| conjugate(lambda).as_composition())
}

fn pair_statistic<F: Fn(&Partition) -> Composition>(n: u32, partner: F) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let mut count = 0u64;
    for lambda in Partitions::new(n, None) {
        let s = SeaweedType::new(lambda.as_composition(), partner(&lambda))?;
        if index_dk(&s)? == n - 1 {
            bump(&mut count)?;
        }
    }
    Ok(count)
}

/// Number of positive divisors of `n`.
pub fn divisor_count(n: u32) -> u64 {
    (1..=n).filter(|k| n.is_multiple_of(*k)).count() as u64
}

/// Self-conjugate partitions of `n`, by scanning for fixed points of
/// conjugation.
pub fn self_conjugate_count(n: u32) -> u64 {
    enumerate_partitions(n, None)
        .iter()
        .filter(|l| conjugate(l) == **l)
        .count() as u64
}

/// Counts of odd-part partitions of `n` by parity of [`ind_maxpar`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityTally {
    pub n: u32,
    pub even_count: u64,
    pub odd_count: u64,
}

impl ParityTally {
    pub fn signed_difference(&self) -> i128 {
        i128::from(self.even_count) - i128::from(self.odd_count)
    }

    pub fn abs_difference(&self) -> u64 {
        self.even_count.abs_diff(self.odd_count)
    }
}

pub fn conjecture_tally(n: u32) -> Result<ParityTally> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let odd: Vec<u32> = (1..=n).rev().filter(|p| p % 2 == 1).collect();
    let mut engine = WindingEngine::new();
    let mut tally = ParityTally {
        n,
        even_count: 0,
        odd_count: 0,
    };
    let mut failure = None;
    for_each_partition_with_parts(n, &odd, |parts| {
        if failure.is_some() {
            return;
        }
        let result = engine.index(parts, &[n]).and_then(|ind| {
            if ind % 2 == 0 {
                bump(&mut tally.even_count)
            } else {
                bump(&mut tally.odd_count)
            }
        });
        if let Err(e) = result {
            failure = Some(e);
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(tally),
    }
}

/// One row of the parity-versus-product comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub n: u32,
    pub e_n: u64,
    pub o_n: u64,
    pub abs_diff: u64,
    pub signed_diff: i128,
    pub coefficient: i128,
    pub matches: bool,
}

/// Compares `|e_n - o_n|` with the coefficient of `q^n` in
/// `prod_k 1 / (1 + (-1)^k q^{2k-1})` for `n` in `1..=n_max`.
pub fn conjecture_rows(n_max: u32) -> Result<Vec<ConjectureRow>> {
    let gf = a300574_gf(n_max as usize)?;
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let t = conjecture_tally(n)?;
            let coefficient = gf.coeff(n as usize);
            Ok(ConjectureRow {
                n,
                e_n: t.even_count,
                o_n: t.odd_count,
                abs_diff: t.abs_difference(),
                signed_diff: t.signed_difference(),
                coefficient,
                matches: i128::from(t.abs_difference()) == coefficient,
            })
        })
        .collect()
}

fn bump(counter: &mut u64) -> Result<()> {
    *counter = counter.checked_add(1).ok_or(Error::Overflow("count"))?;
    Ok(())
}
