//! Partitions, compositions, two-colored partitions, and the structural maps
//! between them (conjugate, reverse, and the colored-partition maps `phi` and
//! `psi`).
//!
//! Text forms:
//! - partitions: `4,2,1`, or frequency notation `1^2 2^1 4^3`
//! - compositions: `1|2|3`
//!
//! The empty partition and empty composition print as the empty string.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on the number of parts the frequency-notation parser will
/// expand, so hostile input like `1^4000000000` is rejected instead of
/// allocating.
pub const MAX_PARSED_PARTS: usize = 1 << 20;

/// A non-increasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
    weight: u32,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidPartition {
            input: join(&parts, ","),
            reason,
        };
        if let Some(p) = parts.iter().find(|&&p| p == 0) {
            return Err(invalid(format!("part {p} is not positive")));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(invalid(format!("parts {} < {} are not non-increasing", w[0], w[1])));
        }
        let weight = checked_weight(&parts).ok_or_else(|| invalid("weight overflows".into()))?;
        Ok(Partition { parts, weight })
    }

    /// Sorts `parts` into non-increasing order first.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            weight: 0,
        }
    }

    /// `1^n`.
    pub fn ones(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
            weight: n,
        }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    /// Frequency view: `(value, multiplicity)` pairs in increasing value order,
    /// omitting values that do not occur.
    pub fn frequencies(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((v, f)) if *v == p => *f += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Frequency notation, e.g. `1^2 2^1 4^3`.
    pub fn to_frequency_string(&self) -> String {
        self.frequencies()
            .iter()
            .map(|(v, f)| format!("{v}^{f}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Number of arcs in the top half of the meander built from these parts:
    /// `sum floor(part / 2)`.
    pub fn arc_count(&self) -> u32 {
        self.parts.iter().map(|p| p / 2).sum()
    }

    pub fn as_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
            weight: self.weight,
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts, ","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let invalid = |reason: String| Error::InvalidPartition {
            input: s.to_string(),
            reason,
        };
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        if trimmed.contains('^') {
            let mut parts = Vec::new();
            for token in trimmed.split_whitespace() {
                let (value, freq) = token
                    .split_once('^')
                    .ok_or_else(|| invalid(format!("token `{token}` is not of the form v^f")))?;
                let value = parse_positive(value).map_err(invalid)?;
                let freq: usize = freq
                    .parse()
                    .map_err(|_| invalid(format!("bad multiplicity `{freq}`")))?;
                if parts.len() + freq > MAX_PARSED_PARTS {
                    return Err(invalid(format!("more than {MAX_PARSED_PARTS} parts")));
                }
                parts.extend(std::iter::repeat_n(value, freq));
            }
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let weight = checked_weight(&parts).ok_or_else(|| invalid("weight overflows".into()))?;
            return Ok(Partition { parts, weight });
        }
        let parts = trimmed
            .split(',')
            .map(parse_positive)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(invalid)?;
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(invalid(format!("parts {} < {} are not non-increasing", w[0], w[1])));
        }
        let weight = checked_weight(&parts).ok_or_else(|| invalid("weight overflows".into()))?;
        Ok(Partition { parts, weight })
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// An ordered sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition {
    parts: Vec<u32>,
    weight: u32,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidComposition {
            input: join(&parts, "|"),
            reason,
        };
        if let Some(p) = parts.iter().find(|&&p| p == 0) {
            return Err(invalid(format!("part {p} is not positive")));
        }
        let weight = checked_weight(&parts).ok_or_else(|| invalid("weight overflows".into()))?;
        Ok(Composition { parts, weight })
    }

    pub fn empty() -> Self {
        Composition {
            parts: Vec::new(),
            weight: 0,
        }
    }

    /// The single-block composition `n`.
    pub fn single(n: u32) -> Self {
        assert!(n > 0, "single-block composition needs a positive part");
        Composition {
            parts: vec![n],
            weight: n,
        }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        let weight = parts.iter().sum();
        Composition { parts, weight }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn reversed(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition {
            parts,
            weight: self.weight,
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts, "|"))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Composition::empty());
        }
        let invalid = |reason: String| Error::InvalidComposition {
            input: s.to_string(),
            reason,
        };
        let parts = trimmed
            .split('|')
            .map(parse_positive)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(invalid)?;
        let weight = checked_weight(&parts).ok_or_else(|| invalid("weight overflows".into()))?;
        Ok(Composition { parts, weight })
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        p.as_composition()
    }
}

/// Part color of a two-colored partition. Blue sorts before red.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Red,
}

/// A partition into parts of two kinds, stored in canonical order: value
/// descending, blue before red at equal value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColoredPartition {
    parts: Vec<(u32, Color)>,
}

impl ColoredPartition {
    pub fn new(mut parts: Vec<(u32, Color)>) -> Result<Self> {
        if parts.iter().any(|&(v, _)| v == 0) {
            return Err(Error::InvalidArgument(
                "colored partition parts must be positive".into(),
            ));
        }
        parts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        Ok(ColoredPartition { parts })
    }

    pub fn empty() -> Self {
        ColoredPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[(u32, Color)] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|&(v, _)| v).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self
            .parts
            .iter()
            .map(|(v, c)| match c {
                Color::Blue => format!("{v}b"),
                Color::Red => format!("{v}r"),
            })
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "({s})")
    }
}

/// Iterator over the partitions of `n` in reverse lexicographic order,
/// optionally restricted to parts no larger than a bound.
///
/// Also usable without allocation through [`Partitions::advance`].
#[derive(Debug, Clone)]
pub struct Partitions {
    parts: Vec<u32>,
    started: bool,
    done: bool,
}

impl Partitions {
    pub fn new(n: u32, max_part: Option<u32>) -> Self {
        let bound = max_part.map_or(n, |d| d.min(n));
        let mut parts = Vec::new();
        let mut done = false;
        if n > 0 {
            match n.checked_div(bound) {
                None => done = true,
                Some(q) => {
                    parts.resize(q as usize, bound);
                    if !n.is_multiple_of(bound) {
                        parts.push(n % bound);
                    }
                }
            }
        }
        Partitions {
            parts,
            started: false,
            done,
        }
    }

    /// Steps to the next partition and returns its parts, or `None` once the
    /// sequence is exhausted.
    pub fn advance(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.parts);
        }
        let mut remainder = 0u32;
        while self.parts.last() == Some(&1) {
            self.parts.pop();
            remainder += 1;
        }
        let Some(last) = self.parts.pop() else {
            self.done = true;
            return None;
        };
        let k = last - 1;
        remainder += last;
        while remainder >= k {
            self.parts.push(k);
            remainder -= k;
        }
        if remainder > 0 {
            self.parts.push(remainder);
        }
        Some(&self.parts)
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.advance()
            .map(|parts| Partition::from_parts_unchecked(parts.to_vec()))
    }
}

/// All partitions of `n` (with every part at most `max_part`, if given) in
/// reverse lexicographic order. `n = 0` yields only the empty partition.
pub fn enumerate_partitions(n: u32, max_part: Option<u32>) -> Vec<Partition> {
    Partitions::new(n, max_part).collect()
}

/// Calls `visit` on every partition of `n` whose parts all lie in `allowed`.
/// `allowed` must be sorted in decreasing order. Partitions are visited in
/// reverse lexicographic order.
pub fn for_each_partition_with_parts<F: FnMut(&[u32])>(n: u32, allowed: &[u32], mut visit: F) {
    debug_assert!(allowed.windows(2).all(|w| w[0] > w[1]));
    let mut stack = Vec::new();
    fn rec<F: FnMut(&[u32])>(rest: u32, allowed: &[u32], stack: &mut Vec<u32>, visit: &mut F) {
        if rest == 0 {
            visit(stack);
            return;
        }
        for (idx, &part) in allowed.iter().enumerate() {
            if part <= rest {
                stack.push(part);
                rec(rest - part, &allowed[idx..], stack, visit);
                stack.pop();
            }
        }
    }
    rec(n, allowed, &mut stack, &mut visit);
}

/// Partitions of `n` into odd parts, reverse lexicographic order.
pub fn odd_part_partitions(n: u32) -> Vec<Partition> {
    let odd: Vec<u32> = (1..=n).rev().filter(|p| p % 2 == 1).collect();
    let mut out = Vec::new();
    for_each_partition_with_parts(n, &odd, |parts| {
        out.push(Partition::from_parts_unchecked(parts.to_vec()))
    });
    out
}

/// All compositions of `n` (2^(n-1) of them for n >= 1; one empty composition
/// for n = 0).
pub fn enumerate_compositions(n: u32) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    assert!(n <= 30, "enumerate_compositions is exhaustive; n = {n} is too large");
    // Bit k of the mask set means "cut after position k+1".
    (0u32..1 << (n - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for k in 0..n - 1 {
                if mask & (1 << k) != 0 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Composition::from_parts_unchecked(parts)
        })
        .collect()
}

/// Ferrers-diagram transpose.
pub fn conjugate(lambda: &Partition) -> Partition {
    let parts = lambda.parts();
    let Some(&largest) = parts.first() else {
        return Partition::empty();
    };
    let conj = (1..=largest)
        .map(|k| parts.iter().take_while(|&&p| p >= k).count() as u32)
        .collect();
    Partition::from_parts_unchecked(conj)
}

/// `(λ_m, ..., λ_1)` as a composition.
pub fn reverse(lambda: &Partition) -> Composition {
    lambda.as_composition().reversed()
}

/// Every two-colored partition of `i` exactly once: underlying partitions in
/// reverse lexicographic order, then by number of blue parts per value.
pub fn enumerate_colored_partitions(i: u32) -> Vec<ColoredPartition> {
    let mut out = Vec::new();
    for lambda in Partitions::new(i, None) {
        // Per distinct value (descending) pick how many copies are blue.
        let groups: Vec<(u32, usize)> = lambda.frequencies().into_iter().rev().collect();
        let mut blues = vec![0usize; groups.len()];
        loop {
            let mut parts = Vec::with_capacity(lambda.len());
            for (&(value, freq), &b) in groups.iter().zip(&blues) {
                parts.extend(std::iter::repeat_n((value, Color::Blue), b));
                parts.extend(std::iter::repeat_n((value, Color::Red), freq - b));
            }
            out.push(ColoredPartition { parts });
            // Odometer increment over blues[k] in 0..=freq_k.
            let mut wrapped = true;
            for k in (0..groups.len()).rev() {
                if blues[k] < groups[k].1 {
                    blues[k] += 1;
                    wrapped = false;
                    break;
                }
                blues[k] = 0;
            }
            if wrapped {
                break;
            }
        }
    }
    out
}

/// Blue `v` becomes `2v + 1`, red `v` becomes `2v`. The canonical colored
/// order makes the image already non-increasing.
pub fn phi(lambda: &ColoredPartition) -> Partition {
    let parts = lambda
        .parts()
        .iter()
        .map(|&(v, c)| match c {
            Color::Blue => 2 * v + 1,
            Color::Red => 2 * v,
        })
        .collect();
    Partition::from_parts_unchecked(parts)
}

/// Inverse of [`phi`] on partitions whose parts are all at least 2.
pub fn phi_inverse(mu: &Partition) -> Option<ColoredPartition> {
    if mu.parts().iter().any(|&p| p < 2) {
        return None;
    }
    let parts = mu
        .parts()
        .iter()
        .map(|&p| {
            if p % 2 == 1 {
                ((p - 1) / 2, Color::Blue)
            } else {
                (p / 2, Color::Red)
            }
        })
        .collect();
    ColoredPartition::new(parts).ok()
}

/// Deletes every part equal to 1.
pub fn psi(lambda: &Partition) -> Partition {
    let parts = lambda.parts().iter().copied().filter(|&p| p != 1).collect();
    Partition::from_parts_unchecked(parts)
}

/// Appends `1`s until the weight reaches `n`; `None` if already heavier.
pub fn pad_with_ones(lambda: &Partition, n: u32) -> Option<Partition> {
    let deficit = n.checked_sub(lambda.weight())?;
    let mut parts = lambda.parts().to_vec();
    parts.extend(std::iter::repeat_n(1, deficit as usize));
    Some(Partition::from_parts_unchecked(parts))
}

fn parse_positive(token: &str) -> std::result::Result<u32, String> {
    let t = token.trim();
    if t.is_empty() {
        return Err("empty part".into());
    }
    match t.parse::<i64>() {
        Ok(v) if v <= 0 => Err(format!("part {v} is not positive")),
        Ok(v) => u32::try_from(v).map_err(|_| format!("part {v} is too large")),
        Err(_) => Err(format!("`{t}` is not an integer")),
    }
}

fn checked_weight(parts: &[u32]) -> Option<u32> {
    parts.iter().try_fold(0u32, |acc, &p| acc.checked_add(p))
}

fn join(parts: &[u32], sep: &str) -> String {
    parts
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partitions_of_four_in_reverse_lex_order() {
        let got: Vec<Vec<u32>> = enumerate_partitions(4, None)
            .into_iter()
            .map(Into::into)
            .collect();
        assert_eq!(
            got,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
    }

    #[test]
    fn partitions_of_zero_is_the_empty_partition() {
        assert_eq!(enumerate_partitions(0, None), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(0, Some(3)), vec![Partition::empty()]);
    }

    #[test]
    fn bounded_partitions_respect_the_bound() {
        let all = enumerate_partitions(10, Some(4));
        assert!(all.iter().all(|l| l.largest_part().unwrap() <= 4));
        assert_eq!(all[0].parts(), &[4, 4, 2]);
        assert_eq!(all.last().unwrap().parts(), &[1; 10]);
    }

    #[test]
    fn partition_counts_match_known_values() {
        let known = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &expected) in known.iter().enumerate() {
            assert_eq!(Partitions::new(n as u32, None).count(), expected, "p({n})");
        }
        assert_eq!(Partitions::new(40, None).count(), 37338);
    }

    #[test]
    fn odd_part_partitions_match_distinct_part_counts() {
        // Euler: odd-part partitions are equinumerous with distinct-part ones.
        let q = [1usize, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10];
        for (n, &expected) in q.iter().enumerate() {
            assert_eq!(odd_part_partitions(n as u32).len(), expected);
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p(&[4, 2, 1])), p(&[3, 2, 1, 1]));
        assert_eq!(conjugate(&Partition::ones(5)), p(&[5]));
        assert_eq!(conjugate(&p(&[2, 1])), p(&[2, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(reverse(&p(&[3, 2, 1])).to_string(), "1|2|3");
        assert_eq!(reverse(&p(&[2, 2])).to_string(), "2|2");
        assert!(reverse(&Partition::empty()).is_empty());
    }

    #[test]
    fn colored_partitions_of_two() {
        let got = enumerate_colored_partitions(2);
        assert_eq!(got.len(), 5);
        let expected = [
            vec![(2, Color::Red)],
            vec![(2, Color::Blue)],
            vec![(1, Color::Red), (1, Color::Red)],
            vec![(1, Color::Blue), (1, Color::Blue)],
            vec![(1, Color::Blue), (1, Color::Red)],
        ];
        for parts in expected {
            assert!(got.contains(&ColoredPartition::new(parts).unwrap()));
        }
        assert_eq!(enumerate_colored_partitions(0), vec![ColoredPartition::empty()]);
    }

    #[test]
    fn phi_and_psi_examples() {
        let br = ColoredPartition::new(vec![(1, Color::Red), (1, Color::Blue)]).unwrap();
        assert_eq!(phi(&br), p(&[3, 2]));
        assert_eq!(phi(&ColoredPartition::empty()), Partition::empty());
        assert_eq!(phi_inverse(&p(&[3, 2])), Some(br));
        assert_eq!(phi_inverse(&p(&[3, 1])), None);
        assert_eq!(psi(&p(&[3, 2, 1, 1])), p(&[3, 2]));
        assert_eq!(psi(&Partition::ones(3)), Partition::empty());
    }

    #[test]
    fn parse_partition_forms() {
        assert_eq!("4,2,1".parse::<Partition>().unwrap(), p(&[4, 2, 1]));
        assert_eq!(" 4, 2 ,1 ".parse::<Partition>().unwrap(), p(&[4, 2, 1]));
        assert_eq!(
            "1^2 2^1 4^3".parse::<Partition>().unwrap(),
            p(&[4, 4, 4, 2, 1, 1])
        );
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("3,-1".parse::<Partition>().is_err());
        assert!("0^2".parse::<Partition>().is_err());
        assert!("1^99999999999".parse::<Partition>().is_err());
        assert!("3,,1".parse::<Partition>().is_err());
        assert!("4000000000,4000000000".parse::<Partition>().is_err());
    }

    #[test]
    fn parse_composition() {
        let c: Composition = "1|2|3".parse().unwrap();
        assert_eq!(c.parts(), &[1, 2, 3]);
        assert_eq!(c.weight(), 6);
        assert!("1|0".parse::<Composition>().is_err());
        assert!("1||2".parse::<Composition>().is_err());
        assert!("".parse::<Composition>().unwrap().is_empty());
    }

    #[test]
    fn frequency_view() {
        let l = p(&[4, 4, 4, 2, 1, 1]);
        assert_eq!(l.frequencies(), vec![(1, 2), (2, 1), (4, 3)]);
        assert_eq!(l.to_frequency_string(), "1^2 2^1 4^3");
        assert_eq!(l.to_frequency_string().parse::<Partition>().unwrap(), l);
    }

    #[test]
    fn compositions_of_four() {
        let all = enumerate_compositions(4);
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|c| c.weight() == 4));
        let mut strings: Vec<String> = all.iter().map(|c| c.to_string()).collect();
        strings.sort();
        strings.dedup();
        assert_eq!(strings.len(), 8);
    }
}
