//! Seaweed types, their meanders, and the component-count index.
//!
//! A seaweed type `a_1|...|a_m / b_1|...|b_t` is a pair of compositions of the
//! same `n`. Its meander has vertices `1..=n`; inside a top block of size `a`
//! starting after offset `s`, vertices `j` and `k` are joined when
//! `j + k = 2s + a + 1`, and the bottom blocks are wired the same way. The
//! index is `2C + P - 1` where `C` counts cycles and `P` counts paths
//! (isolated vertices included).

use std::fmt;
use std::str::FromStr;

use num_integer::gcd;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Side};
use crate::partition::Composition;

/// A pair of equal-weight compositions `top / bottom`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeaweedType {
    top: Composition,
    bottom: Composition,
}

impl SeaweedType {
    pub fn new(top: Composition, bottom: Composition) -> Result<Self> {
        if top.weight() != bottom.weight() {
            return Err(Error::WeightMismatch {
                top: top.weight().into(),
                bottom: bottom.weight().into(),
            });
        }
        Ok(SeaweedType { top, bottom })
    }

    pub fn from_parts(top: &[u32], bottom: &[u32]) -> Result<Self> {
        Self::new(Composition::new(top.to_vec())?, Composition::new(bottom.to_vec())?)
    }

    /// The type with both compositions empty; the terminal state of winding.
    pub fn empty() -> Self {
        SeaweedType {
            top: Composition::empty(),
            bottom: Composition::empty(),
        }
    }

    /// `parts / n`.
    pub fn maximal_parabolic(top: Composition) -> Result<Self> {
        if top.is_empty() {
            return Ok(Self::empty());
        }
        let n = top.weight();
        Ok(SeaweedType {
            top,
            bottom: Composition::single(n),
        })
    }

    pub fn top(&self) -> &Composition {
        &self.top
    }

    pub fn bottom(&self) -> &Composition {
        &self.bottom
    }

    pub fn n(&self) -> u32 {
        self.top.weight()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty() && self.bottom.is_empty()
    }

    /// Swaps top and bottom.
    pub fn flipped(&self) -> SeaweedType {
        SeaweedType {
            top: self.bottom.clone(),
            bottom: self.top.clone(),
        }
    }
}

impl fmt::Display for SeaweedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.top, self.bottom)
    }
}

impl FromStr for SeaweedType {
    type Err = Error;

    /// Grammar: `top "/" bottom`, parts `|`-separated, whitespace allowed
    /// around any token. `/` alone is the empty type.
    fn from_str(s: &str) -> Result<Self> {
        let (top, bottom) = s.split_once('/').ok_or_else(|| Error::InvalidSeaweed {
            input: s.to_string(),
            reason: "missing `/` between top and bottom".into(),
        })?;
        if bottom.contains('/') {
            return Err(Error::InvalidSeaweed {
                input: s.to_string(),
                reason: "more than one `/`".into(),
            });
        }
        let side_err = |side: Side| {
            move |e: Error| Error::InvalidSeaweedSide {
                input: s.to_string(),
                side,
                reason: match e {
                    Error::InvalidComposition { reason, .. } => reason,
                    other => other.to_string(),
                },
            }
        };
        let top: Composition = top.parse().map_err(side_err(Side::Top))?;
        let bottom: Composition = bottom.parse().map_err(side_err(Side::Bottom))?;
        if top.is_empty() != bottom.is_empty() {
            let side = if top.is_empty() { Side::Top } else { Side::Bottom };
            return Err(Error::InvalidSeaweedSide {
                input: s.to_string(),
                side,
                reason: "empty composition opposite a non-empty one".into(),
            });
        }
        SeaweedType::new(top, bottom)
    }
}

impl Serialize for SeaweedType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SeaweedType {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The meander graph of a seaweed type. Vertices are numbered `1..=n`; every
/// arc is stored as `(j, k)` with `j < k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Meander {
    n: usize,
    top_arcs: Vec<(usize, usize)>,
    bottom_arcs: Vec<(usize, usize)>,
}

/// Cycle and path counts of a meander. Isolated vertices are paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ComponentSummary {
    pub cycles: u32,
    pub paths: u32,
}

impl ComponentSummary {
    pub fn components(&self) -> u32 {
        self.cycles + self.paths
    }

    /// `2C + P - 1`, or `None` for the empty meander.
    pub fn index(&self) -> Option<u32> {
        (2 * self.cycles + self.paths).checked_sub(1)
    }
}

impl Meander {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn top_arcs(&self) -> &[(usize, usize)] {
        &self.top_arcs
    }

    pub fn bottom_arcs(&self) -> &[(usize, usize)] {
        &self.bottom_arcs
    }

    /// Partner of each vertex along the top and bottom arcs, indexed by
    /// vertex (slot 0 unused).
    fn partners(&self) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
        let mut top = vec![None; self.n + 1];
        let mut bottom = vec![None; self.n + 1];
        for &(j, k) in &self.top_arcs {
            top[j] = Some(k);
            top[k] = Some(j);
        }
        for &(j, k) in &self.bottom_arcs {
            bottom[j] = Some(k);
            bottom[k] = Some(j);
        }
        (top, bottom)
    }

    /// Degree of each vertex (slot 0 unused).
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n + 1];
        for &(j, k) in self.top_arcs.iter().chain(&self.bottom_arcs) {
            deg[j] += 1;
            deg[k] += 1;
        }
        deg
    }
}

fn block_arcs(blocks: &[u32]) -> Vec<(usize, usize)> {
    let mut arcs = Vec::new();
    let mut offset = 0usize;
    for &size in blocks {
        let size = size as usize;
        let target = 2 * offset + size + 1;
        for j in offset + 1..=offset + size {
            let k = target - j;
            if j < k {
                arcs.push((j, k));
            }
        }
        offset += size;
    }
    arcs.sort_unstable();
    arcs
}

pub fn build_meander(s: &SeaweedType) -> Meander {
    Meander {
        n: s.n() as usize,
        top_arcs: block_arcs(s.top().parts()),
        bottom_arcs: block_arcs(s.bottom().parts()),
    }
}

/// Counts cycles and paths by walking each connected component. A component
/// is a cycle exactly when all of its vertices have degree 2.
pub fn components(m: &Meander) -> ComponentSummary {
    let (top, bottom) = m.partners();
    let mut seen = vec![false; m.n + 1];
    let mut summary = ComponentSummary::default();
    let mut stack = Vec::new();
    for start in 1..=m.n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        stack.push(start);
        let mut all_degree_two = true;
        while let Some(v) = stack.pop() {
            if top[v].is_none() || bottom[v].is_none() {
                all_degree_two = false;
            }
            for w in [top[v], bottom[v]].into_iter().flatten() {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if all_degree_two {
            summary.cycles += 1;
        } else {
            summary.paths += 1;
        }
    }
    summary
}

/// Index by the component count `2C + P - 1`.
pub fn index_dk(s: &SeaweedType) -> Result<u32> {
    if s.n() == 0 {
        return Err(Error::EmptyType);
    }
    let summary = components(&build_meander(s));
    Ok(summary.index().expect("non-empty meander has a component"))
}

pub fn is_frobenius(s: &SeaweedType) -> Result<bool> {
    index_dk(s).map(|i| i == 0)
}

/// Index of `a|b / a+b`: `gcd(a, b) - 1`.
pub fn index_formula_2parts(a: u32, b: u32) -> u32 {
    assert!(a > 0 && b > 0, "block sizes must be positive");
    gcd(a, b) - 1
}

/// The two three-block shapes sharing the closed form `gcd(a+b, b+c) - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThreePartShape {
    /// `a|b|c / a+b+c`
    ThreeOverOne,
    /// `a|b / c|(a+b-c)`
    TwoOverTwo,
}

impl ThreePartShape {
    pub fn seaweed(self, a: u32, b: u32, c: u32) -> Result<SeaweedType> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::InvalidThreePartShape { a, b, c });
        }
        match self {
            ThreePartShape::ThreeOverOne => {
                let n = a
                    .checked_add(b)
                    .and_then(|ab| ab.checked_add(c))
                    .ok_or(Error::Overflow("three-part weight"))?;
                SeaweedType::from_parts(&[a, b, c], &[n])
            }
            ThreePartShape::TwoOverTwo => {
                let ab = a.checked_add(b).ok_or(Error::Overflow("three-part weight"))?;
                if c >= ab {
                    return Err(Error::InvalidThreePartShape { a, b, c });
                }
                SeaweedType::from_parts(&[a, b], &[c, ab - c])
            }
        }
    }
}

/// `gcd(a+b, b+c) - 1`, after checking that the shape is well formed.
pub fn index_formula_3parts(a: u32, b: u32, c: u32, shape: ThreePartShape) -> Result<u32> {
    shape.seaweed(a, b, c)?;
    Ok((gcd(u64::from(a) + u64::from(b), u64::from(b) + u64::from(c)) - 1) as u32)
}
