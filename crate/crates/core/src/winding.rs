//! Winding a seaweed type down to the empty type.
//!
//! With `a1` and `b1` the leading top and bottom blocks, exactly one move
//! applies:
//!
//! | condition           | move   | result                                   |
//! |---------------------|--------|------------------------------------------|
//! | `a1 < b1`           | `F_v`  | `b1|..|bt / a1|..|am`                    |
//! | `a1 = b1 = c`       | `C(c)` | `a2|..|am / b2|..|bt`                    |
//! | `b1 < a1 < 2 b1`    | `R`    | `b1|a2|..|am / (2b1-a1)|b2|..|bt`        |
//! | `a1 = 2 b1`         | `B`    | `b1|a2|..|am / b2|..|bt`                 |
//! | `a1 > 2 b1`         | `P`    | `(a1-2b1)|b1|a2|..|am / b2|..|bt`        |
//!
//! Only `C(c)` changes the index. The eliminated block is a standalone `c/c`
//! meander with `floor(c/2)` cycles and `c mod 2` paths, so the index of the
//! start type is the sum of those contributions minus one.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::meander::{ComponentSummary, SeaweedType};
use crate::partition::Composition;

/// Steps allowed per vertex before winding is declared non-terminating.
pub const STEP_CAP_PER_VERTEX: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    VerticalFlip,
    ComponentElimination(u32),
    RotationContraction,
    BlockElimination,
    PureContraction,
    HorizontalFlip,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::VerticalFlip => f.write_str("F_v"),
            Move::ComponentElimination(c) => write!(f, "C({c})"),
            Move::RotationContraction => f.write_str("R"),
            Move::BlockElimination => f.write_str("B"),
            Move::PureContraction => f.write_str("P"),
            Move::HorizontalFlip => f.write_str("F_h"),
        }
    }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unknown move `{s}`"));
        Ok(match s {
            "F_v" => Move::VerticalFlip,
            "R" => Move::RotationContraction,
            "B" => Move::BlockElimination,
            "P" => Move::PureContraction,
            "F_h" => Move::HorizontalFlip,
            _ => {
                let inner = s
                    .strip_prefix("C(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(bad)?;
                match inner.parse::<u32>() {
                    Ok(c) if c > 0 && !inner.starts_with('+') => Move::ComponentElimination(c),
                    _ => return Err(bad()),
                }
            }
        })
    }
}

impl Serialize for Move {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Move {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One applied move and the type it produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindingStep {
    pub kind: Move,
    pub result: SeaweedType,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindingTrace {
    start: SeaweedType,
    steps: Vec<WindingStep>,
}

impl WindingTrace {
    /// Validates `steps` against `start`: every step must be the recorded
    /// move's rewrite of the previous type, and the last type must be empty.
    pub fn replay(start: SeaweedType, steps: Vec<WindingStep>) -> Result<Self> {
        if start.is_empty() {
            return Err(Error::EmptyType);
        }
        let mut current = start.clone();
        for (idx, step) in steps.iter().enumerate() {
            let next = apply_move(&current, step.kind).map_err(|e| Error::InvalidTrace {
                line: idx + 1,
                reason: e.to_string(),
            })?;
            if next != step.result {
                return Err(Error::InvalidTrace {
                    line: idx + 1,
                    reason: format!("{} applied to {current} gives {next}, not {}", step.kind, step.result),
                });
            }
            current = next;
        }
        if !current.is_empty() {
            return Err(Error::InvalidTrace {
                line: steps.len(),
                reason: format!("trace ends at {current}, not the empty type"),
            });
        }
        Ok(WindingTrace { start, steps })
    }

    pub fn start(&self) -> &SeaweedType {
        &self.start
    }

    pub fn steps(&self) -> &[WindingStep] {
        &self.steps
    }

    pub fn moves(&self) -> Vec<Move> {
        self.steps.iter().map(|s| s.kind).collect()
    }

    /// Sum of the component-elimination contributions, minus one.
    pub fn index(&self) -> u32 {
        let total: u64 = self
            .steps
            .iter()
            .filter_map(|s| match s.kind {
                Move::ComponentElimination(c) => Some(elimination_contribution(c)),
                _ => None,
            })
            .sum();
        (total - 1) as u32
    }

    /// One line per step: `MOVE kind=<move> result=<type>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(&format!("MOVE kind={} result={}\n", step.kind, step.result));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.steps).expect("steps serialize")
    }
}

/// Parses the line form written by [`WindingTrace::to_text`]. Blank lines are
/// ignored. The steps are not checked against each other; use
/// [`WindingTrace::replay`] for that.
pub fn parse_trace_text(text: &str) -> Result<Vec<WindingStep>> {
    let mut steps = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = |reason: String| Error::InvalidTrace { line: idx + 1, reason };
        let rest = line
            .strip_prefix("MOVE kind=")
            .ok_or_else(|| bad("expected `MOVE kind=`".into()))?;
        let (kind, result) = rest
            .split_once(" result=")
            .ok_or_else(|| bad("expected ` result=`".into()))?;
        let kind: Move = kind.parse().map_err(|e: Error| bad(e.to_string()))?;
        let result: SeaweedType = result.parse().map_err(|e: Error| bad(e.to_string()))?;
        steps.push(WindingStep { kind, result });
    }
    Ok(steps)
}

/// Parses the JSON array form written by [`WindingTrace::to_json`].
pub fn parse_trace_json(text: &str) -> Result<Vec<WindingStep>> {
    serde_json::from_str(text).map_err(|e| Error::InvalidTrace {
        line: e.line(),
        reason: e.to_string(),
    })
}

/// Index contribution of eliminating a `c/c` block: `2 floor(c/2) + (c mod 2)`.
pub fn elimination_contribution(c: u32) -> u64 {
    let summary = elimination_summary(c);
    2 * u64::from(summary.cycles) + u64::from(summary.paths)
}

/// Components of the standalone `c/c` meander.
pub fn elimination_summary(c: u32) -> ComponentSummary {
    ComponentSummary {
        cycles: c / 2,
        paths: c % 2,
    }
}

/// The unique winding move for a non-empty type and the type it produces.
pub fn wind_step(s: &SeaweedType) -> Result<(Move, SeaweedType)> {
    let mv = select_move(s)?;
    let next = rewrite(s, mv);
    Ok((mv, next))
}

fn select_move(s: &SeaweedType) -> Result<Move> {
    let (Some(&a1), Some(&b1)) = (s.top().parts().first(), s.bottom().parts().first()) else {
        return Err(Error::EmptyType);
    };
    let (a1, b1) = (u64::from(a1), u64::from(b1));
    Ok(if a1 < b1 {
        Move::VerticalFlip
    } else if a1 == b1 {
        Move::ComponentElimination(a1 as u32)
    } else if a1 < 2 * b1 {
        Move::RotationContraction
    } else if a1 == 2 * b1 {
        Move::BlockElimination
    } else {
        Move::PureContraction
    })
}

/// Applies `mv` to `s`, failing if the move's condition does not hold.
/// `F_h` always applies.
pub fn apply_move(s: &SeaweedType, mv: Move) -> Result<SeaweedType> {
    if mv == Move::HorizontalFlip {
        return Ok(horizontal_flip(s));
    }
    let expected = select_move(s)?;
    if expected != mv {
        return Err(Error::InvalidArgument(format!(
            "move {mv} does not apply to {s}; the applicable move is {expected}"
        )));
    }
    Ok(rewrite(s, mv))
}

fn rewrite(s: &SeaweedType, mv: Move) -> SeaweedType {
    let top = s.top().parts();
    let bottom = s.bottom().parts();
    let build = |t: Vec<u32>, b: Vec<u32>| {
        SeaweedType::new(
            Composition::from_parts_unchecked(t),
            Composition::from_parts_unchecked(b),
        )
        .expect("winding moves preserve equal weights")
    };
    match mv {
        Move::VerticalFlip => s.flipped(),
        Move::HorizontalFlip => horizontal_flip(s),
        Move::ComponentElimination(_) => build(top[1..].to_vec(), bottom[1..].to_vec()),
        Move::RotationContraction => {
            let (a1, b1) = (top[0], bottom[0]);
            let mut t = top.to_vec();
            t[0] = b1;
            let mut b = bottom.to_vec();
            b[0] = 2 * b1 - a1;
            build(t, b)
        }
        Move::BlockElimination => {
            let mut t = top.to_vec();
            t[0] = bottom[0];
            build(t, bottom[1..].to_vec())
        }
        Move::PureContraction => {
            let (a1, b1) = (top[0], bottom[0]);
            let mut t = Vec::with_capacity(top.len() + 1);
            t.push(a1 - 2 * b1);
            t.push(b1);
            t.extend_from_slice(&top[1..]);
            build(t, bottom[1..].to_vec())
        }
    }
}

/// Applies [`wind_step`] until the empty type is reached.
pub fn wind_down(s: &SeaweedType) -> Result<WindingTrace> {
    if s.is_empty() {
        return Err(Error::EmptyType);
    }
    let cap = STEP_CAP_PER_VERTEX * s.n() as usize;
    let mut steps = Vec::new();
    let mut current = s.clone();
    while !current.is_empty() {
        if steps.len() >= cap {
            return Err(Error::StepCapExceeded {
                start: s.to_string(),
                cap,
            });
        }
        let (kind, next) = wind_step(&current)?;
        steps.push(WindingStep {
            kind,
            result: next.clone(),
        });
        current = next;
    }
    Ok(WindingTrace {
        start: s.clone(),
        steps,
    })
}

/// Index computed from the component eliminations of the wind-down.
pub fn index_via_winding(s: &SeaweedType) -> Result<u32> {
    WindingEngine::default().index(s.top().parts(), s.bottom().parts())
}

/// `a_m|...|a_1 / b_t|...|b_1`.
pub fn horizontal_flip(s: &SeaweedType) -> SeaweedType {
    SeaweedType::new(s.top().reversed(), s.bottom().reversed())
        .expect("reversal preserves weights")
}

/// Allocation-reusing winding index for hot loops. Runs the same moves as
/// [`wind_down`] on raw part slices without recording a trace.
#[derive(Debug, Default, Clone)]
pub struct WindingEngine {
    top: VecDeque<u32>,
    bottom: VecDeque<u32>,
}

impl WindingEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Index of `top / bottom`. The slices must be compositions of the same
    /// positive weight.
    pub fn index(&mut self, top: &[u32], bottom: &[u32]) -> Result<u32> {
        let n: u64 = top.iter().map(|&p| u64::from(p)).sum();
        let m: u64 = bottom.iter().map(|&p| u64::from(p)).sum();
        if n != m {
            return Err(Error::WeightMismatch { top: n, bottom: m });
        }
        if n == 0 {
            return Err(Error::EmptyType);
        }
        if top.contains(&0) || bottom.contains(&0) {
            return Err(Error::InvalidArgument("block sizes must be positive".into()));
        }
        self.top.clear();
        self.top.extend(top);
        self.bottom.clear();
        self.bottom.extend(bottom);

        let cap = STEP_CAP_PER_VERTEX as u64 * n;
        let mut steps = 0u64;
        let mut total = 0u64;
        let (mut t, mut b) = (&mut self.top, &mut self.bottom);
        while let (Some(&a1), Some(&b1)) = (t.front(), b.front()) {
            if steps >= cap {
                return Err(Error::StepCapExceeded {
                    start: format!("{}/{}", join(top), join(bottom)),
                    cap: cap as usize,
                });
            }
            steps += 1;
            let (wa, wb) = (u64::from(a1), u64::from(b1));
            if wa < wb {
                std::mem::swap(&mut t, &mut b);
            } else if wa == wb {
                t.pop_front();
                b.pop_front();
                total += elimination_contribution(a1);
            } else if wa < 2 * wb {
                t[0] = b1;
                b[0] = 2 * b1 - a1;
            } else if wa == 2 * wb {
                t[0] = b1;
                b.pop_front();
            } else {
                t[0] = b1;
                t.push_front(a1 - 2 * b1);
                b.pop_front();
            }
        }
        Ok((total - 1) as u32)
    }
}

fn join(parts: &[u32]) -> String {
    parts.iter().map(u32::to_string).collect::<Vec<_>>().join("|")
}
