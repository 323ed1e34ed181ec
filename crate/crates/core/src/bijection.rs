//! The bijection between snakes of type `B_n` and labeled ballot paths of
//! length `n`.
//!
//! [`phi`] reads the entries of a snake from the largest magnitude down and
//! emits one step per entry. [`psi`] undoes it by contracting one step per
//! stage and prepending the corresponding signed entry.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::{self, BallotPath, LabeledBallotPath, Step};
use crate::snake::{SignedPermutation, Snake};

/// Maps a snake to its labeled ballot path.
///
/// Step `k` looks at the entry of magnitude `n - k + 1`, at position `i`. A
/// positive entry gives `u` at odd `i` and `d` at even `i`, labeled `c_i`. A
/// negative entry gives `d` at odd `i` and `u` at even `i`, labeled
/// `h_k - c_i`.
pub fn phi(snake: &Snake) -> LabeledBallotPath {
    let n = snake.len();
    let code = snake.inversion_code();
    let mut steps = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    let mut y: i64 = 0;
    for k in 1..=n {
        let magnitude = (n - k + 1) as u32;
        let i = snake
            .position_of(magnitude)
            .expect("snake holds every magnitude");
        let positive = snake.entries()[i - 1] > 0;
        let odd = i % 2 == 1;
        let step = if positive == odd {
            Step::Up
        } else {
            Step::Down
        };
        let height = match step {
            Step::Up => y,
            Step::Down => y - 1,
        };
        let c = i64::from(code.get(i));
        let label = if positive { c } else { height - c };
        steps.push(step);
        labels.push(u32::try_from(label).unwrap_or(u32::MAX));
        y += if step == Step::Up { 1 } else { -1 };
    }
    let path = BallotPath::new(steps).expect("phi always yields a ballot path");
    LabeledBallotPath::new(path, labels).expect("phi always yields valid labels")
}

/// Which of the four contraction rules fired at a stage of [`psi`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Contraction {
    /// Odd step count: leftmost down step whose label equals its height.
    OddDownAtHeight,
    /// Odd step count: rightmost up step labeled 0.
    OddUpAtZero,
    /// Even step count: leftmost down step labeled 0.
    EvenDownAtZero,
    /// Even step count: rightmost up step whose label equals its height.
    EvenUpAtHeight,
}

impl Contraction {
    /// Whether the prepended entry is negative.
    pub fn is_negative(self) -> bool {
        matches!(
            self,
            Contraction::OddDownAtHeight | Contraction::EvenUpAtHeight
        )
    }
}

/// One stage of [`psi`]: the path before contraction, the step removed
/// and the signed sequence after prepending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiStage {
    pub path: LabeledBallotPath,
    /// 1-based indices in the input path of the surviving steps.
    pub original_indices: Vec<usize>,
    /// 1-based index in the input path of the contracted step.
    pub contracted: usize,
    pub rule: Contraction,
    pub gamma: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiTrace {
    pub stages: Vec<PsiStage>,
    pub snake: Snake,
}

#[derive(Serialize)]
struct StageRecord<'a> {
    steps: String,
    labels: &'a [u32],
    original_indices: &'a [usize],
    gamma: &'a [i32],
    contracted_original_index: usize,
}

impl PsiTrace {
    /// Contracted indices `r_1, ..., r_n`.
    pub fn contracted(&self) -> Vec<usize> {
        self.stages.iter().map(|s| s.contracted).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let records: Vec<StageRecord<'_>> = self
            .stages
            .iter()
            .map(|s| StageRecord {
                steps: s.path.path().to_string(),
                labels: s.path.labels(),
                original_indices: &s.original_indices,
                gamma: &s.gamma,
                contracted_original_index: s.contracted,
            })
            .collect();
        serde_json::to_value(records).expect("trace records serialize")
    }
}

#[derive(Debug, Clone, Copy)]
struct LiveStep {
    original: usize,
    step: Step,
    label: i64,
}

fn current_path(live: &[LiveStep]) -> Result<(Vec<Step>, Vec<u32>)> {
    let steps: Vec<Step> = live.iter().map(|s| s.step).collect();
    let heights = path::step_heights(&steps).map_err(|step| {
        Error::Invariant(format!(
            "contracted path dips below the axis at step {step}"
        ))
    })?;
    Ok((steps, heights))
}

/// Runs the contraction procedure, recording every stage.
pub fn psi_trace(lpath: &LabeledBallotPath) -> Result<PsiTrace> {
    let n = lpath.len();
    let mut live: Vec<LiveStep> = lpath
        .steps()
        .iter()
        .zip(lpath.labels())
        .enumerate()
        .map(|(i, (&step, &label))| LiveStep {
            original: i + 1,
            step,
            label: i64::from(label),
        })
        .collect();
    let mut gamma: Vec<i32> = Vec::with_capacity(n);
    let mut stages = Vec::with_capacity(n);

    while !live.is_empty() {
        let (steps, heights) = current_path(&live)?;
        let mut labels = Vec::with_capacity(live.len());
        for (s, &h) in live.iter().zip(&heights) {
            if s.label < 0 || s.label > i64::from(h) {
                return Err(Error::Invariant(format!(
                    "label {} of step p{} outside 0..={h}",
                    s.label, s.original
                )));
            }
            labels.push(s.label as u32);
        }
        let stage_path = LabeledBallotPath::new(
            BallotPath::new(steps).map_err(|e| Error::Invariant(e.to_string()))?,
            labels,
        )
        .map_err(|e| Error::Invariant(e.to_string()))?;
        let original_indices: Vec<usize> = live.iter().map(|s| s.original).collect();

        let at_height = |idx: usize| live[idx].label == i64::from(heights[idx]);
        let is = |idx: usize, step: Step| live[idx].step == step;
        let len = live.len();
        let (pos, rule) = if len % 2 == 1 {
            if let Some(p) = (0..len).find(|&j| is(j, Step::Down) && at_height(j)) {
                (p, Contraction::OddDownAtHeight)
            } else if let Some(p) = (0..len)
                .rev()
                .find(|&j| is(j, Step::Up) && live[j].label == 0)
            {
                (p, Contraction::OddUpAtZero)
            } else {
                return Err(Error::Invariant(format!(
                    "no contractible step in a path of {len} steps"
                )));
            }
        } else if let Some(p) = (0..len).find(|&j| is(j, Step::Down) && live[j].label == 0) {
            (p, Contraction::EvenDownAtZero)
        } else if let Some(p) = (0..len).rev().find(|&j| is(j, Step::Up) && at_height(j)) {
            (p, Contraction::EvenUpAtHeight)
        } else {
            return Err(Error::Invariant(format!(
                "no contractible step in a path of {len} steps"
            )));
        };

        let removed = live.remove(pos);
        let r = removed.original;
        for s in live.iter_mut() {
            let right = s.original > r;
            let delta = match (rule, s.step) {
                (Contraction::OddDownAtHeight, Step::Down) => 1,
                (Contraction::OddUpAtZero, Step::Up) if right => -1,
                (Contraction::OddUpAtZero, Step::Down) if !right => 1,
                (Contraction::EvenDownAtZero, Step::Up) if right => 1,
                (Contraction::EvenDownAtZero, Step::Down) if !right => -1,
                (Contraction::EvenUpAtHeight, Step::Down) => -1,
                _ => 0,
            };
            s.label += delta;
        }
        let magnitude = (n - r + 1) as i32;
        gamma.insert(
            0,
            if rule.is_negative() {
                -magnitude
            } else {
                magnitude
            },
        );
        stages.push(PsiStage {
            path: stage_path,
            original_indices,
            contracted: r,
            rule,
            gamma: gamma.clone(),
        });
    }

    let perm = SignedPermutation::new(gamma).map_err(|e| Error::Invariant(e.to_string()))?;
    let snake = Snake::try_from(perm).map_err(|e| Error::Invariant(e.to_string()))?;
    Ok(PsiTrace { stages, snake })
}

/// Maps a labeled ballot path back to its snake.
pub fn psi(lpath: &LabeledBallotPath) -> Result<Snake> {
    psi_trace(lpath).map(|t| t.snake)
}

/// [`phi`] restricted to alternating permutations of even length, whose
/// images are labeled Dyck paths.
pub fn phi_on_alternating(perm: &Snake) -> Result<LabeledBallotPath> {
    if !perm.is_unsigned() {
        return Err(Error::InvalidArgument(
            "alternating permutation has a negative entry".into(),
        ));
    }
    if perm.len() % 2 == 1 {
        return Err(Error::InvalidArgument(
            "alternating permutation has odd length".into(),
        ));
    }
    let image = phi(perm);
    if !image.is_dyck() {
        return Err(Error::Invariant(format!(
            "phi({perm}) ends at height {}",
            image.end_height()
        )));
    }
    Ok(image)
}
