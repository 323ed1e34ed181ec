//! Ballot paths, Dyck paths, their labelings, and alternate level codes.
//!
//! A ballot path starts at the origin and uses up steps `(1,1)` and down
//! steps `(1,-1)` without going below the x-axis. The height of a step is
//! the smaller y-coordinate of its two endpoints.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    #[serde(rename = "u")]
    Up,
    #[serde(rename = "d")]
    Down,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'u',
            Step::Down => 'd',
        }
    }

    pub fn from_char(c: char) -> Result<Step> {
        match c {
            'u' | 'U' => Ok(Step::Up),
            'd' | 'D' => Ok(Step::Down),
            other => Err(Error::Parse(format!(
                "`{other}` is not a step, expected u or d"
            ))),
        }
    }

    /// Height of this step when it starts at height `y`.
    fn height_from(self, y: i64) -> i64 {
        match self {
            Step::Up => y,
            Step::Down => y - 1,
        }
    }

    fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }
}

pub(crate) fn steps_to_string(steps: &[Step]) -> String {
    steps.iter().map(|s| s.as_char()).collect()
}

pub fn parse_steps(s: &str) -> Result<Vec<Step>> {
    s.trim().chars().map(Step::from_char).collect()
}

/// Heights of each step of a sequence starting on the axis. Returns the
/// 1-based index of the first step that dips below the axis on failure.
pub(crate) fn step_heights(steps: &[Step]) -> std::result::Result<Vec<u32>, usize> {
    let mut y = 0i64;
    let mut out = Vec::with_capacity(steps.len());
    for (i, s) in steps.iter().enumerate() {
        let h = s.height_from(y);
        if h < 0 {
            return Err(i + 1);
        }
        out.push(h as u32);
        y += s.delta();
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BallotPath(Vec<Step>);

impl BallotPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        step_heights(&steps).map_err(|step| Error::BelowAxis { step })?;
        Ok(BallotPath(steps))
    }

    pub fn empty() -> Self {
        BallotPath(Vec::new())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn end_height(&self) -> u32 {
        let ups = self.0.iter().filter(|&&s| s == Step::Up).count();
        (2 * ups - self.0.len()) as u32
    }

    pub fn is_dyck(&self) -> bool {
        self.end_height() == 0
    }

    /// Heights of all steps, in order.
    pub fn heights(&self) -> Vec<u32> {
        step_heights(&self.0).expect("ballot path stays above the axis")
    }

    /// Height of the step at 1-based index `i`.
    pub fn height(&self, i: usize) -> Result<u32> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        Ok(self.heights()[i - 1])
    }

    /// Number of valid labelings, the product of `height + 1` over all steps.
    pub fn labeling_count(&self) -> BigUint {
        self.heights()
            .into_iter()
            .fold(BigUint::one(), |acc, h| acc * BigUint::from(h + 1))
    }
}

impl TryFrom<String> for BallotPath {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<BallotPath> for String {
    fn from(p: BallotPath) -> Self {
        p.to_string()
    }
}

impl fmt::Display for BallotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&steps_to_string(&self.0))
    }
}

impl FromStr for BallotPath {
    type Err = Error;

    /// Parses a string over `{u, d}` such as `uuudduu`.
    fn from_str(s: &str) -> Result<Self> {
        BallotPath::new(parse_steps(s)?)
    }
}

/// A ballot path whose `i`-th step carries a label in `0..=height(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabeledBallotPath {
    path: BallotPath,
    labels: Vec<u32>,
}

impl LabeledBallotPath {
    pub fn new(path: BallotPath, labels: Vec<u32>) -> Result<Self> {
        if labels.len() != path.len() {
            return Err(Error::LengthMismatch {
                steps: path.len(),
                labels: labels.len(),
            });
        }
        for (i, (&label, height)) in labels.iter().zip(path.heights()).enumerate() {
            if label > height {
                return Err(Error::LabelOutOfRange {
                    step: i + 1,
                    label,
                    height,
                });
            }
        }
        Ok(LabeledBallotPath { path, labels })
    }

    pub fn empty() -> Self {
        LabeledBallotPath {
            path: BallotPath::empty(),
            labels: Vec::new(),
        }
    }

    /// Parses the pair of text forms, e.g. `("uuudduu", "0,1,1,0,1,1,2")`.
    pub fn parse(path: &str, labels: &str) -> Result<Self> {
        LabeledBallotPath::new(path.parse()?, parse_labels(labels)?)
    }

    pub fn path(&self) -> &BallotPath {
        &self.path
    }

    pub fn steps(&self) -> &[Step] {
        self.path.steps()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    pub fn end_height(&self) -> u32 {
        self.path.end_height()
    }

    pub fn is_dyck(&self) -> bool {
        self.path.is_dyck()
    }

    pub fn labels_to_string(&self) -> String {
        join_labels(&self.labels)
    }
}

impl fmt::Display for LabeledBallotPath {
    /// `uuudduu 0,1,1,0,1,1,2`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.path, self.labels_to_string())
    }
}

pub(crate) fn join_labels(labels: &[u32]) -> String {
    labels
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn parse_labels(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<u32>()
                .map_err(|_| Error::Parse(format!("`{tok}` is not a nonnegative label")))
        })
        .collect()
}

/// Ballot paths of length `n` in lexicographic order (`u < d`), optionally
/// restricted to a terminal height.
#[derive(Debug, Clone)]
pub struct BallotPaths {
    n: usize,
    target: Option<i64>,
    prefix: Vec<Step>,
    // y-coordinate after each prefix length
    ys: Vec<i64>,
    // next step to try at each depth: 0 = up, 1 = down, 2 = exhausted
    cursor: Vec<u8>,
    done: bool,
}

impl BallotPaths {
    pub fn new(n: usize, end_height: Option<u32>) -> Self {
        let infeasible = match end_height {
            Some(e) => e as usize > n || (n + e as usize) % 2 == 1,
            None => false,
        };
        let mut ys = Vec::with_capacity(n + 1);
        ys.push(0);
        BallotPaths {
            n,
            target: end_height.map(i64::from),
            prefix: Vec::with_capacity(n),
            ys,
            cursor: vec![0; n + 1],
            done: infeasible,
        }
    }

    fn feasible(&self, y: i64, remaining: usize) -> bool {
        if y < 0 {
            return false;
        }
        match self.target {
            Some(e) => (y - e).unsigned_abs() as usize <= remaining,
            None => true,
        }
    }

    fn pop(&mut self) {
        self.prefix.pop();
        self.ys.pop();
    }
}

impl Iterator for BallotPaths {
    type Item = BallotPath;

    fn next(&mut self) -> Option<BallotPath> {
        if self.done {
            return None;
        }
        loop {
            let depth = self.prefix.len();
            if depth == self.n {
                let out = BallotPath(self.prefix.clone());
                if depth == 0 {
                    self.done = true;
                } else {
                    self.pop();
                }
                return Some(out);
            }
            let y = *self.ys.last().expect("origin is always present");
            let mut extended = false;
            while self.cursor[depth] < 2 {
                let step = if self.cursor[depth] == 0 {
                    Step::Up
                } else {
                    Step::Down
                };
                self.cursor[depth] += 1;
                let next_y = y + step.delta();
                if self.feasible(next_y, self.n - depth - 1) {
                    self.prefix.push(step);
                    self.ys.push(next_y);
                    self.cursor[depth + 1] = 0;
                    extended = true;
                    break;
                }
            }
            if !extended {
                if depth == 0 {
                    self.done = true;
                    return None;
                }
                self.pop();
            }
        }
    }
}

pub fn enumerate_ballot_paths(n: usize, end_height: Option<u32>) -> BallotPaths {
    BallotPaths::new(n, end_height)
}

/// Dyck paths of length `2n`.
pub fn enumerate_dyck_paths(n: usize) -> BallotPaths {
    BallotPaths::new(2 * n, Some(0))
}

/// Every labeled ballot path of length `n`: paths in lexicographic order,
/// and for each path its labelings in colexicographic counter order (the
/// first label varies fastest).
#[derive(Debug, Clone)]
pub struct LabeledPaths {
    paths: BallotPaths,
    current: Option<(BallotPath, Vec<u32>)>,
    labels: Vec<u32>,
}

impl LabeledPaths {
    pub fn new(n: usize, end_height: Option<u32>) -> Self {
        LabeledPaths {
            paths: BallotPaths::new(n, end_height),
            current: None,
            labels: Vec::new(),
        }
    }

    fn advance_labels(&mut self) -> bool {
        let Some((_, heights)) = &self.current else {
            return false;
        };
        for (label, &h) in self.labels.iter_mut().zip(heights) {
            if *label < h {
                *label += 1;
                return true;
            }
            *label = 0;
        }
        false
    }
}

impl Iterator for LabeledPaths {
    type Item = LabeledBallotPath;

    fn next(&mut self) -> Option<LabeledBallotPath> {
        if self.current.is_some() && self.advance_labels() {
            let (path, _) = self.current.as_ref().expect("checked above");
            return Some(LabeledBallotPath {
                path: path.clone(),
                labels: self.labels.clone(),
            });
        }
        let path = self.paths.next()?;
        let heights = path.heights();
        self.labels = vec![0; path.len()];
        let out = LabeledBallotPath {
            path: path.clone(),
            labels: self.labels.clone(),
        };
        self.current = Some((path, heights));
        Some(out)
    }
}

pub fn enumerate_labeled_paths(n: usize, end_height: Option<u32>) -> LabeledPaths {
    LabeledPaths::new(n, end_height)
}

/// An alternate level code of ballots: `l_1 = 1` and `1 <= l_j <= l_{j-1} + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct LevelCode(Vec<u32>);

impl LevelCode {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let mut prev = 0;
        for (i, &v) in values.iter().enumerate() {
            if v < 1 || v > prev + 1 {
                return Err(Error::InvalidLevelCode { position: i + 1 });
            }
            prev = v;
        }
        Ok(LevelCode(values))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The Dyck path of length `2n` built block by block: with `l_{n+1} = 1`,
    /// block `i` is `u` when `l_i < l_{i+1}` and `u d^(l_i - l_{i+1} + 1)`
    /// otherwise.
    pub fn to_dyck(&self) -> BallotPath {
        let n = self.0.len();
        let mut steps = Vec::with_capacity(2 * n);
        for i in 0..n {
            let here = self.0[i];
            let next = self.0.get(i + 1).copied().unwrap_or(1);
            steps.push(Step::Up);
            if here >= next {
                steps.extend(std::iter::repeat_n(Step::Down, (here - next + 1) as usize));
            }
        }
        BallotPath(steps)
    }

    /// Inverse of [`LevelCode::to_dyck`]: each value is the height of the
    /// corresponding up step plus one.
    pub fn from_dyck(path: &BallotPath) -> Result<Self> {
        if path.len() % 2 == 1 {
            return Err(Error::NotDyck("odd length"));
        }
        if !path.is_dyck() {
            return Err(Error::NotDyck("does not end on the x-axis"));
        }
        let values = path
            .steps()
            .iter()
            .zip(path.heights())
            .filter(|(&s, _)| s == Step::Up)
            .map(|(_, h)| h + 1)
            .collect();
        Ok(LevelCode(values))
    }

    pub fn square_product(&self) -> BigUint {
        self.0
            .iter()
            .fold(BigUint::one(), |acc, &v| acc * BigUint::from(v) * v)
    }

    /// Product of `l_i (l_i + 1)`.
    pub fn pronic_product(&self) -> BigUint {
        self.0
            .iter()
            .fold(BigUint::one(), |acc, &v| acc * BigUint::from(v) * (v + 1))
    }
}

pub fn level_code_to_dyck(code: &LevelCode) -> BallotPath {
    code.to_dyck()
}

pub fn dyck_to_level_code(path: &BallotPath) -> Result<LevelCode> {
    LevelCode::from_dyck(path)
}

impl TryFrom<Vec<u32>> for LevelCode {
    type Error = Error;

    fn try_from(values: Vec<u32>) -> Result<Self> {
        LevelCode::new(values)
    }
}

impl From<LevelCode> for Vec<u32> {
    fn from(c: LevelCode) -> Self {
        c.0
    }
}

impl fmt::Display for LevelCode {
    /// Concatenated digits (`122`) while every value is a single digit,
    /// comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v < 10) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            f.write_str(&join_labels(&self.0))
        }
    }
}

impl FromStr for LevelCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values = if s.contains(',') {
            parse_labels(s)?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("`{c}` is not a digit")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        LevelCode::new(values)
    }
}

/// Level codes of length `n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct LevelCodes {
    n: usize,
    current: Vec<u32>,
    started: bool,
    done: bool,
}

impl LevelCodes {
    pub fn new(n: usize) -> Self {
        LevelCodes {
            n,
            current: vec![1; n],
            started: false,
            done: false,
        }
    }
}

impl Iterator for LevelCodes {
    type Item = LevelCode;

    fn next(&mut self) -> Option<LevelCode> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(LevelCode(self.current.clone()));
        }
        // bump the rightmost position that can still grow, reset the tail to 1
        let mut i = self.n;
        while i > 1 {
            i -= 1;
            if self.current[i] <= self.current[i - 1] {
                self.current[i] += 1;
                self.current[i + 1..].iter_mut().for_each(|v| *v = 1);
                return Some(LevelCode(self.current.clone()));
            }
        }
        self.done = true;
        None
    }
}

pub fn enumerate_level_codes(n: usize) -> LevelCodes {
    LevelCodes::new(n)
}

/// Weight of a path started at height `start_height`: the product of the
/// y-coordinates of every lattice point except the last one.
///
/// Every point before the last must lie strictly above the axis.
pub fn path_weight(steps: &[Step], start_height: i64) -> Result<BigUint> {
    let mut y = start_height;
    let mut weight = BigUint::one();
    for (point, s) in steps.iter().enumerate() {
        if y <= 0 {
            return Err(Error::WeightedPathTouchesAxis { point, height: y });
        }
        weight *= BigUint::from(y as u64);
        y += s.delta();
    }
    Ok(weight)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> BallotPath {
        s.parse().unwrap()
    }

    #[test]
    fn heights() {
        let p = path("uuudduu");
        assert_eq!(p.heights(), [0, 1, 2, 2, 1, 1, 2]);
        assert_eq!(p.height(5).unwrap(), 1);
        assert_eq!(p.height(7).unwrap(), 2);
        assert_eq!(path("u").height(1).unwrap(), 0);
        assert_eq!(
            p.height(8).unwrap_err(),
            Error::IndexOutOfRange { index: 8, len: 7 }
        );
        assert!(p.height(0).is_err());
    }

    #[test]
    fn rejects_paths_below_axis() {
        assert_eq!(
            "d".parse::<BallotPath>().unwrap_err(),
            Error::BelowAxis { step: 1 }
        );
        assert_eq!(
            "udd".parse::<BallotPath>().unwrap_err(),
            Error::BelowAxis { step: 3 }
        );
        assert!("uxd".parse::<BallotPath>().is_err());
    }

    #[test]
    fn labeled_path_validation() {
        let lp = LabeledBallotPath::parse("uuudduu", "0,1,1,0,1,1,2").unwrap();
        assert_eq!(lp.to_string(), "uuudduu 0,1,1,0,1,1,2");
        assert_eq!(lp.end_height(), 3);
        assert_eq!(
            LabeledBallotPath::parse("uu", "0,2").unwrap_err(),
            Error::LabelOutOfRange {
                step: 2,
                label: 2,
                height: 1
            }
        );
        assert_eq!(
            LabeledBallotPath::parse("uu", "0").unwrap_err(),
            Error::LengthMismatch {
                steps: 2,
                labels: 1
            }
        );
        assert_eq!(
            LabeledBallotPath::parse("", "").unwrap(),
            LabeledBallotPath::empty()
        );
    }

    #[test]
    fn labeling_counts() {
        assert_eq!(path("uuudduu").labeling_count(), BigUint::from(216u32));
        assert_eq!(path("udu").labeling_count(), BigUint::from(1u32));
        assert_eq!(path("uuu").labeling_count(), BigUint::from(6u32));
        assert_eq!(path("uud").labeling_count(), BigUint::from(4u32));
        assert_eq!(BallotPath::empty().labeling_count(), BigUint::from(1u32));
    }

    #[test]
    fn ballot_path_order_and_filters() {
        let all: Vec<String> = enumerate_ballot_paths(3, None)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(all, ["uuu", "uud", "udu"]);
        let dyck: Vec<String> = enumerate_dyck_paths(2).map(|p| p.to_string()).collect();
        assert_eq!(dyck, ["uudd", "udud"]);
        assert_eq!(enumerate_ballot_paths(1, Some(0)).count(), 0);
        assert_eq!(enumerate_ballot_paths(2, Some(3)).count(), 0);
        assert_eq!(enumerate_ballot_paths(0, None).count(), 1);
        assert_eq!(enumerate_ballot_paths(0, Some(0)).count(), 1);
    }

    #[test]
    fn labeled_path_counts() {
        assert_eq!(enumerate_labeled_paths(3, None).count(), 11);
        let over_uuu = enumerate_labeled_paths(3, None)
            .filter(|lp| lp.path().to_string() == "uuu")
            .count();
        assert_eq!(over_uuu, 6);
        assert_eq!(enumerate_labeled_paths(1, Some(0)).count(), 0);
        assert_eq!(enumerate_labeled_paths(0, None).count(), 1);
        let over_7 = enumerate_labeled_paths(7, Some(3))
            .filter(|lp| lp.path().to_string() == "uuudduu")
            .count();
        assert_eq!(over_7, 216);
    }

    #[test]
    fn labelings_are_colex() {
        let got: Vec<String> = enumerate_labeled_paths(3, Some(3))
            .map(|lp| lp.labels_to_string())
            .collect();
        assert_eq!(got, ["0,0,0", "0,1,0", "0,0,1", "0,1,1", "0,0,2", "0,1,2"]);
    }

    #[test]
    fn stanley_examples() {
        let code: LevelCode = "122".parse().unwrap();
        assert_eq!(code.to_dyck().to_string(), "uududd");
        assert_eq!(LevelCode::new(vec![1]).unwrap().to_dyck().to_string(), "ud");
        assert_eq!(
            LevelCode::new(vec![1, 2, 3]).unwrap().to_dyck().to_string(),
            "uuuddd"
        );
        assert_eq!(
            dyck_to_level_code(&path("uududd")).unwrap().to_string(),
            "122"
        );
        assert_eq!(dyck_to_level_code(&path("ud")).unwrap().values(), &[1]);
        assert_eq!(
            dyck_to_level_code(&path("uudduudd")).unwrap().values(),
            &[1, 2, 1, 2]
        );
        assert_eq!(
            dyck_to_level_code(&path("uud")).unwrap_err(),
            Error::NotDyck("odd length")
        );
        assert!(dyck_to_level_code(&path("uu")).is_err());
    }

    #[test]
    fn level_code_validation() {
        assert_eq!(
            LevelCode::new(vec![2]).unwrap_err(),
            Error::InvalidLevelCode { position: 1 }
        );
        assert_eq!(
            LevelCode::new(vec![1, 3]).unwrap_err(),
            Error::InvalidLevelCode { position: 2 }
        );
        assert_eq!(
            LevelCode::new(vec![1, 0]).unwrap_err(),
            Error::InvalidLevelCode { position: 2 }
        );
        let long: LevelCode = "1,2,3,4,5,6,7,8,9,10".parse().unwrap();
        assert_eq!(long.to_string(), "1,2,3,4,5,6,7,8,9,10");
        assert_eq!(long.to_string().parse::<LevelCode>().unwrap(), long);
    }

    #[test]
    fn level_code_listing() {
        let got: Vec<String> = enumerate_level_codes(3).map(|c| c.to_string()).collect();
        assert_eq!(got, ["111", "112", "121", "122", "123"]);
        assert_eq!(enumerate_level_codes(0).count(), 1);
        assert_eq!(
            enumerate_level_codes(4).count(),
            enumerate_dyck_paths(4).count()
        );
        assert_eq!(enumerate_level_codes(4).count(), 14);
    }

    #[test]
    fn stanley_round_trips() {
        for n in 0..=8 {
            for code in enumerate_level_codes(n) {
                let d = code.to_dyck();
                assert_eq!(d.len(), 2 * n);
                assert!(d.is_dyck());
                assert_eq!(LevelCode::from_dyck(&d).unwrap(), code);
            }
            for d in enumerate_dyck_paths(n) {
                let code = LevelCode::from_dyck(&d).unwrap();
                assert_eq!(code.to_dyck(), d);
                assert_eq!(d.labeling_count(), code.square_product());
            }
        }
    }

    #[test]
    fn weights() {
        assert_eq!(path_weight(&[], 1).unwrap(), BigUint::from(1u32));
        assert_eq!(path_weight(&[Step::Up], 1).unwrap(), BigUint::from(1u32));
        assert_eq!(
            path_weight(&[Step::Up, Step::Down], 1).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            path_weight(&[Step::Down, Step::Up], 1).unwrap_err(),
            Error::WeightedPathTouchesAxis {
                point: 1,
                height: 0
            }
        );
        // the final point may sit anywhere
        assert_eq!(path_weight(&[Step::Down], 1).unwrap(), BigUint::from(1u32));
    }
}
