//! Signed permutations and snakes of type B.
//!
//! Entries are stored as nonzero `i32`, a barred element being a negative
//! integer. The natural order on signed integers, `-n < ... < -1 < 1 < ... < n`,
//! is exactly the ordinary order on `i32`, so every comparison below uses `<`
//! directly. Do not compare by absolute value.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default largest `n` accepted by the exhaustive enumerators.
pub const DEFAULT_ENUMERATION_CAP: usize = 10;

/// A sequence of nonzero integers whose absolute values are `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPermutation(Vec<i32>);

impl SignedPermutation {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for (idx, &e) in entries.iter().enumerate() {
            if e == 0 {
                return Err(Error::ZeroEntry { position: idx + 1 });
            }
            let m = e.unsigned_abs();
            if m as usize > n {
                return Err(Error::MagnitudeOutOfRange {
                    magnitude: m,
                    len: n,
                });
            }
            if seen[m as usize] {
                return Err(Error::DuplicateMagnitude { magnitude: m });
            }
            seen[m as usize] = true;
        }
        Ok(SignedPermutation(entries))
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_entries(self) -> Vec<i32> {
        self.0
    }

    /// 1-based position of the entry with absolute value `magnitude`.
    pub fn position_of(&self, magnitude: u32) -> Option<usize> {
        self.0
            .iter()
            .position(|e| e.unsigned_abs() == magnitude)
            .map(|i| i + 1)
    }
}

impl TryFrom<Vec<i32>> for SignedPermutation {
    type Error = Error;

    fn try_from(entries: Vec<i32>) -> Result<Self> {
        SignedPermutation::new(entries)
    }
}

impl From<SignedPermutation> for Vec<i32> {
    fn from(p: SignedPermutation) -> Self {
        p.0
    }
}

fn write_entries(f: &mut fmt::Formatter<'_>, entries: &[i32]) -> fmt::Result {
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

fn parse_entries(s: &str) -> Result<Vec<i32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i32>()
                .map_err(|_| Error::Parse(format!("`{tok}` is not a signed integer")))
        })
        .collect()
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.0)
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses comma-separated signed decimals such as `2,-1,5,4,7,-6,-3`.
    fn from_str(s: &str) -> Result<Self> {
        SignedPermutation::new(parse_entries(s)?)
    }
}

/// Returns the first 1-based position where the snake condition
/// `0 < p1 > p2 < p3 > ...` fails.
fn snake_violation(entries: &[i32]) -> Option<usize> {
    if let Some(&first) = entries.first() {
        if first < 0 {
            return Some(1);
        }
    }
    entries.windows(2).enumerate().find_map(|(i, w)| {
        // w[0] sits at 1-based position i + 1
        let descent_expected = i % 2 == 0;
        let ok = if descent_expected {
            w[0] > w[1]
        } else {
            w[0] < w[1]
        };
        (!ok).then_some(i + 2)
    })
}

pub fn is_snake(p: &SignedPermutation) -> bool {
    snake_violation(p.entries()).is_none()
}

/// A signed permutation satisfying `0 < p1 > p2 < p3 > p4 < ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct Snake(SignedPermutation);

impl Snake {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        Snake::try_from(SignedPermutation::new(entries)?)
    }

    pub fn empty() -> Self {
        Snake(SignedPermutation(Vec::new()))
    }

    pub fn entries(&self) -> &[i32] {
        self.0.entries()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_signed_permutation(&self) -> &SignedPermutation {
        &self.0
    }

    pub fn position_of(&self, magnitude: u32) -> Option<usize> {
        self.0.position_of(magnitude)
    }

    /// True when no entry is negative.
    pub fn is_unsigned(&self) -> bool {
        self.entries().iter().all(|&e| e > 0)
    }

    /// The inversion code `(c_1, ..., c_n)`.
    ///
    /// For odd `n`, `c_i` counts the pairs `(p_{2k}, p_{2k+1})` with `i < 2k`
    /// and `p_{2k} < p_i < p_{2k+1}`. For even `n` it counts the pairs
    /// `(p_{2k-1}, p_{2k})` with `i < 2k-1` and `p_{2k} < p_i < p_{2k-1}`.
    pub fn inversion_code(&self) -> InversionCode {
        let p = self.entries();
        let n = p.len();
        // (low, high, first 1-based position) of every pair that can straddle
        let pairs: Vec<(i32, i32, usize)> = if n % 2 == 1 {
            (1..=(n - 1) / 2)
                .map(|k| (p[2 * k - 1], p[2 * k], 2 * k))
                .collect()
        } else {
            (1..=n / 2)
                .map(|k| (p[2 * k - 1], p[2 * k - 2], 2 * k - 1))
                .collect()
        };
        let values = (1..=n)
            .map(|i| {
                let v = p[i - 1];
                pairs
                    .iter()
                    .filter(|&&(lo, hi, start)| i < start && lo < v && v < hi)
                    .count() as u32
            })
            .collect();
        InversionCode(values)
    }

    /// Positive entries at odd positions and negative entries at even
    /// positions count `+1`; the other two cases count `-1`.
    pub fn alpha(&self) -> i64 {
        self.entries()
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let odd_position = i % 2 == 0;
                if (e > 0) == odd_position {
                    1
                } else {
                    -1
                }
            })
            .sum()
    }

    /// Standardization of the prefix `p_1 ... p_len`.
    pub fn standardized_prefix(&self, len: usize) -> Snake {
        let prefix = standardize(&self.entries()[..len])
            .expect("snake entries have distinct nonzero magnitudes");
        Snake(prefix)
    }
}

impl TryFrom<SignedPermutation> for Snake {
    type Error = Error;

    fn try_from(p: SignedPermutation) -> Result<Self> {
        match snake_violation(p.entries()) {
            None => Ok(Snake(p)),
            Some(position) => Err(Error::NotASnake { position }),
        }
    }
}

impl TryFrom<Vec<i32>> for Snake {
    type Error = Error;

    fn try_from(entries: Vec<i32>) -> Result<Self> {
        Snake::new(entries)
    }
}

impl From<Snake> for Vec<i32> {
    fn from(s: Snake) -> Self {
        s.0 .0
    }
}

impl fmt::Display for Snake {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Snake {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Snake::try_from(s.parse::<SignedPermutation>()?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InversionCode(Vec<u32>);

impl InversionCode {
    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `c_i` for a 1-based position `i`.
    pub fn get(&self, i: usize) -> u32 {
        self.0[i - 1]
    }
}

/// Replaces each entry by its sign times the rank of its absolute value.
///
/// The entries need distinct nonzero magnitudes but need not be `1..=n`.
/// Signs and the relative natural order are preserved.
pub fn standardize(entries: &[i32]) -> Result<SignedPermutation> {
    let mut order: Vec<usize> = (0..entries.len()).collect();
    for (i, &e) in entries.iter().enumerate() {
        if e == 0 {
            return Err(Error::ZeroEntry { position: i + 1 });
        }
    }
    order.sort_by_key(|&i| entries[i].unsigned_abs());
    for w in order.windows(2) {
        let m = entries[w[0]].unsigned_abs();
        if m == entries[w[1]].unsigned_abs() {
            return Err(Error::DuplicateMagnitude { magnitude: m });
        }
    }
    let mut out = vec![0i32; entries.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = entries[i].signum() * (rank as i32 + 1);
    }
    Ok(SignedPermutation(out))
}

/// Lexicographic stream of every snake of type `B_n`.
///
/// Entries are chosen depth first from `1, -1, 2, -2, ..., n, -n`: sequences
/// are compared entry by entry on absolute value, a positive entry coming
/// before its negative. This is the order in which the snakes of type `B_3`
/// are customarily listed (`1,-2,3`, `1,-3,2`, `1,-3,-2`, `2,1,3`, ...).
#[derive(Debug, Clone)]
pub struct Snakes {
    n: usize,
    prefix: Vec<i32>,
    used: Vec<bool>,
    cursor: Vec<usize>,
    done: bool,
}

impl Snakes {
    pub fn new(n: usize) -> Self {
        Snakes {
            n,
            prefix: Vec::with_capacity(n),
            used: vec![false; n + 1],
            cursor: vec![0; n + 1],
            done: false,
        }
    }

    fn candidate(&self, idx: usize) -> i32 {
        let magnitude = (idx / 2 + 1) as i32;
        if idx.is_multiple_of(2) {
            magnitude
        } else {
            -magnitude
        }
    }

    fn fits(&self, v: i32) -> bool {
        if self.used[v.unsigned_abs() as usize] {
            return false;
        }
        match self.prefix.last() {
            None => v > 0,
            Some(&prev) if self.prefix.len() % 2 == 1 => prev > v,
            Some(&prev) => prev < v,
        }
    }

    fn pop(&mut self) {
        if let Some(v) = self.prefix.pop() {
            self.used[v.unsigned_abs() as usize] = false;
        }
    }
}

impl Iterator for Snakes {
    type Item = Snake;

    fn next(&mut self) -> Option<Snake> {
        if self.done {
            return None;
        }
        loop {
            let depth = self.prefix.len();
            if depth == self.n {
                let out = Snake(SignedPermutation(self.prefix.clone()));
                if depth == 0 {
                    self.done = true;
                } else {
                    self.pop();
                }
                return Some(out);
            }
            let mut extended = false;
            while self.cursor[depth] < 2 * self.n {
                let v = self.candidate(self.cursor[depth]);
                self.cursor[depth] += 1;
                if self.fits(v) {
                    self.prefix.push(v);
                    self.used[v.unsigned_abs() as usize] = true;
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

/// Every snake of type `B_n`, refusing `n` above [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_snakes(n: usize) -> Result<Snakes> {
    enumerate_snakes_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_snakes_capped(n: usize, cap: usize) -> Result<Snakes> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(Snakes::new(n))
}
