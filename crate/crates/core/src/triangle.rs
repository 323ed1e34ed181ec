//! Exact triangles `B(n,k)`, `E(n,k)` and `T(n,k)`.
//!
//! * `B(n,k)` counts labeled ballot paths from `(0,0)` to `(n,k)`:
//!   `B(n,k) = (k+1) B(n-1,k+1) + k B(n-1,k-1)`, `B(0,0) = 1`. The same rule
//!   covers `k = 0`, where the second term vanishes.
//! * `E(n,k) = (k-1) E(n-1,k-1) + k E(n-1,k+1)` for `k >= 1`, `E(0,1) = 1`.
//!   Column `k = 1` holds the secant numbers and `B(n,k) = E(n,k+1)`.
//! * `T(n,k) = (k-1) T(n-1,k-1) + (k+1) T(n-1,k+1)` for `n >= 2`,
//!   `T(1,1) = 1`: weighted ballot paths from `(1,1)` to `(n,k)`. Column
//!   `k = 1` holds the tangent numbers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};

/// Default largest row index accepted by [`triangle`].
pub const DEFAULT_MAX_ROWS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TriangleKind {
    B,
    E,
    T,
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TriangleKind::B => "B",
            TriangleKind::E => "E",
            TriangleKind::T => "T",
        };
        f.write_str(s)
    }
}

impl FromStr for TriangleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(TriangleKind::B),
            "E" | "e" => Ok(TriangleKind::E),
            "T" | "t" => Ok(TriangleKind::T),
            other => Err(Error::Parse(format!("unknown triangle kind `{other}`"))),
        }
    }
}

/// Dense table; row `n` holds columns `0..=n+1` with structural zeros stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    kind: TriangleKind,
    rows: Vec<Vec<BigUint>>,
}

fn cell(rows: &[Vec<BigUint>], n: usize, k: i64) -> BigUint {
    if k < 0 {
        return BigUint::zero();
    }
    rows.get(n)
        .and_then(|row| row.get(k as usize))
        .cloned()
        .unwrap_or_default()
}

impl Triangle {
    pub(crate) fn build(kind: TriangleKind, max_n: usize) -> Triangle {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let width = n + 2;
            let mut row = vec![BigUint::zero(); width];
            for (k, slot) in row.iter_mut().enumerate() {
                let ki = k as i64;
                *slot = match (kind, n) {
                    (TriangleKind::B, 0) => BigUint::from(u32::from(k == 0)),
                    (TriangleKind::E, 0) => BigUint::from(u32::from(k == 1)),
                    (TriangleKind::T, 0) => BigUint::zero(),
                    (TriangleKind::T, 1) => BigUint::from(u32::from(k == 1)),
                    (TriangleKind::B, _) => {
                        cell(&rows, n - 1, ki + 1) * (k + 1) + cell(&rows, n - 1, ki - 1) * k
                    }
                    (TriangleKind::E, _) if k == 0 => BigUint::zero(),
                    (TriangleKind::E, _) => {
                        cell(&rows, n - 1, ki - 1) * (k - 1) + cell(&rows, n - 1, ki + 1) * k
                    }
                    (TriangleKind::T, _) if k == 0 => BigUint::zero(),
                    (TriangleKind::T, _) => {
                        cell(&rows, n - 1, ki - 1) * (k - 1) + cell(&rows, n - 1, ki + 1) * (k + 1)
                    }
                };
            }
            rows.push(row);
        }
        Triangle { kind, rows }
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry `(n, k)`, zero outside the stored range.
    pub fn get(&self, n: usize, k: usize) -> BigUint {
        cell(&self.rows, n, k as i64)
    }

    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    pub fn row_sum(&self, n: usize) -> BigUint {
        self.rows[n].iter().sum()
    }

    /// Nonzero entries as `(n, k, value)` in `(n, k)` order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> {
        self.rows.iter().enumerate().flat_map(|(n, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(k, v)| (n, k, v))
        })
    }

    /// CSV with header `n,k,value`, structural zeros omitted.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for (n, k, v) in self.nonzero_entries() {
            out.push_str(&format!("{n},{k},{v}\n"));
        }
        out
    }

    /// JSON array of rows, each an array of decimal strings indexed by `k`.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(n, row)| {
                let width = match self.kind {
                    TriangleKind::B => n + 1,
                    _ => n + 2,
                };
                row[..width].iter().map(BigUint::to_string).collect()
            })
            .collect();
        serde_json::to_value(rows).expect("strings serialize")
    }
}

/// Builds the table of `kind` for rows `0..=max_n`.
pub fn triangle(kind: TriangleKind, max_n: usize) -> Result<Triangle> {
    triangle_capped(kind, max_n, DEFAULT_MAX_ROWS)
}

pub fn triangle_capped(kind: TriangleKind, max_n: usize, cap: usize) -> Result<Triangle> {
    if max_n > cap {
        return Err(Error::CapExceeded { n: max_n, cap });
    }
    Ok(Triangle::build(kind, max_n))
}

/// The Springer number `S_n`, the row sum of `B`.
pub fn springer(n: usize) -> BigUint {
    Triangle::build(TriangleKind::B, n).row_sum(n)
}

/// First `(n, k)` with `B(n,k) != E(n,k+1)`, if any, over `0 <= k <= n <= max_n`.
pub fn b_equals_e_shift(max_n: usize) -> Option<(usize, usize)> {
    let b = Triangle::build(TriangleKind::B, max_n);
    let e = Triangle::build(TriangleKind::E, max_n);
    (0..=max_n)
        .flat_map(|n| (0..=n).map(move |k| (n, k)))
        .find(|&(n, k)| b.get(n, k) != e.get(n, k + 1))
}

/// `G_n(y) = sum_k B(n,k) y^k`, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowPolynomial(Vec<BigUint>);

impl RowPolynomial {
    pub fn coefficients(&self) -> &[BigUint] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn eval(&self, y: &BigUint) -> BigUint {
        self.0
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * y + c)
    }
}

impl fmt::Display for RowPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}y"),
                _ => format!("{c}y^{k}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

pub fn row_polynomial(n: usize) -> RowPolynomial {
    let b = Triangle::build(TriangleKind::B, n);
    RowPolynomial(b.row(n)[..=n].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn b_entries() {
        let b = triangle(TriangleKind::B, 8).unwrap();
        assert_eq!(b.get(4, 2), big(28));
        assert_eq!(b.get(6, 2), big(662));
        assert_eq!(b.get(8, 2), big(24568));
        assert_eq!(b.get(7, 3), big(7266));
        assert_eq!(b.get(7, 5), big(10920));
        assert_eq!(b.get(7, 7), big(5040));
        let mut fact = big(1);
        for n in 0..=8u64 {
            if n > 0 {
                fact *= n;
            }
            assert_eq!(b.get(n as usize, n as usize), fact);
        }
        assert_eq!(b.get(3, 2), big(0));
        assert_eq!(b.get(3, 9), big(0));
    }

    #[test]
    fn e_and_t_columns() {
        let e = triangle(TriangleKind::E, 8).unwrap();
        let secants: Vec<BigUint> = [0, 2, 4, 6, 8].iter().map(|&n| e.get(n, 1)).collect();
        assert_eq!(secants, [1u64, 1, 5, 61, 1385].map(big));
        assert_eq!(e.get(1, 2), big(1));
        assert_eq!(e.get(2, 1), big(1));
        let t = triangle(TriangleKind::T, 7).unwrap();
        let tangents: Vec<BigUint> = [1, 3, 5, 7].iter().map(|&n| t.get(n, 1)).collect();
        assert_eq!(tangents, [1u64, 2, 16, 272].map(big));
        assert_eq!(t.get(2, 2), big(1));
        assert_eq!(t.get(0, 0), big(0));
    }

    #[test]
    fn springer_numbers() {
        let got: Vec<BigUint> = (0..=7).map(springer).collect();
        assert_eq!(got, [1u64, 1, 3, 11, 57, 361, 2763, 24611].map(big));
    }

    #[test]
    fn shift_identity() {
        assert_eq!(b_equals_e_shift(0), None);
        assert_eq!(b_equals_e_shift(8), None);
        assert_eq!(b_equals_e_shift(12), None);
    }

    #[test]
    fn row_polynomials() {
        assert_eq!(row_polynomial(3).to_string(), "5y + 6y^3");
        assert_eq!(row_polynomial(0).to_string(), "1");
        let g4 = row_polynomial(4);
        assert_eq!(g4.to_string(), "5 + 28y^2 + 24y^4");
        assert_eq!(g4.eval(&big(1)), big(57));
        assert_eq!(g4.degree(), 4);
    }

    #[test]
    fn exports() {
        let b = triangle(TriangleKind::B, 2).unwrap();
        assert_eq!(b.to_csv(), "n,k,value\n0,0,1\n1,1,1\n2,0,1\n2,2,2\n");
        assert_eq!(
            b.to_json(),
            serde_json::json!([["1"], ["0", "1"], ["1", "0", "2"]])
        );
        assert_eq!(
            triangle(TriangleKind::B, 0).unwrap().to_csv(),
            "n,k,value\n0,0,1\n"
        );
    }

    #[test]
    fn caps_and_kinds() {
        assert_eq!(
            triangle(TriangleKind::B, 65).unwrap_err(),
            Error::CapExceeded { n: 65, cap: 64 }
        );
        assert!(triangle(TriangleKind::T, 64).is_ok());
        assert_eq!("e".parse::<TriangleKind>().unwrap(), TriangleKind::E);
        assert!("Q".parse::<TriangleKind>().is_err());
    }
}
