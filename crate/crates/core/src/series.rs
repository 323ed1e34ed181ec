//! Truncated power series with exact coefficients.
//!
//! Coefficients are stored as ordinary power-series coefficients `a_n`; the
//! exponential-generating-function value `n! a_n` is only formed on
//! extraction. The same [`Series`] type serves univariate series over the
//! rationals ([`EgfSeries`]) and series whose coefficients are polynomials in
//! a second variable `y` ([`BivariateSeries`]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::enumerate_level_codes;
use crate::triangle::{Triangle, TriangleKind};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 16;

/// Ring operations needed by [`Series`].
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + Zero + One + Sub<Output = Self> + Neg<Output = Self>
{
    fn scale(&self, factor: &BigRational) -> Self;
    /// Multiplicative inverse, if the element is a unit.
    fn inverse(&self) -> Option<Self>;
}

impl Coefficient for BigRational {
    fn scale(&self, factor: &BigRational) -> Self {
        self * factor
    }
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

/// Dense polynomial in `y` with rational coefficients, lowest degree first,
/// without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPoly(Vec<BigRational>);

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly(coeffs)
    }

    pub fn constant(c: BigRational) -> Self {
        RationalPoly::new(vec![c])
    }

    /// `c * y^k`
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        RationalPoly::new(coeffs)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.0.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn eval(&self, y: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * y + c)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(BigRational, BigRational) -> BigRational) -> Self {
        let len = self.0.len().max(other.0.len());
        RationalPoly::new((0..len).map(|k| f(self.coeff(k), other.coeff(k))).collect())
    }
}

impl Add for RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: Self) -> Self {
        self.zip_with(&rhs, |a, b| a + b)
    }
}

impl Sub for RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: Self) -> Self {
        self.zip_with(&rhs, |a, b| a - b)
    }
}

impl Neg for RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> Self {
        RationalPoly(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Mul for RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: Self) -> Self {
        if self.0.is_empty() || rhs.0.is_empty() {
            return RationalPoly(Vec::new());
        }
        let mut out = vec![BigRational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

impl Zero for RationalPoly {
    fn zero() -> Self {
        RationalPoly(Vec::new())
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl One for RationalPoly {
    fn one() -> Self {
        RationalPoly::constant(BigRational::one())
    }
}

impl Coefficient for RationalPoly {
    fn scale(&self, factor: &BigRational) -> Self {
        RationalPoly::new(self.0.iter().map(|c| c * factor).collect())
    }
    fn inverse(&self) -> Option<Self> {
        match self.0.as_slice() {
            [c] => Some(RationalPoly::constant(c.recip())),
            _ => None,
        }
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("({c})y"),
                _ => format!("({c})y^{k}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// A power series truncated after `x^order`.
#[derive(Debug, Clone, PartialEq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

pub type EgfSeries = Series<BigRational>;
pub type BivariateSeries = Series<RationalPoly>;

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl<C: Coefficient> Series<C> {
    /// Series with coefficients `a_0..=a_order`.
    pub fn from_coefficients(coeffs: Vec<C>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series keeps at least the constant term"
        );
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[C] {
        &self.coeffs
    }

    /// Ordinary coefficient of `x^n`.
    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    /// `n! a_n`.
    pub fn egf_coefficient(&self, n: usize) -> C {
        self.coeffs[n].scale(&BigRational::from_integer(factorial(n)))
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.scale(factor)).collect(),
        }
    }

    /// Substitutes `x -> factor * x`.
    pub fn dilate(&self, factor: &BigRational) -> Self {
        let mut power = BigRational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c.scale(&power);
                power *= factor;
                out
            })
            .collect();
        Series { coeffs }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(C::zero(), |acc, i| {
                    acc + self.coeffs[i].clone() * other.coeffs[n - i].clone()
                })
            })
            .collect();
        Series { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].clone() + other.coeffs[n].clone())
            .collect();
        Series { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].clone() - other.coeffs[n].clone())
            .collect();
        Series { coeffs }
    }

    /// `1/f`, from `b_0 = 1/a_0` and `b_n = -b_0 sum_{i=1..n} a_i b_{n-i}`.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].inverse().ok_or(Error::NotInvertible)?;
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let acc = (1..=n).fold(C::zero(), |acc, i| {
                acc + self.coeffs[i].clone() * out[n - i].clone()
            });
            out.push(-(inv0.clone() * acc));
        }
        Ok(Series { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.reciprocal()?))
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Series::one(self.order());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }
}

impl<C: Coefficient> Add for &Series<C> {
    type Output = Series<C>;
    fn add(self, rhs: Self) -> Series<C> {
        Series::add(self, rhs)
    }
}

impl<C: Coefficient> Sub for &Series<C> {
    type Output = Series<C>;
    fn sub(self, rhs: Self) -> Series<C> {
        Series::sub(self, rhs)
    }
}

impl<C: Coefficient> Mul for &Series<C> {
    type Output = Series<C>;
    fn mul(self, rhs: Self) -> Series<C> {
        Series::mul(self, rhs)
    }
}

impl<C: Coefficient> Neg for &Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        Series {
            coeffs: self.coeffs.iter().cloned().map(Neg::neg).collect(),
        }
    }
}

#[derive(Serialize)]
struct RationalRecord {
    num: String,
    den: String,
}

fn rational_record(q: &BigRational) -> RationalRecord {
    RationalRecord {
        num: q.numer().to_string(),
        den: q.denom().to_string(),
    }
}

impl EgfSeries {
    /// `n! a_n` as an integer, or `None` when it is not one.
    pub fn egf_integer(&self, n: usize) -> Option<BigInt> {
        let v = self.egf_coefficient(n);
        v.is_integer().then(|| v.to_integer())
    }

    /// All `n! a_n` when every one of them is an integer.
    pub fn egf_integers(&self) -> Option<Vec<BigInt>> {
        (0..=self.order()).map(|n| self.egf_integer(n)).collect()
    }

    /// JSON array of `{"num": "...", "den": "..."}` for `a_0..=a_order`.
    pub fn to_json(&self) -> serde_json::Value {
        let records: Vec<RationalRecord> = self.coeffs.iter().map(rational_record).collect();
        serde_json::to_value(records).expect("strings serialize")
    }

    pub fn to_bivariate(&self) -> BivariateSeries {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .cloned()
                .map(RationalPoly::constant)
                .collect(),
        }
    }
}

impl BivariateSeries {
    /// Substitutes a rational value for `y`.
    pub fn specialize(&self, y: &BigRational) -> EgfSeries {
        Series {
            coeffs: self.coeffs.iter().map(|p| p.eval(y)).collect(),
        }
    }

    /// Multiplies every coefficient by `y`.
    pub fn times_y(&self) -> Self {
        let y = RationalPoly::monomial(BigRational::one(), 1);
        Series {
            coeffs: self.coeffs.iter().map(|p| p.clone() * y.clone()).collect(),
        }
    }

    /// JSON array (over `x` powers) of arrays (over `y` powers) of rationals.
    pub fn to_json(&self) -> serde_json::Value {
        let records: Vec<Vec<RationalRecord>> = self
            .coeffs
            .iter()
            .map(|p| p.coefficients().iter().map(rational_record).collect())
            .collect();
        serde_json::to_value(records).expect("strings serialize")
    }
}

pub fn sin(order: usize) -> EgfSeries {
    let coeffs = (0..=order)
        .map(|n| match n % 4 {
            1 => BigRational::new(BigInt::one(), factorial(n)),
            3 => -BigRational::new(BigInt::one(), factorial(n)),
            _ => BigRational::zero(),
        })
        .collect();
    Series { coeffs }
}

pub fn cos(order: usize) -> EgfSeries {
    let coeffs = (0..=order)
        .map(|n| match n % 4 {
            0 => BigRational::new(BigInt::one(), factorial(n)),
            2 => -BigRational::new(BigInt::one(), factorial(n)),
            _ => BigRational::zero(),
        })
        .collect();
    Series { coeffs }
}

pub fn sec(order: usize) -> EgfSeries {
    cos(order).reciprocal().expect("cos has constant term 1")
}

pub fn tan(order: usize) -> EgfSeries {
    sin(order).mul(&sec(order))
}

fn sec_2x(order: usize) -> EgfSeries {
    cos(order)
        .dilate(&rational(2, 1))
        .reciprocal()
        .expect("cos 2x has constant term 1")
}

/// Names accepted by [`trig`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrigName {
    Sin,
    Cos,
    Sec,
    Tan,
    /// `sec 2x cos x`
    Sec2xCosx,
    /// `sec 2x sin x`
    Sec2xSinx,
    /// `1 / (cos x - sin x)`
    SpringerEgf,
}

impl TrigName {
    pub const ALL: [TrigName; 7] = [
        TrigName::Sin,
        TrigName::Cos,
        TrigName::Sec,
        TrigName::Tan,
        TrigName::Sec2xCosx,
        TrigName::Sec2xSinx,
        TrigName::SpringerEgf,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TrigName::Sin => "sin",
            TrigName::Cos => "cos",
            TrigName::Sec => "sec",
            TrigName::Tan => "tan",
            TrigName::Sec2xCosx => "sec2x_cosx",
            TrigName::Sec2xSinx => "sec2x_sinx",
            TrigName::SpringerEgf => "springer_egf",
        }
    }
}

impl fmt::Display for TrigName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TrigName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TrigName::ALL
            .into_iter()
            .find(|t| t.as_str() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown series `{s}`")))
    }
}

/// Maclaurin expansion of a named series through `x^order`.
pub fn trig(name: TrigName, order: usize) -> EgfSeries {
    match name {
        TrigName::Sin => sin(order),
        TrigName::Cos => cos(order),
        TrigName::Sec => sec(order),
        TrigName::Tan => tan(order),
        TrigName::Sec2xCosx => sec_2x(order).mul(&cos(order)),
        TrigName::Sec2xSinx => sec_2x(order).mul(&sin(order)),
        TrigName::SpringerEgf => cos(order)
            .sub(&sin(order))
            .reciprocal()
            .expect("cos - sin has constant term 1"),
    }
}

/// `1 / (cos x - y sin x)`; the `y^k` coefficient of `x^n`, times `n!`, is `B(n,k)`.
pub fn b_bivariate(order: usize) -> BivariateSeries {
    let denom = cos(order)
        .to_bivariate()
        .sub(&sin(order).to_bivariate().times_y());
    denom.reciprocal().expect("constant term is 1")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColumnKind {
    /// `tan^k x sec x`, the exponential generating function of column `k` of `B`.
    B,
    /// `tan^k x / k`, the exponential generating function of column `k` of `T`.
    T,
}

pub fn column_egf(kind: ColumnKind, k: usize, order: usize) -> Result<EgfSeries> {
    let tan_k = tan(order).pow(k);
    match kind {
        ColumnKind::B => Ok(tan_k.mul(&sec(order))),
        ColumnKind::T if k == 0 => Err(Error::InvalidArgument(
            "the tangent column needs k >= 1".into(),
        )),
        ColumnKind::T => Ok(tan_k.scale(&rational(1, k as i64))),
    }
}

/// The generalized Euler numbers `c_{2,m}` and class numbers `d_{2,m}`,
/// read off `sec 2x cos x` and `sec 2x sin x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShanksNumbers {
    c: Vec<BigInt>,
    d: Vec<BigInt>,
}

impl ShanksNumbers {
    /// `c_{2,0..=max_m}` and `d_{2,1..=max_m}`.
    pub fn new(max_m: usize) -> Self {
        let order = (2 * max_m).max(1);
        let cs = trig(TrigName::Sec2xCosx, order);
        let ds = trig(TrigName::Sec2xSinx, order);
        let c = (0..=max_m)
            .map(|m| cs.egf_integer(2 * m).expect("c_{2,m} is an integer"))
            .collect();
        let d = (1..=max_m)
            .map(|m| ds.egf_integer(2 * m - 1).expect("d_{2,m} is an integer"))
            .collect();
        ShanksNumbers { c, d }
    }

    pub fn max_m(&self) -> usize {
        self.c.len() - 1
    }

    pub fn c(&self, m: usize) -> &BigInt {
        &self.c[m]
    }

    /// `d_{2,m}` for `m >= 1`.
    pub fn d(&self, m: usize) -> &BigInt {
        &self.d[m - 1]
    }

    /// `sum_{i=0..m} (-4)^i C(2m,2i) c_{2,m-i}`, which should be `(-1)^m`.
    pub fn c_recurrence_value(&self, m: usize) -> BigInt {
        (0..=m)
            .map(|i| minus_four_pow(i) * binomial(2 * m, 2 * i) * self.c(m - i))
            .sum()
    }

    /// `sum_{i=0..m-1} (-4)^i C(2m-1,2i) d_{2,m-i}`, which should be `(-1)^(m-1)`.
    pub fn d_recurrence_value(&self, m: usize) -> BigInt {
        (0..m)
            .map(|i| minus_four_pow(i) * binomial(2 * m - 1, 2 * i) * self.d(m - i))
            .sum()
    }

    /// First `m` at which either recurrence fails.
    pub fn first_recurrence_failure(&self) -> Option<String> {
        let sign = |e: usize| {
            if e.is_multiple_of(2) {
                BigInt::one()
            } else {
                -BigInt::one()
            }
        };
        for m in 0..=self.max_m() {
            let v = self.c_recurrence_value(m);
            if v != sign(m) {
                return Some(format!("c-recurrence at m={m} gives {v}"));
            }
            if m >= 1 {
                let v = self.d_recurrence_value(m);
                if v != sign(m - 1) {
                    return Some(format!("d-recurrence at m={m} gives {v}"));
                }
            }
        }
        None
    }
}

fn minus_four_pow(i: usize) -> BigInt {
    let p = BigInt::from(4).pow(i as u32);
    if i.is_multiple_of(2) {
        p
    } else {
        -p
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `s_{2,0..=max_n}`: `c_{2,n/2}` at even `n` and `d_{2,(n+1)/2}` at odd `n`.
pub fn s2_sequence(max_n: usize) -> Vec<BigInt> {
    let shanks = ShanksNumbers::new(max_n.div_ceil(2));
    (0..=max_n)
        .map(|n| {
            if n % 2 == 0 {
                shanks.c(n / 2).clone()
            } else {
                shanks.d(n.div_ceil(2)).clone()
            }
        })
        .collect()
}

/// Level-code sums against the tangent and secant numbers at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelCodeSums {
    pub n: usize,
    /// Sum over level codes of length `n` of `prod l_i (l_i + 1)`.
    pub pronic_sum: BigInt,
    /// `(2n+1)! [x^(2n+1)] tan x`
    pub tangent: BigInt,
    /// Sum over level codes of length `n` of `prod l_i^2`.
    pub square_sum: BigInt,
    /// `(2n)! [x^(2n)] sec x`
    pub secant: BigInt,
    /// `B(2n, 0)`
    pub dyck_labelings: BigInt,
}

impl LevelCodeSums {
    pub fn holds(&self) -> bool {
        self.pronic_sum == self.tangent
            && self.square_sum == self.secant
            && self.square_sum == self.dyck_labelings
    }
}

/// Compares the level-code product sums with the tangent and secant numbers
/// and with `B(2n,0)` for every `n <= max_n`.
pub fn level_code_product_sums(max_n: usize) -> Vec<LevelCodeSums> {
    let order = 2 * max_n + 1;
    let tan_s = tan(order);
    let sec_s = sec(order);
    let b = Triangle::build(TriangleKind::B, 2 * max_n);
    (0..=max_n)
        .map(|n| {
            let (pronic, square) =
                enumerate_level_codes(n).fold((BigInt::zero(), BigInt::zero()), |(p, s), code| {
                    (
                        p + BigInt::from(code.pronic_product()),
                        s + BigInt::from(code.square_product()),
                    )
                });
            LevelCodeSums {
                n,
                pronic_sum: pronic,
                tangent: tan_s
                    .egf_integer(2 * n + 1)
                    .expect("tangent numbers are integers"),
                square_sum: square,
                secant: sec_s
                    .egf_integer(2 * n)
                    .expect("secant numbers are integers"),
                dyck_labelings: BigInt::from(b.get(2 * n, 0)),
            }
        })
        .collect()
}

/// `true` when `|a_n|` vanishes wherever `pred(n)` holds.
pub fn vanishes_where(series: &EgfSeries, pred: impl Fn(usize) -> bool) -> bool {
    (0..=series.order())
        .filter(|&n| pred(n))
        .all(|n| series.coeff(n).abs().is_zero())
}
