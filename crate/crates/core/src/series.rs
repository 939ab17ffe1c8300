//! Truncated power series with exact rational coefficients, and the three
//! generating functions of the row built from their closed forms.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("divisor has a zero constant term")]
    DivisionByZeroConstantTerm,
    #[error("square root needs constant term 1")]
    BadConstantTerm,
    #[error("cannot divide by x: constant term is nonzero")]
    NonzeroConstantTerm,
}

/// Coefficients `c_0 .. c_{N-1}`; everything from `x^N` on is discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// Integer coefficients, truncated or zero-padded to `order`.
    pub fn from_integers(values: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (slot, &v) in s.coeffs.iter_mut().zip(values) {
            *slot = BigRational::from_integer(BigInt::from(v));
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        Self { coeffs }
    }

    /// `x` at the given order.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficients as integers, if they all are.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    fn check_order(&self, other: &Self) -> Result<usize, SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch(self.order(), other.order()));
        }
        Ok(self.order())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let order = self.check_order(other)?;
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..order - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `q` with `q * divisor = self` up to the order.
    pub fn div(&self, divisor: &Self) -> Result<Self, SeriesError> {
        let order = self.check_order(divisor)?;
        let lead = divisor.coeff(0);
        if lead.is_zero() {
            return Err(SeriesError::DivisionByZeroConstantTerm);
        }
        let mut q: Vec<BigRational> = Vec::with_capacity(order);
        for j in 0..order {
            let mut acc = self.coeffs[j].clone();
            for i in 1..=j {
                acc -= &divisor.coeffs[i] * &q[j - i];
            }
            q.push(acc / &lead);
        }
        Ok(Self { coeffs: q })
    }

    /// Square root with constant term 1, solved coefficientwise from `s^2 = self`.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let order = self.order();
        if order == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadConstantTerm);
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let mut s: Vec<BigRational> = Vec::with_capacity(order);
        s.push(BigRational::one());
        for j in 1..order {
            let mut acc = self.coeffs[j].clone();
            for i in 1..j {
                acc -= &s[i] * &s[j - i];
            }
            s.push(acc / &two);
        }
        Ok(Self { coeffs: s })
    }

    /// Multiply by `x`, dropping the coefficient pushed past the order.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order());
        if self.order() > 0 {
            coeffs.push(BigRational::zero());
            coeffs.extend_from_slice(&self.coeffs[..self.order() - 1]);
        }
        Self { coeffs }
    }

    /// Divide by `x`. The result has one fewer coefficient.
    pub fn shift_down(&self) -> Result<Self, SeriesError> {
        match self.coeffs.first() {
            None => Ok(self.clone()),
            Some(c) if !c.is_zero() => Err(SeriesError::NonzeroConstantTerm),
            Some(_) => Ok(Self {
                coeffs: self.coeffs[1..].to_vec(),
            }),
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut s = self.clone();
        s.coeffs.resize(order, BigRational::zero());
        s
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order())
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `M(x) = 2 / (1 - x + sqrt(1 - 2x - 3x^2))`.
pub fn motzkin_gf(order: usize) -> TruncatedSeries {
    let disc = TruncatedSeries::from_integers(&[1, -2, -3], order);
    let root = disc.sqrt().expect("constant term 1");
    let denom = TruncatedSeries::from_integers(&[1, -1], order)
        .add(&root)
        .expect("same order");
    TruncatedSeries::constant(int(2), order)
        .div(&denom)
        .expect("denominator starts with 2")
}

/// `M - 1 - x M - x^2 M^2`; the zero series when `M` is the Motzkin series.
pub fn functional_residual(m: &TruncatedSeries) -> TruncatedSeries {
    let order = m.order();
    let xm = m.shift_up();
    let x2m2 = m.mul(m).expect("same order").shift_up().shift_up();
    m.sub(&TruncatedSeries::one(order))
        .and_then(|s| s.sub(&xm))
        .and_then(|s| s.sub(&x2m2))
        .expect("same order")
}

/// `U(x) = x - 1 + (1 - x) M(x)`.
pub fn increment_gf(order: usize) -> TruncatedSeries {
    let m = motzkin_gf(order);
    let one_minus_x = TruncatedSeries::from_integers(&[1, -1], order);
    TruncatedSeries::from_integers(&[-1, 1], order)
        .add(&one_minus_x.mul(&m).expect("same order"))
        .expect("same order")
}

/// The two separable halves of the prime-pair weight generating function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairParts {
    /// `x M(x) - x`: coefficient `n` is `M_{n-1}` for `n >= 2`.
    pub x_part: TruncatedSeries,
    /// `((1 - y - y^2) M(y) - 1) / y`: coefficient `r` is `delta(r)` for `r >= 1`.
    pub y_part: TruncatedSeries,
}

pub fn pair_gf_parts(order: usize) -> PairParts {
    let m = motzkin_gf(order);
    let x_part = m
        .shift_up()
        .sub(&TruncatedSeries::x(order))
        .expect("same order");

    // the 1/y pole cancels: build y * y_part one order higher, then divide by y
    let m_wide = motzkin_gf(order + 1);
    let y_times = TruncatedSeries::from_integers(&[1, -1, -1], order + 1)
        .mul(&m_wide)
        .and_then(|s| s.sub(&TruncatedSeries::one(order + 1)))
        .expect("same order");
    let y_part = y_times.shift_down().expect("constant term M_0 - 1 = 0");
    PairParts { x_part, y_part }
}
