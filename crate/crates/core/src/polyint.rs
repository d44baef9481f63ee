//! Exact univariate polynomials with rational coefficients.
//!
//! Hilbert polynomials are integer valued but generally have non-integer
//! coefficients, so everything here is carried in [`BigRational`]. The
//! binomial terms `binom(d + c, a)` are polynomials in `d`: `binom(d - 3, 0)`
//! is the constant `1` no matter the sign of `d - 3`. The integer convention
//! (`binom(x, y) = 0` for `x < y`) lives in [`crate::macaulay`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("duplicate interpolation abscissa d = {0}")]
    DuplicateAbscissa(i64),
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Polynomial in one variable `d`, stored densely with the constant term first.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients and no degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// The monomial `d`.
    pub fn var() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `d^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// The constant value, if the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, d: i64) -> Rational {
        self.eval_rational(&rat(d))
    }

    pub fn eval_big(&self, d: &BigInt) -> Rational {
        self.eval_rational(&Rational::from_integer(d.clone()))
    }

    pub fn eval_rational(&self, d: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * d + c)
    }

    /// `P(d) - P(d - 1)`.
    pub fn difference(&self) -> Self {
        self - &self.shift(-1)
    }

    /// `P(d + t)`, by Horner's scheme in the linear polynomial `d + t`.
    pub fn shift(&self, t: i64) -> Self {
        let lin = RationalPoly::from_ints(&[t, 1]);
        self.coeffs
            .iter()
            .rev()
            .fold(RationalPoly::zero(), |acc, c| {
                &(&acc * &lin) + &RationalPoly::constant(c.clone())
            })
    }

    /// Whether `P(d)` is an integer for every integer `d`.
    ///
    /// A polynomial of degree `k` is integer valued iff it takes integer
    /// values at `k + 1` consecutive integers, so `0..=k` suffices.
    pub fn is_integer_valued(&self) -> bool {
        let Some(k) = self.degree() else {
            return true;
        };
        (0..=k as i64).all(|d| self.eval(d).is_integer())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Exact Lagrange interpolation through `(d, value)` points.
    pub fn interpolate(points: &[(i64, Rational)]) -> Result<Self, PolyError> {
        for (i, (di, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(dj, _)| dj == di) {
                return Err(PolyError::DuplicateAbscissa(*di));
            }
        }
        let mut result = RationalPoly::zero();
        for (i, (di, vi)) in points.iter().enumerate() {
            let mut basis = RationalPoly::constant(vi.clone());
            for (j, (dj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let factor = RationalPoly::from_ints(&[-dj, 1]).scale(&ratio(1, di - dj));
                basis = &basis * &factor;
            }
            result = &result + &basis;
        }
        Ok(result)
    }

    /// Human-readable form, highest degree first, e.g. `1/3 d^3 + 4 d^2 + 11/3 d + 4`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let var = match i {
                0 => String::new(),
                1 => "d".to_string(),
                _ => format!("d^{i}"),
            };
            if i == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&format!("{mag} {var}"));
            }
        }
        out
    }
}

/// The polynomial `binom(d + c, a) = prod_{j=1..a} (d + c - a + j) / j`.
pub fn binom_poly(c: i64, a: u32) -> RationalPoly {
    binom_poly_big(&BigInt::from(c), a)
}

/// [`binom_poly`] with an arbitrary precision offset.
pub fn binom_poly_big(c: &BigInt, a: u32) -> RationalPoly {
    let a = a as i64;
    (1..=a).fold(RationalPoly::from_ints(&[1]), |acc, j| {
        let root = Rational::from_integer(c - a + j);
        let factor = RationalPoly::new(vec![root, Rational::one()]).scale(&ratio(1, j));
        &acc * &factor
    })
}

/// Constant-first comma separated rationals: `"2,3"` is `3d + 2`.
impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for RationalPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: String| PolyError::Parse {
            input: s.to_string(),
            reason,
        };
        if s.trim().is_empty() {
            return Err(err("empty input".into()));
        }
        let coeffs = s
            .split(',')
            .map(|part| {
                let part = part.trim();
                if part.is_empty() {
                    return Err(err("empty coefficient".into()));
                }
                let value: Rational = part
                    .parse()
                    .map_err(|_| err(format!("bad coefficient {part:?}")))?;
                Ok(value)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RationalPoly::new(coeffs))
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;

    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;

    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;

    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;

    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalPoly {
            type Output = RationalPoly;
            fn $m(self, rhs: RationalPoly) -> RationalPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for RationalPoly {
    fn sum<I: Iterator<Item = RationalPoly>>(iter: I) -> Self {
        iter.fold(RationalPoly::zero(), |acc, p| &acc + &p)
    }
}
