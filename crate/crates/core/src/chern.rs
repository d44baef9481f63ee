//! Chern classes of rank-2 sheaves on P³ and their Hilbert polynomials.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyint::{binom_poly, rat, ratio, Rational, RationalPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChernError {
    #[error("wrong shape: {0}")]
    WrongShape(String),
    #[error("Chern classes are not integers: {0}")]
    NonIntegralChern(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

impl ChernError {
    pub fn kind(&self) -> &'static str {
        match self {
            ChernError::WrongShape(_) => "WrongShape",
            ChernError::NonIntegralChern(_) => "NonIntegralChern",
            ChernError::InvalidParameters(_) => "InvalidParameters",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChernData {
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
}

impl ChernData {
    pub fn new(c1: i64, c2: i64, c3: i64) -> Self {
        ChernData { c1, c2, c3 }
    }
}

/// Constant term `c̄` of the Hilbert polynomial.
fn constant_term(c1: &Rational, c2: &Rational, c3: &Rational) -> Rational {
    c1 * c1 * c1 / rat(6) + c1 * c1 + c1 * ratio(11, 6) - c1 * c2 / rat(2) - c2 * rat(2)
        + c3 / rat(2)
        + rat(2)
}

/// Hirzebruch–Riemann–Roch for a rank-2 sheaf on P³:
/// `P(d) = d³/3 + (2 + c1/2) d² + (c1²/2 + 2 c1 + 11/3 - c2) d + c̄`.
pub fn hp_from_chern(c: ChernData) -> RationalPoly {
    let (c1, c2, c3) = (rat(c.c1), rat(c.c2), rat(c.c3));
    let quad = rat(2) + &c1 / rat(2);
    let lin = &c1 * &c1 / rat(2) + &c1 * rat(2) + ratio(11, 3) - &c2;
    RationalPoly::new(vec![constant_term(&c1, &c2, &c3), lin, quad, ratio(1, 3)])
}

fn integral(x: &Rational, name: &str) -> Result<i64, ChernError> {
    if !x.is_integer() {
        return Err(ChernError::NonIntegralChern(format!("{name} = {x}")));
    }
    x.to_integer()
        .to_i64()
        .ok_or_else(|| ChernError::NonIntegralChern(format!("{name} = {x} out of range")))
}

/// Inverts [`hp_from_chern`], solving for `c1`, then `c2`, then `c3`.
pub fn chern_from_hp(p: &RationalPoly) -> Result<ChernData, ChernError> {
    if p.degree() != Some(3) || p.coeff(3) != ratio(1, 3) {
        return Err(ChernError::WrongShape(format!(
            "expected degree 3 with leading coefficient 1/3, got {}",
            p.pretty()
        )));
    }
    let c1 = integral(&((p.coeff(2) - rat(2)) * rat(2)), "c1")?;
    let c1r = rat(c1);
    let c2 = integral(
        &(&c1r * &c1r / rat(2) + &c1r * rat(2) + ratio(11, 3) - p.coeff(1)),
        "c2",
    )?;
    let c2r = rat(c2);
    let without_c3 = constant_term(&c1r, &c2r, &Rational::zero());
    let c3 = integral(&((p.coeff(0) - without_c3) * rat(2)), "c3")?;
    Ok(ChernData { c1, c2, c3 })
}

/// `c1² + 3 c1 + 2`, the bound on `c2` for rank-2 globally generated sheaves on P³.
pub fn c2_upper_bound(c1: i64) -> Result<i64, ChernError> {
    if c1 < 0 {
        return Err(ChernError::InvalidParameters(format!(
            "c1 must be nonnegative, got {c1}"
        )));
    }
    Ok(c1 * c1 + 3 * c1 + 2)
}

/// `(2 c1³ - 4 c1² + 2) / (3 c1 - 4)`, the bound on `c2` for non-split rank-2
/// globally generated vector bundles on P³ with `c1 >= 4`.
pub fn chi12_bound(c1: i64) -> Result<Rational, ChernError> {
    if c1 < 4 {
        return Err(ChernError::InvalidParameters(format!(
            "c1 must be at least 4, got {c1}"
        )));
    }
    Ok(Rational::new(
        (2 * c1 * c1 * c1 - 4 * c1 * c1 + 2).into(),
        (3 * c1 - 4).into(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank2Decomposition {
    pub chern: ChernData,
    /// `binom(d+3, 3) + binom(d+2, 3)`.
    pub p3_part: RationalPoly,
    /// Number of degree-2 terms, `c1 + 1`.
    pub p2_terms: i64,
    /// Coefficient of `d` left after removing the degree-3 and degree-2 terms: `c1² + 3 c1 + 2 - c2`.
    pub linear_coeff: i64,
    /// `c̄ - 1 - b` with `b = (c1³ + 3 c1² + 2 c1) / 6`.
    pub constant_residual: Rational,
    /// Constant left after also removing `linear_coeff` degree-1 terms, when that count is nonnegative.
    pub final_constant: Option<Rational>,
    pub bound_ok: bool,
}

/// `P_2 = binom(d, 2) + binom(d - 1, 2) + ... + binom(d - c1, 2)`.
pub fn p2_part(c1: i64) -> RationalPoly {
    (0..=c1).map(|i| binom_poly(-i, 2)).sum()
}

/// Splits `P` into the degree-3, degree-2 and remaining parts of its
/// would-be Gotzmann representation.
pub fn decompose_p3_rank2(p: &RationalPoly) -> Result<Rank2Decomposition, ChernError> {
    let chern = chern_from_hp(p)?;
    let ChernData { c1, c2, .. } = chern;
    let p3_part = binom_poly(3, 3) + binom_poly(2, 3);
    let linear_coeff = c1 * c1 + 3 * c1 + 2 - c2;
    let b = ratio(c1 * c1 * c1 + 3 * c1 * c1 + 2 * c1, 6);
    let constant_residual = p.coeff(0) - rat(1) - b;
    // the linear terms sit at positions i = c1 + 4, ..., c1 + 3 + L and are d - i + 2
    let final_constant = (linear_coeff >= 0).then(|| {
        let first = c1 + 2;
        let last = c1 + 1 + linear_coeff;
        let shift: i64 = if linear_coeff == 0 {
            0
        } else {
            (first + last) * linear_coeff / 2
        };
        &constant_residual + rat(shift)
    });
    Ok(Rank2Decomposition {
        chern,
        p3_part,
        p2_terms: c1 + 1,
        linear_coeff,
        constant_residual,
        final_constant,
        bound_ok: linear_coeff >= 0,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C1Check {
    pub c1: Rational,
    pub ok: bool,
}

/// Reads `c1` off the top two coefficients
/// `r dⁿ/n! + (r(n+1)/2 + c1) d^{n-1}/(n-1)!` of a rank-`r` Hilbert polynomial on Pⁿ.
pub fn c1_nonneg_check(p: &RationalPoly, r: u64, n: u32) -> Result<C1Check, ChernError> {
    if n == 0 {
        return Err(ChernError::InvalidParameters(
            "ambient dimension must be positive".into(),
        ));
    }
    let fact = |k: u32| -> Rational { (1..=k as i64).map(rat).fold(Rational::one(), |a, b| a * b) };
    let lead = rat(r as i64) / fact(n);
    if p.degree() != Some(n as usize) || p.coeff(n as usize) != lead {
        return Err(ChernError::WrongShape(format!(
            "expected degree {n} with leading coefficient {lead}, got {}",
            p.pretty()
        )));
    }
    let c1 = p.coeff(n as usize - 1) * fact(n - 1) - ratio(r as i64 * (n as i64 + 1), 2);
    let ok = !c1.is_negative();
    Ok(C1Check { c1, ok })
}

/// Whether `c3` makes `hp_from_chern` integer-valued; equivalent to `c1 c2 ≡ c3 (mod 2)`.
pub fn integral_c3(c1: i64, c2: i64, c3: i64) -> bool {
    (c1 * c2 - c3).is_even()
}
