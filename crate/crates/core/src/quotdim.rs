//! Dimension bookkeeping for the Grassmannian embedding of Quot schemes,
//! with the specialization to quotients of `O^r` on P¹.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gotzmann::{gotzmann_number, GotzmannError};
use crate::macaulay::binom;
use crate::polyint::RationalPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("codimension {codim} is not within the ambient dimension {dim} in degree {degree}")]
    Infeasible { degree: u64, dim: u64, codim: i64 },
    #[error("value does not fit in 64 bits")]
    Overflow,
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error(transparent)]
    Gotzmann(#[from] GotzmannError),
}

impl QuotError {
    pub fn kind(&self) -> &'static str {
        match self {
            QuotError::InvalidParameters(_) => "InvalidParameters",
            QuotError::Infeasible { .. } => "Infeasible",
            QuotError::Overflow => "Overflow",
            QuotError::Inconsistency(_) => "Inconsistency",
            QuotError::Gotzmann(e) => e.kind(),
        }
    }
}

/// `Gr(dim, codim)`: subspaces of codimension `codim` in a space of dimension `dim`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grassmannian {
    pub dim: u64,
    pub codim: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotEmbedding {
    /// Gotzmann number of the Hilbert polynomial.
    pub s: u64,
    /// `Gr(S^r_s, P(s))`.
    pub ambient_s: Grassmannian,
    /// `Gr(S^r_{s+1}, P(s+1))`.
    pub ambient_s1: Grassmannian,
}

/// Gotzmann number `k(k+1)/2 + m` of `P(d) = k(d+1) + m` on P¹.
pub fn gotzmann_number_p1(k: u64, m: u64) -> Result<u64, QuotError> {
    if k == 0 {
        return Err(QuotError::InvalidParameters("k must be positive".into()));
    }
    k.checked_mul(k + 1)
        .map(|x| x / 2)
        .and_then(|x| x.checked_add(m))
        .ok_or(QuotError::Overflow)
}

/// `Gr(S^r_e, P(e))` for the degree-`e` piece of `O^r` on Pⁿ.
pub fn grassmannian_at(
    p: &RationalPoly,
    n: u32,
    r: u64,
    e: u64,
) -> Result<Grassmannian, QuotError> {
    let dim = binom(e + n as u64, n as u64)
        .and_then(|b| b.checked_mul(r as u128))
        .and_then(|b| u64::try_from(b).ok())
        .ok_or(QuotError::Overflow)?;
    let value = p.eval_big(&BigInt::from(e));
    if !value.is_integer() {
        return Err(QuotError::InvalidParameters(format!(
            "P({e}) is not an integer"
        )));
    }
    let codim = value.to_integer().to_i64().ok_or(QuotError::Overflow)?;
    if codim < 0 || codim as u64 > dim {
        return Err(QuotError::Infeasible {
            degree: e,
            dim,
            codim,
        });
    }
    Ok(Grassmannian {
        dim,
        codim: codim as u64,
    })
}

/// Grassmannians in degrees `e` and `e + 1` cutting out quotients `F` with
/// `codim F·S_1 = P(e + 1)`.
pub fn grassmannian_pair(
    p: &RationalPoly,
    n: u32,
    r: u64,
    e: u64,
) -> Result<(Grassmannian, Grassmannian), QuotError> {
    Ok((
        grassmannian_at(p, n, r, e)?,
        grassmannian_at(p, n, r, e + 1)?,
    ))
}

/// Embedding data of `Quot_P(O^r)` on Pⁿ at the Gotzmann number `s` of `P`.
pub fn quot_embedding(p: &RationalPoly, n: u32, r: u64) -> Result<QuotEmbedding, QuotError> {
    let s = gotzmann_number(p)?.to_u64().ok_or(QuotError::Overflow)?;
    let (ambient_s, ambient_s1) = grassmannian_pair(p, n, r, s)?;
    Ok(QuotEmbedding {
        s,
        ambient_s,
        ambient_s1,
    })
}

fn check_rkm(r: i64, k: i64, m: i64) -> Result<(), QuotError> {
    if !(1 <= k && k < r && m >= 0) {
        return Err(QuotError::InvalidParameters(format!(
            "need 1 <= k < r and m >= 0, got r={r} k={k} m={m}"
        )));
    }
    Ok(())
}

/// Codimension `[(r-k)l - m][k(l+2) + m]` of the Porteous degeneracy locus.
pub fn porteous_codim(r: i64, k: i64, m: i64, l: i64) -> Result<i64, QuotError> {
    check_rkm(r, k, m)?;
    if l < 0 {
        return Err(QuotError::InvalidParameters(format!(
            "l must be nonnegative, got {l}"
        )));
    }
    Ok(((r - k) * l - m) * (k * (l + 2) + m))
}

/// `[(r-k)(l+1) - m][k(l+1) + m] - porteous_codim(r, k, m, l)`.
pub fn porteous_expected_dim(r: i64, k: i64, m: i64, l: i64) -> Result<i64, QuotError> {
    Ok(((r - k) * (l + 1) - m) * (k * (l + 1) + m) - porteous_codim(r, k, m, l)?)
}

/// Expected dimension `(r-k)k + rm` of `Quot_P(O^r)` on P¹ with `P(d) = k(d+1) + m`.
///
/// Checked against the Porteous computation for `l = 0..=10`.
pub fn expected_dim(r: i64, k: i64, m: i64) -> Result<i64, QuotError> {
    check_rkm(r, k, m)?;
    let dim = (r - k) * k + r * m;
    for l in 0..=10 {
        let via = porteous_expected_dim(r, k, m, l)?;
        if via != dim {
            return Err(QuotError::Inconsistency(format!(
                "Porteous computation gives {via} at l={l}, formula gives {dim}"
            )));
        }
    }
    Ok(dim)
}

/// Kernel `K = ⊕ O(-t_i)` on P¹, with `t` kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplittingType {
    t: Vec<u64>,
}

impl SplittingType {
    pub fn new(mut t: Vec<u64>) -> Self {
        t.sort_unstable();
        SplittingType { t }
    }

    /// The type with exponent form `e`.
    pub fn from_exponents(e: &[u64]) -> Self {
        let t = e
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(i as u64, c as usize))
            .collect();
        SplittingType { t }
    }

    pub fn twists(&self) -> &[u64] {
        &self.t
    }

    /// Number of summands, `r - k`.
    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    /// `Σ t_i = m`.
    pub fn sum(&self) -> u64 {
        self.t.iter().sum()
    }

    /// `e_i = #{j : t_j = i}`, without trailing zeros.
    pub fn exponents(&self) -> Vec<u64> {
        let mut e = vec![0; self.t.last().map_or(0, |&x| x as usize + 1)];
        for &x in &self.t {
            e[x as usize] += 1;
        }
        e
    }
}

/// `dim Aut K = Σ_{i <= j} (j - i + 1) e_i e_j`.
pub fn aut_dim(e: &[u64]) -> u64 {
    let mut total = 0;
    for (i, &ei) in e.iter().enumerate() {
        for (j, &ej) in e.iter().enumerate().skip(i) {
            total += (j - i + 1) as u64 * ei * ej;
        }
    }
    total
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinAut {
    pub min: u64,
    pub argmin: Vec<u64>,
    pub unique: bool,
}

/// Balanced exponent form: `n_sum = i·m_count + e'` with `e_i = m_count - e'`, `e_{i+1} = e'`.
pub fn balanced_exponents(m_count: u64, n_sum: u64) -> Vec<u64> {
    let (i, rest) = ((n_sum / m_count) as usize, n_sum % m_count);
    let mut e = vec![0; i + 2];
    e[i] = m_count - rest;
    e[i + 1] = rest;
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

/// All exponent forms with `Σ e_i = m_count` and `Σ i·e_i = n_sum`.
pub fn exponent_forms(m_count: u64, n_sum: u64) -> Vec<Vec<u64>> {
    // multisets of m_count twists with sum n_sum, as nondecreasing sequences
    fn go(left: u64, sum: u64, min: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            if sum == 0 {
                out.push(SplittingType::new(cur.clone()).exponents());
            }
            return;
        }
        let mut x = min;
        while x * left <= sum {
            cur.push(x);
            go(left - 1, sum - x, x, cur, out);
            cur.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    go(m_count, n_sum, 0, &mut Vec::new(), &mut out);
    out
}

/// Minimum of [`aut_dim`] over exponent forms with `Σ e_i = m_count` and
/// `Σ i·e_i = n_sum`: `m_count²`, attained only at the balanced form.
///
/// The closed form is confirmed by exhaustive enumeration on every call.
pub fn min_aut_dim(m_count: u64, n_sum: u64) -> Result<MinAut, QuotError> {
    if m_count == 0 {
        return Err(QuotError::InvalidParameters(
            "m_count must be positive".into(),
        ));
    }
    let argmin = balanced_exponents(m_count, n_sum);
    let min = aut_dim(&argmin);
    if min != m_count * m_count {
        return Err(QuotError::Inconsistency(format!(
            "balanced form has aut_dim {min}"
        )));
    }
    let forms = exponent_forms(m_count, n_sum);
    let best = forms.iter().map(|e| aut_dim(e)).min();
    let minimizers: Vec<&Vec<u64>> = forms.iter().filter(|e| aut_dim(e) == min).collect();
    if best != Some(min) || minimizers != [&argmin] {
        return Err(QuotError::Inconsistency(format!(
            "enumeration finds minimum {best:?} at {minimizers:?}"
        )));
    }
    Ok(MinAut {
        min,
        argmin,
        unique: true,
    })
}

/// `dim Hom(K, O^r) - dim Aut K = r·Σ(t_i + 1) - aut_dim(e)`.
pub fn hom_mod_aut_dim(st: &SplittingType, r: u64) -> i64 {
    let hom = r * (st.sum() + st.len() as u64);
    hom as i64 - aut_dim(&st.exponents()) as i64
}
