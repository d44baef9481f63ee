//! Gotzmann representations of Hilbert polynomials.
//!
//! A Gotzmann representation writes `P(d)` as
//! `binom(d + a_1, a_1) + binom(d + a_2 - 1, a_2) + ... + binom(d + a_s - (s - 1), a_s)`
//! with `a_1 >= ... >= a_s >= 0`; the number of terms `s` is the Gotzmann
//! number and bounds the regularity of the kernel of any globally generated
//! quotient with Hilbert polynomial `P`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::polyint::{binom_poly, binom_poly_big, RationalPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GotzmannError {
    #[error("polynomial {0} is not integer valued")]
    NotIntegerValued(String),
    #[error("no Gotzmann representation: {0}")]
    NoGotzmannRepresentation(String),
    #[error("Hilbert function value does not fit in 64 bits")]
    Overflow,
}

impl GotzmannError {
    pub fn kind(&self) -> &'static str {
        match self {
            GotzmannError::NotIntegerValued(_) => "NotIntegerValued",
            GotzmannError::NoGotzmannRepresentation(_) => "NoGotzmannRepresentation",
            GotzmannError::Overflow => "Overflow",
        }
    }
}

fn no_rep(reason: impl Into<String>) -> GotzmannError {
    GotzmannError::NoGotzmannRepresentation(reason.into())
}

/// A run of `count` equal entries `value` in a representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Run {
    pub value: u32,
    pub count: BigUint,
}

/// Longest sequence [`GotzmannRep::to_vec`] will materialize.
pub const MAX_EXPLICIT_LEN: usize = 1 << 20;

/// Nonincreasing sequence `a_1 >= ... >= a_s >= 0`, stored run-length encoded.
///
/// Gotzmann numbers grow doubly exponentially with the degree (the
/// representation of `binom(d + 11, 10)` has a 284-bit length), so counts are
/// arbitrary precision and the explicit sequence is only built on request.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GotzmannRep {
    runs: Vec<Run>,
}

impl GotzmannRep {
    /// `None` unless the sequence is nonincreasing.
    pub fn new(a: Vec<u32>) -> Option<Self> {
        if !a.windows(2).all(|w| w[0] >= w[1]) {
            return None;
        }
        let mut runs: Vec<Run> = Vec::new();
        for v in a {
            match runs.last_mut() {
                Some(r) if r.value == v => r.count += 1u32,
                _ => runs.push(Run {
                    value: v,
                    count: BigUint::one(),
                }),
            }
        }
        Some(GotzmannRep { runs })
    }

    /// `None` unless run values strictly decrease; empty runs are dropped.
    pub fn from_runs(runs: impl IntoIterator<Item = (u32, BigUint)>) -> Option<Self> {
        let runs: Vec<Run> = runs
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(value, count)| Run { value, count })
            .collect();
        runs.windows(2)
            .all(|w| w[0].value > w[1].value)
            .then_some(GotzmannRep { runs })
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    /// The Gotzmann number `s`.
    pub fn len(&self) -> BigUint {
        self.runs.iter().map(|r| &r.count).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Number of positive entries `t`.
    pub fn positive_len(&self) -> BigUint {
        self.runs
            .iter()
            .filter(|r| r.value > 0)
            .map(|r| &r.count)
            .sum()
    }

    /// The explicit sequence `[a_1, ..., a_s]`, if `s <= MAX_EXPLICIT_LEN`.
    pub fn to_vec(&self) -> Option<Vec<u32>> {
        let s = self.len().to_usize().filter(|&s| s <= MAX_EXPLICIT_LEN)?;
        let mut out = Vec::with_capacity(s);
        for r in &self.runs {
            out.extend(std::iter::repeat_n(r.value, r.count.to_usize()?));
        }
        Some(out)
    }

    /// Representation with every positive entry lowered by one and the zeros dropped.
    pub fn lowered(&self) -> GotzmannRep {
        GotzmannRep {
            runs: self
                .runs
                .iter()
                .filter(|r| r.value > 0)
                .map(|r| Run {
                    value: r.value - 1,
                    count: r.count.clone(),
                })
                .collect(),
        }
    }

    /// Sum of the summands with zero-based positions `< limit` (all of them for `None`).
    fn partial_poly(&self, limit: Option<&BigUint>) -> RationalPoly {
        let mut start = BigUint::zero();
        let mut total = RationalPoly::zero();
        for r in &self.runs {
            let m = match limit {
                Some(l) if &start >= l => break,
                Some(l) => (l - &start).min(r.count.clone()),
                None => r.count.clone(),
            };
            total = &total + &run_poly(r.value, &start, &m);
            start += &r.count;
        }
        total
    }
}

/// `sum_{i = i0}^{i0 + m - 1} binom(d + a - i, a)`, telescoped with
/// `binom(x + 1, a + 1) - binom(x, a + 1) = binom(x, a)`.
fn run_poly(a: u32, i0: &BigUint, m: &BigUint) -> RationalPoly {
    let top = BigInt::from(a) - BigInt::from(i0.clone()) + 1;
    let bottom = &top - BigInt::from(m.clone());
    &binom_poly_big(&top, a + 1) - &binom_poly_big(&bottom, a + 1)
}

pub fn rep_to_poly(rep: &GotzmannRep) -> RationalPoly {
    rep.partial_poly(None)
}

/// The unique Gotzmann representation of `p`, if one exists.
///
/// Recursion on the difference operator: the difference of the summand
/// `binom(d + a_i - i, a_i)` is `binom(d + a_i - 1 - i, a_i - 1)`, so the
/// positive entries of a representation of `p` are one more than the entries
/// of the representation of `p(d) - p(d - 1)`. What remains must be a
/// nonnegative integer constant, which supplies the trailing zeros.
pub fn gotzmann_rep(p: &RationalPoly) -> Result<GotzmannRep, GotzmannError> {
    if !p.is_integer_valued() {
        return Err(GotzmannError::NotIntegerValued(p.to_string()));
    }
    rep_of(p)
}

fn rep_of(p: &RationalPoly) -> Result<GotzmannRep, GotzmannError> {
    let mut runs: Vec<(u32, BigUint)> = Vec::new();
    if p.degree().is_some_and(|k| k > 0) {
        let lower = rep_of(&p.difference())?;
        runs.extend(lower.runs.into_iter().map(|r| (r.value + 1, r.count)));
    }
    let positive = GotzmannRep::from_runs(runs.iter().cloned()).expect("shifted runs stay ordered");
    let residual = p - &rep_to_poly(&positive);
    let Some(c) = residual.as_constant() else {
        return Err(no_rep(format!(
            "residual {} after the positive-degree terms of {} is not constant",
            residual.pretty(),
            p.pretty()
        )));
    };
    if !c.is_integer() {
        return Err(no_rep(format!("constant residual {c} is not an integer")));
    }
    let Some(zeros) = c.to_integer().to_biguint() else {
        return Err(no_rep(format!(
            "constant residual {c} of {} is negative",
            p.pretty()
        )));
    };
    runs.push((0, zeros));
    let rep =
        GotzmannRep::from_runs(runs).ok_or_else(|| no_rep("entries are not nonincreasing"))?;
    if &rep_to_poly(&rep) != p {
        return Err(no_rep("representation does not reproduce the polynomial"));
    }
    Ok(rep)
}

pub fn gotzmann_number(p: &RationalPoly) -> Result<BigUint, GotzmannError> {
    gotzmann_rep(p).map(|r| r.len())
}

/// Representation of `p + q`; exists whenever both summands have one.
pub fn gotzmann_sum(p: &RationalPoly, q: &RationalPoly) -> Result<GotzmannRep, GotzmannError> {
    gotzmann_rep(p)?;
    gotzmann_rep(q)?;
    gotzmann_rep(&(p + q))
}

/// Representation of `binom(d + n + 1, n) = 1 + binom(d + 1, 1) + ... + binom(d + n, n)`.
pub fn binomial_sum_rep(n: u32) -> GotzmannRep {
    let p: RationalPoly = (1..=n)
        .map(|i| binom_poly(i as i64, i))
        .fold(RationalPoly::from_ints(&[1]), |acc, t| &acc + &t);
    gotzmann_rep(&p).expect("a sum of Gotzmann-representable polynomials is representable")
}

/// `H(d)`: the sum of the first `min(d + 1, s)` summands evaluated at `d`.
///
/// For `d >= s - 1` this is `P(d)`; below that it truncates the
/// representation, which builds a Hilbert function with polynomial `P`.
pub fn gotzmann_hilbert_function(rep: &GotzmannRep, d: u64) -> Result<u64, GotzmannError> {
    let limit = BigUint::from(d) + 1u32;
    let value = rep.partial_poly(Some(&limit)).eval_big(&BigInt::from(d));
    debug_assert!(value.is_integer());
    value.to_integer().to_u64().ok_or(GotzmannError::Overflow)
}

/// `[H(0), ..., H(upto)]` from [`gotzmann_hilbert_function`].
pub fn gotzmann_hilbert_values(rep: &GotzmannRep, upto: u64) -> Result<Vec<u64>, GotzmannError> {
    (0..=upto)
        .map(|d| gotzmann_hilbert_function(rep, d))
        .collect()
}

/// Gotzmann regularity bound for a globally generated quotient of a free
/// module with generators in degree at most zero: the kernel sheaf is
/// `s`-regular, `s` the Gotzmann number of the Hilbert polynomial.
///
/// This is an upper bound only; it is not sharp for sheaves.
pub fn regularity_bound(p: &RationalPoly) -> Result<BigUint, GotzmannError> {
    gotzmann_number(p)
}

/// If `F(a)` is globally generated with Hilbert polynomial `p`, then `F` is
/// `(s + a)`-regular.
pub fn regularity_bound_twisted(p: &RationalPoly, a: u64) -> Result<BigUint, GotzmannError> {
    Ok(gotzmann_number(p)? + a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macaulay::{
        macaulay_bound_holds, macaulay_transform, scheme_hf_criterion, scheme_hf_violation,
    };
    use crate::polyint::rat;
    use proptest::prelude::*;

    fn p(s: &str) -> RationalPoly {
        s.parse().unwrap()
    }

    fn rep(a: &[u32]) -> GotzmannRep {
        GotzmannRep::new(a.to_vec()).unwrap()
    }

    #[test]
    fn rep_to_poly_examples() {
        assert_eq!(rep_to_poly(&rep(&[1, 1, 1, 0, 0])), p("2,3"));
        assert_eq!(rep_to_poly(&rep(&[])), RationalPoly::zero());
        assert_eq!(rep_to_poly(&rep(&[3, 2])), p("1,7/3,3/2,1/6"));
        assert_eq!(
            rep_to_poly(&rep(&[3, 2])),
            &binom_poly(3, 3) + &binom_poly(1, 2)
        );
    }

    #[test]
    fn rep_examples() {
        assert_eq!(gotzmann_rep(&p("2,3")).unwrap(), rep(&[1, 1, 1, 0, 0]));
        assert!(matches!(
            gotzmann_rep(&p("0,1")),
            Err(GotzmannError::NoGotzmannRepresentation(_))
        ));
        assert_eq!(gotzmann_rep(&p("5")).unwrap(), rep(&[0, 0, 0, 0, 0]));
        assert_eq!(gotzmann_rep(&RationalPoly::zero()).unwrap(), rep(&[]));
        assert!(matches!(
            gotzmann_rep(&p("0,1/2")),
            Err(GotzmannError::NotIntegerValued(_))
        ));
        assert!(matches!(
            gotzmann_rep(&p("-1")),
            Err(GotzmannError::NoGotzmannRepresentation(_))
        ));
    }

    #[test]
    fn number_examples() {
        assert_eq!(gotzmann_number(&p("2,3")), Ok(5u32.into()));
        assert_eq!(gotzmann_number(&p("2,2")), Ok(3u32.into()));
        // binom(d + 3, 2) = binom(d + 2, 2) + binom(d, 1) + 2
        let b = binom_poly(3, 2);
        assert_eq!(gotzmann_rep(&b).unwrap(), rep(&[2, 1, 0, 0]));
        assert_eq!(gotzmann_number(&b), Ok(4u32.into()));
    }

    #[test]
    fn sum_examples() {
        assert_eq!(
            gotzmann_sum(&p("2,3"), &RationalPoly::zero()).unwrap(),
            rep(&[1, 1, 1, 0, 0])
        );
        assert_eq!(gotzmann_sum(&p("1"), &p("1")).unwrap(), rep(&[0, 0]));
        let r = gotzmann_sum(&p("2,2"), &p("1,1")).unwrap();
        assert_eq!(rep_to_poly(&r), p("3,3"));
        assert_eq!(r, rep(&[1, 1, 1, 0, 0, 0]));
        assert!(gotzmann_sum(&p("0,1"), &p("1")).is_err());
    }

    #[test]
    fn binomial_sum_examples() {
        assert_eq!(binomial_sum_rep(0), rep(&[0]));
        assert_eq!(binomial_sum_rep(1), rep(&[1, 0]));
        assert_eq!(binomial_sum_rep(2), rep(&[2, 1, 0, 0]));
        for n in 0..=10 {
            assert_eq!(
                rep_to_poly(&binomial_sum_rep(n)),
                binom_poly(n as i64 + 1, n)
            );
        }
        // run lengths of the n = 6 representation
        let counts: Vec<BigUint> = binomial_sum_rep(6)
            .runs()
            .iter()
            .map(|r| r.count.clone())
            .collect();
        let expected: Vec<BigUint> = [1u32, 1, 2, 6, 36, 876, 408_696]
            .map(BigUint::from)
            .to_vec();
        assert_eq!(counts, expected);
        assert_eq!(binomial_sum_rep(10).len().bits(), 284);
    }

    #[test]
    fn hilbert_function_examples() {
        let r = rep(&[1, 1, 1, 0, 0]);
        assert_eq!(gotzmann_hilbert_function(&r, 0), Ok(1));
        assert_eq!(gotzmann_hilbert_function(&r, 1), Ok(3));
        for d in 4..20 {
            assert_eq!(gotzmann_hilbert_function(&r, d), Ok(3 * d + 2));
        }
        assert_eq!(
            gotzmann_hilbert_values(&r, 6).unwrap(),
            vec![1, 3, 6, 10, 14, 17, 20]
        );
    }

    #[test]
    fn truncated_hilbert_function_fails_reversed_inequality() {
        // H = 1, 3, 6, 10, 14, 17, ...: 10^<3> = 15 > 14 and 14^<4> = 18 > 17,
        // so the reversed inequality fails at d = 3, and equality is absent at d = s - 1 = 4.
        let h = gotzmann_hilbert_values(&rep(&[1, 1, 1, 0, 0]), 8).unwrap();
        assert!(!scheme_hf_criterion(&h).unwrap());
        assert_eq!(scheme_hf_violation(&h), Ok(Some(3)));
        assert_eq!(macaulay_transform(14, 4), Ok(18));
        assert!(macaulay_bound_holds(&h).unwrap());
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(regularity_bound(&p("2,2")), Ok(3u32.into()));
        assert_eq!(regularity_bound(&p("2,3")), Ok(5u32.into()));
        assert_eq!(regularity_bound(&p("1")), Ok(1u32.into()));
        let e4 = p("4,11/3,4,1/3");
        let s = gotzmann_number(&e4).unwrap();
        assert_eq!(rep_to_poly(&gotzmann_rep(&e4).unwrap()), e4);
        assert_eq!(s, 179u32.into());
        assert_eq!(regularity_bound_twisted(&e4, 4), Ok(183u32.into()));
        assert_eq!(regularity_bound_twisted(&p("2,2"), 0), Ok(3u32.into()));
        assert_eq!(regularity_bound_twisted(&p("1"), 2), Ok(3u32.into()));
    }

    #[test]
    fn run_sums_match_termwise_sums() {
        for a in 0..5u32 {
            for i0 in 0..6u64 {
                for m in 0..6u64 {
                    let direct: RationalPoly = (i0..i0 + m)
                        .map(|i| binom_poly(a as i64 - i as i64, a))
                        .sum();
                    assert_eq!(run_poly(a, &i0.into(), &m.into()), direct);
                }
            }
        }
    }

    fn arb_rep() -> impl Strategy<Value = GotzmannRep> {
        prop::collection::vec(0u32..=6, 0..=12).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            GotzmannRep::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn round_trip_uniqueness(r in arb_rep()) {
            prop_assert_eq!(gotzmann_rep(&rep_to_poly(&r)).unwrap(), r);
        }

        #[test]
        fn difference_lowers_positive_entries(r in arb_rep()) {
            let t = r.positive_len().to_usize().unwrap();
            let lowered: Vec<u32> = r.to_vec().unwrap()[..t].iter().map(|a| a - 1).collect();
            prop_assert_eq!(&r.lowered(), &GotzmannRep::new(lowered).unwrap());
            prop_assert_eq!(rep_to_poly(&r).difference(), rep_to_poly(&r.lowered()));
        }

        #[test]
        fn trailing_zero_count_is_constant_residual(r in arb_rep(), d in -5i64..5) {
            let t = r.positive_len().to_usize().unwrap();
            let positive = GotzmannRep::new(r.to_vec().unwrap()[..t].to_vec()).unwrap();
            let residual = &rep_to_poly(&r) - &rep_to_poly(&positive);
            prop_assert!(residual.degree().is_none_or(|k| k == 0));
            prop_assert_eq!(residual.eval(d), rat((r.len().to_usize().unwrap() - t) as i64));
        }

        #[test]
        fn closed_under_sum(r in arb_rep(), q in arb_rep()) {
            let sum = gotzmann_sum(&rep_to_poly(&r), &rep_to_poly(&q)).unwrap();
            prop_assert_eq!(rep_to_poly(&sum), &rep_to_poly(&r) + &rep_to_poly(&q));
        }

        #[test]
        fn truncated_hilbert_function_is_macaulay(r in arb_rep()) {
            let s = r.len().to_u64().unwrap();
            let h = gotzmann_hilbert_values(&r, s + 3).unwrap();
            let poly = rep_to_poly(&r);
            if !r.is_empty() {
                prop_assert!(macaulay_bound_holds(&h).unwrap());
            }
            for d in s.saturating_sub(1)..=s + 3 {
                prop_assert_eq!(rat(h[d as usize] as i64), poly.eval(d as i64));
            }
            // persistence from the Gotzmann number on
            for d in s.max(1)..s + 3 {
                prop_assert_eq!(macaulay_transform(h[d as usize], d as i64).unwrap(), h[d as usize + 1]);
            }
        }
    }
}
