//! Monomial ideals and monomial submodules of twisted free modules.
//!
//! A monomial submodule `N` of `F = S e_1 + ... + S e_r` (with `deg e_j = f_j <= 0`)
//! splits as `I_1 e_1 + ... + I_r e_r`, so a [`MonomialModule`] is stored as
//! a list of twisted monomial ideals and describes the quotient `M = F / N`.
//! Variables are `x_0, ..., x_n` with lex order `x_0 > x_1 > ... > x_n`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gotzmann::{gotzmann_number, GotzmannError};
use crate::macaulay::{binom, macaulay_transform, MacaulayError};
use crate::polyint::{binom_poly_big, rat, RationalPoly};

/// Default cap on generators for inclusion–exclusion (`2^gens` subsets).
pub const DEFAULT_SERIES_GEN_BOUND: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonomialError {
    #[error("expected {expected} variables, got {got}")]
    VariableCount { expected: usize, got: usize },
    #[error("a module needs at least one variable")]
    NoVariables,
    #[error("twist {0} is positive; generator degrees must be at most zero")]
    PositiveTwist(i64),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("{count} generators exceed the inclusion-exclusion bound {bound}")]
    TooManyGenerators { count: usize, bound: usize },
    #[error("ideal is not strongly stable")]
    NotStronglyStable,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("persistence fails at degree {d}: H(d+2) = {actual}, expected {expected}")]
    PersistenceCounterexample { d: i64, actual: u64, expected: u64 },
    #[error("Hilbert function value does not fit in 64 bits")]
    Overflow,
    #[error(transparent)]
    Gotzmann(#[from] GotzmannError),
    #[error(transparent)]
    Macaulay(#[from] MacaulayError),
}

fn parse_err(input: &str, reason: impl Into<String>) -> MonomialError {
    MonomialError::Parse {
        input: input.to_string(),
        reason: reason.into(),
    }
}

/// Exponent vector of `x_0^{e_0} ... x_n^{e_n}`.
///
/// The derived order compares exponents of `x_0` first, so among monomials
/// of equal degree it is the lex order with `x_0` largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(vars: usize) -> Self {
        Monomial(vec![0; vars])
    }

    pub fn var(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    /// `self / x_i`, if `x_i` divides `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        let mut e = self.0.clone();
        e[i] = e[i].checked_sub(1)?;
        Some(Monomial(e))
    }

    /// `self : x_i`, i.e. `self / x_i` when divisible and `self` otherwise.
    pub fn colon_var(&self, i: usize) -> Monomial {
        self.div_var(i).unwrap_or_else(|| self.clone())
    }

    pub fn parse(s: &str, vars: usize) -> Result<Self, MonomialError> {
        let mut e = vec![0u32; vars];
        let s = s.trim();
        if s.is_empty() {
            return Err(parse_err(s, "empty monomial"));
        }
        if s == "1" {
            return Ok(Monomial(e));
        }
        for tok in s
            .split(|c: char| c.is_whitespace() || c == '*')
            .filter(|t| !t.is_empty())
        {
            let (base, exp) = match tok.split_once('^') {
                Some((b, x)) => (
                    b,
                    x.parse::<u32>()
                        .map_err(|_| parse_err(s, format!("bad exponent in {tok:?}")))?,
                ),
                None => (tok, 1),
            };
            let idx: usize = base
                .strip_prefix('x')
                .and_then(|i| i.parse().ok())
                .ok_or_else(|| parse_err(s, format!("bad variable {base:?}")))?;
            if idx >= vars {
                return Err(parse_err(
                    s,
                    format!("variable x{idx} out of range for {vars} variables"),
                ));
            }
            e[idx] += exp;
        }
        Ok(Monomial(e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{i}")
                } else {
                    format!("x{i}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// All monomials of degree `e` in `vars` variables, lex-descending.
pub fn monomials_of_degree(vars: usize, e: u32) -> Vec<Monomial> {
    fn go(vars: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == vars {
            cur.push(left);
            out.push(Monomial(cur.clone()));
            cur.pop();
            return;
        }
        for x in (0..=left).rev() {
            cur.push(x);
            go(vars, i + 1, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if vars > 0 {
        go(vars, 0, e, &mut Vec::with_capacity(vars), &mut out);
    } else if e == 0 {
        out.push(Monomial(Vec::new()));
    }
    out
}

/// Monomial ideal with a minimal generating set, sorted by degree and then lex-descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(
        vars: usize,
        gens: impl IntoIterator<Item = Monomial>,
    ) -> Result<Self, MonomialError> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| g.vars() != vars) {
            return Err(MonomialError::VariableCount {
                expected: vars,
                got: g.vars(),
            });
        }
        Ok(Self::minimalized(vars, gens))
    }

    fn minimalized(vars: usize, gens: Vec<Monomial>) -> Self {
        let mut gens: Vec<Monomial> = gens
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        // smaller degree first, so a divisor is always seen before its multiples
        gens.sort_by_key(Monomial::degree);
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        minimal.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        MonomialIdeal {
            vars,
            gens: minimal,
        }
    }

    pub fn zero(vars: usize) -> Self {
        MonomialIdeal {
            vars,
            gens: Vec::new(),
        }
    }

    pub fn unit(vars: usize) -> Self {
        MonomialIdeal {
            vars,
            gens: vec![Monomial::one(vars)],
        }
    }

    /// The homogeneous maximal ideal `(x_0, ..., x_n)`.
    pub fn maximal(vars: usize) -> Self {
        Self::minimalized(vars, (0..vars).map(|i| Monomial::var(vars, i)).collect())
    }

    pub fn parse(s: &str, vars: usize) -> Result<Self, MonomialError> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::zero(vars));
        }
        let gens = s
            .split(',')
            .map(|g| Monomial::parse(g, vars))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vars, gens)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == 0)
    }

    pub fn max_gen_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// `dim_k I_e`.
    pub fn dim_in_degree(&self, e: u32) -> u64 {
        monomials_of_degree(self.vars, e)
            .iter()
            .filter(|m| self.contains(m))
            .count() as u64
    }

    /// `dim_k (S/I)_e`, zero for negative `e`.
    pub fn quotient_hf(&self, e: i64) -> u64 {
        if e < 0 {
            return 0;
        }
        monomials_of_degree(self.vars, e as u32)
            .iter()
            .filter(|m| !self.contains(m))
            .count() as u64
    }

    /// Degree of the lcm of all generators; every subset lcm has degree at most this.
    pub fn lcm_degree(&self) -> u32 {
        self.gens
            .iter()
            .fold(Monomial::one(self.vars), |acc, g| acc.lcm(g))
            .degree()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    /// Degree `f_j <= 0` of the basis element `e_j`.
    pub twist: i64,
    pub ideal: MonomialIdeal,
}

/// `M = F / N` with `F = sum_j S e_j`, `deg e_j = f_j`, and `N = sum_j I_j e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialModule {
    vars: usize,
    components: Vec<Component>,
}

impl MonomialModule {
    /// Components are ordered so that `f_1 <= ... <= f_r <= 0`.
    pub fn new(vars: usize, components: Vec<Component>) -> Result<Self, MonomialError> {
        if vars == 0 {
            return Err(MonomialError::NoVariables);
        }
        for c in &components {
            if c.twist > 0 {
                return Err(MonomialError::PositiveTwist(c.twist));
            }
            if c.ideal.vars() != vars {
                return Err(MonomialError::VariableCount {
                    expected: vars,
                    got: c.ideal.vars(),
                });
            }
        }
        let mut components = components;
        components.sort_by_key(|c| c.twist);
        Ok(MonomialModule { vars, components })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// `n`, the dimension of the ambient projective space.
    pub fn ambient_dim(&self) -> usize {
        self.vars - 1
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    /// Largest generator degree of `F`, i.e. `max f_j`.
    pub fn max_twist(&self) -> Option<i64> {
        self.components.iter().map(|c| c.twist).max()
    }

    /// Largest degree of a generator of `N` as an element of `F`.
    pub fn max_submodule_gen_degree(&self) -> Option<i64> {
        self.components
            .iter()
            .filter_map(|c| c.ideal.max_gen_degree().map(|g| g as i64 + c.twist))
            .max()
    }

    pub fn from_json(s: &str) -> Result<Self, MonomialError> {
        let doc: ModuleDoc =
            serde_json::from_str(s).map_err(|e| parse_err("module document", e.to_string()))?;
        doc.try_into()
    }

    pub fn to_doc(&self) -> ModuleDoc {
        ModuleDoc {
            vars: self.vars,
            components: self
                .components
                .iter()
                .map(|c| ComponentDoc {
                    twist: c.twist,
                    gens: c.ideal.gens().iter().map(ToString::to_string).collect(),
                })
                .collect(),
        }
    }
}

/// Serialized form of a module: `{"vars": n+1, "components": [{"twist": f, "gens": ["x0^2 x1", ...]}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub vars: usize,
    pub components: Vec<ComponentDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    pub twist: i64,
    #[serde(default)]
    pub gens: Vec<String>,
}

impl TryFrom<ModuleDoc> for MonomialModule {
    type Error = MonomialError;

    fn try_from(doc: ModuleDoc) -> Result<Self, Self::Error> {
        let components = doc
            .components
            .iter()
            .map(|c| {
                let gens = c
                    .gens
                    .iter()
                    .map(|g| Monomial::parse(g, doc.vars))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Component {
                    twist: c.twist,
                    ideal: MonomialIdeal::new(doc.vars, gens)?,
                })
            })
            .collect::<Result<Vec<_>, MonomialError>>()?;
        MonomialModule::new(doc.vars, components)
    }
}

impl FromStr for MonomialModule {
    type Err = MonomialError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::from_json(s)
    }
}

/// `H(M, d)` by direct enumeration of standard monomials.
pub fn hf_enumerate(module: &MonomialModule, d: i64) -> u64 {
    module
        .components
        .iter()
        .map(|c| c.ideal.quotient_hf(d - c.twist))
        .sum()
}

/// Numerator `Q(t)` of the Hilbert series `Q(t) / (1 - t)^{n+1}` of `S/I`,
/// as `Q(t) = sum over generator subsets T of (-1)^|T| t^{deg lcm T}`.
pub fn hilbert_series_numerator(
    ideal: &MonomialIdeal,
    bound: usize,
) -> Result<Vec<i64>, MonomialError> {
    let gens = ideal.gens();
    if gens.len() > bound {
        return Err(MonomialError::TooManyGenerators {
            count: gens.len(),
            bound,
        });
    }
    fn go(gens: &[Monomial], lcm: &Monomial, sign: i64, q: &mut Vec<i64>) {
        let deg = lcm.degree() as usize;
        if q.len() <= deg {
            q.resize(deg + 1, 0);
        }
        q[deg] += sign;
        for (i, g) in gens.iter().enumerate() {
            go(&gens[i + 1..], &lcm.lcm(g), -sign, q);
        }
    }
    let mut q = Vec::new();
    go(gens, &Monomial::one(ideal.vars()), 1, &mut q);
    while q.last() == Some(&0) {
        q.pop();
    }
    Ok(q)
}

/// `[t^e] Q(t) / (1 - t)^{vars}`.
pub fn series_coefficient(numerator: &[i64], vars: usize, e: i64) -> i64 {
    let n = vars as u64 - 1;
    numerator
        .iter()
        .enumerate()
        .filter(|&(i, _)| e >= i as i64)
        .map(|(i, &q)| q * binom((e - i as i64) as u64 + n, n).expect("small binomial") as i64)
        .sum()
}

/// Exact Hilbert polynomial of `M` from the Hilbert series numerators.
///
/// Component `j` contributes `sum_i q_i binom(d - f_j - i + n, n)`.
pub fn hilbert_polynomial(module: &MonomialModule) -> Result<RationalPoly, MonomialError> {
    hilbert_polynomial_with_bound(module, DEFAULT_SERIES_GEN_BOUND)
}

pub fn hilbert_polynomial_with_bound(
    module: &MonomialModule,
    bound: usize,
) -> Result<RationalPoly, MonomialError> {
    let n = module.ambient_dim() as i64;
    let mut total = RationalPoly::zero();
    for c in &module.components {
        let q = hilbert_series_numerator(&c.ideal, bound)?;
        for (i, &qi) in q.iter().enumerate() {
            if qi != 0 {
                let term = binom_poly_big(&BigInt::from(n - i as i64 - c.twist), n as u32);
                total = &total + &term.scale(&rat(qi));
            }
        }
    }
    Ok(total)
}

/// First degree from which `H(M, d)` agrees with the Hilbert polynomial:
/// `max_j (deg lcm(I_j) - n + f_j)`.
pub fn stable_degree(module: &MonomialModule) -> i64 {
    let n = module.ambient_dim() as i64;
    module
        .components
        .iter()
        .map(|c| c.ideal.lcm_degree() as i64 - n + c.twist)
        .max()
        .unwrap_or(0)
}

/// Hilbert polynomial by interpolating enumerated Hilbert function values.
///
/// Fits `n + 1` values starting at [`stable_degree`], requires the fit from
/// the next base degree to coincide, and validates three further degrees.
/// Independent of the series numerator; used to cross-check it.
pub fn hilbert_polynomial_interpolated(
    module: &MonomialModule,
) -> Result<RationalPoly, MonomialError> {
    let n = module.ambient_dim() as i64;
    let fit = |base: i64| {
        let pts: Vec<_> = (base..=base + n)
            .map(|d| (d, rat(hf_enumerate(module, d) as i64)))
            .collect();
        RationalPoly::interpolate(&pts).expect("distinct abscissae")
    };
    let base = stable_degree(module);
    let p = fit(base);
    let validated = fit(base + 1) == p
        && (base + n + 1..=base + n + 3).all(|d| p.eval(d) == rat(hf_enumerate(module, d) as i64));
    if !validated {
        return Err(MonomialError::Precondition(format!(
            "Hilbert function not polynomial from degree {base}"
        )));
    }
    Ok(p)
}

/// `I : x_i`.
pub fn colon_by_variable(ideal: &MonomialIdeal, i: usize) -> MonomialIdeal {
    MonomialIdeal::minimalized(
        ideal.vars,
        ideal.gens.iter().map(|g| g.colon_var(i)).collect(),
    )
}

/// `I ∩ J`, generated by pairwise lcms.
pub fn intersect(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal, MonomialError> {
    if a.vars != b.vars {
        return Err(MonomialError::VariableCount {
            expected: a.vars,
            got: b.vars,
        });
    }
    let gens = a
        .gens
        .iter()
        .flat_map(|g| b.gens.iter().map(move |h| g.lcm(h)))
        .collect();
    Ok(MonomialIdeal::minimalized(a.vars, gens))
}

/// `I : m = ∩_i (I : x_i)`.
pub fn colon_by_maximal(ideal: &MonomialIdeal) -> MonomialIdeal {
    (1..ideal.vars).fold(colon_by_variable(ideal, 0), |acc, i| {
        intersect(&acc, &colon_by_variable(ideal, i)).expect("same variable count")
    })
}

/// `I : m^∞`, iterating `I <- I : m` up the ascending chain until it stabilizes.
///
/// Strongly stable ideals take the shortcut `I : m^∞ = I : x_n^∞`.
pub fn saturate(ideal: &MonomialIdeal) -> MonomialIdeal {
    if ideal.vars > 0 && is_strongly_stable(ideal) {
        return saturate_by_last(ideal);
    }
    saturate_iterated(ideal)
}

/// `I : x_n^∞`: set `x_n = 1` in every generator.
pub fn saturate_by_last(ideal: &MonomialIdeal) -> MonomialIdeal {
    let last = ideal.vars - 1;
    let gens = ideal
        .gens
        .iter()
        .map(|g| {
            let mut e = g.0.clone();
            e[last] = 0;
            Monomial(e)
        })
        .collect();
    MonomialIdeal::minimalized(ideal.vars, gens)
}

pub fn saturate_iterated(ideal: &MonomialIdeal) -> MonomialIdeal {
    let mut cur = ideal.clone();
    loop {
        let next = colon_by_maximal(&cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// The `r`-th monomial (from zero) of degree `e` in lex-descending order.
pub fn lex_unrank(vars: usize, e: u32, mut r: u64) -> Monomial {
    let mut exps = vec![0u32; vars];
    let mut rem = e;
    let free = vars.saturating_sub(1);
    for (i, slot) in exps.iter_mut().take(free).enumerate() {
        let tail = (vars - i - 2) as u64;
        for a in (0..=rem).rev() {
            let count = binom((rem - a) as u64 + tail, tail).expect("small binomial") as u64;
            if r < count {
                *slot = a;
                rem -= a;
                break;
            }
            r -= count;
        }
    }
    if let Some(last) = exps.last_mut() {
        *last = rem;
    }
    Monomial(exps)
}

/// `H(S/I, e)`, from the series numerator when the generator count allows it.
fn quotient_hf_fn(ideal: &MonomialIdeal) -> impl Fn(u32) -> u64 + '_ {
    let numerator = hilbert_series_numerator(ideal, DEFAULT_SERIES_GEN_BOUND).ok();
    move |e| match &numerator {
        Some(q) => series_coefficient(q, ideal.vars, e as i64) as u64,
        None => ideal.quotient_hf(e as i64),
    }
}

/// The lexsegment ideal with the same Hilbert function as `ideal`.
///
/// With `h(e) = H(S/I, e)`, the segment `L_e` consists of the first
/// `N(e) - h(e)` monomials of degree `e`, and `S_1 L_{e-1}` of the first
/// `N(e) - h(e-1)^<e-1>`; the monomials in between are the new generators.
/// Once `e` reaches the largest generator degree of `I` and
/// `h(e+1) = h(e)^<e>`, persistence guarantees no further generators.
pub fn lexify_ideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal, MonomialError> {
    let vars = ideal.vars;
    let Some(top) = ideal.max_gen_degree() else {
        return Ok(MonomialIdeal::zero(vars));
    };
    if top == 0 {
        return Ok(MonomialIdeal::unit(vars));
    }
    let n = vars as u64 - 1;
    let total = |e: u32| {
        binom(e as u64 + n, n)
            .map(|b| b as u64)
            .ok_or(MonomialError::Overflow)
    };
    let hf = quotient_hf_fn(ideal);
    let mut gens = Vec::new();
    // h(e-1)^<e-1>, with h(0) = 1 forcing nothing in degree 1
    let mut grown_complement = total(1)?;
    let mut e = 1u32;
    loop {
        let h = hf(e);
        let target = total(e)? - h;
        let grown = total(e)? - grown_complement;
        gens.extend((grown..target).map(|r| lex_unrank(vars, e, r)));
        let next = macaulay_transform(h, e as i64)?;
        if e >= top && hf(e + 1) == next {
            break;
        }
        grown_complement = next;
        e += 1;
    }
    Ok(MonomialIdeal::minimalized(vars, gens))
}

/// Componentwise lexification; preserves every componentwise Hilbert function.
pub fn lexify(module: &MonomialModule) -> Result<MonomialModule, MonomialError> {
    let components = module
        .components
        .iter()
        .map(|c| {
            Ok(Component {
                twist: c.twist,
                ideal: lexify_ideal(&c.ideal)?,
            })
        })
        .collect::<Result<_, MonomialError>>()?;
    Ok(MonomialModule {
        vars: module.vars,
        components,
    })
}

/// Closed under `g -> x_i g / x_j` for every generator `g`, `x_j | g`, `i < j`.
pub fn is_strongly_stable(ideal: &MonomialIdeal) -> bool {
    ideal.gens.iter().all(|g| {
        (1..ideal.vars).all(|j| match g.div_var(j) {
            None => true,
            Some(h) => (0..j).all(|i| ideal.contains(&h.times_var(i))),
        })
    })
}

/// Castelnuovo–Mumford regularity of a strongly stable ideal, which by
/// Eliahou–Kervaire is its largest generator degree (0 for the zero ideal).
///
/// The formula is characteristic-free for strongly stable ideals in this
/// combinatorial sense; all callers pass lexsegment ideals.
pub fn stable_regularity(ideal: &MonomialIdeal) -> Result<u32, MonomialError> {
    if !is_strongly_stable(ideal) {
        return Err(MonomialError::NotStronglyStable);
    }
    Ok(ideal.max_gen_degree().unwrap_or(0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    /// Gotzmann number of the Hilbert polynomial of `M`.
    pub s: BigUint,
    /// Largest Eliahou–Kervaire regularity among the saturated lexified components.
    pub reg_proxy: u32,
    pub ok: bool,
}

/// Experimental check that the kernel of a globally generated quotient is
/// `s`-regular: lexify each component, saturate, and compare the largest
/// generator degree with the Gotzmann number.
pub fn check_gotzmann_regularity(
    module: &MonomialModule,
) -> Result<RegularityReport, MonomialError> {
    let hp = hilbert_polynomial(module)?;
    let s = gotzmann_number(&hp)?;
    let mut reg_proxy = 0;
    for c in &lexify(module)?.components {
        reg_proxy = reg_proxy.max(stable_regularity(&saturate(&c.ideal))?);
    }
    let ok = BigUint::from(reg_proxy) <= s;
    Ok(RegularityReport { s, reg_proxy, ok })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PersistenceReport {
    pub d: i64,
    /// `H(d), H(d+1), H(d+2)`.
    pub values: [u64; 3],
    /// `H(d)^<d-l-p>` and `H(d+1)^<d+1-l-p>`.
    pub bounds: [u64; 2],
    /// Whether `H(d+1) = H(d)^<d-l-p>`.
    pub equality: bool,
    /// Whether `H(d+2) = H(d+1)^<d+1-l-p>`; only meaningful when `equality` holds.
    pub persists: bool,
}

/// Gasharov persistence: if `N` is generated in degree `<= d` and
/// `H(d+1) = H(d)^<d-l-p>`, then `H(d+2) = H(d+1)^<d+1-l-p>`.
///
/// A violation is returned as [`MonomialError::PersistenceCounterexample`].
pub fn check_persistence(
    module: &MonomialModule,
    d: i64,
    l: i64,
    p: u64,
) -> Result<PersistenceReport, MonomialError> {
    if let Some(g) = module.max_submodule_gen_degree() {
        if g > d {
            return Err(MonomialError::Precondition(format!(
                "submodule has a generator in degree {g} > {d}"
            )));
        }
    }
    let index = d - l - p as i64;
    if index < 1 {
        return Err(MonomialError::Precondition(format!(
            "need d >= p + l + 1, got d = {d}"
        )));
    }
    let values = [0, 1, 2].map(|k| hf_enumerate(module, d + k));
    let bounds = [
        macaulay_transform(values[0], index)?,
        macaulay_transform(values[1], index + 1)?,
    ];
    let equality = values[1] == bounds[0];
    let persists = values[2] == bounds[1];
    if equality && !persists {
        return Err(MonomialError::PersistenceCounterexample {
            d,
            actual: values[2],
            expected: bounds[1],
        });
    }
    Ok(PersistenceReport {
        d,
        values,
        bounds,
        equality,
        persists,
    })
}
