//! Exponent-vector monomials over a fixed number of variables, and the three
//! orders used throughout the crate.
//!
//! Variables are numbered from 1 (`x1 .. xn`) wherever a variable is named:
//! supports, `max`/`min`, tableau entries and certificate witnesses. Only the raw
//! exponent slice is indexed from 0.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Ambient polynomial ring `K[x1, ..., xn]`. Only the variable count matters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ring {
    n: usize,
}

impl Ring {
    pub fn new(n: usize) -> Self {
        Ring { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> Monomial {
        Monomial {
            exps: vec![0; self.n].into_boxed_slice(),
            degree: 0,
        }
    }

    pub fn monomial(&self, exps: &[u32]) -> Result<Monomial> {
        if exps.len() != self.n {
            return Err(Error::Dimension(format!(
                "exponent vector of length {} in a ring with {} variables",
                exps.len(),
                self.n
            )));
        }
        Monomial::new(exps.to_vec())
    }

    /// `x_var^exp`, with `var` counted from 1.
    pub fn var_power(&self, var: usize, exp: u32) -> Result<Monomial> {
        self.check_var(var)?;
        let mut exps = vec![0; self.n];
        exps[var - 1] = exp;
        Monomial::new(exps)
    }

    pub fn var(&self, var: usize) -> Result<Monomial> {
        self.var_power(var, 1)
    }

    fn check_var(&self, var: usize) -> Result<()> {
        if var == 0 || var > self.n {
            return Err(Error::Dimension(format!(
                "variable x{var} outside x1..x{}",
                self.n
            )));
        }
        Ok(())
    }

    /// All of `M_d`, lex-descending (`x1^d` first, `xn^d` last).
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        if self.n == 0 {
            if d == 0 {
                out.push(self.one());
            }
            return out;
        }
        let mut exps = vec![0u32; self.n];
        fill_descending(&mut exps, 0, d, &mut out);
        out
    }

    /// Number of monomials of degree `d`, `C(d + n - 1, n - 1)`.
    pub fn count_of_degree(&self, d: u32) -> u128 {
        if self.n == 0 {
            return u128::from(d == 0);
        }
        binomial((d as u64) + self.n as u64 - 1, self.n as u64 - 1)
    }
}

fn fill_descending(exps: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Monomial::from_parts(exps.to_vec(), total(exps)));
        exps[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        fill_descending(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

fn total(exps: &[u32]) -> u32 {
    exps.iter().sum()
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// A monomial `x1^e1 ... xn^en` with its degree cached. Immutable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
}

/// `supp`, `max`, `min` and the exponent vector of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialStats {
    pub support: Vec<usize>,
    pub max: usize,
    pub min: usize,
    pub nu: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        let mut degree: u32 = 0;
        for &e in &exps {
            degree = degree.checked_add(e).ok_or(Error::Overflow)?;
        }
        Ok(Self::from_parts(exps, degree))
    }

    fn from_parts(exps: Vec<u32>, degree: u32) -> Self {
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
        }
    }

    /// Builds `x_{a1} ... x_{ad}` from a (not necessarily sorted) list of
    /// variable numbers in `1..=n`.
    pub fn from_row(n: usize, row: &[usize]) -> Result<Self> {
        let mut exps = vec![0u32; n];
        for &var in row {
            if var == 0 || var > n {
                return Err(Error::Dimension(format!(
                    "variable x{var} outside x1..x{n}"
                )));
            }
            exps[var - 1] = exps[var - 1].checked_add(1).ok_or(Error::Overflow)?;
        }
        Monomial::new(exps)
    }

    /// The weakly increasing index vector `(a1 <= ... <= ad)` with
    /// `self = x_{a1} ... x_{ad}`.
    pub fn to_row(&self) -> Vec<usize> {
        let mut row = Vec::with_capacity(self.degree as usize);
        for (i, &e) in self.exps.iter().enumerate() {
            row.extend(std::iter::repeat_n(i + 1, e as usize));
        }
        row
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn ring(&self) -> Ring {
        Ring::new(self.n())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_var` (`var` counted from 1); zero outside the ring.
    pub fn nu(&self, var: usize) -> u32 {
        if var == 0 {
            return 0;
        }
        self.exps.get(var - 1).copied().unwrap_or(0)
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn max_var(&self) -> Result<usize> {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .map(|i| i + 1)
            .ok_or(Error::EmptySupport)
    }

    pub fn min_var(&self) -> Result<usize> {
        self.exps
            .iter()
            .position(|&e| e > 0)
            .map(|i| i + 1)
            .ok_or(Error::EmptySupport)
    }

    pub fn stats(&self) -> Result<MonomialStats> {
        Ok(MonomialStats {
            support: self.support(),
            max: self.max_var()?,
            min: self.min_var()?,
            nu: self.exps.to_vec(),
        })
    }

    pub(crate) fn check_same_ring(&self, other: &Monomial) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::Dimension(format!(
                "monomials from rings with {} and {} variables",
                self.n(),
                other.n()
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_ring(other)?;
        let mut exps = Vec::with_capacity(self.n());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            exps.push(a.checked_add(*b).ok_or(Error::Overflow)?);
        }
        let degree = self
            .degree
            .checked_add(other.degree)
            .ok_or(Error::Overflow)?;
        Ok(Self::from_parts(exps, degree))
    }

    /// Product of a non-empty list of monomials from one ring.
    pub fn product<'a, I>(factors: I) -> Result<Monomial>
    where
        I: IntoIterator<Item = &'a Monomial>,
    {
        let mut iter = factors.into_iter();
        let first = iter.next().ok_or(Error::Empty)?.clone();
        iter.try_fold(first, |acc, m| acc.mul(m))
    }

    pub fn mul_var(&self, var: usize) -> Result<Monomial> {
        self.ring().check_var(var)?;
        let mut exps = self.exps.to_vec();
        exps[var - 1] = exps[var - 1].checked_add(1).ok_or(Error::Overflow)?;
        Ok(Self::from_parts(
            exps,
            self.degree.checked_add(1).ok_or(Error::Overflow)?,
        ))
    }

    /// `self / x_var`, or `None` when `x_var` does not divide `self`.
    pub fn div_var(&self, var: usize) -> Option<Monomial> {
        if self.nu(var) == 0 {
            return None;
        }
        let mut exps = self.exps.to_vec();
        exps[var - 1] -= 1;
        Some(Self::from_parts(exps, self.degree - 1))
    }

    /// `x_mul * self / x_div`, or `None` when `x_div` does not divide `x_mul * self`.
    pub fn exchange(&self, mul: usize, div: usize) -> Option<Monomial> {
        if mul == 0 || mul > self.n() || div == 0 || div > self.n() {
            return None;
        }
        if mul == div {
            return Some(self.clone());
        }
        let mut exps = self.exps.to_vec();
        if exps[div - 1] == 0 {
            return None;
        }
        exps[div - 1] -= 1;
        exps[mul - 1] += 1;
        Some(Self::from_parts(exps, self.degree))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.n() == other.n() && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(a, b)| a - b)
            .collect();
        Some(Self::from_parts(exps, other.degree - self.degree))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_ring(other)?;
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.min(b))
            .collect();
        let degree = total(&exps);
        Ok(Self::from_parts(exps, degree))
    }

    /// `self / gcd(self, other)`, the generator of the colon `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_ring(other)?;
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.saturating_sub(*b))
            .collect();
        let degree = total(&exps);
        Ok(Self::from_parts(exps, degree))
    }

    /// `Some(var)` if the monomial is the single variable `x_var`.
    pub fn as_variable(&self) -> Option<usize> {
        if self.degree != 1 {
            return None;
        }
        self.min_var().ok()
    }

    /// Human-readable form such as `x1^2*x4`; `1` for the unit monomial.
    pub fn pretty(&self) -> String {
        if self.degree == 0 {
            return "1".to_string();
        }
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Monomial {
    /// Canonical text form: comma-separated exponents, e.g. `1,0,1,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in self.exps.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty exponent vector".into()));
        }
        let exps = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("exponent {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Monomial::new(exps)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The monomial orders in use.
///
/// * `Lex`: `x1 > x2 > ... > xn`, first differing exponent decides.
/// * `RevLexDecreasingSigma`: degree first, then the reverse of revlex: scanning from
///   `xn` down, the monomial with the larger exponent at the last differing
///   variable is larger. So `xn > x(n-1) > ... > x1`.
/// * `Succ`: smaller `x1`-exponent is larger; ties broken by lex. Only meaningful
///   inside one degree and not a monomial order on the whole ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    #[serde(rename = "lex")]
    Lex,
    #[serde(rename = "revlex-dec")]
    RevLexDecreasingSigma,
    #[serde(rename = "succ")]
    Succ,
}

impl MonomialOrder {
    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::RevLexDecreasingSigma => "revlex-dec",
            MonomialOrder::Succ => "succ",
        }
    }

    /// Whether the order is a monomial order on all of `S`, so that it can play
    /// the role of `<_sigma` in exchange properties and Rees bases.
    pub fn is_ring_order(&self) -> bool {
        !matches!(self, MonomialOrder::Succ)
    }

    pub(crate) fn require_ring_order(&self) -> Result<()> {
        if self.is_ring_order() {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "{} is not a monomial order on the polynomial ring",
                self.name()
            )))
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        match self {
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::RevLexDecreasingSigma => cmp_sigma(a, b),
            MonomialOrder::Succ => cmp_succ(a, b),
        }
    }

    /// Unchecked comparison of raw exponent vectors of equal length. `Lex` is
    /// pure lex here, which is a monomial order across degrees as well.
    pub(crate) fn compare_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => lex_exps(a, b),
            MonomialOrder::RevLexDecreasingSigma => {
                total(a).cmp(&total(b)).then_with(|| sigma_same_degree(a, b))
            }
            MonomialOrder::Succ => {
                let (a1, b1) = (a.first().copied(), b.first().copied());
                b1.cmp(&a1).then_with(|| lex_exps(a, b))
            }
        }
    }

    pub(crate) fn compare_unchecked(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.compare_exps(&a.exps, &b.exps)
    }

    /// Compares the variables `x_i` and `x_j` (numbered from 1).
    pub fn compare_vars(&self, i: usize, j: usize) -> Ordering {
        match self {
            MonomialOrder::Lex => j.cmp(&i),
            MonomialOrder::RevLexDecreasingSigma => i.cmp(&j),
            // x1 carries the only nonzero nu_1, so it is the smallest; the rest
            // fall back to lex
            MonomialOrder::Succ => match (i == 1, j == 1) {
                (true, true) => Ordering::Equal,
                (true, false) => Ordering::Less,
                (false, true) => Ordering::Greater,
                _ => j.cmp(&i),
            },
        }
    }

    /// Sorts largest-first, after checking that the slice is comparable under
    /// this order (one ring; one degree for `Lex` and `Succ`).
    pub fn sort_descending(&self, gens: &mut [Monomial]) -> Result<()> {
        if let Some(first) = gens.first() {
            for g in gens.iter() {
                self.compare(first, g)?;
            }
        }
        gens.sort_by(|a, b| self.compare_unchecked(b, a));
        Ok(())
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "revlex-dec" | "sigma" => Ok(MonomialOrder::RevLexDecreasingSigma),
            "succ" => Ok(MonomialOrder::Succ),
            other => Err(Error::Parse(format!(
                "unknown order {other:?} (expected lex, revlex-dec or succ)"
            ))),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub(crate) fn lex_exps(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn sigma_same_degree(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn check_equal_degree(a: &Monomial, b: &Monomial) -> Result<()> {
    a.check_same_ring(b)?;
    if a.degree != b.degree {
        return Err(Error::Dimension(format!(
            "comparing monomials of degree {} and {}",
            a.degree, b.degree
        )));
    }
    Ok(())
}

/// Lex comparison of two monomials of one degree.
pub fn cmp_lex(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    check_equal_degree(a, b)?;
    Ok(lex_exps(&a.exps, &b.exps))
}

/// Decreasing revlex `<_sigma`: degree first, then revlex reversed.
pub fn cmp_sigma(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    a.check_same_ring(b)?;
    Ok(MonomialOrder::RevLexDecreasingSigma.compare_exps(&a.exps, &b.exps))
}

/// The `succ` order on one degree: `a > b` iff `nu1(a) < nu1(b)`, or equal
/// `nu1` and `a >lex b`.
pub fn cmp_succ(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    check_equal_degree(a, b)?;
    Ok(MonomialOrder::Succ.compare_exps(&a.exps, &b.exps))
}

/// The next monomial below `m` in lex order within its degree, i.e. the largest
/// `w` of the same degree with `w <lex m`. `None` for `xn^d`.
pub(crate) fn lex_next_below(m: &Monomial) -> Option<Monomial> {
    let n = m.n();
    if n < 2 {
        return None;
    }
    let exps = &m.exps;
    let i = (0..n - 1).rev().find(|&i| exps[i] > 0)?;
    let tail: u32 = exps[i + 1..].iter().sum();
    let mut next = exps.to_vec();
    next[i] -= 1;
    for e in next[i + 1..].iter_mut() {
        *e = 0;
    }
    next[i + 1] = tail + 1;
    Some(Monomial::from_parts(next, m.degree))
}
