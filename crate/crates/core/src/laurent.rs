//! Exact sparse Laurent polynomials.
//!
//! [`BivariateLaurent`] lives in `Z[a^±1, z^±1]`; [`HalfLaurent`] lives in
//! `Z[t^±1/2]` and stores twice the exponent so no rationals are needed.
//! Coefficients are `i64`; every arithmetic step is checked. The `checked_*`
//! methods report overflow as an error, the operator impls panic with a
//! diagnostic instead of wrapping.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Errors from Laurent arithmetic and conversions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("coefficient overflow (exceeds 64-bit range)")]
    Overflow,
    #[error("substitution does not give a Laurent polynomial in the half-exponent variable")]
    NonPolynomialResult,
    #[error("operation needs a nonzero polynomial")]
    EmptyPolynomial,
    #[error("bad term list: {0}")]
    Json(String),
}

/// Output flavour for `render`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Latex,
    Json,
}

fn add_coeff(slot: &mut i64, c: i64) -> Result<(), LaurentError> {
    *slot = slot.checked_add(c).ok_or(LaurentError::Overflow)?;
    Ok(())
}

fn must<T>(r: Result<T, LaurentError>, what: &str) -> T {
    match r {
        Ok(v) => v,
        Err(e) => panic!("{what}: {e}"),
    }
}

// ---------------------------------------------------------------------------
// Bivariate
// ---------------------------------------------------------------------------

/// Integer Laurent polynomial in `a` and `z`. Keys are `(a_exp, z_exp)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariateLaurent {
    terms: BTreeMap<(i32, i32), i64>,
}

impl BivariateLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c · a^a_exp · z^z_exp`.
    pub fn monomial(c: i64, a_exp: i32, z_exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((a_exp, z_exp), c);
        }
        Self { terms }
    }

    /// Sums repeated keys, drops zeros.
    pub fn from_terms<I>(it: I) -> Result<Self, LaurentError>
    where
        I: IntoIterator<Item = ((i32, i32), i64)>,
    {
        let mut terms: BTreeMap<(i32, i32), i64> = BTreeMap::new();
        for (k, c) in it {
            add_coeff(terms.entry(k).or_insert(0), c)?;
        }
        terms.retain(|_, c| *c != 0);
        Ok(Self { terms })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a_exp: i32, z_exp: i32) -> i64 {
        self.terms.get(&(a_exp, z_exp)).copied().unwrap_or(0)
    }

    /// Terms in canonical order: `a` descending, then `z` descending.
    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), i64)> + '_ {
        self.terms.iter().rev().map(|(k, c)| (*k, *c))
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, LaurentError> {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            add_coeff(terms.entry(*k).or_insert(0), *c)?;
        }
        terms.retain(|_, c| *c != 0);
        Ok(Self { terms })
    }

    pub fn checked_neg(&self) -> Result<Self, LaurentError> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            terms.insert(*k, c.checked_neg().ok_or(LaurentError::Overflow)?);
        }
        Ok(Self { terms })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, LaurentError> {
        self.checked_add(&rhs.checked_neg()?)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, LaurentError> {
        let mut terms: BTreeMap<(i32, i32), i64> = BTreeMap::new();
        for ((a1, z1), c1) in &self.terms {
            for ((a2, z2), c2) in &rhs.terms {
                let c = c1.checked_mul(*c2).ok_or(LaurentError::Overflow)?;
                add_coeff(terms.entry((a1 + a2, z1 + z2)).or_insert(0), c)?;
            }
        }
        terms.retain(|_, c| *c != 0);
        Ok(Self { terms })
    }

    pub fn checked_pow(&self, e: u32) -> Result<Self, LaurentError> {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Self {
        must(self.checked_pow(e), "Laurent power")
    }

    /// Largest `a` exponent present.
    pub fn max_a(&self) -> Option<i32> {
        self.terms.keys().next_back().map(|k| k.0)
    }

    /// The slice on the largest `a` exponent.
    pub fn top_a_part(&self) -> Result<Self, LaurentError> {
        let top = self.max_a().ok_or(LaurentError::EmptyPolynomial)?;
        Ok(Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.0 == top)
                .map(|(k, c)| (*k, *c))
                .collect(),
        })
    }

    /// Substitutes `a = 1`, `z = t^½ − t^-½`.
    ///
    /// Negative `z` powers are handled by multiplying through by `z^d`,
    /// substituting, then dividing exactly by `(t^½ − t^-½)^d`.
    pub fn to_alexander(&self) -> Result<HalfLaurent, LaurentError> {
        let mut by_z: BTreeMap<i32, i64> = BTreeMap::new();
        for ((_, z), c) in &self.terms {
            add_coeff(by_z.entry(*z).or_insert(0), *c)?;
        }
        by_z.retain(|_, c| *c != 0);
        substitute_conway(&by_z, 0)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => render_bivariate(self, false),
            Format::Latex => render_bivariate(self, true),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<BiTerm> = self.terms().map(|((a, z), c)| BiTerm { a, z, c }).collect();
        serde_json::to_string(&rows).expect("term list serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, LaurentError> {
        let rows: Vec<BiTerm> =
            serde_json::from_str(s).map_err(|e| LaurentError::Json(e.to_string()))?;
        Self::from_terms(rows.into_iter().map(|t| ((t.a, t.z), t.c)))
    }
}

/// `Σ_k C_k z^k · t^(shift2/2)` with `z = t^½ − t^-½`, divided out exactly.
pub(crate) fn substitute_conway(
    by_z: &BTreeMap<i32, i64>,
    shift2: i32,
) -> Result<HalfLaurent, LaurentError> {
    let (num, d) = substitute_conway_cleared(by_z, shift2)?;
    let t_minus_1 = HalfLaurent::from_terms([(2, 1), (0, -1)])?;
    let mut acc = num;
    for _ in 0..d {
        acc = acc.exact_div(&t_minus_1)?;
    }
    Ok(acc)
}

/// Same substitution kept as a fraction `(N, d)` meaning `N / (t − 1)^d`.
///
/// Uses `z^-1 = t^½ / (t − 1)`, so nothing here can fail except overflow.
pub(crate) fn substitute_conway_cleared(
    by_z: &BTreeMap<i32, i64>,
    shift2: i32,
) -> Result<(HalfLaurent, u32), LaurentError> {
    let Some(&min_z) = by_z.keys().next() else {
        return Ok((HalfLaurent::zero(), 0));
    };
    let d = (-min_z).max(0);
    let s = HalfLaurent::conway_z();
    let mut acc = HalfLaurent::zero();
    let mut power = HalfLaurent::one();
    let mut have = 0;
    for (z, c) in by_z {
        let want = z + d;
        while have < want {
            power = power.checked_mul(&s)?;
            have += 1;
        }
        acc = acc.checked_add(&power.checked_scale(*c)?)?;
    }
    let num = acc.checked_mul(&HalfLaurent::monomial(1, shift2 + d))?;
    Ok((num, d as u32))
}

#[derive(Serialize, Deserialize)]
struct BiTerm {
    a: i32,
    z: i32,
    c: i64,
}

fn exp_str(e: i32, latex: bool) -> String {
    let s = e.to_string();
    if latex && s.len() > 1 {
        format!("{{{s}}}")
    } else {
        s
    }
}

fn var_pow(var: &str, e: i32, latex: bool) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{}", exp_str(e, latex)),
    }
}

/// Joins `(exponent, coeff)` pairs as a signed sum with a nonnegative lead.
fn signed_sum<F: Fn(i32) -> String>(terms: &[(i32, i64)], mono: F) -> String {
    let mut out = String::new();
    for (idx, (e, c)) in terms.iter().enumerate() {
        let abs = c.unsigned_abs();
        if idx == 0 {
            if *c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if *c < 0 { " - " } else { " + " });
        }
        let m = mono(*e);
        if m.is_empty() {
            let _ = write!(out, "{abs}");
        } else if abs == 1 {
            out.push_str(&m);
        } else {
            let _ = write!(out, "{abs}{m}");
        }
    }
    out
}

fn render_bivariate(p: &BivariateLaurent, latex: bool) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut groups: Vec<(i32, Vec<(i32, i64)>)> = Vec::new();
    for ((a, z), c) in p.terms() {
        match groups.last_mut() {
            Some((ga, g)) if *ga == a => g.push((z, c)),
            _ => groups.push((a, vec![(z, c)])),
        }
    }
    let several = groups.len() > 1;
    let mut out = String::new();
    for (idx, (a, mut g)) in groups.into_iter().enumerate() {
        let negative = g[0].1 < 0;
        if negative {
            for t in &mut g {
                t.1 = -t.1;
            }
        }
        match (idx, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let num = signed_sum(&g, |e| var_pow("z", e, latex));
        let multi = g.len() > 1;
        let is_one = g.len() == 1 && g[0] == (0, 1);
        if a < 0 {
            let den = var_pow("a", -a, latex);
            if latex {
                let _ = write!(out, "\\frac{{{num}}}{{{den}}}");
            } else if multi {
                let _ = write!(out, "({num})/{den}");
            } else {
                let _ = write!(out, "{num}/{den}");
            }
        } else if a == 0 {
            if multi && several {
                let _ = write!(out, "({num})");
            } else {
                out.push_str(&num);
            }
        } else {
            let ap = var_pow("a", a, latex);
            let sep = if latex { "" } else { "*" };
            if is_one {
                out.push_str(&ap);
            } else if multi {
                let _ = write!(out, "({num}){ap}");
            } else {
                let _ = write!(out, "{num}{sep}{ap}");
            }
        }
    }
    out
}

impl fmt::Display for BivariateLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Format::Text))
    }
}

impl fmt::Debug for BivariateLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariateLaurent({self})")
    }
}

// ---------------------------------------------------------------------------
// Half-exponent univariate
// ---------------------------------------------------------------------------

/// Integer Laurent polynomial in `t^½`. Key `k` stands for `t^(k/2)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct HalfLaurent {
    terms: BTreeMap<i32, i64>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · t^(k2/2)`.
    pub fn monomial(c: i64, k2: i32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(k2, c);
        }
        Self { terms }
    }

    /// `t^½ − t^-½`, the image of `z`.
    pub fn conway_z() -> Self {
        Self {
            terms: BTreeMap::from([(-1, -1), (1, 1)]),
        }
    }

    /// Builds from integer-exponent coefficients: `Σ c_e t^e`.
    pub fn from_integer_exponents<I: IntoIterator<Item = (i32, i64)>>(
        it: I,
    ) -> Result<Self, LaurentError> {
        Self::from_terms(it.into_iter().map(|(e, c)| (2 * e, c)))
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(it: I) -> Result<Self, LaurentError> {
        let mut terms = BTreeMap::new();
        for (k, c) in it {
            add_coeff(terms.entry(k).or_insert(0), c)?;
        }
        terms.retain(|_, c| *c != 0);
        Ok(Self { terms })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k2: i32) -> i64 {
        self.terms.get(&k2).copied().unwrap_or(0)
    }

    /// Terms with twice-exponent keys, descending.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().rev().map(|(k, c)| (*k, *c))
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, LaurentError> {
        Self::from_terms(self.terms.iter().chain(&rhs.terms).map(|(k, c)| (*k, *c)))
    }

    pub fn checked_scale(&self, s: i64) -> Result<Self, LaurentError> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let v = c.checked_mul(s).ok_or(LaurentError::Overflow)?;
            if v != 0 {
                terms.insert(*k, v);
            }
        }
        Ok(Self { terms })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, LaurentError> {
        self.checked_add(&rhs.checked_scale(-1)?)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, LaurentError> {
        let mut terms: BTreeMap<i32, i64> = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                let c = c1.checked_mul(*c2).ok_or(LaurentError::Overflow)?;
                add_coeff(terms.entry(k1 + k2).or_insert(0), c)?;
            }
        }
        terms.retain(|_, c| *c != 0);
        Ok(Self { terms })
    }

    pub fn checked_pow(&self, e: u32) -> Result<Self, LaurentError> {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Self {
        must(self.checked_pow(e), "Laurent power")
    }

    /// Exact quotient; `NonPolynomialResult` if a remainder is left.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, LaurentError> {
        let (Some(&dmin), Some(&dmax)) = (divisor.terms.keys().next(), divisor.terms.keys().next_back())
        else {
            return Err(LaurentError::EmptyPolynomial);
        };
        let (Some(&nmin), Some(&nmax)) = (self.terms.keys().next(), self.terms.keys().next_back())
        else {
            return Ok(Self::zero());
        };
        if nmax - nmin < dmax - dmin {
            return Err(LaurentError::NonPolynomialResult);
        }
        let den: Vec<i64> = (dmin..=dmax).map(|k| divisor.coeff(k)).collect();
        let mut rem: Vec<i64> = (nmin..=nmax).map(|k| self.coeff(k)).collect();
        let lead = *den.last().expect("nonempty divisor");
        let qlen = rem.len() - den.len() + 1;
        let mut quot = vec![0i64; qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + den.len() - 1];
            if top == 0 {
                continue;
            }
            if top % lead != 0 {
                return Err(LaurentError::NonPolynomialResult);
            }
            let q = top / lead;
            quot[i] = q;
            for (j, d) in den.iter().enumerate() {
                let sub = d.checked_mul(q).ok_or(LaurentError::Overflow)?;
                rem[i + j] = rem[i + j].checked_sub(sub).ok_or(LaurentError::Overflow)?;
            }
        }
        if rem.iter().any(|c| *c != 0) {
            return Err(LaurentError::NonPolynomialResult);
        }
        let offset = nmin - dmin;
        Self::from_terms(quot.into_iter().enumerate().map(|(i, c)| (offset + i as i32, c)))
    }

    pub fn min_key(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_key(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn render(&self, format: Format) -> String {
        self.render_in("t", format)
    }

    /// Same as `render` with another variable name (e.g. `q`).
    pub fn render_in(&self, var: &str, format: Format) -> String {
        match format {
            Format::Text => render_half(self, var, false),
            Format::Latex => render_half(self, var, true),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<HalfTerm> = self.terms().map(|(t2, c)| HalfTerm { t2, c }).collect();
        serde_json::to_string(&rows).expect("term list serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, LaurentError> {
        let rows: Vec<HalfTerm> =
            serde_json::from_str(s).map_err(|e| LaurentError::Json(e.to_string()))?;
        Self::from_terms(rows.into_iter().map(|t| (t.t2, t.c)))
    }
}

#[derive(Serialize, Deserialize)]
struct HalfTerm {
    t2: i32,
    c: i64,
}

fn half_exp(k2: i32, latex: bool) -> String {
    let s = if k2 % 2 == 0 {
        (k2 / 2).to_string()
    } else {
        format!("{k2}/2")
    };
    if latex && s.len() > 1 {
        format!("{{{s}}}")
    } else {
        s
    }
}

fn half_pow(var: &str, k2: i32, latex: bool) -> String {
    match k2 {
        0 => String::new(),
        2 => var.to_string(),
        _ => format!("{var}^{}", half_exp(k2, latex)),
    }
}

fn render_half(p: &HalfLaurent, var: &str, latex: bool) -> String {
    let terms: Vec<(i32, i64)> = p.terms().collect();
    match terms.len() {
        0 => "0".into(),
        1 => signed_sum(&terms, |k| half_pow(var, k, latex)),
        _ => {
            let m = p.min_key().expect("nonempty");
            let inner: Vec<(i32, i64)> = terms.iter().map(|(k, c)| (k - m, *c)).collect();
            let body = signed_sum(&inner, |k| half_pow(var, k, latex));
            if m == 0 {
                body
            } else if latex {
                format!("{}\\left({body}\\right)", half_pow(var, m, latex))
            } else {
                format!("{}({body})", half_pow(var, m, latex))
            }
        }
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Format::Text))
    }
}

impl fmt::Debug for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HalfLaurent({self})")
    }
}

// ---------------------------------------------------------------------------
// Operators (panic on overflow, never wrap)
// ---------------------------------------------------------------------------

macro_rules! ops {
    ($t:ty) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                must(self.checked_add(rhs), "Laurent addition")
            }
        }
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                must(self.checked_sub(rhs), "Laurent subtraction")
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                must(self.checked_mul(rhs), "Laurent multiplication")
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                &<$t>::zero() - self
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
        impl std::iter::Sum for $t {
            fn sum<I: Iterator<Item = $t>>(it: I) -> $t {
                it.fold(<$t>::zero(), |acc, x| &acc + &x)
            }
        }
        impl std::iter::Product for $t {
            fn product<I: Iterator<Item = $t>>(it: I) -> $t {
                it.fold(<$t>::one(), |acc, x| &acc * &x)
            }
        }
    };
}

ops!(BivariateLaurent);
ops!(HalfLaurent);

#[cfg(test)]
mod tests {
    use super::*;

    fn m(c: i64, a: i32, z: i32) -> BivariateLaurent {
        BivariateLaurent::monomial(c, a, z)
    }

    fn f_a1() -> BivariateLaurent {
        m(1, -1, 1) + m(1, -1, -1) - m(1, -3, -1)
    }

    #[test]
    fn disjoint_sum() {
        let p = m(1, -1, 1) + m(1, -2, 0);
        assert_eq!(p.terms().collect::<Vec<_>>(), vec![((-1, 1), 1), ((-2, 0), 1)]);
    }

    #[test]
    fn sum_cancels_to_a2() {
        let p = m(1, -2, 2) + m(1, -2, 0);
        let q = m(1, -2, 0) - m(1, -4, 0);
        assert_eq!((p + q).to_string(), "(z^2 + 2)/a^2 - 1/a^4");
    }

    #[test]
    fn a1_squared() {
        let sq = f_a1() * f_a1();
        let want = m(1, -2, 2) + m(2, -2, 0) + m(1, -2, -2)
            - m(2, -4, 0)
            - m(2, -4, -2)
            + m(1, -6, -2);
        assert_eq!(sq, want);
    }

    #[test]
    fn alexander_of_a1() {
        let d = f_a1().to_alexander().unwrap();
        assert_eq!(d, HalfLaurent::conway_z());
        assert_eq!(d.to_string(), "t^-1/2(t - 1)");
        assert_eq!(BivariateLaurent::one().to_alexander().unwrap(), HalfLaurent::one());
    }

    #[test]
    fn lone_inverse_z_is_not_polynomial() {
        assert_eq!(
            m(1, 0, -1).to_alexander(),
            Err(LaurentError::NonPolynomialResult)
        );
    }

    #[test]
    fn top_slice() {
        assert_eq!(f_a1().top_a_part().unwrap(), m(1, -1, 1) + m(1, -1, -1));
        assert_eq!(BivariateLaurent::zero().top_a_part(), Err(LaurentError::EmptyPolynomial));
    }

    #[test]
    fn render_edges() {
        assert_eq!(BivariateLaurent::zero().to_string(), "0");
        assert_eq!(BivariateLaurent::one().to_string(), "1");
        assert_eq!(m(1, -1, 1).to_string(), "z/a");
        assert_eq!(m(-3, 2, -1).to_string(), "-3z^-1*a^2");
        assert_eq!(m(1, 2, 0).render(Format::Latex), "a^2");
        assert_eq!(m(1, 12, 0).render(Format::Latex), "a^{12}");
        assert_eq!(f_a1().render(Format::Latex), "\\frac{z + z^{-1}}{a} - \\frac{z^{-1}}{a^3}");
        assert_eq!(HalfLaurent::monomial(-2, -3).to_string(), "-2t^-3/2");
        assert_eq!(HalfLaurent::monomial(1, 0).to_string(), "1");
    }

    #[test]
    fn overflow_is_reported() {
        let big = m(i64::MAX, 0, 0);
        assert_eq!(big.checked_add(&big), Err(LaurentError::Overflow));
        assert_eq!(big.checked_mul(&m(2, 0, 0)), Err(LaurentError::Overflow));
    }

    #[test]
    #[should_panic(expected = "coefficient overflow")]
    fn operator_overflow_panics() {
        let big = m(i64::MAX, 0, 0);
        let _ = &big + &big;
    }

    #[test]
    fn exact_division() {
        let s = HalfLaurent::conway_z();
        let p = s.pow(3);
        assert_eq!(p.exact_div(&s).unwrap(), s.pow(2));
        assert_eq!(
            HalfLaurent::one().exact_div(&s),
            Err(LaurentError::NonPolynomialResult)
        );
    }

    #[test]
    fn json_round_trip() {
        let p = f_a1();
        let s = p.to_json();
        assert_eq!(s, r#"[{"a":-1,"z":1,"c":1},{"a":-1,"z":-1,"c":1},{"a":-3,"z":-1,"c":-1}]"#);
        assert_eq!(BivariateLaurent::from_json(&s).unwrap(), p);
        let h = HalfLaurent::conway_z();
        assert_eq!(h.to_json(), r#"[{"t2":1,"c":1},{"t2":-1,"c":-1}]"#);
        assert_eq!(HalfLaurent::from_json(&h.to_json()).unwrap(), h);
    }
}
