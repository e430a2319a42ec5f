//! Polynomial invariants of forest quivers, each reachable two ways.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::forest::{Forest, VertexId};
use crate::laurent::{substitute_conway_cleared, BivariateLaurent, Format, HalfLaurent, LaurentError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("methods disagree: {0}")]
    InternalMismatch(String),
    #[error("{0} is not a leaf")]
    NotALeaf(VertexId),
}

/// `f(A₁) = (z + z⁻¹)/a − z⁻¹/a³`.
pub fn homfly_single_vertex() -> BivariateLaurent {
    BivariateLaurent::monomial(1, -1, 1) + BivariateLaurent::monomial(1, -1, -1)
        - BivariateLaurent::monomial(1, -3, -1)
}

fn z_over_a() -> BivariateLaurent {
    BivariateLaurent::monomial(1, -1, 1)
}

fn inv_a2() -> BivariateLaurent {
    BivariateLaurent::monomial(1, -2, 0)
}

/// Leaf recursion, memoized on the surviving vertex set.
///
/// Splits off components first; otherwise expands at the least-id leaf.
pub fn homfly_recursive(f: &Forest) -> BivariateLaurent {
    let ids: Vec<VertexId> = f.vertices().collect();
    let pos: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let nbrs: Vec<Vec<usize>> = ids.iter().map(|v| f.neighbors(*v).map(|u| pos[&u]).collect()).collect();
    let mut rec = Recursion { nbrs: &nbrs, memo: HashMap::new() };
    let all = Bits::full(ids.len());
    rec.eval(&all)
}

/// `(z/a)·f(Q − v) + (1/a²)·f(Q − {v, ṽ})` at a chosen leaf `v`.
pub fn leaf_expansion(f: &Forest, v: VertexId) -> Result<BivariateLaurent, InvariantError> {
    let (_, nb) = f
        .leaves()
        .into_iter()
        .find(|(l, _)| *l == v)
        .ok_or(InvariantError::NotALeaf(v))?;
    let one = f.remove_vertices(&[v]).expect("leaf exists");
    let two = f.remove_vertices(&[v, nb]).expect("leaf exists");
    Ok(z_over_a() * homfly_recursive(&one) + inv_a2() * homfly_recursive(&two))
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn full(n: usize) -> Self {
        let mut w = vec![u64::MAX; n.div_ceil(64)];
        if !n.is_multiple_of(64) {
            *w.last_mut().expect("n > 0") = (1u64 << (n % 64)) - 1;
        }
        Self(w)
    }
    fn empty_like(&self) -> Self {
        Self(vec![0; self.0.len()])
    }
    fn has(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|w| *w == 0)
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b)
        })
    }
}

struct Recursion<'a> {
    nbrs: &'a [Vec<usize>],
    memo: HashMap<Bits, BivariateLaurent>,
}

impl Recursion<'_> {
    fn eval(&mut self, alive: &Bits) -> BivariateLaurent {
        if alive.is_empty() {
            return BivariateLaurent::one();
        }
        if let Some(hit) = self.memo.get(alive) {
            return hit.clone();
        }
        let comps = self.components(alive);
        let out = if comps.len() > 1 {
            comps.iter().map(|c| self.eval(c)).product()
        } else {
            let live: Vec<usize> = alive.iter().collect();
            if live.len() == 1 {
                homfly_single_vertex()
            } else {
                let (v, u) = live
                    .iter()
                    .find_map(|&v| {
                        let mut it = self.nbrs[v].iter().filter(|&&u| alive.has(u));
                        match (it.next(), it.next()) {
                            (Some(&u), None) => Some((v, u)),
                            _ => None,
                        }
                    })
                    .expect("a tree with two vertices has a leaf");
                let mut minus_v = alive.clone();
                minus_v.clear(v);
                let mut minus_vu = minus_v.clone();
                minus_vu.clear(u);
                z_over_a() * self.eval(&minus_v) + inv_a2() * self.eval(&minus_vu)
            }
        };
        self.memo.insert(alive.clone(), out.clone());
        out
    }

    fn components(&self, alive: &Bits) -> Vec<Bits> {
        let mut seen = alive.empty_like();
        let mut out = Vec::new();
        for s in alive.iter() {
            if seen.has(s) {
                continue;
            }
            let mut comp = alive.empty_like();
            let mut stack = vec![s];
            seen.set(s);
            while let Some(x) = stack.pop() {
                comp.set(x);
                for &y in &self.nbrs[x] {
                    if alive.has(y) && !seen.has(y) {
                        seen.set(y);
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Closed independent-set formula with the canonical root set.
pub fn homfly_closed(f: &Forest) -> BivariateLaurent {
    let n = f.len() as i32;
    let table = f.cij();
    let mut terms = Vec::new();
    for ((i, j), c) in table.entries() {
        let c = i64::try_from(c).expect("count fits in i64");
        for k in 0..=j {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let b = i64::try_from(binomial(j as u64, k as u64)).expect("binomial fits in i64");
            let coeff = c.checked_mul(b).and_then(|x| x.checked_mul(sign)).expect("coefficient overflow");
            terms.push(((-n - 2 * k as i32, n - 2 * i as i32), coeff));
        }
    }
    BivariateLaurent::from_terms(terms).expect("coefficient overflow")
}

/// `t^{-n/2} Σ b_i t^i (t − 1)^{n−2i}`.
pub fn alexander_matching(f: &Forest) -> Result<HalfLaurent, InvariantError> {
    let n = f.len() as i32;
    let t_minus_1 = HalfLaurent::from_terms([(2, 1), (0, -1)])?;
    let mut acc = HalfLaurent::zero();
    for (i, b) in f.matching_counts().into_iter().enumerate() {
        let i = i as i32;
        let b = i64::try_from(b).map_err(|_| LaurentError::Overflow)?;
        let term = t_minus_1
            .checked_pow((n - 2 * i) as u32)?
            .checked_mul(&HalfLaurent::monomial(b, 2 * i - n))?;
        acc = acc.checked_add(&term)?;
    }
    Ok(acc)
}

/// Alexander polynomial; the matching formula checked against the
/// specialization of the leaf recursion.
pub fn alexander(f: &Forest) -> Result<HalfLaurent, InvariantError> {
    let closed = alexander_matching(f)?;
    let special = homfly_recursive(f).to_alexander()?;
    if closed != special {
        return Err(InvariantError::InternalMismatch(format!(
            "alexander: matching formula {closed} vs specialization {special}"
        )));
    }
    Ok(closed)
}

/// Coefficients `b_i` of `∇(Q)(z) = Σ b_i z^{n−2i}`.
pub fn conway_coefficients(f: &Forest) -> Vec<u64> {
    f.matching_counts()
}

/// `Σ a_i q^i (q − 1)^{n−2i}` held as `numerator / (q − 1)^pole`.
///
/// The pole appears as soon as an independent set is larger than `n/2`
/// (a single vertex already gives `(q² − q + 1)/(q − 1)`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RPolynomial {
    /// In `q`, integer exponents only (even keys).
    pub numerator: HalfLaurent,
    pub pole: u32,
}

impl RPolynomial {
    pub fn is_polynomial(&self) -> bool {
        self.pole == 0
    }

    /// Numerator times `(q − 1)^extra`, for cross-multiplied comparisons.
    fn lifted(&self, extra: u32) -> Result<HalfLaurent, LaurentError> {
        let q_minus_1 = HalfLaurent::from_terms([(2, 1), (0, -1)])?;
        self.numerator.checked_mul(&q_minus_1.checked_pow(extra)?)
    }

    pub fn render(&self, format: Format) -> String {
        let num = self.numerator.render_in("q", format);
        if format == Format::Json {
            return format!(r#"{{"numerator":{num},"pole":{}}}"#, self.pole);
        }
        let p = self.pole;
        if p == 0 {
            return num;
        }
        if format == Format::Latex {
            let den = if p == 1 { "q - 1".to_string() } else { format!("(q - 1)^{{{p}}}") };
            return format!("\\frac{{{num}}}{{{den}}}");
        }
        let num = if self.numerator.terms().count() > 1 { format!("({num})") } else { num };
        if p == 1 {
            format!("{num}/(q - 1)")
        } else {
            format!("{num}/(q - 1)^{p}")
        }
    }
}

impl fmt::Display for RPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Format::Text))
    }
}

/// Point-count polynomial from the independent-set counts.
pub fn r_polynomial(f: &Forest) -> Result<RPolynomial, InvariantError> {
    let n = f.len() as i64;
    let a = f.independent_set_counts();
    let pole = a
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, _)| (2 * i as i64 - n).max(0))
        .max()
        .unwrap_or(0) as u32;
    let q_minus_1 = HalfLaurent::from_terms([(2, 1), (0, -1)])?;
    let mut numerator = HalfLaurent::zero();
    for (i, c) in a.into_iter().enumerate() {
        let c = i64::try_from(c).map_err(|_| LaurentError::Overflow)?;
        let e = (n - 2 * i as i64 + pole as i64) as u32;
        let term = q_minus_1.checked_pow(e)?.checked_mul(&HalfLaurent::monomial(c, 2 * i as i32))?;
        numerator = numerator.checked_add(&term)?;
    }
    Ok(RPolynomial { numerator, pole })
}

/// Top `a`-slice of the closed formula under `a = q^{-½}`, `z = q^½ − q^{-½}`,
/// compared with [`r_polynomial`].
pub fn p_top_check(f: &Forest) -> Result<bool, InvariantError> {
    let top = homfly_closed(f).top_a_part()?;
    let alpha = top.max_a().expect("nonzero top slice");
    let mut by_z = BTreeMap::new();
    for ((_, z), c) in top.terms() {
        by_z.insert(z, c);
    }
    // a^alpha = q^{-alpha/2}
    let (num, d) = substitute_conway_cleared(&by_z, -alpha)?;
    let r = r_polynomial(f)?;
    let q_minus_1 = HalfLaurent::from_terms([(2, 1), (0, -1)])?;
    let lhs = num.checked_mul(&q_minus_1.checked_pow(r.pole)?)?;
    let rhs = r.lifted(d)?;
    Ok(lhs == rhs)
}

/// `b_i² ≥ b_{i−1}·b_{i+1}` at every interior index.
pub fn log_concavity_check(coeffs: &[u64]) -> bool {
    coeffs
        .windows(3)
        .all(|w| (w[1] as u128) * (w[1] as u128) >= (w[0] as u128) * (w[2] as u128))
}

/// Everything at once, with the cross-checks folded into `methods_agreed`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub homfly: BivariateLaurent,
    pub alexander: HalfLaurent,
    pub conway_coeffs: Vec<u64>,
    pub rpoly: RPolynomial,
    pub methods_agreed: bool,
    /// `(label, agreed)` for each comparison made.
    pub checks: Vec<(String, bool)>,
}

impl InvariantReport {
    pub fn compute(f: &Forest) -> Result<Self, InvariantError> {
        let homfly = homfly_recursive(f);
        let closed = homfly_closed(f);
        let alex = alexander_matching(f)?;
        let special = homfly.to_alexander()?;
        let conway_coeffs = conway_coefficients(f);
        let cij = f.cij();
        let checks = vec![
            ("homfly recursive = closed".to_string(), homfly == closed),
            ("alexander matching = specialization".to_string(), alex == special),
            ("p_top = R".to_string(), p_top_check(f)?),
            ("c_{i,0} = b_i".to_string(), cij.deficiency_zero() == conway_coeffs),
            ("sum_j c_{i,j} = a_i".to_string(), cij.marginals() == f.independent_set_counts()),
        ];
        Ok(Self {
            methods_agreed: checks.iter().all(|c| c.1),
            homfly,
            alexander: alex,
            conway_coeffs,
            rpoly: r_polynomial(f)?,
            checks,
        })
    }

    /// Adds an externally computed HOMFLY value (e.g. the skein route).
    pub fn add_check(&mut self, label: &str, value: &BivariateLaurent) {
        let ok = *value == self.homfly;
        self.checks.push((label.to_string(), ok));
        self.methods_agreed &= ok;
    }
}
