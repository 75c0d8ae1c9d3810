//! Link signature functions from matrix data.
//!
//! Levine–Tristram signatures come from a Seifert matrix, multivariable
//! signatures from the generalized Seifert matrices of a C-complex. Both are
//! evaluated exactly over the cyclotomic field generated by the angles.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{common_order, Cyclotomic, CyclotomicField};
use crate::field::{hermitian_signature, ConjField, Mat};
use crate::link::{ColoredLink, ColoredRep};
use crate::{Error, Rational, RationalAngle, Result};

/// A square integer matrix `A` with `A_ij = lk(a_i, a_j⁺)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
}

impl TryFrom<Vec<Vec<i64>>> for SeifertMatrix {
    type Error = Error;

    fn try_from(entries: Vec<Vec<i64>>) -> Result<Self> {
        SeifertMatrix::new(entries)
    }
}

impl From<SeifertMatrix> for Vec<Vec<i64>> {
    fn from(a: SeifertMatrix) -> Self {
        a.entries
    }
}

impl SeifertMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::NotSquare);
        }
        Ok(SeifertMatrix { entries })
    }

    /// The unknot's empty matrix.
    pub fn empty() -> Self {
        SeifertMatrix { entries: Vec::new() }
    }

    pub fn trefoil() -> Self {
        SeifertMatrix { entries: vec![vec![-1, 1], vec![0, -1]] }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn transpose(&self) -> SeifertMatrix {
        SeifertMatrix { entries: transpose(&self.entries) }
    }

    /// `det(A − Aᵀ)`; `±1` for a knot.
    pub fn skew_determinant(&self) -> BigInt {
        let n = self.dim();
        let m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self.entries[i][j] - self.entries[j][i])).collect())
            .collect();
        bareiss_det(m)
    }

    pub fn is_unimodular(&self) -> bool {
        self.skew_determinant().abs().is_one()
    }

    /// Coefficients (constant term first) of `det(A − tAᵀ)`.
    pub fn alexander_determinant(&self) -> Vec<BigInt> {
        let n = self.dim();
        // a polynomial of degree ≤ n is fixed by its values at 0..=n
        let values: Vec<BigInt> = (0..=n as i64)
            .map(|t| {
                let m: Vec<Vec<BigInt>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| BigInt::from(self.entries[i][j] - t * self.entries[j][i]))
                            .collect()
                    })
                    .collect();
                bareiss_det(m)
            })
            .collect();
        interpolate(&values)
    }
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect()
}

/// Fraction-free Gaussian elimination.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Integer coefficients of the polynomial taking `values[t]` at `t = 0, 1, …`.
fn interpolate(values: &[BigInt]) -> Vec<BigInt> {
    use num_rational::BigRational;
    let n = values.len();
    // Newton forward differences on the nodes 0..n
    let mut diffs: Vec<BigRational> = values.iter().cloned().map(BigRational::from_integer).collect();
    let mut newton = Vec::with_capacity(n);
    for level in 0..n {
        newton.push(diffs[0].clone());
        let denom = BigRational::from_integer(BigInt::from(level as i64 + 1));
        diffs = diffs.windows(2).map(|w| (&w[1] - &w[0]) / &denom).collect();
    }
    // expand Σ c_l · t(t−1)…(t−l+1)
    let mut coeffs = vec![BigRational::zero(); n.max(1)];
    let mut basis = vec![BigRational::one()];
    for (l, c) in newton.iter().enumerate() {
        for (k, b) in basis.iter().enumerate() {
            coeffs[k] += c * b;
        }
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        let shift = BigRational::from_integer(BigInt::from(l as i64));
        for (k, b) in basis.iter().enumerate() {
            next[k + 1] += b;
            next[k] -= b * &shift;
        }
        basis = next;
    }
    coeffs
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "determinant polynomial has integer coefficients");
            c.to_integer()
        })
        .collect()
}

/// Strips powers of `t` and makes the lowest coefficient positive.
pub fn normalize_laurent(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let lead = p.iter().position(|c| !c.is_zero()).unwrap_or(p.len());
    let mut out: Vec<BigInt> = p.split_off(lead);
    if out.first().is_some_and(Signed::is_negative) {
        out.iter_mut().for_each(|c| *c = -&*c);
    }
    out
}

/// `(t^{rs}−1)(t−1) / ((t^r−1)(t^s−1))`.
pub fn torus_alexander(r: u32, s: u32) -> Vec<BigInt> {
    let binom = |e: u32| -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); e as usize + 1];
        v[0] = BigInt::from(-1);
        v[e as usize] = BigInt::one();
        v
    };
    let num = poly_mul(&binom(r * s), &binom(1));
    let den = poly_mul(&binom(r), &binom(s));
    poly_div_exact(&num, &den)
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Division by a monic polynomial with zero remainder.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dl = den.len();
    assert!(den[dl - 1].is_one());
    let mut q = vec![BigInt::zero(); num.len() - dl + 1];
    for k in (0..q.len()).rev() {
        let c = rem[k + dl - 1].clone();
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        q[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    q
}

/// Seifert matrix of the closure of a braid on `strands` strands, from
/// Seifert's algorithm on the closed-braid diagram.
///
/// `word` lists generators `±i` (`1 ≤ i < strands`). Every generator must
/// occur. Surface classes are the loops between consecutive crossings on the
/// same band, ordered band by band (left to right), then bottom to top.
pub fn braid_seifert(strands: usize, word: &[i32]) -> Result<SeifertMatrix> {
    if strands < 1 {
        return Err(Error::InvalidParameter("a braid needs at least one strand".into()));
    }
    for &w in word {
        if w == 0 || w.unsigned_abs() as usize >= strands {
            return Err(Error::InvalidParameter(format!(
                "generator {w} out of range for {strands} strands"
            )));
        }
    }
    for g in 1..strands as u32 {
        if !word.iter().any(|w| w.unsigned_abs() == g) {
            return Err(Error::InvalidParameter(format!("generator {g} does not occur")));
        }
    }
    // (band, lower crossing, upper crossing)
    let mut loops = Vec::new();
    for g in 1..strands as u32 {
        let pos: Vec<usize> = (0..word.len()).filter(|&k| word[k].unsigned_abs() == g).collect();
        for w in pos.windows(2) {
            loops.push((g, w[0], w[1]));
        }
    }
    let sign = |k: usize| -> i64 { word[k].signum().into() };
    let n = loops.len();
    let mut a = vec![vec![0i64; n]; n];
    for (x, &(g, lo, hi)) in loops.iter().enumerate() {
        a[x][x] = -(sign(lo) + sign(hi)) / 2;
        for (y, &(h, lo2, hi2)) in loops.iter().enumerate() {
            if h == g && lo2 == hi {
                if sign(hi) > 0 {
                    a[x][y] = 1;
                } else {
                    a[y][x] = -1;
                }
            }
            if h == g + 1 {
                if lo < lo2 && lo2 < hi && hi < hi2 {
                    a[x][y] = -1;
                }
                if lo2 < lo && lo < hi2 && hi2 < hi {
                    a[x][y] = 1;
                }
            }
        }
    }
    SeifertMatrix::new(a)
}

/// Seifert matrix of the `(r, s)` torus knot from the braid `(σ₁⋯σ_{r−1})^s`.
pub fn torus_knot_seifert(r: i64, s: i64) -> Result<SeifertMatrix> {
    if r < 2 || s < 2 {
        return Err(Error::InvalidParameter(format!("torus knot needs r, s ≥ 2 (got {r}, {s})")));
    }
    if r.gcd(&s) != 1 {
        return Err(Error::NotCoprime { p: r, q: s });
    }
    if (r - 1) * (s - 1) > 400 {
        return Err(Error::InvalidParameter(format!("T({r},{s}) is too large")));
    }
    let word: Vec<i32> = (0..s).flat_map(|_| 1..r as i32).collect();
    braid_seifert(r as usize, &word)
}

/// Checks unimodularity and the Alexander polynomial identity for `T(r, s)`.
pub fn validate_torus_seifert(a: &SeifertMatrix, r: i64, s: i64) -> bool {
    let expected = normalize_laurent(torus_alexander(r as u32, s as u32));
    a.dim() == ((r - 1) * (s - 1)) as usize
        && a.is_unimodular()
        && normalize_laurent(a.alexander_determinant()) == expected
}

fn lt_matrix(a: &[Vec<i64>], field: &std::sync::Arc<CyclotomicField>, omega: &RationalAngle) -> Mat<Cyclotomic> {
    let one = Cyclotomic::from_int(field, 1);
    let w = Cyclotomic::from_angle(field, omega);
    let c = one.sub(&w);
    let cbar = c.conj();
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = Cyclotomic::from_int(field, a[i][j]);
                    let y = Cyclotomic::from_int(field, a[j][i]);
                    c.mul(&x).add(&cbar.mul(&y))
                })
                .collect()
        })
        .collect()
}

/// `σ_K(ω)`: signature of `(1−ω)A + (1−ω̄)Aᵀ`.
pub fn levine_tristram(a: &SeifertMatrix, omega: &RationalAngle) -> Result<i64> {
    if !omega.nontrivial() {
        return Err(Error::TrivialCharacter(omega.to_string()));
    }
    if a.dim() == 0 {
        return Ok(0);
    }
    let field = CyclotomicField::new(common_order([omega]));
    Ok(hermitian_signature(&lt_matrix(&a.entries, &field, omega)))
}

/// Sign vector `ε ∈ {±1}ⁿ`, written `"+-+"` in files.
pub type SignVector = Vec<i8>;

fn sign_key(eps: &[i8]) -> String {
    eps.iter().map(|&e| if e > 0 { '+' } else { '-' }).collect()
}

fn parse_sign_key(key: &str) -> Result<SignVector> {
    key.chars()
        .map(|c| match c {
            '+' => Ok(1),
            '-' | '\u{2212}' => Ok(-1),
            other => Err(Error::Parse(format!("bad sign `{other}` in C-complex key `{key}`"))),
        })
        .collect()
}

fn all_sign_vectors(n: usize) -> Vec<SignVector> {
    (0..1u64 << n)
        .map(|bits| (0..n).map(|i| if bits >> i & 1 == 0 { 1 } else { -1 }).collect())
        .collect()
}

/// Generalized Seifert matrices `A^ε` of a C-complex, with `A^{−ε} = (A^ε)ᵀ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CComplexFile", into = "CComplexFile")]
pub struct CComplexData {
    colors: usize,
    size: usize,
    matrices: BTreeMap<SignVector, Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CComplexFile {
    pub colors: usize,
    pub matrices: BTreeMap<String, Vec<Vec<i64>>>,
}

impl TryFrom<CComplexFile> for CComplexData {
    type Error = Error;

    fn try_from(f: CComplexFile) -> Result<Self> {
        let mut given = BTreeMap::new();
        for (key, m) in f.matrices {
            let eps = parse_sign_key(&key)?;
            if eps.len() != f.colors {
                return Err(Error::InconsistentCComplex(format!(
                    "key `{key}` has {} signs, expected {}",
                    eps.len(),
                    f.colors
                )));
            }
            given.insert(eps, m);
        }
        CComplexData::new(f.colors, given)
    }
}

impl From<CComplexData> for CComplexFile {
    fn from(c: CComplexData) -> Self {
        CComplexFile {
            colors: c.colors,
            matrices: c.matrices.into_iter().map(|(k, v)| (sign_key(&k), v)).collect(),
        }
    }
}

impl CComplexData {
    /// Missing `A^ε` are filled in as `(A^{−ε})ᵀ`; present pairs must agree.
    pub fn new(colors: usize, mut matrices: BTreeMap<SignVector, Vec<Vec<i64>>>) -> Result<Self> {
        if colors == 0 {
            return Err(Error::InconsistentCComplex("at least one color is required".into()));
        }
        let size = match matrices.values().next() {
            Some(m) => m.len(),
            None => return Err(Error::InconsistentCComplex("no matrices given".into())),
        };
        for (eps, m) in &matrices {
            if m.len() != size || m.iter().any(|row| row.len() != size) {
                return Err(Error::InconsistentCComplex(format!(
                    "A^{} is not {size}×{size}",
                    sign_key(eps)
                )));
            }
        }
        for eps in all_sign_vectors(colors) {
            let neg: SignVector = eps.iter().map(|e| -e).collect();
            match (matrices.get(&eps).cloned(), matrices.get(&neg).cloned()) {
                (Some(a), Some(b)) => {
                    if transpose(&a) != b {
                        return Err(Error::InconsistentCComplex(format!(
                            "A^{} is not the transpose of A^{}",
                            sign_key(&neg),
                            sign_key(&eps)
                        )));
                    }
                }
                (Some(a), None) => {
                    matrices.insert(neg, transpose(&a));
                }
                (None, Some(b)) => {
                    matrices.insert(eps, transpose(&b));
                }
                (None, None) => {
                    return Err(Error::InconsistentCComplex(format!(
                        "neither A^{} nor A^{} is given",
                        sign_key(&eps),
                        sign_key(&neg)
                    )));
                }
            }
        }
        Ok(CComplexData { colors, size, matrices })
    }

    /// The 1-colored C-complex of a Seifert surface: `A^+ = A`.
    pub fn from_seifert(a: &SeifertMatrix) -> Self {
        let mut m = BTreeMap::new();
        m.insert(vec![1], a.entries.clone());
        m.insert(vec![-1], transpose(&a.entries));
        CComplexData { colors: 1, size: a.dim(), matrices: m }
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn matrix(&self, eps: &[i8]) -> Option<&Vec<Vec<i64>>> {
        self.matrices.get(eps)
    }

    /// `H(ω) = Σ_ε Π_i (1 − ω̄_i^{ε_i}) A^ε`.
    pub fn hermitian_form(&self, omega: &ColoredRep) -> Result<Mat<Cyclotomic>> {
        if omega.len() != self.colors {
            return Err(Error::DimensionMismatch { expected: self.colors, found: omega.len() });
        }
        if let Some(t) = omega.angles().iter().find(|a| !a.nontrivial()) {
            return Err(Error::TrivialCharacter(t.to_string()));
        }
        let field = CyclotomicField::new(common_order(omega.angles()));
        let zero = Cyclotomic::zero(&field);
        let one = Cyclotomic::from_int(&field, 1);
        let mut h = vec![vec![zero.clone(); self.size]; self.size];
        for (eps, a) in &self.matrices {
            let mut coeff = one.clone();
            for (angle, &e) in omega.angles().iter().zip(eps) {
                // ω̄^ε = ω^{−ε}
                let w = Cyclotomic::from_angle(&field, &angle.power(-i64::from(e)));
                coeff = coeff.mul(&one.sub(&w));
            }
            for (hrow, arow) in h.iter_mut().zip(a) {
                for (hx, &x) in hrow.iter_mut().zip(arow) {
                    if x != 0 {
                        *hx = hx.add(&coeff.mul(&Cyclotomic::from_int(&field, x)));
                    }
                }
            }
        }
        Ok(h)
    }
}

/// `σ_L(ω)` from C-complex data.
pub fn multivariable_signature(c: &CComplexData, omega: &ColoredRep) -> Result<i64> {
    Ok(hermitian_signature(&c.hermitian_form(omega)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub omega: ColoredRep,
    pub sigma: i64,
}

/// However `σ_L` is known for the link at hand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignatureSource {
    Seifert(SeifertMatrix),
    CComplex(CComplexData),
    Table(Vec<TableEntry>),
}

impl SignatureSource {
    pub fn table(entries: impl IntoIterator<Item = (ColoredRep, i64)>) -> Self {
        SignatureSource::Table(
            entries.into_iter().map(|(omega, sigma)| TableEntry { omega, sigma }).collect(),
        )
    }
}

/// `σ_L(ω)` from whichever source is available.
pub fn sigma_of(source: &SignatureSource, link: &ColoredLink, omega: &ColoredRep) -> Result<i64> {
    if omega.len() != link.colors() {
        return Err(Error::DimensionMismatch { expected: link.colors(), found: omega.len() });
    }
    match source {
        SignatureSource::Seifert(a) => {
            if link.colors() != 1 {
                return Err(Error::InvalidParameter(format!(
                    "a Seifert matrix describes a 1-colored link, but the link has {} colors",
                    link.colors()
                )));
            }
            levine_tristram(a, omega.angle(0))
        }
        SignatureSource::CComplex(c) => {
            if c.colors() != link.colors() {
                return Err(Error::DimensionMismatch { expected: link.colors(), found: c.colors() });
            }
            multivariable_signature(c, omega)
        }
        SignatureSource::Table(entries) => entries
            .iter()
            .find(|e| &e.omega == omega)
            .map(|e| e.sigma)
            .ok_or_else(|| Error::MissingTableEntry(omega.to_string())),
    }
}

/// Litherland's count for torus knots, used as an oracle:
/// `σ(e^{2πiθ}) = #{outside (θ, θ+1)} − #{inside}` over `i/r + j/s`.
pub fn torus_signature_litherland(r: i64, s: i64, theta: &RationalAngle) -> i64 {
    let t = theta.theta();
    let upper = t + Rational::one();
    let mut sigma = 0;
    for i in 1..r {
        for j in 1..s {
            let x = Rational::frac(i, r) + Rational::frac(j, s);
            if &x > t && x < upper {
                sigma -= 1;
            } else if &x < t || x > upper {
                sigma += 1;
            }
        }
    }
    sigma
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: i64, d: i64) -> RationalAngle {
        RationalAngle::frac(n, d)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn lt_examples() {
        assert_eq!(levine_tristram(&SeifertMatrix::empty(), &a(1, 3)).unwrap(), 0);
        assert_eq!(levine_tristram(&SeifertMatrix::trefoil(), &a(1, 2)).unwrap(), -2);
        assert_eq!(levine_tristram(&SeifertMatrix::trefoil(), &a(1, 5)).unwrap(), -2);
        assert_eq!(levine_tristram(&SeifertMatrix::trefoil(), &a(1, 7)).unwrap(), 0);
        assert!(matches!(
            levine_tristram(&SeifertMatrix::trefoil(), &a(0, 1)),
            Err(Error::TrivialCharacter(_))
        ));
    }

    #[test]
    fn torus_generator() {
        let t23 = torus_knot_seifert(2, 3).unwrap();
        assert_eq!(t23, SeifertMatrix::trefoil());
        assert_eq!(levine_tristram(&t23, &a(1, 2)).unwrap(), -2);
        let t25 = torus_knot_seifert(2, 5).unwrap();
        assert_eq!(t25.dim(), 4);
        assert_eq!(levine_tristram(&t25, &a(1, 2)).unwrap(), -4);
        assert_eq!(torus_knot_seifert(3, 7).unwrap().dim(), 12);
        assert!(torus_knot_seifert(2, 4).is_err());
        assert!(torus_knot_seifert(1, 4).is_err());
    }

    #[test]
    fn alexander_polynomials() {
        assert_eq!(normalize_laurent(torus_alexander(2, 3)), ints(&[1, -1, 1]));
        let t = SeifertMatrix::trefoil();
        assert_eq!(t.skew_determinant().abs(), BigInt::one());
        assert_eq!(normalize_laurent(t.alexander_determinant()), ints(&[1, -1, 1]));
        // figure-eight from the braid σ₁σ₂⁻¹σ₁σ₂⁻¹
        let fig8 = braid_seifert(3, &[1, -2, 1, -2]).unwrap();
        assert_eq!(normalize_laurent(fig8.alexander_determinant()), ints(&[1, -3, 1]));
        assert_eq!(levine_tristram(&fig8, &a(1, 2)).unwrap(), 0);
    }

    #[test]
    fn bareiss_matches_small_cases() {
        let m = |v: Vec<Vec<i64>>| v.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        assert_eq!(bareiss_det(m(vec![vec![0, 1], vec![1, 0]])), BigInt::from(-1));
        assert_eq!(bareiss_det(m(vec![vec![2, 3, 1], vec![4, 1, 0], vec![0, 5, 3]])), BigInt::from(-10));
        assert_eq!(bareiss_det(m(vec![vec![1, 2], vec![2, 4]])), BigInt::zero());
    }

    #[test]
    fn ccomplex_examples() {
        let mut m = BTreeMap::new();
        m.insert(vec![1, 1], vec![vec![1]]);
        m.insert(vec![1, -1], vec![vec![0]]);
        let c = CComplexData::new(2, m).unwrap();
        let omega = ColoredRep::new(vec![a(1, 2), a(1, 2)]);
        assert_eq!(multivariable_signature(&c, &omega).unwrap(), 1);

        let mut m = BTreeMap::new();
        m.insert(vec![1, 1], vec![vec![0, 0], vec![0, 0]]);
        m.insert(vec![1, -1], vec![vec![0, 0], vec![0, 0]]);
        let zero = CComplexData::new(2, m).unwrap();
        assert_eq!(multivariable_signature(&zero, &ColoredRep::new(vec![a(1, 3), a(2, 5)])).unwrap(), 0);

        let one = CComplexData::from_seifert(&SeifertMatrix::trefoil());
        for k in 1..12 {
            let w = a(k, 12);
            assert_eq!(
                multivariable_signature(&one, &ColoredRep::single(w.clone())).unwrap(),
                levine_tristram(&SeifertMatrix::trefoil(), &w).unwrap()
            );
        }
    }

    #[test]
    fn ccomplex_validation() {
        let json = r#"{"colors": 2, "matrices": {"++": [[1]], "+-": [[0]]}}"#;
        let c: CComplexData = serde_json::from_str(json).unwrap();
        assert_eq!(c.matrix(&[-1, -1]), Some(&vec![vec![1]]));
        let bad = r#"{"colors": 2, "matrices": {"++": [[1, 2], [0, 1]], "--": [[1, 2], [0, 1]], "+-": [[0, 0], [0, 0]]}}"#;
        assert!(matches!(
            serde_json::from_str::<CComplexData>(bad).map_err(|e| e.to_string()),
            Err(msg) if msg.contains("transpose")
        ));
        let missing = r#"{"colors": 2, "matrices": {"++": [[1]]}}"#;
        assert!(serde_json::from_str::<CComplexData>(missing).is_err());
        let trivial = ColoredRep::new(vec![a(0, 1), a(1, 2)]);
        assert!(multivariable_signature(&c, &trivial).is_err());
    }

    #[test]
    fn sources() {
        let knot = ColoredLink::knot();
        let w = ColoredRep::single(a(1, 2));
        let table = SignatureSource::table([(w.clone(), -2)]);
        assert_eq!(sigma_of(&table, &knot, &w).unwrap(), -2);
        let other = ColoredRep::single(a(1, 3));
        assert_eq!(
            sigma_of(&table, &knot, &other),
            Err(Error::MissingTableEntry("(1/3)".into()))
        );
        let seifert = SignatureSource::Seifert(SeifertMatrix::trefoil());
        assert_eq!(sigma_of(&seifert, &knot, &w).unwrap(), -2);
        let cc = SignatureSource::CComplex(CComplexData::from_seifert(&SeifertMatrix::trefoil()));
        assert_eq!(sigma_of(&cc, &knot, &other).unwrap(), sigma_of(&seifert, &knot, &other).unwrap());
        let json = serde_json::to_string(&table).unwrap();
        assert_eq!(json, r#"{"table":[{"omega":["1/2"],"sigma":-2}]}"#);
        assert_eq!(serde_json::from_str::<SignatureSource>(&json).unwrap(), table);
    }

    #[test]
    fn litherland_trefoil() {
        assert_eq!(torus_signature_litherland(2, 3, &a(1, 2)), -2);
        assert_eq!(torus_signature_litherland(2, 3, &a(1, 7)), 0);
    }
}
