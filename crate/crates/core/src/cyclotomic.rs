//! Exact arithmetic in the cyclotomic field `Q(ζ_N)`, `ζ_N = e^{2πi/N}`.
//!
//! Elements are rational combinations of `1, ζ, …, ζ^{φ(N)−1}` reduced modulo
//! the `N`-th cyclotomic polynomial. Zero testing is exact. The sign of a real
//! element is decided by evaluating it on rigorous dyadic enclosures of
//! `cos(2πj/N)`, refining the precision until the enclosure excludes zero
//! (which always happens, since the element is known to be nonzero).

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::ConjField;
use crate::{Rational, RationalAngle};

type Poly = Vec<BigRational>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n > 0);
    // x^n − 1 divided by Φ_d for every proper divisor d
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = divide_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![BigInt::zero()];
    }
    let mut q = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    q
}

/// `Q(ζ_N)` together with the reduced powers of `ζ`.
pub struct CyclotomicField {
    order: u64,
    degree: usize,
    modulus: Poly,
    powers: Vec<Poly>,
    cos_f64: OnceLock<Vec<f64>>,
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(ζ_{})", self.order)
    }
}

impl CyclotomicField {
    pub fn new(order: u64) -> Arc<Self> {
        assert!(order > 0, "cyclotomic order must be positive");
        let modulus: Poly = cyclotomic_polynomial(order)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur: Poly = vec![BigRational::zero(); degree];
        cur[0] = BigRational::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x and reduce
            let mut next = vec![BigRational::zero(); degree + 1];
            next[1..].clone_from_slice(&cur);
            let top = next[degree].clone();
            if !top.is_zero() {
                for i in 0..degree {
                    next[i] -= &top * &modulus[i];
                }
            }
            next.truncate(degree);
            cur = next;
        }
        Arc::new(CyclotomicField {
            order,
            degree,
            modulus,
            powers,
            cos_f64: OnceLock::new(),
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn cos_table(&self) -> &[f64] {
        self.cos_f64.get_or_init(|| {
            (0..self.degree)
                .map(|j| (2.0 * std::f64::consts::PI * j as f64 / self.order as f64).cos())
                .collect()
        })
    }
}

/// An element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Poly,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| format!("{}·ζ^{j}", Rational::from_big(c.clone())))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Cyclotomic {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Cyclotomic { field: field.clone(), coeffs: vec![BigRational::zero(); field.degree] }
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, r: &Rational) -> Self {
        let mut z = Cyclotomic::zero(field);
        z.coeffs[0] = r.as_big().clone();
        z
    }

    pub fn from_int(field: &Arc<CyclotomicField>, n: i64) -> Self {
        Cyclotomic::from_rational(field, &Rational::from(n))
    }

    /// `ζ_N^k` for any integer `k`.
    pub fn zeta_pow(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let idx = k.rem_euclid(field.order as i64) as usize;
        Cyclotomic { field: field.clone(), coeffs: field.powers[idx].clone() }
    }

    /// `e^{2πiθ}`; `θ`'s denominator must divide the field order.
    pub fn from_angle(field: &Arc<CyclotomicField>, angle: &RationalAngle) -> Self {
        let scaled = angle.theta() * Rational::from(field.order as i64);
        let k = scaled
            .to_i64()
            .expect("angle order must divide the cyclotomic field order");
        Cyclotomic::zeta_pow(field, k)
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn reduce(&self, full: Poly) -> Self {
        let d = self.field.degree;
        let mut out: Poly = vec![BigRational::zero(); d];
        for (k, c) in full.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < d {
                out[k] += c;
            } else {
                let pw = &self.field.powers[k % self.field.order as usize];
                for (o, p) in out.iter_mut().zip(pw) {
                    if !p.is_zero() {
                        *o += &c * p;
                    }
                }
            }
        }
        Cyclotomic { field: self.field.clone(), coeffs: out }
    }

    /// Value as `f64`; display and quick sign checks only.
    pub fn approx_re(&self) -> f64 {
        self.coeffs
            .iter()
            .zip(self.field.cos_table())
            .map(|(c, cs)| c.to_f64().unwrap_or(f64::NAN) * cs)
            .sum()
    }

    fn sign_f64(&self) -> Option<i32> {
        let mut value = 0.0f64;
        let mut bound = 1e-290;
        for (c, cs) in self.coeffs.iter().zip(self.field.cos_table()) {
            let cf = c.to_f64()?;
            if !cf.is_finite() {
                return None;
            }
            value += cf * cs;
            bound += cf.abs() * 1e-12;
        }
        if value > bound {
            Some(1)
        } else if value < -bound {
            Some(-1)
        } else {
            None
        }
    }

    fn sign_rigorous(&self) -> i32 {
        let mut prec = 128u32;
        loop {
            let cos = cos_enclosures(self.field.order, self.field.degree, prec);
            let mut centre = BigRational::zero();
            let mut radius = BigRational::zero();
            for (c, m) in self.coeffs.iter().zip(&cos) {
                if c.is_zero() {
                    continue;
                }
                centre += c * BigRational::from_integer(m.clone());
                radius += c.abs();
            }
            // each cosine is within 2^-prec of m / 2^prec
            if centre.abs() > radius {
                return if centre.is_positive() { 1 } else { -1 };
            }
            prec *= 2;
            assert!(prec < 1 << 22, "sign refinement did not terminate");
        }
    }
}

/// Fixed-point approximations `m_j` with `|cos(2πj/N) − m_j / 2^prec| ≤ 2^-prec`.
fn cos_enclosures(order: u64, count: usize, prec: u32) -> Vec<BigInt> {
    // Work with 64 guard bits; accumulated truncation error stays far below 2^64 ulps.
    let guard = 64u32;
    let w = prec + guard;
    let one = BigInt::one() << w;
    let pi = pi_fixed(w);
    (0..count)
        .map(|j| {
            let j = j as u64 % order;
            let j = j.min(order - j);
            // t = 2πj/N ∈ [0, π]
            let t: BigInt = (&pi * BigInt::from(2 * j)) / BigInt::from(order);
            let t2 = (&t * &t) >> w;
            let mut term = one.clone();
            let mut sum = one.clone();
            let mut k = 1u64;
            loop {
                term = (&term * &t2) >> w;
                term /= BigInt::from((2 * k - 1) * (2 * k));
                if term.is_zero() {
                    break;
                }
                if k % 2 == 1 {
                    sum -= &term;
                } else {
                    sum += &term;
                }
                k += 1;
            }
            sum >> guard
        })
        .collect()
}

/// `π · 2^w` truncated, via Machin's formula.
fn pi_fixed(w: u32) -> BigInt {
    let atan_inv = |x: u64| -> BigInt {
        let x = BigInt::from(x);
        let x2 = &x * &x;
        let mut t = (BigInt::one() << w) / &x;
        let mut sum = BigInt::zero();
        let mut k = 0u64;
        while !t.is_zero() {
            let term = &t / BigInt::from(2 * k + 1);
            if k.is_multiple_of(2) {
                sum += term;
            } else {
                sum -= term;
            }
            t /= &x2;
            k += 1;
        }
        sum
    };
    atan_inv(5) * 16 - atan_inv(239) * 4
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder of `a / b` over `Q`.
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    let mut rem: Poly = a.to_vec();
    trim(&mut rem);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut q = vec![BigRational::zero(); rem.len() - db];
    for k in (0..q.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (i, d) in b.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        q[k] = c;
    }
    trim(&mut rem);
    (q, rem)
}

impl ConjField for Cyclotomic {
    fn zero_like(&self) -> Self {
        Cyclotomic::zero(&self.field)
    }

    fn one_like(&self) -> Self {
        Cyclotomic::from_int(&self.field, 1)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn add(&self, other: &Self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        self.reduce(poly_mul(&self.coeffs, &other.coeffs))
    }

    fn neg(&self) -> Self {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        // extended Euclid: s·a + t·Φ = 1
        let mut r0 = self.field.modulus.clone();
        let mut r1 = self.coeffs.clone();
        trim(&mut r1);
        let mut t0: Poly = Vec::new();
        let mut t1: Poly = vec![BigRational::one()];
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t2);
        }
        // r1 is a nonzero constant since Φ is irreducible
        let c = r1[0].recip();
        let scaled: Poly = t1.iter().map(|x| x * &c).collect();
        self.reduce(scaled)
    }

    fn conj(&self) -> Self {
        let n = self.field.order as usize;
        let mut full: Poly = vec![BigRational::zero(); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                full[(n - j) % n] += c;
            }
        }
        self.reduce(full)
    }

    fn real_sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        self.sign_f64().unwrap_or_else(|| self.sign_rigorous())
    }
}

/// Least common multiple of the orders of the given angles (at least 1).
pub fn common_order<'a>(angles: impl IntoIterator<Item = &'a RationalAngle>) -> u64 {
    angles.into_iter().fold(1u64, |acc, a| {
        let d = a.order().to_u64().expect("angle order fits in u64");
        acc.lcm(&d)
    })
}
