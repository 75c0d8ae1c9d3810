//! Rho invariants of 3-dimensional lens spaces.
//!
//! `L(p, q)` is the union of two solid tori glued so that the meridian of the
//! second goes to `−q·μ₁ + p·λ₁`. With this convention
//! `L(−p, q) ≅ L(p, −q) ≅ −L(p, q)`, `L(p, q)` only depends on `q mod p`, and
//! `L(0, ±1) = S² × S¹` has vanishing rho invariant.
//!
//! Three evaluators are provided, each computed independently:
//! the sawtooth sum, its floor-function expansion, and a direct weighted
//! lattice-point count in a triangle. They agree exactly.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::exactnum::{gcd, is_order_dividing, mod_inverse};
use crate::{Error, Rational, RationalAngle, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LensSpace {
    pub p: i64,
    pub q: i64,
}

impl LensSpace {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if gcd(p, q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        Ok(LensSpace { p, q })
    }

    /// Whether `chi` defines a character of `π₁ = Z/p`.
    pub fn admits(&self, chi: &RationalAngle) -> bool {
        self.p == 0 || is_order_dividing(chi, self.p).unwrap_or(false)
    }

    pub fn rho(&self, chi: &RationalAngle) -> Result<Rational> {
        rho_lens(self.p, self.q, chi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Sawtooth,
    Floor,
    Lattice,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sawtooth" => Ok(Method::Sawtooth),
            "floor" => Ok(Method::Floor),
            "lattice" => Ok(Method::Lattice),
            other => Err(Error::Parse(format!("unknown method `{other}`"))),
        }
    }
}

pub fn rho_lens_with(method: Method, p: i64, q: i64, chi: &RationalAngle) -> Result<Rational> {
    match method {
        Method::Sawtooth => rho_lens(p, q, chi),
        Method::Floor => rho_lens_floor(p, q, chi),
        Method::Lattice => rho_lens_lattice(p, q, chi),
    }
}

/// Validates the input and reduces it to `p, q > 0` (or `p = 0`).
/// Returns `None` when the value is zero by convention, else the positive
/// parameters, the index `k ∈ {1, …, p−1}` with `χ = ζ^{kq}`, and the sign.
fn prepare(p: i64, q: i64, chi: &RationalAngle) -> Result<Option<(i64, i64, i64, i32)>> {
    LensSpace::new(p, q)?;
    if p == 0 {
        return Ok(None);
    }
    if !is_order_dividing(chi, p)? {
        return Err(Error::CharacterOrder { theta: chi.to_string(), order: p.abs() });
    }
    let mut sign = 1;
    let (mut pp, mut qq) = (p, q);
    if pp < 0 {
        pp = -pp;
        sign = -sign;
    }
    if qq < 0 {
        qq = -qq;
        sign = -sign;
    }
    if pp == 1 {
        return Ok(None);
    }
    let m = (chi.theta() * Rational::from(pp))
        .to_i64()
        .expect("checked: χ is a p-th root of unity");
    let qinv = mod_inverse(qq, pp).expect("checked: gcd(p, q) = 1");
    let k = (i128::from(m) * i128::from(qinv)).rem_euclid(i128::from(pp)) as i64;
    if k == 0 {
        return Ok(None);
    }
    Ok(Some((pp, qq, k, sign)))
}

fn signed(value: Rational, sign: i32) -> Rational {
    if sign < 0 {
        -value
    } else {
        value
    }
}

/// `ρ(L(p, q), e^{2πiχ})` as `−4 Σ_{j=1}^{k−1} ((qj/p)) − 2 ((qk/p))`.
pub fn rho_lens(p: i64, q: i64, chi: &RationalAngle) -> Result<Rational> {
    let Some((p, q, k, sign)) = prepare(p, q, chi)? else {
        return Ok(Rational::zero());
    };
    // ((qj/p)) = (2·(qj mod p) − p) / 2p off the multiples of p
    let saw2p = |j: i64| -> i128 {
        let r = (i128::from(q) * i128::from(j)).rem_euclid(i128::from(p));
        if r == 0 {
            0
        } else {
            2 * r - i128::from(p)
        }
    };
    let mut total = BigInt::zero();
    for j in 1..k {
        total -= BigInt::from(4 * saw2p(j));
    }
    total -= BigInt::from(2 * saw2p(k));
    Ok(signed(Rational::new(total, 2 * i128::from(p)).expect("p > 0"), sign))
}

/// Floor-sum form: `−(2q/p)k² + 2k − 1 + 4 Σ_{j=1}^{k−1} ⌊jq/p⌋ + 2⌊kq/p⌋`.
pub fn rho_lens_floor(p: i64, q: i64, chi: &RationalAngle) -> Result<Rational> {
    let Some((p, q, k, sign)) = prepare(p, q, chi)? else {
        return Ok(Rational::zero());
    };
    let floor = |j: i64| BigInt::from(i128::from(j) * i128::from(q)).div_floor_i(p);
    let mut integer_part = BigInt::from(2 * k - 1);
    for j in 1..k {
        integer_part += floor(j) * 4;
    }
    integer_part += floor(k) * 2;
    let quadratic = Rational::new(BigInt::from(2 * q) * BigInt::from(k) * BigInt::from(k), p)
        .expect("p > 0");
    Ok(signed(Rational::from(integer_part) - quadratic, sign))
}

trait DivFloorI {
    fn div_floor_i(self, d: i64) -> BigInt;
}

impl DivFloorI for BigInt {
    fn div_floor_i(self, d: i64) -> BigInt {
        num_integer::Integer::div_floor(&self, &BigInt::from(d))
    }
}

/// `4·(Int Δ − Area Δ)` for the triangle `Δ(k, kq/p)` with vertices
/// `(0,0)`, `(k,0)`, `(k, kq/p)`, counting lattice points by enumeration:
/// weight 1 inside, 1/2 on open edges, 1/4 on vertices other than the origin.
pub fn rho_lens_lattice(p: i64, q: i64, chi: &RationalAngle) -> Result<Rational> {
    let Some((p, q, k, sign)) = prepare(p, q, chi)? else {
        return Ok(Rational::zero());
    };
    let (p, q, k) = (i128::from(p), i128::from(q), i128::from(k));
    // apex height kq/p; the bounding box is [0,k] × [0, ⌈kq/p⌉]
    let ymax = (k * q + p - 1) / p;
    let apex_is_lattice = (k * q) % p == 0;
    // four times the weighted count
    let mut weighted: i128 = 0;
    for x in 0..=k {
        for y in 0..=ymax {
            // inside the closed triangle: y ≥ 0, x ≤ k, y·p ≤ x·q
            if y * p > x * q {
                continue;
            }
            let on_hyp = y * p == x * q;
            let is_vertex = (x == 0 && y == 0)
                || (x == k && y == 0)
                || (apex_is_lattice && x == k && y * p == k * q);
            let w = if x == 0 && y == 0 {
                0
            } else if is_vertex {
                1
            } else if y == 0 || x == k || on_hyp {
                2
            } else {
                4
            };
            weighted += w;
        }
    }
    let four_area = Rational::new(BigInt::from(2 * q * k * k), p).expect("p > 0");
    Ok(signed(Rational::from(BigInt::from(weighted)) - four_area, sign))
}

/// `ρ(L(n, 1), e^{2πiθ}) = 2nθ(1−θ) − sgn(n)` for nontrivial characters;
/// `0` for `n = 0` and for the trivial character.
pub fn rho_lens_integer_framing(n: i64, theta: &RationalAngle) -> Result<Rational> {
    if n == 0 {
        return Ok(Rational::zero());
    }
    if !is_order_dividing(theta, n)? {
        return Err(Error::CharacterOrder { theta: theta.to_string(), order: n.abs() });
    }
    if !theta.nontrivial() {
        return Ok(Rational::zero());
    }
    Ok(integer_framing_closed_form(n, theta))
}

/// The closed form `2nθ(1−θ) − sgn(n)` evaluated literally (no special cases).
pub fn integer_framing_closed_form(n: i64, theta: &RationalAngle) -> Rational {
    let t = theta.theta();
    Rational::from(2 * n) * t * (Rational::one() - t) - Rational::from(n.signum())
}

/// Canonical representative `(p', q', ε)` with `p' > 0`, `0 ≤ q' < p'`
/// (or `(0, 1)`) and `L(p, q) = ε·L(p', q')`.
pub fn normalize_lens(p: i64, q: i64) -> Result<(i64, i64, i32)> {
    LensSpace::new(p, q)?;
    if p == 0 {
        // L(0, ±1): both are S² × S¹, which admits an orientation reversal
        return Ok((0, 1, 1));
    }
    let sign = if p < 0 { -1 } else { 1 };
    let pp = p.abs();
    Ok((pp, q.rem_euclid(pp), sign))
}
