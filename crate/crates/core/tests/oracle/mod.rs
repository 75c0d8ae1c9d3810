//! Independent oracles used only by tests.
#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use rho_core::field::Mat;
use rho_core::par::Execution;
use rho_core::verify::{self, CheckResult};
use rho_core::{GaussianRational, Rational, RationalAngle};

type Poly = Vec<BigRational>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn derivative(p: &Poly) -> Poly {
    let mut d: Poly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
        .collect();
    trim(&mut d);
    d
}

fn divrem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    let lead = b[db].clone();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = &r[r.len() - 1] / &lead;
        for (j, x) in b.iter().enumerate() {
            r[shift + j] -= &c * x;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn monic(mut p: Poly) -> Poly {
    trim(&mut p);
    if let Some(lead) = p.last().cloned() {
        p.iter_mut().for_each(|c| *c = &*c / &lead);
    }
    p
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    let mut out: Poly = (0..n).map(|k| a.get(k).unwrap_or(&z) - b.get(k).unwrap_or(&z)).collect();
    trim(&mut out);
    out
}

/// Yun's square-free decomposition of a monic polynomial: `(factor, multiplicity)`.
fn square_free(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let fp = derivative(f);
    let a0 = gcd(f, &fp);
    let mut b = divrem(f, &a0).0;
    let c = divrem(&fp, &a0).0;
    let mut d = sub(&c, &derivative(&b));
    let mut i = 1;
    while b.len() > 1 {
        let a = gcd(&b, &d);
        let nb = divrem(&b, &a).0;
        let nc = divrem(&d, &a).0;
        d = sub(&nc, &derivative(&nb));
        if a.len() > 1 {
            out.push((a, i));
        }
        b = nb;
        i += 1;
    }
    out
}

fn sign(x: &BigRational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn changes(signs: impl Iterator<Item = i32>) -> usize {
    let nonzero: Vec<i32> = signs.filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `(#positive roots, #negative roots)` of a square-free polynomial with
/// `g(0) ≠ 0`, by Sturm's theorem.
fn sturm_counts(g: &Poly) -> (usize, usize) {
    let mut seq = vec![g.clone(), derivative(g)];
    loop {
        let n = seq.len();
        let (_, r) = divrem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    let at_zero = changes(seq.iter().map(|p| sign(&p[0])));
    let at_pos = changes(seq.iter().map(|p| sign(p.last().unwrap())));
    let at_neg = changes(seq.iter().map(|p| {
        let s = sign(p.last().unwrap());
        if (p.len() - 1) % 2 == 1 {
            -s
        } else {
            s
        }
    }));
    (at_zero - at_pos, at_neg - at_zero)
}

/// Characteristic polynomial `det(xI − A)` of an integer matrix (Faddeev–LeVerrier).
fn charpoly(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k−1} + c_{n−k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                if a[i][l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !m[l][j].is_zero() {
                        next[i][j] += &a[i][l] * &m[l][j];
                    }
                }
            }
            next[i][i] += &c[n - k + 1];
        }
        m = next;
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                trace += &a[i][l] * &m[l][i];
            }
        }
        let (q, r) = (-trace).div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Faddeev–LeVerrier division is exact on integer matrices");
        c[n - k] = q;
    }
    c
}

/// Signature of a Hermitian matrix from the Sturm counts of its realification.
pub fn sturm_signature(h: &Mat<GaussianRational>) -> i64 {
    let n = h.len();
    if n == 0 {
        return 0;
    }
    // clear denominators; a positive scalar does not change the signature
    let mut lcm = BigInt::one();
    for x in h.iter().flatten() {
        lcm = lcm.lcm(x.re.denom()).lcm(x.im.denom());
    }
    let scale = Rational::from(lcm);
    let int = |r: &Rational| (r * &scale).numer().clone();
    // [[X, −Y], [Y, X]]
    let mut real = vec![vec![BigInt::zero(); 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let x = int(&h[i][j].re);
            let y = int(&h[i][j].im);
            real[i][j] = x.clone();
            real[n + i][n + j] = x;
            real[i][n + j] = -y.clone();
            real[n + i][j] = y;
        }
    }
    let cp = charpoly(&real);
    let zeros = cp.iter().position(|c| !c.is_zero()).unwrap();
    let stripped: Poly = cp[zeros..].iter().cloned().map(BigRational::from_integer).collect();
    let mut pos = 0;
    let mut neg = 0;
    for (factor, mult) in square_free(&monic(stripped)) {
        let (p, q) = sturm_counts(&factor);
        pos += p * mult;
        neg += q * mult;
    }
    (pos as i64 - neg as i64) / 2
}

/// A random Gaussian-rational Hermitian matrix: small Gaussian integers
/// divided entrywise (symmetrically) by small denominators.
pub fn random_gaussian_hermitian(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Mat<GaussianRational> {
    let mut m = verify::random_hermitian(rng, n);
    if rng.random_bool(0.5) {
        for i in 0..n {
            for j in i..n {
                let d = Rational::from(rng.random_range(1..=4i64));
                let re = &m[i][j].re / &d;
                let im = &m[i][j].im / &d;
                m[i][j] = GaussianRational::new(re.clone(), im.clone());
                m[j][i] = GaussianRational::new(re, -im);
            }
        }
    }
    m
}

pub fn signature_vs_sturm(cases: usize, max_dim: usize, seed: u64, exec: Execution) -> CheckResult {
    let mut rng = verify::rng(seed);
    let mats: Vec<Mat<GaussianRational>> = (0..cases)
        .map(|_| {
            let n = rng.random_range(1..=max_dim);
            random_gaussian_hermitian(&mut rng, n)
        })
        .collect();
    let results = exec.map(&mats, |m| {
        let exact = rho_core::hermitian::signature(m).expect("generated matrices are Hermitian");
        let oracle = sturm_signature(m);
        (exact == oracle).then_some(()).ok_or(format!("dim {}: engine {exact}, oracle {oracle}", m.len()))
    });
    let failures: Vec<String> = results.into_iter().filter_map(|r| r.err()).collect();
    CheckResult {
        name: "Hermitian signature vs Sturm oracle".into(),
        passed: failures.is_empty(),
        cases,
        detail: match failures.first() {
            None => "all cases agree".into(),
            Some(f) => format!("{} failure(s); first: {f}", failures.len()),
        },
    }
}

/// `4·(weighted lattice count − area)` of the triangle `(0,0), (k,0), (k, kq/p)`,
/// classifying each lattice point by exact rational geometry.
pub fn lattice_rho(p: i64, q: i64, chi: &RationalAngle) -> Rational {
    assert!(p > 0 && q > 0);
    let m = (chi.theta() * Rational::from(p)).to_i64().unwrap();
    let qinv = (1..p.max(2)).find(|x| (x * q) % p == 1 % p).unwrap_or(0);
    let k = (m * qinv).rem_euclid(p);
    if k == 0 {
        return Rational::zero();
    }
    let apex = Rational::frac(k * q, p);
    let kk = Rational::from(k);
    let mut count = Rational::zero();
    let quarter = Rational::frac(1, 4);
    let half = Rational::frac(1, 2);
    let vertices = [(Rational::zero(), Rational::zero()), (kk.clone(), Rational::zero()), (kk.clone(), apex.clone())];
    for x in 0..=k {
        for y in 0..=apex.floor().try_into().unwrap_or(0i64) + 1 {
            let (px, py) = (Rational::from(x), Rational::from(y));
            // hypotenuse through the origin and the apex: y·k − x·(kq/p)
            let side = &py * &kk - &px * &apex;
            if side.signum() > 0 || py.signum() < 0 || px > kk {
                continue;
            }
            let is_vertex = vertices.iter().any(|(vx, vy)| *vx == px && *vy == py);
            if is_vertex {
                if !(px.is_zero() && py.is_zero()) {
                    count += &quarter;
                }
            } else if side.is_zero() || py.is_zero() || px == kk {
                count += &half;
            } else {
                count += &Rational::one();
            }
        }
    }
    let area = &kk * &apex * Rational::frac(1, 2);
    Rational::from(4) * (count - area)
}

/// Torus-knot signature by direct count over `i/r + j/s`.
pub fn torus_signature(r: i64, s: i64, theta: &RationalAngle) -> i64 {
    let t = theta.theta().clone();
    let t1 = &t + Rational::one();
    let mut sigma = 0;
    for i in 1..r {
        for j in 1..s {
            let x = Rational::frac(i * s + j * r, r * s);
            if x > t && x < t1 {
                sigma -= 1;
            } else if x < t || x > t1 {
                sigma += 1;
            }
        }
    }
    sigma
}
