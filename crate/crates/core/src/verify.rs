//! Seeded random generators and exhaustive sweeps that check the identities
//! tying the evaluators together. Each check returns a [`CheckResult`]; the
//! `crosscheck` command and the acceptance tests run them.
//!
//! Random cases are drawn sequentially from a ChaCha stream, then evaluated
//! through [`Execution`], so results do not depend on the thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exactnum::gcd;
use crate::field::{ConjField, Mat};
use crate::hermitian::{maslov_triple, rational_signature, GaussianRational, Lagrangian, SymplecticSpace};
use crate::lens::{integer_framing_closed_form, rho_lens, rho_lens_floor, rho_lens_integer_framing, rho_lens_lattice};
use crate::link::{
    boundary_model, colored_seifert_framing, framed_linking_matrix, is_compatible, split_class, ColoredLink,
    ColoredRep, Framing, SplitClass,
};
use crate::par::Execution;
use crate::signatures::{
    levine_tristram, multivariable_signature, torus_knot_seifert, validate_torus_seifert, CComplexData,
    SeifertMatrix, SignatureSource,
};
use crate::surgery::{
    rhs_cf, rhs_integer_surgery, rhs_knot_rational, rhs_rational_surgery, rhs_seifert_surgery,
    torus_knot_crosscheck_with, CfSumMode,
};
use crate::{Rational, RationalAngle, Result};

type G = GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, failures: &[String], cases: usize, note: Option<String>) -> Self {
        let mut detail = if failures.is_empty() {
            "all cases agree".to_string()
        } else {
            format!("{} failure(s); first: {}", failures.len(), failures[0])
        };
        if let Some(n) = note {
            detail = format!("{detail}; {n}");
        }
        CheckResult { name: name.to_string(), passed: failures.is_empty(), cases, detail }
    }
}

#[derive(Clone, Debug)]
pub struct CrosscheckConfig {
    pub max_p: i64,
    pub max_n: i64,
    pub maslov_cases: usize,
    pub boundary_cases: usize,
    pub surgery_cases: usize,
    pub cf_max_q: i64,
    pub reduction_cases: usize,
    pub seed: u64,
    pub exec: Execution,
}

impl Default for CrosscheckConfig {
    fn default() -> Self {
        CrosscheckConfig {
            max_p: 50,
            max_n: 100,
            maslov_cases: 1000,
            boundary_cases: 500,
            surgery_cases: 400,
            cf_max_q: 8,
            reduction_cases: 120,
            seed: 20_240_917,
            exec: Execution::default(),
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn collect_failures(results: Vec<Result<Vec<String>>>) -> Vec<String> {
    results
        .into_iter()
        .flat_map(|r| r.unwrap_or_else(|e| vec![format!("error: {e}")]))
        .collect()
}

/// Sawtooth, floor and lattice evaluators agree on every `L(p, q)` with
/// `0 < |p| ≤ max_p`, `|q| < |p|` coprime, and every character.
pub fn lens_agreement(max_p: i64, exec: Execution) -> CheckResult {
    let ps: Vec<i64> = (-max_p..=max_p).filter(|&p| p != 0).collect();
    let per_p = exec.map(&ps, |&p| -> Result<(usize, Vec<String>)> {
        let mut cases = 0;
        let mut bad = Vec::new();
        let n = p.abs();
        for q in -(n - 1)..n {
            if gcd(p, q) != 1 {
                continue;
            }
            for m in 0..n {
                let chi = RationalAngle::frac(m, n);
                let a = rho_lens(p, q, &chi)?;
                let b = rho_lens_floor(p, q, &chi)?;
                let c = rho_lens_lattice(p, q, &chi)?;
                cases += 1;
                if a != b || a != c {
                    bad.push(format!("L({p},{q}) at {chi}: {a} / {b} / {c}"));
                }
            }
        }
        Ok((cases, bad))
    });
    let mut cases = 0;
    let mut failures = Vec::new();
    for r in per_p {
        match r {
            Ok((c, b)) => {
                cases += c;
                failures.extend(b);
            }
            Err(e) => failures.push(format!("error: {e}")),
        }
    }
    CheckResult::new("lens three-way agreement", &failures, cases, None)
}

/// `ρ(L(n, 1), ω) = 2nθ(1−θ) − sgn(n)` for `0 < |n| ≤ max_n`.
///
/// Nontrivial characters are compared with the closed form itself. At the
/// trivial character `ρ` vanishes, which is what both evaluators return; the
/// literal closed form gives `−sgn(n)` there, and those cases are counted in
/// the detail line.
pub fn integer_lens_specialization(max_n: i64, exec: Execution) -> CheckResult {
    let ns: Vec<i64> = (-max_n..=max_n).filter(|&n| n != 0).collect();
    let per_n = exec.map(&ns, |&n| -> Result<(usize, usize, Vec<String>)> {
        let mut bad = Vec::new();
        let mut trivial_gap = 0;
        for m in 0..n.abs() {
            let theta = RationalAngle::frac(m, n.abs());
            let lens = rho_lens(n, 1, &theta)?;
            let corollary = rho_lens_integer_framing(n, &theta)?;
            let closed = integer_framing_closed_form(n, &theta);
            if lens != corollary {
                bad.push(format!("n={n}, θ={theta}: {lens} vs {corollary}"));
            }
            if theta.nontrivial() {
                if lens != closed {
                    bad.push(format!("n={n}, θ={theta}: {lens} vs closed form {closed}"));
                }
            } else if lens != closed {
                trivial_gap += 1;
            }
        }
        Ok((n.unsigned_abs() as usize, trivial_gap, bad))
    });
    let mut cases = 0;
    let mut gap = 0;
    let mut failures = Vec::new();
    for r in per_n {
        match r {
            Ok((c, g, b)) => {
                cases += c;
                gap += g;
                failures.extend(b);
            }
            Err(e) => failures.push(format!("error: {e}")),
        }
    }
    let note = format!("trivial character: ρ = 0 while 2nθ(1−θ) − sgn(n) = −sgn(n) ({gap} cases)");
    CheckResult::new("integer-framing lens specialization", &failures, cases, Some(note))
}

fn small_gaussian(rng: &mut ChaCha8Rng, bound: i64, real_only: bool) -> G {
    let re = rng.random_range(-bound..=bound);
    let im = if real_only { 0 } else { rng.random_range(-bound..=bound) };
    G::new(Rational::from(re), Rational::from(im))
}

/// A random Lagrangian of the standard `2m`-dimensional space: the graph of a
/// Hermitian matrix, rotated on a random set of coordinate planes, in a
/// random basis.
pub fn random_lagrangian(rng: &mut ChaCha8Rng, m: usize, real_only: bool) -> Vec<Vec<G>> {
    let sparse = rng.random_bool(0.4);
    let mut s = vec![vec![G::zero(); m]; m];
    for i in 0..m {
        for j in i..m {
            if sparse && rng.random_bool(0.6) {
                continue;
            }
            if i == j {
                s[i][i] = small_gaussian(rng, 2, true);
            } else {
                let x = small_gaussian(rng, 2, real_only);
                s[j][i] = x.conj();
                s[i][j] = x;
            }
        }
    }
    let swap: Vec<bool> = (0..m).map(|_| rng.random_bool(0.35)).collect();
    let mut basis: Vec<Vec<G>> = (0..m)
        .map(|i| {
            let mut v = vec![G::zero(); 2 * m];
            v[i] = G::one();
            for r in 0..m {
                v[m + r] = s[r][i].clone();
            }
            // (x, y) ↦ (−y, x) on the chosen planes is symplectic
            for (r, &sw) in swap.iter().enumerate() {
                if sw {
                    let x = v[r].clone();
                    v[r] = v[m + r].neg();
                    v[m + r] = x;
                }
            }
            v
        })
        .collect();
    for _ in 0..m {
        let i = rng.random_range(0..m);
        let j = rng.random_range(0..m);
        if i != j {
            let c = small_gaussian(rng, 2, real_only);
            let add: Vec<G> = basis[j].iter().map(|x| c.mul(x)).collect();
            for (a, b) in basis[i].iter_mut().zip(add) {
                *a = a.add(&b);
            }
        }
    }
    basis
}

/// Random Lagrangians of a space, sometimes repeating one in a fresh basis.
fn random_family(rng: &mut ChaCha8Rng, m: usize, count: usize, real_only: bool) -> Vec<Vec<Vec<G>>> {
    let mut out: Vec<Vec<Vec<G>>> = Vec::with_capacity(count);
    for _ in 0..count {
        if !out.is_empty() && rng.random_bool(0.15) {
            let src = out[rng.random_range(0..out.len())].clone();
            let scale = G::from_int(rng.random_range(1..=3));
            out.push(src.into_iter().rev().map(|v| v.iter().map(|x| scale.mul(x)).collect()).collect());
        } else {
            out.push(random_lagrangian(rng, m, real_only));
        }
    }
    out
}

/// Antisymmetry and the cocycle identity on random quadruples in dimensions
/// 2–8, plus `τ(μ, λ, aμ + bλ) = −sign(ab)` in the plane.
pub fn maslov_algebra(cases: usize, seed: u64, exec: Execution) -> CheckResult {
    let mut r = rng(seed);
    let families: Vec<(usize, Vec<Vec<Vec<G>>>)> = (0..cases)
        .map(|_| {
            let m = r.random_range(1..=4);
            let real_only = r.random_bool(0.3);
            (m, random_family(&mut r, m, 4, real_only))
        })
        .collect();
    let results = exec.map(&families, |(m, fam)| -> Result<Vec<String>> {
        let space = SymplecticSpace::standard(*m);
        let ls = fam
            .iter()
            .map(|b| Lagrangian::new(&space, b.clone()))
            .collect::<Result<Vec<_>>>()?;
        let tau = |a: usize, b: usize, c: usize| maslov_triple(&space, &ls[a], &ls[b], &ls[c]);
        let base = tau(0, 1, 2)?;
        let mut bad = Vec::new();
        for (perm, sign) in [([0, 2, 1], -1), ([1, 0, 2], -1), ([2, 1, 0], -1), ([1, 2, 0], 1), ([2, 0, 1], 1)] {
            let t = tau(perm[0], perm[1], perm[2])?;
            if t != sign * base {
                bad.push(format!("dim {}: τ{perm:?} = {t}, τ(0,1,2) = {base}", 2 * m));
            }
        }
        let cocycle = tau(1, 2, 3)? - tau(0, 2, 3)? + tau(0, 1, 3)? - base;
        if cocycle != 0 {
            bad.push(format!("dim {}: cocycle sum {cocycle}", 2 * m));
        }
        Ok(bad)
    });
    let mut failures = collect_failures(results);
    let plane = SymplecticSpace::standard(1);
    let line = |a: i64, b: i64| Lagrangian::new(&plane, vec![vec![G::from_int(a), G::from_int(b)]]);
    let mut plane_cases = 0;
    for a in (-3..=3).filter(|&a| a != 0) {
        for b in (-3..=3).filter(|&b| b != 0) {
            plane_cases += 1;
            let t = line(1, 0)
                .and_then(|mu| Ok((mu, line(0, 1)?, line(a, b)?)))
                .and_then(|(mu, la, l)| maslov_triple(&plane, &mu, &la, &l));
            match t {
                Ok(t) if t == -(a * b).signum() => {}
                other => failures.push(format!("τ(μ, λ, {a}μ+{b}λ) = {other:?}")),
            }
        }
    }
    CheckResult::new("Maslov algebra", &failures, cases + plane_cases, None)
}

/// A random linking matrix with `|lk| ≤ bound` and a random surjective coloring.
pub fn random_link(rng: &mut ChaCha8Rng, k: usize, colors: usize, bound: i64) -> ColoredLink {
    let mut coloring: Vec<usize> = (0..k).map(|i| if i < colors { i } else { rng.random_range(0..colors) }).collect();
    shuffle(rng, &mut coloring);
    let mut lk = vec![vec![0i64; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let v = rng.random_range(-bound..=bound);
            lk[i][j] = v;
            lk[j][i] = v;
        }
    }
    ColoredLink::new(coloring, lk).expect("generated links are valid")
}

fn shuffle<T>(rng: &mut ChaCha8Rng, v: &mut [T]) {
    for i in (1..v.len()).rev() {
        let j = rng.random_range(0..=i);
        v.swap(i, j);
    }
}

/// A random component-to-color split link: every block of linking numbers
/// between two colors has zero row and column sums.
pub fn random_split_link(rng: &mut ChaCha8Rng, k: usize, colors: usize, bound: i64) -> ColoredLink {
    loop {
        let base = random_link(rng, k, colors, bound);
        let mut lk = base.linking().to_vec();
        let members = |s: usize| -> Vec<usize> { (0..k).filter(|&i| base.color(i) == s).collect() };
        let mut ok = true;
        for s in 0..colors {
            for t in s + 1..colors {
                let (rows, cols) = (members(s), members(t));
                let (nr, nc) = (rows.len(), cols.len());
                let mut block = vec![vec![0i64; nc]; nr];
                for row in block.iter_mut().take(nr - 1) {
                    for x in row.iter_mut().take(nc - 1) {
                        *x = rng.random_range(-bound..=bound);
                    }
                }
                for i in 0..nr - 1 {
                    block[i][nc - 1] = -block[i][..nc - 1].iter().sum::<i64>();
                }
                for j in 0..nc {
                    block[nr - 1][j] = -(0..nr - 1).map(|i| block[i][j]).sum::<i64>();
                }
                ok &= block.iter().flatten().all(|x| x.abs() <= bound);
                for (a, &i) in rows.iter().enumerate() {
                    for (b, &j) in cols.iter().enumerate() {
                        lk[i][j] = block[a][b];
                        lk[j][i] = block[a][b];
                    }
                }
            }
        }
        if ok {
            return ColoredLink::new(base.coloring().to_vec(), lk).expect("generated links are valid");
        }
    }
}

/// A nontrivial angle with denominator at most `max_den`.
pub fn random_angle(rng: &mut ChaCha8Rng, max_den: i64) -> RationalAngle {
    let d = rng.random_range(2..=max_den);
    RationalAngle::frac(rng.random_range(1..d), d)
}

/// An integer framing compatible with `omega`, with `|g_i| ≤ bound`:
/// on a component-to-color split link compatibility is `g_i ≡ f_i` modulo
/// the order of `ω_{c(i)}`.
pub fn random_compatible_framing(
    rng: &mut ChaCha8Rng,
    link: &ColoredLink,
    omega: &ColoredRep,
    bound: i64,
) -> Option<Framing> {
    use num_traits::ToPrimitive;
    let f = colored_seifert_framing(link);
    let mut g = Vec::with_capacity(link.components());
    for i in 0..link.components() {
        let ord = omega.meridian_angle(link, i).order().to_i64()?;
        let fi = f.coefficients()[i].to_i64()?;
        let options: Vec<i64> = (-bound..=bound).filter(|x| (x - fi).rem_euclid(ord) == 0).collect();
        if options.is_empty() {
            return None;
        }
        g.push(options[rng.random_range(0..options.len())]);
    }
    Some(Framing::integers(&g))
}

/// `τ(M, L_r, V) = sign Λ_r` on random links with `k ≤ 6`, `|lk| ≤ 5` and rational framings.
pub fn boundary_maslov_sign(cases: usize, seed: u64, exec: Execution) -> CheckResult {
    let mut r = rng(seed);
    let data: Vec<(ColoredLink, Framing)> = (0..cases)
        .map(|_| {
            let k = r.random_range(1..=6);
            let colors = r.random_range(1..=k);
            let link = random_link(&mut r, k, colors, 5);
            let framing = Framing::new(
                (0..k)
                    .map(|_| Rational::frac(r.random_range(-12..=12), r.random_range(1..=6)))
                    .collect(),
            );
            (link, framing)
        })
        .collect();
    let results = exec.map(&data, |(link, framing)| -> Result<Vec<String>> {
        let model = boundary_model(link, framing)?;
        let tau = maslov_triple(&model.space, &model.meridians, &model.longitudes, &model.exterior)?;
        let sign = rational_signature(&framed_linking_matrix(link, framing)?)?;
        Ok(if tau == sign {
            Vec::new()
        } else {
            vec![format!("{:?} with framing {framing}: τ = {tau}, sign Λ = {sign}", link.linking())]
        })
    });
    CheckResult::new("boundary Maslov index equals sign of framed linking matrix", &collect_failures(results), cases, None)
}

struct SurgeryCase {
    link: ColoredLink,
    omega: ColoredRep,
    g: Framing,
    sigma: SignatureSource,
}

fn torus_sources() -> Vec<SeifertMatrix> {
    let mut v = vec![SeifertMatrix::empty()];
    for (r, s) in [(2, 3), (2, 5), (3, 4), (2, 7), (3, 5)] {
        v.push(torus_knot_seifert(r, s).expect("valid torus knot"));
    }
    v
}

/// Integer and rational surgery agree on split links with compatible integer
/// framings; with the colored Seifert framing both match the Seifert-framing
/// formula; rational surgery on knots matches the knot formula.
pub fn surgery_coherence(cases: usize, seed: u64, exec: Execution) -> CheckResult {
    let mut r = rng(seed);
    let mut data = Vec::with_capacity(cases);
    while data.len() < cases {
        let k = r.random_range(1..=4);
        let colors = r.random_range(1..=k.min(3));
        let link = random_split_link(&mut r, k, colors, 3);
        let omega = ColoredRep::new((0..colors).map(|_| random_angle(&mut r, 12)).collect());
        let Some(g) = random_compatible_framing(&mut r, &link, &omega, 6) else {
            continue;
        };
        let sigma = SignatureSource::table([(omega.clone(), r.random_range(-4..=4))]);
        data.push(SurgeryCase { link, omega, g, sigma });
    }
    let results = exec.map(&data, |c| -> Result<Vec<String>> {
        let mut bad = Vec::new();
        if split_class(&c.link) != SplitClass::ComponentToColor || !is_compatible(&c.link, &c.g, &c.omega)? {
            bad.push(format!("generator produced an invalid case {:?}", c.link.linking()));
            return Ok(bad);
        }
        let int = rhs_integer_surgery(&c.link, &c.omega, &c.g, &c.sigma)?.value;
        let rat = rhs_rational_surgery(&c.link, &c.omega, &c.g, &c.sigma)?.value;
        if int.is_none() || int != rat {
            bad.push(format!("{:?} g={} ω={}: integer {int:?} vs rational {rat:?}", c.link.linking(), c.g, c.omega));
        }
        let f = colored_seifert_framing(&c.link);
        let rat_f = rhs_rational_surgery(&c.link, &c.omega, &f, &c.sigma)?.value;
        let int_f = rhs_integer_surgery(&c.link, &c.omega, &f, &c.sigma)?.value;
        let seif = rhs_seifert_surgery(&c.link, &c.omega, &c.sigma)?.value;
        if seif.is_none() || rat_f != seif || int_f != seif {
            bad.push(format!("{:?} ω={}: at f_L {rat_f:?} / {int_f:?} vs {seif:?}", c.link.linking(), c.omega));
        }
        Ok(bad)
    });
    let mut failures = collect_failures(results);

    // knots: p/q surgery both ways
    let sources = torus_sources();
    let mut knot_data = Vec::new();
    while knot_data.len() < cases / 2 {
        let p: i64 = r.random_range(2..=15) * if r.random_bool(0.5) { 1 } else { -1 };
        let q: i64 = r.random_range(1..=9) * if r.random_bool(0.5) { 1 } else { -1 };
        if gcd(p, q) != 1 {
            continue;
        }
        let theta = RationalAngle::frac(r.random_range(1..p.abs()), p.abs());
        knot_data.push((r.random_range(0..sources.len()), p, q, theta));
    }
    let knot = ColoredLink::knot();
    let knot_results = exec.map(&knot_data, |(idx, p, q, theta)| -> Result<Vec<String>> {
        let a = &sources[*idx];
        let direct = rhs_knot_rational(a, theta, *p, *q)?.value;
        let framing = Framing::new(vec![Rational::frac(*p, *q)]);
        let omega = ColoredRep::single(theta.clone());
        let via_link = rhs_rational_surgery(&knot, &omega, &framing, &SignatureSource::Seifert(a.clone()))?.value;
        Ok(if direct.is_some() && direct == via_link {
            Vec::new()
        } else {
            vec![format!("knot #{idx} p/q={p}/{q} θ={theta}: {direct:?} vs {via_link:?}")]
        })
    });
    failures.extend(collect_failures(knot_results));
    CheckResult::new("surgery formula coherence", &failures, data.len() + knot_data.len(), None)
}

struct CfCase {
    k: usize,
    q: i64,
    nvec: Vec<i64>,
    g: Vec<i64>,
    sigma: i64,
}

/// On max-colored links without off-diagonal linking, the `n_i/q` formula
/// agrees with integer surgery for every admissible `(q, n, g)`.
pub fn cf_overlap(max_q: i64, max_k: usize, seed: u64, exec: Execution) -> CheckResult {
    let mut r = rng(seed);
    let mut data = Vec::new();
    for k in 1..=max_k {
        for q in 2..=max_q {
            let units: Vec<i64> = (1..q).filter(|&n| gcd(n, q) == 1).collect();
            let gs: Vec<i64> = (-6..=6).filter(|g| g % q == 0).collect();
            for nvec in product(&units, k) {
                for g in product(&gs, k) {
                    data.push(CfCase { k, q, nvec: nvec.clone(), g, sigma: r.random_range(-4..=4) });
                }
            }
        }
    }
    let results = exec.map(&data, |CfCase { k, q, nvec, g, sigma }| -> Result<Vec<String>> {
        let link = ColoredLink::max_colored(vec![vec![0; *k]; *k])?;
        let omega = ColoredRep::new(nvec.iter().map(|&n| RationalAngle::frac(n, *q)).collect());
        let sigma = SignatureSource::table([(omega.clone(), *sigma)]);
        let framing = Framing::integers(g);
        let cf = rhs_cf(&link, *q, nvec, &framing, &sigma, CfSumMode::Full)?.value;
        let int = rhs_integer_surgery(&link, &omega, &framing, &sigma)?.value;
        Ok(if cf.is_some() && cf == int {
            Vec::new()
        } else {
            vec![format!("q={q} n={nvec:?} g={g:?}: {cf:?} vs {int:?}")]
        })
    });
    CheckResult::new("max-colored formula overlap", &collect_failures(results), data.len(), None)
}

fn product(values: &[i64], k: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |&v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

/// Torus-knot surgery against the lens space it yields, for coprime
/// `2 ≤ r < s ≤ max_s`: equal up to one global sign. The Seifert matrices are
/// validated against the Alexander polynomial first.
pub fn torus_identity(max_s: i64, exec: Execution) -> (CheckResult, Option<i32>) {
    let mut failures = Vec::new();
    let mut jobs = Vec::new();
    for r in 2..max_s {
        for s in r + 1..=max_s {
            if gcd(r, s) != 1 {
                continue;
            }
            match torus_knot_seifert(r, s) {
                Ok(a) if validate_torus_seifert(&a, r, s) => {
                    for k in 1..r * s - 1 {
                        jobs.push((a.clone(), r, s, k));
                    }
                }
                Ok(_) => failures.push(format!("T({r},{s}) Seifert matrix fails validation")),
                Err(e) => failures.push(format!("T({r},{s}): {e}")),
            }
        }
    }
    let reports = exec.map(&jobs, |(a, r, s, k)| torus_knot_crosscheck_with(a, *r, *s, *k));
    let mut epsilons = std::collections::BTreeSet::new();
    for rep in reports {
        match rep {
            Ok(c) => {
                if !c.abs_equal {
                    failures.push(format!("T({},{}) k={}: |{}| ≠ |{}|", c.r, c.s, c.k, c.lens, c.surgery));
                }
                if let Some(e) = c.epsilon {
                    epsilons.insert(e);
                }
            }
            Err(e) => failures.push(format!("error: {e}")),
        }
    }
    if epsilons.len() > 1 {
        failures.push("both signs occur".into());
    }
    let eps = (epsilons.len() == 1).then(|| *epsilons.iter().next().unwrap());
    let note = match eps {
        Some(e) => format!("global sign ε = {e}"),
        None => "no global sign".to_string(),
    };
    (CheckResult::new("torus knot surgery identity", &failures, jobs.len(), Some(note)), eps)
}

/// A random integer matrix of the given size.
pub fn random_seifert(rng: &mut ChaCha8Rng, size: usize, bound: i64) -> SeifertMatrix {
    SeifertMatrix::new((0..size).map(|_| (0..size).map(|_| rng.random_range(-bound..=bound)).collect()).collect())
        .expect("square")
}

/// The 1-colored C-complex signature equals the Levine–Tristram signature.
pub fn multivariable_reduction(cases: usize, seed: u64, exec: Execution) -> CheckResult {
    let mut r = rng(seed);
    let data: Vec<(SeifertMatrix, RationalAngle)> = (0..cases)
        .map(|_| {
            let size = r.random_range(1..=5);
            (random_seifert(&mut r, size, 3), random_angle(&mut r, 12))
        })
        .collect();
    let results = exec.map(&data, |(a, w)| -> Result<Vec<String>> {
        let lt = levine_tristram(a, w)?;
        let mv = multivariable_signature(&CComplexData::from_seifert(a), &ColoredRep::single(w.clone()))?;
        Ok(if lt == mv { Vec::new() } else { vec![format!("{:?} at {w}: {lt} vs {mv}", a.entries())] })
    });
    CheckResult::new("multivariable signature reduces to Levine–Tristram", &collect_failures(results), cases, None)
}

/// Trefoil values: `σ(−1) = −2` and 5-surgery at `θ = 1/5` gives `7/5`.
pub fn trefoil_anchors() -> CheckResult {
    let mut failures = Vec::new();
    let trefoil = SeifertMatrix::trefoil();
    match levine_tristram(&trefoil, &RationalAngle::frac(1, 2)) {
        Ok(-2) => {}
        other => failures.push(format!("σ(−1) = {other:?}")),
    }
    let rep = rhs_integer_surgery(
        &ColoredLink::knot(),
        &ColoredRep::single(RationalAngle::frac(1, 5)),
        &Framing::integers(&[5]),
        &SignatureSource::Seifert(trefoil),
    );
    match rep.map(|r| r.value) {
        Ok(Some(v)) if v == Rational::frac(7, 5) => {}
        other => failures.push(format!("5-surgery at 1/5 = {other:?}")),
    }
    CheckResult::new("trefoil anchors", &failures, 2, None)
}

/// A random Hermitian matrix with small Gaussian-integer entries. About half
/// are built as `Σ d_t v_t v_tᴴ` with fewer terms than the size, so singular
/// matrices are common.
pub fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> Mat<G> {
    let mut m = vec![vec![G::zero(); n]; n];
    if n > 1 && rng.random_bool(0.5) {
        let terms = rng.random_range(0..n);
        for _ in 0..terms {
            let v: Vec<G> = (0..n).map(|_| small_gaussian(rng, 2, false)).collect();
            let d = G::from_int(rng.random_range(-2..=2));
            for i in 0..n {
                for j in 0..n {
                    m[i][j] = m[i][j].add(&d.mul(&v[i]).mul(&v[j].conj()));
                }
            }
        }
        return m;
    }
    for i in 0..n {
        m[i][i] = small_gaussian(rng, 3, true);
        for j in i + 1..n {
            let x = small_gaussian(rng, 3, false);
            m[j][i] = x.conj();
            m[i][j] = x;
        }
    }
    m
}

/// Runs every check (the full Hermitian-signature comparison needs an
/// external oracle and lives in the acceptance tests).
pub fn run_all(cfg: &CrosscheckConfig) -> Vec<CheckResult> {
    let s = cfg.seed;
    vec![
        lens_agreement(cfg.max_p, cfg.exec),
        integer_lens_specialization(cfg.max_n, cfg.exec),
        maslov_algebra(cfg.maslov_cases, s, cfg.exec),
        boundary_maslov_sign(cfg.boundary_cases, s.wrapping_add(1), cfg.exec),
        surgery_coherence(cfg.surgery_cases, s.wrapping_add(2), cfg.exec),
        cf_overlap(cfg.cf_max_q, 3, s.wrapping_add(3), cfg.exec),
        torus_identity(5, cfg.exec).0,
        multivariable_reduction(cfg.reduction_cases, s.wrapping_add(4), cfg.exec),
        trefoil_anchors(),
    ]
}
