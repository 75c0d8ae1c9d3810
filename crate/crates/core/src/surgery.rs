//! Rho invariants of Dehn surgeries on colored links, from the right-hand
//! sides of the surgery formulas, and a consistency engine comparing them.
//!
//! Every evaluator returns a [`SurgeryReport`]: failed hypotheses are listed
//! and the value is withheld instead of returning a meaningless number.
//! Under the Casson–Gordon sign convention, `σ(N, α) = −ρ_α(N)`.

use serde::Serialize;

use crate::exactnum::gcd;
use crate::hermitian::rational_signature;
use crate::lens::{rho_lens, rho_lens_integer_framing};
use crate::link::{
    colored_seifert_framing, framed_linking_matrix, h_values, is_compatible, kills, rational_pair,
    split_class, yl_descriptor, ColoredLink, ColoredRep, Framing, SplitClass, YlDescriptor,
};
use crate::signatures::{levine_tristram, sigma_of, SeifertMatrix, SignatureSource};
use crate::{Error, Rational, RationalAngle, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// Max-colored links, integer framing, characters `n_i/q`.
    CimasoniFlorens,
    /// Color-to-color split links, integer framing.
    IntegerSurgery,
    /// Component-to-color split links, colored Seifert framing.
    SeifertSurgery,
    /// Component-to-color split links, rational framing.
    RationalSurgery,
    /// Rational surgery on a knot.
    KnotRationalSurgery,
    /// Integer surgery on a knot.
    CassonGordon,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::CimasoniFlorens => "cimasoni_florens",
            Theorem::IntegerSurgery => "integer_surgery",
            Theorem::SeifertSurgery => "seifert_surgery",
            Theorem::RationalSurgery => "rational_surgery",
            Theorem::KnotRationalSurgery => "knot_rational_surgery",
            Theorem::CassonGordon => "casson_gordon",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LensTerm {
    /// 0-based component index.
    pub component: usize,
    pub p: i64,
    pub q: i64,
    pub character: RationalAngle,
    pub rho: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurgeryReport {
    pub value: Option<Rational>,
    pub theorem_used: Theorem,
    pub hypotheses: Vec<Hypothesis>,
    pub lens_terms: Vec<LensTerm>,
}

impl SurgeryReport {
    fn new(theorem: Theorem) -> Self {
        SurgeryReport { value: None, theorem_used: theorem, hypotheses: Vec::new(), lens_terms: Vec::new() }
    }

    fn require(&mut self, name: &str, satisfied: bool) {
        self.hypotheses.push(Hypothesis { name: name.to_string(), satisfied });
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|h| h.satisfied)
    }

    pub fn failed_hypotheses(&self) -> Vec<&str> {
        self.hypotheses.iter().filter(|h| !h.satisfied).map(|h| h.name.as_str()).collect()
    }
}

fn theta_term(theta: &Rational) -> Rational {
    theta * (Rational::one() - theta)
}

fn check_rep(link: &ColoredLink, omega: &ColoredRep) -> Result<()> {
    if omega.len() != link.colors() {
        return Err(Error::DimensionMismatch { expected: link.colors(), found: omega.len() });
    }
    Ok(())
}

/// `−σ_L(ω) + sign Λ_g − 2 Σ_s h_s θ_s(1−θ_s)`.
pub fn rhs_integer_surgery(
    link: &ColoredLink,
    omega: &ColoredRep,
    g: &Framing,
    sigma: &SignatureSource,
) -> Result<SurgeryReport> {
    check_rep(link, omega)?;
    let mut report = SurgeryReport::new(Theorem::IntegerSurgery);
    report.require("color_to_color_split", split_class(link) >= SplitClass::ColorToColor);
    report.require("integer_framing", g.is_integral());
    report.require("compatible", is_compatible(link, g, omega)?);
    report.require("nontrivial_characters", omega.all_nontrivial());
    if !report.hypotheses_hold() {
        return Ok(report);
    }
    let lambda = framed_linking_matrix(link, g)?;
    let h = h_values(link, g)?;
    let correction: Rational = h
        .iter()
        .zip(omega.angles())
        .map(|(hs, w)| hs * theta_term(w.theta()))
        .sum();
    let s = sigma_of(sigma, link, omega)?;
    report.value = Some(
        Rational::from(-s) + Rational::from(rational_signature(&lambda)?)
            - Rational::from(2) * correction,
    );
    Ok(report)
}

/// `−σ_L(ω) + sign Λ_{f_L}` for the colored Seifert framing `f_L`.
pub fn rhs_seifert_surgery(
    link: &ColoredLink,
    omega: &ColoredRep,
    sigma: &SignatureSource,
) -> Result<SurgeryReport> {
    check_rep(link, omega)?;
    let mut report = SurgeryReport::new(Theorem::SeifertSurgery);
    report.require("component_to_color_split", split_class(link) == SplitClass::ComponentToColor);
    report.require("nontrivial_characters", omega.all_nontrivial());
    if !report.hypotheses_hold() {
        return Ok(report);
    }
    let lambda = framed_linking_matrix(link, &colored_seifert_framing(link))?;
    let s = sigma_of(sigma, link, omega)?;
    report.value = Some(Rational::from(rational_signature(&lambda)? - s));
    Ok(report)
}

/// `−σ_L(ω) + sign Λ_r − Σ_i (ρ(L(p_i, q_i), ω_{c(i)}) + sgn(p_i/q_i))`
/// with `p_i/q_i = r_i − f_i`; a component with `r_i = f_i` contributes 0.
pub fn rhs_rational_surgery(
    link: &ColoredLink,
    omega: &ColoredRep,
    r: &Framing,
    sigma: &SignatureSource,
) -> Result<SurgeryReport> {
    check_rep(link, omega)?;
    let mut report = SurgeryReport::new(Theorem::RationalSurgery);
    report.require("component_to_color_split", split_class(link) == SplitClass::ComponentToColor);
    report.require("compatible", is_compatible(link, r, omega)?);
    report.require("nontrivial_characters", omega.all_nontrivial());
    if !report.hypotheses_hold() {
        return Ok(report);
    }
    let f = colored_seifert_framing(link);
    let mut lens_total = Rational::zero();
    for i in 0..link.components() {
        let diff = &r.coefficients()[i] - &f.coefficients()[i];
        let (p, q) = if diff.is_zero() { (0, 1) } else { rational_pair(&diff) };
        let character = omega.meridian_angle(link, i).clone();
        let rho = rho_lens(p, q, &character).map_err(|e| match e {
            Error::CharacterOrder { theta, order } => Error::InvalidParameter(format!(
                "lens term of component {}: character {theta} is not a {order}-th root of unity",
                i + 1
            )),
            other => other,
        })?;
        lens_total += &(&rho + Rational::from(i64::from(diff.signum())));
        report.lens_terms.push(LensTerm { component: i, p, q, character, rho });
    }
    let lambda = framed_linking_matrix(link, r)?;
    let s = sigma_of(sigma, link, omega)?;
    report.value = Some(Rational::from(rational_signature(&lambda)? - s) - lens_total);
    Ok(report)
}

/// `−σ_K(ω) − ρ(L(p, q), ω)` for `p/q` surgery on a knot with Seifert matrix `a`.
pub fn rhs_knot_rational(a: &SeifertMatrix, omega: &RationalAngle, p: i64, q: i64) -> Result<SurgeryReport> {
    let mut report = SurgeryReport::new(Theorem::KnotRationalSurgery);
    report.require("coprime", gcd(p, q) == 1);
    report.require("character_order_divides_p", kills(omega, p));
    report.require("nontrivial_character", omega.nontrivial());
    if !report.hypotheses_hold() {
        return Ok(report);
    }
    let rho = rho_lens(p, q, omega)?;
    let s = levine_tristram(a, omega)?;
    report.value = Some(Rational::from(-s) - &rho);
    report.lens_terms.push(LensTerm { component: 0, p, q, character: omega.clone(), rho });
    Ok(report)
}

/// Which pairs `(i, j)` enter the last sum of [`rhs_cf`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CfSumMode {
    /// All ordered pairs, including `i = j`.
    #[default]
    Full,
    UpperTriangle,
    Diagonal,
}

/// `−σ_L(ω) + Σ_{i<j} Λ_ij + sign Λ_g − (2/q²) Σ (q−n_i) n_j Λ_ij`
/// for `ω = (n₁/q, …, n_k/q)` on a max-colored link.
pub fn rhs_cf(
    link: &ColoredLink,
    q: i64,
    nvec: &[i64],
    g: &Framing,
    sigma: &SignatureSource,
    mode: CfSumMode,
) -> Result<SurgeryReport> {
    let k = link.components();
    if nvec.len() != k {
        return Err(Error::DimensionMismatch { expected: k, found: nvec.len() });
    }
    let mut report = SurgeryReport::new(Theorem::CimasoniFlorens);
    report.require("max_colored", link.is_max_colored());
    report.require("q_positive", q > 0);
    report.require("n_coprime_to_q", q > 0 && nvec.iter().all(|&n| 0 < n && n < q && gcd(n, q) == 1));
    report.require("integer_framing", g.is_integral());
    if !report.hypotheses_hold() {
        return Ok(report);
    }
    let omega = ColoredRep::new(nvec.iter().map(|&n| RationalAngle::frac(n, q)).collect());
    report.require("compatible", is_compatible(link, g, &omega)?);
    if !report.hypotheses_hold() {
        return Ok(report);
    }
    let lambda = framed_linking_matrix(link, g)?;
    let mut linking_sum = Rational::zero();
    let mut weighted = Rational::zero();
    for i in 0..k {
        for j in 0..k {
            if i < j {
                linking_sum += &lambda[i][j];
            }
            let included = match mode {
                CfSumMode::Full => true,
                CfSumMode::UpperTriangle => i < j,
                CfSumMode::Diagonal => i == j,
            };
            if included {
                weighted += &(&lambda[i][j] * Rational::from((q - nvec[i]) * nvec[j]));
            }
        }
    }
    let s = sigma_of(sigma, link, &omega)?;
    report.value = Some(
        Rational::from(rational_signature(&lambda)? - s) + linking_sum
            - Rational::frac(2, q * q) * weighted,
    );
    Ok(report)
}

/// `−σ_K(ω) + sgn(n) − 2nθ(1−θ)` for `n`-surgery on a knot.
pub fn rhs_casson_gordon(sigma: &SignatureSource, n: i64, omega: &RationalAngle) -> Result<SurgeryReport> {
    let mut report = SurgeryReport::new(Theorem::CassonGordon);
    report.require("character_order_divides_n", kills(omega, n));
    report.require("nontrivial_character", omega.nontrivial());
    if !report.hypotheses_hold() {
        return Ok(report);
    }
    let knot = ColoredLink::knot();
    let s = sigma_of(sigma, &knot, &ColoredRep::single(omega.clone()))?;
    report.value = Some(
        Rational::from(n.signum() - s) - Rational::from(2 * n) * theta_term(omega.theta()),
    );
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YlReport {
    pub value: Rational,
    pub descriptor: YlDescriptor,
}

/// `ρ_α(Y_L) = −σ_L(ω)`, with the combinatorial description of `Y_L`.
pub fn rho_of_yl(link: &ColoredLink, omega: &ColoredRep, sigma: &SignatureSource) -> Result<YlReport> {
    check_rep(link, omega)?;
    if let Some(t) = omega.angles().iter().find(|a| !a.nontrivial()) {
        return Err(Error::TrivialCharacter(t.to_string()));
    }
    let s = sigma_of(sigma, link, omega)?;
    Ok(YlReport { value: Rational::from(-s), descriptor: yl_descriptor(link) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub r: i64,
    pub s: i64,
    pub k: i64,
    pub sigma: i64,
    /// `ρ(L(rs−1, s²), ζ^{k r s²})`.
    pub lens: Rational,
    /// `−σ_{T(r,s)}(ζ^k) + 1 − 2k(rs−1−k)/(rs−1)`.
    pub surgery: Rational,
    pub abs_equal: bool,
    /// `lens / surgery` when both are nonzero and equal up to sign.
    pub epsilon: Option<i32>,
}

/// Compares `(rs − 1)`-surgery on `T(r, s)` with the lens space it produces.
pub fn torus_knot_crosscheck(r: i64, s: i64, k: i64) -> Result<CrosscheckReport> {
    let a = crate::signatures::torus_knot_seifert(r, s)?;
    torus_knot_crosscheck_with(&a, r, s, k)
}

/// As [`torus_knot_crosscheck`], reusing a Seifert matrix of `T(r, s)`.
pub fn torus_knot_crosscheck_with(a: &SeifertMatrix, r: i64, s: i64, k: i64) -> Result<CrosscheckReport> {
    let n = r * s - 1;
    if k <= 0 || k >= n {
        return Err(Error::InvalidParameter(format!(
            "k must satisfy 0 < k < rs−1 = {n} (got {k})"
        )));
    }
    let zeta_k = RationalAngle::frac(k, n);
    let sigma = levine_tristram(a, &zeta_k)?;
    let lens = rho_lens(n, s * s, &RationalAngle::frac((k * r * s * s).rem_euclid(n), n))?;
    let surgery = Rational::from(1 - sigma) - Rational::frac(2 * k * (n - k), n);
    let abs_equal = lens.abs() == surgery.abs();
    let epsilon = (abs_equal && !surgery.is_zero()).then(|| lens.signum() * surgery.signum());
    Ok(CrosscheckReport { r, s, k, sigma, lens, surgery, abs_equal, epsilon })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FramingConsistency {
    pub framing: Framing,
    pub reports: Vec<SurgeryReport>,
    /// `agreement[a][b]`: whether applicable evaluators `a` and `b` agree.
    pub agreement: Vec<Vec<bool>>,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub omega: ColoredRep,
    pub framings: Vec<FramingConsistency>,
    pub consistent: bool,
}

/// Evaluates every formula whose hypotheses hold, framing by framing, and
/// compares the values that describe the same surgered manifold.
pub fn consistency_suite(
    link: &ColoredLink,
    omega: &ColoredRep,
    framings: &[Framing],
    sigma: &SignatureSource,
) -> Result<ConsistencyReport> {
    let mut out = Vec::with_capacity(framings.len());
    for r in framings {
        let reports = applicable_reports(link, omega, r, sigma)?;
        let values: Vec<&Rational> = reports.iter().filter_map(|rep| rep.value.as_ref()).collect();
        let agreement: Vec<Vec<bool>> =
            values.iter().map(|a| values.iter().map(|b| a == b).collect()).collect();
        let consistent = agreement.iter().flatten().all(|&x| x);
        out.push(FramingConsistency { framing: r.clone(), reports, agreement, consistent });
    }
    let consistent = out.iter().all(|f| f.consistent);
    Ok(ConsistencyReport { omega: omega.clone(), framings: out, consistent })
}

/// Reports, with values, of every evaluator applicable to `(L, ω, r)`.
pub fn applicable_reports(
    link: &ColoredLink,
    omega: &ColoredRep,
    r: &Framing,
    sigma: &SignatureSource,
) -> Result<Vec<SurgeryReport>> {
    let mut reports = Vec::new();
    let mut keep = |rep: SurgeryReport| {
        if rep.value.is_some() {
            reports.push(rep);
        }
    };
    keep(rhs_rational_surgery(link, omega, r, sigma)?);
    if r.is_integral() {
        keep(rhs_integer_surgery(link, omega, r, sigma)?);
        if link.is_max_colored() {
            let q = crate::link::common_denominator(omega);
            let nvec: Vec<i64> = omega
                .angles()
                .iter()
                .map(|w| (w.theta() * Rational::from(q)).to_i64().expect("q clears denominators"))
                .collect();
            keep(rhs_cf(link, q, &nvec, r, sigma, CfSumMode::Full)?);
        }
        if link.components() == 1 {
            let (n, _) = r.pair(0);
            keep(rhs_casson_gordon(sigma, n, omega.angle(0))?);
        }
    }
    if *r == colored_seifert_framing(link) {
        keep(rhs_seifert_surgery(link, omega, sigma)?);
    }
    if link.components() == 1 {
        if let SignatureSource::Seifert(a) = sigma {
            let (p, q) = r.pair(0);
            if p != 0 {
                keep(rhs_knot_rational(a, omega.angle(0), p, q)?);
            }
        }
    }
    Ok(reports)
}

/// `ρ(L(n, 1))` written through the integer-framing closed form; exposed for
/// the knot reduction `rhs_casson_gordon = −σ − ρ(L(n, 1))`.
pub fn integer_lens_term(n: i64, omega: &RationalAngle) -> Result<Rational> {
    rho_lens_integer_framing(n, omega)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: i64, d: i64) -> RationalAngle {
        RationalAngle::frac(n, d)
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn zero_table(omega: &ColoredRep) -> SignatureSource {
        SignatureSource::table([(omega.clone(), 0)])
    }

    #[test]
    fn integer_surgery_examples() {
        let knot = ColoredLink::knot();
        let w = ColoredRep::single(a(1, 5));
        let rep = rhs_integer_surgery(&knot, &w, &Framing::integers(&[5]), &zero_table(&w)).unwrap();
        assert_eq!(rep.value, Some(r("-3/5")));
        let trefoil = SignatureSource::Seifert(SeifertMatrix::trefoil());
        let rep = rhs_integer_surgery(&knot, &w, &Framing::integers(&[5]), &trefoil).unwrap();
        assert_eq!(rep.value, Some(r("7/5")));
        // incompatible framing: value withheld
        let rep = rhs_integer_surgery(&knot, &w, &Framing::integers(&[4]), &trefoil).unwrap();
        assert_eq!(rep.value, None);
        assert_eq!(rep.failed_hypotheses(), vec!["compatible"]);
    }

    #[test]
    fn seifert_surgery_examples() {
        let knot = ColoredLink::knot();
        for k in 1..7 {
            let w = ColoredRep::single(a(k, 7));
            assert_eq!(rhs_seifert_surgery(&knot, &w, &zero_table(&w)).unwrap().value, Some(r("0")));
        }
        let w = ColoredRep::single(a(1, 2));
        let trefoil = SignatureSource::Seifert(SeifertMatrix::trefoil());
        assert_eq!(rhs_seifert_surgery(&knot, &w, &trefoil).unwrap().value, Some(r("2")));
        let hopf = ColoredLink::new(vec![0, 1], vec![vec![0, 1], vec![1, 0]]).unwrap();
        let w2 = ColoredRep::new(vec![a(1, 2), a(1, 2)]);
        let rep = rhs_seifert_surgery(&hopf, &w2, &zero_table(&w2)).unwrap();
        assert_eq!(rep.value, None);
    }

    #[test]
    fn rational_surgery_examples() {
        let knot = ColoredLink::knot();
        let w = ColoredRep::single(a(1, 5));
        let table = zero_table(&w);
        let rep = rhs_rational_surgery(&knot, &w, &Framing::new(vec![r("5/2")]), &table).unwrap();
        assert_eq!(rep.value, Some(r("1/5")));
        assert_eq!(rep.lens_terms[0].rho, r("-1/5"));
        assert_eq!((rep.lens_terms[0].p, rep.lens_terms[0].q), (5, 2));
        let rep = rhs_rational_surgery(&knot, &w, &Framing::integers(&[5]), &table).unwrap();
        assert_eq!(rep.value, Some(r("-3/5")));
        let rep = rhs_rational_surgery(&knot, &w, &Framing::integers(&[0]), &table).unwrap();
        assert_eq!(rep.value, rhs_seifert_surgery(&knot, &w, &table).unwrap().value);
        assert_eq!((rep.lens_terms[0].p, rep.lens_terms[0].q), (0, 1));
    }

    #[test]
    fn knot_rational_examples() {
        let unknot = SeifertMatrix::empty();
        assert_eq!(rhs_knot_rational(&unknot, &a(1, 5), 5, 2).unwrap().value, Some(r("1/5")));
        let trefoil = SeifertMatrix::trefoil();
        assert_eq!(rhs_knot_rational(&trefoil, &a(1, 5), 5, 1).unwrap().value, Some(r("7/5")));
        assert_eq!(rhs_knot_rational(&trefoil, &a(1, 2), 2, 1).unwrap().value, Some(r("2")));
        assert_eq!(rhs_knot_rational(&trefoil, &a(1, 3), 5, 1).unwrap().value, None);
    }

    #[test]
    fn cf_examples() {
        let knot = ColoredLink::knot();
        let w = ColoredRep::single(a(1, 5));
        let rep = rhs_cf(&knot, 5, &[1], &Framing::integers(&[5]), &zero_table(&w), CfSumMode::Full).unwrap();
        assert_eq!(rep.value, Some(r("-3/5")));
        let rep = rhs_cf(&knot, 6, &[2], &Framing::integers(&[6]), &zero_table(&w), CfSumMode::Full).unwrap();
        assert_eq!(rep.value, None);
        assert_eq!(rep.failed_hypotheses(), vec!["n_coprime_to_q"]);
    }

    #[test]
    fn casson_gordon_matches_lens_form() {
        let trefoil = SignatureSource::Seifert(SeifertMatrix::trefoil());
        for n in [-6i64, -3, 2, 3, 6] {
            for m in 1..n.abs() {
                let w = a(m, n.abs());
                let cg = rhs_casson_gordon(&trefoil, n, &w).unwrap().value.unwrap();
                let s = levine_tristram(&SeifertMatrix::trefoil(), &w).unwrap();
                assert_eq!(cg, Rational::from(-s) - integer_lens_term(n, &w).unwrap());
            }
        }
    }

    #[test]
    fn yl_examples() {
        let knot = ColoredLink::knot();
        let w = ColoredRep::single(a(1, 2));
        assert_eq!(rho_of_yl(&knot, &w, &SignatureSource::Seifert(SeifertMatrix::empty())).unwrap().value, r("0"));
        let y = rho_of_yl(&knot, &w, &SignatureSource::Seifert(SeifertMatrix::trefoil())).unwrap();
        assert_eq!(y.value, r("2"));
        let t = SignatureSource::table([(w.clone(), 3)]);
        assert_eq!(rho_of_yl(&knot, &w, &t).unwrap().value, r("-3"));
    }

    #[test]
    fn torus_crosscheck_examples() {
        let c = torus_knot_crosscheck(2, 3, 1).unwrap();
        assert_eq!((c.surgery.clone(), c.lens.clone(), c.epsilon), (r("7/5"), r("-7/5"), Some(-1)));
        let c = torus_knot_crosscheck(2, 3, 2).unwrap();
        assert_eq!((c.surgery.clone(), c.lens.clone(), c.epsilon), (r("3/5"), r("-3/5"), Some(-1)));
        assert!(torus_knot_crosscheck(2, 3, 0).is_err());
        assert!(torus_knot_crosscheck(2, 3, 5).is_err());
    }

    #[test]
    fn consistency_unknot() {
        let knot = ColoredLink::knot();
        let w = ColoredRep::single(a(1, 5));
        let sigma = SignatureSource::Seifert(SeifertMatrix::empty());
        let framings = [Framing::integers(&[5]), Framing::new(vec![r("5/1")]), Framing::new(vec![r("5/2")])];
        let report = consistency_suite(&knot, &w, &framings, &sigma).unwrap();
        assert!(report.consistent);
        let theorems: Vec<Theorem> = report.framings[0].reports.iter().map(|r| r.theorem_used).collect();
        assert!(theorems.contains(&Theorem::IntegerSurgery));
        assert!(theorems.contains(&Theorem::RationalSurgery));
        assert!(theorems.contains(&Theorem::CimasoniFlorens));
        assert!(report.framings[0].reports.iter().all(|r| r.value == Some(Rational::frac(-3, 5))));
    }
}
