//! Colored framed links as linking data: framings, colored representations,
//! compatibility, algebraic splitness, plumbing graphs and the boundary
//! symplectic model of a link exterior.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::hermitian::{GaussianRational, Lagrangian, SymplecticSpace};
use crate::{Error, Rational, RationalAngle, Result};

/// A link recorded by its pairwise linking numbers and a surjective coloring.
///
/// Colors are 0-based in the API and 1-based in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LinkFile", into = "LinkFile")]
pub struct ColoredLink {
    coloring: Vec<usize>,
    colors: usize,
    linking: Vec<Vec<i64>>,
}

/// On-disk shape of a link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkFile {
    pub components: usize,
    pub coloring: Vec<usize>,
    pub linking: Vec<Vec<i64>>,
}

impl TryFrom<LinkFile> for ColoredLink {
    type Error = Error;

    fn try_from(f: LinkFile) -> Result<Self> {
        if f.coloring.len() != f.components {
            return Err(Error::DimensionMismatch { expected: f.components, found: f.coloring.len() });
        }
        if let Some(i) = f.coloring.iter().position(|&c| c == 0) {
            return Err(Error::InvalidColoring(format!(
                "component {} has color 0; colors are numbered from 1",
                i + 1
            )));
        }
        let zero_based = f.coloring.iter().map(|c| c - 1).collect();
        ColoredLink::new(zero_based, f.linking)
    }
}

impl From<ColoredLink> for LinkFile {
    fn from(l: ColoredLink) -> Self {
        LinkFile {
            components: l.components(),
            coloring: l.coloring.iter().map(|c| c + 1).collect(),
            linking: l.linking,
        }
    }
}

impl ColoredLink {
    /// `coloring[i]` is the 0-based color of component `i`. The diagonal of
    /// `linking` is ignored.
    pub fn new(coloring: Vec<usize>, mut linking: Vec<Vec<i64>>) -> Result<Self> {
        let k = coloring.len();
        if linking.len() != k {
            return Err(Error::DimensionMismatch { expected: k, found: linking.len() });
        }
        if let Some(row) = linking.iter().find(|row| row.len() != k) {
            return Err(Error::DimensionMismatch { expected: k, found: row.len() });
        }
        for i in 0..k {
            for j in i + 1..k {
                if linking[i][j] != linking[j][i] {
                    return Err(Error::NonSymmetricLinking { i: i + 1, j: j + 1 });
                }
            }
            linking[i][i] = 0;
        }
        let colors = coloring.iter().map(|c| c + 1).max().unwrap_or(0);
        let mut used = vec![false; colors];
        for &c in &coloring {
            used[c] = true;
        }
        if let Some(missing) = used.iter().position(|u| !u) {
            return Err(Error::InvalidColoring(format!(
                "coloring is not surjective: color {} has no components",
                missing + 1
            )));
        }
        Ok(ColoredLink { coloring, colors, linking })
    }

    /// A knot viewed as a 1-colored, 1-component link.
    pub fn knot() -> Self {
        ColoredLink { coloring: vec![0], colors: 1, linking: vec![vec![0]] }
    }

    /// Each component gets its own color.
    pub fn max_colored(linking: Vec<Vec<i64>>) -> Result<Self> {
        ColoredLink::new((0..linking.len()).collect(), linking)
    }

    pub fn components(&self) -> usize {
        self.coloring.len()
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn color(&self, i: usize) -> usize {
        self.coloring[i]
    }

    pub fn coloring(&self) -> &[usize] {
        &self.coloring
    }

    /// `lk(K_i, K_j)`; zero on the diagonal.
    pub fn lk(&self, i: usize, j: usize) -> i64 {
        self.linking[i][j]
    }

    pub fn linking(&self) -> &[Vec<i64>] {
        &self.linking
    }

    pub fn is_max_colored(&self) -> bool {
        self.colors == self.components()
    }

    /// `lk(K_i, L_t)`.
    pub fn lk_component_color(&self, i: usize, t: usize) -> i64 {
        (0..self.components()).filter(|&j| self.coloring[j] == t).map(|j| self.linking[i][j]).sum()
    }

    /// `lk(L_s, L_t)` for `s ≠ t`.
    pub fn lk_colors(&self, s: usize, t: usize) -> i64 {
        (0..self.components())
            .filter(|&i| self.coloring[i] == s)
            .map(|i| self.lk_component_color(i, t))
            .sum()
    }

    fn check_framing(&self, r: &Framing) -> Result<()> {
        if r.len() != self.components() {
            return Err(Error::DimensionMismatch { expected: self.components(), found: r.len() });
        }
        Ok(())
    }

    fn check_rep(&self, rep: &ColoredRep) -> Result<()> {
        if rep.len() != self.colors {
            return Err(Error::DimensionMismatch { expected: self.colors, found: rep.len() });
        }
        Ok(())
    }
}

/// Rational surgery coefficients, one per component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Framing(Vec<Rational>);

impl Framing {
    pub fn new(coefficients: Vec<Rational>) -> Self {
        Framing(coefficients)
    }

    pub fn integers(values: &[i64]) -> Self {
        Framing(values.iter().map(|&v| Rational::from(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.0
    }

    /// The coprime pair `(p_i, q_i)` with `q_i > 0`; `0` is `(0, 1)`.
    pub fn pair(&self, i: usize) -> (i64, i64) {
        rational_pair(&self.0[i])
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Rational::is_integer)
    }
}

impl fmt::Display for Framing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `(p, q)` in lowest terms with `q > 0`. Panics if either does not fit in `i64`.
pub fn rational_pair(r: &Rational) -> (i64, i64) {
    use num_traits::ToPrimitive;
    (
        r.numer().to_i64().expect("framing numerator fits in i64"),
        r.denom().to_i64().expect("framing denominator fits in i64"),
    )
}

/// A colored representation: one angle per color, assigned to every meridian of that color.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColoredRep(Vec<RationalAngle>);

impl ColoredRep {
    pub fn new(angles: Vec<RationalAngle>) -> Self {
        ColoredRep(angles)
    }

    pub fn single(angle: RationalAngle) -> Self {
        ColoredRep(vec![angle])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn angles(&self) -> &[RationalAngle] {
        &self.0
    }

    pub fn angle(&self, color: usize) -> &RationalAngle {
        &self.0[color]
    }

    /// Every coordinate differs from 1.
    pub fn all_nontrivial(&self) -> bool {
        self.0.iter().all(RationalAngle::nontrivial)
    }

    /// `α(μ_i) = ω_{c(i)}`.
    pub fn meridian_angle<'a>(&'a self, link: &ColoredLink, i: usize) -> &'a RationalAngle {
        &self.0[link.color(i)]
    }
}

impl fmt::Display for ColoredRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `Λ_ij = lk(K_i, K_j)` off the diagonal, `Λ_ii = r_i`.
pub fn framed_linking_matrix(link: &ColoredLink, r: &Framing) -> Result<Vec<Vec<Rational>>> {
    link.check_framing(r)?;
    let k = link.components();
    Ok((0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { r.0[i].clone() } else { Rational::from(link.lk(i, j)) })
                .collect()
        })
        .collect())
}

/// `f_i = −Σ_{j≠i} lk(K_i, K_j)`.
pub fn seifert_framing(link: &ColoredLink) -> Framing {
    let k = link.components();
    Framing::integers(&(0..k).map(|i| -(0..k).map(|j| link.lk(i, j)).sum::<i64>()).collect::<Vec<_>>())
}

/// `f_i = −Σ_{j≠i, c(j)=c(i)} lk(K_i, K_j)`.
pub fn colored_seifert_framing(link: &ColoredLink) -> Framing {
    let k = link.components();
    Framing::integers(&(0..k).map(|i| -link.lk_component_color(i, link.color(i))).collect::<Vec<_>>())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitClass {
    None,
    ColorToColor,
    ComponentToColor,
}

/// The strongest algebraic splitness the link satisfies.
pub fn split_class(link: &ColoredLink) -> SplitClass {
    let k = link.components();
    let n = link.colors();
    let component_wise = (0..k)
        .all(|i| (0..n).filter(|&t| t != link.color(i)).all(|t| link.lk_component_color(i, t) == 0));
    if component_wise {
        return SplitClass::ComponentToColor;
    }
    let color_wise = (0..n).all(|s| (0..n).filter(|&t| t != s).all(|t| link.lk_colors(s, t) == 0));
    if color_wise {
        SplitClass::ColorToColor
    } else {
        SplitClass::None
    }
}

/// Whether the representation extends over the surgered manifold:
/// `q_i·Σ_j Λ_ij θ_{c(j)} ∈ Z` for every `i`.
pub fn is_compatible(link: &ColoredLink, r: &Framing, rep: &ColoredRep) -> Result<bool> {
    link.check_framing(r)?;
    link.check_rep(rep)?;
    let lambda = framed_linking_matrix(link, r)?;
    Ok((0..link.components()).all(|i| {
        let (_, q) = r.pair(i);
        let row: Rational = (0..link.components())
            .map(|j| &lambda[i][j] * rep.meridian_angle(link, j).theta())
            .sum();
        (row * Rational::from(q)).is_integer()
    }))
}

/// `h_s = Σ_{c(i)=c(j)=s} Λ_ij` for an integral framing.
pub fn h_values(link: &ColoredLink, g: &Framing) -> Result<Vec<Rational>> {
    link.check_framing(g)?;
    if let Some(index) = g.0.iter().position(|x| !x.is_integer()) {
        return Err(Error::NonIntegerFraming { index: index + 1 });
    }
    let lambda = framed_linking_matrix(link, g)?;
    let k = link.components();
    let mut h = vec![Rational::zero(); link.colors()];
    for i in 0..k {
        for j in 0..k {
            if link.color(i) == link.color(j) {
                h[link.color(i)] += &lambda[i][j];
            }
        }
    }
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlumbingVertex {
    pub genus: u32,
    pub boundary_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlumbingEdge {
    pub s: usize,
    pub t: usize,
    pub sign: i32,
}

/// Vertices are colors (0-based); each vertex is a genus-0 surface with one
/// boundary circle per component of that color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlumbingGraph {
    pub vertices: Vec<PlumbingVertex>,
    pub edges: Vec<PlumbingEdge>,
}

impl PlumbingGraph {
    /// Sum of edge signs between `s` and `t`.
    pub fn total_weight(&self, s: usize, t: usize) -> i64 {
        self.edges
            .iter()
            .filter(|e| (e.s == s && e.t == t) || (e.s == t && e.t == s))
            .map(|e| i64::from(e.sign))
            .sum()
    }

    pub fn is_balanced(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|s| (s + 1..n).all(|t| self.total_weight(s, t) == 0))
    }
}

/// `Γ_L`: `|lk(L_s, L_t)|` edges of sign `sgn lk(L_s, L_t)` between each pair of colors.
pub fn plumbing_graph(link: &ColoredLink) -> PlumbingGraph {
    let n = link.colors();
    let vertices = (0..n)
        .map(|s| PlumbingVertex {
            genus: 0,
            boundary_count: link.coloring().iter().filter(|&&c| c == s).count(),
        })
        .collect();
    let mut edges = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            let w = link.lk_colors(s, t);
            for _ in 0..w.unsigned_abs() {
                edges.push(PlumbingEdge { s, t, sign: w.signum() as i32 });
            }
        }
    }
    PlumbingGraph { vertices, edges }
}

pub fn total_weight(graph: &PlumbingGraph, s: usize, t: usize) -> i64 {
    graph.total_weight(s, t)
}

pub fn is_balanced(graph: &PlumbingGraph) -> bool {
    graph.is_balanced()
}

/// Where the pieces of the plumbed manifold are glued to the link exterior.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingEntry {
    pub color: usize,
    /// The circle factor of this vertex is glued to the meridians of these components.
    pub meridians: Vec<usize>,
    /// Boundary circles go to the longitudes of the same components with these framings.
    pub longitude_framings: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YlDescriptor {
    pub graph: PlumbingGraph,
    pub gluing: Vec<GluingEntry>,
}

pub fn yl_descriptor(link: &ColoredLink) -> YlDescriptor {
    let f = colored_seifert_framing(link);
    let gluing = (0..link.colors())
        .map(|s| {
            let members: Vec<usize> =
                (0..link.components()).filter(|&i| link.color(i) == s).collect();
            GluingEntry {
                color: s,
                longitude_framings: members.iter().map(|&i| f.0[i].clone()).collect(),
                meridians: members,
            }
        })
        .collect();
    YlDescriptor { graph: plumbing_graph(link), gluing }
}

/// `H₁(∂X_L; C)` with its intersection form and the three distinguished Lagrangians.
#[derive(Clone, Debug)]
pub struct BoundaryModel {
    pub space: SymplecticSpace,
    /// Span of the meridians.
    pub meridians: Lagrangian,
    /// Span of the framed longitudes.
    pub longitudes: Lagrangian,
    /// Kernel of the inclusion into the exterior: `λ_i − Σ_s Λ_is μ_s`.
    pub exterior: Lagrangian,
}

/// Coordinates are `(μ₁..μ_k, λ₁..λ_k)` with `μ_i·λ_j = −δ_ij`.
pub fn boundary_model(link: &ColoredLink, r: &Framing) -> Result<BoundaryModel> {
    let lambda = framed_linking_matrix(link, r)?;
    let k = link.components();
    let space = SymplecticSpace::standard(k);
    let unit = |pos: usize| -> Vec<GaussianRational> {
        (0..2 * k).map(|c| GaussianRational::from_int(i64::from(c == pos))).collect()
    };
    let meridians = Lagrangian::new(&space, (0..k).map(unit).collect())?;
    let longitudes = Lagrangian::new(&space, (0..k).map(|i| unit(k + i)).collect())?;
    let exterior_basis = (0..k)
        .map(|i| {
            let mut v = unit(k + i);
            for (s, x) in lambda[i].iter().enumerate() {
                v[s] = GaussianRational::real(-x);
            }
            v
        })
        .collect();
    let exterior = Lagrangian::new(&space, exterior_basis)?;
    Ok(BoundaryModel { space, meridians, longitudes, exterior })
}

/// Whether `θ`'s order divides `n` in the sense `nθ ∈ Z`.
pub(crate) fn kills(theta: &RationalAngle, n: i64) -> bool {
    (theta.theta() * Rational::from(n)).is_integer()
}

/// Smallest positive `q` with `qθ ∈ Z` for every angle.
pub fn common_denominator(rep: &ColoredRep) -> i64 {
    use num_traits::ToPrimitive;
    rep.angles()
        .iter()
        .fold(1i64, |acc, a| acc.lcm(&a.order().to_i64().expect("angle order fits in i64")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::{maslov_triple, rational_signature};

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn hopf(colored: bool) -> ColoredLink {
        let coloring = if colored { vec![0, 1] } else { vec![0, 0] };
        ColoredLink::new(coloring, vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn linking_matrices() {
        let m = framed_linking_matrix(&hopf(false), &Framing::integers(&[0, 0])).unwrap();
        assert_eq!(m, vec![vec![r("0"), r("1")], vec![r("1"), r("0")]]);
        let m = framed_linking_matrix(&ColoredLink::knot(), &Framing::integers(&[5])).unwrap();
        assert_eq!(m, vec![vec![r("5")]]);
        let l = ColoredLink::new(vec![0, 0], vec![vec![9, 3], vec![3, 0]]).unwrap();
        let m = framed_linking_matrix(&l, &Framing::new(vec![r("1/2"), r("-2")])).unwrap();
        assert_eq!(m, vec![vec![r("1/2"), r("3")], vec![r("3"), r("-2")]]);
        assert!(framed_linking_matrix(&l, &Framing::integers(&[1])).is_err());
    }

    #[test]
    fn validation() {
        assert!(matches!(
            ColoredLink::new(vec![0, 0], vec![vec![0, 1], vec![2, 0]]),
            Err(Error::NonSymmetricLinking { i: 1, j: 2 })
        ));
        assert!(matches!(
            ColoredLink::new(vec![0, 2], vec![vec![0, 1], vec![1, 0]]),
            Err(Error::InvalidColoring(_))
        ));
        let file = r#"{"components": 2, "coloring": [1, 2], "linking": [[7, 1], [1, 0]]}"#;
        let l: ColoredLink = serde_json::from_str(file).unwrap();
        assert_eq!(l, hopf(true));
        assert_eq!(
            serde_json::to_string(&l).unwrap(),
            r#"{"components":2,"coloring":[1,2],"linking":[[0,1],[1,0]]}"#
        );
        assert!(serde_json::from_str::<ColoredLink>(
            r#"{"components": 1, "coloring": [0], "linking": [[0]]}"#
        )
        .is_err());
    }

    #[test]
    fn seifert_framings() {
        let l = ColoredLink::new(vec![0, 0], vec![vec![0, 3], vec![3, 0]]).unwrap();
        assert_eq!(seifert_framing(&l), Framing::integers(&[-3, -3]));
        assert_eq!(colored_seifert_framing(&hopf(true)), Framing::integers(&[0, 0]));
        assert_eq!(seifert_framing(&hopf(true)), Framing::integers(&[-1, -1]));
    }

    #[test]
    fn split_classes() {
        assert_eq!(split_class(&hopf(false)), SplitClass::ComponentToColor);
        assert_eq!(split_class(&ColoredLink::knot()), SplitClass::ComponentToColor);
        let l = ColoredLink::new(
            vec![0, 0, 1],
            vec![vec![0, 0, 1], vec![0, 0, -1], vec![1, -1, 0]],
        )
        .unwrap();
        assert_eq!(split_class(&l), SplitClass::ColorToColor);
        assert_eq!(split_class(&hopf(true)), SplitClass::None);
        assert!(SplitClass::ComponentToColor > SplitClass::ColorToColor);
    }

    #[test]
    fn compatibility() {
        let unknot = ColoredLink::knot();
        let rep = ColoredRep::single(RationalAngle::frac(1, 5));
        assert!(is_compatible(&unknot, &Framing::integers(&[5]), &rep).unwrap());
        assert!(!is_compatible(&unknot, &Framing::integers(&[4]), &rep).unwrap());
        let rep = ColoredRep::new(vec![RationalAngle::frac(1, 3), RationalAngle::frac(1, 3)]);
        assert!(!is_compatible(&hopf(true), &Framing::integers(&[0, 0]), &rep).unwrap());
        // rational framing 5/2 on the unknot: q·r·θ = 2·(5/2)·(1/5) = 1
        let rep = ColoredRep::single(RationalAngle::frac(1, 5));
        assert!(is_compatible(&unknot, &Framing::new(vec![r("5/2")]), &rep).unwrap());
    }

    #[test]
    fn plumbing() {
        let g = plumbing_graph(&hopf(true));
        assert_eq!(g.edges, vec![PlumbingEdge { s: 0, t: 1, sign: 1 }]);
        assert_eq!(total_weight(&g, 0, 1), 1);
        assert!(!is_balanced(&g));
        let l = ColoredLink::new(
            vec![0, 0, 1],
            vec![vec![0, 0, 1], vec![0, 0, -1], vec![1, -1, 0]],
        )
        .unwrap();
        let g = plumbing_graph(&l);
        assert!(g.edges.is_empty() && is_balanced(&g));
        assert_eq!(g.vertices[0].boundary_count, 2);
        let l = ColoredLink::new(vec![0, 1], vec![vec![0, -2], vec![-2, 0]]).unwrap();
        let g = plumbing_graph(&l);
        assert_eq!(g.edges.len(), 2);
        assert!(g.edges.iter().all(|e| e.sign == -1));
        assert_eq!(g.total_weight(1, 0), -2);
    }

    #[test]
    fn h_values_examples() {
        let l = ColoredLink::new(vec![0, 0], vec![vec![0, 3], vec![3, 0]]).unwrap();
        assert_eq!(h_values(&l, &Framing::integers(&[2, 2])).unwrap(), vec![r("10")]);
        assert_eq!(h_values(&hopf(true), &Framing::integers(&[4, -4])).unwrap(), vec![r("4"), r("-4")]);
        let f = colored_seifert_framing(&l);
        assert_eq!(h_values(&l, &f).unwrap(), vec![r("0")]);
        assert!(matches!(
            h_values(&l, &Framing::new(vec![r("1/2"), r("0")])),
            Err(Error::NonIntegerFraming { index: 1 })
        ));
    }

    #[test]
    fn boundary_model_examples() {
        let m = boundary_model(&ColoredLink::knot(), &Framing::integers(&[0])).unwrap();
        assert_eq!(m.exterior, m.longitudes);
        for (fr, expected) in [([1, 1], 1), ([0, 0], 0)] {
            let framing = Framing::integers(&fr);
            let m = boundary_model(&hopf(false), &framing).unwrap();
            let tau = maslov_triple(&m.space, &m.meridians, &m.longitudes, &m.exterior).unwrap();
            assert_eq!(tau, expected);
            let lambda = framed_linking_matrix(&hopf(false), &framing).unwrap();
            assert_eq!(tau, rational_signature(&lambda).unwrap());
        }
    }

    #[test]
    fn descriptor() {
        let d = yl_descriptor(&hopf(false));
        assert_eq!(d.gluing.len(), 1);
        assert_eq!(d.gluing[0].meridians, vec![0, 1]);
        assert_eq!(d.gluing[0].longitude_framings, vec![r("-1"), r("-1")]);
    }
}
