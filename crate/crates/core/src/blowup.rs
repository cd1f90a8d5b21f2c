//! Quadratic blow-ups of plane fields and the resolution driver.
//!
//! Chart 1 has coordinates `(x, t)` with `(x, y) = (x, t x)`; chart 2 has
//! coordinates `(s, y)` with `(x, y) = (s y, y)`. In chart 1 the pullback of
//! `A d/dx + B d/dy` is
//!
//! ```text
//! A(x, t x) d/dx + [(B(x, t x) - t A(x, t x)) / x] d/dt
//! ```
//!
//! and chart 2 is symmetric. The exceptional divisor is `{x = 0}` in chart 1
//! and `{y = 0}` in chart 2; the two charts overlap where `s t = 1`, so only
//! the point `s = 0` of chart 2 is new.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::VectorFieldJet;
use crate::gaussian::GaussianRational;
use crate::linalg::{Echelon, Row};
use crate::monomial::Monomial;
use crate::resonance::{classify_linear, LinearCase, LinearClass};
use crate::series::{Order, PolySeries};
use crate::univariate::UniPoly;

/// Default number of blow-up levels explored by [`resolve`].
pub const DEFAULT_MAX_DEPTH: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chart {
    /// `(x, y) = (x, t x)`, divisor `{x = 0}`.
    One,
    /// `(x, y) = (s y, y)`, divisor `{y = 0}`.
    Two,
}

impl Chart {
    pub fn index(&self) -> u8 {
        match self {
            Chart::One => 1,
            Chart::Two => 2,
        }
    }

    pub fn from_index(i: u8) -> Option<Chart> {
        match i {
            1 => Some(Chart::One),
            2 => Some(Chart::Two),
            _ => None,
        }
    }

    /// Index of the divisor coordinate among the chart coordinates.
    pub fn divisor_var(&self) -> usize {
        match self {
            Chart::One => 0,
            Chart::Two => 1,
        }
    }

    /// Names of the chart coordinates.
    pub fn coordinate_names(&self) -> [&'static str; 2] {
        match self {
            Chart::One => ["x", "t"],
            Chart::Two => ["s", "y"],
        }
    }
}

fn plane_exact(x: &VectorFieldJet) -> Result<()> {
    if x.nvars() != 2 {
        return Err(Error::UnsupportedDimension(x.nvars()));
    }
    if !x.is_exact() {
        return Err(Error::NotExact);
    }
    Ok(())
}

fn singular_at_origin(x: &VectorFieldJet) -> Result<()> {
    plane_exact(x)?;
    if x.components().iter().any(|c| !c.constant_term().is_zero()) {
        return Err(Error::NonSingularAtOrigin);
    }
    Ok(())
}

fn nu(x: &VectorFieldJet) -> Result<u32> {
    match x.order() {
        Order::Finite(k) => Ok(k as u32),
        _ => Err(Error::ZeroInput("vector field")),
    }
}

/// Pullback of `X` to the given chart.
pub fn blowup_pullback(x: &VectorFieldJet, chart: Chart) -> Result<VectorFieldJet> {
    singular_at_origin(x)?;
    let v0 = PolySeries::var(2, 0);
    let v1 = PolySeries::var(2, 1);
    let (a, b) = (x.component(0), x.component(1));
    match chart {
        Chart::One => {
            let map = [v0.clone(), &v0 * &v1];
            let a1 = a.substitute(&map, false)?;
            let b1 = b.substitute(&map, false)?;
            let num = &b1 - &(&v1 * &a1);
            let dt = num.divide_by(&v0)?.expect("vanishes on the divisor since X(0) = 0");
            VectorFieldJet::new(vec![a1, dt])
        }
        Chart::Two => {
            let map = [&v0 * &v1, v1.clone()];
            let a2 = a.substitute(&map, false)?;
            let b2 = b.substitute(&map, false)?;
            let num = &a2 - &(&v0 * &b2);
            let ds = num.divide_by(&v1)?.expect("vanishes on the divisor since X(0) = 0");
            VectorFieldJet::new(vec![ds, b2])
        }
    }
}

/// Outcome of the dicritical criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DicriticalTest {
    pub dicritical: bool,
    pub nu: u32,
    /// `B_nu(1, t) - t A_nu(1, t)`.
    pub witness: UniPoly,
}

/// Whether the first nonzero jet `X_nu` is colinear with the radial field.
pub fn dicritical_test(x: &VectorFieldJet) -> Result<DicriticalTest> {
    plane_exact(x)?;
    let nu = nu(x)?;
    let a = UniPoly::new(line_coeffs(&x.component(0).homogeneous_part(nu), nu));
    let b = UniPoly::new(line_coeffs(&x.component(1).homogeneous_part(nu), nu));
    let t = UniPoly::new(vec![GaussianRational::zero(), GaussianRational::one()]);
    let witness = b.sub(&t.mul(&a));
    Ok(DicriticalTest { dicritical: witness.is_zero(), nu, witness })
}

/// Coefficients of `h(1, t)` for a homogeneous `h` of degree `d`.
fn line_coeffs(h: &PolySeries, d: u32) -> Vec<GaussianRational> {
    let mut out = vec![GaussianRational::zero(); d as usize + 1];
    for (m, c) in h.terms() {
        out[m.exp(1) as usize] = c.clone();
    }
    out
}

/// A chart pullback together with its strict transform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlownUpField {
    pub chart: Chart,
    pub pullback: VectorFieldJet,
    pub dicritical: bool,
    pub nu: u32,
    /// Largest power of the divisor coordinate dividing the pullback.
    pub divisor_multiplicity: u32,
    /// `nu - 1` for non-dicritical blow-ups, `nu` for dicritical ones.
    pub expected_multiplicity: u32,
    pub strict: VectorFieldJet,
    pub witness: UniPoly,
}

impl BlownUpField {
    pub fn multiplicity_matches(&self) -> bool {
        self.divisor_multiplicity == self.expected_multiplicity
    }
}

/// Pullback divided by the largest power of the divisor coordinate.
pub fn strict_transform(x: &VectorFieldJet, chart: Chart) -> Result<BlownUpField> {
    let pullback = blowup_pullback(x, chart)?;
    let test = dicritical_test(x)?;
    let dv = chart.divisor_var();
    let k = pullback
        .components()
        .iter()
        .filter_map(|c| c.var_valuation(dv))
        .min()
        .unwrap_or(0);
    let strict = VectorFieldJet::new(pullback.components().iter().map(|c| c.div_var_power(dv, k)).collect())?;
    let expected = if test.dicritical { test.nu } else { test.nu - 1 };
    Ok(BlownUpField {
        chart,
        pullback,
        dicritical: test.dicritical,
        nu: test.nu,
        divisor_multiplicity: k,
        expected_multiplicity: expected,
        strict,
        witness: test.witness,
    })
}

/// Position of a point on the exceptional divisor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DivisorCoordinate {
    /// Fibre coordinate (`t` in chart 1, `s` in chart 2) in `Q(i)`.
    Rational(GaussianRational),
    /// Roots of this monic factor, none of which lie in `Q(i)`.
    Irrational(UniPoly),
}

impl fmt::Display for DivisorCoordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisorCoordinate::Rational(c) => write!(f, "{c}"),
            DivisorCoordinate::Irrational(p) => write!(f, "root of {p}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SingularityClass {
    ReducedHyperbolic,
    SaddleNode,
    PurelyRadial,
    Nprs,
    NonReducedOther,
    UnresolvableIrrational,
}

impl SingularityClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            SingularityClass::ReducedHyperbolic => "reduced_hyperbolic",
            SingularityClass::SaddleNode => "saddle_node",
            SingularityClass::PurelyRadial => "purely_radial",
            SingularityClass::Nprs => "nprs",
            SingularityClass::NonReducedOther => "non_reduced_other",
            SingularityClass::UnresolvableIrrational => "unresolvable_irrational",
        }
    }

    pub fn is_reduced(&self) -> bool {
        matches!(self, SingularityClass::ReducedHyperbolic | SingularityClass::SaddleNode)
    }
}

/// Classification of a singular germ at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub class: SingularityClass,
    pub nu: u32,
    pub isolated: bool,
    pub linear: LinearClass,
}

/// A zero of the strict transform on the exceptional divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoint {
    pub chart: Chart,
    pub coordinate: DivisorCoordinate,
    pub classification: SingularityClass,
    /// Local germ with the point moved to the origin and the divisor
    /// coordinate first. Absent for irrational points.
    pub germ: Option<VectorFieldJet>,
    pub multiplicity: Option<u32>,
    pub isolated: Option<bool>,
}

/// Whether the zero of `X` at the origin is isolated.
///
/// The zero is isolated iff `m^k` lies in `(A, B) + m^(k+1)` for some `k`
/// (Nakayama), and then `k = deg A * deg B` always works.
pub fn is_isolated(x: &VectorFieldJet) -> Result<bool> {
    singular_at_origin(x)?;
    let (a, b) = (x.component(0), x.component(1));
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return Ok(false);
    };
    let bound = (da * db).max(1);
    for k in 1..=bound {
        if power_of_maximal_ideal_covered(a, b, k) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `m^k` is contained in `(a, b) + m^(k+1)`.
fn power_of_maximal_ideal_covered(a: &PolySeries, b: &PolySeries, k: u32) -> bool {
    let cols = Monomial::up_to_degree(2, 0, k);
    let index = |m: &Monomial| cols.iter().position(|c| c == m);
    let mut e = Echelon::new(cols.len());
    for g in [a, b] {
        for mult in Monomial::up_to_degree(2, 0, k.saturating_sub(1)) {
            let mut row = Row::new();
            for (m, c) in g.terms() {
                let prod = m.mul(&mult);
                if prod.degree() <= k {
                    row.insert(index(&prod).expect("column"), c.clone());
                }
            }
            e.insert(row);
        }
    }
    Monomial::of_degree(2, k).iter().all(|m| {
        let mut row = Row::new();
        row.insert(index(m).expect("column"), GaussianRational::one());
        e.contains(&row)
    })
}

/// Classifies the singularity of `X` at the origin.
pub fn classify_singularity(x: &VectorFieldJet) -> Result<Classification> {
    singular_at_origin(x)?;
    let nu = nu(x)?;
    let isolated = is_isolated(x)?;
    let m = x.linear_part();
    let linear = classify_linear(&[[m[0][0].clone(), m[0][1].clone()], [m[1][0].clone(), m[1][1].clone()]]);
    let class = if nu == 1 {
        let scalar = m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1];
        if !linear.determinant.is_zero() && !linear.ratio_in_positive_rationals() {
            SingularityClass::ReducedHyperbolic
        } else if linear.case == LinearCase::OneZeroEigenvalue && isolated {
            SingularityClass::SaddleNode
        } else if scalar {
            SingularityClass::PurelyRadial
        } else {
            SingularityClass::NonReducedOther
        }
    } else if isolated && dicritical_test(x)?.dicritical {
        SingularityClass::Nprs
    } else {
        SingularityClass::NonReducedOther
    };
    Ok(Classification { class, nu, isolated, linear })
}

/// Moves the chart-1 point `t = c` to the origin.
fn localize_chart1(strict: &VectorFieldJet, c: &GaussianRational) -> Result<VectorFieldJet> {
    let map = [
        PolySeries::var(2, 0),
        &PolySeries::var(2, 1) + &PolySeries::constant(2, c.clone()),
    ];
    VectorFieldJet::new(
        strict
            .components()
            .iter()
            .map(|comp| comp.substitute(&map, true))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// Zeros of the strict transforms on the exceptional divisor, chart 1
/// points first in coordinate order, then the point `s = 0` of chart 2.
pub fn divisor_singularities(x: &VectorFieldJet) -> Result<Vec<SingularPoint>> {
    let one = strict_transform(x, Chart::One)?;
    let two = strict_transform(x, Chart::Two)?;
    let mut points = Vec::new();

    let p = UniPoly::restrict(one.strict.component(0), 0);
    let q = UniPoly::restrict(one.strict.component(1), 0);
    let g = p.gcd(&q);
    if g.degree().unwrap_or(0) > 0 {
        let (roots, rest) = g.gaussian_roots()?;
        for r in roots {
            let germ = localize_chart1(&one.strict, &r)?;
            points.push(point_from_germ(Chart::One, DivisorCoordinate::Rational(r), germ)?);
        }
        if rest.degree().unwrap_or(0) > 0 {
            points.push(SingularPoint {
                chart: Chart::One,
                coordinate: DivisorCoordinate::Irrational(rest),
                classification: SingularityClass::UnresolvableIrrational,
                germ: None,
                multiplicity: None,
                isolated: None,
            });
        }
    }

    if two.strict.components().iter().all(|c| c.constant_term().is_zero()) {
        let germ = two.strict.swap_vars(0, 1);
        points.push(point_from_germ(Chart::Two, DivisorCoordinate::Rational(GaussianRational::zero()), germ)?);
    }
    Ok(points)
}

fn point_from_germ(chart: Chart, coordinate: DivisorCoordinate, germ: VectorFieldJet) -> Result<SingularPoint> {
    let c = classify_singularity(&germ)?;
    Ok(SingularPoint {
        chart,
        coordinate,
        classification: c.class,
        germ: Some(germ),
        multiplicity: Some(c.nu),
        isolated: Some(c.isolated),
    })
}

/// Options for [`resolve`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResolveOptions {
    /// Maximal number of successive blow-ups along a branch.
    pub max_depth: u32,
    /// Blow up purely radial and n.p.r.s. points too.
    pub force_radial: bool,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        Self { max_depth: DEFAULT_MAX_DEPTH, force_radial: false }
    }
}

/// Why a node has no children.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeStatus {
    /// The node was blown up.
    Expanded,
    /// Reduced, or purely radial / n.p.r.s. without forcing.
    Leaf,
    /// Non-reduced but the depth budget is spent.
    Unresolved,
    /// Point with coordinates outside `Q(i)`.
    Irrational,
}

impl NodeStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            NodeStatus::Expanded => "expanded",
            NodeStatus::Leaf => "leaf",
            NodeStatus::Unresolved => "unresolved",
            NodeStatus::Irrational => "irrational",
        }
    }
}

/// Data of a blow-up performed at a node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupRecord {
    pub dicritical: bool,
    pub nu: u32,
    pub divisor_multiplicity: u32,
    pub multiplicity_matches: bool,
    pub witness: UniPoly,
    pub strict_chart1: VectorFieldJet,
    pub strict_chart2: VectorFieldJet,
}

/// One step of the chart history: the chart and the divisor coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartStep {
    pub chart: Chart,
    pub coordinate: DivisorCoordinate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionNode {
    pub history: Vec<ChartStep>,
    /// Local germ at the point (divisor coordinate first); absent for
    /// irrational points.
    pub germ: Option<VectorFieldJet>,
    pub classification: SingularityClass,
    pub nu: Option<u32>,
    pub linear: Option<LinearClass>,
    /// For purely radial and n.p.r.s. leaves: whether blowing up would be
    /// dicritical.
    pub next_blowup_dicritical: Option<bool>,
    pub blowup: Option<BlowupRecord>,
    pub status: NodeStatus,
    pub children: Vec<ResolutionNode>,
}

impl ResolutionNode {
    /// Number of levels (a bare root has height 1).
    pub fn height(&self) -> usize {
        1 + self.children.iter().map(ResolutionNode::height).max().unwrap_or(0)
    }

    /// Number of blow-ups performed in the tree.
    pub fn blowup_count(&self) -> usize {
        usize::from(self.blowup.is_some()) + self.children.iter().map(ResolutionNode::blowup_count).sum::<usize>()
    }

    /// Leaves in depth-first order.
    pub fn leaves(&self) -> Vec<&ResolutionNode> {
        if self.children.is_empty() {
            vec![self]
        } else {
            self.children.iter().flat_map(ResolutionNode::leaves).collect()
        }
    }

    /// Every leaf is a terminal verdict, or a blow-up that left no singular points.
    pub fn is_resolved(&self) -> bool {
        self.leaves().iter().all(|l| matches!(l.status, NodeStatus::Leaf | NodeStatus::Expanded))
    }
}

/// Blows up recursively until every leaf is reduced (or purely radial /
/// n.p.r.s.), the depth budget is spent, or an irrational point is met.
pub fn resolve(x: &VectorFieldJet, opts: ResolveOptions) -> Result<ResolutionNode> {
    singular_at_origin(x)?;
    nu(x)?;
    if !is_isolated(x)? {
        return Err(Error::NonIsolatedSingularity);
    }
    resolve_at(x.clone(), Vec::new(), 0, opts)
}

fn resolve_at(germ: VectorFieldJet, history: Vec<ChartStep>, level: u32, opts: ResolveOptions) -> Result<ResolutionNode> {
    let c = classify_singularity(&germ)?;
    let radial_like = matches!(c.class, SingularityClass::PurelyRadial | SingularityClass::Nprs);
    let next_blowup_dicritical = if radial_like { Some(dicritical_test(&germ)?.dicritical) } else { None };
    let wants_blowup = c.class == SingularityClass::NonReducedOther || (radial_like && opts.force_radial);
    let mut node = ResolutionNode {
        history,
        germ: Some(germ.clone()),
        classification: c.class,
        nu: Some(c.nu),
        linear: Some(c.linear),
        next_blowup_dicritical,
        blowup: None,
        status: NodeStatus::Leaf,
        children: Vec::new(),
    };
    if !wants_blowup {
        return Ok(node);
    }
    if level >= opts.max_depth {
        node.status = NodeStatus::Unresolved;
        return Ok(node);
    }
    let one = strict_transform(&germ, Chart::One)?;
    let two = strict_transform(&germ, Chart::Two)?;
    node.blowup = Some(BlowupRecord {
        dicritical: one.dicritical,
        nu: one.nu,
        divisor_multiplicity: one.divisor_multiplicity,
        multiplicity_matches: one.multiplicity_matches() && two.multiplicity_matches(),
        witness: one.witness.clone(),
        strict_chart1: one.strict,
        strict_chart2: two.strict,
    });
    node.status = NodeStatus::Expanded;
    for p in divisor_singularities(&germ)? {
        let mut history = node.history.clone();
        history.push(ChartStep { chart: p.chart, coordinate: p.coordinate.clone() });
        let child = match p.germ {
            Some(g) => resolve_at(g, history, level + 1, opts)?,
            None => ResolutionNode {
                history,
                germ: None,
                classification: SingularityClass::UnresolvableIrrational,
                nu: None,
                linear: None,
                next_blowup_dicritical: None,
                blowup: None,
                status: NodeStatus::Irrational,
                children: Vec::new(),
            },
        };
        node.children.push(child);
    }
    Ok(node)
}
