//! The tensile domain `D(k_v)`: natural widths, their asymptote, the
//! equibiaxial vertices and the activation at which the domain vanishes.
//!
//! A state is tensile when each principal stretch exceeds the natural width
//! induced by the other. The boundary of `D` is made of the two mirror-image
//! curves `λ2 = ν(λ1)` and `λ1 = ν(λ2)`, which meet at the equibiaxial
//! vertices. Raising `k_v` pushes the curves together until the vertices
//! coalesce at the critical activation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::material::MaterialModel;
use crate::solve::{bisect, golden_section_max, log_space};
use crate::stress::{principal_stresses, transverse_stress, StretchState};

/// Residual tolerance on boundary and vertex stresses, relative to `max(μ, 1)`.
pub const RESIDUAL_TOLERANCE: f64 = 1e-10;
/// Upper cap on stretches explored by the generic solvers.
pub const STRETCH_CAP: f64 = 1e6;

const VERTEX_SCAN_POINTS: usize = 256;
const VERTEX_SCAN_MIN: f64 = 0.1;
const CRITICAL_SCAN_POINTS: usize = 64;
const WIDTH_FLOOR: f64 = 1e-6;

fn check_inputs(lambda: f64, k_v: f64) -> Result<()> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "stretch must be positive and finite, got {lambda}"
        )));
    }
    if !(k_v.is_finite() && k_v >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "activation must be finite and non-negative, got {k_v}"
        )));
    }
    Ok(())
}

/// Transverse stretch `ν(λ1, k_v)` at which `t2` vanishes under uniaxial
/// tension along direction 1. `Ok(None)` when no such stretch exists, i.e. at
/// or beyond the vertical asymptote.
///
/// By symmetry the same function gives the width in direction 1 induced by a
/// stretch in direction 2.
pub fn natural_width(model: &MaterialModel, lambda1: f64, k_v: f64) -> Result<Option<f64>> {
    check_inputs(lambda1, k_v)?;
    match model.moduli() {
        Some((c1, c2)) => Ok(mooney_rivlin_width(c1, c2, lambda1, k_v)),
        None => generic_width(model, lambda1, k_v),
    }
}

fn mooney_rivlin_width(c1: f64, c2: f64, lambda1: f64, k_v: f64) -> Option<f64> {
    if let Some(asym) = mooney_rivlin_asymptote(c1, c2, k_v) {
        if lambda1 >= asym {
            return None;
        }
    }
    let l_sq = lambda1 * lambda1;
    let num = c1 + c2 * l_sq;
    let den = num - k_v * l_sq;
    if den <= 0.0 {
        return None;
    }
    Some((num / den).sqrt().sqrt() / lambda1.sqrt())
}

fn mooney_rivlin_asymptote(c1: f64, c2: f64, k_v: f64) -> Option<f64> {
    (k_v > c2).then(|| (c1 / (k_v - c2)).sqrt())
}

/// Root of `t2(λ1, ·, k_v)` bracketed from the zero-voltage width `λ1^(-1/2)`.
fn generic_width(model: &MaterialModel, lambda1: f64, k_v: f64) -> Result<Option<f64>> {
    let t2 = |l2: f64| transverse_stress(model, lambda1, l2, k_v);
    let seed = 1.0 / lambda1.sqrt();
    let f_seed = t2(seed)?;
    if f_seed == 0.0 {
        return Ok(Some(seed));
    }

    let (lo, hi) = if f_seed < 0.0 {
        let mut hi = seed;
        loop {
            let next = 2.0 * hi;
            if next > STRETCH_CAP {
                return Ok(None);
            }
            if t2(next)? > 0.0 {
                break (hi, next);
            }
            hi = next;
        }
    } else {
        let mut lo = seed;
        loop {
            let next = 0.5 * lo;
            if next < WIDTH_FLOOR {
                return Ok(None);
            }
            if t2(next)? < 0.0 {
                break (next, lo);
            }
            lo = next;
        }
    };

    // Terms of t2 grow like λ1²λ2², so the attainable residual does too.
    let magnitude = 1.0 + hi * hi * (1.0 + lambda1 * lambda1);
    let tol = RESIDUAL_TOLERANCE * model.stress_scale() * magnitude;
    let f = |l2: f64| t2(l2).unwrap_or(f64::NAN);
    bisect(f, lo, hi, tol).map(Some)
}

/// Stretch `λ*` at which the natural width blows up, if any.
///
/// Mooney-Rivlin: `sqrt(c1 / (k_v − c2))` for `k_v > c2`, none otherwise.
/// Generic models: located by bracketing the onset of missing widths on
/// `[1e-3, STRETCH_CAP]`; [`Error::NotAvailable`] if no onset is found.
pub fn asymptote(model: &MaterialModel, k_v: f64) -> Result<Option<f64>> {
    check_inputs(1.0, k_v)?;
    match model.moduli() {
        Some((c1, c2)) => Ok(mooney_rivlin_asymptote(c1, c2, k_v)),
        None => generic_asymptote(model, k_v).map(Some),
    }
}

fn generic_asymptote(model: &MaterialModel, k_v: f64) -> Result<f64> {
    let grid = log_space(1e-3, STRETCH_CAP, 10 * 9 + 1);
    let exists = |l: f64| natural_width(model, l, k_v).map(|w| w.is_some());
    if !exists(grid[0])? {
        return Err(Error::NotAvailable("asymptote below the scanned range"));
    }
    let mut prev = grid[0];
    for &l in &grid[1..] {
        if !exists(l)? {
            let (mut lo, mut hi) = (prev, l);
            while hi - lo > 1e-13 * hi {
                let mid = 0.5 * (lo + hi);
                if exists(mid)? {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return Ok(hi);
        }
        prev = l;
    }
    Err(Error::NotAvailable("asymptote"))
}

fn asymptote_if_known(model: &MaterialModel, k_v: f64) -> Result<Option<f64>> {
    match asymptote(model, k_v) {
        Err(Error::NotAvailable(_)) => Ok(None),
        other => other,
    }
}

/// Activation that makes the equibiaxial state `λ1 = λ2 = λ` stress free:
/// the mechanical diagonal stress divided by `2λ⁴`.
///
/// For Mooney-Rivlin this is `c1(λ⁻² − λ⁻⁸) + c2(1 − λ⁻⁶)`.
pub fn equibiaxial_activation(model: &MaterialModel, lambda: f64) -> Result<f64> {
    check_inputs(lambda, 0.0)?;
    match model.moduli() {
        Some((c1, c2)) => {
            let inv2 = 1.0 / (lambda * lambda);
            let inv6 = inv2 * inv2 * inv2;
            Ok(c1 * (inv2 - inv6 * inv2) + c2 * (1.0 - inv6))
        }
        None => {
            let (t, _) = principal_stresses(model, lambda, lambda, 0.0)?;
            let l4 = lambda.powi(4);
            Ok(t / (2.0 * l4))
        }
    }
}

/// Equibiaxial stretches where both boundary curves meet, sorted ascending.
///
/// Roots of `equibiaxial_activation(λ) = k_v` found by a sign-change scan on a
/// log grid over `[0.1, max(10, 2λ*)]`. Local extrema of the scan are refined
/// by golden-section search so near-tangent pairs just below the critical
/// activation are not missed.
pub fn vertices(model: &MaterialModel, k_v: f64) -> Result<Vec<f64>> {
    check_inputs(1.0, k_v)?;
    let hi = match asymptote_if_known(model, k_v)? {
        Some(a) => (2.0 * a).clamp(10.0, STRETCH_CAP),
        None => 10.0,
    };
    let scale = model.stress_scale();
    let f = |l: f64| equibiaxial_activation(model, l).map(|k| k - k_v);

    let grid = log_space(VERTEX_SCAN_MIN, hi, VERTEX_SCAN_POINTS);
    let values = grid.iter().map(|&l| f(l)).collect::<Result<Vec<_>>>()?;

    let mut points: Vec<(f64, f64)> = Vec::with_capacity(grid.len() + 8);
    let mut tangent_roots = Vec::new();
    for i in 0..grid.len() {
        points.push((grid[i], values[i]));
        if i == 0 || i + 1 == grid.len() {
            continue;
        }
        let (a, b, c) = (values[i - 1], values[i], values[i + 1]);
        let peak = b >= a && b >= c && b < 0.0;
        let trough = b <= a && b <= c && b > 0.0;
        if !(peak || trough) {
            continue;
        }
        let sign = if peak { 1.0 } else { -1.0 };
        let g = |l: f64| sign * f(l).unwrap_or(f64::NAN);
        let (x, gx) = golden_section_max(g, grid[i - 1], grid[i + 1], 1e-12 * grid[i]);
        let fx = sign * gx;
        if fx.abs() <= 4.0 * f64::EPSILON * scale {
            tangent_roots.push(x);
        } else if fx.signum() != b.signum() {
            points.push((x, fx));
        }
    }
    points.sort_by(|p, q| p.0.total_cmp(&q.0));

    let tol = RESIDUAL_TOLERANCE * scale;
    let mut roots = tangent_roots;
    for w in points.windows(2) {
        let ((x0, f0), (x1, f1)) = (w[0], w[1]);
        if f0 == 0.0 {
            roots.push(x0);
        } else if f0.signum() != f1.signum() && f1 != 0.0 {
            let root = bisect(|l| f(l).unwrap_or(f64::NAN), x0, x1, tol)?;
            roots.push(root);
        }
    }
    if let Some(&(x, fx)) = points.last() {
        if fx == 0.0 {
            roots.push(x);
        }
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * b.abs());
    Ok(roots)
}

/// True iff the state lies strictly inside `D(k_v)`. A missing natural width
/// or a solver failure counts as outside.
pub fn contains(model: &MaterialModel, s: &StretchState, k_v: f64) -> bool {
    let inside = |along: f64, other: f64| match natural_width(model, other, k_v) {
        Ok(Some(w)) => along > w,
        _ => false,
    };
    inside(s.lambda1(), s.lambda2()) && inside(s.lambda2(), s.lambda1())
}

/// One point of the `t2 = 0` boundary curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundarySample {
    pub lambda1: f64,
    pub lambda2: f64,
    /// Tension carried along direction 1.
    pub t1: f64,
    /// `t2` evaluated at the sample; zero up to rounding.
    pub t2_residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "warning", rename_all = "kebab-case")]
pub enum BoundaryWarning {
    /// The requested `λ1` range reached past the asymptote and was cut there.
    TruncatedAtAsymptote { requested_max: f64, asymptote: f64 },
}

impl std::fmt::Display for BoundaryWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundaryWarning::TruncatedAtAsymptote {
                requested_max,
                asymptote,
            } => write!(
                f,
                "lambda1 range up to {requested_max} truncated at the asymptote {asymptote}"
            ),
        }
    }
}

/// Sampled lower edge of `D(k_v)`: the curve `λ2 = ν(λ1)` restricted to
/// `λ1 ≥ λ2`. The other edge is its mirror image.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DomainBoundary {
    pub k_v: f64,
    pub samples: Vec<BoundarySample>,
    pub vertices: Vec<f64>,
    pub asymptote: Option<f64>,
    pub warnings: Vec<BoundaryWarning>,
}

impl DomainBoundary {
    /// The upper edge `λ1 = ν(λ2)`, ordered by `λ2`.
    pub fn mirrored(&self) -> Vec<BoundarySample> {
        self.samples
            .iter()
            .map(|s| BoundarySample {
                lambda1: s.lambda2,
                lambda2: s.lambda1,
                t1: s.t2_residual,
                t2_residual: s.t1,
            })
            .collect()
    }
}

/// Samples the lower boundary curve at `n` log-spaced values of `λ1` in
/// `lambda1_range`. Nodes at or past the asymptote are dropped with a warning;
/// nodes where the curve lies above the diagonal belong to the mirror edge and
/// are skipped.
pub fn boundary(
    model: &MaterialModel,
    k_v: f64,
    lambda1_range: (f64, f64),
    n: usize,
) -> Result<DomainBoundary> {
    let (lo, hi) = lambda1_range;
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 samples, got {n}"
        )));
    }
    if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && hi > lo) {
        return Err(Error::InvalidArgument(format!(
            "invalid lambda1 range [{lo}, {hi}]"
        )));
    }
    check_inputs(1.0, k_v)?;

    let asym = asymptote_if_known(model, k_v)?;
    let mut warnings = Vec::new();
    let mut top = hi;
    if let Some(a) = asym {
        if hi >= a {
            warnings.push(BoundaryWarning::TruncatedAtAsymptote {
                requested_max: hi,
                asymptote: a,
            });
            top = a;
        }
    }

    let mut samples = Vec::with_capacity(n);
    if top > lo {
        for l1 in log_space(lo, top, n) {
            let Some(l2) = natural_width(model, l1, k_v)? else {
                continue;
            };
            if l2 > l1 {
                continue;
            }
            let (t1, t2) = principal_stresses(model, l1, l2, k_v)?;
            samples.push(BoundarySample {
                lambda1: l1,
                lambda2: l2,
                t1,
                t2_residual: t2,
            });
        }
    }

    Ok(DomainBoundary {
        k_v,
        samples,
        vertices: vertices(model, k_v)?,
        asymptote: asym,
        warnings,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriticalMethod {
    ClosedForm,
    Numerical,
}

/// Activation at which the two vertices coalesce and `D` becomes empty.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalPoint {
    pub k_v_crit: f64,
    pub lambda_crit: f64,
    pub method: CriticalMethod,
}

/// `k_crit = 3μ / 2^(11/3)` and `λ_crit = 2^(1/3)`, for Neo-Hookean models only.
pub fn critical_activation_closed_form(model: &MaterialModel) -> Option<CriticalPoint> {
    if !model.is_neo_hookean() {
        return None;
    }
    let (c1, _) = model.moduli()?;
    let mu = 2.0 * c1;
    Some(CriticalPoint {
        k_v_crit: 3.0 * mu / 2f64.powf(11.0 / 3.0),
        lambda_crit: 2f64.cbrt(),
        method: CriticalMethod::ClosedForm,
    })
}

/// Maximizes [`equibiaxial_activation`] over `λ ∈ [1, STRETCH_CAP]`: a
/// 64-point log scan isolates the peak, golden-section search refines it.
pub fn critical_activation_numeric(model: &MaterialModel) -> Result<CriticalPoint> {
    let grid = log_space(1.0, STRETCH_CAP, CRITICAL_SCAN_POINTS);
    let values = grid
        .iter()
        .map(|&l| equibiaxial_activation(model, l))
        .collect::<Result<Vec<_>>>()?;
    let (imax, &kmax) = values
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("non-empty grid");
    if imax + 1 == grid.len() {
        return Err(Error::Unbounded { cap: STRETCH_CAP });
    }
    if kmax <= 0.0 {
        return Err(Error::Solver {
            reason: "equibiaxial activation is never positive; no tensile vertex exists".into(),
            lo: grid[0],
            hi: grid[grid.len() - 1],
        });
    }
    let lo = grid[imax.saturating_sub(1)];
    let hi = grid[imax + 1];
    let f = |l: f64| equibiaxial_activation(model, l).unwrap_or(f64::NEG_INFINITY);
    let (lambda_crit, k_v_crit) = golden_section_max(f, lo, hi, 1e-12 * grid[imax]);
    if !k_v_crit.is_finite() {
        return Err(Error::MaterialEvaluation {
            lambda1: lambda_crit,
            lambda2: lambda_crit,
        });
    }
    Ok(CriticalPoint {
        k_v_crit,
        lambda_crit,
        method: CriticalMethod::Numerical,
    })
}

/// Closed form when the model admits one, numerical search otherwise.
pub fn critical_activation(model: &MaterialModel) -> Result<CriticalPoint> {
    match critical_activation_closed_form(model) {
        Some(cp) => Ok(cp),
        None => critical_activation_numeric(model),
    }
}
