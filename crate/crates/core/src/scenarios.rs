//! Homogeneous actuation problems: a free membrane under voltage and a
//! membrane held at a prestretch in direction 2.

use serde::{Deserialize, Serialize};

use crate::domain::{critical_activation, natural_width, vertices, CriticalPoint};
use crate::error::{Error, Result};
use crate::material::MaterialModel;
use crate::solve::golden_section_max;
use crate::stress::BOUNDARY_TOLERANCE;

/// Activation search cap, relative to `max(μ, 1)`.
pub const ACTIVATION_CAP_FACTOR: f64 = 1e3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// Smaller stretch; the physical actuation branch.
    Lower,
    /// Larger stretch; thickens as activation grows, argued unstable.
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumState {
    pub lambda: f64,
    pub branch: Branch,
}

/// Equibiaxial equilibria of a free membrane at one activation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumBranch {
    pub k_v: f64,
    pub states: Vec<EquilibriumState>,
}

/// Free (unclamped) membrane: equilibria are the equibiaxial vertices of
/// `D(k_v)`. Empty past pull-in.
pub fn free_actuation(model: &MaterialModel, k_v: f64) -> Result<EquilibriumBranch> {
    let roots = vertices(model, k_v)?;
    let last = roots.len().saturating_sub(1);
    let states = roots
        .iter()
        .enumerate()
        .map(|(i, &lambda)| EquilibriumState {
            lambda,
            branch: if i == last && last > 0 {
                Branch::Upper
            } else {
                Branch::Lower
            },
        })
        .collect();
    Ok(EquilibriumBranch { k_v, states })
}

/// Pull-in activation and stretch of the free membrane.
pub fn pull_in(model: &MaterialModel) -> Result<CriticalPoint> {
    critical_activation(model)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrestretchDiagnostic {
    /// The prestretch is at or past the asymptote: no `λ1` makes `t1` vanish.
    BeyondAsymptote,
    /// The solved `λ1` is past the asymptote, so `t2 < 0` at any prestretch.
    TransverseWidthMissing,
    /// The prestretch is below the natural width of the solved `λ1`.
    Compressed,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrestretchSolution {
    pub prestretch: f64,
    pub k_v: f64,
    pub lambda1: Option<f64>,
    /// The equilibrium lies in the closure of `D(k_v)`.
    pub feasible: bool,
    pub diagnostic: Option<PrestretchDiagnostic>,
}

/// Membrane clamped at `λ2 = prestretch`; `λ1` relaxes until `t1 = 0`, which
/// puts the state on the boundary curve `λ1 = ν(λ2)`.
pub fn prestretched_actuation(
    model: &MaterialModel,
    prestretch: f64,
    k_v: f64,
) -> Result<PrestretchSolution> {
    if !(prestretch.is_finite() && prestretch > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "prestretch must be positive, got {prestretch}"
        )));
    }
    let mut sol = PrestretchSolution {
        prestretch,
        k_v,
        lambda1: None,
        feasible: false,
        diagnostic: None,
    };
    let Some(lambda1) = natural_width(model, prestretch, k_v)? else {
        sol.diagnostic = Some(PrestretchDiagnostic::BeyondAsymptote);
        return Ok(sol);
    };
    sol.lambda1 = Some(lambda1);
    match natural_width(model, lambda1, k_v)? {
        None => sol.diagnostic = Some(PrestretchDiagnostic::TransverseWidthMissing),
        Some(w) if prestretch >= w - BOUNDARY_TOLERANCE => sol.feasible = true,
        Some(_) => sol.diagnostic = Some(PrestretchDiagnostic::Compressed),
    }
    Ok(sol)
}

fn feasible(model: &MaterialModel, prestretch: f64, k_v: f64) -> Result<bool> {
    prestretched_actuation(model, prestretch, k_v).map(|s| s.feasible)
}

/// Largest activation the prestretched membrane sustains, by bisection on the
/// feasibility predicate. Zero when it is infeasible from the start.
pub fn max_activation_for_prestretch(model: &MaterialModel, prestretch: f64) -> Result<f64> {
    if !feasible(model, prestretch, 0.0)? {
        return Ok(0.0);
    }
    let cap = ACTIVATION_CAP_FACTOR * model.stress_scale();
    if feasible(model, prestretch, cap)? {
        return Err(Error::Unbounded { cap });
    }
    let (mut lo, mut hi) = (0.0_f64, cap);
    for _ in 0..2000 {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        if feasible(model, prestretch, mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimalPrestretch {
    pub prestretch: f64,
    pub k_v: f64,
}

/// Prestretch that maximizes the sustainable activation, searched by
/// golden-section over `[1, 4 λ_crit]`.
pub fn optimal_prestretch(model: &MaterialModel) -> Result<OptimalPrestretch> {
    let cp = critical_activation(model)?;
    let f = |p: f64| max_activation_for_prestretch(model, p).unwrap_or(f64::NEG_INFINITY);
    let (prestretch, k_v) = golden_section_max(f, 1.0, 4.0 * cp.lambda_crit, 1e-7);
    if !k_v.is_finite() {
        // Surface the underlying error.
        max_activation_for_prestretch(model, prestretch)?;
    }
    Ok(OptimalPrestretch { prestretch, k_v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{critical_activation_closed_form, equibiaxial_activation};

    fn nh(mu: f64) -> MaterialModel {
        MaterialModel::neo_hookean(mu).unwrap()
    }

    #[test]
    fn free_unloaded_membrane() {
        let b = free_actuation(&nh(1.0), 0.0).unwrap();
        assert_eq!(b.states.len(), 1);
        assert!((b.states[0].lambda - 1.0).abs() < 1e-14);
        assert_eq!(b.states[0].branch, Branch::Lower);
    }

    #[test]
    fn free_two_branches_and_pull_in() {
        let b = free_actuation(&nh(1.0), 0.2).unwrap();
        assert_eq!(b.states.len(), 2);
        let crit = 2f64.cbrt();
        assert_eq!(b.states[0].branch, Branch::Lower);
        assert_eq!(b.states[1].branch, Branch::Upper);
        assert!(b.states[0].lambda < crit && crit < b.states[1].lambda);
        assert!(free_actuation(&nh(1.0), 0.25).unwrap().states.is_empty());
    }

    #[test]
    fn pull_in_scales_with_modulus() {
        let p = pull_in(&nh(3.0)).unwrap();
        assert!((p.k_v_crit - 0.708_706).abs() < 1e-6);
        assert!((p.lambda_crit - 1.259_921).abs() < 1e-6);
    }

    #[test]
    fn prestretch_at_zero_voltage() {
        let s = prestretched_actuation(&nh(1.0), 1.5, 0.0).unwrap();
        assert!((s.lambda1.unwrap() - 1.5f64.powf(-0.5)).abs() < 1e-15);
        assert!(s.feasible);
        assert_eq!(s.diagnostic, None);
    }

    #[test]
    fn prestretch_beyond_asymptote_is_infeasible() {
        let m = MaterialModel::mooney_rivlin(1.0, 1.0).unwrap();
        let s = prestretched_actuation(&m, 1.0, 2.0).unwrap();
        assert!(!s.feasible);
        assert_eq!(s.lambda1, None);
        assert_eq!(s.diagnostic, Some(PrestretchDiagnostic::BeyondAsymptote));
        assert!(prestretched_actuation(&m, 0.0, 0.0).is_err());
        assert!(prestretched_actuation(&m, -1.0, 0.0).is_err());
    }

    #[test]
    fn prestretch_at_critical_stretch_is_marginal() {
        let cp = critical_activation_closed_form(&nh(1.0)).unwrap();
        let s =
            prestretched_actuation(&nh(1.0), cp.lambda_crit, cp.k_v_crit * (1.0 - 1e-9)).unwrap();
        assert!(s.feasible);
        assert!((s.lambda1.unwrap() - cp.lambda_crit).abs() < 1e-3);
        let s = prestretched_actuation(&nh(1.0), cp.lambda_crit, cp.k_v_crit * 1.01).unwrap();
        assert!(!s.feasible);
    }

    #[test]
    fn max_activation_follows_equibiaxial_curve() {
        // For prestretch ≥ 1 the threshold is the activation that puts the
        // prestretch on a vertex: equibiaxial_activation(prestretch).
        let m = nh(1.0);
        for &p in &[1.1, 1.3, 2.0, 3.0] {
            let k = max_activation_for_prestretch(&m, p).unwrap();
            let oracle = 0.5 * (p.powi(-2) - p.powi(-8));
            assert!((k - oracle).abs() < 1e-7, "{p}: {k} vs {oracle}");
            assert!((equibiaxial_activation(&m, p).unwrap() - oracle).abs() < 1e-15);
        }
        let kc = critical_activation_closed_form(&m).unwrap().k_v_crit;
        assert!(max_activation_for_prestretch(&m, 1.0).unwrap() < 1e-7);
        assert!(max_activation_for_prestretch(&m, 3.0).unwrap() < kc);
        assert_eq!(max_activation_for_prestretch(&m, 0.8).unwrap(), 0.0);
    }

    #[test]
    fn optimal_prestretch_neo_hookean() {
        for mu in [0.5, 1.0, 2.0] {
            let m = nh(mu);
            let opt = optimal_prestretch(&m).unwrap();
            let cp = critical_activation_closed_form(&m).unwrap();
            assert!((opt.prestretch - cp.lambda_crit).abs() < 1e-5 * cp.lambda_crit);
            assert!((opt.k_v - cp.k_v_crit).abs() < 1e-5 * cp.k_v_crit);
        }
    }
}
