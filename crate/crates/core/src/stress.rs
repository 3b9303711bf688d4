//! In-plane principal stresses of an electrically activated membrane.
//!
//! The through-thickness stress vanishes on the electroded faces, which fixes
//! the reactive pressure. With `λ3 = 1/(λ1 λ2)` and the field folded into the
//! activation parameter `k_v`, the in-plane stresses are
//!
//! ```text
//! t_i = β1 (λi² − λ3²) + β2 (λi⁻² − λ3⁻²) − 2 k_v λ1² λ2²
//! ```
//!
//! For Mooney-Rivlin (`β1 = 2c1`, `β2 = −2c2`) this is the familiar
//! `2[c1(λi² − λ1⁻²λ2⁻²) − c2(λi⁻² − λ1²λ2²) − k_v λ1²λ2²]`.

use serde::{Deserialize, Serialize};

use crate::domain::natural_width;
use crate::error::{Error, Result};
use crate::material::MaterialModel;

/// Absolute tolerance, in stretch units, for deciding that a state sits on
/// the boundary of the tensile domain.
pub const BOUNDARY_TOLERANCE: f64 = 1e-9;

/// In-plane principal stretches. The thickness stretch follows from
/// incompressibility and is never stored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StretchState {
    lambda1: f64,
    lambda2: f64,
}

impl StretchState {
    pub fn new(lambda1: f64, lambda2: f64) -> Result<Self> {
        let ok = |l: f64| l.is_finite() && l > 0.0;
        if ok(lambda1) && ok(lambda2) {
            Ok(Self { lambda1, lambda2 })
        } else {
            Err(Error::InvalidStretch { lambda1, lambda2 })
        }
    }

    pub fn equibiaxial(lambda: f64) -> Result<Self> {
        Self::new(lambda, lambda)
    }

    pub fn lambda1(&self) -> f64 {
        self.lambda1
    }

    pub fn lambda2(&self) -> f64 {
        self.lambda2
    }

    pub fn lambda3(&self) -> f64 {
        1.0 / (self.lambda1 * self.lambda2)
    }

    pub fn swapped(&self) -> Self {
        Self {
            lambda1: self.lambda2,
            lambda2: self.lambda1,
        }
    }
}

/// Electric loading of the membrane, either given directly as the activation
/// parameter or as permittivity, voltage and reference thickness.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElectricLoad {
    Activation {
        k_v: f64,
    },
    Field {
        permittivity: f64,
        voltage: f64,
        thickness: f64,
    },
}

/// `k_v = ε V² / (2 h²)`, the electric energy density per unit reference volume.
pub fn activation_parameter(load: &ElectricLoad) -> Result<f64> {
    match *load {
        ElectricLoad::Activation { k_v } => {
            if k_v.is_finite() && k_v >= 0.0 {
                Ok(k_v)
            } else {
                Err(Error::InvalidLoad(format!(
                    "activation must be finite and non-negative, got {k_v}"
                )))
            }
        }
        ElectricLoad::Field {
            permittivity,
            voltage,
            thickness,
        } => {
            if !(permittivity.is_finite() && permittivity > 0.0) {
                return Err(Error::InvalidLoad(format!(
                    "permittivity must be positive, got {permittivity}"
                )));
            }
            if !(thickness.is_finite() && thickness > 0.0) {
                return Err(Error::InvalidLoad(format!(
                    "thickness must be positive, got {thickness}"
                )));
            }
            if !voltage.is_finite() {
                return Err(Error::InvalidLoad(format!(
                    "voltage must be finite, got {voltage}"
                )));
            }
            Ok(permittivity * voltage * voltage / (2.0 * thickness * thickness))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// Both principal stresses tensile.
    Tense,
    /// Tension along direction 1, wrinkles running along direction 1.
    #[serde(rename = "wrinkled-along-1")]
    WrinkledAlong1,
    #[serde(rename = "wrinkled-along-2")]
    WrinkledAlong2,
    /// No tension in either direction.
    Slack,
}

impl Regime {
    fn from_flags(tense1: bool, tense2: bool) -> Self {
        match (tense1, tense2) {
            (true, true) => Regime::Tense,
            (true, false) => Regime::WrinkledAlong1,
            (false, true) => Regime::WrinkledAlong2,
            (false, false) => Regime::Slack,
        }
    }

    /// Regime read directly off the stress signs.
    pub fn from_signs(t1: f64, t2: f64) -> Self {
        Self::from_flags(t1 > 0.0, t2 > 0.0)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Tense => "tense",
            Regime::WrinkledAlong1 => "wrinkled-along-1",
            Regime::WrinkledAlong2 => "wrinkled-along-2",
            Regime::Slack => "slack",
        }
    }
}

impl std::str::FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tense" => Ok(Regime::Tense),
            "wrinkled-along-1" => Ok(Regime::WrinkledAlong1),
            "wrinkled-along-2" => Ok(Regime::WrinkledAlong2),
            "slack" => Ok(Regime::Slack),
            _ => Err(Error::InvalidArgument(format!("unknown regime {s:?}"))),
        }
    }
}

/// Why a relaxed stress fell back to the slack state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelaxationDiagnostic {
    /// The natural width needed for the uniaxial state does not exist
    /// (stretch at or beyond the asymptote).
    NaturalWidthMissing,
    /// The uniaxial state at the natural width carries no tension.
    NoUniaxialTension,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneStress {
    pub t1: f64,
    pub t2: f64,
    pub regime: Regime,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<RelaxationDiagnostic>,
}

/// Raw in-plane principal stresses; the regime tag follows the stress signs.
pub fn plane_stress(model: &MaterialModel, s: &StretchState, k_v: f64) -> Result<PlaneStress> {
    let (t1, t2) = principal_stresses(model, s.lambda1, s.lambda2, k_v)?;
    Ok(PlaneStress {
        t1,
        t2,
        regime: Regime::from_signs(t1, t2),
        diagnostic: None,
    })
}

/// `(t1, t2)` without validation of the stretch pair.
pub(crate) fn principal_stresses(
    model: &MaterialModel,
    lambda1: f64,
    lambda2: f64,
    k_v: f64,
) -> Result<(f64, f64)> {
    let b1 = model.beta1(lambda1, lambda2);
    let b2 = model.beta2(lambda1, lambda2);
    if !(b1.is_finite() && b2.is_finite()) {
        return Err(Error::MaterialEvaluation { lambda1, lambda2 });
    }
    let areal = lambda1 * lambda2;
    let areal_sq = areal * areal;
    let thick_sq = 1.0 / areal_sq;
    let electric = 2.0 * k_v * areal_sq;
    let component = |l: f64| {
        let l_sq = l * l;
        b1 * (l_sq - thick_sq) + b2 * (1.0 / l_sq - areal_sq) - electric
    };
    Ok((component(lambda1), component(lambda2)))
}

/// Only `t2`; the natural-width solver calls this in its inner loop.
pub(crate) fn transverse_stress(
    model: &MaterialModel,
    lambda1: f64,
    lambda2: f64,
    k_v: f64,
) -> Result<f64> {
    principal_stresses(model, lambda1, lambda2, k_v).map(|(_, t2)| t2)
}

/// Stored energy minus electric work for Mooney-Rivlin materials:
/// `c1(I1 − 3) + c2(I2 − 3) − k_v λ1² λ2²`.
///
/// Satisfies `t_i = λ_i ∂W/∂λ_i`, which the tests use as an independent check
/// of [`plane_stress`].
pub fn reduced_energy(model: &MaterialModel, s: &StretchState, k_v: f64) -> Result<f64> {
    let (c1, c2) = model
        .moduli()
        .ok_or(Error::NotAvailable("reduced energy"))?;
    let (l1sq, l2sq) = (s.lambda1 * s.lambda1, s.lambda2 * s.lambda2);
    let areal_sq = l1sq * l2sq;
    let i1 = l1sq + l2sq + 1.0 / areal_sq;
    let i2 = 1.0 / l1sq + 1.0 / l2sq + areal_sq;
    Ok(c1 * (i1 - 3.0) + c2 * (i2 - 3.0) - k_v * areal_sq)
}

/// Result of classifying a stretch state against the tensile domain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub regime: Regime,
    /// The state lies within [`BOUNDARY_TOLERANCE`] of a natural-width curve.
    pub on_boundary: bool,
    /// `ν(λ2)`, the natural width in direction 1; `None` past the asymptote.
    pub width1: Option<f64>,
    /// `ν(λ1)`, the natural width in direction 2.
    pub width2: Option<f64>,
}

/// Classifies a state by comparing each stretch with the natural width
/// induced by the other one. A missing natural width counts as infinite.
pub fn classify(model: &MaterialModel, s: &StretchState, k_v: f64) -> Result<Classification> {
    let width1 = natural_width(model, s.lambda2, k_v)?;
    let width2 = natural_width(model, s.lambda1, k_v)?;
    let margin = |l: f64, w: Option<f64>| w.map(|w| l - w);
    let d1 = margin(s.lambda1, width1);
    let d2 = margin(s.lambda2, width2);
    let above = |d: Option<f64>| matches!(d, Some(d) if d > BOUNDARY_TOLERANCE);
    let near = |d: Option<f64>| matches!(d, Some(d) if d.abs() <= BOUNDARY_TOLERANCE);
    Ok(Classification {
        regime: Regime::from_flags(above(d1), above(d2)),
        on_boundary: near(d1) || near(d2),
        width1,
        width2,
    })
}

/// Tension-field relaxed stress: compressive components are released by
/// wrinkling. A wrinkled state carries the uniaxial tension of the state at
/// its natural width; a slack state carries nothing.
pub fn relaxed_stress(model: &MaterialModel, s: &StretchState, k_v: f64) -> Result<PlaneStress> {
    let class = classify(model, s, k_v)?;
    let slack = |diagnostic| PlaneStress {
        t1: 0.0,
        t2: 0.0,
        regime: Regime::Slack,
        diagnostic,
    };
    match class.regime {
        Regime::Tense => {
            let (t1, t2) = principal_stresses(model, s.lambda1, s.lambda2, k_v)?;
            Ok(PlaneStress {
                t1: t1.max(0.0),
                t2: t2.max(0.0),
                regime: Regime::Tense,
                diagnostic: None,
            })
        }
        Regime::WrinkledAlong1 => match class.width2 {
            None => Ok(slack(Some(RelaxationDiagnostic::NaturalWidthMissing))),
            Some(w) => {
                let (t1, _) = principal_stresses(model, s.lambda1, w, k_v)?;
                if t1 > 0.0 {
                    Ok(PlaneStress {
                        t1,
                        t2: 0.0,
                        regime: Regime::WrinkledAlong1,
                        diagnostic: None,
                    })
                } else {
                    Ok(slack(Some(RelaxationDiagnostic::NoUniaxialTension)))
                }
            }
        },
        Regime::WrinkledAlong2 => match class.width1 {
            None => Ok(slack(Some(RelaxationDiagnostic::NaturalWidthMissing))),
            Some(w) => {
                let (_, t2) = principal_stresses(model, w, s.lambda2, k_v)?;
                if t2 > 0.0 {
                    Ok(PlaneStress {
                        t1: 0.0,
                        t2,
                        regime: Regime::WrinkledAlong2,
                        diagnostic: None,
                    })
                } else {
                    Ok(slack(Some(RelaxationDiagnostic::NoUniaxialTension)))
                }
            }
        },
        Regime::Slack => Ok(slack(None)),
    }
}
