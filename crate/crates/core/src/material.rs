//! Incompressible isotropic materials described by their response functions.
//!
//! The elastic Cauchy stress of an incompressible isotropic solid is
//! `-π I + β1 B + β2 B⁻¹`. Everything downstream only needs pointwise values of
//! `β1` and `β2` at a pair of in-plane principal stretches, so a material is
//! exactly that pair of functions plus whatever moduli are known in closed form.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

type ResponseFn = dyn Fn(f64, f64) -> f64 + Send + Sync;

/// Constitutive family tag.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MaterialKind {
    MooneyRivlin { c1: f64, c2: f64 },
    NeoHookean { mu: f64 },
    Generic,
}

#[derive(Clone)]
enum Response {
    Constant {
        beta1: f64,
        beta2: f64,
    },
    Callback {
        beta1: Arc<ResponseFn>,
        beta2: Arc<ResponseFn>,
        shear_modulus: Option<f64>,
    },
}

/// Immutable material model. Cheap to clone and safe to share across threads.
#[derive(Clone)]
pub struct MaterialModel {
    kind: MaterialKind,
    response: Response,
}

impl fmt::Debug for MaterialModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MaterialModel")
            .field("kind", &self.kind)
            .finish()
    }
}

impl MaterialModel {
    /// Mooney-Rivlin solid with `β1 = 2 c1`, `β2 = -2 c2`.
    pub fn mooney_rivlin(c1: f64, c2: f64) -> Result<Self> {
        if !(c1.is_finite() && c2.is_finite()) || c1 < 0.0 || c2 < 0.0 {
            return Err(Error::DegenerateMaterial(format!(
                "Mooney-Rivlin moduli must be finite and non-negative, got c1={c1}, c2={c2}"
            )));
        }
        if c1 + c2 <= 0.0 {
            return Err(Error::DegenerateMaterial(
                "Mooney-Rivlin moduli c1 and c2 are both zero".into(),
            ));
        }
        Ok(Self {
            kind: MaterialKind::MooneyRivlin { c1, c2 },
            response: Response::Constant {
                beta1: 2.0 * c1,
                beta2: -2.0 * c2,
            },
        })
    }

    /// Neo-Hookean solid, i.e. Mooney-Rivlin with `c1 = mu/2`, `c2 = 0`.
    pub fn neo_hookean(mu: f64) -> Result<Self> {
        if !mu.is_finite() || mu <= 0.0 {
            return Err(Error::DegenerateMaterial(format!(
                "Neo-Hookean shear modulus must be positive, got mu={mu}"
            )));
        }
        let mr = Self::mooney_rivlin(0.5 * mu, 0.0)?;
        Ok(Self {
            kind: MaterialKind::NeoHookean { mu },
            ..mr
        })
    }

    /// Material given by arbitrary response functions `β1(λ1, λ2)` and
    /// `β2(λ1, λ2)`. The callbacks must be finite wherever the solvers query
    /// them; non-finite values surface as [`Error::MaterialEvaluation`].
    pub fn generic<B1, B2>(beta1: B1, beta2: B2, shear_modulus: Option<f64>) -> Result<Self>
    where
        B1: Fn(f64, f64) -> f64 + Send + Sync + 'static,
        B2: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        if let Some(mu) = shear_modulus {
            if !mu.is_finite() || mu <= 0.0 {
                return Err(Error::DegenerateMaterial(format!(
                    "declared shear modulus must be positive, got {mu}"
                )));
            }
        }
        Ok(Self {
            kind: MaterialKind::Generic,
            response: Response::Callback {
                beta1: Arc::new(beta1),
                beta2: Arc::new(beta2),
                shear_modulus,
            },
        })
    }

    pub fn kind(&self) -> MaterialKind {
        self.kind
    }

    /// `(c1, c2)` for Mooney-Rivlin and Neo-Hookean models.
    pub fn moduli(&self) -> Option<(f64, f64)> {
        match self.kind {
            MaterialKind::MooneyRivlin { c1, c2 } => Some((c1, c2)),
            MaterialKind::NeoHookean { mu } => Some((0.5 * mu, 0.0)),
            MaterialKind::Generic => None,
        }
    }

    /// True when the model reduces to Neo-Hookean (`c2 = 0`), which has
    /// closed-form critical values.
    pub fn is_neo_hookean(&self) -> bool {
        matches!(self.moduli(), Some((c1, c2)) if c1 > 0.0 && c2 == 0.0)
    }

    /// `μ = 2 (c1 + c2)`, or the declared modulus of a generic model.
    pub fn shear_modulus(&self) -> Result<f64> {
        match (&self.kind, &self.response) {
            (MaterialKind::NeoHookean { mu }, _) => Ok(*mu),
            (MaterialKind::MooneyRivlin { c1, c2 }, _) => Ok(2.0 * (c1 + c2)),
            (
                MaterialKind::Generic,
                Response::Callback {
                    shear_modulus: Some(mu),
                    ..
                },
            ) => Ok(*mu),
            _ => Err(Error::NotAvailable("shear modulus")),
        }
    }

    /// Stress scale used to make residual tolerances relative: `max(μ, 1)`,
    /// with `μ = 1` assumed when no modulus is known.
    pub fn stress_scale(&self) -> f64 {
        self.shear_modulus().unwrap_or(1.0).max(1.0)
    }

    pub fn beta1(&self, lambda1: f64, lambda2: f64) -> f64 {
        match &self.response {
            Response::Constant { beta1, .. } => *beta1,
            Response::Callback { beta1, .. } => beta1(lambda1, lambda2),
        }
    }

    pub fn beta2(&self, lambda1: f64, lambda2: f64) -> f64 {
        match &self.response {
            Response::Constant { beta2, .. } => *beta2,
            Response::Callback { beta2, .. } => beta2(lambda1, lambda2),
        }
    }

    /// Returns the same model with every stress scaled by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        if !factor.is_finite() || factor <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "scale factor must be positive, got {factor}"
            )));
        }
        match (&self.kind, &self.response) {
            (MaterialKind::MooneyRivlin { c1, c2 }, _) => {
                Self::mooney_rivlin(c1 * factor, c2 * factor)
            }
            (MaterialKind::NeoHookean { mu }, _) => Self::neo_hookean(mu * factor),
            (
                MaterialKind::Generic,
                Response::Callback {
                    beta1,
                    beta2,
                    shear_modulus,
                },
            ) => {
                let (b1, b2) = (Arc::clone(beta1), Arc::clone(beta2));
                Self::generic(
                    move |l1, l2| factor * b1(l1, l2),
                    move |l1, l2| factor * b2(l1, l2),
                    shear_modulus.map(|mu| mu * factor),
                )
            }
            (MaterialKind::Generic, Response::Constant { .. }) => unreachable!(),
        }
    }
}
