//! First-integral candidates tagged by how they are pulled back to the phase space.

use invariant_solver::is_invariant;
use lie_core::SubalgebraSpec;
use poly_engine::{FloatPoly, Polynomial};
use serde::{Deserialize, Serialize};

use crate::error::{MagneticError, Result};
use crate::system::{moment_map, slice_map, MagneticSystem, PhasePoint};

/// A polynomial in the algebra coordinates together with a fast evaluator.
#[derive(Clone, Debug)]
pub struct TaggedPoly {
    pub poly: Polynomial,
    pub float: FloatPoly,
}

impl TaggedPoly {
    fn new(sys: &MagneticSystem, poly: Polynomial) -> Result<Self> {
        if **poly.vars() != sys.alg.coordinate_names {
            return Err(MagneticError::VariableMismatch { got: (**poly.vars()).clone() });
        }
        Ok(TaggedPoly { float: FloatPoly::new(&poly), poly })
    }
}

/// `pi* theta` for a polynomial `theta` of `xi`, with the result of the invariance check.
#[derive(Clone, Debug)]
pub struct SliceFn {
    pub theta: TaggedPoly,
    /// False when `theta` is not `A`-invariant; bracket identities are then not guaranteed.
    pub invariant: bool,
}

#[derive(Clone, Debug)]
pub enum IntegralFunction {
    /// `h o P` for a polynomial `h` on the algebra.
    Moment(TaggedPoly),
    /// `theta o pi_m`.
    Slice(SliceFn),
    Sum(Vec<IntegralFunction>),
    Product(Box<IntegralFunction>, Box<IntegralFunction>),
    Scaled(f64, Box<IntegralFunction>),
}

impl IntegralFunction {
    pub fn moment(sys: &MagneticSystem, h: Polynomial) -> Result<Self> {
        Ok(IntegralFunction::Moment(TaggedPoly::new(sys, h)?))
    }

    /// The `i`-th component `P_i` of the moment map.
    pub fn moment_component(sys: &MagneticSystem, i: usize) -> Self {
        let vars = std::sync::Arc::new(sys.alg.coordinate_names.clone());
        Self::moment(sys, Polynomial::var(&vars, i)).expect("coordinate variables")
    }

    /// Slice pullback of a polynomial in either the full coordinates or the `m` coordinates.
    pub fn slice(sys: &MagneticSystem, theta: Polynomial) -> Result<Self> {
        let full = std::sync::Arc::new(sys.alg.coordinate_names.clone());
        let theta = if **theta.vars() == *full { theta } else { theta.embed(&full)? };
        let invariant = is_invariant(&sys.sub, &theta, false);
        Ok(IntegralFunction::Slice(SliceFn { theta: TaggedPoly::new(sys, theta)?, invariant }))
    }

    pub fn product(a: IntegralFunction, b: IntegralFunction) -> Self {
        IntegralFunction::Product(Box::new(a), Box::new(b))
    }

    pub fn scaled(s: f64, a: IntegralFunction) -> Self {
        IntegralFunction::Scaled(s, Box::new(a))
    }

    pub fn evaluate(&self, sys: &MagneticSystem, pt: &PhasePoint) -> f64 {
        match self {
            IntegralFunction::Moment(h) => h.float.eval(&moment_map(sys, pt)),
            IntegralFunction::Slice(s) => s.theta.float.eval(&slice_map(sys, pt)),
            IntegralFunction::Sum(parts) => parts.iter().map(|p| p.evaluate(sys, pt)).sum(),
            IntegralFunction::Product(a, b) => a.evaluate(sys, pt) * b.evaluate(sys, pt),
            IntegralFunction::Scaled(s, a) => s * a.evaluate(sys, pt),
        }
    }

    /// Every slice factor passed the invariance check.
    pub fn slice_parts_invariant(&self) -> bool {
        match self {
            IntegralFunction::Moment(_) => true,
            IntegralFunction::Slice(s) => s.invariant,
            IntegralFunction::Sum(parts) => parts.iter().all(|p| p.slice_parts_invariant()),
            IntegralFunction::Product(a, b) => a.slice_parts_invariant() && b.slice_parts_invariant(),
            IntegralFunction::Scaled(_, a) => a.slice_parts_invariant(),
        }
    }

    /// Short human-readable label.
    pub fn label(&self) -> String {
        match self {
            IntegralFunction::Moment(h) => format!("P*({})", h.poly.to_text()),
            IntegralFunction::Slice(s) => format!("pi*({})", s.theta.poly.to_text()),
            IntegralFunction::Sum(parts) => parts.iter().map(|p| p.label()).collect::<Vec<_>>().join(" + "),
            IntegralFunction::Product(a, b) => format!("({}) * ({})", a.label(), b.label()),
            IntegralFunction::Scaled(s, a) => format!("{s} * ({})", a.label()),
        }
    }
}

/// Serializable description of a tagged function, for configuration files.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FunctionSpec {
    Moment { poly: String },
    Slice { poly: String },
}

impl FunctionSpec {
    /// Polynomials are parsed in the full algebra coordinates.
    pub fn build(&self, sys: &MagneticSystem) -> Result<IntegralFunction> {
        let vars = std::sync::Arc::new(sys.alg.coordinate_names.clone());
        match self {
            FunctionSpec::Moment { poly } => IntegralFunction::moment(sys, Polynomial::parse(poly, &vars)?),
            FunctionSpec::Slice { poly } => IntegralFunction::slice(sys, Polynomial::parse(poly, &vars)?),
        }
    }
}

/// Whether `theta`, written in the `m` coordinates, is `A`-invariant.
pub fn slice_invariant(sub: &SubalgebraSpec, theta: &Polynomial) -> bool {
    is_invariant(sub, theta, true)
}
