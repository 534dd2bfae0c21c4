//! Fixed-step RK4 on `(g, X)` with polar reprojection of `g` after every step.

use lie_core::group::unitarity_defect;
use lie_core::{adjoint_group, exp_map, GroupElement};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{MagneticError, Result};
use crate::fields::{field_raw, geodesic_field};
use crate::integrals::IntegralFunction;
use crate::system::{MagneticSystem, PhasePoint, TangentVector};

/// Largest unitarity defect tolerated before a step is reprojected.
pub const STEP_DRIFT_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlowMethod {
    pub integrator: String,
    pub dt: f64,
    pub hamiltonian: String,
}

#[derive(Clone, Debug)]
pub struct FlowTrajectory {
    pub times: Vec<f64>,
    pub points: Vec<PhasePoint>,
    pub method: FlowMethod,
}

type State = (DMatrix<Complex64>, Vec<f64>);

fn derivative(sys: &MagneticSystem, s: &State, f: Option<&IntegralFunction>) -> State {
    let t: TangentVector = match f {
        None => geodesic_field(sys, &s.1),
        Some(f) => field_raw(sys, &s.0, &s.1, f),
    };
    let gdot = &s.0 * sys.num.to_matrix(&sys.sub.embed_m(&t.v));
    (gdot, t.fiber_velocity(sys, &s.1))
}

fn axpy(s: &State, h: f64, d: &State) -> State {
    let g = &s.0 + &d.0 * Complex64::new(h, 0.0);
    let x = s.1.iter().zip(&d.1).map(|(a, b)| a + h * b).collect();
    (g, x)
}

fn rk4_step(sys: &MagneticSystem, s: &State, dt: f64, f: Option<&IntegralFunction>) -> State {
    let k1 = derivative(sys, s, f);
    let k2 = derivative(sys, &axpy(s, dt / 2.0, &k1), f);
    let k3 = derivative(sys, &axpy(s, dt / 2.0, &k2), f);
    let k4 = derivative(sys, &axpy(s, dt, &k3), f);
    let mut out = s.clone();
    for (k, c) in [(&k1, 1.0), (&k2, 2.0), (&k3, 2.0), (&k4, 1.0)] {
        out = axpy(&out, dt * c / 6.0, k);
    }
    out
}

/// Integrates the flow of `f`, or of the kinetic energy when `f` is `None`.
pub fn integrate_field(
    sys: &MagneticSystem,
    pt0: &PhasePoint,
    f: Option<&IntegralFunction>,
    t_end: f64,
    dt: f64,
) -> Result<FlowTrajectory> {
    if !(dt > 0.0 && t_end > 0.0) {
        return Err(MagneticError::BadStep { dt, t_end });
    }
    let steps = (t_end / dt).round().max(1.0) as usize;
    let mut times = Vec::with_capacity(steps + 1);
    let mut points = Vec::with_capacity(steps + 1);
    times.push(0.0);
    points.push(pt0.clone());
    let mut state: State = (pt0.g.matrix().clone(), pt0.x.clone());
    for k in 1..=steps {
        let next = rk4_step(sys, &state, dt, f);
        let t = k as f64 * dt;
        let drift = unitarity_defect(&next.0);
        if drift > STEP_DRIFT_TOL {
            return Err(MagneticError::Drift { t, drift });
        }
        let g = GroupElement::project(&next.0);
        state = (g.matrix().clone(), next.1);
        times.push(t);
        points.push(PhasePoint { g, x: state.1.clone() });
    }
    let hamiltonian = f.map_or_else(|| "1/2 B(X,X)".to_string(), |f| f.label());
    Ok(FlowTrajectory { times, points, method: FlowMethod { integrator: "rk4".into(), dt, hamiltonian } })
}

/// Magnetic geodesic flow `g' = g X`, `X' = -eps [W, X]`.
pub fn integrate_flow(sys: &MagneticSystem, pt0: &PhasePoint, t_end: f64, dt: f64) -> Result<FlowTrajectory> {
    integrate_field(sys, pt0, None, t_end, dt)
}

/// `X(t) = Ad(exp(-t eps W)) X(0)`.
pub fn closed_form_x(sys: &MagneticSystem, x0: &[f64], t: f64) -> Result<Vec<f64>> {
    let gen: Vec<f64> = sys.w_f64.iter().map(|w| -t * sys.eps * w).collect();
    let a = exp_map(&sys.num, &gen)?;
    Ok(sys.sub.restrict_m(&adjoint_group(&sys.num, &a, &sys.sub.embed_m(x0))?))
}

/// Exact flow of the pullback of a Casimir with `B`-gradient `grad` at `xi`:
/// `[g, X] -> [g exp(t grad), X]`.
pub fn casimir_flow(sys: &MagneticSystem, pt: &PhasePoint, grad_at_xi: &[f64], t: f64) -> Result<PhasePoint> {
    let step = exp_map(&sys.num, &grad_at_xi.iter().map(|c| c * t).collect::<Vec<_>>())?;
    Ok(PhasePoint { g: pt.g.mul(&step), x: pt.x.clone() })
}
