//! Hamiltonian vector fields and the magnetic Poisson bracket.
//!
//! `X_f` is fixed by `omega(Y, X_f) = df(Y)`, so that the kinetic energy generates
//! `g' = g X`, `X' = -eps [W, X]`, and `{f, h} = df(X_h) = omega(X_h, X_f)`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::integrals::{IntegralFunction, TaggedPoly};
use crate::system::{omega, MagneticSystem, PhasePoint, TangentVector};

/// `X_{P_eta}`: with `zeta = Ad(g^-1) eta`, `v = zeta_m` and `w = [zeta, X]_m - 1/2 [zeta_m, X]_m`.
pub fn hvf_moment(sys: &MagneticSystem, pt: &PhasePoint, eta: &[f64]) -> TangentVector {
    moment_field_raw(sys, pt.g.matrix(), &pt.x, eta)
}

pub(crate) fn moment_field_raw(sys: &MagneticSystem, g: &DMatrix<Complex64>, x: &[f64], eta: &[f64]) -> TangentVector {
    let zeta = sys.conj_inv(g, eta);
    let xf = sys.sub.embed_m(x);
    let zm = sys.project_m(&zeta);
    let a = sys.bracket(&zeta, &xf);
    let b = sys.bracket(&zm, &xf);
    let w: Vec<f64> = a.iter().zip(&b).map(|(p, q)| p - 0.5 * q).collect();
    TangentVector { v: sys.sub.restrict_m(&zeta), w: sys.sub.restrict_m(&w) }
}

/// `X_{pi* theta}` from the full gradient `grad theta(xi)`: `v = u = (grad theta)_m`,
/// `w = -1/2 [u, X]_m - eps [W, u]`.
pub fn slice_field_from_gradient(sys: &MagneticSystem, x: &[f64], grad: &[f64]) -> TangentVector {
    let u = sys.project_m(grad);
    let xf = sys.sub.embed_m(x);
    let a = sys.bracket(&u, &xf);
    let b = sys.bracket(&sys.w_f64, &u);
    let w: Vec<f64> = a.iter().zip(&b).map(|(p, q)| -0.5 * p - sys.eps * q).collect();
    TangentVector { v: sys.sub.restrict_m(&u), w: sys.sub.restrict_m(&w) }
}

/// `X_{pi* theta}` at `pt`.
pub fn hvf_slice(sys: &MagneticSystem, pt: &PhasePoint, theta: &TaggedPoly) -> TangentVector {
    let xi = sys.shift(&pt.x_full(sys));
    let grad = sys.num.raise(&theta.float.grad(&xi));
    slice_field_from_gradient(sys, &pt.x, &grad)
}

/// `X_f` for any tagged function, products expanded by Leibniz.
pub fn hamiltonian_field(sys: &MagneticSystem, pt: &PhasePoint, f: &IntegralFunction) -> TangentVector {
    field_raw(sys, pt.g.matrix(), &pt.x, f)
}

pub(crate) fn field_raw(sys: &MagneticSystem, g: &DMatrix<Complex64>, x: &[f64], f: &IntegralFunction) -> TangentVector {
    match f {
        IntegralFunction::Moment(h) => {
            let p = sys.conj(g, &sys.shift(&sys.sub.embed_m(x)));
            let eta = sys.num.raise(&h.float.grad(&p));
            moment_field_raw(sys, g, x, &eta)
        }
        IntegralFunction::Slice(s) => {
            let xi = sys.shift(&sys.sub.embed_m(x));
            let grad = sys.num.raise(&s.theta.float.grad(&xi));
            slice_field_from_gradient(sys, x, &grad)
        }
        IntegralFunction::Sum(parts) => parts
            .iter()
            .map(|p| field_raw(sys, g, x, p))
            .fold(TangentVector::zero(x.len()), |acc, t| acc.add(&t)),
        IntegralFunction::Product(a, b) => {
            let va = eval_raw(sys, g, x, a);
            let vb = eval_raw(sys, g, x, b);
            field_raw(sys, g, x, a).scale(vb).add(&field_raw(sys, g, x, b).scale(va))
        }
        IntegralFunction::Scaled(s, a) => field_raw(sys, g, x, a).scale(*s),
    }
}

pub(crate) fn eval_raw(sys: &MagneticSystem, g: &DMatrix<Complex64>, x: &[f64], f: &IntegralFunction) -> f64 {
    match f {
        IntegralFunction::Moment(h) => h.float.eval(&sys.conj(g, &sys.shift(&sys.sub.embed_m(x)))),
        IntegralFunction::Slice(s) => s.theta.float.eval(&sys.shift(&sys.sub.embed_m(x))),
        IntegralFunction::Sum(parts) => parts.iter().map(|p| eval_raw(sys, g, x, p)).sum(),
        IntegralFunction::Product(a, b) => eval_raw(sys, g, x, a) * eval_raw(sys, g, x, b),
        IntegralFunction::Scaled(s, a) => s * eval_raw(sys, g, x, a),
    }
}

/// Field of the kinetic energy `1/2 B(X, X)`: `v = X`, `w = -eps [W, X]`.
pub fn geodesic_field(sys: &MagneticSystem, x: &[f64]) -> TangentVector {
    let xf = sys.sub.embed_m(x);
    slice_field_from_gradient(sys, x, &xf)
}

/// `{f, h}` at `pt`, evaluated through the magnetic form.
pub fn twisted_bracket(sys: &MagneticSystem, f: &IntegralFunction, h: &IntegralFunction, pt: &PhasePoint) -> f64 {
    let xf = hamiltonian_field(sys, pt, f);
    let xh = hamiltonian_field(sys, pt, h);
    omega(sys, &xh, &xf)
}

/// `{f, h}` through the block rules: Lie-Poisson for two moment pullbacks,
/// `-B(xi, [(grad theta1)_m, (grad theta2)_m])` for two slice pullbacks, zero across blocks.
pub fn bracket_shortcut(sys: &MagneticSystem, f: &IntegralFunction, h: &IntegralFunction, pt: &PhasePoint) -> f64 {
    use IntegralFunction::*;
    match (f, h) {
        (Moment(a), Moment(b)) => {
            let p = crate::system::moment_map(sys, pt);
            let ga = sys.num.raise(&a.float.grad(&p));
            let gb = sys.num.raise(&b.float.grad(&p));
            sys.b(&p, &sys.bracket(&ga, &gb))
        }
        (Slice(a), Slice(b)) => {
            let xi = crate::system::slice_map(sys, pt);
            let ua = sys.project_m(&sys.num.raise(&a.theta.float.grad(&xi)));
            let ub = sys.project_m(&sys.num.raise(&b.theta.float.grad(&xi)));
            -sys.b(&xi, &sys.bracket(&ua, &ub))
        }
        (Moment(_), Slice(_)) | (Slice(_), Moment(_)) => 0.0,
        (Sum(parts), other) => parts.iter().map(|p| bracket_shortcut(sys, p, other, pt)).sum(),
        (other, Sum(parts)) => parts.iter().map(|p| bracket_shortcut(sys, other, p, pt)).sum(),
        (Scaled(s, a), other) => s * bracket_shortcut(sys, a, other, pt),
        (other, Scaled(s, a)) => s * bracket_shortcut(sys, other, a, pt),
        (Product(a, b), other) => {
            a.evaluate(sys, pt) * bracket_shortcut(sys, b, other, pt) + b.evaluate(sys, pt) * bracket_shortcut(sys, a, other, pt)
        }
        (other, Product(a, b)) => {
            a.evaluate(sys, pt) * bracket_shortcut(sys, other, b, pt) + b.evaluate(sys, pt) * bracket_shortcut(sys, other, a, pt)
        }
    }
}
