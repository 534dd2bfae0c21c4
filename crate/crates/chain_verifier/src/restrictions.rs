//! Shifted restrictions of the su(3) Casimirs to the fiber.

use std::sync::Arc;

use invariant_solver::{casimirs_su3, restrict_shift, EpsMode};
use lie_core::Scalar;
use magnetic_phase::{CaseTag, MagneticSystem};
use poly_engine::Polynomial;

use crate::error::Result;
use crate::report::{CertificateReport, Check};
use crate::table::RegularChain;

/// `(Res_W C2, Res_W C3)` over the `m` coordinates and a symbolic `eps` (last variable).
pub fn casimir_restrictions(sys: &MagneticSystem) -> Result<(Polynomial, Polynomial)> {
    let (c2, c3) = casimirs_su3(&sys.alg)?;
    Ok((
        restrict_shift(&c2, &sys.sub, &sys.w, &EpsMode::Symbolic)?,
        restrict_shift(&c3, &sys.sub, &sys.w, &EpsMode::Symbolic)?,
    ))
}

/// Listed irregular restrictions: `R + 3 eps^2` and `3 eps (2 eps^2 + x4^2 + x5^2 - 2 x6^2 - 2 x7^2)`.
pub fn listed_irregular_restrictions(vars: &Arc<Vec<String>>) -> Result<(Polynomial, Polynomial)> {
    let x = |i: usize| Polynomial::var(vars, i);
    let sq = |i: usize| x(i).pow(2);
    let int = |n: i64| Scalar::from_int(n);
    let e = x(4);
    let e2 = e.pow(2)?;
    let r = &(&(&sq(0)? + &sq(1)?) + &sq(2)?) + &sq(3)?;
    let c2 = &r + &e2.scale(&int(3));
    let inner = &(&(&e2.scale(&int(2)) + &sq(0)?) + &sq(1)?) - &(&sq(2)? + &sq(3)?).scale(&int(2));
    let c3 = e.mul(&inner)?.scale(&int(3));
    Ok((c2, c3))
}

/// Exact restriction checks. Irregular: both listed forms, and the relation
/// `Res C3 = 3 eps (Res C2 - eps^2)`. Regular: both restrictions lie in `R[u, v, w, eps]`.
pub fn restriction_report(sys: &MagneticSystem) -> Result<CertificateReport> {
    let (r2, r3) = casimir_restrictions(sys)?;
    let mut rep = CertificateReport::new(sys.case_tag, 0, 0);
    match sys.case_tag {
        CaseTag::Irregular => {
            let (l2, l3) = listed_irregular_restrictions(r2.vars())?;
            rep.push(Check::exact("Res_W C2 (listed form)", l2.to_text(), r2.to_text()));
            rep.push(Check::exact("Res_W C3 (listed form)", l3.to_text(), r3.to_text()));
            let e = Polynomial::var(r2.vars(), 4);
            let rel = e.mul(&(&r2 - &e.pow(2)?))?.scale(&Scalar::from_int(3));
            rep.push(Check::exact("Res_W C3 - 3 eps (Res_W C2 - eps^2)", "0", (&r3 - &rel).to_text()));
        }
        CaseTag::Regular => {
            let chain = RegularChain::new(sys)?;
            for (name, r) in [("Res_W C2", &r2), ("Res_W C3", &r3)] {
                let (q, rem) = chain.express(r)?;
                rep.push(Check::exact(format!("{name} remainder in R[u,v,w,eps]"), "0", rem.to_text()));
                rep.push(Check::info(format!("{name} in generators"), q.to_text()));
            }
        }
    }
    Ok(rep)
}
