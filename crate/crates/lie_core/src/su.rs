//! Concrete bases for su(2) and su(3).

use num_traits::Zero;

use crate::algebra::{LieAlgebraSpec, Root, RootData};
use crate::cmatrix::CMatrix;
use crate::scalar::{CScalar, Scalar};

fn c(re: i64, im: i64) -> CScalar {
    CScalar::new(Scalar::from_int(re), Scalar::from_int(im))
}

fn minus_i() -> CScalar {
    c(0, -1)
}

/// The Hermitian Gell-Mann matrix `lambda_k`, `k = 1..=8`.
pub fn gellmann_lambda(k: usize) -> CMatrix {
    let u = |i, j| CMatrix::unit(3, i, j);
    match k {
        1 => u(0, 1).add(&u(1, 0)),
        2 => u(0, 1).scale(&c(0, -1)).add(&u(1, 0).scale(&c(0, 1))),
        3 => u(0, 0).sub(&u(1, 1)),
        4 => u(0, 2).add(&u(2, 0)),
        5 => u(0, 2).scale(&c(0, -1)).add(&u(2, 0).scale(&c(0, 1))),
        6 => u(1, 2).add(&u(2, 1)),
        7 => u(1, 2).scale(&c(0, -1)).add(&u(2, 1).scale(&c(0, 1))),
        8 => {
            let s = Scalar::sqrt3().inv().expect("nonzero");
            let d = CMatrix::diag(&[c(1, 0), c(1, 0), c(-2, 0)]);
            d.scale_real(&s)
        }
        _ => panic!("Gell-Mann index out of range: {k}"),
    }
}

/// su(3) on `e_k = -i lambda_k`. The form is the identity matrix and `C_ab^c = 2 f_abc`.
pub fn build_su3_gellmann() -> LieAlgebraSpec {
    let mats = (1..=8).map(|k| gellmann_lambda(k).scale(&minus_i())).collect();
    let labels = (1..=8).map(|k| format!("e{k}")).collect();
    let coords = (1..=8).map(|k| format!("x{k}")).collect();
    LieAlgebraSpec::from_matrices(
        "su3-gellmann",
        labels,
        coords,
        mats,
        2,
        vec![2, 7],
        "e_k = -i*lambda_k; B(e_k,e_l) = delta_kl; C_ab^c = 2*f_abc (twice the Gell-Mann constants)",
    )
    .expect("Gell-Mann basis is valid")
}

/// Positions of the positive roots `alpha1, alpha2, alpha3 = alpha1 + alpha2`.
pub const SU3_ROOT_POSITIONS: [(usize, usize); 3] = [(0, 1), (1, 2), (0, 2)];

/// su(3) on a real Chevalley-type basis `H1, H2, A1, S1, A2, S2, A3, S3`.
///
/// `H1 = i diag(1,-1,0)`, `H2 = (i/sqrt 3) diag(1,1,-2)`; for the root at `(i,j)`,
/// `A = -2(E_ij - E_ji)`, `S = -2i(E_ij + E_ji)`, and `E_a = -2 E_ij`, `E_-a = E_ji`,
/// so that `B(E_a, E_-a) = 1` and `z = B(X, E_-a)` is the coefficient pair `x + i y` on `(A, S)`.
pub fn build_su3_chevalley() -> LieAlgebraSpec {
    let u = |i, j| CMatrix::unit(3, i, j);
    let h1 = CMatrix::diag(&[c(0, 1), c(0, -1), c(0, 0)]);
    let h2 = CMatrix::diag(&[c(0, 1), c(0, 1), c(0, -2)]).scale_real(&Scalar::sqrt3().inv().expect("nonzero"));
    let mut mats = vec![h1, h2];
    let mut labels = vec!["H1".to_string(), "H2".to_string()];
    let mut coords = vec!["h1".to_string(), "h2".to_string()];
    for (k, &(i, j)) in SU3_ROOT_POSITIONS.iter().enumerate() {
        mats.push(u(i, j).sub(&u(j, i)).scale(&c(-2, 0)));
        mats.push(u(i, j).add(&u(j, i)).scale(&c(0, -2)));
        labels.push(format!("A{}", k + 1));
        labels.push(format!("S{}", k + 1));
        coords.push(format!("x{}", k + 1));
        coords.push(format!("y{}", k + 1));
    }
    let mut spec = LieAlgebraSpec::from_matrices(
        "su3-chevalley",
        labels,
        coords,
        mats,
        2,
        vec![0, 1],
        "H1 = i diag(1,-1,0), H2 = (i/sqrt3) diag(1,1,-2); A_k = -2(E_ij - E_ji), S_k = -2i(E_ij + E_ji); \
         E_alpha = -2 E_ij, E_-alpha = E_ji, B(E_alpha, E_-alpha) = 1",
    )
    .expect("Chevalley basis is valid");

    let cartan_mats: Vec<CMatrix> = {
        let m = spec.matrix_rep.as_ref().expect("matrix basis");
        vec![m[0].clone(), m[1].clone()]
    };
    let roots: Vec<Root> = SU3_ROOT_POSITIONS
        .iter()
        .enumerate()
        .map(|(k, &(i, j))| {
            let e_pos = u(i, j).scale(&c(-2, 0));
            let e_neg = u(j, i);
            let complex_coroot = e_pos.commutator(&e_neg);
            let h = u(i, i).sub(&u(j, j)).scale(&c(0, 1));
            let coroot = spec.coords_of(&h).expect("coroot lies in the torus");
            let values_on_cartan = cartan_mats
                .iter()
                .map(|m| &m.get(i, i).im - &m.get(j, j).im)
                .collect();
            Root {
                name: format!("alpha{}", k + 1),
                position: (i, j),
                e_pos,
                e_neg,
                e_pos_scale: Scalar::from_int(-2),
                complex_coroot,
                coroot,
                re_index: 2 + 2 * k,
                im_index: 3 + 2 * k,
                values_on_cartan,
            }
        })
        .collect();
    let simple = vec![0, 1];
    let cartan_matrix = simple
        .iter()
        .map(|&a| {
            simple
                .iter()
                .map(|&b| {
                    let v = roots[a]
                        .values_on_cartan
                        .iter()
                        .zip(&roots[b].coroot)
                        .fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y));
                    v.to_f64().round() as i64
                })
                .collect()
        })
        .collect();
    spec.root_data = Some(RootData { roots, simple, cartan_matrix });
    spec
}

/// su(2) on `e_k = -i sigma_k` with coordinates `x, y, z`; the torus is spanned by `e1`.
pub fn build_su2() -> LieAlgebraSpec {
    let u = |i, j| CMatrix::unit(2, i, j);
    let sigma = [
        u(0, 1).add(&u(1, 0)),
        u(0, 1).scale(&c(0, -1)).add(&u(1, 0).scale(&c(0, 1))),
        u(0, 0).sub(&u(1, 1)),
    ];
    let mats = sigma.iter().map(|s| s.scale(&minus_i())).collect();
    LieAlgebraSpec::from_matrices(
        "su2",
        vec!["e1".into(), "e2".into(), "e3".into()],
        vec!["x".into(), "y".into(), "z".into()],
        mats,
        1,
        vec![0],
        "e_k = -i*sigma_k; B(e_k,e_l) = delta_kl",
    )
    .expect("Pauli basis is valid")
}

/// Coordinates of `-i diag(d)` in a su(3) basis.
pub fn element_from_diagonal(spec: &LieAlgebraSpec, d: [Scalar; 3]) -> Vec<Scalar> {
    let h = CMatrix::diag(&d.map(CScalar::real));
    spec.element_from_hermitian(&h).expect("traceless diagonal lies in su(3)")
}

/// `W = 1/2 (H1 + H2)` in the Chevalley basis.
pub fn regular_w(spec: &LieAlgebraSpec) -> Vec<Scalar> {
    let mut w = vec![Scalar::zero(); spec.dim];
    w[0] = Scalar::from_ratio(1, 2);
    w[1] = Scalar::from_ratio(1, 2);
    w
}

/// The irregular element `-i diag(-1,-1,2)` in the Gell-Mann basis, equal to `-sqrt3 e8`.
///
/// It has the eigenvalue type of `diag(2,-1,-1)` and commutes with `e1, e2, e3, e8`.
pub fn irregular_w(spec: &LieAlgebraSpec) -> Vec<Scalar> {
    element_from_diagonal(spec, [Scalar::from_int(-1), Scalar::from_int(-1), Scalar::from_int(2)])
}
