//! Measurements shared by the integration tests and the acceptance report.
//! Each returns the worst observed value so callers choose the threshold.

use esrhd::dim::{Array, Axis, Dimension};
use esrhd::eigen::{interface_average, scaled_eigensystem_1d, scaled_eigensystem_2d};
use esrhd::means::StatePair;
use esrhd::scheme::{entropy_production, entropy_production_scale};
use esrhd::state::{cons_to_prim, prim_to_cons};
use esrhd::weno::{weno5_linear, weno5_reconstruct, Side};
use esrhd::{
    BoundaryConditions, DissipationKind, EosParams, Field, FluxMode, Grid, PrimState, SchemeConfig, D1, D2,
};
use rand::Rng;

use super::*;

pub fn eos() -> EosParams<f64> {
    EosParams::new(5.0 / 3.0).unwrap()
}

/// Worst relative Tadmor residual over random pairs: `[1D, 2D x, 2D y]`.
pub fn tadmor_worst(pairs: usize, seed: u64) -> [f64; 3] {
    let mut rng = rng(seed);
    let g = eos();
    let mut worst = [0.0_f64; 3];
    for _ in 0..pairs {
        let (l, r) = (random_prim1(&mut rng, 3.0, 0.999), random_prim1(&mut rng, 3.0, 0.999));
        let f = D1::ec_flux(&StatePair::new(l, r), &g, Axis::X);
        let (err, scale) = tadmor_residual(&l, &r, &f, &g, Axis::X);
        worst[0] = worst[0].max(err / scale);

        let (l, r) = (random_prim2(&mut rng, 3.0, 0.999), random_prim2(&mut rng, 3.0, 0.999));
        for (k, axis) in [Axis::X, Axis::Y].into_iter().enumerate() {
            let f = D2::ec_flux(&StatePair::new(l, r), &g, axis);
            let (err, scale) = tadmor_residual(&l, &r, &f, &g, axis);
            worst[1 + k] = worst[1 + k].max(err / scale);
        }
    }
    worst
}

/// Worst relative max-norm mismatch of `R Rᵀ` against `∂U/∂V` and of
/// `R diag(λ) R⁻¹` against `∂F/∂U`, both by finite differences:
/// `[(1D), (2D x), (2D y)]`.
pub fn eigen_worst(states: usize, seed: u64) -> [(f64, f64); 3] {
    let mut rng = rng(seed);
    let g = eos();
    let mut worst = [(0.0_f64, 0.0_f64); 3];
    let mut record = |k: usize, r: Dense, lambdas: &[f64], dudv: Dense, dfdu: Dense| {
        let rt: Dense = (0..r.len()).map(|i| (0..r.len()).map(|j| r[j][i]).collect()).collect();
        let e1 = max_diff(&matmul(&r, &rt), &dudv) / max_abs(&dudv);
        let a = matmul(&matmul(&r, &diag(lambdas)), &invert(&r));
        let e2 = max_diff(&a, &dfdu) / max_abs(&dfdu);
        worst[k].0 = worst[k].0.max(e1);
        worst[k].1 = worst[k].1.max(e2);
    };
    for _ in 0..states {
        let w = random_prim1(&mut rng, 1.0, 0.9);
        let sys = scaled_eigensystem_1d(&w, &g);
        record(0, to_dense::<D1>(&sys.r), sys.lambdas.as_ref(), fd_du_dv(&w, &g), fd_df_du(&w, &g, Axis::X));

        let w = random_prim2(&mut rng, 1.0, 0.9);
        for (k, axis) in [Axis::X, Axis::Y].into_iter().enumerate() {
            let sys = scaled_eigensystem_2d(&w, &g, axis);
            record(1 + k, to_dense::<D2>(&sys.r), sys.lambdas.as_ref(), fd_du_dv(&w, &g), fd_df_du(&w, &g, axis));
        }
    }
    worst
}

/// Worst `‖U(W(U)) − U‖∞ / ‖U‖∞` over random admissible states of both
/// dimensions.
pub fn roundtrip_worst(states: usize, seed: u64) -> f64 {
    let mut rng = rng(seed);
    let g = eos();
    let mut worst = 0.0_f64;
    for _ in 0..states {
        let w = random_prim1(&mut rng, 3.0, 0.999);
        let u = prim_to_cons(&w, &g);
        let back = prim_to_cons(&cons_to_prim(&u, &g).expect("admissible"), &g);
        worst = worst.max(back.to_vars().sub(&u.to_vars()).max_abs() / u.to_vars().max_abs());

        let w = random_prim2(&mut rng, 3.0, 0.999);
        let u = prim_to_cons(&w, &g);
        let back = prim_to_cons(&cons_to_prim(&u, &g).expect("admissible"), &g);
        worst = worst.max(back.to_vars().sub(&u.to_vars()).max_abs() / u.to_vars().max_abs());
    }
    worst
}

#[derive(Clone, Copy, Debug)]
pub struct WenoReport {
    /// Linear-weight reconstruction, degree <= 4.
    pub linear_quartic: f64,
    /// Nonlinear reconstruction, degree <= 2.
    pub nonlinear_quadratic: f64,
    /// Nonlinear reconstruction, degree 4 (not exact; reported only).
    pub nonlinear_quartic: f64,
}

/// Worst absolute interface error, relative to the largest cell average,
/// for random polynomials on random meshes, both sides.
pub fn weno_worst(polys: usize, seed: u64) -> WenoReport {
    let mut rng = rng(seed);
    let mut rep = WenoReport { linear_quartic: 0.0, nonlinear_quadratic: 0.0, nonlinear_quartic: 0.0 };
    for _ in 0..polys {
        let h = log_uniform(&mut rng, -2.0, 0.0);
        let x0 = rng.gen_range(-1.0..1.0);
        let deg = rng.gen_range(0..=4usize);
        let coeffs: Vec<f64> = (0..=4).map(|k| if k <= deg { rng.gen_range(-1.0..1.0) } else { 0.0 }).collect();
        let quad: Vec<f64> = coeffs[..3].to_vec();
        // Cells j = -2..3 around the interface x0 + h/2 between cells 0 and 1.
        let centre = |j: i32| x0 + j as f64 * h;
        let xf = x0 + 0.5 * h;
        for (c, is_quad) in [(&coeffs, false), (&quad, true)] {
            let avg: Vec<f64> = (-2..=3).map(|j| poly_cell_average(c, centre(j), h)).collect();
            let mag = avg.iter().fold(0.0_f64, |m, v| m.max(v.abs())).max(f64::MIN_POSITIVE);
            let exact = poly_value(c, xf);
            let left: [f64; 5] = std::array::from_fn(|m| avg[m]);
            let right: [f64; 5] = std::array::from_fn(|m| avg[m + 1]);
            if is_quad {
                for v in [weno5_reconstruct(&left, Side::Left), weno5_reconstruct(&right, Side::Right)] {
                    rep.nonlinear_quadratic = rep.nonlinear_quadratic.max((v - exact).abs() / mag);
                }
            } else {
                for v in [weno5_linear(&left, Side::Left), weno5_linear(&right, Side::Right)] {
                    rep.linear_quartic = rep.linear_quartic.max((v - exact).abs() / mag);
                }
                for v in [weno5_reconstruct(&left, Side::Left), weno5_reconstruct(&right, Side::Right)] {
                    rep.nonlinear_quartic = rep.nonlinear_quartic.max((v - exact).abs() / mag);
                }
            }
        }
    }
    rep
}

/// Random cell-wise discontinuous data: every cell independent.
pub fn random_field_1d(n: usize, seed: u64) -> Field<f64, D1> {
    let mut rng = rng(seed);
    let cells: Vec<PrimState<f64, D1>> = (0..n).map(|_| random_prim1(&mut rng, 1.0, 0.9)).collect();
    let grid = Grid::new_1d(n, (0.0, 1.0)).unwrap();
    Field::from_prim_fn(grid, &eos(), |x, _| cells[((x * n as f64).floor().rem_euclid(n as f64)) as usize]).unwrap()
}

pub fn random_field_2d(n: usize, seed: u64) -> Field<f64, D2> {
    let mut rng = rng(seed);
    let cells: Vec<PrimState<f64, D2>> = (0..n * n).map(|_| random_prim2(&mut rng, 1.0, 0.9)).collect();
    let grid = Grid::new_2d(n, n, (0.0, 1.0), (0.0, 1.0)).unwrap();
    Field::from_prim_fn(grid, &eos(), |x, y| {
        let i = (x * n as f64).floor().rem_euclid(n as f64) as usize;
        let j = (y * n as f64).floor().rem_euclid(n as f64) as usize;
        cells[j * n + i]
    })
    .unwrap()
}

/// `(Σ VᵀL·vol, Σ |V||L|·vol)` on a periodic field.
pub fn production<D: Dimension>(field: &mut Field<f64, D>, mode: FluxMode, diss: DissipationKind) -> (f64, f64) {
    let cfg = SchemeConfig::new(mode, diss, eos());
    let bc = BoundaryConditions::periodic();
    (entropy_production(field, &cfg, &bc).unwrap(), entropy_production_scale(field, &cfg, &bc).unwrap())
}

/// The interface average is admissible for every random pair.
pub fn average_admissible(pairs: usize, seed: u64) -> bool {
    let mut rng = rng(seed);
    (0..pairs).all(|_| {
        let (l, r) = (random_prim2(&mut rng, 3.0, 0.999), random_prim2(&mut rng, 3.0, 0.999));
        interface_average(&StatePair::new(l, r)).is_admissible()
    })
}
