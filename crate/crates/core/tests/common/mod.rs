//! Shared helpers: seeded random states and finite-difference Jacobians.
#![allow(dead_code)]

pub mod checks;

use esrhd::dim::{Array, Axis, Dimension, Matrix};
use esrhd::state::{cons_to_prim, entropy_quantities, entropy_variables, physical_flux, prim_to_cons};
use esrhd::{ConsState, EosParams, PrimState, D1, D2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Dense = Vec<Vec<f64>>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Log-uniform magnitudes in `10^[lo, hi]`.
pub fn log_uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    10f64.powf(rng.gen_range(lo..hi))
}

pub fn random_prim1(rng: &mut impl Rng, decades: f64, vmax: f64) -> PrimState<f64, D1> {
    let rho = log_uniform(rng, -decades, decades);
    let p = log_uniform(rng, -decades, decades);
    PrimState::new(rho, [rng.gen_range(-vmax..vmax)], p)
}

pub fn random_prim2(rng: &mut impl Rng, decades: f64, vmax: f64) -> PrimState<f64, D2> {
    let rho = log_uniform(rng, -decades, decades);
    let p = log_uniform(rng, -decades, decades);
    let speed = rng.gen_range(0.0..vmax);
    let theta = rng.gen_range(0.0..std::f64::consts::TAU);
    PrimState::new(rho, [speed * theta.cos(), speed * theta.sin()], p)
}

/// `|[[V]]ᵀF̃ − [[ψ]]|` and the magnitude it is measured against.
pub fn tadmor_residual<D: Dimension>(
    l: &PrimState<f64, D>,
    r: &PrimState<f64, D>,
    flux: &D::Vars<f64>,
    eos: &EosParams<f64>,
    axis: Axis,
) -> (f64, f64) {
    let (el, er) = (entropy_quantities(l, eos), entropy_quantities(r, eos));
    let dv = er.v.sub(&el.v);
    let k = axis.index();
    let (pl, pr) = (el.psi.as_ref()[k], er.psi.as_ref()[k]);
    let lhs = dv.dot(flux);
    let scale = dv.as_ref().iter().zip(flux.as_ref()).map(|(a, b)| (a * b).abs()).sum::<f64>() + pl.abs() + pr.abs();
    ((lhs - (pr - pl)).abs(), scale)
}

/// Central differences of `f` at `u` with componentwise relative steps.
pub fn fd_jacobian<D: Dimension>(
    u: &ConsState<f64, D>,
    h_rel: f64,
    f: impl Fn(&ConsState<f64, D>) -> D::Vars<f64>,
) -> Dense {
    let base = u.to_vars();
    let n = D::NVAR;
    let scale = base.max_abs();
    let mut jac = vec![vec![0.0; n]; n];
    for c in 0..n {
        let h = h_rel * base.as_ref()[c].abs().max(1e-3 * scale);
        let shift = |s: f64| ConsState::<f64, D>::from_vars(&D::Vars::<f64>::from_fn(|k| base.as_ref()[k] + if k == c { s } else { 0.0 }));
        let (fp, fm) = (f(&shift(h)), f(&shift(-h)));
        for row in 0..n {
            jac[row][c] = (fp.as_ref()[row] - fm.as_ref()[row]) / (2.0 * h);
        }
    }
    jac
}

/// Central differences of `f` with respect to the primitives `(ρ, v, p)`.
pub fn fd_prim_jacobian<D: Dimension>(w: &PrimState<f64, D>, h_rel: f64, f: impl Fn(&PrimState<f64, D>) -> D::Vars<f64>) -> Dense {
    let n = D::NVAR;
    let base: Vec<f64> = std::iter::once(w.rho).chain(w.vel.as_ref().iter().copied()).chain(std::iter::once(w.p)).collect();
    let build = |x: &[f64]| PrimState::<f64, D>::new(x[0], D::Vel::<f64>::from_fn(|k| x[1 + k]), x[n - 1]);
    let mut jac = vec![vec![0.0; n]; n];
    for c in 0..n {
        let h = h_rel * if c == 0 || c == n - 1 { base[c] } else { 1.0 };
        let shifted = |s: f64| {
            let mut x = base.clone();
            x[c] += s;
            f(&build(&x))
        };
        let (fp, fm) = (shifted(h), shifted(-h));
        for row in 0..n {
            jac[row][c] = (fp.as_ref()[row] - fm.as_ref()[row]) / (2.0 * h);
        }
    }
    jac
}

/// `∂U/∂V = (∂U/∂W)(∂V/∂W)⁻¹`, both factors differenced in the primitives so
/// that no primitive recovery enters the measurement.
pub fn fd_du_dv<D: Dimension>(w: &PrimState<f64, D>, eos: &EosParams<f64>) -> Dense {
    let du = fd_prim_jacobian(w, 1e-6, |x| prim_to_cons(x, eos).to_vars());
    let dv = fd_prim_jacobian(w, 1e-6, |x| entropy_variables(x, eos));
    matmul(&du, &invert(&dv))
}

pub fn fd_df_du<D: Dimension>(w: &PrimState<f64, D>, eos: &EosParams<f64>, axis: Axis) -> Dense {
    let u = prim_to_cons(w, eos);
    fd_jacobian(&u, 1e-5, |x| physical_flux(&cons_to_prim(x, eos).expect("admissible"), x, axis))
}

pub fn to_dense<D: Dimension>(m: &D::Mat<f64>) -> Dense {
    let n = D::NVAR;
    (0..n)
        .map(|r| {
            let e = D::Vars::<f64>::from_fn(|k| if k == r { 1.0 } else { 0.0 });
            let row = m.mul_t_vec(&e);
            row.as_ref().to_vec()
        })
        .collect()
}

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

pub fn diag(d: &[f64]) -> Dense {
    (0..d.len()).map(|i| (0..d.len()).map(|j| if i == j { d[i] } else { 0.0 }).collect()).collect()
}

pub fn max_abs(a: &Dense) -> f64 {
    a.iter().flatten().fold(0.0, |m, x| m.max(x.abs()))
}

pub fn max_diff(a: &Dense, b: &Dense) -> f64 {
    a.iter().flatten().zip(b.iter().flatten()).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// Gauss–Jordan inverse with partial pivoting.
pub fn invert(a: &Dense) -> Dense {
    let n = a.len();
    let mut m: Dense = a.iter().enumerate().map(|(i, row)| {
        let mut r = row.clone();
        r.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
        r
    }).collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| m[x][col].abs().total_cmp(&m[y][col].abs())).unwrap();
        m.swap(col, piv);
        let p = m[col][col];
        assert!(p != 0.0, "singular matrix");
        for v in m[col].iter_mut() {
            *v /= p;
        }
        for row in 0..n {
            if row != col {
                let f = m[row][col];
                if f != 0.0 {
                    let pivot_row = m[col].clone();
                    for (v, pv) in m[row].iter_mut().zip(pivot_row) {
                        *v -= f * pv;
                    }
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Cell averages of the polynomial `Σ c_k x^k` over `[x - h/2, x + h/2]`.
pub fn poly_cell_average(coeffs: &[f64], x: f64, h: f64) -> f64 {
    let antideriv = |t: f64| coeffs.iter().enumerate().map(|(k, c)| c * t.powi(k as i32 + 1) / (k as f64 + 1.0)).sum::<f64>();
    (antideriv(x + 0.5 * h) - antideriv(x - 0.5 * h)) / h
}

pub fn poly_value(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Componentwise relative drift of `Σ U · vol`, measured against the largest
/// component of the initial total.
pub fn conservation_drift<V: Array<f64>>(before: &V, after: &V) -> f64 {
    after.sub(before).max_abs() / before.max_abs()
}
