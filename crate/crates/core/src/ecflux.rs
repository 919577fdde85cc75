//! Entropy conservative two-point fluxes and their sixth-order combination.
//!
//! A two-point flux `F̃(U_L, U_R)` is entropy conservative when
//! `[[V]]ᵀ F̃ = [[ψ]]`. The closed forms below are obtained by expanding
//! `[[V]]` and `[[ψ]]` in jumps of `z = (ρ, ρ/p, u[, v])` and matching
//! coefficients; the denominator `Q` equals `<ρ/p> W_L W_R > 0`.

use crate::dim::{Array, Axis, Dimension, D1, D2};
use crate::means::{ln_mean, lorentz_mean_1d, lorentz_means, mean, StatePair};
use crate::num::Real;
use crate::state::{EosParams, PrimState};

/// Order of the entropy conservative flux.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EcFluxKind {
    Second,
    #[default]
    Sixth,
}

impl EcFluxKind {
    /// Weights `α_r` of `F̃(U_{i-s}, U_{i-s+r})`, `s = 0..r-1`, for `r = 1, 2, ..`.
    pub fn coefficients(self) -> &'static [f64] {
        match self {
            EcFluxKind::Second => &[1.0],
            EcFluxKind::Sixth => &SIXTH_ORDER_WEIGHTS,
        }
    }
}

/// `(3/2, -3/10, 1/30)`
pub const SIXTH_ORDER_WEIGHTS: [f64; 3] = [1.5, -0.3, 1.0 / 30.0];

/// Entropy conservative flux of the one-dimensional system.
pub fn ec_flux_1d<T: Real>(pair: &StatePair<T, D1>, eos: &EosParams<T>) -> [T; 3] {
    let (l, r) = (&pair.left, &pair.right);
    let one = T::one();
    let (ul, ur) = (l.vel[0], r.vel[0]);
    let (wl, wr) = (l.lorentz(), r.lorentz());
    let (bl, br) = (l.rho / l.p, r.rho / r.p);

    let rho_ln = ln_mean(l.rho, r.rho);
    let beta_ln = ln_mean(bl, br);
    let rho_m = mean(l.rho, r.rho);
    let beta_m = mean(bl, br);
    let u_m = mean(ul, ur);
    let w_m = mean(wl, wr);
    let uw_m = mean(ul * wl, ur * wr);
    let lor = lorentz_mean_1d(ul, ur);
    let alpha = one + one / (eos.gm1() * beta_ln);

    let f1 = rho_ln * uw_m;
    let q = beta_m * w_m * w_m + beta_m * u_m * w_m * lor - beta_m * uw_m * lor;
    let f2 = (alpha * beta_m * lor * f1 + rho_m * w_m * w_m + rho_m * u_m * w_m * lor) / q;
    let f3 = (rho_m * w_m * uw_m
        + rho_m * u_m * uw_m * lor
        + alpha * f1 * (beta_m * w_m + beta_m * u_m * lor))
        / q;
    [f1, f2, f3]
}

/// Denominator `Q` of the one-dimensional flux.
pub fn ec_denominator_1d<T: Real>(pair: &StatePair<T, D1>) -> T {
    let (l, r) = (&pair.left, &pair.right);
    let (ul, ur) = (l.vel[0], r.vel[0]);
    let (wl, wr) = (l.lorentz(), r.lorentz());
    let beta_m = mean(l.rho / l.p, r.rho / r.p);
    let w_m = mean(wl, wr);
    let lor = lorentz_mean_1d(ul, ur);
    beta_m * w_m * w_m + beta_m * mean(ul, ur) * w_m * lor - beta_m * mean(ul * wl, ur * wr) * lor
}

/// Entropy conservative flux of the two-dimensional system along `axis`
/// (`F̃` for x, `G̃` for y).
pub fn ec_flux_2d<T: Real>(pair: &StatePair<T, D2>, eos: &EosParams<T>, axis: Axis) -> [T; 4] {
    let (l, r) = (&pair.left, &pair.right);
    let one = T::one();
    let (wl, wr) = (l.lorentz(), r.lorentz());
    let (bl, br) = (l.rho / l.p, r.rho / r.p);

    let rho_ln = ln_mean(l.rho, r.rho);
    let beta_ln = ln_mean(bl, br);
    let rho_m = mean(l.rho, r.rho);
    let beta_m = mean(bl, br);
    let w_m = mean(wl, wr);
    let vel_m = [mean(l.vel[0], r.vel[0]), mean(l.vel[1], r.vel[1])];
    let velw_m = [mean(l.vel[0] * wl, r.vel[0] * wr), mean(l.vel[1] * wl, r.vel[1] * wr)];
    let lor = lorentz_means(pair);
    let alpha = one + one / (eos.gm1() * beta_ln);

    let q = beta_m * w_m * w_m
        + beta_m
            * (vel_m[0] * w_m * lor[0] - velw_m[0] * lor[0] + vel_m[1] * w_m * lor[1]
                - velw_m[1] * lor[1]);
    let z_dot_lor = vel_m[0] * lor[0] + vel_m[1] * lor[1];

    let n = axis.index();
    let t = 1 - n;
    let mass = rho_ln * velw_m[n];
    let mut mom = [T::zero(); 2];
    mom[n] = (alpha * beta_m * lor[n] * mass
        + rho_m * (w_m * w_m - velw_m[t] * lor[t])
        + rho_m * w_m * z_dot_lor)
        / q;
    mom[t] = (alpha * beta_m * lor[t] * mass + rho_m * velw_m[n] * lor[t]) / q;
    let energy = (alpha * mass + velw_m[0] * mom[0] + velw_m[1] * mom[1]) / w_m;
    [mass, mom[0], mom[1], energy]
}

/// Denominator `Q` of the two-dimensional fluxes.
pub fn ec_denominator_2d<T: Real>(pair: &StatePair<T, D2>) -> T {
    let (l, r) = (&pair.left, &pair.right);
    let (wl, wr) = (l.lorentz(), r.lorentz());
    let beta_m = mean(l.rho / l.p, r.rho / r.p);
    let w_m = mean(wl, wr);
    let lor = lorentz_means(pair);
    let mut q = beta_m * w_m * w_m;
    for k in 0..2 {
        let v_m = mean(l.vel[k], r.vel[k]);
        let vw_m = mean(l.vel[k] * wl, r.vel[k] * wr);
        q = q + beta_m * (v_m * w_m * lor[k] - vw_m * lor[k]);
    }
    q
}

/// Sixth-order combination of two-point fluxes at `x_{i+1/2}`; argument
/// `f_a_b` is `F̃(U_{i+a}, U_{i+b})`.
#[inline]
#[allow(clippy::too_many_arguments)]
pub fn combine_sixth<T: Real, V: Array<T>>(f_0_1: &V, f_m1_1: &V, f_0_2: &V, f_m2_1: &V, f_m1_2: &V, f_0_3: &V) -> V {
    let [c1, c2, c3] = SIXTH_ORDER_WEIGHTS.map(T::lit);
    V::from_fn(|k| c1 * f_0_1[k] + c2 * (f_m1_1[k] + f_0_2[k]) + c3 * (f_m2_1[k] + f_m1_2[k] + f_0_3[k]))
}

/// Sixth-order entropy conservative flux at `x_{i+1/2}` from the states
/// `U_{i-2}, .., U_{i+3}`.
pub fn ec_flux_high_order<T: Real, D: Dimension>(
    stencil: &[PrimState<T, D>; 6],
    eos: &EosParams<T>,
    axis: Axis,
) -> D::Vars<T> {
    // stencil[k] holds U_{i-2+k}
    let f = |a: isize, b: isize| {
        let pair = StatePair::new(stencil[(a + 2) as usize], stencil[(b + 2) as usize]);
        D::ec_flux(&pair, eos, axis)
    };
    combine_sixth(&f(0, 1), &f(-1, 1), &f(0, 2), &f(-2, 1), &f(-1, 2), &f(0, 3))
}
