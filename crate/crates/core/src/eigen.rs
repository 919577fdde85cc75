//! Scaled right eigenvectors and dissipation operators.
//!
//! The eigenvector matrix `R` of `∂F/∂U` is scaled so that `R Rᵀ = ∂U/∂V`;
//! with that scaling `R |Λ| Rᵀ` is a symmetric positive semi-definite
//! dissipation matrix acting on jumps of the entropy variables.

use crate::dim::{Array, Axis, Dimension, Matrix, D1, D2};
use crate::means::{ln_mean, mean, StatePair};
use crate::num::Real;
use crate::state::{acoustic_speeds_with, sound_speed, EosParams, PrimState};

/// Eigen-decomposition of the flux Jacobian frozen at one averaged state.
///
/// Columns are ordered acoustic-, material, (material,) acoustic+.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledEigenSystem<T: Real, D: Dimension> {
    pub r: D::Mat<T>,
    pub lambdas: D::Vars<T>,
    pub axis: Axis,
}

impl<T: Real, D: Dimension> ScaledEigenSystem<T, D> {
    /// Scaled characteristic variables `w = Rᵀ V`.
    #[inline]
    pub fn project(&self, v: &D::Vars<T>) -> D::Vars<T> {
        self.r.mul_t_vec(v)
    }

    /// `R x`
    #[inline]
    pub fn apply(&self, x: &D::Vars<T>) -> D::Vars<T> {
        self.r.mul_vec(x)
    }

    /// `R Rᵀ`, which equals `∂U/∂V` at the frozen state.
    pub fn r_rt(&self) -> D::Mat<T> {
        self.r.mul_mat(&self.r.transpose())
    }
}

/// Eigenvalue magnitudes used by the dissipation term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DissipationKind {
    /// `|Λ| = diag |λ_k|`
    Roe,
    /// `|Λ| = max_k |λ_k| I`
    #[default]
    LaxFriedrichs,
}

/// Diagonal of `|Λ|` for the chosen dissipation.
pub fn dissipation_matrix<T: Real, D: Dimension>(sys: &ScaledEigenSystem<T, D>, kind: DissipationKind) -> D::Vars<T> {
    match kind {
        DissipationKind::Roe => sys.lambdas.map(T::abs),
        DissipationKind::LaxFriedrichs => D::Vars::<T>::splat(sys.lambdas.max_abs()),
    }
}

/// Interface state `(<ρ>_ln, <u>, <ρ>_ln / <ρ/p>_ln)`.
pub fn interface_average<T: Real, D: Dimension>(pair: &StatePair<T, D>) -> PrimState<T, D> {
    let (l, r) = (&pair.left, &pair.right);
    let rho = ln_mean(l.rho, r.rho);
    let beta = ln_mean(l.rho / l.p, r.rho / r.p);
    PrimState { rho, vel: l.vel.zip_map(&r.vel, mean), p: rho / beta }
}

pub fn scaled_eigensystem_1d<T: Real>(avg: &PrimState<T, D1>, eos: &EosParams<T>) -> ScaledEigenSystem<T, D1> {
    let one = T::one();
    let two = T::two();
    let gamma = eos.gamma;
    let u = avg.vel[0];
    let lorentz = avg.lorentz();
    let h = avg.enthalpy(eos);
    let cs = sound_speed(avg, eos);
    let wh = lorentz * h;
    let rw = avg.rho * lorentz;

    let basis = [
        [one, one, one],
        [(u - cs) * wh, u * lorentz, (u + cs) * wh],
        [(one - u * cs) * wh, lorentz, (one + u * cs) * wh],
    ];
    let scale = [
        (rw * (one - u * cs) / (two * gamma)).sqrt(),
        (eos.gm1() * rw / gamma).sqrt(),
        (rw * (one + u * cs) / (two * gamma)).sqrt(),
    ];
    let r = <[[T; 3]; 3]>::from_fn(|i, j| basis[i][j] * scale[j]);
    let lambdas = [(u - cs) / (one - u * cs), u, (u + cs) / (one + u * cs)];
    ScaledEigenSystem { r, lambdas, axis: Axis::X }
}

pub fn scaled_eigensystem_2d<T: Real>(avg: &PrimState<T, D2>, eos: &EosParams<T>, axis: Axis) -> ScaledEigenSystem<T, D2> {
    let one = T::one();
    let two = T::two();
    let gamma = eos.gamma;
    let lorentz = avg.lorentz();
    let w2 = lorentz * lorentz;
    let h = avg.enthalpy(eos);
    let cs = sound_speed(avg, eos);
    let (lm, lp) = acoustic_speeds_with(avg, cs, axis);

    // Normal and tangential components; the y-direction matrix is the
    // x-direction one with the two momentum rows and the two material
    // columns exchanged.
    let n = avg.vel_along(axis);
    let t = avg.vel[1 - axis.index()];
    let a_m = (one - n * n) / (one - n * lm);
    let a_p = (one - n * n) / (one - n * lp);
    let root = (one - n * n - t * t * cs * cs).sqrt();
    let b = avg.rho * lorentz * (one - n * n - t * t * cs * cs) / (gamma * (one - n * n));
    let c = avg.rho * n * cs * root / (gamma * (one - n * n));

    let hw = h * lorentz;
    // rows (mass, normal momentum, tangential momentum, energy),
    // columns (acoustic-, entropy, shear, acoustic+)
    let basis = [
        [one, one / lorentz, lorentz * t, one],
        [hw * a_m * lm, n, two * h * w2 * n * t, hw * a_p * lp],
        [hw * t, t, h * (one + two * w2 * t * t), hw * t],
        [hw * a_m, one, two * h * w2 * t, hw * a_p],
    ];
    let scale = [
        ((b - c) / two).sqrt(),
        (eos.gm1() * avg.rho * w2 * lorentz / gamma).sqrt(),
        (avg.p / (lorentz * (one - n * n) * h)).sqrt(),
        ((b + c) / two).sqrt(),
    ];
    let local = <[[T; 4]; 4]>::from_fn(|i, j| basis[i][j] * scale[j]);

    let (r, lambdas) = match axis {
        Axis::X => (local, [lm, n, n, lp]),
        Axis::Y => {
            let perm = [0usize, 2, 1, 3];
            (<[[T; 4]; 4]>::from_fn(|i, j| local[perm[i]][perm[j]]), [lm, n, n, lp])
        }
    };
    ScaledEigenSystem { r, lambdas, axis }
}
