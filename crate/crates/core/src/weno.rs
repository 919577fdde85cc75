//! Fifth-order WENO reconstruction (Jiang–Shu weights) of the scaled entropy
//! variables, and the switch enforcing the sign property.

use crate::dim::{Array, Dimension};
use crate::eigen::ScaledEigenSystem;
use crate::num::Real;

/// Regularization added to the smoothness indicators.
pub const WENO_EPS: f64 = 1e-6;

/// Optimal (linear) weights of the three quadratic candidates, ordered from
/// the most upwind to the most downwind stencil.
pub const LINEAR_WEIGHTS: [f64; 3] = [0.1, 0.6, 0.3];

/// Which limit at `x_{i+1/2}` is reconstructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `w⁻_{i+1/2}` from cells `i-2..=i+2`.
    Left,
    /// `w⁺_{i+1/2}` from cells `i-1..=i+3`.
    Right,
}

#[inline(always)]
fn oriented<T: Real>(stencil: &[T; 5], side: Side) -> [T; 5] {
    match side {
        Side::Left => *stencil,
        Side::Right => [stencil[4], stencil[3], stencil[2], stencil[1], stencil[0]],
    }
}

#[inline(always)]
fn candidates<T: Real>(s: &[T; 5]) -> [T; 3] {
    let [a, b, c, d, e] = *s;
    let sixth = T::lit(1.0 / 6.0);
    [
        (T::two() * a - T::lit(7.0) * b + T::lit(11.0) * c) * sixth,
        (-b + T::lit(5.0) * c + T::two() * d) * sixth,
        (T::two() * c + T::lit(5.0) * d - e) * sixth,
    ]
}

#[inline(always)]
fn smoothness<T: Real>(s: &[T; 5]) -> [T; 3] {
    let [a, b, c, d, e] = *s;
    let k = T::lit(13.0 / 12.0);
    let q = T::lit(0.25);
    let two = T::two();
    let three = T::lit(3.0);
    let four = T::lit(4.0);
    let sq = |x: T| x * x;
    [
        k * sq(a - two * b + c) + q * sq(a - four * b + three * c),
        k * sq(b - two * c + d) + q * sq(b - d),
        k * sq(c - two * d + e) + q * sq(three * c - four * d + e),
    ]
}

/// WENO5 interface value. `stencil` lists five consecutive values in order of
/// increasing `x`: cells `i-2..=i+2` for [`Side::Left`], `i-1..=i+3` for
/// [`Side::Right`].
#[inline]
pub fn weno5_reconstruct<T: Real>(stencil: &[T; 5], side: Side) -> T {
    let s = oriented(stencil, side);
    let q = candidates(&s);
    let beta = smoothness(&s);
    let eps = T::lit(WENO_EPS);
    let mut alpha = [T::zero(); 3];
    for k in 0..3 {
        let den = eps + beta[k];
        alpha[k] = T::lit(LINEAR_WEIGHTS[k]) / (den * den);
    }
    let sum = alpha[0] + alpha[1] + alpha[2];
    (alpha[0] * q[0] + alpha[1] * q[1] + alpha[2] * q[2]) / sum
}

/// The underlying fifth-order linear reconstruction (optimal weights only).
#[inline]
pub fn weno5_linear<T: Real>(stencil: &[T; 5], side: Side) -> T {
    let q = candidates(&oriented(stencil, side));
    (0..3).fold(T::zero(), |acc, k| acc + T::lit(LINEAR_WEIGHTS[k]) * q[k])
}

/// Reconstructed and raw jumps of `w = RᵀV` at one interface together with
/// the switch `S`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InterfaceJumps<T: Real, D: Dimension> {
    /// `<<w>> = w⁺ - w⁻`
    pub w_jump_reconstructed: D::Vars<T>,
    /// `[[w]] = Rᵀ(V_{i+1} - V_i)`
    pub w_jump_raw: D::Vars<T>,
    /// 1 where `<<w>>` and `[[w]]` share a nonzero sign, 0 otherwise.
    pub switch: D::Vars<T>,
}

/// `1` iff `sign(a) = sign(b) != 0`.
#[inline(always)]
pub fn sign_switch<T: Real>(a: T, b: T) -> T {
    let same = (a > T::zero() && b > T::zero()) || (a < T::zero() && b < T::zero());
    if same {
        T::one()
    } else {
        T::zero()
    }
}

/// Jumps of the scaled entropy variables at `x_{i+1/2}`. `stencil_v` holds
/// `V_{i-2}, .., V_{i+3}` and `sys` is frozen at that interface.
pub fn scaled_variable_jumps<T: Real, D: Dimension>(
    stencil_v: &[D::Vars<T>; 6],
    sys: &ScaledEigenSystem<T, D>,
) -> InterfaceJumps<T, D> {
    let w: [D::Vars<T>; 6] = std::array::from_fn(|k| sys.project(&stencil_v[k]));
    jumps_from_scaled(&w)
}

/// As [`scaled_variable_jumps`] for already projected `w_{i-2}, .., w_{i+3}`.
#[inline]
pub fn jumps_from_scaled<T: Real, D: Dimension>(w: &[D::Vars<T>; 6]) -> InterfaceJumps<T, D> {
    let rec = D::Vars::<T>::from_fn(|l| {
        let minus = weno5_reconstruct(&[w[0][l], w[1][l], w[2][l], w[3][l], w[4][l]], Side::Left);
        let plus = weno5_reconstruct(&[w[1][l], w[2][l], w[3][l], w[4][l], w[5][l]], Side::Right);
        plus - minus
    });
    let raw = w[3].sub(&w[2]);
    InterfaceJumps { w_jump_reconstructed: rec, w_jump_raw: raw, switch: rec.zip_map(&raw, sign_switch) }
}
