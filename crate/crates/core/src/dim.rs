//! Spatial dimension as a type parameter.
//!
//! The one- and two-dimensional systems share the scheme machinery but have
//! their own closed-form fluxes and eigenvector matrices. [`Dimension`] ties a
//! marker type ([`D1`], [`D2`]) to its fixed-size vector types and dispatches
//! to the right closed forms.

use std::fmt::Debug;
use std::ops::{Index, IndexMut};

use crate::ecflux;
use crate::eigen::{self, ScaledEigenSystem};
use crate::means::StatePair;
use crate::num::Real;
use crate::state::{EosParams, PrimState};

/// Coordinate direction of a flux or a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    #[inline]
    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
        }
    }
}

/// Fixed-length vector of scalars (velocities, conserved variables, fluxes).
pub trait Array<T: Real>:
    Copy
    + Debug
    + PartialEq
    + Send
    + Sync
    + AsRef<[T]>
    + AsMut<[T]>
    + Index<usize, Output = T>
    + IndexMut<usize>
{
    const LEN: usize;

    fn from_fn(f: impl FnMut(usize) -> T) -> Self;

    #[inline]
    fn splat(x: T) -> Self {
        Self::from_fn(|_| x)
    }

    #[inline]
    fn zero() -> Self {
        Self::splat(T::zero())
    }

    #[inline]
    fn map(&self, mut f: impl FnMut(T) -> T) -> Self {
        Self::from_fn(|k| f(self[k]))
    }

    #[inline]
    fn zip_map(&self, other: &Self, mut f: impl FnMut(T, T) -> T) -> Self {
        Self::from_fn(|k| f(self[k], other[k]))
    }

    #[inline]
    fn add(&self, other: &Self) -> Self {
        self.zip_map(other, |a, b| a + b)
    }

    #[inline]
    fn sub(&self, other: &Self) -> Self {
        self.zip_map(other, |a, b| a - b)
    }

    #[inline]
    fn scale(&self, s: T) -> Self {
        self.map(|a| a * s)
    }

    #[inline]
    fn dot(&self, other: &Self) -> T {
        self.as_ref()
            .iter()
            .zip(other.as_ref())
            .fold(T::zero(), |acc, (&a, &b)| acc + a * b)
    }

    #[inline]
    fn norm_sq(&self) -> T {
        self.dot(self)
    }

    /// Largest absolute entry.
    #[inline]
    fn max_abs(&self) -> T {
        self.as_ref().iter().fold(T::zero(), |m, &a| m.max(a.abs()))
    }

    #[inline]
    fn all_finite(&self) -> bool {
        self.as_ref().iter().all(|a| a.is_finite())
    }
}

impl<T: Real, const N: usize> Array<T> for [T; N] {
    const LEN: usize = N;

    #[inline]
    fn from_fn(f: impl FnMut(usize) -> T) -> Self {
        std::array::from_fn(f)
    }
}

/// Square matrix stored as an array of rows.
pub trait Matrix<T: Real, V: Array<T>>:
    Copy + Debug + Send + Sync + AsRef<[V]> + AsMut<[V]> + Index<usize, Output = V> + IndexMut<usize>
{
    fn from_fn(f: impl FnMut(usize, usize) -> T) -> Self;

    #[inline]
    fn get(&self, row: usize, col: usize) -> T {
        self[row][col]
    }

    /// `self · x`
    #[inline]
    fn mul_vec(&self, x: &V) -> V {
        V::from_fn(|r| self[r].dot(x))
    }

    /// `selfᵀ · x`
    #[inline]
    fn mul_t_vec(&self, x: &V) -> V {
        let mut out = V::zero();
        for (r, row) in self.as_ref().iter().enumerate() {
            let xr = x[r];
            for c in 0..V::LEN {
                out[c] = out[c] + row[c] * xr;
            }
        }
        out
    }

    #[inline]
    fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self[c][r])
    }

    fn mul_mat(&self, other: &Self) -> Self {
        Self::from_fn(|r, c| {
            (0..V::LEN).fold(T::zero(), |acc, k| acc + self[r][k] * other[k][c])
        })
    }
}

impl<T: Real, const N: usize> Matrix<T, [T; N]> for [[T; N]; N] {
    #[inline]
    fn from_fn(mut f: impl FnMut(usize, usize) -> T) -> Self {
        std::array::from_fn(|r| std::array::from_fn(|c| f(r, c)))
    }
}

/// Spatial dimension of the system: `d` velocity components, `d + 2`
/// conserved variables.
pub trait Dimension: Copy + Clone + Debug + Default + PartialEq + Send + Sync + 'static {
    const DIM: usize;
    const NVAR: usize;

    /// Velocity (or momentum) vector, length `d`.
    type Vel<T: Real>: Array<T>;
    /// Conserved variables, fluxes and entropy variables, length `d + 2`.
    type Vars<T: Real>: Array<T>;
    /// `(d + 2) × (d + 2)` matrix.
    type Mat<T: Real>: Matrix<T, Self::Vars<T>>;

    fn axes() -> &'static [Axis];

    /// Two-point entropy conservative flux in direction `axis`.
    fn ec_flux<T: Real>(pair: &StatePair<T, Self>, eos: &EosParams<T>, axis: Axis) -> Self::Vars<T>;

    /// Scaled right eigenvectors and eigenvalues at `avg` in direction `axis`.
    fn eigensystem<T: Real>(
        avg: &PrimState<T, Self>,
        eos: &EosParams<T>,
        axis: Axis,
    ) -> ScaledEigenSystem<T, Self>;
}

/// One space dimension.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct D1;

/// Two space dimensions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct D2;

impl Dimension for D1 {
    const DIM: usize = 1;
    const NVAR: usize = 3;

    type Vel<T: Real> = [T; 1];
    type Vars<T: Real> = [T; 3];
    type Mat<T: Real> = [[T; 3]; 3];

    fn axes() -> &'static [Axis] {
        &[Axis::X]
    }

    #[inline]
    fn ec_flux<T: Real>(pair: &StatePair<T, Self>, eos: &EosParams<T>, axis: Axis) -> [T; 3] {
        debug_assert_eq!(axis, Axis::X);
        ecflux::ec_flux_1d(pair, eos)
    }

    #[inline]
    fn eigensystem<T: Real>(
        avg: &PrimState<T, Self>,
        eos: &EosParams<T>,
        axis: Axis,
    ) -> ScaledEigenSystem<T, Self> {
        debug_assert_eq!(axis, Axis::X);
        eigen::scaled_eigensystem_1d(avg, eos)
    }
}

impl Dimension for D2 {
    const DIM: usize = 2;
    const NVAR: usize = 4;

    type Vel<T: Real> = [T; 2];
    type Vars<T: Real> = [T; 4];
    type Mat<T: Real> = [[T; 4]; 4];

    fn axes() -> &'static [Axis] {
        &[Axis::X, Axis::Y]
    }

    #[inline]
    fn ec_flux<T: Real>(pair: &StatePair<T, Self>, eos: &EosParams<T>, axis: Axis) -> [T; 4] {
        ecflux::ec_flux_2d(pair, eos, axis)
    }

    #[inline]
    fn eigensystem<T: Real>(
        avg: &PrimState<T, Self>,
        eos: &EosParams<T>,
        axis: Axis,
    ) -> ScaledEigenSystem<T, Self> {
        eigen::scaled_eigensystem_2d(avg, eos, axis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_transpose_products() {
        let a: [[f64; 3]; 3] = [[1.0, 2.0, 3.0], [4.0, 5.0, 6.0], [7.0, 8.0, 10.0]];
        let x = [1.0, -1.0, 2.0];
        assert_eq!(a.mul_vec(&x), [5.0, 11.0, 19.0]);
        assert_eq!(a.mul_t_vec(&x), a.transpose().mul_vec(&x));
        let i3: [[f64; 3]; 3] = Matrix::from_fn(|r, c| if r == c { 1.0 } else { 0.0 });
        assert_eq!(a.mul_mat(&i3), a);
    }

    #[test]
    fn array_helpers() {
        let a = [1.0_f64, -4.0, 2.0];
        let b = [0.5_f64, 1.0, 1.0];
        assert_eq!(a.dot(&b), -1.5);
        assert_eq!(a.max_abs(), 4.0);
        assert_eq!(a.sub(&a), <[f64; 3]>::zero());
    }
}
