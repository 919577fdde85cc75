use crate::dim::{Axis, Dimension};
use crate::error::{Error, Result};
use crate::num::Real;
use crate::state::{ConsState, PrimState};

use super::grid::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryKind {
    /// Wrap-around copy; the opposite side must be periodic as well.
    Periodic,
    /// Zeroth-order extrapolation of the adjacent interior cell.
    Outflow,
    /// Ghost cells keep the states they were initialized with.
    Dirichlet,
    /// Mirror image with the normal velocity reversed.
    Reflective,
}

/// One [`BoundaryKind`] per side of the domain. The `y` sides are ignored in
/// one dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryConditions {
    pub x_lo: BoundaryKind,
    pub x_hi: BoundaryKind,
    pub y_lo: BoundaryKind,
    pub y_hi: BoundaryKind,
}

impl BoundaryConditions {
    pub const fn uniform(kind: BoundaryKind) -> Self {
        Self { x_lo: kind, x_hi: kind, y_lo: kind, y_hi: kind }
    }

    pub const fn periodic() -> Self {
        Self::uniform(BoundaryKind::Periodic)
    }

    pub const fn outflow() -> Self {
        Self::uniform(BoundaryKind::Outflow)
    }

    pub fn validate(&self, dim: usize) -> Result<()> {
        let pairs: &[(&str, BoundaryKind, BoundaryKind)] = if dim == 1 {
            &[("x", self.x_lo, self.x_hi)]
        } else {
            &[("x", self.x_lo, self.x_hi), ("y", self.y_lo, self.y_hi)]
        };
        for &(name, lo, hi) in pairs {
            if (lo == BoundaryKind::Periodic) != (hi == BoundaryKind::Periodic) {
                return Err(Error::InvalidConfig(format!(
                    "periodic boundary in {name} requires both sides periodic, got {lo:?}/{hi:?}"
                )));
            }
        }
        Ok(())
    }

    pub fn is_periodic(&self, dim: usize) -> bool {
        self.x_lo == BoundaryKind::Periodic && (dim == 1 || self.y_lo == BoundaryKind::Periodic)
    }
}

#[inline]
fn reflect<T: Real, D: Dimension>(
    (u, w): (ConsState<T, D>, PrimState<T, D>),
    axis: Axis,
) -> (ConsState<T, D>, PrimState<T, D>) {
    let (mut u, mut w) = (u, w);
    let k = axis.index();
    u.mom[k] = -u.mom[k];
    w.vel[k] = -w.vel[k];
    (u, w)
}

/// Fills the halo of `field` from its interior (corner cells of a 2D field
/// are not touched; no stencil reads them).
pub fn apply_boundary<T: Real, D: Dimension>(field: &mut Field<T, D>, bc: &BoundaryConditions) {
    let grid = *field.grid();
    let g = grid.ghost as isize;
    let (nx, ny) = (grid.nx as isize, grid.ny as isize);

    let fill = |dst: usize, src: usize, kind: BoundaryKind, axis: Axis, field: &mut Field<T, D>| {
        let pair = (field.cons[src], field.prim[src]);
        let (u, w) = match kind {
            BoundaryKind::Dirichlet => return,
            BoundaryKind::Reflective => reflect(pair, axis),
            BoundaryKind::Periodic | BoundaryKind::Outflow => pair,
        };
        field.cons[dst] = u;
        field.prim[dst] = w;
    };

    for j in 0..ny {
        for k in 1..=g {
            let lo = grid.index(-k, j);
            let src = match bc.x_lo {
                BoundaryKind::Periodic => nx - k,
                BoundaryKind::Reflective => k - 1,
                _ => 0,
            };
            fill(lo, grid.index(src, j), bc.x_lo, Axis::X, field);

            let hi = grid.index(nx - 1 + k, j);
            let src = match bc.x_hi {
                BoundaryKind::Periodic => k - 1,
                BoundaryKind::Reflective => nx - k,
                _ => nx - 1,
            };
            fill(hi, grid.index(src, j), bc.x_hi, Axis::X, field);
        }
    }

    if D::DIM == 1 {
        return;
    }
    for i in 0..nx {
        for k in 1..=g {
            let lo = grid.index(i, -k);
            let src = match bc.y_lo {
                BoundaryKind::Periodic => ny - k,
                BoundaryKind::Reflective => k - 1,
                _ => 0,
            };
            fill(lo, grid.index(i, src), bc.y_lo, Axis::Y, field);

            let hi = grid.index(i, ny - 1 + k);
            let src = match bc.y_hi {
                BoundaryKind::Periodic => k - 1,
                BoundaryKind::Reflective => ny - k,
                _ => ny - 1,
            };
            fill(hi, grid.index(i, src), bc.y_hi, Axis::Y, field);
        }
    }
}
