use crate::dim::{Array, Dimension};
use crate::error::{Error, Result};
use crate::num::Real;
use crate::state::{cons_to_prim_with_guess, prim_to_cons, ConsState, EosParams, PrimState};

/// Halo width shared by the sixth-order flux and WENO5 stencils.
pub const GHOST: usize = 3;

/// Uniform Cartesian mesh. In one dimension `ny = 1` and there is no halo in
/// `y`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid<T> {
    pub dim: usize,
    pub nx: usize,
    pub ny: usize,
    pub dx: T,
    pub dy: T,
    pub x0: T,
    pub y0: T,
    pub ghost: usize,
}

impl<T: Real> Grid<T> {
    pub fn new_1d(n: usize, x: (T, T)) -> Result<Self> {
        check_cells("n", n)?;
        check_interval("x", x)?;
        Ok(Self {
            dim: 1,
            nx: n,
            ny: 1,
            dx: (x.1 - x.0) / T::from_usize(n).unwrap(),
            dy: T::one(),
            x0: x.0,
            y0: T::zero(),
            ghost: GHOST,
        })
    }

    pub fn new_2d(nx: usize, ny: usize, x: (T, T), y: (T, T)) -> Result<Self> {
        check_cells("nx", nx)?;
        check_cells("ny", ny)?;
        check_interval("x", x)?;
        check_interval("y", y)?;
        Ok(Self {
            dim: 2,
            nx,
            ny,
            dx: (x.1 - x.0) / T::from_usize(nx).unwrap(),
            dy: (y.1 - y.0) / T::from_usize(ny).unwrap(),
            x0: x.0,
            y0: y.0,
            ghost: GHOST,
        })
    }

    /// Stored cells along `x`, halo included.
    #[inline]
    pub fn padded_nx(&self) -> usize {
        self.nx + 2 * self.ghost
    }

    #[inline]
    pub fn padded_ny(&self) -> usize {
        if self.dim == 1 {
            1
        } else {
            self.ny + 2 * self.ghost
        }
    }

    /// Halo width along `y` (zero in one dimension).
    #[inline]
    pub fn ghost_y(&self) -> usize {
        if self.dim == 1 {
            0
        } else {
            self.ghost
        }
    }

    #[inline]
    pub fn interior_len(&self) -> usize {
        self.nx * self.ny
    }

    /// Centre of interior cell `i`; negative or `>= nx` indices address the halo.
    #[inline]
    pub fn x_center(&self, i: isize) -> T {
        self.x0 + (T::from_isize(i).unwrap() + T::half()) * self.dx
    }

    #[inline]
    pub fn y_center(&self, j: isize) -> T {
        if self.dim == 1 {
            T::zero()
        } else {
            self.y0 + (T::from_isize(j).unwrap() + T::half()) * self.dy
        }
    }

    #[inline]
    pub fn x_end(&self) -> T {
        self.x0 + T::from_usize(self.nx).unwrap() * self.dx
    }

    #[inline]
    pub fn y_end(&self) -> T {
        self.y0 + T::from_usize(self.ny).unwrap() * self.dy
    }

    #[inline]
    pub fn cell_volume(&self) -> T {
        if self.dim == 1 {
            self.dx
        } else {
            self.dx * self.dy
        }
    }

    /// Storage index of interior cell `(i, j)`, halo cells reachable through
    /// negative offsets.
    #[inline]
    pub fn index(&self, i: isize, j: isize) -> usize {
        let pi = (i + self.ghost as isize) as usize;
        let pj = (j + self.ghost_y() as isize) as usize;
        pj * self.padded_nx() + pi
    }
}

fn check_cells(name: &str, n: usize) -> Result<()> {
    if n < 2 * GHOST {
        return Err(Error::InvalidConfig(format!("{name}={n} is below the minimum of {} cells", 2 * GHOST)));
    }
    Ok(())
}

fn check_interval<T: Real>(name: &str, (a, b): (T, T)) -> Result<()> {
    if !(a.is_finite() && b.is_finite() && b > a) {
        return Err(Error::InvalidConfig(format!("empty or invalid {name} interval [{a}, {b}]")));
    }
    Ok(())
}

/// Conservative states on a padded grid with a synchronized primitive cache.
#[derive(Clone, Debug)]
pub struct Field<T: Real, D: Dimension> {
    grid: Grid<T>,
    pub(crate) cons: Vec<ConsState<T, D>>,
    pub(crate) prim: Vec<PrimState<T, D>>,
}

impl<T: Real, D: Dimension> Field<T, D> {
    /// Samples `ic` at every cell centre, halo included, so that fixed
    /// (Dirichlet) ghost cells carry the initial data.
    pub fn from_prim_fn(grid: Grid<T>, eos: &EosParams<T>, ic: impl Fn(T, T) -> PrimState<T, D>) -> Result<Self> {
        if grid.dim != D::DIM {
            return Err(Error::InvalidConfig(format!("{}D grid for a {}D field", grid.dim, D::DIM)));
        }
        let (px, py) = (grid.padded_nx(), grid.padded_ny());
        let (gx, gy) = (grid.ghost as isize, grid.ghost_y() as isize);
        let mut prim = Vec::with_capacity(px * py);
        for pj in 0..py as isize {
            for pi in 0..px as isize {
                let (i, j) = (pi - gx, pj - gy);
                let w = ic(grid.x_center(i), grid.y_center(j));
                let interior = i >= 0 && j >= 0 && (i as usize) < grid.nx && (j as usize) < grid.ny;
                if interior && !w.is_admissible() {
                    return Err(Error::InvalidConfig(format!(
                        "initial state at cell ({i}, {j}) is not admissible: {w:?}"
                    )));
                }
                prim.push(w);
            }
        }
        let cons = prim.iter().map(|w| prim_to_cons(w, eos)).collect();
        Ok(Self { grid, cons, prim })
    }

    #[inline]
    pub fn grid(&self) -> &Grid<T> {
        &self.grid
    }

    #[inline]
    pub fn cons_at(&self, i: isize, j: isize) -> &ConsState<T, D> {
        &self.cons[self.grid.index(i, j)]
    }

    #[inline]
    pub fn prim_at(&self, i: isize, j: isize) -> &PrimState<T, D> {
        &self.prim[self.grid.index(i, j)]
    }

    /// Interior cells in storage order (`x` fastest).
    pub fn interior_indices(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let (nx, ny) = (self.grid.nx, self.grid.ny);
        (0..ny).flat_map(move |j| (0..nx).map(move |i| (i, j)))
    }

    pub fn interior_prims(&self) -> Vec<PrimState<T, D>> {
        self.interior_indices().map(|(i, j)| *self.prim_at(i as isize, j as isize)).collect()
    }

    pub fn interior_cons(&self) -> Vec<ConsState<T, D>> {
        self.interior_indices().map(|(i, j)| *self.cons_at(i as isize, j as isize)).collect()
    }

    /// Interior conservative variables as flat vectors, `x` fastest.
    pub fn interior_vars(&self) -> Vec<D::Vars<T>> {
        self.interior_indices().map(|(i, j)| self.cons_at(i as isize, j as isize).to_vars()).collect()
    }

    /// Rest-mass density of every interior cell, `x` fastest.
    pub fn density(&self) -> Vec<T> {
        self.interior_indices().map(|(i, j)| self.prim_at(i as isize, j as isize).rho).collect()
    }

    /// Overwrites the interior conservative states; the primitive cache is
    /// stale until [`Field::refresh`].
    pub fn set_interior_vars(&mut self, vars: &[D::Vars<T>]) -> Result<()> {
        if vars.len() != self.grid.interior_len() {
            return Err(Error::ShapeMismatch { expected: self.grid.interior_len(), got: vars.len() });
        }
        let nx = self.grid.nx;
        for (k, v) in vars.iter().enumerate() {
            let idx = self.grid.index((k % nx) as isize, (k / nx) as isize);
            self.cons[idx] = ConsState::from_vars(v);
        }
        Ok(())
    }

    /// Recovers interior primitives, seeding each pressure solve with the
    /// cached value.
    pub fn refresh(&mut self, eos: &EosParams<T>) -> Result<()> {
        let (nx, ny) = (self.grid.nx, self.grid.ny);
        for j in 0..ny {
            for i in 0..nx {
                let idx = self.grid.index(i as isize, j as isize);
                let guess = self.prim[idx].p;
                self.prim[idx] = cons_to_prim_with_guess(&self.cons[idx], eos, Some(guess))
                    .map_err(|e| e.at_cell(i as isize, j as isize))?;
            }
        }
        Ok(())
    }

    /// `Σ U · vol` over the interior.
    pub fn total_conserved(&self) -> D::Vars<T> {
        let vol = self.grid.cell_volume();
        self.interior_vars().iter().fold(D::Vars::<T>::zero(), |acc, v| acc.add(v)).scale(vol)
    }
}
