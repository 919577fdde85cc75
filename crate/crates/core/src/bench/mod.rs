//! Benchmark problems, error norms, convergence studies and fine-mesh
//! reference solutions.

mod problems;

pub use problems::{
    acc1d, acc2d, boosted_vortex, build, catalogue, AnyProblem, Problem, ProblemParams, SV_POST_SHOCK, SV_PRE_SHOCK,
};

use std::fmt;
use std::sync::Arc;

use crate::dim::{Dimension, D1};
use crate::eigen::DissipationKind;
use crate::error::{Error, Result};
use crate::num::Real;
use crate::scheme::{BoundaryConditions, Field, FluxMode, Grid, SchemeConfig};
use crate::state::{EosParams, PrimState};
use crate::timeint::{run, TimeControls};

pub type InitialCondition<T, D> = Arc<dyn Fn(T, T) -> PrimState<T, D> + Send + Sync>;
pub type ExactSolution<T, D> = Arc<dyn Fn(T, T, T) -> PrimState<T, D> + Send + Sync>;

/// A benchmark: domain, equation of state, initial and boundary data.
#[derive(Clone)]
pub struct ProblemSpec<T: Real, D: Dimension> {
    pub name: &'static str,
    pub x_range: (T, T),
    /// Ignored in one dimension.
    pub y_range: (T, T),
    pub gamma: T,
    /// `(x, y) ↦ W`; `y` is zero in one dimension.
    pub ic: InitialCondition<T, D>,
    pub bc: BoundaryConditions,
    pub t_end: T,
    /// `(x, y, t) ↦ W` where known.
    pub exact: Option<ExactSolution<T, D>>,
    pub default_n: (usize, usize),
}

impl<T: Real, D: Dimension> fmt::Debug for ProblemSpec<T, D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProblemSpec")
            .field("name", &self.name)
            .field("x_range", &self.x_range)
            .field("y_range", &self.y_range)
            .field("gamma", &self.gamma)
            .field("bc", &self.bc)
            .field("t_end", &self.t_end)
            .field("has_exact", &self.exact.is_some())
            .field("default_n", &self.default_n)
            .finish()
    }
}

impl<T: Real, D: Dimension> ProblemSpec<T, D> {
    pub fn eos(&self) -> Result<EosParams<T>> {
        EosParams::new(self.gamma)
    }

    /// Grid over the problem domain; `ny` is ignored in one dimension.
    pub fn grid(&self, nx: usize, ny: usize) -> Result<Grid<T>> {
        if D::DIM == 1 {
            Grid::new_1d(nx, self.x_range)
        } else {
            Grid::new_2d(nx, ny, self.x_range, self.y_range)
        }
    }

    pub fn default_grid(&self) -> Result<Grid<T>> {
        self.grid(self.default_n.0, self.default_n.1)
    }

    pub fn initial_field(&self, grid: Grid<T>, eos: &EosParams<T>) -> Result<Field<T, D>> {
        let ic = &self.ic;
        Field::from_prim_fn(grid, eos, |x, y| ic(x, y))
    }

    /// Exact density at the interior cell centres at time `t`.
    pub fn exact_density(&self, grid: &Grid<T>, t: T) -> Result<Vec<T>> {
        let exact = self
            .exact
            .as_ref()
            .ok_or_else(|| Error::InvalidConfig(format!("problem {} has no exact solution", self.name)))?;
        let mut out = Vec::with_capacity(grid.interior_len());
        for j in 0..grid.ny as isize {
            for i in 0..grid.nx as isize {
                out.push(exact(grid.x_center(i), grid.y_center(j), t).rho);
            }
        }
        Ok(out)
    }
}

/// `(ℓ¹, ℓ², ℓ∞)` norms of `numeric - exact`, normalized by the point count.
pub fn error_norms<T: Real>(numeric: &[T], exact: &[T]) -> Result<(T, T, T)> {
    if numeric.len() != exact.len() {
        return Err(Error::ShapeMismatch { expected: exact.len(), got: numeric.len() });
    }
    if numeric.is_empty() {
        return Err(Error::ShapeMismatch { expected: 1, got: 0 });
    }
    let n = T::from_usize(numeric.len()).unwrap();
    let (mut l1, mut l2, mut linf) = (T::zero(), T::zero(), T::zero());
    for (&a, &b) in numeric.iter().zip(exact) {
        let e = (a - b).abs();
        l1 = l1 + e;
        l2 = l2 + e * e;
        linf = linf.max(e);
    }
    Ok((l1 / n, (l2 / n).sqrt(), linf))
}

/// One resolution of a convergence table; orders are absent on the first row.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceRow<T> {
    pub n: usize,
    pub err_l1: T,
    pub err_l2: T,
    pub err_linf: T,
    pub order_l1: Option<T>,
    pub order_l2: Option<T>,
    pub order_linf: Option<T>,
}

/// Attaches observed orders `log(e_coarse/e_fine)/log(n_fine/n_coarse)`.
pub fn with_orders<T: Real>(errors: &[(usize, (T, T, T))]) -> Vec<ConvergenceRow<T>> {
    let mut rows: Vec<ConvergenceRow<T>> = Vec::with_capacity(errors.len());
    for (k, &(n, (l1, l2, linf))) in errors.iter().enumerate() {
        let order = |coarse: T, fine: T| -> Option<T> {
            let (n_prev, _) = errors[k - 1];
            let ratio = T::from_usize(n).unwrap() / T::from_usize(n_prev).unwrap();
            Some((coarse / fine).ln() / ratio.ln())
        };
        let row = if k == 0 {
            ConvergenceRow { n, err_l1: l1, err_l2: l2, err_linf: linf, order_l1: None, order_l2: None, order_linf: None }
        } else {
            let prev = rows[k - 1];
            ConvergenceRow {
                n,
                err_l1: l1,
                err_l2: l2,
                err_linf: linf,
                order_l1: order(prev.err_l1, l1),
                order_l2: order(prev.err_l2, l2),
                order_linf: order(prev.err_linf, linf),
            }
        };
        rows.push(row);
    }
    rows
}

/// Runs `problem` on `n × n` grids (`n` cells in 1D) and tabulates density
/// errors against the exact solution at `controls.t_end`.
pub fn convergence_study<T: Real, D: Dimension>(
    problem: &ProblemSpec<T, D>,
    resolutions: &[usize],
    cfg: &SchemeConfig<T>,
    controls: &TimeControls<T>,
) -> Result<Vec<ConvergenceRow<T>>> {
    let mut errors = Vec::with_capacity(resolutions.len());
    for &n in resolutions {
        let grid = problem.grid(n, n)?;
        let out = run(problem, grid, *cfg, *controls)?;
        let exact = problem.exact_density(&grid, controls.t_end)?;
        errors.push((n, error_norms(&out.field.density(), &exact)?));
    }
    Ok(with_orders(&errors))
}

/// Samples a fine 1D solution at the centres of a `target_n`-cell grid over
/// the same interval by linear interpolation between the nearest fine cell
/// centres (exact sampling when the refinement ratio is odd).
pub fn restrict_to_centers<T: Real>(fine: &[PrimState<T, D1>], target_n: usize) -> Result<Vec<PrimState<T, D1>>> {
    let fine_n = fine.len();
    if target_n == 0 || !fine_n.is_multiple_of(target_n) {
        return Err(Error::InvalidConfig(format!("fine resolution {fine_n} is not a multiple of {target_n}")));
    }
    let r = fine_n / target_n;
    Ok((0..target_n)
        .map(|i| {
            if r % 2 == 1 {
                fine[i * r + r / 2]
            } else {
                let (a, b) = (&fine[i * r + r / 2 - 1], &fine[i * r + r / 2]);
                let m = |x: T, y: T| T::half() * (x + y);
                PrimState::new(m(a.rho, b.rho), [m(a.vel[0], b.vel[0])], m(a.p, b.p))
            }
        })
        .collect())
}

/// First-order local Lax–Friedrichs solution on `fine_n` cells, restricted to
/// the centres of a `target_n`-cell grid.
pub fn reference_solution<T: Real>(
    problem: &ProblemSpec<T, D1>,
    fine_n: usize,
    target_n: usize,
    controls: &TimeControls<T>,
) -> Result<Vec<PrimState<T, D1>>> {
    if !fine_n.is_multiple_of(target_n) {
        return Err(Error::InvalidConfig(format!("fine resolution {fine_n} is not a multiple of {target_n}")));
    }
    let cfg = SchemeConfig::new(FluxMode::Llf1, DissipationKind::default(), problem.eos()?);
    let out = run(problem, problem.grid(fine_n, 1)?, cfg, *controls)?;
    restrict_to_centers(&out.field.interior_prims(), target_n)
}

/// Schlieren field `log10(1 + |∇ρ|)` from central differences (one-sided at
/// the domain edges). `rho` is ordered `x` fastest.
pub fn schlieren<T: Real>(rho: &[T], grid: &Grid<T>) -> Result<Vec<T>> {
    let (nx, ny) = (grid.nx, grid.ny);
    if rho.len() != nx * ny {
        return Err(Error::ShapeMismatch { expected: nx * ny, got: rho.len() });
    }
    let at = |i: usize, j: usize| rho[j * nx + i];
    let diff = |lo: T, hi: T, span: usize, h: T| (hi - lo) / (T::from_usize(span).unwrap() * h);
    let mut out = Vec::with_capacity(rho.len());
    for j in 0..ny {
        for i in 0..nx {
            let (il, ir) = (i.saturating_sub(1), (i + 1).min(nx - 1));
            let gx = diff(at(il, j), at(ir, j), ir - il, grid.dx);
            let gy = if grid.dim == 1 {
                T::zero()
            } else {
                let (jl, jr) = (j.saturating_sub(1), (j + 1).min(ny - 1));
                diff(at(i, jl), at(i, jr), jr - jl, grid.dy)
            };
            out.push((T::one() + (gx * gx + gy * gy).sqrt()).log10());
        }
    }
    Ok(out)
}
