//! Semi-discrete conservative finite difference scheme
//!
//! `dU/dt = -(F̂_{i+1/2} - F̂_{i-1/2})/Δx [- (Ĝ_{j+1/2} - Ĝ_{j-1/2})/Δy]`,
//! assembled line by line. Along each line the two-point fluxes between
//! cells one, two and three apart are evaluated once and shared by the
//! sixth-order combinations at neighbouring interfaces.

mod boundary;
mod grid;

pub use boundary::{apply_boundary, BoundaryConditions, BoundaryKind};
pub use grid::{Field, Grid, GHOST};

use crate::dim::{Array, Axis, Dimension};
use crate::ecflux::combine_sixth;
use crate::eigen::{dissipation_matrix, interface_average, DissipationKind};
use crate::error::Result;
use crate::means::StatePair;
use crate::num::Real;
use crate::state::{entropy_variables, max_char_speed, physical_flux, ConsState, EosParams, PrimState};
use crate::weno::scaled_variable_jumps;

/// Interface flux used by [`semidiscrete_rhs`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FluxMode {
    /// Sixth-order entropy conservative flux, no dissipation.
    Ec,
    /// Sixth-order entropy conservative flux plus WENO5 switched dissipation.
    Es,
    /// First-order local Lax–Friedrichs flux.
    Llf1,
}

impl FluxMode {
    pub fn name(self) -> &'static str {
        match self {
            FluxMode::Ec => "ec",
            FluxMode::Es => "es",
            FluxMode::Llf1 => "llf",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchemeConfig<T> {
    pub flux_mode: FluxMode,
    pub dissipation: DissipationKind,
    pub eos: EosParams<T>,
}

impl<T: Real> SchemeConfig<T> {
    pub fn new(flux_mode: FluxMode, dissipation: DissipationKind, eos: EosParams<T>) -> Self {
        Self { flux_mode, dissipation, eos }
    }

    pub fn entropy_stable(eos: EosParams<T>) -> Self {
        Self::new(FluxMode::Es, DissipationKind::default(), eos)
    }
}

/// Per-line scratch space, reused across lines and calls.
struct LineScratch<T: Real, D: Dimension> {
    prim: Vec<PrimState<T, D>>,
    cons: Vec<ConsState<T, D>>,
    v: Vec<D::Vars<T>>,
    pairs: [Vec<D::Vars<T>>; 3],
    flux: Vec<D::Vars<T>>,
}

impl<T: Real, D: Dimension> LineScratch<T, D> {
    fn new(len: usize) -> Self {
        let zero = D::Vars::<T>::zero();
        Self {
            prim: Vec::with_capacity(len),
            cons: Vec::with_capacity(len),
            v: vec![zero; len],
            pairs: [vec![zero; len], vec![zero; len], vec![zero; len]],
            flux: vec![zero; len],
        }
    }
}

/// Numerical fluxes at the `n + 1` interfaces of one padded line of
/// `n + 2·GHOST` cells; `flux[k]` sits between interior cells `k - 1` and `k`.
fn line_fluxes<T: Real, D: Dimension>(s: &mut LineScratch<T, D>, cfg: &SchemeConfig<T>, axis: Axis) {
    let g = GHOST;
    let len = s.prim.len();
    let n = len - 2 * g;
    let eos = &cfg.eos;

    if cfg.flux_mode == FluxMode::Llf1 {
        for k in 0..=n {
            let p = g - 1 + k;
            let (wl, wr) = (&s.prim[p], &s.prim[p + 1]);
            let (ul, ur) = (s.cons[p].to_vars(), s.cons[p + 1].to_vars());
            let alpha = max_char_speed(wl, eos, axis).max(max_char_speed(wr, eos, axis));
            let fl = physical_flux(wl, &s.cons[p], axis);
            let fr = physical_flux(wr, &s.cons[p + 1], axis);
            s.flux[k] = D::Vars::<T>::from_fn(|c| T::half() * (fl[c] + fr[c]) - T::half() * alpha * (ur[c] - ul[c]));
        }
        return;
    }

    // pairs[s-1][q] = F̃(q, q + s) for q in g-s .. g+n
    for (sep, buf) in s.pairs.iter_mut().enumerate() {
        let sep = sep + 1;
        for q in (g - sep)..(g + n) {
            buf[q] = D::ec_flux(&StatePair::new(s.prim[q], s.prim[q + sep]), eos, axis);
        }
    }
    let [p1, p2, p3] = &s.pairs;
    for k in 0..=n {
        let p = g - 1 + k;
        s.flux[k] = combine_sixth(&p1[p], &p2[p - 1], &p2[p], &p3[p - 2], &p3[p - 1], &p3[p]);
    }

    if cfg.flux_mode == FluxMode::Es {
        for (v, w) in s.v.iter_mut().zip(&s.prim) {
            *v = entropy_variables(w, eos);
        }
        for k in 0..=n {
            let p = g - 1 + k;
            let avg = interface_average(&StatePair::new(s.prim[p], s.prim[p + 1]));
            let sys = D::eigensystem(&avg, eos, axis);
            let stencil: [D::Vars<T>; 6] = std::array::from_fn(|m| s.v[p - 2 + m]);
            let jumps = scaled_variable_jumps(&stencil, &sys);
            let lam = dissipation_matrix(&sys, cfg.dissipation);
            let gated = D::Vars::<T>::from_fn(|l| jumps.switch[l] * lam[l] * jumps.w_jump_reconstructed[l]);
            let diss = sys.apply(&gated);
            s.flux[k] = s.flux[k].zip_map(&diss, |f, d| f - T::half() * d);
        }
    }
}

/// Accumulates the contribution of every line along `axis` into `rhs`.
fn sweep<T: Real, D: Dimension>(
    field: &Field<T, D>,
    cfg: &SchemeConfig<T>,
    axis: Axis,
    rhs: &mut [D::Vars<T>],
    s: &mut LineScratch<T, D>,
) {
    let grid = *field.grid();
    let g = GHOST as isize;
    let (nx, ny) = (grid.nx, grid.ny);
    let (n_lines, n_along, h) = match axis {
        Axis::X => (ny, nx, grid.dx),
        Axis::Y => (nx, ny, grid.dy),
    };
    let inv_h = T::one() / h;
    for line in 0..n_lines {
        s.prim.clear();
        s.cons.clear();
        for a in -g..(n_along as isize + g) {
            let idx = match axis {
                Axis::X => grid.index(a, line as isize),
                Axis::Y => grid.index(line as isize, a),
            };
            s.prim.push(field.prim[idx]);
            s.cons.push(field.cons[idx]);
        }
        line_fluxes(s, cfg, axis);
        for a in 0..n_along {
            let out = match axis {
                Axis::X => line * nx + a,
                Axis::Y => a * nx + line,
            };
            let (fl, fr) = (&s.flux[a], &s.flux[a + 1]);
            rhs[out] = D::Vars::<T>::from_fn(|c| rhs[out][c] - (fr[c] - fl[c]) * inv_h);
        }
    }
}

/// Fills the halo and returns `L(U)` for every interior cell (`x` fastest).
pub fn semidiscrete_rhs<T: Real, D: Dimension>(
    field: &mut Field<T, D>,
    cfg: &SchemeConfig<T>,
    bc: &BoundaryConditions,
) -> Result<Vec<D::Vars<T>>> {
    bc.validate(D::DIM)?;
    apply_boundary(field, bc);
    let grid = *field.grid();
    let mut rhs = vec![D::Vars::<T>::zero(); grid.interior_len()];
    let longest = grid.nx.max(grid.ny) + 2 * GHOST;
    let mut scratch = LineScratch::new(longest);
    for &axis in D::axes() {
        sweep(field, cfg, axis, &mut rhs, &mut scratch);
    }
    Ok(rhs)
}

/// `Σ_i V_iᵀ L(U)_i · vol`: the semi-discrete rate of change of total entropy.
pub fn entropy_production<T: Real, D: Dimension>(
    field: &mut Field<T, D>,
    cfg: &SchemeConfig<T>,
    bc: &BoundaryConditions,
) -> Result<T> {
    let rhs = semidiscrete_rhs(field, cfg, bc)?;
    let vol = field.grid().cell_volume();
    let prims = field.interior_prims();
    Ok(prims.iter().zip(&rhs).fold(T::zero(), |acc, (w, l)| acc + entropy_variables(w, &cfg.eos).dot(l)) * vol)
}

/// Scale against which [`entropy_production`] is judged:
/// `Σ_i Σ_k |V_i,k| |L_i,k| · vol`.
pub fn entropy_production_scale<T: Real, D: Dimension>(
    field: &mut Field<T, D>,
    cfg: &SchemeConfig<T>,
    bc: &BoundaryConditions,
) -> Result<T> {
    let rhs = semidiscrete_rhs(field, cfg, bc)?;
    let vol = field.grid().cell_volume();
    let prims = field.interior_prims();
    Ok(prims.iter().zip(&rhs).fold(T::zero(), |acc, (w, l)| {
        let v = entropy_variables(w, &cfg.eos);
        acc + v.map(T::abs).dot(&l.map(T::abs))
    }) * vol)
}
