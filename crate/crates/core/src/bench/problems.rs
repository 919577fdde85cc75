//! The benchmark catalogue. Initial data are transcribed as published.

use std::sync::Arc;

use crate::dim::{D1, D2};
use crate::num::Real;
use crate::scheme::{BoundaryConditions, BoundaryKind};
use crate::state::PrimState;

use super::ProblemSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Problem {
    Acc1d,
    Rp1,
    Rp2,
    Rp3,
    Rp4,
    Dp,
    Blast,
    Acc2d,
    Rp2d1,
    Rp2d2,
    Rp2d3,
    ShockBubble,
    ShockVortex,
}

impl Problem {
    pub const ALL: [Problem; 13] = [
        Problem::Acc1d,
        Problem::Rp1,
        Problem::Rp2,
        Problem::Rp3,
        Problem::Rp4,
        Problem::Dp,
        Problem::Blast,
        Problem::Acc2d,
        Problem::Rp2d1,
        Problem::Rp2d2,
        Problem::Rp2d3,
        Problem::ShockBubble,
        Problem::ShockVortex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Problem::Acc1d => "acc1d",
            Problem::Rp1 => "rp1",
            Problem::Rp2 => "rp2",
            Problem::Rp3 => "rp3",
            Problem::Rp4 => "rp4",
            Problem::Dp => "dp",
            Problem::Blast => "blast",
            Problem::Acc2d => "acc2d",
            Problem::Rp2d1 => "2drp1",
            Problem::Rp2d2 => "2drp2",
            Problem::Rp2d3 => "2drp3",
            Problem::ShockBubble => "sb",
            Problem::ShockVortex => "sv",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        let lower = name.to_ascii_lowercase();
        Self::ALL.into_iter().find(|p| p.name() == lower)
    }

    pub fn dim(self) -> usize {
        match self {
            Problem::Acc1d | Problem::Rp1 | Problem::Rp2 | Problem::Rp3 | Problem::Rp4 | Problem::Dp | Problem::Blast => 1,
            _ => 2,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Problem::Acc1d => "smooth periodic density wave (exact solution known)",
            Problem::Rp1 => "Riemann problem: rarefaction, contact, shock",
            Problem::Rp2 => "Riemann problem: strong blast, thin shell",
            Problem::Rp3 => "Riemann problem: two shocks, Gamma=4/3",
            Problem::Rp4 => "Riemann problem: two rarefactions",
            Problem::Dp => "shock running into a sinusoidal density field",
            Problem::Blast => "colliding blast waves, Gamma=1.4",
            Problem::Acc2d => "relativistic isentropic vortex (exact solution known)",
            Problem::Rp2d1 => "2D Riemann problem: four vortex sheets",
            Problem::Rp2d2 => "2D Riemann problem: four rarefactions",
            Problem::Rp2d3 => "2D Riemann problem: shocks and contacts, mushroom cloud",
            Problem::ShockBubble => "shock-bubble interaction",
            Problem::ShockVortex => "shock-vortex interaction, Gamma=1.4",
        }
    }
}

impl std::fmt::Display for Problem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Free parameters of catalogue entries whose published data is incomplete.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProblemParams<T> {
    /// Bubble rest-mass density of the shock-bubble problem.
    pub bubble_rho: T,
    /// Bubble centre of the shock-bubble problem.
    pub bubble_center: (T, T),
    /// Output time of the 2D Riemann problems.
    pub rp2d_t_end: T,
}

impl<T: Real> Default for ProblemParams<T> {
    fn default() -> Self {
        Self { bubble_rho: T::lit(0.1358), bubble_center: (T::lit(45.0), T::lit(45.0)), rp2d_t_end: T::lit(0.4) }
    }
}

/// A catalogue entry of either dimension.
#[derive(Clone, Debug)]
pub enum AnyProblem<T: Real> {
    One(ProblemSpec<T, D1>),
    Two(ProblemSpec<T, D2>),
}

impl<T: Real> AnyProblem<T> {
    pub fn name(&self) -> &'static str {
        match self {
            AnyProblem::One(p) => p.name,
            AnyProblem::Two(p) => p.name,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyProblem::One(_) => 1,
            AnyProblem::Two(_) => 2,
        }
    }
}

/// All thirteen problems with default parameters.
pub fn catalogue() -> Vec<AnyProblem<f64>> {
    Problem::ALL.iter().map(|&p| build(p, &ProblemParams::default())).collect()
}

pub fn build<T: Real>(problem: Problem, params: &ProblemParams<T>) -> AnyProblem<T> {
    let l = T::lit;
    match problem {
        Problem::Acc1d => AnyProblem::One(acc1d()),
        Problem::Rp1 => AnyProblem::One(riemann_1d(problem, (l(10.0), l(0.0), l(40.0 / 3.0)), (l(1.0), l(0.0), l(1e-6)), l(5.0 / 3.0))),
        Problem::Rp2 => AnyProblem::One(riemann_1d(problem, (l(1.0), l(0.0), l(1e3)), (l(1.0), l(0.0), l(1e-2)), l(5.0 / 3.0))),
        Problem::Rp3 => AnyProblem::One(riemann_1d(problem, (l(1.0), l(0.9), l(1.0)), (l(1.0), l(0.0), l(10.0)), l(4.0 / 3.0))),
        Problem::Rp4 => AnyProblem::One(riemann_1d(problem, (l(1.0), l(-0.7), l(20.0)), (l(1.0), l(0.7), l(20.0)), l(5.0 / 3.0))),
        Problem::Dp => AnyProblem::One(density_perturbation()),
        Problem::Blast => AnyProblem::One(blast()),
        Problem::Acc2d => AnyProblem::Two(acc2d()),
        Problem::Rp2d1 | Problem::Rp2d2 | Problem::Rp2d3 => AnyProblem::Two(riemann_2d(problem, params.rp2d_t_end)),
        Problem::ShockBubble => AnyProblem::Two(shock_bubble(params)),
        Problem::ShockVortex => AnyProblem::Two(shock_vortex()),
    }
}

fn prim1<T: Real>((rho, u, p): (T, T, T)) -> PrimState<T, D1> {
    PrimState::new(rho, [u], p)
}

fn prim2<T: Real>(rho: f64, u: f64, v: f64, p: f64) -> PrimState<T, D2> {
    PrimState::new(T::lit(rho), [T::lit(u), T::lit(v)], T::lit(p))
}

pub fn acc1d<T: Real>() -> ProblemSpec<T, D1> {
    let exact = |x: T, _y: T, t: T| prim1((T::one() + T::lit(0.2) * (x - T::lit(0.2) * t).sin(), T::lit(0.2), T::one()));
    ProblemSpec {
        name: Problem::Acc1d.name(),
        x_range: (T::zero(), T::TAU()),
        y_range: (T::zero(), T::one()),
        gamma: T::lit(5.0 / 3.0),
        ic: Arc::new(move |x, y| exact(x, y, T::zero())),
        bc: BoundaryConditions::periodic(),
        t_end: T::lit(0.1),
        exact: Some(Arc::new(exact)),
        default_n: (160, 1),
    }
}

fn riemann_1d<T: Real>(problem: Problem, left: (T, T, T), right: (T, T, T), gamma: T) -> ProblemSpec<T, D1> {
    let split = T::half();
    ProblemSpec {
        name: problem.name(),
        x_range: (T::zero(), T::one()),
        y_range: (T::zero(), T::one()),
        gamma,
        ic: Arc::new(move |x, _| prim1(if x < split { left } else { right })),
        bc: BoundaryConditions::outflow(),
        t_end: T::lit(0.4),
        exact: None,
        default_n: (400, 1),
    }
}

fn density_perturbation<T: Real>() -> ProblemSpec<T, D1> {
    ProblemSpec {
        name: Problem::Dp.name(),
        x_range: (T::zero(), T::one()),
        y_range: (T::zero(), T::one()),
        gamma: T::lit(5.0 / 3.0),
        ic: Arc::new(|x: T, _| {
            if x < T::half() {
                prim1((T::lit(5.0), T::zero(), T::lit(50.0)))
            } else {
                prim1((T::two() + T::lit(0.3) * (T::lit(50.0) * x).sin(), T::zero(), T::lit(5.0)))
            }
        }),
        bc: BoundaryConditions::outflow(),
        t_end: T::lit(0.35),
        exact: None,
        default_n: (400, 1),
    }
}

fn blast<T: Real>() -> ProblemSpec<T, D1> {
    ProblemSpec {
        name: Problem::Blast.name(),
        x_range: (T::zero(), T::one()),
        y_range: (T::zero(), T::one()),
        gamma: T::lit(1.4),
        ic: Arc::new(|x: T, _| {
            let p = if x < T::lit(0.1) {
                1e3
            } else if x < T::lit(0.9) {
                1e-2
            } else {
                1e2
            };
            prim1((T::one(), T::zero(), T::lit(p)))
        }),
        bc: BoundaryConditions::outflow(),
        t_end: T::lit(0.43),
        exact: None,
        default_n: (4000, 1),
    }
}

/// Isentropic vortex centred at the origin (at `t = 0`), moving with speed
/// `w` in direction `-n`; `n` is a unit vector.
pub fn boosted_vortex<T: Real>(x: T, y: T, gamma: T, w: T, n: (T, T), eps: T) -> PrimState<T, D2> {
    let one = T::one();
    let lorentz = one / (one - w * w).sqrt();
    let nx = n.0 * x + n.1 * y;
    let x0 = x + (lorentz - one) * nx * n.0;
    let y0 = y + (lorentz - one) * nx * n.1;
    let r2 = x0 * x0 + y0 * y0;
    let c1 = (gamma - one) / gamma / (T::lit(8.0) * T::PI() * T::PI()) * eps * eps;
    let e = c1 * (one - r2).exp();
    let rho = (one - e).powf(one / (gamma - one));
    let p = rho.powf(gamma);
    let c2 = T::two() * gamma * e / (T::two() * gamma - one - gamma * e);
    let f = (c2 / (one + c2 * r2)).sqrt();
    let (u0, v0) = (-y0 * f, x0 * f);
    let nu = n.0 * u0 + n.1 * v0;
    let den = one - w * nu;
    let k = lorentz * w * w / (lorentz + one) * nu;
    let u = (u0 / lorentz - w * n.0 + k * n.0) / den;
    let v = (v0 / lorentz - w * n.1 + k * n.1) / den;
    PrimState::new(rho, [u, v], p)
}

pub fn acc2d<T: Real>() -> ProblemSpec<T, D2> {
    let gamma = T::lit(5.0 / 3.0);
    let w = T::lit(0.5) * T::SQRT_2();
    let n = (T::FRAC_1_SQRT_2(), T::FRAC_1_SQRT_2());
    let eps = T::lit(5.0);
    let period = T::lit(10.0);
    let lo = T::lit(-5.0);
    // the vortex travels with velocity -w n through the periodic box
    let wrap = move |s: T| {
        let r = (s - lo) % period;
        if r < T::zero() {
            r + period + lo
        } else {
            r + lo
        }
    };
    let exact = move |x: T, y: T, t: T| {
        let shift = (w * t * n.0) % period;
        boosted_vortex(wrap(x + shift), wrap(y + shift), gamma, w, n, eps)
    };
    ProblemSpec {
        name: Problem::Acc2d.name(),
        x_range: (lo, -lo),
        y_range: (lo, -lo),
        gamma,
        ic: Arc::new(move |x, y| boosted_vortex(x, y, gamma, w, n, eps)),
        bc: BoundaryConditions::periodic(),
        t_end: T::lit(20.0),
        exact: Some(Arc::new(exact)),
        default_n: (80, 80),
    }
}

fn riemann_2d<T: Real>(problem: Problem, t_end: T) -> ProblemSpec<T, D2> {
    // quadrants: (x>0.5,y>0.5), (x<0.5,y>0.5), (x<0.5,y<0.5), (x>0.5,y<0.5)
    let q: [[f64; 4]; 4] = match problem {
        Problem::Rp2d1 => [[0.5, 0.5, -0.5, 5.0], [1.0, 0.5, 0.5, 5.0], [3.0, -0.5, 0.5, 5.0], [1.5, -0.5, -0.5, 5.0]],
        Problem::Rp2d2 => [
            [1.0, 0.0, 0.0, 1.0],
            [0.5771, -0.3529, 0.0, 0.4],
            [1.0, -0.3529, -0.3529, 1.0],
            [0.5771, 0.0, -0.3529, 0.4],
        ],
        _ => [
            [0.035145216124503, 0.0, 0.0, 0.162931056509027],
            [0.1, 0.7, 0.0, 1.0],
            [0.5, 0.0, 0.0, 1.0],
            [0.1, 0.0, 0.7, 1.0],
        ],
    };
    let states = q.map(|s| prim2::<T>(s[0], s[1], s[2], s[3]));
    let mid = T::half();
    ProblemSpec {
        name: problem.name(),
        x_range: (T::zero(), T::one()),
        y_range: (T::zero(), T::one()),
        gamma: T::lit(5.0 / 3.0),
        ic: Arc::new(move |x, y| {
            let k = match (x > mid, y > mid) {
                (true, true) => 0,
                (false, true) => 1,
                (false, false) => 2,
                (true, false) => 3,
            };
            states[k]
        }),
        bc: BoundaryConditions::outflow(),
        t_end,
        exact: None,
        default_n: (200, 200),
    }
}

fn shock_bubble<T: Real>(params: &ProblemParams<T>) -> ProblemSpec<T, D2> {
    let ahead = prim2::<T>(1.0, 0.0, 0.0, 0.05);
    let behind = prim2::<T>(1.865225080631180, -0.196781107378299, 0.0, 0.15);
    let bubble = PrimState::new(params.bubble_rho, [T::zero(), T::zero()], T::lit(0.05));
    let (cx, cy) = params.bubble_center;
    let radius = T::lit(25.0);
    ProblemSpec {
        name: Problem::ShockBubble.name(),
        x_range: (T::zero(), T::lit(325.0)),
        y_range: (T::lit(-45.0), T::lit(45.0)),
        gamma: T::lit(5.0 / 3.0),
        ic: Arc::new(move |x, y| {
            if x >= T::lit(265.0) {
                behind
            } else if ((x - cx).powi(2) + (y - cy).powi(2)).sqrt() <= radius {
                bubble
            } else {
                ahead
            }
        }),
        bc: BoundaryConditions {
            x_lo: BoundaryKind::Outflow,
            x_hi: BoundaryKind::Dirichlet,
            y_lo: BoundaryKind::Outflow,
            y_hi: BoundaryKind::Outflow,
        },
        t_end: T::lit(450.0),
        exact: None,
        default_n: (650, 180),
    }
}

/// Post-shock state of the shock-vortex problem.
pub const SV_POST_SHOCK: [f64; 4] = [4.891497310766981, -0.388882958251919, 0.0, 11.894863258311670];
/// Pre-shock (far-field) state of the shock-vortex problem.
pub const SV_PRE_SHOCK: [f64; 4] = [1.0, -0.9, 0.0, 1.0];

fn shock_vortex<T: Real>() -> ProblemSpec<T, D2> {
    let gamma = T::lit(1.4);
    let post = prim2::<T>(SV_POST_SHOCK[0], SV_POST_SHOCK[1], SV_POST_SHOCK[2], SV_POST_SHOCK[3]);
    ProblemSpec {
        name: Problem::ShockVortex.name(),
        x_range: (T::lit(-17.0), T::lit(3.0)),
        y_range: (T::lit(-5.0), T::lit(5.0)),
        gamma,
        ic: Arc::new(move |x, y| {
            if x < T::lit(-6.0) {
                post
            } else {
                boosted_vortex(x, y, gamma, T::lit(0.9), (T::one(), T::zero()), T::lit(5.0))
            }
        }),
        bc: BoundaryConditions {
            x_lo: BoundaryKind::Outflow,
            x_hi: BoundaryKind::Dirichlet,
            y_lo: BoundaryKind::Reflective,
            y_hi: BoundaryKind::Reflective,
        },
        t_end: T::lit(19.0),
        exact: None,
        default_n: (800, 400),
    }
}
