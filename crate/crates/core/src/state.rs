//! Physical states of the ideal-gas relativistic fluid.
//!
//! Conserved variables are ordered `(D, m_1, .., m_d, E)` with `D = ρW`,
//! `m = ρhW²u` and `E = ρhW² - p`. Units have the speed of light equal to one.

use crate::dim::{Array, Axis, Dimension};
use crate::error::{Error, Result};
use crate::num::Real;

/// Ideal-gas equation of state `p = (Γ - 1) ρ e`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EosParams<T> {
    pub gamma: T,
}

impl<T: Real> EosParams<T> {
    /// Requires `1 < Γ <= 2`.
    pub fn new(gamma: T) -> Result<Self> {
        if gamma > T::one() && gamma <= T::two() {
            Ok(Self { gamma })
        } else {
            Err(Error::InvalidConfig(format!("adiabatic index {gamma} outside (1, 2]")))
        }
    }

    #[inline(always)]
    pub fn gm1(&self) -> T {
        self.gamma - T::one()
    }

    /// `Γ / (Γ - 1)`
    #[inline(always)]
    pub fn gamma_ratio(&self) -> T {
        self.gamma / self.gm1()
    }
}

/// Primitive variables `(ρ, u, p)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrimState<T: Real, D: Dimension> {
    pub rho: T,
    pub vel: D::Vel<T>,
    pub p: T,
}

impl<T: Real, D: Dimension> PrimState<T, D> {
    #[inline]
    pub fn new(rho: T, vel: D::Vel<T>, p: T) -> Self {
        Self { rho, vel, p }
    }

    /// Like [`PrimState::new`] but rejects states violating `ρ > 0`, `p > 0`,
    /// `|u| < 1`.
    pub fn try_new(rho: T, vel: D::Vel<T>, p: T) -> Result<Self> {
        let w = Self::new(rho, vel, p);
        if w.is_admissible() {
            Ok(w)
        } else {
            Err(Error::InvalidConfig(format!(
                "inadmissible primitive state rho={rho:e} p={p:e} |u|^2={:e}",
                w.vel_sq()
            )))
        }
    }

    pub fn is_admissible(&self) -> bool {
        self.rho > T::zero()
            && self.p > T::zero()
            && self.rho.is_finite()
            && self.p.is_finite()
            && self.vel.all_finite()
            && self.vel_sq() < T::one()
    }

    #[inline(always)]
    pub fn vel_sq(&self) -> T {
        self.vel.norm_sq()
    }

    /// Velocity component along `axis`.
    #[inline(always)]
    pub fn vel_along(&self, axis: Axis) -> T {
        self.vel[axis.index()]
    }

    /// Lorentz factor `W = 1/√(1 - |u|²)`.
    #[inline(always)]
    pub fn lorentz(&self) -> T {
        T::one() / (T::one() - self.vel_sq()).sqrt()
    }

    /// Specific enthalpy `h = 1 + Γp / ((Γ - 1)ρ)`.
    #[inline(always)]
    pub fn enthalpy(&self, eos: &EosParams<T>) -> T {
        T::one() + eos.gamma_ratio() * self.p / self.rho
    }

    /// Thermodynamic entropy `S = ln p - Γ ln ρ`.
    #[inline(always)]
    pub fn thermo_entropy(&self, eos: &EosParams<T>) -> T {
        self.p.ln() - eos.gamma * self.rho.ln()
    }
}

/// Conservative variables `(D, m, E)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConsState<T: Real, D: Dimension> {
    pub d: T,
    pub mom: D::Vel<T>,
    pub e: T,
}

impl<T: Real, Dm: Dimension> ConsState<T, Dm> {
    #[inline]
    pub fn new(d: T, mom: Dm::Vel<T>, e: T) -> Self {
        Self { d, mom, e }
    }

    /// Flattens to `(D, m_1, .., m_d, E)`.
    #[inline]
    pub fn to_vars(&self) -> Dm::Vars<T> {
        let last = Dm::NVAR - 1;
        Dm::Vars::<T>::from_fn(|k| {
            if k == 0 {
                self.d
            } else if k == last {
                self.e
            } else {
                self.mom[k - 1]
            }
        })
    }

    #[inline]
    pub fn from_vars(v: &Dm::Vars<T>) -> Self {
        Self { d: v[0], mom: Dm::Vel::<T>::from_fn(|k| v[k + 1]), e: v[Dm::NVAR - 1] }
    }

    #[inline]
    pub fn mom_abs(&self) -> T {
        self.mom.norm_sq().sqrt()
    }
}

/// Entropy pair, entropy variables and potentials of a single state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntropyQuantities<T: Real, D: Dimension> {
    /// `η = -ρWS/(Γ-1)`
    pub eta: T,
    /// `q_ℓ = -ρu_ℓWS/(Γ-1)`
    pub q: D::Vel<T>,
    /// Entropy variables `V = ∂η/∂U`.
    pub v: D::Vars<T>,
    /// Potentials `ψ_ℓ = Vᵀ F_ℓ - q_ℓ = ρWu_ℓ`.
    pub psi: D::Vel<T>,
}

#[inline]
pub fn prim_to_cons<T: Real, D: Dimension>(w: &PrimState<T, D>, eos: &EosParams<T>) -> ConsState<T, D> {
    let lorentz = w.lorentz();
    let d = w.rho * lorentz;
    let rhohw2 = w.rho * w.enthalpy(eos) * lorentz * lorentz;
    ConsState { d, mom: w.vel.scale(rhohw2), e: rhohw2 - w.p }
}

const NEWTON_MAX_ITER: usize = 50;
const BISECTION_MAX_ITER: usize = 400;

/// Recovers the primitive state from `U`.
///
/// Solves `E + p = D W(p) + Γ/(Γ-1) p W(p)²` for the pressure by Newton's
/// method, falling back to bisection on `[1e-16, 10E]`.
pub fn cons_to_prim<T: Real, D: Dimension>(u: &ConsState<T, D>, eos: &EosParams<T>) -> Result<PrimState<T, D>> {
    cons_to_prim_with_guess(u, eos, None)
}

/// [`cons_to_prim`] seeded with a pressure from a previous solve.
pub fn cons_to_prim_with_guess<T: Real, D: Dimension>(
    u: &ConsState<T, D>,
    eos: &EosParams<T>,
    p_guess: Option<T>,
) -> Result<PrimState<T, D>> {
    let (d, e) = (u.d, u.e);
    let m2 = u.mom.norm_sq();
    let m = m2.sqrt();
    let fail = |reason| Err(Error::non_physical(d.as_f64(), m.as_f64(), e.as_f64(), reason));

    if !(d.is_finite() && e.is_finite() && m.is_finite()) {
        return fail("non-finite conserved variables");
    }
    if d <= T::zero() {
        return fail("D <= 0");
    }
    if e <= m {
        return fail("E <= |m|");
    }
    // E² > D² + |m|² is equivalent to the residual being negative at p = 0,
    // i.e. to a positive pressure root existing.
    if e * e <= d * d + m2 {
        return fail("E^2 <= D^2 + |m|^2");
    }

    let g = eos.gamma_ratio();
    let one = T::one();
    let floor = T::lit(1e-14);
    let residual = |p: T| -> (T, T) {
        let s = e + p;
        let lorentz = s / ((s - m) * (s + m)).sqrt();
        let dw = -lorentz * lorentz * lorentz * m2 / (s * s * s);
        let f = d * lorentz + g * p * lorentz * lorentz - s;
        let df = d * dw + g * (lorentz * lorentz + T::two() * p * lorentz * dw) - one;
        (f, df)
    };

    let p0 = match p_guess {
        Some(p) if p.is_finite() => p.max(floor),
        _ => (eos.gm1() * (e - d)).max(floor),
    };
    let tol = T::lit(1e-14);
    let res_tol = T::lit(4.0) * T::epsilon();

    let mut p = p0;
    let mut root = None;
    for _ in 0..NEWTON_MAX_ITER {
        let (f, df) = residual(p);
        if f.abs() <= res_tol * (e + p) {
            root = Some(p);
            break;
        }
        let next = p - f / df;
        if !(next.is_finite() && next > T::zero()) {
            break;
        }
        if (next - p).abs() <= tol * next {
            root = Some(next);
            break;
        }
        p = next;
    }

    let p = match root {
        Some(p) => p,
        None => {
            let mut lo = T::lit(1e-16);
            let mut hi = T::lit(10.0) * e;
            if residual(lo).0 >= T::zero() {
                return fail("no pressure root above 1e-16");
            }
            for _ in 0..BISECTION_MAX_ITER {
                let mid = T::half() * (lo + hi);
                if residual(mid).0 < T::zero() {
                    lo = mid;
                } else {
                    hi = mid;
                }
                if hi - lo <= T::lit(1e-15) * hi {
                    break;
                }
            }
            T::half() * (lo + hi)
        }
    };

    let s = e + p;
    let lorentz = s / ((s - m) * (s + m)).sqrt();
    let w = PrimState { rho: d / lorentz, vel: u.mom.scale(one / s), p };
    if !w.is_admissible() {
        return fail("recovered state is not admissible");
    }
    Ok(w)
}

/// Physical flux `F_ℓ = (D u_ℓ, m u_ℓ + p e_ℓ, m_ℓ)` along `axis`.
#[inline]
pub fn physical_flux<T: Real, Dm: Dimension>(w: &PrimState<T, Dm>, u: &ConsState<T, Dm>, axis: Axis) -> Dm::Vars<T> {
    let a = axis.index();
    let un = w.vel_along(axis);
    let last = Dm::NVAR - 1;
    Dm::Vars::<T>::from_fn(|k| {
        if k == 0 {
            u.d * un
        } else if k == last {
            u.mom[a]
        } else if k - 1 == a {
            u.mom[k - 1] * un + w.p
        } else {
            u.mom[k - 1] * un
        }
    })
}

/// Entropy variables `V = ((Γ-S)/(Γ-1) + ρ/p, ρWu/p, -ρW/p)`.
#[inline]
pub fn entropy_variables<T: Real, D: Dimension>(w: &PrimState<T, D>, eos: &EosParams<T>) -> D::Vars<T> {
    let s = w.thermo_entropy(eos);
    let beta = w.rho / w.p;
    let bw = beta * w.lorentz();
    let last = D::NVAR - 1;
    D::Vars::<T>::from_fn(|k| {
        if k == 0 {
            (eos.gamma - s) / eos.gm1() + beta
        } else if k == last {
            -bw
        } else {
            bw * w.vel[k - 1]
        }
    })
}

/// Mathematical entropy density `η = -ρWS/(Γ-1)`.
#[inline]
pub fn entropy_density<T: Real, D: Dimension>(w: &PrimState<T, D>, eos: &EosParams<T>) -> T {
    -w.rho * w.lorentz() * w.thermo_entropy(eos) / eos.gm1()
}

pub fn entropy_quantities<T: Real, D: Dimension>(w: &PrimState<T, D>, eos: &EosParams<T>) -> EntropyQuantities<T, D> {
    let eta = entropy_density(w, eos);
    let rw = w.rho * w.lorentz();
    EntropyQuantities {
        eta,
        q: w.vel.scale(eta),
        v: entropy_variables(w, eos),
        psi: w.vel.scale(rw),
    }
}

/// Sound speed `c_s = √(Γp/(ρh))`.
#[inline]
pub fn sound_speed<T: Real, D: Dimension>(w: &PrimState<T, D>, eos: &EosParams<T>) -> T {
    (eos.gamma * w.p / (w.rho * w.enthalpy(eos))).sqrt()
}

/// Acoustic eigenvalues `(λ_-, λ_+)` along `axis`.
#[inline]
pub fn acoustic_speeds<T: Real, D: Dimension>(w: &PrimState<T, D>, eos: &EosParams<T>, axis: Axis) -> (T, T) {
    let cs = sound_speed(w, eos);
    acoustic_speeds_with(w, cs, axis)
}

#[inline]
pub(crate) fn acoustic_speeds_with<T: Real, D: Dimension>(w: &PrimState<T, D>, cs: T, axis: Axis) -> (T, T) {
    let one = T::one();
    let un = w.vel_along(axis);
    if D::DIM == 1 {
        ((un - cs) / (one - un * cs), (un + cs) / (one + un * cs))
    } else {
        let ut2 = w.vel_sq() - un * un;
        let c2 = cs * cs;
        let root = (one - un * un - ut2 * c2).sqrt();
        let num = un * (one - c2);
        let den = one - w.vel_sq() * c2;
        let dev = cs / w.lorentz() * root;
        ((num - dev) / den, (num + dev) / den)
    }
}

/// Eigenvalues of `∂F_axis/∂U`, ordered `(λ_-, u_n, [u_n,] λ_+)`.
pub fn char_speeds<T: Real, D: Dimension>(w: &PrimState<T, D>, eos: &EosParams<T>, axis: Axis) -> D::Vars<T> {
    let (lm, lp) = acoustic_speeds(w, eos, axis);
    let un = w.vel_along(axis);
    let last = D::NVAR - 1;
    D::Vars::<T>::from_fn(|k| {
        if k == 0 {
            lm
        } else if k == last {
            lp
        } else {
            un
        }
    })
}

/// `max |λ|` along `axis`.
#[inline]
pub fn max_char_speed<T: Real, D: Dimension>(w: &PrimState<T, D>, eos: &EosParams<T>, axis: Axis) -> T {
    let (lm, lp) = acoustic_speeds(w, eos, axis);
    lm.abs().max(lp.abs()).max(w.vel_along(axis).abs())
}
