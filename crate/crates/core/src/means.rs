//! Two-point averages used to build entropy conservative fluxes.
//!
//! With `[[a]] = a_R - a_L` and `<a> = (a_L + a_R)/2`, every jump appearing in
//! the entropy conservation condition is rewritten as a linear combination of
//! jumps of the parameter vector `z = (ρ, ρ/p, u)` through the product rule
//! `[[ab]] = <a>[[b]] + <b>[[a]]`, the logarithmic mean `[[a]] = <a>_ln [[ln a]]`
//! and the Lorentz means `[[W]] = Σ_ℓ <<u_ℓ>>_L [[u_ℓ]]`.

use crate::dim::{Array, Dimension, D2};
use crate::num::Real;
use crate::state::PrimState;

/// Left and right states at an interface.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StatePair<T: Real, D: Dimension> {
    pub left: PrimState<T, D>,
    pub right: PrimState<T, D>,
}

impl<T: Real, D: Dimension> StatePair<T, D> {
    #[inline]
    pub fn new(left: PrimState<T, D>, right: PrimState<T, D>) -> Self {
        Self { left, right }
    }

    /// The same pair seen from the other side.
    #[inline]
    pub fn swapped(&self) -> Self {
        Self { left: self.right, right: self.left }
    }
}

#[inline(always)]
pub fn mean<T: Real>(a_l: T, a_r: T) -> T {
    T::half() * (a_l + a_r)
}

#[inline(always)]
pub fn jump<T: Real>(a_l: T, a_r: T) -> T {
    a_r - a_l
}

/// Logarithmic mean `(a_R - a_L) / (ln a_R - ln a_L)` of two positive numbers.
///
/// Close arguments switch to the series of `ln ζ / (2f)` in `f = (ζ-1)/(ζ+1)`,
/// `ζ = a_L/a_R`, which is truncated after the `f⁶` term.
#[inline]
pub fn ln_mean<T: Real>(a_l: T, a_r: T) -> T {
    let zeta = a_l / a_r;
    let f = (zeta - T::one()) / (zeta + T::one());
    let s = f * f;
    if s < T::lit(1e-4) {
        let series = T::one() + s * (T::lit(1.0 / 3.0) + s * (T::lit(0.2) + s * T::lit(1.0 / 7.0)));
        T::half() * (a_l + a_r) / series
    } else {
        (a_r - a_l) / (a_r / a_l).ln()
    }
}

/// One-dimensional Lorentz mean, defined by `W(u_R) - W(u_L) = <<u>>_L (u_R - u_L)`.
#[inline]
pub fn lorentz_mean_1d<T: Real>(u_l: T, u_r: T) -> T {
    let one = T::one();
    let sl = (one - u_l * u_l).sqrt();
    let sr = (one - u_r * u_r).sqrt();
    (u_l + u_r) / (sl * sr * (sl + sr))
}

/// Lorentz means of every velocity component:
/// `W_R - W_L = Σ_ℓ <<u_ℓ>>_L (u_ℓ,R - u_ℓ,L)`.
#[inline]
pub fn lorentz_means<T: Real, D: Dimension>(pair: &StatePair<T, D>) -> D::Vel<T> {
    let one = T::one();
    let sl = (one - pair.left.vel_sq()).sqrt();
    let sr = (one - pair.right.vel_sq()).sqrt();
    let inv = one / (sl * sr * (sl + sr));
    pair.left.vel.zip_map(&pair.right.vel, |a, b| (a + b) * inv)
}

/// The two Lorentz means `(<<u,v>>_Lx, <<u,v>>_Ly)` of a planar pair.
#[inline]
pub fn lorentz_mean_2d<T: Real>(pair: &StatePair<T, D2>) -> (T, T) {
    let m = lorentz_means(pair);
    (m[0], m[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dim::D1;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn w1(u: f64) -> f64 {
        1.0 / (1.0 - u * u).sqrt()
    }

    #[test]
    fn mean_and_jump() {
        assert_eq!(mean(1.0, 3.0), 2.0);
        assert_eq!(jump(1.0, 3.0), 2.0);
        assert_eq!(jump(4.5, 4.5), 0.0);
    }

    #[test]
    fn ln_mean_reference_values() {
        assert_eq!(ln_mean(2.5, 2.5), 2.5);
        // 50-digit references: e - 1 and 1e-9 / ln(1 + 1e-9).
        assert_relative_eq!(ln_mean(1.0, std::f64::consts::E), 1.718_281_828_459_045_2, max_relative = 1e-15);
        assert_relative_eq!(ln_mean(1.0, 1.0 + 1e-9), 1.000_000_000_499_999_9, max_relative = 1e-15);
    }

    #[test]
    fn ln_mean_branches_match_extended_precision() {
        // Pairs straddling the series/direct switch at f² = 1e-4, i.e. ζ ≈ 1.0202.
        // Reference values computed with 50-digit arithmetic.
        let cases = [
            (1.0, 1.02, 1.009_966_995_836_878_9),
            (1.0, 1.0203, 1.010_116_003_308_466_6),
            (1.0, 1.0201, 1.010_016_666_611_661_8),
            (3.0, 3.000_003, 3.000_001_499_999_750_0),
            (0.7, 1e-6, 0.052_010_368_509_927_145),
        ];
        for (a, b, want) in cases {
            assert_relative_eq!(ln_mean(a, b), want, max_relative = 2e-15);
            assert_relative_eq!(ln_mean(b, a), want, max_relative = 2e-15);
        }
    }

    #[test]
    fn lorentz_mean_1d_values() {
        let u: f64 = 0.37;
        assert_relative_eq!(lorentz_mean_1d(u, u), u * w1(u).powi(3), max_relative = 1e-15);
        assert_eq!(lorentz_mean_1d(0.4, -0.4), 0.0);
        assert_relative_eq!(
            lorentz_mean_1d(0.2, 0.5),
            (w1(0.5) - w1(0.2)) / (0.5 - 0.2),
            max_relative = 1e-14
        );
    }

    #[test]
    fn lorentz_mean_2d_identical_states_and_reduction() {
        let w = PrimState::<f64, D2>::new(1.0, [0.3, -0.5], 1.0);
        let (lx, ly) = lorentz_mean_2d(&StatePair::new(w, w));
        let lorentz = w.lorentz();
        assert_relative_eq!(lx, 0.3 * lorentz.powi(3), max_relative = 1e-14);
        assert_relative_eq!(ly, -0.5 * lorentz.powi(3), max_relative = 1e-14);

        let l = PrimState::<f64, D2>::new(1.0, [0.2, 0.0], 1.0);
        let r = PrimState::<f64, D2>::new(1.0, [-0.6, 0.0], 1.0);
        let (lx, ly) = lorentz_mean_2d(&StatePair::new(l, r));
        assert_eq!(lx, lorentz_mean_1d(0.2, -0.6));
        assert_eq!(ly, 0.0);
        let p1 = StatePair::<f64, D1>::new(PrimState::new(1.0, [0.2], 1.0), PrimState::new(1.0, [-0.6], 1.0));
        assert_eq!(lorentz_means(&p1)[0], lx);
    }

    fn subluminal_2d() -> impl Strategy<Value = [f64; 2]> {
        (0.0..0.999_f64, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| [r * t.cos(), r * t.sin()])
    }

    proptest! {
        #[test]
        fn product_jump_identity(al in -1e3..1e3_f64, ar in -1e3..1e3_f64, bl in -1e3..1e3_f64, br in -1e3..1e3_f64) {
            let lhs = jump(al * bl, ar * br);
            let rhs = mean(al, ar) * jump(bl, br) + mean(bl, br) * jump(al, ar);
            let scale = (al * bl).abs().max((ar * br).abs()).max(1.0);
            prop_assert!((lhs - rhs).abs() <= 1e-14 * scale);
        }

        #[test]
        fn ln_mean_bounds_and_symmetry(a in 1e-8..1e8_f64, b in 1e-8..1e8_f64) {
            let m = ln_mean(a, b);
            prop_assert!((m - ln_mean(b, a)).abs() <= 1e-14 * m);
            let lo = a.min(b);
            let am = mean(a, b);
            prop_assert!(m >= lo * (1.0 - 1e-14) && m <= am * (1.0 + 1e-14), "{} {} {}", a, b, m);
        }

        #[test]
        fn lorentz_mean_decomposes_w_jump(vl in subluminal_2d(), vr in subluminal_2d()) {
            let l = PrimState::<f64, D2>::new(1.0, vl, 1.0);
            let r = PrimState::<f64, D2>::new(1.0, vr, 1.0);
            let (lx, ly) = lorentz_mean_2d(&StatePair::new(l, r));
            let dw = r.lorentz() - l.lorentz();
            let rhs = lx * (vr[0] - vl[0]) + ly * (vr[1] - vl[1]);
            let scale = l.lorentz().max(r.lorentz());
            prop_assert!((dw - rhs).abs() <= 1e-14 * scale * scale, "{} vs {}", dw, rhs);
        }
    }
}
