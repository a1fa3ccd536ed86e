//! Closed-form coefficient expressions shared by the float and rational paths.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use twofloat::TwoFloat;

pub(crate) trait Field:
    Clone
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn int(n: i64) -> Self;
}

impl Field for f64 {
    #[inline]
    fn int(n: i64) -> Self {
        n as f64
    }
}

impl Field for BigRational {
    fn int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Field for TwoFloat {
    #[inline]
    fn int(n: i64) -> Self {
        TwoFloat::from(n as f64)
    }
}

#[inline]
fn k<T: Field>(n: i64) -> T {
    T::int(n)
}

/// δ₃ = −27c² + (18ab − 4a³)c + a²b² − 4b³.
pub(crate) fn cubic_discriminant<T: Field>(a: &T, b: &T, c: &T) -> T {
    let (a, b, c) = (a.clone(), b.clone(), c.clone());
    let a2 = a.clone() * a.clone();
    let a3 = a2.clone() * a.clone();
    let b2 = b.clone() * b.clone();
    let b3 = b2.clone() * b.clone();
    -(k::<T>(27) * c.clone() * c.clone())
        + (k::<T>(18) * a.clone() * b.clone() - k::<T>(4) * a3) * c
        + a2 * b2
        - k::<T>(4) * b3
}

/// Quartic discriminant as a cubic in the free term.
pub(crate) fn quartic_discriminant<T: Field>(a: &T, b: &T, c: &T, d: &T) -> T {
    let (cd3, cd2, cd1, cd0) = free_term_polynomial(a, b, c);
    let d = d.clone();
    ((cd3 * d.clone() + cd2) * d.clone() + cd1) * d + cd0
}

/// Coefficients (of d³, d², d, 1) of the quartic discriminant viewed as a cubic in d.
pub(crate) fn free_term_polynomial<T: Field>(a: &T, b: &T, c: &T) -> (T, T, T, T) {
    let (a, b, c) = (a.clone(), b.clone(), c.clone());
    let a2 = a.clone() * a.clone();
    let a3 = a2.clone() * a.clone();
    let a4 = a2.clone() * a2.clone();
    let b2 = b.clone() * b.clone();
    let b3 = b2.clone() * b.clone();
    let b4 = b2.clone() * b2.clone();
    let c2 = c.clone() * c.clone();
    let c3 = c2.clone() * c.clone();
    let c4 = c2.clone() * c2.clone();

    let e3 = k::<T>(256);
    let e2 = -(k::<T>(27) * a4) + k::<T>(144) * a2.clone() * b.clone()
        - k::<T>(192) * a.clone() * c.clone()
        - k::<T>(128) * b2.clone();
    let e1 = k::<T>(2)
        * (k::<T>(9) * a3.clone() * b.clone() * c.clone()
            - k::<T>(2) * a2.clone() * b3.clone()
            - k::<T>(3) * a2.clone() * c2.clone()
            - k::<T>(40) * a.clone() * b2.clone() * c.clone()
            + k::<T>(8) * b4
            + k::<T>(72) * b.clone() * c2.clone());
    let e0 = -(k::<T>(4) * a3 * c3.clone()) + a2 * b2 * c2.clone()
        + k::<T>(18) * a * b.clone() * c3
        - k::<T>(4) * b3 * c2
        - k::<T>(27) * c4;
    (e3, e2, e1, e0)
}

/// (A, B, C) of the monic cubic d³ + A d² + B d + C = Δ(d)/256.
pub(crate) fn free_term_monic<T: Field>(a: &T, b: &T, c: &T) -> (T, T, T) {
    let (_, e2, e1, e0) = free_term_polynomial(a, b, c);
    let n = k::<T>(256);
    (e2 / n.clone(), e1 / n.clone(), e0 / n)
}

/// Cayley's fourth Sturmian constant.
pub(crate) fn sturm_s4<T: Field>(a: &T, b: &T, c: &T, d: &T) -> T {
    let (a, b, c, d) = (a.clone(), b.clone(), c.clone(), d.clone());
    let a2 = a.clone() * a.clone();
    let a3 = a2.clone() * a.clone();
    let b2 = b.clone() * b.clone();
    let b3 = b2.clone() * b.clone();
    -(k::<T>(3) * a3 * c.clone()) + (b2 - k::<T>(6) * d.clone()) * a2
        + k::<T>(14) * a * b.clone() * c.clone()
        - k::<T>(4) * b3
        + k::<T>(16) * b * d
        - k::<T>(18) * c.clone() * c
}

/// C₀ = −a³/8 + ab/2.
pub(crate) fn quartic_c0<T: Field>(a: &T, b: &T) -> T {
    let a = a.clone();
    -(a.clone() * a.clone() * a.clone()) / k::<T>(8) + a * b.clone() / k::<T>(2)
}

/// c₀ = −2a³/27 + ab/3.
pub(crate) fn cubic_c0<T: Field>(a: &T, b: &T) -> T {
    let a = a.clone();
    -(k::<T>(2) * a.clone() * a.clone() * a.clone()) / k::<T>(27) + a * b.clone() / k::<T>(3)
}

/// Q(a, b, c) with A² − 3B = (3a² − 8b)·Q / 65536.
pub(crate) fn theta_q<T: Field>(a: &T, b: &T, c: &T) -> T {
    let (a, b, c) = (a.clone(), b.clone(), c.clone());
    let a2 = a.clone() * a.clone();
    let a3 = a2.clone() * a.clone();
    let b2 = b.clone() * b.clone();
    k::<T>(243) * a3.clone() * a3.clone() - k::<T>(1944) * a2.clone() * a2.clone() * b.clone()
        + k::<T>(3456) * a3 * c.clone()
        + k::<T>(4032) * a2 * b2.clone()
        - k::<T>(13824) * a * b.clone() * c.clone()
        - k::<T>(512) * b2 * b
        + k::<T>(13824) * c.clone() * c
}

/// Numerator of the closed-form arccos argument for the d-roots:
/// −(2A³ − 9AB + 27C) = P / 8388608.
pub(crate) fn theta_numerator<T: Field>(a: &T, b: &T, c: &T) -> T {
    let p = |i: usize, base: &T| -> T {
        let mut acc = k::<T>(1);
        for _ in 0..i {
            acc = acc * base.clone();
        }
        acc
    };
    let terms: [(i64, usize, usize, usize); 19] = [
        (19683, 12, 0, 0),
        (-314928, 10, 1, 0),
        (419904, 9, 0, 1),
        (1959552, 8, 2, 0),
        (-5038848, 7, 1, 1),
        (-5847552, 6, 3, 0),
        (3172608, 6, 0, 2),
        (21399552, 5, 2, 1),
        (8128512, 4, 4, 0),
        (-25380864, 4, 1, 2),
        (-36274176, 3, 3, 1),
        (-3833856, 2, 5, 0),
        (11943936, 3, 0, 3),
        (55738368, 2, 2, 2),
        (17694720, 1, 4, 1),
        (-262144, 0, 6, 0),
        (-47775744, 1, 1, 3),
        (-17694720, 0, 3, 2),
        (23887872, 0, 0, 4),
    ];
    let mut acc = k::<T>(0);
    for (coef, ia, ib, ic) in terms {
        acc = acc + k::<T>(coef) * p(ia, a) * p(ib, b) * p(ic, c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_and_rational_agree() {
        let q = |n: i64, m: i64| BigRational::new(BigInt::from(n), BigInt::from(m));
        let (a, b, c, d) = (q(3, 1), q(2, 1), q(-1, 1), q(-19, 20));
        let exact = quartic_discriminant(&a, &b, &c, &d);
        let float = quartic_discriminant(&3.0, &2.0, &-1.0, &-0.95);
        let exact_f = num_traits::ToPrimitive::to_f64(&exact).unwrap();
        assert!((exact_f - float).abs() <= 1e-12 * exact_f.abs());
    }

    #[test]
    fn monic_free_term_matches_expanded_coefficients() {
        let (a, b, c) = (3.0, 2.0, -1.0);
        let (aa, bb, cc) = free_term_monic(&a, &b, &c);
        assert_eq!(aa, 1.83203125);
        assert_eq!(bb, 0.7421875);
        assert_eq!(cc, -0.08984375);
    }

    #[test]
    fn theta_closed_form_matches_free_term_cubic() {
        let q = |n: i64, m: i64| BigRational::new(BigInt::from(n), BigInt::from(m));
        for (a, b, c) in [(q(3, 1), q(2, 1), q(-1, 1)), (q(-4, 1), q(5, 1), q(-7, 4)), (q(1, 3), q(-5, 2), q(7, 9))] {
            let (aa, bb, cc) = free_term_monic(&a, &b, &c);
            let lhs = -(q(2, 1) * aa.clone() * aa.clone() * aa.clone() - q(9, 1) * aa.clone() * bb.clone()
                + q(27, 1) * cc.clone());
            assert_eq!(lhs * q(8388608, 1), theta_numerator(&a, &b, &c));
            let k3 = q(3, 1) * a.clone() * a.clone() - q(8, 1) * b.clone();
            assert_eq!(
                (aa.clone() * aa - q(3, 1) * bb) * q(65536, 1),
                k3 * theta_q(&a, &b, &c)
            );
        }
    }
}
