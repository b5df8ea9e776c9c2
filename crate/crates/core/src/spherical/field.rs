//! Exact arithmetic in the ring `Z[sqrt2, sqrt3]`.
//!
//! The canonical geometric representation of a Coxeter group with labels in
//! `{2, 3, 4, 6, inf}` only involves the constants `2cos(pi/m)` in
//! `{0, 1, sqrt2, sqrt3, 2}`, so every orbit coordinate lives in this ring.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::diagram::Label;

/// `a + b*sqrt2 + c*sqrt3 + d*sqrt6` with integer coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuadInt(pub [i64; 4]);

impl QuadInt {
    pub const ZERO: QuadInt = QuadInt([0, 0, 0, 0]);
    pub const ONE: QuadInt = QuadInt([1, 0, 0, 0]);
    pub const SQRT2: QuadInt = QuadInt([0, 1, 0, 0]);
    pub const SQRT3: QuadInt = QuadInt([0, 0, 1, 0]);

    pub fn int(n: i64) -> Self {
        QuadInt([n, 0, 0, 0])
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// `2cos(pi/m)` for the labels where it lies in the ring.
    pub fn two_cos_pi_over(label: Label) -> Option<QuadInt> {
        match label {
            Label::Finite(2) => Some(Self::ZERO),
            Label::Finite(3) => Some(Self::ONE),
            Label::Finite(4) => Some(Self::SQRT2),
            Label::Finite(6) => Some(Self::SQRT3),
            Label::Infinity => Some(Self::int(2)),
            _ => None,
        }
    }

    pub fn checked_add(self, o: QuadInt) -> Option<QuadInt> {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = o.0;
        Some(QuadInt([
            a.checked_add(e)?,
            b.checked_add(f)?,
            c.checked_add(g)?,
            d.checked_add(h)?,
        ]))
    }

    pub fn checked_mul(self, o: QuadInt) -> Option<QuadInt> {
        let [a1, b1, c1, d1] = self.0.map(i128::from);
        let [a2, b2, c2, d2] = o.0.map(i128::from);
        let one = a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2;
        let r2 = a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2);
        let r3 = a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2);
        let r6 = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2;
        Some(QuadInt([
            i64::try_from(one).ok()?,
            i64::try_from(r2).ok()?,
            i64::try_from(r3).ok()?,
            i64::try_from(r6).ok()?,
        ]))
    }

    /// Exact sign of the real number this element represents.
    pub fn signum(self) -> i32 {
        let [a, b, c, d] = self.0.map(i128::from);
        // x = p + q*sqrt3 with p = a + b*sqrt2, q = c + d*sqrt2.
        let sp = sign_sqrt2(a, b);
        let sq = sign_sqrt2(c, d);
        if sq == 0 || sp == sq {
            return if sp == 0 { sq } else { sp };
        }
        if sp == 0 {
            return sq;
        }
        // p^2 - 3q^2 in Q(sqrt2)
        let rational = a * a + 2 * b * b - 3 * c * c - 6 * d * d;
        let irrational = 2 * a * b - 6 * c * d;
        if sign_sqrt2(rational, irrational) > 0 {
            sp
        } else {
            sq
        }
    }

    pub fn to_f64(self) -> f64 {
        let [a, b, c, d] = self.0.map(|x| x as f64);
        a + b * 2f64.sqrt() + c * 3f64.sqrt() + d * 6f64.sqrt()
    }
}

fn sign_sqrt2(a: i128, b: i128) -> i32 {
    let (sa, sb) = (a.signum() as i32, b.signum() as i32);
    if sb == 0 || sa == sb {
        return if sa == 0 { sb } else { sa };
    }
    if sa == 0 {
        return sb;
    }
    // opposite signs: compare a^2 with 2b^2
    let diff = a * a - 2 * b * b;
    if diff > 0 {
        sa
    } else {
        sb
    }
}

impl Add for QuadInt {
    type Output = QuadInt;
    fn add(self, o: QuadInt) -> QuadInt {
        self.checked_add(o).expect("QuadInt overflow")
    }
}

impl Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, o: QuadInt) -> QuadInt {
        self + (-o)
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt(self.0.map(|x| -x))
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{a}{b:+}r2{c:+}r3{d:+}r6")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> QuadInt {
        QuadInt([a, b, c, d])
    }

    #[test]
    fn basis_products() {
        assert_eq!(QuadInt::SQRT2.checked_mul(QuadInt::SQRT2), Some(QuadInt::int(2)));
        assert_eq!(QuadInt::SQRT3.checked_mul(QuadInt::SQRT3), Some(QuadInt::int(3)));
        assert_eq!(QuadInt::SQRT2.checked_mul(QuadInt::SQRT3), Some(q(0, 0, 0, 1)));
        assert_eq!(q(0, 0, 0, 1).checked_mul(q(0, 0, 0, 1)), Some(QuadInt::int(6)));
        assert_eq!(q(0, 0, 0, 1).checked_mul(QuadInt::SQRT2), Some(q(0, 0, 2, 0)));
        assert_eq!(q(0, 0, 0, 1).checked_mul(QuadInt::SQRT3), Some(q(0, 3, 0, 0)));
    }

    #[test]
    fn signs_of_near_cancellations() {
        // 3 - 2*sqrt2 = 0.17...
        assert_eq!(q(3, -2, 0, 0).signum(), 1);
        // 7 - 5*sqrt2 = -0.07...
        assert_eq!(q(7, -5, 0, 0).signum(), -1);
        // 2 - sqrt3 > 0, sqrt2 - sqrt3 < 0, 5 - 2*sqrt6 = 0.1 > 0
        assert_eq!(q(2, 0, -1, 0).signum(), 1);
        assert_eq!(q(0, 1, -1, 0).signum(), -1);
        assert_eq!(q(5, 0, 0, -2).signum(), 1);
        assert_eq!(QuadInt::ZERO.signum(), 0);
    }

    proptest! {
        #[test]
        fn signum_matches_floating_point(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
            let x = q(a, b, c, d);
            let f = x.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(x.signum(), if f > 0.0 { 1 } else { -1 });
            } else {
                prop_assert_eq!(x.signum(), 0);
            }
        }

        #[test]
        fn multiplication_matches_floating_point(
            x in proptest::array::uniform4(-20i64..20),
            y in proptest::array::uniform4(-20i64..20),
        ) {
            let p = QuadInt(x).checked_mul(QuadInt(y)).unwrap();
            prop_assert!((p.to_f64() - QuadInt(x).to_f64() * QuadInt(y).to_f64()).abs() < 1e-6);
        }
    }
}
