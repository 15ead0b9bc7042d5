//! Scalar types the closed-form formulas can be evaluated in.

use std::fmt::Debug;

use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, ToPrimitive};

/// Number type a formula is evaluated in. Exact types report integrality
/// exactly; floating types report it only when the value is a finite
/// whole number.
pub trait Scalar: Num + FromPrimitive + Clone + PartialOrd + Debug {
    /// The value as an `i64` when it is an integer, `None` otherwise.
    fn to_exact_integer(&self) -> Option<i64>;

    fn from_count(n: i64) -> Self {
        Self::from_i64(n).expect("count representable in scalar type")
    }
}

impl Scalar for Ratio<i64> {
    fn to_exact_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.to_integer())
    }
}

impl Scalar for Ratio<i128> {
    fn to_exact_integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }
}

macro_rules! float_scalar {
    ($($t:ty)*) => ($(
        impl Scalar for $t {
            fn to_exact_integer(&self) -> Option<i64> {
                if self.is_finite() && self.fract() == 0.0 {
                    self.to_i64()
                } else {
                    None
                }
            }
        }
    )*)
}

float_scalar!(f32 f64);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrality() {
        assert_eq!(Ratio::new(6i64, 2).to_exact_integer(), Some(3));
        assert_eq!(Ratio::new(5i64, 2).to_exact_integer(), None);
        assert_eq!(Ratio::new(-8i128, 4).to_exact_integer(), Some(-2));
        assert_eq!(2.5f64.to_exact_integer(), None);
        assert_eq!(7.0f32.to_exact_integer(), Some(7));
        assert_eq!(f64::NAN.to_exact_integer(), None);
    }
}
