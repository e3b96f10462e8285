//! Monomial matrices whose nonzero entries are powers of a single root of unity.

use serde::Serialize;

use crate::scalars::{lcm_u32, CycloScalar};
use crate::skew_algebra::Mat2;

/// `diag(ω^e1, ω^e2)` or `antidiag(b = ω^e1, c = ω^e2)` with `ω = ω_order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootMatrix {
    pub order: u32,
    pub anti: bool,
    pub e1: u32,
    pub e2: u32,
}

impl RootMatrix {
    pub fn diag(order: u32, e1: i64, e2: i64) -> Self {
        Self::build(order, false, e1, e2)
    }

    pub fn antidiag(order: u32, e1: i64, e2: i64) -> Self {
        Self::build(order, true, e1, e2)
    }

    fn build(order: u32, anti: bool, e1: i64, e2: i64) -> Self {
        let m = order as i64;
        RootMatrix { order, anti, e1: e1.rem_euclid(m) as u32, e2: e2.rem_euclid(m) as u32 }
    }

    pub fn identity(order: u32) -> Self {
        Self::diag(order, 0, 0)
    }

    pub fn is_identity(&self) -> bool {
        !self.anti && self.e1 == 0 && self.e2 == 0
    }

    /// Same matrix with exponents relative to `ω_target`; `target` must be a multiple of the order.
    pub fn at_order(&self, target: u32) -> Self {
        assert!(target % self.order == 0, "order {} does not divide {target}", self.order);
        let s = target / self.order;
        RootMatrix { order: target, anti: self.anti, e1: self.e1 * s, e2: self.e2 * s }
    }

    /// Matrix product `self * o`.
    pub fn mul(&self, o: &RootMatrix) -> RootMatrix {
        if self.order != o.order {
            let m = lcm_u32(self.order, o.order);
            return self.at_order(m).mul(&o.at_order(m));
        }
        let (x1, x2, y1, y2) = (self.e1 as i64, self.e2 as i64, o.e1 as i64, o.e2 as i64);
        let m = self.order;
        match (self.anti, o.anti) {
            (false, false) => Self::diag(m, x1 + y1, x2 + y2),
            (false, true) => Self::antidiag(m, x1 + y1, x2 + y2),
            (true, false) => Self::antidiag(m, x1 + y2, x2 + y1),
            (true, true) => Self::diag(m, x1 + y2, x2 + y1),
        }
    }

    pub fn pow(&self, e: u32) -> RootMatrix {
        (0..e).fold(Self::identity(self.order), |acc, _| acc.mul(self))
    }

    pub fn to_mat2(&self) -> Mat2 {
        let x = CycloScalar::root(self.order, self.e1 as i64);
        let y = CycloScalar::root(self.order, self.e2 as i64);
        if self.anti {
            Mat2::antidiag(x, y)
        } else {
            Mat2::diag(x, y)
        }
    }
}
