use std::ops::{Add, Mul, Neg, Sub};

/// Exact arithmetic in Z[φ] with φ² = φ + 1.
///
/// Values are `int + phi·φ`. Root coordinates of the finite types stay tiny,
/// so `i64` components never get anywhere near overflow.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Golden {
    pub int: i64,
    pub phi: i64,
}

impl Golden {
    pub const ZERO: Golden = Golden { int: 0, phi: 0 };
    pub const ONE: Golden = Golden { int: 1, phi: 0 };
    pub const PHI: Golden = Golden { int: 0, phi: 1 };

    pub fn new(int: i64, phi: i64) -> Self {
        Golden { int, phi }
    }

    pub fn from_int(int: i64) -> Self {
        Golden { int, phi: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.int == 0 && self.phi == 0
    }

    /// Exact sign of `int + phi·φ`: writes the value as `(t + phi·√5)/2`
    /// with `t = 2·int + phi` and compares squares.
    pub fn is_positive(self) -> bool {
        let t = 2 * self.int + self.phi;
        if self.phi == 0 {
            self.int > 0
        } else if self.phi > 0 {
            t >= 0 || 5 * self.phi * self.phi > t * t
        } else {
            t > 0 && t * t > 5 * self.phi * self.phi
        }
    }

    pub fn is_negative(self) -> bool {
        !self.is_zero() && !self.is_positive()
    }
}

impl Add for Golden {
    type Output = Golden;
    fn add(self, rhs: Golden) -> Golden {
        Golden::new(self.int + rhs.int, self.phi + rhs.phi)
    }
}

impl Sub for Golden {
    type Output = Golden;
    fn sub(self, rhs: Golden) -> Golden {
        Golden::new(self.int - rhs.int, self.phi - rhs.phi)
    }
}

impl Neg for Golden {
    type Output = Golden;
    fn neg(self) -> Golden {
        Golden::new(-self.int, -self.phi)
    }
}

impl Mul for Golden {
    type Output = Golden;
    // (a + bφ)(c + dφ) = ac + bd + (ad + bc + bd)φ
    fn mul(self, rhs: Golden) -> Golden {
        let (a, b) = (self.int, self.phi);
        let (c, d) = (rhs.int, rhs.phi);
        Golden::new(a * c + b * d, a * d + b * c + b * d)
    }
}
