//! The scalar ring of hyperbolic-complex numbers.
//!
//! An element is `x + iy + jv + ijw` with `i² = -1`, `j² = +1` and `ij = ji`.
//! The ring is commutative and has zero divisors: `(1 + j)(1 - j) = 0`.

use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::{Error, Result};

/// `x + iy + jv + ijw`, stored in the order `(1, i, j, ij)`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct HyperComplex {
    pub x: f64,
    pub y: f64,
    pub v: f64,
    pub w: f64,
}

impl HyperComplex {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    /// Complex unit, `i² = -1`.
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    /// Hyperbolic unit, `j² = +1`.
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    /// `ij`, which squares to `-1`.
    pub const IJ: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(x: f64, y: f64, v: f64, w: f64) -> Self {
        Self { x, y, v, w }
    }

    pub const fn real(x: f64) -> Self {
        Self::new(x, 0.0, 0.0, 0.0)
    }

    pub const fn from_array(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.x, self.y, self.v, self.w]
    }

    /// Conjugation: flips both `i` and `j`.
    pub const fn conj(self) -> Self {
        Self::new(self.x, -self.y, -self.v, self.w)
    }

    /// Reversion: flips `i` only.
    pub const fn rev(self) -> Self {
        Self::new(self.x, -self.y, self.v, -self.w)
    }

    /// Grade involution: flips `j` only.
    pub const fn grade(self) -> Self {
        Self::new(self.x, self.y, -self.v, -self.w)
    }

    /// `z · conj(z) = x² + y² - v² - w² + 2ij(xw - yv)`.
    ///
    /// The result always lies in `span{1, ij}`.
    pub fn modulus_sq(self) -> Self {
        let Self { x, y, v, w } = self;
        Self::new(x * x + y * y - v * v - w * w, 0.0, 0.0, 2.0 * (x * w - y * v))
    }

    /// Real norm `a² + b²` where `modulus_sq(z) = a + ij b`.
    ///
    /// Vanishes exactly on the zero divisors.
    pub fn norm(self) -> f64 {
        let m = self.modulus_sq();
        m.x * m.x + m.w * m.w
    }

    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.v.abs()).max(self.w.abs())
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.v.is_finite() && self.w.is_finite()
    }

    pub fn is_zero_divisor(self) -> bool {
        let scale = self.max_abs();
        let scale4 = scale * scale * scale * scale;
        let n = self.norm();
        n.is_nan() || n <= 1e-14 * scale4
    }

    /// Multiplicative inverse, `conj(z)(a - ij b) / (a² + b²)`.
    pub fn inverse(self) -> Result<Self> {
        if self.is_zero_divisor() {
            return Err(Error::ZeroDivisor);
        }
        let m = self.modulus_sq();
        let n = m.x * m.x + m.w * m.w;
        Ok(self.conj() * Self::new(m.x / n, 0.0, 0.0, -m.w / n))
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.x * s, self.y * s, self.v * s, self.w * s)
    }

    /// Componentwise comparison with an absolute tolerance.
    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        (self - other).max_abs() <= tol
    }
}

impl From<f64> for HyperComplex {
    fn from(x: f64) -> Self {
        Self::real(x)
    }
}

impl Add for HyperComplex {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        Self::new(self.x + b.x, self.y + b.y, self.v + b.v, self.w + b.w)
    }
}

impl Sub for HyperComplex {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        Self::new(self.x - b.x, self.y - b.y, self.v - b.v, self.w - b.w)
    }
}

impl Neg for HyperComplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.v, -self.w)
    }
}

impl Mul for HyperComplex {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let a = self;
        Self::new(
            a.x * b.x - a.y * b.y + a.v * b.v - a.w * b.w,
            a.x * b.y + a.y * b.x + a.v * b.w + a.w * b.v,
            a.x * b.v + a.v * b.x - a.y * b.w - a.w * b.y,
            a.x * b.w + a.w * b.x + a.y * b.v + a.v * b.y,
        )
    }
}

impl Mul<f64> for HyperComplex {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Mul<HyperComplex> for f64 {
    type Output = HyperComplex;
    fn mul(self, z: HyperComplex) -> HyperComplex {
        z.scale(self)
    }
}

impl AddAssign for HyperComplex {
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl SubAssign for HyperComplex {
    fn sub_assign(&mut self, b: Self) {
        *self = *self - b;
    }
}

impl MulAssign for HyperComplex {
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}
