//! Rotations, boosts and their composites acting on paravectors.
//!
//! A Lorentz transformation is carried by an element `t` with `t t̄ = 1` and
//! acts by `x ↦ t x t†`. Rotations are `exp(-iθ·σ/2)`, boosts `exp(jξ·σ/2)`.

use core::ops::Mul;

use libm::{cos, cosh, sin, sinh, sqrt};

use crate::cayley::{FourVector, Multivector};
use crate::hypernum::HyperComplex;
use crate::{Error, Result};

/// Spherical parameters of a unit spacelike vector: azimuth `phi`, polar
/// angle `theta` (radians) and rapidity `xi`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct LorentzParams {
    pub phi: f64,
    pub theta: f64,
    pub xi: f64,
}

impl LorentzParams {
    pub const fn new(phi: f64, theta: f64, xi: f64) -> Self {
        Self { phi, theta, xi }
    }

    /// `(sinh ξ, cosh ξ sin θ cos φ, cosh ξ sin θ sin φ, cosh ξ cos θ)`, the image
    /// of `(0, 0, 0, 1)` under [`spin_transform`].
    pub fn spacelike_vector(self) -> FourVector {
        let Self { phi, theta, xi } = self;
        let ch = cosh(xi);
        FourVector::new(sinh(xi), ch * sin(theta) * cos(phi), ch * sin(theta) * sin(phi), ch * cos(theta))
    }
}

/// A spin-group element. Composition `t2 * t1` applies `t1` first.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rotor {
    pub value: Multivector,
}

impl Default for Rotor {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl Rotor {
    pub const IDENTITY: Self = Self { value: Multivector::ONE };

    /// Wraps a multivector without checking `t t̄ = 1`; see [`Rotor::is_unit`].
    pub const fn from_value(value: Multivector) -> Self {
        Self { value }
    }

    pub fn is_unit(&self, tol: f64) -> bool {
        (self.value * self.value.bar()).approx_eq(Multivector::ONE, tol)
    }

    /// Inverse transformation, `t̄`.
    pub fn inverse(&self) -> Self {
        Self::from_value(self.value.bar())
    }

    /// `x ↦ t x t†`.
    pub fn apply(&self, x: FourVector) -> Result<FourVector> {
        self.sandwich(x).to_four_vector()
    }

    fn sandwich(&self, x: FourVector) -> Multivector {
        self.value * x.embed() * self.value.dagger()
    }

    /// Real 4×4 matrix `M` with `M x = t x t†`, indexed `[row][col]`.
    pub fn matrix(&self) -> [[f64; 4]; 4] {
        let mut m = [[0.0; 4]; 4];
        for col in 0..4 {
            let mut e = [0.0; 4];
            e[col] = 1.0;
            let img = self.sandwich(FourVector(e));
            m[0][col] = img.z[0].x;
            for (row, z) in m.iter_mut().zip(img.z).skip(1) {
                row[col] = z.v;
            }
        }
        m
    }
}

impl Mul for Rotor {
    type Output = Rotor;
    fn mul(self, rhs: Rotor) -> Rotor {
        Rotor::from_value(self.value * rhs.value)
    }
}

fn split_axis(v: [f64; 3]) -> Option<(f64, [f64; 3])> {
    let n = sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    (n > 0.0).then(|| (n, v.map(|c| c / n)))
}

/// `exp(-iθ·σ/2) = cos(|θ|/2) - i sin(|θ|/2) θ̂·σ`.
pub fn rotation(axis_angle: [f64; 3]) -> Rotor {
    let Some((angle, n)) = split_axis(axis_angle) else {
        return Rotor::IDENTITY;
    };
    let (c, s) = (cos(angle / 2.0), sin(angle / 2.0));
    let v = n.map(|k| HyperComplex::new(0.0, -s * k, 0.0, 0.0));
    Rotor::from_value(Multivector::from_parts(HyperComplex::real(c), v))
}

/// `exp(jξ·σ/2) = cosh(|ξ|/2) + j sinh(|ξ|/2) ξ̂·σ`.
pub fn boost(rapidity: [f64; 3]) -> Rotor {
    let Some((r, n)) = split_axis(rapidity) else {
        return Rotor::IDENTITY;
    };
    let (c, s) = (cosh(r / 2.0), sinh(r / 2.0));
    let v = n.map(|k| HyperComplex::new(0.0, 0.0, s * k, 0.0));
    Rotor::from_value(Multivector::from_parts(HyperComplex::real(c), v))
}

/// `exp(-iφσ₃/2) exp(-iθσ₂/2) exp(jξσ₃/2)`: boost along z, tilt by `theta`
/// about y, then turn by `phi` about z.
pub fn spin_transform(p: LorentzParams) -> Rotor {
    rotation([0.0, 0.0, p.phi]) * rotation([0.0, p.theta, 0.0]) * boost([0.0, 0.0, p.xi])
}

const EXP_MAX_TERMS: usize = 200;

/// Exponential by Taylor series with scaling and squaring.
pub fn exp_general(a: Multivector) -> Result<Multivector> {
    if !a.is_finite() {
        return Err(Error::NoConvergence);
    }
    // max-abs grows by at most 16× per geometric product; scale so 16‖b‖ ≤ 1/2
    let norm = a.max_abs();
    let mut squarings = 0u32;
    let mut scaled = norm;
    while scaled * 32.0 > 1.0 {
        scaled /= 2.0;
        squarings += 1;
        if squarings > 1100 {
            return Err(Error::NoConvergence);
        }
    }
    let b = a.scale(libm::ldexp(1.0, -(squarings as i32)));

    let mut sum = Multivector::ONE;
    let mut term = Multivector::ONE;
    let mut converged = false;
    for n in 1..=EXP_MAX_TERMS {
        term = (term * b).scale(1.0 / n as f64);
        sum += term;
        if term.max_abs() < 1e-16 * sum.max_abs() {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence);
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    Ok(sum)
}

/// `ab - ba`.
pub fn commutator(a: Multivector, b: Multivector) -> Multivector {
    a * b - b * a
}

/// Rotation generators `Jₖ = σₖ/2` and boost generators `Kₖ = ijσₖ/2`.
pub fn generators() -> ([Multivector; 3], [Multivector; 3]) {
    let sig = [Multivector::S1, Multivector::S2, Multivector::S3];
    let j = sig.map(|s| s.scale(0.5));
    let k = sig.map(|s| s.hmul(HyperComplex::IJ).scale(0.5));
    (j, k)
}
