//! Algebraic spinors.
//!
//! A spinor is a spin transformation taken as an element of the algebra. It
//! lives in the eight dimensional subalgebra `span{1, iσₖ, jσₖ, ij}` and is
//! only ever multiplied from the left. The two-component column picture is
//! reached through the Pauli matrix representation acting on `χ = (1, 0)`.

use core::ops::Mul;

use libm::{cos, sin};

use crate::cayley::{sym, Multivector};
use crate::hypernum::HyperComplex;
use crate::lorentz::{spin_transform, LorentzParams, Rotor};
use crate::{Error, Result, DEFAULT_TOL};

type H = HyperComplex;

/// Largest component of `a` outside `span{1, iσₖ, jσₖ, ij}`.
pub fn spinor_algebra_residual(a: &Multivector) -> f64 {
    let [z0, z1, z2, z3] = a.z;
    [z1, z2, z3].iter().map(|c| c.x.abs().max(c.w.abs())).fold(z0.y.abs().max(z0.v.abs()), f64::max)
}

pub fn in_spinor_algebra(a: &Multivector, tol: f64) -> bool {
    spinor_algebra_residual(a) <= tol
}

/// An element of the spinor subalgebra.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spinor {
    value: Multivector,
}

impl Default for Spinor {
    fn default() -> Self {
        Self::STANDARD
    }
}

impl Spinor {
    /// The standard spinor `1`, column `(1, 0)`.
    pub const STANDARD: Self = Self { value: Multivector::ONE };

    pub fn new(value: Multivector) -> Result<Self> {
        if !in_spinor_algebra(&value, DEFAULT_TOL) {
            return Err(Error::NotInSpinorAlgebra);
        }
        Ok(Self { value })
    }

    /// `ψ = S`.
    pub fn from_rotor(t: Rotor) -> Result<Self> {
        Self::new(t.value)
    }

    /// Spinor of the unit spacelike vector with the given parameters.
    pub fn from_params(p: LorentzParams) -> Self {
        Self { value: spin_transform(p).value }
    }

    pub fn value(&self) -> Multivector {
        self.value
    }

    /// `ψ = ψ⁰ + ψ³²iσ₁ + ψ¹³iσ₂ + ψ²¹iσ₃ + ψ¹⁰jσ₁ + ψ²⁰jσ₂ + ψ³⁰jσ₃ + ijψ⁰¹²³`.
    pub fn even_components(&self) -> EvenComponents {
        let [z0, z1, z2, z3] = self.value.z;
        EvenComponents { s: z0.x, b: [z1.y, z2.y, z3.y, z1.v, z2.v, z3.v], p: z0.w }
    }

    pub fn from_even(c: EvenComponents) -> Self {
        let [b32, b13, b21, b10, b20, b30] = c.b;
        let ij = |y, v| H::new(0.0, y, v, 0.0);
        Self { value: Multivector::new(H::new(c.s, 0.0, 0.0, c.p), ij(b32, b10), ij(b13, b20), ij(b21, b30)) }
    }

    /// `ψ = ψ^μ e_μ + ij η^μ e_μ`.
    pub fn odd_components(&self) -> OddComponents {
        self.even_components().into()
    }

    pub fn from_odd(c: OddComponents) -> Self {
        Self::from_even(c.into())
    }

    /// `(ψ⁰ + iψ²¹ + jψ³⁰ + ijψ⁰¹²³, ψ³¹ + iψ³² + jψ¹⁰ + ijψ²⁰)`.
    pub fn to_column(&self) -> ColumnSpinor {
        let e = self.even_components();
        let [b32, b13, b21, b10, b20, b30] = e.b;
        ColumnSpinor { c1: H::new(e.s, b21, b30, e.p), c2: H::new(-b13, b32, b10, b20) }
    }

    pub fn from_column(c: ColumnSpinor) -> Self {
        let (u, d) = (c.c1, c.c2);
        Self::from_even(EvenComponents { s: u.x, b: [d.y, -d.x, u.y, d.v, d.w, u.v], p: u.w })
    }

    /// Left action `ωψ` of a spinor-algebra element.
    pub fn act(&self, omega: Multivector) -> Result<Self> {
        if !in_spinor_algebra(&omega, DEFAULT_TOL) {
            return Err(Error::NotInSpinorAlgebra);
        }
        Ok(Self { value: omega * self.value })
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.value.approx_eq(other.value, tol)
    }
}

/// Canonical components of the even expansion.
///
/// `b` holds `(ψ³², ψ¹³, ψ²¹, ψ¹⁰, ψ²⁰, ψ³⁰)`; `p` is the pseudoscalar `ψ⁰¹²³`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct EvenComponents {
    pub s: f64,
    pub b: [f64; 6],
    pub p: f64,
}

/// `(μ, ν)` index pairs of [`EvenComponents::b`].
pub const BIPARAVECTOR_INDICES: [(usize, usize); 6] = [(3, 2), (1, 3), (2, 1), (1, 0), (2, 0), (3, 0)];

impl EvenComponents {
    /// Full antisymmetric `ψ^{μν}`, with `ψ^{νμ} = -ψ^{μν}`.
    pub fn biparavector_tensor(&self) -> [[f64; 4]; 4] {
        let mut t = [[0.0; 4]; 4];
        for (&(mu, nu), &v) in BIPARAVECTOR_INDICES.iter().zip(&self.b) {
            t[mu][nu] = v;
            t[nu][mu] = -v;
        }
        t
    }

    /// Fully antisymmetric `ψ^{μνσρ}`; `ψ^{0123} = p`.
    pub fn pseudoscalar_tensor(&self, idx: [usize; 4]) -> f64 {
        permutation_sign(idx).map_or(0.0, |s| s * self.p)
    }
}

/// Sign of `idx` as a permutation of `(0, 1, 2, 3)`; `None` on repeats or
/// out-of-range entries.
pub fn permutation_sign(idx: [usize; 4]) -> Option<f64> {
    let mut seen = [false; 4];
    for &k in &idx {
        if k > 3 || core::mem::replace(&mut seen[k], true) {
            return None;
        }
    }
    let mut inversions = 0;
    for a in 0..4 {
        for b in a + 1..4 {
            if idx[a] > idx[b] {
                inversions += 1;
            }
        }
    }
    Some(if inversions % 2 == 0 { 1.0 } else { -1.0 })
}

/// Paravector `v = ψ^μ` and pseudovector `η^μ` parts of the odd expansion.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct OddComponents {
    pub v: [f64; 4],
    pub eta: [f64; 4],
}

impl From<EvenComponents> for OddComponents {
    fn from(e: EvenComponents) -> Self {
        let [b32, b13, b21, b10, b20, b30] = e.b;
        Self { v: [e.s, b10, b20, b30], eta: [e.p, b32, b13, b21] }
    }
}

impl From<OddComponents> for EvenComponents {
    fn from(o: OddComponents) -> Self {
        let [s, b10, b20, b30] = o.v;
        let [p, b32, b13, b21] = o.eta;
        Self { s, b: [b32, b13, b21, b10, b20, b30], p }
    }
}

/// Two-component hyperbolic spinor.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ColumnSpinor {
    pub c1: HyperComplex,
    pub c2: HyperComplex,
}

impl ColumnSpinor {
    /// `χ = (1, 0)`.
    pub const STANDARD: Self = Self { c1: H::ONE, c2: H::ZERO };

    pub const fn new(c1: HyperComplex, c2: HyperComplex) -> Self {
        Self { c1, c2 }
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.c1.approx_eq(other.c1, tol) && self.c2.approx_eq(other.c2, tol)
    }
}

/// 2×2 matrix over the hyperbolic-complex numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct HMat2 {
    pub m: [[HyperComplex; 2]; 2],
}

impl HMat2 {
    pub const IDENTITY: Self = Self { m: [[H::ONE, H::ZERO], [H::ZERO, H::ONE]] };

    /// Pauli representation `z₀ + z·σ`, with `σ₂ = [[0, -i], [i, 0]]`.
    pub fn from_multivector(a: Multivector) -> Self {
        let [z0, z1, z2, z3] = a.z;
        let iz2 = H::I * z2;
        Self { m: [[z0 + z3, z1 - iz2], [z1 + iz2, z0 - z3]] }
    }

    pub fn to_multivector(self) -> Multivector {
        let [[a, b], [c, d]] = self.m;
        let half = |z: H| z.scale(0.5);
        Multivector::new(half(a + d), half(b + c), half(H::I * (b - c)), half(a - d))
    }

    pub fn det(self) -> HyperComplex {
        let [[a, b], [c, d]] = self.m;
        a * d - b * c
    }

    /// Inverse by adjugate over determinant.
    pub fn inverse(self) -> Result<Self> {
        let [[a, b], [c, d]] = self.m;
        let k = self.det().inverse()?;
        Ok(Self { m: [[d * k, -b * k], [-c * k, a * k]] })
    }

    pub fn apply(self, c: ColumnSpinor) -> ColumnSpinor {
        let [[a, b], [e, d]] = self.m;
        ColumnSpinor { c1: a * c.c1 + b * c.c2, c2: e * c.c1 + d * c.c2 }
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.m.iter().flatten().zip(other.m.iter().flatten()).all(|(p, q)| p.approx_eq(*q, tol))
    }
}

impl Mul for HMat2 {
    type Output = HMat2;
    fn mul(self, o: HMat2) -> HMat2 {
        let (a, b) = (self.m, o.m);
        Self { m: core::array::from_fn(|r| core::array::from_fn(|c| a[r][0] * b[0][c] + a[r][1] * b[1][c])) }
    }
}

pub fn to_matrix(a: Multivector) -> HMat2 {
    HMat2::from_multivector(a)
}

pub fn from_matrix(m: HMat2) -> Multivector {
    m.to_multivector()
}

/// `φ ∘ ψ = conj(φ₁)ψ₁ + conj(φ₂)ψ₂`.
pub fn sprod_column(a: &ColumnSpinor, b: &ColumnSpinor) -> HyperComplex {
    a.c1.conj() * b.c1 + a.c2.conj() * b.c2
}

/// `φ ∘ ψ = φ·ψ + j φ·(ψ e₃)`, read as a scalar.
///
/// Fails with [`Error::NonScalarResidual`] if the `σ` part of the sum exceeds
/// `1e-12` relative to the operands.
pub fn sprod_algebraic(a: &Spinor, b: &Spinor) -> Result<HyperComplex> {
    let e3 = Multivector::S3.hmul(H::J);
    let total = sym(a.value, b.value) + sym(a.value, b.value * e3).hmul(H::J);
    let scale = (a.value.max_abs() * b.value.max_abs()).max(1.0);
    if !total.is_scalar(DEFAULT_TOL * scale) {
        return Err(Error::NonScalarResidual);
    }
    Ok(total.scalar_part())
}

/// `|φ ∘ ψ|²`.
pub fn product_modulus_sq(a: &Spinor, b: &Spinor) -> Result<HyperComplex> {
    Ok(sprod_algebraic(a, b)?.modulus_sq())
}

/// Elastic spin factor `cos²(θ/2)`.
pub fn mott_factor(theta: f64) -> f64 {
    let c = cos(theta / 2.0);
    c * c
}

/// `(ψ³², ψ¹³, ψ²¹)` of the spinor at zero rapidity. Has period 4π in `phi`.
pub fn nonrel_vector(phi: f64, theta: f64) -> [f64; 3] {
    let b = Spinor::from_params(LorentzParams::new(phi, theta, 0.0)).even_components().b;
    [b[0], b[1], b[2]]
}

/// Closed form `(sin φ/2 sin θ/2, -cos φ/2 sin θ/2, -sin φ/2 cos θ/2)`.
pub fn nonrel_vector_closed_form(phi: f64, theta: f64) -> [f64; 3] {
    let (sp, cp) = (sin(phi / 2.0), cos(phi / 2.0));
    let (st, ct) = (sin(theta / 2.0), cos(theta / 2.0));
    [sp * st, -cp * st, -sp * ct]
}
