//! Multivectors of the sixteen dimensional algebra over hyperbolic-complex
//! scalars, on the Pauli basis `1, σ₁, σ₂, σ₃`.
//!
//! The basis obeys `σₐσᵦ = δₐᵦ + i εₐᵦ꜀ σ꜀`; `i` and `j` are central. The
//! paravector basis is `e₀ = 1`, `eₖ = jσₖ`, and the volume element
//! `e₁e₂e₃` evaluates to `ij`.

use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::hypernum::HyperComplex;
use crate::{Error, Result};

const H0: HyperComplex = HyperComplex::ZERO;

/// `z₀ + z₁σ₁ + z₂σ₂ + z₃σ₃` with hyperbolic-complex coefficients.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Multivector {
    pub z: [HyperComplex; 4],
}

impl Multivector {
    pub const ZERO: Self = Self::new(H0, H0, H0, H0);
    pub const ONE: Self = Self::scalar(HyperComplex::ONE);
    pub const I: Self = Self::scalar(HyperComplex::I);
    pub const J: Self = Self::scalar(HyperComplex::J);
    pub const IJ: Self = Self::scalar(HyperComplex::IJ);
    pub const S1: Self = Self::new(H0, HyperComplex::ONE, H0, H0);
    pub const S2: Self = Self::new(H0, H0, HyperComplex::ONE, H0);
    pub const S3: Self = Self::new(H0, H0, H0, HyperComplex::ONE);
    /// `e₁e₂e₃ = ij`.
    pub const PSEUDOSCALAR: Self = Self::IJ;

    pub const fn new(z0: HyperComplex, z1: HyperComplex, z2: HyperComplex, z3: HyperComplex) -> Self {
        Self { z: [z0, z1, z2, z3] }
    }

    pub const fn scalar(z: HyperComplex) -> Self {
        Self::new(z, H0, H0, H0)
    }

    pub const fn real(x: f64) -> Self {
        Self::scalar(HyperComplex::real(x))
    }

    /// `z₀ + v·σ`.
    pub const fn from_parts(z0: HyperComplex, v: [HyperComplex; 3]) -> Self {
        Self::new(z0, v[0], v[1], v[2])
    }

    /// Pauli basis element `σₖ` for `k ∈ 1..=3`, `σ₀ = 1`.
    pub fn sigma(k: usize) -> Result<Self> {
        let mut m = Self::ZERO;
        *m.z.get_mut(k).ok_or(Error::IndexOutOfRange(k))? = HyperComplex::ONE;
        Ok(m)
    }

    /// Paravector basis `e₀ = 1`, `eₖ = jσₖ`.
    pub fn e(mu: usize) -> Result<Self> {
        let s = Self::sigma(mu)?;
        Ok(if mu == 0 { s } else { s.hmul(HyperComplex::J) })
    }

    /// Flat coefficients, index `4k + c` for basis `σₖ` and scalar unit `c`
    /// in the order `(1, i, j, ij)`.
    pub fn to_flat(self) -> [f64; 16] {
        core::array::from_fn(|n| self.z[n / 4].to_array()[n % 4])
    }

    pub fn from_flat(a: [f64; 16]) -> Self {
        Self { z: core::array::from_fn(|k| HyperComplex::new(a[4 * k], a[4 * k + 1], a[4 * k + 2], a[4 * k + 3])) }
    }

    pub fn scalar_part(self) -> HyperComplex {
        self.z[0]
    }

    pub fn vector_part(self) -> [HyperComplex; 3] {
        [self.z[1], self.z[2], self.z[3]]
    }

    /// Multiplies every coefficient by a central scalar.
    pub fn hmul(self, s: HyperComplex) -> Self {
        Self { z: self.z.map(|c| c * s) }
    }

    pub fn scale(self, s: f64) -> Self {
        Self { z: self.z.map(|c| c.scale(s)) }
    }

    /// Geometric product.
    pub fn gp(self, b: Self) -> Self {
        let [a0, a1, a2, a3] = self.z;
        let [b0, b1, b2, b3] = b.z;
        let i = HyperComplex::I;
        Self::new(
            a0 * b0 + a1 * b1 + a2 * b2 + a3 * b3,
            a0 * b1 + a1 * b0 + i * (a2 * b3 - a3 * b2),
            a0 * b2 + a2 * b0 + i * (a3 * b1 - a1 * b3),
            a0 * b3 + a3 * b0 + i * (a1 * b2 - a2 * b1),
        )
    }

    /// Conjugation `ā`: conjugates every coefficient. Reverses products.
    pub fn bar(self) -> Self {
        Self { z: self.z.map(HyperComplex::conj) }
    }

    /// Reversion `a†`: flips `i` in every coefficient. Reverses products.
    pub fn dagger(self) -> Self {
        Self { z: self.z.map(HyperComplex::rev) }
    }

    /// Grade involution `â`: flips `j` in every coefficient. An automorphism.
    pub fn hat(self) -> Self {
        Self { z: self.z.map(HyperComplex::grade) }
    }

    /// Inverse via `(z₀ - z·σ) / (z₀² - z·z)`.
    pub fn inverse(self) -> Result<Self> {
        let [z0, z1, z2, z3] = self.z;
        let d = z0 * z0 - z1 * z1 - z2 * z2 - z3 * z3;
        let d_inv = d.inverse()?;
        Ok(Self::new(z0, -z1, -z2, -z3).hmul(d_inv))
    }

    pub fn max_abs(self) -> f64 {
        self.z.iter().map(|c| c.max_abs()).fold(0.0, f64::max)
    }

    pub fn is_finite(self) -> bool {
        self.z.iter().all(|c| c.is_finite())
    }

    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        (self - other).max_abs() <= tol
    }

    /// True when all `σₖ` coefficients vanish to `tol`.
    pub fn is_scalar(self, tol: f64) -> bool {
        self.z[1..].iter().all(|c| c.max_abs() <= tol)
    }

    /// Reads back a real paravector `x⁰ + xᵏ jσₖ`.
    ///
    /// Fails when any other component exceeds `1e-12` relative to the
    /// element's magnitude (floored at one).
    pub fn to_four_vector(self) -> Result<FourVector> {
        let tol = crate::DEFAULT_TOL * self.max_abs().max(1.0);
        let [z0, z1, z2, z3] = self.z;
        let off0 = z0.y.abs().max(z0.v.abs()).max(z0.w.abs());
        let off = [z1, z2, z3].iter().map(|c| c.x.abs().max(c.y.abs()).max(c.w.abs())).fold(off0, f64::max);
        if off.is_nan() || off > tol {
            return Err(Error::NotAParavector);
        }
        Ok(FourVector::new(z0.x, z1.v, z2.v, z3.v))
    }
}

/// Symmetric part `⟨a b̄⟩₊ = ½(a b̄ + b ā)`; the scalar product of paravectors.
pub fn sym(a: Multivector, b: Multivector) -> Multivector {
    (a * b.bar() + b * a.bar()).scale(0.5)
}

/// Antisymmetric part `⟨a b̄⟩₋ = ½(a b̄ - b ā)`; the wedge of paravectors.
pub fn antisym(a: Multivector, b: Multivector) -> Multivector {
    (a * b.bar() - b * a.bar()).scale(0.5)
}

/// Fully antisymmetrized triple product `⟨e_μ ē_ν e_σ⟩₋`.
///
/// Vanishes for repeated indices. All such products lie in
/// `span{ij, iσ₁, iσ₂, iσ₃}`.
pub fn triparavector(mu: usize, nu: usize, sig: usize) -> Result<Multivector> {
    let (a, b, c) = (Multivector::e(mu)?, Multivector::e(nu)?, Multivector::e(sig)?);
    let t = |p: Multivector, q: Multivector, r: Multivector| p * q.bar() * r;
    let sum = t(a, b, c) + t(b, c, a) + t(c, a, b) - t(b, a, c) - t(a, c, b) - t(c, b, a);
    Ok(sum.scale(1.0 / 6.0))
}

/// Real Minkowski components `x^μ`, signature `(+, -, -, -)`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct FourVector(pub [f64; 4]);

impl FourVector {
    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Self([x0, x1, x2, x3])
    }

    /// Unit vector along axis `mu`.
    pub fn basis(mu: usize) -> Result<Self> {
        let mut v = [0.0; 4];
        *v.get_mut(mu).ok_or(Error::IndexOutOfRange(mu))? = 1.0;
        Ok(Self(v))
    }

    /// `x⁰ + xᵏ jσₖ`.
    pub fn embed(self) -> Multivector {
        let [x0, x1, x2, x3] = self.0;
        let jx = |x: f64| HyperComplex::new(0.0, 0.0, x, 0.0);
        Multivector::new(HyperComplex::real(x0), jx(x1), jx(x2), jx(x3))
    }

    pub fn dot(self, other: Self) -> f64 {
        minkowski_dot(self, other)
    }

    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| (a - b).abs() <= tol)
    }
}

impl From<[f64; 4]> for FourVector {
    fn from(v: [f64; 4]) -> Self {
        Self(v)
    }
}

/// Minkowski product, read from the unit component of `sym(x, y)`.
pub fn minkowski_dot(x: FourVector, y: FourVector) -> f64 {
    sym(x.embed(), y.embed()).z[0].x
}

impl Add for Multivector {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        Self { z: core::array::from_fn(|k| self.z[k] + b.z[k]) }
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl Sub for Multivector {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        Self { z: core::array::from_fn(|k| self.z[k] - b.z[k]) }
    }
}

impl Neg for Multivector {
    type Output = Self;
    fn neg(self) -> Self {
        Self { z: self.z.map(|c| -c) }
    }
}

impl Mul for Multivector {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        self.gp(b)
    }
}

impl Mul<HyperComplex> for Multivector {
    type Output = Self;
    fn mul(self, s: HyperComplex) -> Self {
        self.hmul(s)
    }
}

impl Mul<f64> for Multivector {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl From<HyperComplex> for Multivector {
    fn from(z: HyperComplex) -> Self {
        Self::scalar(z)
    }
}

impl From<f64> for Multivector {
    fn from(x: f64) -> Self {
        Self::real(x)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    type M = Multivector;
    type H = HyperComplex;

    fn e(mu: usize) -> M {
        M::e(mu).unwrap()
    }

    #[test]
    fn pauli_relations() {
        assert_eq!(M::S1 * M::S2, M::S3 * H::I);
        assert_eq!(M::S2 * M::S3, M::S1 * H::I);
        assert_eq!(M::S3 * M::S1, M::S2 * H::I);
        assert_eq!(M::S2 * M::S1, -(M::S3 * H::I));
        for k in 1..=3 {
            assert_eq!(M::sigma(k).unwrap() * M::sigma(k).unwrap(), M::ONE);
        }
        assert_eq!(e(1) * e(2), M::S3 * H::I);
        assert_eq!(e(1) * e(1).bar(), -M::ONE);
        assert_eq!(e(1) * e(2) * e(3), M::PSEUDOSCALAR);
    }

    #[test]
    fn index_errors() {
        assert_eq!(M::e(4), Err(Error::IndexOutOfRange(4)));
        assert_eq!(triparavector(0, 1, 7), Err(Error::IndexOutOfRange(7)));
        assert_eq!(FourVector::basis(5), Err(Error::IndexOutOfRange(5)));
    }

    #[test]
    fn involution_signs_on_units() {
        assert_eq!(e(1).bar(), -e(1));
        assert_eq!(e(1).dagger(), e(1));
        assert_eq!(e(1).hat(), -e(1));
        assert_eq!(M::IJ.hat(), -M::IJ);
        assert_eq!(M::S2.bar(), M::S2);
    }

    #[test]
    fn sym_and_antisym_examples() {
        assert_eq!(sym(e(0), e(0)), M::ONE);
        assert_eq!(sym(e(1), e(1)), -M::ONE);
        assert_eq!(sym(e(1), e(2)), M::ZERO);
        assert_eq!(antisym(e(1), e(0)), e(1));
        assert_eq!(antisym(e(1), e(2)), -(M::S3 * H::I));
        let a = M::new(H::new(1., 2., 3., 4.), H::J, H::I, H::new(0.5, 0., 0., -2.));
        assert_eq!(antisym(a, a), M::ZERO);
        let b = M::S1 * H::new(0.0, 1.5, -1.0, 0.0);
        assert!((sym(a, b) + antisym(a, b)).approx_eq(a * b.bar(), 1e-14));
    }

    #[test]
    fn metric_table() {
        for mu in 0..4 {
            for nu in 0..4 {
                let g = if mu != nu {
                    0.0
                } else if mu == 0 {
                    1.0
                } else {
                    -1.0
                };
                assert_eq!(sym(e(mu), e(nu)), M::real(g), "({mu},{nu})");
                let (x, y) = (FourVector::basis(mu).unwrap(), FourVector::basis(nu).unwrap());
                assert_eq!(minkowski_dot(x, y), g);
            }
        }
    }

    #[test]
    fn parameterized_vector_is_unit_spacelike() {
        let (xi, th, ph) = (0.7_f64, 1.1_f64, 2.3_f64);
        let x = FourVector::new(
            xi.sinh(),
            xi.cosh() * th.sin() * ph.cos(),
            xi.cosh() * th.sin() * ph.sin(),
            xi.cosh() * th.cos(),
        );
        assert!((minkowski_dot(x, x) + 1.0).abs() < 1e-12);
    }

    #[test]
    fn triparavector_examples() {
        assert_eq!(triparavector(1, 1, 2).unwrap(), M::ZERO);
        assert_eq!(triparavector(0, 2, 2).unwrap(), M::ZERO);
        // expanding the six terms by hand gives -ij and -iσ₃
        assert!(triparavector(1, 2, 3).unwrap().approx_eq(-M::IJ, 1e-15));
        assert!(triparavector(0, 1, 2).unwrap().approx_eq(-(M::S3 * H::I), 1e-15));
        assert!(triparavector(2, 1, 3).unwrap().approx_eq(M::IJ, 1e-15));
    }

    /// Rank of a set of 16-dimensional real vectors by Gram-Schmidt.
    fn rank(vs: &[[f64; 16]]) -> usize {
        let mut basis: std::vec::Vec<[f64; 16]> = std::vec::Vec::new();
        for v in vs {
            let mut r = *v;
            for b in &basis {
                let d: f64 = r.iter().zip(b).map(|(p, q)| p * q).sum();
                for k in 0..16 {
                    r[k] -= d * b[k];
                }
            }
            let n = r.iter().map(|p| p * p).sum::<f64>().sqrt();
            if n > 1e-9 {
                basis.push(r.map(|p| p / n));
            }
        }
        basis.len()
    }

    #[test]
    fn triparavectors_span_pseudovectors() {
        let mut all = std::vec::Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    let t = triparavector(a, b, c).unwrap();
                    let [z0, z1, z2, z3] = t.z;
                    assert!(z0.x.abs() + z0.y.abs() + z0.v.abs() < 1e-15);
                    for zk in [z1, z2, z3] {
                        assert!(zk.x.abs() + zk.v.abs() + zk.w.abs() < 1e-15);
                    }
                    all.push(t.to_flat());
                }
            }
        }
        assert_eq!(rank(&all), 4);
        // biparavectors ⟨e_μ ē_ν⟩₋ span six dimensions
        let bi: std::vec::Vec<_> = (0..16).map(|n| antisym(e(n / 4), e(n % 4)).to_flat()).collect();
        assert_eq!(rank(&bi), 6);
    }

    #[test]
    fn paravector_units_span_all_sixteen_dimensions() {
        let mut gens = std::vec::Vec::new();
        for m in [
            M::ONE,
            e(1),
            e(2),
            e(3),
            e(1) * e(2).bar(),
            e(1) * e(3).bar(),
            e(2) * e(3).bar(),
            e(1) * e(2).bar() * e(3),
        ] {
            gens.push(m.to_flat());
            gens.push((m * H::I).to_flat());
        }
        assert_eq!(rank(&gens), 16);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(M::ONE.inverse(), Ok(M::ONE));
        assert!(M::S1.inverse().unwrap().approx_eq(M::S1, 1e-15));
        assert_eq!((M::ONE + e(3)).inverse(), Err(Error::ZeroDivisor));
    }

    #[test]
    fn four_vector_round_trip_and_rejection() {
        let x = FourVector::new(1.0, -2.0, 0.5, 3.0);
        assert_eq!(x.embed().to_four_vector(), Ok(x));
        assert_eq!(M::S1.to_four_vector(), Err(Error::NotAParavector));
        assert_eq!(M::J.to_four_vector(), Err(Error::NotAParavector));
    }

    #[test]
    fn flat_layout_is_basis_major() {
        let m = M::S2 * H::IJ;
        let flat = m.to_flat();
        assert_eq!(flat[4 * 2 + 3], 1.0);
        assert_eq!(M::from_flat(flat), m);
    }

    pub(crate) fn arb_h() -> impl Strategy<Value = H> {
        proptest::array::uniform4(-10.0..10.0f64).prop_map(H::from_array)
    }

    pub(crate) fn arb_mv() -> impl Strategy<Value = M> {
        proptest::array::uniform4(arb_h()).prop_map(|z| M { z })
    }

    fn close(a: M, b: M, rel: f64) -> bool {
        (a - b).max_abs() <= rel * a.max_abs().max(b.max_abs()).max(1.0)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn anti_involution_laws(a in arb_mv(), b in arb_mv()) {
            prop_assert!(close((a * b).bar(), b.bar() * a.bar(), 1e-12));
            prop_assert!(close((a * b).dagger(), b.dagger() * a.dagger(), 1e-12));
            prop_assert!(close((a * b).hat(), a.hat() * b.hat(), 1e-12));
            prop_assert_eq!(a.bar(), a.hat().dagger());
        }

        #[test]
        fn gp_is_associative(a in arb_mv(), b in arb_mv(), c in arb_mv()) {
            prop_assert!(close((a * b) * c, a * (b * c), 1e-11));
        }

        #[test]
        fn paravector_scalar_product_is_real(x in proptest::array::uniform4(-10.0..10.0f64),
                                             y in proptest::array::uniform4(-10.0..10.0f64)) {
            let s = sym(FourVector(x).embed(), FourVector(y).embed());
            let expect = x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
            prop_assert!(s.approx_eq(M::real(expect), 1e-14 * (1.0 + expect.abs())));
        }

        #[test]
        fn inverse_is_two_sided(a in arb_mv()) {
            if let Ok(inv) = a.inverse() {
                let scale = inv.max_abs() * a.max_abs();
                prop_assert!((inv * a).approx_eq(M::ONE, 1e-10 * scale.max(1.0)));
                prop_assert!((a * inv).approx_eq(M::ONE, 1e-10 * scale.max(1.0)));
            }
        }
    }
}
