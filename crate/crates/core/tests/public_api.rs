use std::f64::consts::{FRAC_PI_2, PI};

use hypalg_core::cayley::minkowski_dot;
use hypalg_core::lorentz::{boost, rotation, spin_transform};
use hypalg_core::spinor::{mott_factor, nonrel_vector, nonrel_vector_closed_form, product_modulus_sq};
use hypalg_core::{Error, FourVector, HyperComplex, LorentzParams, Multivector, Spinor};

#[test]
fn boost_then_rotate_round_trip() {
    let t = boost([0.4, -0.2, 1.1]) * rotation([0.0, FRAC_PI_2, 0.0]);
    let x = FourVector::new(2.0, 0.5, -1.0, 0.25);
    let y = t.apply(x).unwrap();
    assert!((minkowski_dot(y, y) - minkowski_dot(x, x)).abs() < 1e-12);
    assert!(t.inverse().apply(y).unwrap().approx_eq(x, 1e-12));
}

#[test]
fn spinor_from_spin_transform() {
    let p = LorentzParams::new(FRAC_PI_2, FRAC_PI_2, 0.0);
    let psi = Spinor::from_rotor(spin_transform(p)).unwrap();
    let e = psi.even_components();
    assert!((e.s - 0.5).abs() < 1e-15);
    let c = psi.to_column();
    assert!((c.c1.modulus_sq() + c.c2.modulus_sq()).approx_eq(HyperComplex::ONE, 1e-15));
}

#[test]
fn elastic_cross_section_is_mott() {
    for k in 0..=8 {
        let theta = PI * k as f64 / 8.0;
        let phi = Spinor::from_params(LorentzParams::new(1.3, theta, 0.0));
        let m = product_modulus_sq(&phi, &Spinor::STANDARD).unwrap();
        assert!(m.approx_eq(HyperComplex::real(mott_factor(theta)), 1e-14));
    }
}

#[test]
fn four_pi_periodicity() {
    let a = nonrel_vector(0.7, 1.9);
    let b = nonrel_vector(0.7 + 2.0 * PI, 1.9);
    let c = nonrel_vector(0.7 + 4.0 * PI, 1.9);
    for k in 0..3 {
        assert!((a[k] + b[k]).abs() < 1e-14);
        assert!((a[k] - c[k]).abs() < 1e-14);
        assert!((a[k] - nonrel_vector_closed_form(0.7, 1.9)[k]).abs() < 1e-15);
    }
}

#[test]
fn errors_surface() {
    assert_eq!(Spinor::new(Multivector::S1), Err(Error::NotInSpinorAlgebra));
    assert_eq!((Multivector::ONE + Multivector::J).inverse(), Err(Error::ZeroDivisor));
    assert_eq!(Multivector::S1.to_four_vector(), Err(Error::NotAParavector));
}
