use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Error {
    /// The element lies on the null cone and has no inverse.
    ZeroDivisor,
    /// A paravector index outside `0..=3`.
    IndexOutOfRange(usize),
    /// The exponential series did not settle within the term budget.
    NoConvergence,
    /// A multivector expected to be a real paravector is not one.
    NotAParavector,
    /// A multivector has components outside `span{1, iσₖ, jσₖ, ij}`.
    NotInSpinorAlgebra,
    /// The spinor product left a non-scalar residual.
    NonScalarResidual,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDivisor => f.write_str("zero divisor: element is not invertible"),
            Error::IndexOutOfRange(i) => write!(f, "paravector index {i} out of range 0..=3"),
            Error::NoConvergence => f.write_str("exponential series did not converge"),
            Error::NotAParavector => f.write_str("result is not a real paravector"),
            Error::NotInSpinorAlgebra => f.write_str("element is outside the spinor subalgebra"),
            Error::NonScalarResidual => f.write_str("spinor product has a non-scalar residual"),
        }
    }
}

impl core::error::Error for Error {}
