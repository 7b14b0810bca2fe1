use std::fmt;

use hypalg_core::cayley::{antisym, sym};
use hypalg_core::lorentz::{boost, commutator, exp_general, rotation, spin_transform};
use hypalg_core::spinor::sprod_algebraic;
use hypalg_core::{Error, HyperComplex, LorentzParams, Multivector, Spinor};

use crate::expr::{BinOp, Constant, Expr, Func};

/// Result of evaluating an expression. Arithmetic promotes
/// real → hypercomplex → multivector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Value {
    Real(f64),
    Hyper(HyperComplex),
    Multi(Multivector),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Real(_) => "real",
            Value::Hyper(_) => "hypercomplex",
            Value::Multi(_) => "multivector",
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Value::Real(_) => 0,
            Value::Hyper(_) => 1,
            Value::Multi(_) => 2,
        }
    }

    pub fn to_hyper(self) -> Option<HyperComplex> {
        match self {
            Value::Real(x) => Some(HyperComplex::real(x)),
            Value::Hyper(z) => Some(z),
            Value::Multi(_) => None,
        }
    }

    pub fn to_multi(self) -> Multivector {
        match self {
            Value::Real(x) => Multivector::real(x),
            Value::Hyper(z) => Multivector::scalar(z),
            Value::Multi(m) => m,
        }
    }

    /// Drops to the narrowest kind whose discarded parts are within `tol` of
    /// zero, relative to the value's magnitude.
    fn narrowed(self, tol: f64) -> Value {
        let m = self.to_multi();
        let t = tol * m.max_abs().max(1.0);
        if !m.is_scalar(t) {
            return Value::Multi(m);
        }
        let z = m.scalar_part();
        if z.y.abs().max(z.v.abs()).max(z.w.abs()) <= t {
            Value::Real(z.x)
        } else {
            Value::Hyper(z)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum EvalError {
    Type { message: String, at: usize },
    Algebra { error: Error, at: usize },
}

impl EvalError {
    fn type_err(at: usize, message: impl Into<String>) -> Self {
        EvalError::Type { message: message.into(), at }
    }
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Type { message, at } => write!(f, "type error at byte {at}: {message}"),
            EvalError::Algebra { error, at } => write!(f, "error at byte {at}: {error}"),
        }
    }
}

impl std::error::Error for EvalError {}

fn constant(c: Constant) -> Value {
    let m = match c {
        Constant::I => return Value::Hyper(HyperComplex::I),
        Constant::J => return Value::Hyper(HyperComplex::J),
        Constant::IJ => return Value::Hyper(HyperComplex::IJ),
        Constant::E0 => Multivector::ONE,
        Constant::E1 => Multivector::S1 * HyperComplex::J,
        Constant::E2 => Multivector::S2 * HyperComplex::J,
        Constant::E3 => Multivector::S3 * HyperComplex::J,
        Constant::S1 => Multivector::S1,
        Constant::S2 => Multivector::S2,
        Constant::S3 => Multivector::S3,
    };
    Value::Multi(m)
}

fn binary(op: BinOp, a: Value, b: Value) -> Value {
    use Value::*;
    let real = |x: f64, y: f64| match op {
        BinOp::Add => x + y,
        BinOp::Sub => x - y,
        BinOp::Mul => x * y,
    };
    match a.rank().max(b.rank()) {
        0 => match (a, b) {
            (Real(x), Real(y)) => Real(real(x, y)),
            _ => unreachable!(),
        },
        1 => {
            let (x, y) = (a.to_hyper().unwrap(), b.to_hyper().unwrap());
            Hyper(match op {
                BinOp::Add => x + y,
                BinOp::Sub => x - y,
                BinOp::Mul => x * y,
            })
        }
        _ => {
            let (x, y) = (a.to_multi(), b.to_multi());
            Multi(match op {
                BinOp::Add => x + y,
                BinOp::Sub => x - y,
                BinOp::Mul => x * y,
            })
        }
    }
}

pub fn eval(e: &Expr) -> Result<Value, EvalError> {
    match e {
        Expr::Num(v) => Ok(Value::Real(*v)),
        Expr::Const(c) => Ok(constant(*c)),
        Expr::Neg(inner) => Ok(match eval(inner)? {
            Value::Real(x) => Value::Real(-x),
            Value::Hyper(z) => Value::Hyper(-z),
            Value::Multi(m) => Value::Multi(-m),
        }),
        Expr::Binary { op, lhs, rhs, .. } => Ok(binary(*op, eval(lhs)?, eval(rhs)?)),
        Expr::Call { func, args, at } => {
            let vals = args.iter().map(eval).collect::<Result<Vec<_>, _>>()?;
            call(*func, &vals, *at)
        }
    }
}

fn arity(func: Func) -> usize {
    match func {
        Func::Bar | Func::Rev | Func::Grad | Func::Exp | Func::Inv | Func::Norm2 => 1,
        Func::Dot | Func::Wedge | Func::Sprod | Func::Commutator => 2,
        Func::Boost | Func::Rot | Func::Spinor => 3,
    }
}

fn reals(func: Func, args: &[Value], at: usize) -> Result<[f64; 3], EvalError> {
    let mut out = [0.0; 3];
    for (k, v) in args.iter().enumerate() {
        match v {
            Value::Real(x) => out[k] = *x,
            other => {
                return Err(EvalError::type_err(
                    at,
                    format!("{}: argument {} must be real, got {}", func.name(), k + 1, other.kind()),
                ))
            }
        }
    }
    Ok(out)
}

fn call(func: Func, args: &[Value], at: usize) -> Result<Value, EvalError> {
    let want = arity(func);
    if args.len() != want {
        return Err(EvalError::type_err(at, format!("{} expects {want} argument(s), got {}", func.name(), args.len())));
    }
    let alg = |error| EvalError::Algebra { error, at };
    let spinor = |v: Value| Spinor::new(v.to_multi()).map_err(alg);
    let v = match func {
        Func::Bar => match args[0] {
            Value::Real(x) => Value::Real(x),
            Value::Hyper(z) => Value::Hyper(z.conj()),
            Value::Multi(m) => Value::Multi(m.bar()),
        },
        Func::Rev => match args[0] {
            Value::Real(x) => Value::Real(x),
            Value::Hyper(z) => Value::Hyper(z.rev()),
            Value::Multi(m) => Value::Multi(m.dagger()),
        },
        Func::Grad => match args[0] {
            Value::Real(x) => Value::Real(x),
            Value::Hyper(z) => Value::Hyper(z.grade()),
            Value::Multi(m) => Value::Multi(m.hat()),
        },
        Func::Exp => match args[0] {
            Value::Real(x) => Value::Real(x.exp()),
            Value::Hyper(z) => Value::Hyper(exp_general(Multivector::scalar(z)).map_err(alg)?.scalar_part()),
            Value::Multi(m) => Value::Multi(exp_general(m).map_err(alg)?),
        },
        Func::Inv => match args[0] {
            Value::Real(0.0) => return Err(alg(Error::ZeroDivisor)),
            Value::Real(x) => Value::Real(1.0 / x),
            Value::Hyper(z) => Value::Hyper(z.inverse().map_err(alg)?),
            Value::Multi(m) => Value::Multi(m.inverse().map_err(alg)?),
        },
        Func::Dot => Value::Multi(sym(args[0].to_multi(), args[1].to_multi())).narrowed(1e-12),
        Func::Wedge => Value::Multi(antisym(args[0].to_multi(), args[1].to_multi())),
        Func::Commutator => Value::Multi(commutator(args[0].to_multi(), args[1].to_multi())),
        Func::Boost => Value::Multi(boost(reals(func, args, at)?).value),
        Func::Rot => Value::Multi(rotation(reals(func, args, at)?).value),
        Func::Spinor => {
            let [phi, theta, xi] = reals(func, args, at)?;
            Value::Multi(spin_transform(LorentzParams::new(phi, theta, xi)).value)
        }
        Func::Sprod => {
            let (a, b) = (spinor(args[0])?, spinor(args[1])?);
            Value::Hyper(sprod_algebraic(&a, &b).map_err(alg)?)
        }
        Func::Norm2 => match args[0].to_hyper() {
            Some(z) => Value::Hyper(z.modulus_sq()),
            None => {
                return Err(EvalError::type_err(at, "norm2: argument must be real or hypercomplex, got multivector"))
            }
        },
    };
    Ok(v)
}

/// Parses and evaluates in one step.
pub fn eval_str(src: &str) -> Result<Value, crate::CliError> {
    let e = crate::expr::parse(src)?;
    Ok(eval(&e)?)
}
