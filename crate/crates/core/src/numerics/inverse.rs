use super::Tolerances;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Inverse functions whose arguments routinely land a rounding error outside
/// their domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InverseKind {
    Arccosh,
    Arctanh,
    Arccos,
    Arcsin,
    Arcsech,
    Arcsec,
}

impl InverseKind {
    fn name(self) -> &'static str {
        match self {
            InverseKind::Arccosh => "arccosh",
            InverseKind::Arctanh => "arctanh",
            InverseKind::Arccos => "arccos",
            InverseKind::Arcsin => "arcsin",
            InverseKind::Arcsech => "arcsech",
            InverseKind::Arcsec => "arcsec",
        }
    }
}

fn out_of_domain<T: Real>(kind: InverseKind, x: T) -> Error {
    Error::Domain {
        op: kind.name(),
        detail: format!("argument {x:e} outside the domain"),
    }
}

/// Evaluates an inverse hyperbolic or trigonometric function after clamping
/// `x` onto the closed domain.
///
/// Arguments further than `domain_clamp` from the domain are rejected.
/// Boundary values map to their exact limits (`arccosh(1) = 0`,
/// `arctanh(±1) = ±∞`, `arcsech(0) = ∞`).
pub fn safe_inverse<T: Real>(kind: InverseKind, x: T, tol: &Tolerances<T>) -> Result<T> {
    if x.is_nan() {
        return Err(out_of_domain(kind, x));
    }
    let one = T::one();
    let c = tol.domain_clamp;
    match kind {
        InverseKind::Arccosh => {
            if x < one - c {
                return Err(out_of_domain(kind, x));
            }
            if x <= one {
                return Ok(T::zero());
            }
            Ok(x.acosh())
        }
        InverseKind::Arctanh => {
            if x.abs() > one + c {
                return Err(out_of_domain(kind, x));
            }
            if x >= one {
                return Ok(T::infinity());
            }
            if x <= -one {
                return Ok(T::neg_infinity());
            }
            Ok(x.atanh())
        }
        InverseKind::Arccos | InverseKind::Arcsin => {
            if x.abs() > one + c {
                return Err(out_of_domain(kind, x));
            }
            let y = x.max(-one).min(one);
            Ok(if kind == InverseKind::Arccos {
                if y == one {
                    T::zero()
                } else {
                    y.acos()
                }
            } else {
                y.asin()
            })
        }
        InverseKind::Arcsech => {
            if x < -c || x > one + c {
                return Err(out_of_domain(kind, x));
            }
            if x <= T::zero() {
                return Ok(T::infinity());
            }
            if x >= one {
                return Ok(T::zero());
            }
            Ok((one / x).acosh())
        }
        InverseKind::Arcsec => {
            // domain |x| >= 1
            if x.abs() < one - c {
                return Err(out_of_domain(kind, x));
            }
            let y = if x.abs() < one { one.copysign(x) } else { x };
            safe_inverse(InverseKind::Arccos, one / y, tol)
        }
    }
}
