//! Exact scalars in ℚ or a single quadratic extension ℚ(√d).
//!
//! An [`ExactScalar`] is `a + b·√d` with `a, b` arbitrary-precision rationals.
//! Gaussian rationals are the case `d = -1`. Values are kept canonical
//! (reduced fractions, `b = 0` under [`FieldDescriptor::Rational`]), so the
//! derived `PartialEq` is exact equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDescriptor {
    Rational,
    /// ℚ(√d) for a squarefree `d ∉ {0, 1}`.
    Quadratic(i64),
}

impl FieldDescriptor {
    pub fn quadratic(d: i64) -> Result<Self> {
        if d == 0 || d == 1 {
            return Err(Error::InvalidField(format!("d = {d} does not give a quadratic extension")));
        }
        if !is_squarefree(d) {
            return Err(Error::InvalidField(format!("d = {d} is not squarefree")));
        }
        Ok(FieldDescriptor::Quadratic(d))
    }

    pub fn gaussian() -> Self {
        FieldDescriptor::Quadratic(-1)
    }

    pub fn d(&self) -> Option<i64> {
        match self {
            FieldDescriptor::Rational => None,
            FieldDescriptor::Quadratic(d) => Some(*d),
        }
    }

    /// The smallest field containing both, if one contains the other.
    pub fn join(self, other: Self) -> Result<Self> {
        match (self, other) {
            (a, b) if a == b => Ok(a),
            (FieldDescriptor::Rational, q) | (q, FieldDescriptor::Rational) => Ok(q),
            (a, b) => Err(Error::FieldMismatch(a, b)),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "Q"),
            FieldDescriptor::Quadratic(d) => write!(f, "Q(sqrt({d}))"),
        }
    }
}

fn is_squarefree(d: i64) -> bool {
    let mut n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    a: BigRational,
    b: BigRational,
    field: FieldDescriptor,
}

impl ExactScalar {
    pub fn new(a: BigRational, b: BigRational, field: FieldDescriptor) -> Result<Self> {
        if field == FieldDescriptor::Rational && !b.is_zero() {
            return Err(Error::InvalidInput(
                "irrational part must be zero over Q".to_string(),
            ));
        }
        Ok(ExactScalar { a, b, field })
    }

    pub fn rational(q: BigRational) -> Self {
        ExactScalar {
            a: q,
            b: BigRational::zero(),
            field: FieldDescriptor::Rational,
        }
    }

    /// A rational number viewed inside `field`.
    pub fn from_rational_in(q: BigRational, field: FieldDescriptor) -> Self {
        ExactScalar {
            a: q,
            b: BigRational::zero(),
            field,
        }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    pub fn int_in(n: i64, field: FieldDescriptor) -> Self {
        Self::from_rational_in(BigRational::from_integer(n.into()), field)
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Self::rational(BigRational::new(num.into(), den.into()))
    }

    pub fn frac_in(num: i64, den: i64, field: FieldDescriptor) -> Self {
        Self::from_rational_in(BigRational::new(num.into(), den.into()), field)
    }

    /// `a + b·√d` with small integer fractions, for tests and fixtures.
    pub fn quad(a: (i64, i64), b: (i64, i64), d: i64) -> Result<Self> {
        let field = FieldDescriptor::quadratic(d)?;
        Self::new(
            BigRational::new(a.0.into(), a.1.into()),
            BigRational::new(b.0.into(), b.1.into()),
            field,
        )
    }

    /// The generator `√d` of a quadratic field.
    pub fn sqrt_d(field: FieldDescriptor) -> Result<Self> {
        match field {
            FieldDescriptor::Rational => Err(Error::InvalidField("Q has no √d generator".into())),
            FieldDescriptor::Quadratic(_) => Ok(ExactScalar {
                a: BigRational::zero(),
                b: BigRational::one(),
                field,
            }),
        }
    }

    pub fn zero_in(field: FieldDescriptor) -> Self {
        Self::from_rational_in(BigRational::zero(), field)
    }

    pub fn one_in(field: FieldDescriptor) -> Self {
        Self::from_rational_in(BigRational::one(), field)
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Re-home the value into `field`; only ℚ → ℚ(√d) is allowed.
    pub fn lift(&self, field: FieldDescriptor) -> Result<Self> {
        if self.field == field {
            return Ok(self.clone());
        }
        if self.is_rational() && self.field == FieldDescriptor::Rational {
            return Ok(Self::from_rational_in(self.a.clone(), field));
        }
        Err(Error::FieldMismatch(self.field, field))
    }

    fn d_rational(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.field.d().unwrap_or(0)))
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - self.d_rational() * &self.b * &self.b
    }

    pub fn conj(&self) -> Self {
        ExactScalar {
            a: self.a.clone(),
            b: -self.b.clone(),
            field: self.field,
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch(self.field, other.field))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(ExactScalar {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            field: self.field,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(ExactScalar {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            field: self.field,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let d = self.d_rational();
        Ok(ExactScalar {
            a: &self.a * &other.a + d * &self.b * &other.b,
            b: &self.a * &other.b + &self.b * &other.a,
            field: self.field,
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // (a − b√d)/(a² − d b²); the norm is nonzero since d is not a square.
        let n = self.norm();
        Ok(ExactScalar {
            a: &self.a / &n,
            b: -(&self.b / &n),
            field: self.field,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        self.checked_mul(&other.inverse()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one_in(self.field);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        ExactScalar {
            a: &self.a * q,
            b: &self.b * q,
            field: self.field,
        }
    }

    /// Total bit size of the numerators and denominators; used to pick cheap pivots.
    pub fn height(&self) -> u64 {
        let bits = |q: &BigRational| q.numer().bits() + q.denom().bits();
        bits(&self.a) + bits(&self.b)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match self.field {
            FieldDescriptor::Rational => return write!(f, "{}", self.a),
            FieldDescriptor::Quadratic(d) => d,
        };
        let root = |b: &BigRational| {
            if b.is_one() {
                format!("sqrt({d})")
            } else {
                format!("{b}*sqrt({d})")
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) if self.b == -BigRational::one() => write!(f, "-sqrt({d})"),
            (true, false) => write!(f, "{}", root(&self.b)),
            (false, false) if self.b.is_negative() => {
                write!(f, "{} - {}", self.a, root(&-self.b.clone()))
            }
            (false, false) => write!(f, "{} + {}", self.a, root(&self.b)),
        }
    }
}

// Operator impls panic on a field mismatch. Library code only combines values
// of one field; external input goes through the checked_* methods.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("ExactScalar::{}: {e}", stringify!($method)),
                }
            }
        }
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            a: -self.a.clone(),
            b: -self.b.clone(),
            field: self.field,
        }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

/// Binary operation selector, mirroring the `scalar_arith` entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn scalar_arith(x: &ExactScalar, y: &ExactScalar, op: ArithOp) -> Result<ExactScalar> {
    match op {
        ArithOp::Add => x.checked_add(y),
        ArithOp::Sub => x.checked_sub(y),
        ArithOp::Mul => x.checked_mul(y),
        ArithOp::Div => x.checked_div(y),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn field_validation() {
        assert!(FieldDescriptor::quadratic(0).is_err());
        assert!(FieldDescriptor::quadratic(1).is_err());
        assert!(FieldDescriptor::quadratic(12).is_err());
        assert!(FieldDescriptor::quadratic(-4).is_err());
        assert!(FieldDescriptor::quadratic(-33).is_ok());
        assert!(FieldDescriptor::quadratic(3).is_ok());
        assert_eq!(FieldDescriptor::gaussian(), FieldDescriptor::Quadratic(-1));
    }

    #[test]
    fn closure_sum() {
        let f = FieldDescriptor::quadratic(3).unwrap();
        let one = ExactScalar::one_in(f);
        let r = ExactScalar::sqrt_d(f).unwrap();
        let s = scalar_arith(&one, &r, ArithOp::Add).unwrap();
        assert_eq!(s, ExactScalar::quad((1, 1), (1, 1), 3).unwrap());
    }

    #[test]
    fn defining_relation() {
        let f = FieldDescriptor::quadratic(-33).unwrap();
        let r = ExactScalar::sqrt_d(f).unwrap();
        assert_eq!(&r * &r, ExactScalar::int_in(-33, f));
    }

    #[test]
    fn scaled_root_squared_matches_longhand() {
        // (3/33 √-33)² = 9/1089 · (-33) = -297/1089 = -3/11, worked out by hand
        // as numerator 9·(-33) = -297 and denominator 33² = 1089, gcd 99.
        let x = ExactScalar::quad((0, 1), (3, 33), -33).unwrap();
        let sq = &x * &x;
        let num = BigInt::from(9) * BigInt::from(-33);
        let den = BigInt::from(33 * 33);
        assert_eq!(sq.a(), &BigRational::new(num, den));
        assert_eq!(sq.a(), &q(-3, 11));
        assert!(sq.b().is_zero());
    }

    #[test]
    fn mismatch_and_zero_division() {
        let a = ExactScalar::quad((1, 1), (1, 1), 3).unwrap();
        let b = ExactScalar::quad((1, 1), (1, 1), 5).unwrap();
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch(..))));
        let z = ExactScalar::zero_in(a.field());
        assert_eq!(a.checked_div(&z), Err(Error::DivisionByZero));
    }

    #[test]
    fn lift_rational() {
        let f = FieldDescriptor::quadratic(2).unwrap();
        let x = ExactScalar::frac(1, 2).lift(f).unwrap();
        assert_eq!(x.field(), f);
        assert!(ExactScalar::sqrt_d(f).unwrap().lift(FieldDescriptor::Rational).is_err());
    }

    #[test]
    fn display() {
        let x = ExactScalar::quad((1, 2), (-3, 1), 3).unwrap();
        assert_eq!(x.to_string(), "1/2 - 3*sqrt(3)");
        assert_eq!(ExactScalar::frac(-5, 3).to_string(), "-5/3");
    }
}
