//! Dense univariate polynomials over the exact scalar tower.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, FieldDescriptor};

/// Coefficients in ascending degree, never with a trailing zero. The zero
/// polynomial has no coefficients and no degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<ExactScalar>,
    field: FieldDescriptor,
}

impl Poly {
    pub fn zero(field: FieldDescriptor) -> Self {
        Poly {
            coeffs: Vec::new(),
            field,
        }
    }

    pub fn one(field: FieldDescriptor) -> Self {
        Self::constant(ExactScalar::one_in(field))
    }

    pub fn constant(c: ExactScalar) -> Self {
        let field = c.field();
        Self::trimmed(vec![c], field)
    }

    /// The polynomial `x`.
    pub fn x(field: FieldDescriptor) -> Self {
        Self::monomial(ExactScalar::one_in(field), 1)
    }

    pub fn monomial(c: ExactScalar, k: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![ExactScalar::zero_in(field); k];
        coeffs.push(c);
        Self::trimmed(coeffs, field)
    }

    /// `x − root`.
    pub fn linear_factor(root: &ExactScalar) -> Self {
        let field = root.field();
        Self::trimmed(vec![-root, ExactScalar::one_in(field)], field)
    }

    /// Build from ascending coefficients; rational entries are lifted into `field`.
    pub fn from_coeffs(coeffs: Vec<ExactScalar>, field: FieldDescriptor) -> Result<Self> {
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.lift(field))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::trimmed(coeffs, field))
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::trimmed(
            coeffs.iter().map(|&c| ExactScalar::int(c)).collect(),
            FieldDescriptor::Rational,
        )
    }

    fn trimmed(mut coeffs: Vec<ExactScalar>, field: FieldDescriptor) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs, field }
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactScalar> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> ExactScalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| ExactScalar::zero_in(self.field))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `deg p ≤ bound`, true for the zero polynomial.
    pub fn degree_at_most(&self, bound: usize) -> bool {
        self.degree().is_none_or(|d| d <= bound)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&ExactScalar> {
        self.coeffs.last()
    }

    pub fn lift(&self, field: FieldDescriptor) -> Result<Self> {
        if field == self.field {
            return Ok(self.clone());
        }
        Self::from_coeffs(self.coeffs.clone(), field)
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
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Self::trimmed(coeffs, self.field))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Ok(Self::trimmed(coeffs, self.field))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field));
        }
        let mut out = vec![ExactScalar::zero_in(self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Ok(Self::trimmed(out, self.field))
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self::trimmed(self.coeffs.iter().map(|a| a * c).collect(), self.field)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &ExactScalar::int_in(i as i64, self.field))
            .collect();
        Self::trimmed(coeffs, self.field)
    }

    /// Euclidean division: `self = q·quotient + remainder`, `deg remainder < deg q`.
    pub fn divmod(&self, q: &Self) -> Result<(Self, Self)> {
        self.check_same(q)?;
        let dq = q.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = q.coeffs[dq].inverse()?;
        let mut rem = self.coeffs.clone();
        let Some(dp) = self.degree() else {
            return Ok((Self::zero(self.field), Self::zero(self.field)));
        };
        if dp < dq {
            return Ok((Self::zero(self.field), self.clone()));
        }
        let mut quot = vec![ExactScalar::zero_in(self.field); dp - dq + 1];
        for k in (0..=dp - dq).rev() {
            let c = &rem[k + dq] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, qc) in q.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * qc);
            }
            quot[k] = c;
        }
        rem.truncate(dq);
        Ok((
            Self::trimmed(quot, self.field),
            Self::trimmed(rem, self.field),
        ))
    }

    pub fn rem(&self, q: &Self) -> Result<Self> {
        Ok(self.divmod(q)?.1)
    }

    /// Exact quotient; `NotDivisible` when the remainder is nonzero.
    pub fn exact_div(&self, q: &Self) -> Result<Self> {
        let (quot, rem) = self.divmod(q)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::NotDivisible(q.to_string()))
        }
    }

    pub fn divides(&self, p: &Self) -> Result<bool> {
        Ok(p.rem(self)?.is_zero())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &ExactScalar) -> Result<ExactScalar> {
        if x.field() != self.field {
            return Err(Error::FieldMismatch(self.field, x.field()));
        }
        let mut acc = ExactScalar::zero_in(self.field);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        Ok(acc)
    }

    /// `p(a·x + b)`.
    pub fn compose_affine(&self, a: &ExactScalar, b: &ExactScalar) -> Result<Self> {
        let lin = Self::from_coeffs(vec![b.clone(), a.clone()], self.field)?;
        let mut acc = Self::zero(self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(&lin)?.checked_add(&Self::constant(c.clone()))?;
        }
        Ok(acc)
    }

    /// Scale so that the lowest-degree nonzero coefficient is 1.
    pub fn normalized_low(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(c) => self.scale(&c.inverse().expect("nonzero")),
            None => self.clone(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(c) => self.scale(&c.inverse().expect("nonzero")),
            None => self.clone(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let simple = c.is_rational();
            let neg = simple && c.a() < &num_rational::BigRational::from_integer(0.into());
            let mag = if neg { -c } else { c.clone() };
            let body = if i == 0 {
                format!("{mag}")
            } else if mag.is_one() {
                mono
            } else if simple {
                format!("{mag}*{mono}")
            } else {
                format!("({mag})*{mono}")
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("polynomial field mismatch")
            }
        }
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add, checked_add);
forward_poly_binop!(Sub, sub, checked_sub);
forward_poly_binop!(Mul, mul, checked_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::trimmed(self.coeffs.iter().map(|c| -c).collect(), self.field)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(p: &Poly, q: &Poly, op: PolyOp) -> Result<Poly> {
    match op {
        PolyOp::Add => p.checked_add(q),
        PolyOp::Sub => p.checked_sub(q),
        PolyOp::Mul => p.checked_mul(q),
    }
}

/// `f` given by its distinct roots with multiplicities and a leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredInput {
    roots: Vec<(ExactScalar, usize)>,
    leading_coefficient: ExactScalar,
    field: FieldDescriptor,
}

impl FactoredInput {
    /// Validates distinct roots, positive multiplicities and total degree ≥ 4.
    /// Rational roots are lifted into the common field.
    pub fn new(roots: Vec<(ExactScalar, usize)>, leading_coefficient: ExactScalar) -> Result<Self> {
        let mut field = leading_coefficient.field();
        for (r, _) in &roots {
            field = field.join(r.field())?;
        }
        let roots = roots
            .into_iter()
            .map(|(r, m)| Ok((r.lift(field)?, m)))
            .collect::<Result<Vec<_>>>()?;
        let leading_coefficient = leading_coefficient.lift(field)?;
        if leading_coefficient.is_zero() {
            return Err(Error::InvalidInput("leading coefficient is zero".into()));
        }
        if roots.iter().any(|(_, m)| *m == 0) {
            return Err(Error::InvalidInput("multiplicity must be positive".into()));
        }
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                if roots[i].0 == roots[j].0 {
                    return Err(Error::InvalidInput(format!("repeated root {}", roots[i].0)));
                }
            }
        }
        let n: usize = roots.iter().map(|(_, m)| m).sum();
        if n < 4 {
            return Err(Error::DegreeTooSmall(n));
        }
        Ok(FactoredInput {
            roots,
            leading_coefficient,
            field,
        })
    }

    /// Monic input with integer roots.
    pub fn from_int_roots(roots: &[(i64, usize)]) -> Result<Self> {
        Self::new(
            roots.iter().map(|&(r, m)| (ExactScalar::int(r), m)).collect(),
            ExactScalar::int(1),
        )
    }

    pub fn roots(&self) -> &[(ExactScalar, usize)] {
        &self.roots
    }

    pub fn leading_coefficient(&self) -> &ExactScalar {
        &self.leading_coefficient
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum()
    }

    pub fn expand(&self) -> Poly {
        let mut p = Poly::constant(self.leading_coefficient.clone());
        for (r, m) in &self.roots {
            p = &p * &Poly::linear_factor(r).pow(*m);
        }
        p
    }

    /// Roots of `f(a·x + b)`: each `ρ` becomes `(ρ − b)/a`. The leading
    /// coefficient is kept, so the result equals `f(ax+b)` up to a scalar.
    pub fn affine_pullback(&self, a: &ExactScalar, b: &ExactScalar) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroScale);
        }
        let a = a.lift(self.field)?;
        let b = b.lift(self.field)?;
        let inv = a.inverse()?;
        let roots = self
            .roots
            .iter()
            .map(|(r, m)| (&(r - &b) * &inv, *m))
            .collect();
        Self::new(roots, self.leading_coefficient.clone())
    }
}

pub fn expand(fi: &FactoredInput) -> Poly {
    fi.expand()
}
