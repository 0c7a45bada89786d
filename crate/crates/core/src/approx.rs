//! Arbitrary-precision binary floating point and complex numbers.
//!
//! This backend only serves inputs whose roots fall outside the exact tower
//! (the irrational cubic family) and the embedding checks of the exact
//! scalars. Every exact computation in the crate stays in [`crate::scalar`].

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::{ExactScalar, FieldDescriptor};

pub const MIN_PRECISION_BITS: u32 = 64;
pub const DEFAULT_PRECISION_BITS: u32 = 128;
const GUARD_BITS: u32 = 32;

/// `mant · 2^exp`, with `mant` rounded to the working precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
}

impl BigFloat {
    pub fn zero() -> Self {
        BigFloat {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    fn rounded(mant: BigInt, exp: i64, prec: u32) -> Self {
        if mant.is_zero() {
            return Self::zero();
        }
        let bits = mant.bits();
        if bits <= prec as u64 {
            return BigFloat { mant, exp }.normalized();
        }
        let shift = bits - prec as u64;
        let (sign, mag) = (mant.sign(), mant.magnitude().clone());
        let half = num_bigint::BigUint::one() << (shift - 1);
        let mut q = &mag >> shift;
        let rem = &mag - (&q << shift);
        if rem >= half {
            q += 1u32;
        }
        BigFloat {
            mant: BigInt::from_biguint(sign, q),
            exp: exp + shift as i64,
        }
        .normalized()
    }

    fn normalized(self) -> Self {
        if self.mant.is_zero() {
            return Self::zero();
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz == 0 {
            return self;
        }
        BigFloat {
            mant: self.mant >> tz,
            exp: self.exp + tz as i64,
        }
    }

    pub fn from_bigint(n: &BigInt, prec: u32) -> Self {
        Self::rounded(n.clone(), 0, prec)
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let num = q.numer();
        let den = q.denom();
        let want = prec as i64 + GUARD_BITS as i64;
        let s = (want + den.bits() as i64 - num.bits() as i64).max(0);
        let scaled = num << s as usize;
        let (quot, _) = scaled.div_rem(den);
        Self::rounded(quot, -s, prec)
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::from_bigint(&BigInt::from(n), prec)
    }

    /// Exact rational value of this float.
    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as usize)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let shift = (bits - 60).max(0);
        let top = (&self.mant >> shift as usize).to_i64().unwrap_or(0) as f64;
        top * (2f64).powi((self.exp + shift).clamp(-2000, 2000) as i32)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// Position of the leading bit, `floor(log2 |x|) + 1`; `None` for zero.
    pub fn magnitude_exp(&self) -> Option<i64> {
        if self.mant.is_zero() {
            None
        } else {
            Some(self.mant.bits() as i64 + self.exp)
        }
    }

    pub fn neg(&self) -> Self {
        BigFloat {
            mant: -self.mant.clone(),
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    pub fn add(&self, other: &Self, prec: u32) -> Self {
        if self.is_zero() {
            return Self::rounded(other.mant.clone(), other.exp, prec);
        }
        if other.is_zero() {
            return Self::rounded(self.mant.clone(), self.exp, prec);
        }
        let (big, small) = match (self.magnitude_exp(), other.magnitude_exp()) {
            (Some(a), Some(b)) if a >= b => (self, other),
            _ => (other, self),
        };
        let gap = big.magnitude_exp().unwrap() - small.magnitude_exp().unwrap();
        if gap > prec as i64 + 2 * GUARD_BITS as i64 {
            return Self::rounded(big.mant.clone(), big.exp, prec);
        }
        let exp = big.exp.min(small.exp);
        let a = &big.mant << (big.exp - exp) as usize;
        let b = &small.mant << (small.exp - exp) as usize;
        Self::rounded(a + b, exp, prec)
    }

    pub fn sub(&self, other: &Self, prec: u32) -> Self {
        self.add(&other.neg(), prec)
    }

    pub fn mul(&self, other: &Self, prec: u32) -> Self {
        Self::rounded(&self.mant * &other.mant, self.exp + other.exp, prec)
    }

    /// Panics on division by zero.
    pub fn div(&self, other: &Self, prec: u32) -> Self {
        assert!(!other.is_zero(), "BigFloat division by zero");
        if self.is_zero() {
            return Self::zero();
        }
        let want = prec as i64 + GUARD_BITS as i64;
        let s = (want + other.mant.bits() as i64 - self.mant.bits() as i64).max(0);
        let num = &self.mant << s as usize;
        let q = num / &other.mant;
        Self::rounded(q, self.exp - other.exp - s, prec)
    }

    /// Square root of a nonnegative value; panics on negative input.
    pub fn sqrt(&self, prec: u32) -> Self {
        assert!(!self.is_negative(), "BigFloat sqrt of a negative value");
        if self.is_zero() {
            return Self::zero();
        }
        let mut mant = self.mant.clone();
        let mut exp = self.exp;
        if exp.rem_euclid(2) == 1 {
            mant <<= 1;
            exp -= 1;
        }
        let want = 2 * (prec as i64 + GUARD_BITS as i64);
        let mut t = (want - mant.bits() as i64 + 1) / 2;
        if t < 0 {
            t = 0;
        }
        let scaled = mant << (2 * t) as usize;
        let root = scaled.sqrt();
        Self::rounded(root, (exp - 2 * t) / 2, prec)
    }

    pub fn cmp_abs(&self, other: &Self) -> Ordering {
        let a = self.abs().to_rational();
        let b = other.abs().to_rational();
        a.cmp(&b)
    }

    pub fn powi2(k: i64) -> Self {
        BigFloat {
            mant: BigInt::one(),
            exp: k,
        }
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

/// Complex number with [`BigFloat`] parts at a fixed working precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxScalar {
    pub re: BigFloat,
    pub im: BigFloat,
    pub precision_bits: u32,
}

impl ApproxScalar {
    pub fn new(re: BigFloat, im: BigFloat, precision_bits: u32) -> Self {
        ApproxScalar {
            re,
            im,
            precision_bits: precision_bits.max(MIN_PRECISION_BITS),
        }
    }

    pub fn zero(prec: u32) -> Self {
        Self::new(BigFloat::zero(), BigFloat::zero(), prec)
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        Self::new(BigFloat::from_rational(q, prec), BigFloat::zero(), prec)
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::new(BigFloat::from_i64(n, prec), BigFloat::zero(), prec)
    }

    fn prec_with(&self, other: &Self) -> u32 {
        self.precision_bits.max(other.precision_bits)
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        Self::new(
            BigFloat::rounded(self.re.mant.clone(), self.re.exp, prec),
            BigFloat::rounded(self.im.mant.clone(), self.im.exp, prec),
            prec,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.prec_with(other);
        Self::new(self.re.add(&other.re, p), self.im.add(&other.im, p), p)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.prec_with(other);
        Self::new(self.re.sub(&other.re, p), self.im.sub(&other.im, p), p)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.re.neg(), self.im.neg(), self.precision_bits)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.prec_with(other);
        let w = p + GUARD_BITS;
        let re = self.re.mul(&other.re, w).sub(&self.im.mul(&other.im, w), p);
        let im = self.re.mul(&other.im, w).add(&self.im.mul(&other.re, w), p);
        Self::new(re, im, p)
    }

    /// Panics when `other` is zero.
    pub fn div(&self, other: &Self) -> Self {
        let p = self.prec_with(other);
        let w = p + GUARD_BITS;
        let den = other.abs_sq_at(w);
        let re = self
            .re
            .mul(&other.re, w)
            .add(&self.im.mul(&other.im, w), w)
            .div(&den, p);
        let im = self
            .im
            .mul(&other.re, w)
            .sub(&self.re.mul(&other.im, w), w)
            .div(&den, p);
        Self::new(re, im, p)
    }

    fn abs_sq_at(&self, w: u32) -> BigFloat {
        self.re.mul(&self.re, w).add(&self.im.mul(&self.im, w), w)
    }

    pub fn abs_sq(&self) -> BigFloat {
        self.abs_sq_at(self.precision_bits + GUARD_BITS)
    }

    pub fn abs(&self) -> BigFloat {
        self.abs_sq().sqrt(self.precision_bits)
    }

    pub fn scale_real(&self, s: &BigFloat) -> Self {
        let p = self.precision_bits;
        Self::new(self.re.mul(s, p), self.im.mul(s, p), p)
    }

    pub fn to_c64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for ApproxScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_c64();
        if im >= 0.0 {
            write!(f, "{re:.12e}+{im:.12e}i")
        } else {
            write!(f, "{re:.12e}-{:.12e}i", -im)
        }
    }
}

/// Embed an exact scalar in ℂ: `√d` maps to the positive real root for
/// `d > 0` and to `i·√|d|` for `d < 0`. The relative error is at most
/// `2^(1 − precision_bits)`.
pub fn embed_to_approx(x: &ExactScalar, precision_bits: u32) -> ApproxScalar {
    let p = precision_bits.max(MIN_PRECISION_BITS);
    let w = p + 2 * GUARD_BITS;
    let d = match x.field() {
        FieldDescriptor::Rational => return ApproxScalar::from_rational(x.a(), p),
        FieldDescriptor::Quadratic(d) => d,
    };
    if x.b().is_zero() {
        return ApproxScalar::from_rational(x.a(), p);
    }
    let root = BigFloat::from_i64(d.abs(), w).sqrt(w);
    let b_root = BigFloat::from_rational(x.b(), w).mul(&root, w);
    if d < 0 {
        let re = BigFloat::from_rational(x.a(), p);
        let im = BigFloat::rounded(b_root.mant, b_root.exp, p);
        return ApproxScalar::new(re, im, p);
    }
    let a = BigFloat::from_rational(x.a(), w);
    // a and b√d of opposite sign: go through the exact norm to avoid cancellation.
    let same_sign = x.a().is_zero() || (x.a().is_positive() == x.b().is_positive());
    let re = if same_sign {
        a.add(&b_root, p)
    } else {
        let norm = BigFloat::from_rational(&x.norm(), w);
        norm.div(&a.sub(&b_root, w), p)
    };
    ApproxScalar::new(re, BigFloat::zero(), p)
}

/// Rank of a complex matrix by column-scaled Gaussian elimination with partial
/// pivoting; a pivot whose modulus falls below `rel_threshold` (relative to the
/// unit-scaled columns) counts as zero.
pub fn approx_rank(rows: &[Vec<ApproxScalar>], rel_threshold: f64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let prec = rows
        .iter()
        .flatten()
        .map(|e| e.precision_bits)
        .max()
        .unwrap_or(DEFAULT_PRECISION_BITS);
    let mut m: Vec<Vec<ApproxScalar>> = rows.to_vec();
    for c in 0..ncols {
        let mut best = BigFloat::zero();
        for row in &m {
            let a = row[c].abs_sq();
            if a.cmp_abs(&best) == Ordering::Greater {
                best = a;
            }
        }
        if best.is_zero() {
            continue;
        }
        let inv = BigFloat::from_i64(1, prec).div(&best.sqrt(prec), prec);
        for row in m.iter_mut() {
            row[c] = row[c].scale_real(&inv);
        }
    }
    let thr = threshold_sq(rel_threshold, prec);
    let mut rank = 0;
    let mut col = 0;
    let nrows = m.len();
    while rank < nrows && col < ncols {
        let mut piv = rank;
        let mut best = m[rank][col].abs_sq();
        for r in rank + 1..nrows {
            let a = m[r][col].abs_sq();
            if a.cmp_abs(&best) == Ordering::Greater {
                best = a;
                piv = r;
            }
        }
        if best.cmp_abs(&thr) != Ordering::Greater {
            col += 1;
            continue;
        }
        m.swap(rank, piv);
        let pivot = m[rank][col].clone();
        for r in rank + 1..nrows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].div(&pivot);
            for c in col..ncols {
                let t = factor.mul(&m[rank][c]);
                m[r][c] = m[r][c].sub(&t);
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

fn threshold_sq(rel: f64, prec: u32) -> BigFloat {
    // rel is a decimal literal like 1e-9; go through a rational to stay exact.
    let scaled = (rel * 1e18).round() as i64;
    let q = BigRational::new(BigInt::from(scaled), BigInt::from(10).pow(18));
    let t = BigFloat::from_rational(&q, prec);
    t.mul(&t, prec)
}

/// Evaluate a polynomial with ascending complex coefficients by Horner's rule.
pub fn eval_approx(coeffs: &[ApproxScalar], x: &ApproxScalar) -> ApproxScalar {
    let mut acc = ApproxScalar::zero(x.precision_bits);
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// All complex roots of a polynomial with simple roots (ascending coefficients)
/// by Durand–Kerner iteration. Returns `None` if the iteration does not settle.
pub fn approx_roots(coeffs: &[ApproxScalar], prec: u32) -> Option<Vec<ApproxScalar>> {
    let deg = coeffs.len().checked_sub(1)?;
    if deg == 0 || coeffs[deg].is_zero() {
        return None;
    }
    let lead = coeffs[deg].with_precision(prec);
    let monic: Vec<ApproxScalar> = coeffs
        .iter()
        .map(|c| c.with_precision(prec).div(&lead))
        .collect();
    let seed = ApproxScalar::new(
        BigFloat::from_rational(&BigRational::new(2.into(), 5.into()), prec),
        BigFloat::from_rational(&BigRational::new(9.into(), 10.into()), prec),
        prec,
    );
    let mut z: Vec<ApproxScalar> = Vec::with_capacity(deg);
    let mut cur = ApproxScalar::from_i64(1, prec);
    for _ in 0..deg {
        z.push(cur.clone());
        cur = cur.mul(&seed);
    }
    let tol = BigFloat::powi2(-2 * (prec as i64) + 16);
    for _ in 0..(40 + 4 * prec as usize) {
        let mut max_step = BigFloat::zero();
        for i in 0..deg {
            let num = eval_approx(&monic, &z[i]);
            let mut den = ApproxScalar::from_i64(1, prec);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    den = den.mul(&z[i].sub(zj));
                }
            }
            if den.is_zero() {
                return None;
            }
            let step = num.div(&den);
            let s = step.abs_sq();
            if s.cmp_abs(&max_step) == Ordering::Greater {
                max_step = s;
            }
            z[i] = z[i].sub(&step);
        }
        let scale = z
            .iter()
            .map(|v| v.abs_sq())
            .fold(BigFloat::from_i64(1, prec), |a, b| {
                if b.cmp_abs(&a) == Ordering::Greater {
                    b
                } else {
                    a
                }
            });
        if max_step.cmp_abs(&tol.mul(&scale, prec)) != Ordering::Greater {
            return Some(z);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyadic_is_exact() {
        let x = embed_to_approx(&ExactScalar::frac(1, 2), 128);
        assert_eq!(x.re.to_rational(), BigRational::new(1.into(), 2.into()));
        assert!(x.im.is_zero());
    }

    #[test]
    fn arithmetic_basics() {
        let p = 128;
        let a = BigFloat::from_i64(3, p);
        let b = BigFloat::from_i64(4, p);
        assert_eq!(a.add(&b, p).to_rational(), BigRational::from_integer(7.into()));
        assert_eq!(a.mul(&b, p).to_rational(), BigRational::from_integer(12.into()));
        let q = a.div(&b, p);
        assert_eq!(q.to_rational(), BigRational::new(3.into(), 4.into()));
        let s = BigFloat::from_i64(16, p).sqrt(p);
        assert_eq!(s.to_rational(), BigRational::from_integer(4.into()));
    }

    #[test]
    fn rank_detects_dependency() {
        let p = 128;
        let r = |v: &[i64]| v.iter().map(|&x| ApproxScalar::from_i64(x, p)).collect::<Vec<_>>();
        let m = vec![r(&[1, 0, -1]), r(&[-1, 0, 1])];
        assert_eq!(approx_rank(&m, 1e-9), 1);
        let m = vec![r(&[1, 2, 3]), r(&[0, 1, 5]), r(&[2, 4, 7])];
        assert_eq!(approx_rank(&m, 1e-9), 3);
    }

    #[test]
    fn roots_of_rational_cubic() {
        // (x − 1)(x − 2)(x + 3) = x³ − 7x + 6
        let p = 128;
        let c: Vec<_> = [6, -7, 0, 1].iter().map(|&v| ApproxScalar::from_i64(v, p)).collect();
        let mut roots: Vec<f64> = approx_roots(&c, p).unwrap().iter().map(|z| z.re.to_f64()).collect();
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in roots.iter().zip([-3.0, 1.0, 2.0]) {
            assert!((got - want).abs() < 1e-30);
        }
    }
}
