//! The interpolation spaces `Z(η, ω; s, k) = { p : deg p ≤ k, p′(ω_i) = η_i p(ω_i) }`.

use crate::approx::{approx_rank, embed_to_approx, ApproxScalar};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::poly::Poly;
use crate::scalar::{ExactScalar, FieldDescriptor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZProblem {
    eta: Vec<ExactScalar>,
    omega: Vec<ExactScalar>,
    k: usize,
    field: FieldDescriptor,
}

impl ZProblem {
    /// Checks `s ≥ 1`, equal lengths and pairwise distinct nodes; rational
    /// entries are lifted into the common field.
    pub fn new(eta: Vec<ExactScalar>, omega: Vec<ExactScalar>, k: usize) -> Result<Self> {
        if omega.is_empty() {
            return Err(Error::InvalidInput("Z needs at least one node".into()));
        }
        if eta.len() != omega.len() {
            return Err(Error::InvalidInput(format!(
                "{} eta values for {} nodes",
                eta.len(),
                omega.len()
            )));
        }
        let mut field = FieldDescriptor::Rational;
        for x in eta.iter().chain(&omega) {
            field = field.join(x.field())?;
        }
        let lift = |v: Vec<ExactScalar>| v.into_iter().map(|x| x.lift(field)).collect::<Result<Vec<_>>>();
        let eta = lift(eta)?;
        let omega = lift(omega)?;
        for i in 0..omega.len() {
            for j in i + 1..omega.len() {
                if omega[i] == omega[j] {
                    return Err(Error::CoincidentPoints);
                }
            }
        }
        Ok(ZProblem {
            eta,
            omega,
            k,
            field,
        })
    }

    pub fn from_ints(eta: &[i64], omega: &[i64], k: usize) -> Result<Self> {
        let v = |xs: &[i64]| xs.iter().map(|&x| ExactScalar::int(x)).collect();
        Self::new(v(eta), v(omega), k)
    }

    pub fn eta(&self) -> &[ExactScalar] {
        &self.eta
    }

    pub fn omega(&self) -> &[ExactScalar] {
        &self.omega
    }

    pub fn s(&self) -> usize {
        self.omega.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn with_k(&self, k: usize) -> Self {
        ZProblem { k, ..self.clone() }
    }

    /// Keep only the nodes at `indices`.
    pub fn restrict(&self, indices: &[usize]) -> Result<Self> {
        let pick = |v: &[ExactScalar]| -> Result<Vec<ExactScalar>> {
            indices
                .iter()
                .map(|&i| {
                    v.get(i).cloned().ok_or(Error::IndexOutOfRange {
                        index: i,
                        len: v.len(),
                    })
                })
                .collect()
        };
        Self::new(pick(&self.eta)?, pick(&self.omega)?, self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedMatrix {
    pub entries: Matrix,
    pub problem: ZProblem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZReport {
    pub dimension: usize,
    pub rank: usize,
    pub degenerate: bool,
    pub basis: Vec<Poly>,
}

/// Entry `(i, j) = η_i ω_i^j − j ω_i^{j−1}`: the condition `p′(ω_i) = η_i p(ω_i)`
/// on the monomial coefficients of `p`.
pub fn associated_matrix(z: &ZProblem) -> AssociatedMatrix {
    let entries = z
        .eta
        .iter()
        .zip(&z.omega)
        .map(|(eta, w)| {
            let mut row = Vec::with_capacity(z.k + 1);
            let mut prev = ExactScalar::zero_in(z.field); // ω^{j−1}
            let mut cur = ExactScalar::one_in(z.field); // ω^j
            for j in 0..=z.k {
                let jj = ExactScalar::int_in(j as i64, z.field);
                row.push(&(eta * &cur) - &(&jj * &prev));
                prev = cur.clone();
                cur = &cur * w;
            }
            row
        })
        .collect();
    AssociatedMatrix {
        entries,
        problem: z.clone(),
    }
}

pub fn z_report(z: &ZProblem) -> ZReport {
    let a = associated_matrix(z);
    let kernel = linalg::nullspace(&a.entries, z.k + 1, z.field);
    let rank = z.k + 1 - kernel.len();
    let basis: Vec<Poly> = kernel
        .into_iter()
        .map(|v| Poly::from_coeffs(v, z.field).expect("same field"))
        .collect();
    let s = z.s();
    assert!(basis.len() + s > z.k, "lower bound k + 1 − s ≤ dim violated");
    if z.k >= 1 {
        assert!(rank >= 1, "associated matrix with k ≥ 1 cannot vanish");
    }
    ZReport {
        dimension: basis.len(),
        rank,
        degenerate: rank < s.min(z.k + 1),
        basis,
    }
}

/// Whether `p ∈ Z(η, ω; s, k)`.
pub fn membership(z: &ZProblem, p: &Poly) -> Result<bool> {
    if !p.degree_at_most(z.k) {
        return Ok(false);
    }
    let p = p.lift(z.field)?;
    let dp = p.derivative();
    for (eta, w) in z.eta.iter().zip(&z.omega) {
        if dp.eval(w)? != eta * &p.eval(w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Drop node `i` and shift the remaining data: `η̃_j = η_j − 2/(ω_j − ω_i)`,
/// `k ↦ k − 2`. Then `q ∈ Z̃` iff `(x − ω_i)² q ∈ Z`.
pub fn reduce(z: &ZProblem, i: usize) -> Result<ZProblem> {
    let s = z.s();
    if i >= s {
        return Err(Error::IndexOutOfRange { index: i, len: s });
    }
    if s < 2 || z.k < s.max(2) {
        return Err(Error::HypothesisViolated(format!(
            "reduce needs s ≥ 2 and k ≥ max(s, 2), got s = {s}, k = {}",
            z.k
        )));
    }
    let two = ExactScalar::int_in(2, z.field);
    let wi = &z.omega[i];
    let mut eta = Vec::with_capacity(s - 1);
    let mut omega = Vec::with_capacity(s - 1);
    for j in (0..s).filter(|&j| j != i) {
        let shift = two.checked_div(&(&z.omega[j] - wi))?;
        eta.push(&z.eta[j] - &shift);
        omega.push(z.omega[j].clone());
    }
    ZProblem::new(eta, omega, z.k - 2)
}

/// `η′ = η/a`, `ω′ = aω + b`; `p ∈ Z` iff `p((x − b)/a) ∈ Z′`.
pub fn affine_transport(z: &ZProblem, a: &ExactScalar, b: &ExactScalar) -> Result<ZProblem> {
    if a.is_zero() {
        return Err(Error::ZeroScale);
    }
    let field = z.field.join(a.field())?.join(b.field())?;
    let a = a.lift(field)?;
    let b = b.lift(field)?;
    let inv = a.inverse()?;
    let eta = z
        .eta
        .iter()
        .map(|e| Ok(&e.lift(field)? * &inv))
        .collect::<Result<Vec<_>>>()?;
    let omega = z
        .omega
        .iter()
        .map(|w| Ok(&(&w.lift(field)? * &a) + &b))
        .collect::<Result<Vec<_>>>()?;
    ZProblem::new(eta, omega, z.k)
}

/// `η_i = Σ_{j≠i} 2/(ω_i − ω_j)`, i.e. `g″(ω_i)/g′(ω_i)` for `g = ∏(x − ω_j)`.
pub fn critical_eta(omega: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
    let Some(field) = omega.first().map(|w| w.field()) else {
        return Ok(Vec::new());
    };
    let two = ExactScalar::int_in(2, field);
    omega
        .iter()
        .enumerate()
        .map(|(i, wi)| {
            omega
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .try_fold(ExactScalar::zero_in(field), |acc, (_, wj)| {
                    let diff = wi.checked_sub(wj)?;
                    if diff.is_zero() {
                        return Err(Error::CoincidentPoints);
                    }
                    Ok(&acc + &two.checked_div(&diff)?)
                })
        })
        .collect()
}

/// Rank and dimension of a Z-problem whose data is only known approximately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxZReport {
    pub dimension: usize,
    pub rank: usize,
    pub degenerate: bool,
    pub precision_bits: u32,
}

pub const APPROX_PIVOT_THRESHOLD: f64 = 1e-9;

pub fn approx_associated_matrix(eta: &[ApproxScalar], omega: &[ApproxScalar], k: usize) -> Vec<Vec<ApproxScalar>> {
    eta.iter()
        .zip(omega)
        .map(|(e, w)| {
            let p = e.precision_bits.max(w.precision_bits);
            let mut row = Vec::with_capacity(k + 1);
            let mut prev = ApproxScalar::zero(p);
            let mut cur = ApproxScalar::from_i64(1, p);
            for j in 0..=k {
                let jj = ApproxScalar::from_i64(j as i64, p);
                row.push(e.mul(&cur).sub(&jj.mul(&prev)));
                prev = cur.clone();
                cur = cur.mul(w);
            }
            row
        })
        .collect()
}

pub fn z_report_approx(eta: &[ApproxScalar], omega: &[ApproxScalar], k: usize) -> ApproxZReport {
    let m = approx_associated_matrix(eta, omega, k);
    let rank = approx_rank(&m, APPROX_PIVOT_THRESHOLD);
    let precision_bits = eta
        .iter()
        .chain(omega)
        .map(|x| x.precision_bits)
        .min()
        .unwrap_or(0);
    ApproxZReport {
        dimension: k + 1 - rank,
        rank,
        degenerate: rank < eta.len().min(k + 1),
        precision_bits,
    }
}

/// Embed an exact problem and compute its rank on the approximate backend.
pub fn z_report_embedded(z: &ZProblem, precision_bits: u32) -> ApproxZReport {
    let e: Vec<_> = z.eta.iter().map(|x| embed_to_approx(x, precision_bits)).collect();
    let w: Vec<_> = z.omega.iter().map(|x| embed_to_approx(x, precision_bits)).collect();
    z_report_approx(&e, &w, z.k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<ExactScalar> {
        v.iter().map(|&x| ExactScalar::int(x)).collect()
    }

    #[test]
    fn degenerate_two_by_two() {
        let z = ZProblem::from_ints(&[1, -1], &[1, -1], 2).unwrap();
        let a = associated_matrix(&z);
        assert_eq!(a.entries, vec![ints(&[1, 0, -1]), ints(&[-1, 0, 1])]);
        let r = z_report(&z);
        assert_eq!((r.rank, r.dimension, r.degenerate), (1, 2, true));
        for p in &r.basis {
            assert!(membership(&z, p).unwrap());
        }
    }

    #[test]
    fn zero_eta_is_scaled_vandermonde() {
        let z = ZProblem::from_ints(&[0, 0, 0], &[0, 1, 2], 5).unwrap();
        let a = associated_matrix(&z);
        for (i, w) in [0i64, 1, 2].iter().enumerate() {
            for j in 1..=5usize {
                let want = -(j as i64) * w.pow(j as u32 - 1);
                assert_eq!(a.entries[i][j], ExactScalar::int(want));
            }
        }
        assert_eq!(z_report(&z).dimension, 3);
        let z = ZProblem::from_ints(&[0], &[0], 1).unwrap();
        assert_eq!(associated_matrix(&z).entries, vec![ints(&[0, -1])]);
    }

    #[test]
    fn two_nodes_generic() {
        // η₂(ω₂ − ω₁) = 3 ≠ 2
        let z = ZProblem::from_ints(&[5, 3], &[0, 1], 4).unwrap();
        assert_eq!(z_report(&z).dimension, 3);
    }

    #[test]
    fn critical_values() {
        assert_eq!(critical_eta(&ints(&[1, -1])).unwrap(), ints(&[1, -1]));
        assert_eq!(critical_eta(&ints(&[0, 1, -1])).unwrap(), ints(&[0, 3, -3]));
        assert_eq!(critical_eta(&ints(&[1, 1])), Err(Error::CoincidentPoints));
    }

    #[test]
    fn reduce_single_step() {
        let z = ZProblem::from_ints(&[4, 7], &[3, 1], 3).unwrap();
        let r = reduce(&z, 1).unwrap();
        assert_eq!(r.s(), 1);
        assert_eq!(r.k(), 1);
        assert_eq!(r.eta()[0], ExactScalar::int(3));
        assert!(matches!(reduce(&z, 2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn transport_identity_and_zero_scale() {
        let z = ZProblem::from_ints(&[1, 2], &[0, 5], 3).unwrap();
        assert_eq!(affine_transport(&z, &ExactScalar::int(1), &ExactScalar::int(0)).unwrap(), z);
        assert_eq!(
            affine_transport(&z, &ExactScalar::int(0), &ExactScalar::int(1)),
            Err(Error::ZeroScale)
        );
    }

    #[test]
    fn approximate_rank_matches_exact() {
        let z = ZProblem::from_ints(&[1, -1], &[1, -1], 2).unwrap();
        let r = z_report_embedded(&z, 128);
        assert_eq!((r.rank, r.dimension), (1, 2));
    }
}
