//! Brute-force route: W(f) as the kernel of `p ↦ R(f, p) mod f` on `P_{n−2}`.

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::Poly;

/// `R(f, p) = f″p − f′p′`.
pub fn r_of(f: &Poly, p: &Poly) -> Result<Poly> {
    let f1 = f.derivative();
    let f2 = f1.derivative();
    f2.checked_mul(p)?.checked_sub(&f1.checked_mul(&p.derivative())?)
}

/// Whether `p ∈ W(f)`: degree bound and exact divisibility.
pub fn in_wf(f: &Poly, p: &Poly) -> Result<bool> {
    let n = f.degree().unwrap_or(0);
    if n < 2 || !p.degree_at_most(n - 2) {
        return Ok(false);
    }
    Ok(r_of(f, p)?.rem(f)?.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WfKernel {
    pub dimension: usize,
    /// Canonical basis: reduced echelon in ascending degree, so the lowest
    /// nonzero coefficient of each element is 1.
    pub basis: Vec<Poly>,
    pub f: Poly,
}

pub fn wf_kernel(f: &Poly) -> Result<WfKernel> {
    let n = f.degree().unwrap_or(0);
    if n < 4 {
        return Err(Error::DegreeTooSmall(n));
    }
    let field = f.field();
    // Column j is the image of x^j, a remainder of degree < n.
    let columns: Vec<Poly> = (0..=n - 2)
        .map(|j| {
            let xj = Poly::monomial(crate::ExactScalar::one_in(field), j);
            r_of(f, &xj).and_then(|r| r.rem(f))
        })
        .collect::<Result<_>>()?;
    let matrix: linalg::Matrix = (0..n)
        .map(|i| columns.iter().map(|c| c.coeff(i)).collect())
        .collect();
    let kernel = linalg::nullspace(&matrix, n - 1, field);
    let basis = kernel
        .into_iter()
        .map(|v| Poly::from_coeffs(v, field))
        .collect::<Result<Vec<_>>>()?;
    Ok(WfKernel {
        dimension: basis.len(),
        basis,
        f: f.clone(),
    })
}

/// Canonical form of the span of `polys` inside `P_{deg_bound}`.
pub fn canonical_basis(polys: &[Poly], deg_bound: usize) -> Result<Vec<Poly>> {
    let Some(field) = polys.first().map(|p| p.field()) else {
        return Ok(Vec::new());
    };
    let mut rows: linalg::Matrix = polys
        .iter()
        .map(|p| (0..=deg_bound).map(|i| p.coeff(i)).collect())
        .collect();
    linalg::canonicalize(&mut rows);
    rows.into_iter().map(|v| Poly::from_coeffs(v, field)).collect()
}
