//! From W(f) to an interpolation space: group the roots of `f` by
//! multiplicity, strip the forced factor `f_β·f_γ²`, and read off the
//! conditions at the simple roots.

use crate::error::{Error, Result};
use crate::oracle;
use crate::poly::{FactoredInput, Poly};
use crate::scalar::{ExactScalar, FieldDescriptor};
use crate::zspace::{self, ZProblem, ZReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootGrouping {
    /// Simple roots.
    pub alpha: Vec<ExactScalar>,
    /// Double roots.
    pub beta: Vec<ExactScalar>,
    /// Roots of multiplicity `k_s ≥ 3`.
    pub gamma: Vec<(ExactScalar, usize)>,
    pub n: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub r: i64,
    pub mu: i64,
    pub field: FieldDescriptor,
}

impl RootGrouping {
    pub fn f_alpha(&self) -> Poly {
        product_of_factors(self.alpha.iter().map(|a| (a, 1)), self.field)
    }

    pub fn f_beta(&self) -> Poly {
        product_of_factors(self.beta.iter().map(|b| (b, 1)), self.field)
    }

    /// `∏ (x − γ_s)`.
    pub fn f_gamma(&self) -> Poly {
        product_of_factors(self.gamma.iter().map(|(g, _)| (g, 1)), self.field)
    }

    /// `∏ (x − γ_s)^{k_s}`.
    pub fn f_gamma_full(&self) -> Poly {
        product_of_factors(self.gamma.iter().map(|(g, k)| (g, *k)), self.field)
    }

    /// `f_β·f_γ²`, the factor every element of W(f) carries.
    pub fn forced_factor(&self) -> Poly {
        &self.f_beta() * &self.f_gamma().pow(2)
    }

    pub fn has_multiple_roots(&self) -> bool {
        self.n2 + self.n3 > 0
    }
}

fn product_of_factors<'a>(
    roots: impl Iterator<Item = (&'a ExactScalar, usize)>,
    field: FieldDescriptor,
) -> Poly {
    roots.fold(Poly::one(field), |acc, (r, m)| &acc * &Poly::linear_factor(r).pow(m))
}

pub fn group_roots(fi: &FactoredInput) -> RootGrouping {
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    let mut gamma = Vec::new();
    for (root, m) in fi.roots() {
        match m {
            1 => alpha.push(root.clone()),
            2 => beta.push(root.clone()),
            _ => gamma.push((root.clone(), *m)),
        }
    }
    let n = fi.degree();
    let (n1, n2, n3) = (alpha.len(), beta.len(), gamma.len());
    let r = n as i64 - 2 - (n2 as i64 + 2 * n3 as i64);
    let alt: i64 = n1 as i64 + (n2 as i64 - 2) + gamma.iter().map(|(_, k)| *k as i64 - 2).sum::<i64>();
    debug_assert_eq!(r, alt);
    RootGrouping {
        alpha,
        beta,
        gamma,
        n,
        n1,
        n2,
        n3,
        r,
        mu: r + 1 - n1 as i64,
        field: fi.field(),
    }
}

fn ratio_at(num: &Poly, den: &Poly, x: &ExactScalar) -> Result<ExactScalar> {
    let d = den.eval(x)?;
    if d.is_zero() {
        return Err(Error::PoleAtPoint);
    }
    num.eval(x)?.checked_div(&d)
}

/// `d(x) = f_α″/f_α′ + Σ 3/(x − β_j) + Σ 2(k_s − 1)/(x − γ_s)` at `x0`,
/// cross-checked against `f_α″/f_α′ + 3f_β′/f_β + 2f̃_γ′/f̃_γ − 2f_γ′/f_γ`.
pub fn d_at(fi: &FactoredInput, x0: &ExactScalar) -> Result<ExactScalar> {
    let g = group_roots(fi);
    let x0 = x0.lift(g.field)?;
    let fa = g.f_alpha();
    let fa1 = fa.derivative();
    let alpha_part = ratio_at(&fa1.derivative(), &fa1, &x0)?;

    let mut sum_form = alpha_part.clone();
    for b in &g.beta {
        let t = &x0 - b;
        if t.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        sum_form = &sum_form + &ExactScalar::int_in(3, g.field).checked_div(&t)?;
    }
    for (c, k) in &g.gamma {
        let t = &x0 - c;
        if t.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        let w = ExactScalar::int_in(2 * (*k as i64 - 1), g.field);
        sum_form = &sum_form + &w.checked_div(&t)?;
    }

    let fb = g.f_beta();
    let fg = g.f_gamma();
    let fgt = g.f_gamma_full();
    let three = ExactScalar::int_in(3, g.field);
    let two = ExactScalar::int_in(2, g.field);
    let log_form = &(&(&alpha_part + &(&three * &ratio_at(&fb.derivative(), &fb, &x0)?))
        + &(&two * &ratio_at(&fgt.derivative(), &fgt, &x0)?))
        - &(&two * &ratio_at(&fg.derivative(), &fg, &x0)?);

    if sum_form != log_form {
        return Err(Error::IdentityFailed(format!(
            "two forms of d disagree at {x0}: {sum_form} vs {log_form}"
        )));
    }
    Ok(sum_form)
}

/// `δ_i = d(α_i)` for every simple root.
pub fn delta_vector(fi: &FactoredInput) -> Result<Vec<ExactScalar>> {
    group_roots(fi).alpha.iter().map(|a| d_at(fi, a)).collect()
}

/// `p ↦ p/(f_β f_γ²)`.
pub fn phi(fi: &FactoredInput, p: &Poly) -> Result<Poly> {
    let g = group_roots(fi);
    p.lift(g.field)?.exact_div(&g.forced_factor())
}

/// `q ↦ f_β f_γ² q`, defined on `Z(δ, α; n₁, r)`.
pub fn psi(fi: &FactoredInput, q: &Poly) -> Result<Poly> {
    let g = group_roots(fi);
    let q = q.lift(g.field)?;
    let in_z = if g.n1 == 0 {
        q.degree_at_most(g.r.max(0) as usize)
    } else {
        zspace::membership(&to_z_problem(fi)?, &q)?
    };
    if !in_z {
        return Err(Error::NotInZ);
    }
    q.checked_mul(&g.forced_factor())
}

pub fn to_z_problem(fi: &FactoredInput) -> Result<ZProblem> {
    let g = group_roots(fi);
    if g.n1 == 0 {
        return Err(Error::NoSimpleRoots);
    }
    ZProblem::new(delta_vector(fi)?, g.alpha.clone(), g.r.max(0) as usize)
}

/// For each double root, `(x − β)² | R(f,p) ⇔ (x − β) | p`; for each root of
/// multiplicity `k ≥ 3`, `(x − γ)^k | R(f,p) ⇔ (x − γ)² | p`.
pub fn multiplicity_reduction_check(fi: &FactoredInput, p: &Poly) -> Result<bool> {
    let g = group_roots(fi);
    let p = p.lift(g.field)?;
    let r = oracle::r_of(&fi.expand(), &p)?;
    for b in &g.beta {
        let lin = Poly::linear_factor(b);
        if lin.pow(2).divides(&r)? != lin.divides(&p)? {
            return Ok(false);
        }
    }
    for (c, k) in &g.gamma {
        let lin = Poly::linear_factor(c);
        if lin.pow(*k).divides(&r)? != lin.pow(2).divides(&p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of the interpolation route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralResult {
    pub dimension: usize,
    /// Image under ψ of the canonical Z basis (or of `P_r` when `n₁ = 0`),
    /// re-canonicalized inside `P_{n−2}`.
    pub basis: Vec<Poly>,
    pub z: Option<ZReport>,
}

pub fn structural_route(fi: &FactoredInput) -> Result<StructuralResult> {
    let g = group_roots(fi);
    let forced = g.forced_factor();
    let (z, qs) = if g.n1 == 0 {
        let qs: Vec<Poly> = (0..=g.r.max(0) as usize)
            .map(|j| Poly::monomial(ExactScalar::one_in(g.field), j))
            .collect();
        (None, qs)
    } else {
        let rep = zspace::z_report(&to_z_problem(fi)?);
        let qs = rep.basis.clone();
        (Some(rep), qs)
    };
    let images: Vec<Poly> = qs.iter().map(|q| q * &forced).collect();
    let basis = oracle::canonical_basis(&images, g.n - 2)?;
    Ok(StructuralResult {
        dimension: basis.len(),
        basis,
        z,
    })
}
