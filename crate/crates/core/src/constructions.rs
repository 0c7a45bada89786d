//! Explicit constructions: partial fractions of `1/Q`, the CRT witness that
//! the congruence map onto the local data is surjective, and Hermite
//! interpolation on `Z(η, ω; s, 2s − 1)`.

use crate::bridge::{group_roots, RootGrouping};
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{FactoredInput, Poly};
use crate::scalar::{ExactScalar, FieldDescriptor};
use crate::zspace::{self, ZProblem};

/// `1/Q = Σ A_i/(x−α_i)² + Σ b′_j/(x−β_j) + Σ C_s/(x−γ_s)²` with
/// `Q = f_α²·f_β·f_γ²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDecomposition {
    pub q: Poly,
    pub alpha_terms: Vec<(ExactScalar, Poly)>,
    pub beta_terms: Vec<(ExactScalar, ExactScalar)>,
    pub gamma_terms: Vec<(ExactScalar, Poly)>,
}

impl QDecomposition {
    /// `Σ A_i·Q/(x−α_i)² + Σ b′_j·Q/(x−β_j) + Σ C_s·Q/(x−γ_s)²`, which is 1
    /// exactly when the decomposition is right.
    pub fn recombine(&self) -> Result<Poly> {
        let mut acc = Poly::zero(self.q.field());
        for (root, a) in self.alpha_terms.iter().chain(&self.gamma_terms) {
            let cof = self.q.exact_div(&Poly::linear_factor(root).pow(2))?;
            acc = &acc + &(a * &cof);
        }
        for (root, b) in &self.beta_terms {
            let cof = self.q.exact_div(&Poly::linear_factor(root))?;
            acc = &acc + &cof.scale(b);
        }
        Ok(acc)
    }
}

fn q_of(g: &RootGrouping) -> Poly {
    &g.f_alpha().pow(2) * &g.forced_factor()
}

/// Inverse of `m` modulo `(x − ρ)²`: `1/m(ρ) − m′(ρ)/m(ρ)²·(x − ρ)`.
fn local_inverse_sq(m: &Poly, rho: &ExactScalar) -> Result<Poly> {
    let m0 = m.eval(rho)?;
    let m1 = m.derivative().eval(rho)?;
    let inv = m0.inverse()?;
    let slope = -&(&m1 * &(&inv * &inv));
    let lin = Poly::linear_factor(rho).scale(&slope);
    Ok(&Poly::constant(inv) + &lin)
}

pub fn partial_fractions_q(fi: &FactoredInput) -> Result<QDecomposition> {
    let g = group_roots(fi);
    let q = q_of(&g);
    let sq_term = |root: &ExactScalar| -> Result<(ExactScalar, Poly)> {
        let cof = q.exact_div(&Poly::linear_factor(root).pow(2))?;
        Ok((root.clone(), local_inverse_sq(&cof, root)?))
    };
    let alpha_terms = g.alpha.iter().map(sq_term).collect::<Result<Vec<_>>>()?;
    let gamma_terms = g.gamma.iter().map(|(c, _)| sq_term(c)).collect::<Result<Vec<_>>>()?;
    let beta_terms = g
        .beta
        .iter()
        .map(|b| {
            let cof = q.exact_div(&Poly::linear_factor(b))?;
            Ok((b.clone(), cof.eval(b)?.inverse()?))
        })
        .collect::<Result<Vec<_>>>()?;
    let dec = QDecomposition {
        q,
        alpha_terms,
        beta_terms,
        gamma_terms,
    };
    if dec.recombine()? != Poly::one(g.field) {
        return Err(Error::IdentityFailed("partial fractions of 1/Q do not recombine to 1".into()));
    }
    Ok(dec)
}

/// Local data `a_i` at simple roots, `b_j` at double roots and `c_s` (deg ≤ 1)
/// at roots of multiplicity ≥ 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceTarget {
    pub a: Vec<ExactScalar>,
    pub b: Vec<ExactScalar>,
    pub c: Vec<Poly>,
}

impl CongruenceTarget {
    pub fn zero_for(g: &RootGrouping) -> Self {
        CongruenceTarget {
            a: vec![ExactScalar::zero_in(g.field); g.n1],
            b: vec![ExactScalar::zero_in(g.field); g.n2],
            c: vec![Poly::zero(g.field); g.n3],
        }
    }

    fn check_shape(&self, g: &RootGrouping) -> Result<()> {
        if self.a.len() != g.n1 || self.b.len() != g.n2 || self.c.len() != g.n3 {
            return Err(Error::InvalidInput(format!(
                "target lengths ({}, {}, {}) do not match (n1, n2, N3) = ({}, {}, {})",
                self.a.len(),
                self.b.len(),
                self.c.len(),
                g.n1,
                g.n2,
                g.n3
            )));
        }
        if self.c.iter().any(|c| !c.degree_at_most(1)) {
            return Err(Error::InvalidInput("c targets must have degree at most 1".into()));
        }
        Ok(())
    }
}

/// `d_i = f″(α_i)/f′(α_i)`, so that `(x − α_i) | R(f, p)` iff `d_i p(α_i) = p′(α_i)`.
pub fn simple_root_ratios(fi: &FactoredInput) -> Result<Vec<ExactScalar>> {
    let f = fi.expand();
    let f1 = f.derivative();
    let f2 = f1.derivative();
    group_roots(fi)
        .alpha
        .iter()
        .map(|a| f2.eval(a)?.checked_div(&f1.eval(a)?))
        .collect()
}

/// The degree bound `K = 2n₁ + n₂ + 2N₃ − 1` of the construction.
pub fn crt_degree_bound(g: &RootGrouping) -> i64 {
    2 * g.n1 as i64 + g.n2 as i64 + 2 * g.n3 as i64 - 1
}

/// Whether `p` meets every local condition of `t`.
pub fn satisfies_congruences(fi: &FactoredInput, t: &CongruenceTarget, p: &Poly) -> Result<bool> {
    let g = group_roots(fi);
    let p = p.lift(g.field)?;
    let d = simple_root_ratios(fi)?;
    let dp = p.derivative();
    for ((alpha, di), ai) in g.alpha.iter().zip(&d).zip(&t.a) {
        if &(&(di * &p.eval(alpha)?) - &dp.eval(alpha)?) != ai {
            return Ok(false);
        }
    }
    for (beta, bj) in g.beta.iter().zip(&t.b) {
        if &p.eval(beta)? != bj {
            return Ok(false);
        }
    }
    for ((gamma, _), cs) in g.gamma.iter().zip(&t.c) {
        let m = Poly::linear_factor(gamma).pow(2);
        if p.rem(&m)? != cs.lift(g.field)?.rem(&m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Build `p` with `d_i p(α_i) − p′(α_i) = a_i`, `p(β_j) = b_j` and
/// `p ≡ c_s mod (x − γ_s)²` from the partial fractions of `1/Q`.
pub fn crt_construct(fi: &FactoredInput, t: &CongruenceTarget) -> Result<Poly> {
    let g = group_roots(fi);
    t.check_shape(&g)?;
    if g.r < 2 * g.n1 as i64 - 1 {
        return Err(Error::HypothesisViolated(format!(
            "construction needs r ≥ 2n₁ − 1, got r = {}, n₁ = {}",
            g.r, g.n1
        )));
    }
    let field = g.field;
    let dec = partial_fractions_q(fi)?;
    let d = simple_root_ratios(fi)?;
    let two = ExactScalar::int_in(2, field);
    let mut p = Poly::zero(field);

    for (((alpha, a_poly), di), ai) in dec.alpha_terms.iter().zip(&d).zip(&t.a) {
        let ai = ai.lift(field)?;
        let h = if di.is_zero() {
            Poly::monomial(-&ai, 1)
        } else {
            let tilde = &(&two * &ai).checked_div(di)? - &(alpha * &ai);
            let h = Poly::from_coeffs(vec![tilde, ai.clone()], field)?;
            // g_i = d_i x − (1 + d_i α_i) has g_i′ = d_i, g_i(α_i) = −1, and
            // (g_i h_i)′ at α_i is exactly a_i.
            let gi = Poly::from_coeffs(
                vec![-&(&ExactScalar::one_in(field) + &(di * alpha)), di.clone()],
                field,
            )?;
            if (&gi * &h).derivative().eval(alpha)? != ai {
                return Err(Error::IdentityFailed("(g_i h_i)′(α_i) ≠ a_i".into()));
            }
            h
        };
        let sq = Poly::linear_factor(alpha).pow(2);
        let local = (a_poly * &h).rem(&sq)?;
        p = &p + &(&local * &dec.q.exact_div(&sq)?);
    }
    for ((beta, bprime), bj) in dec.beta_terms.iter().zip(&t.b) {
        let cof = dec.q.exact_div(&Poly::linear_factor(beta))?;
        p = &p + &cof.scale(&(bprime * &bj.lift(field)?));
    }
    for ((gamma, c_poly), cs) in dec.gamma_terms.iter().zip(&t.c) {
        let sq = Poly::linear_factor(gamma).pow(2);
        let local = (c_poly * &cs.lift(field)?).rem(&sq)?;
        p = &p + &(&local * &dec.q.exact_div(&sq)?);
    }

    let bound = crt_degree_bound(&g);
    if !p.degree().is_none_or(|deg| (deg as i64) <= bound) {
        return Err(Error::IdentityFailed(format!("construction has degree above {bound}")));
    }
    if !satisfies_congruences(fi, t, &p)? {
        return Err(Error::IdentityFailed("constructed polynomial misses a congruence".into()));
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteData {
    pub eta: Vec<ExactScalar>,
    pub omega: Vec<ExactScalar>,
    pub y: Vec<ExactScalar>,
}

fn lagrange(omega: &[ExactScalar], i: usize, field: FieldDescriptor) -> Result<Poly> {
    let mut l = Poly::one(field);
    for (j, wj) in omega.iter().enumerate() {
        if j == i {
            continue;
        }
        let den = omega[i].checked_sub(wj)?;
        if den.is_zero() {
            return Err(Error::CoincidentPoints);
        }
        l = (&l * &Poly::linear_factor(wj)).scale(&den.inverse()?);
    }
    Ok(l)
}

/// Rows `p(ω_i)` and `p′(ω_i)` on the monomials `1, …, x^{2s−1}`.
pub fn confluent_matrix(omega: &[ExactScalar], field: FieldDescriptor) -> linalg::Matrix {
    let n = 2 * omega.len();
    let mut rows = Vec::with_capacity(n);
    for w in omega {
        let vals: Vec<ExactScalar> = (0..n).map(|j| w.pow(j as u32)).collect();
        let ders: Vec<ExactScalar> = (0..n)
            .map(|j| {
                if j == 0 {
                    ExactScalar::zero_in(field)
                } else {
                    &ExactScalar::int_in(j as i64, field) * &w.pow(j as u32 - 1)
                }
            })
            .collect();
        rows.push(vals);
        rows.push(ders);
    }
    rows
}

/// The unique `p` with `deg p ≤ 2s − 1`, `p(ω_i) = y_i`, `p′(ω_i) = η_i y_i`.
pub fn hermite_basis(h: &HermiteData) -> Result<Poly> {
    let s = h.omega.len();
    if h.eta.len() != s || h.y.len() != s || s == 0 {
        return Err(Error::InvalidInput("eta, omega and y must have one common positive length".into()));
    }
    let z = ZProblem::new(h.eta.clone(), h.omega.clone(), 2 * s - 1)?;
    let field = z.field();
    let omega = z.omega();
    let y = h
        .y
        .iter()
        .map(|v| v.lift(field))
        .collect::<Result<Vec<_>>>()?;
    if linalg::determinant(&confluent_matrix(omega, field))?.is_zero() {
        return Err(Error::IdentityFailed("confluent interpolation system is singular".into()));
    }
    let two = ExactScalar::int_in(2, field);
    let mut p = Poly::zero(field);
    for i in 0..s {
        let l = lagrange(omega, i, field)?;
        let l2 = &l * &l;
        let lin = Poly::linear_factor(&omega[i]);
        let slope = &two * &l.derivative().eval(&omega[i])?;
        let hi = &(&Poly::one(field) - &lin.scale(&slope)) * &l2;
        let ki = &lin * &l2;
        p = &p + &hi.scale(&y[i]);
        p = &p + &ki.scale(&(&z.eta()[i] * &y[i]));
    }
    Ok(p)
}

/// `dim ker(ev_s) = k − 2s + 1` on `Z(η, ω; s, k)`, `k ≥ 2s − 1`: the kernel is
/// `Ω·P_{k−2s}` with `Ω = ∏(x − ω_i)²`.
pub fn ev_kernel_dim(z: &ZProblem) -> Result<usize> {
    let s = z.s();
    if z.k() + 1 < 2 * s {
        return Err(Error::HypothesisViolated(format!(
            "needs k ≥ 2s − 1, got s = {s}, k = {}",
            z.k()
        )));
    }
    let dim = z.k() + 1 - 2 * s;
    let report = zspace::z_report(z);
    if report.dimension != dim + s {
        return Err(Error::IdentityFailed(format!(
            "dim Z = {} but kernel of evaluation has dimension {dim} with s = {s}",
            report.dimension
        )));
    }
    Ok(dim)
}
