//! Closed-form dimension of W(f) by case, cross-checked against the exact
//! routes, plus the symmetric-function identities behind the `n₁ = r = 4`
//! analysis.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::approx::{approx_roots, ApproxScalar};
use crate::bridge::{self, group_roots, RootGrouping};
use crate::error::{Error, Result};
use crate::linalg;
use crate::oracle;
use crate::poly::{FactoredInput, Poly};
use crate::scalar::{ExactScalar, FieldDescriptor};
use crate::zspace::{self, ApproxZReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// No simple roots: `dim = r + 1`.
    N1Zero,
    /// `1 ≤ n₁ ≤ 3`: `dim = μ`.
    SmallN1,
    /// `r ≥ 2n₁ − 2`: `dim = μ`.
    WideR,
    /// `n₁ = r = 4`.
    Exceptional44,
    /// No closed form applies; the exact routes decide.
    BruteForce,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::N1Zero => "N1Zero",
            CaseTag::SmallN1 => "SmallN1",
            CaseTag::WideR => "WideR",
            CaseTag::Exceptional44 => "Exceptional44",
            CaseTag::BruteForce => "BruteForce",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WfReport {
    pub grouping: RootGrouping,
    pub dim_oracle: usize,
    pub dim_structural: usize,
    pub dim_theorem: Option<usize>,
    pub degenerate: bool,
    pub basis: Vec<Poly>,
    pub case_tag: CaseTag,
}

impl WfReport {
    pub fn dimension(&self) -> usize {
        self.dim_oracle
    }
}

/// The closed form for a grouping, if one applies.
pub fn theorem_case(g: &RootGrouping) -> (CaseTag, Option<usize>) {
    let n1 = g.n1 as i64;
    if g.n1 == 0 {
        return (CaseTag::N1Zero, Some((g.r + 1) as usize));
    }
    if g.n1 <= 3 {
        return (CaseTag::SmallN1, Some(g.mu.max(0) as usize));
    }
    if g.r >= 2 * n1 - 2 {
        return (CaseTag::WideR, Some(g.mu as usize));
    }
    if g.n1 == 4 && g.r == 4 {
        // With one multiple root the shape is x⁴ and dim = 1. With two the
        // printed value 2 does not survive exact computation; leave it open.
        let dim = (g.n2 + g.n3 == 1).then_some(1);
        return (CaseTag::Exceptional44, dim);
    }
    (CaseTag::BruteForce, None)
}

pub fn classify(fi: &FactoredInput) -> Result<WfReport> {
    let g = group_roots(fi);
    let f = fi.expand();
    let oracle = oracle::wf_kernel(&f)?;
    let structural = bridge::structural_route(fi)?;
    if oracle.basis != structural.basis {
        return Err(Error::RouteDisagreement(format!(
            "oracle dim {} vs structural dim {} for {f}",
            oracle.dimension, structural.dimension
        )));
    }
    let (case_tag, dim_theorem) = theorem_case(&g);
    if let Some(d) = dim_theorem {
        if d != oracle.dimension {
            return Err(Error::RouteDisagreement(format!(
                "closed form {case_tag} gives {d}, exact routes give {} for {f}",
                oracle.dimension
            )));
        }
    }
    if case_tag == CaseTag::Exceptional44 {
        let (normalized, _) = normalize_multiple_part(fi)?;
        let d = oracle::wf_kernel(&normalized.expand())?.dimension;
        if d != oracle.dimension {
            return Err(Error::IdentityFailed(format!(
                "affine normalization changed the dimension from {} to {d}",
                oracle.dimension
            )));
        }
    }
    let dim = oracle.dimension as i64;
    if g.n1 >= 1 && g.r >= g.n1 as i64 - 1 && !(g.mu <= dim && dim <= g.r) {
        return Err(Error::IdentityFailed(format!(
            "dim {dim} outside [μ, r] = [{}, {}]",
            g.mu, g.r
        )));
    }
    Ok(WfReport {
        degenerate: structural.z.as_ref().is_some_and(|z| z.degenerate),
        dim_oracle: oracle.dimension,
        dim_structural: structural.dimension,
        dim_theorem,
        basis: oracle.basis,
        case_tag,
        grouping: g,
    })
}

/// The multiple-root part of an `n₁ = r` input, up to affine change.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultipleShape {
    /// `x⁴`
    Quartic,
    /// `(x² − 1)²`
    DoubleDouble,
    /// `x²(x − 1)³`
    DoubleTriple,
    /// `(x² − 1)³`
    TripleTriple,
}

pub fn multiple_shape(g: &RootGrouping) -> Option<MultipleShape> {
    match (g.n2, g.gamma.iter().map(|(_, k)| *k).collect::<Vec<_>>().as_slice()) {
        (0, [4]) => Some(MultipleShape::Quartic),
        (2, []) => Some(MultipleShape::DoubleDouble),
        (1, [3]) => Some(MultipleShape::DoubleTriple),
        (0, [3, 3]) => Some(MultipleShape::TripleTriple),
        _ => None,
    }
}

/// Move the multiple roots of `fi` onto `{0}`, `{−1, 1}` or `{0, 1}` by an
/// affine substitution `x ↦ ax + b`.
pub fn normalize_multiple_part(fi: &FactoredInput) -> Result<(FactoredInput, MultipleShape)> {
    let g = group_roots(fi);
    let shape = multiple_shape(&g).ok_or_else(|| {
        Error::HypothesisViolated("multiple-root part is not one of the four n₁ = r shapes".into())
    })?;
    let half = ExactScalar::frac_in(1, 2, g.field);
    let (a, b) = match shape {
        MultipleShape::Quartic => (ExactScalar::one_in(g.field), g.gamma[0].0.clone()),
        MultipleShape::DoubleDouble | MultipleShape::TripleTriple => {
            let (r1, r2) = if shape == MultipleShape::DoubleDouble {
                (&g.beta[0], &g.beta[1])
            } else {
                (&g.gamma[0].0, &g.gamma[1].0)
            };
            (&(r2 - r1) * &half, &(r1 + r2) * &half)
        }
        MultipleShape::DoubleTriple => (&g.gamma[0].0 - &g.beta[0], g.beta[0].clone()),
    };
    Ok((fi.affine_pullback(&a, &b)?, shape))
}

/// Numerator and denominator of `d̃ = Σ 3/(x − β_j) + Σ 2(k_s − 1)/(x − γ_s)`
/// over the common denominator `f_β·f_γ`.
pub fn dtilde(fi: &FactoredInput) -> (Poly, Poly) {
    let g = group_roots(fi);
    let den = &g.f_beta() * &g.f_gamma();
    let mut num = Poly::zero(g.field);
    let weighted = g
        .beta
        .iter()
        .map(|b| (b, 3i64))
        .chain(g.gamma.iter().map(|(c, k)| (c, 2 * (*k as i64 - 1))));
    for (root, w) in weighted {
        let cof = den.exact_div(&Poly::linear_factor(root)).expect("root of the denominator");
        num = &num + &cof.scale(&ExactScalar::int_in(w, g.field));
    }
    (num, den)
}

fn dtilde_at(num: &Poly, den: &Poly, t: &ExactScalar) -> Result<ExactScalar> {
    let d = den.eval(t)?;
    if d.is_zero() {
        return Err(Error::PoleAtPoint);
    }
    num.eval(t)?.checked_div(&d)
}

/// `D(T₁, T₂) = (d̃(T₁) − d̃(T₂))/(T₁ − T₂) − d̃(T₁)d̃(T₂)`.
pub fn d_pair_form(fi: &FactoredInput, t1: &ExactScalar, t2: &ExactScalar) -> Result<ExactScalar> {
    let field = fi.field();
    let (t1, t2) = (t1.lift(field)?, t2.lift(field)?);
    if t1 == t2 {
        return Err(Error::CoincidentPoints);
    }
    let (num, den) = dtilde(fi);
    let d1 = dtilde_at(&num, &den, &t1)?;
    let d2 = dtilde_at(&num, &den, &t2)?;
    Ok(&(&d1 - &d2).checked_div(&(&t1 - &t2))? - &(&d1 * &d2))
}

/// `(a, b, c, d)` with `d̃ = (ax + b)/(x² + cx + d)`, for inputs with exactly
/// two distinct multiple roots.
pub fn dtilde_quadratic_coeffs(fi: &FactoredInput) -> Result<[ExactScalar; 4]> {
    let (num, den) = dtilde(fi);
    if den.degree() != Some(2) {
        return Err(Error::HypothesisViolated("needs exactly two distinct multiple roots".into()));
    }
    Ok([num.coeff(1), num.coeff(0), den.coeff(1), den.coeff(0)])
}

/// `D̃ = x₁₁T₁T₂ + x₁₀(T₁ + T₂) + x₀₀` with `x₁₁ = −a(a+1)`, `x₁₀ = −b(a+1)`,
/// `x₀₀ = ad − b² − bc`; equals `D·(T₁² + cT₁ + d)(T₂² + cT₂ + d)`.
pub fn dtilde_numerator(coeffs: &[ExactScalar; 4], t1: &ExactScalar, t2: &ExactScalar) -> ExactScalar {
    let [a, b, c, d] = coeffs;
    let one = ExactScalar::one_in(a.field());
    let a1 = a + &one;
    let x11 = -&(a * &a1);
    let x10 = -&(b * &a1);
    let x00 = &(&(a * d) - &(b * b)) - &(b * c);
    &(&(&x11 * &(t1 * t2)) + &(&x10 * &(t1 + t2))) + &x00
}

/// Leading coefficient `a = 3n₂ + 2Σ(k_s − 1)` of the numerator of `d̃`.
pub fn leading_coeff_dtilde(fi: &FactoredInput) -> Result<ExactScalar> {
    let g = group_roots(fi);
    if g.n2 + g.n3 == 0 {
        return Err(Error::HypothesisViolated("no multiple roots".into()));
    }
    let (num, _) = dtilde(fi);
    let lead = num.leading().cloned().unwrap_or_else(|| ExactScalar::zero_in(g.field));
    let expected = 3 * g.n2 as i64 + g.gamma.iter().map(|(_, k)| 2 * (*k as i64 - 1)).sum::<i64>();
    if lead != ExactScalar::int_in(expected, g.field) {
        return Err(Error::IdentityFailed(format!("leading coefficient {lead}, expected {expected}")));
    }
    if expected < 3 * g.n2 as i64 + 4 * g.n3 as i64 {
        return Err(Error::IdentityFailed("leading coefficient below 3n₂ + 4N₃".into()));
    }
    Ok(lead)
}

/// An identity evaluated at a tuple: `lhs` against `rhs`, with `ratio = lhs/rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricCheck {
    pub alphas: Vec<ExactScalar>,
    pub lhs: ExactScalar,
    pub rhs: ExactScalar,
    pub ratio: Option<ExactScalar>,
}

impl SymmetricCheck {
    fn new(alphas: &[ExactScalar], lhs: ExactScalar, rhs: ExactScalar) -> Self {
        let ratio = lhs.checked_div(&rhs).ok();
        SymmetricCheck {
            alphas: alphas.to_vec(),
            lhs,
            rhs,
            ratio,
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn common_field(xs: &[ExactScalar]) -> Result<(FieldDescriptor, Vec<ExactScalar>)> {
    let mut field = FieldDescriptor::Rational;
    for x in xs {
        field = field.join(x.field())?;
    }
    let lifted = xs.iter().map(|x| x.lift(field)).collect::<Result<Vec<_>>>()?;
    for i in 0..lifted.len() {
        for j in i + 1..lifted.len() {
            if lifted[i] == lifted[j] {
                return Err(Error::CoincidentPoints);
            }
        }
    }
    Ok((field, lifted))
}

/// `∏_{i<j} (α_i − α_j)²`.
pub fn discriminant_product(alphas: &[ExactScalar]) -> Result<ExactScalar> {
    let (field, a) = common_field(alphas)?;
    let mut acc = ExactScalar::one_in(field);
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let t = &a[i] - &a[j];
            acc = &acc * &(&t * &t);
        }
    }
    Ok(acc)
}

/// The linear systems of the nonvanishing argument: for three nodes the rows
/// `(1, α_i + α_j, α_iα_j)`, for four nodes the six-column symmetric version.
pub fn pair_matrix(alphas: &[ExactScalar]) -> Result<linalg::Matrix> {
    let (_, a) = common_field(alphas)?;
    let mut rows = Vec::new();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let (x, y) = (&a[i], &a[j]);
            let mut row = vec![ExactScalar::one_in(x.field()), x + y, x * y];
            if a.len() == 4 {
                row.push(&(x * x) + &(y * y));
                row.push(&(&(x * x) * y) + &(x * &(y * y)));
                row.push(&(x * x) * &(y * y));
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Three nodes: `det = (α₃ − α₁)(α₃ − α₂)(α₂ − α₁)`.
/// Four nodes: `det = −∏_{i<j}(α_i − α_j)²`.
pub fn verify_det_identities(alphas: &[ExactScalar]) -> Result<SymmetricCheck> {
    let (_, a) = common_field(alphas)?;
    let det = linalg::determinant(&pair_matrix(&a)?)?;
    let rhs = match a.len() {
        3 => &(&(&a[2] - &a[0]) * &(&a[2] - &a[1])) * &(&a[1] - &a[0]),
        4 => -&discriminant_product(&a)?,
        n => return Err(Error::InvalidInput(format!("expected 3 or 4 nodes, got {n}"))),
    };
    Ok(SymmetricCheck::new(&a, det, rhs))
}

/// `h = 27e₃² − 18e₁e₂e₃ + 4(e₂³ + e₁³e₃) − e₁²e₂²` against `∏(α_i − α_j)²`.
pub fn h_identity_check(alphas: &[ExactScalar]) -> Result<SymmetricCheck> {
    let (_, a) = common_field(alphas)?;
    if a.len() != 3 {
        return Err(Error::InvalidInput(format!("expected 3 nodes, got {}", a.len())));
    }
    let e1 = &(&a[0] + &a[1]) + &a[2];
    let e2 = &(&(&a[0] * &a[1]) + &(&a[0] * &a[2])) + &(&a[1] * &a[2]);
    let e3 = &(&a[0] * &a[1]) * &a[2];
    let field = e1.field();
    let c = |n: i64| ExactScalar::int_in(n, field);
    let h = &(&(&(&c(27) * &(&e3 * &e3)) - &(&c(18) * &(&(&e1 * &e2) * &e3)))
        + &(&c(4) * &(&e2.pow(3) + &(&e1.pow(3) * &e3))))
        - &(&(&e1 * &e1) * &(&e2 * &e2));
    if h.is_zero() {
        return Err(Error::IdentityFailed("h vanishes at distinct nodes".into()));
    }
    Ok(SymmetricCheck::new(&a, h, discriminant_product(&a)?))
}

/// `det Ã = (α₁ − α₂)·D(α₁, α₂)` where `Ã` has rows `(δ_i, α_iδ_i − 1)` and
/// `δ_1 = d̃(α₁) + 2/(α₁ − α₂)`, `δ_2 = d̃(α₂) + 2/(α₂ − α₁)`.
pub fn det_tilde_check(fi: &FactoredInput, a1: &ExactScalar, a2: &ExactScalar) -> Result<SymmetricCheck> {
    let field = fi.field();
    let (a1, a2) = (a1.lift(field)?, a2.lift(field)?);
    if a1 == a2 {
        return Err(Error::CoincidentPoints);
    }
    let (num, den) = dtilde(fi);
    let two = ExactScalar::int_in(2, field);
    let one = ExactScalar::one_in(field);
    let d1 = &dtilde_at(&num, &den, &a1)? + &two.checked_div(&(&a1 - &a2))?;
    let d2 = &dtilde_at(&num, &den, &a2)? + &two.checked_div(&(&a2 - &a1))?;
    let m = vec![
        vec![d1.clone(), &(&a1 * &d1) - &one],
        vec![d2.clone(), &(&a2 * &d2) - &one],
    ];
    let det = linalg::determinant(&m)?;
    let rhs = &(&a1 - &a2) * &d_pair_form(fi, &a1, &a2)?;
    Ok(SymmetricCheck::new(&[a1, a2], det, rhs))
}

/// A cubic `g_α` with `F·g_α″ + N·g_α′ = λ·g_α`, where `d̃ = N/F` comes from a
/// fixed multiple-root part. Its roots make `d_g` vanish at every simple root,
/// so `W(g)` contains the multiple-root factor itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalFamily {
    pub name: &'static str,
    /// Multiple roots with multiplicities.
    pub multiple_part: Vec<(i64, usize)>,
    /// Monic cubic with rational coefficients, ascending.
    pub cubic: Vec<BigRational>,
    pub lambda: i64,
    /// Exact roots in `ℚ(√d)` when the cubic splits there.
    pub exact_roots: Option<Vec<ExactScalar>>,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl ExceptionalFamily {
    pub fn cubic_poly(&self) -> Poly {
        Poly::from_coeffs(
            self.cubic.iter().cloned().map(ExactScalar::rational).collect(),
            FieldDescriptor::Rational,
        )
        .expect("rational coefficients")
    }

    fn multiple_input(&self) -> Vec<(ExactScalar, usize)> {
        self.multiple_part
            .iter()
            .map(|&(r, m)| (ExactScalar::int(r), m))
            .collect()
    }

    /// `F·g″ + N·g′ − λ·g`, zero for a genuine family.
    pub fn ode_residual(&self) -> Poly {
        let fi = FactoredInput::new(
            self.multiple_input()
                .into_iter()
                .chain([(ExactScalar::int(100), 1), (ExactScalar::int(101), 1)])
                .collect(),
            ExactScalar::int(1),
        )
        .expect("valid");
        let (num, den) = dtilde(&fi);
        let g = self.cubic_poly();
        let g1 = g.derivative();
        &(&(&den * &g1.derivative()) + &(&num * &g1)) - &g.scale(&ExactScalar::int(self.lambda))
    }

    /// Discriminant of the cubic, `∏(α_i − α_j)²`, from its coefficients.
    pub fn discriminant(&self) -> BigRational {
        let [d, c, b, a] = [&self.cubic[0], &self.cubic[1], &self.cubic[2], &self.cubic[3]];
        let n = |k: i64| BigRational::from_integer(BigInt::from(k));
        b * b * c * c - n(4) * a * c * c * c - n(4) * b * b * b * d - n(27) * a * a * d * d
            + n(18) * a * b * c * d
    }

    /// `f = (multiple part)·g_α·∏(x − extra)`, exact families only.
    pub fn input(&self, extra: &[ExactScalar]) -> Result<FactoredInput> {
        let roots = self
            .exact_roots
            .as_ref()
            .ok_or_else(|| Error::HypothesisViolated(format!("{} has no exact roots", self.name)))?;
        let mut all = self.multiple_input();
        all.extend(roots.iter().map(|r| (r.clone(), 1)));
        all.extend(extra.iter().map(|r| (r.clone(), 1)));
        FactoredInput::new(all, ExactScalar::int(1))
    }

    /// Roots of the cubic on the approximate backend.
    pub fn approx_alpha(&self, prec: u32) -> Result<Vec<ApproxScalar>> {
        let coeffs: Vec<ApproxScalar> = self
            .cubic
            .iter()
            .map(|c| ApproxScalar::from_rational(c, prec))
            .collect();
        approx_roots(&coeffs, prec)
            .ok_or_else(|| Error::IdentityFailed(format!("root iteration for {} did not settle", self.name)))
    }

    /// `Z(δ, α; n₁, r)` for `f = (multiple part)·g_α·∏(x − extra)` on the
    /// approximate backend, with `δ_i = Σ_{j≠i} 2/(α_i − α_j) + d̃(α_i)`.
    pub fn approx_z_report(&self, extra: &[BigRational], prec: u32) -> Result<ApproxZReport> {
        let mut alpha = self.approx_alpha(prec)?;
        alpha.extend(extra.iter().map(|e| ApproxScalar::from_rational(e, prec)));
        let mut eta = Vec::with_capacity(alpha.len());
        for (i, ai) in alpha.iter().enumerate() {
            let mut acc = ApproxScalar::zero(prec);
            for (j, aj) in alpha.iter().enumerate() {
                if j != i {
                    acc = acc.add(&ApproxScalar::from_i64(2, prec).div(&ai.sub(aj)));
                }
            }
            for &(root, m) in &self.multiple_part {
                let w = if m == 2 { 3 } else { 2 * (m as i64 - 1) };
                let diff = ai.sub(&ApproxScalar::from_i64(root, prec));
                acc = acc.add(&ApproxScalar::from_i64(w, prec).div(&diff));
            }
            eta.push(acc);
        }
        let n: usize = self.multiple_part.iter().map(|(_, m)| m).sum::<usize>() + alpha.len();
        let n2 = self.multiple_part.iter().filter(|(_, m)| *m == 2).count();
        let n3 = self.multiple_part.iter().filter(|(_, m)| *m >= 3).count();
        let r = n - 2 - (n2 + 2 * n3);
        Ok(zspace::z_report_approx(&eta, &alpha, r))
    }
}

/// The three cubic families with `d_g(α_i) = 0`: over `ℚ(√3)`, over `ℚ(√33)`,
/// and one whose roots lie outside every quadratic field.
pub fn exceptional_cubics() -> Vec<ExceptionalFamily> {
    let s3 = ExactScalar::quad((0, 1), (1, 3), 3).expect("valid");
    let s33 = ExactScalar::quad((0, 1), (1, 11), 33).expect("valid");
    vec![
        ExceptionalFamily {
            name: "(x^2-1)^2 * (x^3 - x/3)",
            multiple_part: vec![(1, 2), (-1, 2)],
            cubic: vec![rat(0, 1), rat(-1, 3), rat(0, 1), rat(1, 1)],
            lambda: 24,
            exact_roots: Some(vec![ExactScalar::int_in(0, s3.field()), s3.clone(), -&s3]),
        },
        ExceptionalFamily {
            name: "(x^2-1)^3 * (x^3 - 3x/11)",
            multiple_part: vec![(1, 3), (-1, 3)],
            cubic: vec![rat(0, 1), rat(-3, 11), rat(0, 1), rat(1, 1)],
            lambda: 30,
            exact_roots: Some(vec![ExactScalar::int_in(0, s33.field()), s33.clone(), -&s33]),
        },
        ExceptionalFamily {
            name: "x^2 (x-1)^3 * (x^3 - 15x^2/11 + 6x/11 - 2/33)",
            multiple_part: vec![(0, 2), (1, 3)],
            cubic: vec![rat(-2, 33), rat(6, 11), rat(-15, 11), rat(1, 1)],
            lambda: 27,
            exact_roots: None,
        },
    ]
}

/// The `(x² − 1)³` cubic with the opposite sign of `e₂`, `x³ + 3x/11`, whose
/// roots `0, ±√−33/11` are imaginary. It does not satisfy the family equation.
pub fn imaginary_triple_variant() -> ExceptionalFamily {
    let s = ExactScalar::quad((0, 1), (1, 11), -33).expect("valid");
    ExceptionalFamily {
        name: "(x^2-1)^3 * (x^3 + 3x/11)",
        multiple_part: vec![(1, 3), (-1, 3)],
        cubic: vec![rat(0, 1), rat(3, 11), rat(0, 1), rat(1, 1)],
        lambda: 30,
        exact_roots: Some(vec![ExactScalar::int_in(0, s.field()), s.clone(), -&s]),
    }
}

/// Whether some quadratic `q` has `q² | f`: a root of multiplicity ≥ 4, or at
/// least two distinct multiple roots.
pub fn has_square_of_quadratic(g: &RootGrouping) -> bool {
    g.gamma.iter().any(|(_, k)| *k >= 4) || g.n2 + g.n3 >= 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> ExactScalar {
        ExactScalar::int(n)
    }

    #[test]
    fn quintic_tags() {
        let r = classify(&FactoredInput::from_int_roots(&[(0, 5)]).unwrap()).unwrap();
        assert_eq!((r.case_tag, r.dim_theorem, r.dim_oracle), (CaseTag::N1Zero, Some(2), 2));
        let r = classify(&FactoredInput::from_int_roots(&[(0, 4), (1, 1)]).unwrap()).unwrap();
        assert_eq!((r.case_tag, r.dim_oracle), (CaseTag::SmallN1, 1));
    }

    #[test]
    fn quartic_power_with_four_simple_roots() {
        let fi = FactoredInput::from_int_roots(&[(0, 4), (1, 1), (2, 1), (3, 1), (4, 1)]).unwrap();
        let r = classify(&fi).unwrap();
        assert_eq!((r.grouping.n1, r.grouping.r), (4, 4));
        assert_eq!((r.case_tag, r.dim_theorem, r.dim_oracle), (CaseTag::Exceptional44, Some(1), 1));
    }

    #[test]
    fn leading_coefficients() {
        let a = |roots: &[(i64, usize)]| leading_coeff_dtilde(&FactoredInput::from_int_roots(roots).unwrap()).unwrap();
        assert_eq!(a(&[(1, 2), (-1, 2)]), int(6));
        assert_eq!(a(&[(0, 2), (1, 3)]), int(7));
        assert_eq!(a(&[(1, 3), (-1, 3)]), int(8));
    }

    #[test]
    fn dtilde_matrices() {
        let c = |roots: &[(i64, usize)]| dtilde_quadratic_coeffs(&FactoredInput::from_int_roots(roots).unwrap()).unwrap();
        assert_eq!(c(&[(1, 2), (-1, 2)]), [int(6), int(0), int(0), int(-1)]);
        assert_eq!(c(&[(0, 2), (1, 3)]), [int(7), int(-3), int(-1), int(0)]);
        assert_eq!(c(&[(1, 3), (-1, 3)]), [int(8), int(0), int(0), int(-1)]);
    }

    #[test]
    fn d_pair_at_zero_two() {
        // d̃ = 6x/(x²−1): d̃(0) = 0, d̃(2) = 4, D(0, 2) = (0 − 4)/(0 − 2) − 0 = 2
        let fi = FactoredInput::from_int_roots(&[(1, 2), (-1, 2)]).unwrap();
        assert_eq!(d_pair_form(&fi, &int(0), &int(2)).unwrap(), int(2));
        assert_eq!(d_pair_form(&fi, &int(1), &int(2)), Err(Error::PoleAtPoint));
        assert_eq!(d_pair_form(&fi, &int(2), &int(2)), Err(Error::CoincidentPoints));
    }

    #[test]
    fn determinant_calibration() {
        let c = verify_det_identities(&[int(0), int(1), int(-1), int(2)]).unwrap();
        assert!(c.holds());
        let c = verify_det_identities(&[int(0), int(1), int(2)]).unwrap();
        assert_eq!(c.lhs, int(2));
        assert!(c.holds());
    }

    #[test]
    fn h_calibration() {
        let c = h_identity_check(&[int(0), int(1), int(-1)]).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (int(-4), int(4)));
        assert_eq!(c.ratio, Some(int(-1)));
        let c = h_identity_check(&[int(0), int(1), int(2)]).unwrap();
        assert_eq!(c.ratio, Some(int(-1)));
    }

    #[test]
    fn families_solve_their_equation() {
        for fam in exceptional_cubics() {
            assert!(fam.ode_residual().is_zero(), "{}", fam.name);
        }
        assert!(!imaginary_triple_variant().ode_residual().is_zero());
        let fams = exceptional_cubics();
        assert_eq!(fams[2].discriminant(), rat(24, 14641));
    }

    #[test]
    fn first_family_has_constant_element() {
        let fam = &exceptional_cubics()[0];
        let r = classify(&fam.input(&[]).unwrap()).unwrap();
        assert_eq!(r.dim_oracle, 1);
        let forced = r.grouping.forced_factor();
        assert_eq!(r.basis[0], forced.normalized_low());
    }
}
