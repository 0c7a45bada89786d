//! Seeded property suites, one per module. Each suite counts passing and
//! failing checks and keeps a short description of every failure.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rayon::prelude::*;

use crate::approx::{embed_to_approx, ApproxScalar, BigFloat};
use crate::bridge::{self, group_roots};
use crate::classifier::{self, classify, has_square_of_quadratic};
use crate::constructions::{self, CongruenceTarget, HermiteData};
use crate::corpus::{self, distinct_rationals, random_rational, random_z_problem, rng_for};
use crate::error::{Error, Result};
use crate::oracle;
use crate::poly::{FactoredInput, Poly};
use crate::scalar::{ExactScalar, FieldDescriptor};
use crate::zspace;

pub const SUITES: [&str; 7] = [
    "scalar",
    "poly",
    "oracle",
    "zspace",
    "bridge",
    "constructions",
    "classifier",
];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Number of random inputs for corpus-wide checks.
    pub corpus_size: usize,
    pub max_degree: usize,
    pub precision_bits: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            corpus_size: 100,
            max_degree: 12,
            precision_bits: 128,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &str) -> Self {
        SuiteResult {
            name: name.to_string(),
            ..Default::default()
        }
    }

    fn record(&mut self, label: impl Into<String>, outcome: Result<bool>) {
        match outcome {
            Ok(true) => self.passed += 1,
            Ok(false) => {
                self.failed += 1;
                self.failures.push(label.into());
            }
            Err(e) => {
                self.failed += 1;
                self.failures.push(format!("{}: {e}", label.into()));
            }
        }
    }

    fn absorb(&mut self, label: &str, outcomes: Vec<Result<bool>>) {
        for (i, o) in outcomes.into_iter().enumerate() {
            self.record(format!("{label} #{i}"), o);
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<SuiteResult> {
    let r = match name {
        "scalar" => scalar_suite(cfg),
        "poly" => poly_suite(cfg),
        "oracle" => oracle_suite(cfg),
        "zspace" => zspace_suite(cfg),
        "bridge" => bridge_suite(cfg),
        "constructions" => constructions_suite(cfg),
        "classifier" => classifier_suite(cfg),
        other => return Err(Error::InvalidInput(format!("unknown suite {other}"))),
    };
    Ok(r)
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteResult> {
    SUITES
        .iter()
        .map(|s| run_suite(s, cfg).expect("known suite"))
        .collect()
}

const TEST_FIELDS: [i64; 5] = [-1, 2, 3, -33, 33];

pub fn random_scalar(rng: &mut impl Rng, field: FieldDescriptor) -> ExactScalar {
    let a = random_rational(rng, 30, 7);
    let b = match field {
        FieldDescriptor::Rational => BigRational::from_integer(BigInt::from(0)),
        FieldDescriptor::Quadratic(_) => random_rational(rng, 30, 7),
    };
    ExactScalar::new(a, b, field).expect("consistent field")
}

fn random_field(rng: &mut impl Rng) -> FieldDescriptor {
    let i = rng.gen_range(0..=TEST_FIELDS.len());
    if i == TEST_FIELDS.len() {
        FieldDescriptor::Rational
    } else {
        FieldDescriptor::quadratic(TEST_FIELDS[i]).expect("squarefree")
    }
}

/// `|approx − exact_a·exact_b-ish|² ≤ bound²`, all in exact rationals.
fn within(x: &ApproxScalar, y: &ApproxScalar, bound: &BigFloat) -> bool {
    let diff = x.sub(y);
    let d2 = diff.abs_sq().to_rational();
    let b = bound.to_rational();
    d2 <= &b * &b
}

fn scalar_suite(cfg: &VerifyConfig) -> SuiteResult {
    let mut res = SuiteResult::new("scalar");
    let mut rng = rng_for(cfg.seed, 1);
    for _ in 0..cfg.corpus_size {
        let field = random_field(&mut rng);
        let x = random_scalar(&mut rng, field);
        if x.is_zero() {
            continue;
        }
        res.record(format!("inverse of {x}"), x.inverse().map(|inv| (&x * &inv).is_one()));
    }
    for d in TEST_FIELDS {
        let field = FieldDescriptor::quadratic(d).expect("squarefree");
        let s = ExactScalar::sqrt_d(field).expect("quadratic");
        res.record(format!("sqrt({d})^2"), Ok(&s * &s == ExactScalar::int_in(d, field)));
    }
    let p = cfg.precision_bits;
    for _ in 0..cfg.corpus_size {
        let field = random_field(&mut rng);
        let x = random_scalar(&mut rng, field);
        let y = random_scalar(&mut rng, field);
        let (ex, ey) = (embed_to_approx(&x, p), embed_to_approx(&y, p));
        // Each embedding is within 2^(1−p) relative; products and sums stay
        // within a small multiple of that.
        let rel = BigFloat::powi2(4 - p as i64);
        let prod_bound = rel.mul(&ex.abs().mul(&ey.abs(), p), p);
        let sum_bound = rel.mul(&ex.abs().add(&ey.abs(), p), p);
        res.record(
            format!("embedding of {x} * {y}"),
            Ok(within(&embed_to_approx(&(&x * &y), p), &ex.mul(&ey), &prod_bound)),
        );
        res.record(
            format!("embedding of {x} + {y}"),
            Ok(within(&embed_to_approx(&(&x + &y), p), &ex.add(&ey), &sum_bound)),
        );
    }
    res
}

fn poly_suite(cfg: &VerifyConfig) -> SuiteResult {
    let mut res = SuiteResult::new("poly");
    let mut rng = rng_for(cfg.seed, 2);
    let random_poly = |rng: &mut rand_chacha::ChaCha8Rng, field: FieldDescriptor| {
        let deg = rng.gen_range(0..8);
        Poly::from_coeffs((0..=deg).map(|_| random_scalar(rng, field)).collect(), field).expect("same field")
    };
    for _ in 0..cfg.corpus_size {
        let field = random_field(&mut rng);
        let p = random_poly(&mut rng, field);
        let q = random_poly(&mut rng, field);
        let leibniz = (&p * &q).derivative() == &(&p.derivative() * &q) + &(&p * &q.derivative());
        res.record(format!("product rule on {p} and {q}"), Ok(leibniz));
        if !q.is_zero() {
            let recon = p.divmod(&q).map(|(quot, rem)| {
                &(&q * &quot) + &rem == p && rem.degree().is_none_or(|d| d < q.degree().unwrap_or(0))
            });
            res.record(format!("division of {p} by {q}"), recon);
        }
    }
    for fi in corpus::random_corpus(cfg.seed, cfg.corpus_size, cfg.max_degree) {
        res.record(format!("roots of {}", corpus::factored_string(&fi)), roots_vanish(&fi));
    }
    res
}

/// `f^(j)(ρ) = 0` for `j < m` at every root `ρ` of multiplicity `m`, and
/// `f^(m)(ρ) ≠ 0`.
pub fn roots_vanish(fi: &FactoredInput) -> Result<bool> {
    let f = fi.expand();
    for (root, m) in fi.roots() {
        let mut d = f.clone();
        for _ in 0..*m {
            if !d.eval(root)?.is_zero() {
                return Ok(false);
            }
            d = d.derivative();
        }
        if d.eval(root)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn oracle_suite(cfg: &VerifyConfig) -> SuiteResult {
    let mut res = SuiteResult::new("oracle");
    let corpus = corpus::random_corpus(cfg.seed, cfg.corpus_size, cfg.max_degree);
    let outcomes: Vec<Result<bool>> = corpus
        .par_iter()
        .enumerate()
        .map(|(i, fi)| {
            let f = fi.expand();
            let k = oracle::wf_kernel(&f)?;
            for b in &k.basis {
                if !oracle::in_wf(&f, b)? {
                    return Ok(false);
                }
            }
            // dim > 0 exactly when some quadratic squared divides f
            if (k.dimension > 0) != has_square_of_quadratic(&group_roots(fi)) {
                return Ok(false);
            }
            let mut rng = rng_for(cfg.seed, 10_000 + i as u64);
            let a = loop {
                let a = ExactScalar::rational(random_rational(&mut rng, 5, 3));
                if !a.is_zero() {
                    break a;
                }
            };
            let b = ExactScalar::rational(random_rational(&mut rng, 5, 3));
            let moved = fi.affine_pullback(&a, &b)?;
            Ok(oracle::wf_kernel(&moved.expand())?.dimension == k.dimension)
        })
        .collect();
    res.absorb("kernel basis, nonvanishing and affine invariance", outcomes);
    res
}

/// `p ↦ p((x − b)/a)`.
pub fn transport_poly(p: &Poly, a: &ExactScalar, b: &ExactScalar) -> Result<Poly> {
    let inv = a.inverse()?;
    p.compose_affine(&inv, &-&(b * &inv))
}

fn zspace_suite(cfg: &VerifyConfig) -> SuiteResult {
    let mut res = SuiteResult::new("zspace");
    let mut rng = rng_for(cfg.seed, 4);
    for _ in 0..cfg.corpus_size {
        let s = rng.gen_range(1..=5);
        let k = rng.gen_range(0..=2 * s + 2);
        let z = random_z_problem(&mut rng, s, k);
        let rep = zspace::z_report(&z);
        let lower = rep.dimension + s > k;
        let upper = k < s.saturating_sub(1).max(1) || rep.dimension <= k;
        res.record(format!("bounds s={s} k={k}"), Ok(lower && upper && rep.dimension + rep.rank == k + 1));
        let members = rep.basis.iter().map(|p| zspace::membership(&z, p)).collect::<Result<Vec<_>>>();
        res.record(format!("basis membership s={s} k={k}"), members.map(|v| v.iter().all(|&b| b)));

        let extra = rng.gen_range(0..=3);
        let bigger = zspace::z_report(&z.with_k(k + extra));
        res.record(
            format!("monotone in k s={s} k={k}+{extra}"),
            Ok(bigger.dimension <= rep.dimension + extra && rep.dimension <= bigger.dimension),
        );
        let chain = rep
            .basis
            .iter()
            .map(|p| zspace::membership(&z.with_k(k + extra), p))
            .collect::<Result<Vec<_>>>();
        res.record("degree chain", chain.map(|v| v.iter().all(|&b| b)));
        if s >= 2 {
            let sub = z.restrict(&(0..s - 1).collect::<Vec<_>>());
            let chain = sub.and_then(|sub| {
                rep.basis
                    .iter()
                    .map(|p| zspace::membership(&sub, p))
                    .collect::<Result<Vec<_>>>()
            });
            res.record("node chain", chain.map(|v| v.iter().all(|&b| b)));
        }

        let a = loop {
            let a = ExactScalar::rational(random_rational(&mut rng, 6, 4));
            if !a.is_zero() {
                break a;
            }
        };
        let b = ExactScalar::rational(random_rational(&mut rng, 6, 4));
        let moved = zspace::affine_transport(&z, &a, &b).and_then(|zt| {
            let rt = zspace::z_report(&zt);
            let mut ok = rt.dimension == rep.dimension;
            for p in &rep.basis {
                ok &= zspace::membership(&zt, &transport_poly(p, &a, &b)?)?;
            }
            Ok(ok)
        });
        res.record(format!("affine transport s={s} k={k}"), moved);
    }

    // Degeneracy with k ≥ 2s − 2 forces η to be the critical vector.
    for _ in 0..cfg.corpus_size {
        let s = rng.gen_range(2..=5);
        let k = rng.gen_range(2 * s - 2..=2 * s + 1);
        let z = random_z_problem(&mut rng, s, k);
        let crit = zspace::critical_eta(z.omega());
        let outcome = crit.map(|c| c.as_slice() == z.eta() || !zspace::z_report(&z).degenerate);
        res.record(format!("necessary condition s={s} k={k}"), outcome);
    }

    // Removing node i: p ∈ Z with p(ω_i) = 0 forces (x − ω_i)² | p, so the
    // kernel of p ↦ p(ω_i) is (x − ω_i)²·Z̃ and dim Z − dim Z̃ is 1 exactly
    // when some member of Z is nonzero at ω_i. Generically that holds.
    for _ in 0..cfg.corpus_size / 2 {
        let s = rng.gen_range(1..=4);
        let k = rng.gen_range((s + 1).max(2)..=2 * s + 1);
        let z = random_z_problem(&mut rng, s + 1, k);
        let i = rng.gen_range(0..=s);
        let outcome = zspace::reduce(&z, i).and_then(|zr| {
            let small = zspace::z_report(&zr);
            let big = zspace::z_report(&z);
            let sq = Poly::linear_factor(&z.omega()[i]).pow(2);
            let wi = &z.omega()[i];
            let mut onto = false;
            for p in &big.basis {
                onto |= !p.eval(wi)?.is_zero();
            }
            let mut ok = big.dimension == small.dimension + onto as usize;
            for q in &small.basis {
                ok &= zspace::membership(&z, &(&sq * q))?;
            }
            Ok(ok)
        });
        res.record(format!("node removal s+1={} k={k}", s + 1), outcome);
    }

    // det Ã = (α₁ − α₂)·D(α₁, α₂) for the two-multiple-root shapes.
    let shapes: [&[(i64, usize)]; 3] = [&[(1, 2), (-1, 2)], &[(0, 2), (1, 3)], &[(1, 3), (-1, 3)]];
    for shape in shapes {
        let fi = FactoredInput::from_int_roots(shape).expect("valid");
        for _ in 0..cfg.corpus_size / 4 {
            let pts = distinct_rationals(&mut rng, 2, 40, 7);
            let outcome = match classifier::det_tilde_check(&fi, &pts[0], &pts[1]) {
                Err(Error::PoleAtPoint) => continue,
                other => other.map(|c| c.holds()),
            };
            res.record("two-node determinant", outcome);
        }
    }
    res
}

fn bridge_suite(cfg: &VerifyConfig) -> SuiteResult {
    let mut res = SuiteResult::new("bridge");
    let corpus = corpus::random_corpus(cfg.seed, cfg.corpus_size, cfg.max_degree);
    let outcomes: Vec<Result<bool>> = corpus
        .par_iter()
        .enumerate()
        .map(|(i, fi)| {
            let g = group_roots(fi);
            let f = fi.expand();
            let k = oracle::wf_kernel(&f)?;
            let st = bridge::structural_route(fi)?;
            let mut ok = st.basis == k.basis;
            // φ lands in Z and ψ undoes it.
            let images = k.basis.iter().map(|p| bridge::phi(fi, p)).collect::<Result<Vec<_>>>()?;
            for (p, q) in k.basis.iter().zip(&images) {
                ok &= &bridge::psi(fi, q)? == p;
                ok &= q.degree_at_most(g.r.max(0) as usize);
            }
            if g.n1 == 0 {
                ok &= k.dimension as i64 == g.r + 1;
            } else {
                let z = bridge::to_z_problem(fi)?;
                for q in &images {
                    ok &= zspace::membership(&z, q)?;
                }
            }
            let mut rng = rng_for(cfg.seed, 20_000 + i as u64);
            for _ in 0..3 {
                let deg = rng.gen_range(0..=g.n - 2);
                let p = Poly::from_coeffs(
                    (0..=deg).map(|_| ExactScalar::rational(random_rational(&mut rng, 9, 3))).collect(),
                    g.field,
                )?;
                ok &= bridge::multiplicity_reduction_check(fi, &p)?;
                ok &= bridge::multiplicity_reduction_check(fi, &(&p * &g.forced_factor()).rem(&f)?)?;
                let x0 = ExactScalar::rational(random_rational(&mut rng, 50, 11));
                match bridge::d_at(fi, &x0) {
                    Ok(_) | Err(Error::PoleAtPoint) => {}
                    Err(e) => return Err(e),
                }
            }
            for p in &k.basis {
                ok &= bridge::multiplicity_reduction_check(fi, p)?;
            }
            Ok(ok)
        })
        .collect();
    res.absorb("structural route against the oracle", outcomes);
    res
}

/// Random local data for the congruence construction.
pub fn random_target(rng: &mut impl Rng, fi: &FactoredInput) -> CongruenceTarget {
    let g = group_roots(fi);
    let sc = |rng: &mut _| ExactScalar::rational(random_rational(rng, 9, 4));
    CongruenceTarget {
        a: (0..g.n1).map(|_| sc(rng)).collect(),
        b: (0..g.n2).map(|_| sc(rng)).collect(),
        c: (0..g.n3)
            .map(|_| Poly::from_coeffs(vec![sc(rng), sc(rng)], FieldDescriptor::Rational).expect("rational"))
            .collect(),
    }
}

/// Inputs with `r ≥ 2n₁ − 1`, drawn from the seeded corpus.
pub fn crt_inputs(seed: u64, count: usize, max_degree: usize) -> Vec<FactoredInput> {
    let mut rng = rng_for(seed, 5000);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let fi = corpus::random_factored_input(&mut rng, max_degree);
        let g = group_roots(&fi);
        if g.r >= 2 * g.n1 as i64 - 1 {
            out.push(fi);
        }
    }
    out
}

/// Values and derivatives of `p` at each node: `(p(ω_i), p′(ω_i))`.
pub fn hermite_residual_ok(h: &HermiteData, p: &Poly) -> Result<bool> {
    let field = p.field();
    let dp = p.derivative();
    for ((w, e), y) in h.omega.iter().zip(&h.eta).zip(&h.y) {
        let (w, e, y) = (w.lift(field)?, e.lift(field)?, y.lift(field)?);
        if p.eval(&w)? != y || dp.eval(&w)? != &e * &y {
            return Ok(false);
        }
    }
    Ok(p.degree_at_most(2 * h.omega.len() - 1))
}

fn constructions_suite(cfg: &VerifyConfig) -> SuiteResult {
    let mut res = SuiteResult::new("constructions");
    let mut rng = rng_for(cfg.seed, 6);
    for fi in crt_inputs(cfg.seed, cfg.corpus_size, cfg.max_degree) {
        let t = random_target(&mut rng, &fi);
        let g = group_roots(&fi);
        let outcome = constructions::crt_construct(&fi, &t).and_then(|p| {
            let deg_ok = p
                .degree()
                .is_none_or(|d| d as i64 <= constructions::crt_degree_bound(&g) && d + 2 <= g.n);
            Ok(deg_ok && constructions::satisfies_congruences(&fi, &t, &p)?)
        });
        res.record(format!("congruences for {}", corpus::factored_string(&fi)), outcome);
        // dim W(f) = (n − 1) − (n₁ + n₂ + 2N₃) in this range
        let expected = g.n as i64 - 1 - (g.n1 + g.n2 + 2 * g.n3) as i64;
        res.record(
            "dimension count",
            oracle::wf_kernel(&fi.expand()).map(|k| k.dimension as i64 == expected),
        );
    }
    for _ in 0..cfg.corpus_size {
        let s = rng.gen_range(1..=6);
        let z = random_z_problem(&mut rng, s, 2 * s - 1);
        res.record(format!("dim Z(s, 2s-1) s={s}"), Ok(zspace::z_report(&z).dimension == s));
        let y: Vec<ExactScalar> = (0..s).map(|_| ExactScalar::rational(random_rational(&mut rng, 9, 5))).collect();
        let h = HermiteData {
            eta: z.eta().to_vec(),
            omega: z.omega().to_vec(),
            y,
        };
        let outcome = constructions::hermite_basis(&h).and_then(|p| {
            Ok(hermite_residual_ok(&h, &p)? && zspace::membership(&z, &p)?)
        });
        res.record(format!("hermite interpolant s={s}"), outcome);
        let extra = rng.gen_range(0..=4);
        let zk = z.with_k(2 * s - 1 + extra);
        res.record(
            format!("dim Z(s, k) = k+1-s for k = 2s-1+{extra}"),
            constructions::ev_kernel_dim(&zk).map(|d| d == extra && zspace::z_report(&zk).dimension == zk.k() + 1 - s),
        );
    }
    for fi in corpus::random_corpus(cfg.seed, cfg.corpus_size / 2, cfg.max_degree) {
        let outcome = constructions::partial_fractions_q(&fi).and_then(|d| d.recombine()).map(|p| p.coeffs().len() == 1 && p.coeff(0).is_one());
        res.record("partial fractions", outcome);
    }
    res
}

/// Four simple roots next to a multiple-root part, for the `n₁ = 4` table.
pub fn four_simple_roots_inputs(seed: u64, per_shape: usize) -> Vec<FactoredInput> {
    const SHAPES: [&[usize]; 10] = [
        &[4],
        &[2, 2],
        &[2, 3],
        &[3, 3],
        &[5],
        &[2, 2, 2],
        &[3, 4],
        &[2, 4],
        &[6],
        &[2, 2, 3],
    ];
    let mut rng = rng_for(seed, 7000);
    let mut out = Vec::new();
    for shape in SHAPES {
        for _ in 0..per_shape {
            let roots = distinct_rationals(&mut rng, shape.len() + 4, 15, 3);
            let mults = shape.iter().copied().chain([1, 1, 1, 1]);
            out.push(FactoredInput::new(roots.into_iter().zip(mults).collect(), ExactScalar::int(1)).expect("valid"));
        }
    }
    out
}

fn classifier_suite(cfg: &VerifyConfig) -> SuiteResult {
    let mut res = SuiteResult::new("classifier");
    let mut inputs = corpus::random_corpus(cfg.seed, cfg.corpus_size, cfg.max_degree);
    inputs.extend(four_simple_roots_inputs(cfg.seed, 2));
    let outcomes: Vec<Result<bool>> = inputs
        .par_iter()
        .map(|fi| {
            let rep = classify(fi)?;
            let g = &rep.grouping;
            let dim = rep.dim_oracle as i64;
            let mut ok = rep.dim_oracle == rep.dim_structural;
            ok &= rep.dim_theorem.is_none_or(|d| d == rep.dim_oracle);
            ok &= (dim > 0) == has_square_of_quadratic(g);
            if g.n1 >= 1 && g.r >= g.n1 as i64 - 1 {
                ok &= g.mu <= dim && dim <= g.r;
            }
            if g.n1 >= 1 && g.r == 2 * g.n1 as i64 - 2 {
                ok &= !rep.degenerate;
            }
            if g.n1 == 4 {
                ok &= match g.r {
                    r if r >= 6 => dim == r - 3,
                    5 => dim == 2,
                    4 => dim == 1 || dim == 2,
                    _ => true,
                };
            }
            Ok(ok)
        })
        .collect();
    res.absorb("three-route agreement", outcomes);

    match corpus::small_degree_table(cfg.seed) {
        Ok(rows) => {
            for row in rows {
                res.record(format!("table column {}", corpus::factored_string(&row.witness)), Ok(row.matches_printed()));
            }
        }
        Err(e) => res.record("table", Err(e)),
    }

    let mut rng = rng_for(cfg.seed, 8);
    let mut ratio: Option<ExactScalar> = None;
    for _ in 0..cfg.corpus_size / 2 {
        for n in [3, 4] {
            let a = distinct_rationals(&mut rng, n, 20, 5);
            res.record(format!("pair determinant on {n} nodes"), classifier::verify_det_identities(&a).map(|c| c.holds()));
        }
        let a = distinct_rationals(&mut rng, 3, 20, 5);
        let outcome = classifier::h_identity_check(&a).map(|c| {
            let r = c.ratio.expect("nonzero product");
            let same = ratio.as_ref().is_none_or(|prev| prev == &r);
            ratio = Some(r);
            same
        });
        res.record("h ratio constant", outcome);
    }
    for fam in classifier::exceptional_cubics() {
        res.record(format!("family equation {}", fam.name), Ok(fam.ode_residual().is_zero()));
    }
    res
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_is_clean() {
        let cfg = VerifyConfig {
            corpus_size: 12,
            max_degree: 9,
            ..Default::default()
        };
        for r in run_all(&cfg) {
            assert!(r.ok(), "{}: {:?}", r.name, r.failures);
            assert!(r.passed > 0, "{} ran no checks", r.name);
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &VerifyConfig::default()).is_err());
    }
}
