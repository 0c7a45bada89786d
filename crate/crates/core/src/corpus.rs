//! Seeded test inputs: witnesses for the small-degree table and random factored polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::classifier::{classify, WfReport};
use crate::error::Result;
use crate::poly::FactoredInput;
use crate::scalar::ExactScalar;
use crate::zspace::ZProblem;

pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// One column of the small-degree table: the configuration and its printed dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableColumn {
    pub degree: usize,
    pub n2: usize,
    pub n3: usize,
    pub r: i64,
    pub n1: usize,
    pub mu: i64,
    pub dim: usize,
    /// Multiplicities of a realizing polynomial.
    pub shape: &'static [usize],
}

#[allow(clippy::too_many_arguments)]
const fn col(
    degree: usize,
    n2: usize,
    n3: usize,
    r: i64,
    n1: usize,
    mu: i64,
    dim: usize,
    shape: &'static [usize],
) -> TableColumn {
    TableColumn {
        degree,
        n2,
        n3,
        r,
        n1,
        mu,
        dim,
        shape,
    }
}

pub const SMALL_DEGREE_TABLE: [TableColumn; 13] = [
    col(4, 0, 1, 0, 0, 1, 1, &[4]),
    col(4, 2, 0, 0, 0, 1, 1, &[2, 2]),
    col(5, 0, 1, 1, 1, 1, 1, &[4, 1]),
    col(5, 0, 1, 1, 0, 2, 2, &[5]),
    col(5, 2, 0, 1, 1, 1, 1, &[2, 2, 1]),
    col(5, 1, 1, 0, 0, 1, 1, &[2, 3]),
    col(6, 0, 1, 2, 0, 3, 3, &[6]),
    col(6, 1, 1, 1, 0, 2, 2, &[2, 4]),
    col(6, 0, 1, 2, 1, 2, 2, &[5, 1]),
    col(6, 0, 1, 2, 2, 1, 1, &[4, 1, 1]),
    col(6, 3, 0, 1, 0, 2, 2, &[2, 2, 2]),
    col(6, 1, 1, 1, 1, 1, 1, &[2, 3, 1]),
    col(6, 2, 0, 2, 2, 1, 1, &[2, 2, 1, 1]),
];

/// Monic input with the given multiplicities at distinct random integer roots in `[−9, 9]`.
pub fn integer_witness(shape: &[usize], rng: &mut impl Rng) -> FactoredInput {
    let mut pool: Vec<i64> = (-9..=9).collect();
    pool.shuffle(rng);
    let roots: Vec<(i64, usize)> = pool.into_iter().zip(shape.iter().copied()).collect();
    FactoredInput::from_int_roots(&roots).expect("distinct roots, degree ≥ 4")
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub column: TableColumn,
    pub witness: FactoredInput,
    pub report: WfReport,
}

impl TableRow {
    pub fn matches_printed(&self) -> bool {
        let g = &self.report.grouping;
        let c = &self.column;
        (g.n, g.n2, g.n3, g.r, g.n1, g.mu) == (c.degree, c.n2, c.n3, c.r, c.n1, c.mu)
            && self.report.dim_oracle == c.dim
    }
}

/// Regenerate every column with a seeded witness. Each column draws from its
/// own stream, so the output depends only on the seed.
pub fn small_degree_table(seed: u64) -> Result<Vec<TableRow>> {
    SMALL_DEGREE_TABLE
        .par_iter()
        .enumerate()
        .map(|(i, column)| {
            let mut rng = rng_for(seed, i as u64);
            let witness = integer_witness(column.shape, &mut rng);
            let report = classify(&witness)?;
            Ok(TableRow {
                column: *column,
                witness,
                report,
            })
        })
        .collect()
}

/// `(x+2)^2*(x-1)` style rendering of a monic factored input.
pub fn factored_string(fi: &FactoredInput) -> String {
    let mut parts = Vec::new();
    if !fi.leading_coefficient().is_one() {
        parts.push(format!("({})", fi.leading_coefficient()));
    }
    for (root, m) in fi.roots() {
        let base = if root.is_zero() {
            "x".to_string()
        } else {
            let neg = -root;
            let s = neg.to_string();
            match s.strip_prefix('-') {
                Some(t) => format!("(x - {t})"),
                None => format!("(x + {s})"),
            }
        };
        parts.push(if *m == 1 { base } else { format!("{base}^{m}") });
    }
    parts.join("*")
}

pub fn random_rational(rng: &mut impl Rng, bound: i64, max_den: i64) -> BigRational {
    BigRational::new(
        BigInt::from(rng.gen_range(-bound..=bound)),
        BigInt::from(rng.gen_range(1..=max_den)),
    )
}

/// `count` pairwise distinct rationals with numerators in `[−bound, bound]`.
pub fn distinct_rationals(rng: &mut impl Rng, count: usize, bound: i64, max_den: i64) -> Vec<ExactScalar> {
    let mut out: Vec<ExactScalar> = Vec::with_capacity(count);
    while out.len() < count {
        let x = ExactScalar::rational(random_rational(rng, bound, max_den));
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

fn random_multiplicity(rng: &mut impl Rng, remaining: usize) -> usize {
    let m = match rng.gen_range(0..100) {
        0..=44 => 1,
        45..=71 => 2,
        72..=86 => 3,
        87..=95 => 4,
        _ => rng.gen_range(5..=7),
    };
    m.min(remaining)
}

/// A monic input of degree `4..=max_degree` with random rational roots and a
/// mix of multiplicities.
pub fn random_factored_input(rng: &mut impl Rng, max_degree: usize) -> FactoredInput {
    let n = rng.gen_range(4..=max_degree.max(4));
    let mut mults = Vec::new();
    let mut remaining = n;
    while remaining > 0 {
        let m = random_multiplicity(rng, remaining);
        mults.push(m);
        remaining -= m;
    }
    let roots = distinct_rationals(rng, mults.len(), 12, 3);
    FactoredInput::new(roots.into_iter().zip(mults).collect(), ExactScalar::int(1)).expect("valid input")
}

pub fn random_corpus(seed: u64, count: usize, max_degree: usize) -> Vec<FactoredInput> {
    let mut rng = rng_for(seed, 1000);
    (0..count).map(|_| random_factored_input(&mut rng, max_degree)).collect()
}

/// Random exact problem with `s` distinct nodes.
pub fn random_z_problem(rng: &mut impl Rng, s: usize, k: usize) -> ZProblem {
    let omega = distinct_rationals(rng, s, 20, 4);
    let eta = (0..s)
        .map(|_| ExactScalar::rational(random_rational(rng, 20, 4)))
        .collect();
    ZProblem::new(eta, omega, k).expect("distinct nodes")
}
