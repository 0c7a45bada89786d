use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

use wfdim_core::approx::{embed_to_approx, BigFloat};
use wfdim_core::bridge::{self, group_roots};
use wfdim_core::corpus::{distinct_rationals, random_factored_input, random_z_problem, rng_for};
use wfdim_core::oracle;
use wfdim_core::verify::{roots_vanish, transport_poly};
use wfdim_core::zspace;
use wfdim_core::{ExactScalar, FieldDescriptor, Poly};

const FIELDS: [i64; 6] = [0, -1, 2, 3, -33, 33];

fn field(d: i64) -> FieldDescriptor {
    if d == 0 {
        FieldDescriptor::Rational
    } else {
        FieldDescriptor::quadratic(d).unwrap()
    }
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-500i64..=500, 1i64..=60).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn scalar_in(d: i64) -> impl Strategy<Value = ExactScalar> {
    (rational(), rational()).prop_map(move |(a, b)| {
        let f = field(d);
        let b = if d == 0 { BigRational::from_integer(0.into()) } else { b };
        ExactScalar::new(a, b, f).unwrap()
    })
}

fn scalar_pair() -> impl Strategy<Value = (ExactScalar, ExactScalar)> {
    proptest::sample::select(FIELDS.to_vec()).prop_flat_map(|d| (scalar_in(d), scalar_in(d)))
}

fn poly_in(d: i64) -> impl Strategy<Value = Poly> {
    proptest::collection::vec(scalar_in(d), 0..7).prop_map(move |c| Poly::from_coeffs(c, field(d)).unwrap())
}

fn poly_pair() -> impl Strategy<Value = (Poly, Poly)> {
    proptest::sample::select(FIELDS.to_vec()).prop_flat_map(|d| (poly_in(d), poly_in(d)))
}

fn close(approx: &BigFloat, exact: &BigRational, rel_bits: i64) -> bool {
    let err = (approx.to_rational() - exact).abs();
    let bound = BigFloat::powi2(-rel_bits).to_rational() * exact.abs();
    err <= bound
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_is_exact((x, _) in scalar_pair()) {
        prop_assume!(!x.is_zero());
        prop_assert!((&x * &x.inverse().unwrap()).is_one());
    }

    #[test]
    fn field_operations_commute_with_conjugation((x, y) in scalar_pair()) {
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn embedding_respects_products((x, y) in scalar_pair()) {
        let p = 128;
        let (ex, ey) = (embed_to_approx(&x, p), embed_to_approx(&y, p));
        let lhs = embed_to_approx(&(&x * &y), p);
        let rhs = ex.mul(&ey);
        let diff = lhs.sub(&rhs).abs_sq().to_rational();
        let scale = ex.abs_sq().to_rational() * ey.abs_sq().to_rational();
        let eps = BigFloat::powi2(2 * (4 - p as i64)).to_rational();
        prop_assert!(diff <= eps * scale);
    }

    #[test]
    fn product_rule((p, q) in poly_pair()) {
        prop_assert_eq!((&p * &q).derivative(), &(&p.derivative() * &q) + &(&p * &q.derivative()));
    }

    #[test]
    fn division_reconstructs((p, q) in poly_pair()) {
        prop_assume!(!q.is_zero());
        let (quot, rem) = p.divmod(&q).unwrap();
        prop_assert_eq!(&(&q * &quot) + &rem, p);
        prop_assert!(rem.is_zero() || rem.degree() < q.degree());
    }

    #[test]
    fn expanded_roots_vanish_to_order(seed in any::<u64>()) {
        let fi = random_factored_input(&mut rng_for(seed, 0), 10);
        prop_assert!(roots_vanish(&fi).unwrap());
    }

    #[test]
    fn kernel_basis_lies_in_w(seed in any::<u64>()) {
        let fi = random_factored_input(&mut rng_for(seed, 0), 9);
        let f = fi.expand();
        let k = oracle::wf_kernel(&f).unwrap();
        for p in &k.basis {
            prop_assert!(oracle::in_wf(&f, p).unwrap());
            // p carries the forced factor f_β f_γ²
            prop_assert!(group_roots(&fi).forced_factor().divides(p).unwrap());
        }
    }

    #[test]
    fn phi_and_psi_are_inverse(seed in any::<u64>()) {
        let fi = random_factored_input(&mut rng_for(seed, 0), 9);
        for p in oracle::wf_kernel(&fi.expand()).unwrap().basis {
            let q = bridge::phi(&fi, &p).unwrap();
            prop_assert_eq!(bridge::psi(&fi, &q).unwrap(), p);
        }
    }

    #[test]
    fn z_dimension_bounds(seed in any::<u64>(), s in 1usize..=5, k in 0usize..=12) {
        let z = random_z_problem(&mut rng_for(seed, 0), s, k);
        let rep = zspace::z_report(&z);
        prop_assert_eq!(rep.dimension + rep.rank, k + 1);
        prop_assert!(rep.dimension + s > k);
        if k >= 1 {
            prop_assert!(rep.dimension <= k);
        }
    }

    #[test]
    fn transport_preserves_z(seed in any::<u64>(), s in 1usize..=4, k in 0usize..=8, a in rational(), b in rational()) {
        prop_assume!(a != BigRational::from_integer(0.into()));
        let z = random_z_problem(&mut rng_for(seed, 0), s, k);
        let (a, b) = (ExactScalar::rational(a), ExactScalar::rational(b));
        let zt = zspace::affine_transport(&z, &a, &b).unwrap();
        let rep = zspace::z_report(&z);
        prop_assert_eq!(zspace::z_report(&zt).dimension, rep.dimension);
        for p in &rep.basis {
            prop_assert!(zspace::membership(&zt, &transport_poly(p, &a, &b).unwrap()).unwrap());
        }
    }

    #[test]
    fn critical_eta_is_the_only_degenerate_choice(seed in any::<u64>(), s in 2usize..=4, extra in 0usize..=3) {
        let mut rng = rng_for(seed, 0);
        let k = 2 * s - 2 + extra;
        let z = random_z_problem(&mut rng, s, k);
        let crit = zspace::critical_eta(z.omega()).unwrap();
        prop_assert!(crit.as_slice() == z.eta() || !zspace::z_report(&z).degenerate);
        let omega = distinct_rationals(&mut rng, s, 15, 3);
        let eta = zspace::critical_eta(&omega).unwrap();
        // Rank of the critical problem never exceeds the generic one.
        let zc = zspace::ZProblem::new(eta, omega, k).unwrap();
        prop_assert!(zspace::z_report(&zc).rank <= s.min(k + 1));
    }
}

#[test]
fn sqrt_squares_to_d() {
    for d in FIELDS.into_iter().filter(|&d| d != 0) {
        let s = ExactScalar::sqrt_d(field(d)).unwrap();
        assert_eq!(&s * &s, ExactScalar::int_in(d, field(d)));
    }
}

/// `√n` by Newton iteration on exact rationals, error far below `2^-200`.
fn newton_sqrt(n: i64) -> BigRational {
    let target = BigRational::from_integer(n.into());
    let mut x = BigRational::from_integer(6.into());
    for _ in 0..10 {
        x = (&x + &target / &x) / BigRational::from_integer(2.into());
    }
    x
}

#[test]
fn principal_square_roots() {
    let prec = 128;
    let s3 = embed_to_approx(&ExactScalar::sqrt_d(field(3)).unwrap(), prec);
    assert!(close(&s3.re, &newton_sqrt(3), prec as i64 - 1));
    assert!(s3.im.is_zero());
    let s33 = embed_to_approx(&ExactScalar::sqrt_d(field(-33)).unwrap(), prec);
    assert!(s33.re.is_zero());
    assert!(close(&s33.im, &newton_sqrt(33), prec as i64 - 1));
    assert!(!s33.im.is_negative());
    // 1 − √3 loses nothing to cancellation.
    let x = ExactScalar::quad((1, 1), (-1, 1), 3).unwrap();
    let e = embed_to_approx(&x, prec);
    assert!(close(&e.re, &(BigRational::from_integer(1.into()) - newton_sqrt(3)), prec as i64 - 1));
}
