//! Fixed inputs with values computed once by an independent symbolic check.

use wfdim_core::classifier::{self, classify, CaseTag};
use wfdim_core::constructions;
use wfdim_core::oracle;
use wfdim_core::zspace::{self, ZProblem};
use wfdim_core::{ExactScalar, FactoredInput, Poly};

fn ints(cs: &[i64]) -> Poly {
    Poly::from_ints(cs)
}

#[test]
fn quartic_square_of_quadratic() {
    let fi = FactoredInput::from_int_roots(&[(1, 2), (-1, 2)]).unwrap();
    let k = oracle::wf_kernel(&fi.expand()).unwrap();
    assert_eq!(k.basis, vec![ints(&[1, 0, -1])]);
    let k = oracle::wf_kernel(&FactoredInput::from_int_roots(&[(0, 4)]).unwrap().expand()).unwrap();
    assert_eq!(k.basis, vec![ints(&[0, 0, 1])]);
}

#[test]
fn x4_times_linear_needs_x_squared() {
    let f = FactoredInput::from_int_roots(&[(0, 4), (1, 1)]).unwrap().expand();
    assert!(oracle::in_wf(&f, &ints(&[0, 0, -5, 6])).unwrap());
    assert!(!oracle::in_wf(&f, &ints(&[0, -5, 6])).unwrap());
    assert_eq!(oracle::r_of(&f, &ints(&[0, -5, 6])).unwrap().rem(&f).unwrap(), ints(&[0, 0, 0, 40, -39]));
}

#[test]
fn node_removal_examples() {
    let z = ZProblem::from_ints(&[3, 5], &[0, 4], 3).unwrap();
    let r = zspace::reduce(&z, 1).unwrap();
    assert_eq!(r.eta(), &[ExactScalar::frac(7, 2)]);
    assert_eq!(r.omega(), &[ExactScalar::int(0)]);
    assert_eq!(r.k(), 1);

    // The ℚ(√3) family with α₄ = 2: the 4-node problem is generic, while
    // dropping α₄ leaves η = 0 on the cubic roots, which is degenerate.
    let fam = &classifier::exceptional_cubics()[0];
    let fi = fam.input(&[ExactScalar::int(2)]).unwrap();
    let z44 = wfdim_core::bridge::to_z_problem(&fi).unwrap();
    assert_eq!((z44.s(), z44.k()), (4, 4));
    let rep = zspace::z_report(&z44);
    assert_eq!((rep.dimension, rep.degenerate), (1, false));
    let z32 = zspace::reduce(&z44, 3).unwrap();
    assert!(z32.eta().iter().all(|e| e.is_zero()));
    let rep = zspace::z_report(&z32);
    assert_eq!((rep.rank, rep.dimension, rep.degenerate), (2, 1, true));
}

#[test]
fn eta_zero_nodes() {
    let z = ZProblem::from_ints(&[0, 0, 0], &[0, 1, 2], 5).unwrap();
    assert_eq!(zspace::z_report(&z).dimension, 3);
}

#[test]
fn exceptional_families_are_generic_once_extended() {
    for fam in classifier::exceptional_cubics().iter().take(2) {
        for a4 in [2, 3, 5] {
            let r = classify(&fam.input(&[ExactScalar::int(a4)]).unwrap()).unwrap();
            assert_eq!((r.case_tag, r.dim_oracle, r.degenerate), (CaseTag::Exceptional44, 1, false));
        }
    }
    let fam = &classifier::exceptional_cubics()[2];
    for bits in [256, 512] {
        let rep = fam.approx_z_report(&[num_rational::BigRational::from_integer(2.into())], bits).unwrap();
        assert_eq!((rep.dimension, rep.degenerate), (1, false));
    }
}

#[test]
fn family_cubics_without_extension() {
    for fam in classifier::exceptional_cubics().iter().take(2) {
        let r = classify(&fam.input(&[]).unwrap()).unwrap();
        assert_eq!(r.dim_oracle, 1);
        let g = &r.grouping;
        assert_eq!(r.basis, oracle::canonical_basis(&[g.forced_factor()], g.n - 2).unwrap());
    }
}

#[test]
fn crt_hits_zero_target_with_zero() {
    let fi = FactoredInput::from_int_roots(&[(0, 4), (2, 2), (5, 1)]).unwrap();
    let g = wfdim_core::bridge::group_roots(&fi);
    let t = constructions::CongruenceTarget::zero_for(&g);
    let p = constructions::crt_construct(&fi, &t).unwrap();
    assert!(constructions::satisfies_congruences(&fi, &t, &p).unwrap());
}

#[test]
fn degree_below_four_is_rejected() {
    assert!(FactoredInput::from_int_roots(&[(0, 2), (1, 1)]).is_err());
}
