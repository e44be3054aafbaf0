//! Worked examples for each module, with expected values computed by small
//! independent routines in this file where they are not obvious by hand.

use num_bigint::BigInt;
use qrr_core::bailey::{
    beta_3m_minus_1, beta_closed, beta_definitional, beta_i2_from_i1, beta_multisum, check_level_recurrence,
    check_n_recurrence, even_pair_alpha, even_pair_beta, sigma, unit_pair_alpha, unit_pair_beta, BaileyPair, BetaForm,
};
use qrr_core::dsl::{evaluate, parse};
use qrr_core::identities::{
    a22_product, agb_lhs, agb_rhs, cap_sigma_lhs, grouped_lhs, verify, wbl_lhs, wbl_rhs_from_alpha, Params,
};
use qrr_core::partitions::{count_congruence, count_difference, CongruenceClass, DifferenceRule};
use qrr_core::series::{
    jtp_product, jtp_sum, pochhammer_fin, pochhammer_inf, qbinomial, qpi_lhs, qpi_rhs, series_equal, LaurentSeries,
    Monomial, SeriesError, SparsePoly, Status,
};

fn s(min_exp: i64, c: &[i64], order: i64) -> LaurentSeries {
    LaurentSeries::from_i64s(min_exp, c, order)
}

fn eval(text: &str, order: i64) -> LaurentSeries {
    evaluate(&parse(text).unwrap(), order).unwrap()
}

fn pair(level: i64, i: i64) -> BaileyPair {
    BaileyPair::new(level, i).unwrap()
}

/// `prod_j (1 - q^j)` for `1 <= j < order`, multiplied out in machine integers.
fn euler_product(order: usize) -> Vec<i64> {
    let mut c = vec![0i64; order];
    c[0] = 1;
    for j in 1..order {
        for k in (j..order).rev() {
            c[k] -= c[k - j];
        }
    }
    c
}

/// Partition numbers by the coin-change recurrence.
fn partition_numbers(order: usize) -> Vec<i64> {
    let mut p = vec![0i64; order];
    p[0] = 1;
    for part in 1..order {
        for k in part..order {
            p[k] += p[k - part];
        }
    }
    p
}

/// `q^shift / prod (1 - q^f)` over the listed factors, as a dense vector.
fn over_factors(shift: usize, factors: &[usize], order: usize) -> Vec<i64> {
    let mut c = vec![0i64; order];
    if shift < order {
        c[shift] = 1;
    }
    for &f in factors {
        for k in f..order {
            c[k] += c[k - f];
        }
    }
    c
}

#[test]
fn series_arithmetic() {
    assert_eq!(&s(0, &[1, 1], 10) * &s(0, &[1, -1], 10), s(0, &[1, 0, -1], 10));
    assert_eq!(s(0, &[1, 1], 5).shift(-1), s(-1, &[1, 1], 4));
    assert_eq!(&s(0, &[1, 1, 1], 3) * &s(0, &[1, 1], 3), s(0, &[1, 2, 2], 3));
}

#[test]
fn inversion() {
    assert_eq!(s(0, &[1, -1], 5).invert().unwrap(), s(0, &[1, 1, 1, 1, 1], 5));
    let p = partition_numbers(8);
    assert_eq!(pochhammer_inf(Monomial::q(1), 1, 8).unwrap().invert().unwrap(), s(0, &p, 8));
    assert!(matches!(s(0, &[2, 1], 5).invert(), Err(SeriesError::NotInvertible(_))));
}

#[test]
fn pochhammer_symbols() {
    assert_eq!(pochhammer_inf(Monomial::q(1), 1, 13).unwrap(), s(0, &euler_product(13), 13));
    assert_eq!(pochhammer_inf(Monomial::neg_q(2), 2, 9).unwrap(), s(0, &[1, 0, 1, 0, 1, 0, 2, 0, 2], 9));
    assert!(pochhammer_inf(Monomial::q(0), 1, 7).unwrap().is_zero());
    assert_eq!(pochhammer_fin(Monomial::q(1), 1, 3, 10).unwrap(), s(0, &[1, -1, -1, 0, 1, 1, -1], 10));
    assert_eq!(pochhammer_fin(Monomial::neg_q(5), 3, 0, 10).unwrap(), LaurentSeries::one(10));
    let reflected = pochhammer_fin(Monomial::q(3), 1, -2, 12).unwrap();
    assert_eq!(reflected, s(0, &over_factors(0, &[1, 2], 12), 12));
}

#[test]
fn gaussian_binomials() {
    assert_eq!(qbinomial(2, 1, 1).unwrap(), SparsePoly::from_terms([(1, 0), (1, 1)]));
    assert_eq!(qbinomial(4, 2, 1).unwrap(), SparsePoly::from_terms([(1, 0), (1, 1), (2, 2), (1, 3), (1, 4)]));
    assert!(qbinomial(3, 5, 1).unwrap().is_zero());
}

#[test]
fn theta_identities() {
    assert!(jtp_sum(Monomial::q(1), 30).is_zero());
    assert!(jtp_product(Monomial::q(1), 30).is_zero());
    assert!(qpi_lhs(Monomial::q(1), 40).unwrap().is_zero());
    assert!(qpi_rhs(Monomial::q(1), 40).unwrap().is_zero());
    let r = series_equal(&jtp_sum(Monomial::q(2), 30), &jtp_product(Monomial::q(2), 30)).unwrap();
    assert!(r.is_equal());
}

#[test]
fn comparisons() {
    let r = series_equal(&s(0, &[1, 1], 5), &s(0, &[1, 1], 9)).unwrap();
    assert_eq!((r.status, r.window), (Status::Equal, (0, 5)));
    let r = series_equal(&s(0, &[1, 1], 5), &s(0, &[1, 2], 5)).unwrap();
    assert_eq!(r.first_bad_exp, Some(1));
    assert_eq!((r.lhs_coeff, r.rhs_coeff), (Some(BigInt::from(1)), Some(BigInt::from(2))));
}

#[test]
fn expression_language() {
    let e = parse("(q^2,q^10;q^12)_inf / (q;q)_inf").unwrap();
    assert_eq!(e.factors.len(), 2);
    assert_eq!(parse("(q;;q)_inf").unwrap_err().position, 3);
    assert_eq!(eval("(q;q)_inf^-1", 8), s(0, &partition_numbers(8), 8));
    assert_eq!(eval("(-q^2;q^2)_inf * (-q^3;q^6)_inf", 7), s(0, &[1, 0, 1, 1, 1, 1, 2], 7));
    assert!(evaluate(&parse("(1;q)_inf^-1").unwrap(), 10).is_err());
}

#[test]
fn alpha_rules() {
    assert_eq!(pair(3, 1).alpha(6).unwrap(), SparsePoly::term(2, 0));
    assert_eq!(pair(3, 1).alpha(1).unwrap(), SparsePoly::term(-1, 0));
    assert_eq!(pair(5, 1).alpha(3).unwrap(), SparsePoly::from_terms([(1, 2), (1, 4)]));
    for p in BaileyPair::all() {
        assert_eq!(p.alpha(0).unwrap(), SparsePoly::one());
    }
    assert_eq!(unit_pair_alpha(1), SparsePoly::from_terms([(-1, 0), (-1, 1)]));
    assert_eq!(even_pair_alpha(2), SparsePoly::term(2, 4));
    assert!(unit_pair_beta(3, 10).is_zero());
}

#[test]
fn betas() {
    for p in BaileyPair::all() {
        assert_eq!(beta_definitional(p, 0, 10).unwrap(), LaurentSeries::one(10));
    }
    assert_eq!(beta_definitional(pair(5, 1), 1, 10).unwrap(), s(0, &over_factors(1, &[1, 2], 10), 10));
    assert_eq!(beta_definitional(pair(7, 1), 2, 10).unwrap(), s(0, &over_factors(2, &[1, 2, 3, 4], 10), 10));
    assert_eq!(beta_closed(pair(6, 1), 0, 10).unwrap(), LaurentSeries::one(10));
    assert_eq!(beta_closed(pair(6, 1), 1, 10).unwrap(), s(0, &over_factors(1, &[1, 2], 10), 10));
    let expect = s(0, &over_factors(9, &[1, 2, 3, 4, 5, 6], 20), 20);
    assert_eq!(beta_closed(pair(5, 1), 3, 20).unwrap(), expect);
    assert_eq!(beta_definitional(pair(5, 1), 3, 20).unwrap(), expect);
}

#[test]
fn sigma_values() {
    assert_eq!(sigma(0, 0, 10).unwrap(), LaurentSeries::one(10));
    assert_eq!(sigma(1, 0, 10).unwrap(), s(0, &over_factors(0, &[2, 5, 3, 6], 10), 10));
    assert!(sigma(2, -1, 10).unwrap().is_zero());
}

#[test]
fn alternative_beta_forms() {
    let same = |a: LaurentSeries, b: LaurentSeries| assert!(series_equal(&a, &b).unwrap().is_equal());
    assert_eq!(beta_multisum(pair(3, 1), BetaForm::MultisumB, 0, 10).unwrap(), LaurentSeries::one(10));
    same(beta_multisum(pair(3, 1), BetaForm::MultisumB, 3, 20).unwrap(), beta_definitional(pair(3, 1), 3, 20).unwrap());
    same(beta_multisum(pair(9, 1), BetaForm::MultisumA, 4, 20).unwrap(), beta_definitional(pair(9, 1), 4, 20).unwrap());
    same(beta_3m_minus_1(pair(5, 1), 1, 20).unwrap(), s(0, &over_factors(4, &[1, 2, 3, 4], 20), 20));
    same(beta_3m_minus_1(pair(3, 1), 1, 20).unwrap(), beta_definitional(pair(3, 1), 2, 20).unwrap());
    same(beta_3m_minus_1(pair(9, 1), 2, 30).unwrap(), beta_definitional(pair(9, 1), 5, 30).unwrap());
    assert_eq!(beta_i2_from_i1(pair(5, 2), 0, 20).unwrap(), LaurentSeries::one(20));
    same(beta_i2_from_i1(pair(5, 2), 2, 20).unwrap(), s(0, &over_factors(2, &[1, 2, 3, 4], 20), 20));
    same(beta_i2_from_i1(pair(3, 2), 1, 20).unwrap(), beta_definitional(pair(3, 2), 1, 20).unwrap());
    assert!(pair(5, 1).beta(BetaForm::MultisumA, 1, 10).is_err());
}

#[test]
fn recurrences() {
    assert!(check_n_recurrence(2, 40).unwrap().is_equal());
    assert!(check_level_recurrence(8, 1, 40).unwrap().is_equal());
    assert!(check_level_recurrence(6, 2, 40).unwrap().is_equal());
}

#[test]
fn weak_bailey_lemma() {
    let unit = wbl_lhs(|n, order| Ok::<_, SeriesError>(unit_pair_beta(n, order)), 30).unwrap();
    assert_eq!(unit, LaurentSeries::one(30));
    let unit_alpha = wbl_rhs_from_alpha(|n| Ok::<_, SeriesError>(unit_pair_alpha(n)), 30).unwrap();
    assert!(series_equal(&unit_alpha, &unit).unwrap().is_equal());

    // sum q^{2n^2}/(q)_{2n} and sum q^{n^2}/(q^2;q^2)_n, summed term by term here
    let mut level5 = vec![0i64; 50];
    let mut even = vec![0i64; 50];
    for n in 0..8usize {
        let a = over_factors(2 * n * n, &(1..=2 * n).collect::<Vec<_>>(), 50);
        let b = over_factors(n * n, &(1..=n).map(|k| 2 * k).collect::<Vec<_>>(), 50);
        for k in 0..50 {
            level5[k] += a[k];
            even[k] += b[k];
        }
    }
    let lhs5 = wbl_lhs(|n, order| beta_definitional(pair(5, 1), n, order), 50).unwrap();
    assert_eq!(lhs5, s(0, &level5, 50));
    let lhs_even = wbl_lhs(even_pair_beta, 50).unwrap();
    assert_eq!(lhs_even, s(0, &even, 50));

    for p in [pair(3, 1), pair(7, 1)] {
        let lhs = wbl_lhs(|n, order| beta_definitional(p, n, order), 60).unwrap();
        let rhs = wbl_rhs_from_alpha(|n| p.alpha(n), 60).unwrap();
        assert!(series_equal(&lhs, &rhs).unwrap().is_equal(), "{p}");
    }
}

#[test]
fn product_sides() {
    assert_eq!(a22_product(3, 1, 7).unwrap(), s(0, &[1, 0, 1, 1, 1, 1, 2], 7));
    assert_eq!(a22_product(3, 2, 7).unwrap(), eval("(-q;q^2)_inf * (-q^6;q^6)_inf", 7));
    assert_eq!(a22_product(5, 1, 20).unwrap(), eval("(q,q^7,q^8;q^8)_inf * (q^6,q^10;q^16)_inf / (q;q)_inf", 20));
    assert!(series_equal(&grouped_lhs(pair(3, 1), 60).unwrap(), &a22_product(3, 1, 60).unwrap()).unwrap().is_equal());
    assert!(series_equal(&grouped_lhs(pair(9, 2), 60).unwrap(), &a22_product(9, 2, 60).unwrap()).unwrap().is_equal());
}

#[test]
fn capparelli_sums() {
    let first = cap_sigma_lhs(1, 7).unwrap();
    assert_eq!(first, s(0, &[1, 0, 1, 1, 1, 1, 2], 7));
    assert_eq!(first.coeff(0), Some(BigInt::from(1)));
    assert_eq!(cap_sigma_lhs(2, 7).unwrap(), eval("(-q;q^2)_inf * (-q^6;q^6)_inf", 7));
}

#[test]
fn andrews_gordon_bressoud() {
    for (l, i) in [(1, 1), (2, 2), (4, 3), (7, 4)] {
        let r = series_equal(&agb_lhs(l, i, 60).unwrap(), &agb_rhs(l, i, 60).unwrap()).unwrap();
        assert!(r.is_equal(), "l={l} i={i}");
    }
}

#[test]
fn catalog_verification() {
    assert!(verify("module", &Params::level_i(5, 1), 120).unwrap().passed);
    assert!(verify("alpha-theta", &Params::level_i(3, 2), 120).unwrap().passed);
    let control = verify("control", &Params::level_i(4, 2), 100).unwrap();
    assert!(control.passed);
    assert!(control.checks.iter().all(|c| c.report.first_bad_exp.is_some()));
    assert!(verify("nonsense", &Params::default(), 10).is_err());
}

#[test]
fn partition_examples() {
    let first = DifferenceRule::capparelli_first();
    assert_eq!(count_difference(&first, 0), 1);
    for n in 1..=12 {
        assert_eq!(BigInt::from(count_difference(&first, n)), count_congruence(&CongruenceClass::c2(), n));
    }
    assert_eq!(count_difference(&DifferenceRule::capparelli_second(), 2), 0);
    assert_eq!(count_congruence(&CongruenceClass::c2(), 6), BigInt::from(2));
    assert_eq!(count_congruence(&CongruenceClass::c3(), 5), BigInt::from(1));
    assert_eq!(count_congruence(&CongruenceClass::d2(), 6), BigInt::from(2));
}
