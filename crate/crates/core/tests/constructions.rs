use std::sync::Arc;

use insdel_core::constructions::{
    check_prop1_conditions, default_odd_coefficients, default_odd_length, odd_length_code,
    palindrome_code, rs_two_dim_example,
};
use insdel_core::gf::{Elem, Field};
use insdel_core::insdel::code_insdel_distance;
use insdel_core::Budgets;
use itertools::Itertools;

fn field(p: u32, e: u32) -> Arc<Field> {
    Arc::new(Field::new(p, e, None).unwrap())
}

fn d_i(code: &insdel_core::LinearCode) -> usize {
    code_insdel_distance(code, &Budgets::default()).unwrap().distance
}

#[test]
fn palindromes_have_distance_four() {
    for (p, e, k_max) in [(2, 1, 6), (3, 1, 4), (2, 2, 4), (5, 1, 3), (7, 1, 3), (3, 2, 2)] {
        let f = field(p, e);
        for k in 2..=k_max {
            if u64::from(f.order()).pow(k as u32) > 10_000 {
                continue;
            }
            let c = palindrome_code(&f, k).unwrap();
            assert!(c.contains_all_ones().is_some());
            assert_eq!(d_i(&c), 4, "q = {}, k = {k}", f.order());
        }
    }
}

#[test]
fn palindrome_k1_is_a_repetition_code() {
    let c = palindrome_code(&field(3, 1), 1).unwrap();
    assert_eq!(d_i(&c), 4);
}

#[test]
fn odd_length_codes_have_distance_four() {
    let f = field(3, 1);
    let two = f.element(2).unwrap();
    assert_eq!(d_i(&odd_length_code(&f, &[two, Elem::ZERO]).unwrap()), 4);
    assert_eq!(d_i(&odd_length_code(&f, &[Elem::ZERO, two, Elem::ZERO]).unwrap()), 4);
    assert_eq!(d_i(&odd_length_code(&f, &[Elem::ZERO, Elem::ZERO]).unwrap()), 4);
}

#[test]
fn every_valid_coefficient_vector_gives_distance_four() {
    for (p, e, k_max) in [(3, 1, 4), (2, 2, 4), (5, 1, 3), (7, 1, 2)] {
        let f = field(p, e);
        for k in 1..=k_max {
            if u64::from(f.order()).pow(k as u32) > 10_000 {
                continue;
            }
            for a in (0..k).map(|_| f.elements()).multi_cartesian_product() {
                if !check_prop1_conditions(&f, &a).valid() {
                    assert!(odd_length_code(&f, &a).is_err());
                    continue;
                }
                let c = odd_length_code(&f, &a).unwrap();
                assert!(c.contains_all_ones().is_none());
                assert_eq!(d_i(&c), 4, "q = {}, a = {:?}", f.order(), a);
            }
        }
    }
}

#[test]
fn single_condition_violations_are_located() {
    let f = field(3, 1);
    for k in 1..=4 {
        for t in 1..=k {
            let a = (0..k)
                .map(|_| f.elements())
                .multi_cartesian_product()
                .find(|a| {
                    let r = check_prop1_conditions(&f, a);
                    r.sum_holds && r.violations() == vec![t]
                })
                .unwrap_or_else(|| panic!("no vector violating only t = {t} at k = {k}"));
            let r = check_prop1_conditions(&f, &a);
            assert!(!r.valid());
            assert_eq!(r.conditions[t - 1].value, Elem::ONE);
        }
    }
}

#[test]
fn default_coefficients_are_valid() {
    for (p, e) in [(3, 1), (2, 2), (5, 1), (7, 2), (11, 2), (13, 2)] {
        let f = field(p, e);
        for k in 1..=6 {
            let a = default_odd_coefficients(&f, k).unwrap();
            assert!(check_prop1_conditions(&f, &a).valid(), "q = {}, k = {k}", f.order());
        }
    }
    let f = field(3, 1);
    for k in 1..=3 {
        assert_eq!(d_i(&default_odd_length(&f, k).unwrap()), 4);
    }
    assert!(default_odd_length(&field(2, 1), 2).is_err());
}

#[test]
fn rs_example_is_mds() {
    for (p, e, n) in [(2, 7, 3), (3, 7, 3), (2, 13, 4)] {
        let c = rs_two_dim_example(p, e, n).unwrap();
        assert!(c.is_mds(&Budgets::default()).unwrap());
        assert!(c.is_projective());
    }
}
