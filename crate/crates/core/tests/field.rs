use std::sync::Arc;

use insdel_core::gf::{Elem, Field};
use proptest::prelude::*;

fn small_fields() -> Vec<Field> {
    [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (2, 4), (5, 2), (7, 2)]
        .iter()
        .map(|&(p, e)| Field::new(p, e, None).unwrap())
        .collect()
}

#[test]
fn axioms_exhaustive_on_small_fields() {
    for f in small_fields() {
        let xs: Vec<Elem> = f.elements().collect();
        for &a in &xs {
            assert_eq!(f.add(a, Elem::ZERO), a);
            assert_eq!(f.mul(a, Elem::ONE), a);
            assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
            }
            for &b in &xs {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.mul(a, b), f.mul_poly(a, b));
                for &c in xs.iter().step_by(1 + xs.len() / 12) {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                }
            }
        }
    }
}

#[test]
fn conway_fields_have_primitive_generators() {
    for (p, order) in [(7u32, 48u64), (11, 120), (13, 168)] {
        let f = Field::new(p, 2, None).unwrap();
        assert_eq!(f.element_order(f.generator()).unwrap(), order);
        let powers: std::collections::BTreeSet<Elem> = (0..order).map(|i| f.w_pow(i)).collect();
        assert_eq!(powers.len() as u64, order);
    }
}

#[test]
fn tables_agree_with_polynomial_arithmetic() {
    for (p, e) in [(11, 2), (13, 2), (2, 8)] {
        let f = Field::new(p, e, None).unwrap();
        assert!(f.has_tables());
        for a in f.elements() {
            for b in f.elements().step_by(7) {
                assert_eq!(f.mul(a, b), f.mul_poly(a, b));
            }
        }
    }
}

fn field_strategy() -> impl Strategy<Value = Arc<Field>> {
    prop::sample::select(vec![(2u32, 1u32), (3, 1), (2, 3), (7, 2), (11, 2), (13, 2), (3, 4)])
        .prop_map(|(p, e)| Arc::new(Field::new(p, e, None).unwrap()))
}

proptest! {
    #[test]
    fn format_parse_round_trip(f in field_strategy(), v in any::<u32>()) {
        let x = f.element(v % f.order()).unwrap();
        prop_assert_eq!(f.parse(&f.format(x)).unwrap(), x);
    }

    #[test]
    fn dlog_inverts_power(f in field_strategy(), i in any::<u32>()) {
        let i = u64::from(i) % u64::from(f.order() - 1);
        prop_assert_eq!(f.dlog(f.w_pow(i)), Some(i as u32));
    }

    #[test]
    fn division_undoes_multiplication(f in field_strategy(), a in any::<u32>(), b in any::<u32>()) {
        let a = f.element(a % f.order()).unwrap();
        let b = f.element(1 + b % (f.order() - 1)).unwrap();
        prop_assert_eq!(f.div(f.mul(a, b), b).unwrap(), a);
    }
}
