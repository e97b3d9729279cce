use std::collections::HashMap;
use std::sync::Arc;

use insdel_core::code::{hamming, LinearCode};
use insdel_core::gf::{Elem, Field};
use insdel_core::insdel::{has_distance_two, insdel_distance_pair, lcs, lcs_len};
use insdel_core::insdel::{code_insdel_distance, insdel_distance};
use insdel_core::search::{enumerate_subspaces, gaussian_binomial};
use insdel_core::Budgets;
use proptest::prelude::*;

fn lcs_memo(a: &[u8], b: &[u8], i: usize, j: usize, memo: &mut HashMap<(usize, usize), usize>) -> usize {
    if i == a.len() || j == b.len() {
        return 0;
    }
    if let Some(&v) = memo.get(&(i, j)) {
        return v;
    }
    let v = if a[i] == b[j] {
        1 + lcs_memo(a, b, i + 1, j + 1, memo)
    } else {
        lcs_memo(a, b, i + 1, j, memo).max(lcs_memo(a, b, i, j + 1, memo))
    };
    memo.insert((i, j), v);
    v
}

fn word(len: usize, q: u8) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..q, len)
}

fn elems(w: &[u8]) -> Vec<Elem> {
    let f = Field::prime(5).unwrap();
    w.iter().map(|&x| f.element(u32::from(x)).unwrap()).collect()
}

proptest! {
    #[test]
    fn lcs_matches_recursion(a in word(9, 3), b in word(7, 3)) {
        let expected = lcs_memo(&a, &b, 0, 0, &mut HashMap::new());
        prop_assert_eq!(lcs_len(&a, &b), expected);
        let c = lcs(&a, &b);
        prop_assert_eq!(c.len, expected);
        prop_assert!(c.a_positions.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(c.b_positions.windows(2).all(|w| w[0] < w[1]));
        for (&i, &j) in c.a_positions.iter().zip(&c.b_positions) {
            prop_assert_eq!(a[i], b[j]);
        }
    }

    #[test]
    fn metric_axioms((a, b, c) in (word(8, 3), word(8, 3), word(8, 3))) {
        let d = |x: &[u8], y: &[u8]| insdel_distance_pair(x, y).unwrap();
        prop_assert_eq!(d(&a, &a), 0);
        prop_assert_eq!(d(&a, &b), d(&b, &a));
        prop_assert_eq!(d(&a, &b) == 0, a == b);
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c));
        prop_assert_eq!(d(&a, &b) % 2, 0);
    }

    #[test]
    fn insdel_at_most_twice_hamming(a in word(10, 4), b in word(10, 4)) {
        let (x, y) = (elems(&a), elems(&b));
        prop_assert!(insdel_distance_pair(&x, &y).unwrap() <= 2 * hamming(&x, &y));
    }

    #[test]
    fn set_distance_is_pairwise_minimum(words in prop::collection::vec(word(6, 2), 2..12)) {
        let ws: Vec<Vec<Elem>> = words.iter().map(|w| elems(w)).collect();
        let got = insdel_distance(&ws, 1 << 20).unwrap();
        let mut best = usize::MAX;
        for i in 0..ws.len() {
            for j in i + 1..ws.len() {
                best = best.min(insdel_distance_pair(&ws[i], &ws[j]).unwrap());
            }
        }
        prop_assert_eq!(got.distance, best);
        prop_assert_eq!(insdel_distance_pair(&got.word_a, &got.word_b).unwrap(), best);
    }
}

#[test]
fn distance_two_certificate_iff_distance_two() {
    let b = Budgets::default();
    let mut checked = 0u128;
    for n in 1..=6 {
        for k in 1..=3.min(n) {
            for code in enumerate_subspaces(n, k, &b).unwrap() {
                let d = code_insdel_distance(&code, &b).unwrap().distance;
                let cert = has_distance_two(&code, b.enumeration).unwrap();
                assert_eq!(cert.is_some(), d == 2, "{:?}", code.generator().to_rows());
                if let Some(c) = cert {
                    assert!(c.is_well_formed(&code));
                }
                checked += 1;
            }
        }
    }
    let expected: u128 = (1..=6)
        .flat_map(|n| (1..=3.min(n)).map(move |k| gaussian_binomial(n, k, 2)))
        .sum();
    assert_eq!(checked, expected);
}

#[test]
fn sweep_witness_is_least_pair() {
    let f = Arc::new(Field::new(7, 2, None).unwrap());
    let rows: Vec<Vec<Elem>> = vec![
        (0..5).map(|i| f.w_pow(i * 3)).collect(),
        (0..5).map(|i| f.w_pow(i * 11 + 1)).collect(),
    ];
    let code = LinearCode::from_rows(&f, &rows).unwrap();
    let words = code.all_codewords(1 << 20).unwrap();
    let full = insdel_distance(&words, 1 << 24).unwrap();
    let small = insdel_distance(&words[..400], 1 << 24).unwrap();
    assert!(full.distance <= small.distance);
    let mut best = (usize::MAX, 0, 0);
    for i in 0..400 {
        for j in i + 1..400 {
            let d = insdel_distance_pair(&words[i], &words[j]).unwrap();
            best = best.min((d, i, j));
        }
    }
    assert_eq!((small.distance, small.first, small.second), best);
}
