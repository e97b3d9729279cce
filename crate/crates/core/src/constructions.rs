//! Explicit code families: palindromic `[2k, k]` codes, the `[2k+1, k]`
//! family with a middle parity column, and a two-dimensional RS code with
//! doubling exponents.

use alloc::format;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::LinearCode;
use crate::gf::{Elem, Field};
use crate::{Error, Result};

/// The `[2k, k]` code of all palindromes: row `i` is `e_i + e_{2k-1-i}`.
pub fn palindrome_code(field: &Arc<Field>, k: usize) -> Result<LinearCode> {
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".to_string()));
    }
    let n = 2 * k;
    let rows: Vec<Vec<Elem>> = (0..k)
        .map(|i| {
            let mut row = vec![Elem::ZERO; n];
            row[i] = Elem::ONE;
            row[n - 1 - i] = Elem::ONE;
            row
        })
        .collect();
    LinearCode::from_rows(field, &rows)
}

/// One condition of the odd-length family. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaCondition {
    pub t: usize,
    /// `{i in t..=k : k - i odd}`
    pub odd: Vec<usize>,
    /// `{i in t..=k : k - i even}`
    pub even: Vec<usize>,
    /// Sum of `a_i` over `odd` minus the sum over `even`.
    pub value: Elem,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop1Report {
    pub k: usize,
    pub sum: Elem,
    pub sum_holds: bool,
    pub conditions: Vec<OmegaCondition>,
}

impl Prop1Report {
    pub fn valid(&self) -> bool {
        self.sum_holds && self.conditions.iter().all(|c| c.holds)
    }

    /// Every `t` whose condition fails.
    pub fn violations(&self) -> Vec<usize> {
        self.conditions.iter().filter(|c| !c.holds).map(|c| c.t).collect()
    }
}

/// Evaluates `sum a_i != 1` and the `k` alternating-sum conditions.
pub fn check_prop1_conditions(field: &Field, a: &[Elem]) -> Prop1Report {
    let k = a.len();
    let sum = a.iter().fold(Elem::ZERO, |s, &x| field.add(s, x));
    let conditions = (1..=k)
        .map(|t| {
            let (odd, even): (Vec<usize>, Vec<usize>) = (t..=k).partition(|i| (k - i) % 2 == 1);
            let total = |idx: &[usize]| idx.iter().fold(Elem::ZERO, |s, &i| field.add(s, a[i - 1]));
            let value = field.sub(total(&odd), total(&even));
            OmegaCondition {
                t,
                odd,
                even,
                value,
                holds: value != Elem::ONE,
            }
        })
        .collect();
    Prop1Report {
        k,
        sum,
        sum_holds: sum != Elem::ONE,
        conditions,
    }
}

/// The `[2k+1, k]` code with generator rows `e_i + a_i e_{k+1} + e_{2k+2-i}`
/// (1-based), so every codeword has `c_{k+1} = sum a_i c_i` and is a
/// palindrome outside the middle coordinate.
pub fn odd_length_code(field: &Arc<Field>, a: &[Elem]) -> Result<LinearCode> {
    let k = a.len();
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".to_string()));
    }
    field.check_all(a)?;
    let report = check_prop1_conditions(field, a);
    if !report.valid() {
        let mut failed = Vec::new();
        if !report.sum_holds {
            failed.push("sum".to_string());
        }
        failed.extend(report.violations().iter().map(|t| format!("t={t}")));
        return Err(Error::InvalidParameters(format!(
            "coefficient vector violates: {}",
            failed.join(", ")
        )));
    }
    let n = 2 * k + 1;
    let rows: Vec<Vec<Elem>> = (0..k)
        .map(|i| {
            let mut row = vec![Elem::ZERO; n];
            row[i] = Elem::ONE;
            row[k] = a[i];
            row[n - 1 - i] = Elem::ONE;
            row
        })
        .collect();
    LinearCode::from_rows(field, &rows)
}

/// Default coefficients: `a_{k-1}` is the least element outside `{0, 1}` and
/// every other `a_i` is zero. For `k = 1` there is no index `k - 1`; the least
/// `a_1` satisfying the conditions is used instead, which is `0`.
pub fn default_odd_coefficients(field: &Field, k: usize) -> Result<Vec<Elem>> {
    if field.order() == 2 {
        return Err(Error::InvalidParameters(
            "the default coefficients need a field with more than two elements".to_string(),
        ));
    }
    match k {
        0 => Err(Error::InvalidParameters("k must be at least 1".to_string())),
        1 => field
            .elements()
            .map(|x| vec![x])
            .find(|a| check_prop1_conditions(field, a).valid())
            .ok_or_else(|| Error::InvalidParameters("no valid coefficient for k = 1".to_string())),
        _ => {
            let mut a = vec![Elem::ZERO; k];
            a[k - 2] = field.element(2)?;
            Ok(a)
        }
    }
}

pub fn default_odd_length(field: &Arc<Field>, k: usize) -> Result<LinearCode> {
    let a = default_odd_coefficients(field, k)?;
    odd_length_code(field, &a)
}

/// The code `{(l + m θ^{i_1}, ..., l + m θ^{i_n})}` over `GF(p^e)` with
/// `i_j = 2^{j-1}` and `θ` the field's primitive element. Requires
/// `3 * 2^{n-2} < e`.
pub fn rs_two_dim_example(p: u32, e: u32, n: usize) -> Result<LinearCode> {
    if n < 2 {
        return Err(Error::InvalidParameters("length must be at least 2".to_string()));
    }
    let shift = u32::try_from(n - 2).ok().filter(|&s| s < 32);
    let fits = shift.is_some_and(|s| 3u64 << s < u64::from(e));
    if !fits {
        return Err(Error::InvalidParameters(format!(
            "need 3 * 2^(n-2) < e, got n = {n}, e = {e}"
        )));
    }
    let field = Arc::new(Field::new(p, e, None)?);
    let ones = vec![Elem::ONE; n];
    let powers: Vec<Elem> = (0..n).map(|j| field.w_pow(1u64 << j)).collect();
    LinearCode::from_rows(&field, &[ones, powers])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Arc<Field> {
        Arc::new(Field::prime(p).unwrap())
    }

    #[test]
    fn palindromes() {
        let f = gf(3);
        let c = palindrome_code(&f, 3).unwrap();
        assert_eq!((c.n(), c.k()), (6, 3));
        for w in c.all_codewords(1000).unwrap() {
            assert!((0..6).all(|i| w[i] == w[5 - i]));
        }
        assert!(c.contains_all_ones().is_some());
        assert!(palindrome_code(&f, 0).is_err());
    }

    #[test]
    fn omega_sets() {
        let f = gf(3);
        let a = vec![Elem::ZERO, Elem::ONE, Elem::ZERO, Elem::ZERO];
        let r = check_prop1_conditions(&f, &a);
        assert_eq!(r.conditions[0].odd, vec![1, 3]);
        assert_eq!(r.conditions[0].even, vec![2, 4]);
        assert_eq!(r.conditions[2].odd, vec![3]);
        assert_eq!(r.conditions[2].even, vec![4]);
        // t = 1, 2: value a_3 - (a_2 + a_4) = -1 = 2; sum is 1
        assert!(!r.sum_holds);
        assert!(!r.valid());
    }

    #[test]
    fn zero_vector_is_valid() {
        let f = gf(5);
        let r = check_prop1_conditions(&f, &[Elem::ZERO; 4]);
        assert!(r.valid());
        assert!(r.conditions.iter().all(|c| c.value.is_zero()));
    }

    #[test]
    fn odd_length_shape() {
        let f = gf(3);
        let a = vec![Elem::ZERO, f.element(2).unwrap(), Elem::ZERO];
        let c = odd_length_code(&f, &a).unwrap();
        assert_eq!(c.n(), 7);
        assert!(c.contains_all_ones().is_none());
        for w in c.all_codewords(1000).unwrap() {
            let mid = (0..3).fold(Elem::ZERO, |s, i| f.add(s, f.mul(a[i], w[i])));
            assert_eq!(w[3], mid);
            assert!((4..7).all(|j| w[j] == w[6 - j]));
        }
        assert!(odd_length_code(&f, &[Elem::ONE, Elem::ZERO]).is_err());
    }

    #[test]
    fn defaults() {
        let f = gf(3);
        assert_eq!(default_odd_coefficients(&f, 2).unwrap(), vec![f.element(2).unwrap(), Elem::ZERO]);
        assert_eq!(default_odd_coefficients(&f, 1).unwrap(), vec![Elem::ZERO]);
        assert!(default_odd_length(&gf(2), 3).is_err());
        let f49 = Arc::new(Field::new(7, 2, None).unwrap());
        let a = default_odd_coefficients(&f49, 5).unwrap();
        assert!(check_prop1_conditions(&f49, &a).valid());
        assert_eq!(default_odd_length(&f49, 5).unwrap().n(), 11);
    }

    #[test]
    fn rs_example() {
        let c = rs_two_dim_example(2, 7, 3).unwrap();
        assert_eq!((c.n(), c.k()), (3, 2));
        assert_eq!(c.hamming_distance(1 << 20).unwrap().distance, 2);
        assert!(rs_two_dim_example(2, 6, 3).is_err());
        assert!(rs_two_dim_example(2, 7, 1).is_err());
    }
}
