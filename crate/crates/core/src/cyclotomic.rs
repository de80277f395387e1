//! Exact arithmetic on integer combinations of `q`-th roots of unity.
//!
//! A value `sum_e counts[e] * xi^e` (with `xi = exp(2 pi i / q)`) is zero
//! exactly when the polynomial `sum_e counts[e] x^e` is divisible by the
//! cyclotomic polynomial `Phi_q(x)`. For `q = 2^k`, `Phi_q = x^{q/2} + 1` and
//! the reduction is a single fold.
//!
//! Counts are `i64`: every value produced by correlating sequences of length
//! `L <= 2^16` has `|counts[e]| <= 2L`.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

/// `sum_e counts[e] * xi^e` over the `q`-th roots of unity.
#[derive(Clone, Serialize, Deserialize)]
pub struct CyclotomicInt {
    q: u32,
    counts: Vec<i64>,
}

impl CyclotomicInt {
    pub fn zero(q: u32) -> Self {
        assert!(q >= 1, "alphabet size must be positive");
        CyclotomicInt {
            q,
            counts: vec![0; q as usize],
        }
    }

    /// The rational integer `n`, i.e. `n * xi^0`.
    pub fn from_integer(q: u32, n: i64) -> Self {
        let mut v = Self::zero(q);
        v.counts[0] = n;
        v
    }

    /// `xi^e`, exponent taken mod `q`.
    pub fn root(q: u32, e: i64) -> Self {
        let mut v = Self::zero(q);
        v.add_root(e, 1);
        v
    }

    /// Builds from a raw count vector of length `q`.
    pub fn from_counts(counts: Vec<i64>) -> Self {
        assert!(!counts.is_empty(), "count vector must be non-empty");
        CyclotomicInt {
            q: counts.len() as u32,
            counts,
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    /// Adds `coeff * xi^e` in place.
    pub fn add_root(&mut self, e: i64, coeff: i64) {
        let idx = e.rem_euclid(self.q as i64) as usize;
        self.counts[idx] += coeff;
    }

    /// Complex conjugate: `xi^e -> xi^{-e}`.
    pub fn conj(&self) -> Self {
        let q = self.q as usize;
        let mut counts = vec![0; q];
        for (e, &c) in self.counts.iter().enumerate() {
            counts[(q - e) % q] += c;
        }
        CyclotomicInt { q: self.q, counts }
    }

    /// Canonical coordinates: the remainder of the count polynomial modulo
    /// `Phi_q`, of length `phi(q)`. Two values are equal iff their reductions
    /// agree.
    pub fn reduce(&self) -> Vec<i64> {
        let q = self.q as usize;
        if self.q.is_power_of_two() && q >= 2 {
            let half = q / 2;
            return (0..half)
                .map(|e| self.counts[e] - self.counts[e + half])
                .collect();
        }
        let phi = cyclotomic_polynomial(self.q);
        let degree = phi.len() - 1;
        let mut rem = self.counts.clone();
        for i in (degree..rem.len()).rev() {
            let c = rem[i];
            if c != 0 {
                for (j, &p) in phi.iter().enumerate() {
                    rem[i - degree + j] -= c * p;
                }
            }
        }
        rem.truncate(degree);
        rem
    }

    /// Exact test for `sum counts[e] xi^e == 0`.
    pub fn is_zero(&self) -> bool {
        self.reduce().iter().all(|&c| c == 0)
    }

    /// Whether the value equals the rational integer `n`.
    pub fn equals_integer(&self, n: i64) -> bool {
        (self - &CyclotomicInt::from_integer(self.q, n)).is_zero()
    }

    /// Floating-point embedding `sum counts[e] exp(2 pi i e / q)`, for
    /// display and export only.
    pub fn to_complex(&self) -> (f64, f64) {
        let q = self.q as f64;
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold((0.0, 0.0), |(re, im), (e, &c)| {
                let angle = 2.0 * PI * e as f64 / q;
                (re + c as f64 * angle.cos(), im + c as f64 * angle.sin())
            })
    }

    pub fn magnitude(&self) -> f64 {
        let (re, im) = self.to_complex();
        re.hypot(im)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(i64, i64) -> i64) -> Self {
        assert_eq!(
            self.q, other.q,
            "mixing cyclotomic values of different order"
        );
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| op(a, b))
            .collect();
        CyclotomicInt { q: self.q, counts }
    }
}

impl PartialEq for CyclotomicInt {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && (self - other).is_zero()
    }
}

impl Eq for CyclotomicInt {}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicInt(q={}, {})", self.q, self)
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .reduce()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| match e {
                0 => c.to_string(),
                _ => format!("{c}ξ^{e}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add for CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: CyclotomicInt) -> CyclotomicInt {
        &self + &rhs
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Sub for CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, rhs: CyclotomicInt) -> CyclotomicInt {
        &self - &rhs
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        CyclotomicInt {
            q: self.q,
            counts: self.counts.iter().map(|c| -c).collect(),
        }
    }
}

/// Coefficients of `Phi_n(x)`, lowest degree first. Computed once per `n` by
/// dividing `x^n - 1` by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u32) -> Arc<[i64]> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<[i64]>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "cyclotomic polynomial order must be positive");
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        poly = exact_divide(&poly, &cyclotomic_polynomial(d));
    }
    let poly: Arc<[i64]> = poly.into();
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

/// Quotient of `num / den` for monic `den` dividing `num` exactly.
fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "division was not exact");
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(&*cyclotomic_polynomial(1), &[-1, 1]);
        assert_eq!(&*cyclotomic_polynomial(2), &[1, 1]);
        assert_eq!(&*cyclotomic_polynomial(4), &[1, 0, 1]);
        assert_eq!(&*cyclotomic_polynomial(6), &[1, -1, 1]);
        assert_eq!(&*cyclotomic_polynomial(8), &[1, 0, 0, 0, 1]);
        assert_eq!(&*cyclotomic_polynomial(12), &[1, 0, -1, 0, 1]);
        // Phi_30 has degree phi(30) = 8
        assert_eq!(cyclotomic_polynomial(30).len(), 9);
    }

    #[test]
    fn opposite_roots_cancel() {
        let mut v = CyclotomicInt::zero(4);
        v.add_root(0, 1);
        v.add_root(2, 1);
        assert!(v.is_zero());
        assert!(!CyclotomicInt::from_integer(4, 19).is_zero());
        assert!(CyclotomicInt::zero(8).is_zero());
    }

    #[test]
    fn cube_roots_sum_to_zero_in_q6() {
        // 1 + xi^2 + xi^4 = 0 for q = 6, a vanishing sum with no opposite pairs
        let mut v = CyclotomicInt::zero(6);
        for e in [0, 2, 4] {
            v.add_root(e, 1);
        }
        assert!(v.is_zero());
        let (re, im) = v.to_complex();
        assert!(re.abs() < 1e-12 && im.abs() < 1e-12);
        let mut w = CyclotomicInt::zero(6);
        for e in [0, 2] {
            w.add_root(e, 1);
        }
        assert!(!w.is_zero());
    }

    #[test]
    fn embedding() {
        assert_eq!(CyclotomicInt::zero(4).to_complex(), (0.0, 0.0));
        assert_eq!(CyclotomicInt::from_integer(4, 19).to_complex(), (19.0, 0.0));
        let (re, im) = CyclotomicInt::root(4, 1).to_complex();
        assert!(re.abs() < 1e-15);
        assert!((im - 1.0).abs() < 1e-15);
    }

    #[test]
    fn conjugate_and_equality() {
        let a = CyclotomicInt::root(8, 3);
        assert_eq!(a.conj(), CyclotomicInt::root(8, 5));
        // xi^0 == -xi^2 over q = 4, different representations
        assert_eq!(CyclotomicInt::root(4, 0), -&CyclotomicInt::root(4, 2));
        assert!(CyclotomicInt::from_integer(4, 3).equals_integer(3));
        assert_eq!(CyclotomicInt::root(4, -1), CyclotomicInt::root(4, 3));
    }

    #[test]
    fn display_uses_reduced_form() {
        let mut v = CyclotomicInt::zero(4);
        v.add_root(0, 2);
        v.add_root(2, 1);
        v.add_root(3, 1);
        assert_eq!(v.to_string(), "1 + -1ξ^1");
        assert_eq!(CyclotomicInt::zero(4).to_string(), "0");
    }
}
