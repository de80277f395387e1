//! Aperiodic correlation of sparse sequences, computed exactly.
//!
//! For `0 <= u < L`, `rho(a, b; u) = sum_{i=0}^{L-1-u} a_{i+u} conj(b_i)`.
//! Negative shifts go through `rho(a, b; -u) = conj(rho(b, a; u))`. Zero
//! entries contribute nothing; a product of two roots `xi^x conj(xi^y)`
//! contributes `xi^{x-y}`.

use std::io::{self, Write};

use crate::cyclotomic::CyclotomicInt;
use crate::error::{Error, Result};
use crate::rgbf::SparseSequence;

fn check_compatible(a: &SparseSequence, b: &SparseSequence) -> Result<()> {
    if a.q() != b.q() {
        return Err(Error::AlphabetMismatch(a.q(), b.q()));
    }
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(())
}

/// `rho(a, b; u)` for `u >= 0`, assuming compatible inputs.
fn forward(a: &SparseSequence, b: &SparseSequence, u: usize) -> CyclotomicInt {
    let mut acc = CyclotomicInt::zero(a.q());
    let (ae, be) = (a.entries(), b.entries());
    for i in 0..a.len().saturating_sub(u) {
        if let (Some(x), Some(y)) = (ae[i + u].exponent(), be[i].exponent()) {
            acc.add_root(x as i64 - y as i64, 1);
        }
    }
    acc
}

/// Aperiodic cross-correlation `rho(a, b; u)` for `|u| < L`.
pub fn cross_correlation(a: &SparseSequence, b: &SparseSequence, u: i64) -> Result<CyclotomicInt> {
    check_compatible(a, b)?;
    let len = a.len();
    if u.unsigned_abs() as usize >= len {
        return Err(Error::ShiftOutOfRange { shift: u, len });
    }
    if u >= 0 {
        Ok(forward(a, b, u as usize))
    } else {
        Ok(forward(b, a, u.unsigned_abs() as usize).conj())
    }
}

/// Aperiodic autocorrelation `rho(a; u)`.
pub fn autocorrelation(a: &SparseSequence, u: i64) -> Result<CyclotomicInt> {
    cross_correlation(a, a, u)
}

/// Negative-shift branch of the definition evaluated literally:
/// `sum_{i=0}^{L-1+u} a_i conj(b_{i-u})`.
fn backward_direct(a: &SparseSequence, b: &SparseSequence, u: i64) -> CyclotomicInt {
    let mut acc = CyclotomicInt::zero(a.q());
    let shift = u.unsigned_abs() as usize;
    let (ae, be) = (a.entries(), b.entries());
    for i in 0..a.len() - shift {
        if let (Some(x), Some(y)) = (ae[i].exponent(), be[i + shift].exponent()) {
            acc.add_root(x as i64 - y as i64, 1);
        }
    }
    acc
}

/// Checks `rho(a, b; u) == conj(rho(b, a; -u))` for every `|u| < L`, and that
/// negative shifts agree with the literal second branch of the definition.
pub fn conj_symmetry_check(a: &SparseSequence, b: &SparseSequence) -> Result<bool> {
    check_compatible(a, b)?;
    let len = a.len() as i64;
    for u in -(len - 1)..len {
        let lhs = cross_correlation(a, b, u)?;
        let rhs = cross_correlation(b, a, -u)?.conj();
        if lhs != rhs {
            return Ok(false);
        }
        if u < 0 && lhs != backward_direct(a, b, u) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Correlation values for every shift `-(L-1) ..= L-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationProfile {
    len: usize,
    values: Vec<CyclotomicInt>,
}

impl CorrelationProfile {
    fn from_fn(len: usize, f: impl Fn(i64) -> CyclotomicInt + Sync) -> Self {
        let lo = -(len as i64 - 1);
        let hi = len as i64;
        #[cfg(feature = "parallel")]
        let values = {
            use rayon::prelude::*;
            (lo..hi).into_par_iter().map(&f).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let values = (lo..hi).map(&f).collect();
        CorrelationProfile { len, values }
    }

    /// Sequence length `L`; shifts range over `|u| < L`.
    pub fn sequence_len(&self) -> usize {
        self.len
    }

    pub fn get(&self, u: i64) -> Option<&CyclotomicInt> {
        let idx = u + self.len as i64 - 1;
        if idx < 0 {
            return None;
        }
        self.values.get(idx as usize)
    }

    /// `(u, value)` pairs in increasing `u`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &CyclotomicInt)> {
        let lo = -(self.len as i64 - 1);
        self.values
            .iter()
            .enumerate()
            .map(move |(i, v)| (lo + i as i64, v))
    }

    /// Pointwise sum of two profiles over the same length.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len, other.len));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CorrelationProfile {
            len: self.len,
            values,
        })
    }

    /// CSV with columns `u,re,im,magnitude,is_exact_zero`. Exactly-zero values
    /// are written as `0`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "u,re,im,magnitude,is_exact_zero")?;
        for (u, v) in self.iter() {
            if v.is_zero() {
                writeln!(out, "{u},0,0,0,true")?;
            } else {
                let (re, im) = v.to_complex();
                writeln!(out, "{u},{re},{im},{},false", re.hypot(im))?;
            }
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("csv output is ASCII")
    }
}

/// `rho(a, b; u)` for every shift.
pub fn cross_profile(a: &SparseSequence, b: &SparseSequence) -> Result<CorrelationProfile> {
    check_compatible(a, b)?;
    Ok(CorrelationProfile::from_fn(a.len(), |u| {
        if u >= 0 {
            forward(a, b, u as usize)
        } else {
            forward(b, a, u.unsigned_abs() as usize).conj()
        }
    }))
}

pub fn auto_profile(a: &SparseSequence) -> CorrelationProfile {
    cross_profile(a, a).expect("a sequence is compatible with itself")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(q: u32, e: &[Option<u32>]) -> SparseSequence {
        SparseSequence::from_exponents(q, e).unwrap()
    }

    #[test]
    fn zero_shift_counts_nonzero_entries() {
        let a = seq(4, &[Some(1), None, Some(3), Some(2), None, Some(0)]);
        let v = autocorrelation(&a, 0).unwrap();
        assert!(v.equals_integer(4));
    }

    #[test]
    fn shift_out_of_range_and_mismatch() {
        let a = seq(4, &[Some(1), Some(2)]);
        let b = seq(4, &[Some(1), Some(2), Some(0)]);
        assert!(matches!(
            cross_correlation(&a, &a, 2),
            Err(Error::ShiftOutOfRange { shift: 2, len: 2 })
        ));
        assert!(matches!(
            cross_correlation(&a, &a, -2),
            Err(Error::ShiftOutOfRange { .. })
        ));
        assert_eq!(
            cross_correlation(&a, &b, 0),
            Err(Error::LengthMismatch(2, 3))
        );
        let c = seq(2, &[Some(1), Some(0)]);
        assert_eq!(
            cross_correlation(&a, &c, 0),
            Err(Error::AlphabetMismatch(4, 2))
        );
    }

    #[test]
    fn hand_computed_shift() {
        // a = (xi^1, xi^2), b = (xi^0, xi^3), q = 4
        // rho(a,b;1) = a_1 conj(b_0) = xi^2
        // rho(a,b;-1) = a_0 conj(b_1) = xi^{1-3} = xi^2
        let a = seq(4, &[Some(1), Some(2)]);
        let b = seq(4, &[Some(0), Some(3)]);
        assert_eq!(
            cross_correlation(&a, &b, 1).unwrap(),
            CyclotomicInt::root(4, 2)
        );
        assert_eq!(
            cross_correlation(&a, &b, -1).unwrap(),
            CyclotomicInt::root(4, 2)
        );
        // rho(a,b;0) = xi^1 + xi^{-1} = 0
        assert!(cross_correlation(&a, &b, 0).unwrap().is_zero());
    }

    #[test]
    fn symmetry_on_single_entries() {
        let a = seq(4, &[Some(3)]);
        let b = seq(4, &[Some(1)]);
        assert!(conj_symmetry_check(&a, &b).unwrap());
    }

    #[test]
    fn profile_indexing_and_csv() {
        let a = seq(2, &[Some(0), Some(0)]);
        let b = seq(2, &[Some(0), Some(1)]);
        let p = auto_profile(&a).sum(&auto_profile(&b)).unwrap();
        assert_eq!(p.iter().map(|(u, _)| u).collect::<Vec<_>>(), vec![-1, 0, 1]);
        assert!(p.get(1).unwrap().is_zero());
        assert!(p.get(0).unwrap().equals_integer(4));
        assert!(p.get(2).is_none());
        assert!(p.get(-2).is_none());
        assert_eq!(
            p.to_csv_string(),
            "u,re,im,magnitude,is_exact_zero\n-1,0,0,0,true\n0,4,0,4,false\n1,0,0,0,true\n"
        );
    }
}
