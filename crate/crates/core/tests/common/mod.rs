//! Test-only helpers: a naive floating-point correlation oracle written
//! directly from the two-branch definition, oracle-side pair checkers, and
//! random sequence generators.
#![allow(dead_code)]

use std::f64::consts::PI;

use rand::Rng;
use scp_core::{Entry, SparseSequence};

pub type C = (f64, f64);

pub const TOL: f64 = 1e-9;

/// Parses `"0.3..1"`: a digit is an exponent, `.` is a zero entry.
pub fn seq(q: u32, s: &str) -> SparseSequence {
    let entries: Vec<Option<u32>> = s
        .chars()
        .map(|c| {
            if c == '.' {
                None
            } else {
                Some(c.to_digit(10).unwrap())
            }
        })
        .collect();
    SparseSequence::from_exponents(q, &entries).unwrap()
}

pub fn exponents(s: &SparseSequence) -> Vec<Option<u32>> {
    s.entries().iter().map(|e| e.exponent()).collect()
}

pub fn to_complex(s: &SparseSequence) -> Vec<C> {
    let q = s.q() as f64;
    s.entries()
        .iter()
        .map(|e| match e {
            Entry::Zero => (0.0, 0.0),
            Entry::Root(x) => {
                let a = 2.0 * PI * *x as f64 / q;
                (a.cos(), a.sin())
            }
        })
        .collect()
}

fn mul_conj(a: C, b: C) -> C {
    (a.0 * b.0 + a.1 * b.1, a.1 * b.0 - a.0 * b.1)
}

/// Both branches of the aperiodic correlation, evaluated literally.
pub fn naive_rho(a: &[C], b: &[C], u: i64) -> C {
    let len = a.len() as i64;
    let mut acc = (0.0, 0.0);
    if u >= 0 {
        for i in 0..len - u {
            let p = mul_conj(a[(i + u) as usize], b[i as usize]);
            acc = (acc.0 + p.0, acc.1 + p.1);
        }
    } else {
        for i in 0..len + u {
            let p = mul_conj(a[i as usize], b[(i - u) as usize]);
            acc = (acc.0 + p.0, acc.1 + p.1);
        }
    }
    acc
}

pub fn near(v: C, target: C) -> bool {
    (v.0 - target.0).abs() < TOL && (v.1 - target.1).abs() < TOL
}

pub fn is_small(v: C) -> bool {
    near(v, (0.0, 0.0))
}

/// Floating-point check of both pair conditions at zone `z`.
pub fn oracle_scp(c0: &SparseSequence, c1: &SparseSequence, z: usize) -> bool {
    let (a, b) = (to_complex(c0), to_complex(c1));
    let len = a.len() as i64;
    let z = z as i64;
    let n = [c0.nonzero_count() as f64, c1.nonzero_count() as f64];
    if !(c0.is_trimmed() && c1.is_trimmed()) || c0.zero_count() != c1.zero_count() || z > len {
        return false;
    }
    for u in -(len - 1)..len {
        let ra = naive_rho(&a, &a, u);
        let rb = naive_rho(&b, &b, u);
        let sum = (ra.0 + rb.0, ra.1 + rb.1);
        if u == 0 {
            if !near(ra, (n[0], 0.0)) || !near(rb, (n[1], 0.0)) || !near(sum, (n[0] + n[1], 0.0)) {
                return false;
            }
        } else if !is_small(sum) {
            return false;
        }
        if u.abs() < z {
            if u != 0 && (!is_small(ra) || !is_small(rb)) {
                return false;
            }
            if !is_small(naive_rho(&a, &b, u)) {
                return false;
            }
        }
    }
    true
}

/// Floating-point check of the mate conditions at zone `z`.
pub fn oracle_mate(
    pair: (&SparseSequence, &SparseSequence),
    mate: (&SparseSequence, &SparseSequence),
    z: usize,
) -> bool {
    let c = [to_complex(pair.0), to_complex(pair.1)];
    let s = [to_complex(mate.0), to_complex(mate.1)];
    let len = c[0].len() as i64;
    if z as i64 > len {
        return false;
    }
    for u in -(len - 1)..len {
        let x = naive_rho(&c[0], &s[0], u);
        let y = naive_rho(&c[1], &s[1], u);
        if !is_small((x.0 + y.0, x.1 + y.1)) {
            return false;
        }
        if u.abs() < z as i64 {
            for ck in &c {
                for sk in &s {
                    if !is_small(naive_rho(ck, sk, u)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Random sequence of length `len` over `q` with zero density about
/// `zero_prob`; boundary entries are forced non-zero.
pub fn random_sequence<R: Rng>(rng: &mut R, q: u32, len: usize, zero_prob: f64) -> SparseSequence {
    let entries: Vec<Option<u32>> = (0..len)
        .map(|i| {
            let boundary = i == 0 || i + 1 == len;
            if !boundary && rng.gen_bool(zero_prob) {
                None
            } else {
                Some(rng.gen_range(0..q))
            }
        })
        .collect();
    SparseSequence::from_exponents(q, &entries).unwrap()
}

/// Random valid construction parameters: `q` from `qs`, `m` in `m_range`,
/// uniformly random `t`, a permutation satisfying the ordering constraint,
/// random `d` and `g`.
pub fn random_params<R: Rng>(
    rng: &mut R,
    qs: &[u32],
    m_range: std::ops::RangeInclusive<usize>,
) -> scp_core::ScpParams {
    use rand::seq::SliceRandom;
    let q = *qs.choose(rng).unwrap();
    let m = rng.gen_range(m_range);
    let t = rng.gen_range(0..m);
    let mut pi: Vec<usize> = (1..=m).collect();
    loop {
        pi.shuffle(rng);
        if pi[..t].iter().all(|&v| v < pi[m - 1]) {
            break;
        }
    }
    let d = (0..t).map(|_| rng.gen_range(0..2u8)).collect();
    let g = (0..=m).map(|_| rng.gen_range(0..q)).collect();
    scp_core::ScpParams::new(q, m, t, pi, d, g).unwrap()
}
