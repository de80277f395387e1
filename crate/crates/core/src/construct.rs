//! Sparse complementary pairs and their mates from restricted quadratic GBFs.
//!
//! Parameters: an even alphabet `q`, `m` variables, a permutation `pi` of
//! `1..=m` whose first `t` images are the restricted variables, binary values
//! `d` for them and linear coefficients `g_0, ..., g_m`. The function is
//!
//! ```text
//! f = q/2 * ( sum_{l=1}^{t-1} d_l d_{l+1}
//!           + sum_{l=t+1}^{m-1} x_{pi(l)} x_{pi(l+1)}
//!           + d_t x_{pi(t+1)} )
//!     + sum_{l=1}^{m} g_l x_l + g_0
//! ```
//!
//! and the pair is `(f, f + q/2 x_{pi(t+1)})` restricted to
//! `x_{pi(1..=t)} = d` and truncated. The mate adds `q/2 x_{pi(m)}` to both.
//! With `pi(m) > pi(alpha)` for every restricted `alpha`, the result has
//! length `L = sum_{alpha > t} 2^{pi(alpha)-1} + 1`, zero-correlation zone
//! `Z = sum_{alpha <= t} 2^{pi(alpha)-1} + 1` and `L + Z = 2^m + 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rgbf::{
    check_alphabet, truncate, truncation_bounds, GeneralizedBooleanFunction, Restriction,
    SparseSequence, Sparsity, Term, MAX_VARIABLES,
};

/// Construction parameters. All indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ParamsSpec")]
pub struct ScpParams {
    q: u32,
    m: usize,
    t: usize,
    pi: Vec<usize>,
    d: Vec<u8>,
    g: Vec<u32>,
}

impl ScpParams {
    /// Validated parameters, including the ordering constraint
    /// `pi(m) > pi(alpha)` for `1 <= alpha <= t`.
    ///
    /// `d` and `g` may be empty, meaning all zero.
    pub fn new(
        q: u32,
        m: usize,
        t: usize,
        pi: Vec<usize>,
        d: Vec<u8>,
        g: Vec<u32>,
    ) -> Result<Self> {
        let p = Self::new_unconstrained(q, m, t, pi, d, g)?;
        p.check_order_constraint()?;
        Ok(p)
    }

    /// Like [`ScpParams::new`] but skips the ordering constraint on `pi`.
    /// Only useful for showing that the constraint is needed.
    pub fn new_unconstrained(
        q: u32,
        m: usize,
        t: usize,
        pi: Vec<usize>,
        d: Vec<u8>,
        g: Vec<u32>,
    ) -> Result<Self> {
        check_alphabet(q)?;
        if m == 0 || m > MAX_VARIABLES {
            return Err(Error::InvalidVariableCount {
                m,
                max: MAX_VARIABLES,
            });
        }
        if t >= m {
            return Err(Error::InvalidParams(format!(
                "t={t} must satisfy t <= m-1 = {}",
                m - 1
            )));
        }
        if pi.len() != m {
            return Err(Error::InvalidPermutation(format!(
                "expected {m} entries, got {}",
                pi.len()
            )));
        }
        let mut seen = vec![false; m + 1];
        for &v in &pi {
            if v == 0 || v > m || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{pi:?} is not a permutation of 1..={m}"
                )));
            }
            seen[v] = true;
        }
        let d = if d.is_empty() { vec![0; t] } else { d };
        if d.len() != t {
            return Err(Error::InvalidParams(format!(
                "d has {} entries, expected t={t}",
                d.len()
            )));
        }
        if d.iter().any(|&v| v > 1) {
            return Err(Error::InvalidParams(format!("d={d:?} must be binary")));
        }
        let g = if g.is_empty() { vec![0; m + 1] } else { g };
        if g.len() != m + 1 {
            return Err(Error::InvalidParams(format!(
                "g has {} entries, expected m+1={} (g_0..g_m)",
                g.len(),
                m + 1
            )));
        }
        let g = g.into_iter().map(|x| x % q).collect();
        Ok(ScpParams { q, m, t, pi, d, g })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn pi(&self) -> &[usize] {
        &self.pi
    }

    pub fn d(&self) -> &[u8] {
        &self.d
    }

    pub fn g(&self) -> &[u32] {
        &self.g
    }

    /// `pi(alpha)`, 1-based.
    fn pi_at(&self, alpha: usize) -> usize {
        self.pi[alpha - 1]
    }

    /// Restricted variable indices `pi(1), ..., pi(t)` in order.
    pub fn restricted(&self) -> &[usize] {
        &self.pi[..self.t]
    }

    pub fn restriction(&self) -> Restriction {
        Restriction::new(self.restricted().to_vec(), self.d.clone())
            .expect("validated permutation yields a valid restriction")
    }

    pub fn check_order_constraint(&self) -> Result<()> {
        let last = self.pi_at(self.m);
        for alpha in 1..=self.t {
            if self.pi_at(alpha) > last {
                return Err(Error::OrderConstraint {
                    m: self.m,
                    last,
                    alpha,
                    restricted: self.pi_at(alpha),
                });
            }
        }
        Ok(())
    }

    /// Extra conditions for the mate: `t <= m-2` and
    /// `pi(m-1) > pi(alpha)` for `1 <= alpha <= t`.
    pub fn check_mate_constraint(&self) -> Result<()> {
        if self.t + 2 > self.m {
            return Err(Error::MateRestrictionTooLarge {
                t: self.t,
                m: self.m,
            });
        }
        let second_last = self.pi_at(self.m - 1);
        for alpha in 1..=self.t {
            if self.pi_at(alpha) > second_last {
                return Err(Error::MateOrderConstraint {
                    m_minus_one: self.m - 1,
                    second_last,
                    alpha,
                    restricted: self.pi_at(alpha),
                });
            }
        }
        Ok(())
    }

    /// `L = sum_{alpha=t+1}^{m} 2^{pi(alpha)-1} + 1`.
    pub fn length(&self) -> usize {
        self.pi[self.t..]
            .iter()
            .map(|&v| 1usize << (v - 1))
            .sum::<usize>()
            + 1
    }

    /// `Z = sum_{alpha=1}^{t} 2^{pi(alpha)-1} + 1`.
    pub fn zcz(&self) -> usize {
        self.restricted()
            .iter()
            .map(|&v| 1usize << (v - 1))
            .sum::<usize>()
            + 1
    }

    /// `2^{m-t}` non-zero entries per sequence.
    pub fn nonzero_count(&self) -> usize {
        1 << (self.m - self.t)
    }

    /// `(L - 2^{m-t}) / L`.
    pub fn sparsity(&self) -> Sparsity {
        Sparsity {
            zeros: self.length() - self.nonzero_count(),
            length: self.length(),
        }
    }
}

/// JSON parameter forms: explicit `{q, m, t, pi, d, g}` or
/// `{q, m, restricted, d, g}` with the canonical permutation.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ParamsSpec {
    Explicit {
        q: u32,
        m: usize,
        t: usize,
        pi: Vec<usize>,
        #[serde(default)]
        d: Vec<u8>,
        #[serde(default)]
        g: Vec<u32>,
    },
    Restricted {
        q: u32,
        m: usize,
        restricted: Vec<usize>,
        #[serde(default)]
        d: Vec<u8>,
        #[serde(default)]
        g: Vec<u32>,
    },
}

impl TryFrom<ParamsSpec> for ScpParams {
    type Error = Error;

    fn try_from(spec: ParamsSpec) -> Result<Self> {
        match spec {
            ParamsSpec::Explicit { q, m, t, pi, d, g } => ScpParams::new(q, m, t, pi, d, g),
            ParamsSpec::Restricted {
                q,
                m,
                restricted,
                d,
                g,
            } => params_from_restricted_set(m, q, &restricted, d, g),
        }
    }
}

/// Builds the canonical permutation: restricted indices ascending, then the
/// unrestricted ones ascending. Valid exactly when `m` is not restricted.
pub fn params_from_restricted_set(
    m: usize,
    q: u32,
    restricted: &[usize],
    d: Vec<u8>,
    g: Vec<u32>,
) -> Result<ScpParams> {
    let mut chosen = restricted.to_vec();
    chosen.sort_unstable();
    if chosen.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidRestriction(format!(
            "{restricted:?} lists a variable twice"
        )));
    }
    if let Some(&index) = chosen.iter().find(|&&v| v == 0 || v > m) {
        return Err(Error::VariableOutOfRange { index, m });
    }
    let mut pi = chosen.clone();
    pi.extend((1..=m).filter(|v| !chosen.contains(v)));
    ScpParams::new(q, m, chosen.len(), pi, d, g)
}

/// The unrestricted quadratic GBF behind the pair. The `d`-dependent parts
/// appear as a constant and a linear term.
pub fn theorem1_function(p: &ScpParams) -> Result<GeneralizedBooleanFunction> {
    p.check_order_constraint()?;
    build_function(p)
}

fn build_function(p: &ScpParams) -> Result<GeneralizedBooleanFunction> {
    let half = p.q / 2;
    let mut terms = Vec::new();
    let d_chain: u32 = p.d.windows(2).map(|w| (w[0] * w[1]) as u32).sum();
    terms.push(Term::new(half * d_chain, []));
    for l in p.t + 1..p.m {
        terms.push(Term::new(half, [p.pi_at(l), p.pi_at(l + 1)]));
    }
    if let Some(&d_t) = p.d.last() {
        terms.push(Term::new(half * d_t as u32, [p.pi_at(p.t + 1)]));
    }
    for l in 1..=p.m {
        if p.g[l] != 0 {
            terms.push(Term::new(p.g[l], [l]));
        }
    }
    if p.g[0] != 0 {
        terms.push(Term::new(p.g[0], []));
    }
    GeneralizedBooleanFunction::from_terms(p.q, p.m, terms)
}

/// Two sequences sharing length and alphabet, with the parameters that built
/// them. Not verified on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScpPair {
    pub params: ScpParams,
    pub c0: SparseSequence,
    pub c1: SparseSequence,
}

impl ScpPair {
    pub fn len(&self) -> usize {
        self.c0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c0.is_empty()
    }

    pub fn q(&self) -> u32 {
        self.c0.q()
    }

    pub fn sequence(&self, k: usize) -> &SparseSequence {
        match k {
            0 => &self.c0,
            1 => &self.c1,
            _ => panic!("pair index {k} out of range"),
        }
    }
}

fn restrict_truncate(f: &GeneralizedBooleanFunction, p: &ScpParams) -> Result<SparseSequence> {
    let r = p.restriction();
    let (k0, k1) = truncation_bounds(&r, p.m)?;
    truncate(&f.restrict(&r)?, k0, k1)
}

fn pair_from(f: &GeneralizedBooleanFunction, p: &ScpParams) -> Result<ScpPair> {
    let half = p.q / 2;
    let g = f.with_term(half, [p.pi_at(p.t + 1)])?;
    Ok(ScpPair {
        params: p.clone(),
        c0: restrict_truncate(f, p)?,
        c1: restrict_truncate(&g, p)?,
    })
}

/// `(C0, C1) = (f|_{X=d}, (f + q/2 x_{pi(t+1)})|_{X=d})`, truncated to length `L`.
pub fn construct_scp(p: &ScpParams) -> Result<ScpPair> {
    p.check_order_constraint()?;
    construct_scp_unchecked(p)
}

/// [`construct_scp`] without the ordering constraint check.
pub fn construct_scp_unchecked(p: &ScpParams) -> Result<ScpPair> {
    pair_from(&build_function(p)?, p)
}

/// `(S0, S1) = ((f + q/2 x_{pi(m)})|_{X=d}, (f + q/2 x_{pi(t+1)} + q/2 x_{pi(m)})|_{X=d})`.
pub fn theorem2_mate(p: &ScpParams) -> Result<ScpPair> {
    p.check_order_constraint()?;
    p.check_mate_constraint()?;
    let f = build_function(p)?.with_term(p.q / 2, [p.pi_at(p.m)])?;
    pair_from(&f, p)
}
