//! Generalized Boolean functions and the sparse sequences they induce.
//!
//! A generalized Boolean function (GBF) maps `m` binary variables
//! `x_1, ..., x_m` to `Z_q`. Its sequence has length `2^m`; entry `i` is the
//! function evaluated at the binary expansion of `i`.
//!
//! **Bit convention.** Variable `x_l` is bit `l - 1` of the index, i.e.
//! `i = sum_l i_l * 2^(l-1)` and `x_1` is the least significant bit. Every
//! module in this crate uses this convention.
//!
//! Restricting a set of variables to fixed binary values zeroes every position
//! whose bits disagree with the restriction. The restricted sequence is then
//! truncated between its first and last non-zero entries.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported variable count. Keeps `2^m` and every correlation count
/// comfortably inside 64-bit arithmetic.
pub const MAX_VARIABLES: usize = 16;

pub(crate) fn check_alphabet(q: u32) -> Result<()> {
    if q < 2 || !q.is_multiple_of(2) {
        return Err(Error::InvalidAlphabet(q));
    }
    Ok(())
}

fn check_variable_count(m: usize) -> Result<()> {
    if m == 0 || m > MAX_VARIABLES {
        return Err(Error::InvalidVariableCount {
            m,
            max: MAX_VARIABLES,
        });
    }
    Ok(())
}

/// Binary assignment of `m` variables encoded by index `i` (little-endian).
pub fn bits_of(index: usize, m: usize) -> Vec<bool> {
    (0..m).map(|l| (index >> l) & 1 == 1).collect()
}

/// One monomial `coeff * prod_{l in vars} x_l`. An empty variable list is the
/// constant term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: u32,
    pub vars: Vec<usize>,
}

impl Term {
    pub fn new(coeff: u32, vars: impl Into<Vec<usize>>) -> Self {
        Term {
            coeff,
            vars: vars.into(),
        }
    }

    fn mask(&self) -> usize {
        self.vars.iter().fold(0, |acc, &l| acc | (1 << (l - 1)))
    }
}

/// A `Z_q`-valued function of `m` binary variables, stored as a list of
/// monomials. Duplicate monomials are kept and summed at evaluation time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedBooleanFunction {
    q: u32,
    m: usize,
    terms: Vec<Term>,
}

impl GeneralizedBooleanFunction {
    /// The zero function.
    pub fn zero(q: u32, m: usize) -> Result<Self> {
        Self::from_terms(q, m, Vec::new())
    }

    pub fn from_terms(q: u32, m: usize, terms: impl IntoIterator<Item = Term>) -> Result<Self> {
        check_alphabet(q)?;
        check_variable_count(m)?;
        let mut f = GeneralizedBooleanFunction {
            q,
            m,
            terms: Vec::new(),
        };
        for term in terms {
            f.push(term)?;
        }
        Ok(f)
    }

    fn push(&mut self, term: Term) -> Result<()> {
        if let Some(&index) = term.vars.iter().find(|&&l| l == 0 || l > self.m) {
            return Err(Error::VariableOutOfRange { index, m: self.m });
        }
        self.terms.push(Term {
            coeff: term.coeff % self.q,
            vars: term.vars,
        });
        Ok(())
    }

    /// Returns `self + coeff * prod x_l`.
    pub fn with_term(&self, coeff: u32, vars: impl Into<Vec<usize>>) -> Result<Self> {
        let mut f = self.clone();
        f.push(Term::new(coeff, vars))?;
        Ok(f)
    }

    /// Sum of two functions over the same alphabet and variable count, as the
    /// concatenation of their term lists.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.q != other.q {
            return Err(Error::AlphabetMismatch(self.q, other.q));
        }
        if self.m != other.m {
            return Err(Error::InvalidParams(format!(
                "variable count mismatch: {} vs {}",
                self.m, other.m
            )));
        }
        let mut f = self.clone();
        f.terms.extend(other.terms.iter().cloned());
        Ok(f)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Evaluates at an explicit assignment `(x_1, ..., x_m)`.
    pub fn evaluate(&self, assignment: &[bool]) -> Result<u32> {
        if assignment.len() != self.m {
            return Err(Error::AssignmentLength {
                got: assignment.len(),
                expected: self.m,
            });
        }
        let index = assignment
            .iter()
            .enumerate()
            .fold(0usize, |acc, (l, &b)| acc | ((b as usize) << l));
        Ok(self.evaluate_index(index))
    }

    /// Evaluates at the assignment encoded by the bits of `index`.
    pub fn evaluate_index(&self, index: usize) -> u32 {
        let q = self.q as u64;
        let sum = self
            .terms
            .iter()
            .filter(|t| index & t.mask() == t.mask())
            .fold(0u64, |acc, t| (acc + t.coeff as u64) % q);
        sum as u32
    }

    /// The unrestricted sequence `(xi^{f_0}, ..., xi^{f_{2^m - 1}})`.
    pub fn to_full_sequence(&self) -> SparseSequence {
        let entries = (0..1usize << self.m)
            .map(|i| Entry::Root(self.evaluate_index(i)))
            .collect();
        SparseSequence { q: self.q, entries }
    }

    /// Length-`2^m` sequence that keeps `xi^{f_i}` where the bits of `i`
    /// match the restriction and is zero elsewhere.
    pub fn restrict(&self, restriction: &Restriction) -> Result<SparseSequence> {
        restriction.validate_for(self.m)?;
        let mask = restriction.mask();
        let pattern = restriction.pattern();
        let entries = (0..1usize << self.m)
            .map(|i| {
                if i & mask == pattern {
                    Entry::Root(self.evaluate_index(i))
                } else {
                    Entry::Zero
                }
            })
            .collect();
        Ok(SparseSequence { q: self.q, entries })
    }
}

impl fmt::Display for GeneralizedBooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self
            .terms
            .iter()
            .filter(|t| t.coeff != 0)
            .map(|t| {
                let vars: String = t.vars.iter().map(|l| format!("x{l}")).collect();
                match (t.coeff, vars.is_empty()) {
                    (c, true) => c.to_string(),
                    (1, false) => vars,
                    (c, false) => format!("{c}{vars}"),
                }
            })
            .collect();
        if shown.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", shown.join(" + "))
        }
    }
}

/// Fixes the variables `x_{v_1}, ..., x_{v_t}` to the binary values
/// `d_1, ..., d_t`. The empty restriction (`t = 0`) is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Restriction {
    indices: Vec<usize>,
    values: Vec<u8>,
}

impl Restriction {
    pub fn new(indices: Vec<usize>, values: Vec<u8>) -> Result<Self> {
        if indices.len() != values.len() {
            return Err(Error::InvalidRestriction(format!(
                "{} indices but {} values",
                indices.len(),
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|&&v| v > 1) {
            return Err(Error::InvalidRestriction(format!(
                "value {v} is not binary"
            )));
        }
        for (a, &v) in indices.iter().enumerate() {
            if v == 0 {
                return Err(Error::InvalidRestriction("indices start at 1".into()));
            }
            if indices[..a].contains(&v) {
                return Err(Error::InvalidRestriction(format!(
                    "index {v} restricted twice"
                )));
            }
        }
        Ok(Restriction { indices, values })
    }

    /// No restricted variables.
    pub fn none() -> Self {
        Restriction::default()
    }

    pub fn t(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Checks the restriction against `m` variables. Every index must lie in
    /// `1..=m`; distinctness then bounds `t <= m`. Restricting all `m`
    /// variables is allowed here (one surviving entry) but the pair
    /// constructions require `t < m`.
    pub fn validate_for(&self, m: usize) -> Result<()> {
        if let Some(&index) = self.indices.iter().find(|&&v| v > m) {
            return Err(Error::VariableOutOfRange { index, m });
        }
        Ok(())
    }

    /// Unrestricted indices `V'` in ascending order.
    pub fn complement(&self, m: usize) -> Vec<usize> {
        (1..=m).filter(|l| !self.indices.contains(l)).collect()
    }

    fn mask(&self) -> usize {
        self.indices.iter().fold(0, |acc, &v| acc | (1 << (v - 1)))
    }

    fn pattern(&self) -> usize {
        self.indices
            .iter()
            .zip(&self.values)
            .fold(0, |acc, (&v, &d)| acc | ((d as usize) << (v - 1)))
    }
}

/// First and last non-zero positions `(k0, k1)` of a restricted sequence,
/// computed in closed form from the restriction.
pub fn truncation_bounds(restriction: &Restriction, m: usize) -> Result<(usize, usize)> {
    restriction.validate_for(m)?;
    let k0 = restriction.pattern();
    let span: usize = restriction
        .complement(m)
        .iter()
        .map(|&v| 1usize << (v - 1))
        .sum();
    Ok((k0, k0 + span))
}

/// Keeps entries `k0..=k1`. Both boundary entries must be non-zero.
pub fn truncate(sequence: &SparseSequence, k0: usize, k1: usize) -> Result<SparseSequence> {
    let len = sequence.len();
    let boundary_ok =
        k0 <= k1 && k1 < len && !sequence.entries[k0].is_zero() && !sequence.entries[k1].is_zero();
    if !boundary_ok {
        return Err(Error::BoundaryZero { k0, k1, len });
    }
    Ok(SparseSequence {
        q: sequence.q,
        entries: sequence.entries[k0..=k1].to_vec(),
    })
}

/// A sequence entry: zero, or the root of unity `xi^e` with `e` in `Z_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Option<u32>", into = "Option<u32>")]
pub enum Entry {
    Zero,
    Root(u32),
}

impl Entry {
    pub fn is_zero(self) -> bool {
        matches!(self, Entry::Zero)
    }

    pub fn exponent(self) -> Option<u32> {
        match self {
            Entry::Zero => None,
            Entry::Root(e) => Some(e),
        }
    }
}

impl From<Option<u32>> for Entry {
    fn from(value: Option<u32>) -> Self {
        value.map_or(Entry::Zero, Entry::Root)
    }
}

impl From<Entry> for Option<u32> {
    fn from(value: Entry) -> Self {
        value.exponent()
    }
}

/// Fraction of zero entries, kept unreduced as `zeros / length`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sparsity {
    pub zeros: usize,
    pub length: usize,
}

impl Sparsity {
    pub fn as_f64(self) -> f64 {
        self.zeros as f64 / self.length as f64
    }

    /// Equality as rationals, `a/b == c/d`.
    pub fn same_ratio(self, other: Sparsity) -> bool {
        self.zeros * other.length == other.zeros * self.length
    }
}

impl fmt::Display for Sparsity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.zeros, self.length)
    }
}

/// A finite sequence over `{0} ∪ {xi^e : e in Z_q}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseSequence {
    q: u32,
    entries: Vec<Entry>,
}

impl SparseSequence {
    pub fn new(q: u32, entries: Vec<Entry>) -> Result<Self> {
        check_alphabet(q)?;
        if entries.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(e) = entries
            .iter()
            .filter_map(|e| e.exponent())
            .find(|&e| e >= q)
        {
            return Err(Error::ExponentOutOfRange { exponent: e, q });
        }
        Ok(SparseSequence { q, entries })
    }

    /// Builds from optional exponents, `None` being a zero entry.
    pub fn from_exponents(q: u32, exponents: &[Option<u32>]) -> Result<Self> {
        Self::new(q, exponents.iter().map(|&e| Entry::from(e)).collect())
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Option<Entry> {
        self.entries.get(i).copied()
    }

    pub fn zero_count(&self) -> usize {
        self.entries.iter().filter(|e| e.is_zero()).count()
    }

    pub fn nonzero_count(&self) -> usize {
        self.len() - self.zero_count()
    }

    pub fn sparsity(&self) -> Sparsity {
        Sparsity {
            zeros: self.zero_count(),
            length: self.len(),
        }
    }

    /// First and last entries are non-zero.
    pub fn is_trimmed(&self) -> bool {
        matches!(
            (self.entries.first(), self.entries.last()),
            (Some(a), Some(b)) if !a.is_zero() && !b.is_zero()
        )
    }

    /// Indices of the first and last non-zero entries.
    pub fn support_bounds(&self) -> Option<(usize, usize)> {
        let first = self.entries.iter().position(|e| !e.is_zero())?;
        let last = self.entries.iter().rposition(|e| !e.is_zero())?;
        Some((first, last))
    }

    /// Same sequence with entry `i` replaced.
    pub fn with_entry(&self, i: usize, entry: Entry) -> Result<Self> {
        if i >= self.len() {
            return Err(Error::ShiftOutOfRange {
                shift: i as i64,
                len: self.len(),
            });
        }
        let mut entries = self.entries.clone();
        entries[i] = entry;
        Self::new(self.q, entries)
    }

    /// Multiplies every non-zero entry by `xi^shift`.
    pub fn rotate_phase(&self, shift: u32) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|e| match e {
                Entry::Zero => Entry::Zero,
                Entry::Root(x) => Entry::Root((x + shift) % self.q),
            })
            .collect();
        SparseSequence { q: self.q, entries }
    }
}

impl fmt::Display for SparseSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| match e {
                Entry::Zero => "0".to_string(),
                Entry::Root(x) => format!("ξ^{x}"),
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}
