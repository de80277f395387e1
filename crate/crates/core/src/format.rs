//! JSON file schemas for sequences, pairs and mate pairs.
//!
//! A sequence is written as a header plus its entries, each entry either
//! `null` (zero) or an exponent in `Z_q`:
//!
//! ```json
//! {"q": 4, "m": 3, "t": 1, "L": 6, "entries": [0, 1, null, null, 0, 1]}
//! ```

use serde::{Deserialize, Serialize};

use crate::construct::{ScpPair, ScpParams};
use crate::error::{Error, Result};
use crate::rgbf::{Entry, SparseSequence};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceFile {
    pub q: u32,
    pub m: usize,
    pub t: usize,
    #[serde(rename = "L")]
    pub length: usize,
    pub entries: Vec<Entry>,
}

impl SequenceFile {
    pub fn new(seq: &SparseSequence, m: usize, t: usize) -> Self {
        SequenceFile {
            q: seq.q(),
            m,
            t,
            length: seq.len(),
            entries: seq.entries().to_vec(),
        }
    }

    pub fn to_sequence(&self) -> Result<SparseSequence> {
        if self.length != self.entries.len() {
            return Err(Error::Format(format!(
                "header says L={} but {} entries follow",
                self.length,
                self.entries.len()
            )));
        }
        SparseSequence::new(self.q, self.entries.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFile {
    pub params: ScpParams,
    pub c0: SequenceFile,
    pub c1: SequenceFile,
}

impl PairFile {
    pub fn from_pair(pair: &ScpPair) -> Self {
        let (m, t) = (pair.params.m(), pair.params.t());
        PairFile {
            params: pair.params.clone(),
            c0: SequenceFile::new(&pair.c0, m, t),
            c1: SequenceFile::new(&pair.c1, m, t),
        }
    }

    /// Whether both sequence headers agree with `params` and with their own
    /// entry counts.
    pub fn header_consistent(&self) -> bool {
        [&self.c0, &self.c1].iter().all(|s| {
            s.q == self.params.q()
                && s.m == self.params.m()
                && s.t == self.params.t()
                && s.length == s.entries.len()
        })
    }

    /// Builds the pair from the entries alone, ignoring header fields. The
    /// two sequences may differ in length; checkers reject that.
    pub fn to_pair_lenient(&self) -> Result<ScpPair> {
        Ok(ScpPair {
            params: self.params.clone(),
            c0: SparseSequence::new(self.c0.q, self.c0.entries.clone())?,
            c1: SparseSequence::new(self.c1.q, self.c1.entries.clone())?,
        })
    }

    /// Checks header consistency; the entries themselves are taken as given.
    pub fn to_pair(&self) -> Result<ScpPair> {
        for (name, s) in [("c0", &self.c0), ("c1", &self.c1)] {
            if s.q != self.params.q() || s.m != self.params.m() || s.t != self.params.t() {
                return Err(Error::Format(format!(
                    "{name} header (q={}, m={}, t={}) disagrees with params (q={}, m={}, t={})",
                    s.q,
                    s.m,
                    s.t,
                    self.params.q(),
                    self.params.m(),
                    self.params.t()
                )));
            }
        }
        Ok(ScpPair {
            params: self.params.clone(),
            c0: self.c0.to_sequence()?,
            c1: self.c1.to_sequence()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MateFile {
    pub pair: PairFile,
    pub mate: PairFile,
}

/// Either file kind, as accepted by verification.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum PairOrMate {
    Mate(Box<MateFile>),
    Pair(PairFile),
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

pub fn parse_params(text: &str) -> Result<ScpParams> {
    parse(text)
}

pub fn parse_pair(text: &str) -> Result<ScpPair> {
    parse::<PairFile>(text)?.to_pair()
}

pub fn parse_pair_or_mate(text: &str) -> Result<PairOrMate> {
    parse(text)
}

pub fn pair_to_json(pair: &ScpPair) -> String {
    serde_json::to_string_pretty(&PairFile::from_pair(pair)).expect("pair serializes")
}

pub fn mate_to_json(pair: &ScpPair, mate: &ScpPair) -> String {
    let file = MateFile {
        pair: PairFile::from_pair(pair),
        mate: PairFile::from_pair(mate),
    };
    serde_json::to_string_pretty(&file).expect("mate file serializes")
}
