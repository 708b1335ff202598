//! JSON encodings of halfspaces, transcripts and learn reports.

use std::path::Path;

use hslearn::{Halfspace, QueryTranscript};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("\"n\" is {n} but there are {len} weights")]
    LengthMismatch { n: usize, len: usize },
    #[error(transparent)]
    Halfspace(#[from] hslearn::Error),
}

/// `{"n": 3, "t": 2, "weights": [2, 1, 0], "threshold": 2}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfspaceJson {
    pub n: usize,
    pub t: u32,
    pub weights: Vec<i64>,
    pub threshold: i64,
}

impl From<&Halfspace> for HalfspaceJson {
    fn from(h: &Halfspace) -> Self {
        Self { n: h.dim(), t: h.bound(), weights: h.weights().to_vec(), threshold: h.threshold() }
    }
}

impl HalfspaceJson {
    /// Weights may be anywhere in `[-t, t]`.
    pub fn to_halfspace(&self) -> Result<Halfspace, FormatError> {
        self.check_len()?;
        Ok(Halfspace::new(self.weights.clone(), self.threshold, self.t)?)
    }

    /// Weights must lie in `[0, t]`, as for a learning target.
    pub fn to_target(&self) -> Result<Halfspace, FormatError> {
        self.check_len()?;
        Ok(Halfspace::new_nonnegative(self.weights.clone(), self.threshold, self.t)?)
    }

    fn check_len(&self) -> Result<(), FormatError> {
        if self.n != self.weights.len() {
            return Err(FormatError::LengthMismatch { n: self.n, len: self.weights.len() });
        }
        Ok(())
    }
}

/// Reads a halfspace given either inline (text starting with `{`) or as a
/// file path.
pub fn read_halfspace_arg(arg: &str) -> Result<HalfspaceJson, FormatError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_owned()
    } else {
        std::fs::read_to_string(Path::new(arg))
            .map_err(|source| FormatError::Io { path: arg.to_owned(), source })?
    };
    Ok(serde_json::from_str(&text)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnswerJson {
    pub a: String,
    pub f: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptJson {
    pub n: usize,
    pub total_queries: usize,
    pub rounds: Vec<Vec<AnswerJson>>,
}

impl TranscriptJson {
    pub fn new(n: usize, transcript: &QueryTranscript) -> Self {
        let rounds = transcript
            .rounds()
            .iter()
            .map(|r| {
                r.queries
                    .iter()
                    .zip(&r.answers)
                    .map(|(a, &v)| AnswerJson { a: a.to_bitstring(), f: u8::from(v) })
                    .collect()
            })
            .collect();
        Self { n, total_queries: transcript.total_queries(), rounds }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LearnReport {
    pub algorithm: String,
    pub hypothesis: HalfspaceJson,
    pub rounds: usize,
    pub queries_per_round: Vec<usize>,
    pub total_queries: usize,
    pub candidates: usize,
    pub pairs_checked: usize,
    pub elapsed_ms: u64,
    pub correct: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use hslearn::{MembershipOracle, SimulatedOracle};

    #[test]
    fn halfspace_round_trip() {
        let text = r#"{"n":3,"t":2,"weights":[2,1,0],"threshold":2}"#;
        let parsed: HalfspaceJson = serde_json::from_str(text).unwrap();
        let h = parsed.to_target().unwrap();
        assert_eq!(h.weights(), &[2, 1, 0]);
        assert_eq!(serde_json::to_string(&HalfspaceJson::from(&h)).unwrap(), text);
    }

    #[test]
    fn rejects_bad_halfspaces() {
        let too_heavy: HalfspaceJson =
            serde_json::from_str(r#"{"n":2,"t":2,"weights":[3,1],"threshold":1}"#).unwrap();
        assert!(too_heavy.to_target().is_err());
        let negative: HalfspaceJson =
            serde_json::from_str(r#"{"n":2,"t":2,"weights":[-1,1],"threshold":1}"#).unwrap();
        assert!(negative.to_target().is_err());
        assert!(negative.to_halfspace().is_ok());
        let short: HalfspaceJson =
            serde_json::from_str(r#"{"n":3,"t":2,"weights":[1,1],"threshold":1}"#).unwrap();
        assert!(matches!(short.to_halfspace(), Err(FormatError::LengthMismatch { n: 3, len: 2 })));
        assert!(read_halfspace_arg("{").is_err());
        assert!(read_halfspace_arg("/nonexistent/file.json").is_err());
    }

    #[test]
    fn transcript_layout() {
        let h = Halfspace::new(vec![1, 1], 1, 1).unwrap();
        let mut o = SimulatedOracle::new(h, None).unwrap();
        o.submit_round(&["10".parse().unwrap(), "00".parse().unwrap()]).unwrap();
        let json = serde_json::to_string(&TranscriptJson::new(2, o.transcript())).unwrap();
        assert_eq!(json, r#"{"n":2,"total_queries":2,"rounds":[[{"a":"00","f":0},{"a":"10","f":1}]]}"#);
    }
}
