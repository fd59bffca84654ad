//! Path sequences and the necessary conditions a candidate sequence must
//! satisfy to be realisable by some graph.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// The vector of all path numbers of a graph, indexed 1..=n.
///
/// Ordering is lexicographic on the underlying values, which is the order
/// census tables are emitted in.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PathSequence {
    values: Vec<u8>,
}

impl PathSequence {
    pub fn new(values: Vec<u8>) -> PathSequence {
        PathSequence { values }
    }

    /// Number of entries, i.e. the order of the underlying graph.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The k-th path number, 1-based.
    pub fn psi(&self, k: usize) -> usize {
        self.values[k - 1] as usize
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// `true` when the last entry is 1, i.e. a Hamilton path exists.
    pub fn ends_in_one(&self) -> bool {
        self.values.last() == Some(&1)
    }
}

impl fmt::Display for PathSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Parses "5,2,1,1,1" or "(5,2,1,1,1)".
impl FromStr for PathSequence {
    type Err = String;

    fn from_str(s: &str) -> Result<PathSequence, String> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.is_empty() {
            return Err(String::from("empty sequence"));
        }
        let mut values = Vec::new();
        for part in trimmed.split(',') {
            let v: u8 = part
                .trim()
                .parse()
                .map_err(|_| format!("bad sequence entry {:?}", part.trim()))?;
            values.push(v);
        }
        Ok(PathSequence { values })
    }
}

/// One failed necessary condition, with the values that broke it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityFailure {
    pub rule: &'static str,
    pub detail: String,
}

impl fmt::Display for FeasibilityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.rule, self.detail)
    }
}

/// Checks every necessary condition known for path sequences:
/// first entry n, non-increasing, the n-k+1 ceiling, and the two-position
/// bound psi_m >= psi_k + floor(k/m) - 1 whenever m < k and psi_k > 0.
///
/// An empty result means the sequence passes; it does NOT assert that a
/// realising graph exists.
pub fn sequence_feasibility(seq: &PathSequence) -> Vec<FeasibilityFailure> {
    let mut failures = Vec::new();
    let n = seq.len();
    if n == 0 {
        failures.push(FeasibilityFailure {
            rule: "nonempty",
            detail: String::from("sequence has no entries"),
        });
        return failures;
    }
    if seq.psi(1) != n {
        failures.push(FeasibilityFailure {
            rule: "first-entry",
            detail: format!("psi_1 = {} but the sequence has {} entries", seq.psi(1), n),
        });
    }
    for k in 1..n {
        if seq.psi(k) < seq.psi(k + 1) {
            failures.push(FeasibilityFailure {
                rule: "non-increasing",
                detail: format!("psi_{} = {} < psi_{} = {}", k, seq.psi(k), k + 1, seq.psi(k + 1)),
            });
        }
    }
    for k in 1..=n {
        if seq.psi(k) > n - k + 1 {
            failures.push(FeasibilityFailure {
                rule: "ceiling",
                detail: format!("psi_{} = {} > n-k+1 = {}", k, seq.psi(k), n - k + 1),
            });
        }
    }
    for k in 2..=n {
        if seq.psi(k) == 0 {
            continue;
        }
        for m in 1..k {
            let required = seq.psi(k) + k / m - 1;
            if seq.psi(m) < required {
                failures.push(FeasibilityFailure {
                    rule: "two-position-bound",
                    detail: format!(
                        "psi_{} = {} < psi_{} + floor({}/{}) - 1 = {}",
                        m,
                        seq.psi(m),
                        k,
                        k,
                        m,
                        required
                    ),
                });
            }
        }
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn seq(v: &[u8]) -> PathSequence {
        PathSequence::new(v.to_vec())
    }

    #[test]
    fn display_and_parse() {
        let s = seq(&[5, 2, 1, 1, 1]);
        assert_eq!(format!("{s}"), "(5,2,1,1,1)");
        assert_eq!("5,2,1,1,1".parse::<PathSequence>().unwrap(), s);
        assert_eq!("(5,2,1,1,1)".parse::<PathSequence>().unwrap(), s);
        assert!("5,x".parse::<PathSequence>().is_err());
    }

    #[test]
    fn feasible_sequences_pass() {
        assert!(sequence_feasibility(&seq(&[5, 4, 3, 2, 1])).is_empty());
        assert!(sequence_feasibility(&seq(&[5, 1, 1, 0, 0])).is_empty());
    }

    #[test]
    fn two_position_bound_fails() {
        // no graph has psi_2 = 5 with psi_10 = 2
        let s = seq(&[10, 5, 4, 4, 3, 3, 2, 2, 2, 2]);
        let failures = sequence_feasibility(&s);
        assert!(failures.iter().any(|f| f.rule == "two-position-bound"
            && f.detail.contains("psi_2 = 5")));

        // same pair of values on 11 vertices: every shape condition holds,
        // only the two-position bound trips
        let s = seq(&[11, 5, 4, 4, 3, 3, 3, 2, 2, 2, 1]);
        let failures = sequence_feasibility(&s);
        assert_eq!(failures.len(), 1);
        assert_eq!(failures[0].rule, "two-position-bound");
        assert!(failures[0].detail.contains("psi_2 = 5"));
    }

    #[test]
    fn monotonicity_fails() {
        let s = seq(&[5, 2, 3, 1, 1]);
        let failures = sequence_feasibility(&s);
        assert!(failures.iter().any(|f| f.rule == "non-increasing"));
    }

    #[test]
    fn lexicographic_order_matches_tables() {
        let mut rows = vec![
            seq(&[5, 2, 2, 1, 1]),
            seq(&[5, 1, 1, 0, 0]),
            seq(&[5, 2, 1, 1, 1]),
            seq(&[5, 2, 1, 1, 0]),
        ];
        rows.sort();
        assert_eq!(rows[0], seq(&[5, 1, 1, 0, 0]));
        assert_eq!(rows[1], seq(&[5, 2, 1, 1, 0]));
        assert_eq!(rows[2], seq(&[5, 2, 1, 1, 1]));
    }
}
