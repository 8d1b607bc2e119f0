use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A non-negative count that may also be infinite.
///
/// Finite values order below [`ExtendedCount::Infinite`]. Minimisation over an
/// empty family of witnesses yields `Infinite`, which is how "no such edge set
/// exists" is represented for `lambda_k` and `e(S)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtendedCount {
    Finite(u64),
    Infinite,
}

impl ExtendedCount {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedCount::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedCount::Finite(v) => Some(v),
            ExtendedCount::Infinite => None,
        }
    }

    /// Smallest element of an iterator of finite counts, or `Infinite` when empty.
    pub fn min_of<I: IntoIterator<Item = u64>>(values: I) -> Self {
        values
            .into_iter()
            .min()
            .map_or(ExtendedCount::Infinite, ExtendedCount::Finite)
    }
}

impl From<u64> for ExtendedCount {
    fn from(v: u64) -> Self {
        ExtendedCount::Finite(v)
    }
}

impl PartialEq<u64> for ExtendedCount {
    fn eq(&self, other: &u64) -> bool {
        *self == ExtendedCount::Finite(*other)
    }
}

impl Ord for ExtendedCount {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedCount::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ExtendedCount {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtendedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedCount::Finite(v) => write!(f, "{v}"),
            ExtendedCount::Infinite => f.write_str("inf"),
        }
    }
}
