use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// Length of row `i` (0-based), 0 beyond the last row.
    pub fn row_len(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row_len(0);
        Partition(
            (0..width)
                .map(|j| self.0.iter().take_while(|&&p| p > j).count())
                .collect(),
        )
    }

    /// The partition with its first row removed.
    pub fn without_first_row(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// Sum of the first `i` parts.
    pub fn prefix_sum(&self, i: usize) -> usize {
        self.0.iter().take(i).sum()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Partitions of `n` in decreasing lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of standard Young tableaux of the given shape (hook length formula).
pub fn hook_count(shape: &Partition) -> BigUint {
    let n = shape.size();
    let conj = shape.conjugate();
    let mut numerator = BigUint::one();
    for k in 2..=n {
        numerator *= k;
    }
    let mut hooks = BigUint::one();
    for (i, &row) in shape.0.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.0[j] - i - 1;
            hooks *= arm + leg + 1;
        }
    }
    numerator / hooks
}
