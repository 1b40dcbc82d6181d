#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::binomial;
use crate::tableaux::Partition;
use crate::words::{Letter, Word};

/// Default size cap for [`linear_extensions`].
pub const LINEAR_EXTENSION_LIMIT: usize = 12;

/// A partial order on the labels `1..=size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoset {
    size: usize,
    leq: Vec<Vec<bool>>,
}

impl LabeledPoset {
    /// Builds the poset from a relation, adding reflexive and transitive
    /// pairs. Fails if the closure is not antisymmetric.
    pub fn from_relation(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![vec![false; size]; size];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > size || b > size {
                return Err(Error::Range(format!("pair ({a},{b}) outside 1..={size}")));
            }
            leq[a - 1][b - 1] = true;
        }
        for k in 0..size {
            for i in 0..size {
                if leq[i][k] {
                    for j in 0..size {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..size {
            for j in i + 1..size {
                if leq[i][j] && leq[j][i] {
                    return Err(Error::Range(format!("{} and {} form a cycle", i + 1, j + 1)));
                }
            }
        }
        Ok(LabeledPoset { size, leq })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a - 1][b - 1]
    }

    /// Cover relations `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.size {
            for b in 1..=self.size {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let between = (1..=self.size).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Labels the cells of `λ` row by row, each row right to left, and orders
/// `k ≤ k'` when the cell of `k'` is weakly north-west of the cell of `k`.
pub fn poset_from_partition(shape: &Partition) -> LabeledPoset {
    let mut cells = Vec::with_capacity(shape.size());
    for (i, &len) in shape.parts().iter().enumerate() {
        for j in (0..len).rev() {
            cells.push((i, j));
        }
    }
    let n = cells.len();
    let leq = (0..n)
        .map(|a| {
            let (i, j) = cells[a];
            (0..n)
                .map(|b| {
                    let (ib, jb) = cells[b];
                    ib <= i && jb <= j
                })
                .collect()
        })
        .collect();
    LabeledPoset { size: n, leq }
}

/// All linear extensions, listed smallest element first. Minimal elements
/// are tried in increasing label order, so the output is lexicographic.
pub fn linear_extensions(p: &LabeledPoset) -> Result<Vec<Word>> {
    linear_extensions_with_limit(p, LINEAR_EXTENSION_LIMIT)
}

pub fn linear_extensions_with_limit(p: &LabeledPoset, limit: usize) -> Result<Vec<Word>> {
    if p.size > limit {
        return Err(Error::LengthLimit { len: p.size, limit });
    }
    let n = p.size;
    // below[b] = number of elements strictly below b not yet placed
    let mut below: Vec<usize> = (1..=n)
        .map(|b| (1..=n).filter(|&a| a != b && p.leq(a, b)).count())
        .collect();
    let mut used = vec![false; n];
    let mut prefix = Vec::with_capacity(n);
    let mut out = Vec::new();
    extend(p, &mut below, &mut used, &mut prefix, &mut out);
    Ok(out)
}

fn extend(p: &LabeledPoset, below: &mut [usize], used: &mut [bool], prefix: &mut Vec<Letter>, out: &mut Vec<Word>) {
    let n = p.size;
    if prefix.len() == n {
        out.push(Word::from_vec_unchecked(prefix.clone()));
        return;
    }
    for a in 0..n {
        if used[a] || below[a] != 0 {
            continue;
        }
        used[a] = true;
        prefix.push(a as Letter + 1);
        for b in 0..n {
            if b != a && p.leq[a][b] {
                below[b] -= 1;
            }
        }
        extend(p, below, used, prefix, out);
        for b in 0..n {
            if b != a && p.leq[a][b] {
                below[b] += 1;
            }
        }
        prefix.pop();
        used[a] = false;
    }
}

/// Positions `i` with `π_i > π_{i+1}`.
pub fn descent_count(pi: &Word) -> Result<usize> {
    if !pi.is_permutation() {
        return Err(Error::NotPermutation(pi.to_string()));
    }
    Ok(pi.letters().windows(2).filter(|p| p[0] > p[1]).count())
}

/// `Σ_π C(m + n'' - des π - 2, n'')` over the linear extensions `π` of the
/// poset of `λ` with its first row removed (`n''` cells).
pub fn g_poly(shape: &Partition, m: u64) -> Result<BigInt> {
    if m < 2 {
        return Err(Error::Range(format!("g_m needs m >= 2, got {m}")));
    }
    let rest = shape.without_first_row();
    let n2 = rest.size();
    let mut total = BigInt::zero();
    for pi in linear_extensions(&poset_from_partition(&rest))? {
        let des = descent_count(&pi)?;
        total += binomial(m as i64 + n2 as i64 - des as i64 - 2, n2);
    }
    Ok(total)
}
