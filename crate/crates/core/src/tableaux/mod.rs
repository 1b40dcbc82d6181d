//! Semistandard Young tableaux, RSK row insertion and shape statistics.

mod jdt;
mod partition;
mod ssyt;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

pub use jdt::{jdt_rectify, SkewConfiguration};
pub use partition::{hook_count, partitions, Partition};
pub use ssyt::{enumerate_ssyt, FillBounds, SsytFillings};

/// Default length cap for [`lwi_bruteforce`].
pub const LWI_BRUTEFORCE_LIMIT: usize = 10;

/// A semistandard Young tableau stored as ragged rows (English notation).
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct Tableau {
    rows: Vec<Vec<Letter>>,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    rows: Vec<Vec<Letter>>,
}

impl TryFrom<RawTableau> for Tableau {
    type Error = Error;
    fn try_from(raw: RawTableau) -> Result<Self> {
        Tableau::new(raw.rows)
    }
}

impl From<Tableau> for RawTableau {
    fn from(t: Tableau) -> Self {
        RawTableau { rows: t.rows }
    }
}

/// One step of a row insertion: the cell written and the letter it displaced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BumpStep {
    pub row: usize,
    pub col: usize,
    pub displaced: Option<Letter>,
}

/// Path of a row insertion, top row first. The last step is always an append.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BumpTrace {
    pub path: Vec<BumpStep>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    /// Builds a tableau after checking shape, row and column conditions.
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        let t = Tableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Letter>>) -> Self {
        Tableau { rows }
    }

    pub fn validate(&self) -> Result<()> {
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau(format!("row {} is empty", i + 1)));
            }
            if row.contains(&0) {
                return Err(Error::InvalidTableau("entry 0".into()));
            }
            if row.windows(2).any(|p| p[0] > p[1]) {
                return Err(Error::InvalidTableau(format!("row {} is not weakly increasing", i + 1)));
            }
            if i > 0 {
                let above = &self.rows[i - 1];
                if row.len() > above.len() {
                    return Err(Error::InvalidTableau(format!(
                        "row {} is longer than the row above",
                        i + 1
                    )));
                }
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    return Err(Error::InvalidTableau(format!(
                        "a column is not strictly increasing at row {}",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Partition {
        Partition::from_parts_unchecked(self.rows.iter().map(Vec::len).collect())
    }

    pub fn max_entry(&self) -> Letter {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Column `j` (0-based) read top to bottom.
    pub fn column(&self, j: usize) -> Vec<Letter> {
        self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect()
    }

    /// Sorted multiset of entries.
    pub fn content(&self) -> Vec<Letter> {
        let mut c: Vec<Letter> = self.rows.iter().flatten().copied().collect();
        c.sort_unstable();
        c
    }

    /// Row reading word: bottom row first, each row left to right.
    pub fn reading_word(&self) -> Word {
        Word::from_vec_unchecked(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Row-inserts `a`, returning the bump path.
    pub fn insert_in_place(&mut self, a: Letter) -> BumpTrace {
        let mut path = Vec::new();
        let mut x = a;
        let mut r = 0;
        loop {
            if r == self.rows.len() {
                self.rows.push(vec![x]);
                path.push(BumpStep {
                    row: r,
                    col: 0,
                    displaced: None,
                });
                break;
            }
            let row = &mut self.rows[r];
            let c = row.partition_point(|&y| y <= x);
            if c == row.len() {
                row.push(x);
                path.push(BumpStep {
                    row: r,
                    col: c,
                    displaced: None,
                });
                break;
            }
            let old = std::mem::replace(&mut row[c], x);
            path.push(BumpStep {
                row: r,
                col: c,
                displaced: Some(old),
            });
            x = old;
            r += 1;
        }
        BumpTrace { path }
    }

    /// Row-inserts `a` without recording the path; returns the row that grew.
    #[inline]
    pub(crate) fn push_letter(&mut self, a: Letter) -> usize {
        let mut x = a;
        for (r, row) in self.rows.iter_mut().enumerate() {
            let c = row.partition_point(|&y| y <= x);
            if c == row.len() {
                row.push(x);
                return r;
            }
            x = std::mem::replace(&mut row[c], x);
        }
        self.rows.push(vec![x]);
        self.rows.len() - 1
    }

    pub(crate) fn push_word(&mut self, letters: &[Letter]) {
        for &a in letters {
            self.push_letter(a);
        }
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{:?}", self.rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|a| a.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Row insertion of `a` into `t`.
pub fn insert(t: &Tableau, a: Letter) -> (Tableau, BumpTrace) {
    let mut out = t.clone();
    let trace = out.insert_in_place(a);
    (out, trace)
}

/// The insertion tableau `P(w)`.
pub fn p_tableau(w: &Word) -> Tableau {
    let mut t = Tableau::empty();
    t.push_word(w.letters());
    t
}

/// RSK: the insertion tableau and the standard recording tableau.
pub fn rsk(w: &Word) -> (Tableau, Tableau) {
    let mut p = Tableau::empty();
    let mut q: Vec<Vec<Letter>> = Vec::new();
    for (step, &a) in w.letters().iter().enumerate() {
        let r = p.push_letter(a);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(step as Letter + 1);
    }
    (p, Tableau::from_rows_unchecked(q))
}

/// Row `i` (1-based) of `t`, empty past the last row.
pub fn row(t: &Tableau, i: usize) -> &[Letter] {
    i.checked_sub(1)
        .and_then(|r| t.rows.get(r))
        .map(Vec::as_slice)
        .unwrap_or(&[])
}

/// Number of height-one columns whose only entry is `a`.
pub fn singleton_count(t: &Tableau, a: Letter) -> usize {
    let Some(first) = t.rows.first() else {
        return 0;
    };
    let second_len = t.rows.get(1).map_or(0, Vec::len);
    first[second_len..].iter().filter(|&&x| x == a).count()
}

/// `λ_1 + ... + λ_i` for the shape of `P(w)`.
pub fn greene_invariant(w: &Word, i: usize) -> usize {
    p_tableau(w).shape().prefix_sum(i)
}

/// Longest subsequence of `w` that splits into `i` weakly increasing
/// subsequences, by exhaustive search over chain assignments (memoized on
/// the multiset of chain tails). Independent of insertion.
pub fn lwi_bruteforce(w: &Word, i: usize) -> Result<usize> {
    lwi_bruteforce_with_limit(w, i, LWI_BRUTEFORCE_LIMIT)
}

pub fn lwi_bruteforce_with_limit(w: &Word, i: usize, limit: usize) -> Result<usize> {
    if w.len() > limit {
        return Err(Error::LengthLimit { len: w.len(), limit });
    }
    let chains = i.min(w.len());
    if chains == 0 {
        return Ok(0);
    }

    fn search(
        letters: &[Letter],
        pos: usize,
        tails: &mut Vec<Letter>,
        memo: &mut HashMap<(usize, Vec<Letter>), usize>,
    ) -> usize {
        if pos == letters.len() {
            return 0;
        }
        if let Some(&v) = memo.get(&(pos, tails.clone())) {
            return v;
        }
        let x = letters[pos];
        let mut best = search(letters, pos + 1, tails, memo);
        let mut prev = None;
        for j in 0..tails.len() {
            let t = tails[j];
            if t > x {
                break;
            }
            if prev == Some(t) {
                continue;
            }
            prev = Some(t);
            let mut next = tails.clone();
            next[j] = x;
            next.sort_unstable();
            best = best.max(1 + search(letters, pos + 1, &mut next, memo));
        }
        memo.insert((pos, tails.clone()), best);
        best
    }

    // Tail value 0 marks an unused chain.
    let mut tails = vec![0; chains];
    Ok(search(w.letters(), 0, &mut tails, &mut HashMap::new()))
}

/// Longest weakly increasing subsequence of `w` whose last letter is `a`.
pub fn lwi_ending_at(w: &Word, a: Letter) -> usize {
    let letters = w.letters();
    let mut best_ending: Vec<usize> = Vec::with_capacity(letters.len());
    let mut answer = 0;
    for (j, &x) in letters.iter().enumerate() {
        let len = 1
            + (0..j)
                .filter(|&k| letters[k] <= x)
                .map(|k| best_ending[k])
                .max()
                .unwrap_or(0);
        best_ending.push(len);
        if x == a {
            answer = answer.max(len);
        }
    }
    answer
}
