//! Knuth equivalence, centralizer membership and finite centralizer slices.
//!
//! `C(u) = {w : uw ≡ wu}`. Because `≡` is a monoid congruence, membership of
//! `w` depends only on `P(w)`, so a slice `{w ∈ C(u) : |w| = n, max w ≤ m}` is
//! a union of plactic classes. The class engine enumerates candidate
//! `P`-tableaux and weights each member class by the number of words that
//! insert to it; the word engine checks every word directly.

use std::collections::{BTreeSet, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::exact;
use crate::tableaux::{hook_count, p_tableau, partitions, FillBounds, Partition, SsytFillings, Tableau};
use crate::words::{all_words, concat, Letter, Word};

/// Default length cap for [`knuth_class`].
pub const KNUTH_CLASS_LIMIT: usize = 9;

pub fn knuth_equivalent(v: &Word, w: &Word) -> bool {
    p_tableau(v) == p_tableau(w)
}

/// Words one elementary Knuth transposition away from `w`:
/// `xzy ↔ zxy` for `x ≤ y < z` and `yxz ↔ yzx` for `x < y ≤ z`, applied to
/// any three consecutive letters.
pub fn knuth_neighbors(w: &Word) -> BTreeSet<Word> {
    let letters = w.letters();
    let mut out = BTreeSet::new();
    for i in 0..letters.len().saturating_sub(2) {
        let (a, b, c) = (letters[i], letters[i + 1], letters[i + 2]);
        let mut push_swap = |j: usize| {
            let mut v = letters.to_vec();
            v.swap(j, j + 1);
            out.insert(Word::from_vec_unchecked(v));
        };
        // xzy -> zxy: a=x, b=z, c=y
        if a <= c && c < b {
            push_swap(i);
        }
        // zxy -> xzy: a=z, b=x, c=y
        if b <= c && c < a {
            push_swap(i);
        }
        // yxz -> yzx: a=y, b=x, c=z
        if b < a && a <= c {
            push_swap(i + 1);
        }
        // yzx -> yxz: a=y, b=z, c=x
        if c < a && a <= b {
            push_swap(i + 1);
        }
    }
    out
}

/// Closure of `w` under [`knuth_neighbors`].
pub fn knuth_class(w: &Word) -> Result<BTreeSet<Word>> {
    knuth_class_with_limit(w, KNUTH_CLASS_LIMIT)
}

pub fn knuth_class_with_limit(w: &Word, limit: usize) -> Result<BTreeSet<Word>> {
    if w.len() > limit {
        return Err(Error::LengthLimit { len: w.len(), limit });
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(x) = queue.pop_front() {
        for y in knuth_neighbors(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

pub fn in_centralizer(u: &Word, w: &Word) -> bool {
    p_tableau(&concat(u, w)) == p_tableau(&concat(w, u))
}

/// Largest `k` such that `m, m-1, ..., m-k+1` (with `m = max u`) is a
/// subsequence of `u`.
pub fn top_descent_depth(u: &Word) -> usize {
    let m = u.max_letter();
    let mut want = m;
    let mut depth = 0;
    for &a in u.letters() {
        if want >= 1 && a == want {
            depth += 1;
            want -= 1;
        }
    }
    depth
}

/// Membership tester for a fixed left factor `u`, with `P(u)` cached.
#[derive(Clone, Debug)]
pub struct Centralizer {
    u: Word,
    p_u: Tableau,
}

impl Centralizer {
    pub fn new(u: &Word) -> Self {
        Centralizer {
            u: u.clone(),
            p_u: p_tableau(u),
        }
    }

    pub fn base(&self) -> &Word {
        &self.u
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.contains_class(&p_tableau(w))
    }

    /// Tests the class of `p` through its row reading word:
    /// `P(u · read(p))` against `p ← u`.
    pub fn contains_class(&self, p: &Tableau) -> bool {
        let mut left = self.p_u.clone();
        left.push_word(p.reading_word().letters());
        let mut right = p.clone();
        right.push_word(self.u.letters());
        left == right
    }

    /// Rows `1..=k` of `P(w)` are bounded by `max u` for every `w ∈ C(u)`,
    /// where `k` is [`top_descent_depth`]. Used to prune the class engine.
    pub fn fill_bounds(&self, m: Letter) -> FillBounds {
        let top = self.u.max_letter();
        let depth = top_descent_depth(&self.u);
        FillBounds {
            row_cap: (depth > 0 && top < m).then_some((depth, top)),
            full_content: false,
        }
    }
}

/// One plactic class inside a slice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedClass {
    pub tableau: Tableau,
    #[serde(with = "exact::biguint")]
    pub weight: BigUint,
}

/// `{w ∈ C(u) : |w| = n, max w ≤ m}` as a list of classes with word counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerSlice {
    pub base_word: Word,
    pub n: usize,
    pub m: Letter,
    pub classes: Vec<WeightedClass>,
    #[serde(with = "exact::biguint")]
    pub total: BigUint,
}

impl CentralizerSlice {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// Selects which candidate classes are kept in a slice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct SliceFilter {
    /// Keep only classes whose content is all of `[m]`.
    pub full_content: bool,
}

pub fn centralizer_slice(u: &Word, n: usize, m: Letter, config: &Config) -> Result<CentralizerSlice> {
    slice_with(u, n, m, SliceFilter::default(), config)
}

pub(crate) fn slice_with(
    u: &Word,
    n: usize,
    m: Letter,
    filter: SliceFilter,
    config: &Config,
) -> Result<CentralizerSlice> {
    if m == 0 {
        return Err(Error::Range("max letter m must be at least 1".into()));
    }
    let tester = Centralizer::new(u);
    let mut bounds = tester.fill_bounds(m);
    bounds.full_content = filter.full_content;

    let mut units: Vec<(Partition, Option<Letter>)> = Vec::new();
    for shape in partitions(n) {
        if shape.num_rows() > m as usize {
            continue;
        }
        if shape.size() == 0 {
            units.push((shape, None));
            continue;
        }
        for v in SsytFillings::first_cell_values(&shape, m, bounds) {
            units.push((shape.clone(), Some(v)));
        }
    }

    let visited = AtomicU64::new(0);
    let guard = config.guard;
    let what = format!("centralizer slice (u={u}, n={n}, m={m})");
    let per_unit: Vec<Result<Vec<WeightedClass>>> = config.install(|| {
        units
            .par_iter()
            .map(|(shape, first)| {
                let weight = hook_count(shape);
                let mut fillings = SsytFillings::new(shape, m, bounds);
                if let Some(v) = first {
                    fillings = fillings.with_first(*v);
                }
                let mut kept = Vec::new();
                let mut local = 0u64;
                for p in fillings {
                    local += 1;
                    if local.is_multiple_of(1024) && visited.fetch_add(1024, Ordering::Relaxed) + 1024 > guard {
                        return Err(Error::GuardExceeded {
                            what: what.clone(),
                            limit: guard,
                        });
                    }
                    if tester.contains_class(&p) {
                        kept.push(WeightedClass {
                            tableau: p,
                            weight: weight.clone(),
                        });
                    }
                }
                if visited.fetch_add(local % 1024, Ordering::Relaxed) + local % 1024 > guard {
                    return Err(Error::GuardExceeded {
                        what: what.clone(),
                        limit: guard,
                    });
                }
                Ok(kept)
            })
            .collect()
    });

    let mut classes = Vec::new();
    for unit in per_unit {
        classes.extend(unit?);
    }
    let total = classes.iter().fold(BigUint::zero(), |acc, c| acc + &c.weight);
    Ok(CentralizerSlice {
        base_word: u.clone(),
        n,
        m,
        classes,
        total,
    })
}

/// Every `w ∈ [m]^n` with `uw ≡ wu`, in lexicographic order, by direct
/// comparison of `P(uw)` and `P(wu)` for each word.
pub fn centralizer_words(u: &Word, n: usize, m: Letter, config: &Config) -> Result<Vec<Word>> {
    if m == 0 {
        return Err(Error::Range("max letter m must be at least 1".into()));
    }
    let space = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    config.check(format!("word enumeration [{m}]^{n}"), space)?;
    if n == 0 {
        return Ok(vec![Word::empty()]);
    }
    let chunks: Vec<Vec<Word>> = config.install(|| {
        (1..=m)
            .into_par_iter()
            .map(|first| {
                all_words(n - 1, m)
                    .map(|rest| {
                        let mut letters = Vec::with_capacity(n);
                        letters.push(first);
                        letters.extend_from_slice(rest.letters());
                        Word::from_vec_unchecked(letters)
                    })
                    .filter(|w| in_centralizer(u, w))
                    .collect()
            })
            .collect()
    });
    Ok(chunks.into_iter().flatten().collect())
}
