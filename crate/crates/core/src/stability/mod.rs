//! Truncated centralizers `C'(u) = C(u) ∩ [M]^{≤L}` and stability probes
//! comparing them across powers `u^k`.
//!
//! Every truncated set is a union of plactic classes, so it is computed with
//! the class engine and summarized by an order-independent fingerprint: each
//! word `w` hashes to `H(P(w))` and the fingerprint is the sum of the word
//! hashes modulo `2^61 - 1`.

mod cache;

pub use cache::{FingerprintCache, CACHE_SCHEMA};

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::exact;
use crate::plactic::{centralizer_slice, centralizer_words, knuth_class, WeightedClass, KNUTH_CLASS_LIMIT};
use crate::tableaux::{p_tableau, Tableau};
use crate::words::{all_words, is_packed, power, Letter, Word};

pub const FINGERPRINT_MODULUS: u64 = (1 << 61) - 1;

/// Classes listed per side of a mismatch.
pub const WITNESS_CAP: usize = 16;

pub const EVIDENCE_NOTE: &str =
    "equal truncated centralizers are necessary evidence for equal centralizers, not a proof";

/// Hash of a plactic class, from the canonical bytes of its tableau.
pub fn class_hash(p: &Tableau) -> u64 {
    let mut hasher = Sha256::new();
    for row in p.rows() {
        for &a in row {
            hasher.update(a.to_le_bytes());
        }
        hasher.update(0u32.to_le_bytes());
    }
    let digest = hasher.finalize();
    let mut head = [0u8; 8];
    head.copy_from_slice(&digest[..8]);
    u64::from_le_bytes(head) % FINGERPRINT_MODULUS
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % FINGERPRINT_MODULUS as u128) as u64
}

fn add_mod(a: u64, b: u64) -> u64 {
    ((a as u128 + b as u128) % FINGERPRINT_MODULUS as u128) as u64
}

/// Fingerprint of an explicit word set.
pub fn fingerprint_words<'a>(words: impl IntoIterator<Item = &'a Word>) -> u64 {
    words
        .into_iter()
        .fold(0, |acc, w| add_mod(acc, class_hash(&p_tableau(w))))
}

fn fingerprint_classes(classes: &[WeightedClass]) -> u64 {
    let modulus = BigUint::from(FINGERPRINT_MODULUS);
    classes.iter().fold(0, |acc, c| {
        let weight = (&c.weight % &modulus).to_u64().expect("reduced below the modulus");
        add_mod(acc, mul_mod(weight, class_hash(&c.tableau)))
    })
}

/// Summary of one truncated centralizer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerEntry {
    pub fingerprint: u64,
    #[serde(with = "exact::biguint")]
    pub size: BigUint,
    pub classes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedCentralizer {
    pub base_word: Word,
    pub max_len: usize,
    pub alphabet: Letter,
    /// Member classes ordered by length, then by tableau.
    pub classes: Vec<WeightedClass>,
    #[serde(with = "exact::biguint")]
    pub size: BigUint,
    pub fingerprint: u64,
}

impl TruncatedCentralizer {
    pub fn entry(&self) -> PowerEntry {
        PowerEntry {
            fingerprint: self.fingerprint,
            size: self.size.clone(),
            classes: self.classes.len(),
        }
    }

    pub fn tableaux(&self) -> BTreeSet<Tableau> {
        self.classes.iter().map(|c| c.tableau.clone()).collect()
    }
}

fn check_domain(max_len: usize, alphabet: Letter, config: &Config) -> Result<()> {
    if alphabet == 0 {
        return Err(Error::Range("alphabet bound M must be at least 1".into()));
    }
    let space = (alphabet as u128).checked_pow(max_len as u32).unwrap_or(u128::MAX);
    config.check(format!("truncation [{alphabet}]^{max_len}"), space)
}

/// `C(u) ∩ [M]^{≤L}` as plactic classes.
pub fn truncated_centralizer(
    u: &Word,
    max_len: usize,
    alphabet: Letter,
    config: &Config,
) -> Result<TruncatedCentralizer> {
    check_domain(max_len, alphabet, config)?;
    let mut classes = Vec::new();
    for n in 0..=max_len {
        let mut slice = centralizer_slice(u, n, alphabet, config)?.classes;
        slice.sort_by(|a, b| a.tableau.cmp(&b.tableau));
        classes.extend(slice);
    }
    let size = classes.iter().fold(BigUint::zero(), |acc, c| acc + &c.weight);
    let fingerprint = fingerprint_classes(&classes);
    Ok(TruncatedCentralizer {
        base_word: u.clone(),
        max_len,
        alphabet,
        classes,
        size,
        fingerprint,
    })
}

/// Every word of `C(u) ∩ [M]^{≤L}`, shortest first, lexicographic within a length.
pub fn truncated_members(u: &Word, max_len: usize, alphabet: Letter, config: &Config) -> Result<Vec<Word>> {
    check_domain(max_len, alphabet, config)?;
    let mut out = Vec::new();
    for n in 0..=max_len {
        out.extend(centralizer_words(u, n, alphabet, config)?);
    }
    Ok(out)
}

/// The summary for `u^k`, read from `cache` when present.
fn power_entry(
    u: &Word,
    k: usize,
    max_len: usize,
    alphabet: Letter,
    config: &Config,
    cache: Option<&FingerprintCache>,
) -> Result<(PowerEntry, Option<TruncatedCentralizer>)> {
    if let Some(hit) = cache.and_then(|c| c.get(u, k, max_len, alphabet)) {
        return Ok((hit, None));
    }
    let set = truncated_centralizer(&power(u, k), max_len, alphabet, config)?;
    let entry = set.entry();
    if let Some(c) = cache {
        c.put(u, k, max_len, alphabet, &entry)?;
    }
    Ok((entry, Some(set)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerRow {
    pub k: usize,
    pub fingerprint: u64,
    #[serde(with = "exact::biguint")]
    pub size: BigUint,
    pub classes: usize,
}

/// A class on one side of a mismatch, with its words when short enough to list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassWitness {
    pub tableau: Tableau,
    pub words: Vec<Word>,
}

/// Difference between `C'(u^{k})` and `C'(u^{k+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transition {
    pub from_power: usize,
    pub to_power: usize,
    pub gained_classes: usize,
    pub lost_classes: usize,
    pub gained: Vec<ClassWitness>,
    pub lost: Vec<ClassWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub base_word: Word,
    pub max_power: usize,
    pub max_len: usize,
    pub alphabet: Letter,
    pub powers: Vec<PowerRow>,
    /// Smallest `k < K` with `C'(u^k) = ... = C'(u^K)`; absent when
    /// `C'(u^{K-1}) ≠ C'(u^K)` or `K < 2`.
    pub observed_stabilization_index: Option<usize>,
    pub transitions: Vec<Transition>,
    pub evidence: String,
}

impl StabilityReport {
    pub fn stabilized_at(&self, k: usize) -> bool {
        self.observed_stabilization_index.is_some_and(|i| k >= i)
    }
}

fn witnesses(diff: &[Tableau]) -> Result<Vec<ClassWitness>> {
    diff.iter()
        .take(WITNESS_CAP)
        .map(|t| {
            let reading = t.reading_word();
            let words = if reading.len() <= KNUTH_CLASS_LIMIT {
                knuth_class(&reading)?.into_iter().collect()
            } else {
                vec![reading]
            };
            Ok(ClassWitness {
                tableau: t.clone(),
                words,
            })
        })
        .collect()
}

fn sorted_difference(a: &BTreeSet<Tableau>, b: &BTreeSet<Tableau>) -> Vec<Tableau> {
    let mut d: Vec<Tableau> = a.difference(b).cloned().collect();
    d.sort_by_key(|t| t.size());
    d
}

pub fn stability_probe(
    u: &Word,
    max_power: usize,
    max_len: usize,
    alphabet: Letter,
    config: &Config,
    cache: Option<&FingerprintCache>,
) -> Result<StabilityReport> {
    if max_power == 0 {
        return Err(Error::Range("max power K must be at least 1".into()));
    }
    check_domain(max_len, alphabet, config)?;
    let mut powers: Vec<PowerRow> = Vec::with_capacity(max_power);
    let mut entries: Vec<PowerEntry> = Vec::with_capacity(max_power);
    let mut transitions = Vec::new();
    let mut prev_set: Option<TruncatedCentralizer> = None;
    for k in 1..=max_power {
        let (entry, mut set) = power_entry(u, k, max_len, alphabet, config, cache)?;
        if let Some(prev) = entries.last() {
            if *prev != entry {
                let before = match prev_set.take() {
                    Some(s) => s,
                    None => truncated_centralizer(&power(u, k - 1), max_len, alphabet, config)?,
                };
                let after = match set.take() {
                    Some(s) => s,
                    None => truncated_centralizer(&power(u, k), max_len, alphabet, config)?,
                };
                let (tb, ta) = (before.tableaux(), after.tableaux());
                let gained = sorted_difference(&ta, &tb);
                let lost = sorted_difference(&tb, &ta);
                transitions.push(Transition {
                    from_power: k - 1,
                    to_power: k,
                    gained_classes: gained.len(),
                    lost_classes: lost.len(),
                    gained: witnesses(&gained)?,
                    lost: witnesses(&lost)?,
                });
                set = Some(after);
            }
        }
        prev_set = set;
        powers.push(PowerRow {
            k,
            fingerprint: entry.fingerprint,
            size: entry.size.clone(),
            classes: entry.classes,
        });
        entries.push(entry);
    }
    let last = entries.last().expect("max_power >= 1");
    let mut start = max_power;
    while start > 1 && entries[start - 2] == *last {
        start -= 1;
    }
    Ok(StabilityReport {
        base_word: u.clone(),
        max_power,
        max_len,
        alphabet,
        powers,
        observed_stabilization_index: (start < max_power).then_some(start),
        transitions,
        evidence: EVIDENCE_NOTE.to_string(),
    })
}

/// `C'(u^k) = C'(u)` for every `k ≤ K`, for `u` over `[2]`.
pub fn strong_stability_check_two_letter(
    u: &Word,
    max_power: usize,
    max_len: usize,
    alphabet: Letter,
    config: &Config,
    cache: Option<&FingerprintCache>,
) -> Result<bool> {
    if u.letters().iter().any(|&a| a > 2) {
        return Err(Error::Alphabet(format!("u = {u} has letters outside [2]")));
    }
    check_domain(max_len, alphabet, config)?;
    let base = power_entry(u, 1, max_len, alphabet, config, cache)?.0;
    for k in 2..=max_power {
        if power_entry(u, k, max_len, alphabet, config, cache)?.0 != base {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `C'(u^k) = C'(u^{k+1})` for `m ≤ k < K`, for a permutation `u` of `[m]`.
pub fn m_stability_check_permutation(
    u: &Word,
    max_power: usize,
    max_len: usize,
    alphabet: Letter,
    config: &Config,
    cache: Option<&FingerprintCache>,
) -> Result<bool> {
    if !u.is_permutation() {
        return Err(Error::NotPermutation(u.to_string()));
    }
    check_domain(max_len, alphabet, config)?;
    Ok(first_change(u, u.len(), max_power, max_len, alphabet, config, cache)?.is_none())
}

/// First `k` in `from..K` with `C'(u^k) ≠ C'(u^{k+1})`.
fn first_change(
    u: &Word,
    from: usize,
    max_power: usize,
    max_len: usize,
    alphabet: Letter,
    config: &Config,
    cache: Option<&FingerprintCache>,
) -> Result<Option<usize>> {
    let from = from.max(1);
    if from >= max_power {
        return Ok(None);
    }
    let mut prev = power_entry(u, from, max_len, alphabet, config, cache)?.0;
    for k in from + 1..=max_power {
        let next = power_entry(u, k, max_len, alphabet, config, cache)?.0;
        if next != prev {
            return Ok(Some(k - 1));
        }
        prev = next;
    }
    Ok(None)
}

/// A packed base word whose truncated centralizer still changes at `k → k+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackedFailure {
    pub base_word: Word,
    pub first_change_at: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackedSweepReport {
    pub alphabet: Letter,
    pub max_base_len: usize,
    pub max_power: usize,
    pub max_len: usize,
    /// Packed words covered, before merging Knuth-equivalent ones.
    pub words: usize,
    /// Distinct plactic classes of base words actually probed.
    pub classes: usize,
    pub failures: Vec<PackedFailure>,
    pub evidence: String,
}

impl PackedSweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Probes every `m`-packed `u` with `|u| ≤ max_base_len`: does `C'(u^k)`
/// stay constant for `m ≤ k ≤ K` at truncation `(L, m)`? Base words are
/// merged by `P(u)`, keeping the lexicographically first word of each class.
pub fn packed_conjecture_sweep(
    m: Letter,
    max_base_len: usize,
    max_power: usize,
    max_len: usize,
    config: &Config,
    cache: Option<&FingerprintCache>,
) -> Result<PackedSweepReport> {
    check_domain(max_len, m, config)?;
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    let mut words = 0;
    for len in m as usize..=max_base_len {
        let space = (m as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
        config.check(format!("packed base words [{m}]^{len}"), space)?;
        for u in all_words(len, m).filter(|u| is_packed(u, m)) {
            words += 1;
            if seen.insert(p_tableau(&u)) {
                reps.push(u);
            }
        }
    }
    let verdicts: Vec<Result<Option<PackedFailure>>> = config.install(|| {
        reps.par_iter()
            .map(|u| {
                let change = first_change(u, m as usize, max_power, max_len, m, config, cache)?;
                Ok(change.map(|k| PackedFailure {
                    base_word: u.clone(),
                    first_change_at: k,
                }))
            })
            .collect()
    });
    let mut failures = Vec::new();
    for v in verdicts {
        failures.extend(v?);
    }
    Ok(PackedSweepReport {
        alphabet: m,
        max_base_len,
        max_power,
        max_len,
        words,
        classes: reps.len(),
        failures,
        evidence: EVIDENCE_NOTE.to_string(),
    })
}

#[cfg(test)]
mod tests;
