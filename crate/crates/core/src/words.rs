//! Words over the positive integers.
//!
//! A [`Word`] is the monoid element: a finite, possibly empty, sequence of
//! letters drawn from `1, 2, 3, ...`. Letter `0` is rejected everywhere.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A letter of the alphabet. Always at least 1 inside a [`Word`].
pub type Letter = u32;

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word(letters))
    }

    /// Callers guarantee every letter is positive.
    pub(crate) fn from_vec_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&a| a > 0));
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter, or 0 for the empty word.
    pub fn max_letter(&self) -> Letter {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// The decreasing permutation `m (m-1) ... 1`.
    pub fn staircase(m: Letter) -> Self {
        Word((1..=m).rev().collect())
    }

    /// `1 2 ... m`.
    pub fn identity(m: Letter) -> Self {
        Word((1..=m).collect())
    }

    /// True if the word is a rearrangement of `1..=len`.
    pub fn is_permutation(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n + 1];
        for &a in &self.0 {
            let a = a as usize;
            if a > n || seen[a] {
                return false;
            }
            seen[a] = true;
        }
        true
    }

    /// Number of distinct letters.
    pub fn distinct_count(&self) -> usize {
        let mut v = self.0.clone();
        v.sort_unstable();
        v.dedup();
        v.len()
    }
}

pub fn concat(u: &Word, v: &Word) -> Word {
    let mut letters = Vec::with_capacity(u.len() + v.len());
    letters.extend_from_slice(&u.0);
    letters.extend_from_slice(&v.0);
    Word(letters)
}

pub fn power(u: &Word, k: usize) -> Word {
    Word(u.0.repeat(k))
}

pub fn multiplicity(u: &Word, a: Letter) -> usize {
    u.0.iter().filter(|&&x| x == a).count()
}

/// Subsequence of letters `<= m`, order preserved.
pub fn restrict(w: &Word, m: Letter) -> Word {
    Word(w.0.iter().copied().filter(|&a| a <= m).collect())
}

/// Replaces each letter by its rank among the distinct letters of `w`.
pub fn standardize(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut values = w.0.clone();
    values.sort_unstable();
    values.dedup();
    let ranked =
        w.0.iter()
            .map(|a| values.binary_search(a).expect("letter present") as Letter + 1)
            .collect();
    Ok(Word(ranked))
}

/// True iff `max w = m` and every letter of `[m]` occurs in `w`.
pub fn is_packed(w: &Word, m: Letter) -> bool {
    if w.max_letter() != m {
        return false;
    }
    let mut seen = vec![false; m as usize + 1];
    for &a in &w.0 {
        seen[a as usize] = true;
    }
    seen[1..].iter().all(|&s| s)
}

/// All words of length `n` over `[m]` in lexicographic order.
pub fn all_words(n: usize, m: Letter) -> impl Iterator<Item = Word> {
    let mut current = if m == 0 && n > 0 { None } else { Some(vec![1; n]) };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        let mut i = n;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if next[i] < m {
                next[i] += 1;
                for x in &mut next[i + 1..] {
                    *x = 1;
                }
                current = Some(next);
                break;
            }
        }
        Some(Word(out))
    })
}

/// All words of length `0..=max_len` over `[m]`, shortest first.
pub fn words_up_to(max_len: usize, m: Letter) -> impl Iterator<Item = Word> {
    (0..=max_len).flat_map(move |n| all_words(n, m))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a <= 9) {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
            f.write_str(&parts.join(","))?;
            // A lone multi-digit letter keeps a trailing comma so it is not
            // read back as digits.
            if parts.len() == 1 {
                f.write_str(",")?;
            }
            Ok(())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("Word(ε)")
        } else {
            write!(f, "Word({self})")
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts compact digit strings (`"3122413321"`) or comma-separated
    /// integers (`"10,3,11"`); the form is chosen by the presence of a comma.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let letters: Vec<Letter> = if s.contains(',') {
            s.strip_suffix(',')
                .filter(|rest| !rest.is_empty() && !rest.ends_with(','))
                .unwrap_or(s)
                .split(',')
                .map(|part| {
                    part.trim()
                        .parse::<Letter>()
                        .map_err(|_| bad("expected comma-separated positive integers"))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| bad("expected digits 1-9")))
                .collect::<Result<_>>()?
        };
        Word::new(letters)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn concat_examples() {
        assert_eq!(concat(&w("12"), &w("21")), w("1221"));
        assert_eq!(concat(&Word::empty(), &w("312")), w("312"));
        assert_eq!(concat(&w("1"), &w("1")), w("11"));
    }

    #[test]
    fn power_examples() {
        assert_eq!(power(&w("21"), 2), w("2121"));
        assert_eq!(power(&w("123"), 0), Word::empty());
        assert_eq!(power(&w("1234"), 3), w("123412341234"));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity(&w("1221"), 2), 2);
        assert_eq!(multiplicity(&Word::empty(), 1), 0);
        assert_eq!(multiplicity(&w("3122413321"), 1), 3);
    }

    #[test]
    fn restrict_examples() {
        let x = w("3122413321");
        assert_eq!(restrict(&x, 2), w("122121"));
        assert_eq!(restrict(&x, x.max_letter()), x);
        assert_eq!(restrict(&w("333"), 2), Word::empty());
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&w("3152")).unwrap(), w("3142"));
        assert_eq!(standardize(&w("111")).unwrap(), w("111"));
        assert_eq!(standardize(&w("3122413321")).unwrap(), w("3122413321"));
        assert_eq!(standardize(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn packed_examples() {
        assert!(is_packed(&w("1234"), 4));
        assert!(!is_packed(&w("1224"), 4));
        assert!(is_packed(&w("122121"), 2));
        assert!(!is_packed(&w("122121"), 3));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("10,3,11").letters(), &[10, 3, 11]);
        assert_eq!(w("10,3,11").to_string(), "10,3,11");
        assert_eq!(w("3,1,2").to_string(), "312");
        assert_eq!(w("").len(), 0);
        assert_eq!("102".parse::<Word>(), Err(Error::ZeroLetter));
        assert!("1a".parse::<Word>().is_err());
        assert!("1,,2".parse::<Word>().is_err());
        assert!(",".parse::<Word>().is_err());
        assert_eq!(w("10,").letters(), &[10]);
        assert_eq!(w("10,").to_string(), "10,");
    }

    #[test]
    fn word_enumeration_counts() {
        assert_eq!(all_words(3, 2).count(), 8);
        assert_eq!(all_words(0, 5).count(), 1);
        assert_eq!(words_up_to(2, 2).count(), 7);
        let listed: Vec<String> = all_words(2, 2).map(|x| x.to_string()).collect();
        assert_eq!(listed, ["11", "12", "21", "22"]);
    }

    fn word_strategy(max_letter: Letter, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(1..=max_letter, 0..=max_len).prop_map(Word)
    }

    proptest! {
        #[test]
        fn restrict_composes(x in word_strategy(6, 12), m in 1u32..7, m2 in 1u32..7) {
            prop_assert_eq!(restrict(&restrict(&x, m), m2), restrict(&x, m.min(m2)));
        }

        #[test]
        fn standardize_is_idempotent_and_order_preserving(x in word_strategy(9, 12)) {
            prop_assume!(!x.is_empty());
            let s = standardize(&x).unwrap();
            prop_assert_eq!(standardize(&s).unwrap(), s.clone());
            prop_assert!(is_packed(&s, x.distinct_count() as Letter));
            for i in 0..x.len() {
                for j in i + 1..x.len() {
                    prop_assert_eq!(x.0[i] <= x.0[j], s.0[i] <= s.0[j]);
                }
            }
        }

        #[test]
        fn multiplicity_scales_with_power(x in word_strategy(4, 8), k in 0usize..5, a in 1u32..5) {
            prop_assert_eq!(multiplicity(&power(&x, k), a), k * multiplicity(&x, a));
        }

        #[test]
        fn display_parse_roundtrip(x in word_strategy(14, 10)) {
            prop_assert_eq!(x.to_string().parse::<Word>().unwrap(), x);
        }
    }
}
