//! Closed-form membership tests for `C(1)`, `C(δ_m)` and two-letter `u`,
//! plus the row lemmas for powers of permutations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plactic::{in_centralizer, top_descent_depth};
use crate::tableaux::{greene_invariant, lwi_ending_at, p_tableau, row, singleton_count, Tableau};
use crate::words::{concat, multiplicity, power, Letter, Word};

/// The three equivalent conditions for `w ∈ C(1)`: direct comparison, row 1
/// of `P(w)` is all ones, and `lwi(w) = lwi(w, 1)`.
pub fn c_one_membership(w: &Word) -> (bool, bool, bool) {
    let direct = in_centralizer(&Word::from_vec_unchecked(vec![1]), w);
    let ones = row(&p_tableau(w), 1).iter().all(|&a| a == 1);
    let lwi = greene_invariant(w, 1) == lwi_ending_at(w, 1);
    (direct, ones, lwi)
}

fn rows_bounded(p: &Tableau, rows: usize, bound: Letter) -> bool {
    (1..=rows).all(|i| row(p, i).iter().all(|&a| a <= bound))
}

/// `w ∈ C(δ_m)` iff rows `1..=m` of `P(w)` have entries at most `m`.
pub fn staircase_membership(w: &Word, m: Letter) -> Result<bool> {
    if m == 0 {
        return Err(Error::Range("staircase size m must be at least 1".into()));
    }
    Ok(rows_bounded(&p_tableau(w), m as usize, m))
}

/// The necessary condition on `P(w)` implied by a descending subsequence
/// `m, m-1, ..., m-k+1` of `u` with `m = max u`.
pub fn row_bound_check(w: &Word, u: &Word) -> bool {
    rows_bounded(&p_tableau(w), top_descent_depth(u), u.max_letter())
}

fn require_binary(u: &Word, name: &str) -> Result<()> {
    if u.letters().iter().any(|&a| a > 2) {
        return Err(Error::Alphabet(format!("{name} = {u} has letters outside [2]")));
    }
    Ok(())
}

/// `#R2(w) + #R2(u) + min(c1(u), c2(w))` for `u, w` over `[2]`, which is
/// the length of row 2 of `P(wu)`.
pub fn r2_product_length(w: &Word, u: &Word) -> Result<usize> {
    require_binary(w, "w")?;
    require_binary(u, "u")?;
    let (pw, pu) = (p_tableau(w), p_tableau(u));
    Ok(row(&pw, 2).len() + row(&pu, 2).len() + singleton_count(&pu, 1).min(singleton_count(&pw, 2)))
}

/// Which of the three two-letter theorems applies, by the sign of
/// `m1(u) - m2(u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwoLetterCase {
    FewerOnes,
    Balanced,
    MoreOnes,
}

/// Quantities and verdicts of the two-letter characterization for one pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoLetterConditions {
    pub case: TwoLetterCase,
    pub c1_u: usize,
    pub c2_u: usize,
    pub c1_w: usize,
    pub c2_w: usize,
    /// The singleton-column condition (a).
    pub counts: bool,
    /// Rows 1 and 2 of `P(w)` lie in `[2]`, condition (b).
    pub rows: bool,
}

impl TwoLetterConditions {
    pub fn holds(&self) -> bool {
        self.counts && self.rows
    }
}

pub fn two_letter_conditions(u: &Word, w: &Word) -> Result<TwoLetterConditions> {
    require_binary(u, "u")?;
    let (m1, m2) = (multiplicity(u, 1), multiplicity(u, 2));
    if m1 == 0 || m2 == 0 {
        return Err(Error::SingleLetterCase { word: u.to_string() });
    }
    let (pu, pw) = (p_tableau(u), p_tableau(w));
    let (c1_u, c2_u) = (singleton_count(&pu, 1), singleton_count(&pu, 2));
    let (c1_w, c2_w) = (singleton_count(&pw, 1), singleton_count(&pw, 2));
    let (case, counts) = match m1.cmp(&m2) {
        std::cmp::Ordering::Less => (
            TwoLetterCase::FewerOnes,
            (c1_w == c1_u && c1_u <= c2_w) || (c1_w == c2_w && c1_w < c1_u),
        ),
        std::cmp::Ordering::Equal => (
            TwoLetterCase::Balanced,
            c1_w.min(c2_w) >= c1_u || (c1_w == c2_w && c1_w < c1_u),
        ),
        std::cmp::Ordering::Greater => (
            TwoLetterCase::MoreOnes,
            (c2_w == c2_u && c2_u <= c1_w) || (c1_w == c2_w && c1_w < c2_u),
        ),
    };
    Ok(TwoLetterConditions {
        case,
        c1_u,
        c2_u,
        c1_w,
        c2_w,
        counts,
        rows: rows_bounded(&pw, 2, 2),
    })
}

/// Membership in `C(u)` for `u` over `[2]` using both letters, decided from
/// `P(u)` and `P(w)` alone.
pub fn two_letter_membership(u: &Word, w: &Word) -> Result<bool> {
    two_letter_conditions(u, w).map(|c| c.holds())
}

/// `c1(u^k) = c1(u)` when `m1 ≤ m2` and `c2(u^k) = c2(u)` when `m2 ≤ m1`,
/// for every `k ≤ k_max`.
pub fn c1c2_power_invariance(u: &Word, k_max: usize) -> Result<bool> {
    require_binary(u, "u")?;
    let (m1, m2) = (multiplicity(u, 1), multiplicity(u, 2));
    if m1 == 0 || m2 == 0 {
        return Err(Error::Alphabet(format!("u = {u} must contain both 1 and 2")));
    }
    let pu = p_tableau(u);
    let mut pk = Tableau::empty();
    for _ in 1..=k_max {
        pk.push_word(u.letters());
        if m1 <= m2 && singleton_count(&pk, 1) != singleton_count(&pu, 1) {
            return Ok(false);
        }
        if m2 <= m1 && singleton_count(&pk, 2) != singleton_count(&pu, 2) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn permutation_size(u: &Word) -> Result<Letter> {
    if !u.is_permutation() {
        return Err(Error::NotPermutation(u.to_string()));
    }
    Ok(u.len() as Letter)
}

/// For a permutation `u` of `[m]` and `k ≥ m`: row `i` of `P(u^{k+1})` is
/// `i` followed by row `i` of `P(u^k)`, and `P(u^{k+1}) = P(δ_m u^k)`.
pub fn row_shift_check(u: &Word, k: usize) -> Result<bool> {
    let m = permutation_size(u)?;
    if k < m as usize {
        return Err(Error::Range(format!("k = {k} must be at least m = {m}")));
    }
    let uk = power(u, k);
    let (pk, pk1) = (p_tableau(&uk), p_tableau(&power(u, k + 1)));
    let shifted = (1..=m as usize).all(|i| {
        let r = row(&pk1, i);
        r.first() == Some(&(i as Letter)) && &r[1..] == row(&pk, i)
    });
    Ok(shifted && pk1 == p_tableau(&concat(&Word::staircase(m), &uk)))
}

/// `lwi_i(u^{k+1}) ≥ lwi_i(u^k) + i` for a permutation `u` of `[m]`, `i ≤ m`.
pub fn lwi_growth_check(u: &Word, i: usize, k: usize) -> Result<bool> {
    let m = permutation_size(u)? as usize;
    if i == 0 || k == 0 {
        return Err(Error::Range("i and k must be at least 1".into()));
    }
    if i > m {
        return Err(Error::Range(format!("i = {i} exceeds m = {m}")));
    }
    Ok(greene_invariant(&power(u, k + 1), i) >= greene_invariant(&power(u, k), i) + i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::lwi_bruteforce;
    use crate::words::{all_words, restrict, words_up_to};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn two_letter_bases(max_len: usize) -> Vec<Word> {
        words_up_to(max_len, 2)
            .filter(|u| multiplicity(u, 1) > 0 && multiplicity(u, 2) > 0)
            .collect()
    }

    #[test]
    fn c_one_examples() {
        assert_eq!(c_one_membership(&w("21")), (true, true, true));
        assert_eq!(c_one_membership(&w("12")), (false, false, false));
        assert_eq!(c_one_membership(&w("1111")), (true, true, true));
        assert_eq!(c_one_membership(&Word::empty()), (true, true, true));
    }

    #[test]
    fn c_one_conditions_agree() {
        for x in words_up_to(7, 4) {
            let (a, b, c) = c_one_membership(&x);
            assert!(a == b && b == c, "w={x}: {a} {b} {c}");
        }
    }

    #[test]
    fn staircase_examples() {
        assert!(staircase_membership(&w("121"), 2).unwrap());
        assert!(!staircase_membership(&w("3"), 2).unwrap());
        assert!(staircase_membership(&w("2121"), 2).unwrap());
        assert!(staircase_membership(&w("1"), 0).is_err());
    }

    #[test]
    fn staircase_matches_direct() {
        for m in 1..=3u32 {
            let delta = Word::staircase(m);
            for x in words_up_to(6, m + 2) {
                assert_eq!(
                    staircase_membership(&x, m).unwrap(),
                    in_centralizer(&delta, &x),
                    "m={m} w={x}"
                );
            }
        }
    }

    #[test]
    fn row_bound_examples() {
        assert!(!row_bound_check(&w("31"), &w("21")));
        assert!(row_bound_check(&w("122"), &w("21")));
        assert!(row_bound_check(&w("2121"), &w("21")));
    }

    #[test]
    fn row_bound_is_necessary() {
        for u in words_up_to(3, 3).filter(|u| !u.is_empty()) {
            for x in words_up_to(5, 4) {
                if in_centralizer(&u, &x) {
                    assert!(row_bound_check(&x, &u), "u={u} w={x}");
                }
            }
        }
    }

    #[test]
    fn r2_examples() {
        assert_eq!(r2_product_length(&w("21"), &w("12")).unwrap(), 1);
        assert_eq!(row(&p_tableau(&w("2112")), 2).len(), 1);
        assert_eq!(r2_product_length(&Word::empty(), &Word::empty()).unwrap(), 0);
        assert_eq!(r2_product_length(&w("12"), &w("12")).unwrap(), 1);
        assert_eq!(row(&p_tableau(&w("1212")), 2).len(), 1);
        assert!(matches!(r2_product_length(&w("13"), &w("1")), Err(Error::Alphabet(_))));
    }

    #[test]
    fn r2_identity_exhaustive() {
        for x in words_up_to(6, 2) {
            for u in words_up_to(6, 2) {
                assert_eq!(
                    r2_product_length(&x, &u).unwrap(),
                    row(&p_tableau(&concat(&x, &u)), 2).len(),
                    "w={x} u={u}"
                );
            }
        }
    }

    #[test]
    fn two_letter_examples() {
        assert!(two_letter_membership(&w("12"), &w("21")).unwrap());
        assert!(!two_letter_membership(&w("12"), &w("3")).unwrap());
        assert!(matches!(
            two_letter_membership(&w("11"), &w("1")),
            Err(Error::SingleLetterCase { .. })
        ));
        assert!(matches!(
            two_letter_membership(&w("13"), &w("1")),
            Err(Error::Alphabet(_))
        ));
    }

    #[test]
    fn two_letter_112_sweep() {
        let u = w("112");
        let mut members = 0;
        for x in words_up_to(5, 3) {
            let direct = in_centralizer(&u, &x);
            assert_eq!(two_letter_membership(&u, &x).unwrap(), direct, "w={x}");
            members += usize::from(direct);
        }
        assert_eq!(members, 27);
    }

    #[test]
    fn two_letter_matches_direct() {
        for u in two_letter_bases(4) {
            for x in words_up_to(5, 4) {
                assert_eq!(
                    two_letter_membership(&u, &x).unwrap(),
                    in_centralizer(&u, &x),
                    "u={u} w={x}"
                );
            }
        }
    }

    // The fewer-ones theorem has a second branch read either as
    // `c1(w) = c2(w) < c1(u)` or with `≤`; both readings decide the same set.
    #[test]
    fn fewer_ones_branch_readings_coincide() {
        for u in two_letter_bases(5)
            .into_iter()
            .filter(|u| multiplicity(u, 1) < multiplicity(u, 2))
        {
            for x in words_up_to(6, 2) {
                let c = two_letter_conditions(&u, &x).unwrap();
                let lenient = (c.c1_w == c.c1_u && c.c1_u <= c.c2_w) || (c.c1_w == c.c2_w && c.c1_w <= c.c1_u);
                assert_eq!(lenient && c.rows, in_centralizer(&u, &x), "u={u} w={x}");
                assert_eq!(c.holds(), in_centralizer(&u, &x), "u={u} w={x}");
            }
        }
    }

    #[test]
    fn members_of_two_letter_centralizers_have_binary_top_rows() {
        for u in two_letter_bases(4) {
            for x in words_up_to(5, 4) {
                if in_centralizer(&u, &x) {
                    assert!(rows_bounded(&p_tableau(&x), 2, 2), "u={u} w={x}");
                }
            }
        }
    }

    #[test]
    fn top_rows_split_off_under_binary_products() {
        for x in words_up_to(6, 4) {
            let px = p_tableau(&x);
            if px.num_rows() < 2 || !rows_bounded(&px, 2, 2) {
                continue;
            }
            let low = restrict(&x, 2);
            for u in words_up_to(4, 2) {
                let (xu, ux) = (p_tableau(&concat(&x, &u)), p_tableau(&concat(&u, &x)));
                let low_u = p_tableau(&concat(&low, &u));
                for i in 1..=2 {
                    assert_eq!(row(&xu, i), row(&low_u, i), "w={x} u={u} i={i}");
                }
                for i in 3..=px.num_rows() {
                    assert_eq!(row(&xu, i), row(&px, i), "w={x} u={u} i={i}");
                    assert_eq!(row(&ux, i), row(&px, i), "w={x} u={u} i={i}");
                }
            }
        }
    }

    #[test]
    fn c1c2_examples() {
        assert!(c1c2_power_invariance(&w("12"), 5).unwrap());
        assert!(c1c2_power_invariance(&w("122"), 4).unwrap());
        assert!(matches!(c1c2_power_invariance(&w("1"), 3), Err(Error::Alphabet(_))));
        assert_eq!(singleton_count(&p_tableau(&w("121212")), 1), 1);
    }

    #[test]
    fn c1c2_holds_for_small_words() {
        for u in two_letter_bases(6) {
            assert!(c1c2_power_invariance(&u, 5).unwrap(), "u={u}");
        }
    }

    #[test]
    fn row_shift_examples() {
        assert!(row_shift_check(&w("21"), 2).unwrap());
        assert_eq!(p_tableau(&w("212121")).rows(), &[vec![1, 1, 1], vec![2, 2, 2]]);
        assert!(row_shift_check(&w("1"), 1).unwrap());
        assert!(row_shift_check(&w("1234"), 4).unwrap());
        assert!(matches!(row_shift_check(&w("112"), 3), Err(Error::NotPermutation(_))));
        assert!(matches!(row_shift_check(&w("123"), 2), Err(Error::Range(_))));
    }

    fn permutations(m: Letter) -> Vec<Word> {
        all_words(m as usize, m).filter(Word::is_permutation).collect()
    }

    #[test]
    fn row_shift_for_small_permutations() {
        for m in 1..=3u32 {
            for u in permutations(m) {
                for k in m as usize..=m as usize + 3 {
                    assert!(row_shift_check(&u, k).unwrap(), "u={u} k={k}");
                }
            }
        }
    }

    #[test]
    fn lwi_growth_examples() {
        assert!(lwi_growth_check(&w("21"), 2, 1).unwrap());
        assert_eq!(lwi_bruteforce(&w("2121"), 2).unwrap(), 4);
        assert!(lwi_growth_check(&w("1"), 1, 1).unwrap());
        assert!(lwi_growth_check(&w("312"), 2, 2).unwrap());
        assert!(matches!(lwi_growth_check(&w("21"), 3, 1), Err(Error::Range(_))));
    }

    #[test]
    fn lwi_growth_for_small_permutations() {
        for u in permutations(3) {
            for i in 1..=3 {
                for k in 1..=3 {
                    assert!(lwi_growth_check(&u, i, k).unwrap(), "u={u} i={i} k={k}");
                }
            }
        }
    }
}
