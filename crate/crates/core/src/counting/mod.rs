//! Exact counts `c_{n,m}(u)`, their refinement by number of distinct
//! letters, and the binomial-basis coefficients of `c_{n,m}(1)`.

mod poset;

pub use poset::{
    descent_count, g_poly, linear_extensions, linear_extensions_with_limit, poset_from_partition, LabeledPoset,
    LINEAR_EXTENSION_LIMIT,
};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::exact::{self, binomial, central_binomial};
use crate::plactic::{centralizer_slice, slice_with, SliceFilter};
use crate::tableaux::{hook_count, partitions};
use crate::words::{Letter, Word};

fn one() -> Word {
    Word::from_vec_unchecked(vec![1])
}

/// `#{w ∈ C(u) : |w| = n, max w ≤ m}`.
pub fn count_c(n: usize, m: Letter, u: &Word, config: &Config) -> Result<BigUint> {
    Ok(centralizer_slice(u, n, m, config)?.total)
}

/// Entry `k` is the number of slice members with exactly `k` distinct
/// letters, for `k = 0..=min(m, n)`.
pub fn refined_counts(n: usize, m: Letter, u: &Word, config: &Config) -> Result<Vec<BigUint>> {
    let slice = centralizer_slice(u, n, m, config)?;
    let mut out = vec![BigUint::zero(); n.min(m as usize) + 1];
    for class in &slice.classes {
        let mut content = class.tableau.content();
        content.dedup();
        out[content.len()] += &class.weight;
    }
    Ok(out)
}

/// Slice members with exactly `k` distinct letters.
pub fn count_c_refined(n: usize, m: Letter, k: usize, u: &Word, config: &Config) -> Result<BigUint> {
    if k == 0 || k > n.min(m as usize) {
        return Err(Error::Range(format!("k = {k} must lie in 1..={}", n.min(m as usize))));
    }
    Ok(refined_counts(n, m, u, config)?.swap_remove(k))
}

/// Number of words of length `n` in `C(1)` using exactly the letters `1..=k`.
pub fn b_count(n: usize, k: usize, config: &Config) -> Result<BigUint> {
    if k == 0 || k > n {
        return Err(Error::Range(format!("k = {k} must lie in 1..={n}")));
    }
    let filter = SliceFilter { full_content: true };
    Ok(slice_with(&one(), n, k as Letter, filter, config)?.total)
}

/// `b_{n,1}, ..., b_{n,n}`.
pub fn b_row(n: usize, config: &Config) -> Result<Vec<BigUint>> {
    (1..=n).map(|k| b_count(n, k, config)).collect()
}

/// `Σ_{λ ⊢ n} f^λ g_m^λ`.
pub fn c_via_schur_formula(n: usize, m: u64, config: &Config) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Range("n must be at least 1".into()));
    }
    let terms: Vec<Result<BigInt>> = config.install(|| {
        partitions(n)
            .par_iter()
            .map(|shape| Ok(BigInt::from(hook_count(shape)) * g_poly(shape, m)?))
            .collect()
    });
    let mut total = BigInt::zero();
    for t in terms {
        total += t?;
    }
    Ok(total
        .to_biguint()
        .expect("every term is a product of nonnegative counts"))
}

/// Coefficients of a polynomial in the basis `C(m - shift, j)`, `j = 0, 1, ...`.
/// With `basis_shift = 1` entry `j` is `b_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffVector {
    pub basis_shift: u8,
    #[serde(with = "exact::bigint_vec")]
    pub coeffs: Vec<BigInt>,
}

impl CoeffVector {
    /// Coefficient of `C(m - shift, k - shift)`; zero outside the stored range.
    pub fn coeff(&self, k: usize) -> BigInt {
        k.checked_sub(self.basis_shift as usize)
            .and_then(|j| self.coeffs.get(j))
            .cloned()
            .unwrap_or_default()
    }

    pub fn eval(&self, m: i64) -> BigInt {
        let x = m - self.basis_shift as i64;
        self.coeffs.iter().enumerate().map(|(j, c)| c * binomial(x, j)).sum()
    }
}

/// Newton forward differences: `values[i]` is the polynomial at
/// `m = shift + i`. The first `degree + 1` values fix the coefficients and
/// every further value must be reproduced exactly.
pub fn expand_in_binomial_basis(values: &[BigInt], shift: u8, degree: usize) -> Result<CoeffVector> {
    if values.len() < degree + 1 {
        return Err(Error::Range(format!(
            "degree {degree} needs at least {} values, got {}",
            degree + 1,
            values.len()
        )));
    }
    let mut diffs = values.to_vec();
    let mut coeffs = Vec::with_capacity(degree + 1);
    for j in 0..values.len() {
        let c = diffs[0].clone();
        if j <= degree {
            coeffs.push(c);
        } else if !c.is_zero() {
            return Err(Error::Inconsistent {
                degree,
                index: j,
                value: c.to_string(),
            });
        }
        for i in 0..diffs.len() - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.pop();
    }
    Ok(CoeffVector {
        basis_shift: shift,
        coeffs,
    })
}

/// First interior `k` (1-based) with `b_k² < b_{k-1} b_{k+1}`.
pub fn log_concavity_violation(b: &[BigUint]) -> Option<usize> {
    (1..b.len().saturating_sub(1))
        .find(|&i| &b[i] * &b[i] < &b[i - 1] * &b[i + 1])
        .map(|i| i + 1)
}

/// Pass/fail verdicts for the clauses of the two coefficient theorems.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseVerdicts {
    pub a0_zero: bool,
    pub a1_one: bool,
    pub a2_central_minus_two: bool,
    pub a_top_one: bool,
    pub a_positive: bool,
    pub b_positive: bool,
    pub b1_one: bool,
    pub b2_central_minus_one: bool,
    pub b_top_one: bool,
    pub b_direct_matches: bool,
    pub refined_product: bool,
    pub log_concave: bool,
}

impl ClauseVerdicts {
    pub fn all(&self) -> bool {
        self.a0_zero
            && self.a1_one
            && self.a2_central_minus_two
            && self.a_top_one
            && self.a_positive
            && self.b_positive
            && self.b1_one
            && self.b2_central_minus_one
            && self.b_top_one
            && self.b_direct_matches
            && self.refined_product
            && self.log_concave
    }
}

/// A point `m < n` where the `b`-expansion does not reproduce `c_{n,m}(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub m: u64,
    #[serde(with = "exact::bigint")]
    pub value: BigInt,
    #[serde(with = "exact::bigint")]
    pub expansion: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientReport {
    pub n: usize,
    /// `c_{n,m}(1)` for `m = 0, 1, ..., n + 2`.
    #[serde(with = "exact::bigint_vec")]
    pub values: Vec<BigInt>,
    pub a: CoeffVector,
    pub b: CoeffVector,
    /// `b_{n,k}` counted directly as `k`-packed words, `k = 1..=n`.
    #[serde(with = "exact::biguint_vec")]
    pub b_direct: Vec<BigUint>,
    pub clauses: ClauseVerdicts,
    /// Points `m < n` where the `b`-expansion fails; empty when it holds
    /// for every `m ≥ 0`.
    pub b_discrepancies_below_n: Vec<Discrepancy>,
}

impl CoefficientReport {
    pub fn passed(&self) -> bool {
        self.clauses.all()
    }
}

pub fn coefficient_report(n: usize, config: &Config) -> Result<CoefficientReport> {
    if n < 2 {
        return Err(Error::Range(format!("coefficient theorems need n >= 2, got {n}")));
    }
    let u = one();
    let mut values = vec![BigInt::zero()];
    let mut refined = vec![Vec::new()];
    for m in 1..=n as Letter + 2 {
        let counts = refined_counts(n, m, &u, config)?;
        values.push(BigInt::from(counts.iter().sum::<BigUint>()));
        refined.push(counts);
    }
    let a = expand_in_binomial_basis(&values, 0, n - 1)?;
    let b = expand_in_binomial_basis(&values[1..], 1, n - 1)?;
    let b_direct = b_row(n, config)?;

    let central = BigInt::from(central_binomial(n as u64));
    let a_at = |k| a.coeff(k);
    let b_at = |k| b.coeff(k);
    let b_direct_int: Vec<BigInt> = b_direct.iter().cloned().map(BigInt::from).collect();
    let refined_product = (1..=n as Letter + 2).all(|m| {
        (1..=n.min(m as usize)).all(|k| {
            BigInt::from(refined[m as usize][k].clone()) == &b_direct_int[k - 1] * binomial(m as i64 - 1, k - 1)
        })
    });
    let clauses = ClauseVerdicts {
        a0_zero: a_at(0).is_zero(),
        a1_one: a_at(1).is_one(),
        a2_central_minus_two: a_at(2) == &central - 2,
        a_top_one: a_at(n - 1).is_one(),
        a_positive: (1..n).all(|k| a_at(k).is_positive()),
        b_positive: (1..=n).all(|k| b_at(k).is_positive()),
        b1_one: b_at(1).is_one(),
        b2_central_minus_one: b_at(2) == &central - 1,
        b_top_one: b_at(n).is_one(),
        b_direct_matches: (1..=n).all(|k| b_at(k) == b_direct_int[k - 1]),
        refined_product,
        log_concave: log_concavity_violation(&b_direct).is_none(),
    };
    let b_discrepancies_below_n = (0..n as u64)
        .filter_map(|m| {
            let expansion = b.eval(m as i64);
            let value = values[m as usize].clone();
            (expansion != value).then_some(Discrepancy { m, value, expansion })
        })
        .collect();
    Ok(CoefficientReport {
        n,
        values,
        a,
        b,
        b_direct,
        clauses,
        b_discrepancies_below_n,
    })
}

/// `b_{n,k}` and the log-concavity verdict for one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BRow {
    pub n: usize,
    #[serde(with = "exact::biguint_vec")]
    pub b: Vec<BigUint>,
    /// First interior `k` where `b_k² < b_{k-1} b_{k+1}`.
    pub violation: Option<usize>,
}

pub fn log_concavity_rows(n_max: usize, config: &Config) -> Result<Vec<BRow>> {
    (1..=n_max)
        .map(|n| {
            let b = b_row(n, config)?;
            Ok(BRow {
                n,
                violation: log_concavity_violation(&b),
                b,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plactic::in_centralizer;
    use crate::words::{all_words, is_packed};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn cfg() -> Config {
        Config::default()
    }

    fn brute_c(n: usize, m: Letter) -> usize {
        all_words(n, m).filter(|w| in_centralizer(&one(), w)).count()
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_c(2, 2, &one(), &cfg()).unwrap(), BigUint::from(2u32));
        for n in 0..=6 {
            assert_eq!(count_c(n, 1, &one(), &cfg()).unwrap(), BigUint::one());
        }
        assert_eq!(count_c(4, 2, &one(), &cfg()).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn refined_examples() {
        assert_eq!(count_c_refined(2, 2, 1, &one(), &cfg()).unwrap(), BigUint::one());
        assert_eq!(count_c_refined(2, 2, 2, &one(), &cfg()).unwrap(), BigUint::one());
        assert!(count_c_refined(2, 2, 3, &one(), &cfg()).is_err());
        assert!(count_c_refined(2, 2, 0, &one(), &cfg()).is_err());
        let b32 = b_count(3, 2, &cfg()).unwrap();
        assert_eq!(count_c_refined(3, 3, 2, &one(), &cfg()).unwrap(), b32 * 2u32);
    }

    #[test]
    fn refinement_sums_and_factors() {
        for n in 1..=6 {
            let b = b_row(n, &cfg()).unwrap();
            for m in 1..=6u32 {
                let counts = refined_counts(n, m, &one(), &cfg()).unwrap();
                let total: BigUint = counts.iter().sum();
                assert_eq!(total, count_c(n, m, &one(), &cfg()).unwrap());
                for k in 1..=n.min(m as usize) {
                    assert_eq!(
                        BigInt::from(counts[k].clone()),
                        BigInt::from(b[k - 1].clone()) * binomial(m as i64 - 1, k - 1),
                        "n={n} m={m} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn b_examples() {
        for n in 1..=7 {
            assert_eq!(b_count(n, 1, &cfg()).unwrap(), BigUint::one());
            assert_eq!(b_count(n, n, &cfg()).unwrap(), BigUint::one());
        }
        assert_eq!(b_count(4, 2, &cfg()).unwrap(), BigUint::from(5u32));
        assert!(b_count(3, 4, &cfg()).is_err());
    }

    #[test]
    fn b_matches_brute_force() {
        for n in 1..=6 {
            for k in 1..=n.min(5) {
                let brute = all_words(n, k as Letter)
                    .filter(|w| is_packed(w, k as Letter) && in_centralizer(&one(), w))
                    .count();
                assert_eq!(b_count(n, k, &cfg()).unwrap(), BigUint::from(brute), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn packed_witness_lies_in_b() {
        for n in 1..=8usize {
            for k in 1..=n {
                let mut letters: Vec<Letter> = (1..=k as Letter).rev().collect();
                letters.extend(std::iter::repeat_n(1, n - k));
                let w = Word::new(letters).unwrap();
                assert!(is_packed(&w, k as Letter));
                assert!(in_centralizer(&one(), &w), "w={w}");
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let a = expand_in_binomial_basis(&ints(&[0, 1]), 0, 1).unwrap();
        assert_eq!(a.coeffs, ints(&[0, 1]));
        let c = expand_in_binomial_basis(&ints(&[7, 7, 7, 7]), 0, 3).unwrap();
        assert_eq!(c.coeffs, ints(&[7, 0, 0, 0]));
        let v: Vec<BigInt> = (0..3).map(|m| BigInt::from(brute_c(3, m))).collect();
        assert_eq!(v, ints(&[0, 1, 3]));
        assert_eq!(expand_in_binomial_basis(&v, 0, 2).unwrap().coeffs, ints(&[0, 1, 1]));
    }

    #[test]
    fn expansion_rejects_inconsistent_values() {
        let err = expand_in_binomial_basis(&ints(&[0, 1, 4]), 0, 1).unwrap_err();
        assert_eq!(
            err,
            Error::Inconsistent {
                degree: 1,
                index: 2,
                value: "2".into()
            }
        );
        assert!(expand_in_binomial_basis(&ints(&[1]), 0, 1).is_err());
    }

    #[test]
    fn expansion_reproduces_polynomials() {
        let f = |m: i64| m * m * m - 4 * m + 9;
        let vals: Vec<BigInt> = (1..8).map(|m| BigInt::from(f(m))).collect();
        let cv = expand_in_binomial_basis(&vals, 1, 3).unwrap();
        for m in -3..12 {
            assert_eq!(cv.eval(m), BigInt::from(f(m)));
        }
    }

    #[test]
    fn bases_reproduce_counts_beyond_interpolation() {
        for n in 2..=7 {
            let values: Vec<BigInt> = (0..=n as Letter + 3)
                .map(|m| {
                    if m == 0 {
                        BigInt::zero()
                    } else {
                        count_c(n, m, &one(), &cfg()).unwrap().into()
                    }
                })
                .collect();
            let a = expand_in_binomial_basis(&values[..n], 0, n - 1).unwrap();
            let b = expand_in_binomial_basis(&values[1..=n], 1, n - 1).unwrap();
            for (m, v) in values.iter().enumerate() {
                assert_eq!(&a.eval(m as i64), v, "a n={n} m={m}");
                assert_eq!(&b.eval(m as i64), v, "b n={n} m={m}");
            }
        }
    }

    #[test]
    fn schur_formula_examples() {
        assert_eq!(c_via_schur_formula(2, 2, &cfg()).unwrap(), BigUint::from(2u32));
        assert_eq!(c_via_schur_formula(1, 5, &cfg()).unwrap(), BigUint::from(brute_c(1, 5)));
        assert_eq!(brute_c(1, 5), 1);
        assert!(c_via_schur_formula(3, 1, &cfg()).is_err());
    }

    #[test]
    fn schur_formula_matches_slices() {
        for n in 1..=6 {
            for m in 2..=6u32 {
                assert_eq!(
                    c_via_schur_formula(n, m as u64, &cfg()).unwrap(),
                    count_c(n, m, &one(), &cfg()).unwrap(),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn report_examples() {
        let r = coefficient_report(2, &cfg()).unwrap();
        assert_eq!(r.a.coeffs, ints(&[0, 1]));
        assert_eq!(r.b.coeffs, ints(&[1, 1]));
        assert!(r.passed(), "{:?}", r.clauses);
        let r = coefficient_report(4, &cfg()).unwrap();
        assert_eq!(r.a.coeff(2), BigInt::from(4));
        assert_eq!(r.b.coeff(2), BigInt::from(5));
        assert!(r.passed());
        assert!(r.b_discrepancies_below_n.is_empty());
        assert!(coefficient_report(1, &cfg()).is_err());
    }

    #[test]
    fn report_json_round_trip() {
        let r = coefficient_report(3, &cfg()).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: CoefficientReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn log_concavity_helper() {
        let v = |x: &[u32]| x.iter().map(|&a| BigUint::from(a)).collect::<Vec<_>>();
        assert_eq!(log_concavity_violation(&v(&[1, 3, 1])), None);
        assert_eq!(log_concavity_violation(&v(&[1, 1, 3])), Some(2));
        assert_eq!(log_concavity_violation(&v(&[])), None);
    }
}
