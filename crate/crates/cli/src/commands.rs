use anyhow::{bail, Context as _, Result};
use plactic::characterize::{self as ch};
use plactic::counting;
use plactic::plactic::{centralizer_slice, centralizer_words, in_centralizer, knuth_class_with_limit};
use plactic::stability::{self as st, FingerprintCache, StabilityReport};
use plactic::tableaux::{jdt_rectify, p_tableau, row, rsk as rsk_pair, singleton_count, SkewConfiguration, Tableau};
use plactic::words::{all_words, concat, multiplicity};
use plactic::{Config, Word};
use serde::Serialize;
use serde_json::{json, Value};

use crate::render::{Output, Table};
use crate::{Check, CountKind};

pub struct Context<'a> {
    pub config: Config,
    pub cache: Option<&'a FingerprintCache>,
}

fn to_json<T: Serialize>(v: &T) -> Result<Value> {
    Ok(serde_json::to_value(v)?)
}

/// Digits when every letter is below 10, otherwise letters separated by spaces.
fn word_cell(w: &Word) -> String {
    if w.letters().iter().all(|&a| a <= 9) {
        w.letters().iter().map(|a| a.to_string()).collect()
    } else {
        w.letters().iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
    }
}

fn row_cell(r: &[u32]) -> String {
    r.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
}

fn tableau_cell(t: &Tableau) -> String {
    t.rows().iter().map(|r| row_cell(r)).collect::<Vec<_>>().join("/")
}

fn tableau_rows(t: &Tableau) -> Table {
    let mut table = Table::new(&["row", "entries"]);
    for (i, r) in t.rows().iter().enumerate() {
        table.push(vec![(i + 1).to_string(), row_cell(r)]);
    }
    table
}

fn flag(b: bool) -> String {
    u8::from(b).to_string()
}

pub fn rsk(word: &Word) -> Result<Output> {
    let (p, q) = rsk_pair(word);
    let mut table = Table::new(&["row", "P", "Q"]);
    for i in 1..=p.num_rows() {
        table.push(vec![i.to_string(), row_cell(row(&p, i)), row_cell(row(&q, i))]);
    }
    let json = json!({ "word": word, "p": to_json(&p)?, "q": to_json(&q)? });
    Ok(Output::new(json, table).summary("P", &p).summary("Q", &q))
}

pub fn jdt(u: Option<Word>, w: Option<Word>, skew: Option<String>) -> Result<Output> {
    if let Some(text) = skew {
        let cfg: SkewConfiguration = serde_json::from_str(&text).context("parsing --skew")?;
        let rect = jdt_rectify(&cfg)?;
        let json = json!({ "skew": to_json(&cfg)?, "rectified": to_json(&rect)? });
        return Ok(Output::new(json, tableau_rows(&rect)).summary("rectified", &rect));
    }
    let (Some(u), Some(w)) = (u, w) else {
        bail!("give both words u and w, or --skew");
    };
    let cfg = SkewConfiguration::product(&p_tableau(&u), &p_tableau(&w));
    let rect = jdt_rectify(&cfg)?;
    let inserted = p_tableau(&concat(&u, &w));
    let agrees = rect == inserted;
    let json = json!({
        "u": u,
        "w": w,
        "skew": to_json(&cfg)?,
        "rectified": to_json(&rect)?,
        "insertion": to_json(&inserted)?,
        "agrees": agrees,
    });
    let counterexample = (!agrees).then(|| format!("jdt gives {rect} but P(uw) = {inserted}"));
    Ok(Output::new(json, tableau_rows(&rect))
        .summary("rectified", &rect)
        .summary("P(uw)", &inserted)
        .verdict(agrees, counterexample))
}

pub fn knuth_class(word: &Word, limit: usize) -> Result<Output> {
    let class = knuth_class_with_limit(word, limit)?;
    let mut table = Table::new(&["word"]);
    for v in &class {
        table.push(vec![word_cell(v)]);
    }
    let p = p_tableau(word);
    let json = json!({ "word": word, "tableau": to_json(&p)?, "size": class.len(), "members": class });
    Ok(Output::new(json, table).summary("P", &p).summary("size", class.len()))
}

pub fn centralizer(ctx: &Context, u: &Word, n: usize, m: u32, witnesses: bool) -> Result<Output> {
    let slice = centralizer_slice(u, n, m, &ctx.config)?;
    let mut table = Table::new(&["shape", "tableau", "weight"]);
    for c in &slice.classes {
        table.push(vec![
            row_cell(&c.tableau.shape().parts().iter().map(|&x| x as u32).collect::<Vec<_>>()),
            tableau_cell(&c.tableau),
            c.weight.to_string(),
        ]);
    }
    let mut json = to_json(&slice)?;
    let mut out_plain = None;
    if witnesses {
        let words = centralizer_words(u, n, m, &ctx.config)?;
        let mut text = String::new();
        for v in &words {
            text.push_str(&word_cell(v));
            text.push('\n');
        }
        out_plain = Some(text);
        json["witnesses"] = to_json(&words)?;
    }
    let mut out = Output::new(json, table)
        .summary("u", u)
        .summary("n", n)
        .summary("m", m)
        .summary("classes", slice.class_count())
        .summary("total", &slice.total);
    out.plain = out_plain;
    Ok(out)
}

fn conditions_table(conditions: &[(&str, bool)]) -> Table {
    let mut table = Table::new(&["condition", "holds"]);
    for (name, v) in conditions {
        table.push(vec![name.to_string(), flag(*v)]);
    }
    table
}

fn check_output(
    check: &str,
    inputs: Value,
    quantities: Value,
    conditions: &[(&str, bool)],
    passed: bool,
    detail: String,
) -> Output {
    let conds: serde_json::Map<String, Value> = conditions
        .iter()
        .map(|(k, v)| (k.to_string(), Value::Bool(*v)))
        .collect();
    let json = json!({
        "check": check,
        "inputs": inputs,
        "quantities": quantities,
        "conditions": conds,
        "passed": passed,
    });
    Output::new(json, conditions_table(conditions))
        .summary("check", check)
        .summary("passed", passed)
        .verdict(passed, (!passed).then_some(detail))
}

pub fn characterize(check: Check) -> Result<Output> {
    Ok(match check {
        Check::COne { w } => {
            let (direct, ones, lwi) = ch::c_one_membership(&w);
            let passed = direct == ones && ones == lwi;
            check_output(
                "c-one",
                json!({ "w": w }),
                json!({ "row1": row(&p_tableau(&w), 1) }),
                &[
                    ("in_centralizer", direct),
                    ("row1_all_ones", ones),
                    ("lwi_equals_lwi1", lwi),
                ],
                passed,
                format!("conditions disagree for w = {w}"),
            )
        }
        Check::Staircase { w, m } => {
            let closed = ch::staircase_membership(&w, m)?;
            let direct = in_centralizer(&Word::staircase(m), &w);
            check_output(
                "staircase",
                json!({ "w": w, "m": m }),
                json!({ "tableau": to_json(&p_tableau(&w))? }),
                &[("rows_bounded", closed), ("in_centralizer", direct)],
                closed == direct,
                format!("w = {w}, m = {m}: closed form {closed}, direct {direct}"),
            )
        }
        Check::RowBound { w, u } => {
            let bound = ch::row_bound_check(&w, &u);
            let direct = in_centralizer(&u, &w);
            check_output(
                "row-bound",
                json!({ "w": w, "u": u }),
                json!({ "depth": plactic::plactic::top_descent_depth(&u), "max_u": u.max_letter() }),
                &[("rows_bounded", bound), ("in_centralizer", direct)],
                bound || !direct,
                format!("w = {w} lies in C({u}) but violates the row bound"),
            )
        }
        Check::R2 { w, u } => {
            let formula = ch::r2_product_length(&w, &u)?;
            let actual = row(&p_tableau(&concat(&w, &u)), 2).len();
            check_output(
                "r2",
                json!({ "w": w, "u": u }),
                json!({ "formula": formula, "row2_length": actual }),
                &[("formula_matches", formula == actual)],
                formula == actual,
                format!("formula {formula} but |R2(P(wu))| = {actual}"),
            )
        }
        Check::TwoLetter { u, w } => {
            let c = match ch::two_letter_conditions(&u, &w) {
                Err(plactic::Error::SingleLetterCase { .. }) => return single_letter(&u, &w),
                other => other?,
            };
            let direct = in_centralizer(&u, &w);
            check_output(
                "two-letter",
                json!({ "u": u, "w": w }),
                to_json(&c)?,
                &[("counts", c.counts), ("rows", c.rows), ("in_centralizer", direct)],
                c.holds() == direct,
                format!("u = {u}, w = {w}: theorem {}, direct {direct}", c.holds()),
            )
        }
        Check::C1c2 { u, k_max } => {
            let ok = ch::c1c2_power_invariance(&u, k_max)?;
            let pu = p_tableau(&u);
            check_output(
                "c1c2",
                json!({ "u": u, "k_max": k_max }),
                json!({
                    "m1": multiplicity(&u, 1),
                    "m2": multiplicity(&u, 2),
                    "c1": singleton_count(&pu, 1),
                    "c2": singleton_count(&pu, 2),
                }),
                &[("invariant", ok)],
                ok,
                format!("singleton count of some power of {u} differs from u"),
            )
        }
        Check::RowShift { u, k } => {
            let ok = ch::row_shift_check(&u, k)?;
            check_output(
                "row-shift",
                json!({ "u": u, "k": k }),
                json!({
                    "p_k": to_json(&p_tableau(&plactic::words::power(&u, k)))?,
                    "p_k1": to_json(&p_tableau(&plactic::words::power(&u, k + 1)))?,
                }),
                &[("rows_shift", ok)],
                ok,
                format!("rows of P(u^{}) are not shifted rows of P(u^{k}) for u = {u}", k + 1),
            )
        }
        Check::LwiGrowth { u, i, k } => {
            let ok = ch::lwi_growth_check(&u, i, k)?;
            let before = plactic::tableaux::greene_invariant(&plactic::words::power(&u, k), i);
            let after = plactic::tableaux::greene_invariant(&plactic::words::power(&u, k + 1), i);
            check_output(
                "lwi-growth",
                json!({ "u": u, "i": i, "k": k }),
                json!({ "lwi_k": before, "lwi_k1": after }),
                &[("grows_by_i", ok)],
                ok,
                format!("lwi_{i}(u^{}) = {after} < {before} + {i}", k + 1),
            )
        }
    })
}

/// `u = a^n` has `C(u) = C(a)`; for `a = 1` membership is also read off row 1.
fn single_letter(u: &Word, w: &Word) -> Result<Output> {
    let a = u.max_letter();
    let direct = in_centralizer(u, w);
    let base = in_centralizer(&Word::new(vec![a])?, w);
    let mut conditions = vec![("in_centralizer", direct), ("in_centralizer_of_letter", base)];
    let mut passed = direct == base;
    if a == 1 {
        let ones = row(&p_tableau(w), 1).iter().all(|&x| x == 1);
        conditions.push(("row1_all_ones", ones));
        passed &= ones == direct;
    }
    Ok(check_output(
        "single-letter",
        json!({ "u": u, "w": w }),
        json!({ "letter": a }),
        &conditions,
        passed,
        format!("u = {u}, w = {w}: C(u) and C({a}) disagree"),
    ))
}

fn stability_summary(out: Output, r: &StabilityReport) -> Output {
    let index = r
        .observed_stabilization_index
        .map_or_else(|| format!("none within K = {}", r.max_power), |i| i.to_string());
    let mut out = out
        .summary("u", &r.base_word)
        .summary("truncation", format!("L = {}, M = {}", r.max_len, r.alphabet))
        .summary("observed stabilization index", index);
    for t in &r.transitions {
        let sample: Vec<String> = t
            .gained
            .iter()
            .chain(&t.lost)
            .take(4)
            .map(|c| word_cell(&c.tableau.reading_word()))
            .collect();
        out = out.summary(
            &format!("change {} -> {}", t.from_power, t.to_power),
            format!(
                "+{} / -{} classes, e.g. {}",
                t.gained_classes,
                t.lost_classes,
                sample.join(" ")
            ),
        );
    }
    out.summary("note", &r.evidence)
}

pub fn stability(ctx: &Context, u: &Word, max_power: usize, max_len: usize, m: u32) -> Result<Output> {
    let r = st::stability_probe(u, max_power, max_len, m, &ctx.config, ctx.cache)?;
    let mut table = Table::new(&["u", "k", "fingerprint", "size", "classes", "stabilized"]);
    for p in &r.powers {
        table.push(vec![
            word_cell(u),
            p.k.to_string(),
            p.fingerprint.to_string(),
            p.size.to_string(),
            p.classes.to_string(),
            flag(r.stabilized_at(p.k)),
        ]);
    }
    Ok(stability_summary(Output::new(to_json(&r)?, table), &r))
}

pub fn count(ctx: &Context, kind: CountKind) -> Result<Output> {
    let cfg = &ctx.config;
    let (json, header, cells): (Value, &[&str], Vec<String>) = match kind {
        CountKind::C { n, m, u } => {
            let v = counting::count_c(n, m, &u, cfg)?;
            (
                json!({ "kind": "c", "n": n, "m": m, "u": u, "value": to_json_big(&v)? }),
                &["n", "m", "u", "value"],
                vec![n.to_string(), m.to_string(), word_cell(&u), v.to_string()],
            )
        }
        CountKind::Refined { n, m, k, u } => {
            let v = counting::count_c_refined(n, m, k, &u, cfg)?;
            (
                json!({ "kind": "refined", "n": n, "m": m, "k": k, "u": u, "value": to_json_big(&v)? }),
                &["n", "m", "k", "u", "value"],
                vec![
                    n.to_string(),
                    m.to_string(),
                    k.to_string(),
                    word_cell(&u),
                    v.to_string(),
                ],
            )
        }
        CountKind::B { n, k } => {
            let v = counting::b_count(n, k, cfg)?;
            (
                json!({ "kind": "b", "n": n, "k": k, "value": to_json_big(&v)? }),
                &["n", "k", "value"],
                vec![n.to_string(), k.to_string(), v.to_string()],
            )
        }
        CountKind::Schur { n, m } => {
            let v = counting::c_via_schur_formula(n, m, cfg)?;
            (
                json!({ "kind": "schur", "n": n, "m": m, "value": to_json_big(&v)? }),
                &["n", "m", "value"],
                vec![n.to_string(), m.to_string(), v.to_string()],
            )
        }
    };
    let mut table = Table::new(header);
    table.push(cells);
    Ok(Output::new(json, table))
}

fn to_json_big(v: &impl ToString) -> Result<Value> {
    Ok(Value::Number(v.to_string().parse()?))
}

pub fn coeffs(ctx: &Context, n: usize) -> Result<Output> {
    let r = counting::coefficient_report(n, &ctx.config)?;
    let mut table = Table::new(&["n", "k", "a_k", "b_k", "b_direct"]);
    for k in 0..=n {
        table.push(vec![
            n.to_string(),
            k.to_string(),
            if k < n { r.a.coeff(k).to_string() } else { String::new() },
            if k >= 1 {
                r.b.coeff(k).to_string()
            } else {
                String::new()
            },
            if k >= 1 {
                r.b_direct[k - 1].to_string()
            } else {
                String::new()
            },
        ]);
    }
    let c = &r.clauses;
    let clauses = [
        ("a_0 = 0", c.a0_zero),
        ("a_1 = 1", c.a1_one),
        ("a_2 = C(n,n/2) - 2", c.a2_central_minus_two),
        ("a_{n-1} = 1", c.a_top_one),
        ("a_i > 0", c.a_positive),
        ("b_k > 0", c.b_positive),
        ("b_1 = 1", c.b1_one),
        ("b_2 = C(n,n/2) - 1", c.b2_central_minus_one),
        ("b_n = 1", c.b_top_one),
        ("b direct = b interpolated", c.b_direct_matches),
        ("c_{n,m,k} = b_k C(m-1,k-1)", c.refined_product),
        ("b log-concave", c.log_concave),
    ];
    let mut out = Output::new(to_json(&r)?, table);
    for (name, v) in clauses {
        out = out.summary(name, if v { "pass" } else { "FAIL" });
    }
    let below = if r.b_discrepancies_below_n.is_empty() {
        "none".to_string()
    } else {
        r.b_discrepancies_below_n
            .iter()
            .map(|d| format!("m={} value={} expansion={}", d.m, d.value, d.expansion))
            .collect::<Vec<_>>()
            .join("; ")
    };
    out = out.summary("b-expansion discrepancies for m < n", below);
    let failed: Vec<&str> = clauses.iter().filter(|(_, v)| !v).map(|(k, _)| *k).collect();
    let passed = failed.is_empty();
    Ok(out.verdict(passed, (!passed).then(|| format!("n = {n}: {}", failed.join(", ")))))
}

pub fn log_concave(ctx: &Context, n_max: usize) -> Result<Output> {
    let rows = counting::log_concavity_rows(n_max, &ctx.config)?;
    let mut table = Table::new(&["n", "k", "b"]);
    for r in &rows {
        for (k, b) in r.b.iter().enumerate() {
            table.push(vec![r.n.to_string(), (k + 1).to_string(), b.to_string()]);
        }
    }
    let failure = rows.iter().find_map(|r| r.violation.map(|k| (r.n, k)));
    let json = json!({ "which": "logconcave", "n_max": n_max, "rows": to_json(&rows)?, "passed": failure.is_none() });
    Ok(Output::new(json, table)
        .summary("log-concave for all n <= n_max", failure.is_none())
        .verdict(
            failure.is_none(),
            failure.map(|(n, k)| format!("b_{{{n},{k}}}^2 < b_{{{n},{}}} b_{{{n},{}}}", k - 1, k + 1)),
        ))
}

pub fn packed(ctx: &Context, m: u32, len_max: usize, max_power: usize, max_len: usize) -> Result<Output> {
    let r = st::packed_conjecture_sweep(m, len_max, max_power, max_len, &ctx.config, ctx.cache)?;
    let mut table = Table::new(&["u", "first_change_at"]);
    for f in &r.failures {
        table.push(vec![word_cell(&f.base_word), f.first_change_at.to_string()]);
    }
    let counterexample = r
        .failures
        .first()
        .map(|f| format!("C'(u^k) changes at k = {} for u = {}", f.first_change_at, f.base_word));
    Ok(Output::new(to_json(&r)?, table)
        .summary("packed words", r.words)
        .summary("classes probed", r.classes)
        .summary("powers", format!("{m}..={max_power}"))
        .summary("truncation", format!("L = {max_len}, M = {m}"))
        .summary("all pass", r.passed())
        .summary("note", &r.evidence)
        .verdict(r.passed(), counterexample))
}

/// Every `u` over `[a]` with `1 ≤ |u| ≤ len_max` that a proved theorem
/// covers: words over `[2]` must be strongly stable and permutations of
/// `[m]` must be `m`-stable. Other words are counted as skipped.
pub fn stability_family(
    ctx: &Context,
    alphabet: u32,
    len_max: usize,
    max_power: usize,
    max_len: usize,
    trunc_alphabet: u32,
) -> Result<Output> {
    let mut table = Table::new(&["u", "theorem", "holds"]);
    let mut entries = Vec::new();
    let mut skipped = 0usize;
    let mut failure = None;
    for len in 1..=len_max {
        for u in all_words(len, alphabet) {
            let (theorem, holds) = if u.max_letter() <= 2 {
                let ok = st::strong_stability_check_two_letter(
                    &u,
                    max_power,
                    max_len,
                    trunc_alphabet,
                    &ctx.config,
                    ctx.cache,
                )?;
                ("strong", ok)
            } else if u.is_permutation() {
                let ok =
                    st::m_stability_check_permutation(&u, max_power, max_len, trunc_alphabet, &ctx.config, ctx.cache)?;
                ("m-stable", ok)
            } else {
                skipped += 1;
                continue;
            };
            if !holds && failure.is_none() {
                failure = Some(format!(
                    "{u} is not {theorem} at truncation L = {max_len}, M = {trunc_alphabet}"
                ));
            }
            table.push(vec![word_cell(&u), theorem.to_string(), flag(holds)]);
            entries.push(json!({ "u": u, "theorem": theorem, "holds": holds }));
        }
    }
    let passed = failure.is_none();
    let json = json!({
        "which": "stability",
        "alphabet": alphabet,
        "len_max": len_max,
        "max_power": max_power,
        "max_len": max_len,
        "trunc_alphabet": trunc_alphabet,
        "checked": entries,
        "skipped": skipped,
        "passed": passed,
        "evidence": st::EVIDENCE_NOTE,
    });
    Ok(Output::new(json, table)
        .summary("checked", entries.len())
        .summary("skipped (no theorem applies)", skipped)
        .summary("all pass", passed)
        .summary("note", st::EVIDENCE_NOTE)
        .verdict(passed, failure))
}
