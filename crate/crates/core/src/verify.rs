//! Property suites, one per acceptance criterion, shared by `check` and the tests.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alphabet::{format_letters, parse_word, LieKind, Letter};
use crate::column::{split_column, Column};
use crate::crystal::{
    explore_component, follow_path, highest_weight_path, place_key, s_m_embed_letters, word_f_pow, word_weight,
    Element, GenLetter,
};
use crate::enumerate::{admissible_columns, columns, gen_words, words};
use crate::exec::Exec;
use crate::generalized::{
    apply_r6, apply_r7, generalized_p_symbol_with_derivation, generalized_q_symbol, is_spin_tableau_by_crystal,
    spin_split, triangle, GenTableau, SpinMap, SpinPair,
};
use crate::jdt::{random_skew_tableau, rectify, rectify_all_orders, rectify_traced, SkewTableau};
use crate::plactic::{match_relations, p_symbol, p_symbol_with_derivation};
use crate::schensted::{count_oscillating_by_shape, psi, psi_inverse};
use crate::spin::SpinColumn;
use crate::tableau::{find_a_configurations, highest_weight_tableau, Parity, Shape, Tabloid};

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub number: u8,
    pub name: &'static str,
    pub cases: Vec<Case>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "[{status}] {} {}", self.number, self.name)?;
        for c in &self.cases {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "  {mark} {}: {}", c.label, c.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub exec: Exec,
    pub seed: u64,
    pub samples: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { exec: Exec::default(), seed: 7, samples: 500 }
    }
}

pub const SUITES: [&str; 10] = [
    "crystal-sizes",
    "paper-graphs",
    "splitting",
    "s2-split",
    "plactic",
    "schensted",
    "kn-criterion",
    "insertion-examples",
    "jdt",
    "spin",
];

/// Suite number for a name or a number in `1..=10`.
pub fn suite_number(name: &str) -> Option<u8> {
    if let Ok(k) = name.parse::<u8>() {
        return (1..=10).contains(&k).then_some(k);
    }
    SUITES.iter().position(|&s| s == name).map(|k| k as u8 + 1)
}

pub fn run_suite(number: u8, opts: &CheckOptions) -> Option<SuiteReport> {
    let cases = match number {
        1 => crystal_sizes(),
        2 => drawn_graphs(),
        3 => splitting(opts),
        4 => s2_split(opts),
        5 => plactic(opts),
        6 => schensted(opts),
        7 => kn_criterion(opts),
        8 => insertion_examples(),
        9 => jdt(opts),
        10 => spin(opts),
        _ => return None,
    };
    Some(SuiteReport { number, name: SUITES[number as usize - 1], cases })
}

pub fn run_all(opts: &CheckOptions) -> Vec<SuiteReport> {
    (1..=10).filter_map(|k| run_suite(k, opts)).collect()
}

fn case(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Case {
    Case { label: label.into(), passed, detail: detail.into() }
}

/// Count failures over `items`, keeping the first counterexample.
fn tally<T: Sync, F>(exec: Exec, items: &[T], f: F) -> (usize, Option<String>)
where
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    let bad: Vec<String> = exec.flat_map(items, |x| f(x).into_iter().collect());
    (bad.len(), bad.into_iter().next())
}

fn tally_case(label: impl Into<String>, total: usize, (bad, first): (usize, Option<String>)) -> Case {
    match first {
        None => case(label, true, format!("{total} checked")),
        Some(e) => case(label, false, format!("{bad} of {total} fail; first: {e}")),
    }
}

fn kinds(n: usize) -> [LieKind; 2] {
    [LieKind::b(n), LieKind::d(n)]
}

fn word(kind: LieKind, s: &str) -> Vec<Letter> {
    parse_word(kind, s).expect("fixed word").letters
}

fn crystal_sizes() -> Vec<Case> {
    let mut out = Vec::new();
    for n in 2..=4 {
        for kind in kinds(n) {
            let expected = if kind.is_b() { 2 * n + 1 } else { 2 * n };
            let got = explore_component(kind, &[Letter::unbarred(1)]).map(|c| c.len()).unwrap_or(0);
            out.push(case(format!("{kind} vector"), got == expected, format!("{got} vertices, expected {expected}")));
        }
        let b = LieKind::b(n);
        let got = explore_component(b, &[SpinColumn::standard(n, n)]).map(|c| c.len()).unwrap_or(0);
        out.push(case(format!("{b} spin"), got == 1 << n, format!("{got} vertices, expected {}", 1 << n)));
        let d = LieKind::d(n);
        for (label, top) in [("even", SpinColumn::standard(n, n)), ("odd", SpinColumn::standard_odd(n))] {
            let got = explore_component(d, &[top]).map(|c| c.len()).unwrap_or(0);
            let expected = 1 << (n - 1);
            out.push(case(format!("{d} {label} spin"), got == expected, format!("{got} vertices, expected {expected}")));
        }
    }
    out
}

type EdgeList = &'static [(&'static str, usize, &'static str)];

const BB_121: EdgeList = &[
    ("1 2 1", 1, "1 2 2"),
    ("1 2 1", 2, "1 0 1"),
    ("1 2 2", 2, "1 0 2"),
    ("1 0 1", 1, "2 0 1"),
    ("1 0 1", 2, "1 -2 1"),
    ("1 0 2", 2, "1 -2 2"),
    ("2 0 1", 1, "2 0 2"),
    ("2 0 1", 2, "0 0 1"),
    ("1 -2 1", 1, "2 -2 1"),
    ("1 -2 2", 2, "1 -2 0"),
    ("1 -2 2", 1, "2 -2 2"),
    ("2 0 2", 2, "0 0 2"),
    ("0 0 1", 1, "0 0 2"),
    ("0 0 1", 2, "0 -2 1"),
    ("2 -2 1", 1, "2 -1 1"),
    ("1 -2 0", 2, "1 -2 -2"),
    ("1 -2 0", 1, "2 -2 0"),
    ("2 -2 2", 2, "2 -2 0"),
    ("0 0 2", 2, "0 -2 2"),
    ("0 -2 1", 1, "0 -1 1"),
    ("2 -1 1", 2, "0 -1 1"),
    ("2 -1 1", 1, "2 -1 2"),
    ("2 -2 0", 2, "2 -2 -2"),
    ("2 -2 0", 1, "2 -1 0"),
    ("0 -2 2", 2, "0 -2 0"),
    ("0 -1 1", 2, "-2 -1 1"),
    ("0 -1 1", 1, "0 -1 2"),
    ("2 -1 2", 2, "0 -1 2"),
    ("2 -2 -2", 1, "2 -1 -2"),
    ("2 -1 0", 2, "0 -1 0"),
    ("0 -2 0", 1, "0 -1 0"),
    ("0 -2 0", 2, "0 -2 -2"),
    ("-2 -1 1", 1, "-2 -1 2"),
    ("0 -1 2", 2, "-2 -1 2"),
    ("2 -1 -2", 1, "2 -1 -1"),
    ("0 -1 0", 2, "0 -1 -2"),
    ("0 -2 -2", 1, "0 -1 -2"),
    ("-2 -1 2", 2, "-2 -1 0"),
    ("2 -1 -1", 2, "0 -1 -1"),
    ("0 -1 -2", 1, "0 -1 -1"),
    ("-2 -1 0", 2, "-2 -1 -2"),
    ("0 -1 -1", 2, "-2 -1 -1"),
    ("-2 -1 -2", 1, "-2 -1 -1"),
];

const BB_112: EdgeList = &[
    ("1 1 2", 1, "2 1 2"),
    ("1 1 2", 2, "1 1 0"),
    ("2 1 2", 2, "0 1 2"),
    ("1 1 0", 1, "2 1 0"),
    ("1 1 0", 2, "1 1 -2"),
    ("0 1 2", 2, "-2 1 2"),
    ("2 1 0", 1, "2 2 0"),
    ("2 1 0", 2, "0 1 0"),
    ("1 1 -2", 1, "2 1 -2"),
    ("-2 1 2", 2, "-2 1 0"),
    ("-2 1 2", 1, "-1 1 2"),
    ("2 2 0", 2, "0 2 0"),
    ("0 1 0", 1, "0 2 0"),
    ("0 1 0", 2, "0 1 -2"),
    ("2 1 -2", 1, "2 2 -2"),
    ("-2 1 0", 2, "-2 1 -2"),
    ("-2 1 0", 1, "-1 1 0"),
    ("-1 1 2", 2, "-1 1 0"),
    ("0 2 0", 2, "-2 2 0"),
    ("0 1 -2", 1, "0 2 -2"),
    ("2 2 -2", 2, "0 2 -2"),
    ("2 2 -2", 1, "2 2 -1"),
    ("-1 1 0", 2, "-1 1 -2"),
    ("-1 1 0", 1, "-1 2 0"),
    ("-2 2 0", 2, "-2 0 0"),
    ("0 2 -2", 2, "-2 2 -2"),
    ("0 2 -2", 1, "0 2 -1"),
    ("2 2 -1", 2, "0 2 -1"),
    ("-1 1 -2", 1, "-1 2 -2"),
    ("-1 2 0", 2, "-1 0 0"),
    ("-2 0 0", 1, "-1 0 0"),
    ("-2 0 0", 2, "-2 0 -2"),
    ("-2 2 -2", 1, "-2 2 -1"),
    ("0 2 -1", 2, "-2 2 -1"),
    ("-1 2 -2", 1, "-1 2 -1"),
    ("-1 0 0", 2, "-1 0 -2"),
    ("-2 0 -2", 1, "-1 0 -2"),
    ("-2 2 -1", 2, "-2 0 -1"),
    ("-1 2 -1", 2, "-1 0 -1"),
    ("-1 0 -2", 1, "-1 0 -1"),
    ("-2 0 -1", 2, "-2 -2 -1"),
    ("-1 0 -1", 2, "-1 -2 -1"),
    ("-2 -2 -1", 1, "-1 -2 -1"),
];

const BD_121: EdgeList = &[
    ("1 2 1", 1, "1 2 2"),
    ("1 2 1", 2, "-2 2 1"),
    ("1 2 2", 2, "-2 2 2"),
    ("-2 2 1", 1, "-2 2 2"),
    ("-2 2 1", 2, "-2 -1 1"),
    ("-2 2 2", 2, "-2 -1 2"),
    ("-2 -1 1", 1, "-2 -1 2"),
    ("-2 -1 1", 2, "-2 -1 -2"),
    ("-2 -1 2", 2, "-2 -1 -1"),
    ("-2 -1 -2", 1, "-2 -1 -1"),
];

const BD_112: EdgeList = &[
    ("1 1 2", 1, "2 1 2"),
    ("1 1 2", 2, "-2 1 2"),
    ("2 1 2", 2, "-1 1 2"),
    ("-2 1 2", 1, "-1 1 2"),
    ("-2 1 2", 2, "-2 -2 2"),
    ("-1 1 2", 2, "-1 -2 2"),
    ("-2 -2 2", 1, "-1 -2 2"),
    ("-2 -2 2", 2, "-2 -2 -1"),
    ("-1 -2 2", 2, "-1 -2 -1"),
    ("-2 -2 -1", 1, "-1 -2 -1"),
];

const BD_1B21: EdgeList = &[
    ("1 -2 1", 1, "2 -2 1"),
    ("1 -2 1", 2, "1 -2 -2"),
    ("2 -2 1", 1, "2 -1 1"),
    ("2 -2 1", 2, "2 -2 -2"),
    ("1 -2 -2", 1, "2 -2 -2"),
    ("2 -1 1", 1, "2 -1 2"),
    ("2 -2 -2", 1, "2 -1 -2"),
    ("2 -1 2", 2, "2 -1 -1"),
    ("2 -1 -2", 1, "2 -1 -1"),
];

const BD_11B2: EdgeList = &[
    ("1 1 -2", 1, "2 1 -2"),
    ("1 1 -2", 2, "-2 1 -2"),
    ("2 1 -2", 1, "2 2 -2"),
    ("2 1 -2", 2, "-1 1 -2"),
    ("-2 1 -2", 1, "-1 1 -2"),
    ("2 2 -2", 1, "2 2 -1"),
    ("-1 1 -2", 1, "-1 2 -2"),
    ("2 2 -1", 2, "-1 2 -1"),
    ("-1 2 -2", 1, "-1 2 -1"),
];

const OMEGA2_B2: EdgeList = &[
    ("1 2", 2, "1 0"),
    ("1 0", 2, "1 -2"),
    ("1 -2", 1, "2 -2"),
    ("2 -2", 1, "2 -1"),
    ("1 0", 1, "2 0"),
    ("2 -1", 2, "0 -1"),
    ("2 0", 2, "0 0"),
    ("0 0", 2, "0 -2"),
    ("0 -2", 1, "0 -1"),
    ("0 -1", 2, "-2 -1"),
];

/// `(C, rC, lC)` as drawn in the image of `S_2`.
const OMEGA2_S2: &[(&str, &str, &str)] = &[
    ("1 2", "1 2", "1 2"),
    ("1 0", "1 -2", "1 2"),
    ("1 -2", "1 -2", "1 -2"),
    ("2 -2", "2 -1", "1 -2"),
    ("2 -1", "2 -1", "2 -1"),
    ("2 0", "2 -1", "1 2"),
    ("0 0", "-2 -1", "1 2"),
    ("0 -2", "-2 -1", "1 -2"),
    ("0 -1", "-2 -1", "2 -1"),
    ("-2 -1", "-2 -1", "-2 -1"),
];

/// Arrows forced by the signature rule that the drawings leave out.
const UNDRAWN_BB_121: EdgeList = &[("1 -2 -2", 1, "2 -2 -2")];
const UNDRAWN_BB_112: EdgeList = &[("-2 1 -2", 1, "-1 1 -2")];
const UNDRAWN_BD_1B21: EdgeList = &[("2 -1 1", 2, "2 -1 -2")];
const UNDRAWN_BD_11B2: EdgeList = &[("2 2 -2", 2, "-1 2 -2")];

fn compare_graph(kind: LieKind, hw: &str, drawn: EdgeList, undrawn: EdgeList) -> Case {
    let label = format!("{kind} B({hw})");
    let comp = match explore_component(kind, &word(kind, hw)) {
        Ok(c) => c,
        Err(e) => return case(label, false, e.to_string()),
    };
    let name = |v: &[Letter]| format_letters(v);
    let computed: BTreeSet<(String, usize, String)> =
        comp.edges.iter().map(|&(a, i, b)| (name(&comp.vertices[a]), i, name(&comp.vertices[b]))).collect();
    let edges = |list: EdgeList| -> BTreeSet<(String, usize, String)> {
        list.iter().map(|&(a, i, b)| (name(&word(kind, a)), i, name(&word(kind, b)))).collect()
    };
    let expected = edges(drawn);
    let undrawn = edges(undrawn);
    let cv: BTreeSet<String> = comp.vertices.iter().map(|v| name(v)).collect();
    let ev: BTreeSet<String> = expected.iter().flat_map(|(a, _, b)| [a.clone(), b.clone()]).collect();
    let missing: Vec<_> = expected.difference(&computed).collect();
    let extra: BTreeSet<_> = computed.difference(&expected).cloned().collect();
    let ok = cv == ev && missing.is_empty() && extra == undrawn;
    let detail = if ok && undrawn.is_empty() {
        format!("{} vertices, {} edges", cv.len(), computed.len())
    } else if ok {
        format!("{} vertices, {} edges, undrawn arrow(s) {:?}", cv.len(), computed.len(), undrawn)
    } else {
        format!(
            "vertices {} vs {} drawn; edges missing from computation {:?}; edges not drawn {:?}",
            cv.len(),
            ev.len(),
            missing,
            extra
        )
    };
    case(label, ok, detail)
}

fn drawn_graphs() -> Vec<Case> {
    let (b2, d2) = (LieKind::b(2), LieKind::d(2));
    let mut out = vec![
        compare_graph(b2, "1 2 1", BB_121, UNDRAWN_BB_121),
        compare_graph(b2, "1 1 2", BB_112, UNDRAWN_BB_112),
        compare_graph(d2, "1 2 1", BD_121, &[]),
        compare_graph(d2, "1 1 2", BD_112, &[]),
        compare_graph(d2, "1 -2 1", BD_1B21, UNDRAWN_BD_1B21),
        compare_graph(d2, "1 1 -2", BD_11B2, UNDRAWN_BD_11B2),
        compare_graph(b2, "1 2", OMEGA2_B2, &[]),
    ];
    let mut bad = Vec::new();
    let image = |c: &str| -> Option<Vec<Letter>> { s_m_embed_letters(b2, &word(b2, c), 2).ok() };
    for &(c, r, l) in OMEGA2_S2 {
        let mut expected = word(b2, r);
        expected.extend(word(b2, l));
        let col = Column::new(b2, word(b2, c)).expect("drawn column");
        let split = split_column(&col).map(|p| p.tensor_reading()).ok();
        if image(c).as_ref() != Some(&expected) || split.as_ref() != Some(&expected) {
            bad.push(format!("S_2({c})"));
        }
    }
    for &(a, i, b) in OMEGA2_B2 {
        let step = image(a).and_then(|v| word_f_pow(b2, i, &v, 2));
        if step.is_none() || step != image(b) {
            bad.push(format!("f_{i}^2 on S_2({a})"));
        }
    }
    out.push(case(
        "S_2(B(ω_2)) in B2",
        bad.is_empty(),
        if bad.is_empty() { "10 vertices and 10 doubled edges match".to_string() } else { format!("mismatch at {bad:?}") },
    ));
    out
}

fn splitting(opts: &CheckOptions) -> Vec<Case> {
    let mut out = Vec::new();
    let worked = [
        (LieKind::b(9), "4 5 8 9 0 0 -8 -5 -4", "1 2 3 6 7 9 -8 -5 -4", "4 5 8 9 -7 -6 -3 -2 -1"),
        (LieKind::d(8), "5 6 -8 8 -8 -6 -5 -2", "1 3 4 7 -8 -6 -5 -2", "5 6 -8 -7 -4 -3 -2 -1"),
    ];
    for (kind, c, l, r) in worked {
        let got = Column::parse(kind, c).and_then(|c| c.split());
        let ok = matches!(&got, Ok(p) if p.l.to_string() == l && p.r.to_string() == r);
        let detail = match got {
            Ok(p) => format!("lC = {}, rC = {}", p.l, p.r),
            Err(e) => e.to_string(),
        };
        out.push(case(format!("{kind} worked split of {c}"), ok, detail));
    }
    for n in 2..=4 {
        for kind in kinds(n) {
            let all: Vec<Column> = (1..=n + 1).flat_map(|h| columns(kind, h)).collect();
            let res = tally(opts.exec, &all, |c| {
                let split = split_column(c).is_ok();
                (split != c.is_admissible()).then(|| format!("{c}: split {split}, admissible {}", c.is_admissible()))
            });
            out.push(tally_case(format!("{kind} split ⟺ admissible, h ≤ {}", n + 1), all.len(), res));
        }
    }
    out
}

fn s2_split(opts: &CheckOptions) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 2..=4 {
        for kind in kinds(n) {
            let all: Vec<Column> = (1..=n).flat_map(|h| admissible_columns(kind, h)).collect();
            let res = tally(opts.exec, &all, |c| {
                let transported = s_m_embed_letters(kind, &c.cells, 2).ok();
                let split = split_column(c).ok().map(|p| p.tensor_reading());
                (transported.is_none() || transported != split).then(|| format!("{c}"))
            });
            out.push(tally_case(format!("{kind} S_2 = rC ⊗ lC"), all.len(), res));
        }
    }
    out
}

fn plactic_range() -> Vec<(LieKind, usize)> {
    vec![(LieKind::b(2), 5), (LieKind::d(2), 5), (LieKind::b(3), 4), (LieKind::d(3), 4)]
}

fn plactic(opts: &CheckOptions) -> Vec<Case> {
    let mut out = Vec::new();
    for (kind, max_len) in plactic_range() {
        let all: Vec<Vec<Letter>> = (0..=max_len).flat_map(|l| words(kind, l)).collect();
        let results = opts.exec.map(&all, |w| {
            let (p, d) = p_symbol_with_derivation(kind, w).map_err(|e| format!("{w:?}: {e}"))?;
            if !p.is_orthogonal() {
                return Err(format!("{w:?}: P is not orthogonal"));
            }
            if d.replay(kind).map_err(|e| format!("{w:?}: {e}"))? != p.reading() {
                return Err(format!("{w:?}: derivation does not reach w(P)"));
            }
            let key = place_key(kind, w);
            for r in match_relations(kind, w) {
                let v = r.apply(w).map_err(|e| e.to_string())?;
                if place_key(kind, &v) != key {
                    return Err(format!("{r} changes the crystal position"));
                }
            }
            Ok((p, key))
        });
        let mut errors = Vec::new();
        let mut by_p: HashMap<Tabloid, (Vec<usize>, crate::alphabet::Weight)> = HashMap::new();
        let mut by_key = HashMap::new();
        for r in results {
            match r {
                Err(e) => errors.push(e),
                Ok((p, key)) => {
                    if by_p.entry(p.clone()).or_insert_with(|| key.clone()) != &key {
                        errors.push(format!("P = {p:?} covers two crystal positions"));
                    }
                    if by_key.entry(key).or_insert_with(|| p.clone()) != &p {
                        errors.push(format!("one crystal position has two P-symbols, one is {p:?}"));
                    }
                }
            }
        }
        let total = all.len();
        out.push(tally_case(
            format!("{kind} l ≤ {max_len}: ∼ ⟺ ≡ ⟺ P equal"),
            total,
            (errors.len(), errors.into_iter().next()),
        ));
    }
    out
}

fn schensted(opts: &CheckOptions) -> Vec<Case> {
    let mut out = Vec::new();
    for (kind, max_len) in plactic_range() {
        for l in 1..=max_len {
            let all = words(kind, l);
            let results = opts.exec.map(&all, |w| {
                let (p, q) = psi(kind, w).map_err(|e| e.to_string())?;
                let back = psi_inverse(&p, &q).map_err(|e| e.to_string())?;
                if &back != w {
                    return Err(format!("psi_inverse(psi({})) = {}", format_letters(w), format_letters(&back)));
                }
                Ok((q, highest_weight_path(kind, w).0))
            });
            let mut errors = Vec::new();
            let mut by_q = HashMap::new();
            let mut by_hw = HashMap::new();
            for r in results {
                match r {
                    Err(e) => errors.push(e),
                    Ok((q, hw)) => {
                        if by_q.entry(q.clone()).or_insert_with(|| hw.clone()) != &hw {
                            errors.push(format!("Q {:?} spans two components", q.steps));
                        }
                        if by_hw.entry(hw).or_insert_with(|| q.clone()) != &q {
                            errors.push(format!("a component has two Q-symbols, one is {:?}", q.steps));
                        }
                    }
                }
            }
            let mut sum: u128 = 0;
            for (shape, nq) in count_oscillating_by_shape(kind, l) {
                let np = highest_weight_tableau(kind, &shape)
                    .and_then(|t| explore_component(kind, &t.reading()))
                    .map(|c| c.len() as u128)
                    .unwrap_or(0);
                sum += np * nq;
            }
            let total = (kind.alphabet().len() as u128).pow(l as u32);
            if sum != total {
                errors.push(format!("Σ #P·#Q = {sum}, |alphabet|^{l} = {total}"));
            }
            out.push(tally_case(
                format!("{kind} l = {l}: Q ⟺ component, Ψ⁻¹Ψ = id, Σ #P·#Q = {total}"),
                all.len(),
                (errors.len(), errors.into_iter().next()),
            ));
        }
    }
    out
}

/// `w(T)` lies in the component of the highest weight tableau of its shape.
fn in_crystal(t: &Tabloid) -> bool {
    let kind = t.kind;
    let (hw, _) = highest_weight_path(kind, &t.reading());
    let Ok(shape) = Shape::from_highest_weight(kind, &word_weight(kind, &hw)) else {
        return false;
    };
    shape.column_heights == t.heights() && highest_weight_tableau(kind, &shape).map(|h| h.reading() == hw).unwrap_or(false)
}

fn kn_criterion(opts: &CheckOptions) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 2..=3 {
        for kind in kinds(n) {
            let by_h: Vec<Vec<Column>> = (0..=n).map(|h| admissible_columns(kind, h)).collect();
            let mut all: Vec<Tabloid> = Vec::new();
            for h1 in 1..=n {
                for c1 in &by_h[h1] {
                    all.push(Tabloid { kind, columns: vec![c1.clone()] });
                    for c2 in (1..=h1).flat_map(|h2| by_h[h2].iter()) {
                        all.push(Tabloid { kind, columns: vec![c1.clone(), c2.clone()] });
                    }
                }
            }
            let res = tally(opts.exec, &all, |t| {
                let (a, b) = (t.is_orthogonal(), in_crystal(t));
                (a != b).then(|| format!("{t:?}: criterion {a}, crystal {b}"))
            });
            out.push(tally_case(format!("{kind} ≤ 2 columns"), all.len(), res));
        }
    }
    let b4 = LieKind::b(4);
    let pos = Tabloid::parse(b4, &["3 4 0 0", "3 0 -2", "4 -4"]).expect("fixed tableau");
    out.push(case(
        "B4 positive example",
        pos.is_orthogonal() && in_crystal(&pos),
        format!("orthogonal {}, in crystal {}", pos.is_orthogonal(), in_crystal(&pos)),
    ));
    let d4 = LieKind::d(4);
    let neg = Tabloid::parse(d4, &["3 -4", "-4 -3"]).expect("fixed tableau");
    let cf = find_a_configurations(d4, &neg.columns[0].cells, &neg.columns[1].cells);
    let conf_ok = cf.iter().any(|c| c.a == 3 && c.parity == Parity::Even && c.mu == 1);
    out.push(case(
        "D4 negative example (3-even, μ(3) = 1)",
        conf_ok && !neg.is_orthogonal() && !in_crystal(&neg),
        format!("configuration found {conf_ok}, orthogonal {}, in crystal {}", neg.is_orthogonal(), in_crystal(&neg)),
    ));
    out
}

/// The printed D7 endpoint transposes its 7 7̄ block; it is not congruent to the input.
const D7_PRINTED_ENDPOINT: &str = "-5 5 6 7 -7 7 -7";

fn insertion_examples() -> Vec<Case> {
    let chains = [
        (
            LieKind::b(7),
            "6 7 0 0 -7 -6",
            ["6 7 0 0 -7 -6 6", "6 7 0 0 -7 7 -7", "6 7 0 -7 7 0 -7", "6 7 -7 7 0 0 -7", "6 -6 6 7 0 0 -7", "-5 5 6 7 0 0 -7"],
            ["5 6 7 0 0 -7", "-5"],
        ),
        (
            LieKind::d(7),
            "6 7 -7 7 -7 -6",
            ["6 7 -7 7 -7 -6 6", "6 7 -7 7 -7 -7 7", "6 7 -7 -6 6 -7 7", "6 7 -7 -7 7 -7 7", "6 -6 6 -7 7 -7 7", "-5 5 6 -7 7 -7 7"],
            ["5 6 -7 7 -7 7", "-5"],
        ),
    ];
    let mut out = Vec::new();
    for (kind, col, chain, result) in chains {
        let w = word(kind, &format!("{col} 6"));
        let label = format!("{kind} 6 → {col}");
        let (p, d) = match p_symbol_with_derivation(kind, &w) {
            Ok(x) => x,
            Err(e) => {
                out.push(case(label, false, e.to_string()));
                continue;
            }
        };
        let mut seen = vec![d.start.clone()];
        let mut cur = d.start.clone();
        for r in &d.steps {
            cur = r.apply(&cur).expect("logged rewrite applies");
            seen.push(cur.clone());
        }
        let expected: Vec<Vec<Letter>> = chain.iter().map(|s| word(kind, s)).collect();
        let chain_ok = seen == expected;
        let p_ok = Tabloid::parse(kind, &result).map(|t| t == p).unwrap_or(false);
        out.push(case(
            label,
            chain_ok && p_ok,
            format!(
                "chain {} ({} words), endpoint {}, P = {}",
                if chain_ok { "identical" } else { "differs" },
                seen.len(),
                format_letters(seen.last().expect("non-empty")),
                crate::tableau::format_columns(&p.columns)
            ),
        ));
    }
    let d7 = LieKind::d(7);
    let input = word(d7, "6 7 -7 7 -7 -6 6");
    let printed = word(d7, D7_PRINTED_ENDPOINT);
    let apart = place_key(d7, &input) != place_key(d7, &printed);
    out.push(case(
        "D7 printed endpoint 5̄ 5 6 7 7̄ 7 7̄",
        apart,
        if apart { "lies in another crystal position, read as a transposition typo" } else { "congruent to the input" },
    ));
    out
}

fn jdt(opts: &CheckOptions) -> Vec<Case> {
    let mut out = Vec::new();
    let b3 = LieKind::b(3);
    let expected: [[&str; 3]; 9] = [
        ["* * 1 1 1 2", "1 1 2 -3 -3 -3", "3 3 -3 -2 -2 -1"],
        ["* 1 1 1 1 2", "1 2 * -3 -3 -3", "3 3 -3 -2 -2 -1"],
        ["* 1 1 1 1 2", "1 2 -3 -3 -3 -3", "3 3 -2 * -2 -1"],
        ["* 1 1 1 1 2", "1 2 -3 -3 -3 -3", "3 3 -2 -2 * -1"],
        ["* 1 1 1 2 2", "1 2 -3 -3 -3 -3", "3 3 -2 -2 -2 *"],
        ["1 1 1 1 2 2", "2 * -3 -3 -3 -3", "3 3 -2 -2 -2 *"],
        ["1 1 1 1 2 2", "2 3 -3 -3 -3 -3", "3 -2 * -2 -2 *"],
        ["1 1 1 1 2 2", "2 3 -3 -3 -3 -3", "3 -2 -2 * -2 *"],
        ["1 1 1 1 2 2", "2 3 -3 -3 -3 -3", "3 -2 -2 -2 * *"],
    ];
    let traced = SkewTableau::parse(b3, &[(1, "1 3"), (0, "1 0 -3"), (0, "2 -3 -2")]).and_then(|t| rectify_traced(&t));
    let trace_case = match traced {
        Err(e) => case("B3 worked trace", false, e.to_string()),
        Ok(r) => {
            let got: Vec<Vec<String>> = r
                .trace
                .iter()
                .map(|g| g.render().iter().map(|l| l.split_whitespace().collect::<Vec<_>>().join(" ")).collect())
                .collect();
            let want: Vec<Vec<String>> = expected.iter().map(|g| g.iter().map(|s| s.to_string()).collect()).collect();
            let final_ok = Tabloid::parse(b3, &["1 3 0", "1 -3 -2", "2 -3"]).map(|t| t == r.tableau).unwrap_or(false);
            let ok = got == want && final_ok && r.stats.non_classical() == 1;
            case(
                "B3 worked trace",
                ok,
                format!("{} grids, {} non-classical slide(s), result {}", got.len(), r.stats.non_classical(), crate::tableau::format_columns(&r.tableau.columns)),
            )
        }
    };
    out.push(trace_case);

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let samples: Vec<SkewTableau> =
        (0..opts.samples).map(|k| random_skew_tableau(LieKind::b(2 + k % 2), 6, 4, &mut rng)).collect();
    let res = tally(opts.exec, &samples, |t| match (rectify(t), p_symbol(t.kind, &t.reading())) {
        (Ok(a), Ok(b)) if a == b => None,
        (Ok(a), Ok(b)) => Some(format!("{}: rectify {a:?}, P {b:?}", t.kind)),
        (Err(e), _) | (_, Err(e)) => Some(format!("{}: {e}", t.kind)),
    });
    out.push(tally_case(format!("rectify = P(reading), seed {}", opts.seed), samples.len(), res));

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(1));
    let mut cornered = Vec::new();
    while cornered.len() < opts.samples / 2 {
        let t = random_skew_tableau(LieKind::b(2 + cornered.len() % 2), 6, 4, &mut rng);
        if (2..=3).contains(&t.inner_corners().len()) {
            cornered.push(t);
        }
    }
    let res = tally(opts.exec, &cornered, |t| match rectify_all_orders(t) {
        Ok(all) if all.windows(2).all(|p| p[0] == p[1]) => None,
        Ok(all) => Some(format!("{} corner orders give different results", all.len())),
        Err(e) => Some(e.to_string()),
    });
    out.push(tally_case("corner-order independence, 2–3 inner corners", cornered.len(), res));
    out
}

/// `S(w(C))` by transporting the highest weight path of `w(C)` to `top ⊗ 𝔠`.
pub fn spin_split_by_transport(c: &Column, map: SpinMap) -> Option<SpinPair> {
    let kind = c.kind;
    let n = kind.rank();
    let (hw, colors) = highest_weight_path(kind, &c.cells);
    let top = map.top(n);
    let mut wt = word_weight(kind, &hw);
    wt.sub_assign(&top.weight(kind));
    let second = SpinColumn::from_weight(n, &wt)?;
    let start = [GenLetter::Spin(top), GenLetter::Spin(second)];
    if !crate::crystal::is_highest_weight(kind, &start) {
        return None;
    }
    match follow_path(kind, &start, &colors)?.as_slice() {
        [GenLetter::Spin(right), GenLetter::Spin(left)] => Some(SpinPair { right: *right, left: *left }),
        _ => None,
    }
}

fn maps_for(kind: LieKind) -> Vec<SpinMap> {
    if kind.is_b() {
        vec![SpinMap::B]
    } else {
        vec![SpinMap::EvenD, SpinMap::OddD]
    }
}

/// The R6/R7 target of `𝔠x` by transporting its path to the isomorphic component.
fn r67_by_transport(kind: LieKind, c: SpinColumn, x: Letter) -> Option<Vec<GenLetter>> {
    let n = kind.rank();
    let v = [GenLetter::Spin(c), GenLetter::Letter(x)];
    let (hw, colors) = highest_weight_path(kind, &v);
    let [GenLetter::Spin(top), GenLetter::Letter(x0)] = hw[..] else {
        return None;
    };
    let target = if x0 == Letter::unbarred(1) {
        vec![GenLetter::Letter(x0), GenLetter::Spin(top)]
    } else {
        let mut wt = top.weight(kind);
        wt.add_assign(&x0.weight(kind));
        vec![GenLetter::Spin(SpinColumn::from_weight(n, &wt)?)]
    };
    follow_path(kind, &target, &colors)
}

fn spin(opts: &CheckOptions) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 2..=3 {
        for kind in kinds(n) {
            for map in maps_for(kind) {
                let all: Vec<Column> = (0..=n).flat_map(|h| admissible_columns(kind, h)).collect();
                let mut checked = 0;
                let mut bad = Vec::new();
                for c in &all {
                    let formula = spin_split(c, map).ok();
                    let transported = spin_split_by_transport(c, map);
                    if formula.is_none() && transported.is_none() {
                        continue;
                    }
                    checked += 1;
                    if formula != transported {
                        bad.push(format!("{map}({c}): formula {formula:?}, transport {transported:?}"));
                    }
                }
                out.push(tally_case(format!("{kind} {map} formula = transport"), checked, (bad.len(), bad.into_iter().next())));
            }
        }
    }
    let d7 = LieKind::d(7);
    let c = Column::parse(d7, "6 7 -7 7 -6").expect("fixed column");
    let sc = |s: &str| SpinColumn::parse(d7, s).expect("fixed spin column");
    let even = spin_split(&c, SpinMap::EvenD).ok();
    let odd = spin_split(&c, SpinMap::OddD).ok();
    let want_even = SpinPair { right: sc("[1 6 7 -5 -4 -3 -2]"), left: sc("[2 3 4 5 7 -6 -1]") };
    let want_odd = SpinPair { right: sc("[1 2 6 7 -5 -4 -3]"), left: sc("[3 4 5 7 -6 -2 -1]") };
    let ok = even == Some(want_even)
        && odd == Some(want_odd)
        && spin_split_by_transport(&c, SpinMap::EvenD) == even
        && spin_split_by_transport(&c, SpinMap::OddD) == odd;
    out.push(case(
        "D7 example 6 7 7̄ 7 6̄",
        ok,
        format!("S_n^D = {}, S_n-1^D = {}", fmt_pair(even), fmt_pair(odd)),
    ));

    for n in 2..=3 {
        for kind in kinds(n) {
            let mut bad = Vec::new();
            let mut total = 0;
            for c in SpinColumn::all(n) {
                for x in kind.alphabet() {
                    total += 1;
                    let expected = r67_by_transport(kind, c, x);
                    let got = if triangle(kind, x, c) {
                        apply_r6(kind, c, x).ok().map(|c2| vec![GenLetter::Spin(c2)])
                    } else {
                        apply_r7(kind, c, x).ok().map(|(y, c2)| vec![GenLetter::Letter(y), GenLetter::Spin(c2)])
                    };
                    if expected.is_none() || got != expected {
                        bad.push(format!("{c}{x}: relation {got:?}, isomorphism {expected:?}"));
                    }
                }
            }
            out.push(tally_case(format!("{kind} R6/R7 = Ψ/Ψ′"), total, (bad.len(), bad.into_iter().next())));
        }
    }

    for kind in kinds(2) {
        let all: Vec<Vec<GenLetter>> = (0..=3).flat_map(|l| gen_words(kind, l)).collect();
        let results = opts.exec.map(&all, |w| {
            let (p, d) = generalized_p_symbol_with_derivation(kind, w).map_err(|e| e.to_string())?;
            if d.replay(kind).map_err(|e| e.to_string())? != p.reading() {
                return Err("derivation does not reach the reading".to_string());
            }
            if let GenTableau::Spin(st) = &p {
                if !is_spin_tableau_by_crystal(st) {
                    return Err(format!("{st} is not in its crystal"));
                }
            }
            let q = generalized_q_symbol(kind, w).map_err(|e| e.to_string())?;
            Ok((p, place_key(kind, w), q, highest_weight_path(kind, w).0))
        });
        let mut errors = Vec::new();
        let mut p_key = HashMap::new();
        let mut key_p = HashMap::new();
        let mut q_hw = BTreeMap::new();
        let mut hw_q = HashMap::new();
        for (w, r) in all.iter().zip(results) {
            match r {
                Err(e) => errors.push(format!("{}: {e}", crate::generalized::format_gen_word(w))),
                Ok((p, key, q, hw)) => {
                    if p_key.entry(p.clone()).or_insert_with(|| key.clone()) != &key {
                        errors.push(format!("𝔓 = {p} covers two crystal positions"));
                    }
                    if key_p.entry(key).or_insert_with(|| p.clone()) != &p {
                        errors.push(format!("one crystal position has two 𝔓-symbols, one is {p}"));
                    }
                    if q_hw.entry(q.clone()).or_insert_with(|| hw.clone()) != &hw {
                        errors.push(format!("𝔔 {q:?} spans two components"));
                    }
                    if hw_q.entry(hw).or_insert_with(|| q.clone()) != &q {
                        errors.push(format!("a component has two 𝔔-symbols, one is {q:?}"));
                    }
                }
            }
        }
        errors.extend(relation_instances(kind));
        out.push(tally_case(
            format!("{kind} generalized l ≤ 3: ∼ ⟺ ≡ ⟺ 𝔓 equal, 𝔔 ⟺ component"),
            all.len(),
            (errors.len(), errors.into_iter().next()),
        ));
    }
    out
}

fn fmt_pair(p: Option<SpinPair>) -> String {
    p.map(|p| p.to_string()).unwrap_or_else(|| "undefined".into())
}

/// Every instance of R6, R7 and R8 at rank `n` relates words in the same crystal position.
fn relation_instances(kind: LieKind) -> Vec<String> {
    let n = kind.rank();
    let mut bad = Vec::new();
    for c in SpinColumn::all(n) {
        for x in kind.alphabet() {
            let lhs = [GenLetter::Spin(c), GenLetter::Letter(x)];
            let rhs = if triangle(kind, x, c) {
                apply_r6(kind, c, x).map(|c2| vec![GenLetter::Spin(c2)])
            } else {
                apply_r7(kind, c, x).map(|(y, c2)| vec![GenLetter::Letter(y), GenLetter::Spin(c2)])
            };
            match rhs {
                Ok(r) if place_key(kind, &lhs) == place_key(kind, &r) => {}
                _ => bad.push(format!("relation on {c}{x} changes the crystal position")),
            }
        }
    }
    for map in maps_for(kind) {
        for c in (0..=n).flat_map(|h| admissible_columns(kind, h)) {
            let Ok(pair) = spin_split(&c, map) else { continue };
            let lhs: Vec<GenLetter> = c.cells.iter().map(|&x| GenLetter::Letter(x)).collect();
            if place_key(kind, &lhs) != place_key(kind, &pair.word()) {
                bad.push(format!("R8 {map} on {c} changes the crystal position"));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for (k, name) in SUITES.iter().enumerate() {
            assert_eq!(suite_number(name), Some(k as u8 + 1));
        }
        assert_eq!(suite_number("7"), Some(7));
        assert_eq!(suite_number("11"), None);
    }

    #[test]
    fn quick_suites_pass() {
        let opts = CheckOptions { samples: 40, ..CheckOptions::default() };
        for k in [1, 2, 3, 8] {
            let r = run_suite(k, &opts).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
