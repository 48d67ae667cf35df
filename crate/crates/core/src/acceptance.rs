//! Runnable acceptance checks. Both the CLI `suite` subcommand and the
//! integration test target drive these; each criterion returns a structured
//! verdict with a human-readable detail line.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::bkprod::{self, Factorization};
use crate::eigencone::{self, Criterion, FacetVerdict};
use crate::error::{Error, Result};
use crate::golden;
use crate::rootsys::{Label, RootSystem};
use crate::schubert::{BasisTag, CohomClass, CupTable, Space};
use crate::tensor::{self, TensorCtx};
use crate::typea::{self, HornCtx};
use crate::weyl::{Parabolic, WeylGroup};

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    /// Run the D4 stretch count in criterion 1.
    pub include_d4: bool,
    /// Sample count for the diagram-automorphism agreement check.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { include_d4: true, samples: 1000, seed: 20240617 }
    }
}

pub const CRITERIA: &[(usize, &str)] = &[
    (1, "facet counts"),
    (2, "deformed product golden tables"),
    (3, "golden inequality lists"),
    (4, "KLM vs BK counts"),
    (5, "irredundancy by exact LP"),
    (6, "Horn cross-oracle"),
    (7, "SL(n) saturation scan"),
    (8, "saturation failure and factors"),
    (9, "inversion-set product oracle"),
    (10, "cominuscule collapse"),
    (11, "diagram automorphism cones"),
    (12, "Levi factorization"),
    (13, "property suites"),
];

pub fn run_all(opts: &SuiteOptions) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .map(|&(id, _)| run_criterion(id, opts))
        .collect()
}

pub fn run_criterion(id: usize, opts: &SuiteOptions) -> CriterionResult {
    let name = CRITERIA
        .iter()
        .find(|&&(i, _)| i == id)
        .map(|&(_, n)| n)
        .unwrap_or("unknown");
    let start = Instant::now();
    let outcome = dispatch(id, opts);
    let seconds = start.elapsed().as_secs_f64();
    match outcome {
        Ok((passed, detail)) => CriterionResult { id, name, passed, detail, seconds },
        Err(e) => CriterionResult {
            id,
            name,
            passed: false,
            detail: format!("error: {e}"),
            seconds,
        },
    }
}

fn dispatch(id: usize, opts: &SuiteOptions) -> Result<(bool, String)> {
    match id {
        1 => criterion_facet_counts(opts),
        2 => criterion_golden_tables(),
        3 => criterion_golden_lists(),
        4 => criterion_klm_counts(),
        5 => criterion_irredundancy(),
        6 => criterion_horn_oracle(),
        7 => criterion_sln_saturation(),
        8 => criterion_saturation_failure(),
        9 => criterion_kostant_oracle(),
        10 => criterion_cominuscule(),
        11 => criterion_diagram_automorphism(opts),
        12 => criterion_levi_factorization(opts),
        13 => criterion_property_suites(opts),
        _ => Err(Error::Config(format!("no acceptance criterion {id}"))),
    }
}

fn rs(label: &str) -> Result<RootSystem> {
    RootSystem::new(Label::parse(label)?)
}

// Criterion 1: facet counts per maximal parabolic for the BK systems.
fn criterion_facet_counts(opts: &SuiteOptions) -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut ok = true;
    let small = Instant::now();
    for &(label, expect) in golden::FACET_COUNTS {
        if label == "D4" {
            continue;
        }
        let system = eigencone::generate(&rs(label)?, 3, Criterion::Bk)?;
        let got = system.counts_per_parabolic();
        let good = got == expect;
        ok &= good;
        parts.push(format!(
            "{label} {} ({})",
            system.ineqs.len(),
            got.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("+")
        ));
        if !good {
            parts.last_mut().unwrap().push_str(" MISMATCH");
        }
    }
    // Budgets: two minutes for the rank <= 3 types, thirty for the D4 stretch.
    ok &= small.elapsed().as_secs_f64() < 120.0;
    if opts.include_d4 {
        let stretch = Instant::now();
        let expect = golden::FACET_COUNTS.iter().find(|(l, _)| *l == "D4").unwrap().1;
        let system = eigencone::generate(&rs("D4")?, 3, Criterion::Bk)?;
        let got = system.counts_per_parabolic();
        let good = got == expect && stretch.elapsed().as_secs_f64() < 1800.0;
        ok &= good;
        parts.push(format!(
            "D4 {} ({}){}",
            system.ineqs.len(),
            got.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("+"),
            if good { "" } else { " MISMATCH" }
        ));
    }
    Ok((ok, parts.join("; ")))
}

/// One mismatching printed cell.
#[derive(Debug, Clone)]
pub struct CellMismatch {
    pub label: String,
    pub parabolic: usize,
    pub row: String,
    pub col: String,
    pub printed: String,
    pub computed: String,
    pub documented: bool,
}

#[derive(Debug, Clone, Default)]
pub struct TableDiff {
    pub cells_total: usize,
    pub cells_matched: usize,
    pub mismatches: Vec<CellMismatch>,
    /// Problems resolving the published basis labels (logged, never fatal,
    /// per the open question on the rank 3 P2 tables).
    pub label_issues: Vec<String>,
}

/// Printed cells known to disagree with the recomputation, with the reason.
/// Both G2/P1 cells print coefficient 5 where the product forces 2: G2/P1 is
/// the five-dimensional quadric (= B3/P1, printed with 2 in the same cells),
/// and 5 would force a degree-5 homogeneous space which G2 does not have.
/// The recomputed values satisfy the associativity and duality invariants.
pub const DOCUMENTED_TYPOS: &[(&str, usize, &str, &str)] = &[
    ("G2", 1, "r", "sr"),
    ("G2", 1, "sr", "sr"),
];

/// Compare one embedded table against the recomputed deformed products.
pub fn compare_table(gold: &golden::GoldenTable) -> Result<TableDiff> {
    let system = rs(gold.label)?;
    let wg = WeylGroup::enumerate(&system);
    let p = Parabolic::maximal(system.rank, gold.parabolic)?;
    let table = CupTable::build(Space::parabolic(&wg, &p)?)?;
    let mut diff = TableDiff::default();
    // Resolve the published labels to basis positions.
    let mut pos_of_word: BTreeMap<&str, usize> = BTreeMap::new();
    for &(name, word) in gold.basis {
        let letters = crate::weyl::word_from_string(word)?;
        let elem = wg.from_word(&letters)?;
        match table.space.pos_of_elem(elem) {
            Some(pos) => {
                if wg.elems[elem].length != letters.len() {
                    diff.label_issues.push(format!(
                        "{name} = '{word}' is not reduced (length {})",
                        wg.elems[elem].length
                    ));
                }
                pos_of_word.insert(word, pos);
            }
            None => diff.label_issues.push(format!(
                "{name} = '{word}' is not a minimal coset representative"
            )),
        }
    }
    for &(row, col, printed) in gold.cells {
        diff.cells_total += 1;
        let (a, b) = match (pos_of_word.get(row), pos_of_word.get(col)) {
            (Some(&a), Some(&b)) => (a, b),
            _ => {
                diff.mismatches.push(CellMismatch {
                    label: gold.label.into(),
                    parabolic: gold.parabolic,
                    row: row.into(),
                    col: col.into(),
                    printed: format_terms(printed),
                    computed: "unresolvable labels".into(),
                    documented: false,
                });
                continue;
            }
        };
        let computed = bkprod::deformed_product(&table, a, b)?;
        // Flatten: (target position -> (exp, coeff)); maximal parabolic, one tau.
        let mut got: BTreeMap<usize, (u16, i64)> = BTreeMap::new();
        for (&w, monos) in &computed.terms {
            for (e, c) in monos {
                got.insert(w, (e[0], *c));
            }
        }
        let mut want: BTreeMap<usize, (u16, i64)> = BTreeMap::new();
        let mut resolvable = true;
        for &(c, e, target) in printed {
            match pos_of_word.get(target) {
                Some(&t) => {
                    want.insert(t, (e, c));
                }
                None => resolvable = false,
            }
        }
        if resolvable && got == want {
            diff.cells_matched += 1;
        } else {
            let documented = DOCUMENTED_TYPOS
                .iter()
                .any(|&(l, p, r, c)| l == gold.label && p == gold.parabolic && r == row && c == col);
            diff.mismatches.push(CellMismatch {
                label: gold.label.into(),
                parabolic: gold.parabolic,
                row: row.into(),
                col: col.into(),
                printed: format_terms(printed),
                computed: format_computed(&table, &got),
                documented,
            });
        }
    }
    Ok(diff)
}

fn format_terms(terms: &[golden::GoldenTerm]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|&(c, e, t)| {
            let tau = match e {
                0 => String::new(),
                1 => "t*".into(),
                k => format!("t^{k}*"),
            };
            let coeff = if c == 1 { String::new() } else { format!("{c} ") };
            format!("{coeff}{tau}eps_{t}")
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn format_computed(table: &CupTable, got: &BTreeMap<usize, (u16, i64)>) -> String {
    if got.is_empty() {
        return "0".into();
    }
    got.iter()
        .map(|(&w, &(e, c))| {
            let tau = match e {
                0 => String::new(),
                1 => "t*".into(),
                k => format!("t^{k}*"),
            };
            let coeff = if c == 1 { String::new() } else { format!("{c} ") };
            format!("{coeff}{tau}eps_{}", table.space.word(w))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

// Criterion 2: the ten printed tables, bit-exact up to documented typos.
fn criterion_golden_tables() -> Result<(bool, String)> {
    let mut total = 0usize;
    let mut matched = 0usize;
    let mut mismatches = Vec::new();
    let mut label_issues = Vec::new();
    for gold in golden::TABLES {
        let diff = compare_table(gold)?;
        total += diff.cells_total;
        matched += diff.cells_matched;
        mismatches.extend(diff.mismatches);
        label_issues.extend(diff.label_issues);
    }
    let all_documented = mismatches.iter().all(|m| m.documented);
    let fraction_ok = (matched as f64) / (total as f64) >= 0.99;
    let passed = fraction_ok && all_documented && label_issues.is_empty();
    let mut detail = format!("{matched}/{total} printed cells match");
    for m in &mismatches {
        detail.push_str(&format!(
            "; {} P{} [{} x {}]: printed {} vs computed {}{}",
            m.label,
            m.parabolic,
            m.row,
            m.col,
            m.printed,
            m.computed,
            if m.documented { " (documented typo)" } else { "" }
        ));
    }
    for issue in &label_issues {
        detail.push_str(&format!("; label issue: {issue}"));
    }
    Ok((passed, detail))
}

// Criterion 3: set equality with the published inequality lists.
fn criterion_golden_lists() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for label in ["A2", "B2", "G2", "A3", "B3", "C3"] {
        let system = eigencone::generate(&rs(label)?, 3, Criterion::Bk)?;
        let diff = eigencone::compare_with_golden(&system)?;
        let good = diff.matches();
        ok &= good;
        parts.push(format!(
            "{label} {}{}",
            if good { "exact" } else { "MISMATCH" },
            if good {
                String::new()
            } else {
                format!(" (extra {}, missing {})", diff.extra.len(), diff.missing.len())
            }
        ));
    }
    Ok((ok, parts.join("; ")))
}

// Criterion 4: the cup-with-d=1 systems have 126 inequalities on B3/C3.
fn criterion_klm_counts() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for &(label, expect) in golden::KLM_COUNTS {
        let system = eigencone::generate(&rs(label)?, 3, Criterion::Klm)?;
        let bk = eigencone::generate(&rs(label)?, 3, Criterion::Bk)?;
        let good = system.ineqs.len() == expect && bk.ineqs.len() == 93;
        ok &= good;
        parts.push(format!(
            "{label}: klm {} vs bk {}{}",
            system.ineqs.len(),
            bk.ineqs.len(),
            if good { "" } else { " MISMATCH" }
        ));
    }
    Ok((ok, parts.join("; ")))
}

// Criterion 5: every BK inequality is a facet, all six types.
fn criterion_irredundancy() -> Result<(bool, String)> {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for label in ["A2", "B2", "G2", "A3", "B3", "C3"] {
        let system = eigencone::generate(&rs(label)?, 3, Criterion::Bk)?;
        let verdicts = eigencone::irredundancy_check(&system)?;
        let facets = verdicts.iter().filter(|v| **v == FacetVerdict::Facet).count();
        let good = facets == system.ineqs.len();
        ok &= good;
        parts.push(format!("{label} {facets}/{} facets", system.ineqs.len()));
    }
    let secs = start.elapsed().as_secs_f64();
    ok &= secs < 300.0;
    parts.push(format!("{secs:.1}s"));
    Ok((ok, parts.join("; ")))
}

// Criterion 6: Horn sets coincide with the product oracles for n <= 6.
fn criterion_horn_oracle() -> Result<(bool, String)> {
    let ctx = HornCtx::new();
    let mut checked = 0usize;
    let mut bad = 0usize;
    for n in 2..=6usize {
        for r in 1..n {
            let s = ctx.horn_set(r, n)?;
            let hat = ctx.horn_set_hat(r, n)?;
            if !s.is_subset(&hat) {
                bad += 1;
            }
            let idx = index_subsets(r, n);
            for i in &idx {
                for j in &idx {
                    for k in &idx {
                        checked += 1;
                        let t = (i.clone(), j.clone(), k.clone());
                        let top = typea::grassmannian_top_coefficient(i, j, k, r, n) > 0;
                        if s.contains(&t) != top {
                            bad += 1;
                        }
                        let nz = typea::grassmannian_product_nonzero(i, j, k, r, n);
                        if hat.contains(&t) != nz {
                            bad += 1;
                        }
                    }
                }
            }
        }
    }
    Ok((bad == 0, format!("{checked} triples checked, {bad} disagreements")))
}

fn index_subsets(r: usize, n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::with_capacity(r);
    fn rec(start: u32, r: usize, n: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, r, n, cur, out);
            cur.pop();
        }
    }
    rec(1, r, n as u32, &mut cur, &mut out);
    out
}

// Criterion 7: SL(n) saturation at desk scale, n <= 4, coordinates <= 3.
fn criterion_sln_saturation() -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in 2..=4usize {
        let (rows, discrepancies) = typea::saturation_scan_sln(n, 3)?;
        ok &= discrepancies == 0;
        parts.push(format!("n={n}: {} triples, {discrepancies} discrepancies", rows.len()));
    }
    Ok((ok, parts.join("; ")))
}

// Criterion 8: saturation fails for Sp(4) and G2 with the stated factors.
fn criterion_saturation_failure() -> Result<(bool, String)> {
    let c2 = rs("C2")?;
    let scan_c2 = tensor::saturation_scan(&c2, 2, 4)?;
    let c2_found = !scan_c2.failing.is_empty();
    let c2_two = scan_c2.failing.iter().all(|(_, r)| r.contains(&2));
    let c2_no_odd = scan_c2.failing.iter().all(|(_, r)| !r.contains(&3));
    let g2 = rs("G2")?;
    let scan_g2 = tensor::saturation_scan(&g2, 2, 6)?;
    let g2_found = !scan_g2.failing.is_empty();
    let g2_23 = scan_g2
        .failing
        .iter()
        .all(|(_, r)| r.contains(&2) && r.contains(&3));
    let ok = c2_found && c2_two && c2_no_odd && g2_found && g2_23;
    Ok((
        ok,
        format!(
            "Sp(4): {} failing, all restored by 2 (odd 3 never restores: {}); G2: {} failing, all restored by 2 and 3",
            scan_c2.failing.len(),
            c2_no_odd,
            scan_g2.failing.len()
        ),
    ))
}

// Criterion 9: Belkale-Kumar product on G/B equals the inversion-set formula
// with all nonzero constants 1 for the listed types.
fn criterion_kostant_oracle() -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut ok = true;
    for label in ["A2", "B2", "G2", "B3", "C3"] {
        let system = rs(label)?;
        let wg = WeylGroup::enumerate(&system);
        let table = CupTable::build(Space::parabolic(&wg, &Parabolic::borel(system.rank))?)?;
        let mut bad = 0usize;
        let mut nonunit = 0usize;
        for u in 0..table.space.len() {
            for v in u..table.space.len() {
                let a = CohomClass::single(BasisTag::Epsilon, u);
                let b = CohomClass::single(BasisTag::Epsilon, v);
                let via = bkprod::bk0_product(&table, &[a, b])?;
                let kos = bkprod::kostant_product_borel(&table, u, v)?;
                if via != kos {
                    bad += 1;
                }
                if kos.coeffs.values().any(|&c| c != 1) {
                    nonunit += 1;
                }
            }
        }
        ok &= bad == 0 && nonunit == 0;
        parts.push(format!("{label}: {bad} mismatches, {nonunit} non-unit constants"));
    }
    Ok((ok, parts.join("; ")))
}

// Criterion 10: on type A Grassmannians the deformed product is the cup
// product with all exponents zero.
fn criterion_cominuscule() -> Result<(bool, String)> {
    let mut pairs = 0usize;
    let mut bad = 0usize;
    for label in ["A2", "A3", "A4"] {
        let system = rs(label)?;
        let wg = WeylGroup::enumerate(&system);
        for ip in 1..=system.rank {
            let p = Parabolic::maximal(system.rank, ip)?;
            let table = CupTable::build(Space::parabolic(&wg, &p)?)?;
            for a in 0..table.space.len() {
                for b in a..table.space.len() {
                    pairs += 1;
                    let d = bkprod::deformed_product(&table, a, b)?;
                    let exps_zero = d
                        .terms
                        .values()
                        .all(|monos| monos.iter().all(|(e, _)| e.iter().all(|&x| x == 0)));
                    let cup: Vec<(usize, i64)> = d.at_tau_one().coeffs.into_iter().collect();
                    if !exps_zero || cup != table.product(a, b) {
                        bad += 1;
                    }
                }
            }
        }
    }
    Ok((bad == 0, format!("{pairs} pairs over all maximal parabolics, {bad} bad")))
}

// Criterion 11: eigencone comparison under the diagram automorphisms.
fn criterion_diagram_automorphism(opts: &SuiteOptions) -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut ok = true;
    for sub in ["C2", "B2"] {
        let report =
            eigencone::diagram_automorphism_test(Label::parse(sub)?, opts.samples, opts.seed)?;
        ok &= report.passed();
        parts.push(format!(
            "{} in {}: implications {}/{}, {}/{} samples agree",
            report.sub,
            report.amb,
            report.ambient_implied,
            report.sub_implied,
            report.samples - report.sample_mismatches,
            report.samples
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn proper_subsets(rank: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0..(1u32 << rank) - 1 {
        out.push((0..rank).filter(|&i| mask & (1 << i) != 0).collect());
    }
    out
}

// Criterion 12: d = d1 d2 for Levi-movable tuples and nested parabolics.
fn criterion_levi_factorization(opts: &SuiteOptions) -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut ok = true;
    for (label, exhaustive) in [("A2", true), ("B2", true), ("B3", false), ("C3", false)] {
        let system = rs(label)?;
        let wg = WeylGroup::enumerate(&system);
        let rank = system.rank;
        let all: Vec<usize> = (0..rank).collect();
        // Tables for every standard parabolic (by Levi subset).
        let mut tables: BTreeMap<Vec<usize>, CupTable> = BTreeMap::new();
        for levi in proper_subsets(rank) {
            tables.insert(levi.clone(), CupTable::build(Space::new(&wg, all.clone(), levi)?)?);
        }
        tables.insert(all.clone(), CupTable::build(Space::new(&wg, all.clone(), all.clone())?)?);
        // Levi-movable triples per proper parabolic, as W-element tuples.
        let mut combos: Vec<(Vec<usize>, Vec<usize>, Vec<usize>)> = Vec::new();
        for levi in proper_subsets(rank) {
            let gp = &tables[&levi];
            let tuples = levi_movable_triples(gp)?;
            for q in supersets(&levi, rank) {
                for t in &tuples {
                    combos.push((levi.clone(), q.clone(), t.clone()));
                }
            }
        }
        let chosen: Vec<&(Vec<usize>, Vec<usize>, Vec<usize>)> = if exhaustive {
            combos.iter().collect()
        } else {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(opts.seed);
            let mut index: Vec<usize> = (0..combos.len()).collect();
            index.shuffle(&mut rng);
            index.truncate(200);
            index.sort_unstable();
            index.iter().map(|&i| &combos[i]).collect()
        };
        let mut checked = 0usize;
        let mut failures = 0usize;
        for (plevi, qlevi, tuple) in chosen {
            let gp = &tables[plevi];
            let gq = &tables[qlevi];
            let qp = CupTable::build(Space::new(&wg, qlevi.clone(), plevi.clone())?)?;
            checked += 1;
            match bkprod::levi_factorization_check(gp, gq, &qp, tuple)? {
                Factorization::Checked { ok: good, .. } => {
                    if !good {
                        failures += 1;
                    }
                }
                // Levi-movability makes the codimension hypothesis automatic.
                Factorization::HypothesisNotMet => failures += 1,
            }
        }
        ok &= failures == 0;
        parts.push(format!("{label}: {checked} checks, {failures} failures"));
    }
    Ok((ok, parts.join("; ")))
}

fn supersets(levi: &[usize], rank: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0..(1u32 << rank) {
        let cand: Vec<usize> = (0..rank).filter(|&i| mask & (1 << i) != 0).collect();
        if cand.len() > levi.len() && levi.iter().all(|i| cand.contains(i)) {
            out.push(cand);
        }
    }
    out
}

/// All Levi-movable triples of a table, as X-label W-element tuples.
fn levi_movable_triples(table: &CupTable) -> Result<Vec<Vec<usize>>> {
    let space = &table.space;
    let n = space.len();
    let dim = space.dim;
    let mut out = Vec::new();
    for a in 0..n {
        let ca = dim - space.length(a);
        if ca > dim {
            continue;
        }
        for b in 0..n {
            let cb = dim - space.length(b);
            if ca + cb > dim {
                continue;
            }
            for c in 0..n {
                let cc = dim - space.length(c);
                if ca + cb + cc != dim {
                    continue;
                }
                let tup = [a, b, c];
                if bkprod::is_levi_movable(table, &tup)? {
                    out.push(vec![
                        space.elems[a],
                        space.elems[b],
                        space.elems[c],
                    ]);
                }
            }
        }
    }
    Ok(out)
}

// Criterion 13: the cross-cutting property suites.
fn criterion_property_suites(opts: &SuiteOptions) -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut ok = true;

    // Associativity and commutativity of the deformed product, exhaustive on
    // every maximal parabolic and the full flag variety for rank <= 3.
    let mut assoc_checked = 0usize;
    let mut assoc_bad = 0usize;
    for label in ["A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3"] {
        let system = rs(label)?;
        let wg = WeylGroup::enumerate(&system);
        let mut spaces: Vec<Vec<usize>> =
            (1..=system.rank).map(|ip| Parabolic::maximal(system.rank, ip).unwrap().levi).collect();
        spaces.push(vec![]);
        for levi in spaces {
            let table = CupTable::build(Space::new(&wg, (0..system.rank).collect(), levi)?)?;
            let n = table.space.len();
            // Pair products as deformed classes, reused in the triple loop.
            let mut pairwise = vec![Vec::new(); n];
            for a in 0..n {
                for b in 0..n {
                    pairwise[a].push(bkprod::deformed_product(&table, a, b)?);
                }
            }
            let nvars = table.space.complement().len();
            for a in 0..n {
                for b in a..n {
                    if pairwise[a][b] != pairwise[b][a] {
                        assoc_bad += 1;
                    }
                    for c in b..n {
                        assoc_checked += 1;
                        let ab_c = bkprod::deformed_mul(
                            &table,
                            &pairwise[a][b],
                            &bkprod::DeformedClass::unit(c, nvars),
                        )?;
                        let a_bc = bkprod::deformed_mul(
                            &table,
                            &pairwise[b][c],
                            &bkprod::DeformedClass::unit(a, nvars),
                        )?;
                        if ab_c != a_bc {
                            assoc_bad += 1;
                        }
                    }
                }
            }
        }
    }
    ok &= assoc_bad == 0;
    parts.push(format!("assoc/comm: {assoc_checked} triples, {assoc_bad} bad"));

    // Poincare duality of the tau = 0 product on the same spaces.
    let mut pd_bad = 0usize;
    for label in ["A2", "B2", "G2", "A3", "B3", "C3"] {
        let system = rs(label)?;
        let wg = WeylGroup::enumerate(&system);
        let mut spaces: Vec<Vec<usize>> =
            (1..=system.rank).map(|ip| Parabolic::maximal(system.rank, ip).unwrap().levi).collect();
        spaces.push(vec![]);
        for levi in spaces {
            let table = CupTable::build(Space::new(&wg, (0..system.rank).collect(), levi)?)?;
            let n = table.space.len();
            for a in 0..n {
                let mut partners = 0usize;
                for b in 0..n {
                    if table.space.length(a) + table.space.length(b) != table.space.dim {
                        continue;
                    }
                    let top = bkprod::bk0_top_coefficient(&table, &[a, b])?;
                    if top != 0 {
                        if top != 1 {
                            pd_bad += 1;
                        }
                        partners += 1;
                    }
                }
                if partners != 1 {
                    pd_bad += 1;
                }
            }
        }
    }
    ok &= pd_bad == 0;
    parts.push(format!("bk0 duality: {pd_bad} bad"));

    // Nonnegative exponents and tau = 1 recovering cup: deformed_product
    // errors on a negative exponent, so building all pairs is the check.
    let mut exp_pairs = 0usize;
    for label in ["B2", "B3", "C3", "G2", "D4", "B4", "C4"] {
        let system = rs(label)?;
        let wg = WeylGroup::enumerate(&system);
        for ip in 1..=system.rank {
            let p = Parabolic::maximal(system.rank, ip)?;
            let table = CupTable::build(Space::parabolic(&wg, &p)?)?;
            for a in 0..table.space.len() {
                for b in a..table.space.len() {
                    let d = bkprod::deformed_product(&table, a, b)?;
                    let cup: Vec<(usize, i64)> = d.at_tau_one().coeffs.into_iter().collect();
                    if cup != table.product(a, b) {
                        ok = false;
                    }
                    exp_pairs += 1;
                }
            }
        }
    }
    parts.push(format!("exponents nonnegative on {exp_pairs} pairs"));

    // chi dual-formula equality across all types and maximal parabolics
    // (the chi operation itself cross-checks the two formulas).
    let mut chi_checked = 0usize;
    for label in ["A2", "B2", "C2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4"] {
        let system = rs(label)?;
        let wg = WeylGroup::enumerate(&system);
        let all: Vec<usize> = (0..system.rank).collect();
        for ip in 1..=system.rank {
            let p = Parabolic::maximal(system.rank, ip)?;
            for &u in &wg.coset_reps(&all, &p.levi) {
                wg.chi(u, &p)?;
                chi_checked += 1;
            }
        }
    }
    parts.push(format!("chi dual formula on {chi_checked} classes"));

    // Poincare polynomial palindromicity for every supported type and
    // maximal parabolic.
    let mut palin_bad = 0usize;
    for label in [
        "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4",
    ] {
        let system = rs(label)?;
        let wg = WeylGroup::enumerate(&system);
        for ip in 1..=system.rank {
            let p = Parabolic::maximal(system.rank, ip)?;
            let space = Space::parabolic(&wg, &p)?;
            let poly = space.poincare_polynomial();
            let rev: Vec<i64> = poly.iter().rev().copied().collect();
            if poly != rev {
                palin_bad += 1;
            }
        }
    }
    ok &= palin_bad == 0;
    parts.push(format!("palindromic Poincare polynomials ({palin_bad} bad)"));

    // Tensor dimension balance on seeded random pairs per type.
    use rand::Rng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(opts.seed);
    let mut balance_bad = 0usize;
    for label in ["A2", "B2", "C2", "G2", "A3", "B3", "C3", "D4"] {
        let system = rs(label)?;
        let ctx = TensorCtx::new(&system);
        for _ in 0..5 {
            let la: Vec<i64> = (0..system.rank).map(|_| rng.gen_range(0..=2)).collect();
            let mu: Vec<i64> = (0..system.rank).map(|_| rng.gen_range(0..=2)).collect();
            let dec = ctx.tensor_decompose(&la, &mu)?;
            let lhs = ctx.weyl_dim(&la)? * ctx.weyl_dim(&mu)?;
            let rhs: u128 = dec
                .iter()
                .map(|(nu, &m)| Ok(u128::from(m) * ctx.weyl_dim(nu)?))
                .sum::<Result<u128>>()?;
            if lhs != rhs {
                balance_bad += 1;
            }
        }
    }
    ok &= balance_bad == 0;
    parts.push(format!("tensor dimension balance ({balance_bad} bad)"));

    Ok((ok, parts.join("; ")))
}

/// All BK tuples are Levi-movable (cross-module assertion used in tests).
pub fn bk_tuples_levi_movable(label: &str) -> Result<bool> {
    let system = rs(label)?;
    let wg = WeylGroup::enumerate(&system);
    let sys = eigencone::generate(&system, 3, Criterion::Bk)?;
    let mut tables: BTreeMap<usize, CupTable> = BTreeMap::new();
    for ip in 1..=system.rank {
        let p = Parabolic::maximal(system.rank, ip)?;
        tables.insert(ip, CupTable::build(Space::parabolic(&wg, &p)?)?);
    }
    for ineq in &sys.ineqs {
        let table = &tables[&ineq.parabolic];
        let tuple: Vec<usize> = ineq
            .tuple_words
            .iter()
            .map(|word| {
                let letters = crate::weyl::word_from_string(word)?;
                let elem = wg.from_word(&letters)?;
                table
                    .space
                    .pos_of_elem(elem)
                    .ok_or_else(|| Error::Internal("tuple label outside space".into()))
            })
            .collect::<Result<_>>()?;
        if !bkprod::is_levi_movable(table, &tuple)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Detailed golden-table diffs for the CLI `bk table --diff-golden` path.
pub fn all_table_diffs() -> Result<Vec<(String, usize, TableDiff)>> {
    golden::TABLES
        .iter()
        .map(|g| compare_table(g).map(|d| (g.label.to_string(), g.parabolic, d)))
        .collect()
}

#[derive(Debug, Clone, Default)]
pub struct SetCompare {
    pub extra: usize,
    pub missing: usize,
}

/// Compare two inequality systems as covector sets (used by tests).
pub fn compare_systems(
    a: &eigencone::InequalitySystem,
    b: &eigencone::InequalitySystem,
) -> SetCompare {
    let sa: BTreeSet<_> = a.covector_set();
    let sb: BTreeSet<_> = b.covector_set();
    SetCompare {
        extra: sa.difference(&sb).count(),
        missing: sb.difference(&sa).count(),
    }
}
