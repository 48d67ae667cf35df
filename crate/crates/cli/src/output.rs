//! Serialization helpers: JSON (exact rationals as "p/q" strings), the
//! text rendering that mirrors the published variable naming, CSV for scans,
//! and the optional on-disk Horn set cache.

use std::collections::BTreeSet;
use std::path::Path;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use eigencones::eigencone::{Inequality, InequalitySystem};
use eigencones::rootsys::{self, CartanPoint, Label, RootSystem};
use eigencones::schubert::CupTable;
use eigencones::tensor::SaturationScan;
use eigencones::typea::{HornCtx, HornTriple};
use eigencones::{Error, Q, Result, Z};

#[derive(Serialize)]
struct SystemJson<'a> {
    #[serde(rename = "type")]
    label: String,
    s: usize,
    criterion: &'a str,
    inequalities: Vec<IneqJson<'a>>,
}

#[derive(Serialize)]
struct IneqJson<'a> {
    parabolic: usize,
    words: &'a [String],
    covectors: &'a [Vec<i64>],
}

pub fn system_json(system: &InequalitySystem) -> Result<String> {
    let doc = SystemJson {
        label: system.label.to_string(),
        s: system.s,
        criterion: system.criterion.name(),
        inequalities: system
            .ineqs
            .iter()
            .map(|i| IneqJson {
                parabolic: i.parabolic,
                words: &i.tuple_words,
                covectors: &i.covectors,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Error::Internal(format!("json: {e}")))
}

pub fn system_csv(system: &InequalitySystem) -> String {
    let mut out = String::from("parabolic,words,covectors\n");
    for i in &system.ineqs {
        out.push_str(&format!(
            "{},{},{}\n",
            i.parabolic,
            i.tuple_words.join(" "),
            i.covectors
                .iter()
                .map(|g| g.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join(" | ")
        ));
    }
    out
}

/// Chart variable names for the text rendering, one letter per epsilon
/// coordinate, matching the published lists for the B/C rank <= 3 types.
fn chart_names(label: Label) -> Option<Vec<char>> {
    let names = ['x', 'y', 'z', 'w', 'v'];
    match label.family {
        'B' | 'C' if label.rank <= 3 => Some(names[..label.rank].to_vec()),
        'A' if label.rank <= 4 => Some(names[..label.rank + 1].to_vec()),
        _ => None,
    }
}

pub fn system_text(system: &InequalitySystem) -> String {
    let mut out = format!(
        "{} inequalities for {} (s = {}, criterion {})\n",
        system.ineqs.len(),
        system.label,
        system.s,
        system.criterion.name()
    );
    let counts = system.counts_per_parabolic();
    out.push_str(&format!(
        "per parabolic: {}\n",
        counts
            .iter()
            .enumerate()
            .map(|(i, c)| format!("P{} {}", i + 1, c))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    for i in &system.ineqs {
        out.push_str(&inequality_text(system, i));
        out.push('\n');
    }
    out
}

/// One inequality as text: in the epsilon chart with named variables when
/// the type has one, otherwise as raw covectors on the simple-root values.
pub fn inequality_text(system: &InequalitySystem, ineq: &Inequality) -> String {
    let label = system.label;
    let prefix = format!("P{} ({}): ", ineq.parabolic, ineq.tuple_words.join(", "));
    if let Some(names) = chart_names(label) {
        if let Ok(rendered) = eps_render(label, &ineq.covectors, &names) {
            return format!("{prefix}{rendered}");
        }
    }
    let raw = ineq
        .covectors
        .iter()
        .enumerate()
        .map(|(j, g)| {
            g.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| format!("{c}*a{}[{}]", i + 1, j + 1))
                .collect::<Vec<_>>()
                .join(" + ")
        })
        .collect::<Vec<_>>()
        .join(" + ");
    format!("{prefix}{raw} <= 0")
}

/// Convert x-basis covectors to epsilon-chart coefficients and render
/// `lhs <= rhs` with positive terms on each side.
fn eps_render(label: Label, covectors: &[Vec<i64>], names: &[char]) -> Result<String> {
    let rank = label.rank;
    let m = rootsys::eps_dim(label)?;
    // p = M^T g where a = M t is the chart-to-x map.
    let mut slots: Vec<Vec<Q>> = Vec::with_capacity(covectors.len());
    for g in covectors {
        // Column k of M: x-coordinates of the k-th epsilon unit vector.
        let mut p = vec![Q::zero(); m];
        for (k, pk) in p.iter_mut().enumerate() {
            let mut t = vec![Q::zero(); m];
            t[k] = Q::one();
            let a = rootsys::eps_to_cartan(label, &t)?;
            for i in 0..rank {
                if g[i] != 0 {
                    *pk += Q::from_integer(Z::from(g[i])) * &a[i];
                }
            }
        }
        // Type A points are traceless, so each slot covector is only defined
        // up to a multiple of the trace; shift to the published normalization
        // with minimum coefficient zero.
        if label.family == 'A' {
            let min = p.iter().min().cloned().unwrap_or_else(Q::zero);
            for c in p.iter_mut() {
                *c -= &min;
            }
        }
        slots.push(p);
    }
    // Display scaling: clear denominators and divide by the common gcd.
    let mut denom = Z::from(1);
    for p in &slots {
        for c in p {
            denom = num::Integer::lcm(&denom, c.denom());
        }
    }
    let mut gcd = Z::from(0);
    let ints: Vec<Vec<Z>> = slots
        .iter()
        .map(|p| {
            p.iter()
                .map(|c| {
                    let v = c.numer() * &denom / c.denom();
                    gcd = num::Integer::gcd(&gcd, &v);
                    v
                })
                .collect()
        })
        .collect();
    if gcd.is_zero() {
        gcd = Z::from(1);
    }
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for (slot, p) in ints.iter().enumerate() {
        for (k, c) in p.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c / &gcd;
            let name = format!("{}{}", names[k], slot + 1);
            let abs = if c.is_negative() { -c.clone() } else { c.clone() };
            let term = if abs == Z::from(1) {
                name
            } else {
                format!("{abs}*{name}")
            };
            if c.is_positive() {
                lhs.push(term);
            } else {
                rhs.push(term);
            }
        }
    }
    let lhs = if lhs.is_empty() { "0".into() } else { lhs.join(" + ") };
    let rhs = if rhs.is_empty() { "0".into() } else { rhs.join(" + ") };
    Ok(format!("{lhs} <= {rhs}"))
}

// -------------------------------------------------------------------------
// Point files.
// -------------------------------------------------------------------------

#[derive(Deserialize)]
struct PointsFile {
    /// "x" (simple-root values), "eps" (Bourbaki chart) or "weight"
    /// (fundamental coordinates, converted through the invariant form).
    #[serde(default = "default_coords")]
    coords: String,
    points: Vec<Vec<serde_json::Value>>,
}

fn default_coords() -> String {
    "x".into()
}

fn parse_rational(v: &serde_json::Value) -> Result<Q> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Q::from_integer(Z::from(i)))
            } else {
                Err(Error::Precondition(format!(
                    "non-integer JSON number {n}; use a \"p/q\" string for exact rationals"
                )))
            }
        }
        serde_json::Value::String(s) => {
            let mut parts = s.splitn(2, '/');
            let p: i64 = parts
                .next()
                .unwrap()
                .trim()
                .parse()
                .map_err(|_| Error::Precondition(format!("bad rational '{s}'")))?;
            let q: i64 = match parts.next() {
                Some(d) => d
                    .trim()
                    .parse()
                    .map_err(|_| Error::Precondition(format!("bad rational '{s}'")))?,
                None => 1,
            };
            if q == 0 {
                return Err(Error::Precondition("zero denominator".into()));
            }
            Ok(Q::new(Z::from(p), Z::from(q)))
        }
        other => Err(Error::Precondition(format!("bad rational value {other}"))),
    }
}

pub fn read_points(rs: &RootSystem, path: &Path) -> Result<Vec<CartanPoint>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("read {}: {e}", path.display())))?;
    let file: PointsFile = serde_json::from_str(&text)
        .map_err(|e| Error::Precondition(format!("parse {}: {e}", path.display())))?;
    let label = rs
        .label
        .ok_or_else(|| Error::Precondition("points need a labeled root system".into()))?;
    file.points
        .iter()
        .map(|raw| {
            let vals: Vec<Q> = raw.iter().map(parse_rational).collect::<Result<_>>()?;
            match file.coords.as_str() {
                "x" => Ok(CartanPoint(vals)),
                "eps" => Ok(CartanPoint(rootsys::eps_to_cartan(label, &vals)?)),
                "weight" => {
                    let pts = eigencones::eigencone::weights_to_points(
                        rs,
                        &[rootsys::Weight(vals)],
                    )?;
                    Ok(pts.into_iter().next().unwrap())
                }
                other => Err(Error::Precondition(format!("unknown coords '{other}'"))),
            }
        })
        .collect()
}

#[derive(Deserialize)]
struct HermitianFile {
    a1: Vec<serde_json::Value>,
    a2: Vec<serde_json::Value>,
    a3: Vec<serde_json::Value>,
}

pub fn read_hermitian_triple(path: &Path) -> Result<(Vec<Q>, Vec<Q>, Vec<Q>)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("read {}: {e}", path.display())))?;
    let file: HermitianFile = serde_json::from_str(&text)
        .map_err(|e| Error::Precondition(format!("parse {}: {e}", path.display())))?;
    let conv = |v: &[serde_json::Value]| -> Result<Vec<Q>> {
        v.iter().map(parse_rational).collect()
    };
    Ok((conv(&file.a1)?, conv(&file.a2)?, conv(&file.a3)?))
}

// -------------------------------------------------------------------------
// Tables.
// -------------------------------------------------------------------------

#[derive(Serialize)]
struct TableJson {
    #[serde(rename = "type")]
    label: String,
    /// Nodes missing from the Levi, 1-based (one node for a maximal P).
    parabolic: Vec<usize>,
    basis: &'static str,
    classes: Vec<String>,
    products: Vec<ProductJson>,
}

#[derive(Serialize)]
struct ProductJson {
    left: String,
    right: String,
    terms: Vec<TermJson>,
}

#[derive(Serialize)]
struct TermJson {
    coeff: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    tau: Option<Vec<u16>>,
    class: String,
}

pub fn cup_table_json(table: &CupTable, x_basis: bool) -> Result<String> {
    let space = &table.space;
    let classes: Vec<String> = (0..space.len()).map(|p| space.word(p)).collect();
    let mut products = Vec::new();
    for a in 0..space.len() {
        for b in a..space.len() {
            let (la, lb) = if x_basis {
                (space.dual[a], space.dual[b])
            } else {
                (a, b)
            };
            let expansion = if x_basis {
                table
                    .product(la, lb)
                    .iter()
                    .map(|&(w, c)| (space.dual[w], c))
                    .collect::<Vec<_>>()
            } else {
                table.product(a, b).to_vec()
            };
            products.push(ProductJson {
                left: classes[a].clone(),
                right: classes[b].clone(),
                terms: expansion
                    .iter()
                    .map(|&(w, c)| TermJson { coeff: c, tau: None, class: classes[w].clone() })
                    .collect(),
            });
        }
    }
    let doc = TableJson {
        label: space
            .wg
            .rs
            .label
            .map(|l| l.to_string())
            .unwrap_or_else(|| "levi".into()),
        parabolic: space.complement().iter().map(|i| i + 1).collect(),
        basis: if x_basis { "x" } else { "epsilon" },
        classes,
        products,
    };
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Internal(format!("json: {e}")))
}

pub fn cup_table_text(table: &CupTable, x_basis: bool) -> String {
    let space = &table.space;
    let tag = if x_basis { "[X_w]" } else { "eps_w" };
    let mut out = format!(
        "cup products on {} / P{} in the {tag} basis ({} classes, dim {})\n",
        space
            .wg
            .rs
            .label
            .map(|l| l.to_string())
            .unwrap_or_else(|| "levi".into()),
        space.complement().iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(","),
        space.len(),
        space.dim
    );
    for a in 0..space.len() {
        for b in a..space.len() {
            let (la, lb) = if x_basis {
                (space.dual[a], space.dual[b])
            } else {
                (a, b)
            };
            let expansion: Vec<(usize, i64)> = if x_basis {
                table
                    .product(la, lb)
                    .iter()
                    .map(|&(w, c)| (space.dual[w], c))
                    .collect()
            } else {
                table.product(a, b).to_vec()
            };
            if expansion.is_empty() {
                continue;
            }
            let terms = expansion
                .iter()
                .map(|
                    &(w, c)| {
                    if c == 1 {
                        space.word(w)
                    } else {
                        format!("{c} {}", space.word(w))
                    }
                })
                .collect::<Vec<_>>()
                .join(" + ");
            out.push_str(&format!("{} . {} = {}\n", space.word(a), space.word(b), terms));
        }
    }
    out
}

pub fn bk_table_json(table: &CupTable) -> Result<String> {
    let space = &table.space;
    let classes: Vec<String> = (0..space.len()).map(|p| space.word(p)).collect();
    let mut products = Vec::new();
    for a in 0..space.len() {
        for b in a..space.len() {
            let d = eigencones::bkprod::deformed_product(table, a, b)?;
            let mut terms = Vec::new();
            for (&w, monos) in &d.terms {
                for (e, c) in monos {
                    terms.push(TermJson {
                        coeff: *c,
                        tau: Some(e.clone()),
                        class: classes[w].clone(),
                    });
                }
            }
            products.push(ProductJson {
                left: classes[a].clone(),
                right: classes[b].clone(),
                terms,
            });
        }
    }
    let doc = TableJson {
        label: space
            .wg
            .rs
            .label
            .map(|l| l.to_string())
            .unwrap_or_else(|| "levi".into()),
        parabolic: space.complement().iter().map(|i| i + 1).collect(),
        basis: "epsilon",
        classes,
        products,
    };
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Internal(format!("json: {e}")))
}

/// The published-table layout: one line per printed-style cell with tau
/// powers, for a maximal parabolic.
pub fn bk_table_text(table: &CupTable) -> Result<String> {
    let space = &table.space;
    let mut out = format!(
        "deformed product on {} / P{} (eps basis; tau tracks the missing node)\n",
        space
            .wg
            .rs
            .label
            .map(|l| l.to_string())
            .unwrap_or_else(|| "levi".into()),
        space.complement().iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
    );
    for a in 1..space.len() {
        for b in a..space.len() {
            if space.length(a) + space.length(b) > space.dim {
                continue;
            }
            let d = eigencones::bkprod::deformed_product(table, a, b)?;
            let mut terms = Vec::new();
            for (&w, monos) in &d.terms {
                for (e, c) in monos {
                    let tau = match e.first().copied().unwrap_or(0) {
                        0 => String::new(),
                        1 => "t ".into(),
                        k => format!("t^{k} "),
                    };
                    let coeff = if *c == 1 { String::new() } else { format!("{c} ") };
                    terms.push(format!("{coeff}{tau}eps_{}", space.word(w)));
                }
            }
            let rhs = if terms.is_empty() { "0".into() } else { terms.join(" + ") };
            out.push_str(&format!(
                "eps_{} o eps_{} = {rhs}\n",
                space.word(a),
                space.word(b)
            ));
        }
    }
    Ok(out)
}

// -------------------------------------------------------------------------
// Scans and Horn sets.
// -------------------------------------------------------------------------

pub fn satscan_csv(scan: &SaturationScan) -> String {
    let mut out = String::from("lambda,mu,nu,restoring_multipliers\n");
    for (t, restore) in &scan.failing {
        out.push_str(&format!(
            "{},{},{},{}\n",
            join_i64(&t[0]),
            join_i64(&t[1]),
            join_i64(&t[2]),
            restore
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    out
}

pub fn join_i64(v: &[i64]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn join_u32(v: &[u32]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

/// Horn sets, cached on disk under `EIGENCONES_CACHE_DIR` when set.
pub fn cached_horn_set(r: usize, n: usize, hat: bool) -> Result<BTreeSet<HornTriple>> {
    let cache_path = std::env::var_os("EIGENCONES_CACHE_DIR").map(|dir| {
        Path::new(&dir).join(format!(
            "horn_{}_{}_{}.json",
            r,
            n,
            if hat { "hat" } else { "strict" }
        ))
    });
    if let Some(path) = &cache_path {
        if let Ok(text) = std::fs::read_to_string(path) {
            if let Ok(list) = serde_json::from_str::<Vec<HornTriple>>(&text) {
                return Ok(list.into_iter().collect());
            }
        }
    }
    let ctx = HornCtx::new();
    let set = if hat { ctx.horn_set_hat(r, n)? } else { ctx.horn_set(r, n)? };
    if let Some(path) = &cache_path {
        if let Some(parent) = path.parent() {
            let _ = std::fs::create_dir_all(parent);
        }
        let list: Vec<&HornTriple> = set.iter().collect();
        if let Ok(text) = serde_json::to_string(&list) {
            let _ = std::fs::write(path, text);
        }
    }
    Ok(set)
}
