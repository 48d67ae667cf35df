//! Eigencone inequality systems: generation under the three tuple criteria,
//! exact membership, irredundancy by exact LP, comparison against the
//! published facet lists, and the diagram-automorphism cone tests.
//!
//! Coordinates: a Cartan element is stored by its values on the simple roots
//! (`a_i = alpha_i(h)`), so dominance is `a >= 0` componentwise. Covectors
//! are integer vectors of values on the dual basis `x_1..x_l`; an inequality
//! with covectors `(g_1..g_s)` reads `sum_j g_j . a_j <= 0`.

use std::collections::BTreeSet;

use num::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::golden::{self, Chart};
use crate::lp::{self, LpOutcome};
use crate::rootsys::{self, CartanPoint, Label, RootSystem, Weight};
use crate::schubert::{CupTable, Space};
use crate::weyl::{Parabolic, WeylGroup};
use crate::{q_from, Q, Z};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    /// Cup product a nonzero multiple of the point class.
    Bs,
    /// Cup product exactly the point class.
    Klm,
    /// Belkale-Kumar product exactly the point class.
    Bk,
}

impl Criterion {
    pub fn parse(s: &str) -> Result<Criterion> {
        match s.to_ascii_lowercase().as_str() {
            "bs" => Ok(Criterion::Bs),
            "klm" => Ok(Criterion::Klm),
            "bk" => Ok(Criterion::Bk),
            other => Err(Error::Config(format!("unknown criterion '{other}'"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Criterion::Bs => "bs",
            Criterion::Klm => "klm",
            Criterion::Bk => "bk",
        }
    }
}

/// One membership inequality `sum_j g_j . a_j <= 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Inequality {
    /// 1-based index of the missing simple root.
    pub parabolic: usize,
    /// Reduced words of the defining tuple in the `[X_w]` labels.
    pub tuple_words: Vec<String>,
    /// Primitive integer covectors, one per argument slot.
    pub covectors: Vec<Vec<i64>>,
}

impl Inequality {
    pub fn eval(&self, points: &[CartanPoint]) -> Q {
        let mut s = Q::zero();
        for (g, p) in self.covectors.iter().zip(points) {
            for (c, a) in g.iter().zip(&p.0) {
                if *c != 0 {
                    s += q_from(*c) * a;
                }
            }
        }
        s
    }
}

#[derive(Debug, Clone)]
pub struct InequalitySystem {
    pub label: Label,
    pub s: usize,
    pub criterion: Criterion,
    pub ineqs: Vec<Inequality>,
}

impl InequalitySystem {
    pub fn counts_per_parabolic(&self) -> Vec<usize> {
        let rank = self.label.rank;
        let mut counts = vec![0usize; rank];
        for i in &self.ineqs {
            counts[i.parabolic - 1] += 1;
        }
        counts
    }

    pub fn covector_set(&self) -> BTreeSet<Vec<Vec<i64>>> {
        self.ineqs.iter().map(|i| i.covectors.clone()).collect()
    }
}

/// Generate the inequality system of `Gamma_s` for one root system under the
/// chosen tuple criterion.
pub fn generate(rs: &RootSystem, s: usize, criterion: Criterion) -> Result<InequalitySystem> {
    let label = rs
        .label
        .ok_or_else(|| Error::Precondition("generation needs a labeled root system".into()))?;
    if s < 2 {
        return Err(Error::Precondition("s must be at least 2".into()));
    }
    let wg = WeylGroup::enumerate(rs);
    let mut ineqs = Vec::new();
    for ip in 1..=rs.rank {
        let p = Parabolic::maximal(rs.rank, ip)?;
        let table = CupTable::build(Space::parabolic(&wg, &p)?)?;
        let tuples = passing_tuples(&table, s, criterion)?;
        // omega_P in root coordinates (rational), the slot functional source.
        let omega = Weight::fundamental(rs.rank, ip - 1);
        let mut seen = BTreeSet::new();
        for tuple in tuples {
            let mut covs_q: Vec<Vec<Q>> = Vec::with_capacity(s);
            let mut words = Vec::with_capacity(s);
            for &u in &tuple {
                // X label w = dual(u); covector = root coords of w(omega_P).
                let wpos = table.space.dual[u];
                let welem = table.space.elems[wpos];
                words.push(wg.elems[welem].word_string());
                let img = Weight(wg.elems[welem].apply_weight(&omega.0));
                covs_q.push(rs.weight_in_root_coords(&img));
            }
            let covectors = canonicalize(&covs_q)?;
            if seen.insert(covectors.clone()) {
                ineqs.push(Inequality { parabolic: ip, tuple_words: words, covectors });
            }
        }
    }
    ineqs.sort();
    Ok(InequalitySystem { label, s, criterion, ineqs })
}

/// Ordered tuples of epsilon labels passing the criterion. Filters are
/// evaluated once per multiset; орderings are emitted afterwards.
fn passing_tuples(table: &CupTable, s: usize, criterion: Criterion) -> Result<Vec<Vec<usize>>> {
    let space = &table.space;
    let n = space.len();
    let dim = space.dim;
    let mut multisets = Vec::new();
    let mut cur = Vec::with_capacity(s);
    collect_multisets(n, s, dim, space, 0, &mut cur, &mut multisets);
    let passing: Vec<Vec<usize>> = multisets
        .into_par_iter()
        .map(|tuple| -> Result<Option<Vec<usize>>> {
            let d = table.top_coefficient(&tuple);
            let ok = match criterion {
                Criterion::Bs => d != 0,
                Criterion::Klm => d == 1,
                Criterion::Bk => {
                    d == 1 && {
                        // Total tau exponent of the top term vanishes.
                        let wg = space.wg;
                        space.complement().iter().all(|&node| {
                            let mut twice = 0i64;
                            for &u in &tuple {
                                twice += wg.two_rho_inv[space.elems[u]][node];
                            }
                            twice -= wg.two_rho_inv[space.elems[space.top]][node];
                            twice -= (s as i64 - 1) * wg.two_rho_inv[0][node];
                            twice == 0
                        })
                    }
                }
            };
            Ok(ok.then_some(tuple))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    // Expand each multiset into its distinct orderings.
    let mut out = Vec::new();
    for tuple in passing {
        let mut perms = BTreeSet::new();
        permutations(&tuple, &mut vec![], &mut vec![false; tuple.len()], &mut perms);
        out.extend(perms);
    }
    Ok(out)
}

fn collect_multisets(
    n: usize,
    s: usize,
    dim: usize,
    space: &Space,
    start: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let used: usize = cur.iter().map(|&p| space.length(p)).sum();
    if cur.len() == s {
        if used == dim {
            out.push(cur.clone());
        }
        return;
    }
    for p in start..n {
        if used + space.length(p) > dim {
            continue;
        }
        cur.push(p);
        collect_multisets(n, s, dim, space, p, cur, out);
        cur.pop();
    }
}

fn permutations(
    items: &[usize],
    cur: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut BTreeSet<Vec<usize>>,
) {
    if cur.len() == items.len() {
        out.insert(cur.clone());
        return;
    }
    for i in 0..items.len() {
        if !used[i] {
            used[i] = true;
            cur.push(items[i]);
            permutations(items, cur, used, out);
            cur.pop();
            used[i] = false;
        }
    }
}

/// Clear denominators jointly and divide by the common gcd, preserving sign.
pub fn canonicalize(covs: &[Vec<Q>]) -> Result<Vec<Vec<i64>>> {
    let mut lcm = Z::one();
    for g in covs {
        for c in g {
            lcm = lcm.lcm(c.denom());
        }
    }
    let mut ints: Vec<Vec<Z>> = covs
        .iter()
        .map(|g| g.iter().map(|c| c.numer() * &lcm / c.denom()).collect())
        .collect();
    let mut gcd = Z::zero();
    for g in &ints {
        for c in g {
            gcd = gcd.gcd(c);
        }
    }
    if gcd.is_zero() {
        return Err(Error::Internal("zero covector tuple".into()));
    }
    for g in ints.iter_mut() {
        for c in g.iter_mut() {
            *c = &*c / &gcd;
        }
    }
    ints.into_iter()
        .map(|g| {
            g.into_iter()
                .map(|c| {
                    i64::try_from(&c).map_err(|_| Error::Internal("covector overflow".into()))
                })
                .collect()
        })
        .collect()
}

/// Exact membership of dominant Cartan points; returns all violations.
pub fn membership(
    points: &[CartanPoint],
    system: &InequalitySystem,
) -> Result<(bool, Vec<usize>)> {
    if points.len() != system.s {
        return Err(Error::Precondition(format!(
            "expected {} points, got {}",
            system.s,
            points.len()
        )));
    }
    for p in points {
        if p.0.len() != system.label.rank {
            return Err(Error::Precondition("point rank mismatch".into()));
        }
        if !p.is_dominant() {
            return Err(Error::Precondition("point is not dominant".into()));
        }
    }
    let mut violated = Vec::new();
    for (k, ineq) in system.ineqs.iter().enumerate() {
        if ineq.eval(points).is_positive() {
            violated.push(k);
        }
    }
    Ok((violated.is_empty(), violated))
}

/// Convert dominant weights (fundamental coordinates) to Cartan points via
/// the invariant form, `a_i = d_i lambda_i`. Membership verdicts agree with
/// the saturated weight semigroup by the cone identification.
pub fn weights_to_points(rs: &RootSystem, weights: &[Weight]) -> Result<Vec<CartanPoint>> {
    weights
        .iter()
        .map(|w| {
            if w.0.len() != rs.rank {
                return Err(Error::Precondition("weight rank mismatch".into()));
            }
            Ok(CartanPoint(
                w.0.iter().zip(&rs.d).map(|(c, d)| c * d).collect(),
            ))
        })
        .collect()
}

/// Verdict of the facet check for one inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FacetVerdict {
    Facet,
    Redundant,
}

/// For each inequality, decide by exact LP whether some point satisfies all
/// the others strictly (and strict dominance) while violating it.
pub fn irredundancy_check(system: &InequalitySystem) -> Result<Vec<FacetVerdict>> {
    let rank = system.label.rank;
    let nvars = system.s * rank;
    let flat: Vec<Vec<Q>> = system
        .ineqs
        .iter()
        .map(|i| {
            i.covectors
                .iter()
                .flat_map(|g| g.iter().map(|&c| q_from(c)))
                .collect()
        })
        .collect();
    let verdicts: Vec<Result<FacetVerdict>> = (0..system.ineqs.len())
        .into_par_iter()
        .map(|k| facet_lp(&flat, nvars, k))
        .collect();
    verdicts.into_iter().collect()
}

fn facet_lp(flat: &[Vec<Q>], nvars: usize, k: usize) -> Result<FacetVerdict> {
    // Variables: a_1..a_nvars, t. Maximize t subject to
    //   g'.a + t <= 0 for every other inequality
    //   -g_k.a + t <= 0 (violation by at least t)
    //   -a_i + t <= 0 (strict dominance)
    //   g_k.a <= 1, t <= 1 (caps).
    let n = nvars + 1;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (j, g) in flat.iter().enumerate() {
        if j == k {
            continue;
        }
        let mut row = g.clone();
        row.push(Q::one());
        rows.push(row);
        rhs.push(Q::zero());
    }
    let mut row: Vec<Q> = flat[k].iter().map(|c| -c).collect();
    row.push(Q::one());
    rows.push(row);
    rhs.push(Q::zero());
    for i in 0..nvars {
        let mut row = vec![Q::zero(); n];
        row[i] = -Q::one();
        row[nvars] = Q::one();
        rows.push(row);
        rhs.push(Q::zero());
    }
    let mut row = flat[k].clone();
    row.push(Q::zero());
    rows.push(row);
    rhs.push(Q::one());
    let mut row = vec![Q::zero(); n];
    row[nvars] = Q::one();
    rows.push(row);
    rhs.push(Q::one());

    let mut obj = vec![Q::zero(); n];
    obj[nvars] = Q::one();
    match lp::maximize(&obj, &rows, &rhs)? {
        LpOutcome::Optimal { value, .. } => Ok(if value.is_positive() {
            FacetVerdict::Facet
        } else {
            FacetVerdict::Redundant
        }),
        LpOutcome::Unbounded => Err(Error::Internal("facet LP unbounded".into())),
    }
}

/// Diff report of a golden comparison.
#[derive(Debug, Clone, Default)]
pub struct GoldenDiff {
    pub per_parabolic: Vec<(usize, usize, usize)>,
    /// Inequalities generated but absent from the golden list.
    pub extra: Vec<Vec<Vec<i64>>>,
    /// Golden inequalities the generator did not produce.
    pub missing: Vec<Vec<Vec<i64>>>,
}

impl GoldenDiff {
    pub fn matches(&self) -> bool {
        self.extra.is_empty() && self.missing.is_empty()
    }
}

/// Linear map from epsilon-chart covectors to x-basis covectors for a type:
/// `g_j = f(x_j)` computed by pushing the unit x-vectors through the chart.
fn eps_covector_to_x(label: Label, p: &[i64]) -> Result<Vec<Q>> {
    let rank = label.rank;
    let mut out = Vec::with_capacity(rank);
    for j in 0..rank {
        let mut unit = vec![Q::zero(); rank];
        unit[j] = Q::one();
        let t = rootsys::cartan_to_eps(label, &unit)?;
        let mut v = Q::zero();
        for (c, tc) in p.iter().zip(&t) {
            if *c != 0 {
                v += q_from(*c) * tc;
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// Import the published seed list for a type: symmetrize over the diagonal
/// S3 action and canonicalize into x-basis covectors, grouped by parabolic.
pub fn import_golden(label: Label) -> Result<Vec<(usize, BTreeSet<Vec<Vec<i64>>>)>> {
    let seeds = golden::seeds(&label.to_string())
        .ok_or_else(|| Error::Config(format!("no golden list for {label}")))?;
    let mut out = Vec::new();
    for &(ip, list, expected) in seeds.subsystems {
        let mut set = BTreeSet::new();
        for seed in list {
            for perm in S3_PERMS {
                let covs_q: Vec<Vec<Q>> = perm
                    .iter()
                    .map(|&slot| match seeds.chart {
                        Chart::Eps => eps_covector_to_x(label, seed[slot]),
                        Chart::XBasis => {
                            Ok(seed[slot].iter().map(|&c| q_from(c)).collect())
                        }
                    })
                    .collect::<Result<_>>()?;
                set.insert(canonicalize(&covs_q)?);
            }
        }
        if set.len() != expected {
            return Err(Error::Invariant(format!(
                "{label} P{ip}: symmetrization gives {} inequalities, publication says {expected}",
                set.len()
            )));
        }
        out.push((ip, set));
    }
    Ok(out)
}

const S3_PERMS: &[[usize; 3]] = &[
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Compare a generated BK system against the published list for its type.
pub fn compare_with_golden(system: &InequalitySystem) -> Result<GoldenDiff> {
    if system.s != 3 {
        return Err(Error::Precondition("golden lists are for s = 3".into()));
    }
    let golden_sets = import_golden(system.label)?;
    let mut diff = GoldenDiff::default();
    for (ip, gold) in &golden_sets {
        let mine: BTreeSet<Vec<Vec<i64>>> = system
            .ineqs
            .iter()
            .filter(|i| i.parabolic == *ip)
            .map(|i| i.covectors.clone())
            .collect();
        diff.per_parabolic.push((*ip, mine.len(), gold.len()));
        for x in mine.difference(gold) {
            diff.extra.push(x.clone());
        }
        for x in gold.difference(&mine) {
            diff.missing.push(x.clone());
        }
    }
    Ok(diff)
}

/// Report of the diagram-automorphism cone comparison.
#[derive(Debug, Clone)]
pub struct AutomorphismReport {
    pub sub: Label,
    pub amb: Label,
    pub ambient_implied: bool,
    pub sub_implied: bool,
    pub samples: usize,
    pub sample_mismatches: usize,
}

impl AutomorphismReport {
    pub fn passed(&self) -> bool {
        self.ambient_implied && self.sub_implied && self.sample_mismatches == 0
    }
}

/// Two-sided check that the subalgebra eigencone is the ambient eigencone
/// intersected with the sub dominant chamber, for the fixed-subalgebra pairs
/// `sp(2n) in sl(2n)` and `so(2n+1) in sl(2n+1)` with `n = 2`.
pub fn diagram_automorphism_test(
    sub_label: Label,
    samples: usize,
    seed: u64,
) -> Result<AutomorphismReport> {
    let amb_label = match (sub_label.family, sub_label.rank) {
        ('C', n) => Label::parse(&format!("A{}", 2 * n - 1))?,
        ('B', n) => Label::parse(&format!("A{}", 2 * n))?,
        _ => {
            return Err(Error::Config(
                "diagram automorphism test supports types B and C".into(),
            ))
        }
    };
    let sub_rs = RootSystem::new(sub_label)?;
    let amb_rs = RootSystem::new(amb_label)?;
    let sub_sys = generate(&sub_rs, 3, Criterion::Bk)?;
    let amb_sys = generate(&amb_rs, 3, Criterion::Bk)?;

    // x-coordinate embedding matrix: columns are images of sub unit vectors.
    let emb: Vec<Vec<Q>> = (0..sub_rs.rank)
        .map(|j| {
            let mut unit = vec![Q::zero(); sub_rs.rank];
            unit[j] = Q::one();
            let t = rootsys::cartan_to_eps(sub_label, &unit)?;
            let img = rootsys::embed_cartan(sub_label, amb_label, &t)?;
            rootsys::eps_to_cartan(amb_label, &img)
        })
        .collect::<Result<_>>()?;

    // Pull each ambient covector back to sub coordinates: f(E a) = (f E) a.
    let pull = |g: &[i64]| -> Vec<Q> {
        (0..sub_rs.rank)
            .map(|j| {
                let mut s = Q::zero();
                for (i, c) in g.iter().enumerate() {
                    if *c != 0 {
                        s += q_from(*c) * &emb[j][i];
                    }
                }
                s
            })
            .collect()
    };
    let pulled: Vec<Vec<Vec<Q>>> = amb_sys
        .ineqs
        .iter()
        .map(|i| i.covectors.iter().map(|g| pull(g)).collect())
        .collect();

    // Direction 1: every pulled ambient inequality holds on the sub cone.
    let sub_rows: Vec<Vec<Q>> = sub_sys
        .ineqs
        .iter()
        .map(|i| {
            i.covectors
                .iter()
                .flat_map(|g| g.iter().map(|&c| q_from(c)))
                .collect()
        })
        .collect();
    let ambient_implied = pulled
        .par_iter()
        .map(|covs| {
            let f: Vec<Q> = covs.iter().flatten().cloned().collect();
            implied_on_cone(&f, &sub_rows)
        })
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|x| x);

    // Direction 2: every sub inequality holds on the pulled ambient cone
    // (intersected with sub dominance, which is x >= 0 natively).
    let pulled_rows: Vec<Vec<Q>> = pulled
        .iter()
        .map(|covs| covs.iter().flatten().cloned().collect())
        .collect();
    let sub_implied = sub_rows
        .par_iter()
        .map(|f| implied_on_cone(f, &pulled_rows))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|x| x);

    // Seeded sample agreement.
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = 0usize;
    for _ in 0..samples {
        let points: Vec<CartanPoint> = (0..3)
            .map(|_| {
                CartanPoint(
                    (0..sub_rs.rank)
                        .map(|_| {
                            crate::q_ratio(rng.gen_range(0..=9), rng.gen_range(1..=4))
                        })
                        .collect(),
                )
            })
            .collect();
        let sub_ok = membership(&points, &sub_sys)?.0;
        let amb_points: Vec<CartanPoint> = points
            .iter()
            .map(|p| {
                let t = rootsys::cartan_to_eps(sub_label, &p.0)?;
                let img = rootsys::embed_cartan(sub_label, amb_label, &t)?;
                Ok(CartanPoint(rootsys::eps_to_cartan(amb_label, &img)?))
            })
            .collect::<Result<_>>()?;
        let amb_ok = membership(&amb_points, &amb_sys)?.0;
        if sub_ok != amb_ok {
            mismatches += 1;
        }
    }

    Ok(AutomorphismReport {
        sub: sub_label,
        amb: amb_label,
        ambient_implied,
        sub_implied,
        samples,
        sample_mismatches: mismatches,
    })
}

/// Does `f . a <= 0` hold for every `a >= 0` satisfying `rows . a <= 0`?
fn implied_on_cone(f: &[Q], rows: &[Vec<Q>]) -> Result<bool> {
    let n = f.len();
    let mut all_rows: Vec<Vec<Q>> = rows.to_vec();
    let mut rhs = vec![Q::zero(); rows.len()];
    all_rows.push(f.to_vec());
    rhs.push(Q::one());
    match lp::maximize(f, &all_rows, &rhs)? {
        LpOutcome::Optimal { value, .. } => Ok(!value.is_positive()),
        LpOutcome::Unbounded => Err(Error::Internal(format!(
            "implication LP unbounded ({n} vars)"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(label: &str, criterion: Criterion) -> InequalitySystem {
        let rs = RootSystem::new(Label::parse(label).unwrap()).unwrap();
        generate(&rs, 3, criterion).unwrap()
    }

    #[test]
    fn a2_bk_counts_and_golden() {
        let system = sys("A2", Criterion::Bk);
        assert_eq!(system.counts_per_parabolic(), vec![6, 6]);
        let diff = compare_with_golden(&system).unwrap();
        assert!(diff.matches(), "{diff:?}");
    }

    #[test]
    fn b2_bk_counts_and_golden() {
        let system = sys("B2", Criterion::Bk);
        assert_eq!(system.counts_per_parabolic(), vec![9, 9]);
        let diff = compare_with_golden(&system).unwrap();
        assert!(diff.matches(), "{diff:?}");
    }

    #[test]
    fn g2_bk_counts_and_golden() {
        let system = sys("G2", Criterion::Bk);
        assert_eq!(system.counts_per_parabolic(), vec![15, 15]);
        let diff = compare_with_golden(&system).unwrap();
        assert!(diff.matches(), "{diff:?}");
    }

    #[test]
    fn membership_basics() {
        let system = sys("B2", Criterion::Bk);
        let zero = vec![CartanPoint::zero(2), CartanPoint::zero(2), CartanPoint::zero(2)];
        assert!(membership(&zero, &system).unwrap().0);
        // (lambda, lambda*, 0) is always a member.
        let rs = RootSystem::new(Label::parse("B2").unwrap()).unwrap();
        let lam = Weight::from_ints(&[2, 1]);
        // For B2, -w0 = id, so lambda* = lambda.
        let pts = weights_to_points(&rs, &[lam.clone(), lam, Weight::zero(2)]).unwrap();
        assert!(membership(&pts, &system).unwrap().0);
        // Non-dominant input is rejected.
        let bad = vec![
            CartanPoint::from_ints(&[-1, 0]),
            CartanPoint::zero(2),
            CartanPoint::zero(2),
        ];
        assert!(matches!(
            membership(&bad, &system),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn scale_invariance() {
        let system = sys("A2", Criterion::Bk);
        let p1 = CartanPoint::from_ints(&[3, 1]);
        let p2 = CartanPoint::from_ints(&[0, 2]);
        let p3 = CartanPoint::from_ints(&[1, 1]);
        let pts = vec![p1, p2, p3];
        let before = membership(&pts, &system).unwrap().0;
        let scaled: Vec<CartanPoint> = pts
            .iter()
            .map(|p| CartanPoint(p.0.iter().map(|c| c * crate::q_ratio(7, 3)).collect()))
            .collect();
        assert_eq!(membership(&scaled, &system).unwrap().0, before);
    }

    #[test]
    fn criteria_nest() {
        for label in ["B2", "G2"] {
            let bk = sys(label, Criterion::Bk).covector_set();
            let klm = sys(label, Criterion::Klm).covector_set();
            let bs = sys(label, Criterion::Bs).covector_set();
            assert!(bk.is_subset(&klm), "{label}");
            assert!(klm.is_subset(&bs), "{label}");
        }
    }

    #[test]
    fn type_a_bk_equals_klm() {
        // Cominuscule collapse makes the two tuple filters agree in type A.
        for label in ["A2", "A3"] {
            let bk = sys(label, Criterion::Bk).covector_set();
            let klm = sys(label, Criterion::Klm).covector_set();
            assert_eq!(bk, klm, "{label}");
        }
    }

    #[test]
    fn a2_facets_all_irredundant() {
        let system = sys("A2", Criterion::Bk);
        let verdicts = irredundancy_check(&system).unwrap();
        assert!(verdicts.iter().all(|v| *v == FacetVerdict::Facet));
        // Duplicating an inequality makes both copies redundant.
        let mut dup = system.clone();
        let first = dup.ineqs[0].clone();
        dup.ineqs.push(first);
        let verdicts = irredundancy_check(&dup).unwrap();
        assert_eq!(
            verdicts.iter().filter(|v| **v == FacetVerdict::Redundant).count(),
            2
        );
    }

    #[test]
    fn membership_reports_facet() {
        // A C3 triple violating one P3 inequality x_i + y_j + z_k <= S/2.
        let rs = RootSystem::new(Label::parse("C3").unwrap()).unwrap();
        let system = generate(&rs, 3, Criterion::Bk).unwrap();
        let label = Label::parse("C3").unwrap();
        let mk = |t: [i64; 3]| {
            let tq: Vec<Q> = t.iter().map(|&x| q_from(x)).collect();
            CartanPoint(rootsys::eps_to_cartan(label, &tq).unwrap())
        };
        let pts = vec![mk([10, 0, 0]), mk([1, 1, 0]), mk([1, 1, 1])];
        let (ok, violated) = membership(&pts, &system).unwrap();
        assert!(!ok);
        assert!(violated
            .iter()
            .any(|&k| system.ineqs[k].parabolic == 3));
    }
}
