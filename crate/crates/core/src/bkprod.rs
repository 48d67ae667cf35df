//! The deformed products on `H*(G/P)`: the tau-graded product, its
//! specialization at tau = 0 (the Belkale-Kumar product), Levi-movability,
//! the inversion-set product formula on `G/B`, and the Levi factorization of
//! top intersection numbers.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::schubert::{BasisTag, CohomClass, CupTable, Space};
use crate::Q;

/// A class in `H*(G/P) (x) Z[tau_i]`, epsilon basis: position -> sparse list
/// of (tau exponent vector over the missing nodes, coefficient).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformedClass {
    /// Exponent vectors are indexed by `Space::complement()` order.
    pub terms: BTreeMap<usize, Vec<(Vec<u16>, i64)>>,
}

impl DeformedClass {
    pub fn unit(pos: usize, nvars: usize) -> DeformedClass {
        let mut terms = BTreeMap::new();
        terms.insert(pos, vec![(vec![0u16; nvars], 1i64)]);
        DeformedClass { terms }
    }

    pub fn zero() -> DeformedClass {
        DeformedClass { terms: BTreeMap::new() }
    }

    /// Drop all terms with a positive tau exponent.
    pub fn at_tau_zero(&self) -> CohomClass {
        let mut coeffs = BTreeMap::new();
        for (&w, monos) in &self.terms {
            let c: i64 = monos
                .iter()
                .filter(|(e, _)| e.iter().all(|&x| x == 0))
                .map(|&(_, c)| c)
                .sum();
            if c != 0 {
                coeffs.insert(w, c);
            }
        }
        CohomClass { basis: BasisTag::Epsilon, coeffs }
    }

    /// Set every tau to 1, recovering the cup product expansion.
    pub fn at_tau_one(&self) -> CohomClass {
        let mut coeffs = BTreeMap::new();
        for (&w, monos) in &self.terms {
            let c: i64 = monos.iter().map(|&(_, c)| c).sum();
            if c != 0 {
                coeffs.insert(w, c);
            }
        }
        CohomClass { basis: BasisTag::Epsilon, coeffs }
    }
}

/// Tau exponent of the `eps_w` term of `eps_u (.) eps_v` at the missing node
/// `i` (0-based): `(u^{-1}rho + v^{-1}rho - w^{-1}rho - rho)(x_i)`.
pub fn eps_exponent(space: &Space, u: usize, v: usize, w: usize, node: usize) -> Result<i64> {
    let wg = space.wg;
    let tu = &wg.two_rho_inv[space.elems[u]];
    let tv = &wg.two_rho_inv[space.elems[v]];
    let tw = &wg.two_rho_inv[space.elems[w]];
    let te = &wg.two_rho_inv[0];
    let twice = tu[node] + tv[node] - tw[node] - te[node];
    if twice % 2 != 0 {
        return Err(Error::Invariant("tau exponent is not an integer".into()));
    }
    Ok(twice / 2)
}

/// `eps_u (.) eps_v` with the tau exponents of the epsilon-basis formula.
/// Errors if a nonzero coefficient carries a negative exponent.
pub fn deformed_product(table: &CupTable, u: usize, v: usize) -> Result<DeformedClass> {
    let comp = table.space.complement();
    let mut terms = BTreeMap::new();
    for &(w, c) in table.product(u, v) {
        let mut exps = Vec::with_capacity(comp.len());
        for &node in &comp {
            let e = eps_exponent(&table.space, u, v, w, node)?;
            if e < 0 {
                return Err(Error::Invariant(format!(
                    "negative tau exponent {e} with nonzero coefficient {c}"
                )));
            }
            exps.push(e as u16);
        }
        terms.insert(w, vec![(exps, c)]);
    }
    Ok(DeformedClass { terms })
}

/// Product of two deformed classes (exponents add, coefficients multiply).
/// Every exponent vector must have one entry per missing node of the space.
pub fn deformed_mul(
    table: &CupTable,
    x: &DeformedClass,
    y: &DeformedClass,
) -> Result<DeformedClass> {
    let nvars = table.space.complement().len();
    for class in [x, y] {
        for monos in class.terms.values() {
            if monos.iter().any(|(e, _)| e.len() != nvars) {
                return Err(Error::Precondition(
                    "deformed class has the wrong number of tau exponents".into(),
                ));
            }
        }
    }
    let mut out: BTreeMap<usize, BTreeMap<Vec<u16>, i64>> = BTreeMap::new();
    for (&a, amonos) in &x.terms {
        for (&b, bmonos) in &y.terms {
            let expansion = deformed_product(table, a, b)?;
            for (&w, wmonos) in &expansion.terms {
                let slot = out.entry(w).or_default();
                for (ea, ca) in amonos {
                    for (eb, cb) in bmonos {
                        for (ew, cw) in wmonos {
                            let e: Vec<u16> = ea
                                .iter()
                                .zip(eb)
                                .zip(ew)
                                .map(|((&p, &q), &r)| p + q + r)
                                .collect();
                            *slot.entry(e).or_insert(0) += ca * cb * cw;
                        }
                    }
                }
            }
        }
    }
    let terms = out
        .into_iter()
        .filter_map(|(w, m)| {
            let v: Vec<(Vec<u16>, i64)> = m.into_iter().filter(|&(_, c)| c != 0).collect();
            (!v.is_empty()).then_some((w, v))
        })
        .collect();
    Ok(DeformedClass { terms })
}

/// Iterated Belkale-Kumar product of epsilon classes, tau set to 0 at the end
/// (equivalently at each step; exponents are nonnegative and additive).
pub fn bk0_product(table: &CupTable, classes: &[CohomClass]) -> Result<CohomClass> {
    let mut acc = CohomClass::single(BasisTag::Epsilon, 0);
    for cls in classes {
        if cls.basis != BasisTag::Epsilon {
            return Err(Error::Precondition("bk0_product expects epsilon classes".into()));
        }
        let mut next: BTreeMap<usize, i64> = BTreeMap::new();
        for (&a, &ca) in &acc.coeffs {
            for (&b, &cb) in &cls.coeffs {
                let expansion = deformed_product(table, a, b)?;
                for (&w, monos) in &expansion.terms {
                    for (e, c) in monos {
                        if e.iter().all(|&x| x == 0) {
                            *next.entry(w).or_insert(0) += ca * cb * c;
                        }
                    }
                }
            }
        }
        next.retain(|_, c| *c != 0);
        acc = CohomClass { basis: BasisTag::Epsilon, coeffs: next };
    }
    Ok(acc)
}

/// Coefficient of the top epsilon class in the BK product of basis classes.
pub fn bk0_top_coefficient(table: &CupTable, tuple: &[usize]) -> Result<i64> {
    let classes: Vec<CohomClass> = tuple
        .iter()
        .map(|&p| CohomClass::single(BasisTag::Epsilon, p))
        .collect();
    let prod = bk0_product(table, &classes)?;
    Ok(prod.coeffs.get(&table.space.top).copied().unwrap_or(0))
}

/// Levi-movability of a tuple given by X-basis labels (positions in the
/// space): codimensions add to `dim G/P`, the cup product is `d [X_e]` with
/// `d != 0`, and the chi-sum condition holds at every missing node.
pub fn is_levi_movable(table: &CupTable, tuple_x: &[usize]) -> Result<bool> {
    let space = &table.space;
    let codim_sum: usize = tuple_x.iter().map(|&p| space.dim - space.length(p)).sum();
    if codim_sum != space.dim {
        return Ok(false);
    }
    let eps: Vec<usize> = tuple_x.iter().map(|&p| space.dual[p]).collect();
    let d = table.top_coefficient(&eps);
    if d == 0 {
        return Ok(false);
    }
    // (sum_j chi_{w_j} - chi_1)(x_i) = 0 at every missing alpha_i; in epsilon
    // labels this is the vanishing of the total tau exponent of the top term.
    let wg = space.wg;
    for &node in &space.complement() {
        let mut twice = 0i64;
        for &u in &eps {
            twice += wg.two_rho_inv[space.elems[u]][node];
        }
        twice -= wg.two_rho_inv[space.elems[space.top]][node];
        twice -= (eps.len() as i64 - 1) * wg.two_rho_inv[0][node];
        if twice != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `eps_u (.)_0 eps_v` on `G/B` computed purely from inversion sets: zero
/// unless the inversion sets are disjoint and their union is the inversion
/// set of some `w`, in which case the coefficient is
/// `<rho, Phi_{u^{-1}}><rho, Phi_{v^{-1}}> / <rho, Phi_{w^{-1}}>`.
pub fn kostant_product_borel(table: &CupTable, u: usize, v: usize) -> Result<CohomClass> {
    let space = &table.space;
    if !space.parab.is_empty() || space.group.len() != space.wg.rs.rank {
        return Err(Error::Precondition("kostant product is defined on G/B".into()));
    }
    let wg = space.wg;
    let iu = wg.inversions(space.elems[u]);
    let iv = wg.inversions(space.elems[v]);
    let coeffs = BTreeMap::new();
    if iu.iter().any(|r| iv.contains(r)) {
        return Ok(CohomClass { basis: BasisTag::Epsilon, coeffs });
    }
    let mut union = iu.clone();
    union.extend(iv.iter().cloned());
    union.sort();
    // Find w with Phi_w equal to the union (unique if it exists).
    let mut found = None;
    for w in 0..space.len() {
        if space.length(w) != union.len() {
            continue;
        }
        let mut iw = wg.inversions(space.elems[w]);
        iw.sort();
        if iw == union {
            found = Some(w);
            break;
        }
    }
    let w = match found {
        Some(w) => w,
        None => return Ok(CohomClass { basis: BasisTag::Epsilon, coeffs }),
    };
    let c = rho_product(table, u)? * rho_product(table, v)? / rho_product(table, w)?;
    if !c.is_integer() {
        return Err(Error::Invariant(format!(
            "inversion-set product coefficient is not integral: {c}"
        )));
    }
    let c = i64::try_from(&c.to_integer())
        .map_err(|_| Error::Internal("coefficient overflow".into()))?;
    let mut coeffs = BTreeMap::new();
    coeffs.insert(w, c);
    Ok(CohomClass { basis: BasisTag::Epsilon, coeffs })
}

/// `<rho, Phi_{w^{-1}}> = prod over alpha in w R^- cap R^+ of (rho, alpha)`.
fn rho_product(table: &CupTable, w: usize) -> Result<Q> {
    let wg = table.space.wg;
    let rs = wg.rs;
    let winv = wg.inverse(table.space.elems[w]);
    let rho_roots = rs.weight_in_root_coords(&rs.rho);
    let mut prod = Q::one();
    for r in wg.inversions(winv) {
        let rq: Vec<Q> = r.iter().map(|&c| crate::q_from(c)).collect();
        let val = rs.form_roots(&rho_roots, &rq);
        if val.is_zero() {
            return Err(Error::Internal("rho pairs to zero with a positive root".into()));
        }
        prod *= val;
    }
    Ok(prod)
}

/// Outcome of the `d = d1 d2` factorization check for nested parabolics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factorization {
    /// The codimension hypothesis on the `W^Q` parts failed; nothing to check.
    HypothesisNotMet,
    Checked { d: i64, d1: i64, d2: i64, ok: bool },
}

/// Check the product formula `d = d1 d2` for a tuple in `(W^P)^s` (X-basis
/// labels as W-indices) and nested parabolics `P < Q`. `d` is the `[X_e]`
/// coefficient in `H*(G/P)`, `d1` the one in `H*(G/Q)` for the `W^Q` parts,
/// `d2` the one in `H*(Q/P)` for the `W_Q` parts of the decomposition
/// `w_j = u_j v_j`.
pub fn levi_factorization_check(
    gp: &CupTable,
    gq: &CupTable,
    qp: &CupTable,
    tuple_x_elems: &[usize],
) -> Result<Factorization> {
    let wg = gp.space.wg;
    let mut us = Vec::new();
    let mut vs = Vec::new();
    for &w in tuple_x_elems {
        let u = minimal_rep(wg, w, &gq.space.parab);
        let v = wg.mul(wg.inverse(u), w);
        us.push(u);
        vs.push(v);
    }
    let codim: usize = tuple_x_elems
        .iter()
        .map(|&w| gp.space.dim - wg.elems[w].length)
        .sum();
    if codim != gp.space.dim {
        return Err(Error::Precondition(
            "tuple codimensions do not add to dim G/P".into(),
        ));
    }
    let codim_q: usize = us.iter().map(|&u| gq.space.dim - wg.elems[u].length).sum();
    if codim_q != gq.space.dim {
        return Ok(Factorization::HypothesisNotMet);
    }
    let d = top_x_coefficient(gp, tuple_x_elems)?;
    let d1 = top_x_coefficient(gq, &us)?;
    let d2 = top_x_coefficient(qp, &vs)?;
    Ok(Factorization::Checked { d, d1, d2, ok: d == d1 * d2 })
}

/// Coefficient of the point class `[X_e]` in the product of the `[X_{w_j}]`,
/// tuple given by W-indices that must be representatives in the space.
pub fn top_x_coefficient(table: &CupTable, tuple_elems: &[usize]) -> Result<i64> {
    let mut eps = Vec::with_capacity(tuple_elems.len());
    for &w in tuple_elems {
        let p = table.space.pos_of_elem(w).ok_or_else(|| {
            Error::Precondition("tuple element is not a minimal representative".into())
        })?;
        eps.push(table.space.dual[p]);
    }
    Ok(table.top_coefficient(&eps))
}

/// Minimal-length representative of `w W_L` for a Levi node subset.
pub fn minimal_rep(wg: &crate::weyl::WeylGroup, w: usize, levi: &[usize]) -> usize {
    let mut cur = w;
    'outer: loop {
        for &i in levi {
            let mut alpha = vec![0i64; wg.rs.rank];
            alpha[i] = 1;
            let img = wg.elems[cur].apply_root(&alpha);
            if img.iter().any(|&c| c < 0) {
                let s = wg.from_word(&[i as u8]).expect("valid node");
                cur = wg.mul(cur, s);
                continue 'outer;
            }
        }
        return cur;
    }
}
