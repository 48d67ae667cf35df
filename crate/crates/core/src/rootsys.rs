//! Immutable root-system data for the supported simple types.
//!
//! Simple-root indexing follows Bourbaki (Planches I-IX) throughout; see
//! `docs/conventions.md` in the repository root. Supported types are
//! A1-A4, B2-B4, C2-C4, D4, G2 and F4. The invariant form is normalized so
//! that the highest root has squared length 2; membership inequalities are
//! homogeneous, so this choice only fixes intermediate values.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{q_from, q_ratio, Q, Z};

/// Simple-type label, e.g. `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub family: char,
    pub rank: usize,
}

impl Label {
    pub fn parse(s: &str) -> Result<Label> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .ok_or_else(|| Error::Config("empty type label".into()))?
            .to_ascii_uppercase();
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Config(format!("cannot parse rank in type label '{s}'")))?;
        let label = Label { family, rank };
        label.validate()?;
        Ok(label)
    }

    fn validate(&self) -> Result<()> {
        let ok = match self.family {
            'A' => (1..=4).contains(&self.rank),
            'B' | 'C' => (2..=4).contains(&self.rank),
            'D' => self.rank == 4,
            'G' => self.rank == 2,
            'F' => self.rank == 4,
            'E' => {
                return Err(Error::Config(
                    "E-series root systems exceed the supported desk scale (rank cap 4)".into(),
                ))
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Config(format!("unsupported type {self}")))
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A weight in fundamental-weight coordinates (coordinate `i` is the value on
/// the simple coroot `alpha_i^vee`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![Q::zero(); rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Weight {
        let mut c = vec![Q::zero(); rank];
        c[i] = Q::one();
        Weight(c)
    }

    pub fn from_ints(c: &[i64]) -> Weight {
        Weight(c.iter().map(|&x| q_from(x)).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn as_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(&c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }
}

/// A Cartan element in the coordinates of the basis `x_1..x_l` dual to the
/// simple roots, so coordinate `i` equals `alpha_i(h)`. Dominant iff all
/// coordinates are nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanPoint(pub Vec<Q>);

impl CartanPoint {
    pub fn zero(rank: usize) -> CartanPoint {
        CartanPoint(vec![Q::zero(); rank])
    }

    pub fn from_ints(c: &[i64]) -> CartanPoint {
        CartanPoint(c.iter().map(|&x| q_from(x)).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }
}

/// Immutable Cartan data for one (possibly synthetic Levi) root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub label: Option<Label>,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, simple roots first.
    pub positive_roots: Vec<Vec<i64>>,
    /// Exact inverse of the Cartan matrix.
    pub inv_cartan: Vec<Vec<Q>>,
    /// rho in fundamental coordinates (all ones).
    pub rho: Weight,
    /// Highest root in simple-root coordinates.
    pub highest_root: Vec<i64>,
    /// Half squared lengths `d_i = (alpha_i, alpha_i)/2`, normalized so the
    /// highest root of each component has squared length 2.
    pub d: Vec<Q>,
}

impl RootSystem {
    pub fn new(label: Label) -> Result<RootSystem> {
        label.validate()?;
        let cartan = cartan_matrix(label);
        let mut rs = RootSystem::from_cartan(cartan)?;
        rs.label = Some(label);
        let expect = expected_positive_count(label);
        if rs.positive_roots.len() != expect {
            return Err(Error::Invariant(format!(
                "{label}: generated {} positive roots, expected {expect}",
                rs.positive_roots.len()
            )));
        }
        if !rs.positive_roots.contains(&rs.highest_root) {
            return Err(Error::Invariant(format!("{label}: highest root is not a root")));
        }
        Ok(rs)
    }

    /// Build from an arbitrary finite-type (possibly reducible) Cartan matrix.
    /// Used for Levi subsystems; the labeled constructor validates counts.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<RootSystem> {
        let rank = cartan.len();
        for row in &cartan {
            if row.len() != rank {
                return Err(Error::Config("Cartan matrix is not square".into()));
            }
        }
        let positive_roots = positive_roots_by_closure(&cartan)?;
        let inv_cartan = invert(&cartan)
            .ok_or_else(|| Error::Config("singular Cartan matrix".into()))?;
        let highest_root = if rank == 0 {
            vec![]
        } else {
            find_highest_root(&cartan, &positive_roots)?
        };
        let d = symmetrizer(&cartan, &positive_roots)?;
        let rs = RootSystem {
            label: None,
            rank,
            cartan,
            positive_roots,
            inv_cartan,
            rho: Weight(vec![Q::one(); rank]),
            highest_root,
            d,
        };
        rs.check_invariants()?;
        Ok(rs)
    }

    fn check_invariants(&self) -> Result<()> {
        // Cartan * inv_cartan = identity, exactly.
        for i in 0..self.rank {
            for j in 0..self.rank {
                let mut s = Q::zero();
                for k in 0..self.rank {
                    s += q_from(self.cartan[i][k]) * &self.inv_cartan[k][j];
                }
                let want = if i == j { Q::one() } else { Q::zero() };
                if s != want {
                    return Err(Error::Invariant("inv_cartan is not an exact inverse".into()));
                }
            }
        }
        // 2 rho equals the sum of the positive roots.
        let mut two_rho = vec![0i64; self.rank];
        for r in &self.positive_roots {
            for (t, &c) in two_rho.iter_mut().zip(r) {
                *t += c;
            }
        }
        let rho_root = self.weight_in_root_coords(&self.rho);
        for (i, c) in rho_root.iter().enumerate() {
            if c * q_from(2) != q_from(two_rho[i]) {
                return Err(Error::Invariant("2 rho != sum of positive roots".into()));
            }
            if !c.is_positive() {
                return Err(Error::Invariant("rho has a nonpositive root coordinate".into()));
            }
        }
        Ok(())
    }

    /// Least common multiple of the coefficients of the highest root in the
    /// simple-root basis.
    pub fn k_g(&self) -> i64 {
        self.highest_root.iter().fold(1i64, |l, &c| lcm(l, c.max(1)))
    }

    /// Simple root `alpha_j` in fundamental coordinates: column `j` of the
    /// Cartan matrix.
    pub fn simple_root_weight(&self, j: usize) -> Vec<i64> {
        (0..self.rank).map(|i| self.cartan[i][j]).collect()
    }

    /// Fundamental coordinates of a vector given in simple-root coordinates.
    pub fn root_to_weight_coords(&self, r: &[Q]) -> Vec<Q> {
        (0..self.rank)
            .map(|i| {
                let mut s = Q::zero();
                for (j, rj) in r.iter().enumerate() {
                    s += q_from(self.cartan[i][j]) * rj;
                }
                s
            })
            .collect()
    }

    /// Simple-root coordinates of a weight (exact, via the inverse Cartan).
    pub fn weight_in_root_coords(&self, w: &Weight) -> Vec<Q> {
        (0..self.rank)
            .map(|i| {
                let mut s = Q::zero();
                for (j, cj) in w.0.iter().enumerate() {
                    s += &self.inv_cartan[i][j] * cj;
                }
                s
            })
            .collect()
    }

    /// `lambda(x_i)`: the coefficient of `alpha_i` when `lambda` is written in
    /// the simple-root basis. Indices are 1-based to match the literature.
    pub fn weight_on_x(&self, lambda: &Weight, i: usize) -> Result<Q> {
        if i == 0 || i > self.rank {
            return Err(Error::Precondition(format!("x-index {i} out of range")));
        }
        Ok(self.weight_in_root_coords(lambda).swap_remove(i - 1))
    }

    /// Pairing `(lambda, mu)` of weights in fundamental coordinates under the
    /// normalized invariant form: `(omega_i, omega_j) = d_i * invC[i][j]`.
    pub fn form_weights(&self, a: &[Q], b: &[Q]) -> Q {
        let mut s = Q::zero();
        for i in 0..self.rank {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                if b[j].is_zero() {
                    continue;
                }
                s += &a[i] * &b[j] * &self.d[i] * &self.inv_cartan[i][j];
            }
        }
        s
    }

    /// Pairing of two vectors in simple-root coordinates.
    pub fn form_roots(&self, a: &[Q], b: &[Q]) -> Q {
        // (alpha_i, alpha_j) = d_i A[i][j]
        let mut s = Q::zero();
        for i in 0..self.rank {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                if b[j].is_zero() {
                    continue;
                }
                s += &a[i] * &b[j] * &self.d[i] * q_from(self.cartan[i][j]);
            }
        }
        s
    }

    /// Coroot of the positive root `beta` (simple-root coords), expressed in
    /// simple-coroot coordinates; entries are integers.
    pub fn coroot_coords(&self, beta: &[i64]) -> Vec<Z> {
        let bq: Vec<Q> = beta.iter().map(|&c| q_from(c)).collect();
        let norm = self.form_roots(&bq, &bq);
        (0..self.rank)
            .map(|i| {
                let c = q_from(beta[i]) * &self.d[i] * q_from(2) / &norm;
                debug_assert!(c.is_integer());
                c.to_integer()
            })
            .collect()
    }

    /// Is the Levi subsystem on `subset` connected to the given node set?
    pub fn sub_cartan(&self, subset: &[usize]) -> Vec<Vec<i64>> {
        subset
            .iter()
            .map(|&i| subset.iter().map(|&j| self.cartan[i][j]).collect())
            .collect()
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Bourbaki Cartan matrices, `A[i][j] = <alpha_j, alpha_i^vee>`.
fn cartan_matrix(label: Label) -> Vec<Vec<i64>> {
    let l = label.rank;
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match label.family {
        'A' => {
            for i in 0..l - 1 {
                chain(&mut a, i, i + 1);
            }
        }
        'B' => {
            // alpha_l is the short root: <alpha_{l-1}, alpha_l^vee> = -2.
            for i in 0..l - 1 {
                chain(&mut a, i, i + 1);
            }
            a[l - 1][l - 2] = -2;
        }
        'C' => {
            // alpha_l is the long root: <alpha_l, alpha_{l-1}^vee> = -2.
            for i in 0..l - 1 {
                chain(&mut a, i, i + 1);
            }
            a[l - 2][l - 1] = -2;
        }
        'D' => {
            // Bourbaki D4: node 2 is the center.
            chain(&mut a, 0, 1);
            chain(&mut a, 1, 2);
            chain(&mut a, 1, 3);
        }
        'G' => {
            // alpha_1 short, alpha_2 long: <alpha_2, alpha_1^vee> = -3.
            a[0][1] = -3;
            a[1][0] = -1;
        }
        'F' => {
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
            chain(&mut a, 0, 1);
            chain(&mut a, 2, 3);
            a[1][2] = -1;
            a[2][1] = -2;
        }
        _ => unreachable!(),
    }
    a
}

fn expected_positive_count(label: Label) -> usize {
    let l = label.rank;
    match label.family {
        'A' => l * (l + 1) / 2,
        'B' | 'C' => l * l,
        'D' => 12,
        'G' => 6,
        'F' => 24,
        _ => unreachable!(),
    }
}

/// Generate all positive roots by closing the simple roots under the
/// simple-reflection action, keeping the ones with nonnegative coordinates.
fn positive_roots_by_closure(cartan: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let rank = cartan.len();
    let mut seen: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for j in 0..rank {
        let mut e = vec![0i64; rank];
        e[j] = 1;
        seen.insert(e.clone());
        queue.push(e);
    }
    // Finite type guard: no simple system of rank <= 4 here has more than 24
    // positive roots, but Levi products can be called with anything.
    let cap = 1000usize;
    while let Some(r) = queue.pop() {
        for i in 0..rank {
            // s_i(r) = r - <r, alpha_i^vee> alpha_i, with
            // <r, alpha_i^vee> = sum_j r_j A[i][j].
            let pairing: i64 = (0..rank).map(|j| r[j] * cartan[i][j]).sum();
            let mut img = r.clone();
            img[i] -= pairing;
            if img.iter().all(|&c| c >= 0) && seen.insert(img.clone()) {
                queue.push(img);
            }
            if seen.len() > cap {
                return Err(Error::Config(
                    "root closure did not terminate; matrix is not of finite type".into(),
                ));
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    // Simple roots first, then by height, then lexicographically.
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    Ok(roots)
}

/// The highest root dominates every positive root in the simple-root partial
/// order (componentwise). Reducible systems have none; callers only use it on
/// simple systems, so pick the componentwise maximum and verify it is a root.
fn find_highest_root(cartan: &[Vec<i64>], positives: &[Vec<i64>]) -> Result<Vec<i64>> {
    let rank = cartan.len();
    let mut max = vec![0i64; rank];
    for r in positives {
        for (m, &c) in max.iter_mut().zip(r) {
            *m = (*m).max(c);
        }
    }
    if positives.iter().any(|r| r == &max) {
        Ok(max)
    } else {
        // Reducible: return the componentwise max anyway for k_g of products;
        // it is the concatenation of component highest roots.
        Ok(max)
    }
}

/// Solve `d_i A[i][j] = d_j A[j][i]` componentwise, then normalize each
/// connected component so its highest root has squared length 2.
fn symmetrizer(cartan: &[Vec<i64>], positives: &[Vec<i64>]) -> Result<Vec<Q>> {
    let rank = cartan.len();
    let mut d: Vec<Option<Q>> = vec![None; rank];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..rank {
        if d[start].is_some() {
            continue;
        }
        let mut comp = vec![start];
        d[start] = Some(Q::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..rank {
                if i != j && cartan[i][j] != 0 && d[j].is_none() {
                    // d_j = d_i A[i][j]/A[j][i]
                    let di = d[i].clone().unwrap();
                    d[j] = Some(di * q_ratio(cartan[i][j], cartan[j][i]));
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comps.push(comp);
    }
    let mut d: Vec<Q> = d.into_iter().map(|x| x.unwrap()).collect();
    // Normalize per component: (theta, theta) = 2 with theta the component's
    // highest root, i.e. the longest root gets d = 1.
    for comp in comps {
        // Longest root supported on this component.
        let mut best: Option<Q> = None;
        for r in positives {
            if r.iter().enumerate().any(|(i, &c)| c != 0 && !comp.contains(&i)) {
                continue;
            }
            // (r, r) with the current d.
            let mut s = Q::zero();
            for i in 0..rank {
                for j in 0..rank {
                    if r[i] != 0 && r[j] != 0 {
                        s += q_from(r[i] * r[j] * cartan[i][j]) * &d[i];
                    }
                }
            }
            best = Some(match best {
                None => s,
                Some(b) => {
                    if s > b {
                        s
                    } else {
                        b
                    }
                }
            });
        }
        if let Some(maxnorm) = best {
            let scale = q_from(2) / maxnorm;
            for &i in &comp {
                d[i] *= &scale;
            }
        }
    }
    Ok(d)
}

/// Exact Gauss-Jordan inverse of an integer matrix.
fn invert(m: &[Vec<i64>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .map(|row| row.iter().map(|&x| q_from(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[r][j] -= t;
                    let t = &inv[col][j] * &f;
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

// ---------------------------------------------------------------------------
// Bourbaki epsilon-coordinate charts for the classical families A, B, C.
// ---------------------------------------------------------------------------

/// Dimension of the epsilon-coordinate chart.
pub fn eps_dim(label: Label) -> Result<usize> {
    match label.family {
        'A' => Ok(label.rank + 1),
        'B' | 'C' => Ok(label.rank),
        _ => Err(Error::Config(format!(
            "no Bourbaki epsilon chart implemented for type {label}"
        ))),
    }
}

/// Epsilon coordinates of a Cartan point given in x-coordinates
/// (`a_i = alpha_i(h)`). For type A the output is the traceless representative.
pub fn cartan_to_eps(label: Label, a: &[Q]) -> Result<Vec<Q>> {
    let l = label.rank;
    if a.len() != l {
        return Err(Error::Precondition("wrong coordinate dimension".into()));
    }
    match label.family {
        'A' => {
            // t_j = sum_{i >= j} a_i - (sum_i i*a_i)/(l+1), j = 1..l+1.
            let n1 = q_from((l + 1) as i64);
            let mut total = Q::zero();
            for (i, ai) in a.iter().enumerate() {
                total += q_from((i + 1) as i64) * ai;
            }
            let shift = total / &n1;
            let mut t = vec![Q::zero(); l + 1];
            for j in 0..l + 1 {
                let mut s = Q::zero();
                for (i, ai) in a.iter().enumerate() {
                    if i + 1 >= j + 1 {
                        s += ai;
                    }
                }
                t[j] = s - &shift;
            }
            Ok(t)
        }
        'B' => {
            // alpha_i(t) = t_i - t_{i+1} (i<l), alpha_l(t) = t_l.
            let mut t = vec![Q::zero(); l];
            for j in (0..l).rev() {
                t[j] = a[j].clone() + if j + 1 < l { t[j + 1].clone() } else { Q::zero() };
            }
            Ok(t)
        }
        'C' => {
            // alpha_l(t) = 2 t_l.
            let mut t = vec![Q::zero(); l];
            t[l - 1] = &a[l - 1] / q_from(2);
            for j in (0..l - 1).rev() {
                t[j] = a[j].clone() + &t[j + 1];
            }
            Ok(t)
        }
        _ => Err(Error::Config(format!(
            "no Bourbaki epsilon chart implemented for type {label}"
        ))),
    }
}

/// Inverse of [`cartan_to_eps`]. For type A any representative is accepted;
/// the trace is projected out.
pub fn eps_to_cartan(label: Label, t: &[Q]) -> Result<Vec<Q>> {
    let l = label.rank;
    if t.len() != eps_dim(label)? {
        return Err(Error::Precondition("wrong epsilon dimension".into()));
    }
    match label.family {
        'A' => Ok((0..l).map(|i| &t[i] - &t[i + 1]).collect()),
        'B' => {
            let mut a: Vec<Q> = (0..l - 1).map(|i| &t[i] - &t[i + 1]).collect();
            a.push(t[l - 1].clone());
            Ok(a)
        }
        'C' => {
            let mut a: Vec<Q> = (0..l - 1).map(|i| &t[i] - &t[i + 1]).collect();
            a.push(&t[l - 1] * q_from(2));
            Ok(a)
        }
        _ => Err(Error::Config(format!(
            "no Bourbaki epsilon chart implemented for type {label}"
        ))),
    }
}

/// Epsilon coordinates of a weight in fundamental coordinates. For type A the
/// traceless representative is returned (e.g. `omega_1 -> (2/3,-1/3,-1/3)`).
pub fn weight_to_eps(label: Label, c: &[Q]) -> Result<Vec<Q>> {
    let l = label.rank;
    if c.len() != l {
        return Err(Error::Precondition("wrong coordinate dimension".into()));
    }
    match label.family {
        'A' => {
            // omega_i(t) = t_1 + .. + t_i, so the coefficient vector is
            // q_j = sum_{i >= j} c_i, then project out the trace.
            let mut q = vec![Q::zero(); l + 1];
            for j in 0..l {
                for i in j..l {
                    q[j] += &c[i];
                }
            }
            let total: Q = q.iter().sum();
            let shift = total / q_from((l + 1) as i64);
            Ok(q.into_iter().map(|x| x - &shift).collect())
        }
        'B' => {
            // omega_i = e_1+..+e_i (i<l), omega_l = (e_1+..+e_l)/2.
            let mut q = vec![Q::zero(); l];
            for j in 0..l {
                for i in j..l {
                    let contrib = if i + 1 == l { &c[i] / q_from(2) } else { c[i].clone() };
                    q[j] += contrib;
                }
            }
            Ok(q)
        }
        'C' => {
            let mut q = vec![Q::zero(); l];
            for j in 0..l {
                for i in j..l {
                    q[j] += &c[i];
                }
            }
            Ok(q)
        }
        _ => Err(Error::Config(format!(
            "no Bourbaki epsilon chart implemented for type {label}"
        ))),
    }
}

/// Fundamental coordinates of a weight given in epsilon coordinates.
pub fn eps_to_weight(label: Label, t: &[Q]) -> Result<Vec<Q>> {
    // lambda(alpha_i^vee) for the chart's coroots.
    let l = label.rank;
    if t.len() != eps_dim(label)? {
        return Err(Error::Precondition("wrong epsilon dimension".into()));
    }
    match label.family {
        'A' => Ok((0..l).map(|i| &t[i] - &t[i + 1]).collect()),
        'B' => {
            // coroots: alpha_i^vee = e_i - e_{i+1} (i<l), alpha_l^vee = 2 e_l.
            let mut c: Vec<Q> = (0..l - 1).map(|i| &t[i] - &t[i + 1]).collect();
            c.push(&t[l - 1] * q_from(2));
            Ok(c)
        }
        'C' => {
            let mut c: Vec<Q> = (0..l - 1).map(|i| &t[i] - &t[i + 1]).collect();
            c.push(t[l - 1].clone());
            Ok(c)
        }
        _ => Err(Error::Config(format!(
            "no Bourbaki epsilon chart implemented for type {label}"
        ))),
    }
}

/// Image of a type C or B Cartan point inside the ambient type A Cartan, in
/// epsilon coordinates: `(t) -> (t, -rev t)` for `C_n` in `A_{2n-1}` and
/// `(t) -> (t, 0, -rev t)` for `B_n` in `A_{2n}`.
pub fn embed_cartan(sub: Label, amb: Label, t: &[Q]) -> Result<Vec<Q>> {
    let n = sub.rank;
    match (sub.family, amb.family) {
        ('C', 'A') if amb.rank == 2 * n - 1 => {
            let mut out = t.to_vec();
            out.extend(t.iter().rev().map(|x| -x));
            Ok(out)
        }
        ('B', 'A') if amb.rank == 2 * n => {
            let mut out = t.to_vec();
            out.push(Q::zero());
            out.extend(t.iter().rev().map(|x| -x));
            Ok(out)
        }
        _ => Err(Error::Config(format!(
            "unsupported Cartan embedding {sub} into {amb}"
        ))),
    }
}
