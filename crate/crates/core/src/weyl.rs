//! Weyl group enumeration, minimal coset representatives, Bruhat order,
//! inversion sets and the characters `chi_w` behind the deformed product.
//!
//! Elements are deduplicated by their integer action matrix on fundamental
//! coordinates; each carries the lexicographically least reduced word, so
//! golden data stays deterministic.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::{q_from, Q};

/// One Weyl group element.
#[derive(Debug, Clone)]
pub struct WeylElem {
    /// Lexicographically least reduced word, 0-based simple-reflection indices.
    pub word: Vec<u8>,
    /// Action on fundamental coordinates: `(w.lambda)_i = sum_j m[i][j] lambda_j`.
    pub mat_fund: Vec<Vec<i64>>,
    /// Action on simple-root coordinates.
    pub mat_root: Vec<Vec<i64>>,
    pub length: usize,
}

impl WeylElem {
    pub fn word_string(&self) -> String {
        word_to_string(&self.word)
    }

    pub fn apply_weight(&self, c: &[Q]) -> Vec<Q> {
        apply(&self.mat_fund, c)
    }

    pub fn apply_root(&self, r: &[i64]) -> Vec<i64> {
        self.mat_root
            .iter()
            .map(|row| row.iter().zip(r).map(|(&m, &x)| m * x).sum())
            .collect()
    }

    pub fn apply_root_q(&self, r: &[Q]) -> Vec<Q> {
        apply(&self.mat_root, r)
    }
}

fn apply(m: &[Vec<i64>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| {
            let mut s = Q::zero();
            for (c, x) in row.iter().zip(v) {
                if *c != 0 {
                    s += q_from(*c) * x;
                }
            }
            s
        })
        .collect()
}

/// Letters as in the published tables: r, s, t, u for the nodes left to right.
pub fn word_to_string(word: &[u8]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|&i| (b'r' + i) as char).collect()
}

pub fn word_from_string(s: &str) -> Result<Vec<u8>> {
    if s == "e" || s.is_empty() {
        return Ok(vec![]);
    }
    s.chars()
        .map(|c| {
            let c = c.to_ascii_lowercase();
            if ('r'..='u').contains(&c) {
                Ok(c as u8 - b'r')
            } else {
                Err(Error::Precondition(format!("bad reflection letter '{c}'")))
            }
        })
        .collect()
}

/// A standard parabolic, described by the simple roots of its Levi.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parabolic {
    /// Delta(P), 0-based node indices, sorted.
    pub levi: Vec<usize>,
    rank: usize,
}

impl Parabolic {
    pub fn new(rank: usize, levi: impl IntoIterator<Item = usize>) -> Result<Parabolic> {
        let mut levi: Vec<usize> = levi.into_iter().collect();
        levi.sort_unstable();
        levi.dedup();
        if levi.iter().any(|&i| i >= rank) {
            return Err(Error::Precondition("Levi node out of range".into()));
        }
        Ok(Parabolic { levi, rank })
    }

    /// Maximal parabolic omitting the 1-based node `i_p`.
    pub fn maximal(rank: usize, i_p: usize) -> Result<Parabolic> {
        if i_p == 0 || i_p > rank {
            return Err(Error::Precondition(format!("parabolic index {i_p} out of range")));
        }
        Parabolic::new(rank, (0..rank).filter(|&j| j != i_p - 1))
    }

    pub fn borel(rank: usize) -> Parabolic {
        Parabolic { levi: vec![], rank }
    }

    pub fn complement(&self) -> Vec<usize> {
        (0..self.rank).filter(|i| !self.levi.contains(i)).collect()
    }

    pub fn is_maximal(&self) -> bool {
        self.complement().len() == 1
    }

    pub fn contains(&self, other: &Parabolic) -> bool {
        other.levi.iter().all(|i| self.levi.contains(i))
    }
}

/// The full Weyl group of a root system, enumerated once and shared.
pub struct WeylGroup<'a> {
    pub rs: &'a RootSystem,
    pub elems: Vec<WeylElem>,
    index: HashMap<Vec<i64>, usize>,
    /// Simple-root coordinates of `w^{-1}(2 rho)` for each element.
    pub two_rho_inv: Vec<Vec<i64>>,
    pub longest: usize,
}

impl<'a> WeylGroup<'a> {
    pub fn enumerate(rs: &'a RootSystem) -> WeylGroup<'a> {
        let rank = rs.rank;
        let id = WeylElem {
            word: vec![],
            mat_fund: identity(rank),
            mat_root: identity(rank),
            length: 0,
        };
        let gens_fund: Vec<Vec<Vec<i64>>> =
            (0..rank).map(|i| refl_fund(rs, i)).collect();
        let gens_root: Vec<Vec<Vec<i64>>> =
            (0..rank).map(|i| refl_root(rs, i)).collect();

        let mut elems = vec![id];
        let mut index = HashMap::new();
        index.insert(flat(&elems[0].mat_fund), 0usize);
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &ei in &frontier {
                for i in 0..rank {
                    // Right multiplication w * s_i lengthens iff w(alpha_i) > 0.
                    let w = &elems[ei];
                    if !root_positive(&col_image(&w.mat_root, i)) {
                        continue;
                    }
                    let mf = mat_mul(&w.mat_fund, &gens_fund[i]);
                    let key = flat(&mf);
                    if index.contains_key(&key) {
                        continue;
                    }
                    let mr = mat_mul(&w.mat_root, &gens_root[i]);
                    let length = w.length + 1;
                    let mut word = w.word.clone();
                    word.push(i as u8);
                    index.insert(key, elems.len());
                    next.push(elems.len());
                    elems.push(WeylElem { word, mat_fund: mf, mat_root: mr, length });
                }
            }
            frontier = next;
        }
        // Replace each BFS word with the lexicographically least reduced word,
        // found greedily by smallest left descent.
        let canon: Vec<Vec<u8>> = (0..elems.len())
            .map(|i| canonical_word(&elems, &index, &gens_fund, i))
            .collect();
        for (e, w) in elems.iter_mut().zip(canon) {
            e.word = w;
        }
        let longest = (0..elems.len()).max_by_key(|&i| elems[i].length).unwrap();
        let two_rho_inv = elems
            .iter()
            .map(|e| {
                // w^{-1}(2rho) = 2rho - 2 * sum of inversions of w; compute
                // directly from the inverse matrix action instead.
                let two_rho = two_rho_roots(rs);
                inverse_apply_root(e, &two_rho)
            })
            .collect();
        WeylGroup { rs, elems, index, two_rho_inv, longest }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn find(&self, mat_fund: &[Vec<i64>]) -> Option<usize> {
        self.index.get(&flat(mat_fund)).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let m = mat_mul(&self.elems[a].mat_fund, &self.elems[b].mat_fund);
        *self.index.get(&flat(&m)).expect("product stays in the group")
    }

    pub fn inverse(&self, a: usize) -> usize {
        let m = transpose_inverse(&self.elems[a]);
        *self.index.get(&flat(&m)).expect("inverse stays in the group")
    }

    pub fn from_word(&self, word: &[u8]) -> Result<usize> {
        let mut cur = 0usize;
        for &i in word {
            if usize::from(i) >= self.rs.rank {
                return Err(Error::Precondition("reflection index out of range".into()));
            }
            let s = self
                .find(&refl_fund(self.rs, i as usize))
                .expect("simple reflection exists");
            cur = self.mul(cur, s);
        }
        Ok(cur)
    }

    /// All elements of the (standard parabolic) subgroup generated by `gens`:
    /// exactly the elements whose inversions are supported on `gens`.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| {
                self.inversions(i)
                    .iter()
                    .all(|r| supported_on(r, gens))
            })
            .collect()
    }

    /// Longest element of the standard parabolic subgroup on `gens`.
    pub fn longest_in(&self, gens: &[usize]) -> usize {
        self.subgroup(gens)
            .into_iter()
            .max_by_key(|&i| self.elems[i].length)
            .expect("subgroup contains e")
    }

    /// Minimal-length coset representatives of `W_S / W_P` where `S` is a
    /// generator subset and `P` a parabolic subset of `S`. For the whole group
    /// pass `S = 0..rank`. Sorted by (length, word).
    pub fn coset_reps(&self, group: &[usize], parab: &[usize]) -> Vec<usize> {
        debug_assert!(parab.iter().all(|i| group.contains(i)));
        let mut v: Vec<usize> = self
            .subgroup(group)
            .into_iter()
            .filter(|&i| {
                parab
                    .iter()
                    .all(|&j| root_positive(&col_image(&self.elems[i].mat_root, j)))
            })
            .collect();
        v.sort_by(|&a, &b| {
            (self.elems[a].length, &self.elems[a].word)
                .cmp(&(self.elems[b].length, &self.elems[b].word))
        });
        v
    }

    /// Inversion set `Phi_w = w^{-1} R^- intersect R^+` in simple-root coords.
    pub fn inversions(&self, w: usize) -> Vec<Vec<i64>> {
        let e = &self.elems[w];
        self.rs
            .positive_roots
            .iter()
            .filter(|r| !root_positive(&e.apply_root(r)))
            .cloned()
            .collect()
    }

    /// Bruhat order by the subword property against the canonical word of `w`.
    pub fn bruhat_leq(&self, u: usize, w: usize) -> bool {
        if self.elems[u].length > self.elems[w].length {
            return false;
        }
        if u == w || u == 0 {
            return true;
        }
        // Elements reachable as reduced subwords of prefixes of word(w).
        let mut reach = vec![0usize];
        let mut seen = std::collections::HashSet::new();
        seen.insert(0usize);
        for &letter in &self.elems[w].word {
            let s = self
                .find(&refl_fund(self.rs, letter as usize))
                .expect("simple reflection");
            let mut add = Vec::new();
            for &x in &reach {
                let xs = self.mul(x, s);
                if self.elems[xs].length > self.elems[x].length && seen.insert(xs) {
                    add.push(xs);
                }
            }
            reach.extend(add);
        }
        seen.contains(&u)
    }

    /// `chi_w = rho - 2 rho^L + w^{-1} rho`, cross-checked against the direct
    /// sum over `(R^+ \ R^+_l) cap w^{-1} R^+`. Returns fundamental coords.
    pub fn chi(&self, w: usize, p: &Parabolic) -> Result<Weight> {
        let rank = self.rs.rank;
        // rho - 2 rho^L + w^{-1} rho in root coordinates, times 2.
        let two_rho = two_rho_roots(self.rs);
        let two_rho_l = two_rho_levi(self.rs, &p.levi);
        let winv_two_rho = &self.two_rho_inv[w];
        let mut twice: Vec<i64> = (0..rank)
            .map(|i| two_rho[i] - 2 * two_rho_l[i] + winv_two_rho[i])
            .collect();
        // Direct formula: sum of beta over beta in (R+ \ R+_l) with w(beta) > 0.
        let e = &self.elems[w];
        let mut direct = vec![0i64; rank];
        for r in &self.rs.positive_roots {
            if supported_on(r, &p.levi) {
                continue;
            }
            if root_positive(&e.apply_root(r)) {
                for (d, &c) in direct.iter_mut().zip(r) {
                    *d += c;
                }
            }
        }
        for i in 0..rank {
            if twice[i] % 2 != 0 {
                return Err(Error::Invariant("chi_w is not integral".into()));
            }
            twice[i] /= 2;
        }
        if twice != direct {
            return Err(Error::Invariant(format!(
                "chi_w formulas disagree for w = {}",
                e.word_string()
            )));
        }
        let rootq: Vec<Q> = direct.iter().map(|&c| q_from(c)).collect();
        Ok(Weight(self.rs.root_to_weight_coords(&rootq)))
    }

    /// `(w^{-1} 2rho)(x_i)` as an integer, 0-based `i`.
    pub fn two_rho_inv_on_x(&self, w: usize, i: usize) -> i64 {
        self.two_rho_inv[w][i]
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn flat(m: &[Vec<i64>]) -> Vec<i64> {
    m.iter().flatten().copied().collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

/// Matrix of `s_i` on fundamental coordinates: `s_i(lambda) = lambda - lambda_i alpha_i`.
fn refl_fund(rs: &RootSystem, i: usize) -> Vec<Vec<i64>> {
    let n = rs.rank;
    let alpha = rs.simple_root_weight(i);
    let mut m = identity(n);
    for (k, row) in m.iter_mut().enumerate() {
        row[i] -= alpha[k];
    }
    m
}

/// Matrix of `s_i` on simple-root coordinates: `s_i(alpha_j) = alpha_j - A[i][j] alpha_i`.
fn refl_root(rs: &RootSystem, i: usize) -> Vec<Vec<i64>> {
    let n = rs.rank;
    let mut m = identity(n);
    for j in 0..n {
        m[i][j] -= rs.cartan[i][j];
    }
    m
}

fn col_image(mat_root: &[Vec<i64>], j: usize) -> Vec<i64> {
    mat_root.iter().map(|row| row[j]).collect()
}

fn root_positive(r: &[i64]) -> bool {
    // Roots are never zero; positive iff all coordinates >= 0.
    r.iter().all(|&c| c >= 0)
}

fn supported_on(r: &[i64], nodes: &[usize]) -> bool {
    r.iter().enumerate().all(|(i, &c)| c == 0 || nodes.contains(&i))
}

fn two_rho_roots(rs: &RootSystem) -> Vec<i64> {
    let mut s = vec![0i64; rs.rank];
    for r in &rs.positive_roots {
        for (t, &c) in s.iter_mut().zip(r) {
            *t += c;
        }
    }
    s
}

fn two_rho_levi(rs: &RootSystem, levi: &[usize]) -> Vec<i64> {
    let mut s = vec![0i64; rs.rank];
    for r in &rs.positive_roots {
        if supported_on(r, levi) {
            for (t, &c) in s.iter_mut().zip(r) {
                *t += c;
            }
        }
    }
    s
}

/// Action of `w^{-1}` on a vector in root coordinates. The root matrix of
/// `w^{-1}` is the inverse of `mat_root`; both are integer matrices, and for
/// orthogonal actions the inverse equals the form-conjugated transpose. We
/// avoid rational inverses by applying the reversed word.
fn inverse_apply_root(e: &WeylElem, v: &[i64]) -> Vec<i64> {
    // mat_root is a product of reflection matrices following the word; the
    // inverse action is the reversed word, but the matrices are not stored per
    // letter here. Instead solve mat_root * x = v over the integers by Cramer
    // elimination; the matrix is unimodular.
    let n = v.len();
    let mut a: Vec<Vec<Q>> = e
        .mat_root
        .iter()
        .map(|row| row.iter().map(|&x| q_from(x)).collect())
        .collect();
    let mut b: Vec<Q> = v.iter().map(|&x| q_from(x)).collect();
    // Gaussian elimination.
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("unimodular");
        a.swap(col, piv);
        b.swap(col, piv);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
        }
        b[col] /= &p;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[r][j] -= t;
                }
                let t = &b[col] * &f;
                b[r] -= t;
            }
        }
    }
    b.into_iter()
        .map(|x| {
            debug_assert!(x.is_integer());
            i64::try_from(&x.to_integer()).expect("small integer")
        })
        .collect()
}

/// Transposed-inverse trick: for Weyl actions, the fundamental-coordinate
/// matrix of `w^{-1}` is the root-coordinate matrix of `w`, transposed.
fn transpose_inverse(e: &WeylElem) -> Vec<Vec<i64>> {
    // <w^{-1} lambda, alpha_i^vee> = <lambda, w alpha_i^vee>; coroot coords of
    // w alpha_i^vee transform by mat_root of w in the dual numbering only for
    // simply-laced systems, so do it honestly: invert mat_fund.
    let n = e.mat_fund.len();
    let mut a: Vec<Vec<Q>> = e
        .mat_fund
        .iter()
        .map(|row| row.iter().map(|&x| q_from(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Q::from_integer(1.into()) } else { Q::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("invertible");
        a.swap(col, piv);
        inv.swap(col, piv);
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
    inv.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| {
                    debug_assert!(x.is_integer());
                    i64::try_from(&x.to_integer()).expect("small integer")
                })
                .collect()
        })
        .collect()
}

fn canonical_word(
    elems: &[WeylElem],
    index: &HashMap<Vec<i64>, usize>,
    gens_fund: &[Vec<Vec<i64>>],
    mut cur: usize,
) -> Vec<u8> {
    // Greedy: repeatedly strip the smallest left descent.
    let mut word = Vec::with_capacity(elems[cur].length);
    while elems[cur].length > 0 {
        let mut found = None;
        for (i, g) in gens_fund.iter().enumerate() {
            let m = mat_mul(g, &elems[cur].mat_fund);
            let j = *index.get(&flat(&m)).expect("closed under products");
            if elems[j].length < elems[cur].length {
                found = Some((i as u8, j));
                break;
            }
        }
        let (i, j) = found.expect("non-identity element has a descent");
        word.push(i);
        cur = j;
    }
    word
}
