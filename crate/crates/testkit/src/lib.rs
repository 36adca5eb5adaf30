//! Slow, independent oracles over `F_p` for testing `socle-lab`.
//!
//! Everything here is dense linear algebra on truncated monomial spaces.
//! Nothing is shared with the library: polynomials are plain maps from
//! exponent vectors to residues, and all answers come from matrix ranks.

use std::collections::{BTreeMap, BTreeSet};

pub mod gen;

/// Sparse polynomial mod `p`: exponent vector to nonzero residue.
pub type SparsePoly = BTreeMap<Vec<u32>, u64>;

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "zero has no inverse");
    pow_mod(a, p - 2, p)
}

/// Builds a polynomial from `(coefficient, exponents)` pairs; coefficients
/// may be negative.
pub fn poly(terms: &[(i64, &[u32])], p: u64) -> SparsePoly {
    let mut out = SparsePoly::new();
    for (c, e) in terms {
        let c = c.rem_euclid(p as i64) as u64;
        add_term(&mut out, e.to_vec(), c, p);
    }
    out
}

fn add_term(f: &mut SparsePoly, e: Vec<u32>, c: u64, p: u64) {
    let slot = f.entry(e.clone()).or_insert(0);
    *slot = (*slot + c) % p;
    if *slot == 0 {
        f.remove(&e);
    }
}

pub fn degree(f: &SparsePoly) -> u32 {
    f.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
}

pub fn mul(f: &SparsePoly, g: &SparsePoly, p: u64) -> SparsePoly {
    let mut out = SparsePoly::new();
    for (a, ca) in f {
        for (b, cb) in g {
            let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            add_term(&mut out, e, ca * cb % p, p);
        }
    }
    out
}

/// All exponent vectors in `n` variables of total degree exactly `d`.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All exponent vectors of total degree below `d`.
pub fn monomials_below(n: usize, d: u32) -> Vec<Vec<u32>> {
    (0..d).flat_map(|k| monomials_of_degree(n, k)).collect()
}

/// Row space over `F_p`, kept in reduced echelon form.
#[derive(Clone, Debug)]
pub struct RowSpace {
    p: u64,
    width: usize,
    /// Pivot column to normalized row.
    rows: BTreeMap<usize, Vec<u64>>,
}

impl RowSpace {
    pub fn new(width: usize, p: u64) -> Self {
        RowSpace { p, width, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> BTreeSet<usize> {
        self.rows.keys().copied().collect()
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        assert_eq!(v.len(), self.width);
        for (&col, row) in &self.rows {
            let c = v[col];
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + self.p - c * r % self.p) % self.p;
                }
            }
        }
        v
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        let mut v = self.reduce(v);
        let Some(col) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[col], self.p);
        for x in v.iter_mut() {
            *x = *x * inv % self.p;
        }
        for row in self.rows.values_mut() {
            let c = row[col];
            if c != 0 {
                for (x, r) in row.iter_mut().zip(&v) {
                    *x = (*x + self.p - c * r % self.p) % self.p;
                }
            }
        }
        self.rows.insert(col, v);
        true
    }

    pub fn contains(&self, v: Vec<u64>) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

fn index_of(basis: &[Vec<u32>]) -> BTreeMap<&[u32], usize> {
    basis.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect()
}

/// Coordinates of `f` in `basis`, dropping monomials outside it.
fn coords(f: &SparsePoly, index: &BTreeMap<&[u32], usize>, width: usize) -> Vec<u64> {
    let mut v = vec![0; width];
    for (e, c) in f {
        if let Some(&i) = index.get(e.as_slice()) {
            v[i] = *c;
        }
    }
    v
}

/// Membership of a homogeneous `f` in the ideal of homogeneous `gens`,
/// decided by the rank of the degree-`deg f` Macaulay matrix. Inhomogeneous
/// input gives a one-sided answer: `true` is always correct.
pub fn macaulay_contains(gens: &[SparsePoly], f: &SparsePoly, nvars: usize, p: u64) -> bool {
    macaulay_contains_up_to(gens, f, nvars, degree(f), p)
}

/// Membership using every multiple `m * g` of degree at most `bound`.
pub fn macaulay_contains_up_to(gens: &[SparsePoly], f: &SparsePoly, nvars: usize, bound: u32, p: u64) -> bool {
    if f.is_empty() {
        return true;
    }
    let basis = monomials_below(nvars, bound + 1);
    let index = index_of(&basis);
    let mut space = RowSpace::new(basis.len(), p);
    for g in gens.iter().filter(|g| !g.is_empty()) {
        let dg = degree(g);
        if dg > bound {
            continue;
        }
        for m in monomials_below(nvars, bound - dg + 1) {
            let mono: SparsePoly = [(m, 1)].into_iter().collect();
            space.insert(coords(&mul(&mono, g, p), &index, basis.len()));
        }
    }
    if degree(f) > bound {
        return false;
    }
    space.contains(coords(f, &index, basis.len()))
}

/// Number of monomials outside a monomial ideal, counted by walking the box
/// cut out by its pure powers. Panics if some variable has no pure power.
pub fn staircase_count(generators: &[Vec<u32>], nvars: usize) -> u64 {
    let bounds: Vec<u32> = (0..nvars)
        .map(|v| {
            generators
                .iter()
                .filter(|g| g.iter().enumerate().all(|(i, &e)| (i == v) == (e > 0)))
                .map(|g| g[v])
                .min()
                .expect("every variable needs a pure power")
        })
        .collect();
    let mut count = 0;
    let mut point = vec![0u32; nvars];
    loop {
        if !generators.iter().any(|g| g.iter().zip(&point).all(|(a, b)| a <= b)) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == nvars {
                return count;
            }
            point[k] += 1;
            if point[k] < bounds[k] {
                break;
            }
            point[k] = 0;
            k += 1;
        }
    }
}

/// `S/(J + m^N)` as a vector space: its basis and the row space of `J`'s
/// truncated multiples.
struct Truncation {
    basis: Vec<Vec<u32>>,
    space: RowSpace,
}

fn truncate(gens: &[SparsePoly], nvars: usize, n: u32, p: u64) -> Truncation {
    let basis = monomials_below(nvars, n);
    let index = index_of(&basis);
    let mut space = RowSpace::new(basis.len(), p);
    for g in gens.iter().filter(|g| !g.is_empty()) {
        let low = g.keys().map(|e| e.iter().sum::<u32>()).min().unwrap_or(0);
        if low >= n {
            continue;
        }
        for m in monomials_below(nvars, n - low) {
            let mono: SparsePoly = [(m, 1)].into_iter().collect();
            space.insert(coords(&mul(&mono, g, p), &index, basis.len()));
        }
    }
    Truncation { basis, space }
}

/// Length of the localization of `S/J` at the origin: the value where
/// `dim S/(J + m^N)` stops growing. By Nakayama the first repeat is final.
/// Returns `None` if it has not settled by `max_n`.
pub fn local_length(gens: &[SparsePoly], nvars: usize, max_n: u32, p: u64) -> Option<u64> {
    local_length_with_order(gens, nvars, max_n, p).map(|(len, _)| len)
}

/// Local length and the first `N` with `m^N ⊆ J` locally.
pub fn local_length_with_order(gens: &[SparsePoly], nvars: usize, max_n: u32, p: u64) -> Option<(u64, u32)> {
    let mut prev: Option<u64> = None;
    for n in 1..=max_n {
        let t = truncate(gens, nvars, n, p);
        let len = (t.basis.len() - t.space.rank()) as u64;
        if prev == Some(len) {
            return Some((len, n - 1));
        }
        prev = Some(len);
    }
    None
}

/// Dimension of the socle `(J : m)/J` of the local ring `S/J`, which must
/// have finite length.
pub fn socle_dimension(gens: &[SparsePoly], nvars: usize, max_n: u32, p: u64) -> Option<u64> {
    let (_, order) = local_length_with_order(gens, nvars, max_n, p)?;
    // m^order ⊆ J, so S/J = S/(J + m^order); work one degree higher so
    // products of basis elements with variables stay representable.
    let n = order + 1;
    let t = truncate(gens, nvars, n, p);
    let index = index_of(&t.basis);
    let pivots = t.space.pivots();
    let standard: Vec<usize> = (0..t.basis.len()).filter(|i| !pivots.contains(i)).collect();
    // Standard positions of degree `order` vanish in S/J.
    let standard: Vec<usize> = standard.into_iter().filter(|&i| t.basis[i].iter().sum::<u32>() < order).collect();
    let width = t.basis.len();
    let mut image = RowSpace::new(width * nvars, p);
    let mut kernel_rank_defect = 0u64;
    for &s in &standard {
        let mut row = Vec::with_capacity(width * nvars);
        for v in 0..nvars {
            let mut e = t.basis[s].clone();
            e[v] += 1;
            let prod: SparsePoly = [(e, 1)].into_iter().collect();
            row.extend(t.space.reduce(coords(&prod, &index, width)));
        }
        if !image.insert(row) {
            kernel_rank_defect += 1;
        }
    }
    Some(kernel_rank_defect)
}
