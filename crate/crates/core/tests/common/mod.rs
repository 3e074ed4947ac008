//! Independent oracles shared by the integration tests. Nothing here calls
//! the elimination routines under test.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinspread::gf2::{BitMat, BitVec, Subspace};
use spinspread::rep::GroupRep;
use spinspread::symgrp::Perm;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vec(rng: &mut ChaCha8Rng, len: usize) -> BitVec {
    let bits: Vec<bool> = (0..len).map(|_| rng.gen()).collect();
    BitVec::from_bools(&bits)
}

pub fn random_mat(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> BitMat {
    let mut m = BitMat::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            if rng.gen() {
                m.set(r, c, true);
            }
        }
    }
    m
}

/// Vectors of length <= 20 as integers.
pub fn to_int(v: &BitVec) -> u32 {
    v.iter_ones().map(|i| 1u32 << i).sum()
}

/// Every vector in the span, by closing `{0}` under addition of generators.
pub fn span_set(gens: &[BitVec]) -> BTreeSet<u32> {
    let mut set = BTreeSet::from([0u32]);
    for g in gens {
        let g = to_int(g);
        let extra: Vec<u32> = set.iter().map(|x| x ^ g).collect();
        set.extend(extra);
    }
    set
}

/// Rank of a list of integer-coded vectors by counting the span.
pub fn rank_by_span(gens: &[BitVec]) -> usize {
    span_set(gens).len().trailing_zeros() as usize
}

pub fn subspace_set(w: &Subspace) -> BTreeSet<u32> {
    let rows: Vec<BitVec> = w.basis().rows().collect();
    span_set(&rows)
}

pub fn inversion_parity_even(p: &Perm) -> bool {
    let img = p.images0();
    let mut inv = 0;
    for i in 0..img.len() {
        for j in i + 1..img.len() {
            if img[i] > img[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 0
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Hook length formula for the shape `(a, b)`.
pub fn hook_length_count(a: usize, b: usize) -> usize {
    let n = a + b;
    let mut hooks = 1usize;
    for j in 0..a {
        let below = usize::from(j < b);
        hooks *= (a - j - 1) + below + 1;
    }
    for j in 0..b {
        hooks *= b - j;
    }
    factorial(n) / hooks
}

/// Group order by breadth-first search over matrices.
pub fn matrix_group_order(gens: &[BitMat], limit: usize) -> usize {
    let id = BitMat::identity(gens[0].n_rows());
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.mul(&x).unwrap();
            if seen.insert(y.clone()) {
                assert!(seen.len() <= limit, "group larger than {limit}");
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

/// Dimension of `Hom_G(A, B)` from the full system in all entries of `X`,
/// eliminated with a plain `Vec<bool>` Gauss routine.
pub fn dense_hom_dim(a: &GroupRep, b: &GroupRep) -> usize {
    let (da, db) = (a.degree(), b.degree());
    let unknowns = da * db;
    let mut rows: Vec<Vec<bool>> = Vec::new();
    for (ga, gb) in a.generators().iter().zip(b.generators()) {
        for r in 0..db {
            for c in 0..da {
                let mut eq = vec![false; unknowns];
                for k in 0..db {
                    if gb.get(r, k) {
                        eq[k * da + c] ^= true;
                    }
                }
                for k in 0..da {
                    if ga.get(k, c) {
                        eq[r * da + k] ^= true;
                    }
                }
                rows.push(eq);
            }
        }
    }
    unknowns - bool_rank(rows)
}

pub fn bool_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `Q(v)` straight from the definition `Σ_{i≤j} B_ij v_i v_j`.
pub fn q_by_definition(b: &BitMat, v: &BitVec) -> bool {
    let mut acc = false;
    for i in 0..b.n_rows() {
        for j in i..b.n_cols() {
            acc ^= b.get(i, j) && v.get(i) && v.get(j);
        }
    }
    acc
}
