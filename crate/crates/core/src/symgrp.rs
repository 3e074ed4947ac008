//! Permutations of `{1..n}`, standard generating sets for the symmetric and
//! alternating groups, coset representatives for a point stabilizer, and
//! regular embeddings of abstract finite groups given by Cayley tables.
//!
//! Points are 1-based in every public signature and in printed cycle
//! notation. Composition follows the function convention
//! `(p ∘ q)(x) = p(q(x))`, matching `ρ(pq) = ρ(p)ρ(q)` for left actions.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    #[must_use]
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A permutation of `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    // images[i] is the image of point i + 1, stored 0-based.
    images: Vec<usize>,
}

impl Perm {
    #[must_use]
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// From 1-based images: `images[i - 1]` is the image of point `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[x - 1] = true;
            zero_based.push(x - 1);
        }
        Ok(Self { images: zero_based })
    }

    /// The cycle `(c_1, c_2, ..., c_k)` in degree `n`.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut seen = HashSet::new();
        for (k, &x) in points.iter().enumerate() {
            if x == 0 || x > n || !seen.insert(x) {
                return Err(Error::InvalidArgument(format!(
                    "bad cycle {points:?} in degree {n}"
                )));
            }
            images[x - 1] = points[(k + 1) % points.len()];
        }
        Self::from_images(&images)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidArgument(format!(
                "({i},{j}) is not a transposition"
            )));
        }
        Self::cycle(n, &[i, j])
    }

    #[must_use]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    #[must_use]
    pub fn image(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// 0-based image array.
    #[must_use]
    pub fn images0(&self) -> &[usize] {
        &self.images
    }

    #[must_use]
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose permutations of degree {} and {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(Perm {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    #[must_use]
    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    /// Cycles of length at least two, as 1-based points starting from the
    /// smallest point of each cycle.
    #[must_use]
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.images[x];
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    #[must_use]
    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    #[must_use]
    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// Adds fixed points `degree+1..=n`.
    pub fn extend_to(&self, n: usize) -> Result<Perm> {
        if n < self.degree() {
            return Err(Error::InvalidArgument(format!(
                "cannot shrink degree {} to {n}",
                self.degree()
            )));
        }
        let mut images = self.images.clone();
        images.extend(self.degree()..n);
        Ok(Perm { images })
    }

    /// A word in the Coxeter generators `s_1..s_{n-1}` (returned as 0-based
    /// indices, index `k` meaning `s_{k+1} = (k+1, k+2)`) whose product is
    /// `self`.
    #[must_use]
    pub fn coxeter_word(&self) -> Vec<usize> {
        // Sorting the image array by adjacent swaps gives
        // p ∘ s_{j1} ∘ … ∘ s_{jk} = id, so p = s_{jk} ∘ … ∘ s_{j1}.
        let mut a = self.images.clone();
        let mut swaps = Vec::new();
        let n = a.len();
        for end in (1..n).rev() {
            for i in 0..end {
                if a[i] > a[i + 1] {
                    a.swap(i, i + 1);
                    swaps.push(i);
                }
            }
        }
        swaps.reverse();
        swaps
    }

    /// A word in the generators returned by [`alternating_gens`] (0-based
    /// index `k` meaning `s_1 s_{k+2}`). Fails for odd permutations.
    pub fn alternating_word(&self) -> Result<Vec<usize>> {
        if !self.is_even() {
            return Err(Error::InvalidArgument(format!(
                "{self} is odd and has no word in the alternating generators"
            )));
        }
        // Coxeter indices here are 1-based: s_a with a in 1..n-1.
        let word: Vec<usize> = self.coxeter_word().into_iter().map(|k| k + 1).collect();
        // Pairs s_a s_b are rewritten through t_a = s_1 s_a. t_2 has order 3
        // and t_a is an involution for a >= 3.
        let inv_t = |a: usize| -> Vec<usize> {
            if a == 2 {
                vec![0, 0]
            } else {
                vec![a - 2]
            }
        };
        let mut out = Vec::new();
        for pair in word.chunks(2) {
            let (a, b) = (pair[0], pair[1]);
            match (a, b) {
                _ if a == b => {}
                (1, b) => out.push(b - 2),
                (a, 1) => out.extend(inv_t(a)),
                // s_a s_b = (s_1 s_a)^{-1} (s_1 s_b)
                (a, b) => {
                    out.extend(inv_t(a));
                    out.push(b - 2);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{self}", self.degree())
    }
}

/// The Coxeter generators `s_i = (i, i+1)`, `1 <= i < n`.
pub fn coxeter_gens(n: usize) -> Result<Vec<Perm>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "Coxeter generators need n >= 2, got {n}"
        )));
    }
    (1..n).map(|i| Perm::transposition(n, i, i + 1)).collect()
}

/// Generators `s_1 s_i` (`2 <= i < n`) of the alternating group.
pub fn alternating_gens(n: usize) -> Result<Vec<Perm>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "alternating generators need n >= 3, got {n}"
        )));
    }
    let s = coxeter_gens(n)?;
    (1..n - 1).map(|i| s[0].compose(&s[i])).collect()
}

/// Labels of the form `(i,i+1)` for the Coxeter generators.
#[must_use]
pub fn coxeter_labels(n: usize) -> Vec<String> {
    (1..n).map(|i| format!("({i},{})", i + 1)).collect()
}

/// Labels of the form `(1,2)(i,i+1)` for [`alternating_gens`].
#[must_use]
pub fn alternating_labels(n: usize) -> Vec<String> {
    (2..n).map(|i| format!("(1,2)({i},{})", i + 1)).collect()
}

/// `n` representatives of the cosets of the stabilizer of point `n`.
///
/// The first is the identity. Otherwise the `i`-th (for `i = 1..n-1`) sends
/// `n` to `i`: the transposition `(i, n)`, or with `even_only` the 3-cycle
/// `(n, i, j)` where `j = 1` unless `i = 1`, in which case `j = 2`.
pub fn coset_reps_point_stabilizer(n: usize, even_only: bool) -> Result<Vec<Perm>> {
    let min = if even_only { 4 } else { 3 };
    if n < min {
        return Err(Error::InvalidArgument(format!(
            "coset representatives need degree >= {min}, got {n}"
        )));
    }
    let mut reps = vec![Perm::identity(n)];
    for i in 1..n {
        let p = if even_only {
            let j = if i == 1 { 2 } else { 1 };
            Perm::cycle(n, &[n, i, j])?
        } else {
            Perm::transposition(n, i, n)?
        };
        reps.push(p);
    }
    Ok(reps)
}

/// Every element of the group generated by `gens`, by breadth-first search.
pub fn closure(gens: &[Perm], limit: usize) -> Result<HashSet<Perm>> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidArgument(
            "closure of an empty generating set".into(),
        ));
    };
    let id = Perm::identity(first.degree());
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.compose(&p)?;
            if seen.insert(q.clone()) {
                if seen.len() > limit {
                    return Err(Error::TooLarge(limit));
                }
                queue.push_back(q);
            }
        }
    }
    Ok(seen)
}

/// Multiplication table of a finite group; element 0 is the identity and
/// `table[i][j]` is the index of `g_i g_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct CayleyTable {
    table: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for CayleyTable {
    type Error = Error;

    fn try_from(table: Vec<Vec<usize>>) -> Result<Self> {
        CayleyTable::new(table)
    }
}

impl From<CayleyTable> for Vec<Vec<usize>> {
    fn from(t: CayleyTable) -> Self {
        t.table
    }
}

impl CayleyTable {
    /// Validates the group axioms, reporting the first one that fails.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::GroupAxiom("table is empty".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::GroupAxiom(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::GroupAxiom(format!(
                    "closure: entry {x} in row {i} is out of range"
                )));
            }
        }
        if let Some(i) = (0..n).find(|&i| table[0][i] != i || table[i][0] != i) {
            return Err(Error::GroupAxiom(format!(
                "identity: element 0 does not fix element {i}"
            )));
        }
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                row_seen[table[i][j]] = true;
                col_seen[table[j][i]] = true;
            }
            if row_seen.contains(&false) || col_seen.contains(&false) {
                return Err(Error::GroupAxiom(format!(
                    "inverses: row or column {i} is not a permutation"
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::GroupAxiom(format!(
                            "associativity fails for ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(Self { table })
    }

    #[must_use]
    pub fn order(&self) -> usize {
        self.table.len()
    }

    #[must_use]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    #[must_use]
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn cyclic(k: usize) -> Result<Self> {
        Self::abelian(&[k])
    }

    /// Direct product of cyclic groups of the given orders, in mixed radix.
    pub fn abelian(orders: &[usize]) -> Result<Self> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "bad cyclic factor orders {orders:?}"
            )));
        }
        let n: usize = orders.iter().product();
        let digits = |mut x: usize| -> Vec<usize> {
            orders
                .iter()
                .map(|&o| {
                    let d = x % o;
                    x /= o;
                    d
                })
                .collect()
        };
        let undigits = |ds: &[usize]| -> usize {
            ds.iter()
                .zip(orders)
                .rev()
                .fold(0, |acc, (&d, &o)| acc * o + d)
        };
        let table = (0..n)
            .map(|a| {
                let da = digits(a);
                (0..n)
                    .map(|b| {
                        let db = digits(b);
                        let sum: Vec<usize> = da
                            .iter()
                            .zip(&db)
                            .zip(orders)
                            .map(|((x, y), o)| (x + y) % o)
                            .collect();
                        undigits(&sum)
                    })
                    .collect()
            })
            .collect();
        Self::new(table)
    }

    /// `(C_p)^k`.
    pub fn elementary_abelian(p: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "elementary abelian rank must be positive".into(),
            ));
        }
        Self::abelian(&vec![p; k])
    }

    /// The dihedral group of order `2k`, elements `r^i s^j` at index `i + k j`.
    pub fn dihedral(k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidArgument("dihedral group needs k >= 1".into()));
        }
        let n = 2 * k;
        let table = (0..n)
            .map(|x| {
                let (a, b) = (x % k, x / k);
                (0..n)
                    .map(|y| {
                        let (c, d) = (y % k, y / k);
                        // (r^a s^b)(r^c s^d) = r^{a ± c} s^{b+d}
                        let rot = if b == 0 { (a + c) % k } else { (a + k - c) % k };
                        rot + k * ((b + d) % 2)
                    })
                    .collect()
            })
            .collect();
        Self::new(table)
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`; index `u + 4s` for unit `u`
    /// in `1, i, j, k` order and sign `s`.
    pub fn quaternion() -> Result<Self> {
        // Unit products as (sign, unit).
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let table = (0..8)
            .map(|x: usize| {
                (0..8)
                    .map(|y: usize| {
                        let (s, u) = UNIT[x % 4][y % 4];
                        u + 4 * ((s + x / 4 + y / 4) % 2)
                    })
                    .collect()
            })
            .collect();
        Self::new(table)
    }

    /// Left translations `x ↦ g x` as permutations of degree `|G|`; element
    /// index `i` is point `i + 1`.
    #[must_use]
    pub fn regular_embedding(&self) -> Vec<Perm> {
        self.table
            .iter()
            .map(|row| Perm {
                images: row.clone(),
            })
            .collect()
    }
}
