//! Two-row Specht modules over GF(2) and their irreducible quotients.
//!
//! For a shape `λ = (a, b)` the permutation module `M^λ` has the tabloids as
//! basis; a two-row tabloid is identified with its second-row entry set, and
//! the `C(n, b)` sets are indexed in lexicographic order. The Specht module
//! `S^λ` is spanned by the polytabloids of standard tableaux, and
//! `D^λ = S^λ / (S^λ ∩ S^λ⊥)` with respect to the form in which tabloids are
//! orthonormal.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{BitMat, BitVec, Subspace};
use crate::rep::{GroupKind, GroupRep};
use crate::symgrp::{coxeter_gens, Perm};

/// A two-part 2-regular partition `(a, b)` with `a > b >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwoRowShape {
    a: usize,
    b: usize,
}

impl TwoRowShape {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if b == 0 || a <= b {
            return Err(Error::InvalidArgument(format!(
                "({a},{b}) is not a two-part 2-regular partition"
            )));
        }
        if a + b > 63 {
            return Err(Error::TooLarge(a + b));
        }
        Ok(Self { a, b })
    }

    #[must_use]
    pub fn a(&self) -> usize {
        self.a
    }

    #[must_use]
    pub fn b(&self) -> usize {
        self.b
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.a + self.b
    }

    /// `(m+1, m)` for `n = 2m+1` and `(m+1, m-1)` for `n = 2m`.
    pub fn spin(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "spin module needs n >= 3, got {n}"
            )));
        }
        let m = n / 2;
        if n % 2 == 1 {
            Self::new(m + 1, m)
        } else {
            Self::new(m + 1, m - 1)
        }
    }

    /// All two-part 2-regular partitions of `n`.
    #[must_use]
    pub fn all_of(n: usize) -> Vec<TwoRowShape> {
        (1..n.div_ceil(2))
            .filter_map(|b| TwoRowShape::new(n - b, b).ok())
            .collect()
    }
}

impl fmt::Display for TwoRowShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A filling of the shape with `1..n`; `first` has length `a`, `second`
/// length `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl Tableau {
    fn check(&self, shape: TwoRowShape) -> Result<()> {
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        let ok = self.first.len() == shape.a
            && self.second.len() == shape.b
            && self.first.iter().chain(&self.second).all(|&x| {
                let fresh = (1..=n).contains(&x) && !seen[x];
                if fresh {
                    seen[x] = true;
                }
                fresh
            });
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "{self:?} is not a tableau of shape {shape}"
            )))
        }
    }
}

/// Tabloids of a two-row shape: `b`-subsets of `{1..n}` in lexicographic
/// order, each stored as a bitmask with bit `x - 1` for point `x`.
#[derive(Clone, Debug)]
pub struct TabloidIndex {
    shape: TwoRowShape,
    sets: Vec<u64>,
    lookup: HashMap<u64, usize>,
}

fn lex_subsets(n: usize, b: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for x in start..=n + 1 - left {
            cur.push(x);
            go(x + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, b, &mut Vec::with_capacity(b), &mut out);
    out
}

fn mask_of(points: &[usize]) -> u64 {
    points.iter().fold(0, |m, &x| m | 1 << (x - 1))
}

fn points_of(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

impl TabloidIndex {
    #[must_use]
    pub fn new(shape: TwoRowShape) -> Self {
        let sets: Vec<u64> = lex_subsets(shape.n(), shape.b)
            .iter()
            .map(|s| mask_of(s))
            .collect();
        let lookup = sets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        Self {
            shape,
            sets,
            lookup,
        }
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    #[must_use]
    pub fn shape(&self) -> TwoRowShape {
        self.shape
    }

    /// Second-row entries of tabloid `i`, ascending.
    #[must_use]
    pub fn second_row(&self, i: usize) -> Vec<usize> {
        points_of(self.sets[i])
    }

    fn index_of_mask(&self, mask: u64) -> usize {
        self.lookup[&mask]
    }

    fn image_mask(mask: u64, p: &Perm) -> u64 {
        let imgs = p.images0();
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let x = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= 1 << imgs[x];
        }
        out
    }

    /// Index of the tabloid `p·{t}`.
    #[must_use]
    pub fn act(&self, i: usize, p: &Perm) -> usize {
        self.index_of_mask(Self::image_mask(self.sets[i], p))
    }
}

/// All `C(n, b)` tabloids of the shape.
#[must_use]
pub fn enumerate_tabloids(shape: TwoRowShape) -> TabloidIndex {
    TabloidIndex::new(shape)
}

/// The permutation matrix of `p` on `M^λ`: column `t` has its one in row
/// `p·t`.
pub fn tabloid_perm_matrix(index: &TabloidIndex, p: &Perm) -> Result<BitMat> {
    if p.degree() != index.shape.n() {
        return Err(Error::DimensionMismatch(format!(
            "permutation of degree {} on tabloids of {}",
            p.degree(),
            index.shape
        )));
    }
    let mut m = BitMat::zeros(index.len(), index.len());
    for t in 0..index.len() {
        m.set(index.act(t, p), t, true);
    }
    Ok(m)
}

/// Standard tableaux, ordered lexicographically by second-row set.
#[must_use]
pub fn standard_tableaux(shape: TwoRowShape) -> Vec<Tableau> {
    let n = shape.n();
    lex_subsets(n, shape.b)
        .into_iter()
        .filter_map(|second| {
            let first: Vec<usize> = (1..=n).filter(|x| !second.contains(x)).collect();
            first
                .iter()
                .zip(&second)
                .all(|(x, y)| x < y)
                .then_some(Tableau { first, second })
        })
        .collect()
}

/// The polytabloid `e_t` in characteristic 2: the sum over all subsets of
/// the height-two columns of the tabloid with those columns swapped.
pub fn polytabloid(index: &TabloidIndex, tableau: &Tableau) -> Result<BitVec> {
    let shape = index.shape;
    tableau.check(shape)?;
    let mut v = BitVec::zeros(index.len());
    for swaps in 0u64..1 << shape.b {
        let second: Vec<usize> = (0..shape.b)
            .map(|j| {
                if swaps >> j & 1 == 1 {
                    tableau.first[j]
                } else {
                    tableau.second[j]
                }
            })
            .collect();
        v.flip(index.index_of_mask(mask_of(&second)));
    }
    Ok(v)
}

/// Precomputed data for `S^λ` and its Gram form.
#[derive(Clone, Debug)]
pub struct SpechtData {
    shape: TwoRowShape,
    tabloids: TabloidIndex,
    tableaux: Vec<Tableau>,
    polytabloids: BitMat,
    gram: BitMat,
    radical: Subspace,
    // Columns at which `polytabloids` is invertible, and that inverse.
    pivot_cols: Vec<usize>,
    pivot_inverse: BitMat,
}

impl SpechtData {
    pub fn new(shape: TwoRowShape) -> Result<Self> {
        let tabloids = TabloidIndex::new(shape);
        let tableaux = standard_tableaux(shape);
        let mut polytabloids = BitMat::zeros(0, tabloids.len());
        for t in &tableaux {
            polytabloids.push_row(&polytabloid(&tabloids, t)?)?;
        }
        let gram = polytabloids.mul(&polytabloids.transpose())?;
        let radical = gram.kernel();
        let rref = polytabloids.rref();
        if rref.rank != tableaux.len() {
            return Err(Error::Certification(format!(
                "polytabloids of {shape} have rank {} < {}",
                rref.rank,
                tableaux.len()
            )));
        }
        let pivot_inverse = polytabloids.select_columns(&rref.pivots).inverse()?;
        Ok(Self {
            shape,
            tabloids,
            tableaux,
            polytabloids,
            gram,
            radical,
            pivot_cols: rref.pivots,
            pivot_inverse,
        })
    }

    #[must_use]
    pub fn shape(&self) -> TwoRowShape {
        self.shape
    }

    #[must_use]
    pub fn tabloids(&self) -> &TabloidIndex {
        &self.tabloids
    }

    #[must_use]
    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    /// Rows are the standard polytabloids in tabloid coordinates.
    #[must_use]
    pub fn polytabloids(&self) -> &BitMat {
        &self.polytabloids
    }

    #[must_use]
    pub fn gram(&self) -> &BitMat {
        &self.gram
    }

    /// `S^λ ∩ S^λ⊥` in standard-polytabloid coordinates.
    #[must_use]
    pub fn radical(&self) -> &Subspace {
        &self.radical
    }

    #[must_use]
    pub fn specht_dim(&self) -> usize {
        self.tableaux.len()
    }

    #[must_use]
    pub fn rad_dim(&self) -> usize {
        self.radical.dim()
    }

    #[must_use]
    pub fn irreducible_dim(&self) -> usize {
        self.specht_dim() - self.rad_dim()
    }

    /// The matrix `A` with `P · T_pᵀ = A · P`, i.e. row `i` of `A` expresses
    /// `p · e_{t_i}` in the standard polytabloids.
    fn specht_action_rows(&self, p: &Perm) -> Result<BitMat> {
        let k = self.specht_dim();
        let inv = p.inverse();
        let mut image = BitMat::zeros(k, self.tabloids.len());
        for i in 0..k {
            for t in self.polytabloids.row(i).iter_ones() {
                image.set(i, self.tabloids.act(t, p), true);
            }
        }
        // Only the pivot columns are needed to recover A; the full product
        // is compared afterwards.
        let mut image_piv = BitMat::zeros(k, k);
        for (c, &col) in self.pivot_cols.iter().enumerate() {
            let src = self.tabloids.act(col, &inv);
            for i in 0..k {
                if self.polytabloids.get(i, src) {
                    image_piv.set(i, c, true);
                }
            }
        }
        let a = image_piv.mul(&self.pivot_inverse)?;
        if a.mul(&self.polytabloids)? != image {
            return Err(Error::InconsistentAction(p.to_string()));
        }
        Ok(a)
    }

    /// Matrix of `p` on `S^λ` in the standard polytabloid basis.
    pub fn specht_matrix(&self, p: &Perm) -> Result<BitMat> {
        Ok(self.specht_action_rows(p)?.transpose())
    }

    /// Matrix of `p` on `D^λ`. Coordinates of `D^λ` are the non-pivot
    /// coordinates of the canonical radical basis.
    pub fn irreducible_matrix(&self, p: &Perm) -> Result<BitMat> {
        let rows = self.specht_action_rows(p)?;
        let free = self.quotient_coordinates();
        let mut m = BitMat::zeros(free.len(), free.len());
        for (c, &j) in free.iter().enumerate() {
            // Image of e_j is row j of A; reduce it to the section.
            let mut v = rows.row(j);
            self.radical.reduce_in_place(&mut v);
            for (r, &i) in free.iter().enumerate() {
                if v.get(i) {
                    m.set(r, c, true);
                }
            }
        }
        Ok(m)
    }

    fn quotient_coordinates(&self) -> Vec<usize> {
        let piv = self.radical.pivots();
        (0..self.specht_dim())
            .filter(|j| !piv.contains(j))
            .collect()
    }

    /// `D^λ` with the given generators.
    pub fn quotient_rep(&self, gens: &[Perm], kind: GroupKind) -> Result<GroupRep> {
        let d = self.irreducible_dim();
        if d == 0 {
            return Err(Error::ZeroQuotient(self.shape.to_string()));
        }
        let mats = gens
            .iter()
            .map(|g| {
                if g.degree() != self.shape.n() {
                    return Err(Error::DimensionMismatch(format!(
                        "generator {g} has degree {}, shape {} needs {}",
                        g.degree(),
                        self.shape,
                        self.shape.n()
                    )));
                }
                self.irreducible_matrix(g)
            })
            .collect::<Result<Vec<_>>>()?;
        let labels = match kind.standard_labels() {
            Some(l) if l.len() == gens.len() => l,
            _ => gens.iter().map(ToString::to_string).collect(),
        };
        GroupRep::new(d, kind, labels, mats)
    }
}

/// `D^λ` as a representation with the given permutation generators.
pub fn irreducible_quotient(
    shape: TwoRowShape,
    gens: &[Perm],
    kind: GroupKind,
) -> Result<GroupRep> {
    SpechtData::new(shape)?.quotient_rep(gens, kind)
}

/// The spin module of `Σ_n` on its Coxeter generators: `D^{(m+1,m)}` of
/// degree `2^m` for `n = 2m+1`, `D^{(m+1,m-1)}` of degree `2^{m-1}` for
/// `n = 2m`.
pub fn spin_rep(n: usize) -> Result<GroupRep> {
    let shape = TwoRowShape::spin(n)?;
    irreducible_quotient(shape, &coxeter_gens(n)?, GroupKind::Symmetric(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_of_tabloids() {
        let idx = enumerate_tabloids(TwoRowShape::new(2, 1).unwrap());
        assert_eq!(idx.len(), 3);
        assert_eq!(
            (0..3).map(|i| idx.second_row(i)).collect::<Vec<_>>(),
            [[1], [2], [3]]
        );
        let idx = enumerate_tabloids(TwoRowShape::new(3, 2).unwrap());
        assert_eq!(idx.second_row(0), [1, 2]);
        assert_eq!(idx.second_row(1), [1, 3]);
        assert_eq!(idx.second_row(9), [4, 5]);
    }

    #[test]
    fn shape_validation() {
        assert!(TwoRowShape::new(2, 2).is_err());
        assert!(TwoRowShape::new(3, 0).is_err());
        assert_eq!(
            TwoRowShape::spin(7).unwrap(),
            TwoRowShape::new(4, 3).unwrap()
        );
        assert_eq!(
            TwoRowShape::spin(6).unwrap(),
            TwoRowShape::new(4, 2).unwrap()
        );
        assert!(TwoRowShape::spin(2).is_err());
    }

    #[test]
    fn polytabloid_of_small_tableau() {
        let shape = TwoRowShape::new(2, 1).unwrap();
        let idx = enumerate_tabloids(shape);
        let t = Tableau {
            first: vec![1, 3],
            second: vec![2],
        };
        // tabloids {2} and {1}
        assert_eq!(polytabloid(&idx, &t).unwrap(), "110".parse().unwrap());
        let bad = Tableau {
            first: vec![1, 1],
            second: vec![2],
        };
        assert!(polytabloid(&idx, &bad).is_err());
    }

    #[test]
    fn identity_acts_trivially() {
        let shape = TwoRowShape::new(3, 2).unwrap();
        let idx = enumerate_tabloids(shape);
        assert!(tabloid_perm_matrix(&idx, &Perm::identity(5))
            .unwrap()
            .is_identity());
        assert!(tabloid_perm_matrix(&idx, &Perm::identity(4)).is_err());
    }

    #[test]
    fn small_spin_degrees() {
        assert_eq!(spin_rep(3).unwrap().degree(), 2);
        assert_eq!(spin_rep(4).unwrap().degree(), 2);
        assert_eq!(spin_rep(5).unwrap().degree(), 4);
        assert_eq!(spin_rep(6).unwrap().degree(), 4);
        assert!(spin_rep(2).is_err());
    }
}
