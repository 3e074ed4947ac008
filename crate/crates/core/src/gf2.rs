//! Dense bit-packed linear algebra over GF(2).
//!
//! Vectors pack coordinate `i` into bit `i % 64` of word `i / 64`; padding
//! bits past the logical length are always zero, so equality and hashing work
//! directly on the words. Matrices act on column vectors (`v ↦ A·v`) while
//! subspace bases are stored as rows in reduced row-echelon form.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn word_count(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

#[inline]
fn tail_mask(bits: usize) -> u64 {
    match bits % WORD_BITS {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

#[inline]
fn xor_words(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

#[inline]
fn parity_of_and(a: &[u64], b: &[u64]) -> bool {
    let mut acc = 0u64;
    for (x, y) in a.iter().zip(b) {
        acc ^= x & y;
    }
    acc.count_ones() & 1 == 1
}

// Lexicographic order of the 0/1 strings (coordinate 0 first).
fn cmp_bits_lex(a: &[u64], b: &[u64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let diff = x ^ y;
        if diff != 0 {
            let bit = diff.trailing_zeros();
            return if (x >> bit) & 1 == 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
    }
    Ordering::Equal
}

/// A vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; word_count(len)],
        }
    }

    /// The standard basis vector `e_i`.
    #[must_use]
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    #[must_use]
    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector from packed words, clearing any padding bits.
    #[must_use]
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(word_count(len), 0);
        if let Some(last) = words.last_mut() {
            *last &= tail_mask(len);
        }
        Self { len, words }
    }

    /// Low `len` bits of an integer, bit `i` giving coordinate `i`.
    #[must_use]
    pub fn from_u64(len: usize, bits: u64) -> Self {
        Self::from_words(len, vec![bits])
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit index {i} out of range (len={})",
            self.len
        );
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "bit index {i} out of range (len={})",
            self.len
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len,
            "bit index {i} out of range (len={})",
            self.len
        );
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    #[must_use]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The vector as an integer; only meaningful for `len <= 64`.
    #[must_use]
    pub fn to_u64(&self) -> u64 {
        assert!(self.len <= WORD_BITS);
        self.words.first().copied().unwrap_or(0)
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[must_use]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the first set coordinate.
    #[must_use]
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD_BITS + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * WORD_BITS + bit)
                }
            })
        })
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "vector length mismatch");
        xor_words(&mut self.words, &other.words);
    }

    #[must_use]
    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// The standard dot product `Σ u_i v_i`.
    #[must_use]
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "vector length mismatch");
        parity_of_and(&self.words, &other.words)
    }

    /// Lexicographic comparison of the 0/1 strings.
    #[must_use]
    pub fn cmp_lex(&self, other: &BitVec) -> Ordering {
        cmp_bits_lex(&self.words, &other.words).then(self.len.cmp(&other.len))
    }

    /// Concatenation `[self | other]`.
    #[must_use]
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Coordinates `start..start + len` as a new vector.
    #[must_use]
    pub fn slice(&self, start: usize, len: usize) -> BitVec {
        assert!(start + len <= self.len);
        let mut out = BitVec::zeros(len);
        for i in 0..len {
            if self.get(start + i) {
                out.set(i, true);
            }
        }
        out
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

impl FromStr for BitVec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut v = BitVec::zeros(s.len());
        for (i, c) in s.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => v.set(i, true),
                _ => {
                    return Err(Error::Parse(format!(
                        "bit string contains {:?} at position {i}",
                        c as char
                    )))
                }
            }
        }
        Ok(v)
    }
}

/// A dense matrix over GF(2), stored row-major with a fixed word stride.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMat {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

/// Output of [`BitMat::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    /// Reduced row-echelon form; zero rows sit below the `rank` pivot rows.
    pub matrix: BitMat,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows, strictly increasing.
    pub pivots: Vec<usize>,
}

impl BitMat {
    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = word_count(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Stacks row vectors; all rows must have length `cols`.
    pub fn from_rows<'a, I>(cols: usize, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a BitVec>,
    {
        let mut m = Self::zeros(0, cols);
        for r in rows {
            m.push_row(r)?;
        }
        Ok(m)
    }

    /// Parses rows given as '0'/'1' strings.
    pub fn from_row_strings<S: AsRef<str>>(cols: usize, rows: &[S]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|s| s.as_ref().parse::<BitVec>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(cols, &parsed)
    }

    pub fn push_row(&mut self, row: &BitVec) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} pushed into matrix with {} columns",
                row.len(),
                self.cols
            )));
        }
        self.data.extend_from_slice(&row.words);
        self.rows += 1;
        Ok(())
    }

    #[must_use]
    pub fn n_rows(&self) -> usize {
        self.rows
    }

    #[must_use]
    pub fn n_cols(&self) -> usize {
        self.cols
    }

    #[must_use]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    #[must_use]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        (self.data[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of range"
        );
        let mask = 1u64 << (c % WORD_BITS);
        let w = &mut self.data[r * self.stride + c / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, r: usize, c: usize) {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of range"
        );
        self.data[r * self.stride + c / WORD_BITS] ^= 1u64 << (c % WORD_BITS);
    }

    #[inline]
    #[must_use]
    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[must_use]
    pub fn row(&self, r: usize) -> BitVec {
        BitVec {
            len: self.cols,
            words: self.row_words(r).to_vec(),
        }
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = BitVec> + '_ {
        (0..self.rows).map(|r| self.row(r))
    }

    /// Overwrites row `r`.
    pub fn set_row(&mut self, r: usize, row: &BitVec) {
        assert_eq!(row.len(), self.cols);
        self.row_words_mut(r).copy_from_slice(&row.words);
    }

    /// `row[dst] ^= row[src]`.
    pub fn xor_row(&mut self, dst: usize, src: usize) {
        if dst == src {
            self.row_words_mut(dst).fill(0);
            return;
        }
        let s = self.stride;
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&mut lo[dst * s..(dst + 1) * s], &hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&mut hi[..s], &lo[src * s..(src + 1) * s])
        };
        xor_words(a, b);
    }

    /// Column `c` as a vector.
    #[must_use]
    pub fn column(&self, c: usize) -> BitVec {
        let mut v = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    #[must_use]
    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == BitMat::identity(self.rows)
    }

    #[must_use]
    pub fn transpose(&self) -> BitMat {
        let mut t = BitMat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for (k, &w) in self.row_words(r).iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let c = k * WORD_BITS + w.trailing_zeros() as usize;
                    w &= w - 1;
                    t.data[c * t.stride + r / WORD_BITS] |= 1u64 << (r % WORD_BITS);
                }
            }
        }
        t
    }

    /// `self + other` (entrywise XOR).
    pub fn add(&self, other: &BitMat) -> Result<BitMat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        xor_words(&mut out.data, &other.data);
        Ok(out)
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &BitMat) -> Result<BitMat> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = BitMat::zeros(self.rows, other.cols);
        let os = out.stride;
        for r in 0..self.rows {
            let dst = &mut out.data[r * os..(r + 1) * os];
            for (k, &w) in self.row_words(r).iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let j = k * WORD_BITS + w.trailing_zeros() as usize;
                    w &= w - 1;
                    xor_words(dst, other.row_words(j));
                }
            }
        }
        Ok(out)
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if parity_of_and(self.row_words(r), &v.words) {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    /// `vᵀ · self` for a row vector `v`.
    pub fn vec_mul(&self, v: &BitVec) -> Result<BitVec> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        let mut out = BitVec::zeros(self.cols);
        for r in v.iter_ones() {
            xor_words(&mut out.words, self.row_words(r));
        }
        Ok(out)
    }

    /// `uᵀ · self · w`.
    pub fn bilinear(&self, u: &BitVec, w: &BitVec) -> Result<bool> {
        Ok(self.vec_mul(u)?.dot(w))
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &BitMat) -> Result<BitMat> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns on {} columns",
                self.cols, other.cols
            )));
        }
        let mut out = self.clone();
        out.data.extend_from_slice(&other.data);
        out.rows += other.rows;
        Ok(out)
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &BitMat) -> Result<BitMat> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot place {} rows beside {} rows",
                self.rows, other.rows
            )));
        }
        let mut out = BitMat::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in self.row(r).iter_ones() {
                out.set(r, c, true);
            }
            for c in other.row(r).iter_ones() {
                out.set(r, self.cols + c, true);
            }
        }
        Ok(out)
    }

    /// The submatrix formed by the listed columns, in the given order.
    #[must_use]
    pub fn select_columns(&self, cols: &[usize]) -> BitMat {
        let mut out = BitMat::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                if self.get(r, c) {
                    out.set(r, k, true);
                }
            }
        }
        out
    }

    /// Gauss-Jordan elimination to reduced row-echelon form.
    #[must_use]
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        let s = m.stride;
        let mut pivot_row = vec![0u64; s];
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let wi = c / WORD_BITS;
            let mask = 1u64 << (c % WORD_BITS);
            let Some(p) = (rank..m.rows).find(|&r| m.data[r * s + wi] & mask != 0) else {
                continue;
            };
            if p != rank {
                for k in 0..s {
                    m.data.swap(p * s + k, rank * s + k);
                }
            }
            // Rows at or below `rank` are zero left of column c, so the
            // pivot row only needs XOR-ing from word `wi` on.
            pivot_row[wi..].copy_from_slice(&m.data[rank * s + wi..(rank + 1) * s]);
            for r in 0..m.rows {
                if r != rank && m.data[r * s + wi] & mask != 0 {
                    xor_words(&mut m.data[r * s + wi..(r + 1) * s], &pivot_row[wi..]);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        Rref {
            matrix: m,
            rank,
            pivots,
        }
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Right kernel `{x : self · x = 0}`.
    #[must_use]
    pub fn kernel(&self) -> Subspace {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = BitVec::unit(self.cols, f);
            for (i, &p) in pivots.iter().enumerate() {
                if matrix.get(i, f) {
                    x.set(p, true);
                }
            }
            basis.push(x);
        }
        Subspace::from_vectors(self.cols, &basis).expect("kernel vectors have the ambient length")
    }

    /// Some `x` with `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &BitVec) -> Result<Option<BitVec>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} equations",
                b.len(),
                self.rows
            )));
        }
        let mut aug = BitMat::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in self.row(r).iter_ones() {
                aug.set(r, c, true);
            }
            if b.get(r) {
                aug.set(r, self.cols, true);
            }
        }
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = BitVec::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            if matrix.get(i, self.cols) {
                x.set(p, true);
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<BitMat> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = self.hstack(&BitMat::identity(n))?;
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let right: Vec<usize> = (n..2 * n).collect();
        Ok(matrix.select_columns(&right))
    }

    #[must_use]
    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Row bit-strings, coordinate 0 first.
    #[must_use]
    pub fn row_strings(&self) -> Vec<String> {
        self.rows().map(|r| r.to_string()).collect()
    }
}

impl fmt::Debug for BitMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row(r))?;
        }
        write!(f, "]")
    }
}

/// A subspace of `GF(2)^n`, held by its canonical RREF basis.
///
/// Two subspaces are equal exactly when their bases are bit-identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: BitMat,
    pivots: Vec<usize>,
}

impl Subspace {
    #[must_use]
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: BitMat::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    #[must_use]
    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: BitMat::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of `m`.
    #[must_use]
    pub fn row_space(m: &BitMat) -> Self {
        let Rref {
            matrix,
            rank,
            pivots,
        } = m.rref();
        let mut basis = BitMat::zeros(0, m.n_cols());
        basis
            .data
            .extend_from_slice(&matrix.data[..rank * matrix.stride]);
        basis.rows = rank;
        Self {
            ambient: m.n_cols(),
            basis,
            pivots,
        }
    }

    /// Column space (image) of `m`.
    #[must_use]
    pub fn column_space(m: &BitMat) -> Self {
        Self::row_space(&m.transpose())
    }

    /// Span of the given vectors.
    pub fn from_vectors(ambient: usize, vectors: &[BitVec]) -> Result<Self> {
        Ok(Self::row_space(&BitMat::from_rows(ambient, vectors)?))
    }

    #[must_use]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.basis.n_rows()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    #[must_use]
    pub fn basis(&self) -> &BitMat {
        &self.basis
    }

    #[must_use]
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.ambient != n {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {n} differ",
                self.ambient
            )));
        }
        Ok(())
    }

    /// Reduces `v` modulo the subspace to the representative that vanishes
    /// at every pivot column; zero iff `v` lies in the subspace.
    pub fn reduce_in_place(&self, v: &mut BitVec) {
        for (i, &p) in self.pivots.iter().enumerate() {
            if v.get(p) {
                xor_words(&mut v.words, self.basis.row_words(i));
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> Result<bool> {
        self.check_ambient(v.len())?;
        let mut w = v.clone();
        self.reduce_in_place(&mut w);
        Ok(w.is_zero())
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies in
    /// the subspace. These are simply the entries of `v` at the pivot columns.
    pub fn coordinates(&self, v: &BitVec) -> Result<Option<BitVec>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        let mut c = BitVec::zeros(self.dim());
        for (i, &p) in self.pivots.iter().enumerate() {
            if v.get(p) {
                c.set(i, true);
            }
        }
        Ok(Some(c))
    }

    /// The vector with the given basis coordinates.
    #[must_use]
    pub fn combine(&self, coords: &BitVec) -> BitVec {
        self.basis
            .vec_mul(coords)
            .expect("coordinate length equals dimension")
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// Intersection by the Zassenhaus block elimination
    /// `[[U, U], [W, 0]]`: rows with zero left half span `U ∩ W`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        let n = self.ambient;
        let mut block = BitMat::zeros(self.dim() + other.dim(), 2 * n);
        for (r, u) in self.basis.rows().enumerate() {
            for c in u.iter_ones() {
                block.set(r, c, true);
                block.set(r, n + c, true);
            }
        }
        for (r, w) in other.basis.rows().enumerate() {
            for c in w.iter_ones() {
                block.set(self.dim() + r, c, true);
            }
        }
        let Rref { matrix, pivots, .. } = block.rref();
        let right: Vec<BitVec> = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(i, _)| matrix.row(i).slice(n, n))
            .collect();
        Subspace::from_vectors(n, &right)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        for r in self.basis.rows() {
            if !other.contains(&r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image `{G·w : w ∈ W}` under a linear map.
    pub fn image_under(&self, g: &BitMat) -> Result<Subspace> {
        if g.n_cols() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "map with {} columns applied to subspace of ambient dimension {}",
                g.n_cols(),
                self.ambient
            )));
        }
        // Rows of basis·Gᵀ are the images of the basis vectors.
        Ok(Subspace::row_space(&self.basis.mul(&g.transpose())?))
    }

    /// All `2^dim` vectors of the subspace; intended for small dimensions.
    pub fn vectors(&self) -> impl Iterator<Item = BitVec> + '_ {
        assert!(self.dim() < 32, "subspace too large to enumerate");
        (0u64..1 << self.dim()).map(move |k| self.combine(&BitVec::from_u64(self.dim(), k)))
    }

    /// Lexicographic comparison of canonical bases, row by row.
    #[must_use]
    pub fn cmp_lex(&self, other: &Subspace) -> Ordering {
        for (a, b) in self.basis.rows().zip(other.basis.rows()) {
            match a.cmp_lex(&b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.dim().cmp(&other.dim())
    }

    #[must_use]
    pub fn row_strings(&self) -> Vec<String> {
        self.basis.row_strings()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}: {:?})",
            self.dim(),
            self.ambient,
            self.row_strings()
        )
    }
}

/// Incrementally built echelon basis.
///
/// Each stored row is zero in the pivot positions of all earlier rows, so a
/// single pass in insertion order reduces any vector.
#[derive(Clone, Debug)]
pub struct Echelon {
    len: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Echelon {
    #[must_use]
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    #[must_use]
    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }

    pub fn reduce(&self, v: &mut BitVec) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                xor_words(&mut v.words, &row.words);
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        assert_eq!(v.len(), self.len);
        self.reduce(&mut v);
        match v.first_one() {
            Some(p) => {
                self.rows.push(v);
                self.pivots.push(p);
                true
            }
            None => false,
        }
    }

    #[must_use]
    pub fn contains(&self, v: &BitVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    #[must_use]
    pub fn to_matrix(&self) -> BitMat {
        BitMat::from_rows(self.len, &self.rows).expect("rows share the echelon length")
    }

    #[must_use]
    pub fn to_subspace(&self) -> Subspace {
        Subspace::row_space(&self.to_matrix())
    }
}
