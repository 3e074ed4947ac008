//! Quadratic forms over GF(2): evaluation, invariance, Witt index, singular
//! vectors, and construction of invariant forms on a representation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitMat, BitVec, Echelon, Subspace};
use crate::meataxe::{dual_rep, hom_space};
use crate::rep::GroupRep;

/// `Q(v) = Σ_{i≤j} B_ij v_i v_j` with `B` upper triangular; the polarization
/// `F = B + Bᵀ` is derived from `B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "QuadFormJson", into = "QuadFormJson")]
pub struct QuadForm {
    b: BitMat,
    f: BitMat,
}

#[derive(Serialize, Deserialize)]
struct QuadFormJson {
    dim: usize,
    rows: Vec<String>,
}

impl TryFrom<QuadFormJson> for QuadForm {
    type Error = Error;

    fn try_from(j: QuadFormJson) -> Result<Self> {
        if j.rows.len() != j.dim {
            return Err(Error::Parse(format!(
                "form of dim {} has {} rows",
                j.dim,
                j.rows.len()
            )));
        }
        QuadForm::new(BitMat::from_row_strings(j.dim, &j.rows)?)
    }
}

impl From<QuadForm> for QuadFormJson {
    fn from(q: QuadForm) -> Self {
        QuadFormJson {
            dim: q.dim(),
            rows: q.b.row_strings(),
        }
    }
}

fn upper_part(m: &BitMat) -> BitMat {
    let mut u = m.clone();
    for r in 0..m.n_rows() {
        for c in 0..r.min(m.n_cols()) {
            u.set(r, c, false);
        }
    }
    u
}

impl QuadForm {
    /// Rejects matrices with entries below the diagonal.
    pub fn new(b: BitMat) -> Result<Self> {
        if !b.is_square() {
            return Err(Error::DimensionMismatch(
                "quadratic form matrix must be square".into(),
            ));
        }
        if upper_part(&b) != b {
            return Err(Error::InvalidArgument(
                "quadratic form matrix must be upper triangular".into(),
            ));
        }
        let f = b.add(&b.transpose())?;
        Ok(Self { b, f })
    }

    /// The form with polarization `f` (alternating) and diagonal `diag`.
    pub fn from_polar(f: &BitMat, diag: &BitVec) -> Result<Self> {
        if !f.is_square() || f.n_rows() != diag.len() {
            return Err(Error::DimensionMismatch(
                "polar matrix and diagonal disagree".into(),
            ));
        }
        if *f != f.transpose() || (0..f.n_rows()).any(|i| f.get(i, i)) {
            return Err(Error::InvalidArgument(
                "polarization must be alternating".into(),
            ));
        }
        let mut b = upper_part(f);
        for i in diag.iter_ones() {
            b.set(i, i, true);
        }
        Self::new(b)
    }

    /// Orthogonal sum of `r` hyperbolic planes `x_{2i} x_{2i+1}`.
    #[must_use]
    pub fn hyperbolic(r: usize) -> Self {
        let mut b = BitMat::zeros(2 * r, 2 * r);
        for i in 0..r {
            b.set(2 * i, 2 * i + 1, true);
        }
        Self::new(b).expect("upper triangular")
    }

    /// The anisotropic plane `x² + xy + y²`.
    #[must_use]
    pub fn anisotropic_plane() -> Self {
        Self::new(BitMat::from_row_strings(2, &["11", "01"]).unwrap()).unwrap()
    }

    /// Block-diagonal orthogonal sum.
    #[must_use]
    pub fn orthogonal_sum(&self, other: &QuadForm) -> QuadForm {
        let (d1, d2) = (self.dim(), other.dim());
        let mut b = BitMat::zeros(d1 + d2, d1 + d2);
        for r in 0..d1 {
            for c in self.b.row(r).iter_ones() {
                b.set(r, c, true);
            }
        }
        for r in 0..d2 {
            for c in other.b.row(r).iter_ones() {
                b.set(d1 + r, d1 + c, true);
            }
        }
        Self::new(b).expect("upper triangular")
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.b.n_rows()
    }

    #[must_use]
    pub fn upper(&self) -> &BitMat {
        &self.b
    }

    #[must_use]
    pub fn polar(&self) -> &BitMat {
        &self.f
    }

    fn check_len(&self, v: &BitVec) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for a form of dimension {}",
                v.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    pub fn eval_q(&self, v: &BitVec) -> Result<bool> {
        self.check_len(v)?;
        Ok(self.b.mul_vec(v)?.dot(v))
    }

    pub fn eval_f(&self, u: &BitVec, w: &BitVec) -> Result<bool> {
        self.check_len(u)?;
        self.check_len(w)?;
        self.f.bilinear(u, w)
    }

    #[must_use]
    pub fn is_nondegenerate(&self) -> bool {
        self.f.is_invertible()
    }

    /// `Q(G v) = Q(v)` for all `v`: the polarization is preserved and `Q` agrees
    /// on the images of basis vectors.
    pub fn is_invariant_under(&self, g: &BitMat) -> Result<bool> {
        if g.n_rows() != self.dim() || g.n_cols() != self.dim() {
            return Err(Error::DimensionMismatch(
                "generator does not match form dimension".into(),
            ));
        }
        if g.transpose().mul(&self.f)?.mul(g)? != self.f {
            return Ok(false);
        }
        for i in 0..self.dim() {
            if self.eval_q(&g.column(i))? != self.b.get(i, i) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_subspace(&self, w: &Subspace) -> Result<()> {
        if w.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "subspace of ambient dimension {} for a form of dimension {}",
                w.ambient_dim(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// `f` vanishes on every pair of basis vectors.
    pub fn is_totally_isotropic(&self, w: &Subspace) -> Result<bool> {
        self.check_subspace(w)?;
        let rows: Vec<BitVec> = w.basis().rows().collect();
        for (i, u) in rows.iter().enumerate() {
            let fu = self.f.mul_vec(u)?;
            if rows[i + 1..].iter().any(|v| fu.dot(v)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Q` vanishes on the basis and `f` on basis pairs, hence on all of `W`.
    pub fn is_totally_singular(&self, w: &Subspace) -> Result<bool> {
        self.check_subspace(w)?;
        for u in w.basis().rows() {
            if self.eval_q(&u)? {
                return Ok(false);
            }
        }
        self.is_totally_isotropic(w)
    }

    /// `W^⊥` with respect to the polarization.
    pub fn perp(&self, w: &Subspace) -> Result<Subspace> {
        self.check_subspace(w)?;
        let rows = w
            .basis()
            .rows()
            .map(|u| self.f.mul_vec(&u))
            .collect::<Result<Vec<_>>>()?;
        Ok(BitMat::from_rows(self.dim(), &rows)?.kernel())
    }

    /// First nonzero singular vector among the nonzero combinations of the
    /// first three spanning vectors (a 3-dimensional quadratic space over
    /// GF(2) always has one), or of all of them if fewer remain.
    fn find_singular(&self, span: &[BitVec]) -> Result<Option<BitVec>> {
        let window = &span[..span.len().min(3)];
        for mask in 1u32..1 << window.len() {
            let mut v = BitVec::zeros(self.dim());
            for (i, w) in window.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v.xor_assign(w);
                }
            }
            if !self.eval_q(&v)? {
                return Ok(Some(v));
            }
        }
        Ok(None)
    }

    /// Witt index by repeatedly splitting off hyperbolic planes.
    pub fn witt_index(&self) -> Result<usize> {
        if !self.is_nondegenerate() {
            return Err(Error::Degenerate);
        }
        let d = self.dim();
        let mut span: Vec<BitVec> = (0..d).map(|i| BitVec::unit(d, i)).collect();
        let mut index = 0;
        while !span.is_empty() {
            let Some(u) = self.find_singular(&span)? else {
                break;
            };
            let fu = self.f.mul_vec(&u)?;
            let z = span
                .iter()
                .find(|w| fu.dot(w))
                .cloned()
                .ok_or(Error::Degenerate)?;
            let z = if self.eval_q(&z)? { z.xor(&u) } else { z };
            let fz = self.f.mul_vec(&z)?;
            let mut ech = Echelon::new(d);
            for w in &span {
                let mut p = w.clone();
                if fz.dot(w) {
                    p.xor_assign(&u);
                }
                if fu.dot(w) {
                    p.xor_assign(&z);
                }
                ech.insert(p);
            }
            span = ech.to_subspace().basis().rows().collect();
            index += 1;
        }
        Ok(index)
    }

    /// Number of nonzero singular vectors, by exhaustive Gray-code walk.
    pub fn count_singular(&self) -> Result<u64> {
        let d = self.dim();
        if d > 24 {
            return Err(Error::TooLarge(d));
        }
        let f_rows: Vec<u64> = (0..d).map(|i| self.f.row(i).to_u64()).collect();
        let diag: Vec<bool> = (0..d).map(|i| self.b.get(i, i)).collect();
        let (mut v, mut q, mut count) = (0u64, false, 0u64);
        for k in 1u64..1 << d {
            let i = k.trailing_zeros() as usize;
            q ^= diag[i] ^ ((f_rows[i] & v).count_ones() & 1 == 1);
            v ^= 1 << i;
            if !q {
                count += 1;
            }
        }
        Ok(count)
    }
}

/// Basis of all quadratic forms invariant under every generator.
///
/// Invariant alternating forms are the symmetric zero-diagonal elements of
/// `Hom_G(V, V*)`. A form is then a pair (alternating `F`, diagonal `δ`), and
/// `Q(g e_i) = Q(e_i)` is linear in the pair, which fixes the solution space.
pub fn invariant_quadratic_space(rep: &GroupRep) -> Result<Vec<QuadForm>> {
    let d = rep.degree();
    let hom = hom_space(rep, &dual_rep(rep)?)?;

    // Coefficient combinations giving alternating forms.
    let mut constraint = BitMat::zeros(d * d, hom.dim());
    for (k, x) in hom.basis().iter().enumerate() {
        let sym = x.add(&x.transpose())?;
        for r in 0..d {
            for c in sym.row(r).iter_ones().filter(|&c| c > r) {
                constraint.set(r * d + c, k, true);
            }
            if x.get(r, r) {
                constraint.set(r * d + r, k, true);
            }
        }
    }
    let alternating: Vec<BitMat> = constraint
        .kernel()
        .basis()
        .rows()
        .map(|c| hom.element(&c))
        .collect();
    let uppers: Vec<BitMat> = alternating.iter().map(upper_part).collect();

    let a = alternating.len();
    let mut eqs = Echelon::new(a + d);
    for g in rep.generators() {
        for i in 0..d {
            let col = g.column(i);
            let mut row = BitVec::zeros(a + d);
            for (l, u) in uppers.iter().enumerate() {
                if u.mul_vec(&col)?.dot(&col) {
                    row.flip(l);
                }
            }
            for j in col.iter_ones() {
                row.flip(a + j);
            }
            row.flip(a + i);
            eqs.insert(row);
        }
    }
    eqs.to_matrix()
        .kernel()
        .basis()
        .rows()
        .map(|sol| {
            let mut f = BitMat::zeros(d, d);
            for l in sol.iter_ones().filter(|&l| l < a) {
                f = f.add(&alternating[l])?;
            }
            QuadForm::from_polar(&f, &sol.slice(a, d))
        })
        .collect()
}

/// Dense route: every entry of `B` is an unknown, with equations from
/// `GᵀFG = F` and `Q(g e_i) = Q(e_i)`. Quadratic in the dimension, so only
/// suitable for small modules.
pub fn invariant_quadratic_space_dense(rep: &GroupRep) -> Result<Vec<QuadForm>> {
    let d = rep.degree();
    if d > 32 {
        return Err(Error::TooLarge(d));
    }
    let idx = |j: usize, k: usize| j * d + k - j * (j + 1) / 2;
    let unknowns = d * (d + 1) / 2;
    let mut eqs = Echelon::new(unknowns);
    for g in rep.generators() {
        let cols: Vec<BitVec> = (0..d).map(|i| g.column(i)).collect();
        for r in 0..d {
            for s in r + 1..d {
                let mut row = BitVec::zeros(unknowns);
                for j in 0..d {
                    for k in j + 1..d {
                        let term = (g.get(j, r) && g.get(k, s)) ^ (g.get(k, r) && g.get(j, s));
                        if term {
                            row.flip(idx(j, k));
                        }
                    }
                }
                row.flip(idx(r, s));
                eqs.insert(row);
            }
        }
        for (i, c) in cols.iter().enumerate() {
            let mut row = BitVec::zeros(unknowns);
            let ones: Vec<usize> = c.iter_ones().collect();
            for (p, &j) in ones.iter().enumerate() {
                for &k in &ones[p..] {
                    row.flip(idx(j, k));
                }
            }
            row.flip(idx(i, i));
            eqs.insert(row);
        }
    }
    eqs.to_matrix()
        .kernel()
        .basis()
        .rows()
        .map(|sol| {
            let mut b = BitMat::zeros(d, d);
            for j in 0..d {
                for k in j..d {
                    b.set(j, k, sol.get(idx(j, k)));
                }
            }
            QuadForm::new(b)
        })
        .collect()
}

fn first_nondegenerate(space: &[QuadForm], d: usize) -> Result<Option<QuadForm>> {
    if space.len() > 20 {
        return Err(Error::TooLarge(space.len()));
    }
    for mask in 1u64..1 << space.len() {
        let mut b = BitMat::zeros(d, d);
        for (i, q) in space.iter().enumerate() {
            if mask >> i & 1 == 1 {
                b = b.add(q.upper())?;
            }
        }
        let q = QuadForm::new(b)?;
        if q.is_nondegenerate() {
            return Ok(Some(q));
        }
    }
    Ok(None)
}

/// A non-degenerate invariant quadratic form, if one exists: the first
/// nonzero combination of the solution basis with invertible polarization.
pub fn invariant_quadratic(rep: &GroupRep) -> Result<Option<QuadForm>> {
    first_nondegenerate(&invariant_quadratic_space(rep)?, rep.degree())
}

/// [`invariant_quadratic`] via the dense system.
pub fn invariant_quadratic_dense(rep: &GroupRep) -> Result<Option<QuadForm>> {
    first_nondegenerate(&invariant_quadratic_space_dense(rep)?, rep.degree())
}

/// Whether `D^{(a,b)}` carries a non-degenerate invariant quadratic form:
/// it fails exactly when `b = 2^r` and `a + b ≡ k (mod 2^{r+2})` for some
/// `3·2^r - 1 <= k <= 4·2^r - 2`.
pub fn is_quadratic_type_tworow(a: usize, b: usize) -> Result<bool> {
    if b == 0 || a <= b {
        return Err(Error::InvalidArgument(format!(
            "({a},{b}) is not a 2-regular two-part partition"
        )));
    }
    if !b.is_power_of_two() {
        return Ok(true);
    }
    let k = (a + b) % (4 * b);
    Ok(!(3 * b - 1..=4 * b - 2).contains(&k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperbolic_plane_values() {
        let q = QuadForm::hyperbolic(1);
        let v = |s: &str| s.parse::<BitVec>().unwrap();
        assert!(!q.eval_q(&v("00")).unwrap());
        assert!(!q.eval_q(&v("10")).unwrap());
        assert!(!q.eval_q(&v("01")).unwrap());
        assert!(q.eval_q(&v("11")).unwrap());
        assert_eq!(q.count_singular().unwrap(), 2);
        assert_eq!(q.witt_index().unwrap(), 1);
    }

    #[test]
    fn anisotropic_plane() {
        let q = QuadForm::anisotropic_plane();
        assert_eq!(q.count_singular().unwrap(), 0);
        assert_eq!(q.witt_index().unwrap(), 0);
    }

    #[test]
    fn rejects_lower_entries() {
        assert!(QuadForm::new(BitMat::from_row_strings(2, &["00", "10"]).unwrap()).is_err());
    }

    #[test]
    fn witt_index_of_sums() {
        let minus = QuadForm::hyperbolic(2).orthogonal_sum(&QuadForm::anisotropic_plane());
        assert_eq!(minus.witt_index().unwrap(), 2);
        let two_aniso =
            QuadForm::anisotropic_plane().orthogonal_sum(&QuadForm::anisotropic_plane());
        assert_eq!(two_aniso.witt_index().unwrap(), 2);
    }

    #[test]
    fn degenerate_form_rejected() {
        let q = QuadForm::new(BitMat::from_row_strings(2, &["10", "00"]).unwrap()).unwrap();
        assert!(matches!(q.witt_index(), Err(Error::Degenerate)));
    }

    #[test]
    fn perp_of_hyperbolic_line() {
        let q = QuadForm::hyperbolic(2);
        let w = Subspace::from_vectors(4, &["1000".parse().unwrap()]).unwrap();
        let p = q.perp(&w).unwrap();
        assert_eq!(p.dim(), 3);
        assert!(w.is_subspace_of(&p).unwrap());
        assert!(q.is_totally_singular(&w).unwrap());
        assert!(q.is_totally_singular(&Subspace::zero(4)).unwrap());
    }

    #[test]
    fn quadratic_type_examples() {
        assert!(!is_quadratic_type_tworow(3, 2).unwrap());
        assert!(!is_quadratic_type_tworow(4, 2).unwrap());
        assert!(is_quadratic_type_tworow(4, 3).unwrap());
        assert!(is_quadratic_type_tworow(5, 3).unwrap());
        assert!(is_quadratic_type_tworow(2, 2).is_err());
    }

    #[test]
    fn json_round_trip() {
        let q = QuadForm::hyperbolic(2);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"dim":4,"rows":["0100","0000","0001","0000"]}"#);
        assert_eq!(serde_json::from_str::<QuadForm>(&s).unwrap(), q);
    }
}
