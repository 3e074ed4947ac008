//! MeatAxe-style module operations: restriction, hom spaces, endomorphism
//! algebras, socle extraction, idempotent splitting, duality and Norton's
//! irreducibility test.

use crate::error::{Error, Result};
use crate::gf2::{BitMat, BitVec, Echelon, Subspace};
use crate::rep::{GroupKind, GroupRep};

/// A basis of `Hom_G(A, B)`: matrices `X` (`dim B × dim A`) with
/// `ρ_B(g) X = X ρ_A(g)` for every generator.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source_dim: usize,
    target_dim: usize,
    basis: Vec<BitMat>,
}

fn flatten(m: &BitMat) -> BitVec {
    let cols = m.n_cols();
    let mut v = BitVec::zeros(m.n_rows() * cols);
    for r in 0..m.n_rows() {
        for c in m.row(r).iter_ones() {
            v.set(r * cols + c, true);
        }
    }
    v
}

impl HomSpace {
    #[must_use]
    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    #[must_use]
    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    #[must_use]
    pub fn basis(&self) -> &[BitMat] {
        &self.basis
    }

    /// `Σ c_k X_k`.
    #[must_use]
    pub fn element(&self, coeffs: &BitVec) -> BitMat {
        let mut m = BitMat::zeros(self.target_dim, self.source_dim);
        for k in coeffs.iter_ones() {
            m = m.add(&self.basis[k]).expect("basis elements share a shape");
        }
        m
    }

    /// Coordinates of `x` in the basis, or `None` if `x` is not in the span.
    pub fn coordinates(&self, x: &BitMat) -> Result<Option<BitVec>> {
        if x.n_rows() != self.target_dim || x.n_cols() != self.source_dim {
            return Err(Error::DimensionMismatch(
                "matrix shape differs from hom space".into(),
            ));
        }
        if self.basis.is_empty() {
            return Ok(x.is_zero().then(|| BitVec::zeros(0)));
        }
        let flat: Vec<BitVec> = self.basis.iter().map(flatten).collect();
        let m = BitMat::from_rows(flat[0].len(), &flat)?;
        m.transpose().solve(&flatten(x))
    }

    /// All `2^dim` elements; call only for small dimensions.
    pub fn elements(&self) -> impl Iterator<Item = BitMat> + '_ {
        assert!(self.dim() <= 20, "hom space too large to enumerate");
        (0u64..1 << self.dim()).map(move |k| self.element(&BitVec::from_u64(self.dim(), k)))
    }
}

/// Generators given by words in `rep`'s generators.
pub fn rep_on_words(
    rep: &GroupRep,
    words: &[Vec<usize>],
    kind: GroupKind,
    labels: Vec<String>,
) -> Result<GroupRep> {
    let gens = words
        .iter()
        .map(|w| rep.eval_word(w))
        .collect::<Result<Vec<_>>>()?;
    GroupRep::new(rep.degree(), kind, labels, gens)
}

/// Restriction from `Σ_n` to `Σ_k` (the stabilizer of `k+1..n`), keeping the
/// first `k - 1` Coxeter generators.
pub fn restrict_symmetric(rep: &GroupRep, k: usize) -> Result<GroupRep> {
    let GroupKind::Symmetric(n) = rep.kind() else {
        return Err(Error::InvalidArgument(format!(
            "{} is not a symmetric group",
            rep.kind()
        )));
    };
    if k < 2 || k > n {
        return Err(Error::InvalidArgument(format!(
            "cannot restrict S{n} to S{k}"
        )));
    }
    let words: Vec<Vec<usize>> = (0..k - 1).map(|i| vec![i]).collect();
    rep_on_words(
        rep,
        &words,
        GroupKind::Symmetric(k),
        GroupKind::Symmetric(k).standard_labels().unwrap(),
    )
}

/// Restriction from `Σ_n` to `𝒜_n` via the words `s_1 s_i`.
pub fn restrict_to_alternating(rep: &GroupRep) -> Result<GroupRep> {
    let GroupKind::Symmetric(n) = rep.kind() else {
        return Err(Error::InvalidArgument(format!(
            "{} is not a symmetric group",
            rep.kind()
        )));
    };
    if n < 3 {
        return Err(Error::InvalidArgument(
            "alternating restriction needs n >= 3".into(),
        ));
    }
    let words: Vec<Vec<usize>> = (1..n - 1).map(|i| vec![0, i]).collect();
    let kind = GroupKind::Alternating(n);
    rep_on_words(rep, &words, kind, kind.standard_labels().unwrap())
}

/// Restriction from `𝒜_n` to `𝒜_k`, keeping the first `k - 2` generators.
pub fn restrict_alternating(rep: &GroupRep, k: usize) -> Result<GroupRep> {
    let GroupKind::Alternating(n) = rep.kind() else {
        return Err(Error::InvalidArgument(format!(
            "{} is not an alternating group",
            rep.kind()
        )));
    };
    if k < 3 || k > n {
        return Err(Error::InvalidArgument(format!(
            "cannot restrict A{n} to A{k}"
        )));
    }
    let words: Vec<Vec<usize>> = (0..k - 2).map(|i| vec![i]).collect();
    let kind = GroupKind::Alternating(k);
    rep_on_words(rep, &words, kind, kind.standard_labels().unwrap())
}

/// The smallest invariant subspace containing `seeds`.
pub fn spin(gens: &[BitMat], seeds: &[BitVec]) -> Result<Subspace> {
    let Some(first) = seeds.first() else {
        return Err(Error::InvalidArgument(
            "spin needs at least one seed".into(),
        ));
    };
    let d = first.len();
    let mut ech = Echelon::new(d);
    let mut queue: Vec<BitVec> = Vec::new();
    for s in seeds {
        if ech.insert(s.clone()) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if ech.is_full() {
            break;
        }
        for g in gens {
            let w = g.mul_vec(&v)?;
            if ech.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    Ok(ech.to_subspace())
}

fn check_same_generators(a: &GroupRep, b: &GroupRep) -> Result<()> {
    if a.labels() != b.labels() {
        return Err(Error::LabelMismatch(format!(
            "{:?} vs {:?}",
            a.labels(),
            b.labels()
        )));
    }
    Ok(())
}

/// `Hom_G(A, B)`.
///
/// The source is spun up from standard basis seeds, giving basis vectors
/// `b_i = w_i(ρ_A) v_{s(i)}`. An intertwiner is then fixed by the images
/// `y_s` of the seeds, via `X b_i = w_i(ρ_B) y_{s(i)}`, and the intertwining
/// condition on every `(b_i, g)` pair is a linear system in the `y_s` only.
pub fn hom_space(a: &GroupRep, b: &GroupRep) -> Result<HomSpace> {
    check_same_generators(a, b)?;
    let (da, db) = (a.degree(), b.degree());
    let ngens = a.n_generators();

    let mut ech = Echelon::new(da);
    let mut basis: Vec<BitVec> = Vec::with_capacity(da);
    let mut seed_of: Vec<usize> = Vec::with_capacity(da);
    let mut word_mats: Vec<BitMat> = Vec::with_capacity(da);
    let mut seeds = 0;
    for e in 0..da {
        if ech.is_full() {
            break;
        }
        let unit = BitVec::unit(da, e);
        if !ech.insert(unit.clone()) {
            continue;
        }
        basis.push(unit);
        seed_of.push(seeds);
        word_mats.push(BitMat::identity(db));
        let mut q = basis.len() - 1;
        while q < basis.len() {
            for g in 0..ngens {
                let w = a.generator(g).mul_vec(&basis[q])?;
                if ech.insert(w.clone()) {
                    basis.push(w);
                    seed_of.push(seed_of[q]);
                    word_mats.push(b.generator(g).mul(&word_mats[q])?);
                }
            }
            q += 1;
        }
        seeds += 1;
    }

    let basis_rows = BitMat::from_rows(da, &basis)?;
    let basis_inv = basis_rows.inverse()?;
    let unknowns = seeds * db;
    let mut eqs = Echelon::new(unknowns);
    'outer: for i in 0..da {
        for g in 0..ngens {
            let coords = basis_inv.vec_mul(&a.generator(g).mul_vec(&basis[i])?)?;
            let mut blocks = vec![BitMat::zeros(db, db); seeds];
            for j in coords.iter_ones() {
                blocks[seed_of[j]] = blocks[seed_of[j]].add(&word_mats[j])?;
            }
            let rhs = b.generator(g).mul(&word_mats[i])?;
            blocks[seed_of[i]] = blocks[seed_of[i]].add(&rhs)?;
            let system = blocks
                .iter()
                .skip(1)
                .try_fold(blocks[0].clone(), |acc, blk| acc.hstack(blk))?;
            for row in system.rows() {
                eqs.insert(row);
                if eqs.is_full() {
                    break 'outer;
                }
            }
        }
    }

    let solutions = eqs.to_matrix().kernel();
    let mut homs = Vec::with_capacity(solutions.dim());
    for y in solutions.basis().rows() {
        let mut images = BitMat::zeros(da, db);
        for i in 0..da {
            let ys = y.slice(seed_of[i] * db, db);
            images.set_row(i, &word_mats[i].mul_vec(&ys)?);
        }
        let x = basis_inv.mul(&images)?.transpose();
        for g in 0..ngens {
            if b.generator(g).mul(&x)? != x.mul(a.generator(g))? {
                return Err(Error::Certification(format!(
                    "hom solution fails to intertwine generator {}",
                    a.labels()[g]
                )));
            }
        }
        homs.push(x);
    }
    Ok(HomSpace {
        source_dim: da,
        target_dim: db,
        basis: homs,
    })
}

/// `End_G(V)` with its structure constants.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub hom: HomSpace,
    /// `table[i][j]` holds the coordinates of `X_i X_j`.
    pub table: Vec<Vec<BitVec>>,
}

impl EndAlgebra {
    #[must_use]
    pub fn dim(&self) -> usize {
        self.hom.dim()
    }
}

pub fn end_algebra(rep: &GroupRep) -> Result<EndAlgebra> {
    let hom = hom_space(rep, rep)?;
    let mut table = Vec::with_capacity(hom.dim());
    for x in hom.basis() {
        let mut row = Vec::with_capacity(hom.dim());
        for y in hom.basis() {
            let c = hom.coordinates(&x.mul(y)?)?.ok_or_else(|| {
                Error::Certification("endomorphism product left the algebra".into())
            })?;
            row.push(c);
        }
        table.push(row);
    }
    Ok(EndAlgebra { hom, table })
}

/// What the endomorphism algebra revealed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum EndStructure {
    /// Only scalars, and the module is irreducible.
    Irreducible,
    /// Only scalars, yet reducible (composition factors are pairwise
    /// non-isomorphic); the submodule comes from Norton's search.
    ScalarsReducible,
    /// A nonzero nilpotent `η` with `η² = 0`: uniserial, socle `im η`.
    Nilpotent,
    /// A nontrivial idempotent: a direct sum of two summands.
    Idempotent,
}

/// Classifies a non-scalar `x` in a two-dimensional algebra `⟨1, x⟩`, and
/// returns the witness (nilpotent or idempotent) it yields.
fn classify_two_dim(end: &EndAlgebra) -> Result<(EndStructure, BitMat)> {
    let d = end.hom.source_dim();
    let id = BitMat::identity(d);
    let b = end.hom.basis();
    let candidates = [b[0].clone(), b[1].clone(), b[0].add(&b[1])?];
    let x = candidates
        .into_iter()
        .find(|x| *x != id)
        .expect("a two-dimensional algebra has a non-identity element");
    let sq = x.mul(&x)?;
    let x_plus_1 = x.add(&id)?;
    if sq.is_zero() {
        Ok((EndStructure::Nilpotent, x))
    } else if sq == id {
        Ok((EndStructure::Nilpotent, x_plus_1))
    } else if sq == x {
        Ok((EndStructure::Idempotent, x))
    } else if sq == x_plus_1 {
        Err(Error::GaloisConjugate)
    } else {
        Err(Error::Certification(
            "endomorphism algebra is not closed".into(),
        ))
    }
}

/// An irreducible submodule found from the endomorphism algebra.
#[derive(Clone, Debug)]
pub struct SocleComponent {
    pub subspace: Subspace,
    pub structure: EndStructure,
}

fn image_pair_tiebreak(e: &BitMat) -> Result<(Subspace, Subspace)> {
    let id = BitMat::identity(e.n_rows());
    let im_e = Subspace::column_space(e);
    let im_f = Subspace::column_space(&e.add(&id)?);
    Ok(if im_e.cmp_lex(&im_f).is_le() {
        (im_e, im_f)
    } else {
        (im_f, im_e)
    })
}

/// An irreducible submodule of a module whose endomorphism algebra has
/// dimension at most two.
///
/// The candidate is the image of a nilpotent endomorphism, the
/// lexicographically smaller image of a complementary idempotent pair, or
/// (for scalar endomorphisms) the whole module. A candidate that is still
/// reducible is cut down with [`minimal_submodule`], since scalar
/// endomorphisms alone do not force irreducibility.
pub fn irreducible_socle_component(rep: &GroupRep, seed: u64) -> Result<SocleComponent> {
    let end = end_algebra(rep)?;
    let (mut structure, candidate) = match end.dim() {
        1 => (EndStructure::Irreducible, Subspace::full(rep.degree())),
        2 => {
            let (structure, w) = classify_two_dim(&end)?;
            let subspace = match structure {
                EndStructure::Nilpotent => Subspace::column_space(&w),
                _ => image_pair_tiebreak(&w)?.0,
            };
            (structure, subspace)
        }
        d => return Err(Error::UnexpectedEndDimension(d)),
    };
    let subspace = minimal_submodule_within(rep, &candidate, seed)?;
    if structure == EndStructure::Irreducible && subspace.dim() < rep.degree() {
        structure = EndStructure::ScalarsReducible;
    }
    Ok(SocleComponent {
        subspace,
        structure,
    })
}

/// A decomposition `V = U₁ ⊕ U₂` into invariant summands.
#[derive(Clone, Debug)]
pub struct Splitting {
    pub u1: Subspace,
    pub u2: Subspace,
    pub rep1: GroupRep,
    pub rep2: GroupRep,
    pub idempotent: BitMat,
}

/// Splits a module whose endomorphism algebra is two-dimensional and
/// contains a nontrivial idempotent `e`; `U₁` is the lexicographically
/// smaller of `im e` and `im(1 - e)`.
pub fn split_by_idempotent(rep: &GroupRep) -> Result<Splitting> {
    let end = end_algebra(rep)?;
    if end.dim() != 2 {
        return Err(Error::UnexpectedEndDimension(end.dim()));
    }
    let (structure, e) = classify_two_dim(&end)?;
    if structure != EndStructure::Idempotent {
        return Err(Error::Indecomposable);
    }
    let (u1, u2) = image_pair_tiebreak(&e)?;
    if u1.dim() + u2.dim() != rep.degree() || !u1.intersect(&u2)?.is_zero() {
        return Err(Error::Certification(
            "idempotent images do not form a direct sum".into(),
        ));
    }
    Ok(Splitting {
        rep1: sub_rep(rep, &u1)?,
        rep2: sub_rep(rep, &u2)?,
        u1,
        u2,
        idempotent: e,
    })
}

/// The action on an invariant subspace, in its canonical basis.
pub fn sub_rep(rep: &GroupRep, w: &Subspace) -> Result<GroupRep> {
    if w.ambient_dim() != rep.degree() {
        return Err(Error::DimensionMismatch(format!(
            "subspace of ambient dimension {} in a degree-{} representation",
            w.ambient_dim(),
            rep.degree()
        )));
    }
    let k = w.dim();
    let mut gens = Vec::with_capacity(rep.n_generators());
    for (g, label) in rep.generators().iter().zip(rep.labels()) {
        let mut m = BitMat::zeros(k, k);
        for (j, b) in w.basis().rows().enumerate() {
            let c = w
                .coordinates(&g.mul_vec(&b)?)?
                .ok_or_else(|| Error::NotInvariant(label.clone()))?;
            for i in c.iter_ones() {
                m.set(i, j, true);
            }
        }
        gens.push(m);
    }
    rep.with_generators(k, gens)
}

/// Generators replaced by their inverse transposes.
pub fn dual_rep(rep: &GroupRep) -> Result<GroupRep> {
    let gens = rep
        .generators()
        .iter()
        .map(|g| Ok(g.inverse()?.transpose()))
        .collect::<Result<Vec<_>>>()?;
    rep.with_generators(rep.degree(), gens)
}

/// Whether some intertwiner between the two modules is invertible.
pub fn are_isomorphic(a: &GroupRep, b: &GroupRep) -> Result<bool> {
    if a.degree() != b.degree() {
        return Ok(false);
    }
    let hom = hom_space(a, b)?;
    if hom.dim() <= 16 {
        return Ok(hom.elements().any(|x| x.is_invertible()));
    }
    // Large hom spaces only arise for very reducible modules: sample.
    let mut lcg = Lcg::new(0x5eed);
    Ok((0..256).any(|_| {
        let c = BitVec::from_words(hom.dim(), vec![lcg.next_u64()]);
        hom.element(&c).is_invertible()
    }))
}

/// Deterministic 64-bit linear-congruential stream.
#[derive(Clone, Debug)]
pub struct Lcg(u64);

impl Lcg {
    #[must_use]
    pub fn new(seed: u64) -> Self {
        Self(seed ^ 0x9e37_79b9_7f4a_7c15)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6_364_136_223_846_793_005)
            .wrapping_add(1_442_695_040_888_963_407);
        self.0
    }

    /// Uniform-ish value in `0..k`.
    pub fn below(&mut self, k: usize) -> usize {
        ((self.next_u64() >> 33) % k as u64) as usize
    }
}

const IRREDUCIBILITY_ATTEMPTS: usize = 200;
const MAX_TESTED_NULLITY: usize = 4;

fn random_algebra_element(rep: &GroupRep, lcg: &mut Lcg) -> Result<BitMat> {
    let d = rep.degree();
    let terms = 2 + lcg.below(3);
    let mut z = BitMat::zeros(d, d);
    for _ in 0..terms {
        let len = 1 + lcg.below(12);
        let word: Vec<usize> = (0..len).map(|_| lcg.below(rep.n_generators())).collect();
        z = z.add(&rep.eval_word(&word)?)?;
    }
    Ok(z)
}

/// Norton's irreducibility test, returning a proper nonzero submodule when
/// the module is reducible.
///
/// Random algebra elements `z` are drawn from a seeded stream until one has
/// nullity in `1..=4`. Every nonzero kernel vector of `z` is spun under the
/// generators and every nonzero kernel vector of `zᵀ` under the transposed
/// generators. A proper span is (or annihilates) a submodule; if all spans
/// are full the module is irreducible.
pub fn proper_submodule(rep: &GroupRep, seed: u64) -> Result<Option<Subspace>> {
    let d = rep.degree();
    if d <= 1 {
        return Ok(None);
    }
    if rep.n_generators() == 0 {
        return Ok(Some(Subspace::from_vectors(d, &[BitVec::unit(d, 0)])?));
    }
    let transposed: Vec<BitMat> = rep.generators().iter().map(BitMat::transpose).collect();
    let mut lcg = Lcg::new(seed);
    for _ in 0..IRREDUCIBILITY_ATTEMPTS {
        let z = random_algebra_element(rep, &mut lcg)?;
        let ker = z.kernel();
        if ker.is_zero() || ker.dim() > MAX_TESTED_NULLITY {
            continue;
        }
        for v in ker.vectors().skip(1) {
            let w = spin(rep.generators(), &[v])?;
            if w.dim() < d {
                return Ok(Some(w));
            }
        }
        let ker_t = z.transpose().kernel();
        for v in ker_t.vectors().skip(1) {
            let w = spin(&transposed, &[v])?;
            if w.dim() < d {
                return Ok(Some(w.basis().kernel()));
            }
        }
        return Ok(None);
    }
    Err(Error::Inconclusive(IRREDUCIBILITY_ATTEMPTS))
}

pub fn is_irreducible(rep: &GroupRep, seed: u64) -> Result<bool> {
    if rep.degree() == 0 {
        return Ok(false);
    }
    Ok(proper_submodule(rep, seed)?.is_none())
}

/// An irreducible submodule of the invariant subspace `w`, found by repeated
/// [`proper_submodule`] searches.
pub fn minimal_submodule_within(rep: &GroupRep, w: &Subspace, seed: u64) -> Result<Subspace> {
    let mut current = w.clone();
    loop {
        let sub = sub_rep(rep, &current)?;
        let Some(inner) = proper_submodule(&sub, seed)? else {
            return Ok(current);
        };
        let vectors: Vec<BitVec> = inner.basis().rows().map(|c| current.combine(&c)).collect();
        current = Subspace::from_vectors(rep.degree(), &vectors)?;
    }
}

/// An irreducible submodule of the whole module.
pub fn minimal_submodule(rep: &GroupRep, seed: u64) -> Result<Subspace> {
    minimal_submodule_within(rep, &Subspace::full(rep.degree()), seed)
}
