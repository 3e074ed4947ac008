//! Group-invariant spreads of totally singular subspaces built from spin modules, their
//! certification, and permutation actions on them.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{invariant_quadratic, QuadForm};
use crate::gf2::{BitMat, BitVec, Subspace};
use crate::meataxe::{
    irreducible_socle_component, is_irreducible, restrict_alternating, restrict_symmetric,
    restrict_to_alternating, split_by_idempotent, sub_rep, EndStructure, Splitting,
};
use crate::rep::{GroupKind, GroupRep};
use crate::specht::spin_rep;
use crate::symgrp::{coset_reps_point_stabilizer, Perm};

/// Where a spread came from.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: String,
    pub group: String,
    pub m: Option<usize>,
    /// Coset representatives, in member order, for translated members.
    pub coset_reps: Vec<String>,
    pub notes: Vec<String>,
}

/// A set of subspaces (canonical bases) with the form they are singular for
/// and, optionally, the representation whose generators permute them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spread {
    pub members: Vec<Subspace>,
    pub form: QuadForm,
    pub provenance: Provenance,
    pub rep: Option<GroupRep>,
}

impl Spread {
    #[must_use]
    pub fn ambient_dim(&self) -> usize {
        self.form.dim()
    }

    /// Index of the member equal to `w`.
    #[must_use]
    pub fn position(&self, w: &Subspace) -> Option<usize> {
        self.members.iter().position(|m| m == w)
    }
}

/// Results of re-checking every spread property from scratch.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpreadReport {
    pub member_count: usize,
    pub member_dim: usize,
    pub ambient_dim: usize,
    pub equal_dims: bool,
    /// `2 · member_dim = ambient_dim`, so the members are maximal.
    pub maximal: bool,
    pub pairwise_trivial: bool,
    pub totally_singular: bool,
    pub distinct: bool,
    pub set_invariant_under: Vec<String>,
    pub not_invariant_under: Vec<String>,
    /// `2^{r-1} + 1` for members of dimension `r`.
    pub bound: u64,
    pub within_bound: bool,
    pub complete: bool,
    pub singular_coverage: Option<u64>,
    pub total_singular: Option<u64>,
    pub failures: Vec<String>,
}

impl SpreadReport {
    #[must_use]
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Canonical basis of `G · W`.
pub fn translate_subspace(w: &Subspace, g: &BitMat) -> Result<Subspace> {
    w.image_under(g)
}

/// Upper bound `2^{r-1} + 1` on a partial spread of index `r`, saturating at `u64::MAX`.
pub fn spread_bound(r: usize) -> u64 {
    match r {
        0 => 1,
        r => u32::try_from(r - 1)
            .ok()
            .and_then(|s| 1u64.checked_shl(s))
            .and_then(|x| x.checked_add(1))
            .unwrap_or(u64::MAX),
    }
}

/// Recomputes every spread certificate; failures are recorded, not raised.
pub fn verify_spread(s: &Spread) -> Result<SpreadReport> {
    let d = s.ambient_dim();
    let mut rep = SpreadReport {
        member_count: s.members.len(),
        ambient_dim: d,
        ..SpreadReport::default()
    };

    if s.members.iter().any(|w| w.ambient_dim() != d) {
        return Err(Error::DimensionMismatch(
            "member ambient dimension differs from form".into(),
        ));
    }
    rep.member_dim = s.members.first().map_or(0, Subspace::dim);
    rep.equal_dims = s.members.iter().all(|w| w.dim() == rep.member_dim);
    if !rep.equal_dims {
        rep.failures
            .push("members have different dimensions".into());
    }
    rep.maximal = 2 * rep.member_dim == d;
    if !rep.maximal {
        rep.failures.push(format!(
            "members of dimension {} are not half of {d}",
            rep.member_dim
        ));
    }

    rep.pairwise_trivial = true;
    for i in 0..s.members.len() {
        for j in i + 1..s.members.len() {
            if !s.members[i].intersect(&s.members[j])?.is_zero() {
                rep.pairwise_trivial = false;
                rep.failures
                    .push(format!("members {i} and {j} intersect nontrivially"));
            }
        }
    }

    rep.totally_singular = true;
    for (i, w) in s.members.iter().enumerate() {
        if !s.form.is_totally_singular(w)? {
            rep.totally_singular = false;
            rep.failures
                .push(format!("member {i} is not totally singular"));
        }
    }

    let distinct: HashSet<&BitMat> = s.members.iter().map(Subspace::basis).collect();
    rep.distinct = distinct.len() == s.members.len();
    if !rep.distinct {
        rep.failures
            .push("members are not pairwise distinct".into());
    }

    if let Some(g_rep) = &s.rep {
        if g_rep.degree() != d {
            return Err(Error::DimensionMismatch(
                "spread representation has the wrong degree".into(),
            ));
        }
        for (label, g) in g_rep.labels().iter().zip(g_rep.generators()) {
            let mut ok = true;
            for w in &s.members {
                if !distinct.contains(translate_subspace(w, g)?.basis()) {
                    ok = false;
                    break;
                }
            }
            if ok {
                rep.set_invariant_under.push(label.clone());
            } else {
                rep.not_invariant_under.push(label.clone());
                rep.failures
                    .push(format!("member set not invariant under {label}"));
            }
        }
    }

    rep.bound = spread_bound(rep.member_dim);
    rep.within_bound = rep.member_count as u64 <= rep.bound;
    if !rep.within_bound {
        rep.failures.push(format!(
            "{} members exceed the bound {}",
            rep.member_count, rep.bound
        ));
    }
    rep.complete = rep.maximal && rep.member_count as u64 == rep.bound;

    if d <= 24 {
        let total = s.form.count_singular()?;
        let per_member = (1u64 << rep.member_dim) - 1;
        rep.total_singular = Some(total);
        rep.singular_coverage = Some(per_member * rep.member_count as u64);
        if rep.complete && rep.singular_coverage != rep.total_singular {
            rep.failures.push(format!(
                "complete spread covers {:?} of {total} singular vectors",
                rep.singular_coverage
            ));
        }
    }
    Ok(rep)
}

fn certify(spread: &Spread) -> Result<SpreadReport> {
    let report = verify_spread(spread)?;
    if report.all_pass() {
        Ok(report)
    } else {
        Err(Error::Certification(report.failures.join("; ")))
    }
}

fn translates(rep: &GroupRep, u: &Subspace, reps: &[Perm]) -> Result<Vec<Subspace>> {
    reps.iter()
        .map(|g| translate_subspace(u, &rep.perm_matrix(g)?))
        .collect()
}

/// The `Σ_{2m+1}`-invariant spread of `2m+1` translates of the socle.
#[derive(Clone, Debug)]
pub struct SigmaSpread {
    pub spread: Spread,
    pub report: SpreadReport,
    /// The spin module of `Σ_{2m+1}`.
    pub rep: GroupRep,
    pub form: QuadForm,
    /// The socle of the restriction to `Σ_{2m}`.
    pub socle: Subspace,
    pub socle_structure: EndStructure,
}

/// Translates of the socle `U` of `D^{(m+1,m)}↓Σ_{2m}` by coset
/// representatives of `Σ_{2m}` in `Σ_{2m+1}`.
pub fn sigma_spread(m: usize) -> Result<SigmaSpread> {
    if m < 3 {
        return Err(Error::NotQuadraticType(format!(
            "the spin module of S{} carries no invariant quadratic form",
            2 * m + 1
        )));
    }
    let n = 2 * m + 1;
    let rep = spin_rep(n)?;
    let form = invariant_quadratic(&rep)?
        .ok_or_else(|| Error::NotQuadraticType(format!("no invariant form found for S{n}")))?;
    let comp = irreducible_socle_component(&restrict_symmetric(&rep, n - 1)?, 1)?;
    let socle = comp.subspace;
    if socle.dim() != 1 << (m - 1) {
        return Err(Error::Certification(format!(
            "socle has dimension {}, expected {}",
            socle.dim(),
            1 << (m - 1)
        )));
    }
    let reps = coset_reps_point_stabilizer(n, false)?;
    let spread = Spread {
        members: translates(&rep, &socle, &reps)?,
        form: form.clone(),
        provenance: Provenance {
            construction: "sigma".into(),
            group: GroupKind::Symmetric(n).to_string(),
            m: Some(m),
            coset_reps: reps.iter().map(ToString::to_string).collect(),
            notes: vec![format!(
                "socle of restriction to S{}: {:?}",
                n - 1,
                comp.structure
            )],
        },
        rep: Some(rep.clone()),
    };
    let report = certify(&spread)?;
    Ok(SigmaSpread {
        spread,
        report,
        rep,
        form,
        socle,
        socle_structure: comp.structure,
    })
}

/// The sigma spread plus the two `𝒜_{2m+1}`-summands of the spin module.
#[derive(Clone, Debug)]
pub struct ExtendedSpread {
    pub sigma: SigmaSpread,
    pub spread: Spread,
    pub report: SpreadReport,
    pub splitting: Splitting,
    /// The odd generator `(1,2)` maps `U₁` onto `U₂` and back.
    pub odd_generator_swaps: bool,
}

/// Adds `U₁` and `U₂` to the sigma spread; requires `m ≡ 3 (mod 4)`.
pub fn extend_spread(m: usize) -> Result<ExtendedSpread> {
    if m < 3 || m % 4 != 3 {
        return Err(Error::ExtensionInapplicable(format!(
            "m = {m} is not 3 mod 4"
        )));
    }
    let sigma = sigma_spread(m)?;
    let splitting = split_by_idempotent(&restrict_to_alternating(&sigma.rep)?)?;
    let odd = sigma.rep.generator(0);
    let odd_generator_swaps = translate_subspace(&splitting.u1, odd)? == splitting.u2
        && translate_subspace(&splitting.u2, odd)? == splitting.u1;
    if !odd_generator_swaps {
        return Err(Error::Certification(
            "odd generator does not swap the summands".into(),
        ));
    }
    let mut spread = sigma.spread.clone();
    spread.members.push(splitting.u1.clone());
    spread.members.push(splitting.u2.clone());
    spread.provenance.construction = "extended".into();
    spread.provenance.notes.push(format!(
        "summands U1, U2 of the restriction to A{} swapped by {}",
        2 * m + 1,
        sigma.rep.labels()[0]
    ));
    let report = certify(&spread)?;
    Ok(ExtendedSpread {
        sigma,
        spread,
        report,
        splitting,
        odd_generator_swaps,
    })
}

/// The complete `𝒜₉`-invariant spread in dimension 8.
#[derive(Clone, Debug)]
pub struct A9Spread {
    pub spread: Spread,
    pub report: SpreadReport,
    /// The chosen 8-dimensional summand of the spin module restricted to `𝒜₉`.
    pub summand: GroupRep,
    pub form: QuadForm,
    pub u: Subspace,
    /// How the summand's restriction to `𝒜₈` yielded `U`.
    pub u_structure: EndStructure,
    pub u_a7_irreducible: bool,
}

/// Translates of an irreducible `𝒜₈`-submodule `U` of an `𝒜₉`-summand of
/// `D^{(5,4)}` by even coset representatives of `𝒜₈` in `𝒜₉`.
pub fn a9_spread(seed: u64) -> Result<A9Spread> {
    let rep = spin_rep(9)?;
    let split = split_by_idempotent(&restrict_to_alternating(&rep)?)?;
    let summand = split.rep1;
    let form = invariant_quadratic(&summand)?
        .ok_or_else(|| Error::NotQuadraticType("no invariant form on the A9 summand".into()))?;
    let a8 = restrict_alternating(&summand, 8)?;
    let comp = irreducible_socle_component(&a8, seed)?;
    let u = comp.subspace;
    if u.dim() != 4 {
        return Err(Error::Certification(format!(
            "A8-submodule has dimension {}",
            u.dim()
        )));
    }
    let u_a7 = restrict_alternating(&sub_rep(&a8, &u)?, 7)?;
    let u_a7_irreducible = is_irreducible(&u_a7, seed)?;
    if !u_a7_irreducible {
        return Err(Error::Certification(
            "U restricted to A7 is reducible".into(),
        ));
    }
    let reps = coset_reps_point_stabilizer(9, true)?;
    let spread = Spread {
        members: translates(&summand, &u, &reps)?,
        form: form.clone(),
        provenance: Provenance {
            construction: "a9".into(),
            group: GroupKind::Alternating(9).to_string(),
            m: None,
            coset_reps: reps.iter().map(ToString::to_string).collect(),
            notes: vec![format!(
                "A8-submodule from restriction: {:?}",
                comp.structure
            )],
        },
        rep: Some(summand.clone()),
    };
    let report = certify(&spread)?;
    Ok(A9Spread {
        spread,
        report,
        summand,
        form,
        u,
        u_structure: comp.structure,
        u_a7_irreducible,
    })
}

/// Orbits of a permutation group on the members of a spread.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionReport {
    pub group_order: usize,
    /// Member permutation induced by each group element.
    pub member_perms: Vec<Vec<usize>>,
    pub orbits: Vec<Vec<usize>>,
    /// Stabilizer order of the first member of each orbit.
    pub stabilizer_orders: Vec<usize>,
    pub transitive: bool,
    pub regular: bool,
}

impl ActionReport {
    /// Orbit sizes, sorted ascending.
    #[must_use]
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.orbits.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }

    /// Orbits on which the group acts regularly.
    #[must_use]
    pub fn regular_orbits(&self) -> Vec<&Vec<usize>> {
        self.orbits
            .iter()
            .zip(&self.stabilizer_orders)
            .filter(|(o, &st)| o.len() * st == self.group_order && st == 1)
            .map(|(o, _)| o)
            .collect()
    }
}

/// The action of every listed group element on the spread members.
pub fn group_action_on_spread(s: &Spread, elements: &[Perm]) -> Result<ActionReport> {
    let rep = s
        .rep
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("spread has no attached representation".into()))?;
    let lookup: HashMap<&BitMat, usize> = s
        .members
        .iter()
        .enumerate()
        .map(|(i, w)| (w.basis(), i))
        .collect();
    let mut member_perms = Vec::with_capacity(elements.len());
    for p in elements {
        if matches!(rep.kind(), GroupKind::Alternating(_)) && !p.is_even() {
            return Err(Error::InvalidArgument(format!(
                "{p} is odd but the group is alternating"
            )));
        }
        let g = rep.perm_matrix(p)?;
        let mut images = Vec::with_capacity(s.members.len());
        for w in &s.members {
            let t = translate_subspace(w, &g)?;
            let j = *lookup
                .get(t.basis())
                .ok_or_else(|| Error::NotInSpread(format!("image of a member under {p}")))?;
            images.push(j);
        }
        member_perms.push(images);
    }

    let k = s.members.len();
    let mut seen = vec![false; k];
    let mut orbits = Vec::new();
    let mut stabilizer_orders = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut orbit: Vec<usize> = member_perms.iter().map(|img| img[start]).collect();
        orbit.push(start);
        orbit.sort_unstable();
        orbit.dedup();
        for &x in &orbit {
            seen[x] = true;
        }
        stabilizer_orders.push(
            member_perms
                .iter()
                .filter(|img| img[start] == start)
                .count(),
        );
        orbits.push(orbit);
    }
    let transitive = orbits.len() == 1;
    let regular = transitive && stabilizer_orders[0] == 1;
    Ok(ActionReport {
        group_order: elements.len(),
        member_perms,
        orbits,
        stabilizer_orders,
        transitive,
        regular,
    })
}

/// The permutation action of `𝒜_n` on the nonzero singular vectors of a
/// complete spread in dimension at most 24.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImprimitivityReport {
    pub singular_vectors: usize,
    pub singular_orbit: usize,
    pub transitive: bool,
    pub blocks: usize,
    pub block_size: usize,
    pub blocks_partition: bool,
    pub blocks_preserved: bool,
    pub block_orbit: usize,
    /// Orbits of the stabilizer of block 0 on ordered pairs of distinct
    /// vectors in the block.
    pub stabilizer_pair_orbits: usize,
    pub doubly_transitive: bool,
}

fn vec_key(v: &BitVec) -> u64 {
    v.to_u64()
}

/// Checks that the members' nonzero vectors form a system of blocks for the
/// action on singular vectors, with a doubly transitive block stabilizer.
///
/// The stabilizer of member 0 is taken to be `𝒜_{n-1}`, generated by all but
/// the last generator of the attached `𝒜_n` representation.
pub fn imprimitivity_report(s: &Spread) -> Result<ImprimitivityReport> {
    let rep = s
        .rep
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("spread has no attached representation".into()))?;
    let GroupKind::Alternating(n) = rep.kind() else {
        return Err(Error::InvalidArgument(
            "imprimitivity report needs an alternating group".into(),
        ));
    };
    let d = s.ambient_dim();
    if d > 24 || s.members.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "cannot enumerate singular vectors in dimension {d}"
        )));
    }
    let gens = rep.generators();
    let act =
        |g: &BitMat, v: u64| -> Result<u64> { Ok(vec_key(&g.mul_vec(&BitVec::from_u64(d, v))?)) };

    let singular: Vec<u64> = (1u64..1 << d)
        .filter(|&v| !s.form.eval_q(&BitVec::from_u64(d, v)).unwrap_or(true))
        .collect();
    let singular_set: HashSet<u64> = singular.iter().copied().collect();

    let mut orbit = HashSet::from([singular[0]]);
    let mut queue = VecDeque::from([singular[0]]);
    while let Some(v) = queue.pop_front() {
        for g in gens {
            let w = act(g, v)?;
            if orbit.insert(w) {
                queue.push_back(w);
            }
        }
    }

    let block_sets: Vec<Vec<u64>> = s
        .members
        .iter()
        .map(|w| {
            let mut b: Vec<u64> = w.vectors().skip(1).map(|v| vec_key(&v)).collect();
            b.sort_unstable();
            b
        })
        .collect();
    let block_index: HashMap<&[u64], usize> = block_sets
        .iter()
        .enumerate()
        .map(|(i, b)| (b.as_slice(), i))
        .collect();
    let mut covered: Vec<u64> = block_sets.iter().flatten().copied().collect();
    covered.sort_unstable();
    let blocks_partition = covered.windows(2).all(|w| w[0] != w[1])
        && covered.len() == singular.len()
        && covered.iter().all(|v| singular_set.contains(v));

    let block_image = |g: &BitMat, b: usize| -> Result<Option<usize>> {
        let mut img = block_sets[b]
            .iter()
            .map(|&v| act(g, v))
            .collect::<Result<Vec<_>>>()?;
        img.sort_unstable();
        Ok(block_index.get(img.as_slice()).copied())
    };
    let mut blocks_preserved = true;
    let mut block_orbit = HashSet::from([0usize]);
    let mut queue = VecDeque::from([0usize]);
    for g in gens {
        for b in 0..block_sets.len() {
            if block_image(g, b)?.is_none() {
                blocks_preserved = false;
            }
        }
    }
    while let Some(b) = queue.pop_front() {
        for g in gens {
            if let Some(c) = block_image(g, b)? {
                if block_orbit.insert(c) {
                    queue.push_back(c);
                }
            }
        }
    }

    let stab = &gens[..n.saturating_sub(3)];
    for g in stab {
        if block_image(g, 0)? != Some(0) {
            return Err(Error::Certification(
                "A(n-1) generators do not fix block 0".into(),
            ));
        }
    }
    let block0 = &block_sets[0];
    let mut pairs_seen: HashSet<(u64, u64)> = HashSet::new();
    let mut pair_orbits = 0;
    for &x in block0 {
        for &y in block0 {
            if x == y || pairs_seen.contains(&(x, y)) {
                continue;
            }
            pair_orbits += 1;
            pairs_seen.insert((x, y));
            let mut queue = VecDeque::from([(x, y)]);
            while let Some((a, b)) = queue.pop_front() {
                for g in stab {
                    let p = (act(g, a)?, act(g, b)?);
                    if pairs_seen.insert(p) {
                        queue.push_back(p);
                    }
                }
            }
        }
    }

    Ok(ImprimitivityReport {
        singular_vectors: singular.len(),
        singular_orbit: orbit.len(),
        transitive: orbit.len() == singular.len(),
        blocks: block_sets.len(),
        block_size: block0.len(),
        blocks_partition,
        blocks_preserved,
        block_orbit: block_orbit.len(),
        stabilizer_pair_orbits: pair_orbits,
        doubly_transitive: pair_orbits == 1,
    })
}

/// Exhaustive maximum partial spread size for a small form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteforceBound {
    pub witt_index: usize,
    pub maximal_subspaces: usize,
    pub max_partial_spread: usize,
}

/// Enumerates the maximal totally singular subspaces (as bitmasks over the
/// `2^d` vectors) and finds a largest pairwise-trivially-intersecting set.
pub fn max_partial_spread_bruteforce(q: &QuadForm) -> Result<BruteforceBound> {
    let d = q.dim();
    if d > 6 {
        return Err(Error::TooLarge(d));
    }
    let r = q.witt_index()?;
    let singular: Vec<u64> = (1u64..1 << d)
        .filter(|&v| !q.eval_q(&BitVec::from_u64(d, v)).unwrap_or(true))
        .collect();
    let is_singular = |v: u64| v == 0 || singular.contains(&v);

    // Each subspace is a mask with bit v set for every member vector v.
    let mut found: HashSet<u64> = HashSet::new();
    let mut stack: Vec<(u64, usize, usize)> = vec![(1, 0, 0)];
    while let Some((mask, dim, from)) = stack.pop() {
        if dim == r {
            found.insert(mask);
            continue;
        }
        for (i, &v) in singular.iter().enumerate().skip(from) {
            if mask >> v & 1 == 1 {
                continue;
            }
            let mut new = mask;
            let mut ok = true;
            for x in (0..1u64 << d).filter(|&x| mask >> x & 1 == 1) {
                if !is_singular(x ^ v) {
                    ok = false;
                    break;
                }
                new |= 1 << (x ^ v);
            }
            if ok {
                stack.push((new, dim + 1, i + 1));
            }
        }
    }
    let subspaces: Vec<u64> = {
        let mut v: Vec<u64> = found.into_iter().collect();
        v.sort_unstable();
        v
    };

    fn clique(cands: &[u64], size: usize, best: &mut usize) {
        if size + cands.len() <= *best {
            return;
        }
        if cands.is_empty() {
            *best = size;
            return;
        }
        for (i, &s) in cands.iter().enumerate() {
            let rest: Vec<u64> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&t| s & t == 1)
                .collect();
            clique(&rest, size + 1, best);
        }
    }
    let mut best = 0;
    if r > 0 {
        clique(&subspaces, 0, &mut best);
    }
    Ok(BruteforceBound {
        witt_index: r,
        maximal_subspaces: subspaces.len(),
        max_partial_spread: best,
    })
}
