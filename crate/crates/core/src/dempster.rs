//! Belief and plausibility at desk scale: finite partition probability
//! spaces with inner/outer measures, their canonical indiscernibility
//! relation, and conceptual probability spaces whose box and diamond arise
//! from the adjoints of a subalgebra embedding. All arithmetic is exact
//! rational.

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::bitset::{BitSet, BoolMat};
use crate::error::{Error, Result};
use crate::lattice::{ConceptLattice, FormalConcept};
use crate::polarity::Polarity;
use crate::relations::{
    compose_rel, is_i_compatible, modal_op, EnrichedContext, ModalOp, RelSort, TypedRelation,
};

pub type Rational = Rational64;

/// A finite probability space whose σ-algebra is generated by a partition:
/// blocks of the carrier with nonnegative weights summing to one.
#[derive(Clone, Debug)]
pub struct PartitionProbSpace {
    pub carrier: Vec<String>,
    pub blocks: Vec<BitSet>,
    pub weights: Vec<Rational>,
}

impl PartitionProbSpace {
    pub fn new(
        carrier: Vec<String>,
        blocks: Vec<BitSet>,
        weights: Vec<Rational>,
    ) -> Result<PartitionProbSpace> {
        let n = carrier.len();
        if blocks.len() != weights.len() {
            return Err(Error::InvalidSpace(
                "one weight per block required".to_string(),
            ));
        }
        let mut covered = BitSet::empty(n);
        for b in &blocks {
            if b.len() != n {
                return Err(Error::InvalidSpace(
                    "block over the wrong carrier".to_string(),
                ));
            }
            if b.is_empty() {
                return Err(Error::InvalidSpace("empty block".to_string()));
            }
            if !covered.inter(b).is_empty() {
                return Err(Error::InvalidSpace("blocks overlap".to_string()));
            }
            covered = covered.union(b);
        }
        if covered != BitSet::full(n) {
            return Err(Error::InvalidSpace(
                "blocks do not cover the carrier".to_string(),
            ));
        }
        if weights.iter().any(|w| w < &Rational::zero()) {
            return Err(Error::InvalidSpace("negative weight".to_string()));
        }
        let total: Rational = weights.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidSpace(format!(
                "weights sum to {total}, not 1"
            )));
        }
        Ok(PartitionProbSpace {
            carrier,
            blocks,
            weights,
        })
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    /// Inner and outer measures of an arbitrary subset: the weight of the
    /// blocks inside it, and of the blocks meeting it.
    pub fn inner_outer(&self, z: &BitSet) -> Result<(Rational, Rational)> {
        if z.len() != self.len() {
            return Err(Error::CarrierMismatch {
                expected: self.len(),
                got: z.len(),
            });
        }
        let mut inner = Rational::zero();
        let mut outer = Rational::zero();
        for (b, w) in self.blocks.iter().zip(&self.weights) {
            if b.is_subset(z) {
                inner += w;
            }
            if !b.inter(z).is_empty() {
                outer += w;
            }
        }
        Ok((inner, outer))
    }

    /// The union of the blocks meeting `z` (the closure `◇z = e(γ(z))`).
    pub fn block_closure(&self, z: &BitSet) -> BitSet {
        let mut out = BitSet::empty(self.len());
        for b in &self.blocks {
            if !b.inter(z).is_empty() {
                out = out.union(b);
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalClassicalReport {
    pub is_equivalence: bool,
    pub equals_partition: bool,
    /// Every equivalence compatible with the subalgebra contains the
    /// canonical relation; checked exhaustively for small carriers.
    pub finest_compatible: bool,
}

/// The canonical relation `R(x,y)` iff `x ∈ ◇{y}`, together with the report
/// that it is the partition equivalence and the finest compatible one.
pub fn canonical_relation_classical(
    p: &PartitionProbSpace,
) -> Result<(BoolMat, CanonicalClassicalReport)> {
    let n = p.len();
    let mut rel = BoolMat::new(n, n);
    for y in 0..n {
        let closure = p.block_closure(&BitSet::singleton(n, y));
        for x in closure.iter() {
            rel.set(x, y, true);
        }
    }
    let is_equivalence = rel.is_equivalence();
    let partition = BoolMat::from_fn(n, n, |i, j| {
        p.blocks.iter().any(|b| b.contains(i) && b.contains(j))
    });
    let equals_partition = rel == partition;
    // an equivalence is compatible iff each of its classes is a union of
    // partition blocks
    let mut finest_compatible = true;
    if n <= 6 {
        for e in crate::generate::all_equivalences(n) {
            let compatible = (0..n).all(|i| {
                let class = e.row(i);
                p.blocks
                    .iter()
                    .all(|b| b.inter(&class).is_empty() || b.is_subset(&class))
            });
            if compatible && !rel.le(&e) {
                finest_compatible = false;
            }
        }
    }
    Ok((
        rel,
        CanonicalClassicalReport {
            is_equivalence,
            equals_partition,
            finest_compatible,
        },
    ))
}

/// A concept lattice with a designated sublattice (the subalgebra) carrying
/// an exact probability measure: monotone, modular, 0 at bottom, 1 at top.
#[derive(Clone, Debug)]
pub struct ConceptualProbSpace {
    pub base: Polarity,
    pub lattice: ConceptLattice,
    /// Concept indices of the subalgebra, sorted.
    pub subalgebra: Vec<usize>,
    /// Measure aligned with `subalgebra`.
    pub mu: Vec<Rational>,
}

impl ConceptualProbSpace {
    pub fn new(
        base: Polarity,
        subalgebra: Vec<usize>,
        mu: Vec<Rational>,
    ) -> Result<ConceptualProbSpace> {
        let lattice = ConceptLattice::enumerate(&base);
        Self::with_lattice(base, lattice, subalgebra, mu)
    }

    pub fn with_lattice(
        base: Polarity,
        lattice: ConceptLattice,
        subalgebra: Vec<usize>,
        mu: Vec<Rational>,
    ) -> Result<ConceptualProbSpace> {
        if mu.len() != subalgebra.len() {
            return Err(Error::InvalidSpace(
                "one measure value per element".to_string(),
            ));
        }
        let mut paired: Vec<(usize, Rational)> =
            subalgebra.iter().copied().zip(mu.iter().cloned()).collect();
        paired.sort_by_key(|(i, _)| *i);
        paired.dedup_by_key(|(i, _)| *i);
        let subalgebra: Vec<usize> = paired.iter().map(|(i, _)| *i).collect();
        let mu: Vec<Rational> = paired.into_iter().map(|(_, w)| w).collect();
        for &i in &subalgebra {
            if i >= lattice.len() {
                return Err(Error::InvalidSpace(format!(
                    "concept index {i} out of range"
                )));
            }
        }
        if !subalgebra.contains(&lattice.top()) || !subalgebra.contains(&lattice.bottom()) {
            return Err(Error::InvalidSpace(
                "subalgebra must contain top and bottom".to_string(),
            ));
        }
        for &i in &subalgebra {
            for &j in &subalgebra {
                if !subalgebra.contains(&lattice.meet_idx(i, j))
                    || !subalgebra.contains(&lattice.join_idx(i, j))
                {
                    return Err(Error::InvalidSpace(format!(
                        "subalgebra not closed under bounds of {i},{j}"
                    )));
                }
            }
        }
        let space = ConceptualProbSpace {
            base,
            lattice,
            subalgebra,
            mu,
        };
        let bottom = space.measure_of(space.lattice.bottom())?;
        if !bottom.is_zero() {
            return Err(Error::InvalidSpace("mu(bottom) must be 0".to_string()));
        }
        let top = space.measure_of(space.lattice.top())?;
        if !top.is_one() {
            return Err(Error::InvalidSpace("mu(top) must be 1".to_string()));
        }
        for (k, &i) in space.subalgebra.iter().enumerate() {
            for (l, &j) in space.subalgebra.iter().enumerate() {
                if space.lattice.le(i, j) && space.mu[k] > space.mu[l] {
                    return Err(Error::InvalidSpace("mu not monotone".to_string()));
                }
                let meet = space.measure_of(space.lattice.meet_idx(i, j))?;
                let join = space.measure_of(space.lattice.join_idx(i, j))?;
                if join + meet != space.mu[k] + space.mu[l] {
                    return Err(Error::InvalidSpace("mu not modular".to_string()));
                }
            }
        }
        Ok(space)
    }

    fn measure_of(&self, concept_idx: usize) -> Result<Rational> {
        self.subalgebra
            .binary_search(&concept_idx)
            .map(|pos| self.mu[pos])
            .map_err(|_| Error::InvalidSpace(format!("concept {concept_idx} not in subalgebra")))
    }

    /// `ι(c) = ⋁{a ∈ 𝔸 : e(a) ≤ c}` — the largest subalgebra element below.
    pub fn iota(&self, c: usize) -> usize {
        let mut acc = self.lattice.bottom();
        for &a in &self.subalgebra {
            if self.lattice.le(a, c) {
                acc = self.lattice.join_idx(acc, a);
            }
        }
        acc
    }

    /// `γ(c) = ⋀{a ∈ 𝔸 : c ≤ e(a)}` — the least subalgebra element above.
    pub fn gamma(&self, c: usize) -> usize {
        let mut acc = self.lattice.top();
        for &a in &self.subalgebra {
            if self.lattice.le(c, a) {
                acc = self.lattice.meet_idx(acc, a);
            }
        }
        acc
    }

    /// The adjoint data of a concept: `(ι(c), γ(c), □c, ◇c)` with
    /// `□c = e(ι(c))` and `◇c = e(γ(c))`.
    pub fn adjoints(
        &self,
        c: &FormalConcept,
    ) -> Result<(usize, usize, FormalConcept, FormalConcept)> {
        let idx = self.lattice.index_of(c)?;
        let i = self.iota(idx);
        let g = self.gamma(idx);
        Ok((i, g, *self.lattice.concept(i), *self.lattice.concept(g)))
    }

    /// `(bel, pl) = (μ(ι(c)), μ(γ(c)))`.
    pub fn belief_plausibility(&self, c: &FormalConcept) -> Result<(Rational, Rational)> {
        let idx = self.lattice.index_of(c)?;
        let bel = self.measure_of(self.iota(idx))?;
        let pl = self.measure_of(self.gamma(idx))?;
        Ok((bel, pl))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalConceptualReport {
    pub i_compatible: bool,
    /// `[R]` equals `e∘ι` on every concept.
    pub box_matches: bool,
    /// The black diamond of `R` equals `e∘γ` on every concept.
    pub dia_matches: bool,
    pub reflexive: bool,
    /// `R ⊆ R;R`.
    pub transitive: bool,
}

impl CanonicalConceptualReport {
    pub fn all_hold(&self) -> bool {
        self.i_compatible
            && self.box_matches
            && self.dia_matches
            && self.reflexive
            && self.transitive
    }
}

/// The canonical relation of a conceptual probability space:
/// `R(a, x)` iff `𝐚 ≤ □𝐱`, where `𝐚` and `𝐱` are the object and feature
/// generated concepts. Returns the relation and the verification report.
pub fn canonical_relation_conceptual(
    s: &ConceptualProbSpace,
) -> Result<(TypedRelation, CanonicalConceptualReport)> {
    let p = &s.base;
    let lat = &s.lattice;
    let object_concept = |a: usize| -> Result<usize> {
        let extent = p.closure(
            crate::polarity::Side::Extent,
            &BitSet::singleton(p.object_count(), a),
        )?;
        lat.index_of(&FormalConcept {
            intent: p.up(&extent)?,
            extent,
        })
    };
    let feature_concept = |x: usize| -> Result<usize> {
        let intent = p.closure(
            crate::polarity::Side::Intent,
            &BitSet::singleton(p.feature_count(), x),
        )?;
        lat.index_of(&FormalConcept {
            extent: p.down(&intent)?,
            intent,
        })
    };
    let mut mat = BoolMat::new(p.object_count(), p.feature_count());
    for a in 0..p.object_count() {
        let ca = object_concept(a)?;
        for x in 0..p.feature_count() {
            let cx = feature_concept(x)?;
            if lat.le(ca, s.iota(cx)) {
                mat.set(a, x, true);
            }
        }
    }
    let rel = TypedRelation::new(RelSort::AX, mat);
    let i_compatible = is_i_compatible(p, &rel)?;
    let mut box_matches = true;
    let mut dia_matches = true;
    if i_compatible {
        let ctx = EnrichedContext::new(
            p.clone(),
            rel.clone(),
            crate::relations::converse_relation(&rel),
            None,
            None,
        )?;
        for (idx, c) in lat.concepts().iter().enumerate() {
            let boxed = modal_op(&ctx, ModalOp::Box, c)?;
            if lat.index_of(&boxed)? != s.iota(idx) {
                box_matches = false;
            }
            // ⟨R⁻¹⟩, the left adjoint of [R], realized as the black diamond
            let diad = modal_op(&ctx, ModalOp::BlackDiamond, c)?;
            if lat.index_of(&diad)? != s.gamma(idx) {
                dia_matches = false;
            }
        }
    } else {
        box_matches = false;
        dia_matches = false;
    }
    let i = TypedRelation::incidence(p);
    let reflexive = rel.included_in(&i);
    let transitive = rel.included_in(&compose_rel(p, &rel, &rel)?);
    Ok((
        rel,
        CanonicalConceptualReport {
            i_compatible,
            box_matches,
            dia_matches,
            reflexive,
            transitive,
        },
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S5Report {
    pub box_meet_preserving: bool,
    pub dia_join_preserving: bool,
    pub interior_closure: bool,
    pub idempotent: bool,
    pub adjoint_pair: bool,
    pub symmetric_laws: bool,
}

impl S5Report {
    pub fn all_hold(&self) -> bool {
        self.box_meet_preserving
            && self.dia_join_preserving
            && self.interior_closure
            && self.idempotent
            && self.adjoint_pair
            && self.symmetric_laws
    }
}

/// Verify the S5 laws of the adjoint-induced operators `□ = e∘ι`,
/// `◇ = e∘γ` on the whole lattice.
pub fn s5_law_check(s: &ConceptualProbSpace) -> S5Report {
    let lat = &s.lattice;
    let n = lat.len();
    let box_of: Vec<usize> = (0..n).map(|c| s.iota(c)).collect();
    let dia_of: Vec<usize> = (0..n).map(|c| s.gamma(c)).collect();
    let mut report = S5Report {
        box_meet_preserving: box_of[lat.top()] == lat.top(),
        dia_join_preserving: dia_of[lat.bottom()] == lat.bottom(),
        interior_closure: true,
        idempotent: true,
        adjoint_pair: true,
        symmetric_laws: true,
    };
    for i in 0..n {
        for j in 0..n {
            if box_of[lat.meet_idx(i, j)] != lat.meet_idx(box_of[i], box_of[j]) {
                report.box_meet_preserving = false;
            }
            if dia_of[lat.join_idx(i, j)] != lat.join_idx(dia_of[i], dia_of[j]) {
                report.dia_join_preserving = false;
            }
            if lat.le(dia_of[i], j) != lat.le(i, box_of[j]) {
                report.adjoint_pair = false;
            }
        }
        if !lat.le(box_of[i], i) || !lat.le(i, dia_of[i]) {
            report.interior_closure = false;
        }
        if box_of[box_of[i]] != box_of[i] || dia_of[dia_of[i]] != dia_of[i] {
            report.idempotent = false;
        }
        if !lat.le(i, box_of[dia_of[i]]) || !lat.le(dia_of[box_of[i]], i) {
            report.symmetric_laws = false;
        }
    }
    report
}

/// Embed a partition probability space as a conceptual one over the lifted
/// powerset: the subalgebra holds the block-generated sets, the measure adds
/// block weights.
pub fn lift_partition_space(p: &PartitionProbSpace) -> Result<ConceptualProbSpace> {
    let base = crate::lifting::lift_set(&p.carrier)?;
    let lattice = ConceptLattice::enumerate(&base);
    let mut subalgebra = Vec::new();
    let mut mu = Vec::new();
    let k = p.blocks.len();
    if k > 20 {
        return Err(Error::SearchSpaceExceeded {
            size: 1u128 << k,
            guard: 1 << 20,
        });
    }
    // all unions of blocks
    for mask in 0u32..(1 << k) {
        let mut z = BitSet::empty(p.len());
        let mut w = Rational::zero();
        for (b, block) in p.blocks.iter().enumerate() {
            if mask & (1 << b) != 0 {
                z = z.union(block);
                w += p.weights[b];
            }
        }
        let concept = FormalConcept {
            extent: z,
            intent: z.complement(),
        };
        let idx = lattice.index_of(&concept)?;
        if !subalgebra.contains(&idx) {
            subalgebra.push(idx);
            mu.push(w);
        }
    }
    ConceptualProbSpace::with_lattice(base, lattice, subalgebra, mu)
}
