//! Classical and conceptual T-models: strict and tolerant truth, induced
//! similarity relations, and sorites falsifier search.
//!
//! A conceptual T-model carries one reflexive I-compatible relation per
//! atom. The tolerant and strict interpretations are computed on
//! extent–intent pairs directly from the displayed recursion, not by
//! rewriting into box/diamond formulas, so that each atom uses its own
//! relation; the constants fall back to their classical values.

use std::collections::BTreeMap;

use crate::bitset::{BitSet, BoolMat};
use crate::error::{Error, Result};
use crate::lattice::{ConceptLattice, FormalConcept};
use crate::lifting::lift_set;
use crate::logic::formula::Formula;
use crate::polarity::Polarity;
use crate::relations::{
    is_i_compatible, rel_apply, rel_property, RelDir, RelProperty, RelSort, TypedRelation,
};

/// A finite T-model: a domain with one reflexive symmetric similarity
/// relation per atom and a classical valuation.
#[derive(Clone, Debug)]
pub struct ClassicalTModel {
    pub domain: Vec<String>,
    pub sims: BTreeMap<String, BoolMat>,
    pub valuation: BTreeMap<String, BitSet>,
}

impl ClassicalTModel {
    pub fn new(
        domain: Vec<String>,
        sims: BTreeMap<String, BoolMat>,
        valuation: BTreeMap<String, BitSet>,
    ) -> Result<ClassicalTModel> {
        let n = domain.len();
        for (p, sim) in &sims {
            if sim.rows() != n || sim.cols() != n {
                return Err(Error::InvalidTModel(format!(
                    "similarity for `{p}` has wrong size"
                )));
            }
            if !sim.is_reflexive() || !sim.is_symmetric() {
                return Err(Error::InvalidTModel(format!(
                    "similarity for `{p}` must be reflexive and symmetric"
                )));
            }
        }
        for (p, v) in &valuation {
            if v.len() != n {
                return Err(Error::InvalidTModel(format!(
                    "valuation for `{p}` has wrong size"
                )));
            }
            if !sims.contains_key(p) {
                return Err(Error::InvalidTModel(format!(
                    "no similarity for atom `{p}`"
                )));
            }
        }
        Ok(ClassicalTModel {
            domain,
            sims,
            valuation,
        })
    }

    /// `V^t(p) = ⟨~_p⟩V(p)` and `V^s(p) = [~_p]V(p)`; the propositional
    /// connectives distribute.
    pub fn extent(&self, f: &Formula, mode: TruthMode) -> Result<BitSet> {
        let n = self.domain.len();
        match f {
            Formula::Top => Ok(BitSet::full(n)),
            Formula::Bot => Ok(BitSet::empty(n)),
            Formula::Atom(p) => {
                let v = self
                    .valuation
                    .get(p)
                    .copied()
                    .ok_or_else(|| Error::UnboundAtom(p.clone()))?;
                let sim = &self.sims[p];
                Ok(match mode {
                    TruthMode::Classical => v,
                    TruthMode::Tolerant => {
                        // some similar point satisfies p
                        let mut out = BitSet::empty(n);
                        for a in 0..n {
                            if !sim.row(a).inter(&v).is_empty() {
                                out.insert(a);
                            }
                        }
                        out
                    }
                    TruthMode::Strict => {
                        let mut out = BitSet::empty(n);
                        for a in 0..n {
                            if sim.row(a).is_subset(&v) {
                                out.insert(a);
                            }
                        }
                        out
                    }
                })
            }
            Formula::And(l, r) => Ok(self.extent(l, mode)?.inter(&self.extent(r, mode)?)),
            Formula::Or(l, r) => Ok(self.extent(l, mode)?.union(&self.extent(r, mode)?)),
            other => Err(Error::UnsupportedFormula(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TruthMode {
    Strict,
    Classical,
    Tolerant,
}

/// A polarity with one reflexive I-compatible relation per atom and a
/// concept-valued valuation.
#[derive(Clone, Debug)]
pub struct ConceptualTModel {
    pub base: Polarity,
    pub lattice: ConceptLattice,
    pub rels: BTreeMap<String, TypedRelation>,
    pub valuation: BTreeMap<String, FormalConcept>,
}

impl ConceptualTModel {
    pub fn new(
        base: Polarity,
        rels: BTreeMap<String, TypedRelation>,
        valuation: BTreeMap<String, FormalConcept>,
    ) -> Result<ConceptualTModel> {
        for (p, r) in &rels {
            if r.sort != RelSort::AX {
                return Err(Error::InvalidTModel(format!(
                    "relation for `{p}` must have sort AX"
                )));
            }
            r.validate(&base)?;
            if !is_i_compatible(&base, r)? {
                return Err(Error::InvalidTModel(format!(
                    "relation for `{p}` not I-compatible"
                )));
            }
            if !rel_property(&base, r, RelProperty::Reflexive)? {
                return Err(Error::InvalidTModel(format!(
                    "relation for `{p}` not reflexive"
                )));
            }
        }
        let lattice = ConceptLattice::enumerate(&base);
        for (p, c) in &valuation {
            if !rels.contains_key(p) {
                return Err(Error::InvalidTModel(format!("no relation for atom `{p}`")));
            }
            lattice.index_of(c)?;
        }
        Ok(ConceptualTModel {
            base,
            lattice,
            rels,
            valuation,
        })
    }

    /// Interpret a modality-free formula under the classical, strict, or
    /// tolerant reading; the result is always a formal concept.
    pub fn extent(&self, f: &Formula, mode: TruthMode) -> Result<FormalConcept> {
        let p = &self.base;
        match f {
            Formula::Top => Ok(*self.lattice.concept(self.lattice.top())),
            Formula::Bot => Ok(*self.lattice.concept(self.lattice.bottom())),
            Formula::Atom(name) => {
                let c = self
                    .valuation
                    .get(name)
                    .ok_or_else(|| Error::UnboundAtom(name.clone()))?;
                let r = &self.rels[name];
                Ok(match mode {
                    TruthMode::Classical => *c,
                    // V^s(p) = (R_p⁽⁰⁾[descr p], ·^↑)
                    TruthMode::Strict => {
                        let extent = rel_apply(p, r, RelDir::R0, &c.intent)?;
                        FormalConcept {
                            intent: p.up(&extent)?,
                            extent,
                        }
                    }
                    // V^t(p) = (·^↓, R_p⁽¹⁾[val p])
                    TruthMode::Tolerant => {
                        let intent = rel_apply(p, r, RelDir::R1, &c.extent)?;
                        FormalConcept {
                            extent: p.down(&intent)?,
                            intent,
                        }
                    }
                })
            }
            Formula::And(l, r) => {
                let (cl, cr) = (self.extent(l, mode)?, self.extent(r, mode)?);
                let extent = cl.extent.inter(&cr.extent);
                Ok(FormalConcept {
                    intent: p.up(&extent)?,
                    extent,
                })
            }
            Formula::Or(l, r) => {
                let (cl, cr) = (self.extent(l, mode)?, self.extent(r, mode)?);
                let intent = cl.intent.inter(&cr.intent);
                Ok(FormalConcept {
                    extent: p.down(&intent)?,
                    intent,
                })
            }
            other => Err(Error::UnsupportedFormula(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimilaritySide {
    Objects,
    Features,
}

/// The similarity relation induced by an atom's relation:
/// `a ~ b` iff `R_p⁽¹⁾[a] ⊆ b^↑`; `x ~ y` iff `R_p⁽⁰⁾[x] ⊆ y^↓`.
/// Reflexive whenever `R_p ⊆ I`; neither symmetric nor transitive in general.
pub fn similarity(
    m: &ConceptualTModel,
    atom: &str,
    side: SimilaritySide,
    u: usize,
    v: usize,
) -> Result<bool> {
    let r = m
        .rels
        .get(atom)
        .ok_or_else(|| Error::UnboundAtom(atom.to_string()))?;
    let p = &m.base;
    match side {
        SimilaritySide::Objects => {
            if u >= p.object_count() || v >= p.object_count() {
                return Err(Error::CarrierMismatch {
                    expected: p.object_count(),
                    got: u.max(v) + 1,
                });
            }
            let ru = rel_apply(p, r, RelDir::R1, &BitSet::singleton(p.object_count(), u))?;
            let v_up = p.up(&BitSet::singleton(p.object_count(), v))?;
            Ok(ru.is_subset(&v_up))
        }
        SimilaritySide::Features => {
            if u >= p.feature_count() || v >= p.feature_count() {
                return Err(Error::CarrierMismatch {
                    expected: p.feature_count(),
                    got: u.max(v) + 1,
                });
            }
            let ru = rel_apply(p, r, RelDir::R0, &BitSet::singleton(p.feature_count(), u))?;
            let v_down = p.down(&BitSet::singleton(p.feature_count(), v))?;
            Ok(ru.is_subset(&v_down))
        }
    }
}

/// Lift a classical T-model along the set lifting: the relation for each atom
/// is `I_{~ᶜ}`, the valuation goes through the powerset embedding. The
/// construction verifies that the induced similarities coincide with the
/// classical ones on both carriers.
pub fn lift_t_model(c: &ClassicalTModel) -> Result<ConceptualTModel> {
    let base = lift_set(&c.domain)?;
    let mut rels = BTreeMap::new();
    for (p, sim) in &c.sims {
        rels.insert(p.clone(), TypedRelation::new(RelSort::AX, sim.complement()));
    }
    let mut valuation = BTreeMap::new();
    for (p, v) in &c.valuation {
        valuation.insert(
            p.clone(),
            FormalConcept {
                extent: *v,
                intent: v.complement(),
            },
        );
    }
    let model = ConceptualTModel::new(base, rels, valuation)?;
    let n = c.domain.len();
    for (p, sim) in &c.sims {
        for d in 0..n {
            for e in 0..n {
                let classical = sim.get(d, e);
                if classical != similarity(&model, p, SimilaritySide::Objects, d, e)?
                    || classical != similarity(&model, p, SimilaritySide::Features, d, e)?
                {
                    return Err(Error::InvalidTModel(format!(
                        "lifted similarity for `{p}` differs at ({d},{e})"
                    )));
                }
            }
        }
    }
    Ok(model)
}

/// Single tolerance steps are always valid: a strict member related to `b`
/// forces `b` into the tolerant extent; on the feature side, a tolerant
/// description related to `y` forces `y` into the strict description (the
/// descriptions order dually, so strict is the larger description set).
pub fn step_lemma_check(m: &ConceptualTModel, atom: &str) -> Result<bool> {
    let strict = m.extent(&Formula::atom(atom), TruthMode::Strict)?;
    let tolerant = m.extent(&Formula::atom(atom), TruthMode::Tolerant)?;
    let p = &m.base;
    for a in strict.extent.iter() {
        for b in 0..p.object_count() {
            if similarity(m, atom, SimilaritySide::Objects, a, b)? && !tolerant.extent.contains(b) {
                return Ok(false);
            }
        }
    }
    for x in tolerant.intent.iter() {
        for y in 0..p.feature_count() {
            if similarity(m, atom, SimilaritySide::Features, x, y)? && !strict.intent.contains(y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Breadth-first search for a falsifier of the tolerance chain: objects
/// `a₁ … aₙ` with `a₁` a strict member of the atom, consecutive objects
/// similar, and `aₙ` outside the tolerant extent. Ties are broken by carrier
/// order, so the result is the shortest, lexicographically least chain.
pub fn sorites_search(
    m: &ConceptualTModel,
    atom: &str,
    max_len: usize,
) -> Result<Option<Vec<usize>>> {
    if max_len < 2 {
        return Ok(None);
    }
    let strict = m.extent(&Formula::atom(atom), TruthMode::Strict)?;
    let tolerant = m.extent(&Formula::atom(atom), TruthMode::Tolerant)?;
    let n = m.base.object_count();
    let mut frontier: Vec<Vec<usize>> = strict.extent.iter().map(|a| vec![a]).collect();
    while let Some(chain) = frontier.first().cloned() {
        frontier.remove(0);
        let last = *chain.last().expect("chains are nonempty");
        if chain.len() >= 2 && !tolerant.extent.contains(last) {
            return Ok(Some(chain));
        }
        if chain.len() == max_len {
            continue;
        }
        for b in 0..n {
            if chain.contains(&b) {
                continue;
            }
            if similarity(m, atom, SimilaritySide::Objects, last, b)? {
                let mut next = chain.clone();
                next.push(b);
                frontier.push(next);
            }
        }
    }
    Ok(None)
}
