//! Concept lattices: NextClosure enumeration, bounds, and Hasse covers.

use std::collections::HashMap;

use crate::bitset::{BitSet, BoolMat};
use crate::error::{Error, Result};
use crate::polarity::{Polarity, Side};

/// A Galois-stable extent–intent pair.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FormalConcept {
    pub extent: BitSet,
    pub intent: BitSet,
}

impl FormalConcept {
    pub fn render(&self, p: &Polarity) -> String {
        format!(
            "{}|{}",
            self.extent.render(p.objects()),
            self.intent.render(p.features())
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

/// All concepts of a polarity with their inclusion order and bound tables.
///
/// Concepts are listed in the lectic order of their intents produced by
/// NextClosure, so index 0 is the top concept (extent = all objects) and the
/// last index is the bottom (intent = all features).
#[derive(Clone, Debug)]
pub struct ConceptLattice {
    concepts: Vec<FormalConcept>,
    order: BoolMat,
    top: usize,
    bottom: usize,
    meet_table: Vec<u32>,
    join_table: Vec<u32>,
    by_extent: HashMap<u64, usize>,
}

/// Next intent in lectic order, or `None` after the full feature set.
fn next_closure(p: &Polarity, current: &BitSet) -> Option<BitSet> {
    let m = p.feature_count();
    let mut a = *current;
    for i in (0..m).rev() {
        if a.contains(i) {
            a.remove(i);
        } else {
            let mut candidate = a;
            candidate.insert(i);
            let b = p
                .closure(Side::Intent, &candidate)
                .expect("carrier sizes match");
            // accept iff no new element below i was introduced
            let new = b.diff(&a);
            if new.first() == Some(i) {
                return Some(b);
            }
        }
    }
    None
}

impl ConceptLattice {
    pub fn enumerate(p: &Polarity) -> ConceptLattice {
        let mut intents = Vec::new();
        let mut cur = p
            .closure(Side::Intent, &BitSet::empty(p.feature_count()))
            .expect("sized");
        loop {
            intents.push(cur);
            match next_closure(p, &cur) {
                Some(next) => cur = next,
                None => break,
            }
        }
        let concepts: Vec<FormalConcept> = intents
            .into_iter()
            .map(|intent| FormalConcept {
                extent: p.down(&intent).expect("sized"),
                intent,
            })
            .collect();
        let n = concepts.len();
        let order = BoolMat::from_fn(n, n, |i, j| {
            concepts[i].extent.is_subset(&concepts[j].extent)
        });
        let by_extent: HashMap<u64, usize> = concepts
            .iter()
            .enumerate()
            .map(|(i, c)| (c.extent.bits(), i))
            .collect();
        let by_intent: HashMap<u64, usize> = concepts
            .iter()
            .enumerate()
            .map(|(i, c)| (c.intent.bits(), i))
            .collect();
        let top = by_extent[&BitSet::full(p.object_count()).bits()];
        let bottom = by_intent[&BitSet::full(p.feature_count()).bits()];
        let mut meet_table = vec![0u32; n * n];
        let mut join_table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let meet_extent = concepts[i].extent.inter(&concepts[j].extent);
                meet_table[i * n + j] = by_extent[&meet_extent.bits()] as u32;
                let join_intent = concepts[i].intent.inter(&concepts[j].intent);
                join_table[i * n + j] = by_intent[&join_intent.bits()] as u32;
            }
        }
        ConceptLattice {
            concepts,
            order,
            top,
            bottom,
            meet_table,
            join_table,
            by_extent,
        }
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn concepts(&self) -> &[FormalConcept] {
        &self.concepts
    }

    pub fn concept(&self, i: usize) -> &FormalConcept {
        &self.concepts[i]
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.order.get(i, j)
    }

    pub fn index_of(&self, c: &FormalConcept) -> Result<usize> {
        match self.by_extent.get(&c.extent.bits()) {
            Some(&i) if self.concepts[i] == *c => Ok(i),
            _ => Err(Error::ConceptNotInLattice),
        }
    }

    pub fn meet_idx(&self, i: usize, j: usize) -> usize {
        self.meet_table[i * self.concepts.len() + j] as usize
    }

    pub fn join_idx(&self, i: usize, j: usize) -> usize {
        self.join_table[i * self.concepts.len() + j] as usize
    }

    /// Binary meet or join, by the intersection formulas on extents/intents.
    pub fn bound(
        &self,
        kind: BoundKind,
        c: &FormalConcept,
        d: &FormalConcept,
    ) -> Result<FormalConcept> {
        let i = self.index_of(c)?;
        let j = self.index_of(d)?;
        let k = match kind {
            BoundKind::Meet => self.meet_idx(i, j),
            BoundKind::Join => self.join_idx(i, j),
        };
        Ok(self.concepts[k])
    }

    /// Pairs `(i, j)` with `i < j` in the order and nothing strictly between.
    pub fn hasse_covers(&self) -> Vec<(usize, usize)> {
        let n = self.concepts.len();
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.le(i, j) {
                    continue;
                }
                let intermediate =
                    (0..n).any(|k| k != i && k != j && self.le(i, k) && self.le(k, j));
                if !intermediate {
                    covers.push((i, j));
                }
            }
        }
        covers
    }
}

/// Brute-force enumeration straight from the definition: every `Y ⊆ X`
/// contributes `(Y^↓, Y^{↓↑})`, deduplicated. Kept as the independent oracle
/// for NextClosure.
pub fn enumerate_concepts_oracle(p: &Polarity) -> Vec<FormalConcept> {
    use std::collections::BTreeSet;
    let mut seen: BTreeSet<(u64, u64)> = BTreeSet::new();
    for y in crate::bitset::all_subsets(p.feature_count()) {
        let extent = p.down(&y).expect("sized");
        let intent = p.up(&extent).expect("sized");
        seen.insert((extent.bits(), intent.bits()));
    }
    seen.into_iter()
        .map(|(e, i)| FormalConcept {
            extent: {
                let mut s = BitSet::empty(p.object_count());
                for b in 0..p.object_count() {
                    if e & (1 << b) != 0 {
                        s.insert(b);
                    }
                }
                s
            },
            intent: {
                let mut s = BitSet::empty(p.feature_count());
                for b in 0..p.feature_count() {
                    if i & (1 << b) != 0 {
                        s.insert(b);
                    }
                }
                s
            },
        })
        .collect()
}
