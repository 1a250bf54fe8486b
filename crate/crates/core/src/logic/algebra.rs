//! Algebra-class checks on complex algebras, and the representation of
//! lattices and modal algebras as (enriched) formal contexts.

use crate::bitset::BoolMat;
use crate::error::{Error, Result};
use crate::lattice::ConceptLattice;
use crate::polarity::Polarity;
use crate::relations::{modal_op, EnrichedContext, ModalOp, RelSort, TypedRelation};

/// Guard on `|lattice|` for the pairwise class checks.
pub const ALGEBRA_GUARD: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraClass {
    /// `□a ≤ ◇a` plus normality.
    RoughBasic,
    /// `◇a ≤ □a` plus normality.
    CoRoughBasic,
    /// `□a ≤ a` and `a ≤ ◇a`.
    Reflexive,
    /// `□a ≤ □□a` and `◇◇a ≤ ◇a`.
    Transitive,
    /// `a ≤ □a` and `◇a ≤ a`.
    SubDelta,
    /// `□□a ≤ □a` and `◇a ≤ ◇◇a`.
    Dense,
    /// `a ≤ □◇a` and `◇□a ≤ a`.
    Symmetric,
    /// Reflexive and transitive conceptual rough algebra.
    TqBa,
    /// Sub-delta and dense conceptual co-rough algebra.
    CoTqBa,
    /// tqBa plus `◇□a ≤ □a` and `◇a ≤ □◇a`.
    TqBa5,
    CoTqBa5,
    /// tqBa5 plus `□(a∨b) ≤ □a∨□b` and `◇a∧◇b ≤ ◇(a∧b)`.
    Ia2,
    CoIa2,
    /// tqBa5 plus: `□a ≤ □b` and `◇a ≤ ◇b` imply `a ≤ b`.
    Ia3,
    CoIa3,
    /// tqBa satisfying the tqBa5, IA2, and IA3 conditions.
    Prerough,
    CoPrerough,
}

impl AlgebraClass {
    pub fn parse(text: &str) -> Result<AlgebraClass> {
        use AlgebraClass::*;
        Ok(match text {
            "rough-basic" => RoughBasic,
            "co-rough-basic" => CoRoughBasic,
            "reflexive" => Reflexive,
            "transitive" => Transitive,
            "sub-delta" => SubDelta,
            "dense" => Dense,
            "symmetric" => Symmetric,
            "tqBa" => TqBa,
            "co-tqBa" => CoTqBa,
            "tqBa5" => TqBa5,
            "co-tqBa5" => CoTqBa5,
            "IA2" => Ia2,
            "co-IA2" => CoIa2,
            "IA3" => Ia3,
            "co-IA3" => CoIa3,
            "prerough" => Prerough,
            "co-prerough" => CoPrerough,
            other => return Err(Error::UnknownIdentifier(format!("algebra class `{other}`"))),
        })
    }
}

/// The complex algebra of a context with box/diamond tabulated per concept.
struct Complex<'a> {
    lat: &'a ConceptLattice,
    box_of: Vec<usize>,
    dia_of: Vec<usize>,
}

impl<'a> Complex<'a> {
    fn build(f: &EnrichedContext, lat: &'a ConceptLattice) -> Result<Complex<'a>> {
        if lat.len() > ALGEBRA_GUARD {
            return Err(Error::SearchSpaceExceeded {
                size: lat.len() as u128,
                guard: ALGEBRA_GUARD as u128,
            });
        }
        let mut box_of = Vec::with_capacity(lat.len());
        let mut dia_of = Vec::with_capacity(lat.len());
        for c in lat.concepts() {
            box_of.push(lat.index_of(&modal_op(f, ModalOp::Box, c)?)?);
            dia_of.push(lat.index_of(&modal_op(f, ModalOp::Diamond, c)?)?);
        }
        Ok(Complex {
            lat,
            box_of,
            dia_of,
        })
    }

    fn le(&self, i: usize, j: usize) -> bool {
        self.lat.le(i, j)
    }

    fn all(&self) -> std::ops::Range<usize> {
        0..self.lat.len()
    }

    /// Normality: box preserves binary meets and top, diamond binary joins
    /// and bottom.
    fn normal(&self) -> bool {
        let top = self.lat.top();
        let bottom = self.lat.bottom();
        if self.box_of[top] != top || self.dia_of[bottom] != bottom {
            return false;
        }
        self.all().all(|i| {
            self.all().all(|j| {
                self.box_of[self.lat.meet_idx(i, j)]
                    == self.lat.meet_idx(self.box_of[i], self.box_of[j])
                    && self.dia_of[self.lat.join_idx(i, j)]
                        == self.lat.join_idx(self.dia_of[i], self.dia_of[j])
            })
        })
    }

    fn rough_basic(&self) -> bool {
        self.normal() && self.all().all(|i| self.le(self.box_of[i], self.dia_of[i]))
    }

    fn co_rough_basic(&self) -> bool {
        self.normal() && self.all().all(|i| self.le(self.dia_of[i], self.box_of[i]))
    }

    fn reflexive(&self) -> bool {
        self.all()
            .all(|i| self.le(self.box_of[i], i) && self.le(i, self.dia_of[i]))
    }

    fn transitive(&self) -> bool {
        self.all().all(|i| {
            self.le(self.box_of[i], self.box_of[self.box_of[i]])
                && self.le(self.dia_of[self.dia_of[i]], self.dia_of[i])
        })
    }

    fn sub_delta(&self) -> bool {
        self.all()
            .all(|i| self.le(i, self.box_of[i]) && self.le(self.dia_of[i], i))
    }

    fn dense(&self) -> bool {
        self.all().all(|i| {
            self.le(self.box_of[self.box_of[i]], self.box_of[i])
                && self.le(self.dia_of[i], self.dia_of[self.dia_of[i]])
        })
    }

    fn symmetric(&self) -> bool {
        self.all().all(|i| {
            self.le(i, self.box_of[self.dia_of[i]]) && self.le(self.dia_of[self.box_of[i]], i)
        })
    }

    fn tqba5_extra(&self) -> bool {
        self.all().all(|i| {
            self.le(self.dia_of[self.box_of[i]], self.box_of[i])
                && self.le(self.dia_of[i], self.box_of[self.dia_of[i]])
        })
    }

    fn ia2_extra(&self) -> bool {
        self.all().all(|i| {
            self.all().all(|j| {
                self.le(
                    self.box_of[self.lat.join_idx(i, j)],
                    self.lat.join_idx(self.box_of[i], self.box_of[j]),
                ) && self.le(
                    self.lat.meet_idx(self.dia_of[i], self.dia_of[j]),
                    self.dia_of[self.lat.meet_idx(i, j)],
                )
            })
        })
    }

    fn ia3_extra(&self) -> bool {
        self.all().all(|i| {
            self.all().all(|j| {
                !(self.le(self.box_of[i], self.box_of[j])
                    && self.le(self.dia_of[i], self.dia_of[j]))
                    || self.le(i, j)
            })
        })
    }
}

/// Evaluate the defining inequalities of an algebra class on the complex
/// algebra of `f`.
pub fn algebra_class_check(
    f: &EnrichedContext,
    lattice: &ConceptLattice,
    class: AlgebraClass,
) -> Result<bool> {
    let cx = Complex::build(f, lattice)?;
    use AlgebraClass::*;
    Ok(match class {
        RoughBasic => cx.rough_basic(),
        CoRoughBasic => cx.co_rough_basic(),
        Reflexive => cx.reflexive(),
        Transitive => cx.transitive(),
        SubDelta => cx.sub_delta(),
        Dense => cx.dense(),
        Symmetric => cx.symmetric(),
        TqBa => cx.rough_basic() && cx.reflexive() && cx.transitive(),
        CoTqBa => cx.co_rough_basic() && cx.sub_delta() && cx.dense(),
        TqBa5 => cx.rough_basic() && cx.reflexive() && cx.transitive() && cx.tqba5_extra(),
        CoTqBa5 => cx.co_rough_basic() && cx.sub_delta() && cx.dense() && cx.tqba5_extra(),
        Ia2 => {
            cx.rough_basic()
                && cx.reflexive()
                && cx.transitive()
                && cx.tqba5_extra()
                && cx.ia2_extra()
        }
        CoIa2 => {
            cx.co_rough_basic()
                && cx.sub_delta()
                && cx.dense()
                && cx.tqba5_extra()
                && cx.ia2_extra()
        }
        Ia3 => {
            cx.rough_basic()
                && cx.reflexive()
                && cx.transitive()
                && cx.tqba5_extra()
                && cx.ia3_extra()
        }
        CoIa3 => {
            cx.co_rough_basic()
                && cx.sub_delta()
                && cx.dense()
                && cx.tqba5_extra()
                && cx.ia3_extra()
        }
        Prerough => {
            cx.rough_basic()
                && cx.reflexive()
                && cx.transitive()
                && cx.tqba5_extra()
                && cx.ia2_extra()
                && cx.ia3_extra()
        }
        CoPrerough => {
            cx.co_rough_basic()
                && cx.sub_delta()
                && cx.dense()
                && cx.tqba5_extra()
                && cx.ia2_extra()
                && cx.ia3_extra()
        }
    })
}

/// A finite lattice order given as a boolean matrix. Validates
/// reflexivity, antisymmetry, transitivity, and the existence of all binary
/// meets and joins; returns the meet and join tables.
pub struct FiniteLattice {
    pub order: BoolMat,
    pub meet: Vec<usize>,
    pub join: Vec<usize>,
    pub top: usize,
    pub bottom: usize,
}

impl FiniteLattice {
    pub fn from_order(order: &BoolMat) -> Result<FiniteLattice> {
        let n = order.rows();
        if order.cols() != n {
            return Err(Error::NotALattice(
                "order matrix must be square".to_string(),
            ));
        }
        if n == 0 {
            return Err(Error::NotALattice("empty order".to_string()));
        }
        if !order.is_reflexive() {
            return Err(Error::NotALattice("order not reflexive".to_string()));
        }
        if !order.is_transitive() {
            return Err(Error::NotALattice("order not transitive".to_string()));
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && order.get(i, j) && order.get(j, i) {
                    return Err(Error::NotALattice(format!("not antisymmetric at {i},{j}")));
                }
            }
        }
        let le = |i: usize, j: usize| order.get(i, j);
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let lower: Vec<usize> = (0..n).filter(|&k| le(k, i) && le(k, j)).collect();
                let glb = lower
                    .iter()
                    .copied()
                    .find(|&m| lower.iter().all(|&k| le(k, m)))
                    .ok_or_else(|| Error::NotALattice(format!("no meet for {i},{j}")))?;
                let upper: Vec<usize> = (0..n).filter(|&k| le(i, k) && le(j, k)).collect();
                let lub = upper
                    .iter()
                    .copied()
                    .find(|&m| upper.iter().all(|&k| le(m, k)))
                    .ok_or_else(|| Error::NotALattice(format!("no join for {i},{j}")))?;
                meet[i * n + j] = glb;
                join[i * n + j] = lub;
            }
        }
        let top = (0..n)
            .find(|&t| (0..n).all(|k| le(k, t)))
            .ok_or_else(|| Error::NotALattice("no top".to_string()))?;
        let bottom = (0..n)
            .find(|&b| (0..n).all(|k| le(b, k)))
            .ok_or_else(|| Error::NotALattice("no bottom".to_string()))?;
        Ok(FiniteLattice {
            order: order.clone(),
            meet,
            join,
            top,
            bottom,
        })
    }

    pub fn len(&self) -> usize {
        self.order.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.order.get(i, j)
    }
}

/// Represent a finite lattice as the polarity `(L, L, ≤)`; every element `a`
/// reappears as the concept `(↓a, ↑a)`. Returns the polarity and the witness
/// map element → concept index, verified to be an order isomorphism.
pub fn context_from_lattice(order: &BoolMat) -> Result<(Polarity, Vec<usize>)> {
    let fl = FiniteLattice::from_order(order)?;
    let n = fl.len();
    let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let p = Polarity::new(names.clone(), names, order.clone())?;
    let lat = ConceptLattice::enumerate(&p);
    if lat.len() != n {
        return Err(Error::NotALattice(format!(
            "representation produced {} concepts for {} elements",
            lat.len(),
            n
        )));
    }
    let mut witness = Vec::with_capacity(n);
    for a in 0..n {
        let down_a = order.col(a);
        let up_a = order.row(a);
        let concept = crate::lattice::FormalConcept {
            extent: down_a,
            intent: up_a,
        };
        witness.push(lat.index_of(&concept)?);
    }
    for a in 0..n {
        for b in 0..n {
            if fl.le(a, b) != lat.le(witness[a], witness[b]) {
                return Err(Error::NotALattice(format!(
                    "witness breaks order at {a},{b}"
                )));
            }
        }
    }
    Ok((p, witness))
}

/// Represent a complete modal algebra `(L, □, ◇)` as an enriched context on
/// `(L, L, ≤)` with `a R_□ x` iff `a ≤ □x` and `x R_◇ a` iff `◇a ≤ x`, so
/// that `R_□⁽⁰⁾[x]` is the principal downset of `□x` and `R_◇⁽⁰⁾[a]` the
/// principal upset of `◇a`. The operator tables are checked for normality
/// and the isomorphism is verified on every element, including the modal
/// operators.
pub fn context_from_modal_algebra(
    order: &BoolMat,
    box_table: &[usize],
    dia_table: &[usize],
) -> Result<(EnrichedContext, Vec<usize>)> {
    let fl = FiniteLattice::from_order(order)?;
    let n = fl.len();
    if box_table.len() != n || dia_table.len() != n {
        return Err(Error::NotNormal(
            "operator table length mismatch".to_string(),
        ));
    }
    for i in 0..n {
        for j in 0..n {
            if box_table[fl.meet[i * n + j]] != fl.meet[box_table[i] * n + box_table[j]] {
                return Err(Error::NotNormal(format!(
                    "box does not preserve meet at {i},{j}"
                )));
            }
            if dia_table[fl.join[i * n + j]] != fl.join[dia_table[i] * n + dia_table[j]] {
                return Err(Error::NotNormal(format!(
                    "dia does not preserve join at {i},{j}"
                )));
            }
        }
    }
    if box_table[fl.top] != fl.top {
        return Err(Error::NotNormal("box does not preserve top".to_string()));
    }
    if dia_table[fl.bottom] != fl.bottom {
        return Err(Error::NotNormal("dia does not preserve bottom".to_string()));
    }
    let (p, witness) = context_from_lattice(order)?;
    let rbox = TypedRelation::new(
        RelSort::AX,
        BoolMat::from_fn(n, n, |a, x| fl.le(a, box_table[x])),
    );
    let rdia = TypedRelation::new(
        RelSort::XA,
        BoolMat::from_fn(n, n, |x, a| fl.le(dia_table[a], x)),
    );
    let ctx = EnrichedContext::new(p, rbox, rdia, None, None)?;
    let lat = ConceptLattice::enumerate(&ctx.base);
    for a in 0..n {
        let c = lat.concept(witness[a]);
        let boxed = lat.index_of(&modal_op(&ctx, ModalOp::Box, c)?)?;
        if boxed != witness[box_table[a]] {
            return Err(Error::NotNormal(format!(
                "box differs from table at element {a}"
            )));
        }
        let diad = lat.index_of(&modal_op(&ctx, ModalOp::Diamond, c)?)?;
        if diad != witness[dia_table[a]] {
            return Err(Error::NotNormal(format!(
                "dia differs from table at element {a}"
            )));
        }
    }
    Ok((ctx, witness))
}
