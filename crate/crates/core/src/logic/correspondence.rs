//! Extensional Sahlqvist correspondence: each modal axiom is model-checked
//! over all valuations and compared against its first-order frame condition
//! computed directly on the relations.

use crate::error::{Error, Result};
use crate::lattice::ConceptLattice;
use crate::logic::formula::Formula;
use crate::logic::semantics::frame_valid;
use crate::relations::{compose_rel, EnrichedContext, TypedRelation};

/// The sixteen verified axiom/condition pairs: twelve for `□`/`◇` and four
/// for the right triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CorrespondenceItem {
    I1,
    I2,
    I3,
    I4,
    I5,
    I6,
    I7,
    I8,
    I9,
    I10,
    I11,
    I12,
    T1,
    T2,
    T3,
    T4,
}

pub const ALL_ITEMS: [CorrespondenceItem; 16] = [
    CorrespondenceItem::I1,
    CorrespondenceItem::I2,
    CorrespondenceItem::I3,
    CorrespondenceItem::I4,
    CorrespondenceItem::I5,
    CorrespondenceItem::I6,
    CorrespondenceItem::I7,
    CorrespondenceItem::I8,
    CorrespondenceItem::I9,
    CorrespondenceItem::I10,
    CorrespondenceItem::I11,
    CorrespondenceItem::I12,
    CorrespondenceItem::T1,
    CorrespondenceItem::T2,
    CorrespondenceItem::T3,
    CorrespondenceItem::T4,
];

impl CorrespondenceItem {
    pub fn parse(text: &str) -> Result<CorrespondenceItem> {
        use CorrespondenceItem::*;
        Ok(match text {
            "1" => I1,
            "2" => I2,
            "3" => I3,
            "4" => I4,
            "5" => I5,
            "6" => I6,
            "7" => I7,
            "8" => I8,
            "9" => I9,
            "10" => I10,
            "11" => I11,
            "12" => I12,
            "T1" | "t1" => T1,
            "T2" | "t2" => T2,
            "T3" | "t3" => T3,
            "T4" | "t4" => T4,
            other => {
                return Err(Error::UnknownIdentifier(format!(
                    "correspondence item `{other}`"
                )))
            }
        })
    }

    pub fn needs_triangle(&self) -> bool {
        use CorrespondenceItem::*;
        matches!(self, T1 | T2 | T3 | T4)
    }

    /// The modal axiom, as a sequent over the single atom `p`.
    pub fn sequent(&self) -> (Formula, Formula) {
        use CorrespondenceItem::*;
        let p = Formula::atom("p");
        match self {
            I1 => (Formula::boxed(p.clone()), Formula::dia(p)),
            I2 => (Formula::boxed(p.clone()), p),
            I3 => (p.clone(), Formula::dia(p)),
            I4 => (Formula::boxed(p.clone()), Formula::boxed(Formula::boxed(p))),
            I5 => (Formula::dia(Formula::dia(p.clone())), Formula::dia(p)),
            I6 => (p.clone(), Formula::boxed(Formula::dia(p))),
            I7 => (Formula::dia(Formula::boxed(p.clone())), p),
            I8 => (p.clone(), Formula::boxed(p)),
            I9 => (Formula::dia(p.clone()), p),
            I10 => (Formula::boxed(Formula::boxed(p.clone())), Formula::boxed(p)),
            I11 => (Formula::dia(p.clone()), Formula::dia(Formula::dia(p))),
            I12 => (Formula::dia(p.clone()), Formula::boxed(p)),
            T1 => (p.clone(), Formula::rtri(Formula::rtri(p))),
            T2 => (Formula::Top, Formula::rtri(Formula::Top)),
            T3 => (Formula::and(p.clone(), Formula::rtri(p)), Formula::Bot),
            T4 => (
                Formula::Top,
                Formula::rtri(Formula::and(p.clone(), Formula::rtri(p))),
            ),
        }
    }

    pub fn describe(&self) -> &'static str {
        use CorrespondenceItem::*;
        match self {
            I1 => "box p |- dia p  ~  R_box;R_bbox <= I",
            I2 => "box p |- p  ~  R_box <= I",
            I3 => "p |- dia p  ~  R_bbox <= I",
            I4 => "box p |- box box p  ~  R_box <= R_box;R_box",
            I5 => "dia dia p |- dia p  ~  R_dia <= R_dia;R_dia",
            I6 => "p |- box dia p  ~  R_dia <= R_bdia",
            I7 => "dia box p |- p  ~  R_bdia <= R_dia",
            I8 => "p |- box p  ~  I <= R_box",
            I9 => "dia p |- p  ~  I <= R_bbox",
            I10 => "box box p |- box p  ~  R_box;R_box <= R_box",
            I11 => "dia p |- dia dia p  ~  R_dia;R_dia <= R_dia",
            I12 => "dia p |- box p  ~  I <= R_bbox;R_box",
            T1 => "p |- rt rt p  ~  R_rt symmetric",
            T2 => "T |- rt T  ~  R_rt total",
            T3 => "p & rt p |- F  ~  R_rt diagonal forces bottom",
            T4 => "T |- rt (p & rt p)  ~  R_rt diagonal forces totality",
        }
    }
}

/// First-order condition of an item, evaluated on the relations directly.
pub fn first_order_condition(f: &EnrichedContext, item: CorrespondenceItem) -> Result<bool> {
    use CorrespondenceItem::*;
    let p = &f.base;
    let i = TypedRelation::incidence(p);
    let rblack = f.rblack_box();
    let rbdia = f.rblack_dia();
    Ok(match item {
        I1 => compose_rel(p, &f.rbox, &rblack)?.included_in(&i),
        I2 => f.rbox.included_in(&i),
        I3 => rblack.included_in(&i),
        I4 => f.rbox.included_in(&compose_rel(p, &f.rbox, &f.rbox)?),
        I5 => f.rdia.included_in(&compose_rel(p, &f.rdia, &f.rdia)?),
        I6 => f.rdia.included_in(&rbdia),
        I7 => rbdia.included_in(&f.rdia),
        I8 => i.included_in(&f.rbox),
        I9 => i.included_in(&rblack),
        I10 => compose_rel(p, &f.rbox, &f.rbox)?.included_in(&f.rbox),
        I11 => compose_rel(p, &f.rdia, &f.rdia)?.included_in(&f.rdia),
        I12 => i.included_in(&compose_rel(p, &rblack, &f.rbox)?),
        T1 | T2 | T3 | T4 => {
            let rt = f
                .rtri
                .as_ref()
                .ok_or(Error::MissingRelation("rtri".into()))?;
            match item {
                T1 => rt.mat.is_symmetric(),
                T2 => rt.mat == crate::bitset::BoolMat::full(rt.mat.rows(), rt.mat.cols()),
                T3 => {
                    // a ∈ R_rt⁽⁰⁾[a] implies a ∈ X^↓
                    let bottom_extent = p.down(&crate::bitset::BitSet::full(p.feature_count()))?;
                    (0..p.object_count()).all(|a| !rt.mat.get(a, a) || bottom_extent.contains(a))
                }
                T4 => {
                    // a ∈ R_rt⁽⁰⁾[a] implies A ⊆ R_rt⁽⁰⁾[a]
                    (0..p.object_count()).all(|a| {
                        !rt.mat.get(a, a)
                            || rt.mat.col(a) == crate::bitset::BitSet::full(p.object_count())
                    })
                }
                _ => unreachable!(),
            }
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorrespondenceRecord {
    pub axiom_valid: bool,
    pub fo_condition: bool,
    pub agree: bool,
}

/// Check one item on one context: model-check the axiom, evaluate the
/// first-order condition, compare.
pub fn correspondence_check(
    f: &EnrichedContext,
    lattice: &ConceptLattice,
    item: CorrespondenceItem,
) -> Result<CorrespondenceRecord> {
    if item.needs_triangle() && f.rtri.is_none() {
        return Err(Error::MissingRelation("rtri".into()));
    }
    let (lhs, rhs) = item.sequent();
    let axiom_valid = frame_valid(f, lattice, &lhs, &rhs)?;
    let fo_condition = first_order_condition(f, item)?;
    Ok(CorrespondenceRecord {
        axiom_valid,
        fo_condition,
        agree: axiom_valid == fo_condition,
    })
}
