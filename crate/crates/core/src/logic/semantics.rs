//! Interpreting formulas on enriched contexts: models, satisfaction,
//! sequents, and frame validity.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lattice::{ConceptLattice, FormalConcept};
use crate::logic::formula::Formula;
use crate::relations::{modal_op, EnrichedContext, ModalOp, TypedRelation};

/// Atom names mapped to concepts of a fixed lattice.
pub type Valuation = BTreeMap<String, FormalConcept>;

/// Cap on `|lattice|^atoms` in [`frame_valid`].
pub const VALUATION_GUARD: u128 = 1_000_000;

/// An enriched context with its enumerated lattice and a valuation.
#[derive(Clone, Debug)]
pub struct Model {
    pub context: EnrichedContext,
    pub lattice: ConceptLattice,
    pub valuation: Valuation,
}

impl Model {
    pub fn new(context: EnrichedContext, valuation: Valuation) -> Result<Model> {
        let lattice = ConceptLattice::enumerate(&context.base);
        for concept in valuation.values() {
            lattice.index_of(concept)?;
        }
        Ok(Model {
            context,
            lattice,
            valuation,
        })
    }

    pub fn interpret(&self, f: &Formula) -> Result<FormalConcept> {
        interpret(&self.context, &self.lattice, &self.valuation, f)
    }
}

/// Homomorphic extension of a valuation to all formulas.
pub fn interpret(
    ctx: &EnrichedContext,
    lattice: &ConceptLattice,
    valuation: &Valuation,
    f: &Formula,
) -> Result<FormalConcept> {
    let p = &ctx.base;
    match f {
        Formula::Top => Ok(*lattice.concept(lattice.top())),
        Formula::Bot => Ok(*lattice.concept(lattice.bottom())),
        Formula::Atom(name) => valuation
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnboundAtom(name.clone())),
        Formula::And(l, r) => {
            let (cl, cr) = (
                interpret(ctx, lattice, valuation, l)?,
                interpret(ctx, lattice, valuation, r)?,
            );
            let extent = cl.extent.inter(&cr.extent);
            Ok(FormalConcept {
                intent: p.up(&extent)?,
                extent,
            })
        }
        Formula::Or(l, r) => {
            let (cl, cr) = (
                interpret(ctx, lattice, valuation, l)?,
                interpret(ctx, lattice, valuation, r)?,
            );
            let intent = cl.intent.inter(&cr.intent);
            Ok(FormalConcept {
                extent: p.down(&intent)?,
                intent,
            })
        }
        Formula::Box_(g) => modal_op(ctx, ModalOp::Box, &interpret(ctx, lattice, valuation, g)?),
        Formula::Dia(g) => modal_op(
            ctx,
            ModalOp::Diamond,
            &interpret(ctx, lattice, valuation, g)?,
        ),
        Formula::BlackBox(g) => modal_op(
            ctx,
            ModalOp::BlackBox,
            &interpret(ctx, lattice, valuation, g)?,
        ),
        Formula::BlackDia(g) => modal_op(
            ctx,
            ModalOp::BlackDiamond,
            &interpret(ctx, lattice, valuation, g)?,
        ),
        Formula::RTri(g) => modal_op(
            ctx,
            ModalOp::RTriangle,
            &interpret(ctx, lattice, valuation, g)?,
        ),
        Formula::LTri(g) => modal_op(
            ctx,
            ModalOp::LTriangle,
            &interpret(ctx, lattice, valuation, g)?,
        ),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SatSide {
    /// Object membership: `M, a ⊩ φ`.
    Member,
    /// Feature description: `M, x ≻ φ`.
    Describes,
}

/// Satisfaction via the interpretation map: membership in the extent, or
/// occurrence in the intent.
pub fn satisfies(m: &Model, elem: usize, side: SatSide, f: &Formula) -> Result<bool> {
    let c = m.interpret(f)?;
    Ok(match side {
        SatSide::Member => c.extent.contains(elem),
        SatSide::Describes => c.intent.contains(elem),
    })
}

/// Satisfaction by the recursive clauses, written independently of
/// [`interpret`] so the two can be cross-checked.
pub fn satisfies_recursive(m: &Model, elem: usize, side: SatSide, f: &Formula) -> Result<bool> {
    let p = &m.context.base;
    let forall_objects = |pred: &dyn Fn(usize) -> Result<bool>| -> Result<bool> {
        for a in 0..p.object_count() {
            if !pred(a)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let forall_features = |pred: &dyn Fn(usize) -> Result<bool>| -> Result<bool> {
        for x in 0..p.feature_count() {
            if !pred(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let rel_holds = |r: &TypedRelation, row: usize, col: usize| r.mat.get(row, col);
    match (side, f) {
        (SatSide::Member, Formula::Top) => Ok(true),
        (SatSide::Describes, Formula::Bot) => Ok(true),
        (SatSide::Member, Formula::Bot) => {
            // a ⊩ ⊥ iff a has every feature
            forall_features(&|x| Ok(p.incident(elem, x)))
        }
        (SatSide::Describes, Formula::Top) => forall_objects(&|a| Ok(p.incident(a, elem))),
        (SatSide::Member, Formula::Atom(name)) => {
            let c = m
                .valuation
                .get(name)
                .ok_or_else(|| Error::UnboundAtom(name.clone()))?;
            Ok(c.extent.contains(elem))
        }
        (SatSide::Describes, Formula::Atom(name)) => {
            let c = m
                .valuation
                .get(name)
                .ok_or_else(|| Error::UnboundAtom(name.clone()))?;
            Ok(c.intent.contains(elem))
        }
        (SatSide::Member, Formula::And(l, r)) => {
            Ok(satisfies_recursive(m, elem, side, l)? && satisfies_recursive(m, elem, side, r)?)
        }
        (SatSide::Describes, Formula::And(_, _)) => forall_objects(&|a| {
            Ok(!satisfies_recursive(m, a, SatSide::Member, f)? || p.incident(a, elem))
        }),
        (SatSide::Describes, Formula::Or(l, r)) => {
            Ok(satisfies_recursive(m, elem, side, l)? && satisfies_recursive(m, elem, side, r)?)
        }
        (SatSide::Member, Formula::Or(_, _)) => forall_features(&|x| {
            Ok(!satisfies_recursive(m, x, SatSide::Describes, f)? || p.incident(elem, x))
        }),
        (SatSide::Member, Formula::Box_(g)) => forall_features(&|x| {
            Ok(!satisfies_recursive(m, x, SatSide::Describes, g)?
                || rel_holds(&m.context.rbox, elem, x))
        }),
        (SatSide::Describes, Formula::Box_(_)) => forall_objects(&|a| {
            Ok(!satisfies_recursive(m, a, SatSide::Member, f)? || p.incident(a, elem))
        }),
        (SatSide::Describes, Formula::Dia(g)) => forall_objects(&|a| {
            Ok(!satisfies_recursive(m, a, SatSide::Member, g)?
                || rel_holds(&m.context.rdia, elem, a))
        }),
        (SatSide::Member, Formula::Dia(_)) => forall_features(&|x| {
            Ok(!satisfies_recursive(m, x, SatSide::Describes, f)? || p.incident(elem, x))
        }),
        // the black connectives run on the adjoint relations
        (SatSide::Member, Formula::BlackBox(g)) => {
            let rblack = m.context.rblack_box();
            forall_features(&|x| {
                Ok(!satisfies_recursive(m, x, SatSide::Describes, g)? || rblack.mat.get(elem, x))
            })
        }
        (SatSide::Describes, Formula::BlackBox(_)) => forall_objects(&|a| {
            Ok(!satisfies_recursive(m, a, SatSide::Member, f)? || p.incident(a, elem))
        }),
        (SatSide::Describes, Formula::BlackDia(g)) => {
            let rblackdia = m.context.rblack_dia();
            forall_objects(&|a| {
                Ok(!satisfies_recursive(m, a, SatSide::Member, g)? || rblackdia.mat.get(elem, a))
            })
        }
        (SatSide::Member, Formula::BlackDia(_)) => forall_features(&|x| {
            Ok(!satisfies_recursive(m, x, SatSide::Describes, f)? || p.incident(elem, x))
        }),
        (SatSide::Member, Formula::RTri(g)) => {
            let r = m
                .context
                .rtri
                .as_ref()
                .ok_or(Error::MissingRelation("rtri".into()))?;
            forall_objects(&|b| {
                Ok(!satisfies_recursive(m, b, SatSide::Member, g)? || r.mat.get(elem, b))
            })
        }
        (SatSide::Describes, Formula::RTri(_)) => forall_objects(&|a| {
            Ok(!satisfies_recursive(m, a, SatSide::Member, f)? || p.incident(a, elem))
        }),
        (SatSide::Describes, Formula::LTri(g)) => {
            let r = m
                .context
                .ltri
                .as_ref()
                .ok_or(Error::MissingRelation("ltri".into()))?;
            forall_features(&|y| {
                Ok(!satisfies_recursive(m, y, SatSide::Describes, g)? || r.mat.get(elem, y))
            })
        }
        (SatSide::Member, Formula::LTri(_)) => forall_features(&|x| {
            Ok(!satisfies_recursive(m, x, SatSide::Describes, f)? || p.incident(elem, x))
        }),
    }
}

/// `M ⊨ φ ⊢ ψ`: extent inclusion of the interpretations.
pub fn sequent_holds(
    ctx: &EnrichedContext,
    lattice: &ConceptLattice,
    valuation: &Valuation,
    f: &Formula,
    g: &Formula,
) -> Result<bool> {
    let cf = interpret(ctx, lattice, valuation, f)?;
    let cg = interpret(ctx, lattice, valuation, g)?;
    Ok(cf.extent.is_subset(&cg.extent))
}

/// Frame validity: the sequent holds under every valuation of its atoms into
/// the concept lattice. The search space `|lattice|^atoms` is guarded.
pub fn frame_valid(
    ctx: &EnrichedContext,
    lattice: &ConceptLattice,
    f: &Formula,
    g: &Formula,
) -> Result<bool> {
    let mut atoms: Vec<String> = f.atoms().into_iter().collect();
    for a in g.atoms() {
        if !atoms.contains(&a) {
            atoms.push(a);
        }
    }
    let n = lattice.len() as u128;
    let size = n.checked_pow(atoms.len() as u32).unwrap_or(u128::MAX);
    if size > VALUATION_GUARD {
        return Err(Error::SearchSpaceExceeded {
            size,
            guard: VALUATION_GUARD,
        });
    }
    let mut assignment = vec![0usize; atoms.len()];
    loop {
        let valuation: Valuation = atoms
            .iter()
            .zip(&assignment)
            .map(|(name, &i)| (name.clone(), *lattice.concept(i)))
            .collect();
        if !sequent_holds(ctx, lattice, &valuation, f, g)? {
            return Ok(false);
        }
        // advance the mixed-radix counter
        let mut k = 0;
        loop {
            if k == assignment.len() {
                return Ok(true);
            }
            assignment[k] += 1;
            if assignment[k] < lattice.len() {
                break;
            }
            assignment[k] = 0;
            k += 1;
        }
    }
}
