//! Typed relations on a polarity and the modal structure they induce.
//!
//! A relation of sort `AX` lives in `A×X`, `XA` in `X×A`, `AA` in `A×A`, and
//! `XX` in `X×X`. Sections of a relation are written with the `(0)`/`(1)`
//! superscripts of the derivation operators: `R⁽⁰⁾[V'] = {u : ∀v∈V', uRv}`
//! and `R⁽¹⁾[U'] = {v : ∀u∈U', uRv}`.

use crate::bitset::{BitSet, BoolMat};
use crate::error::{Error, Result};
use crate::lattice::FormalConcept;
use crate::polarity::{Polarity, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelSort {
    AX,
    XA,
    AA,
    XX,
}

impl RelSort {
    /// (row carrier, column carrier) sides for this sort.
    pub fn carriers(self) -> (Side, Side) {
        match self {
            RelSort::AX => (Side::Extent, Side::Intent),
            RelSort::XA => (Side::Intent, Side::Extent),
            RelSort::AA => (Side::Extent, Side::Extent),
            RelSort::XX => (Side::Intent, Side::Intent),
        }
    }
}

impl std::fmt::Display for RelSort {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self)
    }
}

fn carrier_size(p: &Polarity, side: Side) -> usize {
    match side {
        Side::Extent => p.object_count(),
        Side::Intent => p.feature_count(),
    }
}

/// A boolean relation carrying its sort.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TypedRelation {
    pub sort: RelSort,
    pub mat: BoolMat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelDir {
    R0,
    R1,
}

impl TypedRelation {
    pub fn new(sort: RelSort, mat: BoolMat) -> TypedRelation {
        TypedRelation { sort, mat }
    }

    pub fn empty(p: &Polarity, sort: RelSort) -> TypedRelation {
        let (r, c) = sort.carriers();
        TypedRelation::new(sort, BoolMat::new(carrier_size(p, r), carrier_size(p, c)))
    }

    pub fn full(p: &Polarity, sort: RelSort) -> TypedRelation {
        let (r, c) = sort.carriers();
        TypedRelation::new(sort, BoolMat::full(carrier_size(p, r), carrier_size(p, c)))
    }

    /// The incidence relation itself, as a relation of sort `AX`.
    pub fn incidence(p: &Polarity) -> TypedRelation {
        TypedRelation::new(RelSort::AX, p.incidence().clone())
    }

    pub fn from_pairs(
        p: &Polarity,
        sort: RelSort,
        pairs: &[(&str, &str)],
    ) -> Result<TypedRelation> {
        let (rs, cs) = sort.carriers();
        let lookup = |side: Side, name: &str| match side {
            Side::Extent => p.object_index(name),
            Side::Intent => p.feature_index(name),
        };
        let mut mat = BoolMat::new(carrier_size(p, rs), carrier_size(p, cs));
        for (u, v) in pairs {
            mat.set(lookup(rs, u)?, lookup(cs, v)?, true);
        }
        Ok(TypedRelation::new(sort, mat))
    }

    pub fn validate(&self, p: &Polarity) -> Result<()> {
        let (rs, cs) = self.sort.carriers();
        let want_rows = carrier_size(p, rs);
        let want_cols = carrier_size(p, cs);
        if self.mat.rows() != want_rows || self.mat.cols() != want_cols {
            return Err(Error::DimensionMismatch {
                rows: self.mat.rows(),
                cols: self.mat.cols(),
                want_rows,
                want_cols,
            });
        }
        Ok(())
    }

    /// Pointwise inclusion into another relation of the same sort.
    pub fn included_in(&self, other: &TypedRelation) -> bool {
        self.sort == other.sort && self.mat.le(&other.mat)
    }
}

/// `R⁽⁰⁾[s]` (s over the column carrier) or `R⁽¹⁾[s]` (s over the row carrier).
pub fn rel_apply(p: &Polarity, r: &TypedRelation, dir: RelDir, s: &BitSet) -> Result<BitSet> {
    r.validate(p)?;
    match dir {
        RelDir::R0 => {
            if s.len() != r.mat.cols() {
                return Err(Error::CarrierMismatch {
                    expected: r.mat.cols(),
                    got: s.len(),
                });
            }
            Ok(r.mat.zero_section(s))
        }
        RelDir::R1 => {
            if s.len() != r.mat.rows() {
                return Err(Error::CarrierMismatch {
                    expected: r.mat.rows(),
                    got: s.len(),
                });
            }
            Ok(r.mat.one_section(s))
        }
    }
}

/// I-compatibility via singleton sections: `R⁽⁰⁾` of every co-carrier
/// singleton and `R⁽¹⁾` of every carrier singleton must be Galois-stable.
pub fn is_i_compatible(p: &Polarity, r: &TypedRelation) -> Result<bool> {
    r.validate(p)?;
    let (row_side, col_side) = r.sort.carriers();
    for c in 0..r.mat.cols() {
        if !p.is_stable(row_side, &r.mat.col(c))? {
            return Ok(false);
        }
    }
    for row in 0..r.mat.rows() {
        if !p.is_stable(col_side, &r.mat.row(row))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Transpose with the sort flipped `AX ↔ XA`: sends `R_□` to `R_◆` and
/// `R_◇` to `R_■`. Applying it twice is the identity.
pub fn adjoint_relation(r: &TypedRelation) -> Result<TypedRelation> {
    let sort = match r.sort {
        RelSort::AX => RelSort::XA,
        RelSort::XA => RelSort::AX,
        other => return Err(Error::UnsupportedSort(other.to_string())),
    };
    Ok(TypedRelation::new(sort, r.mat.transpose()))
}

/// Relational converse: transpose with `AX ↔ XA`; `AA` and `XX` keep their sort.
pub fn converse_relation(r: &TypedRelation) -> TypedRelation {
    let sort = match r.sort {
        RelSort::AX => RelSort::XA,
        RelSort::XA => RelSort::AX,
        s => s,
    };
    TypedRelation::new(sort, r.mat.transpose())
}

/// I-composition `R ; T` for two relations of the same sort `AX` or `XA`.
///
/// Sort `AX`: `(R;T)⁽⁰⁾[x] = R⁽⁰⁾[I⁽¹⁾[T⁽⁰⁾[x]]]` column by column.
/// Sort `XA`: `(R;T)⁽⁰⁾[a] = R⁽⁰⁾[I⁽⁰⁾[T⁽⁰⁾[a]]]`.
pub fn compose_rel(p: &Polarity, r: &TypedRelation, t: &TypedRelation) -> Result<TypedRelation> {
    if r.sort != t.sort {
        return Err(Error::UnsupportedSort(format!("{} vs {}", r.sort, t.sort)));
    }
    r.validate(p)?;
    t.validate(p)?;
    match r.sort {
        RelSort::AX => {
            let mut mat = BoolMat::new(r.mat.rows(), r.mat.cols());
            for x in 0..r.mat.cols() {
                let t0 = t.mat.col(x);
                let routed = p.up(&t0)?;
                mat.set_col(x, r.mat.zero_section(&routed));
            }
            Ok(TypedRelation::new(RelSort::AX, mat))
        }
        RelSort::XA => {
            let mut mat = BoolMat::new(r.mat.rows(), r.mat.cols());
            for a in 0..r.mat.cols() {
                let t0 = t.mat.col(a);
                let routed = p.down(&t0)?;
                mat.set_col(a, r.mat.zero_section(&routed));
            }
            Ok(TypedRelation::new(RelSort::XA, mat))
        }
        other => Err(Error::UnsupportedSort(other.to_string())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelProperty {
    Reflexive,
    Transitive,
    SubDelta,
    Dense,
}

/// Typed relation properties for sorts `AX` and `XA`.
///
/// For `T` of sort `XA` the reflexivity and sub-delta clauses are the mirror
/// ones: `T⁻¹ ⊆ I` and `I ⊆ T⁻¹`.
pub fn rel_property(p: &Polarity, r: &TypedRelation, prop: RelProperty) -> Result<bool> {
    r.validate(p)?;
    let i = TypedRelation::incidence(p);
    match (r.sort, prop) {
        (RelSort::AX, RelProperty::Reflexive) => Ok(r.included_in(&i)),
        (RelSort::AX, RelProperty::SubDelta) => Ok(i.included_in(r)),
        (RelSort::XA, RelProperty::Reflexive) => Ok(converse_relation(r).included_in(&i)),
        (RelSort::XA, RelProperty::SubDelta) => Ok(i.included_in(&converse_relation(r))),
        (RelSort::AX | RelSort::XA, RelProperty::Transitive) => {
            Ok(r.included_in(&compose_rel(p, r, r)?))
        }
        (RelSort::AX | RelSort::XA, RelProperty::Dense) => Ok(compose_rel(p, r, r)?.included_in(r)),
        (other, _) => Err(Error::UnsupportedSort(other.to_string())),
    }
}

/// A polarity enriched with modal relations.
///
/// `rbox` and `rdia` induce the box and diamond on the concept lattice;
/// `rtri`/`ltri`, when present, induce the two negative modalities. The
/// verifying constructor rejects relations that are not I-compatible; the
/// permissive one keeps them and marks the context unverified, matching the
/// situation in which the operators happen to be well defined anyway.
#[derive(Clone, Debug)]
pub struct EnrichedContext {
    pub base: Polarity,
    pub rbox: TypedRelation,
    pub rdia: TypedRelation,
    pub rtri: Option<TypedRelation>,
    pub ltri: Option<TypedRelation>,
    verified: bool,
}

fn expect_sort(r: &TypedRelation, sort: RelSort, name: &str) -> Result<()> {
    if r.sort != sort {
        return Err(Error::UnsupportedSort(format!(
            "{name} must have sort {sort}, got {}",
            r.sort
        )));
    }
    Ok(())
}

impl EnrichedContext {
    pub fn new(
        base: Polarity,
        rbox: TypedRelation,
        rdia: TypedRelation,
        rtri: Option<TypedRelation>,
        ltri: Option<TypedRelation>,
    ) -> Result<EnrichedContext> {
        let ctx = Self::new_permissive(base, rbox, rdia, rtri, ltri)?;
        for (name, rel) in ctx.relations() {
            if !is_i_compatible(&ctx.base, rel)? {
                return Err(Error::NotICompatible(name.to_string()));
            }
        }
        Ok(EnrichedContext {
            verified: true,
            ..ctx
        })
    }

    /// Accepts relations without the compatibility check and tags the context
    /// as unverified. Dimension checks still apply.
    pub fn new_permissive(
        base: Polarity,
        rbox: TypedRelation,
        rdia: TypedRelation,
        rtri: Option<TypedRelation>,
        ltri: Option<TypedRelation>,
    ) -> Result<EnrichedContext> {
        expect_sort(&rbox, RelSort::AX, "rbox")?;
        expect_sort(&rdia, RelSort::XA, "rdia")?;
        rbox.validate(&base)?;
        rdia.validate(&base)?;
        if let Some(r) = &rtri {
            expect_sort(r, RelSort::AA, "rtri")?;
            r.validate(&base)?;
        }
        if let Some(r) = &ltri {
            expect_sort(r, RelSort::XX, "ltri")?;
            r.validate(&base)?;
        }
        Ok(EnrichedContext {
            base,
            rbox,
            rdia,
            rtri,
            ltri,
            verified: false,
        })
    }

    /// Context whose box and diamond are the identity operators, optionally
    /// carrying triangle relations. Used when only `▷`/`◁` matter.
    pub fn with_identity_modalities(
        base: Polarity,
        rtri: Option<TypedRelation>,
        ltri: Option<TypedRelation>,
    ) -> Result<EnrichedContext> {
        let rbox = TypedRelation::incidence(&base);
        let rdia = converse_relation(&rbox);
        EnrichedContext::new(base, rbox, rdia, rtri, ltri)
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    fn relations(&self) -> Vec<(&'static str, &TypedRelation)> {
        let mut v = vec![("rbox", &self.rbox), ("rdia", &self.rdia)];
        if let Some(r) = &self.rtri {
            v.push(("rtri", r));
        }
        if let Some(r) = &self.ltri {
            v.push(("ltri", r));
        }
        v
    }

    /// `R_■`, the adjoint of the diamond relation (sort `AX`).
    pub fn rblack_box(&self) -> TypedRelation {
        adjoint_relation(&self.rdia).expect("rdia has sort XA")
    }

    /// `R_◆`, the adjoint of the box relation (sort `XA`).
    pub fn rblack_dia(&self) -> TypedRelation {
        adjoint_relation(&self.rbox).expect("rbox has sort AX")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModalOp {
    Box,
    Diamond,
    BlackBox,
    BlackDiamond,
    RTriangle,
    LTriangle,
}

/// Apply one of the six modal operators to a concept.
///
/// The result is computed straight from the displayed formulas; on an
/// I-compatible context it is always a formal concept of the base polarity.
pub fn modal_op(f: &EnrichedContext, op: ModalOp, c: &FormalConcept) -> Result<FormalConcept> {
    let p = &f.base;
    match op {
        ModalOp::Box => box_like(p, &f.rbox, c),
        ModalOp::BlackBox => box_like(p, &f.rblack_box(), c),
        ModalOp::Diamond => dia_like(p, &f.rdia, c),
        ModalOp::BlackDiamond => dia_like(p, &f.rblack_dia(), c),
        ModalOp::RTriangle => {
            let r = f
                .rtri
                .as_ref()
                .ok_or(Error::MissingRelation("rtri".into()))?;
            // [R_▷⟩c = (R_▷⁽⁰⁾[extent], ·^↑)
            let extent = rel_apply(p, r, RelDir::R0, &c.extent)?;
            Ok(FormalConcept {
                intent: p.up(&extent)?,
                extent,
            })
        }
        ModalOp::LTriangle => {
            let r = f
                .ltri
                .as_ref()
                .ok_or(Error::MissingRelation("ltri".into()))?;
            // ⟨R_◁]c = (·^↓, R_◁⁽⁰⁾[intent])
            let intent = rel_apply(p, r, RelDir::R0, &c.intent)?;
            Ok(FormalConcept {
                extent: p.down(&intent)?,
                intent,
            })
        }
    }
}

fn box_like(p: &Polarity, r: &TypedRelation, c: &FormalConcept) -> Result<FormalConcept> {
    let extent = rel_apply(p, r, RelDir::R0, &c.intent)?;
    Ok(FormalConcept {
        intent: p.up(&extent)?,
        extent,
    })
}

fn dia_like(p: &Polarity, r: &TypedRelation, c: &FormalConcept) -> Result<FormalConcept> {
    let intent = rel_apply(p, r, RelDir::R0, &c.extent)?;
    Ok(FormalConcept {
        extent: p.down(&intent)?,
        intent,
    })
}

/// First-order frame conditions of an enriched context.
///
/// Both composition orders of the co-approximation condition are reported;
/// the two coincide on symmetric contexts but not in general.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContextClass {
    /// `R_□ ; R_■ ⊆ I`
    pub is_approx: bool,
    /// `I ⊆ R_□ ; R_■`
    pub is_co_approx_box_black: bool,
    /// `I ⊆ R_■ ; R_□`
    pub is_co_approx_black_box: bool,
    /// `R_□ ⊆ I` and `R_■ ⊆ I`
    pub reflexive: bool,
    /// `R_◇ = R_◆`, equivalently `R_■ = R_□`
    pub symmetric: bool,
    /// `R_□ ⊆ R_□;R_□` and `R_◇ ⊆ R_◇;R_◇`
    pub transitive: bool,
    /// `I ⊆ R_□` and `I ⊆ R_■`
    pub subdelta: bool,
    /// `R_□;R_□ ⊆ R_□` and `R_◇;R_◇ ⊆ R_◇`
    pub dense: bool,
}

pub fn classify_context(f: &EnrichedContext) -> Result<ContextClass> {
    let p = &f.base;
    let i = TypedRelation::incidence(p);
    let rblack = f.rblack_box();
    let box_black = compose_rel(p, &f.rbox, &rblack)?;
    let black_box = compose_rel(p, &rblack, &f.rbox)?;
    Ok(ContextClass {
        is_approx: box_black.included_in(&i),
        is_co_approx_box_black: i.included_in(&box_black),
        is_co_approx_black_box: i.included_in(&black_box),
        reflexive: f.rbox.included_in(&i) && rblack.included_in(&i),
        symmetric: f.rdia == f.rblack_dia(),
        transitive: rel_property(p, &f.rbox, RelProperty::Transitive)?
            && rel_property(p, &f.rdia, RelProperty::Transitive)?,
        subdelta: i.included_in(&f.rbox) && i.included_in(&rblack),
        dense: rel_property(p, &f.rbox, RelProperty::Dense)?
            && rel_property(p, &f.rdia, RelProperty::Dense)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ConceptLattice;
    use crate::polarity::ex1;

    /// The non-compatible relation from the running example.
    fn ex1_r(p: &Polarity) -> TypedRelation {
        TypedRelation::from_pairs(p, RelSort::AX, &[("a", "y"), ("a", "z"), ("b", "x")]).unwrap()
    }

    #[test]
    fn rel_apply_on_ex1() {
        let p = ex1();
        let r = ex1_r(&p);
        let x = p.feature_set(&["x"]).unwrap();
        assert_eq!(
            rel_apply(&p, &r, RelDir::R0, &x).unwrap(),
            p.object_set(&["b"]).unwrap()
        );
        let a = p.object_set(&["a"]).unwrap();
        assert_eq!(
            rel_apply(&p, &r, RelDir::R1, &a).unwrap(),
            p.feature_set(&["y", "z"]).unwrap()
        );
        let empty = TypedRelation::empty(&p, RelSort::AX);
        assert_eq!(
            rel_apply(&p, &empty, RelDir::R0, &x).unwrap(),
            BitSet::empty(3)
        );
        assert_eq!(
            rel_apply(&p, &empty, RelDir::R0, &BitSet::empty(3)).unwrap(),
            BitSet::full(3)
        );
    }

    #[test]
    fn compatibility_checks() {
        let p = ex1();
        assert!(!is_i_compatible(&p, &ex1_r(&p)).unwrap());
        assert!(is_i_compatible(&p, &TypedRelation::incidence(&p)).unwrap());
        // empty sections of EX1 are stable, so the empty relation is compatible here
        for sort in [RelSort::AX, RelSort::XA, RelSort::AA, RelSort::XX] {
            assert!(is_i_compatible(&p, &TypedRelation::empty(&p, sort)).unwrap());
        }
    }

    #[test]
    fn adjoint_is_an_involution_matching_sections() {
        let p = ex1();
        let r = ex1_r(&p);
        let adj = adjoint_relation(&r).unwrap();
        assert_eq!(adj.sort, RelSort::XA);
        for b in crate::bitset::all_subsets(3) {
            assert_eq!(
                rel_apply(&p, &adj, RelDir::R0, &b).unwrap(),
                rel_apply(&p, &r, RelDir::R1, &b).unwrap()
            );
        }
        assert_eq!(adjoint_relation(&adj).unwrap(), r);
        assert!(adjoint_relation(&TypedRelation::empty(&p, RelSort::AA)).is_err());
    }

    #[test]
    fn converse_laws() {
        let p = ex1();
        let r = ex1_r(&p);
        assert_eq!(converse_relation(&converse_relation(&r)), r);
        let sym = TypedRelation::from_pairs(&p, RelSort::AA, &[("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(converse_relation(&sym), sym);
    }

    #[test]
    fn box_is_identity_in_the_running_example() {
        // R is not I-compatible, yet [R] and its r1-adjoint act as the identity
        let p = ex1();
        let r = ex1_r(&p);
        let ctx = EnrichedContext::new_permissive(
            p.clone(),
            r.clone(),
            converse_relation(&r),
            None,
            None,
        )
        .unwrap();
        assert!(!ctx.is_verified());
        let lat = ConceptLattice::enumerate(&p);
        for c in lat.concepts() {
            assert_eq!(modal_op(&ctx, ModalOp::Box, c).unwrap(), *c);
            assert_eq!(modal_op(&ctx, ModalOp::BlackDiamond, c).unwrap(), *c);
        }
    }

    #[test]
    fn box_with_incidence_is_identity() {
        let p = ex1();
        let ctx = EnrichedContext::with_identity_modalities(p.clone(), None, None).unwrap();
        let lat = ConceptLattice::enumerate(&p);
        for c in lat.concepts() {
            assert_eq!(modal_op(&ctx, ModalOp::Box, c).unwrap(), *c);
            assert_eq!(modal_op(&ctx, ModalOp::Diamond, c).unwrap(), *c);
        }
    }

    #[test]
    fn box_with_empty_relation_collapses() {
        let p = ex1();
        let ctx = EnrichedContext::new(
            p.clone(),
            TypedRelation::empty(&p, RelSort::AX),
            TypedRelation::empty(&p, RelSort::XA),
            None,
            None,
        )
        .unwrap();
        let lat = ConceptLattice::enumerate(&p);
        let top = lat.concept(lat.top());
        let bottom = lat.concept(lat.bottom());
        let mid = lat
            .concepts()
            .iter()
            .find(|c| c.extent == p.object_set(&["a"]).unwrap())
            .unwrap();
        assert_eq!(modal_op(&ctx, ModalOp::Box, top).unwrap(), *top);
        assert_eq!(modal_op(&ctx, ModalOp::Box, mid).unwrap(), *bottom);
        assert_eq!(modal_op(&ctx, ModalOp::Box, bottom).unwrap(), *bottom);
    }

    #[test]
    fn missing_triangle_relation_errors() {
        let p = ex1();
        let ctx = EnrichedContext::with_identity_modalities(p.clone(), None, None).unwrap();
        let lat = ConceptLattice::enumerate(&p);
        assert!(matches!(
            modal_op(&ctx, ModalOp::RTriangle, lat.concept(0)),
            Err(Error::MissingRelation(_))
        ));
    }

    #[test]
    fn composition_with_incidence_is_identity() {
        let p = ex1();
        let i = TypedRelation::incidence(&p);
        assert_eq!(compose_rel(&p, &i, &i).unwrap(), i);
    }

    #[test]
    fn composition_on_lifted_diagonal() {
        // On the lifted two-element set, I_{Δᶜ} ; I_{Δᶜ} = I_{(Δ∘Δ)ᶜ} = I_{Δᶜ}.
        let p = Polarity::from_pairs(&["a", "b"], &["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        let i = TypedRelation::incidence(&p);
        assert_eq!(compose_rel(&p, &i, &i).unwrap(), i);
    }

    #[test]
    fn composition_with_empty_left_factor() {
        let p = ex1();
        let i = TypedRelation::incidence(&p);
        let empty = TypedRelation::empty(&p, RelSort::AX);
        let comp = compose_rel(&p, &empty, &i).unwrap();
        // ∅⁽⁰⁾[Y] is A when Y is empty and ∅ otherwise; route through x↓↑
        for x in 0..3 {
            let routed = p.up(&p.down(&BitSet::singleton(3, x)).unwrap()).unwrap();
            let expected = if routed.is_empty() {
                BitSet::full(3)
            } else {
                BitSet::empty(3)
            };
            assert_eq!(comp.mat.col(x), expected);
        }
    }

    #[test]
    fn properties_of_incidence() {
        let p = ex1();
        let i = TypedRelation::incidence(&p);
        for prop in [
            RelProperty::Reflexive,
            RelProperty::Transitive,
            RelProperty::SubDelta,
            RelProperty::Dense,
        ] {
            assert!(rel_property(&p, &i, prop).unwrap());
        }
    }

    #[test]
    fn reflexivity_is_pointwise_inclusion() {
        let p = ex1();
        let inside = TypedRelation::from_pairs(&p, RelSort::AX, &[("a", "y"), ("a", "z")]).unwrap();
        assert!(rel_property(&p, &inside, RelProperty::Reflexive).unwrap());
        assert!(!rel_property(&p, &ex1_r(&p), RelProperty::Reflexive).unwrap());
    }

    #[test]
    fn classify_identity_context() {
        let p = ex1();
        let ctx = EnrichedContext::with_identity_modalities(p, None, None).unwrap();
        let class = classify_context(&ctx).unwrap();
        assert!(class.is_approx);
        assert!(class.is_co_approx_box_black);
        assert!(class.is_co_approx_black_box);
        assert!(class.reflexive && class.symmetric && class.transitive);
        assert!(class.subdelta && class.dense);
    }

    #[test]
    fn compatible_zero_sections_are_stable() {
        let p = ex1();
        let i = TypedRelation::incidence(&p);
        for y in crate::bitset::all_subsets(3) {
            let section = rel_apply(&p, &i, RelDir::R0, &y).unwrap();
            assert!(p.is_stable(Side::Extent, &section).unwrap());
        }
    }
}
