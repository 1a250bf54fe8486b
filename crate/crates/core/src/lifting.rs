//! Embedding sets, Kripke frames, and approximation spaces into polarities.
//!
//! A set `S` lifts to the polarity `(S_A, S_X, I_{Δᶜ})`, whose concept
//! lattice is the powerset of `S`; a frame `(S, R)` lifts to the enriched
//! context `(P_S, I_{Rᶜ}, J_{Rᶜ})`, whose complex algebra is the frame's.
//! The verifiers in this module check those preservation statements
//! extensionally, together with the lifting of relation properties and of
//! composition. Kent rough formal contexts live here as well.

use crate::bitset::{all_subsets, BitSet, BoolMat};
use crate::error::{Error, Result};
use crate::lattice::{ConceptLattice, FormalConcept};
use crate::polarity::Polarity;
use crate::relations::{
    compose_rel, converse_relation, is_i_compatible, modal_op, EnrichedContext, ModalOp, RelSort,
    TypedRelation,
};

/// A set with a binary relation; an approximation space when `rel` is an
/// equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KripkeFrame {
    pub states: Vec<String>,
    pub rel: BoolMat,
}

impl KripkeFrame {
    pub fn new(states: Vec<String>, rel: BoolMat) -> Result<KripkeFrame> {
        if rel.rows() != states.len() || rel.cols() != states.len() {
            return Err(Error::DimensionMismatch {
                rows: rel.rows(),
                cols: rel.cols(),
                want_rows: states.len(),
                want_cols: states.len(),
            });
        }
        Ok(KripkeFrame { states, rel })
    }

    pub fn from_pairs(states: &[&str], pairs: &[(&str, &str)]) -> Result<KripkeFrame> {
        let names: Vec<String> = states.iter().map(|s| s.to_string()).collect();
        let mut rel = BoolMat::new(names.len(), names.len());
        for (u, v) in pairs {
            let i = names
                .iter()
                .position(|n| n == u)
                .ok_or_else(|| Error::UnknownIdentifier(u.to_string()))?;
            let j = names
                .iter()
                .position(|n| n == v)
                .ok_or_else(|| Error::UnknownIdentifier(v.to_string()))?;
            rel.set(i, j, true);
        }
        KripkeFrame::new(names, rel)
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn is_approximation_space(&self) -> bool {
        !self.states.is_empty() && self.rel.is_equivalence()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KripkeOp {
    /// `⟨R⟩Z = R⁻¹[Z]`
    Dia,
    /// `[R]Z = (R⁻¹[Zᶜ])ᶜ`
    Box,
    /// `[R⟩Z = (R⁻¹[Z])ᶜ`
    Impossible,
    /// `⟨R]Z = R⁻¹[Zᶜ]`
    Skeptic,
}

/// The four semantic operators of the powerset modal algebra of a frame.
pub fn kripke_modal_op(x: &KripkeFrame, op: KripkeOp, z: &BitSet) -> Result<BitSet> {
    if z.len() != x.len() {
        return Err(Error::CarrierMismatch {
            expected: x.len(),
            got: z.len(),
        });
    }
    // R⁻¹[Z] = {s : sRz for some z ∈ Z}
    let preimage = |z: &BitSet| {
        let mut out = BitSet::empty(x.len());
        for s in 0..x.len() {
            if !x.rel.row(s).inter(z).is_empty() {
                out.insert(s);
            }
        }
        out
    };
    Ok(match op {
        KripkeOp::Dia => preimage(z),
        KripkeOp::Box => preimage(&z.complement()).complement(),
        KripkeOp::Impossible => preimage(z).complement(),
        KripkeOp::Skeptic => preimage(&z.complement()),
    })
}

/// `P_S = (S_A, S_X, I_{Δᶜ})`. Object and feature copies print the same
/// base identifiers; the sorts disambiguate.
pub fn lift_set(s: &[String]) -> Result<Polarity> {
    let inc = BoolMat::from_fn(s.len(), s.len(), |i, j| i != j);
    Polarity::new(s.to_vec(), s.to_vec(), inc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftTag {
    /// `I_R ⊆ S_A×S_X`, `a I_R x` iff `aRx`
    I,
    /// `J_R ⊆ S_X×S_A`, `x J_R a` iff `xRa`
    J,
    /// `H_R ⊆ S_A×S_A`
    H,
    /// `K_R ⊆ S_X×S_X`
    K,
}

/// Lift a relation on `S` to one of its four typed copies.
pub fn lift_typed_relation(s_len: usize, r: &BoolMat, tag: LiftTag) -> Result<TypedRelation> {
    if r.rows() != s_len || r.cols() != s_len {
        return Err(Error::DimensionMismatch {
            rows: r.rows(),
            cols: r.cols(),
            want_rows: s_len,
            want_cols: s_len,
        });
    }
    let sort = match tag {
        LiftTag::I => RelSort::AX,
        LiftTag::J => RelSort::XA,
        LiftTag::H => RelSort::AA,
        LiftTag::K => RelSort::XX,
    };
    Ok(TypedRelation::new(sort, r.clone()))
}

/// `F_X = (P_S, I_{Rᶜ}, J_{Rᶜ})`, expanded with the triangle liftings
/// `H_{Rᶜ}` and `K_{Rᶜ}`. All relations on a lifted polarity are
/// I-compatible since every subset is Galois-stable there.
pub fn lift_kripke(x: &KripkeFrame) -> EnrichedContext {
    let base = lift_set(&x.states).expect("states are unique");
    let rc = x.rel.complement();
    let rbox = lift_typed_relation(x.len(), &rc, LiftTag::I).expect("sized");
    let rdia = lift_typed_relation(x.len(), &rc, LiftTag::J).expect("sized");
    let rtri = lift_typed_relation(x.len(), &rc, LiftTag::H).expect("sized");
    let ltri = lift_typed_relation(x.len(), &rc, LiftTag::K).expect("sized");
    EnrichedContext::new(base, rbox, rdia, Some(rtri), Some(ltri)).expect("liftings are compatible")
}

/// The canonical map `h : P ↦ (P_A, Pᶜ_X)` from subsets to lifted concepts.
pub fn powerset_embedding(p: &BitSet) -> FormalConcept {
    FormalConcept {
        extent: *p,
        intent: p.complement(),
    }
}

/// Outcome of an extensional verification; `detail` holds the first
/// counterexample found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub pass: bool,
    pub checked: usize,
    pub detail: Option<String>,
}

impl VerifyReport {
    fn pass(checked: usize) -> VerifyReport {
        VerifyReport {
            pass: true,
            checked,
            detail: None,
        }
    }

    fn fail(checked: usize, detail: String) -> VerifyReport {
        VerifyReport {
            pass: false,
            checked,
            detail: Some(detail),
        }
    }
}

/// Check that lifting a frame preserves its complex algebra: `h` is a lattice
/// isomorphism onto the lifted concept lattice and commutes with all four
/// modal operators.
pub fn verify_lifting_iso(x: &KripkeFrame) -> VerifyReport {
    let ctx = lift_kripke(x);
    let lat = ConceptLattice::enumerate(&ctx.base);
    let n = x.len();
    if lat.len() != (1usize << n) {
        return VerifyReport::fail(
            0,
            format!("expected {} concepts, found {}", 1usize << n, lat.len()),
        );
    }
    let mut checked = 0;
    for p in all_subsets(n) {
        let hp = powerset_embedding(&p);
        if lat.index_of(&hp).is_err() {
            return VerifyReport::fail(checked, format!("h({p:?}) is not a concept"));
        }
        for q in all_subsets(n) {
            let order_left = p.is_subset(&q);
            let order_right = hp.extent.is_subset(&powerset_embedding(&q).extent);
            if order_left != order_right {
                return VerifyReport::fail(checked, format!("h breaks the order at {p:?}, {q:?}"));
            }
        }
        let cases = [
            (KripkeOp::Dia, ModalOp::Diamond, "dia"),
            (KripkeOp::Box, ModalOp::Box, "box"),
            (KripkeOp::Impossible, ModalOp::RTriangle, "impossible"),
            (KripkeOp::Skeptic, ModalOp::LTriangle, "skeptic"),
        ];
        for (kop, mop, name) in cases {
            let classical = kripke_modal_op(x, kop, &p).expect("sized");
            let lifted = modal_op(&ctx, mop, &hp).expect("relations present");
            if powerset_embedding(&classical) != lifted {
                return VerifyReport::fail(
                    checked,
                    format!("{name} does not commute with h at P = {p:?}"),
                );
            }
            checked += 1;
        }
    }
    VerifyReport::pass(checked)
}

/// Untyped relation properties on a square boolean matrix.
pub mod untyped {
    use super::BoolMat;

    pub fn reflexive(r: &BoolMat) -> bool {
        r.is_reflexive()
    }

    pub fn transitive(r: &BoolMat) -> bool {
        r.is_transitive()
    }

    pub fn symmetric(r: &BoolMat) -> bool {
        r.is_symmetric()
    }

    /// `R ⊆ Δ`
    pub fn subdelta(r: &BoolMat) -> bool {
        (0..r.rows()).all(|i| (0..r.cols()).all(|j| !r.get(i, j) || i == j))
    }

    /// `R ⊆ R∘R`
    pub fn dense(r: &BoolMat) -> bool {
        r.le(&r.compose(r))
    }
}

/// Check the five property-lifting biconditionals for a relation on a set.
pub fn verify_property_lifting(s: &[String], r: &BoolMat) -> Result<VerifyReport> {
    let n = s.len();
    if r.rows() != n || r.cols() != n {
        return Err(Error::DimensionMismatch {
            rows: r.rows(),
            cols: r.cols(),
            want_rows: n,
            want_cols: n,
        });
    }
    let base = lift_set(s)?;
    let rc = r.complement();
    let delta_c = base.incidence().clone();
    let i_rc = lift_typed_relation(n, &rc, LiftTag::I)?;
    let j_rc = lift_typed_relation(n, &rc, LiftTag::J)?;
    let i_delta_c = TypedRelation::new(RelSort::AX, delta_c);
    let i_comp = compose_rel(&base, &i_rc, &i_rc)?;
    let j_comp = compose_rel(&base, &j_rc, &j_rc)?;
    let j_conv = converse_relation(&j_rc);

    let mut violations = Vec::new();
    let mut check = |name: &str, untyped_holds: bool, lifted_holds: bool| {
        if untyped_holds != lifted_holds {
            violations.push(format!(
                "{name}: untyped {untyped_holds}, lifted {lifted_holds}"
            ));
        }
    };
    check(
        "reflexive",
        untyped::reflexive(r),
        i_rc.included_in(&i_delta_c) && j_conv.included_in(&i_delta_c),
    );
    check(
        "transitive",
        untyped::transitive(r),
        i_rc.included_in(&i_comp) && j_rc.included_in(&j_comp),
    );
    check(
        "symmetric",
        untyped::symmetric(r),
        i_rc == j_conv && j_rc == converse_relation(&i_rc),
    );
    check(
        "subdelta",
        untyped::subdelta(r),
        i_delta_c.included_in(&i_rc) && i_delta_c.included_in(&j_conv),
    );
    check(
        "dense",
        untyped::dense(r),
        i_comp.included_in(&i_rc) && j_comp.included_in(&j_rc),
    );
    if violations.is_empty() {
        Ok(VerifyReport::pass(5))
    } else {
        Ok(VerifyReport::fail(5, violations.join("; ")))
    }
}

/// Check `I_{(R∘T)ᶜ} = I_{Rᶜ} ; I_{Tᶜ}` and the `J` version for one pair.
pub fn verify_composition_lifting(s: &[String], r: &BoolMat, t: &BoolMat) -> Result<bool> {
    let n = s.len();
    let base = lift_set(s)?;
    let composite_c = r.compose(t).complement();
    let lhs_i = lift_typed_relation(n, &composite_c, LiftTag::I)?;
    let rhs_i = compose_rel(
        &base,
        &lift_typed_relation(n, &r.complement(), LiftTag::I)?,
        &lift_typed_relation(n, &t.complement(), LiftTag::I)?,
    )?;
    let lhs_j = lift_typed_relation(n, &composite_c, LiftTag::J)?;
    let rhs_j = compose_rel(
        &base,
        &lift_typed_relation(n, &r.complement(), LiftTag::J)?,
        &lift_typed_relation(n, &t.complement(), LiftTag::J)?,
    )?;
    Ok(lhs_i == rhs_i && lhs_j == rhs_j)
}

/// A polarity with an equivalence on objects, inducing lax and strict
/// approximations of the incidence.
#[derive(Clone, Debug)]
pub struct KentContext {
    pub base: Polarity,
    pub e_rel: TypedRelation,
}

impl KentContext {
    pub fn new(base: Polarity, e_rel: TypedRelation) -> Result<KentContext> {
        if e_rel.sort != RelSort::AA {
            return Err(Error::InvalidKent(format!(
                "expected sort AA, got {}",
                e_rel.sort
            )));
        }
        e_rel.validate(&base)?;
        if !e_rel.mat.is_equivalence() {
            return Err(Error::InvalidKent(
                "relation is not an equivalence".to_string(),
            ));
        }
        Ok(KentContext { base, e_rel })
    }
}

/// Lax and strict approximations of `I` from an `AA` relation: `aRx` iff some
/// `E`-successor of `a` has `x`; `aSx` iff all of them do.
pub fn kent_relations(p: &Polarity, e: &BoolMat) -> (TypedRelation, TypedRelation) {
    let lax = e.compose(p.incidence());
    let mut strict = BoolMat::new(p.object_count(), p.feature_count());
    for a in 0..p.object_count() {
        strict.set_row(a, p.incidence().one_section(&e.row(a)));
    }
    (
        TypedRelation::new(RelSort::AX, lax),
        TypedRelation::new(RelSort::AX, strict),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KentReport {
    /// `R⁽⁰⁾[x]` and `S⁽⁰⁾[x]` are unions of equivalence blocks.
    pub e_definable: bool,
    pub e_compatible: bool,
    pub r_compatible: bool,
    pub s_compatible: bool,
    /// All three relations I-compatible.
    pub amenable: bool,
    /// `R;R ⊆ R` and `S ⊆ S;S`; only evaluated on amenable contexts.
    pub inclusions_hold: Option<bool>,
    /// `S ⊆ I` and `I ⊆ R`, guaranteed by reflexivity of `E`.
    pub reflexive_bounds: bool,
}

/// Compute the Kent approximations together with their structural report.
pub fn kent_approx(g: &KentContext) -> Result<(TypedRelation, TypedRelation, KentReport)> {
    let p = &g.base;
    let e = &g.e_rel.mat;
    let (lax, strict) = kent_relations(p, e);

    let block_closed = |rel: &TypedRelation| {
        (0..p.feature_count()).all(|x| {
            let section = rel.mat.col(x);
            let ok = section.iter().all(|a| e.row(a).is_subset(&section));
            ok
        })
    };
    let e_definable = block_closed(&lax) && block_closed(&strict);
    let e_compatible = is_i_compatible(p, &g.e_rel)?;
    let r_compatible = is_i_compatible(p, &lax)?;
    let s_compatible = is_i_compatible(p, &strict)?;
    let amenable = e_compatible && r_compatible && s_compatible;
    let inclusions_hold = if amenable {
        let rr = compose_rel(p, &lax, &lax)?;
        let ss = compose_rel(p, &strict, &strict)?;
        Some(rr.included_in(&lax) && strict.included_in(&ss))
    } else {
        None
    };
    let i = TypedRelation::incidence(p);
    let reflexive_bounds = strict.included_in(&i) && i.included_in(&lax);
    let report = KentReport {
        e_definable,
        e_compatible,
        r_compatible,
        s_compatible,
        amenable,
        inclusions_hold,
        reflexive_bounds,
    };
    Ok((lax, strict, report))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KentLemmaOutcome {
    /// Strict approximation not I-compatible: the lemma's precondition fails,
    /// nothing to check.
    PreconditionFailed,
    Checked {
        reflexive_agrees: bool,
        transitive_agrees: bool,
    },
}

impl KentLemmaOutcome {
    pub fn holds(&self) -> bool {
        matches!(
            self,
            KentLemmaOutcome::Checked {
                reflexive_agrees: true,
                transitive_agrees: true
            }
        )
    }
}

/// The two Kent biconditionals for an arbitrary `AA` relation in the
/// triangle role: `Δ ⊆ E` iff `S ⊆ I`, and `E∘E ⊆ E` iff `S ⊆ S;S`.
pub fn kent_lemma_check(p: &Polarity, e: &TypedRelation) -> Result<KentLemmaOutcome> {
    if e.sort != RelSort::AA {
        return Err(Error::UnsupportedSort(e.sort.to_string()));
    }
    e.validate(p)?;
    let (_, strict) = kent_relations(p, &e.mat);
    if !is_i_compatible(p, &strict)? {
        return Ok(KentLemmaOutcome::PreconditionFailed);
    }
    let i = TypedRelation::incidence(p);
    let reflexive_agrees = e.mat.is_reflexive() == strict.included_in(&i);
    let ss = compose_rel(p, &strict, &strict)?;
    let transitive_agrees = e.mat.is_transitive() == strict.included_in(&ss);
    Ok(KentLemmaOutcome::Checked {
        reflexive_agrees,
        transitive_agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polarity::ex1;
    use crate::relations::classify_context;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn lift_set_shapes() {
        let p = lift_set(&names(&["a", "b", "c"])).unwrap();
        assert!(!p.incident(0, 0) && p.incident(0, 1));
        assert_eq!(ConceptLattice::enumerate(&p).len(), 8);
        let single = lift_set(&names(&["a"])).unwrap();
        assert_eq!(ConceptLattice::enumerate(&single).len(), 2);
        let empty = lift_set(&[]).unwrap();
        assert_eq!(ConceptLattice::enumerate(&empty).len(), 1);
    }

    #[test]
    fn lift_typed_relation_tags() {
        let delta = BoolMat::identity(2);
        let i_delta = lift_typed_relation(2, &delta, LiftTag::I).unwrap();
        let p = lift_set(&names(&["a", "b"])).unwrap();
        // I_Δ is the complement of the lifted polarity's incidence
        assert_eq!(i_delta.mat, p.incidence().complement());
        let sym = BoolMat::from_fn(2, 2, |i, j| i != j);
        let h = lift_typed_relation(2, &sym, LiftTag::H).unwrap();
        assert_eq!(converse_relation(&h), h);
    }

    #[test]
    fn converses_commute_with_all_four_liftings() {
        for bits in 0..512u32 {
            let r = BoolMat::from_fn(3, 3, |i, j| bits & (1 << (i * 3 + j)) != 0);
            let rt = r.transpose();
            let check = |tag, mirror| {
                let lhs = converse_relation(&lift_typed_relation(3, &r, tag).unwrap());
                assert_eq!(lhs, lift_typed_relation(3, &rt, mirror).unwrap());
            };
            check(LiftTag::J, LiftTag::I);
            check(LiftTag::I, LiftTag::J);
            check(LiftTag::H, LiftTag::H);
            check(LiftTag::K, LiftTag::K);
        }
    }

    #[test]
    fn kripke_ops_on_equivalence() {
        // blocks {a}, {b,c}
        let x = KripkeFrame::from_pairs(
            &["a", "b", "c"],
            &[("a", "a"), ("b", "b"), ("c", "c"), ("b", "c"), ("c", "b")],
        )
        .unwrap();
        let z = BitSet::singleton(3, 1);
        assert_eq!(
            kripke_modal_op(&x, KripkeOp::Dia, &z).unwrap(),
            BitSet::from_indices(3, &[1, 2])
        );
        assert_eq!(
            kripke_modal_op(&x, KripkeOp::Box, &z).unwrap(),
            BitSet::empty(3)
        );
        assert_eq!(
            kripke_modal_op(&x, KripkeOp::Box, &BitSet::full(3)).unwrap(),
            BitSet::full(3)
        );
        assert_eq!(
            kripke_modal_op(&x, KripkeOp::Dia, &BitSet::empty(3)).unwrap(),
            BitSet::empty(3)
        );
        for z in all_subsets(3) {
            assert_eq!(
                kripke_modal_op(&x, KripkeOp::Impossible, &z).unwrap(),
                kripke_modal_op(&x, KripkeOp::Dia, &z).unwrap().complement()
            );
        }
    }

    #[test]
    fn lifted_frame_with_diagonal() {
        let x = KripkeFrame::from_pairs(&["a", "b"], &[("a", "a"), ("b", "b")]).unwrap();
        let ctx = lift_kripke(&x);
        assert_eq!(ctx.rbox.mat, *ctx.base.incidence());
    }

    #[test]
    fn lifted_equivalence_classifies_as_approximation_space() {
        let x = KripkeFrame::from_pairs(
            &["a", "b", "c"],
            &[("a", "a"), ("b", "b"), ("c", "c"), ("b", "c"), ("c", "b")],
        )
        .unwrap();
        assert!(x.is_approximation_space());
        let class = classify_context(&lift_kripke(&x)).unwrap();
        assert!(class.reflexive && class.symmetric && class.transitive && class.is_approx);
    }

    #[test]
    fn empty_relation_lifts_to_full_box() {
        let x = KripkeFrame::from_pairs(&["a", "b"], &[]).unwrap();
        let ctx = lift_kripke(&x);
        assert_eq!(ctx.rbox.mat, BoolMat::full(2, 2));
    }

    #[test]
    fn iso_for_small_frames() {
        for bits in 0..16u32 {
            let rel = BoolMat::from_fn(2, 2, |i, j| bits & (1 << (i * 2 + j)) != 0);
            let x = KripkeFrame::new(names(&["a", "b"]), rel).unwrap();
            let report = verify_lifting_iso(&x);
            assert!(report.pass, "failed: {:?}", report.detail);
        }
    }

    #[test]
    fn wrong_lift_breaks_the_iso() {
        // Using I_R instead of I_{Rᶜ} for the diagonal frame on three states
        // produces a five-element lattice instead of the powerset.
        let names3 = names(&["a", "b", "c"]);
        let delta = BoolMat::identity(3);
        let p = Polarity::new(names3.clone(), names3, delta).unwrap();
        assert_eq!(ConceptLattice::enumerate(&p).len(), 5);
    }

    #[test]
    fn property_lifting_cases() {
        let s = names(&["a", "b"]);
        let delta = BoolMat::identity(2);
        assert!(verify_property_lifting(&s, &delta).unwrap().pass);
        // R = {(a,b)}: not reflexive, and the typed inclusion fails too
        let r = BoolMat::from_fn(2, 2, |i, j| i == 0 && j == 1);
        let report = verify_property_lifting(&s, &r).unwrap();
        assert!(report.pass);
        assert!(!untyped::reflexive(&r));
        // full relation on a 2-set is an equivalence; lifted complement is empty
        let full = BoolMat::full(2, 2);
        assert!(verify_property_lifting(&s, &full).unwrap().pass);
        let base = lift_set(&s).unwrap();
        let lifted = lift_typed_relation(2, &full.complement(), LiftTag::I).unwrap();
        assert!(crate::relations::rel_property(
            &base,
            &lifted,
            crate::relations::RelProperty::Reflexive
        )
        .unwrap());
        assert!(crate::relations::rel_property(
            &base,
            &lifted,
            crate::relations::RelProperty::Transitive
        )
        .unwrap());
    }

    #[test]
    fn composition_lifting_pairs() {
        let s = names(&["a", "b"]);
        let delta = BoolMat::identity(2);
        assert!(verify_composition_lifting(&s, &delta, &delta).unwrap());
        let full = BoolMat::full(2, 2);
        let empty = BoolMat::new(2, 2);
        assert!(verify_composition_lifting(&s, &full, &empty).unwrap());
        for r_bits in 0..16u32 {
            for t_bits in 0..16u32 {
                let r = BoolMat::from_fn(2, 2, |i, j| r_bits & (1 << (i * 2 + j)) != 0);
                let t = BoolMat::from_fn(2, 2, |i, j| t_bits & (1 << (i * 2 + j)) != 0);
                assert!(verify_composition_lifting(&s, &r, &t).unwrap());
            }
        }
    }

    #[test]
    fn kent_with_diagonal_equivalence() {
        let p = ex1();
        let e = TypedRelation::new(RelSort::AA, BoolMat::identity(3));
        let g = KentContext::new(p.clone(), e).unwrap();
        let (lax, strict, report) = kent_approx(&g).unwrap();
        assert_eq!(lax, TypedRelation::incidence(&p));
        assert_eq!(strict, TypedRelation::incidence(&p));
        assert!(report.r_compatible && report.s_compatible);
        assert!(report.reflexive_bounds);
    }

    #[test]
    fn kent_with_all_pairs_equivalence() {
        let p = ex1();
        let e = TypedRelation::full(&p, RelSort::AA);
        let g = KentContext::new(p.clone(), e.clone()).unwrap();
        let (lax, strict, _) = kent_approx(&g).unwrap();
        // some object has y and z; none shares x with everyone
        for a in 0..3 {
            assert!(!lax.mat.get(a, 0) && lax.mat.get(a, 1) && lax.mat.get(a, 2));
            assert_eq!(strict.mat.row(a), BitSet::empty(3));
        }
        let outcome = kent_lemma_check(&p, &e).unwrap();
        assert!(outcome.holds());
    }

    #[test]
    fn kent_blocks_on_ex1() {
        let p = ex1();
        let e = TypedRelation::from_pairs(
            &p,
            RelSort::AA,
            &[("a", "a"), ("b", "b"), ("c", "c"), ("b", "c"), ("c", "b")],
        )
        .unwrap();
        let g = KentContext::new(p.clone(), e).unwrap();
        let (lax, strict, report) = kent_approx(&g).unwrap();
        let i = TypedRelation::incidence(&p);
        assert!(strict.included_in(&i) && i.included_in(&lax));
        assert!(report.e_definable);
    }

    #[test]
    fn non_equivalence_rejected() {
        let p = ex1();
        let e = TypedRelation::from_pairs(&p, RelSort::AA, &[("a", "b")]).unwrap();
        assert!(matches!(KentContext::new(p, e), Err(Error::InvalidKent(_))));
    }
}
