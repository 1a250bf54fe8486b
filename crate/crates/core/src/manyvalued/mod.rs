//! Many-valued polarities over a finite Heyting algebra: A-valued sets and
//! relations, the A-Galois connection, enriched A-contexts, the A-lifting of
//! sets and Kripke frames, and the many-valued reflexivity correspondence.

pub mod heyting;

pub use heyting::{Elem, HeytingAlgebra};

use crate::error::{Error, Result};
use crate::polarity::Polarity;

/// Guard on `|algebra|^|carrier|` enumerations.
pub const MV_GUARD: u128 = 1_000_000;

/// A map from a carrier into the algebra, by carrier position.
pub type AvSet = Vec<Elem>;

/// An algebra-valued matrix; rows index the first carrier of the relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl AMatrix {
    pub fn new(rows: usize, cols: usize, fill: Elem) -> AMatrix {
        AMatrix {
            rows,
            cols,
            data: vec![fill; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Elem) -> AMatrix {
        let mut m = AMatrix::new(rows, cols, 0);
        for r in 0..rows {
            for c in 0..cols {
                m.data[r * cols + c] = f(r, c);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    /// Pointwise order in the algebra.
    pub fn le(&self, alg: &HeytingAlgebra, other: &AMatrix) -> bool {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .all(|(&a, &b)| alg.le(a, b))
    }
}

/// `R⁽¹⁾[f] : c ↦ ⋀_r (f(r) → R(r,c))`.
pub fn one_section(alg: &HeytingAlgebra, m: &AMatrix, f: &AvSet) -> AvSet {
    debug_assert_eq!(f.len(), m.rows());
    (0..m.cols())
        .map(|c| alg.meet_all((0..m.rows()).map(|r| alg.imp(f[r], m.get(r, c)))))
        .collect()
}

/// `R⁽⁰⁾[u] : r ↦ ⋀_c (u(c) → R(r,c))`.
pub fn zero_section(alg: &HeytingAlgebra, m: &AMatrix, u: &AvSet) -> AvSet {
    debug_assert_eq!(u.len(), m.cols());
    (0..m.rows())
        .map(|r| alg.meet_all((0..m.cols()).map(|c| alg.imp(u[c], m.get(r, c)))))
        .collect()
}

/// A-subsethood `S(f, g) = ⋀ (f(w) → g(w))`.
pub fn subsethood(alg: &HeytingAlgebra, f: &AvSet, g: &AvSet) -> Elem {
    debug_assert_eq!(f.len(), g.len());
    alg.meet_all(f.iter().zip(g).map(|(&a, &b)| alg.imp(a, b)))
}

pub fn pointwise_le(alg: &HeytingAlgebra, f: &AvSet, g: &AvSet) -> bool {
    f.iter().zip(g).all(|(&a, &b)| alg.le(a, b))
}

/// The weighted singleton `{α\w}`: `α` at `w`, bottom elsewhere.
pub fn weighted_singleton(alg: &HeytingAlgebra, len: usize, w: usize, alpha: Elem) -> AvSet {
    let mut f = vec![alg.bot(); len];
    f[w] = alpha;
    f
}

/// Iterate all of `A^len` in mixed-radix order.
pub fn all_avsets(alg: &HeytingAlgebra, len: usize) -> Result<impl Iterator<Item = AvSet> + '_> {
    let size = (alg.size() as u128)
        .checked_pow(len as u32)
        .unwrap_or(u128::MAX);
    if size > MV_GUARD {
        return Err(Error::SearchSpaceExceeded {
            size,
            guard: MV_GUARD,
        });
    }
    let base = alg.size() as u128;
    Ok((0..size).map(move |mut k| {
        (0..len)
            .map(|_| {
                let d = (k % base) as Elem;
                k /= base;
                d
            })
            .collect()
    }))
}

/// An A-valued polarity `(A, X, I)` with `I : A×X → 𝐀`.
#[derive(Clone, Debug)]
pub struct APolarity {
    pub algebra: HeytingAlgebra,
    pub objects: Vec<String>,
    pub features: Vec<String>,
    pub incidence: AMatrix,
}

impl APolarity {
    pub fn new(
        algebra: HeytingAlgebra,
        objects: Vec<String>,
        features: Vec<String>,
        incidence: AMatrix,
    ) -> Result<APolarity> {
        if incidence.rows() != objects.len() || incidence.cols() != features.len() {
            return Err(Error::DimensionMismatch {
                rows: incidence.rows(),
                cols: incidence.cols(),
                want_rows: objects.len(),
                want_cols: features.len(),
            });
        }
        Ok(APolarity {
            algebra,
            objects,
            features,
            incidence,
        })
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn feature_count(&self) -> usize {
        self.features.len()
    }

    pub fn up(&self, f: &AvSet) -> AvSet {
        one_section(&self.algebra, &self.incidence, f)
    }

    pub fn down(&self, u: &AvSet) -> AvSet {
        zero_section(&self.algebra, &self.incidence, u)
    }

    pub fn extent_stable(&self, f: &AvSet) -> bool {
        &self.down(&self.up(f)) == f
    }

    pub fn intent_stable(&self, u: &AvSet) -> bool {
        &self.up(&self.down(u)) == u
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MvOrientation {
    /// Relation `A×X → 𝐀`, like `R_□`.
    AX,
    /// Relation `X×A → 𝐀`, like `R_◇`.
    XA,
}

/// I-compatibility on weighted singletons: all `R⁽⁰⁾[{α\·}]` and
/// `R⁽¹⁾[{α\·}]` sections must be stable.
pub fn mv_is_i_compatible(p: &APolarity, r: &AMatrix, orient: MvOrientation) -> Result<bool> {
    let alg = &p.algebra;
    let (want_rows, want_cols) = match orient {
        MvOrientation::AX => (p.object_count(), p.feature_count()),
        MvOrientation::XA => (p.feature_count(), p.object_count()),
    };
    if r.rows() != want_rows || r.cols() != want_cols {
        return Err(Error::DimensionMismatch {
            rows: r.rows(),
            cols: r.cols(),
            want_rows,
            want_cols,
        });
    }
    let row_stable = |f: &AvSet| match orient {
        MvOrientation::AX => p.extent_stable(f),
        MvOrientation::XA => p.intent_stable(f),
    };
    let col_stable = |f: &AvSet| match orient {
        MvOrientation::AX => p.intent_stable(f),
        MvOrientation::XA => p.extent_stable(f),
    };
    for alpha in alg.elements() {
        for c in 0..r.cols() {
            let s = zero_section(alg, r, &weighted_singleton(alg, r.cols(), c, alpha));
            if !row_stable(&s) {
                return Ok(false);
            }
        }
        for row in 0..r.rows() {
            let s = one_section(alg, r, &weighted_singleton(alg, r.rows(), row, alpha));
            if !col_stable(&s) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A formal A-concept: a stable pair `(f, u)` with `f^↑ = u`, `u^↓ = f`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AConcept {
    pub extent: AvSet,
    pub intent: AvSet,
}

/// Enumerate all A-concepts by closing every `u ∈ 𝐀^X`, deduplicated and
/// sorted by extent.
pub fn mv_enumerate_concepts(p: &APolarity) -> Result<Vec<AConcept>> {
    let mut seen = std::collections::BTreeSet::new();
    for u in all_avsets(&p.algebra, p.feature_count())? {
        let f = p.down(&u);
        let u2 = p.up(&f);
        seen.insert((f, u2));
    }
    Ok(seen
        .into_iter()
        .map(|(extent, intent)| AConcept { extent, intent })
        .collect())
}

/// An enriched A-context; both relations are checked MV-I-compatible.
#[derive(Clone, Debug)]
pub struct AEnrichedContext {
    pub base: APolarity,
    pub rbox: AMatrix,
    pub rdia: AMatrix,
}

impl AEnrichedContext {
    pub fn new(base: APolarity, rbox: AMatrix, rdia: AMatrix) -> Result<AEnrichedContext> {
        if !mv_is_i_compatible(&base, &rbox, MvOrientation::AX)? {
            return Err(Error::NotICompatible("rbox".to_string()));
        }
        if !mv_is_i_compatible(&base, &rdia, MvOrientation::XA)? {
            return Err(Error::NotICompatible("rdia".to_string()));
        }
        Ok(AEnrichedContext { base, rbox, rdia })
    }

    /// `[R_□]c = (R_□⁽⁰⁾[u], ·^↑)`.
    pub fn box_op(&self, c: &AConcept) -> AConcept {
        let extent = zero_section(&self.base.algebra, &self.rbox, &c.intent);
        let intent = self.base.up(&extent);
        AConcept { extent, intent }
    }

    /// `⟨R_◇⟩c = (·^↓, R_◇⁽⁰⁾[f])`.
    pub fn dia_op(&self, c: &AConcept) -> AConcept {
        let intent = zero_section(&self.base.algebra, &self.rdia, &c.extent);
        let extent = self.base.down(&intent);
        AConcept { extent, intent }
    }
}

/// An algebra-valued Kripke frame `(W, R)`.
#[derive(Clone, Debug)]
pub struct AKripkeFrame {
    pub algebra: HeytingAlgebra,
    pub worlds: Vec<String>,
    pub rel: AMatrix,
}

impl AKripkeFrame {
    pub fn new(algebra: HeytingAlgebra, worlds: Vec<String>, rel: AMatrix) -> Result<AKripkeFrame> {
        if rel.rows() != worlds.len() || rel.cols() != worlds.len() {
            return Err(Error::DimensionMismatch {
                rows: rel.rows(),
                cols: rel.cols(),
                want_rows: worlds.len(),
                want_cols: worlds.len(),
            });
        }
        Ok(AKripkeFrame {
            algebra,
            worlds,
            rel,
        })
    }

    /// `[R]f(w) = ⋀_v (R(w,v) → f(v))`.
    pub fn box_op(&self, f: &AvSet) -> AvSet {
        let alg = &self.algebra;
        (0..self.worlds.len())
            .map(|w| {
                alg.meet_all((0..self.worlds.len()).map(|v| alg.imp(self.rel.get(w, v), f[v])))
            })
            .collect()
    }

    /// `⟨R⟩f(w) = ⋁_v (R(w,v) ∧ f(v))`.
    pub fn dia_op(&self, f: &AvSet) -> AvSet {
        let alg = &self.algebra;
        (0..self.worlds.len())
            .map(|w| {
                alg.join_all((0..self.worlds.len()).map(|v| alg.meet(self.rel.get(w, v), f[v])))
            })
            .collect()
    }

    /// `R(w,w) = ⊤` for all `w`.
    pub fn is_reflexive(&self) -> bool {
        (0..self.worlds.len()).all(|w| self.rel.get(w, w) == self.algebra.top())
    }
}

/// Feature index of the pair `(α, v)` in a lifted polarity: features are
/// grouped by world, algebra-major within each group.
pub fn lifted_feature_index(alg: &HeytingAlgebra, v: usize, alpha: Elem) -> usize {
    v * alg.size() + alpha as usize
}

/// The A-lifting of a set: `P_W = (W, 𝐀×W, I_Δ)` with
/// `I_Δ(w, (α,v)) = Δ(w,v) → α`.
pub fn mv_lift_set(alg: &HeytingAlgebra, worlds: &[String]) -> APolarity {
    let n = worlds.len();
    let mut features = Vec::with_capacity(n * alg.size());
    for v in worlds {
        for alpha in alg.elements() {
            features.push(format!("({},{})", alg.element_name(alpha), v));
        }
    }
    let incidence = AMatrix::from_fn(n, n * alg.size(), |w, fx| {
        let v = fx / alg.size();
        let alpha = (fx % alg.size()) as Elem;
        if w == v {
            alpha
        } else {
            alg.top()
        }
    });
    APolarity::new(alg.clone(), worlds.to_vec(), features, incidence).expect("sized")
}

/// The A-lifting of an A-Kripke frame:
/// `I_R(w, (α,v)) = R(w,v) → α` and `J_R((α,w), v) = R(w,v) → α`.
pub fn mv_lift_kripke(x: &AKripkeFrame) -> Result<AEnrichedContext> {
    let alg = &x.algebra;
    let n = x.worlds.len();
    let base = mv_lift_set(alg, &x.worlds);
    let rbox = AMatrix::from_fn(n, n * alg.size(), |w, fx| {
        let v = fx / alg.size();
        let alpha = (fx % alg.size()) as Elem;
        alg.imp(x.rel.get(w, v), alpha)
    });
    let rdia = AMatrix::from_fn(n * alg.size(), n, |fx, v| {
        let w = fx / alg.size();
        let alpha = (fx % alg.size()) as Elem;
        alg.imp(x.rel.get(w, v), alpha)
    });
    AEnrichedContext::new(base, rbox, rdia)
}

/// Everything the A-lifting of a frame must preserve, checked over all
/// `f ∈ 𝐀^W`: stability of every map, `[R]f = I_R⁽⁰⁾[f^↑]`,
/// `⟨R⟩f = (J_R⁽⁰⁾[f])^↓`, and the reflexivity biconditional
/// (`R` reflexive iff `I_R ≤ I_Δ` pointwise).
pub fn mv_verify_preservation(x: &AKripkeFrame) -> Result<crate::lifting::VerifyReport> {
    let alg = &x.algebra;
    let ctx = mv_lift_kripke(x)?;
    let base = &ctx.base;
    let mut checked = 0;
    for f in all_avsets(alg, x.worlds.len())? {
        if !base.extent_stable(&f) {
            return Ok(fail(
                checked,
                format!("{f:?} is not stable in the lifted polarity"),
            ));
        }
        let up = base.up(&f);
        let lhs_box = x.box_op(&f);
        let rhs_box = zero_section(alg, &ctx.rbox, &up);
        if lhs_box != rhs_box {
            return Ok(fail(checked, format!("box differs at f = {f:?}")));
        }
        let lhs_dia = x.dia_op(&f);
        let rhs_dia = base.down(&zero_section(alg, &ctx.rdia, &f));
        if lhs_dia != rhs_dia {
            return Ok(fail(checked, format!("dia differs at f = {f:?}")));
        }
        checked += 3;
    }
    let pointwise = ctx.rbox.le(alg, &base.incidence);
    if x.is_reflexive() != pointwise {
        return Ok(fail(checked, "reflexivity biconditional fails".to_string()));
    }
    Ok(crate::lifting::VerifyReport {
        pass: true,
        checked,
        detail: None,
    })
}

fn fail(checked: usize, detail: String) -> crate::lifting::VerifyReport {
    crate::lifting::VerifyReport {
        pass: false,
        checked,
        detail: Some(detail),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MvCorrespondenceRecord {
    pub axiom_valid: bool,
    pub pointwise_cond: bool,
    pub agree: bool,
}

/// The many-valued reflexivity correspondence: `□c ≤ c` on every stable
/// concept iff `R_□ ≤ I` pointwise. Axiom validity quantifies over all
/// stable concepts.
pub fn mv_reflex_correspondence(f: &AEnrichedContext) -> Result<MvCorrespondenceRecord> {
    let alg = &f.base.algebra;
    let mut axiom_valid = true;
    for c in mv_enumerate_concepts(&f.base)? {
        let boxed = f.box_op(&c);
        if !pointwise_le(alg, &boxed.extent, &c.extent) {
            axiom_valid = false;
            break;
        }
    }
    let pointwise_cond = f.rbox.le(alg, &f.base.incidence);
    Ok(MvCorrespondenceRecord {
        axiom_valid,
        pointwise_cond,
        agree: axiom_valid == pointwise_cond,
    })
}

/// Axiom validity restricted to the meet-generators `({α\x}^↓, {α\x}^{↓↑})`;
/// must agree with the full quantification.
pub fn mv_reflex_on_generators(f: &AEnrichedContext) -> bool {
    let alg = &f.base.algebra;
    for x in 0..f.base.feature_count() {
        for alpha in alg.elements() {
            let u = weighted_singleton(alg, f.base.feature_count(), x, alpha);
            let extent = f.base.down(&u);
            let intent = f.base.up(&extent);
            let c = AConcept { extent, intent };
            let boxed = f.box_op(&c);
            if !pointwise_le(alg, &boxed.extent, &c.extent) {
                return false;
            }
        }
    }
    true
}

/// Encode a crisp polarity over the two-element Boolean algebra.
pub fn from_crisp(p: &Polarity) -> APolarity {
    let alg = HeytingAlgebra::bool2();
    let incidence = AMatrix::from_fn(p.object_count(), p.feature_count(), |a, x| {
        if p.incident(a, x) {
            1
        } else {
            0
        }
    });
    APolarity::new(alg, p.objects().to_vec(), p.features().to_vec(), incidence).expect("sized")
}

pub fn avset_from_bitset(s: &crate::bitset::BitSet) -> AvSet {
    (0..s.len())
        .map(|i| if s.contains(i) { 1 } else { 0 })
        .collect()
}

pub fn avset_to_bitset(f: &AvSet) -> crate::bitset::BitSet {
    let mut s = crate::bitset::BitSet::empty(f.len());
    for (i, &v) in f.iter().enumerate() {
        if v != 0 {
            s.insert(i);
        }
    }
    s
}
