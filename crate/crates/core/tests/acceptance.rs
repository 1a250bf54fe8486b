//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the counts it verified (run with `--nocapture` to see them). Everything
//! is exact; the few stated wall-clock budgets are asserted.

use std::collections::BTreeMap;
use std::time::Instant;

use roughfca::bitset::{all_subsets, BitSet, BoolMat};
use roughfca::dempster::{
    canonical_relation_classical, canonical_relation_conceptual, s5_law_check, ConceptualProbSpace,
    PartitionProbSpace, Rational,
};
use roughfca::generate::{
    all_equivalences, all_matrices, all_partitions, all_square_relations, random_enriched_context,
    random_kripke_frame, rng_for, ContextParams,
};
use roughfca::lattice::{enumerate_concepts_oracle, ConceptLattice};
use roughfca::lifting::{
    kent_approx, kent_lemma_check, lift_kripke, lift_set, verify_composition_lifting,
    verify_lifting_iso, verify_property_lifting, KentContext, KentLemmaOutcome, KripkeFrame,
};
use roughfca::logic::{
    algebra_class_check, context_from_modal_algebra, correspondence_check, AlgebraClass,
    CorrespondenceItem, ALL_ITEMS,
};
use roughfca::manyvalued::{self as mv, AEnrichedContext, AKripkeFrame, AMatrix, HeytingAlgebra};
use roughfca::polarity::{Polarity, Side};
use roughfca::relations::{
    classify_context, converse_relation, is_i_compatible, modal_op, rel_property, EnrichedContext,
    ModalOp, RelProperty, RelSort, TypedRelation,
};
use roughfca::tmodel::{
    lift_t_model, sorites_search, step_lemma_check, ClassicalTModel, ConceptualTModel, TruthMode,
};

fn names(n: usize, prefix: &str) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn subset_from_bits(n: usize, bits: u64) -> BitSet {
    let mut s = BitSet::empty(n);
    for i in 0..n {
        if bits & (1 << i) != 0 {
            s.insert(i);
        }
    }
    s
}

#[test]
fn criterion_01_powerset_isomorphism() {
    let start = Instant::now();
    for n in 0..=4usize {
        let p = lift_set(&names(n, "s")).unwrap();
        let lat = ConceptLattice::enumerate(&p);
        assert_eq!(lat.len(), 1 << n, "lifted {n}-set must have 2^{n} concepts");
        for bits in 0u64..(1 << n) {
            let s = subset_from_bits(n, bits);
            let h = roughfca::lattice::FormalConcept {
                extent: s,
                intent: s.complement(),
            };
            let hi = lat.index_of(&h).expect("h lands in the lattice");
            for qbits in 0u64..(1 << n) {
                let q = subset_from_bits(n, qbits);
                let hq = roughfca::lattice::FormalConcept {
                    extent: q,
                    intent: q.complement(),
                };
                let qi = lat.index_of(&hq).unwrap();
                assert_eq!(
                    s.is_subset(&q),
                    lat.le(hi, qi),
                    "h must be an order isomorphism"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "criterion 1 budget exceeded: {elapsed:?}"
    );
    println!("criterion 01 (powerset isomorphism, |S| <= 4): PASS in {elapsed:?}");
}

#[test]
fn criterion_02_paper_examples() {
    // (a) identity incidence on a 3-set yields 5 concepts, complspan 8
    let s3 = names(3, "s");
    let identity = Polarity::new(s3.clone(), s3.clone(), BoolMat::identity(3)).unwrap();
    assert_eq!(ConceptLattice::enumerate(&identity).len(), 5);
    let lifted = lift_set(&s3).unwrap();
    assert_eq!(ConceptLattice::enumerate(&lifted).len(), 8);

    // (b) the non-compatible relation whose operators are still the identity
    let p = Polarity::from_pairs(
        &["a", "b", "c"],
        &["x", "y", "z"],
        &[("a", "y"), ("a", "z")],
    )
    .unwrap();
    let r =
        TypedRelation::from_pairs(&p, RelSort::AX, &[("a", "y"), ("a", "z"), ("b", "x")]).unwrap();
    assert!(!is_i_compatible(&p, &r).unwrap());
    let ctx =
        EnrichedContext::new_permissive(p.clone(), r.clone(), converse_relation(&r), None, None)
            .unwrap();
    let lat = ConceptLattice::enumerate(&p);
    assert_eq!(lat.len(), 3);
    for c in lat.concepts() {
        assert_eq!(modal_op(&ctx, ModalOp::Box, c).unwrap(), *c);
        assert_eq!(modal_op(&ctx, ModalOp::BlackDiamond, c).unwrap(), *c);
    }
    println!("criterion 02 (paper example reproduction): PASS");
}

#[test]
fn criterion_03_commuting_diagram() {
    let start = Instant::now();
    let mut checked = 0usize;
    for rel in all_square_relations(3) {
        let x = KripkeFrame::new(names(3, "s"), rel).unwrap();
        let report = verify_lifting_iso(&x);
        assert!(report.pass, "frame {checked} failed: {:?}", report.detail);
        checked += 1;
    }
    assert_eq!(checked, 512);
    let mut rng = rng_for(20_250_503);
    for k in 0..200 {
        let x = random_kripke_frame(&mut rng, 5, 0.4);
        let report = verify_lifting_iso(&x);
        assert!(report.pass, "random frame {k} failed: {:?}", report.detail);
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "criterion 3 budget exceeded: {elapsed:?}"
    );
    println!(
        "criterion 03 (commuting diagram, 512 exhaustive + 200 random frames): PASS in {elapsed:?}"
    );
}

#[test]
fn criterion_04_property_lifting() {
    let start = Instant::now();
    let mut checked = 0usize;
    for n in 0..=3usize {
        let s = names(n, "s");
        for rel in all_square_relations(n) {
            let report = verify_property_lifting(&s, &rel).unwrap();
            assert!(
                report.pass,
                "relation over {n} elements failed: {:?}",
                report.detail
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 2 + 16 + 512);
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "criterion 4 budget exceeded: {elapsed:?}"
    );
    println!("criterion 04 (property lifting, all |S| <= 3): PASS in {elapsed:?}");
}

#[test]
fn criterion_05_composition_lifting() {
    let s2 = names(2, "s");
    let mut checked = 0usize;
    for r in all_square_relations(2) {
        for t in all_square_relations(2) {
            assert!(verify_composition_lifting(&s2, &r, &t).unwrap());
            checked += 1;
        }
    }
    assert_eq!(checked, 256);
    let s4 = names(4, "s");
    let mut rng = rng_for(505);
    for _ in 0..500 {
        let r = random_kripke_frame(&mut rng, 4, 0.5).rel;
        let t = random_kripke_frame(&mut rng, 4, 0.5).rel;
        assert!(verify_composition_lifting(&s4, &r, &t).unwrap());
    }
    println!("criterion 05 (composition lifting, 256 exhaustive + 500 random pairs): PASS");
}

/// All I-compatible (I, R_□, R_◇) triples over |A| = |X| = 2.
fn exhaustive_two_by_two() -> Vec<EnrichedContext> {
    let mut out = Vec::new();
    for inc in all_matrices(2, 2) {
        let p = Polarity::new(names(2, "a"), names(2, "x"), inc).unwrap();
        let boxes: Vec<TypedRelation> = all_matrices(2, 2)
            .map(|m| TypedRelation::new(RelSort::AX, m))
            .filter(|r| is_i_compatible(&p, r).unwrap())
            .collect();
        let dias: Vec<TypedRelation> = all_matrices(2, 2)
            .map(|m| TypedRelation::new(RelSort::XA, m))
            .filter(|r| is_i_compatible(&p, r).unwrap())
            .collect();
        for rbox in &boxes {
            for rdia in &dias {
                out.push(
                    EnrichedContext::new(p.clone(), rbox.clone(), rdia.clone(), None, None)
                        .unwrap(),
                );
            }
        }
    }
    out
}

/// All I-compatible (I, R_▷) pairs over |A| = |X| = 2, with identity box
/// and diamond.
fn exhaustive_two_by_two_triangles() -> Vec<EnrichedContext> {
    let mut out = Vec::new();
    for inc in all_matrices(2, 2) {
        let p = Polarity::new(names(2, "a"), names(2, "x"), inc).unwrap();
        for m in all_matrices(2, 2) {
            let rtri = TypedRelation::new(RelSort::AA, m);
            if !is_i_compatible(&p, &rtri).unwrap() {
                continue;
            }
            out.push(
                EnrichedContext::with_identity_modalities(p.clone(), Some(rtri), None).unwrap(),
            );
        }
    }
    out
}

/// The seeded random corpus shared by criteria 6 and 7: 500 I-compatible
/// contexts with carriers up to 4x4, including reflexive- and
/// subdelta-biased ones, all carrying triangle relations.
fn random_corpus() -> Vec<EnrichedContext> {
    let mut out = Vec::with_capacity(500);
    for k in 0..500u64 {
        let mut params = ContextParams::new(2 + (k % 3) as usize, 2 + ((k / 3) % 3) as usize);
        params.triangles = true;
        params.density = 0.35 + 0.1 * ((k % 4) as f64);
        match k % 5 {
            3 => params.reflexive = true,
            4 => params.subdelta = true,
            _ => {}
        }
        out.push(random_enriched_context(params, 42 + k).unwrap());
    }
    out
}

#[test]
fn criterion_06_correspondence_suite() {
    let start = Instant::now();
    let mut agreements = 0usize;

    let plain_items: Vec<CorrespondenceItem> = ALL_ITEMS
        .iter()
        .copied()
        .filter(|i| !i.needs_triangle())
        .collect();
    let tri_items: Vec<CorrespondenceItem> = ALL_ITEMS
        .iter()
        .copied()
        .filter(|i| i.needs_triangle())
        .collect();

    for ctx in exhaustive_two_by_two() {
        let lat = ConceptLattice::enumerate(&ctx.base);
        for &item in &plain_items {
            let rec = correspondence_check(&ctx, &lat, item).unwrap();
            assert!(
                rec.agree,
                "item {item:?} disagreed on an exhaustive 2x2 context"
            );
            agreements += 1;
        }
    }
    for ctx in exhaustive_two_by_two_triangles() {
        let lat = ConceptLattice::enumerate(&ctx.base);
        for &item in &tri_items {
            let rec = correspondence_check(&ctx, &lat, item).unwrap();
            assert!(
                rec.agree,
                "item {item:?} disagreed on an exhaustive 2x2 triangle context"
            );
            agreements += 1;
        }
    }

    let mut per_item: BTreeMap<&'static str, usize> = BTreeMap::new();
    for ctx in random_corpus() {
        let lat = ConceptLattice::enumerate(&ctx.base);
        for item in ALL_ITEMS {
            let rec = correspondence_check(&ctx, &lat, item).unwrap();
            assert!(rec.agree, "item {item:?} disagreed on a random context");
            *per_item.entry(item.describe()).or_default() += 1;
            agreements += 1;
        }
    }
    for (item, count) in &per_item {
        assert!(
            *count >= 500,
            "item {item} ran on {count} < 500 random contexts"
        );
    }

    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "criterion 6 budget exceeded: {elapsed:?}"
    );
    println!(
        "criterion 06 (correspondence suite, {agreements} agreement checks, 16 items): PASS in {elapsed:?}"
    );
}

#[test]
fn criterion_07_sahlqvist_consequences() {
    let mut instances = [0usize; 6];
    let mut corpus = exhaustive_two_by_two();
    corpus.extend(random_corpus());
    for ctx in &corpus {
        let p = &ctx.base;
        let class = classify_context(ctx).unwrap();
        let box_reflexive = rel_property(p, &ctx.rbox, RelProperty::Reflexive).unwrap();
        let dia_reflexive = rel_property(p, &ctx.rdia, RelProperty::Reflexive).unwrap();
        let box_subdelta = rel_property(p, &ctx.rbox, RelProperty::SubDelta).unwrap();
        let dia_subdelta = rel_property(p, &ctx.rdia, RelProperty::SubDelta).unwrap();
        // 1. reflexive implies a conceptual approximation space
        if box_reflexive && dia_reflexive {
            assert!(class.is_approx);
            instances[0] += 1;
        }
        // 2. sub-delta implies a conceptual co-approximation space
        if box_subdelta && dia_subdelta {
            assert!(class.is_co_approx_black_box);
            instances[1] += 1;
        }
        // 3/4. sub-delta implies transitive
        if box_subdelta {
            assert!(rel_property(p, &ctx.rbox, RelProperty::Transitive).unwrap());
            instances[2] += 1;
        }
        if dia_subdelta {
            assert!(rel_property(p, &ctx.rdia, RelProperty::Transitive).unwrap());
            instances[3] += 1;
        }
        // 5/6. reflexive implies dense
        if box_reflexive {
            assert!(rel_property(p, &ctx.rbox, RelProperty::Dense).unwrap());
            instances[4] += 1;
        }
        if dia_reflexive {
            assert!(rel_property(p, &ctx.rdia, RelProperty::Dense).unwrap());
            instances[5] += 1;
        }
    }
    assert!(
        instances.iter().all(|&k| k > 50),
        "some implication was barely exercised: {instances:?}"
    );
    println!(
        "criterion 07 (Sahlqvist consequences on the criterion-6 corpus, antecedent counts {instances:?}): PASS"
    );
}

fn random_conceptual_t_model(seed: u64) -> ConceptualTModel {
    let mut rng = rng_for(seed);
    let p = roughfca::generate::random_polarity(&mut rng, 4, 4, 0.5);
    let lattice = ConceptLattice::enumerate(&p);
    let mut rels = BTreeMap::new();
    let mut valuation = BTreeMap::new();
    for atom in ["p", "q"] {
        rels.insert(
            atom.to_string(),
            roughfca::generate::random_compatible_relation(
                &mut rng,
                &p,
                RelSort::AX,
                0.6,
                true,
                false,
            ),
        );
        let idx = rand::Rng::random_range(&mut rng, 0..lattice.len());
        valuation.insert(atom.to_string(), *lattice.concept(idx));
    }
    ConceptualTModel::new(p, rels, valuation).unwrap()
}

#[test]
fn criterion_08_t_models() {
    use roughfca::logic::parse_formula;
    let formulas = ["p", "q", "p & q", "p | q", "(p | q) & q", "p & T", "q | F"];
    for seed in 0..500u64 {
        let m = random_conceptual_t_model(seed);
        for text in formulas {
            let f = parse_formula(text).unwrap();
            let s = m.extent(&f, TruthMode::Strict).unwrap();
            let c = m.extent(&f, TruthMode::Classical).unwrap();
            let t = m.extent(&f, TruthMode::Tolerant).unwrap();
            assert!(s.extent.is_subset(&c.extent) && c.extent.is_subset(&t.extent));
        }
        assert!(step_lemma_check(&m, "p").unwrap());
        assert!(step_lemma_check(&m, "q").unwrap());
    }

    // the lifted four-element chain model falsifies the tolerance chain
    let n = 4;
    let sim = BoolMat::from_fn(n, n, |i, j| i == j || i + 1 == j || j + 1 == i);
    let mut sims = BTreeMap::new();
    sims.insert("p".to_string(), sim);
    let mut valuation = BTreeMap::new();
    valuation.insert("p".to_string(), BitSet::from_indices(n, &[0, 1]));
    let classical = ClassicalTModel::new(names(n, "d"), sims, valuation).unwrap();
    let m = lift_t_model(&classical).unwrap();
    assert!(step_lemma_check(&m, "p").unwrap());
    let chain = sorites_search(&m, "p", 6)
        .unwrap()
        .expect("falsifier chain expected");
    assert_eq!(chain, vec![0, 1, 2, 3]);

    // similarity preservation, exhaustive over |D| <= 3
    let mut lifted = 0usize;
    for n in 1..=3usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        for bits in 0u32..(1 << pairs.len()) {
            let mut sim = BoolMat::identity(n);
            for (k, (i, j)) in pairs.iter().enumerate() {
                if bits & (1 << k) != 0 {
                    sim.set(*i, *j, true);
                    sim.set(*j, *i, true);
                }
            }
            for val_bits in 0u64..(1 << n) {
                let mut sims = BTreeMap::new();
                sims.insert("p".to_string(), sim.clone());
                let mut valuation = BTreeMap::new();
                valuation.insert("p".to_string(), subset_from_bits(n, val_bits));
                let classical = ClassicalTModel::new(names(n, "d"), sims, valuation).unwrap();
                // the lifting verifies the similarity equivalence internally
                lift_t_model(&classical).unwrap();
                lifted += 1;
            }
        }
    }
    println!(
        "criterion 08 (T-models: sandwich x500, step lemma, sorites falsifier, {lifted} exhaustive liftings): PASS"
    );
}

#[test]
fn criterion_09_many_valued() {
    // residuation on every shipped algebra
    for alg in HeytingAlgebra::builtins() {
        for a in alg.elements() {
            for b in alg.elements() {
                for c in alg.elements() {
                    assert_eq!(alg.le(c, alg.imp(a, b)), alg.le(alg.meet(a, c), b));
                }
            }
        }
    }

    // preservation: exhaustive 3-chain with |W| <= 2 (3 + 81 relations)
    let g3 = HeytingAlgebra::godel3();
    let mut g3_count = 0usize;
    for n in 1..=2usize {
        let cells = n * n;
        for code in 0..(g3.size() as u64).pow(cells as u32) {
            let mut k = code;
            let rel = AMatrix::from_fn(n, n, |i, j| {
                let digit = (k / (g3.size() as u64).pow((i * n + j) as u32)) % g3.size() as u64;
                let _ = k;
                digit as mv::Elem
            });
            k = 0;
            let _ = k;
            let x = AKripkeFrame::new(g3.clone(), names(n, "w"), rel).unwrap();
            let report = mv::mv_verify_preservation(&x).unwrap();
            assert!(
                report.pass,
                "3-chain preservation failed: {:?}",
                report.detail
            );
            g3_count += 1;
        }
    }
    assert_eq!(g3_count, 3 + 81);

    // preservation: Boolean-2 with |W| <= 3, matching the crisp lifting
    let b2 = HeytingAlgebra::bool2();
    for n in 1..=3usize {
        for rel in all_square_relations(n) {
            let arel = AMatrix::from_fn(n, n, |i, j| if rel.get(i, j) { 1 } else { 0 });
            let x = AKripkeFrame::new(b2.clone(), names(n, "w"), arel).unwrap();
            let report = mv::mv_verify_preservation(&x).unwrap();
            assert!(
                report.pass,
                "bool2 preservation failed: {:?}",
                report.detail
            );
            let crisp = KripkeFrame::new(names(n, "w"), rel).unwrap();
            assert!(verify_lifting_iso(&crisp).pass);
        }
    }

    // reflexivity correspondence on 200 seeded random 3-chain contexts
    let mut rng = rng_for(99);
    let mut reflexive_seen = 0usize;
    for _ in 0..200 {
        let mut rel = AMatrix::new(2, 2, 0);
        for i in 0..2 {
            for j in 0..2 {
                rel.set(
                    i,
                    j,
                    rand::Rng::random_range(&mut rng, 0..g3.size()) as mv::Elem,
                );
            }
        }
        let x = AKripkeFrame::new(g3.clone(), names(2, "w"), rel).unwrap();
        let ctx = mv::mv_lift_kripke(&x).unwrap();
        let rec = mv::mv_reflex_correspondence(&ctx).unwrap();
        assert!(
            rec.agree,
            "many-valued reflexivity correspondence disagreed"
        );
        assert_eq!(mv::mv_reflex_on_generators(&ctx), rec.axiom_valid);
        if rec.pointwise_cond {
            reflexive_seen += 1;
        }
    }
    assert!(reflexive_seen > 0, "corpus never hit the reflexive case");

    // Boolean-2 specialization reproduces the crisp module bit for bit
    let mut rng = rng_for(77);
    for _ in 0..50 {
        let p = roughfca::generate::random_polarity(&mut rng, 3, 3, 0.5);
        let ap = mv::from_crisp(&p);
        let crisp_lat = ConceptLattice::enumerate(&p);
        let mv_concepts = mv::mv_enumerate_concepts(&ap).unwrap();
        assert_eq!(mv_concepts.len(), crisp_lat.len());
        let crisp_extents: std::collections::BTreeSet<BitSet> =
            crisp_lat.concepts().iter().map(|c| c.extent).collect();
        for c in &mv_concepts {
            assert!(crisp_extents.contains(&mv::avset_to_bitset(&c.extent)));
            assert_eq!(
                mv::avset_to_bitset(&ap.up(&c.extent)),
                p.up(&mv::avset_to_bitset(&c.extent)).unwrap()
            );
        }
        let r = roughfca::generate::random_compatible_relation(
            &mut rng,
            &p,
            RelSort::AX,
            0.5,
            false,
            false,
        );
        let ar = AMatrix::from_fn(3, 3, |a, x| if r.mat.get(a, x) { 1 } else { 0 });
        assert!(mv::mv_is_i_compatible(&ap, &ar, mv::MvOrientation::AX).unwrap());
        let ctx =
            EnrichedContext::new(p.clone(), r.clone(), converse_relation(&r), None, None).unwrap();
        let actx = AEnrichedContext::new(
            ap.clone(),
            ar.clone(),
            AMatrix::from_fn(3, 3, |x, a| ar.get(a, x)),
        )
        .unwrap();
        for c in crisp_lat.concepts() {
            let mc = mv::AConcept {
                extent: mv::avset_from_bitset(&c.extent),
                intent: mv::avset_from_bitset(&c.intent),
            };
            let crisp_box = modal_op(&ctx, ModalOp::Box, c).unwrap();
            let mv_box = actx.box_op(&mc);
            assert_eq!(mv::avset_to_bitset(&mv_box.extent), crisp_box.extent);
            assert_eq!(mv::avset_to_bitset(&mv_box.intent), crisp_box.intent);
            let crisp_dia = modal_op(&ctx, ModalOp::Diamond, c).unwrap();
            let mv_dia = actx.dia_op(&mc);
            assert_eq!(mv::avset_to_bitset(&mv_dia.extent), crisp_dia.extent);
        }
    }
    println!("criterion 09 (many-valued layer): PASS");
}

/// Nonnegative rational weight vectors with denominators 8 summing to 1.
fn weight_grids(blocks: usize) -> Vec<Vec<Rational>> {
    fn go(blocks: usize, left: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<Rational>>) {
        if acc.len() + 1 == blocks {
            let mut ws: Vec<Rational> = acc.iter().map(|&k| Rational::new(k, 8)).collect();
            ws.push(Rational::new(left, 8));
            out.push(ws);
            return;
        }
        for k in 0..=left {
            acc.push(k);
            go(blocks, left - k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(blocks, 8, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_10_dempster_shafer() {
    // duality and 2-/3-monotonicity, exhaustive over |S| <= 4 and eighth-grids
    let mut spaces = 0usize;
    for n in 1..=4usize {
        for blocks in all_partitions(n) {
            for weights in weight_grids(blocks.len()) {
                let space =
                    PartitionProbSpace::new(names(n, "s"), blocks.clone(), weights).unwrap();
                let subsets: Vec<BitSet> = all_subsets(n).collect();
                let bel: Vec<Rational> = subsets
                    .iter()
                    .map(|z| space.inner_outer(z).unwrap().0)
                    .collect();
                let outer: Vec<Rational> = subsets
                    .iter()
                    .map(|z| space.inner_outer(z).unwrap().1)
                    .collect();
                let idx = |z: &BitSet| z.bits() as usize;
                for z in &subsets {
                    let one: Rational = Rational::new(1, 1);
                    assert_eq!(outer[idx(z)], one - bel[idx(&z.complement())]);
                }
                for a in &subsets {
                    for b in &subsets {
                        assert!(
                            bel[idx(&a.union(b))] + bel[idx(&a.inter(b))]
                                >= bel[idx(a)] + bel[idx(b)],
                            "2-monotonicity failed"
                        );
                        for c in &subsets {
                            let lhs = bel[idx(&a.union(b).union(c))];
                            let rhs = bel[idx(a)] + bel[idx(b)] + bel[idx(c)]
                                - bel[idx(&a.inter(b))]
                                - bel[idx(&a.inter(c))]
                                - bel[idx(&b.inter(c))]
                                + bel[idx(&a.inter(b).inter(c))];
                            assert!(lhs >= rhs, "3-monotonicity failed");
                        }
                    }
                }
                spaces += 1;
            }
        }
    }

    // canonical relation: equals the partition and is finest-compatible
    for n in 1..=4usize {
        for blocks in all_partitions(n) {
            let b = blocks.len() as i64;
            let weights = vec![Rational::new(1, b); blocks.len()];
            let space = PartitionProbSpace::new(names(n, "s"), blocks, weights).unwrap();
            let (_, report) = canonical_relation_classical(&space).unwrap();
            assert!(report.is_equivalence && report.equals_partition && report.finest_compatible);
        }
    }

    // 200 random conceptual probability spaces over lattices with <= 8 concepts
    let mut built = 0usize;
    let mut seed = 0u64;
    while built < 200 {
        seed += 1;
        if let Some(space) = random_conceptual_space(seed) {
            let (_, report) = canonical_relation_conceptual(&space).unwrap();
            assert!(
                report.all_hold(),
                "canonical conceptual report failed: {report:?}"
            );
            assert!(s5_law_check(&space).all_hold());
            for c in space.lattice.concepts() {
                let (bel, pl) = space.belief_plausibility(c).unwrap();
                assert!(bel <= pl);
            }
            built += 1;
        }
    }
    println!(
        "criterion 10 (Dempster-Shafer: {spaces} exhaustive spaces, 200 random conceptual spaces): PASS"
    );
}

/// A random conceptual probability space over a 3x3 polarity (at most 8
/// concepts): a random meet/join-closed subalgebra plus the join-irreducible
/// weighting, which is modular exactly on distributive subalgebras; seeds
/// whose subalgebra is not distributive are skipped.
fn random_conceptual_space(seed: u64) -> Option<ConceptualProbSpace> {
    use rand::Rng;
    let mut rng = rng_for(0xD5 ^ seed.wrapping_mul(2654435761));
    let p = roughfca::generate::random_polarity(&mut rng, 3, 3, 0.5);
    let lat = ConceptLattice::enumerate(&p);
    if lat.len() < 2 {
        return None;
    }
    let mut sub: Vec<usize> = vec![lat.top(), lat.bottom()];
    for i in 0..lat.len() {
        if rng.random_bool(0.4) && !sub.contains(&i) {
            sub.push(i);
        }
    }
    // close under meet and join
    loop {
        let mut added = false;
        let snapshot = sub.clone();
        for &i in &snapshot {
            for &j in &snapshot {
                for k in [lat.meet_idx(i, j), lat.join_idx(i, j)] {
                    if !sub.contains(&k) {
                        sub.push(k);
                        added = true;
                    }
                }
            }
        }
        if !added {
            break;
        }
    }
    sub.sort_unstable();
    // distributivity of the subalgebra
    for &a in &sub {
        for &b in &sub {
            for &c in &sub {
                let lhs = lat.meet_idx(a, lat.join_idx(b, c));
                let rhs = lat.join_idx(lat.meet_idx(a, b), lat.meet_idx(a, c));
                if lhs != rhs {
                    return None;
                }
            }
        }
    }
    // join-irreducibles within the subalgebra: exactly one lower cover
    let lower_covers = |x: usize| -> Vec<usize> {
        let below: Vec<usize> = sub
            .iter()
            .copied()
            .filter(|&y| y != x && lat.le(y, x))
            .collect();
        below
            .iter()
            .copied()
            .filter(|&y| !below.iter().any(|&z| z != y && lat.le(y, z)))
            .collect()
    };
    let irreducibles: Vec<usize> = sub
        .iter()
        .copied()
        .filter(|&x| lower_covers(x).len() == 1)
        .collect();
    if irreducibles.is_empty() {
        return None;
    }
    let unit = Rational::new(1, irreducibles.len() as i64);
    let mu: Vec<Rational> = sub
        .iter()
        .map(|&a| {
            irreducibles
                .iter()
                .filter(|&&j| lat.le(j, a))
                .map(|_| unit)
                .sum()
        })
        .collect();
    ConceptualProbSpace::new(p, sub, mu).ok()
}

#[test]
fn criterion_11_algebra_classes_and_representation() {
    // every lifted S5 frame is a conceptual tqBa5
    for n in 1..=4usize {
        for e in all_equivalences(n) {
            let x = KripkeFrame::new(names(n, "s"), e).unwrap();
            assert!(x.is_approximation_space());
            let ctx = lift_kripke(&x);
            let lat = ConceptLattice::enumerate(&ctx.base);
            assert!(algebra_class_check(&ctx, &lat, AlgebraClass::TqBa5).unwrap());
        }
    }

    // representation round-trips on every lattice with <= 5 elements
    let mut round_trips = 0usize;
    for (name, order) in small_lattice_catalogue() {
        let n = order.rows();
        let fl = roughfca::logic::algebra::FiniteLattice::from_order(&order).unwrap();
        let le = |i: usize, j: usize| order.get(i, j);
        let mut boxes = Vec::new();
        let mut dias = Vec::new();
        for table in all_tables(n) {
            let meet_pres = (0..n).all(|i| {
                (0..n).all(|j| table[fl.meet[i * n + j]] == fl.meet[table[i] * n + table[j]])
            }) && table[fl.top] == fl.top;
            if meet_pres {
                boxes.push(table.clone());
            }
            let join_pres = (0..n).all(|i| {
                (0..n).all(|j| table[fl.join[i * n + j]] == fl.join[table[i] * n + table[j]])
            }) && table[fl.bottom] == fl.bottom;
            if join_pres {
                dias.push(table);
            }
        }
        assert!(
            !boxes.is_empty() && !dias.is_empty(),
            "{name} has no normal tables"
        );
        let _ = le;
        for b in &boxes {
            for d in &dias {
                // representation verifies the isomorphism internally
                context_from_modal_algebra(&order, b, d)
                    .unwrap_or_else(|e| panic!("{name} round-trip failed: {e}"));
                round_trips += 1;
            }
        }
    }
    println!("criterion 11 (algebra classes + {round_trips} representation round-trips): PASS");
}

fn all_tables(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let total = (n as u64).pow(n as u32);
    for code in 0..total {
        let mut k = code;
        let mut t = Vec::with_capacity(n);
        for _ in 0..n {
            t.push((k % n as u64) as usize);
            k /= n as u64;
        }
        out.push(t);
    }
    out
}

fn small_lattice_catalogue() -> Vec<(&'static str, BoolMat)> {
    let chain = |n: usize| BoolMat::from_fn(n, n, |i, j| i <= j);
    let from_pairs = |n: usize, pairs: &[(usize, usize)]| {
        let mut m = BoolMat::identity(n);
        for &(i, j) in pairs {
            m.set(i, j, true);
        }
        // transitive closure
        loop {
            let next = m.compose(&m).union(&m);
            if next == m {
                return m;
            }
            m = next;
        }
    };
    vec![
        ("chain1", chain(1)),
        ("chain2", chain(2)),
        ("chain3", chain(3)),
        ("chain4", chain(4)),
        ("diamond", from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])),
        ("chain5", chain(5)),
        (
            "m3",
            from_pairs(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]),
        ),
        (
            "n5",
            from_pairs(5, &[(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)]),
        ),
        (
            "kite_top",
            from_pairs(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]),
        ),
        (
            "kite_bottom",
            from_pairs(5, &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)]),
        ),
    ]
}

#[test]
fn criterion_12_kent_biconditionals() {
    let mut amenable = 0usize;
    let mut skipped = 0usize;
    for na in 1..=3usize {
        for nx in 1..=3usize {
            for inc in all_matrices(na, nx) {
                let p = Polarity::new(names(na, "a"), names(nx, "x"), inc).unwrap();
                for e in all_equivalences(na) {
                    let e_rel = TypedRelation::new(RelSort::AA, e);
                    let g = KentContext::new(p.clone(), e_rel.clone()).unwrap();
                    let (_, _, report) = kent_approx(&g).unwrap();
                    if !report.amenable {
                        skipped += 1;
                        continue;
                    }
                    assert!(report.e_definable);
                    assert_eq!(report.inclusions_hold, Some(true));
                    assert!(report.reflexive_bounds);
                    match kent_lemma_check(&p, &e_rel).unwrap() {
                        KentLemmaOutcome::PreconditionFailed => {
                            panic!("amenable context cannot fail the precondition")
                        }
                        outcome => assert!(outcome.holds()),
                    }
                    amenable += 1;
                }
            }
        }
    }
    assert!(amenable > 100, "too few amenable contexts: {amenable}");
    println!(
        "criterion 12 (Kent biconditionals, {amenable} amenable contexts, {skipped} non-amenable skipped): PASS"
    );
}

#[test]
fn criterion_13_oracle_equivalence() {
    // exhaustive over all 3x3 incidences
    for inc in all_matrices(3, 3) {
        let p = Polarity::new(names(3, "a"), names(3, "x"), inc).unwrap();
        assert_oracle_matches(&p);
    }
    // 1000 random polarities with carriers up to 5
    let mut rng = rng_for(13);
    for _ in 0..1000 {
        use rand::Rng;
        let na = rng.random_range(0..=5);
        let nx = rng.random_range(0..=5);
        let density = rng.random_range(0.2..0.8);
        let p = roughfca::generate::random_polarity(&mut rng, na, nx, density);
        assert_oracle_matches(&p);
    }
    println!("criterion 13 (NextClosure equals the brute-force oracle): PASS");
}

fn assert_oracle_matches(p: &Polarity) {
    let lat = ConceptLattice::enumerate(p);
    let mut got: Vec<(u64, u64)> = lat
        .concepts()
        .iter()
        .map(|c| (c.extent.bits(), c.intent.bits()))
        .collect();
    got.sort_unstable();
    let expected: Vec<(u64, u64)> = enumerate_concepts_oracle(p)
        .into_iter()
        .map(|c| (c.extent.bits(), c.intent.bits()))
        .collect();
    assert_eq!(got, expected);
}

#[test]
fn side_checks_for_lifted_approximation_spaces() {
    // lifting an approximation space yields a reflexive, symmetric,
    // transitive conceptual approximation space
    for e in all_equivalences(3) {
        let x = KripkeFrame::new(names(3, "s"), e).unwrap();
        let class = classify_context(&lift_kripke(&x)).unwrap();
        assert!(class.reflexive && class.symmetric && class.transitive && class.is_approx);
    }
    // stable sections everywhere on compatible relations
    let mut rng = rng_for(7);
    for _ in 0..50 {
        let p = roughfca::generate::random_polarity(&mut rng, 4, 4, 0.5);
        let r = roughfca::generate::random_compatible_relation(
            &mut rng,
            &p,
            RelSort::AX,
            0.5,
            false,
            false,
        );
        for y in all_subsets(4) {
            let section =
                roughfca::relations::rel_apply(&p, &r, roughfca::relations::RelDir::R0, &y)
                    .unwrap();
            assert!(p.is_stable(Side::Extent, &section).unwrap());
        }
    }
}
