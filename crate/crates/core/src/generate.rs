//! Seeded random generation of polarities and I-compatible structures, plus
//! deterministic enumeration of small relation and partition spaces.
//!
//! Random relations are made I-compatible by construction: starting from a
//! random seed relation, singleton sections are repeatedly replaced by their
//! Galois closures. Each sweep only adds pairs, so the iteration reaches a
//! fixpoint, and at the fixpoint every section is stable. The result is then
//! compatibility-verified anyway.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::{BitSet, BoolMat};
use crate::error::Result;
use crate::lifting::KripkeFrame;
use crate::polarity::Polarity;
use crate::relations::{is_i_compatible, EnrichedContext, RelSort, TypedRelation};

/// The deterministic RNG used by every seeded entry point.
pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Size and shape parameters for random enriched contexts.
#[derive(Clone, Copy, Debug)]
pub struct ContextParams {
    pub objects: usize,
    pub features: usize,
    /// Probability of each incidence cell.
    pub density: f64,
    /// Force `R_□ ⊆ I` (and the mirror condition on `R_◇`).
    pub reflexive: bool,
    /// Force `I ⊆ R_□` (and the mirror condition on `R_◇`).
    pub subdelta: bool,
    /// Also generate compatible triangle relations.
    pub triangles: bool,
}

impl ContextParams {
    pub fn new(objects: usize, features: usize) -> ContextParams {
        ContextParams {
            objects,
            features,
            density: 0.5,
            reflexive: false,
            subdelta: false,
            triangles: false,
        }
    }
}

pub fn random_polarity(
    rng: &mut impl Rng,
    objects: usize,
    features: usize,
    density: f64,
) -> Polarity {
    let names_a: Vec<String> = (0..objects).map(|i| format!("a{i}")).collect();
    let names_x: Vec<String> = (0..features).map(|i| format!("x{i}")).collect();
    let mut inc = BoolMat::new(objects, features);
    for r in 0..objects {
        for c in 0..features {
            if rng.random_bool(density) {
                inc.set(r, c, true);
            }
        }
    }
    Polarity::new(names_a, names_x, inc).expect("generated names are unique")
}

/// Close every singleton section of `r` under the Galois closure of its
/// carrier. Monotone in the relation, so iterating reaches a fixpoint; at the
/// fixpoint the relation is I-compatible.
pub fn stabilize_relation(p: &Polarity, r: &mut TypedRelation) {
    let (row_side, col_side) = r.sort.carriers();
    loop {
        let mut changed = false;
        for c in 0..r.mat.cols() {
            let section = r.mat.col(c);
            let closed = p.closure(row_side, &section).expect("sized");
            if closed != section {
                r.mat.set_col(c, closed);
                changed = true;
            }
        }
        for row in 0..r.mat.rows() {
            let section = r.mat.row(row);
            let closed = p.closure(col_side, &section).expect("sized");
            if closed != section {
                r.mat.set_row(row, closed);
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

/// A random I-compatible relation of the given sort. `reflexive` seeds the
/// relation inside the incidence (preserved by stabilization for sorts AX
/// and XA), `subdelta` seeds it outside.
pub fn random_compatible_relation(
    rng: &mut impl Rng,
    p: &Polarity,
    sort: RelSort,
    density: f64,
    reflexive: bool,
    subdelta: bool,
) -> TypedRelation {
    let mut rel = TypedRelation::empty(p, sort);
    let incidence_oriented = |row: usize, col: usize| match sort {
        RelSort::AX => p.incident(row, col),
        RelSort::XA => p.incident(col, row),
        _ => true,
    };
    for r in 0..rel.mat.rows() {
        for c in 0..rel.mat.cols() {
            let inside = incidence_oriented(r, c);
            let keep = if reflexive {
                inside && rng.random_bool(density)
            } else if subdelta {
                inside || rng.random_bool(density)
            } else {
                rng.random_bool(density)
            };
            if keep {
                rel.mat.set(r, c, true);
            }
        }
    }
    stabilize_relation(p, &mut rel);
    debug_assert!(is_i_compatible(p, &rel).unwrap());
    rel
}

/// A seeded random enriched context, I-compatible by construction and
/// verified. Bounded retries guard the (unreachable in practice) case of a
/// failed verification.
pub fn random_enriched_context(params: ContextParams, seed: u64) -> Result<EnrichedContext> {
    let mut rng = rng_for(seed);
    for _ in 0..16 {
        let p = random_polarity(&mut rng, params.objects, params.features, params.density);
        let rbox = random_compatible_relation(
            &mut rng,
            &p,
            RelSort::AX,
            params.density,
            params.reflexive,
            params.subdelta,
        );
        let rdia = random_compatible_relation(
            &mut rng,
            &p,
            RelSort::XA,
            params.density,
            params.reflexive,
            params.subdelta,
        );
        let (rtri, ltri) = if params.triangles {
            (
                Some(random_compatible_relation(
                    &mut rng,
                    &p,
                    RelSort::AA,
                    params.density,
                    false,
                    false,
                )),
                Some(random_compatible_relation(
                    &mut rng,
                    &p,
                    RelSort::XX,
                    params.density,
                    false,
                    false,
                )),
            )
        } else {
            (None, None)
        };
        if let Ok(ctx) = EnrichedContext::new(p, rbox, rdia, rtri, ltri) {
            return Ok(ctx);
        }
    }
    unreachable!("stabilized relations are always I-compatible")
}

/// A uniformly random algebra-valued matrix.
pub fn random_amatrix(
    rng: &mut impl Rng,
    alg: &crate::manyvalued::HeytingAlgebra,
    rows: usize,
    cols: usize,
) -> crate::manyvalued::AMatrix {
    let mut m = crate::manyvalued::AMatrix::new(rows, cols, 0);
    for r in 0..rows {
        for c in 0..cols {
            m.set(
                r,
                c,
                rng.random_range(0..alg.size()) as crate::manyvalued::Elem,
            );
        }
    }
    m
}

pub fn random_kripke_frame(rng: &mut impl Rng, n: usize, density: f64) -> KripkeFrame {
    let states: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    let mut rel = BoolMat::new(n, n);
    for i in 0..n {
        for j in 0..n {
            if rng.random_bool(density) {
                rel.set(i, j, true);
            }
        }
    }
    KripkeFrame::new(states, rel).expect("square by construction")
}

/// A random equivalence relation on `n` elements, via a uniform random
/// assignment of elements to blocks.
pub fn random_equivalence(rng: &mut impl Rng, n: usize) -> BoolMat {
    let mut block_of = vec![0usize; n];
    let mut blocks = 0usize;
    for b in block_of.iter_mut() {
        let pick = rng.random_range(0..=blocks);
        *b = pick;
        if pick == blocks {
            blocks += 1;
        }
    }
    BoolMat::from_fn(n, n, |i, j| block_of[i] == block_of[j])
}

/// All binary relations on `n` elements, as matrices, in numeric order.
pub fn all_square_relations(n: usize) -> impl Iterator<Item = BoolMat> {
    all_matrices(n, n)
}

/// All rows×cols boolean matrices in numeric order.
pub fn all_matrices(rows: usize, cols: usize) -> impl Iterator<Item = BoolMat> {
    assert!(rows * cols < 26, "matrix space too large");
    (0u64..(1u64 << (rows * cols)))
        .map(move |bits| BoolMat::from_fn(rows, cols, |i, j| bits & (1 << (i * cols + j)) != 0))
}

/// All set partitions of `{0..n}`, each as a list of blocks.
pub fn all_partitions(n: usize) -> Vec<Vec<BitSet>> {
    fn go(n: usize, i: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<BitSet>>) {
        if i == n {
            out.push(
                blocks
                    .iter()
                    .map(|b| BitSet::from_indices(n, b))
                    .collect::<Vec<_>>(),
            );
            return;
        }
        for k in 0..blocks.len() {
            blocks[k].push(i);
            go(n, i + 1, blocks, out);
            blocks[k].pop();
        }
        blocks.push(vec![i]);
        go(n, i + 1, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    go(n, 0, &mut Vec::new(), &mut out);
    out
}

/// All equivalence relations on `n` elements.
pub fn all_equivalences(n: usize) -> Vec<BoolMat> {
    all_partitions(n)
        .into_iter()
        .map(|blocks| {
            BoolMat::from_fn(n, n, |i, j| {
                blocks.iter().any(|b| b.contains(i) && b.contains(j))
            })
        })
        .collect()
}
