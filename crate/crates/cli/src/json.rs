//! JSON schemas for enriched contexts, Kripke frames, truth-value algebras,
//! and partition probability spaces.

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use roughfca::bitset::{BitSet, BoolMat};
use roughfca::dempster::{PartitionProbSpace, Rational};
use roughfca::lifting::KripkeFrame;
use roughfca::manyvalued::HeytingAlgebra;
use roughfca::relations::{RelSort, TypedRelation};
use roughfca::{EnrichedContext, Polarity};

fn matrix_from_rows(
    rows: &[Vec<u8>],
    want_rows: usize,
    want_cols: usize,
    what: &str,
) -> Result<BoolMat> {
    if rows.len() != want_rows {
        bail!("{what}: expected {want_rows} rows, found {}", rows.len());
    }
    let mut m = BoolMat::new(want_rows, want_cols);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != want_cols {
            bail!(
                "{what}: row {r} has {} cells, expected {want_cols}",
                row.len()
            );
        }
        for (c, &v) in row.iter().enumerate() {
            match v {
                0 => {}
                1 => m.set(r, c, true),
                other => bail!("{what}: cell ({r},{c}) is {other}, expected 0 or 1"),
            }
        }
    }
    Ok(m)
}

fn matrix_to_rows(m: &BoolMat) -> Vec<Vec<u8>> {
    (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| if m.get(r, c) { 1 } else { 0 })
                .collect()
        })
        .collect()
}

/// An enriched formal context on the wire: `box` is `|A|x|X|`, `diamond`
/// is `|X|x|A|`, the optional triangles are square. `permissive: true` skips
/// the I-compatibility check and tags the context unverified.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct EnrichedContextDoc {
    pub objects: Vec<String>,
    pub features: Vec<String>,
    pub incidence: Vec<Vec<u8>>,
    #[serde(rename = "box")]
    pub box_rel: Vec<Vec<u8>>,
    pub diamond: Vec<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rtri: Option<Vec<Vec<u8>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ltri: Option<Vec<Vec<u8>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permissive: Option<bool>,
}

impl EnrichedContextDoc {
    pub fn from_context(ctx: &EnrichedContext) -> EnrichedContextDoc {
        EnrichedContextDoc {
            objects: ctx.base.objects().to_vec(),
            features: ctx.base.features().to_vec(),
            incidence: matrix_to_rows(ctx.base.incidence()),
            box_rel: matrix_to_rows(&ctx.rbox.mat),
            diamond: matrix_to_rows(&ctx.rdia.mat),
            rtri: ctx.rtri.as_ref().map(|r| matrix_to_rows(&r.mat)),
            ltri: ctx.ltri.as_ref().map(|r| matrix_to_rows(&r.mat)),
            permissive: if ctx.is_verified() { None } else { Some(true) },
        }
    }

    /// Build the context; `force_permissive` comes from the CLI flag and
    /// overrides the document.
    pub fn into_context(self, force_permissive: bool) -> Result<EnrichedContext> {
        let na = self.objects.len();
        let nx = self.features.len();
        let incidence = matrix_from_rows(&self.incidence, na, nx, "incidence")?;
        let base = Polarity::new(self.objects, self.features, incidence)
            .map_err(|e| anyhow!("bad polarity: {e}"))?;
        let rbox = TypedRelation::new(RelSort::AX, matrix_from_rows(&self.box_rel, na, nx, "box")?);
        let rdia = TypedRelation::new(
            RelSort::XA,
            matrix_from_rows(&self.diamond, nx, na, "diamond")?,
        );
        let rtri = self
            .rtri
            .map(|m| matrix_from_rows(&m, na, na, "rtri"))
            .transpose()?
            .map(|m| TypedRelation::new(RelSort::AA, m));
        let ltri = self
            .ltri
            .map(|m| matrix_from_rows(&m, nx, nx, "ltri"))
            .transpose()?
            .map(|m| TypedRelation::new(RelSort::XX, m));
        let permissive = force_permissive || self.permissive.unwrap_or(false);
        let ctx = if permissive {
            EnrichedContext::new_permissive(base, rbox, rdia, rtri, ltri)
        } else {
            EnrichedContext::new(base, rbox, rdia, rtri, ltri)
        };
        ctx.map_err(|e| anyhow!("{e} (pass --permissive to load anyway)"))
    }
}

pub fn read_enriched(text: &str, force_permissive: bool) -> Result<EnrichedContext> {
    let doc: EnrichedContextDoc =
        serde_json::from_str(text).context("enriched context schema violation")?;
    doc.into_context(force_permissive)
}

pub fn write_enriched(ctx: &EnrichedContext) -> String {
    serde_json::to_string_pretty(&EnrichedContextDoc::from_context(ctx)).expect("serializable")
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct FrameDoc {
    pub states: Vec<String>,
    pub rel: Vec<Vec<u8>>,
}

pub fn read_frame(text: &str) -> Result<KripkeFrame> {
    let doc: FrameDoc = serde_json::from_str(text).context("frame schema violation")?;
    let n = doc.states.len();
    let rel = matrix_from_rows(&doc.rel, n, n, "rel")?;
    KripkeFrame::new(doc.states, rel).map_err(|e| anyhow!("bad frame: {e}"))
}

/// A finite truth-value algebra: carrier names plus order pairs; the
/// reflexive-transitive closure is taken.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct AlgebraDoc {
    #[serde(default)]
    pub name: String,
    pub carrier: Vec<String>,
    pub leq: Vec<(String, String)>,
}

pub fn read_algebra(text: &str) -> Result<HeytingAlgebra> {
    let doc: AlgebraDoc = serde_json::from_str(text).context("algebra schema violation")?;
    let index = |name: &str| {
        doc.carrier
            .iter()
            .position(|c| c == name)
            .with_context(|| format!("unknown carrier element `{name}`"))
    };
    let mut pairs = Vec::with_capacity(doc.leq.len());
    for (a, b) in &doc.leq {
        pairs.push((index(a)?, index(b)?));
    }
    HeytingAlgebra::from_order(&doc.name, doc.carrier, &pairs).map_err(|e| anyhow!("{e}"))
}

/// A partition probability space: blocks of carrier names with rational
/// weights written as `p/q` (or plain integers).
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct SpaceDoc {
    pub carrier: Vec<String>,
    pub blocks: Vec<Vec<String>>,
    pub weights: Vec<String>,
}

fn parse_rational(text: &str) -> Result<Rational> {
    if let Some((num, den)) = text.split_once('/') {
        let n: i64 = num
            .trim()
            .parse()
            .with_context(|| format!("bad rational `{text}`"))?;
        let d: i64 = den
            .trim()
            .parse()
            .with_context(|| format!("bad rational `{text}`"))?;
        if d == 0 {
            bail!("bad rational `{text}`: zero denominator");
        }
        Ok(Rational::new(n, d))
    } else {
        let n: i64 = text
            .trim()
            .parse()
            .with_context(|| format!("bad rational `{text}`"))?;
        Ok(Rational::from_integer(n))
    }
}

pub fn read_space(text: &str) -> Result<PartitionProbSpace> {
    let doc: SpaceDoc = serde_json::from_str(text).context("space schema violation")?;
    let n = doc.carrier.len();
    let mut blocks = Vec::with_capacity(doc.blocks.len());
    for block in &doc.blocks {
        let mut b = BitSet::empty(n);
        for name in block {
            let i = doc
                .carrier
                .iter()
                .position(|c| c == name)
                .with_context(|| format!("unknown carrier element `{name}`"))?;
            b.insert(i);
        }
        blocks.push(b);
    }
    let weights = doc
        .weights
        .iter()
        .map(|w| parse_rational(w))
        .collect::<Result<Vec<_>>>()?;
    PartitionProbSpace::new(doc.carrier, blocks, weights).map_err(|e| anyhow!("{e}"))
}
