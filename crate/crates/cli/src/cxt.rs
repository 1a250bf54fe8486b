//! The Burmeister `.cxt` format.
//!
//! Layout: line 1 is `B`; line 2 is the context name (possibly empty);
//! lines 3 and 4 are the object and attribute counts; then the object
//! names, the attribute names, and one `.`/`X` row per object. The writer
//! emits the name line, Unix newlines, and no trailing blank line.

use anyhow::{bail, Context, Result};
use roughfca::bitset::BoolMat;
use roughfca::Polarity;

pub fn read_cxt(text: &str) -> Result<(String, Polarity)> {
    let lines: Vec<&str> = text.lines().collect();
    let line = |i: usize| -> Result<&str> {
        lines
            .get(i)
            .copied()
            .with_context(|| format!("line {}: unexpected end of file", i + 1))
    };
    if line(0)? != "B" {
        bail!("line 1: malformed header, expected `B`");
    }
    let name = line(1)?.to_string();
    let objects: usize = line(2)?
        .trim()
        .parse()
        .with_context(|| "line 3: malformed object count".to_string())?;
    let attributes: usize = line(3)?
        .trim()
        .parse()
        .with_context(|| "line 4: malformed attribute count".to_string())?;
    let mut pos = 4;
    let mut object_names = Vec::with_capacity(objects);
    for _ in 0..objects {
        object_names.push(line(pos)?.to_string());
        pos += 1;
    }
    let mut attribute_names = Vec::with_capacity(attributes);
    for _ in 0..attributes {
        attribute_names.push(line(pos)?.to_string());
        pos += 1;
    }
    let mut incidence = BoolMat::new(objects, attributes);
    for r in 0..objects {
        let row = line(pos)?;
        if row.chars().count() != attributes {
            bail!(
                "line {}: row has {} cells, expected {}",
                pos + 1,
                row.chars().count(),
                attributes
            );
        }
        for (c, ch) in row.chars().enumerate() {
            match ch {
                'X' | 'x' => incidence.set(r, c, true),
                '.' => {}
                other => bail!("line {}: unexpected cell `{other}`", pos + 1),
            }
        }
        pos += 1;
    }
    if pos != lines.len() {
        bail!("line {}: trailing content after {} rows", pos + 1, objects);
    }
    let polarity = Polarity::new(object_names, attribute_names, incidence)
        .map_err(|e| anyhow::anyhow!("count mismatch or bad identifiers: {e}"))?;
    Ok((name, polarity))
}

pub fn write_cxt(name: &str, p: &Polarity) -> String {
    let mut out = String::new();
    out.push_str("B\n");
    out.push_str(name);
    out.push('\n');
    out.push_str(&format!("{}\n{}\n", p.object_count(), p.feature_count()));
    for o in p.objects() {
        out.push_str(o);
        out.push('\n');
    }
    for f in p.features() {
        out.push_str(f);
        out.push('\n');
    }
    for r in 0..p.object_count() {
        for c in 0..p.feature_count() {
            out.push(if p.incident(r, c) { 'X' } else { '.' });
        }
        out.push('\n');
    }
    out
}
