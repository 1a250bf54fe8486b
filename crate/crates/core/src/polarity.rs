//! Polarities (formal contexts) and their Galois derivation operators.

use crate::bitset::{BitSet, BoolMat, MAX_CARRIER};
use crate::error::{Error, Result};

/// Which side of the Galois connection a set lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Subsets of the object carrier `A`.
    Extent,
    /// Subsets of the feature carrier `X`.
    Intent,
}

/// A finite two-sorted incidence structure `(A, X, I)`.
///
/// Objects and features are identified by position; the name lists are kept
/// for parsing and rendering. An empty carrier on either side is legal.
#[derive(Clone, PartialEq, Eq)]
pub struct Polarity {
    objects: Vec<String>,
    features: Vec<String>,
    incidence: BoolMat,
}

fn check_unique(names: &[String]) -> Result<()> {
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(Error::DuplicateIdentifier(n.clone()));
        }
    }
    Ok(())
}

impl Polarity {
    pub fn new(objects: Vec<String>, features: Vec<String>, incidence: BoolMat) -> Result<Self> {
        if objects.len() > MAX_CARRIER {
            return Err(Error::CarrierTooLarge { got: objects.len() });
        }
        if features.len() > MAX_CARRIER {
            return Err(Error::CarrierTooLarge {
                got: features.len(),
            });
        }
        check_unique(&objects)?;
        check_unique(&features)?;
        if incidence.rows() != objects.len() || incidence.cols() != features.len() {
            return Err(Error::DimensionMismatch {
                rows: incidence.rows(),
                cols: incidence.cols(),
                want_rows: objects.len(),
                want_cols: features.len(),
            });
        }
        Ok(Polarity {
            objects,
            features,
            incidence,
        })
    }

    /// Convenience constructor from names and incident pairs.
    pub fn from_pairs(objects: &[&str], features: &[&str], pairs: &[(&str, &str)]) -> Result<Self> {
        let objects: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
        let features: Vec<String> = features.iter().map(|s| s.to_string()).collect();
        let mut incidence = BoolMat::new(objects.len(), features.len());
        for (a, x) in pairs {
            let i = objects
                .iter()
                .position(|o| o == a)
                .ok_or_else(|| Error::UnknownIdentifier(a.to_string()))?;
            let j = features
                .iter()
                .position(|f| f == x)
                .ok_or_else(|| Error::UnknownIdentifier(x.to_string()))?;
            incidence.set(i, j, true);
        }
        Polarity::new(objects, features, incidence)
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn feature_count(&self) -> usize {
        self.features.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn features(&self) -> &[String] {
        &self.features
    }

    pub fn incidence(&self) -> &BoolMat {
        &self.incidence
    }

    pub fn incident(&self, a: usize, x: usize) -> bool {
        self.incidence.get(a, x)
    }

    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| Error::UnknownIdentifier(name.to_string()))
    }

    pub fn feature_index(&self, name: &str) -> Result<usize> {
        self.features
            .iter()
            .position(|f| f == name)
            .ok_or_else(|| Error::UnknownIdentifier(name.to_string()))
    }

    pub fn object_set(&self, names: &[&str]) -> Result<BitSet> {
        let mut s = BitSet::empty(self.object_count());
        for n in names {
            s.insert(self.object_index(n)?);
        }
        Ok(s)
    }

    pub fn feature_set(&self, names: &[&str]) -> Result<BitSet> {
        let mut s = BitSet::empty(self.feature_count());
        for n in names {
            s.insert(self.feature_index(n)?);
        }
        Ok(s)
    }

    fn check_len(&self, side: Side, s: &BitSet) -> Result<()> {
        let expected = match side {
            Side::Extent => self.object_count(),
            Side::Intent => self.feature_count(),
        };
        if s.len() != expected {
            return Err(Error::CarrierMismatch {
                expected,
                got: s.len(),
            });
        }
        Ok(())
    }

    /// `B^↑ = {x : ∀a∈B, aIx}`. The empty set derives to all features.
    pub fn up(&self, b: &BitSet) -> Result<BitSet> {
        self.check_len(Side::Extent, b)?;
        Ok(self.incidence.one_section(b))
    }

    /// `Y^↓ = {a : ∀x∈Y, aIx}`.
    pub fn down(&self, y: &BitSet) -> Result<BitSet> {
        self.check_len(Side::Intent, y)?;
        Ok(self.incidence.zero_section(y))
    }

    /// The closure `B^{↑↓}` (extent side) or `Y^{↓↑}` (intent side).
    pub fn closure(&self, side: Side, s: &BitSet) -> Result<BitSet> {
        match side {
            Side::Extent => self.down(&self.up(s)?),
            Side::Intent => self.up(&self.down(s)?),
        }
    }

    /// Galois-stable means being a fixpoint of the closure.
    pub fn is_stable(&self, side: Side, s: &BitSet) -> Result<bool> {
        Ok(self.closure(side, s)? == *s)
    }
}

impl std::fmt::Debug for Polarity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Polarity(A={:?}, X={:?})\n{:?}",
            self.objects, self.features, self.incidence
        )
    }
}

/// The running three-by-three example context: `I = {(a,y),(a,z)}`.
#[cfg(test)]
pub(crate) fn ex1() -> Polarity {
    Polarity::from_pairs(
        &["a", "b", "c"],
        &["x", "y", "z"],
        &[("a", "y"), ("a", "z")],
    )
    .unwrap()
}
