//! Finite Heyting algebras as truth-value spaces.
//!
//! Only finite distributive lattices are accepted; finiteness makes them
//! complete Heyting algebras, and the residuum is precomputed as a table so
//! every many-valued formula becomes a finite fold.

use crate::bitset::BoolMat;
use crate::error::{Error, Result};

/// Index of an algebra element in its carrier.
pub type Elem = u8;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeytingAlgebra {
    pub name: String,
    carrier: Vec<String>,
    leq: BoolMat,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    imp: Vec<Elem>,
    bot: Elem,
    top: Elem,
}

impl HeytingAlgebra {
    /// Build from a carrier and a set of order pairs (the reflexive
    /// transitive closure is taken). Rejects non-lattices, non-distributive
    /// lattices, and carriers larger than 64.
    pub fn from_order(
        name: &str,
        carrier: Vec<String>,
        pairs: &[(usize, usize)],
    ) -> Result<HeytingAlgebra> {
        let n = carrier.len();
        if n == 0 {
            return Err(Error::NotHeyting("empty carrier".to_string()));
        }
        if n > 64 {
            return Err(Error::CarrierTooLarge { got: n });
        }
        let mut leq = BoolMat::identity(n);
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::NotHeyting(format!(
                    "order pair ({a},{b}) out of range"
                )));
            }
            leq.set(a, b, true);
        }
        // transitive closure
        loop {
            let next = leq.compose(&leq).union(&leq);
            if next == leq {
                break;
            }
            leq = next;
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq.get(i, j) && leq.get(j, i) {
                    return Err(Error::NotHeyting(format!(
                        "order not antisymmetric at {i},{j}"
                    )));
                }
            }
        }
        let le = |i: usize, j: usize| leq.get(i, j);
        let mut meet = vec![0 as Elem; n * n];
        let mut join = vec![0 as Elem; n * n];
        for i in 0..n {
            for j in 0..n {
                let lower: Vec<usize> = (0..n).filter(|&k| le(k, i) && le(k, j)).collect();
                let glb = lower
                    .iter()
                    .copied()
                    .find(|&m| lower.iter().all(|&k| le(k, m)))
                    .ok_or_else(|| Error::NotHeyting(format!("no meet for {i},{j}")))?;
                let upper: Vec<usize> = (0..n).filter(|&k| le(i, k) && le(j, k)).collect();
                let lub = upper
                    .iter()
                    .copied()
                    .find(|&m| upper.iter().all(|&k| le(m, k)))
                    .ok_or_else(|| Error::NotHeyting(format!("no join for {i},{j}")))?;
                meet[i * n + j] = glb as Elem;
                join[i * n + j] = lub as Elem;
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = meet[a * n + join[b * n + c] as usize];
                    let rhs = join[(meet[a * n + b] as usize) * n + meet[a * n + c] as usize];
                    if lhs != rhs {
                        return Err(Error::NotHeyting(format!(
                            "not distributive at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let bot = (0..n)
            .find(|&b| (0..n).all(|k| le(b, k)))
            .ok_or_else(|| Error::NotHeyting("no bottom".to_string()))? as Elem;
        let top = (0..n)
            .find(|&t| (0..n).all(|k| le(k, t)))
            .ok_or_else(|| Error::NotHeyting("no top".to_string()))? as Elem;
        // residuum: a→b is the greatest c with a∧c ≤ b; in a finite
        // distributive lattice the join of all such c qualifies
        let mut imp = vec![0 as Elem; n * n];
        for a in 0..n {
            for b in 0..n {
                let mut best = bot;
                for c in 0..n {
                    if le(meet[a * n + c] as usize, b) {
                        best = join[(best as usize) * n + c];
                    }
                }
                if !le(meet[a * n + best as usize] as usize, b) {
                    return Err(Error::NotHeyting(format!("no residuum for {a},{b}")));
                }
                imp[a * n + b] = best;
            }
        }
        Ok(HeytingAlgebra {
            name: name.to_string(),
            carrier,
            leq,
            meet,
            join,
            imp,
            bot,
            top,
        })
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn carrier(&self) -> &[String] {
        &self.carrier
    }

    pub fn element_name(&self, a: Elem) -> &str {
        &self.carrier[a as usize]
    }

    pub fn element_index(&self, name: &str) -> Result<Elem> {
        self.carrier
            .iter()
            .position(|e| e == name)
            .map(|i| i as Elem)
            .ok_or_else(|| Error::UnknownIdentifier(name.to_string()))
    }

    pub fn bot(&self) -> Elem {
        self.bot
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn le(&self, a: Elem, b: Elem) -> bool {
        self.leq.get(a as usize, b as usize)
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a as usize * self.size() + b as usize]
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a as usize * self.size() + b as usize]
    }

    /// The residuum `a → b`, the greatest `c` with `a ∧ c ≤ b`.
    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.imp[a as usize * self.size() + b as usize]
    }

    pub fn meet_all(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.bot, |acc, x| self.join(acc, x))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.size()).map(|i| i as Elem)
    }

    /// The two-element Boolean algebra.
    pub fn bool2() -> HeytingAlgebra {
        HeytingAlgebra::from_order("bool2", vec!["0".into(), "1".into()], &[(0, 1)]).expect("valid")
    }

    /// Goedel chain 0 < u < 1.
    pub fn godel3() -> HeytingAlgebra {
        HeytingAlgebra::from_order(
            "godel3",
            vec!["0".into(), "u".into(), "1".into()],
            &[(0, 1), (1, 2)],
        )
        .expect("valid")
    }

    /// Goedel chain 0 < u < v < 1.
    pub fn godel4() -> HeytingAlgebra {
        HeytingAlgebra::from_order(
            "godel4",
            vec!["0".into(), "u".into(), "v".into(), "1".into()],
            &[(0, 1), (1, 2), (2, 3)],
        )
        .expect("valid")
    }

    /// The four-element Boolean algebra 2×2.
    pub fn boolean4() -> HeytingAlgebra {
        HeytingAlgebra::from_order(
            "boolean4",
            vec!["0".into(), "a".into(), "b".into(), "1".into()],
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .expect("valid")
    }

    /// The algebras shipped with the crate.
    pub fn builtin(name: &str) -> Result<HeytingAlgebra> {
        match name {
            "bool2" => Ok(Self::bool2()),
            "godel3" => Ok(Self::godel3()),
            "godel4" => Ok(Self::godel4()),
            "boolean4" => Ok(Self::boolean4()),
            other => Err(Error::UnknownIdentifier(format!(
                "builtin algebra `{other}`"
            ))),
        }
    }

    pub fn builtins() -> Vec<HeytingAlgebra> {
        vec![
            Self::bool2(),
            Self::godel3(),
            Self::godel4(),
            Self::boolean4(),
        ]
    }
}
