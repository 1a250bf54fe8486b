//! DOT export of concept lattices: one node per concept labelled
//! `extent|intent` (sets in carrier order), one edge per Hasse cover.

use roughfca::lattice::ConceptLattice;
use roughfca::Polarity;

pub fn lattice_to_dot(p: &Polarity, lat: &ConceptLattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, c) in lat.concepts().iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", c.render(p)));
    }
    for (lower, upper) in lat.hasse_covers() {
        out.push_str(&format!("  n{lower} -> n{upper};\n"));
    }
    out.push_str("}\n");
    out
}
