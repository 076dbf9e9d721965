//! DOT rendering for intersection configurations and resolution graphs.
//!
//! The output is sorted by component id, so two equal configurations
//! always render to the same bytes.

use std::fmt::Write as _;

use crate::contract::{CompKind, IntersectionConfig};
use crate::resolution::{ResolutionError, ResolutionGraph};

/// Render a configuration for graphviz. Nodes are labeled `id (self)`,
/// the marked curve is drawn as a box, and pairings above 1 label their
/// edge with the multiplicity.
pub fn config_to_dot(cfg: &IntersectionConfig) -> String {
    let mut out = String::from("digraph {\n    edge [dir=none];\n");
    let mut ids: Vec<String> = cfg.ids().cloned().collect();
    ids.sort();
    for id in &ids {
        let self_int = cfg.self_int(id).expect("listed id");
        let shape = match cfg.kind(id).expect("listed id") {
            CompKind::MarkedCurve => " shape=box",
            CompKind::Divisor => "",
        };
        let _ = writeln!(out, "    \"{id}\" [label=\"{id} ({self_int})\"{shape}];");
    }
    let mut edges: Vec<(String, String, i64)> = Vec::new();
    for a in &ids {
        for (b, mult) in cfg.neighbors(a) {
            if a.as_str() < b.as_str() {
                edges.push((a.clone(), b, mult));
            }
        }
    }
    edges.sort();
    for (a, b, mult) in edges {
        if mult > 1 {
            let _ = writeln!(out, "    \"{a}\" -> \"{b}\" [label=\"{mult}\"];");
        } else {
            let _ = writeln!(out, "    \"{a}\" -> \"{b}\";");
        }
    }
    out.push_str("}\n");
    out
}

/// Assemble a resolution graph and render its divisor configuration.
pub fn graph_to_dot(graph: &ResolutionGraph) -> Result<String, ResolutionError> {
    let (cfg, _) = graph.assemble()?;
    Ok(config_to_dot(&cfg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contract::CompKind;

    #[test]
    fn dot_output_is_sorted_and_stable() {
        let mut cfg = IntersectionConfig::new();
        cfg.add_component("B", -1, CompKind::Divisor).unwrap();
        cfg.add_component("A", -2, CompKind::MarkedCurve).unwrap();
        cfg.add_pair("B", "A", 2).unwrap();
        let dot = config_to_dot(&cfg);
        let expected = "digraph {\n    edge [dir=none];\n    \"A\" [label=\"A (-2)\" shape=box];\n    \"B\" [label=\"B (-1)\"];\n    \"A\" -> \"B\" [label=\"2\"];\n}\n";
        assert_eq!(dot, expected);
        assert_eq!(dot, config_to_dot(&cfg));
    }

    #[test]
    fn family_graph_renders_every_component() {
        let curve = crate::orevkov::OrevkovCurve::new(1, crate::orevkov::Variant::Plain).unwrap();
        let dot = graph_to_dot(&curve.graph).unwrap();
        assert!(dot.contains("\"C\" [label=\"C (-2)\" shape=box];"));
        assert!(dot.contains("\"A1.1\""));
        assert!(dot.contains("\"D0\" [label=\"D0 (-1)\"];"));
        // 11 components, 10 tree edges, no multiplicities above 1
        assert_eq!(dot.matches("label=").count(), 11);
        assert_eq!(dot.matches(" -> ").count(), 10);
    }
}
