//! The Bruhat graph of `W_n^(k)`: one node per representative, one arrow
//! `w' → w` whenever `w` covers `w'`. Arrows point up in length.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::covering::{self, CoverType, CoveringEdge};
use crate::error::{Error, Result};
use crate::grassmannian::{self, GrassmannPerm};
use crate::maya::MayaDiagram;

/// Default bound on `n` for [`build_graph`]; `|W_14^(k)|` peaks near 10⁷.
pub const DEFAULT_MAX_GRAPH_RANK: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruhatGraph {
    n: usize,
    k: usize,
    /// Lexicographic by one-line notation; a node's id is its index here.
    nodes: Vec<GrassmannPerm>,
    lengths: Vec<usize>,
    /// Sorted by `(type, lower id, upper id)`.
    edges: Vec<CoveringEdge>,
    ids: BTreeMap<GrassmannPerm, usize>,
}

pub fn build_graph(n: usize, k: usize) -> Result<BruhatGraph> {
    build_graph_bounded(n, k, DEFAULT_MAX_GRAPH_RANK)
}

pub fn build_graph_bounded(n: usize, k: usize, max_rank: usize) -> Result<BruhatGraph> {
    if n == 0 || k > n {
        return Err(Error::Contract(format!(
            "need n >= 1 and 0 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    if n > max_rank {
        return Err(Error::ResourceGuard { n, max: max_rank });
    }
    let nodes: Vec<GrassmannPerm> = grassmannian::enumerate(n, k).collect();
    let edges: Vec<CoveringEdge> = nodes
        .par_iter()
        .flat_map_iter(covering::covered_by)
        .collect();
    Ok(BruhatGraph::assemble(n, k, nodes, edges))
}

/// Edge styling for DOT output, one attribute string per covering type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotStyle {
    pub b1: String,
    pub b2: String,
    pub b3: String,
    pub b4: String,
    /// Draw an undirected gray link between each node and its dual.
    pub dual_links: bool,
}

impl Default for DotStyle {
    fn default() -> Self {
        DotStyle {
            b1: "style=dotted".into(),
            b2: "style=dashed".into(),
            b3: "style=solid, penwidth=1".into(),
            b4: "style=solid, penwidth=2".into(),
            dual_links: false,
        }
    }
}

impl DotStyle {
    pub fn for_type(&self, t: CoverType) -> &str {
        match t {
            CoverType::B1 => &self.b1,
            CoverType::B2 => &self.b2,
            CoverType::B3 => &self.b3,
            CoverType::B4 => &self.b4,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    n: usize,
    k: usize,
    nodes: Vec<NodeDoc>,
    edges: Vec<EdgeDoc>,
}

#[derive(Serialize, Deserialize)]
struct NodeDoc {
    id: usize,
    oneline: String,
    maya: String,
    length: usize,
}

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    lower_id: usize,
    upper_id: usize,
    #[serde(rename = "type")]
    ctype: CoverType,
}

impl BruhatGraph {
    fn assemble(
        n: usize,
        k: usize,
        mut nodes: Vec<GrassmannPerm>,
        mut edges: Vec<CoveringEdge>,
    ) -> Self {
        nodes.sort();
        let ids: BTreeMap<GrassmannPerm, usize> = nodes
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, g)| (g, i))
            .collect();
        edges.sort_by_key(|e| (e.ctype, ids[&e.lower], ids[&e.upper]));
        let lengths = nodes.iter().map(GrassmannPerm::length).collect();
        BruhatGraph {
            n,
            k,
            nodes,
            lengths,
            edges,
            ids,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn nodes(&self) -> &[GrassmannPerm] {
        &self.nodes
    }

    pub fn edges(&self) -> &[CoveringEdge] {
        &self.edges
    }

    pub fn length(&self, id: usize) -> usize {
        self.lengths[id]
    }

    pub fn id_of(&self, g: &GrassmannPerm) -> Option<usize> {
        self.ids.get(g).copied()
    }

    /// Node counts per length `0..=ℓ(w0)`.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let top = self.lengths.iter().copied().max().unwrap_or(0);
        let mut sizes = vec![0; top + 1];
        for &l in &self.lengths {
            sizes[l] += 1;
        }
        sizes
    }

    /// Ids with no incoming arrow.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.nodes.len()];
        for e in &self.edges {
            has_in[self.ids[&e.upper]] = true;
        }
        (0..self.nodes.len()).filter(|&i| !has_in[i]).collect()
    }

    /// Ids with no outgoing arrow.
    pub fn sinks(&self) -> Vec<usize> {
        let mut has_out = vec![false; self.nodes.len()];
        for e in &self.edges {
            has_out[self.ids[&e.lower]] = true;
        }
        (0..self.nodes.len()).filter(|&i| !has_out[i]).collect()
    }

    pub fn export_dot(&self) -> String {
        self.export_dot_with(&DotStyle::default())
    }

    /// Graphviz digraph with arrows `lower -> upper`, drawn bottom to top,
    /// and one `rank=same` group per length.
    pub fn export_dot_with(&self, style: &DotStyle) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"W_{}^({})\" {{", self.n, self.k);
        out.push_str("  rankdir=BT;\n");
        out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
        for (id, g) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{id} [label=\"{g}\"];");
        }
        for (len, _) in self.rank_sizes().iter().enumerate() {
            let members: Vec<String> = (0..self.nodes.len())
                .filter(|&id| self.lengths[id] == len)
                .map(|id| format!("n{id};"))
                .collect();
            let _ = writeln!(out, "  {{ rank=same; {} }}", members.join(" "));
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  n{} -> n{} [{}];",
                self.ids[&e.lower],
                self.ids[&e.upper],
                style.for_type(e.ctype)
            );
        }
        if style.dual_links {
            for (id, g) in self.nodes.iter().enumerate() {
                let dual = self.ids[&g.dual()];
                if id < dual {
                    let _ = writeln!(
                        out,
                        "  n{id} -> n{dual} [dir=none, constraint=false, color=gray, style=dotted];"
                    );
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn export_json(&self) -> String {
        let doc = GraphDoc {
            n: self.n,
            k: self.k,
            nodes: self
                .nodes
                .iter()
                .enumerate()
                .map(|(id, g)| NodeDoc {
                    id,
                    oneline: g.to_string(),
                    maya: MayaDiagram::from(g).ascii(),
                    length: self.lengths[id],
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDoc {
                    lower_id: self.ids[&e.lower],
                    upper_id: self.ids[&e.upper],
                    ctype: e.ctype,
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("graph documents serialize");
        s.push('\n');
        s
    }

    /// Reads a document written by [`BruhatGraph::export_json`], checking
    /// every node and edge against its recorded fields.
    pub fn from_json(text: &str) -> Result<BruhatGraph> {
        let doc: GraphDoc = serde_json::from_str(text)?;
        let mut nodes = Vec::with_capacity(doc.nodes.len());
        for (pos, node) in doc.nodes.iter().enumerate() {
            if node.id != pos {
                return Err(Error::Document(format!(
                    "node at position {pos} has id {}",
                    node.id
                )));
            }
            let g = GrassmannPerm::parse(&node.oneline, doc.k)?;
            if g.n() != doc.n {
                return Err(Error::Document(format!("node {pos} has rank {}", g.n())));
            }
            if MayaDiagram::from(&g).ascii() != node.maya || g.length() != node.length {
                return Err(Error::Document(format!(
                    "node {pos} maya/length fields disagree with '{}'",
                    node.oneline
                )));
            }
            nodes.push(g);
        }
        let mut edges = Vec::with_capacity(doc.edges.len());
        for e in &doc.edges {
            let (Some(lower), Some(upper)) = (nodes.get(e.lower_id), nodes.get(e.upper_id)) else {
                return Err(Error::Document(format!(
                    "edge {} -> {} refers to a missing node",
                    e.lower_id, e.upper_id
                )));
            };
            if covering::classify(upper, lower)? != Some(e.ctype) {
                return Err(Error::Document(format!(
                    "edge {} -> {} is not a covering of type {}",
                    e.lower_id, e.upper_id, e.ctype
                )));
            }
            edges.push(CoveringEdge {
                upper: upper.clone(),
                lower: lower.clone(),
                ctype: e.ctype,
            });
        }
        let graph = BruhatGraph::assemble(doc.n, doc.k, nodes, edges);
        if graph.ids.len() != graph.nodes.len() {
            return Err(Error::Document("duplicate nodes".into()));
        }
        Ok(graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_of_four() {
        let g = build_graph(2, 1).unwrap();
        assert_eq!(g.nodes().len(), 4);
        assert_eq!(g.edges().len(), 3);
        assert_eq!(g.rank_sizes(), vec![1, 1, 1, 1]);
        // bottom to top: (1|2) -B3-> (2|1) -B1-> (2|-1) -B4-> (1|-2)
        let mut by_height: Vec<(usize, CoverType)> = g
            .edges()
            .iter()
            .map(|e| (e.lower.length(), e.ctype))
            .collect();
        by_height.sort();
        assert_eq!(
            by_height,
            vec![(0, CoverType::B3), (1, CoverType::B1), (2, CoverType::B4)]
        );
    }

    #[test]
    fn trivial_quotient() {
        let g = build_graph(3, 3).unwrap();
        assert_eq!(g.nodes().len(), 1);
        assert!(g.edges().is_empty());
        assert_eq!(g.rank_sizes(), vec![1]);
        let dot = g.export_dot();
        assert!(dot.contains("n0 [label=\"1 2 3 |\"];"));
        assert!(!dot.contains("->"));
    }

    #[test]
    fn guards() {
        assert!(matches!(
            build_graph_bounded(5, 2, 4),
            Err(Error::ResourceGuard { n: 5, max: 4 })
        ));
        assert!(build_graph(2, 3).is_err());
        assert!(build_graph(0, 0).is_err());
    }

    #[test]
    fn dual_links_are_optional() {
        let g = build_graph(2, 1).unwrap();
        assert!(!g.export_dot().contains("dir=none"));
        let style = DotStyle {
            dual_links: true,
            ..DotStyle::default()
        };
        let dot = g.export_dot_with(&style);
        assert_eq!(dot.matches("dir=none").count(), 2);
    }

    #[test]
    fn json_rejects_tampering() {
        let g = build_graph(2, 1).unwrap();
        let json = g.export_json();
        let bad = json.replacen("\"B3\"", "\"B2\"", 1);
        assert!(matches!(
            BruhatGraph::from_json(&bad),
            Err(Error::Document(_))
        ));
        let bad = json.replacen("\"length\": 0", "\"length\": 5", 1);
        assert!(BruhatGraph::from_json(&bad).is_err());
        assert!(BruhatGraph::from_json("{}").is_err());
    }
}
