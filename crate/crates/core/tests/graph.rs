use signed_grassmannian::bruhat_graph::{build_graph, DotStyle};
use signed_grassmannian::oracle::quotient_cover_oracle;
use signed_grassmannian::{BruhatGraph, CoverType};

const GOLDEN_DOT_2_1: &str = r#"digraph "W_2^(1)" {
  rankdir=BT;
  node [shape=box, fontname="monospace"];
  n0 [label="1 | -2"];
  n1 [label="1 | 2"];
  n2 [label="2 | -1"];
  n3 [label="2 | 1"];
  { rank=same; n1; }
  { rank=same; n3; }
  { rank=same; n2; }
  { rank=same; n0; }
  n3 -> n2 [style=dotted];
  n1 -> n3 [style=solid, penwidth=1];
  n2 -> n0 [style=solid, penwidth=2];
}
"#;

#[test]
fn golden_dot() {
    assert_eq!(build_graph(2, 1).unwrap().export_dot(), GOLDEN_DOT_2_1);
}

#[test]
fn custom_styles() {
    let style = DotStyle {
        b1: "color=red".into(),
        ..DotStyle::default()
    };
    let dot = build_graph(2, 1).unwrap().export_dot_with(&style);
    assert!(dot.contains("n3 -> n2 [color=red];"));
}

#[test]
fn w42_structure() {
    let g = build_graph(4, 2).unwrap();
    assert_eq!(g.nodes().len(), 24);
    assert_eq!(g.edges().len(), 37);
    assert_eq!(g.rank_sizes(), vec![1, 1, 2, 2, 3, 3, 3, 3, 2, 2, 1, 1]);
    assert_eq!(g.sources().len(), 1);
    assert_eq!(g.sinks().len(), 1);
    for e in g.edges() {
        assert_eq!(e.lower.length() + 1, e.upper.length());
    }
    let counts: Vec<usize> = CoverType::ALL
        .iter()
        .map(|&t| g.edges().iter().filter(|e| e.ctype == t).count())
        .collect();
    assert_eq!(counts.iter().sum::<usize>(), 37);
    // Duality swaps B3 and B4 edges one for one.
    assert_eq!(counts[2], counts[3]);
}

#[test]
fn graphs_match_oracle() {
    for n in 1..=5 {
        for k in 0..=n {
            let g = build_graph(n, k).unwrap();
            let ours: std::collections::BTreeSet<_> = g
                .edges()
                .iter()
                .map(|e| (e.lower.clone(), e.upper.clone()))
                .collect();
            assert_eq!(ours, quotient_cover_oracle(n, k).unwrap(), "n={n} k={k}");
            let id = g.sources()[0];
            assert!(g.nodes()[id].is_identity());
            assert_eq!(g.length(id), 0);
        }
    }
}

#[test]
fn json_round_trip() {
    for (n, k) in [(1, 0), (2, 1), (4, 2), (5, 3)] {
        let g = build_graph(n, k).unwrap();
        let back = BruhatGraph::from_json(&g.export_json()).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.export_dot(), g.export_dot());
    }
}
