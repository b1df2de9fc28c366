//! Graphviz DOT rendering of graph documents. Output is deterministic:
//! vertices and edges are emitted in stored order, so the same document
//! always produces byte-identical text.

use crate::doc::{AbelianGraphDoc, Document, MatrixDoc, NonAbelianGraphDoc};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn matrix_label(m: &MatrixDoc) -> String {
    let rows: Vec<String> = m
        .entries
        .chunks(m.cols.max(1))
        .map(|row| format!("[{}]", row.join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

/// Renders a graph document as DOT text. Abelian graphs render as an
/// undirected `graph`; non-abelian graphs as a `digraph` with one
/// cluster per circle, arrows directed and annotated with their matrix,
/// edges drawn with `dir=none` and annotated with rank and embeddings.
pub fn export_dot(doc: &Document) -> String {
    match doc {
        Document::Abelian(d) => abelian_dot(&d.metadata.name, &d.payload),
        Document::Nonabelian(d) => nonabelian_dot(&d.metadata.name, &d.payload),
        Document::Action(_) => String::from("// action documents have no graph rendering\n"),
    }
}

fn abelian_dot(name: &str, g: &AbelianGraphDoc) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph \"{}\" {{\n", escape(name)));
    for dot in &g.dots {
        out.push_str(&format!(
            "  \"{}\" [shape=circle, style=filled];\n",
            escape(dot)
        ));
    }
    for star in &g.stars {
        out.push_str(&format!("  \"{}\" [shape=star];\n", escape(star)));
    }
    for e in &g.edges {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\" [label=\"({})\"];\n",
            escape(&e.a),
            escape(&e.b),
            e.label.join(",")
        ));
    }
    for se in &g.star_edges {
        match &se.label {
            Some(label) => out.push_str(&format!(
                "  \"{}\" -- \"{}\" [style=dashed, label=\"({})\"];\n",
                escape(&se.dot),
                escape(&se.star),
                label.join(",")
            )),
            None => out.push_str(&format!(
                "  \"{}\" -- \"{}\" [style=dashed];\n",
                escape(&se.dot),
                escape(&se.star)
            )),
        }
    }
    out.push_str("}\n");
    out
}

fn nonabelian_dot(name: &str, g: &NonAbelianGraphDoc) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph \"{}\" {{\n", escape(name)));
    for c in &g.circles {
        out.push_str(&format!("  subgraph \"cluster_{}\" {{\n", escape(&c.id)));
        out.push_str(&format!("    label=\"{}\";\n", escape(&c.id)));
        for d in g.dots.iter().filter(|d| d.circle == c.id) {
            out.push_str(&format!(
                "    \"{}\" [shape=circle, style=filled];\n",
                escape(&d.id)
            ));
        }
        out.push_str("  }\n");
    }
    for s in &g.stars {
        out.push_str(&format!("  \"{}\" [shape=star];\n", escape(&s.id)));
    }
    // Arrows: representative -> dot, annotated with the isomorphism.
    for d in &g.dots {
        if let Some(arrow) = &d.arrow {
            let rep = g
                .circles
                .iter()
                .find(|c| c.id == d.circle)
                .map(|c| c.representative.as_str())
                .unwrap_or("?");
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                escape(rep),
                escape(&d.id),
                escape(&matrix_label(arrow))
            ));
        }
    }
    for e in &g.edges {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [dir=none, label=\"{}: rank {}, A={}, B={}\"];\n",
            escape(&e.a),
            escape(&e.b),
            escape(&e.id),
            e.edge_rank,
            escape(&matrix_label(&e.embed_a)),
            escape(&matrix_label(&e.embed_b))
        ));
    }
    out.push_str("}\n");
    out
}
