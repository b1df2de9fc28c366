//! Implementations behind the CLI subcommands. Each returns the rendered
//! output so the binary stays a thin argument-parsing shell and tests can
//! call straight in.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};

use gkm_core::abelian::{
    abelian_hilbert, abelian_solution, build_orbit_graph, invariant_hilbert, AbelianGkmGraph,
};
use gkm_core::nonabelian::{nonabelian_hilbert, nonabelian_solution, NonAbelianGkmGraph};
use gkm_core::rat::parse_rat;
use gkm_core::root::{build_root_system, Family, Weight};

use crate::doc::{
    abelian_document, abelian_from_doc, action_from_doc, load_document, nonabelian_from_doc,
    Document,
};

pub enum LoadedGraph {
    Abelian(AbelianGkmGraph),
    NonAbelian(NonAbelianGkmGraph),
}

pub fn load_graph(path: &Path) -> Result<(Document, LoadedGraph)> {
    let doc = load_document(path).with_context(|| format!("loading {}", path.display()))?;
    let graph = match &doc {
        Document::Abelian(d) => LoadedGraph::Abelian(abelian_from_doc(&d.payload)?),
        Document::Nonabelian(d) => LoadedGraph::NonAbelian(nonabelian_from_doc(&d.payload)?),
        Document::Action(_) => {
            bail!("{} is an action document, expected a graph", path.display())
        }
    };
    Ok((doc, graph))
}

fn graph_label(doc: &Document, path: &Path) -> String {
    let name = &doc.metadata().name;
    if name.is_empty() {
        path.display().to_string()
    } else {
        name.clone()
    }
}

fn dimension_table(dims: &[usize]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:>7} {:>14} {:>10}",
        "degree", "cohomological", "dimension"
    )
    .unwrap();
    for (d, n) in dims.iter().enumerate() {
        writeln!(out, "{:>7} {:>14} {:>10}", d, 2 * d, n).unwrap();
    }
    out
}

pub fn hilbert_output(path: &Path, max_degree: u32, json: bool) -> Result<String> {
    let (doc, graph) = load_graph(path)?;
    let dims = match &graph {
        LoadedGraph::Abelian(g) => abelian_hilbert(g, max_degree),
        LoadedGraph::NonAbelian(g) => nonabelian_hilbert(g, max_degree)?,
    };
    if json {
        let rows: Vec<serde_json::Value> = dims
            .iter()
            .enumerate()
            .map(|(d, n)| {
                serde_json::json!({"degree": d, "cohomologicalDegree": 2 * d, "dimension": n})
            })
            .collect();
        let value = serde_json::json!({
            "graph": graph_label(&doc, path),
            "kind": doc.kind(),
            "maxDegree": max_degree,
            "hilbert": dims,
            "rows": rows,
        });
        Ok(format!("{}\n", serde_json::to_string_pretty(&value)?))
    } else {
        Ok(format!(
            "{} ({})\n{}",
            graph_label(&doc, path),
            doc.kind(),
            dimension_table(&dims)
        ))
    }
}

pub fn basis_output(path: &Path, degree: u32, json: bool) -> Result<String> {
    let (doc, graph) = load_graph(path)?;
    // (component id, polynomial) tuples per basis element.
    let (ids, tuples): (Vec<String>, Vec<Vec<String>>) = match &graph {
        LoadedGraph::Abelian(g) => {
            let sol = abelian_solution(g, degree);
            (
                g.dots.clone(),
                sol.basis
                    .iter()
                    .map(|tuple| tuple.iter().map(|f| f.to_string()).collect())
                    .collect(),
            )
        }
        LoadedGraph::NonAbelian(g) => {
            let sol = nonabelian_solution(g, degree)?;
            (
                g.circles.iter().map(|c| c.id.clone()).collect(),
                sol.basis
                    .iter()
                    .map(|tuple| tuple.iter().map(|f| f.to_string()).collect())
                    .collect(),
            )
        }
    };
    if json {
        let basis: Vec<serde_json::Value> = tuples
            .iter()
            .map(|tuple| {
                let components: Vec<serde_json::Value> = ids
                    .iter()
                    .zip(tuple)
                    .map(|(id, f)| serde_json::json!({"id": id, "polynomial": f}))
                    .collect();
                serde_json::Value::Array(components)
            })
            .collect();
        let value = serde_json::json!({
            "graph": graph_label(&doc, path),
            "kind": doc.kind(),
            "degree": degree,
            "cohomologicalDegree": 2 * degree,
            "dimension": tuples.len(),
            "basis": basis,
        });
        Ok(format!("{}\n", serde_json::to_string_pretty(&value)?))
    } else {
        let mut out = format!(
            "{} ({}), degree {} (cohomological {}), dimension {}\n",
            graph_label(&doc, path),
            doc.kind(),
            degree,
            2 * degree,
            tuples.len()
        );
        for (i, tuple) in tuples.iter().enumerate() {
            writeln!(out, "[{}]", i + 1).unwrap();
            for (id, f) in ids.iter().zip(tuple) {
                writeln!(out, "    {}: {}", id, f).unwrap();
            }
        }
        Ok(out)
    }
}

/// Compares the non-abelian Hilbert series with the invariant dimensions
/// of the abelian graph under the action, degree by degree. The flag is
/// true iff they agree everywhere.
pub fn oracle_output(
    nonabelian_path: &Path,
    abelian_path: &Path,
    action_path: &Path,
    max_degree: u32,
    json: bool,
) -> Result<(String, bool)> {
    let nonabelian = match load_graph(nonabelian_path)? {
        (_, LoadedGraph::NonAbelian(g)) => g,
        _ => bail!(
            "{} is not a non-abelian graph document",
            nonabelian_path.display()
        ),
    };
    let abelian = match load_graph(abelian_path)? {
        (_, LoadedGraph::Abelian(g)) => g,
        _ => bail!(
            "{} is not an abelian graph document",
            abelian_path.display()
        ),
    };
    let action_doc =
        load_document(action_path).with_context(|| format!("loading {}", action_path.display()))?;
    let action = match &action_doc {
        Document::Action(d) => action_from_doc(&d.payload, &abelian)?,
        _ => bail!("{} is not an action document", action_path.display()),
    };
    let lhs = nonabelian_hilbert(&nonabelian, max_degree)?;
    let rhs = invariant_hilbert(&abelian, &action, max_degree)?;
    let agree = lhs == rhs;
    if json {
        let rows: Vec<serde_json::Value> = (0..=max_degree as usize)
            .map(|d| {
                serde_json::json!({
                    "degree": d,
                    "cohomologicalDegree": 2 * d,
                    "nonabelian": lhs[d],
                    "invariant": rhs[d],
                    "agree": lhs[d] == rhs[d],
                })
            })
            .collect();
        let value = serde_json::json!({"agree": agree, "rows": rows});
        Ok((
            format!("{}\n", serde_json::to_string_pretty(&value)?),
            agree,
        ))
    } else {
        let mut out = String::new();
        writeln!(
            out,
            "{:>7} {:>14} {:>11} {:>10} {:>7}",
            "degree", "cohomological", "nonabelian", "invariant", "agree"
        )
        .unwrap();
        for d in 0..=max_degree as usize {
            writeln!(
                out,
                "{:>7} {:>14} {:>11} {:>10} {:>7}",
                d,
                2 * d,
                lhs[d],
                rhs[d],
                if lhs[d] == rhs[d] { "yes" } else { "NO" }
            )
            .unwrap();
        }
        writeln!(
            out,
            "{}",
            if agree {
                "all degrees agree"
            } else {
                "DISAGREEMENT found"
            }
        )
        .unwrap();
        Ok((out, agree))
    }
}

pub fn build_orbit_document(family: &str, rank: usize, weight: &str) -> Result<Document> {
    let family: Family = family.parse().map_err(|e: String| anyhow!(e))?;
    let rs = build_root_system(family, rank)?;
    let coords = weight
        .split(',')
        .map(|c| parse_rat(c).map_err(|e| anyhow!(e)))
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != rank {
        bail!("weight has {} coordinates, expected {}", coords.len(), rank);
    }
    let lambda = Weight::new(coords);
    let graph = build_orbit_graph(&rs, &lambda)?;
    let name = format!("orbit-{}{}", family, rank);
    let description = format!(
        "Orbit graph of {} under W({}{}): {} dots, {} edges",
        lambda,
        family,
        rank,
        graph.dots.len(),
        graph.edges.len()
    );
    Ok(abelian_document(&name, &description, &graph))
}

/// Validation report: `Ok` text plus flag; structural problems are
/// reported as the error text with exit status carried by the flag.
pub fn validate_output(path: &Path, json: bool) -> Result<(String, bool)> {
    let outcome = load_graph(path);
    let (ok, message) = match &outcome {
        Ok((doc, LoadedGraph::Abelian(_))) => (
            true,
            format!("{}: valid abelian graph", graph_label(doc, path)),
        ),
        Ok((doc, LoadedGraph::NonAbelian(_))) => (
            true,
            format!("{}: valid non-abelian graph", graph_label(doc, path)),
        ),
        Err(e) => (false, format!("{:#}", e)),
    };
    if json {
        let value = serde_json::json!({"valid": ok, "message": message});
        Ok((format!("{}\n", serde_json::to_string_pretty(&value)?), ok))
    } else {
        Ok((format!("{}\n", message), ok))
    }
}
