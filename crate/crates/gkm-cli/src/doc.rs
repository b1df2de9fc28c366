//! Versioned JSON documents for graphs and vertex actions.
//!
//! Rationals serialize as `"p"` or `"p/q"` strings, matrices row-major
//! with explicit shape, graph references by id. Unknown fields are
//! rejected. The JSON schema is documented in `docs/schema.md` at the
//! repository root.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use gkm_core::abelian::{AbelianEdge, AbelianGkmGraph, StarEdge, VertexGroupAction};
use gkm_core::group::{enumerate_group_capped, GroupDescriptor};
use gkm_core::linalg::LinearMap;
use gkm_core::nonabelian::{Circle, Dot, EdgeEnd, GkmEdge, NonAbelianGkmGraph, Star};
use gkm_core::rat::{format_rat, parse_rat, Rat};
use gkm_core::root::Weight;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

fn schema_err<T>(path: impl Into<String>, message: impl Into<String>) -> Result<T, DocError> {
    Err(DocError::Schema {
        path: path.into(),
        message: message.into(),
    })
}

/// Enumeration cap for Weyl groups rebuilt from serialized generators;
/// `GKM_MAX_GROUP_ORDER` overrides the default of 1000000.
pub fn group_order_cap() -> usize {
    std::env::var("GKM_MAX_GROUP_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(gkm_core::group::DEFAULT_MAX_GROUP_ORDER)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
}

/// Any of the three document kinds, dispatched on `kind`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Document {
    Abelian(GraphDocument<AbelianGraphDoc>),
    Nonabelian(GraphDocument<NonAbelianGraphDoc>),
    Action(GraphDocument<ActionDoc>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct GraphDocument<P> {
    pub schema_version: u32,
    #[serde(default)]
    pub metadata: Metadata,
    pub payload: P,
}

impl Document {
    pub fn metadata(&self) -> &Metadata {
        match self {
            Document::Abelian(d) => &d.metadata,
            Document::Nonabelian(d) => &d.metadata,
            Document::Action(d) => &d.metadata,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Document::Abelian(_) => "abelian",
            Document::Nonabelian(_) => "nonabelian",
            Document::Action(_) => "action",
        }
    }

    pub fn schema_version(&self) -> u32 {
        match self {
            Document::Abelian(d) => d.schema_version,
            Document::Nonabelian(d) => d.schema_version,
            Document::Action(d) => d.schema_version,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    /// Row-major rational entries as strings.
    pub entries: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct GroupDoc {
    pub name: String,
    pub torus_rank: usize,
    /// Weyl group generators; the group is re-enumerated on load.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub weyl_generators: Vec<MatrixDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct AbelianGraphDoc {
    pub torus_rank: usize,
    pub dots: Vec<String>,
    pub edges: Vec<AbelianEdgeDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub stars: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub star_edges: Vec<StarEdgeDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct AbelianEdgeDoc {
    pub a: String,
    pub b: String,
    pub label: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct StarEdgeDoc {
    pub dot: String,
    pub star: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct NonAbelianGraphDoc {
    pub circles: Vec<CircleDoc>,
    pub dots: Vec<DotDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub stars: Vec<StarDoc>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CircleDoc {
    pub id: String,
    pub representative: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct DotDoc {
    pub id: String,
    pub circle: String,
    pub group: GroupDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrow: Option<MatrixDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct StarDoc {
    pub id: String,
    pub group: GroupDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct EdgeDoc {
    pub id: String,
    pub a: String,
    /// A dot id or a star id (ids share one namespace per graph).
    pub b: String,
    pub edge_rank: usize,
    pub embed_a: MatrixDoc,
    pub embed_b: MatrixDoc,
}

/// Vertex group action on a named abelian graph's dots: the group's
/// generators together with the image dot ids of each generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ActionDoc {
    pub torus_rank: usize,
    /// Generator matrices, in the group's canonical (sorted) order.
    pub generators: Vec<MatrixDoc>,
    /// Dot ids of the graph the action applies to, fixing the domain order.
    pub dots: Vec<String>,
    /// For each generator, the image dot id of each entry of `dots`.
    pub generator_permutations: Vec<Vec<String>>,
}

// --- conversions: documents -> core types ----------------------------------

fn parse_rat_at(s: &str, path: &str) -> Result<Rat, DocError> {
    parse_rat(s).or_else(|e| schema_err(path, e))
}

pub fn matrix_from_doc(doc: &MatrixDoc, path: &str) -> Result<LinearMap, DocError> {
    if doc.entries.len() != doc.rows * doc.cols {
        return schema_err(
            path,
            format!(
                "{}x{} matrix with {} entries",
                doc.rows,
                doc.cols,
                doc.entries.len()
            ),
        );
    }
    let mut entries = Vec::with_capacity(doc.entries.len());
    for (i, e) in doc.entries.iter().enumerate() {
        entries.push(parse_rat_at(e, &format!("{}.entries[{}]", path, i))?);
    }
    Ok(LinearMap::new(doc.rows, doc.cols, entries))
}

pub fn matrix_to_doc(m: &LinearMap) -> MatrixDoc {
    MatrixDoc {
        rows: m.rows(),
        cols: m.cols(),
        entries: m.entries().iter().map(format_rat).collect(),
    }
}

fn weight_from_doc(coords: &[String], path: &str) -> Result<Weight, DocError> {
    let mut out = Vec::with_capacity(coords.len());
    for (i, c) in coords.iter().enumerate() {
        out.push(parse_rat_at(c, &format!("{}[{}]", path, i))?);
    }
    Ok(Weight::new(out))
}

fn weight_to_doc(w: &Weight) -> Vec<String> {
    w.coords.iter().map(format_rat).collect()
}

pub fn group_from_doc(doc: &GroupDoc, path: &str) -> Result<GroupDescriptor, DocError> {
    let mut gens = Vec::with_capacity(doc.weyl_generators.len());
    for (i, g) in doc.weyl_generators.iter().enumerate() {
        let m = matrix_from_doc(g, &format!("{}.weylGenerators[{}]", path, i))?;
        if m.rows() != doc.torus_rank || m.cols() != doc.torus_rank {
            return schema_err(
                format!("{}.weylGenerators[{}]", path, i),
                format!("expected a {0}x{0} matrix", doc.torus_rank),
            );
        }
        gens.push(m);
    }
    let weyl = enumerate_group_capped(doc.torus_rank, &gens, group_order_cap())
        .or_else(|e| schema_err(path, e.to_string()))?;
    Ok(GroupDescriptor::new(doc.name.clone(), weyl))
}

pub fn group_to_doc(g: &GroupDescriptor) -> GroupDoc {
    GroupDoc {
        name: g.name.clone(),
        torus_rank: g.torus_rank,
        weyl_generators: g.weyl.generators().iter().map(matrix_to_doc).collect(),
    }
}

fn index_map<'a>(
    ids: impl Iterator<Item = &'a String>,
    what: &str,
) -> Result<BTreeMap<&'a str, usize>, DocError> {
    let mut map = BTreeMap::new();
    for (i, id) in ids.enumerate() {
        if map.insert(id.as_str(), i).is_some() {
            return schema_err(
                format!("payload.{}", what),
                format!("duplicate id {:?}", id),
            );
        }
    }
    Ok(map)
}

pub fn abelian_from_doc(doc: &AbelianGraphDoc) -> Result<AbelianGkmGraph, DocError> {
    let dot_index = index_map(doc.dots.iter(), "dots")?;
    let star_index = index_map(doc.stars.iter(), "stars")?;
    let mut edges = Vec::with_capacity(doc.edges.len());
    for (i, e) in doc.edges.iter().enumerate() {
        let path = format!("payload.edges[{}]", i);
        let a = *dot_index
            .get(e.a.as_str())
            .ok_or(())
            .or_else(|_| schema_err(&path, format!("unknown dot {:?}", e.a)))?;
        let b = *dot_index
            .get(e.b.as_str())
            .ok_or(())
            .or_else(|_| schema_err(&path, format!("unknown dot {:?}", e.b)))?;
        let label = weight_from_doc(&e.label, &format!("{}.label", path))?;
        if label.rank() != doc.torus_rank {
            return schema_err(format!("{}.label", path), "wrong coordinate count");
        }
        edges.push(AbelianEdge { a, b, label });
    }
    let mut star_edges = Vec::with_capacity(doc.star_edges.len());
    for (i, se) in doc.star_edges.iter().enumerate() {
        let path = format!("payload.starEdges[{}]", i);
        let dot = *dot_index
            .get(se.dot.as_str())
            .ok_or(())
            .or_else(|_| schema_err(&path, format!("unknown dot {:?}", se.dot)))?;
        let star = *star_index
            .get(se.star.as_str())
            .ok_or(())
            .or_else(|_| schema_err(&path, format!("unknown star {:?}", se.star)))?;
        let label = match &se.label {
            None => None,
            Some(coords) => Some(weight_from_doc(coords, &format!("{}.label", path))?),
        };
        star_edges.push(StarEdge { dot, star, label });
    }
    let graph = AbelianGkmGraph {
        torus_rank: doc.torus_rank,
        dots: doc.dots.clone(),
        edges,
        stars: doc.stars.clone(),
        star_edges,
    };
    graph
        .validate()
        .or_else(|e| schema_err("payload", e.to_string()))?;
    Ok(graph)
}

pub fn abelian_to_doc(g: &AbelianGkmGraph) -> AbelianGraphDoc {
    AbelianGraphDoc {
        torus_rank: g.torus_rank,
        dots: g.dots.clone(),
        edges: g
            .edges
            .iter()
            .map(|e| AbelianEdgeDoc {
                a: g.dots[e.a].clone(),
                b: g.dots[e.b].clone(),
                label: weight_to_doc(&e.label),
            })
            .collect(),
        stars: g.stars.clone(),
        star_edges: g
            .star_edges
            .iter()
            .map(|se| StarEdgeDoc {
                dot: g.dots[se.dot].clone(),
                star: g.stars[se.star].clone(),
                label: se.label.as_ref().map(weight_to_doc),
            })
            .collect(),
    }
}

pub fn nonabelian_from_doc(doc: &NonAbelianGraphDoc) -> Result<NonAbelianGkmGraph, DocError> {
    let circle_index = index_map(doc.circles.iter().map(|c| &c.id), "circles")?;
    let dot_index = index_map(doc.dots.iter().map(|d| &d.id), "dots")?;
    let star_index = index_map(doc.stars.iter().map(|s| &s.id), "stars")?;
    let circles: Vec<Circle> = doc
        .circles
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let rep = *dot_index
                .get(c.representative.as_str())
                .ok_or(())
                .or_else(|_| {
                    schema_err(
                        format!("payload.circles[{}]", i),
                        format!("unknown representative dot {:?}", c.representative),
                    )
                })?;
            Ok(Circle {
                id: c.id.clone(),
                representative: rep,
            })
        })
        .collect::<Result<_, DocError>>()?;
    let dots: Vec<Dot> = doc
        .dots
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let path = format!("payload.dots[{}]", i);
            let circle = *circle_index
                .get(d.circle.as_str())
                .ok_or(())
                .or_else(|_| schema_err(&path, format!("unknown circle {:?}", d.circle)))?;
            let group = group_from_doc(&d.group, &format!("{}.group", path))?;
            let arrow = match &d.arrow {
                None => None,
                Some(m) => Some(matrix_from_doc(m, &format!("{}.arrow", path))?),
            };
            Ok(Dot {
                id: d.id.clone(),
                circle,
                group,
                arrow,
            })
        })
        .collect::<Result<_, DocError>>()?;
    let stars: Vec<Star> = doc
        .stars
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let group = group_from_doc(&s.group, &format!("payload.stars[{}].group", i))?;
            Ok(Star {
                id: s.id.clone(),
                group,
            })
        })
        .collect::<Result<_, DocError>>()?;
    let edges: Vec<GkmEdge> = doc
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let path = format!("payload.edges[{}]", i);
            let a = *dot_index
                .get(e.a.as_str())
                .ok_or(())
                .or_else(|_| schema_err(&path, format!("unknown dot {:?}", e.a)))?;
            let b = if let Some(&di) = dot_index.get(e.b.as_str()) {
                EdgeEnd::Dot(di)
            } else if let Some(&si) = star_index.get(e.b.as_str()) {
                EdgeEnd::Star(si)
            } else {
                return schema_err(&path, format!("unknown endpoint {:?}", e.b));
            };
            Ok(GkmEdge {
                id: e.id.clone(),
                a,
                b,
                rank: e.edge_rank,
                embed_a: matrix_from_doc(&e.embed_a, &format!("{}.embedA", path))?,
                embed_b: matrix_from_doc(&e.embed_b, &format!("{}.embedB", path))?,
            })
        })
        .collect::<Result<_, DocError>>()?;
    let graph = NonAbelianGkmGraph {
        circles,
        dots,
        stars,
        edges,
    };
    graph
        .validate()
        .or_else(|e| schema_err("payload", e.to_string()))?;
    Ok(graph)
}

pub fn nonabelian_to_doc(g: &NonAbelianGkmGraph) -> NonAbelianGraphDoc {
    NonAbelianGraphDoc {
        circles: g
            .circles
            .iter()
            .map(|c| CircleDoc {
                id: c.id.clone(),
                representative: g.dots[c.representative].id.clone(),
            })
            .collect(),
        dots: g
            .dots
            .iter()
            .map(|d| DotDoc {
                id: d.id.clone(),
                circle: g.circles[d.circle].id.clone(),
                group: group_to_doc(&d.group),
                arrow: d.arrow.as_ref().map(matrix_to_doc),
            })
            .collect(),
        stars: g
            .stars
            .iter()
            .map(|s| StarDoc {
                id: s.id.clone(),
                group: group_to_doc(&s.group),
            })
            .collect(),
        edges: g
            .edges
            .iter()
            .map(|e| EdgeDoc {
                id: e.id.clone(),
                a: g.dots[e.a].id.clone(),
                b: match e.b {
                    EdgeEnd::Dot(i) => g.dots[i].id.clone(),
                    EdgeEnd::Star(i) => g.stars[i].id.clone(),
                },
                edge_rank: e.rank,
                embed_a: matrix_to_doc(&e.embed_a),
                embed_b: matrix_to_doc(&e.embed_b),
            })
            .collect(),
    }
}

/// Resolves an action document against the abelian graph it acts on.
pub fn action_from_doc(
    doc: &ActionDoc,
    graph: &AbelianGkmGraph,
) -> Result<VertexGroupAction, DocError> {
    if doc.dots != graph.dots {
        return schema_err(
            "payload.dots",
            "action dot list does not match the graph's dots (same ids, same order required)",
        );
    }
    let dot_index = index_map(doc.dots.iter(), "dots")?;
    let mut gens = Vec::with_capacity(doc.generators.len());
    for (i, g) in doc.generators.iter().enumerate() {
        let m = matrix_from_doc(g, &format!("payload.generators[{}]", i))?;
        if m.rows() != doc.torus_rank || m.cols() != doc.torus_rank {
            return schema_err(
                format!("payload.generators[{}]", i),
                format!("expected a {0}x{0} matrix", doc.torus_rank),
            );
        }
        gens.push(m);
    }
    let group = enumerate_group_capped(doc.torus_rank, &gens, group_order_cap())
        .or_else(|e| schema_err("payload.generators", e.to_string()))?;
    if doc.generator_permutations.len() != doc.generators.len() {
        return schema_err(
            "payload.generatorPermutations",
            "one permutation per generator required",
        );
    }
    // Align permutations with the group's canonical generator order.
    let mut aligned = Vec::with_capacity(group.generator_indices().len());
    for canonical in group.generators() {
        let pos = gens
            .iter()
            .position(|m| *m == canonical)
            .ok_or(())
            .or_else(|_| {
                schema_err(
                    "payload.generators",
                    "generators must be distinct and non-identity",
                )
            })?;
        let perm_ids = &doc.generator_permutations[pos];
        if perm_ids.len() != doc.dots.len() {
            return schema_err(
                format!("payload.generatorPermutations[{}]", pos),
                "permutation length does not match the dot count",
            );
        }
        let mut perm = Vec::with_capacity(perm_ids.len());
        for (i, id) in perm_ids.iter().enumerate() {
            let j = *dot_index.get(id.as_str()).ok_or(()).or_else(|_| {
                schema_err(
                    format!("payload.generatorPermutations[{}][{}]", pos, i),
                    format!("unknown dot {:?}", id),
                )
            })?;
            perm.push(j);
        }
        aligned.push(perm);
    }
    let action = VertexGroupAction::from_generator_perms(group, &aligned)
        .or_else(|e| schema_err("payload", e.to_string()))?;
    action
        .validate(graph)
        .or_else(|e| schema_err("payload", e.to_string()))?;
    Ok(action)
}

pub fn action_to_doc(action: &VertexGroupAction, graph: &AbelianGkmGraph) -> ActionDoc {
    let generator_permutations = action
        .generator_perms()
        .iter()
        .map(|perm| perm.iter().map(|&j| graph.dots[j].clone()).collect())
        .collect();
    ActionDoc {
        torus_rank: action.group.rank(),
        generators: action
            .group
            .generators()
            .iter()
            .map(matrix_to_doc)
            .collect(),
        dots: graph.dots.clone(),
        generator_permutations,
    }
}

// --- load/save --------------------------------------------------------------

/// Strict parse: dispatch on `kind`, then parse the whole document with
/// unknown fields rejected; serde_json errors carry line/column.
pub fn parse_document(text: &str) -> Result<Document, DocError> {
    #[derive(Deserialize)]
    struct Shell {
        kind: String,
    }
    let shell: Shell = serde_json::from_str(text)?;
    match shell.kind.as_str() {
        "abelian" | "nonabelian" | "action" => {}
        other => {
            return schema_err("kind", format!("unknown document kind {:?}", other));
        }
    }
    let doc: Document = serde_json::from_str(text)?;
    if doc.schema_version() != SCHEMA_VERSION {
        return schema_err(
            "schemaVersion",
            format!(
                "unsupported version {} (expected {})",
                doc.schema_version(),
                SCHEMA_VERSION
            ),
        );
    }
    // Surface structural problems at load time.
    match &doc {
        Document::Abelian(d) => {
            abelian_from_doc(&d.payload)?;
        }
        Document::Nonabelian(d) => {
            nonabelian_from_doc(&d.payload)?;
        }
        Document::Action(_) => {}
    }
    Ok(doc)
}

pub fn to_json(doc: &Document) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("documents serialize");
    out.push('\n');
    out
}

pub fn load_document(path: &std::path::Path) -> Result<Document, DocError> {
    let text = std::fs::read_to_string(path)?;
    parse_document(&text)
}

pub fn save_document(doc: &Document, path: &std::path::Path) -> Result<(), DocError> {
    std::fs::write(path, to_json(doc))?;
    Ok(())
}

pub fn abelian_document(name: &str, description: &str, g: &AbelianGkmGraph) -> Document {
    Document::Abelian(GraphDocument {
        schema_version: SCHEMA_VERSION,
        metadata: Metadata {
            name: name.into(),
            description: description.into(),
        },
        payload: abelian_to_doc(g),
    })
}

pub fn nonabelian_document(name: &str, description: &str, g: &NonAbelianGkmGraph) -> Document {
    Document::Nonabelian(GraphDocument {
        schema_version: SCHEMA_VERSION,
        metadata: Metadata {
            name: name.into(),
            description: description.into(),
        },
        payload: nonabelian_to_doc(g),
    })
}

pub fn action_document(
    name: &str,
    description: &str,
    action: &VertexGroupAction,
    graph: &AbelianGkmGraph,
) -> Document {
    Document::Action(GraphDocument {
        schema_version: SCHEMA_VERSION,
        metadata: Metadata {
            name: name.into(),
            description: description.into(),
        },
        payload: action_to_doc(action, graph),
    })
}
