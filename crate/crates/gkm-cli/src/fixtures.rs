//! Canonical shipped graphs: the real Grassmannian Gr_2(R^5) torus
//! graph, the Sp(2)/T flag graph with its rank-one-factors action, the
//! Sp(1)xSp(1), U(2) and G2 non-abelian graphs, and the G2 K6 orbit
//! graph with the long-root Weyl action used for cross-validation.

use gkm_core::abelian::{
    build_orbit_graph, AbelianEdge, AbelianGkmGraph, StarEdge, VertexGroupAction,
};
use gkm_core::group::{enumerate_group, weyl_group, GroupDescriptor};
use gkm_core::linalg::LinearMap;
use gkm_core::nonabelian::{Circle, Dot, EdgeEnd, GkmEdge, NonAbelianGkmGraph, Star};
use gkm_core::root::{build_root_system, Family, Weight};

use crate::doc::{abelian_document, action_document, nonabelian_document, Document};

pub const FIXTURE_NAMES: &[&str] = &[
    "gras",
    "sp2-flag",
    "sp2-flag-action",
    "sp22",
    "u2-hp1",
    "u2-tflag",
    "u2-tflag-action",
    "g2-typecc",
    "g2-k6",
    "g2-k6-action",
];

fn torus2() -> GroupDescriptor {
    GroupDescriptor::torus(2, "T")
}

fn su2() -> GroupDescriptor {
    GroupDescriptor::new(
        "SU(2)",
        enumerate_group(&[LinearMap::from_int_rows(&[&[-1]])]).unwrap(),
    )
}

/// Gr_2(R^5) with the standard maximal torus of SO(5): two fixed points,
/// a double edge whose labels have kernels span(1,1) and span(1,-1), and
/// one projective-plane star at each fixed point.
pub fn gras_graph() -> AbelianGkmGraph {
    AbelianGkmGraph {
        torus_rank: 2,
        dots: vec!["p".into(), "q".into()],
        edges: vec![
            AbelianEdge {
                a: 0,
                b: 1,
                label: Weight::from_ints(&[1, -1]),
            },
            AbelianEdge {
                a: 0,
                b: 1,
                label: Weight::from_ints(&[1, 1]),
            },
        ],
        stars: vec!["s1".into(), "s2".into()],
        star_edges: vec![
            StarEdge {
                dot: 0,
                star: 0,
                label: None,
            },
            StarEdge {
                dot: 1,
                star: 1,
                label: None,
            },
        ],
    }
}

fn flag_weights() -> Vec<Weight> {
    let c2 = build_root_system(Family::C, 2).unwrap();
    weyl_group(&c2).orbit(&Weight::from_ints(&[2, 1]))
}

/// Full flag Sp(2)/T: the W(Sp(2))-orbit of a regular weight, eight dots
/// and sixteen sphere edges.
pub fn sp2_flag_graph() -> AbelianGkmGraph {
    let c2 = build_root_system(Family::C, 2).unwrap();
    build_orbit_graph(&c2, &Weight::from_ints(&[2, 1])).unwrap()
}

/// Action of W(Sp(1)xSp(1)) (sign changes) on the flag graph's dots.
pub fn sp2_flag_action() -> VertexGroupAction {
    let group = enumerate_group(&[
        LinearMap::from_int_rows(&[&[-1, 0], &[0, 1]]),
        LinearMap::from_int_rows(&[&[1, 0], &[0, -1]]),
    ])
    .unwrap();
    VertexGroupAction::from_weights(group, &flag_weights()).unwrap()
}

/// Sp(1)xSp(1) acting on Sp(2)/T: two circles, the second carrying a
/// second dot with arrow -id, and the two sphere edges with diagonal and
/// antidiagonal edge spaces.
pub fn sp22_graph() -> NonAbelianGkmGraph {
    NonAbelianGkmGraph {
        circles: vec![
            Circle {
                id: "P".into(),
                representative: 0,
            },
            Circle {
                id: "Q".into(),
                representative: 1,
            },
        ],
        dots: vec![
            Dot {
                id: "p".into(),
                circle: 0,
                group: torus2(),
                arrow: None,
            },
            Dot {
                id: "q".into(),
                circle: 1,
                group: torus2(),
                arrow: None,
            },
            Dot {
                id: "q'".into(),
                circle: 1,
                group: torus2(),
                arrow: Some(LinearMap::from_int_rows(&[&[-1, 0], &[0, -1]])),
            },
        ],
        stars: vec![],
        edges: vec![
            GkmEdge {
                id: "S1".into(),
                a: 0,
                b: EdgeEnd::Dot(1),
                rank: 1,
                embed_a: LinearMap::from_int_rows(&[&[1], &[1]]),
                embed_b: LinearMap::from_int_rows(&[&[1], &[1]]),
            },
            GkmEdge {
                id: "S2".into(),
                a: 0,
                b: EdgeEnd::Dot(2),
                rank: 1,
                embed_a: LinearMap::from_int_rows(&[&[1], &[-1]]),
                embed_b: LinearMap::from_int_rows(&[&[1], &[-1]]),
            },
        ],
    }
}

/// U(2) acting on HP^1: one circle with a torus dot, one SU(2) star, one
/// edge whose line embeds antidiagonally into the torus and identically
/// into the SU(2) Chevalley coordinate.
pub fn u2_hp1_graph() -> NonAbelianGkmGraph {
    NonAbelianGkmGraph {
        circles: vec![Circle {
            id: "A".into(),
            representative: 0,
        }],
        dots: vec![Dot {
            id: "p".into(),
            circle: 0,
            group: torus2(),
            arrow: None,
        }],
        stars: vec![Star {
            id: "s".into(),
            group: su2(),
        }],
        edges: vec![GkmEdge {
            id: "e".into(),
            a: 0,
            b: EdgeEnd::Star(0),
            rank: 1,
            embed_a: LinearMap::from_int_rows(&[&[1], &[-1]]),
            embed_b: LinearMap::from_int_rows(&[&[1]]),
        }],
    }
}

/// Torus side of the U(2) example: the two fixed points of HP^1 joined
/// by the two invariant spheres.
pub fn u2_tflag_graph() -> AbelianGkmGraph {
    AbelianGkmGraph {
        torus_rank: 2,
        dots: vec!["p".into(), "q".into()],
        edges: vec![
            AbelianEdge {
                a: 0,
                b: 1,
                label: Weight::from_ints(&[1, -1]),
            },
            AbelianEdge {
                a: 0,
                b: 1,
                label: Weight::from_ints(&[1, 1]),
            },
        ],
        stars: vec![],
        star_edges: vec![],
    }
}

/// W(U(2)) = S2 swapping the two fixed points.
pub fn u2_tflag_action() -> VertexGroupAction {
    let group = enumerate_group(&[LinearMap::from_int_rows(&[&[0, 1], &[1, 0]])]).unwrap();
    VertexGroupAction {
        group,
        perms: vec![vec![0, 1], vec![1, 0]],
    }
}

/// SU(3) acting on the G2-adjoint orbit of a long root: one circle with
/// two torus dots, the arrow being the unique long-Weyl element taking
/// the base long root (3,2) to its image (-3,-1) under the short-root
/// reflection, and one edge along that reflection's wall span{(0,1)}.
pub fn g2_typecc_graph() -> NonAbelianGkmGraph {
    NonAbelianGkmGraph {
        circles: vec![Circle {
            id: "A".into(),
            representative: 0,
        }],
        dots: vec![
            Dot {
                id: "p".into(),
                circle: 0,
                group: torus2(),
                arrow: None,
            },
            Dot {
                id: "q".into(),
                circle: 0,
                group: torus2(),
                arrow: Some(LinearMap::from_int_rows(&[&[1, -3], &[1, -2]])),
            },
        ],
        stars: vec![],
        edges: vec![GkmEdge {
            id: "S".into(),
            a: 0,
            b: EdgeEnd::Dot(1),
            rank: 1,
            embed_a: LinearMap::from_int_rows(&[&[0], &[1]]),
            embed_b: LinearMap::from_int_rows(&[&[0], &[1]]),
        }],
    }
}

fn g2_k6_weights() -> Vec<Weight> {
    let g2 = build_root_system(Family::G, 2).unwrap();
    weyl_group(&g2).orbit(&Weight::from_ints(&[3, 2]))
}

/// Torus side of the G2 example: the six long roots, all fifteen sphere
/// edges.
pub fn g2_k6_graph() -> AbelianGkmGraph {
    let g2 = build_root_system(Family::G, 2).unwrap();
    build_orbit_graph(&g2, &Weight::from_ints(&[3, 2])).unwrap()
}

/// Order-six Weyl group of the long-root subsystem acting on the six
/// dots.
pub fn g2_k6_action() -> VertexGroupAction {
    let g2 = build_root_system(Family::G, 2).unwrap();
    let group = enumerate_group(&[
        g2.reflection(&Weight::from_ints(&[0, 1])).unwrap(),
        g2.reflection(&Weight::from_ints(&[3, 1])).unwrap(),
    ])
    .unwrap();
    VertexGroupAction::from_weights(group, &g2_k6_weights()).unwrap()
}

/// The canonical fixture for `name`, or an error listing the catalog.
pub fn emit_fixture(name: &str) -> Result<Document, String> {
    let doc = match name {
        "gras" => abelian_document(
            "gras",
            "Torus graph of Gr_2(R^5): two fixed points, a double edge, two projective-plane stars",
            &gras_graph(),
        ),
        "sp2-flag" => abelian_document(
            "sp2-flag",
            "Torus graph of the full flag Sp(2)/T: eight fixed points, sixteen sphere edges",
            &sp2_flag_graph(),
        ),
        "sp2-flag-action" => action_document(
            "sp2-flag-action",
            "W(Sp(1)xSp(1)) sign changes acting on the sp2-flag dots",
            &sp2_flag_action(),
            &sp2_flag_graph(),
        ),
        "sp22" => nonabelian_document(
            "sp22",
            "Sp(1)xSp(1) acting on Sp(2)/T: two circles, arrow -id, diagonal and antidiagonal edges",
            &sp22_graph(),
        ),
        "u2-hp1" => nonabelian_document(
            "u2-hp1",
            "U(2) acting on HP^1: one circle, one SU(2) star, one edge",
            &u2_hp1_graph(),
        ),
        "u2-tflag" => abelian_document(
            "u2-tflag",
            "Torus graph of HP^1 under the maximal torus of U(2): two dots, double edge",
            &u2_tflag_graph(),
        ),
        "u2-tflag-action" => action_document(
            "u2-tflag-action",
            "W(U(2)) coordinate swap acting on the u2-tflag dots",
            &u2_tflag_action(),
            &u2_tflag_graph(),
        ),
        "g2-typecc" => nonabelian_document(
            "g2-typecc",
            "SU(3) acting on the G2-adjoint orbit of a long root: one circle, two dots, one loop edge",
            &g2_typecc_graph(),
        ),
        "g2-k6" => abelian_document(
            "g2-k6",
            "Torus graph of the G2-adjoint orbit of a long root: six dots, fifteen edges",
            &g2_k6_graph(),
        ),
        "g2-k6-action" => action_document(
            "g2-k6-action",
            "Long-root Weyl subgroup (order six) acting on the g2-k6 dots",
            &g2_k6_action(),
            &g2_k6_graph(),
        ),
        other => {
            return Err(format!(
                "unknown fixture {:?}; available fixtures: {}",
                other,
                FIXTURE_NAMES.join(", ")
            ));
        }
    };
    Ok(doc)
}
