//! Cross-validation of the two presentations of the same equivariant
//! cohomology algebra: the graph solver for the non-abelian action versus
//! the Weyl-invariant part of the torus-action graph algebra
//! (`H*_G = (H*_T)^W`).

use gkm_core::abelian::{build_orbit_graph, invariant_hilbert, VertexGroupAction};
use gkm_core::group::{enumerate_group, weyl_group, GroupDescriptor};
use gkm_core::linalg::LinearMap;
use gkm_core::nonabelian::{
    nonabelian_hilbert, Circle, Dot, EdgeEnd, GkmEdge, NonAbelianGkmGraph, Star,
};
use gkm_core::root::{build_root_system, direct_sum, Family, Weight};

fn torus2() -> GroupDescriptor {
    GroupDescriptor::torus(2, "T")
}

fn sp22_graph() -> NonAbelianGkmGraph {
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

#[test]
fn sp22_agrees_with_invariant_flag_algebra() {
    let c2 = build_root_system(Family::C, 2).unwrap();
    let lambda = Weight::from_ints(&[2, 1]);
    let flag = build_orbit_graph(&c2, &lambda).unwrap();
    let weights = weyl_group(&c2).orbit(&lambda);
    let a1 = build_root_system(Family::A, 1).unwrap();
    let sub = weyl_group(&direct_sum(&a1, &a1));
    let action = VertexGroupAction::from_weights(sub, &weights).unwrap();
    let invariant = invariant_hilbert(&flag, &action, 6).unwrap();
    let nonabelian = nonabelian_hilbert(&sp22_graph(), 6).unwrap();
    assert_eq!(invariant, nonabelian);
    assert_eq!(nonabelian, vec![1, 2, 4, 6, 8, 10, 12]);
}

fn u2_graph() -> NonAbelianGkmGraph {
    let su2 = GroupDescriptor::new(
        "SU(2)",
        enumerate_group(&[LinearMap::from_int_rows(&[&[-1]])]).unwrap(),
    );
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
            group: su2,
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

#[test]
fn u2_agrees_with_invariant_two_sphere_algebra() {
    // Torus side: two fixed points joined by the two invariant spheres,
    // labels with kernels span(1,1) and span(1,-1); the swap acts.
    let graph = gkm_core::abelian::AbelianGkmGraph {
        torus_rank: 2,
        dots: vec!["p".into(), "q".into()],
        edges: vec![
            gkm_core::abelian::AbelianEdge {
                a: 0,
                b: 1,
                label: Weight::from_ints(&[1, -1]),
            },
            gkm_core::abelian::AbelianEdge {
                a: 0,
                b: 1,
                label: Weight::from_ints(&[1, 1]),
            },
        ],
        stars: vec![],
        star_edges: vec![],
    };
    let swap = enumerate_group(&[LinearMap::from_int_rows(&[&[0, 1], &[1, 0]])]).unwrap();
    let action = VertexGroupAction {
        group: swap,
        perms: vec![vec![0, 1], vec![1, 0]],
    };
    let invariant = invariant_hilbert(&graph, &action, 6).unwrap();
    let nonabelian = nonabelian_hilbert(&u2_graph(), 6).unwrap();
    assert_eq!(invariant, nonabelian);
    assert_eq!(nonabelian, vec![1, 1, 3, 3, 5, 5, 7]);
}

/// One circle with two torus dots. The base point is the long root
/// (3,2); the edge space is the line orthogonal to the short root (2,1),
/// spanned by (0,1); the arrow is the unique element of the long-root
/// Weyl subgroup taking (3,2) to its reflection (-3,-1).
fn g2_loop_graph() -> NonAbelianGkmGraph {
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

#[test]
fn g2_loop_agrees_with_invariant_k6_algebra() {
    let g2 = build_root_system(Family::G, 2).unwrap();
    let base = Weight::from_ints(&[3, 2]);
    let k6 = build_orbit_graph(&g2, &base).unwrap();
    assert_eq!(k6.dots.len(), 6);
    assert_eq!(k6.edges.len(), 15);
    let weights = weyl_group(&g2).orbit(&base);
    // Long-root subgroup: reflections in (0,1) and (3,1) generate the
    // order-6 Weyl group of the long A2 subsystem.
    let sub = enumerate_group(&[
        g2.reflection(&Weight::from_ints(&[0, 1])).unwrap(),
        g2.reflection(&Weight::from_ints(&[3, 1])).unwrap(),
    ])
    .unwrap();
    assert_eq!(sub.order(), 6);
    let action = VertexGroupAction::from_weights(sub, &weights).unwrap();
    let invariant = invariant_hilbert(&k6, &action, 6).unwrap();
    let nonabelian = nonabelian_hilbert(&g2_loop_graph(), 6).unwrap();
    assert_eq!(invariant, nonabelian);
    assert_eq!(nonabelian, vec![1, 1, 2, 3, 4, 5, 6]);
}
