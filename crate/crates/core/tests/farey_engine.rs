use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

use curvekit::farey::{bounded_search, farey_embed, is_farey_embeddable, verify_certificate, EmbedPath, Slope};
use curvekit::graph::enumerate::graph_classes_up_to;
use curvekit::graph::Graph;

fn strictly_inside(s: &Slope, k: usize) -> bool {
    let k = BigInt::from(k);
    !s.is_infinity() && &k * s.q() < *s.p() && *s.p() < (&k + 1) * s.q()
}

fn check_embedding(g: &Graph) {
    let e = farey_embed(g).unwrap();
    assert_eq!(e.path, EmbedPath::Constructive);
    assert!(verify_certificate(g, &e.certificate).unwrap());
    let slopes = e.certificate.assignment.slopes().unwrap();
    let comps = g.component_indices();
    for (k, comp) in comps.iter().enumerate() {
        for &v in comp {
            assert!(strictly_inside(&slopes[g.label(v)], k), "{} outside ({k},{})", slopes[g.label(v)], k + 1);
        }
    }
    for (a, ca) in comps.iter().enumerate() {
        for cb in &comps[a + 1..] {
            for &u in ca {
                for &v in cb {
                    let d = slopes[g.label(u)].det(&slopes[g.label(v)]).abs();
                    assert!(d >= BigInt::from(2));
                }
            }
        }
    }
}

#[test]
fn every_accepted_graph_up_to_six_vertices_embeds() {
    let mut accepted = 0;
    for g in graph_classes_up_to(6) {
        if is_farey_embeddable(&g).is_ok() {
            accepted += 1;
            check_embedding(&g);
        } else {
            assert!(farey_embed(&g).is_err());
        }
    }
    assert!(accepted > 50);
}

#[test]
fn bounded_search_rediscovers_at_certificate_height() {
    for g in graph_classes_up_to(5) {
        if is_farey_embeddable(&g).is_err() {
            continue;
        }
        let cert = farey_embed(&g).unwrap().certificate;
        let q: u64 = cert.max_height().unwrap().try_into().unwrap();
        let found = bounded_search(&g, q).expect("search at certificate height");
        assert!(verify_certificate(&g, &found).unwrap());
    }
}

#[test]
fn bounded_search_examples() {
    use curvekit::graph::named;
    let k3 = bounded_search(&named::complete(3), 1).unwrap();
    let mut got: Vec<String> = k3.assignment.slopes().unwrap().values().map(|s| s.to_string()).collect();
    got.sort();
    assert_eq!(got, ["0/1", "1/0", "1/1"]);
    assert!(bounded_search(&named::cycle(4), 5).is_none());
    let k2 = bounded_search(&named::complete(2), 1).unwrap();
    let mut got: Vec<String> = k2.assignment.slopes().unwrap().values().map(|s| s.to_string()).collect();
    got.sort();
    assert_eq!(got, ["0/1", "1/0"]);
}

/// A random chordal outerplanar graph: start from isolated vertices and add
/// vertices either as leaves or as ears on an edge that lies in one triangle.
fn random_farey_graph(n: usize, choices: &[(u8, usize, usize)]) -> Graph {
    let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut g = Graph::from_edges(&labels, &[]).unwrap();
    let mut triangle_count = std::collections::HashMap::new();
    for v in 1..n {
        let (kind, a, b) = choices[v];
        let u = a % v;
        match kind % 3 {
            0 => {}
            1 => g.add_edge(u, v).unwrap(),
            _ => {
                let edges: Vec<(usize, usize)> = g
                    .edges()
                    .filter(|e| triangle_count.get(e).copied().unwrap_or(0) < 2 && e.1 < v)
                    .collect();
                if edges.is_empty() {
                    g.add_edge(u, v).unwrap();
                } else {
                    let (x, y) = edges[b % edges.len()];
                    g.add_edge(x, v).unwrap();
                    g.add_edge(y, v).unwrap();
                    *triangle_count.entry((x, y)).or_insert(0) += 1;
                    triangle_count.insert((x, v), 1);
                    triangle_count.insert((y, v), 1);
                }
            }
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn random_chordal_outerplanar_graphs_embed(
        n in 1usize..14,
        choices in proptest::collection::vec((any::<u8>(), any::<usize>(), any::<usize>()), 14),
    ) {
        let g = random_farey_graph(n, &choices);
        prop_assert!(is_farey_embeddable(&g).is_ok());
        check_embedding(&g);
    }

    #[test]
    fn random_trees_embed(parents in proptest::collection::vec(any::<usize>(), 0..10)) {
        let n = parents.len() + 1;
        let labels: Vec<String> = (0..n).map(|i| format!("t{i}")).collect();
        let edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, p)| (p % (i + 1), i + 1)).collect();
        let g = Graph::from_edges(&labels, &edges).unwrap();
        check_embedding(&g);
    }
}
