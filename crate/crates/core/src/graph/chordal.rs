use std::collections::BTreeSet;

use super::{ForbiddenWitness, Graph};

/// Perfect elimination ordering of a chordal graph, or a chordless cycle of
/// length at least four.
pub fn is_chordal(g: &Graph) -> Result<(), ForbiddenWitness> {
    let mut alive: BTreeSet<usize> = (0..g.len()).collect();
    loop {
        let simplicial = alive.iter().copied().find(|&v| {
            let ns: Vec<usize> = g.neighbors(v).filter(|u| alive.contains(u)).collect();
            ns.iter()
                .enumerate()
                .all(|(i, &a)| ns[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        });
        match simplicial {
            Some(v) => {
                alive.remove(&v);
            }
            None if alive.is_empty() => return Ok(()),
            None => return Err(chordless_cycle(g, &alive)),
        }
    }
}

/// In a graph without simplicial vertices, some vertex `v` has non-adjacent
/// neighbours `a`, `b` joined by a path avoiding the rest of `N[v]`; the
/// shortest such path closes a chordless cycle through `v`.
fn chordless_cycle(g: &Graph, alive: &BTreeSet<usize>) -> ForbiddenWitness {
    for &v in alive {
        let ns: Vec<usize> = g.neighbors(v).filter(|u| alive.contains(u)).collect();
        for (i, &a) in ns.iter().enumerate() {
            for &b in &ns[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let keep = |u: usize| {
                    alive.contains(&u) && u != v && (u == a || u == b || !g.has_edge(u, v))
                };
                if let Some(path) = g.shortest_path(a, b, keep) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return ForbiddenWitness::chordless_cycle(g, &cycle);
                }
            }
        }
    }
    unreachable!("a graph without simplicial vertices contains a chordless cycle")
}
