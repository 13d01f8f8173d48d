//! Isomorphism classes of small graphs.

use std::collections::BTreeSet;

use super::Graph;

fn pair_bit(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    // row-major index into the strict upper triangle
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn mask_of(n: usize, adj: &[Vec<bool>], perm: &[usize]) -> u64 {
    let mut m = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if adj[perm[i]][perm[j]] {
                m |= 1 << pair_bit(n, i, j);
            }
        }
    }
    m
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            let v = left.remove(i);
            cur.push(v);
            go(cur, left, out);
            cur.pop();
            left.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// Canonical code of a graph on at most 11 vertices: the minimum adjacency
/// bitmask over all vertex orders.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.len();
    assert!(n <= 11, "canonical_code is brute force");
    let adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    permutations(n).iter().map(|p| mask_of(n, &adj, p)).min().unwrap_or(0)
}

fn from_mask(n: usize, mask: u64) -> Graph {
    let labels: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if mask >> pair_bit(n, i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(&labels, &edges).unwrap()
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices (`n <= 7`), labelled `a, b, ...`.
pub fn graph_classes(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "graph_classes is brute force");
    if n == 0 {
        return vec![Graph::new()];
    }
    let perms = permutations(n);
    let mut codes = BTreeSet::new();
    for base in graph_classes(n - 1) {
        for subset in 0u32..(1 << (n - 1)) {
            let mut adj = vec![vec![false; n]; n];
            for (u, v) in base.edges() {
                adj[u][v] = true;
                adj[v][u] = true;
            }
            for u in (0..n - 1).filter(|u| subset >> u & 1 == 1) {
                adj[u][n - 1] = true;
                adj[n - 1][u] = true;
            }
            let code = perms.iter().map(|p| mask_of(n, &adj, p)).min().unwrap();
            codes.insert(code);
        }
    }
    codes.into_iter().map(|c| from_mask(n, c)).collect()
}

/// Classes on `1..=n` vertices.
pub fn graph_classes_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(graph_classes).collect()
}
