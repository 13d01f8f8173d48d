use super::Graph;

/// Host adjacency as seen by the matcher. `None` marks a pair whose relation
/// is not known; such pairs can never be used.
pub trait HostRelation {
    fn host_len(&self) -> usize;
    fn relation(&self, a: usize, b: usize) -> Option<bool>;
}

impl HostRelation for Graph {
    fn host_len(&self) -> usize {
        self.len()
    }

    fn relation(&self, a: usize, b: usize) -> Option<bool> {
        Some(self.has_edge(a, b))
    }
}

/// `mapping[v]` is the host vertex assigned to pattern vertex `v`.
pub type Mapping = Vec<usize>;

/// Induced-subgraph embedding of `pattern` into `host`, if one exists.
pub fn induced_match(pattern: &Graph, host: &Graph) -> Option<Mapping> {
    induced_match_with(pattern, host)
}

/// Backtracking over pattern vertices in descending-degree order (ties by
/// label), trying host vertices in index order. The first mapping found in
/// that order is returned, so results are reproducible.
pub fn induced_match_with<H: HostRelation + ?Sized>(pattern: &Graph, host: &H) -> Option<Mapping> {
    let n = pattern.len();
    if n > host.host_len() {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        pattern
            .degree(b)
            .cmp(&pattern.degree(a))
            .then_with(|| pattern.label(a).cmp(pattern.label(b)))
    });
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; host.host_len()];
    if extend(pattern, host, &order, 0, &mut mapping, &mut used) {
        Some(mapping)
    } else {
        None
    }
}

fn extend<H: HostRelation + ?Sized>(
    pattern: &Graph,
    host: &H,
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for cand in 0..host.host_len() {
        if used[cand] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            host.relation(mapping[u], cand) == Some(pattern.has_edge(u, v))
        });
        if !consistent {
            continue;
        }
        mapping[v] = cand;
        used[cand] = true;
        if extend(pattern, host, order, depth + 1, mapping, used) {
            return true;
        }
        used[cand] = false;
    }
    mapping[v] = usize::MAX;
    false
}

/// Checks injectivity and that adjacency and non-adjacency are preserved.
pub fn is_induced_embedding<H: HostRelation + ?Sized>(pattern: &Graph, host: &H, mapping: &[usize]) -> bool {
    if mapping.len() != pattern.len() || mapping.iter().any(|&h| h >= host.host_len()) {
        return false;
    }
    (0..pattern.len()).all(|u| {
        (u + 1..pattern.len()).all(|v| {
            mapping[u] != mapping[v] && host.relation(mapping[u], mapping[v]) == Some(pattern.has_edge(u, v))
        })
    })
}
