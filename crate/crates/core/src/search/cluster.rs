use serde::{Deserialize, Serialize};

/// Points grouped into parts of diameter at most `d` that sit more than
/// `g(d)` apart.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClusterPartition {
    pub parts: Vec<Vec<usize>>,
    #[serde(rename = "D")]
    pub d: f64,
    /// Smallest distance between two parts; `None` with a single part.
    pub separation: Option<f64>,
    /// `D` after iterating `D -> g(D) + 2D` from 0, `N - 1` times.
    pub recursion_bound: f64,
}

/// Starts from singletons and merges the two closest parts while some pair
/// of parts is within `g(D)`, `D` being the current largest diameter.
pub fn cluster_partition<P>(points: &[P], metric: impl Fn(&P, &P) -> f64, g: impl Fn(f64) -> f64) -> ClusterPartition {
    let n = points.len();
    let dist: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| metric(&points[i], &points[j])).collect()).collect();
    let mut parts: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let diam = |p: &[usize]| p.iter().flat_map(|&i| p.iter().map(move |&j| (i, j))).map(|(i, j)| dist[i][j]).fold(0.0, f64::max);
    let gap = |a: &[usize], b: &[usize]| {
        a.iter().flat_map(|&i| b.iter().map(move |&j| (i, j))).map(|(i, j)| dist[i][j]).fold(f64::INFINITY, f64::min)
    };
    loop {
        let d = parts.iter().map(|p| diam(p)).fold(0.0, f64::max);
        let mut closest: Option<(f64, usize, usize)> = None;
        for a in 0..parts.len() {
            for b in a + 1..parts.len() {
                let x = gap(&parts[a], &parts[b]);
                if closest.is_none_or(|(y, _, _)| x < y) {
                    closest = Some((x, a, b));
                }
            }
        }
        match closest {
            Some((x, a, b)) if x <= g(d) => {
                let merged = parts.remove(b);
                parts[a].extend(merged);
                parts[a].sort_unstable();
            }
            _ => {
                return ClusterPartition {
                    parts,
                    d,
                    separation: closest.map(|c| c.0),
                    recursion_bound: recursion_bound(n, &g),
                }
            }
        }
    }
}

/// The diameter bound from iterating `D -> g(D) + 2D`, once per possible merge.
pub fn recursion_bound(n: usize, g: impl Fn(f64) -> f64) -> f64 {
    (1..n.max(1)).fold(0.0, |d, _| g(d) + 2.0 * d)
}
