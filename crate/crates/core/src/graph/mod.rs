//! Finite simple graphs with labelled vertices.

mod chordal;
mod cover;
pub mod enumerate;
mod matching;
mod outerplanar;
mod witness;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use chordal::is_chordal;
pub use cover::{clique_cover, clique_number, max_clique, CliqueCover};
pub use matching::{induced_match, induced_match_with, is_induced_embedding, HostRelation, Mapping};
pub use outerplanar::is_outerplanar;
pub(crate) use outerplanar::blocks;
pub use witness::{ForbiddenWitness, MinorKind, WitnessKind};

/// A finite simple undirected graph. Vertex order is the insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph on `n` vertices labelled `0..n`.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Self::new();
        for i in 0..n {
            g.add_vertex(i.to_string()).expect("fresh label");
        }
        g
    }

    pub fn from_edges<S: AsRef<str>>(labels: &[S], edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new();
        for l in labels {
            g.add_vertex(l.as_ref())?;
        }
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<usize> {
        let label = label.into();
        if self.index.contains_key(&label) {
            return Err(Error::InvalidGraph(format!("duplicate vertex '{label}'")));
        }
        let id = self.labels.len();
        self.index.insert(label.clone(), id);
        self.labels.push(label);
        self.adj.push(BTreeSet::new());
        Ok(id)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.len() || v >= self.len() {
            return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range")));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at '{}'", self.labels[u])));
        }
        if !self.adj[u].insert(v) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {}-{}",
                self.labels[u], self.labels[v]
            )));
        }
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Edges as index pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Induced subgraph on `vertices`, keeping their labels and the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new();
        for &v in vertices {
            g.add_vertex(self.labels[v].clone()).expect("distinct vertices");
        }
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).expect("simple");
                }
            }
        }
        g
    }

    /// Copy of the graph with one edge removed.
    pub(crate) fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u].remove(&v);
        g.adj[v].remove(&u);
        g
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn component_indices(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Shortest path from `from` to `to` using only vertices allowed by `keep`.
    pub(crate) fn shortest_path(
        &self,
        from: usize,
        to: usize,
        keep: impl Fn(usize) -> bool,
    ) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.len()];
        prev[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for v in self.neighbors(u) {
                if prev[v] == usize::MAX && keep(v) {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        None
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for l in &self.labels {
            let _ = writeln!(out, "  {};", dot_id(l));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {} -- {};", dot_id(&self.labels[u]), dot_id(&self.labels[v]));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.labels.clone(),
            edges: self
                .edges()
                .map(|(u, v)| (self.labels[u].clone(), self.labels[v].clone()))
                .collect(),
        }
    }

    /// Adjacency-list text, the same format [`parse_graph`] reads.
    pub fn to_adjacency_text(&self) -> String {
        let mut out = String::new();
        for v in 0..self.len() {
            let ns: Vec<&str> = self.neighbors(v).map(|u| self.label(u)).collect();
            let _ = writeln!(out, "{}: {}", self.labels[v], ns.join(","));
        }
        out
    }
}

fn dot_id(label: &str) -> String {
    format!("\"{}\"", label.replace('"', "\\\""))
}

/// Edge-list JSON document: `{"vertices":[...],"edges":[[u,v],...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(doc: GraphJson) -> Result<Graph> {
        let mut g = Graph::new();
        for v in doc.vertices {
            g.add_vertex(v)?;
        }
        for (a, b) in doc.edges {
            let u = g
                .index_of(&a)
                .ok_or_else(|| Error::InvalidGraph(format!("undeclared vertex '{a}'")))?;
            let v = g
                .index_of(&b)
                .ok_or_else(|| Error::InvalidGraph(format!("undeclared vertex '{b}'")))?;
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

/// Parses an adjacency-list document, or edge-list JSON when the text starts
/// with `{`.
///
/// Each non-comment line reads `label: n1, n2, ...`. An edge may be listed
/// from either or both endpoints; listing the same neighbour twice on one line
/// is an error, as is naming a vertex that has no line of its own.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        let doc: GraphJson = serde_json::from_str(text)?;
        return Graph::try_from(doc);
    }
    let mut g = Graph::new();
    let mut pending: Vec<(usize, usize, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (head, tail) = line.split_once(':').ok_or_else(|| Error::Parse {
            line: line_no,
            message: "expected 'label: neighbours'".into(),
        })?;
        let head = head.trim();
        if head.is_empty() {
            return Err(Error::Parse { line: line_no, message: "empty vertex label".into() });
        }
        let v = g.add_vertex(head).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        let mut seen = BTreeSet::new();
        for n in tail.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if !seen.insert(n.to_string()) {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("duplicate edge {head}-{n}"),
                });
            }
            pending.push((line_no, v, n.to_string()));
        }
    }
    for (line_no, v, n) in pending {
        let u = g.index_of(&n).ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("undeclared vertex '{n}'"),
        })?;
        if u == v {
            return Err(Error::Parse { line: line_no, message: format!("self-loop at '{n}'") });
        }
        if !g.has_edge(u, v) {
            g.add_edge(u, v).expect("checked");
        }
    }
    Ok(g)
}

/// Connected components as induced subgraphs, ordered by first vertex.
pub fn connected_components(g: &Graph) -> Vec<Graph> {
    g.component_indices().iter().map(|c| g.induced(c)).collect()
}

/// Small named graphs used throughout tests and examples.
pub mod named {
    use super::Graph;

    fn letters(n: usize) -> Vec<String> {
        (0..n)
            .map(|i| {
                if n <= 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("v{i}")
                }
            })
            .collect()
    }

    pub fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(&letters(n), &e).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        e.push((n - 1, 0));
        Graph::from_edges(&letters(n), &e).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::from_edges(&letters(n), &e).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..a {
            for j in 0..b {
                e.push((i, a + j));
            }
        }
        Graph::from_edges(&letters(a + b), &e).unwrap()
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_edges(&letters(n), &[]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_star() {
        let g = parse_graph("a:b,c\nb:a\nc:a").unwrap();
        assert_eq!(g.labels(), &["a", "b", "c"]);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && !g.has_edge(1, 2));
    }

    #[test]
    fn parses_isolated_vertex() {
        let g = parse_graph("a:\n").unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn duplicate_neighbour_is_an_error() {
        match parse_graph("a:b\nb:a,a") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_line_reports_line_number() {
        match parse_graph("# header\na:b\nb a") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn undeclared_neighbour_and_self_loop() {
        assert!(parse_graph("a:z").is_err());
        assert!(parse_graph("a:a").is_err());
    }

    #[test]
    fn comments_and_json() {
        let g = parse_graph("# two vertices\na: b # edge\nb:\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        let j = parse_graph(r#"{"vertices":["x","y","z"],"edges":[["x","y"]]}"#).unwrap();
        assert_eq!(j.len(), 3);
        assert!(j.has_edge(0, 1));
        let back = parse_graph(&serde_json::to_string(&j.to_json()).unwrap()).unwrap();
        assert_eq!(back, j);
        assert_eq!(parse_graph(&j.to_adjacency_text()).unwrap(), j);
    }

    #[test]
    fn components() {
        let mut g = named::complete(3);
        for l in ["x", "y", "z"] {
            g.add_vertex(l).unwrap();
        }
        g.add_edge(3, 4).unwrap();
        g.add_edge(4, 5).unwrap();
        g.add_edge(3, 5).unwrap();
        let comps = connected_components(&g);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3 && c.edge_count() == 3));
        assert!(connected_components(&Graph::new()).is_empty());
        assert_eq!(connected_components(&named::cycle(5)).len(), 1);
    }

    #[test]
    fn dot_export() {
        let dot = named::path(2).to_dot();
        assert!(dot.contains("\"a\" -- \"b\""));
    }
}
