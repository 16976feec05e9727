//! Graphs and the set functions they define on their edge sets.

use crate::error::{Error, Result};
use crate::ground::{is_valid_label, GroundSet, Subset, MAX_ELEMENTS};
use crate::rat::int;
use crate::setfn::SetFunction;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub label: String,
    /// Vertex positions; equal for a loop.
    pub ends: (usize, usize),
}

/// A labeled multigraph. Loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph from vertex labels and `(edge, end, end)` triples.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S, S)>,
        S: Into<String>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        for (i, v) in vertices.iter().enumerate() {
            if !is_valid_label(v) {
                return Err(Error::InvalidLabel(v.clone()));
            }
            if vertices[..i].contains(v) {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let mut out = Graph {
            vertices,
            edges: Vec::new(),
        };
        for (label, u, v) in edges {
            let label = label.into();
            if !is_valid_label(&label) {
                return Err(Error::InvalidLabel(label));
            }
            if out.edges.iter().any(|e| e.label == label) {
                return Err(Error::DuplicateLabel(label));
            }
            let u = out.vertex_position(&label, u.into())?;
            let v = out.vertex_position(&label, v.into())?;
            out.edges.push(Edge {
                label,
                ends: (u, v),
            });
        }
        if out.edges.len() > MAX_ELEMENTS {
            return Err(Error::TooManyElements {
                size: out.edges.len(),
                cap: MAX_ELEMENTS,
            });
        }
        Ok(out)
    }

    fn vertex_position(&self, edge: &str, vertex: String) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| *v == vertex)
            .ok_or(Error::UnknownVertex {
                edge: edge.to_string(),
                vertex,
            })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_ground(&self) -> GroundSet {
        GroundSet::new(self.edges.iter().map(|e| e.label.clone()))
            .expect("edge labels are validated on construction")
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.ends.0 == v) + usize::from(e.ends.1 == v))
            .sum()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| self.degree(v) == 0)
            .collect()
    }

    /// The same graph with every vertex that meets no edge removed.
    pub fn without_isolated(&self) -> Graph {
        let keep: Vec<usize> = (0..self.vertices.len())
            .filter(|&v| self.degree(v) > 0)
            .collect();
        let new_index = |v: usize| keep.iter().position(|&k| k == v).expect("non-isolated");
        Graph {
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    label: e.label.clone(),
                    ends: (new_index(e.ends.0), new_index(e.ends.1)),
                })
                .collect(),
        }
    }

    /// A loop, or an edge with an end of degree one.
    pub fn is_loop_or_pendant(&self, edge: usize) -> bool {
        let (u, v) = self.edges[edge].ends;
        u == v || self.degree(u) == 1 || self.degree(v) == 1
    }

    /// Bit masks of the end vertices of each edge, over the non-isolated vertices.
    fn edge_vertex_masks(&self) -> Vec<u64> {
        let touched: Vec<usize> = (0..self.vertices.len())
            .filter(|&v| self.degree(v) > 0)
            .collect();
        let bit = |v: usize| 1u64 << touched.iter().position(|&t| t == v).expect("touched");
        self.edges
            .iter()
            .map(|e| bit(e.ends.0) | bit(e.ends.1))
            .collect()
    }

    /// `|V(X)|` for every edge subset `X`, where `V(X)` is the set of
    /// vertices incident with an edge of `X`.
    fn incidence_counts(&self) -> Vec<u32> {
        let masks = self.edge_vertex_masks();
        let size = 1usize << self.edges.len();
        let mut touched = vec![0u64; size];
        for m in 1..size {
            touched[m] = touched[m & (m - 1)] | masks[m.trailing_zeros() as usize];
        }
        touched.into_iter().map(u64::count_ones).collect()
    }
}

/// `λ_G(X) = |V(X)| + |V(E-X)| - |V|`. Isolated vertices are rejected since
/// they would make `λ_G({})` negative.
pub fn graph_connectivity(g: &Graph) -> Result<SetFunction> {
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(g.vertices[v].clone()));
    }
    let counts = g.incidence_counts();
    let ground = g.edge_ground();
    let total = g.vertices.len() as i64;
    Ok(SetFunction::from_fn(ground.clone(), |x| {
        let c = ground.complement(x);
        int(counts[x.index()] as i64 + counts[c.index()] as i64 - total)
    }))
}

/// `r_G(X) = |V(X)|`.
pub fn graph_rank(g: &Graph) -> SetFunction {
    let counts = g.incidence_counts();
    SetFunction::from_fn(g.edge_ground(), |x| int(counts[x.index()] as i64))
}

/// Rank function of the cycle matroid: `|V(X)| - c(X)`, where `c(X)` counts the
/// components of the subgraph formed by `X` and the vertices it touches.
pub fn cycle_matroid(g: &Graph) -> SetFunction {
    let n_vertices = g.vertices.len();
    SetFunction::from_fn(g.edge_ground(), |x| {
        int(forest_size(n_vertices, x.elements().map(|e| g.edges[e].ends)) as i64)
    })
}

/// Number of edges in a spanning forest, i.e. `|V(X)| - c(X)`.
fn forest_size(n_vertices: usize, edges: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut parent: Vec<usize> = (0..n_vertices).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut merged = 0;
    for (u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            merged += 1;
        }
    }
    merged
}

/// Edges as a subset of the edge ground set; convenience for tests and callers.
pub fn edge_subset(g: &Graph, labels: &[&str]) -> Result<Subset> {
    g.edge_ground().subset(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check;

    pub(crate) fn triangle() -> Graph {
        Graph::new(
            ["u", "v", "w"],
            [("e1", "u", "v"), ("e2", "v", "w"), ("e3", "u", "w")],
        )
        .unwrap()
    }

    fn path() -> Graph {
        Graph::new(["u", "v", "w"], [("e1", "u", "v"), ("e2", "v", "w")]).unwrap()
    }

    fn single_loop() -> Graph {
        Graph::new(["v"], [("e", "v", "v")]).unwrap()
    }

    fn values(f: &SetFunction) -> Vec<i64> {
        f.table()
            .iter()
            .map(|v| v.to_integer().try_into().unwrap())
            .collect()
    }

    #[test]
    fn triangle_connectivity() {
        let lambda = graph_connectivity(&triangle()).unwrap();
        assert_eq!(values(&lambda), [0, 2, 2, 2, 2, 2, 2, 0]);
        assert!(check::check_connectivity_function(&lambda).holds());
    }

    #[test]
    fn pendant_and_loop_connectivity() {
        let lambda = graph_connectivity(&path()).unwrap();
        assert_eq!(*lambda.eval_labels(["e1"]).unwrap(), int(1));
        let lambda = graph_connectivity(&single_loop()).unwrap();
        assert_eq!(values(&lambda), [0, 0]);
    }

    #[test]
    fn isolated_vertices_are_rejected_or_stripped() {
        let g = Graph::new(["u", "v", "x"], [("e", "u", "v")]).unwrap();
        assert!(matches!(graph_connectivity(&g), Err(Error::IsolatedVertex(v)) if v == "x"));
        let stripped = g.without_isolated();
        assert_eq!(stripped.vertices(), ["u", "v"]);
        assert_eq!(values(&graph_connectivity(&stripped).unwrap()), [0, 0]);
    }

    #[test]
    fn ranks() {
        assert_eq!(values(&graph_rank(&triangle())), [0, 2, 2, 3, 2, 3, 3, 3]);
        assert_eq!(values(&graph_rank(&single_loop())), [0, 1]);
        let empty = Graph::new(["v"], Vec::<(&str, &str, &str)>::new()).unwrap();
        assert_eq!(graph_rank(&empty), SetFunction::empty());
    }

    #[test]
    fn cycle_matroids() {
        assert_eq!(
            values(&cycle_matroid(&triangle())),
            [0, 1, 1, 2, 1, 2, 2, 2]
        );
        assert_eq!(values(&cycle_matroid(&single_loop())), [0, 0]);
        assert_eq!(values(&cycle_matroid(&path())), [0, 1, 1, 2]);
        let parallel = Graph::new(["u", "v"], [("p", "u", "v"), ("q", "v", "u")]).unwrap();
        assert_eq!(values(&cycle_matroid(&parallel)), [0, 1, 1, 1]);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Graph::new(["u"], [("e", "u", "z")]),
            Err(Error::UnknownVertex { .. })
        ));
        assert!(matches!(
            Graph::new(["u"], [("e", "u", "u"), ("e", "u", "u")]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(
            Graph::new(["u", "u"], Vec::<(&str, &str, &str)>::new()),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn pendant_detection() {
        let g = path();
        assert!(g.is_loop_or_pendant(0) && g.is_loop_or_pendant(1));
        assert!(!triangle().is_loop_or_pendant(0));
        assert!(single_loop().is_loop_or_pendant(0));
        assert_eq!(edge_subset(&g, &["e2"]).unwrap(), Subset(0b10));
    }
}
