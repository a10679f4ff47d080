//! A small multigraph type shared by the graphic matroid oracle and the
//! cut-function constructions.

use crate::error::{Error, Result};

/// Undirected multigraph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(u8, u8)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(u8, u8)>) -> Result<Self> {
        if vertex_count > 64 {
            return Err(Error::GroundTooLarge {
                requested: vertex_count,
                cap: 64,
                what: "graph",
            });
        }
        for &(u, v) in &edges {
            if u as usize >= vertex_count || v as usize >= vertex_count {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{vertex_count}"
                )));
            }
        }
        Ok(Graph {
            vertex_count,
            edges,
        })
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n as u8)
            .flat_map(|u| ((u + 1)..n as u8).map(move |v| (u, v)))
            .collect();
        Graph::new(n, edges).expect("complete graph")
    }

    pub fn cycle(n: usize) -> Graph {
        let edges = (0..n as u8).map(|u| (u, ((u as usize + 1) % n) as u8)).collect();
        Graph::new(n, edges).expect("cycle graph")
    }

    pub fn path(n: usize) -> Graph {
        let edges = (0..n.saturating_sub(1) as u8).map(|u| (u, u + 1)).collect();
        Graph::new(n, edges).expect("path graph")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u8, u8)] {
        &self.edges
    }

    /// Number of edges with exactly one endpoint in `vertex_mask`.
    pub fn crossing_edges(&self, vertex_mask: u64) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| (vertex_mask >> u & 1) != (vertex_mask >> v & 1))
            .count()
    }

    /// Rank of an edge subset in the graphic matroid: incident vertices
    /// minus connected components of the selected subgraph.
    pub fn forest_rank(&self, edge_mask: u64) -> u32 {
        let mut parent: Vec<u8> = (0..self.vertex_count as u8).collect();
        fn find(parent: &mut [u8], x: u8) -> u8 {
            let mut root = x;
            while parent[root as usize] != root {
                root = parent[root as usize];
            }
            let mut cur = x;
            while parent[cur as usize] != root {
                let next = parent[cur as usize];
                parent[cur as usize] = root;
                cur = next;
            }
            root
        }
        let mut rank = 0u32;
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if edge_mask >> i & 1 == 0 {
                continue;
            }
            let ru = find(&mut parent, u);
            let rv = find(&mut parent, v);
            if ru != rv {
                parent[ru as usize] = rv;
                rank += 1;
            }
        }
        rank
    }
}
