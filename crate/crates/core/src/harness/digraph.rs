//! Weighted oriented graphs and their edge ideals.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// A simple graph with every edge directed and a positive weight on every
/// vertex. Vertices are `0..vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedOrientedGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    weights: Vec<u32>,
}

impl WeightedOrientedGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != vertices {
            return Err(Error::InvalidGraph(format!(
                "{} weights for {vertices} vertices",
                weights.len()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidGraph("weights must be positive".into()));
        }
        let mut seen = BTreeSet::new();
        for &(i, j) in &edges {
            if i >= vertices || j >= vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge ({i}, {j}) leaves the vertex set"
                )));
            }
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
            }
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(Error::InvalidGraph(format!(
                    "repeated undirected edge {{{i}, {j}}}"
                )));
            }
        }
        Ok(WeightedOrientedGraph {
            vertices,
            edges,
            weights,
        })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn is_tail(&self, v: usize) -> bool {
        self.edges.iter().any(|&(i, _)| i == v)
    }

    pub fn is_head(&self, v: usize) -> bool {
        self.edges.iter().any(|&(_, j)| j == v)
    }

    /// Same orientation, every weight `>= 2` replaced by 2.
    pub fn capped(&self) -> WeightedOrientedGraph {
        WeightedOrientedGraph {
            vertices: self.vertices,
            edges: self.edges.clone(),
            weights: self.weights.iter().map(|&w| w.min(2)).collect(),
        }
    }

    /// Weight 1 on every vertex that is never the tail of an edge. The edge
    /// ideal only changes through heads that are also sinks.
    pub fn with_unit_sinks(&self) -> WeightedOrientedGraph {
        let weights = (0..self.vertices)
            .map(|v| if self.is_tail(v) { self.weights[v] } else { 1 })
            .collect();
        WeightedOrientedGraph {
            vertices: self.vertices,
            edges: self.edges.clone(),
            weights,
        }
    }

    /// Every vertex of weight `>= 2` that receives an edge also emits one, so
    /// its row in the incidence matrix contains the entry 1.
    pub fn heavy_heads_are_tails(&self) -> bool {
        (0..self.vertices).all(|v| self.weights[v] < 2 || !self.is_head(v) || self.is_tail(v))
    }
}

/// `I(D) = (x_i x_j^{w_j} : (i, j) in E(D))`.
pub fn edge_ideal_from_digraph(d: &WeightedOrientedGraph) -> MonomialIdeal {
    let gens = d.edges.iter().map(|&(i, j)| {
        let mut e = vec![0u32; d.vertices];
        e[i] = 1;
        e[j] = d.weights[j];
        Monomial::new(e)
    });
    MonomialIdeal::minimalize(d.vertices, gens).expect("edge monomials have n variables")
}

/// Random orientation of a random simple graph with at least one edge.
/// Each pair is an edge with probability 1/2; weights are uniform in
/// `1..=max_weight`.
pub fn random_digraph<R: Rng + ?Sized>(
    vertices: usize,
    max_weight: u32,
    rng: &mut R,
) -> WeightedOrientedGraph {
    assert!(vertices >= 2 && max_weight >= 1);
    let mut pairs: Vec<(usize, usize)> = (0..vertices)
        .flat_map(|i| (i + 1..vertices).map(move |j| (i, j)))
        .collect();
    pairs.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &(i, j) in &pairs {
        if rng.gen_bool(0.5) {
            edges.push(if rng.gen_bool(0.5) { (i, j) } else { (j, i) });
        }
    }
    if edges.is_empty() {
        edges.push(pairs[0]);
    }
    let weights = (0..vertices)
        .map(|_| rng.gen_range(1..=max_weight))
        .collect();
    WeightedOrientedGraph::new(vertices, edges, weights).expect("random graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let d = WeightedOrientedGraph::new(2, vec![(0, 1)], vec![1, 3]).unwrap();
        let i = edge_ideal_from_digraph(&d);
        assert_eq!(i.generators()[0].exponents(), &[1, 3]);
    }

    #[test]
    fn unit_weights_give_the_edge_ideal() {
        let d = WeightedOrientedGraph::new(3, vec![(0, 1), (2, 1), (2, 0)], vec![1, 1, 1]).unwrap();
        let i = edge_ideal_from_digraph(&d);
        assert!(i.is_squarefree());
        assert_eq!(i.len(), 3);
    }

    #[test]
    fn invalid_graphs() {
        assert!(WeightedOrientedGraph::new(2, vec![(0, 0)], vec![1, 1]).is_err());
        assert!(WeightedOrientedGraph::new(2, vec![(0, 1), (1, 0)], vec![1, 1]).is_err());
        assert!(WeightedOrientedGraph::new(2, vec![(0, 1)], vec![1, 0]).is_err());
        assert!(WeightedOrientedGraph::new(2, vec![(0, 2)], vec![1, 1]).is_err());
    }
}
