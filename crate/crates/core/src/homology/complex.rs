//! Simplicial complexes on variable indices and their reduced homology.

use serde::Serialize;

use crate::homology::linalg::{rank, IntMatrix};
use crate::homology::Field;
use crate::monomial::{Monomial, MonomialIdeal};

/// A simplicial complex whose vertices are variable indices. Faces are
/// ascending index lists. The void complex has no faces; the irrelevant
/// complex has only the empty face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicialComplexOnVariables {
    pub vertices: Vec<usize>,
    /// `faces[k]` holds the faces with `k` vertices.
    faces: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplexOnVariables {
    pub fn void(vertices: Vec<usize>) -> Self {
        SimplicialComplexOnVariables {
            vertices,
            faces: Vec::new(),
        }
    }

    /// Builds the complex from a downward-closed face predicate, level by
    /// level.
    pub fn from_predicate<F>(vertices: Vec<usize>, is_face: F) -> Self
    where
        F: Fn(&[usize]) -> bool,
    {
        if !is_face(&[]) {
            return Self::void(vertices);
        }
        let mut faces: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
        loop {
            let last = faces.last().expect("nonempty");
            let mut next = Vec::new();
            for f in last {
                let start = f.last().map_or(0, |&v| {
                    vertices.iter().position(|&w| w == v).expect("vertex") + 1
                });
                for &v in &vertices[start..] {
                    let mut g = f.clone();
                    g.push(v);
                    if is_face(&g) {
                        next.push(g);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            faces.push(next);
        }
        SimplicialComplexOnVariables { vertices, faces }
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Faces with `k` vertices.
    pub fn faces_of_size(&self, k: usize) -> &[Vec<usize>] {
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.faces.iter().flatten()
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Largest face size.
    pub fn max_face_size(&self) -> Option<usize> {
        self.faces.len().checked_sub(1)
    }
}

/// The upper Koszul simplicial complex of `ideal` at multidegree `a`:
/// squarefree `b <= supp(a)` with `x^{a-b}` in the ideal.
pub fn koszul_complex_at_degree(
    ideal: &MonomialIdeal,
    a: &Monomial,
) -> SimplicialComplexOnVariables {
    let vertices = a.support();
    let base = a.exponents().to_vec();
    SimplicialComplexOnVariables::from_predicate(vertices, |face| {
        let mut e = base.clone();
        for &v in face {
            e[v] -= 1;
        }
        ideal.contains_unchecked(&Monomial::new(e))
    })
}

/// Boundary map from faces with `k` vertices to faces with `k - 1`.
fn boundary(c: &SimplicialComplexOnVariables, k: usize) -> IntMatrix {
    let lower = c.faces_of_size(k - 1);
    let upper = c.faces_of_size(k);
    let mut m = IntMatrix::zeros(lower.len(), upper.len());
    for (j, f) in upper.iter().enumerate() {
        for drop in 0..f.len() {
            let mut g = f.clone();
            g.remove(drop);
            let i = lower
                .binary_search(&g)
                .expect("complex is closed under subsets");
            m.set(i, j, if drop % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Rank of the reduced homology `H~_i` for `i >= -1`.
pub fn reduced_homology_rank(c: &SimplicialComplexOnVariables, i: i64, field: Field) -> u64 {
    all_reduced_homology(c, field)
        .into_iter()
        .find(|&(d, _)| d == i)
        .map_or(0, |(_, r)| r)
}

/// `(i, rank H~_i)` for every `i` with a nonzero rank.
pub fn all_reduced_homology(c: &SimplicialComplexOnVariables, field: Field) -> Vec<(i64, u64)> {
    let Some(top) = c.max_face_size() else {
        return Vec::new();
    };
    // ranks[k] = rank of the boundary out of faces with k vertices.
    let mut ranks = vec![0usize; top + 2];
    for (k, r) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
        *r = rank(&boundary(c, k), field);
    }
    let mut out = Vec::new();
    for k in 0..=top {
        let chains = c.faces_of_size(k).len();
        let h = chains - ranks[k] - ranks[k + 1];
        if h > 0 {
            out.push((k as i64 - 1, h as u64));
        }
    }
    out
}
