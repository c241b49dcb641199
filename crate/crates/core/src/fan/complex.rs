//! Simplicial complexes given by their facets.

use std::collections::HashSet;

/// Face lattice of a simplicial complex on vertices `0..vertex_count`.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces: HashSet<Vec<usize>>,
    max_face_size: usize,
}

impl SimplicialComplex {
    pub fn from_facets(facets: &[Vec<usize>], vertex_count: usize) -> Self {
        let mut faces = HashSet::new();
        let mut max_face_size = 0;
        for facet in facets {
            let mut f = facet.clone();
            f.sort_unstable();
            f.dedup();
            max_face_size = max_face_size.max(f.len());
            let k = f.len();
            for mask in 0u64..(1u64 << k) {
                let face: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                faces.insert(face);
            }
        }
        SimplicialComplex {
            vertex_count,
            faces,
            max_face_size,
        }
    }

    /// `face` must be sorted.
    pub fn is_face(&self, face: &[usize]) -> bool {
        self.faces.contains(face)
    }

    /// Inclusion-minimal non-faces, sorted by size and then lexicographically.
    ///
    /// Candidates of size `k + 1` are built from faces of size `k` by
    /// appending a larger vertex; a candidate is a minimal non-face when
    /// every facet-deleted subset is a face but the candidate is not.
    pub fn minimal_non_faces(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0..self.vertex_count)
            .filter(|&v| !self.is_face(&[v]))
            .map(|v| vec![v])
            .collect();

        let mut layer: Vec<Vec<usize>> = (0..self.vertex_count)
            .filter(|&v| self.is_face(&[v]))
            .map(|v| vec![v])
            .collect();
        for _ in 1..=self.max_face_size {
            let mut next_layer = Vec::new();
            let mut found = Vec::new();
            for face in &layer {
                let last = *face.last().expect("faces in a layer are nonempty");
                for v in last + 1..self.vertex_count {
                    let mut cand = face.clone();
                    cand.push(v);
                    let subsets_are_faces = (0..cand.len()).all(|skip| {
                        let sub: Vec<usize> = cand
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != skip)
                            .map(|(_, &x)| x)
                            .collect();
                        self.is_face(&sub)
                    });
                    if !subsets_are_faces {
                        continue;
                    }
                    if self.is_face(&cand) {
                        next_layer.push(cand);
                    } else {
                        found.push(cand);
                    }
                }
            }
            found.sort();
            out.extend(found);
            layer = next_layer;
            if layer.is_empty() {
                break;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_boundary_non_faces() {
        // 4-cycle 0-1-2-3-0
        let c = SimplicialComplex::from_facets(&[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]], 4);
        assert_eq!(c.minimal_non_faces(), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn boundary_of_simplex() {
        let facets: Vec<Vec<usize>> = (0..5)
            .map(|skip| (0..5).filter(|&i| i != skip).collect())
            .collect();
        let c = SimplicialComplex::from_facets(&facets, 5);
        assert_eq!(c.minimal_non_faces(), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn unused_vertex_is_non_face() {
        let c = SimplicialComplex::from_facets(&[vec![0, 1]], 3);
        assert_eq!(c.minimal_non_faces(), vec![vec![2]]);
    }
}
