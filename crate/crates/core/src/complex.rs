use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A simplicial complex on `{0, ..., n-1}` given by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Rejects facet lists where one facet contains another (including duplicates).
    pub fn new(n: usize, facets: Vec<VertexSet>) -> Result<Self> {
        let ambient = VertexSet::full(n);
        for (i, f) in facets.iter().enumerate() {
            if !f.is_subset(ambient) {
                return Err(Error::VertexOutOfRange {
                    vertex: (*f - ambient).first().unwrap_or(n),
                    n,
                });
            }
            for (j, g) in facets.iter().enumerate().skip(i + 1) {
                if f.is_subset(*g) || g.is_subset(*f) {
                    return Err(Error::ComparableFacets {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        Ok(SimplicialComplex { n, facets })
    }

    pub(crate) fn from_facets_unchecked(n: usize, facets: Vec<VertexSet>) -> Self {
        SimplicialComplex { n, facets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn into_facets(self) -> Vec<VertexSet> {
        self.facets
    }

    /// Largest facet size minus one; `-1` for `{∅}` and for the void complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    pub fn contains_face(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    /// Vertices lying in exactly one facet.
    pub fn free_vertices(&self) -> VertexSet {
        let mut once = VertexSet::EMPTY;
        let mut more = VertexSet::EMPTY;
        for &f in &self.facets {
            more |= once & f;
            once |= f;
        }
        once - more
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn rejects_comparable_facets() {
        let err = SimplicialComplex::new(3, vec![set(&[0, 1]), set(&[1, 2]), set(&[1])]);
        assert_eq!(err, Err(Error::ComparableFacets { first: 0, second: 2 }));
        let err = SimplicialComplex::new(3, vec![set(&[0, 1]), set(&[0, 1])]);
        assert!(err.is_err());
    }

    #[test]
    fn dimension_and_free_vertices() {
        let c = SimplicialComplex::new(4, vec![set(&[0, 1]), set(&[1, 2]), set(&[2, 3])]).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(c.free_vertices(), set(&[0, 3]));
        assert!(c.contains_face(set(&[2])));
        assert!(!c.contains_face(set(&[0, 2])));
        let empty = SimplicialComplex::new(0, vec![VertexSet::EMPTY]).unwrap();
        assert_eq!(empty.dim(), -1);
    }
}
