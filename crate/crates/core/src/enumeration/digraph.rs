use std::collections::BTreeSet;

use super::{check_cutoff, EnumerationError, ENDOFUNCTION_CUTOFF, FOREST_CUTOFF};

/// A self-map `σ` of `[n]`, stored as the 1-indexed image array
/// `image[i-1] = σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endofunction {
    image: Vec<usize>,
}

impl Endofunction {
    pub fn new(image: Vec<usize>) -> Result<Self, EnumerationError> {
        let n = image.len();
        if let Some(&bad) = image.iter().find(|&&v| v == 0 || v > n) {
            return Err(EnumerationError::InvalidEndofunction(format!(
                "value {bad} is outside [1, {n}]"
            )));
        }
        Ok(Endofunction { image })
    }

    pub fn identity(n: usize) -> Self {
        Endofunction {
            image: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// `σ(i)` for `i` in `[n]`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }
}

/// All `n^n` self-maps of `[n]`, in lexicographic order of the image array.
pub fn endofunctions(n: usize) -> Result<impl Iterator<Item = Endofunction>, EnumerationError> {
    check_cutoff("endofunctions", n, ENDOFUNCTION_CUTOFF)?;
    Ok(Odometer::new(n, 1, n).map(|image| Endofunction { image }))
}

/// Counts through every vector of length `len` with entries in `lo..=hi`,
/// last position fastest.
pub(crate) struct Odometer {
    current: Option<Vec<usize>>,
    lo: usize,
    hi: usize,
}

impl Odometer {
    pub(crate) fn new(len: usize, lo: usize, hi: usize) -> Self {
        let current = if len > 0 && hi < lo { None } else { Some(vec![lo; len]) };
        Odometer { current, lo, hi }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        for i in (0..next.len()).rev() {
            if next[i] < self.hi {
                next[i] += 1;
                self.current = Some(next);
                return Some(out);
            }
            next[i] = self.lo;
        }
        Some(out)
    }
}

/// A rooted labeled forest on `[m]`: `parent[v-1]` is `None` exactly for
/// roots; edges point toward the roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedForest {
    parent: Vec<Option<usize>>,
}

impl RootedForest {
    pub fn new(parent: Vec<Option<usize>>) -> Result<Self, EnumerationError> {
        let m = parent.len();
        if let Some(bad) = parent.iter().flatten().find(|&&p| p == 0 || p > m) {
            return Err(EnumerationError::InvalidForest(format!(
                "parent {bad} is outside [1, {m}]"
            )));
        }
        if !is_acyclic(&parent) {
            return Err(EnumerationError::InvalidForest("parent map has a cycle".into()));
        }
        Ok(RootedForest { parent })
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v - 1]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_none())
            .map(|(i, _)| i + 1)
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.parent[v - 1].is_none()
    }

    pub fn num_components(&self) -> usize {
        self.parent.iter().filter(|p| p.is_none()).count()
    }

    /// Edges `(child, parent)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (i + 1, p)))
    }
}

fn is_acyclic(parent: &[Option<usize>]) -> bool {
    // 0 unvisited, 1 on the current path, 2 known to reach a root
    let mut state = vec![0u8; parent.len()];
    let mut path = Vec::new();
    for start in 0..parent.len() {
        let mut v = start;
        loop {
            match state[v] {
                2 => break,
                1 => return false,
                _ => {}
            }
            state[v] = 1;
            path.push(v);
            match parent[v] {
                Some(p) => v = p - 1,
                None => break,
            }
        }
        for u in path.drain(..) {
            state[u] = 2;
        }
    }
    true
}

/// All rooted labeled forests on `[m]`, generated from maps
/// `[m] -> [m] ∪ {⊥}` with `⊥` marking roots and cyclic maps discarded.
pub fn forests(m: usize) -> Result<impl Iterator<Item = RootedForest>, EnumerationError> {
    check_cutoff("forests", m, FOREST_CUTOFF)?;
    Ok(Odometer::new(m, 0, m).filter_map(|code| {
        let parent: Vec<Option<usize>> = code.into_iter().map(|c| if c == 0 { None } else { Some(c) }).collect();
        is_acyclic(&parent).then_some(RootedForest { parent })
    }))
}

/// The cycle vertices of a functional digraph together with the forest left
/// after deleting the cycle edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalDigraphDecomposition {
    pub cycle_vertices: BTreeSet<usize>,
    pub forest: RootedForest,
}

/// Finds the cycle vertices of `σ` as the stable image `σ^k([n])` and keeps
/// `i -> σ(i)` as a tree edge for every other vertex.
pub fn digraph_decompose(sigma: &Endofunction) -> FunctionalDigraphDecomposition {
    let cycle_vertices = cycle_vertices(sigma.image());
    let parent = (1..=sigma.n())
        .map(|i| {
            if cycle_vertices.contains(&i) {
                None
            } else {
                Some(sigma.apply(i))
            }
        })
        .collect();
    FunctionalDigraphDecomposition {
        cycle_vertices,
        forest: RootedForest { parent },
    }
}

pub(crate) fn cycle_vertices(image: &[usize]) -> BTreeSet<usize> {
    let mut current: BTreeSet<usize> = (1..=image.len()).collect();
    loop {
        let next: BTreeSet<usize> = current.iter().map(|&i| image[i - 1]).collect();
        if next == current {
            return current;
        }
        current = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endofunction_counts() {
        assert_eq!(endofunctions(1).unwrap().count(), 1);
        assert_eq!(endofunctions(2).unwrap().count(), 4);
        assert_eq!(endofunctions(3).unwrap().count(), 27);
        assert!(endofunctions(8).is_err());
        let first: Vec<_> = endofunctions(2).unwrap().map(|s| s.image().to_vec()).collect();
        assert_eq!(first, vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
    }

    #[test]
    fn rejects_out_of_range_images() {
        assert!(Endofunction::new(vec![1, 3]).is_err());
        assert!(Endofunction::new(vec![0]).is_err());
    }

    #[test]
    fn decompose_examples() {
        let s = Endofunction::new(vec![2, 1, 2]).unwrap();
        let d = digraph_decompose(&s);
        assert_eq!(d.cycle_vertices, BTreeSet::from([1, 2]));
        assert_eq!(d.forest.parent(3), Some(2));
        assert_eq!(d.forest.num_components(), 2);

        let id = digraph_decompose(&Endofunction::identity(4));
        assert_eq!(id.cycle_vertices.len(), 4);
        assert_eq!(id.forest.edges().count(), 0);

        let constant = digraph_decompose(&Endofunction::new(vec![1; 4]).unwrap());
        assert_eq!(constant.cycle_vertices, BTreeSet::from([1]));
        assert!((2..=4).all(|v| constant.forest.parent(v) == Some(1)));
    }

    #[test]
    fn decomposition_invariants_hold_for_all_maps_on_4() {
        for s in endofunctions(4).unwrap() {
            let d = digraph_decompose(&s);
            let image: BTreeSet<usize> = d.cycle_vertices.iter().map(|&v| s.apply(v)).collect();
            assert_eq!(image, d.cycle_vertices, "σ must permute the cycle vertices");
            assert!(RootedForest::new(d.forest.parents().to_vec()).is_ok());
            let roots: BTreeSet<usize> = d.forest.roots().collect();
            assert_eq!(roots, d.cycle_vertices);
        }
    }

    #[test]
    fn forest_counts() {
        assert_eq!(forests(1).unwrap().count(), 1);
        // forests on [3]: (2+2)^2
        assert_eq!(forests(3).unwrap().count(), 16);
        assert_eq!(forests(3).unwrap().filter(|f| f.num_components() == 2).count(), 6);
        assert!(forests(8).is_err());
    }

    #[test]
    fn forest_validation() {
        assert!(RootedForest::new(vec![Some(2), Some(1)]).is_err());
        assert!(RootedForest::new(vec![Some(1)]).is_err());
        assert!(RootedForest::new(vec![None, Some(1), Some(2)]).is_ok());
        assert!(RootedForest::new(vec![None, Some(5)]).is_err());
    }
}
