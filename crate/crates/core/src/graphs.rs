//! Simple labeled graphs on `{1, ..., n}`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::words::Letter;

/// Simple undirected graph with vertex set `1..=n`. Equality is labeled
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

/// Maps the vertices of a derived graph back to the vertices of the graph
/// it was taken from. Entry `i` holds the original id of new vertex `i + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdMap(Vec<Letter>);

impl IdMap {
    pub fn original(&self, new: Letter) -> Letter {
        self.0[new.index()]
    }

    pub fn new_id(&self, original: Letter) -> Option<Letter> {
        self.0.iter().position(|&o| o == original).map(Letter::from_index)
    }

    pub fn originals(&self) -> &[Letter] {
        &self.0
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices, `n = 0` allowed.
    pub fn with_vertices(n: usize) -> Self {
        Graph { n, adj: vec![false; n * n] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut g = Graph::with_vertices(n);
        for (u, v) in edges {
            let (u, v) = (g.vertex(u)?, g.vertex(v)?);
            if u == v {
                return Err(Error::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set(u, v, true);
        }
        Ok(g)
    }

    /// Graph whose edges, in lexicographic order of pairs `(i, j)` with
    /// `i < j`, are selected by the bits of `mask` (least significant first).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::with_vertices(n);
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    g.set(Letter::from_index(i), Letter::from_index(j), true);
                }
                bit += 1;
            }
        }
        g
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_size(n, 1)?;
        let mut g = Graph::with_vertices(n);
        for i in 0..n {
            for j in i + 1..n {
                g.set(Letter::from_index(i), Letter::from_index(j), true);
            }
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Result<Self> {
        check_size(n, 1)?;
        Ok(Graph::with_vertices(n))
    }

    pub fn path(n: usize) -> Result<Self> {
        check_size(n, 1)?;
        let mut g = Graph::with_vertices(n);
        for i in 1..n {
            g.set(Letter::from_index(i - 1), Letter::from_index(i), true);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        check_size(n, 3)?;
        let mut g = Graph::path(n)?;
        g.set(Letter::from_index(0), Letter::from_index(n - 1), true);
        Ok(g)
    }

    /// Rim cycle `1 - 2 - ... - rim - 1` plus hub `rim + 1` adjacent to every
    /// rim vertex. `wheel(5)` is the six-vertex wheel.
    pub fn wheel(rim: usize) -> Result<Self> {
        check_size(rim, 3)?;
        let mut g = Graph::cycle(rim)?;
        g.n = rim + 1;
        let mut adj = vec![false; g.n * g.n];
        for i in 0..rim {
            for j in 0..rim {
                adj[i * g.n + j] = g.adj[i * rim + j];
            }
            adj[i * g.n + rim] = true;
            adj[rim * g.n + i] = true;
        }
        g.adj = adj;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = Letter> {
        (0..self.n).map(Letter::from_index)
    }

    /// Validates a raw vertex id.
    pub fn vertex(&self, v: u32) -> Result<Letter> {
        match Letter::new(v) {
            Some(l) if l.index() < self.n => Ok(l),
            _ => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
        }
    }

    pub fn contains(&self, v: Letter) -> bool {
        v.index() < self.n
    }

    #[inline]
    pub fn has_edge(&self, u: Letter, v: Letter) -> bool {
        self.adj[u.index() * self.n + v.index()]
    }

    #[inline]
    pub(crate) fn has_edge_idx(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    fn set(&mut self, u: Letter, v: Letter, on: bool) {
        let (a, b) = (u.index(), v.index());
        self.adj[a * self.n + b] = on;
        self.adj[b * self.n + a] = on;
    }

    pub fn add_edge(&mut self, u: Letter, v: Letter) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.set(u, v, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Letter, v: Letter) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u != v {
            self.set(u, v, false);
        }
        Ok(())
    }

    /// Appends a new vertex `n + 1` adjacent to `neighbors`.
    pub fn add_vertex(&mut self, neighbors: &[Letter]) -> Result<Letter> {
        for &u in neighbors {
            self.check(u)?;
        }
        let old = core::mem::replace(self, Graph::with_vertices(self.n + 1));
        for (u, v) in old.edges() {
            self.set(u, v, true);
        }
        let new = Letter::from_index(old.n);
        for &u in neighbors {
            self.set(u, new, true);
        }
        Ok(new)
    }

    fn check(&self, v: Letter) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v.get(), n: self.n })
        }
    }

    /// Edges `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> Vec<(Letter, Letter)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge_idx(i, j) {
                    out.push((Letter::from_index(i), Letter::from_index(j)));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn neighbors(&self, v: Letter) -> Vec<Letter> {
        self.vertices().filter(|&u| u != v && self.has_edge(u, v)).collect()
    }

    pub fn degree(&self, v: Letter) -> usize {
        (0..self.n).filter(|&u| self.has_edge_idx(u, v.index())).count()
    }

    /// Removes `v`; the remaining vertices are renumbered consecutively and
    /// the returned map recovers their original ids.
    pub fn delete_vertex(&self, v: Letter) -> Result<(Graph, IdMap)> {
        self.check(v)?;
        let keep: Vec<Letter> = self.vertices().filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Subgraph induced by `set`; new ids follow the ascending order of the
    /// original ids.
    pub fn induced(&self, set: &[Letter]) -> Result<(Graph, IdMap)> {
        let mut keep: Vec<Letter> = set.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check(v)?;
        }
        let mut g = Graph::with_vertices(keep.len());
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.set(Letter::from_index(i), Letter::from_index(j), true);
                }
            }
        }
        Ok((g, IdMap(keep)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Letter>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = Vec::new();
            let mut stack = vec![start];
            comp[start] = id;
            while let Some(u) = stack.pop() {
                members.push(Letter::from_index(u));
                for v in 0..self.n {
                    if comp[v] == usize::MAX && self.has_edge_idx(u, v) {
                        comp[v] = id;
                        stack.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Vertices whose removal does not increase the number of components.
    pub fn non_cut_vertices(&self) -> Vec<Letter> {
        let base = self.components().len();
        self.vertices()
            .filter(|&v| {
                let (h, _) = self.delete_vertex(v).expect("vertex in range");
                h.components().len() <= base
            })
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::with_vertices(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.has_edge_idx(i, j) {
                    g.set(Letter::from_index(i), Letter::from_index(j), true);
                }
            }
        }
        g
    }

    /// `self` on `1..=n` and `other` shifted to `n+1..=n+m`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::with_vertices(self.n + other.n);
        for (u, v) in self.edges() {
            g.set(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set(Letter::from_index(u.index() + self.n), Letter::from_index(v.index() + self.n), true);
        }
        g
    }

    /// Image of the graph under the vertex bijection `i -> perm[i - 1]`.
    pub fn relabel(&self, perm: &[Letter]) -> Graph {
        assert_eq!(perm.len(), self.n, "relabel needs a full permutation");
        let mut g = Graph::with_vertices(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u.index()], perm[v.index()], true);
        }
        g
    }

    /// A bijection `phi` (as `phi[i - 1]`) with `uv` an edge of `self` iff
    /// `phi(u) phi(v)` is an edge of `other`.
    pub fn find_isomorphism(&self, other: &Graph) -> Option<Vec<Letter>> {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return None;
        }
        let da: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let db: Vec<usize> = other.vertices().map(|v| other.degree(v)).collect();
        let (mut sa, mut sb) = (da.clone(), db.clone());
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
        // Map high-degree vertices first: they constrain the most.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&a, &b| da[b].cmp(&da[a]).then(a.cmp(&b)));
        let mut phi = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        if iso_extend(self, other, &da, &db, &order, 0, &mut phi, &mut used) {
            Some(phi.into_iter().map(Letter::from_index).collect())
        } else {
            None
        }
    }

    /// Size of a maximum clique, by exhaustive branching.
    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, clique: &mut Vec<usize>, cands: &[usize], best: &mut usize) {
            if clique.len() + cands.len() <= *best {
                return;
            }
            if cands.is_empty() {
                *best = clique.len();
                return;
            }
            for (i, &v) in cands.iter().enumerate() {
                let next: Vec<usize> = cands[i + 1..].iter().copied().filter(|&u| g.has_edge_idx(u, v)).collect();
                clique.push(v);
                grow(g, clique, &next, best);
                clique.pop();
            }
        }
        let mut best = 0;
        let cands: Vec<usize> = (0..self.n).collect();
        grow(self, &mut Vec::new(), &cands, &mut best);
        best
    }
}

#[allow(clippy::too_many_arguments)]
fn iso_extend(
    a: &Graph,
    b: &Graph,
    da: &[usize],
    db: &[usize],
    order: &[usize],
    depth: usize,
    phi: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&u) = order.get(depth) else {
        return true;
    };
    for x in 0..b.n {
        if used[x] || db[x] != da[u] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&p| a.has_edge_idx(u, p) == b.has_edge_idx(x, phi[p]));
        if !consistent {
            continue;
        }
        phi[u] = x;
        used[x] = true;
        if iso_extend(a, b, da, db, order, depth + 1, phi, used) {
            return true;
        }
        used[x] = false;
    }
    phi[u] = usize::MAX;
    false
}

fn check_size(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::GraphTooSmall { n, min })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(v: u32) -> Letter {
        Letter::new(v).unwrap()
    }

    #[test]
    fn wheel_uses_rim_then_hub_labels() {
        let w5 = Graph::wheel(5).unwrap();
        let expected =
            Graph::from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 6), (2, 6), (3, 6), (4, 6), (5, 6)])
                .unwrap();
        assert_eq!(w5, expected);
        let (rim, map) = w5.delete_vertex(l(6)).unwrap();
        assert_eq!(rim, Graph::cycle(5).unwrap());
        assert_eq!(map.originals(), &[l(1), l(2), l(3), l(4), l(5)]);
    }

    #[test]
    fn generators_reject_small_sizes() {
        assert!(Graph::complete(0).is_err());
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::wheel(2).is_err());
        assert_eq!(Graph::complete(1).unwrap().edge_count(), 0);
    }

    #[test]
    fn edge_validation() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::Loop(l(1))));
        assert_eq!(Graph::from_edges(2, [(1, 2), (2, 1)]), Err(Error::DuplicateEdge(l(1), l(2))));
        assert!(matches!(Graph::from_edges(2, [(1, 3)]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn components_and_cut_vertices() {
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(e3.components(), vec![vec![l(1)], vec![l(2)], vec![l(3)]]);
        assert_eq!(Graph::path(3).unwrap().non_cut_vertices(), vec![l(1), l(3)]);
        assert!(Graph::cycle(4).unwrap().is_connected());
        assert!(!e3.is_connected());
    }

    #[test]
    fn induced_matches_delete_vertex() {
        let g = Graph::wheel(5).unwrap();
        let all: Vec<Letter> = g.vertices().collect();
        assert_eq!(g.induced(&all).unwrap().0, g);
        let (a, _) = g.delete_vertex(l(3)).unwrap();
        let (b, _) = g.induced(&[l(1), l(2), l(4), l(5), l(6)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn mask_enumeration_covers_all_graphs() {
        assert_eq!(Graph::from_mask(3, 0b111), Graph::complete(3).unwrap());
        assert_eq!(Graph::from_mask(3, 0b001), Graph::from_edges(3, [(1, 2)]).unwrap());
    }

    #[test]
    fn isomorphism_and_cliques() {
        let p = Graph::from_edges(3, [(1, 3), (3, 2)]).unwrap();
        let q = Graph::path(3).unwrap();
        let phi = p.find_isomorphism(&q).unwrap();
        assert_eq!(p.relabel(&phi), q);
        assert!(Graph::cycle(4).unwrap().find_isomorphism(&Graph::path(4).unwrap()).is_none());
        assert_eq!(Graph::wheel(5).unwrap().clique_number(), 3);
        assert_eq!(Graph::empty(4).unwrap().clique_number(), 1);
    }

    #[test]
    fn add_vertex_appends_next_id() {
        let mut g = Graph::path(2).unwrap();
        let v = g.add_vertex(&[l(1)]).unwrap();
        assert_eq!(v, l(3));
        assert_eq!(g, Graph::from_edges(3, [(1, 2), (1, 3)]).unwrap());
    }
}
