//! Immutable simple graphs over dense vertex indices, with bit-parallel
//! neighbourhood algebra.
//!
//! Induced subgraphs are not copied: a [`View`] pairs a graph with a vertex
//! set and answers every query relative to that set. All of the hitting-set
//! recursions run on views of one ambient graph.

mod set;

pub mod edgelist;
pub mod graph6;
pub mod pattern;

pub use set::{Iter, VertexSet, MAX_VERTICES};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::new(); n],
        })
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood rows, checking symmetry and irreflexivity.
    pub fn from_adjacency(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let all = VertexSet::full(n);
        for (v, row) in rows.iter().enumerate() {
            if row.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            if let Some(u) = (*row - all).first() {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if let Some(u) = row.iter().find(|&u| !rows[u].contains(v)) {
                return Err(Error::AsymmetricAdjacency(v, u));
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::from_edges(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j))))
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs 3 vertices, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n);
        let adj = (0..self.n)
            .map(|v| all - self.adj[v] - VertexSet::singleton(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        Graph::from_edges(
            self.n + other.n,
            self.edges().chain(other.edges().map(|(u, v)| (u + shift, v + shift))),
        )
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |v| self.adj[v].iter().take_while(move |&u| u < v).map(move |u| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// The whole graph as a view.
    pub fn view(&self) -> View<'_> {
        View {
            graph: self,
            vertices: self.vertices(),
        }
    }

    /// The induced subgraph on `set`, as a view. Fails if `set` names a vertex `>= n`.
    pub fn induced(&self, set: VertexSet) -> Result<View<'_>> {
        self.check(&set)?;
        Ok(View { graph: self, vertices: set })
    }

    /// Checks every member of `set` is a vertex of this graph.
    pub fn check(&self, set: &VertexSet) -> Result<()> {
        match set.last() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let seen: VertexSet = perm.iter().collect();
        if seen != self.vertices() {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({})", graph6::encode(self))
    }
}

/// An induced subgraph of a borrowed graph. Vertex indices stay those of the
/// ambient graph.
#[derive(Clone, Copy)]
pub struct View<'g> {
    graph: &'g Graph,
    vertices: VertexSet,
}

impl<'g> View<'g> {
    #[inline]
    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(v)
    }

    /// Neighbours of `v` inside the view. `v` itself need not lie in the view.
    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.graph.adj[v] & self.vertices
    }

    #[inline]
    pub fn closed_neighbours(&self, v: usize) -> VertexSet {
        let mut s = self.neighbours(v);
        if self.contains(v) {
            s.insert(v);
        }
        s
    }

    /// View vertices other than `v` that are not adjacent to `v`.
    #[inline]
    pub fn non_neighbours(&self, v: usize) -> VertexSet {
        let mut s = self.vertices - self.graph.adj[v];
        s.remove(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.graph.has_edge(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbours(v).len()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.iter().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// The induced subgraph on `set ∩ V(self)`.
    #[inline]
    pub fn restrict(&self, set: VertexSet) -> View<'g> {
        View {
            graph: self.graph,
            vertices: self.vertices & set,
        }
    }

    /// The induced subgraph on `V(self) \ set`.
    #[inline]
    pub fn without(&self, set: VertexSet) -> View<'g> {
        View {
            graph: self.graph,
            vertices: self.vertices - set,
        }
    }

    /// Checks `set ⊆ V(self)`.
    pub fn check(&self, set: &VertexSet) -> Result<()> {
        self.graph.check(set)?;
        match (*set - self.vertices).first() {
            Some(v) => Err(Error::NotInSubgraph(v)),
            None => Ok(()),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.graph.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.graph.n })
        } else if !self.contains(v) {
            Err(Error::NotInSubgraph(v))
        } else {
            Ok(())
        }
    }

    /// `N(X)` (vertices outside `X` with a neighbour in `X`) or, with
    /// `closed`, `N[X] = N(X) ∪ X`.
    pub fn neighbourhood_of_set(&self, x: VertexSet, closed: bool) -> Result<VertexSet> {
        self.check(&x)?;
        Ok(if closed {
            self.closed_neighbourhood(x)
        } else {
            self.open_neighbourhood(x)
        })
    }

    #[inline]
    pub(crate) fn open_neighbourhood(&self, x: VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in x.iter() {
            out |= self.graph.adj[v];
        }
        (out & self.vertices) - x
    }

    #[inline]
    pub(crate) fn closed_neighbourhood(&self, x: VertexSet) -> VertexSet {
        self.open_neighbourhood(x) | (x & self.vertices)
    }

    /// Connected components of the induced subgraph on `x`, ordered by
    /// smallest member.
    pub fn components_within(&self, x: VertexSet) -> Result<Vec<VertexSet>> {
        self.check(&x)?;
        Ok(self.components_of(x))
    }

    pub(crate) fn components_of(&self, x: VertexSet) -> Vec<VertexSet> {
        let mut remaining = x;
        let mut out = Vec::new();
        while let Some(v) = remaining.first() {
            let comp = self.grow_component(v, remaining);
            remaining -= comp;
            out.push(comp);
        }
        out
    }

    /// Components of the view itself.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_of(self.vertices)
    }

    /// The component of `G[within]` containing `v`.
    pub(crate) fn grow_component(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for u in frontier.iter() {
                next |= self.graph.adj[u];
            }
            next = (next & within) - comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices.first() {
            None => true,
            Some(v) => self.grow_component(v, self.vertices) == self.vertices,
        }
    }

    /// Whether some induced path from `z` to `z2` has its interior inside `w`.
    ///
    /// Such a path exists iff `z` and `z2` are connected in `G[w ∪ {z, z2}]`:
    /// a shortest connecting path is induced.
    pub fn induced_path_with_interior_in(&self, z: usize, z2: usize, w: VertexSet) -> Result<bool> {
        if z == z2 {
            return Err(Error::IdenticalEndpoints(z));
        }
        self.check_vertex(z)?;
        self.check_vertex(z2)?;
        self.check(&w)?;
        if w.contains(z) || w.contains(z2) {
            return Err(Error::InvalidParameter(
                "path endpoints must lie outside the interior set".into(),
            ));
        }
        let mut within = w;
        within.insert(z);
        within.insert(z2);
        Ok(self.grow_component(z, within).contains(z2))
    }

    pub fn is_stable(&self, x: VertexSet) -> bool {
        x.iter().all(|v| self.graph.adj[v].is_disjoint(&x))
    }

    pub fn is_clique(&self, x: VertexSet) -> bool {
        x.iter().all(|v| {
            let mut rest = x;
            rest.remove(v);
            rest.is_subset(&self.graph.adj[v])
        })
    }

    /// `v` is adjacent to every member of `set` (other than itself).
    pub fn is_complete_to(&self, v: usize, set: VertexSet) -> bool {
        let mut rest = set;
        rest.remove(v);
        rest.is_subset(&self.graph.adj[v])
    }

    pub fn is_anticomplete_to(&self, v: usize, set: VertexSet) -> bool {
        self.graph.adj[v].is_disjoint(&set)
    }

    /// Copies the view out into a standalone graph on `0..len`. The returned
    /// map sends new indices to the original ones.
    pub fn materialize(&self) -> (Graph, Vec<usize>) {
        let map = self.vertices.to_vec();
        let mut index = vec![usize::MAX; self.graph.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| self.neighbours(v).iter().map(|u| index[u]).collect())
            .collect();
        (Graph { n: map.len(), adj }, map)
    }
}

impl std::fmt::Debug for View<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "View({:?} on {:?})", self.vertices, self.graph)
    }
}
