//! Named forbidden patterns and induced-subgraph detection.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::{graph6, Graph, VertexSet, View};

/// A small graph used as a forbidden induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// `P_t`, the path on `t` vertices.
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,s}`.
    Star(usize),
    /// `S_(s,t)`: a star `K_{1,s}` plus `t` isolated vertices.
    Sst(usize, usize),
    /// `F_t`: `K_{1,t+1}` with one edge subdivided once.
    Ft(usize),
    /// `L_t`: two disjoint edges plus `t` isolated vertices.
    Lt(usize),
    /// `M_t`: a perfect matching on `2t` vertices.
    Mt(usize),
    Explicit(Graph),
}

impl Pattern {
    pub fn graph(&self) -> Graph {
        let build = |n: usize, edges: Vec<(usize, usize)>| Graph::from_edges(n, edges).expect("pattern edges are valid");
        match *self {
            Pattern::Path(t) => Graph::path(t).expect("pattern fits"),
            Pattern::Cycle(t) => Graph::cycle(t.max(3)).expect("pattern fits"),
            Pattern::Complete(t) => Graph::complete(t).expect("pattern fits"),
            Pattern::Star(s) => Pattern::Sst(s, 0).graph(),
            Pattern::Sst(s, t) => build(1 + s + t, (1..=s).map(|v| (0, v)).collect()),
            Pattern::Ft(t) => {
                let mut edges: Vec<_> = (1..=t).map(|v| (0, v)).collect();
                edges.push((0, t + 1));
                edges.push((t + 1, t + 2));
                build(t + 3, edges)
            }
            Pattern::Lt(t) => build(t + 4, vec![(0, 1), (2, 3)]),
            Pattern::Mt(t) => build(2 * t, (0..t).map(|i| (2 * i, 2 * i + 1)).collect()),
            Pattern::Explicit(ref g) => g.clone(),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            Pattern::Path(t) | Pattern::Complete(t) => t,
            Pattern::Cycle(t) => t.max(3),
            Pattern::Star(s) => s + 1,
            Pattern::Sst(s, t) => 1 + s + t,
            Pattern::Ft(t) => t + 3,
            Pattern::Lt(t) => t + 4,
            Pattern::Mt(t) => 2 * t,
            Pattern::Explicit(ref g) => g.n(),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Path(t) => write!(f, "P{t}"),
            Pattern::Cycle(t) => write!(f, "C{t}"),
            Pattern::Complete(t) => write!(f, "K{t}"),
            Pattern::Star(s) => write!(f, "K1,{s}"),
            Pattern::Sst(s, t) => write!(f, "S{s},{t}"),
            Pattern::Ft(t) => write!(f, "F{t}"),
            Pattern::Lt(t) => write!(f, "L{t}"),
            Pattern::Mt(t) => write!(f, "M{t}"),
            Pattern::Explicit(g) => write!(f, "g6:{}", graph6::encode(g)),
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Accepts `P5`, `C5`, `K4`, `K1,3` / `K1s:3`, `S2,1` / `Sst:2,1`,
    /// `F1` / `Ft:1`, `L1` / `Lt:1`, `M2` / `Mt:2` / `2K2`, and `g6:<graph6>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown pattern {s:?}"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let pair = |t: &str| -> Result<(usize, usize)> {
            let (a, b) = t.split_once(',').ok_or_else(bad)?;
            Ok((num(a)?, num(b)?))
        };
        let s = s.trim();
        if let Some(code) = s.strip_prefix("g6:") {
            return Ok(Pattern::Explicit(graph6::decode(code)?));
        }
        if let Some(rest) = s.strip_suffix("K2") {
            if !rest.is_empty() {
                return Ok(Pattern::Mt(num(rest)?));
            }
        }
        for (prefix, ctor) in [
            ("K1s:", Pattern::Star as fn(usize) -> Pattern),
            ("K1,", Pattern::Star),
            ("Ft:", Pattern::Ft),
            ("Lt:", Pattern::Lt),
            ("Mt:", Pattern::Mt),
        ] {
            if let Some(rest) = s.strip_prefix(prefix) {
                return Ok(ctor(num(rest)?));
            }
        }
        if let Some(rest) = s.strip_prefix("Sst:") {
            let (a, b) = pair(rest)?;
            return Ok(Pattern::Sst(a, b));
        }
        let (head, rest) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        match head {
            "S" => pair(rest).map(|(a, b)| Pattern::Sst(a, b)),
            "P" => num(rest).map(Pattern::Path),
            "C" => num(rest).map(Pattern::Cycle),
            "K" => num(rest).map(Pattern::Complete),
            "F" => num(rest).map(Pattern::Ft),
            "L" => num(rest).map(Pattern::Lt),
            "M" => num(rest).map(Pattern::Mt),
            _ => Err(bad()),
        }
    }
}

/// An induced copy of `pattern` in `view`, or `None`. The embedding maps
/// pattern vertex `i` to host vertex `embedding[i]`.
pub fn find_induced_pattern(view: &View<'_>, pattern: &Pattern) -> Option<Vec<usize>> {
    match *pattern {
        Pattern::Path(t) => find_induced_path(view, t),
        _ => find_induced_subgraph(view, &pattern.graph()),
    }
}

pub fn is_free(view: &View<'_>, pattern: &Pattern) -> bool {
    find_induced_pattern(view, pattern).is_none()
}

/// Checks `view` is `pattern`-free, reporting the induced copy otherwise.
pub fn require_free(view: &View<'_>, pattern: &Pattern) -> Result<()> {
    match find_induced_pattern(view, pattern) {
        None => Ok(()),
        Some(witness) => Err(Error::NotInClass {
            class: pattern.to_string(),
            witness,
        }),
    }
}

/// Generic backtracking search for an induced copy of `h`.
pub fn find_induced_subgraph(view: &View<'_>, h: &Graph) -> Option<Vec<usize>> {
    let k = h.n();
    if k > view.len() {
        return None;
    }
    let order = search_order(h);
    let hosts = view.vertices().to_vec();
    let host_deg: Vec<(usize, usize)> = hosts.iter().map(|&u| (u, view.degree(u))).collect();
    let viable: Vec<VertexSet> = (0..k)
        .map(|i| {
            let d = h.degree(i);
            let nd = k - 1 - d;
            host_deg
                .iter()
                .filter(|&&(_, hd)| hd >= d && view.len() - 1 - hd >= nd)
                .map(|&(u, _)| u)
                .collect()
        })
        .collect();
    let mut images = vec![usize::MAX; k];
    let mut search = Backtrack {
        view,
        h,
        order: &order,
        viable: &viable,
        images: &mut images,
    };
    if search.run(0, VertexSet::new()) {
        Some(images)
    } else {
        None
    }
}

/// Pattern vertices in an order where, within each component, every vertex
/// after the first is adjacent to an earlier one. Components start at their
/// highest-degree vertex, so isolated pattern vertices come last.
fn search_order(h: &Graph) -> Vec<usize> {
    let mut seen = VertexSet::new();
    let mut order = Vec::with_capacity(h.n());
    while order.len() < h.n() {
        let start = (0..h.n())
            .filter(|&v| !seen.contains(v))
            .max_by_key(|&v| (h.degree(v), std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        seen.insert(start);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for u in (h.neighbours(v) - seen).iter() {
                seen.insert(u);
                queue.push_back(u);
            }
        }
    }
    order
}

struct Backtrack<'a, 'g> {
    view: &'a View<'g>,
    h: &'a Graph,
    order: &'a [usize],
    viable: &'a [VertexSet],
    images: &'a mut [usize],
}

impl Backtrack<'_, '_> {
    fn run(&mut self, depth: usize, used: VertexSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let i = self.order[depth];
        let mut cand = self.viable[i] - used;
        for &j in &self.order[..depth] {
            let u = self.images[j];
            let nu = self.view.neighbours(u);
            if self.h.has_edge(i, j) {
                cand &= nu;
            } else {
                cand -= nu;
            }
            if cand.is_empty() {
                return false;
            }
        }
        for u in cand.iter() {
            self.images[i] = u;
            let mut next = used;
            next.insert(u);
            if self.run(depth + 1, next) {
                return true;
            }
        }
        self.images[i] = usize::MAX;
        false
    }
}

/// Dedicated search for an induced path on `t` vertices: each extension must
/// be adjacent to the last vertex and anticomplete to the rest of the path.
pub fn find_induced_path(view: &View<'_>, t: usize) -> Option<Vec<usize>> {
    if t == 0 {
        return Some(Vec::new());
    }
    let mut path = Vec::with_capacity(t);
    for v in view.vertices().iter() {
        path.push(v);
        if extend_path(view, &mut path, VertexSet::new(), t) {
            return Some(path);
        }
        path.pop();
    }
    None
}

fn extend_path(view: &View<'_>, path: &mut Vec<usize>, blocked: VertexSet, t: usize) -> bool {
    if path.len() == t {
        return true;
    }
    let last = *path.last().expect("path is non-empty");
    let cand = view.neighbours(last) - blocked;
    let blocked = blocked | view.closed_neighbours(last);
    for w in cand.iter() {
        path.push(w);
        if extend_path(view, path, blocked, t) {
            return true;
        }
        path.pop();
    }
    false
}

/// True when the image of `embedding` induces a copy of `h` (edge by edge).
pub fn is_induced_embedding(g: &Graph, h: &Graph, embedding: &[usize]) -> bool {
    if embedding.len() != h.n() {
        return false;
    }
    let distinct: VertexSet = embedding.iter().collect();
    if distinct.len() != embedding.len() || embedding.iter().any(|&u| u >= g.n()) {
        return false;
    }
    (0..h.n()).all(|i| (0..i).all(|j| h.has_edge(i, j) == g.has_edge(embedding[i], embedding[j])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_shapes() {
        let degrees = |p: Pattern| {
            let g = p.graph();
            let mut d: Vec<_> = (0..g.n()).map(|v| g.degree(v)).collect();
            d.sort();
            d
        };
        assert_eq!(degrees(Pattern::Sst(2, 2)), vec![0, 0, 1, 1, 2]);
        assert_eq!(degrees(Pattern::Ft(3)), vec![1, 1, 1, 1, 2, 4]);
        assert_eq!(degrees(Pattern::Lt(2)), vec![0, 0, 1, 1, 1, 1]);
        assert_eq!(degrees(Pattern::Mt(2)), vec![1, 1, 1, 1]);
        assert_eq!(Pattern::Ft(1).graph().edge_count(), 3);
        // F1 is the four-vertex path.
        let f1 = Pattern::Ft(1).graph();
        assert!(find_induced_path(&f1.view(), 4).is_some());
    }

    #[test]
    fn parse_and_display() {
        for (text, p) in [
            ("P5", Pattern::Path(5)),
            ("K1s:3", Pattern::Star(3)),
            ("K1,3", Pattern::Star(3)),
            ("Sst:2,1", Pattern::Sst(2, 1)),
            ("S1,1", Pattern::Sst(1, 1)),
            ("Ft:1", Pattern::Ft(1)),
            ("Lt:2", Pattern::Lt(2)),
            ("Mt:3", Pattern::Mt(3)),
            ("2K2", Pattern::Mt(2)),
            ("K4", Pattern::Complete(4)),
            ("C5", Pattern::Cycle(5)),
        ] {
            assert_eq!(text.parse::<Pattern>().unwrap(), p, "{text}");
            assert_eq!(p.to_string().parse::<Pattern>().unwrap(), p);
        }
        assert_eq!("g6:A_".parse::<Pattern>().unwrap(), Pattern::Explicit(Graph::complete(2).unwrap()));
        assert!("Q7".parse::<Pattern>().is_err());
    }

    #[test]
    fn detection_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(find_induced_pattern(&c5.view(), &Pattern::Path(5)), None);
        let p5 = Graph::path(5).unwrap();
        assert_eq!(find_induced_pattern(&p5.view(), &Pattern::Path(5)), Some(vec![0, 1, 2, 3, 4]));
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(find_induced_pattern(&k4.view(), &Pattern::Star(2)), None);
        // C5 contains an induced P4 = F1, and an induced 2K2 + K1 needs an isolated fifth vertex.
        assert!(find_induced_pattern(&c5.view(), &Pattern::Ft(1)).is_some());
        assert!(find_induced_pattern(&c5.view(), &Pattern::Lt(1)).is_none());
    }

    #[test]
    fn embeddings_are_induced() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6), (1, 5)]).unwrap();
        for p in [Pattern::Path(4), Pattern::Star(2), Pattern::Mt(2), Pattern::Sst(1, 1), Pattern::Cycle(4)] {
            if let Some(e) = find_induced_pattern(&g.view(), &p) {
                assert!(is_induced_embedding(&g, &p.graph(), &e), "{p}");
            }
        }
    }
}
