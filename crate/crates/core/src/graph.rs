//! Bipartite graphs with two explicit color classes.
//!
//! Vertices are dense per-class indices (`x1..xN`, `y1..yM` when printed).
//! The original labels of a parsed file are kept in a side table and only
//! used for display.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the two color classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }

    fn slot(self) -> usize {
        match self {
            Side::X => 0,
            Side::Y => 1,
        }
    }

    pub fn prefix(self) -> char {
        match self {
            Side::X => 'x',
            Side::Y => 'y',
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::X => f.write_str("X"),
            Side::Y => f.write_str("Y"),
        }
    }
}

/// A vertex: its class and its 0-based index inside that class.
///
/// Ordering puts every X vertex before every Y vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub fn x(index: usize) -> Vertex {
        Vertex { side: Side::X, index }
    }

    pub fn y(index: usize) -> Vertex {
        Vertex { side: Side::Y, index }
    }

    /// Parses `x3` / `y12` (1-based).
    pub fn parse(token: &str) -> Option<Vertex> {
        let mut chars = token.chars();
        let side = match chars.next()? {
            'x' | 'X' => Side::X,
            'y' | 'Y' => Side::Y,
            _ => return None,
        };
        let number: usize = chars.as_str().parse().ok()?;
        if number == 0 {
            return None;
        }
        Some(Vertex {
            side,
            index: number - 1,
        })
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.side.prefix(), self.index + 1)
    }
}

/// A simple bipartite graph. Immutable once built; every "mutation"
/// returns a new graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    adj: [Vec<Vec<usize>>; 2],
    labels: [Vec<String>; 2],
}

impl BipartiteGraph {
    /// Builds a graph from `(x, y)` index pairs. Panics on out-of-range
    /// indices; duplicates are merged.
    pub fn from_edges(nx: usize, ny: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        let mut adj = [vec![Vec::new(); nx], vec![Vec::new(); ny]];
        for &(x, y) in edges {
            assert!(x < nx && y < ny, "edge ({x}, {y}) out of range");
            adj[0][x].push(y);
            adj[1][y].push(x);
        }
        for list in adj.iter_mut().flatten() {
            list.sort_unstable();
            list.dedup();
        }
        BipartiteGraph {
            adj,
            labels: [default_labels(nx), default_labels(ny)],
        }
    }

    pub(crate) fn from_adjacency(x_adj: Vec<Vec<usize>>, labels: [Vec<String>; 2]) -> BipartiteGraph {
        let ny = labels[1].len();
        let mut y_adj = vec![Vec::new(); ny];
        for (x, list) in x_adj.iter().enumerate() {
            for &y in list {
                y_adj[y].push(x);
            }
        }
        BipartiteGraph {
            adj: [x_adj, y_adj],
            labels,
        }
    }

    /// Parses the line-oriented `p bip` edge-list format.
    ///
    /// Edge endpoints are either plain 1-based indices (`e <x> <y>`) or
    /// class-tagged tokens (`e x3 y1`, `e y1 x3`). The header is optional;
    /// without it, class sizes are the largest index seen.
    pub fn parse(text: &str) -> Result<BipartiteGraph> {
        let mut header: Option<(usize, usize, usize, usize)> = None;
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let malformed = |message: &str| Error::Malformed {
                line: line_no,
                message: message.to_string(),
            };
            match fields[0] {
                "p" => {
                    if header.is_some() {
                        return Err(malformed("second header line"));
                    }
                    if !edges.is_empty() {
                        return Err(malformed("header after edge lines"));
                    }
                    if fields.len() != 5 || fields[1] != "bip" {
                        return Err(malformed("expected `p bip <|X|> <|Y|> <|E|>`"));
                    }
                    let nums: Option<Vec<usize>> = fields[2..].iter().map(|f| f.parse().ok()).collect();
                    let nums = nums.ok_or_else(|| malformed("header counts must be nonnegative integers"))?;
                    header = Some((nums[0], nums[1], nums[2], line_no));
                }
                "e" => {
                    if fields.len() != 3 {
                        return Err(malformed("expected `e <x> <y>`"));
                    }
                    let (a, b) = (parse_endpoint(fields[1]), parse_endpoint(fields[2]));
                    let (x, y) = match (a, b) {
                        (Some(Endpoint::Plain(x)), Some(Endpoint::Plain(y))) => (x, y),
                        (Some(Endpoint::Tagged(u)), Some(Endpoint::Tagged(v))) => {
                            if u.side == v.side {
                                return Err(Error::SameClassEdge {
                                    line: line_no,
                                    a: u.to_string(),
                                    b: v.to_string(),
                                });
                            }
                            let (xv, yv) = if u.side == Side::X { (u, v) } else { (v, u) };
                            (xv.index + 1, yv.index + 1)
                        }
                        _ => return Err(malformed("bad edge endpoints")),
                    };
                    if x == 0 || y == 0 {
                        return Err(malformed("vertex indices are 1-based"));
                    }
                    edges.push((x - 1, y - 1, line_no));
                }
                _ => return Err(malformed("unknown line type")),
            }
        }
        let (nx, ny) = match header {
            Some((nx, ny, m, line_no)) => {
                if m != edges.len() {
                    return Err(Error::Malformed {
                        line: line_no,
                        message: format!("header declares {m} edges, found {}", edges.len()),
                    });
                }
                (nx, ny)
            }
            None => (
                edges.iter().map(|e| e.0 + 1).max().unwrap_or(0),
                edges.iter().map(|e| e.1 + 1).max().unwrap_or(0),
            ),
        };
        let mut x_adj = vec![Vec::new(); nx];
        let mut seen = std::collections::HashSet::new();
        for &(x, y, line_no) in &edges {
            if x >= nx || y >= ny {
                return Err(Error::Malformed {
                    line: line_no,
                    message: format!("edge endpoint out of range ({}x{})", nx, ny),
                });
            }
            if !seen.insert((x, y)) {
                return Err(Error::DuplicateEdge {
                    line: line_no,
                    a: Vertex::x(x).to_string(),
                    b: Vertex::y(y).to_string(),
                });
            }
            x_adj[x].push(y);
        }
        for list in &mut x_adj {
            list.sort_unstable();
        }
        Ok(BipartiteGraph::from_adjacency(
            x_adj,
            [default_labels(nx), default_labels(ny)],
        ))
    }

    /// Serializes to the `p bip` format, edges in x-major order.
    pub fn to_text(&self) -> String {
        let mut out = format!("p bip {} {} {}\n", self.nx(), self.ny(), self.edge_count());
        for (x, list) in self.adj[0].iter().enumerate() {
            for &y in list {
                out.push_str(&format!("e {} {}\n", x + 1, y + 1));
            }
        }
        out
    }

    pub fn nx(&self) -> usize {
        self.adj[0].len()
    }

    pub fn ny(&self) -> usize {
        self.adj[1].len()
    }

    pub fn size(&self, side: Side) -> usize {
        self.adj[side.slot()].len()
    }

    pub fn vertex_count(&self) -> usize {
        self.nx() + self.ny()
    }

    pub fn edge_count(&self) -> usize {
        self.adj[0].iter().map(Vec::len).sum()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.index < self.size(v.side)
    }

    pub fn check(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// Sorted indices of the neighbors of `v` (all in the opposite class).
    pub fn neighbors(&self, v: Vertex) -> &[usize] {
        &self.adj[v.side.slot()][v.index]
    }

    pub fn side_adjacency(&self, side: Side) -> &[Vec<usize>] {
        &self.adj[side.slot()]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adj[0][x].binary_search(&y).is_ok()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        if u.side == v.side {
            return false;
        }
        self.neighbors(u).binary_search(&v.index).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.nx()).map(Vertex::x).chain((0..self.ny()).map(Vertex::y))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj[0]
            .iter()
            .enumerate()
            .flat_map(|(x, list)| list.iter().map(move |&y| (x, y)))
    }

    pub fn label(&self, v: Vertex) -> String {
        format!("{}{}", v.side.prefix(), self.labels[v.side.slot()][v.index])
    }

    /// Same graph with the color classes interchanged.
    pub fn swap_sides(&self) -> BipartiteGraph {
        BipartiteGraph {
            adj: [self.adj[1].clone(), self.adj[0].clone()],
            labels: [self.labels[1].clone(), self.labels[0].clone()],
        }
    }

    /// Induced subgraph on the vertices not in `removed`. Surviving vertices
    /// keep their relative order; the returned map sends old vertices to new.
    pub fn without(&self, removed: &[Vertex]) -> (BipartiteGraph, HashMap<Vertex, Vertex>) {
        let gone: std::collections::HashSet<Vertex> = removed.iter().copied().collect();
        let mut map = HashMap::new();
        let mut renum = [vec![usize::MAX; self.nx()], vec![usize::MAX; self.ny()]];
        let mut labels = [Vec::new(), Vec::new()];
        for v in self.vertices() {
            if !gone.contains(&v) {
                let slot = v.side.slot();
                let new_index = labels[slot].len();
                renum[slot][v.index] = new_index;
                labels[slot].push(self.labels[slot][v.index].clone());
                map.insert(
                    v,
                    Vertex {
                        side: v.side,
                        index: new_index,
                    },
                );
            }
        }
        let mut x_adj = vec![Vec::new(); labels[0].len()];
        for (x, list) in self.adj[0].iter().enumerate() {
            let nx = renum[0][x];
            if nx == usize::MAX {
                continue;
            }
            x_adj[nx] = list
                .iter()
                .filter_map(|&y| (renum[1][y] != usize::MAX).then_some(renum[1][y]))
                .collect();
        }
        (BipartiteGraph::from_adjacency(x_adj, labels), map)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let start = self.vertices().next().unwrap();
        self.bfs(start).iter().flatten().count() == n
    }

    /// Errors unless the graph is nonempty and connected.
    pub fn require_connected(&self) -> Result<()> {
        if self.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }

    fn unified(&self, v: Vertex) -> usize {
        match v.side {
            Side::X => v.index,
            Side::Y => self.nx() + v.index,
        }
    }

    fn vertex_of_unified(&self, u: usize) -> Vertex {
        if u < self.nx() {
            Vertex::x(u)
        } else {
            Vertex::y(u - self.nx())
        }
    }

    /// BFS distances from `source`, indexed in unified order (X then Y).
    fn bfs(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[self.unified(source)] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let d = dist[self.unified(v)].unwrap();
            for &w in self.neighbors(v) {
                let w = Vertex {
                    side: v.side.opposite(),
                    index: w,
                };
                let slot = self.unified(w);
                if dist[slot].is_none() {
                    dist[slot] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path length; `None` stands for infinity.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Option<usize>> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.bfs(u)[self.unified(v)])
    }

    /// Vertices adjacent to every vertex of the opposite class.
    pub fn universal_vertices(&self) -> Vec<Vertex> {
        self.vertices()
            .filter(|&v| self.degree(v) == self.size(v.side.opposite()))
            .collect()
    }

    /// `G ⋆ {v, v2}`: unchanged for a cross-class pair, otherwise a new
    /// vertex appended to the common class with neighborhood `N(v) ∩ N(v2)`.
    pub fn star_extend(&self, v: Vertex, v2: Vertex) -> Result<BipartiteGraph> {
        self.check(v)?;
        self.check(v2)?;
        if v.side != v2.side {
            return Ok(self.clone());
        }
        let common = intersect_sorted(self.neighbors(v), self.neighbors(v2));
        let side = v.side;
        let mut g = self.clone();
        let new_index = g.size(side);
        for &w in &common {
            g.adj[side.opposite().slot()][w].push(new_index);
        }
        g.adj[side.slot()].push(common);
        g.labels[side.slot()].push((new_index + 1).to_string());
        Ok(g)
    }

    /// Searches for an induced domino, then for a hole (induced cycle of
    /// length at least six). Exhaustive; meant for small graphs.
    pub fn find_forbidden(&self) -> Option<Forbidden> {
        // An induced domino or hole contains at most one vertex of each
        // false-twin class, so search a graph with one representative each.
        let mut reps: HashMap<(Side, &[usize]), Vertex> = HashMap::new();
        let mut dropped = Vec::new();
        for v in self.vertices() {
            match reps.entry((v.side, self.neighbors(v))) {
                std::collections::hash_map::Entry::Occupied(_) => dropped.push(v),
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(v);
                }
            }
        }
        let (core, map) = self.without(&dropped);
        let mut back = HashMap::new();
        for (old, new) in map {
            back.insert(new, old);
        }
        let lift = |v: Vertex| back[&v];
        if let Some(domino) = core.find_domino() {
            return Some(Forbidden::Domino(domino.map(lift)));
        }
        core.find_hole()
            .map(|cycle| Forbidden::Hole(cycle.into_iter().map(lift).collect()))
    }

    /// Induced domino as `[a, b, c, d, e, f]`: `b`–`e` is the chord, `a`,
    /// `b`, `c` share a class, and `a`–`f`, `c`–`d` are the two non-edges.
    fn find_domino(&self) -> Option<[Vertex; 6]> {
        for (b, list) in self.adj[0].iter().enumerate() {
            for &e in list {
                let xs = &self.adj[1][e];
                for (i, &a) in xs.iter().enumerate() {
                    if a == b {
                        continue;
                    }
                    for &c in &xs[i + 1..] {
                        if c == b {
                            continue;
                        }
                        for &d in list {
                            if d == e || !self.has_edge(a, d) || self.has_edge(c, d) {
                                continue;
                            }
                            for &f in list {
                                if f == e || f == d || !self.has_edge(c, f) || self.has_edge(a, f) {
                                    continue;
                                }
                                return Some([
                                    Vertex::x(a),
                                    Vertex::x(b),
                                    Vertex::x(c),
                                    Vertex::y(d),
                                    Vertex::y(e),
                                    Vertex::y(f),
                                ]);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Induced cycle of length at least six, if any. Depth-first extension
    /// of induced paths from each start vertex, the
    /// start being the smallest vertex on the cycle.
    pub fn find_hole(&self) -> Option<Vec<Vertex>> {
        let n = self.vertex_count();
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|u| {
                let v = self.vertex_of_unified(u);
                self.neighbors(v)
                    .iter()
                    .map(|&w| {
                        self.unified(Vertex {
                            side: v.side.opposite(),
                            index: w,
                        })
                    })
                    .collect()
            })
            .collect();
        let mut search = HoleSearch {
            adj: &adj,
            in_path: vec![false; n],
            touch: vec![0; n],
            path: Vec::new(),
        };
        for s in 0..n {
            search.path.clear();
            search.path.push(s);
            search.in_path[s] = true;
            let found = search.extend(s);
            search.in_path[s] = false;
            if found {
                return Some(search.path.iter().map(|&u| self.vertex_of_unified(u)).collect());
            }
        }
        None
    }
}

struct HoleSearch<'a> {
    adj: &'a [Vec<usize>],
    in_path: Vec<bool>,
    /// Number of neighbors among the internal path vertices (neither the
    /// start nor the current end).
    touch: Vec<u32>,
    path: Vec<usize>,
}

impl HoleSearch<'_> {
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    fn extend(&mut self, start: usize) -> bool {
        let last = *self.path.last().unwrap();
        for i in 0..self.adj[last].len() {
            let w = self.adj[last][i];
            if w <= start || self.in_path[w] || self.touch[w] > 0 {
                continue;
            }
            if self.path.len() >= 2 && self.adjacent(start, w) {
                if self.path.len() + 1 >= 6 {
                    self.path.push(w);
                    return true;
                }
                continue;
            }
            if last != start {
                for &nb in &self.adj[last] {
                    self.touch[nb] += 1;
                }
            }
            self.path.push(w);
            self.in_path[w] = true;
            if self.extend(start) {
                return true;
            }
            self.in_path[w] = false;
            self.path.pop();
            if last != start {
                for &nb in &self.adj[last] {
                    self.touch[nb] -= 1;
                }
            }
        }
        false
    }
}

/// A certificate that a bipartite graph is not distance-hereditary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Forbidden {
    Domino([Vertex; 6]),
    Hole(Vec<Vertex>),
}

impl Forbidden {
    pub fn vertices(&self) -> Vec<Vertex> {
        match self {
            Forbidden::Domino(vs) => vs.to_vec(),
            Forbidden::Hole(vs) => vs.clone(),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Forbidden::Domino(_) => "domino",
            Forbidden::Hole(_) => "hole",
        }
    }
}

enum Endpoint {
    Plain(usize),
    Tagged(Vertex),
}

fn parse_endpoint(token: &str) -> Option<Endpoint> {
    if let Ok(i) = token.parse::<usize>() {
        return Some(Endpoint::Plain(i));
    }
    Vertex::parse(token).map(Endpoint::Tagged)
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Intersection of two sorted, duplicate-free slices.
pub fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Whether sorted `a` is a subset of sorted `b`.
pub fn is_subset_sorted(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &v in a {
        while j < b.len() && b[j] < v {
            j += 1;
        }
        if j == b.len() || b[j] != v {
            return false;
        }
        j += 1;
    }
    true
}

/// Small named graphs used throughout the tests and examples.
pub mod fixtures {
    use super::BipartiteGraph;

    /// Single edge.
    pub fn k2() -> BipartiteGraph {
        BipartiteGraph::from_edges(1, 1, &[(0, 0)])
    }

    /// X = {a, b, c}, Y = {d, e, f}; edges a-d, a-e, b-d, b-e, b-f, c-e, c-f.
    pub fn domino() -> BipartiteGraph {
        BipartiteGraph::from_edges(3, 3, &[(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2)])
    }

    /// The 6-cycle a-d-b-f-c-e-a with X = {a, b, c}, Y = {d, e, f}.
    pub fn c6() -> BipartiteGraph {
        BipartiteGraph::from_edges(3, 3, &[(0, 0), (1, 0), (1, 2), (2, 2), (2, 1), (0, 1)])
    }

    /// Path x1-y1-x2-y2.
    pub fn p4() -> BipartiteGraph {
        BipartiteGraph::from_edges(2, 2, &[(0, 0), (1, 0), (1, 1)])
    }

    /// Path x1-y1-x2-y2-x3.
    pub fn p5() -> BipartiteGraph {
        BipartiteGraph::from_edges(3, 2, &[(0, 0), (1, 0), (1, 1), (2, 1)])
    }

    /// Star with center x1 and three leaves.
    pub fn star3() -> BipartiteGraph {
        BipartiteGraph::from_edges(1, 3, &[(0, 0), (0, 1), (0, 2)])
    }

    /// Two disjoint edges.
    pub fn two_edges() -> BipartiteGraph {
        BipartiteGraph::from_edges(2, 2, &[(0, 0), (1, 1)])
    }
}
