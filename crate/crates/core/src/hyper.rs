//! Small hypergraphs and simple graphs on bitmask vertex sets: incidence
//! graphs, 2-sections, intersection closures, acyclicity patterns, Bachman
//! diagrams, clique hypergraphs and the maps between Ptolemaic graphs and
//! bipartite distance-hereditary graphs.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side, Vertex};
use crate::lattice::{GaloisLattice, HasseDigraph};
use crate::pruning::is_bdh;

pub const MAX_GROUND: usize = 64;
const MAX_CLOSURE: usize = 4096;
const MAX_PATTERN: usize = 32;

fn bits(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

fn mask(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn limit(what: &'static str, size: usize, max: usize) -> Result<()> {
    if size > max {
        return Err(Error::SizeLimit { what, size, limit: max });
    }
    Ok(())
}

/// Undirected simple graph on vertices `0..n`, `n ≤ 64`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleGraph {
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Result<SimpleGraph> {
        limit("graph vertices", n, MAX_GROUND)?;
        Ok(SimpleGraph { adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::new(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::Malformed {
                    line: 0,
                    message: format!("bad edge {u}-{v}"),
                });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| {
                bits(self.adj[u])
                    .into_iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.adj.is_empty() {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let next = bits(frontier).into_iter().fold(0, |m, v| m | self.adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == full_mask(self.n())
    }

    /// Maximum cardinality search, then a perfect-elimination check of the
    /// reversed visit order.
    pub fn is_chordal(&self) -> bool {
        let n = self.n();
        let mut weight = vec![0usize; n];
        let mut visited = 0u64;
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| visited >> v & 1 == 0)
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .unwrap();
            visited |= 1 << v;
            order.push(v);
            for u in bits(self.adj[v] & !visited) {
                weight[u] += 1;
            }
        }
        // each vertex's earlier-visited neighbors must form a clique
        let mut earlier = 0u64;
        for &v in &order {
            let back = self.adj[v] & earlier;
            if bits(back).into_iter().any(|u| (back & !(1 << u)) & !self.adj[u] != 0) {
                return false;
            }
            earlier |= 1 << v;
        }
        true
    }
}

/// A family of subsets of `0..ground`; repeats allowed, order preserved.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hypergraph {
    pub ground: usize,
    pub members: Vec<u64>,
}

/// Acyclicity degree of a hypergraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Acyclicity {
    GammaAcyclic,
    TotallyBalancedOnly,
    Neither,
}

/// Why a hypergraph is not gamma-acyclic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// Induced cycle of length at least six in the incidence graph; X
    /// indices are ground vertices, Y indices are members.
    Hole(Vec<Vertex>),
    /// Rows (members) and columns (ground vertices) of a 3×3 submatrix with
    /// exactly seven ones whose zeros share no row and no column.
    FCopy { rows: [usize; 3], cols: [usize; 3] },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: Acyclicity,
    pub witness: Option<Witness>,
}

/// Covering digraph of the intersection closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bachman {
    pub nodes: Vec<u64>,
    /// `(i, j)`: `nodes[j]` covers `nodes[i]`.
    pub arcs: Vec<(usize, usize)>,
}

impl Bachman {
    fn components(&self) -> usize {
        let n = self.nodes.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        let mut comps = n;
        for &(a, b) in &self.arcs {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                comps -= 1;
            }
        }
        comps
    }

    /// Underlying undirected graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.arcs.len() + self.components() == self.nodes.len()
    }

    /// Underlying undirected graph is a (nonempty) tree.
    pub fn is_tree(&self) -> bool {
        !self.nodes.is_empty() && self.arcs.len() + 1 == self.nodes.len() && self.components() == 1
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph bachman {\n");
        for (i, &m) in self.nodes.iter().enumerate() {
            let names: Vec<String> = bits(m).iter().map(|v| (v + 1).to_string()).collect();
            let _ = writeln!(out, "  n{i} [label=\"{{{}}}\"];", names.join(","));
        }
        for &(a, b) in &self.arcs {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

impl Hypergraph {
    pub fn new(ground: usize, members: &[Vec<usize>]) -> Result<Hypergraph> {
        limit("hypergraph ground set", ground, MAX_GROUND)?;
        if let Some(&v) = members.iter().flatten().find(|&&v| v >= ground) {
            return Err(Error::Malformed {
                line: 0,
                message: format!("member vertex {} outside ground set", v + 1),
            });
        }
        Ok(Hypergraph {
            ground,
            members: members.iter().map(|m| mask(m)).collect(),
        })
    }

    pub fn member_sets(&self) -> Vec<Vec<usize>> {
        self.members.iter().map(|&m| bits(m)).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `p hyp <|V|> <k>` then `k` lines `m <v1> <v2> …` (1-based); `c` lines
    /// are comments.
    pub fn parse(text: &str) -> Result<Hypergraph> {
        let mut header: Option<(usize, usize)> = None;
        let mut members = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let bad = |message: &str| Error::Malformed {
                line,
                message: message.to_string(),
            };
            let fields: Vec<&str> = raw.split_whitespace().collect();
            match fields.first().copied() {
                None | Some("c") => {}
                Some("p") => {
                    if header.is_some() || fields.len() != 4 || fields[1] != "hyp" {
                        return Err(bad("expected a single `p hyp <vertices> <members>` header"));
                    }
                    let n = fields[2].parse().map_err(|_| bad("bad vertex count"))?;
                    let k = fields[3].parse().map_err(|_| bad("bad member count"))?;
                    limit("hypergraph ground set", n, MAX_GROUND)?;
                    header = Some((n, k));
                }
                Some("m") => {
                    let (n, _) = header.ok_or_else(|| bad("member before header"))?;
                    let mut set = Vec::new();
                    for f in &fields[1..] {
                        let v: usize = f.parse().map_err(|_| bad("bad vertex"))?;
                        if v == 0 || v > n {
                            return Err(bad("vertex out of range"));
                        }
                        set.push(v - 1);
                    }
                    members.push(mask(&set));
                }
                Some(_) => return Err(bad("unknown line type")),
            }
        }
        let (ground, k) = header.ok_or(Error::Malformed {
            line: 0,
            message: "missing header".into(),
        })?;
        if k != members.len() {
            return Err(Error::Malformed {
                line: 0,
                message: format!("header declares {k} members, found {}", members.len()),
            });
        }
        Ok(Hypergraph { ground, members })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p hyp {} {}\n", self.ground, self.members.len());
        for &m in &self.members {
            out.push('m');
            for v in bits(m) {
                let _ = write!(out, " {}", v + 1);
            }
            out.push('\n');
        }
        out
    }

    /// X = ground vertices, Y = members, edges by containment.
    pub fn incidence_graph(&self) -> BipartiteGraph {
        let edges: Vec<(usize, usize)> = self
            .members
            .iter()
            .enumerate()
            .flat_map(|(j, &m)| bits(m).into_iter().map(move |v| (v, j)))
            .collect();
        BipartiteGraph::from_edges(self.ground, self.members.len(), &edges)
    }

    pub fn two_section(&self) -> SimpleGraph {
        let mut g = SimpleGraph {
            adj: vec![0; self.ground],
        };
        for &m in &self.members {
            for v in bits(m) {
                g.adj[v] |= m & !(1 << v);
            }
        }
        g
    }

    /// Maximal members (first occurrence of each distinct set).
    pub fn clutter(&self) -> Hypergraph {
        let mut seen = HashSet::new();
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&m| !self.members.iter().any(|&o| o != m && o & m == m))
            .filter(|&m| seen.insert(m))
            .collect();
        Hypergraph {
            ground: self.ground,
            members,
        }
    }

    /// Nonempty intersections of nonempty subfamilies: the distinct
    /// nonempty members first, then new intersections in discovery order.
    pub fn closure(&self) -> Result<Hypergraph> {
        let mut seen = HashSet::new();
        let mut members: Vec<u64> = self
            .members
            .iter()
            .copied()
            .filter(|&m| m != 0 && seen.insert(m))
            .collect();
        let mut i = 0;
        while i < members.len() {
            for j in 0..i {
                let m = members[i] & members[j];
                if m != 0 && seen.insert(m) {
                    members.push(m);
                    limit("intersection closure", members.len(), MAX_CLOSURE)?;
                }
            }
            i += 1;
        }
        Ok(Hypergraph {
            ground: self.ground,
            members,
        })
    }

    pub fn closure_and_maximal(&self) -> Result<(Hypergraph, Hypergraph)> {
        Ok((self.closure()?, self.clutter()))
    }

    /// Any two members are disjoint or nested.
    pub fn is_laminar(&self) -> bool {
        let m = &self.members;
        (0..m.len()).all(|i| {
            (i + 1..m.len()).all(|j| {
                let c = m[i] & m[j];
                c == 0 || c == m[i] || c == m[j]
            })
        })
    }

    /// Whether the inclusion order on the members has a Hasse diagram with
    /// no undirected cycle. Laminar families pass; so do some families whose
    /// members cross in a single common lower cover.
    pub fn is_tree_like(&self) -> bool {
        let mut m = self.members.clone();
        m.sort_by_key(|&s| (s.count_ones(), s));
        m.dedup();
        let k = m.len();
        let below = |a: u64, b: u64| a != b && a & b == a;
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        for j in 0..k {
            for i in 0..j {
                if below(m[i], m[j]) && !(i + 1..j).any(|t| below(m[i], m[t]) && below(m[t], m[j])) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a == b {
                        return false;
                    }
                    parent[a] = b;
                }
            }
        }
        true
    }

    fn find_f_copy(&self) -> Option<([usize; 3], [usize; 3])> {
        let rows = &self.members;
        let k = rows.len();
        let n = self.ground;
        for c1 in 0..n {
            for c2 in c1 + 1..n {
                for c3 in c2 + 1..n {
                    let cols = [c1, c2, c3];
                    // per row: which of the three columns are zero
                    let zeros: Vec<u8> = rows
                        .iter()
                        .map(|&r| {
                            cols.iter()
                                .enumerate()
                                .fold(0u8, |z, (t, &c)| if r >> c & 1 == 0 { z | 1 << t } else { z })
                        })
                        .collect();
                    for r1 in 0..k {
                        for r2 in r1 + 1..k {
                            for r3 in r2 + 1..k {
                                let zs = [zeros[r1], zeros[r2], zeros[r3]];
                                let ones_rows = zs.iter().filter(|&&z| z == 0).count();
                                let single = zs.iter().filter(|&&z| z.count_ones() == 1).count();
                                if ones_rows == 1 && single == 2 {
                                    let used: Vec<u8> = zs.iter().copied().filter(|&z| z != 0).collect();
                                    if used[0] != used[1] {
                                        return Some(([r1, r2, r3], cols));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Totally balanced: the incidence graph has no hole. Gamma-acyclic:
    /// totally balanced and no copy of the seven-ones pattern.
    pub fn classify_acyclicity(&self) -> Result<Classification> {
        limit("hypergraph ground set (pattern scan)", self.ground, MAX_PATTERN)?;
        limit("hypergraph members (pattern scan)", self.members.len(), MAX_PATTERN)?;
        if let Some(hole) = self.incidence_graph().find_hole() {
            return Ok(Classification {
                kind: Acyclicity::Neither,
                witness: Some(Witness::Hole(hole)),
            });
        }
        Ok(match self.find_f_copy() {
            Some((rows, cols)) => Classification {
                kind: Acyclicity::TotallyBalancedOnly,
                witness: Some(Witness::FCopy { rows, cols }),
            },
            None => Classification {
                kind: Acyclicity::GammaAcyclic,
                witness: None,
            },
        })
    }

    pub fn bachman(&self) -> Result<Bachman> {
        let nodes = self.closure()?.members;
        let k = nodes.len();
        let below = |a: u64, b: u64| a != b && a & b == a;
        let mut arcs = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if below(nodes[i], nodes[j]) && !(0..k).any(|t| below(nodes[i], nodes[t]) && below(nodes[t], nodes[j]))
                {
                    arcs.push((i, j));
                }
            }
        }
        Ok(Bachman { nodes, arcs })
    }
}

/// Bron–Kerbosch with pivoting; members sorted by their vertex lists.
pub fn maximal_cliques(g: &SimpleGraph) -> Hypergraph {
    fn expand(g: &SimpleGraph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let pivot = bits(p | x)
            .into_iter()
            .max_by_key(|&u| (p & g.adj[u]).count_ones())
            .unwrap();
        for v in bits(p & !g.adj[pivot]) {
            expand(g, r | 1 << v, p & g.adj[v], x & g.adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut out = Vec::new();
    if g.n() > 0 {
        expand(g, 0, full_mask(g.n()), 0, &mut out);
    }
    out.sort_by_key(|&m| bits(m));
    Hypergraph {
        ground: g.n(),
        members: out,
    }
}

/// `𝓚̂(G) ∪ {∅, V(G)}` ordered by inclusion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueLattice {
    pub ground: usize,
    /// Sorted by size, then by mask.
    pub elements: Vec<u64>,
}

impl CliqueLattice {
    pub fn element_sets(&self) -> BTreeSet<Vec<usize>> {
        self.elements.iter().map(|&m| bits(m)).collect()
    }
}

pub fn clique_lattice(g: &SimpleGraph) -> Result<CliqueLattice> {
    let mut elements = maximal_cliques(g).closure()?.members;
    elements.push(0);
    elements.push(full_mask(g.n()));
    elements.sort_by_key(|&m| (m.count_ones(), m));
    elements.dedup();
    Ok(CliqueLattice {
        ground: g.n(),
        elements,
    })
}

/// Ptolemaic test by two criteria that must agree: gamma-acyclicity of the
/// clique hypergraph, and chordality together with a cycle-free Hasse
/// diagram on the nonempty intersections of maximal cliques.
pub fn is_ptolemaic(g: &SimpleGraph) -> Result<bool> {
    let cliques = maximal_cliques(g);
    let gamma = cliques.classify_acyclicity()?.kind == Acyclicity::GammaAcyclic;
    let closed = cliques.closure()?;
    let laminar = g.is_chordal() && closed.is_tree_like();
    if gamma != laminar {
        return Err(Error::Disagreement(format!(
            "gamma-acyclic cliques: {gamma}, chordal with tree-like intersections: {laminar}"
        )));
    }
    Ok(gamma)
}

/// Vertex–clique incidence graph (X = vertices, Y = maximal cliques) of a
/// Ptolemaic graph. Connected outputs are checked to be bipartite
/// distance-hereditary.
pub fn lambda_map(g: &SimpleGraph) -> Result<BipartiteGraph> {
    if !is_ptolemaic(g)? {
        return Err(Error::NotPtolemaic);
    }
    let b = maximal_cliques(g).incidence_graph();
    if b.vertex_count() > 0 && b.is_connected() && !is_bdh(&b)?.is_bdh() {
        return Err(Error::Disagreement(
            "vertex-clique graph of a Ptolemaic graph is not BDH".into(),
        ));
    }
    Ok(b)
}

/// The neighborhoods of `side`, as a hypergraph over the opposite class.
pub fn neighborhood_hypergraph(g: &BipartiteGraph, side: Side) -> Result<Hypergraph> {
    let members: Vec<Vec<usize>> = (0..g.size(side))
        .map(|i| g.neighbors(Vertex { side, index: i }).to_vec())
        .collect();
    Hypergraph::new(g.size(side.opposite()), &members)
}

/// Vertices of `side` whose neighborhood is neither maximal among the
/// neighborhoods of `side` nor the intersection of the neighborhoods that
/// strictly contain it.
pub fn redundant_vertices(g: &BipartiteGraph, side: Side) -> Result<Vec<usize>> {
    let nbhd = neighborhood_hypergraph(g, side)?.members;
    Ok((0..nbhd.len())
        .filter(|&i| {
            let n = nbhd[i];
            let supersets: Vec<u64> = nbhd.iter().copied().filter(|&o| o != n && o & n == n).collect();
            !supersets.is_empty() && supersets.iter().fold(u64::MAX, |a, &o| a & o) != n
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuMaps {
    /// 2-section of the X-neighborhoods, on vertex set Y.
    pub mu1: SimpleGraph,
    /// 2-section of the Y-neighborhoods, on vertex set X.
    pub mu2: SimpleGraph,
    pub i_x: Vec<usize>,
    pub i_y: Vec<usize>,
}

pub fn mu_maps(g: &BipartiteGraph) -> Result<MuMaps> {
    if !is_bdh(g)?.is_bdh() {
        return Err(Error::NotBdh);
    }
    let mu1 = neighborhood_hypergraph(g, Side::X)?.two_section();
    let mu2 = neighborhood_hypergraph(g, Side::Y)?.two_section();
    for mu in [&mu1, &mu2] {
        if !is_ptolemaic(mu)? {
            return Err(Error::Disagreement(
                "2-section of BDH neighborhoods is not Ptolemaic".into(),
            ));
        }
    }
    Ok(MuMaps {
        mu1,
        mu2,
        i_x: redundant_vertices(g, Side::X)?,
        i_y: redundant_vertices(g, Side::Y)?,
    })
}

/// Outcome of each identity checked by [`check_bridge`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeReport {
    /// Both 2-sections are Ptolemaic.
    pub mu_ptolemaic: bool,
    /// The vertex–clique graphs of both 2-sections are BDH.
    pub lambda_bdh: bool,
    /// x-shores of the vertex–clique lattice of `μ₁` (resp. `μ₂`) equal its
    /// clique lattice.
    pub clique_lattice_x: bool,
    pub clique_lattice_y: bool,
    /// y-shores of `𝓛(G − I_X)` equal the clique lattice of `μ₁`; x-shores
    /// of `𝓛(G − I_Y)` equal that of `μ₂`.
    pub reduced_x: bool,
    pub reduced_y: bool,
    /// `𝓛(G)` tree-shaped iff both reduced lattices are.
    pub tree_tree: bool,
}

impl BridgeReport {
    pub fn holds(&self) -> bool {
        self.mu_ptolemaic
            && self.lambda_bdh
            && self.clique_lattice_x
            && self.clique_lattice_y
            && self.reduced_x
            && self.reduced_y
            && self.tree_tree
    }
}

/// Shore family of the full lattice on `side`, bottom and top included.
fn shore_family(g: &BipartiteGraph, lattice: &GaloisLattice, side: Side) -> BTreeSet<Vec<usize>> {
    let mut out: BTreeSet<Vec<usize>> = lattice
        .elements
        .iter()
        .map(|b| if side == Side::X { b.x.clone() } else { b.y.clone() })
        .collect();
    out.insert(Vec::new());
    out.insert((0..g.size(side)).collect());
    out
}

fn tree_shaped(lattice: &GaloisLattice) -> bool {
    HasseDigraph::from_bicliques(&lattice.elements).is_tree_shaped()
}

pub fn check_bridge(g: &BipartiteGraph) -> Result<BridgeReport> {
    let mu = mu_maps(g)?;
    let mut report = BridgeReport {
        mu_ptolemaic: is_ptolemaic(&mu.mu1)? && is_ptolemaic(&mu.mu2)?,
        lambda_bdh: true,
        clique_lattice_x: true,
        clique_lattice_y: true,
        reduced_x: true,
        reduced_y: true,
        tree_tree: true,
    };
    for (i, m) in [&mu.mu1, &mu.mu2].into_iter().enumerate() {
        let gamma = match lambda_map(m) {
            Ok(b) => b,
            Err(Error::Disagreement(_)) | Err(Error::NotPtolemaic) => {
                report.lambda_bdh = false;
                continue;
            }
            Err(e) => return Err(e),
        };
        let lattice = GaloisLattice::from_graph(&gamma)?;
        let same = shore_family(&gamma, &lattice, Side::X) == clique_lattice(m)?.element_sets();
        if i == 0 {
            report.clique_lattice_x = same;
        } else {
            report.clique_lattice_y = same;
        }
    }
    let whole = GaloisLattice::from_graph(g)?;
    let drop = |side: Side, ids: &[usize]| -> Vec<Vertex> { ids.iter().map(|&index| Vertex { side, index }).collect() };
    let (gx, _) = g.without(&drop(Side::X, &mu.i_x));
    let (gy, _) = g.without(&drop(Side::Y, &mu.i_y));
    let lx = GaloisLattice::from_graph(&gx)?;
    let ly = GaloisLattice::from_graph(&gy)?;
    report.reduced_x = shore_family(&gx, &lx, Side::Y) == clique_lattice(&mu.mu1)?.element_sets();
    report.reduced_y = shore_family(&gy, &ly, Side::X) == clique_lattice(&mu.mu2)?.element_sets();
    report.tree_tree = tree_shaped(&whole) == (tree_shaped(&lx) && tree_shaped(&ly));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::pruning::{generate_bdh, GenOptions};

    fn hyp(ground: usize, members: &[&[usize]]) -> Hypergraph {
        let m: Vec<Vec<usize>> = members.iter().map(|s| s.iter().map(|v| v - 1).collect()).collect();
        Hypergraph::new(ground, &m).unwrap()
    }

    fn sets(h: &Hypergraph) -> Vec<Vec<usize>> {
        h.member_sets()
            .into_iter()
            .map(|s| s.into_iter().map(|v| v + 1).collect())
            .collect()
    }

    #[test]
    fn incidence_and_two_section() {
        let h = hyp(3, &[&[1, 2], &[2, 3]]);
        let g = h.incidence_graph();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        assert_eq!(edges, vec![(0, 0), (1, 0), (1, 1), (2, 1)]);
        assert_eq!(hyp(1, &[&[1]]).incidence_graph(), k2());
        assert_eq!(hyp(2, &[&[1], &[]]).incidence_graph().degree(Vertex::y(1)), 0);
        assert_eq!(hyp(3, &[&[1, 2, 3]]).two_section().edge_count(), 3);
        assert_eq!(hyp(3, &[&[1, 2], &[2, 3], &[1, 3]]).two_section().edge_count(), 3);
        assert_eq!(hyp(2, &[&[1], &[2]]).two_section().edge_count(), 0);
    }

    #[test]
    fn closures() {
        let (closed, clutter) = hyp(3, &[&[1, 2], &[2, 3]]).closure_and_maximal().unwrap();
        assert_eq!(sets(&closed), vec![vec![1, 2], vec![2, 3], vec![2]]);
        assert_eq!(sets(&clutter), vec![vec![1, 2], vec![2, 3]]);
        let (closed, _) = hyp(4, &[&[1, 2], &[3, 4]]).closure_and_maximal().unwrap();
        assert_eq!(closed.len(), 2);
        let (_, clutter) = hyp(3, &[&[1], &[1, 2], &[1, 2, 3]]).closure_and_maximal().unwrap();
        assert_eq!(sets(&clutter), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn acyclicity_examples() {
        let c3 = hyp(3, &[&[1, 2], &[2, 3], &[1, 3]]).classify_acyclicity().unwrap();
        assert_eq!(c3.kind, Acyclicity::Neither);
        assert!(matches!(c3.witness, Some(Witness::Hole(ref h)) if h.len() == 6));
        let f = hyp(3, &[&[1, 3], &[1, 2, 3], &[2, 3]]).classify_acyclicity().unwrap();
        assert_eq!(f.kind, Acyclicity::TotallyBalancedOnly);
        assert_eq!(
            f.witness,
            Some(Witness::FCopy {
                rows: [0, 1, 2],
                cols: [0, 1, 2]
            })
        );
        let path = hyp(3, &[&[1, 2], &[2, 3]]).classify_acyclicity().unwrap();
        assert_eq!(path.kind, Acyclicity::GammaAcyclic);
    }

    #[test]
    fn bachman_examples() {
        let b = hyp(3, &[&[1, 2], &[2, 3]]).bachman().unwrap();
        assert_eq!(b.arcs, vec![(2, 0), (2, 1)]);
        assert!(b.is_tree());
        let b = hyp(3, &[&[1, 2], &[2, 3], &[1, 3]]).bachman().unwrap();
        assert_eq!(b.nodes.len(), 6);
        assert!(!b.is_tree() && !b.is_forest());
        assert!(hyp(2, &[&[1, 2]]).bachman().unwrap().is_tree());
        let b = hyp(2, &[&[1], &[2]]).bachman().unwrap();
        assert!(b.is_forest() && !b.is_tree());
        assert!(b.to_dot().contains("label=\"{2}\""));
    }

    #[test]
    fn cliques() {
        let tri = SimpleGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(maximal_cliques(&tri).member_sets(), vec![vec![0, 1, 2]]);
        let p3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(maximal_cliques(&p3).member_sets(), vec![vec![0, 1], vec![1, 2]]);
        let c4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(maximal_cliques(&c4).len(), 4);
        let lat = clique_lattice(&p3).unwrap();
        assert_eq!(lat.elements, vec![0, 0b010, 0b011, 0b110, 0b111]);
    }

    #[test]
    fn ptolemaic_examples() {
        let tri = SimpleGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(is_ptolemaic(&tri).unwrap());
        let c4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!is_ptolemaic(&c4).unwrap());
        assert!(!c4.is_chordal());
        // gem: chordal but not distance-hereditary
        let gem = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]).unwrap();
        assert!(gem.is_chordal());
        assert!(!is_ptolemaic(&gem).unwrap());
    }

    #[test]
    fn lambda_examples() {
        let tri = SimpleGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let b = lambda_map(&tri).unwrap();
        assert_eq!((b.nx(), b.ny(), b.edge_count()), (3, 1, 3));
        let p3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(lambda_map(&p3).unwrap(), p5());
        let c4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(lambda_map(&c4), Err(Error::NotPtolemaic));
    }

    #[test]
    fn mu_examples() {
        let m = mu_maps(&p4()).unwrap();
        assert_eq!(m.mu1.edges(), vec![(0, 1)]);
        assert_eq!(m.i_x, vec![0]);
        assert_eq!(m.i_y, vec![1]);
        let m = mu_maps(&k2()).unwrap();
        assert_eq!((m.mu1.n(), m.mu2.n()), (1, 1));
        assert!(m.i_x.is_empty() && m.i_y.is_empty());
        assert_eq!(mu_maps(&domino()), Err(Error::NotBdh));
    }

    #[test]
    fn bridge_small() {
        for g in [k2(), p4(), p5(), star3()] {
            let r = check_bridge(&g).unwrap();
            assert!(r.holds(), "{r:?}");
        }
        for seed in 0..10 {
            let (g, _) = generate_bdh(GenOptions::new(12, seed, 0.5)).unwrap();
            assert!(check_bridge(&g).unwrap().holds(), "seed {seed}");
        }
    }

    #[test]
    fn text_round_trip() {
        let text = "c demo\np hyp 4 3\nm 1 2\nm\nm 2 3 4\n";
        let h = Hypergraph::parse(text).unwrap();
        assert_eq!(h.members, vec![0b0011, 0, 0b1110]);
        assert_eq!(Hypergraph::parse(&h.to_text()).unwrap(), h);
        assert!(Hypergraph::parse("p hyp 2 1\nm 3\n").is_err());
        assert!(Hypergraph::parse("p hyp 2 2\nm 1\n").is_err());
    }
}
