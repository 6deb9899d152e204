//! Maximal bicliques, the Galois lattice they form under x-shore
//! inclusion, and its covering digraph.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::encoding::ArborescenceEncoding;
use crate::error::{Error, Result};
use crate::graph::{intersect_sorted, is_subset_sorted, BipartiteGraph, Side, Vertex};
use crate::oracle;
use crate::pruning::pruning_sequence;

/// A biclique given by its two shores (sorted class indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Biclique {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl Biclique {
    pub fn new(mut x: Vec<usize>, mut y: Vec<usize>) -> Biclique {
        x.sort_unstable();
        x.dedup();
        y.sort_unstable();
        y.dedup();
        Biclique { x, y }
    }

    pub fn is_biclique_of(&self, g: &BipartiteGraph) -> bool {
        self.x
            .iter()
            .all(|&x| is_subset_sorted(&self.y, g.neighbors(Vertex::x(x))))
    }

    /// Both intersection identities: `X = ∩_{y∈Y} N(y)` and `Y = ∩_{x∈X} N(x)`.
    pub fn is_polar_in(&self, g: &BipartiteGraph) -> bool {
        self.x == common_neighbors(g, Side::Y, &self.y) && self.y == common_neighbors(g, Side::X, &self.x)
    }

    pub fn format(&self, g: &BipartiteGraph) -> String {
        let shore = |side: Side, ids: &[usize]| {
            let parts: Vec<String> = ids.iter().map(|&i| g.label(Vertex { side, index: i })).collect();
            format!("{{{}}}", parts.join(","))
        };
        format!("{}|{}", shore(Side::X, &self.x), shore(Side::Y, &self.y))
    }
}

/// `∩ N(v)` over `set ⊆ side`; the whole opposite class for an empty set.
pub fn common_neighbors(g: &BipartiteGraph, side: Side, set: &[usize]) -> Vec<usize> {
    match set.split_first() {
        None => (0..g.size(side.opposite())).collect(),
        Some((&first, rest)) => {
            let mut acc = g.neighbors(Vertex { side, index: first }).to_vec();
            for &v in rest {
                if acc.is_empty() {
                    break;
                }
                acc = intersect_sorted(&acc, g.neighbors(Vertex { side, index: v }));
            }
            acc
        }
    }
}

/// Result of comparing two lattice elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Comparison {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// `B ⪯ B'` iff `X(B) ⊆ X(B')`.
pub fn compare(b1: &Biclique, b2: &Biclique) -> Comparison {
    let le = is_subset_sorted(&b1.x, &b2.x);
    let ge = is_subset_sorted(&b2.x, &b1.x);
    match (le, ge) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::Less,
        (false, true) => Comparison::Greater,
        (false, false) => Comparison::Incomparable,
    }
}

/// Maximal bicliques in canonical order (lexicographic x-shore).
///
/// Bipartite distance-hereditary inputs take the pair-intersection route:
/// every y-shore is `N(x)` or `N(x) ∩ N(x')`. Anything else goes through
/// the exhaustive oracle, limited to 24 vertices. Universal vertices are
/// accepted; the lattice is still well defined, only some proper element may
/// share a shore with the bottom or top.
pub fn maximal_bicliques(g: &BipartiteGraph) -> Result<Vec<Biclique>> {
    g.require_connected()?;
    if pruning_sequence(g)?.is_some() {
        return Ok(bicliques_from_pairs(g));
    }
    if g.vertex_count() > GENERAL_LIMIT {
        return Err(Error::SizeLimit {
            what: "vertices (non-BDH biclique enumeration)",
            size: g.vertex_count(),
            limit: GENERAL_LIMIT,
        });
    }
    oracle::brute_maximal_bicliques(g)
}

const GENERAL_LIMIT: usize = 24;

/// Closes every nonempty `N(x)` and `N(x) ∩ N(x')` to its biclique. Complete
/// for bipartite distance-hereditary graphs only.
pub(crate) fn bicliques_from_pairs(g: &BipartiteGraph) -> Vec<Biclique> {
    let nx = g.nx();
    let mut shores: BTreeSet<Vec<usize>> = BTreeSet::new();
    for a in 0..nx {
        let na = g.neighbors(Vertex::x(a));
        if na.is_empty() {
            continue;
        }
        shores.insert(na.to_vec());
        for b in a + 1..nx {
            let common = intersect_sorted(na, g.neighbors(Vertex::x(b)));
            if !common.is_empty() {
                shores.insert(common);
            }
        }
    }
    let mut out: Vec<Biclique> = shores
        .into_iter()
        .map(|y| Biclique {
            x: common_neighbors(g, Side::Y, &y),
            y,
        })
        .collect();
    out.sort();
    out
}

/// `𝓛(G)`: the maximal bicliques plus the formal bottom `(∅, Y)` and top
/// `(X, ∅)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisLattice {
    pub nx: usize,
    pub ny: usize,
    /// Maximal bicliques, canonical order.
    pub elements: Vec<Biclique>,
}

/// Lattice member addressed by [`meet_join`]: a proper element or a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Element {
    Bottom,
    Top,
    Proper(usize),
}

impl GaloisLattice {
    pub fn from_graph(g: &BipartiteGraph) -> Result<GaloisLattice> {
        Ok(GaloisLattice {
            nx: g.nx(),
            ny: g.ny(),
            elements: maximal_bicliques(g)?,
        })
    }

    pub fn from_bicliques(nx: usize, ny: usize, mut elements: Vec<Biclique>) -> GaloisLattice {
        elements.sort();
        elements.dedup();
        GaloisLattice { nx, ny, elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn bottom(&self) -> Biclique {
        Biclique {
            x: Vec::new(),
            y: (0..self.ny).collect(),
        }
    }

    pub fn top(&self) -> Biclique {
        Biclique {
            x: (0..self.nx).collect(),
            y: Vec::new(),
        }
    }

    pub fn get(&self, e: Element) -> Biclique {
        match e {
            Element::Bottom => self.bottom(),
            Element::Top => self.top(),
            Element::Proper(i) => self.elements[i].clone(),
        }
    }

    pub fn index_of(&self, b: &Biclique) -> Option<usize> {
        self.elements.binary_search(b).ok()
    }

    fn full(&self) -> Vec<(Element, Biclique)> {
        let mut all = vec![(Element::Bottom, self.bottom())];
        all.extend(
            self.elements
                .iter()
                .enumerate()
                .map(|(i, b)| (Element::Proper(i), b.clone())),
        );
        all.push((Element::Top, self.top()));
        all
    }

    /// Order-dual lattice: the lattice of the graph with classes swapped.
    pub fn dual(&self) -> GaloisLattice {
        GaloisLattice::from_bicliques(
            self.ny,
            self.nx,
            self.elements
                .iter()
                .map(|b| Biclique {
                    x: b.y.clone(),
                    y: b.x.clone(),
                })
                .collect(),
        )
    }
}

/// Greatest lower and least upper bound, by scanning the full element list.
pub fn meet_join(lattice: &GaloisLattice, b1: Element, b2: Element) -> (Element, Element) {
    let (s1, s2) = (lattice.get(b1), lattice.get(b2));
    let all = lattice.full();
    let lower: Vec<&(Element, Biclique)> = all
        .iter()
        .filter(|(_, e)| is_subset_sorted(&e.x, &s1.x) && is_subset_sorted(&e.x, &s2.x))
        .collect();
    let upper: Vec<&(Element, Biclique)> = all
        .iter()
        .filter(|(_, e)| is_subset_sorted(&s1.x, &e.x) && is_subset_sorted(&s2.x, &e.x))
        .collect();
    let meet = lower
        .iter()
        .find(|(_, m)| lower.iter().all(|(_, o)| is_subset_sorted(&o.x, &m.x)))
        .map(|(e, _)| *e)
        .unwrap_or(Element::Bottom);
    let join = upper
        .iter()
        .find(|(_, j)| upper.iter().all(|(_, o)| is_subset_sorted(&j.x, &o.x)))
        .map(|(e, _)| *e)
        .unwrap_or(Element::Top);
    (meet, join)
}

/// Covering digraph of `𝓛°(G)`; arc `u → v` iff `v` covers `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseDigraph {
    pub nodes: usize,
    pub arcs: Vec<(usize, usize)>,
}

/// Role of a node in a digraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Source,
    Sink,
    Flow,
    /// Both source and sink.
    Isolated,
}

impl HasseDigraph {
    /// Transitive reduction of x-shore inclusion over `elements`.
    pub fn from_bicliques(elements: &[Biclique]) -> HasseDigraph {
        let k = elements.len();
        let words = k.div_ceil(64).max(1);
        let mut up = vec![vec![0u64; words]; k];
        let mut down = vec![vec![0u64; words]; k];
        for i in 0..k {
            for j in 0..k {
                if i != j && is_subset_sorted(&elements[i].x, &elements[j].x) {
                    up[i][j / 64] |= 1 << (j % 64);
                    down[j][i / 64] |= 1 << (i % 64);
                }
            }
        }
        let mut arcs = Vec::new();
        for (i, row) in up.iter().enumerate() {
            for (j, col) in down.iter().enumerate() {
                if row[j / 64] >> (j % 64) & 1 == 1 && row.iter().zip(col).all(|(a, b)| a & b == 0) {
                    arcs.push((i, j));
                }
            }
        }
        HasseDigraph { nodes: k, arcs }
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.nodes];
        for &(_, v) in &self.arcs {
            d[v] += 1;
        }
        d
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.nodes];
        for &(u, _) in &self.arcs {
            d[u] += 1;
        }
        d
    }

    pub fn kinds(&self) -> Vec<NodeKind> {
        let (din, dout) = (self.in_degrees(), self.out_degrees());
        (0..self.nodes)
            .map(|v| match (din[v], dout[v]) {
                (0, 0) => NodeKind::Isolated,
                (0, _) => NodeKind::Source,
                (_, 0) => NodeKind::Sink,
                _ => NodeKind::Flow,
            })
            .collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        let din = self.in_degrees();
        (0..self.nodes).filter(|&v| din[v] == 0).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        let dout = self.out_degrees();
        (0..self.nodes).filter(|&v| dout[v] == 0).collect()
    }

    pub fn undirected_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes];
        for &(u, v) in &self.arcs {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    fn component_count(&self) -> usize {
        let adj = self.undirected_adjacency();
        let mut seen = vec![false; self.nodes];
        let mut count = 0;
        for s in 0..self.nodes {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Whether the underlying undirected graph is a tree (acyclic and
    /// connected). An empty digraph is not a tree.
    pub fn is_tree_shaped(&self) -> bool {
        self.nodes > 0 && self.arcs.len() + 1 == self.nodes && self.component_count() == 1
    }

    /// Whether the underlying undirected graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.arcs.len() + self.component_count() == self.nodes
    }

    /// DOT digraph with `"{x-shore}|{y-shore}"` labels in element order.
    pub fn to_dot(&self, g: &BipartiteGraph, elements: &[Biclique]) -> String {
        let mut out = String::from("digraph hasse {\n");
        for (i, b) in elements.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", b.format(g));
        }
        for &(u, v) in &self.arcs {
            let _ = writeln!(out, "  n{u} -> n{v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Covering digraph of `𝓛°(G)` together with the lattice it was built from.
pub fn hasse(g: &BipartiteGraph) -> Result<(GaloisLattice, HasseDigraph)> {
    let lattice = GaloisLattice::from_graph(g)?;
    let h = HasseDigraph::from_bicliques(&lattice.elements);
    Ok((lattice, h))
}

/// Three linear extensions of `𝓛°(G)` whose intersection is `⪯`, as
/// permutations of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Realizer {
    pub orders: [Vec<usize>; 3],
}

impl Realizer {
    /// Whether `i` precedes-or-equals `j` in all three orders.
    pub fn below_in_all(&self, i: usize, j: usize) -> bool {
        self.orders.iter().all(|order| {
            let pos = |e: usize| order.iter().position(|&v| v == e).unwrap();
            pos(i) <= pos(j)
        })
    }

    /// Orders over the full lattice, numbering the bottom `0`, the proper
    /// element `i` as `i + 1`, and the top `len + 1`.
    pub fn with_bounds(&self) -> [Vec<usize>; 3] {
        self.orders.clone().map(|order| {
            let top = order.len() + 1;
            std::iter::once(0)
                .chain(order.into_iter().map(|i| i + 1))
                .chain(std::iter::once(top))
                .collect()
        })
    }
}

/// Builds three linear extensions from the path picture of the lattice:
/// each y-shore is the arc set of a dipath `[a, b]` in the Y-labeled
/// arborescence, and `B ⪯ B'` iff `b' ≤_T b` and `depth(a) ≤ depth(a')`.
/// The first two orders realize `≤_T` on the lower arc through the two
/// preorders, the third is the depth chain of the upper arc.
pub fn build_realizer(lattice: &GaloisLattice, enc: &ArborescenceEncoding) -> Result<Realizer> {
    if enc.arc_side() != Side::Y {
        return Err(Error::ArcSide {
            expected: Side::Y,
            found: enc.arc_side(),
        });
    }
    struct Key {
        lower_lr: usize,
        lower_rl: usize,
        top_depth: usize,
    }
    let mut keys = Vec::with_capacity(lattice.len());
    for b in &lattice.elements {
        let (top, lower) = enc.path_of_arc_set(&b.y).ok_or(Error::NotBdh)?;
        keys.push(Key {
            lower_lr: enc.pre_lr(lower),
            lower_rl: enc.pre_rl(lower),
            top_depth: enc.depth(top),
        });
    }
    let k = lattice.len();
    let mut first: Vec<usize> = (0..k).collect();
    first.sort_by_key(|&i| (std::cmp::Reverse(keys[i].lower_lr), keys[i].top_depth));
    let mut second: Vec<usize> = (0..k).collect();
    second.sort_by_key(|&i| (std::cmp::Reverse(keys[i].lower_rl), keys[i].top_depth));
    let mut third: Vec<usize> = (0..k).collect();
    third.sort_by_key(|&i| (keys[i].top_depth, std::cmp::Reverse(keys[i].lower_lr)));
    for w in first.windows(2) {
        let (a, b) = (&keys[w[0]], &keys[w[1]]);
        assert!(
            (a.lower_lr, a.top_depth) != (b.lower_lr, b.top_depth),
            "two maximal bicliques share a path"
        );
    }
    Ok(Realizer {
        orders: [first, second, third],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoding::encode;
    use crate::graph::fixtures::*;
    use crate::pruning::{generate_bdh, GenOptions};

    fn b(x: &[usize], y: &[usize]) -> Biclique {
        Biclique::new(x.to_vec(), y.to_vec())
    }

    #[test]
    fn domino_bicliques() {
        // a,b,c = 0,1,2 and d,e,f = 0,1,2
        let got = maximal_bicliques(&domino()).unwrap();
        let mut want = vec![
            b(&[1], &[0, 1, 2]),
            b(&[0, 1], &[0, 1]),
            b(&[1, 2], &[1, 2]),
            b(&[0, 1, 2], &[1]),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn c6_bicliques_are_two_paths() {
        let g = c6();
        let got = maximal_bicliques(&g).unwrap();
        assert_eq!(got.len(), 6);
        for bc in &got {
            assert_eq!(bc.x.len() + bc.y.len(), 3);
            assert!(bc.is_polar_in(&g));
        }
    }

    #[test]
    fn p4_bicliques() {
        let got = maximal_bicliques(&p4()).unwrap();
        assert_eq!(got, vec![b(&[0, 1], &[0]), b(&[1], &[0, 1])]);
    }

    #[test]
    fn k2_and_disconnected() {
        assert_eq!(maximal_bicliques(&k2()).unwrap(), vec![b(&[0], &[0])]);
        assert_eq!(maximal_bicliques(&two_edges()), Err(Error::Disconnected));
    }

    #[test]
    fn comparisons() {
        let (lo, ab, bc) = (b(&[1], &[0, 1, 2]), b(&[0, 1], &[0, 1]), b(&[1, 2], &[1, 2]));
        assert_eq!(compare(&lo, &ab), Comparison::Less);
        assert_eq!(compare(&ab, &lo), Comparison::Greater);
        assert_eq!(compare(&ab, &bc), Comparison::Incomparable);
        assert_eq!(compare(&lo, &lo), Comparison::Equal);
    }

    #[test]
    fn hasse_shapes() {
        let (_, h) = hasse(&domino()).unwrap();
        assert_eq!((h.nodes, h.arcs.len()), (4, 4));
        assert_eq!((h.sources().len(), h.sinks().len()), (1, 1));
        assert!(!h.is_tree_shaped());

        let (_, h) = hasse(&c6()).unwrap();
        assert_eq!((h.nodes, h.arcs.len()), (6, 6));
        assert_eq!((h.sources().len(), h.sinks().len()), (3, 3));
        assert!(!h.is_tree_shaped());

        let (lat, h) = hasse(&p4()).unwrap();
        let lo = lat.index_of(&b(&[1], &[0, 1])).unwrap();
        let hi = lat.index_of(&b(&[0, 1], &[0])).unwrap();
        assert_eq!(h.arcs, vec![(lo, hi)]);
        assert!(h.is_tree_shaped());
    }

    #[test]
    fn meet_and_join() {
        let lat = GaloisLattice::from_graph(&domino()).unwrap();
        let ab = Element::Proper(lat.index_of(&b(&[0, 1], &[0, 1])).unwrap());
        let bc = Element::Proper(lat.index_of(&b(&[1, 2], &[1, 2])).unwrap());
        let (m, j) = meet_join(&lat, ab, bc);
        assert_eq!(lat.get(m), b(&[1], &[0, 1, 2]));
        assert_eq!(lat.get(j), b(&[0, 1, 2], &[1]));
        assert_eq!(meet_join(&lat, ab, Element::Top).0, ab);
        assert_eq!(meet_join(&lat, ab, Element::Bottom).1, ab);
    }

    #[test]
    fn dot_export() {
        let g = p4();
        let (lat, h) = hasse(&g).unwrap();
        let dot = h.to_dot(&g, &lat.elements);
        assert!(dot.starts_with("digraph hasse {"));
        assert!(dot.contains("label=\"{x1,x2}|{y1}\""));
        assert_eq!(dot.matches("->").count(), 1);
    }

    #[test]
    fn duality() {
        let g = domino();
        let lat = GaloisLattice::from_graph(&g).unwrap();
        let swapped = GaloisLattice::from_graph(&g.swap_sides()).unwrap();
        assert_eq!(lat.dual(), swapped);
    }

    #[test]
    fn realizer_on_generated() {
        for seed in 0..30 {
            let (g, seq) = generate_bdh(GenOptions::new(20, seed, 0.5).no_universal()).unwrap();
            let lat = GaloisLattice::from_graph(&g).unwrap();
            let enc = encode(&g, &seq, Side::Y).unwrap();
            let r = build_realizer(&lat, &enc).unwrap();
            for i in 0..lat.len() {
                for j in 0..lat.len() {
                    let below = matches!(
                        compare(&lat.elements[i], &lat.elements[j]),
                        Comparison::Less | Comparison::Equal
                    );
                    assert_eq!(r.below_in_all(i, j), below, "seed {seed}");
                }
            }
        }
    }
}
