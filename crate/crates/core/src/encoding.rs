//! Path-arborescence encoding of a bipartite distance-hereditary graph.
//!
//! The arcs of a rooted tree are labeled bijectively by one color class
//! (the arc side); every vertex of the other class (the interval side) has
//! a neighborhood equal to the arc set of one root-directed path
//! `[a, b]`. An arc is identified with its head node, so arc ids are the
//! non-root node ids.
//!
//! Two preorder numberings (children left-to-right and right-to-left)
//! answer `u ≤_T v` with two integer comparisons, and an Euler-tour sparse
//! table answers lowest-common-ancestor queries in constant time.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side, Vertex};
use crate::pruning::{PruningSequence, PruningStep};

const NONE: usize = usize::MAX;

/// Rooted tree whose non-root nodes carry the arc labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arborescence {
    pub root: usize,
    /// `parent[root]` is unused.
    pub parent: Vec<usize>,
    /// Arc-side vertex index labeling the arc entering each node;
    /// `None` for the root.
    pub arc_label: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
}

impl Arborescence {
    pub fn node_count(&self) -> usize {
        self.parent.len()
    }
}

/// The two preorder ranks of every node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderLabels {
    pub pre_lr: Vec<usize>,
    pub pre_rl: Vec<usize>,
}

/// Arcs `a ≤_T b`; the path from `a` down to `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathInterval {
    pub a: usize,
    pub b: usize,
}

/// Euler tour with a sparse table of minimum-depth positions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct LcaIndex {
    first: Vec<usize>,
    tour: Vec<usize>,
    table: Vec<Vec<u32>>,
}

impl LcaIndex {
    fn build(tree: &Arborescence, depth: &[usize]) -> LcaIndex {
        let n = tree.node_count();
        let mut first = vec![0; n];
        let mut tour = Vec::with_capacity(2 * n);
        let mut stack: Vec<(usize, usize)> = vec![(tree.root, 0)];
        while let Some((node, next_child)) = stack.pop() {
            if next_child == 0 {
                first[node] = tour.len();
            }
            tour.push(node);
            if next_child < tree.children[node].len() {
                stack.push((node, next_child + 1));
                stack.push((tree.children[node][next_child], 0));
            }
        }
        let m = tour.len();
        let mut table: Vec<Vec<u32>> = vec![(0..m as u32).collect()];
        let mut width = 1;
        while 2 * width <= m {
            let prev = table.last().unwrap();
            let row: Vec<u32> = (0..=m - 2 * width)
                .map(|i| {
                    let (l, r) = (prev[i], prev[i + width]);
                    if depth[tour[l as usize]] <= depth[tour[r as usize]] {
                        l
                    } else {
                        r
                    }
                })
                .collect();
            table.push(row);
            width *= 2;
        }
        LcaIndex { first, tour, table }
    }

    fn query(&self, depth: &[usize], u: usize, v: usize) -> usize {
        let (mut l, mut r) = (self.first[u], self.first[v]);
        if l > r {
            std::mem::swap(&mut l, &mut r);
        }
        let level = (usize::BITS - 1 - (r - l + 1).leading_zeros()) as usize;
        let row = &self.table[level];
        let (p, q) = (row[l] as usize, row[r + 1 - (1 << level)] as usize);
        if depth[self.tour[p]] <= depth[self.tour[q]] {
            self.tour[p]
        } else {
            self.tour[q]
        }
    }
}

/// The compact encoding: tree, order labels, one interval per
/// interval-side vertex, and the LCA index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArborescenceEncoding {
    arc_side: Side,
    pub tree: Arborescence,
    pub labels: OrderLabels,
    /// Per interval-side vertex; `None` only for an isolated vertex.
    pub intervals: Vec<Option<PathInterval>>,
    arc_of: Vec<usize>,
    depth: Vec<usize>,
    lca: LcaIndex,
}

struct Builder {
    parent: Vec<usize>,
    children: Vec<Vec<usize>>,
    pos: Vec<usize>,
    label: Vec<usize>,
    arc_node: Vec<usize>,
    /// Intervals ending at the same arc share a bucket; subdividing that arc
    /// retargets the whole bucket at once.
    bucket_label: Vec<usize>,
    label_bucket: Vec<usize>,
    iv_top: Vec<usize>,
    iv_bucket: Vec<usize>,
}

impl Builder {
    fn new(arcs: usize, intervals: usize) -> Builder {
        Builder {
            parent: vec![NONE],
            children: vec![Vec::new()],
            pos: vec![0],
            label: vec![NONE],
            arc_node: vec![NONE; arcs],
            bucket_label: Vec::with_capacity(arcs),
            label_bucket: vec![NONE; arcs],
            iv_top: vec![NONE; intervals],
            iv_bucket: vec![NONE; intervals],
        }
    }

    fn add_leaf(&mut self, parent: usize, label: usize) {
        let node = self.parent.len();
        self.parent.push(parent);
        self.pos.push(self.children[parent].len());
        self.children[parent].push(node);
        self.children.push(Vec::new());
        self.label.push(label);
        self.arc_node[label] = node;
        self.label_bucket[label] = self.bucket_label.len();
        self.bucket_label.push(label);
    }

    /// Splits arc `old` into `old` followed by `new`.
    fn subdivide(&mut self, old: usize, new: usize) {
        let lower = self.arc_node[old];
        let p = self.parent[lower];
        let upper = self.parent.len();
        self.parent.push(p);
        self.pos.push(self.pos[lower]);
        self.children[p][self.pos[lower]] = upper;
        self.children.push(vec![lower]);
        self.label.push(old);
        self.parent[lower] = upper;
        self.pos[lower] = 0;
        self.label[lower] = new;
        self.arc_node[old] = upper;
        self.arc_node[new] = lower;
        let moved = self.label_bucket[old];
        self.bucket_label[moved] = new;
        self.label_bucket[new] = moved;
        self.label_bucket[old] = self.bucket_label.len();
        self.bucket_label.push(old);
    }
}

/// Builds the encoding by replaying `seq`:
///
/// - an initial arc-side vertex becomes the single root arc; an initial
///   interval-side vertex leaves the tree empty with its interval deferred;
/// - an interval-side pendant on arc `x` gets `[x, x]`;
/// - an interval-side twin copies its anchor's interval;
/// - an arc-side twin `x'` of `x` subdivides arc `x` into `x` then `x'`,
///   and every interval ending at `x` now ends at `x'`;
/// - an arc-side pendant `x'` on `w` hangs a new leaf arc below the end of
///   `w`'s interval and extends that interval to it (creating the root arc
///   when the tree is still empty).
pub fn encode(g: &BipartiteGraph, seq: &PruningSequence, arc_side: Side) -> Result<ArborescenceEncoding> {
    seq.validate_shape(g.nx(), g.ny())?;
    if !seq.replays_to(g) {
        return Err(Error::InvalidSequence("sequence does not rebuild this graph".into()));
    }
    let iv_side = arc_side.opposite();
    let mut bld = Builder::new(g.size(arc_side), g.size(iv_side));
    let invalid = |m: String| Error::InvalidSequence(m);
    for step in &seq.steps {
        match *step {
            PruningStep::Initial(v) => {
                if v.side == arc_side {
                    bld.add_leaf(0, v.index);
                }
            }
            PruningStep::Pendant { vertex, anchor } if vertex.side == iv_side => {
                bld.iv_top[vertex.index] = anchor.index;
                bld.iv_bucket[vertex.index] = bld.label_bucket[anchor.index];
            }
            PruningStep::Pendant { vertex, anchor } => {
                let w = anchor.index;
                if bld.iv_top[w] == NONE {
                    if bld.parent.len() > 1 {
                        return Err(invalid(format!("{anchor} has no interval at step `{step}`")));
                    }
                    bld.add_leaf(0, vertex.index);
                    bld.iv_top[w] = vertex.index;
                } else {
                    let end = bld.bucket_label[bld.iv_bucket[w]];
                    bld.add_leaf(bld.arc_node[end], vertex.index);
                }
                bld.iv_bucket[w] = bld.label_bucket[vertex.index];
            }
            PruningStep::Twin { vertex, anchor } if vertex.side == iv_side => {
                if bld.iv_top[anchor.index] == NONE {
                    return Err(invalid(format!("twin {vertex} of isolated vertex {anchor}")));
                }
                bld.iv_top[vertex.index] = bld.iv_top[anchor.index];
                bld.iv_bucket[vertex.index] = bld.iv_bucket[anchor.index];
            }
            PruningStep::Twin { vertex, anchor } => bld.subdivide(anchor.index, vertex.index),
        }
    }
    let tree = Arborescence {
        root: 0,
        parent: bld.parent,
        arc_label: bld.label.iter().map(|&l| (l != NONE).then_some(l)).collect(),
        children: bld.children,
    };
    let intervals = bld
        .iv_top
        .iter()
        .zip(&bld.iv_bucket)
        .map(|(&top, &bucket)| {
            (top != NONE).then(|| PathInterval {
                a: bld.arc_node[top],
                b: bld.arc_node[bld.bucket_label[bucket]],
            })
        })
        .collect();
    let labels = preorders(&tree);
    let enc = ArborescenceEncoding::assemble(arc_side, tree, labels, intervals);
    // every interval must be a downward path of the right length
    for (w, iv) in enc.intervals.iter().enumerate() {
        let v = Vertex {
            side: iv_side,
            index: w,
        };
        let len = iv.map_or(Some(0), |iv| {
            enc.leq(iv.a, iv.b).then(|| enc.depth[iv.b] - enc.depth[iv.a] + 1)
        });
        if len != Some(g.degree(v)) {
            return Err(invalid(format!("interval of {v} does not match its degree")));
        }
    }
    Ok(enc)
}

fn preorders(tree: &Arborescence) -> OrderLabels {
    let n = tree.node_count();
    let mut pre_lr = vec![0; n];
    let mut pre_rl = vec![0; n];
    for (ranks, left_first) in [(&mut pre_lr, true), (&mut pre_rl, false)] {
        let mut stack = vec![tree.root];
        let mut next = 0;
        while let Some(node) = stack.pop() {
            ranks[node] = next;
            next += 1;
            // the stack pops the last pushed child first
            if left_first {
                stack.extend(tree.children[node].iter().rev());
            } else {
                stack.extend(tree.children[node].iter());
            }
        }
    }
    OrderLabels { pre_lr, pre_rl }
}

fn depths(tree: &Arborescence, labels: &OrderLabels) -> Vec<usize> {
    let n = tree.node_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| labels.pre_lr[v]);
    let mut depth = vec![0; n];
    for v in order {
        if v != tree.root {
            depth[v] = depth[tree.parent[v]] + 1;
        }
    }
    depth
}

impl ArborescenceEncoding {
    fn assemble(
        arc_side: Side,
        tree: Arborescence,
        labels: OrderLabels,
        intervals: Vec<Option<PathInterval>>,
    ) -> ArborescenceEncoding {
        let depth = depths(&tree, &labels);
        let mut arc_of = vec![NONE; tree.node_count().saturating_sub(1)];
        for (node, l) in tree.arc_label.iter().enumerate() {
            if let Some(l) = *l {
                if l < arc_of.len() {
                    arc_of[l] = node;
                }
            }
        }
        let lca = LcaIndex::build(&tree, &depth);
        ArborescenceEncoding {
            arc_side,
            tree,
            labels,
            intervals,
            arc_of,
            depth,
            lca,
        }
    }

    pub fn arc_side(&self) -> Side {
        self.arc_side
    }

    pub fn interval_side(&self) -> Side {
        self.arc_side.opposite()
    }

    pub fn arc_count(&self) -> usize {
        self.tree.node_count() - 1
    }

    pub fn is_arc(&self, arc: usize) -> bool {
        arc != self.tree.root && arc < self.tree.node_count()
    }

    /// Arc labeled by arc-side vertex index `v`.
    pub fn arc_of(&self, v: usize) -> usize {
        self.arc_of[v]
    }

    /// Arc-side vertex index labeling `arc`.
    pub fn label_of(&self, arc: usize) -> usize {
        self.tree.arc_label[arc].expect("root carries no label")
    }

    pub fn parent(&self, arc: usize) -> usize {
        self.tree.parent[arc]
    }

    pub fn root(&self) -> usize {
        self.tree.root
    }

    /// Number of arcs on the root path ending with `arc` (1 for a root arc).
    pub fn depth(&self, arc: usize) -> usize {
        self.depth[arc]
    }

    pub fn pre_lr(&self, arc: usize) -> usize {
        self.labels.pre_lr[arc]
    }

    pub fn pre_rl(&self, arc: usize) -> usize {
        self.labels.pre_rl[arc]
    }

    pub fn interval(&self, w: usize) -> Option<PathInterval> {
        self.intervals[w]
    }

    /// `u ≤_T v` from the two preorder ranks alone.
    #[inline]
    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.labels.pre_lr[u] <= self.labels.pre_lr[v] && self.labels.pre_rl[u] <= self.labels.pre_rl[v]
    }

    pub fn leq_t(&self, u: usize, v: usize) -> Result<bool> {
        for a in [u, v] {
            if !self.is_arc(a) {
                return Err(Error::UnknownArc(a));
            }
        }
        Ok(self.leq(u, v))
    }

    /// Lowest common ancestor node of two nodes (possibly the root).
    #[inline]
    pub fn meet_nodes(&self, u: usize, v: usize) -> usize {
        self.lca.query(&self.depth, u, v)
    }

    /// The `≤_T`-greatest arc below every arc of `arcs`, or `None` when only
    /// the root lies below all of them.
    pub fn lca(&self, arcs: &[usize]) -> Result<Option<usize>> {
        let (&first, rest) = arcs.split_first().ok_or(Error::EmptySet)?;
        for &a in arcs {
            if !self.is_arc(a) {
                return Err(Error::UnknownArc(a));
            }
        }
        let m = rest.iter().fold(first, |acc, &a| self.meet_nodes(acc, a));
        Ok((m != self.tree.root).then_some(m))
    }

    /// If the arcs labeled by `vertices` (arc-side indices) form one
    /// downward path, returns its `(top, bottom)` arcs.
    pub fn path_of_arc_set(&self, vertices: &[usize]) -> Option<(usize, usize)> {
        let arcs: Vec<usize> = vertices.iter().map(|&v| self.arc_of[v]).collect();
        let top = *arcs.iter().min_by_key(|&&a| self.depth[a])?;
        let bottom = *arcs.iter().max_by_key(|&&a| self.depth[a])?;
        if !self.leq(top, bottom) || self.depth[bottom] - self.depth[top] + 1 != arcs.len() {
            return None;
        }
        let mut on_path = std::collections::HashSet::new();
        let mut a = bottom;
        loop {
            on_path.insert(a);
            if a == top {
                break;
            }
            a = self.tree.parent[a];
        }
        arcs.iter().all(|a| on_path.contains(a)).then_some((top, bottom))
    }

    /// Integers in the serialized form: root, parent, label and both
    /// preorder arrays, and a `(vertex, a, b)` triple per interval.
    pub fn stored_integers(&self) -> usize {
        1 + 4 * self.tree.node_count() + 3 * self.intervals.len()
    }

    pub fn to_text(&self) -> String {
        let n = self.tree.node_count();
        let mut out = String::from("bdh-encoding v1\n");
        let _ = writeln!(out, "side {}", self.arc_side);
        let _ = writeln!(out, "sizes {} {}", n - 1, self.intervals.len());
        let _ = writeln!(out, "root {}", self.tree.root);
        let row = |name: &str, vals: Vec<String>| format!("{name} {}\n", vals.join(" "));
        out.push_str(&row(
            "parent",
            (0..n)
                .map(|v| {
                    if v == self.tree.root {
                        "-".into()
                    } else {
                        self.tree.parent[v].to_string()
                    }
                })
                .collect(),
        ));
        out.push_str(&row(
            "label",
            self.tree
                .arc_label
                .iter()
                .map(|l| l.map_or("-".into(), |l| (l + 1).to_string()))
                .collect(),
        ));
        out.push_str(&row(
            "pre_lr",
            self.labels.pre_lr.iter().map(usize::to_string).collect(),
        ));
        out.push_str(&row(
            "pre_rl",
            self.labels.pre_rl.iter().map(usize::to_string).collect(),
        ));
        for (w, iv) in self.intervals.iter().enumerate() {
            match iv {
                Some(iv) => {
                    let _ = writeln!(out, "interval {} {} {}", w + 1, iv.a, iv.b);
                }
                None => {
                    let _ = writeln!(out, "interval {} - -", w + 1);
                }
            }
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output. Child order is recovered
    /// from the left-to-right preorder.
    pub fn parse(text: &str) -> Result<ArborescenceEncoding> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let mut next = |key: &str| -> Result<(usize, Vec<String>)> {
            let (i, line) = lines.next().ok_or(Error::Malformed {
                line: 0,
                message: format!("missing `{key}` line"),
            })?;
            let mut fields = line.split_whitespace().map(str::to_string);
            if fields.next().as_deref() != Some(key) {
                return Err(Error::Malformed {
                    line: i + 1,
                    message: format!("expected `{key}`"),
                });
            }
            Ok((i + 1, fields.collect()))
        };
        let (line, version) = next("bdh-encoding")?;
        let malformed = |line: usize, m: &str| Error::Malformed {
            line,
            message: m.to_string(),
        };
        if version != ["v1"] {
            return Err(malformed(line, "unsupported version"));
        }
        let (line, side) = next("side")?;
        let arc_side = match side.first().map(String::as_str) {
            Some("X") => Side::X,
            Some("Y") => Side::Y,
            _ => return Err(malformed(line, "side must be X or Y")),
        };
        let num = |line: usize, s: &str| s.parse::<usize>().map_err(|_| malformed(line, "expected an integer"));
        let opt = |line: usize, s: &str| if s == "-" { Ok(None) } else { num(line, s).map(Some) };
        let (line, sizes) = next("sizes")?;
        if sizes.len() != 2 {
            return Err(malformed(line, "expected two sizes"));
        }
        let (arcs, ivs) = (num(line, &sizes[0])?, num(line, &sizes[1])?);
        let n = arcs + 1;
        let (line, root) = next("root")?;
        let root = num(line, root.first().map(String::as_str).unwrap_or(""))?;
        if root >= n {
            return Err(malformed(line, "root out of range"));
        }
        let mut array = |key: &str| -> Result<Vec<Option<usize>>> {
            let (line, vals) = next(key)?;
            if vals.len() != n {
                return Err(malformed(line, "wrong array length"));
            }
            vals.iter().map(|s| opt(line, s)).collect()
        };
        let parent_raw = array("parent")?;
        let label_raw = array("label")?;
        let pre_lr: Option<Vec<usize>> = array("pre_lr")?.into_iter().collect();
        let pre_rl: Option<Vec<usize>> = array("pre_rl")?.into_iter().collect();
        let (pre_lr, pre_rl) = match (pre_lr, pre_rl) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(malformed(0, "preorder ranks must be integers")),
        };
        if !is_permutation(&pre_lr) || !is_permutation(&pre_rl) {
            return Err(malformed(0, "preorder ranks must be a permutation of the nodes"));
        }
        let mut parent = vec![NONE; n];
        for (v, p) in parent_raw.iter().enumerate() {
            match (*p, v == root) {
                (None, true) => {}
                (Some(p), false) if p < n => parent[v] = p,
                _ => return Err(malformed(0, "bad parent entry")),
            }
        }
        let arc_label: Vec<Option<usize>> = label_raw.iter().map(|l| l.and_then(|l| l.checked_sub(1))).collect();
        let mut intervals = vec![None; ivs];
        for _ in 0..ivs {
            let (line, f) = next("interval")?;
            if f.len() != 3 {
                return Err(malformed(line, "expected `interval <v> <a> <b>`"));
            }
            let w = num(line, &f[0])?.checked_sub(1).filter(|&w| w < ivs);
            let w = w.ok_or_else(|| malformed(line, "interval vertex out of range"))?;
            intervals[w] = match (opt(line, &f[1])?, opt(line, &f[2])?) {
                (Some(a), Some(b)) if a < n && b < n => Some(PathInterval { a, b }),
                (None, None) => None,
                _ => return Err(malformed(line, "bad interval endpoints")),
            };
        }
        let mut children = vec![Vec::new(); n];
        let mut by_rank: Vec<usize> = (0..n).collect();
        by_rank.sort_by_key(|&v| pre_lr[v]);
        for v in by_rank {
            if v != root {
                children[parent[v]].push(v);
            }
        }
        let tree = Arborescence {
            root,
            parent,
            arc_label,
            children,
        };
        if !is_rooted_tree(&tree) {
            return Err(malformed(0, "parent array is not a tree"));
        }
        Ok(ArborescenceEncoding::assemble(
            arc_side,
            tree,
            OrderLabels { pre_lr, pre_rl },
            intervals,
        ))
    }
}

fn is_permutation(ranks: &[usize]) -> bool {
    let mut seen = vec![false; ranks.len()];
    ranks
        .iter()
        .all(|&r| r < seen.len() && !std::mem::replace(&mut seen[r], true))
}

/// Preorder ranks visiting children in stored order, or reversed.
fn preorder(tree: &Arborescence, reversed: bool) -> Vec<usize> {
    let mut rank = vec![0; tree.node_count()];
    let mut stack = vec![tree.root];
    let mut next = 0;
    while let Some(v) = stack.pop() {
        rank[v] = next;
        next += 1;
        if reversed {
            stack.extend(tree.children[v].iter());
        } else {
            stack.extend(tree.children[v].iter().rev());
        }
    }
    rank
}

fn is_rooted_tree(tree: &Arborescence) -> bool {
    let n = tree.node_count();
    let mut seen = vec![false; n];
    let mut stack = vec![tree.root];
    let mut count = 0;
    while let Some(v) = stack.pop() {
        if seen[v] {
            return false;
        }
        seen[v] = true;
        count += 1;
        stack.extend(&tree.children[v]);
    }
    count == n
}

/// Checks the encoding against the graph: tree shape, both preorders, label bijection,
/// every interval expanding to exactly the neighborhood, and the
/// two-preorder characterization of `≤_T` against ancestor walks
/// (all node pairs up to 200 nodes, a fixed sample beyond).
pub fn verify_encoding(g: &BipartiteGraph, enc: &ArborescenceEncoding) -> bool {
    let (arc_side, iv_side) = (enc.arc_side, enc.interval_side());
    let tree = &enc.tree;
    let n = tree.node_count();
    if n != g.size(arc_side) + 1 || enc.intervals.len() != g.size(iv_side) || !is_rooted_tree(tree) {
        return false;
    }
    if enc.labels.pre_lr != preorder(tree, false) || enc.labels.pre_rl != preorder(tree, true) {
        return false;
    }
    let mut used = vec![false; n - 1];
    for v in 0..n {
        match (v == tree.root, tree.arc_label[v]) {
            (true, None) => {}
            (false, Some(l)) if l < n - 1 && !used[l] => used[l] = true,
            _ => return false,
        }
    }
    for (w, iv) in enc.intervals.iter().enumerate() {
        let nbrs = g.neighbors(Vertex {
            side: iv_side,
            index: w,
        });
        let Some(iv) = iv else {
            if nbrs.is_empty() {
                continue;
            }
            return false;
        };
        if iv.a == tree.root || iv.b == tree.root {
            return false;
        }
        let mut got = Vec::new();
        let mut node = iv.b;
        loop {
            got.push(tree.arc_label[node].unwrap());
            if node == iv.a {
                break;
            }
            node = tree.parent[node];
            if node == tree.root || got.len() > n {
                return false;
            }
        }
        got.sort_unstable();
        if got != nbrs {
            return false;
        }
    }
    let is_ancestor = |u: usize, v: usize| {
        let mut x = v;
        loop {
            if x == u {
                return true;
            }
            if x == tree.root {
                return false;
            }
            x = tree.parent[x];
        }
    };
    if n <= 200 {
        (0..n).all(|u| (0..n).all(|v| enc.leq(u, v) == is_ancestor(u, v)))
    } else {
        let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
        (0..40_000).all(|_| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let u = (state >> 33) as usize % n;
            let v = (state >> 11) as usize % n;
            enc.leq(u, v) == is_ancestor(u, v)
        })
    }
}
