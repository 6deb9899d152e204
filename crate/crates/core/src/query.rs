//! Neighborhood and biclique queries answered on an arborescence encoding
//! in time linear in input plus output.

use serde::{Deserialize, Serialize};

use crate::encoding::ArborescenceEncoding;
use crate::error::{Error, Result};
use crate::graph::{Side, Vertex};
use crate::lattice::Biclique;

/// Work counters for a single query.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryStats {
    /// Order tests, LCA calls and loop-exit tests.
    pub comparisons: usize,
    /// Tree nodes touched while walking parent links.
    pub nodes_visited: usize,
}

impl QueryStats {
    fn absorb(&mut self, other: QueryStats) {
        self.comparisons += other.comparisons;
        self.nodes_visited += other.nodes_visited;
    }
}

fn check(enc: &ArborescenceEncoding, v: Vertex) -> Result<usize> {
    if v.side != enc.interval_side() {
        return Err(Error::WrongSide(v));
    }
    if v.index >= enc.intervals.len() {
        return Err(Error::UnknownVertex(v));
    }
    Ok(v.index)
}

/// Labels on the path from `b` up to `a`.
fn walk(enc: &ArborescenceEncoding, a: usize, b: usize, stats: &mut QueryStats) -> Vec<usize> {
    let mut out = Vec::with_capacity(enc.depth(b) + 1 - enc.depth(a));
    let mut node = b;
    loop {
        stats.nodes_visited += 1;
        stats.comparisons += 1;
        out.push(enc.label_of(node));
        if node == a {
            return out;
        }
        node = enc.parent(node);
    }
}

/// `N(v)` listed from the bottom arc of its interval up to the top arc.
pub fn list_neighbors(enc: &ArborescenceEncoding, v: Vertex) -> Result<(Vec<usize>, QueryStats)> {
    let w = check(enc, v)?;
    let mut stats = QueryStats::default();
    let out = match enc.interval(w) {
        Some(iv) => walk(enc, iv.a, iv.b, &mut stats),
        None => Vec::new(),
    };
    Ok((out, stats))
}

/// Endpoints `(a_max, b_min)` of the intersection path, or `None` if empty.
fn intersection_interval(
    enc: &ArborescenceEncoding,
    subset: &[Vertex],
    stats: &mut QueryStats,
) -> Result<Option<(usize, usize)>> {
    if subset.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut ivs = Vec::with_capacity(subset.len());
    for &v in subset {
        ivs.push(enc.interval(check(enc, v)?));
    }
    let Some(ivs) = ivs.into_iter().collect::<Option<Vec<_>>>() else {
        return Ok(None);
    };
    let mut a_max = ivs[0].a;
    for iv in &ivs[1..] {
        stats.comparisons += 1;
        if enc.leq(iv.a, a_max) {
            continue;
        }
        stats.comparisons += 1;
        if enc.leq(a_max, iv.a) {
            a_max = iv.a;
        } else {
            return Ok(None);
        }
    }
    let mut b_min = ivs[0].b;
    for iv in &ivs[1..] {
        stats.comparisons += 1;
        b_min = enc.meet_nodes(b_min, iv.b);
    }
    stats.comparisons += 1;
    // the root sentinel lies below every arc and fails this test
    if b_min != enc.root() && enc.leq(a_max, b_min) {
        Ok(Some((a_max, b_min)))
    } else {
        Ok(None)
    }
}

/// `∩_{v ∈ subset} N(v)`, listed bottom-up along the intersection path.
pub fn neighbor_intersection(enc: &ArborescenceEncoding, subset: &[Vertex]) -> Result<(Vec<usize>, QueryStats)> {
    let mut stats = QueryStats::default();
    let out = match intersection_interval(enc, subset, &mut stats)? {
        Some((a, b)) => walk(enc, a, b, &mut stats),
        None => Vec::new(),
    };
    Ok((out, stats))
}

pub fn intersection_empty(enc: &ArborescenceEncoding, subset: &[Vertex]) -> Result<(bool, QueryStats)> {
    let mut stats = QueryStats::default();
    let empty = intersection_interval(enc, subset, &mut stats)?.is_none();
    Ok((empty, stats))
}

/// Outcome of the double-polarity test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Maximality {
    Maximal,
    /// The subset closes to a strictly larger x-shore.
    NotMaximal {
        closure: Vec<usize>,
    },
    /// The subset has no common neighbor, so it spans no biclique.
    EmptyIntersection,
}

impl Maximality {
    pub fn is_maximal(&self) -> bool {
        matches!(self, Maximality::Maximal)
    }
}

fn require_arc_side(enc: &ArborescenceEncoding, side: Side) -> Result<()> {
    if enc.arc_side() != side {
        return Err(Error::ArcSide {
            expected: side,
            found: enc.arc_side(),
        });
    }
    Ok(())
}

fn as_vertices(side: Side, ids: &[usize]) -> Vec<Vertex> {
    ids.iter().map(|&index| Vertex { side, index }).collect()
}

/// Whether `(subset, ∩ N(x))` is a maximal biclique. `enc_x` has arcs
/// labeled by X, `enc_y` by Y.
pub fn is_maximal_biclique(
    enc_x: &ArborescenceEncoding,
    enc_y: &ArborescenceEncoding,
    subset: &[usize],
) -> Result<(Maximality, QueryStats)> {
    require_arc_side(enc_x, Side::X)?;
    require_arc_side(enc_y, Side::Y)?;
    let (y0, mut stats) = neighbor_intersection(enc_y, &as_vertices(Side::X, subset))?;
    if y0.is_empty() {
        return Ok((Maximality::EmptyIntersection, stats));
    }
    let (mut closure, more) = neighbor_intersection(enc_x, &as_vertices(Side::Y, &y0))?;
    stats.absorb(more);
    closure.sort_unstable();
    let mut given = subset.to_vec();
    given.sort_unstable();
    given.dedup();
    let verdict = if closure == given {
        Maximality::Maximal
    } else {
        Maximality::NotMaximal { closure }
    };
    Ok((verdict, stats))
}

/// Maximal bicliques from the family of nonempty `N(x)` and
/// `N(x) ∩ N(x')`, deduplicated by interval endpoints and closed by one
/// polarity pass. Canonical (sorted) order.
pub fn enumerate_via_f(enc_x: &ArborescenceEncoding, enc_y: &ArborescenceEncoding) -> Result<Vec<Biclique>> {
    require_arc_side(enc_x, Side::X)?;
    require_arc_side(enc_y, Side::Y)?;
    let nx = enc_y.intervals.len();
    let mut stats = QueryStats::default();
    let mut family = Vec::new();
    for x in 0..nx {
        for x2 in x..nx {
            let pair = [Vertex::x(x), Vertex::x(x2)];
            if let Some((a, b)) = intersection_interval(enc_y, &pair, &mut stats)? {
                family.push((enc_y.pre_lr(a), enc_y.pre_lr(b), a, b));
            }
        }
    }
    family.sort_unstable();
    family.dedup_by_key(|f| (f.0, f.1));
    let mut out = Vec::with_capacity(family.len());
    for (_, _, a, b) in family {
        let y0 = walk(enc_y, a, b, &mut stats);
        let (x0, _) = neighbor_intersection(enc_x, &as_vertices(Side::Y, &y0))?;
        out.push(Biclique::new(x0, y0));
    }
    out.sort();
    Ok(out)
}
