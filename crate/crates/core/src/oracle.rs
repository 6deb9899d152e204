//! Brute-force reference implementations. These deliberately share no
//! code with the fast paths: vertex sets are plain bitmasks and every
//! search is exhaustive.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side, Vertex};
use crate::lattice::Biclique;

fn mask_of(g: &BipartiteGraph, v: Vertex) -> u64 {
    g.neighbors(v).iter().fold(0, |m, &u| m | 1 << u)
}

fn bits(mut m: u64) -> Vec<usize> {
    let mut out = Vec::new();
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Every nonempty `S ⊆ X` with a nonempty common neighborhood `Y₀`, closed
/// to `(∩_{y∈Y₀} N(y), Y₀)`. Subsets whose prefix already has an empty
/// intersection are skipped as a block (all their supersets are empty too).
pub fn brute_maximal_bicliques(g: &BipartiteGraph) -> Result<Vec<Biclique>> {
    if g.nx() > 24 {
        return Err(Error::SizeLimit {
            what: "|X| (brute-force bicliques)",
            size: g.nx(),
            limit: 24,
        });
    }
    if g.ny() > 64 {
        return Err(Error::SizeLimit {
            what: "|Y| (brute-force bicliques)",
            size: g.ny(),
            limit: 64,
        });
    }
    let xn: Vec<u64> = (0..g.nx()).map(|x| mask_of(g, Vertex::x(x))).collect();
    let yn: Vec<u32> = (0..g.ny())
        .map(|y| g.neighbors(Vertex::y(y)).iter().fold(0, |m, &u| m | 1 << u))
        .collect();
    let all_y = if g.ny() == 64 { u64::MAX } else { (1u64 << g.ny()) - 1 };
    let mut y_shores = BTreeSet::new();
    // explicit stack of (next x to decide, intersection so far, S nonempty)
    let mut stack = vec![(0usize, all_y, false)];
    while let Some((i, inter, nonempty)) = stack.pop() {
        if nonempty {
            if inter == 0 {
                continue;
            }
            y_shores.insert(inter);
        }
        if i == g.nx() {
            continue;
        }
        stack.push((i + 1, inter, nonempty));
        stack.push((i + 1, inter & xn[i], true));
    }
    let mut out: Vec<Biclique> = y_shores
        .into_iter()
        .map(|ys| {
            let xs = bits(ys).into_iter().fold(u32::MAX, |m, y| m & yn[y]);
            let xs = if g.nx() == 32 { xs } else { xs & ((1u32 << g.nx()) - 1) };
            Biclique {
                x: bits(xs as u64),
                y: bits(ys),
            }
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// `∩ N(v)` over `subset ⊆ side`, by checking every opposite vertex against
/// every member; the whole opposite class for an empty subset.
pub fn brute_intersection(g: &BipartiteGraph, side: Side, subset: &[usize]) -> Vec<usize> {
    (0..g.size(side.opposite()))
        .filter(|&u| {
            subset
                .iter()
                .all(|&v| g.neighbors(Vertex { side, index: v }).contains(&u))
        })
        .collect()
}

/// Whether the order on `0..k` given by `leq[a][b]` has dimension at most `d`.
///
/// A family of linear extensions realizes the order iff every critical pair
/// `(a, b)` (`a ∥ b`, everything below `a` is below `b`, everything above
/// `b` is above `a`) is reversed (`b < a`) in some member. The search colors
/// critical pairs with `d` colors so that each color class plus the order
/// stays acyclic.
pub fn brute_order_dimension_leq(leq: &[Vec<bool>], d: usize) -> Result<bool> {
    let k = leq.len();
    if k > 10 {
        return Err(Error::SizeLimit {
            what: "poset elements (dimension search)",
            size: k,
            limit: 10,
        });
    }
    let le = |a: usize, b: usize| leq[a][b];
    let mut pairs = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if a == b || le(a, b) || le(b, a) {
                continue;
            }
            let down_ok = (0..k).all(|c| !(le(c, a) && c != a) || le(c, b));
            let up_ok = (0..k).all(|c| !(le(b, c) && c != b) || le(a, c));
            if down_ok && up_ok {
                pairs.push((a, b));
            }
        }
    }
    if pairs.is_empty() {
        return Ok(d >= 1 || k == 0);
    }
    // up[x]: bitmask of elements ≥ x in the current strengthened order
    let base: Vec<u16> = (0..k)
        .map(|x| (0..k).filter(|&y| le(x, y)).fold(0u16, |m, y| m | 1 << y))
        .collect();
    let mut colors = vec![base; d];
    Ok(color_pairs(&pairs, 0, &mut colors, 0))
}

fn color_pairs(pairs: &[(usize, usize)], i: usize, colors: &mut Vec<Vec<u16>>, used: usize) -> bool {
    let Some(&(a, b)) = pairs.get(i) else {
        return true;
    };
    let limit = (used + 1).min(colors.len());
    for c in 0..limit {
        let up = &colors[c];
        // adding b < a closes a cycle iff a ≤ b already holds
        if up[a] & (1 << b) != 0 {
            continue;
        }
        let saved = colors[c].clone();
        let above_a = saved[a];
        for x in 0..saved.len() {
            if saved[x] & (1 << b) != 0 {
                colors[c][x] |= above_a;
            }
        }
        if color_pairs(pairs, i + 1, colors, used.max(c + 1)) {
            return true;
        }
        colors[c] = saved;
    }
    false
}

/// Every connected induced subgraph keeps all its pairwise distances.
pub fn brute_distance_hereditary(g: &BipartiteGraph) -> Result<bool> {
    let n = g.vertex_count();
    if n > 14 {
        return Err(Error::SizeLimit {
            what: "vertices (distance-hereditary scan)",
            size: n,
            limit: 14,
        });
    }
    let id = |v: Vertex| match v.side {
        Side::X => v.index,
        Side::Y => g.nx() + v.index,
    };
    let mut adj = vec![0u32; n];
    for (x, y) in g.edges() {
        let (u, v) = (id(Vertex::x(x)), id(Vertex::y(y)));
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let bfs = |within: u32, s: usize| -> Vec<Option<usize>> {
        let mut dist = vec![None; n];
        dist[s] = Some(0);
        let mut frontier = 1u32 << s;
        let mut seen = frontier;
        let mut level = 0;
        while frontier != 0 {
            level += 1;
            let mut next = 0u32;
            for u in bits(frontier as u64) {
                next |= adj[u] & within & !seen;
            }
            seen |= next;
            for u in bits(next as u64) {
                dist[u] = Some(level);
            }
            frontier = next;
        }
        dist
    };
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let whole: Vec<Vec<Option<usize>>> = (0..n).map(|s| bfs(full, s)).collect();
    for sub in 1..=full {
        if sub.count_ones() < 3 {
            continue;
        }
        let members = bits(sub as u64);
        let first = bfs(sub, members[0]);
        if members.iter().any(|&u| first[u].is_none()) {
            continue;
        }
        for &s in &members {
            let d = bfs(sub, s);
            if members.iter().any(|&t| d[t] != whole[s][t]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
