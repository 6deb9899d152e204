mod common;

use std::collections::{BTreeSet, HashMap};

use bdh_core::lattice::{compare, hasse, meet_join, Biclique, Comparison, Element, GaloisLattice, HasseDigraph};
use bdh_core::oracle::brute_maximal_bicliques;
use bdh_core::{maximal_bicliques, BipartiteGraph, Forbidden, Side, Vertex};
use common::{columns_proper, corpus, for_each_doubly_sorted, graph_of_rows};

/// Connected graphs without universal vertices on up to `n` vertices, one
/// per doubly sorted form.
fn small_graphs(n_max: usize) -> Vec<BipartiteGraph> {
    let mut out = Vec::new();
    for n in 6..=n_max {
        for nx in 3..=n / 2 {
            let ny = n - nx;
            for_each_doubly_sorted(nx, ny, &mut |rows| {
                if columns_proper(rows, ny) {
                    let g = graph_of_rows(rows, ny);
                    if g.is_connected() {
                        out.push(g);
                    }
                }
            });
        }
    }
    out
}

fn domino_free(g: &BipartiteGraph) -> bool {
    !matches!(g.find_forbidden(), Some(Forbidden::Domino(_)))
}

#[test]
fn fast_path_matches_oracle_and_polarity() {
    for inst in corpus(200, 2, 40, 100) {
        let g = &inst.graph;
        if g.nx() > 24 {
            continue;
        }
        let fast = maximal_bicliques(g).unwrap();
        assert_eq!(fast, brute_maximal_bicliques(g).unwrap(), "seed {}", inst.seed);
        for b in &fast {
            assert!(b.is_biclique_of(g) && b.is_polar_in(g));
        }
        for (i, a) in fast.iter().enumerate() {
            for b in &fast[i + 1..] {
                assert_ne!(compare(a, b), Comparison::Equal);
            }
        }
    }
}

#[test]
fn generated_lattices_are_trees() {
    for inst in corpus(120, 2, 60, 300) {
        let (_, h) = hasse(&inst.graph).unwrap();
        assert!(h.is_tree_shaped(), "seed {}", inst.seed);
    }
}

#[test]
fn shore_projections_and_duality() {
    for inst in corpus(60, 2, 30, 500) {
        let lat = GaloisLattice::from_graph(&inst.graph).unwrap();
        let e = &lat.elements;
        for a in e {
            for b in e {
                let x_le = a.x.iter().all(|v| b.x.contains(v));
                let y_ge = b.y.iter().all(|v| a.y.contains(v));
                assert_eq!(x_le, y_ge);
                let incomparable = compare(a, b) == Comparison::Incomparable;
                let x_inc = !x_le && !b.x.iter().all(|v| a.x.contains(v));
                let y_inc = !y_ge && !a.y.iter().all(|v| b.y.contains(v));
                assert_eq!(incomparable, x_inc && y_inc);
            }
        }
        let swapped = GaloisLattice::from_graph(&inst.graph.swap_sides()).unwrap();
        assert_eq!(lat.dual(), swapped);
    }
}

fn meet_or_join_is_trivial(lat: &GaloisLattice) {
    let bottom = lat.bottom();
    let top = lat.top();
    for i in 0..lat.len() {
        for j in i + 1..lat.len() {
            if compare(&lat.elements[i], &lat.elements[j]) != Comparison::Incomparable {
                continue;
            }
            let (m, jn) = meet_join(lat, Element::Proper(i), Element::Proper(j));
            let (m, jn) = (lat.get(m), lat.get(jn));
            if m.x != bottom.x {
                assert_eq!(jn.x, top.x);
            }
            if jn.x != top.x {
                assert_eq!(m.x, bottom.x);
            }
        }
    }
}

/// Number of nodes on each simple undirected cycle of `h` that are not
/// passed through in a consistent direction.
fn cycle_non_flow_counts(h: &HasseDigraph) -> Vec<usize> {
    let adj = h.undirected_adjacency();
    let arcs: BTreeSet<(usize, usize)> = h.arcs.iter().copied().collect();
    let mut counts = Vec::new();
    fn dfs(
        adj: &[Vec<usize>],
        arcs: &BTreeSet<(usize, usize)>,
        start: usize,
        path: &mut Vec<usize>,
        counts: &mut Vec<usize>,
    ) {
        let last = *path.last().unwrap();
        for &w in &adj[last] {
            if w == start && path.len() >= 3 && path[1] < *path.last().unwrap() {
                let k = path.len();
                let non_flow = (0..k)
                    .filter(|&i| {
                        let (prev, cur, next) = (path[(i + k - 1) % k], path[i], path[(i + 1) % k]);
                        arcs.contains(&(prev, cur)) != arcs.contains(&(cur, next))
                    })
                    .count();
                counts.push(non_flow);
            } else if w > start && !path.contains(&w) {
                path.push(w);
                dfs(adj, arcs, start, path, counts);
                path.pop();
            }
        }
    }
    for s in 0..h.nodes {
        dfs(&adj, &arcs, s, &mut vec![s], &mut counts);
    }
    counts
}

#[test]
fn domino_free_lattices_on_small_graphs() {
    let mut with_cycles = 0;
    for g in small_graphs(9).iter().filter(|g| domino_free(g)) {
        let (lat, h) = hasse(g).unwrap();
        meet_or_join_is_trivial(&lat);
        let counts = cycle_non_flow_counts(&h);
        with_cycles += !counts.is_empty() as usize;
        assert!(counts.iter().all(|&c| c >= 6), "{}", g.to_text());
    }
    assert!(with_cycles > 0);
    for inst in corpus(80, 2, 30, 700) {
        meet_or_join_is_trivial(&GaloisLattice::from_graph(&inst.graph).unwrap());
    }
}

#[test]
fn cut_vertices_are_singleton_shores() {
    for inst in corpus(150, 3, 30, 900) {
        let g = &inst.graph;
        let bicliques: BTreeSet<Biclique> = maximal_bicliques(g).unwrap().into_iter().collect();
        for v in g.vertices() {
            let cut = !g.without(&[v]).0.is_connected();
            let single = match v.side {
                Side::X => Biclique::new(vec![v.index], g.neighbors(v).to_vec()),
                Side::Y => Biclique::new(g.neighbors(v).to_vec(), vec![v.index]),
            };
            assert_eq!(cut, bicliques.contains(&single), "seed {} vertex {v}", inst.seed);
        }
    }
}

/// Position in `g_bicliques` of the biclique sharing the shore opposite to
/// `v` with each (relabeled) biclique of `g − v`.
fn embed(g_minus: &[Biclique], g_bicliques: &[Biclique], v: Vertex) -> Vec<usize> {
    g_minus
        .iter()
        .map(|b| {
            g_bicliques
                .iter()
                .position(|c| match v.side {
                    Side::X => c.y == b.y,
                    Side::Y => c.x == b.x,
                })
                .expect("every biclique of g - v extends to one of g")
        })
        .collect()
}

fn contracts_to(h: &HasseDigraph, image: &[usize], target: &BTreeSet<(usize, usize)>) -> bool {
    let rest: Vec<usize> = (0..h.nodes).filter(|u| !image.contains(u)).collect();
    let pos: HashMap<usize, usize> = image.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let induced: BTreeSet<(usize, usize)> = h
        .arcs
        .iter()
        .filter_map(|(a, b)| Some((*pos.get(a)?, *pos.get(b)?)))
        .collect();
    if induced == *target {
        return true;
    }
    let adj = h.undirected_adjacency();
    let mut choice = vec![0usize; rest.len()];
    if rest.iter().any(|&w| adj[w].is_empty()) {
        return false;
    }
    loop {
        let mut parent: Vec<usize> = (0..h.nodes).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                v = p[v];
            }
            v
        }
        for (k, &w) in rest.iter().enumerate() {
            let (a, b) = (find(&mut parent, w), find(&mut parent, adj[w][choice[k]]));
            if a != b {
                parent[a] = b;
            }
        }
        let mut class_rep: HashMap<usize, usize> = HashMap::new();
        let mut ok = true;
        for &u in image {
            if class_rep.insert(find(&mut parent, u), pos[&u]).is_some() {
                ok = false;
            }
        }
        if ok && rest.iter().all(|&w| class_rep.contains_key(&find(&mut parent, w))) {
            let contracted: BTreeSet<(usize, usize)> = h
                .arcs
                .iter()
                .map(|&(a, b)| (class_rep[&find(&mut parent, a)], class_rep[&find(&mut parent, b)]))
                .filter(|(a, b)| a != b)
                .collect();
            if contracted == *target {
                return true;
            }
        }
        let mut k = 0;
        while k < rest.len() {
            choice[k] += 1;
            if choice[k] < adj[rest[k]].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == rest.len() {
            return false;
        }
    }
}

#[test]
fn deletion_gives_subdigraph_or_contraction() {
    let mut checked = 0;
    for inst in corpus(80, 4, 18, 1_100) {
        let g = &inst.graph;
        let (lat, h) = hasse(g).unwrap();
        for v in g.vertices() {
            let (gm, map) = g.without(&[v]);
            if !gm.is_connected() {
                continue;
            }
            let back: HashMap<usize, usize> = map
                .iter()
                .filter(|(old, _)| old.side != v.side)
                .map(|(old, new)| (new.index, old.index))
                .collect();
            let back_same: HashMap<usize, usize> = map
                .iter()
                .filter(|(old, _)| old.side == v.side)
                .map(|(old, new)| (new.index, old.index))
                .collect();
            let (lat_m, h_m) = hasse(&gm).unwrap();
            // shores on the side of v are renumbered; lift them before comparing
            let lifted: Vec<Biclique> = lat_m
                .elements
                .iter()
                .map(|b| match v.side {
                    Side::X => Biclique::new(
                        b.x.iter().map(|i| back_same[i]).collect(),
                        b.y.iter().map(|i| back[i]).collect(),
                    ),
                    Side::Y => Biclique::new(
                        b.x.iter().map(|i| back[i]).collect(),
                        b.y.iter().map(|i| back_same[i]).collect(),
                    ),
                })
                .collect();
            let image = embed(&lifted, &lat.elements, v);
            let target: BTreeSet<(usize, usize)> = h_m.arcs.iter().copied().collect();
            assert!(contracts_to(&h, &image, &target), "seed {} vertex {v}", inst.seed);
            checked += 1;
        }
    }
    assert!(checked > 200);
}
