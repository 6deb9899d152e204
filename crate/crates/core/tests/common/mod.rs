#![allow(dead_code)]

use bdh_core::{generate_bdh, BipartiteGraph, GenOptions, PruningSequence};

pub struct Instance {
    pub graph: BipartiteGraph,
    pub seq: PruningSequence,
    pub n: usize,
    pub seed: u64,
    pub bias: f64,
}

const BIASES: [f64; 5] = [0.2, 0.35, 0.5, 0.65, 0.8];

/// `count` generated instances with `n` cycling through `n_min..=n_max`,
/// bias cycling through five values, and every other instance free of
/// universal vertices.
pub fn corpus(count: usize, n_min: usize, n_max: usize, seed_base: u64) -> Vec<Instance> {
    (0..count)
        .map(|i| {
            let n = n_min + i % (n_max - n_min + 1);
            let seed = seed_base + i as u64;
            let bias = BIASES[i % BIASES.len()];
            let mut opts = GenOptions::new(n, seed, bias);
            if i % 2 == 1 && n >= 6 {
                opts = opts.no_universal();
            }
            let (graph, seq) = generate_bdh(opts).expect("generator");
            Instance {
                graph,
                seq,
                n,
                seed,
                bias,
            }
        })
        .collect()
}

pub fn graph_of_rows(rows: &[u32], ny: usize) -> BipartiteGraph {
    let mut edges = Vec::new();
    for (x, &r) in rows.iter().enumerate() {
        for y in 0..ny {
            if r >> (ny - 1 - y) & 1 == 1 {
                edges.push((x, y));
            }
        }
    }
    BipartiteGraph::from_edges(rows.len(), ny, &edges)
}

/// Calls `f` on every `nx × ny` 0/1 matrix (rows as integers, column 0 in
/// the most significant of the `ny` bits) whose rows are non-decreasing and
/// whose columns, read from row 0 down, are non-decreasing too. Zero rows
/// and all-ones rows are skipped; columns are not filtered.
pub fn for_each_doubly_sorted(nx: usize, ny: usize, f: &mut dyn FnMut(&[u32])) {
    fn rec(nx: usize, ny: usize, rows: &mut Vec<u32>, eq: u32, f: &mut dyn FnMut(&[u32])) {
        if rows.len() == nx {
            f(rows);
            return;
        }
        let full = (1u32 << ny) - 1;
        let start = rows.last().copied().unwrap_or(1).max(1);
        for r in start..full {
            let shifted = r >> 1;
            if eq & shifted & !r != 0 {
                continue;
            }
            let next = eq & !(r & !shifted);
            rows.push(r);
            rec(nx, ny, rows, next, f);
            rows.pop();
        }
    }
    let pairs = if ny >= 2 { (1u32 << (ny - 1)) - 1 } else { 0 };
    rec(nx, ny, &mut Vec::with_capacity(nx), pairs, f);
}

/// Whether no column is empty or full.
pub fn columns_proper(rows: &[u32], ny: usize) -> bool {
    let any = rows.iter().fold(0, |a, &r| a | r);
    let all = rows.iter().fold(u32::MAX, |a, &r| a & r);
    let full = (1u32 << ny) - 1;
    any == full && all & full == 0
}

/// Smallest row-sorted form over all column permutations (and the
/// transpose when square).
pub fn canonical(rows: &[u32], ny: usize) -> Vec<u32> {
    let nx = rows.len();
    let mut best: Option<Vec<u32>> = None;
    let mut consider = |m: &[u32], cols: usize| {
        let mut perm: Vec<usize> = (0..cols).collect();
        loop {
            let mut form: Vec<u32> = m
                .iter()
                .map(|&r| {
                    perm.iter()
                        .enumerate()
                        .fold(0, |acc, (j, &p)| acc | ((r >> (cols - 1 - p) & 1) << (cols - 1 - j)))
                })
                .collect();
            form.sort_unstable();
            if best.as_ref().is_none_or(|b| form < *b) {
                best = Some(form);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    };
    consider(rows, ny);
    if nx == ny {
        let t: Vec<u32> = (0..ny)
            .map(|y| (0..nx).fold(0, |acc, x| acc | ((rows[x] >> (ny - 1 - y) & 1) << (nx - 1 - x))))
            .collect();
        consider(&t, nx);
    }
    best.unwrap()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Tiny deterministic generator for sampling subsets in tests.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    /// Random nonempty subset of `0..n` with at most `max` elements.
    pub fn subset(&mut self, n: usize, max: usize) -> Vec<usize> {
        let k = 1 + self.below(max.min(n));
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = i + self.below(n - i);
            pool.swap(i, j);
        }
        let mut s = pool[..k].to_vec();
        s.sort_unstable();
        s
    }
}
