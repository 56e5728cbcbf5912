#![allow(dead_code)]

use std::collections::BTreeMap;

use hypertree_core::{Hypergraph, IntPoly};
use num_bigint::BigInt;
use petgraph::graph::UnGraph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn p4() -> Hypergraph {
    Hypergraph::new(2, 4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap()
}

pub fn path3() -> Hypergraph {
    Hypergraph::new(3, 7, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 6]]).unwrap()
}

/// Grows a hypertree by hanging each new edge at a uniformly random vertex,
/// then shuffles vertex ids and edge order.
pub fn random_hypertree<R: Rng>(rng: &mut R, m: usize, r: usize) -> Hypergraph {
    let mut n = r;
    let mut edges = vec![(0..r).collect::<Vec<_>>()];
    for _ in 1..m {
        let v = rng.gen_range(0..n);
        let mut e = vec![v];
        e.extend(n..n + r - 1);
        n += r - 1;
        edges.push(e);
    }
    shuffle(rng, &Hypergraph::new(r, n, edges).unwrap())
}

/// Up to three random hypertrees plus a few isolated vertices, shuffled.
pub fn random_hyperforest<R: Rng>(rng: &mut R, r: usize, max_edges: usize) -> Hypergraph {
    let parts = rng.gen_range(1..=3);
    let mut h = Hypergraph::empty(r, rng.gen_range(0..3));
    for _ in 0..parts {
        let m = rng.gen_range(1..=max_edges.max(1));
        h = h.disjoint_union(&random_hypertree(rng, m, r)).unwrap();
    }
    shuffle(rng, &h)
}

pub fn shuffle<R: Rng>(rng: &mut R, h: &Hypergraph) -> Hypergraph {
    let mut perm: Vec<usize> = (0..h.n()).collect();
    perm.shuffle(rng);
    let mut order: Vec<usize> = (0..h.m()).collect();
    order.shuffle(rng);
    h.relabel(&perm, &order).unwrap()
}

/// Matching counts by plain backtracking over edges in index order.
pub fn oracle_counts(h: &Hypergraph) -> Vec<u64> {
    fn go(h: &Hypergraph, next: usize, used: &mut Vec<bool>, size: usize, counts: &mut Vec<u64>) {
        if counts.len() <= size {
            counts.resize(size + 1, 0);
        }
        counts[size] += 1;
        for e in next..h.m() {
            let edge = &h.edges()[e];
            if edge.iter().any(|&v| used[v]) {
                continue;
            }
            for &v in edge {
                used[v] = true;
            }
            go(h, e + 1, used, size + 1, counts);
            for &v in edge {
                used[v] = false;
            }
        }
    }
    let mut counts = Vec::new();
    go(h, 0, &mut vec![false; h.n()], 0, &mut counts);
    counts
}

/// `Σ (-1)^k m_k x^(n - kr)` from oracle counts.
pub fn oracle_phi(h: &Hypergraph) -> IntPoly {
    let counts = oracle_counts(h);
    IntPoly::from_terms(counts.iter().enumerate().map(|(k, &c)| {
        let c = BigInt::from(c);
        (h.n() - k * h.r(), if k % 2 == 0 { c } else { -c })
    }))
}

/// Bipartite incidence graph with node weight 0 for vertices, 1 for edges.
pub fn incidence_graph(h: &Hypergraph) -> UnGraph<u8, ()> {
    let mut g = UnGraph::new_undirected();
    let vs: Vec<_> = (0..h.n()).map(|_| g.add_node(0u8)).collect();
    for e in h.edges() {
        let node = g.add_node(1u8);
        for &v in e {
            g.add_edge(vs[v], node, ());
        }
    }
    g
}

pub fn petgraph_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.n() != b.n() || a.m() != b.m() || a.r() != b.r() {
        return false;
    }
    let (ga, gb) = (incidence_graph(a), incidence_graph(b));
    petgraph::algo::is_isomorphic_matching(&ga, &gb, |x, y| x == y, |_, _| true)
}

fn degree_key(h: &Hypergraph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..h.n()).map(|v| h.degree(v).unwrap()).collect();
    d.sort_unstable();
    d
}

/// Reduces a list of hypergraphs to isomorphism-class representatives using
/// petgraph, bucketing by degree sequence first.
pub fn classes_by_petgraph<I: IntoIterator<Item = Hypergraph>>(items: I) -> Vec<Hypergraph> {
    let mut buckets: BTreeMap<Vec<usize>, Vec<Hypergraph>> = BTreeMap::new();
    for h in items {
        let bucket = buckets.entry(degree_key(&h)).or_default();
        if !bucket.iter().any(|g| petgraph_isomorphic(g, &h)) {
            bucket.push(h);
        }
    }
    buckets.into_values().flatten().collect()
}

/// Unlabeled trees with `m` edges, from all Prüfer sequences on `m + 1` labels.
pub fn prufer_tree_classes(m: usize) -> Vec<Hypergraph> {
    let n = m + 1;
    if n == 2 {
        return vec![Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap()];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let trees = (0..total).map(|mut code| {
        let mut seq = Vec::with_capacity(len);
        for _ in 0..len {
            seq.push(code % n);
            code /= n;
        }
        decode_prufer(&seq, n)
    });
    classes_by_petgraph(trees)
}

fn decode_prufer(seq: &[usize], n: usize) -> Hypergraph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push(vec![leaf, s]);
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push(rest);
    Hypergraph::new(2, n, edges).unwrap()
}

fn is_linear_hypertree(r: usize, n: usize, edges: &[Vec<usize>]) -> bool {
    match Hypergraph::new(r, n, edges.to_vec()) {
        Ok(h) => h.is_hypertree(),
        Err(_) => false,
    }
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Every labeled hypertree with `m` edges on `m(r-1)+1` vertices, found by
/// choosing `m` of the possible `r`-sets with pruning on pairwise intersections.
pub fn labeled_hypertrees(m: usize, r: usize) -> Vec<Hypergraph> {
    let n = m * (r - 1) + 1;
    let all = k_subsets(n, r);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn meet(a: &[usize], b: &[usize]) -> usize {
        a.iter().filter(|v| b.contains(v)).count()
    }
    fn go(
        all: &[Vec<usize>],
        start: usize,
        m: usize,
        r: usize,
        n: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Hypergraph>,
    ) {
        if chosen.len() == m {
            let edges: Vec<Vec<usize>> = chosen.iter().map(|&i| all[i].clone()).collect();
            if is_linear_hypertree(r, n, &edges) {
                out.push(Hypergraph::new(r, n, edges).unwrap());
            }
            return;
        }
        for i in start..all.len() {
            if chosen.iter().any(|&j| meet(&all[i], &all[j]) > 1) {
                continue;
            }
            chosen.push(i);
            go(all, i + 1, m, r, n, chosen, out);
            chosen.pop();
        }
    }
    go(&all, 0, m, r, n, &mut chosen, &mut out);
    out
}

/// Every hypertree reachable by hanging edges one at a time at any vertex,
/// with no deduplication at all.
pub fn all_growth_sequences(m: usize, r: usize) -> Vec<Hypergraph> {
    let mut level = vec![Hypergraph::new(r, r, vec![(0..r).collect()]).unwrap()];
    for _ in 1..m {
        let mut next = Vec::new();
        for h in &level {
            for v in 0..h.n() {
                let mut edges = h.edges().to_vec();
                let mut e = vec![v];
                e.extend(h.n()..h.n() + r - 1);
                edges.push(e);
                next.push(Hypergraph::new(r, h.n() + r - 1, edges).unwrap());
            }
        }
        level = next;
    }
    level
}

/// Is `pi` non-increasing, bounded by `cap`?
pub fn in_family(pi: &[usize], cap: usize) -> bool {
    pi.windows(2).all(|w| w[0] >= w[1]) && pi.iter().all(|&x| x <= cap)
}

/// Prefix-sum dominance with equal totals, written independently of the crate.
pub fn dominated(pi: &[usize], pi_prime: &[usize]) -> bool {
    let mut acc: i64 = 0;
    for (a, b) in pi.iter().zip(pi_prime) {
        acc += *b as i64 - *a as i64;
        if acc < 0 {
            return false;
        }
    }
    acc == 0
}

/// A random vector of `A^c_{a,b}` and a random vector majorized by it, made by
/// moving single units to later positions.
pub fn random_majorized_pair<R: Rng>(rng: &mut R, b: usize, c: usize) -> (Vec<usize>, Vec<usize>) {
    let mut top: Vec<usize> = (0..b).map(|_| rng.gen_range(0..=c)).collect();
    top.sort_unstable_by(|x, y| y.cmp(x));
    let mut low = top.clone();
    if b < 2 {
        return (low, top);
    }
    for _ in 0..rng.gen_range(0..3 * b * c + 1) {
        let i = rng.gen_range(0..b - 1);
        let j = rng.gen_range(i + 1..b);
        if low[i] == 0 {
            continue;
        }
        let mut t = low.clone();
        t[i] -= 1;
        t[j] += 1;
        if in_family(&t, c) {
            low = t;
        }
    }
    (low, top)
}
