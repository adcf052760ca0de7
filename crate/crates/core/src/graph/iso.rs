//! Exact isomorphism for small graphs by backtracking.
//!
//! Vertices are first classified by an invariant (degree, distance profile,
//! sorted neighbor degrees); candidates are only tried within a class, and
//! every partial map is checked against all previously mapped vertices
//! using 64-bit adjacency rows.

use std::collections::HashMap;

use super::distance::{bfs, UNREACHABLE};
use super::Graph;
use crate::error::{Error, Result};

pub const ISO_VERTEX_LIMIT: usize = 64;

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

/// An adjacency-preserving bijection `map[v_g] = v_h`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    for x in [g, h] {
        if x.vertex_count() > ISO_VERTEX_LIMIT {
            return Err(Error::TooLargeForIsomorphism(x.vertex_count()));
        }
    }
    let n = g.vertex_count();
    if n != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }

    let inv_g = invariants(g);
    let inv_h = invariants(h);
    let mut sorted_g = inv_g.clone();
    let mut sorted_h = inv_h.clone();
    sorted_g.sort();
    sorted_h.sort();
    if sorted_g != sorted_h {
        return Ok(None);
    }

    let mut class_of: HashMap<&Invariant, usize> = HashMap::new();
    for inv in &inv_g {
        let next = class_of.len();
        class_of.entry(inv).or_insert(next);
    }
    let mut candidates: Vec<Vec<usize>> = vec![Vec::new(); class_of.len()];
    for (v, inv) in inv_h.iter().enumerate() {
        candidates[class_of[inv]].push(v);
    }
    let class_g: Vec<usize> = inv_g.iter().map(|inv| class_of[inv]).collect();

    let order = search_order(g, &class_g, &candidates);
    let search = Search {
        adj_g: bit_rows(g),
        adj_h: bit_rows(h),
        order,
        class_g,
        candidates,
    };
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    Ok(search.extend(0, &mut map, &mut used).then_some(map))
}

/// Checks that `map` is a bijection `V(G) → V(H)` preserving adjacency both ways.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || map.len() != n || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut hit = vec![false; n];
    for &x in map {
        if x >= n || std::mem::replace(&mut hit[x], true) {
            return false;
        }
    }
    // injective on edges with equal edge counts, hence onto
    g.edges().iter().all(|e| h.has_edge(map[e.u], map[e.v]))
}

type Invariant = (usize, Vec<usize>, Vec<usize>);

fn invariants(g: &Graph) -> Vec<Invariant> {
    let n = g.vertex_count();
    (0..n)
        .map(|v| {
            // histogram of distances; the last slot counts unreachable vertices
            let mut profile = vec![0usize; n + 1];
            for d in bfs(g, v) {
                let slot = if d == UNREACHABLE { n } else { d as usize };
                profile[slot] += 1;
            }
            let mut nbr_degrees: Vec<usize> = g.neighbors(v).iter().map(|&u| g.degree(u)).collect();
            nbr_degrees.sort_unstable();
            (g.degree(v), profile, nbr_degrees)
        })
        .collect()
}

fn bit_rows(g: &Graph) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &u| acc | 1 << u))
        .collect()
}

/// Rarest class first, then repeatedly the vertex with the most already
/// ordered neighbors, so adjacency checks prune early.
fn search_order(g: &Graph, class_g: &[usize], candidates: &[Vec<usize>]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                (
                    links[v],
                    std::cmp::Reverse(candidates[class_g[v]].len()),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
        for &u in g.neighbors(next) {
            links[u] += 1;
        }
    }
    order
}

struct Search {
    adj_g: Vec<u64>,
    adj_h: Vec<u64>,
    order: Vec<usize>,
    class_g: Vec<usize>,
    candidates: Vec<Vec<usize>>,
}

impl Search {
    fn extend(&self, depth: usize, map: &mut [usize], used: &mut u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        'candidate: for &c in &self.candidates[self.class_g[v]] {
            if *used >> c & 1 == 1 {
                continue;
            }
            for &w in &self.order[..depth] {
                let in_g = self.adj_g[v] >> w & 1 == 1;
                let in_h = self.adj_h[c] >> map[w] & 1 == 1;
                if in_g != in_h {
                    continue 'candidate;
                }
            }
            map[v] = c;
            *used |= 1 << c;
            if self.extend(depth + 1, map, used) {
                return true;
            }
            *used &= !(1 << c);
            map[v] = usize::MAX;
        }
        false
    }
}
