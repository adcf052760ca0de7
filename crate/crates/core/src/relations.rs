//! The Θ and τ edge relations and their joint transitive closure.
//!
//! On a connected graph the closure `(Θ ∪ τ)*` is the finest product
//! relation: its classes are the color classes of the prime factorization,
//! so a graph is prime exactly when there is one class.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{
    all_pairs_distances_with, cartesian_product, layer_split, DistanceTable, Edge, Graph,
};
use crate::union_find::UnionFind;

/// Graphs above this order are refused rather than paying for a dense
/// `|V|²` distance table and `|E|²` pair tests.
pub const RELATION_VERTEX_LIMIT: usize = 2000;

/// A partition of a graph's edge indices. Class ids are dense and numbered
/// by each class's smallest edge index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePartition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl EdgePartition {
    fn from_union_find(mut uf: UnionFind) -> Self {
        let (class_of, count) = uf.canonical_ids();
        let mut classes = vec![Vec::new(); count];
        for (edge, &c) in class_of.iter().enumerate() {
            classes[c].push(edge);
        }
        EdgePartition { class_of, classes }
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Class id of edge index `edge`.
    pub fn class_of(&self, edge: usize) -> usize {
        self.class_of[edge]
    }

    /// Edge indices of each class, ascending.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }
}

/// `e = ab` and `f = xy` are Θ-related iff `d(a,x) + d(b,y) ≠ d(a,y) + d(b,x)`.
pub fn theta_test(d: &DistanceTable, e: Edge, f: Edge) -> Result<bool> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(theta_unchecked(d, e, f))
}

#[inline]
fn theta_unchecked(d: &DistanceTable, e: Edge, f: Edge) -> bool {
    d.raw(e.u, f.u) + d.raw(e.v, f.v) != d.raw(e.u, f.v) + d.raw(e.v, f.u)
}

/// `e = uv` and `f = uw` are τ-related iff `u` is the unique common
/// neighbor of `v` and `w`. Equal or disjoint edges are never related.
pub fn tau_test(g: &Graph, e: Edge, f: Edge) -> bool {
    if e == f {
        return false;
    }
    let shared = [e.u, e.v].into_iter().find(|&x| f.contains(x));
    match shared {
        Some(u) => unique_common_neighbor(g, e.other(u), f.other(u)) == Some(u),
        None => false,
    }
}

/// The common neighbor of `v` and `w`, if there is exactly one.
fn unique_common_neighbor(g: &Graph, v: usize, w: usize) -> Option<usize> {
    let (a, b) = (g.neighbors(v), g.neighbors(w));
    let (mut i, mut j) = (0, 0);
    let mut found = None;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if found.is_some() {
                    return None;
                }
                found = Some(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    found
}

/// All τ-related pairs as `(shared vertex, edge index, edge index)`, found by
/// scanning the edge pairs around each vertex.
pub fn tau_pairs(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        let nbrs = g.neighbors(u);
        for (k, &v) in nbrs.iter().enumerate() {
            for &w in &nbrs[k + 1..] {
                if unique_common_neighbor(g, v, w) == Some(u) {
                    let e = g.edge_index(u, v).unwrap();
                    let f = g.edge_index(u, w).unwrap();
                    out.push((u, e.min(f), e.max(f)));
                }
            }
        }
    }
    out
}

fn check_relation_input(g: &Graph) -> Result<()> {
    if g.vertex_count() > RELATION_VERTEX_LIMIT {
        return Err(Error::TooLargeForRelations(g.vertex_count()));
    }
    Ok(())
}

fn connected_distances(g: &Graph, exec: Exec) -> Result<DistanceTable> {
    check_relation_input(g)?;
    let d = all_pairs_distances_with(g, exec);
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(d)
}

pub fn sigma_classes(g: &Graph) -> Result<EdgePartition> {
    sigma_classes_with(g, Exec::default())
}

/// Classes of `(Θ ∪ τ)*`. Θ pairs are tested per edge in parallel against
/// the precomputed distance table; merging is sequential.
pub fn sigma_classes_with(g: &Graph, exec: Exec) -> Result<EdgePartition> {
    let d = connected_distances(g, exec)?;
    let edges = g.edges();
    let theta: Vec<Vec<usize>> = exec.map(edges.len(), |a| {
        (a + 1..edges.len())
            .filter(|&b| theta_unchecked(&d, edges[a], edges[b]))
            .collect()
    });
    let mut uf = UnionFind::new(edges.len());
    for (a, related) in theta.into_iter().enumerate() {
        for b in related {
            uf.union(a, b);
        }
    }
    for (_, e, f) in tau_pairs(g) {
        uf.union(e, f);
    }
    Ok(EdgePartition::from_union_find(uf))
}

/// True iff `g` has a single `(Θ ∪ τ)*` class.
pub fn is_prime(g: &Graph) -> Result<bool> {
    is_prime_with(g, Exec::default())
}

pub fn is_prime_with(g: &Graph, exec: Exec) -> Result<bool> {
    if g.vertex_count() < 2 {
        return Err(Error::Trivial);
    }
    Ok(sigma_classes_with(g, exec)?.class_count() == 1)
}

/// A pair of edges that should have been Θ-related but was not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Coordinate `i` for cube cuts, product color for products.
    pub tag: usize,
    pub e: Edge,
    pub f: Edge,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.tag, self.e, self.f)
    }
}

/// One violation per line; empty when everything passed.
pub fn format_violations(violations: &[Violation]) -> String {
    violations.iter().map(|v| format!("{v}\n")).collect()
}

fn theta_violations(d: &DistanceTable, tag: usize, edges: &[Edge]) -> Vec<Violation> {
    let mut out = Vec::new();
    for (k, &e) in edges.iter().enumerate() {
        for &f in &edges[k..] {
            if !theta_unchecked(d, e, f) {
                out.push(Violation { tag, e, f });
            }
        }
    }
    out
}

/// For every coordinate `i`, every pair of edges in the cut `E_i` (each edge
/// with itself included) must be Θ-related. Returns the pairs that are not.
pub fn coordinate_theta_suite(g: &Graph) -> Result<Vec<Violation>> {
    coordinate_theta_suite_with(g, Exec::default())
}

pub fn coordinate_theta_suite_with(g: &Graph, exec: Exec) -> Result<Vec<Violation>> {
    let n = g
        .labels()
        .ok_or(Error::Unlabeled)?
        .first()
        .map_or(0, |w| w.len());
    let d = connected_distances(g, exec)?;
    let cuts = (1..=n)
        .map(|i| layer_split(g, i).map(|s| s.cut))
        .collect::<Result<Vec<_>>>()?;
    let per_coordinate = exec.map(n, |k| theta_violations(&d, k + 1, &cuts[k]));
    Ok(per_coordinate.into_iter().flatten().collect())
}

/// The coordinate relation `i ∼ j`: some edge of `E_i` is τ-related to some
/// edge of `E_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordRelation {
    pub n: usize,
    /// Related pairs `(i, j)` with `i < j`, 1-based.
    pub pairs: BTreeSet<(usize, usize)>,
    /// Classes of the transitive closure, each ascending, ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
}

impl CoordRelation {
    pub fn related(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i.min(j), i.max(j)))
    }

    /// True iff the closure is all of `[n] × [n]`.
    pub fn is_total(&self) -> bool {
        self.classes.len() <= 1
    }
}

pub fn tilde_relation(g: &Graph) -> Result<CoordRelation> {
    let labels = g.labels().ok_or(Error::Unlabeled)?;
    let n = labels.first().map_or(0, |w| w.len());
    let coordinate = |e: Edge| {
        let diff = labels[e.u].bits() ^ labels[e.v].bits();
        // position 1 is the most significant of the n bits
        n - diff.trailing_zeros() as usize
    };
    let edges = g.edges();
    let mut pairs = BTreeSet::new();
    let mut uf = UnionFind::new(n);
    for (_, e, f) in tau_pairs(g) {
        let (i, j) = (coordinate(edges[e]), coordinate(edges[f]));
        pairs.insert((i.min(j), i.max(j)));
        uf.union(i - 1, j - 1);
    }
    let (ids, count) = uf.canonical_ids();
    let mut classes = vec![Vec::new(); count];
    for (k, c) in ids.into_iter().enumerate() {
        classes[c].push(k + 1);
    }
    Ok(CoordRelation { n, pairs, classes })
}

/// In `G □ H`, every two edges of the same color projecting onto the same
/// factor edge must be Θ-related. Returns the pairs that are not.
pub fn product_theta_suite(g: &Graph, h: &Graph) -> Result<Vec<Violation>> {
    let product = cartesian_product(g, h);
    let d = connected_distances(&product.graph, Exec::default())?;
    let mut groups: Vec<((usize, Edge), Vec<Edge>)> = Vec::new();
    let mut sorted: Vec<(usize, Edge, Edge)> = product
        .edge_origins
        .iter()
        .zip(product.graph.edges())
        .map(|(o, e)| (o.color, o.factor_edge, *e))
        .collect();
    sorted.sort_unstable();
    for (color, factor_edge, e) in sorted {
        match groups.last_mut() {
            Some((key, list)) if *key == (color, factor_edge) => list.push(e),
            _ => groups.push(((color, factor_edge), vec![e])),
        }
    }
    Ok(groups
        .iter()
        .flat_map(|((color, _), edges)| theta_violations(&d, *color, edges))
        .collect())
}
