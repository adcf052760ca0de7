//! Simple undirected graphs, cubes as induced subgraphs of `Q_n`, and the
//! coordinate layers `E_i`, `V_i^0`, `V_i^1`.

mod distance;
mod io;
mod iso;
mod recognize;

use std::fmt;

pub use distance::{
    all_pairs_distances, all_pairs_distances_with, bfs, is_connected, DistanceTable,
};
pub use io::{parse_edge_list, to_dot, to_edge_list};
pub use iso::{find_isomorphism, is_isomorphic, is_isomorphism, ISO_VERTEX_LIMIT};
pub use recognize::{recognize_hypercube, recognize_star};

use crate::error::{Error, Result};
use crate::words::{enumerate_words, CubeParams, Word};

/// An undirected edge stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Immutable simple graph on vertices `0..vertex_count`.
///
/// Neighbor lists are sorted and the edge list is sorted by `(u, v)`; an
/// edge's position in that list is its canonical edge index. When the graph
/// was built from a word family, `labels[i]` is the `i`-th word in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    labels: Option<Vec<Word>>,
    origin: Option<CubeParams>,
}

impl Graph {
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b || a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidEdge(a, b));
            }
            list.push(Edge::new(a, b));
        }
        list.sort_unstable();
        if let Some(dup) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge(dup[0].u, dup[0].v));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for e in &list {
            adjacency[e.u].push(e.v);
            adjacency[e.v].push(e.u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            edges: list,
            labels: None,
            origin: None,
        })
    }

    /// Attaches word labels; they must be strictly ascending and of equal length.
    pub fn with_labels(mut self, labels: Vec<Word>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::InvalidParams(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        if let Some(first) = labels.first() {
            if labels.iter().any(|w| w.len() != first.len()) {
                return Err(Error::InvalidParams("labels of unequal length".into()));
            }
        }
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParams(
                "labels must be strictly ascending".into(),
            ));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn empty() -> Self {
        Graph::from_edges(0, []).unwrap()
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).unwrap()
    }

    /// `P_k`: the path on `k` vertices.
    pub fn path(k: usize) -> Self {
        Graph::from_edges(k, (1..k).map(|v| (v - 1, v))).unwrap()
    }

    /// `C_k` for `k ≥ 3`.
    pub fn cycle(k: usize) -> Self {
        assert!(k >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(k, (0..k).map(|v| (v, (v + 1) % k))).unwrap()
    }

    /// `K_{1,k}` with the center at vertex 0.
    pub fn star(k: usize) -> Self {
        Graph::from_edges(k + 1, (1..=k).map(|v| (0, v))).unwrap()
    }

    /// `Q_n` with vertex `i` labeled by the `n`-bit word of `i`.
    pub fn hypercube(n: usize) -> Self {
        let params = CubeParams::o(1, n.max(1), n).expect("hypercube dimension above 64");
        build_cube(params)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.vertex_count() && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&Edge::new(a, b)).ok()
    }

    pub fn labels(&self) -> Option<&[Word]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<Word> {
        self.labels.as_ref().map(|l| l[v])
    }

    /// Vertex carrying `word`, if the graph is labeled and has one.
    pub fn vertex_of(&self, word: &Word) -> Option<usize> {
        self.labels.as_ref()?.binary_search(word).ok()
    }

    /// Cube parameters when the graph came from [`build_cube`] or a cube file.
    pub fn origin(&self) -> Option<CubeParams> {
        self.origin
    }

    /// Degrees sorted in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// Subgraph induced on `vertices`; vertex `k` of the result is
    /// `vertices[k]` after sorting. Labels carry over, origin does not.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (k, &v) in keep.iter().enumerate() {
            index[v] = k;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| (index[e.u], index[e.v]));
        let mut sub = Graph::from_edges(keep.len(), edges).unwrap();
        sub.labels = self
            .labels
            .as_ref()
            .map(|l| keep.iter().map(|&v| l[v]).collect());
        sub
    }

    /// Spanning subgraph keeping only the edges for which `keep` holds.
    pub fn spanning_subgraph<F>(&self, mut keep: F) -> Graph
    where
        F: FnMut(usize, &Edge) -> bool,
    {
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, e)| keep(*i, e))
            .map(|(_, e)| (e.u, e.v))
            .collect();
        Graph::from_edges(self.vertex_count(), edges).unwrap()
    }
}

/// Hamming distance between equal-length words.
pub fn hamming(a: &Word, b: &Word) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok((a.bits() ^ b.bits()).count_ones() as usize)
}

/// The cube of `params`: its words in lexicographic order, adjacent when
/// they differ in exactly one position.
pub fn build_cube(params: CubeParams) -> Graph {
    let words = enumerate_words(params);
    let mut edges = Vec::new();
    for (u, w) in words.iter().enumerate() {
        for i in 1..=params.n {
            let x = w.flip(i).expect("position within word");
            if x > *w {
                if let Ok(v) = words.binary_search(&x) {
                    edges.push((u, v));
                }
            }
        }
    }
    let mut g = Graph::from_edges(words.len(), edges)
        .expect("flip neighbors form a simple graph")
        .with_labels(words)
        .expect("enumeration is sorted");
    g.origin = Some(params);
    g
}

/// Factor of origin for one edge of a Cartesian product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductEdge {
    /// 0 for the left factor, 1 for the right.
    pub color: usize,
    /// The factor edge this product edge projects onto.
    pub factor_edge: Edge,
}

/// `G □ H` together with the product color of every edge.
#[derive(Clone, Debug)]
pub struct Product {
    pub graph: Graph,
    /// Indexed like `graph.edges()`.
    pub edge_origins: Vec<ProductEdge>,
}

/// Cartesian product; vertex `(g, h)` gets index `g·|V(H)| + h`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Product {
    let nh = h.vertex_count();
    let mut edges = Vec::with_capacity(g.edge_count() * nh + h.edge_count() * g.vertex_count());
    let mut origins = Vec::with_capacity(edges.capacity());
    for e in g.edges() {
        for y in 0..nh {
            edges.push((e.u * nh + y, e.v * nh + y));
            origins.push(ProductEdge {
                color: 0,
                factor_edge: *e,
            });
        }
    }
    for x in 0..g.vertex_count() {
        for e in h.edges() {
            edges.push((x * nh + e.u, x * nh + e.v));
            origins.push(ProductEdge {
                color: 1,
                factor_edge: *e,
            });
        }
    }
    let graph = Graph::from_edges(g.vertex_count() * nh, edges.iter().copied())
        .expect("product of simple graphs is simple");
    let mut edge_origins = vec![origins[0]; origins.len()];
    for ((a, b), origin) in edges.into_iter().zip(origins) {
        let idx = graph.edge_index(a, b).unwrap();
        edge_origins[idx] = origin;
    }
    Product {
        graph,
        edge_origins,
    }
}

/// Left-nested product `((G₁ □ G₂) □ G₃) □ …`; the empty product is `K₁`.
pub fn cartesian_product_all(factors: &[Graph]) -> Graph {
    factors.iter().fold(Graph::complete(1), |acc, f| {
        cartesian_product(&acc, f).graph
    })
}

/// The coordinate cut `E_i` of a labeled graph and its two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerSplit {
    pub coordinate: usize,
    /// Endpoints with bit `i` equal to 0, ascending.
    pub v0: Vec<usize>,
    /// Endpoints with bit `i` equal to 1, ascending.
    pub v1: Vec<usize>,
    pub cut: Vec<Edge>,
}

/// The cut `E_i` of edges flipping coordinate `i` and its sides `V_i^0`,
/// `V_i^1`. A coordinate with no edges gives three empty sets.
pub fn layer_split(g: &Graph, i: usize) -> Result<LayerSplit> {
    let labels = g.labels().ok_or(Error::Unlabeled)?;
    let n = labels.first().map_or(0, Word::len);
    if i == 0 || i > n {
        return Err(Error::IndexOutOfBounds { index: i, len: n });
    }
    let mut v0 = Vec::new();
    let mut v1 = Vec::new();
    let mut cut = Vec::new();
    for e in g.edges() {
        let (a, b) = (labels[e.u], labels[e.v]);
        if a.flip(i)? == b {
            cut.push(*e);
            // labels ascend with the index, and bit i is the only difference
            v0.push(e.u);
            v1.push(e.v);
        }
    }
    v0.sort_unstable();
    v1.sort_unstable();
    Ok(LayerSplit {
        coordinate: i,
        v0,
        v1,
        cut,
    })
}
