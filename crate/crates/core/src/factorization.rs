//! Prime factorization with respect to the Cartesian product.
//!
//! Factors are read off the `(Θ ∪ τ)*` classes: the factor of class `c` is
//! the `c`-layer through the base vertex, and a vertex's `c`-coordinate is
//! the base-layer vertex in its component of `G` with the class-`c` edges
//! removed. The result is always re-verified against `G`.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{
    build_cube, find_isomorphism, is_isomorphic, to_edge_list, Graph, ISO_VERTEX_LIMIT,
};
use crate::relations::{is_prime_with, sigma_classes_with, EdgePartition};
use crate::union_find::UnionFind;
use crate::words::{count_words, enumerate_words, CubeParams, Family};

/// A product representation `G ≅ F_1 □ … □ F_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<Graph>,
    /// `coordinates[v][c]` is the vertex of `factors[c]` that `v` projects to.
    pub coordinates: Vec<Vec<usize>>,
    pub base: usize,
}

impl Factorization {
    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1
    }
}

impl fmt::Display for Factorization {
    /// `factors=<k>`, each factor as an edge list, then one
    /// `vertex (c1,…,ck)` line per vertex.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "factors={}", self.factors.len())?;
        for factor in &self.factors {
            f.write_str(&to_edge_list(factor))?;
        }
        for tuple in &self.coordinates {
            let joined: Vec<String> = tuple.iter().map(usize::to_string).collect();
            writeln!(f, "vertex ({})", joined.join(","))?;
        }
        Ok(())
    }
}

pub fn factorize(g: &Graph) -> Result<Factorization> {
    factorize_with(g, Exec::default())
}

struct Layer {
    factor: Graph,
    coordinate: Vec<usize>,
    smallest_edge: usize,
}

pub fn factorize_with(g: &Graph, exec: Exec) -> Result<Factorization> {
    if g.vertex_count() < 2 {
        return Err(Error::Trivial);
    }
    let sigma = sigma_classes_with(g, exec)?;
    let base = 0;
    let mut layers = exec
        .map(sigma.class_count(), |c| extract_layer(g, &sigma, c, base))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    layers.sort_by_cached_key(|l| {
        (
            l.factor.vertex_count(),
            l.factor.edge_count(),
            l.factor.degree_sequence(),
            l.smallest_edge,
        )
    });
    let coordinates = (0..g.vertex_count())
        .map(|v| layers.iter().map(|l| l.coordinate[v]).collect())
        .collect();
    let result = Factorization {
        factors: layers.into_iter().map(|l| l.factor).collect(),
        coordinates,
        base,
    };
    if !verify_factorization(g, &result) {
        return Err(Error::NotProductColoring);
    }
    Ok(result)
}

fn extract_layer(g: &Graph, sigma: &EdgePartition, class: usize, base: usize) -> Result<Layer> {
    let edges = g.edges();
    let in_class = |k: usize| sigma.class_of(k) == class;

    // base c-layer
    let mut in_layer = vec![false; g.vertex_count()];
    in_layer[base] = true;
    let mut stack = vec![base];
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if !in_layer[y] && in_class(g.edge_index(x, y).unwrap()) {
                in_layer[y] = true;
                stack.push(y);
            }
        }
    }
    let layer: Vec<usize> = (0..g.vertex_count()).filter(|&v| in_layer[v]).collect();
    // every class has an edge at every vertex of a connected product
    if layer.len() < 2 {
        return Err(Error::NotProductColoring);
    }
    let mut position = vec![usize::MAX; g.vertex_count()];
    for (k, &v) in layer.iter().enumerate() {
        position[v] = k;
    }
    let factor_edges = edges
        .iter()
        .enumerate()
        .filter(|&(k, e)| in_class(k) && in_layer[e.u])
        .map(|(_, e)| (position[e.u], position[e.v]));
    let factor = Graph::from_edges(layer.len(), factor_edges)?;

    // components of G without class-c edges
    let mut uf = UnionFind::new(g.vertex_count());
    for (k, e) in edges.iter().enumerate() {
        if !in_class(k) {
            uf.union(e.u, e.v);
        }
    }
    let mut layer_vertex_of_root = vec![usize::MAX; g.vertex_count()];
    for (k, &v) in layer.iter().enumerate() {
        let root = uf.find(v);
        if layer_vertex_of_root[root] != usize::MAX {
            return Err(Error::NotProductColoring);
        }
        layer_vertex_of_root[root] = k;
    }
    let coordinate = (0..g.vertex_count())
        .map(|v| match layer_vertex_of_root[uf.find(v)] {
            usize::MAX => Err(Error::NotProductColoring),
            k => Ok(k),
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(Layer {
        factor,
        coordinate,
        smallest_edge: sigma.classes()[class][0],
    })
}

/// Checks that the factor orders multiply to `|V(G)|`, that the coordinate
/// map is a bijection onto the product of the factor vertex sets, and that
/// `uv ∈ E(G)` iff the coordinates of `u` and `v` differ in exactly one
/// position `c` along an edge of factor `c`.
pub fn verify_factorization(g: &Graph, f: &Factorization) -> bool {
    let n = g.vertex_count();
    let k = f.factors.len();
    if f.factors.iter().any(|x| x.vertex_count() < 2)
        || f.coordinates.len() != n
        || f.base >= n.max(1)
    {
        return false;
    }
    let order = f
        .factors
        .iter()
        .try_fold(1usize, |acc, x| acc.checked_mul(x.vertex_count()));
    if order != Some(n) {
        return false;
    }

    let mut hit = vec![false; n];
    for tuple in &f.coordinates {
        if tuple.len() != k {
            return false;
        }
        let mut code = 0;
        for (c, &x) in tuple.iter().enumerate() {
            let size = f.factors[c].vertex_count();
            if x >= size {
                return false;
            }
            code = code * size + x;
        }
        if std::mem::replace(&mut hit[code], true) {
            return false;
        }
    }

    for e in g.edges() {
        let (a, b) = (&f.coordinates[e.u], &f.coordinates[e.v]);
        let mut diff = (0..k).filter(|&c| a[c] != b[c]);
        match (diff.next(), diff.next()) {
            (Some(c), None) if f.factors[c].has_edge(a[c], b[c]) => {}
            _ => return false,
        }
    }
    // the edge map is injective, so equal counts make it onto
    let product_edges: usize = f
        .factors
        .iter()
        .map(|x| x.edge_count() * (n / x.vertex_count()))
        .sum();
    product_edges == g.edge_count()
}

/// True iff the two factor lists are equal as multisets up to isomorphism.
pub fn same_factor_multiset(a: &[Graph], b: &[Graph]) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut used = vec![false; b.len()];
    'outer: for x in a {
        for (k, y) in b.iter().enumerate() {
            if !used[k] && is_isomorphic(x, y)? {
                used[k] = true;
                continue 'outer;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// One cell of the O-cube primality grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridCell {
    pub params: CubeParams,
    pub vertices: u128,
    pub outcome: CellOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellOutcome {
    /// Over the vertex cap.
    Skipped,
    Evaluated {
        expected_prime: bool,
        prime: bool,
        /// For composite cells: `None` when the factors are `n` copies of
        /// `K₂`, otherwise a description of what came out.
        factor_problem: Option<String>,
    },
    Failed(Error),
}

impl GridCell {
    pub fn passed(&self) -> bool {
        match &self.outcome {
            CellOutcome::Skipped => true,
            CellOutcome::Evaluated {
                expected_prime,
                prime,
                factor_problem,
            } => expected_prime == prime && factor_problem.is_none(),
            CellOutcome::Failed(_) => false,
        }
    }
}

/// The primality predicate for O-cubes: composite iff `p = 1` and `2 ≤ n ≤ r`.
pub fn expected_o_cube_prime(p: usize, r: usize, n: usize) -> bool {
    !(p == 1 && 2 <= n && n <= r)
}

/// Cells for `p ≤ p_max`, `n ∈ 1..=n_max`, `r ∈ {1..=r_max} ∪ {n}`,
/// ordered by `(p, n, r)`.
pub fn grid_params(p_max: usize, r_max: usize, n_max: usize) -> Vec<CubeParams> {
    let mut cells = Vec::new();
    for p in 1..=p_max {
        for n in 1..=n_max {
            let mut rs: Vec<usize> = (1..=r_max).collect();
            if n > r_max {
                rs.push(n);
            }
            for r in rs {
                cells.push(CubeParams::o(p, r, n).expect("grid parameters are positive"));
            }
        }
    }
    cells
}

pub fn theorem_grid(p_max: usize, r_max: usize, n_max: usize, vertex_cap: usize) -> Vec<GridCell> {
    theorem_grid_with(p_max, r_max, n_max, vertex_cap, Exec::default())
}

/// Primality of every O-cube in the grid against [`expected_o_cube_prime`];
/// composite cells must also factor into exactly `n` copies of `K₂`.
pub fn theorem_grid_with(
    p_max: usize,
    r_max: usize,
    n_max: usize,
    vertex_cap: usize,
    exec: Exec,
) -> Vec<GridCell> {
    let cells = grid_params(p_max, r_max, n_max);
    // cells run in parallel, each one sequentially inside
    exec.map_slice(&cells, |&params| {
        let vertices = count_words(params);
        let outcome = if vertices > vertex_cap as u128 {
            CellOutcome::Skipped
        } else {
            evaluate_cell(params)
        };
        GridCell {
            params,
            vertices,
            outcome,
        }
    })
}

fn evaluate_cell(params: CubeParams) -> CellOutcome {
    let g = build_cube(params);
    let expected_prime = expected_o_cube_prime(params.p, params.r, params.n);
    let prime = match is_prime_with(&g, Exec::Sequential) {
        Ok(prime) => prime,
        Err(e) => return CellOutcome::Failed(e),
    };
    let factor_problem = if prime {
        None
    } else {
        match factorize_with(&g, Exec::Sequential) {
            Err(e) => Some(e.to_string()),
            Ok(f) => {
                let all_k2 = f
                    .factors
                    .iter()
                    .all(|x| x.vertex_count() == 2 && x.edge_count() == 1);
                if f.factors.len() == params.n && all_k2 {
                    None
                } else {
                    let orders: Vec<String> = f
                        .factors
                        .iter()
                        .map(|x| x.vertex_count().to_string())
                        .collect();
                    Some(format!("factor orders [{}]", orders.join(",")))
                }
            }
        }
    };
    CellOutcome::Evaluated {
        expected_prime,
        prime,
        factor_problem,
    }
}

/// How the O- and I-cube of one length compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubeComparison {
    /// Identical word sets, hence identical labeled graphs.
    SameWords,
    Isomorphic,
    NotIsomorphic,
    /// Same invariants but too large for the exact search.
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyComparisonRow {
    pub n: usize,
    pub o_vertices: usize,
    pub i_vertices: usize,
    pub comparison: CubeComparison,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyComparison {
    pub p: usize,
    pub r: usize,
    pub rows: Vec<FamilyComparisonRow>,
}

impl FamilyComparison {
    /// Whether the rows match the expectation for `(p, r)`: identical word
    /// sets at every length when `p = 1` or `r = 1`, and at least one
    /// non-isomorphic length otherwise.
    pub fn holds(&self) -> bool {
        if self.p == 1 || self.r == 1 {
            self.rows
                .iter()
                .all(|row| row.comparison == CubeComparison::SameWords)
        } else {
            self.rows
                .iter()
                .any(|row| row.comparison == CubeComparison::NotIsomorphic)
        }
    }
}

/// Compares the O- and I-cubes of `(p, r)` for every `n ≤ n_max`.
pub fn compare_families(p: usize, r: usize, n_max: usize) -> Result<FamilyComparison> {
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let o_params = CubeParams::new(Family::O, p, r, n)?;
        let i_params = CubeParams::new(Family::I, p, r, n)?;
        let o_words = enumerate_words(o_params);
        let i_words = enumerate_words(i_params);
        let comparison = if o_words == i_words {
            CubeComparison::SameWords
        } else if o_words.len() != i_words.len() {
            CubeComparison::NotIsomorphic
        } else {
            let (og, ig) = (build_cube(o_params), build_cube(i_params));
            if og.edge_count() != ig.edge_count() || og.degree_sequence() != ig.degree_sequence() {
                CubeComparison::NotIsomorphic
            } else if og.vertex_count() > ISO_VERTEX_LIMIT {
                CubeComparison::Undetermined
            } else if find_isomorphism(&og, &ig)?.is_some() {
                CubeComparison::Isomorphic
            } else {
                CubeComparison::NotIsomorphic
            }
        };
        rows.push(FamilyComparisonRow {
            n,
            o_vertices: o_words.len(),
            i_vertices: i_words.len(),
            comparison,
        });
    }
    Ok(FamilyComparison { p, r, rows })
}

/// Re-entrant check that every factor is prime.
pub fn factors_are_prime(f: &Factorization) -> Result<bool> {
    for factor in &f.factors {
        if !is_prime_with(factor, Exec::Sequential)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Writes the factorization, or `prime` for a single factor.
pub fn format_factorization(f: &Factorization) -> String {
    if f.is_prime() {
        "prime\n".to_string()
    } else {
        let mut out = String::new();
        write!(out, "{f}").unwrap();
        out
    }
}
