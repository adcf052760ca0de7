use super::distance::{bfs, is_connected};
use super::Graph;

/// Returns `n` iff `g ≅ Q_n`.
///
/// After the cheap filters (`2^n` vertices, `n`-regular, connected), vertex 0
/// and its neighbors `v_1..v_n` induce `n` bipartitions: bit `j` of a vertex
/// is set iff it lies closer to `v_j` than to vertex 0. In `Q_n` these are the
/// halves `Q_{n-1} ∪ Q_{n-1}` of each coordinate, so the bits form a labeling
/// that must be a bijection onto `{0,1}^n` with every edge flipping one bit.
pub fn recognize_hypercube(g: &Graph) -> Option<usize> {
    let order = g.vertex_count();
    if order == 0 || !order.is_power_of_two() {
        return None;
    }
    let n = order.trailing_zeros() as usize;
    if (0..order).any(|v| g.degree(v) != n) || !is_connected(g) {
        return None;
    }
    let from_base = bfs(g, 0);
    let mut labels = vec![0usize; order];
    for (j, &v) in g.neighbors(0).iter().enumerate() {
        let from_v = bfs(g, v);
        for x in 0..order {
            if from_v[x] < from_base[x] {
                labels[x] |= 1 << j;
            }
        }
    }
    let mut seen = vec![false; order];
    for &l in &labels {
        if std::mem::replace(&mut seen[l], true) {
            return None;
        }
    }
    g.edges()
        .iter()
        .all(|e| (labels[e.u] ^ labels[e.v]).is_power_of_two())
        .then_some(n)
}

/// Returns `k` iff `g ≅ K_{1,k}` with `k ≥ 1`.
pub fn recognize_star(g: &Graph) -> Option<usize> {
    let order = g.vertex_count();
    if order < 2 || g.edge_count() != order - 1 {
        return None;
    }
    let k = order - 1;
    let centers = (0..order).filter(|&v| g.degree(v) == k).count();
    let leaves = (0..order).filter(|&v| g.degree(v) == 1).count();
    // K_{1,1} has two vertices of degree 1
    let ok = if k == 1 {
        leaves == 2
    } else {
        centers == 1 && leaves == k
    };
    ok.then_some(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cube, cartesian_product, is_isomorphic};
    use crate::words::CubeParams;

    #[test]
    fn hypercube_examples() {
        assert_eq!(
            recognize_hypercube(&build_cube(CubeParams::o(1, 3, 3).unwrap())),
            Some(3)
        );
        assert_eq!(recognize_hypercube(&Graph::star(3)), None);
        assert_eq!(recognize_hypercube(&Graph::complete(1)), Some(0));
        assert_eq!(recognize_hypercube(&Graph::complete(2)), Some(1));
        assert_eq!(recognize_hypercube(&Graph::cycle(4)), Some(2));
        assert_eq!(recognize_hypercube(&Graph::empty()), None);
        for n in 0..=8 {
            assert_eq!(recognize_hypercube(&Graph::hypercube(n)), Some(n));
        }
    }

    #[test]
    fn hypercube_impostors() {
        // 8 vertices, wrong degree
        let prism = cartesian_product(&Graph::complete(4), &Graph::complete(2)).graph;
        assert_eq!(prism.vertex_count(), 8);
        assert_eq!(recognize_hypercube(&prism), None);
        // 3-regular on 8 vertices but not bipartite
        let mobius = Graph::from_edges(
            8,
            (0..8)
                .map(|v| (v, (v + 1) % 8))
                .chain((0..4).map(|v| (v, v + 4))),
        )
        .unwrap();
        assert_eq!(recognize_hypercube(&mobius), None);
        // C4 = Q2, so the 4x4 torus is Q4
        let torus = cartesian_product(&Graph::cycle(4), &Graph::cycle(4)).graph;
        assert_eq!(recognize_hypercube(&torus), Some(4));
        // 3-regular on 16 vertices, wrong degree for Q4
        let c8c2 = cartesian_product(&Graph::cycle(8), &Graph::complete(2)).graph;
        assert_eq!(recognize_hypercube(&c8c2), None);
        // 4-regular on 32 vertices
        let c8c4 = cartesian_product(&Graph::cycle(8), &Graph::cycle(4)).graph;
        assert_eq!(recognize_hypercube(&c8c4), None);
        let c16_chords = Graph::from_edges(
            16,
            (0..16).flat_map(|v| [(v, (v + 1) % 16), (v, (v + 4) % 16)]),
        )
        .unwrap();
        // 4-regular on 16 vertices; cross-check against exact isomorphism
        assert_eq!(
            recognize_hypercube(&c16_chords).is_some(),
            is_isomorphic(&c16_chords, &Graph::hypercube(4)).unwrap()
        );
    }

    #[test]
    fn star_examples() {
        assert_eq!(
            recognize_star(&build_cube(CubeParams::o(3, 2, 3).unwrap())),
            Some(3)
        );
        assert_eq!(recognize_star(&Graph::cycle(4)), None);
        assert_eq!(recognize_star(&Graph::complete(2)), Some(1));
        assert_eq!(recognize_star(&Graph::complete(1)), None);
        assert_eq!(recognize_star(&Graph::path(3)), Some(2));
        assert_eq!(recognize_star(&Graph::path(4)), None);
        let p4 = Graph::from_edges(4, [(0, 1), (2, 3), (0, 3)]).unwrap();
        assert_eq!(recognize_star(&p4), None);
    }
}
