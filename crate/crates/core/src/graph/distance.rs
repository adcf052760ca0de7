use std::collections::VecDeque;

use super::Graph;
use crate::exec::Exec;

pub const UNREACHABLE: u32 = u32::MAX;

/// Dense all-pairs distance table; [`UNREACHABLE`] marks disconnected pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    data: Vec<u32>,
    connected: bool,
}

impl DistanceTable {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.data[u * self.n + v];
        (d != UNREACHABLE).then_some(d)
    }

    /// Raw distance, [`UNREACHABLE`] for disconnected pairs.
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Largest finite distance, `None` when disconnected.
    pub fn diameter(&self) -> Option<u32> {
        if !self.connected {
            return None;
        }
        Some(self.data.iter().copied().max().unwrap_or(0))
    }
}

/// Breadth-first distances from `source`.
pub fn bfs(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y] == UNREACHABLE {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

pub fn all_pairs_distances(g: &Graph) -> DistanceTable {
    all_pairs_distances_with(g, Exec::default())
}

/// One BFS per source; sources are the parallel unit.
pub fn all_pairs_distances_with(g: &Graph, exec: Exec) -> DistanceTable {
    let n = g.vertex_count();
    let rows = exec.map(n, |s| bfs(g, s));
    let data: Vec<u32> = rows.into_iter().flatten().collect();
    let connected = n <= 1 || data[..n].iter().all(|&d| d != UNREACHABLE);
    DistanceTable { n, data, connected }
}

/// True iff a BFS from vertex 0 reaches every vertex; vacuous below two vertices.
pub fn is_connected(g: &Graph) -> bool {
    g.vertex_count() <= 1 || bfs(g, 0).iter().all(|&d| d != UNREACHABLE)
}
