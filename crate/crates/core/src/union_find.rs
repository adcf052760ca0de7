/// Disjoint sets over `0..len` with path compression and union by size.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    /// Dense class ids numbered by each class's smallest member.
    pub(crate) fn canonical_ids(&mut self) -> (Vec<usize>, usize) {
        let len = self.parent.len();
        let mut root_id = vec![usize::MAX; len];
        let mut ids = Vec::with_capacity(len);
        let mut next = 0;
        for x in 0..len {
            let root = self.find(x);
            if root_id[root] == usize::MAX {
                root_id[root] = next;
                next += 1;
            }
            ids.push(root_id[root]);
        }
        (ids, next)
    }
}
