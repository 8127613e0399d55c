use std::collections::VecDeque;

use crate::graph::Graph;

const UNREACHABLE: u32 = u32::MAX;

/// All-pairs BFS distances. Pairs in different components have no distance;
/// [`DistMatrix::get`] returns `None` for them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    dist: Vec<u32>,
    /// Per source, every vertex reachable from it in BFS order.
    order: Vec<Vec<usize>>,
    diameter: u32,
}

impl DistMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut dist = vec![UNREACHABLE; n * n];
        let mut order = Vec::with_capacity(n);
        let mut diameter = 0;
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            let mut seen = Vec::with_capacity(n);
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                seen.push(u);
                let du = row[u];
                diameter = diameter.max(du);
                for &v in g.neighbors(u) {
                    if row[v] == UNREACHABLE {
                        row[v] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
            order.push(seen);
        }
        DistMatrix { n, dist, order, diameter }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.dist[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Distance when it is finite and at most `limit`.
    pub fn within(&self, u: usize, v: usize, limit: u32) -> Option<u32> {
        self.get(u, v).filter(|&d| d <= limit)
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// Vertices reachable from `source`, in nondecreasing distance order.
    pub fn bfs_order(&self, source: usize) -> &[usize] {
        &self.order[source]
    }

    pub fn is_connected(&self) -> bool {
        self.order.first().is_none_or(|o| o.len() == self.n)
    }

    /// Whether `x` lies on some `u`-`v` geodesic.
    pub fn between(&self, u: usize, x: usize, v: usize) -> bool {
        match (self.get(u, x), self.get(x, v), self.get(u, v)) {
            (Some(a), Some(b), Some(c)) => a + b == c,
            _ => false,
        }
    }
}

pub fn distance_matrix(g: &Graph) -> DistMatrix {
    DistMatrix::new(g)
}

pub fn diameter(g: &Graph) -> u32 {
    DistMatrix::new(g).diameter()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
        let n = g.n();
        let mut d = vec![vec![None; n]; n];
        for (u, row) in d.iter_mut().enumerate() {
            row[u] = Some(0);
            for &v in g.neighbors(u) {
                row[v] = Some(1);
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                        if d[i][j].is_none_or(|c| a + b < c) {
                            d[i][j] = Some(a + b);
                        }
                    }
                }
            }
        }
        d
    }

    #[test]
    fn named_distances() {
        let p5 = Graph::from_descriptor("path:5").unwrap();
        assert_eq!(DistMatrix::new(&p5).get(0, 4), Some(4));
        let c6 = DistMatrix::new(&Graph::from_descriptor("cycle:6").unwrap());
        assert_eq!((c6.get(0, 3), c6.get(0, 4)), (Some(3), Some(2)));
        // (0,0) -> (3,1) in P_4 □ P_2
        let g = DistMatrix::new(&Graph::from_descriptor("grid:4x2").unwrap());
        assert_eq!(g.get(0, 3 * 2 + 1), Some(4));
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&Graph::from_descriptor("complete:5").unwrap()), 1);
        assert_eq!(diameter(&Graph::from_descriptor("cycle:14").unwrap()), 7);
        assert_eq!(diameter(&Graph::from_descriptor("path:14").unwrap()), 13);
        assert_eq!(diameter(&Graph::from_descriptor("path:1").unwrap()), 0);
    }

    #[test]
    fn disconnected_pairs_have_no_distance() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let dm = DistMatrix::new(&g);
        assert_eq!(dm.get(0, 2), None);
        assert_eq!(dm.get(2, 3), Some(1));
        assert_eq!(dm.diameter(), 1);
        assert!(!dm.is_connected());
    }

    #[test]
    fn path_grid_matches_path() {
        for n in 1..8 {
            let a = Graph::from_descriptor(&format!("grid:{n}x1")).unwrap();
            let b = Graph::from_descriptor(&format!("path:{n}")).unwrap();
            let mut da = a.degrees();
            let mut db = b.degrees();
            da.sort();
            db.sort();
            assert_eq!(da, db);
            let multiset = |g: &Graph| {
                let dm = DistMatrix::new(g);
                let mut all: Vec<_> = (0..g.n())
                    .flat_map(|u| (0..g.n()).map(move |v| (u, v)))
                    .map(|(u, v)| dm.get(u, v))
                    .collect();
                all.sort();
                all
            };
            assert_eq!(multiset(&a), multiset(&b));
        }
    }

    proptest! {
        #[test]
        fn bfs_matches_floyd_warshall(n in 1usize..=8, bits in any::<u32>()) {
            let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let edges: Vec<_> = pairs.iter().enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, &edges).unwrap();
            let dm = DistMatrix::new(&g);
            let fw = floyd_warshall(&g);
            for (u, row) in fw.iter().enumerate() {
                for (v, &expected) in row.iter().enumerate() {
                    prop_assert_eq!(dm.get(u, v), expected);
                    prop_assert_eq!(dm.get(u, v) == Some(1), g.has_edge(u, v));
                    if let (Some(a), Some(b), Some(c)) = (dm.get(u, v), dm.get(u, 0), dm.get(0, v)) {
                        prop_assert!(a <= b + c);
                    }
                }
            }
        }
    }
}
