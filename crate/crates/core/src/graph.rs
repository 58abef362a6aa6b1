//! Simple undirected graphs, the families used to build mesh-star products,
//! and exact hop-count distances.

use std::collections::VecDeque;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Hop count reported for vertices that BFS never reaches.
pub const UNREACHABLE: u32 = u32::MAX;

/// Immutable simple undirected graph on vertices `0..num_vertices`.
///
/// Neighbor lists are sorted and free of duplicates and self-loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(num_vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::invalid("a graph needs at least one vertex"));
        }
        let mut adj = vec![Vec::new(); num_vertices];
        for (u, v) in edges {
            if u >= num_vertices || v >= num_vertices {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{num_vertices}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        bfs_row(self, 0).iter().all(|&d| d != UNREACHABLE)
    }
}

/// The path `P_m` on vertices `0..m`.
pub fn build_path(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::invalid("path order must be at least 1"));
    }
    Graph::from_edges(m, (1..m).map(|i| (i - 1, i)))
}

/// The star `K_{1,n}`: vertex 0 is the center, `1..=n` are leaves.
pub fn build_star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("a star needs at least one leaf"));
    }
    Graph::from_edges(n + 1, (1..=n).map(|leaf| (0, leaf)))
}

/// Cartesian product of the factors, folded left to right.
///
/// Tuple `(x_1, ..., x_k)` gets the mixed-radix id with the last factor varying
/// fastest, so for `[P_m, P_m, K_{1,n}]` vertex `(r, c, s)` has id
/// `(r * m + c) * (n + 1) + s`.
pub fn cartesian_product(factors: &[Graph]) -> Result<Graph> {
    if factors.len() < 2 {
        return Err(Error::invalid("a Cartesian product needs at least two factors"));
    }
    let mut acc = factors[0].clone();
    for right in &factors[1..] {
        acc = product_pair(&acc, right)?;
    }
    Ok(acc)
}

fn product_pair(left: &Graph, right: &Graph) -> Result<Graph> {
    let width = right.num_vertices();
    let total = left
        .num_vertices()
        .checked_mul(width)
        .ok_or_else(|| Error::invalid("product vertex count overflows"))?;
    let id = |a: usize, b: usize| a * width + b;
    let mut edges = Vec::new();
    for a in 0..left.num_vertices() {
        for b in 0..width {
            // same left coordinate, adjacent on the right
            for &b2 in right.neighbors(b) {
                if b2 > b {
                    edges.push((id(a, b), id(a, b2)));
                }
            }
            // same right coordinate, adjacent on the left
            for &a2 in left.neighbors(a) {
                if a2 > a {
                    edges.push((id(a, b), id(a2, b)));
                }
            }
        }
    }
    Graph::from_edges(total, edges)
}

/// Hop counts from `source` to every vertex; unreachable vertices get [`UNREACHABLE`].
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<u32>> {
    if source >= g.num_vertices() {
        return Err(Error::invalid(format!(
            "source {source} is outside 0..{}",
            g.num_vertices()
        )));
    }
    Ok(bfs_row(g, source))
}

fn bfs_row(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.num_vertices()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in g.neighbors(u) {
            if dist[v] == UNREACHABLE {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// All-pairs hop counts, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    /// Runs one BFS per source. With the `parallel` feature the sources are
    /// spread over threads; rows are independent so the result is identical.
    pub fn new(g: &Graph) -> Self {
        let n = g.num_vertices();
        #[cfg(feature = "parallel")]
        let rows: Vec<Vec<u32>> = (0..n).into_par_iter().map(|s| bfs_row(g, s)).collect();
        #[cfg(not(feature = "parallel"))]
        let rows: Vec<Vec<u32>> = (0..n).map(|s| bfs_row(g, s)).collect();
        DistanceMatrix { n, dist: rows.concat() }
    }

    /// Builds a matrix from explicit entries; used for distance systems that do
    /// not come from a single graph's BFS.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("distance matrix must be square"));
        }
        for (u, row) in rows.iter().enumerate() {
            if row[u] != 0 {
                return Err(Error::invalid(format!("dist({u},{u}) must be 0")));
            }
            for (v, &d) in row.iter().enumerate() {
                if d != rows[v][u] {
                    return Err(Error::invalid(format!("dist({u},{v}) is not symmetric")));
                }
            }
        }
        Ok(DistanceMatrix { n, dist: rows.concat() })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite entry, or an error naming the first unreachable pair.
    pub fn diameter(&self) -> Result<u32> {
        let mut best = 0;
        for u in 0..self.n {
            for v in 0..self.n {
                let d = self.get(u, v);
                if d == UNREACHABLE {
                    return Err(Error::Disconnected {
                        from: u,
                        unreachable: v,
                    });
                }
                best = best.max(d);
            }
        }
        Ok(best)
    }

    /// Distances among `vertices` as measured in the host graph, re-indexed
    /// `0..vertices.len()` in the given order.
    pub fn restrict(&self, vertices: &[usize]) -> Self {
        let k = vertices.len();
        let mut dist = Vec::with_capacity(k * k);
        for &u in vertices {
            for &v in vertices {
                dist.push(self.get(u, v));
            }
        }
        DistanceMatrix { n: k, dist }
    }
}

/// Exact diameter by all-pairs BFS. Disconnected graphs are an error.
pub fn diameter(g: &Graph) -> Result<u32> {
    DistanceMatrix::new(g).diameter()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_edge_cases() {
        assert!(build_path(0).is_err());
        let p1 = build_path(1).unwrap();
        assert_eq!((p1.num_vertices(), p1.num_edges()), (1, 0));
        assert_eq!(diameter(&p1).unwrap(), 0);
        assert_eq!(diameter(&build_path(2).unwrap()).unwrap(), 1);
        assert_eq!(diameter(&build_path(5).unwrap()).unwrap(), 4);
    }

    #[test]
    fn star_shapes() {
        assert!(build_star(0).is_err());
        let s1 = build_star(1).unwrap();
        assert_eq!(s1, build_path(2).unwrap());
        assert_eq!(diameter(&s1).unwrap(), 1);

        let s4 = build_star(4).unwrap();
        assert_eq!(s4.degree(0), 4);
        assert_eq!(diameter(&s4).unwrap(), 2);
        assert!(!s4.has_edge(1, 2));

        // K_{1,2} is P_3 with the center relabelled to 0
        let s2 = build_star(2).unwrap();
        assert_eq!(s2.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert_eq!(diameter(&s2).unwrap(), 2);
    }

    #[test]
    fn smallest_mesh_is_a_four_cycle() {
        let p2 = build_path(2).unwrap();
        let c4 = cartesian_product(&[p2.clone(), p2]).unwrap();
        assert_eq!((c4.num_vertices(), c4.num_edges()), (4, 4));
        assert!((0..4).all(|v| c4.degree(v) == 2));
    }

    #[test]
    fn mesh_diameter() {
        for m in 2..=6 {
            let p = build_path(m).unwrap();
            let mesh = cartesian_product(&[p.clone(), p]).unwrap();
            assert_eq!(diameter(&mesh).unwrap() as usize, 2 * (m - 1));
        }
    }

    #[test]
    fn triple_product_degrees_are_coordinate_sums() {
        let p2 = build_path(2).unwrap();
        let k11 = build_star(1).unwrap();
        let factors = [p2.clone(), p2, k11];
        let g = cartesian_product(&factors).unwrap();
        assert_eq!(g.num_vertices(), 8);
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let id = (a * 2 + b) * 2 + c;
                    let expected = factors[0].degree(a) + factors[1].degree(b) + factors[2].degree(c);
                    assert_eq!(g.degree(id), expected);
                }
            }
        }
        // the 3-cube
        assert_eq!(g.num_edges(), 12);
    }

    #[test]
    fn product_rejects_bad_input() {
        assert!(cartesian_product(&[]).is_err());
        assert!(cartesian_product(&[build_path(3).unwrap()]).is_err());
    }

    #[test]
    fn bfs_rows() {
        let p3 = build_path(3).unwrap();
        assert_eq!(bfs_distances(&p3, 0).unwrap(), vec![0, 1, 2]);
        let k13 = build_star(3).unwrap();
        assert_eq!(bfs_distances(&k13, 1).unwrap(), vec![1, 0, 2, 2]);
        assert!(bfs_distances(&k13, 4).is_err());
    }

    #[test]
    fn disconnected_diameter_is_an_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert!(matches!(diameter(&g), Err(Error::Disconnected { .. })));
        assert_eq!(bfs_distances(&g, 0).unwrap()[3], UNREACHABLE);
    }

    #[test]
    fn from_edges_validates() {
        assert!(Graph::from_edges(0, []).is_err());
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
        let g = Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.num_edges(), 1);
    }

    #[test]
    fn restricted_distances_keep_host_metric() {
        let p5 = build_path(5).unwrap();
        let dm = DistanceMatrix::new(&p5);
        let sub = dm.restrict(&[0, 4]);
        assert_eq!(sub.get(0, 1), 4);
        assert_eq!(sub.diameter().unwrap(), 4);
    }
}
