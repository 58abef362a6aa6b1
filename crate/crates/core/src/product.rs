//! The mesh-star product `P(m,m) □ K_{1,n}`: parameters, vertex coordinates
//! and the numbering of star copies over mesh cells.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{build_path, build_star, cartesian_product, Graph};

/// Mesh order `m` and star leaf count `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ProductParams {
    m: usize,
    n: usize,
}

impl ProductParams {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::invalid(format!("mesh order m must be at least 2, got {m}")));
        }
        if n < 1 {
            return Err(Error::invalid("star leaf count n must be at least 1"));
        }
        Ok(ProductParams { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of mesh cells, `m²`.
    pub fn cells(&self) -> usize {
        self.m * self.m
    }

    /// Vertices per star copy, `n + 1`.
    pub fn star_order(&self) -> usize {
        self.n + 1
    }

    pub fn vertex_count(&self) -> usize {
        self.cells() * self.star_order()
    }

    pub fn is_even(&self) -> bool {
        self.m.is_multiple_of(2)
    }

    /// Flat id of a coordinate. Panics on out-of-range coordinates.
    pub fn encode(&self, c: VertexCoord) -> usize {
        assert!(
            c.row < self.m && c.col < self.m && c.star <= self.n,
            "coordinate {c:?} out of range"
        );
        (c.row * self.m + c.col) * self.star_order() + c.star
    }

    pub fn decode(&self, id: usize) -> Result<VertexCoord> {
        if id >= self.vertex_count() {
            return Err(Error::invalid(format!(
                "vertex id {id} is outside 0..{}",
                self.vertex_count()
            )));
        }
        let star = id % self.star_order();
        let cell = id / self.star_order();
        Ok(VertexCoord {
            row: cell / self.m,
            col: cell % self.m,
            star,
        })
    }

    /// One vertex from each orbit of the product's obvious symmetries: the
    /// eight rigid motions of the mesh combined with any permutation of the
    /// leaves. Returns the center and leaf 1 of every cell that is smallest
    /// (row-major) among its images.
    pub fn symmetry_representatives(&self) -> Vec<usize> {
        let k = self.m - 1;
        let mut reps = Vec::new();
        for row in 0..self.m {
            for col in 0..self.m {
                let images = [
                    (row, col),
                    (col, row),
                    (k - row, col),
                    (row, k - col),
                    (k - row, k - col),
                    (col, k - row),
                    (k - col, row),
                    (k - col, k - row),
                ];
                if images.iter().all(|&img| (row, col) <= img) {
                    reps.push(self.encode(VertexCoord { row, col, star: 0 }));
                    reps.push(self.encode(VertexCoord { row, col, star: 1 }));
                }
            }
        }
        reps
    }

    /// Degree of `(row, col)` inside the mesh alone.
    pub fn mesh_degree(&self, row: usize, col: usize) -> usize {
        let edge = |x: usize| if x == 0 || x + 1 == self.m { 1 } else { 2 };
        edge(row) + edge(col)
    }
}

impl fmt::Display for ProductParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({m},{m})□K1,{n}", m = self.m, n = self.n)
    }
}

/// Position of a product vertex. `star == 0` is the center of its star copy,
/// `star == s >= 1` is leaf `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexCoord {
    pub row: usize,
    pub col: usize,
    pub star: usize,
}

impl VertexCoord {
    pub fn is_center(&self) -> bool {
        self.star == 0
    }
}

/// How the 1-based copy index `i ∈ [1, m²]` is laid over mesh cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub enum CellIndexing {
    #[default]
    RowMajor,
    ColumnMajor,
    /// Row-major with every odd row walked right to left.
    Serpentine,
}

impl CellIndexing {
    pub const ALL: [CellIndexing; 3] = [
        CellIndexing::RowMajor,
        CellIndexing::ColumnMajor,
        CellIndexing::Serpentine,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CellIndexing::RowMajor => "row-major",
            CellIndexing::ColumnMajor => "col-major",
            CellIndexing::Serpentine => "serpentine",
        }
    }

    /// Mesh cell `(row, col)` of copy `i`.
    pub fn cell_of(&self, i: usize, m: usize) -> Result<(usize, usize)> {
        if i == 0 || i > m * m {
            return Err(Error::invalid(format!("copy index {i} is outside [1, {}]", m * m)));
        }
        let (major, minor) = ((i - 1) / m, (i - 1) % m);
        Ok(match self {
            CellIndexing::RowMajor => (major, minor),
            CellIndexing::ColumnMajor => (minor, major),
            CellIndexing::Serpentine if major % 2 == 0 => (major, minor),
            CellIndexing::Serpentine => (major, m - 1 - minor),
        })
    }

    /// Copy index of mesh cell `(row, col)`; inverse of [`CellIndexing::cell_of`].
    pub fn index_of(&self, row: usize, col: usize, m: usize) -> Result<usize> {
        if row >= m || col >= m {
            return Err(Error::invalid(format!("cell ({row}, {col}) is outside a {m}x{m} mesh")));
        }
        let (major, minor) = match self {
            CellIndexing::RowMajor => (row, col),
            CellIndexing::ColumnMajor => (col, row),
            CellIndexing::Serpentine if row.is_multiple_of(2) => (row, col),
            CellIndexing::Serpentine => (row, m - 1 - col),
        };
        Ok(major * m + minor + 1)
    }
}

impl fmt::Display for CellIndexing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CellIndexing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "row-major" => Ok(CellIndexing::RowMajor),
            "col-major" | "column-major" => Ok(CellIndexing::ColumnMajor),
            "serpentine" => Ok(CellIndexing::Serpentine),
            other => Err(Error::invalid(format!(
                "unknown indexing scheme '{other}' (expected row-major, col-major or serpentine)"
            ))),
        }
    }
}

/// `P(m,m) □ K_{1,n}` together with its coordinate bijection and copy numbering.
#[derive(Debug, Clone)]
pub struct ProductGraph {
    pub params: ProductParams,
    pub indexing: CellIndexing,
    pub graph: Graph,
}

impl ProductGraph {
    pub fn coord(&self, id: usize) -> Result<VertexCoord> {
        self.params.decode(id)
    }

    pub fn id(&self, c: VertexCoord) -> usize {
        self.params.encode(c)
    }

    /// Flat id of the vertex with star coordinate `star` in copy `t(i)`.
    pub fn copy_vertex(&self, i: usize, star: usize) -> Result<usize> {
        if star > self.params.n {
            return Err(Error::invalid(format!(
                "star coordinate {star} exceeds n = {}",
                self.params.n
            )));
        }
        let (row, col) = self.indexing.cell_of(i, self.params.m)?;
        Ok(self.id(VertexCoord { row, col, star }))
    }

    /// All vertices of copy `t(i)`, center first.
    pub fn copy_vertices(&self, i: usize) -> Result<Vec<usize>> {
        (0..=self.params.n).map(|s| self.copy_vertex(i, s)).collect()
    }

    pub fn coords(&self) -> impl Iterator<Item = (usize, VertexCoord)> + '_ {
        (0..self.params.vertex_count()).map(|id| (id, self.params.decode(id).expect("in range")))
    }
}

/// Builds `P(m,m) □ K_{1,n}` as the left-folded product `P_m × P_m × K_{1,n}`.
pub fn build_product_graph(params: ProductParams, indexing: CellIndexing) -> Result<ProductGraph> {
    let path = build_path(params.m)?;
    let star = build_star(params.n)?;
    let graph = cartesian_product(&[path.clone(), path, star])?;
    debug_assert_eq!(graph.num_vertices(), params.vertex_count());
    Ok(ProductGraph {
        params,
        indexing,
        graph,
    })
}
