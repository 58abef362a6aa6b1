//! Radio labelings: the separation constraint, validation, and the two ways of
//! turning a vertex ordering into labels.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, UNREACHABLE};

/// Distances plus the diameter that sets the separation requirement
/// `|f(u) - f(v)| >= diam + 1 - d(u, v)`.
///
/// Usually built from a whole graph. A system restricted to a vertex subset
/// keeps the host graph's distances and diameter.
#[derive(Debug, Clone)]
pub struct RadioSystem {
    dist: DistanceMatrix,
    diam: u32,
}

impl RadioSystem {
    pub fn new(g: &Graph) -> Result<Self> {
        Self::from_distances(DistanceMatrix::new(g))
    }

    pub fn from_distances(dist: DistanceMatrix) -> Result<Self> {
        let diam = dist.diameter()?;
        Ok(RadioSystem { dist, diam })
    }

    /// A system whose separation is measured against `diam` rather than the
    /// matrix's own maximum.
    pub fn with_diameter(dist: DistanceMatrix, diam: u32) -> Result<Self> {
        for u in 0..dist.len() {
            for v in 0..dist.len() {
                let d = dist.get(u, v);
                if d == UNREACHABLE || d > diam {
                    return Err(Error::invalid(format!(
                        "dist({u},{v}) = {d} does not fit under diameter {diam}"
                    )));
                }
            }
        }
        Ok(RadioSystem { dist, diam })
    }

    /// Sub-system on `vertices` (re-indexed in that order) with this system's
    /// distances and diameter.
    pub fn restrict(&self, vertices: &[usize]) -> Self {
        RadioSystem {
            dist: self.dist.restrict(vertices),
            diam: self.diam,
        }
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn diameter(&self) -> u32 {
        self.diam
    }

    pub fn distance(&self, u: usize, v: usize) -> u32 {
        self.dist.get(u, v)
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    /// Minimum label gap between two distinct vertices.
    #[inline]
    pub fn required_gap(&self, u: usize, v: usize) -> u64 {
        u64::from(self.diam + 1 - self.dist.get(u, v))
    }
}

/// Channel assignment: one non-negative label per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Labeling {
    labels: Vec<u64>,
}

impl Labeling {
    pub fn new(labels: Vec<u64>) -> Self {
        Labeling { labels }
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn span(&self) -> u64 {
        let max = self.labels.iter().copied().max().unwrap_or(0);
        let min = self.labels.iter().copied().min().unwrap_or(0);
        max - min
    }

    /// Same labeling shifted so the smallest label is 0.
    pub fn normalized(&self) -> Labeling {
        let min = self.labels.iter().copied().min().unwrap_or(0);
        Labeling::new(self.labels.iter().map(|&l| l - min).collect())
    }

    pub fn shifted(&self, by: u64) -> Labeling {
        Labeling::new(self.labels.iter().map(|&l| l + by).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub required: u64,
    pub actual: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every vertex pair and lists each one whose gap is too small.
pub fn validate(sys: &RadioSystem, l: &Labeling) -> Result<ValidityReport> {
    if l.len() != sys.len() {
        return Err(Error::Contract(format!(
            "labeling covers {} vertices but the graph has {}",
            l.len(),
            sys.len()
        )));
    }
    let mut violations = Vec::new();
    for u in 0..sys.len() {
        for v in u + 1..sys.len() {
            let required = sys.required_gap(u, v);
            let actual = l.get(u).abs_diff(l.get(v));
            if actual < required {
                violations.push(Violation { u, v, required, actual });
            }
        }
    }
    Ok(ValidityReport { violations })
}

/// Where a visit order came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Provenance {
    PaperEven,
    PaperOdd,
    SearchNode,
    External,
}

/// A permutation of the vertices, in visiting order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderingPlan {
    sequence: Vec<usize>,
    provenance: Provenance,
}

impl OrderingPlan {
    /// Fails unless `sequence` is a permutation of `0..num_vertices`.
    pub fn new(sequence: Vec<usize>, num_vertices: usize, provenance: Provenance) -> Result<Self> {
        if sequence.len() != num_vertices {
            return Err(Error::invalid(format!(
                "ordering has {} entries for {num_vertices} vertices",
                sequence.len()
            )));
        }
        let mut seen = vec![false; num_vertices];
        for &v in &sequence {
            if v >= num_vertices || std::mem::replace(&mut seen[v], true) {
                return Err(Error::invalid(format!("vertex {v} is out of range or repeated")));
            }
        }
        Ok(OrderingPlan { sequence, provenance })
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }
}

/// Labels vertices in plan order, each with the smallest value that is at
/// least the previous label and clears every already-labelled vertex.
///
/// Every gap requirement is at least 1, so that value is simply the largest
/// `f(w) + gap(w, v)` over earlier `w`; the result always validates.
pub fn greedy_assign(sys: &RadioSystem, plan: &OrderingPlan) -> Labeling {
    let n = sys.len();
    let mut need = vec![0u64; n];
    let mut labels = vec![0u64; n];
    for &v in plan.sequence() {
        let label = need[v];
        labels[v] = label;
        for (w, slot) in need.iter_mut().enumerate() {
            if w != v {
                *slot = (*slot).max(label + sys.required_gap(v, w));
            }
        }
    }
    Labeling::new(labels)
}

/// Accumulates the gap between consecutive vertices only:
/// `f(u_i) = f(u_{i-1}) + diam + 1 - d(u_{i-1}, u_i)`.
///
/// Pairs further apart in the order are not checked, so the result may be
/// invalid.
pub fn consecutive_only_assign(sys: &RadioSystem, plan: &OrderingPlan) -> Labeling {
    let mut labels = vec![0u64; sys.len()];
    let mut current = 0u64;
    for pair in plan.sequence().windows(2) {
        current += sys.required_gap(pair[0], pair[1]);
        labels[pair[1]] = current;
    }
    Labeling::new(labels)
}
