//! Exact radio numbers on small instances.
//!
//! Any optimal labeling, read in increasing label order, is reproduced (or
//! beaten) by [`greedy_assign`] on that order, so the radio number is the
//! minimum greedy span over all vertex orderings. [`exact_rn`] searches that
//! space with branch and bound; [`permutation_oracle`] enumerates it outright.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::labeling::{greedy_assign, Labeling, OrderingPlan, Provenance, RadioSystem};

/// Largest instance the permutation oracle will enumerate.
pub const ORACLE_MAX_VERTICES: usize = 9;

/// Largest instance the branch and bound accepts (one bit per vertex).
pub const SEARCH_MAX_VERTICES: usize = 64;

const MEMO_CAPACITY: usize = 1 << 22;

/// Limits for [`exact_rn`]. A node limit makes runs reproducible; the time
/// limit does not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub time: Option<Duration>,
    pub max_nodes: Option<u64>,
}

impl Budget {
    pub fn time(limit: Duration) -> Self {
        Budget {
            time: Some(limit),
            max_nodes: None,
        }
    }

    pub fn nodes(limit: u64) -> Self {
        Budget {
            time: None,
            max_nodes: Some(limit),
        }
    }

    pub fn unlimited() -> Self {
        Budget {
            time: None,
            max_nodes: None,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::time(Duration::from_secs(60))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RnStatus {
    Exact,
    /// Node limit reached; `value` is the best span found.
    UpperBoundOnly,
    TimedOut,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RnResult {
    pub value: u64,
    pub status: RnStatus,
    pub witness: Option<Labeling>,
    /// Search nodes expanded (orderings enumerated, for the oracle).
    pub nodes: u64,
}

impl RnResult {
    pub fn is_exact(&self) -> bool {
        self.status == RnStatus::Exact
    }
}

/// Branch and bound over vertex orderings.
///
/// Children are tried in increasing vertex id and the incumbent is replaced
/// only by a strictly smaller span, so the witness is the first optimal
/// ordering met in that order. Partial orderings are pruned when an admissible
/// lower bound reaches the incumbent, or when the same set of placed vertices
/// with the same pending requirements was already reached at a label no
/// larger than the current one.
pub fn exact_rn(sys: &RadioSystem, budget: Budget) -> Result<RnResult> {
    let all: Vec<usize> = (0..sys.len()).collect();
    exact_rn_with_starts(sys, budget, &all)
}

/// [`exact_rn`] with the first vertex restricted to `starts`.
///
/// Sound only when `starts` meets every orbit of the permutations that
/// preserve all distances (for the mesh-star product see
/// [`ProductParams::symmetry_representatives`](crate::ProductParams::symmetry_representatives)).
pub fn exact_rn_with_starts(sys: &RadioSystem, budget: Budget, starts: &[usize]) -> Result<RnResult> {
    let n = sys.len();
    if n == 0 {
        return Err(Error::invalid("empty instance"));
    }
    if n > SEARCH_MAX_VERTICES {
        return Err(Error::TooLarge {
            vertices: n,
            limit: SEARCH_MAX_VERTICES,
        });
    }
    if starts.is_empty() || starts.iter().any(|&v| v >= n) {
        return Err(Error::invalid(
            "start vertices must be a non-empty subset of the vertices",
        ));
    }
    let identity = OrderingPlan::new((0..n).collect(), n, Provenance::SearchNode)?;
    let seed = greedy_assign(sys, &identity);
    let mut search = Search::new(sys, budget, seed.span(), identity.sequence().to_vec());

    // a twin swap keeps the orbit, so each start may stand in for its lowest twin
    let mut firsts: Vec<usize> = starts
        .iter()
        .map(|&v| {
            (0..=v)
                .find(|&u| u == v || search.earlier_twins[v] & (1 << u) != 0)
                .unwrap_or(v)
        })
        .collect();
    firsts.sort_unstable();
    firsts.dedup();

    let mut order = Vec::with_capacity(n);
    for first in firsts {
        if search.stopped.is_some() {
            break;
        }
        let need: Vec<u64> = (0..n)
            .map(|w| if w == first { 0 } else { search.gap(first, w) })
            .collect();
        order.push(first);
        search.descend(1u64 << first, 0, &need, &mut order);
        order.pop();
    }

    let plan = OrderingPlan::new(search.best_order.clone(), n, Provenance::SearchNode)?;
    let witness = greedy_assign(sys, &plan);
    debug_assert_eq!(witness.span(), search.best);
    Ok(RnResult {
        value: search.best,
        status: search.stopped.unwrap_or(RnStatus::Exact),
        witness: Some(witness),
        nodes: search.nodes,
    })
}

struct Search<'a> {
    sys: &'a RadioSystem,
    n: usize,
    full: u64,
    gaps: Vec<u64>,
    /// `diam + 1`, the gap between vertices at distance 0.
    stride: u64,
    /// Lower-id vertices with the same distances to everything else. Twins
    /// are interchangeable, so only orderings that place them by increasing
    /// id are searched.
    earlier_twins: Vec<u64>,
    scratch: Vec<u64>,
    best: u64,
    best_order: Vec<usize>,
    memo: HashMap<(u64, Vec<u8>), u64>,
    nodes: u64,
    budget: Budget,
    started: Option<Instant>,
    stopped: Option<RnStatus>,
}

impl<'a> Search<'a> {
    fn new(sys: &'a RadioSystem, budget: Budget, best: u64, best_order: Vec<usize>) -> Self {
        let n = sys.len();
        let gaps = (0..n * n)
            .map(|i| {
                let (u, v) = (i / n, i % n);
                if u == v {
                    0
                } else {
                    sys.required_gap(u, v)
                }
            })
            .collect();
        Search {
            sys,
            n,
            full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            gaps,
            stride: u64::from(sys.diameter()) + 1,
            earlier_twins: earlier_twins(sys),
            scratch: Vec::with_capacity(n),
            best,
            best_order,
            memo: HashMap::new(),
            nodes: 0,
            budget,
            // Instant is unavailable on some targets; only touch it when asked to
            started: budget.time.map(|_| Instant::now()),
            stopped: None,
        }
    }

    #[inline]
    fn gap(&self, u: usize, v: usize) -> u64 {
        self.gaps[u * self.n + v]
    }

    #[inline]
    fn dist(&self, u: usize, v: usize) -> u64 {
        self.stride - self.gap(u, v)
    }

    fn out_of_budget(&mut self) -> bool {
        if self.stopped.is_some() {
            return true;
        }
        if let Some(limit) = self.budget.max_nodes {
            if self.nodes >= limit {
                self.stopped = Some(RnStatus::UpperBoundOnly);
                return true;
            }
        }
        if self.nodes.is_multiple_of(1024) {
            if let (Some(limit), Some(start)) = (self.budget.time, self.started) {
                if start.elapsed() >= limit {
                    self.stopped = Some(RnStatus::TimedOut);
                    return true;
                }
            }
        }
        false
    }

    /// Lower bound on the final label. Two admissible estimates, the larger
    /// wins:
    ///
    /// * the k-th label still to come is at least the k-th smallest pending
    ///   requirement and at least one minimum gap above its predecessor;
    /// * the labels still to come climb by `diam + 1 - d` per step, and the
    ///   distances along any walk through the remaining vertices are at most
    ///   half the sum of each vertex's two largest distances.
    fn lower_bound(
        &self,
        last_vertex: usize,
        last: u64,
        remaining: &[usize],
        need: &[u64],
        scratch: &mut Vec<u64>,
    ) -> u64 {
        let mut step = u64::MAX;
        let mut twice_dist = 0u64;
        let mut last_top = 0u64;
        for &u in remaining {
            let (mut top1, mut top2) = (0u64, 0u64);
            for &v in remaining {
                if u != v {
                    let d = self.dist(u, v);
                    step = step.min(self.gap(u, v));
                    if d > top1 {
                        top2 = top1;
                        top1 = d;
                    } else if d > top2 {
                        top2 = d;
                    }
                }
            }
            let d = self.dist(u, last_vertex);
            last_top = last_top.max(d);
            if d > top1 {
                top2 = top1;
                top1 = d;
            } else if d > top2 {
                top2 = d;
            }
            twice_dist += top1 + top2;
        }
        let k = remaining.len() as u64;
        let by_distance = (last + k * self.stride).saturating_sub((twice_dist + last_top) / 2);

        scratch.clear();
        scratch.extend(remaining.iter().map(|&v| need[v]));
        scratch.sort_unstable();
        let mut by_need = scratch[0];
        for &req in &scratch[1..] {
            by_need = (by_need + step).max(req);
        }
        by_need.max(by_distance)
    }

    fn descend(&mut self, placed: u64, last: u64, need: &[u64], order: &mut Vec<usize>) {
        if placed == self.full {
            if last < self.best {
                self.best = last;
                self.best_order.clone_from(order);
            }
            return;
        }
        self.nodes += 1;
        if self.out_of_budget() {
            return;
        }

        let remaining: Vec<usize> = (0..self.n).filter(|&v| placed & (1 << v) == 0).collect();
        let last_vertex = *order.last().expect("at least one vertex placed");
        let mut scratch = std::mem::take(&mut self.scratch);
        let bound = self.lower_bound(last_vertex, last, &remaining, need, &mut scratch);
        self.scratch = scratch;
        if bound >= self.best {
            return;
        }

        if self.sys.diameter() < u32::from(u8::MAX) {
            let profile: Vec<u8> = remaining.iter().map(|&v| (need[v] - last) as u8).collect();
            let full = self.memo.len() >= MEMO_CAPACITY;
            match self.memo.get_mut(&(placed, profile.clone())) {
                Some(seen) if *seen <= last => return,
                Some(seen) => *seen = last,
                None if !full => {
                    self.memo.insert((placed, profile), last);
                }
                None => {}
            }
        }

        let mut child_need = vec![0u64; self.n];
        for &v in &remaining {
            let label = need[v];
            if label >= self.best || placed & self.earlier_twins[v] != self.earlier_twins[v] {
                continue;
            }
            for &w in &remaining {
                child_need[w] = if w == v {
                    label
                } else {
                    need[w].max(label + self.gap(v, w))
                };
            }
            order.push(v);
            self.descend(placed | (1 << v), label, &child_need, order);
            order.pop();
            if self.stopped.is_some() {
                return;
            }
        }
    }
}

fn earlier_twins(sys: &RadioSystem) -> Vec<u64> {
    let n = sys.len();
    let twins = |u: usize, v: usize| (0..n).all(|w| w == u || w == v || sys.distance(u, w) == sys.distance(v, w));
    (0..n)
        .map(|v| (0..v).filter(|&u| twins(u, v)).fold(0u64, |mask, u| mask | 1 << u))
        .collect()
}

/// Radio number by trying every ordering. Refuses more than
/// [`ORACLE_MAX_VERTICES`] vertices.
pub fn permutation_oracle(sys: &RadioSystem) -> Result<RnResult> {
    let n = sys.len();
    if n == 0 {
        return Err(Error::invalid("empty instance"));
    }
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::TooLarge {
            vertices: n,
            limit: ORACLE_MAX_VERTICES,
        });
    }
    let mut best: Option<Labeling> = None;
    let mut count = 0u64;
    for perm in (0..n).permutations(n) {
        count += 1;
        let plan = OrderingPlan::new(perm, n, Provenance::SearchNode)?;
        let l = greedy_assign(sys, &plan);
        if best.as_ref().is_none_or(|b| l.span() < b.span()) {
            best = Some(l);
        }
    }
    let witness = best.expect("at least one ordering");
    Ok(RnResult {
        value: witness.span(),
        status: RnStatus::Exact,
        witness: Some(witness),
        nodes: count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_path, build_star, cartesian_product, Graph};
    use crate::labeling::validate;

    fn sys(g: &Graph) -> RadioSystem {
        RadioSystem::new(g).unwrap()
    }

    #[test]
    fn tiny_values() {
        let r = exact_rn(&sys(&build_path(2).unwrap()), Budget::unlimited()).unwrap();
        assert_eq!((r.value, r.status), (1, RnStatus::Exact));
        let r = exact_rn(&sys(&build_path(3).unwrap()), Budget::unlimited()).unwrap();
        assert_eq!(r.value, 3);
        let r = exact_rn(&sys(&build_path(1).unwrap()), Budget::unlimited()).unwrap();
        assert_eq!(r.value, 0);
    }

    #[test]
    fn stars() {
        // K1,1 is a single edge
        assert_eq!(
            exact_rn(&sys(&build_star(1).unwrap()), Budget::unlimited())
                .unwrap()
                .value,
            1
        );
        for n in 2..=4 {
            let s = sys(&build_star(n).unwrap());
            let r = exact_rn(&s, Budget::unlimited()).unwrap();
            assert_eq!(r.value, n as u64 + 1, "K1,{n}");
            assert!(validate(&s, r.witness.as_ref().unwrap()).unwrap().is_valid());
        }
    }

    #[test]
    fn witness_is_valid_and_tight() {
        let p2 = build_path(2).unwrap();
        let g = cartesian_product(&[p2.clone(), p2, build_star(1).unwrap()]).unwrap();
        let s = sys(&g);
        let r = exact_rn(&s, Budget::unlimited()).unwrap();
        let w = r.witness.unwrap();
        assert_eq!(w.span(), r.value);
        assert!(validate(&s, &w).unwrap().is_valid());
    }

    #[test]
    fn node_budget_is_reported() {
        let s = sys(&build_path(8).unwrap());
        let r = exact_rn(&s, Budget::nodes(3)).unwrap();
        assert_eq!(r.status, RnStatus::UpperBoundOnly);
        assert!(validate(&s, r.witness.as_ref().unwrap()).unwrap().is_valid());
        // the partial run is reproducible
        assert_eq!(exact_rn(&s, Budget::nodes(3)).unwrap(), r);
    }

    #[test]
    fn restricted_starts_agree() {
        for (m, n) in [(2, 1), (2, 2)] {
            let params = crate::ProductParams::new(m, n).unwrap();
            let g = crate::product::build_product_graph(params, crate::CellIndexing::RowMajor)
                .unwrap()
                .graph;
            let s = sys(&g);
            let full = exact_rn(&s, Budget::unlimited()).unwrap();
            let reps = params.symmetry_representatives();
            let fast = exact_rn_with_starts(&s, Budget::unlimited(), &reps).unwrap();
            assert_eq!((fast.value, fast.status), (full.value, RnStatus::Exact));
            assert!(fast.nodes < full.nodes);
        }
        let star = sys(&build_star(4).unwrap());
        assert_eq!(
            exact_rn_with_starts(&star, Budget::unlimited(), &[0, 3]).unwrap().value,
            5
        );
        assert!(exact_rn_with_starts(&star, Budget::unlimited(), &[]).is_err());
    }

    #[test]
    fn oracle_refuses_large_instances() {
        let s = sys(&build_path(10).unwrap());
        assert!(matches!(permutation_oracle(&s), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn disconnected_is_rejected_upstream() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(RadioSystem::new(&g).is_err());
    }
}
