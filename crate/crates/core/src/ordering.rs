//! Visit orders that follow the pairing constructions for even and odd mesh
//! orders, and the labelings they produce.
//!
//! Star coordinates below are zero-based (`0` is the center). A pair of copies
//! `(A, B)` is walked as `A0, B0`, then leaves `1..=n` alternating between the
//! copies (odd leaves on `A`, even leaves on `B`), then the complementary
//! leaves in the same alternation, so both copies are fully covered.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::labeling::{
    consecutive_only_assign, greedy_assign, validate, Labeling, OrderingPlan, Provenance, RadioSystem,
};
use crate::product::{build_product_graph, CellIndexing, ProductParams, VertexCoord};

/// Copy-index pairs `(j, j + m²/2)` for even `m`.
pub fn even_pairs(m: usize) -> Result<Vec<(usize, usize)>> {
    if !m.is_multiple_of(2) {
        return Err(Error::WrongParity { m, expected: "even" });
    }
    let half = m * m / 2;
    Ok((1..=half).map(|j| (j, j + half)).collect())
}

/// Cell grouping used by the odd-order construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddLayout {
    /// `(x, x + m(m-1)/2)` for `x ∈ [1, m(m-1)/2]`: the first `m - 1` rows.
    pub upper_pairs: Vec<(usize, usize)>,
    /// Last-row pairs `(d, d + (m-1)/2)` offset by `m(m-1)`, `d ∈ [2, (m-1)/2]`.
    pub last_row_pairs: Vec<(usize, usize)>,
    /// First, middle and last cell of the last row.
    pub corner_cells: [usize; 3],
}

pub fn odd_layout(m: usize) -> Result<OddLayout> {
    if m.is_multiple_of(2) {
        return Err(Error::WrongParity { m, expected: "odd" });
    }
    let half = m * (m - 1) / 2;
    let base = m * (m - 1);
    let stride = (m - 1) / 2;
    Ok(OddLayout {
        upper_pairs: (1..=half).map(|x| (x, x + half)).collect(),
        // the stated partner offset (m+1)/2 would reuse the last cell and skip
        // one; (m-1)/2 covers the last row exactly once alongside the corners
        last_row_pairs: (2..=stride).map(|d| (base + d, base + d + stride)).collect(),
        corner_cells: [base + 1, base + m.div_ceil(2), base + m],
    })
}

struct Locator {
    params: ProductParams,
    indexing: CellIndexing,
}

impl Locator {
    fn vertex(&self, copy: usize, star: usize) -> Result<usize> {
        let (row, col) = self.indexing.cell_of(copy, self.params.m())?;
        Ok(self.params.encode(VertexCoord { row, col, star }))
    }

    fn zigzag(&self, a: usize, b: usize, out: &mut Vec<usize>) -> Result<()> {
        let n = self.params.n();
        out.push(self.vertex(a, 0)?);
        out.push(self.vertex(b, 0)?);
        for s in 1..=n {
            let copy = if s % 2 == 1 { a } else { b };
            out.push(self.vertex(copy, s)?);
        }
        for s in 1..=n {
            let copy = if s % 2 == 1 { b } else { a };
            out.push(self.vertex(copy, s)?);
        }
        Ok(())
    }
}

pub fn paper_ordering_even(params: ProductParams, indexing: CellIndexing) -> Result<OrderingPlan> {
    let loc = Locator { params, indexing };
    let mut seq = Vec::with_capacity(params.vertex_count());
    for (a, b) in even_pairs(params.m())? {
        loc.zigzag(a, b, &mut seq)?;
    }
    OrderingPlan::new(seq, params.vertex_count(), Provenance::PaperEven)
}

pub fn paper_ordering_odd(params: ProductParams, indexing: CellIndexing) -> Result<OrderingPlan> {
    let layout = odd_layout(params.m())?;
    let loc = Locator { params, indexing };
    let mut seq = Vec::with_capacity(params.vertex_count());
    for &(a, b) in layout.upper_pairs.iter().chain(&layout.last_row_pairs) {
        loc.zigzag(a, b, &mut seq)?;
    }

    // Three corner copies walked along short paths. The first three star
    // coordinates form a Latin square over the paths so each copy contributes
    // each of them once; higher leaves rotate the same way.
    let [first, middle, last] = layout.corner_cells;
    let n = params.n();
    let head: [[(usize, usize); 3]; 3] = [
        [(first, 0), (last, 1), (middle, 2)],
        [(last, 0), (first, 2), (middle, 1)],
        [(first, 1), (last, 2), (middle, 0)],
    ];
    for path in head {
        for (copy, star) in path {
            if star <= n {
                seq.push(loc.vertex(copy, star)?);
            }
        }
    }
    let leaves: Vec<usize> = (3..=n).collect();
    let k = leaves.len();
    for i in 0..k {
        seq.push(loc.vertex(first, leaves[i])?);
        seq.push(loc.vertex(last, leaves[(i + 1) % k])?);
        seq.push(loc.vertex(middle, leaves[(i + 2) % k])?);
    }
    OrderingPlan::new(seq, params.vertex_count(), Provenance::PaperOdd)
}

/// The parity-appropriate ordering.
pub fn paper_ordering(params: ProductParams, indexing: CellIndexing) -> Result<OrderingPlan> {
    if params.is_even() {
        paper_ordering_even(params, indexing)
    } else {
        paper_ordering_odd(params, indexing)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PaperConstruction {
    pub plan: OrderingPlan,
    /// Always valid.
    pub greedy: Labeling,
    /// Consecutive gaps only, as the hand derivations accumulate them.
    pub consecutive: Labeling,
    pub consecutive_valid: bool,
}

pub fn construct_paper_labeling(params: ProductParams, indexing: CellIndexing) -> Result<PaperConstruction> {
    let pg = build_product_graph(params, indexing)?;
    let sys = RadioSystem::new(&pg.graph)?;
    construct_with_system(&sys, params, indexing)
}

/// Same as [`construct_paper_labeling`] with distances already computed.
pub fn construct_with_system(
    sys: &RadioSystem,
    params: ProductParams,
    indexing: CellIndexing,
) -> Result<PaperConstruction> {
    let plan = paper_ordering(params, indexing)?;
    let greedy = greedy_assign(sys, &plan);
    let consecutive = consecutive_only_assign(sys, &plan);
    let consecutive_valid = validate(sys, &consecutive)?.is_valid();
    Ok(PaperConstruction {
        plan,
        greedy,
        consecutive,
        consecutive_valid,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: usize, n: usize) -> ProductParams {
        ProductParams::new(m, n).unwrap()
    }

    #[test]
    fn parity_errors() {
        assert!(matches!(
            paper_ordering_even(p(3, 1), CellIndexing::RowMajor),
            Err(Error::WrongParity { .. })
        ));
        assert!(matches!(
            paper_ordering_odd(p(4, 1), CellIndexing::RowMajor),
            Err(Error::WrongParity { .. })
        ));
    }

    #[test]
    fn smallest_even_order() {
        let plan = paper_ordering_even(p(2, 1), CellIndexing::RowMajor).unwrap();
        // t(1) = cell (0,0), t(3) = cell (1,0); ids are (row*2+col)*2+star
        assert_eq!(&plan.sequence()[..4], &[0, 4, 1, 5]);
        assert_eq!(plan.sequence().len(), 8);
    }

    #[test]
    fn even_pairs_for_fig_example() {
        let pairs = even_pairs(6).unwrap();
        assert_eq!(pairs.len(), 18);
        assert_eq!(pairs[0], (1, 19));
    }

    #[test]
    fn odd_layouts() {
        let l3 = odd_layout(3).unwrap();
        assert_eq!(l3.upper_pairs, vec![(1, 4), (2, 5), (3, 6)]);
        assert!(l3.last_row_pairs.is_empty());
        assert_eq!(l3.corner_cells, [7, 8, 9]);

        let l5 = odd_layout(5).unwrap();
        assert_eq!(l5.corner_cells, [21, 23, 25]);
        assert_eq!(l5.last_row_pairs, vec![(22, 24)]);
    }

    #[test]
    fn odd_order_sizes() {
        let plan = paper_ordering_odd(p(3, 1), CellIndexing::RowMajor).unwrap();
        assert_eq!(plan.sequence().len(), 18);
        assert_eq!(plan.provenance(), Provenance::PaperOdd);
    }

    #[test]
    fn even_second_label_matches_hand_derivation() {
        // P(6,6) x K1,4: centers of t(1) and t(19) are 3 apart, diameter 12
        let c = construct_paper_labeling(p(6, 4), CellIndexing::RowMajor).unwrap();
        let second = c.plan.sequence()[1];
        assert_eq!(c.consecutive.get(second), 10);
    }

    #[test]
    fn greedy_construction_validates() {
        for (m, n) in [(2, 2), (3, 2), (4, 1)] {
            let params = p(m, n);
            let pg = build_product_graph(params, CellIndexing::RowMajor).unwrap();
            let sys = RadioSystem::new(&pg.graph).unwrap();
            let c = construct_with_system(&sys, params, CellIndexing::RowMajor).unwrap();
            assert!(validate(&sys, &c.greedy).unwrap().is_valid());
            // greedy never undercuts the consecutive gaps, and coincides with them when they are valid
            assert!(c.greedy.span() >= c.consecutive.span());
            if c.consecutive_valid {
                assert_eq!(c.greedy, c.consecutive);
            }
        }
    }
}
