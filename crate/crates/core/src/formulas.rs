//! Closed-form quantities for `P(m,m) □ K_{1,n}` evaluated in exact rational
//! arithmetic.
//!
//! Several stated expressions are not integers for admissible `(m, n)`, and a
//! few results are stated in more than one algebraic form that do not agree.
//! Nothing here rounds or picks a winner: non-integral values stay fractions
//! and every variant is exposed.

use std::fmt;

use num_rational::Ratio;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::product::ProductParams;

pub type Rational = Ratio<i64>;

fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

fn mn(params: ProductParams) -> (i64, i64) {
    (params.m() as i64, params.n() as i64)
}

fn need_even(params: ProductParams) -> Result<(i64, i64)> {
    if !params.is_even() {
        return Err(Error::WrongParity {
            m: params.m(),
            expected: "even",
        });
    }
    Ok(mn(params))
}

fn need_odd(params: ProductParams) -> Result<(i64, i64)> {
    if params.is_even() {
        return Err(Error::WrongParity {
            m: params.m(),
            expected: "odd",
        });
    }
    Ok(mn(params))
}

/// Identifies each closed-form quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BoundId {
    DiamCor3,
    Cor5PairBound,
    Thm6EvenBound,
    Cor8PairBound,
    Thm9GStar,
    Cor13SpanF3,
    Thm14GStarStar,
    Cor15GI,
    Thm16GStarStarStar,
    Thm17GDblStar,
    Thm18OddBound,
    Eq58Combined,
    SpanF1,
    SpanF2,
    SpanF4,
}

impl BoundId {
    pub fn name(&self) -> &'static str {
        match self {
            BoundId::DiamCor3 => "DiamCor3",
            BoundId::Cor5PairBound => "Cor5PairBound",
            BoundId::Thm6EvenBound => "Thm6EvenBound",
            BoundId::Cor8PairBound => "Cor8PairBound",
            BoundId::Thm9GStar => "Thm9GStar",
            BoundId::Cor13SpanF3 => "Cor13SpanF3",
            BoundId::Thm14GStarStar => "Thm14GStarStar",
            BoundId::Cor15GI => "Cor15GI",
            BoundId::Thm16GStarStarStar => "Thm16GStarStarStar",
            BoundId::Thm17GDblStar => "Thm17GDblStar",
            BoundId::Thm18OddBound => "Thm18OddBound",
            BoundId::Eq58Combined => "Eq58Combined",
            BoundId::SpanF1 => "SpanF1",
            BoundId::SpanF2 => "SpanF2",
            BoundId::SpanF4 => "SpanF4",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn is_integral(v: &Rational) -> bool {
    v.denom().is_one()
}

/// `2m`. Only holds when the star has diameter 2, so `n = 1` is rejected.
pub fn diam_formula(params: ProductParams) -> Result<u64> {
    if params.n() < 2 {
        return Err(Error::Domain(
            "the 2m diameter assumes diam(K1,n) = 2, but K1,1 is a single edge with diameter 1".into(),
        ));
    }
    Ok(2 * params.m() as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DistanceCase {
    BothCenters,
    ExactlyOneCenter,
    NoCenters,
}

impl DistanceCase {
    pub fn of(u_is_center: bool, v_is_center: bool) -> Self {
        match (u_is_center, v_is_center) {
            (true, true) => DistanceCase::BothCenters,
            (false, false) => DistanceCase::NoCenters,
            _ => DistanceCase::ExactlyOneCenter,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            DistanceCase::BothCenters => "BothCenters",
            DistanceCase::ExactlyOneCenter => "ExactlyOneCenter",
            DistanceCase::NoCenters => "NoCenters",
        }
    }
}

/// Predicted distance between a vertex of one paired copy and a vertex of
/// the other. Predictions only; BFS decides whether they hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistanceCasePrediction {
    pub case: DistanceCase,
    pub predicted: Rational,
}

impl DistanceCasePrediction {
    pub fn is_integral(&self) -> bool {
        is_integral(&self.predicted)
    }
}

/// Case table for the even pairing `t(j)`, `t(j + m²/2)`: `m/2`, `m-1`, `m`.
///
/// The table does not distinguish equal from different leaves; `same_leaf` is
/// accepted so callers can pass the full case description and is ignored.
pub fn even_pair_distance(
    m: usize,
    u_is_center: bool,
    v_is_center: bool,
    _same_leaf: bool,
) -> Result<DistanceCasePrediction> {
    if !m.is_multiple_of(2) {
        return Err(Error::WrongParity { m, expected: "even" });
    }
    let m = m as i64;
    let case = DistanceCase::of(u_is_center, v_is_center);
    let predicted = match case {
        DistanceCase::BothCenters => frac(m, 2),
        DistanceCase::ExactlyOneCenter => int(m - 1),
        DistanceCase::NoCenters => int(m),
    };
    Ok(DistanceCasePrediction { case, predicted })
}

/// Which odd-order case table to read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum OddCaseTable {
    /// `m/2 - 1`, `m/2 + 1`, `(m+3)/2`: half-integers for odd `m`.
    AsStated,
    /// `(m-1)/2`, `(m+1)/2`, `(m+3)/2`: the values the worked steps use.
    Operative,
}

/// Case table for the odd pairing `t(x)`, `t(x + m(m-1)/2)` (the last-row
/// pairing uses the operative values as well).
pub fn odd_pair_distance(
    m: usize,
    u_is_center: bool,
    v_is_center: bool,
    _same_leaf: bool,
    table: OddCaseTable,
) -> Result<DistanceCasePrediction> {
    if m.is_multiple_of(2) {
        return Err(Error::WrongParity { m, expected: "odd" });
    }
    let m = m as i64;
    let case = DistanceCase::of(u_is_center, v_is_center);
    let predicted = match (table, case) {
        (OddCaseTable::AsStated, DistanceCase::BothCenters) => frac(m, 2) - 1,
        (OddCaseTable::AsStated, DistanceCase::ExactlyOneCenter) => frac(m, 2) + 1,
        (OddCaseTable::Operative, DistanceCase::BothCenters) => frac(m - 1, 2),
        (OddCaseTable::Operative, DistanceCase::ExactlyOneCenter) => frac(m + 1, 2),
        (_, DistanceCase::NoCenters) => frac(m + 3, 2),
    };
    Ok(DistanceCasePrediction { case, predicted })
}

/// Per-pair bound for even `m`: `3m/2 + 2 + mn + n`.
pub fn cor5_pair_bound(params: ProductParams) -> Result<Rational> {
    let (m, n) = need_even(params)?;
    Ok(frac(3 * m, 2) + 2 + m * n + n)
}

/// Even-order bound `3m³/4 + (2m² + m³n + m²n)/2`.
pub fn thm6_even_bound(params: ProductParams) -> Result<Rational> {
    let (m, n) = need_even(params)?;
    Ok(frac(3 * m.pow(3), 4) + frac(2 * m * m + m.pow(3) * n + m * m * n, 2))
}

/// The even-order bound as the sum of `m²/2` per-pair bounds.
pub fn thm6_via_pairs(params: ProductParams) -> Result<Rational> {
    let (m, _) = need_even(params)?;
    Ok(frac(m * m, 2) * cor5_pair_bound(params)?)
}

/// Per-pair bound for odd `m`: `(3mn - n + 2)/2`.
pub fn cor8_pair_bound(params: ProductParams) -> Result<Rational> {
    let (m, n) = need_odd(params)?;
    Ok(frac(3 * m * n - n + 2, 2))
}

/// The upper-rows quantity, in each form it is written.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GStarValues {
    /// `m² - m²n - m + (m³n + mn)/4`
    pub statement: Rational,
    /// `(m³n - 4m²n + 4m² + mn - 4m)/4`
    pub expanded: Rational,
    /// `(3m³n - 4m²n + 4m² + mn - 4m)/4`
    pub closing_line: Rational,
    /// `m(m-1)/2 · (3mn - n + 2)/2`, the sum the derivation starts from.
    pub pair_sum: Rational,
    /// `m² - m²n - m + (3m³n + mn)/4`, the form fed into the odd-order total.
    pub as_used_in_total: Rational,
}

pub fn thm9_gstar_bound(params: ProductParams) -> Result<GStarValues> {
    let (m, n) = need_odd(params)?;
    let (m2, m3) = (m * m, m.pow(3));
    Ok(GStarValues {
        statement: int(m2 - m2 * n - m) + frac(m3 * n + m * n, 4),
        expanded: frac(m3 * n - 4 * m2 * n + 4 * m2 + m * n - 4 * m, 4),
        closing_line: frac(3 * m3 * n - 4 * m2 * n + 4 * m2 + m * n - 4 * m, 4),
        pair_sum: frac(m * (m - 1), 2) * cor8_pair_bound(params)?,
        as_used_in_total: int(m2 - m2 * n - m) + frac(3 * m3 * n + m * n, 4),
    })
}

fn need_two_leaves(params: ProductParams) -> Result<()> {
    if params.n() < 2 {
        return Err(Error::Domain(format!(
            "the corner-path spans need n >= 2, got n = {}",
            params.n()
        )));
    }
    Ok(())
}

/// `6m + (3m+3)/2`: three corner paths of `2m + (m+1)/2` each.
pub fn span_f1(params: ProductParams) -> Result<Rational> {
    let (m, _) = need_odd(params)?;
    Ok(int(6 * m) + frac(3 * m + 3, 2))
}

/// `(5mn - 10m - n + 2)/2`: `n - 2` leaf paths of `2m + (m-1)/2` each.
pub fn span_f2(params: ProductParams) -> Result<Rational> {
    let (m, n) = need_odd(params)?;
    need_two_leaves(params)?;
    Ok(frac(5 * m * n - 10 * m - n + 2, 2))
}

/// `(5mn + 5m - n + 5)/2`.
pub fn cor13_span_f3(params: ProductParams) -> Result<Rational> {
    let (m, n) = need_odd(params)?;
    need_two_leaves(params)?;
    Ok(frac(5 * m * n + 5 * m - n + 5, 2))
}

/// `(mn + n)/2`.
pub fn span_f4(params: ProductParams) -> Result<Rational> {
    let (m, n) = need_odd(params)?;
    Ok(frac(m * n + n, 2))
}

/// `(6mn + 5m + 5)/2`.
pub fn thm14_bound(params: ProductParams) -> Result<Rational> {
    let (m, n) = need_odd(params)?;
    Ok(frac(6 * m * n + 5 * m + 5, 2))
}

/// Per-pair bound on the last-row pairs; the same expression as the upper pairs.
pub fn cor15_pair_bound(params: ProductParams) -> Result<Rational> {
    cor8_pair_bound(params)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GStarStarStarValues {
    /// `(3m²n - 10mn + 4m + 3n)/2`
    pub statement: Rational,
    /// `2m - 5mn + (3m²n + 3n)/2`
    pub closing_line: Rational,
    /// `(m-3)/2 · (3mn - n + 2)/2 + 2 · (m+3)/2`, the chain the derivation sums.
    pub block_sum: Rational,
    /// Set when `m < 5`, where there are no last-row blocks to chain.
    pub degenerate: bool,
}

pub fn thm16_bound(params: ProductParams) -> Result<GStarStarStarValues> {
    let (m, n) = need_odd(params)?;
    Ok(GStarStarStarValues {
        statement: frac(3 * m * m * n - 10 * m * n + 4 * m + 3 * n, 2),
        closing_line: int(2 * m - 5 * m * n) + frac(3 * m * m * n + 3 * n, 2),
        block_sum: frac(m - 3, 2) * cor8_pair_bound(params)? + int(m + 3),
        degenerate: m < 5,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GDblStarValues {
    /// `(3m²n - 4mn + 12m + 3n + 8)/2`
    pub statement: Rational,
    /// `(3m³n - 10mn + 7m + 3n + 3)/2`, the intermediate label as printed (cubic).
    pub bridge_as_printed: Rational,
    /// Printed bridge plus the corner bound.
    pub total_as_printed: Rational,
    /// Corner-block statement plus one separation step of `2m + 1 - (m-1)/2`
    /// plus the corner bound: the quadratic chain that reproduces the statement.
    pub chain: Rational,
}

pub fn thm17_bound(params: ProductParams) -> Result<GDblStarValues> {
    let (m, n) = need_odd(params)?;
    let corner = thm14_bound(params)?;
    let bridge_as_printed = frac(3 * m.pow(3) * n - 10 * m * n + 7 * m + 3 * n + 3, 2);
    let step = int(2 * m + 1) - frac(m - 1, 2);
    Ok(GDblStarValues {
        statement: frac(3 * m * m * n - 4 * m * n + 12 * m + 3 * n + 8, 2),
        bridge_as_printed,
        total_as_printed: bridge_as_printed + corner,
        chain: thm16_bound(params)?.statement + step + corner,
    })
}

/// Odd-order bound `5m + 4 + m² + (3m³n + 2m²n + 6n - 7mn)/4`.
pub fn thm18_odd_bound(params: ProductParams) -> Result<Rational> {
    let (m, n) = need_odd(params)?;
    Ok(int(5 * m + 4 + m * m) + frac(3 * m.pow(3) * n + 2 * m * m * n + 6 * n - 7 * m * n, 4))
}

/// The odd-order bound as the sum of its two parts.
pub fn thm18_via_parts(params: ProductParams) -> Result<Rational> {
    Ok(thm9_gstar_bound(params)?.as_used_in_total + thm17_bound(params)?.statement)
}

/// Piecewise lower bound: even formula for even `m`, odd formula otherwise.
pub fn combined_bound(params: ProductParams) -> Result<Rational> {
    if params.is_even() {
        thm6_even_bound(params)
    } else {
        thm18_odd_bound(params)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub m: usize,
    pub n: usize,
    pub product_count: usize,
    pub star_path_count: usize,
    pub ratio: Rational,
}

/// Vertex counts of `P(m,m) □ K_{1,n}` against `K_{1,n} □ P_m`.
pub fn vertex_count_comparison(ms: impl IntoIterator<Item = usize>, n: usize) -> Result<Vec<CountRow>> {
    ms.into_iter()
        .map(|m| {
            let params = ProductParams::new(m, n)?;
            let product_count = params.vertex_count();
            let star_path_count = m * (n + 1);
            Ok(CountRow {
                m,
                n,
                product_count,
                star_path_count,
                ratio: frac(product_count as i64, star_path_count as i64),
            })
        })
        .collect()
}

/// One line of the bounds table. `variant` is empty for the stated form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub id: BoundId,
    pub variant: &'static str,
    pub m: usize,
    pub n: usize,
    pub value: Rational,
}

impl BoundRow {
    pub fn label(&self) -> String {
        if self.variant.is_empty() {
            self.id.name().to_string()
        } else {
            format!("{}.{}", self.id.name(), self.variant)
        }
    }

    pub fn integral(&self) -> bool {
        is_integral(&self.value)
    }
}

/// Every formula that applies at `params`, with alternate forms as extra rows.
pub fn bounds_table(params: ProductParams) -> Result<Vec<BoundRow>> {
    let (m, n) = (params.m(), params.n());
    let mut rows = Vec::new();
    let mut push = |id, variant, value| {
        rows.push(BoundRow {
            id,
            variant,
            m,
            n,
            value,
        })
    };

    if let Ok(d) = diam_formula(params) {
        push(BoundId::DiamCor3, "", int(d as i64));
    }
    if params.is_even() {
        push(BoundId::Cor5PairBound, "", cor5_pair_bound(params)?);
        push(BoundId::Thm6EvenBound, "", thm6_even_bound(params)?);
        push(BoundId::Thm6EvenBound, "pair_sum", thm6_via_pairs(params)?);
    } else {
        push(BoundId::Cor8PairBound, "", cor8_pair_bound(params)?);
        let g = thm9_gstar_bound(params)?;
        push(BoundId::Thm9GStar, "", g.statement);
        push(BoundId::Thm9GStar, "expanded", g.expanded);
        push(BoundId::Thm9GStar, "closing_line", g.closing_line);
        push(BoundId::Thm9GStar, "pair_sum", g.pair_sum);
        push(BoundId::Thm9GStar, "as_used_in_total", g.as_used_in_total);
        push(BoundId::SpanF1, "", span_f1(params)?);
        if n >= 2 {
            push(BoundId::SpanF2, "", span_f2(params)?);
            push(BoundId::Cor13SpanF3, "", cor13_span_f3(params)?);
        }
        push(BoundId::SpanF4, "", span_f4(params)?);
        push(BoundId::Thm14GStarStar, "", thm14_bound(params)?);
        push(BoundId::Cor15GI, "", cor15_pair_bound(params)?);
        let t16 = thm16_bound(params)?;
        push(BoundId::Thm16GStarStarStar, "", t16.statement);
        push(BoundId::Thm16GStarStarStar, "closing_line", t16.closing_line);
        push(BoundId::Thm16GStarStarStar, "block_sum", t16.block_sum);
        let t17 = thm17_bound(params)?;
        push(BoundId::Thm17GDblStar, "", t17.statement);
        push(BoundId::Thm17GDblStar, "bridge_as_printed", t17.bridge_as_printed);
        push(BoundId::Thm17GDblStar, "total_as_printed", t17.total_as_printed);
        push(BoundId::Thm17GDblStar, "chain", t17.chain);
        push(BoundId::Thm18OddBound, "", thm18_odd_bound(params)?);
        push(BoundId::Thm18OddBound, "parts_sum", thm18_via_parts(params)?);
    }
    push(BoundId::Eq58Combined, "", combined_bound(params)?);
    Ok(rows)
}

/// `num/den` with the denominator omitted when it is 1.
pub fn format_rational(v: &Rational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: usize, n: usize) -> ProductParams {
        ProductParams::new(m, n).unwrap()
    }

    #[test]
    fn diameter_formula() {
        assert_eq!(diam_formula(p(4, 5)).unwrap(), 8);
        assert_eq!(diam_formula(p(2, 2)).unwrap(), 4);
        assert_eq!(diam_formula(p(5, 4)).unwrap(), 10);
        assert!(matches!(diam_formula(p(3, 1)), Err(Error::Domain(_))));
    }

    #[test]
    fn even_case_table() {
        assert_eq!(even_pair_distance(4, true, true, false).unwrap().predicted, int(2));
        let one = even_pair_distance(4, true, false, false).unwrap();
        assert_eq!((one.case, one.predicted), (DistanceCase::ExactlyOneCenter, int(3)));
        assert_eq!(even_pair_distance(6, true, true, false).unwrap().predicted, int(3));
        assert_eq!(even_pair_distance(6, false, false, true).unwrap().predicted, int(6));
        assert!(even_pair_distance(5, true, true, false).is_err());
    }

    #[test]
    fn odd_case_tables() {
        let op = odd_pair_distance(5, true, true, false, OddCaseTable::Operative).unwrap();
        assert_eq!(op.predicted, int(2));
        let stated = odd_pair_distance(5, true, true, false, OddCaseTable::AsStated).unwrap();
        assert_eq!(stated.predicted, frac(3, 2));
        assert!(!stated.is_integral());
        let none = odd_pair_distance(5, false, false, false, OddCaseTable::AsStated).unwrap();
        assert_eq!(none.predicted, int(4));
        assert!(odd_pair_distance(4, true, true, false, OddCaseTable::Operative).is_err());
    }

    #[test]
    fn even_bounds() {
        assert_eq!(cor5_pair_bound(p(2, 1)).unwrap(), int(8));
        assert_eq!(cor5_pair_bound(p(6, 4)).unwrap(), int(39));
        assert_eq!(cor5_pair_bound(p(4, 5)).unwrap(), int(33));
        assert_eq!(thm6_even_bound(p(2, 1)).unwrap(), int(16));
        assert_eq!(thm6_even_bound(p(4, 5)).unwrap(), int(264));
        assert_eq!(thm6_even_bound(p(2, 2)).unwrap(), int(22));
        assert!(thm6_even_bound(p(3, 2)).is_err());
        assert!(cor5_pair_bound(p(3, 2)).is_err());
    }

    #[test]
    fn odd_pair_and_corner_bounds() {
        assert_eq!(cor8_pair_bound(p(3, 2)).unwrap(), int(9));
        assert_eq!(cor8_pair_bound(p(5, 5)).unwrap(), int(36));
        assert_eq!(cor8_pair_bound(p(5, 4)).unwrap(), int(29));
        assert_eq!(thm14_bound(p(5, 5)).unwrap(), int(90));
        assert_eq!(thm14_bound(p(3, 2)).unwrap(), int(28));
        assert_eq!(thm14_bound(p(3, 1)).unwrap(), int(19));
    }

    #[test]
    fn upper_rows_forms_disagree() {
        let g = thm9_gstar_bound(p(5, 5)).unwrap();
        assert_eq!(g.statement, frac(115, 2));
        assert_eq!(g.expanded, g.statement);
        assert_eq!(g.closing_line, int(370));
        assert_ne!(g.pair_sum, g.statement);
        let g = thm9_gstar_bound(p(3, 1)).unwrap();
        assert_eq!(g.statement, frac(9, 2));
    }

    #[test]
    fn span_components() {
        assert_eq!(cor13_span_f3(p(5, 5)).unwrap(), int(75));
        assert_eq!(span_f1(p(5, 5)).unwrap(), int(39));
        assert_eq!(span_f2(p(5, 5)).unwrap(), int(36));
        assert_eq!(span_f4(p(3, 2)).unwrap(), int(4));
        assert!(cor13_span_f3(p(5, 1)).is_err());
    }

    #[test]
    fn last_row_and_combined() {
        assert_eq!(thm16_bound(p(5, 5)).unwrap().statement, int(80));
        assert_eq!(thm16_bound(p(5, 4)).unwrap().statement, int(66));
        assert_eq!(thm16_bound(p(7, 2)).unwrap().statement, int(94));
        assert!(thm16_bound(p(3, 2)).unwrap().degenerate);
        assert_eq!(thm17_bound(p(5, 5)).unwrap().statement, int(179));
        assert_eq!(thm17_bound(p(3, 2)).unwrap().statement, int(40));
        assert_eq!(thm17_bound(p(5, 1)).unwrap().statement, int(63));
        assert_eq!(thm18_odd_bound(p(5, 5)).unwrap(), int(549));
        assert_eq!(thm18_odd_bound(p(3, 1)).unwrap(), int(49));
        assert_eq!(thm18_odd_bound(p(3, 2)).unwrap(), int(70));
        assert_eq!(combined_bound(p(4, 5)).unwrap(), int(264));
        assert_eq!(combined_bound(p(5, 5)).unwrap(), int(549));
        assert_eq!(combined_bound(p(2, 1)).unwrap(), int(16));
    }

    #[test]
    fn counts() {
        let rows = vertex_count_comparison([2, 4, 5], 5).unwrap();
        assert_eq!((rows[1].product_count, rows[1].star_path_count), (96, 24));
        assert_eq!((rows[2].product_count, rows[2].star_path_count), (150, 30));
        assert!(rows.iter().all(|r| r.ratio == int(r.m as i64)));
        let rows = vertex_count_comparison([2], 1).unwrap();
        assert_eq!((rows[0].product_count, rows[0].star_path_count), (8, 4));
        assert!(vertex_count_comparison([1], 1).is_err());
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rational(&frac(115, 2)), "115/2");
        assert_eq!(format_rational(&int(-3)), "-3");
        assert_eq!(format_rational(&frac(4, 2)), "2");
    }

    #[test]
    fn tables_cover_both_parities() {
        let even = bounds_table(p(4, 5)).unwrap();
        assert!(even
            .iter()
            .any(|r| r.id == BoundId::Thm6EvenBound && r.value == int(264)));
        let odd = bounds_table(p(5, 1)).unwrap();
        assert!(odd.iter().all(|r| r.id != BoundId::DiamCor3));
        assert!(odd.iter().any(|r| r.label() == "Thm9GStar.closing_line"));
    }
}
