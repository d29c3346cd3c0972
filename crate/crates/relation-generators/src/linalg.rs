//! Exact elimination on relation vectors.

use std::collections::BTreeSet;

use diagram_core::{Diagram, LinCombo};
use exact_algebra::{ParamPoly, Rational};
use num_traits::Zero;
use reduction_engine::Ctx;

use crate::error::RelationError;

/// Column order for elimination: the given diagrams first, every other
/// diagram afterwards in its natural order.
#[derive(Clone, Debug, Default)]
pub struct ColumnOrder {
    first: Vec<Diagram>,
}

impl ColumnOrder {
    pub fn new(first: Vec<Diagram>) -> Self {
        ColumnOrder { first }
    }

    fn pivot(&self, v: &LinCombo) -> Option<Diagram> {
        self.first
            .iter()
            .find(|d| !v.coeff(d).is_zero())
            .cloned()
            .or_else(|| v.terms().map(|(d, _)| d).find(|d| !self.first.contains(d)).cloned())
    }
}

/// `pivot_coeff * v - v[pivot] * row`, which clears the pivot column of `v`
/// without dividing.
fn eliminate(v: &LinCombo, row: &LinCombo, pivot: &Diagram, ctx: &Ctx) -> LinCombo {
    let c = row.coeff(pivot);
    let x = v.coeff(pivot);
    if x.is_zero() {
        return v.clone();
    }
    let mut out = v.scale(&c);
    out.add_combo(row, &-&x);
    out.map_coeffs(|p| ctx.normalize(p))
}

/// Fraction-free reduced row echelon form. Each returned row has a distinct
/// pivot and is zero in the pivot columns of every other row.
pub fn echelon(rows: &[LinCombo], order: &ColumnOrder, ctx: &Ctx) -> Vec<(Diagram, LinCombo)> {
    let mut done: Vec<(Diagram, LinCombo)> = Vec::new();
    for row in rows {
        let mut v = row.map_coeffs(|p| ctx.normalize(p));
        for (p, r) in &done {
            v = eliminate(&v, r, p, ctx);
        }
        let Some(pivot) = order.pivot(&v) else { continue };
        for (_, r) in done.iter_mut() {
            *r = eliminate(r, &v, &pivot, ctx);
        }
        done.push((pivot, v));
    }
    done
}

/// Remainder of `v` after elimination against `known`. The remainder is
/// zero exactly when `v` lies in the span of `known` over the fraction
/// field of the coefficient ring.
pub fn reduce_against(v: &LinCombo, known: &[LinCombo], order: &ColumnOrder, ctx: &Ctx) -> LinCombo {
    let mut out = v.map_coeffs(|p| ctx.normalize(p));
    for (p, r) in echelon(known, order, ctx) {
        out = eliminate(&out, &r, &p, ctx);
    }
    out
}

/// Multiplies `v` by `-1` if needed so that the leading term of the first
/// nonzero coefficient, in column order, is positive.
pub fn normalize_sign(v: &LinCombo, order: &ColumnOrder) -> LinCombo {
    let Some(p) = order.pivot(v) else { return v.clone() };
    match v.coeff(&p).leading_term() {
        Some((_, c)) if c < Rational::zero() => v.scale(&ParamPoly::from_int(-1)),
        _ => v.clone(),
    }
}

/// Exact rank of a matrix over `Q`.
pub fn rational_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pos) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(rank, pos);
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pivot_row[col];
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &f * p;
            }
        }
        rank += 1;
    }
    rank
}

/// A point at which relation coefficients are evaluated, in the variable
/// order `alpha, a, b, c, d, r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    pub point: [Rational; 6],
    /// Whether `a, b, c, d` must lie on the quadric.
    pub constrained: bool,
}

impl Sample {
    fn validate(&self) -> Result<(), RelationError> {
        let [alpha, a, b, c, d, r] = &self.point;
        if *alpha == exact_algebra::int(-2) {
            return Err(RelationError::ConstraintViolated("alpha = -2".into()));
        }
        if r.is_zero() {
            return Err(RelationError::ConstraintViolated("r = 0".into()));
        }
        let defect = a * a + b * b + c * c + d * d - a * b - c * d - exact_algebra::int(1);
        if self.constrained && !defect.is_zero() {
            return Err(RelationError::ConstraintViolated(format!("quadric defect {defect}")));
        }
        Ok(())
    }
}

/// Rank of the relation matrix, restricted to `columns` when given, at each
/// sample.
pub fn rank_at_specialization(
    rows: &[LinCombo],
    columns: Option<&[Diagram]>,
    samples: &[Sample],
) -> Result<Vec<usize>, RelationError> {
    let all: Vec<Diagram> = match columns {
        Some(c) => c.to_vec(),
        None => {
            rows.iter().flat_map(|r| r.terms().map(|(d, _)| d.clone())).collect::<BTreeSet<_>>().into_iter().collect()
        }
    };
    samples
        .iter()
        .map(|s| {
            s.validate()?;
            let m = rows.iter().map(|r| all.iter().map(|d| r.coeff(d).eval(&s.point)).collect()).collect();
            Ok(rational_rank(m))
        })
        .collect()
}

/// Dimension of the image of `span(subspace)` in the quotient by `rows`,
/// at each sample. Columns outside `subspace` are eliminated first.
pub fn quotient_dimension(
    rows: &[LinCombo],
    subspace: &[Diagram],
    samples: &[Sample],
) -> Result<Vec<usize>, RelationError> {
    let others: Vec<Diagram> = rows
        .iter()
        .flat_map(|r| r.terms().map(|(d, _)| d.clone()))
        .filter(|d| !subspace.contains(d))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let total = rank_at_specialization(rows, None, samples)?;
    let outside = rank_at_specialization(rows, Some(&others), samples)?;
    Ok(total.iter().zip(&outside).map(|(t, o)| subspace.len() - (t - o)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::int;

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rational_rank(vec![]), 0);
        let m = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(rational_rank(m), 1);
        let m = vec![vec![int(0), int(1)], vec![int(1), int(0)], vec![int(1), int(1)]];
        assert_eq!(rational_rank(m), 2);
    }
}
