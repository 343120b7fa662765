//! Point-by-guard visibility incidence matrices.
//!
//! Left-visibility matrices (every column a `Left` guard) become free of the
//! `[[1, 1], [1, 0]]` pattern once points are ordered left to right and
//! guards right to left; right-visibility matrices use the mirror order.
//! Matrices mixing left and right columns split into two one-sided parts
//! whose row mixtures keep that property.

use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{Side, Terrain, TerrainPoint};
use crate::scalar::Scalar;

/// Indices into the guard list, per point.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VisibilitySets {
    /// Guards that see the point.
    pub all: Vec<usize>,
    /// Guards strictly left of the point that see it.
    pub left: Vec<usize>,
    /// Guards strictly right of the point that see it.
    pub right: Vec<usize>,
}

pub fn visibility_sets<T: Scalar>(
    terrain: &Terrain<T>,
    points: &[TerrainPoint<T>],
    guards: &[TerrainPoint<T>],
) -> Vec<VisibilitySets> {
    points
        .iter()
        .map(|p| {
            let mut sets = VisibilitySets::default();
            for (j, g) in guards.iter().enumerate() {
                if !terrain.sees(g, p) {
                    continue;
                }
                sets.all.push(j);
                if g.x() < p.x() {
                    sets.left.push(j);
                } else if g.x() > p.x() {
                    sets.right.push(j);
                }
            }
            sets
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Column<T> {
    pub guard: TerrainPoint<T>,
    pub side: Side,
}

impl<T> Column<T> {
    pub fn new(guard: TerrainPoint<T>, side: Side) -> Self {
        Column { guard, side }
    }
}

/// Rows `(i1, i2)` and columns `(j1, j2)` carrying `[[1, 1], [1, 0]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Forbidden {
    pub rows: (usize, usize),
    pub cols: (usize, usize),
}

/// Scans for the `[[1, 1], [1, 0]]` pattern with `i1 < i2`, `j1 < j2`.
pub fn find_forbidden_submatrix(entries: &[Vec<bool>]) -> Option<Forbidden> {
    for i1 in 0..entries.len() {
        for i2 in i1 + 1..entries.len() {
            let (top, bottom) = (&entries[i1], &entries[i2]);
            let mut shared: Option<usize> = None;
            for j in 0..top.len() {
                if !top[j] {
                    continue;
                }
                match (shared, bottom[j]) {
                    (None, true) => shared = Some(j),
                    (Some(j1), false) => return Some(Forbidden { rows: (i1, i2), cols: (j1, j) }),
                    _ => {}
                }
            }
        }
    }
    None
}

/// Parses a 0/1 grid, one row per line. Blank lines are skipped.
pub fn parse_grid(text: &str) -> Result<Vec<Vec<bool>>> {
    let rows: Vec<Vec<bool>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|line| {
            line.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(Error::Shape(format!("unexpected character {other:?} in grid"))),
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    if let Some(first) = rows.first() {
        if rows.iter().any(|r| r.len() != first.len()) {
            return Err(Error::Shape("grid rows have different lengths".into()));
        }
    }
    Ok(rows)
}

/// Binary point-by-guard matrix. Labels and original positions travel with
/// rows and columns through every permutation.
#[derive(Clone, Debug, PartialEq)]
pub struct VisibilityMatrix<T> {
    entries: Vec<Vec<bool>>,
    rows: Vec<TerrainPoint<T>>,
    cols: Vec<Column<T>>,
    row_ids: Vec<usize>,
    col_ids: Vec<usize>,
}

impl<T: Scalar> VisibilityMatrix<T> {
    pub fn build(terrain: &Terrain<T>, points: &[TerrainPoint<T>], cols: Vec<Column<T>>) -> Self {
        let entries = points
            .iter()
            .map(|p| cols.iter().map(|c| terrain.covers(&c.guard, c.side, p)).collect())
            .collect();
        VisibilityMatrix {
            entries,
            rows: points.to_vec(),
            row_ids: (0..points.len()).collect(),
            col_ids: (0..cols.len()).collect(),
            cols,
        }
    }

    /// All columns facing the same way.
    pub fn build_one_sided(terrain: &Terrain<T>, points: &[TerrainPoint<T>], guards: &[TerrainPoint<T>], side: Side) -> Self {
        let cols = guards.iter().map(|g| Column::new(g.clone(), side)).collect();
        Self::build(terrain, points, cols)
    }

    pub fn from_parts(entries: Vec<Vec<bool>>, rows: Vec<TerrainPoint<T>>, cols: Vec<Column<T>>) -> Result<Self> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::Shape(format!(
                "{} labelled rows and {} labelled columns do not match the entries",
                rows.len(),
                cols.len()
            )));
        }
        Ok(VisibilityMatrix {
            entries,
            row_ids: (0..rows.len()).collect(),
            col_ids: (0..cols.len()).collect(),
            rows,
            cols,
        })
    }

    pub fn entries(&self) -> &[Vec<bool>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[TerrainPoint<T>] {
        &self.rows
    }

    pub fn cols(&self) -> &[Column<T>] {
        &self.cols
    }

    /// Position of each current row in the matrix as originally built.
    pub fn row_ids(&self) -> &[usize] {
        &self.row_ids
    }

    pub fn col_ids(&self) -> &[usize] {
        &self.col_ids
    }

    pub fn n_rows(&self) -> usize {
        self.entries.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn count_ones(&self) -> usize {
        self.entries.iter().map(|r| r.iter().filter(|&&b| b).count()).sum()
    }

    /// New matrix whose `k`-th row is row `row_order[k]` of `self`, likewise for columns.
    pub fn permuted(&self, row_order: &[usize], col_order: &[usize]) -> Self {
        VisibilityMatrix {
            entries: row_order
                .iter()
                .map(|&i| col_order.iter().map(|&j| self.entries[i][j]).collect())
                .collect(),
            rows: row_order.iter().map(|&i| self.rows[i].clone()).collect(),
            cols: col_order.iter().map(|&j| self.cols[j].clone()).collect(),
            row_ids: row_order.iter().map(|&i| self.row_ids[i]).collect(),
            col_ids: col_order.iter().map(|&j| self.col_ids[j]).collect(),
        }
    }

    /// Common side of all columns, if there is one.
    pub fn uniform_side(&self) -> Option<Side> {
        let first = self.cols.first()?.side;
        self.cols.iter().all(|c| c.side == first).then_some(first)
    }

    /// Puts a one-sided matrix into greedy standard form.
    pub fn sort_greedy_standard(&self) -> Result<Self> {
        let side = match self.cols.is_empty() {
            true => Side::Left,
            false => self.uniform_side().ok_or(Error::MixedSides)?,
        };
        let mut row_order: Vec<usize> = (0..self.n_rows()).collect();
        let mut col_order: Vec<usize> = (0..self.n_cols()).collect();
        match side {
            Side::Left => {
                row_order.sort_by(|&a, &b| self.rows[a].cmp_x(&self.rows[b]));
                col_order.sort_by(|&a, &b| self.cols[b].guard.cmp_x(&self.cols[a].guard));
            }
            Side::Right => {
                row_order.sort_by(|&a, &b| self.rows[b].cmp_x(&self.rows[a]));
                col_order.sort_by(|&a, &b| self.cols[a].guard.cmp_x(&self.cols[b].guard));
            }
            Side::Both => return Err(Error::MixedSides),
        }
        Ok(self.permuted(&row_order, &col_order))
    }

    pub fn find_forbidden_submatrix(&self) -> Option<Forbidden> {
        find_forbidden_submatrix(&self.entries)
    }

    /// Splits the columns into the left group and the right group.
    pub fn two_separable_decompose(&self) -> Result<Decomposition<T>> {
        if let Some(j) = self.cols.iter().position(|c| c.side == Side::Both) {
            return Err(Error::UnpartitionedColumn(j));
        }
        let keep = |side: Side| {
            let mut part = self.clone();
            for row in &mut part.entries {
                for (j, e) in row.iter_mut().enumerate() {
                    *e &= self.cols[j].side == side;
                }
            }
            part
        };
        Ok(Decomposition { left_part: keep(Side::Left), right_part: keep(Side::Right) })
    }
}

impl<T> fmt::Display for VisibilityMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            for &e in row {
                f.write_str(if e { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `A = A1 + A2` where `A1` keeps the left-guard columns and `A2` the
/// right-guard columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition<T> {
    pub left_part: VisibilityMatrix<T>,
    pub right_part: VisibilityMatrix<T>,
}

impl<T: Scalar> Decomposition<T> {
    /// Entrywise sum of the parts, or `None` if their supports overlap.
    pub fn recombine(&self) -> Option<Vec<Vec<bool>>> {
        self.left_part
            .entries
            .iter()
            .zip(&self.right_part.entries)
            .map(|(l, r)| l.iter().zip(r).map(|(&a, &b)| if a && b { None } else { Some(a || b) }).collect())
            .collect()
    }

    /// Row `i` taken from the left part when `from_left[i]`, else from the right part.
    pub fn mixture(&self, from_left: &[bool]) -> VisibilityMatrix<T> {
        let mut mixed = self.left_part.clone();
        for (i, &left) in from_left.iter().enumerate() {
            if !left {
                mixed.entries[i] = self.right_part.entries[i].clone();
            }
        }
        mixed
    }

    /// The mixture arranged as a block-diagonal matrix: left-part rows
    /// (ascending) against left columns (descending), then right-part rows
    /// (descending) against right columns (ascending).
    pub fn block_form(&self, from_left: &[bool]) -> VisibilityMatrix<T> {
        let mixed = self.mixture(from_left);
        let by_x = |a: &usize, b: &usize| mixed.rows[*a].cmp_x(&mixed.rows[*b]);
        let mut top: Vec<usize> = (0..mixed.n_rows()).filter(|&i| from_left[i]).collect();
        let mut bottom: Vec<usize> = (0..mixed.n_rows()).filter(|&i| !from_left[i]).collect();
        top.sort_by(by_x);
        bottom.sort_by(|a, b| by_x(b, a));

        let col_x = |a: &usize, b: &usize| mixed.cols[*a].guard.cmp_x(&mixed.cols[*b].guard);
        let mut left_cols: Vec<usize> = (0..mixed.n_cols()).filter(|&j| mixed.cols[j].side == Side::Left).collect();
        let mut right_cols: Vec<usize> = (0..mixed.n_cols()).filter(|&j| mixed.cols[j].side == Side::Right).collect();
        left_cols.sort_by(|a, b| col_x(b, a));
        right_cols.sort_by(col_x);

        top.extend(bottom);
        left_cols.extend(right_cols);
        mixed.permuted(&top, &left_cols)
    }

    /// A forbidden pattern in the block form of the given mixture, if any.
    pub fn check_mixture(&self, from_left: &[bool]) -> Option<Forbidden> {
        self.block_form(from_left).find_forbidden_submatrix()
    }
}
