//! Exact covering LPs: minimize `w . x` subject to `A x >= 1`, `x >= 0`,
//! with `A` binary and `w >= 0`.
//!
//! The solver runs the primal simplex method with Bland's rule on the dual
//! packing program
//!
//! ```text
//! maximize 1 . y   subject to   A^T y <= w,  y >= 0
//! ```
//!
//! whose slack basis is feasible because `w >= 0`, so no artificial phase is
//! needed. At termination the covering solution is read off the reduced
//! costs of the slack columns. It is the basic solution complementary to the
//! final packing basis, hence a vertex of `{x >= 0 : A x >= 1}`, and the two
//! objective values coincide exactly.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::covmat::VisibilityMatrix;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct CoveringLp<T> {
    rows: Vec<Vec<bool>>,
    weights: Vec<T>,
}

impl<T: Scalar> CoveringLp<T> {
    pub fn new(rows: Vec<Vec<bool>>, weights: Vec<T>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != weights.len() {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries but there are {} weights",
                    row.len(),
                    weights.len()
                )));
            }
            if !row.iter().any(|&e| e) {
                return Err(Error::EmptyRow(i));
            }
        }
        if let Some(index) = weights.iter().position(|w| scalar::negative(w)) {
            return Err(Error::NegativeCost { index, value: weights[index].to_string() });
        }
        Ok(CoveringLp { rows, weights })
    }

    pub fn from_matrix(matrix: &VisibilityMatrix<T>, weights: Vec<T>) -> Result<Self> {
        Self::new(matrix.entries().to_vec(), weights)
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_vars(&self) -> usize {
        self.weights.len()
    }

    /// Same LP with one more variable.
    pub fn with_column(&self, column: &[bool], weight: T) -> Result<Self> {
        let rows = self
            .rows
            .iter()
            .zip(column)
            .map(|(r, &c)| {
                let mut r = r.clone();
                r.push(c);
                r
            })
            .collect();
        let mut weights = self.weights.clone();
        weights.push(weight);
        Self::new(rows, weights)
    }

    /// Same LP with one more covering constraint.
    pub fn with_row(&self, row: Vec<bool>) -> Result<Self> {
        let mut rows = self.rows.clone();
        rows.push(row);
        Self::new(rows, self.weights.clone())
    }

    pub fn row_activity(&self, values: &[T]) -> Vec<T> {
        self.rows
            .iter()
            .map(|row| scalar::sum(row.iter().zip(values).filter(|(&e, _)| e).map(|(_, v)| v)))
            .collect()
    }

    pub fn objective_of(&self, values: &[T]) -> T {
        self.weights
            .iter()
            .zip(values)
            .fold(T::zero(), |acc, (w, v)| acc + w.clone() * v.clone())
    }

    pub fn is_feasible(&self, values: &[T]) -> bool {
        values.len() == self.n_vars()
            && values.iter().all(|v| !scalar::negative(v))
            && self.row_activity(values).iter().all(|a| a >= &T::one())
    }

    /// Whether `duals` is feasible for the packing program.
    pub fn is_dual_feasible(&self, duals: &[T]) -> bool {
        if duals.len() != self.n_rows() || duals.iter().any(|y| scalar::negative(y)) {
            return false;
        }
        (0..self.n_vars()).all(|j| {
            let load = scalar::sum(self.rows.iter().zip(duals).filter(|(r, _)| r[j]).map(|(_, y)| y));
            load <= self.weights[j]
        })
    }

    /// Whether `values` is a vertex of `{x >= 0 : A x >= 1}`: feasible, with
    /// the tight constraints spanning the whole variable space.
    pub fn is_vertex(&self, values: &[T]) -> bool {
        if !self.is_feasible(values) {
            return false;
        }
        let n = self.n_vars();
        let activity = self.row_activity(values);
        let mut tight: Vec<Vec<T>> = Vec::new();
        for (row, a) in self.rows.iter().zip(&activity) {
            if a == &T::one() {
                tight.push(row.iter().map(|&e| if e { T::one() } else { T::zero() }).collect());
            }
        }
        for (j, v) in values.iter().enumerate() {
            if v.is_zero() {
                tight.push((0..n).map(|k| if k == j { T::one() } else { T::zero() }).collect());
            }
        }
        rank(tight, n) == n
    }

    /// Plain-text form: `min` followed by the weights, then one
    /// `<coefficients> >= 1` line per constraint.
    pub fn to_text(&self) -> String {
        let mut out = String::from("min");
        for w in &self.weights {
            write!(out, " {w}").unwrap();
        }
        out.push('\n');
        for row in &self.rows {
            let coeffs: Vec<&str> = row.iter().map(|&e| if e { "1" } else { "0" }).collect();
            writeln!(out, "{} >= 1", coeffs.join(" ")).unwrap();
        }
        out
    }

    pub fn solve(&self) -> FractionalSolution<T> {
        solve_covering_lp(self)
    }
}

impl<T: Scalar + std::str::FromStr> CoveringLp<T> {
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, head) = lines.next().ok_or(Error::LpText { line: 1, message: "empty input".into() })?;
        let mut head_tokens = head.split_whitespace();
        if head_tokens.next() != Some("min") {
            return Err(Error::LpText { line: 1, message: "expected `min`".into() });
        }
        let weights = head_tokens
            .map(|t| t.parse::<T>().map_err(|_| Error::LpText { line: 1, message: format!("bad weight {t:?}") }))
            .collect::<Result<Vec<T>>>()?;
        let mut rows = Vec::new();
        for (idx, line) in lines {
            let lineno = idx + 1;
            let (lhs, rhs) = line
                .split_once(">=")
                .ok_or(Error::LpText { line: lineno, message: "missing `>=`".into() })?;
            if rhs.trim() != "1" {
                return Err(Error::LpText { line: lineno, message: "right-hand side must be 1".into() });
            }
            let row = lhs
                .split_whitespace()
                .map(|t| match t {
                    "0" => Ok(false),
                    "1" => Ok(true),
                    other => Err(Error::LpText { line: lineno, message: format!("bad coefficient {other:?}") }),
                })
                .collect::<Result<Vec<bool>>>()?;
            rows.push(row);
        }
        Self::new(rows, weights)
    }
}

/// An optimal covering solution together with its optimality certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct FractionalSolution<T> {
    pub values: Vec<T>,
    pub objective: T,
    /// Optimal packing solution, one value per covering row.
    pub duals: Vec<T>,
    pub is_basic: bool,
}

impl<T: Scalar> FractionalSolution<T> {
    /// Every value exactly 0 or 1.
    pub fn is_integral(&self) -> bool {
        is_integral(&self.values)
    }

    /// Primal and dual feasibility with equal objectives, checked exactly.
    pub fn certify(&self, lp: &CoveringLp<T>) -> bool {
        lp.is_feasible(&self.values)
            && lp.is_dual_feasible(&self.duals)
            && lp.objective_of(&self.values) == self.objective
            && scalar::sum(&self.duals) == self.objective
    }
}

pub fn is_integral<T: Scalar>(values: &[T]) -> bool {
    values.iter().all(|v| v.is_zero() || v.is_one())
}

/// Optimal basic solution by Bland's-rule simplex on the packing dual.
pub fn solve_covering_lp<T: Scalar>(lp: &CoveringLp<T>) -> FractionalSolution<T> {
    let m = lp.n_vars();
    let p = lp.n_rows();
    let width = p + m;

    // Row j: sum_i A[i][j] y_i + s_j = w_j.
    let mut tab: Vec<Vec<T>> = (0..m)
        .map(|j| {
            let mut row: Vec<T> = lp.rows.iter().map(|r| if r[j] { T::one() } else { T::zero() }).collect();
            row.extend((0..m).map(|k| if k == j { T::one() } else { T::zero() }));
            row
        })
        .collect();
    let mut rhs: Vec<T> = lp.weights.clone();
    let mut basis: Vec<usize> = (p..width).collect();
    let mut reduced: Vec<T> = (0..width).map(|k| if k < p { T::one() } else { T::zero() }).collect();
    let mut objective = T::zero();

    while let Some(enter) = reduced.iter().position(|r| scalar::positive(r)) {
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !scalar::positive(&tab[i][enter]) {
                continue;
            }
            leave = match leave {
                None => Some(i),
                Some(best) => {
                    let lhs = rhs[i].clone() * tab[best][enter].clone();
                    let rhs_best = rhs[best].clone() * tab[i][enter].clone();
                    match scalar::cmp(&lhs, &rhs_best) {
                        Ordering::Less => Some(i),
                        Ordering::Equal if basis[i] < basis[best] => Some(i),
                        _ => Some(best),
                    }
                }
            };
        }
        // Every packing variable appears in some row with coefficient one,
        // so the packing program is bounded.
        let r = leave.expect("packing dual of a covering LP is bounded");

        let pivot = tab[r][enter].clone();
        for v in tab[r].iter_mut() {
            *v = v.clone() / pivot.clone();
        }
        rhs[r] = rhs[r].clone() / pivot;
        let pivot_row = tab[r].clone();
        let pivot_rhs = rhs[r].clone();
        for i in 0..m {
            if i == r || tab[i][enter].is_zero() {
                continue;
            }
            let factor = tab[i][enter].clone();
            for (v, pv) in tab[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = v.clone() - factor.clone() * pv.clone();
                }
            }
            rhs[i] = rhs[i].clone() - factor * pivot_rhs.clone();
        }
        let factor = reduced[enter].clone();
        for (v, pv) in reduced.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v = v.clone() - factor.clone() * pv.clone();
            }
        }
        objective = objective + factor * pivot_rhs;
        basis[r] = enter;
    }

    let mut duals = vec![T::zero(); p];
    for (i, &b) in basis.iter().enumerate() {
        if b < p {
            duals[b] = rhs[i].clone();
        }
    }
    let values = (0..m).map(|j| -reduced[p + j].clone()).collect();

    FractionalSolution { values, objective, duals, is_basic: true }
}

/// Rank of a dense matrix by exact Gaussian elimination.
fn rank<T: Scalar>(mut rows: Vec<Vec<T>>, n_cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..n_cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let head = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone() / head[col].clone();
            for (v, h) in row.iter_mut().zip(&head).skip(col) {
                *v = v.clone() - f.clone() * h.clone();
            }
        }
        rank += 1;
    }
    rank
}
