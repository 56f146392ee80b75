//! Dense matrices over Q_p with valuation-pivoted Gaussian elimination.
//!
//! Pivoting always selects the entry of minimal valuation in the column,
//! which keeps precision loss bounded by the valuation budget of the
//! determinant.

use super::context::PadicContext;
use super::number::{PadicNumber, Valuation};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct PadicMatrix {
    ctx: PadicContext,
    rows: usize,
    cols: usize,
    entries: Vec<PadicNumber>,
}

impl PadicMatrix {
    pub fn new(ctx: PadicContext, rows: usize, cols: usize, entries: Vec<PadicNumber>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        if entries.iter().any(|e| e.context() != ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(PadicMatrix {
            ctx,
            rows,
            cols,
            entries,
        })
    }

    pub fn identity(ctx: PadicContext, n: usize) -> Self {
        let mut entries = vec![PadicNumber::zero(ctx); n * n];
        for i in 0..n {
            entries[i * n + i] = PadicNumber::one(ctx);
        }
        PadicMatrix {
            ctx,
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &PadicNumber {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: PadicNumber) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> PadicMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.at(i, j).clone());
            }
        }
        PadicMatrix {
            ctx: self.ctx,
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul_vec(&self, v: &[PadicNumber]) -> Result<Vec<PadicNumber>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = PadicNumber::zero(self.ctx);
            for j in 0..self.cols {
                acc = acc.try_add(&self.at(i, j).try_mul(&v[j])?)?;
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Determinant by elimination with min-valuation pivoting.
    pub fn det(&self) -> Result<PadicNumber> {
        assert_eq!(self.rows, self.cols, "determinant of a square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = PadicNumber::one(self.ctx);
        for col in 0..n {
            let pivot = match m.pivot_row(col, col) {
                Some(r) => r,
                None => return Ok(PadicNumber::zero(self.ctx)),
            };
            if pivot != col {
                m.swap_rows(pivot, col);
                det = det.try_neg()?;
            }
            let pv = m.at(col, col).clone();
            det = det.try_mul(&pv)?;
            for r in (col + 1)..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).try_div(&pv)?;
                for c in col..n {
                    let upd = m.at(r, c).try_sub(&factor.try_mul(m.at(col, c))?)?;
                    m.set(r, c, upd);
                }
            }
        }
        Ok(det)
    }

    /// Solves A x = rhs for square A that is nonsingular at working precision.
    pub fn solve(&self, rhs: &[PadicNumber]) -> Result<Vec<PadicNumber>> {
        assert_eq!(self.rows, self.cols, "solve needs a square system");
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "rhs of length {} against {} rows",
                rhs.len(),
                self.rows
            )));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut b: Vec<PadicNumber> = rhs.to_vec();
        for col in 0..n {
            let pivot = m
                .pivot_row(col, col)
                .ok_or(Error::SingularToPrecision { column: col })?;
            if pivot != col {
                m.swap_rows(pivot, col);
                b.swap(pivot, col);
            }
            let pv = m.at(col, col).clone();
            for r in (col + 1)..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).try_div(&pv)?;
                for c in col..n {
                    let upd = m.at(r, c).try_sub(&factor.try_mul(m.at(col, c))?)?;
                    m.set(r, c, upd);
                }
                b[r] = b[r].try_sub(&factor.try_mul(&b[col])?)?;
            }
        }
        // back substitution
        let mut x = vec![PadicNumber::zero(self.ctx); n];
        for col in (0..n).rev() {
            let mut acc = b[col].clone();
            for c in (col + 1)..n {
                acc = acc.try_sub(&m.at(col, c).try_mul(&x[c])?)?;
            }
            x[col] = acc.try_div(m.at(col, col))?;
        }
        Ok(x)
    }

    /// Row index minimizing the valuation in `col`, at or below `from`.
    /// `None` when the whole column is zero to precision.
    fn pivot_row(&self, from: usize, col: usize) -> Option<usize> {
        let mut best: Option<(usize, i64)> = None;
        for r in from..self.rows {
            if let Valuation::Finite(v) = self.at(r, col).valuation() {
                if best.map(|(_, bv)| v < bv).unwrap_or(true) {
                    best = Some((r, v));
                }
            }
        }
        best.map(|(r, _)| r)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}
