use serde::{Deserialize, Serialize};

use super::Tableau;
use crate::error::{Error, Result};
use crate::words::Letter;

/// A skew tableau: row `i` has `inner_offset[i]` empty cells followed by the
/// entries `rows[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewConfiguration {
    pub inner_offset: Vec<usize>,
    pub rows: Vec<Vec<Letter>>,
}

impl SkewConfiguration {
    /// A straight-shape tableau viewed as a skew tableau with empty inner shape.
    pub fn straight(t: &Tableau) -> Self {
        SkewConfiguration {
            inner_offset: vec![0; t.num_rows()],
            rows: t.rows().to_vec(),
        }
    }

    /// `P(u)` southwest of `P(w)`, separated by an empty rectangle whose width is
    /// the first row of `P(u)` and whose height is the number of rows of `P(w)`.
    /// Rectifying it gives `P(uw)`.
    pub fn product(p_u: &Tableau, p_w: &Tableau) -> Self {
        let width = p_u.rows().first().map_or(0, Vec::len);
        let mut inner_offset = Vec::new();
        let mut rows = Vec::new();
        for r in p_w.rows() {
            inner_offset.push(width);
            rows.push(r.clone());
        }
        for r in p_u.rows() {
            inner_offset.push(0);
            rows.push(r.clone());
        }
        SkewConfiguration { inner_offset, rows }
    }

    fn outer(&self, i: usize) -> usize {
        self.inner_offset[i] + self.rows[i].len()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSkew(msg));
        if self.inner_offset.len() != self.rows.len() {
            return bad("offset and row counts differ".into());
        }
        for i in 0..self.rows.len() {
            let row = &self.rows[i];
            if row.contains(&0) {
                return bad("entry 0".into());
            }
            if row.windows(2).any(|p| p[0] > p[1]) {
                return bad(format!("row {} is not weakly increasing", i + 1));
            }
            if i == 0 {
                continue;
            }
            if self.inner_offset[i] > self.inner_offset[i - 1] {
                return bad(format!("inner shape is not a partition at row {}", i + 1));
            }
            if self.outer(i) > self.outer(i - 1) {
                return bad(format!("outer shape is not a partition at row {}", i + 1));
            }
            let above_start = self.inner_offset[i - 1];
            for (k, &b) in row.iter().enumerate() {
                let c = self.inner_offset[i] + k;
                if c >= above_start && c < self.outer(i - 1) && self.rows[i - 1][c - above_start] >= b {
                    return bad(format!("column {} is not strictly increasing", c + 1));
                }
            }
        }
        Ok(())
    }
}

/// Rectifies a skew tableau by forward slides. Inner cells are vacated from
/// the lowest row that still has one, right to left within that row.
pub fn jdt_rectify(cfg: &SkewConfiguration) -> Result<Tableau> {
    cfg.validate()?;
    let mut offset = cfg.inner_offset.clone();
    let mut grid: Vec<Vec<Option<Letter>>> = cfg
        .rows
        .iter()
        .zip(&offset)
        .map(|(row, &off)| {
            std::iter::repeat_n(None, off)
                .chain(row.iter().map(|&a| Some(a)))
                .collect()
        })
        .collect();

    while let Some(r) = offset.iter().rposition(|&o| o > 0) {
        offset[r] -= 1;
        let (mut i, mut j) = (r, offset[r]);
        loop {
            let right = grid[i].get(j + 1).copied().flatten();
            let below = grid.get(i + 1).and_then(|row| row.get(j)).copied().flatten();
            match (right, below) {
                (None, None) => {
                    grid[i].truncate(j);
                    break;
                }
                (Some(x), Some(y)) if y > x => {
                    grid[i][j] = Some(x);
                    j += 1;
                }
                (Some(x), None) => {
                    grid[i][j] = Some(x);
                    j += 1;
                }
                (_, Some(y)) => {
                    grid[i][j] = Some(y);
                    i += 1;
                }
            }
            grid[i][j] = None;
        }
    }

    while grid.last().is_some_and(Vec::is_empty) {
        grid.pop();
    }
    let rows = grid
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|a| a.expect("rectified cells are filled"))
                .collect()
        })
        .collect();
    Ok(Tableau::from_rows_unchecked(rows))
}
