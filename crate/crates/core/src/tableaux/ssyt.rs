use super::{partitions, Partition, Tableau};
use crate::words::Letter;

/// Extra pruning constraints applied while filling a shape.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FillBounds {
    /// `Some((k, b))`: every entry of rows `1..=k` is at most `b`.
    pub row_cap: Option<(usize, Letter)>,
    /// Every letter of `[m]` must occur at least once.
    pub full_content: bool,
}

/// Semistandard fillings of one shape with entries in `[m]`, in
/// lexicographic order of the row-major reading of the cells.
///
/// Cells are filled left to right, top to bottom; a partial filling is
/// extended only while every remaining cell can still be completed.
pub struct SsytFillings {
    row_start: Vec<usize>,
    cell_row: Vec<usize>,
    cell_col: Vec<usize>,
    col_height: Vec<usize>,
    m: Letter,
    bounds: FillBounds,
    first: Option<Letter>,
    vals: Vec<Letter>,
    counts: Vec<u32>,
    distinct: usize,
    depth: usize,
    started: bool,
    done: bool,
}

impl SsytFillings {
    pub fn new(shape: &Partition, m: Letter, bounds: FillBounds) -> Self {
        let mut row_start = Vec::with_capacity(shape.num_rows());
        let mut cell_row = Vec::new();
        let mut cell_col = Vec::new();
        for (r, &len) in shape.parts().iter().enumerate() {
            row_start.push(cell_row.len());
            for c in 0..len {
                cell_row.push(r);
                cell_col.push(c);
            }
        }
        let n = cell_row.len();
        SsytFillings {
            row_start,
            cell_row,
            cell_col,
            col_height: shape.conjugate().parts().to_vec(),
            m,
            bounds,
            first: None,
            vals: vec![0; n],
            counts: vec![0; m as usize + 1],
            distinct: 0,
            depth: 0,
            started: false,
            done: false,
        }
    }

    /// Restricts the enumeration to fillings whose top-left entry is `v`.
    pub fn with_first(mut self, v: Letter) -> Self {
        self.first = Some(v);
        self
    }

    /// Values the top-left cell can take; the natural unit for splitting work.
    pub fn first_cell_values(shape: &Partition, m: Letter, bounds: FillBounds) -> Vec<Letter> {
        if shape.size() == 0 {
            return Vec::new();
        }
        let probe = SsytFillings::new(shape, m, bounds);
        (1..=probe.hi(0).max(0) as Letter).collect()
    }

    fn lo(&self, d: usize) -> Letter {
        let (r, c) = (self.cell_row[d], self.cell_col[d]);
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(self.vals[d - 1]);
        }
        if r > 0 {
            lo = lo.max(self.vals[self.row_start[r - 1] + c] + 1);
        }
        lo
    }

    fn hi(&self, d: usize) -> i64 {
        let (r, c) = (self.cell_row[d], self.cell_col[d]);
        let below = (self.col_height[c] - 1 - r) as i64;
        let mut hi = self.m as i64 - below;
        if let Some((rows, b)) = self.bounds.row_cap {
            if r < rows {
                hi = hi.min(b as i64);
            }
        }
        hi
    }

    fn admissible(&self, d: usize, v: Letter) -> bool {
        if !self.bounds.full_content {
            return true;
        }
        let gained = usize::from(self.counts[v as usize] == 0);
        let remaining = self.vals.len() - d - 1;
        self.distinct + gained + remaining >= self.m as usize
    }

    fn assign(&mut self, d: usize, v: Letter) {
        self.vals[d] = v;
        if self.counts[v as usize] == 0 {
            self.distinct += 1;
        }
        self.counts[v as usize] += 1;
    }

    fn unassign(&mut self, d: usize) {
        let v = self.vals[d] as usize;
        self.counts[v] -= 1;
        if self.counts[v] == 0 {
            self.distinct -= 1;
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.vals.len();
        let mut cand;
        if !self.started {
            self.started = true;
            if n == 0 {
                return !(self.bounds.full_content && self.m > 0);
            }
            self.depth = 0;
            cand = self.lo(0);
        } else {
            if n == 0 {
                return false;
            }
            self.depth = n - 1;
            self.unassign(self.depth);
            cand = self.vals[self.depth] + 1;
        }
        loop {
            let d = self.depth;
            let mut hi = self.hi(d);
            if d == 0 {
                if let Some(f) = self.first {
                    cand = cand.max(f);
                    hi = hi.min(f as i64);
                }
            }
            let mut v = cand;
            while (v as i64) <= hi && !self.admissible(d, v) {
                v += 1;
            }
            if (v as i64) <= hi {
                self.assign(d, v);
                self.depth += 1;
                if self.depth == n {
                    return true;
                }
                cand = self.lo(self.depth);
            } else {
                if d == 0 {
                    return false;
                }
                self.depth -= 1;
                self.unassign(self.depth);
                cand = self.vals[self.depth] + 1;
            }
        }
    }

    fn current(&self) -> Tableau {
        let mut rows = Vec::with_capacity(self.row_start.len());
        for (r, &start) in self.row_start.iter().enumerate() {
            let end = self.row_start.get(r + 1).copied().unwrap_or(self.vals.len());
            rows.push(self.vals[start..end].to_vec());
        }
        Tableau::from_rows_unchecked(rows)
    }
}

impl Iterator for SsytFillings {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        if self.advance() {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// Every SSYT with `n` cells and entries in `[m]`, each exactly once.
/// Shapes come in decreasing lexicographic order, fillings lexicographically.
pub fn enumerate_ssyt(n: usize, m: Letter) -> impl Iterator<Item = Tableau> {
    partitions(n)
        .into_iter()
        .filter(move |shape| shape.num_rows() <= m as usize)
        .flat_map(move |shape| SsytFillings::new(&shape, m, FillBounds::default()))
}
