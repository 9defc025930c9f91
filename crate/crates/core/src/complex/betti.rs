use std::collections::BTreeMap;
use std::fmt;

use super::ChainComplex;

/// Graded Betti numbers: `(homological index, degree) -> count`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    len: usize,
    counts: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn new(len: usize, counts: BTreeMap<(usize, i64), usize>) -> Self {
        BettiTable { len, counts }
    }

    /// Index of the last column.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn get(&self, i: usize, degree: i64) -> usize {
        self.counts.get(&(i, degree)).copied().unwrap_or(0)
    }

    pub fn totals(&self) -> Vec<usize> {
        let mut t = vec![0; self.len + 1];
        for (&(i, _), &n) in &self.counts {
            t[i] += n;
        }
        t
    }

    pub fn counts(&self) -> &BTreeMap<(usize, i64), usize> {
        &self.counts
    }

    /// Totals read the same backwards.
    pub fn is_palindromic(&self) -> bool {
        let t = self.totals();
        t.iter().eq(t.iter().rev())
    }
}

/// Grid layout: a header of homological indices, a `total:` row, then one
/// row per `degree - index` with `.` for zero.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ncols = self.len + 1;
        let rows: Vec<i64> = match (
            self.counts.keys().map(|&(i, d)| d - i as i64).min(),
            self.counts.keys().map(|&(i, d)| d - i as i64).max(),
        ) {
            (Some(lo), Some(hi)) => (lo..=hi).collect(),
            _ => Vec::new(),
        };
        let mut grid: Vec<(String, Vec<String>)> = Vec::new();
        grid.push((String::new(), (0..ncols).map(|i| i.to_string()).collect()));
        grid.push(("total:".into(), self.totals().iter().map(|n| n.to_string()).collect()));
        for &r in &rows {
            let cells = (0..ncols)
                .map(|i| match self.get(i, r + i as i64) {
                    0 => ".".to_string(),
                    n => n.to_string(),
                })
                .collect();
            grid.push((format!("{r}:"), cells));
        }
        let label_w = grid.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..ncols)
            .map(|c| grid.iter().map(|(_, cells)| cells[c].len()).max().unwrap_or(1))
            .collect();
        for (label, cells) in &grid {
            let mut line = format!("{label:>label_w$}");
            for (c, cell) in cells.iter().enumerate() {
                line.push(' ');
                line.push_str(&format!("{cell:>w$}", w = widths[c]));
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

pub fn betti(c: &ChainComplex) -> BettiTable {
    let mut counts = BTreeMap::new();
    for i in 0..=c.len() {
        for &t in c.module(i) {
            *counts.entry((i, t)).or_insert(0) += 1;
        }
    }
    BettiTable::new(c.len(), counts)
}
