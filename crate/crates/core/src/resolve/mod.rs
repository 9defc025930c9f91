//! Minimal free resolutions, Koszul complexes and the Pfaffian complex of an
//! odd skew matrix.

mod pfaffian;

#[cfg(test)]
mod tests;

use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::gb::{minimalize_columns, syzygies, FreeModuleMap, Ideal};
use crate::ring::Polynomial;

pub use pfaffian::{buchsbaum_eisenbud_complex, pfaffian, SkewMatrix};

/// Minimal graded free resolution of `R/I` by iterated minimal syzygies.
pub fn minimal_free_resolution(i: &Ideal) -> Result<ChainComplex> {
    let ring = i.ring();
    if i.is_zero() {
        return Ok(ChainComplex::free(ring, vec![0]));
    }
    let mut maps = vec![minimalize_columns(&i.as_row())?];
    loop {
        let next = syzygies(maps.last().unwrap())?;
        if next.cols() == 0 {
            break;
        }
        maps.push(next);
    }
    ChainComplex::from_differentials(ring, vec![0], maps)
}

/// The Koszul complex on `seq`. Basis elements of `F_k` are the `k`-subsets
/// of positions in colexicographic order (`{0,1}, {0,2}, {1,2}, {0,3}, ...`,
/// as Macaulay2 lists them), and
/// `d(e_S) = Σ_j (-1)^j seq[s_j] e_{S - s_j}`.
pub fn koszul_complex(seq: &[Polynomial]) -> Result<ChainComplex> {
    let Some(first) = seq.first() else {
        return Err(Error::InvalidArgument("empty sequence".into()));
    };
    let ring = first.ring().clone();
    let mut degs = Vec::with_capacity(seq.len());
    for p in seq {
        if p.ring() != &ring {
            return Err(Error::RingMismatch("sequence spans several rings".into()));
        }
        degs.push(p.homogeneous_degree().ok_or_else(|| {
            Error::Inhomogeneous(format!("`{p}` is zero or not homogeneous"))
        })?);
    }
    let n = seq.len();
    let subsets: Vec<Vec<Vec<usize>>> = (0..=n)
        .map(|k| {
            let mut s = subsets_of(n, k);
            s.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
            s
        })
        .collect();
    let twist = |s: &Vec<usize>| s.iter().map(|&j| degs[j]).sum::<i64>();
    let mut maps = Vec::with_capacity(n);
    for k in 1..=n {
        let rows = &subsets[k - 1];
        let cols = &subsets[k];
        let mut m = FreeModuleMap::zero(
            &ring,
            rows.iter().map(twist).collect(),
            cols.iter().map(twist).collect(),
            0,
        );
        for (c, s) in cols.iter().enumerate() {
            for (j, &x) in s.iter().enumerate() {
                let mut face = s.clone();
                face.remove(j);
                let r = rows.iter().position(|f| *f == face).unwrap();
                let p = if j % 2 == 0 { seq[x].clone() } else { -&seq[x] };
                m.set(r, c, p);
            }
        }
        maps.push(m);
    }
    ChainComplex::from_differentials(&ring, vec![0], maps)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets_of(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
