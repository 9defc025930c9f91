use super::ChainComplex;
use crate::gb::FreeModuleMap;
use crate::ring::Polynomial;

/// Splits off trivial summands `R -u-> R` with `u` a nonzero constant until no
/// differential has a constant entry. Pivots are taken at the lowest
/// `(row, col)` of the lowest differential.
pub fn minimize(c: &ChainComplex) -> ChainComplex {
    let mut c = c.clone();
    'outer: loop {
        for i in 1..=c.len() {
            if let Some((r, col)) = find_pivot(c.d(i)) {
                split(&mut c, i, r, col);
                continue 'outer;
            }
        }
        break;
    }
    c.trim()
}

fn find_pivot(m: &FreeModuleMap) -> Option<(usize, usize)> {
    for r in 0..m.rows() {
        for col in 0..m.cols() {
            if m.get(r, col).is_unit() {
                return Some((r, col));
            }
        }
    }
    None
}

fn split(c: &mut ChainComplex, i: usize, r: usize, col: usize) {
    let d = c.d(i).clone();
    let u_inv = d.get(r, col).constant_value().unwrap().inv().unwrap();
    let rows: Vec<usize> = (0..d.rows()).filter(|&k| k != r).collect();
    let cols: Vec<usize> = (0..d.cols()).filter(|&j| j != col).collect();
    let mut nd = d.submatrix(&rows, &cols);
    for (a, &k) in rows.iter().enumerate() {
        let dkc = d.get(k, col);
        if dkc.is_zero() {
            continue;
        }
        let f: Polynomial = dkc.scale(&u_inv);
        for (b, &j) in cols.iter().enumerate() {
            let drj = d.get(r, j);
            if drj.is_zero() {
                continue;
            }
            let v = nd.get(a, b) - &(drj * &f);
            nd.set(a, b, v);
        }
    }
    c.maps[i - 1] = nd;
    if i >= 2 {
        let prev = &c.maps[i - 2];
        let all: Vec<usize> = (0..prev.rows()).collect();
        let keep: Vec<usize> = (0..prev.cols()).filter(|&k| k != r).collect();
        c.maps[i - 2] = prev.submatrix(&all, &keep);
    }
    if i < c.maps.len() {
        let next = &c.maps[i];
        let keep: Vec<usize> = (0..next.rows()).filter(|&k| k != col).collect();
        let all: Vec<usize> = (0..next.cols()).collect();
        c.maps[i] = next.submatrix(&keep, &all);
    }
    c.modules[i - 1].remove(r);
    c.modules[i].remove(col);
}
