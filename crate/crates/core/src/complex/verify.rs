use std::thread;

use super::ChainComplex;
use crate::gb::{groebner, ideal_equal, syzygies, FreeModuleMap, Ideal};

/// True if `d_i ∘ d_{i+1} = 0` for every `i`.
pub fn verify_complex(c: &ChainComplex) -> bool {
    (1..c.len()).all(|i| match c.d(i).compose(c.d(i + 1)) {
        Ok(m) => m.is_zero(),
        Err(_) => false,
    })
}

/// True if `c` is a free resolution of `R/m`: a complex with `F_0 = R`,
/// `im(d_1) = m`, and `ker(d_i) = im(d_{i+1})` for every `i >= 1`.
///
/// Positions are checked on up to `UNPROJ_THREADS` threads (default 1).
pub fn verify_resolution(c: &ChainComplex, m: &Ideal) -> bool {
    first_failure(c, m).is_none()
}

/// The first homological position where `c` fails to resolve `R/m`
/// (position 0 covers `F_0` and the image of `d_1`).
pub fn first_failure(c: &ChainComplex, m: &Ideal) -> Option<usize> {
    if c.ring() != m.ring() || c.module(0) != [0] {
        return Some(0);
    }
    if !verify_complex(c) {
        return Some(1);
    }
    let image = if c.is_empty() {
        Ideal::new(c.ring(), Vec::new())
    } else {
        Ideal::new(c.ring(), c.d(1).entries().to_vec())
    };
    match image.and_then(|i| ideal_equal(&i, m)) {
        Ok(true) => {}
        _ => return Some(0),
    }
    let positions: Vec<usize> = (1..=c.len()).collect();
    let threads = thread_count().min(positions.len().max(1));
    if threads <= 1 {
        return positions.into_iter().find(|&i| !exact_at(c, i));
    }
    let bad: Vec<usize> = thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let mine: Vec<usize> = positions.iter().copied().skip(t).step_by(threads).collect();
                s.spawn(move || mine.into_iter().filter(|&i| !exact_at(c, i)).collect::<Vec<_>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
    });
    bad.into_iter().min()
}

fn thread_count() -> usize {
    std::env::var("UNPROJ_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(1)
}

/// `ker(d_i) ⊆ im(d_{i+1})`; the other inclusion is `d² = 0`.
fn exact_at(c: &ChainComplex, i: usize) -> bool {
    let d = c.d(i);
    let Ok(kernel) = syzygies(d) else { return false };
    if kernel.cols() == 0 {
        return true;
    }
    if i == c.len() {
        return false;
    }
    let next: &FreeModuleMap = c.d(i + 1);
    let Ok(gb) = groebner(next) else { return false };
    kernel.columns().iter().all(|v| gb.contains(v).unwrap_or(false))
}
