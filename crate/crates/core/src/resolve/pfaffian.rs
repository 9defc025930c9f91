use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::gb::FreeModuleMap;
use crate::ring::{PolyRing, Polynomial};

/// A square skew-symmetric matrix of homogeneous polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMatrix {
    ring: PolyRing,
    n: usize,
    entries: Vec<Polynomial>,
}

impl SkewMatrix {
    /// Checks `Mᵀ = -M` (so the diagonal is zero) and that entries are
    /// homogeneous.
    pub fn new(ring: &PolyRing, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("skew matrix must be square".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (&rows[i][j], &rows[j][i]);
                if a.ring() != ring {
                    return Err(Error::RingMismatch(format!("entry ({i},{j}) is over another ring")));
                }
                if *a != -b {
                    return Err(Error::InvalidArgument(format!(
                        "matrix is not skew-symmetric at ({i},{j})"
                    )));
                }
                if !a.is_zero() && !a.is_homogeneous() {
                    return Err(Error::Inhomogeneous(format!("entry ({i},{j}) = `{a}`")));
                }
            }
        }
        Ok(SkewMatrix {
            ring: ring.clone(),
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Skew matrix underlying a map; twists are ignored.
    pub fn from_map(m: &FreeModuleMap) -> Result<Self> {
        let rows = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
        Self::new(m.ring(), rows)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.n + j]
    }

    /// The skew matrix with row and column `k` removed.
    pub fn delete(&self, k: usize) -> SkewMatrix {
        let keep: Vec<usize> = (0..self.n).filter(|&i| i != k).collect();
        let entries = keep
            .iter()
            .flat_map(|&i| keep.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        SkewMatrix {
            ring: self.ring.clone(),
            n: self.n - 1,
            entries,
        }
    }
}

/// Pfaffian by expansion along the first row:
/// `Pf(M) = Σ_{j>1} (-1)^j m_{1j} Pf(M without rows/cols 1, j)` (1-based).
pub fn pfaffian(m: &SkewMatrix) -> Result<Polynomial> {
    if m.n % 2 == 1 {
        return Err(Error::InvalidArgument(format!("Pfaffian of an odd {0}x{0} matrix", m.n)));
    }
    let idx: Vec<usize> = (0..m.n).collect();
    Ok(pf_rec(m, &idx))
}

fn pf_rec(m: &SkewMatrix, idx: &[usize]) -> Polynomial {
    match idx.len() {
        0 => m.ring.one(),
        2 => m.get(idx[0], idx[1]).clone(),
        _ => {
            let mut acc = m.ring.zero();
            for j in 1..idx.len() {
                let a = m.get(idx[0], idx[j]);
                if a.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = idx[1..].iter().copied().filter(|&k| k != idx[j]).collect();
                let term = a * &pf_rec(m, &rest);
                // 0-based j odd is 1-based j even
                acc = if j % 2 == 1 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// `R <- R^n <- R^n <- R` for an odd `n x n` skew matrix `m`, with
/// `d_1 = ((-1)^(i+1) Pf(m_î))_i`, `d_2 = m` and `d_3 = d_1ᵀ`.
pub fn buchsbaum_eisenbud_complex(m: &SkewMatrix) -> Result<ChainComplex> {
    let n = m.n;
    if n % 2 == 0 {
        return Err(Error::InvalidArgument(format!("need an odd skew matrix, got {n}x{n}")));
    }
    let ring = &m.ring;
    let pf: Vec<Polynomial> = (0..n)
        .map(|i| {
            let p = pfaffian(&m.delete(i))?;
            Ok(if i % 2 == 0 { p } else { -&p })
        })
        .collect::<Result<_>>()?;
    let mut degs = Vec::with_capacity(n);
    for (i, p) in pf.iter().enumerate() {
        degs.push(p.homogeneous_degree().ok_or_else(|| {
            Error::InvalidArgument(format!("Pfaffian {} is zero or inhomogeneous", i + 1))
        })?);
    }
    // m_ij has degree top - deg(pf_i) - deg(pf_j)
    let top = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find_map(|(i, j)| m.get(i, j).homogeneous_degree().map(|d| d + degs[i] + degs[j]))
        .ok_or_else(|| Error::InvalidArgument("zero skew matrix".into()))?;
    let d1 = FreeModuleMap::new(ring, vec![0], degs.clone(), 0, pf.clone())?;
    let f2: Vec<i64> = degs.iter().map(|d| top - d).collect();
    let d2 = FreeModuleMap::new(ring, degs.clone(), f2.clone(), 0, m.entries.clone())?;
    let d3 = FreeModuleMap::new(ring, f2, vec![top], 0, pf)?;
    ChainComplex::from_differentials(ring, vec![0], vec![d1, d2, d3])
}
