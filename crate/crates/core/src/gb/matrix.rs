use std::fmt;

use super::vector::Vector;
use crate::error::{Error, Result};
use crate::ring::{Coeff, PolyRing, Polynomial};

/// Homogeneous matrix between graded free modules.
///
/// `target_twists[r]` and `source_twists[c]` are the degrees of the basis
/// generators (a generator of `R(-d)` has twist `d`). Entry `(r, c)` is zero or
/// homogeneous of degree `source_twists[c] - target_twists[r] + degree`; plain
/// differentials have `degree = 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeModuleMap {
    ring: PolyRing,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
    target_twists: Vec<i64>,
    source_twists: Vec<i64>,
    degree: i64,
}

impl fmt::Debug for FreeModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "FreeModuleMap {}x{} tgt={:?} src={:?} deg={}",
            self.rows, self.cols, self.target_twists, self.source_twists, self.degree
        )?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl FreeModuleMap {
    /// Builds a map from row-major entries and checks homogeneity.
    pub fn new(
        ring: &PolyRing,
        target_twists: Vec<i64>,
        source_twists: Vec<i64>,
        degree: i64,
        entries: Vec<Polynomial>,
    ) -> Result<Self> {
        let m = Self::new_unchecked(ring, target_twists, source_twists, degree, entries)?;
        m.check_homogeneous()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        ring: &PolyRing,
        target_twists: Vec<i64>,
        source_twists: Vec<i64>,
        degree: i64,
        entries: Vec<Polynomial>,
    ) -> Result<Self> {
        let rows = target_twists.len();
        let cols = source_twists.len();
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(p) = entries.iter().find(|p| p.ring() != ring) {
            return Err(Error::RingMismatch(format!("entry {p} not in {ring}")));
        }
        Ok(FreeModuleMap {
            ring: ring.clone(),
            rows,
            cols,
            entries,
            target_twists,
            source_twists,
            degree,
        })
    }

    pub fn zero(ring: &PolyRing, target_twists: Vec<i64>, source_twists: Vec<i64>, degree: i64) -> Self {
        let n = target_twists.len() * source_twists.len();
        FreeModuleMap {
            ring: ring.clone(),
            rows: target_twists.len(),
            cols: source_twists.len(),
            entries: vec![ring.zero(); n],
            target_twists,
            source_twists,
            degree,
        }
    }

    pub fn identity(ring: &PolyRing, twists: Vec<i64>) -> Self {
        let mut m = Self::zero(ring, twists.clone(), twists, 0);
        for i in 0..m.rows {
            m.set(i, i, ring.one());
        }
        m
    }

    /// A `1 x n` map `R^n -> R` whose entries are the given homogeneous
    /// polynomials; source twists are their degrees.
    pub fn row_of(ring: &PolyRing, polys: &[Polynomial]) -> Result<Self> {
        let mut src = Vec::with_capacity(polys.len());
        for p in polys {
            let d = p.homogeneous_degree().ok_or_else(|| {
                Error::Inhomogeneous(format!("`{p}` is zero or not homogeneous"))
            })?;
            src.push(d);
        }
        Self::new(ring, vec![0], src, 0, polys.to_vec())
    }

    /// Builds a map from dense rows, inferring twists: the target is
    /// `target_twists`, source twists are read off the first nonzero entry of
    /// each column (columns that are entirely zero get twist `zero_col_twist`).
    pub fn from_rows_infer(
        ring: &PolyRing,
        target_twists: Vec<i64>,
        rows: Vec<Vec<Polynomial>>,
        zero_col_twist: i64,
    ) -> Result<Self> {
        if rows.len() != target_twists.len() {
            return Err(Error::Shape("row count does not match target twists".into()));
        }
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged matrix".into()));
        }
        let mut src = vec![zero_col_twist; cols];
        for (c, s) in src.iter_mut().enumerate() {
            for (r, row) in rows.iter().enumerate() {
                let p = &row[c];
                if p.is_zero() {
                    continue;
                }
                let d = p
                    .homogeneous_degree()
                    .ok_or_else(|| Error::Inhomogeneous(format!("entry `{p}` is not homogeneous")))?;
                *s = d + target_twists[r];
                break;
            }
        }
        Self::new(ring, target_twists, src, 0, rows.into_iter().flatten().collect())
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn target_twists(&self) -> &[i64] {
        &self.target_twists
    }

    pub fn source_twists(&self) -> &[i64] {
        &self.source_twists
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[Polynomial] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    /// Expected degree of entry `(r, c)`.
    pub fn entry_degree(&self, r: usize, c: usize) -> i64 {
        self.source_twists[c] - self.target_twists[r] + self.degree
    }

    pub fn check_homogeneous(&self) -> Result<()> {
        for r in 0..self.rows {
            for c in 0..self.cols {
                let p = self.get(r, c);
                if p.is_zero() {
                    continue;
                }
                let want = self.entry_degree(r, c);
                if p.homogeneous_degree() != Some(want) {
                    return Err(Error::Inhomogeneous(format!(
                        "entry ({r},{c}) = `{p}` should be homogeneous of degree {want}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Column `c` as a vector of the target module.
    pub fn column(&self, c: usize) -> Vector {
        Vector::from_polys((0..self.rows).map(|r| (r, self.get(r, c))))
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    /// Assembles a map from column vectors.
    pub fn from_columns(
        ring: &PolyRing,
        target_twists: Vec<i64>,
        source_twists: Vec<i64>,
        degree: i64,
        columns: &[Vector],
    ) -> Result<Self> {
        if columns.len() != source_twists.len() {
            return Err(Error::Shape("column count does not match source twists".into()));
        }
        let rows = target_twists.len();
        let mut m = Self::zero(ring, target_twists, source_twists, degree);
        for (c, v) in columns.iter().enumerate() {
            for (r, p) in v.to_polys(ring, rows).into_iter().enumerate() {
                m.set(r, c, p);
            }
        }
        m.check_homogeneous()?;
        Ok(m)
    }

    /// The dual map `Hom(target, R) -> Hom(source, R)`.
    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        FreeModuleMap {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
            target_twists: self.source_twists.iter().map(|t| -t).collect(),
            source_twists: self.target_twists.iter().map(|t| -t).collect(),
            degree: self.degree,
        }
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &FreeModuleMap) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch("composing maps over different rings".into()));
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let offset = self
            .source_twists
            .iter()
            .zip(&other.target_twists)
            .map(|(a, b)| a - b)
            .next()
            .unwrap_or(0);
        if self
            .source_twists
            .iter()
            .zip(&other.target_twists)
            .any(|(a, b)| a - b != offset)
        {
            return Err(Error::Shape("twists of the middle module disagree".into()));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = self.ring.zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                entries.push(acc);
            }
        }
        Ok(FreeModuleMap {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: other.cols,
            entries,
            target_twists: self.target_twists.clone(),
            source_twists: other.source_twists.clone(),
            degree: self.degree + other.degree - offset,
        })
    }

    fn same_shape(&self, other: &FreeModuleMap) -> Result<()> {
        if self.ring != other.ring || self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape("maps have different shapes".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &FreeModuleMap) -> Result<Self> {
        self.same_shape(other)?;
        let mut m = self.clone();
        for (a, b) in m.entries.iter_mut().zip(&other.entries) {
            *a = &*a + b;
        }
        Ok(m)
    }

    pub fn sub(&self, other: &FreeModuleMap) -> Result<Self> {
        self.same_shape(other)?;
        let mut m = self.clone();
        for (a, b) in m.entries.iter_mut().zip(&other.entries) {
            *a = &*a - b;
        }
        Ok(m)
    }

    pub fn neg(&self) -> Self {
        let mut m = self.clone();
        for a in m.entries.iter_mut() {
            *a = -&*a;
        }
        m
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut m = self.clone();
        for a in m.entries.iter_mut() {
            *a = a.scale(c);
        }
        m
    }

    /// Multiplies every entry by a polynomial of degree `d`, raising the map
    /// degree by `d`.
    pub fn mul_poly(&self, p: &Polynomial, d: i64) -> Self {
        let mut m = self.clone();
        for a in m.entries.iter_mut() {
            *a = &*a * p;
        }
        m.degree += d;
        m
    }

    /// Applies `f` entrywise, moving to `ring`.
    pub fn map_entries(
        &self,
        ring: &PolyRing,
        mut f: impl FnMut(&Polynomial) -> Result<Polynomial>,
    ) -> Result<Self> {
        let entries = self.entries.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Self::new_unchecked(
            ring,
            self.target_twists.clone(),
            self.source_twists.clone(),
            self.degree,
            entries,
        )
    }

    /// Same entries, different bookkeeping. Fails if entries no longer fit.
    pub fn with_twists(&self, target_twists: Vec<i64>, source_twists: Vec<i64>, degree: i64) -> Result<Self> {
        let m = Self::new_unchecked(&self.ring, target_twists, source_twists, degree, self.entries.clone())?;
        m.check_homogeneous()?;
        Ok(m)
    }

    /// Folds the map degree into the source twists.
    pub fn absorb_degree(&self) -> Self {
        let mut m = self.clone();
        for t in m.source_twists.iter_mut() {
            *t += m.degree;
        }
        m.degree = 0;
        m
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.get(r, c).clone());
            }
        }
        FreeModuleMap {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
            target_twists: rows.iter().map(|&r| self.target_twists[r]).collect(),
            source_twists: cols.iter().map(|&c| self.source_twists[c]).collect(),
            degree: self.degree,
        }
    }

    /// Assembles a block matrix. `blocks[i][j]` is `None` for a zero block.
    /// Twists come from `row_twists` and `col_twists` (one list per block row
    /// or column); the result is checked for homogeneity.
    pub fn from_blocks(
        ring: &PolyRing,
        row_twists: &[Vec<i64>],
        col_twists: &[Vec<i64>],
        blocks: &[Vec<Option<&FreeModuleMap>>],
    ) -> Result<Self> {
        let tgt: Vec<i64> = row_twists.iter().flatten().copied().collect();
        let src: Vec<i64> = col_twists.iter().flatten().copied().collect();
        let mut m = Self::zero(ring, tgt, src, 0);
        let mut r0 = 0;
        for (bi, rt) in row_twists.iter().enumerate() {
            let mut c0 = 0;
            for (bj, ct) in col_twists.iter().enumerate() {
                if let Some(b) = blocks[bi][bj] {
                    if b.rows != rt.len() || b.cols != ct.len() {
                        return Err(Error::Shape(format!(
                            "block ({bi},{bj}) is {}x{}, expected {}x{}",
                            b.rows,
                            b.cols,
                            rt.len(),
                            ct.len()
                        )));
                    }
                    for r in 0..b.rows {
                        for c in 0..b.cols {
                            m.set(r0 + r, c0 + c, b.get(r, c).clone());
                        }
                    }
                }
                c0 += ct.len();
            }
            r0 += rt.len();
        }
        m.check_homogeneous()?;
        Ok(m)
    }

    /// True if some entry is a nonzero constant.
    pub fn has_unit_entry(&self) -> bool {
        self.entries.iter().any(|p| p.is_unit())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;

    #[test]
    fn compose_and_transpose() {
        let r = PolyRing::standard(&["x", "y"], Field::Rationals).unwrap();
        let row = FreeModuleMap::row_of(&r, &[r.parse("x").unwrap(), r.parse("y").unwrap()]).unwrap();
        let col = FreeModuleMap::new(
            &r,
            vec![1, 1],
            vec![2],
            0,
            vec![r.parse("-y").unwrap(), r.parse("x").unwrap()],
        )
        .unwrap();
        assert!(row.compose(&col).unwrap().is_zero());
        let t = row.transpose();
        assert_eq!(t.target_twists(), &[-1, -1]);
        assert_eq!(t.source_twists(), &[0]);
        assert_eq!(t.transpose(), row);
        assert!(col.compose(&col).is_err());
    }

    #[test]
    fn rejects_inhomogeneous_entries() {
        let r = PolyRing::standard(&["x", "y"], Field::Rationals).unwrap();
        let bad = FreeModuleMap::new(&r, vec![0], vec![1], 0, vec![r.parse("x^2").unwrap()]);
        assert!(matches!(bad, Err(Error::Inhomogeneous(_))));
    }
}
