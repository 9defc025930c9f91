//! Gröbner engine for ideals and submodules of graded free modules:
//! Buchberger's algorithm, normal forms, syzygies, lifting, ideal quotients
//! and ideal equality.

mod engine;
mod ideal;
mod matrix;
mod vector;


use engine::{Engine, Mode, Reducer};

pub use ideal::{ideal_equal, ideal_quotient, Ideal};
pub use matrix::FreeModuleMap;
pub use vector::{Term, Vector};

use crate::error::{Error, Result};
use crate::ring::PolyRing;

/// Reduced Gröbner basis of a submodule of `R^rank` (position-over-term).
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    twists: Vec<i64>,
    red: Reducer,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.red.ring == other.red.ring
            && self.twists == other.twists
            && self.red.basis == other.red.basis
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &PolyRing {
        &self.red.ring
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn generators(&self) -> &[Vector] {
        &self.red.basis
    }

    pub fn len(&self) -> usize {
        self.red.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.red.basis.is_empty()
    }

    /// Remainder of `v` with no term divisible by a leading term of the basis.
    pub fn normal_form(&self, v: &Vector) -> Result<Vector> {
        if let Some(t) = v.terms().iter().find(|t| t.comp >= self.rank()) {
            return Err(Error::Shape(format!(
                "component {} out of range for rank {}",
                t.comp,
                self.rank()
            )));
        }
        Ok(self.red.reduce(v.clone(), true))
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// Checks the Gröbner property directly: every S-vector of every pair of
    /// basis elements with equal lead component reduces to zero. No criteria
    /// are used.
    pub fn is_groebner(&self) -> bool {
        let ring = &self.red.ring;
        let one = ring.field().one();
        let b = &self.red.basis;
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let (ci, mi) = self.red.lead(i);
                let (cj, mj) = self.red.lead(j);
                if ci != cj {
                    continue;
                }
                let l = mi.lcm(mj);
                let s = b[i]
                    .mul_term(&l.div(mi).unwrap(), &one)
                    .sub_mul(ring, &one, &l.div(mj).unwrap(), &b[j]);
                if !self.red.reduce(s, true).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// The basis as the columns of a map into `R^rank`.
    pub fn to_map(&self) -> Result<FreeModuleMap> {
        let ring = &self.red.ring;
        let src = self
            .red
            .basis
            .iter()
            .map(|v| v.degree(ring, &self.twists).unwrap())
            .collect();
        FreeModuleMap::from_columns(ring, self.twists.clone(), src, 0, &self.red.basis)
    }
}

fn ensure_homogeneous(m: &FreeModuleMap) -> Result<()> {
    m.check_homogeneous()
}

/// Reduced Gröbner basis of the column span of `gens`.
pub fn groebner(gens: &FreeModuleMap) -> Result<GroebnerBasis> {
    ensure_homogeneous(gens)?;
    let ring = gens.ring();
    let twists = gens.target_twists().to_vec();
    let mut e = Engine::new(ring, twists.clone(), twists.len(), Mode::Plain);
    e.run(gens.columns());
    Ok(GroebnerBasis {
        twists,
        red: e.into_reduced(),
    })
}

/// Gröbner basis of the span of arbitrary homogeneous vectors of `R^rank`.
pub fn groebner_of_vectors(ring: &PolyRing, twists: &[i64], vectors: Vec<Vector>) -> Result<GroebnerBasis> {
    if let Some(v) = vectors.iter().find(|v| !v.is_homogeneous(ring, twists)) {
        return Err(Error::Inhomogeneous(format!("{v:?}")));
    }
    let mut e = Engine::new(ring, twists.to_vec(), twists.len(), Mode::Plain);
    e.run(vectors);
    Ok(GroebnerBasis {
        twists: twists.to_vec(),
        red: e.into_reduced(),
    })
}

pub fn normal_form(v: &Vector, gb: &GroebnerBasis) -> Result<Vector> {
    gb.normal_form(v)
}

/// Indices of a minimal generating subset of homogeneous vectors. Vectors are
/// considered by degree; within a degree, earlier ones are preferred.
pub fn minimal_generator_indices(ring: &PolyRing, twists: &[i64], vectors: Vec<Vector>) -> Vec<usize> {
    let mut e = Engine::new(ring, twists.to_vec(), twists.len(), Mode::Plain);
    // pairs above the top input degree cannot affect minimality
    if let Some(top) = vectors.iter().filter_map(|v| v.degree(ring, twists)).max() {
        e.truncate_at(top);
    }
    let keep = e.run(vectors);
    let mut idx: Vec<usize> = keep.iter().enumerate().filter(|(_, &k)| k).map(|(i, _)| i).collect();
    // report in processing order: by degree, stable
    idx.sort_by_key(|&i| i);
    idx
}

/// Drops redundant columns, returning a map whose columns minimally generate
/// the same submodule. Columns are ordered by degree, stably.
pub fn minimalize_columns(m: &FreeModuleMap) -> Result<FreeModuleMap> {
    ensure_homogeneous(m)?;
    let cols = m.columns();
    let keep = minimal_generator_indices(m.ring(), m.target_twists(), cols);
    let mut keep: Vec<usize> = keep;
    keep.sort_by_key(|&c| (m.source_twists()[c], c));
    let rows: Vec<usize> = (0..m.rows()).collect();
    Ok(m.submatrix(&rows, &keep))
}

/// Augmented columns `(m e_j ; e_j)` living in `R^(rows + cols)`.
fn augmented(m: &FreeModuleMap) -> (Vec<i64>, Vec<Vector>) {
    let ring = m.ring();
    let r = m.rows();
    let mut twists = m.target_twists().to_vec();
    twists.extend(m.source_twists().iter().map(|s| s + m.degree()));
    let cols = (0..m.cols())
        .map(|c| {
            let top = m.column(c);
            top.add(ring, &Vector::unit(ring, r + c))
        })
        .collect();
    (twists, cols)
}

/// Generators of `ker(m)`, as the columns of a map into the source of `m`.
/// The returned generating set is minimal.
pub fn syzygies(m: &FreeModuleMap) -> Result<FreeModuleMap> {
    ensure_homogeneous(m)?;
    let ring = m.ring();
    let (twists, cols) = augmented(m);
    let mut e = Engine::new(ring, twists, m.rows(), Mode::Syzygy);
    e.run(cols);
    let src_twists: Vec<i64> = m.source_twists().iter().map(|s| s + m.degree()).collect();
    let kernel = std::mem::take(&mut e.kernel);
    let keep = minimal_generator_indices(ring, &src_twists, kernel.clone());
    let mut chosen: Vec<(i64, Vector)> = keep
        .into_iter()
        .map(|i| {
            let v = kernel[i].clone();
            (v.degree(ring, &src_twists).unwrap(), v)
        })
        .collect();
    chosen.sort_by_key(|(d, _)| *d);
    let degs: Vec<i64> = chosen.iter().map(|(d, _)| d - m.degree()).collect();
    let vecs: Vec<Vector> = chosen.into_iter().map(|(_, v)| v).collect();
    FreeModuleMap::from_columns(ring, m.source_twists().to_vec(), degs, 0, &vecs)
}

/// Precomputed data for solving `b·X = c` repeatedly with a fixed `b`.
pub struct Lifter {
    b: FreeModuleMap,
    red: Reducer,
}

impl Lifter {
    pub fn new(b: &FreeModuleMap) -> Result<Self> {
        ensure_homogeneous(b)?;
        let (twists, cols) = augmented(b);
        let mut e = Engine::new(b.ring(), twists, b.rows(), Mode::Lift);
        e.run(cols);
        Ok(Lifter { b: b.clone(), red: e.red })
    }

    /// Solves `b·x = v` for one vector of the target of `b`.
    pub fn lift_vector(&self, v: &Vector) -> Option<Vector> {
        let r = self.red.reduce(v.clone(), true);
        if !self.red.top_is_zero(&r) {
            return None;
        }
        let minus = -&self.b.ring().field().one();
        Some(r.restrict(self.b.rows(), usize::MAX).scale(&minus))
    }

    /// Returns `X` with `b·X = c`.
    pub fn lift(&self, c: &FreeModuleMap) -> Result<FreeModuleMap> {
        let b = &self.b;
        if c.ring() != b.ring() {
            return Err(Error::RingMismatch("lift_through over different rings".into()));
        }
        if c.rows() != b.rows() || c.target_twists() != b.target_twists() {
            return Err(Error::Shape(format!(
                "cannot lift a map into {:?} through a map into {:?}",
                c.target_twists(),
                b.target_twists()
            )));
        }
        ensure_homogeneous(c)?;
        let mut cols = Vec::with_capacity(c.cols());
        for j in 0..c.cols() {
            let x = self.lift_vector(&c.column(j)).ok_or_else(|| {
                Error::NotLiftable(format!("column {j} is not in the image of the given map"))
            })?;
            cols.push(x);
        }
        FreeModuleMap::from_columns(
            b.ring(),
            b.source_twists().to_vec(),
            c.source_twists().to_vec(),
            c.degree() - b.degree(),
            &cols,
        )
    }
}

/// Solves `b·X = c`.
pub fn lift_through(b: &FreeModuleMap, c: &FreeModuleMap) -> Result<FreeModuleMap> {
    Lifter::new(b)?.lift(c)
}
