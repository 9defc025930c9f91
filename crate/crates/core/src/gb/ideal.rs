use std::fmt;

use super::{groebner, minimalize_columns, syzygies, FreeModuleMap, GroebnerBasis, Vector};
use crate::error::{Error, Result};
use crate::ring::{PolyRing, Polynomial};

/// A homogeneous ideal given by generators.
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Polynomial>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|p| p.to_string()).collect();
        write!(f, "ideal({})", g.join(", "))
    }
}

impl Ideal {
    /// Zero generators are dropped; the rest must be homogeneous.
    pub fn new(ring: &PolyRing, gens: Vec<Polynomial>) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch(format!("generator {g} not in {ring}")));
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous(format!("generator `{g}`")));
            }
            out.push(g);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
        })
    }

    pub fn parse(ring: &PolyRing, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Generators as a `1 x n` map into `R`.
    pub fn as_row(&self) -> FreeModuleMap {
        FreeModuleMap::row_of(&self.ring, &self.gens).expect("ideal generators are homogeneous")
    }

    pub fn groebner(&self) -> GroebnerBasis {
        groebner(&self.as_row()).expect("ideal generators are homogeneous")
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch(format!("{p} not in {}", self.ring)));
        }
        self.groebner().contains(&Vector::from_polys([(0, p)]))
    }

    /// Reduces `p` modulo the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let gb = self.groebner();
        let v = gb.normal_form(&Vector::from_polys([(0, p)])).unwrap();
        v.component(&self.ring, 0)
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch("ideals over different rings".into()));
        }
        let gb = other.groebner();
        for g in &self.gens {
            if !gb.contains(&Vector::from_polys([(0, g)]))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minimal homogeneous generators, ordered by degree.
    pub fn mingens(&self) -> Ideal {
        if self.gens.is_empty() {
            return self.clone();
        }
        let m = minimalize_columns(&self.as_row()).expect("homogeneous");
        Ideal {
            ring: self.ring.clone(),
            gens: m.row(0).to_vec(),
        }
    }

    /// Reduced Gröbner basis elements as polynomials.
    pub fn reduced_gb(&self) -> Vec<Polynomial> {
        self.groebner()
            .generators()
            .iter()
            .map(|v| v.component(&self.ring, 0))
            .collect()
    }
}

/// `I : f = { g : g·f ∈ I }`.
pub fn ideal_quotient(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("ideal quotient by zero".into()));
    }
    if f.ring() != i.ring() {
        return Err(Error::RingMismatch("quotient by a polynomial of another ring".into()));
    }
    let mut gens = vec![f.clone()];
    gens.extend(i.gens().iter().cloned());
    let row = FreeModuleMap::row_of(i.ring(), &gens)?;
    let syz = syzygies(&row)?;
    let q = Ideal::new(i.ring(), syz.row(0).to_vec())?;
    Ok(q.mingens())
}

/// Equality of ideals via their reduced Gröbner bases.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch("ideals over different rings".into()));
    }
    Ok(a.groebner() == b.groebner())
}
