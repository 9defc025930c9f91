//! Graded free chain complexes and chain maps.

mod betti;
mod map;
mod minimize;
mod verify;


use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gb::FreeModuleMap;
use crate::ring::{PolyRing, Polynomial};

pub use betti::{betti, BettiTable};
pub use map::{extend_to_chain_map, ChainMap};
pub use minimize::minimize;
pub use verify::{first_failure, verify_complex, verify_resolution};

/// `F_0 <- F_1 <- ... <- F_n` over a graded polynomial ring.
///
/// `modules[i]` holds the twists of `F_i`; `maps[i-1]` is the differential
/// `d_i: F_i -> F_{i-1}` and always has degree 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ring: PolyRing,
    modules: Vec<Vec<i64>>,
    maps: Vec<FreeModuleMap>,
}

impl ChainComplex {
    /// The length-0 complex consisting of one free module.
    pub fn free(ring: &PolyRing, twists: Vec<i64>) -> Self {
        ChainComplex {
            ring: ring.clone(),
            modules: vec![twists],
            maps: Vec::new(),
        }
    }

    /// Builds a complex from its differentials `d_1, ..., d_n`. Consecutive
    /// maps must agree on the twists of the module between them. Nonzero map
    /// degrees are folded into the source twists.
    pub fn from_differentials(ring: &PolyRing, f0: Vec<i64>, maps: Vec<FreeModuleMap>) -> Result<Self> {
        let mut modules = vec![f0];
        let mut out = Vec::with_capacity(maps.len());
        for (i, m) in maps.into_iter().enumerate() {
            if m.ring() != ring {
                return Err(Error::RingMismatch(format!("d_{} is over {}", i + 1, m.ring())));
            }
            let m = if m.degree() != 0 { m.absorb_degree() } else { m };
            if m.target_twists() != modules[i].as_slice() {
                return Err(Error::Shape(format!(
                    "target of d_{} has twists {:?}, expected {:?}",
                    i + 1,
                    m.target_twists(),
                    modules[i]
                )));
            }
            modules.push(m.source_twists().to_vec());
            out.push(m);
        }
        Ok(ChainComplex {
            ring: ring.clone(),
            modules,
            maps: out,
        })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// Number of differentials.
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.iter().all(|m| m.is_empty())
    }

    /// Twists of `F_i`; empty outside `0..=len`.
    pub fn module(&self, i: usize) -> &[i64] {
        self.modules.get(i).map_or(&[], |m| m.as_slice())
    }

    pub fn rank(&self, i: usize) -> usize {
        self.module(i).len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.len()).collect()
    }

    /// The differential `d_i: F_i -> F_{i-1}` for `1 <= i <= len`.
    pub fn d(&self, i: usize) -> &FreeModuleMap {
        &self.maps[i - 1]
    }

    pub fn differentials(&self) -> &[FreeModuleMap] {
        &self.maps
    }

    /// The zero map `F_i -> F_{i-1}` when `i` is past the end, else `d_i`.
    pub fn d_or_zero(&self, i: usize) -> FreeModuleMap {
        if (1..=self.len()).contains(&i) {
            self.d(i).clone()
        } else {
            FreeModuleMap::zero(
                &self.ring,
                self.module(i.wrapping_sub(1)).to_vec(),
                self.module(i).to_vec(),
                0,
            )
        }
    }

    /// Shifts every twist by `n`, i.e. tensors with `R(-n)`.
    pub fn twist(&self, n: i64) -> ChainComplex {
        let shift = |v: &[i64]| v.iter().map(|t| t + n).collect::<Vec<_>>();
        ChainComplex {
            ring: self.ring.clone(),
            modules: self.modules.iter().map(|m| shift(m)).collect(),
            maps: self
                .maps
                .iter()
                .map(|m| m.with_twists(shift(m.target_twists()), shift(m.source_twists()), 0).unwrap())
                .collect(),
        }
    }

    /// `Hom(C, R)`: transposed differentials in reverse order, negated twists.
    pub fn dualize(&self) -> ChainComplex {
        let n = self.len();
        ChainComplex {
            ring: self.ring.clone(),
            modules: (0..=n)
                .map(|k| self.modules[n - k].iter().map(|t| -t).collect())
                .collect(),
            maps: (1..=n).map(|k| self.maps[n - k].transpose()).collect(),
        }
    }

    /// Rewrites every entry in another ring with the same variable names
    /// (for instance `R -> R[T]`).
    pub fn promote(&self, ring: &PolyRing) -> Result<ChainComplex> {
        self.map_entries(ring, |p| p.promote(ring))
    }

    fn map_entries(
        &self,
        ring: &PolyRing,
        mut f: impl FnMut(&Polynomial) -> Result<Polynomial>,
    ) -> Result<ChainComplex> {
        let maps = self
            .maps
            .iter()
            .map(|m| m.map_entries(ring, &mut f))
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainComplex {
            ring: ring.clone(),
            modules: self.modules.clone(),
            maps,
        })
    }

    /// Drops trailing zero modules.
    pub(crate) fn trim(mut self) -> ChainComplex {
        while self.modules.len() > 1 && self.modules.last().is_some_and(|m| m.is_empty()) {
            self.modules.pop();
            self.maps.pop();
        }
        self
    }

    /// True if some differential has a nonzero constant entry.
    pub fn has_unit_entry(&self) -> bool {
        self.maps.iter().any(|m| m.has_unit_entry())
    }
}

/// Substitutes `v ↦ 0` everywhere and drops `v` from the ring.
pub fn eliminate_variable(c: &ChainComplex, v: &str) -> Result<ChainComplex> {
    let target = c.ring().without(v)?;
    let mut assign = HashMap::new();
    assign.insert(v.to_string(), target.zero());
    let out = c.map_entries(&target, |p| p.substitute(&target, &assign))?;
    if !verify_complex(&out) {
        return Err(Error::Verification(format!(
            "setting {v} = 0 does not give a complex"
        )));
    }
    Ok(out)
}
