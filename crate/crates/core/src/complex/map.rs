use super::ChainComplex;
use crate::error::{Error, Result};
use crate::gb::{FreeModuleMap, Lifter};
use crate::ring::Coeff;

/// Maps `X_p: S_p -> T_{p+shift}` for `p >= start`, where
/// `start = max(0, -shift)`.
///
/// The squares commute as `T.d(p+shift) ∘ X_p = sign · X_{p-1} ∘ S.d(p)`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    shift: i64,
    degree: i64,
    sign: i8,
    components: Vec<FreeModuleMap>,
}

impl ChainMap {
    pub fn new(
        source: ChainComplex,
        target: ChainComplex,
        shift: i64,
        components: Vec<FreeModuleMap>,
    ) -> Result<Self> {
        let start = (-shift).max(0) as usize;
        let expected = (source.len() + 1).saturating_sub(start);
        if components.len() != expected {
            return Err(Error::Shape(format!(
                "chain map needs {expected} components, got {}",
                components.len()
            )));
        }
        let degree = components.first().map_or(0, |c| c.degree());
        for (k, x) in components.iter().enumerate() {
            let p = start + k;
            let q = (p as i64 + shift) as usize;
            if x.source_twists() != source.module(p) || x.target_twists() != target.module(q) {
                return Err(Error::Shape(format!("component at {p} does not fit the complexes")));
            }
            if x.degree() != degree {
                return Err(Error::Shape(format!("component at {p} has degree {}", x.degree())));
            }
        }
        Ok(ChainMap {
            source,
            target,
            shift,
            degree,
            sign: 1,
            components,
        })
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn start(&self) -> usize {
        (-self.shift).max(0) as usize
    }

    /// The component leaving `S_p`.
    pub fn at(&self, p: usize) -> &FreeModuleMap {
        &self.components[p - self.start()]
    }

    pub fn components(&self) -> &[FreeModuleMap] {
        &self.components
    }

    /// True if every square commutes exactly.
    pub fn verify(&self) -> bool {
        let start = self.start();
        for p in start + 1..=self.source.len() {
            let q = (p as i64 + self.shift) as usize;
            let lhs = self.target.d_or_zero(q).compose(self.at(p));
            let rhs = self.at(p - 1).compose(self.source.d(p));
            match (lhs, rhs) {
                (Ok(l), Ok(r)) => {
                    let r = if self.sign < 0 { r.neg() } else { r };
                    if l.entries() != r.entries() {
                        return false;
                    }
                }
                _ => return false,
            }
        }
        true
    }

    pub fn neg(&self) -> ChainMap {
        self.scale(&-&self.source.ring().field().one())
    }

    pub fn scale(&self, c: &Coeff) -> ChainMap {
        ChainMap {
            components: self.components.iter().map(|x| x.scale(c)).collect(),
            ..self.clone()
        }
    }

    /// `X^*: Hom(T, R) -> Hom(S, R)` between the dual complexes.
    pub fn dual(&self) -> ChainMap {
        let ns = self.source.len() as i64;
        let nt = self.target.len() as i64;
        let shift = ns - nt + self.shift;
        let source = self.target.dualize();
        let target = self.source.dualize();
        let start = (-shift).max(0);
        let components = (start..=nt)
            .map(|q| {
                // X_p^T sits at dual position q = nt - p - shift
                let p = nt - q - self.shift;
                if p < self.start() as i64 || p > ns {
                    let tw = |v: &[i64]| v.iter().map(|t| -t).collect::<Vec<_>>();
                    let tgt = if p < 0 { Vec::new() } else { tw(self.source.module(p as usize)) };
                    let src = tw(self.target.module((nt - q) as usize));
                    return FreeModuleMap::zero(self.source.ring(), tgt, src, self.degree);
                }
                self.at(p as usize).transpose()
            })
            .collect();
        ChainMap {
            source,
            target,
            shift,
            degree: self.degree,
            sign: self.sign,
            components,
        }
    }
}

/// Extends `f0: S_start -> T_{start+shift}` to a chain map by lifting
/// `X_{p-1} ∘ d_p` through the differentials of `target`, one position at a
/// time.
pub fn extend_to_chain_map(
    f0: &FreeModuleMap,
    source: &ChainComplex,
    target: &ChainComplex,
    shift: i64,
) -> Result<ChainMap> {
    let start = (-shift).max(0) as usize;
    let mut comps = vec![f0.clone()];
    for p in start + 1..=source.len() {
        let q = (p as i64 + shift) as usize;
        let want = comps.last().unwrap().compose(source.d(p))?;
        let x = if q <= target.len() && q >= 1 {
            Lifter::new(target.d(q))?
                .lift(&want)
                .map_err(|e| match e {
                    Error::NotLiftable(m) => Error::NotLiftable(format!("position {p}: {m}")),
                    e => e,
                })?
        } else {
            if !want.is_zero() {
                return Err(Error::NotLiftable(format!(
                    "position {p}: target module is zero but the square does not vanish"
                )));
            }
            FreeModuleMap::zero(
                source.ring(),
                target.module(q).to_vec(),
                source.module(p).to_vec(),
                f0.degree(),
            )
        };
        comps.push(x);
    }
    ChainMap::new(source.clone(), target.clone(), shift, comps)
}
