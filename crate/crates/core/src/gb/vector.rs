use std::cmp::Ordering;

use num_traits::One;

use crate::ring::{denominator_lcm, make_primitive, Coeff, Monomial, PolyRing, Polynomial};

/// One term `c·m·e_comp` of a free-module element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub comp: usize,
    pub mon: Monomial,
    pub coeff: Coeff,
}

/// Position-over-term comparison: a smaller component index is larger.
#[inline]
pub(crate) fn cmp_pot(ring: &PolyRing, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| ring.cmp_monomials(a.1, b.1))
}

/// Element of a free module `R^n`, terms sorted descending in the
/// position-over-term order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vector {
    terms: Vec<Term>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Builds a vector from per-component polynomials.
    pub fn from_polys<'a>(entries: impl IntoIterator<Item = (usize, &'a Polynomial)>) -> Self {
        let mut terms: Vec<Term> = Vec::new();
        let mut parts: Vec<(usize, &Polynomial)> = entries.into_iter().collect();
        parts.sort_by_key(|(c, _)| *c);
        for (comp, p) in parts {
            for (m, c) in p.terms() {
                terms.push(Term {
                    comp,
                    mon: m.clone(),
                    coeff: c.clone(),
                });
            }
        }
        Vector { terms }
    }

    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        Vector { terms }
    }

    pub fn unit(ring: &PolyRing, comp: usize) -> Self {
        Vector {
            terms: vec![Term {
                comp,
                mon: ring.one_monomial(),
                coeff: ring.field().one(),
            }],
        }
    }

    /// Degree of a homogeneous vector given the twists of the basis.
    pub fn degree(&self, ring: &PolyRing, twists: &[i64]) -> Option<i64> {
        self.lead().map(|t| ring.degree(&t.mon) + twists[t.comp])
    }

    pub fn is_homogeneous(&self, ring: &PolyRing, twists: &[i64]) -> bool {
        match self.degree(ring, twists) {
            None => true,
            Some(d) => self
                .terms
                .iter()
                .all(|t| ring.degree(&t.mon) + twists[t.comp] == d),
        }
    }

    /// Splits off the polynomial in one component.
    pub fn component(&self, ring: &PolyRing, comp: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.comp == comp)
            .map(|t| (t.mon.clone(), t.coeff.clone()))
            .collect();
        Polynomial::from_sorted_terms(ring, terms)
    }

    /// All components as dense polynomials, `0..rank`.
    pub fn to_polys(&self, ring: &PolyRing, rank: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.comp].push((t.mon.clone(), t.coeff.clone()));
        }
        buckets
            .into_iter()
            .map(|ts| Polynomial::from_sorted_terms(ring, ts))
            .collect()
    }

    /// Keeps only the components in `range`, re-indexed to start at zero.
    pub fn restrict(&self, lo: usize, hi: usize) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| t.comp >= lo && t.comp < hi)
                .map(|t| Term {
                    comp: t.comp - lo,
                    mon: t.mon.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    comp: t.comp,
                    mon: t.mon.clone(),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    pub fn monic(&self) -> Vector {
        match self.lead() {
            Some(t) if !t.coeff.is_one() => self.scale(&t.coeff.inv().unwrap()),
            _ => self.clone(),
        }
    }

    /// Over the rationals, the multiple with coprime integer coefficients and
    /// a positive lead. Unchanged over prime fields.
    pub(crate) fn primitive(self) -> Vector {
        let mut v = match denominator_lcm(self.terms.iter().map(|t| &t.coeff)) {
            Some(d) if !d.is_one() => self.scale(&Coeff::Q(d.into())),
            Some(_) => self,
            None => return self,
        };
        let cs: Vec<&Coeff> = v.terms.iter().map(|t| &t.coeff).collect();
        if let Some(new) = make_primitive(&cs) {
            for (t, c) in v.terms.iter_mut().zip(new) {
                t.coeff = c;
            }
        }
        v
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    comp: t.comp,
                    mon: t.mon.mul(m),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    /// `self - c·m·other`, merged in order.
    pub fn sub_mul(&self, ring: &PolyRing, c: &Coeff, m: &Monomial, other: &Vector) -> Vector {
        let a = &self.terms;
        let b = &other.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut bj: Option<Term> = None;
        loop {
            if bj.is_none() && j < b.len() {
                let t = &b[j];
                bj = Some(Term {
                    comp: t.comp,
                    mon: t.mon.mul(m),
                    coeff: -&(&t.coeff * c),
                });
                j += 1;
            }
            match (a.get(i), bj.as_ref()) {
                (None, None) => break,
                (Some(x), None) => {
                    out.push(x.clone());
                    i += 1;
                }
                (None, Some(_)) => out.push(bj.take().unwrap()),
                (Some(x), Some(y)) => match cmp_pot(ring, (x.comp, &x.mon), (y.comp, &y.mon)) {
                    Ordering::Greater => {
                        out.push(x.clone());
                        i += 1;
                    }
                    Ordering::Less => out.push(bj.take().unwrap()),
                    Ordering::Equal => {
                        let s = &x.coeff + &y.coeff;
                        if !s.is_zero() {
                            out.push(Term {
                                comp: x.comp,
                                mon: x.mon.clone(),
                                coeff: s,
                            });
                        }
                        i += 1;
                        bj = None;
                    }
                },
            }
        }
        Vector { terms: out }
    }

    pub fn add(&self, ring: &PolyRing, other: &Vector) -> Vector {
        let one = ring.field().one();
        self.sub_mul(ring, &-&one, &ring.one_monomial(), other)
    }

    /// Shifts every component index by `offset`.
    pub fn shift_components(&self, offset: usize) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    comp: t.comp + offset,
                    mon: t.mon.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }
}
