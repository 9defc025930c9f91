use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::{Coeff, Monomial, PolyRing};
use crate::error::{Error, Result};

/// Sparse polynomial in canonical form: distinct monomials, nonzero
/// coefficients, terms sorted descending in the ring's order.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, Coeff)>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Ring-checked arithmetic.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch(format!("{} vs {}", a.ring, b.ring)));
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    })
}

impl Polynomial {
    pub fn zero(ring: &PolyRing) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &PolyRing, c: Coeff) -> Self {
        Self::monomial(ring, ring.one_monomial(), c)
    }

    pub fn monomial(ring: &PolyRing, m: Monomial, c: Coeff) -> Self {
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Normalizes an arbitrary term list into canonical form.
    pub fn from_terms(ring: &PolyRing, terms: Vec<(Monomial, Coeff)>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
            match acc.get_mut(&m) {
                Some(e) => *e = &*e + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Wraps terms that are already sorted, distinct and nonzero.
    pub(crate) fn from_sorted_terms(ring: &PolyRing, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp_monomials(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    /// A nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.is_unit()
    }

    /// The constant term's value if the polynomial is constant.
    pub fn constant_value(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(self.ring.field().zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// The common weighted degree of all terms, or `None` if the polynomial is
    /// zero or inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.iter().map(|(m, _)| self.ring.degree(m));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Weighted degree of the leading term.
    pub fn degree(&self) -> Option<i64> {
        self.lead().map(|(m, _)| self.ring.degree(m))
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect(),
        }
    }

    pub fn monic(&self) -> Polynomial {
        match self.lead() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().unwrap()),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut r = self.ring.one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Image under the ring map sending each source variable to a polynomial of
    /// `target`. Variables without an assignment are sent to the variable of
    /// the same name in `target`.
    pub fn substitute(
        &self,
        target: &PolyRing,
        assignments: &HashMap<String, Polynomial>,
    ) -> Result<Polynomial> {
        let mut images = Vec::with_capacity(self.ring.nvars());
        for name in self.ring.names() {
            let img = match assignments.get(name) {
                Some(p) => {
                    if p.ring != *target {
                        return Err(Error::RingMismatch(format!(
                            "image of `{name}` is not in {target}"
                        )));
                    }
                    p.clone()
                }
                None => target.var_by_name(name).map_err(|_| {
                    Error::InvalidArgument(format!("variable `{name}` unmapped and absent from {target}"))
                })?,
            };
            images.push(img);
        }
        Ok(self.map_with(target, &images))
    }

    /// Applies the ring map `x_i ↦ images[i]`.
    pub fn map_with(&self, target: &PolyRing, images: &[Polynomial]) -> Polynomial {
        // fast path: every image is a variable or zero
        let simple: Option<Vec<Option<usize>>> = images
            .iter()
            .map(|p| match p.terms.as_slice() {
                [] => Some(None),
                [(m, c)] if c.is_one() && m.exponents().iter().sum::<u16>() == 1 => {
                    Some(m.exponents().iter().position(|&e| e == 1))
                }
                _ => None,
            })
            .collect();
        if let Some(simple) = simple {
            let mut terms = Vec::with_capacity(self.terms.len());
            'terms: for (m, c) in &self.terms {
                let mut out = target.one_monomial();
                for (i, &e) in m.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    match simple[i] {
                        None => continue 'terms,
                        Some(j) => out.exponents_mut()[j] += e,
                    }
                }
                terms.push((out, c.clone()));
            }
            return Polynomial::from_terms(target, terms);
        }
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(e as u32);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Reinterprets the polynomial in a ring with the same variable names
    /// (possibly reordered or extended). Fails if a used variable is missing.
    pub fn promote(&self, target: &PolyRing) -> Result<Polynomial> {
        self.substitute(target, &HashMap::new())
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        assert!(self.ring == other.ring, "ring mismatch: {} vs {}", self.ring, other.ring);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match self.ring.cmp_monomials(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.ring == rhs.ring, "ring mismatch: {} vs {}", self.ring, rhs.ring);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(m, c);
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                terms.push((m.mul(n), c * d));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            let mut first = true;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.ring.names()[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;

    fn ring() -> PolyRing {
        let names = ["x_1", "x_2", "x_3", "x_4", "z_1", "z_2", "z_3", "z_4"];
        PolyRing::standard(&names, Field::Rationals).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring();
        let a = r.parse("x_1*x_3").unwrap();
        assert!(poly_arith(&a, &a, ArithOp::Sub).unwrap().is_zero());
        let p = r.parse("z_2z_3-z_1z_4").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "z_2*z_3-z_1*z_4");
        let s = PolyRing::standard(&["x", "y"], Field::Rationals).unwrap();
        let prod = &s.parse("x+y").unwrap() * &s.parse("x-y").unwrap();
        assert_eq!(prod, s.parse("x^2-y^2").unwrap());
        let other = PolyRing::standard(&["x"], Field::Rationals).unwrap();
        assert!(poly_arith(&prod, &other.parse("x").unwrap(), ArithOp::Add).is_err());
    }

    #[test]
    fn homogeneous_degree_adds() {
        let r = ring();
        let p = r.parse("x_1*x_3-x_2*z_4").unwrap();
        let q = r.parse("z_1+x_2").unwrap();
        assert_eq!((&p * &q).homogeneous_degree(), Some(3));
        assert!(!r.parse("x_1+x_2^2").unwrap().is_homogeneous());
    }

    #[test]
    fn substitution() {
        let r = PolyRing::standard(&["z", "x", "y"], Field::Rationals).unwrap();
        let target = r.without("z").unwrap();
        let p = r.parse("z*x+x*y").unwrap();
        let mut a = HashMap::new();
        a.insert("z".to_string(), target.zero());
        assert_eq!(p.substitute(&target, &a).unwrap(), target.parse("x*y").unwrap());
        assert_eq!(p.substitute(&r, &HashMap::new()).unwrap(), p);
        // unmapped variable absent from the target
        assert!(p.substitute(&target, &HashMap::new()).is_err());
    }

    #[test]
    fn substitute_new_variable_for_x_n() {
        let r = PolyRing::standard(&["x_1", "x_2", "z"], Field::Rationals).unwrap();
        let rt = r.extend("T", 1).unwrap();
        let target = PolyRing::standard(&["x_1", "x_2", "z", "x_3"], Field::Rationals).unwrap();
        let f = rt.parse("-x_1*x_2+T*z").unwrap();
        let mut a = HashMap::new();
        a.insert("T".to_string(), target.var_by_name("x_3").unwrap());
        assert_eq!(f.substitute(&target, &a).unwrap().to_string(), "-x_1*x_2+z*x_3");
    }
}
