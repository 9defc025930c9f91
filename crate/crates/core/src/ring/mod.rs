//! Exact coefficient arithmetic, positively graded polynomial rings and
//! polynomials in canonical form.

mod coeff;
mod monomial;
mod parse;
mod poly;

use std::fmt;
use std::sync::Arc;

pub use coeff::{Coeff, Field};
pub(crate) use coeff::{cofactors, denominator_lcm, make_primitive};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{poly_arith, ArithOp, Polynomial};

use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq)]
struct RingData {
    names: Vec<String>,
    weights: Vec<i64>,
    field: Field,
    order: MonomialOrder,
    eta: i64,
}

/// A positively graded polynomial ring `k[x_1..x_n]` with variable weights.
///
/// Cheap to clone; all clones share the same description.
#[derive(Clone)]
pub struct PolyRing(Arc<RingData>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.0.field)?;
        for (i, (n, w)) in self.0.names.iter().zip(&self.0.weights).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if *w == 1 {
                write!(f, "{n}")?;
            } else {
                write!(f, "{n}:{w}")?;
            }
        }
        write!(f, "]/{}", self.0.order.name())
    }
}

fn valid_name(n: &str) -> bool {
    let mut chars = n.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(
        names: &[S],
        weights: &[i64],
        field: Field,
        order: MonomialOrder,
    ) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        if names.len() != weights.len() {
            return Err(Error::InvalidRing(format!(
                "{} names but {} weights",
                names.len(),
                weights.len()
            )));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(Error::InvalidRing(format!("bad variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        if let Some(w) = weights.iter().find(|&&w| w < 1) {
            return Err(Error::InvalidRing(format!("non-positive weight {w}")));
        }
        if let Field::Prime(p) = field {
            Field::prime(p)?;
        }
        let eta = weights.iter().sum();
        Ok(PolyRing(Arc::new(RingData {
            names,
            weights: weights.to_vec(),
            field,
            order,
            eta,
        })))
    }

    /// Standard-graded ring in grevlex.
    pub fn standard<S: AsRef<str>>(names: &[S], field: Field) -> Result<Self> {
        Self::new(names, &vec![1; names.len()], field, MonomialOrder::GRevLex)
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn weights(&self) -> &[i64] {
        &self.0.weights
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    /// Sum of the variable weights.
    pub fn eta(&self) -> i64 {
        self.0.eta
    }

    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(self, Monomial::var(self.nvars(), i), self.field().one())
    }

    pub fn var_by_name(&self, name: &str) -> Result<Polynomial> {
        let i = self
            .index_of(name)
            .ok_or_else(|| Error::InvalidArgument(format!("no variable `{name}` in {self}")))?;
        Ok(self.var(i))
    }

    pub fn degree(&self, m: &Monomial) -> i64 {
        m.degree(&self.0.weights)
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.0.order.cmp(a, b, &self.0.weights)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    /// The ring with one more variable appended.
    pub fn extend(&self, name: &str, weight: i64) -> Result<PolyRing> {
        let mut names = self.0.names.clone();
        names.push(name.to_string());
        let mut weights = self.0.weights.clone();
        weights.push(weight);
        PolyRing::new(&names, &weights, self.0.field, self.0.order)
    }

    /// The ring with the named variable removed.
    pub fn without(&self, name: &str) -> Result<PolyRing> {
        let i = self
            .index_of(name)
            .ok_or_else(|| Error::InvalidArgument(format!("no variable `{name}` in {self}")))?;
        let mut names = self.0.names.clone();
        names.remove(i);
        let mut weights = self.0.weights.clone();
        weights.remove(i);
        PolyRing::new(&names, &weights, self.0.field, self.0.order)
    }

    pub fn with_field(&self, field: Field) -> Result<PolyRing> {
        PolyRing::new(&self.0.names, &self.0.weights, field, self.0.order)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<PolyRing> {
        PolyRing::new(&self.0.names, &self.0.weights, self.0.field, order)
    }

    pub fn parse(&self, s: &str) -> Result<Polynomial> {
        parse::parse_polynomial(self, s)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self, self.field().one())
    }
}

/// Builds a ring; thin wrapper over [`PolyRing::new`].
pub fn make_ring<S: AsRef<str>>(
    names: &[S],
    weights: &[i64],
    field: Field,
    order: MonomialOrder,
) -> Result<PolyRing> {
    PolyRing::new(names, weights, field, order)
}
