//! Homogeneous Buchberger algorithm over graded free modules.
//!
//! Vectors live in `R^n` with the position-over-term order. Components below
//! `top_rank` form the "top" part; components from `top_rank` on only carry
//! representations (the identity block of an augmented matrix `(m; 1)`), so
//! a vector whose top part vanishes is a syzygy. S-pairs and input generators
//! are processed degree by degree, which makes minimal-generator detection
//! exact for homogeneous input.

use std::collections::{BTreeMap, HashSet, VecDeque};

use super::vector::{cmp_pot, Term, Vector};
use crate::ring::{cofactors, Coeff, Field, Monomial, PolyRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Plain Gröbner basis of the top part.
    Plain,
    /// Carry representations but discard syzygies.
    Lift,
    /// Carry representations and collect every syzygy met on the way.
    Syzygy,
}

/// A set of top-led vectors with a lookup by lead component. Shared by the
/// engine and by finished bases. Over the rationals the engine keeps them
/// primitive; otherwise they are monic.
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    pub(crate) ring: PolyRing,
    pub(crate) top_rank: usize,
    pub(crate) basis: Vec<Vector>,
    integral: bool,
    leads: Vec<(usize, Monomial, i64)>,
    by_comp: Vec<Vec<usize>>,
}

impl Reducer {
    pub(crate) fn new(ring: &PolyRing, top_rank: usize) -> Self {
        Reducer {
            ring: ring.clone(),
            top_rank,
            basis: Vec::new(),
            integral: ring.field() == Field::Rationals,
            leads: Vec::new(),
            by_comp: vec![Vec::new(); top_rank],
        }
    }

    pub(crate) fn push(&mut self, v: Vector) -> usize {
        let t = v.lead().expect("pushing a zero vector");
        let k = self.basis.len();
        let d = self.ring.degree(&t.mon);
        self.leads.push((t.comp, t.mon.clone(), d));
        self.by_comp[t.comp].push(k);
        self.basis.push(v);
        k
    }

    pub(crate) fn lead(&self, k: usize) -> (usize, &Monomial) {
        (self.leads[k].0, &self.leads[k].1)
    }

    pub(crate) fn find_reducer(&self, comp: usize, mon: &Monomial) -> Option<usize> {
        let d = self.ring.degree(mon);
        self.by_comp[comp]
            .iter()
            .copied()
            .find(|&k| self.leads[k].2 <= d && self.leads[k].1.divides(mon))
    }

    /// Reduces the top part of `v`. With `full`, every top term is reduced;
    /// otherwise reduction stops at the first irreducible top term. Bottom
    /// components are carried along but never used for reduction.
    pub(crate) fn reduce(&self, v: Vector, full: bool) -> Vector {
        let mut terms = v.into_terms();
        let mut pos = 0;
        while pos < terms.len() {
            let t = &terms[pos];
            if t.comp >= self.top_rank {
                break;
            }
            match self.find_reducer(t.comp, &t.mon) {
                Some(k) => {
                    let q = t.mon.div(&self.leads[k].1).unwrap();
                    let b = self.basis[k].terms();
                    let c = if b[0].coeff.is_one() {
                        t.coeff.clone()
                    } else {
                        &t.coeff * &b[0].coeff.inv().unwrap()
                    };
                    let tail = sub_mul_slice(&self.ring, &terms[pos..], None, &c, &q, b);
                    terms.truncate(pos);
                    terms.extend(tail);
                }
                None => {
                    if !full {
                        break;
                    }
                    pos += 1;
                }
            }
        }
        Vector::from_sorted(terms)
    }

    /// Head reduction up to a nonzero scalar. Over the rationals the input
    /// must have integer coefficients; the steps are fraction-free and the
    /// result is primitive.
    pub(crate) fn reduce_scaled(&self, v: Vector) -> Vector {
        if !self.integral {
            return self.reduce(v, false);
        }
        let mut terms = v.into_terms();
        while let Some(t) = terms.first() {
            if t.comp >= self.top_rank {
                break;
            }
            match self.find_reducer(t.comp, &t.mon) {
                Some(k) => {
                    let q = t.mon.div(&self.leads[k].1).unwrap();
                    let b = self.basis[k].terms();
                    let (s, c) = cofactors(&b[0].coeff, &t.coeff);
                    let s = (!s.is_one()).then_some(s);
                    terms = sub_mul_slice(&self.ring, &terms, s.as_ref(), &c, &q, b);
                }
                None => break,
            }
        }
        Vector::from_sorted(terms).primitive()
    }

    pub(crate) fn top_is_zero(&self, v: &Vector) -> bool {
        v.lead().is_none_or(|t| t.comp >= self.top_rank)
    }
}

/// `s·a - c·m·b` on sorted term slices, with `s = 1` when absent.
pub(crate) fn sub_mul_slice(
    ring: &PolyRing,
    a: &[Term],
    s: Option<&Coeff>,
    c: &Coeff,
    m: &Monomial,
    b: &[Term],
) -> Vec<Term> {
    let scaled = |t: &Term| match s {
        Some(s) => Term {
            comp: t.comp,
            mon: t.mon.clone(),
            coeff: &t.coeff * s,
        },
        None => t.clone(),
    };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let bm = b[j].mon.mul(m);
        match cmp_pot(ring, (a[i].comp, &a[i].mon), (b[j].comp, &bm)) {
            std::cmp::Ordering::Greater => {
                out.push(scaled(&a[i]));
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push(Term {
                    comp: b[j].comp,
                    mon: bm,
                    coeff: -&(&b[j].coeff * c),
                });
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let ac = match s {
                    Some(s) => &a[i].coeff * s,
                    None => a[i].coeff.clone(),
                };
                let d = &ac - &(&b[j].coeff * c);
                if !d.is_zero() {
                    out.push(Term {
                        comp: a[i].comp,
                        mon: bm,
                        coeff: d,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().map(scaled));
    for t in &b[j..] {
        out.push(Term {
            comp: t.comp,
            mon: t.mon.mul(m),
            coeff: -&(&t.coeff * c),
        });
    }
    out
}

pub(crate) struct Engine {
    pub(crate) red: Reducer,
    twists: Vec<i64>,
    mode: Mode,
    queue: BTreeMap<i64, VecDeque<(usize, usize)>>,
    pending: HashSet<(usize, usize)>,
    pub(crate) kernel: Vec<Vector>,
    max_degree: Option<i64>,
}

impl Engine {
    pub(crate) fn new(ring: &PolyRing, twists: Vec<i64>, top_rank: usize, mode: Mode) -> Self {
        Engine {
            red: Reducer::new(ring, top_rank),
            twists,
            mode,
            queue: BTreeMap::new(),
            pending: HashSet::new(),
            kernel: Vec::new(),
            max_degree: None,
        }
    }

    /// Stops the computation after degree `d`.
    pub(crate) fn truncate_at(&mut self, d: i64) {
        self.max_degree = Some(d);
    }

    fn vdeg(&self, v: &Vector) -> Option<i64> {
        v.degree(&self.red.ring, &self.twists)
    }

    /// Runs the algorithm on `inputs` and returns, per input, whether it was
    /// needed (a minimal generator of the top part's span).
    pub(crate) fn run(&mut self, inputs: Vec<Vector>) -> Vec<bool> {
        let mut keep = vec![false; inputs.len()];
        let mut order: Vec<(i64, usize)> = inputs
            .iter()
            .enumerate()
            .filter_map(|(i, v)| self.vdeg(v).map(|d| (d, i)))
            .collect();
        order.sort_by_key(|&(d, _)| d);
        let mut inputs: Vec<Option<Vector>> = inputs.into_iter().map(Some).collect();
        let mut next = 0;
        loop {
            let pd = self.queue.keys().next().copied();
            let id = order.get(next).map(|&(d, _)| d);
            let d = match (pd, id) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            if self.max_degree.is_some_and(|m| d > m) {
                break;
            }
            loop {
                if let Some(pair) = self.pop_pair(d) {
                    self.process_pair(pair);
                    continue;
                }
                if next < order.len() && order[next].0 == d {
                    let idx = order[next].1;
                    next += 1;
                    let v = inputs[idx].take().unwrap();
                    keep[idx] = self.process_input(v);
                    continue;
                }
                break;
            }
        }
        keep
    }

    fn pop_pair(&mut self, d: i64) -> Option<(usize, usize)> {
        let q = self.queue.get_mut(&d)?;
        let p = q.pop_front();
        if q.is_empty() {
            self.queue.remove(&d);
        }
        p
    }

    fn process_input(&mut self, v: Vector) -> bool {
        let r = self.red.reduce_scaled(v.primitive());
        if self.red.top_is_zero(&r) {
            if self.mode == Mode::Syzygy && !r.is_zero() {
                self.kernel.push(r.restrict(self.red.top_rank, usize::MAX));
            }
            return false;
        }
        self.insert(r);
        true
    }

    fn key(i: usize, j: usize) -> (usize, usize) {
        (i.min(j), i.max(j))
    }

    fn process_pair(&mut self, (i, j): (usize, usize)) {
        self.pending.remove(&(i, j));
        let (ci, mi) = self.red.lead(i);
        let (_, mj) = self.red.lead(j);
        let lcm = mi.lcm(mj);
        // chain criterion
        for &k in &self.red.by_comp[ci] {
            if k == i || k == j {
                continue;
            }
            if self.red.leads[k].1.divides(&lcm)
                && !self.pending.contains(&Self::key(i, k))
                && !self.pending.contains(&Self::key(j, k))
            {
                return;
            }
        }
        let ring = self.red.ring.clone();
        let qi = lcm.div(mi).unwrap();
        let qj = lcm.div(mj).unwrap();
        let (bi, bj) = (&self.red.basis[i], &self.red.basis[j]);
        let (si, sj) = cofactors(&bi.lead().unwrap().coeff, &bj.lead().unwrap().coeff);
        let s = bi.mul_term(&qi, &sj).sub_mul(&ring, &si, &qj, bj);
        let r = self.red.reduce_scaled(s);
        if self.red.top_is_zero(&r) {
            if self.mode == Mode::Syzygy && !r.is_zero() {
                self.kernel.push(r.restrict(self.red.top_rank, usize::MAX));
            }
            return;
        }
        self.insert(r);
    }

    fn insert(&mut self, v: Vector) {
        let v = if self.red.integral { v.primitive() } else { v.monic() };
        let ring = self.red.ring.clone();
        let (comp, mon) = {
            let t = v.lead().unwrap();
            (t.comp, t.mon.clone())
        };
        let k = self.red.basis.len();
        let others: Vec<usize> = self.red.by_comp[comp].clone();
        self.red.push(v);
        for l in others {
            let ml = &self.red.leads[l].1;
            if self.red.top_rank == 1 && ml.is_coprime(&mon) {
                if self.mode == Mode::Syzygy {
                    let kz = self.koszul(l, k);
                    if !kz.is_zero() {
                        self.kernel.push(kz.restrict(self.red.top_rank, usize::MAX));
                    }
                }
                continue;
            }
            let d = ring.degree(&ml.lcm(&mon)) + self.twists[comp];
            self.queue.entry(d).or_default().push_back((l, k));
            self.pending.insert((l, k));
        }
    }

    /// `f_l·g_k - f_k·g_l` for rank-one top parts `f`.
    fn koszul(&self, l: usize, k: usize) -> Vector {
        let ring = &self.red.ring;
        let gl = &self.red.basis[l];
        let gk = &self.red.basis[k];
        let fl = gl.restrict(0, 1);
        let fk = gk.restrict(0, 1);
        let mut acc = Vector::zero();
        for t in fl.terms() {
            acc = acc.sub_mul(ring, &-&t.coeff, &t.mon, gk);
        }
        for t in fk.terms() {
            acc = acc.sub_mul(ring, &t.coeff, &t.mon, gl);
        }
        acc
    }

    /// Minimal, fully interreduced basis sorted by descending lead term.
    pub(crate) fn into_reduced(self) -> Reducer {
        let red = self.red;
        let ring = red.ring.clone();
        let n = red.basis.len();
        let mut minimal: Vec<usize> = (0..n)
            .filter(|&i| {
                !(0..n).any(|j| {
                    j != i
                        && red.leads[j].0 == red.leads[i].0
                        && red.leads[j].1.divides(&red.leads[i].1)
                        && (red.leads[j].1 != red.leads[i].1 || j < i)
                })
            })
            .collect();
        minimal.sort_by(|&a, &b| cmp_pot(&ring, (red.leads[b].0, &red.leads[b].1), (red.leads[a].0, &red.leads[a].1)));
        let mut base = Reducer::new(&ring, red.top_rank);
        for &i in &minimal {
            base.push(red.basis[i].clone());
        }
        let mut out = Reducer::new(&ring, red.top_rank);
        for i in 0..base.basis.len() {
            let v = &base.basis[i];
            let lead = Vector::from_sorted(vec![v.lead().unwrap().clone()]);
            let tail = Vector::from_sorted(v.terms()[1..].to_vec());
            let tail = base.reduce(tail, true);
            out.push(lead.add(&ring, &tail).monic());
        }
        out
    }
}
