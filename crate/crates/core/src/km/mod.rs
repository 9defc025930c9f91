//! The Kustin-Miller complex: chain maps `α: C_I -> C_J`,
//! `β: C_J -> C_I[-1]`, a homotopy `h` with `β_i α_i = h_{i-1} b_i + b_i h_i`,
//! and the block differentials of the resolution of `R[T]/U`.

#[cfg(test)]
mod tests;

use crate::complex::{extend_to_chain_map, verify_complex, ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::gb::{lift_through, FreeModuleMap, Ideal};
use crate::resolve::minimal_free_resolution;
use crate::ring::{Coeff, Polynomial};
use crate::unproj::{hom_module, select_phi, UnprojectionData};

/// Resolutions of `R/I` (length `g-1`) and `R/J` (length `g`) together with
/// the unprojection data. The first differential of `C_J` must be the row of
/// generators used by `data`.
#[derive(Clone, Debug)]
pub struct KMInput {
    c_i: ChainComplex,
    c_j: ChainComplex,
    data: UnprojectionData,
}

impl KMInput {
    pub fn new(c_i: ChainComplex, c_j: ChainComplex, data: UnprojectionData) -> Result<Self> {
        let g = c_j.len();
        if g < 4 {
            return Err(Error::InvalidArgument(format!(
                "codimension {g} is not supported; the construction here needs g >= 4 \
                 (g = 2 and 3 are special cases)"
            )));
        }
        if c_i.len() != g - 1 {
            return Err(Error::Shape(format!(
                "C_I has length {}, expected {}",
                c_i.len(),
                g - 1
            )));
        }
        if c_i.ring() != data.ring() || c_j.ring() != data.ring() {
            return Err(Error::RingMismatch("resolutions and data live over different rings".into()));
        }
        for (name, c, top) in [("C_I", &c_i, g - 1), ("C_J", &c_j, g)] {
            if c.module(0) != [0] {
                return Err(Error::Shape(format!("{name} must start with R")));
            }
            if c.rank(top) != 1 {
                return Err(Error::HypothesisFailed(format!(
                    "{name} ends in rank {}, not 1 (not Gorenstein)",
                    c.rank(top)
                )));
            }
        }
        if c_j.d(1).row(0) != data.gens() {
            return Err(Error::InvalidArgument(
                "first differential of C_J differs from the generators carrying φ".into(),
            ));
        }
        if deg_t(&c_i, &c_j)? != data.deg_t() {
            return Err(Error::HypothesisFailed(format!(
                "φ has degree {} but the resolutions force {}",
                data.deg_t(),
                deg_t(&c_i, &c_j)?
            )));
        }
        Ok(KMInput { c_i, c_j, data })
    }

    /// Resolves `I` and `J` minimally and selects `φ` from `Hom(J, R/I)`, or
    /// uses `phi` (lifts of the images of the minimal generators of `J`).
    pub fn from_ideals(i: &Ideal, j: &Ideal, t_name: &str, phi: Option<Vec<Polynomial>>) -> Result<Self> {
        let c_i = minimal_free_resolution(i)?;
        let c_j = minimal_free_resolution(j)?;
        Self::from_resolutions(c_i, c_j, t_name, phi)
    }

    /// Like [`KMInput::from_ideals`] with given resolutions.
    pub fn from_resolutions(
        c_i: ChainComplex,
        c_j: ChainComplex,
        t_name: &str,
        phi: Option<Vec<Polynomial>>,
    ) -> Result<Self> {
        if c_j.len() < 4 {
            return Err(Error::InvalidArgument(format!(
                "codimension {} is not supported; the construction here needs g >= 4 \
                 (g = 2 and 3 are special cases)",
                c_j.len()
            )));
        }
        let ring = c_i.ring().clone();
        let gens = c_j.d(1).row(0).to_vec();
        let ideal_i = Ideal::new(&ring, c_i.d(1).row(0).to_vec())?;
        let dt = deg_t(&c_i, &c_j)?;
        let data = match phi {
            Some(lifts) => UnprojectionData::new(&ideal_i, gens, lifts, dt, t_name)?,
            None => {
                let homs = hom_module(&gens, &ideal_i)?;
                select_phi(&homs, &ideal_i, &gens, dt, t_name)?
            }
        };
        Self::new(c_i, c_j, data)
    }

    pub fn c_i(&self) -> &ChainComplex {
        &self.c_i
    }

    pub fn c_j(&self) -> &ChainComplex {
        &self.c_j
    }

    pub fn data(&self) -> &UnprojectionData {
        &self.data
    }

    /// Codimension of `J`.
    pub fn g(&self) -> usize {
        self.c_j.len()
    }
}

/// The resolution of `R[T]/U` and the pieces it was assembled from.
#[derive(Clone, Debug)]
pub struct KMOutput {
    pub complex: ChainComplex,
    pub alpha: ChainMap,
    pub beta: ChainMap,
    /// `h_0, ..., h_{g-1}` over `R`.
    pub homotopy: Vec<FreeModuleMap>,
    pub beta_g_one: Coeff,
    /// Lifts of `φ(ĉ_k)` for the entries `ĉ_k` of the last differential of `C_J`.
    pub hat_lifts: Vec<Polynomial>,
}

/// `d_B - d_A` where `B_{g-1} = R(-d_B)` ends `C_I` and `A_g = R(-d_A)` ends
/// `C_J`; the degree of `T`.
pub fn deg_t(c_i: &ChainComplex, c_j: &ChainComplex) -> Result<i64> {
    let (tb, ta) = (c_i.module(c_i.len()), c_j.module(c_j.len()));
    if tb.len() != 1 || ta.len() != 1 {
        return Err(Error::HypothesisFailed("top modules must have rank 1".into()));
    }
    let d = tb[0] - ta[0];
    if d <= 0 {
        return Err(Error::HypothesisFailed(format!(
            "the new variable would have degree {d}; need k_1 > k_2"
        )));
    }
    Ok(d)
}

/// `α: C_I -> C_J` with `α_0 = 1`, obtained by extending `ê_k* ↦ l̂_k` to a
/// chain map `C_J* -> C_I*`, dualizing and normalizing.
pub fn compute_alpha(input: &KMInput) -> Result<(ChainMap, Vec<Polynomial>)> {
    let (c_i, c_j) = (&input.c_i, &input.c_j);
    let g = input.g();
    let ring = c_i.ring();
    let a1 = c_j.d(1);
    let ag = c_j.d(g);
    let d_a = c_j.module(g)[0];
    // ĉ as a row into R: the first differential of C_J*, untwisted
    let agt = ag.transpose();
    let chat = agt.with_twists(vec![0], agt.source_twists().iter().map(|s| s + d_a).collect(), 0)?;
    let q = lift_through(a1, &chat)?;
    let hat = input.data.images_of(&q);
    let dj = c_j.dualize();
    let di = c_i.dualize();
    let gamma1 = FreeModuleMap::new(ring, di.module(0).to_vec(), dj.module(1).to_vec(), 0, hat.clone())?;
    let gamma = extend_to_chain_map(&gamma1, &dj, &di, -1)?;
    let tilde = gamma.dual();
    let unit = tilde
        .at(0)
        .get(0, 0)
        .constant_value()
        .filter(|c| !c.is_zero())
        .ok_or_else(|| Error::HypothesisFailed(format!("α_0 = {} is not a unit", tilde.at(0).get(0, 0))))?;
    Ok((tilde.scale(&unit.inv().unwrap()), hat))
}

/// `β: C_J -> C_I[-1]` extending `e_k ↦ l_k`, then negated.
pub fn compute_beta(input: &KMInput) -> Result<ChainMap> {
    let (c_i, c_j) = (&input.c_i, &input.c_j);
    let b1 = FreeModuleMap::new(
        c_i.ring(),
        vec![0],
        c_j.module(1).to_vec(),
        input.data.deg_t(),
        input.data.lifts().to_vec(),
    )?;
    Ok(extend_to_chain_map(&b1, c_j, c_i, -1)?.neg())
}

/// `h_0, ..., h_{g-1}` with `h_0 = h_{g-1} = 0` and
/// `b_i h_i = β_i α_i - h_{i-1} b_i`.
///
/// `h_{g-2}` is adjusted by `b_{g-1}·y` when needed so that the identity also
/// holds at `g-1` with `h_{g-1} = 0`.
pub fn compute_homotopy(alpha: &ChainMap, beta: &ChainMap, c_i: &ChainComplex) -> Result<Vec<FreeModuleMap>> {
    let ring = c_i.ring();
    let g = c_i.len() + 1;
    let dt = beta.degree();
    let b = |i: usize| c_i.d(i);
    let zero = |i: usize| FreeModuleMap::zero(ring, c_i.module(i).to_vec(), c_i.module(i).to_vec(), dt);
    let mut h = vec![zero(0)];
    for i in 1..=g - 2 {
        let prime = beta.at(i).compose(alpha.at(i))?.sub(&h[i - 1].compose(b(i))?)?;
        h.push(lift_through(b(i), &prime)?);
    }
    let last = close_at_top(&h[g - 2], alpha, beta, c_i)?;
    h[g - 2] = last;
    h.push(zero(g - 1));
    Ok(h)
}

/// Adjusts `h_{g-2}` by `b_{g-1}·y` so that
/// `β_{g-1} α_{g-1} = h_{g-2} b_{g-1}`: with `r` the residual, solve
/// `r = b_{g-1}·s`, then `s = y·b_{g-1}`.
fn close_at_top(
    h: &FreeModuleMap,
    alpha: &ChainMap,
    beta: &ChainMap,
    c_i: &ChainComplex,
) -> Result<FreeModuleMap> {
    let g = c_i.len() + 1;
    let b = c_i.d(g - 1);
    let residual =
        |h: &FreeModuleMap| -> Result<FreeModuleMap> { beta.at(g - 1).compose(alpha.at(g - 1))?.sub(&h.compose(b)?) };
    let r = residual(h)?;
    if r.is_zero() {
        return Ok(h.clone());
    }
    let fail = |e: Error| match e {
        Error::NotLiftable(m) => Error::FinalIdentityFails(format!(
            "β_(g-1) α_(g-1) - h_(g-2) b_(g-1) cannot be removed: {m}"
        )),
        e => e,
    };
    let s = lift_through(b, &r).map_err(fail)?;
    let yt = lift_through(&b.transpose(), &s.transpose()).map_err(fail)?;
    let fixed = h.add(&b.compose(&yt.transpose())?)?;
    if !residual(&fixed)?.is_zero() {
        return Err(Error::FinalIdentityFails("homotopy identity fails at g-1".into()));
    }
    Ok(fixed)
}

/// Assembles `C_U` over `R[T]`.
pub fn kustin_miller_complex(input: &KMInput) -> Result<KMOutput> {
    let (alpha, hat_lifts) = compute_alpha(input)?;
    let beta = compute_beta(input)?;
    let homotopy = compute_homotopy(&alpha, &beta, &input.c_i)?;
    let g = input.g();
    let dt = input.data.deg_t();
    let rt = input.data.ring_t()?;
    let t = rt.var_by_name(input.data.t_name())?;

    let beta_g_one = beta
        .at(g)
        .get(0, 0)
        .constant_value()
        .filter(|c| !c.is_zero())
        .ok_or_else(|| Error::HypothesisFailed(format!("β_g(1) = {} is not a nonzero scalar", beta.at(g).get(0, 0))))?;

    let up = |m: &FreeModuleMap| m.map_entries(&rt, |p| p.promote(&rt));
    let b = |i: usize| up(input.c_i.d(i));
    let a = |i: usize| up(input.c_j.d(i));
    let al = |i: usize| up(alpha.at(i));
    let be = |i: usize| up(beta.at(i));
    let h = |i: usize| up(&homotopy[i]);
    let tw_b = |i: usize| input.c_i.module(i).to_vec();
    let tw_bs = |i: usize| input.c_i.module(i).iter().map(|x| x + dt).collect::<Vec<_>>();
    let tw_as = |i: usize| input.c_j.module(i).iter().map(|x| x + dt).collect::<Vec<_>>();
    let sign = |i: usize| if i % 2 == 0 { 1 } else { -1 };
    // x + c·T·y, entrywise
    let plus_t = |x: &FreeModuleMap, y: &FreeModuleMap, c: &Coeff| -> Result<FreeModuleMap> {
        let ty = y.mul_poly(&t.scale(c), dt);
        let entries: Vec<Polynomial> = x.entries().iter().zip(ty.entries()).map(|(p, q)| p + q).collect();
        FreeModuleMap::new_unchecked(&rt, x.target_twists().to_vec(), x.source_twists().to_vec(), x.degree(), entries)
    };
    let field = rt.field();
    let c = |k: i64| field.from_i64(k);
    let ident = |i: usize| FreeModuleMap::identity(&rt, tw_b(i));

    let mut maps = Vec::with_capacity(g);
    // f_1 = (b_1 | β_1 + T a_1)
    {
        let x = plus_t(&be(1)?, &a(1)?, &c(1))?;
        maps.push(FreeModuleMap::from_blocks(
            &rt,
            &[tw_b(0)],
            &[tw_b(1), tw_as(1)],
            &[vec![Some(&b(1)?), Some(&x)]],
        )?);
    }
    // 2 <= i <= g-2
    for i in 2..=g - 2 {
        let corner = plus_t(&h(i - 1)?, &ident(i - 1), &c(sign(i)))?;
        let (bi, bei, ai, ali) = (b(i)?, be(i)?, a(i)?.neg(), al(i - 1)?.neg());
        let rows = if i == 2 {
            vec![tw_b(1), tw_as(1)]
        } else {
            vec![tw_b(i - 1), tw_as(i - 1), tw_bs(i - 2)]
        };
        let prev_b = if i == 2 { None } else { Some(b(i - 1)?) };
        let mut blocks = vec![
            vec![Some(&bi), Some(&bei), Some(&corner)],
            vec![None, Some(&ai), Some(&ali)],
        ];
        if let Some(pb) = prev_b.as_ref() {
            blocks.push(vec![None, None, Some(pb)]);
        }
        maps.push(FreeModuleMap::from_blocks(&rt, &rows, &[tw_b(i), tw_as(i), tw_bs(i - 1)], &blocks)?);
    }
    // f_{g-1}
    {
        let i = g - 1;
        let corner = plus_t(&h(i - 1)?, &ident(i - 1), &c(sign(i)))?;
        let (bei, ai, ali, pb) = (be(i)?, a(i)?.neg(), al(i - 1)?.neg(), b(i - 1)?);
        let blocks = vec![
            vec![Some(&bei), Some(&corner)],
            vec![Some(&ai), Some(&ali)],
            vec![None, Some(&pb)],
        ];
        maps.push(FreeModuleMap::from_blocks(
            &rt,
            &[tw_b(i - 1), tw_as(i - 1), tw_bs(i - 2)],
            &[tw_as(i), tw_bs(i - 1)],
            &blocks,
        )?);
    }
    // f_g
    {
        let inv = beta_g_one.inv().unwrap();
        let scale = if g % 2 == 0 { inv } else { -&inv };
        let top = plus_t(&al(g - 1)?.neg(), &a(g)?, &scale)?;
        let bl = b(g - 1)?;
        maps.push(FreeModuleMap::from_blocks(
            &rt,
            &[tw_as(g - 1), tw_bs(g - 2)],
            &[tw_bs(g - 1)],
            &[vec![Some(&top)], vec![Some(&bl)]],
        )?);
    }
    let complex = ChainComplex::from_differentials(&rt, vec![0], maps)?;
    if !verify_complex(&complex) {
        return Err(Error::Verification("assembled differentials do not compose to zero".into()));
    }
    Ok(KMOutput {
        complex,
        alpha,
        beta,
        homotopy,
        beta_g_one,
        hat_lifts,
    })
}

/// Runs the whole construction from the two ideals.
pub fn unproject(i: &Ideal, j: &Ideal, t_name: &str, phi: Option<Vec<Polynomial>>) -> Result<(KMInput, KMOutput)> {
    let input = KMInput::from_ideals(i, j, t_name, phi)?;
    let out = kustin_miller_complex(&input)?;
    Ok((input, out))
}

