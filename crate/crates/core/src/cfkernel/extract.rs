//! Continued-fraction coefficient extraction from a power series.
//!
//! Extraction runs over unreduced rational functions even when the input
//! is polynomial, because intermediate tails are genuinely rational.  Each
//! computed coefficient is collapsed back to a polynomial whenever its
//! denominator divides exactly; no gcd is involved.
//!
//! Peeling step for a J-fraction: with `f` the current tail,
//! `1 - 1/f = g_k t + b_{k+1} t^2 f_next`.  For an S-fraction:
//! `1 - 1/f = a_{k+1} t f_next`.
//!
//! A zero pivot with a vanishing tail means the continued fraction
//! terminates (legitimate, e.g. geometric series) and yields a shorter
//! spec; a zero pivot with a nonzero tail is reported as `NotRegular`.

use crate::polyring::{MultiPoly, RatFunc};

use super::CfError;

/// J-fraction coefficients over rational functions.
#[derive(Debug, Clone)]
pub struct RatJFraction {
    pub gammas: Vec<RatFunc>,
    pub betas: Vec<RatFunc>,
}

/// S-fraction coefficients over rational functions.
#[derive(Debug, Clone)]
pub struct RatSFraction {
    pub alphas: Vec<RatFunc>,
}

fn check_normalized(series: &[RatFunc]) -> Result<(), CfError> {
    let ok = series
        .first()
        .map(|c| c.eq_poly(&MultiPoly::one(c.num().registry())))
        .unwrap_or(false);
    if ok {
        Ok(())
    } else {
        Err(CfError::NotNormalized)
    }
}

/// Multiplicative inverse of a series with invertible constant term,
/// to the same length.
fn series_recip(f: &[RatFunc]) -> Result<Vec<RatFunc>, CfError> {
    let c0 = f[0].recip()?;
    let mut inv = Vec::with_capacity(f.len());
    inv.push(c0.clone());
    for n in 1..f.len() {
        let mut acc: Option<RatFunc> = None;
        for k in 1..=n {
            let t = f[k].mul(&inv[n - k])?;
            acc = Some(match acc {
                None => t,
                Some(a) => a.add(&t)?,
            });
        }
        let s = acc.expect("n >= 1");
        inv.push(c0.mul(&s)?.neg().reduced());
    }
    Ok(inv)
}

/// `g = 1 - 1/f`, returned from slot 1 on (slot 0 is zero by construction).
fn one_minus_recip(f: &[RatFunc]) -> Result<Vec<RatFunc>, CfError> {
    let inv = series_recip(f)?;
    Ok(inv.into_iter().skip(1).map(|c| c.neg().reduced()).collect())
}

/// Extracts J-fraction coefficients from the Taylor series `series`
/// (slot `n` = coefficient of `t^n`, slot 0 equal to 1).  Stops when the
/// series is exhausted or the fraction terminates.
pub fn series_to_j(series: &[RatFunc]) -> Result<RatJFraction, CfError> {
    check_normalized(series)?;
    let mut f: Vec<RatFunc> = series.to_vec();
    let mut gammas = Vec::new();
    let mut betas = Vec::new();
    let mut level = 0usize;
    while f.len() >= 2 {
        let g = one_minus_recip(&f)?; // g[i] holds coefficient of t^{i+1}
        gammas.push(g[0].clone());
        if g.len() < 2 {
            break;
        }
        let beta = g[1].clone();
        if beta.is_zero() {
            if g[2..].iter().all(|c| c.is_zero()) {
                break; // terminating continued fraction
            }
            return Err(CfError::NotRegular(level + 1));
        }
        let mut next = Vec::with_capacity(g.len() - 1);
        for c in &g[1..] {
            next.push(c.div(&beta)?.reduced());
        }
        betas.push(beta);
        f = next;
        level += 1;
    }
    Ok(RatJFraction { gammas, betas })
}

/// Extracts S-fraction coefficients from the Taylor series `series`.
pub fn series_to_s(series: &[RatFunc]) -> Result<RatSFraction, CfError> {
    check_normalized(series)?;
    let mut f: Vec<RatFunc> = series.to_vec();
    let mut alphas = Vec::new();
    let mut level = 0usize;
    while f.len() >= 2 {
        let g = one_minus_recip(&f)?;
        let alpha = g[0].clone();
        if alpha.is_zero() {
            if g[1..].iter().all(|c| c.is_zero()) {
                break;
            }
            return Err(CfError::NotRegular(level + 1));
        }
        let mut next = Vec::with_capacity(g.len());
        for c in &g {
            next.push(c.div(&alpha)?.reduced());
        }
        alphas.push(alpha);
        f = next;
        level += 1;
    }
    Ok(RatSFraction { alphas })
}

/// J-fraction expansion over rational functions; mirrors
/// [`j_series`](super::j_series) for re-expansion checks against extracted
/// specs.
pub fn j_series_rat(
    gammas: &[RatFunc],
    betas: &[RatFunc],
    n_max: usize,
) -> Result<Vec<RatFunc>, CfError> {
    let reg = gammas
        .first()
        .or(betas.first())
        .map(|c| c.num().registry().clone())
        .ok_or(CfError::Depth { need: 1, have: 0 })?;
    let one = RatFunc::from_poly(MultiPoly::one(&reg));
    let zero = RatFunc::from_poly(MultiPoly::zero(&reg));
    let gm = |k: usize| gammas.get(k).unwrap_or(&zero);
    let bt = |k: usize| betas.get(k - 1).unwrap_or(&zero);
    let mut rows: Vec<Vec<RatFunc>> = vec![vec![one]];
    for n in 0..n_max {
        let prev = rows[n].clone();
        let mut row = Vec::with_capacity(n + 2);
        for k in 0..=n + 1 {
            let mut v = if k > 0 { prev[k - 1].clone() } else { zero.clone() };
            if k <= n && !prev[k].is_zero() {
                v = v.add(&gm(k).mul(&prev[k])?)?;
            }
            if k + 1 <= n && !prev[k + 1].is_zero() {
                v = v.add(&bt(k + 1).mul(&prev[k + 1])?)?;
            }
            row.push(v.reduced());
        }
        rows.push(row);
    }
    Ok(rows.into_iter().map(|r| r.into_iter().next().unwrap()).collect())
}

/// S-fraction expansion over rational functions.
pub fn s_series_rat(alphas: &[RatFunc], n_max: usize) -> Result<Vec<RatFunc>, CfError> {
    let reg = alphas
        .first()
        .map(|c| c.num().registry().clone())
        .ok_or(CfError::Depth { need: 1, have: 0 })?;
    let one = RatFunc::from_poly(MultiPoly::one(&reg));
    let zero = RatFunc::from_poly(MultiPoly::zero(&reg));
    let al = |i: usize| alphas.get(i - 1).unwrap_or(&zero);
    // Joint S/S' recurrence over rational functions.
    let mut s_row: Vec<RatFunc> = vec![one];
    let mut out = vec![s_row[0].clone()];
    for n in 0..n_max {
        let mut sp_row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut v = s_row[k].clone();
            if k + 1 <= n {
                v = v.add(&al(2 * k + 2).mul(&s_row[k + 1])?)?;
            }
            sp_row.push(v.reduced());
        }
        let mut next = Vec::with_capacity(n + 2);
        for k in 0..=n + 1 {
            let mut v = if k > 0 { sp_row[k - 1].clone() } else { zero.clone() };
            if k <= n {
                v = v.add(&al(2 * k + 1).mul(&sp_row[k])?)?;
            }
            next.push(v.reduced());
        }
        s_row = next;
        out.push(s_row[0].clone());
    }
    Ok(out)
}
