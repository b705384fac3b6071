use serde::Serialize;

use crate::polyring::{MultiPoly, PolyJson};

use super::CfError;

/// Coefficients `(a1, ..., am)` of a generic S-fraction.
#[derive(Debug, Clone)]
pub struct SFractionSpec {
    pub alphas: Vec<MultiPoly>,
}

impl SFractionSpec {
    pub fn new(alphas: Vec<MultiPoly>) -> Self {
        SFractionSpec { alphas }
    }

    /// `alpha_i` with 1-based index, as in the literature.
    pub fn alpha(&self, i: usize) -> &MultiPoly {
        &self.alphas[i - 1]
    }

    fn require(&self, need: usize) -> Result<(), CfError> {
        if self.alphas.len() < need {
            return Err(CfError::Depth {
                need,
                have: self.alphas.len(),
            });
        }
        Ok(())
    }
}

/// Coefficients `(g0, g1, ...)` and `(b1, b2, ...)` of a generic J-fraction.
#[derive(Debug, Clone)]
pub struct JFractionSpec {
    pub gammas: Vec<MultiPoly>,
    pub betas: Vec<MultiPoly>,
}

impl JFractionSpec {
    pub fn new(gammas: Vec<MultiPoly>, betas: Vec<MultiPoly>) -> Self {
        JFractionSpec { gammas, betas }
    }

    /// `gamma_k` with 0-based index.
    pub fn gamma(&self, k: usize) -> &MultiPoly {
        &self.gammas[k]
    }

    /// `beta_k` with 1-based index.
    pub fn beta(&self, k: usize) -> &MultiPoly {
        &self.betas[k - 1]
    }

    fn require(&self, gammas: usize, betas: usize) -> Result<(), CfError> {
        if self.gammas.len() < gammas {
            return Err(CfError::Depth {
                need: gammas,
                have: self.gammas.len(),
            });
        }
        if self.betas.len() < betas {
            return Err(CfError::Depth {
                need: betas,
                have: self.betas.len(),
            });
        }
        Ok(())
    }
}

/// Taylor coefficients of an ordinary generating function, slot `n`
/// holding the coefficient of `t^n`.
#[derive(Debug, Clone)]
pub struct SeriesVec {
    pub coeffs: Vec<MultiPoly>,
}

impl SeriesVec {
    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Which triangular array a [`TriMatrix`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TriKind {
    #[serde(rename = "JR")]
    Jr,
    #[serde(rename = "JR_weighted")]
    JrWeighted,
    #[serde(rename = "SR_first")]
    SrFirst,
    #[serde(rename = "SR_second")]
    SrSecond,
}

/// Lower-triangular array of polynomials; row `n` has `n+1` entries.
#[derive(Debug, Clone)]
pub struct TriMatrix {
    pub kind: TriKind,
    pub rows: Vec<Vec<MultiPoly>>,
}

impl TriMatrix {
    pub fn entry(&self, n: usize, k: usize) -> &MultiPoly {
        &self.rows[n][k]
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn to_json_string(&self) -> String {
        #[derive(Serialize)]
        struct TriJson {
            kind: TriKind,
            rows: Vec<Vec<PolyJson>>,
        }
        let out = TriJson {
            kind: self.kind,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(PolyJson::from_poly).collect())
                .collect(),
        };
        serde_json::to_string(&out).expect("serialization cannot fail")
    }
}

use crate::polyring::VarRegistry;

fn registry_of_specs(polys: &[&MultiPoly]) -> std::sync::Arc<VarRegistry> {
    polys
        .first()
        .map(|p| p.registry().clone())
        .expect("at least one coefficient")
}

/// Generalized Jacobi-Rogers triangle `J_{n,k}` for rows `0..=n_max` via
/// `J_{n+1,k} = J_{n,k-1} + g_k J_{n,k} + b_{k+1} J_{n,k+1}`.
pub fn jr_matrix(spec: &JFractionSpec, n_max: usize) -> Result<TriMatrix, CfError> {
    if n_max > 0 {
        spec.require(n_max, n_max.saturating_sub(1))?;
    }
    let reg = spec
        .gammas
        .first()
        .or(spec.betas.first())
        .map(|p| p.registry().clone())
        .unwrap_or_else(|| VarRegistry::new(Vec::<String>::new()).expect("empty registry"));
    let one = MultiPoly::one(&reg);
    let zero = MultiPoly::zero(&reg);
    let mut rows: Vec<Vec<MultiPoly>> = vec![vec![one.clone()]];
    for n in 0..n_max {
        let prev = &rows[n];
        let at = |k: usize| -> &MultiPoly {
            if k <= n {
                &prev[k]
            } else {
                &zero
            }
        };
        let mut row = Vec::with_capacity(n + 2);
        for k in 0..=n + 1 {
            let mut v = if k > 0 { at(k - 1).clone() } else { zero.clone() };
            if k <= n && !at(k).is_zero() {
                v = &v + &spec.gamma(k).checked_mul(at(k))?;
            }
            if k + 1 <= n && !at(k + 1).is_zero() {
                v = &v + &spec.beta(k + 1).checked_mul(at(k + 1))?;
            }
            row.push(v);
        }
        rows.push(row);
    }
    Ok(TriMatrix {
        kind: TriKind::Jr,
        rows,
    })
}

/// Rise-weighted Jacobi-Rogers triangle via
/// `J_{n+1,k} = a_{k-1} J_{n,k-1} + c_k J_{n,k} + b_{k+1} J_{n,k+1}`.
pub fn jr_matrix_weighted(
    a: &[MultiPoly],
    b: &[MultiPoly],
    c: &[MultiPoly],
    n_max: usize,
) -> Result<TriMatrix, CfError> {
    if n_max > 0 {
        for (seq, need) in [(a, n_max), (b, n_max - 1), (c, n_max)] {
            if seq.len() < need {
                return Err(CfError::Depth {
                    need,
                    have: seq.len(),
                });
            }
        }
    }
    let reg = registry_of_specs(
        &a.iter()
            .chain(b.iter())
            .chain(c.iter())
            .collect::<Vec<_>>(),
    );
    let one = MultiPoly::one(&reg);
    let zero = MultiPoly::zero(&reg);
    let mut rows: Vec<Vec<MultiPoly>> = vec![vec![one.clone()]];
    for n in 0..n_max {
        let prev = rows[n].clone();
        let at = |k: usize| -> &MultiPoly {
            if k <= n {
                &prev[k]
            } else {
                &zero
            }
        };
        let mut row = Vec::with_capacity(n + 2);
        for k in 0..=n + 1 {
            let mut v = zero.clone();
            if k > 0 && !at(k - 1).is_zero() {
                v = &v + &a[k - 1].checked_mul(at(k - 1))?;
            }
            if k <= n && !at(k).is_zero() {
                v = &v + &c[k].checked_mul(at(k))?;
            }
            if k + 1 <= n && !at(k + 1).is_zero() {
                v = &v + &b[k].checked_mul(at(k + 1))?; // b is 1-based: b[k] = b_{k+1}
            }
            row.push(v);
        }
        rows.push(row);
    }
    Ok(TriMatrix {
        kind: TriKind::JrWeighted,
        rows,
    })
}

/// Taylor coefficients `J_0..J_N` of the J-fraction: column 0 of the
/// Jacobi-Rogers triangle.
pub fn j_series(spec: &JFractionSpec, n: usize) -> Result<SeriesVec, CfError> {
    let m = jr_matrix(spec, n)?;
    Ok(SeriesVec {
        coeffs: m.rows.iter().map(|r| r[0].clone()).collect(),
    })
}

/// Generalized Stieltjes-Rogers triangles `(S, S')` for rows `0..=n_max`
/// via the joint recurrence
/// `S'_{n,k} = S_{n,k} + a_{2k+2} S_{n,k+1}`,
/// `S_{n+1,k} = S'_{n,k-1} + a_{2k+1} S'_{n,k}`.
pub fn sr_matrices(spec: &SFractionSpec, n_max: usize) -> Result<(TriMatrix, TriMatrix), CfError> {
    spec.require(2 * n_max)?;
    let reg = spec
        .alphas
        .first()
        .map(|p| p.registry().clone())
        .unwrap_or_else(|| VarRegistry::new(Vec::<String>::new()).expect("empty registry"));
    let one = MultiPoly::one(&reg);
    let zero = MultiPoly::zero(&reg);
    let mut s_rows: Vec<Vec<MultiPoly>> = vec![vec![one.clone()]];
    let mut sp_rows: Vec<Vec<MultiPoly>> = Vec::new();
    for n in 0..=n_max {
        // S'_{n,k} for k = 0..=n
        let s_row = &s_rows[n];
        let mut sp_row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut v = s_row[k].clone();
            if k + 1 <= n {
                v = &v + &spec.alpha(2 * k + 2).checked_mul(&s_row[k + 1])?;
            }
            sp_row.push(v);
        }
        sp_rows.push(sp_row);
        if n == n_max {
            break;
        }
        // S_{n+1,k} for k = 0..=n+1
        let sp_row = &sp_rows[n];
        let mut next = Vec::with_capacity(n + 2);
        for k in 0..=n + 1 {
            let mut v = if k > 0 { sp_row[k - 1].clone() } else { zero.clone() };
            if k <= n {
                v = &v + &spec.alpha(2 * k + 1).checked_mul(&sp_row[k])?;
            }
            next.push(v);
        }
        s_rows.push(next);
    }
    Ok((
        TriMatrix {
            kind: TriKind::SrFirst,
            rows: s_rows,
        },
        TriMatrix {
            kind: TriKind::SrSecond,
            rows: sp_rows,
        },
    ))
}

/// Taylor coefficients `S_0..S_N` of the S-fraction.
pub fn s_series(spec: &SFractionSpec, n: usize) -> Result<SeriesVec, CfError> {
    let (s, _) = sr_matrices(spec, n)?;
    Ok(SeriesVec {
        coeffs: s.rows.iter().map(|r| r[0].clone()).collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContractionParity {
    Even,
    Odd,
}

/// Contraction of an S-fraction to the equivalent J-fraction.
///
/// Even: `g0 = a1`, `g_n = a_{2n} + a_{2n+1}`, `b_n = a_{2n-1} a_{2n}`.
/// Odd:  `g_n = a_{2n+1} + a_{2n+2}`, `b_n = a_{2n} a_{2n+1}`.
pub fn contract(spec: &SFractionSpec, parity: ContractionParity) -> Result<JFractionSpec, CfError> {
    if spec.alphas.is_empty() {
        return Err(CfError::Depth { need: 1, have: 0 });
    }
    let m = spec.alphas.len();
    let mut gammas = Vec::new();
    let mut betas = Vec::new();
    match parity {
        ContractionParity::Even => {
            gammas.push(spec.alpha(1).clone());
            let mut n = 1;
            while 2 * n + 1 <= m {
                gammas.push(&spec.alpha(2 * n).clone() + spec.alpha(2 * n + 1));
                n += 1;
            }
            let mut n = 1;
            while 2 * n <= m {
                betas.push(spec.alpha(2 * n - 1).checked_mul(spec.alpha(2 * n))?);
                n += 1;
            }
        }
        ContractionParity::Odd => {
            let mut n = 0;
            while 2 * n + 2 <= m {
                gammas.push(&spec.alpha(2 * n + 1).clone() + spec.alpha(2 * n + 2));
                n += 1;
            }
            let mut n = 1;
            while 2 * n + 1 <= m {
                betas.push(spec.alpha(2 * n).checked_mul(spec.alpha(2 * n + 1))?);
                n += 1;
            }
        }
    }
    Ok(JFractionSpec { gammas, betas })
}
