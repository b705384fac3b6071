use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde_json::json;

use crate::cfkernel::{s_series, SFractionSpec};
use crate::polyring::{MultiPoly, PolyJson, VarRegistry};

use super::families::{family_poly_on, lookup_family};
use super::pq::pq_integer;

type BindFn = fn(&Arc<VarRegistry>) -> HashMap<&'static str, MultiPoly>;
type AlphaFn = fn(&Arc<VarRegistry>, usize) -> MultiPoly;
type PrefFn = fn(&Arc<VarRegistry>) -> MultiPoly;

/// One continued-fraction statement: a family, an optional specialization,
/// and the published coefficient display.  The statement verified is
///
/// `sum_n bind(P_{n+shift}) t^n = prefactor * S-fraction(alpha)`
///
/// as an exact identity of Taylor coefficients.
pub struct Theorem {
    pub id: &'static str,
    pub family: &'static str,
    pub shift: usize,
    pub default_nmax: u32,
    bind: BindFn,
    alpha: AlphaFn,
    prefactor: PrefFn,
}

#[derive(Debug, Clone)]
pub struct TheoremOutcome {
    pub ok: bool,
    /// Permutations enumerated across all sizes.
    pub instances: u64,
    pub counterexample: Option<serde_json::Value>,
}

impl Theorem {
    /// The theorem's S-fraction coefficients `alpha_1..alpha_m`.
    pub fn alphas(&self, reg: &Arc<VarRegistry>, m: usize) -> Vec<MultiPoly> {
        (1..=m).map(|i| (self.alpha)(reg, i)).collect()
    }

    pub fn bindings(&self, reg: &Arc<VarRegistry>) -> HashMap<&'static str, MultiPoly> {
        (self.bind)(reg)
    }

    pub fn prefactor(&self, reg: &Arc<VarRegistry>) -> MultiPoly {
        (self.prefactor)(reg)
    }

    /// Compares the specialized family polynomials against the expansion of
    /// the published S-fraction, exactly, through half-size `n_max`.
    pub fn verify(&self, n_max: usize) -> TheoremOutcome {
        let fam = lookup_family(self.family).expect("theorem references a registered family");
        let reg = fam.registry(n_max);
        let bind = (self.bind)(&reg);
        let depth = n_max - self.shift;
        let mut instances = 0u64;
        let mut lhs = Vec::with_capacity(depth + 1);
        for m in 0..=depth {
            let fr = family_poly_on(fam, &reg, m + self.shift);
            instances += coeff_sum_u64(&fr.poly);
            lhs.push(
                fr.poly
                    .substitute(&reg, &bind)
                    .expect("bindings live on the family registry"),
            );
        }
        let spec = SFractionSpec::new(self.alphas(&reg, 2 * depth));
        let rhs_series = s_series(&spec, depth).expect("spec sized for depth");
        let pref = (self.prefactor)(&reg);
        for m in 0..=depth {
            let rhs = pref.checked_mul(rhs_series.coeff(m)).unwrap();
            if lhs[m] != rhs {
                let diff = lhs[m].checked_sub(&rhs).unwrap();
                let (mono, c) = diff.terms().next().expect("nonzero difference");
                return TheoremOutcome {
                    ok: false,
                    instances,
                    counterexample: Some(json!({
                        "theorem": self.id,
                        "n": m + self.shift,
                        "minimal_monomial": { "c": c.to_string(), "e": mono.0 },
                        "family_poly": PolyJson::from_poly(&lhs[m]),
                        "cf_poly": PolyJson::from_poly(&rhs),
                    })),
                };
            }
        }
        TheoremOutcome {
            ok: true,
            instances,
            counterexample: None,
        }
    }
}

fn coeff_sum_u64(p: &MultiPoly) -> u64 {
    let mut acc = BigInt::from(0);
    for (_, c) in p.terms() {
        acc += c;
    }
    u64::try_from(acc).unwrap_or(u64::MAX)
}

fn no_bind(_reg: &Arc<VarRegistry>) -> HashMap<&'static str, MultiPoly> {
    HashMap::new()
}

fn bind_yv(reg: &Arc<VarRegistry>) -> HashMap<&'static str, MultiPoly> {
    let mut b = HashMap::new();
    b.insert("ve", MultiPoly::var(reg, "ye").unwrap());
    b.insert("vo", MultiPoly::var(reg, "yo").unwrap());
    b
}

fn bind_yv_pq(reg: &Arc<VarRegistry>) -> HashMap<&'static str, MultiPoly> {
    let mut b = bind_yv(reg);
    b.insert("q_p1", MultiPoly::var(reg, "p_p1").unwrap());
    b.insert("q_p2", MultiPoly::var(reg, "p_p2").unwrap());
    b
}

fn bind_elliptic(reg: &Arc<VarRegistry>) -> HashMap<&'static str, MultiPoly> {
    let one = MultiPoly::one(reg);
    let mut b = HashMap::new();
    b.insert("ue", MultiPoly::var(reg, "xe").unwrap());
    b.insert("uo", MultiPoly::var(reg, "xo").unwrap());
    for v in ["ye", "ve", "yo", "vo"] {
        b.insert(v, one.clone());
    }
    b
}

fn pref_one(reg: &Arc<VarRegistry>) -> MultiPoly {
    MultiPoly::one(reg)
}

fn pref_xeyo(reg: &Arc<VarRegistry>) -> MultiPoly {
    MultiPoly::var(reg, "xe")
        .unwrap()
        .checked_mul(&MultiPoly::var(reg, "yo").unwrap())
        .unwrap()
}

fn pref_a0b00(reg: &Arc<VarRegistry>) -> MultiPoly {
    MultiPoly::var(reg, "a[0]")
        .unwrap()
        .checked_mul(&MultiPoly::var(reg, "b[0,0]").unwrap())
        .unwrap()
}

/// Pulls `alpha_m` out of a family's published `(odd, even)` pair.
fn family_alpha(family: &str, reg: &Arc<VarRegistry>, m: usize) -> MultiPoly {
    let fam = lookup_family(family).expect("registered family");
    let k = m.div_ceil(2);
    let (odd, even) = fam
        .theorem_alphas(reg, k)
        .expect("family has a published display");
    if m % 2 == 1 {
        odd
    } else {
        even
    }
}

fn alpha_q8(reg: &Arc<VarRegistry>, m: usize) -> MultiPoly {
    family_alpha("Q8", reg, m)
}

fn alpha_q16(reg: &Arc<VarRegistry>, m: usize) -> MultiPoly {
    family_alpha("Q16", reg, m)
}

fn alpha_master1(reg: &Arc<VarRegistry>, m: usize) -> MultiPoly {
    family_alpha("MASTER1", reg, m)
}

fn alpha_master2(reg: &Arc<VarRegistry>, m: usize) -> MultiPoly {
    family_alpha("MASTER2", reg, m)
}

fn alpha_qc8(reg: &Arc<VarRegistry>, m: usize) -> MultiPoly {
    family_alpha("QC8", reg, m)
}

fn alpha_qc16(reg: &Arc<VarRegistry>, m: usize) -> MultiPoly {
    family_alpha("QC16", reg, m)
}

fn alpha_masterc(reg: &Arc<VarRegistry>, m: usize) -> MultiPoly {
    family_alpha("MASTERC", reg, m)
}

fn alpha_biane(reg: &Arc<VarRegistry>, m: usize) -> MultiPoly {
    family_alpha("BIANE_Q", reg, m)
}

/// Second S-fraction: `alpha_{2k-1} = (lam+2k-2)[xe+(2k-2)ue] yo`,
/// `alpha_{2k} = (lam+2k-1)[xo+(2k-1)uo] ye`.
fn alpha_second(reg: &Arc<VarRegistry>, m: usize) -> MultiPoly {
    let lam = MultiPoly::var(reg, "lam").unwrap();
    let shift = &lam + &MultiPoly::constant(reg, (m - 1) as i64);
    let (x, u, y) = if m % 2 == 1 {
        ("xe", "ue", "yo")
    } else {
        ("xo", "uo", "ye")
    };
    let xv = MultiPoly::var(reg, x).unwrap();
    let uv = MultiPoly::var(reg, u).unwrap();
    let yv = MultiPoly::var(reg, y).unwrap();
    let factor = &xv + &uv.scale(&BigInt::from(m - 1));
    shift.checked_mul(&factor).unwrap().checked_mul(&yv).unwrap()
}

/// Second S-fraction, p,q-generalization.
fn alpha_second_pq(reg: &Arc<VarRegistry>, m: usize) -> MultiPoly {
    let lam = MultiPoly::var(reg, "lam").unwrap();
    let shift = &lam + &MultiPoly::constant(reg, (m - 1) as i64);
    let (pm, qm, x, u, pp, y) = if m % 2 == 1 {
        ("p_m1", "q_m1", "xe", "ue", "p_p1", "yo")
    } else {
        ("p_m2", "q_m2", "xo", "uo", "p_p2", "ye")
    };
    let pmv = MultiPoly::var(reg, pm).unwrap();
    let qmv = MultiPoly::var(reg, qm).unwrap();
    let xv = MultiPoly::var(reg, x).unwrap();
    let uv = MultiPoly::var(reg, u).unwrap();
    let ppv = MultiPoly::var(reg, pp).unwrap();
    let yv = MultiPoly::var(reg, y).unwrap();
    let factor = &pmv.pow((m - 1) as u32).checked_mul(&xv).unwrap()
        + &qmv
            .checked_mul(&pq_integer(reg, pm, qm, m - 1))
            .unwrap()
            .checked_mul(&uv)
            .unwrap();
    shift
        .checked_mul(&factor)
        .unwrap()
        .checked_mul(&ppv.pow((m - 1) as u32))
        .unwrap()
        .checked_mul(&yv)
        .unwrap()
}

/// Elliptic remark: `alpha_{2k-1} = (2k-1)^2 xe`, `alpha_{2k} = (2k)^2 xo`.
fn alpha_elliptic(reg: &Arc<VarRegistry>, m: usize) -> MultiPoly {
    let v = if m % 2 == 1 { "xe" } else { "xo" };
    MultiPoly::var(reg, v).unwrap().scale(&BigInt::from(m * m))
}

/// All registered theorems, in a fixed order.
pub fn registry() -> &'static [Theorem] {
    static THEOREMS: [Theorem; 10] = [
        Theorem {
            id: "first-sfrac",
            family: "Q8",
            shift: 0,
            default_nmax: 5,
            bind: no_bind,
            alpha: alpha_q8,
            prefactor: pref_one,
        },
        Theorem {
            id: "first-sfrac-pq",
            family: "Q16",
            shift: 0,
            default_nmax: 4,
            bind: no_bind,
            alpha: alpha_q16,
            prefactor: pref_one,
        },
        Theorem {
            id: "second-sfrac",
            family: "QHAT9",
            shift: 0,
            default_nmax: 5,
            bind: bind_yv,
            alpha: alpha_second,
            prefactor: pref_one,
        },
        Theorem {
            id: "second-sfrac-pq",
            family: "QHAT17",
            shift: 0,
            default_nmax: 4,
            bind: bind_yv_pq,
            alpha: alpha_second_pq,
            prefactor: pref_one,
        },
        Theorem {
            id: "master1",
            family: "MASTER1",
            shift: 0,
            default_nmax: 3,
            bind: no_bind,
            alpha: alpha_master1,
            prefactor: pref_one,
        },
        Theorem {
            id: "master2",
            family: "MASTER2",
            shift: 0,
            default_nmax: 3,
            bind: no_bind,
            alpha: alpha_master2,
            prefactor: pref_one,
        },
        Theorem {
            id: "altcyc",
            family: "QC8",
            shift: 1,
            default_nmax: 4,
            bind: bind_yv,
            alpha: alpha_qc8,
            prefactor: pref_xeyo,
        },
        Theorem {
            id: "altcyc-pq",
            family: "QC16",
            shift: 1,
            default_nmax: 4,
            bind: bind_yv_pq,
            alpha: alpha_qc16,
            prefactor: pref_xeyo,
        },
        Theorem {
            id: "altcyc-master",
            family: "MASTERC",
            shift: 1,
            default_nmax: 4,
            bind: no_bind,
            alpha: alpha_masterc,
            prefactor: pref_a0b00,
        },
        Theorem {
            id: "biane",
            family: "BIANE_Q",
            shift: 0,
            default_nmax: 5,
            bind: no_bind,
            alpha: alpha_biane,
            prefactor: pref_one,
        },
    ];
    &THEOREMS
}

pub fn lookup_theorem(id: &str) -> Option<&'static Theorem> {
    registry().iter().find(|t| t.id == id)
}

/// The elliptic remark is a specialization of `first-sfrac` rather than a
/// standalone display; exposed separately for the verification harness.
pub fn elliptic_theorem() -> Theorem {
    Theorem {
        id: "elliptic",
        family: "Q8",
        shift: 0,
        default_nmax: 5,
        bind: bind_elliptic,
        alpha: alpha_elliptic,
        prefactor: pref_one,
    }
}
