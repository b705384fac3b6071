use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::permstat::{
    all_profiles, for_each, CycleClass, IndexProfile, Parity, PermClass, Permutation, RecordClass,
    StatSummary,
};
use crate::polyring::{MultiPoly, VarRegistry};

use super::pq::pq_integer;

/// Returned by [`PolyFamily::theorem_alphas`] for families whose general
/// form provably admits no polynomial continued-fraction coefficients.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("family `{0}` has no published closed-form S-fraction")]
pub struct NoClosedForm(pub &'static str);

/// A weight scheme: one interchangeable generating-polynomial family.
///
/// A family maps each permutation of the designated class to a single
/// monomial in its registry; the family polynomial of half-size `n` is the
/// sum of those monomials over the class of `2n`-permutations.
pub trait PolyFamily: Sync {
    fn id(&self) -> &'static str;

    fn class(&self) -> PermClass;

    /// Registry able to hold every family polynomial and continued-fraction
    /// coefficient through half-size `n_max`.  Fixed-arity families ignore
    /// `n_max`; the master families generate indexed names from it.
    fn registry(&self, n_max: usize) -> Arc<VarRegistry>;

    /// Exponent vector (against `reg`) of the weight monomial of `sigma`.
    fn monomial(
        &self,
        reg: &Arc<VarRegistry>,
        sigma: &Permutation,
        profiles: &[IndexProfile],
        summary: &StatSummary,
    ) -> Vec<u32>;

    /// Published closed-form pair `(alpha_{2k-1}, alpha_{2k})` of the
    /// family's S-fraction, when one exists.
    fn theorem_alphas(
        &self,
        reg: &Arc<VarRegistry>,
        k: usize,
    ) -> Result<(MultiPoly, MultiPoly), NoClosedForm>;
}

/// Result of summing a family over its class.
#[derive(Debug, Clone)]
pub struct FamilyResult {
    pub n: usize,
    pub poly: MultiPoly,
    pub class: PermClass,
}

/// Sums the family over its class of `2n`-permutations, on `registry(n)`.
pub fn family_poly(fam: &dyn PolyFamily, n: usize) -> FamilyResult {
    let reg = fam.registry(n);
    family_poly_on(fam, &reg, n)
}

/// Like [`family_poly`] against a caller-supplied (larger) registry, so
/// results for different `n` are comparable.
pub fn family_poly_on(fam: &dyn PolyFamily, reg: &Arc<VarRegistry>, n: usize) -> FamilyResult {
    let mut poly = MultiPoly::zero(reg);
    if n == 0 {
        poly = MultiPoly::one(reg);
    } else {
        for_each(fam.class(), 2 * n, |sigma| {
            let profiles = all_profiles(sigma);
            let summary = crate::permstat::summarize_from(sigma, &profiles);
            let e = fam.monomial(reg, sigma, &profiles, &summary);
            poly.add_term(crate::polyring::Mono(e), BigInt::one());
        });
    }
    FamilyResult {
        n,
        poly,
        class: fam.class(),
    }
}

/// All registered families, in a fixed order.
pub fn registry() -> &'static [&'static dyn PolyFamily] {
    static FAMILIES: [&(dyn PolyFamily); 12] = [
        &Q4, &Q8, &Q16, &Master1, &Qhat9, &Qhat17, &Master2, &Qc8, &Qc16, &MasterC, &PxyLambda,
        &BianeQ,
    ];
    &FAMILIES
}

pub fn lookup_family(id: &str) -> Option<&'static dyn PolyFamily> {
    registry().iter().copied().find(|f| f.id() == id)
}

// ---------------------------------------------------------------------
// shared exponent builders

fn bump(e: &mut [u32], reg: &VarRegistry, name: &str, amount: usize) {
    if amount == 0 {
        return;
    }
    let idx = reg
        .index_of(name)
        .unwrap_or_else(|| panic!("registry lacks `{name}`"));
    e[idx] += amount as u32;
}

/// Record-and-cycle variable for one index of a cycle-alternating
/// permutation: cycle peaks get x/u (exclusive antirecord or not), cycle
/// valleys get y/v (exclusive record or not).
fn class_var(p: &IndexProfile, split_parity: bool) -> String {
    let base = match (p.cycle_class, p.record_class) {
        (CycleClass::Cpeak, RecordClass::Earec) => "x",
        (CycleClass::Cpeak, RecordClass::Nrar) => "u",
        (CycleClass::Cval, RecordClass::Erec) => "y",
        (CycleClass::Cval, RecordClass::Nrar) => "v",
        other => panic!("index class {other:?} cannot occur in a cycle-alternating permutation"),
    };
    if split_parity {
        let suffix = match p.parity {
            Parity::Even => "e",
            Parity::Odd => "o",
        };
        format!("{base}{suffix}")
    } else {
        base.to_string()
    }
}

fn eight_var_exponents(reg: &VarRegistry, profiles: &[IndexProfile], e: &mut [u32]) {
    for p in profiles {
        bump(e, reg, &class_var(p, true), 1);
    }
}

fn pq_exponents(reg: &VarRegistry, summary: &StatSummary, e: &mut [u32]) {
    use CycleClass::{Cpeak, Cval};
    use Parity::{Even, Odd};
    bump(e, reg, "p_m1", summary.lcross_of(Cpeak, Even));
    bump(e, reg, "p_m2", summary.lcross_of(Cpeak, Odd));
    bump(e, reg, "p_p1", summary.ucross_of(Cval, Odd));
    bump(e, reg, "p_p2", summary.ucross_of(Cval, Even));
    bump(e, reg, "q_m1", summary.lnest_of(Cpeak, Even));
    bump(e, reg, "q_m2", summary.lnest_of(Cpeak, Odd));
    bump(e, reg, "q_p1", summary.unest_of(Cval, Odd));
    bump(e, reg, "q_p2", summary.unest_of(Cval, Even));
}

const EIGHT_VARS: [&str; 8] = ["xe", "ye", "ue", "ve", "xo", "yo", "uo", "vo"];
const PQ_VARS: [&str; 8] = [
    "p_m1", "p_m2", "p_p1", "p_p2", "q_m1", "q_m2", "q_p1", "q_p2",
];

fn fixed_registry(names: &[&str]) -> Arc<VarRegistry> {
    VarRegistry::new(names.iter().map(|s| s.to_string())).expect("distinct names")
}

/// `x + c*u` style linear coefficient factor.
fn linear(reg: &Arc<VarRegistry>, x: &str, c: usize, u: &str) -> MultiPoly {
    let xv = MultiPoly::var(reg, x).expect("var");
    let uv = MultiPoly::var(reg, u).expect("var");
    &xv + &uv.scale(&BigInt::from(c))
}

/// Generated names for the singly/doubly indexed master families:
/// `a[i]` up to `bound`, or all `a[l,l']` with `l + l' <= bound`,
/// ordered by (sum, first index).
fn master_names(prefix: &str, doubly: bool, bound: usize) -> Vec<String> {
    let mut names = Vec::new();
    if doubly {
        for s in 0..=bound {
            for l in 0..=s {
                names.push(format!("{prefix}[{l},{}]", s - l));
            }
        }
    } else {
        for i in 0..=bound {
            names.push(format!("{prefix}[{i}]"));
        }
    }
    names
}

fn master_index_bound(n_max: usize) -> usize {
    // Family polynomials touch indices summing to < n_max (path heights);
    // the continued-fraction side touches alpha_m for m <= 2 n_max, whose
    // display involves indices summing to m.  One bound covers both.
    2 * n_max + 1
}

/// Sum of `b[l, m-l]` over `l = 0..=m`.
fn b_diagonal_sum(reg: &Arc<VarRegistry>, prefix: &str, m: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero(reg);
    for l in 0..=m {
        let name = format!("{prefix}[{l},{}]", m - l);
        acc = &acc + &MultiPoly::var(reg, &name).expect("indexed var");
    }
    acc
}

// ---------------------------------------------------------------------
// the families

/// 4-variable family: antirecord status of cycle peaks, record status of
/// cycle valleys, parities merged.
pub struct Q4;

impl PolyFamily for Q4 {
    fn id(&self) -> &'static str {
        "Q4"
    }

    fn class(&self) -> PermClass {
        PermClass::CycleAlternating
    }

    fn registry(&self, _n_max: usize) -> Arc<VarRegistry> {
        fixed_registry(&["x", "y", "u", "v"])
    }

    fn monomial(
        &self,
        reg: &Arc<VarRegistry>,
        _sigma: &Permutation,
        profiles: &[IndexProfile],
        _summary: &StatSummary,
    ) -> Vec<u32> {
        let mut e = vec![0u32; reg.len()];
        for p in profiles {
            bump(&mut e, reg, &class_var(p, false), 1);
        }
        e
    }

    fn theorem_alphas(
        &self,
        reg: &Arc<VarRegistry>,
        k: usize,
    ) -> Result<(MultiPoly, MultiPoly), NoClosedForm> {
        let odd = linear(reg, "x", 2 * k - 2, "u")
            .checked_mul(&linear(reg, "y", 2 * k - 2, "v"))
            .unwrap();
        let even = linear(reg, "x", 2 * k - 1, "u")
            .checked_mul(&linear(reg, "y", 2 * k - 1, "v"))
            .unwrap();
        Ok((odd, even))
    }
}

/// 8-variable family: the 4-variable statistics split by index parity.
pub struct Q8;

impl PolyFamily for Q8 {
    fn id(&self) -> &'static str {
        "Q8"
    }

    fn class(&self) -> PermClass {
        PermClass::CycleAlternating
    }

    fn registry(&self, _n_max: usize) -> Arc<VarRegistry> {
        fixed_registry(&EIGHT_VARS)
    }

    fn monomial(
        &self,
        reg: &Arc<VarRegistry>,
        _sigma: &Permutation,
        profiles: &[IndexProfile],
        _summary: &StatSummary,
    ) -> Vec<u32> {
        let mut e = vec![0u32; reg.len()];
        eight_var_exponents(reg, profiles, &mut e);
        e
    }

    fn theorem_alphas(
        &self,
        reg: &Arc<VarRegistry>,
        k: usize,
    ) -> Result<(MultiPoly, MultiPoly), NoClosedForm> {
        let odd = linear(reg, "xe", 2 * k - 2, "ue")
            .checked_mul(&linear(reg, "yo", 2 * k - 2, "vo"))
            .unwrap();
        let even = linear(reg, "xo", 2 * k - 1, "uo")
            .checked_mul(&linear(reg, "ye", 2 * k - 1, "ve"))
            .unwrap();
        Ok((odd, even))
    }
}

/// 16-variable family: 8 record/cycle variables plus four `(p, q)` pairs
/// counting refined crossings and nestings.
pub struct Q16;

fn q16_registry() -> Arc<VarRegistry> {
    let mut names: Vec<&str> = EIGHT_VARS.to_vec();
    names.extend_from_slice(&PQ_VARS);
    fixed_registry(&names)
}

/// `p^{n-1} x + q [n-1]_{p,q} u` — one factor of the p,q coefficient
/// display.
fn pq_factor(
    reg: &Arc<VarRegistry>,
    p: &str,
    q: &str,
    x: &str,
    u: &str,
    n: usize,
) -> MultiPoly {
    let pv = MultiPoly::var(reg, p).expect("var");
    let qv = MultiPoly::var(reg, q).expect("var");
    let xv = MultiPoly::var(reg, x).expect("var");
    let uv = MultiPoly::var(reg, u).expect("var");
    let first = pv.pow((n - 1) as u32).checked_mul(&xv).unwrap();
    let second = qv
        .checked_mul(&pq_integer(reg, p, q, n - 1))
        .unwrap()
        .checked_mul(&uv)
        .unwrap();
    &first + &second
}

impl PolyFamily for Q16 {
    fn id(&self) -> &'static str {
        "Q16"
    }

    fn class(&self) -> PermClass {
        PermClass::CycleAlternating
    }

    fn registry(&self, _n_max: usize) -> Arc<VarRegistry> {
        q16_registry()
    }

    fn monomial(
        &self,
        reg: &Arc<VarRegistry>,
        _sigma: &Permutation,
        profiles: &[IndexProfile],
        summary: &StatSummary,
    ) -> Vec<u32> {
        let mut e = vec![0u32; reg.len()];
        eight_var_exponents(reg, profiles, &mut e);
        pq_exponents(reg, summary, &mut e);
        e
    }

    fn theorem_alphas(
        &self,
        reg: &Arc<VarRegistry>,
        k: usize,
    ) -> Result<(MultiPoly, MultiPoly), NoClosedForm> {
        let odd = pq_factor(reg, "p_m1", "q_m1", "xe", "ue", 2 * k - 1)
            .checked_mul(&pq_factor(reg, "p_p1", "q_p1", "yo", "vo", 2 * k - 1))
            .unwrap();
        let even = pq_factor(reg, "p_m2", "q_m2", "xo", "uo", 2 * k)
            .checked_mul(&pq_factor(reg, "p_p2", "q_p2", "ye", "ve", 2 * k))
            .unwrap();
        Ok((odd, even))
    }
}

/// First master family: doubly-indexed `a[ucross, unest]` on cycle valleys
/// and `b[lcross, lnest]` on cycle peaks.
pub struct Master1;

impl PolyFamily for Master1 {
    fn id(&self) -> &'static str {
        "MASTER1"
    }

    fn class(&self) -> PermClass {
        PermClass::CycleAlternating
    }

    fn registry(&self, n_max: usize) -> Arc<VarRegistry> {
        let bound = master_index_bound(n_max);
        let mut names = master_names("a", true, bound);
        names.extend(master_names("b", true, bound));
        VarRegistry::new(names).expect("distinct names")
    }

    fn monomial(
        &self,
        reg: &Arc<VarRegistry>,
        _sigma: &Permutation,
        profiles: &[IndexProfile],
        _summary: &StatSummary,
    ) -> Vec<u32> {
        let mut e = vec![0u32; reg.len()];
        for p in profiles {
            match p.cycle_class {
                CycleClass::Cval => {
                    bump(&mut e, reg, &format!("a[{},{}]", p.ucross, p.unest), 1)
                }
                CycleClass::Cpeak => {
                    bump(&mut e, reg, &format!("b[{},{}]", p.lcross, p.lnest), 1)
                }
                other => panic!("{other:?} in cycle-alternating permutation"),
            }
        }
        e
    }

    fn theorem_alphas(
        &self,
        reg: &Arc<VarRegistry>,
        k: usize,
    ) -> Result<(MultiPoly, MultiPoly), NoClosedForm> {
        let alpha = |m: usize| {
            b_diagonal_sum(reg, "a", m - 1)
                .checked_mul(&b_diagonal_sum(reg, "b", m - 1))
                .unwrap()
        };
        Ok((alpha(2 * k - 1), alpha(2 * k)))
    }
}

/// 9-variable family: the 8-variable statistics plus `lam^cyc`.
/// No closed-form S- or J-fraction exists without specialization.
pub struct Qhat9;

fn qhat9_registry() -> Arc<VarRegistry> {
    let mut names: Vec<&str> = EIGHT_VARS.to_vec();
    names.push("lam");
    fixed_registry(&names)
}

impl PolyFamily for Qhat9 {
    fn id(&self) -> &'static str {
        "QHAT9"
    }

    fn class(&self) -> PermClass {
        PermClass::CycleAlternating
    }

    fn registry(&self, _n_max: usize) -> Arc<VarRegistry> {
        qhat9_registry()
    }

    fn monomial(
        &self,
        reg: &Arc<VarRegistry>,
        _sigma: &Permutation,
        profiles: &[IndexProfile],
        summary: &StatSummary,
    ) -> Vec<u32> {
        let mut e = vec![0u32; reg.len()];
        eight_var_exponents(reg, profiles, &mut e);
        bump(&mut e, reg, "lam", summary.cyc);
        e
    }

    fn theorem_alphas(
        &self,
        _reg: &Arc<VarRegistry>,
        _k: usize,
    ) -> Result<(MultiPoly, MultiPoly), NoClosedForm> {
        Err(NoClosedForm("QHAT9"))
    }
}

/// 17-variable family: the 16-variable statistics plus `lam^cyc`.
pub struct Qhat17;

impl PolyFamily for Qhat17 {
    fn id(&self) -> &'static str {
        "QHAT17"
    }

    fn class(&self) -> PermClass {
        PermClass::CycleAlternating
    }

    fn registry(&self, _n_max: usize) -> Arc<VarRegistry> {
        let mut names: Vec<&str> = EIGHT_VARS.to_vec();
        names.extend_from_slice(&PQ_VARS);
        names.push("lam");
        fixed_registry(&names)
    }

    fn monomial(
        &self,
        reg: &Arc<VarRegistry>,
        _sigma: &Permutation,
        profiles: &[IndexProfile],
        summary: &StatSummary,
    ) -> Vec<u32> {
        let mut e = vec![0u32; reg.len()];
        eight_var_exponents(reg, profiles, &mut e);
        pq_exponents(reg, summary, &mut e);
        bump(&mut e, reg, "lam", summary.cyc);
        e
    }

    fn theorem_alphas(
        &self,
        _reg: &Arc<VarRegistry>,
        _k: usize,
    ) -> Result<(MultiPoly, MultiPoly), NoClosedForm> {
        Err(NoClosedForm("QHAT17"))
    }
}

/// Second master family: singly-indexed `a[ucross+unest]` on cycle valleys
/// (the price paid for counting cycles), `b[lcross, lnest]` on cycle
/// peaks, and `lam^cyc`.
pub struct Master2;

impl PolyFamily for Master2 {
    fn id(&self) -> &'static str {
        "MASTER2"
    }

    fn class(&self) -> PermClass {
        PermClass::CycleAlternating
    }

    fn registry(&self, n_max: usize) -> Arc<VarRegistry> {
        let bound = master_index_bound(n_max);
        let mut names = master_names("a", false, bound);
        names.extend(master_names("b", true, bound));
        names.push("lam".to_string());
        VarRegistry::new(names).expect("distinct names")
    }

    fn monomial(
        &self,
        reg: &Arc<VarRegistry>,
        _sigma: &Permutation,
        profiles: &[IndexProfile],
        summary: &StatSummary,
    ) -> Vec<u32> {
        let mut e = vec![0u32; reg.len()];
        for p in profiles {
            match p.cycle_class {
                CycleClass::Cval => bump(&mut e, reg, &format!("a[{}]", p.ucross + p.unest), 1),
                CycleClass::Cpeak => {
                    bump(&mut e, reg, &format!("b[{},{}]", p.lcross, p.lnest), 1)
                }
                other => panic!("{other:?} in cycle-alternating permutation"),
            }
        }
        bump(&mut e, reg, "lam", summary.cyc);
        e
    }

    fn theorem_alphas(
        &self,
        reg: &Arc<VarRegistry>,
        k: usize,
    ) -> Result<(MultiPoly, MultiPoly), NoClosedForm> {
        let alpha = |m: usize| master2_alpha(reg, m);
        Ok((alpha(2 * k - 1), alpha(2 * k)))
    }
}

/// `(lam + m - 1) a[m-1] sum_l b[l, m-1-l]`.
pub(crate) fn master2_alpha(reg: &Arc<VarRegistry>, m: usize) -> MultiPoly {
    let lam = MultiPoly::var(reg, "lam").expect("lam");
    let a = MultiPoly::var(reg, &format!("a[{}]", m - 1)).expect("a");
    (&lam + &MultiPoly::constant(reg, (m - 1) as i64))
        .checked_mul(&a)
        .unwrap()
        .checked_mul(&b_diagonal_sum(reg, "b", m - 1))
        .unwrap()
}

/// 8-variable family restricted to alternating cycles.
pub struct Qc8;

impl PolyFamily for Qc8 {
    fn id(&self) -> &'static str {
        "QC8"
    }

    fn class(&self) -> PermClass {
        PermClass::AlternatingCycles
    }

    fn registry(&self, _n_max: usize) -> Arc<VarRegistry> {
        fixed_registry(&EIGHT_VARS)
    }

    fn monomial(
        &self,
        reg: &Arc<VarRegistry>,
        _sigma: &Permutation,
        profiles: &[IndexProfile],
        _summary: &StatSummary,
    ) -> Vec<u32> {
        let mut e = vec![0u32; reg.len()];
        eight_var_exponents(reg, profiles, &mut e);
        e
    }

    fn theorem_alphas(
        &self,
        reg: &Arc<VarRegistry>,
        k: usize,
    ) -> Result<(MultiPoly, MultiPoly), NoClosedForm> {
        // Down-shifted: alpha_{2k-1} = (2k-1)[xo+(2k-1)uo]ye,
        //               alpha_{2k}   = 2k[xe+2k ue]yo.
        let ye = MultiPoly::var(reg, "ye").unwrap();
        let yo = MultiPoly::var(reg, "yo").unwrap();
        let odd = linear(reg, "xo", 2 * k - 1, "uo")
            .checked_mul(&ye)
            .unwrap()
            .scale(&BigInt::from(2 * k - 1));
        let even = linear(reg, "xe", 2 * k, "ue")
            .checked_mul(&yo)
            .unwrap()
            .scale(&BigInt::from(2 * k));
        Ok((odd, even))
    }
}

/// 16-variable family restricted to alternating cycles.
pub struct Qc16;

impl PolyFamily for Qc16 {
    fn id(&self) -> &'static str {
        "QC16"
    }

    fn class(&self) -> PermClass {
        PermClass::AlternatingCycles
    }

    fn registry(&self, _n_max: usize) -> Arc<VarRegistry> {
        q16_registry()
    }

    fn monomial(
        &self,
        reg: &Arc<VarRegistry>,
        _sigma: &Permutation,
        profiles: &[IndexProfile],
        summary: &StatSummary,
    ) -> Vec<u32> {
        let mut e = vec![0u32; reg.len()];
        eight_var_exponents(reg, profiles, &mut e);
        pq_exponents(reg, summary, &mut e);
        e
    }

    fn theorem_alphas(
        &self,
        reg: &Arc<VarRegistry>,
        k: usize,
    ) -> Result<(MultiPoly, MultiPoly), NoClosedForm> {
        let ye = MultiPoly::var(reg, "ye").unwrap();
        let yo = MultiPoly::var(reg, "yo").unwrap();
        let pp2 = MultiPoly::var(reg, "p_p2").unwrap();
        let pp1 = MultiPoly::var(reg, "p_p1").unwrap();
        let odd = pq_factor(reg, "p_m2", "q_m2", "xo", "uo", 2 * k)
            .checked_mul(&pp2.pow((2 * k - 1) as u32))
            .unwrap()
            .checked_mul(&ye)
            .unwrap()
            .scale(&BigInt::from(2 * k - 1));
        let even = pq_factor(reg, "p_m1", "q_m1", "xe", "ue", 2 * k + 1)
            .checked_mul(&pp1.pow((2 * k) as u32))
            .unwrap()
            .checked_mul(&yo)
            .unwrap()
            .scale(&BigInt::from(2 * k));
        Ok((odd, even))
    }
}

/// Master family restricted to alternating cycles: `a[ucross+unest]`,
/// `b[lcross, lnest]`, no cycle weight.
pub struct MasterC;

impl PolyFamily for MasterC {
    fn id(&self) -> &'static str {
        "MASTERC"
    }

    fn class(&self) -> PermClass {
        PermClass::AlternatingCycles
    }

    fn registry(&self, n_max: usize) -> Arc<VarRegistry> {
        let bound = master_index_bound(n_max);
        let mut names = master_names("a", false, bound);
        names.extend(master_names("b", true, bound));
        VarRegistry::new(names).expect("distinct names")
    }

    fn monomial(
        &self,
        reg: &Arc<VarRegistry>,
        _sigma: &Permutation,
        profiles: &[IndexProfile],
        _summary: &StatSummary,
    ) -> Vec<u32> {
        let mut e = vec![0u32; reg.len()];
        for p in profiles {
            match p.cycle_class {
                CycleClass::Cval => bump(&mut e, reg, &format!("a[{}]", p.ucross + p.unest), 1),
                CycleClass::Cpeak => {
                    bump(&mut e, reg, &format!("b[{},{}]", p.lcross, p.lnest), 1)
                }
                other => panic!("{other:?} in cycle-alternating permutation"),
            }
        }
        e
    }

    fn theorem_alphas(
        &self,
        reg: &Arc<VarRegistry>,
        k: usize,
    ) -> Result<(MultiPoly, MultiPoly), NoClosedForm> {
        // Down-shifted master: alpha_m = m a[m] sum_l b[l, m-l].
        let alpha = |m: usize| {
            MultiPoly::var(reg, &format!("a[{m}]"))
                .unwrap()
                .checked_mul(&b_diagonal_sum(reg, "b", m))
                .unwrap()
                .scale(&BigInt::from(m))
        };
        Ok((alpha(2 * k - 1), alpha(2 * k)))
    }
}

/// Three-variable family `x^eareccpeak y^ereccval lam^cyc`; the subject of
/// the nonexistence results.
pub struct PxyLambda;

impl PolyFamily for PxyLambda {
    fn id(&self) -> &'static str {
        "PXY_LAMBDA"
    }

    fn class(&self) -> PermClass {
        PermClass::CycleAlternating
    }

    fn registry(&self, _n_max: usize) -> Arc<VarRegistry> {
        fixed_registry(&["x", "y", "lam"])
    }

    fn monomial(
        &self,
        reg: &Arc<VarRegistry>,
        _sigma: &Permutation,
        _profiles: &[IndexProfile],
        summary: &StatSummary,
    ) -> Vec<u32> {
        let mut e = vec![0u32; reg.len()];
        bump(
            &mut e,
            reg,
            "x",
            summary.record_cycle_total(RecordClass::Earec, CycleClass::Cpeak),
        );
        bump(
            &mut e,
            reg,
            "y",
            summary.record_cycle_total(RecordClass::Erec, CycleClass::Cval),
        );
        bump(&mut e, reg, "lam", summary.cyc);
        e
    }

    fn theorem_alphas(
        &self,
        _reg: &Arc<VarRegistry>,
        _k: usize,
    ) -> Result<(MultiPoly, MultiPoly), NoClosedForm> {
        Err(NoClosedForm("PXY_LAMBDA"))
    }
}

/// Inversion-counting family `q^inv`; Biane's q-secant numbers.
pub struct BianeQ;

impl PolyFamily for BianeQ {
    fn id(&self) -> &'static str {
        "BIANE_Q"
    }

    fn class(&self) -> PermClass {
        PermClass::CycleAlternating
    }

    fn registry(&self, _n_max: usize) -> Arc<VarRegistry> {
        fixed_registry(&["q"])
    }

    fn monomial(
        &self,
        _reg: &Arc<VarRegistry>,
        _sigma: &Permutation,
        _profiles: &[IndexProfile],
        summary: &StatSummary,
    ) -> Vec<u32> {
        vec![summary.inv as u32]
    }

    fn theorem_alphas(
        &self,
        reg: &Arc<VarRegistry>,
        k: usize,
    ) -> Result<(MultiPoly, MultiPoly), NoClosedForm> {
        // alpha_n = q^{2n-1} [n]_q^2
        let q = MultiPoly::var(reg, "q").unwrap();
        let alpha = |n: usize| {
            let qint = {
                let mut acc = MultiPoly::zero(reg);
                for j in 0..n {
                    acc = &acc + &q.pow(j as u32);
                }
                acc
            };
            q.pow((2 * n - 1) as u32)
                .checked_mul(&qint.pow(2))
                .unwrap()
        };
        Ok((alpha(2 * k - 1), alpha(2 * k)))
    }
}

