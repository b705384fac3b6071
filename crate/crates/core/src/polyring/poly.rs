use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::registry::compatible;
use super::{PolyError, VarRegistry};

/// Exponent vector, ordered graded-lexicographically: total degree first,
/// ties broken left to right with larger exponents ranked higher.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn sub(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn add(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients.  No stored coefficient is zero; the zero polynomial has an
/// empty term map.
#[derive(Debug, Clone)]
pub struct MultiPoly {
    reg: Arc<VarRegistry>,
    terms: BTreeMap<Mono, BigInt>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        compatible(&self.reg, &other.reg) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero(reg: &Arc<VarRegistry>) -> Self {
        MultiPoly {
            reg: reg.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(reg: &Arc<VarRegistry>) -> Self {
        Self::constant(reg, BigInt::one())
    }

    pub fn constant(reg: &Arc<VarRegistry>, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(vec![0; reg.len()]), c);
        }
        MultiPoly {
            reg: reg.clone(),
            terms,
        }
    }

    /// The variable `name` as a polynomial.
    pub fn var(reg: &Arc<VarRegistry>, name: &str) -> Result<Self, PolyError> {
        let idx = reg.index_of_required(name)?;
        Ok(Self::var_by_index(reg, idx))
    }

    pub fn var_by_index(reg: &Arc<VarRegistry>, idx: usize) -> Self {
        let mut e = vec![0; reg.len()];
        e[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Mono(e), BigInt::one());
        MultiPoly {
            reg: reg.clone(),
            terms,
        }
    }

    /// Single term `c * prod vars[i]^exps[i]`.
    pub fn term(
        reg: &Arc<VarRegistry>,
        c: impl Into<BigInt>,
        exps: Vec<u32>,
    ) -> Result<Self, PolyError> {
        if exps.len() != reg.len() {
            return Err(PolyError::Malformed(format!(
                "exponent vector of length {} against registry of {} variables",
                exps.len(),
                reg.len()
            )));
        }
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(exps), c);
        }
        Ok(MultiPoly {
            reg: reg.clone(),
            terms,
        })
    }

    pub fn from_terms<I>(reg: &Arc<VarRegistry>, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut p = Self::zero(reg);
        for (e, c) in terms {
            if e.len() != reg.len() {
                return Err(PolyError::Malformed(
                    "exponent vector length mismatch".into(),
                ));
            }
            p.add_term(Mono(e), c);
        }
        Ok(p)
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.reg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.total_degree() == 0 && c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// True when every term has the same total degree `d` over the variable
    /// subset `vars` (indices into the registry).
    pub fn is_homogeneous_in(&self, vars: &[usize], d: u32) -> bool {
        self.terms
            .keys()
            .all(|m| vars.iter().map(|&v| m.0[v]).sum::<u32>() == d)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Coefficient of `var^k`, as a polynomial in the same registry with the
    /// `var` exponent zeroed out.
    pub fn coeff_of(&self, var: usize, k: u32) -> MultiPoly {
        let mut out = Self::zero(&self.reg);
        for (m, c) in &self.terms {
            if m.0[var] == k {
                let mut e = m.0.clone();
                e[var] = 0;
                out.add_term(Mono(e), c.clone());
            }
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compat(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if compatible(&self.reg, &other.reg) {
            Ok(())
        } else {
            Err(PolyError::RegistryMismatch)
        }
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_compat(other)?;
        let mut out = Self::zero(&self.reg);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.add(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.reg);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut out = Self::one(&self.reg);
        for _ in 0..n {
            out = out.checked_mul(self).expect("same registry");
        }
        out
    }

    /// Largest term in graded-lex order.
    pub fn leading(&self) -> Option<(&Mono, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Gcd of all coefficients (non-negative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `d`; fails when some coefficient is not
    /// divisible.
    pub fn div_content(&self, d: &BigInt) -> Result<MultiPoly, PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let mut out = Self::zero(&self.reg);
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            out.terms.insert(m.clone(), q);
        }
        Ok(out)
    }

    /// Exact multivariate division: returns `q` with `q * den == self`, or
    /// `NotDivisible`.  Division is by leading term under graded-lex; the
    /// remainder must vanish.
    pub fn exact_div(&self, den: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_compat(den)?;
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let (dm, dc) = den.leading().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut q = Self::zero(&self.reg);
        while let Some((rm, rc)) = rem.leading() {
            if !dm.divides(rm) {
                return Err(PolyError::NotDivisible);
            }
            let (qc, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            let tm = rm.sub(dm);
            for (m, c) in &den.terms {
                rem.add_term(m.add(&tm), -(c * &qc));
            }
            q.add_term(tm, qc);
        }
        Ok(q)
    }

    /// Substitutes variables and/or moves the polynomial onto another
    /// registry.  Every variable of `self` must either appear in `bind`
    /// (with a polynomial on `target`) or exist by name in `target`.
    pub fn substitute(
        &self,
        target: &Arc<VarRegistry>,
        bind: &HashMap<&str, MultiPoly>,
    ) -> Result<MultiPoly, PolyError> {
        for p in bind.values() {
            if !compatible(p.registry(), target) {
                return Err(PolyError::RegistryMismatch);
            }
        }
        // Per-variable images; identity images are handled as bare monomial
        // shifts to avoid useless power computations.
        enum Image {
            Var(usize),
            Poly(MultiPoly),
        }
        let mut images = Vec::with_capacity(self.reg.len());
        for name in self.reg.names() {
            if let Some(p) = bind.get(name.as_str()) {
                images.push(Image::Poly(p.clone()));
            } else {
                let idx = target.index_of_required(name)?;
                images.push(Image::Var(idx));
            }
        }
        let mut pow_cache: Vec<Vec<MultiPoly>> = vec![Vec::new(); self.reg.len()];
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut shift = vec![0u32; target.len()];
            let mut acc: Option<MultiPoly> = None;
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &images[v] {
                    Image::Var(idx) => shift[*idx] += e,
                    Image::Poly(p) => {
                        let cache = &mut pow_cache[v];
                        if cache.is_empty() {
                            cache.push(Self::one(target));
                        }
                        while cache.len() <= e as usize {
                            let next = cache.last().unwrap().checked_mul(p)?;
                            cache.push(next);
                        }
                        let pw = &cache[e as usize];
                        acc = Some(match acc {
                            None => pw.clone(),
                            Some(a) => a.checked_mul(pw)?,
                        });
                    }
                }
            }
            let base = Self::term(target, c.clone(), shift)?;
            let term = match acc {
                None => base,
                Some(a) => a.checked_mul(&base)?,
            };
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }

    /// Moves the polynomial onto `target` by variable name.  Variables
    /// missing from `target` must not occur in any term.
    pub fn project(&self, target: &Arc<VarRegistry>) -> Result<MultiPoly, PolyError> {
        let mut map = Vec::with_capacity(self.reg.len());
        for (v, name) in self.reg.names().iter().enumerate() {
            match target.index_of(name) {
                Some(idx) => map.push(Some(idx)),
                None => {
                    if self.degree_in(v) > 0 {
                        return Err(PolyError::UnknownVariable(name.clone()));
                    }
                    map.push(None);
                }
            }
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (v, &x) in m.0.iter().enumerate() {
                if x > 0 {
                    e[map[v].expect("checked above")] = x;
                }
            }
            out.add_term(Mono(e), c.clone());
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point (one value per registry
    /// variable).
    pub fn eval_q(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.reg.len(), "point arity mismatch");
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[v];
                }
            }
            acc += t;
        }
        acc
    }

    /// Plain-text rendering, terms graded-lex descending.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (v, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.reg.name(v).to_string()),
                    _ => factors.push(format!("{}^{}", self.reg.name(v), e)),
                }
            }
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).expect("registry mismatch")
            }
        }
        impl std::ops::$trait for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$checked(&rhs).expect("registry mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn reg3() -> Arc<VarRegistry> {
        VarRegistry::new(["x", "y", "z"]).unwrap()
    }

    fn x(reg: &Arc<VarRegistry>) -> MultiPoly {
        MultiPoly::var(reg, "x").unwrap()
    }

    fn y(reg: &Arc<VarRegistry>) -> MultiPoly {
        MultiPoly::var(reg, "y").unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = reg3();
        let (x, y) = (x(&r), y(&r));
        let lhs = (&x + &y).checked_mul(&x.checked_sub(&y).unwrap()).unwrap();
        let rhs = x.pow(2).checked_sub(&y.pow(2)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mul_by_zero_is_empty() {
        let r = reg3();
        let p = (&x(&r) + &MultiPoly::constant(&r, 7)).pow(3);
        let z = MultiPoly::zero(&r);
        let prod = p.checked_mul(&z).unwrap();
        assert!(prod.is_zero());
        assert_eq!(prod.num_terms(), 0);
    }

    #[test]
    fn binomial_square() {
        // (1+xy)^2 = 1 + 2xy + x^2 y^2
        let r = reg3();
        let one = MultiPoly::one(&r);
        let xy = x(&r).checked_mul(&y(&r)).unwrap();
        let p = (&one + &xy).pow(2);
        let expected = MultiPoly::from_terms(
            &r,
            vec![
                (vec![0, 0, 0], 1.into()),
                (vec![1, 1, 0], 2.into()),
                (vec![2, 2, 0], 1.into()),
            ],
        )
        .unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn substitute_numeric() {
        // lam + lam^2 at lam=1 -> 2
        let r = VarRegistry::new(["lam"]).unwrap();
        let lam = MultiPoly::var(&r, "lam").unwrap();
        let p = &lam + &lam.pow(2);
        let mut bind = HashMap::new();
        bind.insert("lam", MultiPoly::one(&r));
        let q = p.substitute(&r, &bind).unwrap();
        assert_eq!(q, MultiPoly::constant(&r, 2));
    }

    #[test]
    fn substitute_partial() {
        // x + y - 2xy at y=1 -> 1 - x
        let r = reg3();
        let p = &(&x(&r) + &y(&r)) - &x(&r).checked_mul(&y(&r)).unwrap().scale(&2.into());
        let mut bind = HashMap::new();
        bind.insert("y", MultiPoly::one(&r));
        let q = p.substitute(&r, &bind).unwrap();
        let expected = MultiPoly::one(&r).checked_sub(&x(&r)).unwrap();
        assert_eq!(q, expected);
    }

    #[test]
    fn exact_div_basic() {
        let r = reg3();
        let (x, y) = (x(&r), y(&r));
        let num = x.pow(2).checked_sub(&y.pow(2)).unwrap();
        let den = x.checked_sub(&y).unwrap();
        let q = num.exact_div(&den).unwrap();
        assert_eq!(q, (&x + &y));
    }

    #[test]
    fn exact_div_not_divisible() {
        let r = reg3();
        let (x, y) = (x(&r), y(&r));
        let num = &x.checked_mul(&y).unwrap() + &x; // xy + x
        assert_eq!(num.exact_div(&y), Err(PolyError::NotDivisible));
    }

    #[test]
    fn registry_mismatch_is_reported() {
        let a = VarRegistry::new(["x"]).unwrap();
        let b = VarRegistry::new(["y"]).unwrap();
        let pa = MultiPoly::var(&a, "x").unwrap();
        let pb = MultiPoly::var(&b, "y").unwrap();
        assert_eq!(pa.checked_add(&pb), Err(PolyError::RegistryMismatch));
    }

    #[test]
    fn grlex_leading_term() {
        let r = reg3();
        // x^2 beats xy z^0 ties: degree 2 each; lex on (2,0,0) vs (1,1,0)
        let p = &x(&r).pow(2) + &x(&r).checked_mul(&y(&r)).unwrap();
        let (m, _) = p.leading().unwrap();
        assert_eq!(m.0, vec![2, 0, 0]);
    }
}
