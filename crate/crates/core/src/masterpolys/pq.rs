use std::sync::Arc;

use crate::polyring::{MultiPoly, VarRegistry};

/// The p,q-integer `[n]_{p,q} = sum_{j=0}^{n-1} p^j q^{n-1-j}`, computed by
/// the explicit sum (no division).  `[0] = 0`, `[1] = 1`.
pub fn pq_integer(reg: &Arc<VarRegistry>, p: &str, q: &str, n: usize) -> MultiPoly {
    let pv = MultiPoly::var(reg, p).expect("p variable");
    let qv = MultiPoly::var(reg, q).expect("q variable");
    let mut acc = MultiPoly::zero(reg);
    for j in 0..n {
        acc = &acc + &pv.pow(j as u32).checked_mul(&qv.pow((n - 1 - j) as u32)).unwrap();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_holds() {
        // [n] = p [n-1] + q^{n-1}
        let reg = VarRegistry::new(["p", "q"]).unwrap();
        let p = MultiPoly::var(&reg, "p").unwrap();
        let q = MultiPoly::var(&reg, "q").unwrap();
        for n in 1..=6 {
            let lhs = pq_integer(&reg, "p", "q", n);
            let rhs = &p.checked_mul(&pq_integer(&reg, "p", "q", n - 1)).unwrap()
                + &q.pow((n - 1) as u32);
            assert_eq!(lhs, rhs, "n={n}");
        }
        assert!(pq_integer(&reg, "p", "q", 0).is_zero());
        assert!(pq_integer(&reg, "p", "q", 1).is_one());
    }
}
