//! Bit-exact golden JSON format for polynomials and rational functions.
//!
//! Schema: `{"vars":[...], "terms":[{"c":"<decimal integer string>",
//! "e":[<ints>]}]}` with terms sorted graded-lex descending.  A `RatFunc`
//! serializes as `{"num":..., "den":...}`.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{MultiPoly, PolyError, RatFunc, VarRegistry};

#[derive(Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: PolyJson,
    pub den: PolyJson,
}

impl PolyJson {
    pub fn from_poly(p: &MultiPoly) -> Self {
        PolyJson {
            vars: p.registry().names().to_vec(),
            terms: p
                .terms()
                .rev() // internal order is graded-lex ascending
                .map(|(m, c)| TermJson {
                    c: c.to_string(),
                    e: m.0.clone(),
                })
                .collect(),
        }
    }

    pub fn into_poly(self) -> Result<MultiPoly, PolyError> {
        let reg = VarRegistry::new(self.vars)?;
        self.into_poly_on(&reg)
    }

    pub fn into_poly_on(self, reg: &Arc<VarRegistry>) -> Result<MultiPoly, PolyError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in self.terms {
            let c = BigInt::from_str(&t.c)
                .map_err(|e| PolyError::Malformed(format!("bad coefficient: {e}")))?;
            terms.push((t.e, c));
        }
        MultiPoly::from_terms(reg, terms)
    }
}

pub fn poly_to_json_string(p: &MultiPoly) -> String {
    serde_json::to_string(&PolyJson::from_poly(p)).expect("serialization cannot fail")
}

pub fn poly_from_json_str(s: &str) -> Result<MultiPoly, PolyError> {
    let pj: PolyJson =
        serde_json::from_str(s).map_err(|e| PolyError::Malformed(e.to_string()))?;
    pj.into_poly()
}

pub fn ratfunc_to_json_string(f: &RatFunc) -> String {
    let rj = RatFuncJson {
        num: PolyJson::from_poly(f.num()),
        den: PolyJson::from_poly(f.den()),
    };
    serde_json::to_string(&rj).expect("serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_shape_and_order() {
        let r = VarRegistry::new(["x", "y"]).unwrap();
        let x = MultiPoly::var(&r, "x").unwrap();
        let y = MultiPoly::var(&r, "y").unwrap();
        let p = &(&x.pow(2) + &y) + &MultiPoly::constant(&r, -3);
        let s = poly_to_json_string(&p);
        assert_eq!(
            s,
            r#"{"vars":["x","y"],"terms":[{"c":"1","e":[2,0]},{"c":"1","e":[0,1]},{"c":"-3","e":[0,0]}]}"#
        );
        let q = poly_from_json_str(&s).unwrap();
        assert_eq!(p, q);
    }
}
