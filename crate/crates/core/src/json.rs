//! JSON forms of `QQt`, `LaurentSym`, branch tables and trace series.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::branching::table::{BranchTable, TableParams};
use crate::branching::trace::TraceSeries;
use crate::partition::Signature;
use crate::qt::{Poly, QQt};
use crate::sym::LaurentSym;

type TermJson = (u32, u32, String);

#[derive(Serialize, Deserialize)]
struct QQtJson {
    num: Vec<TermJson>,
    den: Vec<TermJson>,
}

fn poly_terms(p: &Poly) -> Vec<TermJson> {
    p.graded_terms().into_iter().map(|((a, b), c)| (a, b, c.to_string())).collect()
}

fn parse_terms(terms: &[TermJson]) -> Result<QQt, String> {
    let mut acc = QQt::zero();
    for (a, b, c) in terms {
        let r: BigRational = c.parse().map_err(|_| format!("bad coefficient {c:?}"))?;
        let mono = QQt::monomial_big(BigInt::from(1), *a as i64, *b as i64);
        acc = &acc + &(&QQt::from_rational(&r) * &mono);
    }
    Ok(acc)
}

/// Canonical numerator and denominator, terms in graded-lex descending order.
impl Serialize for QQt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QQtJson { num: poly_terms(self.num()), den: poly_terms(self.den()) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QQt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = QQtJson::deserialize(d)?;
        let num = parse_terms(&j.num).map_err(D::Error::custom)?;
        let den = parse_terms(&j.den).map_err(D::Error::custom)?;
        num.div(&den).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    n: usize,
    terms: Vec<(Vec<i64>, QQt)>,
}

impl Serialize for LaurentSym {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self.graded_terms().into_iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        LaurentJson { n: self.n(), terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentSym {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = LaurentJson::deserialize(d)?;
        let mut out = LaurentSym::zero(j.n);
        for (e, c) in j.terms {
            if e.len() != j.n {
                return Err(D::Error::custom(format!("exponent {e:?} has the wrong length")));
            }
            out.add_term(e, c);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    mu: Signature,
    rho: i64,
    coeff: QQt,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    lambda: Signature,
    params: TableParams,
    entries: Vec<EntryJson>,
}

impl Serialize for BranchTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries = self
            .sorted_entries()
            .into_iter()
            .map(|(mu, c)| EntryJson { mu: mu.clone(), rho: self.rho(mu), coeff: c.clone() })
            .collect();
        TableJson { lambda: self.lam.clone(), params: self.params, entries }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BranchTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = TableJson::deserialize(d)?;
        Ok(BranchTable {
            lam: j.lambda,
            params: j.params,
            entries: j.entries.into_iter().map(|e| (e.mu, e.coeff)).collect(),
        })
    }
}

#[derive(Serialize, Deserialize)]
struct TraceJson {
    lambda: Signature,
    cutoff: i64,
    q0: bool,
    series: LaurentSym,
}

impl Serialize for TraceSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TraceJson { lambda: self.lam.clone(), cutoff: self.cutoff, q0: self.q0, series: self.terms.clone() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TraceSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = TraceJson::deserialize(d)?;
        Ok(TraceSeries { lam: j.lambda, cutoff: j.cutoff, q0: j.q0, terms: j.series })
    }
}

/// `value` wrapped with its metadata as `{"meta": ..., "result": ...}`.
pub fn envelope<T: Serialize>(meta: Value, value: &T) -> Value {
    json!({ "meta": meta, "result": value })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qqt_format() {
        let c = (&(&QQt::one() + &QQt::monomial(1, 0, 2)) - &QQt::monomial(2, 2, 0)).div(&QQt::one_minus(2, 0)).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["num"][0], json!([2, 0, "2"]));
        assert_eq!(v["den"][0], json!([2, 0, "1"]));
        let back: QQt = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn rational_coefficients_parse() {
        let v = json!({"num": [[0, 1, "-3/2"]], "den": [[0, 0, "1"]]});
        let c: QQt = serde_json::from_value(v).unwrap();
        assert_eq!(c, QQt::monomial(-3, 0, 1).div(&QQt::from_int(2)).unwrap());
    }

    #[test]
    fn laurent_round_trip() {
        let mut f = LaurentSym::monomial(vec![1, -1], QQt::t());
        f.add_term(vec![0, 0], QQt::from_int(3));
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<LaurentSym>(&s).unwrap(), f);
    }
}
