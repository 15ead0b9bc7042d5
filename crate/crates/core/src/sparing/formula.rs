//! Registry of published closed forms for sparing numbers.
//!
//! Every formula is evaluated in a [`Scalar`] so that halves and quarters
//! are carried exactly; [`formula_value`] insists on an integer result.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Scalar;
use crate::Rational;

/// Named integer parameters of a formula, e.g. `{"m": 3, "n": 2}`.
pub type Params = BTreeMap<String, i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("unknown theorem id {0:?}; valid ids: {valid}", valid = TheoremId::ALL.map(|t| t.as_str()).join(", "))]
    UnknownId(String),
    #[error("{id}: missing parameter {name:?}")]
    MissingParam { id: TheoremId, name: &'static str },
    #[error("{id}: parameters outside the stated domain: {reason}")]
    Domain { id: TheoremId, reason: String },
    #[error("{id}: formula does not evaluate to an integer ({value})")]
    NonInteger { id: TheoremId, value: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "EC_PP")]
    EcPp,
    #[serde(rename = "EC_PC")]
    EcPc,
    #[serde(rename = "EC_CP")]
    EcCp,
    #[serde(rename = "EC_CC")]
    EcCc,
    #[serde(rename = "EC_RR")]
    EcRr,
    #[serde(rename = "EC_RS")]
    EcRs,
    #[serde(rename = "EC_PK")]
    EcPk,
    #[serde(rename = "EC_CK")]
    EcCk,
    #[serde(rename = "EC_RK")]
    EcRk,
    #[serde(rename = "COMPLETE")]
    Complete,
    #[serde(rename = "UNION")]
    Union,
    #[serde(rename = "MONO_COUNT")]
    MonoCount,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::EcPp,
        TheoremId::EcPc,
        TheoremId::EcCp,
        TheoremId::EcCc,
        TheoremId::EcRr,
        TheoremId::EcRs,
        TheoremId::EcPk,
        TheoremId::EcCk,
        TheoremId::EcRk,
        TheoremId::Complete,
        TheoremId::Union,
        TheoremId::MonoCount,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::EcPp => "EC_PP",
            TheoremId::EcPc => "EC_PC",
            TheoremId::EcCp => "EC_CP",
            TheoremId::EcCc => "EC_CC",
            TheoremId::EcRr => "EC_RR",
            TheoremId::EcRs => "EC_RS",
            TheoremId::EcPk => "EC_PK",
            TheoremId::EcCk => "EC_CK",
            TheoremId::EcRk => "EC_RK",
            TheoremId::Complete => "COMPLETE",
            TheoremId::Union => "UNION",
            TheoremId::MonoCount => "MONO_COUNT",
        }
    }

    pub fn param_names(&self) -> &'static [&'static str] {
        match self {
            TheoremId::EcPp
            | TheoremId::EcPc
            | TheoremId::EcCp
            | TheoremId::EcCc
            | TheoremId::EcPk
            | TheoremId::EcCk => &["m", "n"],
            TheoremId::EcRr => &["m", "r", "n_prime", "phi2"],
            TheoremId::EcRs => &["m", "r", "s", "n_prime", "phi2"],
            TheoremId::EcRk => &["m", "r", "n"],
            TheoremId::Complete => &["n"],
            TheoremId::Union => &["phi1", "phi2", "phi12"],
            TheoremId::MonoCount => &["m1", "m1_prime", "n2", "m2", "n2_prime", "m2_prime"],
        }
    }

    /// The closed form as published, in plain notation.
    pub fn statement(&self) -> &'static str {
        match self {
            TheoremId::EcPp => "phi(P_m <> P_n) = m(n+2)/2 - 1 (n even), m(n+1)/2 - 1 (n odd)",
            TheoremId::EcPc => "phi(P_m <> C_n) = m(n+2)/2 - 1 (n even), m(n+5)/2 - 2 (n odd)",
            TheoremId::EcCp => "phi(C_m <> P_n) = m(n+2)/2 (n even), m(n+1)/2 (n odd)",
            TheoremId::EcCc => "phi(C_m <> C_n) = m(n+2)/2 (n even), m(n+5)/2 (n odd)",
            TheoremId::EcRr => "phi(G1 <> G2) = m[n' + r(1 + phi2)], G1, G2 r-regular",
            TheoremId::EcRs => {
                "phi(G1 <> G2) = m(n' + r(1 + phi2)), G1 r-regular, G2 s-regular, r <= s"
            }
            TheoremId::EcPk => "phi(P_m <> K_n) = n(n+1)(m-1)/2",
            TheoremId::EcCk => "phi(C_m <> K_n) = mn(n+1)/2",
            TheoremId::EcRk => "phi(G <> K_n) = rmn(n+1)/4, G r-regular on m vertices, r <= n-1",
            TheoremId::Complete => "phi(K_n) = (n-1)(n-2)/2",
            TheoremId::Union => "phi(G1 u G2) = phi(G1) + phi(G2) - phi(G1 n G2)",
            TheoremId::MonoCount => {
                "mono edges of G1 <> G2 = m1'(1 + m2' + 2 n2') + (m1 - m1')(m2 + n2)"
            }
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = FormulaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| FormulaError::UnknownId(s.to_string()))
    }
}

struct Args<'a> {
    id: TheoremId,
    params: &'a Params,
}

impl Args<'_> {
    fn get(&self, name: &'static str) -> Result<i64, FormulaError> {
        self.params
            .get(name)
            .copied()
            .ok_or(FormulaError::MissingParam { id: self.id, name })
    }

    fn require(&self, ok: bool, reason: impl FnOnce() -> String) -> Result<(), FormulaError> {
        if ok {
            Ok(())
        } else {
            Err(FormulaError::Domain {
                id: self.id,
                reason: reason(),
            })
        }
    }

    fn nonnegative(&self) -> Result<(), FormulaError> {
        for &name in self.id.param_names() {
            let v = self.get(name)?;
            self.require(v >= 0, || format!("{name} = {v} is negative"))?;
        }
        Ok(())
    }
}

fn s<T: Scalar>(n: i64) -> T {
    T::from_count(n)
}

fn half<T: Scalar>(x: T) -> T {
    x / s(2)
}

/// Evaluates the published formula for `id` in the scalar type `T`.
pub fn formula_eval<T: Scalar>(id: TheoremId, params: &Params) -> Result<T, FormulaError> {
    let a = Args { id, params };
    a.nonnegative()?;
    let value = match id {
        TheoremId::EcPp => {
            let (m, n) = (a.get("m")?, a.get("n")?);
            a.require(m > 1 && n > 1, || {
                format!("need m, n > 1, got m = {m}, n = {n}")
            })?;
            if n % 2 == 0 {
                half::<T>(s::<T>(m) * s(n + 2)) - s(1)
            } else {
                half::<T>(s::<T>(m) * s(n + 1)) - s(1)
            }
        }
        TheoremId::EcPc => {
            let (m, n) = (a.get("m")?, a.get("n")?);
            a.require(m > 1 && n >= 3, || {
                format!("need m > 1, n >= 3, got m = {m}, n = {n}")
            })?;
            if n % 2 == 1 {
                half::<T>(s::<T>(m) * s(n + 5)) - s(2)
            } else {
                half::<T>(s::<T>(m) * s(n + 2)) - s(1)
            }
        }
        TheoremId::EcCp => {
            let (m, n) = (a.get("m")?, a.get("n")?);
            a.require(m >= 3 && n > 1, || {
                format!("need m >= 3, n > 1, got m = {m}, n = {n}")
            })?;
            if n % 2 == 1 {
                half::<T>(s::<T>(m) * s(n + 1))
            } else {
                half::<T>(s::<T>(m) * s(n + 2))
            }
        }
        TheoremId::EcCc => {
            let (m, n) = (a.get("m")?, a.get("n")?);
            a.require(m >= 3 && n >= 3, || {
                format!("need m, n >= 3, got m = {m}, n = {n}")
            })?;
            if n % 2 == 1 {
                half::<T>(s::<T>(m) * s(n + 5))
            } else {
                half::<T>(s::<T>(m) * s(n + 2))
            }
        }
        TheoremId::EcRr | TheoremId::EcRs => {
            let (m, r, n_prime, phi2) =
                (a.get("m")?, a.get("r")?, a.get("n_prime")?, a.get("phi2")?);
            a.require(m > 1, || format!("need m > 1, got {m}"))?;
            if id == TheoremId::EcRs {
                let s_deg = a.get("s")?;
                a.require(r <= s_deg, || {
                    format!("need r <= s, got r = {r}, s = {s_deg}")
                })?;
            }
            s::<T>(m) * (s::<T>(n_prime) + s::<T>(r) * (s::<T>(1) + s(phi2)))
        }
        TheoremId::EcPk => {
            let (m, n) = (a.get("m")?, a.get("n")?);
            a.require(m >= 1 && n >= 1, || {
                format!("need m, n >= 1, got m = {m}, n = {n}")
            })?;
            half::<T>(s::<T>(n) * s(n + 1) * s(m - 1))
        }
        TheoremId::EcCk => {
            let (m, n) = (a.get("m")?, a.get("n")?);
            a.require(m >= 3 && n >= 1, || {
                format!("need m >= 3, n >= 1, got m = {m}, n = {n}")
            })?;
            half::<T>(s::<T>(m) * s(n) * s(n + 1))
        }
        TheoremId::EcRk => {
            let (m, r, n) = (a.get("m")?, a.get("r")?, a.get("n")?);
            a.require(n >= 1 && r < n, || {
                format!("need r <= n - 1, got r = {r}, n = {n}")
            })?;
            s::<T>(r) * s(m) * s(n) * s(n + 1) / s(4)
        }
        TheoremId::Complete => {
            let n = a.get("n")?;
            a.require(n >= 1, || format!("need n >= 1, got {n}"))?;
            half::<T>(s::<T>(n - 1) * s(n - 2))
        }
        TheoremId::Union => s::<T>(a.get("phi1")?) + s(a.get("phi2")?) - s(a.get("phi12")?),
        TheoremId::MonoCount => {
            let (m1, m1p) = (a.get("m1")?, a.get("m1_prime")?);
            let (n2, m2) = (a.get("n2")?, a.get("m2")?);
            let (n2p, m2p) = (a.get("n2_prime")?, a.get("m2_prime")?);
            a.require(m1p <= m1 && m2p <= m2 && n2p <= n2, || {
                "need m1' <= m1, m2' <= m2, n2' <= n2".to_string()
            })?;
            s::<T>(m1p) * (s::<T>(1) + s(m2p) + s::<T>(2) * s(n2p))
                + s::<T>(m1 - m1p) * (s::<T>(m2) + s(n2))
        }
    };
    Ok(value)
}

/// Evaluates exactly and requires an integer result.
pub fn formula_value(id: TheoremId, params: &Params) -> Result<i64, FormulaError> {
    let value: Rational = formula_eval(id, params)?;
    value
        .to_exact_integer()
        .ok_or_else(|| FormulaError::NonInteger {
            id,
            value: value.to_string(),
        })
}

/// The closing line of the proof accompanying `EC_RS`, `m[n' + r + phi2]`,
/// which differs from the theorem statement.
pub fn ec_rs_proof_variant(params: &Params) -> Result<i64, FormulaError> {
    let a = Args {
        id: TheoremId::EcRs,
        params,
    };
    Ok(a.get("m")? * (a.get("n_prime")? + a.get("r")? + a.get("phi2")?))
}

/// Builds a parameter map from `(name, value)` pairs.
pub fn params<const N: usize>(pairs: [(&str, i64); N]) -> Params {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_examples() {
        assert_eq!(
            formula_value(TheoremId::EcPp, &params([("m", 2), ("n", 2)])),
            Ok(3)
        );
        assert_eq!(
            formula_value(TheoremId::EcPp, &params([("m", 3), ("n", 2)])),
            Ok(5)
        );
        assert_eq!(
            formula_value(TheoremId::Complete, &params([("n", 4)])),
            Ok(3)
        );
        assert_eq!(
            formula_value(
                TheoremId::MonoCount,
                &params([
                    ("m1", 1),
                    ("m1_prime", 1),
                    ("m2_prime", 0),
                    ("n2_prime", 1),
                    ("m2", 1),
                    ("n2", 2)
                ])
            ),
            Ok(3)
        );
    }

    #[test]
    fn parity_branches() {
        // n odd branches
        assert_eq!(
            formula_value(TheoremId::EcPp, &params([("m", 3), ("n", 3)])),
            Ok(5)
        );
        assert_eq!(
            formula_value(TheoremId::EcPc, &params([("m", 2), ("n", 3)])),
            Ok(6)
        );
        assert_eq!(
            formula_value(TheoremId::EcPc, &params([("m", 2), ("n", 4)])),
            Ok(5)
        );
        assert_eq!(
            formula_value(TheoremId::EcCp, &params([("m", 3), ("n", 3)])),
            Ok(6)
        );
        assert_eq!(
            formula_value(TheoremId::EcCp, &params([("m", 3), ("n", 2)])),
            Ok(6)
        );
        assert_eq!(
            formula_value(TheoremId::EcCc, &params([("m", 3), ("n", 3)])),
            Ok(12)
        );
        assert_eq!(
            formula_value(TheoremId::EcCc, &params([("m", 3), ("n", 4)])),
            Ok(9)
        );
    }

    #[test]
    fn remaining_entries() {
        let rr = params([("m", 3), ("r", 2), ("n_prime", 2), ("phi2", 1)]);
        assert_eq!(formula_value(TheoremId::EcRr, &rr), Ok(18));
        let mut rs = rr.clone();
        rs.insert("s".into(), 2);
        assert_eq!(formula_value(TheoremId::EcRs, &rs), Ok(18));
        assert_eq!(ec_rs_proof_variant(&rs), Ok(15));
        assert_eq!(
            formula_value(TheoremId::EcPk, &params([("m", 3), ("n", 2)])),
            Ok(6)
        );
        assert_eq!(
            formula_value(TheoremId::EcCk, &params([("m", 3), ("n", 2)])),
            Ok(9)
        );
        assert_eq!(
            formula_value(TheoremId::EcRk, &params([("m", 4), ("r", 2), ("n", 3)])),
            Ok(24)
        );
        assert_eq!(
            formula_value(
                TheoremId::Union,
                &params([("phi1", 3), ("phi2", 3), ("phi12", 0)])
            ),
            Ok(6)
        );
        assert_eq!(
            formula_value(TheoremId::Complete, &params([("n", 1)])),
            Ok(0)
        );
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            formula_value(TheoremId::EcPp, &params([("m", 1), ("n", 2)])),
            Err(FormulaError::Domain { .. })
        ));
        assert!(matches!(
            formula_value(TheoremId::EcRk, &params([("m", 4), ("r", 3), ("n", 3)])),
            Err(FormulaError::Domain { .. })
        ));
        let mut rs = params([("m", 3), ("r", 3), ("s", 2), ("n_prime", 2), ("phi2", 1)]);
        assert!(matches!(
            formula_value(TheoremId::EcRs, &rs),
            Err(FormulaError::Domain { .. })
        ));
        rs.remove("s");
        assert_eq!(
            formula_value(TheoremId::EcRs, &rs),
            Err(FormulaError::MissingParam {
                id: TheoremId::EcRs,
                name: "s"
            })
        );
        assert!(matches!(
            formula_value(TheoremId::Complete, &params([("n", -2)])),
            Err(FormulaError::Domain { .. })
        ));
    }

    #[test]
    fn non_integer_is_an_error() {
        // r·m odd cannot happen for a regular graph, but the formula itself
        // must refuse to round
        let e = formula_value(TheoremId::EcRk, &params([("m", 3), ("r", 1), ("n", 2)]));
        assert_eq!(
            e,
            Err(FormulaError::NonInteger {
                id: TheoremId::EcRk,
                value: "9/2".into()
            })
        );
    }

    #[test]
    fn scalar_types_agree() {
        for id in TheoremId::ALL {
            let p: Params = match id {
                TheoremId::EcRr => params([("m", 4), ("r", 2), ("n_prime", 3), ("phi2", 1)]),
                TheoremId::EcRs => {
                    params([("m", 4), ("r", 2), ("s", 3), ("n_prime", 3), ("phi2", 1)])
                }
                TheoremId::EcRk => params([("m", 4), ("r", 2), ("n", 3)]),
                TheoremId::Complete => params([("n", 7)]),
                TheoremId::Union => params([("phi1", 4), ("phi2", 2), ("phi12", 1)]),
                TheoremId::MonoCount => params([
                    ("m1", 5),
                    ("m1_prime", 2),
                    ("n2", 4),
                    ("m2", 3),
                    ("n2_prime", 2),
                    ("m2_prime", 1),
                ]),
                _ => params([("m", 4), ("n", 5)]),
            };
            let exact: Rational = formula_eval(id, &p).unwrap();
            let wide: num_rational::Ratio<i128> = formula_eval(id, &p).unwrap();
            let float: f64 = formula_eval(id, &p).unwrap();
            let v = exact.to_exact_integer().unwrap();
            assert_eq!(wide.to_exact_integer(), Some(v), "{id}");
            assert_eq!(float.to_exact_integer(), Some(v), "{id}");
        }
    }

    #[test]
    fn ids_parse() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>(), Ok(id));
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{id}\""));
        }
        assert!(matches!(
            "NOPE".parse::<TheoremId>(),
            Err(FormulaError::UnknownId(_))
        ));
    }
}
