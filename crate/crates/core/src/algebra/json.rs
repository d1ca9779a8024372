//! Canonical JSON: a polynomial is an array of `{"e": [..5], "c": "..."}`
//! sorted by exponent vector; a series is `{"order": N, "coeffs": [...]}`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{Exps, Poly, Scalar};
use super::series::{Ring, TruncSeries};

#[derive(Serialize, Deserialize)]
struct TermJson {
    e: Exps,
    c: String,
}

impl<C: Scalar> Serialize for Poly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms()
            .map(|(e, c)| TermJson {
                e: *e,
                c: c.to_string(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de, C: Scalar> Deserialize<'de> for Poly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(deserializer)?;
        let mut out = Poly::zero();
        for t in terms {
            let c: C =
                t.c.parse()
                    .map_err(|_| D::Error::custom(format!("bad coefficient `{}`", t.c)))?;
            out.add_term(t.e, &c);
        }
        Ok(out)
    }
}

#[derive(Serialize)]
struct SeriesRef<'a, C> {
    order: usize,
    coeffs: &'a [C],
}

#[derive(Deserialize)]
struct SeriesOwned<C> {
    order: usize,
    coeffs: Vec<C>,
}

impl<C: Ring + Serialize> Serialize for TruncSeries<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesRef {
            order: self.order(),
            coeffs: self.coeffs(),
        }
        .serialize(serializer)
    }
}

impl<'de, C: Ring + Deserialize<'de>> Deserialize<'de> for TruncSeries<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SeriesOwned::<C>::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.order + 1 {
            return Err(D::Error::custom(format!(
                "series of order {} needs {} coefficients, found {}",
                raw.order,
                raw.order + 1,
                raw.coeffs.len()
            )));
        }
        Ok(TruncSeries::from_coeffs(raw.coeffs, raw.order))
    }
}
