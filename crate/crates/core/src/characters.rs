//! Characters of `T x C*`: finite integer combinations of `ħ^a e^{β∨}`, and
//! q-polynomials with nonnegative coefficients.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Neg};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::root_datum::{Coweight, RootChar, RootDatum};

/// Sum of `coeff · ħ^hbar · e^weight`. Zero coefficients are never stored,
/// and terms iterate in `(hbar, weight)` order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EquivariantCharacter {
    terms: BTreeMap<(i64, RootChar), i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTerm {
    pub hbar: i64,
    pub weight: RootChar,
    pub coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct CharacterJson {
    terms: Vec<CharacterTerm>,
}

impl EquivariantCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(hbar: i64, weight: RootChar) -> Self {
        let mut ch = Self::zero();
        ch.add_term(hbar, weight, 1);
        ch
    }

    pub fn add_term(&mut self, hbar: i64, weight: RootChar, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let key = (hbar, weight);
        let c = self.terms.entry(key.clone()).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = CharacterTerm> + '_ {
        self.terms.iter().map(|((h, w), &c)| CharacterTerm {
            hbar: *h,
            weight: w.clone(),
            coeff: c,
        })
    }

    pub fn coefficient(&self, hbar: i64, weight: &RootChar) -> i64 {
        self.terms
            .get(&(hbar, weight.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        if k != 0 {
            for ((h, w), c) in &self.terms {
                out.terms.insert((*h, w.clone()), c * k);
            }
        }
        out
    }

    /// The part of loop-rotation degree `hbar`.
    pub fn hbar_part(&self, hbar: i64) -> Self {
        let mut out = Self::zero();
        for ((h, w), c) in &self.terms {
            if *h == hbar {
                out.terms.insert((*h, w.clone()), *c);
            }
        }
        out
    }

    /// Sum of coefficients: the dimension of the underlying space.
    pub fn total_dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Number of attracting directions (with multiplicity) for the
    /// cocharacter `t ↦ (ξ(t), t^d)` with `d ≫ 0`. A term with `ħ`-degree
    /// `a` and weight `β∨` has weight `a·d + ⟨β∨, ξ⟩`, which for large `d` has
    /// the sign of `a`, or of `⟨β∨, ξ⟩` when `a = 0`.
    pub fn attracting_dimension(&self, xi: &Coweight) -> Result<i64> {
        let mut count = 0;
        for ((h, w), c) in &self.terms {
            let sign = if *h != 0 {
                h.signum()
            } else {
                w.pair(xi).signum()
            };
            match sign {
                0 => {
                    return Err(Error::ZeroWeightTerm {
                        hbar: *h,
                        weight: w.clone(),
                    })
                }
                1 => count += c,
                _ => {}
            }
        }
        Ok(count)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("character serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        serde_json::from_value(value.clone()).map_err(|e| Error::BadJson(e.to_string()))
    }

    /// Plain text, weights in simple-root coordinates: `h^2*a1^-1 + a2`.
    pub fn render_plain(&self, datum: &RootDatum) -> Result<String> {
        self.render_with(
            datum,
            |h, coords| {
                let mut parts = Vec::new();
                match h {
                    0 => {}
                    1 => parts.push("h".to_string()),
                    _ => parts.push(format!("h^{h}")),
                }
                for (i, &c) in coords.iter().enumerate() {
                    match c {
                        0 => {}
                        1 => parts.push(format!("a{}", i + 1)),
                        _ => parts.push(format!("a{}^{c}", i + 1)),
                    }
                }
                parts.join("*")
            },
            "*",
        )
    }

    /// LaTeX: `\hbar^{2} e^{-\alpha^\vee_1}`.
    pub fn render_latex(&self, datum: &RootDatum) -> Result<String> {
        self.render_with(
            datum,
            |h, coords| {
                let mut s = String::new();
                match h {
                    0 => {}
                    1 => s.push_str("\\hbar"),
                    _ => write!(s, "\\hbar^{{{h}}}").unwrap(),
                }
                for (i, &c) in coords.iter().enumerate() {
                    if !s.is_empty() && c != 0 {
                        s.push(' ');
                    }
                    match c {
                        0 => {}
                        1 => write!(s, "e^{{\\alpha^\\vee_{}}}", i + 1).unwrap(),
                        -1 => write!(s, "e^{{-\\alpha^\\vee_{}}}", i + 1).unwrap(),
                        _ => write!(s, "e^{{{c}\\alpha^\\vee_{}}}", i + 1).unwrap(),
                    }
                }
                s
            },
            " ",
        )
    }

    fn render_with(
        &self,
        datum: &RootDatum,
        monomial: impl Fn(i64, &[i64]) -> String,
        coeff_sep: &str,
    ) -> Result<String> {
        if self.is_zero() {
            return Ok("0".to_string());
        }
        let mut out = String::new();
        for (k, ((h, w), &c)) in self.terms.iter().enumerate() {
            let coords = datum
                .simple_root_coords(w)
                .ok_or_else(|| Error::NotInRootLattice(w.clone()))?;
            let mono = monomial(*h, &coords);
            let mag = c.abs();
            if k == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            match (mono.is_empty(), mag) {
                (true, _) => write!(out, "{mag}").unwrap(),
                (false, 1) => out.push_str(&mono),
                (false, _) => write!(out, "{mag}{coeff_sep}{mono}").unwrap(),
            }
        }
        Ok(out)
    }
}

impl Add for &EquivariantCharacter {
    type Output = EquivariantCharacter;
    fn add(self, rhs: Self) -> EquivariantCharacter {
        let mut out = self.clone();
        for ((h, w), c) in &rhs.terms {
            out.add_term(*h, w.clone(), *c);
        }
        out
    }
}

impl Neg for &EquivariantCharacter {
    type Output = EquivariantCharacter;
    fn neg(self) -> EquivariantCharacter {
        self.scale(-1)
    }
}

/// `Σ coeff · q^degree`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: BTreeMap<u32, u64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs(pairs: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let mut p = Self::zero();
        for (d, c) in pairs {
            p.add_monomial(d, c);
        }
        p
    }

    pub fn add_monomial(&mut self, degree: u32, coeff: u64) {
        if coeff > 0 {
            *self.coeffs.entry(degree).or_insert(0) += coeff;
        }
    }

    pub fn coeff(&self, degree: u32) -> u64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &BTreeMap<u32, u64> {
        &self.coeffs
    }

    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// `{"2":1,"4":1}`
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(d, c)| (d.to_string(), serde_json::Value::from(*c)))
            .collect();
        serde_json::Value::Object(map)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::BadJson("expected an object".into()))?;
        let mut p = Self::zero();
        for (k, v) in obj {
            let d: u32 = k
                .parse()
                .map_err(|_| Error::BadJson(format!("bad degree `{k}`")))?;
            let c = v
                .as_u64()
                .ok_or_else(|| Error::BadJson(format!("bad coefficient for degree {d}")))?;
            p.add_monomial(d, c);
        }
        Ok(p)
    }

    /// `q^2 + q^4`, `1`, `2*q`
    pub fn render_plain(&self) -> String {
        self.render(
            |d| match d {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{d}"),
            },
            "*",
        )
    }

    pub fn render_latex(&self) -> String {
        self.render(
            |d| match d {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{{{d}}}"),
            },
            " ",
        )
    }

    fn render(&self, mono: impl Fn(u32) -> String, sep: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|(&d, &c)| {
                let m = mono(d);
                match (m.is_empty(), c) {
                    (true, _) => c.to_string(),
                    (false, 1) => m,
                    (false, _) => format!("{c}{sep}{m}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Serialize for EquivariantCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CharacterJson {
            terms: self.terms().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EquivariantCharacter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parsed = CharacterJson::deserialize(deserializer)?;
        let mut ch = Self::zero();
        for t in parsed.terms {
            ch.add_term(t.hbar, t.weight, t.coeff);
        }
        Ok(ch)
    }
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (d, c) in &self.coeffs {
            map.serialize_entry(&d.to_string(), c)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        Self::from_json(&value).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[i64]) -> RootChar {
        RootChar(v.to_vec())
    }

    #[test]
    fn addition_basics() {
        let a = r(&[1, -1]);
        let na = r(&[-1, 1]);
        let mut x = EquivariantCharacter::monomial(0, a.clone());
        x.add_term(1, na.clone(), 1);
        assert_eq!(&x + &EquivariantCharacter::zero(), x);
        let y = EquivariantCharacter::monomial(0, na.clone());
        assert_eq!((&x + &y).num_terms(), 3);
        assert_eq!(&x + &y, &y + &x);
        assert!((&x + &-&x).is_zero());
    }

    #[test]
    fn dimensions() {
        let a = r(&[1, -1]);
        let na = r(&[-1, 1]);
        assert_eq!(EquivariantCharacter::zero().total_dimension(), 0);
        let mut ch = EquivariantCharacter::monomial(0, na.clone());
        ch.add_term(1, a.clone(), 1);
        assert_eq!(ch.total_dimension(), 2);
        let xi = Coweight(vec![-1, 1]);
        assert_eq!(ch.attracting_dimension(&xi).unwrap(), 2);

        let mut ch2 = EquivariantCharacter::monomial(1, na);
        ch2.add_term(0, a.clone(), 1);
        assert_eq!(ch2.attracting_dimension(&xi).unwrap(), 1);
        assert_eq!(
            EquivariantCharacter::zero()
                .attracting_dimension(&xi)
                .unwrap(),
            0
        );

        let bad = EquivariantCharacter::monomial(0, a);
        assert!(matches!(
            bad.attracting_dimension(&Coweight(vec![1, 1])),
            Err(Error::ZeroWeightTerm { hbar: 0, .. })
        ));
    }

    #[test]
    fn rendering() {
        let gl2 = RootDatum::parse("GL2").unwrap();
        assert_eq!(
            EquivariantCharacter::zero().render_plain(&gl2).unwrap(),
            "0"
        );
        let m = EquivariantCharacter::monomial(0, r(&[-1, 1]));
        assert_eq!(m.render_plain(&gl2).unwrap(), "a1^-1");
        assert_eq!(m.render_latex(&gl2).unwrap(), "e^{-\\alpha^\\vee_1}");
        let mut ch = EquivariantCharacter::monomial(2, r(&[-1, 1]));
        ch.add_term(1, r(&[1, -1]), 2);
        assert_eq!(ch.render_plain(&gl2).unwrap(), "2*h*a1 + h^2*a1^-1");
        assert_eq!(
            ch.render_latex(&gl2).unwrap(),
            "2 \\hbar e^{\\alpha^\\vee_1} + \\hbar^{2} e^{-\\alpha^\\vee_1}"
        );
        let off = EquivariantCharacter::monomial(0, r(&[1, 0]));
        assert!(matches!(
            off.render_plain(&gl2),
            Err(Error::NotInRootLattice(_))
        ));

        let p = QPolynomial::from_coeffs([(2, 1), (4, 1)]);
        assert_eq!(p.to_json().to_string(), r#"{"2":1,"4":1}"#);
        assert_eq!(p.render_plain(), "q^2 + q^4");
        assert_eq!(QPolynomial::from_coeffs([(0, 1)]).render_plain(), "1");
        assert_eq!(QPolynomial::zero().render_plain(), "0");
    }

    #[test]
    fn json_schema() {
        let mut ch = EquivariantCharacter::monomial(1, r(&[1, -1]));
        ch.add_term(0, r(&[-1, 1]), 3);
        assert_eq!(
            serde_json::to_string(&ch).unwrap(),
            r#"{"terms":[{"hbar":0,"weight":[-1,1],"coeff":3},{"hbar":1,"weight":[1,-1],"coeff":1}]}"#
        );
        assert_eq!(EquivariantCharacter::from_json(&ch.to_json()).unwrap(), ch);
        assert!(EquivariantCharacter::from_json(&serde_json::json!({"terms": 3})).is_err());
        assert!(QPolynomial::from_json(&serde_json::json!({"x": 1})).is_err());
    }
}
