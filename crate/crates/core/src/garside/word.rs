use std::fmt;

use crate::arrangement::{CartanType, CoxeterFamily, ReflectionGroup};
use crate::Error;

/// A word in the generators of `B(W)` and their inverses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    cartan: CartanType,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Validates that every letter names a generator.
    pub fn new(cartan: CartanType, letters: Vec<i32>) -> Result<Self, Error> {
        let r = cartan.rank as i32;
        if let Some(bad) = letters.iter().find(|&&l| l == 0 || l.abs() > r) {
            return Err(Error::Parse(format!(
                "letter {bad} outside the alphabet of {cartan} (1..{r})"
            )));
        }
        Ok(BraidWord { cartan, letters })
    }

    pub(crate) fn from_letters(cartan: CartanType, letters: Vec<i32>) -> Self {
        BraidWord { cartan, letters }
    }

    pub fn empty(cartan: CartanType) -> Self {
        BraidWord {
            cartan,
            letters: Vec::new(),
        }
    }

    /// Either whitespace-separated generator names (`s1 s1' s2`, capitalized
    /// for inverses, `s`/`t` accepted for G₂) or signed alphabet positions
    /// (`1 -2 3`). Commas are treated as spaces.
    pub fn parse(g: &ReflectionGroup, text: &str) -> Result<Self, Error> {
        let tokens: Vec<&str> = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        let mut letters = Vec::with_capacity(tokens.len());
        for t in tokens {
            let letter = match t.parse::<i32>() {
                Ok(k) => k,
                Err(_) => parse_name(g, t)?,
            };
            letters.push(letter);
        }
        BraidWord::new(g.cartan(), letters)
    }

    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            cartan: self.cartan,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Concatenation; both words must share the group.
    pub fn concat(&self, other: &BraidWord) -> Self {
        assert_eq!(self.cartan, other.cartan, "words over different groups");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            cartan: self.cartan,
            letters,
        }
    }

    /// `self^k`, negative powers through the inverse.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            cartan: self.cartan,
            letters,
        }
    }

    /// Insert `other` before position `at`.
    pub fn insert(&self, at: usize, other: &BraidWord) -> Self {
        let mut letters = self.letters[..at].to_vec();
        letters.extend_from_slice(&other.letters);
        letters.extend_from_slice(&self.letters[at..]);
        BraidWord {
            cartan: self.cartan,
            letters,
        }
    }

    /// Named form, e.g. `s1 S2 s1'`.
    pub fn to_string_with(&self, g: &ReflectionGroup) -> String {
        self.letters
            .iter()
            .map(|&l| {
                let name = &g.labels()[l.unsigned_abs() as usize - 1];
                if l < 0 {
                    capitalize(name)
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for BraidWord {
    /// Integer form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", items.join(" "))
    }
}

fn capitalize(s: &str) -> String {
    let mut c = s.chars();
    match c.next() {
        Some(first) => first.to_uppercase().chain(c).collect(),
        None => String::new(),
    }
}

fn parse_name(g: &ReflectionGroup, token: &str) -> Result<i32, Error> {
    let inverse = token.starts_with(|c: char| c.is_uppercase());
    let lower = token.to_lowercase();
    let pos = g
        .labels()
        .iter()
        .position(|l| *l == lower)
        .or_else(|| match (g.cartan().family, lower.as_str()) {
            (CoxeterFamily::G2, "s") => Some(0),
            (CoxeterFamily::G2, "t") => Some(1),
            _ => None,
        })
        .ok_or_else(|| {
            Error::Parse(format!(
                "unknown generator {token:?} (expected one of {})",
                g.labels().join(", ")
            ))
        })?;
    let k = pos as i32 + 1;
    Ok(if inverse { -k } else { k })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let d4 = ReflectionGroup::new(CartanType::new(CoxeterFamily::D, 4).unwrap()).unwrap();
        let w = BraidWord::parse(&d4, "s1 s1' S2 s3").unwrap();
        assert_eq!(w.letters(), &[1, 2, -3, 4]);
        assert_eq!(w.to_string_with(&d4), "s1 s1' S2 s3");
        assert_eq!(BraidWord::parse(&d4, "1 2 -3 4").unwrap(), w);
        assert_eq!(w.to_string(), "1 2 -3 4");
        assert!(BraidWord::parse(&d4, "s5").is_err());
        assert!(BraidWord::parse(&d4, "5").is_err());
        assert!(BraidWord::parse(&d4, "0").is_err());
        assert_eq!(w.inverse().letters(), &[-4, 3, -2, -1]);
        assert_eq!(w.pow(-1), w.inverse());
        assert_eq!(w.pow(2).len(), 8);

        let g2 = ReflectionGroup::new(CartanType::new(CoxeterFamily::G2, 2).unwrap()).unwrap();
        assert_eq!(BraidWord::parse(&g2, "s t T").unwrap().letters(), &[1, 2, -2]);
    }
}
