//! Central hyperplane arrangements and the reflection groups that produce
//! them.
//!
//! Every arrangement lives in a carrier space `Q^n` and carries an explicit
//! subspace `V ⊆ Q^n` on which it is considered. Type A is realized on the
//! sum-zero hyperplane of `Q^{r+1}` (the quotient by the diagonal), and G₂ on
//! the sum-zero plane of `Q^3`, so every coordinate stays rational and the
//! standard dot product of `Q^n` serves as the pairing that identifies `V`
//! with its dual.

mod group;
mod subspace;

pub use group::{
    build_reflection_arrangement, CartanType, CoxeterFamily, GroupElement, ReflectionGroup,
    StabilizerMode,
};
pub use subspace::Subspace;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, parse_rational, Rational};
use crate::Error;

/// A linear hyperplane, given by its normal vector scaled to a primitive
/// integer vector whose first nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    normal: Vec<Rational>,
}

impl Hyperplane {
    pub fn new(normal: &[Rational]) -> Result<Self, Error> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::invalid("zero normal vector"));
        }
        let lcm = normal
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = normal
            .iter()
            .map(|q| q.numer() * (&lcm / q.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let first_negative = ints.iter().find(|x| !x.is_zero()).unwrap().is_negative();
        let g = if first_negative { -g } else { g };
        Ok(Hyperplane {
            normal: ints
                .into_iter()
                .map(|x| Rational::from_integer(x / &g))
                .collect(),
        })
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    /// The dual line `H^⊥`.
    pub fn dual_line(&self) -> Subspace {
        Subspace::line(self.normal.clone())
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        crate::arith::dot(&self.normal, v).is_zero()
    }
}

/// A central arrangement of hyperplanes in the space `V ⊆ Q^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    space: Subspace,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    /// Canonicalize and deduplicate the given normals. All normals must lie in
    /// `space`.
    pub fn new(space: Subspace, normals: &[Vec<Rational>]) -> Result<Self, Error> {
        let n = space.ambient_dim();
        let mut hyperplanes = Vec::with_capacity(normals.len());
        for v in normals {
            if v.len() != n {
                return Err(Error::invalid(format!(
                    "normal of length {} in a space of dimension {n}",
                    v.len()
                )));
            }
            if !space.contains_vector(v) {
                return Err(Error::invalid("normal does not lie in the ambient space"));
            }
            hyperplanes.push(Hyperplane::new(v)?);
        }
        hyperplanes.sort();
        hyperplanes.dedup();
        Ok(Arrangement { space, hyperplanes })
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.ambient_dim()
    }

    /// The space `V` the hyperplanes cut.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    /// Dimension of the span of the normals.
    pub fn rank(&self) -> usize {
        self.normal_span().dim()
    }

    fn normal_span(&self) -> Subspace {
        Subspace::span(
            self.ambient_dim(),
            self.hyperplanes.iter().map(|h| h.normal.clone()),
        )
    }

    /// The common intersection of all hyperplanes is `{0}` inside `V`.
    pub fn is_essential(&self) -> bool {
        self.rank() == self.dim()
    }

    /// Quotient by the common intersection, realized as its orthogonal
    /// complement: `V` is replaced by the span of the normals.
    pub fn essentialize(&self) -> Arrangement {
        Arrangement {
            space: self.normal_span(),
            hyperplanes: self.hyperplanes.clone(),
        }
    }

    /// The dual lines `H^⊥`, in hyperplane order.
    pub fn dual_lines(&self) -> Vec<Subspace> {
        self.hyperplanes.iter().map(Hyperplane::dual_line).collect()
    }

    /// `true` iff `v` lies on none of the hyperplanes.
    pub fn avoids(&self, v: &[Rational]) -> bool {
        self.hyperplanes.iter().all(|h| !h.contains(v))
    }

    pub fn to_json(&self) -> ArrangementJson {
        ArrangementJson {
            dim: self.ambient_dim(),
            normals: self
                .hyperplanes
                .iter()
                .map(|h| h.normal.iter().map(format_rational).collect())
                .collect(),
            offsets: None,
            essentialize: None,
        }
    }
}

/// On-disk arrangement format:
/// `{"dim": n, "normals": [["1","-1","0"], ...]}`.
///
/// `offsets`, when present, gives the affine constant of each hyperplane; any
/// nonzero offset is rejected because only central arrangements are
/// supported.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementJson {
    pub dim: usize,
    pub normals: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offsets: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub essentialize: Option<bool>,
}

/// Parse an arrangement document. With `essentialize` (or the document's own
/// `essentialize` flag) the result is quotiented by the common intersection.
pub fn load_arrangement(text: &str, essentialize: bool) -> Result<Arrangement, Error> {
    let doc: ArrangementJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    from_json(&doc, essentialize)
}

pub fn from_json(doc: &ArrangementJson, essentialize: bool) -> Result<Arrangement, Error> {
    if doc.dim == 0 {
        return Err(Error::invalid("dimension must be positive"));
    }
    if let Some(offsets) = &doc.offsets {
        if offsets.len() != doc.normals.len() {
            return Err(Error::invalid("offsets and normals differ in length"));
        }
        for o in offsets {
            if !parse_rational(o)?.is_zero() {
                return Err(Error::invalid(
                    "non-central arrangement: hyperplane does not pass through the origin",
                ));
            }
        }
    }
    let normals = doc
        .normals
        .iter()
        .map(|row| row.iter().map(|s| parse_rational(s)).collect())
        .collect::<Result<Vec<Vec<_>>, _>>()?;
    let arr = Arrangement::new(Subspace::whole(doc.dim), &normals)?;
    if essentialize || doc.essentialize == Some(true) {
        Ok(arr.essentialize())
    } else {
        Ok(arr)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qvec;

    #[test]
    fn boolean_arrangement() {
        let a = load_arrangement(r#"{"dim": 2, "normals": [["1","0"],["0","1"]]}"#, false).unwrap();
        assert_eq!(a.hyperplanes().len(), 2);
        assert_eq!(a.rank(), 2);
        assert!(a.is_essential());
    }

    #[test]
    fn duplicates_collapse() {
        let a = load_arrangement(
            r#"{"dim": 2, "normals": [["1","0"],["2","0"],["-1/3","0"]]}"#,
            false,
        )
        .unwrap();
        assert_eq!(a.hyperplanes().len(), 1);
        assert_eq!(a.hyperplanes()[0].normal(), qvec(&[1, 0]).as_slice());
    }

    #[test]
    fn rejects_bad_input() {
        let non_central = r#"{"dim": 2, "normals": [["1","0"]], "offsets": ["1"]}"#;
        assert!(matches!(
            load_arrangement(non_central, false),
            Err(Error::Invalid(_))
        ));
        let bad_rational = r#"{"dim": 2, "normals": [["1","zz"]]}"#;
        assert!(matches!(
            load_arrangement(bad_rational, false),
            Err(Error::Parse(_))
        ));
        let mismatch = r#"{"dim": 3, "normals": [["1","0"]]}"#;
        assert!(matches!(
            load_arrangement(mismatch, false),
            Err(Error::Invalid(_))
        ));
        let zero = r#"{"dim": 2, "normals": [["0","0"]]}"#;
        assert!(load_arrangement(zero, false).is_err());
    }

    #[test]
    fn essentialize_quotients_common_intersection() {
        let a = load_arrangement(r#"{"dim": 3, "normals": [["1","-1","0"],["0","1","-1"]]}"#, false)
            .unwrap();
        assert!(!a.is_essential());
        let e = a.essentialize();
        assert!(e.is_essential());
        assert_eq!(e.dim(), 2);
    }

    #[test]
    fn manual_a3_matches_builder() {
        let doc = r#"{"dim": 4, "normals": [
            ["1","-1","0","0"],["1","0","-1","0"],["1","0","0","-1"],
            ["0","1","-1","0"],["0","1","0","-1"],["0","0","1","-1"]]}"#;
        let manual = load_arrangement(doc, true).unwrap();
        let (built, _) = build_reflection_arrangement(CoxeterFamily::A, 3).unwrap();
        assert_eq!(manual, built);
    }

    #[test]
    fn json_round_trip() {
        let (a, _) = build_reflection_arrangement(CoxeterFamily::G2, 2).unwrap();
        let text = serde_json::to_string(&a.to_json()).unwrap();
        assert_eq!(load_arrangement(&text, true).unwrap(), a);
    }
}
