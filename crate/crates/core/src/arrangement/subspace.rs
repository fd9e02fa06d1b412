use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::arith::{format_rational, Matrix, MatrixQ, Rational};

/// A linear subspace of `Q^n`, stored by the rows of its reduced row-echelon
/// basis. Two subspaces are equal iff their representations are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        Subspace::span(ambient, MatrixQ::identity(ambient).to_rows())
    }

    /// The span of the given vectors.
    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let rows: Vec<_> = vectors.into_iter().collect();
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let red = Matrix::from_rows(ambient, rows).rref();
        let rows = red.matrix.to_rows().into_iter().take(red.rank).collect();
        Subspace { ambient, rows }
    }

    pub fn line(v: Vec<Rational>) -> Self {
        let n = v.len();
        Subspace::span(n, [v])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Canonical basis (reduced row-echelon rows).
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    fn pivot(row: &[Rational]) -> usize {
        row.iter().position(|x| !x.is_zero()).expect("zero row in basis")
    }

    /// Remainder of `v` after eliminating the pivot columns.
    fn residual(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for row in &self.rows {
            let p = Self::pivot(row);
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                *x -= &c * y;
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        self.residual(v).iter().all(Zero::is_zero)
    }

    /// Inclusion `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.dim() <= other.dim() && self.rows.iter().all(|r| other.contains_vector(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        if other.is_subspace_of(self) {
            return self.clone();
        }
        Subspace::span(
            self.ambient,
            self.rows.iter().chain(&other.rows).cloned(),
        )
    }

    /// Orthogonal complement in `Q^n` for the standard dot product.
    pub fn orthogonal(&self) -> Subspace {
        if self.rows.is_empty() {
            return Subspace::whole(self.ambient);
        }
        let m = Matrix::from_rows(self.ambient, self.rows.clone());
        Subspace::span(self.ambient, m.kernel())
    }

    /// Orthogonal complement of `self` inside `space`.
    pub fn orthogonal_in(&self, space: &Subspace) -> Subspace {
        self.orthogonal().intersection(space)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.orthogonal().sum(&other.orthogonal()).orthogonal()
    }

    /// Image under a linear map given by its matrix.
    pub fn image(&self, m: &MatrixQ) -> Subspace {
        Subspace::span(self.ambient, self.rows.iter().map(|r| m.apply(r)))
    }

    /// `true` iff every vector of `self` is orthogonal to `v`.
    pub fn is_orthogonal_to(&self, v: &[Rational]) -> bool {
        self.rows.iter().all(|r| crate::arith::dot(r, v).is_zero())
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect()
    }
}

impl Ord for Subspace {
    /// Dimension first, then lexicographic on the echelon rows.
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.rows.cmp(&other.rows))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, r) in self.to_strings().iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}", r.join(" "))?;
        }
        write!(f, "⟩")
    }
}
