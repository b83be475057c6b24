use alloc::vec::Vec;

use super::{Field, Matrix, Scalar};

/// A subspace of `k^n`, stored as the nonzero rows of a reduced row echelon
/// matrix. The representation is canonical, so `==` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of the given vectors, each of length `ambient_dim`.
    pub fn span(field: Field, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        Self::from_rows(&Matrix::from_rows(field, ambient_dim, vectors))
    }

    /// The row space of `m`.
    pub fn from_rows(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        Subspace { ambient_dim: m.cols(), basis: r.select_rows(&keep), pivots }
    }

    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::zeros(field, 0, ambient_dim), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::identity(field, ambient_dim), pivots: (0..ambient_dim).collect() }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Basis vectors as rows, in reduced row echelon form.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        self.basis.row_vectors()
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim, "vector of wrong length");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let field = self.field();
        for j in 0..self.ambient_dim {
            let mut acc = field.zero();
            for (k, c) in coords.iter().enumerate() {
                let b = self.basis.get(k, j);
                if !c.is_zero() && !b.is_zero() {
                    acc = &acc + &(c * b);
                }
            }
            if acc != v[j] {
                return None;
            }
        }
        Some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.vectors().all(|v| other.contains(v))
    }

    /// All functionals vanishing on the subspace, in coordinates dual to the
    /// ambient basis.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field(), self.ambient_dim);
        }
        self.basis.kernel_basis()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn vecs(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&x| q().from_i64(x)).collect()).collect()
    }

    #[test]
    fn annihilator_of_a_line() {
        let line = Subspace::span(q(), 2, vecs(&[&[1, 2]]));
        assert_eq!(line.annihilator(), Subspace::span(q(), 2, vecs(&[&[2, -1]])));
    }

    #[test]
    fn annihilator_of_spanning_set_is_zero() {
        let s = Subspace::span(q(), 2, vecs(&[&[1, 2], &[1, 3]]));
        assert_eq!(s.annihilator(), Subspace::zero(q(), 2));
    }

    #[test]
    fn annihilator_of_zero_is_everything() {
        let z = Subspace::zero(q(), 3);
        assert_eq!(z.annihilator().dim(), 3);
    }

    #[test]
    fn coordinates_reject_outside_vectors() {
        let s = Subspace::span(q(), 3, vecs(&[&[1, 1, 0], &[0, 1, 1]]));
        assert!(s.contains(&vecs(&[&[1, 2, 1]])[0]));
        assert!(!s.contains(&vecs(&[&[0, 0, 1]])[0]));
        assert!(Subspace::zero(q(), 3).is_subspace_of(&s));
        assert!(s.is_subspace_of(&Subspace::full(q(), 3)));
    }
}
