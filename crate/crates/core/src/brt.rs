//! Systems of subspaces `F_I ⊆ D_{|I|−r−1} V*` and the homogenized complexes
//! they define: the Taylor complex (full system) and the Scarf complex.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::complex::{Generator, GradedComplex};
use crate::error::{Error, Result};
use crate::format_face;
use crate::lattice::{self, LcmLattice};
use crate::linalg::{Field, Matrix, Scalar, Subspace};
use crate::morphism::{CoeffData, Morphism};
use crate::multilinear::{contract, divided_basis, divided_dim, divided_subspace, splice_matrix};
use crate::IndexSet;

/// A face-indexed family of subspaces of divided powers of `V*`. Faces not
/// present carry the zero space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrtSystem {
    rank: usize,
    field: Field,
    spaces: BTreeMap<IndexSet, Subspace>,
}

/// Why a family fails to be a system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BrtViolation {
    /// `F_I ≠ 0` with `|I| ≤ r`.
    SmallFace { face: IndexSet },
    /// `F_I` does not live in `D_{|I|−r−1} V*`.
    WrongAmbient { face: IndexSet },
    /// The image of `F_I` has a component outside `F_J` for the facet `J`.
    NotCompatible { face: IndexSet, facet: IndexSet },
}

impl BrtViolation {
    pub fn face(&self) -> &[usize] {
        match self {
            BrtViolation::SmallFace { face } | BrtViolation::WrongAmbient { face } | BrtViolation::NotCompatible { face, .. } => face,
        }
    }
}

impl core::fmt::Display for BrtViolation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BrtViolation::SmallFace { face } => write!(f, "F_{} is nonzero but the face is too small", format_face(face)),
            BrtViolation::WrongAmbient { face } => write!(f, "F_{} lives in the wrong divided power", format_face(face)),
            BrtViolation::NotCompatible { face, facet } => {
                write!(f, "image of F_{} is not contained in F_{}", format_face(face), format_face(facet))
            }
        }
    }
}

impl BrtSystem {
    /// The empty system for `rank = dim V*`.
    pub fn new(field: Field, rank: usize) -> Self {
        BrtSystem { rank, field, spaces: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Sets `F_face`; a zero subspace removes the entry.
    pub fn insert(&mut self, face: IndexSet, space: Subspace) {
        if space.is_zero() {
            self.spaces.remove(&face);
        } else {
            self.spaces.insert(face, space);
        }
    }

    pub fn get(&self, face: &[usize]) -> Option<&Subspace> {
        self.spaces.get(face)
    }

    /// Dimension of `F_face`.
    pub fn dim(&self, face: &[usize]) -> usize {
        self.get(face).map_or(0, Subspace::dim)
    }

    /// Nonzero entries in lexicographic face order.
    pub fn iter(&self) -> impl Iterator<Item = (&IndexSet, &Subspace)> {
        self.spaces.iter()
    }

    /// Entrywise containment.
    pub fn is_contained_in(&self, other: &BrtSystem) -> bool {
        self.spaces.iter().all(|(face, s)| other.get(face).is_some_and(|t| s.is_subspace_of(t)))
    }
}

fn all_faces_from(e: usize, min_size: usize) -> Result<Vec<IndexSet>> {
    if e > lattice::DEFAULT_MAX_COLUMNS {
        return Err(Error::TooManyColumns { columns: e, cap: lattice::DEFAULT_MAX_COLUMNS });
    }
    Ok((1u64..1 << e).filter(|m| m.count_ones() as usize >= min_size).map(lattice::mask_to_set).collect())
}

/// `F_I = D_{|I|−r−1} V*` for every `|I| ≥ r + 1`.
pub fn full_system(phi: &Morphism) -> Result<BrtSystem> {
    let r = phi.rank();
    let mut sys = BrtSystem::new(phi.field(), r);
    for face in all_faces_from(phi.e(), r + 1)? {
        let m = face.len() - r - 1;
        sys.insert(face, Subspace::full(phi.field(), divided_dim(r, m)));
    }
    Ok(sys)
}

/// The Scarf system: full divided powers on Scarf faces, `D_{|I|−r−1} K_{I^a}`
/// on `I = I_a` for `a ∈ L_S^0`, and zero elsewhere.
pub fn scarf_system(phi: &Morphism) -> Result<BrtSystem> {
    let cd = phi.coeff_data();
    let r = cd.rank;
    let lat = LcmLattice::of(phi)?;
    let mut sys = BrtSystem::new(phi.field(), r);
    for face in lat.scarf_faces() {
        if face.len() > r {
            let m = face.len() - r - 1;
            sys.insert(face, Subspace::full(phi.field(), divided_dim(r, m)));
        }
    }
    for a in lat.nonscarf_part() {
        let fd = lat.face_data(a)?;
        let face = fd.columns_leq;
        if face.len() > r {
            let k = cd.k_space(&fd.upper);
            sys.insert(face.clone(), divided_subspace(&k, face.len() - r - 1));
        }
    }
    Ok(sys)
}

/// Checks the three defining conditions and returns the first violation.
pub fn check_brt_system(cd: &CoeffData, sys: &BrtSystem) -> Option<BrtViolation> {
    let r = cd.rank;
    for (face, space) in sys.iter() {
        if face.len() <= r {
            return Some(BrtViolation::SmallFace { face: face.clone() });
        }
        if sys.rank != r || space.ambient_dim() != divided_dim(r, face.len() - r - 1) {
            return Some(BrtViolation::WrongAmbient { face: face.clone() });
        }
    }
    for (face, space) in sys.iter() {
        if face.len() < r + 2 {
            continue;
        }
        let p = face.len() - r - 1;
        for z in space.vectors() {
            for (t, comp) in contract(&cd.coords, face, p, z).into_iter().enumerate() {
                let mut facet = face.clone();
                facet.remove(t);
                let ok = match sys.get(&facet) {
                    Some(target) => target.contains(&comp),
                    None => comp.iter().all(Scalar::is_zero),
                };
                if !ok {
                    return Some(BrtViolation::NotCompatible { face: face.clone(), facet });
                }
            }
        }
    }
    None
}

pub fn is_brt_system(phi: &Morphism, sys: &BrtSystem) -> bool {
    check_brt_system(&phi.coeff_data(), sys).is_none()
}

fn generator_label(face: &[usize], basis_vector: &[Scalar], index: usize, r: usize) -> String {
    let m = face.len() - r - 1;
    let unit = basis_vector.iter().filter(|x| !x.is_zero()).count() == 1 && basis_vector.iter().any(Scalar::is_one);
    if m == 0 && unit {
        return alloc::format!("e{}", format_face(face));
    }
    if unit {
        let pos = basis_vector.iter().position(Scalar::is_one).expect("unit vector");
        let b = &divided_basis(r, m)[pos];
        let parts: Vec<String> = b.iter().map(|x| alloc::format!("{x}")).collect();
        return alloc::format!("υ^({})⊗e{}", parts.join(","), format_face(face));
    }
    alloc::format!("f{}⊗e{}", index + 1, format_face(face))
}

/// `R(F, φ)`: level 0 is `G`, level 1 is `E`, and level `i ≥ 2` has one
/// generator per basis vector of `F_I` for `|I| = r + i − 1`, in degree
/// `|e_I|`, ordered by face and then basis vector. Empty top levels are
/// dropped.
pub fn build_complex(phi: &Morphism, sys: &BrtSystem) -> Result<GradedComplex> {
    let cd = phi.coeff_data();
    let r = cd.rank;
    let field = phi.field();
    if let Some(v) = check_brt_system(&cd, sys) {
        return Err(Error::Restriction { face: v.face().to_vec() });
    }
    let top = (phi.e() + 1).saturating_sub(r).max(1);
    let mut levels: Vec<Vec<Generator>> = Vec::new();
    levels.push(phi.target_degrees().iter().enumerate().map(|(i, d)| Generator::new(d.clone(), alloc::format!("g{}", i + 1))).collect());
    levels.push(phi.source_degrees().iter().enumerate().map(|(i, d)| Generator::new(d.clone(), alloc::format!("e{}", i + 1))).collect());
    // (face, basis index) of each generator, per level ≥ 2
    let mut keys: Vec<Vec<(IndexSet, usize)>> = alloc::vec![Vec::new(), Vec::new()];
    for level in 2..=top {
        let size = r + level - 1;
        let mut gens = Vec::new();
        let mut lk = Vec::new();
        for (face, space) in sys.iter().filter(|(f, _)| f.len() == size) {
            let degree = phi.face_degree(face);
            for (k, v) in space.vectors().enumerate() {
                gens.push(Generator::new(degree.clone(), generator_label(face, v, k, r)));
                lk.push((face.clone(), k));
            }
        }
        levels.push(gens);
        keys.push(lk);
    }

    let mut diffs = alloc::vec![cd.c.clone()];
    if top >= 2 {
        let splice = splice_matrix(&cd.coords);
        let faces = crate::multilinear::exterior_basis(phi.e(), r + 1);
        let mut d2 = Matrix::zeros(field, phi.e(), levels[2].len());
        for (col, (face, k)) in keys[2].iter().enumerate() {
            let scale = sys.get(face).expect("face in system").basis().get(*k, 0);
            let src = faces.binary_search(face).expect("face of size r + 1");
            for l in 0..phi.e() {
                let x = splice.get(l, src);
                if !x.is_zero() {
                    d2.set(l, col, x * scale);
                }
            }
        }
        diffs.push(d2);
    }
    for level in 3..=top {
        let rows: BTreeMap<(IndexSet, usize), usize> = keys[level - 1].iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let mut d = Matrix::zeros(field, levels[level - 1].len(), levels[level].len());
        for (col, (face, k)) in keys[level].iter().enumerate() {
            let z = sys.get(face).expect("face in system").basis().row(*k);
            let p = face.len() - r - 1;
            for (t, comp) in contract(&cd.coords, face, p, z).into_iter().enumerate() {
                if comp.iter().all(Scalar::is_zero) {
                    continue;
                }
                let mut facet = face.clone();
                facet.remove(t);
                let coeffs = sys
                    .get(&facet)
                    .and_then(|s| s.coordinates(&comp))
                    .ok_or_else(|| Error::Restriction { face: face.clone() })?;
                for (k2, x) in coeffs.into_iter().enumerate() {
                    if !x.is_zero() {
                        d.set(rows[&(facet.clone(), k2)], col, x);
                    }
                }
            }
        }
        diffs.push(d);
    }
    Ok(GradedComplex::new(field, phi.n(), levels, diffs)?.trim())
}

/// The Taylor complex `T(φ)`.
pub fn taylor(phi: &Morphism) -> Result<GradedComplex> {
    build_complex(phi, &full_system(phi)?)
}

/// The Scarf complex `S(φ)`.
pub fn scarf(phi: &Morphism) -> Result<GradedComplex> {
    build_complex(phi, &scarf_system(phi)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::fixtures::*;

    const Q: Field = Field::Rational;

    #[test]
    fn full_system_dimensions() {
        let sys = full_system(&ex()).unwrap();
        for face in [face(&[1, 2, 3]), face(&[1, 2, 4]), face(&[1, 3, 4]), face(&[2, 3, 4])] {
            assert_eq!(sys.dim(&face), 1);
        }
        assert_eq!(sys.dim(&face(&[1, 2, 3, 4])), 2);
        assert_eq!(sys.dim(&face(&[1, 2])), 0);
        assert_eq!(sys.iter().count(), 5);
    }

    #[test]
    fn full_system_is_empty_when_e_equals_r() {
        let m = Morphism::from_matrix(alloc::vec![deg(&[1, 0]), deg(&[0, 1])], alloc::vec![deg(&[0, 0]), deg(&[0, 0])], &Matrix::identity(Q, 2)).unwrap();
        assert_eq!(full_system(&m).unwrap().iter().count(), 0);
        let t = taylor(&m).unwrap();
        assert_eq!(t.ranks(), alloc::vec![2, 2]);
    }

    #[test]
    fn scarf_system_of_ex() {
        let sys = scarf_system(&ex()).unwrap();
        let entries: Vec<_> = sys.iter().map(|(f, s)| (f.clone(), s.dim())).collect();
        assert_eq!(entries, alloc::vec![(face(&[1, 2, 3]), 1), (face(&[2, 3, 4]), 1)]);
        assert!(sys.is_contained_in(&full_system(&ex()).unwrap()));
        assert!(!full_system(&ex()).unwrap().is_contained_in(&sys));
    }

    #[test]
    fn systems_are_brt() {
        assert!(is_brt_system(&ex(), &scarf_system(&ex()).unwrap()));
        assert!(is_brt_system(&ex(), &full_system(&ex()).unwrap()));
        assert!(is_brt_system(&phi_prime(), &full_system(&phi_prime()).unwrap()));
    }

    #[test]
    fn incompatible_system_is_detected() {
        let mut sys = scarf_system(&ex()).unwrap();
        sys.insert(face(&[1, 2, 3, 4]), Subspace::full(Q, 2));
        let v = check_brt_system(&ex().coeff_data(), &sys).unwrap();
        assert_eq!(v.face(), face(&[1, 2, 3, 4]).as_slice());
        assert!(matches!(v, BrtViolation::NotCompatible { .. }));
        assert!(matches!(build_complex(&ex(), &sys), Err(Error::Restriction { .. })));

        let mut small = BrtSystem::new(Q, 2);
        small.insert(face(&[1, 2]), Subspace::full(Q, 1));
        assert!(matches!(check_brt_system(&ex().coeff_data(), &small), Some(BrtViolation::SmallFace { .. })));
        let mut wrong = BrtSystem::new(Q, 2);
        wrong.insert(face(&[1, 2, 3]), Subspace::full(Q, 2));
        assert!(matches!(check_brt_system(&ex().coeff_data(), &wrong), Some(BrtViolation::WrongAmbient { .. })));
    }

    #[test]
    fn taylor_of_ex() {
        let t = taylor(&ex()).unwrap();
        assert_eq!(t.ranks(), alloc::vec![2, 4, 4, 2]);
        let degs: Vec<_> = t.level(2).iter().map(|g| g.degree.clone()).collect();
        assert_eq!(degs, alloc::vec![deg(&[3, 2]), deg(&[3, 3]), deg(&[3, 3]), deg(&[2, 3])]);
        assert!(t.level(3).iter().all(|g| g.degree == deg(&[3, 3])));
        assert_eq!(t.level(2)[0].label, "e{1,2,3}");
        assert_eq!(t.level(3)[1].label, "υ^(0,1)⊗e{1,2,3,4}");
        let d2 = Matrix::from_i64_rows(Q, &[&[1, -2, -3, 0], &[-2, 1, 0, -3], &[1, 0, 1, 2], &[0, 1, 2, 1]]);
        assert_eq!(t.differential(2).unwrap(), &d2);
        assert_eq!(t.shift(2, 0, 1).unwrap(), deg(&[0, 3]));
    }

    #[test]
    fn scarf_of_ex() {
        let s = scarf(&ex()).unwrap();
        assert_eq!(s.ranks(), alloc::vec![2, 4, 2]);
        let d2 = Matrix::from_i64_rows(Q, &[&[1, 0], &[-2, -3], &[1, 2], &[0, 1]]);
        assert_eq!(s.differential(2).unwrap(), &d2);
        assert_eq!(s.shift(2, 1, 1).unwrap(), deg(&[0, 2]));
        assert_eq!(s.shift(2, 3, 1).unwrap(), deg(&[2, 0]));
    }

    #[test]
    fn monomial_ideal_taylor_ranks() {
        // (x², xy, y²)
        let m = Morphism::from_matrix(
            alloc::vec![deg(&[2, 0]), deg(&[1, 1]), deg(&[0, 2])],
            alloc::vec![deg(&[0, 0])],
            &Matrix::from_i64_rows(Q, &[&[1, 1, 1]]),
        )
        .unwrap();
        let t = taylor(&m).unwrap();
        assert_eq!(t.ranks(), alloc::vec![1, 3, 3, 1]);
        let degs: Vec<_> = t.level(2).iter().map(|g| g.degree.clone()).collect();
        assert_eq!(degs, alloc::vec![deg(&[2, 1]), deg(&[2, 2]), deg(&[1, 2])]);
        assert_eq!(t.level(3)[0].degree, deg(&[2, 2]));
    }
}
