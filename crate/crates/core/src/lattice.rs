//! The LCM-lattice of a morphism, its Scarf simplicial complex, and the face
//! data `I_a`, `I(a)`, `I^a` attached to lattice points.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::degree::Multidegree;
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::IndexSet;

/// Subset enumeration is exhaustive; morphisms with more source generators
/// than this are refused.
pub const DEFAULT_MAX_COLUMNS: usize = 20;

#[derive(Clone, Debug)]
struct DegreeFaces {
    count: u64,
    /// Intersection of all faces of this degree.
    meet: u64,
    /// Some face of this degree; the only one when `count == 1`.
    witness: u64,
}

/// `L_φ` with its partition into `L_S` (degrees of Scarf faces) and `L_S^0`.
#[derive(Clone, Debug)]
pub struct LcmLattice {
    atoms: Vec<Multidegree>,
    elements: Vec<Multidegree>,
    scarf_part: Vec<Multidegree>,
    nonscarf_part: Vec<Multidegree>,
    faces: BTreeMap<Multidegree, DegreeFaces>,
}

/// `I_a`, `I(a)` and `I^a = I_a \ I(a)` for a lattice point `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceData {
    pub degree: Multidegree,
    pub columns_leq: IndexSet,
    pub meet: IndexSet,
    pub upper: IndexSet,
}

pub(crate) fn mask_to_set(mask: u64) -> IndexSet {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

pub(crate) fn set_to_mask(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &i| m | 1 << i)
}

impl LcmLattice {
    pub fn of(phi: &Morphism) -> Result<Self> {
        Self::with_cap(phi.source_degrees(), DEFAULT_MAX_COLUMNS)
    }

    pub fn with_cap(atoms: &[Multidegree], cap: usize) -> Result<Self> {
        let e = atoms.len();
        if e > cap.min(63) {
            return Err(Error::TooManyColumns { columns: e, cap: cap.min(63) });
        }
        let mut joins: Vec<Option<Multidegree>> = alloc::vec![None; 1 << e];
        let mut faces: BTreeMap<Multidegree, DegreeFaces> = BTreeMap::new();
        for mask in 1u64..1 << e {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            let j = match &joins[rest as usize] {
                Some(d) => d.vee(&atoms[low]),
                None => atoms[low].clone(),
            };
            faces
                .entry(j.clone())
                .and_modify(|f| {
                    f.count += 1;
                    f.meet &= mask;
                })
                .or_insert(DegreeFaces { count: 1, meet: mask, witness: mask });
            joins[mask as usize] = Some(j);
        }
        let elements: Vec<Multidegree> = faces.keys().cloned().collect();
        let (scarf_part, nonscarf_part) = elements.iter().cloned().partition(|d| faces[d].count == 1);
        Ok(LcmLattice { atoms: atoms.to_vec(), elements, scarf_part, nonscarf_part, faces })
    }

    pub fn atoms(&self) -> &[Multidegree] {
        &self.atoms
    }

    /// All joins of nonempty subsets of the atoms, sorted.
    pub fn elements(&self) -> &[Multidegree] {
        &self.elements
    }

    /// `L_S`: degrees realized by exactly one face.
    pub fn scarf_part(&self) -> &[Multidegree] {
        &self.scarf_part
    }

    /// `L_S^0`.
    pub fn nonscarf_part(&self) -> &[Multidegree] {
        &self.nonscarf_part
    }

    pub fn contains(&self, a: &Multidegree) -> bool {
        self.faces.contains_key(a)
    }

    /// Number of faces whose join is `a`.
    pub fn face_count(&self, a: &Multidegree) -> u64 {
        self.faces.get(a).map_or(0, |f| f.count)
    }

    /// `Δ_S`: nonempty faces whose degree no other face shares, ordered by
    /// size and then lexicographically.
    pub fn scarf_faces(&self) -> Vec<IndexSet> {
        let mut out: Vec<IndexSet> = self.faces.values().filter(|f| f.count == 1).map(|f| mask_to_set(f.witness)).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    pub fn face_data(&self, a: &Multidegree) -> Result<FaceData> {
        let f = self.faces.get(a).ok_or_else(|| Error::DegreeNotInLattice(a.clone()))?;
        let columns_leq: IndexSet = (0..self.atoms.len()).filter(|&j| self.atoms[j].le(a)).collect();
        let meet = mask_to_set(f.meet);
        let upper = mask_to_set(set_to_mask(&columns_leq) & !f.meet);
        Ok(FaceData { degree: a.clone(), columns_leq, meet, upper })
    }
}

pub fn lcm_lattice(phi: &Morphism) -> Result<LcmLattice> {
    LcmLattice::of(phi)
}

pub fn scarf_faces(phi: &Morphism) -> Result<Vec<IndexSet>> {
    Ok(LcmLattice::of(phi)?.scarf_faces())
}

pub fn face_data(phi: &Morphism, a: &Multidegree) -> Result<FaceData> {
    LcmLattice::of(phi)?.face_data(a)
}
