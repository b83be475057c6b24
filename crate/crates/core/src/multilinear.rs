//! Divided powers `D_m V*`, exterior powers `Λ^k U`, and the complexes built
//! from them: `A^{m,k}(s, V)` with differentials `σ`, and the spliced
//! Buchsbaum-Rim complex `B(s, V)`.
//!
//! Basis conventions, which every matrix below depends on:
//! - `D_m V*` with `dim V* = r` has basis `υ^(b)` for weak compositions `b`
//!   of `m` into `r` parts, in descending lexicographic order
//!   (`(2,0), (1,1), (0,2)`).
//! - `Λ^k U` has basis `e_I` for `k`-subsets `I`, in lexicographic order.
//! - A tensor product `D ⊗ Λ` is ordered by face first, then divided index.
//! - `sgn(l, I) = (−1)^(pos_I(l) − 1)` (moving `e_l` to the front), for both
//!   `σ` and the splice map.
//!
//! The top form of `Λ^r V*` is carried implicitly; in a fixed basis of `V`
//! it contributes a factor of 1.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::complex::VectorComplex;
use crate::error::Result;
use crate::linalg::{Field, Matrix, Scalar, Subspace};
use crate::morphism::{coordinates_in, k_subsets};
use crate::IndexSet;

/// Exponent vector `b` of a divided power monomial `υ^(b)`.
pub type DividedIndex = Vec<u32>;

/// Weak compositions of `m` into `r` parts, descending lexicographic.
pub fn divided_basis(r: usize, m: usize) -> Vec<DividedIndex> {
    if r == 0 {
        return if m == 0 { alloc::vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=m).rev() {
        for mut rest in divided_basis(r - 1, m - first) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

/// `k`-subsets of `0..e`, lexicographic.
pub fn exterior_basis(e: usize, k: usize) -> Vec<IndexSet> {
    k_subsets(e, k).collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim D_m` of an `r`-dimensional space.
pub fn divided_dim(r: usize, m: usize) -> usize {
    if r == 0 {
        usize::from(m == 0)
    } else {
        binomial(m + r - 1, r - 1)
    }
}

/// A list of basis labels with reverse lookup.
#[derive(Clone, Debug)]
pub(crate) struct Indexed<T: Ord + Clone> {
    pub items: Vec<T>,
    pos: BTreeMap<T, usize>,
}

impl<T: Ord + Clone> Indexed<T> {
    pub fn new(items: Vec<T>) -> Self {
        let pos = items.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        Indexed { items, pos }
    }

    pub fn position(&self, t: &T) -> usize {
        self.pos[t]
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }
}

fn sign(field: Field, position: usize) -> Scalar {
    if position % 2 == 0 {
        field.one()
    } else {
        -field.one()
    }
}

/// Applies `σ` to `z ⊗ e_face`, where `z ∈ D_p V*` is given in the divided
/// basis. Returns, for each position `t` of the face, the component along
/// `e_{face \ face[t]}` as a vector in `D_{p−1} V*`.
pub fn contract(coords: &Matrix, face: &[usize], p: usize, z: &[Scalar]) -> Vec<Vec<Scalar>> {
    let field = coords.field();
    let r = coords.rows();
    let dom = divided_basis(r, p);
    assert_eq!(z.len(), dom.len(), "vector not in D_p");
    let cod = p.checked_sub(1).map(|q| Indexed::new(divided_basis(r, q)));
    face.iter()
        .enumerate()
        .map(|(t, &l)| {
            let Some(cod) = &cod else {
                return Vec::new();
            };
            let mut out = alloc::vec![field.zero(); cod.len()];
            let sgn = sign(field, t);
            for (b, zb) in dom.iter().zip(z) {
                if zb.is_zero() {
                    continue;
                }
                for j in 0..r {
                    let c = coords.get(j, l);
                    if b[j] == 0 || c.is_zero() {
                        continue;
                    }
                    let mut lower = b.clone();
                    lower[j] -= 1;
                    let k = cod.position(&lower);
                    out[k] = &out[k] + &(&(&sgn * c) * zb);
                }
            }
            out
        })
        .collect()
}

/// Matrix of `σ^{m,k}_i: D_{m+i} V* ⊗ Λ^{k+i} U → D_{m+i−1} V* ⊗ Λ^{k+i−1} U`,
/// where `coords` (`r × e`) is the matrix of `U → V` in the chosen basis of
/// `V` and `i ≥ 1`.
pub fn sigma_matrix(coords: &Matrix, m: usize, k: usize, i: usize) -> Matrix {
    assert!(i >= 1, "σ_i is defined for i ≥ 1");
    let field = coords.field();
    let (r, e) = (coords.rows(), coords.cols());
    let p = m + i;
    let dom_faces = exterior_basis(e, k + i);
    let cod_faces = Indexed::new(exterior_basis(e, k + i - 1));
    let dom_div = divided_dim(r, p);
    let cod_div = divided_dim(r, p - 1);
    let mut out = Matrix::zeros(field, cod_faces.len() * cod_div, dom_faces.len() * dom_div);
    for (fi, face) in dom_faces.iter().enumerate() {
        for bi in 0..dom_div {
            let mut z = alloc::vec![field.zero(); dom_div];
            z[bi] = field.one();
            for (t, comp) in contract(coords, face, p, &z).into_iter().enumerate() {
                let mut sub = face.clone();
                sub.remove(t);
                let row0 = cod_faces.position(&sub) * cod_div;
                for (k2, x) in comp.into_iter().enumerate() {
                    if !x.is_zero() {
                        out.set(row0 + k2, fi * dom_div + bi, x);
                    }
                }
            }
        }
    }
    out
}

/// Matrix of the splice map `s_2: Λ^{r+1} U ⊗ Λ^r V* → U`: column `e_J` has
/// `sgn(l, J) · det(coords on J \ l)` in row `l`.
pub fn splice_matrix(coords: &Matrix) -> Matrix {
    let field = coords.field();
    let (r, e) = (coords.rows(), coords.cols());
    let faces = exterior_basis(e, r + 1);
    let mut out = Matrix::zeros(field, e, faces.len());
    for (col, face) in faces.iter().enumerate() {
        for (t, &l) in face.iter().enumerate() {
            let mut rest = face.clone();
            rest.remove(t);
            let det = coords.select_columns(&rest).det();
            if !det.is_zero() {
                out.set(l, col, &sign(field, t) * &det);
            }
        }
    }
    out
}

/// `A^{m,k}(s, V)` for `s` with matrix `c` (`g × e`) and `V = vsub ⊇ im(s)`.
pub fn build_a_complex(c: &Matrix, vsub: &Subspace, m: usize, k: usize) -> Result<VectorComplex> {
    let coords = coordinates_in(vsub, c)?;
    let (r, e) = (vsub.dim(), c.cols());
    if k > e {
        return VectorComplex::new(c.field(), alloc::vec![0], Vec::new());
    }
    let top = e - k;
    let dims = (0..=top).map(|i| divided_dim(r, m + i) * binomial(e, k + i)).collect();
    let diffs = (1..=top).map(|i| sigma_matrix(&coords, m, k, i)).collect();
    VectorComplex::new(c.field(), dims, diffs)
}

/// `B(s, V)`: `W ← U ← Λ^{r+1}U ⊗ Λ^r V* ← D_1 V* ⊗ Λ^{r+2} U ⊗ Λ^r V* ← …`
/// with `r = dim V`.
pub fn build_b_complex(c: &Matrix, vsub: &Subspace) -> Result<VectorComplex> {
    let coords = coordinates_in(vsub, c)?;
    let (g, e, r) = (c.rows(), c.cols(), vsub.dim());
    let mut dims = alloc::vec![g, e];
    let mut diffs = alloc::vec![c.clone()];
    let mut i = 2;
    while r + i - 1 <= e {
        dims.push(divided_dim(r, i - 2) * binomial(e, r + i - 1));
        diffs.push(if i == 2 { splice_matrix(&coords) } else { sigma_matrix(&coords, 0, r + 1, i - 2) });
        i += 1;
    }
    VectorComplex::new(c.field(), dims, diffs)
}

/// An element of `D_• V*`, sparse in the divided basis.
type DividedElement = BTreeMap<DividedIndex, Scalar>;

fn divided_power_of(lambda: &[Scalar], c: usize) -> DividedElement {
    let field = lambda.first().map_or(Field::Rational, Scalar::field);
    let mut out = DividedElement::new();
    for d in divided_basis(lambda.len(), c) {
        let mut coeff = field.one();
        for (l, &dj) in lambda.iter().zip(&d) {
            for _ in 0..dj {
                coeff = &coeff * l;
            }
        }
        if !coeff.is_zero() {
            out.insert(d, coeff);
        }
    }
    out
}

fn divided_product(field: Field, x: &DividedElement, y: &DividedElement) -> DividedElement {
    let mut out = DividedElement::new();
    for (d, a) in x {
        for (d2, b) in y {
            let mut coeff = a * b;
            let mut sum = Vec::with_capacity(d.len());
            for (&p, &q) in d.iter().zip(d2) {
                coeff = &coeff * &field.from_bigint(&BigInt::from(binomial((p + q) as usize, p as usize)));
                sum.push(p + q);
            }
            let entry = out.entry(sum).or_insert_with(|| field.zero());
            *entry = &*entry + &coeff;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Columns expressing the basis `{k^(b) : |b| = m}` of `D_m K` in the
/// divided basis of `D_m V*`, where the rows of `basis` (`t × r`) are the
/// basis vectors `k_1, …, k_t` of `K ⊆ V*`. Columns are ordered like
/// `divided_basis(t, m)`.
pub fn divided_embed(basis: &Matrix, m: usize) -> Matrix {
    let field = basis.field();
    let (t, r) = (basis.rows(), basis.cols());
    let target = Indexed::new(divided_basis(r, m));
    let sources = divided_basis(t, m);
    let mut out = Matrix::zeros(field, target.len(), sources.len());
    for (col, b) in sources.iter().enumerate() {
        let mut acc = DividedElement::new();
        acc.insert(alloc::vec![0; r], field.one());
        for (k, &bk) in b.iter().enumerate() {
            if bk > 0 {
                acc = divided_product(field, &acc, &divided_power_of(basis.row(k), bk as usize));
            }
        }
        for (d, v) in acc {
            out.set(target.position(&d), col, v);
        }
    }
    out
}

/// `D_m K` as a subspace of `D_m V*`, in canonical form.
pub fn divided_subspace(k: &Subspace, m: usize) -> Subspace {
    let cols = divided_embed(k.basis(), m);
    cols.column_space_basis()
}
