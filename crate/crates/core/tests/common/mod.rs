#![allow(dead_code)]

use brt_core::{Field, Matrix, Morphism, Multidegree};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const Q: Field = Field::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn deg(v: &[u32]) -> Multidegree {
    Multidegree::new(v.to_vec())
}

pub fn ex() -> Morphism {
    Morphism::from_matrix(
        vec![deg(&[3, 0]), deg(&[2, 1]), deg(&[1, 2]), deg(&[0, 3])],
        vec![deg(&[0, 0]), deg(&[1, 0])],
        &Matrix::from_i64_rows(Q, &[&[1, 1, 1, 1], &[1, 2, 3, 0]]),
    )
    .unwrap()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Matrix {
    Matrix::from_fn(Q, rows, cols, |_, _| Q.from_i64(rng.gen_range(-bound..=bound)))
}

/// A `g × e` matrix of rank at most `rank`, as a product of random factors.
pub fn random_matrix_of_rank(rng: &mut ChaCha8Rng, rows: usize, cols: usize, rank: usize) -> Matrix {
    let a = random_matrix(rng, rows, rank, 3);
    let b = random_matrix(rng, rank, cols, 3);
    &a * &b
}

pub fn random_degree(rng: &mut ChaCha8Rng, n: usize, max: u32) -> Multidegree {
    Multidegree::new((0..n).map(|_| rng.gen_range(0..=max)).collect())
}

/// Random homogeneous morphism: targets of degree 0 or small, sources of
/// degree dominating the first target, coefficients zeroed where the
/// homogeneity rule forbids them. Roughly a third of the cases get a
/// rank-deficient coefficient matrix and a few get two parallel columns.
pub fn random_morphism(rng: &mut ChaCha8Rng, n: usize, e: usize, g: usize, max: u32) -> Morphism {
    let mode = rng.gen_range(0..6);
    let zero_targets = mode < 3;
    let targets: Vec<Multidegree> = (0..g)
        .map(|i| if zero_targets || i == 0 { Multidegree::zero(n) } else { random_degree(rng, n, 1) })
        .collect();
    let sources: Vec<Multidegree> = (0..e).map(|_| random_degree(rng, n, max)).collect();
    let mut c = match mode {
        0 | 1 => {
            let rank = rng.gen_range(1..=g.min(e));
            random_matrix_of_rank(rng, g, e, rank)
        }
        _ => random_matrix(rng, g, e, 3),
    };
    if mode == 2 && e >= 2 {
        let (j1, j2) = (0, 1);
        let k = Q.from_i64(rng.gen_range(1..=3));
        for i in 0..g {
            let v = c.get(i, j1) * &k;
            c.set(i, j2, v);
        }
    }
    for i in 0..g {
        for (j, s) in sources.iter().enumerate() {
            if !targets[i].le(s) {
                c.set(i, j, Q.zero());
            }
        }
    }
    Morphism::from_matrix(sources, targets, &c).unwrap()
}

/// Source degrees in which, coordinate by coordinate, the nonzero values
/// are pairwise distinct; no degree is zero.
pub fn generic_degrees(rng: &mut ChaCha8Rng, n: usize, e: usize) -> Vec<Vec<u32>> {
    let mut degs = vec![vec![0u32; n]; e];
    for k in 0..n {
        let mut values: Vec<u32> = (1..=e as u32 + 2).collect();
        values.shuffle(rng);
        for (j, d) in degs.iter_mut().enumerate() {
            if rng.gen_bool(0.7) {
                d[k] = values[j];
            }
        }
    }
    for d in &mut degs {
        if d.iter().all(|&x| x == 0) {
            d[0] = 1;
        }
    }
    degs
}

/// A generic morphism whose targets all have degree 0, or `None` when the
/// random draw is not generic.
pub fn random_generic_morphism(rng: &mut ChaCha8Rng, n: usize, e: usize, g: usize) -> Option<Morphism> {
    let sources: Vec<Multidegree> = generic_degrees(rng, n, e).into_iter().map(Multidegree::new).collect();
    let rank = rng.gen_range(1..=g.min(e));
    let c = random_matrix_of_rank(rng, g, e, rank);
    let phi = Morphism::from_matrix(sources, vec![Multidegree::zero(n); g], &c).unwrap();
    (phi.is_generic() && phi.zero_columns().is_empty()).then_some(phi)
}
