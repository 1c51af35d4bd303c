//! Shared corpus builders for the integration and acceptance suites.

use nary_alg::algebra::Closure;
use nary_alg::{catalog, Field, GradedAlgebra, Matrix, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn q() -> Field {
    Field::Q
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut m = Matrix::zero(n, n, q());
    for r in 0..n {
        for c in 0..n {
            *m.at_mut(r, c) = q().from_i64(rng.random_range(-3..=3));
        }
    }
    m
}

/// Three seeded nondegenerate 4x4 matrices, one with fractional entries.
pub fn nondegenerate_bs() -> Vec<Matrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut out: Vec<Matrix> = Vec::new();
    while out.len() < 3 {
        let mut m = random_matrix(&mut rng, 4);
        if out.len() == 1 {
            let half = q().parse("1/2").unwrap();
            for c in 0..4 {
                let v = &*m.at(1, c) * &half;
                *m.at_mut(1, c) = v;
            }
        }
        if m.rank() == 4 {
            out.push(m);
        }
    }
    out
}

/// Two seeded singular 4x4 matrices, ranks 3 and 2.
pub fn singular_bs() -> Vec<Matrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut out = Vec::new();
    while out.len() < 2 {
        let want_rank = 3 - out.len(); // 3, then 2
        let mut m = random_matrix(&mut rng, 4);
        // overwrite rows to force the rank
        for r in want_rank..4 {
            for c in 0..4 {
                let v = m.at(r % want_rank.max(1), c).clone();
                *m.at_mut(r, c) = v;
            }
        }
        if m.rank() == want_rank {
            out.push(m);
        }
    }
    out
}

/// The fixed catalog corpus: A2, A3, D3, D4, five L_B (3 nondegenerate,
/// 2 singular), three L_alpha, three zero algebras.
pub fn catalog_corpus() -> Vec<(String, GradedAlgebra)> {
    let mut corpus: Vec<(String, GradedAlgebra)> = vec![
        ("A2".into(), catalog::make_a(2, q())),
        ("A3".into(), catalog::make_a(3, q())),
        ("D3".into(), catalog::make_d(2, q())),
        ("D4".into(), catalog::make_d(3, q())),
    ];
    for (i, b) in nondegenerate_bs().into_iter().enumerate() {
        corpus.push((format!("LB-nondeg{i}"), catalog::make_l_b(3, &b).unwrap()));
    }
    for (i, b) in singular_bs().into_iter().enumerate() {
        corpus.push((format!("LB-sing{i}"), catalog::make_l_b(3, &b).unwrap()));
    }
    for alpha in [0i64, 1, 5] {
        corpus.push((
            format!("Lalpha{alpha}"),
            catalog::make_l_alpha(3, q().from_i64(alpha)),
        ));
    }
    corpus.push(("zero1".into(), catalog::make_zero(1, 3, q())));
    corpus.push(("zero2".into(), catalog::make_zero(2, 2, q())));
    corpus.push(("zero3".into(), catalog::make_zero(3, 3, q())));
    corpus
}

fn random_algebra(rng: &mut ChaCha8Rng, dim: usize, arity: usize, mode: Closure) -> GradedAlgebra {
    use std::collections::BTreeMap;
    let mut gens: BTreeMap<Vec<usize>, Vec<Scalar>> = BTreeMap::new();
    let count = rng.random_range(1..=3);
    for _ in 0..count {
        let mut tuple: Vec<usize> = (0..arity).map(|_| rng.random_range(0..dim)).collect();
        match mode {
            Closure::Antisymmetrize => {
                if dim < arity {
                    continue;
                }
                // distinct indices, ascending
                let mut pool: Vec<usize> = (0..dim).collect();
                tuple = (0..arity)
                    .map(|_| pool.remove(rng.random_range(0..pool.len())))
                    .collect();
                tuple.sort_unstable();
            }
            Closure::Symmetrize => tuple.sort_unstable(),
            Closure::None => {}
        }
        let mut out = vec![q().zero(); dim];
        let nnz = rng.random_range(1..=dim);
        for _ in 0..nnz {
            out[rng.random_range(0..dim)] = q().from_i64(rng.random_range(-2..=2));
        }
        gens.insert(tuple, out);
    }
    GradedAlgebra::new(
        q(),
        dim,
        arity,
        nary_alg::AbelianGroup::trivial(),
        vec![nary_alg::AbelianGroup::trivial().zero(); dim],
        nary_alg::Bicharacter::trivial(&nary_alg::AbelianGroup::trivial(), q()),
        gens.into_iter().collect(),
        mode,
    )
    .expect("random algebra construction")
}

/// Twenty seeded random validated trivially-graded algebras, arity 2 or 3,
/// dimension at most 4, with a mix of closure modes.
pub fn random_corpus() -> Vec<(String, GradedAlgebra)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut out = Vec::new();
    for i in 0..20usize {
        let mode = match i % 3 {
            0 => Closure::None,
            1 => Closure::Antisymmetrize,
            _ => Closure::Symmetrize,
        };
        let dim = rng.random_range(1..=4);
        let arity = if rng.random_bool(0.5) { 2 } else { 3 };
        let alg = random_algebra(&mut rng, dim, arity, mode);
        alg.validate().expect("random algebras validate");
        out.push((format!("rand{i:02}"), alg));
    }
    out
}
