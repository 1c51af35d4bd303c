//! Property tests for the exact linear algebra kernel and the color sign.

use nary_alg::bicharacter::Bicharacter;
use nary_alg::group::AbelianGroup;
use nary_alg::identity::colorized_sign;
use nary_alg::matrix::Matrix;
use nary_alg::subspace::{nullspace, Subspace};
use nary_alg::{Field, Scalar};
use proptest::prelude::*;

fn q() -> Field {
    Field::Q
}

fn entries(rows: usize, cols: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..=3, rows * cols)
}

fn matrix(rows: usize, cols: usize, data: &[i64]) -> Matrix {
    let mut m = Matrix::zero(rows, cols, q());
    for r in 0..rows {
        for c in 0..cols {
            *m.at_mut(r, c) = q().from_i64(data[r * cols + c]);
        }
    }
    m
}

fn subspace_from(data: &[i64], rows: usize, ambient: usize) -> Subspace {
    Subspace::from_rows(
        ambient,
        q(),
        (0..rows).map(|r| {
            data[r * ambient..(r + 1) * ambient]
                .iter()
                .map(|&v| q().from_i64(v))
                .collect::<Vec<_>>()
        }),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_preserves_rank_and_is_idempotent(data in entries(4, 5)) {
        let m = matrix(4, 5, &data);
        let (r, pivots) = m.rref();
        prop_assert_eq!(pivots.len(), m.rank());
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(r.clone(), rr);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn rref_is_row_order_invariant(data in entries(4, 4), perm in 0usize..24) {
        let m = matrix(4, 4, &data);
        // apply one of the 24 permutations of the rows
        let mut order: Vec<usize> = (0..4).collect();
        let mut k = perm;
        let mut shuffled = Vec::new();
        for i in (1..=4usize).rev() {
            shuffled.push(order.remove(k % i));
            k /= i;
        }
        let pm = Matrix::from_rows(
            shuffled.iter().map(|&r| m.row_vec(r)).collect(),
            4,
            q(),
        );
        prop_assert_eq!(m.rref().0, pm.rref().0);
    }

    #[test]
    fn nullspace_vectors_are_killed(data in entries(3, 5)) {
        let m = matrix(3, 5, &data);
        let k = nullspace(&m);
        prop_assert_eq!(k.dim(), 5 - m.rank());
        for v in k.basis_rows() {
            prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn modular_law(a in entries(2, 5), b in entries(3, 5)) {
        let sa = subspace_from(&a, 2, 5);
        let sb = subspace_from(&b, 3, 5);
        let sum = sa.sum(&sb).unwrap();
        let inter = sa.intersect(&sb).unwrap();
        prop_assert_eq!(sum.dim() + inter.dim(), sa.dim() + sb.dim());
        prop_assert!(sum.contains(&sa) && sum.contains(&sb));
        prop_assert!(sa.contains(&inter) && sb.contains(&inter));
    }

    #[test]
    fn colorized_sign_equals_inversion_product(
        perm in 0usize..120,
        mask in 0u32..32,
        diag in proptest::collection::vec(prop_oneof![Just(1i64), Just(-1i64)], 1),
    ) {
        // degrees in Z_2, table eps(1,1) = +-1; both routes must agree
        let m = 5usize;
        let g = AbelianGroup::z2();
        let mut t = Matrix::zero(1, 1, q());
        *t.at_mut(0, 0) = q().from_i64(diag[0]);
        let eps = Bicharacter::from_table(t);
        eps.check_axioms(&g).unwrap();
        let dgs: Vec<_> = (0..m)
            .map(|i| g.element(&[((mask >> i) & 1) as i64]).unwrap())
            .collect();
        let mut pool: Vec<usize> = (0..m).collect();
        let mut order = Vec::new();
        let mut k = perm;
        for i in (1..=m).rev() {
            order.push(pool.remove(k % i));
            k /= i;
        }
        let bubble = colorized_sign(&order, &dgs, &eps);
        let mut byinv = q().one();
        for u in 0..m {
            for v in (u + 1)..m {
                let pu = order.iter().position(|&x| x == u).unwrap();
                let pv = order.iter().position(|&x| x == v).unwrap();
                if pu > pv {
                    byinv = &byinv * &eps.eval(&dgs[u], &dgs[v]);
                }
            }
        }
        prop_assert_eq!(bubble, byinv);
    }

    #[test]
    fn coordinates_round_trip(data in entries(3, 6), coefs in proptest::collection::vec(-3i64..=3, 3)) {
        let s = subspace_from(&data, 3, 6);
        // any combination of basis rows has recoverable coordinates
        let mut v = vec![q().zero(); 6];
        for (row, c) in s.basis_rows().zip(&coefs) {
            for (x, y) in v.iter_mut().zip(row) {
                let add = &q().from_i64(*c) * y;
                *x += &add;
            }
        }
        let coords = s.coordinates(&v).unwrap();
        let expected: Vec<Scalar> = coefs.iter().take(s.dim()).map(|&c| q().from_i64(c)).collect();
        prop_assert_eq!(coords, expected);
    }
}
