//! The doubled algebra T(t) = Tt + Tt^n, the embedding of quasiderivation
//! pairs as derivations of the double, and the direct-sum decomposition of
//! the double's derivations when the base algebra has zero center.
//!
//! Carrier basis order: `e_0 t, ..., e_{d-1} t, e_0 t^n, ..., e_{d-1} t^n`.
//! The only nonzero products are `[x_1 t, ..., x_n t] = [x_1, ..., x_n] t^n`;
//! any argument with exponent n pushes the exponent sum past n and kills the
//! product. The indeterminate carries degree zero, so each `e_i t^k` keeps
//! the degree of `e_i`.

use crate::algebra::{Closure, GradedAlgebra};
use crate::error::Error;
use crate::exec::Exec;
use crate::group::GroupElement;
use crate::homs::HomMap;
use crate::matrix::{Matrix, RrefBuilder};
use crate::opspace::{operator_family_with, EndFamily, OperatorClass, OperatorSpace};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

#[derive(Clone)]
pub struct ExtendedAlgebra {
    pub base: GradedAlgebra,
    pub carrier: GradedAlgebra,
}

pub fn extend(alg: &GradedAlgebra) -> ExtendedAlgebra {
    let d = alg.dim();
    let mut degrees = alg.degrees().to_vec();
    degrees.extend_from_slice(alg.degrees());
    let mut products = Vec::new();
    for (tuple, out) in alg.stored_products() {
        let mut lifted = vec![alg.field().zero(); 2 * d];
        for (j, c) in out.iter().enumerate() {
            lifted[d + j] = c.clone();
        }
        products.push((tuple.clone(), lifted));
    }
    let carrier = GradedAlgebra::new(
        alg.field(),
        2 * d,
        alg.arity(),
        alg.group().clone(),
        degrees,
        alg.eps().clone(),
        products,
        Closure::None,
    )
    .expect("carrier construction");
    ExtendedAlgebra {
        base: alg.clone(),
        carrier,
    }
}

/// A graded complement U with T = U + [T,...,T]: extend the RREF pivot
/// basis of the derived subalgebra by the standard basis vectors at the
/// non-pivot columns.
pub fn complement_of_derived(alg: &GradedAlgebra) -> Subspace {
    let derived = alg.derived_subalgebra();
    let rows: Vec<Vec<Scalar>> = (0..alg.dim())
        .filter(|i| !derived.pivots().contains(i))
        .map(|i| {
            let mut v = vec![alg.field().zero(); alg.dim()];
            v[i] = alg.field().one();
            v
        })
        .collect();
    Subspace::from_rows(alg.dim(), alg.field(), rows)
}

/// The embedding of a quasiderivation pair into End of the carrier:
/// `at + ut^n + bt^n` goes to `inner(a) t + outer(b) t^n` with `b` in the
/// derived subalgebra and `u` in the chosen complement (sent to zero).
pub fn phi(alg: &GradedAlgebra, inner: &HomMap, outer: &HomMap) -> HomMap {
    let d = alg.dim();
    let field = alg.field();
    let derived = alg.derived_subalgebra();
    let mut mat = Matrix::zero(2 * d, 2 * d, field);
    for c in 0..d {
        for r in 0..d {
            let v = inner.mat.at(r, c).clone();
            *mat.at_mut(r, c) = v;
        }
    }
    // t^n part: e_j = u_j + b_j; with the pivot-extension complement,
    // b_j is the derived basis row with pivot j (or zero for non-pivots)
    for (row_idx, &p) in derived.pivots().iter().enumerate() {
        let b_j = derived.basis().row_vec(row_idx);
        let image = outer.apply(&b_j);
        for (r, v) in image.into_iter().enumerate() {
            *mat.at_mut(d + r, d + p) = v;
        }
    }
    HomMap::new(inner.theta.clone(), mat)
}

/// The span of the embedded quasiderivation pairs, degree-wise, as
/// subspaces of End of the carrier.
pub fn phi_image(alg: &GradedAlgebra, exec: Exec) -> Result<EndFamily, Error> {
    let qder = operator_family_with(alg, OperatorClass::Quasiderivation, exec);
    let d2 = 2 * alg.dim();
    let mut fam = EndFamily::new(d2, alg.field());
    for space in &qder.spaces {
        let mut b = RrefBuilder::new(d2 * d2, alg.field());
        for r in 0..space.dim() {
            let maps = space.tuple_at(r);
            b.insert(phi(alg, &maps[0], &maps[1]).flatten());
        }
        fam.insert(space.theta.clone(), Subspace::from_builder(b));
    }
    Ok(fam)
}

#[derive(Clone, Debug)]
pub struct DegreeDecomposition {
    pub theta: GroupElement,
    pub der_dim: usize,
    pub phi_dim: usize,
    pub zder_dim: usize,
    pub direct_sum: bool,
}

/// Outcome of the derivation decomposition of the double.
#[derive(Clone, Debug)]
pub struct DecompositionReport {
    /// Reason the check was skipped (nonzero center), if it was.
    pub skipped: Option<String>,
    pub per_degree: Vec<DegreeDecomposition>,
    /// Der of the carrier equals the embedded quasiderivations plus the
    /// carrier's central derivations, as a direct sum, in every degree.
    pub holds: bool,
    /// The carrier's center equals the t^n slice.
    pub center_is_tn_slice: bool,
}

pub fn decomposition_check(alg: &GradedAlgebra, exec: Exec) -> Result<DecompositionReport, Error> {
    let center = alg.center();
    if !center.is_zero() {
        return Ok(DecompositionReport {
            skipped: Some(format!(
                "center has dimension {}, decomposition needs a zero center",
                center.dim()
            )),
            per_degree: Vec::new(),
            holds: false,
            center_is_tn_slice: false,
        });
    }
    let ext = extend(alg);
    let carrier = &ext.carrier;
    let d = alg.dim();

    let der = operator_family_with(carrier, OperatorClass::Derivation, exec).project(0)?;
    let zder = operator_family_with(carrier, OperatorClass::CentralDerivation, exec).project(0)?;
    let phi_fam = phi_image(alg, exec)?;

    let mut per_degree = Vec::new();
    let mut holds = true;
    for theta in carrier.realizable_degrees() {
        let der_b = der.block(&theta);
        let phi_b = phi_fam.block(&theta);
        let zder_b = zder.block(&theta);
        let direct = phi_b.is_direct_sum_with(&zder_b, &der_b)?;
        if !direct {
            holds = false;
        }
        per_degree.push(DegreeDecomposition {
            theta,
            der_dim: der_b.dim(),
            phi_dim: phi_b.dim(),
            zder_dim: zder_b.dim(),
            direct_sum: direct,
        });
    }

    let tn_slice = Subspace::from_rows(
        2 * d,
        alg.field(),
        (0..d).map(|i| {
            let mut v = vec![alg.field().zero(); 2 * d];
            v[d + i] = alg.field().one();
            v
        }),
    );
    let center_is_tn_slice = carrier.center() == tn_slice;

    Ok(DecompositionReport {
        skipped: None,
        per_degree,
        holds,
        center_is_tn_slice,
    })
}

/// Checks that the embedding lands in the derivations of the carrier and is
/// injective: its image has the dimension of the inner projection.
pub fn embedding_checks(alg: &GradedAlgebra, exec: Exec) -> Result<(bool, bool), Error> {
    let ext = extend(alg);
    let der = operator_family_with(&ext.carrier, OperatorClass::Derivation, exec).project(0)?;
    let phi_fam = phi_image(alg, exec)?;
    let contained = der.contains(&phi_fam);
    let qder_inner = operator_family_with(alg, OperatorClass::Quasiderivation, exec).project(0)?;
    let injective = phi_fam.total_dim() == qder_inner.total_dim();
    Ok((contained, injective))
}

/// The embedded map does not depend on the choice of the outer partner:
/// adding any kernel pair (zero inner map) leaves phi unchanged.
pub fn phi_outer_independence(alg: &GradedAlgebra, space: &OperatorSpace) -> bool {
    let d = alg.dim();
    let field = alg.field();
    let kernel_pairs: Vec<_> = (0..space.dim())
        .map(|r| space.tuple_at(r))
        .filter(|maps| maps[0].is_zero())
        .collect();
    for r in 0..space.dim() {
        let maps = space.tuple_at(r);
        let reference = phi(alg, &maps[0], &maps[1]);
        for kp in &kernel_pairs {
            let shifted = HomMap::new(maps[1].theta.clone(), maps[1].mat.add(&kp[1].mat));
            if phi(alg, &maps[0], &shifted) != reference {
                return false;
            }
        }
        // the zero pair embeds to zero
        let zero_inner = HomMap::zero(maps[0].theta.clone(), d, field);
        let zero_outer = HomMap::zero(maps[0].theta.clone(), d, field);
        if !phi(alg, &zero_inner, &zero_outer).is_zero() {
            return false;
        }
    }
    true
}
