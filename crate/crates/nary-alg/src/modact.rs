//! Induced actions of End(L) on the exterior, symmetric, and tensor powers
//! of L, the kernel criterion for inner quasiderivations, irreducibility of
//! the power modules, the classification checks for algebras whose
//! quasiderivations exhaust End, and the tensor-cube submodule examples.

use std::collections::BTreeMap;

use crate::algebra::GradedAlgebra;
use crate::catalog;
use crate::error::Error;
use crate::exec::Exec;
use crate::homs::matrix_unit;
use crate::matrix::{Matrix, RrefBuilder};
use crate::opspace::{operator_family_with, EndFamily, OperatorClass, PairSide};
use crate::scalar::{Field, Scalar};
use crate::subspace::{nullspace, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerKind {
    Exterior,
    Symmetric,
    Tensor,
}

/// The n-th power module of a d-dimensional space, with its canonical basis:
/// strictly increasing tuples (exterior), non-decreasing tuples (symmetric),
/// or all tuples (tensor), in lexicographic order.
#[derive(Clone, Debug)]
pub struct InducedModule {
    pub kind: PowerKind,
    pub base_dim: usize,
    pub arity: usize,
    pub field: Field,
    basis: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl InducedModule {
    pub fn new(kind: PowerKind, base_dim: usize, arity: usize, field: Field) -> InducedModule {
        let mut basis = Vec::new();
        let mut tuple = vec![0usize; arity];
        // lexicographic enumeration with the kind's monotonicity constraint
        fn gen(
            kind: PowerKind,
            d: usize,
            slot: usize,
            tuple: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if slot == tuple.len() {
                out.push(tuple.clone());
                return;
            }
            let lo = if slot == 0 {
                0
            } else {
                match kind {
                    PowerKind::Exterior => tuple[slot - 1] + 1,
                    PowerKind::Symmetric => tuple[slot - 1],
                    PowerKind::Tensor => 0,
                }
            };
            for v in lo..d {
                tuple[slot] = v;
                gen(kind, d, slot + 1, tuple, out);
            }
        }
        if arity == 0 {
            basis.push(Vec::new());
        } else {
            gen(kind, base_dim, 0, &mut tuple, &mut basis);
        }
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        InducedModule {
            kind,
            base_dim,
            arity,
            field,
            basis,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_tuples(&self) -> &[Vec<usize>] {
        &self.basis
    }

    pub fn index_of(&self, tuple: &[usize]) -> Option<usize> {
        self.index.get(tuple).copied()
    }

    /// Expected dimension from the counting formulas.
    pub fn expected_dim(&self) -> usize {
        let d = self.base_dim;
        let n = self.arity;
        match self.kind {
            PowerKind::Exterior => binomial(d, n),
            PowerKind::Symmetric => binomial(d + n - 1, n),
            PowerKind::Tensor => d.pow(n as u32),
        }
    }
}

/// Matrix of the induced action f* on the module: f applied in one slot at a
/// time, summed over slots, with exterior results re-sorted carrying the
/// permutation sign.
pub fn induced_action(f: &Matrix, m: &InducedModule) -> Matrix {
    assert_eq!(f.rows(), m.base_dim, "map does not act on the base space");
    assert_eq!(f.cols(), m.base_dim, "map does not act on the base space");
    let dim = m.dim();
    let mut a = Matrix::zero(dim, dim, m.field);
    for (src, t) in m.basis.iter().enumerate() {
        for s in 0..m.arity {
            for k in 0..m.base_dim {
                let c = f.at(k, t[s]);
                if c.is_zero() {
                    continue;
                }
                let mut u = t.clone();
                u[s] = k;
                let (target, sign) = match m.kind {
                    PowerKind::Tensor => (m.index_of(&u), 1i64),
                    PowerKind::Symmetric => {
                        u.sort_unstable();
                        (m.index_of(&u), 1)
                    }
                    PowerKind::Exterior => {
                        let mut swaps = 0usize;
                        let mut repeated = false;
                        // bubble sort, counting swaps
                        loop {
                            let mut moved = false;
                            for i in 0..u.len().saturating_sub(1) {
                                if u[i] == u[i + 1] {
                                    repeated = true;
                                    break;
                                }
                                if u[i] > u[i + 1] {
                                    u.swap(i, i + 1);
                                    swaps += 1;
                                    moved = true;
                                }
                            }
                            if repeated || !moved {
                                break;
                            }
                        }
                        if repeated {
                            (None, 1)
                        } else {
                            (m.index_of(&u), if swaps % 2 == 0 { 1 } else { -1 })
                        }
                    }
                };
                if let Some(tgt) = target {
                    let add = c * &m.field.from_i64(sign);
                    *a.at_mut(tgt, src) += &add;
                }
            }
        }
    }
    a
}

/// The multiplication of a trivially graded (anti)commutative algebra as a
/// linear map from the matching power module to the algebra.
pub fn mu_map(alg: &GradedAlgebra, kind: PowerKind) -> Result<Matrix, Error> {
    if !alg.is_trivially_graded() {
        return Err(Error::NotTriviallyGraded);
    }
    let ok = match kind {
        PowerKind::Exterior => alg.is_gamma_commutative(-1),
        PowerKind::Symmetric => alg.is_gamma_commutative(1),
        PowerKind::Tensor => false,
    };
    if !ok {
        return Err(Error::NotSymmetricAlgebra);
    }
    let m = InducedModule::new(kind, alg.dim(), alg.arity(), alg.field());
    Ok(alg.product_matrix(m.basis_tuples()))
}

/// All matrix-unit actions on the module, indexed by (from, to).
fn unit_actions(m: &InducedModule) -> Vec<Matrix> {
    let d = m.base_dim;
    let mut out = Vec::with_capacity(d * d);
    for p in 0..d {
        for q in 0..d {
            out.push(induced_action(&matrix_unit(p, q, d, m.field), m));
        }
    }
    out
}

/// Invariance under all matrix-unit actions; the units span End, so this
/// decides submodule membership.
pub fn is_submodule(s: &Subspace, m: &InducedModule) -> bool {
    assert_eq!(s.ambient(), m.dim());
    let actions = unit_actions(m);
    for a in &actions {
        for row in s.basis_rows() {
            if !s.contains_vector(&a.apply(row)) {
                return false;
            }
        }
    }
    true
}

/// Smallest submodule containing `v`, by closure iteration.
pub fn submodule_generated(v: &[Scalar], m: &InducedModule) -> Subspace {
    let actions = unit_actions(m);
    let mut b = RrefBuilder::new(m.dim(), m.field);
    b.insert(v.to_vec());
    loop {
        let before = b.dim();
        let rows: Vec<Vec<Scalar>> = b.rows_ref().to_vec();
        for a in &actions {
            for r in &rows {
                b.insert(a.apply(r));
            }
        }
        if b.dim() == before {
            break;
        }
    }
    Subspace::from_builder(b)
}

/// Every basis vector and a fixed set of mixed-support probes must generate
/// the whole module.
pub fn is_irreducible(m: &InducedModule) -> bool {
    let dim = m.dim();
    if dim == 0 {
        return true;
    }
    let field = m.field;
    let mut probes: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..dim {
        let mut v = vec![field.zero(); dim];
        v[i] = field.one();
        probes.push(v);
    }
    for i in 0..dim.saturating_sub(1) {
        let mut v = vec![field.zero(); dim];
        v[i] = field.one();
        v[i + 1] = field.one();
        probes.push(v.clone());
        if i + 2 < dim {
            v[i + 2] = field.one();
            probes.push(v);
        }
    }
    probes
        .iter()
        .all(|v| submodule_generated(v, m).dim() == dim)
}

fn power_kind_for(alg: &GradedAlgebra) -> Result<PowerKind, Error> {
    if alg.is_gamma_commutative(-1) {
        Ok(PowerKind::Exterior)
    } else if alg.is_gamma_commutative(1) {
        Ok(PowerKind::Symmetric)
    } else {
        Err(Error::NotSymmetricAlgebra)
    }
}

fn require_section4(alg: &GradedAlgebra) -> Result<(), Error> {
    if !alg.is_trivially_graded() {
        return Err(Error::NotTriviallyGraded);
    }
    match alg.field().characteristic() {
        0 => Ok(()),
        p => Err(Error::NeedsCharZero(p)),
    }
}

/// The kernel criterion: the inner quasiderivations exhaust End exactly when
/// the kernel of the multiplication map is a submodule of the power module.
pub fn inner_equals_end_by_kernel(alg: &GradedAlgebra) -> Result<bool, Error> {
    require_section4(alg)?;
    let kind = power_kind_for(alg)?;
    let m = InducedModule::new(kind, alg.dim(), alg.arity(), alg.field());
    let mu = mu_map(alg, kind)?;
    let ker = nullspace(&mu);
    Ok(is_submodule(&ker, &m))
}

/// Verdict for the endomorphism classification checks, with the invariants
/// the statements constrain and the internal consistency of the dichotomies.
#[derive(Clone, Debug)]
pub struct EndQderVerdict {
    pub anticommutative: bool,
    pub commutative: bool,
    pub dim: usize,
    pub derived_dim: usize,
    pub mu_kernel_dim: usize,
    /// Inner (slot-substituted) projection equals End, computed directly.
    pub inner_equals_end: bool,
    /// Outer projection equals End, computed directly.
    pub outer_equals_end: bool,
    /// The kernel criterion agrees with the direct inner computation.
    pub kernel_criterion_agrees: bool,
    pub inner_dim: usize,
    pub outer_dim: usize,
    /// The dimension and derived-subalgebra dichotomies implied by the
    /// classification statements.
    pub dichotomies_hold: bool,
}

pub fn classify_qder_end(alg: &GradedAlgebra, exec: Exec) -> Result<EndQderVerdict, Error> {
    require_section4(alg)?;
    let kind = power_kind_for(alg)?;
    let anticommutative = alg.is_gamma_commutative(-1);
    let commutative = alg.is_gamma_commutative(1);
    let n = alg.arity();
    let d = alg.dim();

    let qder = operator_family_with(alg, OperatorClass::Quasiderivation, exec);
    let inner = qder.project_pair(PairSide::Inner)?;
    let outer = qder.project_pair(PairSide::Outer)?;
    let end = EndFamily::full_end(alg);
    let inner_equals_end = inner == end;
    let outer_equals_end = outer == end;

    let kernel_route = inner_equals_end_by_kernel(alg)?;
    let kernel_criterion_agrees = kernel_route == inner_equals_end;

    let derived_dim = alg.derived_subalgebra().dim();
    let mu = mu_map(alg, kind)?;
    let mu_kernel_dim = nullspace(&mu).dim();

    let mut dichotomies_hold = true;
    if inner_equals_end && derived_dim > 0 {
        if anticommutative && d > n + 1 {
            dichotomies_hold = false;
        }
        if commutative && !anticommutative && d != 1 {
            dichotomies_hold = false;
        }
    }
    if outer_equals_end && !(derived_dim == 0 || derived_dim == d) {
        dichotomies_hold = false;
    }
    if derived_dim == d && outer.total_dim() > inner.total_dim() {
        dichotomies_hold = false;
    }

    Ok(EndQderVerdict {
        anticommutative,
        commutative,
        dim: d,
        derived_dim,
        mu_kernel_dim,
        inner_equals_end,
        outer_equals_end,
        kernel_criterion_agrees,
        inner_dim: inner.total_dim(),
        outer_dim: outer.total_dim(),
        dichotomies_hold,
    })
}

/// Recovers the defining matrix of an (n+1)-dimensional anticommutative
/// algebra: column i is `(-1)^{n+i+1} [e_1, .., ^e_i, .., e_{n+1}]`.
pub fn recover_defining_matrix(alg: &GradedAlgebra) -> Result<Matrix, Error> {
    let n = alg.arity();
    let d = alg.dim();
    if d != n + 1 {
        return Err(Error::Invalid(format!(
            "defining matrix needs dimension {} = arity + 1, found {d}",
            n + 1
        )));
    }
    if !alg.is_gamma_commutative(-1) {
        return Err(Error::NotSymmetricAlgebra);
    }
    let mut b = Matrix::zero(d, d, alg.field());
    for i in 0..d {
        let args: Vec<usize> = (0..d).filter(|&j| j != i).collect();
        let sign = alg.field().from_i64(if (n + i) % 2 == 0 { 1 } else { -1 });
        let v = alg.product_vec(&args);
        for r in 0..d {
            *b.at_mut(r, i) = &sign * &v[r];
        }
    }
    Ok(b)
}

/// For nondegenerate B, every dual-basis matrix unit is an outer
/// quasiderivation. The inner partner is minus the transposed standard
/// unit; on the diagonal the scalar correction id/n is required, since
/// -e_{ii} alone kills every argument of the tuple omitting e_i while the
/// outer unit fixes its nonzero product. Checks the defining equation for
/// all (n+1)^2 unit pairs.
pub fn verify_unit_pair_quasiderivations(n: usize, b: &Matrix) -> Result<bool, Error> {
    let d = n + 1;
    if b.rows() != d || b.cols() != d {
        return Err(Error::ShapeMismatch(b.rows(), b.cols(), d, d));
    }
    let field = b.field();
    if !field.char_coprime_to(n as u64) {
        return Err(Error::NeedsCharZero(field.characteristic()));
    }
    let inv = b.inverse()?;
    let alg = catalog::make_l_b(n, b)?;
    let zero = alg.group().zero();
    let inv_n = field.from_i64(n as i64).inv();
    for i in 0..d {
        for j in 0..d {
            // outer: the unit e^i -> e^j in the dual basis, conjugated back
            let outer_mat = b.mul(&matrix_unit(i, j, d, field)).mul(&inv);
            // inner: -e_{ji}, the standard unit e_j -> e_i, negated
            let mut inner_mat = matrix_unit(j, i, d, field).scale(&field.from_i64(-1));
            if i == j {
                inner_mat = inner_mat.add(&Matrix::identity(d, field).scale(&inv_n));
            }
            let inner = crate::homs::HomMap::new(zero.clone(), inner_mat);
            let outer = crate::homs::HomMap::new(zero.clone(), outer_mat);
            if !crate::opspace::satisfies_class(
                &alg,
                OperatorClass::Quasiderivation,
                &[inner, outer],
            ) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The five spans inside the tensor cube and their submodule facts.
#[derive(Clone, Debug)]
pub struct TensorCubeReport {
    pub dim: usize,
    pub plus_dim: usize,
    pub minus_dim: usize,
    pub counterexample_dim: usize,
    pub sym_dim: usize,
    pub alt_dim: usize,
    pub all_five_are_submodules: bool,
    pub counterexample_differs_from_both: bool,
    pub sym_strictly_inside_plus: bool,
    pub alt_strictly_inside_minus: bool,
}

/// Builds the symmetrized spans inside the tensor cube of a d-dimensional
/// space and verifies the submodule statements about them.
pub fn tensor_cube_report(d: usize, field: Field) -> TensorCubeReport {
    assert!(d >= 2, "the tensor cube spans need dimension at least 2");
    let m = InducedModule::new(PowerKind::Tensor, d, 3, field);
    let dim = m.dim();
    let unit = |i: usize, j: usize, k: usize| -> usize { m.index_of(&[i, j, k]).unwrap() };

    let mut plus = RrefBuilder::new(dim, field);
    let mut minus = RrefBuilder::new(dim, field);
    let mut counter = RrefBuilder::new(dim, field);
    let mut sym = RrefBuilder::new(dim, field);
    let mut alt = RrefBuilder::new(dim, field);
    let one = field.one();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let mut p = vec![field.zero(); dim];
                p[unit(i, j, k)] += &one;
                p[unit(j, i, k)] += &one;
                plus.insert(p);
                let mut mrow = vec![field.zero(); dim];
                mrow[unit(i, j, k)] += &one;
                mrow[unit(j, i, k)] -= &one;
                minus.insert(mrow);
                let mut c = vec![field.zero(); dim];
                c[unit(i, j, k)] += &one;
                c[unit(i, k, j)] += &one;
                counter.insert(c);
                let perms3: [[usize; 3]; 6] = [
                    [i, j, k],
                    [j, k, i],
                    [k, i, j],
                    [j, i, k],
                    [i, k, j],
                    [k, j, i],
                ];
                let mut srow = vec![field.zero(); dim];
                let mut arow = vec![field.zero(); dim];
                for (pi, perm) in perms3.iter().enumerate() {
                    let idx = unit(perm[0], perm[1], perm[2]);
                    srow[idx] += &one;
                    if pi < 3 {
                        arow[idx] += &one;
                    } else {
                        arow[idx] -= &one;
                    }
                }
                sym.insert(srow);
                alt.insert(arow);
            }
        }
    }
    let plus = Subspace::from_builder(plus);
    let minus = Subspace::from_builder(minus);
    let counter = Subspace::from_builder(counter);
    let sym = Subspace::from_builder(sym);
    let alt = Subspace::from_builder(alt);

    let all_five = [&plus, &minus, &counter, &sym, &alt]
        .iter()
        .all(|s| is_submodule(s, &m));

    TensorCubeReport {
        dim,
        plus_dim: plus.dim(),
        minus_dim: minus.dim(),
        counterexample_dim: counter.dim(),
        sym_dim: sym.dim(),
        alt_dim: alt.dim(),
        all_five_are_submodules: all_five,
        counterexample_differs_from_both: counter != plus && counter != minus,
        sym_strictly_inside_plus: plus.contains(&sym) && sym.dim() < plus.dim(),
        alt_strictly_inside_minus: minus.contains(&alt) && alt.dim() < minus.dim(),
    }
}
