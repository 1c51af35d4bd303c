//! Multilinear identities and their color evaluation.
//!
//! An identity is a list of terms; each term is a bracket tree over
//! variables 0..m-1 (every variable appearing exactly once) with an integer
//! coefficient and optional explicit bicharacter factors. A term can also be
//! colorized automatically: its color sign is the product of eps values over
//! the adjacent transpositions carrying the reference order 0..m-1 to the
//! term's leaf order, which is well defined because eps is a bicharacter.

use crate::algebra::GradedAlgebra;
use crate::bicharacter::Bicharacter;
use crate::exec::{self, Exec};
use crate::group::GroupElement;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub enum Term {
    Var(usize),
    Bracket(Vec<Term>),
}

impl Term {
    pub fn leaf_order(&self, out: &mut Vec<usize>) {
        match self {
            Term::Var(v) => out.push(*v),
            Term::Bracket(ch) => ch.iter().for_each(|c| c.leaf_order(out)),
        }
    }

    fn check_arity(&self, arity: usize) -> bool {
        match self {
            Term::Var(_) => true,
            Term::Bracket(ch) => ch.len() == arity && ch.iter().all(|c| c.check_arity(arity)),
        }
    }
}

/// An explicit bicharacter coefficient eps(sum of left degrees, sum of right).
#[derive(Clone, Debug)]
pub struct EpsFactor {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct IdentityTerm {
    pub coeff: i64,
    pub eps: Vec<EpsFactor>,
    pub tree: Term,
}

#[derive(Clone, Debug)]
pub struct Identity {
    pub name: String,
    pub vars: usize,
    /// Multiply each term by the color sign of its leaf order.
    pub colorize: bool,
    pub terms: Vec<IdentityTerm>,
}

impl Identity {
    pub fn new(name: &str, vars: usize, colorize: bool, terms: Vec<IdentityTerm>) -> Identity {
        for t in &terms {
            let mut order = Vec::new();
            t.tree.leaf_order(&mut order);
            let mut sorted = order.clone();
            sorted.sort_unstable();
            assert_eq!(
                sorted,
                (0..vars).collect::<Vec<_>>(),
                "each variable must appear exactly once per term"
            );
        }
        Identity {
            name: name.to_string(),
            vars,
            colorize,
            terms,
        }
    }

    /// Bracket arity used by the identity, if any bracket occurs.
    pub fn bracket_arity(&self) -> Option<usize> {
        fn walk(t: &Term) -> Option<usize> {
            match t {
                Term::Var(_) => None,
                Term::Bracket(ch) => Some(ch.len()),
            }
        }
        self.terms.iter().find_map(|t| walk(&t.tree))
    }

    pub fn applies_to(&self, arity: usize) -> bool {
        self.terms.iter().all(|t| t.tree.check_arity(arity))
    }
}

/// The color sign of a permuted word: the product of eps(x_a, x_b) over the
/// adjacent swaps of a bubble sort carrying the reference order 0..m-1 into
/// `order`. `degrees[v]` is the degree assigned to variable v.
pub fn colorized_sign(order: &[usize], degrees: &[GroupElement], eps: &Bicharacter) -> Scalar {
    let m = order.len();
    let field = eps.field();
    let mut current: Vec<usize> = (0..m).collect();
    let mut factor = field.one();
    for pos in 0..m {
        let want = order[pos];
        let at = current[pos..]
            .iter()
            .position(|&v| v == want)
            .expect("order must be a permutation")
            + pos;
        // bubble `want` left to `pos`; each swap moves it past current[i-1]
        for i in (pos + 1..=at).rev() {
            let a = current[i - 1];
            let b = current[i];
            factor = &factor * &eps.eval(&degrees[a], &degrees[b]);
            current.swap(i - 1, i);
        }
    }
    factor
}

/// Evaluates a bracket tree on a basis assignment; returns the coefficient
/// vector of the value.
fn eval_term(alg: &GradedAlgebra, term: &Term, assign: &[usize]) -> Vec<Scalar> {
    let field = alg.field();
    let d = alg.dim();
    match term {
        Term::Var(v) => {
            let mut e = vec![field.zero(); d];
            e[assign[*v]] = field.one();
            e
        }
        Term::Bracket(children) => {
            let vals: Vec<Vec<Scalar>> =
                children.iter().map(|c| eval_term(alg, c, assign)).collect();
            let mut out = vec![field.zero(); d];
            // expand multilinearly over the nonzero supports
            let supports: Vec<Vec<usize>> = vals
                .iter()
                .map(|v| (0..d).filter(|&i| !v[i].is_zero()).collect::<Vec<usize>>())
                .collect();
            if supports.iter().any(|s| s.is_empty()) {
                return out;
            }
            let mut idx = vec![0usize; children.len()];
            loop {
                let tuple: Vec<usize> = idx
                    .iter()
                    .enumerate()
                    .map(|(k, &i)| supports[k][i])
                    .collect();
                if let Some(prod) = alg.product(&tuple) {
                    let mut coeff = field.one();
                    for (k, &i) in idx.iter().enumerate() {
                        coeff = &coeff * &vals[k][supports[k][i]];
                    }
                    for (o, p) in out.iter_mut().zip(prod) {
                        if !p.is_zero() {
                            let add = &coeff * p;
                            *o += &add;
                        }
                    }
                }
                // advance mixed-radix counter
                let mut k = children.len();
                loop {
                    if k == 0 {
                        return out;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < supports[k].len() {
                        break;
                    }
                    idx[k] = 0;
                }
            }
        }
    }
}

/// Evaluates `id` on one basis assignment; returns the value vector.
fn eval_identity_at(alg: &GradedAlgebra, id: &Identity, assign: &[usize]) -> Vec<Scalar> {
    let field = alg.field();
    let d = alg.dim();
    let degrees: Vec<GroupElement> = assign.iter().map(|&i| alg.degree(i).clone()).collect();
    let mut total = vec![field.zero(); d];
    for term in &id.terms {
        let mut coeff = field.from_i64(term.coeff);
        if coeff.is_zero() {
            continue;
        }
        for f in &term.eps {
            let l = alg.group().sum(f.left.iter().map(|&v| degrees[v].clone()));
            let r = alg.group().sum(f.right.iter().map(|&v| degrees[v].clone()));
            coeff = &coeff * &alg.eps().eval(&l, &r);
        }
        if id.colorize {
            let mut order = Vec::new();
            term.tree.leaf_order(&mut order);
            coeff = &coeff * &colorized_sign(&order, &degrees, alg.eps());
        }
        let val = eval_term(alg, &term.tree, assign);
        for (t, v) in total.iter_mut().zip(&val) {
            if !v.is_zero() {
                let add = &coeff * v;
                *t += &add;
            }
        }
    }
    total
}

/// True when the colorized identity vanishes on every basis assignment.
pub fn check_identity(alg: &GradedAlgebra, id: &Identity) -> bool {
    check_identity_with(alg, id, Exec::default())
}

pub fn check_identity_with(alg: &GradedAlgebra, id: &Identity, exec: Exec) -> bool {
    first_violation_with(alg, id, exec).is_none()
}

/// The lexicographically first basis assignment on which `id` fails.
pub fn first_violation_with(alg: &GradedAlgebra, id: &Identity, exec: Exec) -> Option<Vec<usize>> {
    let d = alg.dim();
    let m = id.vars;
    if d == 0 {
        return None;
    }
    let count = d.checked_pow(m as u32).expect("assignment space overflow");
    exec::find_first(exec, count, |mut idx| {
        let mut assign = vec![0usize; m];
        for slot in (0..m).rev() {
            assign[slot] = idx % d;
            idx /= d;
        }
        let v = eval_identity_at(alg, id, &assign);
        if v.iter().all(Scalar::is_zero) {
            None
        } else {
            Some(assign)
        }
    })
}

fn word(vars: &[usize]) -> Term {
    Term::Bracket(vars.iter().map(|&v| Term::Var(v)).collect())
}

/// gamma-commutativity at adjacent position `i` (0-based), n-ary.
pub fn swap_identity(arity: usize, gamma: i64, i: usize) -> Identity {
    let base: Vec<usize> = (0..arity).collect();
    let mut swapped = base.clone();
    swapped.swap(i, i + 1);
    Identity::new(
        &format!("swap{}", i),
        arity,
        true,
        vec![
            IdentityTerm {
                coeff: 1,
                eps: Vec::new(),
                tree: word(&base),
            },
            IdentityTerm {
                coeff: -gamma,
                eps: Vec::new(),
                tree: word(&swapped),
            },
        ],
    )
}

/// The n-ary fundamental identity: the bracket acts by derivations,
/// `[[x_1..x_n], y_2..y_n] = sum_i [x_1, .., [x_i, y_2..y_n], .., x_n]`.
pub fn filippov_identity(arity: usize) -> Identity {
    let n = arity;
    let m = 2 * n - 1;
    // variables 0..n-1 are x_1..x_n, variables n..2n-2 are y_2..y_n
    let ys: Vec<usize> = (n..m).collect();
    let mut terms = Vec::new();
    let mut outer: Vec<Term> = vec![word(&(0..n).collect::<Vec<_>>())];
    outer.extend(ys.iter().map(|&y| Term::Var(y)));
    terms.push(IdentityTerm {
        coeff: 1,
        eps: Vec::new(),
        tree: Term::Bracket(outer),
    });
    for i in 0..n {
        let mut inner_args: Vec<usize> = vec![i];
        inner_args.extend(&ys);
        let children: Vec<Term> = (0..n)
            .map(|k| {
                if k == i {
                    word(&inner_args)
                } else {
                    Term::Var(k)
                }
            })
            .collect();
        terms.push(IdentityTerm {
            coeff: -1,
            eps: Vec::new(),
            tree: Term::Bracket(children),
        });
    }
    Identity::new("filippov", m, true, terms)
}

/// Binary associativity `(xy)z = x(yz)`.
pub fn associativity_identity() -> Identity {
    Identity::new(
        "associativity",
        3,
        true,
        vec![
            IdentityTerm {
                coeff: 1,
                eps: Vec::new(),
                tree: Term::Bracket(vec![
                    Term::Bracket(vec![Term::Var(0), Term::Var(1)]),
                    Term::Var(2),
                ]),
            },
            IdentityTerm {
                coeff: -1,
                eps: Vec::new(),
                tree: Term::Bracket(vec![
                    Term::Var(0),
                    Term::Bracket(vec![Term::Var(1), Term::Var(2)]),
                ]),
            },
        ],
    )
}

/// The two color Jordan laws for a binary algebra: color commutativity
/// `x y = eps(x,y) y x` and the linearized four-variable law with its
/// explicit bicharacter coefficients.
pub fn color_jordan_identities() -> Vec<Identity> {
    let commutativity = swap_identity(2, 1, 0);
    // variables: x=0, y=1, z=2, w=3
    let pair = |a: usize, b: usize| Term::Bracket(vec![Term::Var(a), Term::Var(b)]);
    let left = |a: usize, b: usize, w: usize, z: usize| {
        // ((a b) w) z
        Term::Bracket(vec![
            Term::Bracket(vec![pair(a, b), Term::Var(w)]),
            Term::Var(z),
        ])
    };
    let right = |a: usize, b: usize, w: usize, z: usize| {
        // (a b)(w z)
        Term::Bracket(vec![pair(a, b), pair(w, z)])
    };
    let mut terms = Vec::new();
    // eps(z, x+w)(((x y) w) z - (x y)(w z))
    for (sign, tree) in [(1, left(0, 1, 3, 2)), (-1, right(0, 1, 3, 2))] {
        terms.push(IdentityTerm {
            coeff: sign,
            eps: vec![EpsFactor {
                left: vec![2],
                right: vec![0, 3],
            }],
            tree,
        });
    }
    // eps(x, y+w)(((y z) w) x - (y z)(w x))
    for (sign, tree) in [(1, left(1, 2, 3, 0)), (-1, right(1, 2, 3, 0))] {
        terms.push(IdentityTerm {
            coeff: sign,
            eps: vec![EpsFactor {
                left: vec![0],
                right: vec![1, 3],
            }],
            tree,
        });
    }
    // eps(y, z+w)(((z x) w) y - (z x)(w y))
    for (sign, tree) in [(1, left(2, 0, 3, 1)), (-1, right(2, 0, 3, 1))] {
        terms.push(IdentityTerm {
            coeff: sign,
            eps: vec![EpsFactor {
                left: vec![1],
                right: vec![2, 3],
            }],
            tree,
        });
    }
    vec![commutativity, Identity::new("jordan4", 4, false, terms)]
}

/// The built-in laws used for identity-preservation checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law {
    Anticommutative,
    Commutative,
    Filippov,
    Associative,
    Jordan,
}

impl Law {
    pub const ALL: [Law; 5] = [
        Law::Anticommutative,
        Law::Commutative,
        Law::Filippov,
        Law::Associative,
        Law::Jordan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Anticommutative => "anticommutative",
            Law::Commutative => "commutative",
            Law::Filippov => "filippov",
            Law::Associative => "associative",
            Law::Jordan => "jordan",
        }
    }

    /// Whether `alg` satisfies the law; `None` when the arity does not fit.
    pub fn holds(self, alg: &GradedAlgebra) -> Option<bool> {
        self.holds_with(alg, Exec::default())
    }

    pub fn holds_with(self, alg: &GradedAlgebra, exec: Exec) -> Option<bool> {
        let n = alg.arity();
        match self {
            Law::Anticommutative => Some(alg.is_gamma_commutative(-1)),
            Law::Commutative => Some(alg.is_gamma_commutative(1)),
            Law::Filippov => {
                if n < 2 {
                    return None;
                }
                Some(check_identity_with(alg, &filippov_identity(n), exec))
            }
            Law::Associative => {
                if n != 2 {
                    return None;
                }
                Some(check_identity_with(alg, &associativity_identity(), exec))
            }
            Law::Jordan => {
                if n != 2 {
                    return None;
                }
                Some(
                    color_jordan_identities()
                        .iter()
                        .all(|id| check_identity_with(alg, id, exec)),
                )
            }
        }
    }
}
