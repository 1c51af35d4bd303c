//! The JSON document schema for algebras.
//!
//! ```json
//! {
//!   "name": "D4",
//!   "field": {"kind": "Q"},
//!   "dim": 4,
//!   "arity": 3,
//!   "group": [],
//!   "degrees": [[], [], [], []],
//!   "bicharacter": [],
//!   "products": [{"args": [0, 1, 2], "out": {"3": "1"}}],
//!   "closure": "antisymmetrize"
//! }
//! ```
//!
//! `group` lists the cyclic factor orders (0 = infinite); `degrees` gives one
//! integer tuple per basis index; `bicharacter` is the generator value matrix
//! with entries written as rationals `"p/q"`; `products` map argument index
//! tuples to sparse output vectors. The canonical serialization emits every
//! field, sorts products by their argument tuples, and keeps output keys in
//! numeric order, so re-serializing a parsed canonical document is
//! byte-identical.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Closure, GradedAlgebra};
use crate::bicharacter::Bicharacter;
use crate::error::Error;
use crate::group::AbelianGroup;
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ProductEntry {
    pub args: Vec<usize>,
    pub out: BTreeMap<usize, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AlgebraDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default = "default_field")]
    pub field: Field,
    pub dim: usize,
    pub arity: usize,
    #[serde(default)]
    pub group: Vec<u64>,
    #[serde(default)]
    pub degrees: Vec<Vec<i64>>,
    #[serde(default)]
    pub bicharacter: Vec<Vec<String>>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
    #[serde(default = "default_closure")]
    pub closure: Closure,
}

fn default_field() -> Field {
    Field::Q
}

fn default_closure() -> Closure {
    Closure::None
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<AlgebraDocument, Error> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("document parse: {e}")))
    }

    /// Builds and validates the algebra the document describes.
    pub fn to_algebra(&self) -> Result<GradedAlgebra, Error> {
        let field = self.field;
        if let Field::Fp { p } = field {
            Field::prime(p)?;
        }
        let group = AbelianGroup::new(self.group.clone());
        let degrees = if self.degrees.is_empty() {
            vec![group.zero(); self.dim]
        } else {
            self.degrees
                .iter()
                .map(|c| group.element(c))
                .collect::<Result<Vec<_>, _>>()?
        };
        if degrees.len() != self.dim {
            return Err(Error::Invalid(format!(
                "{} degree tuples for dimension {}",
                degrees.len(),
                self.dim
            )));
        }
        let eps = if self.bicharacter.is_empty() {
            Bicharacter::trivial(&group, field)
        } else {
            let k = group.factors();
            if self.bicharacter.len() != k || self.bicharacter.iter().any(|r| r.len() != k) {
                return Err(Error::Invalid(format!("bicharacter table must be {k}x{k}")));
            }
            let mut t = Matrix::zero(k, k, field);
            for (i, row) in self.bicharacter.iter().enumerate() {
                for (j, s) in row.iter().enumerate() {
                    *t.at_mut(i, j) = field.parse(s)?;
                }
            }
            Bicharacter::from_table(t)
        };
        let mut products = Vec::with_capacity(self.products.len());
        for entry in &self.products {
            let mut out = vec![field.zero(); self.dim];
            for (&j, s) in &entry.out {
                if j >= self.dim {
                    return Err(Error::BadProduct {
                        tuple: entry.args.clone(),
                        reason: format!("output index {j} out of range"),
                    });
                }
                out[j] = field.parse(s)?;
            }
            products.push((entry.args.clone(), out));
        }
        let alg = GradedAlgebra::new(
            field,
            self.dim,
            self.arity,
            group,
            degrees,
            eps,
            products,
            self.closure,
        )?;
        alg.validate()?;
        Ok(alg)
    }

    /// Canonical JSON: every field explicit, products sorted by argument
    /// tuple, two-space indentation, trailing newline.
    pub fn canonical_json(&self) -> String {
        let mut doc = self.clone();
        doc.products.sort_by(|a, b| a.args.cmp(&b.args));
        let mut s = serde_json::to_string_pretty(&doc).expect("document serialization");
        s.push('\n');
        s
    }
}

fn scalar_string(s: &Scalar) -> String {
    s.to_string()
}

/// Dumps an algebra to a document with its stored (fully expanded) products.
pub fn document_from_algebra(alg: &GradedAlgebra, name: Option<String>) -> AlgebraDocument {
    let products = alg
        .stored_products()
        .map(|(args, out)| ProductEntry {
            args: args.clone(),
            out: out
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (j, scalar_string(c)))
                .collect(),
        })
        .collect();
    AlgebraDocument {
        name,
        field: alg.field(),
        dim: alg.dim(),
        arity: alg.arity(),
        group: alg.group().orders().to_vec(),
        degrees: alg.degrees().iter().map(|d| d.coords().to_vec()).collect(),
        bicharacter: (0..alg.group().factors())
            .map(|i| {
                (0..alg.group().factors())
                    .map(|j| scalar_string(alg.eps().table().at(i, j)))
                    .collect()
            })
            .collect(),
        products,
        closure: Closure::None,
    }
}

fn catalog_doc(
    name: String,
    field: Field,
    dim: usize,
    arity: usize,
    products: Vec<(Vec<usize>, Vec<(usize, Scalar)>)>,
    closure: Closure,
) -> AlgebraDocument {
    AlgebraDocument {
        name: Some(name),
        field,
        dim,
        arity,
        group: Vec::new(),
        degrees: vec![Vec::new(); dim],
        bicharacter: Vec::new(),
        products: products
            .into_iter()
            .map(|(args, out)| ProductEntry {
                args,
                out: out
                    .into_iter()
                    .map(|(j, c)| (j, scalar_string(&c)))
                    .collect(),
            })
            .collect(),
        closure,
    }
}

/// Generator-form documents for the catalog constructors, matching the
/// defining product rules rather than the expanded tables.
pub mod catalog_documents {
    use super::*;

    pub fn a(n: usize, field: Field) -> AlgebraDocument {
        catalog_doc(
            format!("A{n}"),
            field,
            n,
            n,
            vec![((0..n).collect(), vec![(0, field.one())])],
            Closure::Antisymmetrize,
        )
    }

    pub fn d(n: usize, field: Field) -> AlgebraDocument {
        l_b(
            n,
            &Matrix::identity(n + 1, field),
            Some(format!("D{}", n + 1)),
        )
    }

    pub fn l_b(n: usize, b: &Matrix, name: Option<String>) -> AlgebraDocument {
        let d = n + 1;
        let field = b.field();
        let mut products = Vec::new();
        for i in 0..d {
            let args: Vec<usize> = (0..d).filter(|&j| j != i).collect();
            let sign = field.from_i64(if (n + i) % 2 == 0 { 1 } else { -1 });
            let out: Vec<(usize, Scalar)> = (0..d)
                .map(|r| (r, &sign * b.at(r, i)))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            products.push((args, out));
        }
        catalog_doc(
            name.unwrap_or_else(|| "LB".to_string()),
            field,
            d,
            n,
            products,
            Closure::Antisymmetrize,
        )
    }

    pub fn l_alpha(n: usize, alpha: &Scalar) -> AlgebraDocument {
        let field = alpha.field();
        let out = if alpha.is_zero() {
            Vec::new()
        } else {
            vec![(0, alpha.clone())]
        };
        catalog_doc(
            "Lalpha".to_string(),
            field,
            1,
            n,
            vec![(vec![0; n], out)],
            Closure::Symmetrize,
        )
    }

    pub fn zero(dim: usize, arity: usize, field: Field) -> AlgebraDocument {
        catalog_doc(
            format!("zero{dim}"),
            field,
            dim,
            arity,
            Vec::new(),
            Closure::None,
        )
    }
}
