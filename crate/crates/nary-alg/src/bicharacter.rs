//! Bicharacters supplying the color signs.
//!
//! A bicharacter is given by its values on group generators and extended to
//! the whole group by biadditivity. Values must be nonzero, skew in the
//! sense eps(g,h) eps(h,g) = 1, and consistent with the finite factor
//! orders so the extension is well defined.

use crate::error::Error;
use crate::group::{AbelianGroup, GroupElement};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bicharacter {
    field: Field,
    /// k x k matrix of generator values, k = number of group factors.
    table: Matrix,
}

impl Bicharacter {
    /// The trivial bicharacter (identically 1).
    pub fn trivial(group: &AbelianGroup, field: Field) -> Bicharacter {
        let k = group.factors();
        let mut table = Matrix::zero(k, k, field);
        for i in 0..k {
            for j in 0..k {
                *table.at_mut(i, j) = field.one();
            }
        }
        Bicharacter { field, table }
    }

    /// The super sign on Z_2: eps(1,1) = -1.
    pub fn super_sign(field: Field) -> Bicharacter {
        let mut table = Matrix::zero(1, 1, field);
        *table.at_mut(0, 0) = field.from_i64(-1);
        Bicharacter { field, table }
    }

    pub fn from_table(table: Matrix) -> Bicharacter {
        assert_eq!(table.rows(), table.cols(), "generator table must be square");
        Bicharacter {
            field: table.field(),
            table,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn table(&self) -> &Matrix {
        &self.table
    }

    /// Checks the bicharacter axioms on generators: all values nonzero,
    /// eps(g,h) eps(h,g) = 1, and eps(g,h)^ord = 1 for finite factors.
    pub fn check_axioms(&self, group: &AbelianGroup) -> Result<(), Error> {
        let k = group.factors();
        if self.table.rows() != k {
            return Err(Error::Invalid(format!(
                "bicharacter table is {}x{} but the group has {} factors",
                self.table.rows(),
                self.table.cols(),
                k
            )));
        }
        for i in 0..k {
            for j in 0..k {
                let v = self.table.at(i, j);
                if v.is_zero() {
                    return Err(Error::BicharacterAxiom(i, j, "value is zero".into()));
                }
                let prod = v * self.table.at(j, i);
                if !prod.is_one() {
                    return Err(Error::BicharacterAxiom(
                        i,
                        j,
                        format!("eps(i,j)*eps(j,i) = {prod} != 1"),
                    ));
                }
                for (idx, &ord) in group.orders().iter().enumerate() {
                    if ord == 0 {
                        continue;
                    }
                    if (idx == i || idx == j) && !v.pow_i64(ord as i64).is_one() {
                        return Err(Error::BicharacterAxiom(
                            i,
                            j,
                            format!("value is not an order-{ord} root of unity"),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// eps(a, b) extended by biadditivity.
    pub fn eval(&self, a: &GroupElement, b: &GroupElement) -> Scalar {
        let mut acc = self.field.one();
        for (i, &x) in a.coords().iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coords().iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let e = x.checked_mul(y).expect("bicharacter exponent overflow");
                acc = &acc * &self.table.at(i, j).pow_i64(e);
            }
        }
        acc
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.table.rows()).all(|i| (0..self.table.cols()).all(|j| self.table.at(i, j).is_one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn super_sign_axioms_and_values() {
        let g = AbelianGroup::z2();
        let eps = Bicharacter::super_sign(Field::Q);
        eps.check_axioms(&g).unwrap();
        let odd = g.element(&[1]).unwrap();
        let even = g.element(&[0]).unwrap();
        assert_eq!(eps.eval(&odd, &odd), Field::Q.from_i64(-1));
        assert_eq!(eps.eval(&odd, &even), Field::Q.from_i64(1));
        assert_eq!(eps.eval(&even, &even), Field::Q.from_i64(1));
    }

    #[test]
    fn skew_axiom_rejected() {
        // eps(1,1) = 2 on Z_2: 2*2 != 1
        let g = AbelianGroup::z2();
        let mut t = Matrix::zero(1, 1, Field::Q);
        *t.at_mut(0, 0) = Field::Q.from_i64(2);
        let eps = Bicharacter::from_table(t);
        assert!(eps.check_axioms(&g).is_err());
    }

    #[test]
    fn biadditivity() {
        let g = AbelianGroup::new(vec![2, 2]);
        let mut t = Matrix::identity(2, Field::Q);
        *t.at_mut(0, 0) = Field::Q.from_i64(-1);
        *t.at_mut(1, 1) = Field::Q.from_i64(-1);
        *t.at_mut(0, 1) = Field::Q.from_i64(1);
        *t.at_mut(1, 0) = Field::Q.from_i64(1);
        let eps = Bicharacter::from_table(t);
        eps.check_axioms(&g).unwrap();
        let a = g.element(&[1, 1]).unwrap();
        let b = g.element(&[1, 0]).unwrap();
        let c = g.element(&[0, 1]).unwrap();
        let bc = g.add(&b, &c);
        assert_eq!(eps.eval(&a, &bc), &eps.eval(&a, &b) * &eps.eval(&a, &c));
    }
}
