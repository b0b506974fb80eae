//! Small concrete algebras and operators used across the tests and the
//! sample data: truncated polynomial algebras with formal integration,
//! componentwise products with coordinate projections, upper triangular
//! matrices with an inner derivation, and the cross product.

use super::{FDAlgebra, LinearOperator};
use crate::terms::{OpSymbol, Signature};
use crate::{q, qr, Q};

/// Q[x]/(x^d) with basis e_k = x^(k-1).
pub fn truncated_polynomial(dim: usize) -> FDAlgebra {
    let mut a = FDAlgebra::new(dim, Signature::omega(1));
    for i in 1..=dim {
        for j in 1..=dim {
            if i + j - 1 <= dim {
                a.set(OpSymbol::base(1), i, j, i + j - 1, q(1));
            }
        }
    }
    a
}

/// The dual numbers Q[e]/(e^2).
pub fn dual_numbers() -> FDAlgebra {
    truncated_polynomial(2)
}

/// Formal integration on Q[x]/(x^d): x^k -> x^(k+1)/(k+1), top degree -> 0.
pub fn integration_operator(dim: usize) -> LinearOperator {
    let mut r = LinearOperator::zero(dim);
    for k in 1..dim {
        r.set(k + 1, k, qr(1, k as i64));
    }
    r
}

/// Differentiation d/dx on Q[x]/(x^d): x^k -> k x^(k-1).
pub fn differentiation_operator(dim: usize) -> LinearOperator {
    let mut d = LinearOperator::zero(dim);
    for k in 2..=dim {
        d.set(k - 1, k, q((k - 1) as i64));
    }
    d
}

/// The Euler operator x d/dx on Q[x]/(x^d): x^k -> k x^k.
pub fn euler_operator(dim: usize) -> LinearOperator {
    let mut d = LinearOperator::zero(dim);
    for k in 1..=dim {
        d.set(k, k, q((k - 1) as i64));
    }
    d
}

/// Q^n with the componentwise product.
pub fn componentwise(dim: usize) -> FDAlgebra {
    let mut a = FDAlgebra::new(dim, Signature::omega(1));
    for i in 1..=dim {
        a.set(OpSymbol::base(1), i, i, i, q(1));
    }
    a
}

/// Projection of Q^n onto the coordinates in `kept` (1-based).
pub fn projection(dim: usize, kept: &[usize]) -> LinearOperator {
    let mut r = LinearOperator::zero(dim);
    for &k in kept {
        r.set(k, k, q(1));
    }
    r
}

/// 2x2 upper triangular matrices, basis e1 = E11, e2 = E12, e3 = E22.
pub fn upper_triangular2() -> FDAlgebra {
    let mut a = FDAlgebra::new(3, Signature::omega(1));
    let o = OpSymbol::base(1);
    // E11 E11 = E11, E11 E12 = E12, E12 E22 = E12, E22 E22 = E22.
    a.set(o, 1, 1, 1, q(1));
    a.set(o, 1, 2, 2, q(1));
    a.set(o, 2, 3, 2, q(1));
    a.set(o, 3, 3, 3, q(1));
    a
}

/// The inner derivation ad(E12) of the upper triangular matrices: a genuine
/// derivation with square zero.
pub fn inner_derivation_e12() -> LinearOperator {
    let mut d = LinearOperator::zero(3);
    // ad(E12): E11 -> -E12, E12 -> 0, E22 -> E12.
    d.set(2, 1, q(-1));
    d.set(2, 3, q(1));
    d
}

/// The operator taking the coefficient of e in the dual numbers:
/// 1 -> 0, e -> 1. Not a derivation in characteristic zero.
pub fn d_depsilon() -> LinearOperator {
    let mut d = LinearOperator::zero(2);
    d.set(1, 2, q(1));
    d
}

/// The cross product on Q^3: the structure constants of so(3).
pub fn so3() -> FDAlgebra {
    let mut a = FDAlgebra::new(3, Signature::omega(1));
    let o = OpSymbol::base(1);
    a.set(o, 1, 2, 3, q(1));
    a.set(o, 2, 1, 3, q(-1));
    a.set(o, 2, 3, 1, q(1));
    a.set(o, 3, 2, 1, q(-1));
    a.set(o, 3, 1, 2, q(1));
    a.set(o, 1, 3, 2, q(-1));
    a
}

/// A two-dimensional algebra with e1 e2 = e1 and all other products zero;
/// not commutative, not associative.
pub fn asymmetric2() -> FDAlgebra {
    let mut a = FDAlgebra::new(2, Signature::omega(1));
    a.set(OpSymbol::base(1), 1, 2, 1, q(1));
    a
}

/// The line with an idempotent product scaled by `c`: e1 e1 = c e1.
pub fn scaled_line(c: Q) -> FDAlgebra {
    let mut a = FDAlgebra::new(1, Signature::omega(1));
    if !num_traits::Zero::is_zero(&c) {
        a.set(OpSymbol::base(1), 1, 1, 1, c);
    }
    a
}
