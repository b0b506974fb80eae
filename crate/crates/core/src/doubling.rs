//! Doubling constructions.
//!
//! `double_dendriform` glues two copies of a split algebra into one unsplit
//! algebra whose block products encode the split operations, together with
//! the canonical Rota-Baxter operator on it. `bar_quotient` is the other
//! direction: an unsplit algebra on (A / A0) + A whose products read off the
//! split operations, defined whenever the zero identities hold.

use crate::error::Error;
use crate::fdalg::{
    basis_tuples, unit_vector, FDAlgebra, LinearOperator, VerificationReport,
};
use crate::linalg::Subspace;
use crate::successor::{generate_dendriform_identities, generate_zero_identities, Mode};
use crate::terms::{Context, OpSymbol, Signature};
use crate::varieties::VarietyPresentation;
use crate::{q, Q};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Two copies of a split algebra glued into an unsplit algebra, with the
/// canonical Rota-Baxter operator of the construction.
#[derive(Clone, Debug)]
pub struct DoubledAlgebra {
    pub algebra: FDAlgebra,
    pub operator: LinearOperator,
    pub weight: Q,
    pub mode: Mode,
    pub base_dim: usize,
}

impl DoubledAlgebra {
    /// Index of the second-copy image of basis vector k (1-based).
    pub fn primed(&self, k: usize) -> usize {
        self.base_dim + k
    }

    /// The embedding a -> a' as a coordinate map into the double.
    pub fn embed(&self, v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); 2 * self.base_dim];
        for (k, x) in v.iter().enumerate() {
            out[self.base_dim + k] = x.clone();
        }
        out
    }

    /// First-block inclusion a -> a.
    pub fn include(&self, v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); 2 * self.base_dim];
        for (k, x) in v.iter().enumerate() {
            out[k] = x.clone();
        }
        out
    }
}

fn family_tables(mode: Mode) -> (&'static [crate::terms::OpFamily], bool) {
    use crate::terms::OpFamily::*;
    match mode {
        // (families summed into the unprimed block, primed-primed block uses middle)
        Mode::Tri => (&[Left, Right, Middle], true),
        Mode::Di => (&[Left, Right], false),
        Mode::STri => (&[Left, Right], true),
    }
}

/// Builds the double of a split algebra.
///
/// Block products, per operation index: unprimed times unprimed lands in the
/// unprimed block as the sum of the mode's families; a o b' = (a > b)',
/// a' o b = (a < b)', a' o b' = (a . b)' (zero without a middle operation).
/// The operator maps a' -> wa, a -> -wa for nonzero weight w, and a' -> a,
/// a -> 0 in the weight-zero modes.
pub fn double_dendriform(a: &FDAlgebra, mode: Mode, weight: &Q) -> Result<DoubledAlgebra, Error> {
    let sig = a.signature();
    let expected = mode.output_context();
    if sig.context != expected {
        return Err(Error::invalid(format!(
            "mode {mode} needs a {} algebra, got {}",
            expected.name(),
            sig.context
        )));
    }
    match mode {
        Mode::Tri => {
            if weight.is_zero() {
                return Err(Error::invalid("the three-operation double needs a nonzero weight"));
            }
        }
        Mode::Di | Mode::STri => {
            if !weight.is_zero() {
                return Err(Error::invalid(format!(
                    "mode {mode} double carries weight zero, got {weight}"
                )));
            }
        }
    }
    let d = a.dim();
    let mut out = FDAlgebra::new(2 * d, Signature::omega(sig.nops));
    let (unprimed_families, primed_middle) = family_tables(mode);
    for i in 1..=sig.nops {
        let base = OpSymbol::base(i);
        for &family in unprimed_families {
            let table = a.table(OpSymbol::new(family, i)).unwrap();
            for (x, y, c, v) in table.iter() {
                out.set(base, x + 1, y + 1, c + 1, v.clone());
            }
        }
        // a o b' = (a > b)'
        for (x, y, c, v) in a.table(OpSymbol::right(i)).unwrap().iter() {
            out.set(base, x + 1, d + y + 1, d + c + 1, v.clone());
        }
        // a' o b = (a < b)'
        for (x, y, c, v) in a.table(OpSymbol::left(i)).unwrap().iter() {
            out.set(base, d + x + 1, y + 1, d + c + 1, v.clone());
        }
        // a' o b' = (a . b)'
        if primed_middle {
            for (x, y, c, v) in a.table(OpSymbol::middle(i)).unwrap().iter() {
                out.set(base, d + x + 1, d + y + 1, d + c + 1, v.clone());
            }
        }
    }
    let mut operator = LinearOperator::zero(2 * d);
    match mode {
        Mode::Tri => {
            for k in 1..=d {
                operator.set(k, k, -weight.clone());
                operator.set(k, d + k, weight.clone());
            }
        }
        Mode::Di | Mode::STri => {
            for k in 1..=d {
                operator.set(k, d + k, Q::one());
            }
        }
    }
    Ok(DoubledAlgebra {
        algebra: out,
        operator,
        weight: weight.clone(),
        mode,
        base_dim: d,
    })
}

/// Checks that a -> a' intertwines the split operations of A with the
/// operator-derived operations of the double, on all basis pairs.
pub fn verify_embedding(dd: &DoubledAlgebra, a: &FDAlgebra) -> Result<VerificationReport, Error> {
    if a.dim() != dd.base_dim {
        return Err(Error::invalid("double was not built from this algebra"));
    }
    let mut report = VerificationReport::default();
    let hat = &dd.algebra;
    let r = &dd.operator;
    let inv_weight = if dd.weight.is_zero() {
        Q::one()
    } else {
        Q::one() / &dd.weight
    };
    let families: &[crate::terms::OpFamily] = match dd.mode {
        Mode::Di => &[crate::terms::OpFamily::Left, crate::terms::OpFamily::Right],
        Mode::Tri | Mode::STri => &[
            crate::terms::OpFamily::Left,
            crate::terms::OpFamily::Right,
            crate::terms::OpFamily::Middle,
        ],
    };
    for i in 1..=a.signature().nops {
        let base = OpSymbol::base(i);
        for &family in families {
            let op = OpSymbol::new(family, i);
            report.checked += 1;
            'pairs: for x in 1..=a.dim() {
                for y in 1..=a.dim() {
                    let ix = dd.embed(&a.basis_vector(x));
                    let iy = dd.embed(&a.basis_vector(y));
                    // Image of the split product under the embedding.
                    let split = a.product(op, &a.basis_vector(x), &a.basis_vector(y))?;
                    let lhs = dd.embed(&split);
                    let rhs = match family {
                        crate::terms::OpFamily::Right => {
                            let mut v = hat.product(base, &r.apply(&ix), &iy)?;
                            for t in v.iter_mut() {
                                *t = &*t * &inv_weight;
                            }
                            v
                        }
                        crate::terms::OpFamily::Left => {
                            let mut v = hat.product(base, &ix, &r.apply(&iy))?;
                            for t in v.iter_mut() {
                                *t = &*t * &inv_weight;
                            }
                            v
                        }
                        _ => hat.product(base, &ix, &iy)?,
                    };
                    let residual: Vec<Q> = lhs.iter().zip(&rhs).map(|(l, r)| l - r).collect();
                    if !residual.iter().all(Q::is_zero) {
                        report.counterexamples.push(crate::fdalg::Counterexample {
                            identity: format!("embedding {op}"),
                            tuple: vec![x, y],
                            residual,
                        });
                        break 'pairs;
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Runs both sides of the doubling equivalence independently: the split
/// algebra against the generated dendriform identities, and the double
/// against the variety's own identities. Agreement of the two verdicts is
/// the theorem under test, not an assumption.
pub fn check_double_in_variety(
    a: &FDAlgebra,
    v: &VarietyPresentation,
    mode: Mode,
    weight: &Q,
) -> Result<(VerificationReport, VerificationReport), Error> {
    let dend = generate_dendriform_identities(v, mode)?;
    let left = a.check_identities(&dend.labeled())?;
    let dd = double_dendriform(a, mode, weight)?;
    let vars: Vec<(String, crate::terms::Polynomial)> = v
        .identities
        .iter()
        .map(|i| (i.id.clone(), i.poly.clone()))
        .collect();
    let right = dd.algebra.check_identities(&vars)?;
    Ok((left, right))
}

/// The quotient construction: A0 is spanned by the differences of the split
/// operations, the bar algebra lives on A/A0, and the hat algebra on
/// (A/A0) + A reads the split operations off its block products.
#[derive(Clone, Debug)]
pub struct BarQuotient {
    /// Rows of the projection A -> A/A0 in the echelon quotient basis.
    pub projection: Vec<Vec<Q>>,
    pub bar_dim: usize,
    /// Basis of A0 (echelon rows).
    pub a0: Subspace,
    /// The unsplit algebra on (A/A0) + A; quotient coordinates first.
    pub hat: FDAlgebra,
}

/// Builds the bar quotient of a trialgebra (Tri) or of a skew trialgebra
/// (STri; the middle differences are then not divided out).
pub fn bar_quotient(a: &FDAlgebra, mode: Mode) -> Result<BarQuotient, Error> {
    if mode == Mode::Di {
        return Err(Error::invalid("the bar quotient is a three-operation construction"));
    }
    let sig = a.signature();
    if sig.context != Context::Omega3 {
        return Err(Error::invalid("bar quotient needs a three-operation algebra"));
    }
    // Zero identities are the well-definedness precondition.
    let zero: Vec<(String, crate::terms::Polynomial)> = generate_zero_identities(sig.nops, mode)
        .into_iter()
        .map(|z| (z.label, z.poly))
        .collect();
    let zreport = a.check_identities(&zero)?;
    if !zreport.passed() {
        return Err(Error::invalid(format!(
            "zero identities fail, quotient undefined: {}",
            zreport.counterexamples[0]
        )));
    }
    let d = a.dim();
    // Span of the operation differences over all basis pairs.
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for i in 1..=sig.nops {
        for x in 1..=d {
            for y in 1..=d {
                let ex = a.basis_vector(x);
                let ey = a.basis_vector(y);
                let right = a.product(OpSymbol::right(i), &ex, &ey)?;
                let left = a.product(OpSymbol::left(i), &ex, &ey)?;
                rows.push(right.iter().zip(&left).map(|(r, l)| r - l).collect());
                if mode == Mode::Tri {
                    let middle = a.product(OpSymbol::middle(i), &ex, &ey)?;
                    rows.push(right.iter().zip(&middle).map(|(r, m)| r - m).collect());
                }
            }
        }
    }
    let a0 = Subspace::from_rows(d, rows);
    // Ideal check: products of A0 with basis vectors stay in A0.
    for b in a0.basis() {
        for k in 1..=d {
            let ek = a.basis_vector(k);
            for op in sig.ops() {
                for v in [a.product(op, b, &ek)?, a.product(op, &ek, b)?] {
                    if !a0.contains(&v) {
                        return Err(Error::invalid(format!(
                            "span of operation differences is not an ideal (violated by {op})"
                        )));
                    }
                }
            }
        }
    }
    let free = a0.free_columns();
    let bar_dim = free.len();
    // projection[r] = coordinates of the image of e_(free[r]) basis... rows
    // are quotient coordinates of e_1..e_d: reduce against A0 and read off
    // the free columns.
    let mut projection = vec![vec![Q::zero(); d]; bar_dim];
    for (j, reduced) in (0..d).map(|j| a0.reduce(&unit_vector(d, j + 1))).enumerate() {
        for (r, &f) in free.iter().enumerate() {
            projection[r][j] = reduced[f].clone();
        }
    }
    let project = |v: &[Q]| -> Vec<Q> {
        projection
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    };
    let m = bar_dim + d;
    let mut hat = FDAlgebra::new(m, Signature::omega(sig.nops));
    for i in 1..=sig.nops {
        let base = OpSymbol::base(i);
        for (p, &fp) in free.iter().enumerate() {
            for (r, &fr) in free.iter().enumerate() {
                // bar a o bar b = bar(a > b)
                let prod = a.product(
                    OpSymbol::right(i),
                    &unit_vector(d, fp + 1),
                    &unit_vector(d, fr + 1),
                )?;
                for (c, v) in project(&prod).into_iter().enumerate() {
                    if !v.is_zero() {
                        hat.set(base, p + 1, r + 1, c + 1, v);
                    }
                }
            }
            for y in 1..=d {
                // bar a o x = a > x, lands in the A block.
                let prod = a.product(OpSymbol::right(i), &unit_vector(d, fp + 1), &a.basis_vector(y))?;
                for (c, v) in prod.into_iter().enumerate() {
                    if !v.is_zero() {
                        hat.set(base, p + 1, bar_dim + y, bar_dim + c + 1, v);
                    }
                }
                // x o bar a = x < a
                let prod = a.product(OpSymbol::left(i), &a.basis_vector(y), &unit_vector(d, fp + 1))?;
                for (c, v) in prod.into_iter().enumerate() {
                    if !v.is_zero() {
                        hat.set(base, bar_dim + y, p + 1, bar_dim + c + 1, v);
                    }
                }
            }
        }
        // x o y = x . y inside the A block.
        for x in 1..=d {
            for y in 1..=d {
                let prod = a.product(OpSymbol::middle(i), &a.basis_vector(x), &a.basis_vector(y))?;
                for (c, v) in prod.into_iter().enumerate() {
                    if !v.is_zero() {
                        hat.set(base, bar_dim + x, bar_dim + y, bar_dim + c + 1, v);
                    }
                }
            }
        }
    }
    Ok(BarQuotient {
        projection,
        bar_dim,
        a0,
        hat,
    })
}

/// Seeded sparse random algebra: each structure constant is present with
/// density 3/10 and uniform in {-2,...,2}; a table with no entries at all is
/// redrawn. The seed fully determines the result.
pub fn random_algebra(seed: u64, dim: usize, sig: Signature) -> FDAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut a = FDAlgebra::new(dim, sig);
        let mut nonzero = 0usize;
        for op in sig.ops() {
            for x in 1..=dim {
                for y in 1..=dim {
                    for c in 1..=dim {
                        if rng.gen_range(0..10) < 3 {
                            let v = rng.gen_range(-2i64..=2);
                            if v != 0 {
                                a.set(op, x, y, c, q(v));
                                nonzero += 1;
                            }
                        }
                    }
                }
            }
        }
        if nonzero > 0 || dim == 0 {
            return a;
        }
    }
}

/// Lexicographic basis tuples of the first (unprimed) block of a double.
pub fn first_block_tuples(dd: &DoubledAlgebra, n: usize) -> Vec<Vec<usize>> {
    basis_tuples(dd.base_dim, n)
}
