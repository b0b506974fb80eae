//! Finite-dimensional algebras over exact rationals.
//!
//! An algebra is a dimension plus one sparse structure-constant tensor per
//! operation symbol: e_a o e_b = sum_c t[a,b,c] e_c. Identity verification
//! enumerates basis tuples exhaustively (polylinearity makes that
//! sufficient), in lexicographic order, so the first counterexample is
//! deterministic.

pub mod fixtures;
mod io;

pub use io::{
    read_algebra, read_operator, write_algebra, write_bar_quotient, write_operator, Meta,
};

use crate::error::Error;
use crate::terms::{Context, Monomial, OpSymbol, Polynomial, Signature};
use crate::Q;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub type Vector = Vec<Q>;

// Sparse coordinate vector: sorted (index, value) pairs without zeros.
type SparseVec = Vec<(usize, Q)>;

fn to_sparse(v: &[Q]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

/// Sparse structure-constant tensor of one binary operation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OpTable {
    // (a, b) -> [(c, coefficient)]; indices 0-based internally.
    entries: BTreeMap<(usize, usize), Vec<(usize, Q)>>,
}

impl OpTable {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn set(&mut self, a: usize, b: usize, c: usize, value: Q) {
        if value.is_zero() {
            return;
        }
        let cell = self.entries.entry((a, b)).or_default();
        match cell.iter_mut().find(|(k, _)| *k == c) {
            Some((_, v)) => {
                *v = &*v + &value;
                if v.is_zero() {
                    cell.retain(|(_, v)| !v.is_zero());
                    if cell.is_empty() {
                        self.entries.remove(&(a, b));
                    }
                }
            }
            None => {
                cell.push((c, value));
                cell.sort_by_key(|(k, _)| *k);
            }
        }
    }

    /// Iterates (a, b, c, coefficient) with 0-based indices.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize, &Q)> {
        self.entries
            .iter()
            .flat_map(|(&(a, b), cell)| cell.iter().map(move |(c, v)| (a, b, *c, v)))
    }
}

/// A finite-dimensional algebra given by exact rational structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDAlgebra {
    dim: usize,
    sig: Signature,
    ops: BTreeMap<OpSymbol, OpTable>,
}

impl FDAlgebra {
    /// A zero algebra of the given dimension; every operation symbol of the
    /// signature gets an (empty) tensor.
    pub fn new(dim: usize, sig: Signature) -> FDAlgebra {
        let ops = sig.ops().into_iter().map(|op| (op, OpTable::default())).collect();
        FDAlgebra { dim, sig, ops }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn table(&self, op: OpSymbol) -> Option<&OpTable> {
        self.ops.get(&op)
    }

    /// Sets e_a o e_b += value e_c (1-based basis indices).
    pub fn set(&mut self, op: OpSymbol, a: usize, b: usize, c: usize, value: Q) {
        assert!(self.sig.allows(op), "operation {op} outside signature {}", self.sig);
        assert!(
            (1..=self.dim).contains(&a) && (1..=self.dim).contains(&b) && (1..=self.dim).contains(&c),
            "basis index out of range"
        );
        self.ops.get_mut(&op).unwrap().set(a - 1, b - 1, c - 1, value);
    }

    /// Copies the algebra into another context; the new context must allow
    /// every operation that has entries. Newly available operations get
    /// empty tables.
    pub fn recontext(&self, context: Context) -> Result<FDAlgebra, Error> {
        let sig = Signature::new(self.sig.nops, context);
        let mut out = FDAlgebra::new(self.dim, sig);
        for (op, table) in &self.ops {
            if table.is_empty() {
                continue;
            }
            if !sig.allows(*op) {
                return Err(Error::invalid(format!(
                    "operation {op} does not exist in context {context}"
                )));
            }
            for (a, b, c, v) in table.iter() {
                out.set(*op, a + 1, b + 1, c + 1, v.clone());
            }
        }
        Ok(out)
    }

    pub fn basis_vector(&self, k: usize) -> Vector {
        assert!((1..=self.dim).contains(&k));
        let mut v = vec![Q::zero(); self.dim];
        v[k - 1] = Q::one();
        v
    }

    pub fn zero_vector(&self) -> Vector {
        vec![Q::zero(); self.dim]
    }

    /// Bilinear product of two coordinate vectors through one operation.
    pub fn product(&self, op: OpSymbol, x: &[Q], y: &[Q]) -> Result<Vector, Error> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::invalid(format!(
                "vector length does not match dimension {}",
                self.dim
            )));
        }
        let table = self.ops.get(&op).ok_or_else(|| {
            Error::invalid(format!("operation {op} undefined in signature {}", self.sig))
        })?;
        let mut out = vec![Q::zero(); self.dim];
        for (&(a, b), cell) in &table.entries {
            if x[a].is_zero() || y[b].is_zero() {
                continue;
            }
            let factor = &x[a] * &y[b];
            for (c, v) in cell {
                out[*c] = &out[*c] + &(&factor * v);
            }
        }
        Ok(out)
    }

    fn sparse_product(&self, op: OpSymbol, x: &SparseVec, y: &SparseVec) -> Result<SparseVec, Error> {
        let table = self.ops.get(&op).ok_or_else(|| {
            Error::invalid(format!("operation {op} undefined in signature {}", self.sig))
        })?;
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (a, xa) in x {
            for (b, yb) in y {
                if let Some(cell) = table.entries.get(&(*a, *b)) {
                    let factor = xa * yb;
                    for (c, v) in cell {
                        let e = acc.entry(*c).or_insert_with(Q::zero);
                        *e = &*e + &(&factor * v);
                    }
                }
            }
        }
        Ok(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect())
    }

    fn eval_monomial(&self, m: &Monomial, args: &[SparseVec]) -> Result<SparseVec, Error> {
        match m {
            Monomial::Leaf(v) => args
                .get(v - 1)
                .cloned()
                .ok_or_else(|| Error::invalid(format!("no assignment for variable x{v}"))),
            Monomial::Node(op, l, r) => {
                let lv = self.eval_monomial(l, args)?;
                let rv = self.eval_monomial(r, args)?;
                self.sparse_product(*op, &lv, &rv)
            }
        }
    }

    /// Multilinear evaluation of a polynomial at an assignment of vectors.
    pub fn evaluate(&self, p: &Polynomial, args: &[Vector]) -> Result<Vector, Error> {
        if p.signature().context != self.sig.context || p.signature().nops > self.sig.nops {
            return Err(Error::invalid(format!(
                "polynomial signature {} does not fit algebra signature {}",
                p.signature(),
                self.sig
            )));
        }
        for a in args {
            if a.len() != self.dim {
                return Err(Error::invalid("assignment vector of wrong dimension"));
            }
        }
        let sparse_args: Vec<SparseVec> = args.iter().map(|v| to_sparse(v)).collect();
        let mut out = vec![Q::zero(); self.dim];
        for (m, c) in p.iter() {
            for (k, x) in self.eval_monomial(m, &sparse_args)? {
                out[k] = &out[k] + &(c * &x);
            }
        }
        Ok(out)
    }

    /// Checks labeled polylinear identities on all basis tuples, recording
    /// the first counterexample of each failing identity.
    pub fn check_identities(&self, identities: &[(String, Polynomial)]) -> Result<VerificationReport, Error> {
        let mut report = VerificationReport::default();
        for (label, poly) in identities {
            if poly.is_zero() {
                continue;
            }
            let n = poly.polylinear_degree().map_err(|e| {
                Error::invalid(format!("identity `{label}`: {e}"))
            })?;
            report.checked += 1;
            if self.dim == 0 {
                continue;
            }
            let mut tuple = vec![1usize; n];
            'tuples: loop {
                let args: Vec<SparseVec> =
                    tuple.iter().map(|&k| vec![(k - 1, Q::one())]).collect();
                let mut value = vec![Q::zero(); self.dim];
                for (m, c) in poly.iter() {
                    for (k, x) in self.eval_monomial(m, &args)? {
                        value[k] = &value[k] + &(c * &x);
                    }
                }
                if !value.iter().all(Q::is_zero) {
                    report.counterexamples.push(Counterexample {
                        identity: label.clone(),
                        tuple: tuple.clone(),
                        residual: value,
                    });
                    break 'tuples;
                }
                // Next tuple in lexicographic order.
                let mut i = n;
                loop {
                    if i == 0 {
                        break 'tuples;
                    }
                    i -= 1;
                    if tuple[i] < self.dim {
                        tuple[i] += 1;
                        for t in tuple.iter_mut().skip(i + 1) {
                            *t = 1;
                        }
                        break;
                    }
                }
            }
        }
        Ok(report)
    }

    /// Checks the Rota-Baxter relation of the given weight for all basis
    /// pairs and all operations.
    pub fn check_rota_baxter(&self, r: &LinearOperator, weight: &Q) -> Result<VerificationReport, Error> {
        if r.dim() != self.dim {
            return Err(Error::invalid(format!(
                "operator dimension {} does not match algebra dimension {}",
                r.dim(),
                self.dim
            )));
        }
        let mut report = VerificationReport::default();
        for op in self.sig.ops() {
            report.checked += 1;
            'pairs: for a in 1..=self.dim {
                for b in 1..=self.dim {
                    let ea = self.basis_vector(a);
                    let eb = self.basis_vector(b);
                    let ra = r.apply(&ea);
                    let rb = r.apply(&eb);
                    let lhs = self.product(op, &ra, &rb)?;
                    let mut inner = self.product(op, &ea, &rb)?;
                    let t2 = self.product(op, &ra, &eb)?;
                    let t3 = self.product(op, &ea, &eb)?;
                    for i in 0..self.dim {
                        inner[i] = &inner[i] + &t2[i] + &(weight * &t3[i]);
                    }
                    let rhs = r.apply(&inner);
                    let residual: Vector = lhs
                        .iter()
                        .zip(&rhs)
                        .map(|(l, r)| l - r)
                        .collect();
                    if !residual.iter().all(Q::is_zero) {
                        report.counterexamples.push(Counterexample {
                            identity: format!("rota-baxter {op} weight {weight}"),
                            tuple: vec![a, b],
                            residual,
                        });
                        break 'pairs;
                    }
                }
            }
        }
        Ok(report)
    }
}

/// A square rational matrix acting on coordinates, column convention:
/// R(e_j) = sum_i M[i][j] e_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOperator {
    matrix: Vec<Vec<Q>>,
}

impl LinearOperator {
    pub fn zero(dim: usize) -> LinearOperator {
        LinearOperator {
            matrix: vec![vec![Q::zero(); dim]; dim],
        }
    }

    pub fn from_matrix(matrix: Vec<Vec<Q>>) -> Result<LinearOperator, Error> {
        let dim = matrix.len();
        for row in &matrix {
            if row.len() != dim {
                return Err(Error::invalid("operator matrix must be square"));
            }
        }
        Ok(LinearOperator { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Q>] {
        &self.matrix
    }

    /// Sets M[i][j] (1-based), i.e. the e_i coefficient of R(e_j).
    pub fn set(&mut self, i: usize, j: usize, value: Q) {
        self.matrix[i - 1][j - 1] = value;
    }

    pub fn apply(&self, v: &[Q]) -> Vector {
        let dim = self.dim();
        assert_eq!(v.len(), dim);
        let mut out = vec![Q::zero(); dim];
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, m) in row.iter().enumerate() {
                if !m.is_zero() && !v[j].is_zero() {
                    out[i] = &out[i] + &(m * &v[j]);
                }
            }
        }
        out
    }

    pub fn compose(&self, other: &LinearOperator) -> LinearOperator {
        let dim = self.dim();
        let mut out = LinearOperator::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = Q::zero();
                for k in 0..dim {
                    acc = &acc + &(&self.matrix[i][k] * &other.matrix[k][j]);
                }
                out.matrix[i][j] = acc;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Q::is_zero)
    }
}

/// One failed check: the identity label, the basis tuple (1-based), and the
/// full residual vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub identity: String,
    pub tuple: Vec<usize>,
    pub residual: Vector,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tuple: Vec<String> = self.tuple.iter().map(|k| format!("e{k}")).collect();
        let residual: Vec<String> = self.residual.iter().map(|x| x.to_string()).collect();
        write!(
            f,
            "identity `{}` fails at ({}) with residual [{}]",
            self.identity,
            tuple.join(", "),
            residual.join(", ")
        )
    }
}

/// Outcome of a verification run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS ({} identities checked)", self.checked)
        } else {
            writeln!(
                f,
                "FAIL ({} of {} identities violated)",
                self.counterexamples.len(),
                self.checked
            )?;
            for c in &self.counterexamples {
                writeln!(f, "  {c}")?;
            }
            Ok(())
        }
    }
}

/// Derived dendriform operations of a Rota-Baxter operator.
///
/// With nonzero weight the scaled convention divides the pointing operations
/// by the weight and keeps the middle operation equal to the product; the
/// unscaled convention keeps the pointing operations plain and scales the
/// middle operation by the weight. Weight zero yields the two-operation
/// splitting.
pub fn derived_dendriform(
    a: &FDAlgebra,
    r: &LinearOperator,
    weight: &Q,
    scaled: bool,
) -> Result<FDAlgebra, Error> {
    if a.signature().context != Context::Omega {
        return Err(Error::invalid("derived operations need an unsplit algebra"));
    }
    if weight.is_zero() && scaled {
        return Err(Error::invalid("the scaled convention requires a nonzero weight"));
    }
    let rb = a.check_rota_baxter(r, weight)?;
    if !rb.passed() {
        return Err(Error::invalid(format!(
            "not a Rota-Baxter operator of weight {weight}: {}",
            rb.counterexamples[0]
        )));
    }
    let out_ctx = if weight.is_zero() { Context::Omega2 } else { Context::Omega3 };
    let mut out = FDAlgebra::new(a.dim(), Signature::new(a.sig.nops, out_ctx));
    for i in 1..=a.sig.nops {
        let op = OpSymbol::base(i);
        for b in 1..=a.dim() {
            for c in 1..=a.dim() {
                let eb = a.basis_vector(b);
                let ec = a.basis_vector(c);
                let right = a.product(op, &r.apply(&eb), &ec)?;
                let left = a.product(op, &eb, &r.apply(&ec))?;
                let both = a.product(op, &eb, &ec)?;
                let (right, left, middle) = if weight.is_zero() {
                    (right, left, None)
                } else if scaled {
                    let inv = Q::one() / weight;
                    (
                        right.iter().map(|x| x * &inv).collect(),
                        left.iter().map(|x| x * &inv).collect(),
                        Some(both),
                    )
                } else {
                    (
                        right,
                        left,
                        Some(both.iter().map(|x| x * weight).collect::<Vector>()),
                    )
                };
                for (k, v) in right.iter().enumerate() {
                    out.set(OpSymbol::right(i), b, c, k + 1, v.clone());
                }
                for (k, v) in left.iter().enumerate() {
                    out.set(OpSymbol::left(i), b, c, k + 1, v.clone());
                }
                if let Some(middle) = middle {
                    for (k, v) in middle.iter().enumerate() {
                        out.set(OpSymbol::middle(i), b, c, k + 1, v.clone());
                    }
                }
            }
        }
    }
    Ok(out)
}

fn require_associative(a: &FDAlgebra) -> Result<(), Error> {
    if a.signature() != Signature::omega(1) {
        return Err(Error::invalid(
            "expected an algebra with a single unsplit operation",
        ));
    }
    let sig = Signature::omega(1);
    let assoc = crate::terms::parse_polynomial(
        "(x1 *1 (x2 *1 x3)) - ((x1 *1 x2) *1 x3)",
        &sig,
    )
    .unwrap();
    let report = a.check_identities(&[("assoc".to_string(), assoc)])?;
    if !report.passed() {
        return Err(Error::invalid(format!(
            "input algebra is not associative: {}",
            report.counterexamples[0]
        )));
    }
    Ok(())
}

/// The three-operation structure on the triple tensor power of an
/// associative algebra: the pointing operations multiply everything up to
/// the pointed tensor slot into it.
pub fn triassociative_tensor_cube(a: &FDAlgebra) -> Result<FDAlgebra, Error> {
    require_associative(a)?;
    let d = a.dim();
    let op = OpSymbol::base(1);
    let flat = |p: usize, qq: usize, r: usize| (p - 1) * d * d + (qq - 1) * d + r;
    let mut out = FDAlgebra::new(d * d * d, Signature::omega3(1));
    let prod4 = |w: &[usize]| -> Result<Vector, Error> {
        let mut acc = a.basis_vector(w[0]);
        for &k in &w[1..] {
            acc = a.product(op, &acc, &a.basis_vector(k))?;
        }
        Ok(acc)
    };
    for p in 1..=d {
        for qq in 1..=d {
            for r in 1..=d {
                for p2 in 1..=d {
                    for q2 in 1..=d {
                        for r2 in 1..=d {
                            let x = flat(p, qq, r);
                            let y = flat(p2, q2, r2);
                            // right: (abc a') tensor b' tensor c'
                            for (s, v) in prod4(&[p, qq, r, p2])?.iter().enumerate() {
                                out.set(OpSymbol::right(1), x, y, flat(s + 1, q2, r2), v.clone());
                            }
                            // left: a tensor b tensor (c a' b' c')
                            for (s, v) in prod4(&[r, p2, q2, r2])?.iter().enumerate() {
                                out.set(OpSymbol::left(1), x, y, flat(p, qq, s + 1), v.clone());
                            }
                            // middle: a tensor (b c a' b') tensor c'
                            for (s, v) in prod4(&[qq, r, p2, q2])?.iter().enumerate() {
                                out.set(OpSymbol::middle(1), x, y, flat(p, s + 1, r2), v.clone());
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Checks that d is a derivation: the Leibniz rule on all basis pairs.
pub fn check_derivation(a: &FDAlgebra, d: &LinearOperator) -> Result<VerificationReport, Error> {
    if d.dim() != a.dim() {
        return Err(Error::invalid("operator dimension mismatch"));
    }
    let mut report = VerificationReport::default();
    for op in a.signature().ops() {
        report.checked += 1;
        'pairs: for i in 1..=a.dim() {
            for j in 1..=a.dim() {
                let ei = a.basis_vector(i);
                let ej = a.basis_vector(j);
                let lhs = d.apply(&a.product(op, &ei, &ej)?);
                let r1 = a.product(op, &d.apply(&ei), &ej)?;
                let r2 = a.product(op, &ei, &d.apply(&ej))?;
                let residual: Vector = lhs
                    .iter()
                    .zip(r1.iter().zip(&r2))
                    .map(|(l, (a, b))| l - a - b)
                    .collect();
                if !residual.iter().all(Q::is_zero) {
                    report.counterexamples.push(Counterexample {
                        identity: format!("leibniz {op}"),
                        tuple: vec![i, j],
                        residual,
                    });
                    break 'pairs;
                }
            }
        }
    }
    Ok(report)
}

/// The skew trialgebra of a square-zero derivation: the pointing operations
/// apply the derivation to the argument they point away from, the middle
/// operation is the original product. Both preconditions are verified.
pub fn stri_from_derivation(a: &FDAlgebra, d: &LinearOperator) -> Result<FDAlgebra, Error> {
    require_associative(a)?;
    let leibniz = check_derivation(a, d)?;
    if !leibniz.passed() {
        return Err(Error::invalid(format!(
            "not a derivation: {}",
            leibniz.counterexamples[0]
        )));
    }
    let dd = d.compose(d);
    if !dd.is_zero() {
        let col = (0..d.dim())
            .find(|&j| dd.matrix()[..].iter().any(|row| !row[j].is_zero()))
            .unwrap();
        return Err(Error::invalid(format!(
            "derivation does not square to zero: d^2(e{}) != 0",
            col + 1
        )));
    }
    let op = OpSymbol::base(1);
    let mut out = FDAlgebra::new(a.dim(), Signature::omega3(1));
    for i in 1..=a.dim() {
        for j in 1..=a.dim() {
            let ei = a.basis_vector(i);
            let ej = a.basis_vector(j);
            for (k, v) in a.product(op, &d.apply(&ei), &ej)?.iter().enumerate() {
                out.set(OpSymbol::right(1), i, j, k + 1, v.clone());
            }
            for (k, v) in a.product(op, &ei, &d.apply(&ej))?.iter().enumerate() {
                out.set(OpSymbol::left(1), i, j, k + 1, v.clone());
            }
            for (k, v) in a.product(op, &ei, &ej)?.iter().enumerate() {
                out.set(OpSymbol::middle(1), i, j, k + 1, v.clone());
            }
        }
    }
    Ok(out)
}

/// All basis tuples of length n over dimension d, lexicographic, 1-based.
pub fn basis_tuples(dim: usize, n: usize) -> Vec<Vec<usize>> {
    if dim == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(dim.pow(n as u32));
    let mut tuple = vec![1usize; n];
    loop {
        out.push(tuple.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if tuple[i] < dim {
                tuple[i] += 1;
                for t in tuple.iter_mut().skip(i + 1) {
                    *t = 1;
                }
                break;
            }
        }
    }
}

/// How the derived bracket of a trialgebra pairs its arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketConvention {
    /// The dialgebra commutator [x,y] = x < y - y > x.
    Commutator,
    /// The literal difference [x,y] = x < y - x > y.
    SameOrder,
}

fn bilinear(
    sig: Signature,
    p: &Polynomial,
    r: &Polynomial,
    term: impl Fn(&Monomial, &Monomial) -> Vec<(Monomial, Q)>,
) -> Polynomial {
    let mut out = Polynomial::zero(sig);
    for (ml, cl) in p.iter() {
        for (mr, cr) in r.iter() {
            for (m, c) in term(ml, mr) {
                out.add_term(m, c * (cl * cr));
            }
        }
    }
    out
}

/// The Leibniz law and the derived Poisson law [x.y, z] = x.[y,z] + [x,z].y
/// of a skew trialgebra, as polylinear identities over the three-operation
/// signature. The bracket is built by the chosen convention; the product is
/// the middle operation.
///
/// Leibniz is taken in its right form [[x,y],z] = [[x,z],y] + [x,[y,z]].
pub fn skew_bracket_identities(convention: BracketConvention) -> Vec<(String, Polynomial)> {
    let sig = Signature::omega3(1);
    let bracket = |p: &Polynomial, r: &Polynomial| -> Polynomial {
        bilinear(sig, p, r, |ml, mr| {
            let second = match convention {
                BracketConvention::Commutator => {
                    Monomial::node(OpSymbol::right(1), mr.clone(), ml.clone())
                }
                BracketConvention::SameOrder => {
                    Monomial::node(OpSymbol::right(1), ml.clone(), mr.clone())
                }
            };
            vec![
                (Monomial::node(OpSymbol::left(1), ml.clone(), mr.clone()), Q::one()),
                (second, -Q::one()),
            ]
        })
    };
    let middle = |p: &Polynomial, r: &Polynomial| -> Polynomial {
        bilinear(sig, p, r, |ml, mr| {
            vec![(
                Monomial::node(OpSymbol::middle(1), ml.clone(), mr.clone()),
                Q::one(),
            )]
        })
    };
    let x1 = Polynomial::monomial(sig, Monomial::leaf(1));
    let x2 = Polynomial::monomial(sig, Monomial::leaf(2));
    let x3 = Polynomial::monomial(sig, Monomial::leaf(3));
    let leibniz = bracket(&bracket(&x1, &x2), &x3)
        .sub(&bracket(&bracket(&x1, &x3), &x2))
        .sub(&bracket(&x1, &bracket(&x2, &x3)));
    let poisson = bracket(&middle(&x1, &x2), &x3)
        .sub(&middle(&x1, &bracket(&x2, &x3)))
        .sub(&middle(&bracket(&x1, &x3), &x2));
    vec![
        ("bracket-leibniz".to_string(), leibniz),
        ("bracket-poisson".to_string(), poisson),
    ]
}

pub fn is_zero_vector(v: &[Q]) -> bool {
    v.iter().all(Q::is_zero)
}

/// e_k coordinate vector (1-based) of the given length.
pub fn unit_vector(dim: usize, k: usize) -> Vector {
    let mut v = vec![Q::zero(); dim];
    v[k - 1] = Q::one();
    v
}
