//! Monomials, polynomials and the identity language.
//!
//! A monomial is a rooted planar binary tree whose leaves carry variable
//! indices and whose internal nodes carry operation symbols. A polynomial is
//! a finite formal sum of monomials with exact rational coefficients, kept in
//! canonical form (sorted by degree, then preorder; no zero coefficients).
//! Identities are polynomials read as `= 0`.

mod parse;

pub use parse::parse_polynomial;

use crate::error::Error;
use crate::Q;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Which part of a split operation a symbol denotes.
///
/// `Base` is an unsplit operation; `Left`, `Right` and `Middle` are the
/// dash-left, dash-right and middle parts living in the split signatures.
/// The declaration order fixes the canonical symbol order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OpFamily {
    Base,
    Left,
    Right,
    Middle,
}

impl OpFamily {
    pub fn glyph(self) -> char {
        match self {
            OpFamily::Base => '*',
            OpFamily::Left => '<',
            OpFamily::Right => '>',
            OpFamily::Middle => '.',
        }
    }

    pub fn from_glyph(c: char) -> Option<OpFamily> {
        match c {
            '*' => Some(OpFamily::Base),
            '<' => Some(OpFamily::Left),
            '>' => Some(OpFamily::Right),
            '.' => Some(OpFamily::Middle),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OpFamily::Base => "base",
            OpFamily::Left => "left",
            OpFamily::Right => "right",
            OpFamily::Middle => "middle",
        }
    }

    pub fn from_name(s: &str) -> Option<OpFamily> {
        match s {
            "base" => Some(OpFamily::Base),
            "left" => Some(OpFamily::Left),
            "right" => Some(OpFamily::Right),
            "middle" => Some(OpFamily::Middle),
            _ => None,
        }
    }
}

/// Operation context of a signature: one unsplit family, or the two- and
/// three-operation splittings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Context {
    Omega,
    Omega2,
    Omega3,
}

impl Context {
    pub fn allows(self, family: OpFamily) -> bool {
        match self {
            Context::Omega => family == OpFamily::Base,
            Context::Omega2 => matches!(family, OpFamily::Left | OpFamily::Right),
            Context::Omega3 => {
                matches!(family, OpFamily::Left | OpFamily::Right | OpFamily::Middle)
            }
        }
    }

    pub fn families(self) -> &'static [OpFamily] {
        match self {
            Context::Omega => &[OpFamily::Base],
            Context::Omega2 => &[OpFamily::Left, OpFamily::Right],
            Context::Omega3 => &[OpFamily::Left, OpFamily::Right, OpFamily::Middle],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Context::Omega => "omega",
            Context::Omega2 => "omega2",
            Context::Omega3 => "omega3",
        }
    }

    pub fn from_name(s: &str) -> Option<Context> {
        match s {
            "omega" => Some(Context::Omega),
            "omega2" => Some(Context::Omega2),
            "omega3" => Some(Context::Omega3),
            _ => None,
        }
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An operation label: a family plus a 1-based index into the operation set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OpSymbol {
    pub family: OpFamily,
    pub index: usize,
}

impl OpSymbol {
    pub fn new(family: OpFamily, index: usize) -> OpSymbol {
        debug_assert!(index >= 1);
        OpSymbol { family, index }
    }

    pub fn base(index: usize) -> OpSymbol {
        OpSymbol::new(OpFamily::Base, index)
    }

    pub fn left(index: usize) -> OpSymbol {
        OpSymbol::new(OpFamily::Left, index)
    }

    pub fn right(index: usize) -> OpSymbol {
        OpSymbol::new(OpFamily::Right, index)
    }

    pub fn middle(index: usize) -> OpSymbol {
        OpSymbol::new(OpFamily::Middle, index)
    }

    pub fn with_family(self, family: OpFamily) -> OpSymbol {
        OpSymbol::new(family, self.index)
    }
}

impl fmt::Display for OpSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.glyph(), self.index)
    }
}

/// Number of operations together with the family context; every polynomial
/// and every structure-constant algebra carries one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub nops: usize,
    pub context: Context,
}

impl Signature {
    pub fn new(nops: usize, context: Context) -> Signature {
        Signature { nops, context }
    }

    pub fn omega(nops: usize) -> Signature {
        Signature::new(nops, Context::Omega)
    }

    pub fn omega2(nops: usize) -> Signature {
        Signature::new(nops, Context::Omega2)
    }

    pub fn omega3(nops: usize) -> Signature {
        Signature::new(nops, Context::Omega3)
    }

    pub fn allows(&self, op: OpSymbol) -> bool {
        op.index >= 1 && op.index <= self.nops && self.context.allows(op.family)
    }

    /// All operation symbols of the signature, family-major then index.
    pub fn ops(&self) -> Vec<OpSymbol> {
        let mut out = Vec::new();
        for &family in self.context.families() {
            for index in 1..=self.nops {
                out.push(OpSymbol::new(family, index));
            }
        }
        out
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.context, self.nops)
    }
}

/// A set of variable indices (1-based, at most 64), used both for the
/// variables of a subtree and for sets of emphasized variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn singleton(v: usize) -> VarSet {
        VarSet::EMPTY.with(v)
    }

    /// The full set {1, ..., n}.
    pub fn full(n: usize) -> VarSet {
        assert!(n <= 64);
        if n == 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn with(self, v: usize) -> VarSet {
        assert!((1..=64).contains(&v), "variable index out of range: {v}");
        VarSet(self.0 | 1u64 << (v - 1))
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn intersect(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=64).filter(move |&v| self.contains(v))
    }

    /// All nonempty subsets of {1, ..., n} in colex order.
    pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = VarSet> {
        assert!(n < 64);
        (1u64..(1u64 << n)).map(VarSet)
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<T: IntoIterator<Item = usize>>(vars: T) -> VarSet {
        vars.into_iter().fold(VarSet::EMPTY, VarSet::with)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A rooted planar binary tree: leaves carry variable indices, internal
/// nodes carry operation symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Monomial {
    Leaf(usize),
    Node(OpSymbol, Box<Monomial>, Box<Monomial>),
}

impl Monomial {
    pub fn leaf(v: usize) -> Monomial {
        assert!(v >= 1, "variable indices are 1-based");
        Monomial::Leaf(v)
    }

    pub fn node(op: OpSymbol, left: Monomial, right: Monomial) -> Monomial {
        Monomial::Node(op, Box::new(left), Box::new(right))
    }

    /// Number of leaves.
    pub fn degree(&self) -> usize {
        match self {
            Monomial::Leaf(_) => 1,
            Monomial::Node(_, l, r) => l.degree() + r.degree(),
        }
    }

    /// Set of variable indices occurring at the leaves.
    pub fn vars(&self) -> VarSet {
        match self {
            Monomial::Leaf(v) => VarSet::singleton(*v),
            Monomial::Node(_, l, r) => l.vars().union(r.vars()),
        }
    }

    /// A monomial of degree n is polylinear when its leaves are labeled by
    /// exactly {1, ..., n}, each once.
    pub fn is_polylinear(&self) -> bool {
        let n = self.degree();
        n <= 64 && self.vars() == VarSet::full(n)
    }

    /// Replaces every node family, keeping indices; used for the pure
    /// left/right relabelings of non-emphasized subtrees.
    pub fn relabel_families(&self, family: OpFamily) -> Monomial {
        match self {
            Monomial::Leaf(v) => Monomial::Leaf(*v),
            Monomial::Node(op, l, r) => Monomial::node(
                op.with_family(family),
                l.relabel_families(family),
                r.relabel_families(family),
            ),
        }
    }

    pub fn uses_only_family(&self, family: OpFamily) -> bool {
        match self {
            Monomial::Leaf(_) => true,
            Monomial::Node(op, l, r) => {
                op.family == family && l.uses_only_family(family) && r.uses_only_family(family)
            }
        }
    }

    /// Applies a function to every node symbol.
    pub fn map_ops(&self, f: &impl Fn(OpSymbol) -> OpSymbol) -> Monomial {
        match self {
            Monomial::Leaf(v) => Monomial::Leaf(*v),
            Monomial::Node(op, l, r) => Monomial::node(f(*op), l.map_ops(f), r.map_ops(f)),
        }
    }

    /// Relabels every leaf variable through the permutation.
    pub fn relabel_vars(&self, perm: &Permutation) -> Result<Monomial, Error> {
        match self {
            Monomial::Leaf(v) => Ok(Monomial::Leaf(perm.image(*v)?)),
            Monomial::Node(op, l, r) => Ok(Monomial::node(
                *op,
                l.relabel_vars(perm)?,
                r.relabel_vars(perm)?,
            )),
        }
    }

    /// True when every node symbol is allowed by the signature.
    pub fn conforms_to(&self, sig: &Signature) -> bool {
        match self {
            Monomial::Leaf(_) => true,
            Monomial::Node(op, l, r) => {
                sig.allows(*op) && l.conforms_to(sig) && r.conforms_to(sig)
            }
        }
    }

    fn structural_cmp(&self, other: &Monomial) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match (self, other) {
            (Monomial::Leaf(a), Monomial::Leaf(b)) => a.cmp(b),
            (Monomial::Leaf(_), Monomial::Node(..)) => Ordering::Less,
            (Monomial::Node(..), Monomial::Leaf(_)) => Ordering::Greater,
            (Monomial::Node(op1, l1, r1), Monomial::Node(op2, l2, r2)) => op1
                .cmp(op2)
                .then_with(|| l1.structural_cmp(l2))
                .then_with(|| r1.structural_cmp(r2)),
        }
    }
}

/// Canonical monomial order: degree first, then preorder traversal comparing
/// node kind and labels.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.structural_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monomial::Leaf(v) => write!(f, "x{v}"),
            Monomial::Node(op, l, r) => write!(f, "({l} {op} {r})"),
        }
    }
}

/// Polylinearity status of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polylinearity {
    /// The zero polynomial: polylinear of no particular degree.
    Zero,
    /// Every monomial polylinear of this common degree.
    Degree(usize),
    No,
}

/// A finite formal sum of monomials with exact rational coefficients over a
/// fixed signature. Kept canonical: no zero coefficients, terms ordered by
/// the monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Q>,
    sig: Signature,
}

impl Polynomial {
    pub fn zero(sig: Signature) -> Polynomial {
        Polynomial {
            terms: BTreeMap::new(),
            sig,
        }
    }

    pub fn monomial(sig: Signature, m: Monomial) -> Polynomial {
        Polynomial::term(sig, m, Q::one())
    }

    pub fn term(sig: Signature, m: Monomial, c: Q) -> Polynomial {
        debug_assert!(m.conforms_to(&sig), "monomial outside signature {sig}");
        let mut p = Polynomial::zero(sig);
        p.add_term(m, c);
        p
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.sig, other.sig, "signature mismatch in addition");
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        let mut out = Polynomial::zero(self.sig);
        if c.is_zero() {
            return out;
        }
        for (m, k) in self.iter() {
            out.terms.insert(m.clone(), k * c);
        }
        out
    }

    /// Reinterprets the polynomial over another signature, failing when a
    /// monomial does not conform.
    pub fn cast(&self, sig: Signature) -> Result<Polynomial, Error> {
        for (m, _) in self.iter() {
            if !m.conforms_to(&sig) {
                return Err(Error::invalid(format!(
                    "monomial {m} does not fit signature {sig}"
                )));
            }
        }
        let mut out = Polynomial::zero(sig);
        out.terms = self.terms.clone();
        Ok(out)
    }

    pub fn polylinearity(&self) -> Polylinearity {
        let mut degree = None;
        for (m, _) in self.iter() {
            if !m.is_polylinear() {
                return Polylinearity::No;
            }
            match degree {
                None => degree = Some(m.degree()),
                Some(n) if n == m.degree() => {}
                Some(_) => return Polylinearity::No,
            }
        }
        match degree {
            None => Polylinearity::Zero,
            Some(n) => Polylinearity::Degree(n),
        }
    }

    /// Degree when the polynomial is polylinear and nonzero.
    pub fn polylinear_degree(&self) -> Result<usize, Error> {
        match self.polylinearity() {
            Polylinearity::Degree(n) => Ok(n),
            Polylinearity::Zero => Err(Error::invalid("zero polynomial has no degree")),
            Polylinearity::No => Err(Error::invalid(format!(
                "polynomial is not polylinear: {}",
                render(self)
            ))),
        }
    }

    /// Relabels every leaf variable k by its image under the permutation.
    pub fn apply_permutation(&self, perm: &Permutation) -> Result<Polynomial, Error> {
        if !self.is_zero() {
            let n = self.polylinear_degree()?;
            if perm.degree() != n {
                return Err(Error::invalid(format!(
                    "permutation degree {} does not match polynomial degree {n}",
                    perm.degree()
                )));
            }
        }
        let mut out = Polynomial::zero(self.sig);
        for (m, c) in self.iter() {
            out.add_term(m.relabel_vars(perm)?, c.clone());
        }
        Ok(out)
    }
}

/// A permutation of {1, ..., n} stored as the list of images of 1, ..., n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::invalid(format!("not a permutation: {images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation((1..=n).collect())
    }

    /// The transposition (a b) inside {1, ..., n}.
    pub fn transposition(n: usize, a: usize, b: usize) -> Permutation {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Permutation(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, v: usize) -> Result<usize, Error> {
        self.0
            .get(v.checked_sub(1).ok_or_else(|| Error::invalid("variable index 0"))?)
            .copied()
            .ok_or_else(|| {
                Error::invalid(format!(
                    "variable x{v} outside permutation domain of degree {}",
                    self.degree()
                ))
            })
    }

    /// Composition acting as self after other: (self * other)(k) = self(other(k)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation(other.0.iter().map(|&k| self.0[k - 1]).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// All n! permutations of {1, ..., n} in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(images.clone()));
            // next_permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
            images.swap(i, j);
            images[i + 1..].reverse();
        }
        out
    }
}

/// Builds a random polylinear monomial of the given degree: a random planar
/// tree shape, a shuffled leaf labeling by {1, ..., degree}, and node symbols
/// drawn from the context's families. Drives the randomized law checks.
pub fn random_polylinear_monomial<R: rand::Rng>(
    rng: &mut R,
    degree: usize,
    nops: usize,
    context: Context,
) -> Monomial {
    assert!(degree >= 1 && nops >= 1);
    let mut labels: Vec<usize> = (1..=degree).collect();
    for i in (1..labels.len()).rev() {
        let j = rng.gen_range(0..=i);
        labels.swap(i, j);
    }
    fn build<R: rand::Rng>(
        rng: &mut R,
        labels: &[usize],
        nops: usize,
        families: &[OpFamily],
    ) -> Monomial {
        if labels.len() == 1 {
            return Monomial::leaf(labels[0]);
        }
        let split = rng.gen_range(1..labels.len());
        let family = families[rng.gen_range(0..families.len())];
        let index = rng.gen_range(1..=nops);
        Monomial::node(
            OpSymbol::new(family, index),
            build(rng, &labels[..split], nops, families),
            build(rng, &labels[split..], nops, families),
        )
    }
    build(rng, &labels, nops, context.families())
}

/// Renders the canonical text of a polynomial; `parse_polynomial` of the
/// output returns the same polynomial.
pub fn render(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.iter().enumerate() {
        let mag = c.abs();
        if k == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push(' ');
        }
        out.push_str(&m.to_string());
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}
