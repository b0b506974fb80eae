//! Splitting procedures: from identities over an unsplit signature to the
//! identity systems of di-, tri- and skew-trialgebras and of their dendriform
//! counterparts.
//!
//! The driver of all constructions is a set H of emphasized variables in a
//! polylinear monomial. Walking the tree from the root, a node whose two
//! branches both contain emphasized leaves becomes a middle operation; if only
//! one branch does, the node points at it (left or right family) and the
//! other branch is relabeled pointwise (`phi`) or expanded into a sum over
//! all split families (`phi_star`).

use crate::error::Error;
use crate::terms::{
    parse_polynomial, Context, Monomial, OpFamily, OpSymbol, Polylinearity, Polynomial,
    Signature, VarSet,
};
use crate::varieties::VarietyPresentation;
use crate::Q;
use num_traits::One;
use std::fmt;

/// Which splitting is being generated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Two operations; only single emphasized variables.
    Di,
    /// Three operations; all nonempty emphasis sets.
    Tri,
    /// Skew variant: three operations, all emphasis sets, but the star
    /// expansion omits the middle operation.
    STri,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Di => "di",
            Mode::Tri => "tri",
            Mode::STri => "stri",
        }
    }

    pub fn from_name(s: &str) -> Option<Mode> {
        match s {
            "di" => Some(Mode::Di),
            "tri" => Some(Mode::Tri),
            "stri" => Some(Mode::STri),
            _ => None,
        }
    }

    /// Families substituted for a base operation inside non-emphasized
    /// subtrees of the dendriform splitting.
    pub fn star_families(self) -> &'static [OpFamily] {
        match self {
            Mode::Tri => &[OpFamily::Left, OpFamily::Right, OpFamily::Middle],
            Mode::Di | Mode::STri => &[OpFamily::Left, OpFamily::Right],
        }
    }

    pub fn output_context(self) -> Context {
        match self {
            Mode::Di => Context::Omega2,
            Mode::Tri | Mode::STri => Context::Omega3,
        }
    }

    /// Emphasis sets demanded per identity of the given degree, in colex
    /// order (singletons only for the two-operation splitting).
    pub fn emphasis_sets(self, degree: usize) -> Vec<VarSet> {
        match self {
            Mode::Di => (1..=degree).map(VarSet::singleton).collect(),
            Mode::Tri | Mode::STri => VarSet::nonempty_subsets(degree).collect(),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_emphasis(u: &Monomial, emph: VarSet) -> Result<(), Error> {
    if emph.is_empty() {
        return Err(Error::invalid("empty emphasis set"));
    }
    if !emph.is_subset_of(u.vars()) {
        return Err(Error::invalid(format!(
            "emphasis {emph} not contained in the variables of {u}"
        )));
    }
    // Any tree with distinct leaf labels splits; the polynomial-level entry
    // points additionally demand the labels {1, ..., n}.
    if u.vars().len() != u.degree() {
        return Err(Error::invalid(format!("monomial {u} repeats a variable")));
    }
    if !u.uses_only_family(OpFamily::Base) {
        return Err(Error::invalid("input monomial must use base operations only"));
    }
    Ok(())
}

/// Splits a monomial along an emphasis set; the tree shape and leaf labels
/// are unchanged, only node families are assigned.
pub fn phi(u: &Monomial, emph: VarSet) -> Result<Monomial, Error> {
    check_emphasis(u, emph)?;
    Ok(phi_rec(u, emph))
}

fn phi_rec(u: &Monomial, emph: VarSet) -> Monomial {
    match u {
        Monomial::Leaf(v) => Monomial::Leaf(*v),
        Monomial::Node(op, l, r) => {
            let hl = emph.intersect(l.vars());
            let hr = emph.intersect(r.vars());
            if !hl.is_empty() && !hr.is_empty() {
                Monomial::node(op.with_family(OpFamily::Middle), phi_rec(l, hl), phi_rec(r, hr))
            } else if hl.is_empty() {
                Monomial::node(
                    op.with_family(OpFamily::Right),
                    l.relabel_families(OpFamily::Right),
                    phi_rec(r, emph),
                )
            } else {
                Monomial::node(
                    op.with_family(OpFamily::Left),
                    phi_rec(l, emph),
                    r.relabel_families(OpFamily::Left),
                )
            }
        }
    }
}

/// Linear extension of `phi` to polynomials; output lives in the
/// three-operation splitting of the input signature.
pub fn phi_poly(f: &Polynomial, emph: VarSet) -> Result<Polynomial, Error> {
    let sig = f.signature();
    if sig.context != Context::Omega {
        return Err(Error::invalid("phi expects a polynomial over base operations"));
    }
    let out_sig = Signature::omega3(sig.nops);
    let mut out = Polynomial::zero(out_sig);
    if f.is_zero() {
        return Ok(out);
    }
    let n = f.polylinear_degree()?;
    if !emph.is_subset_of(VarSet::full(n)) {
        return Err(Error::invalid(format!("emphasis {emph} exceeds degree {n}")));
    }
    for (m, c) in f.iter() {
        out.add_term(phi(m, emph)?, c.clone());
    }
    Ok(out)
}

/// Sum over all assignments of the given families to the nodes of a tree.
fn star_expand(u: &Monomial, families: &[OpFamily]) -> Vec<Monomial> {
    match u {
        Monomial::Leaf(v) => vec![Monomial::Leaf(*v)],
        Monomial::Node(op, l, r) => {
            let ls = star_expand(l, families);
            let rs = star_expand(r, families);
            let mut out = Vec::with_capacity(families.len() * ls.len() * rs.len());
            for &family in families {
                for lm in &ls {
                    for rm in &rs {
                        out.push(Monomial::node(op.with_family(family), lm.clone(), rm.clone()));
                    }
                }
            }
            out
        }
    }
}

/// Dendriform splitting of a monomial: like `phi`, but a branch without
/// emphasized leaves expands into the sum over the mode's star families.
pub fn phi_star(u: &Monomial, emph: VarSet, mode: Mode, nops: usize) -> Result<Polynomial, Error> {
    check_emphasis(u, emph)?;
    if mode == Mode::Di && emph.len() != 1 {
        return Err(Error::invalid(format!(
            "the two-operation splitting admits single emphasized variables only, got {emph}"
        )));
    }
    let sig = Signature::new(nops, mode.output_context());
    Ok(phi_star_rec(u, emph, mode, sig))
}

fn poly_node(op: OpSymbol, sig: Signature, left: &Polynomial, right: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(sig);
    for (lm, lc) in left.iter() {
        for (rm, rc) in right.iter() {
            out.add_term(Monomial::node(op, lm.clone(), rm.clone()), lc * rc);
        }
    }
    out
}

fn star_poly(u: &Monomial, mode: Mode, sig: Signature) -> Polynomial {
    let mut out = Polynomial::zero(sig);
    for m in star_expand(u, mode.star_families()) {
        out.add_term(m, Q::one());
    }
    out
}

fn phi_star_rec(u: &Monomial, emph: VarSet, mode: Mode, sig: Signature) -> Polynomial {
    match u {
        Monomial::Leaf(v) => Polynomial::monomial(sig, Monomial::Leaf(*v)),
        Monomial::Node(op, l, r) => {
            let hl = emph.intersect(l.vars());
            let hr = emph.intersect(r.vars());
            if !hl.is_empty() && !hr.is_empty() {
                poly_node(
                    op.with_family(OpFamily::Middle),
                    sig,
                    &phi_star_rec(l, hl, mode, sig),
                    &phi_star_rec(r, hr, mode, sig),
                )
            } else if hl.is_empty() {
                poly_node(
                    op.with_family(OpFamily::Right),
                    sig,
                    &star_poly(l, mode, sig),
                    &phi_star_rec(r, emph, mode, sig),
                )
            } else {
                poly_node(
                    op.with_family(OpFamily::Left),
                    sig,
                    &phi_star_rec(l, emph, mode, sig),
                    &star_poly(r, mode, sig),
                )
            }
        }
    }
}

/// Linear extension of `phi_star` to polynomials.
pub fn phi_star_poly(f: &Polynomial, emph: VarSet, mode: Mode) -> Result<Polynomial, Error> {
    let sig = f.signature();
    if sig.context != Context::Omega {
        return Err(Error::invalid("phi_star expects a polynomial over base operations"));
    }
    let out_sig = Signature::new(sig.nops, mode.output_context());
    let mut out = Polynomial::zero(out_sig);
    if f.is_zero() {
        return Ok(out);
    }
    let n = f.polylinear_degree()?;
    if !emph.is_subset_of(VarSet::full(n)) {
        return Err(Error::invalid(format!("emphasis {emph} exceeds degree {n}")));
    }
    for (m, c) in f.iter() {
        out = out.add(&phi_star(m, emph, mode, sig.nops)?.scale(c));
    }
    Ok(out)
}

/// An identity produced by a generator, with a stable label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledIdentity {
    pub label: String,
    pub poly: Polynomial,
}

/// A dotted identity: the splitting of a source identity along one emphasis
/// set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DottedIdentity {
    pub source: String,
    pub emphasis: VarSet,
    pub poly: Polynomial,
}

/// The output of the identity-family generators: the mode's zero identities
/// (plus the vanishing families of the skew dendriform case) and one dotted
/// identity per (source identity, emphasis set) pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedIdentitySet {
    pub signature: Signature,
    pub zero: Vec<LabeledIdentity>,
    pub dotted: Vec<DottedIdentity>,
}

impl GeneratedIdentitySet {
    /// Flat view in deterministic order: zero identities, then dotted ones.
    pub fn labeled(&self) -> Vec<(String, Polynomial)> {
        let mut out = Vec::with_capacity(self.zero.len() + self.dotted.len());
        for z in &self.zero {
            out.push((z.label.clone(), z.poly.clone()));
        }
        for d in &self.dotted {
            out.push((format!("f={} H={}", d.source, d.emphasis), d.poly.clone()));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.zero.len() + self.dotted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Identity-language text: headers, then one identity per line, each
    /// preceded by a comment naming its origin.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# nops: {}\n", self.signature.nops));
        out.push_str(&format!("# context: {}\n", self.signature.context));
        for z in &self.zero {
            out.push_str(&format!("# zero: {}\n{}\n", z.label, z.poly));
        }
        for d in &self.dotted {
            out.push_str(&format!(
                "# source: f={} H={}\n{}\n",
                d.source, d.emphasis, d.poly
            ));
        }
        out
    }
}

fn parse_in(sig: Signature, text: &str) -> Polynomial {
    parse_polynomial(text, &sig).expect("builtin identity text")
}

/// The zero identities of the splitting: normal-form rules for words that
/// mix a pointing operation with a foreign family on the far side.
pub fn generate_zero_identities(nops: usize, mode: Mode) -> Vec<LabeledIdentity> {
    let sig = Signature::new(nops, mode.output_context());
    let mut out = Vec::new();
    let families: &[&str] = match mode {
        Mode::Di | Mode::STri => &["<"],
        Mode::Tri => &["<", "."],
    };
    for i in 1..=nops {
        for j in 1..=nops {
            for (k, fam) in families.iter().enumerate() {
                out.push(LabeledIdentity {
                    label: format!("z{}(i={i},j={j})", 2 * k + 1),
                    poly: parse_in(
                        sig,
                        &format!("((x1 {fam}{i} x2) >{j} x3) = ((x1 >{i} x2) >{j} x3)"),
                    ),
                });
            }
            let star: &[&str] = match mode {
                Mode::Di | Mode::STri => &[">"],
                Mode::Tri => &[">", "."],
            };
            for (k, fam) in star.iter().enumerate() {
                out.push(LabeledIdentity {
                    label: format!("z{}(i={i},j={j})", 2 * k + 2),
                    poly: parse_in(
                        sig,
                        &format!("(x1 <{i} (x2 {fam}{j} x3)) = (x1 <{i} (x2 <{j} x3))"),
                    ),
                });
            }
        }
    }
    out
}

/// The two vanishing families of the skew dendriform splitting.
fn stri_vanishing_identities(nops: usize) -> Vec<LabeledIdentity> {
    let sig = Signature::omega3(nops);
    let mut out = Vec::new();
    for i in 1..=nops {
        for j in 1..=nops {
            out.push(LabeledIdentity {
                label: format!("v1(i={i},j={j})"),
                poly: parse_in(sig, &format!("((x1 .{i} x2) >{j} x3)")),
            });
            out.push(LabeledIdentity {
                label: format!("v2(i={i},j={j})"),
                poly: parse_in(sig, &format!("(x1 <{i} (x2 .{j} x3))")),
            });
        }
    }
    out
}

fn validated_sources(v: &VarietyPresentation) -> Result<(), Error> {
    for id in &v.identities {
        match id.poly.polylinearity() {
            Polylinearity::Degree(n) if n >= 2 => {}
            Polylinearity::Degree(_) | Polylinearity::Zero => {
                return Err(Error::invalid(format!(
                    "identity `{}` must have degree at least two",
                    id.id
                )));
            }
            Polylinearity::No => {
                return Err(Error::invalid(format!(
                    "identity `{}` is not polylinear",
                    id.id
                )));
            }
        }
    }
    Ok(())
}

/// Identities of the di-/tri-/s-tri-algebras over a variety: the mode's zero
/// identities plus the splitting of every source identity along every
/// demanded emphasis set.
pub fn generate_variety_identities(
    v: &VarietyPresentation,
    mode: Mode,
) -> Result<GeneratedIdentitySet, Error> {
    validated_sources(v)?;
    let signature = Signature::new(v.nops, mode.output_context());
    let zero = generate_zero_identities(v.nops, mode);
    let mut dotted = Vec::new();
    for id in &v.identities {
        let n = id.poly.polylinear_degree()?;
        for emph in mode.emphasis_sets(n) {
            let split = phi_poly(&id.poly, emph)?;
            let poly = match mode {
                Mode::Di => split.cast(signature)?,
                Mode::Tri | Mode::STri => split,
            };
            dotted.push(DottedIdentity {
                source: id.id.clone(),
                emphasis: emph,
                poly,
            });
        }
    }
    Ok(GeneratedIdentitySet {
        signature,
        zero,
        dotted,
    })
}

/// Identities of the dendriform algebras over a variety: the starred
/// splitting of every source identity; the skew mode additionally emits its
/// two vanishing families.
pub fn generate_dendriform_identities(
    v: &VarietyPresentation,
    mode: Mode,
) -> Result<GeneratedIdentitySet, Error> {
    validated_sources(v)?;
    let signature = Signature::new(v.nops, mode.output_context());
    let zero = match mode {
        Mode::Di | Mode::Tri => Vec::new(),
        Mode::STri => stri_vanishing_identities(v.nops),
    };
    let mut dotted = Vec::new();
    for id in &v.identities {
        let n = id.poly.polylinear_degree()?;
        for emph in mode.emphasis_sets(n) {
            dotted.push(DottedIdentity {
                source: id.id.clone(),
                emphasis: emph,
                poly: phi_star_poly(&id.poly, emph, mode)?,
            });
        }
    }
    Ok(GeneratedIdentitySet {
        signature,
        zero,
        dotted,
    })
}
